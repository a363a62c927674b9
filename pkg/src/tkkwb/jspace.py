"""J-spaces: representations rho of a Jordan algebra on a graded module.

Covers the two defining operator identities, the level, the extension to
the weight-zero subalgebra (braces acting by quarter-commutators), the
partition-coefficient dominance criterion, the Jordan-bimodule comparison,
and the defining relations of the universal envelope of a given level.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from pathlib import Path

from .jordan import (InputError, builtin, derivation_column, jmul, jpower,
                     load_algebra, truncated_poly)
from .linalg import (LabeledSpace, Matrix, as_q, kron, q_str, random_vector,
                     scalar_value, zero_vector)
from .multipoly import Poly
from .report import Report
from .symfun import SymPoly, dominance_coeffs, newton, partitions
from .tkk import build_sl2


class LevelError(Exception):
    """rho(1) is not an integer scalar."""


class ResourceError(Exception):
    """A symbolic computation exceeds the configured size guards."""


# symbolic dominance explodes combinatorially; beyond these use random mode
_SYMBOLIC_DIM_J = 10
_SYMBOLIC_LEVEL = 4


class JSpaceRep:
    """A linear map from a Jordan algebra into endomorphisms of a module.

    rho is one matrix per algebra basis vector, acting on column vectors
    indexed by the module basis.
    """

    def __init__(self, jordan, module, rho, name=""):
        if len(rho) != jordan.dim:
            raise InputError("need one matrix per algebra basis vector")
        m = module.dim
        for r in rho:
            if (r.rows, r.cols) != (m, m):
                raise InputError("representation matrices must be square of module size")
        self.jordan = jordan
        self.module = module
        self.rho = list(rho)
        self.name = name or f"rep on {m}-dim module over {jordan.name}"

    @property
    def mdim(self):
        return self.module.dim

    def rho_of(self, a):
        """rho extended linearly to a coordinate vector (entries may be polynomials)."""
        m = self.mdim
        out = [[0] * m for _ in range(m)]
        for i, c in enumerate(a):
            if not c:
                continue
            ri = self.rho[i]
            for r in range(m):
                row = ri.data[r]
                for s in range(m):
                    if row[s]:
                        out[r][s] = out[r][s] + c * row[s]
        return Matrix(m, m, out)

    def __repr__(self):
        return f"JSpaceRep({self.name})"


def level(rep):
    """The scalar n with rho(1) = n * id; raises LevelError otherwise."""
    c = scalar_value(rep.rho_of(rep.jordan.unit))
    if c is None:
        raise LevelError("rho(1) is not scalar")
    c = Fraction(c)
    if c.denominator != 1:
        raise LevelError(f"rho(1) is the non-integer scalar {c}")
    return int(c)


def check_jspace(rep, mode="exhaustive", samples=8, seed=0):
    """The two defining identities of a J-space.

    The square-commutation identity is nonlinear, so exhaustive mode checks
    its trilinear polarization
        [rho(x), rho(yz)] + [rho(y), rho(xz)] + [rho(z), rho(xy)] = 0
    on all basis triples; the derivation identity is already trilinear and
    is checked directly.  Random mode samples rational points instead.
    """
    J = rep.jordan
    rep_report = Report(f"j-space axioms for {rep.name}")
    d, m = J.dim, rep.mdim

    ok, witness = True, ""
    degs_J = J.space.degrees
    degs_M = rep.module.degrees
    for i in range(d):
        ri = rep.rho[i]
        for r in range(m):
            for s in range(m):
                if ri.data[r][s] and degs_M[r] != degs_M[s] + degs_J[i]:
                    ok = False
                    witness = f"rho({J.space.labels[i]}) entry ({r},{s}) breaks the grading"
                    break
            if not ok:
                break
        if not ok:
            break
    rep_report.add("rho respects the grading", ok, witness)

    def rho_sparse(sparse):
        out = Matrix.zeros(m, m)
        for k, c in sparse.items():
            out = out + rep.rho[k].scale(c)
        return out

    if mode == "exhaustive":
        ok, witness = True, ""
        for i in range(d):
            for j in range(d):
                comm = rep.rho[i].commutator(rep.rho[j])
                for k in range(d):
                    lhs = comm.commutator(rep.rho[k])
                    rhs = rho_sparse(derivation_column(J, i, j, k)).scale(4)
                    if lhs != rhs:
                        ok = False
                        witness = f"derivation identity fails at basis triple ({i},{j},{k})"
                        break
                if not ok:
                    break
            if not ok:
                break
        rep_report.add("derivation identity (all basis triples)", ok, witness)

        ok, witness = True, ""
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    acc = rep.rho[i].commutator(rho_sparse(J.table[j][k]))
                    acc = acc + rep.rho[j].commutator(rho_sparse(J.table[i][k]))
                    acc = acc + rep.rho[k].commutator(rho_sparse(J.table[i][j]))
                    if not acc.is_zero():
                        ok = False
                        witness = f"polarized square-commutation fails at ({i},{j},{k})"
                        break
                if not ok:
                    break
            if not ok:
                break
        rep_report.add("square commutation, polarized (all basis triples)", ok, witness)
    else:
        rng = random.Random(seed)
        ok, witness = True, ""
        for t in range(samples):
            a = random_vector(rng, d)
            ra = rep.rho_of(a)
            ra2 = rep.rho_of(jmul(J, a, a))
            if not ra.commutator(ra2).is_zero():
                ok, witness = False, f"[rho(a),rho(a^2)] != 0 at sample {t}"
                break
            b = random_vector(rng, d)
            c = random_vector(rng, d)
            lhs = ra.commutator(rep.rho_of(b)).commutator(rep.rho_of(c))
            der = _apply_derivation(J, a, b, c)
            if lhs != rep.rho_of(der).scale(4):
                ok, witness = False, f"derivation identity fails at sample {t}"
                break
        rep_report.add(f"axioms at {samples} random points (seed {seed})", ok, witness)
    return rep_report


def _apply_derivation(J, a, b, c):
    return [x - y for x, y in zip(jmul(J, a, jmul(J, c, b)), jmul(J, jmul(J, a, c), b))]


class G0Rep:
    """A J-space extended to the weight-zero subalgebra.

    Braces act by quarter commutators of the rho images, pushed through the
    brace-space projection; well-definedness on the defining span and the
    homomorphism property against the bracket table are verified.
    """

    def __init__(self, rep, ext, dmats, report):
        self.rep = rep
        self.ext = ext          # the central extension, for its bracket table
        self.dmats = dmats      # one matrix per brace basis element
        self.report = report

    @property
    def brace(self):
        return self.ext.brace

    def brace_matrix(self, coords):
        m = self.rep.mdim
        out = Matrix.zeros(m, m)
        items = coords.items() if isinstance(coords, dict) else enumerate(coords)
        for k, c in items:
            if c:
                out = out + self.dmats[k].scale(c)
        return out


def extend_to_g0(rep, ext=None):
    """Extend rho to the weight-zero subalgebra; braces act by (1/4)[rho, rho]."""
    J = rep.jordan
    if ext is None:
        ext = build_sl2(J)
    bs = ext.brace
    report = Report(f"weight-zero extension of {rep.name}")
    m = rep.mdim

    quarter = Fraction(1, 4)
    comm_pair = {}
    for t, (i, j) in enumerate(bs.pairs):
        comm_pair[t] = rep.rho[i].commutator(rep.rho[j]).scale(quarter)

    ok, witness = True, ""
    for r in range(bs.s_rows.rows):
        acc = Matrix.zeros(m, m)
        for t in range(len(bs.pairs)):
            c = bs.s_rows.data[r][t]
            if c:
                acc = acc + comm_pair[t].scale(c)
        if not acc.is_zero():
            ok, witness = False, f"defining-span generator {r} acts nonzero"
            break
    report.add("well-defined on the brace quotient", ok, witness)

    dmats = []
    for a, b in bs.rep_pairs:
        dmats.append(rep.rho[a].commutator(rep.rho[b]).scale(quarter))

    def phi(p):
        kind, i = ext.basis_kind(p)
        if kind == "h":
            return rep.rho[i]
        if kind == "tail":
            return dmats[i]
        raise ValueError("weight-zero indices only")

    zero_indices = [ext.h_index(i) for i in range(J.dim)] + \
                   [ext.tail_index(k) for k in range(bs.dim)]
    ok, witness = True, ""
    for p in zero_indices:
        for q in zero_indices:
            lhs = phi(p).commutator(phi(q))
            rhs = Matrix.zeros(m, m)
            for t, c in ext.bracket_basis(p, q).items():
                rhs = rhs + phi(t).scale(c)
            if lhs != rhs:
                ok, witness = False, f"bracket mismatch at ({ext.labels[p]},{ext.labels[q]})"
                break
        if not ok:
            break
    report.add("homomorphism on the weight-zero bracket table", ok, witness)
    return G0Rep(rep, ext, dmats, report)


# ---------------------------------------------------------------------------
# dominance


def dominance_operator(rep, a):
    """Sum over partitions of level+1 of sign * class size * products of
    rho at the powers of a.  Vanishes identically exactly when the module
    is the top weight space of a bounded module."""
    n = level(rep)
    coeffs = dominance_coeffs(n)
    J = rep.jordan
    powers = {}
    for k in range(1, n + 2):
        powers[k] = jpower(J, a, k)
    rhos = {k: rep.rho_of(powers[k]) for k in powers}
    m = rep.mdim
    acc = Matrix.zeros(m, m)
    for sigma, c in coeffs.items():
        prod = rhos[sigma[0]]
        for part in sigma[1:]:
            prod = prod @ rhos[part]
        acc = acc + prod.scale(c)
    return acc


def symbolic_coordinates(J):
    """A generic element of J with polynomial coordinates."""
    return Poly.variables(J.dim)


def dominance_check(rep, mode="symbolic", samples=8, seed=0):
    """Decide the partition-coefficient criterion.

    Symbolic mode expands the operator sum with polynomial coordinates for
    the generic element (guarded, since entries reach degree level+1 in
    dim J indeterminates); random mode evaluates at sampled rational points,
    where a nonzero polynomial of bounded degree vanishes with negligible
    probability.
    """
    n = level(rep)
    if n < 0:
        raise LevelError(f"level {n} is negative")
    report = Report(f"dominance of {rep.name} (level {n})")
    if mode == "symbolic":
        if rep.jordan.dim > _SYMBOLIC_DIM_J or n > _SYMBOLIC_LEVEL:
            raise ResourceError(
                f"symbolic dominance guarded to dim J <= {_SYMBOLIC_DIM_J} and "
                f"level <= {_SYMBOLIC_LEVEL}; use random mode")
        a = symbolic_coordinates(rep.jordan)
        op = dominance_operator(rep, a)
        ok = op.is_zero()
        detail = "mode=symbolic" if ok else "nonzero symbolic coefficient found"
        report.add("dominance sum vanishes", ok, detail)
    elif mode == "random":
        rng = random.Random(seed)
        ok, witness = True, ""
        for t in range(samples):
            a = random_vector(rng, rep.jordan.dim)
            if not dominance_operator(rep, a).is_zero():
                ok = False
                witness = "witness a = " + _format_element(rep.jordan, a)
                break
        report.add("dominance sum vanishes", ok,
                   witness or f"mode=random samples={samples} seed={seed}")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return report


def _format_element(J, a):
    parts = [f"{q_str(c)}*{J.space.labels[i]}" for i, c in enumerate(a) if c]
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Jordan bimodules


def check_bimodule(rep):
    """Jordan birepresentation test for a candidate half-action sigma.

    Checks the square-commutation identity and the defining quadratic
    identity through their polarizations on basis tuples, then the spectral
    constraint that sigma(1) is killed by x(x-1/2)(x-1).
    """
    J = rep.jordan
    report = Report(f"jordan bimodule axioms for {rep.name}")
    d, m = J.dim, rep.mdim
    sig = rep.rho

    def sig_sparse(sparse):
        out = Matrix.zeros(m, m)
        for k, c in sparse.items():
            out = out + sig[k].scale(c)
        return out

    ok, witness = True, ""
    for i in range(d):
        for j in range(d):
            for k in range(d):
                acc = sig[i].commutator(sig_sparse(J.table[j][k]))
                acc = acc + sig[j].commutator(sig_sparse(J.table[i][k]))
                acc = acc + sig[k].commutator(sig_sparse(J.table[i][j]))
                if not acc.is_zero():
                    ok, witness = False, f"square commutation fails at ({i},{j},{k})"
                    break
            if not ok:
                break
        if not ok:
            break
    report.add("square commutation, polarized", ok, witness)

    ok, witness = True, ""
    for x in range(d):
        for y in range(d):
            sx, sy = sig[x], sig[y]
            sxy = sig_sparse(J.table[x][y])
            for b in range(d):
                sb = sig[b]
                xyb = jmul(J, _dense(J, J.table[x][y]), _basis(d, b))
                lhs = rep.rho_of(xyb) + sx @ sb @ sy + sy @ sb @ sx
                rhs = sig_sparse(J.table[x][b]) @ sy + sig_sparse(J.table[y][b]) @ sx \
                    + sxy @ sb
                if lhs != rhs:
                    ok, witness = False, f"quadratic identity fails at (x,y,b)=({x},{y},{b})"
                    break
            if not ok:
                break
        if not ok:
            break
    report.add("quadratic identity, polarized (all basis tuples)", ok, witness)

    s1 = rep.rho_of(J.unit)
    ident = Matrix.identity(m)
    spectral = s1 @ (s1 - ident.scale(Fraction(1, 2))) @ (s1 - ident)
    report.add("sigma(1) annihilated by x(x-1/2)(x-1)", spectral.is_zero(),
               "" if spectral.is_zero() else "spectral constraint violated")
    return report


def _dense(J, sparse):
    v = zero_vector(J.dim)
    for k, c in sparse.items():
        v[k] = c
    return v


def _basis(n, i):
    v = zero_vector(n)
    v[i] = Fraction(1)
    return v


# ---------------------------------------------------------------------------
# universal envelope relations


def check_envelope_relations(rep, mode="symbolic", samples=8, seed=0):
    """The defining relations of the level-n universal envelope, as operator
    identities on the module: the scalar unit relation, polarized square
    commutation, the printed cubic rearrangement relation, and the
    partition-coefficient sum."""
    J = rep.jordan
    report = Report(f"envelope relations for {rep.name}")
    m = rep.mdim

    try:
        n = level(rep)
        report.add("rho(1) is an integer scalar", True, f"level {n}")
    except LevelError as exc:
        report.add("rho(1) is an integer scalar", False, str(exc))
        return report

    d = J.dim
    sig = rep.rho

    def rho_sparse(sparse):
        out = Matrix.zeros(m, m)
        for k, c in sparse.items():
            out = out + sig[k].scale(c)
        return out

    ok, witness = True, ""
    for i in range(d):
        for j in range(d):
            for k in range(d):
                acc = sig[i].commutator(rho_sparse(J.table[j][k]))
                acc = acc + sig[j].commutator(rho_sparse(J.table[i][k]))
                acc = acc + sig[k].commutator(rho_sparse(J.table[i][j]))
                if not acc.is_zero():
                    ok, witness = False, f"fails at ({i},{j},{k})"
                    break
            if not ok:
                break
        if not ok:
            break
    report.add("square commutation, polarized", ok, witness)

    # the cubic rearrangement relation of the envelope:
    # r(a)r(b)r(c) + r(c)r(b)r(a) - r(b)r(a)r(c) - r(c)r(a)r(b)
    #   + r(b(ac)) - r(a(bc)) = 0
    ok, witness = True, ""
    for a in range(d):
        for b in range(d):
            for c in range(d):
                ra, rb, rc = sig[a], sig[b], sig[c]
                b_ac = jmul(J, _basis(d, b), _dense(J, J.table[a][c]))
                a_bc = jmul(J, _basis(d, a), _dense(J, J.table[b][c]))
                acc = ra @ rb @ rc + rc @ rb @ ra - rb @ ra @ rc - rc @ ra @ rb
                acc = acc + rep.rho_of(b_ac) - rep.rho_of(a_bc)
                if not acc.is_zero():
                    ok, witness = False, f"fails at ({a},{b},{c})"
                    break
            if not ok:
                break
        if not ok:
            break
    report.add("cubic rearrangement relation", ok, witness)

    dom = dominance_check(rep, mode=mode, samples=samples, seed=seed)
    report.merge(dom, prefix="envelope: ")
    return report


# ---------------------------------------------------------------------------
# builtin representations


def newton_rep(n, cutoff):
    """Power-sum multiplication on symmetric polynomials, degree-truncated.

    The module is spanned by monomial symmetric polynomials in n variables
    of total degree at most `cutoff`; the algebra generator of degree l acts
    by multiplication by the l-th power sum, truncated.  Level is n.
    """
    if n < 1:
        raise InputError("need at least one variable")
    if cutoff < 0:
        raise InputError("cutoff must be >= 0")
    J = truncated_poly(cutoff)
    lams = []
    for dtot in range(cutoff + 1):
        lams.extend([lam for lam in partitions(dtot) if len(lam) <= n])
    index = {lam: i for i, lam in enumerate(lams)}
    labels = tuple("m[" + ",".join(map(str, lam)) + "]" for lam in lams)
    degrees = tuple(sum(lam) for lam in lams)
    module = LabeledSpace(labels, degrees)
    m = len(lams)

    def pad(lam):
        return tuple(lam) + (0,) * (n - len(lam))

    rho = []
    for ell in range(cutoff + 1):
        N = newton(ell, n)
        mat = [[0] * m for _ in range(m)]
        for lam in lams:
            msym = SymPoly(n, {pad(lam): 1})
            prod = N * msym
            for mu, c in prod.terms.items():
                mu_trim = tuple(p for p in mu if p)
                if sum(mu_trim) <= cutoff:
                    mat[index[mu_trim]][index[lam]] = c
        rho.append(Matrix(m, m, [[Fraction(x) for x in row] for row in mat]))
    return JSpaceRep(J, module, rho, name=f"newton-rep(n={n}, cutoff={cutoff})")


def zero_rep(J, module_dim=1):
    """The zero map on a trivial module; the unique dominant level-0 shape."""
    labels = tuple(f"m{i}" for i in range(module_dim))
    module = LabeledSpace(labels, (0,) * module_dim)
    z = Matrix.zeros(module_dim, module_dim)
    return JSpaceRep(J, module, [z] * J.dim, name=f"zero rep over {J.name}")


def regular_rep(J):
    """J acting on itself by multiplication operators; level 1.

    Satisfies the J-space identities only when all inner derivations vanish
    (the derivation identity carries a factor 4 that the multiplication
    operators do not), so this is a J-space for commutative associative J.
    """
    from .jordan import L_op
    rho = [L_op(J, _basis(J.dim, i)) for i in range(J.dim)]
    return JSpaceRep(J, J.space, rho, name=f"regular rep of {J.name}")


def doubled_regular_rep(J):
    """Twice the multiplication operators: a level-2 J-space on any Jordan
    algebra.  The derivation identity picks up exactly the needed factor,
    and the operator consequence of the Jordan identity
    2 L_a^3 - 3 L_{a^2} L_a + L_{a^3} = 0 makes it dominant."""
    from .jordan import L_op
    rho = [L_op(J, _basis(J.dim, i)).scale(Fraction(2)) for i in range(J.dim)]
    return JSpaceRep(J, J.space, rho, name=f"doubled regular rep of {J.name}")


def matrix_defining_rep(m):
    """The symmetrized matrix algebra acting on columns; level 1, dominant."""
    from .jordan import matrix_jordan
    J = matrix_jordan(m)
    labels = tuple(f"c{i + 1}" for i in range(m))
    module = LabeledSpace(labels, (0,) * m)
    rho = []
    for p in range(m):
        for q in range(m):
            mat = Matrix.zeros(m, m)
            mat.data[p][q] = Fraction(1)
            rho.append(mat)
    return JSpaceRep(J, module, rho, name=f"defining rep of M{m}(k)+")


def tensor_rep(r1, r2, name=""):
    """Tensor product of two representations over the same algebra;
    the action is rho1 x 1 + 1 x rho2, and levels add."""
    if r1.jordan is not r2.jordan:
        raise InputError("tensor factors must share the algebra")
    m1, m2 = r1.mdim, r2.mdim
    labels = tuple(f"{a}*{b}" for a in r1.module.labels for b in r2.module.labels)
    degrees = tuple(da + db for da in r1.module.degrees for db in r2.module.degrees)
    module = LabeledSpace(labels, degrees)
    i1 = Matrix.identity(m1)
    i2 = Matrix.identity(m2)
    rho = [kron(a, i2) + kron(i1, b) for a, b in zip(r1.rho, r2.rho)]
    return JSpaceRep(r1.jordan, module, rho, name or f"({r1.name}) tensor ({r2.name})")


# ---------------------------------------------------------------------------
# JSON representation format


def rep_to_dict(rep, algebra_ref=None):
    return {
        "algebra": algebra_ref or "inline",
        "module": {"labels": list(rep.module.labels),
                   "degrees": list(rep.module.degrees)},
        "rho": [[[q_str(x) for x in row] for row in mat.data] for mat in rep.rho],
    }


def _algebra_from_ref(ref, base_dir=None):
    if isinstance(ref, dict):
        from .jordan import algebra_from_dict
        return algebra_from_dict(ref)
    if not isinstance(ref, str):
        raise InputError("algebra reference must be a string or object")
    if ":" in ref and not Path(ref).exists():
        family, _, arg = ref.partition(":")
        params = {}
        if family in ("truncated-poly", "truncated_poly"):
            params["degree"] = arg
        elif family == "matrix":
            params["size"] = arg
        elif family in ("spin-factor", "spin_factor"):
            params["dim"] = arg
        else:
            raise InputError(f"unknown builtin algebra {ref!r}")
        return builtin(family, **params)
    path = Path(ref)
    if base_dir is not None and not path.is_absolute():
        path = Path(base_dir) / path
    return load_algebra(path)


def rep_from_dict(data, base_dir=None, name=""):
    try:
        J = _algebra_from_ref(data["algebra"], base_dir)
        mod = data["module"]
        module = LabeledSpace(tuple(mod["labels"]), tuple(int(x) for x in mod["degrees"]))
        mats = []
        for rows in data["rho"]:
            mats.append(Matrix(module.dim, module.dim,
                               [[as_q(x) for x in row] for row in rows]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad representation data: {exc}") from exc
    return JSpaceRep(J, module, mats, name=name or "loaded rep")


def load_rep(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read representation file {path}: {exc}") from exc
    return rep_from_dict(data, base_dir=Path(path).parent, name=str(path))
