"""The TKK Lie algebra of a Jordan algebra and its universal central extension.

Both algebras live on sl2(k) tensor J plus a weight-zero tail: the span of
inner derivations for the classical construction, and the quotient
wedge^2(J) / span{a ^ a^2} (the "brace space") for the central extension.
Structure constants are built from the bracket rules, stored densely per
ordered basis pair, and re-verified rather than trusted: antisymmetry and
the Jacobi identity are checked on all pairs/triples.
"""

from __future__ import annotations

from fractions import Fraction

from .jordan import InputError, ensure_valid, inner_derivation
from .linalg import Matrix, RowSpan, q_str, quotient, rref, zero_vector
from .report import Report

_SL2_BASIS = ("e", "f", "h")

# brackets of the standard basis: [h,e]=2e, [h,f]=-2f, [e,f]=h
_SL2_SC = {
    ("e", "f"): {"h": 1},
    ("f", "e"): {"h": -1},
    ("h", "e"): {"e": 2},
    ("e", "h"): {"e": -2},
    ("h", "f"): {"f": -2},
    ("f", "h"): {"f": 2},
    ("e", "e"): {},
    ("f", "f"): {},
    ("h", "h"): {},
}


def half_killing_sl2():
    """Half the Killing form of sl2(k), computed from the adjoint action."""
    idx = {x: i for i, x in enumerate(_SL2_BASIS)}
    ads = {}
    for x in _SL2_BASIS:
        m = [[Fraction(0)] * 3 for _ in range(3)]
        for y in _SL2_BASIS:
            for z, c in _SL2_SC[(x, y)].items():
                m[idx[z]][idx[y]] += c
        ads[x] = Matrix(3, 3, m)
    return {(x, y): Fraction((ads[x] @ ads[y]).trace(), 2)
            for x in _SL2_BASIS for y in _SL2_BASIS}


class BraceSpace:
    """wedge^2(J) modulo the span of all a ^ a^2.

    The defining span is generated, over a field of characteristic zero, by
    the trilinear polarization x^(yz) + y^(xz) + z^(xy) on basis triples;
    quotient coordinates are the non-pivot wedge coordinates of its RREF.
    """

    def __init__(self, J):
        ensure_valid(J)
        self.jordan = J
        d = J.dim
        self.pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
        self.pair_index = {p: t for t, p in enumerate(self.pairs)}
        span = RowSpan(len(self.pairs))
        for i in range(d):
            for j in range(i, d):
                for k in range(j, d):
                    row = zero_vector(len(self.pairs))
                    self._add_wedge_basis_sparse(row, i, J.table[j][k], 1)
                    self._add_wedge_basis_sparse(row, j, J.table[i][k], 1)
                    self._add_wedge_basis_sparse(row, k, J.table[i][j], 1)
                    if any(row):
                        span.insert(row)
        self.s_rows = span.basis_matrix()
        self.reps, self.projection = quotient(len(self.pairs), self.s_rows)
        self.rep_pairs = [self.pairs[t] for t in self.reps]
        # sparse brace coordinates of every ordered basis pair
        self._pair_coords = {}
        for t, (i, j) in enumerate(self.pairs):
            col = {k: self.projection.data[k][t] for k in range(self.dim)
                   if self.projection.data[k][t]}
            self._pair_coords[(i, j)] = col
            self._pair_coords[(j, i)] = {k: -c for k, c in col.items()}

    @property
    def dim(self):
        return len(self.reps)

    def _add_wedge_basis_sparse(self, row, i, sparse, scale):
        for m, c in sparse.items():
            if m == i or not c:
                continue
            if i < m:
                row[self.pair_index[(i, m)]] += scale * c
            else:
                row[self.pair_index[(m, i)]] -= scale * c

    def wedge_coords(self, u, v):
        """Coordinates of u ^ v over the wedge basis e_i ^ e_j, i < j."""
        out = [0] * len(self.pairs)
        for t, (i, j) in enumerate(self.pairs):
            out[t] = u[i] * v[j] - u[j] * v[i]
        return out

    def brace_pair(self, i, j):
        """Sparse quotient coordinates of the class of e_i ^ e_j."""
        if i == j:
            return {}
        return self._pair_coords[(i, j)]

    def brace_coords(self, u, v):
        """Quotient coordinates of the class of u ^ v."""
        out = [0] * self.dim
        for t, c in enumerate(self.wedge_coords(u, v)):
            if c:
                for r in range(self.dim):
                    p = self.projection.data[r][t]
                    if p:
                        out[r] = out[r] + c * p
        return out

    def contains_in_span(self, wedge_vec):
        """Whether a wedge vector lies in the defining span."""
        out = self.projection.apply(wedge_vec)
        return all(not x for x in out)


class TKKAlgebra:
    """Lie algebra on e(J) + f(J) + h(J) + tail, with an explicit bracket table.

    Basis indices: e(i) = i, f(i) = dim+i, h(i) = 2*dim+i, tail(k) = 3*dim+k.
    `table[(p, q)]` is the sparse coordinate dict of the bracket of basis
    elements p and q.
    """

    def __init__(self, jordan, kind, tail_dim, tail_labels, tail_degrees, kappa):
        self.jordan = jordan
        self.kind = kind
        d = jordan.dim
        self.jdim = d
        self.tail_dim = tail_dim
        self.dim = 3 * d + tail_dim
        self.kappa = kappa
        labels = []
        weights = []
        degrees = []
        for prefix, w in (("e", 2), ("f", -2), ("h", 0)):
            for i in range(d):
                labels.append(f"{prefix}({jordan.space.labels[i]})")
                weights.append(w)
                degrees.append(jordan.space.degrees[i])
        labels.extend(tail_labels)
        weights.extend([0] * tail_dim)
        degrees.extend(tail_degrees)
        self.labels = tuple(labels)
        self.weights = tuple(weights)
        self.degrees = tuple(degrees)
        self.table = {}
        self.brace = None       # set for the central extension
        self.inn_basis = None   # set for the classical TKK algebra

    def e_index(self, i):
        return i

    def f_index(self, i):
        return self.jdim + i

    def h_index(self, i):
        return 2 * self.jdim + i

    def tail_index(self, k):
        return 3 * self.jdim + k

    def basis_kind(self, p):
        d = self.jdim
        if p < d:
            return ("e", p)
        if p < 2 * d:
            return ("f", p - d)
        if p < 3 * d:
            return ("h", p - 2 * d)
        return ("tail", p - 3 * d)

    def bracket_basis(self, p, q):
        return self.table.get((p, q), {})

    def bracket(self, u, v):
        """Bracket of two dense coordinate vectors."""
        out = [0] * self.dim
        for p, up in enumerate(u):
            if not up:
                continue
            for q, vq in enumerate(v):
                if not vq:
                    continue
                c = up * vq
                for r, cr in self.table.get((p, q), {}).items():
                    out[r] = out[r] + c * cr
        return out

    def weight_block(self, w):
        return [p for p in range(self.dim) if self.weights[p] == w]

    def __repr__(self):
        return f"TKKAlgebra({self.kind} of {self.jordan.name}, dim={self.dim})"


def _scaled_into(acc, sparse, scale):
    for k, c in sparse.items():
        v = acc.get(k, 0) + scale * c
        if v:
            acc[k] = v
        elif k in acc:
            del acc[k]


def _fill_sl2_blocks(g, tail_pair_coords):
    d = g.jdim
    idxmap = {"e": g.e_index, "f": g.f_index, "h": g.h_index}
    for xt in _SL2_BASIS:
        for yt in _SL2_BASIS:
            sc = _SL2_SC[(xt, yt)]
            kap = g.kappa[(xt, yt)]
            for i in range(d):
                for j in range(d):
                    out = {}
                    prod = g.jordan.table[i][j]
                    for z, cz in sc.items():
                        zidx = idxmap[z]
                        for k, c in prod.items():
                            _scaled_into(out, {zidx(k): c}, cz)
                    if kap:
                        for k, c in tail_pair_coords(i, j).items():
                            _scaled_into(out, {g.tail_index(k): c}, kap)
                    g.table[(idxmap[xt](i), idxmap[yt](j))] = out


def _fill_tail_action(g, tail_derivation_matrix, tail_on_tail):
    """Tail elements act on e/f/h by their derivation and bracket among
    themselves; the reversed order against e/f/h is filled by antisymmetry,
    which validate_lie re-checks rather than trusts."""
    d = g.jdim
    idxmap = {"e": g.e_index, "f": g.f_index, "h": g.h_index}
    for k in range(g.tail_dim):
        der = tail_derivation_matrix(k)
        for xt in _SL2_BASIS:
            for j in range(d):
                out = {}
                for r in range(d):
                    c = der.data[r][j]
                    if c:
                        out[idxmap[xt](r)] = c
                g.table[(g.tail_index(k), idxmap[xt](j))] = out
                g.table[(idxmap[xt](j), g.tail_index(k))] = {p: -c for p, c in out.items()}
        for l in range(g.tail_dim):
            out = {g.tail_index(r): c for r, c in tail_on_tail(k, l).items() if c}
            g.table[(g.tail_index(k), g.tail_index(l))] = out


def build_sl2(J):
    """Universal-central-extension presentation: tail = the brace space."""
    ensure_valid(J)
    bs = BraceSpace(J)
    kappa = half_killing_sl2()
    tail_labels = [f"{{{J.space.labels[a]},{J.space.labels[b]}}}" for a, b in bs.rep_pairs]
    tail_degrees = [J.space.degrees[a] + J.space.degrees[b] for a, b in bs.rep_pairs]
    g = TKKAlgebra(J, "sl2", bs.dim, tail_labels, tail_degrees, kappa)
    g.brace = bs

    ders = [inner_derivation(J, _unit_vec(J.dim, a), _unit_vec(J.dim, b))
            for a, b in bs.rep_pairs]

    def tail_pair_coords(i, j):
        return bs.brace_pair(i, j)

    def tail_derivation_matrix(k):
        return ders[k]

    def tail_on_tail(k, l):
        # [{a,b},{c,d}] = {da_{a,b} c, d} + {c, da_{a,b} d}
        a_l, b_l = bs.rep_pairs[l]
        der = ders[k]
        out = {}
        dc = [der.data[r][a_l] for r in range(J.dim)]
        dd = [der.data[r][b_l] for r in range(J.dim)]
        for r, c in enumerate(dc):
            if c:
                for t, p in bs.brace_pair(r, b_l).items():
                    out[t] = out.get(t, 0) + c * p
        for r, c in enumerate(dd):
            if c:
                for t, p in bs.brace_pair(a_l, r).items():
                    out[t] = out.get(t, 0) + c * p
        return out

    _fill_sl2_blocks(g, tail_pair_coords)
    _fill_tail_action(g, tail_derivation_matrix, tail_on_tail)
    return g


def build_tkk(J):
    """Classical construction: tail = the span of inner derivations."""
    ensure_valid(J)
    d = J.dim
    ders = {}
    span_rows = []
    for a in range(d):
        for b in range(a + 1, d):
            m = inner_derivation(J, _unit_vec(d, a), _unit_vec(d, b))
            ders[(a, b)] = m
            span_rows.append([m.data[r][c] for r in range(d) for c in range(d)])
    if span_rows:
        rank, red, pivots = rref(Matrix.from_rows(span_rows))
    else:
        rank, red, pivots = 0, Matrix.zeros(0, d * d), []
    basis_rows = [red.row(r) for r in range(rank)]
    basis_mats = [Matrix(d, d, [row[r * d:(r + 1) * d] for r in range(d)])
                  for row in basis_rows]
    kappa = half_killing_sl2()

    degrees = []
    degs = J.space.degrees
    for m in basis_mats:
        shift = None
        for r in range(d):
            for c in range(d):
                if m.data[r][c]:
                    s = degs[r] - degs[c]
                    if shift is None:
                        shift = s
                    elif shift != s:
                        raise InputError("inner derivation basis is not degree-homogeneous")
        degrees.append(shift or 0)

    g = TKKAlgebra(J, "tkk", rank, [f"inn{k}" for k in range(rank)], degrees, kappa)
    g.inn_basis = basis_mats
    g._inn_rows = basis_rows
    g._inn_pivots = pivots

    def inn_coords(mat):
        flat = [mat.data[r][c] for r in range(d) for c in range(d)]
        coords = [flat[p] for p in pivots]
        resid = list(flat)
        for c, row in zip(coords, basis_rows):
            if c:
                resid = [x - c * y for x, y in zip(resid, row)]
        if any(resid):
            raise InputError("matrix outside the inner-derivation span")
        return coords

    g.inn_coords = inn_coords

    def tail_pair_coords(i, j):
        if i == j:
            return {}
        m = ders[(i, j)] if i < j else ders[(j, i)]
        coords = inn_coords(m)
        if i > j:
            coords = [-x for x in coords]
        return {k: c for k, c in enumerate(coords) if c}

    def tail_derivation_matrix(k):
        return basis_mats[k]

    def tail_on_tail(k, l):
        comm = basis_mats[k].commutator(basis_mats[l])
        return {t: c for t, c in enumerate(inn_coords(comm)) if c}

    _fill_sl2_blocks(g, tail_pair_coords)
    _fill_tail_action(g, tail_derivation_matrix, tail_on_tail)
    return g


def _unit_vec(n, i):
    v = zero_vector(n)
    v[i] = Fraction(1)
    return v


def validate_lie(g, jacobi="full", seed=0, samples=200):
    """Antisymmetry on all pairs, Jacobi on basis triples, grading compatibility."""
    rep = Report(f"lie axioms for {g.kind}({g.jordan.name})")
    n = g.dim

    ok, witness = True, ""
    for p in range(n):
        for q in range(n):
            fw = g.bracket_basis(p, q)
            bw = g.bracket_basis(q, p)
            neg = {k: -c for k, c in bw.items()}
            if fw != neg:
                ok, witness = False, f"[{g.labels[p]},{g.labels[q]}] != -[{g.labels[q]},{g.labels[p]}]"
                break
        if not ok:
            break
    rep.add("antisymmetry (all pairs)", ok, witness)

    ok, witness = True, ""
    if jacobi == "full":
        triples = ((p, q, r) for p in range(n) for q in range(n) for r in range(n))
        label = "jacobi identity (all basis triples)"
    else:
        import random
        rng = random.Random(seed)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                   for _ in range(samples))
        label = f"jacobi identity ({samples} sampled triples)"
    for (p, q, r) in triples:
        acc = {}
        for (a, b, c) in ((p, q, r), (q, r, p), (r, p, q)):
            inner = g.bracket_basis(b, c)
            for s, cs in inner.items():
                for t, ct in g.bracket_basis(a, s).items():
                    v = acc.get(t, 0) + cs * ct
                    if v:
                        acc[t] = v
                    elif t in acc:
                        del acc[t]
        if acc:
            ok = False
            witness = f"triple ({g.labels[p]},{g.labels[q]},{g.labels[r]})"
            break
    rep.add(label, ok, witness)

    ok, witness = True, ""
    for (p, q), out in g.table.items():
        for t, c in out.items():
            if not c:
                continue
            if g.weights[t] != g.weights[p] + g.weights[q] or \
               g.degrees[t] != g.degrees[p] + g.degrees[q]:
                ok = False
                witness = f"[{g.labels[p]},{g.labels[q]}] leaves the graded component"
                break
        if not ok:
            break
    rep.add("bracket adds weights and degrees", ok, witness)
    return rep


def short_grading(g):
    """Eigenspace decomposition under ad of half h(1), with block dimensions."""
    rep = Report(f"short grading of {g.kind}({g.jordan.name})")
    d = g.jdim
    h1 = [0] * g.dim
    for i, c in enumerate(g.jordan.unit):
        if c:
            h1[g.h_index(i)] = c

    ok, witness = True, ""
    for q in range(g.dim):
        basis_q = [0] * g.dim
        basis_q[q] = 1
        got = g.bracket(h1, basis_q)
        want = [g.weights[q] * x for x in basis_q]
        if got != want:
            ok, witness = False, f"ad h(1) not diagonal at {g.labels[q]}"
            break
    rep.add("ad(h(1)) acts by the weight on every basis vector", ok, witness)

    dims = {w // 2: len(g.weight_block(w)) for w in (-2, 0, 2)}
    rep.add("blocks are f(J) / h(J)+tail / e(J)",
            dims[-1] == d and dims[1] == d and dims[0] == d + g.tail_dim,
            f"dims {dims[-1]}/{dims[0]}/{dims[1]}")

    ok, witness = True, ""
    for (p, q), out in g.table.items():
        i, j = g.weights[p] // 2, g.weights[q] // 2
        if abs(i + j) > 1:
            if out:
                ok, witness = False, f"[{g.labels[p]},{g.labels[q]}] nonzero outside the grading"
                break
        else:
            for t, c in out.items():
                if c and g.weights[t] // 2 != i + j:
                    ok, witness = False, f"[{g.labels[p]},{g.labels[q]}] misplaces weight"
                    break
            if not ok:
                break
    rep.add("[G_i, G_j] inside G_{i+j}", ok, witness)
    return rep


def center_map(g_ext, g_tkk):
    """The epimorphism from the central extension onto the classical algebra.

    Identity on e/f/h, braces map to the inner derivations they name.
    Returns (matrix, kernel_basis, report); the kernel is checked central.
    """
    if g_ext.kind != "sl2" or g_tkk.kind != "tkk":
        raise InputError("center_map expects (central extension, classical TKK)")
    if g_ext.jordan is not g_tkk.jordan:
        raise InputError("the two algebras must come from the same Jordan algebra")
    rep = Report(f"central epimorphism for {g_ext.jordan.name}")
    d = g_ext.jdim
    cols = []
    for p in range(g_ext.dim):
        kind, i = g_ext.basis_kind(p)
        img = zero_vector(g_tkk.dim)
        if kind == "e":
            img[g_tkk.e_index(i)] = Fraction(1)
        elif kind == "f":
            img[g_tkk.f_index(i)] = Fraction(1)
        elif kind == "h":
            img[g_tkk.h_index(i)] = Fraction(1)
        else:
            a, b = g_ext.brace.rep_pairs[i]
            der = inner_derivation(g_ext.jordan, _unit_vec(d, a), _unit_vec(d, b))
            for k, c in enumerate(g_tkk.inn_coords(der)):
                img[g_tkk.tail_index(k)] = c
        cols.append(img)
    phi = Matrix(g_tkk.dim, g_ext.dim,
                 [[cols[p][r] for p in range(g_ext.dim)] for r in range(g_tkk.dim)])

    ok, witness = True, ""
    for p in range(g_ext.dim):
        for q in range(g_ext.dim):
            lhs = zero_vector(g_tkk.dim)
            for t, c in g_ext.bracket_basis(p, q).items():
                for r in range(g_tkk.dim):
                    if cols[t][r]:
                        lhs[r] += c * cols[t][r]
            rhs = g_tkk.bracket(cols[p], cols[q])
            if lhs != rhs:
                ok, witness = False, f"not a homomorphism at ({g_ext.labels[p]},{g_ext.labels[q]})"
                break
        if not ok:
            break
    rep.add("lie algebra homomorphism (all pairs)", ok, witness)

    rank, _, _ = rref(phi)
    rep.add("surjective", rank == g_tkk.dim, f"rank {rank} vs dim {g_tkk.dim}")

    from .linalg import kernel as _kernel
    ker = _kernel(phi)
    rep.add("kernel dimension = dim tail difference",
            ker.rows == g_ext.tail_dim - g_tkk.tail_dim,
            f"kernel dim {ker.rows}")

    ok, witness = True, ""
    for r in range(ker.rows):
        v = ker.row(r)
        for q in range(g_ext.dim):
            basis_q = [0] * g_ext.dim
            basis_q[q] = 1
            if any(g_ext.bracket(v, basis_q)):
                ok, witness = False, f"kernel vector {r} not central against {g_ext.labels[q]}"
                break
        if not ok:
            break
    rep.add("kernel is central", ok, witness)
    return phi, ker, rep


def algebra_to_dict(g):
    """JSON-ready export: labels, weights, degrees, nonzero structure constants."""
    brackets = []
    for (p, q), out in sorted(g.table.items()):
        for t, c in sorted(out.items()):
            if c:
                brackets.append([p, q, t, q_str(c)])
    return {
        "kind": g.kind,
        "jordan": g.jordan.name,
        "labels": list(g.labels),
        "weights": list(g.weights),
        "degrees": list(g.degrees),
        "brackets": brackets,
    }
