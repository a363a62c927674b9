"""Finite-dimensional graded Jordan algebras by structure constants.

An algebra is given by a labeled graded basis, a unit vector, and the
structure-constant table e_i * e_j.  Validation checks commutativity, the
unit axiom, degree additivity and the Jordan identity (fully polarized on
basis 4-tuples when the dimension permits, by random sampling beyond).
"""

from __future__ import annotations

import json
import random
from fractions import Fraction

from .linalg import (LabeledSpace, Matrix, as_q, q_str, random_vector,
                     zero_vector)
from .report import Report

# exhaustive polarized identity costs dim^4; beyond this, sample
_EXHAUSTIVE_DIM_LIMIT = 12
_SAMPLE_COUNT = 20


class InputError(Exception):
    """Malformed algebra / representation input."""


class JordanAlgebra:
    """Commutative algebra with unit, given by a sparse multiplication table.

    table[i][j] is a dict {k: coefficient} for the product e_i * e_j.
    """

    def __init__(self, space, unit, table, name=""):
        self.space = space
        self.unit = [as_q(x) for x in unit]
        if len(self.unit) != space.dim:
            raise InputError("unit vector has wrong length")
        self.table = table
        self.name = name or "jordan algebra"
        self._validated = None

    @property
    def dim(self):
        return self.space.dim

    @property
    def degrees(self):
        return self.space.degrees

    def product_pair(self, i, j):
        """Sparse product of basis vectors e_i * e_j."""
        return self.table[i][j]

    def __repr__(self):
        return f"JordanAlgebra({self.name}, dim={self.dim})"


def jmul(J, u, v):
    """Bilinear extension of the multiplication table.

    Entries may be Fractions or any ring elements supporting + and *.
    """
    out = [0] * J.dim
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = J.table[i]
        for j, vj in enumerate(v):
            if not vj:
                continue
            c = ui * vj
            for k, ck in row[j].items():
                out[k] = out[k] + c * ck
    return out


def jpower(J, a, k):
    """Left-iterated power a^k, with a^0 the unit."""
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return list(J.unit)
    acc = list(a)
    for _ in range(k - 1):
        acc = jmul(J, a, acc)
    return acc


def L_op(J, a):
    """Matrix of the multiplication operator b -> a*b."""
    cols = [jmul(J, a, _basis_vec(J.dim, j)) for j in range(J.dim)]
    return Matrix(J.dim, J.dim, [[cols[j][i] for j in range(J.dim)] for i in range(J.dim)])


def inner_derivation(J, a, b):
    """The commutator [L_a, L_b], a derivation of J."""
    return L_op(J, a).commutator(L_op(J, b))


def derivation_column(J, i, j, k):
    """Sparse coordinates of [L_{e_i}, L_{e_j}] applied to e_k,
    via table lookups only: e_i (e_k e_j) - (e_i e_k) e_j."""
    out = {}
    for m, c in J.table[k][j].items():
        for t, c2 in J.table[i][m].items():
            out[t] = out.get(t, 0) + c * c2
    for m, c in J.table[i][k].items():
        for t, c2 in J.table[m][j].items():
            out[t] = out.get(t, 0) - c * c2
    return {t: c for t, c in out.items() if c}


def _basis_vec(n, i):
    v = zero_vector(n)
    v[i] = Fraction(1)
    return v


def validate(J, seed=0):
    """Axiom report: commutativity, unit, degree additivity, Jordan identity.

    The Jordan identity is checked through its full polarization
    ((xy)b)z + ((xz)b)y + ((yz)b)x = (xy)(bz) + (xz)(by) + (yz)(bx)
    on all basis 4-tuples (equivalent over the rationals).
    """
    rep = Report(f"jordan axioms for {J.name}")
    d = J.dim
    labels = J.space.labels

    ok = True
    witness = ""
    for i in range(d):
        for j in range(d):
            if J.table[i][j] != J.table[j][i]:
                ok, witness = False, f"e{i}*e{j} != e{j}*e{i} ({labels[i]},{labels[j]})"
                break
        if not ok:
            break
    rep.add("commutativity", ok, witness)

    ok = True
    witness = ""
    for i in range(d):
        if jmul(J, J.unit, _basis_vec(d, i)) != _basis_vec(d, i):
            ok, witness = False, f"1*{labels[i]} != {labels[i]}"
            break
    rep.add("unit axiom", ok, witness)

    degs = J.space.degrees
    ok = True
    witness = ""
    for i in range(d):
        for j in range(d):
            for k, c in J.table[i][j].items():
                if c and degs[k] != degs[i] + degs[j]:
                    ok = False
                    witness = f"deg({labels[i]}*{labels[j]}) hits degree {degs[k]} != {degs[i] + degs[j]}"
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("degree additivity", ok, witness)

    ok = True
    witness = ""
    if d <= _EXHAUSTIVE_DIM_LIMIT:
        basis = [_basis_vec(d, i) for i in range(d)]
        prods = [[J.table[i][j] for j in range(d)] for i in range(d)]

        def dense(sparse):
            v = zero_vector(d)
            for k, c in sparse.items():
                v[k] = c
            return v

        for x in range(d):
            for y in range(x, d):
                xy = dense(prods[x][y])
                for z in range(y, d):
                    xz = dense(prods[x][z])
                    yz = dense(prods[y][z])
                    for b in range(d):
                        bv = basis[b]
                        lhs = jmul(J, jmul(J, xy, bv), basis[z])
                        for u, w in ((xz, y), (yz, x)):
                            t = jmul(J, jmul(J, u, bv), basis[w])
                            lhs = [p + q for p, q in zip(lhs, t)]
                        rhs = jmul(J, xy, jmul(J, bv, basis[z]))
                        for u, w in ((xz, y), (yz, x)):
                            t = jmul(J, u, jmul(J, bv, basis[w]))
                            rhs = [p + q for p, q in zip(rhs, t)]
                        if lhs != rhs:
                            ok = False
                            witness = f"polarized identity fails at (x,y,z,b)=({x},{y},{z},{b})"
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        rep.add("jordan identity (polarized, all basis 4-tuples)", ok, witness)
    else:
        rng = random.Random(seed)
        for t in range(_SAMPLE_COUNT):
            a = random_vector(rng, d)
            b = random_vector(rng, d)
            a2 = jmul(J, a, a)
            lhs = jmul(J, jmul(J, a2, b), a)
            rhs = jmul(J, a2, jmul(J, b, a))
            if lhs != rhs:
                ok, witness = False, f"(a^2 b)a != a^2(ba) at sample {t}"
                break
        rep.add(f"jordan identity ({_SAMPLE_COUNT} random samples)", ok, witness)

    if J._validated is None:
        J._validated = rep.ok
    return rep


def ensure_valid(J):
    if J._validated is None:
        validate(J)
    if not J._validated:
        raise InputError(f"{J.name} fails the Jordan axioms")


# ---------------------------------------------------------------------------
# builtin families


def truncated_poly(D, name=None, graded=True):
    """k[t]/(t^(D+1)) with deg t^i = i; products past degree D are zero.

    graded=False keeps the same multiplication but concentrates everything
    in degree 0, for modules that carry no compatible grading.
    """
    if D < 0:
        raise InputError("degree bound must be >= 0")
    labels = tuple("1" if i == 0 else (f"t^{i}" if i > 1 else "t") for i in range(D + 1))
    degrees = tuple(range(D + 1)) if graded else (0,) * (D + 1)
    space = LabeledSpace(labels, degrees)
    table = [[({i + j: Fraction(1)} if i + j <= D else {}) for j in range(D + 1)]
             for i in range(D + 1)]
    unit = _basis_vec(D + 1, 0)
    return JordanAlgebra(space, unit, table, name or f"truncated-poly({D})")


def special_from_associative(labels, unit, assoc_table, name=None, check=True):
    """Jordan algebra a o b = (ab + ba)/2 from an associative table.

    assoc_table[i][j] is a dict {k: coeff} for the associative product; it is
    verified to be associative and unital before symmetrizing.
    """
    d = len(labels)
    if check:
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    lhs = _assoc_mul(assoc_table, _sparse_basis(i), assoc_table[j][k], d)
                    rhs = _assoc_mul(assoc_table, assoc_table[i][j], _sparse_basis(k), d)
                    if lhs != rhs:
                        raise InputError(f"input table not associative at ({i},{j},{k})")
        for i in range(d):
            got = _assoc_apply(assoc_table, unit, _basis_vec(d, i), d)
            if got != _basis_vec(d, i):
                raise InputError("input unit is not a left unit")
    table = []
    for i in range(d):
        row = []
        for j in range(d):
            half = {}
            for k, c in assoc_table[i][j].items():
                half[k] = half.get(k, Fraction(0)) + Fraction(c, 2)
            for k, c in assoc_table[j][i].items():
                half[k] = half.get(k, Fraction(0)) + Fraction(c, 2)
            row.append({k: c for k, c in half.items() if c})
        table.append(row)
    space = LabeledSpace(tuple(labels), (0,) * d)
    return JordanAlgebra(space, unit, table, name or "special jordan algebra")


def _sparse_basis(i):
    return {i: Fraction(1)}


def _assoc_mul(table, u_sparse, v_sparse, d):
    out = {}
    for i, ui in u_sparse.items():
        for j, vj in v_sparse.items():
            for k, c in table[i][j].items():
                out[k] = out.get(k, Fraction(0)) + ui * vj * c
    return {k: c for k, c in out.items() if c}


def _assoc_apply(table, u, v, d):
    out = zero_vector(d)
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, vj in enumerate(v):
            if not vj:
                continue
            for k, c in table[i][j].items():
                out[k] += ui * vj * c
    return out


def matrix_jordan(m, name=None):
    """The full matrix algebra M_m(k) symmetrized: a o b = (ab+ba)/2."""
    if m < 1:
        raise InputError("matrix size must be >= 1")
    labels = [f"E{p + 1}{q + 1}" for p in range(m) for q in range(m)]
    d = m * m

    def idx(p, q):
        return p * m + q

    assoc = [[{} for _ in range(d)] for _ in range(d)]
    for p in range(m):
        for q in range(m):
            for r in range(m):
                for s in range(m):
                    if q == r:
                        assoc[idx(p, q)][idx(r, s)] = {idx(p, s): Fraction(1)}
    unit = zero_vector(d)
    for p in range(m):
        unit[idx(p, p)] = Fraction(1)
    return special_from_associative(labels, unit, assoc, name or f"M{m}(k)+")


def spin_factor(gram, name=None):
    """k1 + V with (a1+v)(b1+w) = (ab + <v,w>)1 + aw + bv.

    gram is the symmetric matrix of the bilinear form on V.
    """
    k = len(gram)
    g = [[as_q(x) for x in row] for row in gram]
    for row in g:
        if len(row) != k:
            raise InputError("gram matrix must be square")
    for i in range(k):
        for j in range(k):
            if g[i][j] != g[j][i]:
                raise InputError("gram matrix must be symmetric")
    d = k + 1
    labels = ("1",) + tuple(f"v{i + 1}" for i in range(k))
    table = [[{} for _ in range(d)] for _ in range(d)]
    for j in range(d):
        table[0][j] = {j: Fraction(1)}
        table[j][0] = {j: Fraction(1)}
    for i in range(k):
        for j in range(k):
            table[i + 1][j + 1] = {0: g[i][j]} if g[i][j] else {}
    space = LabeledSpace(labels, (0,) * d)
    return JordanAlgebra(space, _basis_vec(d, 0), table, name or f"spin-factor({k})")


def builtin(family, **params):
    """Builtin algebra lookup used by the CLI and the JSON loader."""
    if family in ("truncated-poly", "truncated_poly"):
        return truncated_poly(int(params.get("degree", 3)))
    if family == "matrix":
        return matrix_jordan(int(params.get("size", 2)))
    if family in ("spin-factor", "spin_factor"):
        k = int(params.get("dim", 2))
        gram = [[Fraction(1) if i == j else Fraction(0) for j in range(k)] for i in range(k)]
        return spin_factor(gram)
    raise InputError(f"unknown builtin family {family!r}")


# ---------------------------------------------------------------------------
# JSON serialization: rationals as "p/q" strings


def algebra_to_dict(J):
    mult = []
    for i in range(J.dim):
        for j in range(i, J.dim):
            if J.table[i][j]:
                coords = zero_vector(J.dim)
                for k, c in J.table[i][j].items():
                    coords[k] = c
                mult.append({"i": i, "j": j, "coords": [q_str(x) for x in coords]})
    return {
        "labels": list(J.space.labels),
        "degrees": list(J.space.degrees),
        "unit": [q_str(x) for x in J.unit],
        "mult": mult,
    }


def algebra_from_dict(data, name=""):
    try:
        labels = tuple(data["labels"])
        degrees = tuple(int(x) for x in data["degrees"])
        unit = [as_q(x) for x in data["unit"]]
        entries = data["mult"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad algebra data: {exc}") from exc
    d = len(labels)
    space = LabeledSpace(labels, degrees)
    table = [[None] * d for _ in range(d)]
    for ent in entries:
        try:
            i, j = int(ent["i"]), int(ent["j"])
            coords = [as_q(x) for x in ent["coords"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad mult entry: {exc}") from exc
        if not (0 <= i < d and 0 <= j < d) or len(coords) != d:
            raise InputError(f"mult entry out of range: i={i}, j={j}")
        sparse = {k: c for k, c in enumerate(coords) if c}
        table[i][j] = sparse
        if table[j][i] is None:
            table[j][i] = dict(sparse)
    for i in range(d):
        for j in range(d):
            if table[i][j] is None:
                table[i][j] = {}
    return JordanAlgebra(space, unit, table, name or data.get("name", "loaded algebra"))


def load_algebra(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read algebra file {path}: {exc}") from exc
    return algebra_from_dict(data, name=str(path))
