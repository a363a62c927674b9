"""Exact dense linear algebra over the rationals.

Everything here runs on `fractions.Fraction`; there are no floats anywhere,
so ranks, kernels and quotient coordinates are exact, and equality tests
mean actual equality.  Matrices are small and dense (desk scale), entries
may also be any ring element supporting +, -, * (used for matrices of
polynomials); the elimination routines require genuine fractions.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

Q = Fraction


def as_q(x):
    """Coerce ints, 'p/q' strings and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def q_str(x):
    """Serialize a rational as 'p' or 'p/q'."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _bits(x):
    # pivot size heuristic: total bit length of numerator and denominator
    if isinstance(x, Fraction):
        return x.numerator.bit_length() + x.denominator.bit_length()
    return abs(x).bit_length()


class Matrix:
    """Dense matrix, row-major, immutable by convention."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data):
        if len(data) != rows:
            raise ValueError("row count mismatch")
        for r in data:
            if len(r) != cols:
                raise ValueError("column count mismatch")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, rows_list):
        rows_list = [list(r) for r in rows_list]
        cols = len(rows_list[0]) if rows_list else 0
        return cls(len(rows_list), cols, rows_list)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [[Q(0)] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values):
        n = len(values)
        return cls(n, n, [[values[i] if i == j else Q(0) for j in range(n)] for i in range(n)])

    def entry(self, i, j):
        return self.data[i][j]

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return list(self.data[i])

    def col(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    @property
    def entries(self):
        """Row-major flat list of entries."""
        return [x for row in self.data for x in row]

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in +")
        return Matrix(self.rows, self.cols,
                      [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in -")
        return Matrix(self.rows, self.cols,
                      [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [[-a for a in r] for r in self.data])

    def scale(self, c):
        return Matrix(self.rows, self.cols, [[c * a for a in r] for r in self.data])

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch in @")
        ot = other.transpose().data
        out = []
        for ra in self.data:
            out_row = []
            for cb in ot:
                acc = 0
                for a, b in zip(ra, cb):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Matrix(self.rows, other.cols, out)

    def apply(self, vec):
        """Matrix times column vector (a list)."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for r in self.data:
            acc = 0
            for a, v in zip(r, vec):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return out

    def commutator(self, other):
        return self @ other - other @ self

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        acc = 0
        for i in range(self.rows):
            acc = acc + self.data[i][i]
        return acc

    def is_zero(self):
        return all(not x for row in self.data for x in row)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and \
            all(a == b for ra, rb in zip(self.data, other.data) for a, b in zip(ra, rb))

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def copy_rows(self):
        return [list(r) for r in self.data]

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"

    def pretty(self):
        return "\n".join("[" + "  ".join(q_str(x) if isinstance(x, (int, Fraction)) else str(x)
                                         for x in row) + "]" for row in self.data)


def scalar_value(m):
    """Return c if m == c * identity, else None."""
    if m.rows != m.cols:
        return None
    if m.rows == 0:
        return Q(0)
    c = m.data[0][0]
    for i in range(m.rows):
        for j in range(m.cols):
            want = c if i == j else 0
            if m.data[i][j] != want:
                return None
    return c


def rref(m):
    """Reduced row echelon form.

    Returns (rank, reduced, pivot_columns).  The pivot chosen within each
    column minimizes the bit size of the entry, which keeps coefficient
    growth in check; the final RREF is the canonical one regardless.
    """
    a = [[Fraction(x) if not isinstance(x, Fraction) else x for x in row] for row in m.data]
    nrows, ncols = m.rows, m.cols
    pivots = []
    prow = 0
    for pcol in range(ncols):
        if prow >= nrows:
            break
        best = None
        for i in range(prow, nrows):
            if a[i][pcol]:
                sz = _bits(a[i][pcol])
                if best is None or sz < best[0]:
                    best = (sz, i)
        if best is None:
            continue
        i = best[1]
        if i != prow:
            a[prow], a[i] = a[i], a[prow]
        inv = 1 / a[prow][pcol]
        a[prow] = [x * inv for x in a[prow]]
        for r in range(nrows):
            if r != prow and a[r][pcol]:
                f = a[r][pcol]
                a[r] = [x - f * y for x, y in zip(a[r], a[prow])]
        pivots.append(pcol)
        prow += 1
    return prow, Matrix(nrows, ncols, a), pivots


def kernel(m):
    """Basis of the right null space, one vector per row of the result."""
    rank, red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    rows = []
    for j in free:
        v = [Q(0)] * m.cols
        v[j] = Q(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red.data[r][j]
        rows.append(v)
    return Matrix(len(rows), m.cols, rows)


def quotient(ambient_dim, subspace_rows):
    """Quotient of k^ambient_dim by the row space of subspace_rows.

    Returns (coset_reps, projection): coset_reps are the non-pivot standard
    coordinates of the RREF of the subspace, and projection maps ambient
    coordinates to quotient coordinates.  projection composed with the
    inclusion of the representatives is the identity, and projection

    annihilates every subspace row.
    """
    if subspace_rows.cols != ambient_dim:
        raise ValueError("subspace rows must have ambient_dim columns")
    rank, red, pivots = rref(subspace_rows)
    pivot_set = set(pivots)
    reps = tuple(j for j in range(ambient_dim) if j not in pivot_set)
    proj = []
    for j in reps:
        row = [Q(0)] * ambient_dim
        row[j] = Q(1)
        for r, pc in enumerate(pivots):
            row[pc] = -red.data[r][j]
        proj.append(row)
    return reps, Matrix(len(reps), ambient_dim, proj)


class RowSpan:
    """Incrementally maintained row space in reduced echelon form.

    insert() returns True when the vector enlarged the span.  Used heavily
    by closure sweeps, where thousands of candidate vectors are reduced
    against the current span.
    """

    def __init__(self, ambient_dim):
        self.ambient = ambient_dim
        self.rows = []      # reduced rows, pivot columns strictly increasing
        self.pivots = []    # pivot column per row

    @property
    def dim(self):
        return len(self.rows)

    def _reduce(self, vec):
        v = list(vec)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        return v

    def contains(self, vec):
        return not any(self._reduce(vec))

    def insert(self, vec):
        v = self._reduce(vec)
        pc = None
        for j, x in enumerate(v):
            if x:
                pc = j
                break
        if pc is None:
            return False
        inv = 1 / Fraction(v[pc]) if not isinstance(v[pc], Fraction) else 1 / v[pc]
        v = [x * inv for x in v]
        # back-eliminate to keep the basis canonical
        for i, row in enumerate(self.rows):
            c = row[pc]
            if c:
                self.rows[i] = [x - c * y for x, y in zip(row, v)]
        at = 0
        while at < len(self.pivots) and self.pivots[at] < pc:
            at += 1
        self.rows.insert(at, v)
        self.pivots.insert(at, pc)
        return True

    def basis_matrix(self):
        return Matrix(len(self.rows), self.ambient, [list(r) for r in self.rows])


@dataclass(frozen=True)
class LabeledSpace:
    """A finite-dimensional graded vector space with named basis vectors."""

    labels: tuple
    degrees: tuple

    def __post_init__(self):
        if len(self.labels) != len(self.degrees):
            raise ValueError("labels and degrees must have equal length")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be distinct")

    @property
    def dim(self):
        return len(self.labels)

    def index(self, label):
        return self.labels.index(label)

    def degrees_present(self):
        return sorted(set(self.degrees))

    def dim_at_degree(self, d):
        return sum(1 for x in self.degrees if x == d)


def zero_vector(n):
    return [Q(0)] * n


def add_scaled(acc, c, vec):
    """acc += c * vec, in place; acc is a plain list."""
    if not c:
        return acc
    for i, v in enumerate(vec):
        if v:
            acc[i] = acc[i] + c * v
    return acc


def vec_is_zero(vec):
    return all(not x for x in vec)


def kron(a, b):
    """Kronecker product of two matrices."""
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    out = [[0] * cols for _ in range(rows)]
    for i in range(a.rows):
        for j in range(a.cols):
            c = a.data[i][j]
            if not c:
                continue
            for p in range(b.rows):
                for q in range(b.cols):
                    d = b.data[p][q]
                    if d:
                        out[i * b.rows + p][j * b.cols + q] = c * d
    return Matrix(rows, cols, out)


def random_fraction(rng, num_bound=12, den_bound=6):
    """Small random nonzero-denominator rational, for sampling checks."""
    return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def random_vector(rng, n, num_bound=12, den_bound=6):
    return [random_fraction(rng, num_bound, den_bound) for _ in range(n)]


def thread_count():
    """Worker cap for parallel verification, from TKKWB_THREADS (default 1)."""
    raw = os.environ.get("TKKWB_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1
