"""Exact integer and mixed-modulus linear algebra.

Smith normal forms of arbitrary-precision integer matrices, canonical
invariant-factor presentations of finite abelian groups, and affine
solution sets of simultaneous congruences with mixed moduli.  Every
quotient construction and solver in the workbench sits on these
kernels.  All values are immutable after construction and all
operations are pure, so concurrent reads are safe.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "IntegerMatrix",
    "SmithDecomposition",
    "FinAbPresentation",
    "AffineSolutionSet",
    "DimensionMismatch",
    "CapExceeded",
    "smith_normal_form",
    "cokernel",
    "solve_modular_system",
    "subgroup_basis",
]


class DimensionMismatch(ValueError):
    """Shapes of a matrix, right-hand side and moduli disagree."""


class CapExceeded(RuntimeError):
    """An enumeration would exceed the configured cap."""

    def __init__(self, size, message=None):
        super().__init__(message or "enumeration of size %d exceeds cap" % size)
        self.size = size


def _xgcd(a, b):
    # returns (x, y, g) with x*a + y*b == g == gcd(a, b), g >= 0
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense arbitrary-precision integer matrix.

    `cols` is stored explicitly so zero-row matrices keep their width.
    """

    entries: tuple[tuple[int, ...], ...]
    cols: int

    def __post_init__(self):
        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionMismatch("row width %d != cols %d" % (len(row), self.cols))

    @staticmethod
    def from_rows(rows, cols=None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return IntegerMatrix(rows, cols)

    @staticmethod
    def identity(n):
        return IntegerMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @staticmethod
    def zeros(rows, cols):
        return IntegerMatrix(tuple((0,) * cols for _ in range(rows)), cols)

    @staticmethod
    def diagonal(diag):
        diag = tuple(int(d) for d in diag)
        n = len(diag)
        return IntegerMatrix(tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n)), n)

    @property
    def rows(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def transpose(self):
        if self.rows == 0:
            return IntegerMatrix(tuple(() for _ in range(self.cols)), 0)
        return IntegerMatrix(tuple(zip(*self.entries)), self.rows)

    def hstack(self, other):
        if other.rows != self.rows:
            raise DimensionMismatch("hstack row counts differ")
        return IntegerMatrix(tuple(a + b for a, b in zip(self.entries, other.entries)), self.cols + other.cols)

    def mul_vec(self, vec):
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length %d != cols %d" % (len(vec), self.cols))
        return tuple(sum(r[j] * vec[j] for j in range(self.cols)) for r in self.entries)

    def __matmul__(self, other):
        if isinstance(other, IntegerMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch("matmul shapes")
            ot = other.entries
            out = []
            for r in self.entries:
                out.append(tuple(sum(r[k] * ot[k][j] for k in range(self.cols)) for j in range(other.cols)))
            return IntegerMatrix(tuple(out), other.cols)
        return self.mul_vec(other)

    def determinant(self):
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(r) for r in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if m[i][k]), None)
                if pivot is None:
                    return 0
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


def _eye_list(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class _SnfWorker:
    """Mutable reduction state: M together with U, V and their inverses.

    Invariant after every operation: M == U @ source @ V, U @ Uinv == I,
    Vinv @ V == I.  Per-row nonzero column sets keep pivot search cheap
    on large mostly-diagonal inputs.
    """

    def __init__(self, a: IntegerMatrix):
        self.n = a.rows
        self.m = a.cols
        self.M = [list(r) for r in a.entries]
        self.U = _eye_list(self.n)
        self.Uinv = _eye_list(self.n)
        self.V = _eye_list(self.m)
        self.Vinv = _eye_list(self.m)
        self.nz = [set(j for j, v in enumerate(row) if v) for row in self.M]

    def swap_rows(self, a, b):
        if a == b:
            return
        M, U = self.M, self.U
        M[a], M[b] = M[b], M[a]
        self.nz[a], self.nz[b] = self.nz[b], self.nz[a]
        U[a], U[b] = U[b], U[a]
        for row in self.Uinv:
            row[a], row[b] = row[b], row[a]

    def addmul_row(self, dst, src, q):
        # row_dst += q*row_src; Uinv picks up the inverse column op
        if q == 0:
            return
        md, ms = self.M[dst], self.M[src]
        nzd = self.nz[dst]
        for j in self.nz[src]:
            v = md[j] + q * ms[j]
            md[j] = v
            if v:
                nzd.add(j)
            else:
                nzd.discard(j)
        ud, us = self.U[dst], self.U[src]
        for j in range(self.n):
            ud[j] += q * us[j]
        for row in self.Uinv:
            row[src] -= q * row[dst]

    def negate_row(self, a):
        ma = self.M[a]
        for j in self.nz[a]:
            ma[j] = -ma[j]
        ua = self.U[a]
        for j in range(self.n):
            ua[j] = -ua[j]
        for row in self.Uinv:
            row[a] = -row[a]

    def swap_cols(self, a, b):
        if a == b:
            return
        for i, row in enumerate(self.M):
            va, vb = row[a], row[b]
            if va or vb:
                row[a], row[b] = vb, va
                nzi = self.nz[i]
                ina, inb = a in nzi, b in nzi
                if ina != inb:
                    if ina:
                        nzi.discard(a)
                        nzi.add(b)
                    else:
                        nzi.discard(b)
                        nzi.add(a)
        for row in self.V:
            row[a], row[b] = row[b], row[a]
        vi = self.Vinv
        vi[a], vi[b] = vi[b], vi[a]

    def addmul_col(self, dst, src, q):
        # col_dst += q*col_src; Vinv picks up the inverse row op
        if q == 0:
            return
        for i, row in enumerate(self.M):
            vs = row[src]
            if vs:
                v = row[dst] + q * vs
                row[dst] = v
                if v:
                    self.nz[i].add(dst)
                else:
                    self.nz[i].discard(dst)
        for row in self.V:
            row[dst] += q * row[src]
        vs_row, vd_row = self.Vinv[src], self.Vinv[dst]
        for j in range(self.m):
            vs_row[j] -= q * vd_row[j]

    def negate_col(self, a):
        for i, row in enumerate(self.M):
            if row[a]:
                row[a] = -row[a]
        for row in self.V:
            row[a] = -row[a]
        va = self.Vinv[a]
        for j in range(self.m):
            va[j] = -va[j]


@dataclass(frozen=True)
class SmithDecomposition:
    """D == U @ source @ V with U, V unimodular, D diagonal, d1 | d2 | ...

    u_inv and v_inv are the exact integer inverses accumulated during
    reduction, so `source == u_inv @ D @ v_inv`.
    """

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix
    source: IntegerMatrix
    u_inv: IntegerMatrix
    v_inv: IntegerMatrix

    def diagonal(self):
        k = min(self.D.rows, self.D.cols)
        return tuple(self.D[i, i] for i in range(k))


def smith_normal_form(a: IntegerMatrix) -> SmithDecomposition:
    """Smith normal form with transforms.

    Deterministic: the pivot is the smallest absolute nonzero entry of
    the remaining submatrix, ties broken in row-major order.
    """
    w = _SnfWorker(a)
    n, m, M, nz = w.n, w.m, w.M, w.nz
    limit = min(n, m)
    t = 0
    while t < limit:
        best = None
        for i in range(t, n):
            row = M[i]
            for j in nz[i]:
                if j < t:
                    continue
                cand = (abs(row[j]), i, j)
                if best is None or cand < best:
                    best = cand
            if best is not None and best[0] == 1 and best[1] == i:
                break  # later rows cannot beat an abs-1 pivot found here
        if best is None:
            break
        w.swap_rows(t, best[1])
        w.swap_cols(t, best[2])
        if M[t][t] < 0:
            w.negate_row(t)
        while True:
            dirty = False
            i = 0
            while i < n:
                if i != t and M[i][t]:
                    q = M[i][t] // M[t][t]
                    w.addmul_row(i, t, -q)
                    if M[i][t]:
                        w.swap_rows(i, t)  # remainder becomes the smaller pivot
                        dirty = True
                        continue
                i += 1
            if dirty:
                continue
            j = 0
            while j < m:
                if j != t and M[t][j]:
                    q = M[t][j] // M[t][t]
                    w.addmul_col(j, t, -q)
                    if M[t][j]:
                        w.swap_cols(j, t)
                        dirty = True
                        continue
                j += 1
            if dirty:
                continue
            # row and column are clear; force the pivot to divide the rest
            p = M[t][t]
            bad = None
            for i in range(t + 1, n):
                for j in nz[i]:
                    if j > t and M[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            w.addmul_row(t, bad, 1)
        t += 1
    return SmithDecomposition(
        U=IntegerMatrix.from_rows(w.U, n),
        D=IntegerMatrix.from_rows(w.M, m),
        V=IntegerMatrix.from_rows(w.V, m),
        source=a,
        u_inv=IntegerMatrix.from_rows(w.Uinv, n),
        v_inv=IntegerMatrix.from_rows(w.Vinv, m),
    )


@dataclass(frozen=True)
class FinAbPresentation:
    """Finite abelian group in canonical invariant-factor coordinates.

    `moduli` are the nontrivial invariant factors d1 | d2 | ...; the
    trivial group has empty moduli.  `project` maps original-generator
    coordinates onto canonical coordinates and `lift` is a section of
    it: project(lift(x)) == x for every canonical x.
    """

    moduli: tuple[int, ...]
    generator_count: int
    project_matrix: tuple[tuple[int, ...], ...]
    lift_matrix: tuple[tuple[int, ...], ...]
    generator_moduli: tuple[int, ...] = ()

    @property
    def rank(self):
        return len(self.moduli)

    @property
    def order(self):
        return math.prod(self.moduli)

    @cached_property
    def np_project(self):
        return np.array(self.project_matrix, dtype=np.int64).reshape(self.rank, self.generator_count)

    @cached_property
    def np_lift(self):
        return np.array(self.lift_matrix, dtype=np.int64).reshape(self.generator_count, self.rank)

    @cached_property
    def np_moduli(self):
        return np.array(self.moduli, dtype=np.int64)

    def project(self, vec):
        if len(vec) != self.generator_count:
            raise DimensionMismatch("project expects %d coordinates" % self.generator_count)
        return tuple(
            sum(row[j] * vec[j] for j in range(self.generator_count)) % mod
            for row, mod in zip(self.project_matrix, self.moduli)
        )

    def lift(self, vec):
        if len(vec) != self.rank:
            raise DimensionMismatch("lift expects %d coordinates" % self.rank)
        out = [sum(row[a] * vec[a] for a in range(self.rank)) for row in self.lift_matrix]
        if self.generator_moduli:
            out = [x % m if m > 0 else x for x, m in zip(out, self.generator_moduli)]
        return tuple(out)

    def zero(self):
        return (0,) * self.rank

    def reduce(self, vec):
        return tuple(x % m for x, m in zip(vec, self.moduli))

    def elements(self, cap=None):
        """All canonical coordinate tuples in lexicographic order."""
        if cap is not None and self.order > cap:
            raise CapExceeded(self.order)
        return itertools.product(*(range(m) for m in self.moduli))


def _is_divisor_chain(mods):
    return all(mods[i + 1] % mods[i] == 0 for i in range(len(mods) - 1))


def _is_prime(p):
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def _rref_mod_p(rows, p):
    """Reduced row echelon form over GF(p). Returns (rref rows, pivot cols)."""
    if p == 2:
        A = (rows % 2).astype(np.uint8)
    else:
        A = (rows % p).astype(np.int64)
    nrows, ncols = A.shape
    r = 0
    pivots = []
    for c in range(ncols):
        if r >= nrows:
            break
        nzr = np.nonzero(A[r:, c])[0]
        if nzr.size == 0:
            continue
        pr = r + int(nzr[0])
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        if p != 2:
            inv = pow(int(A[r, c]), -1, p)
            A[r] = (A[r] * inv) % p
        below = A[r + 1:]
        if below.shape[0]:
            colv = below[:, c]
            mask = colv != 0
            if mask.any():
                if p == 2:
                    below[mask] ^= A[r]
                else:
                    below[mask] = (below[mask] - np.outer(colv[mask], A[r])) % p
        pivots.append(c)
        r += 1
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        above = A[:i]
        if above.shape[0]:
            colv = above[:, c]
            mask = colv != 0
            if mask.any():
                if p == 2:
                    above[mask] ^= A[i]
                else:
                    above[mask] = (above[mask] - np.outer(colv[mask], A[i])) % p
    return A[: len(pivots)].astype(np.int64), pivots


def _cokernel_mod_prime(relations, mods, p):
    g = len(mods)
    if relations.cols:
        rel = np.array(relations.entries, dtype=np.int64).T % p
        rel = np.unique(rel, axis=0)
        rref, pivots = _rref_mod_p(rel, p)
    else:
        rref, pivots = np.zeros((0, g), dtype=np.int64), []
    pivot_set = set(pivots)
    free = [j for j in range(g) if j not in pivot_set]
    proj = []
    for fcol in free:
        row = [0] * g
        row[fcol] = 1
        for i, pc in enumerate(pivots):
            row[pc] = int(-rref[i][fcol]) % p
        proj.append(tuple(row))
    lift = [tuple(1 if free[a] == r else 0 for a in range(len(free))) for r in range(g)]
    return FinAbPresentation(
        moduli=(p,) * len(free),
        generator_count=g,
        project_matrix=tuple(proj),
        lift_matrix=tuple(lift),
        generator_moduli=mods,
    )


def cokernel(relations: IntegerMatrix, generator_moduli) -> FinAbPresentation:
    """Canonical presentation of ⊕ Z/m_i modulo the relation columns.

    Each generator g_i carries the order relation m_i * g_i == 0 in
    addition to the explicit relation columns.
    """
    mods = tuple(int(x) for x in generator_moduli)
    g = len(mods)
    if relations.rows != g:
        raise DimensionMismatch("relations have %d rows for %d generators" % (relations.rows, g))
    if any(x < 1 for x in mods):
        raise ValueError("generator moduli must be >= 1")
    if g == 0:
        return FinAbPresentation((), 0, (), (), ())
    if relations.cols == 0 and _is_divisor_chain(mods):
        keep = [i for i, mi in enumerate(mods) if mi > 1]
        proj = tuple(tuple(1 if j == i else 0 for j in range(g)) for i in keep)
        lift = tuple(tuple(1 if keep[a] == r else 0 for a in range(len(keep))) for r in range(g))
        return FinAbPresentation(tuple(mods[i] for i in keep), g, proj, lift, mods)
    p = mods[0]
    if all(mi == p for mi in mods) and _is_prime(p):
        return _cokernel_mod_prime(relations, mods, p)
    comb = relations.hstack(IntegerMatrix.diagonal(mods))
    snf = smith_normal_form(comb)
    d = [snf.D[i, i] for i in range(g)]
    assert all(di >= 1 for di in d), "generator moduli guarantee full rank"
    keep = [i for i in range(g) if d[i] != 1]
    moduli = tuple(d[i] for i in keep)
    proj = tuple(snf.U.row(i) for i in keep)
    lift = tuple(tuple(snf.u_inv[r, i] for i in keep) for r in range(g))
    return FinAbPresentation(moduli, g, proj, lift, mods)


def subgroup_basis(vectors, ambient_moduli):
    """Independent generators of the subgroup of ⊕ Z/M_j the vectors span.

    Returns (generators, orders); orders form a divisor chain and the
    subgroup is the internal direct sum of the cyclic pieces, so
    enumerating all coefficient tuples hits each element exactly once.
    """
    M = tuple(int(x) for x in ambient_moduli)
    n = len(M)
    if n == 0:
        return (), ()
    seen = set()
    vecs = []
    for v in vectors:
        if len(v) != n:
            raise DimensionMismatch("subgroup vector length")
        vv = tuple(int(x) % m for x, m in zip(v, M))
        if any(vv) and vv not in seen:
            seen.add(vv)
            vecs.append(vv)
    cols = [list(v) for v in vecs]
    b = IntegerMatrix.from_rows([[c[i] for c in cols] + [M[i] if j == i else 0 for j in range(n)] for i in range(n)], len(cols) + n)
    s1 = smith_normal_form(b)
    d = [s1.D[i, i] for i in range(n)]
    assert all(di >= 1 for di in d)
    # lattice basis of span(vectors, diag(M)): C = Uinv @ diag(d)
    C = [[s1.u_inv[i, j] * d[j] for j in range(n)] for i in range(n)]
    # coordinates of diag(M) in basis C: X = diag(d)^-1 @ U @ diag(M)
    X = []
    for i in range(n):
        row = []
        for j in range(n):
            num = s1.U[i, j] * M[j]
            assert num % d[i] == 0
            row.append(num // d[i])
        X.append(row)
    s2 = smith_normal_form(IntegerMatrix.from_rows(X, n))
    gens = []
    orders = []
    for i in range(n):
        o = s2.D[i, i]
        if o > 1:
            col = tuple(sum(C[r][k] * s2.u_inv[k, i] for k in range(n)) % M[r] for r in range(n))
            gens.append(col)
            orders.append(o)
    return tuple(gens), tuple(orders)


def _echelon_mod(rows, L):
    """Echelon generating set of the row span over Z/L (span preserving)."""
    basis = {}
    stack = []
    for r in rows:
        rr = [v % L for v in r]
        if any(rr):
            stack.append(rr)
    while stack:
        v = stack.pop()
        j = next((idx for idx, val in enumerate(v) if val), None)
        if j is None:
            continue
        if j not in basis:
            vj = v[j]
            g = math.gcd(vj, L)
            k = vj // g
            if k != 1:
                u = pow(k, -1, L // g)
                w = [(u * x) % L for x in v]
                rem = [(x - k * y) % L for x, y in zip(v, w)]
                basis[j] = w
                if any(rem):
                    stack.append(rem)
            else:
                basis[j] = v
        else:
            w = basis[j]
            g0, vj = w[j], v[j]
            if vj % g0 == 0:
                q = vj // g0
                v2 = [(x - q * y) % L for x, y in zip(v, w)]
                if any(v2):
                    stack.append(v2)
            else:
                x, y, g2 = _xgcd(g0, vj)
                new = [(x * a + y * b) % L for a, b in zip(w, v)]
                basis[j] = new
                w2 = [(a - (g0 // g2) * c) % L for a, c in zip(w, new)]
                v2 = [(b - (vj // g2) * c) % L for b, c in zip(v, new)]
                if any(w2):
                    stack.append(w2)
                if any(v2):
                    stack.append(v2)
    return [basis[j] for j in sorted(basis)]


def _integer_solve_full(mat_rows, rhs, width):
    """Solve M z == rhs over Z. Returns (particular, kernel basis) or None."""
    a = IntegerMatrix.from_rows(mat_rows, width)
    s = smith_normal_form(a)
    ub = s.U.mul_vec(rhs)
    n, m = a.rows, a.cols
    k = min(n, m)
    w = [0] * m
    for i in range(n):
        d = s.D[i, i] if i < k else 0
        if d:
            if ub[i] % d:
                return None
            w[i] = ub[i] // d
        elif ub[i]:
            return None
    z0 = s.V.mul_vec(w)
    kernel = [s.V.column(j) for j in range(m) if j >= k or s.D[j, j] == 0]
    return z0, kernel


def _ambient_presentation(M):
    n = len(M)
    if _is_divisor_chain(M) and all(m > 1 for m in M):
        eye = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        return FinAbPresentation(tuple(M), n, eye, eye, tuple(M))
    return cokernel(IntegerMatrix.zeros(n, 0), M)


@dataclass(frozen=True)
class AffineSolutionSet:
    """particular + subgroup, in the coordinates of `coordinate_moduli`.

    kernel_generators are independent cyclic generators with the given
    orders, so the member count is exactly prod(kernel_orders).  An
    inconsistent system is the empty marker: particular is None.
    """

    ambient: FinAbPresentation
    coordinate_moduli: tuple[int, ...]
    particular: tuple[int, ...] | None
    kernel_generators: tuple[tuple[int, ...], ...]
    kernel_orders: tuple[int, ...]
    system: tuple | None = None

    @property
    def is_empty(self):
        return self.particular is None

    @property
    def size(self):
        return 0 if self.is_empty else math.prod(self.kernel_orders)

    def member_array(self):
        """All members as a numpy array, coefficient tuples in lex order."""
        if self.is_empty:
            return np.zeros((0, len(self.coordinate_moduli)), dtype=np.int64)
        mods = np.array(self.coordinate_moduli, dtype=np.int64)
        arr = np.array([self.particular], dtype=np.int64)
        for gen, order in zip(self.kernel_generators, self.kernel_orders):
            g = np.array(gen, dtype=np.int64)
            reps = np.arange(order, dtype=np.int64)[None, :, None] * g[None, None, :]
            arr = (arr[:, None, :] + reps).reshape(-1, len(mods)) % mods
        return arr

    def members(self, cap=None):
        """Members as sorted tuples (lexicographic in the coordinates)."""
        if cap is not None and self.size > cap:
            raise CapExceeded(self.size)
        return sorted(tuple(int(x) for x in row) for row in self.member_array())

    def contains(self, vec):
        if self.is_empty:
            return False
        n = len(self.coordinate_moduli)
        if len(vec) != n:
            raise DimensionMismatch("member length")
        diff = [(int(v) - p) % m for v, p, m in zip(vec, self.particular, self.coordinate_moduli)]
        cols = [list(g) for g in self.kernel_generators]
        rows = [[c[i] for c in cols] + [self.coordinate_moduli[i] if j == i else 0 for j in range(n)] for i in range(n)]
        return _integer_solve_full(rows, diff, len(cols) + n) is not None

    def verify_member(self, vec):
        """Substitute into the defining congruence system."""
        if self.system is None:
            raise ValueError("solution set carries no defining system")
        a_rows, b, mods = self.system
        for row, bi, mi in zip(a_rows, b, mods):
            if (sum(r * v for r, v in zip(row, vec)) - bi) % mi:
                return False
        return True


def solve_modular_system(a: IntegerMatrix, b, moduli, unknown_moduli=None) -> AffineSolutionSet:
    """Full affine solution set of A x ≡ b, row i taken modulo moduli[i].

    Unknown j ranges over Z/unknown_moduli[j]; by default every unknown
    is taken modulo lcm(moduli), which loses no solutions.  Redundant
    congruences are deduplicated by an echelon pass over Z/lcm, then
    the modulus columns are adjoined and the single integer system is
    solved through the Smith normal form.
    """
    n_eq, n_x = a.rows, a.cols
    if len(b) != n_eq or len(moduli) != n_eq:
        raise DimensionMismatch("system has %d equations, got %d rhs / %d moduli" % (n_eq, len(b), len(moduli)))
    mods = tuple(int(m) for m in moduli)
    if any(m < 1 for m in mods):
        raise ValueError("equation moduli must be >= 1")
    b = tuple(int(x) for x in b)
    L = math.lcm(*mods) if mods else 1
    if unknown_moduli is None:
        M = (L,) * n_x
    else:
        M = tuple(int(m) for m in unknown_moduli)
        if len(M) != n_x:
            raise DimensionMismatch("unknown_moduli length")
        if any(m < 1 for m in M):
            raise ValueError("unknown moduli must be >= 1")
        for i in range(n_eq):
            row = a.row(i)
            for j in range(n_x):
                if (row[j] * M[j]) % mods[i]:
                    raise ValueError("system is not well defined modulo the unknown moduli")
    system = (tuple(a.entries), b, mods)

    def full_ambient():
        eye = [tuple(1 if i == j else 0 for j in range(n_x)) for i in range(n_x)]
        gens, orders = subgroup_basis(eye, M)
        return AffineSolutionSet(_ambient_presentation(M), M, (0,) * n_x, gens, orders, system)

    if L == 1 or n_eq == 0:
        return full_ambient()
    aug = []
    for i in range(n_eq):
        s = L // mods[i]
        aug.append([(x * s) % L for x in a.row(i)] + [(b[i] * s) % L])
    ech = _echelon_mod(aug, L)
    empty = AffineSolutionSet(_ambient_presentation(M), M, None, (), (), system)
    eqs = []
    for row in ech:
        if any(row[:n_x]):
            eqs.append(row)
        elif row[n_x] % L:
            return empty
    if not eqs:
        return full_ambient()
    r = len(eqs)
    mat = [eqs[i][:n_x] + [L if j == i else 0 for j in range(r)] for i in range(r)]
    rhs = [eqs[i][n_x] for i in range(r)]
    sol = _integer_solve_full(mat, rhs, n_x + r)
    if sol is None:
        return empty
    z0, kernel = sol
    particular = tuple(z0[j] % M[j] for j in range(n_x))
    vecs = [tuple(col[j] % M[j] for j in range(n_x)) for col in kernel]
    gens, orders = subgroup_basis(vecs, M)
    out = AffineSolutionSet(_ambient_presentation(M), M, particular, gens, orders, system)
    assert out.verify_member(particular), "solver produced a non-solution"
    return out
