"""Exact linear algebra over ZZ, QQ and GF(p).

Matrices are lists of rows.  Entries are Python ints for ZZ and GF(p)
(reduced into ``[0, p)``) and ``fractions.Fraction`` for QQ.  Functions that
must know a width for matrices without rows take an explicit ``ncols``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class Ring:
    """Coefficient ring: ``Ring("ZZ")``, ``Ring("QQ")`` or ``Ring("GF", p)``."""

    __slots__ = ("kind", "p")

    def __init__(self, kind, p=None):
        kind = kind.upper()
        if kind not in ("ZZ", "QQ", "GF"):
            raise ValueError(f"unknown ring {kind!r}")
        if kind == "GF" and (p is None or p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1))):
            raise ValueError(f"GF needs a prime, got {p!r}")
        self.kind = kind
        self.p = p if kind == "GF" else None

    @classmethod
    def parse(cls, text):
        if isinstance(text, Ring):
            return text
        t = text.strip().upper().replace(" ", "")
        if t in ("Z", "ZZ"):
            return cls("ZZ")
        if t in ("Q", "QQ"):
            return cls("QQ")
        m = re.fullmatch(r"(?:GF|F)\(?(\d+)\)?", t)
        if m:
            return cls("GF", int(m.group(1)))
        raise ValueError(f"cannot parse ring {text!r}")

    @property
    def is_field(self):
        return self.kind != "ZZ"

    def __call__(self, x):
        if self.kind == "ZZ":
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"{x} is not an integer")
                return int(x.numerator)
            return int(x)
        if self.kind == "QQ":
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, a):
        if self.kind == "QQ":
            return 1 / Fraction(a)
        if self.kind == "GF":
            return pow(a, -1, self.p)
        if a in (1, -1):
            return a
        raise ZeroDivisionError(f"{a} is not a unit in ZZ")

    def __eq__(self, other):
        return isinstance(other, Ring) and (self.kind, self.p) == (other.kind, other.p)

    def __hash__(self):
        return hash((self.kind, self.p))

    def __str__(self):
        return f"GF({self.p})" if self.kind == "GF" else self.kind

    __repr__ = __str__


ZZ = Ring("ZZ")
QQ = Ring("QQ")


def GF(p):
    return Ring("GF", p)


def convert(A, ring):
    return [[ring(x) for x in row] for row in A]


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def ncols_of(A, default=0):
    return len(A[0]) if A else default


def matmul(A, B, ring=None, ncols=None):
    """``A @ B``; ``ncols`` gives the width of B when B has no rows."""
    n = ncols_of(B, ncols if ncols is not None else 0)
    out = []
    for row in A:
        acc = [0] * n
        for k, a in enumerate(row):
            if a:
                brow = B[k]
                for j in range(n):
                    b = brow[j]
                    if b:
                        acc[j] += a * b
        out.append(acc)
    if ring is not None and ring.kind == "GF":
        p = ring.p
        out = [[x % p for x in row] for row in out]
    return out


def matvec(A, v, ring=None):
    out = [sum(a * x for a, x in zip(row, v)) for row in A]
    if ring is not None and ring.kind == "GF":
        out = [x % ring.p for x in out]
    return out


def transpose(A, nrows=0):
    if not A:
        return [[] for _ in range(nrows)]
    return [list(col) for col in zip(*A)]


def is_zero(A):
    return all(x == 0 for row in A for x in row)


def determinant(A):
    """Exact determinant via fraction-free Bareiss elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass
class SmithDecomposition:
    """``A == U @ D @ V`` with U, V unimodular and D diagonal, d1 | d2 | ...

    ``Uinv`` and ``Vinv`` are the inverses, so ``Uinv @ A @ Vinv == D``.
    """

    U: list
    D: list
    V: list
    Uinv: list
    Vinv: list

    @property
    def diagonal(self):
        k = min(len(self.D), ncols_of(self.D))
        return [self.D[i][i] for i in range(k)]

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self):
        return [d for d in self.diagonal if d != 0]


def smith_normal_form(A, ncols=None) -> SmithDecomposition:
    """Smith normal form over ZZ with unimodular transforms.

    Pivots are chosen with minimal absolute value to limit coefficient growth.
    """
    m = len(A)
    n = ncols_of(A, ncols if ncols is not None else 0)
    D = [[int(x) for x in row] for row in A]
    P = identity(m)      # row transform:  P @ A @ Q == D
    Pinv = identity(m)
    Q = identity(n)
    Qinv = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        P[i], P[j] = P[j], P[i]
        for row in Pinv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in Q:
            row[i], row[j] = row[j], row[i]
        Qinv[i], Qinv[j] = Qinv[j], Qinv[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if q == 0:
            return
        rd, rs = D[dst], D[src]
        for k in range(n):
            if rs[k]:
                rd[k] += q * rs[k]
        pd, ps = P[dst], P[src]
        for k in range(m):
            if ps[k]:
                pd[k] += q * ps[k]
        for row in Pinv:
            if row[dst]:
                row[src] -= q * row[dst]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        if q == 0:
            return
        for row in D:
            if row[src]:
                row[dst] += q * row[src]
        for row in Q:
            if row[src]:
                row[dst] += q * row[src]
        qs, qd = Qinv[src], Qinv[dst]
        for k in range(n):
            if qd[k]:
                qs[k] -= q * qd[k]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                row = D[i]
                for j in range(t, n):
                    v = row[j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
                        if best[0] == 1:
                            break
                if best is not None and best[0] == 1:
                    break
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            piv = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // piv))
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // piv))
                    if D[t][j]:
                        clean = False
            if not clean:
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and t < n and D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            P[t] = [-x for x in P[t]]
            for row in Pinv:
                row[t] = -row[t]
    return SmithDecomposition(U=Pinv, D=D, V=Qinv, Uinv=P, Vinv=Q)


def hnf_rows(vectors, ncols=None):
    """Row Hermite normal form of the lattice spanned by ``vectors``.

    Pivots are positive, entries above a pivot lie in ``[0, pivot)``, and
    zero rows are dropped.
    """
    rows = [[int(x) for x in v] for v in vectors]
    n = ncols_of(rows, ncols if ncols is not None else 0)
    out = []
    r = 0
    for c in range(n):
        # gcd-combine everything at or below r in column c into row r
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[piv] = rows[piv], rows[r]
            done = True
            for i in range(r + 1, len(rows)):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][c]:
                        done = False
            if done:
                break
        if r < len(rows) and rows[r][c] != 0:
            if rows[r][c] < 0:
                rows[r] = [-a for a in rows[r]]
            for i in range(r):
                q = rows[i][c] // rows[r][c]
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
            r += 1
    out = [row for row in rows[:r]]
    return out


def hermite_kernel(A, ncols=None):
    """Basis (in row Hermite form) of the integer kernel ``{x : A x = 0}``."""
    n = ncols_of(A, ncols if ncols is not None else 0)
    if not A:
        return hnf_rows(identity(n), n)
    snf = smith_normal_form(A, n)
    r = snf.rank
    basis = [[snf.Vinv[i][j] for i in range(n)] for j in range(r, n)]
    return hnf_rows(basis, n)


def rref(A, ring, ncols=None):
    """Reduced row echelon form over a field; returns ``(R, pivot_columns)``."""
    n = ncols_of(A, ncols if ncols is not None else 0)
    M = [[ring(x) for x in row] for row in A]
    pivots = []
    r = 0
    gf = ring.kind == "GF"
    p = ring.p
    for c in range(n):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = ring.inv(M[r][c])
        if gf:
            M[r] = [x * inv % p for x in M[r]]
        else:
            M[r] = [x * inv for x in M[r]]
        prow = M[r]
        nzc = [j for j in range(c, n) if prow[j] != 0]
        for i in range(len(M)):
            if i != r:
                f = M[i][c]
                if f:
                    row = M[i]
                    if gf:
                        for j in nzc:
                            row[j] = (row[j] - f * prow[j]) % p
                    else:
                        for j in nzc:
                            row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(A, ring, ncols=None):
    if ring.kind == "ZZ":
        return smith_normal_form(A, ncols).rank
    return len(rref(A, ring, ncols)[1])


def nullspace(A, ring, ncols=None):
    """Basis of ``{x : A x = 0}`` over a field, one vector per free column."""
    n = ncols_of(A, ncols if ncols is not None else 0)
    R, pivots = rref(A, ring, n)
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [ring(0)] * n
        v[f] = ring(1)
        for row, pc in zip(R, pivots):
            v[pc] = ring(-row[f])
        basis.append(v)
    return basis


def solve_linear(A, b, ring, ncols=None):
    """One exact solution of ``A x = b`` over ``ring``, or None if there is none.

    Over ZZ integrality is decided through the Smith decomposition.
    """
    ring = Ring.parse(ring)
    m = len(A)
    if len(b) != m:
        raise ValueError("dimension mismatch between A and b")
    n = ncols_of(A, ncols if ncols is not None else 0)
    if ring.kind == "ZZ":
        snf = smith_normal_form(A, n)
        c = matvec(snf.Uinv, [int(x) for x in b])
        y = [0] * n
        diag = snf.diagonal
        for i in range(m):
            d = diag[i] if i < len(diag) else 0
            if d == 0:
                if c[i] != 0:
                    return None
            else:
                if c[i] % d:
                    return None
                y[i] = c[i] // d
        return matvec(snf.Vinv, y)
    aug = [list(row) + [b[i]] for i, row in enumerate(A)]
    R, pivots = rref(aug, ring, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [ring(0)] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return x
