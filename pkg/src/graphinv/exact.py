"""Exact integer linear algebra: Smith normal form, division-free
characteristic polynomial, determinant, and cokernel structure.

Everything here stays in plain Python integers.  Cospectrality downstream
is decided by comparing characteristic polynomial coefficients and
coinvariance by comparing invariant factors, so no floating point or
tolerance enters any census.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .matrices import IntMatrix


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors of a square integer matrix.

    ``factors`` are the positive diagonal entries of the Smith normal form
    in divisibility order (each divides the next); ``zeros`` counts the
    trailing zero diagonal entries, so ``len(factors)`` is the rank.
    """

    factors: tuple[int, ...]
    zeros: int
    n: int

    @property
    def rank(self) -> int:
        return len(self.factors)

    def diagonal(self) -> tuple[int, ...]:
        return self.factors + (0,) * self.zeros


@dataclass(frozen=True)
class IntPolynomial:
    """Monic integer polynomial, coefficients from x^degree down to x^0."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group: torsion cyclic factors (in
    divisibility order, all >= 2) plus a free rank."""

    torsion: tuple[int, ...]
    free_rank: int

    def order(self) -> int | None:
        """Group order, or None when the free part is nontrivial."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self) -> str:
        parts = [f"Z_{d}" for d in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "trivial"


def _check_square(m: IntMatrix) -> int:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("matrix must be square")
    return n


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form over the integers.

    Diagonalises with Euclidean row/column reduction, always pivoting on
    the entry of smallest nonzero absolute value (keeps intermediate
    growth tame at the sizes used here), then restores the divisibility
    chain with pairwise gcd/lcm exchanges on the diagonal.
    """
    n = _check_square(m)
    a = [list(row) for row in m]
    rank = 0
    for t in range(n):
        # Locate the minimal-magnitude nonzero entry of the trailing block.
        pi = pj = -1
        pbest = 0
        for i in range(t, n):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x:
                    if x < 0:
                        x = -x
                    if pbest == 0 or x < pbest:
                        pbest = x
                        pi, pj = i, j
        if pi < 0:
            break
        rank += 1
        if pi != t:
            a[pi], a[t] = a[t], a[pi]
        if pj != t:
            for row in a:
                row[pj], row[t] = row[t], row[pj]
        while True:
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                x = a[i][t]
                if x:
                    q = x // pivot
                    if q:
                        row_i, row_t = a[i], a[t]
                        for j in range(t, n):
                            row_i[j] -= q * row_t[j]
                    if a[i][t]:
                        # Remainder is strictly smaller: promote it.
                        a[i], a[t] = a[t], a[i]
                        dirty = True
                        break
            if dirty:
                continue
            row_t = a[t]
            pivot = row_t[t]
            for j in range(t + 1, n):
                x = row_t[j]
                if x:
                    q = x // pivot
                    if q:
                        for i in range(t, n):
                            a[i][j] -= q * a[i][t]
                    if row_t[j]:
                        for i in range(t, n):
                            a[i][j], a[i][t] = a[i][t], a[i][j]
                        dirty = True
                        break
            if not dirty:
                break
    fs = sorted(abs(a[i][i]) for i in range(rank))
    # diag(a, b) ~ diag(gcd, lcm): one forward sweep yields the chain.
    for i in range(len(fs)):
        for j in range(i + 1, len(fs)):
            if fs[j] % fs[i]:
                g = gcd(fs[i], fs[j])
                fs[i], fs[j] = g, fs[i] // g * fs[j]
    return SnfResult(tuple(fs), n - rank, n)


def charpoly(m: IntMatrix) -> IntPolynomial:
    """Characteristic polynomial det(xI - m) by the division-free vector
    recurrence: the coefficient vector of each leading principal block is
    a lower-triangular Toeplitz image of the previous one, with Toeplitz
    entries built from powers of the block applied to the new column.
    """
    n = _check_square(m)
    coeffs = [1]
    for k in range(n):
        a = m[k][k]
        row = m[k][:k]
        col = [m[i][k] for i in range(k)]
        diags = [1, -a]
        w = col
        for step in range(k):
            diags.append(-sum(r * x for r, x in zip(row, w)))
            if step + 1 < k:
                w = [sum(m[i][j] * w[j] for j in range(k)) for i in range(k)]
        new = [0] * (k + 2)
        for j, c in enumerate(coeffs):
            if c:
                for d in range(min(len(diags), k + 2 - j)):
                    new[j + d] += diags[d] * c
        coeffs = new
    return IntPolynomial(tuple(coeffs))


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = _check_square(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[i], a[k] = a[k], a[i]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def cokernel(m: IntMatrix) -> AbelianGroup:
    """Structure of Z^n modulo the column span of ``m``."""
    result = snf(m)
    return AbelianGroup(
        torsion=tuple(f for f in result.factors if f > 1),
        free_rank=result.zeros,
    )
