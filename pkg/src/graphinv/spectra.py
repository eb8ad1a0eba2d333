"""Floating-point spectra and verification of eigenvalue bounds.

The eigensolver is a dependency-free cyclic Jacobi iteration, accurate for
the symmetric integer matrices and sizes (n <= 64) used here.  Every check
returns a report of inequality records; an inequality "holds" when
left <= right + tol, with the default tolerance scaled by the matrix
max-norm so equality cases survive roundoff.

The moment checks are the exception: they compare exact integer traces of
matrix powers against combinatorial counts, with no tolerance at all.
Two candidate identities are evaluated for the third moment, one with the
mixed term weighted 1 and triangles added, one with the mixed term
weighted 3 and triangles subtracted as the algebraic expansion of
(tr(G) - A)^3 dictates; callers see which of the two the data satisfies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph, conductance, distance_profile, triangle_count, wiener_indices
from .matrices import IntMatrix, MatrixKind, build, mat_mul, trace


def default_tol(m: IntMatrix) -> float:
    scale = max((abs(x) for row in m for x in row), default=0)
    return 1e-9 * (1 + scale)


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues in ascending order, with the tolerance used."""

    eigenvalues: tuple[float, ...]
    tol: float


@dataclass(frozen=True)
class InequalityRecord:
    name: str
    left: float
    right: float
    tol: float
    holds: bool
    applicable: bool = True

    @property
    def slack(self) -> float:
        return self.right - self.left


@dataclass(frozen=True)
class BoundReport:
    checks: tuple[InequalityRecord, ...]

    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def by_name(self, name: str) -> InequalityRecord:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _leq(name: str, left: float, right: float, tol: float) -> InequalityRecord:
    return InequalityRecord(name, left, right, tol, holds=left <= right + tol)


def _eq_exact(name: str, left: int, right: int) -> InequalityRecord:
    return InequalityRecord(name, left, right, 0.0, holds=left == right)


def eigenvalues_symmetric(m: IntMatrix, tol: float | None = None) -> Spectrum:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius mass drops below tol**2; the
    quadratic convergence of Jacobi makes that a handful of sweeps.
    """
    n = len(m)
    for i, row in enumerate(m):
        if len(row) != n:
            raise ValueError("matrix must be square")
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix not symmetric")
    if tol is None:
        tol = default_tol(m)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    a = [[float(x) for x in row] for row in m]
    if n == 1:
        return Spectrum((a[0][0],), tol)
    threshold = tol * tol
    for _sweep in range(100):
        off = 0.0
        for p in range(n - 1):
            row_p = a[p]
            for q in range(p + 1, n):
                off += 2.0 * row_p[q] * row_p[q]
        if off < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = a[p][p], a[q][q]
                a[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq
                a[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq
                a[p][q] = a[q][p] = 0.0
                for k in range(n):
                    if k != p and k != q:
                        akp, akq = a[k][p], a[k][q]
                        a[k][p] = a[p][k] = c * akp - s * akq
                        a[k][q] = a[q][k] = s * akp + c * akq
    return Spectrum(tuple(sorted(a[i][i] for i in range(n))), tol)


def _spectrum_of(g: Graph, kind: MatrixKind, profile, tol: float | None):
    m = build(g, kind, profile)
    eff = tol if tol is not None else default_tol(m)
    return eigenvalues_symmetric(m, eff).eigenvalues, eff


def check_extreme_bounds(g: Graph, tol: float | None = None) -> BoundReport:
    """The four extreme-eigenvalue inequalities relating the diagonal-shifted
    matrices to their off-diagonal parts, e.g. the smallest eigenvalue of
    tr(G) - A is at least (min transmission) - (largest eigenvalue of A)."""
    profile = distance_profile(g)
    theta, big_theta = min(profile.tr), max(profile.tr)
    delta, big_delta = min(profile.deg), max(profile.deg)
    spec_a, tol_a = _spectrum_of(g, MatrixKind.A, profile, tol)
    spec_d, tol_d = _spectrum_of(g, MatrixKind.D, profile, tol)
    spec_atr, tol_atr = _spectrum_of(g, MatrixKind.Atr, profile, tol)
    spec_ddeg, tol_ddeg = _spectrum_of(g, MatrixKind.Ddeg, profile, tol)
    t1 = max(tol_a, tol_atr)
    t2 = max(tol_d, tol_ddeg)
    return BoundReport((
        _leq("min_tr - max_eig(A) <= min_eig(Atr)",
             theta - spec_a[-1], spec_atr[0], t1),
        _leq("min_deg - max_eig(D) <= min_eig(Ddeg)",
             delta - spec_d[-1], spec_ddeg[0], t2),
        _leq("max_eig(Atr) <= max_tr - min_eig(A)",
             spec_atr[-1], big_theta - spec_a[0], t1),
        _leq("max_eig(Ddeg) <= max_deg - min_eig(D)",
             spec_ddeg[-1], big_delta - spec_d[0], t2),
    ))


def check_weyl_sandwich(g: Graph, i: int | None = None,
                        tol: float | None = None) -> BoundReport:
    """Weyl sandwich for tr(G) - A = L + R with R the diagonal of
    transmission-minus-degree: for each index (1-based),
    eig_i(L) + min(R) <= eig_i(Atr) <= eig_i(L) + max(R).

    ``i`` selects one index; None checks every index.
    """
    profile = distance_profile(g)
    n = g.n
    if i is not None and not 1 <= i <= n:
        raise ValueError(f"index must be in 1..{n}")
    r = [t - d for t, d in zip(profile.tr, profile.deg)]
    r_lo, r_hi = min(r), max(r)
    spec_l, tol_l = _spectrum_of(g, MatrixKind.L, profile, tol)
    spec_atr, tol_atr = _spectrum_of(g, MatrixKind.Atr, profile, tol)
    eff = max(tol_l, tol_atr)
    indices = range(1, n + 1) if i is None else (i,)
    checks = []
    for idx in indices:
        lam_l = spec_l[idx - 1]
        lam = spec_atr[idx - 1]
        checks.append(_leq(f"eig_{idx}(L) + min(R) <= eig_{idx}(Atr)",
                           lam_l + r_lo, lam, eff))
        checks.append(_leq(f"eig_{idx}(Atr) <= eig_{idx}(L) + max(R)",
                           lam, lam_l + r_hi, eff))
    return BoundReport(tuple(checks))


def check_lambda1_bracket(g: Graph, tol: float | None = None) -> BoundReport:
    """min(tr - deg) <= min_eig(Atr) <= average(tr - deg)."""
    profile = distance_profile(g)
    r = [t - d for t, d in zip(profile.tr, profile.deg)]
    spec_atr, eff = _spectrum_of(g, MatrixKind.Atr, profile, tol)
    lam1 = spec_atr[0]
    return BoundReport((
        _leq("min(tr - deg) <= min_eig(Atr)", min(r), lam1, eff),
        _leq("min_eig(Atr) <= mean(tr - deg)", lam1, sum(r) / g.n, eff),
    ))


def check_conductance_bracket(g: Graph, tol: float | None = None) -> BoundReport:
    """Conductance bracket for the second-smallest eigenvalue of Atr:

        phi^2 / (2 * max_deg) + min(tr - deg) < eig_2(Atr)
                                  eig_2(Atr) <= 2 * phi + max(tr - deg)

    The lower bound is strict in exact arithmetic; numerically it is
    checked with the usual slack.
    """
    if g.n < 2:
        raise ValueError("second eigenvalue needs at least two vertices")
    profile = distance_profile(g)
    r = [t - d for t, d in zip(profile.tr, profile.deg)]
    phi, _ = conductance(g)
    big_delta = max(profile.deg)
    spec_atr, eff = _spectrum_of(g, MatrixKind.Atr, profile, tol)
    lam2 = spec_atr[1]
    lower = float(phi) ** 2 / (2 * big_delta) + min(r)
    upper = 2 * float(phi) + max(r)
    return BoundReport((
        _leq("phi^2/(2*max_deg) + min(tr - deg) < eig_2(Atr)", lower, lam2, eff),
        _leq("eig_2(Atr) <= 2*phi + max(tr - deg)", lam2, upper, eff),
    ))


def check_shift_lemmas(g: Graph, tol: float | None = None) -> BoundReport:
    """Constant-diagonal shift identities.

    When every degree equals k, the spectrum of deg(G) - D is the
    reflection k - spectrum(D); when every transmission equals r, the
    spectrum of tr(G) - A is r - spectrum(A).  Each identity is checked as
    a sorted-multiset comparison and reported as not applicable when the
    relevant regularity fails.
    """
    profile = distance_profile(g)
    checks = []

    def shifted_match(name, minus_kind, base_kind, shift):
        spec_minus, t1 = _spectrum_of(g, minus_kind, profile, tol)
        spec_base, t2 = _spectrum_of(g, base_kind, profile, tol)
        mirrored = sorted(shift - lam for lam in spec_base)
        dev = max(abs(x - y) for x, y in zip(spec_minus, mirrored))
        return _leq(name, dev, 0.0, max(t1, t2))

    if len(set(profile.deg)) == 1:
        checks.append(shifted_match(
            "spectrum(Ddeg) == deg - spectrum(D)",
            MatrixKind.Ddeg, MatrixKind.D, profile.deg[0]))
    else:
        checks.append(InequalityRecord(
            "spectrum(Ddeg) == deg - spectrum(D) (not applicable)",
            0.0, 0.0, 0.0, holds=True, applicable=False))
    if len(set(profile.tr)) == 1:
        checks.append(shifted_match(
            "spectrum(Atr) == tr - spectrum(A)",
            MatrixKind.Atr, MatrixKind.A, profile.tr[0]))
    else:
        checks.append(InequalityRecord(
            "spectrum(Atr) == tr - spectrum(A) (not applicable)",
            0.0, 0.0, 0.0, holds=True, applicable=False))
    return BoundReport(tuple(checks))


THIRD_MOMENT_EXPANSION = "trace(Atr^3) == sum(tr^3) + 3*wdeg - 6*triangles"
THIRD_MOMENT_UNIT_MIXED = "trace(Atr^3) == sum(tr^3) + wdeg + 6*triangles"


def check_moments(g: Graph) -> BoundReport:
    """Exact trace identities for powers of the transmission-adjacency
    matrix, in integer arithmetic (no tolerance).

    The first two moments are unambiguous.  For the third, both candidate
    identities are evaluated (see module docstring); inspect the records
    named by THIRD_MOMENT_EXPANSION / THIRD_MOMENT_UNIT_MIXED.
    """
    profile = distance_profile(g)
    atr = build(g, MatrixKind.Atr, profile)
    sq = mat_mul(atr, atr)
    cube = mat_mul(sq, atr)
    w, wdeg = wiener_indices(g)
    edges = g.edge_count()
    triangles = triangle_count(g)
    tr2 = sum(t * t for t in profile.tr)
    tr3 = sum(t * t * t for t in profile.tr)
    return BoundReport((
        _eq_exact("trace(Atr) == wiener", trace(atr), w),
        _eq_exact("trace(Atr^2) == 2*edges + sum(tr^2)", trace(sq), 2 * edges + tr2),
        _eq_exact(THIRD_MOMENT_EXPANSION, trace(cube), tr3 + 3 * wdeg - 6 * triangles),
        _eq_exact(THIRD_MOMENT_UNIT_MIXED, trace(cube), tr3 + wdeg + 6 * triangles),
    ))
