"""Rigorously truncated series and the constants they bound.

Every truncation here carries an analytic tail bound obtained by
integral comparison of monotone decreasing positive terms; no series is
cut off heuristically.  The extremum sum S_p = sum_i i |J0(j_{2i-1})|^p
uses the envelope chain |J0(j_{2i-1})| <= sqrt(2/(pi j_{2i-1}))
<= sqrt(2/(pi^2 (2i-1))), whose induced tail converges exactly when
p > 4.  zeta(2) is taken as pi^2/6 exactly; zeta(3) is summed directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bessel import _j1_zero_batch, eval_j0
from .errors import ConvergenceError, DomainError

__all__ = [
    "SeriesResult",
    "PMonotonicityReport",
    "bessel_extrema_sum",
    "zeta3",
    "hurwitz_identity_residual",
    "prop_limit_lower_bound",
    "p_monotonicity_check",
    "SERIES_TERM_CAP",
]

#: Cap on the number of summed extremum terms (each term consumes one
#: odd-indexed Bessel zero, so zero indices reach about twice this).
SERIES_TERM_CAP = 262_144

#: Below this exponent the majorant sum of i^(1-p/2) diverges.
_P_MIN = 4.0

# (x+1) c^x is decreasing once x > 1/log(1/c) - 1; with every extremum
# magnitude below 1/2 the uniform threshold is the c = 1/2 one.
_MONOTONE_THRESHOLD = 1.0 / math.log(2.0) - 1.0


@dataclass(frozen=True)
class SeriesResult:
    value: float
    tail_bound: float
    terms_used: int

    def payload(self) -> dict:
        return {
            "value": self.value,
            "tail_bound": self.tail_bound,
            "terms_used": self.terms_used,
        }


@dataclass(frozen=True)
class PMonotonicityReport:
    p_lo: float
    p_hi: float
    satisfied: bool
    worst_increase: float
    threshold: float


def _extrema_tail(n_terms: int, p: float) -> float:
    """Bound on sum_{i>N} i (2/(pi^2 (2i-1)))^(p/2) by integral comparison."""
    u = 2.0 * n_terms - 1.0
    c = (2.0 / math.pi**2) ** (0.5 * p)
    a = 0.5 * p - 2.0
    b = 0.5 * p - 1.0
    return 0.25 * c * (u**-a / a + u**-b / b)


def bessel_extrema_sum(p: float, tol: float, *,
                       max_terms: int = SERIES_TERM_CAP) -> SeriesResult:
    """Sum of i |J0(j_{2i-1})|^p with analytic tail bound below tol."""
    if not p > _P_MIN:
        raise DomainError(f"sum converges only for p > {_P_MIN:g}, got {p}")
    if not 0.0 < tol <= 1e-2:
        raise DomainError(f"tol must lie in (0, 1e-2], got {tol}")
    if _extrema_tail(max_terms, p) > tol:
        raise ConvergenceError(
            f"tail bound still above tol={tol:g} at the {max_terms}-term cap"
        )
    lo, hi = 1, max_terms
    while lo < hi:
        mid = (lo + hi) // 2
        if _extrema_tail(mid, p) <= tol:
            hi = mid
        else:
            lo = mid + 1
    n_terms = lo
    i = np.arange(1, n_terms + 1)
    roots = _j1_zero_batch(2 * i - 1)
    terms = i * np.abs(eval_j0(roots)) ** p
    value = math.fsum(terms)
    return SeriesResult(value=value, tail_bound=_extrema_tail(n_terms, p),
                        terms_used=n_terms)


def zeta3(tol: float) -> SeriesResult:
    """zeta(3) by direct summation; never fewer than 1000 terms, so the
    value sits inside (1.2020, 1.2021) at every admissible tolerance."""
    if not 0.0 < tol <= 1e-3:
        raise DomainError(f"tol must lie in (0, 1e-3], got {tol}")
    n_terms = max(1000, math.ceil(math.sqrt(0.5 / tol)))
    if n_terms > 1 << 28:
        raise ConvergenceError(f"tol={tol:g} needs more than 2^28 terms")
    i = np.arange(n_terms, 0, -1, dtype=float)
    value = float(np.sum(1.0 / (i * i * i)))
    return SeriesResult(value=value, tail_bound=0.5 / n_terms**2, terms_used=n_terms)


def _odd_cube_sum(n_terms: int) -> float:
    """sum_{i<=N} i/(2i-1)^3, chunked with reused buffers (pairwise sums)."""
    chunk = 1 << 20
    base = np.arange(chunk, dtype=float)
    ibuf = np.empty(chunk)
    ubuf = np.empty(chunk)
    wbuf = np.empty(chunk)
    partials = []
    for start in range(1, n_terms + 1, chunk):
        m = min(start + chunk, n_terms + 1) - start
        i, u, w = ibuf[:m], ubuf[:m], wbuf[:m]
        np.add(base[:m], float(start), out=i)
        np.multiply(i, 2.0, out=u)
        np.subtract(u, 1.0, out=u)
        np.multiply(u, u, out=w)
        np.multiply(w, u, out=w)
        np.divide(i, w, out=w)
        partials.append(float(np.sum(w)))
    return math.fsum(partials)


def hurwitz_identity_residual(tol: float) -> float:
    """|L - R| for L = (8/pi^6) sum_i i/(2i-1)^3 summed directly and
    R = (1/pi^6)(3 zeta(2) + (7/2) zeta(3)) with zeta(2) = pi^2/6."""
    if not 0.0 < tol <= 1e-6:
        raise DomainError(f"tol must lie in (0, 1e-6], got {tol}")
    scale = 8.0 / math.pi**6

    def tail(n: int) -> float:
        u = 2.0 * n - 1.0
        return scale * 0.25 * (1.0 / u + 0.5 / (u * u))

    n_terms = max(2, math.ceil(0.5 * (2.0 / (math.pi**6 * tol) + 1.0)))
    while tail(n_terms) > tol:
        n_terms += max(1, n_terms // 64)
        if n_terms > 1 << 28:
            raise ConvergenceError(f"tol={tol:g} needs more than 2^28 terms")
    left = scale * _odd_cube_sum(n_terms)
    right = (0.5 * math.pi**2 + 3.5 * zeta3(tol).value) / math.pi**6
    return abs(left - right)


def prop_limit_lower_bound(p: float, tol: float) -> float:
    """(1/(p+1)) (2/(3 pi^2)) / S_p, the limiting lower bound on the
    positive-to-negative Lp integral ratio along degrees 4q."""
    s = bessel_extrema_sum(p, tol)
    return (1.0 / (p + 1.0)) * (2.0 / (3.0 * math.pi**2)) / s.value


def p_monotonicity_check(p_min: float, *, span: float = 10.0,
                         samples: int = 1001) -> PMonotonicityReport:
    """Verify (p+1)|J0(j_1)|^p is decreasing on [p_min, p_min + span].

    Decrease at the largest magnitude |J0(j_1)| is sufficient for every
    index, since the magnitudes decrease and all lie below 1/2.
    """
    if p_min < _MONOTONE_THRESHOLD:
        raise DomainError(
            f"p_min must be >= 1/log(2) - 1 = {_MONOTONE_THRESHOLD:.6f}"
        )
    c = abs(eval_j0(float(_j1_zero_batch(np.array([1.0]))[0])))
    grid = np.linspace(p_min, p_min + span, samples)
    f = (grid + 1.0) * c**grid
    diffs = np.diff(f)
    return PMonotonicityReport(
        p_lo=float(p_min),
        p_hi=float(p_min + span),
        satisfied=bool(np.all(diffs < 0.0)),
        worst_increase=float(np.max(diffs)),
        threshold=1.0 / math.log(1.0 / c) - 1.0,
    )
