"""Positive zeros and extrema of P_n with bracket certificates.

Zeros z_{i,n} (i = 1..floor(n/2), ordered z_1 > z_2 > ... > 0) are
located inside the Bruns cosine brackets

    cos(i pi / (n + 1/2)) <= z_{i,n} <= cos((i - 1/2) pi / (n + 1/2)),

each of which contains exactly one zero.  Critical points x_{i,n}
(i = 1..floor((n-1)/2)) are bracketed by consecutive zeros; for odd n
the innermost extremum lives in (0, z_{floor(n/2),n}).  x = 0 is a
critical point for even n but is excluded from the positive list.

Every solve is bisection to bracket width 1e-12 followed by up to four
Newton steps that are rejected if they leave the bracket, and every
returned value carries its bracket and residual as a certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BracketError, DomainError
from .legendre import (
    DEGREE_CAP,
    eval_legendre,
    eval_legendre_derivative,
    eval_legendre_second,
    _check_degree,
    _pair_scalar,
    _pair_vector,
)

__all__ = [
    "ZeroRecord",
    "ZeroTable",
    "ExtremumRecord",
    "ExtremaTable",
    "InterlacingReport",
    "bruns_bracket",
    "legendre_zeros",
    "legendre_extrema",
    "extremum_magnitude",
    "largest_zero",
    "check_interlacing",
]

_BISECT_WIDTH = 1e-12
_NEWTON_STEPS = 4


@dataclass(frozen=True)
class ZeroRecord:
    index: int
    value: float
    bracket_lo: float
    bracket_hi: float
    residual: float


@dataclass(frozen=True)
class ZeroTable:
    """All positive zeros of P_n, ordered by decreasing abscissa."""

    n: int
    zeros: tuple[ZeroRecord, ...]

    @property
    def values(self) -> np.ndarray:
        return np.array([z.value for z in self.zeros])

    def csv_header(self) -> str:
        return "n,i,value,bracket_lo,bracket_hi,residual"

    def csv_rows(self):
        for z in self.zeros:
            yield (self.n, z.index, z.value, z.bracket_lo, z.bracket_hi, z.residual)


@dataclass(frozen=True)
class ExtremumRecord:
    index: int
    x_value: float
    y_value: float
    sign: int
    residual: float


@dataclass(frozen=True)
class ExtremaTable:
    """Positive critical points of P_n with |P_n| magnitudes, x_1 > x_2 > ..."""

    n: int
    extrema: tuple[ExtremumRecord, ...]

    @property
    def magnitudes(self) -> np.ndarray:
        return np.array([e.y_value for e in self.extrema])

    def csv_header(self) -> str:
        return "n,i,x_value,y_value,sign,residual"

    def csv_rows(self):
        for e in self.extrema:
            yield (self.n, e.index, e.x_value, e.y_value, e.sign, e.residual)


@dataclass(frozen=True)
class InterlacingReport:
    """Margins of z_{i+1} < x_i < z_i (innermost extremum against 0)."""

    n: int
    satisfied: bool
    margins: tuple[tuple[int, float, float], ...]


def bruns_bracket(i: int, n: int) -> tuple[float, float]:
    """Closed bracket (lo, hi), lo < hi, certified to contain z_{i,n}."""
    n = _check_degree(n, None)
    if not 1 <= i <= n // 2:
        raise DomainError(f"zero index {i} outside 1..{n // 2} for degree {n}")
    half = n + 0.5
    lo = math.cos(i * math.pi / half)
    hi = math.cos((i - 0.5) * math.pi / half)
    return lo, hi


def _bisect_newton(n, lo, hi, fun, dfun):
    """Vectorized bisection + guarded Newton on brackets [lo, hi].

    fun/dfun map an abscissa array to function and derivative values of
    the target whose roots are sought.  Every bracket must change sign.
    """
    a = np.asarray(lo, dtype=float).copy()
    b = np.asarray(hi, dtype=float).copy()
    fa = fun(a)
    if np.any(fa * fun(b) > 0.0):
        raise BracketError(f"bracket without sign change for degree {n}")
    while np.max(b - a) > _BISECT_WIDTH:
        mid = 0.5 * (a + b)
        fm = fun(mid)
        left = fa * fm > 0.0
        a = np.where(left, mid, a)
        fa = np.where(left, fm, fa)
        b = np.where(left, b, mid)
    x = 0.5 * (a + b)
    for _ in range(_NEWTON_STEPS):
        f = fun(x)
        df = dfun(x)
        step = np.where(df != 0.0, f / np.where(df == 0.0, 1.0, df), 0.0)
        cand = x - step
        bad = (cand <= a) | (cand >= b)
        x = np.where(bad, 0.5 * (a + b), cand)
        if np.max(np.abs(step)) < 1e-15:
            break
    return x


def _value_and_derivative(n, x):
    prev, cur = _pair_vector(n, np.asarray(x, dtype=float))
    deriv = n * (prev - x * cur) / (1.0 - x * x)
    return cur, deriv


def _scalar_pn(n: int, x: float) -> tuple[float, float]:
    """(P_n(x), P'_n(x)) with plain floats; fast path for single solves."""
    prev, cur = _pair_scalar(n, x)
    return cur, n * (prev - x * cur) / (1.0 - x * x)


def _solve_scalar(n: int, lo: float, hi: float, which: str) -> float:
    """Bisection + guarded Newton for one zero of P_n or of P'_n."""
    if which == "value":
        fun = lambda t: _scalar_pn(n, t)[0]
        dfun = lambda t: _scalar_pn(n, t)[1]
    else:
        fun = lambda t: _scalar_pn(n, t)[1]

        def dfun(t):
            p, dp = _scalar_pn(n, t)
            return (2.0 * t * dp - n * (n + 1) * p) / (1.0 - t * t)

    fa = fun(lo)
    if fa * fun(hi) > 0.0:
        raise BracketError(f"bracket without sign change for degree {n}")
    a, b = lo, hi
    while b - a > _BISECT_WIDTH:
        mid = 0.5 * (a + b)
        fm = fun(mid)
        if fa * fm > 0.0:
            a, fa = mid, fm
        else:
            b = mid
    x = 0.5 * (a + b)
    for _ in range(_NEWTON_STEPS):
        df = dfun(x)
        if df == 0.0:
            break
        step = fun(x) / df
        cand = x - step
        x = cand if a < cand < b else 0.5 * (a + b)
        if abs(step) < 1e-15:
            break
    return x


@lru_cache(maxsize=256)
def _zero_table(n: int, degree_cap: int | None) -> ZeroTable:
    n = _check_degree(n, degree_cap)
    if n < 1:
        raise DomainError("zeros require n >= 1")
    m = n // 2
    if m == 0:
        return ZeroTable(n=n, zeros=())
    idx = np.arange(1, m + 1)
    half = n + 0.5
    lo = np.cos(idx * math.pi / half)
    hi = np.cos((idx - 0.5) * math.pi / half)

    def f(x):
        return _value_and_derivative(n, x)[0]

    def df(x):
        return _value_and_derivative(n, x)[1]

    roots = _bisect_newton(n, lo, hi, f, df)
    residuals = np.abs(f(roots))
    records = tuple(
        ZeroRecord(int(i), float(r), float(a), float(b), float(res))
        for i, r, a, b, res in zip(idx, roots, lo, hi, residuals)
    )
    return ZeroTable(n=n, zeros=records)


def legendre_zeros(n: int, *, degree_cap: int | None = None) -> ZeroTable:
    """Certified table of the floor(n/2) positive zeros of P_n."""
    return _zero_table(int(n), degree_cap)


def largest_zero(n: int, *, degree_cap: int | None = None) -> float:
    """z_{1,n}; for n = 1 the single zero of P_1 sits at 0."""
    table = legendre_zeros(n, degree_cap=degree_cap)
    return table.zeros[0].value if table.zeros else 0.0


def _extrema_from_brackets(n, lo, hi, indices):
    def f(x):
        return _value_and_derivative(n, x)[1]

    def df(x):
        return eval_legendre_second(n, x)

    xs = _bisect_newton(n, lo, hi, f, df)
    vals = eval_legendre(n, xs)
    residuals = np.abs(f(xs))
    records = []
    for i, x, v, res in zip(indices, xs, vals, residuals):
        sign = 1 if v > 0 else -1
        records.append(ExtremumRecord(int(i), float(x), float(abs(v)), sign, float(res)))
    return records


@lru_cache(maxsize=256)
def _extrema_table(n: int, degree_cap: int | None) -> ExtremaTable:
    n = _check_degree(n, degree_cap)
    if n < 2:
        raise DomainError("extrema require n >= 2")
    count = (n - 1) // 2
    if count == 0:
        return ExtremaTable(n=n, extrema=())
    zs = legendre_zeros(n, degree_cap=degree_cap).values
    m = len(zs)
    lo = [zs[i] for i in range(1, m)]
    hi = [zs[i] for i in range(0, m - 1)]
    indices = list(range(1, m))
    if n % 2 == 1:
        lo.append(0.0)
        hi.append(zs[-1])
        indices.append(m)
    records = _extrema_from_brackets(n, np.array(lo), np.array(hi), indices)
    signs = [r.sign for r in records]
    if signs[0] != -1 or any(signs[k] * signs[k + 1] != -1 for k in range(len(signs) - 1)):
        raise BracketError(f"extremum signs of degree {n} fail to alternate")
    return ExtremaTable(n=n, extrema=tuple(records))


def legendre_extrema(n: int, *, degree_cap: int | None = None) -> ExtremaTable:
    """Certified table of the floor((n-1)/2) positive extrema of P_n."""
    return _extrema_table(int(n), degree_cap)


def extremum_magnitude(i: int, n: int, *, degree_cap: int | None = None) -> float:
    """y_{i,n} = |P_n(x_{i,n})| for a single index, solved directly.

    Avoids building the full table when only one magnitude is needed
    (convergence scans over n reuse this heavily).
    """
    n = _check_degree(n, degree_cap)
    count = (n - 1) // 2
    if not 1 <= i <= count:
        raise DomainError(f"extremum index {i} outside 1..{count} for degree {n}")
    m = n // 2
    if i < m:
        lo = _zero_scalar(i + 1, n)
        hi = _zero_scalar(i, n)
    else:  # innermost extremum of odd degree
        lo = 0.0
        hi = _zero_scalar(m, n)
    x = _solve_scalar(n, lo, hi, "derivative")
    return abs(_scalar_pn(n, x)[0])


def _zero_scalar(i: int, n: int) -> float:
    lo, hi = bruns_bracket(i, n)
    return _solve_scalar(n, lo, hi, "value")


def check_interlacing(n: int, *, degree_cap: int | None = None) -> InterlacingReport:
    """Verify z_{i+1,n} < x_{i,n} < z_{i,n} and x_{1,n} < z_{1,n}."""
    n = _check_degree(n, degree_cap)
    if n < 2:
        raise DomainError("interlacing check requires n >= 2")
    zs = legendre_zeros(n, degree_cap=degree_cap).values
    ext = legendre_extrema(n, degree_cap=degree_cap).extrema
    margins = []
    ok = True
    for rec in ext:
        i = rec.index
        upper = zs[i - 1] - rec.x_value
        inner = zs[i] if i < len(zs) else 0.0
        lower = rec.x_value - inner
        margins.append((i, float(lower), float(upper)))
        if lower <= 0.0 or upper <= 0.0:
            ok = False
    return InterlacingReport(n=n, satisfied=ok, margins=tuple(margins))
