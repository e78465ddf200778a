"""Paths whose endpoint has height at most 2.

Such an endpoint with ``i`` ones and ``j`` twos has weight ``i + 2j``; write
``c[i, j]`` for the number of paths reaching one of them.  The table obeys
``c[i, j] = 2 c[i-1, j] + (i+1) c[i+1, j-1] - [j = 0]`` and its generating
function ``sum c[i, j] x^i y^j / j!`` equals ``2 / (1 + sqrt(1 - 4(y + x - x^2)))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exact import (
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    series_compose,
    series_reciprocal,
    series_sqrt,
)

#: Table of ``c[i, j]`` for small ``i, j`` as printed (rows i = 0..8, columns j = 0..7).
PRINTED_TABLE: dict[tuple[int, int], int] = {}
_ROWS = [
    [1, 1, 4, 30, 336, 5040, 95040, 2162160],
    [1, 4, 30, 336, 5040, 95040, 2162160, 57657600],
    [1, 11, 138, 2184, 42480, 986040, 26666640, 824503680],
    [1, 26, 504, 10800, 265320, 7447440, 236396160, 8393898240],
    [1, 57, 1608, 45090, 1368840, 45765720],
    [1, 120, 4698, 167640, 6174168, 242686080],
    [1, 247, 12910, 572748, 25192440, 1151011680],
    [1, 502, 33924, 1834872, 95091360, 4999942080],
    [1, 1013, 86172, 5588310, 337239840],
]
for _i, _row in enumerate(_ROWS):
    for _j, _v in enumerate(_row):
        PRINTED_TABLE[(_i, _j)] = _v
del _i, _j, _v, _row, _ROWS

#: ``Q_k`` coefficients for k = 1..4 as printed (the k = 3 display reads
#: ``10x^2x``; the recursion gives ``10x^2``).
PRINTED_Q: dict[int, list[int]] = {
    1: [1],
    2: [2, -3],
    3: [5, -14, 10],
    4: [14, -56, 76, -35],
}


def c2_table(i_max: int, j_max: int) -> dict[tuple[int, int], int]:
    """``c[i, j]`` for ``i <= i_max``, ``j <= j_max``."""
    if i_max < 0 or j_max < 0:
        raise ValueError("bounds must be non-negative")
    # c[i, j] reads c[i + 1, j - 1], so column j needs rows up to i_max + (j_max - j)
    width = i_max + j_max
    col = [1] * (width + 1)
    table = {(i, 0): col[i] for i in range(i_max + 1)}
    for j in range(1, j_max + 1):
        rows = width - j
        new = [0] * (rows + 1)
        for i in range(rows + 1):
            new[i] = (2 * new[i - 1] if i else 0) + (i + 1) * col[i + 1]
        col = new
        for i in range(i_max + 1):
            table[(i, j)] = col[i]
    return table


@dataclass(frozen=True)
class PkBundle:
    """``P_k = k! (1-x)^(-1-k) (1-2x)^(1-2k) Q_k``; ``Q`` is ``None`` for ``k = 0``."""

    k: int
    P: RationalFunction
    Q: Polynomial | None
    factorial: int

    def series(self, n_terms: int) -> list[Fraction]:
        return self.P.series(n_terms)


def _P(k: int) -> RationalFunction:
    P = RationalFunction(1, Polynomial([1, -1]))
    for _ in range(k):
        P = P.derivative() / Polynomial([1, -2])
    return P


def P_k_ratfn(k: int) -> PkBundle:
    """Generating function of column ``j = k`` of the table, with its normal form."""
    if k < 0:
        raise ValueError("k must be non-negative")
    P = _P(k)
    Q = None
    if k >= 1:
        cleared = P * (Polynomial([1, -1]) ** (k + 1) * Polynomial([1, -2]) ** (2 * k - 1))
        cleared = cleared / factorial(k)
        if cleared.den != 1:
            raise ArithmeticError(f"P_{k} does not have the expected denominator")
        Q = cleared.num
    return PkBundle(k, P, Q, factorial(k))


def catalan_series(D: int) -> TruncatedSeries:
    return TruncatedSeries.from_univariate([comb(2 * n, n) // (n + 1) for n in range(D + 1)])


def _inner(D: int) -> TruncatedSeries:
    # y + x - x^2 with variables ordered (x, y)
    return TruncatedSeries(2, D, {(0, 1): 1, (1, 0): 1, (2, 0): -1})


def P_closed_series(D: int) -> TruncatedSeries:
    """``2 / (1 + sqrt(1 - 4(y + x - x^2)))`` in ``(x, y)`` to total degree ``D``."""
    if D < 0:
        raise ValueError("D must be non-negative")
    radicand = 1 - _inner(D).scale(4)
    return series_reciprocal(1 + series_sqrt(radicand)).scale(2)


def P_catalan_series(D: int) -> TruncatedSeries:
    """The same function as the Catalan series evaluated at ``y + x - x^2``."""
    return series_compose(catalan_series(D), _inner(D))


def P_table_series(D: int) -> TruncatedSeries:
    """``sum c[i, j] x^i y^j / j!`` assembled from the recurrence table."""
    table = c2_table(D, D)
    return TruncatedSeries(
        2, D, {(i, j): Fraction(c, factorial(j)) for (i, j), c in table.items() if i + j <= D}
    )


def c0(n: int) -> int:
    """``(2n)! / (n+1)!``, i.e. ``n!`` times the n-th Catalan number."""
    return factorial(2 * n) // factorial(n + 1)


def c2_closed_forms(n: int) -> tuple[int, int, int]:
    if n < 0:
        raise ValueError("n must be non-negative")
    second = Fraction(c0(n + 2), 2) - c0(n + 1)
    if second.denominator != 1:
        raise ArithmeticError("c[2, n] is not an integer")
    return c0(n), c0(n + 1), int(second)


def c2_gamma_form(n: int) -> Fraction:
    """The Gamma expression for ``c[2, n]`` with ``Gamma(n + 3/2) / sqrt(pi)`` made rational."""
    gamma_over_sqrt_pi = Fraction(factorial(2 * n + 1), 2 * 4**n * factorial(n))
    return (
        Fraction(1, 16)
        * (2 * n * n + 6 * n + 3)
        * 2 ** (2 * n + 6)
        * gamma_over_sqrt_pi
        / ((n + 3) * (n + 2))
    )


@dataclass(frozen=True)
class PdeReport:
    holds: bool
    checked: int
    first_failure: tuple[int, ...] | None
    initial_condition: bool

    def __bool__(self) -> bool:
        return self.holds and self.initial_condition


def check_height2_pde(P: TruncatedSeries) -> PdeReport:
    """Compare ``(1 - 2x) dP/dy`` with ``dP/dx`` and ``P(x, 0)`` with ``1/(1-x)``."""
    lhs = P.derivative(1) * TruncatedSeries(2, P.degree, {(0, 0): 1, (1, 0): -2})
    rhs = P.derivative(0)
    first = None
    checked = 0
    D = min(lhs.degree, rhs.degree)
    for d in range(D + 1):
        for a in range(d + 1):
            e = (a, d - a)
            checked += 1
            if first is None and lhs[e] != rhs[e]:
                first = e
    initial = all(P[(i, 0)] == 1 for i in range(P.degree + 1))
    return PdeReport(first is None, checked, first, initial)


def verify_pde_height2(D: int) -> dict[str, PdeReport]:
    """Check the PDE on the closed form and on the table-derived series."""
    if D < 2:
        raise ValueError("D must be at least 2")
    return {
        "closed_form": check_height2_pde(P_closed_series(D)),
        "table": check_height2_pde(P_table_series(D)),
    }
