"""Paths of fixed width: the multivariate ``f_k`` and the univariate ``L_k``.

``f_k(x_1, ..., x_k)`` counts standard paths whose endpoint has ``k`` parts,
weighted by ``x_1^{p_1} ... x_k^{p_k}``.  Its coefficients satisfy::

    c(p) = sum_{i: p_i >= 2} c(p - e_i)
           + [p_1 = 1] c(p_2, ..., p_k) + [p_k = 1] c(p_1, ..., p_{k-1})
           - [p = (1, ..., 1)]

``L_k(t) = f_k(t, ..., t)`` obeys ``L_k = (2 t L_{k-1} - t^k) / (1 - k t)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import Polynomial, RationalFunction, TruncatedSeries, partial_fractions
from .poset import Composition, compositions_of_length

#: Numerators of ``f_k`` after clearing ``x_1 ... x_k`` and the product of
#: ``(1 - x_i - ... - x_j)``, as printed for k <= 3.  The k = 2 display has an
#: unbalanced parenthesis; the series confirms ``1 - x_1 x_2``.
PRINTED_FK_NUMERATORS: dict[int, dict[tuple[int, ...], int]] = {
    0: {(): 1},
    1: {(0,): 1},
    2: {(0, 0): 1, (1, 1): -1},
    3: {
        (2, 2, 1): 1, (2, 1, 2): 1, (1, 3, 1): 1, (1, 2, 2): 1,
        (2, 2, 0): -1, (2, 1, 1): -4, (2, 0, 2): -1, (1, 3, 0): -1,
        (1, 2, 1): -7, (1, 1, 2): -4, (0, 3, 1): -1, (0, 2, 2): -1,
        (2, 1, 0): 2, (2, 0, 1): 2, (1, 2, 0): 5, (1, 1, 1): 12,
        (1, 0, 2): 2, (0, 3, 0): 1, (0, 2, 1): 5, (0, 1, 2): 2,
        (1, 1, 0): -5, (1, 0, 1): -4, (0, 2, 0): -3, (0, 1, 1): -5,
        (0, 1, 0): 1, (0, 0, 0): 1,
    },
}

#: ``L~_k`` coefficients (lowest degree first) as printed for k <= 5.
PRINTED_L_TILDE: dict[int, list[int]] = {
    1: [1],
    2: [1, 1],
    3: [1, 5, -2],
    4: [1, 16, -15, 6],
    5: [1, 42, -65, 62, -24],
}


@lru_cache(maxsize=None)
def _shape_count(p: tuple[int, ...]) -> int:
    if not p:
        return 1
    total = 0
    for i, part in enumerate(p):
        if part >= 2:
            total += _shape_count(p[:i] + (part - 1,) + p[i + 1 :])
    if p[0] == 1:
        total += _shape_count(p[1:])
    if p[-1] == 1:
        total += _shape_count(p[:-1])
    if all(x == 1 for x in p):
        total -= 1
    return total


def shape_count(p) -> int:
    """Number of standard paths ending at the composition ``p``."""
    p = tuple(Composition(p))
    return _shape_count(p)


def f_k_series(k: int, D: int) -> TruncatedSeries:
    """``f_k`` in ``x_1..x_k`` up to total degree ``D``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    coeffs = {
        tuple(p): shape_count(p)
        for n in range(k, D + 1)
        for p in compositions_of_length(n, k)
    }
    return TruncatedSeries(k, D, coeffs)


def interval_product(k: int, D: int) -> TruncatedSeries:
    """``prod_{1 <= i <= j <= k} (1 - x_i - ... - x_j)``."""
    out = TruncatedSeries.constant(1, k, D)
    for i in range(k):
        for j in range(i, k):
            factor = {(0,) * k: 1}
            for m in range(i, j + 1):
                e = [0] * k
                e[m] = 1
                factor[tuple(e)] = -1
            out = out * TruncatedSeries(k, D, factor)
    return out


def numerator_degree_bound(k: int) -> int:
    """Degree bound on ``f~_k`` from the inductive construction of the numerator."""
    bound = 0
    for m in range(1, k + 1):
        bound = max(bound + m, m * (m + 1) // 2) - 1
    return bound


@dataclass(frozen=True)
class FkStructureReport:
    k: int
    D: int
    degree_bound: int
    holds: bool
    numerator: dict[tuple[int, ...], Fraction]
    stray_terms: dict[tuple[int, ...], Fraction]
    matches_printed: bool | None

    def __bool__(self) -> bool:
        return self.holds


def verify_fk_structure(k: int, D: int) -> FkStructureReport:
    """Clear the known denominator of ``f_k`` and check the rest is a polynomial.

    The cleared series must vanish in total degrees between the degree bound
    and ``D - k``.  For ``k <= 3`` the surviving polynomial is also compared
    with the printed numerator.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    series = f_k_series(k, D) * interval_product(k, D)
    cleared = series.divide_monomial((1,) * k)
    bound = numerator_degree_bound(k)
    stray = cleared.terms_above(bound)
    numerator = {e: c for e, c in cleared.coeffs.items() if sum(e) <= bound}
    printed = PRINTED_FK_NUMERATORS.get(k)
    matches = None
    if printed is not None and cleared.degree >= bound:
        matches = numerator == {e: Fraction(c) for e, c in printed.items()}
    return FkStructureReport(
        k=k,
        D=D,
        degree_bound=bound,
        holds=not stray and cleared.degree >= bound,
        numerator=numerator,
        stray_terms=stray,
        matches_printed=matches,
    )


def linear_product(k: int) -> Polynomial:
    """``prod_{i=1}^{k} (1 - i t)``."""
    out = Polynomial([1])
    for i in range(1, k + 1):
        out = out * Polynomial.linear_factor(i)
    return out


@dataclass(frozen=True)
class WidthSeriesBundle:
    k: int
    L: RationalFunction
    L_tilde: Polynomial
    coefficients: tuple[int, ...]

    def a(self, n: int) -> int:
        return self.coefficients[n]


@lru_cache(maxsize=None)
def _L(k: int) -> RationalFunction:
    if k == 0:
        return RationalFunction(1)
    t = Polynomial([0, 1])
    return (2 * t * _L(k - 1) - Polynomial.monomial(k)) / Polynomial.linear_factor(k)


def L_k_ratfn(k: int, terms: int = 16) -> WidthSeriesBundle:
    """``L_k`` as a reduced rational function plus its first ``terms`` coefficients."""
    if k < 1:
        raise ValueError("k must be at least 1")
    L = _L(k)
    scaled = L * linear_product(k)
    if scaled.den != 1:
        raise ArithmeticError(f"L_{k} * prod(1 - i t) is not a polynomial")
    L_tilde = scaled.num.exact_div(Polynomial.monomial(k))
    coeffs = tuple(int(c) for c in L.series(terms))
    return WidthSeriesBundle(k, L, L_tilde, coeffs)


def a_nk_by_shapes(n: int, k: int) -> int:
    """Width-``k`` paths of length ``n``, summed over endpoints."""
    return sum(shape_count(p) for p in compositions_of_length(n, k))


@dataclass(frozen=True)
class ClosedForm:
    """``a_{n,k} = [t^n] polynomial_part + sum_j weights[j] * j**n``."""

    k: int
    n: int
    value: int
    weights: dict[int, Fraction]
    polynomial_part: Polynomial
    product_leading: Fraction
    growth_constant: Fraction

    def evaluate(self, n: int) -> Fraction:
        return self.polynomial_part[n] + sum(w * j**n for j, w in self.weights.items())


@lru_cache(maxsize=None)
def _closed_form_parts(k: int) -> tuple[dict[int, Fraction], Polynomial]:
    bundle = L_k_ratfn(k, terms=1)
    num = Polynomial.monomial(k) * bundle.L_tilde
    quot, rem = divmod(num, linear_product(k))
    return partial_fractions(range(1, k + 1), rem), quot


def a_nk_closed_form(k: int, n: int) -> ClosedForm:
    """Evaluate ``a_{n,k}`` from the partial fractions of ``L_k``.

    ``product_leading`` is the coefficient ``v_{k,k} = k^{k-1} / (k-1)!`` of
    ``1 / (1 - k t)`` in ``prod_i (1 - i t)^{-1}``.  ``growth_constant`` is
    the true limit of ``a_{n+k,k} / k^n``, which carries the extra factor
    ``L~_k(1/k)``.
    """
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    weights, poly = _closed_form_parts(k)
    value = poly[n] + sum(w * j**n for j, w in weights.items())
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral closed form value {value}")
    leading = partial_fractions(range(1, k + 1))[k]
    return ClosedForm(
        k=k,
        n=n,
        value=int(value),
        weights=dict(weights),
        polynomial_part=poly,
        product_leading=leading,
        growth_constant=weights[k] * k**k,
    )


def asymptotic_relative_error(k: int, n: int, constant: Fraction | None = None) -> Fraction:
    """``|a_{n+k,k} / (C k^n) - 1|`` with ``C = v_{k,k}`` unless given."""
    cf = a_nk_closed_form(k, n + k)
    c = cf.product_leading if constant is None else constant
    return abs(Fraction(cf.value) / (c * k**n) - 1)

