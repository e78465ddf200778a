"""Exact arithmetic kernel.

Rationals are :class:`fractions.Fraction`.  On top of that this module
provides univariate polynomials, canonical rational functions, power
series in a few variables truncated by total degree, and partial
fractions over distinct factors ``(1 - i t)``.

All values are immutable; every operation returns a new object.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import zip_longest
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

BigRational = Fraction

#: Degree reported by the zero polynomial.
ZERO_DEGREE = -1


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    """Univariate polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> Polynomial:
        return cls([0] * degree + [c])

    @classmethod
    def linear_factor(cls, i) -> Polynomial:
        """The factor ``1 - i t``."""
        return cls([1, -i])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other) -> Polynomial:
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return Polynomial(
            a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    __radd__ = __add__

    def __sub__(self, other) -> Polynomial:
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return _as_poly(other) - self

    def __mul__(self, other) -> Polynomial:
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative exponent")
        out, base = Polynomial([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            q = rem[k + dq] / lc
            quot[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Polynomial:
        return divmod(self, other)[1]

    def exact_div(self, other) -> Polynomial:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def derivative(self) -> Polynomial:
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return Polynomial(c / self.leading for c in self.coeffs)

    def content(self) -> Fraction:
        """Positive rational ``c`` with ``self / c`` integral and primitive."""
        if self.is_zero():
            return Fraction(0)
        den = lcm(*(c.denominator for c in self.coeffs))
        num = gcd(*(c.numerator * (den // c.denominator) for c in self.coeffs))
        return Fraction(num, den)

    def is_primitive_integral(self) -> bool:
        return not self.is_zero() and self.content() == 1

    def integer_coeffs(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError(f"non-integral polynomial {self}")
        return [c.numerator for c in self.coeffs]

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        return format_poly(self.coeffs, "t")


def _as_poly(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.constant(x)
    return NotImplemented


def format_poly(coeffs: Sequence, var: str = "t") -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over the rationals (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class RationalFunction:
    """Reduced quotient ``num / den`` of univariate polynomials.

    The denominator is scaled to constant term 1 when that term is nonzero
    and made monic otherwise, so equal functions have equal fields.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = Polynomial(), Polynomial([1])
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            scale = den[0] if den[0] != 0 else den.leading
            num, den = num * (1 / scale), den * (1 / scale)
        self.num: Polynomial = num
        self.den: Polynomial = den

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Polynomial)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other) -> RationalFunction:
        other = _as_ratfn(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> RationalFunction:
        return self + (-_as_ratfn(other))

    def __rsub__(self, other) -> RationalFunction:
        return _as_ratfn(other) - self

    def __mul__(self, other) -> RationalFunction:
        other = _as_ratfn(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFunction:
        other = _as_ratfn(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RationalFunction:
        return _as_ratfn(other) / self

    def derivative(self) -> RationalFunction:
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, t):
        return self.num(t) / self.den(t)

    def series(self, n_terms: int) -> list[Fraction]:
        """First ``n_terms`` Taylor coefficients at 0."""
        if self.den[0] == 0:
            raise ValueError("pole at 0; no power series expansion")
        d0 = self.den[0]
        out: list[Fraction] = []
        for n in range(n_terms):
            acc = self.num[n]
            for k in range(1, min(n, self.den.degree) + 1):
                acc -= self.den[k] * out[n - k]
            out.append(acc / d0)
        return out

    def __repr__(self) -> str:
        return f"RationalFunction(({self.num}) / ({self.den}))"


def _as_ratfn(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(x)


def ratfn_arith(op: str, a: RationalFunction, b: RationalFunction) -> RationalFunction:
    """Dispatch ``add``/``sub``/``mul``/``div`` on two rational functions."""
    ops = {
        "add": lambda: a + b,
        "sub": lambda: a - b,
        "mul": lambda: a * b,
        "div": lambda: a / b,
    }
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return ops[op]()


def partial_fractions(den_roots: Sequence[int], numerator=None) -> dict[int, Fraction]:
    """Coefficients ``v_j`` with ``num / prod_j (1 - j t) = sum_j v_j / (1 - j t)``.

    ``numerator`` defaults to 1 and must have degree below ``len(den_roots)``.
    """
    roots = [int(r) for r in den_roots]
    if len(set(roots)) != len(roots):
        raise ValueError(f"repeated factors in {roots}")
    if any(r == 0 for r in roots):
        raise ValueError("factor (1 - 0 t) is constant")
    num = Polynomial([1]) if numerator is None else _as_poly(numerator)
    if num.degree >= len(roots):
        raise ValueError("numerator degree must be below denominator degree")
    out = {}
    for j in roots:
        x = Fraction(1, j)
        denom = Fraction(1)
        for i in roots:
            if i != j:
                denom *= 1 - i * x
        out[j] = num(x) / denom
    return out


def recombine_partial_fractions(coeffs: Mapping[int, Fraction]) -> RationalFunction:
    total = RationalFunction(0)
    for j, v in coeffs.items():
        total = total + RationalFunction(v, Polynomial.linear_factor(j))
    return total


Exponent = tuple[int, ...]


class TruncatedSeries:
    """Power series in ``arity`` variables, known up to total degree ``degree``.

    Coefficients live in a dict keyed by exponent tuples; missing keys are zero.
    Binary operations truncate to the smaller of the two degrees.
    """

    __slots__ = ("arity", "degree", "coeffs")

    def __init__(self, arity: int, degree: int, coeffs: Mapping[Exponent, object] = ()):
        if arity < 0:
            raise ValueError("arity must be non-negative")
        self.arity = arity
        self.degree = degree
        clean: dict[Exponent, Fraction] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for e, c in items:
            e = tuple(e)
            if len(e) != arity:
                raise ValueError(f"exponent {e} has wrong arity (expected {arity})")
            if any(k < 0 for k in e):
                raise ValueError(f"negative exponent {e}")
            if sum(e) <= degree and c != 0:
                clean[e] = clean.get(e, Fraction(0)) + _frac(c)
        self.coeffs = {e: c for e, c in clean.items() if c != 0}

    # constructors

    @classmethod
    def constant(cls, c, arity: int, degree: int) -> TruncatedSeries:
        return cls(arity, degree, {(0,) * arity: c})

    @classmethod
    def variable(cls, index: int, arity: int, degree: int) -> TruncatedSeries:
        if not 0 <= index < arity:
            raise IndexError(f"variable index {index} out of range for arity {arity}")
        e = [0] * arity
        e[index] = 1
        return cls(arity, degree, {tuple(e): 1})

    @classmethod
    def from_univariate(cls, coeffs: Sequence, degree: int | None = None) -> TruncatedSeries:
        if degree is None:
            degree = len(coeffs) - 1
        return cls(1, degree, {(k,): c for k, c in enumerate(coeffs)})

    # access

    def __getitem__(self, exps) -> Fraction:
        if isinstance(exps, int):
            exps = (exps,)
        exps = tuple(exps)
        if sum(exps) > self.degree:
            raise KeyError(f"{exps} beyond truncation degree {self.degree}")
        return self.coeffs.get(exps, Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coeffs.get((0,) * self.arity, Fraction(0))

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def homogeneous(self) -> list[dict[Exponent, Fraction]]:
        parts: list[dict[Exponent, Fraction]] = [{} for _ in range(self.degree + 1)]
        for e, c in self.coeffs.items():
            parts[sum(e)][e] = c
        return parts

    def truncate(self, degree: int) -> TruncatedSeries:
        return TruncatedSeries(self.arity, min(degree, self.degree), self.coeffs)

    def terms_above(self, lo: int) -> dict[Exponent, Fraction]:
        """Terms of total degree strictly above ``lo``."""
        return {e: c for e, c in self.coeffs.items() if sum(e) > lo}

    # arithmetic

    def _check(self, other: TruncatedSeries) -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.arity != self.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.arity, self.degree, self.coeffs) == (other.arity, other.degree, other.coeffs)

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.arity, self.degree, {e: -c for e, c in self.coeffs.items()})

    def __add__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(other, self.arity, self.degree)
        self._check(other)
        out: dict[Exponent, Fraction] = defaultdict(Fraction)
        for src in (self.coeffs, other.coeffs):
            for e, c in src.items():
                out[e] += c
        return TruncatedSeries(self.arity, min(self.degree, other.degree), out)

    __radd__ = __add__

    def __sub__(self, other) -> TruncatedSeries:
        return self + (-other)

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def scale(self, c) -> TruncatedSeries:
        c = _frac(c)
        return TruncatedSeries(self.arity, self.degree, {e: c * v for e, v in self.coeffs.items()})

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return series_mul(self, other)

    def __rmul__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int) -> TruncatedSeries:
        out = TruncatedSeries.constant(1, self.arity, self.degree)
        for _ in range(e):
            out = out * self
        return out

    def shift(self, exps: Exponent) -> TruncatedSeries:
        """Multiply by a monomial (truncation degree unchanged)."""
        return TruncatedSeries(
            self.arity,
            self.degree,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.coeffs.items()},
        )

    def divide_monomial(self, exps: Exponent) -> TruncatedSeries:
        """Exact division by a monomial; the truncation degree drops by its degree."""
        out = {}
        for e, c in self.coeffs.items():
            q = tuple(a - b for a, b in zip(e, exps))
            if any(k < 0 for k in q):
                raise ArithmeticError(f"term {e} not divisible by monomial {exps}")
            out[q] = c
        return TruncatedSeries(self.arity, self.degree - sum(exps), out)

    def derivative(self, variable_index: int) -> TruncatedSeries:
        return series_derivative(self, variable_index)

    def substitute_zero(self, variable_index: int) -> TruncatedSeries:
        """Set one variable to zero (keeps arity)."""
        return TruncatedSeries(
            self.arity,
            self.degree,
            {e: c for e, c in self.coeffs.items() if e[variable_index] == 0},
        )

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*x^{e}" for e, c in self.items()[:8])
        more = " + ..." if len(self.coeffs) > 8 else ""
        return f"TruncatedSeries(arity={self.arity}, degree={self.degree}: {body or 0}{more})"


def _mul_homogeneous(a: Mapping[Exponent, Fraction], b: Mapping[Exponent, Fraction], out) -> None:
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, Fraction(0)) + ca * cb


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    degree = min(a.degree, b.degree)
    out: dict[Exponent, Fraction] = {}
    bs = sorted(b.coeffs.items(), key=lambda kv: sum(kv[0]))
    for ea, ca in a.coeffs.items():
        da = sum(ea)
        if da > degree:
            continue
        for eb, cb in bs:
            if da + sum(eb) > degree:
                break
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, Fraction(0)) + ca * cb
    return TruncatedSeries(a.arity, degree, out)


def series_sqrt(a: TruncatedSeries) -> TruncatedSeries:
    """Square root with constant term 1, solved one total degree at a time."""
    if a.constant_term() != 1:
        raise ValueError("series_sqrt needs constant term 1")
    parts = a.homogeneous()
    root: list[dict[Exponent, Fraction]] = [{(0,) * a.arity: Fraction(1)}]
    for d in range(1, a.degree + 1):
        acc: dict[Exponent, Fraction] = {}
        for e in range(1, d):
            _mul_homogeneous(root[e], root[d - e], acc)
        part = {}
        for exps in set(parts[d]) | set(acc):
            c = (parts[d].get(exps, 0) - acc.get(exps, 0)) / 2
            if c:
                part[exps] = c
        root.append(part)
    return TruncatedSeries(a.arity, a.degree, {e: c for p in root for e, c in p.items()})


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    c0 = a.constant_term()
    if c0 == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    parts = a.homogeneous()
    inv: list[dict[Exponent, Fraction]] = [{(0,) * a.arity: 1 / c0}]
    for d in range(1, a.degree + 1):
        acc: dict[Exponent, Fraction] = {}
        for e in range(1, d + 1):
            _mul_homogeneous(parts[e], inv[d - e], acc)
        inv.append({k: -v / c0 for k, v in acc.items() if v})
    return TruncatedSeries(a.arity, a.degree, {e: c for p in inv for e, c in p.items()})


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return series_mul(a, series_reciprocal(b))


def series_derivative(a: TruncatedSeries, variable_index: int) -> TruncatedSeries:
    if not 0 <= variable_index < a.arity:
        raise IndexError(f"variable index {variable_index} out of range for arity {a.arity}")
    out = {}
    for e, c in a.coeffs.items():
        k = e[variable_index]
        if k:
            lowered = list(e)
            lowered[variable_index] -= 1
            out[tuple(lowered)] = k * c
    return TruncatedSeries(a.arity, a.degree - 1, out)


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries, degree: int | None = None) -> TruncatedSeries:
    """Substitute ``inner`` (zero constant term) for the variable of a univariate ``outer``.

    The result is exact to total degree ``min(outer.degree, inner.degree)`` unless
    a smaller ``degree`` is requested.  Because ``inner`` has no constant term,
    ``inner**m`` only reaches degrees >= m, so ``outer`` terms above that bound
    cannot contribute.
    """
    if outer.arity != 1:
        raise ValueError("outer series must be univariate")
    if inner.constant_term() != 0:
        raise ValueError("inner series must have zero constant term")
    D = min(outer.degree, inner.degree)
    if degree is not None:
        D = min(D, degree)
    inner = inner.truncate(D)
    result = TruncatedSeries.constant(outer[(0,)], inner.arity, D)
    power = TruncatedSeries.constant(1, inner.arity, D)
    for m in range(1, D + 1):
        power = series_mul(power, inner)
        c = outer.coeffs.get((m,))
        if c:
            result = result + power.scale(c)
    return result

