"""Unrestricted path counts by (ones, big parts) and their exponential generating function.

``gamma[n, i, j]`` counts standard paths of length ``n`` ending at a
composition with ``i`` parts equal to 1 and ``j`` parts of size at least 2.
For ``j > 0``::

    gamma[n, i, j] = 2 gamma[n-1, i-1, j] + (i+1) gamma[n-1, i+1, j-1] + j gamma[n-1, i, j]

and ``gamma[n, i, 0] = [i = n]``.  ``F(u, v, x) = sum gamma[n, i, j] u^i v^j x^n / n!``
and ``H = F - exp(u x)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .exact import TruncatedSeries

#: x^n brackets of F for n <= 5 as printed, keyed by (i, j).
PRINTED_SLICES: list[dict[tuple[int, int], int]] = [
    {(0, 0): 1},
    {(1, 0): 1},
    {(2, 0): 1, (0, 1): 1},
    {(3, 0): 1, (0, 1): 1, (1, 1): 4},
    {(4, 0): 1, (0, 1): 1, (1, 1): 6, (2, 1): 11, (0, 2): 4},
    {(5, 0): 1, (0, 1): 1, (1, 1): 8, (2, 1): 23, (3, 1): 26, (0, 2): 14, (1, 2): 30},
]

#: Totals at u = v = 1 as printed, n = 0..9.
PRINTED_TOTALS = [1, 1, 2, 6, 23, 103, 518, 2868, 17263, 111925]

# variable order for the trivariate series
U, V, X = 0, 1, 2


def gamma_table(n_max: int) -> dict[tuple[int, int, int], int]:
    """Nonzero ``gamma[n, i, j]`` for ``n <= n_max``."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    table: dict[tuple[int, int, int], int] = {(0, 0, 0): 1}
    for n in range(1, n_max + 1):
        table[(n, n, 0)] = 1
        for j in range(1, n // 2 + 1):
            for i in range(n - 2 * j + 1):
                val = (
                    2 * table.get((n - 1, i - 1, j), 0)
                    + (i + 1) * table.get((n - 1, i + 1, j - 1), 0)
                    + j * table.get((n - 1, i, j), 0)
                )
                if val:
                    table[(n, i, j)] = val
    return table


@dataclass(frozen=True)
class EgfSlice:
    """The coefficient of ``x^n / n!`` in ``F``: a polynomial in ``u, v`` with integer coefficients."""

    n: int
    coeffs: dict[tuple[int, int], int] = field(default_factory=dict)

    def evaluate(self, u=1, v=1):
        return sum(c * u**i * v**j for (i, j), c in self.coeffs.items())

    def egf_coeffs(self) -> dict[tuple[int, int], Fraction]:
        return {k: Fraction(c, factorial(self.n)) for k, c in self.coeffs.items()}

    def __str__(self) -> str:
        parts = []
        for (i, j), c in sorted(self.coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            mono = "*".join(
                s for s in (_pow("u", i), _pow("v", j)) if s
            )
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"


def _pow(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def egf_slices(n_max: int) -> list[EgfSlice]:
    table = gamma_table(n_max)
    slices = [dict() for _ in range(n_max + 1)]
    for (n, i, j), c in table.items():
        slices[n][(i, j)] = c
    return [
        EgfSlice(n, dict(sorted(s.items(), key=lambda kv: (kv[0][1], kv[0][0]))))
        for n, s in enumerate(slices)
    ]


def total_counts(n_max: int) -> list[int]:
    return [s.evaluate() for s in egf_slices(n_max)]


def H_series(degree: int) -> TruncatedSeries:
    """``H(u, v, x)`` to total degree ``degree`` in the order ``(u, v, x)``."""
    table = gamma_table(degree)
    return TruncatedSeries(
        3,
        degree,
        {(i, j, n): Fraction(c, factorial(n)) for (n, i, j), c in table.items() if j > 0},
    )


def exp_ux(degree: int, times_x: bool = False) -> TruncatedSeries:
    """``exp(u x)``, or ``x exp(u x)`` when ``times_x``."""
    shift = 1 if times_x else 0
    return TruncatedSeries(
        3, degree, {(m, 0, m + shift): Fraction(1, factorial(m)) for m in range(degree + 1)}
    )


@dataclass(frozen=True)
class SideCondition:
    name: str
    holds: bool
    detail: str = ""
    #: for H(0,v,x): whether the v-linear part of the table is exp(x) - 1 - x
    oracle_matches: bool | None = None


@dataclass(frozen=True)
class UnrestrictedPdeReport:
    n_max: int
    holds: bool
    checked: int
    first_failure: tuple[int, int, int] | None
    side_conditions: tuple[SideCondition, ...]

    def __bool__(self) -> bool:
        return self.holds


def verify_pde_unrestricted(n_max: int) -> UnrestrictedPdeReport:
    """Check ``dH/dx = v (dH/dv + dH/du + x exp(ux)) + 2 u H`` and the stated boundary data.

    A coefficient ``u^i v^j x^n`` of ``H`` needs ``i + 2j <= n``, so building ``H``
    to total degree ``2 (n_max + 1)`` determines every coefficient of both sides
    with x-degree up to ``n_max``.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    D = 2 * (n_max + 1)
    H = H_series(D)
    lhs = H.derivative(X)
    rhs = (H.derivative(V) + H.derivative(U) + exp_ux(D, times_x=True)).shift((0, 1, 0))
    rhs = rhs + H.shift((1, 0, 0)).scale(2)
    rhs = rhs.truncate(lhs.degree)
    first = None
    keys = sorted(set(lhs.coeffs) | set(rhs.coeffs), key=lambda e: (e[X], e[V], e[U]))
    for e in keys:
        if lhs.coeffs.get(e, 0) != rhs.coeffs.get(e, 0):
            first = e
            break
    checked = len(keys)
    sides = _side_conditions(H, n_max)
    return UnrestrictedPdeReport(n_max, first is None, checked, first, sides)


def _side_conditions(H: TruncatedSeries, n_max: int) -> tuple[SideCondition, ...]:
    terms = [(e, c) for e, c in H.items() if e[X] <= n_max]
    out = []

    bad = [e for e, _ in terms if e[V] == 0]
    out.append(SideCondition("H(u,0,x) = 0", not bad, f"offending terms: {bad}" if bad else ""))

    bad = [e for e, _ in terms if e[X] == 0]
    out.append(SideCondition("H(u,v,0) = 0", not bad, f"offending terms: {bad}" if bad else ""))

    bad = [e for e, _ in terms if e[X] == 1]
    out.append(SideCondition("dH/dx(u,v,0) = 0", not bad, f"offending terms: {bad}" if bad else ""))

    # H(0, v, x) as claimed: v (exp(x) - x) = v (1 + x^2/2! + x^3/3! + ...)
    at_u0 = {e: c for e, c in terms if e[U] == 0}
    claimed = {(0, 1, n): Fraction(1, factorial(n)) for n in range(n_max + 1) if n != 1}
    mismatch = sorted(set(at_u0) | set(claimed), key=lambda e: (e[X], e[V]))
    mismatch = [e for e in mismatch if at_u0.get(e, 0) != claimed.get(e, 0)]
    linear = {e: c for e, c in at_u0.items() if e[V] == 1}
    oracle_linear = {(0, 1, n): Fraction(1, factorial(n)) for n in range(2, n_max + 1)}
    higher = {e: c for e, c in at_u0.items() if e[V] >= 2}
    lines = []
    if mismatch:
        lines.append(
            "claimed H(0,v,x) = v(exp(x) - x) differs from the table at "
            + ", ".join(
                f"v^{e[V]} x^{e[X]} (table {at_u0.get(e, 0)}, claim {claimed.get(e, 0)})"
                for e in mismatch[:4]
            )
            + (" ..." if len(mismatch) > 4 else "")
        )
    lines.append(
        "table: [v^1] H(0,v,x) = exp(x) - 1 - x"
        + (" (exact)" if linear == oracle_linear else " (MISMATCH)")
    )
    if higher:
        e, c = min(higher.items(), key=lambda kv: (kv[0][X], kv[0][V]))
        lines.append(
            f"table: H(0,v,x) also has terms of order v^2 and above, first {c} v^{e[V]} x^{e[X]}"
            f" (gamma[{e[X]},0,{e[V]}] = {c * factorial(e[X])})"
        )
    out.append(
        SideCondition(
            "H(0,v,x) = v(exp(x) - x)",
            not mismatch,
            "; ".join(lines),
            oracle_matches=linear == oracle_linear,
        )
    )
    return tuple(out)


def boundary_oracle_H0(n_max: int) -> dict[int, dict[int, Fraction]]:
    """``H(0, v, x)`` from the table, as ``{n: {j: coefficient of v^j x^n}}``."""
    table = gamma_table(n_max)
    out: dict[int, dict[int, Fraction]] = {}
    for (n, i, j), c in table.items():
        if i == 0 and j > 0:
            out.setdefault(n, {})[j] = Fraction(c, factorial(n))
    return out
