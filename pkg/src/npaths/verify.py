"""Cross-checks of every closed form and table against the brute-force oracle.

``run_all`` returns one :class:`CheckResult` per check; ``verify all`` on the
command line prints them and exits 1 if any fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import permutations
from math import factorial
from typing import Callable

from . import height2, paths, poset, unrestricted, width
from .exact import Polynomial, RationalFunction, partial_fractions
from .oeis import oeis_check


@dataclass(frozen=True)
class CheckResult:
    key: str
    title: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"[{status}] {self.key}. {self.title}{tail}"


def figure1_edges() -> set[tuple[poset.Composition, poset.Composition]]:
    text = resources.files("npaths.data").joinpath("figure1_hasse_N4.txt").read_text()
    edges = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            lo, hi = line.split()
            edges.add((poset.parse_label(lo), poset.parse_label(hi)))
    return edges


def check_totals(max_weight: int = 12) -> CheckResult:
    n_brute = min(9, max_weight)
    brute = [len(paths.enumerate_paths(n)) for n in range(n_brute + 1)]
    rec = unrestricted.total_counts(9)
    ok = brute == unrestricted.PRINTED_TOTALS[: n_brute + 1] and rec == unrestricted.PRINTED_TOTALS
    return CheckResult("1", "total path counts n=0..9 (brute force and recurrence)", ok,
                       f"brute n<={n_brute}: {brute}; recurrence: {rec}")


def check_slices() -> CheckResult:
    got = [s.coeffs for s in unrestricted.egf_slices(5)]
    ok = got == unrestricted.PRINTED_SLICES
    return CheckResult("2", "EGF brackets for n<=5", ok,
                       "; ".join(str(s) for s in unrestricted.egf_slices(5)[3:]))


def check_oracle_equivalence(max_weight: int = 12) -> CheckResult:
    W = min(max_weight, 12)
    bad = []
    n_comps = 0
    for n in range(W + 1):
        dp = paths.count_by_endpoint(n)
        brute = paths.brute_force_endpoint_counts(n)
        if dp != brute:
            bad.append(f"endpoint table differs at n={n}")
        for p, c in dp.items():
            n_comps += 1
            if width.shape_count(p) != c:
                bad.append(f"shape_count{tuple(p)}")
    hmax = W + 2
    table = height2.c2_table(hmax, hmax // 2)
    for n in range(hmax + 1):
        stats = paths.count_by_stats(n, height_bound=2)
        for (i, j), c in stats.items():
            if i + 2 * j != n:
                bad.append(f"height-2 count at n={n} off the line i+2j=n")
            elif table[(i, j)] != c:
                bad.append(f"c2[{i},{j}]")
        for j in range(n // 2 + 1):
            if stats.get((n - 2 * j, j), 0) != table[(n - 2 * j, j)]:
                bad.append(f"c2[{n - 2 * j},{j}] missing")
    detail = f"{n_comps} compositions of weight <= {W}; height 2 for i+2j <= {hmax}"
    return CheckResult("3", "oracle equivalence (DP = shape recurrence = brute force; c2 table)",
                       not bad, detail if not bad else ", ".join(sorted(set(bad))[:5]))


def check_table1() -> CheckResult:
    table = height2.c2_table(8, 7)
    bad = [k for k, v in height2.PRINTED_TABLE.items() if table[k] != v]
    return CheckResult("4", "printed c2 table", not bad,
                       f"{len(height2.PRINTED_TABLE)} entries" if not bad else f"differs at {bad}")


def check_L_k() -> CheckResult:
    bad = []
    for k, coeffs in width.PRINTED_L_TILDE.items():
        expected = RationalFunction(Polynomial.monomial(k) * Polynomial(coeffs), width.linear_product(k))
        bundle = width.L_k_ratfn(k)
        if bundle.L != expected or bundle.L.den != width.linear_product(k):
            bad.append(f"L_{k}")
    for k in range(1, 13):
        lt = width.L_k_ratfn(k, terms=1).L_tilde
        if lt.degree != k - 1 or lt(1) != 2 ** (k - 1):
            bad.append(f"L~_{k}")
    return CheckResult("5", "L_k for k=1..5; deg and value at 1 of L~_k for k<=12", not bad,
                       ", ".join(bad))


def check_fk_structure() -> CheckResult:
    reports = [width.verify_fk_structure(k, 12) for k in (1, 2, 3)]
    ok = all(r.holds and r.matches_printed for r in reports)
    return CheckResult("6", "f_k numerator is a polynomial, k=1..3, D=12", ok,
                       "f2 numerator = 1 - x1*x2; f3 numerator matches the printed polynomial"
                       if ok else str([(r.k, r.holds, r.matches_printed) for r in reports]))


def check_P_k() -> CheckResult:
    bad = []
    x1, x2 = Polynomial([1, -1]), Polynomial([1, -2])
    for k, q in height2.PRINTED_Q.items():
        expected = RationalFunction(factorial(k) * Polynomial(q), x1 ** (k + 1) * x2 ** (2 * k - 1))
        if height2.P_k_ratfn(k).P != expected:
            bad.append(f"P_{k}")
    for k in range(1, 11):
        Q = height2.P_k_ratfn(k).Q
        if not (Q.is_primitive_integral() and Q.degree == k - 1 and Q(1) == (-1) ** (k + 1)):
            bad.append(f"Q_{k}")
    return CheckResult("7", "P_k for k=1..4; Q_k primitive, deg k-1, Q_k(1)=(-1)^(k+1) for k<=10",
                       not bad, ", ".join(bad) or "P_3 numerator is 5 - 14x + 10x^2")


def check_closed_form() -> CheckResult:
    P = height2.P_closed_series(16)
    table = height2.c2_table(16, 8)
    bad = [
        (i, j)
        for (i, j), c in table.items()
        if i + 2 * j <= 16 and factorial(j) * P[(i, j)] != c
    ]
    return CheckResult("8", "j! [x^i y^j] 2/(1+sqrt(1-4(y+x-x^2))) = c2[i,j] for i+2j<=16",
                       not bad, f"differs at {bad[:5]}" if bad else "")


def check_oeis(mode: str = "offline", cache_dir=None) -> CheckResult:
    c0 = [height2.c2_closed_forms(n)[0] for n in range(20)]
    report = oeis_check("A001761", c0, mode=mode, start=0, cache_dir=cache_dir)
    table = height2.c2_table(2, 21)
    bad = []
    for n in range(21):
        a, b, c = height2.c2_closed_forms(n)
        if a != table[(0, n)] or b != table[(1, n)] or c != table[(2, n)]:
            bad.append(n)
        if height2.c2_gamma_form(n) != c:
            bad.append(f"gamma form n={n}")
    ok = report.matched and report.compared == 20 and not bad
    return CheckResult("9", "c0n vs A001761 (20 terms); c1n and c2n closed forms for n<=20", ok,
                       str(report) if not bad else f"{report}; bad n: {bad}")


def check_pdes() -> CheckResult:
    h2 = height2.verify_pde_height2(12)
    un = unrestricted.verify_pde_unrestricted(10)
    h0 = next(s for s in un.side_conditions if s.name.startswith("H(0,v,x)"))
    other_sides = [s for s in un.side_conditions if s is not h0]
    ok = (
        all(bool(r) for r in h2.values())
        and un.holds
        and all(s.holds for s in other_sides)
        and h0.oracle_matches
    )
    detail = (
        "height-2 PDE and unrestricted PDE hold; boundary report: "
        "H(0,v,x) oracle = v(exp(x) - 1 - x) + O(v^2), stated v(exp(x) - x) "
        + ("differs" if not h0.holds else "agrees")
    )
    return CheckResult("10", "PDEs hold coefficientwise through degree 10", ok, detail)


def check_poset() -> CheckResult:
    gN = poset.hasse_graph("N", 4)
    gG = poset.hasse_graph("Gamma", 4)
    fig = figure1_edges()
    e22 = (poset.Composition((2, 2)), poset.Composition((2, 1, 2)))
    ok = (
        len(gN.nodes) == 16
        and gN.edge_set() == gG.edge_set() == fig
        and e22 in poset.hasse_graph("Gamma", 5).edge_set()
        and e22 not in poset.hasse_graph("N", 5).edge_set()
        and poset.leq("Gamma", (2, 2), (2, 1, 2))
        and not poset.leq("N", (2, 2), (2, 1, 2))
    )
    return CheckResult("11", "Hasse diagrams: N = Gamma = figure up to weight 4; (2,2)->(2,1,2) only in Gamma",
                       ok, f"{len(fig)} edges")


def check_partial_fractions() -> list[CheckResult]:
    lead_ok = all(
        partial_fractions(range(1, k + 1))[k] == Fraction(k ** (k - 1), factorial(k - 1))
        for k in range(1, 9)
    )
    series_ok = True
    for k in range(1, 7):
        coeffs = width.L_k_ratfn(k, terms=31).coefficients
        if any(width.a_nk_closed_form(k, n).value != coeffs[n] for n in range(k, 31)):
            series_ok = False
    monotone = {}
    for k in (2, 3, 4):
        errs = [width.asymptotic_relative_error(k, n) for n in range(10, 26)]
        monotone[k] = (all(a > b for a, b in zip(errs, errs[1:])), float(errs[0]), float(errs[-1]))
    mono_ok = all(v[0] for v in monotone.values())
    mono_detail = "; ".join(
        f"k={k}: err(10)={e0:.6g}, err(25)={e1:.6g}" for k, (_, e0, e1) in monotone.items()
    )
    return [
        CheckResult("12a", "v_kk = k^(k-1)/(k-1)! for k<=8", lead_ok),
        CheckResult("12b", "closed-form a_nk = series coefficients, k<=6, n<=30", series_ok),
        CheckResult("12c", "|a_{n+k,k}/(v_kk k^n) - 1| decreasing for n in [10,25], k=2,3,4",
                    mono_ok, mono_detail),
    ]


def check_tableaux(max_weight: int = 12) -> CheckResult:
    n_max = min(9, max_weight)
    bad = []
    for n in range(n_max + 1):
        seen = set()
        for path in paths.enumerate_paths(n):
            t = paths.path_to_tableau(path)
            if t in seen or paths.tableau_to_path(t) != path or not paths.check_necessary_condition(t):
                bad.append(n)
                break
            seen.add(t)
    witness = necessary_not_sufficient_witness(5)
    ok = not bad and witness is not None
    return CheckResult("13", "path <-> tableau bijection; necessary condition not sufficient", ok,
                       f"n<={n_max}; witness {witness.columns if witness else None}")


def increasing_tableaux(n: int):
    """Every tableau with labels 1..n and increasing columns, all shapes of weight n."""
    for shape in poset.compositions(n):
        for perm in permutations(range(1, n + 1)):
            cols, pos = [], 0
            ok = True
            for h in shape:
                col = perm[pos : pos + h]
                if any(a >= b for a, b in zip(col, col[1:])):
                    ok = False
                    break
                cols.append(col)
                pos += h
            if ok:
                yield paths.Tableau.of(cols)


def necessary_not_sufficient_witness(n: int):
    for t in increasing_tableaux(n):
        if paths.check_necessary_condition(t):
            try:
                paths.tableau_to_path(t)
            except paths.TableauError:
                return t
    return None


def run_all(max_weight: int = 12, oeis_mode: str = "offline", cache_dir=None,
            progress: Callable[[CheckResult], None] | None = None) -> list[CheckResult]:
    steps = [
        lambda: check_totals(max_weight),
        check_slices,
        lambda: check_oracle_equivalence(max_weight),
        check_table1,
        check_L_k,
        check_fk_structure,
        check_P_k,
        check_closed_form,
        lambda: check_oeis(oeis_mode, cache_dir),
        check_pdes,
        check_poset,
        check_partial_fractions,
        lambda: check_tableaux(max_weight),
    ]
    results: list[CheckResult] = []
    for step in steps:
        out = step()
        for r in out if isinstance(out, list) else [out]:
            results.append(r)
            if progress is not None:
                progress(r)
    return results
