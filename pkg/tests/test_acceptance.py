"""Acceptance criteria, one test each, against frozen reference values.

Each test records a PASS/FAIL line (printed in the terminal summary) and then
asserts.  Reference values are literals here so that a regression in the
library's own tables can not mask itself.
"""

from collections import Counter
from fractions import Fraction
from math import factorial

from npaths import height2, paths, poset, unrestricted, width
from npaths.exact import Polynomial, RationalFunction
from npaths.oeis import oeis_check
from npaths.verify import figure1_edges, increasing_tableaux

t = Polynomial([0, 1])

TOTALS = [1, 1, 2, 6, 23, 103, 518, 2868, 17263, 111925]

SLICES = [
    {(0, 0): 1},
    {(1, 0): 1},
    {(2, 0): 1, (0, 1): 1},
    {(3, 0): 1, (0, 1): 1, (1, 1): 4},
    {(4, 0): 1, (0, 1): 1, (1, 1): 6, (2, 1): 11, (0, 2): 4},
    {(5, 0): 1, (0, 1): 1, (1, 1): 8, (2, 1): 23, (3, 1): 26, (0, 2): 14, (1, 2): 30},
]

TABLE1 = [
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

F3_NUMERATOR = {
    (2, 2, 1): 1, (2, 1, 2): 1, (1, 3, 1): 1, (1, 2, 2): 1,
    (2, 2, 0): -1, (2, 1, 1): -4, (2, 0, 2): -1, (1, 3, 0): -1,
    (1, 2, 1): -7, (1, 1, 2): -4, (0, 3, 1): -1, (0, 2, 2): -1,
    (2, 1, 0): 2, (2, 0, 1): 2, (1, 2, 0): 5, (1, 1, 1): 12,
    (1, 0, 2): 2, (0, 3, 0): 1, (0, 2, 1): 5, (0, 1, 2): 2,
    (1, 1, 0): -5, (1, 0, 1): -4, (0, 2, 0): -3, (0, 1, 1): -5,
    (0, 1, 0): 1, (0, 0, 0): 1,
}


def _prod(k):
    out = Polynomial([1])
    for i in range(1, k + 1):
        out = out * (1 - i * t)
    return out


L_DISPLAYS = {
    1: RationalFunction(t, 1 - t),
    2: RationalFunction(t**2 * (1 + t), _prod(2)),
    3: RationalFunction(t**3 * (1 + 5 * t - 2 * t**2), _prod(3)),
    4: RationalFunction(t**4 * (1 + 16 * t - 15 * t**2 + 6 * t**3), _prod(4)),
    5: RationalFunction(t**5 * (1 + 42 * t - 65 * t**2 + 62 * t**3 - 24 * t**4), _prod(5)),
}

P_DISPLAYS = {
    1: RationalFunction(1, (1 - t) ** 2 * (1 - 2 * t)),
    2: RationalFunction(2 * (2 - 3 * t), (1 - t) ** 3 * (1 - 2 * t) ** 3),
    3: RationalFunction(6 * (5 - 14 * t + 10 * t**2), (1 - t) ** 4 * (1 - 2 * t) ** 5),
    4: RationalFunction(24 * (14 - 56 * t + 76 * t**2 - 35 * t**3), (1 - t) ** 5 * (1 - 2 * t) ** 7),
}


def test_criterion_01_totals(criterion):
    brute = [len(paths.enumerate_paths(n)) for n in range(10)]
    rec = unrestricted.total_counts(9)
    ok = brute == TOTALS and rec == TOTALS
    criterion("1", ok, f"brute force {brute}; recurrence {rec}")
    assert ok


def test_criterion_02_egf_slices(criterion):
    got = [s.coeffs for s in unrestricted.egf_slices(5)]
    ok = got == SLICES
    criterion("2", ok, f"x^4 bracket {unrestricted.egf_slices(4)[4]}")
    assert ok


def test_criterion_03_oracle_equivalence(criterion):
    bad = []
    n_comps = 0
    for n in range(13):
        dp = paths.count_by_endpoint(n)
        brute = paths.brute_force_endpoint_counts(n)
        for p in poset.compositions(n):
            n_comps += 1
            vals = {dp.get(p, 0), brute.get(p, 0), width.shape_count(p)}
            if len(vals) != 1:
                bad.append(p)
    cells = 0
    for n in range(15):
        table = height2.c2_table(n, n // 2)
        stats = paths.count_by_stats(n, height_bound=2)
        for j in range(n // 2 + 1):
            i = n - 2 * j
            cells += 1
            if stats.get((i, j), 0) != table[(i, j)]:
                bad.append((i, j))
    ok = not bad
    criterion("3", ok, f"{n_comps} compositions of weight <= 12, {cells} height-2 cells; mismatches {bad[:3]}")
    assert ok


def test_criterion_04_table1(criterion):
    table = height2.c2_table(8, 7)
    bad = [
        (i, j)
        for i, row in enumerate(TABLE1)
        for j, v in enumerate(row)
        if table[(i, j)] != v
    ]
    spot = (table[(0, 7)], table[(2, 2)], table[(3, 3)], table[(8, 4)])
    ok = not bad and spot == (2162160, 138, 10800, 337239840)
    criterion("4", ok, f"{sum(map(len, TABLE1))} entries; c07, c22, c33, c84 = {spot}")
    assert ok


def test_criterion_05_L_k(criterion):
    displays = all(width.L_k_ratfn(k).L == L_DISPLAYS[k] for k in range(1, 6))
    tilde = all(
        width.L_k_ratfn(k).L_tilde(1) == 2 ** (k - 1) and width.L_k_ratfn(k).L_tilde.degree == k - 1
        for k in range(1, 13)
    )
    ok = displays and tilde
    criterion("5", ok, f"L_1..L_5 displays {displays}; L~_k(1) = 2^(k-1), deg k-1 for k <= 12: {tilde}")
    assert ok


def test_criterion_06_fk_structure(criterion):
    reports = {k: width.verify_fk_structure(k, 12) for k in (1, 2, 3)}
    f2 = reports[2].numerator == {(0, 0): 1, (1, 1): -1}
    f3 = reports[3].numerator == {e: Fraction(c) for e, c in F3_NUMERATOR.items()}
    ok = all(reports.values()) and f2 and f3
    criterion("6", ok, f"structure k=1,2,3 {[bool(r) for r in reports.values()]}; f2 numerator 1 - x1x2 {f2}; f3 numerator {f3}")
    assert ok


def test_criterion_07_P_k(criterion):
    displays = all(height2.P_k_ratfn(k).P == P_DISPLAYS[k] for k in range(1, 5))
    qs = [height2.P_k_ratfn(k).Q for k in range(1, 11)]
    props = all(
        Q(1) == (-1) ** (k + 1) and Q.degree == k - 1 and Q.is_primitive_integral()
        for k, Q in enumerate(qs, 1)
    )
    ok = displays and props
    criterion("7", ok, f"P_1..P_4 displays {displays}; Q_k(1), degree, primitivity for k <= 10: {props}")
    assert ok


def test_criterion_08_closed_form(criterion):
    D = 16
    closed = height2.P_closed_series(D)
    table = height2.c2_table(D, D // 2)
    cells = [(i, j) for i in range(D + 1) for j in range(D // 2 + 1) if i + 2 * j <= D]
    bad = [(i, j) for i, j in cells if closed[(i, j)] * factorial(j) != table[(i, j)]]
    ok = not bad
    criterion("8", ok, f"{len(cells)} cells with i + 2j <= {D}; mismatches {bad[:3]}")
    assert ok


def test_criterion_09_oeis_and_closed_forms(criterion):
    c0 = [factorial(2 * n) // factorial(n + 1) for n in range(20)]
    report = oeis_check("A001761", c0, mode="offline", start=0)
    table = height2.c2_table(2, 20)
    rows = all(
        height2.c2_closed_forms(n) == (table[(0, n)], table[(1, n)], table[(2, n)])
        and table[(1, n)] == c0_at(n + 1)
        and 2 * table[(2, n)] == c0_at(n + 2) - 2 * c0_at(n + 1)
        for n in range(21)
    )
    ok = report.matched and report.compared == 20 and rows
    criterion("9", ok, f"{report}; c1n and c2n identities for n <= 20: {rows}")
    assert ok


def c0_at(n):
    return factorial(2 * n) // factorial(n + 1)


def test_criterion_10_pdes(criterion):
    h2 = height2.verify_pde_height2(10)
    unr = unrestricted.verify_pde_unrestricted(10)
    boundary = next(s for s in unr.side_conditions if s.name.startswith("H(0,v,x)"))
    ok = (
        bool(h2["closed_form"])
        and bool(h2["table"])
        and unr.holds
        and not boundary.holds
        and boundary.oracle_matches
        and "exp(x) - 1 - x" in boundary.detail
    )
    criterion("10", ok, f"height-2 PDE {bool(h2['closed_form'])}/{bool(h2['table'])}; "
              f"unrestricted PDE {unr.holds}; boundary: {boundary.detail}")
    assert ok


def test_criterion_11_poset(criterion):
    n4 = poset.hasse_graph("N", 4).edge_set()
    g4 = poset.hasse_graph("Gamma", 4).edge_set()
    edge = (poset.Composition((2, 2)), poset.Composition((2, 1, 2)))
    g5 = poset.hasse_graph("Gamma", 5).edge_set()
    n5 = poset.hasse_graph("N", 5).edge_set()
    ok = (
        n4 == g4 == figure1_edges()
        and edge in g5
        and edge not in n5
        and poset.leq("Gamma", (2, 2), (2, 1, 2))
        and not poset.leq("N", (2, 2), (2, 1, 2))
    )
    criterion("11", ok, f"weight <= 4: {len(n4)} edges, equal to the figure; (2,2)->(2,1,2) in Gamma only")
    assert ok


def test_criterion_12a_leading_coefficient(criterion):
    got = {k: width.a_nk_closed_form(k, k).product_leading for k in range(1, 9)}
    ok = all(got[k] == Fraction(k ** (k - 1), factorial(k - 1)) for k in got)
    criterion("12a", ok, f"v_kk for k <= 8: {[str(v) for v in got.values()]}")
    assert ok


def test_criterion_12b_closed_form_vs_series(criterion):
    bad = []
    for k in range(1, 7):
        coeffs = width.L_k_ratfn(k, terms=31).coefficients
        bad += [(k, n) for n in range(31) if width.a_nk_closed_form(k, n).value != coeffs[n]]
    ok = not bad
    criterion("12b", ok, f"k <= 6, n <= 30; mismatches {bad[:3]}")
    assert ok


def test_criterion_12c_asymptotic_relative_error(criterion):
    # |a_{n+k,k} / (v_kk k^n) - 1| must shrink monotonically on n = 10..25.
    # The limit of the ratio is L~_k(1/k), not 1, so this does not hold.
    details = []
    ok = True
    for k in (2, 3, 4):
        errs = [width.asymptotic_relative_error(k, n) for n in range(10, 26)]
        mono = all(a > b for a, b in zip(errs, errs[1:]))
        ok = ok and mono
        details.append(f"k={k}: err(10)={float(errs[0]):.6g}, err(25)={float(errs[-1]):.6g}")
    criterion("12c", ok, "; ".join(details))
    assert ok


def test_criterion_13_tableau_bijection(criterion):
    round_trips = 0
    for n in range(10):
        for p in paths.enumerate_paths(n):
            assert paths.tableau_to_path(paths.path_to_tableau(p)) == p
            round_trips += 1
    witness = None
    images = {paths.path_to_tableau(p) for p in paths.enumerate_paths(5)}
    for tab in increasing_tableaux(5):
        if paths.check_necessary_condition(tab) and tab not in images:
            try:
                paths.tableau_to_path(tab)
            except paths.TableauError:
                witness = tab.columns
                break
    ok = round_trips == sum(TOTALS) and witness is not None
    criterion("13", ok, f"{round_trips} paths round-trip; witness {witness}")
    assert ok
