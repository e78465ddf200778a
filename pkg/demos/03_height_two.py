"""
Paths of height at most two
===========================

c[i, j] counts height-2 paths ending with i ones and j twos.  Column j has
generating function P_j, and the bivariate series sum c[i,j] x^i y^j / j!
equals 2 / (1 + sqrt(1 - 4(y + x - x^2))).
"""

from math import factorial

from npaths import height2

table = height2.c2_table(6, 5)
for i in range(7):
    print(i, [table[(i, j)] for j in range(6)])

for k in range(1, 5):
    b = height2.P_k_ratfn(k)
    print(f"P_{k} = {b.factorial} (1-x)^-{k + 1} (1-2x)^-{2 * k - 1} ({b.Q})")

P = height2.P_closed_series(10)
print("from the closed form:", [P[(i, 3)] * factorial(3) for i in range(5)])
print("PDE checks:", {k: bool(v) for k, v in height2.verify_pde_height2(10).items()})

for n in range(6):
    print(n, height2.c2_closed_forms(n))
