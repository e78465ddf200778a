"""
All standard paths, by ones and big parts
=========================================

gamma[n, i, j] counts paths of length n whose endpoint has i parts equal to 1
and j larger parts.  The exponential generating function satisfies a linear
PDE; the boundary value at u = 0 is worth a look.
"""

from npaths import unrestricted

for s in unrestricted.egf_slices(6):
    print(f"x^{s.n}/{s.n}!:", s, " total", s.evaluate())

report = unrestricted.verify_pde_unrestricted(8)
print("PDE holds through x^8:", report.holds)
for side in report.side_conditions:
    print(f"  {side.name}: {side.holds}")
    if side.detail:
        print("    ", side.detail)
