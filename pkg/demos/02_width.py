"""
Paths of fixed width
====================

Restricting to endpoints with k parts gives a rational generating function
L_k(t) with denominator (1-t)(1-2t)...(1-kt).
"""

from npaths import width

for k in range(1, 6):
    b = width.L_k_ratfn(k, terms=10)
    print(f"L_{k} = ({b.L.num}) / ({b.L.den})")
    print("   coefficients:", b.coefficients)

# Numerator of f_3 after clearing the known denominator
report = width.verify_fk_structure(3, 12)
print("f_3 numerator has", len(report.numerator), "terms; structure holds:", bool(report))

# Partial fractions give an exact closed form and the growth rate
for k in (2, 3, 4):
    cf = width.a_nk_closed_form(k, 20)
    print(f"k={k}: a_20 = {cf.value}, weights {dict((j, str(w)) for j, w in cf.weights.items())}")
    print("   v_kk =", cf.product_leading, " a_(n+k),k / k^n ->", cf.growth_constant)
    for n in (10, 15, 20, 25):
        err = width.asymptotic_relative_error(k, n, cf.growth_constant)
        print(f"   n={n}: relative error {float(err):.3e}")
