"""
Compositions, covers and standard paths
=======================================

A composition grows by adding 1 to a part, or by a new part 1 at either
end.  Allowing the new part anywhere gives a larger poset, and the two first
disagree at weight 5.
"""

from npaths import paths, poset

print("covers of (1, 2):", sorted(poset.covers_N((1, 2))))
print("(2,2) <= (2,1,2) in N:", poset.leq("N", (2, 2), (2, 1, 2)))
print("(2,2) <= (2,1,2) in Gamma:", poset.leq("Gamma", (2, 2), (2, 1, 2)))

# Hasse diagram up to weight 3, as DOT
print(poset.export_dot(poset.hasse_graph("N", 3)))

# A standard path is a saturated chain starting at ().  Each one labels the
# cells of its endpoint with the step that created them.
rho = [(), (1,), (1, 1), (1, 2), (1, 1, 2)]
tab = paths.path_to_tableau(rho)
print("tableau columns:", tab.columns)
print("back to the path:", [c.label() for c in paths.tableau_to_path(tab)])

# Not every increasing filling comes from a path
try:
    paths.tableau_to_path([[1], [3], [2]])
except paths.IllegalPeel as exc:
    print("rejected:", exc)

for n in range(8):
    print(n, paths.total_paths(n), dict(list(paths.count_by_stats(n).items())[:4]))
