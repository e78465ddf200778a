"""
Cross-checking against the OEIS and driving the CLI
===================================================

The first row of the height-2 table is (2n)!/(n+1)!, sequence A001761.  A
b-file for it ships with the package, so the check runs without a network.
"""

from npaths import height2
from npaths.cli import run
from npaths.oeis import oeis_check

produced = [height2.c0(n) for n in range(20)]
print(oeis_check("A001761", produced, mode="offline", start=0))

produced[4] += 1
print(oeis_check("A001761", produced, mode="offline", start=0))

# the same through the command line front end
run(["paths", "count", "--n", "4", "--group-by", "stats", "--format", "json"])
run(["oeis", "check", "--id", "A001761", "--against", "c1n", "--offline"])
run(["hasse", "--poset", "Gamma", "--max-weight", "2", "--format", "text"])
