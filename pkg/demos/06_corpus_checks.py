"""
Checking statements on every small connected graph
==================================================

``check_theorems`` evaluates each statement on all connected graphs up to a
given order and reports VERIFIED_ON_CORPUS or the violating graphs.  A
search for the pattern (3, 5, 6) finds nothing up to order 7.
"""

from packnum import check_theorems, search_counterexample
from packnum.enumeration import enumerate_connected_upto

corpus = list(enumerate_connected_upto(6))
print(len(corpus), "connected graphs with at most 6 vertices")
for r in check_theorems(corpus, "all"):
    print(f"{r.theorem_id:6} {r.status.value:20} applicable {r.applicable}")

res = search_counterexample((3, 5, 6), enumerate_connected_upto(7))
print("pattern (3,5,6):", res.witness or "NONE", "after", res.scanned, "graphs")
