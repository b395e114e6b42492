"""
Realizable (omega, chi, chi_rho) triples
========================================

Appending pendant leaves keeps omega and chi but pushes chi_rho up one step
at a time.  Starting from C_5 we reach (2, 3, 5), (2, 3, 6) and (2, 3, 7),
then print the table of known bounds on m(a, b), the least realizable c.
"""

from packnum import MTable, realize_higher, triple_of
from packnum.families import cycle_graph

h = cycle_graph(5)
print("start:", triple_of(h).values())
for c in (5, 6, 7):
    h = realize_higher(h, c)
    print(f"target {c}: {h.n} vertices, triple {triple_of(h).values()}")

print()
print(MTable.seeded().render())
