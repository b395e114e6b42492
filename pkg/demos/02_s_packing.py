"""
S-packing colorings
====================

Replace the distances 1, 2, 3, ... by any nondecreasing sequence S.  Odd
cycles cannot be colored with S = (2, 3, 4, 5): a counting argument shows
there is not enough room, and the solver agrees.
"""

from packnum import s_packing_color
from packnum.families import cycle_graph, path_graph

spec = (2, 3, 4, 5)
for n in (5, 7, 9, 11):
    room = sum(n // (s + 1) for s in spec)
    print(f"C_{n}: room {room} for {n} vertices ->", s_packing_color(cycle_graph(n), spec))

# even cycles are easy for (1, 1)
print("C_8 with (1,1):", s_packing_color(cycle_graph(8), (1, 1)).colors)

# paths with (1, 2, 3)
col = s_packing_color(path_graph(7), (1, 2, 3))
print("P_7 with (1,2,3):", col.colors)
