"""
Packing colorings of small graphs
==================================

A packing coloring gives color i only to vertices pairwise more than i
apart.  We compute the least number of colors for a few familiar graphs
and print the colorings found.
"""

from packnum import Graph, packing_chromatic_number
from packnum.families import complete_graph, cycle_graph, path_graph, star_graph

# cycles: three colors suffice only when 4 divides the length
for n in range(3, 10):
    k, col = packing_chromatic_number(cycle_graph(n))
    print(f"C_{n}: chi_rho = {k}, coloring {col.colors}")

# a star needs just two: the centre alone, the leaves all color 1
k, col = packing_chromatic_number(star_graph(5))
print("K_1,5:", k, col.colors)

# complete graphs need a color per vertex
print("K_6:", packing_chromatic_number(complete_graph(6))[0])

# graphs can be built directly from an edge list too
g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
k, col = packing_chromatic_number(g)
print("house-like graph:", k, col.colors, "valid:", col.verify(g))

# P_4 is 3-packing colorable as 1, 2, 1, 3
print("P_4:", packing_chromatic_number(path_graph(4)))
