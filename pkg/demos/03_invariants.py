"""
Clique number, chromatic number, independence number
====================================================

Every graph satisfies omega <= chi <= chi_rho.  ``invariant_report`` computes
all of them exactly and checks the two packing bounds built from alpha.
"""

from packnum import invariant_report
from packnum.families import cycle_graph, h_class, k_n_minus_star

for name, g in [("C_5", cycle_graph(5)), ("H(4,3)", h_class(4, 3)), ("K_6 - K_1,2", k_n_minus_star(6, 2))]:
    rep = invariant_report(g)
    print(f"{name}: n={rep.n} omega={rep.omega} chi={rep.chi} alpha={rep.alpha} chi_rho={rep.chi_rho}")
    for b in rep.bounds:
        print(f"   {b.name}: {b.lhs} {b.relation} {b.rhs}  holds={b.holds} tight={b.tight}")
