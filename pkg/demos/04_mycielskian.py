"""
The Mycielskian and its packing number
======================================

M(G) doubles G, adds a hub, and raises chi by one.  The packing chromatic
number rises by at least two.  Here we look at the bound report for a few
graphs and at the iterated Mycielskians of K_2.
"""

from packnum import alpha_mycielskian, mycielski_bound_report, mycielski_power, packing_chromatic_number
from packnum.families import complete_bipartite, complete_graph, g_k_ell

for name, g in [("K_4", complete_graph(4)), ("K_3,3", complete_bipartite(3, 3)), ("G_3,4", g_k_ell(3, 4))]:
    rep = mycielski_bound_report(g)
    print(f"{name}: alpha(M)={rep.alpha_m} chi_rho={rep.chi_rho} chi_rho(M)={rep.chi_rho_m}")
    for b in rep.bounds:
        if b.applicable:
            print(f"   {b.name}: {b.lhs} {b.relation} {b.rhs}")

# alpha(M(G)) from independent sets of G alone, with a witness in M(G)
res = alpha_mycielskian(g_k_ell(4, 3))
print("alpha(M(G_4,3)) =", res.value, "witness", res.witness_vertices())

# C_5 and the Groetzsch graph
for k in (1, 2):
    m = mycielski_power(complete_graph(2), k)
    print(f"M^{k}(K_2): n={m.n}, chi_rho={packing_chromatic_number(m)[0]}")
