# Corona products and the excess f = Sd_A(G ⊙ H) - |V| Sd_A(H).
from simdim import (ADJ, FULL, Graph, corona, cycle, family_corona, gamma_prime, min_generator,
                    path, premise_profile)
from simdim.verify import check_f_case, format_report

g, h = cycle(4), path(3)
prod = corona(g, h)
print(prod.name, prod.n, prod.edge_count())

# metric dimension of a corona only sees the adjacency dimension of H
print(min_generator(prod, FULL)[0], g.n * min_generator(h, ADJ)[0])

# the same holds for families, whichever first factor is used
gs, hs = [path(3), cycle(3)], [path(4), cycle(4)]
print(min_generator(family_corona(gs, hs), FULL)[0],
      [min_generator(family_corona(x, hs), FULL)[0] for x in gs])

# under the adjacency metric an excess appears
c5 = Graph.from_edges(5, path(5).edges() + [(0, 4)], "C5")
pc = [path(5), c5]
print(premise_profile(pc))
for k in (2, 3, 4):
    total = min_generator(family_corona(path(k), pc), ADJ)[0]
    print(k, total, total - 2 * k, gamma_prime(path(k)))

# the case checks certify premises before comparing
print(format_report(check_f_case(path(3), pc, "GAMMAPRIME")))
print(format_report(check_f_case(path(3), pc, "ZERO")))
