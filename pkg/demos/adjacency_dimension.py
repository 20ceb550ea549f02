# Adjacency dimension of small graphs, one step at a time.
from simdim import (ADJ, FULL, Truncated, cycle, enumerate_bases, is_generator, load_family,
                    metric_table, min_generator, path, twin_classes)
from simdim.suite import bundled_suite

p7 = path(7)
print(metric_table(p7, FULL).dist)   # plain distances
print(metric_table(p7, ADJ).dist)    # clamped at 2

# one end vertex is enough for the full metric, not for adjacency
print(min_generator(p7, FULL))
print(min_generator(p7, ADJ))

# every threshold t gives a dimension; t=1 always costs n-1
for t in (1, 2, 3, 6):
    print(t, min_generator(p7, Truncated(t))[0])

# floor((2n+2)/5) for paths and cycles
for n in range(4, 13):
    print(n, min_generator(path(n))[0], min_generator(cycle(n))[0], (2 * n + 2) // 5)

# all bases, lexicographic
print([sorted(b) for b in enumerate_bases(path(5)).bases])

# twins are forced into every generator (all but one per class)
print(twin_classes(cycle(4)))

# three trees on one vertex set
fam = load_family(bundled_suite().parent / "figure1.txt")
g = fam[0]
print(min_generator(fam, ADJ)[0], min_generator(fam, FULL)[0])
print(g.to_labels(min_generator(fam, ADJ)[1]))
print(is_generator(fam, ADJ, g.from_labels({1, 3, 6, 7, 8})))   # False: 5 and 9 collide in G2
print(is_generator(fam, ADJ, g.from_labels({1, 4, 6, 7, 8})))
