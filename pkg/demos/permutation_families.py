# Families that share an adjacency basis because they agree around it.
from simdim import (ADJ, is_member_B, load_family, min_generator, sample_members, small_iso,
                    weakly_induced)
from simdim.suite import bundled_suite

fam = load_family(bundled_suite().parent / "figure2.txt")
c8 = fam[0]
B = c8.from_labels({1, 3, 7})

for h in fam[1:]:
    ok, f = is_member_B(h, c8, B)
    print(h.name, ok, [c8.labels[v] for v in f])

print(min_generator(fam, ADJ)[0])

# fresh members: relabel outside B, or also redraw the edges there
for mode in ("relabel", "free-outside"):
    sample = sample_members(c8, B, mode, seed=3, count=6)
    print(mode, min_generator(sample, ADJ)[0],
          all(small_iso(weakly_induced(c8, B), weakly_induced(x, B)) for x in sample))
