import numpy as np
from hypothesis import assume, given, settings, strategies as st

from simdim import (ADJ, FULL, Graph, GraphFamily, Truncated, complement, corona, diameter,
                    enumerate_bases, family_corona, format_graphs, is_connected, is_generator,
                    metric_table, min_generator, parse_graphs, sample_members, small_iso,
                    twin_classes, weakly_induced)
from simdim.graph import to_mask
from simdim.verify import check_transfer


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph.from_edges(n, [p for p, f in zip(pairs, flags) if f])
    if connected:
        assume(is_connected(g))
    return g


@st.composite
def families(draw, min_n=2, max_n=7, size=3):
    first = draw(graphs(min_n, max_n))
    rest = draw(st.lists(graphs(first.n, first.n), max_size=size - 1))
    return GraphFamily((first, *rest))


def subsets(n):
    return st.sets(st.integers(0, n - 1), max_size=n)


common = settings(max_examples=60, deadline=None)


@common
@given(graphs(), st.integers(1, 6))
def test_metric_tables_are_symmetric_and_monotone(g, t):
    low = metric_table(g, Truncated(t)).dist
    high = metric_table(g, Truncated(t + 1)).dist
    assert np.array_equal(low, low.T) and not np.diag(low).any()
    assert (high >= low).all() and low.max(initial=0) <= t


@common
@given(graphs(connected=True))
def test_truncation_at_diameter_is_full(g):
    d = max(diameter(g), 1)
    assert np.array_equal(metric_table(g, Truncated(d)).dist, metric_table(g, FULL).dist)


@common
@given(graphs())
def test_double_complement(g):
    assert complement(complement(g)) == g


@common
@given(families(), st.integers(1, 4), st.data())
def test_generators_are_monotone_in_t_and_upward_closed(family, t, data):
    S = data.draw(subsets(family.n))
    if is_generator(family, Truncated(t), S):
        assert is_generator(family, Truncated(t + 1), S)
        if all(is_connected(g) for g in family):
            assert is_generator(family, FULL, S)
        extra = data.draw(subsets(family.n))
        assert is_generator(family, Truncated(t), S | extra)


@common
@given(graphs(min_n=2))
def test_threshold_one(g):
    assert min_generator(g, Truncated(1))[0] == g.n - 1


@common
@given(graphs(min_n=2))
def test_complement_keeps_adjacency_dimension(g):
    assert min_generator(g, ADJ)[0] == min_generator(complement(g), ADJ)[0]


@common
@given(families())
def test_remark_bounds(family):
    sd_a, _ = min_generator(family, ADJ)
    assert max(min_generator(g, ADJ)[0] for g in family) <= sd_a <= family.n - 1
    if all(is_connected(g) for g in family):
        assert min_generator(family, FULL)[0] <= sd_a


@common
@given(families(), st.data())
def test_twin_forcing(family, data):
    bases = enumerate_bases(family, ADJ).bases
    S = data.draw(st.sampled_from(bases)) | data.draw(subsets(family.n))
    for g in family:
        for cls in twin_classes(g):
            assert len(cls.members - S) <= 1


@settings(max_examples=15, deadline=None)
@given(graphs(2, 3, connected=True), st.data())
def test_transfer_exhaustive(g1, data):
    g2 = data.draw(graphs(g1.n, g1.n, connected=True))
    h = data.draw(graphs(2, 14 // g1.n - 1))
    report = check_transfer(g1, g2, h, max_order=14)
    assert report.passed, report.witness


@settings(max_examples=30, deadline=None)
@given(graphs(1, 4, connected=True), graphs(2, 4))
def test_corona_root_degree_and_dimension(g, h):
    prod = corona(g, h)
    assert all(prod.degree(i) == g.degree(i) + h.n for i in range(g.n))
    if g.n >= 2:
        assert min_generator(prod, FULL)[0] == g.n * min_generator(h, ADJ)[0]


@settings(max_examples=20, deadline=None)
@given(st.lists(graphs(3, 3, connected=True), min_size=1, max_size=3), families(2, 3, 2))
def test_corollary_any_single_first_factor(gs, hs):
    value = min_generator(family_corona(gs, hs), FULL)[0]
    assert all(min_generator(family_corona(g, hs), FULL)[0] == value for g in gs)
    f = min_generator(family_corona(gs, hs), ADJ)[0] - 3 * min_generator(hs, ADJ)[0]
    assert 0 <= f <= 2


@settings(max_examples=30, deadline=None)
@given(graphs(2, 8), st.integers(0, 10**6), st.sampled_from(["relabel", "free-outside"]))
def test_permutation_family_theorem(g, seed, mode):
    k, B = min_generator(g, ADJ)
    assume(B)
    fam = sample_members(g, B, mode, seed, 4)
    assert is_generator(fam, ADJ, B)
    assert min_generator(fam, ADJ)[0] == k
    reference = weakly_induced(g, B)
    assert all(small_iso(reference, weakly_induced(h, B)) for h in fam)


@common
@given(st.lists(graphs(), min_size=1, max_size=4))
def test_text_round_trip(gs):
    assert parse_graphs(format_graphs(gs)) == gs


@common
@given(graphs(2, 8))
def test_mask_and_set_generators_agree(g):
    _, B = min_generator(g, ADJ)
    assert is_generator(g, ADJ, B) == is_generator(g, ADJ, to_mask(B))
