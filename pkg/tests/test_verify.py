from itertools import combinations

import pytest

from simdim import Graph, complete, complete_bipartite, cycle, empty, path
from simdim.verify import (CLAIMS, VerificationReport, check_adim_formula, check_complement_inv,
                           check_f_bounds, check_f_case, check_join, check_join_dominates,
                           check_join_kt, check_mod5, check_nt_union, check_p5c5_example,
                           check_perm_family, check_remark_bounds, check_sd_corona,
                           check_transfer, format_report, suite_exit_code)

import oracles

C5 = Graph.from_edges(5, path(5).edges() + [(0, 4)], "C5")


def count_transfers(g1, g2, h):
    n, e1 = oracles.corona_edges(g1.n, g1.edges(), h.n, h.edges())
    _, e2 = oracles.corona_edges(g2.n, g2.edges(), h.n, h.edges())
    t1, t2 = [oracles.distances(n, e1)], [oracles.distances(n, e2)]
    gens = [S for k in range(n + 1) for S in combinations(range(n), k) if oracles.generates(t1, S)]
    return len(gens), sum(oracles.generates(t2, S) for S in gens)


def test_report_format():
    r = VerificationReport("x", "TRANSFER", "PASS", expected=3, computed=3, witness=(1, 4))
    assert format_report(r) == "PASS x expected=3 computed=3 witness={1,4}"
    r = VerificationReport("y", "MOD5_NONE", "FAIL", expected=False, computed=True)
    assert format_report(r) == "FAIL y expected=false computed=true witness=-"
    assert suite_exit_code([r]) == 1
    assert suite_exit_code([VerificationReport("z", "F_ZERO", "INAPPLICABLE")]) == 0
    assert len(CLAIMS) == 18


@pytest.mark.parametrize("g1, g2", [(path(3), cycle(3)), (cycle(3), path(3)),
                                    (path(3), complete_bipartite(1, 2))])
def test_transfer_against_oracle(g1, g2):
    r = check_transfer(g1, g2, complete(2))
    assert r.passed and (r.expected, r.computed) == count_transfers(g1, g2, complete(2))


def test_transfer_capacity():
    r = check_transfer(path(4), cycle(4), path(4))
    assert r.status == "ERROR" and "exceeds" in r.note


def test_sd_corona_single_graph():
    r = check_sd_corona(complete(2), complete(2))
    assert r.passed and r.computed == 2
    r = check_sd_corona([path(3), cycle(3)], [path(4), cycle(4)], scenario_id="s")
    assert r.passed and r.scenario_id == "s" and r.witnesses["single_G"] == {"P3": 6, "C3": 6}


def test_structural_preconditions():
    assert check_sd_corona(empty(3), path(3)).status == "ERROR"
    assert check_f_bounds(path(3), path(1)).status == "ERROR"


def test_f_cases():
    assert check_f_case(path(2), [path(5), C5], "GAMMAPRIME").computed == 5
    r = check_f_case(path(2), [path(5), C5], "ZERO")
    assert r.status == "INAPPLICABLE" and r.claim == "F_ZERO" and r.scenario_id == "f_zero"
    r = check_f_case([path(3), cycle(3)], [path(5), C5], "GAMMAPRIME")
    assert r.status == "INAPPLICABLE" and "single" in r.note
    assert check_f_case(path(3), path(5), "VMINUS1").status == "INAPPLICABLE"
    r = check_f_case(path(4), complete(2), "SGAMMA")
    assert r.passed and r.f_value == 2
    assert check_f_case(path(2), path(8), "VMINUS1").f_value == 1


def test_f_bounds_range():
    r = check_f_bounds(cycle(4), empty(3))
    assert r.passed and r.f_value == 3 and r.expected == "0..3"


def test_p5c5_example_and_nt_union():
    for k, expected in ((2, 5), (3, 7), (4, 9)):
        r = check_p5c5_example(path(k))
        assert r.passed and r.computed == expected
    r = check_nt_union(path(2), 1, complete(2))
    assert r.passed and r.f_value == 1
    assert check_nt_union(path(2), 1, empty(2)).status == "ERROR"


def test_mod5():
    assert check_mod5(7).claim == "MOD5_EXISTS"
    r = check_mod5(8)
    assert r.passed and r.claim == "MOD5_NONE" and r.witnesses["every_cycle_basis_has_3gap"]
    assert check_mod5(6).status == "INAPPLICABLE"
    assert check_adim_formula(3).status == "INAPPLICABLE"


def test_joins():
    assert check_join_dominates(path(3), cycle(4)).passed
    assert check_join(path(2), path(7), path(7), "SUM").passed
    assert check_join(path(2), path(7), complete(2), "SUM").status == "INAPPLICABLE"
    assert check_join(path(2), complete(2), path(7), "SUM").status == "INAPPLICABLE"
    r = check_join_kt(path(2), 2, path(7))
    assert r.passed and r.claim == "JOIN_KT" and r.computed == 2 * 3 + 2 * 1 + 1


def test_perm_family(figure2):
    c8 = figure2[0]
    r = check_perm_family(c8, 1, basis=c8.from_labels({1, 3, 7}), extra=list(figure2[1:]))
    assert r.passed and r.computed == 3 and r.witness == (1, 3, 7)
    assert check_perm_family(path(10), 4, 0, "relabel").computed == 4
    r = check_perm_family(c8, 1, basis=c8.from_labels({1, 2, 3}))
    assert r.status == "INAPPLICABLE"
    r = check_perm_family(cycle(8), 1, basis={0, 2, 4}, extra=[complete(8)])
    assert r.status == "INAPPLICABLE"


def test_complement_and_bounds(figure1):
    assert check_complement_inv(figure1).passed
    r = check_remark_bounds(figure1)
    assert r.passed and r.computed == 5
    assert check_remark_bounds([empty(3)]).status == "INAPPLICABLE"
