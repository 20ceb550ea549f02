import pytest

from simdim import ParseError, bundled_suite, parse_suite, run_suite
from simdim.suite import builtin_graph
from simdim.verify import suite_exit_code


def test_builtin_references():
    assert builtin_graph("P4").n == 4
    assert builtin_graph("K2x3").edge_count() == 6
    assert builtin_graph("N3").edge_count() == 0
    assert builtin_graph("Q3") is None


def test_empty_suite():
    assert run_suite("# nothing here\n\n") == []
    assert suite_exit_code([]) == 0


def test_reports_follow_declared_order():
    text = "scenario b ADIM_FORMULA n=5\nscenario a ADIM_FORMULA n=4\n"
    assert [r.scenario_id for r in run_suite(text)] == ["b", "a"]


def test_falsified_expectation_fails_with_witness():
    (r,) = run_suite("scenario bad SD_CORONA G=K2 H=K2 expect=3\n")
    assert r.status == "FAIL" and r.expected == "3" and r.computed == 2 and r.witness


def test_residue_outside_claim_is_inapplicable():
    reports = run_suite("scenario m MOD5_EXISTS n=8\nscenario ok ADIM_FORMULA n=5\n")
    assert [r.status for r in reports] == ["INAPPLICABLE", "PASS"]
    assert suite_exit_code(reports) == 0


def test_errors_count_as_failure():
    reports = run_suite("scenario e TRANSFER G1=P4 G2=C4 H=P4\n")
    assert reports[0].status == "ERROR" and suite_exit_code(reports) == 1


def test_load_and_sample(tmp_path):
    (tmp_path / "g.txt").write_text("graph T\nn 3\ne 1 2\ne 2 3\nend\n")
    (tmp_path / "s.suite").write_text(
        "load g.txt as tri\n"
        "sample fam T mode=relabel seed=2 count=3 basis=1\n"
        "scenario p PERM_FAMILY G=T basis=1 count=2\n"
        "scenario c COMPLEMENT_INV F=fam\n"
        "scenario r REMARK_BOUNDS F=tri expect=1\n")
    reports = run_suite(tmp_path / "s.suite")
    assert [r.status for r in reports] == ["PASS"] * 3
    assert reports[0].witness == (1,)


@pytest.mark.parametrize("text, line", [
    ("scenario a NOPE n=3\n", 1),
    ("\nscenario a ADIM_FORMULA\n", 2),
    ("scenario a ADIM_FORMULA n=x\n", 1),
    ("scenario a ADIM_FORMULA n=4 m=2\n", 1),
    ("scenario a ADIM_FORMULA n=4\nscenario a ADIM_FORMULA n=5\n", 2),
    ("scenario a SD_CORONA G=Q1 H=K2\n", 1),
    ("scenario a SD_CORONA G=P3,P4 H=K2\n", 1),
    ("load missing.txt\n", 1),
    ("frobnicate\n", 1),
    ("sample s P5 colour=red\n", 1),
    ("scenario a ADIM_FORMULA n\n", 1),
    ("sample s P8 basis=dominating\n", 1),
])
def test_parse_errors_have_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_suite(text, "t.suite")
    assert info.value.line == line


def test_missing_suite_file(tmp_path):
    with pytest.raises(ParseError):
        run_suite(tmp_path / "absent.suite")


def test_bundled_suite_passes():
    reports = run_suite(bundled_suite())
    assert len(reports) >= 60
    assert [r.scenario_id for r in reports if r.status != "PASS"] == []
