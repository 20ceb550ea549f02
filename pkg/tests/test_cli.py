import subprocess
import sys

import pytest

from simdim import (ADJ, complete, cycle, disjoint_union, is_member_B, load_family, load_graph,
                    parse_graphs, path, save_graphs)
from simdim.cli import main

import oracles


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path, figure2):
    paths = {}
    for name, g in {"c8": figure2[0], "p6": path(6), "k5": complete(5), "p2": path(2),
                    "p10": path(10), "split": disjoint_union(path(2), path(2))}.items():
        paths[name] = tmp_path / f"{name}.txt"
        save_graphs(paths[name], [g])
    return paths


def test_dim(capsys, files):
    assert run(capsys, "dim", files["c8"], "--metric", "adj") == (0, "dim=3 basis={1,3,5}\n", "")
    k, S = oracles.min_generator([(8, cycle(8).edges())], t=2)
    assert (k, sorted(S)) == (3, [0, 2, 4])
    assert run(capsys, "dim", files["p6"], "--metric", "full")[1] == "dim=1 basis={0}\n"
    assert run(capsys, "dim", files["p6"], "--metric", "t=1")[1].startswith("dim=5 ")


def test_sdim(capsys, data_dir):
    assert run(capsys, "sdim", data_dir / "figure1.txt")[1] == "sdim=5 basis={1,3,7,8,9}\n"
    assert run(capsys, "sdim", data_dir / "figure1.txt", "--metric", "full")[1] == \
        "sdim=4 basis={1,6,7,8}\n"


def test_sdim_of_singleton_equals_dim(capsys, files):
    single = run(capsys, "sdim", files["c8"])[1]
    assert single.replace("sdim=", "dim=") == run(capsys, "dim", files["c8"])[1]


def test_gamma(capsys, files):
    assert run(capsys, "gamma", files["k5"])[1] == "gamma=1 witness={0}\n"
    assert run(capsys, "gamma", files["p2"], "--variant", "gamma-prime")[1].startswith("gamma_prime=1 ")
    assert run(capsys, "gamma", files["p6"], "--variant", "sgamma")[1] == \
        run(capsys, "gamma", files["p6"])[1].replace("gamma=", "sgamma=")


def test_product(capsys, tmp_path, data_dir):
    out = tmp_path / "prod.txt"
    code, _, _ = run(capsys, "product", "--op", "corona", data_dir / "c4.txt",
                     data_dir / "k1_k2.txt", "--out", out)
    assert code == 0
    assert load_graph(out) == parse_graphs((data_dir / "figure3.txt").read_text())[0]
    n1 = tmp_path / "n1.txt"
    n1.write_text("graph N1\nn 1\nend\n")
    code, text, _ = run(capsys, "product", "--op", "join", n1, n1)
    assert code == 0 and parse_graphs(text)[0] == complete(2)


def test_family_gen(capsys, files, tmp_path):
    code, text, _ = run(capsys, "family", "gen", files["p10"], "--count", "1")
    assert code == 0 and list(parse_graphs(text)) == [path(10)]
    out = tmp_path / "fam.txt"
    argv = ["family", "gen", files["p10"], "--basis", "dominating", "--seed", "9", "--count", "4",
            "--out", out]
    assert run(capsys, *argv)[0] == 0
    first = out.read_bytes()
    run(capsys, *argv)
    assert out.read_bytes() == first
    fam = load_family(out)
    B = path(10).from_labels([1, 3, 6, 8])
    assert len(fam) == 4 and all(is_member_B(h, path(10), B)[0] for h in fam)


def test_verify_exit_codes(capsys, tmp_path):
    code, out, _ = run(capsys, "verify")
    assert code == 0 and out.count("\n") >= 60 and "FAIL" not in out
    bad = tmp_path / "bad.suite"
    bad.write_text("scenario wrong ADIM_FORMULA n=7 expect=4\n")
    code, out, _ = run(capsys, "verify", bad)
    assert code == 1 and out.startswith("FAIL wrong expected=4 computed=3 witness=")
    assert run(capsys, "verify", tmp_path / "absent.suite")[0] == 2
    bad.write_text("scenario x ADIM_FORMULA\n")
    code, _, err = run(capsys, "verify", bad)
    assert code == 2 and "bad.suite:1:" in err


def test_error_exit_codes(capsys, files, data_dir):
    assert run(capsys, "dim", files["split"], "--metric", "full")[0] == 3
    assert run(capsys, "dim", files["p10"], "--budget", "3")[0] == 4
    assert run(capsys, "dim", data_dir / "figure2.txt")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["dim", str(files["p6"]), "--metric", "geo"])
    assert info.value.code == 2


def test_console_script(data_dir):
    proc = subprocess.run([sys.executable, "-m", "simdim.cli", "sdim", str(data_dir / "figure2.txt")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "sdim=3 basis={1,3,7}\n"
