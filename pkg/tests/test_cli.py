import io
import json
import re
import subprocess
import sys

import pytest

from bmodkit import catalog as C
from bmodkit import cli
from bmodkit import io as bio


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(map(str, argv)), out, err)
    return code, out.getvalue(), err.getvalue()


def write(path, obj):
    path.write_text(json.dumps(obj, ensure_ascii=False))
    return path


@pytest.fixture
def files(tmp_path):
    D = C.diagonal()
    f = {}
    f["Q"] = write(tmp_path / "Q.json", bio.module_to_dict(D.Q, "Q"))
    f["I"] = write(tmp_path / "I.json", bio.module_to_dict(D.I, "I"))
    f["q"] = write(tmp_path / "q.json", {"dom": "I.json", "cod": "Q.json", "map": list(D.q.map)})
    f["seq"] = write(tmp_path / "seq.json", {
        "aprime": {"dom": bio.module_to_dict(D.K), "cod": "I.json", "map": list(D.seq.aprime.map)},
        "adoubleprime": {"dom": "I.json", "cod": "Q.json", "map": list(D.q.map)},
    })
    f["bad"] = write(tmp_path / "bad.json", {"join": [[0, 1, 2, 3], [1, 1, 1, 2], [2, 1, 2, 1], [3, 2, 1, 3]]})
    return f


# ------------------------------------------------------------------ exit codes

def test_validate_ok(files):
    code, out, _ = run("validate", files["Q"])
    assert code == 0 and "valid involutive module with 10 elements" in out


def test_validate_reports_associativity_witness(files):
    code, _, err = run("validate", files["bad"])
    assert code == 1
    assert "associativity" in err and "[1, 1, 3]" in err


def test_limit_exit_code():
    assert run("--limit", "5", "hom", "I", "I")[0] == 2


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["validate"], ["validate", "no-such-file.json"],
                                  ["--limit", "0", "validate", "B"], ["example", "nope"]])
def test_usage_errors(argv):
    assert run(*argv)[0] == 64


def test_non_involutive_input_is_a_failure():
    code, _, err = run("nsb", "chain3")
    assert code == 1 and "sigma" in err


# ------------------------------------------------------------------ commands

def test_ker_and_coker_from_files(files):
    code, out, _ = run("--format", "json", "ker", files["q"])
    assert code == 0 and len(json.loads(out)["members"]) == 10
    code, out, _ = run("--format", "json", "coker", files["q"])
    d = json.loads(out)
    # q is onto, so its cokernel is the fixed part of Q
    assert code == 0 and len(d["elements"]) == 4 and len(d["map"]) == 10
    back = bio.module_from_dict(d)
    assert back.n == 4 and back.is_null()


def test_sequence_commands(files):
    code, out, _ = run("--format", "json", "sdes-validate", files["seq"])
    assert code == 0 and json.loads(out) == {"cokernel_ok": True, "five_term_exact": True, "kernel_ok": True}
    code, out, _ = run("--format", "json", "satellite", files["seq"], "--hom", files["Q"])
    d = json.loads(out)
    assert code == 0 and d["elements"] == 28 and d["null_elements"] == 16 and not d["null"]


def test_broken_sequence_fails(files, tmp_path):
    d = json.loads(files["seq"].read_text())
    d["adoubleprime"]["map"] = [0] * 16
    bad = write(tmp_path / "bad_seq.json", d)
    code, _, err = run("sdes-validate", bad)
    assert code == 1 and "witness" in err


def test_module_round_trip(files, tmp_path):
    code, out, _ = run("--format", "json", "dual", files["Q"])
    d = json.loads(out)
    back = write(tmp_path / "dual.json", d)
    assert run("validate", back)[0] == 0
    assert bio.load_module(back).n == 10


def test_builtins_and_small_commands():
    code, out, _ = run("--format", "json", "hom", "B", "chain3")
    assert json.loads(out)["count"] == 3
    code, out, _ = run("--format", "json", "hom", "--inv", "sB", "Q")
    assert code == 0 and json.loads(out)["count"] == 10
    code, out, _ = run("--format", "json", "nsb", "sB")
    assert json.loads(out)["count"] == 2
    code, out, _ = run("--format", "json", "radical", "chain3")
    assert json.loads(out)["classes"] == [["0", "m"], ["n"]]
    code, out, _ = run("--format", "json", "normal-image", "0,1", "sB")
    assert json.loads(out)["members"] == [0, 1, 2, 3]


def test_support_command(tmp_path):
    mu = C.wedge_functional(C.three_chain())
    f = write(tmp_path / "mu.json", {"dom": "wedge3", "cod": "sB", "map": list(mu.map)})
    code, out, _ = run("--format", "json", "support", f)
    d = json.loads(out)
    assert code == 0 and sorted(d["support"]) == ["0", "n", "n'", "t"]
    assert "kernel" in d


def test_dot_output(tmp_path):
    target = tmp_path / "q.dot"
    code, out, _ = run("dot", "Q", "-o", target)
    text = target.read_text()
    assert code == 0 and "10 nodes" in out
    assert len(re.findall(r"^  n\d+ \[", text, re.M)) == 10
    assert text.count("shape=ellipse") == 4


def test_examples_and_paper_check():
    assert run("example", "s3")[0] == 0
    code, out, _ = run("paper-check")
    assert code == 0 and out.rstrip().endswith("85/85 claims reproduced")


def test_sweep_is_seeded():
    a = run("--seed", "3", "--format", "json", "sweep", "--count", "10")
    b = run("--seed", "3", "--format", "json", "sweep", "--count", "10")
    assert a == b and a[0] == 0


def test_byte_identical_across_processes(files):
    argv = [sys.executable, "-m", "bmodkit", "--format", "json", "coker", str(files["q"])]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first


def test_cli_config_rejects_bad_limit():
    with pytest.raises(ValueError):
        cli.CliConfig(limit=0)
