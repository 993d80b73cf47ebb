import json
import subprocess
import sys

import pytest

from skeinpoly.cli import JobConfig, main
from skeinpoly.rings import LaurentPoly

from conftest import P, T


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def values(out):
    return [line.split("\t")[0] for line in out.splitlines()]


def test_eval_trefoil_homfly(capsys):
    code, out, _ = run(capsys, "eval", "--braid", "1 1 1", "--invariant", "homfly")
    assert code == 0
    (v,) = values(out)
    assert P(v) == P("-a^4 + 2*a^2 + a^2*z^2")
    assert "strands=2 crossings=3 mu=1" in out


def test_eval_unknot_all(capsys):
    code, out, _ = run(capsys, "eval", "--braid", "", "--strands", "1", "--invariant", "all")
    assert code == 0
    assert values(out) == ["1", "1", "1"]


def test_eval_hopf_jones(capsys):
    code, out, _ = run(capsys, "eval", "--braid", "1 1", "--invariant", "jones")
    assert values(out) == ["-t^(1/2) - t^(5/2)"]
    assert "mu=2" in out


def test_eval_fixed_mu(capsys):
    code, out, _ = run(capsys, "eval", "--braid", "1 -2 1 -2", "--invariant", "alexander",
                       "--algorithm", "fixed-mu")
    assert code == 0 and T(values(out)[0]) == T("3 - t - t^-1")


def test_eval_fixed_mu_needs_single_invariant(capsys):
    code, _, err = run(capsys, "eval", "--braid", "1", "--algorithm", "fixed-mu")
    assert code == 2 and "fixed-mu" in err
    with pytest.raises(ValueError):
        JobConfig(command="eval", invariant="all", algorithm="fixed-mu")


def test_eval_json_round_trip(capsys):
    code, out, _ = run(capsys, "eval", "--braid", "1 -2 1 -2", "--format", "json")
    rec = json.loads(out)
    assert rec["mu"] == 1 and rec["crossings"] == 4
    for name in ("homfly", "jones", "alexander"):
        poly = rec[name]
        from_terms = LaurentPoly.from_json(poly)
        assert LaurentPoly.from_text(poly["text"], half=poly["half_exponent"]) == from_terms


def test_eval_parse_error(capsys):
    code, _, err = run(capsys, "eval", "--braid", "1 0")
    assert code == 2 and "token 1" in err
    code, _, err = run(capsys, "eval", "--braid", "3", "--strands", "3")
    assert code == 2


def test_batch(tmp_path, capsys):
    f = tmp_path / "in.txt"
    f.write_text("1 1 1\n1 -2 1 -2\n")
    code, out, _ = run(capsys, "batch", "--input", str(f))
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert [r["input"] for r in recs] == ["1 1 1", "1 -2 1 -2"]
    assert set(recs[0]) == {"input", "strands", "mu", "homfly", "jones", "alexander"}
    assert P(recs[0]["homfly"]) == P("2*a^2 + a^2*z^2 - a^4")
    assert T(recs[0]["jones"]) == T("-t^4 + t^3 + t")
    assert T(recs[1]["alexander"]) == T("3 - t - t^-1")
    assert P(recs[1]["homfly"]) == P("a^-2 - 1 + a^2 - z^2")


def test_batch_strands_prefix(tmp_path, capsys):
    f = tmp_path / "in.txt"
    f.write_text("strands=4 1 1\n")
    code, out, _ = run(capsys, "batch", "--input", str(f), "--invariant", "homfly")
    rec = json.loads(out)
    assert code == 0 and rec["strands"] == 4 and rec["mu"] == 4


def test_batch_empty(tmp_path, capsys):
    f = tmp_path / "in.txt"
    f.write_text("")
    code, out, _ = run(capsys, "batch", "--input", str(f))
    assert code == 0 and out == ""


def test_batch_bad_line(tmp_path, capsys):
    f = tmp_path / "in.txt"
    f.write_text("0\n1 1\n")
    code, out, err = run(capsys, "batch", "--input", str(f))
    assert code != 0
    assert "line 1" in err
    assert len(out.splitlines()) == 1


def test_batch_missing_file(tmp_path, capsys):
    code, _, _ = run(capsys, "batch", "--input", str(tmp_path / "nope"))
    assert code == 2


def test_reduce_trefoil(capsys):
    code, out, _ = run(capsys, "reduce", "--braid", "1 1 1", "--format", "json")
    doc = json.loads(out)
    terms = {t["word"]: P(t["coefficient"]) for t in doc["terms"]}
    assert terms == {"1": P("2*a^2 + a^2*z^2"), "-1": P("-a^4")}
    assert doc["steps"][0]["rule"] == "normalize_exponent"


def test_reduce_braid_identity(capsys):
    code, out, _ = run(capsys, "reduce", "--braid", "2 1 2", "--strands", "3")
    doc = json.loads(out)
    assert [(t["coefficient"], t["word"]) for t in doc["terms"]] == [("1", "1 2 1")]


def test_reduce_empty(capsys):
    code, out, _ = run(capsys, "reduce", "--braid", "")
    doc = json.loads(out)
    assert [(t["coefficient"], t["word"]) for t in doc["terms"]] == [("1", "")]


def test_check_vacuous(capsys):
    code, out, _ = run(capsys, "check", "--cases", "0")
    assert code == 0
    assert "PASS homogeneity: 2 passed" in out
    assert "I_B: 2 components, II_B: 1 component" in out


def test_check_small_deterministic(capsys):
    code1, out1, _ = run(capsys, "check", "--cases", "5", "--seed", "9", "--oracles")
    code2, out2, _ = run(capsys, "check", "--cases", "5", "--seed", "9", "--oracles")
    assert code1 == code2 == 0
    assert out1 == out2
    assert all(line.startswith("PASS") for line in out1.splitlines())


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skeinpoly", "eval", "--braid", "1 x"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "malformed" in proc.stderr
