import json
import subprocess
import sys

import pytest

from milnorlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_analyze_golden(capsys):
    code, rep = run_json(capsys, "analyze", "--poly", "x*(y^3-x^2)")
    assert code == 0
    assert rep["milnor"] == 7 and rep["flags"]["extremal"] is True


def test_analyze_homogeneous(capsys):
    code, rep = run_json(capsys, "analyze", "--poly", "x^3+y^3")
    assert code == 0 and rep["flags"]["homogeneous"] and rep["milnor"] == 4


def test_analyze_infinite_is_reported(capsys):
    code, rep = run_json(capsys, "analyze", "--poly", "x^2*y^2")
    assert code == 0 and rep["milnor"] == "infinity"


def test_analyze_not_through_origin(capsys):
    code, _, err = run(capsys, "analyze", "--poly", "x+1")
    assert code == 2 and "curve does not pass through origin" in err


def test_analyze_parse_error(capsys):
    code, _, err = run(capsys, "analyze", "--poly", "2x")
    assert code == 2 and "position" in err


def test_text_and_json_agree(capsys):
    _, text, _ = run(capsys, "analyze", "--poly", "x^3+y^4", "--assume-unibranch")
    _, rep = run_json(capsys, "analyze", "--poly", "x^3+y^4", "--assume-unibranch")
    fields = dict(line.split(None, 1) for line in text.splitlines()[:5])
    assert int(fields["milnor"]) == rep["milnor"]
    assert int(fields["order"]) == rep["order"]
    assert int(fields["tangent_count"]) == rep["tangent_count"]
    for name, value in rep["bounds"].items():
        line = next(l for l in text.splitlines() if l.split()[:1] == [name])
        assert line.split()[1] == (str(value) if value is not None else "n/a")


def test_json_has_no_floats(capsys):
    _, out, _ = run(capsys, "verify", "lemmas", "--factor", "x", "--factor", "x+x^2+y^2", "--format", "json")

    def walk(v):
        assert not isinstance(v, float)
        if isinstance(v, dict):
            for w in v.values():
                walk(w)
        elif isinstance(v, list):
            for w in v:
                walk(w)

    walk(json.loads(out, parse_float=float))


def test_verify_characterization_d4(capsys):
    code, rep = run_json(capsys, "verify", "thm1.4", "--factor", "x+x^2+y^2", "--factor", "x+2*x^2+y^2")
    assert code == 0 and rep["i_holds"] and rep["ii_holds"]
    code, rep = run_json(capsys, "verify", "thm1.4", "--factor", "x", "--factor", "y^3-x^2")
    assert code == 0 and rep["i_holds"] and not rep["ii_holds"] and rep["d4_exception"]


def test_verify_characterization_small_degree(capsys):
    code, _, _ = run(capsys, "verify", "thm1.4", "--factor", "x", "--factor", "y")
    assert code == 2


def test_verify_milnor_sum_identity(capsys):
    code, rep = run_json(capsys, "verify", "lemma2.1", "--factor", "x", "--factor", "y")
    assert code == 0 and rep["holds"]


def test_verify_non_coprime(capsys):
    code, _, err = run(capsys, "verify", "lemmas", "--factor", "x", "--factor", "x*y")
    assert code == 2 and "non-isolated singularity" in err


def test_verify_bound_poly(capsys):
    code, rep = run_json(capsys, "verify", "thm1.1", "--poly", "x*(y^3-x^2)")
    assert code == 0 and rep["holds"] and rep["bound"] == 7


def test_verify_cubic_conic(capsys):
    code, rep = run_json(capsys, "verify", "lemma4.1", "--factor", "y^3-x^2", "--factor", "x+x^2+y^2")
    assert code == 0 and rep["i0"] == 3
    code, _, _ = run(capsys, "verify", "lemma4.1", "--factor", "y^2-x^3", "--factor", "x+x^2")
    assert code == 2


def test_verify_missing_factors(capsys):
    code, _, _ = run(capsys, "verify", "lemmas")
    assert code == 2


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "--family", "extremal", "--degree", "5")
    assert code == 0
    assert out.splitlines()[:3] == ["x", "x+x^2+y^2", "x+2*x^2+y^2"] and "mu = 14" in out
    code, rep = run_json(capsys, "generate", "--family", "irreducible-max", "--degree", "5")
    assert rep["factors"] == ["x^4+y^5"] and rep["milnor"] == 12
    code, _, _ = run(capsys, "generate", "--family", "extremal", "--degree", "1")
    assert code == 2


def test_fuzz_empty(capsys):
    code, out, _ = run(capsys, "fuzz", "--trials", "0", "--seed", "1")
    assert code == 0 and "violations: 0" in out


def test_fuzz_bad_config(capsys):
    code, _, _ = run(capsys, "fuzz", "--trials", "3", "--seed", "1", "--coeff-bound", "0")
    assert code == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["analyze"])
    assert info.value.code == 2


def test_fuzz_byte_identical_subprocess():
    cmd = [sys.executable, "-m", "milnorlab", "fuzz", "--trials", "10", "--seed", "42"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == 0
    assert a.stdout == b.stdout and a.stdout


@pytest.mark.slow
def test_fuzz_seed42_500(capsys):
    code, rep = run_json(capsys, "fuzz", "--trials", "500", "--seed", "42")
    assert code == 0 and rep["violations"] == [] and rep["trials_run"] == 500
