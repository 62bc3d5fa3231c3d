import io
import json
import os
import subprocess
import sys

from tiltbench.cli import main

CORPUS = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "corpus"))


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "tiltbench.cli", *args],
        capture_output=True,
        text=True,
        cwd=CORPUS,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_alg_check_matches_golden():
    code, out, err = run_cli("alg", "check", "sec5_A.json")
    assert code == 0, err
    with open(os.path.join(CORPUS, "golden", "alg_check_sec5_A.json")) as fh:
        assert out == fh.read()


def test_alg_check_text_loewy():
    code, out, _ = run_cli("--format", "text", "alg", "check", "sec5_A.json")
    assert code == 0
    assert "P(1): 1 / 2 / 1" in out
    assert "P(2): 2 / {1,3}" in out
    assert "P(3): 3 / {2,4} / 3" in out
    assert "P(4): 4 / 3 / 4" in out


def test_nust_exit_zero_and_golden():
    code, out, _ = run_cli("nust", "fig1.json")
    assert code == 0
    with open(os.path.join(CORPUS, "golden", "nust_fig1.json")) as fh:
        assert out == fh.read()
    payload = json.loads(out)
    assert payload["E"] == ["2", "3"]


def test_tilting_verify_positive_and_negative():
    code, out, _ = run_cli("tilting", "verify", "fig1.json", "fig1_T.json")
    assert code == 0
    # doubled complex: build it on the fly
    from tiltbench import corpus as c
    from tiltbench import serialize

    t = c.fig1_tilting_complex()
    doubled = t.direct_sum(t)
    path = os.path.join(CORPUS, "_tmp_doubled.json")
    serialize.save(serialize.complex_to_dict(doubled, algebra_ref="fig1.json"), path)
    try:
        code2, out2, _ = run_cli("tilting", "verify", "fig1.json", "_tmp_doubled.json")
        assert code2 == 1
        payload = json.loads(out2)
        assert payload["basic"] is False
    finally:
        os.remove(path)


def test_nustable_check_exit_zero():
    code, out, _ = run_cli("nustable", "check", "fig1.json", "fig1_T.json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] is True


def test_construct_deterministic_and_matches_golden():
    code1, out1, _ = run_cli(
        "tilting", "construct", "sec5_A.json", "--p", "1", "--q", "3,4", "-r", "1", "-s", "1"
    )
    code2, out2, _ = run_cli(
        "tilting", "construct", "sec5_A.json", "--p", "1", "--q", "3,4", "-r", "1", "-s", "1"
    )
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical across invocations
    with open(os.path.join(CORPUS, "golden", "sec5_T.json")) as fh:
        golden = fh.read()
    # the golden was produced with an algebra reference omitted (inline);
    # compare parsed structure except the algebra payload
    a, b = json.loads(out1), json.loads(golden)
    assert a["terms"] == b["terms"]
    assert a["diffs"] == b["diffs"]


def test_construct_precondition_exit_two():
    code, out, err = run_cli(
        "tilting", "construct", "sec5_A.json", "--p", "1", "--q", "2", "-r", "1", "-s", "1"
    )
    assert code == 2
    assert "precondition" in err


def test_stable_image_positive_and_not_concentrated():
    code, out, _ = run_cli("stable-image", "fig1.json", "fig1_T.json", "fig1_S1.json")
    assert code == 0
    payload = json.loads(out)
    assert payload["concentrated"] is True
    assert payload["hom_dimension"] == 1
    # P(1) as a module file: not concentrated
    from tiltbench import corpus as c
    from tiltbench import serialize
    from tiltbench.reps import projective

    p1 = projective(c.fig1_algebra(), "1")
    path = os.path.join(CORPUS, "_tmp_p1.json")
    serialize.save(serialize.module_to_dict(p1, algebra_ref="fig1.json"), path)
    try:
        code2, out2, _ = run_cli("stable-image", "fig1.json", "fig1_T.json", "_tmp_p1.json")
        assert code2 == 1
        payload2 = json.loads(out2)
        assert payload2["concentrated"] is False
        assert sum(payload2["profile"]["1"]) == 2
    finally:
        os.remove(path)


def test_parse_error_exit_two():
    code, out, err = run_cli("alg", "check", "no_such_file.json")
    assert code == 2


def test_recheck_golden_reports():
    cases = [
        ("golden/nust_fig1.json", ["--alg", "fig1.json"]),
        ("golden/tilting_verify_fig1_T.json", ["--alg", "fig1.json", "--cpx", "fig1_T.json"]),
        ("golden/nustable_check_fig1_T.json", ["--alg", "fig1.json", "--cpx", "fig1_T.json"]),
        (
            "golden/stable_image_fig1_S1.json",
            ["--alg", "fig1.json", "--cpx", "fig1_T.json", "--mod", "fig1_S1.json"],
        ),
        ("golden/alg_check_fig1.json", ["--alg", "fig1.json"]),
        ("golden/sec5_T.json", ["--alg", "sec5_A.json"]),
    ]
    for report, extra in cases:
        code, out, err = run_cli("recheck", report, *extra)
        assert code == 0, (report, err, out)
        assert json.loads(out)["matches"] is True


def test_recheck_detects_tampering(tmp_path):
    with open(os.path.join(CORPUS, "golden", "nust_fig1.json")) as fh:
        payload = json.load(fh)
    payload["E"] = ["1"]
    bad = tmp_path / "tampered.json"
    bad.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    code, out, _ = run_cli("recheck", str(bad), "--alg", "fig1.json")
    assert code == 1
    assert json.loads(out)["matches"] is False


def test_main_in_process_exit_codes():
    alg = os.path.join(CORPUS, "fig1.json")
    cpx = os.path.join(CORPUS, "fig1_T.json")
    import contextlib

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        assert main(["nustable", "check", alg, cpx]) == 0
