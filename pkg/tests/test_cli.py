import json

from surgeryforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_simpleknot_chi(capsys):
    code, report = run_json(capsys, "simpleknot", "chi", "49", "19", "18")
    assert code == 0
    assert report["results"]["chi"] == -33
    assert report["results"]["genus"] == 17
    assert report["results"]["order"] == 49


def test_lens_homeo(capsys):
    code, report = run_json(capsys, "lens", "homeo", "18", "5", "18", "11",
                            "--oriented")
    assert code == 0
    assert report["results"]["homeomorphic"] is True
    code, report = run_json(capsys, "lens", "homeo", "18", "7", "18", "5")
    assert report["results"]["homeomorphic"] is True


def test_pentangle_verify_exit_and_determinism(capsys):
    code1, out1 = run(capsys, "pentangle", "verify", "--bound", "2")
    assert code1 == 0
    assert json.loads(out1)["counterexamples"] == []
    code2, out2 = run(capsys, "pentangle", "verify", "--bound", "2",
                      "--jobs", "3")
    assert code2 == 0
    assert out1 == out2  # byte-identical across --jobs
    code3, out3 = run(capsys, "pentangle", "verify", "--bound", "2")
    assert out1 == out3  # and across runs


def test_cf_commands(capsys):
    code, report = run_json(capsys, "cf", "eval", "[3,2,2]")
    assert code == 0 and report["results"]["value"] == "7/3"
    code, report = run_json(capsys, "cf", "expand", "19/3")
    assert report["results"]["expansion"] == [7, 2, 2]
    code, report = run_json(capsys, "cf", "solve-tail", "(-1,1)", "3")
    assert report["results"]["tail"] == "2/5"


def test_normseq_commands(capsys):
    code, report = run_json(capsys, "normseq", "reduce", "(3,2^[-1],4)")
    assert report["results"]["reduced"] == "(5)"
    code, report = run_json(capsys, "normseq", "to-lens", "(4,3,2)")
    assert report["results"]["lens"] == "L(18,5)"
    code, report = run_json(capsys, "normseq", "dual", "(3)")
    assert report["results"]["dual"] == "(2,2)"
    code, report = run_json(capsys, "normseq", "exponents", "(5,2,2)")
    assert report["results"]["exponent_sums"] == [6]


def test_tangle_command(capsys):
    code, report = run_json(capsys, "tangle", "two-bridge", "Q(-2,1/2,7/3)")
    assert report["results"]["two_bridge_necessary"] is True
    code, report = run_json(capsys, "tangle", "two-bridge", "Q(-9/2,4/5,3/7)")
    assert report["results"]["two_bridge_necessary"] is False


def test_families_eval(capsys):
    code, report = run_json(capsys, "families", "eval", "A", "3", "2")
    assert code == 0
    assert report["results"] == {"1": "L(18,11)", "2": "S3", "inf": "L(19,7)"}
    code, report = run_json(capsys, "families", "eval", "B", "4")
    assert report["results"]["2"] == "L(19,7)"


def test_families_optsurg(capsys):
    code, report = run_json(capsys, "families", "optsurg", "6", "1")
    assert report["results"][0]["lens"] == "L(5,1)"
    assert report["results"][1]["lens"] == "L(5,4)"


def test_usage_errors_exit_2(capsys):
    assert main(["lens", "normalize", "10", "4"]) == 2
    assert main(["families", "eval", "A", "1", "5"]) == 2
    assert main(["cf", "eval", "not-a-word"]) == 2


def test_verification_failure_exits_1(capsys):
    # bounds too small to regenerate the deeper twist-family entries: the
    # census reports them missing and the command signals failure
    code, report = run_json(capsys, "families", "census", "--tmax", "5",
                            "--seqmax", "2")
    assert code == 1
    assert report["counterexamples"]


def test_formats(capsys):
    code, out = run(capsys, "--format", "text", "simpleknot", "chi", "5",
                    "4", "2")
    assert code == 0 and "chi: -1" in out
    code, out = run(capsys, "--format", "csv", "families", "optsurg", "6", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "knot,lens"
    assert len(lines) == 3


def test_no_timing_by_default(capsys):
    code, report = run_json(capsys, "simpleknot", "chi", "3", "1", "1")
    assert "elapsed_ms" not in report
    code, out = run(capsys, "--timing", "simpleknot", "chi", "3", "1", "1")
    assert "elapsed_ms" in json.loads(out)


def test_jobs_env_default(capsys, monkeypatch):
    monkeypatch.setenv("SURGERYFORGE_JOBS", "2")
    code, out = run(capsys, "pentangle", "verify", "--bound", "2")
    assert code == 0
    report = json.loads(out)
    assert report["parameters"] == {"bound": 2}


def test_star_cli(capsys):
    code, report = run_json(capsys, "simpleknot", "star", "31")
    plus = report["results"]["eps=+1"]
    assert plus["raw"] == [{"k": 5, "q": 6}, {"k": 25, "q": 26}]
    minus = report["results"]["eps=-1"]
    assert minus["raw"] == [{"k": 13, "q": 17}, {"k": 19, "q": 11}]


def test_genus_search_cli(capsys):
    code, report = run_json(capsys, "simpleknot", "genus-search", "L(50,41)",
                            "17")
    assert code == 0 and report["results"]["knots"] == []
    code, report = run_json(capsys, "simpleknot", "genus-search", "L(5,4)", "1")
    assert "K(5,4,2)" in report["results"]["knots"]
