from pathlib import Path

import pytest

from common.constants import ExitStatus, OutputFormat
from common.errors import ConsistencyError
from module7_cli.main import HANDLERS, RunConfig, build_parser, config_from_args, main, run

GROUPS = Path(__file__).resolve().parent.parent / "data" / "groups"


def _run(capsys, *argv):
    status = main([str(a) for a in argv])
    return status, capsys.readouterr().out


def test_molien_symmetric(capsys):
    status, out = _run(capsys, "molien", "--group", GROUPS / "s3.grp", "--degree", 10,
                       "--expect", "symmetric", "--format", "structured")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "0 : 1/1"
    assert lines[6] == "6 : 7/1"
    assert len(lines) == 11


def test_molien_wrong_expectation_is_a_mismatch(capsys):
    status, out = _run(capsys, "molien", "--group", GROUPS / "c3.grp", "--degree", 6, "--expect", "symmetric")
    assert status == ExitStatus.MISMATCH
    assert "closed form: false" in out


def test_invariants(capsys):
    status, out = _run(capsys, "invariants", "--group", GROUPS / "c3.grp")
    assert status == 0
    assert "degrees: 1,2,3,3" in out


def test_reflections(capsys):
    status, out = _run(capsys, "reflections", "--group", GROUPS / "c3.grp", "--format", "structured")
    assert status == 0
    assert out.splitlines() == ["order=3", "pseudo_reflections=0", "generated=false"]


def test_nilpotency_sweep(capsys):
    status, out = _run(capsys, "nilpotency", "--n", 2, "--sweep", 4, "--format", "structured")
    assert status == 0
    assert out == "n=2 minimal_N=3\n"


def test_nilpotency_single_degree(capsys):
    status, out = _run(capsys, "nilpotency", "--n", 2, "--N", 2, "--format", "structured")
    assert status == 0
    assert out == "n=2 N=2 member=false\n"


def test_nilpotency_needs_one_mode(capsys):
    assert main(["nilpotency", "--n", "2"]) == ExitStatus.USAGE
    assert main(["nilpotency", "--n", "2", "--N", "3", "--sweep", "4"]) == ExitStatus.USAGE


def test_resource_cap_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("MATINV_MAX_NILPOTENCY_DEGREE", "5")
    assert main(["nilpotency", "--n", "3", "--N", "6"]) == ExitStatus.USAGE


def test_hilbert_default_series(capsys):
    status, out = _run(capsys, "hilbert", "--n", 2, "--d", 2, "--degree", 4)
    assert status == 0
    assert "match (15 checked)" in out


def test_mingen_structured(capsys):
    status, out = _run(capsys, "mingen", "--n", 2, "--d", 2, "--degree", 4, "--format", "structured")
    assert status == 0
    assert out.splitlines() == ["1,0 : 1", "0,1 : 1", "2,0 : 1", "1,1 : 1", "0,2 : 1"]


def test_schur_with_closed_form(capsys):
    status, out = _run(capsys, "schur", "--series", "teranishi", "--degree", 6, "--check-closed-form")
    assert status == 0
    assert "() : 1/1" in out


def test_schur_closed_form_needs_teranishi(capsys):
    assert main(["schur", "--series", "fhl", "--degree", "4", "--check-closed-form"]) == ExitStatus.USAGE


def test_multseries(capsys):
    status, out = _run(capsys, "multseries", "--degree", 8)
    assert status == 0
    assert "reconstructs H(C32): true" in out


def test_traceid(capsys):
    status, out = _run(capsys, "traceid", "--n", 2, "--m", 3, "--random", 4, "--seed", 11)
    assert status == 0
    assert "dim J(2,3) = 1" in out
    assert "seed=11" in out


@pytest.mark.parametrize("which", ["cayley-hamilton", "fundamental"])
def test_verify_identities(capsys, which):
    status, _ = _run(capsys, "verify-relations", "--which", which)
    assert status == 0


def test_verify_ads_prints_seed(capsys):
    status, out = _run(capsys, "verify-relations", "--which", "ads", "--samples", 20, "--seed", 7)
    assert status == 0
    assert "seed=7" in out


def test_verify_c2d_symbolic(capsys):
    status, _ = _run(capsys, "verify-relations", "--which", "c2d", "--d", 3, "--symbolic")
    assert status == 0


def test_verify_c2d_structured_records_seed(capsys):
    status, out = _run(capsys, "verify-relations", "--which", "c2d", "--d", 3, "--samples", 5, "--seed", 13,
                       "--format", "structured")
    assert status == 0
    assert out.splitlines() == ["samples=5", "seed=13", "status=match"]


def test_verify_t22(capsys):
    status, out = _run(capsys, "verify-relations", "--which", "t22", "--degree", 3, "--format", "structured")
    assert status == 0
    assert out == "status=match\n"


def test_hilbert_mixed_kind(capsys):
    status, out = _run(capsys, "hilbert", "--n", 2, "--d", 2, "--degree", 4, "--kind", "mixed", "--format", "structured")
    assert status == 0
    lines = out.splitlines()
    assert "1,1 : 5" in lines
    assert lines[-1] == "status=match"


def test_unexpected_failure_is_not_a_mismatch(capsys, monkeypatch):
    def broken(config):
        raise ConsistencyError("degree 3: invariant span has dimension 2, Molien predicts 3")

    monkeypatch.setitem(HANDLERS, "reflections", broken)
    assert main(["reflections", "--group", str(GROUPS / "c3.grp")]) == ExitStatus.USAGE

    def crashing(config):
        raise RuntimeError("boom")

    monkeypatch.setitem(HANDLERS, "reflections", crashing)
    assert main(["reflections", "--group", str(GROUPS / "c3.grp")]) == ExitStatus.USAGE


def test_output_file(tmp_path, capsys):
    target = tmp_path / "series.txt"
    status = main(["molien", "--group", str(GROUPS / "s2.grp"), "--degree", "3",
                   "--format", "structured", "--output", str(target)])
    assert status == 0
    assert capsys.readouterr().out == ""
    assert target.read_text() == "0 : 1/1\n1 : 1/1\n2 : 2/1\n3 : 2/1\n"


def test_identical_config_identical_output(capsys):
    argv = ["traceid", "--n", "2", "--m", "4", "--random", "3"]
    _, first = _run(capsys, *argv)
    _, second = _run(capsys, *argv)
    assert first == second


def test_missing_group_file(capsys):
    assert main(["molien", "--group", "no/such/file.grp", "--degree", "3"]) == ExitStatus.USAGE


def test_unknown_subcommand(capsys):
    assert main(["frobnicate"]) == ExitStatus.USAGE


def test_config_from_args():
    args = build_parser().parse_args(["hilbert", "--n", "3", "--d", "2", "--degree", "5", "--kind", "mixed"])
    config = config_from_args(args)
    assert config.command == "hilbert"
    assert config.degree == 5
    assert config.kind == "mixed"
    assert config.fmt is OutputFormat.HUMAN


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(command="molien", degree=-1)
    with pytest.raises(ValueError):
        RunConfig(command="verify-relations", samples=0)


def test_run_returns_report():
    result = run(RunConfig(command="nilpotency", n=1, sweep=2))
    assert result.status is ExitStatus.OK
    assert result.records == ["n=1 minimal_N=1"]
