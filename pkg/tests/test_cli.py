"""Unit tests for the command-line driver."""

import json

import pytest

from swkblab import cli


def run(argv):
    return cli.main(argv)


def test_run_config_round_trip():
    cfg = cli.RunConfig(subcommand="table1", n=(1, 2), ell=(1.0, 3.0),
                        alpha=(0.5,), lambdas=(2.0, 3.0), digits=30,
                        output_format="json", output_path="x.json",
                        extra_pairs=((5, 2),))
    assert cli.RunConfig.from_json(cfg.to_json()) == cfg


def test_run_config_validation():
    with pytest.raises(ValueError):
        cli.RunConfig(subcommand="table1", output_format="xml")
    with pytest.raises(ValueError):
        cli.RunConfig(subcommand="table1", n=())


def test_fmt_uses_upper_e_marker():
    assert cli._fmt(2.5e-05) == "2.5E-05"
    assert cli._fmt(3) == "3"
    assert cli._fmt(None) == "undefined"


def test_si_check_exit_codes(capsys):
    assert run(["si-check", "--l", "1", "--alpha", "0", "1"]) == 0
    capsys.readouterr()
    assert run(["si-check", "--l", "1", "--alpha", "0.5"]) == 2
    err = capsys.readouterr().err
    assert "not shape invariant" in err


def test_spectrum_output(capsys):
    assert run(["spectrum", "--l", "1", "--n", "1", "--tol", "1e-7"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "n,ell,alpha,eigenvalue,exact"
    assert len(lines) == 3
    e1 = float(lines[2].split(",")[3])
    assert e1 == pytest.approx(2.0, abs=1e-5)


def test_convergence_writes_table_and_sidecar(tmp_path):
    out = tmp_path / "conv.csv"
    assert run(["convergence", "--n", "1", "--l", "1",
                "--lambda", "2", "3", "--out", str(out)]) == 0
    body = out.read_text().strip().splitlines()
    assert body[0] == "n,ell,lambda,log10_gamma,gamma"
    assert len(body) == 3
    meta = json.loads((tmp_path / "conv.csv.meta.json").read_text())
    assert meta["fitted_slope"] == pytest.approx(-1.0, abs=0.05)
    assert meta["version"]
    cfg = cli.RunConfig.from_json(json.dumps(meta["config"]))
    assert cfg.subcommand == "convergence"
    assert cfg.lambdas == (2.0, 3.0)


def test_output_is_deterministic(tmp_path):
    args = ["sweep-alpha", "--n", "1", "--l", "1",
            "--alpha", "0.2", "0.4", "0.6"]
    out_a = tmp_path / "a.csv"
    out_b = tmp_path / "b.csv"
    assert run(args + ["--out", str(out_a)]) == 0
    assert run(args + ["--out", str(out_b)]) == 0
    assert out_a.read_bytes() == out_b.read_bytes()


def test_sweep_n_json_format(capsys):
    assert run(["sweep-n", "--l", "1", "--n", "1", "2",
                "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["columns"] == ["n", "ell", "alpha", "integral", "residual"]
    assert len(payload["rows"]) == 2
    assert float(payload["rows"][0][4]) > 0


def test_table1_extra_degenerate_pair(capsys):
    assert run(["table1", "--pair", "0,1"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[-1] == "0,1,0.0,undefined,undefined"


def test_computation_error_exit_code(capsys):
    assert run(["convergence", "--n", "1", "--l", "1", "--lambda", "9"]) == 3
    assert "error:" in capsys.readouterr().err


def test_rejects_unknown_format():
    with pytest.raises(SystemExit):
        cli.build_parser().parse_args(["table1", "--format", "xml"])


def test_env_var_sets_default_digits(monkeypatch):
    monkeypatch.setenv(cli.DIGITS_ENV, "30")
    args = cli.build_parser().parse_args(["si-check"])
    assert args.digits == 30
