import json

import pytest

from hurwitz_family.cli import build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.mark.parametrize("cmd", ["nielsen", "braid-orbit", "descent", "an-lift", "degenerate"])
def test_combinatorial_commands_json(capsys, cmd):
    code, out = run(capsys, cmd, "--n", "8", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["schema"] == "hurwitz-family/1"
    assert data["command"] == cmd


def test_nielsen_oracle(capsys):
    code, out = run(capsys, "nielsen", "--n", "6", "--oracle", "--json")
    assert code == 0 and json.loads(out)["result"]["oracle"]["bijection"]


def test_braid_orbit_closed_form(capsys):
    code, out = run(capsys, "braid-orbit", "--n", "10", "--json")
    assert code == 0 and all(json.loads(out)["result"]["closed_form_match"].values())


def test_verify_paper_n6_latex(capsys):
    code, out = run(capsys, "verify-paper-n6", "--latex")
    assert code == 0
    assert "\\begin{aligned}" in out and "ok: True" in out


def test_deform_and_verify(capsys):
    code, out = run(capsys, "deform", "--n", "6", "--prec", "32", "--json")
    data = json.loads(out)
    assert code == 0 and data["result"]["lambda_valuation"] == 6
    code, out = run(capsys, "verify", "--n", "6", "--json")
    data = json.loads(out)
    assert code == 0 and data["result"]["verification"]["identity_1"]


def test_specialize_and_replay(capsys, tmp_path):
    code, out = run(capsys, "specialize", "--n", "6", "--json", "--primes", "40")
    assert code == 0
    path = tmp_path / "rep.json"
    path.write_text(out)
    code, out = run(capsys, "specialize", "--replay", str(path), "--json")
    assert code == 0 and json.loads(out)["result"]["certificate_valid"]


def test_errors_give_nonzero_exit(capsys):
    code, out = run(capsys, "nielsen", "--n", "7", "--json")
    data = json.loads(out)
    assert code == 1 and data["result"]["error"] == "ValueError"


def test_global_flags_everywhere():
    parser = build_parser()
    for cmd in ("nielsen", "deform", "specialize", "verify-paper-n6"):
        args = parser.parse_args([cmd, "--n", "8", "--prec", "16", "--seed", "3", "--primes", "5,7", "--json", "--latex"])
        assert (args.n, args.prec, args.seed, args.primes) == (8, 16, 3, "5,7")
