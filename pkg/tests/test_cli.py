import json

import pytest

from seidelkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_spectrum(capsys):
    code, out = run(capsys, "spectrum", "--graph", "C5+K1")
    assert code == 0
    assert "sqrt(5)" in out.out and "approx. 2.236068" in out.out and "multiplicity 3" in out.out


def test_spectrum_json_graph6(capsys):
    code, out = run(capsys, "spectrum", "--graph6", "Dhc", "--json")
    data = json.loads(out.out)
    assert data["order"] == 5 and data["multiplicity"] == 2


def test_switch_and_equiv(capsys):
    code, out = run(capsys, "switch", "--graph", "C5", "--set", "0,1")
    g6 = out.out.strip()
    code, out = run(capsys, "equiv", "--graph", "C5", "--graph6", g6, "--json")
    assert code == 0 and json.loads(out.out)["equivalent"]
    code, out = run(capsys, "equiv", "--graph", "C5", "--graph", "E5")
    assert code == 1


def test_maximal(capsys):
    code, out = run(capsys, "maximal", "--graph", "L(K2,6)")
    assert "maximal: no" in out.out and "extension signs" in out.out
    code, out = run(capsys, "maximal", "--strong", "--graph", "L(K8)", "--json")
    assert json.loads(out.out)["verdict"] is True


def test_p_value(capsys):
    code, out = run(capsys, "p-value", "--graph", "T(7)", "--theta", "2")
    assert "p = 7/4" in out.out
    code, out = run(capsys, "p-value", "--graph", "K4", "--theta", "1/2")
    assert code == 2


def test_lattice(capsys):
    code, out = run(capsys, "lattice", "--graph", "L(K5)", "--classify", "--json")
    data = json.loads(out.out)
    assert data["type"] == "E6" and data["root_count"] == 72
    code, out = run(capsys, "lattice", "--graph", "K2", "--roots")
    assert out.out.startswith("12 roots")


def test_lambda_table_and_extremal(capsys):
    code, out = run(capsys, "lambda-table", "--max-n", "4")
    assert "lambda(3) = 2" in out.out and "x^2 - 5" in out.out
    code, out = run(capsys, "extremal", "--rank", "5")
    assert code == 0 and "10 lines" in out.out


def test_verify(capsys):
    code, out = run(capsys, "verify", "--suite", "corollary13", "--json")
    data = json.loads(out.out)
    assert code == 0 and data["report_version"] == 1 and data["exit_status"] == 0
    code2, out2 = run(capsys, "verify", "--suite", "corollary13", "--json")
    assert out2.out == out.out
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "nope"])


def test_bad_graph(capsys):
    code, out = run(capsys, "spectrum", "--graph", "Q9")
    assert code == 2 and "error" in out.err


def test_unknown_suite_api():
    from seidelkit.suites import UnknownSuite, run_suite

    with pytest.raises(UnknownSuite):
        run_suite("nope")
