"""End-to-end command-line checks: pinned payloads and exit codes."""

import io
import json

from quadpencil.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def run_json(capsys, *argv):
    rc, out, err = run(capsys, *argv)
    assert rc == 0, err
    return json.loads(out)


def test_pencil_invariant(capsys):
    payload = '{"A": [[1, 0], [0, 1]], "B": [[0, 1], [1, 0]]}'
    out = run_json(capsys, "pencil", "invariant", "--json", payload)
    assert out == {"f": ["-1", "0", "1"]}


def test_pencil_round_trip_through_cli(capsys):
    payload = '{"A": [[1, 0], [0, 1]], "B": [[0, 1], [1, 0]]}'
    out = run_json(capsys, "pencil", "to-param", "--json", payload)
    assert out["alpha"] == ["0", "1"] and out["t"] == "1"
    back = run_json(
        capsys, "pencil", "from-param", "--f", "-1,0,1",
        "--json", json.dumps({"alpha": out["alpha"], "t": out["t"]}),
    )
    assert back == {"A": [["1", "0"], ["0", "1"]], "B": [["0", "1"], ["1", "0"]]}


def test_pencil_search_negative(capsys):
    out = run_json(capsys, "pencil", "search", "--f", "-1,0,-1", "--bound", "20")
    assert out == {"found": False, "real_obstruction": True}


def test_pencil_search_positive(capsys):
    out = run_json(capsys, "pencil", "search", "--f", "1,0,1", "--bound", "10")
    assert out["found"] is True
    assert "alpha" in out and "t" in out


def test_pencil_stab(capsys):
    payload = '{"A": [[1, 0], [0, 1]], "B": [[0, 1], [1, 0]]}'
    out = run_json(capsys, "pencil", "stab", "--json", payload)
    assert out["order"] == 2 and out["geometric_order"] == 2


def test_integral_canonical(capsys):
    out = run_json(capsys, "integral", "canonical", "--f", "1,0,0,1")
    assert out["A"] == [["0", "0", "1"], ["0", "1", "0"], ["1", "0", "0"]]
    assert out["B"] == [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "-1"]]
    assert out["gamma"] == ["1", "0", "0"] and out["t"] == "1"


def test_integral_ideal(capsys):
    out = run_json(capsys, "integral", "ideal", "--f", "2,3,5,7", "--k", "1")
    assert out == {
        "den": 2,
        "mat": [[2, 0, 0], [0, 1, 0], [0, 0, 2]],
        "eps": 1,
        "norm": "1/2",
    }


def test_integral_different(capsys):
    out = run_json(capsys, "integral", "different", "--f", "1,0,0,1")
    assert out == {"contained": True, "index": 27}


def test_integral_disc(capsys):
    out = run_json(capsys, "integral", "disc", "--f", "2,3,5,7")
    assert out["equal"] is True and out["order_disc"] == out["form_disc"]


def test_hyper(capsys):
    out = run_json(capsys, "hyper", "--f", "1,0,0,1", "--point", "2,3")
    assert out == {"g": ["1", "0", "0", "1"], "alpha": ["2", "-1", "0"], "t": "3"}


def test_quad_hilbert(capsys):
    out = run_json(capsys, "quad", "hilbert", "--a", "2", "--b", "3", "--place", "3")
    assert out == {"symbol": -1}
    out = run_json(capsys, "quad", "hilbert", "--a", "-1", "--b", "-1", "--place", "oo")
    assert out == {"symbol": -1}


def test_quad_iso_and_spin(capsys):
    q = json.dumps([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "-7"]])
    out = run_json(capsys, "quad", "iso", "--json", q, "--bound", "10")
    assert out == {"isotropic": False, "witness": None}
    q = json.dumps([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    out = run_json(capsys, "quad", "spin", "--json", q)
    assert out == {"ramified": ["oo", 2]}


def test_pf_pfaffian_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("[[0, 5], [-5, 0]]"))
    out = run_json(capsys, "pf", "pfaffian")
    assert out == {"pfaffian": "5"}


def test_adj_canon(capsys):
    out = run_json(capsys, "adj", "canon", "--json", '{"c": ["0", "-1"], "a": ["0"]}')
    assert out == {"T": [["0", "1"], ["1", "0"]]}


def test_exit_code_bad_json(capsys):
    rc, out, err = run(capsys, "pencil", "invariant", "--json", "{not json")
    assert rc == 1
    assert "input error" in err


def test_exit_code_bad_schema(capsys):
    rc, out, err = run(capsys, "pencil", "invariant", "--json", '{"A": [[1]]}')
    assert rc == 1
    assert "input error" in err


def test_exit_code_domain_error(capsys):
    payload = '{"A": [[1, 0], [0, 1]], "B": [[1, 0], [0, 1]]}'
    rc, out, err = run(capsys, "pencil", "to-param", "--json", payload)
    assert rc == 2
    assert "domain error" in err


def test_exit_code_hilbert_zero(capsys):
    rc, out, err = run(capsys, "quad", "hilbert", "--a", "0", "--b", "3", "--place", "5")
    assert rc == 2
