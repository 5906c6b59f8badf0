import json

import pytest

from freecurve.cli import (EXIT_INPUT, EXIT_OK, EXIT_VERDICT, build_parser,
                           main)


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_ok_and_json(capsys):
    code, out, err = _run(capsys, "analyze", "x*y*z")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["exponents"] == [1, 1]
    assert payload["classification"] == "free"
    assert payload["tau"] == 3
    assert err  # human summary on stderr


def test_analyze_deterministic_output(capsys):
    _, out1, _ = _run(capsys, "analyze", "(x^5-y^5)(x+2y+z)(x+3y-5z)",
                      "--seed", "7", "--json-only")
    _, out2, _ = _run(capsys, "analyze", "(x^5-y^5)(x+2y+z)(x+3y-5z)",
                      "--seed", "7", "--json-only")
    assert out1 == out2


def test_canonical_json_has_no_floats(capsys):
    _, out, _ = _run(capsys, "analyze", "(x^5-y^5)(x+2y+z)(x+3y-5z)",
                     "--json-only")

    def no_floats(obj):
        if isinstance(obj, float):
            return False
        if isinstance(obj, dict):
            return all(no_floats(v) for v in obj.values())
        if isinstance(obj, list):
            return all(no_floats(v) for v in obj)
        return True

    assert no_floats(json.loads(out, parse_float=float))


def test_input_errors_exit_2(capsys):
    assert _run(capsys, "analyze", "x^2+y")[0] == EXIT_INPUT        # inhomogeneous
    assert _run(capsys, "analyze", "x^2*y*z")[0] == EXIT_INPUT      # not squarefree
    assert _run(capsys, "analyze", "x + + y")[0] == EXIT_INPUT      # syntax
    assert _run(capsys, "delete", "x*y*z", "--line", "9")[0] == EXIT_INPUT


def test_arrangement_from_lines_file(capsys, tmp_path):
    f = tmp_path / "triangle.lines"
    f.write_text("# triangle\n1 0 0\n0 1 0\n0 0 1\n")
    code, out, _ = _run(capsys, "arrangement", str(f), "--json-only")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["exponents"] == [1, 1]
    assert payload["is_line_arrangement"] is True
    assert payload["arrangement"]["m_A"] == 2


def test_delete_command(capsys):
    code, out, _ = _run(capsys, "delete", "x*y*z*(x+y)*(x-y)",
                        "--line", "0", "--json-only")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["case"] in (1, 2, 3) and isinstance(payload["r"], int)
    assert payload["freeness_iff_ok"] is True


def test_add_command_both_line_formats(capsys):
    code1, out1, _ = _run(capsys, "add", "x*y*z", "--line", "1 1 1",
                          "--json-only")
    code2, out2, _ = _run(capsys, "add", "x*y*z", "--line", "x+y+z",
                          "--json-only")
    assert code1 == code2 == EXIT_OK
    p1, p2 = json.loads(out1), json.loads(out2)
    assert p1["extended_exponents"] == p2["extended_exponents"] == [2, 2, 2]


def test_verify_builtin(capsys):
    code, out, _ = _run(capsys, "verify", "--json-only")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert all(r["ok"] for r in payload["results"])
    assert len(payload["results"]) >= 15


def test_verify_directory(capsys, tmp_path):
    (tmp_path / "a.lines").write_text("1 0 0\n0 1 0\n0 0 1\n")
    (tmp_path / "b.curve").write_text("x^3+y^3+z^3\n")
    code, out, _ = _run(capsys, "verify", "--corpus", str(tmp_path),
                        "--json-only")
    assert code == EXIT_OK
    assert len(json.loads(out)["results"]) == 2


def test_random_campaign_small(capsys):
    code, out, _ = _run(capsys, "random-arrangements", "--count", "3",
                        "--lines", "6", "--seed", "11", "--json-only")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["failures"] == 0 and len(payload["results"]) == 3


def test_random_free_campaign_small(capsys):
    code, out, _ = _run(capsys, "random-arrangements", "--count", "3",
                        "--lines", "7", "--free", "--seed", "5", "--json-only")
    assert code == EXIT_OK
    assert json.loads(out)["failures"] == 0


def test_parser_rejects_missing_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
