import json

from artifact.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_sawtooth_example(capsys):
    code, out, _ = run(capsys, "construct", "--support", "1,7,8", "--counts", "5,2,6")
    assert code == 0
    assert json.loads(out)["path"] == [0, 8, 9, 1, 2, 10, 11, 3, 4, 12, 5, 13, 6, 7]


def test_construct_routes(capsys):
    code, out, _ = run(capsys, "construct", "--support", "1,7", "--counts", "6,8")
    assert code == 0 and json.loads(out)["lengths"] == {"1": 6, "7": 8}
    code, out, _ = run(capsys, "construct", "--support", "1,5,7", "--counts", "7,9,9")
    assert code == 0 and json.loads(out)["lengths"] == {"1": 7, "5": 9, "7": 9}


def test_construct_min_a(capsys):
    code, out, _ = run(capsys, "construct", "--support", "1,7,8", "--counts", "2,6", "--min-a")
    assert code == 0 and json.loads(out)["min_a"] == 5


def test_construct_exit_codes(capsys):
    assert run(capsys, "construct", "--support", "1,4,7", "--counts", "1,2,3")[0] == 1
    assert run(capsys, "construct", "--support", "1,x,7", "--counts", "1,2,3")[0] == 3
    assert run(capsys, "construct", "--support", "1,7,8")[0] == 3


def test_verify_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "construct", "--support", "1,7,8", "--counts", "5,2,6")
    f = tmp_path / "r.json"
    f.write_text(out)
    assert run(capsys, "verify", "--file", str(f), "--expect", "1^5,7^2,8^6")[0] == 0
    assert run(capsys, "verify", "--file", str(f), "--expect", "1^5,7^2,8^5")[0] == 2
    assert run(capsys, "verify", "--file", str(f), "--perfect")[0] == 2
    f.write_text("{broken")
    assert run(capsys, "verify", "--file", str(f))[0] == 3


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "1^2,2^2", "--json")
    assert code == 0 and json.loads(out)["path"] == [0, 1, 3, 2, 4]
    code, out, _ = run(capsys, "oracle", "2^4", "--mode", "any", "--json")
    assert json.loads(out)["verdict"] == "none"
    code, out, _ = run(capsys, "oracle", "1^5,5^8,6^9", "--limit", "3")
    assert code == 1


def test_equiv_and_window(capsys):
    code, out, _ = run(capsys, "equiv", "--support", "1,17,19", "--v", "103")
    assert code == 0 and json.loads(out)["f_sum"] == 87
    code, out, _ = run(capsys, "window", "--support", "1,17,19", "--v", "105")
    assert json.loads(out)["window"]["upper"] == {"a": 34, "b": 66, "c": 32}
    assert run(capsys, "window", "--support", "1,3,5", "--v", "9")[0] == 1


def test_theorem_fifteen(capsys):
    code, out, _ = run(capsys, "theorem", "--id", "fifteen-cases")
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.startswith("PASS (y=")]
    assert len(lines) == 15


def test_render(capsys):
    code, out, _ = run(capsys, "render", "--path", "0,6,2,8,4,10,11,5,9,3,7,1", "--x", "4",
                       "--y", "6", "--style", "slanted")
    assert code == 0 and "X" in out


def test_unknown_command(capsys):
    assert main(["bogus"]) == 3
    assert main(["--help"]) == 0
