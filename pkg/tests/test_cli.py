import json

import pytest

from chipfire import catalog
from chipfire.cli import main, parse_divisor, parse_graph


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_graph_specs():
    assert parse_graph("path:4").n == 4
    assert parse_graph("rook:2,3").n == 6
    assert parse_graph("banana:2*path:2").n == 4
    with pytest.raises(Exception):
        parse_graph("rook:2")


def test_parse_divisor_length_check():
    g = catalog.path(3)
    assert parse_divisor("1,0,-2", g).chips == (1, 0, -2)
    with pytest.raises(Exception):
        parse_divisor("1,0", g)


def test_graph_command(capsys):
    code, out, _ = run(capsys, "graph", "rook:3,3", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["vertices"] == 9
    assert obj["genus"] == 10
    assert obj["simple"] is True


def test_graph_dot(capsys):
    code, out, _ = run(capsys, "graph", "banana:3", "--dot")
    assert code == 0
    assert out.count("--") == 3


def test_graph_json_file_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "graph", "tadpole:3,1", "--format", "json")
    payload = json.loads(out)["graph"]
    f = tmp_path / "g.json"
    f.write_text(json.dumps(payload))
    code, out2, _ = run(capsys, "graph", str(f), "--format", "json")
    assert code == 0
    assert json.loads(out2)["graph"] == payload


def test_gonality_family_flag(capsys):
    code, out, _ = run(
        capsys, "gonality", "--family", "rook:3,3", "--threads", "2",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["gonality"] == 6


def test_gonality_json_deterministic_across_threads(capsys):
    outs = []
    for t in ("1", "4"):
        code, out, _ = run(
            capsys, "gonality", "rook:3,3", "--threads", t, "--format", "json"
        )
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_burn_command(capsys):
    code, out, _ = run(
        capsys, "burn", "path:3", "-D", "2,0,0", "-q", "2", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["burned"] == [1, 2]
    assert obj["unburned"] == [0]


def test_reduce_command(capsys):
    code, out, _ = run(
        capsys, "reduce", "--graph", "cycle:3", "--divisor", "0,0,2",
        "--base", "0",
    )
    assert code == 0
    assert "[1, 1, 0]" in out


def test_rank_command(capsys):
    code, out, _ = run(
        capsys, "rank", "banana:3", "-D", "2,1", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["rank"] == 1
    assert obj["riemann_roch_residual"] == 0


def test_orient_command(capsys):
    code, out, _ = run(
        capsys, "orient", "banana:4", "-D", "1,0", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["found"] is True
    code, out, _ = run(
        capsys, "orient", "cycle:3", "-D", "1,-1,0", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["found"] is False


def test_bramble_trees(capsys):
    code, out, _ = run(
        capsys, "bramble", "--trees", "path:3", "path:4", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["classification"] == "strict_bramble"
    assert obj["order"] == 3


def test_bramble_explicit_elements(capsys):
    code, out, _ = run(
        capsys, "bramble", "cycle:4", "-e", "0,1", "-e", "1,2", "-e", "2,3",
        "-e", "3,0", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["order"] == 2


def test_product_command(capsys):
    code, out, _ = run(
        capsys, "product", "complete:3", "complete:3", "--threads", "2",
        "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["actual"] == 6
    assert obj["equality_with_conjecture"] is True


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "spencer", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert reports[0]["suite"] == "spencer"
    assert reports[0]["passed"] is True


def test_exit_code_invalid_input(capsys):
    code, _, err = run(capsys, "graph", "noSuchFamily:3")
    assert code == 2
    assert "error" in err
    code, _, err = run(capsys, "burn", "path:3", "-D", "1,2", "-q", "0")
    assert code == 2
    code, _, err = run(capsys, "verify", "bogus")
    assert code == 2


def test_exit_code_budget(capsys):
    code, _, err = run(
        capsys, "gonality", "rook:3,4", "--max-candidates", "10"
    )
    assert code == 3
    assert "budget" in err


def test_graph_given_twice_is_rejected(capsys):
    code, _, err = run(capsys, "gonality", "path:3", "--family", "path:4")
    assert code == 2
