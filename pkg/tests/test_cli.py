import json

import pytest

from splitloci.classifier import CrossCheck, crosscheck
from splitloci.cli import main
from splitloci.splitting import parse_type


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "arg,line",
    [
        ("-3,-3,0,0,3,3", "not-Q-gorenstein (agree)"),
        ("0,5,10", "N-gorenstein:N=5 (agree)"),
        ("0,0", "gorenstein (agree)"),
    ],
)
def test_classify(capsys, arg, line):
    code, out, _ = run(capsys, "classify", "-e", arg)
    assert code == 0 and out.strip() == line


def test_classify_json_round_trip(capsys):
    code, out, _ = run(capsys, "classify", "-e", "2,0,-2", "--format", "json")
    assert code == 0
    report = CrossCheck.from_json(json.loads(out))
    assert report == crosscheck(parse_type("-2,0,2"))


@pytest.mark.parametrize("args", [("classify", "-e", "1,x"), ("classify",), ("classify", "-e", ""),
                                  ("weights", "-e", "0,1", "--format", "dot"), ("nope",)])
def test_usage_errors(capsys, args):
    code, _, err = run(capsys, *args)
    assert code == 1 and err


@pytest.mark.parametrize(
    "arg,first",
    [("0,3,6", "Z ⊕ Z/3; ω order 3"), ("2,5", "Z/3; ω order 3"), ("0,0", "trivial group; ω order 1"),
     ("0,0,4,4", "Z^2; ω order ∞")],
)
def test_group(capsys, arg, first):
    code, out, _ = run(capsys, "group", "-e", arg)
    assert code == 0 and out.splitlines()[0] == first


def test_group_slack_matches(capsys):
    _, plain, _ = run(capsys, "group", "-e", "0,0,3,3,7")
    _, slack, _ = run(capsys, "group", "-e", "0,0,3,3,7", "--slack", "4")
    assert plain == slack


def test_group_json(capsys):
    code, out, _ = run(capsys, "group", "-e", "0,4,8", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["order"] == 2 and data["presentation"]["invariant_factors"] == [4]
    assert data["model"] == {"M": 0, "D": 12, "ambient_dim": 22, "codim": 13, "locus_dim": 9}


def test_group_slack_rank_one(capsys):
    code, _, err = run(capsys, "group", "-e", "4", "--slack", "0")
    assert code == 1 and "no extension-space model" in err


def _dot_edges(out):
    return [l.strip() for l in out.splitlines() if "->" in l]


def test_poset(capsys):
    code, out, _ = run(capsys, "poset", "-e", "0,0,0", "-c", "2")
    assert code == 0
    assert _dot_edges(out) == ['"-1,0,1" -> "0,0,0";']
    assert '"-1,0,1" [label="-1,0,1 | u=1 | gorenstein"];' in out


def test_poset_single_node(capsys):
    _, out, _ = run(capsys, "poset", "-e", "0,0", "-c", "0")
    assert _dot_edges(out) == [] and out.count("[label=") == 1


def test_poset_rank_four(capsys):
    _, out, _ = run(capsys, "poset", "-e", "0,0,0,0", "-c", "1")
    assert _dot_edges(out) == ['"-1,0,0,1" -> "0,0,0,0";']


def test_poset_json(capsys):
    _, out, _ = run(capsys, "poset", "-e", "0,0", "-c", "1", "--format", "json")
    data = json.loads(out)
    assert data["edges"] == [["-1,1", "0,0"]]
    assert [n["u"] for n in data["nodes"]] == [0, 1]


def test_crosscheck(capsys):
    code, out, _ = run(capsys, "crosscheck", "-r", "4", "-s", "6")
    assert code == 0
    assert out.strip() == "120 types checked, 0 disagreements"
    code, out, _ = run(capsys, "crosscheck", "-r", "1", "-s", "0")
    assert code == 0 and out.strip() == "1 type checked, 0 disagreements"


def test_crosscheck_tsv_includes_even_ap(capsys):
    code, out, _ = run(capsys, "crosscheck", "-r", "3", "-s", "8", "--format", "tsv")
    assert code == 0
    assert "0,4,8\tN-gorenstein:N=2\tN-gorenstein:N=2\ttrue" in out.splitlines()


def test_crosscheck_json_and_no_normalize(capsys):
    _, out, _ = run(capsys, "crosscheck", "-r", "2", "-s", "2", "--no-normalize", "--format", "json")
    data = json.loads(out)
    # all multisets of size <= 2 from {0, 1, 2}
    assert data == {"checked": 3 + 6, "disagreements": 0, "failures": []}


def test_crosscheck_exit_code_on_disagreement(capsys, monkeypatch):
    import splitloci.cli as cli_mod
    from splitloci.classifier import GorensteinVerdict, Kind, Path

    def broken(e):
        r = crosscheck(e)
        return CrossCheck(e, r.criterion, GorensteinVerdict(Kind.NOT_Q_GORENSTEIN, Path.CLASS_GROUP))

    monkeypatch.setattr(cli_mod, "crosscheck", broken)
    code, out, _ = run(capsys, "crosscheck", "-r", "1", "-s", "0")
    assert code == 2
    assert "1 disagreements" in out
    failure = json.loads(out.splitlines()[1])
    assert failure["agree"] is False
    code, _, _ = run(capsys, "classify", "-e", "0,0")
    assert code == 2


def test_weights(capsys):
    code, out, _ = run(capsys, "weights", "-e", "-2,0,2")
    assert code == 0
    assert out.splitlines()[1:] == ["2\t1\t1\t(1,0)", "3\t2\t1\t(0,1)", "3\t1\t3\t(1,1)"]
    _, out, _ = run(capsys, "weights", "-e", "0,0")
    assert out.splitlines() == ["i\tj\tdim\tmultidegree"]
    _, out, _ = run(capsys, "weights", "-e", "0,0,3")
    assert out.splitlines()[1:] == ["2\t1\t4\t(1)"]


def test_weights_json(capsys):
    _, out, _ = run(capsys, "weights", "-e", "0,0,3", "--format", "json")
    assert json.loads(out) == [{"i": 2, "j": 1, "dim": 4, "multidegree": [1]}]


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0 and "classify" in out
