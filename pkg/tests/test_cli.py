import random

from conftest import random_noncrossing_digraph
from ncdigraph.cli import run
from ncdigraph.fileio import format_digraph, parse_digraph


def invoke(capsys, *argv):
    status = run(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_encode_digraph_fixture(tmp_path, capsys):
    f = tmp_path / "g.dg"
    f.write_text("n 4\n1 2\n2 2\n4 1\n4 2\n")
    status, out, _ = invoke(capsys, "encode", "--digraph", str(f))
    assert status == 0
    assert out.strip() == "</{}><[]{}{}\\\\"


def test_encode_graph_fixture(tmp_path, capsys):
    f = tmp_path / "g.dg"
    f.write_text("n 4\n1 2\n2 2\n4 1\n4 2\n")
    status, out, _ = invoke(capsys, "encode", str(f))
    assert status == 0
    assert out.strip() == "[[{}][[]{}{}]]"


def test_decode_empty_digraph(capsys):
    status, out, _ = invoke(capsys, "decode", "--digraph", "")
    assert status == 0
    assert out == "n 1\n"


def test_decode_round_trip(capsys):
    status, out, _ = invoke(capsys, "decode", "--digraph", "</{}><[]{}{}\\\\")
    assert status == 0
    assert parse_digraph(out).arcs == frozenset(
        {(1, 2), (2, 2), (4, 1), (4, 2)})


def test_classify(tmp_path, capsys):
    f = tmp_path / "g.dg"
    f.write_text("n 3\n1 2\n2 3\n")
    status, out, _ = invoke(capsys, "classify", str(f))
    assert status == 0
    lines = out.strip().splitlines()
    assert "noncrossing: yes" in lines
    assert "OUT" in lines and "ACYC_D" in lines


def test_count_n5(capsys):
    status, out, _ = invoke(capsys, "count", "-n", "5")
    assert status == 0
    assert out.strip() == "62464"


def test_count_equals_enumerate_length(capsys):
    status, out, _ = invoke(capsys, "enumerate", "-n", "3",
                            "--family", "ACYC_D")
    assert status == 0
    lines = [l for l in out.splitlines() if l]
    status, out, _ = invoke(capsys, "count", "-n", "3", "--family", "ACYC_D")
    assert int(out.strip()) == len(lines)


def test_enumerate_count_only(capsys):
    status, out, _ = invoke(capsys, "enumerate", "-n", "4", "--count-only")
    assert status == 0
    assert out.strip() == "1792"


def test_enumerate_latent(capsys):
    status, out, _ = invoke(capsys, "enumerate", "-n", "2", "--latent")
    assert status == 0
    assert out.splitlines() == ["{}", "/F'{}>F'", "<f'{}\\f'", "[I'{}]I'"]


def test_lattice_tsv(capsys):
    status, out, _ = invoke(capsys, "lattice", "-n", "3")
    assert status == 0
    rows = [line.split("\t") for line in out.strip().splitlines()]
    assert sum(int(r[1]) for r in rows) == 64
    assert all(len(r[0]) == 6 for r in rows)


def test_parse_command(tmp_path, capsys):
    f = tmp_path / "w.txt"
    f.write_text("n 3\n1 2 5\n2 3 4\n2 1 3\n")
    status, out, _ = invoke(capsys, "parse", "--weights", str(f),
                            "--family", "out-tree")
    assert status == 0
    assert out.endswith("weight 9\n")


def test_parse_empty_family_exit_2(tmp_path, capsys):
    f = tmp_path / "w.txt"
    f.write_text("n 2\n1 2 5\n")
    status, _, err = invoke(capsys, "parse", "--weights", str(f),
                            "--family", "CONN_W,INV,ORIENTED")
    assert status == 2
    assert "no parse" in err


def test_malformed_input_exit_1(tmp_path, capsys):
    f = tmp_path / "bad.dg"
    f.write_text("not a digraph\n")
    status, _, err = invoke(capsys, "classify", str(f))
    assert status == 1
    assert err


def test_cli_round_trip_random(tmp_path, capsys):
    rng = random.Random(21)
    for _ in range(25):
        g = random_noncrossing_digraph(rng, 6)
        f = tmp_path / "g.dg"
        f.write_text(format_digraph(g))
        status, out, _ = invoke(capsys, "encode", "--digraph", str(f))
        assert status == 0
        status, out2, _ = invoke(capsys, "decode", "--digraph", out.strip())
        assert status == 0
        assert parse_digraph(out2) == g
