import io
import json
from pathlib import Path

import pytest

from compclust.cli import parse_root, run
from compclust.errors import DomainError

QUIVERS = Path(__file__).resolve().parent.parent / "quivers"


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def body(out):
    return [line for line in out.splitlines() if not line.startswith("#")]


def kron(*argv):
    return call("--quiver", str(QUIVERS / "kronecker.quiver"), *argv)


def test_delta():
    code, out = kron("delta")
    assert code == 0
    assert body(out) == ["(1,1)"]
    assert out.startswith("# command=delta quiver=")


def test_decompose():
    assert body(kron("decompose", "2,2")[1]) == ["(1,1) + (1,1)"]


def test_records_format():
    code, out = kron("--format", "records", "ext", "1,0", "0,1")
    lines = [json.loads(x) for x in out.splitlines()]
    assert lines[0]["record"] == "config"
    assert list(lines[1]) == ["record", "a", "b", "ext", "hom", "euler"]
    assert lines[1]["ext"] == 2


def test_orientation_example_runs():
    code, out = call("paper-example", "--orientation", "A")
    assert code == 0
    assert "(0,0,1,1,1)" in out and "(1,1,2,2,1)" in out


def test_clusters_and_mutate(tmp_path):
    out = body(kron("clusters", "--cap", "3,4")[1])
    assert out[-1] == "total 9"
    f = tmp_path / "c.txt"
    f.write_text("# delta\n1,1\n")
    code, out = kron("mutate", "--cluster", str(f), "--remove", "1,1", "--cap", "3,4")
    assert code == 0 and body(out)[-1] == "total 8"


def test_exchange(tmp_path):
    c1, c2 = tmp_path / "c1", tmp_path / "c2"
    c1.write_text("1,1\n")
    c2.write_text("0,1\n1,2\n")
    code, out = kron("exchange", "--c1", str(c1), "--c2", str(c2), "--alpha", "1,1",
                     "--alpha-prime", "1,2")
    assert code == 0 and "= (2,3)" in out
    assert kron("exchange", "--c1", str(c1), "--c2", str(c2))[0] == 2


def test_mutation_graph(tmp_path):
    dot = tmp_path / "g.dot"
    code, out = kron("mutation-graph", "--cap", "3,4", "--dot", str(dot))
    assert code == 0 and "connected=True" in out
    assert dot.read_text().count(" -- ") == 15


def test_exit_codes():
    assert kron("decompose", "2")[0] == 2
    assert kron("decompose", "40,40")[0] == 3
    assert call("--quiver", str(QUIVERS / "kronecker3.quiver"), "delta")[0] == 2
    assert call("--quiver", "/nonexistent", "delta")[0] == 2
    with pytest.raises(SystemExit) as exc:
        kron("bogus")
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        kron("roots", "--frobnicate")
    assert exc.value.code == 1


def test_parse_root():
    assert parse_root("-e_2", 3) == (0, -1, 0)
    assert parse_root("(1,2)", 2) == (1, 2)
    with pytest.raises(DomainError):
        parse_root("-e_4", 3)
    with pytest.raises(DomainError):
        parse_root("1,x", 2)


def test_wild_bound_chain():
    code, out = call("--quiver", str(QUIVERS / "chain5.quiver"), "wild-bound")
    assert body(out) == ["2"]
