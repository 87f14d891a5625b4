import io
import json
import os

import pytest

from matroidlab.cli import run

DATA = os.path.join(os.path.dirname(__file__), "data")


def f(name):
    return os.path.join(DATA, name)


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def envelope(text):
    env = json.loads(text.strip().splitlines()[-1])
    assert set(env) >= {"ok", "result", "witness", "elapsed_ms"}
    assert isinstance(env["ok"], bool) and isinstance(env["elapsed_ms"], (int, float))
    return env


def test_chromatic():
    code, out, _ = call("chromatic", f("u24.json"))
    env = envelope(out)
    assert code == 0 and env["ok"] and env["result"] == 2
    code, out, _ = call("chromatic", f("k4.json"), "--fractional")
    assert envelope(out)["result"]["value"] == "2"


def test_white_te_graphic():
    code, out, _ = call("white", "te", f("k4.json"), "-n", 2, "--relation", "r2")
    assert code == 0 and envelope(out)["ok"]


def test_necklace_mincuts():
    code, out, _ = call("necklace", "mincuts", "--beads", "AABB", "-q", 2)
    env = envelope(out)
    assert code == 0 and env["result"] == 2


def test_failure_has_witness_and_verifies():
    code, out, _ = call("--verify-witness", "white", "sbo", f("k4.json"))
    env = envelope(out)
    assert code == 1 and not env["ok"] and env["witness"] and env["verified"]
    code, out, _ = call("union", f("u13.json"), f("u13.json"), "--verify-witness")
    env = envelope(out)
    assert code == 1 and env["witness"] == [0, 1, 2] and env["verified"]
    code, out, _ = call("kk", "fvector", "--f", "3,4")
    env = envelope(out)
    assert code == 1 and env["witness"]["needed"] == 4


@pytest.mark.parametrize("argv", [
    ["check", "k4.json"], ["rank", "k4.json", "--set", "0,1,3"], ["listcolor", "u24.json", "--lists",
     "lists4.json"], ["intersect", "u24.json", "u24.json"], ["game", "value", "u24.json", "--colors", "2"],
    ["game", "run", "u24.json", "--colors", "4"], ["online", "run", "u24.json"],
    ["indicated", "run", "k4.json"], ["kk", "shadow", "-k", "3", "-n", "5"], ["kk", "cascade", "-k", "2",
     "-n", "4"], ["complex", "extremal", "p3.json"], ["complex", "decompose", "p3.json"],
    ["white", "path", "u24.json", "-n", "3"], ["white", "graph", "k4.json"],
    ["necklace", "split", "--beads", "ABAB", "-t", "1"], ["necklace", "tight", "-k", "2", "-q", "3"],
])
def test_commands_succeed(argv):
    argv = [f(a) if a.endswith(".json") else a for a in argv]
    code, out, _ = call("--verify-witness", *argv)
    env = envelope(out)
    assert code == 0 and env["ok"] and env.get("verified", True)


def test_mk_run():
    code, out, _ = call("game", "run", f("m3.json"), "--colors", 4, "--seed", 5)
    env = envelope(out)
    assert code == 0 and env["result"]["winner"] == "bob" and env["result"]["counters_bounded"]


def test_input_errors():
    assert call("chromatic", f("missing.json"))[0] == 2
    assert call("nonsense")[0] == 2
    assert call("necklace", "mincuts", "--beads", "AB")[0] == 2
    bad = f("bad.json")
    with open(bad, "w") as fh:
        fh.write('{"matroid": {"kind": "uniform", "n": 3}}')
    try:
        code, out, _ = call("chromatic", bad)
        assert code == 2 and "error" in envelope(out)
    finally:
        os.remove(bad)


def test_cap_exit(monkeypatch):
    monkeypatch.setenv("MATROIDLAB_MAX_ENUM", "3")
    code, out, _ = call("chromatic", f("k4.json"), "--fractional")
    assert code == 3


REPL_BOB = "MOVE 0 1\nMOVE 0 1\nMOVE 1 2\nMOVE 3 3\n"


def test_repl_human_bob_against_covering():
    code, out, _ = call("game", "play", f("u24.json"), "--colors", 4, "--role", "bob", stdin=REPL_BOB)
    lines = out.splitlines()
    assert "WINNER alice" in lines and any(l.startswith("ERROR illegal") for l in lines)
    assert code == 0


def test_repl_human_alice_stuck():
    code, out, _ = call("game", "play", f("u13.json"), "--colors", 2, "--role", "alice", stdin="MOVE 0 1\n")
    assert "WINNER bob" in out.splitlines()


def test_repl_malformed_and_eof():
    code, out, _ = call("game", "play", f("u24.json"), "--colors", 4, "--role", "bob", stdin="hello\nMOVE x\n")
    assert code == 2 and "ERROR expected MOVE ..." in out and "ABORT end of input" in out


def test_repl_deterministic():
    a = call("game", "play", f("u24.json"), "--colors", 4, "--role", "bob", stdin=REPL_BOB)[1]
    b = call("game", "play", f("u24.json"), "--colors", 4, "--role", "bob", stdin=REPL_BOB)[1]
    strip = lambda s: [l for l in s.splitlines() if not l.startswith("{")]
    assert strip(a) == strip(b)


def test_repl_online_and_indicated():
    code, out, _ = call("online", "play", f("u24.json"), "--role", "bob",
                        stdin="REVEAL 0 1 2 3\nREVEAL 2 3\nREVEAL 0 1\n")
    assert "WINNER alice" in out and out.count("COLORSET") >= 2
    script = "".join(f"MOVE {e} {c}\n" for e, c in [(0, 1), (1, 1), (2, 2), (3, 2), (4, 1), (5, 2)])
    code, out, _ = call("indicated", "play", f("k4.json"), "--role", "bob", stdin=script * 3)
    assert "INDICATE" in out
