"""Command-line interface: every solver as a subcommand with a JSON envelope on stdout."""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from .core import check_axioms, construct, load
from .core.elements import as_mask, bits_of, elems, popcount
from .errors import CapExceeded, DivisibilityError, InfeasibleLists, LoopError, MalformedSpec, MatroidLabError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(MatroidLabError):
    pass


class Outcome:
    """What a subcommand returns: the property verdict, a result, and a witness on failure."""

    def __init__(self, ok, result=None, witness=None, verified=None, summary=""):
        self.ok = ok
        self.result = result
        self.witness = witness
        self.verified = verified
        self.summary = summary


def _s(mask):
    return list(elems(mask))


def _ints(text):
    """Integers from a JSON list or a comma/space separated string."""
    if text is None:
        return []
    text = text.strip()
    if text.startswith("["):
        try:
            return [int(x) for x in json.loads(text)]
        except (ValueError, TypeError) as exc:
            raise InputError(f"bad integer list {text!r}") from exc
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"bad integer list {text!r}") from exc


def _json_arg(text):
    """A JSON value given inline or as @path / a path to a file."""
    if text.startswith("@"):
        text = text[1:]
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        pass
    try:
        with open(text) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"{text!r} is neither JSON nor a readable file") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{text}: not JSON ({exc})") from exc


def _matroid(path):
    try:
        return load(path)
    except FileNotFoundError as exc:
        raise InputError(f"no such file {path}") from exc


def _weights(text, n):
    if text is None:
        return None
    v = _json_arg(text) if text.strip().startswith(("[", "@")) else _ints(text)
    if isinstance(v, int):
        return [v] * n
    if len(v) == 1:
        return [int(v[0])] * n
    return [int(x) for x in v]


# ---------------------------------------------------------------------------
# matroid commands

def cmd_check(a):
    M = _matroid(a.file)
    rep = check_axioms(M, cap=a.cap)
    fails = rep.failures()
    return Outcome(rep.ok, rep.as_dict(), fails[0].as_dict() if fails else None,
                   summary="all axioms hold" if rep.ok else f"{len(fails)} axiom(s) fail")


def cmd_rank(a):
    M = _matroid(a.file)
    S = _ints(a.set) if a.set is not None else list(range(M.n))
    if any(not 0 <= e < M.n for e in S):
        raise InputError(f"elements must lie in 0..{M.n - 1}")
    m = as_mask(S, M.n)
    return Outcome(True, M._rank(m), summary=f"r({S}) = {M._rank(m)}")


def cmd_chromatic(a):
    from .chroma import chromatic_number, flats, fractional_chromatic
    from .union import partition_into_independent
    M = _matroid(a.file)
    if a.fractional:
        f = fractional_chromatic(M)
        res = {"value": str(f), "float": float(f)}
        verified = None
        if a.verify_witness:
            F = max((F for F in flats(M) if F), key=lambda F: Fraction(popcount(F), M._rank(F)))
            verified = Fraction(popcount(F), M._rank(F)) == f
        return Outcome(True, res, verified=verified, summary=f"fractional chromatic number {f}")
    k = chromatic_number(M)
    verified = None
    if a.verify_witness:
        cert = partition_into_independent(M, k)
        lower = max(-(-popcount(F) // M._rank(F)) for F in flats(M) if F) if M.n <= 20 else k
        verified = bool(cert.ok and cert.covering.verify([M] * k) and lower == k)
    return Outcome(True, k, verified=verified, summary=f"chromatic number {k}")


def cmd_listcolor(a):
    from .chroma import color_from_lists, decide_w_colorable, seymour_deficiency, _sizes
    from .union import _weights as norm_w
    M = _matroid(a.file)
    w = _weights(a.weights, M.n)
    if a.lists is None and a.size is None:
        raise InputError("give --lists FILE or --size L")
    if a.lists is None:
        sizes = _ints(a.size)
        sizes = sizes * M.n if len(sizes) == 1 else sizes
        d = decide_w_colorable(M, sizes, w)
        wit = None if d.ok else _s(d.witness)
        ver = None
        if a.verify_witness and not d.ok:
            ver = seymour_deficiency(M, _sizes(sizes, M.n), norm_w(w, M.n), d.witness) < 0
        return Outcome(d.ok, {"colorable_from_every_assignment": d.ok}, wit, ver,
                       "every assignment with these sizes is colorable" if d.ok else "some assignment fails")
    L = _json_arg(a.lists)
    if isinstance(L, dict) and "lists" in L:
        L = L["lists"]
    try:
        col = color_from_lists(M, L, w)
    except InfeasibleLists as exc:
        ver = None
        if a.verify_witness and exc.violating_set is not None:
            ver = _lists_deficient(M, L, w, exc.violating_set)
        return Outcome(False, None, None if exc.violating_set is None else _s(exc.violating_set), ver,
                       str(exc))
    res = {str(e): sorted(cs) for e, cs in sorted(col.assignment.items())}
    ver = col.verify(M, L) if a.verify_witness else None
    return Outcome(True, res, verified=ver, summary="coloring found")


def _lists_deficient(M, L, w, A):
    """Σ_c r(A ∩ Q_c) < w(A), the reason the lists fail."""
    from .chroma import _lists
    from .union import _weights as norm_w
    L = _lists(L, M.n)
    w = norm_w(w, M.n)
    colors = sorted(set().union(*L))
    total = sum(M._rank(sum(1 << e for e in bits_of(A) if c in L[e])) for c in colors)
    return total < sum(w[e] for e in bits_of(A))


def cmd_union(a):
    from .union import _weights as norm_w, matroid_union, union_deficiency, verify_certificate
    Ms = [_matroid(f) for f in a.files]
    w = norm_w(_weights(a.weights, Ms[0].n), Ms[0].n)
    cert = matroid_union(Ms, w)
    ver = None
    if cert.ok:
        if a.verify_witness:
            ver = verify_certificate(Ms, w, cert)
        res = cert.covering.as_lists()
        return Outcome(True, res, verified=ver, summary=f"w-covering with {len(res)} classes")
    if a.verify_witness:
        ver = union_deficiency(Ms, w, cert.violating_set) < 0
    return Outcome(False, None, _s(cert.violating_set), ver, "no w-covering")


def cmd_intersect(a):
    from .union import max_common_independent
    M1, M2 = _matroid(a.f1), _matroid(a.f2)
    if M1.n != M2.n:
        raise InputError("matroids must share a ground set")
    I, A = max_common_independent(M1, M2)
    ver = None
    if a.verify_witness:
        ver = (M1._indep(I) and M2._indep(I)
               and popcount(I) == M1._rank(A) + M2._rank(M1.ground & ~A))
    return Outcome(True, {"set": _s(I), "size": popcount(I), "certificate": _s(A)}, verified=ver,
                   summary=f"common independent set of size {popcount(I)}")


# ---------------------------------------------------------------------------
# games

def _engine_alice(M, k):
    from .games import ALICE, best_move, clubs_holds, covering_strategy, two_covering
    from .errors import ProtocolViolation
    try:
        cov = two_covering([M] * k)
    except InfeasibleLists:
        cov = None
    except MatroidLabError:
        cov = None
    if cov is not None:
        strat = covering_strategy(cov)

        def move(state):
            mv = strat(state)
            s = state.copy()
            s.play(*mv)
            if not clubs_holds(s, cov):
                raise ProtocolViolation("covering invariant failed after Alice's move")
            return mv
        return move, "covering"

    def fallback(state):
        try:
            return best_move(state)
        except CapExceeded:
            return next(state.legal_moves(), None)
    return fallback, "minimax" if M.n <= 8 and k <= 4 else "first-legal"


def _engine_bob(M, k):
    from .games import best_move, bob_mk_move
    layout = getattr(M, "layout", None)
    if layout is not None:
        return (lambda state: bob_mk_move(state, layout.k)), "mk"

    def move(state):
        try:
            return best_move(state)
        except CapExceeded:
            return next(state.legal_moves(), None)
    return move, "minimax" if M.n <= 8 and k <= 4 else "first-legal"


def cmd_game(a):
    from .games import ALICE, BOB, alice_beats_every_bob, game_value, play_game, play_mk
    M = _matroid(a.file)
    k = a.colors
    if k is None or k < 1:
        raise InputError("--colors k is required")
    first = a.first
    if a.action == "value":
        v = game_value(M, k, first=first)
        return Outcome(v == ALICE, {"winner": v, "colors": k}, None if v == ALICE else {"winner": v},
                       summary=f"{v} wins the {k}-color game")
    if a.action == "run":
        layout = getattr(M, "layout", None)
        if layout is not None:
            alice = a.alice or "greedy"
            winner, st, counters = play_mk(layout.k, h=k, alice=alice, seed=a.seed, M=M)
            bounded = all(v["c"] <= layout.k for v in counters.values())
            res = {"winner": winner, "counters": {str(i): v for i, v in counters.items()},
                   "counters_bounded": bounded, "moves": [list(m) for m in st.history]}
            ok = winner == BOB and bounded
            return Outcome(ok, res, None if ok else res,
                           summary=f"{winner} wins on M_{layout.k} with {k} colors")
        alice, name = _engine_alice(M, k)
        won, line = alice_beats_every_bob([M] * k, alice, first, max_ground=a.max_ground)
        res = {"alice_wins_against_every_bob": won, "strategy": name, "colors": k}
        wit = None if won else [list(m) for m in line]
        return Outcome(won, res, wit, summary=("Alice" if won else "Bob") + f" wins with {k} colors")
    return game_repl(M, a.role, k, first, a.stdin, a.stdout)


def _read(stdin, stdout, prompt):
    sys.stderr.write(prompt)
    sys.stderr.flush()
    line = stdin.readline()
    if not line:
        return None
    return line.strip()


class _Abort(Exception):
    pass


def _ask(stdin, stdout, word, nargs=None):
    """Read a protocol line starting with ``word``; malformed lines re-prompt."""
    while True:
        line = _read(stdin, stdout, "> ")
        if line is None:
            raise _Abort()
        parts = line.split()
        if not parts or parts[0].upper() != word:
            stdout.write(f"ERROR expected {word} ...\n")
            continue
        try:
            args = [int(x) for x in parts[1:]]
        except ValueError:
            stdout.write("ERROR arguments must be integers\n")
            continue
        if nargs is not None and len(args) != nargs:
            stdout.write(f"ERROR {word} takes {nargs} arguments\n")
            continue
        return args


def game_repl(M, role, k, first="alice", stdin=None, stdout=None):
    from .games import ALICE, BOB, GameState
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    if role not in (ALICE, BOB):
        raise InputError("--role must be alice or bob")
    engine, name = (_engine_bob(M, k) if role == ALICE else _engine_alice(M, k))
    state = GameState([M] * k, turn=first)
    stdout.write(f"GAME n={M.n} colors={k} you={role} engine={name}\n")
    try:
        while not state.finished():
            if not state.has_move():
                break
            if state.turn == role:
                while True:
                    e, c = _ask(stdin, stdout, "MOVE", 2)
                    if state.legal(e, c):
                        break
                    why = "already colored" if e in state.colored else "not a legal element/color pair"
                    stdout.write(f"ERROR illegal move {e} {c}: {why}\n")
                state.play(e, c)
            else:
                e, c = engine(state)
                state.play(e, c)
                stdout.write(f"MOVE {e} {c}\n")
    except _Abort:
        stdout.write("ABORT end of input\n")
        return Outcome(False, {"aborted": True, "moves": [list(m) for m in state.history]},
                       summary="input ended"), EXIT_INPUT
    winner = ALICE if state.finished() else BOB
    stdout.write(f"WINNER {winner}\n")
    return Outcome(True, {"winner": winner, "moves": [list(m) for m in state.history]},
                   summary=f"{winner} wins")


def cmd_online(a):
    from .chroma import chromatic_number
    from .games import OnlineState, final_coloring_ok, online_alice_respond, online_exhaustive
    M = _matroid(a.file)
    ell = a.lists if a.lists is not None else chromatic_number(M)
    if a.action == "run":
        won, bad = online_exhaustive(M, ell, max_ground=a.max_ground)
        wit = None if won else [_s(V) for V in bad]
        return Outcome(won, {"alice_wins_against_every_reveal": won, "list_size": ell}, wit,
                       summary=("Alice" if won else "Bob") + f" wins with lists of size {ell}")
    stdin, stdout = a.stdin or sys.stdin, a.stdout or sys.stdout
    state = OnlineState(M, ell)
    stdout.write(f"ONLINE n={M.n} lists={ell} you={a.role}\n")
    try:
        if a.role == "bob":
            cache = {}
            while not state.over():
                while True:
                    V = _ask(stdin, stdout, "REVEAL")
                    m = as_mask(V, M.n) if all(0 <= e < M.n for e in V) else None
                    if m and not m & ~state.eligible():
                        break
                    stdout.write("ERROR reveal a nonempty set of elements with lists still open\n")
                X = online_alice_respond(state, m, cache)
                stdout.write("COLORSET " + " ".join(str(e) for e in X) + "\n")
            won = final_coloring_ok(state)
        else:
            colored = 0
            won = True
            rnd = 0
            while True:
                open_ = sum(1 << e for e in range(M.n) if not colored >> e & 1 and state.remaining_l[e] > 0)
                if any(not colored >> e & 1 and state.remaining_l[e] == 0 for e in range(M.n)):
                    won = False
                    break
                if not open_:
                    break
                rnd += 1
                for e in bits_of(open_):
                    state.remaining_l[e] -= 1
                stdout.write("REVEAL " + " ".join(str(e) for e in bits_of(open_)) + "\n")
                while True:
                    X = _ask(stdin, stdout, "COLORSET")
                    xm = as_mask(X, M.n) if all(0 <= e < M.n for e in X) else None
                    if xm is not None and not xm & ~open_ and M._indep(xm):
                        break
                    stdout.write("ERROR color an independent subset of the revealed set\n")
                colored |= xm
    except _Abort:
        stdout.write("ABORT end of input\n")
        return Outcome(False, {"aborted": True}, summary="input ended"), EXIT_INPUT
    winner = "alice" if won else "bob"
    stdout.write(f"WINNER {winner}\n")
    return Outcome(True, {"winner": winner}, summary=f"{winner} wins")


def cmd_indicated(a):
    from .chroma import chromatic_number
    from .games import indicated_alice, indicated_exhaustive
    from .union import partition_into_independent
    M = _matroid(a.file)
    k = a.colors if a.colors is not None else chromatic_number(M)
    cert = partition_into_independent(M, k)
    if a.action == "run":
        if not cert.ok:
            return Outcome(False, {"colors": k}, _s(cert.violating_set), summary=f"M is not {k}-colorable")
        won, bad = indicated_exhaustive([M] * k, cert.covering, max_ground=a.max_ground)
        return Outcome(won, {"alice_wins_against_every_bob": won, "colors": k},
                       None if won else [list(x) for x in bad],
                       summary=("Alice" if won else "Bob") + f" wins with {k} colors")
    stdin, stdout = a.stdin or sys.stdin, a.stdout or sys.stdout
    stdout.write(f"INDICATED n={M.n} colors={k} you={a.role}\n")
    U = [0] * k
    won = True
    try:
        if a.role == "bob":
            if not cert.ok:
                raise InputError(f"M is not {k}-colorable")
            alice = indicated_alice([M] * k, cert.covering)
            while not alice.done():
                e = alice.next_indication()
                stdout.write(f"INDICATE {e}\n")
                cols = alice.legal_colors(e)
                if not cols:
                    won = False
                    break
                while True:
                    f, c = _ask(stdin, stdout, "MOVE", 2)
                    if f == e and c in cols:
                        break
                    stdout.write(f"ERROR color element {e} with one of {cols}\n")
                alice.on_bob_color(None, e, c)
        else:
            done = 0
            while done != M.ground:
                while True:
                    (e,) = _ask(stdin, stdout, "INDICATE", 1)
                    if 0 <= e < M.n and not done >> e & 1:
                        break
                    stdout.write("ERROR indicate an uncolored element\n")
                cols = [c for c in range(1, k + 1) if M._extends(U[c - 1], e)]
                if not cols:
                    won = False
                    break
                U[cols[0] - 1] |= 1 << e
                done |= 1 << e
                stdout.write(f"MOVE {e} {cols[0]}\n")
    except _Abort:
        stdout.write("ABORT end of input\n")
        return Outcome(False, {"aborted": True}, summary="input ended"), EXIT_INPUT
    winner = "alice" if won else "bob"
    stdout.write(f"WINNER {winner}\n")
    return Outcome(True, {"winner": winner}, summary=f"{winner} wins")


# ---------------------------------------------------------------------------
# simplicial

def _sets_arg(text):
    v = _json_arg(text)
    if isinstance(v, dict) and "facets" in v:
        v = v["facets"]
    return [tuple(sorted(int(x) for x in S)) for S in v]


def cmd_kk(a):
    from .simplicial import cascade, delta, is_valid_fvector, shadow, squashed_prefix
    if a.action == "shadow":
        if a.sets is not None:
            U = _sets_arg(a.sets)
        elif a.k is not None and a.n is not None:
            U = squashed_prefix(a.k, a.n)
        else:
            raise InputError("give --sets or both -k and -n")
        sh = shadow(U)
        res = {"size": len(sh), "shadow": [list(S) for S in sh]}
        if U:
            k = len(U[0])
            bound = delta(len(U), k) if k >= 1 else 0
            res["lower_bound"] = bound
            ok = len(sh) >= bound
            return Outcome(ok, res, None if ok else {"size": len(sh), "bound": bound},
                           summary=f"shadow has {len(sh)} sets (bound {bound})")
        return Outcome(True, res, summary="empty family")
    if a.action == "cascade":
        if a.k is None or a.n is None:
            raise InputError("give -k and -n")
        rep = cascade(a.n, a.k)
        res = {"terms": [[x, j] for x, j in rep.pairs()], "delta": delta(a.n, a.k)}
        return Outcome(True, res, summary=" + ".join(f"C({x},{j})" for x, j in rep.pairs()))
    f = _ints(a.f)
    ok = is_valid_fvector(f)
    wit = None
    if not ok:
        for k in range(1, len(f)):
            if f[k - 1] < delta(f[k], k + 1):
                wit = {"index": k, "f_k": f[k], "f_km1": f[k - 1], "needed": delta(f[k], k + 1)}
                break
        if wit is None:
            wit = {"negative": [x for x in f if x < 0]}
    return Outcome(ok, {"valid": ok}, wit, summary="valid f-vector" if ok else "not an f-vector")


def cmd_complex(a):
    from .simplicial import (Complex, extremal_decomposition, is_extremal, is_vertex_decomposable,
                             verify_shedding)
    obj = _json_arg(a.file)
    D = Complex.from_json(obj)
    if a.action == "extremal":
        if not D.pure:
            return Outcome(False, {"extremal": False, "pure": False}, {"reason": "not pure"},
                           summary="complex is not pure")
        ext = is_extremal(D)
        from .simplicial import delta, shadow
        k = len(D.facets[0])
        wit = None if ext else {"facets": len(D.facets), "ridges": len(shadow(D.facets)),
                                "least_possible": delta(len(D.facets), k)}
        return Outcome(ext, {"extremal": ext, "f_vector": list(D.f_vector)}, wit,
                       summary="extremal" if ext else "not extremal")
    if D.pure and D.dimension >= 1 and is_extremal(D):
        tree = extremal_decomposition(D)
        how = "extremal"
    else:
        ok, tree = is_vertex_decomposable(D)
        how = "search"
        if not ok:
            return Outcome(False, {"vertex_decomposable": False}, {"reason": "no shedding tree"},
                           summary="not vertex decomposable")
    ver = verify_shedding(D, tree) if a.verify_witness else None
    return Outcome(True, {"vertex_decomposable": True, "method": how, "tree": _tree_json(tree)},
                   verified=ver, summary="vertex decomposable")


def _tree_json(t):
    if t == "empty":
        return "empty"
    if t[0] == "vertex":
        return {"vertex": t[1]}
    x, lk, dl = t
    return {"shed": x, "link": _tree_json(lk), "deletion": _tree_json(dl)}


# ---------------------------------------------------------------------------
# exchange

def _bases_json(seq):
    return [_s(B) for B in seq]


def cmd_white(a):
    from .exchange import (BaseSequence, apply_moves, blasiak_graph, exchange_distance, is_compatible,
                           is_strongly_base_orderable, sbo_exchange_path, sbo_pair_brute)
    M = _matroid(a.file)
    if a.action == "te":
        ok, pair = te_verify_cli(M, a.n, a.relation)
        wit = None if ok else [_bases_json(pair[0]), _bases_json(pair[1])]
        ver = None
        if a.verify_witness and not ok:
            ver = is_compatible(pair[0], pair[1]) and exchange_distance(M, pair[0], pair[1], a.relation) is None \
                if a.relation != "r3" else is_compatible(pair[0], pair[1])
        return Outcome(ok, {"relation": a.relation, "n": a.n, "connected": ok}, wit, ver,
                       summary="every class connected" if ok else "a class is disconnected")
    if a.action == "sbo":
        ok, cert = is_strongly_base_orderable(M)
        ver = None
        if a.verify_witness:
            ver = cert.verify(M) if ok else not sbo_pair_brute(M, *cert)
        return Outcome(ok, {"strongly_base_orderable": ok}, None if ok else _bases_json(cert), ver,
                       summary="strongly base orderable" if ok else "not strongly base orderable")
    if a.action == "path":
        ok, cert = is_strongly_base_orderable(M)
        if not ok:
            return Outcome(False, None, _bases_json(cert), summary="matroid is not strongly base orderable")
        if a.source is not None and a.target is not None:
            X = BaseSequence(M, [as_mask(B, M.n) for B in _json_arg(a.source)])
            Y = BaseSequence(M, [as_mask(B, M.n) for B in _json_arg(a.target)])
        else:
            X, Y = random_compatible_pair(M, a.n, random.Random(a.seed))
        levels = []
        moves = sbo_exchange_path(M, X, Y, cert, levels)
        end = apply_moves(M, X, moves)
        res = {"from": _bases_json(X), "to": _bases_json(Y), "overlaps": levels,
               "moves": [[m.i, m.j, m.e, m.f] for m in moves]}
        ver = sorted(end) == sorted(Y) if a.verify_witness else None
        return Outcome(True, res, verified=ver, summary=f"{len(moves)} symmetric exchanges")
    k = a.n if a.n >= 2 else 2
    g = blasiak_graph(M, k)
    res = dict(g)
    if g["witness"] is not None:
        res["witness"] = [_bases_json(v) for v in g["witness"]]
    return Outcome(g["connected"], res, res["witness"],
                   summary=f"{g['vertices']} vertices, {g['components']} component(s)")


def te_verify_cli(M, n, relation):
    from .exchange import te_verify
    from .errors import enum_cap
    return te_verify(M, n, relation, cap=10 ** 6 if enum_cap(20) == 20 else enum_cap(20))


def random_compatible_pair(M, n, rng, steps=12):
    """A random base sequence and a shuffled random walk of multiple exchanges from it."""
    from .exchange import _pair_moves
    bases = sorted(M.bases())
    bset = set(bases)
    X = [rng.choice(bases) for _ in range(n)]
    Y = list(X)
    for _ in range(steps):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        mv = _pair_moves(M, bset, Y[i], Y[j], True)
        if mv:
            Y[i], Y[j] = rng.choice(mv)
    rng.shuffle(Y)
    return X, Y


# ---------------------------------------------------------------------------
# necklaces

def cmd_necklace(a):
    from .necklace import (GridNecklace, Necklace1D, fair_split_1d, fair_split_grid, min_cuts,
                           tight_example, verify_1d, verify_grid)
    if a.action == "tight":
        if a.k is None:
            raise InputError("give -k")
        N = tight_example(a.k, a.q)
        t = min_cuts(N, a.q)
        need = a.k * (a.q - 1)
        return Outcome(t == need, {"beads": str(N), "min_cuts": t, "bound": need},
                       None if t == need else {"min_cuts": t}, summary=f"{N} needs {t} cuts")
    if a.grid is not None:
        if a.action != "split":
            raise InputError("grids support only split")
        G = GridNecklace.parse(_json_arg(a.grid))
        budget = _ints(a.budget) if a.budget else [0] * G.cells.ndim
        S = fair_split_grid(G, a.q, budget)
        if S is None:
            return Outcome(False, None, {"budget": budget}, summary="no fair splitting within the budget")
        ver = verify_grid(G, a.q, S) if a.verify_witness else None
        return Outcome(True, S.to_json(), verified=ver, summary=f"cuts {S.cuts}")
    if a.beads is None:
        raise InputError("give --beads or --grid")
    N = Necklace1D.parse(a.beads)
    if a.action == "mincuts":
        t = min_cuts(N, a.q)
        return Outcome(True, t, summary=f"{t} cuts")
    t = a.t if a.t is not None else N.k * (a.q - 1)
    S = fair_split_1d(N, a.q, t)
    if S is None:
        return Outcome(False, None, {"max_cuts": t}, summary=f"no fair splitting with at most {t} cuts")
    ver = verify_1d(N, a.q, S) if a.verify_witness else None
    return Outcome(True, S.to_json(), verified=ver, summary=f"cuts {list(S.cuts)}")


# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized inputs")
    common.add_argument("--verify-witness", action="store_true", default=argparse.SUPPRESS,
                        help="re-check certificates and witnesses")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="accepted for compatibility; output is always JSON")
    p = argparse.ArgumentParser(prog="matroidlab", description="matroid coloring and exchange toolkit",
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)
    _add = sub.add_parser
    sub.add_parser = lambda name, **kw: _add(name, parents=[common], **kw)

    s = sub.add_parser("check")
    s.add_argument("file")
    s.add_argument("--cap", type=int, default=12)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("rank")
    s.add_argument("file")
    s.add_argument("--set")
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("chromatic")
    s.add_argument("file")
    s.add_argument("--fractional", action="store_true")
    s.set_defaults(func=cmd_chromatic)

    s = sub.add_parser("listcolor")
    s.add_argument("file")
    s.add_argument("--lists")
    s.add_argument("--size")
    s.add_argument("--weights")
    s.set_defaults(func=cmd_listcolor)

    s = sub.add_parser("union")
    s.add_argument("files", nargs="+")
    s.add_argument("--weights")
    s.set_defaults(func=cmd_union)

    s = sub.add_parser("intersect")
    s.add_argument("f1")
    s.add_argument("f2")
    s.set_defaults(func=cmd_intersect)

    s = sub.add_parser("game")
    s.add_argument("action", choices=["value", "run", "play"])
    s.add_argument("file")
    s.add_argument("--colors", "-k", type=int)
    s.add_argument("--first", choices=["alice", "bob"], default="alice")
    s.add_argument("--role", choices=["alice", "bob"], default="bob")
    s.add_argument("--alice", choices=["greedy", "random"])
    s.add_argument("--max-ground", type=int, default=12)
    s.set_defaults(func=cmd_game)

    s = sub.add_parser("online")
    s.add_argument("action", choices=["run", "play"])
    s.add_argument("file")
    s.add_argument("--lists", "-l", type=int)
    s.add_argument("--role", choices=["alice", "bob"], default="bob")
    s.add_argument("--max-ground", type=int, default=5)
    s.set_defaults(func=cmd_online)

    s = sub.add_parser("indicated")
    s.add_argument("action", choices=["run", "play"])
    s.add_argument("file")
    s.add_argument("--colors", "-k", type=int)
    s.add_argument("--role", choices=["alice", "bob"], default="bob")
    s.add_argument("--max-ground", type=int, default=7)
    s.set_defaults(func=cmd_indicated)

    s = sub.add_parser("kk")
    s.add_argument("action", choices=["shadow", "cascade", "fvector"])
    s.add_argument("--sets")
    s.add_argument("-k", type=int)
    s.add_argument("-n", type=int)
    s.add_argument("--f")
    s.set_defaults(func=cmd_kk)

    s = sub.add_parser("complex")
    s.add_argument("action", choices=["extremal", "decompose"])
    s.add_argument("file")
    s.set_defaults(func=cmd_complex)

    s = sub.add_parser("white")
    s.add_argument("action", choices=["te", "sbo", "path", "graph"])
    s.add_argument("file")
    s.add_argument("-n", type=int, default=2)
    s.add_argument("--relation", choices=["r1", "r2", "r3"], default="r2")
    s.add_argument("--from", dest="source")
    s.add_argument("--to", dest="target")
    s.set_defaults(func=cmd_white)

    s = sub.add_parser("necklace")
    s.add_argument("action", choices=["split", "mincuts", "tight"])
    s.add_argument("--beads")
    s.add_argument("--grid")
    s.add_argument("--budget")
    s.add_argument("-q", type=int, default=2)
    s.add_argument("-t", type=int)
    s.add_argument("-k", type=int)
    s.set_defaults(func=cmd_necklace)
    return p


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if hasattr(x, "item"):
        return x.item()
    return x


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    a.stdin, a.stdout = stdin, stdout
    a.seed = getattr(a, "seed", 0)
    a.verify_witness = getattr(a, "verify_witness", False)
    t0 = time.perf_counter()
    code = None
    try:
        out = a.func(a)
        if isinstance(out, tuple):
            out, code = out
    except CapExceeded as exc:
        out, code = Outcome(None, None, None, summary=f"cap exceeded: {exc}"), EXIT_CAP
        out.error = str(exc)
    except (InputError, MalformedSpec, LoopError, DivisibilityError, ValueError, InfeasibleLists) as exc:
        out, code = Outcome(None, None, None, summary=f"input error: {exc}"), EXIT_INPUT
        out.error = str(exc)
    env = {"ok": out.ok, "result": _jsonable(out.result), "witness": _jsonable(out.witness),
           "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3)}
    if out.verified is not None:
        env["verified"] = bool(out.verified)
    if getattr(out, "error", None):
        env["error"] = out.error
        env["ok"] = False
    if code is None:
        code = EXIT_OK if out.ok else EXIT_FAIL
        if out.verified is False:
            code = EXIT_FAIL
    stdout.write(json.dumps(env) + "\n")
    stdout.flush()
    if out.summary:
        stderr.write(out.summary + "\n")
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
