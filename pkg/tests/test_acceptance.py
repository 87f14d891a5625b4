"""The eleven acceptance criteria, one test each; every test prints a single pass/fail line."""
import random
import time
from collections import Counter
from fractions import Fraction
from itertools import combinations, product

import pytest

from matroidlab.chroma import (InfeasibleLists, canonical_lists, chromatic_by_partition_search,
                               chromatic_number, color_from_lists, decide_w_colorable, fractional_chromatic,
                               seymour_deficiency)
from matroidlab.cli import random_compatible_pair
from matroidlab.core import check_axioms, complete_graph, graphic, transversal, uniform
from matroidlab.corpus import corpus, small
from matroidlab.exchange import (is_sbo_brute, is_strongly_base_orderable, sbo_exchange_path, te_verify)
from matroidlab.games import (BOB, alice_beats_every_bob, construct_Mk, covering_strategy,
                              game_chromatic_number, indicated_exhaustive, online_exhaustive, play_mk,
                              two_covering)
from matroidlab.necklace import goldberg_west_scan, min_cuts, tight_example
from matroidlab.simplicial import (Complex, delta, extremal_shedding_vertex, is_extremal,
                                   is_vertex_decomposable, shadow, squashed_prefix)
from matroidlab.simplicial.enumerate import extremal_classes, kk_check, mask_to_sets
from matroidlab.union import partition_into_independent


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail
    return emit


def _viable_choice(M, lists, w):
    """Brute force: can each element take w(e) colors from its list with every color class independent?"""
    options = [list(combinations(sorted(L), w[e])) for e, L in enumerate(lists)]
    for pick in product(*options):
        classes = {}
        for e, cs in enumerate(pick):
            for c in cs:
                classes[c] = classes.get(c, 0) | 1 << e
        if all(M._indep(V) for V in classes.values()):
            return True
    return False


def _colorable(M, lists, w=None):
    try:
        col = color_from_lists(M, lists, w)
    except InfeasibleLists:
        return False
    assert col.verify(M, lists)
    return True


def test_criterion_1_axioms(report):
    t = time.time()
    items = corpus()
    bad = [name for name, M in items if not check_axioms(M).ok]
    dt = time.time() - t
    report(1, len(items) >= 30 and not bad and dt < 60,
           f"{len(items)} matroids, failures {bad}, {dt:.1f}s")


def test_criterion_2_formula(report):
    bad = []
    for name, M in corpus():
        chi = chromatic_number(M)
        if chi != chromatic_by_partition_search(M) or -(-fractional_chromatic(M) // 1) != chi:
            bad.append(name)
    K5 = complete_graph(5)
    exact = (chromatic_number(uniform(4, 2)) == 2 and chromatic_number(K5) == 3
             and fractional_chromatic(K5) == Fraction(5, 2))
    report(2, not bad and exact, f"mismatches {bad}, exact values {'ok' if exact else 'wrong'}")


def _pool_minus_one(n, chi):
    """Every element's list is the pool 1..chi+1 minus one color; assignments up to relabeling colors."""
    def rec(pre, used):
        if len(pre) == n:
            yield tuple(pre)
            return
        for c in range(min(used + 1, chi + 1)):
            yield from rec(pre + [c], max(used, c + 1))
    pool = set(range(1, chi + 2))
    for omit in rec([], 0):
        yield [pool - {c + 1} for c in omit]


def test_criterion_3_seymour(report):
    checked, failures = 0, []
    for name, M in small(7):
        chi = chromatic_number(M)
        for lists in _pool_minus_one(M.n, chi):
            checked += 1
            if not _colorable(M, lists):
                failures.append((name, lists))
    report(3, checked > 0 and not failures, f"{checked} list assignments, {len(failures)} failures")


def test_criterion_4_equivalence(report):
    rng = random.Random(4)
    items = [c for c in corpus() if c[1].n <= 7][:20]
    bad, yes = [], 0
    for name, M in items:
        chi = chromatic_number(M)
        sizes = [rng.randint(max(1, chi - 1), chi + 1) for _ in range(M.n)]
        w = [rng.choice([1, 1, 1, 2]) if sizes[e] >= 2 else 1 for e in range(M.n)]
        d = decide_w_colorable(M, sizes, w)
        canon = canonical_lists(sizes)
        canon_ok = _colorable(M, canon, w)
        if canon_ok != _viable_choice(M, canon, w) or canon_ok != d.ok:
            bad.append((name, "canonical"))
            continue
        if not d.ok:
            if seymour_deficiency(M, sizes, w, d.witness) >= 0:
                bad.append((name, "witness"))
            continue
        yes += 1
        pool = list(range(1, max(sizes) + 2))
        for _ in range(200):
            lists = [set(rng.sample(pool, s)) for s in sizes]
            if not _colorable(M, lists, w):
                bad.append((name, "random"))
                break
    report(4, len(items) == 20 and not bad, f"20 instances ({yes} colorable), disagreements {bad}")


def test_criterion_5_game_bound(report):
    t = time.time()
    losses = []
    for name, M in small(9):
        k = 2 * chromatic_number(M)
        Ms = [M] * k
        won, line = alice_beats_every_bob(Ms, covering_strategy(two_covering(Ms)))
        if not won:
            losses.append((name, line))
    over = []
    values = Counter()
    for name, M in small(6):
        chi = chromatic_number(M)
        g = game_chromatic_number(M, start=chi, stop=2 * chi, max_colors=2 * chi)
        if g is None or g > 2 * chi:
            over.append(name)
        else:
            values[g - chi] += 1
    report(5, not losses and not over,
           f"covering losses {[n for n, _ in losses]}, game values above bound {over}, "
           f"excess over chi {dict(values)}, {time.time() - t:.1f}s")


def test_criterion_6_mk(report):
    M = construct_Mk(3)
    results = Counter()
    counters_ok = True
    for alice in ("greedy", "random"):
        for seed in range(100):
            w, s, cnt = play_mk(3, 4, alice, seed, M)
            results[alice, w == BOB and s.is_proper()] += 1
            counters_ok &= all(v["c"] <= 3 for v in cnt.values())
    ok = results["greedy", True] == 100 and results["random", True] == 100 and counters_ok
    report(6, ok, f"Bob wins greedy {results['greedy', True]}/100, random {results['random', True]}/100, "
                  f"counters {'bounded' if counters_ok else 'exceeded'}")


def test_criterion_7_online_indicated(report):
    on_bad, ind_bad = [], []
    n_on = n_ind = 0
    for name, M in small(7):
        chi = chromatic_number(M)
        if M.n <= 5:
            n_on += 1
            if not online_exhaustive(M, chi)[0]:
                on_bad.append(name)
        n_ind += 1
        if not indicated_exhaustive([M] * chi, partition_into_independent(M, chi).covering)[0]:
            ind_bad.append(name)
    report(7, not on_bad and not ind_bad,
           f"online {n_on} matroids, losses {on_bad}; indicated {n_ind} matroids, losses {ind_bad}")


def test_criterion_8_kruskal_katona(report):
    bad = {}
    for k in (2, 3):
        best, viol = kk_check(7, k, max_n=12)
        if viol or sorted(best) != list(range(1, 13)):
            bad[k] = viol or "missing sizes"
    prefix_bad = [(n, k) for k in range(2, 5) for n in range(1, 201)
                  if shadow(squashed_prefix(k, n)) != squashed_prefix(k - 1, delta(n, k))]
    report(8, not bad and not prefix_bad,
           f"exhaustive violations {bad}, prefix mismatches {prefix_bad[:5]}")


def test_criterion_9_extremal_vd(report):
    counts, bad = {}, []
    for k in range(1, 5):
        classes = extremal_classes(7, k)
        counts[k] = len(classes)
        for mask in classes:
            D = Complex(mask_to_sets(7, k, mask))
            if not is_extremal(D) or not is_vertex_decomposable(D)[0]:
                bad.append((k, mask))
                continue
            if k >= 2:
                x = extremal_shedding_vertex(D)
                L, R = D.link(x), D.deletion(x)
                if not (is_extremal(L) and R.pure and is_extremal(R)):
                    bad.append((k, mask))
    report(9, not bad, f"extremal classes by facet size {counts}, failures {bad[:5]}")


def _simple_graphs_4():
    """One simple graph per isomorphism class on at most four vertices, with at least one edge."""
    from itertools import permutations
    E = list(combinations(range(4), 2))
    seen, out = set(), []
    for r in range(1, 7):
        for S in combinations(E, r):
            key = min(tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in S)) for p in permutations(range(4)))
            if key not in seen:
                seen.add(key)
                out.append(graphic(4, list(S)))
    return out


def test_criterion_10_white(report):
    Ts = [transversal(6, [[0, 1, 2], [2, 3], [3, 4, 5]]), transversal(7, [[0, 1, 2, 3], [3, 4], [4, 5, 6], [0, 6]])]
    targets = [uniform(4, 2), complete_graph(4)] + _simple_graphs_4() + Ts
    te_bad = [(i, n) for i, M in enumerate(targets) for n in (1, 2, 3) if not te_verify(M, n, "r2")[0]]
    rng = random.Random(10)
    pool = [uniform(4, 2), uniform(5, 2), uniform(6, 3)] + Ts
    certs = [is_strongly_base_orderable(M) for M in pool]
    path_bad = 0
    for trial in range(100):
        j = trial % len(pool)
        M, (ok, cert) = pool[j], certs[j]
        X, Y = random_compatible_pair(M, rng.randint(2, 4), rng)
        seq = list(X)
        try:
            for mv in sbo_exchange_path(M, X, Y, cert):
                seq = mv.apply(M, seq)
        except ValueError:
            path_bad += 1
            continue
        path_bad += Counter(seq) != Counter(Y)
    sbo = (not is_strongly_base_orderable(complete_graph(4))[0] and not is_sbo_brute(complete_graph(4))
           and is_strongly_base_orderable(uniform(4, 2))[0] and is_sbo_brute(uniform(4, 2)))
    report(10, not te_bad and not path_bad and sbo,
           f"te r2 on {len(targets)} matroids failures {te_bad}, paths {100 - path_bad}/100 valid, "
           f"sbo values {'ok' if sbo else 'wrong'}")


def test_criterion_11_necklace(report):
    t = time.time()
    scan = goldberg_west_scan(14, 3)
    tight_bad = [(k, q) for k in (1, 2, 3) for q in (2, 3) if min_cuts(tight_example(k, q), q) != k * (q - 1)]
    dt = time.time() - t
    report(11, not scan["violations"] and not tight_bad and dt < 300,
           f"{scan['checked']} necklaces, violations {scan['violations']}, "
           f"tight failures {tight_bad}, {dt:.1f}s")
