"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the summary lines are
printed at the end of the session) or directly as a script.
"""

import json
import random
import subprocess
import sys
import time

from quasitrees import deltamatroid as dm
from quasitrees.chords import chord_diagram_from_bouquet, intersection_matrix
from quasitrees.corpus import bouquet_corpus, random_ribbon_graph
from quasitrees.families import (
    FAMILIES,
    MIN_N,
    fib,
    fibonacci_poly,
    lucas,
    make_family,
    predicted_charpoly,
    predicted_kappa,
)
from quasitrees.linalg import char_poly, det_exact, identity_plus, principal_minor
from quasitrees.matchings import caterpillar, count_perfect_matchings, grid_product, path_graph
from quasitrees.ribbon import (
    boundary_histogram,
    contract_edge,
    delete_edge,
    parse_signed_rotation,
    partial_dual,
    partial_petrial,
    quasi_tree_count,
    quasi_tree_sets,
)

RESULTS: dict[int, tuple[str, bool, str]] = {}

CORPUS_SEED = 20240601
RIBBON_SEED = 7321
SETSYS_SEED = 99
COUNTEREXAMPLE = "-1,-2,3,1,2,4,3,4"
COUNTEREXAMPLE_SETS = {frozenset(s) for s in [(), (1,), (2,), (1, 3), (2, 3), (3, 4), (2, 3, 4), (1, 3, 4)]}


def record(num: int, title: str, ok: bool, detail: str = ""):
    RESULTS[num] = (title, ok, detail)
    line = f"[{'PASS' if ok else 'FAIL'}] {num:2d}. {title}" + (f" ({detail})" if detail else "")
    print(line)
    return ok


def _corpora():
    orientable = bouquet_corpus(CORPUS_SEED, 500, 10, twisted=0)
    one_twist = bouquet_corpus(CORPUS_SEED + 1, 500, 10, twisted=1)
    return orientable + one_twist


def _A(B):
    return intersection_matrix(chord_diagram_from_bouquet(B))


def _ribbon_corpus(count, max_edges, seed):
    rng = random.Random(seed)
    return [random_ribbon_graph(rng, max_edges) for _ in range(count)]


def test_01_family_closed_forms():
    start = time.perf_counter()
    bad = []
    count = 0
    for fid in FAMILIES:
        for n in range(MIN_N[fid], 13):
            count += 1
            if quasi_tree_count(make_family(fid, n)) != predicted_kappa(fid, n):
                bad.append((fid, n))
    secs = time.perf_counter() - start
    ok = not bad and secs < 60
    assert record(1, "family closed forms vs brute force, n <= 12", ok,
                  f"{count} instances, {len(bad)} mismatches, {secs:.1f}s"), bad


def test_02_matrix_quasi_tree():
    corpus = _corpora()
    bad = [B for B in corpus if det_exact(identity_plus(_A(B))) != quasi_tree_count(B)]
    assert record(2, "det(I+A) = kappa on 500 orientable + 500 one-twist bouquets", not bad,
                  f"{len(corpus)} bouquets, {len(bad)} mismatches"), bad[:3]


def test_03_counterexample():
    B = parse_signed_rotation(COUNTEREXAMPLE)
    kappa = quasi_tree_count(B)
    det = det_exact(identity_plus(_A(B)))
    family = {frozenset(s) for s in dm.from_ribbon_graph(B).sets()}
    ok = kappa == 8 and det == 14 and family == COUNTEREXAMPLE_SETS
    assert record(3, "two-twist counterexample: kappa 8, det 14, feasible sets", ok,
                  f"kappa={kappa}, det={det}, family match={family == COUNTEREXAMPLE_SETS}")


def test_04_principal_unimodular():
    bad = 0
    checked = 0
    for B in _corpora():
        n = B.num_edges
        if n > 8:
            continue
        A = _A(B)
        qt = set(quasi_tree_sets(B))
        for mask in range(1 << n):
            d = principal_minor(A, [i for i in range(n) if mask >> i & 1])
            checked += 1
            if d not in (0, 1) or (d == 1) != (mask in qt):
                bad += 1
    assert record(4, "principal minors are 0/1 and mark quasi-trees (n <= 8)", bad == 0,
                  f"{checked} minors, {bad} bad")


def test_05_delta_matroid_identities():
    bad = 0
    graphs = _ribbon_corpus(200, 7, RIBBON_SEED)
    for G in graphs:
        D = dm.from_ribbon_graph(G)
        labels = G.labels
        for mask in range(1 << len(labels)):
            A = G.subset_of(mask)
            if dm.twist(D, A) != dm.from_ribbon_graph(partial_dual(G, A)):
                bad += 1
        for e in labels:
            if dm.loop_complementation(D, e) != dm.from_ribbon_graph(partial_petrial(G, {e})):
                bad += 1
    assert record(5, "D*A = D(partial dual), D+e = D(partial Petrial)", bad == 0,
                  f"{len(graphs)} ribbon graphs, {bad} failures")


def test_06_deletion_contraction():
    graphs = _ribbon_corpus(150, 8, RIBBON_SEED + 1)
    graphs += [B for B in _corpora() if B.num_edges <= 8][:150]
    graphs += [make_family(fid, n) for fid in FAMILIES for n in range(MIN_N[fid], 9)]
    bad = 0
    for G in graphs:
        h = boundary_histogram(G)
        for e in G.labels:
            if h != boundary_histogram(delete_edge(G, e)) + boundary_histogram(contract_edge(G, e)):
                bad += 1
        for mask in range(1 << G.num_edges):
            if boundary_histogram(partial_dual(G, G.subset_of(mask))) != h:
                bad += 1
    assert record(6, "f_n deletion-contraction and partial-dual invariance (<= 8 edges)", bad == 0,
                  f"{len(graphs)} graphs, {bad} failures")


def test_07_four_term():
    rng = random.Random(SETSYS_SEED)
    bad = 0
    pairs = 0
    for _ in range(500):
        D = dm.random_set_system(rng, rng.randint(2, 10), rng.choice([0.1, 0.3, 0.5, 0.7]))
        for a in D.ground:
            for b in D.ground:
                if a != b:
                    pairs += 1
                    bad += not dm.four_term_check(D, a, b)[4]
    example_bad = []
    for n in range(3, 11):
        F = make_family("F", n)
        sizes = dm.four_term_check(dm.from_ribbon_graph(F), 1, 2)
        slid = quasi_tree_count(dm.ribbon_handle_slide(F, 1, 2))
        expected = (fib(n + 1), fib(n + 1) + fib(n - 2), fib(n), lucas(n - 1), True)
        identity = fib(n + 1) + lucas(n - 1) - fib(n) == fib(n + 1) + fib(n - 2)
        if sizes != expected or slid != fib(n + 1) + fib(n - 2) or not identity:
            example_bad.append(n)
    ok = bad == 0 and not example_bad
    assert record(7, "four-term relation on 500 set systems and the F_n slide example", ok,
                  f"{pairs} ordered pairs, {bad} failures, example failures {example_bad}")


def test_08_characteristic_polynomials():
    bad = []
    checked = 0
    for fid in ("Fp", "Fp1", "F1", "W1", "Fpn"):
        for n in range(MIN_N[fid], 11):
            checked += 1
            if predicted_charpoly(fid, n) != char_poly(_A(make_family(fid, n))):
                bad.append((fid, n))
    for n in range(1, 11):
        checked += 1
        if char_poly(_A(make_family("F", n))) != fibonacci_poly(n + 1):
            bad.append(("F", n))
    assert record(8, "characteristic polynomial formulas, coefficientwise", not bad,
                  f"{checked} matrices, mismatches {bad}"), bad


def test_09_matchings():
    bad = []
    for n in range(3, 13):
        ladder = count_perfect_matchings(grid_product(path_graph(n)))
        cat = count_perfect_matchings(grid_product(caterpillar(n)))
        split = (count_perfect_matchings(grid_product(path_graph(n - 1)))
                 + count_perfect_matchings(grid_product(path_graph(n - 3))))
        if ladder != fib(n + 1) or cat != lucas(n - 1) or cat != split:
            bad.append(n)
    assert record(9, "perfect matchings of P2 x P_n and P2 x T_n, n = 3..12", not bad,
                  f"mismatches at n = {bad}"), bad


DETERMINISM_RUNS = [
    ["count", "--family", "W1", "--n", "16", "--methods", "all"],
    ["count", "--rotation", COUNTEREXAMPLE, "--methods", "brute,det"],
    ["verify-table2", "--max-n", "12"],
    ["dm", "--rotation", COUNTEREXAMPLE, "--op", "list"],
    ["charpoly", "--family", "Fpn", "--n", "7"],
    ["matrix", "--family", "Fp", "--n", "6"],
    ["matchings", "--graph", "caterpillar", "--n", "12"],
    ["random-check", "--count", "40", "--seed", "3"],
]


def _cli(args):
    proc = subprocess.run([sys.executable, "-m", "quasitrees", *args, "--format", "json"],
                          capture_output=True)
    return proc.returncode, proc.stdout


def test_10_determinism():
    bad = []
    for args in DETERMINISM_RUNS:
        outs = [_cli(args), _cli(args), _cli(args + ["--threads", "1"]), _cli(args + ["--threads", "8"])]
        json.loads(outs[0][1])
        if len(set(outs)) != 1:
            bad.append(args[0])
    assert record(10, "JSON byte-identical across runs and --threads 1 vs 8", not bad,
                  f"{len(DETERMINISM_RUNS)} commands, differing: {bad}"), bad


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
