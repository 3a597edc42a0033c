"""Acceptance criteria. Each test prints one PASS/FAIL line with its tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` (lines are printed even
without ``-s``).
"""
import random
import time

import pytest

from unitag.experiment import ExperimentSpec, random_pools, run_experiment
from unitag.hybrid import Pool, build_graph, build_graph_naive, validate_assignment
from unitag.multiplex import VARIANTS, schedule_graph
from unitag.seq import g, h
from unitag.tagset import (
    TagSetConfig,
    greedy_generate,
    oracle_verify,
    token_occurrences,
    verify_feasible,
)
from unitag.tokens import (
    TokenClass,
    class_size,
    enumerate_tokens,
    lemma1_bounds,
    theorem1_tag_bound,
)
from oracles import (
    class_by_pattern,
    count_selfcomp,
    count_weight,
    feasible_literal,
    token_universe,
)


@pytest.fixture
def verdict(capsys):
    """Call as verdict(no, name, ok, detail, started, limit_s); asserts at the end."""
    def report(no, name, ok, detail, started, limit):
        elapsed = time.perf_counter() - started
        ok = bool(ok) and elapsed < limit
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {no}: {name}: {detail} "
                  f"({elapsed:.1f}s, limit {limit}s)")
        assert ok, detail
    return report


@pytest.fixture(scope="module")
def greedy_cache():
    cache = {}

    def get(c, c3=True, **kw):
        key = (c, c3, tuple(sorted(kw.items())))
        if key not in cache:
            cache[key] = greedy_generate(TagSetConfig(c, enforce_c3=c3, **kw))
        return cache[key]
    return get


def test_1_bounds(verdict):
    t0 = time.perf_counter()
    expect = {8: (132, 109, 1726), 9: (389, 312, 4672), 10: (1161, 896, 12780)}
    got = {}
    for c in expect:
        by_len = theorem1_tag_bound(c, l=20).tag_bound
        by_wt = theorem1_tag_bound(c, h=28).tag_bound
        both = theorem1_tag_bound(c, l=20, h=28).tag_bound
        tokens = lemma1_bounds(c)[0]
        got[c] = (by_len, by_wt, tokens)
        assert both == by_wt
    verdict(1, "bound reproduction", got == expect, f"got {got}, exact match required", t0, 1)


def test_2_counting(verdict):
    t0 = time.perf_counter()
    g_ok = all(g(n) == count_weight(n) for n in range(13))
    h_ok = all(h(n) == count_selfcomp(n) for n in range(11))
    h_ok &= all(h(n) == 0 for n in range(1, 41, 2))
    uni_ok = all(enumerate_tokens(c) == token_universe(c) for c in range(2, 9))
    cls_ok = True
    for c in range(4, 9):
        sizes = {k: 0 for k in TokenClass}
        for t in token_universe(c):
            sizes[class_by_pattern(t, c)] += 1
        cls_ok &= all(sizes[k] == class_size(k, c) for k in TokenClass)
    detail = f"g<=12 {g_ok}, h<=10 {h_ok}, universe c<=8 {uni_ok}, classes c<=8 {cls_ok}; exact"
    verdict(2, "counting functions", g_ok and h_ok and uni_ok and cls_ok, detail, t0, 10)


def test_3_greedy_feasibility(verdict, greedy_cache):
    t0 = time.perf_counter()
    small_ok = True
    for c in (4, 5, 6):
        for kw in (dict(length=c + 3), dict(min_weight=2 * c, max_weight=2 * c + 2)):
            for c3 in (False, True):
                conf = TagSetConfig(c, enforce_c3=c3, **kw)
                tags = greedy_cache(c, c3, **kw)
                small_ok &= bool(tags) and oracle_verify(tags, conf).ok
                small_ok &= feasible_literal(tags, c, c3)
    conf = TagSetConfig(8, length=20)
    tags = greedy_cache(8, True, length=20)
    big_ok = verify_feasible(tags, conf).ok and 80 <= len(tags) <= 132
    min_occ = min(token_occurrences([t], 8) for t in tags)
    ok = small_ok and big_ok and min_occ >= 13
    detail = (f"c=4..6 oracle-clean {small_ok}; c=8 l=20 C2+C3 size {len(tags)} "
              f"in [80, 132], min token occurrences {min_occ} >= 13")
    verdict(3, "greedy feasibility", ok, detail, t0, 60)


def test_4_c3_halving(verdict, greedy_cache):
    t0 = time.perf_counter()
    ratios = {}
    for c in (8, 9, 10):
        with_c3 = len(greedy_cache(c, True, length=20))
        without = len(greedy_cache(c, False, length=20))
        ratios[c] = round(with_c3 / without, 3)
    ok = all(0.35 <= r <= 0.65 for r in ratios.values())
    verdict(4, "C3 halving", ok, f"ratios {ratios}, tolerance [0.35, 0.65]", t0, 300)


def test_5_regime_ordering(verdict, greedy_cache):
    t0 = time.perf_counter()
    counts = {}
    ok = True
    for c in (8, 9, 10):
        a = len(greedy_cache(c, True, length=20))
        b = len(greedy_cache(c, True, min_weight=28, max_weight=32))
        d = len(greedy_cache(c, True, length=20, min_weight=28, max_weight=32))
        counts[c] = (a, b, d)
        ok &= a >= b >= d
    verdict(5, "regime ordering", ok,
            f"(length, weight, both) {counts}, require length >= weight >= both", t0, 300)


def _random_instance(rng, seed):
    c = rng.randint(3, 6)
    tags = ["".join(rng.choice("ACGT") for _ in range(rng.randint(4, 10)))
            for _ in range(rng.randint(1, 12))]
    pools = random_pools(rng.randint(1, 30), rng.randint(1, 4), rng.randint(3, 9), seed=seed)
    return pools, tags, c


def test_6_multiplex_validity(verdict):
    t0 = time.perf_counter()
    rng = random.Random(2024)
    bad = 0
    n = 150
    for i in range(n):
        pools, tags, c = _random_instance(rng, i)
        graph = build_graph(pools, tags, c)
        for variant in VARIANTS:
            res = schedule_graph(graph, variant)
            covered = sorted(sel.pool for arr in res.plan for sel in arr)
            if covered != list(range(len(pools))):
                bad += 1
            elif not all(validate_assignment(arr, graph) for arr in res.plan):
                bad += 1
    verdict(6, "multiplexing validity", bad == 0,
            f"{n} instances x {len(VARIANTS)} variants, {bad} invalid (0 allowed)", t0, 60)


@pytest.mark.slow
def test_7_pool_awareness(verdict):
    t0 = time.perf_counter()
    tags = greedy_generate(TagSetConfig(8, length=11, enforce_c3=False))
    spec = ExperimentSpec([1000], [1, 5], tags, [len(tags)], c=7,
                          algorithms=["primer-del-plus"], replicates=10, seed=1)
    rows, _ = run_experiment(spec)
    mean = {r.pool_size: r.arrays_mean for r in rows}
    drop = 1 - mean[5] / mean[1]
    ok = len(tags) >= 500 and drop >= 0.20
    detail = (f"{len(tags)} tags (>= 500), arrays {mean[1]:.2f} -> {mean[5]:.2f}, "
              f"reduction {drop:.1%} (>= 20%)")
    verdict(7, "pool-awareness benefit", ok, detail, t0, 600)


def test_8_baseline_degeneracy(verdict):
    t0 = time.perf_counter()
    rng = random.Random(8)
    differ = 0
    n = 60
    for i in range(n):
        pools, tags, c = _random_instance(rng, 10_000 + i)
        pools = [Pool(p.id, p.primers[:1]) for p in pools]
        graph = build_graph(pools, tags, c)
        results = [schedule_graph(graph, v) for v in VARIANTS]
        differ += any(r != results[0] for r in results[1:])
    verdict(8, "baseline degeneracy", differ == 0,
            f"{n} size-1 instances, {differ} with differing variants (0 allowed)", t0, 60)


def test_9_oracle_equivalence(verdict):
    t0 = time.perf_counter()
    rng = random.Random(99)
    mismatch = 0
    for _ in range(1000):
        c = rng.randint(4, 5)
        tags = ["".join(rng.choice("ACGT") for _ in range(rng.randint(1, 10)))
                for _ in range(rng.randint(0, 8))]
        conf = TagSetConfig(c, min_weight=c, enforce_c3=rng.random() < 0.7)
        mismatch += verify_feasible(tags, conf).ok != oracle_verify(tags, conf).ok
    graph_mismatch = 0
    for i in range(100):
        pools, tags, c = _random_instance(rng, 20_000 + i)
        graph_mismatch += build_graph(pools, tags, c).tags_of != build_graph_naive(pools, tags, c).tags_of
    ok = mismatch == 0 and graph_mismatch == 0
    verdict(9, "oracle equivalences", ok,
            f"feasibility mismatches {mismatch}/1000, graph mismatches {graph_mismatch}/100 "
            "(0 allowed)", t0, 120)
