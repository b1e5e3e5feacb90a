"""Exit criteria.  Each test prints one PASS/FAIL line; the lines are
collected again in the terminal summary."""

import gc
import random
import statistics
import time

from trapbit import _kernels, campaign, independence as ind, matching
from trapbit.diagram import adjacent, augment, random_diagram, to_graph, validate
from trapbit.fenwick import SumFenwick, query_path
from trapbit.oracle import brute_enumerate, brute_lemma_split
from trapbit.report import analyze

from conftest import record

TABLE_A = [1, 0, 2, 1, 1, 3, 0, 4, 2, 5, 2, 2, 3, 1, 0, 2]
TABLE_TREE = [1, 1, 2, 4, 1, 4, 0, 12, 2, 7, 2, 11, 3, 4, 0, 29]
TABLE_CUMSUM = [1, 1, 3, 4, 5, 8, 8, 12, 14, 19, 21, 23, 26, 27, 27, 29]


def table_tree():
    f = SumFenwick(16)
    for i, v in enumerate(TABLE_A, start=1):
        f.update(i, v)
    return f


def test_01_table_one():
    f = table_tree()
    tree_ok = sum(f.tree[i] == TABLE_TREE[i - 1] for i in range(1, 17))
    sums_ok = sum(f.prefix_sum(i) == TABLE_CUMSUM[i - 1] for i in range(1, 17))
    ok = tree_ok == 16 and sums_ok == 16
    assert record(1, "Table 1 tree and cumulative sums", ok, f"{tree_ok}+{sums_ok}/32 equal")


def test_02_decomposition():
    f = table_tree()
    before = f.visits
    value = f.prefix_sum(11)
    nodes = query_path(11)
    ok = nodes == [11, 10, 8] and f.visits - before == 3 and value == 21
    assert record(2, "prefix_sum(11) reads nodes {11,10,8} = 21", ok, f"nodes={nodes} value={value}")


def test_03_oracle_campaign():
    t0 = time.perf_counter()
    bad = []
    trials = 0
    for n in range(1, 13):
        for t in range(1000):
            seed = 1_000_003 * n + t
            d = random_diagram(n, seed)
            problems = campaign.check_diagram(d)
            trials += 1
            if problems:
                bad.append((n, seed, problems))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 120
    assert record(3, "oracle campaign n=1..12 x 1000", ok,
                  f"{trials} diagrams, {len(bad)} mismatches, {elapsed:.1f}s"), bad[:3]


def test_04_quadratic_agreement():
    rng = random.Random(4)
    bad = 0
    for n in (100, 200, 500):
        for _ in range(200):
            aug = augment(random_diagram(n, rng.getrandbits(63)))
            st = ind.sweep(aug)
            bad += st.alpha != ind.max_is_quadratic(aug)
            bad += ind.count_max_independent_sets(aug, st) != ind.count_max_is_quadratic(aug)
    assert record(4, "quadratic = sweep for n in {100,200,500}", bad == 0,
                  f"600 diagrams, {bad} disagreements")


def test_05_counterexample_zero():
    d = matching.counterexample(0)
    n = d.n
    nonadjacent = {
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if not adjacent(d, i, j)
    }
    f = [matching.right_spread(t) for t in d.trapezoids]
    r = matching.audit(d)
    checks = {
        "4 trapezoids": n == 4,
        "non-adjacent = {(3,4)}": nonadjacent == {(3, 4)},
        "f increasing": all(x < y for x, y in zip(f, f[1:])),
        "greedy 1": r.greedy.cardinality == 1,
        "exact 2": r.exact.cardinality == 2,
    }
    failed = [k for k, v in checks.items() if not v]
    detail = (f"n={n}, greedy={r.greedy.cardinality}, exact={r.exact.cardinality}; "
              f"failed: {', '.join(failed) or 'none'}")
    assert record(5, "Figure 2 counterexample reproduction", not failed, detail)


def test_06_family_scaling():
    worst = None
    for k in range(1, 51):
        d = matching.counterexample(k)
        validate(d)
        r = matching.audit(d)
        slack = r.gap - (k + 1)
        worst = slack if worst is None else min(worst, slack)
    assert record(6, "exact - greedy >= k+1 for k=1..50", worst >= 0, f"min slack {worst}")


def test_07_greedy_sanity():
    rng = random.Random(7)
    problems = 0
    small_gaps = 0
    for _ in range(1000):
        d = random_diagram(rng.randint(1, 14), rng.getrandbits(63))
        r = matching.audit(d)
        problems += not matching.is_maximal(d, r.greedy) or r.gap < 0
        small_gaps += d.n <= 3 and r.gap != 0
    for _ in range(500):
        d = random_diagram(rng.randint(1, 3), rng.getrandbits(63))
        small_gaps += matching.audit(d).gap != 0
    ok = problems == 0 and small_gaps == 0
    assert record(7, "greedy maximal, <= exact, exact for n<=3", ok,
                  f"{problems} violations, {small_gaps} small-n gaps")


def _median(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def test_08_performance():
    d = random_diagram(100_000, 8)
    t0 = time.perf_counter()
    report = analyze(d)
    analyze_s = time.perf_counter() - t0

    sizes = [2**14, 2**15, 2**16, 2**17]
    prepared = [_kernels.prepare(augment(random_diagram(n, n))) for n in sizes]
    _kernels.sweep_alpha(prepared[0])
    _kernels.quadratic_alpha(_kernels.prepare(augment(random_diagram(8, 0))))
    for k in prepared:
        assert _kernels.sweep_alpha(k) == _kernels.quadratic_alpha(k)
    # round-robin over sizes so drift hits every size alike
    sweep_runs = [[] for _ in sizes]
    gc.disable()
    try:
        for _ in range(31):
            for pos, k in enumerate(prepared):
                t = time.perf_counter()
                _kernels.sweep_alpha(k)
                sweep_runs[pos].append(time.perf_counter() - t)
        quad_t = [_median(lambda: _kernels.quadratic_alpha(k), 3) for k in prepared]
    finally:
        gc.enable()
    sweep_t = [statistics.median(r) for r in sweep_runs]
    sweep_growth = [b / a for a, b in zip(sweep_t, sweep_t[1:])]
    quad_growth = [b / a for a, b in zip(quad_t, quad_t[1:])]
    ratio = quad_t[1] / sweep_t[1]
    ok = (
        analyze_s < 5
        and max(sweep_growth) <= 2.6
        and min(quad_growth) >= 3.4
        and ratio >= 20
    )
    detail = (
        f"analyze n=1e5 {analyze_s:.2f}s (alpha={report.alpha}); "
        f"sweep x{', x'.join(f'{g:.2f}' for g in sweep_growth)}; "
        f"quadratic x{', x'.join(f'{g:.2f}' for g in quad_growth)}; "
        f"ratio@2^15 {ratio:.0f}"
    )
    assert record(8, "O(n log n) performance envelope", ok, detail)


def test_09_reuse_equivalence():
    rng = random.Random(9)
    bad = 0
    for _ in range(200):
        d = random_diagram(rng.randint(1, 300), rng.getrandbits(63))
        st = ind.sweep(d)
        stats = ind.new_reuse_stats(d.n)
        reused = ind.count_max_independent_sets(d, st, reuse=True, stats=stats)
        fresh = ind.count_max_independent_sets(d, st, reuse=False)
        once = stats.inserted[1 : d.n + 1] == [1] * d.n == stats.removed[1 : d.n + 1]
        bad += reused != fresh or not once
    assert record(9, "targeted reset = fresh trees, each inserted/removed once", bad == 0,
                  f"200 diagrams, {bad} failures")


def test_10_duality():
    rng = random.Random(10)
    bad = 0
    for _ in range(500):
        d = random_diagram(rng.randint(1, 200), rng.getrandbits(63))
        r = analyze(d)
        bad += r.min_vc_size + r.alpha != d.n
        bad += r.num_min_vc != r.num_max_is
        bad += r.num_vc != r.num_is + 1
    lemma_bad = 0
    for _ in range(200):
        d = random_diagram(rng.randint(1, 10), rng.getrandbits(63))
        g = to_graph(d)
        v = rng.randint(1, d.n)
        minus, minus_nb = brute_lemma_split(g, v)
        lemma_bad += brute_enumerate(g).vc_count != (
            brute_enumerate(minus).vc_count + brute_enumerate(minus_nb).vc_count
        )
    ok = bad == 0 and lemma_bad == 0
    assert record(10, "duality identities and vertex-cover recursion", ok,
                  f"{bad} identity failures, {lemma_bad} recursion failures")
