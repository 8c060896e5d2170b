import os
import random
import threading

import pytest

from apnle import classify, search, vbf
from apnle.classify import enumerate_classes, tuple_by_class
from apnle.gf2 import identity, mat_to_lut
from apnle.search import SearchConfig, SearchEngine, dfs_search, random_search, run_job, seed_fixed_points, split_work

from oracles import brute_force_solutions, naive_partial_even_ddt, naive_is_apn


def _engine(n, class_id, **cfg):
    t = tuple_by_class(enumerate_classes(n), class_id)
    return SearchEngine(t, SearchConfig(**cfg))


# ---------------------------------------------------------------------------
# incremental DDT
# ---------------------------------------------------------------------------

def _random_schedule_test(eng, rng, steps=60, check_every_step=False):
    n = eng.n
    assigned = []  # stack of (x, count)
    for _ in range(steps):
        if assigned and rng.random() < 0.4:
            x, count = assigned.pop()
            eng._undo_orbit(x, count)
        else:
            frees = [x for x in range(eng.size) if eng.table[x] == eng.undef]
            if not frees:
                continue
            x = rng.choice(frees)
            cands = [y for y in range(eng.size)
                     if not eng.used[y] and eng.ord_b[y] == eng.ord_a[x]]
            if not cands:
                continue
            count, ok = eng._assign_orbit(x, rng.choice(cands))
            if ok:
                assigned.append((x, count))
            else:
                eng._undo_orbit(x, count)
        if check_every_step:
            expect = naive_partial_even_ddt([int(v) for v in eng.table], n)
            assert [int(v) for v in eng.ddt] == expect
    while assigned:
        x, count = assigned.pop()
        eng._undo_orbit(x, count)
    expect = naive_partial_even_ddt([int(v) for v in eng.table], n)
    assert [int(v) for v in eng.ddt] == expect


def test_ddt_incrementality_checked_stepwise():
    rng = random.Random(0)
    for n, cid in ((4, 2), (5, 2), (5, 5)):
        eng = _engine(n, cid, backend="python")
        eng._apply_seeds()
        for _ in range(20):
            _random_schedule_test(eng, rng, steps=25, check_every_step=True)


def test_ddt_incrementality_many_schedules():
    rng = random.Random(1)
    for n, cid in ((4, 2), (5, 2), (6, 5)):
        eng = _engine(n, cid, backend="python")
        eng._apply_seeds()
        for _ in range(400):
            _random_schedule_test(eng, rng, steps=40)


def test_add_remove_exact_inverse():
    eng = _engine(5, 5, backend="python")
    eng._apply_seeds()
    before = list(eng.ddt)
    count, ok = eng._assign_orbit(1, eng._candidates(1)[0])
    eng._undo_orbit(1, count)
    assert eng.ddt == before


def test_failed_add_is_partially_reverted_in_lockstep():
    # build a state where an assignment trips the counter mid-loop, then
    # check the paired remove restores the exact previous ddt
    eng = _engine(4, 2, backend="python")
    eng._apply_seeds()
    rng = random.Random(2)
    tripped = 0
    for _ in range(300):
        frees = [x for x in range(eng.size) if eng.table[x] == eng.undef]
        if not frees:
            break
        x = rng.choice(frees)
        cands = [y for y in range(eng.size)
                 if not eng.used[y] and eng.ord_b[y] == eng.ord_a[x]]
        if not cands:
            break
        before = list(eng.ddt)
        count, ok = eng._assign_orbit(x, rng.choice(cands))
        if not ok:
            tripped += 1
            eng._undo_orbit(x, count)
            assert eng.ddt == before
    assert tripped > 0


def test_even_weight_rows_suffice_for_full_apn():
    rng = random.Random(3)
    for n in (4, 5):
        size = 1 << n
        for _ in range(500):
            f = list(range(size))
            rng.shuffle(f)
            even_ok = max(naive_partial_even_ddt(f, n)) <= 2
            assert even_ok == naive_is_apn(f)


# ---------------------------------------------------------------------------
# whole-tree correctness
# ---------------------------------------------------------------------------

def test_n3_matches_brute_force():
    for t in enumerate_classes(3):
        rep = dfs_search(t, SearchConfig(threshold_t=-1))
        assert rep.exhausted
        assert {tuple(s) for s in rep.solutions} == brute_force_solutions(t)


def test_n4_no_apn_permutations():
    for t in enumerate_classes(4):
        rep = dfs_search(t, SearchConfig())
        assert rep.exhausted and not rep.solutions


def test_backends_agree():
    for n in (3, 4):
        for t in enumerate_classes(n):
            reps = [dfs_search(t, SearchConfig(threshold_t=-1, backend=b))
                    for b in ("python", "numba")]
            assert reps[0].nodes_visited == reps[1].nodes_visited
            assert sorted(map(tuple, reps[0].solutions)) == \
                sorted(map(tuple, reps[1].solutions))


def test_orbit_consistency_invariant():
    # after any partial assignment, table[A x] is UNDEF or B table[x]
    eng = _engine(5, 5, backend="python")
    eng._apply_seeds()
    rng = random.Random(4)
    for _ in range(50):
        frees = [x for x in range(eng.size) if eng.table[x] == eng.undef]
        if not frees:
            break
        x = rng.choice(frees)
        cands = [y for y in range(eng.size)
                 if not eng.used[y] and eng.ord_b[y] == eng.ord_a[x]]
        if not cands:
            continue
        count, ok = eng._assign_orbit(x, rng.choice(cands))
        if not ok:
            eng._undo_orbit(x, count)
        for v in range(eng.size):
            if eng.table[v] != eng.undef:
                img = eng.table[eng.a_lut[v]]
                assert img == eng.undef or img == eng.b_lut[eng.table[v]]


def test_solutions_verified_on_emission():
    t = tuple_by_class(enumerate_classes(5), 5)
    rep = dfs_search(t, SearchConfig())
    assert rep.solutions
    for f in rep.solutions:
        assert vbf.is_permutation(f)
        assert vbf.is_apn(f)
        assert vbf.verify_le_automorphism(f, t.a, t.b)
        assert f[0] == 0


# ---------------------------------------------------------------------------
# smallest-representative pruning
# ---------------------------------------------------------------------------

def test_is_smallest_identity_only_always_true():
    eng = _engine(4, 2, backend="python")
    eng.ca_luts = [eng.ident_lut]
    eng.cb_luts = [eng.ident_lut]
    eng._ca_ident = [True]
    eng._cb_ident = [True]
    eng._apply_seeds()
    eng._assign_orbit(1, eng._candidates(1)[0])
    assert eng.is_smallest()


def test_is_smallest_antisymmetric_on_completed_tables():
    t = tuple_by_class(enumerate_classes(3), 2)
    rep = dfs_search(t, SearchConfig(threshold_t=-1))
    sols = sorted(map(tuple, rep.solutions))
    eng = SearchEngine(t, SearchConfig())
    a_lut = tuple(mat_to_lut(t.a))
    b_lut = tuple(mat_to_lut(t.b))
    eng.ca_luts = [eng.ident_lut, a_lut]
    eng.cb_luts = [eng.ident_lut, b_lut]
    eng._ca_ident = [True, False]
    eng._cb_ident = [True, False]
    smaller = 0
    for s in sols:
        eng.table = list(s)
        if not eng.is_smallest():
            smaller += 1
    # at least one table in each nontrivial transform-orbit is non-minimal
    assert 0 < smaller < len(sols)


def test_pruned_output_covers_every_transform_orbit():
    t = tuple_by_class(enumerate_classes(5), 5)
    full = {tuple(s) for s in
            dfs_search(t, SearchConfig(threshold_t=-1)).solutions}
    cfg = SearchConfig(threshold_t=2)
    eng = SearchEngine(t, cfg)
    rep = eng.run()
    pruned = {tuple(s) for s in rep.solutions}
    assert pruned <= full
    # close the full set under the subsets the engine actually used
    orbit_of = {}
    for s in full:
        if s in orbit_of:
            continue
        orbit = {s}
        frontier = [s]
        while frontier:
            cur = frontier.pop()
            for ca in eng.ca_luts:
                for cb in eng.cb_luts:
                    img = tuple(cb[cur[ca[x]]] for x in range(len(cur)))
                    if img in full and img not in orbit:
                        orbit.add(img)
                        frontier.append(img)
        for m in orbit:
            orbit_of[m] = orbit
    seen = set()
    for s, orbit in orbit_of.items():
        key = min(orbit)
        if key in seen:
            continue
        seen.add(key)
        assert orbit & pruned, "an entire transform orbit was dropped"
    # and the fingerprint content is unchanged
    assert {vbf.fingerprint(list(s)).digest() for s in pruned} == \
        {vbf.fingerprint(list(s)).digest() for s in full}


# ---------------------------------------------------------------------------
# seeding
# ---------------------------------------------------------------------------

def test_seed_fixed_points_n6_class14():
    t = tuple_by_class(enumerate_classes(6), 14)
    g3 = vbf.monomial_lut(vbf.field(3), 3)
    seeds = seed_fixed_points(t, g3)
    assert len(seeds) == 8
    xs = {x for x, _ in seeds}
    ys = {y for _, y in seeds}
    assert (0, 0) in seeds
    assert len(xs) == len(ys) == 8
    for x, y in seeds:
        assert mat_to_lut(t.a)[x] == x
        assert mat_to_lut(t.b)[y] == y


def test_seed_rejects_bad_dimensions():
    # fixed dimension 1: no usable seed permutation
    t = tuple_by_class(enumerate_classes(4), 6)
    assert t.fixed_dims[0] == 1
    with pytest.raises(ValueError):
        seed_fixed_points(t, [0, 1])


def test_seed_rejects_non_extendable():
    ts = enumerate_classes(5)
    t = next(t for t in ts if t.p == 2 and t.fixed_dims[0] == 3)
    with pytest.raises(ValueError, match="extendable"):
        seed_fixed_points(t, vbf.monomial_lut(vbf.field(3), 3))


def test_seed_empty_for_trivial_fixed_space():
    t = tuple_by_class(enumerate_classes(6), 5)
    assert seed_fixed_points(t, None) == [(0, 0)] if t.fixed_dims[0] == 0 else True


def test_seeded_search_runs_and_respects_seed():
    t = tuple_by_class(enumerate_classes(7), 22)
    cfg = SearchConfig(seed_fixed_points=True, max_nodes=20000)
    eng = SearchEngine(t, cfg)
    rep = eng.run()
    assert rep.nodes_visited >= 20000 or rep.exhausted


# ---------------------------------------------------------------------------
# split work
# ---------------------------------------------------------------------------

def test_split_work_depth_zero():
    t = tuple_by_class(enumerate_classes(4), 2)
    assert split_work(t, SearchConfig(), 0) == [[]]


def test_split_union_equals_unsplit():
    t = tuple_by_class(enumerate_classes(5), 5)
    cfg = SearchConfig(threshold_t=-1)
    whole = {tuple(s) for s in dfs_search(t, cfg).solutions}
    jobs = split_work(t, cfg, 2)
    assert len(jobs) > 1
    union = set()
    for prefix in jobs:
        sub = run_job(t, cfg, prefix)
        got = {tuple(s) for s in sub.solutions}
        assert not (union & got), "jobs overlap"
        union |= got
    assert union == whole


def test_split_prefixes_pairwise_incompatible():
    t = tuple_by_class(enumerate_classes(5), 5)
    jobs = split_work(t, SearchConfig(threshold_t=-1), 2)
    for i, p1 in enumerate(jobs):
        for p2 in jobs[i + 1:]:
            assert dict(p1) != dict(p2)


# ---------------------------------------------------------------------------
# checkpoint / resume
# ---------------------------------------------------------------------------

def test_checkpoint_resume_equals_uninterrupted(tmp_path):
    t = tuple_by_class(enumerate_classes(5), 5)
    want = {tuple(s) for s in dfs_search(t, SearchConfig()).solutions}
    ckpt = str(tmp_path / "c.ckpt")
    got = set()
    resume = None
    for round_no in range(200):
        cfg = SearchConfig(max_nodes=500, checkpoint_path=ckpt)
        eng = SearchEngine(t, cfg)
        rep = eng.run(resume_path=resume)
        got |= {tuple(s) for s in rep.solutions}
        if rep.exhausted:
            break
        assert os.path.exists(ckpt)
        resume = eng.read_checkpoint(ckpt)
    else:
        pytest.fail("search never exhausted across resumes")
    assert got == want


def test_checkpoint_rejects_wrong_tuple(tmp_path):
    t5 = tuple_by_class(enumerate_classes(5), 5)
    ckpt = str(tmp_path / "c.ckpt")
    cfg = SearchConfig(max_nodes=200, checkpoint_path=ckpt)
    eng = SearchEngine(t5, cfg)
    eng.run()
    other = tuple_by_class(enumerate_classes(5), 2)
    eng2 = SearchEngine(other, SearchConfig())
    with pytest.raises(ValueError):
        eng2.read_checkpoint(ckpt)


def test_abort_via_signal_flag(tmp_path):
    t = next(t for t in enumerate_classes(5) if t.p == 2)
    ckpt = str(tmp_path / "sig.ckpt")
    cfg = SearchConfig(checkpoint_path=ckpt)
    eng = SearchEngine(t, cfg)
    timer = threading.Timer(0.3, lambda: eng.request_abort("signal"))
    timer.start()
    rep = eng.run()
    timer.cancel()
    assert rep.aborted == "signal"
    assert not rep.exhausted
    assert os.path.exists(ckpt)


# ---------------------------------------------------------------------------
# randomized mode
# ---------------------------------------------------------------------------

def test_randomized_requires_budget():
    with pytest.raises(ValueError):
        SearchConfig(mode="randomized")


def test_randomized_budget_zero_is_empty():
    t = tuple_by_class(enumerate_classes(5), 5)
    rep = random_search(t, SearchConfig(mode="randomized", time_budget=0))
    assert rep.aborted == "budget"
    assert rep.solutions == [] and rep.restarts == 0


def test_randomized_reproducible():
    t = tuple_by_class(enumerate_classes(5), 5)

    def run():
        cfg = SearchConfig(mode="randomized", time_budget=300,
                           rng_seed=7, max_nodes=3000, max_restarts=3)
        return random_search(t, cfg)

    r1, r2 = run(), run()
    assert r1.nodes_visited == r2.nodes_visited
    assert [tuple(s) for s in r1.solutions] == [tuple(s) for s in r2.solutions]


def test_randomized_finds_known_solutions():
    t = tuple_by_class(enumerate_classes(5), 5)
    cfg = SearchConfig(mode="randomized", time_budget=20, rng_seed=1,
                       max_solutions=3)
    rep = random_search(t, cfg)
    assert rep.solutions
    mono = {vbf.fingerprint(vbf.monomial_lut(vbf.field(5), d)).digest()
            for d in (3, 5, 7, 11, 15)}
    for s in rep.solutions:
        assert vbf.fingerprint(s).digest() in mono


def test_randomized_never_claims_exhaustion():
    t = tuple_by_class(enumerate_classes(3), 2)
    cfg = SearchConfig(mode="randomized", time_budget=5, max_restarts=2)
    rep = random_search(t, cfg)
    assert not rep.exhausted
