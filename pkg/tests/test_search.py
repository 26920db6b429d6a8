from random import Random

import pytest

from patchwork import invariants as inv
from patchwork.construction import SignDistribution
from patchwork.lattice import InvalidArgument
from patchwork.search import (
    IncrementalComplex,
    SearchTask,
    flip_neighborhood,
    full_piece_map,
    run,
)


def test_exhaustive_t2_frozen_histogram(grid2):
    res = run(SearchTask(triangulation=grid2, mode="exhaustive"))
    assert res.visited == 32  # 2^6 / 2 negation classes
    assert res.best_score == 1
    # frozen regression values from the first exhaustive run: every class
    # has a single oval (the quadric T-curve is never empty)
    assert res.component_histogram == {1: 32}
    assert res.anomalies == []


def test_exhaustive_t3(grid3):
    res = run(SearchTask(triangulation=grid3, mode="exhaustive"))
    assert res.visited == 512  # 2^10 / 2
    assert res.best_score == 2 == inv.harnack_bound(3)
    assert res.component_histogram == {1: 256, 2: 256}
    assert res.best[0]["score"] == 2  # an M-curve was found and kept


def test_exhaustive_cap(grid6):
    with pytest.raises(InvalidArgument):
        run(SearchTask(triangulation=grid6, mode="exhaustive", cap=2 ** 10))


def test_random_mode_deterministic(grid4):
    a = run(SearchTask(triangulation=grid4, mode="random", seed=5, samples=60))
    b = run(SearchTask(triangulation=grid4, mode="random", seed=5, samples=60))
    assert a.to_json() == b.to_json()


def test_hillclimb_improves(grid4):
    res = run(SearchTask(triangulation=grid4, mode="hillclimb", seed=1, budget=600))
    assert res.best_score >= 3
    assert res.visited == 600


def test_objectives(grid3):
    res = run(SearchTask(triangulation=grid3, mode="random", seed=2, samples=40, objective="max-p-minus-n"))
    assert res.best_score >= 0


def test_parallel_exhaustive_matches_serial(grid3):
    serial = run(SearchTask(triangulation=grid3, mode="exhaustive"))
    parallel = run(SearchTask(triangulation=grid3, mode="exhaustive", workers=2))
    assert serial.component_histogram == parallel.component_histogram
    assert serial.p_minus_n_mod8_histogram == parallel.p_minus_n_mod8_histogram
    assert serial.visited == parallel.visited


def test_flip_involution(model4):
    sigma = SignDistribution({v: 1 for v in model4.base_vertices})
    inc = IncrementalComplex(model4, sigma)
    before = inc.snapshot()
    inc.flip((1, 1))
    inc.flip((1, 1))
    assert inc.snapshot() == before


def test_flip_neighborhood_returns_flipped_sigma(model4):
    sigma = SignDistribution({v: 1 for v in model4.base_vertices})
    out = flip_neighborhood(model4, sigma, (2, 1))
    assert out[(2, 1)] == -1
    assert out[(0, 0)] == 1
    with pytest.raises(InvalidArgument):
        flip_neighborhood(model4, sigma, (9, 9))


def test_flip_locality(model4):
    sigma = SignDistribution({v: 1 for v in model4.base_vertices})
    inc = IncrementalComplex(model4, sigma)
    before = inc.snapshot()
    v = (1, 1)
    inc.flip(v)
    after = inc.snapshot()
    vid = model4.vindex[v]
    incident = set(inc.incident[vid])
    for s_id in set(before) | set(after):
        if before.get(s_id) != after.get(s_id):
            assert s_id in incident


def test_incremental_equals_full_rebuild(model4):
    rng = Random(21)
    sigma = SignDistribution({v: rng.choice((1, -1)) for v in model4.base_vertices})
    inc = IncrementalComplex(model4, sigma)
    for _ in range(200):
        v = model4.base_vertices[rng.randrange(len(model4.base_vertices))]
        inc.flip(v)
        assert inc.snapshot() == full_piece_map(model4, inc.flat)


def test_filters_restrict_kept_instances(grid3):
    res = run(
        SearchTask(
            triangulation=grid3,
            mode="random",
            seed=3,
            samples=50,
            filters=(("mCurveOnly", True),),
        )
    )
    for entry in res.best:
        assert entry["report"]["components"] == 2


def test_hillclimb_with_triangulation_flips(grid3):
    res = run(
        SearchTask(
            triangulation=grid3,
            mode="hillclimb",
            seed=4,
            budget=120,
            flip_triangulations=True,
        )
    )
    assert res.visited == 120
    assert res.best_score >= 1
