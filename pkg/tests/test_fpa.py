import numpy as np
import pytest

from clusterbench import (CentroidSolution, ConfigError, Dataset, DimensionError, FpaConfig, FpaResult, LevyParams,
                          evaluate, fpa_run, generate_artset1, global_pollination, init_population, levy_sample,
                          local_pollination, pollination_sweep)


@pytest.fixture(scope="module")
def artset1():
    return generate_artset1(1)


def blobs(seed, n=30):
    rng = np.random.default_rng(seed)
    points = np.vstack([rng.normal(0.0, 1.0, size=(n // 2, 2)), rng.normal(6.0, 1.0, size=(n - n // 2, 2))])
    return Dataset("blobs", points, labels=[0] * (n // 2) + [1] * (n - n // 2))


def test_init_population(artset1):
    population = init_population(artset1, 5, FpaConfig(rng_seed=3))
    rows = {tuple(p) for p in artset1.features.tolist()}
    assert population.size == 20
    for flower in population.flowers:
        assert flower.centroids.shape == (5, 3)
        assert {tuple(c) for c in flower.centroids.tolist()} <= rows
        assert len({tuple(c) for c in flower.centroids.tolist()}) == 5
        assert flower.objective == pytest.approx(evaluate(artset1, flower.centroids))
    assert population.best_objective == min(flower.objective for flower in population.flowers)
    with pytest.raises(DimensionError):
        init_population(Dataset("tiny", [[0.0], [1.0]], num_classes=1), 3, FpaConfig())


def test_zero_iterations_returns_the_initial_best(artset1):
    cfg = FpaConfig(max_iter=0, rng_seed=9)
    result = fpa_run(artset1, 5, cfg)
    assert result.history == []
    assert result.iterations == 0
    assert result.objective == init_population(artset1, 5, cfg).best_objective


def test_switch_probability_extremes():
    data = blobs(1)
    always_global = fpa_run(data, 2, FpaConfig(num_flowers=6, switch_p=1.0, max_iter=10))
    assert always_global.local_moves == 0
    assert always_global.global_moves == 60
    always_local = fpa_run(data, 2, FpaConfig(num_flowers=6, switch_p=0.0, max_iter=10))
    assert always_local.global_moves == 0
    assert always_local.local_moves == 60


def test_global_pollination_with_a_fixed_step():
    flower, best = CentroidSolution([[2.0]]), CentroidSolution([[1.0]])
    moved = global_pollination(flower, best, LevyParams(), np.random.default_rng(0), sampler=lambda p, d, r: np.ones(d))
    assert moved.centroids.tolist() == [[3.0]]
    with pytest.raises(DimensionError):
        global_pollination(flower, CentroidSolution([[1.0, 1.0]]), LevyParams(), np.random.default_rng(0))


def test_local_pollination_with_a_fixed_epsilon():
    moved = local_pollination(CentroidSolution([[1.0]]), CentroidSolution([[4.0]]), CentroidSolution([[2.0]]),
                              np.random.default_rng(0), epsilon=1.0)
    assert moved.centroids.tolist() == [[3.0]]


def test_global_pollination_replay():
    rng = np.random.default_rng(77)
    flower = CentroidSolution(rng.normal(size=(3, 4)))
    best = CentroidSolution(rng.normal(size=(3, 4)))
    recorded = []

    def recording_sampler(params, dims, generator):
        recorded.append(levy_sample(params, dims, generator))
        return recorded[-1]

    moved = global_pollination(flower, best, LevyParams(), rng, sampler=recording_sampler)
    steps = recorded[0]
    x, g = flower.vector, best.vector
    expected = [x[d] + steps[d] * (x[d] - g[d]) for d in range(12)]
    np.testing.assert_allclose(moved.vector, expected, rtol=1e-15)


def test_local_pollination_replay():
    rng = np.random.default_rng(78)
    flower, peer_j, peer_k = (CentroidSolution(rng.normal(size=(2, 3))) for _ in range(3))
    state = rng.bit_generator.state
    moved = local_pollination(flower, peer_j, peer_k, rng)
    replay = np.random.default_rng()
    replay.bit_generator.state = state
    epsilon = replay.random()
    assert 0.0 <= epsilon < 1.0
    x, xj, xk = flower.vector, peer_j.vector, peer_k.vector
    expected = [x[d] + epsilon * (xj[d] - xk[d]) for d in range(6)]
    np.testing.assert_allclose(moved.vector, expected, rtol=1e-15)


def test_moves_are_clamped_to_the_data_bounds():
    data = blobs(2)
    flower = CentroidSolution(data.features[:2])
    best = CentroidSolution(data.features[2:4])
    moved = global_pollination(flower, best, LevyParams(), np.random.default_rng(0), bounds=data.bounds,
                               sampler=lambda p, d, r: np.full(d, 1000.0))
    assert np.all(moved.centroids >= data.lower_bounds)
    assert np.all(moved.centroids <= data.upper_bounds)


def test_flowers_only_improve():
    data = blobs(3)
    cfg = FpaConfig(num_flowers=8, max_iter=15, rng_seed=4)
    rng = np.random.default_rng(cfg.rng_seed)
    population = init_population(data, 2, cfg, rng)
    result = FpaResult(population.best, [], population)
    for _ in range(cfg.max_iter):
        before = [flower.objective for flower in population.flowers]
        pollination_sweep(data, population, cfg, rng, result, data.bounds)
        after = [flower.objective for flower in population.flowers]
        assert all(a <= b for a, b in zip(after, before))
        population.update_best()
    assert result.accepted_moves <= result.global_moves + result.local_moves


def test_history_never_increases():
    for seed in range(100):
        data = blobs(seed, n=20)
        result = fpa_run(data, 2, FpaConfig(num_flowers=5, max_iter=12, rng_seed=seed))
        assert len(result.history) == 12
        assert all(later <= earlier for earlier, later in zip(result.history, result.history[1:]))
        assert result.objective == result.history[-1]
        assert result.objective == min(flower.objective for flower in result.population.flowers)


def test_seeded_runs_are_reproducible(artset1):
    cfg = FpaConfig(max_iter=25, rng_seed=123)
    one, two = fpa_run(artset1, 5, cfg), fpa_run(artset1, 5, cfg)
    assert one.history == two.history
    assert np.array_equal(one.best.centroids, two.best.centroids)


def test_bad_configs():
    with pytest.raises(ConfigError):
        FpaConfig(num_flowers=1)
    with pytest.raises(ConfigError):
        FpaConfig(switch_p=1.5)
    with pytest.raises(ConfigError):
        FpaConfig(max_iter=-1)
