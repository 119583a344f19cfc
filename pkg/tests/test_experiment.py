import numpy as np
import pytest

import clusterbench.bench.experiment as experiment
from clusterbench import (Algorithm, ConfigError, Dataset, ExperimentConfig, FpaConfig, FpakmConfig, KMeansConfig,
                          RunRecord, aggregate, generate_artset1, load_manifest, run_experiment, run_single)


@pytest.fixture
def manifest():
    return load_manifest({"datasets": {"artset1": {"generator": "artset1", "seed": 1}}})


def quick_config(**kwargs):
    settings = dict(
        datasets=("artset1",),
        runs=2,
        base_seed=40,
        hybrid=FpakmConfig(fpa=FpaConfig(num_flowers=4, max_iter=5), limit=2),
        kmeans=KMeansConfig(max_iters=20),
    )
    settings.update(kwargs)
    return ExperimentConfig(**settings)


def test_single_run_record():
    data = generate_artset1(1)
    record = run_single(data, Algorithm.KMEANS, 3, quick_config())
    assert record.ok
    assert record.seed == 43
    assert record.dataset == "artset1"
    assert record.objective > 0
    assert 0.0 < record.f_measure <= 1.0
    assert record.iterations >= 1


def test_one_run_has_no_spread(manifest):
    result = run_experiment(quick_config(runs=1, algorithms=(Algorithm.FPA,)), manifest)
    assert len(result.stats) == 1
    stats = result.stats[0]
    assert stats.runs == 1
    assert stats.best == stats.worst == stats.average
    assert stats.std == 0.0
    assert stats.f_std == 0.0


def test_grid_order_and_seeds(manifest):
    cfg = quick_config(algorithms=(Algorithm.FPAKM, Algorithm.KMEANS))
    result = run_experiment(cfg, manifest)
    assert [(r.algorithm, r.run) for r in result.records] == [
        (Algorithm.KMEANS, 0), (Algorithm.KMEANS, 1), (Algorithm.FPAKM, 0), (Algorithm.FPAKM, 1)]
    assert [r.seed for r in result.records] == [40, 41, 40, 41]
    assert [s.algorithm for s in result.stats] == [Algorithm.KMEANS, Algorithm.FPAKM]
    for stats in result.stats:
        assert stats.best <= stats.average <= stats.worst
        assert stats.f_min <= stats.f_avg <= stats.f_max
    assert result.cell("artset1", Algorithm.FPAKM).runs == 2
    with pytest.raises(KeyError):
        result.cell("artset1", Algorithm.FPA)


def test_reruns_are_identical(manifest):
    one = run_experiment(quick_config(), manifest)
    two = run_experiment(quick_config(), manifest)
    assert one.records == two.records
    assert one.stats == two.stats


def test_unlabeled_reruns_are_identical():
    rng = np.random.default_rng(4)
    data = Dataset("unlabeled", rng.normal(size=(30, 2)), num_classes=3)
    for algorithm in Algorithm:
        one = run_single(data, algorithm, 0, quick_config())
        two = run_single(data, algorithm, 0, quick_config())
        assert one.ok
        assert one.f_measure is None
        assert one == two
        stats = aggregate([one, two])
        assert stats.f_avg is None
        assert stats == aggregate([two, one])


@pytest.mark.slow
def test_worker_processes_give_the_same_answer(manifest):
    serial = run_experiment(quick_config(), manifest)
    parallel = run_experiment(quick_config(workers=2), manifest)
    assert serial.records == parallel.records


def test_failed_runs_are_recorded(manifest, monkeypatch):
    def broken(*args, **kwargs):
        raise RuntimeError("diverged")

    monkeypatch.setattr(experiment, "fpa_run", broken)
    result = run_experiment(quick_config(), manifest)
    assert len(result.failures) == 2
    assert all("diverged" in record.error for record in result.failures)
    fpa = result.cell("artset1", Algorithm.FPA)
    assert fpa.runs == 0
    assert fpa.failures == 2
    assert fpa.best is None
    assert result.cell("artset1", Algorithm.KMEANS).failures == 0


def test_aggregate():
    records = [RunRecord("d", Algorithm.FPA, run, run, objective=value, f_measure=f)
               for run, (value, f) in enumerate([(10.0, 0.5), (12.0, 0.7), (11.0, 0.6)])]
    records.append(RunRecord("d", Algorithm.FPA, 3, 3, error="boom"))
    stats = aggregate(records)
    assert (stats.best, stats.worst, stats.average) == (10.0, 12.0, 11.0)
    assert stats.std == pytest.approx(1.0)
    assert stats.f_avg == pytest.approx(0.6)
    assert stats.runs == 3
    assert stats.failures == 1


def test_bad_dataset_selection(manifest):
    with pytest.raises(ConfigError):
        run_experiment(quick_config(datasets=()), manifest)
    with pytest.raises(ConfigError):
        run_experiment(quick_config(datasets=("iris",)), manifest)
    with pytest.raises(ConfigError):
        quick_config(runs=0)
