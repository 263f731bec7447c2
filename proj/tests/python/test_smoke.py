"""Smoke tests for the despsim extension module."""

import pytest

despsim = pytest.importorskip("despsim")


def test_model_names():
    names = despsim.model_names()
    assert set(names) == {"flowshop", "philosophers", "mm1", "minioodb"}


def test_rng_fixture_values():
    rng = despsim.Gfsr(1)
    assert rng.next_u32() == 737752240
    assert despsim.Gfsr(12345).next_u32() == 1162772357
    assert despsim.verify_rng_fixtures()


def test_rng_seed_validation():
    with pytest.raises(ValueError):
        despsim.Gfsr(0)


def test_rng_distributions():
    rng = despsim.Gfsr(42)
    for _ in range(1000):
        assert 0.0 <= rng.uniform01() < 1.0
    x = rng.uniform(4.0, 6.0)
    assert 4.0 <= x < 6.0
    assert rng.exponential(10.0) >= 0.0
    assert rng.draws_emitted == 1002


def test_run_mm1_matches_analytic_sojourn():
    result = despsim.run(
        "mm1",
        seed=1,
        replications=20,
        t_end=5000.0,
        params={"lambda": 0.05, "mu": 0.1},
    )
    assert result["replications"] == 20
    server = next(r for r in result["resources"] if r["resource"] == "server")
    response = server["metrics"]["mean_response_time"]
    assert response["ci_defined"]
    assert abs(response["mean"] - 20.0) / 20.0 < 0.15


def test_run_is_deterministic():
    kwargs = dict(seed=7, replications=5, t_end=500.0,
                  params={"lambda": 0.05, "mu": 0.1})
    assert despsim.run_csv("mm1", **kwargs) == despsim.run_csv("mm1", **kwargs)


def test_unstable_mm1_raises():
    with pytest.raises(ValueError):
        despsim.run("mm1", seed=1, replications=1, t_end=10.0,
                    params={"lambda": 0.2, "mu": 0.1})


def test_philosophers_reports_deadlocks():
    result = despsim.run(
        "philosophers",
        seed=3,
        replications=200,
        t_end=200.0,
    )
    assert "drained_replications" in result
    ordered = despsim.run(
        "philosophers",
        seed=3,
        replications=200,
        t_end=200.0,
        params={"ordered_forks": 1},
    )
    assert ordered["drained_replications"] == 0
