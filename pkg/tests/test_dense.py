import math
import time

import numpy as np
import pytest

from conftest import (
    TOY_EXACT_FLAT,
    TOY_EXACT_FLAT_TRUNCATED,
    TOY_EXACT_THIRD,
    TOY_PTILDE,
    TOY_SUBDIVIDED_EXACT,
    relative_close,
)
from exactmix.inference import (
    factorial_table,
    log_pochhammer,
    pochhammer,
    posterior_mean,
    probability,
    ptilde_all,
)
from exactmix.model import (
    Model,
    ObservationSeq,
    random_instance,
    subdivide_cause,
    with_virtual_observation,
)
from exactmix.oracles import permanent
from exactmix.utils.errors import CapacityError, DegenerateEvidenceError, DomainError


class TestPochhammer:
    def test_values(self):
        assert pochhammer(0.5, 0) == 1.0
        assert pochhammer(1.0, 4) == 24.0
        assert pochhammer(-1.0, 1) == -1.0
        assert pochhammer(-1.0, 2) == 0.0

    def test_log_path(self):
        assert log_pochhammer(2.5, 6) == pytest.approx(math.log(pochhammer(2.5, 6)), rel=1e-12)
        assert log_pochhammer(-1.0, 2) == -math.inf

    def test_negative_order(self):
        with pytest.raises(DomainError):
            pochhammer(1.0, -1)

    def test_factorial_table(self):
        assert factorial_table(4).tolist() == [1.0, 1.0, 2.0, 6.0, 24.0]


class TestPtilde:
    def test_toy_evidence(self, toy_model, toy_obs):
        table = ptilde_all(toy_model, toy_obs)
        assert table[0] == 1.0
        assert table[0b11] == pytest.approx(TOY_PTILDE, rel=1e-6)
        assert probability(toy_model, toy_obs) == pytest.approx(TOY_PTILDE / 2.0, rel=1e-6)

    def test_single_observation(self, toy_model):
        table = ptilde_all(toy_model, ObservationSeq((0,)))
        assert table[1] == pytest.approx(0.16 / 3, rel=1e-14)

    def test_single_cause(self):
        model = Model([0.7], [[0.3], [0.6]])
        obs = ObservationSeq((0, 1, 1))
        expected = 0.3 * 0.6 * 0.6 * pochhammer(0.7, 3)
        assert ptilde_all(model, obs)[0b111] == pytest.approx(expected, rel=1e-12)

    def test_every_subset_is_its_own_evidence(self, rng):
        model, obs = random_instance(rng, 5, 3)
        table = ptilde_all(model, obs)
        sub = obs.permuted([1, 3])
        assert table[0b01010] == pytest.approx(ptilde_all(model, sub)[0b11], rel=1e-12)

    def test_empty_observations(self, toy_model):
        table = ptilde_all(toy_model, ObservationSeq(()))
        assert table.coeff.tolist() == [1.0]

    def test_capacity_refusal(self, rng):
        model, obs = random_instance(rng, 5, 2)
        with pytest.raises(CapacityError):
            ptilde_all(model, obs, cap=4)

    def test_permanent_identity_example(self):
        model = Model([-1.0, -1.0], [[1.0, 1.0], [1.0, 1.0]], algebraic=True)
        assert ptilde_all(model, ObservationSeq((0, 1)))[0b11] == pytest.approx(2.0)

    def test_permanent_identity(self, rng):
        for _ in range(100):
            n = int(rng.integers(2, 8))
            matrix = (rng.random((n, n)) < 0.6).astype(float)
            model = Model(-np.ones(n), matrix, algebraic=True)
            value = ptilde_all(model, ObservationSeq(tuple(range(n))))[(1 << n) - 1]
            expected = (-1) ** n * permanent(matrix)
            assert abs(value - expected) <= 1e-9 * max(1.0, abs(expected))


class TestPosteriorMean:
    def test_toy_third(self, toy_model, toy_obs):
        result = posterior_mean(toy_model, toy_obs)
        np.testing.assert_allclose(result.theta_mean, TOY_EXACT_THIRD, atol=1e-4)
        assert result.ptilde_full == pytest.approx(TOY_PTILDE, rel=1e-6)
        assert result.method == "exact"

    def test_toy_flat(self, flat_toy_model, toy_obs):
        result = posterior_mean(flat_toy_model, toy_obs)
        np.testing.assert_allclose(result.theta_mean, TOY_EXACT_FLAT, atol=1e-6)
        np.testing.assert_allclose(np.trunc(result.theta_mean * 1000) / 1000, TOY_EXACT_FLAT_TRUNCATED, atol=1e-12)

    def test_toy_subdivided(self, subdivided_model, toy_obs):
        result = posterior_mean(subdivided_model, toy_obs)
        np.testing.assert_allclose(result.theta_mean, TOY_SUBDIVIDED_EXACT, atol=1e-4)

    def test_no_observations_gives_prior_mean(self, rng):
        model, _ = random_instance(rng, 1, 6)
        result = posterior_mean(model, ObservationSeq(()))
        np.testing.assert_array_equal(result.theta_mean, model.alpha / model.alpha_total)
        assert result.ptilde_full == 1.0

    def test_log_probability_matches(self, toy_model, toy_obs):
        result = posterior_mean(toy_model, toy_obs)
        assert result.log_probability == pytest.approx(math.log(result.probability), rel=1e-12)

    def test_degenerate_evidence(self):
        model = Model([1.0, 1.0], [[0.5, 0.5], [0.0, 0.0]])
        with pytest.raises(DegenerateEvidenceError):
            posterior_mean(model, ObservationSeq((0, 1)))

    def test_algebraic_model_refused(self):
        model = Model([-1.0], [[1.0]], algebraic=True)
        with pytest.raises(DomainError):
            posterior_mean(model, ObservationSeq((0,)))

    def test_cause_chunk_does_not_matter(self, rng):
        model, obs = random_instance(rng, 6, 30)
        small = posterior_mean(model, obs, chunk=4).theta_mean
        large = posterior_mean(model, obs, chunk=256).theta_mean
        np.testing.assert_allclose(small, large, rtol=1e-12)


class TestInvariants:
    def _instances(self, rng, count=100, n_max=7, m_max=6):
        for _ in range(count):
            n = int(rng.integers(0, n_max + 1))
            m = int(rng.integers(1, m_max + 1))
            yield random_instance(rng, n, m)

    def test_normalization(self, rng):
        for model, obs in self._instances(rng):
            assert posterior_mean(model, obs).theta_mean.sum() == pytest.approx(1.0, abs=1e-9)

    def test_empty_subset_coefficient_is_one(self, rng):
        for model, obs in self._instances(rng):
            assert ptilde_all(model, obs)[0] == 1.0

    def test_permutation_invariance(self, rng):
        for model, obs in self._instances(rng):
            order = rng.permutation(obs.n)
            base = posterior_mean(model, obs)
            shuffled = posterior_mean(model, obs.permuted(order))
            np.testing.assert_allclose(shuffled.theta_mean, base.theta_mean, rtol=1e-12, atol=1e-15)
            assert relative_close(shuffled.ptilde_full, base.ptilde_full, 1e-12)

    def test_subdivision_invariance(self, rng):
        for model, obs in self._instances(rng):
            z = int(rng.integers(0, model.m))
            weights = rng.dirichlet(np.ones(3))
            base = posterior_mean(model, obs)
            split = posterior_mean(subdivide_cause(model, z, weights), obs)
            merged = np.concatenate([split.theta_mean[:z], [split.theta_mean[z:z + 3].sum()], split.theta_mean[z + 3:]])
            np.testing.assert_allclose(merged, base.theta_mean, rtol=1e-12, atol=1e-15)
            assert relative_close(split.ptilde_full, base.ptilde_full, 1e-12)

    def test_virtual_observation_consistency(self, rng):
        for model, obs in self._instances(rng, n_max=6):
            z = int(rng.integers(0, model.m))
            extended, with_virtual = with_virtual_observation(model, obs, z)
            ratio = probability(extended, with_virtual) / probability(model, obs)
            theta = posterior_mean(model, obs).theta_mean[z]
            assert relative_close(ratio, theta, 1e-10)


@pytest.mark.slow
def test_dense_scaling(rng):
    model, obs = random_instance(rng, 15, 1000)
    started = time.perf_counter()
    result = posterior_mean(model, obs)
    assert time.perf_counter() - started < 5.0
    assert result.theta_mean.sum() == pytest.approx(1.0, abs=1e-9)
