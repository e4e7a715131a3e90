import numpy as np
import pytest

from conftest import TOY_PTILDE, relative_close
from exactmix.inference import pochhammer, ptilde_all
from exactmix.model import Model, ObservationSeq, random_instance
from exactmix.oracles import (
    bell_number,
    brute_force_ptilde,
    factor_product_ptilde,
    partition_ptilde,
    permanent,
    set_partitions,
)
from exactmix.utils.errors import BudgetExceededError, CapacityError, DomainError


def test_bell_numbers():
    assert [bell_number(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


@pytest.mark.parametrize("n", range(0, 7))
def test_set_partitions_are_distinct_partitions(n):
    seen = set()
    for blocks in set_partitions(n):
        union = 0
        for block in blocks:
            assert block and not union & block
            union |= block
        assert union == (1 << n) - 1
        seen.add(frozenset(blocks))
    assert len(seen) == bell_number(n)


class TestOracles:
    def test_toy_value(self, toy_model, toy_obs):
        assert brute_force_ptilde(toy_model, toy_obs) == pytest.approx(TOY_PTILDE, rel=1e-6)
        assert partition_ptilde(toy_model, toy_obs) == pytest.approx(TOY_PTILDE, rel=1e-6)
        assert factor_product_ptilde(toy_model, toy_obs) == pytest.approx(TOY_PTILDE, rel=1e-6)

    def test_pair_is_two_partitions(self, rng):
        model, obs = random_instance(rng, 2, 4)
        rows = obs.emission_rows(model)
        m12 = float((rows[0] * rows[1]) @ model.alpha)
        m1, m2 = float(rows[0] @ model.alpha), float(rows[1] @ model.alpha)
        assert partition_ptilde(model, obs) == pytest.approx(m12 + m1 * m2, rel=1e-12)

    def test_single_cause(self):
        model = Model([1.5], [[0.2], [0.7]])
        obs = ObservationSeq((0, 1, 1))
        expected = 0.2 * 0.7 * 0.7 * pochhammer(1.5, 3)
        for oracle in (brute_force_ptilde, partition_ptilde, factor_product_ptilde):
            assert oracle(model, obs) == pytest.approx(expected, rel=1e-12)

    def test_no_observations(self, toy_model):
        empty = ObservationSeq(())
        assert brute_force_ptilde(toy_model, empty) == 1.0
        assert partition_ptilde(toy_model, empty) == 1.0
        assert factor_product_ptilde(toy_model, empty) == 1.0

    def test_unit_emissions_give_total_moment(self, rng):
        for n in range(1, 6):
            alpha = 2.0 * (1.0 - rng.random(3))
            model = Model(alpha, np.ones((1, 3)))
            obs = ObservationSeq((0,) * n)
            assert brute_force_ptilde(model, obs) == pytest.approx(pochhammer(alpha.sum(), n), rel=1e-12)

    def test_random_agreement(self, rng):
        for _ in range(200):
            n = int(rng.integers(0, 7))
            m = int(rng.integers(1, 6))
            model, obs = random_instance(rng, n, m)
            dense = ptilde_all(model, obs)[(1 << n) - 1]
            values = [
                brute_force_ptilde(model, obs),
                partition_ptilde(model, obs),
                factor_product_ptilde(model, obs),
            ]
            for value in values:
                assert relative_close(value, dense, 1e-9)

    def test_budgets(self, rng):
        model, obs = random_instance(rng, 6, 5)
        with pytest.raises(BudgetExceededError):
            brute_force_ptilde(model, obs, budget=1000)
        with pytest.raises(BudgetExceededError):
            partition_ptilde(model, obs, budget=100)
        with pytest.raises(CapacityError):
            factor_product_ptilde(model, obs, cap=5)


class TestPermanent:
    def test_small_matrices(self):
        assert permanent([[1, 1], [1, 1]]) == 2.0
        assert permanent(np.eye(3)) == 1.0
        assert permanent([[1, 2], [3, 4]]) == 10.0
        assert permanent(np.ones((4, 4))) == pytest.approx(24.0)
        assert permanent(np.zeros((0, 0))) == 1.0

    def test_against_permutation_sum(self, rng):
        from itertools import permutations

        a = rng.random((5, 5))
        expected = sum(np.prod([a[i, p[i]] for i in range(5)]) for p in permutations(range(5)))
        assert permanent(a) == pytest.approx(expected, rel=1e-12)

    def test_refusals(self):
        with pytest.raises(DomainError):
            permanent(np.ones((2, 3)))
        with pytest.raises(BudgetExceededError):
            permanent(np.ones((13, 13)))
