import numpy as np
import pytest
from hypothesis import given

from sgap import (
    FiniteRelation,
    FiniteSetoid,
    PreconditionError,
    SgapError,
    coequivalence_kernel,
    cotransitive_kernel,
    cotransitive_kernel_oracle,
    filled_power,
    filled_product,
    fine_apartness,
    hamming2_relation,
)
from sgap import brute

from conftest import relation_pairs, relations


def rel(n, *pairs):
    return FiniteRelation.from_pairs(n, pairs)


def chain():
    return rel(3, (0, 1), (1, 2))


class TestFilledPower:
    def test_chain_square_is_empty(self):
        assert filled_power(chain(), 2).is_empty()

    def test_first_power(self):
        assert filled_power(chain(), 1) == chain()

    def test_full_relation(self):
        assert filled_power(FiniteRelation.full(3), 2) == FiniteRelation.full(3)

    def test_cotransitive_is_fixed(self):
        kappa = ~FiniteRelation.identity(3)
        for k in range(1, 5):
            assert filled_power(kappa, k) == kappa

    def test_rejects_zero(self):
        with pytest.raises(PreconditionError):
            filled_power(chain(), 0)


class TestCotransitiveKernel:
    def test_chain(self):
        res = cotransitive_kernel(chain())
        assert res.kernel.is_empty() and res.fixpoint_step == 2

    def test_denial_minus_one_pair(self):
        alpha = ~FiniteRelation.identity(3) - rel(3, (0, 2), (2, 0))
        assert cotransitive_kernel(alpha).kernel == alpha
        assert cotransitive_kernel_oracle(alpha) == alpha

    def test_cotransitive_input_stops_at_first_step(self):
        kappa = ~FiniteRelation.identity(4)
        res = cotransitive_kernel(kappa)
        assert res.kernel == kappa and res.fixpoint_step == 1

    def test_single_pair(self):
        assert cotransitive_kernel(rel(3, (0, 2))).kernel.is_empty()
        assert cotransitive_kernel_oracle(rel(3, (0, 2))).is_empty()

    def test_full(self):
        assert cotransitive_kernel(FiniteRelation.full(3)).kernel == FiniteRelation.full(3)

    def test_empty_carrier(self):
        assert cotransitive_kernel(FiniteRelation.empty(0)).kernel.n == 0

    @given(relations(max_n=6))
    def test_kernel_laws(self, alpha):
        k = cotransitive_kernel(alpha).kernel
        assert k <= alpha
        assert brute.is_cotransitive(brute.pair_set(k), alpha.n)
        assert cotransitive_kernel(k).kernel == k
        assert k == cotransitive_kernel_oracle(alpha, "removal")

    @given(relation_pairs())
    def test_monotone(self, ab):
        a, b = ab
        assert cotransitive_kernel(a & b).kernel <= cotransitive_kernel(a).kernel

    @given(relation_pairs())
    def test_union_of_cotransitive_is_cotransitive(self, ab):
        a, b = (cotransitive_kernel(r).kernel for r in ab)
        u = a | b
        assert u <= filled_product(u, u)

    @given(relations(max_n=6))
    def test_step_bound(self, alpha):
        assert cotransitive_kernel(alpha).fixpoint_step <= alpha.n + 2


class TestOracle:
    def test_strategies_agree_on_small_relations(self):
        for bits in range(0, 512, 7):
            alpha = FiniteRelation.from_pairs(3, [(i // 3, i % 3) for i in range(9) if bits >> i & 1])
            assert cotransitive_kernel_oracle(alpha, "subsets") == cotransitive_kernel_oracle(alpha, "removal")

    def test_subsets_limited(self):
        with pytest.raises(PreconditionError):
            cotransitive_kernel_oracle(FiniteRelation.full(4), "subsets")

    def test_unknown_strategy(self):
        with pytest.raises(SgapError):
            cotransitive_kernel_oracle(chain(), "guess")


class TestCoequivalenceKernel:
    def test_apartness_is_fixed(self):
        s = FiniteSetoid.discrete(3)
        assert coequivalence_kernel(s.apt, s) == s.apt

    def test_full_on_discrete_pair(self):
        s = FiniteSetoid.discrete(2)
        assert coequivalence_kernel(FiniteRelation.full(2), s) == rel(2, (0, 1), (1, 0))

    def test_asymmetric_input(self):
        s = FiniteSetoid.discrete(2)
        assert coequivalence_kernel(rel(2, (0, 1)), s).is_empty()

    @given(relations(max_n=4))
    def test_result_is_coequivalence(self, alpha):
        s = FiniteSetoid.discrete(alpha.n)
        q = coequivalence_kernel(alpha, s)
        assert q <= alpha and q <= s.apt and q == q.inverse()
        assert q <= filled_product(q, q)


class TestFineApartness:
    def test_identity(self):
        assert fine_apartness(FiniteRelation.identity(3)) == ~FiniteRelation.identity(3)

    def test_full(self):
        assert fine_apartness(FiniteRelation.full(3)).is_empty()

    def test_two_classes(self):
        eq = FiniteRelation.identity(3) | rel(3, (0, 1), (1, 0))
        assert fine_apartness(eq) == rel(3, (0, 2), (2, 0), (1, 2), (2, 1))

    def test_rejects_non_equivalence(self):
        with pytest.raises(PreconditionError):
            fine_apartness(rel(2, (0, 1)))


class TestHamming:
    def test_one_bit(self):
        assert hamming2_relation(1).is_empty()

    def test_two_bits(self):
        h = hamming2_relation(2)
        assert (0b00, 0b11) in h and (0b00, 0b01) not in h

    def test_kernel_is_empty(self):
        res = cotransitive_kernel(hamming2_relation(3))
        assert res.kernel.is_empty() and res.fixpoint_step <= 5

    def test_powers_raise_distance(self):
        h = hamming2_relation(6)
        dist = _distance(6)
        for d in range(1, 5):
            assert filled_power(h, d) == FiniteRelation(dist >= d + 1), d

    @pytest.mark.parametrize("k", [0, 13])
    def test_dimension_bounds(self, k):
        with pytest.raises(PreconditionError):
            hamming2_relation(k)


def _distance(k):
    w = np.arange(1 << k)
    return np.array([[bin(a ^ b).count("1") for b in w] for a in w])
