"""Escort transforms: round trips, the two joint constructions, and the
consistency characterization.

The 2x2 matrix [[0.4, 0.1], [0.1, 0.4]] recurs below as SYMMETRIC: it is
dependent (mutual information ~0.19) but its conditional columns are
permutations of each other, so the column power sums coincide at every order
and the naive and correct joint escorts agree exactly. The asymmetric
DEPENDENT example has no such symmetry and exhibits every defect.
"""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from escortropy import (
    Distribution,
    JointDistribution,
    condition_on_a,
    conditional_escort,
    escort,
    escort_inverse,
    escort_ratio,
    is_escort_consistent,
    joint_escort_correct,
    joint_escort_naive,
    joint_escort_pair,
    marginal_a,
    mutual_information,
    product_joint,
    sample_dependent_joint,
)

import oracles

SYMMETRIC = JointDistribution([[0.4, 0.1], [0.1, 0.4]])
DEPENDENT = JointDistribution([[0.2, 0.1], [0.3, 0.4]])


def simplex(n, seed):
    return Distribution(np.random.default_rng(seed).dirichlet(np.ones(n)))


def test_escort_symmetric_is_fixed_point():
    for q in (0.3, 0.5, 2.0, 5.0):
        assert np.allclose(escort(Distribution([0.5, 0.5]), q).weights.weights, [0.5, 0.5])


def test_escort_example_values():
    view = escort(Distribution([0.8, 0.2]), 2.0)
    assert np.allclose(view.weights.weights, [16 / 17, 1 / 17], atol=1e-15)
    assert view.origin.weights.tolist() == [0.8, 0.2]


def test_escort_order_one_is_identity():
    p = Distribution([0.1, 0.2, 0.7])
    assert np.array_equal(escort(p, 1.0).weights.weights, p.weights)


def test_escort_zero_entries_stay_zero():
    p = Distribution([0.0, 0.3, 0.7])
    for q in (0.5, 2.0):
        assert escort(p, q).weights.weights[0] == 0.0


def test_escort_inverse_round_trip_examples():
    for q in (0.5, 2.0):
        p = Distribution([0.8, 0.2])
        assert np.abs(escort_inverse(escort(p, q)).weights - p.weights).max() < 1e-12
    p = Distribution([0.1, 0.2, 0.7])
    back = escort_inverse(escort(p, 0.5))
    assert np.abs(back.weights - p.weights).max() < 1e-10


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.floats(1e-5, 1.0), min_size=2, max_size=8).map(
        lambda xs: np.array(xs) / np.sum(xs)
    ),
    st.sampled_from([0.3, 0.5, 2.0, 5.0]),
)
def test_escort_inverse_round_trip_property(w, q):
    p = Distribution(w)
    back = escort_inverse(escort(p, q))
    assert np.abs(back.weights - p.weights).max() < 1e-10


def test_escort_matches_direct_formula():
    rng = np.random.default_rng(3)
    for _ in range(50):
        p = rng.dirichlet(np.ones(rng.integers(2, 9)))
        for q in (0.3, 0.5, 2.0, 5.0):
            ours = escort(Distribution(p), q).weights.weights
            assert np.abs(ours - oracles.escort_weights(p, q)).max() < 1e-14


def test_joint_escort_naive_order_one_is_joint():
    assert np.array_equal(joint_escort_naive(SYMMETRIC, 1.0), SYMMETRIC.weights)


def test_joint_escort_naive_hand_example():
    got = joint_escort_naive(SYMMETRIC, 2.0)
    expected = np.array([[8 / 17, 1 / 34], [1 / 34, 8 / 17]])
    assert np.abs(got - expected).max() < 1e-15


def test_joint_escort_of_product_factorizes():
    p_a = simplex(5, 1)
    q_b = simplex(4, 2)
    joint = product_joint(p_a, q_b)
    for q in (0.5, 2.0):
        naive = joint_escort_naive(joint, q)
        outer = np.outer(
            escort(q_b, q).weights.weights, escort(p_a, q).weights.weights
        )
        assert np.abs(naive - outer).max() < 1e-12


def test_joint_escort_correct_equals_naive_on_products():
    joint = product_joint(simplex(3, 7), simplex(5, 8))
    for q in (0.5, 2.0, 3.0):
        assert np.abs(
            joint_escort_naive(joint, q) - joint_escort_correct(joint, q)
        ).max() < 1e-12


def test_joint_escort_correct_order_one_is_joint():
    assert np.array_equal(joint_escort_correct(DEPENDENT, 1.0), DEPENDENT.weights)


def test_joint_escort_constructions_differ_on_asymmetric_dependent():
    naive = joint_escort_naive(DEPENDENT, 2.0)
    correct = joint_escort_correct(DEPENDENT, 2.0)
    assert np.abs(naive - correct).max() > 1e-3
    assert np.abs(naive - oracles.joint_escort_naive(DEPENDENT.weights, 2.0)).max() < 1e-14
    assert np.abs(correct - oracles.joint_escort_correct(DEPENDENT.weights, 2.0)).max() < 1e-14


def test_symmetric_columns_make_constructions_agree_despite_dependence():
    # Permuted conditional columns have equal power sums, so the dependent
    # SYMMETRIC joint stays escort-consistent at every order.
    assert mutual_information(SYMMETRIC) > 0.1
    for q in (0.5, 2.0, 3.0):
        assert np.abs(
            joint_escort_naive(SYMMETRIC, q) - joint_escort_correct(SYMMETRIC, q)
        ).max() < 1e-15


def test_both_constructions_normalize():
    for q in (0.5, 2.0):
        pair = joint_escort_pair(DEPENDENT, q)
        for m in (pair.naive, pair.correct):
            assert np.all(m >= 0)
            assert abs(m.sum() - 1.0) < 1e-12


def test_conditional_escort_examples():
    assert np.allclose(
        conditional_escort(DEPENDENT, 1.0).weights, condition_on_a(DEPENDENT).weights
    )
    joint = product_joint(simplex(4, 11), simplex(3, 12))
    ce = conditional_escort(joint, 2.0)
    for l in range(1, joint.n_a):
        assert np.abs(ce.weights[:, l] - ce.weights[:, 0]).max() < 1e-13
    one_column = JointDistribution(np.array([[0.8], [0.2]]))
    assert np.allclose(
        conditional_escort(one_column, 2.0).weights[:, 0], [16 / 17, 1 / 17], atol=1e-15
    )


def test_escort_ratio_trivial_cases():
    joint = product_joint(simplex(3, 21), simplex(4, 22))
    assert np.abs(escort_ratio(joint, 2.0) - 1.0).max() < 1e-12
    assert np.abs(escort_ratio(DEPENDENT, 1.0) - 1.0).max() == 0.0


def test_escort_ratio_constant_down_columns_and_cross_checks():
    for q in (0.5, 2.0):
        ratio = escort_ratio(DEPENDENT, q)
        assert np.abs(ratio - ratio[0, :][None, :]).max() == 0.0
        naive = joint_escort_naive(DEPENDENT, q)
        correct = joint_escort_correct(DEPENDENT, q)
        assert np.abs(ratio * naive - correct).max() < 1e-12
    assert np.abs(escort_ratio(DEPENDENT, 2.0) - 1.0).max() > 1e-2


def test_escort_ratio_symmetric_joint_is_all_ones():
    for q in (0.5, 2.0, 3.0):
        assert np.abs(escort_ratio(SYMMETRIC, q) - 1.0).max() < 1e-15


def test_escort_ratio_finite_on_zero_cells():
    with_zero = JointDistribution([[0.1, 0.45], [0.0, 0.45]])
    ratio = escort_ratio(with_zero, 2.0)
    assert np.all(np.isfinite(ratio))
    naive = joint_escort_naive(with_zero, 2.0)
    correct = joint_escort_correct(with_zero, 2.0)
    mask = naive > 0
    assert np.abs(ratio[mask] * naive[mask] - correct[mask]).max() < 1e-12


def test_is_escort_consistent_cases():
    joint = product_joint(simplex(4, 31), simplex(4, 32))
    assert is_escort_consistent(joint, 2.0)
    assert not is_escort_consistent(DEPENDENT, 2.0)
    assert is_escort_consistent(DEPENDENT, 1.0)
    assert is_escort_consistent(SYMMETRIC, 2.0)


def test_naive_marginal_defect_on_asymmetric_dependent():
    naive = joint_escort_naive(DEPENDENT, 2.0)
    target = escort(marginal_a(DEPENDENT), 2.0).weights.weights
    assert np.abs(naive.sum(axis=0) - target).max() > 1e-2
    # the symmetric dependent joint happens to have no defect
    naive_sym = joint_escort_naive(SYMMETRIC, 2.0)
    target_sym = escort(marginal_a(SYMMETRIC), 2.0).weights.weights
    assert np.abs(naive_sym.sum(axis=0) - target_sym).max() < 1e-15


def test_correct_marginal_identity():
    for seed in range(50):
        joint = sample_dependent_joint(77, seed, mi_floor=0.01)
        for q in (0.5, 2.0):
            correct = joint_escort_correct(joint, q)
            target = escort(marginal_a(joint), q).weights.weights
            assert np.abs(correct.sum(axis=0) - target).max() < 1e-12


def test_iff_characterization_over_ensembles():
    for t in range(1000):
        joint = sample_dependent_joint(404, t, mi_floor=0.01)
        assert not is_escort_consistent(joint, 2.0, tol=1e-6)
    for t in range(1000):
        rng = np.random.default_rng(505 + t)
        joint = product_joint(
            Distribution(rng.dirichlet(np.ones(rng.integers(2, 9)))),
            Distribution(rng.dirichlet(np.ones(rng.integers(2, 9)))),
        )
        assert is_escort_consistent(joint, 2.0, tol=1e-9)
