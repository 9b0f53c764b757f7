"""The two conditional hybrid entropies, the additivity residual, and its repair.

The q-additive composition rule for the hybrid entropy reads

    D_q(A,B) = D_q(A) (+)_q D_q(B|A)

with (+)_q the deformed addition. There are two inequivalent ways to define
the conditional term:

* the chain route: subtract additive-scale entropies,
  kn_map(D_q(B|A)) = kn_map(D_q(A,B)) - kn_map(D_q(A));
* the axiomatic route: the Kolmogorov-Nagumo mean with escort weights,
  kn_map(D_q(B|A)) = sum_l P(q)_l * AD(B | A = A_l).

The two differ by exactly (1/q) * (cross entropy minus Shannon entropy of the
naive joint escort), which is the quantity ``s_gap`` below. The composition
rule holds with the axiomatic conditional precisely when that gap vanishes
(product joints, q = 1, and dependent joints whose conditional columns have
equal power sums); otherwise the exponential tilt ``corrected_conditional``
closes the residual exactly.

All intermediate arithmetic is done in the additive scale and converted to the
deformed scale only at the boundary, which avoids compounding exponentials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .prob import JointDistribution, QOrder, as_order, condition_on_a, marginal_a, nat_entropy
from .escort import escort, joint_escort_naive
from .entropies import aczel_daroczy_rows, cross_shannon, hybrid, hybrid_joint
from .qcalc import kn_map_inv, q_add


@dataclass(frozen=True, eq=False)
class ChainRuleReport:
    """Every quantity of the additivity analysis for one (joint, q) pair.

    Entropy-like fields are in the additive scale; the residuals are in the
    deformed (D_q) scale.
    """

    q: QOrder
    joint_entropy: float
    marginal_entropy: float
    conditional_chain: float
    conditional_axiomatic: float
    gap: float
    s_gap: float
    lower_bound: float
    upper_bound: float
    residual: float
    corrected_residual: float


def conditional_chain(r: JointDistribution, q: float | QOrder) -> float:
    """Additive-scale conditional via subtraction: AD(A,B) - AD(A)."""
    order = as_order(q)
    joint_ad = float(aczel_daroczy_rows(r.weights.ravel()[None, :], order)[0])
    marg_ad = float(aczel_daroczy_rows(marginal_a(r).weights[None, :], order)[0])
    return joint_ad - marg_ad


def conditional_axiomatic(r: JointDistribution, q: float | QOrder) -> float:
    """Additive-scale conditional as the escort-weighted mean of per-outcome
    Aczel-Daroczy entropies of B given each A outcome."""
    order = as_order(q)
    weights = escort(marginal_a(r), order).weights.weights
    cond = condition_on_a(r)
    per_column = aczel_daroczy_rows(cond.weights.T, order)
    return float((weights * per_column).sum())


def s_gap(r: JointDistribution, q: float | QOrder) -> float:
    """Cross entropy of the correct escort against the naive one, minus the
    naive escort's own Shannon entropy.

    Zero iff the two joint escort constructions coincide; sign-indefinite in
    general. Equals q times the difference between the two conditionals.
    """
    order = as_order(q)
    return cross_shannon(r, order).value - nat_entropy(joint_escort_naive(r, order))


def minmax_bounds(r: JointDistribution, q: float | QOrder) -> tuple[float, float]:
    """Sandwich on s_gap from the min-max theorem for means.

    Replacing each column's power sum by the row-wise minimum (maximum) over
    columns bounds the cellwise escort ratio from below (above). The lower
    bound is always <= 0 and the upper always >= 0; both collapse to zero iff
    the conditional rows are constant across columns.
    """
    order = as_order(q)
    cond = condition_on_a(r)
    powers = np.where(cond.weights > 0, cond.weights**order.value, 0.0)
    col_sums = powers.sum(axis=0)
    row_min_total = powers.min(axis=1).sum()
    row_max_total = powers.max(axis=1).sum()
    naive = joint_escort_naive(r, order)
    logs = np.zeros_like(naive)
    np.log(naive, out=logs, where=naive > 0)
    col_entropy = -(naive * logs).sum(axis=0)
    lower = float((((row_min_total - col_sums) / col_sums) * col_entropy).sum())
    upper = float((((row_max_total - col_sums) / col_sums) * col_entropy).sum())
    return lower, upper


def additivity_residual(r: JointDistribution, q: float | QOrder) -> float:
    """Defect of the q-additive composition rule with the axiomatic conditional.

    D_q(A,B) minus D_q(A) (+)_q D_q(B|A), in the deformed scale. Zero for
    product joints and at q = 1; nonzero for a generic dependent joint.
    """
    order = as_order(q)
    joint_value = hybrid_joint(r, order).value
    marginal_value = hybrid(marginal_a(r), order).value
    conditional_value = kn_map_inv(conditional_axiomatic(r, order), order)
    return joint_value - q_add(marginal_value, conditional_value, order)


def corrected_conditional(r: JointDistribution, q: float | QOrder) -> float:
    """The axiomatic conditional after the exponential tilt that restores
    q-additivity, in the deformed scale.

    The tilt multiplies the shifted conditional by exp(-((1-q)/q) * s_gap),
    which in the additive scale subtracts exactly (1/q) * s_gap and therefore
    lands on the chain-route conditional. The tilt factor is 1 on product
    joints, and the map is the identity at q = 1.
    """
    order = as_order(q)
    base = kn_map_inv(conditional_axiomatic(r, order), order)
    if order.is_unit:
        return base
    one_m_q = 1.0 - order.value
    exponent = -(one_m_q / order.value) * s_gap(r, order)
    # c*(x + 1/(1-q)) - 1/(1-q) rewritten as c*x + expm1(...)/(1-q) to avoid
    # cancellation between the two 1/(1-q) terms for q near 1.
    return math.exp(exponent) * base + math.expm1(exponent) / one_m_q


def chain_rule_report(r: JointDistribution, q: float | QOrder) -> ChainRuleReport:
    """Evaluate every quantity of the additivity analysis for (r, q)."""
    order = as_order(q)
    joint_ad = float(aczel_daroczy_rows(r.weights.ravel()[None, :], order)[0])
    marg_ad = float(aczel_daroczy_rows(marginal_a(r).weights[None, :], order)[0])
    chain = joint_ad - marg_ad
    axiomatic = conditional_axiomatic(r, order)
    gap_value = s_gap(r, order)
    lower, upper = minmax_bounds(r, order)
    joint_value = hybrid_joint(r, order).value
    marginal_value = hybrid(marginal_a(r), order).value
    residual = joint_value - q_add(marginal_value, kn_map_inv(axiomatic, order), order)
    corrected = corrected_conditional(r, order)
    corrected_residual = joint_value - q_add(marginal_value, corrected, order)
    return ChainRuleReport(
        q=order,
        joint_entropy=joint_ad,
        marginal_entropy=marg_ad,
        conditional_chain=chain,
        conditional_axiomatic=axiomatic,
        gap=axiomatic - chain,
        s_gap=gap_value,
        lower_bound=lower,
        upper_bound=upper,
        residual=residual,
        corrected_residual=corrected_residual,
    )
