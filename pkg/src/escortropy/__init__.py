"""Hybrid entropy, escort distributions, q-deformed calculus, and numerical
verification of the q-additive entropic chain rule for finite distributions."""

from .errors import (
    DomainCutoffError,
    EscortropyError,
    NegativeWeightError,
    NonpositiveArgumentError,
    NotNormalizedError,
    ZeroMarginalColumnError,
)
from .prob import (
    EPS_NORM,
    EPS_Q_ONE,
    ConditionalDistribution,
    Distribution,
    JointDistribution,
    QOrder,
    as_order,
    condition_on_a,
    drop_zero_columns,
    marginal_a,
    marginal_b,
    mutual_information,
    product_joint,
    random_distribution,
    random_joint,
    validate_distribution,
    validate_joint,
)
from .qcalc import kn_map, kn_map_inv, q_add, q_exp, q_log
from .escort import (
    EscortView,
    JointEscortPair,
    conditional_escort,
    escort,
    escort_inverse,
    escort_ratio,
    is_escort_consistent,
    joint_escort_correct,
    joint_escort_naive,
    joint_escort_pair,
)
from .entropies import (
    EntropyValue,
    aczel_daroczy,
    cross_shannon,
    hybrid,
    hybrid_joint,
    renyi,
    shannon,
    tsallis,
)
from .chain_rules import (
    ChainRuleReport,
    additivity_residual,
    chain_rule_report,
    conditional_axiomatic,
    conditional_chain,
    corrected_conditional,
    minmax_bounds,
    s_gap,
)
from .axioms import (
    AxiomVerdict,
    check_additivity_dependent,
    check_additivity_independent,
    check_continuity,
    check_expansibility,
    check_maximality,
    project_to_simplex,
    sample_dependent_joint,
)

__version__ = "0.1.0"

__all__ = [
    "EPS_NORM",
    "EPS_Q_ONE",
    "AxiomVerdict",
    "ChainRuleReport",
    "ConditionalDistribution",
    "Distribution",
    "DomainCutoffError",
    "EntropyValue",
    "EscortView",
    "EscortropyError",
    "JointDistribution",
    "JointEscortPair",
    "NegativeWeightError",
    "NonpositiveArgumentError",
    "NotNormalizedError",
    "QOrder",
    "ZeroMarginalColumnError",
    "aczel_daroczy",
    "additivity_residual",
    "as_order",
    "chain_rule_report",
    "check_additivity_dependent",
    "check_additivity_independent",
    "check_continuity",
    "check_expansibility",
    "check_maximality",
    "condition_on_a",
    "conditional_axiomatic",
    "conditional_chain",
    "conditional_escort",
    "corrected_conditional",
    "cross_shannon",
    "drop_zero_columns",
    "escort",
    "escort_inverse",
    "escort_ratio",
    "hybrid",
    "hybrid_joint",
    "is_escort_consistent",
    "joint_escort_correct",
    "joint_escort_naive",
    "joint_escort_pair",
    "kn_map",
    "kn_map_inv",
    "marginal_a",
    "marginal_b",
    "minmax_bounds",
    "mutual_information",
    "product_joint",
    "project_to_simplex",
    "q_add",
    "q_exp",
    "q_log",
    "random_distribution",
    "random_joint",
    "renyi",
    "s_gap",
    "sample_dependent_joint",
    "shannon",
    "tsallis",
    "validate_distribution",
    "validate_joint",
]
