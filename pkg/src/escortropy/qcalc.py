"""Deformed exponential/logarithm pair, q-addition, and the additive-scale map.

``kn_map`` is the Kolmogorov-Nagumo function ln(q_exp(x)) under which the
deformed addition collapses to ordinary addition:

    kn_map(q_add(a, b)) = kn_map(a) + kn_map(b)

All functions route |q - 1| < EPS_Q_ONE through the classical branch; outside
it they use expm1/log1p so there is no precision cliff as q approaches 1.
"""

from __future__ import annotations

import math

from .errors import DomainCutoffError, NonpositiveArgumentError
from .prob import EPS_Q_ONE, QOrder


def _order_value(q: float | QOrder) -> float:
    # The deformed algebra is defined for any real order; only the entropy
    # layer restricts to q > 0, so no QOrder coercion here.
    return q.value if isinstance(q, QOrder) else float(q)


def _is_unit(value: float) -> bool:
    return abs(value - 1.0) < EPS_Q_ONE


def q_exp(x: float, q: float | QOrder) -> float:
    """Deformed exponential [1 + (1-q)x]^(1/(1-q)); plain exp(x) at q = 1.

    Raises DomainCutoffError when 1 + (1-q)x <= 0; a cutoff always signals an
    out-of-contract input here, never a value to be saturated to zero.
    """
    value = _order_value(q)
    if _is_unit(value):
        return math.exp(x)
    one_m_q = 1.0 - value
    u = one_m_q * x
    if 1.0 + u <= 0.0:
        raise DomainCutoffError(f"1 + (1-q)x = {1.0 + u!r} <= 0 for x={x!r}, q={value!r}")
    return math.exp(math.log1p(u) / one_m_q)


def q_log(y: float, q: float | QOrder) -> float:
    """Deformed logarithm (y^(1-q) - 1)/(1-q); plain ln(y) at q = 1.

    Inverse of q_exp on its domain. Requires y > 0.
    """
    if y <= 0.0:
        raise NonpositiveArgumentError(f"deformed logarithm needs a positive argument, got {y!r}")
    value = _order_value(q)
    if _is_unit(value):
        return math.log(y)
    one_m_q = 1.0 - value
    return math.expm1(one_m_q * math.log(y)) / one_m_q


def kn_map(x: float, q: float | QOrder) -> float:
    """Map to the additive scale: ln[1 + (1-q)x] / (1-q); identity at q = 1."""
    value = _order_value(q)
    if _is_unit(value):
        return float(x)
    one_m_q = 1.0 - value
    u = one_m_q * x
    if 1.0 + u <= 0.0:
        raise DomainCutoffError(f"1 + (1-q)x = {1.0 + u!r} <= 0 for x={x!r}, q={value!r}")
    return math.log1p(u) / one_m_q


def kn_map_inv(x: float, q: float | QOrder) -> float:
    """Inverse of kn_map: (e^((1-q)x) - 1)/(1-q); identity at q = 1.

    Defined on the whole real line.
    """
    value = _order_value(q)
    if _is_unit(value):
        return float(x)
    one_m_q = 1.0 - value
    return math.expm1(one_m_q * x) / one_m_q


def q_add(a: float, b: float, q: float | QOrder) -> float:
    """Deformed addition a + b + (1-q)ab; commutative, with neutral element 0."""
    return a + b + (1.0 - _order_value(q)) * a * b
