"""The entropy functionals: Shannon, Renyi, Tsallis, hybrid, Aczel-Daroczy.

The hybrid entropy is the escort-weighted exponential mean of -ln p,

    D_q(p) = ( exp(-(1-q) sum_k P(q)_k ln p_k) - 1 ) / (1-q),

whose image under the additive-scale map is the Aczel-Daroczy entropy

    kn_map(D_q(p)) = -sum_k p_k^q ln p_k / sum_k p_k^q.

All sums use the 0^q ln 0 = 0 convention (q > 0), so appending zero-probability
outcomes never changes a value. Vectorized row helpers back the simplex search
in the axioms module; the scalar functions delegate to them so there is a
single implementation of each formula.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .prob import Distribution, JointDistribution, QOrder, as_order, nat_entropy
from .escort import joint_escort_correct, joint_escort_naive


@dataclass(frozen=True, eq=False)
class EntropyValue:
    """A computed entropy in nats, tagged with its functional and order."""

    value: float
    functional: str
    order: float | None = None

    def __float__(self) -> float:
        return self.value

    def __repr__(self) -> str:
        if self.order is None:
            return f"EntropyValue({self.value!r}, {self.functional})"
        return f"EntropyValue({self.value!r}, {self.functional}, order={self.order!r})"


def _masked_log(w: np.ndarray) -> np.ndarray:
    out = np.zeros_like(w)
    np.log(w, out=out, where=w > 0)
    return out


def shannon_rows(w: np.ndarray) -> np.ndarray:
    """Shannon entropy of each row of a matrix of normalized weights."""
    w = np.atleast_2d(np.asarray(w, dtype=float))
    return -(w * _masked_log(w)).sum(axis=1)


def aczel_daroczy_rows(w: np.ndarray, q: float | QOrder) -> np.ndarray:
    """Aczel-Daroczy entropy -sum p^q ln p / sum p^q of each row."""
    order = as_order(q)
    w = np.atleast_2d(np.asarray(w, dtype=float))
    if order.is_unit:
        return shannon_rows(w)
    pw = np.where(w > 0, w**order.value, 0.0)
    return -(pw * _masked_log(w)).sum(axis=1) / pw.sum(axis=1)


def hybrid_rows(w: np.ndarray, q: float | QOrder) -> np.ndarray:
    """Hybrid entropy of each row, via escort weights then the exponential mean."""
    order = as_order(q)
    w = np.atleast_2d(np.asarray(w, dtype=float))
    if order.is_unit:
        return shannon_rows(w)
    pw = np.where(w > 0, w**order.value, 0.0)
    esc = pw / pw.sum(axis=1, keepdims=True)
    log_mean = -(esc * _masked_log(w)).sum(axis=1)
    one_m_q = 1.0 - order.value
    return np.expm1(one_m_q * log_mean) / one_m_q


def shannon(p: Distribution) -> EntropyValue:
    """Shannon entropy -sum p ln p in nats."""
    return EntropyValue(nat_entropy(p.weights), "shannon")


def renyi(p: Distribution, alpha: float) -> EntropyValue:
    """Renyi entropy ln(sum p^alpha)/(1-alpha); Shannon branch near alpha = 1."""
    alpha = float(alpha)
    if alpha <= 0:
        raise ValueError(f"Renyi order must be positive, got {alpha!r}")
    order = QOrder(alpha)
    if order.is_unit:
        return EntropyValue(nat_entropy(p.weights), "renyi", alpha)
    w = p.weights[p.weights > 0]
    value = float(np.log((w**alpha).sum()) / (1.0 - alpha))
    return EntropyValue(value, "renyi", alpha)


def tsallis(p: Distribution, q: float | QOrder) -> EntropyValue:
    """Tsallis entropy (sum p^q - 1)/(1-q); Shannon branch near q = 1."""
    order = as_order(q)
    if order.is_unit:
        return EntropyValue(nat_entropy(p.weights), "tsallis", order.value)
    w = p.weights[p.weights > 0]
    value = float(((w**order.value).sum() - 1.0) / (1.0 - order.value))
    return EntropyValue(value, "tsallis", order.value)


def aczel_daroczy(p: Distribution, q: float | QOrder) -> EntropyValue:
    """The additive-scale image of the hybrid entropy: -sum p^q ln p / sum p^q."""
    order = as_order(q)
    value = float(aczel_daroczy_rows(p.weights[None, :], order)[0])
    return EntropyValue(value, "aczel_daroczy", order.value)


def hybrid(p: Distribution, q: float | QOrder) -> EntropyValue:
    """Hybrid entropy D_q; equals kn_map_inv(aczel_daroczy(p, q))."""
    order = as_order(q)
    value = float(hybrid_rows(p.weights[None, :], order)[0])
    return EntropyValue(value, "hybrid", order.value)


def hybrid_joint(r: JointDistribution, q: float | QOrder) -> EntropyValue:
    """Hybrid entropy of a joint, read as a distribution over all cells."""
    order = as_order(q)
    value = float(hybrid_rows(r.weights.ravel()[None, :], order)[0])
    return EntropyValue(value, "hybrid", order.value)


def cross_shannon(r: JointDistribution, q: float | QOrder) -> EntropyValue:
    """Cross entropy of the correct joint escort against the naive one.

    Cells where the naive escort vanishes also vanish in the correct one (both
    are zero exactly on the zero cells of r) and contribute nothing. By Gibbs'
    inequality the value is at least the Shannon entropy of the *correct*
    escort, with equality iff the two constructions coincide; its difference
    from the Shannon entropy of the *naive* escort is sign-indefinite.
    """
    order = as_order(q)
    naive = joint_escort_naive(r, order)
    correct = joint_escort_correct(r, order)
    mask = naive > 0
    value = float(-(correct[mask] * np.log(naive[mask])).sum())
    return EntropyValue(value, "cross_shannon", order.value)
