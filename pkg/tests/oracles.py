"""Independent reference implementations used as test oracles.

Everything here evaluates the definitional formulas directly (plain powers,
logs, and sums) without the branch structure, escort shortcuts, or stabilized
forms the package uses, so agreement is a genuine cross-check rather than a
tautology.
"""

import numpy as np


def nat_entropy(w):
    w = np.asarray(w, dtype=float).ravel()
    w = w[w > 0]
    return float(-(w * np.log(w)).sum())


def escort_weights(p, q):
    p = np.asarray(p, dtype=float)
    w = np.where(p > 0, p**q, 0.0)
    return w / w.sum()


def aczel_daroczy(p, q):
    p = np.asarray(p, dtype=float).ravel()
    m = p > 0
    w = p[m] ** q
    return float(-(w * np.log(p[m])).sum() / w.sum())


def hybrid(p, q):
    if q == 1.0:
        return nat_entropy(p)
    return float((np.exp(-(1.0 - q) * -aczel_daroczy(p, q)) - 1.0) / (1.0 - q))


def renyi(p, alpha):
    p = np.asarray(p, dtype=float).ravel()
    if alpha == 1.0:
        return nat_entropy(p)
    m = p > 0
    return float(np.log((p[m] ** alpha).sum()) / (1.0 - alpha))


def marginal_a(r):
    return np.asarray(r, dtype=float).sum(axis=0)


def conditional_on_a(r):
    r = np.asarray(r, dtype=float)
    return r / marginal_a(r)[None, :]


def joint_escort_naive(r, q):
    r = np.asarray(r, dtype=float)
    w = np.where(r > 0, r**q, 0.0)
    return w / w.sum()


def joint_escort_correct(r, q):
    r = np.asarray(r, dtype=float)
    cond = conditional_on_a(r)
    w = np.where(cond > 0, cond**q, 0.0)
    return (w / w.sum(axis=0, keepdims=True)) * escort_weights(marginal_a(r), q)[None, :]


def cross_shannon(r, q):
    naive = joint_escort_naive(r, q)
    correct = joint_escort_correct(r, q)
    m = naive > 0
    return float(-(correct[m] * np.log(naive[m])).sum())


def conditional_chain(r, q):
    r = np.asarray(r, dtype=float)
    return aczel_daroczy(r.ravel(), q) - aczel_daroczy(marginal_a(r), q)


def conditional_axiomatic(r, q):
    r = np.asarray(r, dtype=float)
    weights = escort_weights(marginal_a(r), q)
    cond = conditional_on_a(r)
    return float(sum(weights[l] * aczel_daroczy(cond[:, l], q) for l in range(r.shape[1])))


def kn_map(x, q):
    if q == 1.0:
        return float(x)
    return float(np.log(1.0 + (1.0 - q) * x) / (1.0 - q))


def kn_map_inv(x, q):
    if q == 1.0:
        return float(x)
    return float((np.exp((1.0 - q) * x) - 1.0) / (1.0 - q))


def q_addition(a, b, q):
    return a + b + (1.0 - q) * a * b


def additivity_residual(r, q):
    r = np.asarray(r, dtype=float)
    joint = hybrid(r.ravel(), q)
    marginal = hybrid(marginal_a(r), q)
    conditional = kn_map_inv(conditional_axiomatic(r, q), q)
    return joint - q_addition(marginal, conditional, q)
