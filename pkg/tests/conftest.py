"""Shared fixtures and independent oracle implementations.

The oracles here deliberately recompute quantities through different
routes than the library (explicit centering products, per-pair loops,
exhaustive partition search, Monte-Carlo coupling) so tests compare two
independent derivations instead of the code with itself.
"""

import numpy as np


def random_hollow(rng, n, scale=1.0):
    """Random symmetric hollow matrix with entries in [-scale, scale]."""
    A = rng.uniform(-scale, scale, size=(n, n))
    A = 0.5 * (A + A.T)
    np.fill_diagonal(A, 0.0)
    return A


def dense_gram_oracle(D):
    """-C D C / 2 through explicit matrix products."""
    n = D.shape[0]
    C = np.eye(n) - np.ones((n, n)) / n
    return -0.5 * (C @ D @ C)


def pairwise_sq_oracle(X):
    """Per-pair squared distances via an explicit loop."""
    n = X.shape[0]
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            diff = X[i] - X[j]
            out[i, j] = float(diff @ diff)
    return out


def coordinate_kmeans_cost(X, labels):
    """Sum of squared distances to cluster centroids."""
    cost = 0.0
    for c in np.unique(labels):
        pts = X[labels == c]
        mu = pts.mean(axis=0)
        cost += float(((pts - mu) ** 2).sum())
    return cost


def relational_cost_oracle(D, labels):
    """Within-cluster sums over 2|C| through explicit loops."""
    total = 0.0
    for c in np.unique(labels):
        members = np.flatnonzero(labels == c)
        s = 0.0
        for i in members:
            for j in members:
                s += D[i, j]
        total += s / (2.0 * members.size)
    return total


def brute_force_best_2partition(D):
    """Exhaustive search over all 2-partitions; returns (cost, labels)."""
    n = D.shape[0]
    best_cost = None
    best_labels = None
    for mask in range(1, 2 ** (n - 1)):
        labels = np.array([(mask >> i) & 1 for i in range(n)])
        if labels.min() == labels.max():
            continue
        cost = relational_cost_oracle(D, labels)
        if best_cost is None or cost < best_cost:
            best_cost = cost
            best_labels = labels
    return best_cost, best_labels


def mc_silhouette(mean_a, sigma_a, mean_b, sigma_b, samples=100_000,
                  batches=100, seed=0):
    """Monte-Carlo estimate of the Gaussian silhouette gap, with SE.

    Clusters are isotropic with total variance sigma^2 (covariance
    (sigma^2/d) I).  The transport term couples both clusters through a
    shared standard normal, which is optimal for Gaussians with
    proportional covariances; the spread terms use independent pairs.
    Returns (estimate, batch-mean standard error).
    """
    rng = np.random.default_rng(seed)
    mu_a = np.asarray(mean_a, dtype=float)
    mu_b = np.asarray(mean_b, dtype=float)
    d = mu_a.size
    per = samples // batches
    estimates = []
    for _ in range(batches):
        Z = rng.standard_normal((per, d)) / np.sqrt(d)
        coupled = (mu_a - mu_b) + (sigma_a - sigma_b) * Z
        dis2 = np.einsum("ij,ij->i", coupled, coupled).mean()
        Za = sigma_a * (
            rng.standard_normal((per, d)) - rng.standard_normal((per, d))
        ) / np.sqrt(d)
        Zb = sigma_b * (
            rng.standard_normal((per, d)) - rng.standard_normal((per, d))
        ) / np.sqrt(d)
        spread_a = np.einsum("ij,ij->i", Za, Za).mean()
        spread_b = np.einsum("ij,ij->i", Zb, Zb).mean()
        estimates.append(dis2 - spread_a - spread_b)
    estimates = np.array(estimates)
    return float(estimates.mean()), float(
        estimates.std(ddof=1) / np.sqrt(batches)
    )
