"""Small solvers over the probability simplex.

Used for certificate weight fitting (least squares of a target against a
convex hull of vertices) and for minimum-norm subgradient selection.
"""

from itertools import combinations

import numpy as np


def project_to_simplex(v):
    """Euclidean projection of v onto {w : w >= 0, sum w = 1}."""
    v = np.asarray(v, dtype=float)
    n = v.size
    u = np.sort(v)[::-1]
    css = np.cumsum(u)
    rho = np.nonzero(u * np.arange(1, n + 1) > (css - 1.0))[0][-1]
    theta = (css[rho] - 1.0) / (rho + 1.0)
    return np.maximum(v - theta, 0.0)


def _affine_fit(V, b, support):
    """Solve min ||b - V[support]^T mu|| with sum mu = 1 (no sign constraint)."""
    Vs = V[list(support)]
    m = len(support)
    # KKT of the equality-constrained least squares in the mu variables
    M = np.zeros((m + 1, m + 1))
    M[:m, :m] = Vs @ Vs.T
    M[:m, m] = 1.0
    M[m, :m] = 1.0
    rhs = np.zeros(m + 1)
    rhs[:m] = Vs @ b
    rhs[m] = 1.0
    try:
        sol = np.linalg.solve(M, rhs)
    except np.linalg.LinAlgError:
        sol, *_ = np.linalg.lstsq(M, rhs, rcond=None)
    return sol[:m]


_EXACT_LIMIT = 6


def lsq_simplex_weights(V, b, tol=1e-12, max_iter=50_000):
    """min over simplex mu of ||b - V^T mu||, V of shape (m, J).

    Exact active-set enumeration for small m (every support of the optimum
    is tried, so the result is the global minimum), projected gradient
    otherwise.  Returns (mu, residual_norm).
    """
    V = np.atleast_2d(np.asarray(V, dtype=float))
    b = np.asarray(b, dtype=float)
    m = V.shape[0]
    if m == 1:
        mu = np.array([1.0])
        return mu, float(np.linalg.norm(b - V[0]))

    if m <= _EXACT_LIMIT:
        best_mu, best_res = None, np.inf
        for size in range(1, m + 1):
            for support in combinations(range(m), size):
                mu_s = _affine_fit(V, b, support)
                if np.min(mu_s) < -1e-13:
                    continue
                mu = np.zeros(m)
                mu[list(support)] = np.maximum(mu_s, 0.0)
                s = mu.sum()
                if s <= 0:
                    continue
                mu /= s
                res = float(np.linalg.norm(b - V.T @ mu))
                if res < best_res - 1e-15:
                    best_mu, best_res = mu, res
        return best_mu, best_res

    # projected gradient on 0.5 * ||b - V^T mu||^2
    Q = V @ V.T
    lip = max(float(np.linalg.eigvalsh(Q).max()), 1e-30)
    step = 1.0 / lip
    mu = np.full(m, 1.0 / m)
    for _ in range(max_iter):
        grad = Q @ mu - V @ b
        nxt = project_to_simplex(mu - step * grad)
        if np.linalg.norm(nxt - mu) <= tol * step:
            mu = nxt
            break
        mu = nxt
    return mu, float(np.linalg.norm(b - V.T @ mu))


def min_norm_in_hull(V, tol=1e-12):
    """Minimum-norm point of conv(rows of V); returns (point, weights)."""
    V = np.atleast_2d(np.asarray(V, dtype=float))
    mu, _ = lsq_simplex_weights(V, np.zeros(V.shape[1]), tol=tol)
    return V.T @ mu, mu
