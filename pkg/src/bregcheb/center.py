"""Chebyshev-center solvers, optimality certificates, and hull projections.

The center of a compact C inside U is the unique minimizer of F_C, and it is
characterized in dual coordinates: grad f(z) must be a convex combination of
grad f over the farthest points Q_C(z).  The certificate records that convex
combination and its residual ("membership gap").

Two independent solvers are provided:

* ``solve_fixed_point`` averages toward a current farthest point in dual
  coordinates with the step schedule 1/(t+2);
* ``solve_subgradient`` descends along the minimum-norm element of the
  subdifferential vertex hull with a 1/(L*sqrt(t)) step, backtracking to
  stay inside U, and tracking the best iterate seen.

Both approach the nonsmooth ridge of F_C only at rate O(1/t) resp.
O(1/sqrt(t)), which is too slow to resolve argmax ties at double precision,
so by default each run finishes with an active-set Newton refinement on the
local min-max system (equal distances + dual membership).  Pass
``polish=False`` for the bare iterations.
"""

import enum
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .bregman import distance_matrix
from .errors import DomainError, NonConvergence
from .farthest import farthest
from .legendre import Kind
from .simplex import lsq_simplex_weights, min_norm_in_hull, project_to_simplex
from .tolerances import DEFAULT


class SolverName(enum.Enum):
    FIXED_POINT = "fixed_point"
    SUBGRADIENT = "subgradient"
    CLOSED_FORM = "closed_form"


@dataclass
class CenterCertificate:
    """A candidate center with the data needed to check its optimality."""

    center: np.ndarray
    radius: float
    farthest: np.ndarray
    weights: np.ndarray
    membership_gap: float
    iterations: int
    solver: SolverName
    valid: bool
    gap_tol: float

    def to_json(self):
        return {
            "center": self.center.tolist(),
            "radius": self.radius,
            "farthest": np.asarray(self.farthest).tolist(),
            "weights": np.asarray(self.weights).tolist(),
            "membership_gap": self.membership_gap,
            "iterations": self.iterations,
            "solver": self.solver.value,
            "valid": self.valid,
            "gap_tol": self.gap_tol,
        }


def certify(F, C, z, gap_tol=1e-8, solver=SolverName.CLOSED_FORM, iterations=0,
            tol=DEFAULT):
    """Build the optimality certificate for a candidate center z in U.

    Fits simplex weights mu minimizing ||grad f(z) - sum mu_i grad f(q_i)||
    over the farthest points q_i of z.  The certificate is valid when the
    gap is within ``gap_tol`` and the farthest set is multivalued whenever C
    has at least two points.
    """
    z = np.asarray(z, dtype=float)
    if not F.in_interior(z):
        raise DomainError("certify requires z in the interior of dom f")
    res = farthest(F, C, z, tol)
    W = F.grad(res.argmax)
    mu, gap = lsq_simplex_weights(W, F.grad(z), tol=1e-12)
    multival_ok = len(res.argmax) >= 2 or len(C) < 2
    return CenterCertificate(
        center=z,
        radius=res.value,
        farthest=res.argmax,
        weights=mu,
        membership_gap=gap,
        iterations=iterations,
        solver=solver,
        valid=bool(gap <= gap_tol and multival_ok),
        gap_tol=gap_tol,
    )


def default_start(F, C):
    """Dual average: grad f* of the mean of grad f over the set.

    Always lies in U, and is symmetric for symmetric inputs.
    """
    G = F.grad(C.enumerate())
    return F.grad_star(G.mean(axis=0))


def _candidate_pool(pts, vals, J):
    """Near-maximal points thinned by spatial suppression.

    Dense samplings put many near-duplicates of one local maximizer at the
    top of the value ranking; keeping only one representative per cluster
    lets genuinely distinct maximizers (e.g. both segment endpoints) stay
    in the pool.
    """
    top = float(np.max(vals))
    window = np.nonzero(vals >= top - 5e-2 * (1.0 + abs(top)))[0]
    window = window[np.argsort(vals[window])[::-1]]
    extent = 0.0
    if len(window) > 1:
        sub = pts[window]
        extent = float(
            np.max(np.linalg.norm(sub[:, None, :] - sub[None, :, :], axis=-1))
        )
    radius = 0.1 * extent
    pool = []
    for i in window:
        if all(np.linalg.norm(pts[i] - pts[j]) > radius for j in pool):
            pool.append(int(i))
        if len(pool) >= J + 4:
            break
    if len(pool) < 2:
        order = np.argsort(vals)[::-1]
        for i in order:
            if int(i) not in pool:
                pool.append(int(i))
            if len(pool) >= 2:
                break
    return pool


def _minmax_polish(F, C, z0, newton_iters=40):
    """Newton refinement of the local min-max system at a candidate center.

    For small subsets A of near-maximal points at z0, solves the square
    system grad f(x) = sum mu_i grad f(c_i), sum mu = 1, equal distances
    D(x, c_i) across A, and returns the first solution passing the
    sufficient optimality conditions (nonnegative weights, no point of C
    farther than the common distance).  The center is unique, so the first
    certified solution is the center.  A certified violator outside the
    current pool is pulled in and the search continues.  Returns
    (x, mu, indices) or None when no subset certifies.
    """
    pts = C.enumerate()
    n, J = pts.shape
    vals = distance_matrix(F, z0[None, :], pts)[0]

    if n == 1:
        pool = [0]
    else:
        pool = _candidate_pool(pts, vals, J)

    def subsets(pool):
        if n == 1:
            return [(0,)]
        out = []
        for size in range(2, min(len(pool), J + 1) + 1):
            subs = list(combinations(sorted(pool), size))
            subs.sort(key=lambda s: -sum(vals[list(s)]))
            out.extend(subs)
        return out

    slack = 1e-9
    tried = set()
    for _ in range(4):
        grew = False
        for active in subsets(pool):
            if active in tried:
                continue
            tried.add(active)
            sol = _newton_minmax(F, pts[list(active)], z0, newton_iters)
            if sol is None:
                continue
            x, mu = sol
            if np.min(mu) < -1e-9:
                continue
            dvals = distance_matrix(F, x[None, :], pts)[0]
            r = float(np.max(dvals[list(active)]))
            if np.max(dvals) > r + slack * (1.0 + abs(r)):
                worst = int(np.argmax(dvals))
                if worst not in pool:
                    pool.append(worst)
                    grew = True
                continue
            return x, np.maximum(mu, 0.0), list(active)
        if not grew:
            break
    return None


def _newton_minmax(F, pts, x0, max_iter):
    """Damped Newton on the square system of the m-point min-max center.

    Steps are scaled back until the iterate stays in U and the residual
    norm decreases, which keeps the method stable when the equal-distance
    equations are poorly conditioned.
    """
    m, J = pts.shape
    Gc = F.grad(pts)
    x = x0.copy()
    mu = np.full(m, 1.0 / m)

    def residual(x, mu):
        gx = F.grad(x)
        r1 = gx - Gc.T @ mu
        r2 = np.array([mu.sum() - 1.0])
        if m > 1:
            d = distance_matrix(F, x[None, :], pts)[0]
            r3 = d[1:] - d[0]
        else:
            r3 = np.zeros(0)
        return np.concatenate([r1, r2, r3])

    def hess(x):
        if F.kind is Kind.ENERGY:
            return np.eye(J)
        if F.kind is Kind.QUADRATIC:
            return F.quad_matrix
        if F.kind is Kind.NEG_ENTROPY:
            return np.diag(1.0 / x)
        return np.diag(1.0 / x**2)

    scale = 1.0 + float(np.abs(F.grad(x0)).max())
    res = residual(x, mu)
    rnorm = float(np.linalg.norm(res))
    for _ in range(max_iter):
        if rnorm <= 1e-13 * scale:
            break
        Jac = np.zeros((J + m, J + m))
        Jac[:J, :J] = hess(x)
        Jac[:J, J:] = -Gc.T
        Jac[J, J:] = 1.0
        if m > 1:
            Jac[J + 1:, :J] = Gc[0] - Gc[1:]
        try:
            delta = np.linalg.solve(Jac, -res)
        except np.linalg.LinAlgError:
            return None
        s = 1.0
        accepted = False
        while s > 1e-10:
            x_try = x + s * delta[:J]
            if F.in_interior(x_try):
                mu_try = mu + s * delta[J:]
                res_try = residual(x_try, mu_try)
                rnorm_try = float(np.linalg.norm(res_try))
                if np.isfinite(rnorm_try) and rnorm_try < rnorm * (1.0 - 1e-4 * s):
                    x, mu, res, rnorm = x_try, mu_try, res_try, rnorm_try
                    accepted = True
                    break
            s *= 0.5
        if not accepted:
            break
    if not np.all(np.isfinite(res)) or rnorm > 1e-9 * scale:
        return None
    return x, mu


def _finish(F, C, x, iterations, solver, tol_stop, hit_max_iter, polish, tol):
    if polish:
        out = _minmax_polish(F, C, x)
        if out is not None:
            x = out[0]
    gap_tol = 100.0 * tol_stop
    cert = certify(F, C, x, gap_tol=gap_tol, solver=solver,
                   iterations=iterations, tol=tol)
    if hit_max_iter and cert.membership_gap > gap_tol:
        raise NonConvergence(
            f"{solver.value}: membership gap {cert.membership_gap:.3e} above "
            f"{gap_tol:.3e} after {iterations} iterations",
            certificate=cert,
        )
    return cert


def solve_fixed_point(F, C, x0=None, max_iter=200_000, tol=1e-6, polish=True,
                      tolerances=DEFAULT):
    """Dual averaging toward a farthest point with step 1/(t+2).

    Iterates x_{t+1} = grad f*((1 - eta_t) grad f(x_t) + eta_t grad f(q_t))
    with eta_t = 1/(t+2) and q_t a farthest point of x_t, stopping when the
    dual step norm falls below ``tol``.
    """
    pts = C.enumerate()
    if x0 is None:
        x0 = default_start(F, C)
    x0 = np.asarray(x0, dtype=float)
    if not F.in_interior(x0):
        raise DomainError("x0 must lie in the interior of dom f")

    G = F.grad(pts)
    K = np.sum(G * pts, axis=-1) - F.f(pts)
    y = F.grad(x0)
    t = 0
    hit_max = True
    while t < max_iter:
        x = F.grad_star(y)
        q = int(np.argmax(K - G @ x))
        eta = 1.0 / (t + 2)
        y_next = (1.0 - eta) * y + eta * G[q]
        step = float(np.linalg.norm(y_next - y))
        y = y_next
        t += 1
        if step <= tol:
            hit_max = False
            break
    x = F.grad_star(y)
    return _finish(F, C, x, t, SolverName.FIXED_POINT, tol, hit_max, polish,
                   tolerances)


def solve_subgradient(F, C, x0=None, max_iter=2_000, tol=1e-9, polish=True,
                      tolerances=DEFAULT):
    """Projected subgradient descent on F_C.

    The direction is the minimum-norm element of the convex hull of the
    subdifferential vertices grad f(x) - grad f(q), with q ranging over the
    near-maximizers inside a window that shrinks with the step size (the
    window makes the direction follow the nonsmooth ridge instead of
    zigzagging across it; it collapses to Q_C(x) as the steps vanish).  The
    step is 1/(L*sqrt(t)) with L estimated from the subgradient norms at x0,
    halved until the iterate stays in U.  The best iterate seen is kept.
    """
    pts = C.enumerate()
    if x0 is None:
        x0 = default_start(F, C)
    x = np.asarray(x0, dtype=float).copy()
    if not F.in_interior(x):
        raise DomainError("x0 must lie in the interior of dom f")

    G = F.grad(pts)

    def value_and_vertices(x, window):
        vals = distance_matrix(F, x[None, :], pts)[0]
        top = float(np.max(vals))
        cut = max(top - window, top * (1.0 - tolerances.argmax_rel) - tolerances.argmax_abs)
        idx = np.nonzero(vals >= cut)[0]
        if len(idx) > 6:
            idx = idx[np.argsort(vals[idx])[::-1][:6]]
        return top, F.grad(x)[None, :] - G[idx]

    val, verts = value_and_vertices(x, 0.0)
    L = max(float(np.linalg.norm(verts, axis=1).max()), 1e-12)
    best_x, best_val = x.copy(), val
    t = 0
    hit_max = True
    window = 0.0
    stall_mark, stall_val = 0, val
    while t < max_iter:
        t += 1
        v, _ = min_norm_in_hull(verts)
        vnorm = float(np.linalg.norm(v))
        if vnorm <= tol:
            hit_max = False
            break
        step = 1.0 / (L * math.sqrt(t))
        cand = x - step * v
        halvings = 0
        while not F.in_interior(cand) and halvings < 60:
            step *= 0.5
            cand = x - step * v
            halvings += 1
        if halvings >= 60:
            break
        x = cand
        window = min(2.0 * L * step * vnorm, 1e-2 * (1.0 + abs(val)))
        val, verts = value_and_vertices(x, window)
        if val < best_val:
            best_val, best_x = val, x.copy()
        if best_val < stall_val - 1e-12 * (1.0 + abs(best_val)):
            stall_mark, stall_val = t, best_val
        elif t - stall_mark >= 250:
            # no measurable progress for many steps: the iterate has
            # localized and the refinement can take over
            hit_max = False
            break
    if best_val < val:
        x = best_x
    return _finish(F, C, x, t, SolverName.SUBGRADIENT, tol, hit_max, polish,
                   tolerances)


@dataclass
class HullProjection:
    """Result of projecting onto the primal image of the dual hull."""

    point: np.ndarray
    weights: np.ndarray
    already_in_hull: bool


def _fstar_hess_diag(F, s):
    """Hessian of f* at s (diagonal, or the full inverse matrix)."""
    if F.kind is Kind.ENERGY:
        return np.eye(s.size)
    if F.kind is Kind.QUADRATIC:
        return np.linalg.inv(F.quad_matrix)
    if F.kind is Kind.NEG_ENTROPY:
        return np.diag(np.exp(s))
    return np.diag(1.0 / s**2)


def _simplex_min_newton(F, W, x, support, max_iter=60):
    """Solve the support-restricted KKT system of min f*(W^T mu) - <x, W^T mu>.

    Unknowns are the weights on the support and the multiplier of the
    sum-to-one constraint; damped Newton with interior safeguarding of the
    dual point.  Returns (mu_support, nu) or None.
    """
    Ws = W[list(support)]
    k = Ws.shape[0]
    mu = np.full(k, 1.0 / k)
    nu = 0.0

    def kkt(mu, nu):
        s = Ws.T @ mu
        g = Ws @ (F.grad_star(s) - x)
        return np.concatenate([g - nu, [mu.sum() - 1.0]]), s

    res, s = kkt(mu, nu)
    rnorm = float(np.linalg.norm(res))
    scale = 1.0 + float(np.abs(x).max())
    for _ in range(max_iter):
        if rnorm <= 1e-12 * scale:
            break
        H = Ws @ _fstar_hess_diag(F, s) @ Ws.T
        Jac = np.zeros((k + 1, k + 1))
        Jac[:k, :k] = H
        Jac[:k, k] = -1.0
        Jac[k, :k] = 1.0
        try:
            delta = np.linalg.solve(Jac, -res)
        except np.linalg.LinAlgError:
            return None
        step = 1.0
        accepted = False
        while step > 1e-12:
            mu_try = mu + step * delta[:k]
            nu_try = nu + step * delta[k]
            s_try = Ws.T @ mu_try
            if F.in_dual_interior(s_try):
                res_try, s_new = kkt(mu_try, nu_try)
                rnorm_try = float(np.linalg.norm(res_try))
                if np.isfinite(rnorm_try) and rnorm_try < rnorm * (1.0 - 1e-4 * step):
                    mu, nu, res, s, rnorm = mu_try, nu_try, res_try, s_new, rnorm_try
                    accepted = True
                    break
            step *= 0.5
        if not accepted:
            break
    if not np.all(np.isfinite(res)) or rnorm > 1e-10 * scale:
        return None
    return mu, nu


def _minimize_over_dual_hull(F, W, x):
    """Global minimizer of f*(W^T mu) - <x, W^T mu> over the simplex.

    Enumerates supports for small vertex counts and returns the first one
    whose KKT conditions certify optimality (the problem is convex, so
    stationarity with feasible multipliers is sufficient).  Falls back to
    projected gradient for many vertices.
    """
    m = W.shape[0]
    scale = 1.0 + float(np.abs(x).max())
    if m <= 7:
        supports = []
        for size in range(1, m + 1):
            supports.extend(combinations(range(m), size))
        # larger supports first: the full-support stationary point is the
        # common case for a projection of an exterior point onto a facet
        supports.sort(key=len, reverse=True)
        for support in supports:
            out = _simplex_min_newton(F, W, x, support)
            if out is None:
                continue
            mu_s, nu = out
            if np.min(mu_s) < -1e-11:
                continue
            mu = np.zeros(m)
            mu[list(support)] = np.maximum(mu_s, 0.0)
            mu /= mu.sum()
            grad_full = W @ (F.grad_star(W.T @ mu) - x)
            if np.min(grad_full - nu) < -1e-8 * scale:
                continue
            return mu
        return None

    mu = np.full(m, 1.0 / m)

    def objective(mu):
        return F.fstar(W.T @ mu) - float(x @ (W.T @ mu))

    val = objective(mu)
    step = 1.0
    for _ in range(20_000):
        g = W @ (F.grad_star(W.T @ mu) - x)
        nxt = project_to_simplex(mu - step * g)
        nval = objective(nxt)
        while nval > val and step > 1e-16:
            step *= 0.5
            nxt = project_to_simplex(mu - step * g)
            nval = objective(nxt)
        move = float(np.linalg.norm(nxt - mu))
        mu, val = nxt, nval
        if move <= 1e-12 * max(step, 1e-16):
            break
        step *= 1.5
    return mu


def dual_hull_projection(F, C, x, membership_tol=1e-9):
    """Project x onto grad f*(conv grad f(C)) in the Bregman sense.

    Minimizes s -> f*(s) - <x, s> over the convex hull of the dual points
    grad f(c) (an equivalent form of the Bregman projection in conjugate
    coordinates), and maps the minimizer back through grad f*.  The
    returned point y satisfies the decomposition inequality
    D(x, c) >= D(x, y) + D(y, c) for every c in C.

    When grad f(x) is itself in the dual hull (checked by a least-squares
    weight fit), x is its own projection and the result is flagged.
    """
    x = np.asarray(x, dtype=float)
    if not F.in_interior(x):
        raise DomainError("x must lie in the interior of dom f")
    pts = C.enumerate()
    W = F.grad(pts)
    gx = F.grad(x)

    mu_fit, resid = lsq_simplex_weights(W, gx, tol=1e-12)
    if resid <= membership_tol * (1.0 + float(np.linalg.norm(gx))):
        return HullProjection(point=x.copy(), weights=mu_fit, already_in_hull=True)

    mu = _minimize_over_dual_hull(F, W, x)
    if mu is None:
        raise NonConvergence("dual hull projection did not certify a minimizer")
    y = F.grad_star(W.T @ mu)
    return HullProjection(point=y, weights=mu, already_in_hull=False)
