"""Independent brute-force oracles used by the test suite.

These deliberately avoid the production solve paths: QP optima come from
exhaustive active-set enumeration, placement optima from dense grid sweeps.
"""

import itertools

import numpy as np

from blockplan.qp import QpProblem


def qp_enumeration_oracle(p: QpProblem):
    """Global QP optimum by enumerating candidate active sets.

    Solves the KKT equality system for every subset of inequality rows (up
    to size n+1), keeps stationary, feasible, sign-correct candidates, and
    returns (status, x, objective).
    """
    n = p.n
    m = p.A_in.shape[0]
    best = None
    for size in range(0, min(m, n + 1) + 1):
        for subset in itertools.combinations(range(m), size):
            A_act = np.vstack([p.A_eq, p.A_in[list(subset)]]) if (p.A_eq.size or subset) else np.zeros((0, n))
            b_act = np.concatenate([p.b_eq, p.b_in[list(subset)]])
            k = A_act.shape[0]
            kkt = np.zeros((n + k, n + k))
            kkt[:n, :n] = p.Q
            kkt[:n, n:] = -A_act.T
            kkt[n:, :n] = A_act
            rhs = np.concatenate([-p.q, b_act])
            sol, _, _, _ = np.linalg.lstsq(kkt, rhs, rcond=None)
            x, lam = sol[:n], sol[n:]
            if np.linalg.norm(kkt @ sol - rhs, ord=np.inf) > 1e-7:
                continue
            lam_in = lam[p.A_eq.shape[0]:]
            if lam_in.size and lam_in.min() < -1e-8:
                continue
            if m and (p.A_in @ x - p.b_in).min() < -1e-7:
                continue
            if p.A_eq.shape[0] and np.abs(p.A_eq @ x - p.b_eq).max() > 1e-7:
                continue
            obj = 0.5 * x @ p.Q @ x + p.q @ x + p.c0
            if best is None or obj < best[1]:
                best = (x, obj)
    if best is None:
        return "infeasible", None, np.inf
    return "optimal", best[0], float(best[1])


def random_box_qp(rng, n_max=4, m_extra=4):
    """Random PSD objective with box bounds plus a few random cut rows."""
    n = int(rng.integers(1, n_max + 1))
    G = rng.normal(size=(n, n))
    Q = G.T @ G
    if rng.random() < 0.3:
        # drop rank: flat valley along one direction
        u = rng.normal(size=n)
        u /= np.linalg.norm(u)
        Q = Q - u[None, :].T * (u @ Q @ u) * u[None, :]
        Q = 0.5 * (Q + Q.T)
        w, V = np.linalg.eigh(Q)
        Q = (V * np.maximum(w, 0.0)) @ V.T
    q = rng.normal(size=n)
    lo = rng.uniform(-2.0, -0.5, size=n)
    hi = rng.uniform(0.5, 2.0, size=n)
    rows = [np.eye(n), -np.eye(n)]
    rhs = [lo, -hi]
    k = int(rng.integers(0, m_extra + 1))
    if k:
        A = rng.normal(size=(k, n))
        cut = A @ rng.uniform(lo, hi) - rng.uniform(0.0, 1.0, size=k)
        rows.append(A)
        rhs.append(cut)
    return QpProblem(Q=Q, q=q, A_in=np.vstack(rows), b_in=np.concatenate(rhs))


def grid_placement_oracle(model, step=0.005):
    """Placement optimum by dense grid sweep over the table.

    Returns (point, objective) for the best feasible grid point, or
    (None, inf) when every grid point is infeasible.  Works on the
    single-placement models produced by the miqp module.
    """
    half = model.table_half
    xs = np.arange(-half, half + step / 2, step)
    gx, gy = np.meshgrid(xs, xs, indexing="ij")
    pts = np.column_stack([gx.ravel(), gy.ravel()])
    ok = np.ones(len(pts), dtype=bool)
    for hs in model.convex_constraints:
        w = hs.normal_row()
        ok &= pts @ w >= hs.c - 1e-12
    for group in model.disjunctions:
        sat = np.zeros(len(pts), dtype=bool)
        for hs in group.halfspaces:
            w = hs.normal_row()
            sat |= pts @ w >= hs.c - 1e-12
        ok &= sat
    if not ok.any():
        return None, np.inf
    cand = pts[ok]
    Q, q, c0 = model.objective.Q, model.objective.q, model.objective.c0
    vals = 0.5 * np.einsum("ij,jk,ik->i", cand, Q, cand) + cand @ q + c0
    best = int(np.argmin(vals))
    return cand[best], float(vals[best])
