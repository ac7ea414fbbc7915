"""Dense convex quadratic programming via a primal active-set method.

Solves  min 1/2 v'Qv + q'v + c0  s.t.  A_in v >= b_in,  A_eq v = b_eq
for small dense problems.  Equalities are eliminated first (least-squares
pre-elimination, tolerant of rank-deficient blocks); a phase-one problem
over an added slack variable finds a feasible start or an infeasibility
certificate; phase two runs the active-set iteration with Bland-style
anti-cycling on ties.

Tolerances are fixed so oracle comparisons stay stable:
feasibility 1e-9, stationarity 1e-8, ties 1e-10.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, IterationLimit, NotPsd

FEAS_TOL = 1e-9
STAT_TOL = 1e-8
TIE_TOL = 1e-10
PSD_TOL = 1e-10
_STEP_TOL = 1e-12

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class QpProblem:
    """Problem data; objective is 1/2 v'Qv + q'v + c0."""

    Q: np.ndarray
    q: np.ndarray
    A_in: np.ndarray = None
    b_in: np.ndarray = None
    A_eq: np.ndarray = None
    b_eq: np.ndarray = None
    c0: float = 0.0

    def __post_init__(self):
        n = len(self.q)
        object.__setattr__(self, "Q", np.asarray(self.Q, dtype=float))
        object.__setattr__(self, "q", np.asarray(self.q, dtype=float).ravel())
        for name, mat, vec in (("A_in", self.A_in, self.b_in), ("A_eq", self.A_eq, self.b_eq)):
            if mat is None:
                object.__setattr__(self, name, np.zeros((0, n)))
                object.__setattr__(self, "b" + name[1:], np.zeros(0))
            else:
                m = np.asarray(mat, dtype=float).reshape(-1, n) if np.size(mat) else np.zeros((0, n))
                object.__setattr__(self, name, m)
                object.__setattr__(self, "b" + name[1:], np.asarray(vec, dtype=float).ravel())

    @property
    def n(self) -> int:
        return len(self.q)


@dataclass
class QpSolution:
    v: np.ndarray
    objective: float
    active_set: tuple
    status: str
    lam_in: np.ndarray = None
    lam_eq: np.ndarray = None
    farkas: np.ndarray = field(default=None, repr=False)


def _validate(p: QpProblem):
    n = p.n
    if p.Q.shape != (n, n):
        raise DimensionMismatch(f"Q shape {p.Q.shape} vs n={n}")
    if p.A_in.shape[0] != len(p.b_in) or p.A_eq.shape[0] != len(p.b_eq):
        raise DimensionMismatch("constraint matrix/vector row counts differ")
    if p.A_in.shape[1] != n or p.A_eq.shape[1] != n:
        raise DimensionMismatch("constraint column count differs from n")
    if not np.allclose(p.Q, p.Q.T, atol=1e-9):
        raise NotPsd("Q is not symmetric")
    if n and np.linalg.eigvalsh(0.5 * (p.Q + p.Q.T)).min() < -PSD_TOL:
        raise NotPsd("Q has a negative eigenvalue")


def _nullspace(A: np.ndarray) -> np.ndarray:
    """Orthonormal basis of ker(A); columns span the null space."""
    if A.shape[0] == 0:
        return np.eye(A.shape[1])
    _, s, vt = np.linalg.svd(A)
    rank = int(np.sum(s > max(A.shape) * (s[0] if len(s) else 1.0) * 1e-13))
    return vt[rank:].T


def _independent_rows(A: np.ndarray, rows: list) -> list:
    """Greedy subset of rows keeping earlier entries, dropping dependents."""
    kept = []
    basis = []
    for i in rows:
        v = A[i].astype(float)
        for b in basis:
            v = v - (v @ b) * b
        nv = np.linalg.norm(v)
        if nv > 1e-10:
            basis.append(v / nv)
            kept.append(i)
    return kept


class _ActiveSet:
    """Inequality-only active-set iteration from a feasible start."""

    def __init__(self, Q, q, A, b, x0, max_iter):
        self.Q, self.q, self.A, self.b = Q, q, A, b
        self.x = x0.astype(float).copy()
        self.max_iter = max_iter
        resid = A @ self.x - b if len(b) else np.zeros(0)
        tight = [i for i in range(len(b)) if resid[i] <= FEAS_TOL]
        self.W = _independent_rows(A, tight)

    def run(self):
        for _ in range(self.max_iter):
            d, ray = self._direction()
            if ray is not None:
                blocked = self._step(ray, allow_unit=False)
                if not blocked:
                    return UNBOUNDED, self.x, None
                continue
            if np.linalg.norm(d) <= _STEP_TOL:
                lam = self._multipliers()
                worst = self._most_negative(lam)
                if worst is None:
                    return OPTIMAL, self.x, lam
                self.W.remove(worst)
                continue
            self._step(d, allow_unit=True)
        raise IterationLimit("active-set iteration cap reached", best=self.x.copy())

    def _direction(self):
        g = self.Q @ self.x + self.q
        Aw = self.A[self.W] if self.W else np.zeros((0, len(self.x)))
        Z = _nullspace(Aw)
        if Z.shape[1] == 0:
            return np.zeros_like(self.x), None
        H = Z.T @ self.Q @ Z
        gz = Z.T @ g
        dz, residual, _, _ = np.linalg.lstsq(H, -gz, rcond=None)
        if np.linalg.norm(H @ dz + gz) > 1e-9 * max(1.0, np.linalg.norm(gz)):
            # gradient has a component along a zero-curvature direction:
            # objective decreases without bound along the residual ray
            r = -(gz + H @ dz)
            ray = Z @ (r / np.linalg.norm(r))
            return None, ray
        return Z @ dz, None

    def _step(self, d, allow_unit):
        """Advance along d; returns True if a blocking constraint was added."""
        alpha = 1.0 if allow_unit else np.inf
        rows = []
        for i in range(len(self.b)):
            if i in self.W:
                continue
            ad = self.A[i] @ d
            if ad < -TIE_TOL:
                a_i = (self.b[i] - self.A[i] @ self.x) / ad
                if a_i < alpha - TIE_TOL:
                    alpha, rows = a_i, [i]
                elif a_i <= alpha + TIE_TOL:
                    rows.append(i)
        if not np.isfinite(alpha):
            return False
        alpha = max(alpha, 0.0)
        self.x = self.x + alpha * d
        if rows:
            add = min(rows)  # Bland: smallest index among ties
            trial = _independent_rows(self.A, self.W + [add])
            if add in trial:
                self.W = trial
        return bool(rows)

    def _multipliers(self):
        g = self.Q @ self.x + self.q
        lam = np.zeros(len(self.b))
        if self.W:
            Aw = self.A[self.W]
            sol, _, _, _ = np.linalg.lstsq(Aw.T, g, rcond=None)
            lam[self.W] = sol
        return lam

    def _most_negative(self, lam):
        if not self.W:
            return None
        vals = [(lam[i], i) for i in self.W]
        lo = min(v for v, _ in vals)
        if lo >= -STAT_TOL:
            return None
        ties = [i for v, i in vals if v <= lo + TIE_TOL]
        return min(ties)


def _phase_one(A, b, max_iter):
    """Feasible point for A y >= b, or an infeasibility certificate.

    Minimizes 1/2 t^2 over (y, t) subject to A y + t >= b, t >= 0; the
    optimum is zero exactly when the original system is feasible.
    """
    m, r = A.shape
    if m == 0:
        return np.zeros(r), None
    Q = np.zeros((r + 1, r + 1))
    Q[r, r] = 1.0
    q = np.zeros(r + 1)
    A1 = np.hstack([A, np.ones((m, 1))])
    t_row = np.zeros((1, r + 1))
    t_row[0, r] = 1.0
    A_ext = np.vstack([A1, t_row])
    b_ext = np.concatenate([b, [0.0]])
    x0 = np.zeros(r + 1)
    x0[r] = max(0.0, float(b.max()))
    status, x, lam = _ActiveSet(Q, q, A_ext, b_ext, x0, max_iter).run()
    t_star = x[r]
    if status == OPTIMAL and t_star <= 1e-7:
        y = x[:r]
        viol = b - A @ y
        if viol.size and viol.max() > FEAS_TOL:
            # tiny residual infeasibility: push onto the violated face exactly
            W = [int(np.argmax(viol))]
            y = y + np.linalg.lstsq(A[W], viol[W], rcond=None)[0]
        return y, None
    # Farkas-type certificate: lam >= 0, lam' A = 0, lam' b > 0
    cert = np.maximum(lam[:m], 0.0) if lam is not None else np.ones(m)
    return None, cert


def solve_qp(p: QpProblem, max_iter: int = None) -> QpSolution:
    """Globally solve the convex QP; deterministic for identical inputs.

    Optimal solutions satisfy KKT stationarity within 1e-8 and primal
    feasibility within 1e-9.  Infeasible problems return a Farkas-type
    certificate over the inequality rows of the reduced problem.
    """
    _validate(p)
    n = p.n
    m_in = p.A_in.shape[0]
    if max_iter is None:
        max_iter = 200 + 30 * (n + m_in + p.A_eq.shape[0])

    # eliminate equalities: x = x_p + Z y
    if p.A_eq.shape[0]:
        x_p, _, _, _ = np.linalg.lstsq(p.A_eq, p.b_eq, rcond=None)
        if np.linalg.norm(p.A_eq @ x_p - p.b_eq, ord=np.inf) > 1e-8:
            return QpSolution(x_p, np.inf, (), INFEASIBLE)
        Z = _nullspace(p.A_eq)
    else:
        x_p, Z = np.zeros(n), np.eye(n)

    Qr = Z.T @ p.Q @ Z
    qr = Z.T @ (p.q + p.Q @ x_p)
    Ar = p.A_in @ Z
    br = p.b_in - p.A_in @ x_p if m_in else np.zeros(0)

    if Z.shape[1] == 0:
        # equalities pin the point entirely
        if m_in and (p.A_in @ x_p - p.b_in).min() < -FEAS_TOL:
            return QpSolution(x_p, np.inf, (), INFEASIBLE)
        obj = 0.5 * x_p @ p.Q @ x_p + p.q @ x_p + p.c0
        return QpSolution(x_p, float(obj), (), OPTIMAL, np.zeros(m_in), None)

    y0, cert = _phase_one(Ar, br, max_iter)
    if y0 is None:
        sol = QpSolution(x_p, np.inf, (), INFEASIBLE)
        sol.farkas = cert
        return sol

    status, y, lam = _ActiveSet(Qr, qr, Ar, br, y0, max_iter).run()
    x = x_p + Z @ y
    if status == UNBOUNDED:
        return QpSolution(x, -np.inf, (), UNBOUNDED)

    active = tuple(i for i in range(m_in) if (p.A_in[i] @ x - p.b_in[i]) <= 10 * FEAS_TOL)
    obj = 0.5 * x @ p.Q @ x + p.q @ x + p.c0
    lam_eq = None
    if p.A_eq.shape[0]:
        resid = p.Q @ x + p.q - p.A_in.T @ lam
        lam_eq, _, _, _ = np.linalg.lstsq(p.A_eq.T, resid, rcond=None)
    return QpSolution(x, float(obj), active, OPTIMAL, lam, lam_eq)
