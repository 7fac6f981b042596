"""Linear programs in one to three variables.

``solve`` runs Seidel's randomized incremental algorithm with a fixed seed,
so identical input gives bit-identical output. The optimum is polished on
its tight set, and a dual certificate (nonnegative multipliers on at most
``d`` tight constraints reproducing the objective) is attached. Inputs
that make the incremental pass numerically unsafe fall back to exhaustive
vertex enumeration.

Constraints are ``A @ x <= b``; the objective is minimized.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

SEED = 0x5EED
BOX = 1e6
PIVOT_TOL = 1e-12
TIGHT_TOL = 1e-9
CERT_TOL = 1e-8
ENUMERATION_LIMIT = 80


class LpStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    objective: np.ndarray
    A: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.objective, dtype=float).reshape(-1)
        d = len(c)
        if d not in (1, 2, 3):
            raise ValueError("only 1 to 3 variables are supported")
        A = np.asarray(self.A, dtype=float).reshape(-1, d)
        b = np.asarray(self.b, dtype=float).reshape(-1)
        if len(A) != len(b):
            raise ValueError("A and b disagree on the number of constraints")
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b)) and np.all(np.isfinite(c))):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "objective", c)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_constraints(cls, objective, constraints) -> "LinearProgram":
        """Build from ``[(coefficients, rhs), ...]`` pairs."""
        d = len(objective)
        rows = [tuple(a) for a, _ in constraints]
        if any(len(r) != d for r in rows):
            raise ValueError("constraint length does not match num_vars")
        A = np.array(rows, dtype=float).reshape(-1, d)
        b = np.array([rhs for _, rhs in constraints], dtype=float)
        return cls(np.asarray(objective, dtype=float), A, b)

    @property
    def num_vars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LpSolution:
    status: LpStatus
    point: np.ndarray | None = None
    value: float | None = None
    tight_set: tuple[int, ...] = ()
    # constraint index -> multiplier; objective + sum(y_i A_i) = 0
    certificate: dict[int, float] = field(default_factory=dict)

    @property
    def optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL


class _Degenerate(Exception):
    pass


# -- incremental solver on python floats --------------------------------------


def _solve_1d(cons, c):
    lo, hi = -math.inf, math.inf
    for (a,), beta in cons:
        if a > 1e-13:
            v = beta / a
            if v < hi:
                hi = v
        elif a < -1e-13:
            v = beta / a
            if v > lo:
                lo = v
        elif beta < -1e-9 * (1.0 + abs(beta)):
            return None
    if lo > hi:
        if lo - hi > 1e-9 * (1.0 + abs(lo)):
            return None
        mid = 0.5 * (lo + hi)
        return [mid]
    if c > 0:
        return [lo]
    if c < 0:
        return [hi]
    return [lo if math.isfinite(lo) else (hi if math.isfinite(hi) else 0.0)]


def _solve_rec(cons, c, d):
    """Constraints ``cons`` begin with the 2d box constraints of this level."""
    if d == 1:
        return _solve_1d(cons, c[0])
    nbox = 2 * d
    x = [(-BOX if ck > 0 else BOX if ck < 0 else 0.0) for ck in c]
    for i in range(nbox, len(cons)):
        a, beta = cons[i]
        ax = sum(ak * xk for ak, xk in zip(a, x))
        if ax <= beta + 1e-12 * max(1.0, abs(beta), max(abs(v) for v in x)):
            continue
        k = max(range(d), key=lambda j: abs(a[j]))
        piv = a[k]
        if abs(piv) < PIVOT_TOL:
            raise _Degenerate
        rest = [j for j in range(d) if j != k]
        sub_box, sub_rest = [], []
        for j in range(i):
            aj, bj = cons[j]
            f = aj[k] / piv
            na = tuple(aj[l] - f * a[l] for l in rest)
            nb = bj - f * beta
            if j < nbox and f == 0.0:
                sub_box.append((na, nb))
            else:
                sub_rest.append((na, nb))
        g = c[k] / piv
        sub_c = [c[l] - g * a[l] for l in rest]
        y = _solve_rec(sub_box + sub_rest, sub_c, d - 1)
        if y is None:
            return None
        xk = (beta - sum(a[l] * yl for l, yl in zip(rest, y))) / piv
        x = [0.0] * d
        for l, yl in zip(rest, y):
            x[l] = yl
        x[k] = xk
    return x


def _box_rows(d):
    rows, rhs = [], []
    for k in range(d):
        e = [0.0] * d
        e[k] = 1.0
        rows.append(tuple(e))
        rhs.append(BOX)
        e = [0.0] * d
        e[k] = -1.0
        rows.append(tuple(e))
        rhs.append(BOX)
    return rows, rhs


def _enumerate(A, b, c):
    """Best vertex among all d-subsets; deterministic tie-break on x."""
    m, d = A.shape
    best = None
    idx = np.array(list(itertools.combinations(range(m), d)))
    if len(idx) == 0:
        return None
    M = A[idx]
    det = np.linalg.det(M)
    ok = np.abs(det) > 1e-12
    if not ok.any():
        return None
    X = np.linalg.solve(M[ok], b[idx[ok]][..., None])[..., 0]
    viol = (X @ A.T - b[None, :]).max(axis=1)
    feas = viol <= 1e-9 * np.maximum(1.0, np.abs(X).max(axis=1))
    if not feas.any():
        return None
    X = X[feas]
    vals = X @ c
    vmin = vals.min()
    cand = X[vals <= vmin + 1e-12 * max(1.0, abs(vmin))]
    order = np.lexsort(cand.T[::-1])
    best = cand[order[0]]
    return [float(v) for v in best]


def _highs(A, b, c):
    from scipy.optimize import linprog

    res = linprog(c, A_ub=A, b_ub=b, bounds=[(None, None)] * len(c), method="highs")
    if res.status == 2:
        return None
    if res.status != 0:
        raise RuntimeError(f"fallback LP failed: {res.message}")
    return [float(v) for v in res.x]


# -- certificate -----------------------------------------------------------------


def _certificate(rows: np.ndarray, c: np.ndarray):
    """Minimal subset S and y >= 0 with ``c + rows[S].T @ y = 0``."""
    k, d = rows.shape
    cn = float(np.linalg.norm(c))
    if cn == 0.0:
        return (), np.zeros(0)
    tol = CERT_TOL * cn
    pool = list(range(k))
    if k > 30:
        from scipy.optimize import nnls

        y, _ = nnls(rows.T, -c)
        support = [i for i in range(k) if y[i] > 1e-14]
        if support:
            pool = support + [i for i in range(k) if i not in support]
            pool = pool[:30]
    for size in range(1, d + 1):
        for S in itertools.combinations(pool, size):
            M = rows[list(S)].T
            y, *_ = np.linalg.lstsq(M, -c, rcond=None)
            if np.min(y) < -1e-12:
                continue
            if np.linalg.norm(M @ y + c) <= tol:
                return S, np.maximum(y, 0.0)
    return None


# -- driver ----------------------------------------------------------------------


def solve(lp: LinearProgram) -> LpSolution:
    c = lp.objective
    d = lp.num_vars
    A = lp.A
    b = lp.b
    norms = np.linalg.norm(A, axis=1)
    zero = norms <= 1e-14
    if np.any(b[zero] < -1e-12):
        return LpSolution(LpStatus.INFEASIBLE)
    keep = np.flatnonzero(~zero)
    An = A[keep] / norms[keep, None]
    bn = b[keep] / norms[keep]
    m = len(keep)

    box_rows, box_rhs = _box_rows(d)
    order = np.random.default_rng(SEED).permutation(m)
    cons = list(zip(box_rows, box_rhs))
    cons += [(tuple(An[i].tolist()), float(bn[i])) for i in order]

    Afull = np.vstack((np.array(box_rows), An))
    bfull = np.concatenate((np.array(box_rhs), bn))

    try:
        x = _solve_rec(cons, [float(v) for v in c], d)
    except _Degenerate:
        x = "fallback"
    if x is not None and x != "fallback":
        xa = np.array(x)
        viol = float((Afull @ xa - bfull).max())
        if viol > 1e-9 * max(1.0, float(np.abs(xa).max())):
            x = "fallback"
    if isinstance(x, str):
        if len(bfull) <= ENUMERATION_LIMIT:
            x = _enumerate(Afull, bfull, c)
        else:
            x = _highs(Afull, bfull, c)
    if x is None:
        return LpSolution(LpStatus.INFEASIBLE)

    x = np.array(x, dtype=float)
    x, tight, cert = _polish(Afull, bfull, c, x)
    nb = 2 * d
    if cert is not None and any(i < nb and y > 0 for i, y in cert.items()):
        return LpSolution(LpStatus.UNBOUNDED)
    if np.abs(x).max() >= BOX * (1 - 1e-9) and cert is None:
        return LpSolution(LpStatus.UNBOUNDED)

    tight_orig = tuple(sorted(int(keep[i - nb]) for i in tight if i >= nb))
    certificate = {}
    if cert is not None:
        for i, y in cert.items():
            j = int(keep[i - nb])
            certificate[j] = float(y / norms[j])
    return LpSolution(
        LpStatus.OPTIMAL,
        point=x,
        value=float(c @ x),
        tight_set=tight_orig,
        certificate=certificate,
    )


def _tight(A, b, x):
    r = A @ x - b
    return np.flatnonzero(np.abs(r) <= TIGHT_TOL * (1.0 + np.abs(b)))


def _polish(A, b, c, x):
    d = len(c)
    tight = _tight(A, b, x)
    found = _certificate(A[tight], c)
    if found is None:
        return x, tight, None
    S, y = found
    S = [int(tight[i]) for i in S]
    if len(S) == d:
        M = A[S]
        if abs(np.linalg.det(M)) > 1e-10:
            x2 = np.linalg.solve(M, b[S])
            viol = float((A @ x2 - b).max())
            if viol <= 1e-10 * max(1.0, float(np.abs(x2).max())):
                x = x2
                tight = _tight(A, b, x)
    return x, tight, dict(zip(S, (float(v) for v in y)))


def check_certificate(lp: LinearProgram, sol: LpSolution, tol: float = CERT_TOL) -> bool:
    """Verify the stored multipliers: nonnegative, on tight rows, summing to -c."""
    if not sol.optimal:
        return False
    if not sol.certificate:
        return bool(np.linalg.norm(lp.objective) == 0)
    idx = np.array(list(sol.certificate))
    y = np.array([sol.certificate[i] for i in idx])
    if np.any(y < 0):
        return False
    resid = lp.objective + lp.A[idx].T @ y
    if np.linalg.norm(resid) > tol * max(1.0, float(np.linalg.norm(lp.objective))):
        return False
    slack = lp.A[idx] @ sol.point - lp.b[idx]
    scale = 1.0 + np.abs(lp.b[idx]) + np.linalg.norm(lp.A[idx], axis=1) * np.abs(sol.point).max()
    return bool(np.all(np.abs(slack) <= TIGHT_TOL * scale))
