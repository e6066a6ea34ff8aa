"""Dense-tableau simplex with Bland's rule, plus a matrix-game wrapper.

The LPs in this package are tiny (tens of rows, a few thousand columns at
most), so a dense tableau with Bland's anti-cycling rule is plenty and keeps
runs bit-deterministic across platforms.
"""

from __future__ import annotations

import numpy as np

from .errors import ConvergenceError

_PIVOT_EPS = 1e-11


def simplex_maximize(A, b, c, max_iter: int | None = None):
    """Maximize c.x subject to A x <= b, x >= 0, with b >= 0.

    Returns (x, duals, value).  duals are the optimal multipliers of the row
    constraints, read off the slack reduced costs of the final tableau.
    """
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    m, n = A.shape
    if b.shape != (m,) or c.shape != (n,):
        raise ValueError("inconsistent LP dimensions")
    if np.any(b < 0.0):
        raise ValueError("this solver requires b >= 0 (slack basis start)")

    tab = np.zeros((m + 1, n + m + 1))
    tab[:m, :n] = A
    tab[:m, n : n + m] = np.eye(m)
    tab[:m, -1] = b
    tab[m, :n] = -c
    basis = list(range(n, n + m))

    if max_iter is None:
        max_iter = 2000 * (m + n)
    for _ in range(max_iter):
        reduced = tab[m, : n + m]
        negative = np.nonzero(reduced < -_PIVOT_EPS)[0]
        if negative.size == 0:
            break
        enter = int(negative[0])  # Bland: smallest index
        col = tab[:m, enter]
        rows = np.nonzero(col > _PIVOT_EPS)[0]
        if rows.size == 0:
            raise ConvergenceError(
                "LP unbounded; impossible for the games built here"
            )
        ratios = tab[rows, -1] / col[rows]
        best = ratios.min()
        ties = rows[ratios <= best + 1e-12]
        leave = int(min(ties, key=lambda r: basis[r]))  # Bland tie-break
        pivot = tab[leave, enter]
        tab[leave] /= pivot
        for r in range(m + 1):
            if r != leave and tab[r, enter] != 0.0:
                tab[r] -= tab[r, enter] * tab[leave]
        basis[leave] = enter
    else:
        raise ConvergenceError("simplex iteration budget exhausted", iterations=max_iter)

    x = np.zeros(n)
    for row, var in enumerate(basis):
        if var < n:
            x[var] = tab[row, -1]
    duals = tab[m, n : n + m].copy()
    return x, duals, float(tab[m, -1])


def solve_matrix_game(payoff):
    """Optimal mixture for max_w min_j sum_i w_i P[i, j] over the simplex.

    Returns (value, w).  Solved through the classical LP transform: shift the
    payoff positive, solve the column player's LP (which starts feasible from
    the slack basis), and recover the row mixture from the duals.
    """
    P = np.asarray(payoff, dtype=float)
    if P.ndim != 2 or P.size == 0:
        raise ValueError("payoff must be a nonempty 2-d array")
    p, q = P.shape
    shift = 1.0 - float(P.min())
    Pp = P + shift
    _, duals, total = simplex_maximize(Pp, np.ones(p), np.ones(q))
    if total <= 0.0:  # pragma: no cover - Pp > 0 forces a positive optimum
        raise ConvergenceError("degenerate game value")
    mass = duals.sum()
    if mass <= 0.0:  # pragma: no cover
        raise ConvergenceError("degenerate dual mixture")
    w = duals / mass
    value = 1.0 / mass - shift
    return float(value), w
