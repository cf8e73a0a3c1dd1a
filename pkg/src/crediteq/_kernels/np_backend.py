"""Vectorised numpy implementation of the batch treasury kernel.

Evaluates the treasury recursion for every path of an ensemble at one
rate: default indicators, stop times and discounted lender returns.
Expression order matches the compiled kernel exactly so both backends
produce bit-identical results (the extension is built with
``-ffp-contract=off`` for the same reason).
"""

from __future__ import annotations

import numpy as np

MODE_LITERAL = 0
MODE_ONE_STEP = 1


def evolve_batch(
    f: np.ndarray,
    c: np.ndarray,
    d_l: np.ndarray,
    d_s0: float,
    r: float,
    t_ss: int,
    horizon: int,
    mode: int,
    alpha: float,
    lgd: float,
    want_returns: bool = True,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Evolve all paths at rate ``r``.

    Parameters
    ----------
    f : (n, horizon) FCF matrix, one row per path.
    c : (horizon+1,) schedule flows, ``c[t]`` for period t (``c[0]`` unused).
    d_l : (horizon+1,) outstanding term principal after period t.
    mode : MODE_LITERAL scans every period after ``t_ss``; MODE_ONE_STEP only
        checks ``t_ss + 1``.

    Returns
    -------
    (defaulted, t_stop, ret): bool/int64/float64 arrays of length n.  ``ret``
    is zero-filled when ``want_returns`` is false.
    """
    n = f.shape[0]
    d = np.full(n, d_s0, dtype=np.float64)
    defaulted = np.zeros(n, dtype=bool)
    scanning = np.ones(n, dtype=bool)
    cash_on = np.ones(n, dtype=bool)
    t_stop = np.full(n, horizon, dtype=np.int64)
    stop_recorded = np.zeros(n, dtype=bool)
    rec = np.zeros(n, dtype=np.float64)
    recov_disc = np.zeros(n, dtype=np.float64)
    d_def = np.zeros(n, dtype=np.float64)
    d_l_def = np.zeros(n, dtype=np.float64)
    disc = 1.0
    for t in range(1, horizon + 1):
        disc = disc / alpha
        i_s = r * np.maximum(d, 0.0)
        i_l = r * d_l[t - 1]
        c_t = f[:, t - 1] - c[t] - i_l - i_s
        d_new = d - c_t
        if want_returns:
            receipts = (np.maximum(d, 0.0) - np.maximum(d_new, 0.0)) + i_s + c[t] + i_l
            rec += np.where(cash_on, receipts * disc, 0.0)
        if mode == MODE_ONE_STEP:
            new_default = scanning & (t == t_ss + 1) & (c_t <= 0.0)
        else:
            new_default = scanning & (t > t_ss) & (c_t <= 0.0)
        defaulted |= new_default
        recov_disc[new_default] = disc
        d_def[new_default] = d_new[new_default]
        d_l_def[new_default] = d_l[t]
        retire = scanning & ~new_default & (d_new + d_l[t] <= 0.0)
        scanning &= ~(new_default | retire)
        paid = ~stop_recorded & ~new_default & (d_l[t] <= 0.0) & (d_new <= 0.0)
        newly_stopped = new_default | paid
        t_stop[newly_stopped] = t
        stop_recorded |= newly_stopped
        cash_on &= ~new_default
        cash_on &= ~((d_l[t] <= 0.0) & (d_new <= 0.0))
        d = d_new
        if not (scanning.any() or cash_on.any()):
            break
    ret = np.zeros(n, dtype=np.float64)
    if want_returns:
        recov = np.where(
            d_def <= d_s0,
            (d_def + d_l_def) * (1.0 - lgd),
            (-(d_def - d_s0) + d_s0 * (1.0 - lgd)) + d_l_def * (1.0 - lgd),
        )
        ret = rec - d_s0 - d_l[0] + np.where(defaulted, recov * recov_disc, 0.0)
    return defaulted, t_stop, ret
