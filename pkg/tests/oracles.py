"""Hand-coded scalar oracles, independent of the package internals.

These re-derive the treasury recursion and default event with plain
Python floats so the vectorised/compiled engine can be checked against
an implementation too simple to be wrong.
"""

from __future__ import annotations


def loan_flows(amount: float, issue_t: int, first_repay_t: int, n: int, horizon: int):
    """(d_l, c) lists for one even-principal loan; d_l indexed 0..horizon."""
    d_l = [0.0] * (horizon + 1)
    outstanding = 0.0
    for t in range(0, horizon + 1):
        if t == issue_t:
            outstanding += amount
        if first_repay_t <= t < first_repay_t + n:
            outstanding -= amount / n
        d_l[t] = outstanding if abs(outstanding) > 1e-12 else 0.0
    c = [0.0] * (horizon + 1)
    for t in range(1, horizon + 1):
        c[t] = d_l[t - 1] - d_l[t]
    return d_l, c


def brute_treasury(
    f: list,
    c: list,
    d_l: list,
    d_s0: float,
    r: float,
    t_ss: int,
    horizon: int,
    one_step: bool = False,
):
    """Evolve one path and decide the default event.

    Returns a dict with the full series and the decision.  Default: some
    period after ``t_ss`` fails to reduce the STNFP (``C_t <= 0``), unless
    the running surplus already covered every remaining liability.
    """
    d = d_s0
    d_series = [d_s0]
    c_series = [None]
    defaulted = False
    scanning = True
    default_t = None
    for t in range(1, horizon + 1):
        i_s = r * d if d > 0.0 else 0.0
        i_l = r * d_l[t - 1]
        c_t = f[t - 1] - c[t] - i_l - i_s
        d = d - c_t
        d_series.append(d)
        c_series.append(c_t)
        if scanning:
            trigger = (t == t_ss + 1) if one_step else (t > t_ss)
            if trigger and c_t <= 0.0:
                defaulted = True
                default_t = t
                scanning = False
            elif d + d_l[t] <= 0.0:
                scanning = False
    return {
        "defaulted": defaulted,
        "default_t": default_t,
        "d": d_series,
        "c": c_series,
    }


def zero_noise_fcf(
    rev0: float,
    x_rev: float,
    x_var: float,
    fixed_base: float,
    x_tax: float,
    x_wc: float,
    capex_base: float,
    mu: tuple,
    t_ss: int,
    horizon: int,
) -> list:
    """Deterministic FCF path with every noise pinned at its mean."""
    mu_rev, mu_var, mu_fix, mu_cap = mu
    f = []
    rev = rev0
    for t in range(1, t_ss + 1):
        rev = rev * (1.0 + x_rev + mu_rev)
        c_var = rev * (x_var - mu_var)
        c_fix = fixed_base * (1.0 + mu_fix)
        tax = max(0.0, (rev - c_var - c_fix) * x_tax)
        f.append(rev - c_var - c_fix - tax + x_wc * rev - capex_base * (1.0 + mu_cap))
    while len(f) < horizon:
        f.append(f[t_ss - 1])
    return f
