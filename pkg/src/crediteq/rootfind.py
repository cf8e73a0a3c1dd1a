"""Bracketing scalar root finder (Brent's method).

Combines bisection, secant and inverse quadratic interpolation.  On step
functions (our tau(r) - r under common random numbers is piecewise
constant) it converges to the jump location; the tolerance bounds the
final bracket width.
"""

from __future__ import annotations

from typing import Callable


def brent(
    f: Callable[[float], float],
    a: float,
    b: float,
    xtol: float = 1e-10,
    max_iter: int = 200,
    fa: "float | None" = None,
    fb: "float | None" = None,
) -> float:
    """Root of ``f`` in ``[a, b]``; ``f(a)`` and ``f(b)`` must differ in sign."""
    fa = f(a) if fa is None else fa
    fb = f(b) if fb is None else fb
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0.0:
        raise ValueError(f"root not bracketed: f({a})={fa}, f({b})={fb}")
    c, fc = a, fa
    d = e = b - a
    eps = 2.220446049250313e-16
    for _ in range(max_iter):
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol = 2.0 * eps * abs(b) + xtol
        m = 0.5 * (c - b)
        if abs(m) <= tol or fb == 0.0:
            return b
        if abs(e) < tol or abs(fa) <= abs(fb):
            d = e = m
        else:
            s = fb / fa
            if a == c:
                p = 2.0 * m * s
                q = 1.0 - s
            else:
                q = fa / fc
                rr = fb / fc
                p = s * (2.0 * m * q * (q - rr) - (b - a) * (rr - 1.0))
                q = (q - 1.0) * (rr - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            else:
                p = -p
            s_prev = e
            e = d
            if 2.0 * p < 3.0 * m * q - abs(tol * q) and p < abs(0.5 * s_prev * q):
                d = p / q
            else:
                d = e = m
        a, fa = b, fb
        if abs(d) > tol:
            b += d
        else:
            b += tol if m > 0 else -tol
        fb = f(b)
        if (fb > 0.0) == (fc > 0.0):
            c, fc = a, fa
            d = e = b - a
    return b
