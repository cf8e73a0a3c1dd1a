# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled batch treasury kernel.

Mirrors ``np_backend.evolve_batch`` operation-for-operation; the build
disables FP contraction so results are bit-identical to the numpy
fallback.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fmax

cnp.import_array()

MODE_LITERAL = 0
MODE_ONE_STEP = 1


def evolve_batch(
    cnp.ndarray[cnp.float64_t, ndim=2] f,
    cnp.ndarray[cnp.float64_t, ndim=1] c,
    cnp.ndarray[cnp.float64_t, ndim=1] d_l,
    double d_s0,
    double r,
    int t_ss,
    int horizon,
    int mode,
    double alpha,
    double lgd,
    bint want_returns=True,
):
    """Evolve all paths at rate ``r``; see the numpy backend for the contract."""
    cdef Py_ssize_t n = f.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1, cast=True] defaulted = np.zeros(n, dtype=bool)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] t_stop = np.full(n, horizon, dtype=np.int64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ret = np.zeros(n, dtype=np.float64)
    cdef Py_ssize_t i
    cdef int t
    cdef double d, d_new, i_s, i_l, c_t, receipts, disc, rec
    cdef double recov_disc, d_def, d_l_def, recov
    cdef bint scanning, cash_on, stop_recorded, is_default, path_defaulted
    cdef double inv_alpha = alpha  # divisor; kept as-is for identical rounding

    for i in range(n):
        d = d_s0
        scanning = True
        cash_on = True
        stop_recorded = False
        path_defaulted = False
        rec = 0.0
        disc = 1.0
        recov_disc = 0.0
        d_def = 0.0
        d_l_def = 0.0
        for t in range(1, horizon + 1):
            disc = disc / inv_alpha
            i_s = r * fmax(d, 0.0)
            i_l = r * d_l[t - 1]
            c_t = f[i, t - 1] - c[t] - i_l - i_s
            d_new = d - c_t
            if want_returns and cash_on:
                receipts = (fmax(d, 0.0) - fmax(d_new, 0.0)) + i_s + c[t] + i_l
                rec = rec + receipts * disc
            if mode == MODE_ONE_STEP:
                is_default = scanning and t == t_ss + 1 and c_t <= 0.0
            else:
                is_default = scanning and t > t_ss and c_t <= 0.0
            if is_default:
                path_defaulted = True
                scanning = False
                recov_disc = disc
                d_def = d_new
                d_l_def = d_l[t]
                if not stop_recorded:
                    t_stop[i] = t
                    stop_recorded = True
                cash_on = False
            elif scanning and d_new + d_l[t] <= 0.0:
                scanning = False
            if not stop_recorded and d_l[t] <= 0.0 and d_new <= 0.0:
                t_stop[i] = t
                stop_recorded = True
            if d_l[t] <= 0.0 and d_new <= 0.0:
                cash_on = False
            d = d_new
            if not scanning and not cash_on:
                break
        defaulted[i] = path_defaulted
        if want_returns:
            if path_defaulted:
                if d_def <= d_s0:
                    recov = (d_def + d_l_def) * (1.0 - lgd)
                else:
                    recov = (-(d_def - d_s0) + d_s0 * (1.0 - lgd)) + d_l_def * (1.0 - lgd)
                ret[i] = rec - d_s0 - d_l[0] + recov * recov_disc
            else:
                ret[i] = rec - d_s0 - d_l[0] + 0.0
    return np.asarray(defaulted, dtype=bool), t_stop, ret
