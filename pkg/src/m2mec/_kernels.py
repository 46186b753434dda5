"""Hot numeric kernels: numba @njit versions with pure-numpy fallbacks.

Set M2MEC_NO_NUMBA=1 to force the numpy path (useful on platforms without a
working numba, and for the benchmark in benchmarks/bench_kernels.py).  Both
paths compute identical values; tests assert their equivalence.
"""
from __future__ import annotations

import os

import numpy as np

NUMBA_DISABLED = os.environ.get("M2MEC_NO_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if NUMBA_DISABLED:
        raise ImportError("numba disabled via M2MEC_NO_NUMBA")
    from numba import njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False


# --- finite-horizon backup over a 1D belief grid -------------------------
#
# For every grid point x and action a the caller precomputes the expected
# immediate cost and the two observation branches (probability, interpolation
# index, interpolation weight) of the next-layer lookup.  Non-sensing actions
# pass p0 = 1 with the prediction in branch 0.

def _vi_backup_1d_numpy(w_next, cost, p0, i0, w0, i1, w1):
    lerp0 = w_next[i0] * (1.0 - w0) + w_next[i0 + 1] * w0
    lerp1 = w_next[i1] * (1.0 - w1) + w_next[i1 + 1] * w1
    values = cost + p0 * lerp0 + (1.0 - p0) * lerp1
    best = values.argmin(axis=0)
    return values.min(axis=0), best.astype(np.int32)


def _vi_backup_1d_loop(w_next, cost, p0, i0, w0, i1, w1):
    n_actions, n = cost.shape
    out = np.empty(n, dtype=np.float64)
    best = np.empty(n, dtype=np.int32)
    for x in range(n):
        bv = np.inf
        ba = 0
        for a in range(n_actions):
            j0 = i0[a, x]
            j1 = i1[a, x]
            lerp0 = w_next[j0] * (1.0 - w0[a, x]) + w_next[j0 + 1] * w0[a, x]
            lerp1 = w_next[j1] * (1.0 - w1[a, x]) + w_next[j1 + 1] * w1[a, x]
            v = cost[a, x] + p0[a, x] * lerp0 + (1.0 - p0[a, x]) * lerp1
            if v < bv:
                bv = v
                ba = a
        out[x] = bv
        best[x] = ba
    return out, best


# --- same backup over a 2D belief grid (bilinear corners) ----------------
#
# w_next is flat with row stride `stride`; branch lookups carry the flat
# lower-corner index plus the fractional weights along each axis.

def _vi_backup_2d_numpy(w_next_flat, stride, cost, p0, f0, wa0, wb0, f1, wa1, wb1):
    def bilerp(f, wa, wb):
        return (w_next_flat[f] * (1.0 - wa) * (1.0 - wb)
                + w_next_flat[f + stride] * wa * (1.0 - wb)
                + w_next_flat[f + 1] * (1.0 - wa) * wb
                + w_next_flat[f + stride + 1] * wa * wb)

    values = cost + p0 * bilerp(f0, wa0, wb0) + (1.0 - p0) * bilerp(f1, wa1, wb1)
    best = values.argmin(axis=0)
    return values.min(axis=0), best.astype(np.int32)


def _vi_backup_2d_loop(w_next_flat, stride, cost, p0, f0, wa0, wb0, f1, wa1, wb1):
    n_actions, n = cost.shape
    out = np.empty(n, dtype=np.float64)
    best = np.empty(n, dtype=np.int32)
    for x in range(n):
        bv = np.inf
        ba = 0
        for a in range(n_actions):
            f = f0[a, x]
            la = wa0[a, x]
            lb = wb0[a, x]
            lerp0 = (w_next_flat[f] * (1.0 - la) * (1.0 - lb)
                     + w_next_flat[f + stride] * la * (1.0 - lb)
                     + w_next_flat[f + 1] * (1.0 - la) * lb
                     + w_next_flat[f + stride + 1] * la * lb)
            f = f1[a, x]
            la = wa1[a, x]
            lb = wb1[a, x]
            lerp1 = (w_next_flat[f] * (1.0 - la) * (1.0 - lb)
                     + w_next_flat[f + stride] * la * (1.0 - lb)
                     + w_next_flat[f + 1] * (1.0 - la) * lb
                     + w_next_flat[f + stride + 1] * la * lb)
            v = cost[a, x] + p0[a, x] * lerp0 + (1.0 - p0[a, x]) * lerp1
            if v < bv:
                bv = v
                ba = a
        out[x] = bv
        best[x] = ba
    return out, best


# --- two-state Markov chain sample path -----------------------------------

def _chain_path_python(u, p_stay_idle, p_busy_to_idle, s0):
    states = np.empty(u.shape[0], dtype=np.int8)
    counts = np.zeros((2, 2), dtype=np.int64)
    s = s0
    ul = u  # local alias; plain python loop, numba handles the jit path
    for t in range(ul.shape[0]):
        p_idle = p_stay_idle if s == 0 else p_busy_to_idle
        nxt = 0 if ul[t] < p_idle else 1
        counts[s, nxt] += 1
        states[t] = nxt
        s = nxt
    return states, counts


if HAS_NUMBA:
    vi_backup_1d = njit(cache=True)(_vi_backup_1d_loop)
    vi_backup_2d = njit(cache=True)(_vi_backup_2d_loop)
    chain_path = njit(cache=True)(_chain_path_python)
else:
    vi_backup_1d = _vi_backup_1d_numpy
    vi_backup_2d = _vi_backup_2d_numpy
    chain_path = _chain_path_python
