"""Compiled state-sum kernels.

These loops are where all the census time goes: for a d-chord diagram the
bracket is a sum over 2^d states, each needing the component count of a
small graph on {0, ..., 2d}.  The kernels are JIT-compiled with numba when
it is importable; callers fall back to the pure-Python implementation in
`bracket` otherwise.

Exponent bookkeeping: a state contributes A^(d-2b) * delta^(cc-1) with
b = number of B-splices and cc = component count <= 2d+1, so every exponent
lies in [-5d, 5d].  Coefficient arrays have size 10d+1 with index
`5d + exponent`.  For d <= 20 the total of |coefficients| is below 8^d,
safely inside int64.
"""

from __future__ import annotations

from math import comb

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(func):
            return func

        return wrap


_DELTA_TABLES: dict[int, np.ndarray] = {}
_POPCOUNT_TABLES: dict[int, np.ndarray] = {}


def delta_power_table(d: int) -> np.ndarray:
    """dp[k, 2k+t] = coefficient of A^(-2k+4t) in (-A^2-A^-2)^k, k <= 2d."""
    table = _DELTA_TABLES.get(d)
    if table is None:
        maxk = 2 * d
        table = np.zeros((maxk + 1, 3 * maxk + 1), np.int64)
        for k in range(maxk + 1):
            sign = -1 if k % 2 else 1
            for t in range(k + 1):
                table[k, 2 * k + t] = sign * comb(k, t)
        _DELTA_TABLES[d] = table
    return table


def popcount_table(d: int) -> np.ndarray:
    table = _POPCOUNT_TABLES.get(d)
    if table is None:
        masks = np.arange(1 << d, dtype=np.uint32)
        bits = np.zeros(1 << d, np.uint8)
        for k in range(d):
            bits += ((masks >> k) & 1).astype(np.uint8)
        table = bits
        _POPCOUNT_TABLES[d] = table
    return table


@njit(cache=True)
def _fill_edges(chords, edges_a, edges_b):
    # Splice pairs per chord: {(i,j-1),(i-1,j)} for an A-splice of a
    # positive chord (= B-splice of a negative one), {(i,j),(i-1,j-1)}
    # for the other combination.
    d = chords.shape[0]
    for k in range(d):
        i = chords[k, 0]
        j = chords[k, 1]
        if i < j:
            edges_a[k, 0] = i
            edges_a[k, 1] = j - 1
            edges_a[k, 2] = i - 1
            edges_a[k, 3] = j
            edges_b[k, 0] = i
            edges_b[k, 1] = j
            edges_b[k, 2] = i - 1
            edges_b[k, 3] = j - 1
        else:
            edges_a[k, 0] = i
            edges_a[k, 1] = j
            edges_a[k, 2] = i - 1
            edges_a[k, 3] = j - 1
            edges_b[k, 0] = i
            edges_b[k, 1] = j - 1
            edges_b[k, 2] = i - 1
            edges_b[k, 3] = j


@njit(cache=True)
def _union(parent, x, y):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    while parent[y] != y:
        parent[y] = parent[parent[y]]
        y = parent[y]
    if x == y:
        return 0
    parent[x] = y
    return 1


@njit(cache=True)
def _accumulate_bracket(edges_a, edges_b, d, dp, pop, coeffs):
    nv = 2 * d + 1
    center = 5 * d
    parent = np.empty(nv, np.int64)
    for mask in range(1 << d):
        for v in range(nv):
            parent[v] = v
        cc = nv
        for k in range(d):
            if (mask >> k) & 1:
                u1, v1 = edges_b[k, 0], edges_b[k, 1]
                u2, v2 = edges_b[k, 2], edges_b[k, 3]
            else:
                u1, v1 = edges_a[k, 0], edges_a[k, 1]
                u2, v2 = edges_a[k, 2], edges_a[k, 3]
            if u1 != v1:
                cc -= _union(parent, u1, v1)
            if u2 != v2:
                cc -= _union(parent, u2, v2)
        shift = d - 2 * int(pop[mask])
        kk = cc - 1
        base = center + shift - 2 * kk
        for t in range(kk + 1):
            coeffs[base + 4 * t] += dp[kk, 2 * kk + t]


@njit(cache=True)
def _bracket_coeffs(chords, dp, pop):
    d = chords.shape[0]
    edges_a = np.empty((d, 4), np.int64)
    edges_b = np.empty((d, 4), np.int64)
    _fill_edges(chords, edges_a, edges_b)
    coeffs = np.zeros(10 * d + 1, np.int64)
    _accumulate_bracket(edges_a, edges_b, d, dp, pop, coeffs)
    return coeffs


@njit(cache=True)
def _span_of_coeffs(coeffs):
    lo = -1
    hi = -1
    for i in range(coeffs.shape[0]):
        if coeffs[i] != 0:
            if lo < 0:
                lo = i
            hi = i
    if lo < 0:
        return -1
    return hi - lo


@njit(cache=True)
def _component_count(edges, d):
    nv = 2 * d + 1
    parent = np.empty(nv, np.int64)
    for v in range(nv):
        parent[v] = v
    cc = nv
    for k in range(d):
        if edges[k, 0] != edges[k, 1]:
            cc -= _union(parent, edges[k, 0], edges[k, 1])
        if edges[k, 2] != edges[k, 3]:
            cc -= _union(parent, edges[k, 2], edges[k, 3])
    return cc


@njit(cache=True)
def _spans_batch(batch, n, dp, pop, require_mu_sum, out):
    """Bracket spans for `n` diagrams of shape (d, 2) stacked in `batch`.

    out[idx] = span, or -1 for a zero bracket.  When require_mu_sum >= 0,
    diagrams with mu(s_A) + mu(s_B) != require_mu_sum are skipped with
    out[idx] = -2 (the census pruning filter).
    """
    d = batch.shape[1]
    edges_a = np.empty((d, 4), np.int64)
    edges_b = np.empty((d, 4), np.int64)
    coeffs = np.zeros(10 * d + 1, np.int64)
    for idx in range(n):
        _fill_edges(batch[idx], edges_a, edges_b)
        if require_mu_sum >= 0:
            mu_sum = _component_count(edges_a, d) + _component_count(edges_b, d)
            if mu_sum != require_mu_sum:
                out[idx] = -2
                continue
        coeffs[:] = 0
        _accumulate_bracket(edges_a, edges_b, d, dp, pop, coeffs)
        out[idx] = _span_of_coeffs(coeffs)


def bracket_terms(chords) -> dict[int, int]:
    """Bracket of a nonempty chord list as an {exponent: coefficient} map."""
    d = len(chords)
    arr = np.array(chords, np.int64).reshape(d, 2)
    coeffs = _bracket_coeffs(arr, delta_power_table(d), popcount_table(d))
    center = 5 * d
    return {i - center: int(c) for i, c in enumerate(coeffs) if c}


def spans_for_batch(batch: np.ndarray, n: int, d: int, require_mu_sum: int = -1) -> np.ndarray:
    out = np.empty(n, np.int64)
    _spans_batch(batch, n, delta_power_table(d), popcount_table(d), require_mu_sum, out)
    return out


def warm_up() -> None:
    """Force JIT compilation ahead of forking census workers."""
    if not HAVE_NUMBA:
        return
    bracket_terms([(1, 2)])
    batch = np.array([[[1, 3], [2, 4]]], np.int64)
    spans_for_batch(batch, 1, 2)
    spans_for_batch(batch, 1, 2, require_mu_sum=4)
