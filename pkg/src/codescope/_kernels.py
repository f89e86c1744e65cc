"""JIT-compiled enumeration kernels.

All kernels walk vector spaces in odometer order (digit 0 fastest, so the
visit order is ascending base-q index) and maintain weight and syndrome
incrementally: when one digit changes, only that position's contribution is
swapped out.  Syndromes are base-q encoded integers; for characteristic 2 the
encoded syndrome of a sum is the XOR of the encoded summands, which gives the
``*_xor`` fast paths.

The sweeps accept a (start, count) window so callers can partition a sweep
into chunks; chunk results merge by plain integer addition, making every
partitioning produce bit-identical totals.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def coset_sweep(q, n, m, nw, add, sub, syndelta, pow_q, digits, synd, sidx0, w0, count, hist):
    """Histogram syndrome/weight pairs over `count` vectors from a start state.

    hist is flat with stride nw = n+1; syndelta[i, c, j] is digit j of c times
    column i of the parity-check matrix.
    """
    sidx = sidx0
    w = w0
    for _ in range(count):
        hist[sidx * nw + w] += 1
        i = 0
        while i < n:
            c = digits[i]
            cn = c + 1
            if cn == q:
                cn = 0
            digits[i] = cn
            if c == 0:
                w += 1
            elif cn == 0:
                w -= 1
            for j in range(m):
                a = synd[j]
                b = add[sub[a, syndelta[i, c, j]], syndelta[i, cn, j]]
                if b != a:
                    sidx += (b - a) * pow_q[j]
                    synd[j] = b
            if cn != 0:
                break
            i += 1


@njit(cache=True, nogil=True)
def coset_sweep_xor(q, n, nw, enc, digits, sidx0, w0, count, hist):
    """Characteristic-2 variant: encoded syndromes combine by XOR."""
    sidx = sidx0
    w = w0
    for _ in range(count):
        hist[sidx * nw + w] += 1
        i = 0
        while i < n:
            c = digits[i]
            cn = c + 1
            if cn == q:
                cn = 0
            digits[i] = cn
            if c == 0:
                w += 1
            elif cn == 0:
                w -= 1
            sidx ^= enc[i, c] ^ enc[i, cn]
            if cn != 0:
                break
            i += 1


@njit(cache=True, nogil=True)
def spectrum_sweep(q, n, k, add, sub, rowmult, digits, word, w0, count, counts):
    """Weight histogram of word + (information odometer) * G over a window.

    rowmult[i, c, pos] = c * G[i, pos]; starting from word with weight w0 the
    sweep covers the coset word + C, so a zero start word gives the code's
    weight distribution and a nonzero one gives its coset's.
    """
    w = w0
    for _ in range(count):
        counts[w] += 1
        i = 0
        while i < k:
            c = digits[i]
            cn = c + 1
            if cn == q:
                cn = 0
            digits[i] = cn
            for pos in range(n):
                a = word[pos]
                b = add[sub[a, rowmult[i, c, pos]], rowmult[i, cn, pos]]
                if b != a:
                    if a == 0:
                        w += 1
                    elif b == 0:
                        w -= 1
                    word[pos] = b
            if cn != 0:
                break
            i += 1


@njit(cache=True, nogil=True)
def coverage_sweep(q, n, m, add, sub, syndelta, pow_q, leaders):
    """Coset leader weights by sweeping vectors in nondecreasing weight order.

    Supports are visited lexicographically, values within a support in
    odometer order over the nonzero symbols.  Returns the weight at which the
    last unseen syndrome appeared (the covering radius), or -1 if the
    parity-check matrix was rank deficient.
    """
    remaining = leaders.shape[0]
    leaders[0] = 0
    remaining -= 1
    if remaining == 0:
        return 0
    comb = np.empty(n, np.int64)
    vals = np.empty(n, np.int64)
    synd = np.empty(m, np.int64)
    for w in range(1, n + 1):
        for t in range(w):
            comb[t] = t
        while True:
            sidx = 0
            for j in range(m):
                synd[j] = 0
            for t in range(w):
                vals[t] = 1
                pos = comb[t]
                for j in range(m):
                    a = synd[j]
                    b = add[a, syndelta[pos, 1, j]]
                    if b != a:
                        sidx += (b - a) * pow_q[j]
                        synd[j] = b
            while True:
                if leaders[sidx] < 0:
                    leaders[sidx] = w
                    remaining -= 1
                    if remaining == 0:
                        return w
                t = 0
                while t < w:
                    c = vals[t]
                    cn = c + 1
                    if cn == q:
                        cn = 1
                    vals[t] = cn
                    pos = comb[t]
                    for j in range(m):
                        a = synd[j]
                        b = add[sub[a, syndelta[pos, c, j]], syndelta[pos, cn, j]]
                        if b != a:
                            sidx += (b - a) * pow_q[j]
                            synd[j] = b
                    if cn != 1:
                        break
                    t += 1
                if t == w:
                    break
            t = w - 1
            while t >= 0 and comb[t] == n - w + t:
                t -= 1
            if t < 0:
                break
            comb[t] += 1
            for u in range(t + 1, w):
                comb[u] = comb[u - 1] + 1
    return -1


def chunk_plan(total: int, q: int, workers: int) -> list[tuple[int, int]]:
    """Split [0, total) into q^t contiguous windows, t = ceil(log_q workers).

    total must be a power of q (it always is: these are vector-space sizes),
    so the windows are exact and every worker count yields the same union.
    """
    if workers <= 1 or total <= 1:
        return [(0, total)]
    chunks = 1
    while chunks < workers and chunks < total:
        chunks *= q
    size = total // chunks
    return [(i * size, size) for i in range(chunks)]


def run_partitioned(total, q, workers, make_acc, sweep, acc_nbytes=0):
    """Run `sweep(start, count, acc)` over a chunk plan, merging by addition.

    Uses a thread pool when more than one worker is requested (the kernels
    release the GIL); the merge is exact integer addition, so the result is
    independent of the worker count and of the thread scheduling.
    """
    plan = chunk_plan(total, q, workers)
    nthreads = min(len(plan), workers, os.cpu_count() or 1)
    if acc_nbytes:
        # keep concurrent private accumulators within a modest memory budget
        nthreads = max(1, min(nthreads, int(3e9 // max(acc_nbytes, 1))))
    if nthreads <= 1:
        acc = make_acc()
        for start, count in plan:
            sweep(start, count, acc)
        return acc
    groups = [plan[i::nthreads] for i in range(nthreads)]

    def task(group):
        acc = make_acc()
        for start, count in group:
            sweep(start, count, acc)
        return acc

    with ThreadPoolExecutor(max_workers=nthreads) as pool:
        accs = list(pool.map(task, groups))
    out = accs[0]
    for extra in accs[1:]:
        out += extra
    return out
