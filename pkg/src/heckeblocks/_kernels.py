"""Hot enumeration kernel.

The tableau-counting walk below is the inner loop of every graded-dimension
computation, so it is written against flat numpy int64 arrays and compiled
with numba when available.  Setting HECKEBLOCKS_NO_NUMBA=1 selects the pure
Python fallback on the same code; a missing numba degrades the same way.
``kostka_counts_python`` always points at the uncompiled function so the two
paths can be compared directly (see benchmarks/).

State encoding: a component with target row lengths t (length m) is tracked
as a length m+1 array `a` of current row lengths plus the count k of nonzero
rows.  Rows are 0-based here; a node in row r at current length a[r] sits in
column a[r] (0-based) and has residue (a[r] - r + shift) mod e, with shift 0
for component 1 and s for component 2.  Growth corners are encoded as a
single id, component-1 rows first, then component-2 rows, so the search
order agrees with the lexicographic order on (component, row) sequences.
"""

import os

import numpy as np


_flag = os.environ.get("HECKEBLOCKS_NO_NUMBA", "").strip().lower()
if _flag not in ("", "0", "false"):
    _numba_njit = None
    using_numba = False
else:
    try:
        from numba import njit as _numba_njit

        using_numba = True
    except ImportError:
        _numba_njit = None
        using_numba = False


def _kostka_counts_impl(t1, t2, nu, e, shift, counts, offset):
    """Count standard growths of the target shape (t1, t2) whose residue
    word equals nu, binned by degree into counts[degree + offset].

    The degree of a growth is the sum over placed nodes of the number of
    addable corners of the node's residue strictly below it minus the
    number of removable ones, read in the shape containing the node.
    Iterative depth-first search: at each depth the next corner id at or
    after `cursor` matching nu[depth] is taken; exhausting ids pops a level.
    """
    n = nu.shape[0]
    len1 = t1.shape[0]
    len2 = t2.shape[0]
    a1 = np.zeros(len1 + 1, np.int64)
    a2 = np.zeros(len2 + 1, np.int64)
    k1 = 0
    k2 = 0
    choice = np.empty(n + 1, np.int64)
    degs = np.zeros(n + 1, np.int64)
    depth = 0
    cursor = 0
    while True:
        if depth == n:
            counts[offset + degs[n]] += 1
            found = -1
        else:
            found = -1
            cid = cursor
            while cid < len1 + len2:
                if cid < len1:
                    r = cid
                    if (
                        a1[r] < t1[r]
                        and (r == 0 or a1[r] < a1[r - 1])
                        and (a1[r] - r) % e == nu[depth]
                    ):
                        found = cid
                        break
                else:
                    r = cid - len1
                    if (
                        a2[r] < t2[r]
                        and (r == 0 or a2[r] < a2[r - 1])
                        and (a2[r] - r + shift) % e == nu[depth]
                    ):
                        found = cid
                        break
                cid += 1
        if found >= 0:
            i = nu[depth]
            d = 0
            if found < len1:
                row = found
                a1[row] += 1
                if a1[row] == 1:
                    k1 += 1
                for rr in range(row + 1, k1 + 1):
                    if a1[rr] < a1[rr - 1] and (a1[rr] - rr) % e == i:
                        d += 1
                    if rr < k1 and a1[rr] > a1[rr + 1] and (a1[rr] - 1 - rr) % e == i:
                        d -= 1
                for rr in range(0, k2 + 1):
                    if (rr == 0 or a2[rr] < a2[rr - 1]) and (a2[rr] - rr + shift) % e == i:
                        d += 1
                    if rr < k2 and a2[rr] > a2[rr + 1] and (a2[rr] - 1 - rr + shift) % e == i:
                        d -= 1
            else:
                row = found - len1
                a2[row] += 1
                if a2[row] == 1:
                    k2 += 1
                for rr in range(row + 1, k2 + 1):
                    if a2[rr] < a2[rr - 1] and (a2[rr] - rr + shift) % e == i:
                        d += 1
                    if rr < k2 and a2[rr] > a2[rr + 1] and (a2[rr] - 1 - rr + shift) % e == i:
                        d -= 1
            choice[depth] = found
            degs[depth + 1] = degs[depth] + d
            depth += 1
            cursor = 0
        else:
            depth -= 1
            if depth < 0:
                break
            cid = choice[depth]
            if cid < len1:
                a1[cid] -= 1
                if a1[cid] == 0:
                    k1 -= 1
            else:
                r = cid - len1
                a2[r] -= 1
                if a2[r] == 0:
                    k2 -= 1
            cursor = cid + 1


kostka_counts_python = _kostka_counts_impl

if using_numba:
    kostka_counts = _numba_njit(cache=True)(_kostka_counts_impl)
else:
    kostka_counts = _kostka_counts_impl
