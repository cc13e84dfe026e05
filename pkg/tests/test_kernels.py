"""Accelerated counting kernel versus the pure fallback path."""

import os
import subprocess
import sys

import numpy as np

from heckeblocks._kernels import kostka_counts, kostka_counts_python, using_numba


def run_counts(fn, t1, t2, nu, e, shift):
    t1 = np.asarray(t1, np.int64)
    t2 = np.asarray(t2, np.int64)
    nu = np.asarray(nu, np.int64)
    n = nu.shape[0]
    bound = n * (t1.shape[0] + t2.shape[0] + 2) + 1
    counts = np.zeros(2 * bound + 1, np.int64)
    fn(t1, t2, nu, e, shift, counts, bound)
    return counts


CASES = [
    ((2,), (1,), (0, 1, 1), 2, 1),
    ((2,), (1,), (1, 0, 1), 2, 1),
    ((3, 1), (2,), (0, 1, 0, 1, 2, 0), 3, 1),
    ((2, 2), (1, 1), (0, 1, 1, 0, 2, 2), 3, 2),
    ((4,), (), (0, 1, 0, 1), 2, 0),
]


def test_both_paths_agree_on_explicit_cases():
    for t1, t2, nu, e, shift in CASES:
        fast = run_counts(kostka_counts, t1, t2, nu, e, shift)
        slow = run_counts(kostka_counts_python, t1, t2, nu, e, shift)
        assert np.array_equal(fast, slow)


def test_known_degree_histogram():
    counts = run_counts(kostka_counts, (2,), (1,), (0, 1, 1), 2, 1)
    bound = (counts.shape[0] - 1) // 2
    degrees = {d - bound: int(c) for d, c in enumerate(counts) if c}
    assert degrees == {0: 1, 2: 1}


def test_fallback_path_selected_by_environment():
    env = dict(os.environ, HECKEBLOCKS_NO_NUMBA="1")
    script = (
        "from heckeblocks._kernels import using_numba, kostka_counts,"
        " kostka_counts_python\n"
        "assert not using_numba\n"
        "assert kostka_counts is kostka_counts_python\n"
        "from heckeblocks import AffineRank, FockContext, graded_dim\n"
        "ctx = FockContext(AffineRank(1), 1, level=2)\n"
        "print(graded_dim(ctx, (0, 1, 0, 1), (1, 0, 1, 0)))\n"
    )
    proc = subprocess.run(
        [sys.executable, "-c", script], capture_output=True, text=True, env=env
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "2q^2+4q^4+2q^6"


def test_accelerated_path_active_unless_disabled():
    if os.environ.get("HECKEBLOCKS_NO_NUMBA", "").strip().lower() in ("", "0", "false"):
        assert using_numba
    else:
        assert not using_numba
