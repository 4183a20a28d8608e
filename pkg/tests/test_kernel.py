import os
import subprocess
import sys

import pytest

from quandles import _kernel

needs_speedups = pytest.mark.skipif(
    not _kernel.has_speedups(), reason="compiled kernel not built"
)


def _pure_scan(n, strategy, lo=None, hi=None, cap=10**9):
    cands = _kernel.candidate_columns0(n)
    count = len(cands[0])
    return _kernel._scan_pure(
        n, strategy, cands, 0 if lo is None else lo, count if hi is None else hi, cap
    )


def test_candidate_columns_fix_position():
    cols = _kernel.candidate_columns0(4)
    assert len(cols) == 4
    for i, pool in enumerate(cols):
        assert len(pool) == 6
        assert all(col[i] == i for col in pool)
        assert pool == sorted(pool)


@needs_speedups
@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("strategy", [_kernel.NAIVE, _kernel.BACKTRACKING])
def test_backends_agree_exactly(n, strategy):
    assert _kernel.scan(n, strategy) == _pure_scan(n, strategy)


@needs_speedups
def test_backends_agree_order5_backtracking():
    assert _kernel.scan(5, _kernel.BACKTRACKING) == _pure_scan(5, _kernel.BACKTRACKING)


@needs_speedups
def test_backends_agree_on_partitions_and_caps():
    for lo, hi in [(0, 1), (2, 5), (0, 6), (5, 6)]:
        assert _kernel.scan(4, _kernel.BACKTRACKING, lo, hi) == _pure_scan(
            4, _kernel.BACKTRACKING, lo, hi
        )
    # identical partial output and placement count at the cap
    for cap in (1, 10, 137, 1000):
        assert _kernel.scan(4, _kernel.NAIVE, cap=cap) == _pure_scan(4, _kernel.NAIVE, cap=cap)
        assert _kernel.scan(4, _kernel.BACKTRACKING, cap=cap) == _pure_scan(
            4, _kernel.BACKTRACKING, cap=cap
        )


@needs_speedups
def test_canon_min_backends_agree():
    flats, _, _ = _kernel.scan(4, _kernel.BACKTRACKING)
    for flat in flats:
        assert _kernel.canon_min(flat, 4) == _kernel._canon_min_pure(flat, 4)


def test_scan_argument_validation():
    with pytest.raises(ValueError):
        _kernel.scan(0, _kernel.NAIVE)
    with pytest.raises(ValueError):
        _kernel.scan(11, _kernel.NAIVE)
    with pytest.raises(ValueError):
        _kernel.scan(3, 7)
    with pytest.raises(ValueError):
        _kernel.scan(3, _kernel.NAIVE, 0, 99)
    with pytest.raises(ValueError):
        _kernel.canon_min(b"\x01\x01", 2)


def test_env_var_forces_pure_backend():
    env = dict(os.environ, QUANDLES_PURE_PYTHON="1")
    src = os.path.join(os.path.dirname(__file__), os.pardir, "src")
    env["PYTHONPATH"] = os.path.abspath(src) + os.pathsep + env.get("PYTHONPATH", "")
    out = subprocess.run(
        [sys.executable, "-c", "import quandles; print(quandles.backend())"],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    assert out.stdout.strip() == "python"
