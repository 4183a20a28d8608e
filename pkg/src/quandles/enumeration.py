"""Exhaustive generation of standard-form quandle tables of a given order.

Candidate tables are assembled column by column: position i draws from the
(n-1)! columns that fix i, so every candidate already satisfies the diagonal
and column conditions and only self-distributivity needs checking.  The
`naive` strategy materializes all (n-1)!^n candidates and checks each one;
`backtracking` rejects partial placements as soon as a fully determined
triple fails.  Both emit the same tables in the same order (lexicographic in
the column-index tuple), which keeps output files stable and makes the
strategies cross-checkable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import factorial
from collections.abc import Iterator

from . import _kernel
from .matrix import QuandleMatrix
from .symmetry import ClassRecord, automorphism_group, identify_group

STRATEGIES = ("naive", "backtracking")
_STRATEGY_CODE = {"naive": _kernel.NAIVE, "backtracking": _kernel.BACKTRACKING}

DEFAULT_MAX_PLACEMENTS = 10**9


class ResourceLimitError(RuntimeError):
    """Raised when a scan exceeds its placement budget instead of hanging."""

    def __init__(self, n: int, placements: int, cap: int):
        super().__init__(
            f"enumeration of order {n} aborted after {placements} column "
            f"placements (cap {cap})"
        )
        self.n = n
        self.placements = placements
        self.cap = cap


@dataclass(frozen=True)
class EnumerationOptions:
    strategy: str = "backtracking"
    jobs: int = 1
    emit: str = "classes"  # or "all-matrices"
    max_placements: int = DEFAULT_MAX_PLACEMENTS

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if self.emit not in ("classes", "all-matrices"):
            raise ValueError("emit must be 'classes' or 'all-matrices'")
        if self.max_placements < 1:
            raise ValueError("max_placements must be positive")


@dataclass(frozen=True)
class EnumerationReport:
    """Classification of one order: class list plus run bookkeeping.

    Classes are sorted by their canonical representative (row-major lex);
    np summed over classes equals total_valid_matrices.
    """

    n: int
    total_valid_matrices: int
    classes: tuple[ClassRecord, ...]
    elapsed: float
    strategy: str


def column_candidates(n: int, i: int) -> list[tuple[int, ...]]:
    """All columns for position i: permutations of {1..n} with value i at i.

    Returned in lexicographic order; there are exactly (n-1)! of them.
    """
    if not 1 <= i <= n:
        raise IndexError(f"position {i} outside 1..{n}")
    pools = _kernel.candidate_columns0(n)
    return [tuple(v + 1 for v in col) for col in pools[i - 1]]


def _scan_task(args: tuple[int, int, int, int, int]) -> tuple[list[bytes], int, bool]:
    n, code, lo, hi, cap = args
    return _kernel.scan(n, code, lo, hi, cap)


def _scan_all(n: int, opts: EnumerationOptions) -> tuple[list[bytes], int]:
    code = _STRATEGY_CODE[opts.strategy]
    cap = opts.max_placements
    first_count = factorial(n - 1)
    jobs = min(opts.jobs, first_count)
    if jobs <= 1:
        flats, placements, hit = _kernel.scan(n, code, 0, first_count, cap)
    else:
        # one partition per first-column candidate; merge in partition order
        from multiprocessing import get_context

        tasks = [(n, code, lo, lo + 1, cap) for lo in range(first_count)]
        with get_context().Pool(processes=jobs) as pool:
            results = pool.map(_scan_task, tasks)
        flats = [f for part, _, _ in results for f in part]
        placements = sum(p for _, p, _ in results)
        hit = any(h for _, _, h in results) or placements > cap
    if hit:
        raise ResourceLimitError(n, placements, cap)
    return flats, placements


def enumerate_all(n: int, opts: EnumerationOptions | None = None) -> Iterator[QuandleMatrix]:
    """Every standard-form quandle table of order n, exactly once.

    Raises ResourceLimitError before yielding anything when the scan blows
    the placement budget (the naive strategy needs (n-1)!^n placements, which
    is hopeless from n = 7 on and already past the default cap at n = 6).
    """
    opts = opts or EnumerationOptions()
    flats, _ = _scan_all(n, opts)
    for flat in flats:
        yield QuandleMatrix.from_flat(flat, n)


def enumerate_classes(n: int, opts: EnumerationOptions | None = None) -> EnumerationReport:
    """Group the full table stream into isomorphism classes.

    Deduplication hashes each table's canonical form, so the pairwise
    relabelling comparison never runs; each class keeps its canonical
    representative, automorphism group data, class size np, and the latin
    and connectivity flags.
    """
    opts = opts or EnumerationOptions()
    start = time.perf_counter()
    flats, _ = _scan_all(n, opts)
    members: dict[bytes, int] = {}
    for flat in flats:
        key = _kernel.canon_min(flat, n)
        members[key] = members.get(key, 0) + 1
    records = []
    for key in sorted(members):
        rep = QuandleMatrix.from_flat(key, n)
        aut = automorphism_group(rep)
        np = factorial(n) // aut.order
        if np != members[key]:
            raise RuntimeError(
                f"orbit-stabilizer mismatch for {rep!r}: n!/|Aut| = {np}, "
                f"orbit size = {members[key]}"
            )
        records.append(
            ClassRecord(
                representative=rep,
                aut_order=aut.order,
                aut_id=identify_group(aut),
                np=np,
                latin=rep.is_latin(),
                connected=rep.is_connected(),
            )
        )
    return EnumerationReport(
        n=n,
        total_valid_matrices=len(flats),
        classes=tuple(records),
        elapsed=time.perf_counter() - start,
        strategy=opts.strategy,
    )
