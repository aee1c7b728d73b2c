"""Exact optimal ruler search and the construction benchmark table.

Depth-first branch-and-bound: marks are placed in increasing order, the set
of used differences lives in one big int used as a bitset, and the incumbent
length starts at the half-cubic construction, which is always feasible.
Mirror symmetry is broken by requiring first gap <= last gap; the reported
ruler is the lexicographically smallest mark sequence among co-minimal ones.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .core import Ruler, lower_bound
from .constructions import construct_half_cubic, cubic_bound, half_cubic_bound, shifted_cubic_bound

_TIME_CHECK_MASK = (1 << 16) - 1  # cooperative deadline check cadence, in nodes


class InfeasibleBoundError(Exception):
    """The supplied upper bound is below the true optimum: space exhausted."""


@dataclass(frozen=True)
class SearchConfig:
    order: int
    initial_upper_bound: Optional[int] = None
    time_limit: Optional[float] = None  # seconds
    parallelism: int = 1

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("order must be at least 2, got %d" % self.order)
        if self.initial_upper_bound is not None and self.initial_upper_bound < lower_bound(self.order):
            raise ValueError(
                "initial_upper_bound %d below the C(n,2) lower bound %d"
                % (self.initial_upper_bound, lower_bound(self.order))
            )
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")


@dataclass(frozen=True)
class SearchResult:
    ruler: Ruler
    length: int
    optimal: bool
    nodes_explored: int
    elapsed: float


def _canonical(marks: Tuple[int, ...]) -> Tuple[int, ...]:
    """Lexicographically smaller of a ruler and its mirror image."""
    span = marks[-1]
    mirror = tuple(span - m for m in reversed(marks))
    return min(marks, mirror)


class _State:
    """Shared incumbent for one search; workers only ever shrink the limit."""

    def __init__(self, limit: int, deadline: Optional[float]):
        self.limit = limit  # max allowed length for new solutions
        self.best_marks: Optional[Tuple[int, ...]] = None
        self.deadline = deadline
        self.timed_out = False
        self.found_first = False
        self.nodes = 0
        self.lock = threading.Lock()

    def record(self, marks: List[int], stop_first: bool) -> None:
        canon = _canonical(tuple(marks))
        with self.lock:
            if stop_first:
                if not self.found_first:
                    self.best_marks = canon
                    self.found_first = True
                return
            if canon[-1] <= self.limit:
                self.best_marks = canon
                self.limit = canon[-1] - 1


def _dfs(n: int, marks: List[int], mask: int, state: _State, stop_first: bool) -> None:
    """Extend a partial ruler depth-first, trying candidate positions in order."""
    k = n - len(marks)  # marks still to place, >= 1
    last = marks[-1]
    depth = len(marks)
    first_gap = marks[1] - marks[0] if depth > 1 else 0
    tail = (k - 1) * k // 2  # min span needed by the marks after this one
    p = last + 1
    if k == 1 and first_gap:
        p = max(p, last + first_gap)  # symmetry: first gap <= last gap
    while True:
        limit = state.limit
        hi = limit - tail
        if depth == 1 and n > 2:
            hi = min(hi, limit // 2)  # x_2 is the first gap, bounded by the last
        if p > hi:
            return
        state.nodes += 1
        if state.deadline is not None and (state.nodes & _TIME_CHECK_MASK) == 0:
            if time.monotonic() > state.deadline:
                state.timed_out = True
        if state.timed_out or (stop_first and state.found_first):
            return
        add = 0
        ok = True
        for m in marks:
            bit = 1 << (p - m)
            if (mask | add) & bit:
                ok = False
                break
            add |= bit
        if ok:
            marks.append(p)
            if k == 1:
                state.record(marks, stop_first)
            else:
                _dfs(n, marks, mask | add, state, stop_first)
            marks.pop()
        p += 1


def _prefixes(n: int, state: _State) -> List[Tuple[List[int], int]]:
    """First-two-gap prefixes [0, x2, x3] for parallel fan-out."""
    out = []
    limit = state.limit
    tail = (n - 3) * (n - 2) // 2
    for x2 in range(1, limit // 2 + 1):
        for x3 in range(x2 + 1, limit - tail + 1):
            d1, d2, d3 = x2, x3, x3 - x2
            if d1 == d3 or d2 == d3:  # d1 < d2 always
                continue
            mask = (1 << d1) | (1 << d2) | (1 << d3)
            out.append(([0, x2, x3], mask))
    return out


def _run_phase(n: int, state: _State, jobs: int, stop_first: bool) -> None:
    if jobs <= 1 or n < 4 or stop_first:
        _dfs(n, [0], 0, state, stop_first)
        return
    prefixes = _prefixes(n, state)
    state.nodes += len(prefixes)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_dfs, n, marks, mask, state, False) for marks, mask in prefixes
        ]
        for fut in futures:
            fut.result()


def search_optimal(config: SearchConfig) -> SearchResult:
    """Find the shortest ruler of the given order, with an optimality proof.

    Branch-and-bound starts from the half-cubic construction (or the supplied
    bound).  If the search completes, the result is optimal and the ruler is
    the lexicographically smallest among co-minimal ones; on timeout the best
    incumbent so far is returned with optimal=False.
    """
    n = config.order
    start = time.monotonic()
    deadline = start + config.time_limit if config.time_limit is not None else None

    incumbent: Optional[Tuple[int, ...]] = None
    if config.initial_upper_bound is None:
        incumbent = construct_half_cubic(n).marks
        limit = incumbent[-1] - 1
    else:
        limit = config.initial_upper_bound
        feasible = construct_half_cubic(n).marks
        if feasible[-1] <= limit:
            incumbent = feasible
            limit = incumbent[-1] - 1

    state = _State(limit=limit, deadline=deadline)
    _run_phase(n, state, config.parallelism, stop_first=False)
    nodes = state.nodes

    best = state.best_marks if state.best_marks is not None else incumbent
    if best is None:
        if state.timed_out:
            raise TimeoutError("time limit expired before any ruler was found")
        raise InfeasibleBoundError(
            "no ruler of order %d fits under length %d" % (n, config.initial_upper_bound)
        )
    if state.timed_out:
        elapsed = time.monotonic() - start
        return SearchResult(
            ruler=Ruler(best), length=best[-1], optimal=False,
            nodes_explored=nodes, elapsed=elapsed,
        )

    # The sequential pass already visits canonical rulers in lexicographic
    # order, so its final incumbent is the lex-min optimum.  After a parallel
    # pass, rerun to first solution at the proven length to restore that.
    if config.parallelism > 1 and state.best_marks is not None:
        refine = _State(limit=best[-1], deadline=deadline)
        _run_phase(n, refine, 1, stop_first=True)
        nodes += refine.nodes
        if refine.best_marks is not None:
            best = min(best, refine.best_marks)

    elapsed = time.monotonic() - start
    return SearchResult(
        ruler=Ruler(best), length=best[-1], optimal=not state.timed_out,
        nodes_explored=nodes, elapsed=elapsed,
    )


@dataclass(frozen=True)
class BenchRow:
    """One order's worth of construction lengths next to the exact optimum."""

    n: int
    lower_bound: int
    optimal: Optional[int]
    pow2: Optional[int]
    cubic: int
    cubic_shifted: int  # triangular family at modulus n - 2
    half_cubic: int


def compare_constructions(
    n_max: int,
    exact_cutoff: int = 9,
    time_limit: Optional[float] = None,
) -> List[BenchRow]:
    """Tabulate construction lengths against C(n,2) and the exact optimum.

    The optimum column is filled by exact search for n up to exact_cutoff and
    left unknown (None) beyond it.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2, got %d" % n_max)
    rows = []
    for n in range(2, n_max + 1):
        optimal = None
        if n <= exact_cutoff:
            result = search_optimal(SearchConfig(order=n, time_limit=time_limit))
            if result.optimal:
                optimal = result.length
        rows.append(
            BenchRow(
                n=n,
                lower_bound=lower_bound(n),
                optimal=optimal,
                pow2=2 ** (n - 1) - 1 if n <= 63 else None,
                cubic=cubic_bound(n),
                cubic_shifted=shifted_cubic_bound(n),
                half_cubic=half_cubic_bound(n),
            )
        )
    return rows
