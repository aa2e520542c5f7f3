"""Isomorph-free generation of racks and quandles, and the virtual census.

Generation works on partial tables.  Rows are assigned depth first and
every assignment is pushed through s_{s_x(y)} = s_x s_y s_x^-1 for all
pairs of assigned rows, so one chosen row usually forces several others.

Symmetry breaking uses the *point type* of x: the cycle type of s_x
together with the length of the cycle through x.  Its lexicographically
least realisation, with x relabeled 0, is a fixed permutation (the cycle
through 0 first, then the other cycles in increasing length, each on
consecutive labels).  Types are ranked by the cycle type of the whole row,
then by the length of the cycle through x.  In the generator, point 0
always carries a type of maximal rank and s_0 is exactly the least
realisation of it, so every other row is bounded by rank.  A finished table is accepted (orderly mode) or keyed (dedup mode)
by its least relabeling among those sending a maximal-rank point to 0.
"""

from __future__ import annotations

import itertools
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterator

from .autgroup import classify_virtual
from .perm import Perm, cycle_length_at, cycle_type
from .rack import RackTable, canonical_form, find_violations, is_quandle, lex_min_relabeling

log = logging.getLogger(__name__)

KINDS = ("rack", "quandle")
DEFAULT_BUDGET_SECS = 3600.0
MAX_ORDER = 8
STRETCH_ORDERS = (7, 8)
ORDERLY_FROM = 7
CONJ_CACHE_LIMIT = 500_000  # entries; keeps order-8 runs within a few hundred MB


class BudgetExhausted(RuntimeError):
    """A time budget ran out; ``found`` carries what was produced so far."""

    def __init__(self, message: str, found: list | None = None):
        super().__init__(message)
        self.found = found or []


def budget_from_env() -> float:
    raw = os.environ.get("VRC_BUDGET_SECS")
    return float(raw) if raw else DEFAULT_BUDGET_SECS


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


# ----------------------------------------------------------------------------
# point types


def least_realisation(own: int, others: tuple[int, ...]) -> Perm:
    """The least permutation whose point 0 lies on a cycle of length ``own``
    and whose remaining cycles have the lengths ``others``."""
    images: list[int] = []
    start = 0
    for length in (own,) + tuple(sorted(others)):
        images.extend(start + (i + 1) % length for i in range(length))
        start += length
    return tuple(images)


def point_type(sigma: Perm, x: int) -> tuple[int, tuple[int, ...]]:
    own = cycle_length_at(sigma, x)
    rest = list(cycle_type(sigma))
    rest.remove(own)
    return own, tuple(sorted(rest))


def _type_key(t: tuple[int, tuple[int, ...]]) -> tuple:
    """Order types by the cycle type of the whole row, then by own length."""
    own, rest = t
    return tuple(sorted(rest + (own,))), own


@lru_cache(maxsize=None)
def _type_tables(n: int):
    """All permutations of degree n, and for each the per-point type rank."""
    perms = list(itertools.permutations(range(n)))
    reps = {}
    for p in perms:
        for x in range(n):
            t = point_type(p, x)
            if t not in reps:
                reps[t] = least_realisation(*t)
    types = sorted(reps, key=_type_key)
    ordered = [reps[t] for t in types]
    rank_of_type = {t: i for i, t in enumerate(types)}
    ranks = {}
    for p in perms:
        ctype = cycle_type(p)
        per_point = []
        for x in range(n):
            own = cycle_length_at(p, x)
            rest = list(ctype)
            rest.remove(own)
            per_point.append(rank_of_type[own, tuple(sorted(rest))])
        ranks[p] = tuple(per_point)
    return perms, ordered, ranks


def root_rows(n: int, kind: str) -> list[Perm]:
    """Candidate rows for point 0, one per point type, in rank order."""
    _check_kind(kind)
    _, ordered, _ = _type_tables(n)
    return [r for r in ordered if kind == "rack" or r[0] == 0]


# ----------------------------------------------------------------------------
# the search


def _conj(a: Perm, b: Perm) -> Perm:
    out = [0] * len(a)
    for i, bi in enumerate(b):
        out[a[i]] = a[bi]
    return tuple(out)


def _search_root(n: int, kind: str, root: Perm, strategy: str,
                 deadline: float | None) -> list[tuple[int, ...]]:
    """All accepted tables (flattened) whose row 0 is ``root``."""
    perms, _, ranks = _type_tables(n)
    quandle = kind == "quandle"
    limit = ranks[root][0]
    cand = [[p for p in perms if ranks[p][z] <= limit and (not quandle or p[z] == z)]
            for z in range(n)]
    rows: list[Perm | None] = [None] * n
    assigned: list[int] = []
    conj_cache: dict[tuple[Perm, Perm], Perm] = {}
    found: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    ticks = 0

    def conj(a: Perm, b: Perm) -> Perm:
        key = (a, b)
        c = conj_cache.get(key)
        if c is None:
            if len(conj_cache) >= CONJ_CACHE_LIMIT:
                conj_cache.clear()
            c = conj_cache[key] = _conj(a, b)
        return c

    def push(z: int, sigma: Perm, trail: list[int]) -> bool:
        queue = [(z, sigma)]
        while queue:
            a, ra = queue.pop()
            cur = rows[a]
            if cur is not None:
                if cur != ra:
                    return False
                continue
            if ranks[ra][a] > limit or (quandle and ra[a] != a):
                return False
            rows[a] = ra
            trail.append(a)
            assigned.append(a)
            for c in assigned:
                rc = rows[c]
                queue.append((ra[c], conj(ra, rc)))
                if c != a:
                    queue.append((rc[a], conj(rc, ra)))
        return True

    def undo(trail: list[int]) -> None:
        for a in trail:
            rows[a] = None
        del assigned[len(assigned) - len(trail):]

    def leaf() -> None:
        flat = tuple(v for r in rows for v in r)
        roots = [x for x in range(n) if ranks[rows[x]][x] == limit]
        best, _ = lex_min_relabeling(rows, roots)
        key = tuple(best)
        if strategy == "orderly":
            if key == flat:
                found.append(flat)
        elif key not in seen:
            seen.add(key)
            found.append(key)

    def descend(z: int) -> None:
        nonlocal ticks
        while z < n and rows[z] is not None:
            z += 1
        if z == n:
            leaf()
            return
        ticks += 1
        if deadline is not None and ticks % 256 == 0 and time.monotonic() > deadline:
            raise BudgetExhausted(f"order {n} {kind} search ran out of time", found)
        for sigma in cand[z]:
            trail: list[int] = []
            if push(z, sigma, trail):
                descend(z + 1)
            undo(trail)

    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExhausted(f"order {n} {kind} search ran out of time", found)
    trail: list[int] = []
    if push(0, root, trail):
        descend(1)
    return found


def _search_task(args) -> list[tuple[int, ...]]:
    return _search_root(*args)


def enumerate_racks(n: int, kind: str = "rack", strategy: str = "auto",
                    parallel: int = 1, budget_secs: float | None = None) -> list[RackTable]:
    """One canonical representative per isomorphism class, sorted.

    ``strategy`` is "dedup" (collect keys at the leaves), "orderly" (accept
    a leaf only when it is its own key) or "auto" (dedup below order 7).
    """
    _check_kind(kind)
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n > MAX_ORDER:
        raise ValueError(f"orders above {MAX_ORDER} are out of scope")
    if strategy == "auto":
        strategy = "orderly" if n >= ORDERLY_FROM else "dedup"
    if strategy not in ("dedup", "orderly"):
        raise ValueError(f"unknown strategy {strategy!r}")
    deadline = None if budget_secs is None else time.monotonic() + budget_secs
    tasks = [(n, kind, r, strategy, deadline) for r in root_rows(n, kind)]
    found: list[tuple[int, ...]] = []
    try:
        if parallel > 1:
            with ProcessPoolExecutor(max_workers=parallel) as pool:
                for part in pool.map(_search_task, tasks):
                    found.extend(part)
        else:
            for i, task in enumerate(tasks, 1):
                found.extend(_search_task(task))
                log.debug("order %d %s: root %d/%d done, %d kept", n, kind, i, len(tasks),
                          len(found))
    except BudgetExhausted as exc:
        partial = _finish(n, found + exc.found)
        raise BudgetExhausted(str(exc), partial) from None
    return _finish(n, found)


def _finish(n: int, flats: list[tuple[int, ...]]) -> list[RackTable]:
    tables = {canonical_form(RackTable([f[i * n:(i + 1) * n] for i in range(n)], check=False))
              for f in flats}
    return sorted(tables)


def naive_enumerate(n: int, kind: str = "rack") -> list[RackTable]:
    """Brute force over every n-tuple of permutations (n <= 4 only)."""
    _check_kind(kind)
    if not 1 <= n <= 4:
        raise ValueError("naive enumeration is limited to orders 1..4")
    perms = list(itertools.permutations(range(n)))
    if kind == "quandle":
        choices = [[p for p in perms if p[x] == x] for x in range(n)]
    else:
        choices = [perms] * n
    classes = set()
    for rows in itertools.product(*choices):
        if not _is_rack(rows):
            continue
        classes.add(canonical_form(RackTable(rows, check=False)))
    return sorted(classes)


def _is_rack(rows) -> bool:
    n = len(rows)
    for x in range(n):
        sx = rows[x]
        for y in range(n):
            sy, sxy = rows[y], rows[sx[y]]
            for z in range(n):
                if sx[sy[z]] != sxy[sx[z]]:
                    return False
    return True


# ----------------------------------------------------------------------------
# census


@dataclass
class CensusRow:
    order: int
    kind: str
    structures: int
    virtual: int
    seconds: float = field(compare=False)
    complete: bool = True

    def to_dict(self) -> dict:
        return asdict(self)


def virtual_count(tables: list[RackTable]) -> int:
    return sum(classify_virtual(R).v for R in tables)


def census(max_order: int, kind: str = "rack", parallel: int = 1,
           budget_secs: float | None = None, allow_stretch: bool = False) -> Iterator[CensusRow]:
    """Yield one row per order 1..max_order as each finishes.

    A row whose budget ran out is yielded with complete=False and the run
    stops there.
    """
    _check_kind(kind)
    if max_order < 1:
        raise ValueError(f"max order must be positive, got {max_order}")
    if max_order >= STRETCH_ORDERS[0] and not allow_stretch:
        raise ValueError(f"orders {STRETCH_ORDERS} need the stretch flag")
    if budget_secs is None:
        budget_secs = budget_from_env()
    for m in range(1, max_order + 1):
        start = time.monotonic()
        try:
            reps = enumerate_racks(m, kind, parallel=parallel, budget_secs=budget_secs)
        except BudgetExhausted as exc:
            yield CensusRow(m, kind, len(exc.found), virtual_count(exc.found),
                            time.monotonic() - start, complete=False)
            return
        total = virtual_count(reps)
        row = CensusRow(m, kind, len(reps), total, time.monotonic() - start)
        log.info("order %d %s: %d structures, %d virtual", m, kind, row.structures, row.virtual)
        yield row


def check_representatives(tables: list[RackTable], kind: str) -> list[str]:
    """Problems with a representative list (empty when all is well)."""
    problems = []
    for R in tables:
        if find_violations(R.rows):
            problems.append(f"{R} violates the rack axioms")
        if kind == "quandle" and not is_quandle(R):
            problems.append(f"{R} is not a quandle")
        if canonical_form(R) != R:
            problems.append(f"{R} is not in canonical form")
    if tables != sorted(set(tables)):
        problems.append("representatives are not sorted and distinct")
    return problems
