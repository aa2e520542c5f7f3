"""Finite racks stored by their symmetries.

A rack of order n is kept as n rows, row x being the permutation ``s_x``.
In binary-operation language ``s_y(x) = x |> y``; every file format and
table in this package uses the row form.  The rack axiom reads
``s_x s_y = s_{s_x(y)} s_x`` with products applied right factor first.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterator, Sequence

from . import perm
from .perm import Perm, cycle_length_at, cycle_type, is_permutation


@dataclass(frozen=True)
class Violation:
    x: int
    y: int | None
    kind: str  # "not-bijective" or "self-distributivity"


class RackAxiomError(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        head = ", ".join(f"({v.x}, {v.y}, {v.kind})" for v in violations[:5])
        more = "" if len(violations) <= 5 else f" and {len(violations) - 5} more"
        super().__init__(f"not a rack: {head}{more}")


class RackTable:
    """An immutable, validated rack table.

    Ordering and hashing go through the flattened rows, so sorting a list
    of tables sorts them lexicographically.
    """

    __slots__ = ("n", "rows", "_flat")

    def __init__(self, rows: Sequence[Sequence[int]], check: bool = True):
        self.rows: tuple[Perm, ...] = tuple(tuple(int(v) for v in r) for r in rows)
        self.n = len(self.rows)
        if check:
            violations = find_violations(self.rows)
            if violations:
                raise RackAxiomError(violations)
        self._flat = tuple(v for r in self.rows for v in r)

    def s(self, x: int) -> Perm:
        return self.rows[x]

    @property
    def flat(self) -> tuple[int, ...]:
        return self._flat

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RackTable) and self._flat == other._flat and self.n == other.n

    def __lt__(self, other: RackTable) -> bool:
        return (self.n, self._flat) < (other.n, other._flat)

    def __hash__(self) -> int:
        return hash(self._flat)

    def __repr__(self) -> str:
        return f"RackTable({[list(r) for r in self.rows]})"

    def to_text(self) -> str:
        lines = [f"rack {self.n}"] + [" ".join(map(str, r)) for r in self.rows]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"n": self.n, "s": [list(r) for r in self.rows]}


def find_violations(rows: Sequence[Sequence[int]]) -> list[Violation]:
    """Every failure of bijectivity or self-distributivity, in (x, y) order."""
    n = len(rows)
    if n == 0:
        raise ValueError("a rack needs at least one point")
    for r in rows:
        if len(r) != n:
            raise ValueError(f"row of length {len(r)} in a table of order {n}")
        if any(not 0 <= v < n for v in r):
            raise ValueError(f"row {list(r)} has entries outside 0..{n - 1}")
    rows = [tuple(r) for r in rows]
    out = [Violation(x, None, "not-bijective") for x, r in enumerate(rows)
           if not is_permutation(r)]
    for x in range(n):
        sx = rows[x]
        for y in range(n):
            if perm.compose(sx, rows[y]) != perm.compose(rows[sx[y]], sx):
                out.append(Violation(x, y, "self-distributivity"))
    return out


def validate_rack(rows: Sequence[Sequence[int]]) -> RackTable:
    """Return the validated table, or raise RackAxiomError listing all violations."""
    return RackTable(rows)


def is_quandle(R: RackTable) -> bool:
    return all(R.rows[x][x] == x for x in range(R.n))


def relabel(R: RackTable, pi: Perm) -> RackTable:
    """The isomorphic rack whose point pi(x) carries the row pi s_x pi^-1."""
    rows: list[Perm] = [()] * R.n
    for x, sx in enumerate(R.rows):
        rows[pi[x]] = perm.conjugate(pi, sx)
    return RackTable(rows, check=False)


# ----------------------------------------------------------------------------
# constructors


def trivial_quandle(n: int) -> RackTable:
    return permutation_rack(n, perm.identity(n))


def permutation_rack(n: int, sigma: Sequence[int]) -> RackTable:
    sigma = perm.as_perm(sigma)
    if len(sigma) != n:
        raise ValueError(f"permutation of degree {len(sigma)} for a rack of order {n}")
    return RackTable([sigma] * n)


def takasaki_kei(cyclic_factors: Sequence[int]) -> RackTable:
    """T(G) for G a direct sum of cyclic groups, s_g the reflection h -> 2g - h.

    In binary form this is x |> y = 2y - x.  Elements are encoded in mixed radix with the last factor varying fastest.
    """
    factors = [int(f) for f in cyclic_factors]
    if not factors or any(f < 1 for f in factors):
        raise ValueError(f"cyclic factors must be positive, got {factors}")
    coords = list(cartesian(*(range(f) for f in factors)))
    index = {c: i for i, c in enumerate(coords)}
    rows = []
    for g in coords:
        rows.append(tuple(index[tuple((2 * gi - hi) % f for gi, hi, f in zip(g, h, factors))]
                          for h in coords))
    return RackTable(rows)


def dihedral_quandle(n: int) -> RackTable:
    return takasaki_kei([n])


@dataclass(frozen=True)
class GroupTable:
    """A finite group as a multiplication table on indices 0..n-1."""

    product: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    identity: int
    labels: tuple | None = None

    def __post_init__(self):
        n = len(self.product)
        if any(len(r) != n for r in self.product):
            raise ValueError("product table is not square")
        e, mul = self.identity, self.product
        if any(mul[e][x] != x or mul[x][e] != x for x in range(n)):
            raise ValueError("identity law fails")
        if any(mul[x][self.inverse[x]] != e for x in range(n)):
            raise ValueError("inverse law fails")
        if any(not is_permutation(r) for r in mul):
            raise ValueError("product table rows are not bijective")
        # Light's test: associativity need only be checked against a generating set.
        for g in table_generators(mul, e):
            for x in range(n):
                xg = mul[x][g]
                for y in range(n):
                    if mul[xg][y] != mul[x][mul[g][y]]:
                        raise ValueError(f"associativity fails at ({x}, {g}, {y})")

    @property
    def n(self) -> int:
        return len(self.product)

    def mul(self, x: int, y: int) -> int:
        return self.product[x][y]

    def center(self) -> list[int]:
        mul = self.product
        return [z for z in range(self.n) if all(mul[z][x] == mul[x][z] for x in range(self.n))]

    def is_abelian(self) -> bool:
        return len(self.center()) == self.n

    @classmethod
    def from_permutations(cls, elements: Sequence[Perm]) -> GroupTable:
        elems = sorted(set(tuple(e) for e in elements))
        index = {g: i for i, g in enumerate(elems)}
        try:
            product = tuple(tuple(index[perm.compose(a, b)] for b in elems) for a in elems)
            inv = tuple(index[perm.inverse(a)] for a in elems)
        except KeyError:
            raise ValueError("permutations are not closed under composition") from None
        return cls(product, inv, index[perm.identity(len(elems[0]))], tuple(elems))

    @classmethod
    def from_group(cls, G: perm.FiniteGroup) -> GroupTable:
        return cls.from_permutations(G.elements)


def table_generators(mul, e: int) -> list[int]:
    n = len(mul)
    span = {e}
    gens: list[int] = []
    for g in range(n):
        if g in span:
            continue
        gens.append(g)
        frontier = list(span)
        while frontier:
            nxt = []
            for x in frontier:
                for h in gens:
                    y = mul[x][h]
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
    return gens


def cyclic_group_table(n: int) -> GroupTable:
    product = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return GroupTable(product, tuple((-a) % n for a in range(n)), 0)


def conjugation_quandle(G: GroupTable) -> RackTable:
    mul, inv = G.product, G.inverse
    rows = [tuple(mul[mul[x][y]][inv[x]] for y in range(G.n)) for x in range(G.n)]
    return RackTable(rows)


# ----------------------------------------------------------------------------
# homomorphisms, isomorphisms, canonical form


def is_rack_homomorphism(R1: RackTable, R2: RackTable, psi: Sequence[int]) -> bool:
    """psi s_x = t_psi(x) psi for every x."""
    if len(psi) != R1.n:
        raise ValueError(f"map has {len(psi)} entries, rack has {R1.n} points")
    if any(not 0 <= v < R2.n for v in psi):
        raise ValueError("map leaves the target rack")
    t = R2.rows
    for x, sx in enumerate(R1.rows):
        tx = t[psi[x]]
        for y in range(R1.n):
            if psi[sx[y]] != tx[psi[y]]:
                return False
    return True


def row_profile(R: RackTable, x: int) -> tuple:
    """Isomorphism-invariant label of a point: cycle type of s_x and x's cycle length."""
    sx = R.rows[x]
    return (cycle_type(sx), cycle_length_at(sx, x))


def isomorphisms(R1: RackTable, R2: RackTable) -> Iterator[Perm]:
    """Yield every rack isomorphism R1 -> R2.

    Points of R1 are assigned rarest row profile first; each new assignment
    is propagated through psi(s_x(y)) = t_psi(x)(psi(y)), so a partial map is
    dropped on its first contradiction.
    """
    n = R1.n
    if n != R2.n:
        return
    prof1 = [row_profile(R1, x) for x in range(n)]
    prof2 = [row_profile(R2, x) for x in range(n)]
    if Counter(prof1) != Counter(prof2):
        return
    freq = Counter(prof1)
    order = sorted(range(n), key=lambda x: (freq[prof1[x]], x))
    s, t = R1.rows, R2.rows
    psi = [-1] * n
    used = [False] * n
    assigned: list[int] = []

    def assign(x: int, y: int, trail: list[int]) -> bool:
        queue = [(x, y)]
        while queue:
            a, b = queue.pop()
            if psi[a] != -1:
                if psi[a] != b:
                    return False
                continue
            if used[b] or prof1[a] != prof2[b]:
                return False
            psi[a] = b
            used[b] = True
            trail.append(a)
            assigned.append(a)
            sa, tb = s[a], t[b]
            for c in list(assigned):
                d = psi[c]
                queue.append((sa[c], tb[d]))
                queue.append((s[c][a], t[d][b]))
        return True

    def undo(trail: list[int]) -> None:
        for a in trail:
            used[psi[a]] = False
            psi[a] = -1
        del assigned[len(assigned) - len(trail):]

    def search(k: int) -> Iterator[Perm]:
        while k < n and psi[order[k]] != -1:
            k += 1
        if k == n:
            yield tuple(psi)
            return
        x = order[k]
        for y in range(n):
            if used[y] or prof2[y] != prof1[x]:
                continue
            trail: list[int] = []
            if assign(x, y, trail):
                yield from search(k + 1)
            undo(trail)

    yield from search(0)


def are_isomorphic(R1: RackTable, R2: RackTable) -> Perm | None:
    """A witnessing isomorphism R1 -> R2, or None."""
    return next(isomorphisms(R1, R2), None)


def lex_min_relabeling(rows: Sequence[Perm], roots: Sequence[int] | None = None
                       ) -> tuple[list[int], list[int]]:
    """Branch-and-bound search for the lexicographically least relabeled table.

    Only relabelings sending one of ``roots`` (default: every point) to 0 are
    considered.  Returns the flattened table and the relabeling old -> new.

    All labels get fixed while filling row 0: a value whose point is not yet
    labeled takes the next fresh label (anything else is lexicographically
    worse), and the choice of which point becomes the next label is the only
    real branching.  Rows 1..n-1 are then just compared against the incumbent.
    """
    n = len(rows)
    if roots is None:
        roots = range(n)
    best: list[int] | None = None
    best_pi: list[int] | None = None
    cur = [0] * (n * n)
    sigma = [-1] * n  # new -> old
    pi = [-1] * n  # old -> new

    def tail(better: bool) -> None:
        nonlocal best, best_pi
        pos = n
        for i in range(1, n):
            row = rows[sigma[i]]
            for j in range(n):
                v = pi[row[sigma[j]]]
                if not better:
                    b = best[pos]
                    if v > b:
                        return
                    if v < b:
                        better = True
                cur[pos] = v
                pos += 1
        if better:
            best = cur[:]
            best_pi = pi[:]

    def walk(j: int, k: int, better: bool) -> None:
        row = rows[sigma[0]]
        fresh: list[int] = []
        while j < n:
            if j == k:
                for u in range(n):
                    if pi[u] == -1:
                        sigma[j] = u
                        pi[u] = j
                        walk(j, k + 1, better)
                        pi[u] = -1
                        sigma[j] = -1
                        better = False
                break
            v = row[sigma[j]]
            label = pi[v]
            if label == -1:
                label = k
                pi[v] = k
                sigma[k] = v
                fresh.append(v)
                k += 1
            cur[j] = label
            if not better:
                b = best[j]
                if label > b:
                    break
                if label < b:
                    better = True
            j += 1
        else:
            tail(better)
        for v in fresh:
            sigma[pi[v]] = -1
            pi[v] = -1

    for x in roots:
        sigma[0] = x
        pi[x] = 0
        walk(0, 1, best is None)
        pi[x] = -1
        sigma[0] = -1
    assert best is not None and best_pi is not None
    return best, best_pi


def canonical_labeling(R: RackTable) -> Perm:
    return tuple(lex_min_relabeling(R.rows)[1])


def canonical_form(R: RackTable) -> RackTable:
    """The lexicographically least table among all n! relabelings of R."""
    flat, _ = lex_min_relabeling(R.rows)
    n = R.n
    return RackTable([flat[i * n:(i + 1) * n] for i in range(n)], check=False)


# ----------------------------------------------------------------------------
# file formats


class RackFormatError(ValueError):
    pass


def parse_rack_text(text: str) -> list[list[int]]:
    """Parse the ``rack <n>`` text format into raw rows (not yet validated)."""
    lines = text.splitlines()
    if not lines:
        raise RackFormatError("empty rack file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "rack" or not head[1].isdigit() or int(head[1]) < 1:
        raise RackFormatError(f"bad header line {lines[0]!r}")
    n = int(head[1])
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != n:
        raise RackFormatError(f"expected {n} rows, found {len(body)}")
    rows = []
    for ln in body:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise RackFormatError(f"non-integer entry in {ln!r}") from None
        if len(row) != n or any(not 0 <= v < n for v in row):
            raise RackFormatError(f"bad row {ln!r} for order {n}")
        rows.append(row)
    return rows


def parse_rack_json(text: str) -> list[list[int]]:
    try:
        data = json.loads(text)
        n, rows = int(data["n"]), [[int(v) for v in r] for r in data["s"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise RackFormatError(f"bad rack JSON: {exc}") from None
    if n < 1 or len(rows) != n or any(len(r) != n or any(not 0 <= v < n for v in r) for r in rows):
        raise RackFormatError("rack JSON has inconsistent dimensions")
    return rows


def load_rows(path: str) -> list[list[int]]:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return parse_rack_json(text)
    return parse_rack_text(text)


def load_rack(path: str) -> RackTable:
    return RackTable(load_rows(path))


def dump_rack(R: RackTable, path: str) -> None:
    with open(path, "w") as fh:
        if path.endswith(".json"):
            json.dump(R.to_dict(), fh)
            fh.write("\n")
        else:
            fh.write(R.to_text())
