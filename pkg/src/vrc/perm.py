"""Permutations of {0, ..., n-1} and finite permutation groups.

A permutation is a plain tuple of images: ``p[j]`` is the image of ``j``.
Products follow functional notation, so ``compose(p, q)`` applies ``q``
first and then ``p``.  The rack axioms are sensitive to this, so every
module goes through :func:`compose` / :func:`conjugate` rather than
rolling its own.

Groups are stored as full sorted element lists.  Everything this package
touches has at most 8! elements, which keeps conjugacy orbits trivial to
compute and easy to audit.
"""

from __future__ import annotations

import re
from collections import Counter
from math import factorial
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]

DEFAULT_CAP = 10**6


class GroupTooLarge(RuntimeError):
    """Raised when a group would exceed the configured element cap."""


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_permutation(images: Sequence[int]) -> bool:
    n = len(images)
    return sorted(images) == list(range(n))


def as_perm(images: Iterable[int]) -> Perm:
    p = tuple(int(i) for i in images)
    if not is_permutation(p):
        raise ValueError(f"{list(p)} is not a permutation of 0..{len(p) - 1}")
    return p


def compose(p: Perm, q: Perm) -> Perm:
    """The product pq, i.e. x -> p(q(x))."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(map(p.__getitem__, q))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def conjugate(g: Perm, h: Perm) -> Perm:
    """g h g^-1, computed pointwise: it sends g(i) to g(h(i))."""
    out = [0] * len(g)
    for i, hi in enumerate(h):
        out[g[i]] = g[hi]
    return tuple(out)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """All cycles of p (fixed points included), each starting at its least point."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            if seen[j]:
                raise ValueError(f"{list(p)} is not a permutation")
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle lengths in descending order, fixed points counted as 1s."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def cycle_length_at(p: Perm, x: int) -> int:
    length, j = 1, p[x]
    while j != x:
        length += 1
        j = p[j]
    return length


def order_of(p: Perm) -> int:
    from math import lcm

    return lcm(*cycle_type(p)) if p else 1


def format_cycles(p: Perm) -> str:
    """Cycle notation with 0-indexed points; the identity prints as ``()``."""
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) or "()"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse ``"(0 1)(2 3)"`` into an image tuple of the given degree."""
    text = text.strip()
    if _CYCLE_RE.sub("", text).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(degree))
    used: set[int] = set()
    for body in _CYCLE_RE.findall(text):
        pts = [int(tok) for tok in body.replace(",", " ").split()]
        for x in pts:
            if not 0 <= x < degree or x in used:
                raise ValueError(f"bad point {x} in {text!r}")
            used.add(x)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
    return tuple(images)


def centralizer_order_in_sym(ctype: Sequence[int]) -> int:
    """prod over cycle lengths i of i^m_i * m_i! (m_i = multiplicity of i)."""
    total = 1
    for length, mult in Counter(ctype).items():
        total *= length**mult * factorial(mult)
    return total


def _bfs_closure(start: Iterable[Perm], gens: Sequence[Perm], cap: int) -> set[Perm]:
    elements = set(start)
    frontier = list(elements)
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = tuple(map(e.__getitem__, g))
                if h not in elements:
                    elements.add(h)
                    nxt.append(h)
        if len(elements) > cap:
            raise GroupTooLarge(f"group exceeds the cap of {cap} elements")
        frontier = nxt
    return elements


class FiniteGroup:
    """A permutation group held as its full, lexicographically sorted element list.

    Construction verifies that the generators lie in the element list and
    that they generate exactly that list, which certifies closure.
    """

    __slots__ = ("elements", "generators", "degree", "_index")

    def __init__(self, elements: Iterable[Perm], generators: Sequence[Perm],
                 check: bool = True):
        self.elements: tuple[Perm, ...] = tuple(sorted(elements))
        if not self.elements:
            raise ValueError("a group needs at least the identity")
        self.degree = len(self.elements[0])
        self._index = {g: i for i, g in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate group elements")
        self.generators: tuple[Perm, ...] = tuple(generators)
        if check:
            self._validate()

    def _validate(self) -> None:
        n = self.degree
        if any(len(g) != n for g in self.elements):
            raise ValueError("elements of unequal degree")
        if identity(n) not in self._index:
            raise ValueError("identity missing")
        if any(g not in self._index for g in self.generators):
            raise ValueError("generator outside the element list")
        generated = _bfs_closure([identity(n)], self.generators, len(self.elements))
        if len(generated) != len(self.elements):
            raise ValueError("element list is not the group generated by the generators")

    @classmethod
    def from_elements(cls, elements: Iterable[Perm], cap: int = DEFAULT_CAP) -> FiniteGroup:
        """Wrap a set already known to be a group, picking a small generating set."""
        elems = sorted(set(elements))
        if len(elems) > cap:
            raise GroupTooLarge(f"group exceeds the cap of {cap} elements")
        n = len(elems[0])
        gens: list[Perm] = []
        span = {identity(n)}
        for g in elems:
            if g not in span:
                gens.append(g)
                span = _bfs_closure(span, gens, cap)
        if len(span) != len(elems):
            raise ValueError("elements are not closed under composition")
        return cls(elems, gens, check=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={len(self)}, degree={self.degree})"

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, g: Perm) -> int:
        return self._index[g]

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(commutes(a, b) for a in gens for b in gens)


def closure(generators: Sequence[Perm], cap: int = DEFAULT_CAP) -> FiniteGroup:
    """The subgroup generated by ``generators``."""
    gens = [tuple(g) for g in generators]
    if not gens:
        raise ValueError("closure needs at least one generator")
    n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise ValueError("generators of unequal degree")
    elements = _bfs_closure([identity(n)], gens, cap)
    return FiniteGroup(elements, gens, check=False)


def symmetric_group(n: int) -> FiniteGroup:
    if n <= 2:
        return closure([identity(n)] + ([(1, 0)] if n == 2 else []))
    transposition = (1, 0) + tuple(range(2, n))
    long_cycle = tuple(range(1, n)) + (0,)
    return closure([transposition, long_cycle])


def alternating_group(n: int) -> FiniteGroup:
    gens = [identity(n)]
    for k in range(2, n):
        three = list(range(n))
        three[0], three[1], three[k] = 1, k, 0
        gens.append(tuple(three))
    return closure(gens)


def conjugacy_classes(G: FiniteGroup) -> list[list[Perm]]:
    """Orbits of G on itself under conjugation, each sorted, ordered by least member."""
    gens = G.generators or (identity(G.degree),)
    seen: set[Perm] = set()
    classes = []
    for g in G.elements:
        if g in seen:
            continue
        orbit = {g}
        frontier = [g]
        while frontier:
            nxt = []
            for x in frontier:
                for h in gens:
                    y = conjugate(h, x)
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        seen |= orbit
        classes.append(sorted(orbit))
    return classes


def commutes(h: Perm, g: Perm) -> bool:
    for x, gx in enumerate(g):
        if h[gx] != g[h[x]]:
            return False
    return True


def centralizer(G: FiniteGroup, g: Perm) -> list[Perm]:
    """Elements of G commuting with g, by direct test."""
    return [h for h in G.elements if commutes(h, g)]


def class_number(G: FiniteGroup) -> int:
    """k(G), cross-checked class by class against directly counted centralizers.

    Each class must satisfy |class| * |C_G(rep)| = |G|; summing those gives
    the Burnside average, which must reproduce the class count.
    """
    classes = conjugacy_classes(G)
    total = 0
    for cls in classes:
        c = len(centralizer(G, cls[0]))
        if c * len(cls) != len(G):
            raise AssertionError(f"orbit-stabilizer failed at {cls[0]}")
        total += c * len(cls)
    if total != len(classes) * len(G):
        raise AssertionError("class count disagrees with the Burnside average")
    return len(classes)


def burnside_class_number(G: FiniteGroup) -> int:
    """(1/|G|) * sum over all g of |C_G(g)|, counted pair by pair (quadratic)."""
    total = sum(len(centralizer(G, g)) for g in G.elements)
    k, rem = divmod(total, len(G))
    if rem:
        raise AssertionError("Burnside sum not divisible by |G|")
    return k


def centralizer_in_sym(sigma: Perm, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """All f in Sym(n) with f sigma = sigma f, by backtracking over cycle images.

    Fixing f on one point of a cycle determines it on the whole cycle, and
    that cycle must land on an unused cycle of the same length.
    """
    sigma = tuple(sigma)
    n = len(sigma)
    size = centralizer_order_in_sym(cycle_type(sigma))
    if size > cap:
        raise GroupTooLarge(f"centralizer has {size} elements (cap {cap})")
    cyc = cycles(sigma)
    length_of = {x: len(c) for c in cyc for x in c}
    found: list[Perm] = []
    f = [-1] * n

    def extend(i: int, used: set[int]) -> None:
        if i == len(cyc):
            found.append(tuple(f))
            return
        c = cyc[i]
        for y in range(n):
            if y in used or length_of[y] != len(c):
                continue
            img = y
            block = []
            for x in c:
                f[x] = img
                block.append(img)
                img = sigma[img]
            extend(i + 1, used | set(block))
        for x in c:
            f[x] = -1

    extend(0, set())
    return FiniteGroup.from_elements(found, cap)


def center(G: FiniteGroup) -> FiniteGroup:
    gens = G.generators
    elems = [z for z in G.elements if all(commutes(z, h) for h in gens)]
    return FiniteGroup.from_elements(elems)
