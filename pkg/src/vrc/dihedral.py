"""Virtual structures on dihedral quandles via the holomorph of Z/n.

Aut R_n is the affine group {x -> a + u x : u a unit mod n}.  An affine
map is stored as the pair (a, u); composing maps gives the holomorph law
(x, y)(a, u) = (x + y a, y u).  Conjugating (a, u) by (x, y) yields
(y a + (1 - u) x, u), so the classes over a fixed u are orbits of the
units on Z/d_u with d_u = gcd(n, 1 - u).  Counting those orbits gives
three routes to v(R_n), which this module computes and compares.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import perm
from .numtheory import divisors, tau, totient, units
from .perm import DEFAULT_CAP, FiniteGroup, GroupTooLarge, Perm


@dataclass(frozen=True, order=True)
class AffineMap:
    """T(a, u): x -> a + u x on Z/n, residues normalized to 0..n-1."""

    n: int
    a: int
    u: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        object.__setattr__(self, "a", self.a % self.n)
        object.__setattr__(self, "u", self.u % self.n)
        if gcd(self.u, self.n) != 1:
            raise ValueError(f"{self.u} is not a unit mod {self.n}")

    def __call__(self, x: int) -> int:
        return affine_apply(self, x)

    def __str__(self) -> str:
        return f"T({self.a},{self.u}) mod {self.n}"

    @property
    def d(self) -> int:
        """gcd(n, 1 - u); equals n when u = 1."""
        return gcd(self.n, (1 - self.u) % self.n)

    @property
    def image_subgroup(self) -> list[int]:
        """(1 - u) Z/n, the multiples of d_u."""
        return list(range(0, self.n, self.d))

    def as_perm(self) -> Perm:
        return tuple((self.a + self.u * x) % self.n for x in range(self.n))


def affine_apply(T: AffineMap, x: int) -> int:
    if not 0 <= x < T.n:
        raise ValueError(f"{x} is not a residue mod {T.n}")
    return (T.a + T.u * x) % T.n


def _same_modulus(L: AffineMap, R: AffineMap) -> None:
    if L.n != R.n:
        raise ValueError(f"modulus mismatch: {L.n} vs {R.n}")


def holomorph_multiply(L: AffineMap, R: AffineMap) -> AffineMap:
    """L o R: (x, y)(a, u) = (x + y a, y u)."""
    _same_modulus(L, R)
    return AffineMap(L.n, L.a + L.u * R.a, L.u * R.u)


def holomorph_inverse(T: AffineMap) -> AffineMap:
    w = pow(T.u, -1, T.n) if T.n > 1 else 0
    return AffineMap(T.n, -w * T.a, w)


def affine_maps(n: int) -> list[AffineMap]:
    return [AffineMap(n, a, u) for u in units(n) for a in range(n)]


def holomorph_group(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """All n * phi(n) affine maps of Z/n as permutations of 0..n-1."""
    size = n * totient(n)
    if size > cap:
        raise GroupTooLarge(f"holomorph of Z/{n} has {size} elements (cap {cap})")
    elems = [T.as_perm() for T in affine_maps(n)]
    gens = [AffineMap(n, 1, 1).as_perm()] + [AffineMap(n, 0, u).as_perm() for u in unit_generators(n)]
    return FiniteGroup(elems, gens)


def unit_generators(n: int) -> list[int]:
    """A small generating set of the unit group mod n, chosen greedily."""
    span = {1 % n}
    gens = []
    for u in units(n):
        if u in span:
            continue
        gens.append(u)
        frontier = list(span)
        while frontier:
            frontier = [(x * g) % n for x in frontier for g in gens]
            frontier = [x for x in set(frontier) if x not in span]
            span.update(frontier)
    return gens


def unit_orbit(a: int, d: int, n: int) -> set[int]:
    """{y a mod d : y a unit mod n}."""
    return {(y * a) % d for y in units(n)}


def unit_orbit_mod_d(a: int, d: int) -> set[int]:
    """{y a mod d : y a unit mod d}; agrees with unit_orbit because units mod n surject onto units mod d."""
    return {(y * a) % d for y in units(d)}


def dihedral_virtual_isomorphic(n: int, first: AffineMap, second: AffineMap) -> bool:
    """Whether (R_n, first) and (R_n, second) are isomorphic virtual quandles.

    True iff the unit parts agree and second.a lies in the unit orbit of
    first.a inside Z/n / (1 - u)Z/n = Z/d_u.
    """
    _same_modulus(first, second)
    if first.n != n:
        raise ValueError(f"maps are mod {first.n}, expected mod {n}")
    if first.u != second.u:
        return False
    d = first.d
    orbit = unit_orbit(first.a % d, d, n)
    if orbit != unit_orbit_mod_d(first.a % d, d):
        raise AssertionError(f"unit orbits mod {n} and mod {d} disagree")
    return second.a % d in orbit


def v_dihedral_closed(n: int) -> int:
    """sum over d | n of phi(n) / phi(d), in exact integer arithmetic."""
    phi_n = totient(n)
    total = 0
    for d in divisors(n):
        q, r = divmod(phi_n, totient(d))
        if r:
            raise ArithmeticError(f"phi({d}) does not divide phi({n})")
        total += q
    return total


def v_dihedral_tau_sum(n: int) -> int:
    """sum over units u mod n of tau(gcd(n, 1 - u))."""
    return sum(tau(gcd(n, (1 - u) % n)) for u in units(n))


def v_dihedral_brute(n: int, cap: int = DEFAULT_CAP) -> int:
    """Class number of the holomorph, by explicit conjugacy orbits."""
    return perm.class_number(holomorph_group(n, cap))


def kernel_size(n: int, d: int) -> int:
    """|{u unit mod n : u = 1 mod d}|, counted directly."""
    if n % d:
        raise ValueError(f"{d} does not divide {n}")
    return sum(1 for u in units(n) if (u - 1) % d == 0)
