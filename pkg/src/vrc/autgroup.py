"""Automorphism groups of racks and the virtual structures they carry.

Two virtual structures f1, f2 on the same rack R give isomorphic virtual
racks exactly when some psi in Aut R satisfies psi f1 = f2 psi, i.e. when
f1 and f2 are conjugate in Aut R.  So the number of virtual racks over R
is the class number of Aut R.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import perm
from .perm import DEFAULT_CAP, FiniteGroup, GroupTooLarge, Perm
from .rack import RackTable, isomorphisms


class NotAnAutomorphism(ValueError):
    pass


@dataclass(frozen=True)
class VirtualRack:
    rack: RackTable
    f: Perm

    def __post_init__(self):
        if not is_virtual_structure(self.rack, self.f):
            raise NotAnAutomorphism(f"{_describe(self.f)} is not an automorphism")

    @property
    def is_quandle(self) -> bool:
        return all(self.rack.rows[x][x] == x for x in range(self.rack.n))


@dataclass(frozen=True)
class VirtualClassification:
    rack: RackTable
    aut_order: int
    class_representatives: tuple[Perm, ...]
    class_sizes: tuple[int, ...]

    @property
    def v(self) -> int:
        return len(self.class_representatives)

    def to_dict(self) -> dict:
        return {
            "rack": self.rack.to_dict(),
            "aut_order": self.aut_order,
            "v": self.v,
            "representatives": [list(r) for r in self.class_representatives],
            "class_sizes": list(self.class_sizes),
        }


def _describe(f: Perm) -> str:
    return perm.format_cycles(f) if perm.is_permutation(f) else str(list(f))


def automorphism_group(R: RackTable, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Aut R, found by profile-pruned backtracking over point images."""
    elems = []
    for f in isomorphisms(R, R):
        elems.append(f)
        if len(elems) > cap:
            raise GroupTooLarge(f"Aut R exceeds the cap of {cap} elements")
    return FiniteGroup.from_elements(elems, cap)


def is_virtual_structure(R: RackTable, f: Perm) -> bool:
    """Whether f s_x f^-1 = s_f(x) for all x."""
    if len(f) != R.n:
        raise ValueError(f"map of degree {len(f)} on a rack of order {R.n}")
    if not perm.is_permutation(f):
        return False
    rows = R.rows
    return all(perm.conjugate(f, rows[x]) == rows[f[x]] for x in range(R.n))


def inner_virtual(R: RackTable, x: int) -> VirtualRack:
    if not 0 <= x < R.n:
        raise IndexError(f"point {x} outside a rack of order {R.n}")
    return VirtualRack(R, R.rows[x])


def virtual_isomorphic(R: RackTable, f1: Perm, f2: Perm,
                       aut: FiniteGroup | None = None) -> Perm | None:
    """Some psi in Aut R with psi f1 psi^-1 = f2, or None.

    Such a psi is at once a rack automorphism and an isomorphism of the
    virtual racks (R, f1) -> (R, f2).
    """
    for f in (f1, f2):
        if not is_virtual_structure(R, f):
            raise NotAnAutomorphism(f"{_describe(f)} is not an automorphism of R")
    f1, f2 = tuple(f1), tuple(f2)
    if f1 == f2:
        return perm.identity(R.n)
    if perm.cycle_type(f1) != perm.cycle_type(f2):
        return None
    if aut is None:
        aut = automorphism_group(R)
    for psi in aut:
        if perm.conjugate(psi, f1) == f2:
            return psi
    return None


def classify_virtual(R: RackTable, cap: int = DEFAULT_CAP) -> VirtualClassification:
    aut = automorphism_group(R, cap)
    classes = perm.conjugacy_classes(aut)
    k = perm.class_number(aut)
    if k != len(classes):
        raise AssertionError("class enumeration is not deterministic")
    return VirtualClassification(
        rack=R,
        aut_order=len(aut),
        class_representatives=tuple(c[0] for c in classes),
        class_sizes=tuple(len(c) for c in classes),
    )


def v(R: RackTable) -> int:
    return classify_virtual(R).v
