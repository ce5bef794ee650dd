"""The fourteen transitive permutation groups of degree at most five.

Each group is generated from explicit permutations and its element cycle
types are found by enumerating the closure, so the tables below are
computed rather than typed in.
"""

from __future__ import annotations

import enum
from functools import cached_property


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # (p * q)(i) = p(q(i))
    return tuple(p[i] for i in q)


def closure(gens: list[tuple[int, ...]], n: int) -> frozenset[tuple[int, ...]]:
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                k = _compose(h, g)
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    return frozenset(seen)


def cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    """Cycle lengths of ``perm`` sorted in decreasing order."""
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def _cyc(n: int, *cycles: tuple[int, ...]) -> tuple[int, ...]:
    p = list(range(n))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            p[a] = b
    return tuple(p)


class GaloisGroup(enum.Enum):
    C1 = ("C1", 1, "trivial group")
    S2 = ("S2", 2, "symmetric group on 2 letters")
    A3 = ("A3", 3, "alternating group on 3 letters, cyclic of order 3")
    S3 = ("S3", 3, "symmetric group on 3 letters")
    V = ("V", 4, "Klein four-group")
    C4 = ("C4", 4, "cyclic of order 4")
    D8 = ("D8", 4, "dihedral of order 8")
    A4 = ("A4", 4, "alternating group on 4 letters")
    S4 = ("S4", 4, "symmetric group on 4 letters")
    C5 = ("C5", 5, "cyclic of order 5")
    D10 = ("D10", 5, "dihedral of order 10")
    F20 = ("F20", 5, "Frobenius group of order 20")
    A5 = ("A5", 5, "alternating group on 5 letters")
    S5 = ("S5", 5, "symmetric group on 5 letters")

    def __init__(self, label: str, degree: int, description: str):
        self.label = label
        self.degree = degree
        self.description = description

    def __str__(self) -> str:
        return self.label

    @cached_property
    def elements(self) -> frozenset[tuple[int, ...]]:
        return closure(_GENERATORS[self.label], self.degree)

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def cycle_types(self) -> frozenset[tuple[int, ...]]:
        return frozenset(cycle_type(g) for g in self.elements)

    @property
    def is_even(self) -> bool:
        """True when every element is an even permutation."""
        return all(sum(c - 1 for c in ct) % 2 == 0 for ct in self.cycle_types)

    def is_transitive(self) -> bool:
        orbit = {g[0] for g in self.elements}
        return len(orbit) == self.degree

    @classmethod
    def from_label(cls, label: str) -> GaloisGroup:
        for g in cls:
            if g.label == label:
                return g
        raise KeyError(label)


_GENERATORS: dict[str, list[tuple[int, ...]]] = {
    "C1": [(0,)],
    "S2": [_cyc(2, (0, 1))],
    "A3": [_cyc(3, (0, 1, 2))],
    "S3": [_cyc(3, (0, 1, 2)), _cyc(3, (0, 1))],
    "V": [_cyc(4, (0, 1), (2, 3)), _cyc(4, (0, 2), (1, 3))],
    "C4": [_cyc(4, (0, 1, 2, 3))],
    "D8": [_cyc(4, (0, 1, 2, 3)), _cyc(4, (0, 2))],
    "A4": [_cyc(4, (0, 1, 2)), _cyc(4, (0, 1), (2, 3))],
    "S4": [_cyc(4, (0, 1, 2, 3)), _cyc(4, (0, 1))],
    "C5": [_cyc(5, (0, 1, 2, 3, 4))],
    "D10": [_cyc(5, (0, 1, 2, 3, 4)), _cyc(5, (1, 4), (2, 3))],
    "F20": [_cyc(5, (0, 1, 2, 3, 4)), _cyc(5, (1, 2, 4, 3))],
    "A5": [_cyc(5, (0, 1, 2)), _cyc(5, (0, 1, 2, 3, 4))],
    "S5": [_cyc(5, (0, 1, 2, 3, 4)), _cyc(5, (0, 1))],
}

# Groups contained in the alternating group: exactly those with square discriminant.
EVEN_GROUPS = frozenset({GaloisGroup.A3, GaloisGroup.V, GaloisGroup.A4,
                         GaloisGroup.C5, GaloisGroup.D10, GaloisGroup.A5})
