"""Hexagons: orbits of fundamental pairs under the six-element symmetry.

A fundamental pair (u, v) stands for the triple (u, v, 1) up to diagonal
translation.  Permuting the triple's three coordinates and renormalizing
yields at most six images of (u, v):

    (u, v), (v, u), (u v^-1, v^-1), (v^-1, u v^-1), (v u^-1, u^-1), (u^-1, v u^-1)

The orbits ("hexagons") have size 1..6 and are indexed by their
lexicographically least member pair, in ascending order of that pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import CapacityError
from .groups import AbelianGroup, GroupElement

TABLE_ORDER_CAP = 64


def pair_images(group: AbelianGroup, u: int, v: int) -> tuple[tuple[int, int], ...]:
    """The six images of the pair with element indices (u, v); may repeat."""
    m = group.mul_array
    i = group.inv_array
    iu, iv = int(i[u]), int(i[v])
    uv = int(m[u, iv])  # u / v
    vu = int(m[v, iu])  # v / u
    return ((u, v), (v, u), (uv, iv), (iv, uv), (vu, iu), (iu, vu))


def orbit(group: AbelianGroup, u: GroupElement, v: GroupElement) -> tuple[tuple[GroupElement, GroupElement], ...]:
    """The hexagon through (u, v) as element pairs, sorted by index."""
    if u.group != group or v.group != group:
        raise ValueError("pair does not live in the given group")
    pairs = sorted(set(pair_images(group, u.index, v.index)))
    return tuple((group.element_by_index(a), group.element_by_index(b)) for a, b in pairs)


def hexagon_count_formula(group: AbelianGroup) -> int:
    """#hexagons = (n^2 + 3n + 2 #G[3]) / 6, without building the table."""
    n = group.order
    t3 = group.torsion_count(3)
    total = n * n + 3 * n + 2 * t3
    if total % 6 != 0:
        raise AssertionError(f"hexagon count formula is not integral for {group.literal}")
    return total // 6


@dataclass(frozen=True)
class HexagonTable:
    """Complete hexagon index for one group."""

    group: AbelianGroup
    reps: tuple[tuple[int, int], ...]
    members: tuple[tuple[tuple[int, int], ...], ...]
    pair_to_hex: np.ndarray = field(compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.reps)

    def hex_of_pair(self, u: int, v: int) -> int:
        return int(self.pair_to_hex[u, v])

    def hex_of_triple(self, x: int, y: int, z: int) -> int:
        """Hexagon id of the translation class of the triple (x, y, z)."""
        i = self.group.inv_array
        m = self.group.mul_array
        iz = i[z]
        return int(self.pair_to_hex[m[x, iz], m[y, iz]])

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(ms) for ms in self.members)

    def __hash__(self):
        return hash((self.group, self.reps))


@lru_cache(maxsize=None)
def _build(group: AbelianGroup) -> HexagonTable:
    n = group.order
    pair_to_hex = np.full((n, n), -1, dtype=np.int64)
    reps: list[tuple[int, int]] = []
    members: list[tuple[tuple[int, int], ...]] = []
    for u in range(n):
        for v in range(n):
            if pair_to_hex[u, v] >= 0:
                continue
            # sweeping pairs in ascending order, the first pair seen in an
            # orbit is its lexicographic minimum
            images = sorted(set(pair_images(group, u, v)))
            hid = len(reps)
            reps.append((u, v))
            members.append(tuple(images))
            for a, b in images:
                pair_to_hex[a, b] = hid
    table = HexagonTable(group, tuple(reps), tuple(members), pair_to_hex)
    if table.size != hexagon_count_formula(group):
        raise AssertionError(f"hexagon table for {group.literal} disagrees with the counting formula")
    return table


def build_table(group: AbelianGroup, cap: int = TABLE_ORDER_CAP) -> HexagonTable:
    """Build (and cache) the full hexagon table for a group of order <= cap."""
    if group.order > cap:
        raise CapacityError(
            f"hexagon table capped at group order {cap}, {group.literal} has order {group.order}"
        )
    return _build(group)
