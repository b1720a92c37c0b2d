"""Vectorized predicates over many nullsets of one (group, unit) at once.

Every public method takes a bool matrix NS of shape (samples, #hexagons),
row s being the hexagon-membership bits of one nullset, and returns a bool
vector of per-sample verdicts.  The math mirrors the scalar functions in
pastures.py; the scalar versions stay the reference implementations and
the two are cross-checked in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import CapacityError
from .groups import AbelianGroup, automorphisms_fixing
from .hexagons import build_table
from .morphisms import hexagon_permutation
from .pastures import ORACLE_ORDER_CAP


def _lowbit_groups(width: int) -> list[tuple[int, np.ndarray]]:
    """Masks 1..2^width-1 grouped by lowest set bit, high bit first."""
    out = []
    masks = np.arange(1, 1 << width, dtype=np.int64)
    low = masks & -masks
    for i in reversed(range(width)):
        out.append((i, masks[low == (1 << i)]))
    return out


@dataclass(frozen=True)
class Kernels:
    group: AbelianGroup
    unit_index: int

    # -- shared index tensors ---------------------------------------------

    @cached_property
    def _m(self) -> np.ndarray:
        return self.group.mul_array

    @cached_property
    def _iv(self) -> np.ndarray:
        return self.group.inv_array

    @cached_property
    def _em(self) -> np.ndarray:
        # multiplication by the unit
        return self._m[self.unit_index]

    @cached_property
    def _hid2(self) -> np.ndarray:
        return build_table(self.group).pair_to_hex

    @cached_property
    def _hid3(self) -> np.ndarray:
        # hexagon of the triple (x, y, z), normalized by the third coordinate
        a = self._m[:, self._iv]  # a[x, z] = x / z
        return self._hid2[a[:, None, :], a[None, :, :]]

    @cached_property
    def _hid3e(self) -> np.ndarray:
        # hexagon of (x, y, unit*z): the membership bit of z in x + y
        return self._hid3[:, :, self._em]

    @property
    def n_hex(self) -> int:
        return build_table(self.group).size

    # -- fast hyperfield check --------------------------------------------

    @cached_property
    def _b_index(self):
        n = self.group.order
        m, em, hid2 = self._m, self._em, self._hid2
        hb1 = hid2[m.T[:, None, :], em[m].T[None, :, :]]      # [x, z, t]
        hb2 = hid2[em[m].T[:, None, :], m.T[None, :, :]]      # [y, w, t]
        grid = np.arange(n)
        x, y, z, w = np.ix_(grid, grid, grid, grid)
        offdiag = (x != z) | (y != w)
        return hb1.reshape(n * n, n), hb2.reshape(n * n, n), offdiag

    def is_hyperfield(self, ns: np.ndarray) -> np.ndarray:
        n = self.group.order
        in2 = ns[:, self._hid2]  # (S, n, n)
        cond_a = in2.any(axis=2)
        keep = np.arange(n) != self.unit_index
        ok_a = cond_a[:, keep].all(axis=1) if keep.any() else np.ones(len(ns), dtype=bool)
        hb1, hb2, offdiag = self._b_index
        # float32 einsum so the any-over-t contraction runs through BLAS
        m1 = ns[:, hb1].astype(np.float32)  # (S, n^2 [x,z], t)
        m2 = ns[:, hb2].astype(np.float32)  # (S, n^2 [y,w], t)
        cross = np.einsum("sit,sjt->sij", m1, m2, optimize=True) > 0.5
        cross = cross.reshape(-1, n, n, n, n).transpose(0, 1, 3, 2, 4)  # [s,x,y,z,w]
        premise = in2[:, :, :, None, None] & in2[:, None, None, :, :]
        viol = (premise & ~cross & offdiag).any(axis=(1, 2, 3, 4))
        return ok_a & ~viol

    # -- brute-force axiom oracle -----------------------------------------

    @cached_property
    def _carrier_negation(self) -> np.ndarray:
        return np.concatenate(([0], self._em + 1))

    def addition_masks(self, ns: np.ndarray) -> np.ndarray:
        """(S, N, N) int32 carrier addition table, bit i+1 = element i."""
        n = self.group.order
        big = n + 1
        s = len(ns)
        bits = ns[:, self._hid3e]  # (S, n, n, n)
        weights = (np.int64(1) << (np.arange(n, dtype=np.int64) + 1)).astype(np.int32)
        b = np.zeros((s, big, big), dtype=np.int32)
        b[:, 1:, 1:] = bits.astype(np.int32) @ weights
        # 0 lands in x + y exactly when x = unit * y
        pat = (np.arange(n)[:, None] == self._em[None, :])
        b[:, 1:, 1:] += pat.astype(np.int32)
        single = (np.int64(1) << np.arange(big, dtype=np.int64)).astype(np.int32)
        b[:, 0, :] = single
        b[:, 1:, 0] = single[1:]
        return b

    def axiom_oracle(self, ns: np.ndarray) -> np.ndarray:
        n = self.group.order
        if n > ORACLE_ORDER_CAP:
            raise CapacityError(f"oracle is capped at order {ORACLE_ORDER_CAP}, got {n}")
        big = n + 1
        s = len(ns)
        b = self.addition_masks(ns)
        ok = (b != 0).all(axis=(1, 2))
        ok &= (b == b.swapaxes(1, 2)).all(axis=(1, 2))
        expect0 = np.arange(big)[:, None] == self._carrier_negation[None, :]
        ok &= ((b & 1).astype(bool) == expect0).all(axis=(1, 2))
        # scaling by any group element permutes the membership tensor
        bits = ns[:, self._hid3e]
        for t in range(1, n):
            mt = self._m[t]
            ok &= (bits == bits[:, mt][:, :, mt][:, :, :, mt]).all(axis=(1, 2, 3))
        # associativity via per-column union-over-subset tables
        full = 1 << big
        t_tab = np.zeros((s, big, full), dtype=np.int32)
        for i, masks in _lowbit_groups(big):
            t_tab[:, :, masks] = t_tab[:, :, masks - (1 << i)] | b[:, :, i][:, :, None]
        idx = np.broadcast_to(b.reshape(s, 1, big * big), (s, big, big * big)).astype(np.int64)
        gathered = np.take_along_axis(t_tab, idx, axis=2).reshape(s, big, big, big)
        left = np.moveaxis(gathered, 1, 3)  # left[s,g,h,k] = gathered[s,k,g,h]
        ok &= (left == gathered).all(axis=(1, 2, 3))
        return ok

    # -- star, 4-full, 0/0, field -----------------------------------------

    @cached_property
    def _star_index(self):
        n = self.group.order
        m, hid2 = self._m, self._hid2
        head = hid2[np.arange(n)[:, None], m].T          # [a, u] = hex(u, u a)
        tail = hid2[m[:, :, None], m[:, None, :]]        # [u, b, c]
        return head, tail.transpose(1, 2, 0).reshape(n * n, n)

    def satisfies_star(self, ns: np.ndarray) -> np.ndarray:
        head, tail = self._star_index
        x = ns[:, head].astype(np.float32)   # (S, n, u)
        y = ns[:, tail].astype(np.float32)   # (S, n^2, u)
        cross = np.einsum("sit,sjt->sij", x, y, optimize=True)
        return (cross > 0.5).all(axis=(1, 2))

    @cached_property
    def _four_index(self):
        n = self.group.order
        m, iv, em, hid2 = self._m, self._iv, self._em, self._hid2
        q = iv[em]  # q[t] = (unit * t)^-1
        h41 = hid2[q[None, :], m[:, q]]  # [b, t] = hex(1, b, unit*t)
        grid = np.arange(n)
        b, c, d = np.ix_(grid, grid, grid)
        trivial = (b == self.unit_index) & (c == em[d.reshape(-1)].reshape(1, 1, n))
        return h41, trivial.reshape(1, n, n * n)

    def is_4full(self, ns: np.ndarray) -> np.ndarray:
        n = self.group.order
        h41, trivial = self._four_index
        x = ns[:, h41].astype(np.float32)                       # (S, b, t)
        y = ns[:, self._hid3.reshape(n * n, n)].astype(np.float32)  # (S, (c,d), t)
        cross = np.einsum("sit,sjt->sij", x, y, optimize=True) > 0.5  # (S, b, (c,d))
        ok = (cross | trivial).all(axis=(1, 2))
        if n == 1:
            ok &= ns.any(axis=1)  # F2 is excluded by definition
        return ok

    @cached_property
    def _ratio_index(self):
        q = self._iv[self._em]
        hse = self._hid2[q, self._m[self.unit_index][q]]  # [z] = hex(1, unit, unit*z)
        return hse

    def one_plus_minus_one(self, ns: np.ndarray) -> np.ndarray:
        """(S, n) bool: nonzero membership bits of 1 + (-1)."""
        return ns[:, self._ratio_index]

    def is_zero_over_zero(self, ns: np.ndarray) -> np.ndarray:
        s_mask = self.one_plus_minus_one(ns)
        shifted = s_mask[:, self._m]  # [s, x, z] = s_mask[s, x*z]
        return (s_mask[:, None, :] & shifted).any(axis=2).all(axis=1)

    def is_field(self, ns: np.ndarray) -> np.ndarray:
        return self.is_hyperfield(ns) & ~self.one_plus_minus_one(ns).any(axis=1)

    # -- symmetry events ---------------------------------------------------

    @cached_property
    def _eps_hex_ids(self) -> np.ndarray:
        return np.unique(self._hid2[self.unit_index])

    def all_eps_hexagons(self, ns: np.ndarray) -> np.ndarray:
        return ns[:, self._eps_hex_ids].all(axis=1)

    @cached_property
    def nontrivial_hex_perms(self) -> np.ndarray:
        table = build_table(self.group)
        perms = [
            hexagon_permutation(table, f.images)
            for f in automorphisms_fixing(self.group, self.unit_index)
            if not f.is_identity
        ]
        if not perms:
            return np.zeros((0, table.size), dtype=np.int64)
        return np.array(perms, dtype=np.int64)

    def has_nontrivial_automorphism(self, ns: np.ndarray) -> np.ndarray:
        perms = self.nontrivial_hex_perms
        out = np.zeros(len(ns), dtype=bool)
        for perm in perms:
            out |= (ns == ns[:, perm]).all(axis=1)
        return out

    def event(self, name: str, ns: np.ndarray) -> np.ndarray:
        try:
            fn = _EVENTS[name]
        except KeyError:
            raise ValueError(f"unknown event {name!r}; known: {sorted(_EVENTS)}") from None
        return fn(self, ns)


_EVENTS = {
    "is_hyperfield": Kernels.is_hyperfield,
    "satisfies_star": Kernels.satisfies_star,
    "all_eps_hexagons": Kernels.all_eps_hexagons,
    "has_nontrivial_automorphism": Kernels.has_nontrivial_automorphism,
    "is_field": Kernels.is_field,
}

EVENT_NAMES = tuple(sorted(_EVENTS))


@lru_cache(maxsize=None)
def kernels_for(group: AbelianGroup, unit_index: int) -> Kernels:
    if unit_index != group.inv_array[unit_index]:
        raise ValueError("unit index must denote a self-inverse element")
    return Kernels(group, unit_index)


def ints_to_bits(values: np.ndarray, width: int) -> np.ndarray:
    """Unpack nullset integers into a (len, width) bool matrix."""
    values = np.asarray(values, dtype=np.int64)
    return (values[:, None] >> np.arange(width, dtype=np.int64)) & 1 > 0


def bits_to_ints(bits: np.ndarray) -> np.ndarray:
    width = bits.shape[1]
    weights = np.int64(1) << np.arange(width, dtype=np.int64)
    return bits.astype(np.int64) @ weights
