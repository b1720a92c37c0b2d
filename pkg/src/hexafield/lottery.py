"""Uniform pasture sampling, Monte Carlo event estimates, exhaustive censuses."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

import numpy as np

from .batch import EVENT_NAMES, bits_to_ints, ints_to_bits, kernels_for
from .errors import CapacityError
from .groups import AbelianGroup, GroupElement, automorphisms_fixing
from .hexagons import build_table
from .pastures import Pasture

WILSON_Z = 1.959963984540054  # 97.5th percentile of the standard normal
CENSUS_HEX_CAP = 22
CLASSIFY_HEX_CAP = 16
ORACLE_SUBSAMPLE = 100  # census re-checks every 100th nullset against the oracle
_CHUNK = 4096  # fixed work unit, so the thread count never moves chunk boundaries


def thread_count(threads: int | None = None) -> int:
    """Explicit argument, else HEXAFIELD_THREADS, else the machine."""
    if threads is None:
        env = os.environ.get("HEXAFIELD_THREADS", "").strip()
        threads = int(env) if env else (os.cpu_count() or 1)
    if threads < 1:
        raise ValueError("thread count must be at least 1")
    return threads


def _chunks(total: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]


def _run_chunks(work, bounds, threads):
    if threads == 1 or len(bounds) <= 1:
        return [work(b) for b in bounds]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(work, bounds))


@dataclass(frozen=True)
class LotterySpec:
    group: AbelianGroup
    unit: GroupElement
    seed: int
    samples: int

    def __post_init__(self):
        if self.unit.group != self.group:
            raise ValueError("unit must belong to the sampled group")
        if (self.unit * self.unit).index != 0:
            raise ValueError("unit must square to the identity")
        if self.samples < 1:
            raise ValueError("need at least one sample")


def sample_bits(seed: int, start: int, stop: int, width: int) -> np.ndarray:
    """Hexagon bits for sample indices [start, stop).

    Bit h of sample i is a pure function of (seed, i, h): a Philox generator
    keyed on (seed, i) supplies the words, and h picks a fixed position.
    Chunking and thread layout therefore cannot change any sample.
    """
    words = (width + 63) // 64
    raw = np.empty((stop - start, words), dtype=np.uint64)
    key = np.array([seed % (1 << 64), 0], dtype=np.uint64)
    for row, idx in enumerate(range(start, stop)):
        key[1] = idx
        raw[row] = np.random.Philox(key=key).random_raw(words)
    pos = np.arange(width)
    return (raw[:, pos // 64] >> (pos % 64).astype(np.uint64)) & np.uint64(1) > 0


def sample_pasture(spec: LotterySpec, index: int) -> Pasture:
    if not 0 <= index < spec.samples:
        raise ValueError(f"sample index {index} outside [0, {spec.samples})")
    width = build_table(spec.group).size
    bits = sample_bits(spec.seed, index, index + 1, width)
    return Pasture(spec.group, spec.unit, int(bits_to_ints(bits)[0]))


def wilson_interval(successes: int, samples: int) -> tuple[float, float]:
    if successes == 0 and samples > 0:
        low = 0.0
    else:
        low = _wilson_bound(successes, samples, -1.0)
    if successes == samples:
        high = 1.0
    else:
        high = _wilson_bound(successes, samples, 1.0)
    return low, high


def _wilson_bound(successes: int, samples: int, sign: float) -> float:
    z = WILSON_Z
    n = samples
    p = successes / n
    denom = 1.0 + z * z / n
    center = (p + z * z / (2 * n)) / denom
    half = z * sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom
    return min(1.0, max(0.0, center + sign * half))


@dataclass(frozen=True)
class Estimate:
    event: str
    successes: int
    samples: int
    p_hat: Fraction
    ci_low: float
    ci_high: float

    def __post_init__(self):
        assert 0 <= self.ci_low <= self.p_hat <= self.ci_high <= 1
        assert self.p_hat == Fraction(self.successes, self.samples)


def estimate(spec: LotterySpec, event: str, threads: int | None = None) -> Estimate:
    if event not in EVENT_NAMES:
        raise ValueError(f"unknown event {event!r}; known: {list(EVENT_NAMES)}")
    nthreads = thread_count(threads)
    kernels = kernels_for(spec.group, spec.unit.index)
    width = kernels.n_hex

    def work(bounds):
        lo, hi = bounds
        return int(kernels.event(event, sample_bits(spec.seed, lo, hi, width)).sum())

    successes = sum(_run_chunks(work, _chunks(spec.samples), nthreads))
    low, high = wilson_interval(successes, spec.samples)
    return Estimate(event, successes, spec.samples,
                    Fraction(successes, spec.samples), low, high)


@dataclass(frozen=True)
class Census:
    group: AbelianGroup
    unit: GroupElement
    total_pastures: int
    hyperfields: int
    fields: int
    star_hyperfields: int
    iso_classes: int
    rigid_count: int


def census(group: AbelianGroup, unit: GroupElement,
           threads: int | None = None, hex_cap: int = CENSUS_HEX_CAP) -> Census:
    """Exact counts over every nullset on (group, unit)."""
    width = build_table(group).size
    if width > hex_cap:
        raise CapacityError(
            f"census wants 2^{width} nullsets; cap is 2^{hex_cap}")
    nthreads = thread_count(threads)
    kernels = kernels_for(group, unit.index)
    perms = list(kernels.nontrivial_hex_perms)
    total = 1 << width

    def work(bounds):
        lo, hi = bounds
        vals = np.arange(lo, hi, dtype=np.int64)
        bits = ints_to_bits(vals, width)
        hyper = kernels.is_hyperfield(bits)
        probe = vals % ORACLE_SUBSAMPLE == 0
        if probe.any() and (kernels.axiom_oracle(bits[probe]) != hyper[probe]).any():
            raise RuntimeError("fast hyperfield check disagrees with the axiom oracle")
        no_sum = ~kernels.one_plus_minus_one(bits).any(axis=1)
        star = kernels.satisfies_star(bits)
        auto = kernels.has_nontrivial_automorphism(bits)
        hyper_bits = bits[hyper]
        canon = bits_to_ints(hyper_bits)
        for perm in perms:
            canon = np.minimum(canon, bits_to_ints(hyper_bits[:, perm]))
        return (int(hyper.sum()), int((hyper & no_sum).sum()),
                int((hyper & star).sum()), int((hyper & ~auto).sum()),
                set(canon.tolist()))

    parts = _run_chunks(work, _chunks(total), nthreads)
    hyperfields = sum(p[0] for p in parts)
    fields = sum(p[1] for p in parts)
    star_hyperfields = sum(p[2] for p in parts)
    rigid = sum(p[3] for p in parts)
    classes: set[int] = set()
    for p in parts:
        classes |= p[4]

    n_aut = len(automorphisms_fixing(group, unit.index))
    assert fields <= hyperfields <= total
    assert len(classes) <= hyperfields <= len(classes) * n_aut
    if group.order >= 2:
        # non-hyperfield mass is at least 2^-n
        assert (total - hyperfields) << group.order >= total
    return Census(group, unit, total, hyperfields, fields,
                  star_hyperfields, len(classes), rigid)


@dataclass(frozen=True)
class ClassRow:
    pasture: Pasture
    is_hyperfield: bool
    is_field: bool
    is_4full: bool
    is_00: bool
    automorphisms: int


def class_table(group: AbelianGroup, unit: GroupElement, hyper_only: bool = True,
                threads: int | None = None,
                hex_cap: int = CLASSIFY_HEX_CAP) -> tuple[ClassRow, ...]:
    """One row per isomorphism class, in canonical nullset order."""
    from .morphisms import pasture_automorphisms

    width = build_table(group).size
    if width > hex_cap:
        raise CapacityError(
            f"classification wants 2^{width} nullsets; cap is 2^{hex_cap}")
    nthreads = thread_count(threads)
    kernels = kernels_for(group, unit.index)
    perms = list(kernels.nontrivial_hex_perms)

    def work(bounds):
        lo, hi = bounds
        vals = np.arange(lo, hi, dtype=np.int64)
        bits = ints_to_bits(vals, width)
        if hyper_only:
            bits = bits[kernels.is_hyperfield(bits)]
        canon = bits_to_ints(bits)
        for perm in perms:
            canon = np.minimum(canon, bits_to_ints(bits[:, perm]))
        return set(canon.tolist())

    reps: set[int] = set()
    for part in _run_chunks(work, _chunks(1 << width), nthreads):
        reps |= part
    ordered = sorted(reps)
    bits = ints_to_bits(np.array(ordered, dtype=np.int64), width)
    hyper = kernels.is_hyperfield(bits)
    fields = kernels.is_field(bits)
    full4 = kernels.is_4full(bits)
    zz = kernels.is_zero_over_zero(bits)
    rows = []
    for i, val in enumerate(ordered):
        p = Pasture(group, unit, val)
        rows.append(ClassRow(p, bool(hyper[i]), bool(fields[i]), bool(full4[i]),
                             bool(zz[i]), len(pasture_automorphisms(p))))
    return tuple(rows)
