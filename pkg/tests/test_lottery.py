from fractions import Fraction

import numpy as np
import pytest

from hexafield.errors import CapacityError
from hexafield.groups import AbelianGroup
from hexafield.hexagons import build_table
from hexafield.batch import bits_to_ints
from hexafield.lottery import (Census, LotterySpec, census, class_table,
                               estimate, sample_bits, sample_pasture,
                               thread_count, wilson_interval)
from hexafield.pastures import (field_f3, is_hyperfield_fast, satisfies_star,
                                sign_hyperfield)

Z2 = AbelianGroup.from_literal("Z2")
Z3 = AbelianGroup.from_literal("Z3")


def spec_for(lit, unit_index, samples, seed=42):
    g = AbelianGroup.from_literal(lit)
    return LotterySpec(g, g.element_by_index(unit_index), seed, samples)


def test_sampling_is_deterministic():
    bits = sample_bits(42, 0, 100, 13)
    again = sample_bits(42, 0, 100, 13)
    assert (bits == again).all()
    # chunk boundaries do not matter: the stream is keyed by sample index
    split = np.concatenate([sample_bits(42, 0, 37, 13), sample_bits(42, 37, 100, 13)])
    assert (bits == split).all()
    assert not (bits == sample_bits(43, 0, 100, 13)).all()


def test_sample_pasture_matches_bits():
    spec = spec_for("Z3", 0, 50, seed=7)
    width = build_table(Z3).size
    nullsets = bits_to_ints(sample_bits(7, 0, 50, width))
    for i in range(50):
        p = sample_pasture(spec, i)
        assert p.nullset == int(nullsets[i])


def test_bit_frequencies_are_fair():
    # each hexagon bit is an independent fair coin
    width = build_table(AbelianGroup.from_literal("Z9")).size
    freq = sample_bits(42, 0, 100_000, width).mean(axis=0)
    assert freq.min() > 0.49 and freq.max() < 0.51


WILSON_KNOWN = [
    (75, 100, 0.656955364519384, 0.8245478863771232),
    (0, 50, 0.0, 0.07134759913335874),
    (50, 50, 0.9286524008666412, 1.0),
    (1, 10000, 1.7652673601122363e-05, 0.0005662688974013383),
    (372, 1000, 0.34258611396233785, 0.4023935362099642),
    (2218, 10000, 0.21376487778763084, 0.23004877890581357),
    (1, 1, 0.2065493143772374, 1.0),
    (0, 1, 0.0, 0.7934506856227627),
    (4999, 10000, 0.4901021004111254, 0.5096979763885487),
]


def test_wilson_against_known_values():
    for s, n, lo, hi in WILSON_KNOWN:
        got_lo, got_hi = wilson_interval(s, n)
        assert got_lo == pytest.approx(lo, abs=1e-12)
        assert got_hi == pytest.approx(hi, abs=1e-12)


def test_wilson_boundaries_and_ordering():
    for n in [1, 5, 100]:
        assert wilson_interval(0, n)[0] == 0.0
        assert wilson_interval(n, n)[1] == 1.0
    for s, n in [(0, 7), (3, 7), (7, 7), (250, 1000)]:
        lo, hi = wilson_interval(s, n)
        assert 0.0 <= lo <= s / n <= hi <= 1.0
    with pytest.raises(ValueError):
        wilson_interval(5, 4)
    with pytest.raises(ValueError):
        wilson_interval(-1, 4)


def test_estimate_exhaustive_small_groups():
    # (Z2, g): 3 of 4 nullsets are hyperfields; Z2 has 2 hexagons, so 10^4
    # samples hit each of the four about 2500 times
    est = estimate(spec_for("Z2", 1, 10_000), "is_hyperfield")
    assert est.ci_low < 0.75 < est.ci_high
    assert est.p_hat == Fraction(est.successes, 10_000)

    # trivial group: both nullsets give hyperfields
    t = AbelianGroup.from_literal("Z1")
    est = estimate(LotterySpec(t, t.element_by_index(0), 42, 500), "is_hyperfield")
    assert est.successes == 500
    assert est.p_hat == 1
    assert est.ci_high == 1.0


def test_estimate_all_eps_event():
    # eps = g: hexes of (1,1) and (1,g) coincide with the eps-pairs exactly
    # when {hex(eps,x)} has two members, so the event has probability 1/4 on
    # the identity unit and 1/2 on the unit g
    est = estimate(spec_for("Z2", 1, 10_000), "all_eps_hexagons")
    assert est.ci_low < 0.5 < est.ci_high
    est = estimate(spec_for("Z2", 0, 10_000), "all_eps_hexagons")
    assert est.ci_low < 0.25 < est.ci_high


def test_estimate_star_z3():
    est = estimate(spec_for("Z3", 0, 1000), "satisfies_star")
    assert est.successes == 372
    assert (est.ci_low, est.ci_high) == wilson_interval(372, 1000)


def test_estimate_unknown_event():
    with pytest.raises(ValueError):
        estimate(spec_for("Z2", 1, 10), "bogus")


def test_estimate_thread_invariance():
    spec = spec_for("Z5", 0, 20_000)
    one = estimate(spec, "satisfies_star", threads=1)
    four = estimate(spec, "satisfies_star", threads=4)
    assert one == four


def test_lottery_spec_validation():
    with pytest.raises(ValueError):
        LotterySpec(Z3, Z3.element_by_index(1), 42, 10)  # order-3 unit
    with pytest.raises(ValueError):
        LotterySpec(Z2, Z2.element_by_index(1), 42, 0)
    with pytest.raises(ValueError):
        LotterySpec(Z2, Z3.element_by_index(0), 42, 10)


def test_census_small_groups():
    got = census(Z2, Z2.element_by_index(1))
    assert got == Census(Z2, Z2.element_by_index(1), 4, 3, 1, 1, 3, 3)
    got = census(Z2, Z2.element_by_index(0))
    assert (got.total_pastures, got.hyperfields, got.fields) == (4, 2, 0)
    assert (got.star_hyperfields, got.iso_classes, got.rigid_count) == (1, 2, 2)
    t = AbelianGroup.from_literal("Z1")
    got = census(t, t.element_by_index(0))
    assert (got.total_pastures, got.hyperfields, got.fields) == (2, 2, 1)


def test_census_z5():
    got = census(AbelianGroup.from_literal("Z5"),
                 AbelianGroup.from_literal("Z5").element_by_index(0))
    assert got.total_pastures == 2 ** 7
    assert got.hyperfields == 43
    assert got.iso_classes == 16
    assert got.rigid_count == 32


def test_census_thread_invariance():
    g = AbelianGroup.from_literal("Z7")
    assert census(g, g.element_by_index(0), threads=1) == \
        census(g, g.element_by_index(0), threads=4)


def test_census_capacity():
    g = AbelianGroup.from_literal("Z16")
    with pytest.raises(CapacityError):
        census(g, g.element_by_index(0))


def test_class_table_z2():
    rows = class_table(Z2, Z2.element_by_index(1))
    assert [r.pasture.nullset for r in rows] == [1, 2, 3]
    assert rows[0].pasture == field_f3()
    assert rows[1].pasture == sign_hyperfield()
    for r in rows:
        assert is_hyperfield_fast(r.pasture)
        assert r.is_hyperfield
        assert r.automorphisms == 1  # Z2 has no nontrivial automorphisms
    star_rows = [r for r in rows if r.is_4full and r.is_00]
    assert [r.pasture.nullset for r in star_rows] == [3]
    assert satisfies_star(star_rows[0].pasture)
    assert [r.is_field for r in rows] == [True, False, False]


def test_class_table_z3_counts():
    rows = class_table(Z3, Z3.element_by_index(0))
    assert len(rows) == 7
    assert sum(r.automorphisms for r in rows) == 2 * 7 - 2  # two rigid classes
    assert sum(1 for r in rows if r.is_field) == 1  # only the 4-element field
    assert class_table(Z3, Z3.element_by_index(0), threads=4) == rows


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv("HEXAFIELD_THREADS", "3")
    assert thread_count() == 3
    assert thread_count(2) == 2
    monkeypatch.delenv("HEXAFIELD_THREADS")
    assert thread_count() >= 1
    with pytest.raises(ValueError):
        thread_count(0)
