import itertools

import pytest

from hexafield.errors import CapacityError
from hexafield.groups import AbelianGroup, abelian_groups_up_to
from hexafield.hexagons import build_table
from hexafield.pastures import (AdditionTable, LinearSystem, Pasture,
                                all_pastures, axiom_oracle, fetvins_check,
                                fetvins_exhaustive, field_f2, field_f3,
                                is_4full, is_field, is_hyperfield_fast,
                                is_zero_over_zero, krasner,
                                reconstruct_addition, satisfies_star,
                                sign_hyperfield)


def units_of(g):
    return g.units_of_order_le_2()


def small_cases(max_order):
    for g in abelian_groups_up_to(max_order):
        for unit in units_of(g):
            yield g, unit


def test_named_pastures():
    f2 = field_f2()
    assert f2.group.is_trivial and f2.nullset == 0
    k = krasner()
    assert k.group.is_trivial and k.nullset == 1
    f3 = field_f3()
    assert f3.group.order == 2 and f3.unit.index == 1
    s = sign_hyperfield()
    assert s.group == f3.group and s.unit == f3.unit
    assert f3.nullset != s.nullset
    assert bin(f3.nullset).count("1") == bin(s.nullset).count("1") == 1


def test_pasture_validation():
    g = AbelianGroup.from_literal("Z3")
    w = g.element((1,))
    with pytest.raises(ValueError):
        Pasture(g, w, 0)  # w squares to w^2 != 1
    with pytest.raises(ValueError):
        Pasture(g, g.identity, 1 << build_table(g).size)
    g2 = AbelianGroup.from_literal("Z2")
    with pytest.raises(ValueError):
        Pasture(g, g2.element((1,)), 0)


def sums(table, a, b):
    return sorted(table.sum_set(a, b))


def test_reconstructed_addition_knowns():
    # carrier indices: 0 is zero, 1 is the unit, then the rest
    f2 = reconstruct_addition(field_f2())
    assert sums(f2, 1, 1) == [0]
    k = reconstruct_addition(krasner())
    assert sums(k, 1, 1) == [0, 1]
    f3 = reconstruct_addition(field_f3())
    assert sums(f3, 1, 1) == [2]
    assert sums(f3, 1, 2) == [0]
    assert sums(f3, 2, 2) == [1]
    s = reconstruct_addition(sign_hyperfield())
    assert sums(s, 1, 1) == [1]
    assert sums(s, 2, 2) == [2]
    assert sums(s, 1, 2) == [0, 1, 2]


def test_addition_zero_row():
    table = reconstruct_addition(sign_hyperfield())
    assert sums(table, 0, 0) == [0]
    for a in range(1, table.carrier_size):
        assert sums(table, 0, a) == [a]
        assert sums(table, a, 0) == [a]


def test_dump_text_shape():
    text = reconstruct_addition(field_f3()).dump_text()
    lines = text.strip().splitlines()
    assert len(lines) == 4  # header plus one row per carrier element
    assert "0" in lines[0]


def test_negation_membership():
    # 0 lands in a + b exactly when b = -a
    for g, unit in small_cases(4):
        for p in all_pastures(g, unit):
            table = reconstruct_addition(p)
            neg = table.carrier_negation
            for a in range(table.carrier_size):
                for b in range(table.carrier_size):
                    assert (table.mask(a, b) & 1 != 0) == (neg[a] == b)


def test_fast_check_equals_oracle_small():
    # the acceptance gate re-runs this at order 5 plus random large groups
    for g, unit in small_cases(4):
        for p in all_pastures(g, unit):
            assert is_hyperfield_fast(p) == axiom_oracle(p), p


def test_known_predicates():
    assert is_field(field_f2()) and is_field(field_f3())
    assert not is_field(krasner()) and not is_field(sign_hyperfield())
    assert is_hyperfield_fast(krasner())
    assert satisfies_star(krasner())
    assert not satisfies_star(sign_hyperfield())
    assert is_zero_over_zero(sign_hyperfield())
    assert not is_4full(sign_hyperfield())
    assert is_4full(krasner())
    assert not is_4full(field_f2())  # excluded by definition
    assert not is_zero_over_zero(field_f3())


def test_star_iff_4full_and_zero_over_zero():
    for g, unit in small_cases(4):
        for p in all_pastures(g, unit):
            if not is_hyperfield_fast(p):
                continue
            assert satisfies_star(p) == (is_4full(p) and is_zero_over_zero(p)), p


def test_weak_sign_is_star():
    g = AbelianGroup.from_literal("Z2")
    weak = Pasture(g, g.element((1,)), 0b11)
    assert is_hyperfield_fast(weak)
    assert is_4full(weak) and is_zero_over_zero(weak) and satisfies_star(weak)


def test_all_pastures_count():
    g = AbelianGroup.from_literal("Z3")
    assert len(list(all_pastures(g, g.identity))) == 16


def test_oracle_cap():
    g = AbelianGroup.from_literal("Z16")
    with pytest.raises(CapacityError):
        axiom_oracle(Pasture(g, g.identity, 0))


def test_linear_system_validation():
    with pytest.raises(ValueError):
        LinearSystem(())
    with pytest.raises(ValueError):
        LinearSystem(((1, 2, 0),))  # one equation takes two unknowns, not three
    assert LinearSystem(((1, 2),)).m == 1
    assert LinearSystem(((1, 1, 0), (0, 1, 1))).m == 2


def test_fetvins_on_knowns():
    k = reconstruct_addition(krasner())
    assert fetvins_exhaustive(k, 1)
    assert fetvins_exhaustive(k, 2)
    g = AbelianGroup.from_literal("Z2")
    weak = reconstruct_addition(Pasture(g, g.element((1,)), 0b11))
    assert fetvins_exhaustive(weak, 1)
    assert fetvins_exhaustive(weak, 2)
    # single equation over the sign hyperfield
    s = reconstruct_addition(sign_hyperfield())
    assert fetvins_check(s, LinearSystem(((1, 2),)))
    with pytest.raises(CapacityError):
        fetvins_check(s, LinearSystem(tuple((1, 1, 1, 1) for _ in range(3))))


def test_fields_are_single_valued():
    for g, unit in small_cases(3):
        for p in all_pastures(g, unit):
            if not is_hyperfield_fast(p) or not is_field(p):
                continue
            table = reconstruct_addition(p)
            for a, b in itertools.product(range(table.carrier_size), repeat=2):
                assert len(table.sum_set(a, b)) == 1
