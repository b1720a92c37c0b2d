"""Skew hexagons on non-commutative groups: enumeration, Burnside, bound."""

from hexafield import (AbelianGroup, BUILTIN_GROUPS, burnside_orbit_count,
                       from_abelian, hexagon_count_formula, skew_bound,
                       skew_hexagons)

print(f"{'group':<5}{'order':>6}{'orbits':>8}{'burnside':>10}{'bound':>7}  sizes")
for name, ctor in BUILTIN_GROUPS.items():
    g = ctor()
    table = skew_hexagons(g)
    sizes = sorted(table.sizes())
    print(f"{name:<5}{g.order:>6}{table.size:>8}{burnside_orbit_count(g):>10}"
          f"{skew_bound(g):>7}  {sizes}")

print()
# abelian groups wrapped as Cayley tables fall back to the ordinary count
for lit in ["Z4", "Z6", "Z9", "Z2xZ4", "Z12"]:
    ag = AbelianGroup.from_literal(lit)
    table = skew_hexagons(from_abelian(ag))
    assert table.size == hexagon_count_formula(ag)
    print(f"{lit}: {table.size} orbits, same as the abelian formula")
