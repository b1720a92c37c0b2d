"""Sampling uniform nullsets: censuses where exact, Monte Carlo where not.

Exact censuses are cheap up to a few hundred thousand nullsets. Beyond that
we sample: the fraction of hyperfields that satisfy the star condition climbs
with the group order while nontrivial automorphisms die out.
"""

from hexafield import (AbelianGroup, build_table, census, kernels_for,
                       sample_bits, wilson_interval)

for lit in ["Z1", "Z2", "Z3", "Z5", "Z7"]:
    g = AbelianGroup.from_literal(lit)
    for unit in g.units_of_order_le_2():
        c = census(g, unit)
        print(f"({lit}, eps={unit!r}): {c.total_pastures} pastures, "
              f"{c.hyperfields} hyperfields, {c.fields} fields, "
              f"{c.star_hyperfields} star, {c.iso_classes} classes, "
              f"{c.rigid_count} rigid")

print()
print("conditional rates among sampled hyperfields, 10^4 draws, seed 42:")
print(f"{'group':<6}{'hyper':>7}{'P[star|hf]':>12}{'95% CI':>20}{'P[auto|hf]':>12}")
for lit in ["Z5", "Z7", "Z9", "Z11", "Z13"]:
    g = AbelianGroup.from_literal(lit)
    k = kernels_for(g, 0)
    bits = sample_bits(42, 0, 10_000, build_table(g).size)
    hyper = k.is_hyperfield(bits)
    n = int(hyper.sum())
    s = int((k.satisfies_star(bits) & hyper).sum())
    a = int((k.event("has_nontrivial_automorphism", bits) & hyper).sum())
    lo, hi = wilson_interval(s, n)
    print(f"{lit:<6}{n:>7}{s / n:>12.4f}{f'[{lo:.3f}, {hi:.3f}]':>20}{a / n:>12.4f}")
