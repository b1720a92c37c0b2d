"""Quotients of finite fields by subgroups of their units, and the decider."""

from hexafield import (QuotientSpec, build_field, factor_prime_power,
                       field_f3, is_quotient_of_finite_field, krasner,
                       quotient_hyperfield, sign_hyperfield)

# every subgroup of F_q^x gives a hyperfield on the quotient group
for q in [3, 4, 5, 7, 8, 9]:
    f = build_field(*factor_prime_power(q))
    for n in range(1, 9):
        if (f.q - 1) % n:
            continue
        p = quotient_hyperfield(QuotientSpec(f, n))
        print(f"F{q} / (index {n}) -> group {p.group.literal}, "
              f"eps {p.unit!r}, nullset {p.nullset:#x}")

print()
# which of the named hyperfields arise this way?
for name, p in [("F3", field_f3()), ("K", krasner()), ("S", sign_hyperfield())]:
    v = is_quotient_of_finite_field(p)
    if v.status == "quotient":
        print(f"{name}: quotient of F{v.witness.field.q} at index {v.witness.index}")
    else:
        print(f"{name}: {v.status}")

# the sign hyperfield has 1 + (-1) = everything, so no finite search can
# rule it out; a larger bound just pushes the frontier
print("S with bound 500:", is_quotient_of_finite_field(sign_hyperfield(),
                                                       extended_bound=500).status)
