"""The four small named hyperfields, their additions and their predicates."""

from hexafield import (field_f2, field_f3, is_4full, is_field,
                       is_hyperfield_fast, is_zero_over_zero, krasner,
                       reconstruct_addition, satisfies_star, sign_hyperfield)

for name, p in [("F2", field_f2()), ("K", krasner()),
                ("F3", field_f3()), ("S", sign_hyperfield())]:
    table = reconstruct_addition(p)
    print(f"== {name}  (group {p.group.literal}, eps index {p.unit_index}, "
          f"nullset {p.nullset:#x})")
    print(table.dump_text())
    print("hyperfield:", is_hyperfield_fast(p),
          " field:", is_field(p),
          " 4full:", is_4full(p),
          " 0/0:", is_zero_over_zero(p),
          " star:", satisfies_star(p))
    print()

# in the sign hyperfield 1 + (-1) covers the whole carrier
s = sign_hyperfield()
table = reconstruct_addition(s)
print("in S, 1 + (-1) =", sorted(table.sum_set(1, s.unit_index + 1)))
