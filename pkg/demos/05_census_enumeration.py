"""Enumerating all legal weight systems within bounds.

The enumerator streams every legal system inside an explicit box of
bounds, exactly once up to STRICT canonical form and in a deterministic
order.  It backs the property tests; at desk scale it also answers small
census questions directly.
"""

from collections import Counter

from t2orbits import (
    EnumerationBounds,
    canonical_form,
    decompose,
    enumerate_legal,
    validate,
)

bounds = EnumerationBounds(
    max_genus=1,
    max_cycles=1,
    max_cycle_length=3,
    max_weight_entry=2,
    max_exceptional=1,
    max_alpha=3,
    max_circle_boundaries=1,
    max_obstruction=1,
)

census = list(enumerate_legal(bounds))
print("census size:", len(census))
print("all legal:", all(validate(w).is_legal for w in census))
forms = {canonical_form(w).key for w in census}
print("distinct canonical forms:", len(forms), "(no duplicates)" if len(forms) == len(census) else "")

by_shape = Counter((w.circle_count, w.cycle_count, w.exceptional_count) for w in census)
print("\nsystems by (circles, cycles, exceptional):")
for shape, count in sorted(by_shape.items()):
    print(f"  {shape}: {count}")

manifold = sum(1 for w in census if not decompose(w).simple_pieces)
print(f"\nmanifold systems (no singular fixed points): {manifold}")
print(f"systems needing simple pieces: {len(census) - manifold}")

print("\nfirst singular one-cycle systems in enumeration order:")
shown = 0
for w in census:
    if w.cycle_count == 1 and any(abs(f) > 1 for f in w.fixed_cycles[0].dets):
        print(" ", w.fixed_cycles[0])
        shown += 1
        if shown == 3:
            break
