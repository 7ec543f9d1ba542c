"""Deciding equivariant equivalence through canonical forms.

Two actions are equivariantly homeomorphic exactly when their weighted
orbit spaces are isomorphic.  On the data this means equality after
quotienting by the presentation choices: multiset order, the starting
index of each cycle, and the sign representative of each pair.  STRICT
mode quotients by exactly those; WEAK mode also allows reparametrizing
the torus (a global unimodular basis change) and reversing orientation.
"""

from t2orbits import (
    EquivalenceMode,
    FixedCycle,
    WeightSystem,
    apply_basis_change,
    canonical_cycle,
    canonical_form,
    is_isomorphic,
    reverse_orientation,
    suspension_of_lens,
    weak_witness,
)

STRICT, WEAK = EquivalenceMode.STRICT, EquivalenceMode.WEAK

# Presentation does not matter: rotate the cycle, flip pair signs, reorder
# multisets; the canonical form is unchanged.
w = suspension_of_lens((1, 0), (2, 5))
cycle = w.fixed_cycles[0]
rotated = FixedCycle(cycle.pairs[1:] + cycle.pairs[:1],
                     cycle.dets[1:] + cycle.dets[:1])
print("canonical cycle:", canonical_cycle(cycle))
print("same after rotation:", canonical_cycle(rotated) == canonical_cycle(cycle))
print("strict isomorphic to rotated presentation:",
      is_isomorphic(w, WeightSystem(fixed_cycles=(rotated,)), STRICT))

# Different lens data gives different actions, even though the local
# models L(5,2) and L(5,3) are homeomorphic: the weight system is finer.
other = suspension_of_lens((1, 0), (3, 5))
print("\nsusp((1,0),(2,5)) vs susp((1,0),(3,5)), STRICT:",
      is_isomorphic(w, other, STRICT))

# A global basis change of the torus produces a WEAK-equal system.
shear = ((1, 1), (0, 1))
moved = apply_basis_change(w, shear)
print("\nafter shear, STRICT:", is_isomorphic(w, moved, STRICT))
print("after shear, WEAK:  ", is_isomorphic(w, moved, WEAK))
print("witness:", weak_witness(w, moved))

# Orientation reversal likewise only identifies in WEAK mode.
reversed_w = reverse_orientation(w)
print("\nreversed, STRICT:", is_isomorphic(w, reversed_w, STRICT))
print("reversed, WEAK:  ", is_isomorphic(w, reversed_w, WEAK))
print("witness:", weak_witness(w, reversed_w))

# Canonical forms are totally ordered and idempotent, so they can serve as
# dictionary keys for a census.
form = canonical_form(w, WEAK)
print("\nweak canonical key:", form.key)
print("idempotent:", canonical_form(form.to_weight_system(), WEAK) == form)
