"""Connected sums along circular orbits and the basic recognition result.

Removing an invariant tube around a circular orbit leaves an S^2 x S^1
boundary; gluing two spaces along such boundaries (with equal isotropy at
the chosen orbits) is the C-equivariant connected sum.  Every legal system
decomposes this way into a closed 4-manifold system (all adjacent
determinants +-1) plus one simple piece per boundary cycle containing a
singular fixed point.
"""

from t2orbits import (
    CircleSelection,
    IsotropyPair,
    WeightSystem,
    c_connected_sum,
    decompose,
    FixedCycle,
    is_isomorphic,
    is_simple,
    reassemble,
    suspension_of_lens,
    weighted_projective,
)

circle = CircleSelection.boundary_circle
arc = CircleSelection.cycle_arc

# Simple pieces: disk orbit space, no exceptional orbits, some fixed point.
print("suspension simple?", is_simple(suspension_of_lens((1, 0), (2, 5))))
print("weighted projective simple?", is_simple(weighted_projective(1, 2, 3)))

# Summing two systems at circle boundaries of equal isotropy.
a = WeightSystem(genus=1, circle_boundaries=(IsotropyPair(1, 0),))
b = WeightSystem(genus=2, circle_boundaries=(IsotropyPair(-1, 0),))
s = c_connected_sum(a, circle(0), b, circle(0))
print("\ncircle + circle: genus", s.genus, "boundaries", s.circle_boundaries)

# Splicing two cycles at arcs with the same isotropy: all fixed points of
# both summands survive into one longer boundary cycle.
x = suspension_of_lens((1, 0), (2, 5))
y = suspension_of_lens((1, 0), (1, 3))
spliced = c_connected_sum(x, arc(0, 0), y, arc(0, 0))
print("\nspliced cycle:", spliced.fixed_cycles[0])

# The decomposition: one simple piece per cycle with a singular point.
w = WeightSystem(
    genus=1,
    fixed_cycles=(
        FixedCycle.from_pairs([(1, 0), (0, 1)]),      # regular points only
        FixedCycle.from_pairs([(1, 0), (2, 5)]),      # singular points
        FixedCycle.from_pairs([(1, 1), (4, 5), (0, 1)]),
    ),
)
d = decompose(w)
print("\nmanifold part:", d.manifold_part.circle_count, "circles,",
      d.manifold_part.cycle_count, "cycles")
for k, piece in enumerate(d.simple_pieces):
    print(f"piece {k}:", piece.fixed_cycles[0])
print("gluings:", d.gluings)

# Folding the sums back recovers the original system up to isomorphism.
print("\nround trip:", is_isomorphic(reassemble(d), w))
