"""Weight systems and the legality rules.

A closed orientable 4-space with an effective isometric torus action is
classified by its weighted orbit space: a compact surface whose boundary
and interior carry isotropy labels.  This script builds a few weight
systems by hand, shows what the validator accepts, and what each rule
rejects.
"""

from t2orbits import (
    ExceptionalOrbit,
    FixedCycle,
    IsotropyPair,
    WeightSystem,
    classify_fixed_point,
    make_pair,
    validate,
)

# Circle subgroups of the torus are named by coprime pairs, up to a
# simultaneous sign flip.  make_pair picks the canonical representative.
print("G(2,-5)  ->", make_pair(2, -5))
print("G(-1,0)  ->", make_pair(-1, 0))

# A boundary circle made of two fixed points: between consecutive fixed
# points runs an arc of circular orbits, labelled by its isotropy pair.
# The determinant of adjacent pairs tells the fixed point's type:
# +-1 is a regular point (3-sphere space of directions), anything else
# a topologically singular one (lens space).
cycle = FixedCycle.from_pairs([(1, 0), (2, 5)])
print("\ncycle:", cycle)
for w, left, right, f in cycle.fixed_points():
    print(f"  fixed point {w}: {left}|{right}  f = {f}  type = {classify_fixed_point(f)}")

# The full invariant tuple: obstruction pair, orientation, genus, circle
# boundaries, fixed cycles, exceptional Seifert triples.
system = WeightSystem(
    genus=1,
    circle_boundaries=(IsotropyPair(1, 1),),
    fixed_cycles=(cycle,),
    exceptional=(ExceptionalOrbit(3, 1, 2),),
)
print("\nfull system legal?", validate(system).is_legal)

# The validator reports every violated rule instead of raising.
print("\nan illegal system and its report:")
bad = WeightSystem(
    obstruction=(1, 0),               # obstruction needs a closed orbit space
    genus=-1,                         # genus must be nonnegative
    fixed_cycles=(
        # stored determinant 7 does not match the representatives, and a
        # two-point cycle must have f1 = -f2
        FixedCycle((IsotropyPair(1, 0), IsotropyPair(2, 5)), (7, 1)),
    ),
    exceptional=(ExceptionalOrbit(4, 2, 0),),  # gcd(4, 2, 0) != 1
)
for line in validate(bad).lines():
    print("  -", line)
