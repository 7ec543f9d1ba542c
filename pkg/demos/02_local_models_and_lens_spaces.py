"""Local models at fixed points: lens spaces and chart gluings.

At a fixed point with adjacent isotropy pairs (m, n) and (m', n') the space
of directions is the lens space L(r, s) with r the absolute determinant and
s pinned by the congruences m*s = m', n*s = n' (mod r).  The two
solid-torus charts over the adjacent arcs glue along a unimodular torus
map whose second row is exactly (r, s).
"""

from t2orbits import (
    LensClass,
    bezout_complement,
    gluing_matrix,
    lens_equivalent,
    space_of_directions,
    suspension_of_lens,
)

# The complement (p, q) with p*n - q*m = 1 drives the construction.
for pair in [(1, 0), (0, 1), (2, 5), (3, -7)]:
    print(f"bezout_complement({pair}) = {bezout_complement(pair)}")

# The standard picture: left arc G(1,0), right arc G(p,q) gives L(q, p).
print("\n((1,0),(2,5)) ->", space_of_directions((1, 0), (2, 5)))
print("((1,0),(0,1)) ->", space_of_directions((1, 0), (0, 1)), "(the 3-sphere)")

# Independence of the Bezout choice: shifting (p, q) by multiples of the
# left pair moves s by multiples of r, so the lens class is unchanged.
left, right = (2, -3), (1, 2)
p, q = bezout_complement(left)
print(f"\nBezout shifts at ({left},{right}):")
for t in range(-2, 3):
    shifted = space_of_directions(left, right,
                                  bezout_pair=(p + t * left[0], q + t * left[1]))
    print(f"  t = {t:+d}: {shifted}")

# L(r, s) and L(r, -s mod r) are homeomorphic; that is the equivalence the
# gluing construction needs.  Note it does not identify inverse classes:
# swapping the two arcs inverts s mod r, which may give a different name.
print("\nlens_equivalent(L(5,2), L(5,3)):", lens_equivalent(LensClass(5, 2), LensClass(5, 3)))
print("swapped arcs:", space_of_directions(left, right),
      "vs", space_of_directions(right, left))

# The boundary identification of the two charts, always of determinant +1.
gm = gluing_matrix((1, 0), (2, 5))
print("\ngluing matrix for ((1,0),(2,5)):", gm, " det =", gm.determinant())

# Both fixed points of a suspension carry the same lens space up to
# homeomorphism, as the suspension picture demands.
susp = suspension_of_lens((1, 0), (2, 5))
for w, a, b, f in susp.fixed_cycles[0].fixed_points():
    print(f"suspension point {w}: {space_of_directions(a, b)}")
