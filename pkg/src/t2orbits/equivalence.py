"""Canonical forms of weight systems and the isomorphism decision procedure.

Two spaces are equivariantly homeomorphic exactly when their weighted orbit
spaces are isomorphic: related by an orientation and weight preserving
homeomorphism.  On the level of the stored data the admitted presentational
symmetries are

* permuting the members of each multiset,
* rotating the starting index of a fixed cycle,
* flipping the sign representative of any single cycle entry (which negates
  the two adjacent determinants and nothing else).

``STRICT`` mode quotients by exactly these.  ``WEAK`` mode additionally
quotients by reparametrizations of the torus (a common unimodular basis
change applied to every isotropy pair) and by reversing the orientation,
which is the natural reading when the torus comes with no preferred basis.

Canonicalization of one cycle is an exhaustive search over the r rotations
and 2^r sign patterns, so the cost grows as r^2 * 2^r per cycle; fine at
desk scale (r <= 12 or so).  The product of the signs of the determinants
around a cycle is invariant under all flips and makes a cheap prefilter
when comparing very long cycles by hand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from functools import lru_cache

from .core import (
    ExceptionalOrbit,
    FixedCycle,
    IsotropyPair,
    WeightSystem,
    require_legal,
)
from .errors import NotUnimodular
from .localmodels import _minimal_bezout

Matrix = tuple  # ((a, b), (c, d)) acting on column vectors (m, n)

IDENTITY: Matrix = ((1, 0), (0, 1))


class EquivalenceMode(Enum):
    STRICT = "strict"
    WEAK = "weak"

    def __str__(self) -> str:
        return self.value


@lru_cache(maxsize=1 << 18)
def _canonical_flat(flat: tuple) -> tuple:
    """Lexicographically minimal presentation of a cycle, as entry keys.

    ``flat`` is (m, n, f) per entry; the result is a tuple of entry keys
    (|f|, f, m, n), minimized over all rotations of the starting index and
    all per-entry sign flips.  A flip of entry w negates the stored pair and
    the determinants at w-1 and w.
    """
    r = len(flat) // 3
    ms = flat[0::3]
    ns = flat[1::3]
    fs = flat[2::3]
    absf = tuple(abs(f) for f in fs)
    best = None
    for mask in range(1 << r):
        signs = [-1 if mask >> w & 1 else 1 for w in range(r)]
        quads = [
            (absf[w], signs[w] * signs[(w + 1) % r] * fs[w],
             signs[w] * ms[w], signs[w] * ns[w])
            for w in range(r)
        ]
        for rot in range(r):
            key = tuple(quads[rot:] + quads[:rot])
            if best is None or key < best:
                best = key
    return best


def _cycle_from_key(key: tuple) -> FixedCycle:
    pairs = tuple(IsotropyPair(m, n) for _, _, m, n in key)
    dets = tuple(f for _, f, _, _ in key)
    return FixedCycle(pairs, dets)


def _cycle_key(cycle: FixedCycle) -> tuple:
    # Stash the canonical key on the immutable instance; cycles are shared
    # between systems, so this turns repeat canonicalization into a lookup.
    key = cycle.__dict__.get("_ckey")
    if key is None:
        key = _canonical_flat(cycle.flat())
        cycle.__dict__["_ckey"] = key
    return key


def canonical_cycle(cycle: FixedCycle) -> FixedCycle:
    """The canonical representative of a cycle under rotations and sign flips.

    Entries are compared by (|f|, f, m, n); the result is the
    lexicographically minimal presentation, so equal outputs characterize
    equal cycles-up-to-presentation.  Idempotent, and repeat calls on the
    same instance return the same object.
    """
    canonical = cycle.__dict__.get("_canonical")
    if canonical is None:
        key = _cycle_key(cycle)
        canonical = _cycle_from_key(key)
        canonical.__dict__["_ckey"] = key
        canonical.__dict__["_canonical"] = canonical
        cycle.__dict__["_canonical"] = canonical
    return canonical


@dataclass(frozen=True)
class CanonicalForm:
    """A totally ordered, deterministic serialization of a weight system.

    Two legal systems have equal canonical forms in a given mode exactly
    when they are isomorphic in that mode.  Forms of different modes never
    compare equal.
    """

    mode: EquivalenceMode
    obstruction: tuple
    orientation: int
    genus: int
    circle_boundaries: tuple
    cycle_keys: tuple
    exceptional: tuple

    @property
    def key(self) -> tuple:
        return (self.mode.value, self.obstruction, self.orientation, self.genus,
                self.circle_boundaries, self.cycle_keys, self.exceptional)

    def __lt__(self, other: "CanonicalForm") -> bool:
        return self.key < other.key

    def to_weight_system(self) -> WeightSystem:
        """Rebuild a weight system presenting exactly this canonical form."""
        return WeightSystem(
            obstruction=self.obstruction,
            orientation=self.orientation,
            genus=self.genus,
            circle_boundaries=tuple(IsotropyPair(m, n) for m, n in self.circle_boundaries),
            fixed_cycles=tuple(_cycle_from_key(k) for k in self.cycle_keys),
            exceptional=tuple(ExceptionalOrbit(*t) for t in self.exceptional),
        )


def _strict_components(system: WeightSystem) -> tuple:
    """The STRICT canonical data, as a plain comparable tuple."""
    if system.circle_boundaries:
        circles = tuple(sorted((p.m, p.n) for p in
                               (q.canonical() for q in system.circle_boundaries)))
    else:
        circles = ()
    raw = system.fixed_cycles
    if not raw:
        cycles = ()
    elif len(raw) == 1:
        cycles = (_cycle_key(raw[0]),)
    else:
        cycles = tuple(sorted(map(_cycle_key, raw)))
    if system.exceptional:
        exceptional = tuple(sorted(e.key() for e in system.exceptional))
    else:
        exceptional = ()
    return (system.obstruction, system.orientation, system.genus,
            circles, cycles, exceptional)


def _strict_form(system: WeightSystem, mode: EquivalenceMode) -> CanonicalForm:
    obstruction, orientation, genus, circles, cycles, exceptional = \
        _strict_components(system)
    return CanonicalForm(
        mode=mode,
        obstruction=obstruction,
        orientation=orientation,
        genus=genus,
        circle_boundaries=circles,
        cycle_keys=cycles,
        exceptional=exceptional,
    )


def apply_basis_change(system: WeightSystem, matrix: Matrix) -> WeightSystem:
    """Reparametrize the torus: every pair becomes A*(m, n).

    Stored determinants scale by det(A) and the obstruction pair transforms
    as a vector, so legality is preserved.  Raises :class:`NotUnimodular`
    unless det(A) is +1 or -1.
    """
    (a, b), (c, d) = matrix
    det = a * d - b * c
    if det not in (1, -1):
        raise NotUnimodular(f"matrix {matrix} has determinant {det}")

    def act(p: IsotropyPair) -> IsotropyPair:
        return IsotropyPair(a * p.m + b * p.n, c * p.m + d * p.n)

    b1, b2 = system.obstruction
    return replace(
        system,
        obstruction=(a * b1 + b * b2, c * b1 + d * b2),
        circle_boundaries=tuple(act(p) for p in system.circle_boundaries),
        fixed_cycles=tuple(
            FixedCycle(tuple(act(p) for p in cy.pairs),
                       tuple(det * f for f in cy.dets))
            for cy in system.fixed_cycles
        ),
    )


def reverse_orientation(system: WeightSystem) -> WeightSystem:
    """The same action viewed with the opposite orientation.

    Flips the orientation sign, negates the obstruction, reverses every
    cycle (each determinant re-attaches to the reversed adjacency with a
    sign flip) and conjugates every Seifert triple by gamma -> alpha - gamma
    (mod alpha).  An involution up to presentation.
    """

    def rev(cycle: FixedCycle) -> FixedCycle:
        r = len(cycle)
        pairs = tuple(reversed(cycle.pairs))
        dets = tuple(-cycle.dets[r - 2 - j] if j < r - 1 else -cycle.dets[r - 1]
                     for j in range(r))
        return FixedCycle(pairs, dets)

    b1, b2 = system.obstruction
    return replace(
        system,
        obstruction=(-b1, -b2),
        orientation=-system.orientation,
        fixed_cycles=tuple(rev(c) for c in system.fixed_cycles),
        exceptional=tuple(
            ExceptionalOrbit(e.alpha,
                             (e.alpha - e.gamma1) % e.alpha,
                             (e.alpha - e.gamma2) % e.alpha)
            for e in system.exceptional
        ),
    )


def _mat_mul(x: Matrix, y: Matrix) -> Matrix:
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _mat_inv(x: Matrix) -> Matrix:
    (a, b), (c, d) = x
    det = a * d - b * c
    return ((d * det, -b * det), (-c * det, a * det))


def _completion_to_first_vector(m: int, n: int) -> Matrix:
    """A determinant +1 matrix sending the primitive vector (m, n) to (1, 0)."""
    # Rows (x, y) and (-n, m) with x*m + y*n = 1.
    p, q = _minimal_bezout(-n, m)  # p*m - q*(-n) = 1, i.e. p*m + q*n = 1
    return ((p, q), (-n, m))


def _basis_candidates(system: WeightSystem) -> list:
    """Finite set of basis changes over which WEAK forms are minimized.

    For each pair P occurring in the system (and its negative), take a
    unimodular matrix sending P to (1, 0); the residual stabilizer of (1, 0)
    is the shears [[1, t], [0, +-1]], and t is bounded by Euclidean
    reduction of the images of the remaining pairs.  Every candidate is
    anchored this way (a bare identity would break the correspondence
    between the candidate sets of W and of A*W); only a system with no
    pairs and no obstruction, on which basis changes act trivially, falls
    back to the identity.  The construction is a canonical-form convention:
    complete on the enumerated test sets, where it is cross-validated
    against brute force.
    """
    pairs = []
    seen = set()
    for p in system.all_pairs():
        c = p.canonical()
        if (c.m, c.n) not in seen:
            seen.add((c.m, c.n))
            pairs.append(c)
    anchors = list(pairs)
    if not anchors and system.obstruction != (0, 0):
        b1, b2 = system.obstruction
        g = math.gcd(b1, b2)
        anchors.append(IsotropyPair(b1 // g, b2 // g))
        pairs = anchors

    if not anchors:
        return [IDENTITY]
    candidates = set()
    vectors = [(p.m, p.n) for p in pairs]
    for anchor in anchors:
        for am, an in ((anchor.m, anchor.n), (-anchor.m, -anchor.n)):
            base = _completion_to_first_vector(am, an)
            shear_ts = {0}
            for (vm, vn) in vectors:
                x = base[0][0] * vm + base[0][1] * vn
                y = base[1][0] * vm + base[1][1] * vn
                if y != 0:
                    t0 = -(x // y)
                    shear_ts.update((t0 - 2, t0 - 1, t0, t0 + 1, t0 + 2))
            shear_ts.update((-1, 1))
            for t in shear_ts:
                for d in (1, -1):
                    candidates.add(_mat_mul(((1, t), (0, d)), base))
    return sorted(candidates)


def _abs_map(value):
    if type(value) is tuple:
        return tuple(_abs_map(x) for x in value)
    return abs(value)


def _weak_rank(components: tuple) -> tuple:
    # Magnitude-first ordering.  A plain lexicographic minimum over strict
    # components is not coercive (larger shears make pair entries more
    # negative, hence "smaller"), so the entry-wise absolute values lead and
    # the exact components only break ties.  The optimum is then a
    # Euclidean-reduced configuration, which the candidate windows contain.
    return (_abs_map(components), components)


def _weak_argmin(system: WeightSystem) -> tuple:
    """Minimal strict form over orientation reversal and basis candidates.

    Returns (form, matrix, reversed) where ``matrix`` and ``reversed``
    witness the minimizing transformation.
    """
    best = None
    for flipped, base in ((False, system), (True, reverse_orientation(system))):
        for matrix in _basis_candidates(base):
            candidate = apply_basis_change(base, matrix)
            components = _strict_components(candidate)
            entry = (_weak_rank(components), matrix, flipped, components)
            if best is None or entry[0] < best[0]:
                best = entry
    _, matrix, flipped, components = best
    obstruction, orientation, genus, circles, cycles, exceptional = components
    form = CanonicalForm(EquivalenceMode.WEAK, obstruction, orientation, genus,
                         circles, cycles, exceptional)
    return form, matrix, flipped


def canonical_form(system: WeightSystem,
                   mode: EquivalenceMode = EquivalenceMode.STRICT) -> CanonicalForm:
    """Canonical form of a legal weight system in the given mode.

    Idempotent: the form of ``form.to_weight_system()`` is ``form`` again.
    Raises :class:`IllegalWeightSystem` on illegal input.
    """
    require_legal(system)
    if mode is EquivalenceMode.STRICT:
        return _strict_form(system, EquivalenceMode.STRICT)
    form, _, _ = _weak_argmin(system)
    return form


def is_isomorphic(first: WeightSystem, second: WeightSystem,
                  mode: EquivalenceMode = EquivalenceMode.STRICT) -> bool:
    """Decide orbit-space isomorphism by comparing canonical forms."""
    if mode is EquivalenceMode.STRICT:
        require_legal(first)
        require_legal(second)
        return _strict_components(first) == _strict_components(second)
    return canonical_form(first, mode) == canonical_form(second, mode)


@dataclass(frozen=True, slots=True)
class Witness:
    """A transformation exhibiting a WEAK isomorphism.

    Apply ``matrix`` as a basis change to the first system, after reversing
    its orientation when ``orientation_reversed`` is set, to reach a system
    STRICT-isomorphic to the second.
    """

    matrix: Matrix
    orientation_reversed: bool


def weak_witness(first: WeightSystem, second: WeightSystem) -> Witness | None:
    """A witnessing basis change / orientation flip, or None.

    Returns a witness exactly when the two systems are WEAK-isomorphic.
    """
    form1, mat1, flip1 = _weak_argmin(first)
    form2, mat2, flip2 = _weak_argmin(second)
    if form1 != form2:
        return None
    witness = Witness(_mat_mul(_mat_inv(mat2), mat1), flip1 ^ flip2)
    moved = first
    if witness.orientation_reversed:
        moved = reverse_orientation(moved)
    moved = apply_basis_change(moved, witness.matrix)
    if _strict_form(moved, EquivalenceMode.STRICT) != _strict_form(
            second, EquivalenceMode.STRICT):
        raise ArithmeticError("weak witness verification failed")
    return witness
