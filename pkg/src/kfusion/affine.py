"""Level forms and the affine Weyl action on weights.

At level k the translation lattice acts on weights through the Gram matrix
of k times the basic invariant form: a coweight t shifts a weight by
gram * t.  Together with the finite Weyl group this generates the affine
Weyl group; its fundamental domain is the closed dominant alcove

    { chi : chi_i >= 0 for all i,  <chi, theta^vee> <= k }

with theta the highest root.  A weight is regular exactly when its alcove
representative is interior, and the representative with its folding sign
is the canonical datum attached to a regular orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DegenerateTwist, SingularInput
from .linalg import IntMatrix, det, mat_mul, mat_vec, vec_add, vec_sub
from .roots import (
    Coweight,
    RootDatum,
    Weight,
    WeylElement,
    coweight_matrix,
)
from .reps import level_of

_FOLD_LIMIT = 10**6


class _Singular:
    """Marker returned in place of a sign for wall-bound weights."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "SINGULAR"


SINGULAR = _Singular()


@dataclass(frozen=True)
class LevelForm:
    """A positive level together with its integral Gram matrix."""

    datum: RootDatum
    level: int
    gram: IntMatrix
    translation_map: IntMatrix

    def translation(self, coweight) -> Weight:
        """The weight by which the coweight translates, B(t, -)."""
        return mat_vec(self.translation_map, coweight)


def level_form(datum: RootDatum, level: int) -> LevelForm:
    """Level-k multiple of the basic form; degenerate levels are refused."""
    if level <= 0:
        raise DegenerateTwist(f"level must be positive, got {level}")
    gram = tuple(
        tuple(int(level * x) for x in row) for row in datum.basic_gram
    )
    if det(gram) == 0:
        raise DegenerateTwist("level form is degenerate")
    return LevelForm(datum=datum, level=level, gram=gram, translation_map=gram)


def level_form_from_rep(datum: RootDatum, highest) -> LevelForm:
    """Level form of the trace form of a representation.

    The trace form must be a positive multiple of the basic form; the
    trivial representation (level 0) is degenerate and refused.
    """
    k = level_of(datum, highest)
    if k == 0:
        raise DegenerateTwist(
            f"representation {tuple(highest)} has a zero trace form"
        )
    return level_form(datum, k)


@dataclass(frozen=True)
class AffineWeylElement:
    """Pair (translation coweight, finite Weyl part), acting as
    chi -> w(chi) + gram * t."""

    translation: Coweight
    linear: WeylElement

    @property
    def sign(self) -> int:
        return self.linear.sign


def compose(first: AffineWeylElement, second: AffineWeylElement) -> AffineWeylElement:
    """Product in the semidirect group: (t1, w1)(t2, w2) = (t1 + w1 t2, w1 w2)."""
    nmat = coweight_matrix(first.linear)
    shifted = mat_vec(nmat, second.translation)
    return AffineWeylElement(
        translation=vec_add(first.translation, shifted),
        linear=WeylElement(
            mat_mul(first.linear.matrix, second.linear.matrix),
            first.linear.sign * second.linear.sign,
        ),
    )


def act(lf: LevelForm, g: AffineWeylElement, chi) -> Weight:
    """Apply an affine Weyl element to a weight."""
    return vec_add(g.linear.apply(chi), lf.translation(g.translation))


@dataclass(frozen=True)
class OrbitRep:
    """Canonical representative of an affine Weyl orbit in the closed alcove."""

    weight: Weight
    is_regular: bool


def _fold(lf: LevelForm, chi) -> tuple[Weight, int]:
    """Reflect into the closed alcove, tracking the sign of the folding
    element.  Every step is a reflection, so each flips the sign."""
    datum = lf.datum
    k = lf.level
    theta = datum.highest_root
    current = tuple(int(x) for x in chi)
    sign = 1
    for _ in range(_FOLD_LIMIT):
        i = next((j for j, x in enumerate(current) if x < 0), None)
        if i is not None:
            current = mat_vec(datum.reflections[i], current)
            sign = -sign
            continue
        height = datum.theta_pairing(current)
        if height > k:
            current = vec_sub(current, tuple((height - k) * x for x in theta))
            sign = -sign
            continue
        return current, sign
    raise RuntimeError("alcove folding failed to terminate")


def _is_interior(lf: LevelForm, folded) -> bool:
    return all(x > 0 for x in folded) and lf.datum.theta_pairing(folded) < lf.level


def is_regular(lf: LevelForm, chi) -> bool:
    """True when the affine stabilizer of chi is trivial."""
    folded, _ = _fold(lf, chi)
    return _is_interior(lf, folded)


def canonicalize(lf: LevelForm, chi) -> tuple[OrbitRep, int | _Singular]:
    """Alcove representative of chi with the sign of the folding element.

    Singular weights get the SINGULAR marker instead of a sign: their
    folding element is only well defined up to the stabilizer, which meets
    both sign classes.
    """
    folded, sign = _fold(lf, chi)
    if _is_interior(lf, folded):
        return OrbitRep(weight=folded, is_regular=True), sign
    return OrbitRep(weight=folded, is_regular=False), SINGULAR


def enumerate_regular_orbits(lf: LevelForm) -> list[OrbitRep]:
    """All regular orbit representatives, in lexicographic order.

    These are the interior lattice points of the alcove: coordinates at
    least 1 with <chi, theta^vee> <= level - 1.
    """
    k = lf.level
    comarks = lf.datum.comarks
    reps = []
    for chi in product(range(1, k), repeat=lf.datum.rank):
        if sum(a * b for a, b in zip(chi, comarks)) <= k - 1:
            reps.append(OrbitRep(weight=chi, is_regular=True))
    return reps


def require_regular(lf: LevelForm, chi) -> tuple[OrbitRep, int]:
    """canonicalize, but singular input is an error."""
    rep, sign = canonicalize(lf, chi)
    if not rep.is_regular:
        raise SingularInput(f"weight {tuple(chi)} lies on a reflection wall")
    return rep, sign
