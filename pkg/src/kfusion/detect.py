"""Detection of orbit classes inside the character ring of the torsion
subgroup.

A regular weight chi restricts to a character of the detection subgroup;
antisymmetrizing over the Weyl group,

    Theta(chi) = sum over w of sign(w) * restriction(w . chi),

lands in the sign-isotypic part of the character ring.  Evaluating these
antisymmetrized sums at regular torsion elements gives the detection
matrix, a square matrix over Z[zeta_N] (N the exponent of the subgroup)
whose exact nonsingularity is what makes detection faithful.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .affine import LevelForm, OrbitRep, enumerate_regular_orbits, require_regular
from .cyclotomic import CycRing, cyc_ring, determinant_is_nonzero
from .errors import SingularInput
from .roots import weyl_group
from .torsion import (
    TorsionCharacter,
    TorsionElement,
    TorsionSubgroup,
    regular_orbits,
    restrict_character,
    torsion_subgroup,
)


@dataclass(frozen=True)
class CharacterSum:
    """Integer combination of torsion characters, sparse by character."""

    divisors: tuple[int, ...]
    coeffs: tuple[tuple[TorsionCharacter, int], ...]

    def coefficient(self, char: TorsionCharacter) -> int:
        for other, c in self.coeffs:
            if other == char:
                return c
        return 0

    def support_size(self) -> int:
        return len(self.coeffs)


def _sorted_sum(divisors, table: dict[TorsionCharacter, int]) -> CharacterSum:
    items = tuple(
        (char, c) for char, c in sorted(table.items(), key=lambda kv: kv[0].dual) if c
    )
    return CharacterSum(divisors=divisors, coeffs=items)


@dataclass(frozen=True)
class AntisymmetricClass:
    """A character sum lying in the sign-isotypic part.

    Carries the orbit representative it detects; constructing one outside
    theta() is possible but antisymmetry is then the caller's burden.
    """

    rep: OrbitRep
    element: CharacterSum


def antisymmetrize(lf: LevelForm, chi, group: TorsionSubgroup | None = None) -> CharacterSum:
    """sum of sign(w) * restriction(w . chi) over the Weyl group.

    Requires chi regular; regularity forces the |W| restricted characters
    to be pairwise distinct, which is asserted.
    """
    if group is None:
        group = torsion_subgroup(lf)
    require_regular(lf, chi)
    table: dict[TorsionCharacter, int] = {}
    for w in weyl_group(lf.datum):
        char = restrict_character(lf, w.apply(chi), group)
        assert char not in table, "regular weight restricted to a stabilized character"
        table[char] = w.sign
    return _sorted_sum(group.elementary_divisors, table)


def theta(lf: LevelForm, rep: OrbitRep, group: TorsionSubgroup | None = None) -> AntisymmetricClass:
    """Detection image of a regular orbit representative."""
    if not rep.is_regular:
        raise SingularInput(f"orbit of {rep.weight} is singular, nothing to detect")
    return AntisymmetricClass(rep=rep, element=antisymmetrize(lf, rep.weight, group))


def evaluate(x: CharacterSum, f: TorsionElement, ring: CycRing | None = None):
    """Value of a character sum at a torsion element, in Z[zeta_N]."""
    if ring is None:
        exponent = x.divisors[-1] if x.divisors else 1
        ring = cyc_ring(exponent)
    total = ring.zero
    for char, c in x.coeffs:
        total = ring.add(total, ring.scale(c, ring.from_phase(char.phase(f))))
    return total


def character_sum_action(group: TorsionSubgroup, w, x: CharacterSum) -> CharacterSum:
    """Push a character sum along a Weyl element (no sign attached)."""
    table: dict[TorsionCharacter, int] = {}
    for char, c in x.coeffs:
        moved = group.character_action(w, char)
        table[moved] = table.get(moved, 0) + c
    return _sorted_sum(group.elementary_divisors, table)


def is_antisymmetric(group: TorsionSubgroup, x: CharacterSum) -> bool:
    """True when every Weyl element reproduces x up to its sign."""
    for w in weyl_group(group.datum):
        moved = character_sum_action(group, w, x)
        scaled = tuple((char, w.sign * c) for char, c in x.coeffs)
        if moved.coeffs != tuple(sorted(scaled, key=lambda kv: kv[0].dual)):
            return False
    return True


@dataclass
class DetectionMatrix:
    """Rows are regular orbit representatives, columns regular torsion
    orbits; entries are exact cyclotomic evaluations of the detection map."""

    lf: LevelForm
    group: TorsionSubgroup
    basis: tuple[OrbitRep, ...]
    columns: tuple[TorsionElement, ...]
    ring: CycRing
    entries: tuple[tuple[tuple[int, ...], ...], ...] = field(repr=False)

    @cached_property
    def nonsingular(self) -> bool:
        return determinant_is_nonzero(self.ring, self.entries)


def detection_matrix(lf: LevelForm, group: TorsionSubgroup | None = None) -> DetectionMatrix:
    """Assemble the full detection matrix; square by the orbit counting
    identity, which is asserted rather than assumed."""
    if group is None:
        group = torsion_subgroup(lf)
    basis = tuple(enumerate_regular_orbits(lf))
    columns = tuple(rep for rep, _ in regular_orbits(group))
    assert len(basis) == len(columns), (
        f"regular orbit counts disagree: {len(basis)} weight orbits vs "
        f"{len(columns)} torsion orbits"
    )
    ring = cyc_ring(group.exponent)
    rows = []
    for rep in basis:
        image = antisymmetrize(lf, rep.weight, group)
        rows.append(tuple(evaluate(image, f, ring) for f in columns))
    return DetectionMatrix(
        lf=lf,
        group=group,
        basis=basis,
        columns=columns,
        ring=ring,
        entries=tuple(rows),
    )
