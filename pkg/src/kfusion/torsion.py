"""The finite detection subgroup of the maximal torus.

Writing T = Lie(T) / coroot lattice, the level form B pairs the coroot
lattice with T, and the subgroup killed by B consists of the rational
coweight classes x with gram * x integral.  A Smith normal form
U * gram * V = diag(d_1, ..., d_r) identifies this subgroup with the
direct sum of Z/d_i: the i-th generator is column i of V divided by d_i.
Its order is |det gram|, and the pairing (x, [c]) -> <c, x> mod 1 with
the coweight lattice modulo gram is perfect; verify_duality checks that
perfectness prime by prime instead of assuming it.

All element coordinates are exact rationals reduced componentwise into
[0, 1); characters are stored by their residues against the Smith
generators, so equality and phases never touch floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .affine import LevelForm
from .linalg import invert_unimodular, mat_vec, smith_normal_form, transpose
from .roots import WeylElement, Weight, coweight_matrix, weyl_group


@dataclass(frozen=True)
class TorsionElement:
    """An element of the detection subgroup.

    coords are rational simple-coroot coordinates, each in [0, 1);
    residues are the exponents against the Smith generators, residue i
    taken mod d_i.  Both forms are canonical, so default equality is exact.
    """

    coords: tuple[Fraction, ...]
    residues: tuple[int, ...]

    def order(self) -> int:
        n = 1
        for x in self.coords:
            d = x.denominator
            n = n * d // _gcd(n, d)
        return n


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class TorsionCharacter:
    """A character of the detection subgroup, as residues on the Smith
    generators: the phase on an element is sum(dual_i * residue_i / d_i)."""

    divisors: tuple[int, ...]
    dual: tuple[int, ...]

    def phase(self, element: TorsionElement) -> Fraction:
        """Phase in [0, 1); the character value is exp(2 pi i * phase)."""
        total = sum(
            Fraction(n * m, d)
            for n, m, d in zip(self.dual, element.residues, self.divisors)
        )
        return total % 1

    def compose(self, other: "TorsionCharacter") -> "TorsionCharacter":
        assert self.divisors == other.divisors
        dual = tuple(
            (a + b) % d for a, b, d in zip(self.dual, other.dual, self.divisors)
        )
        return TorsionCharacter(self.divisors, dual)


class TorsionSubgroup:
    """The kernel of the level form inside the maximal torus, with its
    Smith presentation, full element list, and Weyl action."""

    def __init__(self, lf: LevelForm):
        self.lf = lf
        self.datum = lf.datum
        divisors, u, v = smith_normal_form(lf.gram)
        assert all(d > 0 for d in divisors)
        self.elementary_divisors = divisors
        self._u = u
        self._v = v
        self._v_inv = invert_unimodular(v)
        self.order = 1
        for d in divisors:
            self.order *= d
        self.exponent = divisors[-1] if divisors else 1
        self.elements = tuple(
            self._from_residues(residues)
            for residues in product(*(range(d) for d in divisors))
        )
        self._index = {e.coords: e for e in self.elements}

    def _from_residues(self, residues) -> TorsionElement:
        coords = tuple(
            sum(Fraction(self._v[i][j] * residues[j], self.elementary_divisors[j])
                for j in range(len(residues))) % 1
            for i in range(self.datum.rank)
        )
        canonical = tuple(
            r % d for r, d in zip(self._residues_of(coords), self.elementary_divisors)
        )
        return TorsionElement(coords=coords, residues=canonical)

    def _residues_of(self, coords) -> tuple[int, ...]:
        smith = mat_vec(self._v_inv, coords)
        out = []
        for y, d in zip(smith, self.elementary_divisors):
            scaled = y * d
            assert scaled.denominator == 1
            out.append(int(scaled) % d)
        return tuple(out)

    def element_from_coords(self, coords) -> TorsionElement:
        """Canonical element for arbitrary rational coweight coordinates."""
        reduced = tuple(Fraction(x) % 1 for x in coords)
        member = self._index.get(reduced)
        if member is None:
            raise KeyError(f"{tuple(coords)} is not in the detection subgroup")
        return member

    def contains(self, coords) -> bool:
        integral = mat_vec(self.lf.gram, tuple(Fraction(x) for x in coords))
        return all(x.denominator == 1 for x in integral)

    def act(self, w: WeylElement, element: TorsionElement) -> TorsionElement:
        image = mat_vec(coweight_matrix(w), element.coords)
        return self.element_from_coords(image)

    def character_action(self, w: WeylElement, char: TorsionCharacter) -> TorsionCharacter:
        """(w . chi)(f) = chi(w^{-1} f)."""
        w_inv = w.inverse()
        dual = []
        for j, d in enumerate(self.elementary_divisors):
            generator = self.elements_generator(j)
            phase = char.phase(self.act(w_inv, generator))
            scaled = phase * d
            assert scaled.denominator == 1
            dual.append(int(scaled) % d)
        return TorsionCharacter(self.elementary_divisors, tuple(dual))

    def elements_generator(self, j: int) -> TorsionElement:
        residues = tuple(
            1 if i == j else 0 for i in range(len(self.elementary_divisors))
        )
        return self._from_residues(residues)

    def trivial_character(self) -> TorsionCharacter:
        return TorsionCharacter(
            self.elementary_divisors, (0,) * len(self.elementary_divisors)
        )


def torsion_subgroup(lf: LevelForm) -> TorsionSubgroup:
    return TorsionSubgroup(lf)


def restrict_character(lf: LevelForm, chi, group: TorsionSubgroup | None = None) -> TorsionCharacter:
    """Restriction of a global weight to the detection subgroup.

    The residue on Smith generator j is (V^T chi)_j mod d_j, because the
    generator has coordinates (column j of V) / d_j.  Translation by any
    image of the level form leaves the restriction unchanged.
    """
    if group is None:
        group = torsion_subgroup(lf)
    vt_chi = mat_vec(transpose(group._v), tuple(int(x) for x in chi))
    dual = tuple(x % d for x, d in zip(vt_chi, group.elementary_divisors))
    return TorsionCharacter(group.elementary_divisors, dual)


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def verify_duality(lf: LevelForm, group: TorsionSubgroup | None = None) -> bool:
    """Check that (x, [c]) -> <c, x> mod 1 is a perfect pairing between the
    detection subgroup and the coweight lattice modulo the Gram image.

    Both sides have the Smith invariants d_1 | ... | d_r; perfectness is
    equivalent to injectivity on p-torsion for every prime p dividing the
    order.  The p-torsion of the subgroup is spanned by (d_i / p) g_i over
    the i with p | d_i, and it pairs against the lattice side modulo p; on
    generators the scaled pairing matrix is ((U^{-1})^T V)[j][i] mod p,
    which must have full rank over F_p.
    """
    if group is None:
        group = torsion_subgroup(lf)
    divisors = group.elementary_divisors
    r = len(divisors)
    u_inv_t = transpose(invert_unimodular(group._u))
    pairing = tuple(
        tuple(sum(u_inv_t[j][t] * group._v[t][i] for t in range(r)) for i in range(r))
        for j in range(r)
    )
    for p in _prime_factors(group.order):
        support = [i for i, d in enumerate(divisors) if d % p == 0]
        size = len(support)
        rows = [[pairing[j][i] % p for j in support] for i in support]
        rank = 0
        for col in range(size):
            pivot = next((t for t in range(rank, size) if rows[t][col] % p), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            inv = pow(rows[rank][col], p - 2, p)
            rows[rank] = [(x * inv) % p for x in rows[rank]]
            for t in range(size):
                if t != rank and rows[t][col] % p:
                    f = rows[t][col]
                    rows[t] = [(x - f * y) % p for x, y in zip(rows[t], rows[rank])]
            rank += 1
        if rank != size:
            return False
    return True


def regular_orbits(group: TorsionSubgroup) -> list[tuple[TorsionElement, int]]:
    """Weyl orbits on the detection subgroup with trivial stabilizer.

    Returns (lexicographically least representative, orbit size) pairs,
    sorted by representative; every listed orbit size equals the Weyl
    group order.
    """
    elements = weyl_group(group.datum)
    full = len(elements)
    seen: set[tuple[Fraction, ...]] = set()
    out = []
    for element in sorted(group.elements, key=lambda e: e.coords):
        if element.coords in seen:
            continue
        orbit = {group.act(w, element) for w in elements}
        for member in orbit:
            seen.add(member.coords)
        if len(orbit) == full:
            rep = min(orbit, key=lambda e: e.coords)
            out.append((rep, len(orbit)))
    out.sort(key=lambda pair: pair[0].coords)
    return out
