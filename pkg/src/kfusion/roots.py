"""Root data of the simple simply connected compact Lie groups.

Coordinate conventions, fixed once and used everywhere downstream:

* a Weight is an integer tuple of coordinates in the fundamental-weight
  basis, so pairing a weight with the i-th simple coroot reads off the
  i-th coordinate;
* a Coweight is an integer tuple in the simple-coroot basis;
* the pairing between a Weight and a Coweight is the plain dot product;
* cartan[i][j] holds <alpha_j, alpha_i^vee>, so the fundamental-weight
  coordinates of alpha_j form the j-th column of the Cartan matrix.

The basic invariant form is normalized so long roots have squared length
two; its Gram matrix on the simple coroots is cartan[i][j] / d_j where
2 * d_j is the squared length of alpha_j.  The orientation of the maximal
torus is the ordered simple-coroot basis, which makes the sign character
of the Weyl group the determinant in these coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import InvalidType, ResourceLimit
from .linalg import (
    IntMatrix,
    det,
    identity_matrix,
    invert,
    invert_unimodular,
    mat_mul,
    mat_vec,
    transpose,
    vec_sub,
)

Weight = tuple[int, ...]
Coweight = tuple[int, ...]

# largest Weyl group we will ever list explicitly
WEYL_ORDER_LIMIT = 10**6

_ADMISSIBLE = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 3,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class LieType:
    """An admissible family letter and rank, e.g. LieType('G', 2)."""

    family: str
    rank: int

    def __post_init__(self):
        check = _ADMISSIBLE.get(self.family)
        if check is None or not check(self.rank):
            raise InvalidType(f"no simple type {self.family}{self.rank}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_lie_type(name: str) -> LieType:
    """Parse a label like 'A2' or 'E8' into a LieType."""
    name = name.strip()
    if len(name) < 2 or not name[0].isalpha() or not name[1:].isdigit():
        raise InvalidType(f"cannot parse Lie type {name!r}")
    return LieType(name[0].upper(), int(name[1:]))


def _dynkin_edges(family: str, n: int) -> list[tuple[int, int]]:
    if family in "ABCFG":
        return [(i, i + 1) for i in range(n - 1)]
    if family == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    # Bourbaki numbering for E: node 2 hangs off node 4 (1-based)
    edges = [(0, 2), (2, 3), (1, 3), (3, 4), (4, 5)]
    if n >= 7:
        edges.append((5, 6))
    if n == 8:
        edges.append((6, 7))
    return edges


def _cartan_matrix(family: str, n: int) -> IntMatrix:
    mat = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _dynkin_edges(family, n):
        mat[i][j] = mat[j][i] = -1
    # double and triple bonds; mat[i][j] = <alpha_j, alpha_i^vee>
    if family == "B":
        mat[n - 1][n - 2] = -2
    elif family == "C":
        mat[n - 2][n - 1] = -2
    elif family == "F":
        mat[2][1] = -2
    elif family == "G":
        mat[0][1] = -3
    return tuple(map(tuple, mat))


def _weyl_order(family: str, n: int) -> int:
    if family == "A":
        return factorial(n + 1)
    if family in "BC":
        return 2**n * factorial(n)
    if family == "D":
        return 2 ** (n - 1) * factorial(n)
    if family == "F":
        return 1152
    if family == "G":
        return 12
    return {6: 51840, 7: 2903040, 8: 696729600}[n]


@dataclass(frozen=True)
class RootDatum:
    """Immutable root datum in the coordinates described in the module docstring."""

    family: str
    rank: int
    cartan: IntMatrix
    simple_roots: tuple[Weight, ...]
    simple_coroots: tuple[Coweight, ...]
    positive_roots: tuple[Weight, ...]
    positive_root_simple_coords: tuple[tuple[int, ...], ...]
    positive_coroots: tuple[Coweight, ...]
    rho: Weight
    basic_gram: tuple[tuple[int, ...], ...]
    weyl_order: int
    reflections: tuple[IntMatrix, ...]
    simple_lengths: tuple[Fraction, ...]
    root_lengths: tuple[Fraction, ...]
    highest_root: Weight
    comarks: Coweight

    @property
    def lie_type(self) -> LieType:
        return LieType(self.family, self.rank)

    @property
    def dual_coxeter_number(self) -> int:
        return 1 + sum(self.comarks)

    @property
    def adjoint_weight(self) -> Weight:
        return self.highest_root

    def pairing(self, weight, coweight) -> int:
        """<weight, coweight> in the fixed coordinates."""
        return sum(a * b for a, b in zip(weight, coweight))

    def coroot_pairing(self, weight, index: int) -> int:
        """<weight, alpha_index^vee>."""
        return weight[index]

    def theta_pairing(self, weight) -> int:
        """<weight, theta^vee> with theta the highest root."""
        return sum(a * b for a, b in zip(weight, self.comarks))

    def in_root_lattice(self, weight) -> bool:
        coords = mat_vec(invert(self.cartan), weight)
        return all(x.denominator == 1 for x in coords)


def _simple_lengths(cartan: IntMatrix, family: str, n: int) -> tuple[Fraction, ...]:
    """Solve d_i * cartan[i][j] = d_j * cartan[j][i] along the Dynkin graph."""
    d = [Fraction(0)] * n
    d[0] = Fraction(1)
    pending = [0]
    while pending:
        i = pending.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] == 0:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                pending.append(j)
    if any(x == 0 for x in d):
        raise InvalidType(f"disconnected diagram for {family}{n}")
    return tuple(d)


def _close_roots(cartan: IntMatrix, n: int):
    """Reflection closure of the simple roots.

    Roots are tracked as (fundamental coords, simple-root coords); the
    reflection s_i subtracts coordinate i of the fundamental coords from
    slot i of the simple-root coords.
    """
    columns = transpose(cartan)
    simple = [(columns[i], tuple(1 if j == i else 0 for j in range(n))) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        fresh = []
        for fund, supp in frontier:
            for i in range(n):
                c = fund[i]
                if c == 0:
                    continue
                new_fund = vec_sub(fund, tuple(c * x for x in columns[i]))
                new_supp = tuple(x - c if j == i else x for j, x in enumerate(supp))
                root = (new_fund, new_supp)
                if root not in seen:
                    seen.add(root)
                    fresh.append(root)
        frontier = fresh
    positive = sorted(
        (supp, fund) for fund, supp in seen if all(x >= 0 for x in supp)
    )
    assert 2 * len(positive) == len(seen)
    return [(fund, supp) for supp, fund in positive]


@lru_cache(maxsize=None)
def _build(family: str, rank: int) -> RootDatum:
    n = rank
    cartan = _cartan_matrix(family, n)
    d_raw = _simple_lengths(cartan, family, n)
    roots = _close_roots(cartan, n)

    def norm(supp) -> Fraction:
        # (beta | beta) with the un-normalized d_raw, via (alpha_i|alpha_j) = d_i c_ij
        return sum(
            d_raw[i] * cartan[i][j] * supp[i] * supp[j]
            for i in range(n)
            for j in range(n)
        )

    top = max(norm(supp) for _, supp in roots)
    scale = Fraction(2) / top
    d = tuple(x * scale for x in d_raw)
    root_lengths = tuple(norm(supp) * scale / 2 for _, supp in roots)

    gram_frac = [
        [Fraction(cartan[i][j]) / d[j] for j in range(n)] for i in range(n)
    ]
    for i in range(n):
        for j in range(n):
            assert gram_frac[i][j].denominator == 1
            assert gram_frac[i][j] == gram_frac[j][i]
    gram = tuple(tuple(int(x) for x in row) for row in gram_frac)

    # highest root: unique positive root of maximal height
    heights = [sum(supp) for _, supp in roots]
    hi = heights.index(max(heights))
    theta_fund, theta_supp = roots[hi]
    assert root_lengths[hi] == 1, "highest root must be long"
    comarks = tuple(int(c * d[i]) for i, c in enumerate(theta_supp))

    def coroot(supp, length) -> Coweight:
        coords = tuple(Fraction(supp[i]) * d[i] / length for i in range(n))
        assert all(x.denominator == 1 for x in coords)
        return tuple(int(x) for x in coords)

    positive_coroots = tuple(
        coroot(supp, root_lengths[k]) for k, (_, supp) in enumerate(roots)
    )

    rho = (1,) * n
    half_sum = tuple(Fraction(sum(fund[i] for fund, _ in roots), 2) for i in range(n))
    assert tuple(int(x) for x in half_sum) == rho

    columns = transpose(cartan)
    reflections = tuple(
        tuple(
            tuple((1 if m == j else 0) - (columns[i][m] if j == i else 0) for j in range(n))
            for m in range(n)
        )
        for i in range(n)
    )

    return RootDatum(
        family=family,
        rank=n,
        cartan=cartan,
        simple_roots=columns,
        simple_coroots=identity_matrix(n),
        positive_roots=tuple(fund for fund, _ in roots),
        positive_root_simple_coords=tuple(supp for _, supp in roots),
        positive_coroots=positive_coroots,
        rho=rho,
        basic_gram=gram,
        weyl_order=_weyl_order(family, n),
        reflections=reflections,
        simple_lengths=d,
        root_lengths=root_lengths,
        highest_root=theta_fund,
        comarks=comarks,
    )


def build_root_datum(lie_type: LieType | str) -> RootDatum:
    """Construct the root datum for an admissible simple type."""
    if isinstance(lie_type, str):
        lie_type = parse_lie_type(lie_type)
    return _build(lie_type.family, lie_type.rank)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element as its matrix on fundamental-weight coordinates."""

    matrix: IntMatrix
    sign: int

    def apply(self, weight) -> tuple:
        return mat_vec(self.matrix, weight)

    def inverse(self) -> "WeylElement":
        return WeylElement(invert_unimodular(self.matrix), self.sign)


@lru_cache(maxsize=None)
def coweight_matrix(w: WeylElement) -> IntMatrix:
    """Matrix of w on simple-coroot coordinates (inverse transpose)."""
    return transpose(invert_unimodular(w.matrix))


@lru_cache(maxsize=None)
def _weyl_elements(family: str, rank: int) -> tuple[WeylElement, ...]:
    datum = _build(family, rank)
    if datum.weyl_order > WEYL_ORDER_LIMIT:
        raise ResourceLimit(
            f"Weyl group of {family}{rank} has order {datum.weyl_order}, "
            f"above the explicit-listing limit {WEYL_ORDER_LIMIT}"
        )
    ident = identity_matrix(rank)
    signs = {ident: 1}
    frontier = [ident]
    while frontier:
        fresh = []
        for mat in frontier:
            s = signs[mat]
            for gen in datum.reflections:
                prod = mat_mul(gen, mat)
                if prod not in signs:
                    signs[prod] = -s
                    fresh.append(prod)
        frontier = fresh
    assert len(signs) == datum.weyl_order
    return tuple(WeylElement(mat, signs[mat]) for mat in sorted(signs))


def weyl_group(datum: RootDatum) -> tuple[WeylElement, ...]:
    """The full Weyl group, in a deterministic order.

    Refuses to list groups of order above WEYL_ORDER_LIMIT.
    """
    return _weyl_elements(datum.family, datum.rank)


def simple_reflection(datum: RootDatum, i: int) -> WeylElement:
    return WeylElement(datum.reflections[i], -1)


def dominant_representative(datum: RootDatum, weight) -> tuple[Weight, int, bool]:
    """Fold a weight into the dominant chamber by simple reflections.

    Returns (dominant weight, sign of the folding element, stabilized),
    where stabilized reports a nontrivial stabilizer, i.e. the dominant
    representative lies on a chamber wall.
    """
    current = tuple(weight)
    sign = 1
    while True:
        i = next((j for j, x in enumerate(current) if x < 0), None)
        if i is None:
            break
        current = mat_vec(datum.reflections[i], current)
        sign = -sign
    return current, sign, any(x == 0 for x in current)


def weyl_orbit(datum: RootDatum, weight) -> set:
    """Full Weyl orbit of a weight via closure under simple reflections."""
    start = tuple(weight)
    seen = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for value in frontier:
            for mat in datum.reflections:
                image = mat_vec(mat, value)
                if image not in seen:
                    seen.add(image)
                    fresh.append(image)
        frontier = fresh
    return seen


def root_is_positive(datum: RootDatum, root_fund) -> bool:
    """Decide positivity of a root given in fundamental-weight coordinates."""
    coords = mat_vec(invert(datum.cartan), root_fund)
    assert all(x.denominator == 1 for x in coords)
    return all(x >= 0 for x in coords)


def element_sign_check(datum: RootDatum, w: WeylElement) -> bool:
    """sign(w) must equal both det(matrix) and the length parity."""
    negatives = sum(
        1 for root in datum.positive_roots if not root_is_positive(datum, w.apply(root))
    )
    return det(w.matrix) == w.sign and (-1) ** negatives == w.sign
