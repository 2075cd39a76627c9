"""Finite-dimensional representation theory: weight systems, dimensions,
trace forms, and the level of a representation.

Multiplicities come from the Freudenthal recursion, run bottom-up over the
weight poset with exact rational arithmetic.  The Weyl dimension formula is
implemented independently so the two can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotScalar, ResourceLimit
from .linalg import invert, mat_vec, vec_add, vec_sub
from .roots import RootDatum, Weight, dominant_representative

DEFAULT_WEIGHT_LIMIT = 100_000


def _require_dominant(weight) -> Weight:
    hw = tuple(int(x) for x in weight)
    if any(x < 0 for x in hw):
        raise ValueError(f"highest weight must be dominant, got {hw}")
    return hw


@dataclass
class WeightSystem:
    """All weights of an irreducible representation with multiplicities."""

    highest: Weight
    entries: dict[Weight, int]

    def total(self) -> int:
        return sum(self.entries.values())

    def multiplicity(self, weight) -> int:
        return self.entries.get(tuple(weight), 0)


def _weight_norm_matrix(datum: RootDatum):
    """Gram matrix of the basic form on fundamental-weight coordinates."""
    inv = invert(datum.cartan)
    d = datum.simple_lengths
    return tuple(
        tuple(d[i] * inv[i][j] for j in range(datum.rank)) for i in range(datum.rank)
    )


def weight_multiplicities(
    datum: RootDatum, highest, *, max_weights: int = DEFAULT_WEIGHT_LIMIT
) -> WeightSystem:
    """Weight system of the irreducible representation with the given
    highest weight, by the Freudenthal recursion.

    Weights are processed by depth (height of highest - weight); each
    multiplicity only consults strictly smaller depths, so a single pass
    suffices.  Non-dominant weights are folded to their dominant
    representative, whose depth is strictly smaller.  Raises ResourceLimit
    if the weight system exceeds max_weights.
    """
    hw = _require_dominant(highest)
    n = datum.rank
    rho = datum.rho
    alphas = datum.simple_roots
    quad = _weight_norm_matrix(datum)

    def norm2(vec) -> Fraction:
        image = mat_vec(quad, vec)
        return sum(a * b for a, b in zip(vec, image))

    top = norm2(vec_add(hw, rho))
    # positive roots with their coroots, lengths, and heights
    posdata = [
        (
            datum.positive_roots[k],
            datum.positive_coroots[k],
            datum.root_lengths[k],
            sum(datum.positive_root_simple_coords[k]),
        )
        for k in range(len(datum.positive_roots))
    ]

    computed: dict[Weight, int] = {hw: 1}
    weights: dict[Weight, int] = {hw: 1}
    current = [hw]
    depth = 0

    def freudenthal(mu, mu_depth) -> int:
        acc = Fraction(0)
        for root, coroot, length, height in posdata:
            j = 1
            while j * height <= mu_depth:
                nu = vec_add(mu, tuple(j * x for x in root))
                m = computed.get(nu, 0)
                if m:
                    acc += m * length * datum.pairing(nu, coroot)
                j += 1
        denom = top - norm2(vec_add(mu, rho))
        assert denom > 0
        value = 2 * acc / denom
        assert value.denominator == 1 and value >= 0
        return int(value)

    while current:
        depth += 1
        candidates = sorted(
            {vec_sub(mu, alphas[i]) for mu in current for i in range(n)}
        )
        current = []
        for mu in candidates:
            if mu in computed:
                continue
            if all(x >= 0 for x in mu):
                m = freudenthal(mu, depth)
            else:
                folded, _, _ = dominant_representative(datum, mu)
                m = computed.get(folded, 0)
            computed[mu] = m
            if m:
                weights[mu] = m
                current.append(mu)
                if len(weights) > max_weights:
                    raise ResourceLimit(
                        f"weight system of {hw} exceeds {max_weights} weights"
                    )
    return WeightSystem(highest=hw, entries=weights)


def dimension(datum: RootDatum, highest) -> int:
    """Weyl dimension formula as a product over positive coroots."""
    hw = _require_dominant(highest)
    shifted = vec_add(hw, datum.rho)
    result = Fraction(1)
    for coroot in datum.positive_coroots:
        result *= Fraction(datum.pairing(shifted, coroot), datum.pairing(datum.rho, coroot))
    assert result.denominator == 1
    return int(result)


def trace_form(datum: RootDatum, highest, *, max_weights: int = DEFAULT_WEIGHT_LIMIT):
    """Gram matrix on the simple coroots of the trace form of the
    representation: b(x, y) = sum over weights of mult * <mu, x><mu, y>."""
    system = weight_multiplicities(datum, highest, max_weights=max_weights)
    n = datum.rank
    mat = [[0] * n for _ in range(n)]
    for mu, mult in system.entries.items():
        for i in range(n):
            if mu[i] == 0:
                continue
            for j in range(n):
                mat[i][j] += mult * mu[i] * mu[j]
    return tuple(map(tuple, mat))


def level_of(datum: RootDatum, highest, *, max_weights: int = DEFAULT_WEIGHT_LIMIT) -> int:
    """The unique integer k with trace_form = k * basic_gram.

    Raises NotScalar if no such scalar exists.  The trivial representation
    gives 0, which callers must treat as a degenerate (non-regular) form.
    """
    form = trace_form(datum, highest, max_weights=max_weights)
    gram = datum.basic_gram
    n = datum.rank
    k = Fraction(form[0][0]) / gram[0][0]
    for i in range(n):
        for j in range(n):
            if Fraction(form[i][j]) != k * gram[i][j]:
                raise NotScalar(
                    f"trace form of {tuple(highest)} is not a multiple of the basic form"
                )
    if k.denominator != 1 or k < 0:
        raise NotScalar(f"trace form scalar {k} is not a nonnegative integer")
    return int(k)
