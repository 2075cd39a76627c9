"""The fusion ring: identity, coform, and structure constants.

Structure constants come from diagonalization.  Writing J_lam(f) for the
detection matrix entry and e(f) for the row of the identity class, the
ring characters are x_lam(f) = J_lam(f) / e(f) and the constants solve

    x_lam(f) * x_mu(f) = sum over nu of N[lam][mu][nu] * x_nu(f)

at every regular torsion orbit.  The antisymmetrized characters satisfy
the orthogonality sum over regular orbits [f] of J_lam(f) * conj(J_mu(f))
equal to |F| * delta, which inverts the system in closed form:

    N[lam][mu][nu] =
        (1/|F|) * sum over [f] of J_lam(f) J_mu(f) conj(J_nu(f)) / e(f).

Everything is exact; a non-integer constant raises instead of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .affine import LevelForm, OrbitRep, canonicalize, enumerate_regular_orbits
from .detect import DetectionMatrix, detection_matrix
from .errors import DimensionMismatch, NoIdentity, NonIntegral, SingularShift
from .roots import Weight
from .torsion import TorsionElement, torsion_subgroup


@dataclass(frozen=True)
class KClass:
    """Integer coefficient vector against the regular orbit basis."""

    coeffs: tuple[int, ...]

    def __add__(self, other: "KClass") -> "KClass":
        if len(self.coeffs) != len(other.coeffs):
            raise DimensionMismatch("cannot add classes of different lengths")
        return KClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "KClass":
        return KClass(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "KClass") -> "KClass":
        return self + (-other)


def basis_class(size: int, index: int) -> KClass:
    return KClass(tuple(1 if i == index else 0 for i in range(size)))


@dataclass(frozen=True)
class FusionRing:
    """Fusion ring data over the regular orbit basis."""

    lf: LevelForm
    basis: tuple[OrbitRep, ...]
    identity: KClass
    structure_constants: tuple[tuple[tuple[int, ...], ...], ...]
    columns: tuple[TorsionElement, ...]
    diagnostics: tuple[str, ...]
    detection: DetectionMatrix | None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index_of(self, weight: Weight) -> int:
        for i, rep in enumerate(self.basis):
            if rep.weight == tuple(weight):
                return i
        raise KeyError(f"{tuple(weight)} is not a basis representative")


def identity_class(lf: LevelForm) -> KClass:
    """The class of the orbit through rho; singular rho means no identity."""
    rho = lf.datum.rho
    rep, _ = canonicalize(lf, rho)
    if not rep.is_regular:
        raise NoIdentity(f"rho is singular at level {lf.level}")
    basis = enumerate_regular_orbits(lf)
    index = next(i for i, b in enumerate(basis) if b.weight == rep.weight)
    return basis_class(len(basis), index)


def _identity_index(lf: LevelForm, basis) -> int:
    rho = lf.datum.rho
    rep, _ = canonicalize(lf, rho)
    if not rep.is_regular:
        raise NoIdentity(f"rho is singular at level {lf.level}")
    return next(i for i, b in enumerate(basis) if b.weight == rep.weight)


def fusion_ring(lf: LevelForm) -> FusionRing:
    """Build the full ring.  Levels with no regular orbits give the empty
    ring; otherwise rho is regular and serves as the identity."""
    basis = tuple(enumerate_regular_orbits(lf))
    if not basis:
        return FusionRing(
            lf=lf,
            basis=(),
            identity=KClass(()),
            structure_constants=(),
            columns=(),
            diagnostics=(),
            detection=None,
        )
    group = torsion_subgroup(lf)
    dm = detection_matrix(lf, group)
    ring = dm.ring
    n = len(basis)
    cols = len(dm.columns)
    unit = _identity_index(lf, basis)
    e_row = dm.entries[unit]
    for f, value in zip(dm.columns, e_row):
        if ring.is_zero(value):
            raise NoIdentity(
                f"identity class vanishes at torsion element {f.coords}"
            )

    # 1/e(f) as an integer element over a positive denominator
    inverses = [ring.inverse_scaled(value) for value in e_row]
    lcm = 1
    for _, den in inverses:
        g = _gcd(lcm, den)
        lcm = lcm // g * den
    # u[tau][f] = (lcm / den_f) * conj(J_tau(f)) * e(f)^{-1}-numerator
    u = [
        [
            ring.scale(lcm // den, ring.mul(ring.conjugate(dm.entries[tau][f]), num))
            for f, (num, den) in enumerate(inverses)
        ]
        for tau in range(n)
    ]
    order = group.order
    divisor = lcm * order
    constants = [[[0] * n for _ in range(n)] for _ in range(n)]
    negatives = []
    for lam in range(n):
        for mu in range(lam, n):
            products = [
                ring.mul(dm.entries[lam][f], dm.entries[mu][f]) for f in range(cols)
            ]
            for tau in range(n):
                total = ring.zero
                for f in range(cols):
                    total = ring.add(total, ring.mul(products[f], u[tau][f]))
                head, *tail = total
                if any(tail) or head % divisor:
                    raise NonIntegral(
                        f"structure constant at {basis[lam].weight}, "
                        f"{basis[mu].weight}, {basis[tau].weight} is not an integer"
                    )
                value = head // divisor
                constants[lam][mu][tau] = value
                constants[mu][lam][tau] = value
                if value < 0:
                    negatives.append((lam, mu, tau, value))

    diagnostics = tuple(
        f"negative structure constant N[{basis[a].weight}][{basis[b].weight}]"
        f"[{basis[c].weight}] = {v}"
        for a, b, c, v in negatives
    )
    for lam in range(n):
        for tau in range(n):
            assert constants[unit][lam][tau] == (1 if lam == tau else 0), (
                "identity axiom failed in construction"
            )

    return FusionRing(
        lf=lf,
        basis=basis,
        identity=basis_class(n, unit),
        structure_constants=tuple(tuple(tuple(row) for row in plane) for plane in constants),
        columns=dm.columns,
        diagnostics=diagnostics,
        detection=dm,
    )


def multiply(ring: FusionRing, x: KClass, y: KClass) -> KClass:
    """Bilinear extension of the basis product."""
    n = ring.dim
    if len(x.coeffs) != n or len(y.coeffs) != n:
        raise DimensionMismatch(
            f"classes of length {len(x.coeffs)}, {len(y.coeffs)} against a "
            f"basis of size {n}"
        )
    out = [0] * n
    for lam, a in enumerate(x.coeffs):
        if not a:
            continue
        for mu, b in enumerate(y.coeffs):
            if not b:
                continue
            plane = ring.structure_constants[lam][mu]
            for tau in range(n):
                out[tau] += a * b * plane[tau]
    return KClass(tuple(out))


@dataclass(frozen=True)
class Coform:
    """Coefficient matrix of the coform against the tensor square basis.

    The construction pins the matrix down only up to one overall sign;
    overall_sign records the conventional choice made here.
    """

    omega: Weight
    matrix: tuple[tuple[int, ...], ...]
    overall_sign: int = 1


def coform(lf: LevelForm, omega: Weight | None = None) -> Coform:
    """Signed pairing matrix a[i][j] = sign * delta(orbit_i, orbit_j + omega).

    With omega = 0 this is the identity pairing; a shift that lands any
    basis class on a wall is an error.
    """
    basis = tuple(enumerate_regular_orbits(lf))
    if omega is None:
        omega = (0,) * lf.datum.rank
    omega = tuple(int(x) for x in omega)
    n = len(basis)
    matrix = [[0] * n for _ in range(n)]
    for j, rep in enumerate(basis):
        shifted = tuple(a + b for a, b in zip(rep.weight, omega))
        target, sign = canonicalize(lf, shifted)
        if not target.is_regular:
            raise SingularShift(
                f"omega shift {omega} makes {rep.weight} singular"
            )
        i = next(t for t, b in enumerate(basis) if b.weight == target.weight)
        matrix[i][j] = sign
    return Coform(omega=omega, matrix=tuple(map(tuple, matrix)))


def quotient_ideal_support(lf: LevelForm) -> list[TorsionElement]:
    """Regular torsion orbits where the identity's detection image does not
    vanish; with a regular identity this is every regular orbit, and the
    nonvanishing is verified pointwise rather than assumed."""
    basis = tuple(enumerate_regular_orbits(lf))
    if not basis:
        return []
    group = torsion_subgroup(lf)
    dm = detection_matrix(lf, group)
    unit = _identity_index(lf, basis)
    support = []
    for f, value in zip(dm.columns, dm.entries[unit]):
        if not dm.ring.is_zero(value):
            support.append(f)
    return support


def verify_ring_axioms(ring: FusionRing) -> dict[str, bool]:
    """Exact checks of commutativity, associativity, identity, and the
    diagonalization identity J_lam J_mu = e * sum N J_nu at every column."""
    n = ring.dim
    if n == 0:
        return {
            "commutative": True,
            "associative": True,
            "identity": True,
            "diagonalization": True,
        }
    cons = ring.structure_constants
    results = {}
    results["commutative"] = all(
        cons[a][b][c] == cons[b][a][c]
        for a in range(n) for b in range(n) for c in range(n)
    )
    ok = True
    for a in range(n):
        for b in range(n):
            for c in range(n):
                left = [
                    sum(cons[a][b][s] * cons[s][c][t] for s in range(n))
                    for t in range(n)
                ]
                right = [
                    sum(cons[b][c][s] * cons[a][s][t] for s in range(n))
                    for t in range(n)
                ]
                if left != right:
                    ok = False
    results["associative"] = ok
    unit = ring.identity.coeffs.index(1)
    results["identity"] = all(
        cons[unit][a][b] == (1 if a == b else 0)
        for a in range(n) for b in range(n)
    )
    if ring.detection is None:
        results["diagonalization"] = True
        return results
    dm = ring.detection
    cring = dm.ring
    e_row = dm.entries[unit]
    ok = True
    for lam in range(n):
        for mu in range(n):
            for f in range(len(dm.columns)):
                lhs = cring.mul(dm.entries[lam][f], dm.entries[mu][f])
                acc = cring.zero
                for nu in range(n):
                    c = cons[lam][mu][nu]
                    if c:
                        acc = cring.add(acc, cring.scale(c, dm.entries[nu][f]))
                rhs = cring.mul(e_row[f], acc)
                if lhs != rhs:
                    ok = False
    results["diagonalization"] = ok
    return results


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
