"""Exact arithmetic in Z[zeta_N] and Q(zeta_N).

Elements are coefficient tuples against the power basis 1, zeta, ...,
zeta^(phi(N)-1), always reduced modulo the N-th cyclotomic polynomial, so
tuple equality is exact equality.  Division lives in the fraction field:
the inverse of a nonzero element comes from the extended euclidean
algorithm against the cyclotomic polynomial over Q.  Determinants use
fraction-free elimination, whose interior divisions are certified exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence


def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num: Sequence, den: Sequence):
    """Quotient and remainder of rational polynomials, exact."""
    num = [Fraction(x) for x in num]
    den = [Fraction(x) for x in den]
    _poly_trim(den)
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    r = num[:]
    _poly_trim(r)
    lead = den[-1]
    while len(r) >= len(den):
        shift = len(r) - len(den)
        coeff = r[-1] / lead
        q[shift] = coeff
        for i, d in enumerate(den):
            r[i + shift] -= coeff * d
        _poly_trim(r)
    return q, r


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    # x^n - 1 divided by the product of all proper cyclotomic factors
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not r
            poly = q
    assert all(c.denominator == 1 for c in poly)
    return tuple(int(c) for c in poly)


class CycRing:
    """The ring Z[zeta_N] with cached power-basis reductions."""

    def __init__(self, order: int):
        self.order = order
        modulus = cyclotomic_polynomial(order)
        self.degree = len(modulus) - 1
        self.modulus = modulus
        # zeta^e for e in range(order), reduced to the power basis
        rows = []
        for e in range(order):
            unit = [0] * e + [1]
            _, r = _poly_divmod(unit, modulus)
            row = [int(x) for x in r] + [0] * (self.degree - len(r))
            rows.append(tuple(row))
        self.power = tuple(rows)
        self.zero = (0,) * self.degree
        self.one = self.power[0]

    def root_power(self, e: int) -> tuple[int, ...]:
        """zeta^e as a reduced element."""
        return self.power[e % self.order]

    def from_phase(self, phase: Fraction) -> tuple[int, ...]:
        """exp(2 pi i phase) for a rational phase with denominator | N."""
        scaled = Fraction(phase) * self.order
        assert scaled.denominator == 1, f"phase {phase} not supported in order {self.order}"
        return self.root_power(int(scaled))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def scale(self, c: int, a):
        return tuple(c * x for x in a)

    def mul(self, a, b):
        deg = self.degree
        conv = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = list(conv[:deg])
        for e in range(deg, len(conv)):
            c = conv[e]
            if c:
                row = self.power[e % self.order]
                for t in range(deg):
                    out[t] += c * row[t]
        return tuple(out)

    def conjugate(self, a):
        """Complex conjugation, the Galois map zeta -> zeta^{-1}."""
        out = [0] * self.degree
        for e, c in enumerate(a):
            if c:
                row = self.power[(self.order - e) % self.order]
                for t in range(self.degree):
                    out[t] += c * row[t]
        return tuple(out)

    def is_zero(self, a) -> bool:
        return all(x == 0 for x in a)

    def inverse(self, a):
        """Inverse in Q(zeta_N), as Fraction coefficients.

        Extended euclid against the (irreducible) cyclotomic polynomial:
        s * a + t * modulus = 1 up to a unit.
        """
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        r0 = [Fraction(x) for x in self.modulus]
        r1 = _poly_trim([Fraction(x) for x in a])
        s0: list[Fraction] = []
        s1 = [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            s = [Fraction(0)] * max(len(s0), len(q) + len(s1) - 1 if s1 else 0)
            for i, x in enumerate(s0):
                s[i] += x
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        s[i + j] -= qc * sc
            _poly_trim(s)
            r0, r1 = [Fraction(x) for x in r1], r
            s0, s1 = s1, s
        # r0 is the gcd, a nonzero constant since the modulus is irreducible
        assert len(r0) == 1 and r0[0] != 0
        unit = r0[0]
        inv = [x / unit for x in s0]
        inv += [Fraction(0)] * (self.degree - len(inv))
        assert len(inv) <= self.degree or all(x == 0 for x in inv[self.degree:])
        return tuple(inv[: self.degree])

    def inverse_scaled(self, a) -> tuple[tuple[int, ...], int]:
        """Inverse as (integer element, positive integer denominator)."""
        inv = self.inverse(a)
        den = 1
        for x in inv:
            den = den * x.denominator // _int_gcd(den, x.denominator)
        num = tuple(int(x * den) for x in inv)
        return num, den

    def exact_div(self, a, b):
        """a / b when the quotient lies in Z[zeta_N]; certified integral."""
        num, den = self.inverse_scaled(b)
        prod = self.mul(a, num)
        out = []
        for x in prod:
            q, r = divmod(x, den)
            if r:
                raise ArithmeticError("inexact division in cyclotomic ring")
            out.append(q)
        return tuple(out)


@lru_cache(maxsize=None)
def cyc_ring(order: int) -> CycRing:
    return CycRing(order)


def determinant_is_nonzero(ring: CycRing, rows: Sequence[Sequence]) -> bool:
    """Exact nonsingularity test by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return True
    a = [[tuple(entry) for entry in row] for row in rows]
    prev = ring.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if not ring.is_zero(a[r][col])), None)
        if pivot is None:
            return False
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                num = ring.sub(
                    ring.mul(a[r][c], a[col][col]),
                    ring.mul(a[r][col], a[col][c]),
                )
                a[r][c] = ring.exact_div(num, prev)
            a[r][col] = ring.zero
        prev = a[col][col]
    return not ring.is_zero(a[n - 1][n - 1])


def field_solve(ring: CycRing, rows: Sequence[Sequence], rhs: Sequence):
    """Solve a nonsingular square system over Q(zeta_N) exactly.

    Entries of rows/rhs are integer elements of the ring; the solution is
    returned as tuples of Fractions.
    """
    n = len(rows)
    frac = [
        [tuple(Fraction(x) for x in entry) for entry in row] + [tuple(Fraction(x) for x in rhs[i])]
        for i, row in enumerate(rows)
    ]

    def fmul(a, b):
        deg = ring.degree
        conv = [Fraction(0)] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = list(conv[:deg])
        for e in range(deg, len(conv)):
            c = conv[e]
            if c:
                row = ring.power[e % ring.order]
                for t in range(deg):
                    out[t] += c * row[t]
        return tuple(out)

    def finv(a):
        scale = 1
        for x in a:
            scale = scale * x.denominator // _int_gcd(scale, x.denominator)
        cleared = tuple(int(x * scale) for x in a)
        inv_num, inv_den = ring.inverse_scaled(cleared)
        return tuple(Fraction(scale * x, inv_den) for x in inv_num)

    for col in range(n):
        pivot = next(r for r in range(col, n) if any(x != 0 for x in frac[r][col]))
        frac[col], frac[pivot] = frac[pivot], frac[col]
        inv = finv(frac[col][col])
        frac[col] = [fmul(inv, entry) for entry in frac[col]]
        for r in range(n):
            if r != col and any(x != 0 for x in frac[r][col]):
                factor = frac[r][col]
                frac[r] = [
                    tuple(x - y for x, y in zip(entry, fmul(factor, other)))
                    for entry, other in zip(frac[r], frac[col])
                ]
    return [frac[i][n] for i in range(n)]


def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
