"""End-to-end acceptance battery with explicit time budgets.

Each test covers one headline guarantee of the package over the standard
desk-scale grid {A1 k<=10, A2 k<=8, B2 k<=6, G2 k<=5}, checks it exactly,
and enforces a wall-clock budget.  Run with -s to see one PASS line per
criterion.
"""

import random
import time

from kfusion import (
    KClass,
    build_root_datum,
    canonicalize,
    coform,
    detection_matrix,
    dimension,
    enumerate_regular_orbits,
    fusion_ring,
    identity_class,
    level_form,
    multiply,
    regular_orbits,
    torsion_subgroup,
    trace_form,
    level_of,
    verify_ring_axioms,
    weight_multiplicities,
)
from kfusion.checks import brute_regular_orbit_count, run_checks

GRID = (("A1", 10), ("A2", 8), ("B2", 6), ("G2", 5))


def grid_points():
    for name, k_max in GRID:
        datum = build_root_datum(name)
        for k in range(1, k_max + 1):
            yield name, datum, level_form(datum, k)


def report(number: int, label: str, t0: float, budget: float) -> None:
    elapsed = time.monotonic() - t0
    assert elapsed < budget, f"criterion {number} took {elapsed:.2f}s, budget {budget}s"
    print(f"PASS criterion {number}: {label} ({elapsed:.2f}s < {budget:.0f}s)")


def det_int(m) -> int:
    # cofactor expansion; independent of the library's linear algebra
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * det_int(minor)
    return total


def test_criterion_1_basis_counting():
    t0 = time.monotonic()
    a1 = build_root_datum("A1")
    for k in range(1, 11):
        lf = level_form(a1, k)
        basis = enumerate_regular_orbits(lf)
        assert len(basis) == k - 1
        assert len(basis) == brute_regular_orbit_count(lf)
    a2 = build_root_datum("A2")
    for k in range(2, 9):
        lf = level_form(a2, k)
        basis = enumerate_regular_orbits(lf)
        assert len(basis) == (k - 1) * (k - 2) // 2
        assert len(basis) == brute_regular_orbit_count(lf)
    report(1, "basis counting A1/A2 vs brute-force orbit enumeration", t0, 1.0)


def test_criterion_2_detection_counting():
    t0 = time.monotonic()
    for _, _, lf in grid_points():
        group = torsion_subgroup(lf)
        assert group.order == abs(det_int([list(row) for row in lf.gram]))
        assert len(enumerate_regular_orbits(lf)) == len(regular_orbits(group))
    report(2, "|F| = |det gram| and orbit counts agree on the grid", t0, 5.0)


def test_criterion_3_detection_nonsingular():
    t0 = time.monotonic()
    points = 0
    for _, _, lf in grid_points():
        if not enumerate_regular_orbits(lf):
            continue
        dm = detection_matrix(lf)
        assert len(dm.entries) == len(dm.columns) == len(dm.basis)
        assert dm.nonsingular
        points += 1
    assert points > 0
    report(3, f"detection matrix nonsingular at {points} grid points", t0, 30.0)


def test_criterion_4_identity():
    t0 = time.monotonic()
    points = 0
    for _, datum, lf in grid_points():
        if lf.level < datum.dual_coxeter_number:
            continue
        ring = fusion_ring(lf)
        unit = identity_class(lf)
        index = unit.coeffs.index(1)
        rep, sign = canonicalize(lf, datum.rho)
        assert sign == 1 and ring.basis[index].weight == rep.weight
        for i in range(len(ring.basis)):
            x = KClass(coeffs=tuple(1 if j == i else 0 for j in range(len(ring.basis))))
            assert multiply(ring, unit, x) == x
        points += 1
    assert points > 0
    report(4, f"identity sits at rho and is neutral at {points} grid points", t0, 10.0)


def test_criterion_5_su2_oracle():
    t0 = time.monotonic()

    def oracle(k: int, a: int, b: int, c: int) -> int:
        lo = abs(a - b) + 1
        hi = min(a + b - 1, 2 * k - 1 - (a + b))
        return 1 if (lo <= c <= hi and (a + b + c) % 2 == 1) else 0

    a1 = build_root_datum("A1")
    for k in range(2, 11):
        ring = fusion_ring(level_form(a1, k))
        labels = [chi.weight[0] for chi in ring.basis]
        assert labels == list(range(1, k))
        for a in range(len(labels)):
            for b in range(len(labels)):
                for c in range(len(labels)):
                    expected = oracle(k, labels[a], labels[b], labels[c])
                    assert ring.structure_constants[a][b][c] == expected
    report(5, "A1 structure constants match the closed-form su(2) rule", t0, 10.0)


def test_criterion_6_ring_axioms():
    t0 = time.monotonic()
    for _, _, lf in grid_points():
        ring = fusion_ring(lf)
        for plane in ring.structure_constants:
            for row in plane:
                for value in row:
                    assert isinstance(value, int)
        verdict = verify_ring_axioms(ring)
        assert all(verdict.values()), verdict
    report(6, "commutativity, associativity, diagonalization on the grid", t0, 60.0)


def test_criterion_7_trace_form():
    t0 = time.monotonic()
    for n in (2, 3, 4):
        datum = build_root_datum(f"A{n - 1}")
        standard = (1,) + (0,) * (n - 2)
        assert trace_form(datum, standard) == datum.basic_gram
    a1 = build_root_datum("A1")
    assert level_of(a1, (2,)) == 4
    report(7, "trace form of the standard rep and the adjoint level", t0, 1.0)


def test_criterion_8_coform():
    t0 = time.monotonic()
    for _, datum, lf in grid_points():
        base = coform(lf)
        identity = tuple(
            tuple(1 if i == j else 0 for j in range(len(base.matrix)))
            for i in range(len(base.matrix))
        )
        assert base.matrix == identity
        assert base.overall_sign in (1, -1)
        shift = lf.translation((1,) + (0,) * (datum.rank - 1))
        shifted = coform(lf, shift)
        assert shifted.matrix == base.matrix
    report(8, "coform is the identity matrix, stable under lattice shifts", t0, 5.0)


def test_criterion_9_multiplicity_consistency():
    t0 = time.monotonic()
    rng = random.Random(20260823)
    data = [build_root_datum(name) for name, _ in GRID]
    accepted = 0
    while accepted < 20:
        datum = data[accepted % len(data)]
        highest = tuple(rng.randint(0, 6) for _ in range(datum.rank))
        if dimension(datum, highest) > 500:
            continue
        system = weight_multiplicities(datum, highest)
        total = sum(system.entries.values())
        assert total == dimension(datum, highest)
        accepted += 1
    report(9, "multiplicity totals equal the Weyl dimension, 20 samples", t0, 10.0)


def test_full_check_sweep():
    t0 = time.monotonic()
    for name, k_max in GRID:
        for k in range(1, k_max + 1):
            results = run_checks(name, k)
            failed = [r.name for r in results if not r.passed]
            assert not failed, f"{name} level {k}: {failed}"
    elapsed = time.monotonic() - t0
    assert elapsed < 180.0, f"check sweep took {elapsed:.2f}s"
    print(f"PASS full check sweep over the grid ({elapsed:.2f}s < 180s)")
