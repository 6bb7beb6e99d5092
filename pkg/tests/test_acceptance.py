"""Acceptance gate: one check per criterion, each reporting PASS or FAIL.

Run under pytest (the summary hook prints one line per criterion) or directly
with ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from poincare_cascade.qpoly import check_vandermonde, check_parity_sums, check_product_identity, gaussian, gaussian_recurrence
from poincare_cascade.rootsys import SimpleType, all_types, build, build_type, pairing
from poincare_cascade.stab import half, make_face
from poincare_cascade.tables import GOLDEN_NAMES, TABLES
from poincare_cascade.theorem import (
    brute_force_lhs,
    interior_trivial,
    proper_subsets,
    tau_transfer_check,
    tau_transfer_for_face,
    verify_all,
)
from poincare_cascade.weyl import brute_force_poincare, poincare

import structure
from oracles import quotient_identities

GOLDEN = Path(__file__).parent / "golden"


def identity_sweep() -> list[str]:
    failures = []
    start = time.perf_counter()
    for t in all_types(8):
        rs = build(t)
        reps = verify_all(rs)
        if len(reps) != 2**rs.rank - 1:
            failures.append(f"{t}: {len(reps)} faces")
        failures += [f"{t} S={sorted(r.face.S)}" for r in reps if not r.ok]
    if time.perf_counter() - start > 120:
        failures.append("sweep slower than 120 s")
    return failures


def brute_force_agreement() -> list[str]:
    failures = []
    start = time.perf_counter()
    types = all_types(6) + [SimpleType("F", 4)]
    for t in types:
        rs = build(t)
        if brute_force_poincare(rs, rs.simple) != poincare([t]):
            failures.append(f"{t}: whole group")
    if time.perf_counter() - start > 60:
        failures.append("whole-group enumeration slower than 60 s")
    for t in all_types(5):
        rs = build(t)
        failures += [f"{t} S={sorted(r.face.S)}" for r in verify_all(rs) if brute_force_lhs(rs, r.face) != r.lhs]
    return failures


def gaussian_identities() -> list[str]:
    failures = []
    failures += [f"recurrence {n},{r}" for n in range(17) for r in range(n + 1) if gaussian_recurrence(n, r) != gaussian(n, r)]
    failures += [f"vandermonde {m},{n}" for n in range(13) for m in range(n + 1) if not check_vandermonde(m, n)]
    failures += [f"parity sums {n}" for n in range(1, 13) if not check_parity_sums(n)]
    failures += [f"product {n}" for n in range(1, 11) if not check_product_identity(n)]
    return failures


def golden_tables() -> list[str]:
    return [
        GOLDEN_NAMES[k] for k, make in TABLES.items()
        if make(8).to_tsv() != (GOLDEN / GOLDEN_NAMES[k]).read_text(encoding="utf-8")
    ]


def closed_forms() -> list[str]:
    return [label for label, ok in quotient_identities(8) if not ok]


def structural_suite() -> list[str]:
    failures = []
    for t in all_types(8):
        rs = build(t)
        for name, check in structure.STRUCTURE_SUITE.items():
            failures += [f"{name}: {msg}" for msg in check(rs)]
        if rs.rank <= 6:
            failures += structure.intervals(rs)
        else:
            failures += structure.intervals(rs, structure.j_subsets(rs))
    return failures


def tau_transfer() -> list[str]:
    failures = []
    if not tau_transfer_check(build_type("F", 4), build_type("C", 4), {0: 0, 4: 2, 3: 3, 2: 4}):
        failures.append("F4 -> C4 hand map")
    for t in all_types(6):
        rs = build(t)
        failures += [f"{t} S={sorted(S)}" for S in proper_subsets(rs) if not tau_transfer_for_face(rs, make_face(rs, S))]
    return failures


def interior() -> list[str]:
    failures = []
    for t in all_types(8):
        rs = build(t)
        failures += structure.interior_empty(rs)
        for S in proper_subsets(rs):
            face = make_face(rs, S)
            if pairing(rs, half(face), rs.highest_short) != Fraction(1, 2):
                failures.append(f"{t} S={sorted(S)}: not at height 1/2")
            if not interior_trivial(rs, face):
                failures.append(f"{t} S={sorted(S)}")
    return failures


CRITERIA = [
    (1, "identity on every face up to rank 8", identity_sweep),
    (2, "group enumeration agrees with the product formula", brute_force_agreement),
    (3, "Gaussian polynomial identities", gaussian_identities),
    (4, "regenerated tables match transcriptions", golden_tables),
    (5, "closed-form quotient identities", closed_forms),
    (6, "structural suite", structural_suite),
    (7, "transfer of cascade data to minuscule models", tau_transfer),
    (8, "interior points give the trivial identity", interior),
]


@pytest.mark.parametrize(
    "check",
    [pytest.param(fn, marks=pytest.mark.criterion(n, title), id=f"criterion{n}") for n, title, fn in CRITERIA],
)
def test_criterion(check):
    failures = check()
    assert failures == [], failures[:10]


def main() -> int:
    all_ok = True
    for n, title, fn in CRITERIA:
        start = time.perf_counter()
        failures = fn()
        all_ok &= not failures
        verdict = "PASS" if not failures else f"FAIL ({len(failures)}: {failures[:3]})"
        print(f"acceptance criterion {n} ({title}): {verdict} [{time.perf_counter() - start:.1f}s]")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
