"""Acceptance suite: every criterion runs at its stated tolerance (exact
equality throughout) and prints one pass/fail line.

Desk scale is GF(2)/GF(3)/GF(5)/GF(7) with n <= 7.  Forms whose catalog
conditions exclude a stated field run over their nearest admissible desk
field (characteristic-2 rows over GF(2); the scaled hexagonal row over
GF(7), where cubing is not onto).
"""

import itertools
import json
import random

from conftest import desk_instances
from polegeom.constructions import cch_hyperplane
from polegeom.fields import GF, QQ
from polegeom.forms import TriForm, catalog_form
from polegeom.geometry import (
    build_geometry,
    cone_structure_check,
    expected_polar_lines,
    fingerprint,
    hexagon_check,
    normal_spread_check,
    spread_check,
    t4_line_check,
    t11_structure_check,
)
from polegeom.linalg import (
    determinant,
    pfaffian,
    random_alternating,
    random_invertible,
)
from polegeom.poles import (
    contraction_matrix,
    enumerate_poles,
    enumerate_upper_radical,
    full_report,
    pole_variety,
)
from polegeom.poly import equal_up_to_scalar, parse_poly
from polegeom.tables import tables_fixture


def record(number, name, passed, detail=""):
    status = "PASS" if passed else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {number:>2} {name}: {status}{suffix}")
    assert passed, f"criterion {number} {name}{suffix}"


def test_criterion_1_table_fixtures():
    problems = []
    for which in (2, 3, 4, 5):
        report = tables_fixture(which)
        for row in report["rows"]:
            if not row["ok"]:
                problems.append((which, row["tag"], row["diff"][:1]))
    record(1, "table fixtures exact", not problems, detail=str(problems[:2]))


def test_criterion_2_pfaffian_identity():
    rng = random.Random(0xF00D)
    checked = 0
    ok = True
    for field in (GF(7), QQ):
        for n in (2, 3, 4, 5, 6):
            for _ in range(25):
                m = random_alternating(field, n, rng)
                pf = pfaffian(m)
                if field.mul(pf, pf) != determinant(m):
                    ok = False
                checked += 1
    record(2, "pfaffian squares to determinant", ok and checked >= 200, detail=f"{checked} samples")


def test_criterion_3_degree_laws():
    bad = []
    for tag, field, lam in desk_instances((GF(2), GF(3), GF(7))):
        if field == GF(7) and tag != "T12":
            continue  # GF(7) only substitutes for the cube-condition row
        h = catalog_form(tag, field, param=lam)
        n = h.n
        report = enumerate_poles(h, field)
        for rec in report.records:
            rank, kernel = contraction_matrix(h, rec.point).rank_and_kernel()
            if not (
                rec.degree == (n - 1) - rank
                and rec.degree == len(kernel) - 1
                and rec.degree % 2 == (n - 1) % 2
            ):
                bad.append((tag, field, rec.point))
                break
    record(3, "degree laws on every point", not bad, detail=str(bad[:3]))


def _t1_expected_lines(field):
    h = catalog_form("T1", field, n=6)
    lines = enumerate_upper_radical(h, field)
    for line in lines:
        if not any(all(x == field.zero for x in pt[:3]) for pt in line.points(field)):
            return False
    by_wedge = enumerate_upper_radical(h, field, method="wedge")
    return lines == by_wedge and len(lines) > 0


def _t3_expected_lines(field):
    h = catalog_form("T3", field)
    for line in enumerate_upper_radical(h, field):
        pts = line.points(field)
        if not any(all(x == field.zero for x in pt[3:]) for pt in pts):
            return False
        if not any(all(x == field.zero for x in pt[:3]) for pt in pts):
            return False
    return True


def test_criterion_4_rank_at_most_6_reproductions():
    failures = []
    for p in (2, 3):
        field = GF(p)
        if not _t1_expected_lines(field):
            failures.append(("T1", p))
        if not _t3_expected_lines(field):
            failures.append(("T3", p))
        report = t4_line_check(build_geometry(catalog_form("T4", field)))
        if not report.passed:
            failures.append(("T4", p))
    for tag, field, lam in (
        ("T10_2", GF(2), 1),
        ("T10_1", GF(3), 2),
        ("T10_1", GF(7), 3),
    ):
        geom = build_geometry(catalog_form(tag, field, param=lam))
        if not spread_check(geom).is_spread or not normal_spread_check(geom):
            failures.append((tag, field.p))
    record(4, "rank<=6 geometries and spreads", not failures, detail=str(failures))


def test_criterion_5_rank_7_reproductions():
    failures = []
    detail = []
    for p in (2, 3):
        field = GF(p)
        # T5: two symplectic hyperplanes with apexes
        geom5 = build_geometry(catalog_form("T5", field))
        pole_ok = all(
            pt[0] == field.zero or pt[3] == field.zero for pt in geom5.points
        )
        if p == 2:
            pole_ok = pole_ok and len(geom5.points) == 95
            degree4 = [pt for pt in geom5.points if geom5.degrees[pt] == 4]
            pole_ok = pole_ok and len(degree4) == 13
        if not (pole_ok and list(geom5.lines) == expected_polar_lines("T5", field)):
            failures.append(("T5", p))
        # T6 polar space
        geom6 = build_geometry(catalog_form("T6", field))
        if list(geom6.lines) != expected_polar_lines("T6", field):
            failures.append(("T6", p))
        # T7 cone
        h7 = catalog_form("T7", field)
        cone = cone_structure_check(build_geometry(h7), h7)
        if not cone.passed:
            failures.append(("T7", p))
            detail.append(f"T7/gf({p}): {cone.witness}")
        # T8 symplectic with all degrees 4
        geom8 = build_geometry(catalog_form("T8", field))
        if list(geom8.lines) != expected_polar_lines("T8", field) or any(
            geom8.degrees[pt] != 4 for pt in geom8.points
        ):
            failures.append(("T8", p))
        # T9 hexagon statistics
        stats = hexagon_check(build_geometry(catalog_form("T9", field)))
        want = (63, 63, 3, 3, 12, 6) if p == 2 else (364, 364, 4, 4, 12, 6)
        if stats.as_tuple() != want:
            failures.append(("T9", p))
    for tag, field, lam in (("T11_2", GF(2), 1), ("T11_1", GF(3), 2)):
        h = catalog_form(tag, field, param=lam)
        report = t11_structure_check(build_geometry(h), h)
        if not report.passed:
            failures.append((tag, field.p))
    record(
        5,
        "rank-7 geometry reproductions",
        not failures,
        detail="; ".join(detail) or str(failures),
    )


def test_criterion_6_variety_zero_sets():
    failures = []
    instances = [
        (tag, field, lam)
        for tag, field, lam in desk_instances((GF(2), GF(3), GF(7)))
        if (field == GF(7)) == (tag == "T12")
    ]
    for tag, field, lam in instances:
        h = catalog_form(tag, field, param=lam)
        if h.n % 2 == 0:
            continue
        result = pole_variety(h)
        if result.all_points:
            continue
        report = enumerate_poles(h, field)
        for rec in report.records:
            if (result.g.evaluate(rec.point) == field.zero) != (rec.degree >= 1):
                failures.append((tag, field.p, rec.point))
                break
    for p in (2, 3):
        field = GF(p)
        h = TriForm.from_terms(5, field, [(1, 2, 3, 1), (3, 4, 5, 1)])
        result = pole_variety(h)
        report = enumerate_poles(h, field)
        for rec in report.records:
            if (result.g.evaluate(rec.point) == field.zero) != (rec.degree >= 1):
                failures.append(("chain", p, rec.point))
                break
    record(6, "variety equals brute-force pole set", not failures, detail=str(failures[:3]))


def test_criterion_7_reducible_chains():
    field = GF(3)
    ok = True
    for n, factors in ((5, "u3"), (7, "u3*u5"), (9, "u3*u5*u7")):
        h = cch_hyperplane(n, field)
        result = pole_variety(h)
        want = parse_poly(factors, n, field)
        if equal_up_to_scalar(result.g, want) is None:
            ok = False
            continue
        report = enumerate_poles(h, field)
        for rec in report.records:
            if (want.evaluate(rec.point) == field.zero) != (rec.degree >= 1):
                ok = False
                break
    record(7, "chained hyperplane varieties", ok)


def test_criterion_8_rank_gap():
    field = GF(2)
    triples = list(itertools.combinations(range(1, 5), 3))
    ranks = set()
    for mask in range(1, 16):
        coeffs = {t: 1 for i, t in enumerate(triples) if (mask >> i) & 1}
        ranks.add(TriForm(4, field, coeffs).rank())
    record(8, "rank gap on GF(2)^4", ranks == {3}, detail=f"ranks={sorted(ranks)}")


def test_criterion_9_fingerprint_invariance():
    rng = random.Random(0xBEEF)
    failures = []
    for tag, field, lam in desk_instances((GF(2), GF(3), GF(7))):
        if field == GF(2) and tag not in ("T10_2", "T11_2"):
            continue  # characteristic-2 rows only; the rest run over GF(3)
        if field == GF(7) and tag != "T12":
            continue
        if tag == "T12":
            continue  # covered by the scale clause below at GF(7)
        h = catalog_form(tag, field, param=lam)
        base = fingerprint(h, field)
        for _ in range(20):
            g = random_invertible(field, h.n, rng)
            if fingerprint(h.pullback(g), field) != base:
                failures.append((tag, field.p, "pullback"))
                break
        for c in (2, field.p - 1):
            if c % field.p and fingerprint(h.scale(c), field) != base:
                failures.append((tag, field.p, f"scale {c}"))
    # near equivalence of the hexagonal rows: scaling by a non-cube
    f7 = GF(7)
    budget = 10**6
    if fingerprint(catalog_form("T9", f7), f7, budget=budget) != fingerprint(
        catalog_form("T12", f7, param=2), f7, budget=budget
    ):
        failures.append(("T12", 7, "scale"))
    record(9, "fingerprint invariance", not failures, detail=str(failures[:3]))


def test_criterion_10_parallel_determinism():
    serial = json.dumps(
        full_report(catalog_form("T9", GF(3)), workers=1), indent=2
    )
    parallel = json.dumps(
        full_report(catalog_form("T9", GF(3)), workers=3), indent=2
    )
    record(10, "serial/parallel byte-identical", serial == parallel)


def test_rank_column_against_catalog():
    """Every instantiable catalog row reproduces its rank."""
    from polegeom.forms import CATALOG_RANKS

    ok = all(
        catalog_form(tag, field, param=lam).rank() == CATALOG_RANKS[tag]
        for tag, field, lam in desk_instances((GF(2), GF(3), GF(7), QQ))
    )
    record("1b", "catalog rank column", ok)


def test_radical_system_solution_spaces():
    """Solution spaces of the recomputed radical systems match the fixture
    spans over alternate admissible fields as well."""
    from polegeom.tables import compare_system

    checks = [
        ("T1", GF(2), None),
        ("T2", GF(3), None),
        ("T3", GF(2), None),
        ("T4", GF(3), None),
        ("T10_1", GF(3), 2),
        ("T10_2", GF(2), 1),
        ("T5", GF(2), None),
        ("T6", GF(3), None),
        ("T7", GF(2), None),
        ("T8", GF(3), None),
        ("T9", GF(2), None),
        ("T11_1", GF(3), 2),
        ("T11_2", GF(2), 1),
    ]
    bad = [
        (tag, field.p)
        for tag, field, lam in checks
        if compare_system(tag, field, lam) is not None
    ]
    record("1c", "radical systems over prime fields", not bad, detail=str(bad))
