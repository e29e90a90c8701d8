"""The geometry of poles: contraction matrices, point degrees, pole
enumeration, pole-variety equations via Pfaffians, and the upper radical.

For a form h on K^n and a point u, the contraction M_u has entries
M_u[j,k] = sum_i u_i * h(e_i, e_j, e_k); the degree of [u] is
(n-1) - rank(M_u) and [u] is a pole when the degree is positive.  For
odd n the pole set is cut out by stripping powers of u_i from the
Pfaffian of the i-th principal submatrix of the symbolic M_u.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import kernels
from .fields import GF, Field, Scalar
from .forms import TriForm
from .linalg import Matrix, PolyMatrix, pfaffian
from .poly import MultiPoly, strip_variable_power
from .projective import (
    PluckerLine,
    Vector,
    canonical_point,
    num_projective_points,
    pair_list,
    span_points,
    wedge2_coordinates,
)

DEFAULT_BUDGET = 10**7


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured p^n budget."""


class VarietyError(RuntimeError):
    """No principal Pfaffian index produced a verified pole equation."""


def enumeration_budget(budget: Optional[int] = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("POLEGEOM_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _require_enumerable(field: Field, n: int, budget: Optional[int]) -> GF:
    if not field.is_finite:
        raise ValueError("enumeration needs a finite field")
    limit = enumeration_budget(budget)
    if field.order**n > limit:
        raise BudgetExceededError(
            f"{field!r}^{n} = {field.order ** n} exceeds budget {limit}"
        )
    return field


def symbolic_matrix(h: TriForm) -> PolyMatrix:
    """The alternating matrix of linear entries sum_i h(e_i,e_j,e_k) u_i."""
    if h.is_zero():
        raise ValueError("zero form has no contraction matrix")
    n, F = h.n, h.field
    entries = [[MultiPoly.zero(n, F) for _ in range(n)] for _ in range(n)]
    for (i, j, k), c in h.coeffs.items():
        # contributions of coefficient c on the sorted triple (i, j, k):
        # M[j,k] += c*u_i, M[i,k] -= c*u_j, M[i,j] += c*u_k, antisymmetric
        for (a, b, v, s) in (
            (j, k, i, 1),
            (i, k, j, -1),
            (i, j, k, 1),
        ):
            coeff = c if s > 0 else F.neg(c)
            mono = MultiPoly.variable(n, F, v).scale(coeff)
            entries[a - 1][b - 1] = entries[a - 1][b - 1] + mono
            entries[b - 1][a - 1] = entries[b - 1][a - 1] - mono
    return PolyMatrix(F, n, entries)


def contraction_matrix(h: TriForm, u: Sequence[Scalar]) -> Matrix:
    """M_u at a concrete point u."""
    F, n = h.field, h.n
    uv = [F.of(x) for x in u]
    if len(uv) != n:
        raise ValueError(f"point must have length {n}")
    rows = [[F.zero] * n for _ in range(n)]
    for (i, j, k), c in h.coeffs.items():
        for (a, b, v, s) in ((j, k, i, 1), (i, k, j, -1), (i, j, k, 1)):
            x = F.mul(c, uv[v - 1])
            if x == F.zero:
                continue
            if s < 0:
                x = F.neg(x)
            rows[a - 1][b - 1] = F.add(rows[a - 1][b - 1], x)
            rows[b - 1][a - 1] = F.sub(rows[b - 1][a - 1], x)
    return Matrix(F, rows)


def point_degree(h: TriForm, u: Sequence[Scalar]) -> Tuple[int, List[Vector]]:
    """Degree (n-1) - rank(M_u) and a reduced basis of Rad(chi_u)."""
    F = h.field
    uv = [F.of(x) for x in u]
    if all(x == F.zero for x in uv):
        raise ValueError("zero vector has no degree")
    m = contraction_matrix(h, uv)
    rank, kernel = m.rank_and_kernel()
    return h.n - 1 - rank, kernel


def structure_cube(h: TriForm, field: GF) -> List[List[List[int]]]:
    """The n x n x n tensor h(e_i, e_j, e_k) mod p for the scan kernels."""
    n = h.n
    cube = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (i, j, k), c in h.coeffs.items():
        v = field.of(c)
        neg = (-v) % field.p
        for (a, b, cc, s) in (
            (i, j, k, 1),
            (j, k, i, 1),
            (k, i, j, 1),
            (j, i, k, -1),
            (i, k, j, -1),
            (k, j, i, -1),
        ):
            cube[a - 1][b - 1][cc - 1] = v if s > 0 else neg
    return cube


@dataclass
class PoleRecord:
    point: Tuple[int, ...]
    degree: int
    radical: Optional[Tuple[Tuple[int, ...], ...]] = None


@dataclass
class PoleReport:
    field: Field
    n: int
    records: List[PoleRecord]
    histogram: Dict[int, int] = dc_field(default_factory=dict)

    def poles(self) -> List[PoleRecord]:
        return [r for r in self.records if r.degree >= 1]

    def pole_points(self) -> List[Tuple[int, ...]]:
        return [r.point for r in self.records if r.degree >= 1]


def _scan_chunk(args):
    cube, n, p, start, stop, want_kernels = args
    return kernels.scan(cube, n, p, start, stop, want_kernels)


def enumerate_poles(
    h: TriForm,
    field: Optional[GF] = None,
    budget: Optional[int] = None,
    workers: int = 1,
    with_radicals: bool = True,
) -> PoleReport:
    """Scan every canonical projective point and record its degree.

    Passing a finite field for a rational form reduces the coefficients
    mod p first.  Partitioning across workers is merge-order stable: the
    parallel result is identical to the serial one.
    """
    if field is None:
        if not isinstance(h.field, GF):
            raise ValueError("enumeration needs a finite field")
        field = h.field
    elif h.field != field:
        h = h.reduce_mod(field)
    _require_enumerable(field, h.n, budget)
    p, n = field.p, h.n
    cube = structure_cube(h, field)
    total = num_projective_points(p, n)
    if workers <= 1:
        chunks = [kernels.scan(cube, n, p, 0, total, with_radicals)]
    else:
        bounds = [total * w // workers for w in range(workers + 1)]
        jobs = [
            (cube, n, p, bounds[w], bounds[w + 1], with_radicals)
            for w in range(workers)
            if bounds[w] < bounds[w + 1]
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_scan_chunk, jobs))
    records: List[PoleRecord] = []
    histogram: Dict[int, int] = {}
    for points, degrees, radicals in chunks:
        for pos, (pt, deg) in enumerate(zip(points, degrees)):
            rad = tuple(radicals[pos]) if radicals is not None else None
            records.append(PoleRecord(point=pt, degree=deg, radical=rad))
            histogram[deg] = histogram.get(deg, 0) + 1
    return PoleReport(field=field, n=n, records=records, histogram=dict(sorted(histogram.items())))


@dataclass
class VarietyResult:
    """Outcome of the principal-Pfaffian pole-variety pipeline."""

    all_points: bool
    index: Optional[int] = None
    d: Optional[MultiPoly] = None
    alpha: Optional[int] = None
    g: Optional[MultiPoly] = None
    verified_over: Optional[str] = None


def variety_candidates(h: TriForm) -> Dict[int, Tuple[MultiPoly, int, MultiPoly]]:
    """All nonzero principal-Pfaffian candidates i -> (d_i, alpha_i, g_i)."""
    sym = symbolic_matrix(h)
    out: Dict[int, Tuple[MultiPoly, int, MultiPoly]] = {}
    for i in range(1, h.n + 1):
        d = pfaffian(sym.principal_delete(i))
        if d.is_zero():
            continue
        alpha, g = strip_variable_power(d, i)
        out[i] = (d, alpha, g)
    return out


def _rational_sample_points(n: int, count: int = 240) -> Iterable[Tuple[int, ...]]:
    """A deterministic spread of small integer points (first nonzero = 1)."""
    import random

    rng = random.Random(0xC0FFEE + n)
    seen = set()
    # include the standard basis and all 0/1 vectors of low weight first
    for i in range(n):
        vec = tuple(1 if j == i else 0 for j in range(n))
        seen.add(vec)
        yield vec
    while len(seen) < count:
        vec = tuple(rng.randint(-3, 3) for _ in range(n))
        if all(x == 0 for x in vec) or vec in seen:
            continue
        seen.add(vec)
        yield vec


def _zero_set_matches(
    h: TriForm, g: MultiPoly, field: Optional[GF], budget: Optional[int]
) -> bool:
    """Pointwise check that {g = 0} equals the brute-force pole set."""
    if field is not None:
        hp = h if h.field == field else h.reduce_mod(field)
        gp = MultiPoly(
            g.nvars, field, {e: field.of(c) for e, c in g.terms.items()}
        ) if g.field != field else g
        report = enumerate_poles(hp, field, budget=budget, with_radicals=False)
        for rec in report.records:
            is_zero = gp.evaluate(rec.point) == field.zero
            if is_zero != (rec.degree >= 1):
                return False
        return True
    # rational form: sampled grid with exact arithmetic
    F = h.field
    for pt in _rational_sample_points(h.n):
        delta, _ = point_degree(h, pt)
        if (g.evaluate(pt) == F.zero) != (delta >= 1):
            return False
    return True


def pole_variety(
    h: TriForm,
    i: Optional[int] = None,
    verify_field: Optional[GF] = None,
    budget: Optional[int] = None,
) -> VarietyResult:
    """Equation of the pole set per the principal-Pfaffian pipeline.

    Even n (or identically vanishing candidates) yields the designated
    all-points result.  Otherwise candidate indices are tried in
    ascending order; the first whose stripped polynomial has the correct
    zero set (checked over the form's field when finite, over a sampled
    grid plus optional finite reduction when rational) is returned.
    """
    if h.is_zero():
        raise ValueError("zero form")
    if h.n % 2 == 0:
        return VarietyResult(all_points=True)
    candidates = variety_candidates(h)
    if not candidates:
        # every principal Pfaffian vanishes identically: for any u pick i
        # with u_i != 0, then rank M_u = rank M_u^(i) <= n-3, a pole
        return VarietyResult(all_points=True)
    order = [i] if i is not None else sorted(candidates)
    if i is not None and i not in candidates:
        raise VarietyError(f"index {i} has identically zero Pfaffian")
    check_field: Optional[GF]
    if isinstance(h.field, GF):
        check_field = h.field
    else:
        check_field = verify_field
    failed: List[int] = []
    for idx in order:
        d, alpha, g = candidates[idx]
        ok = _zero_set_matches(h, g, check_field, budget)
        if ok and not isinstance(h.field, GF):
            ok = _zero_set_matches(h, g, None, budget)
        if ok:
            if isinstance(h.field, GF):
                verified = repr(h.field)
            elif verify_field is not None:
                verified = f"grid+{verify_field!r}"
            else:
                verified = "grid"
            return VarietyResult(
                all_points=False,
                index=idx,
                d=d,
                alpha=alpha,
                g=g,
                verified_over=verified,
            )
        failed.append(idx)
    raise VarietyError(
        f"no candidate index verified (tried {failed}); candidates degenerate"
    )


@dataclass
class PluckerSystem:
    """Linear conditions on Pluecker coordinates cutting out the upper radical."""

    n: int
    pairs: List[Tuple[int, int]]
    equations: Matrix
    solution: List[Vector]

    def contains(self, wedge: Sequence[Scalar]) -> bool:
        F = self.equations.field
        return all(x == F.zero for x in self.equations.mul_vec(wedge))


def upper_radical_system(h: TriForm) -> PluckerSystem:
    """For each i the equation sum_{j<k} h(e_i,e_j,e_k) w_jk = 0."""
    if h.is_zero():
        raise ValueError("zero form")
    n, F = h.n, h.field
    pairs = pair_list(n)
    rows = [
        [h.coefficient(i, j, k) for (j, k) in pairs] for i in range(1, n + 1)
    ]
    eq = Matrix(F, rows)
    _, kernel = eq.rank_and_kernel()
    return PluckerSystem(n=n, pairs=pairs, equations=eq, solution=kernel)


def _line_directions(
    field: GF, u: Sequence[Scalar], radical: Sequence[Vector]
) -> List[Vector]:
    """One direction vector per line through [u] inside the radical span.

    The lines [u, y] correspond to the projective points of a complement
    of <u> inside span(radical); dropping one reduced basis vector whose
    coordinate in u is nonzero yields such a complement.
    """
    red, pivots = Matrix(field, [list(r) for r in radical]).rref()
    basis = [red.rows[i] for i in range(len(pivots))]
    drop = next(i for i, c in enumerate(pivots) if u[c] != field.zero)
    complement = [basis[i] for i in range(len(basis)) if i != drop]
    if not complement:
        return []
    return span_points(field, complement)


def lines_through_point(h: TriForm, u: Sequence[Scalar]) -> List[PluckerLine]:
    """The upper-radical lines through [u]: all [u, y] with y in Rad(chi_u)."""
    if not isinstance(h.field, GF):
        raise ValueError("line enumeration needs a finite field")
    F = h.field
    delta, radical = point_degree(h, u)
    if delta == 0:
        return []
    u_pt = canonical_point(F, u)
    return sorted(
        PluckerLine.from_pair(F, u_pt, y)
        for y in _line_directions(F, u_pt, radical)
    )


def _all_lines(field: GF, n: int) -> Iterable[PluckerLine]:
    """Every line of PG(n-1, q) by reduced-echelon shape enumeration."""
    p = field.p
    for i in range(n):
        for j in range(i + 1, n):
            free1 = [c for c in range(i + 1, n) if c != j]
            free2 = [c for c in range(j + 1, n)]
            slots = free1 + free2
            total = p ** len(slots)
            for code in range(total):
                vals = []
                rem = code
                for _ in slots:
                    vals.append(rem % p)
                    rem //= p
                row1 = [0] * n
                row2 = [0] * n
                row1[i] = 1
                row2[j] = 1
                for c, v in zip(free1, vals[: len(free1)]):
                    row1[c] = v
                for c, v in zip(free2, vals[len(free1) :]):
                    row2[c] = v
                yield PluckerLine(
                    basis=(tuple(row1), tuple(row2)),
                    wedge=wedge2_coordinates(field, row1, row2),
                )


def enumerate_upper_radical(
    h: TriForm,
    field: Optional[GF] = None,
    budget: Optional[int] = None,
    method: str = "points",
) -> List[PluckerLine]:
    """All lines of the upper radical, canonical and sorted.

    method "points" unions the radical lines through every pole;
    method "wedge" filters every line of PG(n-1, q) through the linear
    system (the independent cross-check route).
    """
    if field is None:
        if not isinstance(h.field, GF):
            raise ValueError("enumeration needs a finite field")
        field = h.field
    elif h.field != field:
        h = h.reduce_mod(field)
    _require_enumerable(field, h.n, budget)
    if method == "wedge":
        system = upper_radical_system(h)
        return sorted(
            line for line in _all_lines(field, h.n) if system.contains(line.wedge)
        )
    if method != "points":
        raise ValueError(f"unknown method {method!r}")
    report = enumerate_poles(h, field, budget=budget, with_radicals=True)
    F = field
    seen = set()
    found: List[Tuple] = []
    for rec in report.records:
        if rec.degree < 1:
            continue
        u = rec.point
        for y in _line_directions(F, u, rec.radical):
            key = canonical_point(F, wedge2_coordinates(F, u, y))
            if key not in seen:
                seen.add(key)
                found.append((u, y))
    lines = [PluckerLine.from_pair(F, u, y) for (u, y) in found]
    return sorted(lines)


def full_report(
    h: TriForm,
    field: Optional[GF] = None,
    budget: Optional[int] = None,
    workers: int = 1,
) -> dict:
    """The module's JSON report: poles, histogram, upper radical, variety."""
    if field is None:
        if not isinstance(h.field, GF):
            raise ValueError("reports need a finite field")
        field = h.field
    hf = h if h.field == field else h.reduce_mod(field)
    report = enumerate_poles(hf, field, budget=budget, workers=workers)
    lines = enumerate_upper_radical(hf, field, budget=budget)
    from .poly import render_poly

    if hf.n % 2 == 0:
        variety = {"i": None, "g": "all-points", "verified": "parity"}
    else:
        v = pole_variety(hf, budget=budget)
        if v.all_points:
            variety = {"i": None, "g": "all-points", "verified": "symbolic"}
        else:
            names = [f"x{i + 1}" for i in range(hf.n)]
            variety = {
                "i": v.index,
                "g": render_poly(v.g, names),
                "verified": v.verified_over,
            }
    return {
        "form": h.label or repr(h),
        "field": repr(field),
        "n": hf.n,
        "poles": [
            {"point": list(r.point), "degree": r.degree}
            for r in report.records
            if r.degree >= 1
        ],
        "histogram": {str(k): v for k, v in report.histogram.items()},
        "upper_radical": [
            {"basis": [list(b) for b in line.basis], "plucker": list(line.wedge)}
            for line in lines
        ],
        "variety": variety,
    }
