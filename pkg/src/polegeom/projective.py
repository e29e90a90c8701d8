"""Canonical projective points and lines of PG(n-1, K).

Points are represented by their unique vector with first nonzero
coordinate 1; lines by the reduced-echelon basis of their 2-space plus
the Pluecker coordinate vector of that basis.  The enumeration order of
canonical points is fixed (first-nonzero position ascending, then the
trailing coordinates as a base-p odometer) and supports random access,
which the parallel scans rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from .fields import GF, Field, Scalar
from .linalg import Matrix

Vector = Tuple[Scalar, ...]


def canonical_point(field: Field, vec: Sequence[Scalar]) -> Vector:
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    v = [field.of(x) for x in vec]
    lead = next((x for x in v if x != field.zero), None)
    if lead is None:
        raise ValueError("zero vector has no projective point")
    inv = field.inv(lead)
    return tuple(field.mul(x, inv) for x in v)


def num_projective_points(p: int, n: int) -> int:
    return (p**n - 1) // (p - 1)


def projective_point_at(p: int, n: int, index: int) -> Tuple[int, ...]:
    """Random access into the canonical enumeration order."""
    if index < 0:
        raise IndexError(index)
    k = 0
    while k < n:
        block = p ** (n - k - 1)
        if index < block:
            rest = []
            for _ in range(n - k - 1):
                rest.append(index % p)
                index //= p
            rest.reverse()
            return tuple([0] * k + [1] + rest)
        index -= block
        k += 1
    raise IndexError("projective point index out of range")


def projective_points(field: GF, n: int) -> Iterator[Tuple[int, ...]]:
    """All canonical points of PG(n-1, p) in the fixed enumeration order."""
    p = field.p
    for k in range(n):
        tail = n - k - 1
        head = [0] * k + [1]
        counter = [0] * tail
        while True:
            yield tuple(head + counter)
            pos = tail - 1
            while pos >= 0:
                counter[pos] += 1
                if counter[pos] < p:
                    break
                counter[pos] = 0
                pos -= 1
            if pos < 0:
                break


def span_points(field: GF, basis: Sequence[Vector]) -> List[Vector]:
    """Canonical points of the projective subspace spanned by basis vectors."""
    p = field.p
    k = len(basis)
    n = len(basis[0]) if basis else 0
    seen = set()
    out: List[Vector] = []
    for idx in range(num_projective_points(p, k)):
        coeffs = projective_point_at(p, k, idx)
        vec = [0] * n
        for c, b in zip(coeffs, basis):
            if c:
                for i in range(n):
                    vec[i] = field.add(vec[i], field.mul(c, b[i]))
        pt = canonical_point(field, vec)
        if pt not in seen:
            seen.add(pt)
            out.append(pt)
    return out


def pair_list(n: int) -> List[Tuple[int, int]]:
    """Lexicographic list of index pairs (j, k), 1 <= j < k <= n."""
    return [(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]


def wedge2_coordinates(field: Field, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    """Pluecker coordinates (x_j*y_k - x_k*y_j) of the line [x, y], pairs in
    lexicographic order; rejects dependent input."""
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    xv = [field.of(a) for a in x]
    yv = [field.of(a) for a in y]
    out = []
    nonzero = False
    for j in range(len(xv)):
        for k in range(j + 1, len(xv)):
            c = field.sub(field.mul(xv[j], yv[k]), field.mul(xv[k], yv[j]))
            if c != field.zero:
                nonzero = True
            out.append(c)
    if not nonzero:
        raise ValueError("dependent vectors span no line")
    return tuple(out)


@dataclass(frozen=True, order=True)
class PluckerLine:
    """A projective line with canonical reduced-echelon basis."""

    basis: Tuple[Vector, Vector]
    wedge: Vector

    @classmethod
    def from_pair(cls, field: Field, x: Sequence[Scalar], y: Sequence[Scalar]) -> "PluckerLine":
        red, pivots = Matrix(field, [x, y]).rref()
        if len(pivots) != 2:
            raise ValueError("dependent vectors span no line")
        b = (red.rows[0], red.rows[1])
        return cls(basis=b, wedge=wedge2_coordinates(field, b[0], b[1]))

    def points(self, field: GF) -> List[Vector]:
        return span_points(field, list(self.basis))

    def contains(self, field: Field, point: Sequence[Scalar]) -> bool:
        m = Matrix(field, [self.basis[0], self.basis[1], point])
        return m.rank() == 2


def subspace_rref(field: Field, vectors: Sequence[Sequence[Scalar]]) -> Tuple[Vector, ...]:
    """Canonical (RREF, zero rows dropped) basis of a vector span."""
    red, pivots = Matrix(field, vectors).rref()
    return tuple(red.rows[i] for i in range(len(pivots)))


def in_span(field: Field, basis: Sequence[Vector], vec: Sequence[Scalar]) -> bool:
    if not basis:
        return all(field.of(x) == field.zero for x in vec)
    rows = list(basis) + [vec]
    return Matrix(field, rows).rank() == len(subspace_rref(field, basis))
