"""Pure-Python hot kernels for GF(p) scans.

Mirrors the compiled extension's API and must produce identical output
(same enumeration order, same reduced-echelon kernel convention) so the
backends are interchangeable.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

BACKEND = "python"


def _rref_mod_p(work: List[List[int]], ncols: int, p: int, inv: List[int]):
    """In-place reduced row echelon form mod p; returns pivot columns."""
    nrows = len(work)
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = -1
        for i in range(r, nrows):
            if work[i][c]:
                pivot = i
                break
        if pivot < 0:
            continue
        if pivot != r:
            work[r], work[pivot] = work[pivot], work[r]
        piv_inv = inv[work[r][c]]
        if piv_inv != 1:
            row = work[r]
            for j in range(c, ncols):
                row[j] = (row[j] * piv_inv) % p
        row_r = work[r]
        for i in range(nrows):
            if i != r and work[i][c]:
                f = work[i][c]
                row_i = work[i]
                for j in range(c, ncols):
                    row_i[j] = (row_i[j] - f * row_r[j]) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _inverse_table(p: int) -> List[int]:
    inv = [0] * p
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    return inv


def rank_mod_p(rows: List[List[int]], p: int) -> int:
    if not rows:
        return 0
    work = [[x % p for x in row] for row in rows]
    return len(_rref_mod_p(work, len(rows[0]), p, _inverse_table(p)))


def kernel_mod_p(rows: List[List[int]], p: int) -> List[Tuple[int, ...]]:
    """Reduced-echelon right-kernel basis, free columns ascending."""
    if not rows:
        return []
    ncols = len(rows[0])
    work = [[x % p for x in row] for row in rows]
    pivots = _rref_mod_p(work, ncols, p, _inverse_table(p))
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = [0] * ncols
        vec[f] = 1
        for r, c in enumerate(pivots):
            vec[c] = (-work[r][f]) % p
        basis.append(tuple(vec))
    return basis


def graph_stats(offsets: List[int], neighbors: List[int]) -> Tuple[int, int, bool]:
    """Exact girth and diameter of an undirected graph via BFS from every
    vertex (adjacency in CSR form); girth/diameter are -1 when undefined
    (acyclic / disconnected)."""
    nv = len(offsets) - 1
    girth = -1
    diameter = 0
    dist = [-1] * nv
    parent = [-1] * nv
    queue = [0] * nv
    for root in range(nv):
        for i in range(nv):
            dist[i] = -1
            parent[i] = -1
        dist[root] = 0
        queue[0] = root
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            for ei in range(offsets[u], offsets[u + 1]):
                v = neighbors[ei]
                if dist[v] < 0:
                    dist[v] = du + 1
                    parent[v] = u
                    queue[tail] = v
                    tail += 1
                elif v != parent[u]:
                    cycle = du + dist[v] + 1
                    if girth < 0 or cycle < girth:
                        girth = cycle
        if tail != nv:
            return girth, -1, False
        ecc = dist[queue[tail - 1]]
        if ecc > diameter:
            diameter = ecc
    return girth, diameter, True


def scan(
    cube: List[List[List[int]]],
    n: int,
    p: int,
    start: int,
    stop: int,
    want_kernels: bool,
) -> Tuple[List[Tuple[int, ...]], List[int], Optional[List[List[Tuple[int, ...]]]]]:
    """Degrees (and optionally radical bases) of canonical projective points
    with enumeration indices in [start, stop)."""
    from .projective import projective_point_at

    inv = _inverse_table(p)
    points: List[Tuple[int, ...]] = []
    degrees: List[int] = []
    kernels: Optional[List[List[Tuple[int, ...]]]] = [] if want_kernels else None
    for idx in range(start, stop):
        u = projective_point_at(p, n, idx)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            ui = u[i]
            if not ui:
                continue
            plane = cube[i]
            for j in range(n):
                row = plane[j]
                mj = m[j]
                for k in range(n):
                    v = row[k]
                    if v:
                        mj[k] = (mj[k] + ui * v) % p
        if want_kernels:
            basis = kernel_mod_p(m, p)
            rank = n - len(basis)
            kernels.append(basis)
        else:
            rank = len(_rref_mod_p(m, n, p, inv))
        points.append(u)
        degrees.append(n - 1 - rank)
    return points, degrees, kernels
