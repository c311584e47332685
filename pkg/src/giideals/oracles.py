"""Independent brute-force and bounded oracles.

Everything here recomputes a quantity of the main code path by a different,
deliberately naive route.  The main implementations never call into this
module; it exists to be disagreed with.
"""

from __future__ import annotations

import itertools

from .core import (
    DirectionModel,
    IdealFamily,
    InvalidInputError,
    VertexSet,
    free_directions,
    phi_n,
    submasks,
)
from .kgraph import KGraphSkeleton


def lpi_by_bounded_intersection(
    model: DirectionModel, k0: VertexSet, f: int
) -> VertexSet:
    """Intersection of composite inverse images of ``k0`` over all degrees
    supported outside ``f`` with every coordinate at most ``|V|``.

    The per-coordinate bound suffices: the decreasing fixed-point iteration
    stabilises within ``|V|`` strict steps, and its stage ``m`` equals the
    intersection over degrees of total size at most ``m``.
    """
    free = free_directions(model, f)
    bound = model.vertex_count
    out = k0
    for exps in itertools.product(range(bound + 1), repeat=len(free)):
        degree = [0] * model.rank
        for i, e in zip(free, exps):
            degree[i - 1] = e
        out &= phi_n(model, k0, degree)
    return out


def lpi_by_subset_search(model: DirectionModel, k0: VertexSet, f: int) -> VertexSet:
    """Largest subset of ``k0`` closed under the free directions, found by
    checking every subset.  Exponential; keep to tiny models."""
    if model.vertex_count > 10:
        raise InvalidInputError("subset-search oracle limited to 10 vertices")
    free = free_directions(model, f)
    best = 0
    sub = k0
    while True:
        if all(sub & ~model.phi(i, sub) == 0 for i in free):
            # closed subsets are closed under union, so the maximum is unique
            best |= sub
        if sub == 0:
            return best
        sub = (sub - 1) & k0


def lim_by_bounded_degrees(model: DirectionModel, subset: VertexSet, f: int) -> VertexSet:
    """Direct eventual-containment test with bounded degrees.

    A vertex is accepted iff some degree ``n`` supported outside ``f`` with
    coordinates at most ``B = 2**|V|`` has the vertex inside every composite
    inverse image at degrees ``n <= m <= n + B`` (coordinatewise).  The box
    suffices because each direction acts as a function on the ``2**|V|``
    subsets, so orbits have preperiod plus period at most ``B``.
    """
    free = free_directions(model, f)
    b = 1 << model.vertex_count
    grid: dict[tuple[int, ...], int] = {(0,) * len(free): subset}

    def image_at(exps) -> int:
        got = grid.get(exps)
        if got is not None:
            return got
        for pos in range(len(exps)):
            if exps[pos]:
                prev = exps[:pos] + (exps[pos] - 1,) + exps[pos + 1 :]
                val = model.phi(free[pos], image_at(prev))
                grid[exps] = val
                return val
        raise AssertionError("unreachable")

    out = 0
    for start in itertools.product(range(b + 1), repeat=len(free)):
        acc = model.full
        for offset in itertools.product(range(b + 1), repeat=len(free)):
            exps = tuple(s + o for s, o in zip(start, offset))
            acc &= image_at(exps)
            if acc == 0:
                break
        out |= acc
        if out == model.full:
            break
    return out


def xf_by_direct_degrees(model: DirectionModel, subset: VertexSet, f: int) -> VertexSet:
    """Inverse-image intersection over nonzero 0/1 degrees, no sharing."""
    out = model.full
    for sub in submasks(f):
        if sub == 0:
            continue
        degree = [1 if sub >> (i - 1) & 1 else 0 for i in range(1, model.rank + 1)]
        out &= phi_n(model, subset, degree)
    return out


def t_families_by_filter(model: DirectionModel) -> tuple[IdealFamily, ...]:
    """Every family over the model graded by the public fixed-point check.

    Full sweep over all ``(2**|V|)**(2**rank)`` candidates; keep to tiny
    models.
    """
    from .families import family_sort_key, is_t_family

    nmasks = 1 << model.rank
    if (1 << model.vertex_count) ** nmasks > 1 << 22:
        raise InvalidInputError("brute-force family sweep too large")
    out = [
        fam
        for fam in itertools.product(range(1 << model.vertex_count), repeat=nmasks)
        if is_t_family(model, fam).verdict
    ]
    out.sort(key=lambda fam: family_sort_key(model, fam))
    return tuple(out)


def phi_n_by_matrix_powers(
    model: KGraphSkeleton, subset: VertexSet, degree
) -> VertexSet:
    """Composite inverse image computed from the support of the matrix-power
    product instead of operator composition."""
    degree = tuple(degree)
    if len(degree) != model.rank:
        raise InvalidInputError("degree length must equal the rank")
    n = model.vertex_count

    def mul(a, b):
        return [
            [sum(a[v][x] * b[x][w] for x in range(n)) for w in range(n)]
            for v in range(n)
        ]

    prod = [[1 if v == w else 0 for w in range(n)] for v in range(n)]
    for i, e in enumerate(degree):
        for _ in range(e):
            prod = mul(prod, [list(row) for row in model.adjacency[i]])
    out = 0
    for v in range(n):
        reach = sum(1 << w for w in range(n) if prod[v][w] > 0)
        if reach & ~subset == 0:
            out |= 1 << v
    return out


def transitive_reduction_naive(families, le) -> list[tuple[int, int]]:
    """Cover pairs of a finite order by the cubic textbook loop."""
    m = len(families)
    edges = []
    for a in range(m):
        for b in range(m):
            if a == b or not le(families[a], families[b]):
                continue
            if any(
                c != a
                and c != b
                and le(families[a], families[c])
                and le(families[c], families[b])
                for c in range(m)
            ):
                continue
            edges.append((a, b))
    return edges
