"""Small built-in models used throughout the tests and docs.

The two dynamical systems are the classic two-point counterexamples for this
calculus: ``shift2`` has a joint-kernel-annihilator family that is not
invariant, and ``absorb2`` carries a partially ordered invariant family that
sits inside the canonical family yet fails the per-direction equations.
"""

from __future__ import annotations

from .core import IdealFamily
from .dynsys import PartialMapSystem
from .kgraph import KGraphSkeleton


def shift2() -> PartialMapSystem:
    """Two points; both directions act by the same one-step shift v2 -> v1."""
    shift = {"v2": "v1"}
    return PartialMapSystem(("v1", "v2"), (shift, shift))


def absorb2() -> PartialMapSystem:
    """Two points; direction 1 is the identity, direction 2 absorbs p into q."""
    return PartialMapSystem(
        ("p", "q"), ({"p": "p", "q": "q"}, {"p": "q", "q": "q"})
    )


def absorb2_nested_family(model: PartialMapSystem | None = None) -> IdealFamily:
    """Family on :func:`absorb2` with {p} at the full direction set, else empty.

    Partially ordered, invariant and contained in the canonical family, but
    not a fixed point of the per-direction equations.
    """
    if model is None:
        model = absorb2()
    p = 1 << model.vertex_index("p")
    return (0, 0, 0, p)


def loop1() -> KGraphSkeleton:
    """One vertex with a single loop, rank 1."""
    return KGraphSkeleton(("v",), ([[1]],))


def loops2() -> KGraphSkeleton:
    """One vertex with one loop per colour, rank 2."""
    return KGraphSkeleton(("v",), ([[1]], [[1]]))


def funnel1() -> KGraphSkeleton:
    """Two vertices u, w with edges u -> w and w -> w, rank 1."""
    return KGraphSkeleton(("u", "w"), ([[0, 1], [0, 1]],))


def funnel2() -> KGraphSkeleton:
    """The funnel with the same matrix in both colours, rank 2."""
    mat = [[0, 1], [0, 1]]
    return KGraphSkeleton(("u", "w"), (mat, mat))


def all_models() -> tuple:
    """Every shipped fixture model."""
    return (shift2(), absorb2(), loop1(), loops2(), funnel1(), funnel2())
