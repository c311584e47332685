"""Vertex-set calculus over finite direction models.

A *direction model* is a finite vertex set together with ``rank`` commuting
inverse-image operators, one per direction.  Subsets of the vertex set stand
for ideals of the function algebra over the vertices: every subset gives an
ideal, the annihilator of an ideal is the set complement, and all norm
conditions collapse to 0/1 membership tests.  The whole ideal arithmetic used
by the family checkers therefore reduces to bit operations.

Representation conventions, shared across the package:

* a vertex set is an ``int`` bitmask over vertex indices (bit ``v`` set means
  vertex ``v`` is a member);
* a set of directions ``F`` within ``{1, .., k}`` is an ``int`` bitmask with
  bit ``i - 1`` standing for direction ``i``;
* a multidegree is a tuple of ``k`` nonnegative ints;
* an ideal family is a tuple of ``2**k`` vertex sets indexed by direction
  mask (a total map from direction sets to vertex sets).

All operations are pure functions of immutable inputs.  A model never mutates
after construction (aside from idempotent caching of lookup tables), so it is
safe to share across concurrent workers.
"""

from __future__ import annotations

import abc
from typing import Iterator

#: Vertex sets are fixed-width bitmasks; larger models are rejected at load.
#: This is a desk-scale tool and every enumeration is exponential anyway.
MAX_VERTICES = 64

#: Tables over all 2**|V| subsets are only materialised below this size.
_TABLE_LIMIT = 16

VertexSet = int
SubsetMask = int
MultiDegree = tuple[int, ...]
IdealFamily = tuple[int, ...]


class InvalidInputError(ValueError):
    """A document, argument or index failed validation."""


class BudgetExceededError(RuntimeError):
    """An enumeration, sampling or retry budget ran out.

    ``stats`` carries partial-progress counters for diagnostics.
    """

    def __init__(self, message: str, stats: dict | None = None):
        super().__init__(message)
        self.stats = dict(stats or {})


class InternalConsistencyError(RuntimeError):
    """A structural invariant that should be unbreakable failed.

    Seeing this means a checker or enumerator bug, not bad user input.
    """


# ---------------------------------------------------------------------------
# direction-mask helpers


def mask_of(directions, rank: int) -> SubsetMask:
    """Bitmask for an iterable of 1-based direction indices."""
    out = 0
    for i in directions:
        if not 1 <= i <= rank:
            raise InvalidInputError(f"direction {i} out of range 1..{rank}")
        out |= 1 << (i - 1)
    return out


def mask_members(mask: SubsetMask) -> tuple[int, ...]:
    """1-based direction indices of a mask, ascending."""
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def mask_label(mask: SubsetMask) -> str:
    """Serialized form of a direction set: comma-joined sorted elements."""
    return ",".join(str(i) for i in mask_members(mask))


def label_to_mask(label: str, rank: int) -> SubsetMask:
    if label == "":
        return 0
    try:
        parts = [int(p) for p in label.split(",")]
    except ValueError:
        raise InvalidInputError(f"bad direction-set label {label!r}") from None
    if parts != sorted(set(parts)):
        raise InvalidInputError(f"direction-set label {label!r} not canonical")
    return mask_of(parts, rank)


def canonical_masks(rank: int) -> tuple[SubsetMask, ...]:
    """All direction masks ordered by (popcount, numeric value)."""
    return tuple(sorted(range(1 << rank), key=lambda m: (m.bit_count(), m)))


def submasks(mask: SubsetMask) -> Iterator[SubsetMask]:
    """All submasks of ``mask``, descending, ending with 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


# ---------------------------------------------------------------------------
# the model interface


class DirectionModel(abc.ABC):
    """Finite vertex set with ``rank`` commuting inverse-image operators.

    Subclasses provide ``_phi`` and are expected to keep these invariants,
    which the test suite checks exhaustively on small instances:

    * monotone: ``H <= H'`` implies ``phi(i, H) <= phi(i, H')``;
    * intersection-preserving: ``phi(i, H & H') == phi(i, H) & phi(i, H')``;
    * commuting: ``phi(i, phi(j, H)) == phi(j, phi(i, H))``.
    """

    rank: int
    vertex_names: tuple[str, ...]

    def _init_base(self, rank: int, vertex_names) -> None:
        names = tuple(str(n) for n in vertex_names)
        if rank < 1:
            raise InvalidInputError(f"rank must be >= 1, got {rank}")
        if not names:
            raise InvalidInputError("model needs at least one vertex")
        if len(names) > MAX_VERTICES:
            raise InvalidInputError(
                f"at most {MAX_VERTICES} vertices supported, got {len(names)}"
            )
        if len(set(names)) != len(names):
            dup = sorted(n for n in set(names) if names.count(n) > 1)
            raise InvalidInputError(f"duplicate vertex names: {dup}")
        self.rank = rank
        self.vertex_names = names
        self._index = {n: v for v, n in enumerate(names)}
        self._phi_tables: dict[int, list[int]] = {}

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_names)

    @property
    def full(self) -> VertexSet:
        """Bitmask of the whole vertex set."""
        return (1 << len(self.vertex_names)) - 1

    @property
    def full_directions(self) -> SubsetMask:
        return (1 << self.rank) - 1

    def vertex_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InvalidInputError(f"unknown vertex name {name!r}") from None

    def set_of_names(self, names) -> VertexSet:
        out = 0
        for n in names:
            bit = 1 << self.vertex_index(n)
            if out & bit:
                raise InvalidInputError(f"vertex {n!r} listed twice")
            out |= bit
        return out

    def names_of_set(self, subset: VertexSet) -> tuple[str, ...]:
        """Members of a vertex set in canonical (index) order."""
        _check_subset(self, subset)
        return tuple(
            self.vertex_names[v] for v in range(self.vertex_count) if subset >> v & 1
        )

    @abc.abstractmethod
    def _phi(self, i: int, subset: VertexSet) -> VertexSet:
        """Inverse-image operator for direction ``i`` (1-based), unvalidated."""

    def phi(self, i: int, subset: VertexSet) -> VertexSet:
        _check_direction(self, i)
        _check_subset(self, subset)
        return self._phi(i, subset)

    def phi_table(self, i: int) -> list[int]:
        """Lookup table of ``phi(i, .)`` over every subset; cached.

        Only available on small models; sweeps and enumerations that need it
        operate well below the limit.
        """
        _check_direction(self, i)
        table = self._phi_tables.get(i)
        if table is None:
            if self.vertex_count > _TABLE_LIMIT:
                raise InvalidInputError(
                    f"phi tables limited to {_TABLE_LIMIT} vertices, "
                    f"model has {self.vertex_count}"
                )
            table = [self._phi(i, h) for h in range(1 << self.vertex_count)]
            self._phi_tables[i] = table
        return table

    @abc.abstractmethod
    def to_doc(self) -> dict:
        """JSON-ready document for this model."""


def _check_subset(model: DirectionModel, subset: int) -> None:
    if not isinstance(subset, int) or subset < 0 or subset > model.full:
        raise InvalidInputError(
            f"vertex set {subset!r} does not fit a model with "
            f"{model.vertex_count} vertices"
        )


def _check_direction(model: DirectionModel, i: int) -> None:
    if not isinstance(i, int) or not 1 <= i <= model.rank:
        raise InvalidInputError(f"direction {i!r} out of range 1..{model.rank}")


def _check_fmask(model, f: int, *, nonempty=False, proper=False) -> None:
    if not isinstance(f, int) or f < 0 or f > model.full_directions:
        raise InvalidInputError(f"direction set {f!r} out of range for rank {model.rank}")
    if nonempty and f == 0:
        raise InvalidInputError("direction set must be non-empty here")
    if proper and f == model.full_directions:
        raise InvalidInputError("direction set must be proper here")


def check_family(model: DirectionModel, family) -> IdealFamily:
    """Validate a family: total over all 2**rank masks, sets in range."""
    fam = tuple(family)
    if len(fam) != 1 << model.rank:
        raise InvalidInputError(
            f"family must have {1 << model.rank} entries, got {len(fam)}"
        )
    for subset in fam:
        _check_subset(model, subset)
    return fam


def free_directions(model: DirectionModel, f: SubsetMask) -> tuple[int, ...]:
    """1-based directions outside the direction set ``f``."""
    return tuple(i for i in range(1, model.rank + 1) if not f >> (i - 1) & 1)


# ---------------------------------------------------------------------------
# the derived operators


def phi_n(model: DirectionModel, subset: VertexSet, degree) -> VertexSet:
    """Composite inverse image along a multidegree.

    Order of composition is irrelevant because the per-direction operators
    commute; the zero degree is the identity.
    """
    _check_subset(model, subset)
    degree = tuple(degree)
    if len(degree) != model.rank or any(e < 0 for e in degree):
        raise InvalidInputError(
            f"degree {degree!r} invalid for a rank-{model.rank} model"
        )
    out = subset
    for i, e in enumerate(degree, start=1):
        for _ in range(e):
            out = model._phi(i, out)
    return out


def ker_phi(model: DirectionModel, i: int) -> VertexSet:
    """Vertices killed by direction ``i``; equals the image of the empty set."""
    _check_direction(model, i)
    return model._phi(i, 0)


def j_family(model: DirectionModel) -> IdealFamily:
    """Joint-kernel-annihilator family.

    Entry at ``F`` is the complement of the vertices killed by every
    direction in ``F``; the empty direction set maps to the empty set.
    """
    kers = [ker_phi(model, i) for i in range(1, model.rank + 1)]
    full = model.full
    out = [0] * (1 << model.rank)
    for f in range(1, 1 << model.rank):
        joint = full
        for i in range(model.rank):
            if f >> i & 1:
                joint &= kers[i]
        out[f] = full & ~joint
    return tuple(out)


def largest_perp_invariant(
    model: DirectionModel, k0: VertexSet, f: SubsetMask
) -> VertexSet:
    """Greatest subset of ``k0`` closed under every direction outside ``f``.

    Greatest fixed point of the monotone map ``S -> k0 & AND_i phi(i, S)``
    over directions ``i`` outside ``f``; the decreasing iteration from ``k0``
    reaches it in at most ``|V|`` steps.  Equivalently, the intersection of
    all composite inverse images of ``k0`` along degrees supported outside
    ``f`` (the bounded-intersection oracle in :mod:`giideals.oracles` checks
    this equivalence on small models).
    """
    _check_subset(model, k0)
    _check_fmask(model, f)
    free = free_directions(model, f)
    s = k0
    while True:
        t = s
        for i in free:
            t &= model._phi(i, s)
        if t == s:
            return s
        s = t


def i_family(model: DirectionModel) -> IdealFamily:
    """Largest perpendicular-invariant restriction of :func:`j_family`.

    The partially ordered family whose quotient defines the canonical
    boundary relations; entry at the empty direction set is empty.
    """
    jf = j_family(model)
    return tuple(
        largest_perp_invariant(model, jf[f], f) for f in range(1 << model.rank)
    )


def xf_inverse(model: DirectionModel, subset: VertexSet, f: SubsetMask) -> VertexSet:
    """Intersection of inverse images over all nonzero 0/1 degrees inside ``f``."""
    _check_subset(model, subset)
    _check_fmask(model, f, nonempty=True)
    out = model.full
    for sub in submasks(f):
        if sub == 0:
            continue
        t = subset
        for i in mask_members(sub):
            t = model._phi(i, t)
        out &= t
    return out


def jf_of(model: DirectionModel, subset: VertexSet, f: SubsetMask) -> VertexSet:
    """Division ideal of a vertex set in the directions of ``f``.

    In the commutative setting a vertex divides ``subset`` against
    :func:`xf_inverse` exactly when it lies outside the inverse-image
    intersection or already inside ``subset``; point masses at distinct
    vertices multiply to zero.
    """
    return (model.full & ~xf_inverse(model, subset, f)) | subset


def inv_set(model: DirectionModel, family, f: SubsetMask) -> VertexSet:
    """Perpendicular-invariant core of the meet of all strict supersets of ``f``."""
    fam = check_family(model, family)
    _check_fmask(model, f, nonempty=True, proper=True)
    k0 = model.full
    for d in range(1 << model.rank):
        if d != f and d & f == f:
            k0 &= fam[d]
    return largest_perp_invariant(model, k0, f)


def lim_set(model: DirectionModel, subset: VertexSet, f: SubsetMask) -> VertexSet:
    """Vertices eventually always inside the inverse images of ``subset``.

    Contract: a vertex is in the result iff there is a degree ``n`` supported
    outside ``f`` such that the vertex lies in ``phi_n(subset, m)`` for every
    ``m >= n`` supported outside ``f``.

    Computed as the least fixed point of ``S -> K | OR_i phi(i, S)`` over the
    free directions, starting from ``K = largest_perp_invariant(subset, f)``.
    Why this is exact on a finite model: the operators preserve intersections
    and the subset lattice is finite, so ``phi_n(K, n)`` equals the
    intersection of ``phi_n(subset, m)`` over all ``m >= n`` supported
    outside ``f``; since ``K`` is closed under the free directions, the
    family ``phi_n(K, n)`` increases along the directed order of degrees, and
    its union -- the set described by the contract -- is what the iteration
    reaches.  The bounded-degree oracle in :mod:`giideals.oracles` checks the
    contract directly on small models.
    """
    _check_subset(model, subset)
    _check_fmask(model, f, nonempty=True, proper=True)
    k0 = largest_perp_invariant(model, subset, f)
    free = free_directions(model, f)
    s = k0
    while True:
        t = k0
        for i in free:
            t |= model._phi(i, s)
        if t == s:
            return s
        s = t
