"""Family lattices: cover structure, DOT and JSON export.

Nodes are enumerated families; node identity is the hash of the canonical
family document, so ids are stable across runs.  Cover edges are the
transitive reduction of pointwise containment.  Exports are byte-stable for
a given input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DirectionModel,
    IdealFamily,
    InternalConsistencyError,
    InvalidInputError,
)
from .families import EnumerationResult, family_sort_key
from .modelio import family_to_doc, fingerprint


@dataclass(frozen=True)
class LatticeGraph:
    """Hasse diagram of a family set, with payloads and extremes."""

    rank: int
    vertex_names: tuple[str, ...]
    nodes: tuple[tuple[str, IdealFamily], ...]  # (node id, family), canonical order
    cover_edges: tuple[tuple[str, str], ...]  # (lower id, upper id)
    bottom: str
    top: str

    def family_of(self, node_id: str) -> IdealFamily:
        for nid, fam in self.nodes:
            if nid == node_id:
                return fam
        raise InvalidInputError(f"unknown node id {node_id!r}")


def _le(a: IdealFamily, b: IdealFamily) -> bool:
    return all(x & ~y == 0 for x, y in zip(a, b))


def build_lattice(model: DirectionModel, result: EnumerationResult) -> LatticeGraph:
    """Cover structure of an enumeration, with meet-closure verified.

    A missing pairwise meet means a checker or enumerator bug, so it raises
    an internal-consistency error rather than an input error.
    """
    fams = list(result.families)
    if not fams:
        raise InvalidInputError("cannot build a lattice from an empty enumeration")
    fams.sort(key=lambda fam: family_sort_key(model, fam))
    index = {fam: n for n, fam in enumerate(fams)}
    if len(index) != len(fams):
        raise InternalConsistencyError("duplicate families in enumeration result")

    for a in fams:
        for b in fams:
            m = tuple(x & y for x, y in zip(a, b))
            if m not in index:
                raise InternalConsistencyError(
                    "family set is not closed under pointwise intersection"
                )

    ids = [fingerprint(family_to_doc(model, fam)) for fam in fams]

    less = [[False] * len(fams) for _ in fams]
    for a_i, a in enumerate(fams):
        for b_i, b in enumerate(fams):
            less[a_i][b_i] = a_i != b_i and _le(a, b)

    edges = []
    for a_i in range(len(fams)):
        for b_i in range(len(fams)):
            if not less[a_i][b_i]:
                continue
            if any(less[a_i][c_i] and less[c_i][b_i] for c_i in range(len(fams))):
                continue
            edges.append((ids[a_i], ids[b_i]))

    bottoms = [i for i in range(len(fams)) if not any(less[j][i] for j in range(len(fams)))]
    tops = [i for i in range(len(fams)) if not any(less[i][j] for j in range(len(fams)))]
    if len(bottoms) != 1 or len(tops) != 1:
        raise InternalConsistencyError("family set has no unique bottom or top")
    top_fam = fams[tops[0]]
    if any(s != model.full for s in top_fam):
        raise InternalConsistencyError("top of the family set is not the all-V family")

    return LatticeGraph(
        rank=model.rank,
        vertex_names=model.vertex_names,
        nodes=tuple(zip(ids, fams)),
        cover_edges=tuple(edges),
        bottom=ids[bottoms[0]],
        top=ids[tops[0]],
    )


def _node_label(lattice: LatticeGraph, fam: IdealFamily) -> str:
    """Compact family notation: nonempty entries as "F:{v,..}", "()" for the
    empty direction set; the all-empty family reads "all-empty"."""
    from .core import canonical_masks, mask_label

    parts = []
    for m in canonical_masks(lattice.rank):
        if fam[m] == 0:
            continue
        names = [
            lattice.vertex_names[v]
            for v in range(len(lattice.vertex_names))
            if fam[m] >> v & 1
        ]
        label = mask_label(m) or "()"
        parts.append(f"{label}:{{{','.join(names)}}}")
    return " ".join(parts) if parts else "all-empty"


def _height(fam: IdealFamily) -> int:
    return sum(s.bit_count() for s in fam)


def export_dot(lattice: LatticeGraph) -> str:
    """Graphviz digraph, edges lower -> upper, rank hints by family height."""
    lines = ["digraph family_lattice {", "  rankdir=BT;", '  node [shape=box];']
    for nid, fam in lattice.nodes:
        lines.append(f'  "{nid}" [label="{_node_label(lattice, fam)}"];')
    for lo, hi in lattice.cover_edges:
        lines.append(f'  "{lo}" -> "{hi}";')
    by_height: dict[int, list[str]] = {}
    for nid, fam in lattice.nodes:
        by_height.setdefault(_height(fam), []).append(nid)
    for h in sorted(by_height):
        if len(by_height[h]) > 1:
            row = "; ".join(f'"{nid}"' for nid in by_height[h])
            lines.append(f"  {{ rank=same; {row}; }}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(lattice: LatticeGraph) -> str:
    """JSON mirror of the lattice fields, stable for a given input."""
    import json

    doc = {
        "rank": lattice.rank,
        "vertices": list(lattice.vertex_names),
        "nodes": [
            {
                "id": nid,
                "family": {
                    label: names
                    for label, names in _family_sets(lattice, fam).items()
                },
            }
            for nid, fam in lattice.nodes
        ],
        "cover_edges": [[lo, hi] for lo, hi in lattice.cover_edges],
        "bottom": lattice.bottom,
        "top": lattice.top,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _family_sets(lattice: LatticeGraph, fam: IdealFamily) -> dict:
    from .core import mask_label

    return {
        mask_label(m): [
            lattice.vertex_names[v]
            for v in range(len(lattice.vertex_names))
            if fam[m] >> v & 1
        ]
        for m in range(len(fam))
    }
