"""Cube-of-resolutions vertices: thin/thick edge graphs for a choice vector.

Bit 0 at a crossing is always the oriented two-arc smoothing (in-under joins
out-over, in-over joins out-under) and bit 1 always inserts a thick edge,
independent of the crossing sign; the differential direction is chosen later
so that it raises the cohomological degree.

Thick-edge slots are numbered so that slot 1 carries the out-over arc,
slot 2 the out-under arc, slot 3 the in-under arc and slot 4 the in-over
arc; the 0-smoothing of the same crossing joins slots (1,3) and (2,4).
Thin edges are the arc classes generated by all 0-smoothings, identified by
their smallest arc label; crossingless circles of the diagram get the
negative identifiers -1, -2, ... in input order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LinkDiagram

__all__ = ["ThickEdge", "Resolution", "resolve", "p_parity", "degree"]


@dataclass(frozen=True)
class ThickEdge:
    crossing: int
    slots: tuple[int, int, int, int]  # thin-edge ids at slots 1..4


@dataclass(frozen=True)
class Resolution:
    diagram: LinkDiagram
    choice: tuple[int, ...]
    thin_edges: tuple[int, ...]
    thick_edges: tuple[ThickEdge, ...]
    circles: tuple[int, ...]
    arc_to_thin: dict[int, int]

    def thin_of(self, arc: int) -> int:
        return self.arc_to_thin[arc]

    def to_json(self) -> dict:
        return {
            "choice": "".join(str(b) for b in self.choice),
            "thin_edges": list(self.thin_edges),
            "thick_edges": [
                {"crossing": t.crossing, "slots": list(t.slots)}
                for t in self.thick_edges
            ],
            "circles": list(self.circles),
        }


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the smaller label as representative for determinism
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def resolve(d: LinkDiagram, choice) -> Resolution:
    """Build the resolution for one vertex of the cube."""
    choice = tuple(choice)
    if len(choice) != len(d.crossings):
        raise ValueError(
            f"choice length {len(choice)} != crossing count {len(d.crossings)}"
        )
    if any(b not in (0, 1) for b in choice):
        raise ValueError("choice bits must be 0 or 1")

    uf = _UnionFind(d.arcs)
    for c, bit in zip(d.crossings, choice):
        if bit == 0:
            uf.union(c.in_under, c.out_over)
            uf.union(c.in_over, c.out_under)

    arc_to_thin = {arc: uf.find(arc) for arc in d.arcs}
    loop_ids = [-(i + 1) for i in range(d.free_loops)]
    thin_edges = tuple(sorted(set(arc_to_thin.values()) | set(loop_ids)))
    for i, loop in enumerate(loop_ids):
        arc_to_thin[loop] = loop  # loops are their own (closed) thin edges

    thick_edges = []
    incidence = {t: 0 for t in thin_edges}
    for c, bit in zip(d.crossings, choice):
        if bit == 1:
            slots = (
                arc_to_thin[c.out_over],
                arc_to_thin[c.out_under],
                arc_to_thin[c.in_under],
                arc_to_thin[c.in_over],
            )
            thick_edges.append(ThickEdge(crossing=c.id, slots=slots))
            for t in slots:
                incidence[t] += 1

    circles = []
    for t in thin_edges:
        if incidence[t] == 0:
            circles.append(t)
        elif incidence[t] != 2:
            raise RuntimeError(
                f"thin edge {t} has {incidence[t]} thick-edge endpoints; "
                "resolution graph is not a union of circles and intervals"
            )

    return Resolution(
        diagram=d,
        choice=choice,
        thin_edges=thin_edges,
        thick_edges=tuple(thick_edges),
        circles=tuple(circles),
        arc_to_thin=arc_to_thin,
    )


def p_parity(r: Resolution) -> int:
    """Mod-2 circle count after 0-smoothing every thick edge.

    Replacing a thick edge by the 0-smoothing joins its slots (1,3) and
    (2,4); afterwards every thin edge closes up, so circles are exactly the
    classes of that identification.
    """
    uf = _UnionFind(r.thin_edges)
    for t in r.thick_edges:
        uf.union(t.slots[0], t.slots[2])
        uf.union(t.slots[1], t.slots[3])
    classes = {uf.find(t) for t in r.thin_edges}
    return len(classes) % 2


def degree(d: LinkDiagram, choice) -> int:
    """Cohomological degree of a cube vertex: signed count of its 1-bits."""
    choice = tuple(choice)
    if len(choice) != len(d.crossings):
        raise ValueError("choice length does not match crossing count")
    return sum(c.sign for c, bit in zip(d.crossings, choice) if bit == 1)
