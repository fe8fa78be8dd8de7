"""Oriented planar link diagrams: parsing, validation, signs, linking.

Two input formats are supported.

``X[a,b,c,d]`` tokens are PD codes: the four arcs at a crossing listed
rotationally starting from the incoming under-strand ``a``, so the
under-strand runs a -> c and the over-strand occupies slots b and d.  The
over-strand's direction is not part of the notation; it is recovered by
constraint propagation (every arc must begin exactly once and end exactly
once), with a numeric-successor tie-break for components that never pass
under.  The crossing sign is +1 when the over-strand runs b -> d and -1
when it runs d -> b; under this convention the PD
``X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]`` is the writhe +3 trefoil.

``C[s;a,b,c,d]`` tokens carry the same four slots plus an explicit sign
``s`` that is taken verbatim, so no sign convention is involved; the
over-strand's direction is still recovered by the same consistency
propagation.  ``U`` adds a crossingless circle in either format.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "DiagramError",
    "Crossing",
    "LinkDiagram",
    "parse_pd",
    "parse_signed",
    "parse",
    "render_signed",
    "linking_matrix",
    "writhe",
]


class DiagramError(ValueError):
    """Malformed or inconsistent diagram input."""


@dataclass(frozen=True)
class Crossing:
    """One crossing with resolved orientations on all four arc slots."""

    id: int
    sign: int
    in_under: int
    in_over: int
    out_under: int
    out_over: int

    def __post_init__(self):
        if self.sign not in (+1, -1):
            raise DiagramError(f"crossing {self.id}: sign must be +1 or -1")
        if self.in_under == self.out_under or self.in_over == self.out_over:
            raise DiagramError(
                f"crossing {self.id}: a strand cannot enter and leave on the same arc"
            )


@dataclass(frozen=True)
class LinkDiagram:
    """A validated oriented diagram.

    ``components`` lists the traced arc cycles, ordered by their smallest
    arc label; crossingless circles are counted separately in
    ``free_loops`` and occupy the component indices after the traced ones.
    """

    crossings: tuple[Crossing, ...]
    free_loops: int
    arcs: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def component_count(self) -> int:
        return len(self.components) + self.free_loops

    def component_of(self, arc: int) -> int:
        return self._component_index()[arc]

    def _component_index(self) -> dict[int, int]:
        idx = getattr(self, "_comp_idx", None)
        if idx is None:
            idx = {}
            for i, comp in enumerate(self.components):
                for arc in comp:
                    idx[arc] = i
            object.__setattr__(self, "_comp_idx", idx)
        return idx

    def to_json(self) -> dict:
        return {
            "crossings": [
                {
                    "id": c.id,
                    "sign": c.sign,
                    "in_under": c.in_under,
                    "in_over": c.in_over,
                    "out_under": c.out_under,
                    "out_over": c.out_over,
                }
                for c in self.crossings
            ],
            "arcs": list(self.arcs),
            "free_loops": self.free_loops,
            "components": [list(comp) for comp in self.components],
        }


# ----------------------------------------------------------------------
# Tokenizing
# ----------------------------------------------------------------------

_PD_TOKEN = re.compile(r"^X\[(\d+),(\d+),(\d+),(\d+)\]$")
_SIGNED_TOKEN = re.compile(r"^C\[([+\-−]);(\d+),(\d+),(\d+),(\d+)\]$")


def _tokens(text: str) -> list[str]:
    toks = text.split()
    if not toks:
        raise DiagramError("empty diagram input")
    return toks


def _check_arc_occurrences(slot_lists: list[tuple[int, ...]]):
    counts: dict[int, int] = {}
    for slots in slot_lists:
        for arc in slots:
            if arc <= 0:
                raise DiagramError(f"arc identifiers must be positive, got {arc}")
            counts[arc] = counts.get(arc, 0) + 1
    bad = sorted(a for a, k in counts.items() if k != 2)
    if bad:
        raise DiagramError(f"arcs {bad} do not appear exactly twice")
    return sorted(counts)


# ----------------------------------------------------------------------
# PD parsing with orientation inference
# ----------------------------------------------------------------------

def parse_pd(text: str) -> LinkDiagram:
    """Parse whitespace-separated ``X[a,b,c,d]`` / ``U`` tokens."""
    raw: list[tuple[int, int, int, int]] = []
    free_loops = 0
    for tok in _tokens(text):
        if tok == "U":
            free_loops += 1
            continue
        m = _PD_TOKEN.match(tok)
        if not m:
            raise DiagramError(f"malformed PD token {tok!r}")
        a, b, c, d = (int(g) for g in m.groups())
        if a == c or b == d:
            raise DiagramError(f"token {tok!r}: strand re-enters its own slot")
        raw.append((a, b, c, d))
    return _orient_and_assemble(raw, None, free_loops)


def _orient_and_assemble(
    raw: list[tuple[int, int, int, int]],
    signs: list[int] | None,
    free_loops: int,
) -> LinkDiagram:
    """Infer over-strand directions; signs from the PD rule or verbatim."""
    arcs = _check_arc_occurrences(raw)

    # Occurrences: arc -> [(crossing, slot)] with slots named a/b/c/d.
    occurrences: dict[int, list[tuple[int, str]]] = {a: [] for a in arcs}
    for i, (a, b, c, d) in enumerate(raw):
        for arc, slot in ((a, "a"), (b, "b"), (c, "c"), (d, "d")):
            occurrences[arc].append((i, slot))

    # direction[i] is "bd" (over runs b->d, sign +1) or "db" (sign -1).
    direction: dict[int, str] = {}

    def role(arc: int, here: tuple[int, str]):
        """The known start/end role of arc's other occurrence, if any."""
        for occ in occurrences[arc]:
            if occ == here:
                continue
            i, slot = occ
            if slot == "a":
                return "end"
            if slot == "c":
                return "start"
            if i in direction:
                over_in = raw[i][1] if direction[i] == "bd" else raw[i][3]
                return "end" if arc == over_in else "start"
            return None
        return None

    def infer(i: int):
        """Forced direction at crossing i, or None; DiagramError on clash."""
        _, b, _, d = raw[i]
        want = None
        other_b = role(b, (i, "b"))
        if other_b == "end":
            want = "db"  # b already ends elsewhere, so b starts here
        elif other_b == "start":
            want = "bd"
        other_d = role(d, (i, "d"))
        if other_d == "end":
            want_d = "bd"
        elif other_d == "start":
            want_d = "db"
        else:
            want_d = None
        if want is not None and want_d is not None and want != want_d:
            raise DiagramError(
                f"crossing {i}: no consistent orientation for arcs {b}, {d}"
            )
        return want if want is not None else want_d

    undecided = set(range(len(raw)))
    while undecided:
        progressed = False
        for i in sorted(undecided):
            got = infer(i)
            if got is not None:
                direction[i] = got
                undecided.discard(i)
                progressed = True
        if progressed:
            continue
        # Components that never pass under: break the tie by arc numbering,
        # sending each over-strand towards its cyclic numeric successor.
        i = min(undecided)
        _, b, _, d = raw[i]
        labels = sorted(
            {arc for j in undecided for arc in (raw[j][1], raw[j][3])}
        )
        succ = {x: labels[(k + 1) % len(labels)] for k, x in enumerate(labels)}
        direction[i] = "bd" if succ.get(b) == d else "db" if succ.get(d) == b else "bd"
        undecided.discard(i)

    crossings = []
    for i, (a, b, c, d) in enumerate(raw):
        if direction[i] == "bd":
            sign = +1 if signs is None else signs[i]
            crossings.append(Crossing(i, sign, a, b, c, d))
        else:
            sign = -1 if signs is None else signs[i]
            crossings.append(Crossing(i, sign, a, d, c, b))
    return _assemble(crossings, free_loops, arcs)


# ----------------------------------------------------------------------
# Signed parsing
# ----------------------------------------------------------------------

def parse_signed(text: str) -> LinkDiagram:
    """Parse ``C[s;a,b,c,d]`` / ``U`` tokens; signs are taken verbatim."""
    raw: list[tuple[int, int, int, int]] = []
    signs: list[int] = []
    free_loops = 0
    for tok in _tokens(text):
        if tok == "U":
            free_loops += 1
            continue
        m = _SIGNED_TOKEN.match(tok)
        if not m:
            raise DiagramError(f"malformed signed token {tok!r}")
        s, a, b, c, d = m.groups()
        a, b, c, d = int(a), int(b), int(c), int(d)
        if a == c or b == d:
            raise DiagramError(f"token {tok!r}: strand re-enters its own slot")
        signs.append(+1 if s == "+" else -1)
        raw.append((a, b, c, d))
    return _orient_and_assemble(raw, signs, free_loops)


def parse(text: str) -> LinkDiagram:
    """Dispatch on token kind: any C token selects the signed format."""
    toks = _tokens(text)
    has_c = any(t.startswith("C[") for t in toks)
    has_x = any(t.startswith("X[") for t in toks)
    if has_c and has_x:
        raise DiagramError("cannot mix X[...] and C[...] tokens in one diagram")
    return parse_signed(text) if has_c else parse_pd(text)


# ----------------------------------------------------------------------
# Assembly: orientation consistency and component tracing
# ----------------------------------------------------------------------

def _assemble(
    crossings: list[Crossing], free_loops: int, arcs: list[int]
) -> LinkDiagram:
    ends: dict[int, tuple[int, str]] = {}
    starts: dict[int, tuple[int, str]] = {}
    for c in crossings:
        for arc, table, kind in (
            (c.in_under, ends, "under"),
            (c.in_over, ends, "over"),
            (c.out_under, starts, "under"),
            (c.out_over, starts, "over"),
        ):
            if arc in table:
                raise DiagramError(
                    f"inconsistent orientation: arc {arc} "
                    f"{'ends' if table is ends else 'starts'} twice"
                )
            table[arc] = (c.id, kind)
    missing = sorted(set(arcs) - set(ends)) + sorted(set(arcs) - set(starts))
    if missing:
        raise DiagramError(f"inconsistent orientation around arcs {sorted(set(missing))}")

    # successor: follow the strand through the crossing where the arc ends
    successor = {}
    for arc in arcs:
        cid, kind = ends[arc]
        c = crossings[cid]
        successor[arc] = c.out_under if kind == "under" else c.out_over

    components = []
    seen: set[int] = set()
    for arc in arcs:
        if arc in seen:
            continue
        cycle = [arc]
        seen.add(arc)
        nxt = successor[arc]
        while nxt != arc:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = successor[nxt]
        components.append(tuple(cycle))
    components.sort(key=lambda comp: min(comp))

    if not crossings and not free_loops and not arcs:
        raise DiagramError("empty diagram")
    return LinkDiagram(
        crossings=tuple(crossings),
        free_loops=free_loops,
        arcs=tuple(arcs),
        components=tuple(components),
    )


# ----------------------------------------------------------------------
# Derived data
# ----------------------------------------------------------------------

def writhe(d: LinkDiagram) -> int:
    """Sum of crossing signs."""
    return sum(c.sign for c in d.crossings)


def linking_matrix(d: LinkDiagram) -> tuple[tuple[int, ...], ...]:
    """lk(i, j) = half the signed count of crossings between components.

    Diagonal entries are 0 by definition; free loops contribute zero rows.
    """
    l = d.component_count
    twice = [[0] * l for _ in range(l)]
    for c in d.crossings:
        i = d.component_of(c.in_under)
        j = d.component_of(c.in_over)
        if i != j:
            twice[i][j] += c.sign
            twice[j][i] += c.sign
    for i in range(l):
        for j in range(l):
            if twice[i][j] % 2:
                raise DiagramError(
                    f"odd signed crossing count between components {i} and {j}; "
                    "diagram is not planar-consistent"
                )
    return tuple(tuple(v // 2 for v in row) for row in twice)


def render_signed(d: LinkDiagram) -> str:
    """Serialize to the signed token format (parse_signed round-trips it)."""
    toks = [
        f"C[{'+' if c.sign > 0 else '-'};{c.in_under},{c.in_over},{c.out_under},{c.out_over}]"
        for c in d.crossings
    ]
    toks.extend("U" for _ in range(d.free_loops))
    return " ".join(toks)
