"""Bundled reference diagrams, keyed by name.

All are PD strings except where noted; signs under this parser's convention
are pinned by the test suite (writhes: trefoils +3/-3, figure-eight 0,
Hopf variants +2/-2, kinks +1/-1).  ``hopf_r2`` is the positive Hopf link
with an extra Reidemeister-2 finger of one component pushed over the other,
so it must reproduce ``hopf_pos`` exactly.
"""

from __future__ import annotations

from .diagram import LinkDiagram, parse

FIXTURES: dict[str, str] = {
    "unknot0": "U",
    "unknot_kink_pos": "X[1,2,2,1]",
    "unknot_kink_neg": "X[1,1,2,2]",
    "hopf_pos": "X[1,4,2,3] X[3,2,4,1]",
    "hopf_neg": "X[1,3,2,4] X[3,1,4,2]",
    "trefoil_right": "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]",
    "trefoil_left": "X[4,2,5,1] X[6,4,1,3] X[2,6,3,5]",
    "figure_eight": "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]",
    "unlink2": "U U",
    "unlink3": "U U U",
    "hopf_r2": "X[1,8,2,5] X[5,2,6,3] X[6,3,7,4] X[7,1,8,4]",
}


def fixture(name: str) -> LinkDiagram:
    return parse(FIXTURES[name])


def fixture_names() -> tuple[str, ...]:
    return tuple(FIXTURES)
