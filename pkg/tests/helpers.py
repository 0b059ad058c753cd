"""Brute-force reference implementations used only by the tests.

Everything here decides properties straight from the definitions by
enumerating whole families of sets, so it stays independent of the
polynomial production paths it is used to check.
"""

from __future__ import annotations

from stratkit import FiniteSpace
from stratkit.oracle import labeled_preorder_rows


def all_spaces(max_n: int):
    """Every labeled space with at most max_n points (as order topologies)."""
    for n in range(max_n + 1):
        points = tuple(str(i) for i in range(n))
        for rows in labeled_preorder_rows(n):
            yield FiniteSpace(points, rows)


def open_masks(space: FiniteSpace) -> list[int]:
    return [m for m in range(1 << len(space.points)) if space.is_open_mask(m)]


def closed_masks(space: FiniteSpace) -> list[int]:
    full = space.full_mask
    return [full & ~m for m in open_masks(space)]


def brute_closure_mask(space: FiniteSpace, mask: int) -> int:
    """Smallest closed superset: intersect every closed superset."""
    acc = space.full_mask
    for c in closed_masks(space):
        if not mask & ~c:
            acc &= c
    return acc


def brute_locally_closed(space: FiniteSpace, mask: int) -> bool:
    """Direct search for an open/closed pair intersecting to the set."""
    opens = open_masks(space)
    for o in opens:
        for c in closed_masks(space):
            if o & c == mask:
                return True
    return False


def brute_map_checks(f) -> tuple[bool, bool, bool]:
    """(continuous, open, closed) from the full open/closed families."""
    src_open = set(open_masks(f.source))
    tgt_open = set(open_masks(f.target))
    src_closed = set(closed_masks(f.source))
    tgt_closed = set(closed_masks(f.target))
    cont = all(f.preimage_mask(u) in src_open for u in tgt_open)
    opn = all(f.image_mask(u) in tgt_open for u in src_open)
    cls = all(f.image_mask(c) in tgt_closed for c in src_closed)
    return cont, opn, cls


def brute_saturations(dec) -> tuple[bool, bool]:
    """Semicontinuity saturation formulas quantified over whole families."""
    space = dec.space
    sat_open = True
    for u in open_masks(space):
        sat = dec._preimage_mask(dec._strata_meeting_mask(u))
        if not space.is_open_mask(sat):
            sat_open = False
            break
    sat_closed = True
    for c in closed_masks(space):
        sat = dec._preimage_mask(dec._strata_meeting_mask(c))
        if not space.is_closed_mask(sat):
            sat_closed = False
            break
    return sat_open, sat_closed
