"""Reidemeister moves on oriented PD diagrams.

Enumerates every applicable move of the three kinds, in both directions
for R1 and R2.  Candidate-generation for the additions is table-driven
and every candidate is pushed through the diagram validator, so only
planar, orientation-consistent results are ever emitted; this keeps the
case analysis honest at the price of constructing a few dead candidates.

Move kinds: ``R1-``, ``R1+``, ``R2-``, ``R2+``, ``R3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .diagram import (
    Crossing,
    DiagramError,
    OrientedLinkDiagram,
    slot_is_incoming,
    strand_exit_slot,
)

# entry slot of the strand that leaves through a given slot
_ENTRY_OF_EXIT = {2: 0, 3: 1, 1: 3}


@dataclass(frozen=True)
class Move:
    kind: str
    site: tuple
    result: OrientedLinkDiagram


def reidemeister_moves(d: OrientedLinkDiagram) -> list[Move]:
    """All applicable moves; every result is a valid diagram."""
    out: list[Move] = []
    out.extend(r1_removals(d))
    out.extend(r2_removals(d))
    out.extend(r3_moves(d))
    out.extend(r1_additions(d))
    out.extend(r2_additions(d))
    return out


def crossing_decreasing_moves(d: OrientedLinkDiagram) -> list[Move]:
    return list(r1_removals(d)) + list(r2_removals(d))


# -- removals -----------------------------------------------------------


def _splice_out(
    d: OrientedLinkDiagram, removed: set[int], splices: list[tuple[int, int]]
) -> OrientedLinkDiagram:
    """Delete crossings and rejoin strands.

    Each splice ``(u, v)`` records that the strand arriving on edge ``u``
    continues as edge ``v`` through the removed region.  Chains merge via
    union-find; a chain with no surviving occurrence closes into a free
    loop.
    """
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in splices:
        parent[find(u)] = find(v)
    keep = [c for i, c in enumerate(d.crossings) if i not in removed]
    classes: dict[int, list[int]] = {}
    for e in parent:
        classes.setdefault(find(e), []).append(e)
    rep = {}
    for root, members in classes.items():
        r = min(members)
        for e in members:
            rep[e] = r
    new_crossings = [
        Crossing(tuple(rep.get(e, e) for e in c.edges), c.sign) for c in keep
    ]
    used = {e for c in new_crossings for e in c.edges}
    free = d.free_loops + sum(1 for root in classes if rep[root] not in used)
    return OrientedLinkDiagram(tuple(new_crossings), free)


def r1_removals(d: OrientedLinkDiagram) -> Iterator[Move]:
    for ci, c in enumerate(d.crossings):
        for s in range(4):
            s2 = (s + 1) % 4
            if c.edges[s] != c.edges[s2]:
                continue
            loop = c.edges[s]
            others = [t for t in range(4) if t not in (s, s2)]
            u = next(
                c.edges[t] for t in others if slot_is_incoming(c.sign, t)
            )
            v = next(
                c.edges[t] for t in others if not slot_is_incoming(c.sign, t)
            )
            result = _splice_out(d, {ci}, [(u, loop), (loop, v)])
            yield Move("R1-", (ci, s), result)


def _strand_through(d, crossing_index, edge, at_tail):
    """Neighbor edge of ``edge`` along its strand at one endpoint crossing."""
    c = d.crossings[crossing_index]
    if at_tail:
        slot = next(
            s
            for s in range(4)
            if c.edges[s] == edge and not slot_is_incoming(c.sign, s)
        )
        entry = _ENTRY_OF_EXIT[slot]
        return c.edges[entry]
    slot = next(
        s for s in range(4) if c.edges[s] == edge and slot_is_incoming(c.sign, s)
    )
    return c.edges[strand_exit_slot(slot)]


def r2_removals(d: OrientedLinkDiagram) -> Iterator[Move]:
    for face in d.faces():
        if len(face) != 2:
            continue
        (c1, s1), (c2, s2) = face
        if c1 == c2:
            continue
        e = d.crossings[c1].edges[s1]
        f = d.crossings[c2].edges[s2]
        if e == f:
            continue
        e_occ = [(ci, s) for ci in (c1, c2) for s in range(4) if d.crossings[ci].edges[s] == e]
        if len(e_occ) != 2:
            continue  # an edge leaving the bigon pair entirely
        over = [s in (1, 3) for _, s in e_occ]
        if over[0] != over[1]:
            continue
        et, eh = d.edge_ends(e)
        ft, fh = d.edge_ends(f)
        if {et[0], eh[0]} != {c1, c2} or {ft[0], fh[0]} != {c1, c2}:
            continue
        p = _strand_through(d, et[0], e, at_tail=True)
        q = _strand_through(d, eh[0], e, at_tail=False)
        r = _strand_through(d, ft[0], f, at_tail=True)
        s = _strand_through(d, fh[0], f, at_tail=False)
        result = _splice_out(d, {c1, c2}, [(p, e), (e, q), (r, f), (f, s)])
        yield Move("R2-", (c1, c2, e, f), result)


# -- additions ----------------------------------------------------------


def _replace_head(raw, d, edge, new_edge):
    """Point the head occurrence of ``edge`` at a new label, in place."""
    _, (ci, slot) = d.edge_ends(edge)
    raw[ci][0][slot] = new_edge


def r1_additions(d: OrientedLinkDiagram) -> Iterator[Move]:
    fresh0 = 2 * d.n_crossings
    for e in d.edges:
        loop, m = fresh0, fresh0 + 1
        for kind, crossing in (
            ("pos_a", Crossing((loop, loop, m, e), +1)),
            ("pos_b", Crossing((e, m, loop, loop), +1)),
            ("neg_a", Crossing((e, loop, loop, m), -1)),
            ("neg_b", Crossing((loop, e, m, loop), -1)),
        ):
            raw = [[list(c.edges), c.sign] for c in d.crossings]
            _replace_head(raw, d, e, m)
            raw.append([list(crossing.edges), crossing.sign])
            try:
                result = OrientedLinkDiagram(
                    tuple(Crossing(tuple(ed), s) for ed, s in raw), d.free_loops
                )
            except DiagramError:
                continue
            yield Move("R1+", (e, kind), result)
    if d.free_loops:
        loop, m = fresh0, fresh0 + 1
        for kind, crossing in (
            ("loop_pos", Crossing((loop, loop, m, m), +1)),
            ("loop_neg", Crossing((m, loop, loop, m), -1)),
        ):
            raw = [[list(c.edges), c.sign] for c in d.crossings]
            raw.append([list(crossing.edges), crossing.sign])
            try:
                result = OrientedLinkDiagram(
                    tuple(Crossing(tuple(ed), s) for ed, s in raw),
                    d.free_loops - 1,
                )
            except DiagramError:
                continue
            yield Move("R1+", ("free_loop", kind), result)


def _r2_candidates(over, under):
    """Crossing pairs pushing strand ``over=(e1, m, e2)`` across
    ``under=(g1, h, g2)``; both parallel and antiparallel wirings, each
    with the two sign layouts.  Invalid combinations die in validation.
    """
    e1, m, e2 = over
    g1, h, g2 = under
    return [
        ((Crossing((g1, m, h, e1), +1)), (Crossing((h, m, g2, e2), -1))),
        ((Crossing((g1, e1, h, m), -1)), (Crossing((h, e2, g2, m), +1))),
        ((Crossing((h, m, g2, e1), +1)), (Crossing((g1, m, h, e2), -1))),
        ((Crossing((h, e1, g2, m), -1)), (Crossing((g1, e2, h, m), +1))),
    ]


def r2_additions(d: OrientedLinkDiagram) -> Iterator[Move]:
    fresh0 = 2 * d.n_crossings
    m, h, e2, g2 = fresh0, fresh0 + 1, fresh0 + 2, fresh0 + 3
    seen_pairs = set()
    for face in d.faces():
        for i in range(len(face)):
            for j in range(len(face)):
                if i == j:
                    continue
                ci, si = face[i]
                cj, sj = face[j]
                e = d.crossings[ci].edges[si]
                g = d.crossings[cj].edges[sj]
                if e == g:
                    continue
                key = (e, g)
                if key in seen_pairs:
                    continue
                seen_pairs.add(key)
                for k, (x1, x2) in enumerate(
                    _r2_candidates((e, m, e2), (g, h, g2))
                ):
                    raw = [[list(c.edges), c.sign] for c in d.crossings]
                    _replace_head(raw, d, e, e2)
                    _replace_head(raw, d, g, g2)
                    raw.append([list(x1.edges), x1.sign])
                    raw.append([list(x2.edges), x2.sign])
                    try:
                        result = OrientedLinkDiagram(
                            tuple(Crossing(tuple(ed), s) for ed, s in raw),
                            d.free_loops,
                        )
                    except DiagramError:
                        continue
                    yield Move("R2+", (e, g, k), result)
    if d.free_loops:
        yield from _r2_free_loop_additions(d)


def _r2_free_loop_additions(d: OrientedLinkDiagram) -> Iterator[Move]:
    fresh0 = 2 * d.n_crossings
    m1, m2, h, g2 = fresh0, fresh0 + 1, fresh0 + 2, fresh0 + 3
    for g in d.edges:
        for role, (over, under) in enumerate(
            (((m2, m1, m2), (g, h, g2)), ((g, h, g2), (m2, m1, m2)))
        ):
            for k, (x1, x2) in enumerate(_r2_candidates(over, under)):
                raw = [[list(c.edges), c.sign] for c in d.crossings]
                _replace_head(raw, d, g, g2)
                raw.append([list(x1.edges), x1.sign])
                raw.append([list(x2.edges), x2.sign])
                try:
                    result = OrientedLinkDiagram(
                        tuple(Crossing(tuple(ed), s) for ed, s in raw),
                        d.free_loops - 1,
                    )
                except DiagramError:
                    continue
                yield Move("R2+", ("free_loop", g, role, k), result)
    # one loop across another, and a loop across itself
    n1, n2 = fresh0 + 4, fresh0 + 5
    if d.free_loops >= 2:
        for k, (x1, x2) in enumerate(_r2_candidates((m2, m1, m2), (n2, n1, n2))):
            raw = [[list(c.edges), c.sign] for c in d.crossings]
            raw.append([list(x1.edges), x1.sign])
            raw.append([list(x2.edges), x2.sign])
            try:
                result = OrientedLinkDiagram(
                    tuple(Crossing(tuple(ed), s) for ed, s in raw),
                    d.free_loops - 2,
                )
            except DiagramError:
                continue
            yield Move("R2+", ("two_loops", k), result)
    # a lone loop pushed across itself: tongue over both times or under both
    a, t, c, m = fresh0, fresh0 + 1, fresh0 + 2, fresh0 + 3
    for k, (x1, x2) in enumerate(
        (
            (Crossing((c, t, m, a), +1), Crossing((m, t, c, a), -1)),
            (Crossing((a, c, t, m), -1), Crossing((t, c, a, m), +1)),
        )
    ):
        raw = [[list(c.edges), c.sign] for c in d.crossings]
        raw.append([list(x1.edges), x1.sign])
        raw.append([list(x2.edges), x2.sign])
        try:
            result = OrientedLinkDiagram(
                tuple(Crossing(tuple(ed), s2) for ed, s2 in raw),
                d.free_loops - 1,
            )
        except DiagramError:
            continue
        yield Move("R2+", ("self_loop", k), result)


# -- R3 -----------------------------------------------------------------


def r3_moves(d: OrientedLinkDiagram) -> Iterator[Move]:
    for face in d.faces():
        if len(face) != 3:
            continue
        crossings = [ci for ci, _ in face]
        if len(set(crossings)) != 3:
            continue
        sides = []
        for ci, s in face:
            e = d.crossings[ci].edges[s]
            sides.append(e)
        if len(set(sides)) != 3:
            continue
        # the move needs one side passing over at both its endpoints
        over_over = [
            e
            for e in sides
            if all(s in (1, 3) for _, s in _side_occurrences(d, e, crossings))
        ]
        if not over_over:
            continue
        try:
            result = _apply_r3(d, sides)
        except DiagramError:
            continue
        yield Move("R3", tuple(sorted(face)), result)


def _side_occurrences(d, edge, crossings):
    out = []
    for ci in crossings:
        for s in range(4):
            if d.crossings[ci].edges[s] == edge:
                out.append((ci, s))
    return out


def _apply_r3(d: OrientedLinkDiagram, sides: list[int]) -> OrientedLinkDiagram:
    """Slide the triangle: every strand swaps which of its two triangle
    crossings it meets first, keeping its middle edge between them."""
    raw = [[list(c.edges), c.sign] for c in d.crossings]
    updates: list[tuple[int, int, int]] = []
    for t in sides:
        (tc, ts), (hc, hs) = d.edge_ends(t)
        entry = _ENTRY_OF_EXIT[ts]
        x = d.crossings[tc].edges[entry]
        exit_slot = strand_exit_slot(hs)
        y = d.crossings[hc].edges[exit_slot]
        updates.append((tc, entry, t))
        updates.append((tc, ts, y))
        updates.append((hc, hs, x))
        updates.append((hc, exit_slot, t))
    for ci, slot, e in updates:
        raw[ci][0][slot] = e
    return OrientedLinkDiagram(
        tuple(Crossing(tuple(ed), s) for ed, s in raw), d.free_loops
    )


# -- simplification ------------------------------------------------------


def greedy_simplify(
    d: OrientedLinkDiagram,
) -> tuple[OrientedLinkDiagram, list[tuple]]:
    """Apply crossing-decreasing moves until none remain."""
    trace = []
    while True:
        move = next(iter(r1_removals(d)), None) or next(iter(r2_removals(d)), None)
        if move is None:
            return d, trace
        trace.append((move.kind, move.site))
        d = move.result
