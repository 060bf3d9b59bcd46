"""Twist families: a base link with marked passes through a spanning disk.

A family is a diagram of the link together with an ordered, signed list
of edges that cross the disk of an (implicit) unknotted twisting circle.
Twisting by ``n`` cuts those edges and splices in ``n`` full twists on
that many strands; positive ``n`` inserts right-handed twists, so a
coherent pair of strands picks up positive crossings.

The full-twist word is the palindrome ``H * reverse(H)`` where ``H`` is
the half twist.  Flipping the signs of the second half of each block
turns the block into ``H * H^{-1}``, which cancels freely; that is the
untwisting schedule and it has exactly ``turns * k(k-1)/2`` sites per
full twist on ``k`` strands.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, count
from typing import Iterable, Sequence

from .braids import BraidWord, braid_strand_crossings
from .diagram import (
    Crossing,
    DiagramError,
    OrientedLinkDiagram,
    parse_pd,
    serialize,
)
from .invariants import kauffman_bracket_jones

DEFAULT_CERTIFICATE_LIMIT = 30


class FamilyError(DiagramError):
    pass


class ReductionError(FamilyError):
    """No supported pairing/change-set realizes the coherent reduction."""


@dataclass(frozen=True)
class TwistFamily:
    base: OrientedLinkDiagram
    marked_edges: tuple[tuple[int, int], ...]
    name: str = ""

    def __post_init__(self):
        marks = tuple((int(e), int(s)) for e, s in self.marked_edges)
        object.__setattr__(self, "marked_edges", marks)
        edges = set(self.base.edges)
        seen = set()
        for e, s in marks:
            if e not in edges:
                raise FamilyError(f"marked edge {e} is not an edge of the base")
            if e in seen:
                raise FamilyError(f"marked edge {e} listed twice")
            seen.add(e)
            if s not in (1, -1):
                raise FamilyError(f"marked edge sign must be +1/-1, got {s}")
        if (winding_number(self) - len(marks)) % 2:
            raise AssertionError("winding/wrapping parity violated")

    # convenience views
    @property
    def eta_hat(self) -> int:
        return len(self.marked_edges)

    @property
    def omega(self) -> int:
        return winding_number(self)


def winding_number(f: TwistFamily) -> int:
    """Sum over components of |net signed passes| through the disk."""
    per_comp: dict[int, int] = {}
    for e, s in f.marked_edges:
        ci = f.base.component_of_edge(e)
        per_comp[ci] = per_comp.get(ci, 0) + s
    return sum(abs(v) for v in per_comp.values())


def wrapping_presentation_bound(f: TwistFamily) -> int:
    """Number of marked passes; an upper bound for the true wrapping."""
    return len(f.marked_edges)


def half_twist_word(strands: int) -> BraidWord:
    letters = []
    for k in range(2, strands + 1):
        for j in range(k - 1, 0, -1):
            letters.append((j, 1))
    return BraidWord(strands, tuple(letters))


def full_twist_braid(strands: int, turns: int) -> BraidWord:
    """|turns| full twists; letter signs match the sign of ``turns``."""
    if strands < 1:
        raise DiagramError("full twist needs at least one strand")
    if strands == 1 or turns == 0:
        return BraidWord(strands)
    h = half_twist_word(strands)
    block = h * h.reversed_word()
    word = BraidWord(strands, block.letters * abs(turns))
    return word if turns > 0 else word.flipped()


def twist(f: TwistFamily, n: int) -> OrientedLinkDiagram:
    """Diagram of the n-times-twisted link; ``twist(f, 0)`` is the base."""
    d, _, _ = twist_with_sites(f, n)
    return d


def twist_with_sites(
    f: TwistFamily, n: int
) -> tuple[OrientedLinkDiagram, list[int], list[int]]:
    """Twisted diagram plus bookkeeping maps.

    Returns ``(diagram, base_sites, twist_sites)``: positions in the
    twisted diagram of each base crossing and of each inserted braid
    letter (in word order).
    """
    word = full_twist_braid(max(len(f.marked_edges), 1), n)
    base = f.base
    if not word.letters or not f.marked_edges:
        d, index_map = OrientedLinkDiagram.from_raw(
            [(c.edges, c.sign) for c in base.crossings], base.free_loops
        )
        return d, index_map, []
    raw = [[list(c.edges), c.sign] for c in base.crossings]
    fresh = count(2 * base.n_crossings)
    bottom, top, dirs = [], [], []
    for e, s in f.marked_edges:
        h = next(fresh)
        _, (hci, hslot) = base.edge_ends(e)
        raw[hci][0][hslot] = h
        if s > 0:
            bottom.append(e)
            top.append(h)
            dirs.append(True)
        else:
            bottom.append(h)
            top.append(e)
            dirs.append(False)
    region = braid_strand_crossings(word, bottom, top, dirs, fresh)
    all_raw = [(tuple(edges), s) for edges, s in raw] + [
        (c.edges, c.sign) for c in region
    ]
    diagram, index_map = OrientedLinkDiagram.from_raw(all_raw, base.free_loops)
    nb = len(base.crossings)
    return diagram, index_map[:nb], index_map[nb:]


def untwist_schedule(f: TwistFamily, n: int) -> list[int]:
    """Crossing sites in ``twist(f, n)`` whose change trivializes the
    inserted twist region; exactly ``n * w(w-1)/2`` of them.

    Needs a coherent family (marked passes all one direction per the
    presentation, ``eta_hat == omega``) and ``n >= 1``.
    """
    if f.eta_hat != f.omega:
        raise FamilyError(
            f"untwist schedule needs a coherent family (eta={f.eta_hat}, omega={f.omega})"
        )
    if n < 1:
        raise FamilyError("untwist schedule needs n >= 1")
    k = f.eta_hat
    if k <= 1:
        return []
    _, _, twist_sites = twist_with_sites(f, n)
    block = k * (k - 1)
    half = block // 2
    sites = []
    for b in range(n):
        for p in range(half, block):
            sites.append(twist_sites[b * block + p])
    return sorted(sites)


def mirror_family(f: TwistFamily) -> TwistFamily:
    """Mirror the base and negate the disk-pass signs.

    For every n, ``twist(mirror_family(f), n)`` is structurally the
    mirror of ``twist(f, -n)``.
    """
    return TwistFamily(
        f.base.mirror(),
        tuple((e, -s) for e, s in f.marked_edges),
        name=f"{f.name}_mirror" if f.name else "",
    )


# -- coherent reduction -------------------------------------------------------


@dataclass(frozen=True)
class CoherentReduction:
    reduced: TwistFamily
    changes: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.changes)


def _paired_marks(f: TwistFamily) -> tuple[tuple[int, int], ...]:
    """Drop cancelling same-component passes, closest pairs first."""
    marks = list(f.marked_edges)
    base = f.base
    while True:
        best = None
        for i, j in combinations(range(len(marks)), 2):
            (e1, s1), (e2, s2) = marks[i], marks[j]
            if s1 == -s2 and base.component_of_edge(e1) == base.component_of_edge(e2):
                if best is None or j - i < best[1] - best[0]:
                    best = (i, j)
        if best is None:
            break
        i, j = best
        del marks[j]
        del marks[i]
    return tuple(marks)


def coherent_reduction(
    f: TwistFamily,
    max_changes: int = 2,
    certificate_ns: Sequence[int] = (1,),
    certificate_limit: int = DEFAULT_CERTIFICATE_LIMIT,
) -> CoherentReduction:
    """Find crossing changes on the base making the family coherent.

    Cancelling disk passes are paired off; a minimal set of base
    crossing changes (searched by size) must then make the twisted
    diagrams match, which is checked by a Jones certificate at the given
    twist amounts.  Certificate sizes above ``certificate_limit``
    crossings are skipped, so at least one feasible n should be given.
    """
    reduced_marks = _paired_marks(f)
    if len(reduced_marks) != f.omega:
        raise ReductionError(
            "pairing failed: interleaved cancelling passes of different "
            "components are not supported"
        )
    if reduced_marks == f.marked_edges:
        return CoherentReduction(f, ())
    n_base = f.base.n_crossings
    for k in range(max_changes + 1):
        for subset in combinations(range(n_base), k):
            reduced = TwistFamily(
                f.base.change_crossings(subset),
                reduced_marks,
                name=f"{f.name}_coherent" if f.name else "",
            )
            if _square_commutes(f, subset, reduced, certificate_ns, certificate_limit):
                return CoherentReduction(reduced, subset)
    raise ReductionError(
        f"no change set of size <= {max_changes} realizes the reduction"
    )


def _square_commutes(f, subset, reduced, ns, limit) -> bool:
    checked = False
    for n in ns:
        lhs_d, base_sites, _ = twist_with_sites(f, n)
        if lhs_d.n_crossings > limit:
            continue
        lhs = lhs_d.change_crossings([base_sites[i] for i in subset])
        rhs = twist(reduced, n)
        checked = True
        if kauffman_bracket_jones(lhs, limit=limit) != kauffman_bracket_jones(
            rhs, limit=limit
        ):
            return False
    if not checked:
        raise ReductionError(
            "certificate sizes all exceed the limit; raise certificate_limit"
        )
    return True


# -- family files --------------------------------------------------------------


def family_to_json_dict(f: TwistFamily) -> dict:
    return {
        "name": f.name,
        "base": serialize(f.base),
        "marked_edges": [{"edge": e, "sign": s} for e, s in f.marked_edges],
        "winding": winding_number(f),
        "wrapping_presentation_only": True,
    }


def family_from_json_dict(data: dict) -> TwistFamily:
    base = parse_pd(data["base"])
    marks = tuple((m["edge"], m["sign"]) for m in data["marked_edges"])
    f = TwistFamily(base, marks, name=data.get("name", ""))
    if "winding" in data and data["winding"] != winding_number(f):
        raise FamilyError(
            f"family file claims winding {data['winding']} but the "
            f"presentation gives {winding_number(f)}"
        )
    return f


def save_family(f: TwistFamily, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(family_to_json_dict(f), fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_family(path) -> TwistFamily:
    with open(path, encoding="utf-8") as fh:
        return family_from_json_dict(json.load(fh))
