"""Oriented link diagrams as signed planar diagram (PD) codes.

A diagram is a set of crossings, each holding four edge identifiers read
counterclockwise starting at the incoming under-strand, plus a sign.
With slots numbered 0..3 from that starting point:

* slot 0 carries the incoming under-strand edge, slot 2 the outgoing one;
* the over-strand occupies slots 1 and 3, and its direction is pinned by
  the sign: ``+1`` means the over-strand runs slot 3 -> slot 1, ``-1``
  means slot 1 -> slot 3.  (This is the usual right-hand convention: two
  coherently upward strands with the left one passing over give ``+1``.)

Closed one-component curves with no crossings cannot carry edge labels,
so they are counted separately in ``free_loops``.

Diagrams are immutable and normalized on construction: edge labels are
dense integers ``0..E-1`` and crossings are sorted lexicographically,
which makes the textual normal form round-trip bit-exact.  Inputs whose
labels are already exactly ``{0..E-1}`` keep them, so re-parsing a
serialized diagram reproduces it identically.

Split diagrams are first class.  Non-planar inputs (PD codes with no
realization in the plane) are rejected at construction via an Euler
characteristic check on the face structure of each connected piece.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Dart = tuple[int, int]  # (crossing index, slot 0..3)


class DiagramError(ValueError):
    """Structurally invalid diagram data."""


class ParseError(DiagramError):
    """Malformed PD text; ``position`` is a character offset when known."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (at offset {position})")
        self.position = position


@dataclass(frozen=True)
class Crossing:
    """One crossing: edges counterclockwise from the incoming under-strand."""

    edges: tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        if len(self.edges) != 4:
            raise DiagramError("crossing needs exactly 4 edges")
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "edges", tuple(self.edges))


def slot_is_incoming(sign: int, slot: int) -> bool:
    """Whether the edge at this slot points into the crossing."""
    if slot == 0:
        return True
    if slot == 2:
        return False
    if slot == 1:
        return sign < 0
    if slot == 3:
        return sign > 0
    raise DiagramError(f"bad slot {slot}")


def strand_exit_slot(in_slot: int) -> int:
    """Slot where the strand entering at ``in_slot`` leaves the crossing."""
    return {0: 2, 1: 3, 3: 1}[in_slot]


@dataclass(frozen=True)
class OrientedLinkDiagram:
    crossings: tuple[Crossing, ...]
    free_loops: int = 0
    _components: tuple[tuple[int, ...], ...] = field(
        default=None, compare=False, repr=False
    )

    def __post_init__(self):
        crossings = tuple(
            c if isinstance(c, Crossing) else Crossing(tuple(c[0]), c[1])
            for c in self.crossings
        )
        if self.free_loops < 0:
            raise DiagramError("free_loops must be >= 0")
        crossings = _normalize_labels(crossings)
        crossings = tuple(sorted(crossings, key=lambda c: (c.edges, c.sign)))
        object.__setattr__(self, "crossings", crossings)
        comps = _validate(crossings)
        object.__setattr__(self, "_components", comps)

    # -- basic data ----------------------------------------------------

    @classmethod
    def empty(cls) -> "OrientedLinkDiagram":
        return cls((), 0)

    @classmethod
    def unknot(cls, loops: int = 1) -> "OrientedLinkDiagram":
        """The crossing-free unlink with the given number of components."""
        return cls((), loops)

    @classmethod
    def from_raw(
        cls, raw: Sequence[tuple[Sequence[int], int]], free_loops: int = 0
    ) -> tuple["OrientedLinkDiagram", list[int]]:
        """Build a diagram and report where each raw crossing ended up.

        Returns ``(diagram, index_map)`` with ``index_map[i]`` the position
        in ``diagram.crossings`` of the ``i``-th raw crossing.  Needed by
        operations that must address specific crossings after the
        normalizing sort.
        """
        crossings = tuple(Crossing(tuple(e), s) for e, s in raw)
        relabeled = _normalize_labels(crossings)
        diagram = cls(relabeled, free_loops)
        index_map = []
        for c in relabeled:
            index_map.append(diagram.crossings.index(c))
        return diagram, index_map

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def edges(self) -> list[int]:
        return list(range(2 * len(self.crossings)))

    @property
    def components(self) -> list[tuple[int, ...]]:
        """Oriented edge cycles, one per component; ``()`` for free loops."""
        return [tuple(c) for c in self._components] + [()] * self.free_loops

    @property
    def n_components(self) -> int:
        return len(self._components) + self.free_loops

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def edge_ends(self, edge: int) -> tuple[Dart, Dart]:
        """(tail, head) darts of an edge: where it leaves and enters."""
        tail = head = None
        for ci, c in enumerate(self.crossings):
            for slot, e in enumerate(c.edges):
                if e != edge:
                    continue
                if slot_is_incoming(c.sign, slot):
                    head = (ci, slot)
                else:
                    tail = (ci, slot)
        if tail is None or head is None:
            raise DiagramError(f"edge {edge} not found")
        return tail, head

    def component_of_edge(self, edge: int) -> int:
        for i, cyc in enumerate(self._components):
            if edge in cyc:
                return i
        raise DiagramError(f"edge {edge} not found")

    # -- operations -----------------------------------------------------

    def mirror(self) -> "OrientedLinkDiagram":
        """Flip every crossing's over/under assignment.

        Strand orientations are kept, all signs negate, and the operation
        is an involution.
        """
        return OrientedLinkDiagram(
            tuple(_mirror_crossing(c) for c in self.crossings), self.free_loops
        )

    def change_crossing(self, site: int) -> "OrientedLinkDiagram":
        """Switch over/under at one crossing (sign negates there)."""
        return self.change_crossings([site])

    def change_crossings(self, sites: Iterable[int]) -> "OrientedLinkDiagram":
        sites = set(sites)
        for s in sites:
            if not 0 <= s < len(self.crossings):
                raise DiagramError(f"invalid crossing site {s}")
        new = tuple(
            _mirror_crossing(c) if i in sites else c
            for i, c in enumerate(self.crossings)
        )
        return OrientedLinkDiagram(new, self.free_loops)

    def linking_number(self, i: int, j: int) -> int:
        """Half the signed count of crossings between components i and j."""
        n = self.n_components
        if not (0 <= i < n and 0 <= j < n):
            raise DiagramError(f"invalid component index ({i}, {j})")
        if i == j:
            raise DiagramError("linking number needs two distinct components")
        total = 0
        for c in self.crossings:
            under = self.component_of_edge(c.edges[0])
            over = self.component_of_edge(c.edges[1])
            if {under, over} == {i, j}:
                total += c.sign
        if total % 2:
            raise DiagramError("odd signed count between components")
        return total // 2

    def linking_matrix(self) -> list[list[int]]:
        n = self.n_components
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                lk = self.linking_number(i, j)
                out[i][j] = out[j][i] = lk
        return out

    def disjoint_union(self, other: "OrientedLinkDiagram") -> "OrientedLinkDiagram":
        """Distant union; the other diagram's components come after ours."""
        off = 2 * len(self.crossings)
        shifted = tuple(
            Crossing(tuple(e + off for e in c.edges), c.sign) for c in other.crossings
        )
        return OrientedLinkDiagram(
            self.crossings + shifted, self.free_loops + other.free_loops
        )

    def is_connected(self) -> bool:
        """Connected as a curve-with-crossings (free loops always split)."""
        if self.free_loops:
            return self.free_loops == 1 and not self.crossings
        if not self.crossings:
            return False
        return len(_crossing_pieces(self.crossings)) == 1

    # -- faces ------------------------------------------------------------

    def faces(self) -> list[list[Dart]]:
        """Complementary regions via the rotation system.

        Each face is the orbit of ``dart -> rotate(other_end(dart))``; a
        dart ``(ci, s)`` in a face means the face touches crossing ``ci``
        at the corner between slots ``s-1`` and ``s``.
        """
        return _faces(self.crossings)

    # -- text form --------------------------------------------------------

    def serialize(self) -> str:
        return serialize(self)

    def to_json_dict(self) -> dict:
        return {
            "crossings": [list(c.edges) for c in self.crossings],
            "orientations": [c.sign for c in self.crossings],
            "components": [list(c) for c in self.components],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "OrientedLinkDiagram":
        crossings = data.get("crossings", [])
        signs = data.get("orientations", [])
        if len(crossings) != len(signs):
            raise DiagramError("crossings and orientations length mismatch")
        free = sum(1 for c in data.get("components", []) if not c)
        d = cls(
            tuple(Crossing(tuple(e), s) for e, s in zip(crossings, signs)),
            free_loops=free,
        )
        comps = data.get("components")
        if comps is not None:
            want = sorted(tuple(c) for c in comps if c)
            have = sorted(d._components)
            if [sorted(set(c)) for c in want] != [sorted(set(c)) for c in have]:
                raise DiagramError("components field inconsistent with crossings")
        return d


def _mirror_crossing(c: Crossing) -> Crossing:
    a, b, cc, d = c.edges
    if c.sign > 0:
        return Crossing((d, a, b, cc), -1)
    return Crossing((b, cc, d, a), +1)


# -- normalization and validation ------------------------------------------


def _normalize_labels(crossings: tuple[Crossing, ...]) -> tuple[Crossing, ...]:
    labels = [e for c in crossings for e in c.edges]
    n_edges = 2 * len(crossings)
    if set(labels) == set(range(n_edges)) and all(isinstance(e, int) for e in labels):
        return crossings
    remap: dict = {}
    for e in labels:
        if e not in remap:
            remap[e] = len(remap)
    return tuple(Crossing(tuple(remap[e] for e in c.edges), c.sign) for c in crossings)


def _validate(crossings: tuple[Crossing, ...]) -> tuple[tuple[int, ...], ...]:
    occur: dict[int, list[Dart]] = {}
    for ci, c in enumerate(crossings):
        for slot, e in enumerate(c.edges):
            occur.setdefault(e, []).append((ci, slot))
    for e, occ in occur.items():
        if len(occ) != 2:
            raise DiagramError(f"edge multiplicity: edge {e} occurs {len(occ)} times")
    heads: dict[int, Dart] = {}
    tails: dict[int, Dart] = {}
    for e, occ in occur.items():
        for ci, slot in occ:
            if slot_is_incoming(crossings[ci].sign, slot):
                if e in heads:
                    raise DiagramError(f"orientation inconsistency: edge {e} enters twice")
                heads[e] = (ci, slot)
            else:
                if e in tails:
                    raise DiagramError(f"orientation inconsistency: edge {e} leaves twice")
                tails[e] = (ci, slot)
    comps = _trace_components(crossings, heads)
    _check_planarity(crossings)
    return comps


def _trace_components(
    crossings: tuple[Crossing, ...], heads: dict[int, Dart]
) -> tuple[tuple[int, ...], ...]:
    seen: set[int] = set()
    cycles = []
    for start in sorted(heads):
        if start in seen:
            continue
        cycle = []
        e = start
        while e not in seen:
            seen.add(e)
            cycle.append(e)
            ci, slot = heads[e]
            out_slot = strand_exit_slot(slot)
            e = crossings[ci].edges[out_slot]
        if e != start:
            raise DiagramError("component tracing failed to close a cycle")
        k = cycle.index(min(cycle))
        cycles.append(tuple(cycle[k:] + cycle[:k]))
    return tuple(sorted(cycles))


def _faces(crossings: Sequence[Crossing]) -> list[list[Dart]]:
    other: dict[Dart, Dart] = {}
    occ: dict[int, list[Dart]] = {}
    for ci, c in enumerate(crossings):
        for slot, e in enumerate(c.edges):
            occ.setdefault(e, []).append((ci, slot))
    for pair in occ.values():
        a, b = pair
        other[a] = b
        other[b] = a
    faces = []
    seen: set[Dart] = set()
    for ci in range(len(crossings)):
        for slot in range(4):
            d = (ci, slot)
            if d in seen:
                continue
            face = []
            while d not in seen:
                seen.add(d)
                face.append(d)
                oc, os = other[d]
                d = (oc, (os + 1) % 4)
            faces.append(face)
    return faces


def _crossing_pieces(crossings: Sequence[Crossing]) -> list[list[int]]:
    parent = list(range(len(crossings)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_edge: dict[int, list[int]] = {}
    for ci, c in enumerate(crossings):
        for e in c.edges:
            by_edge.setdefault(e, []).append(ci)
    for cis in by_edge.values():
        a = find(cis[0])
        for x in cis[1:]:
            parent[find(x)] = a
    groups: dict[int, list[int]] = {}
    for ci in range(len(crossings)):
        groups.setdefault(find(ci), []).append(ci)
    return list(groups.values())


def _check_planarity(crossings: tuple[Crossing, ...]) -> None:
    if not crossings:
        return
    faces = _faces(crossings)
    piece_of: dict[int, int] = {}
    pieces = _crossing_pieces(crossings)
    for pi, group in enumerate(pieces):
        for ci in group:
            piece_of[ci] = pi
    face_count = [0] * len(pieces)
    for face in faces:
        face_count[piece_of[face[0][0]]] += 1
    for pi, group in enumerate(pieces):
        v = len(group)
        # every piece has E = 2V, so planarity (V - E + F = 2) reads F = V + 2
        if face_count[pi] != v + 2:
            raise DiagramError(
                "non-planar diagram: piece with "
                f"{v} crossings has {face_count[pi]} faces (needs {v + 2})"
            )


# -- structural comparison ---------------------------------------------------


def structurally_equal(d1: OrientedLinkDiagram, d2: OrientedLinkDiagram) -> bool:
    """Equality up to renaming edges (slots and signs must match rigidly)."""
    if d1.free_loops != d2.free_loops:
        return False
    if len(d1.crossings) != len(d2.crossings):
        return False
    if not d1.crossings:
        return True
    if sorted(c.sign for c in d1.crossings) != sorted(c.sign for c in d2.crossings):
        return False
    occ1 = _occurrence_map(d1)
    occ2 = _occurrence_map(d2)
    for t0 in range(len(d2.crossings)):
        if _try_match(d1, d2, t0, occ1, occ2):
            return True
    return False


def _occurrence_map(d) -> dict[int, list[Dart]]:
    occ: dict[int, list[Dart]] = {}
    for ci, c in enumerate(d.crossings):
        for slot, e in enumerate(c.edges):
            occ.setdefault(e, []).append((ci, slot))
    return occ


def _try_match(d1, d2, t0, occ1, occ2) -> bool:
    cmap = {0: t0}
    emap: dict[int, int] = {}
    targets = {t0}
    queue = [0]
    while queue:
        ci = queue.pop()
        tj = cmap[ci]
        c1, c2 = d1.crossings[ci], d2.crossings[tj]
        if c1.sign != c2.sign:
            return False
        for s in range(4):
            e1, e2 = c1.edges[s], c2.edges[s]
            if e1 in emap:
                if emap[e1] != e2:
                    return False
            else:
                if e2 in emap.values():
                    return False
                emap[e1] = e2
            o1 = [dd for dd in occ1[e1] if dd != (ci, s)]
            o2 = [dd for dd in occ2[e2] if dd != (tj, s)]
            if len(o1) != 1 or len(o2) != 1:
                return False
            (oc, oslot), (od, oslot2) = o1[0], o2[0]
            if oslot != oslot2:
                return False
            if oc in cmap:
                if cmap[oc] != od:
                    return False
            elif od in targets:
                return False
            else:
                cmap[oc] = od
                targets.add(od)
                queue.append(oc)
    if len(cmap) == len(d1.crossings):
        return True
    rest1 = [i for i in range(len(d1.crossings)) if i not in cmap]
    rest2 = [i for i in range(len(d2.crossings)) if i not in targets]
    return structurally_equal(_subdiagram(d1, rest1), _subdiagram(d2, rest2))


def _subdiagram(d, indices):
    return OrientedLinkDiagram(
        tuple(d.crossings[i] for i in indices), free_loops=0
    )


# -- text serialization -------------------------------------------------------


_TOKEN = re.compile(r"([XO])([+-]?)\[([^\]]*)\]")


def serialize(d: OrientedLinkDiagram) -> str:
    """Textual normal form: signed crossing tuples plus orientation block."""
    parts = []
    if d.crossings:
        parts.append(
            " ".join(
                f"X{'+' if c.sign > 0 else '-'}[{','.join(map(str, c.edges))}]"
                for c in d.crossings
            )
        )
    comps = d.components
    if comps:
        parts.append(" ".join(f"O[{','.join(map(str, c))}]" for c in comps))
    return "\n".join(parts)


def parse_pd(text: str) -> OrientedLinkDiagram:
    """Parse PD notation.

    Accepts ``X[a,b,c,d]`` tuples with optional sign annotations
    (``X+``/``X-``) and an optional orientation block of ``O[...]``
    cycles.  Unsigned tuples are resolved from the orientation data or,
    for classically numbered codes (edges 1..2n serial along each
    strand), by the successor heuristic; anything ambiguous is an error.
    Empty input gives the empty diagram.
    """
    stripped = re.sub(r"#[^\n]*", "", text)
    crossings_raw: list[tuple[list, int | None, int]] = []
    cycles: list[list] = []
    free_loops = 0
    pos = 0
    for m in _TOKEN.finditer(stripped):
        gap = stripped[pos : m.start()]
        if gap.strip():
            raise ParseError(f"unexpected text {gap.strip()!r}", pos)
        pos = m.end()
        kind, sign_txt, body = m.groups()
        items = [t.strip() for t in body.split(",")] if body.strip() else []
        if kind == "X":
            if len(items) != 4:
                raise ParseError("malformed tuple: crossing needs 4 edges", m.start())
            sign = {"+": 1, "-": -1, "": None}[sign_txt]
            crossings_raw.append((items, sign, m.start()))
        else:
            if sign_txt:
                raise ParseError("orientation cycle cannot carry a sign", m.start())
            if not items:
                free_loops += 1
            else:
                cycles.append(items)
    if stripped[pos:].strip():
        raise ParseError(f"unexpected text {stripped[pos:].strip()!r}", pos)
    if not crossings_raw:
        d = OrientedLinkDiagram((), free_loops)
        if cycles:
            raise ParseError("orientation cycles without crossings")
        return d

    tokens = [t for items, _, _ in crossings_raw for t in items]
    remap: dict[str, int] = {}
    if all(t.isdigit() for t in tokens) and {int(t) for t in tokens} == set(
        range(len(tokens) // 2)
    ):
        for t in tokens:
            remap[t] = int(t)
    else:
        for t in tokens:
            if t not in remap:
                remap[t] = len(remap)
    tuples = [tuple(remap[t] for t in items) for items, _, _ in crossings_raw]
    signs: list[int | None] = [s for _, s, _ in crossings_raw]

    if any(s is None for s in signs):
        signs = _infer_signs(tuples, signs, crossings_raw)

    d = OrientedLinkDiagram(
        tuple(Crossing(t, s) for t, s in zip(tuples, signs)), free_loops
    )
    if cycles:
        want = sorted(sorted(set(remap.get(t, -1) for t in cyc)) for cyc in cycles)
        have = sorted(sorted(set(c)) for c in d._components)
        if want != have:
            raise ParseError("orientation block inconsistent with crossings")
    return d


def _infer_signs(tuples, signs, crossings_raw):
    """Resolve missing signs via serial numbering, then brute consistency."""
    m = 2 * len(tuples)
    out = list(signs)
    undecided = []
    for i, (t, s) in enumerate(zip(tuples, out)):
        if s is not None:
            continue
        _, b, _, dd = t
        plus = (b - dd) % m == 1
        minus = (dd - b) % m == 1
        if plus and not minus:
            out[i] = 1
        elif minus and not plus:
            out[i] = -1
        else:
            undecided.append(i)
    if undecided:
        if len(undecided) > 12:
            raise ParseError("too many crossings with ambiguous orientation; add signs")
        good = []
        for mask in range(1 << len(undecided)):
            trial = list(out)
            for k, i in enumerate(undecided):
                trial[i] = 1 if (mask >> k) & 1 else -1
            try:
                OrientedLinkDiagram(
                    tuple(Crossing(t, s) for t, s in zip(tuples, trial)), 0
                )
            except DiagramError:
                continue
            good.append(trial)
            if len(good) > 1:
                break
        if not good:
            raise ParseError(
                "orientation inconsistency: no sign assignment is consistent",
                crossings_raw[undecided[0]][2],
            )
        if len(good) > 1:
            raise ParseError(
                "ambiguous orientation: add explicit sign annotations",
                crossings_raw[undecided[0]][2],
            )
        out = good[0]
    return out


def to_json(d: OrientedLinkDiagram) -> str:
    return json.dumps(d.to_json_dict(), sort_keys=True)


def from_json(text: str) -> OrientedLinkDiagram:
    return OrientedLinkDiagram.from_json_dict(json.loads(text))
