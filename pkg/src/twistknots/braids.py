"""Braid words and their standard closures as oriented diagrams.

A word is a sequence of signed Artin generators ``(i, +1)`` / ``(i, -1)``
with ``1 <= i < strands``; the letter ``(i, s)`` crosses the strands in
lanes ``i`` and ``i+1``, the lane-``i``-to-``i+1`` diagonal passing over
for positive letters.  Closures orient every strand coherently upward,
so positive letters close to positive crossings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count
from typing import Iterable

from .diagram import Crossing, DiagramError, OrientedLinkDiagram


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise DiagramError("braid needs at least one strand")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i < self.strands:
                raise DiagramError(f"generator index {i} out of range")
            if s not in (1, -1):
                raise DiagramError(f"letter sign must be +1/-1, got {s}")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise DiagramError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse_word(self) -> "BraidWord":
        """The literal inverse word (reversed, signs flipped)."""
        return BraidWord(
            self.strands, tuple((i, -s) for i, s in reversed(self.letters))
        )

    def flipped(self) -> "BraidWord":
        """Every letter's sign negated, order kept."""
        return BraidWord(self.strands, tuple((i, -s) for i, s in self.letters))

    def reversed_word(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(reversed(self.letters)))

    def permutation(self) -> list[int]:
        """Image of each bottom lane at the top (0-indexed lanes)."""
        perm = list(range(self.strands))
        for i, _ in self.letters:
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return perm

    def cycle_count(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        n = 0
        for i in range(self.strands):
            if seen[i]:
                continue
            n += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
        return n

    @classmethod
    def from_ints(cls, strands: int, word: Iterable[int]) -> "BraidWord":
        """Signed-integer shorthand: ``2`` means sigma_2, ``-2`` its inverse."""
        return cls(strands, tuple((abs(k), 1 if k > 0 else -1) for k in word))


def torus_braid(p: int, q: int) -> BraidWord:
    """(sigma_1 ... sigma_{q-1})^p on q strands; closure is T(p, q)."""
    if q < 1:
        raise DiagramError("torus braid needs q >= 1")
    row = tuple((i, 1) for i in range(1, q))
    return BraidWord(q, row * p)


def _closure_crossing(letter, dir_left, dir_right, lo, hi, new_lo, new_hi) -> Crossing:
    """PD tuple for one braid letter.

    ``lo``/``hi`` are the bottom port edges of lanes i, i+1; ``new_lo``/
    ``new_hi`` the top ports.  ``dir_left``/``dir_right`` say whether the
    strand occupying that lane at the bottom is oriented upward.  The
    lane-i-to-i+1 diagonal uses ports (lo, new_hi); the other uses
    (hi, new_lo).
    """
    _, sgn = letter
    sw, se, nw, ne = lo, hi, new_lo, new_hi
    a_up, b_up = dir_left, dir_right
    if sgn > 0:
        if a_up and b_up:
            return Crossing((se, ne, nw, sw), +1)
        if a_up and not b_up:
            return Crossing((nw, sw, se, ne), -1)
        if not a_up and b_up:
            return Crossing((se, ne, nw, sw), -1)
        return Crossing((nw, sw, se, ne), +1)
    else:
        if a_up and b_up:
            return Crossing((sw, se, ne, nw), -1)
        if a_up and not b_up:
            return Crossing((sw, se, ne, nw), +1)
        if not a_up and b_up:
            return Crossing((ne, nw, sw, se), +1)
        return Crossing((ne, nw, sw, se), -1)


def braid_strand_crossings(
    word: BraidWord,
    bottom_edges: list,
    top_edges: list,
    directions: list[bool],
    fresh,
) -> list[Crossing]:
    """Crossing list for a braid region spliced between given edge labels.

    ``bottom_edges[j]``/``top_edges[j]`` are the edge labels entering lane
    ``j`` from below and leaving above; ``directions[j]`` is True when the
    strand starting in lane ``j`` at the bottom is oriented upward.
    ``fresh`` yields unused edge labels.  Lanes never touched by a letter
    must have ``bottom_edges[j] == top_edges[j]``.
    """
    n = word.strands
    cur = list(bottom_edges)
    dirs = list(directions)
    crossings = []
    touched = [False] * n
    for letter in word.letters:
        i = letter[0] - 1
        new_lo, new_hi = next(fresh), next(fresh)
        crossings.append(
            _closure_crossing(letter, dirs[i], dirs[i + 1], cur[i], cur[i + 1], new_lo, new_hi)
        )
        cur[i], cur[i + 1] = new_lo, new_hi
        dirs[i], dirs[i + 1] = dirs[i + 1], dirs[i]
        touched[i] = touched[i + 1] = True
    # rename the final lane labels to the prescribed top labels
    rename = {}
    for j in range(n):
        if touched[j]:
            rename[cur[j]] = top_edges[j]
        elif bottom_edges[j] != top_edges[j]:
            raise DiagramError("untouched lane cannot change its edge label")
    if rename:
        crossings = [
            Crossing(tuple(rename.get(e, e) for e in c.edges), c.sign)
            for c in crossings
        ]
    return crossings


def braid_closure(word: BraidWord) -> OrientedLinkDiagram:
    """Standard closure; crossing count equals word length and component
    count equals the number of permutation cycles."""
    d, _ = braid_closure_with_arcs(word)
    return d


def braid_closure_with_arcs(
    word: BraidWord,
) -> tuple[OrientedLinkDiagram, list[int]]:
    """Closure plus, per lane, the edge label of its closure arc.

    Lanes whose strand meets no crossing close into free loops and report
    ``-1`` (they own no edge).
    """
    n = word.strands
    fresh = count(0)
    bottom = [next(fresh) for _ in range(n)]
    touched = [False] * n
    for i, _ in word.letters:
        touched[i - 1] = touched[i] = True
    top = [bottom[j] if touched[j] else bottom[j] for j in range(n)]
    crossings = braid_strand_crossings(
        word, bottom, top, [True] * n, fresh
    )
    free = sum(1 for j in range(n) if not touched[j])
    raw = [(c.edges, c.sign) for c in crossings]
    diagram, _ = OrientedLinkDiagram.from_raw(raw, free_loops=free)
    # recover the closure arc labels after normalization: bottom labels are
    # dense ints assigned first, so lane j's arc keeps label bottom[j] unless
    # the whole labeling was rebuilt; rebuild tracks by first appearance.
    arcs = _relabeled(raw, [bottom[j] if touched[j] else -1 for j in range(n)])
    return diagram, arcs


def _relabeled(raw, labels):
    seen: dict = {}
    for edges, _ in raw:
        for e in edges:
            if e not in seen:
                seen[e] = len(seen)
    all_labels = [e for edges, _ in raw for e in edges]
    if set(all_labels) == set(range(len(all_labels) // 2)):
        return labels
    return [seen.get(e, -1) for e in labels]
