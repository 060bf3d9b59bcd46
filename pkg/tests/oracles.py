"""Independent brute-force oracles used to freeze expected test values.

Everything here recomputes invariants from first principles (full state
sums, full chain complexes) without touching the production scanning
code, so oracle agreement is a genuine cross-check and not a tautology.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from twistknots.diagram import OrientedLinkDiagram
from twistknots.polynomials import LaurentPolynomial

# smoothing pairings by slot: 0 joins (0,1),(2,3); 1 joins (0,3),(1,2)
_SMOOTH = {0: ((0, 1), (2, 3)), 1: ((0, 3), (1, 2))}


class _UF:
    def __init__(self):
        self.p = {}

    def find(self, x):
        p = self.p
        p.setdefault(x, x)
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[ra] = rb
            return True
        return False


def _state_loops(d: OrientedLinkDiagram, state: tuple[int, ...]) -> tuple[int, _UF]:
    """Number of closed loops after smoothing every crossing per ``state``."""
    uf = _UF()
    darts = set()
    for ci, c in enumerate(d.crossings):
        for s in range(4):
            darts.add((ci, s))
        for a, b in _SMOOTH[state[ci]]:
            uf.union((ci, a), (ci, b))
    occ = {}
    for ci, c in enumerate(d.crossings):
        for s, e in enumerate(c.edges):
            occ.setdefault(e, []).append((ci, s))
    for pair in occ.values():
        uf.union(pair[0], pair[1])
    roots = {uf.find(x) for x in darts}
    return len(roots), uf


def kauffman_bracket_bruteforce(d: OrientedLinkDiagram) -> LaurentPolynomial:
    """Bracket polynomial in A summed over all 2^n smoothings."""
    n = len(d.crossings)
    delta = LaurentPolynomial({2: -1, -2: -1})
    total = LaurentPolynomial()
    for state in product((0, 1), repeat=n):
        a_count = state.count(0)
        b_count = n - a_count
        loops, _ = _state_loops(d, state)
        loops += d.free_loops
        term = LaurentPolynomial.monomial(a_count - b_count)
        total = total + term * delta ** (loops - 1)
    if n == 0:
        total = delta ** (d.free_loops - 1)
    return total


def jones_bruteforce(d: OrientedLinkDiagram) -> LaurentPolynomial:
    """Jones polynomial (doubled-t exponents), unknot normalized to 1."""
    if d.n_components == 0:
        raise ValueError("Jones needs a nonempty link")
    bracket = kauffman_bracket_bruteforce(d)
    w = d.writhe()
    out: dict[int, int] = {}
    for e, c in bracket.coeffs.items():
        ee = e - 3 * w
        sign = -1 if w % 2 else 1
        # (-A)^{-3w} <D>: sign (-1)^{3w} = (-1)^w, exponent shift -3w
        cc = c * sign
        assert ee % 2 == 0, "bracket exponent parity broken"
        out[ee // 2] = out.get(ee // 2, 0) + cc
    return LaurentPolynomial(out)


# ----------------------------------------------------------------------
# Full-complex Lee homology (deformation x^2 = 1) over the rationals.
# Generators of a state are label vectors over its loops, label 0 = "1"
# (quantum degree +1), label 1 = "x" (quantum degree -1).


def lee_s_bruteforce(d: OrientedLinkDiagram) -> int:
    if d.n_components != 1 or d.free_loops:
        raise ValueError("s oracle handles connected knot diagrams only")
    n = len(d.crossings)
    npos = sum(1 for c in d.crossings if c.sign > 0)
    nneg = n - npos

    states = list(product((0, 1), repeat=n))
    loops_of: dict[tuple, list] = {}
    gens: list[tuple] = []  # (state, labels)
    index: dict[tuple, int] = {}
    for st in states:
        cnt, uf = _state_loops(d, st)
        reps = sorted({uf.find((ci, s)) for ci in range(n) for s in range(4)})
        loops_of[st] = (reps, uf)
        for labels in product((0, 1), repeat=cnt):
            g = (st, labels)
            index[g] = len(gens)
            gens.append(g)

    def hdeg(g):
        return sum(g[0]) - nneg

    def qdeg(g):
        ones = g[1].count(0)
        exes = g[1].count(1)
        return (ones - exes) + sum(g[0]) + npos - 2 * nneg

    # differential: raise one state bit 0 -> 1
    columns: dict[int, dict[int, Fraction]] = {}
    for st in states:
        reps, uf = loops_of[st]
        for ci in range(n):
            if st[ci] == 1:
                continue
            st2 = st[:ci] + (1,) + st[ci + 1 :]
            sign = -1 if sum(st[:ci]) % 2 else 1
            reps2, uf2 = loops_of[st2]
            # loop correspondence via any dart
            def loop2_of_dart(dart):
                return reps2.index(uf2.find(dart))

            def loop_of_dart(dart):
                return reps.index(uf.find(dart))

            darts = [(cj, s) for cj in range(n) for s in range(4)]
            touched = {loop_of_dart((ci, s)) for s in range(4)}
            touched2 = {loop2_of_dart((ci, s)) for s in range(4)}
            for labels in product((0, 1), repeat=len(reps)):
                g = (st, labels)
                gi = index[g]
                # transfer untouched loop labels
                base2 = [None] * len(reps2)
                for dart in darts:
                    l1 = loop_of_dart(dart)
                    l2 = loop2_of_dart(dart)
                    if l1 not in touched and l2 not in touched2:
                        base2[l2] = labels[l1]
                if len(touched) == 2 and len(touched2) == 1:
                    (t2,) = touched2
                    la, lb = sorted(touched)
                    a, b = labels[la], labels[lb]
                    # Lee multiplication: m(x,x) = 1
                    out = (a + b) % 2
                    lab2 = list(base2)
                    lab2[t2] = out
                    _add(columns, gi, index[(st2, tuple(lab2))], sign)
                elif len(touched) == 1 and len(touched2) == 2:
                    (t1,) = touched
                    ta, tb = sorted(touched2)
                    a = labels[t1]
                    # Lee comultiplication: 1 -> 1x + x1, x -> xx + 11
                    outs = [(0, 1), (1, 0)] if a == 0 else [(1, 1), (0, 0)]
                    for xa, xb in outs:
                        lab2 = list(base2)
                        lab2[ta], lab2[tb] = xa, xb
                        _add(columns, gi, index[(st2, tuple(lab2))], sign)
                else:
                    raise AssertionError("smoothing change must merge or split")

    # assemble per-homological-degree matrices and check d*d = 0
    by_h: dict[int, list[int]] = {}
    for gi, g in enumerate(gens):
        by_h.setdefault(hdeg(g), []).append(gi)
    dd: dict[int, dict[int, Fraction]] = {}
    for gi, col in columns.items():
        for gj, c in col.items():
            for gk, c2 in columns.get(gj, {}).items():
                dd.setdefault(gi, {})
                dd[gi][gk] = dd[gi].get(gk, 0) + c * c2
    for col in dd.values():
        assert all(v == 0 for v in col.values()), "d∘d != 0 in oracle"

    # homology at h = 0 with quantum filtration jumps
    h0 = by_h.get(0, [])
    hm1 = by_h.get(-1, [])
    d_out = _matrix(columns, h0, by_h.get(1, []))
    d_in = _matrix(columns, hm1, h0)

    qs = sorted({qdeg(gens[gi]) for gi in h0}, reverse=True)
    jumps = []
    prev = 0
    for j in qs + [None]:
        if j is None:
            dim = _filtered_homology_dim(d_out, d_in, h0, gens, qdeg, None)
        else:
            dim = _filtered_homology_dim(d_out, d_in, h0, gens, qdeg, j)
        while dim > prev:
            jumps.append(j)
            prev += 1
    assert prev == 2 and len(jumps) == 2, f"Lee homology of a knot must be 2-dim, got {prev}"
    j2, j1 = jumps[0], jumps[1]
    assert j2 - j1 == 2, f"filtration levels {j1},{j2} not 2 apart"
    return (j1 + j2) // 2


def _add(columns, gi, gj, coeff):
    col = columns.setdefault(gi, {})
    col[gj] = col.get(gj, 0) + coeff
    if col[gj] == 0:
        del col[gj]


def _matrix(columns, src, dst):
    pos = {gi: k for k, gi in enumerate(dst)}
    rows = []
    for gi in src:
        row = [Fraction(0)] * len(dst)
        for gj, c in columns.get(gi, {}).items():
            if gj in pos:
                row[pos[gj]] = Fraction(c)
        rows.append(row)
    return rows  # rows indexed by src


def _rank(rows):
    m = [r[:] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / inv
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        rank += 1
    return rank


def _filtered_homology_dim(d_out, d_in, h0, gens, qdeg, level):
    """dim of the image of (ker d ∩ F_level) in H^0; F_level = span{q >= level}."""
    keep = [k for k, gi in enumerate(h0) if level is None or qdeg(gens[gi]) >= level]
    if not keep:
        return 0
    # basis of ker(d_out) restricted to coordinates `keep`
    sub = [d_out[k] for k in keep]
    ker_dim = len(keep) - _rank(sub)
    # dim(im d_in ∩ F): rank of d_in columns projected == rank of rows of d_in
    # restricted to keep-coordinates ... im ∩ F computed via rank identities:
    # dim(im ∩ F) = dim(im) + dim(F) - dim(im + F)
    n = len(h0)
    im_rows = [r[:] for r in d_in if any(x != 0 for x in r)]
    dim_im = _rank(im_rows)
    f_rows = []
    for k in keep:
        row = [Fraction(0)] * n
        row[k] = Fraction(1)
        f_rows.append(row)
    dim_sum = _rank(im_rows + f_rows)
    dim_cap = dim_im + len(keep) - dim_sum
    return ker_dim - dim_cap
