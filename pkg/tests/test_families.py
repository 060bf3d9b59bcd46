import pytest

from twistknots.braids import BraidWord, braid_closure, torus_braid
from twistknots.corpus import (
    built_families,
    chain_family,
    load_corpus,
    mazur_family,
    torus_family,
    whitehead_family,
    wind3_wrap9_family,
)
from twistknots.diagram import structurally_equal
from twistknots.families import (
    CoherentReduction,
    FamilyError,
    TwistFamily,
    coherent_reduction,
    full_twist_braid,
    mirror_family,
    twist,
    untwist_schedule,
    winding_number,
    wrapping_presentation_bound,
)
from twistknots.invariants import kauffman_bracket_jones as jones
from twistknots.moves import greedy_simplify

from .oracles import jones_bruteforce


class TestWinding:
    def test_torus_families(self):
        assert winding_number(torus_family(3, 2)) == 2
        assert winding_number(torus_family(4, 3)) == 3

    def test_whitehead_zero(self):
        assert winding_number(whitehead_family()) == 0

    def test_empty_marks(self):
        f = TwistFamily(torus_family(3, 2).base, ())
        assert winding_number(f) == 0

    def test_parity_invariant(self):
        for fam in built_families().values():
            assert (winding_number(fam) - fam.eta_hat) % 2 == 0

    def test_wrapping_bounds(self):
        fams = built_families()
        assert wrapping_presentation_bound(fams["wind3_wrap9"]) == 9
        assert winding_number(fams["wind3_wrap9"]) == 3
        assert wrapping_presentation_bound(fams["torus_q3"]) == 3
        assert wrapping_presentation_bound(TwistFamily(fams["torus_q2"].base, ())) == 0


class TestFullTwistBraid:
    def test_single_strand_never_twists(self):
        assert len(full_twist_braid(1, 5)) == 0

    def test_three_strands_one_turn(self):
        w = full_twist_braid(3, 1)
        assert len(w) == 6
        assert all(s == 1 for _, s in w.letters)
        assert w.permutation() == [0, 1, 2]

    def test_two_strands_negative(self):
        w = full_twist_braid(2, -2)
        assert w.letters == ((1, -1),) * 4

    def test_letter_count_formula(self):
        for k in range(2, 7):
            for n in (1, 2, 3, -1, -2):
                assert len(full_twist_braid(k, n)) == abs(n) * k * (k - 1)

    def test_full_twist_is_pure(self):
        for k in range(2, 6):
            assert full_twist_braid(k, 2).permutation() == list(range(k))


class TestTwist:
    def test_zero_twist_is_base(self):
        for fam in built_families().values():
            assert twist(fam, 0) == fam.base

    def test_two_strand_unlink_gives_hopf(self):
        base, arcs = _closure_with_arcs(BraidWord.from_ints(2, [1, -1]))
        f = TwistFamily(base, tuple((a, 1) for a in arcs))
        got = jones(twist(f, 1))
        assert got == jones_bruteforce(braid_closure(torus_braid(2, 2)))

    def test_torus_step(self):
        f = torus_family(3, 2)
        assert jones(twist(f, 1)) == jones_bruteforce(braid_closure(torus_braid(5, 2)))

    def test_crossing_count_arithmetic(self):
        for fam in built_families().values():
            eta = fam.eta_hat
            for n in (-2, -1, 1, 2):
                if fam.base.n_crossings + abs(n) * eta * (eta - 1) > 90:
                    continue
                t = twist(fam, n)
                assert (
                    t.n_crossings - fam.base.n_crossings
                    == abs(n) * eta * (eta - 1)
                )


class TestSchedule:
    def test_lengths(self):
        assert len(untwist_schedule(chain_family(3), 1)) == 3
        assert len(untwist_schedule(chain_family(5), 2)) == 20
        one_strand = TwistFamily(torus_family(3, 2).base, ((0, 1),))
        assert untwist_schedule(one_strand, 3) == []

    def test_non_coherent_rejected(self):
        with pytest.raises(FamilyError):
            untwist_schedule(whitehead_family(), 1)

    def test_length_formula_sweep(self):
        for omega in range(2, 7):
            f = chain_family(omega)
            for n in range(1, 5):
                assert len(untwist_schedule(f, n)) == n * omega * (omega - 1) // 2

    def test_untwist_recovers_base_bracket(self):
        for omega in (2, 3, 4):
            f = chain_family(omega)
            base_j = jones(f.base)
            for n in (1, 2, 3):
                t = twist(f, n)
                changed = t.change_crossings(untwist_schedule(f, n))
                simp, _ = greedy_simplify(changed)
                assert simp.n_crossings <= f.base.n_crossings
                assert jones(simp) == base_j, (omega, n)


class TestCoherentReduction:
    def test_already_coherent(self):
        f = torus_family(3, 2)
        red = coherent_reduction(f)
        assert red.k == 0
        assert red.reduced == f

    def test_whitehead_reduces_to_empty(self):
        f = whitehead_family()
        red = coherent_reduction(f)
        assert red.reduced.eta_hat == 0
        assert red.k == 1
        for n in (0, 1, 3):
            assert twist(red.reduced, n) == red.reduced.base

    def test_nine_strand_reduces(self):
        f = wind3_wrap9_family()
        red = coherent_reduction(f, certificate_limit=100)
        assert red.reduced.eta_hat == 3
        assert red.k >= 0

    def test_winding_preserved(self):
        for fam in (whitehead_family(), mazur_family()):
            red = coherent_reduction(fam)
            assert winding_number(red.reduced) == winding_number(fam)


class TestMirrorFamily:
    def test_structural_identity(self):
        for fam in (torus_family(3, 2), whitehead_family()):
            m = mirror_family(fam)
            for n in (-1, 1, 2):
                assert structurally_equal(twist(m, n), twist(fam, -n).mirror()), (
                    fam.name,
                    n,
                )

    def test_winding_preserved(self):
        for fam in built_families().values():
            assert winding_number(mirror_family(fam)) == winding_number(fam)

    def test_empty_marks(self):
        f = TwistFamily(torus_family(3, 2).base, ())
        m = mirror_family(f)
        assert m.base == f.base.mirror()
        assert winding_number(m) == 0

    def test_involution(self):
        f = whitehead_family()
        mm = mirror_family(mirror_family(f))
        assert mm.base == f.base
        assert mm.marked_edges == f.marked_edges


class TestCorpusFiles:
    def test_load_matches_builders(self):
        loaded = load_corpus()
        built = built_families()
        assert set(loaded) == set(built)
        for name in loaded:
            assert loaded[name].base == built[name].base
            assert loaded[name].marked_edges == built[name].marked_edges

    def test_bases_are_what_they_claim(self):
        fams = built_families()
        # unknot bases simplify to nothing
        for name in ("whitehead", "mazur", "largewrap_w0_p4"):
            simp, _ = greedy_simplify(fams[name].base)
            assert jones(simp) == 1
        assert fams["wind3_wrap9"].base.n_components == 3


def _closure_with_arcs(word):
    from twistknots.braids import braid_closure_with_arcs

    return braid_closure_with_arcs(word)
