import pytest

from twistknots.braids import BraidWord, braid_closure, torus_braid
from twistknots.diagram import DiagramError

from .oracles import jones_bruteforce


class TestBraidWord:
    def test_empty_word_allowed(self):
        w = BraidWord(3)
        assert len(w) == 0
        assert w.cycle_count() == 3

    def test_index_range_checked(self):
        with pytest.raises(DiagramError):
            BraidWord(2, ((2, 1),))

    def test_inverse_word_cancels_permutation(self):
        w = BraidWord.from_ints(3, [1, 2, -1])
        assert (w * w.inverse_word()).cycle_count() == 3

    def test_torus_braid_shape(self):
        w = torus_braid(4, 3)
        assert w.strands == 3
        assert len(w) == 8
        assert all(s == 1 for _, s in w.letters)


class TestClosure:
    def test_hopf_link(self):
        d = braid_closure(torus_braid(2, 2))
        assert d.n_crossings == 2
        assert d.n_components == 2
        assert d.linking_number(0, 1) == 1

    def test_identity_braid_closes_to_unlink(self):
        d = braid_closure(BraidWord(2))
        assert d.n_crossings == 0
        assert d.n_components == 2
        assert d.free_loops == 2

    def test_t43_closure(self):
        d = braid_closure(torus_braid(4, 3))
        assert d.n_crossings == 8
        assert d.n_components == 1

    def test_crossing_count_equals_word_length(self):
        w = BraidWord.from_ints(3, [1, -2, 1, 1, -2])
        assert braid_closure(w).n_crossings == 5

    def test_untouched_strand_becomes_free_loop(self):
        d = braid_closure(BraidWord.from_ints(3, [1, 1]))
        assert d.free_loops == 1
        assert d.n_components == 3

    def test_writhe_is_letter_sign_sum(self):
        w = BraidWord.from_ints(3, [1, -2, 1, -2])
        assert braid_closure(w).writhe() == 0

    def test_positive_and_negative_hopf_differ(self):
        pos = braid_closure(torus_braid(2, 2))
        neg = braid_closure(BraidWord.from_ints(2, [-1, -1]))
        assert pos.linking_number(0, 1) == 1
        assert neg.linking_number(0, 1) == -1
        assert jones_bruteforce(pos) != jones_bruteforce(neg)
