from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

import oracles
from weyl_groupoid import diagram as dg
from weyl_groupoid.diagram import OddRoot, Rank, Shuffle
from weyl_groupoid.errors import DomainError, InvalidInput, NotACorner, NotSimple, RankError

R23 = Rank(2, 3)
RANKS = [Rank(2, 3), Rank(3, 4), Rank(2, 5), Rank(3, 3), Rank(1, 2)]


def P(*parts):
    return tuple(parts)


def S(text, rank=R23):
    return Shuffle.parse(text, rank)


@st.composite
def rank_and_partition(draw):
    n = draw(st.integers(1, 4))
    m = draw(st.integers(n, 6))
    parts = sorted(draw(st.lists(st.integers(0, m), min_size=n, max_size=n)), reverse=True)
    return Rank(n, m), tuple(parts)


class TestRank:
    def test_bad_ranks(self):
        with pytest.raises(RankError):
            Rank(3, 2)
        with pytest.raises(RankError):
            Rank(0, 2)

    def test_square_allowed_but_not_coprime(self):
        assert not Rank(2, 2).coprime
        with pytest.raises(RankError):
            Rank(2, 4).require_coprime()
        assert Rank(3, 4).coprime

    def test_parse(self):
        assert Rank.parse("2,3") == R23
        with pytest.raises(RankError):
            Rank.parse("2;3")


class TestPartitions:
    @pytest.mark.parametrize("rank", RANKS)
    def test_enumeration_matches_brute_force(self, rank):
        assert sorted(dg.partitions(rank)) == sorted(oracles.all_partitions(rank.n, rank.m))

    def test_validation(self):
        with pytest.raises(InvalidInput):
            dg.check_partition((1, 2), R23)
        with pytest.raises(InvalidInput):
            dg.check_partition((4, 0), R23)
        with pytest.raises(InvalidInput):
            dg.check_partition((1,), R23)

    def test_dual_examples(self):
        assert dg.dual(P(3, 1), R23) == (2, 1, 1)
        assert dg.dual(P(0, 0), R23) == (0, 0, 0)
        assert dg.dual(P(3, 3), R23) == (2, 2, 2)

    @given(rank_and_partition())
    def test_dual_is_involution_on_transpose(self, rp):
        rank, lam = rp
        d = dg.dual(lam, rank)
        assert all(d[t] >= d[t + 1] for t in range(len(d) - 1))
        assert all(x <= rank.n for x in d)
        back = tuple(sum(1 for x in d if x >= i) for i in range(1, rank.n + 1))
        assert back == lam

    def test_parse_partition(self):
        assert dg.parse_partition("∅", R23) == (0, 0)
        assert dg.parse_partition("(1)", R23) == (1, 0)
        assert dg.parse_partition("3,1", R23) == (3, 1)

    def test_bold(self):
        assert dg.bold_lambda(Rank(3, 4)) == (4, 1, 1)


class TestCorners:
    def test_examples(self):
        inner, outer = dg.corners(P(0, 0), R23)
        assert inner == set() and outer == {OddRoot.pos(2, 1)}
        _, outer = dg.corners(P(1, 0), R23)
        assert outer == {OddRoot.pos(1, 1), OddRoot.pos(2, 2)}
        # golden from the box-removal oracle
        inner, outer = dg.corners(P(3, 1), R23)
        assert inner == {OddRoot.pos(1, 1), OddRoot.pos(2, 3)}
        assert outer == {OddRoot.pos(1, 2)}

    @pytest.mark.parametrize("rank", RANKS)
    def test_against_box_oracle(self, rank):
        for lam in dg.partitions(rank):
            inner, outer = dg.corners(lam, rank)
            assert {(r.i, r.j) for r in outer} == oracles.outer_by_adding(lam, rank.n, rank.m)
            assert {(r.i, r.j) for r in inner} == oracles.inner_by_removing(lam, rank.n, rank.m)

    @pytest.mark.parametrize("rank", RANKS)
    def test_outer_becomes_inner(self, rank):
        for lam in dg.partitions(rank):
            _, outer = dg.corners(lam, rank)
            for alpha in outer:
                bigger = dg.toggle_box(lam, alpha, rank)
                assert alpha in dg.corners(bigger, rank)[0]
                assert dg.toggle_box(bigger, -alpha, rank) == lam


class TestToggle:
    def test_examples(self):
        assert dg.toggle_box(P(1, 0), OddRoot.pos(1, 1), R23) == (1, 1)
        assert dg.toggle_box(P(1, 1), OddRoot.neg(1, 1), R23) == (1, 0)
        assert dg.toggle_box(P(0, 0), OddRoot.pos(2, 1), R23) == (1, 0)

    def test_not_a_corner(self):
        with pytest.raises(NotACorner):
            dg.toggle_box(P(0, 0), OddRoot.pos(1, 1), R23)
        with pytest.raises(NotACorner):
            dg.toggle_box(P(1, 0), OddRoot.neg(2, 2), R23)

    def test_bad_root(self):
        with pytest.raises(InvalidInput):
            dg.toggle_box(P(0, 0), OddRoot.pos(3, 1), R23)


class TestBar:
    def test_examples(self):
        assert dg.bar(P(3, 1), R23) == (1, 0)
        assert dg.bar(P(3, 3), R23) == (3, 0)
        assert dg.underbar(P(1, 0), R23) == (3, 1)

    def test_domain(self):
        with pytest.raises(DomainError):
            dg.bar(P(2, 1), R23)
        with pytest.raises(DomainError):
            dg.underbar(P(2, 1), R23)

    @pytest.mark.parametrize("rank", RANKS)
    def test_inverse(self, rank):
        for lam in dg.partitions(rank):
            if lam[0] == rank.m:
                assert dg.underbar(dg.bar(lam, rank), rank) == lam
            if lam[-1] == 0:
                assert dg.bar(dg.underbar(lam, rank), rank) == lam


class TestClassify:
    def test_examples(self):
        assert dg.classify(P(3, 1), R23) == (False, False, True, True)
        assert dg.classify(P(0, 0), R23) == (True, True, False, False)
        flags = dg.classify(P(2, 0), R23)
        assert flags.reduced and flags.strongly_reduced


class TestShuffles:
    def test_parse_and_json(self):
        s = S("1',1,2',3',2")
        assert s.oneline == (-1, 1, -2, -3, 2)
        assert s.to_json() == ["1'", "1", "2'", "3'", "2"]
        assert Shuffle.from_json(s.to_json()) == s
        with pytest.raises(InvalidInput):
            S("2,1,1',2',3'")

    @pytest.mark.parametrize("rank", RANKS)
    def test_enumeration(self, rank):
        assert sorted(s.oneline for s in dg.shuffles(rank)) == sorted(oracles.all_shuffles(rank.n, rank.m))

    def test_zeta_examples(self):
        assert dg.zeta(S("1',1,2',3',2"), R23) == (3, 1)
        assert dg.zeta(S("1,2,1',2',3'"), R23) == (0, 0)
        assert dg.zeta(S("1',2',3',1,2"), R23) == (3, 3)

    @pytest.mark.parametrize("rank", RANKS)
    def test_zeta_bijection(self, rank):
        seen = set()
        for s in dg.shuffles(rank):
            lam = dg.zeta(s, rank)
            assert lam == oracles.path_partition(s.oneline, rank.n)
            assert dg.zeta_inv(lam, rank) == s
            seen.add(lam)
        assert seen == set(dg.partitions(rank))

    @pytest.mark.parametrize("rank", RANKS)
    def test_bold_and_top_row_characterisation(self, rank):
        for s in dg.shuffles(rank):
            flags = dg.classify(dg.zeta(s, rank), rank)
            # positions are indexed by 1..n, 1'..m', so the last position is m'
            last_is_n = s[-1] == rank.n
            assert flags.top_full == last_is_n
            assert flags.contains_bold == (s[0] == -1 and last_is_n)

    def test_odd_reflection_example(self):
        s = S("1',1,2',3',2")
        t = dg.odd_reflect_shuffle(s, OddRoot.pos(1, 2))
        assert t == S("1',2',1,3',2")
        assert dg.odd_reflect_shuffle(t, OddRoot.neg(1, 2)) == s
        with pytest.raises(NotSimple):
            dg.odd_reflect_shuffle(s, OddRoot.pos(2, 1))

    @pytest.mark.parametrize("rank", [Rank(2, 3), Rank(3, 4), Rank(2, 5)])
    def test_reflection_square(self, rank):
        for s in dg.shuffles(rank):
            lam = dg.zeta(s, rank)
            for alpha in dg.positive_odd_roots(rank):
                for beta in (alpha, -alpha):
                    simple = dg.simple_position(s, beta) is not None
                    assert simple == dg.in_domain(lam, beta, rank)
                    if simple:
                        assert dg.zeta(dg.odd_reflect_shuffle(s, beta), rank) == dg.toggle_box(lam, beta, rank)

    def test_bar_shuffle_examples(self):
        assert dg.bar_shuffle(S("1',1,2',3',2"), R23) == S("1,1',2,2',3'")
        with pytest.raises(DomainError):
            dg.bar_shuffle(S("1,2,1',2',3'"), R23)
        full = dg.zeta_inv((3, 3), R23)
        once = dg.bar_shuffle(full, R23)
        twice = dg.bar_shuffle(once, R23)
        assert dg.zeta(once, R23) == (3, 0)
        assert dg.zeta(twice, R23) == (0, 0)

    @pytest.mark.parametrize("rank", RANKS)
    def test_bar_shuffle_matches_bar(self, rank):
        for s in dg.shuffles(rank):
            if s[-1] == rank.n:
                b = dg.bar_shuffle(s, rank)
                assert dg.zeta(b, rank) == dg.bar(dg.zeta(s, rank), rank)
                assert dg.underbar_shuffle(b, rank) == s


class TestRender:
    def test_empty_is_all_eps_first(self):
        text = dg.delta_epsilon_render(Shuffle.identity(R23), R23)
        assert "δε" not in text
        assert text.count("εδ") == 6

    def test_full_is_all_delta_first(self):
        text = dg.delta_epsilon_render(dg.zeta_inv((3, 3), R23), R23)
        assert "εδ" not in text
        assert text.count("δε") == 6

    def test_marks_simple_roots(self):
        s = S("1',1,2',3',2")
        text = dg.delta_epsilon_render(s, R23)
        # three odd simple roots: delta1-eps1, eps1-delta2 and delta3-eps2
        assert text.count("*") == 3
        assert text.count("δε") == 4 and text.count("εδ") == 2


class TestGaussian:
    @pytest.mark.parametrize("rank", [Rank(3, 4), Rank(2, 5), Rank(4, 5)])
    def test_size_counts(self, rank):
        total = rank.m + rank.n
        expected = oracles.q_binomial_by_subsets(total, rank.n)
        assert dg.size_counts(rank) == expected
        assert dg.gaussian_binomial(total, rank.n) == expected


class TestOddRoot:
    def test_shift_and_str(self):
        a = OddRoot.pos(2, 1)
        assert a.shift(1, 2) == OddRoot.pos(1, 1)
        assert a.shift(-1, 3) == OddRoot.pos(1, 1)
        assert str(a) == "ε2−δ1" and str(-a) == "δ1−ε2"
        assert OddRoot.from_json(a.to_json()) == a
