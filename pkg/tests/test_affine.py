from __future__ import annotations

import json

import pytest

from weyl_groupoid import affine as af
from weyl_groupoid import diagram as dg
from weyl_groupoid.affine import AffineRoot
from weyl_groupoid.diagram import Rank, Shuffle
from weyl_groupoid.errors import DomainError, NotIsotropic, NotSimple

R23 = Rank(2, 3)
RANKS = [Rank(2, 3), Rank(3, 4), Rank(2, 5), Rank(3, 5)]


def names(roots):
    return [str(r) for r in roots]


class TestRoots:
    def test_arithmetic_and_form(self):
        odd = AffineRoot.diff(1, -1, R23, level=2)
        assert str(odd) == "2δ̄+ε1−δ1"
        assert odd.is_odd and odd.is_isotropic and odd.pair(odd) == 0
        even = AffineRoot.diff(1, 2, R23)
        assert not even.is_odd and even.pair(even) == 2
        dd = AffineRoot.diff(-1, -2, R23)
        assert dd.pair(dd) == -2
        assert even + (-even) == AffineRoot.zero(R23)
        assert (odd - odd.with_level(0)).level == 2

    def test_json(self):
        r = AffineRoot.diff(2, -3, R23, level=-1)
        assert r.to_json() == {"level": -1, "coeffs": [0, 1, 0, 0, -1]}
        assert AffineRoot.from_json(json.loads(json.dumps(r.to_json())), R23) == r

    def test_shift_eps(self):
        r = AffineRoot.diff(2, -1, R23)
        assert r.shift_eps(1) == AffineRoot.diff(1, -1, R23)
        assert r.shift_eps(2) == r


class TestFiniteSequences:
    def test_distinguished(self):
        s = Shuffle.identity(R23)
        roots = af.finite_simple_roots(s, R23)
        assert names(roots) == ["ε1−ε2", "ε2−δ1", "δ1−δ2", "δ2−δ3"]
        assert str(af.extending_root(roots)) == "δ̄+δ3−ε1"
        assert af.diagram_nodes(roots) == ("even", "odd", "even", "even")
        assert af.render_chain(roots).splitlines()[0] == "○ ─ ⊗ ─ ○ ─ ○"

    @pytest.mark.parametrize("rank", RANKS)
    def test_reflection_matches_shuffle_swap(self, rank):
        for s in dg.shuffles(rank):
            roots = af.finite_simple_roots(s, rank)
            for alpha in dg.positive_odd_roots(rank):
                for beta in (alpha, -alpha):
                    t = dg.simple_position(s, beta)
                    if t is None:
                        continue
                    got = af.odd_reflect_seq(roots, t)
                    assert got == af.finite_simple_roots(dg.odd_reflect_shuffle(s, beta), rank)

    def test_even_root_not_reflected(self):
        roots = af.finite_simple_roots(Shuffle.identity(R23), R23)
        with pytest.raises(NotIsotropic):
            af.odd_reflect_seq(roots, 0)

    def test_extending_node_flag(self):
        ext = af.extend(af.finite_simple_roots(Shuffle.identity(R23), R23))
        out, flagged = af.odd_reflect_extended(ext, 0)
        assert flagged and out[0] == -ext[0]
        _, flagged = af.odd_reflect_extended(ext, 2)
        assert not flagged

    @pytest.mark.parametrize("rank", RANKS + [Rank(2, 2)])
    def test_extended_set_survives_row_deletion(self, rank):
        for s in dg.shuffles(rank):
            if s[-1] != rank.n:
                continue
            roots = af.finite_simple_roots(s, rank)
            turned = af.rotate_seq(roots)
            assert set(af.extend(turned)) == set(af.extend(roots))
            assert af.unrotate_seq(turned) == roots
            assert af.local_names(turned, 1) == af.finite_simple_roots(dg.bar_shuffle(s, rank), rank)

    def test_rotation_domain(self):
        roots = af.finite_simple_roots(Shuffle.parse("1',2',3',1,2", R23), R23)
        with pytest.raises(DomainError):
            af.unrotate_seq(roots)
        roots = af.finite_simple_roots(Shuffle.identity(R23), R23)
        with pytest.raises(DomainError):
            af.rotate_seq(roots)


class TestGlobalWalk:
    @pytest.mark.parametrize("rank", RANKS + [Rank(2, 2), Rank(3, 3)])
    def test_path_independent(self, rank):
        assert af.walk_conflicts(rank, -2 * rank.n, 2 * rank.n) == []

    def test_examples(self):
        s = Shuffle.identity(R23)
        assert names(af.global_seq(s, 1, R23)) == ["δ̄+ε2−ε1", "ε1−δ1", "δ1−δ2", "δ2−δ3"]
        assert names(af.global_seq(s, -1, R23)) == ["δ̄+ε2−ε1", "−δ̄+ε1−δ1", "δ1−δ2", "δ2−δ3"]
        assert names(af.global_seq(s, 2, R23)) == ["ε1−ε2", "δ̄+ε2−δ1", "δ1−δ2", "δ2−δ3"]
        assert names(af.global_seq(s, 3, R23)) == ["δ̄+ε2−ε1", "δ̄+ε1−δ1", "δ1−δ2", "δ2−δ3"]

    @pytest.mark.parametrize("rank", RANKS)
    def test_local_names(self, rank):
        for state, roots in af.global_table(rank, -2, 2).items():
            assert af.local_names(roots, state.k) == af.finite_simple_roots(state.sigma, rank)
            levels = [r.level for r in roots]
            assert af.global_from_local(af.local_names(roots, state.k), state.k, levels) == roots

    def test_simple_index(self):
        roots = af.global_seq(Shuffle.identity(R23), 1, R23)
        assert af.simple_index(roots, AffineRoot.diff(2, -1, R23), 1) == 1
        with pytest.raises(NotSimple):
            af.simple_index(roots, AffineRoot.diff(1, -3, R23), 1)

    def test_square_rank(self):
        r = Rank(2, 2)
        s = Shuffle.identity(r)
        assert names(af.global_seq(s, 1, r)) == ["δ̄+ε2−ε1", "ε1−δ1", "δ1−δ2"]
        assert str(af.extending_root(af.global_seq(s, 2, r))) == "δ2−ε1"


class TestClosedForms:
    @pytest.mark.parametrize("rank", RANKS + [Rank(2, 2), Rank(3, 3), Rank(2, 4)])
    def test_staircase(self, rank):
        ident = Shuffle.identity(rank)
        for k in range(-2, 3):
            betas = af.global_seq(ident, k, rank)
            for j in range(rank.n + 1):
                got = af.global_seq(af.staircase_shuffle(j, rank), k, rank)
                assert got == af.staircase_form(betas, j, rank)

    def test_staircase_all_rows_keeps_tail(self):
        betas = af.global_seq(Shuffle.identity(R23), 0, R23)
        full = af.staircase_form(betas, 2, R23)
        assert names(full) == ["δ1−δ2", "δ2−δ3", "δ3−ε1", "ε1−ε2"]
        assert full == af.global_seq(dg.zeta_inv((3, 3), R23), 0, R23)

    @pytest.mark.parametrize("rank", RANKS + [Rank(3, 3)])
    def test_rotated_distinguished(self, rank):
        for j in range(1, rank.n):
            assert af.global_seq(Shuffle.identity(rank), j, rank) == af.rotated_distinguished_form(j, rank)
        with pytest.raises(DomainError):
            af.rotated_distinguished_form(rank.n, rank)

    @pytest.mark.parametrize("rank", RANKS + [Rank(2, 2)])
    def test_multiples_and_next_block(self, rank):
        ident = Shuffle.identity(rank)
        anti = af.staircase_shuffle(rank.n, rank)
        for k in range(-2, 3):
            roots, ext = af.multiple_distinguished_form(k, rank)
            got = af.global_seq(ident, k * rank.n, rank)
            assert got == roots and af.extending_root(got) == ext
            roots, ext = af.multiple_anti_form(k, rank)
            got = af.global_seq(anti, k * rank.n, rank)
            assert got == roots and af.extending_root(got) == ext
            assert af.global_seq(ident, k + rank.n, rank) == af.next_block_form(af.global_seq(anti, k, rank), rank)

    def test_upsilon_example(self):
        cyc = af.upsilon(R23)
        assert names(cyc) == ["δ̄+ε2−δ1", "δ1−δ2", "δ2−δ3", "δ3−ε1", "ε1−ε2"]
        assert "⊗" in af.render_cycle(cyc)
        assert af.open_cycle(cyc, 0) == tuple(cyc[1:])

    @pytest.mark.parametrize("rank", RANKS)
    def test_upsilon_openings(self, rank):
        cyc = af.upsilon(rank)
        for i in range(rank.n + 1):
            got = af.global_seq(af.staircase_shuffle(rank.n - i, rank), i, rank)
            assert got == af.open_cycle(cyc, af.upsilon_removed_index(i, rank))
        with pytest.raises(DomainError):
            af.upsilon_removed_index(rank.n + 1, rank)
