from __future__ import annotations

from fractions import Fraction

import pytest

from weyl_groupoid import orbit as ob
from weyl_groupoid import verma as vm
from weyl_groupoid.affine import AffineRoot
from weyl_groupoid.diagram import OddRoot, Rank, Shuffle
from weyl_groupoid.errors import DomainError, EmptyChain, NotIsotropic

R23 = Rank(2, 3)
P = OddRoot.pos
RANKS = [Rank(2, 3), Rank(3, 4), Rank(2, 5)]


def names(roots):
    return [str(r) for r in roots]


class TestForms:
    def test_rho(self):
        r = vm.rho(R23)
        assert r.eps == (-1, -2) and r.dlt == (2, 1, 0)
        assert vm.bilinear(r, vm.odd_root_weight(1, 3, R23)) == -1
        # simple even roots pair to one, the odd simple root to zero
        assert vm.bilinear(r, vm.FormWeight.from_root(AffineRoot.diff(1, 2, R23))) == 1
        assert vm.bilinear(r, vm.odd_root_weight(2, 1, R23)) == 0
        assert vm.bilinear(r, vm.FormWeight.from_root(AffineRoot.diff(-1, -2, R23))) == -1

    def test_bilinear_signature(self):
        e = vm.FormWeight.from_root(AffineRoot.unit(1, R23))
        d = vm.FormWeight.from_root(AffineRoot.unit(-1, R23))
        assert vm.bilinear(e, e) == 1 and vm.bilinear(d, d) == -1 and vm.bilinear(e, d) == 0

    def test_rho_odd_and_levi(self):
        assert vm.rho_odd(R23).eps == (Fraction(3, 2),) * 2
        assert vm.rho_odd(R23).dlt == (-1,) * 3
        lev = vm.rho_levi(2, 1, R23)
        assert lev.eps == (0, Fraction(1, 2)) and lev.dlt == (Fraction(-1, 2), 0, 0)
        full = vm.rho_levi(1, 3, R23)
        assert full == vm.rho_odd(R23)
        with pytest.raises(DomainError):
            vm.rho_levi(3, 1, R23)

    def test_minus_rho_keeps_level(self):
        lam = vm.minus_rho(R23, 1)
        assert lam.level == 1 and lam.eps == (1, 2)
        assert (-vm.rho(R23, level=1)).level == -1


class TestChains:
    def test_examples(self):
        assert names(vm.chain_betas([P(2, 1)], R23)) == ["ε2−δ1"]
        assert names(vm.chain_betas([P(2, 1), P(1, 1)], R23)) == ["ε2−δ1", "ε1−δ1"]
        full = [P(2, 1), P(1, 1), P(2, 2), P(2, 3), P(1, 2), P(1, 3)]
        betas = vm.chain_betas(full + [P(2, 1)], R23)
        assert str(betas[-1]) == "δ̄+ε2−δ1"
        assert vm.chain_pairing_sum(betas) == 1

    def test_bad_chains(self):
        with pytest.raises(DomainError):
            vm.chain_betas([P(1, 1)], R23)
        with pytest.raises(DomainError):
            vm.edge_beta(ob.ShuffleClass(Shuffle.identity(R23), 0), OddRoot.neg(2, 1), R23)
        with pytest.raises(EmptyChain):
            vm.chain_pairing_sum(())
        with pytest.raises(EmptyChain):
            vm.completeness_criterion(vm.minus_rho(R23, 1), ())

    def test_expected_sum(self):
        a = AffineRoot.diff(1, -3, R23)
        assert vm.expected_sum(a, 0, R23) == 1
        assert vm.expected_sum(AffineRoot.diff(2, -1, R23), 2, R23) == 2

    def test_singular(self):
        lam = vm.minus_rho(R23, 1)
        assert vm.singular_check(lam, AffineRoot.diff(2, -1, R23))
        assert not vm.singular_check(vm.rho(R23), AffineRoot.diff(1, -3, R23))
        with pytest.raises(NotIsotropic):
            vm.singular_check(lam, AffineRoot.diff(1, 2, R23))

    @pytest.mark.parametrize("rank", RANKS)
    def test_finite_identities(self, rank):
        lam = vm.minus_rho(rank, rank.m - rank.n)
        count = 0
        for rec in vm.finite_chains(rank):
            count += 1
            alpha = rec.betas[-1]
            assert all(b.level == 0 for b in rec.betas)
            assert vm.chain_pairing_sum(rec.betas) == vm.expected_sum(alpha, 0, rank)
            assert vm.completeness_criterion(lam, rec.betas) == 0
        assert count > 0

    def test_affine_chains_small(self):
        lam = vm.minus_rho(R23, 1)
        recs = list(vm.affine_chains(R23, 8))
        assert any(b.level > 0 for rec in recs for b in rec.betas)
        for rec in recs:
            beta = rec.betas[-1]
            assert vm.chain_pairing_sum(rec.betas) == vm.expected_sum(beta.with_level(0), beta.level, R23)
            assert vm.completeness_criterion(lam, rec.betas) == 0

    @pytest.mark.parametrize("rank", RANKS)
    def test_summaries_match_paths(self, rank):
        d = 2 * rank.n + 2
        direct = {}
        for rec in vm.affine_chains(rank, d):
            acc = rec.betas[0]
            for b in rec.betas[1:]:
                acc = acc + b
            c = ob.ShuffleClass(Shuffle.identity(rank), 0)
            for label in rec.labels:
                c = ob.apply_shuffle_morphism(c, label, rank)
            direct.setdefault(c, set()).add((acc, rec.betas[-1]))
        assert vm.affine_chain_summaries(rank, d) == direct

    def test_wrong_level_fails(self):
        lam = vm.minus_rho(R23, 0)
        betas = vm.chain_betas([P(2, 1), P(1, 1), P(2, 2), P(2, 3), P(1, 2), P(1, 3), P(2, 1)], R23)
        assert vm.completeness_criterion(lam, betas) != 0
