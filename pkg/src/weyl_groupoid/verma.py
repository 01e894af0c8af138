"""Pairing arithmetic behind reflection completeness of highest-weight modules.

A chain is the sequence of affine odd roots ``beta_1, .., beta_r`` reflected
along a path of positive morphisms starting at the distinguished Borel.  If
the last root is ``beta_r = k dbar + a`` with ``a = eps_p - delta_q``, the
criterion value for a weight ``lam`` is ``(lam - sum fin(beta_i), a) + k lam(c)``.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from . import diagram as dg
from . import orbit as ob
from .affine import AffineRoot, global_seq, simple_index
from .diagram import OddRoot, Rank, Shuffle
from .errors import AmbiguousAction, DomainError, EmptyChain, NotIsotropic


class FormWeight(NamedTuple):
    eps: tuple[Fraction, ...]
    dlt: tuple[Fraction, ...]
    dbar: Fraction = Fraction(0)
    level: Fraction = Fraction(0)

    @classmethod
    def from_root(cls, root: AffineRoot) -> "FormWeight":
        return cls(tuple(map(Fraction, root.eps)), tuple(map(Fraction, root.dlt)), Fraction(root.level))

    @classmethod
    def zero(cls, rank: Rank, level=0) -> "FormWeight":
        return cls((Fraction(0),) * rank.n, (Fraction(0),) * rank.m, Fraction(0), Fraction(level))

    def __add__(self, other: "FormWeight") -> "FormWeight":  # type: ignore[override]
        return FormWeight(tuple(x + y for x, y in zip(self.eps, other.eps)),
                          tuple(x + y for x, y in zip(self.dlt, other.dlt)),
                          self.dbar + other.dbar, self.level + other.level)

    def __neg__(self) -> "FormWeight":
        return FormWeight(tuple(-x for x in self.eps), tuple(-x for x in self.dlt),
                          -self.dbar, -self.level)

    def __sub__(self, other: "FormWeight") -> "FormWeight":
        return self + (-other)

    def scale(self, c) -> "FormWeight":
        c = Fraction(c)
        return FormWeight(tuple(c * x for x in self.eps), tuple(c * x for x in self.dlt),
                          c * self.dbar, c * self.level)

    def with_level(self, level) -> "FormWeight":
        return self._replace(level=Fraction(level))


def bilinear(u: FormWeight, v: FormWeight) -> Fraction:
    return (sum((x * y for x, y in zip(u.eps, v.eps)), Fraction(0))
            - sum((x * y for x, y in zip(u.dlt, v.dlt)), Fraction(0)))


def odd_root_weight(i: int, j: int, rank: Rank) -> FormWeight:
    return FormWeight.from_root(AffineRoot.diff(i, -j, rank))


def rho(rank: Rank, level=0) -> FormWeight:
    """``rho_0 - rho_1`` for the distinguished positive system."""
    n, m = rank.n, rank.m
    eps = tuple(Fraction(n + 1 - 2 * p - m, 2) for p in range(1, n + 1))
    dlt = tuple(Fraction(m + 1 - 2 * q + n, 2) for q in range(1, m + 1))
    return FormWeight(eps, dlt, Fraction(0), Fraction(level))


def rho_odd(rank: Rank) -> FormWeight:
    """Half the sum of the distinguished positive odd roots."""
    return FormWeight((Fraction(rank.m, 2),) * rank.n, (Fraction(-rank.n, 2),) * rank.m)


def rho_levi(p: int, q: int, rank: Rank) -> FormWeight:
    """Half the sum of ``eps_i - delta_j`` over ``i >= p`` and ``j <= q``."""
    n, m = rank.n, rank.m
    if not (1 <= p <= n and 1 <= q <= m):
        raise DomainError(f"need 1 <= p <= {n} and 1 <= q <= {m}, got ({p}, {q})")
    eps = tuple(Fraction(q, 2) if i >= p else Fraction(0) for i in range(1, n + 1))
    dlt = tuple(Fraction(-(n + 1 - p), 2) if j <= q else Fraction(0) for j in range(1, m + 1))
    return FormWeight(eps, dlt)


# ---------------------------------------------------------------------------
# chains


def edge_beta(c: ob.ShuffleClass, label: OddRoot, rank: Rank) -> AffineRoot:
    """Global affine root reflected when ``label`` (positive) acts on the class ``c``."""
    if label.sign < 0:
        raise DomainError("chains only use positive morphisms")
    found = None
    for sigma, j in ob.shuffle_members(c, rank):
        local = label.shift(j, rank.n)
        if dg.simple_position(sigma, local) is None:
            continue
        roots = global_seq(sigma, j, rank)
        t = simple_index(roots, AffineRoot.diff(local.i, -local.j, rank), j)
        beta = roots[t]
        if found is not None and beta != found:
            raise AmbiguousAction(f"members of {c} reflect different roots: {found} vs {beta}")
        found = beta
    if found is None:
        raise DomainError(f"{label} does not act on {c}")
    return found


def chain_betas(labels: Sequence[OddRoot], rank: Rank,
                start: ob.ShuffleClass | None = None) -> tuple[AffineRoot, ...]:
    """Reflected roots along the path that applies ``labels`` in order."""
    c = start or ob.ShuffleClass(Shuffle.identity(rank), 0)
    out = []
    for label in labels:
        beta = edge_beta(c, label, rank)
        if beta.fin != AffineRoot.diff(label.i, -label.j, rank).fin:
            raise AssertionError(f"reflected root {beta} does not have finite part {label}")
        out.append(beta)
        c = ob.apply_shuffle_morphism(c, label, rank)
    return tuple(out)


def _final_root(chain: Sequence[AffineRoot]) -> tuple[AffineRoot, int]:
    if not chain:
        raise EmptyChain("a chain needs at least one root")
    last = chain[-1]
    return last.with_level(0), last.level


def chain_pairing_sum(chain: Sequence[AffineRoot]) -> int:
    """``sum (fin beta_i, a)`` where ``a`` is the finite part of the last root."""
    alpha, _ = _final_root(chain)
    return sum(b.with_level(0).pair(alpha) for b in chain)


def completeness_criterion(lam: FormWeight, chain: Sequence[AffineRoot]) -> Fraction:
    alpha, k = _final_root(chain)
    acc = lam
    for b in chain:
        acc = acc - FormWeight.from_root(b.with_level(0))
    return bilinear(acc, FormWeight.from_root(alpha)) + k * lam.level


def singular_check(lam: FormWeight, beta: AffineRoot) -> bool:
    if not beta.is_isotropic:
        raise NotIsotropic(f"{beta} is not isotropic")
    fin = FormWeight.from_root(beta.with_level(0))
    return bilinear(lam - fin, fin) + beta.level * lam.level == 0


def expected_sum(alpha: AffineRoot, level: int, rank: Rank) -> int:
    """``k (m - n) + p + q - n - 1`` for ``alpha = eps_p - delta_q``."""
    p = next(i for i, c in enumerate(alpha.eps, 1) if c)
    q = next(j for j, c in enumerate(alpha.dlt, 1) if c)
    return level * (rank.m - rank.n) + p + q - rank.n - 1


# ---------------------------------------------------------------------------
# enumeration


class ChainRecord(NamedTuple):
    labels: tuple[OddRoot, ...]
    betas: tuple[AffineRoot, ...]


def finite_chains(rank: Rank) -> Iterator[ChainRecord]:
    """Every non-empty path of box additions inside the rectangle, from the empty diagram."""
    start = ob.ShuffleClass(Shuffle.identity(rank), 0)

    def rec(lam, c, labels, betas):
        _, outer = dg.corners(lam, rank)
        for alpha in sorted(outer):
            beta = edge_beta(c, alpha, rank)
            nxt = (labels + (alpha,), betas + (beta,))
            yield ChainRecord(*nxt)
            yield from rec(dg.toggle_box(lam, alpha, rank),
                           ob.apply_shuffle_morphism(c, alpha, rank), *nxt)

    yield from rec((0,) * rank.n, start, (), ())


def affine_chains(rank: Rank, max_degree: int) -> Iterator[ChainRecord]:
    """Every non-empty positive path from the distinguished class up to ``max_degree``."""
    start = ob.ShuffleClass(Shuffle.identity(rank), 0)
    roots = dg.positive_odd_roots(rank)

    def rec(c, d, labels, betas):
        if d >= max_degree:
            return
        for alpha in roots:
            nxt_c = ob.apply_shuffle_morphism(c, alpha, rank)
            if nxt_c is None:
                continue
            beta = edge_beta(c, alpha, rank)
            nxt = (labels + (alpha,), betas + (beta,))
            yield ChainRecord(*nxt)
            yield from rec(nxt_c, d + 1, *nxt)

    yield from rec(start, 0, (), ())


def affine_chain_summaries(rank: Rank, max_degree: int) -> dict:
    """Distinct ``(sum of roots, last root)`` pairs over all positive paths, by end class.

    The criterion only depends on these two data, so this covers every chain
    without listing paths one by one.
    """
    g = ob.build_borel_graph(ob.ShuffleClass(Shuffle.identity(rank), 0), max_degree, rank, 0)
    out_edges = defaultdict(list)
    for s, t, a in g.edges:
        out_edges[s].append((t, a))
    zero = AffineRoot.zero(rank)
    start = ob.ShuffleClass(Shuffle.identity(rank), 0)
    layer = {start: {(zero, None)}}
    summaries: dict = defaultdict(set)
    for _ in range(max_degree):
        nxt = defaultdict(set)
        for c, states in layer.items():
            for t, alpha in out_edges[c]:
                beta = edge_beta(c, alpha, rank)
                for acc, _ in states:
                    nxt[t].add((acc + beta, beta))
        for c, states in nxt.items():
            summaries[c] |= states
        layer = nxt
    return dict(summaries)


def minus_rho(rank: Rank, level) -> FormWeight:
    """The weight ``-rho`` taking the value ``level`` on the central element."""
    return (-rho(rank)).with_level(level)
