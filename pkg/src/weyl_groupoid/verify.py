"""Named verification suites used by the command line and by the test-suite.

Each suite returns a :class:`SuiteResult`.  A failing suite carries the first
counterexample it met.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import affine as af
from . import diagram as dg
from . import orbit as ob
from . import sv
from . import verma as vm
from .diagram import OddRoot, Rank, Shuffle


@dataclass
class SuiteResult:
    name: str
    title: str
    rank: Rank
    checks: int = 0
    failure: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure is None

    def check(self, ok: bool, message) -> bool:
        self.checks += 1
        if not ok and self.failure is None:
            self.failure = message() if callable(message) else str(message)
        return ok

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"[{status}] {self.name} {self.rank}: {self.title} ({self.checks} checks)"
        if self.failure:
            out += f"\n    counterexample: {self.failure}"
        for note in self.notes:
            out += f"\n    note: {note}"
        return out


# ---------------------------------------------------------------------------


def suite_ky(rank: Rank) -> SuiteResult:
    """Deleting the bottom row commutes with corner moves and odd reflections."""
    res = SuiteResult("ky", "bottom-row deletion commutes with box moves and odd reflections", rank)
    n = rank.n
    for lam in dg.partitions(rank):
        for alpha in dg.positive_odd_roots(rank):
            for beta in (alpha, -alpha):
                nb = beta.shift(1, n)
                if lam[0] == rank.m and dg.in_domain(lam, beta, rank):
                    moved = dg.toggle_box(lam, beta, rank)
                    barred = dg.bar(lam, rank)
                    if moved[0] == rank.m and dg.in_domain(barred, nb, rank):
                        res.check(dg.bar(moved, rank) == dg.toggle_box(barred, nb, rank),
                                  lambda: f"bar/toggle at {lam}, {beta}")
                if lam[-1] == 0 and dg.in_domain(lam, beta, rank):
                    moved = dg.toggle_box(lam, beta, rank)
                    under = dg.underbar(lam, rank)
                    pb = beta.shift(-1, n)
                    if moved[-1] == 0 and dg.in_domain(under, pb, rank):
                        res.check(dg.underbar(moved, rank) == dg.toggle_box(under, pb, rank),
                                  lambda: f"underbar/toggle at {lam}, {beta}")
    for sigma in dg.shuffles(rank):
        for alpha in dg.positive_odd_roots(rank):
            for beta in (alpha, -alpha):
                nb = beta.shift(1, n)
                if sigma[-1] != n or dg.simple_position(sigma, beta) is None:
                    continue
                refl = dg.odd_reflect_shuffle(sigma, beta)
                barred = dg.bar_shuffle(sigma, rank)
                if refl[-1] == n and dg.simple_position(barred, nb) is not None:
                    res.check(dg.bar_shuffle(refl, rank) == dg.odd_reflect_shuffle(barred, nb),
                              lambda: f"bar_shuffle/reflection at {sigma}, {beta}")
    return res


def suite_ax_id(rank: Rank) -> SuiteResult:
    res = SuiteResult("ax-id", "reading the partition back from x(lambda) gives lambda", rank)
    for lam in dg.partitions(rank):
        got = sv.a_of(sv.x_of(lam, rank), rank)
        res.check(got == lam, lambda: f"a(x({lam})) = {got}")
    return res


def suite_iso(rank: Rank, max_degree: int | None = None) -> SuiteResult:
    """F, B and SV orbit graphs agree up to the given degree (default 2mn)."""
    d_max = 2 * rank.m * rank.n if max_degree is None else max_degree
    res = SuiteResult("iso", f"corner, Borel and SV orbit graphs are isomorphic up to degree {d_max}", rank)
    src = ob.RotClass((0,) * rank.n, 0)
    f = ob.build_orbit_graph(src, d_max, rank)
    for d in range(0, d_max + 1):
        direct = set(ob.classes_of_degree(rank, d))
        res.check(set(f.slice(d)) == direct, lambda: f"BFS misses classes at degree {d}")
    b = ob.build_borel_graph(ob.ShuffleClass(Shuffle.identity(rank), 0), d_max, rank)
    ok, cert = ob.check_isomorphism(f, b, ob.partition_to_shuffle_map(f))
    res.check(ok, lambda: f"F -> B: {cert}")
    g = sv.sv_orbit_graph(sv.lambda0(rank), d_max, rank)
    xmap = {c: sv.x_class(c, rank) for c in f.vertices}
    res.check(len(set(xmap.values())) == len(xmap), "x is not injective on classes")
    res.check(set(xmap.values()) == set(g.vertices), "x-image differs from the SV orbit")
    ok, cert = ob.check_isomorphism(f, g, xmap)
    res.check(ok, lambda: f"F -> SV: {cert}")
    for c in f.vertices:
        res.check(sv.sv_degree(xmap[c], rank) == ob.degree(c, rank), lambda: f"degree of x({c})")
    return res


def suite_residues(rank: Rank, max_degree: int | None = None) -> SuiteResult:
    d_max = 2 * rank.m * rank.n if max_degree is None else max_degree
    res = SuiteResult("residues", "residues and border sums along the SV orbit", rank)
    base = sv.lambda0(rank)
    g = sv.sv_orbit_graph(base, d_max, rank)
    for w, d in g.vertices.items():
        res.check(sv.residues_complete(w, rank), lambda: f"residues at {w}")
        res.check(sum(w.a) - sum(base.a) == rank.n * d, lambda: f"left border sum at {w}")
        res.check(sum(w.b) - sum(base.b) == rank.m * d, lambda: f"top border sum at {w}")
    return res


def suite_affine(rank: Rank, k_max: int = 3) -> SuiteResult:
    res = SuiteResult("affine-closed-forms", "global simple-root sequences match the closed forms", rank)
    n, m = rank.n, rank.m
    res.check(not af.walk_conflicts(rank, -k_max * n - n, k_max * n + n), "walk is path dependent")
    ident = Shuffle.identity(rank)
    anti = af.staircase_shuffle(n, rank)
    for k in range(-k_max, k_max + 1):
        betas = af.global_seq(ident, k, rank)
        for j in range(n + 1):
            got = af.global_seq(af.staircase_shuffle(j, rank), k, rank)
            res.check(got == af.staircase_form(betas, j, rank), lambda: f"full rows j={j}, k={k}")
        roots, ext = af.multiple_distinguished_form(k, rank)
        got = af.global_seq(ident, k * n, rank)
        res.check(got == roots and af.extending_root(got) == ext,
                  lambda: f"distinguished roots at rotation {k * n}")
        roots, ext = af.multiple_anti_form(k, rank)
        got = af.global_seq(anti, k * n, rank)
        res.check(got == roots and af.extending_root(got) == ext,
                  lambda: f"anti-distinguished roots at rotation {k * n}")
        got = af.global_seq(ident, k + n, rank)
        res.check(got == af.next_block_form(af.global_seq(anti, k, rank), rank),
                  lambda: f"rotation {k} anti-distinguished to rotation {k + n} distinguished")
    for j in range(1, n):
        res.check(af.global_seq(ident, j, rank) == af.rotated_distinguished_form(j, rank),
                  lambda: f"distinguished roots at rotation {j}")
    cycle = af.upsilon(rank)
    for i in range(n + 1):
        got = af.global_seq(af.staircase_shuffle(n - i, rank), i, rank)
        res.check(got == af.open_cycle(cycle, af.upsilon_removed_index(i, rank)),
                  lambda: f"node deletion {i} of the common extended diagram")
    for state, roots in af.global_table(rank, -k_max, k_max).items():
        res.check(af.local_names(roots, state.k) == af.finite_simple_roots(state.sigma, rank),
                  lambda: f"local names at {state}")
        if state.sigma[-1] == n and state.k < k_max:
            nxt = af.BorelState(dg.bar_shuffle(state.sigma, rank), state.k + 1)
            other = af.global_table(rank, -k_max, k_max)[nxt]
            res.check(set(af.extend(roots)) == set(af.extend(other)),
                      lambda: f"extensions differ at {state}")
    return res


def suite_verma(rank: Rank, max_degree: int | None = None) -> SuiteResult:
    d_max = 2 * rank.m * rank.n if max_degree is None else max_degree
    res = SuiteResult("verma", "pairing sums and the completeness criterion vanish for -rho", rank)
    lam = vm.minus_rho(rank, rank.m - rank.n)
    for rec in vm.finite_chains(rank):
        alpha = rec.betas[-1]
        res.check(vm.chain_pairing_sum(rec.betas) == vm.expected_sum(alpha, 0, rank),
                  lambda: f"finite pairing sum along {[str(a) for a in rec.labels]}")
        res.check(vm.completeness_criterion(lam, rec.betas) == 0,
                  lambda: f"finite criterion along {[str(a) for a in rec.labels]}")
        res.check(len(set(rec.betas)) == len(rec.betas), "repeated root in a finite chain")
    for c, states in vm.affine_chain_summaries(rank, d_max).items():
        for acc, beta in states:
            alpha = beta.with_level(0)
            res.check(acc.with_level(0).pair(alpha) == vm.expected_sum(alpha, beta.level, rank),
                      lambda: f"affine pairing sum ending at {c} with {beta}")
            value = (vm.bilinear(lam - vm.FormWeight.from_root(acc.with_level(0)),
                                 vm.FormWeight.from_root(alpha)) + beta.level * lam.level)
            res.check(value == 0, lambda: f"affine criterion ending at {c} with {beta}")
    return res


def suite_blocks(rank: Rank, samples: int = 50, seed: int = 0) -> SuiteResult:
    res = SuiteResult("blocks", "block weights lie in the orbit of the base weight", rank)
    rng = random.Random(seed)
    for _ in range(samples):
        spec = random_block_spec(rank, rng)
        w = sv.block_weight(spec, rank)
        lam = sv.block_partition(spec, rank)
        x = sv.x_of(lam, rank).shift(-rank.m * rank.n)
        res.check(sorted(x.a) == sorted(w.a) and sorted(x.b) == sorted(w.b),
                  lambda: f"{spec}: x(lambda) - mn = {x} vs {w}")
    target = sv.lambda1(rank)
    spec = sv.lambda1_block_spec(rank)
    w = sv.block_weight(spec, rank)
    res.check(w.w_canonical() == target.w_canonical(), lambda: f"block weight {w} vs {target}")
    bound = 2 * rank.m * rank.n
    path = sv.orbit_search(sv.lambda0(rank), target, rank, (-bound, bound))
    res.check(path is not None, "no move path to the minimal weight")
    if path is not None:
        res.notes.append(f"{len(path)} moves reach {target}")
    return res


def suite_gaussian(rank: Rank) -> SuiteResult:
    res = SuiteResult("gaussian", "partition sizes give the q-binomial coefficients", rank)
    res.check(dg.size_counts(rank) == dg.gaussian_binomial(rank.m + rank.n, rank.n),
              lambda: f"{dg.size_counts(rank)}")
    return res


def random_block_spec(rank: Rank, rng: random.Random) -> sv.BlockSpec:
    """Random composition pair with equal numbers of parts."""
    k = rng.randint(1, rank.n)
    cut = lambda total: sorted(rng.sample(range(1, total), k - 1))
    def parts(total):
        cuts = [0] + cut(total) + [total]
        return tuple(cuts[t + 1] - cuts[t] for t in range(k))
    return sv.BlockSpec(parts(rank.m), parts(rank.n))


SUITES = {
    "ky": suite_ky,
    "ax-id": suite_ax_id,
    "iso": suite_iso,
    "residues": suite_residues,
    "affine-closed-forms": suite_affine,
    "verma": suite_verma,
    "blocks": suite_blocks,
    "gaussian": suite_gaussian,
}

NEEDS_COPRIME = {"ax-id", "iso", "residues", "blocks"}


def run_suite(name: str, rank: Rank, seed: int = 0) -> SuiteResult:
    if name in NEEDS_COPRIME:
        rank.require_coprime()
    if name == "blocks":
        return suite_blocks(rank, seed=seed)
    return SUITES[name](rank)
