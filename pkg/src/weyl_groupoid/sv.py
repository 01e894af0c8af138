"""The Sergeev-Veselov action on integer weights ``(a_1..a_n | b_1..b_m)``.

A weight stands for ``sum a_i eps_i - sum b_j delta_j``, so its pairing with
``eps_i - delta_j`` is ``a_i - b_j``.  The odd root ``a = eps_i - delta_j``
moves a weight by ``+(n eps_i - m delta_j)`` when ``a_i == b_j`` and by the
opposite vector when ``a_i - b_j == n - m``.  Everything stays integral.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from . import diagram as dg
from .diagram import OddRoot, Partition, Rank
from .errors import AmbiguousSupport, InvalidInput, NoSupportingPath, SpecError
from .orbit import OrbitGraph, RotClass, bfs_graph, canonicalize


class Weight(NamedTuple):
    a: tuple[int, ...]
    b: tuple[int, ...]

    def pairing(self, i: int, j: int) -> int:
        return self.a[i - 1] - self.b[j - 1]

    def shift(self, c: int) -> "Weight":
        """Add ``c`` to every entry (a multiple of the supertrace vector)."""
        return Weight(tuple(x + c for x in self.a), tuple(y + c for y in self.b))

    def nu(self, k: int = 1) -> "Weight":
        """``nu^k`` on the eps-entries: ``nu(a_1..a_n) = (a_n, a_1, .., a_{n-1})``."""
        n = len(self.a)
        k %= n
        return Weight(self.a[n - k:] + self.a[: n - k], self.b)

    def w_canonical(self) -> "Weight":
        return Weight(tuple(sorted(self.a, reverse=True)), tuple(sorted(self.b)))

    def __str__(self) -> str:
        return ",".join(map(str, self.a)) + "|" + ",".join(map(str, self.b))

    def to_json(self) -> dict:
        return {"a": list(self.a), "b": list(self.b)}

    @classmethod
    def from_json(cls, obj: dict) -> "Weight":
        return cls(tuple(obj["a"]), tuple(obj["b"]))

    @classmethod
    def parse(cls, text: str, rank: Rank | None = None) -> "Weight":
        try:
            left, right = text.replace(" ", "").strip("()").split("|")
            w = cls(tuple(int(t) for t in left.split(",")), tuple(int(t) for t in right.split(",")))
        except ValueError:
            raise InvalidInput(f"cannot parse weight {text!r}; expected 'a1,..,an|b1,..,bm'") from None
        if rank is not None and (len(w.a), len(w.b)) != (rank.n, rank.m):
            raise InvalidInput(f"weight {text!r} does not have shape ({rank.n}|{rank.m})")
        return w


def lambda0(rank: Rank, k: int = 0) -> Weight:
    n, m = rank.require_coprime().n, rank.m
    a = tuple(m * (n - i) for i in range(1, n + 1))
    b = tuple(n * (j - 1) for j in range(1, m + 1))
    return Weight(a, b).shift(k * m)


def lambda1(rank: Rank) -> Weight:
    rank.require_coprime()
    return Weight(tuple(range(rank.n)), tuple(range(rank.m)))


def tau_apply(w: Weight, root: OddRoot, rank: Rank) -> Weight | None:
    """The partial SV move; ``None`` outside its domain."""
    n, m = rank.n, rank.m
    root.validate(rank)
    i, j = root.i - 1, root.j - 1
    diff = w.a[i] - w.b[j]
    if root.sign > 0 and diff != 0:
        return None
    if root.sign < 0 and diff != n - m:
        return None
    a, b = list(w.a), list(w.b)
    a[i] += root.sign * n
    b[j] += root.sign * m
    return Weight(tuple(a), tuple(b))


def x_of(lam: Sequence[int], rank: Rank) -> Weight:
    n, m = rank.require_coprime().n, rank.m
    lam = dg.check_partition(lam, rank)
    lam_dual = dg.dual(lam, rank)
    a = tuple(m * (n - i) + n * lam[n - i] for i in range(1, n + 1))
    b = tuple(n * (j - 1) + m * lam_dual[j - 1] for j in range(1, m + 1))
    return Weight(a, b)


def x_class(c: RotClass, rank: Rank) -> Weight:
    c = canonicalize(c.rep, c.k, rank)
    return x_of(c.rep, rank).nu(-c.k).shift(c.k * rank.m)


def sv_degree(w: Weight, rank: Rank) -> int:
    diff = sum(w.a) - sum(lambda0(rank).a)
    if diff % rank.n:
        raise InvalidInput(f"{w} is not at an integral degree from the base weight")
    return diff // rank.n


def residues_complete(w: Weight, rank: Rank) -> bool:
    """Eps-entries hit every class mod n and delta-entries every class mod m."""
    return (sorted(x % rank.n for x in w.a) == list(range(rank.n))
            and sorted(y % rank.m for y in w.b) == list(range(rank.m)))


# ---------------------------------------------------------------------------
# augmented matrices


@dataclass(frozen=True)
class AugMatrix:
    left: tuple[int, ...]
    top: tuple[int, ...]
    core: tuple[tuple[int, ...], ...]

    def zeros(self) -> frozenset[tuple[int, int]]:
        return frozenset((i + 1, j + 1) for i, row in enumerate(self.core)
                         for j, v in enumerate(row) if v == 0)

    def render(self, zeros_only: bool = False) -> str:
        cells = [[str(v) for v in row] for row in self.core]
        if zeros_only:
            cells = [["0" if v == "0" else "·" for v in row] for row in cells]
        width = max(len(s) for s in [*map(str, self.left), *map(str, self.top),
                                     *(c for row in cells for c in row)])
        fmt = lambda s: s.rjust(width)
        lines = [fmt("") + " │ " + " ".join(fmt(str(t)) for t in self.top)]
        lines.append("─" * (width + 1) + "┼" + "─" * ((width + 1) * len(self.top) + 1))
        for lv, row in zip(self.left, cells):
            lines.append(fmt(str(lv)) + " │ " + " ".join(fmt(c) for c in row))
        return "\n".join(lines)


def a_matrix(w: Weight) -> AugMatrix:
    core = tuple(tuple(x - y for y in w.b) for x in w.a)
    return AugMatrix(w.a, w.b, core)


def rotate_matrix(mat: AugMatrix) -> AugMatrix:
    """Move the bottom row, with its border entry, to the top."""
    return AugMatrix(mat.left[-1:] + mat.left[:-1], mat.top, mat.core[-1:] + mat.core[:-1])


# ---------------------------------------------------------------------------
# recovering the partition from the zero pattern


@lru_cache(maxsize=None)
def _outer_table(rank: Rank) -> tuple[tuple[Partition, frozenset[tuple[int, int]], bool], ...]:
    bold = dg.bold_lambda(rank)
    rows = []
    for mu in dg.partitions(rank):
        _, outer = dg.corners(mu, rank)
        rows.append((mu, frozenset((r.i, r.j) for r in outer), dg.contains(mu, bold)))
    return tuple(rows)


def supporting_partitions(w: Weight, rank: Rank) -> list[Partition]:
    """Partitions whose outer corners account for every zero of A(w).

    A zero off the outer corners is only allowed at ``eps_n - delta_1`` and
    only when the partition contains ``(m, 1, .., 1)``.
    """
    zeros = a_matrix(w).zeros()
    pseudo = frozenset({(rank.n, 1)})
    out = []
    for mu, outer, has_bold in _outer_table(rank):
        if not outer <= zeros:
            continue
        rest = zeros - outer
        if not rest or (rest == pseudo and has_bold):
            out.append(mu)
    return out


def a_of(w: Weight, rank: Rank) -> Partition:
    """Left inverse of :func:`x_of`."""
    rank.require_coprime()
    found = supporting_partitions(w, rank)
    if not found:
        raise NoSupportingPath(f"no path supports the zeros of {w}")
    if len(found) == 1:
        return found[0]
    diff = sum(w.a) - sum(lambda0(rank).a)
    if diff % rank.n == 0:
        found = [mu for mu in found if sum(mu) == diff // rank.n]
        if len(found) == 1:
            return found[0]
    raise AmbiguousSupport(f"zeros of {w} are supported by several paths: {found}")


def sv_orbit_graph(source: Weight, max_degree: int, rank: Rank,
                   min_degree: int | None = None) -> OrbitGraph:
    rank.require_coprime()
    deg = lambda w: sv_degree(w, rank)
    return bfs_graph(
        source,
        lambda w, a: tau_apply(w, a, rank),
        deg, rank, "SV",
        deg(source) if min_degree is None else min_degree,
        max_degree,
    )


# ---------------------------------------------------------------------------
# block constructions


@dataclass(frozen=True)
class BlockSpec:
    rr: tuple[int, ...]
    ss: tuple[int, ...]

    def validate(self, rank: Rank) -> "BlockSpec":
        if len(self.rr) != len(self.ss) or not self.rr:
            raise SpecError(f"rr and ss must be non-empty of equal length, got {self.rr}, {self.ss}")
        if any(x <= 0 for x in self.rr + self.ss):
            raise SpecError(f"block sizes must be positive, got {self.rr}, {self.ss}")
        if sum(self.rr) != rank.m or sum(self.ss) != rank.n:
            raise SpecError(
                f"need sum(rr) = m = {rank.m} and sum(ss) = n = {rank.n}, "
                f"got {sum(self.rr)} and {sum(self.ss)}"
            )
        return self

    def offsets(self, rank: Rank) -> tuple[int, ...]:
        """The partial sums ``a_p = sum_{i<=p} (n r_i - m s_i)`` for p < k."""
        out, acc = [], 0
        for r, s in zip(self.rr[:-1], self.ss[:-1]):
            acc += rank.n * r - rank.m * s
            out.append(acc)
        return tuple(out)


def block_weight(spec: BlockSpec, rank: Rank) -> Weight:
    n, m = rank.require_coprime().n, rank.m
    spec.validate(rank)
    offs = (0,) + spec.offsets(rank)
    top: list[int] = []
    for off, r in zip(offs, spec.rr):
        top.extend(off + n * t for t in range(r))
    left: list[int] = []
    k = len(spec.rr)
    for p, s in enumerate(spec.ss, start=1):
        base = offs[p] if p < k else 0
        left.extend(base + m * t for t in range(s - 1, -1, -1))
    return Weight(tuple(left), tuple(top))


def block_partition(spec: BlockSpec, rank: Rank) -> Partition:
    spec.validate(rank)
    rows: list[int] = []
    acc = 0
    for r, s in zip(spec.rr, spec.ss):
        acc += r
        rows.extend([acc] * s)
    return tuple(reversed(rows))


def lambda1_block_spec(rank: Rank) -> BlockSpec:
    """One row per block; block i collects the multiples of n in [(i-1)m, im)."""
    n, m = rank.require_coprime().n, rank.m
    rr = tuple(sum(1 for j in range(m) if (i - 1) * m <= n * j < i * m) for i in range(1, n + 1))
    return BlockSpec(rr, (1,) * n)


class Move(NamedTuple):
    sign: int
    a_value: int
    b_value: int
    result: Weight


def orbit_search(source: Weight, target: Weight, rank: Rank,
                 bound: tuple[int, int]) -> list[Move] | None:
    """Shortest move sequence between W-orbits, or ``None`` inside the degree bound.

    Weights are compared after sorting ``a`` descending and ``b`` ascending.  A
    move adds ``(n, m)`` to a pair ``a_i == b_j`` or subtracts it from a pair
    with ``a_i - b_j == n - m``.
    """
    n, m = rank.require_coprime().n, rank.m
    lo, hi = bound
    start, goal = source.w_canonical(), target.w_canonical()
    base = sum(lambda0(rank).a)
    parent: dict[Weight, tuple[Weight, Move] | None] = {start: None}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        if w == goal:
            path = []
            while parent[w] is not None:
                prev, mv = parent[w]
                path.append(mv)
                w = prev
            return path[::-1]
        for i in range(n):
            for j in range(m):
                diff = w.a[i] - w.b[j]
                for sign, ok in ((1, diff == 0), (-1, diff == n - m)):
                    if not ok:
                        continue
                    a, b = list(w.a), list(w.b)
                    a[i] += sign * n
                    b[j] += sign * m
                    nxt = Weight(tuple(a), tuple(b)).w_canonical()
                    d = (sum(nxt.a) - base) // n
                    if nxt in parent or not lo <= d <= hi:
                        continue
                    parent[nxt] = (w, Move(sign, w.a[i], w.b[j], nxt))
                    queue.append(nxt)
    return None
