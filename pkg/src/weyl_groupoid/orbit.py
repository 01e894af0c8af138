"""Rotation classes, the extended corner-move action on them, and orbit graphs.

A pair ``(lam, k)`` is identified with ``(bar(lam), k + 1)`` whenever the
bottom row of ``lam`` is full.  Every class has a unique member whose bottom
row is not full; that member is the canonical representative.  The same
bookkeeping is done for shuffles, where a full bottom row means the shuffle
ends with ``n``.

Morphisms are labelled by odd roots ``+a`` / ``-a``.  A morphism acts on a
class through any member ``(mu, j)`` by the corner move at the root ``nu^j a``.
Orbit graphs only store positive labels; a negative morphism is an edge
traversed backwards.
"""
from __future__ import annotations

import json
from collections import deque
from typing import Callable, Hashable, NamedTuple, Sequence

from . import diagram as dg
from .diagram import OddRoot, Partition, Rank, Shuffle
from .errors import AmbiguousAction, InvalidInput


class RotClass(NamedTuple):
    rep: Partition
    k: int

    def to_json(self) -> dict:
        return {"rep": list(self.rep), "k": self.k}

    @classmethod
    def from_json(cls, obj: dict) -> "RotClass":
        return cls(tuple(obj["rep"]), int(obj["k"]))


class ShuffleClass(NamedTuple):
    sigma: Shuffle
    k: int

    def to_json(self) -> dict:
        return {"sigma": self.sigma.to_json(), "k": self.k}

    @classmethod
    def from_json(cls, obj: dict) -> "ShuffleClass":
        return cls(Shuffle.from_json(obj["sigma"]), int(obj["k"]))


# ---------------------------------------------------------------------------
# partitions


def canonicalize(lam: Sequence[int], k: int, rank: Rank) -> RotClass:
    lam = dg.check_partition(lam, rank)
    while lam[0] == rank.m:
        lam, k = dg.bar(lam, rank), k + 1
    return RotClass(lam, k)


def members(c: RotClass, rank: Rank) -> list[tuple[Partition, int]]:
    """Every ``(lam, k)`` in the class, starting from the canonical one."""
    c = canonicalize(c.rep, c.k, rank)
    lam, k = c.rep, c.k
    out = [(lam, k)]
    while lam[-1] == 0:
        lam, k = dg.underbar(lam, rank), k - 1
        out.append((lam, k))
    return out


def degree(c: RotClass, rank: Rank) -> int:
    return sum(c.rep) + c.k * rank.m


def apply_morphism(c: RotClass, label: OddRoot, rank: Rank) -> RotClass | None:
    label.validate(rank)
    found = None
    for mu, j in members(c, rank):
        beta = label.shift(j, rank.n)
        if not dg.in_domain(mu, beta, rank):
            continue
        res = canonicalize(dg.toggle_box(mu, beta, rank), j, rank)
        if found is not None and res != found:
            raise AmbiguousAction(f"{label} on {c}: members disagree ({found} vs {res})")
        found = res
    return found


def classes_of_degree(rank: Rank, d: int) -> list[RotClass]:
    """All canonical classes of degree ``d``, listed directly."""
    out = []
    for lam in dg.partitions(rank):
        if lam[0] == rank.m:
            continue
        rest = d - sum(lam)
        if rest % rank.m == 0:
            out.append(RotClass(lam, rest // rank.m))
    return sorted(out, key=lambda c: (c.k, c.rep))


def display(c: RotClass, rank: Rank) -> str:
    """Readable name: the rotation-0 member if there is one, else ``+``/``-`` marks."""
    for mu, j in members(c, rank):
        if j == 0:
            return dg.format_partition(mu)
    body = dg.format_partition(c.rep)
    if abs(c.k) <= 2:
        return body + ("⁺" if c.k > 0 else "⁻") * abs(c.k)
    return f"{body}@{c.k}"


# ---------------------------------------------------------------------------
# shuffles


def canonicalize_shuffle(sigma: Shuffle, k: int, rank: Rank) -> ShuffleClass:
    sigma.validate(rank)
    while sigma.oneline[-1] == rank.n:
        sigma, k = dg.bar_shuffle(sigma, rank), k + 1
    return ShuffleClass(sigma, k)


def shuffle_members(c: ShuffleClass, rank: Rank) -> list[tuple[Shuffle, int]]:
    c = canonicalize_shuffle(c.sigma, c.k, rank)
    sigma, k = c.sigma, c.k
    out = [(sigma, k)]
    while sigma.oneline[0] == 1:
        sigma, k = dg.underbar_shuffle(sigma, rank), k - 1
        out.append((sigma, k))
    return out


def shuffle_degree(c: ShuffleClass, rank: Rank) -> int:
    return sum(dg.zeta(c.sigma, rank)) + c.k * rank.m


def apply_shuffle_morphism(c: ShuffleClass, label: OddRoot, rank: Rank) -> ShuffleClass | None:
    label.validate(rank)
    found = None
    for sigma, j in shuffle_members(c, rank):
        beta = label.shift(j, rank.n)
        if dg.simple_position(sigma, beta) is None:
            continue
        res = canonicalize_shuffle(dg.odd_reflect_shuffle(sigma, beta), j, rank)
        if found is not None and res != found:
            raise AmbiguousAction(f"{label} on {c}: members disagree ({found} vs {res})")
        found = res
    return found


# ---------------------------------------------------------------------------
# graphs


Edge = tuple[Hashable, Hashable, OddRoot]


class OrbitGraph:
    """Vertices keyed by payload with a degree each; edges carry positive labels."""

    def __init__(self, rank: Rank, kind: str):
        self.rank = rank
        self.kind = kind
        self.vertices: dict[Hashable, int] = {}
        self.edges: set[Edge] = set()

    def add_vertex(self, v: Hashable, deg: int) -> None:
        self.vertices[v] = deg

    def add_edge(self, src: Hashable, dst: Hashable, label: OddRoot) -> None:
        if label.sign < 0:
            raise InvalidInput("orbit graphs only store positive labels")
        self.edges.add((src, dst, label))

    def slice(self, d: int) -> list[Hashable]:
        return [v for v, deg in self.vertices.items() if deg == d]

    def histogram(self, d_min: int, d_max: int) -> list[int]:
        counts = [0] * (d_max - d_min + 1)
        for deg in self.vertices.values():
            if d_min <= deg <= d_max:
                counts[deg - d_min] += 1
        return counts

    def restrict(self, d_min: int, d_max: int) -> "OrbitGraph":
        out = OrbitGraph(self.rank, self.kind)
        for v, deg in self.vertices.items():
            if d_min <= deg <= d_max:
                out.add_vertex(v, deg)
        for s, t, a in self.edges:
            if s in out.vertices and t in out.vertices:
                out.add_edge(s, t, a)
        return out

    def _ordered(self) -> list[Hashable]:
        return sorted(self.vertices, key=lambda v: (self.vertices[v], repr(v)))

    def vertex_label(self, v: Hashable) -> str:
        if self.kind == "F":
            return f"{dg.format_partition(v.rep)}@{v.k}"
        if self.kind == "B":
            return f"{v.sigma}@{v.k}"
        return str(v)

    def to_dot(self, name: str = "orbit") -> str:
        ids = {v: t for t, v in enumerate(self._ordered())}
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        for v, t in ids.items():
            lines.append(f'  v{t} [label="{self.vertex_label(v)}\\ndeg {self.vertices[v]}"];')
        for s, d, a in sorted(self.edges, key=lambda e: (ids[e[0]], ids[e[1]], e[2])):
            lines.append(f'  v{ids[s]} -> v{ids[d]} [label="{a}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        ids = {v: t for t, v in enumerate(self._ordered())}
        verts = []
        for v, t in ids.items():
            entry = {"id": t, **v.to_json(), "degree": self.vertices[v]}
            verts.append(entry)
        edges = [
            {"src": ids[s], "dst": ids[d], "label": a.to_json()}
            for s, d, a in sorted(self.edges, key=lambda e: (ids[e[0]], ids[e[1]], e[2]))
        ]
        return {"kind": self.kind, "rank": [self.rank.n, self.rank.m],
                "vertices": verts, "edges": edges}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False, indent=1)

    @classmethod
    def from_json(cls, obj: dict) -> "OrbitGraph":
        from .sv import Weight

        kind = obj["kind"]
        decode = {"F": RotClass.from_json, "B": ShuffleClass.from_json, "SV": Weight.from_json}[kind]
        g = cls(Rank(*obj["rank"]), kind)
        by_id = {}
        for entry in obj["vertices"]:
            v = decode(entry)
            by_id[entry["id"]] = v
            g.add_vertex(v, int(entry["degree"]))
        for e in obj["edges"]:
            g.add_edge(by_id[e["src"]], by_id[e["dst"]], OddRoot.from_json(e["label"]))
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrbitGraph):
            return NotImplemented
        return (self.rank, self.kind, self.vertices, self.edges) == (
            other.rank, other.kind, other.vertices, other.edges)

    def __repr__(self) -> str:
        return f"OrbitGraph({self.kind}, {self.rank}, |V|={len(self.vertices)}, |E|={len(self.edges)})"


def bfs_graph(
    source: Hashable,
    act: Callable[[Hashable, OddRoot], Hashable | None],
    deg: Callable[[Hashable], int],
    rank: Rank,
    kind: str,
    d_min: int,
    d_max: int,
) -> OrbitGraph:
    """Connected component of ``source`` among vertices with degree in [d_min, d_max]."""
    g = OrbitGraph(rank, kind)
    g.add_vertex(source, deg(source))
    queue = deque([source])
    roots = dg.positive_odd_roots(rank)
    while queue:
        v = queue.popleft()
        for alpha in roots:
            for label in (alpha, -alpha):
                w = act(v, label)
                if w is None:
                    continue
                dw = deg(w)
                if not d_min <= dw <= d_max:
                    continue
                if label.sign > 0:
                    g.add_edge(v, w, alpha)
                else:
                    g.add_edge(w, v, alpha)
                if w not in g.vertices:
                    g.add_vertex(w, dw)
                    queue.append(w)
    return g


def build_orbit_graph(source: RotClass, max_degree: int, rank: Rank,
                      min_degree: int | None = None) -> OrbitGraph:
    source = canonicalize(source.rep, source.k, rank)
    d0 = degree(source, rank)
    return bfs_graph(
        source,
        lambda c, a: apply_morphism(c, a, rank),
        lambda c: degree(c, rank),
        rank, "F",
        d0 if min_degree is None else min_degree,
        max_degree,
    )


def build_borel_graph(source: ShuffleClass, max_degree: int, rank: Rank,
                      min_degree: int | None = None) -> OrbitGraph:
    source = canonicalize_shuffle(source.sigma, source.k, rank)
    d0 = shuffle_degree(source, rank)
    return bfs_graph(
        source,
        lambda c, a: apply_shuffle_morphism(c, a, rank),
        lambda c: shuffle_degree(c, rank),
        rank, "B",
        d0 if min_degree is None else min_degree,
        max_degree,
    )


def classes_by_degree(rank: Rank, d_min: int, d_max: int) -> list[int]:
    """Class counts per degree inside the orbit graph of the empty diagram."""
    g = build_orbit_graph(RotClass((0,) * rank.n, 0), d_max, rank, min(d_min, 0))
    return g.histogram(d_min, d_max)


def check_isomorphism(g1: OrbitGraph, g2: OrbitGraph, vmap: dict) -> tuple[bool, str | None]:
    """Check that ``vmap`` is a label-preserving digraph isomorphism g1 -> g2."""
    for v in g1.vertices:
        if v not in vmap:
            return False, f"vertex {v} has no image"
        if vmap[v] not in g2.vertices:
            return False, f"image {vmap[v]} of {v} is not a vertex of the target"
    if len(set(vmap[v] for v in g1.vertices)) != len(g1.vertices):
        return False, "vertex map is not injective"
    if len(g1.vertices) != len(g2.vertices):
        return False, f"vertex counts differ: {len(g1.vertices)} vs {len(g2.vertices)}"
    mapped = {(vmap[s], vmap[t], a) for s, t, a in g1.edges}
    for s, t, a in sorted(g1.edges, key=repr):
        if (vmap[s], vmap[t], a) not in g2.edges:
            return False, f"edge {s} -> {t} [{a}] has no image"
    for e in sorted(g2.edges - mapped, key=repr):
        return False, f"edge {e[0]} -> {e[1]} [{e[2]}] has no preimage"
    return True, None


def partition_to_shuffle_map(g: OrbitGraph) -> dict:
    """Vertex map F -> B sending [lam, k] to [zeta^{-1}(lam), k]."""
    return {c: ShuffleClass(dg.zeta_inv(c.rep, g.rank), c.k) for c in g.vertices}


def edges_by_display(g: OrbitGraph) -> set[tuple[str, str, str]]:
    return {(display(s, g.rank), display(t, g.rank), str(a)) for s, t, a in g.edges}

