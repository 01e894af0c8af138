"""Simple-root sequences for Borel subalgebras of the affinization.

Roots are ``level * dbar + sum c_i eps_i + sum d_j delta_j`` with integer
coefficients.  A Borel of the copy with rotation number ``k`` is named by a
pair ``(sigma, k)``.  Its simple roots are stored under *global* names: fixed
coordinates of the rotation-0 copy, with a ``dbar`` level on each root.  The
*local* names, read inside the rotation-``k`` copy, are obtained by shifting
eps-indices with ``nu^k`` and forgetting levels.

Two moves produce every sequence from the distinguished one: odd reflections
at an isotropic simple root, and rotation, which prepends the extending root
``dbar - sum(L)`` and drops the last entry.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import NamedTuple, Sequence

from . import diagram as dg
from .diagram import Rank, Shuffle
from .errors import DomainError, InvalidInput, NotIsotropic, NotSimple

DBAR = "δ̄"


class AffineRoot(NamedTuple):
    level: int
    eps: tuple[int, ...]
    dlt: tuple[int, ...]

    @classmethod
    def zero(cls, rank: Rank) -> "AffineRoot":
        return cls(0, (0,) * rank.n, (0,) * rank.m)

    @classmethod
    def unit(cls, symbol: int, rank: Rank) -> "AffineRoot":
        """``eps_i`` for ``symbol = i > 0`` and ``delta_j`` for ``symbol = -j``."""
        eps, dlt = [0] * rank.n, [0] * rank.m
        if symbol > 0:
            eps[symbol - 1] = 1
        else:
            dlt[-symbol - 1] = 1
        return cls(0, tuple(eps), tuple(dlt))

    @classmethod
    def diff(cls, plus: int, minus: int, rank: Rank, level: int = 0) -> "AffineRoot":
        """``level * dbar + e_plus - e_minus`` in the shuffle symbol encoding."""
        return cls.unit(plus, rank) - cls.unit(minus, rank) + cls(level, (0,) * rank.n, (0,) * rank.m)

    @property
    def fin(self) -> tuple[int, ...]:
        return self.eps + self.dlt

    def __add__(self, other: "AffineRoot") -> "AffineRoot":  # type: ignore[override]
        return AffineRoot(self.level + other.level,
                          tuple(x + y for x, y in zip(self.eps, other.eps)),
                          tuple(x + y for x, y in zip(self.dlt, other.dlt)))

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(-self.level, tuple(-x for x in self.eps), tuple(-x for x in self.dlt))

    def __sub__(self, other: "AffineRoot") -> "AffineRoot":
        return self + (-other)

    def with_level(self, level: int) -> "AffineRoot":
        return AffineRoot(level, self.eps, self.dlt)

    def pair(self, other: "AffineRoot") -> int:
        """Invariant form: eps's square to 1, delta's to -1, dbar is null."""
        return (sum(x * y for x, y in zip(self.eps, other.eps))
                - sum(x * y for x, y in zip(self.dlt, other.dlt)))

    @property
    def is_odd(self) -> bool:
        return any(self.eps) and any(self.dlt)

    @property
    def is_isotropic(self) -> bool:
        return self.is_odd and self.pair(self) == 0

    def shift_eps(self, k: int) -> "AffineRoot":
        """Apply ``nu^k``: the coefficient of eps_i moves to eps_{i+k mod n}."""
        n = len(self.eps)
        k %= n
        return AffineRoot(self.level, self.eps[n - k:] + self.eps[: n - k], self.dlt)

    def __str__(self) -> str:
        terms: list[tuple[int, str]] = []
        if self.level:
            terms.append((self.level, DBAR))
        terms += [(c, f"ε{i}") for i, c in enumerate(self.eps, 1) if c > 0]
        terms += [(c, f"δ{j}") for j, c in enumerate(self.dlt, 1) if c > 0]
        terms += [(c, f"ε{i}") for i, c in enumerate(self.eps, 1) if c < 0]
        terms += [(c, f"δ{j}") for j, c in enumerate(self.dlt, 1) if c < 0]
        if not terms:
            return "0"
        out = ""
        for t, (c, name) in enumerate(terms):
            sign = "−" if c < 0 else ("+" if t else "")
            mag = "" if abs(c) == 1 else str(abs(c))
            out += sign + mag + name
        return out

    def to_json(self) -> dict:
        return {"level": self.level, "coeffs": list(self.fin)}

    @classmethod
    def from_json(cls, obj: dict, rank: Rank) -> "AffineRoot":
        coeffs = tuple(obj["coeffs"])
        if len(coeffs) != rank.n + rank.m:
            raise InvalidInput(f"root needs {rank.n + rank.m} coefficients, got {len(coeffs)}")
        return cls(int(obj["level"]), coeffs[: rank.n], coeffs[rank.n:])


RootList = tuple[AffineRoot, ...]


def finite_simple_roots(sigma: Shuffle, rank: Rank) -> RootList:
    sigma.validate(rank)
    s = sigma.oneline
    return tuple(AffineRoot.diff(s[t], s[t + 1], rank) for t in range(len(s) - 1))


def total(roots: Sequence[AffineRoot]) -> AffineRoot:
    acc = AffineRoot(0, tuple(0 for _ in roots[0].eps), tuple(0 for _ in roots[0].dlt))
    for r in roots:
        acc = acc + r
    return acc


def extending_root(roots: Sequence[AffineRoot]) -> AffineRoot:
    """``dbar`` minus the sum of the simple roots."""
    s = total(roots)
    return AffineRoot(1 - s.level, tuple(-x for x in s.eps), tuple(-x for x in s.dlt))


def extend(roots: Sequence[AffineRoot]) -> RootList:
    return (extending_root(roots),) + tuple(roots)


def rotate_seq(roots: Sequence[AffineRoot]) -> RootList:
    """Pass to the next rotation: prepend the extending root, drop the last root.

    Only legal when the last root ends in an eps (the shuffle ends with ``n``).
    """
    roots = tuple(roots)
    if not any(c < 0 for c in roots[-1].eps):
        raise DomainError(f"cannot delete the last node {roots[-1]}: it does not end in an eps")
    return (extending_root(roots),) + roots[:-1]


def unrotate_seq(roots: Sequence[AffineRoot]) -> RootList:
    """Inverse of :func:`rotate_seq`; legal when the first root starts with an eps."""
    roots = tuple(roots)
    if not any(c > 0 for c in roots[0].eps):
        raise DomainError(f"cannot delete the first node {roots[0]}: it does not start with an eps")
    return roots[1:] + (extending_root(roots),)


def odd_reflect_seq(roots: Sequence[AffineRoot], idx: int) -> RootList:
    beta = roots[idx]
    if not beta.is_isotropic:
        raise NotIsotropic(f"{beta} is not an isotropic root")
    out = []
    for t, gamma in enumerate(roots):
        if t == idx:
            out.append(-beta)
        elif gamma.pair(beta) != 0:
            out.append(gamma + beta)
        else:
            out.append(gamma)
    return tuple(out)


def odd_reflect_extended(ext: Sequence[AffineRoot], idx: int) -> tuple[RootList, bool]:
    """Reflect an extended list; the flag marks a reflection at the extending node."""
    return odd_reflect_seq(ext, idx), idx == 0


def local_names(roots: Sequence[AffineRoot], k: int) -> RootList:
    return tuple(r.shift_eps(k).with_level(0) for r in roots)


def global_from_local(roots: Sequence[AffineRoot], k: int, levels: Sequence[int]) -> RootList:
    return tuple(r.shift_eps(-k).with_level(lv) for r, lv in zip(roots, levels))


# ---------------------------------------------------------------------------
# walking the Borels


class BorelState(NamedTuple):
    sigma: Shuffle
    k: int


def _neighbours(state: BorelState, roots: RootList, rank: Rank):
    sigma, k = state
    s = sigma.oneline
    for t in range(len(s) - 1):
        if (s[t] > 0) != (s[t + 1] > 0):
            swapped = list(s)
            swapped[t], swapped[t + 1] = swapped[t + 1], swapped[t]
            yield BorelState(Shuffle(tuple(swapped)), k), odd_reflect_seq(roots, t)
    if s[-1] == rank.n:
        yield BorelState(dg.bar_shuffle(sigma, rank), k + 1), rotate_seq(roots)
    if s[0] == 1:
        yield BorelState(dg.underbar_shuffle(sigma, rank), k - 1), unrotate_seq(roots)


def _walk(rank: Rank, lo: int, hi: int):
    start = BorelState(Shuffle.identity(rank), 0)
    table = {start: finite_simple_roots(start.sigma, rank)}
    conflicts = []
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for nxt, roots in _neighbours(state, table[state], rank):
            if not lo <= nxt.k <= hi:
                continue
            if nxt in table:
                if table[nxt] != roots:
                    conflicts.append((state, nxt))
                continue
            table[nxt] = roots
            queue.append(nxt)
    return table, conflicts


@lru_cache(maxsize=None)
def global_table(rank: Rank, lo: int, hi: int) -> dict[BorelState, RootList]:
    """Global simple roots of every ``(sigma, k)`` with ``lo <= k <= hi``."""
    return _walk(rank, min(lo, 0), max(hi, 0))[0]


def walk_conflicts(rank: Rank, lo: int, hi: int) -> list:
    """Pairs of states where two routes through the walk disagree (should be empty)."""
    return _walk(rank, min(lo, 0), max(hi, 0))[1]


def global_seq(sigma: Shuffle, k: int, rank: Rank) -> RootList:
    sigma.validate(rank)
    return global_table(rank, min(k, 0), max(k, 0))[BorelState(sigma, k)]


def simple_index(roots: Sequence[AffineRoot], local_root: AffineRoot, k: int) -> int:
    """Position of the root whose local name is ``local_root``."""
    for t, r in enumerate(local_names(roots, k)):
        if r == local_root:
            return t
    raise NotSimple(f"{local_root} is not a simple root of this Borel")


def diagram_nodes(roots: Sequence[AffineRoot]) -> tuple[str, ...]:
    return tuple("odd" if r.is_odd else "even" for r in roots)


def render_chain(roots: Sequence[AffineRoot]) -> str:
    """Linear Dynkin-Kac diagram: ``⊗`` for odd nodes, ``○`` for even ones."""
    glyphs = " ─ ".join("⊗" if r.is_odd else "○" for r in roots)
    labels = ", ".join(f"{t}:{r}" for t, r in enumerate(roots))
    return glyphs + "\n" + labels


def render_cycle(roots: Sequence[AffineRoot]) -> str:
    """Adjacency list of an extended diagram, linking nodes with non-zero pairing."""
    lines = []
    for s, a in enumerate(roots):
        nbrs = [t for t, b in enumerate(roots) if t != s and a.pair(b) != 0]
        glyph = "⊗" if a.is_odd else "○"
        lines.append(f"{s} {glyph} {a}: " + " ".join(map(str, nbrs)))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# closed forms


def _e(i: int) -> int:
    return i


def _d(j: int) -> int:
    return -j


def distinguished_betas(rank: Rank) -> RootList:
    return finite_simple_roots(Shuffle.identity(rank), rank)


def staircase_shuffle(j: int, rank: Rank) -> Shuffle:
    """Shuffle of the partition with ``j`` full rows, ``(m^j, 0^(n-j))``."""
    return dg.zeta_inv((rank.m,) * j + (0,) * (rank.n - j), rank)


def staircase_form(betas: Sequence[AffineRoot], j: int, rank: Rank) -> RootList:
    """Roots of the Borel with ``j`` full rows, written through the distinguished ``betas``.

    ``betas[0]`` is the first distinguished root; ``betas[n-1]`` is the odd one.
    """
    n, r = rank.n, rank.r
    b = lambda i: betas[i - 1]
    out = [b(i) for i in range(1, n - j)]
    if j < n:
        out.append(total([b(i) for i in range(n - j, n + 1)]))
    out += [b(i) for i in range(n + 1, r + 1)]
    if j > 0:
        out.append(-total([b(i) for i in range(n + 1 - j, r + 1)]))
        out += [b(i) for i in range(n + 1 - j, n)]
    return tuple(out)


def xi(j: int, rank: Rank) -> RootList:
    return tuple(AffineRoot.diff(_e(l), _e(l + 1), rank) for l in range(1, rank.n - j))


def psi(j: int, rank: Rank) -> RootList:
    return tuple(AffineRoot.diff(_e(l), _e(l + 1), rank) for l in range(rank.n + 1 - j, rank.n))


def nabla(rank: Rank) -> RootList:
    return tuple(AffineRoot.diff(_d(l), _d(l + 1), rank) for l in range(1, rank.m))


def rotated_distinguished_form(j: int, rank: Rank) -> RootList:
    """Distinguished roots of rotation ``j`` for ``1 <= j < n`` in global names."""
    if not 1 <= j < rank.n:
        raise DomainError(f"closed form holds for 1 <= j < n, got j={j}")
    n = rank.n
    wrap = AffineRoot.diff(_e(n), _e(1), rank, level=1)
    return psi(j, rank) + (wrap,) + xi(j, rank) + (AffineRoot.diff(_e(n - j), _d(1), rank),) + nabla(rank)


def next_block_form(anti: Sequence[AffineRoot], rank: Rank) -> RootList:
    """Distinguished roots at rotation ``j + n`` from the anti-distinguished ones at ``j``."""
    m = rank.m
    anti = tuple(anti)
    return anti[m:] + (extending_root(anti),) + anti[: m - 1]


def multiple_distinguished_form(k: int, rank: Rank) -> tuple[RootList, AffineRoot]:
    """Distinguished roots at rotation ``k n`` and their extending root."""
    n, m = rank.n, rank.m
    roots = (tuple(AffineRoot.diff(_e(i), _e(i + 1), rank) for i in range(1, n))
             + (AffineRoot.diff(_e(n), _d(1), rank, level=k),) + nabla(rank))
    return roots, AffineRoot.diff(_d(m), _e(1), rank, level=-(k - 1))


def multiple_anti_form(k: int, rank: Rank) -> tuple[RootList, AffineRoot]:
    """Anti-distinguished roots at rotation ``k n`` and their extending root."""
    n, m = rank.n, rank.m
    roots = (nabla(rank) + (AffineRoot.diff(_d(m), _e(1), rank, level=-k),)
             + tuple(AffineRoot.diff(_e(i), _e(i + 1), rank) for i in range(1, n)))
    return roots, AffineRoot.diff(_e(n), _d(1), rank, level=k + 1)


def upsilon(rank: Rank) -> RootList:
    n, m = rank.n, rank.m
    return ((AffineRoot.diff(_e(n), _d(1), rank, level=1),) + nabla(rank)
            + (AffineRoot.diff(_d(m), _e(1), rank),)
            + tuple(AffineRoot.diff(_e(i), _e(i + 1), rank) for i in range(1, n)))


def upsilon_removed_index(i: int, rank: Rank) -> int:
    """Position in Upsilon of the root removed to get the Borel with ``n - i`` full rows at rotation i."""
    n, m = rank.n, rank.m
    if i == 0:
        return 0
    if i == n:
        return m
    if 1 <= i < n:
        return m + (n - i)
    raise DomainError(f"need 0 <= i <= n, got {i}")


def open_cycle(cycle: Sequence[AffineRoot], p: int) -> RootList:
    """Remove entry ``p`` and read the remaining cycle starting just after it."""
    cycle = tuple(cycle)
    return cycle[p + 1:] + cycle[:p]
