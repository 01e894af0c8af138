"""Young diagrams in the n x m rectangle, shuffles and odd reflections.

A partition is stored as a plain tuple ``(l1, ..., ln)`` with ``l1`` the
largest part.  Row ``eps_i`` of the rectangle (counted from the top) holds
``l[n - i]`` boxes, so the largest part sits in the bottom row.

A shuffle is stored in one-line notation as a tuple of non-zero integers:
an unprimed symbol ``i`` is the integer ``i`` and a primed symbol ``j'`` is
the integer ``-j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterator, NamedTuple, Sequence

from .errors import DomainError, InvalidInput, NotACorner, NotSimple, RankError

Partition = tuple[int, ...]

EMPTY_GLYPH = "∅"


@dataclass(frozen=True)
class Rank:
    """The pair (n, m); diagrams live in a rectangle with n rows and m columns."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if not (isinstance(self.n, int) and isinstance(self.m, int)):
            raise RankError(f"rank entries must be integers, got {self.n!r}, {self.m!r}")
        if self.n < 1 or self.m < self.n:
            raise RankError(f"need m >= n >= 1, got (n, m) = ({self.n}, {self.m})")

    @property
    def coprime(self) -> bool:
        return self.m > self.n and gcd(self.m, self.n) == 1

    def require_coprime(self) -> "Rank":
        if not self.coprime:
            raise RankError(
                f"this operation needs m > n with gcd(m, n) = 1, got ({self.n}, {self.m})"
            )
        return self

    @property
    def r(self) -> int:
        """Number of finite simple roots."""
        return self.m + self.n - 1

    @classmethod
    def parse(cls, text: str) -> "Rank":
        try:
            n, m = (int(t) for t in text.replace(" ", "").split(","))
        except ValueError:
            raise RankError(f"cannot parse rank {text!r}; expected 'n,m'") from None
        return cls(n, m)

    def __str__(self) -> str:
        return f"({self.n},{self.m})"


class OddRoot(NamedTuple):
    """The root sign * (eps_i - delta_j); indices are 1-based."""

    sign: int
    i: int
    j: int

    @classmethod
    def pos(cls, i: int, j: int) -> "OddRoot":
        return cls(1, i, j)

    @classmethod
    def neg(cls, i: int, j: int) -> "OddRoot":
        return cls(-1, i, j)

    @property
    def positive(self) -> "OddRoot":
        return OddRoot(1, self.i, self.j)

    def __neg__(self) -> "OddRoot":
        return OddRoot(-self.sign, self.i, self.j)

    def shift(self, k: int, n: int) -> "OddRoot":
        """Apply the k-th power of the cyclic shift eps_i -> eps_{i+1 mod n}."""
        return OddRoot(self.sign, (self.i - 1 + k) % n + 1, self.j)

    def validate(self, rank: Rank) -> "OddRoot":
        if self.sign not in (1, -1) or not (1 <= self.i <= rank.n and 1 <= self.j <= rank.m):
            raise InvalidInput(f"{self!r} is not an odd root for rank {rank}")
        return self

    def __str__(self) -> str:
        if self.sign > 0:
            return f"ε{self.i}−δ{self.j}"
        return f"δ{self.j}−ε{self.i}"

    def to_json(self) -> dict:
        return {"sign": "+" if self.sign > 0 else "-", "i": self.i, "j": self.j}

    @classmethod
    def from_json(cls, obj: dict) -> "OddRoot":
        return cls(1 if obj["sign"] == "+" else -1, int(obj["i"]), int(obj["j"]))


def positive_odd_roots(rank: Rank) -> list[OddRoot]:
    return [OddRoot.pos(i, j) for i in range(1, rank.n + 1) for j in range(1, rank.m + 1)]


# ---------------------------------------------------------------------------
# partitions


def check_partition(lam: Sequence[int], rank: Rank) -> Partition:
    lam = tuple(lam)
    if len(lam) != rank.n:
        raise InvalidInput(f"partition {lam} must have exactly n={rank.n} parts")
    if any(p < 0 for p in lam) or (lam and lam[0] > rank.m):
        raise InvalidInput(f"partition {lam} does not fit in the rectangle {rank}")
    if any(lam[t] < lam[t + 1] for t in range(len(lam) - 1)):
        raise InvalidInput(f"partition {lam} is not weakly decreasing")
    return lam


def parse_partition(text: str, rank: Rank) -> Partition:
    text = text.strip()
    if text in (EMPTY_GLYPH, "", "0", "empty"):
        return (0,) * rank.n
    try:
        parts = [int(t) for t in text.strip("()").split(",")]
    except ValueError:
        raise InvalidInput(f"cannot parse partition {text!r}") from None
    parts += [0] * (rank.n - len(parts))
    return check_partition(parts, rank)


def partitions(rank: Rank) -> Iterator[Partition]:
    """All partitions fitting in the rectangle, ordered by size then reverse-lex."""
    found: list[Partition] = []

    def rec(prefix: list[int], bound: int) -> None:
        if len(prefix) == rank.n:
            found.append(tuple(prefix))
            return
        for part in range(bound, -1, -1):
            prefix.append(part)
            rec(prefix, part)
            prefix.pop()

    rec([], rank.m)
    found.sort(key=lambda p: (sum(p), tuple(-x for x in p)))
    yield from found


def dual(lam: Sequence[int], rank: Rank) -> tuple[int, ...]:
    """Column heights: entry j counts the parts that are >= j."""
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, rank.m + 1))


def reversed_parts(lam: Sequence[int]) -> tuple[int, ...]:
    """Row lengths read from the top row down."""
    return tuple(reversed(lam))


def bold_lambda(rank: Rank) -> Partition:
    return (rank.m,) + (1,) * (rank.n - 1)


def contains(big: Sequence[int], small: Sequence[int]) -> bool:
    return all(b >= s for b, s in zip(big, small))


def _row_len(lam: Sequence[int], i: int, n: int) -> int:
    return lam[n - i]


def is_inner_corner(lam: Sequence[int], i: int, j: int, rank: Rank) -> bool:
    n = rank.n
    return _row_len(lam, i, n) == j and dual(lam, rank)[j - 1] == n + 1 - i


def is_outer_corner(lam: Sequence[int], i: int, j: int, rank: Rank) -> bool:
    n = rank.n
    return _row_len(lam, i, n) == j - 1 and dual(lam, rank)[j - 1] == n - i


def corners(lam: Sequence[int], rank: Rank) -> tuple[frozenset[OddRoot], frozenset[OddRoot]]:
    """Return ``(inner, outer)`` as sets of positive odd roots."""
    lam = check_partition(lam, rank)
    lam_dual = dual(lam, rank)
    n = rank.n
    inner, outer = set(), set()
    for i in range(1, n + 1):
        for j in range(1, rank.m + 1):
            row, col = lam[n - i], lam_dual[j - 1]
            if row == j and col == n + 1 - i:
                inner.add(OddRoot.pos(i, j))
            if row == j - 1 and col == n - i:
                outer.add(OddRoot.pos(i, j))
    return frozenset(inner), frozenset(outer)


def in_domain(lam: Sequence[int], root: OddRoot, rank: Rank) -> bool:
    """True when ``t_root`` is defined at ``lam`` (outer corner for +, inner for -)."""
    if root.sign > 0:
        return is_outer_corner(lam, root.i, root.j, rank)
    return is_inner_corner(lam, root.i, root.j, rank)


def toggle_box(lam: Sequence[int], root: OddRoot, rank: Rank) -> Partition:
    """Add (positive root) or remove (negative root) the box of ``root``."""
    lam = check_partition(lam, rank)
    root.validate(rank)
    if not in_domain(lam, root, rank):
        kind = "outer" if root.sign > 0 else "inner"
        raise NotACorner(f"{root.positive} is not an {kind} corner of {format_partition(lam)}")
    out = list(lam)
    out[rank.n - root.i] += root.sign
    return tuple(out)


def bar(lam: Sequence[int], rank: Rank) -> Partition:
    """Delete the bottom (full) row."""
    lam = check_partition(lam, rank)
    if lam[0] != rank.m:
        raise DomainError(f"bar needs a full bottom row, got {format_partition(lam)}")
    return lam[1:] + (0,)


def underbar(lam: Sequence[int], rank: Rank) -> Partition:
    """Insert a full bottom row; inverse of :func:`bar`."""
    lam = check_partition(lam, rank)
    if lam[-1] != 0:
        raise DomainError(f"underbar needs fewer than n rows, got {format_partition(lam)}")
    return (rank.m,) + lam[:-1]


class DiagramFlags(NamedTuple):
    reduced: bool
    strongly_reduced: bool
    top_full: bool
    contains_bold: bool


def classify(lam: Sequence[int], rank: Rank) -> DiagramFlags:
    lam = check_partition(lam, rank)
    top_full = lam[0] == rank.m
    return DiagramFlags(
        reduced=not top_full,
        strongly_reduced=lam[-1] == 0 and dual(lam, rank)[-1] == 0,
        top_full=top_full,
        contains_bold=contains(lam, bold_lambda(rank)),
    )


def format_partition(lam: Sequence[int]) -> str:
    if not any(lam):
        return EMPTY_GLYPH
    return "(" + ",".join(str(p) for p in lam) + ")"


# ---------------------------------------------------------------------------
# shuffles


def _symbol_str(s: int) -> str:
    return str(s) if s > 0 else f"{-s}'"


def _parse_symbol(tok: str) -> int:
    tok = tok.strip().replace("′", "'")
    if tok.endswith("'"):
        return -int(tok[:-1])
    return int(tok)


@dataclass(frozen=True, order=True)
class Shuffle:
    """A shuffle of ``1..n`` with ``1'..m'`` in one-line notation."""

    oneline: tuple[int, ...]

    def validate(self, rank: Rank) -> "Shuffle":
        unprimed = [s for s in self.oneline if s > 0]
        primed = [-s for s in self.oneline if s < 0]
        if unprimed != list(range(1, rank.n + 1)) or primed != list(range(1, rank.m + 1)):
            raise InvalidInput(f"{self} is not a shuffle for rank {rank}")
        return self

    @classmethod
    def parse(cls, text: str, rank: Rank | None = None) -> "Shuffle":
        body = text.strip().strip("()")
        try:
            sigma = cls(tuple(_parse_symbol(t) for t in body.split(",")))
        except ValueError:
            raise InvalidInput(f"cannot parse shuffle {text!r}") from None
        return sigma.validate(rank) if rank is not None else sigma

    @classmethod
    def from_json(cls, items: Sequence[str]) -> "Shuffle":
        return cls(tuple(_parse_symbol(t) for t in items))

    @classmethod
    def identity(cls, rank: Rank) -> "Shuffle":
        return cls(tuple(range(1, rank.n + 1)) + tuple(-j for j in range(1, rank.m + 1)))

    def to_json(self) -> list[str]:
        return [_symbol_str(s) for s in self.oneline]

    def __str__(self) -> str:
        return "(" + ",".join(_symbol_str(s) for s in self.oneline) + ")"

    def __len__(self) -> int:
        return len(self.oneline)

    def __getitem__(self, k: int) -> int:
        return self.oneline[k]


def shuffles(rank: Rank) -> Iterator[Shuffle]:
    total = rank.n + rank.m
    for down in combinations(range(total), rank.n):
        down_set = set(down)
        out, i, j = [], 1, 1
        for pos in range(total):
            if pos in down_set:
                out.append(i)
                i += 1
            else:
                out.append(-j)
                j += 1
        yield Shuffle(tuple(out))


def zeta(sigma: Shuffle, rank: Rank) -> Partition:
    """Partition below the lattice path (unprimed = Down, primed = Right)."""
    sigma.validate(rank)
    rows, rights = [], 0
    for s in sigma.oneline:
        if s > 0:
            rows.append(rights)
        else:
            rights += 1
    return tuple(reversed(rows))


def zeta_inv(lam: Sequence[int], rank: Rank) -> Shuffle:
    lam = check_partition(lam, rank)
    out, rights, j = [], 0, 1
    for i, length in enumerate(reversed_parts(lam), start=1):
        while rights < length:
            out.append(-j)
            j += 1
            rights += 1
        out.append(i)
    out.extend(-jj for jj in range(j, rank.m + 1))
    return Shuffle(tuple(out))


def simple_position(sigma: Shuffle, root: OddRoot) -> int | None:
    """Index t with (sigma[t], sigma[t+1]) realising ``root`` as a simple root."""
    first, second = (root.i, -root.j) if root.sign > 0 else (-root.j, root.i)
    seq = sigma.oneline
    for t in range(len(seq) - 1):
        if seq[t] == first and seq[t + 1] == second:
            return t
    return None


def odd_reflect_shuffle(sigma: Shuffle, root: OddRoot) -> Shuffle:
    t = simple_position(sigma, root)
    if t is None:
        raise NotSimple(f"{root} is not a simple root of the Borel for {sigma}")
    seq = list(sigma.oneline)
    seq[t], seq[t + 1] = seq[t + 1], seq[t]
    return Shuffle(tuple(seq))


def _shift_symbol(s: int, k: int, n: int) -> int:
    return (s - 1 + k) % n + 1 if s > 0 else s


def bar_shuffle(sigma: Shuffle, rank: Rank) -> Shuffle:
    """Shuffle of the diagram with its bottom row deleted."""
    sigma.validate(rank)
    if sigma.oneline[-1] != rank.n:
        raise DomainError(f"bar_shuffle needs last entry {rank.n}, got {sigma}")
    body = tuple(_shift_symbol(s, 1, rank.n) for s in sigma.oneline[:-1])
    return Shuffle((1,) + body)


def underbar_shuffle(sigma: Shuffle, rank: Rank) -> Shuffle:
    """Inverse of :func:`bar_shuffle`."""
    sigma.validate(rank)
    if sigma.oneline[0] != 1:
        raise DomainError(f"underbar_shuffle needs first entry 1, got {sigma}")
    body = tuple(_shift_symbol(s, -1, rank.n) for s in sigma.oneline[1:])
    return Shuffle(body + (rank.n,))


def delta_epsilon_render(sigma: Shuffle, rank: Rank) -> str:
    """Grid of the odd roots of the Borel for ``sigma`` with the separating path.

    Each cell shows ``δε`` (the root delta_j - eps_i lies in the Borel) or
    ``εδ`` (eps_i - delta_j does).  The path is drawn with ``|`` inside each row
    and ``_`` under the cells where it turns right; simple roots carry ``*``.
    """
    lam = zeta(sigma, rank)
    rows = reversed_parts(lam)
    simple = set()
    seq = sigma.oneline
    for t in range(len(seq) - 1):
        a, b = seq[t], seq[t + 1]
        if a > 0 > b:
            simple.add((a, -b))
        elif b > 0 > a:
            simple.add((b, -a))
    width = 4
    lines = ["    " + "".join(f"δ{j}".center(width) for j in range(1, rank.m + 1))]
    for i in range(1, rank.n + 1):
        cells = []
        for j in range(1, rank.m + 1):
            sym = "δε" if j <= rows[i - 1] else "εδ"
            mark = "*" if (i, j) in simple else " "
            cells.append(sym + mark)
        cut = rows[i - 1]
        body = ""
        for j, cell in enumerate(cells):
            body += ("|" if j == cut else " ") + cell
        body += "|" if cut == rank.m else " "
        lines.append(f"ε{i}  " + body)
        below = rows[i] if i < rank.n else rank.m
        under = "".join(
            (" " + "_" * (width - 1)) if rows[i - 1] < j <= below else " " * width
            for j in range(1, rank.m + 1)
        )
        if under.strip():
            lines.append("    " + under)
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# size generating function


def size_counts(rank: Rank) -> list[int]:
    """Number of partitions in the rectangle with each size 0..mn."""
    counts = [0] * (rank.m * rank.n + 1)
    for lam in partitions(rank):
        counts[sum(lam)] += 1
    return counts


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for s, a in enumerate(p):
        if a:
            for t, b in enumerate(q):
                out[s + t] += a * b
    return out


def _poly_div_exact(p: list[int], q: list[int]) -> list[int]:
    p = list(p)
    out = [0] * (len(p) - len(q) + 1)
    for s in range(len(out) - 1, -1, -1):
        c, rem = divmod(p[s + len(q) - 1], q[-1])
        if rem:
            raise ArithmeticError("polynomial division is not exact")
        out[s] = c
        for t, b in enumerate(q):
            p[s + t] -= c * b
    if any(p):
        raise ArithmeticError("polynomial division is not exact")
    return out


def gaussian_binomial(total: int, k: int) -> list[int]:
    """Coefficients of the q-binomial [total choose k] from the product formula."""
    num, den = [1], [1]
    for t in range(k):
        num = _poly_mul(num, [-1] + [0] * (total - t - 1) + [1])
        den = _poly_mul(den, [-1] + [0] * t + [1])
    return _poly_div_exact(num, den)
