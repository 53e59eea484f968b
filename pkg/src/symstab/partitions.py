"""Integer partitions, compositions, and Young-diagram cell geometry.

Partitions are weakly decreasing tuples of positive integers and serve as
the universal index type of the whole library.  Diagrams use the French
convention: row 1 is the bottom (longest) row, and cell (row, col) lies in
the diagram iff 1 <= row <= len(parts) and 1 <= col <= parts[row - 1].

The text format is bracketed comma-separated parts, e.g. ``[3,2,1]``; the
empty partition is ``[]``.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        t = tuple(int(p) for p in parts)
        for p in t:
            if p <= 0:
                raise ValueError(f"partition parts must be positive, got {t}")
        for a, b in zip(t, t[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing, got {t}")
        return super().__new__(cls, t)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > c) for c in range(self[0]))

    def contains_cell(self, cell: "Cell") -> bool:
        return 1 <= cell.row <= len(self) and 1 <= cell.col <= self[cell.row - 1]

    def cells(self) -> list["Cell"]:
        """All cells in reading order: top row first, left to right."""
        out = []
        for r in range(len(self), 0, -1):
            for c in range(1, self[r - 1] + 1):
                out.append(Cell(r, c))
        return out

    def text(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @classmethod
    def parse(cls, s: str) -> "Partition":
        return cls(_parse_bracketed(s, "partition"))


class Composition(tuple):
    """A finite sequence of positive integers; order is significant."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Composition":
        t = tuple(int(p) for p in parts)
        for p in t:
            if p <= 0:
                raise ValueError(f"composition parts must be positive, got {t}")
        return super().__new__(cls, t)

    @property
    def size(self) -> int:
        return sum(self)

    def sorted_partition(self) -> Partition:
        return Partition(sorted(self, reverse=True))

    def text(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"

    def __repr__(self) -> str:
        return f"Composition({tuple(self)!r})"

    @classmethod
    def parse(cls, s: str) -> "Composition":
        return cls(_parse_bracketed(s, "composition"))


def _parse_bracketed(s: str, what: str) -> tuple[int, ...]:
    s = s.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"{what} literal must look like [3,2,1], got {s!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    try:
        return tuple(int(tok.strip()) for tok in body.split(","))
    except ValueError as exc:
        raise ValueError(f"bad {what} literal {s!r}") from exc


class Cell(NamedTuple):
    """1-based (row, col) with the bottom row being row 1."""

    row: int
    col: int


def _require_cell(lam: Partition, cell: Cell) -> None:
    if not lam.contains_cell(cell):
        raise ValueError(f"cell {cell} not in diagram of {tuple(lam)}")


def coarm(lam: Partition, cell: Cell) -> int:
    """Number of cells strictly left of the cell in its row."""
    _require_cell(lam, cell)
    return cell.col - 1


def coleg(lam: Partition, cell: Cell) -> int:
    """Number of cells strictly below the cell in its column."""
    _require_cell(lam, cell)
    return cell.row - 1


def arm(lam: Partition, cell: Cell) -> int:
    """Number of cells strictly right of the cell in its row."""
    _require_cell(lam, cell)
    return lam[cell.row - 1] - cell.col


def leg(lam: Partition, cell: Cell) -> int:
    """Number of cells strictly above the cell in its column."""
    _require_cell(lam, cell)
    return sum(1 for r in range(cell.row + 1, len(lam) + 1) if lam[r - 1] >= cell.col)


def pad(lam: Partition, n: int) -> Partition | None:
    """Prepend a long first part so the result is a partition of n.

    Returns (n - |lam|, lam_1, ...) when n >= |lam| + lam_1, else None.
    Absence is the conventional value, not an error: coefficients indexed
    by an unpadded shape are treated as zero throughout the library.
    """
    first = lam[0] if lam else 0
    if n < lam.size + first:
        return None
    head = n - lam.size
    if head == 0:
        return Partition()
    return Partition((head, *lam))


def unpad(nu: Partition) -> tuple[Partition, int]:
    """Inverse of pad: strip the first part, return (core, total size)."""
    if not nu:
        return Partition(), 0
    return Partition(nu[1:]), nu.size


def centralizer_order(lam: Partition) -> int:
    """Order of the centralizer of a permutation with this cycle type.

    Equals prod(parts) * prod_j (count of parts equal to j)!.
    """
    out = 1
    for p in lam:
        out *= p
    for c in _part_counts(lam).values():
        out *= math.factorial(c)
    return out


def rearrangement_count(lam: Partition) -> int:
    """Number of distinct orderings of the parts: len! / prod(count_j!)."""
    out = math.factorial(len(lam))
    for c in _part_counts(lam).values():
        out //= math.factorial(c)
    return out


def _part_counts(lam: Iterable[int]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
    return counts


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.

    The order is fixed so matrix representations of change-of-basis maps
    are reproducible byte for byte.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(Partition(p) for p in _gen_partitions(n, n))


def _gen_partitions(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _gen_partitions(n - first, first):
            yield (first, *rest)


def partitions_up_to_size(a: int) -> tuple[Partition, ...]:
    """All partitions of size <= a, ordered by size then reverse-lex."""
    out: list[Partition] = []
    for n in range(a + 1):
        out.extend(partitions_of(n))
    return tuple(out)


@lru_cache(maxsize=None)
def partition_index(n: int) -> dict[Partition, int]:
    """Position of each partition of n in the canonical order."""
    return {lam: i for i, lam in enumerate(partitions_of(n))}


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """True iff lam <= mu in dominance order.  Requires |lam| == |mu|."""
    if lam.size != mu.size:
        raise ValueError("dominance order compares partitions of equal size")
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_l > acc_m:
            return False
    return True
