"""Labeled Dyck paths and the combinatorial h-expansion of the diagonal
coinvariant series.

A labeled Dyck path on an n-by-n grid is encoded as a word of north and
east steps plus a bijective labeling of the north steps by 1..n that
increases up every column.  The h-coefficient of the (q^i t^j)-graded
component counts labeled paths whose reading word is a shuffle of the
blocks of a composition, with diagonal-inversion count i and area j.

Two enumeration routes are provided: a brute-force walk over explicit
paths and labelings (the reference, used as an oracle for small n) and a
pruned search over (area word, block word) pairs that scales to the sizes
the stabilization scans need.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .bases import CapExceeded
from .partitions import Composition, Partition, pad, partitions_of, unpad
from .qt import from_int_counts
from .symfunc import SymFunc

SHUFFLE_CAP = 8


class LabeledDyckPath:
    """A Dyck path (word over N/E) with column-increasing labels."""

    __slots__ = ("steps", "labels", "_area_word")

    def __init__(self, steps: str, labels: tuple[int, ...]):
        steps = steps.upper()
        n = len(labels)
        if len(steps) != 2 * n or steps.count("N") != n or steps.count("E") != n:
            raise ValueError("steps must contain n north and n east moves")
        height = 0
        xs = []
        x = 0
        for s in steps:
            if s == "N":
                xs.append(x)
                height += 1
            elif s == "E":
                x += 1
                if x > height:
                    raise ValueError("path dips below the diagonal")
            else:
                raise ValueError(f"bad step {s!r}")
        if sorted(labels) != list(range(1, n + 1)):
            raise ValueError("labels must be a bijection with 1..n")
        area_word = tuple(r - xs[r] for r in range(n))
        for r in range(n - 1):
            if area_word[r + 1] == area_word[r] + 1 and labels[r + 1] <= labels[r]:
                raise ValueError("labels must increase up each column run")
        self.steps = steps
        self.labels = tuple(labels)
        self._area_word = area_word

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def area_word(self) -> tuple[int, ...]:
        """Per-row count of full cells between the path and the diagonal."""
        return self._area_word

    def area(self) -> int:
        return sum(self._area_word)

    def reading_word(self) -> tuple[int, ...]:
        """Labels scanned southwest down diagonals, topmost diagonal first."""
        order = sorted(range(self.n), key=lambda r: (-self._area_word[r], -r))
        return tuple(self.labels[r] for r in order)

    def dinv_pairs(self) -> list[tuple[int, int]]:
        """Label pairs forming diagonal inversions, sorted.

        Rows r < s: same diagonal with the larger label further north, or
        the southern row one diagonal higher with the larger label.
        """
        a, l = self._area_word, self.labels
        pairs = []
        for r in range(self.n):
            for s in range(r + 1, self.n):
                if a[r] == a[s] and l[r] < l[s]:
                    pairs.append((l[r], l[s]))
                elif a[r] == a[s] + 1 and l[r] > l[s]:
                    pairs.append((l[s], l[r]))
        return sorted(pairs)

    def dinv(self) -> int:
        return len(self.dinv_pairs())

    def lift(self) -> "LabeledDyckPath":
        """Prepend a north-east pair labeled n+1 at the origin."""
        return LabeledDyckPath("NE" + self.steps, (self.n + 1, *self.labels))

    def __repr__(self) -> str:
        return f"LabeledDyckPath({self.steps!r}, {self.labels!r})"


def is_shuffle(word: tuple[int, ...], alpha: Composition) -> bool:
    """True iff each block of consecutive values 1..a1, a1+1..a1+a2, ...
    appears in increasing relative order in the word."""
    if sorted(word) != list(range(1, sum(alpha) + 1)):
        raise ValueError("word must be a permutation of 1..n")
    pos = {v: i for i, v in enumerate(word)}
    start = 1
    for block in alpha:
        for v in range(start, start + block - 1):
            if pos[v] > pos[v + 1]:
                return False
        start += block
    return True


# ---------------------------------------------------------------------
# Brute-force enumeration (reference route)
# ---------------------------------------------------------------------


def _dyck_words(n: int):
    def rec(ns: int, es: int, acc: str):
        if ns == es == n:
            yield acc
            return
        if ns < n:
            yield from rec(ns + 1, es, acc + "N")
        if es < ns:
            yield from rec(ns, es + 1, acc + "E")

    yield from rec(0, 0, "")


def _run_lengths(steps: str) -> list[int]:
    runs = []
    cur = 0
    for s in steps:
        if s == "N":
            cur += 1
        elif cur:
            runs.append(cur)
            cur = 0
    if cur:
        runs.append(cur)
    return runs


def enumerate_labeled_paths(n: int):
    """Yield every labeled Dyck path of size n (reference enumeration)."""
    for steps in _dyck_words(n):
        runs = _run_lengths(steps)

        def assign(i: int, remaining: frozenset, acc: tuple[int, ...]):
            if i == len(runs):
                yield LabeledDyckPath(steps, acc)
                return
            for combo in itertools.combinations(sorted(remaining), runs[i]):
                yield from assign(i + 1, remaining - set(combo), acc + combo)

        yield from assign(0, frozenset(range(1, n + 1)), ())


def shuffle_distribution_brute(n: int, alpha: Composition) -> dict[tuple[int, int], int]:
    """(dinv, area) distribution over shuffle paths by brute force."""
    dist: dict[tuple[int, int], int] = {}
    for path in enumerate_labeled_paths(n):
        if is_shuffle(path.reading_word(), alpha):
            key = (path.dinv(), path.area())
            dist[key] = dist.get(key, 0) + 1
    return dist


# ---------------------------------------------------------------------
# Fast counting over (area word, block word) pairs
# ---------------------------------------------------------------------


def _count_block_words(
    n: int,
    alpha: tuple[int, ...],
    dinv_target: int | None,
    area_target: int | None,
    dist: dict[tuple[int, int], int] | None,
) -> int:
    """DFS over rows choosing the diagonal and the label block per row.

    Within a block the actual labels are forced by the reading order, so
    counting (area word, block word) pairs counts shuffle paths exactly.
    A column-consecutive row must take a strictly larger block.
    """
    blocks = len(alpha)
    remaining = list(alpha)
    # cnt[d][b]: rows so far on diagonal d carrying block b
    cnt: list[list[int]] = [[0] * blocks for _ in range(n + 2)]
    total = 0

    def max_future_area(row: int, a: int) -> int:
        k = n - row
        return k * a + k * (k + 1) // 2

    def rec(row: int, prev_a: int, prev_b: int, dinv: int, area: int):
        nonlocal total
        if row == n:
            if (dinv_target is None or dinv == dinv_target) and (
                area_target is None or area == area_target
            ):
                if dist is not None:
                    dist[(dinv, area)] = dist.get((dinv, area), 0) + 1
                total += 1
            return
        hi_a = prev_a + 1 if row else 0
        for a in range(hi_a, -1, -1):
            new_area = area + a
            if area_target is not None:
                if new_area > area_target:
                    continue
                if new_area + max_future_area(row + 1, a) < area_target:
                    continue
            lo_b = prev_b + 1 if (row and a == prev_a + 1) else 0
            row_cnt, up_cnt = cnt[a], cnt[a + 1]
            for b in range(lo_b, blocks):
                if not remaining[b]:
                    continue
                inc = sum(row_cnt[x] for x in range(b)) + sum(
                    up_cnt[x] for x in range(b + 1, blocks)
                )
                new_dinv = dinv + inc
                if dinv_target is not None and new_dinv > dinv_target:
                    continue
                remaining[b] -= 1
                cnt[a][b] += 1
                rec(row + 1, a, b, new_dinv, new_area)
                cnt[a][b] -= 1
                remaining[b] += 1

    rec(0, 0, -1, 0, 0)
    return total


def shuffle_h_coefficient(
    n: int,
    alpha: Composition,
    dinv: int,
    area: int,
    cap: int | None = None,
) -> int:
    """Number of shuffle paths with the given statistics: the coefficient
    of the homogeneous element indexed by alpha in the (q^dinv, t^area)
    component of the diagonal coinvariant series."""
    alpha = Composition(alpha)
    if alpha.size != n:
        raise ValueError(f"composition {tuple(alpha)} does not sum to {n}")
    limit = SHUFFLE_CAP if cap is None else cap
    if n > limit:
        raise CapExceeded(f"size {n} exceeds cap {limit}")
    return _count_block_words(n, tuple(alpha), dinv, area, None)


def shuffle_distribution(n: int, alpha: Composition, cap: int | None = None) -> dict[tuple[int, int], int]:
    """Full (dinv, area) distribution over shuffle paths for alpha."""
    alpha = Composition(alpha)
    if alpha.size != n:
        raise ValueError(f"composition {tuple(alpha)} does not sum to {n}")
    limit = SHUFFLE_CAP if cap is None else cap
    if n > limit:
        raise CapExceeded(f"size {n} exceeds cap {limit}")
    dist: dict[tuple[int, int], int] = {}
    _count_block_words(n, tuple(alpha), None, None, dist)
    return dist


def component_alpha(mu: Partition, n: int) -> Composition | None:
    """The scan convention for padded monomial coefficients: the parts of
    mu followed by the long part n - |mu|; None when the pad is undefined."""
    if pad(mu, n) is None:
        return None
    if mu.size == n:
        return Composition(mu)
    return Composition((*mu, n - mu.size))


def dr_m_coefficient(n: int, mu: Partition, i: int, j: int, cap: int | None = None) -> int:
    """Monomial coefficient at the padded element indexed by mu of the
    (q^i t^j) component of the diagonal coinvariant series."""
    alpha = component_alpha(mu, n)
    if alpha is None:
        return 0
    return shuffle_h_coefficient(n, alpha, i, j, cap=cap)


def dr_component(n: int, i: int, j: int, cap: int | None = None) -> SymFunc:
    """Full monomial expansion of the (q^i t^j) component at degree n."""
    coeffs = {}
    for rho in partitions_of(n):
        mu, _ = unpad(rho)
        c = dr_m_coefficient(n, mu, i, j, cap=cap)
        if c:
            coeffs[rho] = from_int_counts({(0, 0): c})
    return SymFunc(n, "m", coeffs)
