"""Change-of-basis coefficients between the six classical bases.

Every basis has a direct combinatorial expansion into the monomial basis:

    s  -> m   Kostka numbers (semistandard tableau counts)
    h  -> m   contingency matrices with natural entries
    e  -> m   contingency matrices with 0/1 entries
    p  -> m   ordered brick counts
    p/z -> m  ordered brick counts scaled by 1/z

All other transition matrices are assembled by exact matrix inversion and
composition through m.  The signed special-rim-hook enumeration for inverse
Kostka numbers is kept as a secondary backend and cross-checked against the
matrix inverse.

Matrices are dense, indexed by `partitions_of(degree)` in canonical order,
with exact rational entries.  The cache is an idempotent map: concurrent
builders may race but always store equal values.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

from .partitions import (
    Partition,
    centralizer_order,
    dominance_leq,
    partition_index,
    partitions_of,
    rearrangement_count,
)
from .qt import QtPolynomial

BASIS_TAGS = ("m", "e", "h", "p", "p/z", "s")

_TAG_ALIASES = {"p_over_z": "p/z", "pz": "p/z", "p/z": "p/z"}

DEFAULT_DEGREE_CAP = 12


class CapExceeded(Exception):
    """A requested degree exceeds the configured cap."""


class InvariantViolation(Exception):
    """An internal consistency check failed; this is a library defect."""


def normalize_basis_tag(tag: str) -> str:
    t = tag.strip().lower()
    t = _TAG_ALIASES.get(t, t)
    if t not in BASIS_TAGS:
        raise ValueError(f"unknown basis tag {tag!r}; expected one of {BASIS_TAGS}")
    return t


def _require_same_size(lam: Partition, mu: Partition) -> None:
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{tuple(lam)}| != |{tuple(mu)}|")


# ---------------------------------------------------------------------
# Kostka numbers
# ---------------------------------------------------------------------


def _horizontal_strips_inside(shape: tuple[int, ...], size: int):
    """Yield partitions nu <= shape with shape/nu a horizontal strip of
    the given size (nu_i in [shape_{i+1}, shape_i])."""

    def rec(i: int, prev: int, remaining: int, acc: tuple[int, ...]):
        if i == len(shape):
            if remaining == 0:
                yield acc
            return
        lo = max(shape[i + 1] if i + 1 < len(shape) else 0, shape[i] - remaining)
        hi = min(shape[i], prev)
        for v in range(hi, lo - 1, -1):
            yield from rec(i + 1, v, remaining - (shape[i] - v), acc + ((v,) if v else ()))

    yield from rec(0, shape[0] if shape else 0, size, ())


@lru_cache(maxsize=None)
def _ssyt_count(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not shape else 0
    if sum(shape) != sum(content):
        return 0
    total = 0
    for nu in _horizontal_strips_inside(shape, content[-1]):
        total += _ssyt_count(nu, content[:-1])
    return total


def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of the first shape with the second
    content.  Zero unless the shape dominates the content."""
    _require_same_size(lam, mu)
    return _ssyt_count(tuple(lam), tuple(mu))


def ssyt_enumerate(shape: Partition, content: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
    """Brute-force SSYT enumeration (rows weakly increase left to right,
    columns strictly increase bottom to top).  Oracle for small inputs."""
    if sum(shape) != sum(content):
        return []
    rows = [[0] * shape[r] for r in range(len(shape))]
    remaining = list(content)
    out = []

    def place(pos: int):
        if pos == sum(shape):
            out.append(tuple(tuple(r) for r in rows))
            return
        # cells filled row 1 upward, left to right
        r, c, acc = 0, pos, 0
        for i, width in enumerate(shape):
            if pos - acc < width:
                r, c = i, pos - acc
                break
            acc += width
        for v in range(1, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            if c > 0 and rows[r][c - 1] > v:
                continue
            if r > 0 and shape[r - 1] > c and rows[r - 1][c] >= v:
                continue
            rows[r][c] = v
            remaining[v - 1] -= 1
            place(pos + 1)
            remaining[v - 1] += 1
            rows[r][c] = 0

    place(0)
    return out


# ---------------------------------------------------------------------
# Inverse Kostka numbers via special rim hook tableaux
# ---------------------------------------------------------------------


def _rim_cells(shape: tuple[int, ...]) -> list[tuple[int, int]]:
    """Border cells ordered from the southeast end to the northwest end.

    A cell (row, col), 1-based French, is on the rim iff (row+1, col+1)
    is outside the shape.  Sorting by col - row descending walks the rim.
    """
    cells = []
    for r, width in enumerate(shape, start=1):
        for c in range(1, width + 1):
            above_right = r < len(shape) and shape[r] >= c + 1
            if not above_right:
                cells.append((r, c))
    cells.sort(key=lambda rc: rc[1] - rc[0], reverse=True)
    return cells


def _remove_cells(shape: tuple[int, ...], cells: frozenset[tuple[int, int]]) -> tuple[int, ...] | None:
    """Remove a cell set; None unless each row loses a right suffix and the
    result is a partition."""
    new = list(shape)
    for r in range(1, len(shape) + 1):
        removed = sorted(c for (rr, c) in cells if rr == r)
        if removed:
            want = list(range(shape[r - 1] - len(removed) + 1, shape[r - 1] + 1))
            if removed != want:
                return None
            new[r - 1] -= len(removed)
    while new and new[-1] == 0:
        new.pop()
    for a, b in zip(new, new[1:]):
        if a < b:
            return None
    return tuple(new)


def _hook_south_steps(cells: frozenset[tuple[int, int]]) -> int:
    return len({r for (r, _) in cells}) - 1


def special_rim_hook_tableaux(shape: Partition, content: Partition) -> list[tuple[frozenset, int]]:
    """All decompositions of the shape into special rim hooks whose size
    multiset equals the content.  A rim hook is special when it contains a
    first-column cell.  Returns (decomposition, sign) pairs, where the
    decomposition is a frozenset of cell-frozensets and the sign is -1 to
    the total number of south steps.
    """
    _require_same_size(shape, content)
    found: dict[frozenset, int] = {}

    def rec(cur: tuple[int, ...], remaining: tuple[int, ...], chosen: frozenset):
        if not remaining:
            if not cur:
                sign = (-1) ** sum(_hook_south_steps(h) for h in chosen)
                found[chosen] = sign
            return
        rim = _rim_cells(cur)
        for s in set(remaining):
            rest = list(remaining)
            rest.remove(s)
            rest_t = tuple(rest)
            for start in range(len(rim) - s + 1):
                window = frozenset(rim[start : start + s])
                if len(window) != s:
                    continue
                if not any(c == 1 for (_, c) in window):
                    continue
                reduced = _remove_cells(cur, window)
                if reduced is None:
                    continue
                rec(reduced, rest_t, chosen | {window})

    rec(tuple(shape), tuple(content), frozenset())
    return list(found.items())


def inverse_kostka_srht(mu: Partition, lam: Partition) -> int:
    """Signed special-rim-hook count: the coefficient of the Schur element
    indexed by the second argument in the monomial element indexed by the
    first.  Secondary backend, kept for cross-checks."""
    _require_same_size(mu, lam)
    return sum(sign for _, sign in special_rim_hook_tableaux(lam, mu))


def inverse_kostka(mu: Partition, lam: Partition) -> int:
    """Entry of the exact inverse of the degree-n Kostka matrix (primary
    backend; the signed hook enumeration must agree and is tested)."""
    _require_same_size(mu, lam)
    n = mu.size
    idx = partition_index(n)
    value = _from_m_matrix("s", n)[idx[mu]][idx[lam]]
    if value.denominator != 1:
        raise InvariantViolation("inverse Kostka entry is not an integer")
    return int(value)


# ---------------------------------------------------------------------
# Murnaghan-Nakayama characters (beta-set recursion)
# ---------------------------------------------------------------------


def _beta_set(lam: tuple[int, ...], length: int) -> tuple[int, ...]:
    return tuple(lam[i] + (length - 1 - i) if i < len(lam) else (length - 1 - i) for i in range(length))


def _partition_from_beta(beta: tuple[int, ...]) -> tuple[int, ...]:
    b = sorted(beta, reverse=True)
    parts = [v - (len(b) - 1 - i) for i, v in enumerate(b)]
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    k = mu[0]
    rest = mu[1:]
    length = max(len(lam), 1)
    beta = set(_beta_set(lam, length))
    total = 0
    for b in list(beta):
        if b - k >= 0 and (b - k) not in beta:
            height = sum(1 for x in beta if b - k < x < b)
            new_beta = tuple(sorted(beta - {b} | {b - k}))
            total += (-1) ** height * _character(_partition_from_beta(new_beta), rest)
    return total


def character(lam: Partition, mu: Partition) -> int:
    """Irreducible symmetric-group character value at the given cycle type,
    by signed rim-hook removal (largest cycle first)."""
    _require_same_size(lam, mu)
    return _character(tuple(lam), tuple(sorted(mu, reverse=True)))


def character_table(n: int) -> list[list[int]]:
    """Rows indexed by the shape, columns by the cycle type, both in
    canonical partition order."""
    parts = partitions_of(n)
    return [[character(lam, mu) for mu in parts] for lam in parts]


# ---------------------------------------------------------------------
# Brick tilings
# ---------------------------------------------------------------------


def _counts_key(counts: dict[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((v, c) for v, c in counts.items() if c))


def _row_sequences(target: int, counts: dict[int, int]):
    """Ordered brick sequences drawn from the multiset, summing to target."""
    seq: list[int] = []

    def rec(resting: int):
        if resting == 0:
            yield tuple(seq)
            return
        for v in sorted(counts):
            if counts[v] and v <= resting:
                counts[v] -= 1
                seq.append(v)
                yield from rec(resting - v)
                seq.pop()
                counts[v] += 1

    yield from rec(target)


def _brick_stats(mu: Partition, lam: Partition) -> tuple[int, int]:
    """(number of tilings, total weight) of the rows of the second argument
    by bricks drawn from the parts of the first."""
    _require_same_size(mu, lam)
    counts0 = {}
    for p in mu:
        counts0[p] = counts0.get(p, 0) + 1

    memo: dict[tuple, tuple[int, int]] = {}

    def rec(row: int, counts: dict[int, int]) -> tuple[int, int]:
        if row == len(lam):
            return (1, 1) if not any(counts.values()) else (0, 0)
        key = (row, _counts_key(counts))
        if key in memo:
            return memo[key]
        cnt = wsum = 0
        # materialize first: the generator backtracks through the shared
        # counts dict while it runs
        for seq in list(_row_sequences(lam[row], counts)):
            for v in seq:
                counts[v] -= 1
            c2, w2 = rec(row + 1, counts)
            cnt += c2
            wsum += seq[-1] * w2
            for v in seq:
                counts[v] += 1
        memo[key] = (cnt, wsum)
        return cnt, wsum

    return rec(0, counts0)


def brick_count(mu: Partition, lam: Partition) -> int:
    """Number of tilings of the rows of lam by ordered sequences of bricks
    whose multiset union is mu."""
    return _brick_stats(mu, lam)[0]


def brick_weight(mu: Partition, lam: Partition) -> int:
    """Sum over tilings of the product, over rows, of the rightmost brick
    length."""
    return _brick_stats(mu, lam)[1]


def brick_tiling_weight(rows: list[list[int]]) -> int:
    """Weight of one explicit tiling given as brick-length sequences per row."""
    w = 1
    for row in rows:
        if not row:
            raise ValueError("every row must carry at least one brick")
        w *= row[-1]
    return w


# ---------------------------------------------------------------------
# Ordered brick counts
# ---------------------------------------------------------------------


def _sub_multisets(values: tuple[int, ...], counts: tuple[int, ...], target: int):
    """Yield (take-vector, multiplicity) with sum(take*value) = target, where
    multiplicity counts the index-subsets realizing the take-vector."""

    def rec(i: int, resting: int, take: tuple[int, ...], ways: int):
        if i == len(values):
            if resting == 0:
                yield take, ways
            return
        v = values[i]
        for k in range(0, min(counts[i], resting // v if v else 0) + 1):
            yield from rec(i + 1, resting - k * v, take + (k,), ways * math.comb(counts[i], k))

    yield from rec(0, target, (), 1)


def ordered_brick_count(mu: Partition, lam: Partition) -> int:
    """Number of maps from the index-distinguished parts of mu onto the
    index-distinguished parts of lam such that the preimage of each part of
    lam sums to that part."""
    _require_same_size(mu, lam)
    values = tuple(sorted(set(mu)))

    @lru_cache(maxsize=None)
    def rec(i: int, counts: tuple[int, ...]) -> int:
        if i == len(lam):
            return 1 if not any(counts) else 0
        total = 0
        for take, ways in _sub_multisets(values, counts, lam[i]):
            total += ways * rec(i + 1, tuple(c - t for c, t in zip(counts, take)))
        return total

    counts0 = tuple(sum(1 for p in mu if p == v) for v in values)
    return rec(0, counts0)


# ---------------------------------------------------------------------
# Contingency matrices
# ---------------------------------------------------------------------


def contingency_count(lam: Partition, mu: Partition, boolean_entries: bool) -> int:
    """Number of len(lam) x len(mu) matrices with row sums lam and column
    sums mu; entries are naturals, or 0/1 when boolean_entries is set."""
    _require_same_size(lam, mu)
    if not lam:
        return 1

    memo: dict[tuple, int] = {}

    def fill_column(groups: list[tuple[int, int]], target: int):
        """Distribute a column sum over row groups (remaining, count).
        Yields (ways, new group multiset)."""

        def rec(i: int, resting: int, acc: list[tuple[int, int]], ways: int):
            if i == len(groups):
                if resting == 0:
                    yield ways, acc
                return
            r, c = groups[i]
            cap = min(r, 1) if boolean_entries else r
            # entry multisets for this group: k_e rows get entry e
            def entries(slot: int, left: int, remaining_rows: int, acc2: list[tuple[int, int]], w2: int):
                if slot > cap:
                    if remaining_rows == 0:
                        yield from rec(i + 1, left, acc + acc2, ways * w2)
                    return
                for k in range(0, remaining_rows + 1):
                    if slot * k > left:
                        break
                    yield from entries(
                        slot + 1,
                        left - slot * k,
                        remaining_rows - k,
                        acc2 + ([(r - slot, k)] if k else []),
                        w2 * math.comb(remaining_rows, k),
                    )

            yield from entries(0, resting, c, [], 1)

        yield from rec(0, target, [], 1)

    def rec_cols(col: int, groups: tuple[tuple[int, int], ...]) -> int:
        if col == len(mu):
            return 1 if all(r == 0 for r, _ in groups) else 0
        key = (col, groups)
        if key in memo:
            return memo[key]
        total = 0
        for ways, new_groups in fill_column(list(groups), mu[col]):
            merged: dict[int, int] = {}
            for r, c in new_groups:
                merged[r] = merged.get(r, 0) + c
            total += ways * rec_cols(col + 1, tuple(sorted(merged.items())))
        memo[key] = total
        return total

    groups0: dict[int, int] = {}
    for r in lam:
        groups0[r] = groups0.get(r, 0) + 1
    return rec_cols(0, tuple(sorted(groups0.items())))


# ---------------------------------------------------------------------
# Stable coefficients
# ---------------------------------------------------------------------


def _pieri_strips_above(lam: Partition, size: int):
    """Partitions nu >= lam with nu/lam a horizontal strip of given size."""
    rows = len(lam) + 1

    def rec(i: int, resting: int, acc: tuple[int, ...]):
        if i == rows:
            if resting == 0:
                yield Partition(p for p in acc if p)
            return
        base = lam[i] if i < len(lam) else 0
        hi = min(lam[i - 1], base + resting) if i > 0 else base + resting
        lo = base
        for v in range(hi, lo - 1, -1):
            yield from rec(i + 1, resting - (v - base), acc + (v,))

    yield from rec(0, size, ())


def stable_kostka(lam: Partition, mu: Partition) -> int:
    """Limiting Kostka number of the padded pair: the Hall pairing of the
    Schur element of lam times a full homogeneous row with the homogeneous
    element of mu.  Zero when |lam| > |mu|."""
    if lam.size > mu.size:
        return 0
    extra = mu.size - lam.size
    total = 0
    for nu in _pieri_strips_above(lam, extra):
        total += kostka(nu, mu)
    return total


def _sub_multisets_of_partition(mu: Partition, total: int):
    """Distinct sub-multisets of the parts of mu with the given total."""
    values = tuple(sorted(set(mu)))
    counts = tuple(sum(1 for p in mu if p == v) for v in values)

    def rec(i: int, resting: int, acc: tuple[int, ...]):
        if i == len(values):
            if resting == 0:
                yield Partition(sorted(acc, reverse=True))
            return
        v = values[i]
        for k in range(0, min(counts[i], resting // v) + 1):
            yield from rec(i + 1, resting - k * v, acc + (v,) * k)

    yield from rec(0, total, ())


def stable_pz_to_h(lam: Partition, mu: Partition) -> Fraction:
    """Limiting coefficient, in the homogeneous basis, of the padded
    power-sum-over-z element: a signed brick-weight sum over sub-multisets,
    divided by the centralizer order of lam.  Zero when |lam| > |mu|."""
    if lam.size > mu.size:
        return Fraction(0)
    sign = -1 if (len(mu) - len(lam)) % 2 else 1
    total = 0
    for nu in _sub_multisets_of_partition(mu, mu.size - lam.size):
        remaining = list(mu)
        for p in nu:
            remaining.remove(p)
        total += brick_weight(Partition(sorted(remaining, reverse=True)), lam) * rearrangement_count(nu)
    return Fraction(sign * total, centralizer_order(lam))


def direct_pz_to_h(lam: Partition, mu: Partition, n: int) -> Fraction:
    """Coefficient of the padded homogeneous element indexed by mu in the
    padded power-sum-over-z element indexed by lam, at degree n, straight
    from the signed brick-weight formula.  Zero when either pad is absent."""
    from .partitions import pad

    lam_n = pad(lam, n)
    mu_n = pad(mu, n)
    if lam_n is None or mu_n is None:
        return Fraction(0)
    sign = -1 if (len(mu_n) - len(lam_n)) % 2 else 1
    return Fraction(sign * brick_weight(mu_n, lam_n), centralizer_order(lam_n))


# ---------------------------------------------------------------------
# Transition matrices
# ---------------------------------------------------------------------

Matrix = tuple[tuple[Fraction, ...], ...]


def _identity(size: int) -> Matrix:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(size)) for i in range(size))


def matrix_multiply(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    bt = list(zip(*b))
    return tuple(
        tuple(sum(ra[k] * cb[k] for k in range(size) if ra[k]) for cb in bt) for ra in a
    )


def matrix_invert(a: Matrix) -> Matrix:
    """Exact Gaussian elimination over the rationals."""
    size = len(a)
    work = [list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(a)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col]), None)
        if pivot is None:
            raise InvariantViolation("transition matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [v * inv for v in work[col]]
        for r in range(size):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [v - f * w for v, w in zip(work[r], work[col])]
    return tuple(tuple(row[size:]) for row in work)


def _invert_unitriangular(a: Matrix) -> Matrix:
    """Inverse of an upper unitriangular matrix by back substitution."""
    size = len(a)
    inv = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size - 1, -1, -1):
        inv[i][i] = Fraction(1)
        for j in range(i + 1, size):
            s = sum(a[i][k] * inv[k][j] for k in range(i + 1, j + 1) if a[i][k])
            inv[i][j] = -s
    return tuple(tuple(row) for row in inv)


@lru_cache(maxsize=None)
def _to_m_matrix(tag: str, degree: int) -> Matrix:
    parts = partitions_of(degree)
    if tag == "m":
        return _identity(len(parts))
    rows = []
    for lam in parts:
        if tag == "s":
            row = [Fraction(kostka(lam, mu)) for mu in parts]
        elif tag == "h":
            row = [Fraction(contingency_count(lam, mu, False)) for mu in parts]
        elif tag == "e":
            row = [Fraction(contingency_count(lam, mu, True)) for mu in parts]
        elif tag == "p":
            row = [Fraction(ordered_brick_count(lam, mu)) for mu in parts]
        elif tag == "p/z":
            z = centralizer_order(lam)
            row = [Fraction(ordered_brick_count(lam, mu), z) for mu in parts]
        else:
            raise ValueError(tag)
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def _from_m_matrix(tag: str, degree: int) -> Matrix:
    if tag == "m":
        return _identity(len(partitions_of(degree)))
    forward = _to_m_matrix(tag, degree)
    if tag == "s":
        # Kostka is upper unitriangular in the canonical (lex-descending,
        # dominance-compatible) order
        return _invert_unitriangular(forward)
    return matrix_invert(forward)


@lru_cache(maxsize=None)
def _transition(degree: int, frm: str, to: str) -> Matrix:
    if frm == to:
        return _identity(len(partitions_of(degree)))
    if {frm, to} == {"p", "p/z"}:
        # diagonal rescaling by the centralizer orders
        parts = partitions_of(degree)
        zero = Fraction(0)
        rows = []
        for i, lam in enumerate(parts):
            z = centralizer_order(lam)
            value = Fraction(1, z) if frm == "p/z" else Fraction(z)
            rows.append(tuple(value if j == i else zero for j in range(len(parts))))
        return tuple(rows)
    if to == "m":
        return _to_m_matrix(frm, degree)
    if frm == "m":
        return _from_m_matrix(to, degree)
    return matrix_multiply(_to_m_matrix(frm, degree), _from_m_matrix(to, degree))


class CoefficientMatrix:
    """Transition matrix between two bases at one degree.

    Rows are indexed by the source basis, columns by the target, both in
    canonical partition order.  Entries are exposed as coefficient-ring
    polynomials; all six classical matrices are scalar valued.
    """

    __slots__ = ("degree", "from_basis", "to_basis", "_raw")

    def __init__(self, degree: int, from_basis: str, to_basis: str, raw: Matrix):
        self.degree = degree
        self.from_basis = from_basis
        self.to_basis = to_basis
        self._raw = raw

    @property
    def raw(self) -> Matrix:
        return self._raw

    def entry_scalar(self, lam: Partition, mu: Partition) -> Fraction:
        idx = partition_index(self.degree)
        return self._raw[idx[lam]][idx[mu]]

    def entry(self, lam: Partition, mu: Partition) -> QtPolynomial:
        return QtPolynomial.from_scalar(self.entry_scalar(lam, mu))

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "from": self.from_basis,
            "to": self.to_basis,
            "partitions": [list(p) for p in partitions_of(self.degree)],
            "entries": [
                [QtPolynomial.from_scalar(v).to_json() for v in row] for row in self._raw
            ],
        }


def change_of_basis_matrix(
    degree: int, frm: str, to: str, cap: int | None = None
) -> CoefficientMatrix:
    """Assemble (and cache) the full transition matrix for a basis pair."""
    frm = normalize_basis_tag(frm)
    to = normalize_basis_tag(to)
    limit = DEFAULT_DEGREE_CAP if cap is None else cap
    if degree > limit:
        raise CapExceeded(f"degree {degree} exceeds cap {limit}")
    return CoefficientMatrix(degree, frm, to, _transition(degree, frm, to))


def padded_entry(frm: str, to: str, lam: Partition, mu: Partition, n: int) -> Fraction:
    """Transition entry at the padded pair (lam[n], mu[n]); zero when either
    pad is undefined.  Used by all stabilization scans."""
    from .partitions import pad

    lam_n = pad(lam, n)
    mu_n = pad(mu, n)
    if lam_n is None or mu_n is None:
        return Fraction(0)
    frm = normalize_basis_tag(frm)
    to = normalize_basis_tag(to)
    idx = partition_index(n)
    return _transition(n, frm, to)[idx[lam_n]][idx[mu_n]]
