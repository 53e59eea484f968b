"""Modified Macdonald polynomials from statistics on diagram fillings.

A filling assigns a natural number (0 allowed) to every cell of a
partition diagram.  Two statistics drive everything here:

* maj: over descent cells (strictly bigger than the cell directly below),
  each contributing its leg plus one;
* inv: over triples (u, w, v) with u = (r, c), w = (r, c+k) in the diagram
  and v = (r-1, c) directly below u (a phantom cell below the bottom row
  counts as minus infinity), counted when the standardized labels decrease
  clockwise, i.e. the cyclic word (st(u), st(w), st(v)) is a rotation of a
  decreasing sequence.  Standardization breaks ties by reading order (top
  row first, left to right; u, w, v read in that order), so on raw labels
  a triple counts iff

      label(u) > label(w) > label(v)   or
      label(v) >= label(u) > label(w)  or
      label(w) > label(v) >= label(u),

  and with v phantom the condition is label(u) > label(w).  This cyclic
  reading, not the non-cyclic one, is what makes the Schur coefficients
  land in N[q,t] and match the hook evaluation formula.

The generating polynomial of fillings with a fixed content, weighted
q^inv t^maj, is computed by a brute walk over fillings (reference) or by
a split evaluation that enumerates the rows above the bottom plus the
first cells of the bottom row and closes the long tail of the bottom row
with an inversion generating function.  Both routes are exact; the split
one scales to padded shapes with a long bottom row.
"""

from __future__ import annotations

from functools import lru_cache

from .bases import CapExceeded, InvariantViolation
from .partitions import Cell, Partition, coarm, coleg, pad, partitions_of
from .qt import QtPolynomial, from_int_counts, q_multinomial_int
from .symfunc import SymFunc

MACDONALD_CAP = 8


# ---------------------------------------------------------------------
# Statistics on explicit fillings
# ---------------------------------------------------------------------


def _legs(shape: tuple[int, ...]) -> dict[tuple[int, int], int]:
    out = {}
    for ri, width in enumerate(shape):
        for ci in range(width):
            out[(ri, ci)] = sum(1 for r in range(ri + 1, len(shape)) if shape[r] > ci)
    return out


def filling_maj(shape: Partition, rows: tuple[tuple[int, ...], ...]) -> int:
    """Sum of leg+1 over descent cells.  Rows are listed bottom-up."""
    legs = _legs(tuple(shape))
    total = 0
    for ri in range(1, len(shape)):
        for ci in range(shape[ri]):
            if rows[ri][ci] > rows[ri - 1][ci]:
                total += legs[(ri, ci)] + 1
    return total


def _triple_counts(u: int, w: int, v: int | None) -> bool:
    """Cyclic inversion-triple test on raw labels; v None means phantom."""
    if v is None:
        return u > w
    return (u > w > v) or (v >= u > w) or (w > v >= u)


def filling_inv(shape: Partition, rows: tuple[tuple[int, ...], ...]) -> int:
    """Number of inversion triples (see module docstring)."""
    total = 0
    for ri in range(len(shape)):
        for ci in range(shape[ri]):
            u = rows[ri][ci]
            below = rows[ri - 1][ci] if ri else None
            for cj in range(ci + 1, shape[ri]):
                if _triple_counts(u, rows[ri][cj], below):
                    total += 1
    return total


def filling_descents(shape: Partition, rows: tuple[tuple[int, ...], ...]) -> list[Cell]:
    out = []
    for ri in range(1, len(shape)):
        for ci in range(shape[ri]):
            if rows[ri][ci] > rows[ri - 1][ci]:
                out.append(Cell(ri + 1, ci + 1))
    return out


# ---------------------------------------------------------------------
# Content-graded distributions
# ---------------------------------------------------------------------


def _brute_distribution(shape: tuple[int, ...], counts: tuple[int, ...]) -> dict[tuple[int, int], int]:
    """Reference route: enumerate every filling with the given content
    (value v appears counts[v] times) and tally (inv, maj)."""
    cells = [(ri, ci) for ri in range(len(shape)) for ci in range(shape[ri])]
    rows = [[-1] * w for w in shape]
    remaining = list(counts)
    dist: dict[tuple[int, int], int] = {}

    def rec(k: int):
        if k == len(cells):
            grid = tuple(tuple(r) for r in rows)
            key = (filling_inv(Partition(shape), grid), filling_maj(Partition(shape), grid))
            dist[key] = dist.get(key, 0) + 1
            return
        ri, ci = cells[k]
        for v in range(len(remaining)):
            if remaining[v]:
                remaining[v] -= 1
                rows[ri][ci] = v
                rec(k + 1)
                rows[ri][ci] = -1
                remaining[v] += 1

    rec(0)
    return dist


@lru_cache(maxsize=None)
def _tail_inversion_gf(counts: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    total = sum(counts)
    return tuple(sorted(q_multinomial_int(total, counts).items()))


def _split_distribution(shape: tuple[int, ...], counts: tuple[int, ...]) -> dict[tuple[int, int], int]:
    """Exact evaluation that avoids enumerating the bottom-row tail.

    Rows above the bottom and the first cells of the bottom row are
    enumerated; the remaining bottom-row suffix only contributes classical
    word inversions, summed in closed form by a q-multinomial.
    """
    nvals = len(counts)
    if len(shape) <= 1:
        width = shape[0] if shape else 0
        if sum(counts) != width:
            return {}
        return {(e, 0): c for e, c in q_multinomial_int(width, counts).items()}

    legs = _legs(shape)
    head_len = shape[1]
    order = [(ri, ci) for ri in range(len(shape) - 1, 0, -1) for ci in range(shape[ri])]
    order += [(0, ci) for ci in range(head_len)]
    rows = [[-1] * w for w in shape]
    remaining = list(counts)
    agg: dict[tuple, int] = {}

    def rec(k: int, inv: int, maj: int):
        if k == len(order):
            head = rows[0][:head_len]
            extra = 0
            for a in range(head_len):
                x = head[a]
                for b in range(a + 1, head_len):
                    if head[b] < x:
                        extra += 1
                for v in range(x):
                    extra += remaining[v]
            key = (tuple(remaining), inv + extra, maj)
            agg[key] = agg.get(key, 0) + 1
            return
        ri, ci = order[k]
        above = None
        if ci < (shape[ri + 1] if ri + 1 < len(shape) else 0):
            above = rows[ri + 1][ci]
        for v in range(nvals):
            if not remaining[v]:
                continue
            d_inv = d_maj = 0
            if above is not None:
                if above > v:
                    d_maj = legs[(ri + 1, ci)] + 1
                arow = rows[ri + 1]
                for cj in range(ci + 1, shape[ri + 1]):
                    if _triple_counts(above, arow[cj], v):
                        d_inv += 1
            remaining[v] -= 1
            rows[ri][ci] = v
            rec(k + 1, inv + d_inv, maj + d_maj)
            rows[ri][ci] = -1
            remaining[v] += 1

    rec(0, 0, 0)
    dist: dict[tuple[int, int], int] = {}
    for (tail, inv, maj), mult in agg.items():
        for e, c in _tail_inversion_gf(tail):
            key = (inv + e, maj)
            dist[key] = dist.get(key, 0) + mult * c
    return dist


@lru_cache(maxsize=None)
def filling_distribution(shape: Partition, counts: tuple[int, ...]) -> dict[tuple[int, int], int]:
    """(inv, maj) distribution over fillings of the shape whose content has
    counts[v] cells labeled v.  Empty when the totals disagree."""
    if sum(counts) != shape.size:
        return {}
    return _split_distribution(tuple(shape), tuple(counts))


# ---------------------------------------------------------------------
# Macdonald polynomials and q,t-Kostka coefficients
# ---------------------------------------------------------------------


def macdonald_monomial_coefficient(
    nu: Partition, eta: Partition, i: int, j: int, cap: int | None = None
) -> int:
    """Number of fillings of nu with content (|nu|-|eta| zeros, then the
    parts of eta), inv = i and maj = j: the q^i t^j coefficient of the
    pairing with the padded homogeneous element of eta."""
    nu, eta = Partition(nu), Partition(eta)
    if eta.size > nu.size:
        raise ValueError("content exceeds the number of cells")
    limit = MACDONALD_CAP if cap is None else cap
    if nu.size > limit:
        raise CapExceeded(f"shape size {nu.size} exceeds cap {limit}")
    counts = (nu.size - eta.size, *eta)
    return filling_distribution(nu, counts).get((i, j), 0)


def macdonald_component_coefficient(mu: Partition, n: int, eta: Partition, i: int, j: int) -> int:
    """Same coefficient for the padded shape mu[n]; zero when either pad is
    undefined.  Used by the stabilization scans, so no cap applies."""
    shape = pad(mu, n)
    if shape is None or pad(eta, n) is None:
        return 0
    counts = (n - eta.size, *eta)
    return filling_distribution(shape, counts).get((i, j), 0)


def macdonald_polynomial(nu: Partition, cap: int | None = None) -> SymFunc:
    """Full monomial expansion of the modified Macdonald polynomial."""
    nu = Partition(nu)
    limit = MACDONALD_CAP if cap is None else cap
    if nu.size > limit:
        raise CapExceeded(f"shape size {nu.size} exceeds cap {limit}")
    coeffs = {}
    for eta in partitions_of(nu.size):
        dist = filling_distribution(nu, tuple(eta))
        if dist:
            coeffs[eta] = from_int_counts(dist)
    return SymFunc(nu.size, "m", coeffs)


def qt_kostka(lam: Partition, nu: Partition, cap: int | None = None) -> QtPolynomial:
    """Schur coefficient of the modified Macdonald polynomial.  Known to be
    a polynomial in q, t with nonnegative integer coefficients; a negative
    coefficient would be a library defect and raises."""
    lam, nu = Partition(lam), Partition(nu)
    if lam.size != nu.size:
        raise ValueError("size mismatch")
    limit = MACDONALD_CAP if cap is None else cap
    poly = macdonald_polynomial(nu, cap=limit).convert("s", cap=max(limit, nu.size))
    out = poly.coefficient("s", lam)
    if not out.is_nonnegative():
        raise InvariantViolation(f"negative q,t-Kostka coefficient at {tuple(lam)}, {tuple(nu)}")
    return out


def cell_generating_polynomial(nu: Partition) -> QtPolynomial:
    """Sum over the cells of q^coarm t^coleg."""
    nu = Partition(nu)
    counts: dict[tuple[int, int], int] = {}
    for cell in nu.cells():
        key = (coarm(nu, cell), coleg(nu, cell))
        counts[key] = counts.get(key, 0) + 1
    return from_int_counts(counts)


def elementary_symmetric_eval(k: int, monomials: list[QtPolynomial]) -> QtPolynomial:
    """Elementary symmetric polynomial e_k of a finite multiset of values."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    coeffs = [QtPolynomial.one()] + [QtPolynomial.zero()] * k
    for m in monomials:
        for d in range(min(k, len(coeffs) - 1), 0, -1):
            coeffs[d] = coeffs[d] + coeffs[d - 1] * m
    return coeffs[k]


def hook_qt_kostka(k: int, nu: Partition) -> QtPolynomial:
    """q,t-Kostka coefficient at the hook with k cells above the first row,
    from the cell-statistic formula: e_k of the cell monomials of nu with
    the corner cell removed."""
    nu = Partition(nu)
    monomials = []
    for cell in nu.cells():
        if cell == Cell(1, 1):
            continue
        monomials.append(QtPolynomial.monomial(coarm(nu, cell), coleg(nu, cell)))
    return elementary_symmetric_eval(k, monomials)
