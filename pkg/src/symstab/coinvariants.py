"""Graded coinvariant algebras of the symmetric groups.

The graded Frobenius image has two classical expansions: monomial
coefficients are q-multinomial coefficients, and Schur coefficients count
standard Young tableaux by major index.  Both are implemented; agreeing on
them is one of the library's standing cross-checks.
"""

from __future__ import annotations

from functools import lru_cache

from .bases import DEFAULT_DEGREE_CAP, CapExceeded
from .partitions import Partition, pad, partitions_of
from .qt import QtPolynomial, from_int_counts, q_multinomial_int
from .symfunc import SymFunc


@lru_cache(maxsize=None)
def _syt_maj_counts(shape: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Major-index distribution over standard Young tableaux of the shape.

    A tableau is built by removing the largest entry from an outer corner;
    entry j is a descent when j + 1 sits in a strictly higher row.
    """
    n = sum(shape)
    if n == 0:
        return ((0, 1),)
    counts: dict[int, int] = {}

    # peel entries n, n-1, ..., 1 off outer corners; value v is a descent
    # (contributing v) exactly when v+1 sits in a strictly higher row
    def rec(cur: tuple[int, ...], value: int, row_of_next: int, maj: int):
        if value == 0:
            counts[maj] = counts.get(maj, 0) + 1
            return
        for r in range(len(cur)):
            if r == len(cur) - 1 or cur[r] > cur[r + 1]:
                new = list(cur)
                new[r] -= 1
                if new[r] == 0:
                    new.pop()
                add = value if r < row_of_next else 0
                rec(tuple(new), value - 1, r, maj + add)

    rec(tuple(shape), n, -1, 0)
    return tuple(sorted(counts.items()))


def syt_maj_generating(lam: Partition) -> QtPolynomial:
    """Generating polynomial in q of the major index over standard Young
    tableaux of the given shape."""
    return from_int_counts({(m, 0): c for m, c in _syt_maj_counts(tuple(lam))})


def coinvariant_frobenius(n: int, cap: int | None = None) -> SymFunc:
    """Graded Frobenius image of the degree-n coinvariant algebra, in the
    monomial basis, with q tracking the polynomial grading."""
    limit = DEFAULT_DEGREE_CAP if cap is None else cap
    if n > limit:
        raise CapExceeded(f"degree {n} exceeds cap {limit}")
    coeffs = {
        mu: from_int_counts({(e, 0): c for e, c in q_multinomial_int(n, mu).items()})
        for mu in partitions_of(n)
    }
    return SymFunc(n, "m", coeffs)


def coinvariant_schur_side(n: int, cap: int | None = None) -> SymFunc:
    """Same series assembled from the Schur side (tableaux by major index)."""
    limit = DEFAULT_DEGREE_CAP if cap is None else cap
    if n > limit:
        raise CapExceeded(f"degree {n} exceeds cap {limit}")
    coeffs = {lam: syt_maj_generating(lam) for lam in partitions_of(n)}
    return SymFunc(n, "s", coeffs)


def graded_m_coefficient(n: int, mu: Partition, grade: int) -> int:
    """Monomial coefficient of the padded element indexed by mu in the
    grade-q^i component; zero when the pad is undefined."""
    mu_n = pad(mu, n)
    if mu_n is None:
        return 0
    return q_multinomial_int(n, mu_n).get(grade, 0)


def graded_schur_coefficient(n: int, lam: Partition, grade: int) -> int:
    """Schur coefficient of the padded element indexed by lam in the
    grade-q^i component: tableaux of the padded shape with that major index."""
    lam_n = pad(lam, n)
    if lam_n is None:
        return 0
    return dict(_syt_maj_counts(tuple(lam_n))).get(grade, 0)
