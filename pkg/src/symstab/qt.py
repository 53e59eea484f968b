"""Sparse Laurent polynomials in q and t over exact rationals.

This is the coefficient ring of the whole library.  No floating point is
used anywhere; coefficients are `fractions.Fraction` and exponents are
(possibly negative) integers.  Values are immutable and safe to share
between threads.

Canonical term order, used for serialization and printing, is ascending
q-exponent then ascending t-exponent.  The JSON encoding of a polynomial
is ``[[i, j, "num/den"], ...]`` in canonical order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

Scalar = int | Fraction

_ZERO = Fraction(0)


class QtPolynomial:
    """Immutable sparse polynomial in q, t with Fraction coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                f = Fraction(c)
                if f:
                    clean[(int(i), int(j))] = f
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "QtPolynomial":
        return _ZERO_POLY

    @classmethod
    def one(cls) -> "QtPolynomial":
        return _ONE_POLY

    @classmethod
    def from_scalar(cls, c: Scalar) -> "QtPolynomial":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> "QtPolynomial":
        return cls({(i, j): Fraction(c)})

    @classmethod
    def var_q(cls) -> "QtPolynomial":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def var_t(cls) -> "QtPolynomial":
        return cls({(0, 1): Fraction(1)})

    # -- inspection ----------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def as_scalar(self) -> Fraction:
        if not self._terms:
            return _ZERO
        if set(self._terms) == {(0, 0)}:
            return self._terms[(0, 0)]
        raise ValueError(f"not a scalar polynomial: {self}")

    def coefficient_of(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), _ZERO)

    def is_nonnegative(self) -> bool:
        """True iff every stored coefficient is >= 0."""
        return all(c >= 0 for c in self._terms.values())

    def q_slice(self, i: int) -> dict[int, Fraction]:
        """Map t-exponent -> coefficient of q^i t^j."""
        return {j: c for (qi, j), c in self._terms.items() if qi == i}

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "QtPolynomial") -> "QtPolynomial":
        if not isinstance(other, QtPolynomial):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for key, c in other._terms.items():
            v = out.get(key, _ZERO) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return _wrap(out)

    def __sub__(self, other: "QtPolynomial") -> "QtPolynomial":
        return self + (-other)

    def __neg__(self) -> "QtPolynomial":
        return _wrap({key: -c for key, c in self._terms.items()})

    def __mul__(self, other: "QtPolynomial") -> "QtPolynomial":
        if not isinstance(other, QtPolynomial):
            return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO_POLY
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                v = out.get(key, _ZERO) + c1 * c2
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return _wrap(out)

    def scale(self, c: Scalar) -> "QtPolynomial":
        f = Fraction(c)
        if not f:
            return _ZERO_POLY
        return _wrap({key: v * f for key, v in self._terms.items()})

    def swap_qt(self) -> "QtPolynomial":
        return _wrap({(j, i): c for (i, j), c in self._terms.items()})

    def evaluate(self, q0: Scalar, t0: Scalar) -> Fraction:
        """Exact substitution.  Raises ZeroDivisionError when a zero value
        meets a negative exponent."""
        q0 = Fraction(q0)
        t0 = Fraction(t0)
        total = _ZERO
        for (i, j), c in self._terms.items():
            total += c * q0**i * t0**j
        return total

    # -- equality / hashing / printing ---------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QtPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def sorted_terms(self) -> list[tuple[int, int, Fraction]]:
        return [(i, j, self._terms[(i, j)]) for (i, j) in sorted(self._terms)]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, j, c in self.sorted_terms():
            mono = "".join(
                (
                    f"q^{i}" if i not in (0, 1) else ("q" if i == 1 else ""),
                    " " if i and j else "",
                    f"t^{j}" if j not in (0, 1) else ("t" if j == 1 else ""),
                )
            )
            if not mono:
                piece = str(c)
            elif c == 1:
                piece = mono
            elif c == -1:
                piece = "-" + mono
            else:
                piece = f"{c} {mono}"
            pieces.append(piece)
        out = " + ".join(pieces)
        return out.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"QtPolynomial({self._terms!r})"

    # -- serialization --------------------------------------------------

    def to_json(self) -> list[list]:
        return [[i, j, f"{c.numerator}/{c.denominator}"] for i, j, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable) -> "QtPolynomial":
        terms = {}
        for item in data:
            i, j, c = item
            terms[(int(i), int(j))] = Fraction(str(c))
        return cls(terms)


def _wrap(terms: dict[tuple[int, int], Fraction]) -> QtPolynomial:
    poly = QtPolynomial.__new__(QtPolynomial)
    poly._terms = terms
    return poly


def from_int_counts(counts: Mapping[tuple[int, int], int]) -> QtPolynomial:
    """Fast constructor from an integer coefficient dict (counting code)."""
    return _wrap({key: Fraction(c) for key, c in counts.items() if c})


_ZERO_POLY = QtPolynomial()
_ONE_POLY = QtPolynomial({(0, 0): 1})


# -- q-analogues ------------------------------------------------------


def _poly_mul_q(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, c in a.items():
        for j, d in b.items():
            out[i + j] = out.get(i + j, 0) + c * d
    return out


@lru_cache(maxsize=None)
def _q_binomial(n: int, k: int) -> tuple[tuple[int, int], ...]:
    if k < 0 or k > n:
        return ()
    if k == 0 or k == n:
        return ((0, 1),)
    # Pascal recurrence: [n,k] = [n-1,k-1] + q^k [n-1,k]
    left = dict(_q_binomial(n - 1, k - 1))
    for e, c in _q_binomial(n - 1, k):
        left[e + k] = left.get(e + k, 0) + c
    return tuple(sorted(left.items()))


def q_binomial(n: int, k: int) -> QtPolynomial:
    """Gaussian binomial coefficient as a polynomial in q."""
    return from_int_counts({(e, 0): c for e, c in _q_binomial(n, k)})


def q_multinomial_int(n: int, parts: Iterable[int]) -> dict[int, int]:
    """q-multinomial as an int dict q-exponent -> coefficient.

    Coefficientwise equal to the inversion generating function over words
    whose content has the given part multiplicities.
    """
    parts = tuple(parts)
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    out = {0: 1}
    rem = n
    for p in parts:
        out = _poly_mul_q(out, dict(_q_binomial(rem, p)))
        rem -= p
    return out


def q_multinomial(n: int, parts: Iterable[int]) -> QtPolynomial:
    return from_int_counts({(e, 0): c for e, c in q_multinomial_int(n, parts).items()})
