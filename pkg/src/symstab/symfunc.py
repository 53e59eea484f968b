"""Degree-homogeneous symmetric functions as basis-tagged sparse expansions.

A SymFunc is a degree, a basis tag, and a sparse map from partitions of
that degree to coefficient-ring polynomials.  Conversions go through the
degree-matched transition matrices; equality is defined as equality after
conversion to the monomial basis, which is the pivot basis for all direct
combinatorial formulas in this library.

JSON form:

    {"degree": n, "basis": "s",
     "terms": [{"partition": [3,1], "coeff": [[i, j, "num/den"], ...]}, ...]}

with terms in canonical partition order.
"""

from __future__ import annotations

from typing import Mapping

from .bases import DEFAULT_DEGREE_CAP, CapExceeded, change_of_basis_matrix, normalize_basis_tag
from .partitions import Partition, partition_index, partitions_of
from .qt import QtPolynomial, Scalar


class SymFunc:
    """Immutable homogeneous symmetric function in one named basis."""

    __slots__ = ("degree", "basis", "_coeffs")

    def __init__(
        self,
        degree: int,
        basis: str,
        coeffs: Mapping[Partition, QtPolynomial] | None = None,
    ):
        self.degree = int(degree)
        self.basis = normalize_basis_tag(basis)
        clean: dict[Partition, QtPolynomial] = {}
        if coeffs:
            for lam, c in coeffs.items():
                lam = Partition(lam)
                if lam.size != self.degree:
                    raise ValueError(
                        f"key {tuple(lam)} does not partition degree {self.degree}"
                    )
                if not c.is_zero():
                    clean[lam] = c
        self._coeffs = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def basis_element(cls, basis: str, lam: Partition) -> "SymFunc":
        lam = Partition(lam)
        return cls(lam.size, basis, {lam: QtPolynomial.one()})

    @classmethod
    def zero(cls, degree: int, basis: str = "m") -> "SymFunc":
        return cls(degree, basis)

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> dict[Partition, QtPolynomial]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def support(self) -> list[Partition]:
        order = partition_index(self.degree)
        return sorted(self._coeffs, key=order.__getitem__)

    # -- algebra ----------------------------------------------------------

    def convert(self, to: str, cap: int | None = None) -> "SymFunc":
        to = normalize_basis_tag(to)
        if to == self.basis:
            return self
        matrix = change_of_basis_matrix(self.degree, self.basis, to, cap=cap)
        parts = partitions_of(self.degree)
        idx = partition_index(self.degree)
        out: dict[Partition, QtPolynomial] = {}
        for lam, c in self._coeffs.items():
            row = matrix.raw[idx[lam]]
            for j, a in enumerate(row):
                if a:
                    mu = parts[j]
                    v = out.get(mu, QtPolynomial.zero()) + c.scale(a)
                    if v.is_zero():
                        out.pop(mu, None)
                    else:
                        out[mu] = v
        return SymFunc(self.degree, to, out)

    def add(self, other: "SymFunc") -> "SymFunc":
        if self.degree != other.degree:
            raise ValueError("cannot add symmetric functions of different degrees")
        other = other.convert(self.basis)
        out = dict(self._coeffs)
        for lam, c in other._coeffs.items():
            v = out.get(lam, QtPolynomial.zero()) + c
            if v.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = v
        return SymFunc(self.degree, self.basis, out)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        return self.add(other)

    def scale(self, c: QtPolynomial | Scalar) -> "SymFunc":
        if not isinstance(c, QtPolynomial):
            c = QtPolynomial.from_scalar(c)
        return SymFunc(
            self.degree, self.basis, {lam: v * c for lam, v in self._coeffs.items()}
        )

    def coefficient(self, basis: str, lam: Partition) -> QtPolynomial:
        """Coefficient of the given basis element, converting if needed."""
        basis = normalize_basis_tag(basis)
        lam = Partition(lam)
        f = self if basis == self.basis else self.convert(basis)
        return f._coeffs.get(lam, QtPolynomial.zero())

    def hall_inner(self, other: "SymFunc") -> QtPolynomial:
        """Hall scalar product, computed through the (h, m) dual pair."""
        if self.degree != other.degree:
            raise ValueError("Hall pairing requires equal degrees")
        a = self.convert("h")
        b = other.convert("m")
        total = QtPolynomial.zero()
        for lam, c in a._coeffs.items():
            d = b._coeffs.get(lam)
            if d is not None:
                total = total + c * d
        return total

    def is_schur_positive(self, cap: int | None = None) -> bool:
        """True iff every Schur coefficient has only nonnegative rational
        coefficients."""
        s = self.convert("s", cap=cap)
        return all(c.is_nonnegative() for c in s._coeffs.values())

    # -- equality and rendering -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return False
        return self.convert("m")._coeffs == other.convert("m")._coeffs

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for lam in self.support():
            c = self._coeffs[lam]
            name = f"{self.basis}{lam.text()}"
            if c == QtPolynomial.one():
                pieces.append(name)
            elif c.is_scalar():
                pieces.append(f"{c.as_scalar()} {name}")
            else:
                pieces.append(f"({c}) {name}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"SymFunc(degree={self.degree}, basis={self.basis!r}, {len(self._coeffs)} terms)"

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [
                {"partition": list(lam), "coeff": self._coeffs[lam].to_json()}
                for lam in self.support()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymFunc":
        coeffs = {
            Partition(item["partition"]): QtPolynomial.from_json(item["coeff"])
            for item in data["terms"]
        }
        return cls(int(data["degree"]), data["basis"], coeffs)
