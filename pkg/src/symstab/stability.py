"""Stabilization analysis for sequences of homogeneous symmetric functions.

A sequence assigns to every degree n a symmetric function of that degree,
with coefficients indexed along padded families: the coefficient of the
basis element at lam[n] = (n - |lam|, lam), taken as zero when the pad is
undefined.  The observed range of a coefficient family is the first n at
which the value is constant up to the scan horizon; "unstable" is always a
horizon-relative verdict, never a claim about all n.

Certification works against proven bounds carried by the sequence itself
(the shipped families have their bounds built in): an entry is certified
when its proven bound lies inside the horizon and the observed range does
not exceed it.

The transfer-condition checker classifies a basis pair by three
conditions on its padded transition entries: (1) every entry family
stabilizes, (2) column support is finite, (3) row support is finite.
Expected verdicts for all thirty ordered pairs of the six classical bases
are hard coded and the empirical scan is compared against them; an
expected failure that the scan box is too small to witness is reported as
"consistent, not witnessed" rather than confirmed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import coinvariants as _coinv
from . import macdonald as _mac
from . import shuffle as _shuf
from .bases import BASIS_TAGS, character, normalize_basis_tag, padded_entry
from .partitions import Partition, pad, partitions_of, partitions_up_to_size, unpad
from .qt import QtPolynomial
from .symfunc import SymFunc

# ---------------------------------------------------------------------
# Sequences
# ---------------------------------------------------------------------

CoefficientHook = Callable[[int, Partition], QtPolynomial]


class SymFuncSequence:
    """A degree-indexed family n -> SymFunc of degree n, with caches.

    Per-basis coefficient hooks allow single coefficients to be computed
    without materializing whole terms; proven bounds (when the family has
    them) drive certification.  weight_bound is a bound on the Schur-side
    weight (equivalently the homogeneous-side weight); monomial and
    power-sum supports of the shipped families are typically unbounded.
    The caches are idempotent maps: concurrent writers may race but always
    store equal values.
    """

    def __init__(
        self,
        label: str,
        generator: Callable[[int], SymFunc],
        *,
        coefficient_hooks: dict[str, CoefficientHook] | None = None,
        weight_bound: int | None = None,
        m_range_bound: Callable[[Partition], int] | None = None,
        schur_range_bound: Callable[[Partition], int] | None = None,
        uniform_schur_bound: int | None = None,
        schur_positive: bool = False,
        positivity_check_cap: int = 8,
    ):
        self.label = label
        self._generator = generator
        self._hooks = dict(coefficient_hooks or {})
        self.weight_bound = weight_bound
        self.m_range_bound = m_range_bound
        self.schur_range_bound = schur_range_bound
        self.uniform_schur_bound = uniform_schur_bound
        self.schur_positive = schur_positive
        self.positivity_check_cap = positivity_check_cap
        self._terms: dict[int, SymFunc] = {}
        self._coeffs: dict[tuple[int, str, Partition], QtPolynomial] = {}

    def term(self, n: int) -> SymFunc:
        if n not in self._terms:
            f = self._generator(n)
            if f.degree != n:
                raise ValueError(f"{self.label}: generator returned degree {f.degree} at {n}")
            self._terms[n] = f
        return self._terms[n]

    def coefficient(self, n: int, basis: str, core: Partition) -> QtPolynomial:
        """Coefficient of the padded basis element core[n]; zero when the
        pad is undefined."""
        basis = normalize_basis_tag(basis)
        core = Partition(core)
        key = (n, basis, core)
        if key not in self._coeffs:
            padded = pad(core, n)
            if padded is None:
                value = QtPolynomial.zero()
            elif basis in self._hooks:
                value = self._hooks[basis](n, core)
            else:
                value = self.term(n).coefficient(basis, padded)
            self._coeffs[key] = value
        return self._coeffs[key]


# ---------------------------------------------------------------------
# Observed ranges and weights
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class RangeResult:
    """Observed stabilization of one coefficient family up to a horizon.

    stable_from is None when only the final scan point is constant, i.e.
    the family is unstable at this horizon.
    """

    stable_from: int | None
    stable_value: QtPolynomial | None
    horizon: int

    def to_json(self) -> dict:
        return {
            "stable_from": self.stable_from,
            "stable_value": None if self.stable_value is None else self.stable_value.to_json(),
            "horizon": self.horizon,
        }


def _stabilization_point(values: list) -> int:
    """Smallest index from which the list is constant."""
    n0 = len(values) - 1
    while n0 > 0 and values[n0 - 1] == values[-1]:
        n0 -= 1
    return n0


def observed_range(
    seq: SymFuncSequence, basis: str, lam: Partition, horizon: int
) -> RangeResult:
    """Scan the coefficient family of lam[n] for n in [0, horizon]."""
    lam = Partition(lam)
    first = lam.size + (lam[0] if lam else 0)
    if horizon < first:
        raise ValueError(f"horizon {horizon} cannot define the pad of {tuple(lam)}")
    values = [seq.coefficient(n, basis, lam) for n in range(horizon + 1)]
    n0 = _stabilization_point(values)
    if n0 >= horizon:
        return RangeResult(None, None, horizon)
    return RangeResult(n0, values[-1], horizon)


def sequence_weight(seq: SymFuncSequence, basis: str, horizon: int) -> tuple[int, bool]:
    """Largest |core| carrying a nonzero coefficient for n <= horizon.

    The verdict is horizon-limited (a lower bound of the true weight);
    the second component flags that.
    """
    basis = normalize_basis_tag(basis)
    best = 0
    for n in range(horizon + 1):
        f = seq.term(n).convert(basis) if basis != seq.term(n).basis else seq.term(n)
        for padded in f.support():
            core, _ = unpad(padded)
            best = max(best, core.size)
    return best, True


# ---------------------------------------------------------------------
# Transfer conditions
# ---------------------------------------------------------------------

# Which of the three conditions hold for each ordered basis pair (from,
# to).  Failures are part of the contract and carry witnesses in the
# empirical reports.
EXPECTED_TRANSFER_CONDITIONS: dict[tuple[str, str], frozenset[int]] = {
    ("s", "m"): frozenset({1, 2}),
    ("h", "m"): frozenset({1}),
    ("e", "m"): frozenset({1}),
    ("p", "m"): frozenset({1, 3}),
    ("p/z", "m"): frozenset({3}),
    ("m", "s"): frozenset({1, 2}),
    ("h", "s"): frozenset({1, 3}),
    ("e", "s"): frozenset({1}),
    ("p", "s"): frozenset({1}),
    ("p/z", "s"): frozenset(),
    ("m", "h"): frozenset(),
    ("s", "h"): frozenset({1, 3}),
    ("e", "h"): frozenset({2}),
    ("p", "h"): frozenset({2}),
    ("p/z", "h"): frozenset({1, 2}),
    ("m", "e"): frozenset(),
    ("s", "e"): frozenset(),
    ("h", "e"): frozenset({2}),
    ("p", "e"): frozenset({2}),
    ("p/z", "e"): frozenset({2}),
    ("m", "p"): frozenset({1, 3}),
    ("s", "p"): frozenset(),
    ("h", "p"): frozenset({2}),
    ("e", "p"): frozenset({2}),
    ("p/z", "p"): frozenset({2, 3}),
    ("m", "p/z"): frozenset({3}),
    ("s", "p/z"): frozenset({1}),
    ("h", "p/z"): frozenset({1, 2}),
    ("e", "p/z"): frozenset({2}),
    ("p", "p/z"): frozenset({2, 3}),
}


def coefficient_stabilization(
    frm: str, to: str, lam: Partition, mu: Partition, horizon: int
) -> tuple[int | None, Fraction | None]:
    """Observed stabilization point of the padded transition entry at
    (lam[n], mu[n]) up to the horizon; (None, None) when unstable there."""
    lam, mu = Partition(lam), Partition(mu)
    first = max(lam.size + (lam[0] if lam else 0), mu.size + (mu[0] if mu else 0))
    if horizon < first:
        raise ValueError("horizon too small to define both pads")
    values = [padded_entry(frm, to, lam, mu, n) for n in range(horizon + 1)]
    n0 = _stabilization_point(values)
    if n0 >= horizon:
        return None, None
    return n0, values[-1]


@dataclass
class ConditionCheck:
    holds_empirically: bool
    witness: dict | None = None

    def to_json(self) -> dict:
        return {"holds_empirically": self.holds_empirically, "witness": self.witness}


@dataclass
class TransferConditionReport:
    from_basis: str
    to_basis: str
    size_bound: int
    horizon: int
    condition1: ConditionCheck
    condition2: ConditionCheck
    condition3: ConditionCheck
    expected: frozenset[int]
    contradictions: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.contradictions

    def conditions(self) -> dict[int, ConditionCheck]:
        return {1: self.condition1, 2: self.condition2, 3: self.condition3}

    def to_json(self) -> dict:
        return {
            "from": self.from_basis,
            "to": self.to_basis,
            "size_bound": self.size_bound,
            "horizon": self.horizon,
            "conditions": {str(k): v.to_json() for k, v in self.conditions().items()},
            "expected": sorted(self.expected),
            "consistent": self.consistent,
            "contradictions": list(self.contradictions),
            "notes": list(self.notes),
        }


def check_transfer_conditions(
    frm: str, to: str, size_bound: int, horizon: int
) -> TransferConditionReport:
    """Empirically test the three transfer conditions in the box
    |lam|, |mu| <= size_bound, n <= horizon, and compare with the expected
    verdicts."""
    frm = normalize_basis_tag(frm)
    to = normalize_basis_tag(to)
    if frm == to:
        raise ValueError("transfer conditions compare two distinct bases")
    box = partitions_up_to_size(size_bound)

    # condition 1: every entry family is constant on a tail of length >= 3
    c1 = ConditionCheck(True)
    for lam in box:
        for mu in box:
            values = [padded_entry(frm, to, lam, mu, n) for n in range(horizon + 1)]
            n0 = _stabilization_point(values)
            if n0 > horizon - 2:
                c1 = ConditionCheck(
                    False,
                    {
                        "lam": list(lam),
                        "mu": list(mu),
                        "tail": [str(v) for v in values[-4:]],
                    },
                )
                break
        if not c1.holds_empirically:
            break

    # conditions 2 and 3: support bounds |lam| <= |mu| and |mu| <= |lam|
    c2 = ConditionCheck(True)
    c3 = ConditionCheck(True)
    for lam in box:
        for mu in box:
            if (c2.holds_empirically and lam.size > mu.size) or (
                c3.holds_empirically and mu.size > lam.size
            ):
                for n in range(horizon + 1):
                    if padded_entry(frm, to, lam, mu, n):
                        witness = {"lam": list(lam), "mu": list(mu), "n": n}
                        if lam.size > mu.size:
                            c2 = ConditionCheck(False, witness)
                        else:
                            c3 = ConditionCheck(False, witness)
                        break

    expected = EXPECTED_TRANSFER_CONDITIONS[(frm, to)]
    report = TransferConditionReport(frm, to, size_bound, horizon, c1, c2, c3, expected)
    for idx, check in report.conditions().items():
        if idx in expected and not check.holds_empirically:
            report.contradictions.append(
                f"condition {idx} expected to hold but failed with witness {check.witness}"
            )
        if idx not in expected and check.holds_empirically:
            report.notes.append(f"condition {idx}: consistent, not witnessed")
    return report


# ---------------------------------------------------------------------
# Schur certification
# ---------------------------------------------------------------------


@dataclass
class SchurRangeEntry:
    """Certified Schur stabilization data for one core partition."""

    lam: Partition
    observed: RangeResult
    proven_bound: int | None
    improved_bound: int | None
    certified: bool
    positivity_checked_to: int

    def to_json(self) -> dict:
        return {
            "lam": list(self.lam),
            "observed": self.observed.to_json(),
            "proven_bound": self.proven_bound,
            "improved_bound": self.improved_bound,
            "certified": self.certified,
            "positivity_checked_to": self.positivity_checked_to,
        }


def schur_range_from_monomial(
    seq: SymFuncSequence, lam: Partition, horizon: int
) -> SchurRangeEntry:
    """Schur range of one core, certified against the bound obtained from
    the sequence's proven monomial ranges: the maximum of 2|lam| and the
    monomial bounds over |mu| <= |lam| (the improved variant drops the
    2|lam| term).  Both bounds are verified against the observed range."""
    lam = Partition(lam)
    check_to = min(horizon, seq.positivity_check_cap)
    for n in range(check_to + 1):
        f = seq.term(n)
        if not f.is_schur_positive(cap=max(n, 8)):
            bad = next(
                (p, str(c)) for p, c in f.convert("s").coeffs.items() if not c.is_nonnegative()
            )
            raise ValueError(f"{seq.label}: not Schur positive at degree {n}, witness {bad}")
    observed = observed_range(seq, "s", lam, horizon)
    proven = improved = None
    if seq.m_range_bound is not None:
        inner = [seq.m_range_bound(mu) for mu in partitions_up_to_size(lam.size)]
        improved = max(inner) if inner else 0
        proven = max(2 * lam.size, improved)
    certified = (
        proven is not None
        and proven <= horizon
        and observed.stable_from is not None
        and observed.stable_from <= proven
        and (improved is None or observed.stable_from <= improved)
    )
    return SchurRangeEntry(lam, observed, proven, improved, certified, check_to)


def character_stabilization(seq: SymFuncSequence, mu: Partition, horizon: int) -> RangeResult:
    """Observed stabilization of the power-sum-over-z coefficient family at
    mu, i.e. of the character value at a cycle of type mu[n]."""
    return observed_range(seq, "p/z", mu, horizon)


def schur_agreement_from_monomial_agreement(
    f_n: SymFunc, f_n1: SymFunc, a: int
) -> tuple[bool, bool]:
    """For two Schur-positive functions of consecutive degrees: whether all
    padded monomial coefficients agree up to core size a, and whether all
    padded Schur coefficients then agree up to core size a.  A true
    hypothesis with a false conclusion is a library defect."""
    if f_n1.degree != f_n.degree + 1:
        raise ValueError("degrees must be consecutive")
    if not (f_n.is_schur_positive() and f_n1.is_schur_positive()):
        raise ValueError("both functions must be Schur positive")

    def coeff(f: SymFunc, basis: str, core: Partition) -> QtPolynomial:
        padded = pad(core, f.degree)
        if padded is None:
            return QtPolynomial.zero()
        return f.coefficient(basis, padded)

    cores = partitions_up_to_size(a)
    hypothesis = all(coeff(f_n, "m", mu) == coeff(f_n1, "m", mu) for mu in cores)
    conclusion = all(coeff(f_n, "s", lam) == coeff(f_n1, "s", lam) for lam in cores)
    return hypothesis, conclusion


# ---------------------------------------------------------------------
# Stability reports
# ---------------------------------------------------------------------


@dataclass
class StabilityReport:
    label: str
    basis: str
    horizon: int
    per_lambda: dict[Partition, dict]
    observed_weight: int
    weight_horizon_limited: bool
    uniform_observed: int | None
    uniform_proven: int | None
    certified_uniform: bool

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "basis": self.basis,
            "horizon": self.horizon,
            "per_lambda": [
                {
                    "lam": list(lam),
                    "observed_range": entry["observed"].stable_from,
                    "stable_value": None
                    if entry["observed"].stable_value is None
                    else entry["observed"].stable_value.to_json(),
                    "proven_bound": entry["proven_bound"],
                    "certified": entry["certified"],
                }
                for lam, entry in self.per_lambda.items()
            ],
            "observed_weight": self.observed_weight,
            "weight_horizon_limited": self.weight_horizon_limited,
            "uniform_observed": self.uniform_observed,
            "uniform_proven": self.uniform_proven,
            "certified_uniform": self.certified_uniform,
        }


def build_stability_report(
    seq: SymFuncSequence,
    basis: str,
    horizon: int,
    lambdas: Iterable[Partition] | None = None,
    margin: int = 1,
) -> StabilityReport:
    """Scan a family of cores and assemble observed ranges, proven bounds,
    and certification flags.  The default scan set is bounded by the
    sequence's proven weight (plus a margin of cores that must come out
    zero); sequences without a weight bound scan every definable core."""
    basis = normalize_basis_tag(basis)
    if lambdas is None:
        # the weight bound is a Schur-side bound; it transfers to h but not
        # to m or p, where these families typically have unbounded support
        if seq.weight_bound is not None and basis in ("s", "h"):
            lambdas = [
                lam
                for lam in partitions_up_to_size(min(seq.weight_bound + margin, horizon))
                if lam.size + (lam[0] if lam else 0) <= horizon
            ]
        else:
            lambdas = [
                lam
                for lam in partitions_up_to_size(horizon)
                if lam.size + (lam[0] if lam else 0) <= horizon
            ]
    bound_fn = None
    if basis == "m":
        bound_fn = seq.m_range_bound
    elif basis == "s":
        bound_fn = seq.schur_range_bound

    per: dict[Partition, dict] = {}
    weight = 0
    for lam in lambdas:
        lam = Partition(lam)
        observed = observed_range(seq, basis, lam, horizon)
        proven = bound_fn(lam) if bound_fn is not None else None
        certified = (
            proven is not None
            and proven <= horizon
            and observed.stable_from is not None
            and observed.stable_from <= proven
        )
        if any(not seq.coefficient(n, basis, lam).is_zero() for n in range(horizon + 1)):
            weight = max(weight, lam.size)
        per[lam] = {"observed": observed, "proven_bound": proven, "certified": certified}

    stable_points = [e["observed"].stable_from for e in per.values()]
    uniform_observed = None if any(p is None for p in stable_points) else max(stable_points, default=0)
    uniform_proven = seq.uniform_schur_bound if basis == "s" else None
    certified_uniform = (
        uniform_proven is not None
        and uniform_proven <= horizon
        and uniform_observed is not None
        and uniform_observed <= uniform_proven
    )
    return StabilityReport(
        seq.label,
        basis,
        horizon,
        per,
        weight,
        True,
        uniform_observed,
        uniform_proven,
        certified_uniform,
    )


# ---------------------------------------------------------------------
# Shipped sequences
# ---------------------------------------------------------------------


def coinvariant_sequence(i: int) -> SymFuncSequence:
    """Grade-q^i component of the coinvariant series."""

    def gen(n: int) -> SymFunc:
        coeffs = {}
        for rho in partitions_of(n):
            mu, _ = unpad(rho)
            c = _coinv.graded_m_coefficient(n, mu, i)
            if c:
                coeffs[rho] = QtPolynomial.from_scalar(c)
        return SymFunc(n, "m", coeffs)

    def m_hook(n: int, mu: Partition) -> QtPolynomial:
        return QtPolynomial.from_scalar(_coinv.graded_m_coefficient(n, mu, i))

    def s_hook(n: int, lam: Partition) -> QtPolynomial:
        return QtPolynomial.from_scalar(_coinv.graded_schur_coefficient(n, lam, i))

    return SymFuncSequence(
        f"coinvariant grade {i}",
        gen,
        coefficient_hooks={"m": m_hook, "s": s_hook},
        weight_bound=i,
        m_range_bound=lambda mu: mu.size + max(i, mu[0] if mu else 0),
        schur_range_bound=lambda lam: max(2 * lam.size, lam.size + i),
        uniform_schur_bound=2 * i,
        schur_positive=True,
    )


def dr_sequence(i: int, j: int) -> SymFuncSequence:
    """(q^i t^j) component of the diagonal coinvariant series."""

    def gen(n: int) -> SymFunc:
        return _shuf.dr_component(n, i, j, cap=n)

    def m_hook(n: int, mu: Partition) -> QtPolynomial:
        return QtPolynomial.from_scalar(_shuf.dr_m_coefficient(n, mu, i, j, cap=n))

    def s_hook(n: int, lam: Partition) -> QtPolynomial:
        # column support of the monomial-to-Schur matrix is bounded by
        # |mu| <= |lam| (a tested library invariant), so the conversion
        # only needs small monomial coefficients
        total = Fraction(0)
        for mu in partitions_up_to_size(lam.size):
            c = _shuf.dr_m_coefficient(n, mu, i, j, cap=n)
            if c:
                total += c * padded_entry("m", "s", mu, lam, n)
        return QtPolynomial.from_scalar(total)

    return SymFuncSequence(
        f"diagonal coinvariant component ({i},{j})",
        gen,
        coefficient_hooks={"m": m_hook, "s": s_hook},
        weight_bound=i + j,
        m_range_bound=lambda mu: mu.size + max(i + j, mu[0] if mu else 0),
        schur_range_bound=lambda lam: max(2 * lam.size, lam.size + i + j),
        uniform_schur_bound=2 * (i + j),
        schur_positive=True,
    )


def macdonald_sequence(mu: Partition, i: int, j: int) -> SymFuncSequence:
    """(q^i t^j) component of the padded modified Macdonald family."""
    mu = Partition(mu)
    mu1 = mu[0] if mu else 0

    def gen(n: int) -> SymFunc:
        coeffs = {}
        for rho in partitions_of(n):
            eta, _ = unpad(rho)
            c = _mac.macdonald_component_coefficient(mu, n, eta, i, j)
            if c:
                coeffs[rho] = QtPolynomial.from_scalar(c)
        return SymFunc(n, "m", coeffs)

    def m_hook(n: int, eta: Partition) -> QtPolynomial:
        return QtPolynomial.from_scalar(_mac.macdonald_component_coefficient(mu, n, eta, i, j))

    def s_hook(n: int, lam: Partition) -> QtPolynomial:
        total = Fraction(0)
        for eta in partitions_up_to_size(lam.size):
            c = _mac.macdonald_component_coefficient(mu, n, eta, i, j)
            if c:
                total += c * padded_entry("m", "s", eta, lam, n)
        return QtPolynomial.from_scalar(total)

    return SymFuncSequence(
        f"macdonald component mu={tuple(mu)} ({i},{j})",
        gen,
        coefficient_hooks={"m": m_hook, "s": s_hook},
        weight_bound=i + j,
        m_range_bound=lambda eta: max(
            mu.size + mu1 + eta.size + i, eta.size + (eta[0] if eta else 0)
        ),
        schur_range_bound=lambda lam: max(2 * lam.size, lam.size + mu.size + mu1 + i),
        uniform_schur_bound=max(2 * (i + j), mu.size + mu1 + 2 * i + j),
        schur_positive=True,
    )


def counterexample_sequence() -> SymFuncSequence:
    """The named fixture showing that stabilized small character values do
    not force stabilized Schur multiplicities: at degree 4 it contains an
    extra length-two Specht summand that every later degree drops, while
    all character values on cycle types with core size <= 2 agree."""

    def gen(n: int) -> SymFunc:
        if n < 4:
            return SymFunc.zero(n, "s")
        if n == 4:
            coeffs = {
                Partition((2, 2)): QtPolynomial.one(),
                Partition((3, 1)): QtPolynomial.one(),
                Partition((4,)): QtPolynomial.one(),
                Partition((2, 1, 1)): QtPolynomial.from_scalar(2),
            }
            return SymFunc(4, "s", coeffs)
        return SymFunc(n, "s", {Partition((n - 2, 1, 1)): QtPolynomial.from_scalar(2)})

    def pz_hook(n: int, mu: Partition) -> QtPolynomial:
        mu_n = pad(mu, n)
        if mu_n is None:
            return QtPolynomial.zero()
        total = Fraction(0)
        for lam_n, c in gen(n).coeffs.items():
            total += c.as_scalar() * character(lam_n, mu_n)
        return QtPolynomial.from_scalar(total)

    return SymFuncSequence(
        "character-stability counterexample",
        gen,
        coefficient_hooks={"p/z": pz_hook},
        weight_bound=2,
        schur_positive=True,
    )


def padded_basis_sequence(basis: str, core: Partition) -> SymFuncSequence:
    """F_n = the basis element at core[n] whenever defined, else zero."""
    basis = normalize_basis_tag(basis)
    core = Partition(core)

    def gen(n: int) -> SymFunc:
        padded = pad(core, n)
        if padded is None:
            return SymFunc.zero(n, basis)
        return SymFunc.basis_element(basis, padded)

    return SymFuncSequence(f"{basis}[{core.text()} padded]", gen, schur_positive=basis in ("s", "h"))


def alternating_sign_sequence() -> SymFuncSequence:
    """F_n = (-1)^n times the full-row Schur element; never stabilizes."""

    def gen(n: int) -> SymFunc:
        return SymFunc(n, "s", {Partition((n,)) if n else Partition(): QtPolynomial.from_scalar((-1) ** n)})

    return SymFuncSequence("alternating sign", gen)


def zero_sequence() -> SymFuncSequence:
    return SymFuncSequence("zero", lambda n: SymFunc.zero(n, "m"), weight_bound=0)
