import random
from fractions import Fraction

import pytest

from symstab.bases import character
from symstab.partitions import Partition, pad, partitions_of, partitions_up_to_size
from symstab.qt import QtPolynomial
from symstab.stability import (
    EXPECTED_TRANSFER_CONDITIONS,
    SymFuncSequence,
    alternating_sign_sequence,
    build_stability_report,
    character_stabilization,
    check_transfer_conditions,
    coefficient_stabilization,
    coinvariant_sequence,
    counterexample_sequence,
    dr_sequence,
    macdonald_sequence,
    observed_range,
    padded_basis_sequence,
    schur_agreement_from_monomial_agreement,
    schur_range_from_monomial,
    sequence_weight,
    zero_sequence,
)
from symstab.symfunc import SymFunc

P = Partition
ONE = QtPolynomial.one()


def test_observed_range_padded_family():
    seq = padded_basis_sequence("s", P((2, 1)))
    r = observed_range(seq, "s", P((2, 1)), 10)
    assert r.stable_from == 5 and r.stable_value == ONE
    # the coefficient is zero before the pad exists, so the range is the
    # first defined degree
    assert observed_range(seq, "s", P((1,)), 10).stable_from == 0


def test_observed_range_unstable():
    r = observed_range(alternating_sign_sequence(), "s", P(), 10)
    assert r.stable_from is None and r.stable_value is None
    with pytest.raises(ValueError):
        observed_range(zero_sequence(), "m", P((3,)), 5)


def test_zero_sequence():
    r = observed_range(zero_sequence(), "m", P(), 8)
    assert r.stable_from == 0 and r.stable_value == QtPolynomial.zero()
    assert sequence_weight(zero_sequence(), "m", 6) == (0, True)


def test_weight_examples():
    seq = padded_basis_sequence("s", P((2, 1)))
    assert sequence_weight(seq, "s", 8) == (3, True)
    # Schur-side weight of a graded coinvariant component is the grade,
    # while its monomial support keeps growing with the horizon
    assert sequence_weight(coinvariant_sequence(2), "s", 8)[0] == 2
    assert sequence_weight(coinvariant_sequence(2), "m", 8)[0] == 7


def test_weight_transfer_equalities():
    # observed weights agree between s and h, and between m and p
    rng = random.Random(11)
    for _ in range(6):
        degree_coeffs = {}
        for n in range(0, 8):
            coeffs = {}
            for lam in partitions_of(n):
                if rng.random() < 0.3:
                    coeffs[lam] = QtPolynomial.from_scalar(rng.randint(1, 3))
            degree_coeffs[n] = SymFunc(n, "s", coeffs)
        seq = SymFuncSequence("random", lambda n, d=degree_coeffs: d[n])
        ws = sequence_weight(seq, "s", 7)[0]
        wh = sequence_weight(seq, "h", 7)[0]
        wm = sequence_weight(seq, "m", 7)[0]
        wp = sequence_weight(seq, "p", 7)[0]
        assert ws == wh
        assert wm == wp


def test_coefficient_stabilization_values():
    n0, val = coefficient_stabilization("p/z", "h", P((2,)), P((2,)), 12)
    assert (n0, val) == (5, Fraction(1))
    for k in range(1, 5):
        n0, val = coefficient_stabilization("p/z", "h", P((k,)), P((k,)), 12)
        assert n0 == 2 * k + 1 and val == 1
    assert coefficient_stabilization("s", "e", P(), P(), 12) == (None, None)
    with pytest.raises(ValueError):
        coefficient_stabilization("s", "m", P((6,)), P(), 10)


def test_kostka_stabilization_sharpness():
    for musz in range(1, 4):
        for mu in partitions_of(musz):
            observed = []
            for lamsz in range(0, musz + 1):
                for lam in partitions_of(lamsz):
                    n0, _ = coefficient_stabilization("s", "m", lam, mu, 2 * musz + 4)
                    assert n0 is not None and n0 <= 2 * musz
                    observed.append(n0)
            assert max(observed) == 2 * musz, mu


def test_transfer_conditions_match_expected_small():
    # a size-2 box with horizon 9 already witnesses every classification
    for (frm, to), expected in EXPECTED_TRANSFER_CONDITIONS.items():
        rep = check_transfer_conditions(frm, to, 2, 9)
        empirical = {i for i, c in rep.conditions().items() if c.holds_empirically}
        assert empirical == set(expected), (frm, to, empirical, expected)
        assert rep.consistent
        for i, check in rep.conditions().items():
            if not check.holds_empirically:
                assert check.witness is not None


def test_transfer_support_invariants():
    from symstab.bases import padded_entry

    for frm, to in [("s", "m"), ("m", "s"), ("p/z", "h"), ("h", "p/z")]:
        for lam in partitions_up_to_size(3):
            for mu in partitions_up_to_size(3):
                if lam.size > mu.size:
                    for n in range(0, 11):
                        assert padded_entry(frm, to, lam, mu, n) == 0, (frm, to, lam, mu, n)
    for frm, to in [("p", "m"), ("m", "p"), ("h", "s"), ("s", "h")]:
        for lam in partitions_up_to_size(3):
            for mu in partitions_up_to_size(3):
                if mu.size > lam.size:
                    for n in range(0, 11):
                        assert padded_entry(frm, to, lam, mu, n) == 0, (frm, to, lam, mu, n)


def test_counterexample_fixture():
    V = counterexample_sequence()
    stable = {(): 2, (1,): 0, (2,): 0, (1, 1): 0}
    for mu, value in stable.items():
        for n in range(4, 11):
            assert V.coefficient(n, "p/z", P(mu)) == QtPolynomial.from_scalar(value)
        r = character_stabilization(V, P(mu), 10)
        assert r.stable_from is not None and r.stable_from <= 4
    # yet the Schur coefficient in the (2)-padded family jumps at n=5
    assert V.coefficient(4, "s", P((2,))) == ONE
    for n in range(5, 11):
        assert V.coefficient(n, "s", P((2,))).is_zero()
    r = observed_range(V, "s", P((2,)), 10)
    assert r.stable_from == 5


def test_counterexample_character_values():
    # the degree-4 character vector is the same as the stable one
    table = {(): 2, (1,): 0, (2,): 0, (1, 1): 0}
    for mu, want in table.items():
        mu4 = pad(P(mu), 4)
        total = (
            character(P((2, 2)), mu4)
            + character(P((3, 1)), mu4)
            + character(P((4,)), mu4)
            + 2 * character(P((2, 1, 1)), mu4)
        )
        assert total == want


def test_schur_range_coinvariants():
    for i in range(0, 4):
        seq = coinvariant_sequence(i)
        for lam in partitions_up_to_size(i):
            entry = schur_range_from_monomial(seq, lam, 12)
            assert entry.certified
            assert entry.proven_bound == max(2 * lam.size, lam.size + i)
            assert entry.observed.stable_from <= entry.improved_bound


def test_schur_range_rejects_negative():
    seq = SymFuncSequence(
        "not positive",
        lambda n: SymFunc(n, "m", {P((n,)) if n else P(): QtPolynomial.from_scalar(1)}),
        m_range_bound=lambda mu: mu.size + 1,
    )
    # m[n] alone is not Schur positive for n >= 2
    with pytest.raises(ValueError):
        schur_range_from_monomial(seq, P((1,)), 8)


def test_early_schur_stabilization_example():
    # the h-element family over core (1,1): the Schur coefficient at the
    # same core stabilizes at n=3, earlier than the generic bound 4
    seq = padded_basis_sequence("h", P((1, 1)))
    entry = schur_range_from_monomial(seq, P((1, 1)), 10)
    assert entry.observed.stable_from == 3
    assert entry.observed.stable_value == ONE


def test_kvec_trivial_and_coinvariant():
    z5, z6 = SymFunc.zero(5, "s"), SymFunc.zero(6, "s")
    assert schur_agreement_from_monomial_agreement(z5, z6, 3) == (True, True)
    seq = coinvariant_sequence(2)
    hyp, concl = schur_agreement_from_monomial_agreement(seq.term(6), seq.term(7), 2)
    assert hyp and concl
    with pytest.raises(ValueError):
        schur_agreement_from_monomial_agreement(z5, SymFunc.zero(7, "s"), 2)


def test_kvec_randomized():
    rng = random.Random(20240809)
    violations = 0
    for trial in range(200):
        n = rng.randint(2, 6)
        coeffs_n, coeffs_n1 = {}, {}
        share = rng.random() < 0.5
        for lam in partitions_up_to_size(n // 2 + 1):
            c = rng.randint(0, 5)
            if c and pad(lam, n) is not None:
                coeffs_n[pad(lam, n)] = QtPolynomial.from_scalar(c)
            c2 = c if share else rng.randint(0, 5)
            if c2 and pad(lam, n + 1) is not None:
                coeffs_n1[pad(lam, n + 1)] = QtPolynomial.from_scalar(c2)
        f_n = SymFunc(n, "s", coeffs_n)
        f_n1 = SymFunc(n + 1, "s", coeffs_n1)
        for a in range(0, 4):
            hyp, concl = schur_agreement_from_monomial_agreement(f_n, f_n1, a)
            if hyp and not concl:
                violations += 1
    assert violations == 0


def test_build_report_dr():
    seq = dr_sequence(1, 1)
    report = build_stability_report(seq, "s", 10)
    assert report.uniform_proven == 4
    assert report.certified_uniform
    assert report.observed_weight <= 2
    for lam, entry in report.per_lambda.items():
        if lam.size > 2:
            value = entry["observed"].stable_value
            assert value is None or value.is_zero()
    doc = report.to_json()
    assert doc["uniform_proven"] == 4


def test_macdonald_sequence_hooks():
    seq = macdonald_sequence(P((1,)), 1, 0)
    # monomial coefficients come from single-content scans and match the
    # full expansion
    for n in range(2, 7):
        full = seq.term(n)
        for eta in partitions_up_to_size(2):
            padded = pad(eta, n)
            if padded is None:
                continue
            assert seq.coefficient(n, "m", eta) == full.coefficient("m", padded)
