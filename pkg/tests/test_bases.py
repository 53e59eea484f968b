import itertools
from fractions import Fraction

import pytest

from symstab.bases import (
    BASIS_TAGS,
    brick_count,
    brick_tiling_weight,
    brick_weight,
    change_of_basis_matrix,
    character,
    character_table,
    contingency_count,
    direct_pz_to_h,
    inverse_kostka,
    inverse_kostka_srht,
    kostka,
    matrix_multiply,
    normalize_basis_tag,
    ordered_brick_count,
    special_rim_hook_tableaux,
    ssyt_enumerate,
    stable_kostka,
    stable_pz_to_h,
)
from symstab.partitions import Partition, centralizer_order, pad, partitions_of, partitions_up_to_size

P = Partition


def test_basis_tags():
    assert normalize_basis_tag("p_over_z") == "p/z"
    assert normalize_basis_tag("S") == "s"
    with pytest.raises(ValueError):
        normalize_basis_tag("x")


# -- Kostka ------------------------------------------------------------


def test_kostka_examples():
    for lam in partitions_up_to_size(6):
        if lam:
            assert kostka(lam, lam) == 1
    assert kostka(P((2, 1)), P((1, 1, 1))) == 2
    assert kostka(P((4, 2)), P((2, 2, 1, 1))) == len(ssyt_enumerate(P((4, 2)), (2, 2, 1, 1)))
    with pytest.raises(ValueError):
        kostka(P((2,)), P((3,)))


def test_kostka_against_enumeration():
    for n in range(0, 7):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert kostka(lam, mu) == len(ssyt_enumerate(lam, tuple(mu))), (lam, mu)


def test_kostka_content_rearrangement_invariance():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                base = kostka(lam, mu)
                for arr in set(itertools.permutations(mu)):
                    assert len(ssyt_enumerate(lam, arr)) == base


# -- inverse Kostka ----------------------------------------------------


def test_inverse_kostka_examples():
    for mu in partitions_up_to_size(5):
        if mu:
            assert inverse_kostka(mu, mu) == 1
    for n in range(1, 8):
        assert inverse_kostka(P((n,)), P((1,) * n)) == (-1) ** (n - 1)


def test_srht_figure_decomposition():
    shape, content = P((5, 3, 3)), P((6, 4, 1))
    found = dict(special_rim_hook_tableaux(shape, content))
    target = frozenset(
        {
            frozenset({(1, 1)}),
            frozenset({(1, 2), (1, 3), (1, 4), (1, 5), (2, 1), (2, 2)}),
            frozenset({(2, 3), (3, 1), (3, 2), (3, 3)}),
        }
    )
    assert found[target] == 1


def test_srht_matches_matrix_inverse():
    for n in range(0, 7):
        for mu in partitions_of(n):
            for lam in partitions_of(n):
                assert inverse_kostka_srht(mu, lam) == inverse_kostka(mu, lam), (mu, lam)


# -- characters ---------------------------------------------------------


def test_character_examples():
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert character(P((n,)), mu) == 1
        assert character(P((1,) * n), P((n,))) == (-1) ** (n - 1)
    assert character(P((2, 1)), P((1, 1, 1))) == 2


def _schur_poly(lam, nvars):
    """Schur polynomial in nvars variables via tableau enumeration."""
    out = {}
    for content in itertools.product(range(0, sum(lam) + 1), repeat=nvars):
        if sum(content) != sum(lam):
            continue
        cnt = len(ssyt_enumerate(lam, content))
        if cnt:
            out[content] = out.get(content, 0) + cnt
    return out


def _mul_polys(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
            if out[key] == 0:
                del out[key]
    return out


def _power_sum_poly(mu, nvars):
    out = {(0,) * nvars: 1}
    for part in mu:
        factor = {}
        for i in range(nvars):
            key = tuple(part if j == i else 0 for j in range(nvars))
            factor[key] = 1
        out = _mul_polys(out, factor)
    return out


def test_character_via_polynomial_identity():
    # p_mu = sum_lam chi^lam_mu s_lam as honest polynomials in n variables
    for n in range(1, 6):
        schur = {lam: _schur_poly(lam, n) for lam in partitions_of(n)}
        for mu in partitions_of(n):
            lhs = _power_sum_poly(mu, n)
            rhs = {}
            for lam in partitions_of(n):
                chi = character(lam, mu)
                if chi:
                    for e, c in schur[lam].items():
                        rhs[e] = rhs.get(e, 0) + chi * c
                        if rhs[e] == 0:
                            del rhs[e]
            assert lhs == rhs, mu


def test_character_orthogonality():
    for n in range(1, 8):
        parts = partitions_of(n)
        for lam in parts:
            for rho in parts:
                total = sum(
                    Fraction(character(lam, mu) * character(rho, mu), centralizer_order(mu))
                    for mu in parts
                )
                assert total == (1 if lam == rho else 0)


def test_character_table_shape():
    table = character_table(3)
    assert table == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]


# -- bricks --------------------------------------------------------------


def test_brick_figure():
    # shape (5,3,3), bricks (3,2,2,2,1,1); the displayed tiling has rows
    # [1,2,2], [3], [2,1] from the bottom and weight 1*3*2 = 6
    assert brick_tiling_weight([[1, 2, 2], [3], [2, 1]]) == 6
    assert brick_count(P((3, 2, 2, 2, 1, 1)), P((5, 3, 3))) == 20
    assert brick_weight(P((3, 2, 2, 2, 1, 1)), P((5, 3, 3))) == 135


def test_brick_key_values():
    for k in range(1, 6):
        assert brick_weight(P((k, k)), P((k, k))) == k * k
        assert brick_weight(P((k + 1, k)), P((k + 1, k))) == (k + 1) * k
        assert ordered_brick_count(P((k, k)), P((k, k))) == 2
        assert ordered_brick_count(P((k + 1, k)), P((k + 1, k))) == 1
    assert ordered_brick_count(P((1, 1)), P((2,))) == 1


def _brute_ordered_brick(mu, lam):
    """Assign each indexed part of mu to an indexed part of lam."""
    count = 0
    for f in itertools.product(range(len(lam)), repeat=len(mu)):
        sums = [0] * len(lam)
        for part, target in zip(mu, f):
            sums[target] += part
        if sums == list(lam):
            count += 1
    return count


def test_ordered_brick_against_enumeration():
    for n in range(1, 7):
        for mu in partitions_of(n):
            for lam in partitions_of(n):
                assert ordered_brick_count(mu, lam) == _brute_ordered_brick(mu, lam), (mu, lam)


# -- contingency ---------------------------------------------------------


def _row_fillings(total, cols, cap):
    if cols == 0:
        if total == 0:
            yield ()
        return
    for v in range(min(total, cap) + 1):
        for rest in _row_fillings(total - v, cols - 1, cap):
            yield (v, *rest)


def _brute_contingency(lam, mu, boolean):
    cols = len(mu)
    count = 0
    options = [list(_row_fillings(r, cols, 1 if boolean else r)) for r in lam]
    for rows in itertools.product(*options):
        if all(sum(row[j] for row in rows) == mu[j] for j in range(cols)):
            count += 1
    return count


def test_contingency_examples():
    for n in range(1, 7):
        assert contingency_count(P((n,)), P((1,) * n), False) == 1
        assert contingency_count(P((n,)), P((1,) * n), True) == 1
    import math

    for n in range(1, 6):
        assert contingency_count(P((1,) * n), P((1,) * n), False) == math.factorial(n)
    assert contingency_count(P((2, 2)), P((2, 1, 1)), True) == _brute_contingency(
        (2, 2), (2, 1, 1), True
    )


def test_contingency_against_enumeration():
    for n in range(1, 6):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                for boolean in (False, True):
                    assert contingency_count(lam, mu, boolean) == _brute_contingency(
                        lam, mu, boolean
                    ), (lam, mu, boolean)


# -- stable coefficients ---------------------------------------------------


def test_stable_kostka_examples():
    for mu in partitions_up_to_size(5):
        if mu:
            assert stable_kostka(P((mu.size,)), mu) == 1
            assert stable_kostka(P(), mu) == 1
    assert stable_kostka(P((1, 1)), P((1, 1))) == kostka(P((2, 1, 1)), P((2, 1, 1)))
    assert stable_kostka(P((2, 1)), P((1, 1))) == 0


def test_stable_pz_examples():
    for k in range(1, 6):
        assert stable_pz_to_h(P((k,)), P((k,))) == 1
    assert stable_pz_to_h(P((2, 1)), P((1, 1))) == 0


def test_stable_pz_matches_direct():
    for lam in partitions_up_to_size(4):
        for mu in partitions_up_to_size(4):
            stable = stable_pz_to_h(lam, mu)
            for n in range(2 * mu.size + 1, 2 * mu.size + 5):
                assert direct_pz_to_h(lam, mu, n) == stable, (lam, mu, n)


# -- matrices ---------------------------------------------------------------


def test_round_trips_degree_6():
    from symstab.bases import _identity

    for deg in range(0, 7):
        for a, b in itertools.permutations(BASIS_TAGS, 2):
            fwd = change_of_basis_matrix(deg, a, b).raw
            back = change_of_basis_matrix(deg, b, a).raw
            assert matrix_multiply(fwd, back) == _identity(len(fwd)), (deg, a, b)


def test_schur_to_pz_is_character_matrix():
    for deg in range(0, 7):
        m = change_of_basis_matrix(deg, "s", "p/z")
        for lam in partitions_of(deg):
            for mu in partitions_of(deg):
                assert m.entry_scalar(lam, mu) == character(lam, mu)


def test_h_to_e_matches_signed_brick_counts():
    for deg in range(0, 7):
        m = change_of_basis_matrix(deg, "h", "e")
        for lam in partitions_of(deg):
            for mu in partitions_of(deg):
                sign = -1 if (deg - len(mu)) % 2 else 1
                assert m.entry_scalar(lam, mu) == sign * brick_count(mu, lam), (lam, mu)


def test_p_to_h_matches_signed_brick_weights():
    for deg in range(0, 7):
        m = change_of_basis_matrix(deg, "p", "h")
        for lam in partitions_of(deg):
            for mu in partitions_of(deg):
                sign = -1 if (len(lam) - len(mu)) % 2 else 1
                assert m.entry_scalar(lam, mu) == sign * brick_weight(mu, lam), (lam, mu)


def test_dual_adjoint_identity():
    # dual pairs: (h, m), (s, s), (p, p/z); if u = A f then g = A^T v.
    # The elementary basis is excluded: its dual mate is not one of the six.
    duals = {"h": "m", "m": "h", "s": "s", "p": "p/z", "p/z": "p"}
    for deg in range(0, 7):
        for u in duals:
            for f in duals:
                v, g = duals[u], duals[f]
                a = change_of_basis_matrix(deg, u, f).raw
                b = change_of_basis_matrix(deg, g, v).raw
                assert a == tuple(zip(*b)), (deg, u, f)


def test_cap_behavior():
    from symstab.bases import CapExceeded

    with pytest.raises(CapExceeded):
        change_of_basis_matrix(13, "s", "m")
    change_of_basis_matrix(13, "s", "m", cap=13)


def test_remark_expansion_terms():
    # h at the padded (1,1) family: monomial coefficients against inverse
    # Kostka entries reproduce the stable Schur coefficient 1 at n=3 and 4,
    # with different term lists (1,3,6)x(1,-2,1) and (1,3,7,4)x(1,-1,1,-1)
    from symstab.bases import padded_entry

    cases = {
        3: ([1, 3, 6], [1, -2, 1]),
        4: ([1, 3, 7, 4], [1, -1, 1, -1]),
    }
    core = P((1, 1))
    cores = [P(), P((1,)), P((1, 1)), P((2,))]
    for n, (want_d, want_k) in cases.items():
        ds, ks = [], []
        total = Fraction(0)
        for mu in cores:
            d = padded_entry("h", "m", core, mu, n)
            k = padded_entry("m", "s", mu, core, n)
            if d and k:
                ds.append(d)
                ks.append(k)
                total += d * k
        assert ds == want_d and ks == want_k, (n, ds, ks)
        assert total == 1
