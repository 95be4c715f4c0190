import itertools
from fractions import Fraction

import pytest

from ycalc.partitions import Partition, enumerate_partitions
from ycalc.series import comb_int
from ycalc.symfunc import (
    Specialization,
    b0_alphabet_checks,
    chi_experiment,
    complete,
    elementary,
    monomial,
    monomial_expand,
    newton_convert,
    p_nk,
    p_nk_monomial_expansion,
    p_npk,
    power_sum,
)

ALPHABET = tuple(Fraction(v) for v in (2, Fraction(1, 3), -1, Fraction(5, 7)))


def test_power_sum():
    assert power_sum(ALPHABET, 1) == sum(ALPHABET)
    assert power_sum((Fraction(2), Fraction(-2)), 2) == 8
    with pytest.raises(ValueError):
        power_sum(ALPHABET, 0)


def test_elementary_bruteforce():
    for k in range(6):
        want = sum(
            (
                Fraction(1) * _prod(sub)
                for sub in itertools.combinations(ALPHABET, k)
            ),
            Fraction(0),
        )
        assert elementary(ALPHABET, k) == want
    assert elementary(ALPHABET, len(ALPHABET) + 1) == 0


def _prod(vals):
    out = Fraction(1)
    for v in vals:
        out *= v
    return out


def test_complete_bruteforce():
    for k in range(5):
        want = sum(
            (
                _prod(sub)
                for sub in itertools.combinations_with_replacement(ALPHABET, k)
            ),
            Fraction(0),
        )
        assert complete(ALPHABET, k) == want


def test_monomial_bruteforce():
    a = ALPHABET[:3]
    # m_(2,1) on three letters: sum over ordered pairs of distinct letters
    want = sum(
        (x**2 * y for x, y in itertools.permutations(a, 2)), Fraction(0)
    )
    assert monomial(a, Partition((2, 1))) == want
    assert monomial(a, Partition((1, 1, 1, 1))) == 0  # longer than the alphabet
    assert monomial(a, Partition(())) == 1


def test_monomial_sums_to_complete():
    for n in range(1, 5):
        total = sum(
            (monomial(ALPHABET, mu) for mu in enumerate_partitions(n)), Fraction(0)
        )
        assert total == complete(ALPHABET, n)


def test_newton_convert():
    for k in range(1, 6):
        sides = newton_convert(ALPHABET, k)
        assert sides["e"][0] == sides["e"][1]
        assert sides["h"][0] == sides["h"][1]


def test_p_npk_conventions():
    spec = Specialization.power_sums(ALPHABET)
    assert p_npk(0, 0, 0, spec) == 1
    assert p_npk(3, 1, 0, spec) == 0
    assert p_npk(3, 1, 5, spec) == 0
    with pytest.raises(ValueError, match="p out of range"):
        p_npk(3, 4, 2, spec)
    with pytest.raises(ValueError):
        p_npk(3, 0, -1, spec)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 7) for k in range(1, n + 1)])
def test_p_nk_single_letter_closed_form(n, k):
    # on a one-letter alphabet {x} the unmarked family collapses to
    # C(n-1, k-1) x^n
    x = Fraction(4, 7)
    spec = Specialization.power_sums((x,))
    assert p_nk(n, k, spec) == comb_int(n - 1, k - 1) * x**n


def test_p_npk_marking_symmetry():
    spec = Specialization.power_sums(ALPHABET)
    for n in range(1, 6):
        for p in range(n + 1):
            for k in range(1, n + 1):
                assert p_npk(n, p, k, spec) == p_npk(n, n - p, k, spec)


def test_specialization_from_values():
    spec = Specialization.from_values(3, (Fraction(1), Fraction(2)))
    assert spec.xk(2) == 2
    with pytest.raises(ValueError):
        spec.xk(3)


def test_monomial_expand_recovers_classical_bases():
    size = 4
    for n in range(1, 5):
        h_coeffs = monomial_expand(lambda a: complete(a, n), n, size)
        assert all(c == 1 for c in h_coeffs.values())
        e_coeffs = monomial_expand(lambda a: elementary(a, n), n, size)
        for mu, c in e_coeffs.items():
            assert c == (1 if mu.parts == (1,) * n else 0)


@pytest.mark.parametrize("n,k", [(2, 1), (3, 2), (4, 2), (4, 4)])
def test_p_nk_monomial_support_law(n, k):
    a = tuple(Fraction(v) for v in (2, 3, 5, 7))
    coeffs = p_nk_monomial_expansion(n, k, a)
    for mu, c in coeffs.items():
        assert c == (Fraction((-1) ** k) if mu.length == k else 0)


def test_p_nk_monomial_expansion_needs_enough_letters():
    with pytest.raises(ValueError, match="need >= n generic elements"):
        p_nk_monomial_expansion(4, 2, (Fraction(1), Fraction(2)))


def test_chi_experiment_small():
    report = chi_experiment(3, 3)
    assert not report.support_violations
    assert report.all_match()
    judged = [r for r in report.rows if r.match is not None]
    assert judged and all(r.match for r in judged)
    # every row records the shape it decorates
    for r in report.rows:
        assert r.mu.length == r.k
        assert r.mu.weight == r.n


def test_chi_rows_beyond_p3_carry_no_verdict():
    report = chi_experiment(4, 4)
    open_rows = [r for r in report.rows if r.p > 3]
    assert open_rows
    assert all(r.chi_conjectured is None and r.match is None for r in open_rows)


def test_b0_checks_pass_on_generic_alphabet():
    rows = b0_alphabet_checks((Fraction(1, 2), Fraction(1, 3)), order=6)
    assert rows
    bases = {r.basis for r in rows}
    assert bases == {"p", "h", "e"}
    for row in rows:
        assert row.equal, (row.k, row.basis)


def test_b0_rejects_unit_element():
    with pytest.raises(ValueError, match="pole in B0"):
        b0_alphabet_checks((Fraction(1),), order=4)
