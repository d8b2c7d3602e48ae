from collections import Counter

import pytest

from glambda.exactcore import HPoly, LAMBDA, QuasiPolynomial
from glambda.modchar import (
    PAPER, STANDARD, Partition, char_poly, character_report, derived_roots, gen_fun, hooks,
    partitions, q_character, telescoped,
)

from oracles import hooks_by_diagram

HP = HPoly.gen()
L = LAMBDA


def test_partition_validation():
    assert Partition((3, 1, 1)).size() == 5
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition.parse("3,1,1") == Partition((3, 1, 1))
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_hooks_examples():
    assert hooks(Partition((1,))) == Counter({1: 1})
    assert hooks(Partition((2,))) == Counter({2: 1, 1: 1})
    assert hooks(Partition((2, 1))) == Counter({3: 1, 1: 2})
    for n in range(1, 8):
        for nu in partitions(n):
            assert sorted(hooks(nu).elements()) == hooks_by_diagram(nu.parts)


def test_gen_fun_examples():
    assert gen_fun(Partition((1,))) == QuasiPolynomial.exp(L - 1)
    assert gen_fun(Partition((1, 1))) == QuasiPolynomial([(L - 1, 1), (L - 3, 1)])
    assert gen_fun(Partition((2,))) == QuasiPolynomial.exp(L - 1, 2)


def test_char_poly_examples():
    c = char_poly(Partition((1,)))
    assert c.stated == HP - L - 3
    assert c.derived == HP - L + 3
    assert not c.match and c.match_up_to_sign
    assert char_poly(Partition((1, 1))).derived == HP - L + 5


def test_telescoped_matches_corrected_formula():
    """nu_1 e^{(l-1)t} + sum (nu_{i+1}-nu_i) e^{(l-2i-1)t} - nu_n e^{(l-2n-1)t}."""
    for n in range(1, 7):
        for nu in partitions(n):
            p = nu.parts
            terms = [(L - 1, p[0])]
            terms += [(L - 2 * i - 1, p[i] - p[i - 1]) for i in range(1, len(p))]
            terms.append((L - 2 * len(p) - 1, -p[-1]))
            assert telescoped(nu) == QuasiPolynomial(terms)


def test_derived_roots_count_and_sign():
    for n in range(1, 7):
        for nu in partitions(n):
            roots = derived_roots(nu)
            assert len(roots) == len(set(nu.parts))
            cp = char_poly(nu)
            assert cp.derived.degree() == len(roots)
            assert not cp.match
            assert cp.match_up_to_sign


def test_repeated_part():
    nu = Partition((3, 3, 3, 1))
    assert len(derived_roots(nu)) == 2
    assert char_poly(nu).derived == (HP - L + 7) * (HP - L + 9)


def test_q_character_examples():
    q = q_character(Partition((1,)), STANDARD, 8)
    assert (q.a_power, q.q_shift, q.hook_denominator) == (1, 0, (1,))
    assert q.series == (1,) * 9
    q = q_character(Partition((2,)), STANDARD, 6)
    assert (q.a_power, q.q_shift, sorted(q.hook_denominator)) == (2, 0, [1, 2])
    assert q.series == (1, 1, 2, 2, 3, 3, 4)
    q = q_character(Partition((1, 1)), STANDARD, 6)
    assert (q.a_power, q.q_shift) == (2, 1)
    assert q.series == (0, 1, 1, 2, 2, 3, 3)
    assert str(q_character(Partition((1,)))) == "a/((1-q))"


def test_q_character_conventions():
    nu = Partition((2, 1))
    assert q_character(nu, STANDARD).q_shift == 1
    assert q_character(nu, PAPER).q_shift == 3
    with pytest.raises(ValueError):
        q_character(nu, "other")


def test_principal_specialization():
    """Standard convention equals s_nu(1, q, q^2, ...) computed from semistandard tableaux."""
    from itertools import product

    def tableaux_count(parts, max_entry, weight):
        cells = [(i, j) for i, r in enumerate(parts) for j in range(r)]
        count = 0
        for vals in product(range(max_entry + 1), repeat=len(cells)):
            t = dict(zip(cells, vals))
            if sum(vals) != weight:
                continue
            ok = all(t[(i, j)] <= t[(i, j + 1)] for (i, j) in cells if (i, j + 1) in t)
            ok = ok and all(t[(i, j)] < t[(i + 1, j)] for (i, j) in cells if (i + 1, j) in t)
            count += ok
        return count

    for parts in [(1,), (2,), (1, 1), (2, 1), (3,)]:
        series = q_character(Partition(parts), STANDARD, 5).series
        assert list(series) == [tableaux_count(parts, 5, w) for w in range(6)]


def test_character_report_keys():
    r = character_report(Partition((2, 1)), 4)
    assert r["match"] is False and r["match_up_to_sign"] is True
    assert r["conventions_agree"] is False
    assert r["q_series_standard"] == [0, 1, 2, 3, 5]
