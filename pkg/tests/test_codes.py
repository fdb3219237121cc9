from decimal import Decimal, getcontext
from fractions import Fraction

import pytest

from repdual.codes import (
    code_from_generators,
    complete_weight_enumerator,
    diagonal_code,
    full_code,
    project_cardinality,
    rank_profile,
    trivial_code,
    tutte_evaluate,
    weight_enumerator,
)
from repdual.errors import ClosureCapExceeded, DomainError, LengthMismatch
from repdual.groups import (
    conjugacy_classes,
    cyclic_group,
    symmetric_group,
)
from repdual.polynomials import MultiPoly, UniPoly

S3 = symmetric_group(3)

# H <= S3^2 generated by ((0 1),(0 1 2)); element indices in the canonical
# BFS order of S3: 0=(), 1=(0 1), 2=(0 1 2), 3=(1 2), 4=(0 2), 5=(0 2 1)
EX_H_WORDS = {(0, 0), (1, 2), (0, 5), (1, 0), (0, 2), (1, 5)}


def example_code():
    return code_from_generators(S3, 2, [(1, 2)])


def test_example_code_words():
    code = example_code()
    assert code.size == 6
    assert code.word_set == frozenset(EX_H_WORDS)


def test_empty_generators():
    code = code_from_generators(S3, 3, [])
    assert code.size == 1
    assert code.words == ((0, 0, 0),)


def test_diagonal_code():
    code = diagonal_code(S3, 4)
    assert code.size == 6
    assert all(len(set(w)) == 1 for w in code.words)
    gens = [(g,) * 4 for g in (1, 2)]
    assert code_from_generators(S3, 4, gens).word_set == code.word_set


def test_closure_cap():
    with pytest.raises(ClosureCapExceeded):
        full_code(S3, 4, cap=100)
    with pytest.raises(LengthMismatch):
        code_from_generators(S3, 2, [(1, 2, 3)])


def test_project_cardinality_example():
    code = example_code()
    assert project_cardinality(code, 0) == 1
    assert project_cardinality(code, 0b01) == 2  # first coordinate: {(), (0 1)}
    assert project_cardinality(code, 0b10) == 3
    assert project_cardinality(code, 0b11) == 6


def test_project_cardinality_diagonal():
    code = diagonal_code(S3, 4)
    for m in range(4):
        assert project_cardinality(code, 1 << m) == 6


def test_rank_profile_trivial_and_full():
    t = rank_profile(trivial_code(S3, 3))
    assert all(c == 1 for c in t.card)
    f = rank_profile(full_code(cyclic_group(2), 3))
    for S in range(8):
        assert f.card[S] == 2 ** bin(S).count("1")


def test_rank_profile_example():
    rp = rank_profile(example_code())
    assert rp.card[0b01] == 2 and rp.card[0b10] == 3 and rp.card[0b11] == 6


def test_tutte_trivial_code():
    rp = rank_profile(trivial_code(cyclic_group(2), 1))
    assert tutte_evaluate(rp, 2.0, 3.0) == pytest.approx(3.0, rel=1e-12)


def test_tutte_full_z2():
    rp = rank_profile(full_code(cyclic_group(2), 1))
    assert tutte_evaluate(rp, 2.0, 2.0) == pytest.approx(2.0, rel=1e-12)


def test_tutte_domain():
    rp = rank_profile(trivial_code(cyclic_group(2), 1))
    with pytest.raises(DomainError):
        tutte_evaluate(rp, 1.0, 2.0)
    with pytest.raises(DomainError):
        tutte_evaluate(rp, 2.0, 0.5)


def high_precision_tutte(rp, x: str, y: str) -> Decimal:
    """Independent 50-digit re-summation of the corank-nullity sum."""
    getcontext().prec = 50
    q = Decimal(rp.group_order)
    lnq = q.ln()
    xm, ym = Decimal(x) - 1, Decimal(y) - 1
    full = (1 << rp.n) - 1

    def rank(S):
        return Decimal(rp.card[S]).ln() / lnq

    total = Decimal(0)
    for S in range(1 << rp.n):
        corank = rank(full) - rank(S)
        nullity = Decimal(bin(S).count("1")) - rank(S)
        total += (corank * xm.ln()).exp() * (nullity * ym.ln()).exp()
    return total


def test_tutte_example_against_high_precision():
    rp = rank_profile(example_code())
    got = tutte_evaluate(rp, 2.0, 2.0)
    want = high_precision_tutte(rp, "2", "2")
    assert abs(Decimal(got) - want) <= abs(want) * Decimal("1e-12")


def test_weight_enumerator_trivial():
    assert weight_enumerator(trivial_code(S3, 3)) == UniPoly({0: 1})


def test_weight_enumerator_example_brute_force():
    # enumerate the six listed words and count identity coordinates directly
    hand_counts: dict[int, int] = {}
    for w in EX_H_WORDS:
        wt = sum(1 for x in w if x != 0)
        hand_counts[wt] = hand_counts.get(wt, 0) + 1
    assert hand_counts == {0: 1, 1: 3, 2: 2}
    assert weight_enumerator(example_code()) == UniPoly(
        {0: Fraction(1), 1: Fraction(3), 2: Fraction(2)}
    )


def test_weight_enumerator_diagonal():
    assert weight_enumerator(diagonal_code(S3, 4)) == UniPoly({0: 1, 4: 5})


def test_weight_enumerator_counts_size():
    for code in (example_code(), diagonal_code(S3, 3), full_code(S3, 2)):
        W = weight_enumerator(code)
        assert W.evaluate(Fraction(1)) == code.size
        assert W[0] >= 1


def test_cwe_diagonal():
    cd = conjugacy_classes(S3)
    for n in (2, 3, 4):
        cwe = complete_weight_enumerator(diagonal_code(S3, n), cd)
        assert cwe == MultiPoly(
            3, {(n, 0, 0): 1, (0, n, 0): 3, (0, 0, n): 2}
        )


def test_cwe_trivial_and_full():
    cd = conjugacy_classes(S3)
    assert complete_weight_enumerator(trivial_code(S3, 2), cd) == MultiPoly(3, {(2, 0, 0): 1})
    assert complete_weight_enumerator(full_code(S3, 1), cd) == MultiPoly(
        3, {(1, 0, 0): 1, (0, 1, 0): 3, (0, 0, 1): 2}
    )


def test_cwe_specializes_to_weight_enumerator():
    cd = conjugacy_classes(S3)
    cdz = conjugacy_classes(cyclic_group(4))
    cases = [
        (example_code(), cd),
        (diagonal_code(S3, 3), cd),
        (full_code(S3, 2), cd),
        (code_from_generators(cyclic_group(4), 3, [(1, 2, 0), (0, 2, 2)]), cdz),
    ]
    for code, classes in cases:
        cwe = complete_weight_enumerator(code, classes)
        images = [(Fraction(1), 0)] + [(Fraction(1), 1)] * (classes.num_classes - 1)
        assert cwe.substitute_univariate(images) == weight_enumerator(code)


def test_cwe_total_mass():
    cd = conjugacy_classes(S3)
    code = full_code(S3, 2)
    assert complete_weight_enumerator(code, cd).total() == 36
