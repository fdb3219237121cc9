import random
from fractions import Fraction

import pytest

from repdual.chartable import character_table
from repdual.codes import (
    code_from_generators,
    diagonal_code,
    full_code,
    trivial_code,
)
from repdual.duality import (
    decompose_permutation_character,
    dual_cwe,
    dual_multiset,
    dual_weight_enumerator,
    extension_lemma_check,
    permutation_character,
)
from repdual.errors import CapExceeded
from repdual.groups import cyclic_group, quaternion_group, symmetric_group
from repdual.polynomials import MultiPoly, UniPoly

S3 = symmetric_group(3)
CT3 = character_table(S3)


def example_code():
    # the order-6 cyclic subgroup of S3^2 generated by ((0 1), (0 1 2))
    return code_from_generators(S3, 2, [(1, 2)])


def test_example_dual_multiset():
    dm = dual_multiset(example_code(), CT3)
    # trivial = rho1, sign = rho2, 2-dim = rho3 (indices 0, 1, 2)
    assert dm.mult == {(0, 0): 1, (0, 1): 1, (2, 0): 1, (2, 1): 1}
    assert dm.total_dimension() == 6


def test_full_code_dual_is_trivial_tuple():
    for n in (1, 2, 3):
        dm = dual_multiset(full_code(S3, n), CT3)
        assert dm.mult == {(0,) * n: 1}


def test_trivial_code_dual_is_regular_representation():
    dm = dual_multiset(trivial_code(S3, 1), CT3)
    assert dm.mult == {(0,): 1, (1,): 1, (2,): 2}


def test_diagonal_s3_4_multiplicity():
    dm = dual_multiset(diagonal_code(S3, 4), CT3)
    assert dm.mult[(2, 2, 2, 2)] == 3


def test_tuple_cap():
    with pytest.raises(CapExceeded):
        dual_multiset(trivial_code(S3, 4), CT3, cap=10)


def test_example_permutation_character():
    pc = permutation_character(example_code(), CT3.classes)
    assert pc == {(0, 0): 6, (1, 0): 2, (0, 2): 6, (1, 2): 2}


def test_full_code_permutation_character_all_ones():
    pc = permutation_character(full_code(S3, 2), CT3.classes)
    assert pc == {tup: 1 for tup in pc}
    assert len(pc) == 9


def test_trivial_code_permutation_character_regular():
    pc = permutation_character(trivial_code(S3, 2), CT3.classes)
    assert pc == {(0, 0): 36}


def test_oracle_equivalence_spot():
    Q8 = quaternion_group()
    ctq = character_table(Q8)
    Z4 = cyclic_group(4)
    ctz = character_table(Z4)
    rng = random.Random("oracle")
    cases = [
        (example_code(), CT3),
        (diagonal_code(S3, 3), CT3),
        (full_code(Q8, 2), ctq),
        (trivial_code(Q8, 2), ctq),
        (diagonal_code(Z4, 3), ctz),
    ]
    for _ in range(3):
        w = tuple(rng.randrange(8) for _ in range(2))
        cases.append((code_from_generators(Q8, 2, [w]), ctq))
    for code, ct in cases:
        dm = dual_multiset(code, ct)
        pc = permutation_character(code, ct.classes)
        dm2 = decompose_permutation_character(pc, ct, code.n)
        assert dm2.mult == dm.mult


def test_dual_weight_enumerator():
    assert dual_weight_enumerator(dual_multiset(full_code(S3, 2), CT3)) == UniPoly({0: 1})
    assert dual_weight_enumerator(dual_multiset(example_code(), CT3)) == UniPoly(
        {0: 1, 1: 3, 2: 2}
    )
    assert dual_weight_enumerator(dual_multiset(trivial_code(S3, 1), CT3)) == UniPoly(
        {0: 1, 1: 5}
    )


def test_dual_weight_enumerator_at_one_counts_cosets():
    for code in (example_code(), diagonal_code(S3, 3), trivial_code(S3, 2)):
        W = dual_weight_enumerator(dual_multiset(code, CT3))
        assert W.evaluate(Fraction(1)) == 6**code.n // code.size


def test_dual_cwe_example():
    cwe = dual_cwe(dual_multiset(example_code(), CT3))
    assert cwe == MultiPoly(
        3, {(2, 0, 0): 1, (1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}
    )


def test_dual_cwe_full_code():
    assert dual_cwe(dual_multiset(full_code(S3, 2), CT3)) == MultiPoly(3, {(2, 0, 0): 1})


def test_dual_cwe_diagonal_s3_4():
    # the nine-term expansion for the diagonal code
    expected = MultiPoly(
        3,
        {
            (4, 0, 0): 1,
            (2, 2, 0): 6,
            (2, 0, 2): 6,
            (1, 1, 2): 12,
            (1, 0, 3): 4,
            (0, 4, 0): 1,
            (0, 2, 2): 6,
            (0, 1, 3): 4,
            (0, 0, 4): 3,
        },
    )
    assert dual_cwe(dual_multiset(diagonal_code(S3, 4), CT3)) == expected


def test_dual_cwe_dimension_weighted_specialization():
    # x_1 -> 1, x_j -> deg_j * z for j > 1 turns dual_cwe into the dual
    # weight enumerator (a plain x -> z substitution does not)
    for code in (example_code(), diagonal_code(S3, 4), trivial_code(S3, 2)):
        dm = dual_multiset(code, CT3)
        images = [(Fraction(1), 0)] + [
            (Fraction(dm.degrees[j]), 1) for j in range(1, dm.k)
        ]
        assert dual_cwe(dm).substitute_univariate(images) == dual_weight_enumerator(dm)


def test_extension_lemma_endpoints():
    code = example_code()
    dm = dual_multiset(code, CT3)
    full_mask = 0b11
    res = extension_lemma_check(code, dm, full_mask)
    assert res.passed and res.lhs == 1
    res = extension_lemma_check(code, dm, 0)
    assert res.passed and res.lhs == 6
    # S = {2} (second coordinate): tuples trivial there are 1x1 and tx1
    res = extension_lemma_check(code, dm, 0b10)
    assert res.passed and res.lhs == 3 == res.rhs


def test_extension_lemma_all_subsets():
    Q8 = quaternion_group()
    ctq = character_table(Q8)
    for code, ct in (
        (example_code(), CT3),
        (diagonal_code(S3, 3), CT3),
        (code_from_generators(Q8, 3, [(2, 4, 6)]), ctq),
    ):
        dm = dual_multiset(code, ct)
        for S in range(1 << code.n):
            assert extension_lemma_check(code, dm, S).passed


def test_coset_cap():
    with pytest.raises(CapExceeded):
        permutation_character(trivial_code(S3, 2), CT3.classes, coset_cap=10)
