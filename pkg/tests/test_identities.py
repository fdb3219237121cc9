import random
from fractions import Fraction

import pytest

from repdual.chartable import character_table
from repdual.codes import (
    code_from_generators,
    code_from_words,
    diagonal_code,
    full_code,
    trivial_code,
)
from repdual.duality import dual_multiset, dual_weight_enumerator
from repdual.errors import DomainError, NotAGroup
from repdual.groups import (
    cyclic_group,
    dihedral_group,
    quaternion_group,
    symmetric_group,
)
from repdual.identities import (
    abelian_basis,
    abelian_pairing_exponents,
    classical_dual_code,
    greene_subset_form_H,
    greene_subset_form_dual,
    macwilliams1_rhs,
    macwilliams2_transform,
    verify_abelian_specialization,
    verify_all,
    verify_extension_lemma,
    verify_greene,
    verify_macwilliams1,
    verify_macwilliams2,
)
from repdual.polynomials import MultiPoly, UniPoly

S3 = symmetric_group(3)
Z2 = cyclic_group(2)


def example_code():
    return code_from_generators(S3, 2, [(1, 2)])


def test_greene_subset_form_full_z2():
    code = full_code(Z2, 1)
    # S=empty contributes 2t, S={1} contributes (1-t): total 1 + t = W_H
    assert greene_subset_form_H(code) == UniPoly({0: 1, 1: 1})
    assert greene_subset_form_H(code) == UniPoly(
        {d: Fraction(c) for d, c in {0: 1, 1: 1}.items()}
    )


def test_greene_subset_form_trivial_collapses():
    for n in (1, 2, 3):
        code = trivial_code(S3, n)
        assert greene_subset_form_H(code) == UniPoly({0: 1})


def test_greene_subset_form_dual_full_code():
    assert greene_subset_form_dual(full_code(S3, 2)) == UniPoly({0: 1})


def test_greene_example_both_sides_independent():
    code = example_code()
    ct = character_table(S3)
    assert greene_subset_form_H(code) == UniPoly({0: 1, 1: 3, 2: 2})
    assert greene_subset_form_dual(code) == dual_weight_enumerator(dual_multiset(code, ct))


def test_verify_greene():
    for code in (
        example_code(),
        trivial_code(S3, 2),
        full_code(S3, 2),
        trivial_code(Z2, 3),
        full_code(Z2, 3),
        diagonal_code(S3, 4),
    ):
        res = verify_greene(code)
        assert res.passed, res.details


def test_macwilliams1_repetition_code():
    code = code_from_generators(Z2, 2, [(1, 1)])
    rhs = macwilliams1_rhs(code)
    # (1/2)((1+z)^2 + (1-z)^2) = 1 + z^2
    assert rhs == UniPoly({0: 1, 2: 1})
    assert verify_macwilliams1(code).passed


def test_macwilliams1_trivial_code_gives_full_transform():
    code = trivial_code(S3, 2)
    assert macwilliams1_rhs(code) == (UniPoly.one() + 5 * UniPoly.monomial(1)) ** 2
    assert verify_macwilliams1(code).passed


def test_macwilliams2_full_code_gamma1():
    res = verify_macwilliams2(full_code(S3, 1))
    assert res.passed, res.details
    assert macwilliams2_transform(full_code(S3, 1), character_table(S3)) == MultiPoly(
        3, {(1, 0, 0): 1}
    )


def diagonal_cwe_closed_form(n: int) -> MultiPoly:
    """(1/6)((x1+x2+2x3)^n + 3(x1-x2)^n + 2(x1+x2-x3)^n), built directly."""
    one = Fraction(1)
    a = MultiPoly(3, {(1, 0, 0): one, (0, 1, 0): one, (0, 0, 1): Fraction(2)})
    b = MultiPoly(3, {(1, 0, 0): one, (0, 1, 0): -one})
    c = MultiPoly(3, {(1, 0, 0): one, (0, 1, 0): one, (0, 0, 1): -one})
    total = a**n + 3 * b**n + 2 * c**n
    return total.map_coefficients(lambda v: v / 6)


def test_macwilliams2_diagonal_closed_form():
    ct = character_table(S3)
    for n in (2, 3, 4):
        code = diagonal_code(S3, n)
        assert macwilliams2_transform(code, ct) == diagonal_cwe_closed_form(n)
        assert verify_macwilliams2(code, ct).passed


def test_macwilliams2_example_code():
    res = verify_macwilliams2(example_code())
    assert res.passed, res.details
    got = macwilliams2_transform(example_code(), character_table(S3))
    assert got == MultiPoly(3, {(2, 0, 0): 1, (1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})


def test_extension_lemma_verifier():
    for code in (example_code(), diagonal_code(S3, 3), full_code(Z2, 3)):
        assert verify_extension_lemma(code).passed


def test_abelian_basis_cyclic_and_product():
    basis, orders = abelian_basis(cyclic_group(6))
    assert orders == [6]
    from repdual.groups import product_group

    K4 = product_group([cyclic_group(2), cyclic_group(2)])
    basis, orders = abelian_basis(K4)
    assert sorted(orders) == [2, 2]
    with pytest.raises(DomainError):
        abelian_basis(S3)


def test_pairing_z4():
    Z4 = cyclic_group(4)
    eps = abelian_pairing_exponents(Z4)
    for x in range(4):
        for y in range(4):
            assert eps[x][y] == (x * y) % 4


def test_classical_dual_z4():
    Z4 = cyclic_group(4)
    eps = abelian_pairing_exponents(Z4)
    code = code_from_generators(Z4, 2, [(1, 1)])
    dual = classical_dual_code(code, eps)
    # brute force over all 16 pairs: a + b = 0 mod 4
    expected = {(a, b) for a in range(4) for b in range(4) if (a + b) % 4 == 0}
    assert dual.word_set == expected


def test_classical_dual_z2_repetition_self_dual():
    eps = abelian_pairing_exponents(Z2)
    code = code_from_generators(Z2, 2, [(1, 1)])
    assert classical_dual_code(code, eps).word_set == code.word_set


def test_classical_dual_trivial_z6():
    Z6 = cyclic_group(6)
    eps = abelian_pairing_exponents(Z6)
    dual = classical_dual_code(trivial_code(Z6, 1), eps)
    assert dual.size == 6


def test_verify_abelian_specialization():
    for G, n, gens in (
        (Z2, 2, [(1, 1)]),
        (cyclic_group(4), 2, [(1, 1)]),
        (cyclic_group(4), 3, [(1, 2, 0)]),
        (cyclic_group(6), 1, []),
        (cyclic_group(6), 2, [(2, 3)]),
    ):
        code = code_from_generators(G, n, gens)
        res = verify_abelian_specialization(code)
        assert res.passed, (G.name, n, res.details)
    with pytest.raises(DomainError):
        verify_abelian_specialization(trivial_code(S3, 1))


def test_verify_all_nonabelian_sample():
    rng = random.Random("suite")
    Q8 = quaternion_group()
    D4 = dihedral_group(4)
    cases = [
        example_code(),
        diagonal_code(Q8, 2),
        code_from_generators(D4, 3, [(1, 3, 5)]),
        full_code(D4, 2),
    ]
    for _ in range(2):
        w = tuple(rng.randrange(8) for _ in range(3))
        cases.append(code_from_generators(Q8, 3, [w]))
    for code in cases:
        for res in verify_all(code):
            assert res.passed, (code, res.name, res.details)


def test_code_from_words_validation():
    words = {(0, 0), (1, 2)}  # not closed
    with pytest.raises(NotAGroup):
        code_from_words(S3, 2, words)


def test_verify_all_product_groups_and_trivial_gamma():
    from repdual.groups import group_from_generators, product_group

    K4 = product_group([cyclic_group(2), cyclic_group(2)])
    Z2xZ4 = product_group([cyclic_group(2), cyclic_group(4)])
    cases = [
        code_from_generators(K4, 2, [(1, 2)]),
        code_from_generators(Z2xZ4, 2, [(1, 5), (4, 2)]),
        diagonal_code(symmetric_group(4), 2),
        trivial_code(group_from_generators([]), 3),
    ]
    for code in cases:
        for res in verify_all(code):
            assert res.passed, (code, res.name, res.details)


def test_macwilliams1_endpoints_count_cosets():
    # both sides of the identity evaluate to |Gamma|^n / |H| at z = 1
    for code in (example_code(), diagonal_code(S3, 3), full_code(Z2, 2), trivial_code(Z2, 3)):
        cosets = code.group.order**code.n // code.size
        ct = character_table(code.group)
        Wd = dual_weight_enumerator(dual_multiset(code, ct))
        assert Wd.evaluate(Fraction(1)) == cosets
        assert macwilliams1_rhs(code).evaluate(Fraction(1)) == cosets
