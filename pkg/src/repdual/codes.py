"""Group codes H <= Gamma^n: closure from generators, projections, the
projection-cardinality polymatroid, the Tutte evaluation and both enumerators.

|H| and the projection cardinalities are kept as exact integers throughout;
the real-exponent rank r(S) = log_q|pr_S(H)| only ever appears inside the
floating Tutte evaluation.  Subsets of coordinates are bitmasks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import (
    CapExceeded,
    ClosureCapExceeded,
    DomainError,
    LengthMismatch,
    NotAGroup,
    PolymatroidViolation,
)
from .groups import ClassData, FiniteGroup, GroupWord, word_inv, word_mul, word_weight
from .polynomials import MultiPoly, UniPoly

DEFAULT_CODE_CAP = 10**6
RANK_PROFILE_MAX_N = 20


@dataclass(frozen=True)
class GroupCode:
    """Subgroup of Gamma^n stored as an explicit sorted word list."""

    group: FiniteGroup
    n: int
    words: tuple[GroupWord, ...]
    word_set: frozenset[GroupWord]

    @property
    def size(self) -> int:
        return len(self.words)

    def __contains__(self, word: GroupWord) -> bool:
        return word in self.word_set

    def __repr__(self):
        return f"GroupCode({self.group.name}^{self.n}, size={self.size})"


def _make_code(group: FiniteGroup, n: int, words) -> GroupCode:
    ws = tuple(sorted(words))
    return GroupCode(group, n, ws, frozenset(ws))


def code_from_generators(
    G: FiniteGroup, n: int, gens: list[GroupWord], cap: int = DEFAULT_CODE_CAP
) -> GroupCode:
    """BFS closure of the generating words (identity word included)."""
    for g in gens:
        if len(g) != n:
            raise LengthMismatch(f"generator {g} does not have length {n}")
    identity = (0,) * n
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                y = word_mul(G, w, g)
                if y not in seen:
                    if len(seen) >= cap:
                        raise ClosureCapExceeded("code closure", len(seen) + 1, cap)
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return _make_code(G, n, seen)


def code_from_words(
    G: FiniteGroup, n: int, words, validate: bool = True
) -> GroupCode:
    """Wrap an explicit word set; validate checks subgroup closure outright
    (skip it only for sets that are closed by construction)."""
    code = _make_code(G, n, set(words))
    if validate:
        if (0,) * n not in code.word_set:
            raise NotAGroup("word set lacks the identity word")
        for w in code.words:
            if word_inv(G, w) not in code.word_set:
                raise NotAGroup(f"word set not closed under inverse at {w}")
        for a in code.words:
            for b in code.words:
                if word_mul(G, a, b) not in code.word_set:
                    raise NotAGroup(f"word set not closed under product at {a},{b}")
    return code


def trivial_code(G: FiniteGroup, n: int) -> GroupCode:
    return _make_code(G, n, [(0,) * n])


def full_code(G: FiniteGroup, n: int, cap: int = DEFAULT_CODE_CAP) -> GroupCode:
    total = G.order**n
    if total > cap:
        raise ClosureCapExceeded("full code", total, cap)
    return _make_code(G, n, product(range(G.order), repeat=n))


def diagonal_code(G: FiniteGroup, n: int) -> GroupCode:
    return _make_code(G, n, [(g,) * n for g in range(G.order)])


# -- projections and the polymatroid -------------------------------------------


def _mask_coords(S: int, n: int) -> list[int]:
    return [m for m in range(n) if S >> m & 1]


def project_cardinality(code: GroupCode, S: int) -> int:
    """|pr_S(H)| for a coordinate-subset bitmask S."""
    coords = _mask_coords(S, code.n)
    if not coords:
        return 1
    return len({tuple(w[m] for m in coords) for w in code.words})


@dataclass(frozen=True)
class RankProfile:
    """card(S) = |pr_S(H)| over all 2^n bitmasks; q = |Gamma| is carried so
    the rank r(S) = log_q card(S) is recoverable."""

    n: int
    group_order: int
    card: tuple[int, ...]  # indexed by bitmask

    def rank(self, S: int) -> float:
        if self.group_order == 1:
            return 0.0
        return math.log(self.card[S]) / math.log(self.group_order)


def rank_profile(code: GroupCode) -> RankProfile:
    n = code.n
    if n > RANK_PROFILE_MAX_N:
        raise CapExceeded("rank profile subsets", 2**n, 2**RANK_PROFILE_MAX_N)
    card = [0] * (1 << n)
    card[0] = 1
    for S in range(1, 1 << n):
        card[S] = project_cardinality(code, S)
    # normalized, monotone, submodular (local exchange form)
    if card[0] != 1:
        raise PolymatroidViolation("card(empty set) != 1")
    for S in range(1 << n):
        for i in range(n):
            if S >> i & 1:
                continue
            if card[S | 1 << i] < card[S]:
                raise PolymatroidViolation(f"monotonicity fails at S={S}, i={i}")
            for j in range(i + 1, n):
                if S >> j & 1:
                    continue
                lhs = card[S | 1 << i] * card[S | 1 << j]
                rhs = card[S | 1 << i | 1 << j] * card[S]
                if lhs < rhs:
                    raise PolymatroidViolation(
                        f"submodularity fails at S={S}, i={i}, j={j}"
                    )
    return RankProfile(n, code.group.order, tuple(card))


def tutte_evaluate(rp: RankProfile, x: float, y: float) -> float:
    """Corank-nullity sum with real exponents, in double precision.

    T(x,y) = sum_S (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S)); the exponents are
    log-ratios of projection cardinalities and are irrational in general,
    hence the x,y > 1 domain."""
    if x <= 1 or y <= 1:
        raise DomainError(f"tutte_evaluate needs x > 1 and y > 1, got ({x}, {y})")
    n = rp.n
    full = (1 << n) - 1
    r_full = rp.rank(full)
    total = 0.0
    for S in range(1 << n):
        r_S = rp.rank(S)
        total += (x - 1.0) ** (r_full - r_S) * (y - 1.0) ** (bin(S).count("1") - r_S)
    return total


# -- enumerators -----------------------------------------------------------------


def weight_enumerator(code: GroupCode) -> UniPoly:
    """W_H(z) = sum over words of z^weight."""
    counts: dict[int, int] = {}
    for w in code.words:
        wt = word_weight(w)
        counts[wt] = counts.get(wt, 0) + 1
    return UniPoly({d: Fraction(c) for d, c in counts.items()})


def complete_weight_enumerator(code: GroupCode, classes: ClassData) -> MultiPoly:
    """cwe_H(y_1..y_k): coefficient of prod y_c^(e_c) counts the words whose
    coordinates hit class c exactly e_c times."""
    k = classes.num_classes
    cls = classes.class_of
    counts: dict[tuple[int, ...], int] = {}
    for w in code.words:
        e = [0] * k
        for x in w:
            e[cls[x]] += 1
        key = tuple(e)
        counts[key] = counts.get(key, 0) + 1
    return MultiPoly(k, {e: Fraction(c) for e, c in counts.items()})


def class_pattern_counts(code: GroupCode, classes: ClassData) -> dict[tuple[int, ...], int]:
    """Ordered class-pattern counts: pattern (cls(h_1),..,cls(h_n)) -> number
    of words with that exact pattern.  Finer than the cwe (which forgets
    coordinate order); this is what the Frobenius sum consumes."""
    cls = classes.class_of
    counts: dict[tuple[int, ...], int] = {}
    for w in code.words:
        key = tuple(cls[x] for x in w)
        counts[key] = counts.get(key, 0) + 1
    return counts
