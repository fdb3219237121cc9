"""Sparse exact polynomials: univariate over Q and multivariate over Q or a
cyclotomic field.

UniPoly maps degree -> Fraction; MultiPoly maps a length-k exponent tuple to a
coefficient that is either a Fraction or a Cyclotomic (the latter only while a
MacWilliams substitution is in flight).  Zero coefficients are never stored,
so equality is plain dict equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .cyclotomic import Cyclotomic


def _is_zero(c) -> bool:
    if isinstance(c, Cyclotomic):
        return c.is_zero()
    return c == 0


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Fraction] | None = None):
        self.coeffs: dict[int, Fraction] = {}
        if coeffs:
            for d, c in coeffs.items():
                c = Fraction(c)
                if c:
                    self.coeffs[d] = c

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly()

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly({0: Fraction(1)})

    @staticmethod
    def monomial(degree: int, coeff=1) -> "UniPoly":
        return UniPoly({degree: Fraction(coeff)})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly({0: Fraction(other)})
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def __getitem__(self, d: int) -> Fraction:
        return self.coeffs.get(d, Fraction(0))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly({0: Fraction(other)})
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            s = out.get(d, Fraction(0)) + c
            if s:
                out[d] = s
            else:
                out.pop(d, None)
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly({d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly({0: Fraction(other)})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return UniPoly({d: c * q for d, c in self.coeffs.items()}) if q else UniPoly()
        out: dict[int, Fraction] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                s = out.get(d, Fraction(0)) + c1 * c2
                if s:
                    out[d] = s
                else:
                    out.pop(d, None)
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        result = UniPoly.one()
        for _ in range(e):
            result = result * self
        return result

    def evaluate(self, x):
        """Exact for Fraction input, floating for float input."""
        total = x * 0
        for d, c in self.coeffs.items():
            total += (c if isinstance(x, Fraction) else float(c)) * x**d
        return total

    def render(self, var: str = "z") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in sorted(self.coeffs):
            c = self.coeffs[d]
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                power = var if d == 1 else f"{var}^{d}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"UniPoly({self.render()})"

    def to_json(self) -> list:
        return [[d, str(self.coeffs[d])] for d in sorted(self.coeffs)]


class MultiPoly:
    """Polynomial in nvars variables; keys are exponent tuples."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], object] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent tuple {e} has wrong length")
                if not _is_zero(c):
                    self.terms[e] = c

    @staticmethod
    def zero(nvars: int) -> "MultiPoly":
        return MultiPoly(nvars)

    @staticmethod
    def constant(nvars: int, c) -> "MultiPoly":
        return MultiPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def variable(nvars: int, i: int) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return MultiPoly(nvars, {tuple(e): Fraction(1)})

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.nvars != other.nvars or set(self.terms) != set(other.terms):
            return False
        return all(_is_zero(self.terms[e] - other.terms[e]) for e in self.terms)

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if _is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.nvars, out)

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        out: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if _is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        if _is_zero(c):
            return MultiPoly(self.nvars)
        return MultiPoly(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, e: int) -> "MultiPoly":
        result = MultiPoly.constant(self.nvars, Fraction(1))
        for _ in range(e):
            result = result * self
        return result

    def map_coefficients(self, fn) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: fn(c) for e, c in self.terms.items()})

    def total(self):
        """Sum of all coefficients (= evaluation at all-ones)."""
        total = Fraction(0)
        for c in self.terms.values():
            total = c + total
        return total

    def compose(self, values: Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute values[i] for variable i; exponentiation is memoized
        per variable since cwe exponent vectors repeat powers heavily."""
        if len(values) != self.nvars:
            raise ValueError("need one replacement polynomial per variable")
        width = values[0].nvars if values else self.nvars
        powers: list[dict[int, MultiPoly]] = [
            {0: MultiPoly.constant(width, Fraction(1))} for _ in values
        ]

        def var_power(i: int, e: int) -> "MultiPoly":
            memo = powers[i]
            if e not in memo:
                memo[e] = var_power(i, e - 1) * values[i]
            return memo[e]

        out = MultiPoly.zero(width)
        for exps, c in self.terms.items():
            term = MultiPoly.constant(width, Fraction(1))
            for i, e in enumerate(exps):
                if e:
                    term = term * var_power(i, e)
            out = out + term.scale(c)
        return out

    def substitute_univariate(self, images: Sequence[tuple[Fraction, int]]) -> UniPoly:
        """Substitute variable i -> coeff_i * z^deg_i; coefficients must be
        rational at that point."""
        out = UniPoly()
        for exps, c in self.terms.items():
            if isinstance(c, Cyclotomic):
                c = c.as_rational()
            degree = 0
            scalar = Fraction(c)
            for i, e in enumerate(exps):
                if e:
                    coeff_i, deg_i = images[i]
                    scalar *= Fraction(coeff_i) ** e
                    degree += deg_i * e
            out = out + UniPoly.monomial(degree, scalar)
        return out

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        """Descending lexicographic on exponent tuples (x1-major), matching
        the usual hand-written ordering x1^n, ..., xk^n."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def render(self, var: str = "x") -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"{var}{i + 1}")
                elif e > 1:
                    factors.append(f"{var}{i + 1}^{e}")
            body = "*".join(factors)
            if isinstance(c, Cyclotomic):
                cstr = f"({c})"
                parts.append(f" + {cstr}*{body}" if parts else f"{cstr}*{body}")
                continue
            mag = abs(c)
            if not body:
                piece = str(mag)
            else:
                piece = body if mag == 1 else f"{mag}*{body}"
            if not parts:
                parts.append(piece if c > 0 else f"-{piece}")
            else:
                parts.append(f" + {piece}" if c > 0 else f" - {piece}")
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.render()})"

    def to_json(self) -> list:
        out = []
        for exps, c in self.sorted_terms():
            if isinstance(c, Cyclotomic):
                out.append([list(exps), c.to_json()])
            else:
                out.append([list(exps), str(Fraction(c))])
        return out
