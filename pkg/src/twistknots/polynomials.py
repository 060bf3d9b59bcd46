"""Exact one-variable Laurent polynomials with integer coefficients.

Used in two roles:

* internally, bracket-polynomial state sums in the variable ``A``
  (plain integer exponents), and
* externally, Jones polynomials in the variable ``t``, where exponents
  may be half-integers for links with an even number of components.
  Half-integer exponents are stored as *doubled* integers, so ``t**(1/2)``
  has stored exponent 1 and ``t**3`` has stored exponent 6.

No floating point is ever involved; coefficients are Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial ``sum c_e * X**e`` over Z.

    ``coeffs`` maps integer exponents to nonzero integer coefficients.
    Zero coefficients are never stored, which makes ``==`` structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be ints")
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.coeffs = dict(sorted(clean.items()))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) - c
        return LaurentPolynomial(out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            if len(self.coeffs) != 1:
                raise ValueError("can only invert monomials")
            ((e, c),) = self.coeffs.items()
            if c not in (1, -1):
                raise ValueError("can only invert unit monomials")
            base = LaurentPolynomial({-e: c})
            n = -n
        else:
            base = self
        out = LaurentPolynomial.one()
        for _ in range(n):
            out = out * base
        return out

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by X**k."""
        return LaurentPolynomial({e + k: c for e, c in self.coeffs.items()})

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    # -- serialization ---------------------------------------------------

    def pairs(self) -> list[tuple[int, int]]:
        """Sorted (exponent, coefficient) pairs; the wire format."""
        return list(self.coeffs.items())

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "LaurentPolynomial":
        return cls({int(e): int(c) for e, c in pairs})

    def __repr__(self):
        return f"LaurentPolynomial({self.coeffs})"

    def format(self, var: str = "t", halved: bool = False) -> str:
        """Human-readable form.  With ``halved`` the stored exponents are
        read as doubled, so exponent 3 prints as ``t^(3/2)``."""
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.coeffs.items():
            exp = Fraction(e, 2) if halved else Fraction(e)
            if exp == 0:
                term = str(abs(c))
            else:
                if exp == 1:
                    pw = var
                elif exp.denominator == 1:
                    pw = f"{var}^{exp.numerator}"
                else:
                    pw = f"{var}^({exp})"
                term = pw if abs(c) == 1 else f"{abs(c)}*{pw}"
            parts.append(("- " if c < 0 else "+ ") + term)
        head = parts[0]
        head = "-" + head[2:] if head.startswith("- ") else head[2:]
        return " ".join([head] + parts[1:])
