"""Exact Laurent polynomials in A and fractions with powers of phi = A^2 + A^-2.

Every invariant in the package is a value of one of these two types.
Coefficients are Python ints, so nothing ever overflows.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Mapping

__all__ = [
    "LaurentPolynomial",
    "PhiFraction",
    "A",
    "ONE",
    "ZERO",
    "PHI",
    "LOOP",
    "poly_add",
    "poly_mul",
    "poly_substitute_power",
    "poly_unit_equivalent",
    "frac_add",
    "frac_mul",
    "frac_scale_monomial",
    "parse_polynomial",
    "parse_fraction",
]


class LaurentPolynomial:
    """An element of Z[A, A^-1], stored as ``{exponent: coefficient}``.

    Instances are immutable and hashable.  Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        acc: dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                e, c = int(e), int(c)
                if c:
                    acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls({0: c})

    @classmethod
    def _coerce(cls, x) -> "LaurentPolynomial":
        if isinstance(x, LaurentPolynomial):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def max_exponent(self) -> int:
        return max(self._terms)

    @property
    def min_exponent(self) -> int:
        return min(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        try:
            other = LaurentPolynomial._coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPolynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = LaurentPolynomial._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPolynomial._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, PhiFraction):
            return NotImplemented
        try:
            other = LaurentPolynomial._coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPolynomial({-e * -n: c ** -n})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        """Division by a power of phi (returns a PhiFraction) or an exact divisor."""
        if isinstance(other, PhiFraction):
            raise TypeError("division by a PhiFraction is not supported")
        other = LaurentPolynomial._coerce(other)
        if other.is_monomial():
            (e, c), = other._terms.items()
            if all(v % c == 0 for v in self._terms.values()):
                return LaurentPolynomial({k - e: v // c for k, v in self._terms.items()})
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def divmod(self, d: "LaurentPolynomial") -> tuple["LaurentPolynomial", "LaurentPolynomial"]:
        """Long division by a polynomial with unit leading and trailing coefficients."""
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        top = d._terms[d.max_exponent]
        if top not in (1, -1):
            raise ValueError("divisor must have a unit leading coefficient")
        width = d.max_exponent - d.min_exponent
        rem = dict(self._terms)
        quo: dict[int, int] = {}
        while rem:
            lo = min(rem)
            hi = max(rem)
            if hi - lo < width:
                break
            c = rem[hi] * top  # top is +-1, so this divides exactly
            shift = hi - d.max_exponent
            quo[shift] = quo.get(shift, 0) + c
            for e, dc in d._terms.items():
                k = e + shift
                v = rem.get(k, 0) - c * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPolynomial(quo), LaurentPolynomial(rem)

    def substitute_power(self, k: int) -> "LaurentPolynomial":
        """Replace A by A^k."""
        if k == 0:
            raise ValueError("substitution power must be nonzero")
        return LaurentPolynomial({k * e: c for e, c in self._terms.items()})

    def shift(self, e: int) -> "LaurentPolynomial":
        return LaurentPolynomial({k + e: c for k, c in self._terms.items()})

    def evaluate(self, x):
        """Substitute ``x`` (any ring element supporting ** and *) for A."""
        total = 0
        for e, c in self._terms.items():
            total = total + c * x ** e
        return total

    def unit_equivalent(self, other: "LaurentPolynomial") -> int | None:
        """Return k with other == (-A)^k * self, or None if there is none."""
        other = LaurentPolynomial._coerce(other)
        if self.is_zero() or other.is_zero():
            return 0 if self.is_zero() and other.is_zero() else None
        k = other.max_exponent - self.max_exponent
        if k != other.min_exponent - self.min_exponent:
            return None
        return k if LaurentPolynomial.monomial(k, (-1) ** (k % 2)) * self == other else None

    # -- comparison / hashing ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if isinstance(other, PhiFraction):
            return other == self
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -- text -----------------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            out.append(sign + body)
        s = "".join(out)
        return s[1:] if s[0] == "+" else s

    def __repr__(self):
        return f"LaurentPolynomial({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": {str(e): c for e, c in self._terms.items()}, "phi_power": 0}


class PhiFraction:
    """A Laurent polynomial divided by phi^k, phi = A^2 + A^-2.

    Stored reduced: when k > 0, phi does not divide the numerator.
    """

    __slots__ = ("num", "phi_power")

    def __init__(self, num: LaurentPolynomial | int, phi_power: int = 0):
        if phi_power < 0:
            num = LaurentPolynomial._coerce(num) * PHI ** -phi_power
            phi_power = 0
        num = LaurentPolynomial._coerce(num)
        while phi_power > 0 and not num.is_zero():
            q, r = (num * A2).divmod(_PHI_SHIFTED)
            if not r.is_zero():
                break
            num = q
            phi_power -= 1
        if num.is_zero():
            phi_power = 0
        self.num = num
        self.phi_power = phi_power

    @classmethod
    def _coerce(cls, x) -> "PhiFraction":
        if isinstance(x, PhiFraction):
            return x
        return cls(LaurentPolynomial._coerce(x), 0)

    def cleared(self, k: int) -> LaurentPolynomial:
        """Numerator over phi^k (requires k >= phi_power)."""
        if k < self.phi_power:
            raise ValueError("cannot clear to a smaller phi power")
        return self.num * PHI ** (k - self.phi_power)

    def is_polynomial(self) -> bool:
        return self.phi_power == 0

    def as_polynomial(self) -> LaurentPolynomial:
        if self.phi_power:
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        try:
            other = PhiFraction._coerce(other)
        except TypeError:
            return NotImplemented
        k = max(self.phi_power, other.phi_power)
        return PhiFraction(self.cleared(k) + other.cleared(k), k)

    __radd__ = __add__

    def __neg__(self):
        return PhiFraction(-self.num, self.phi_power)

    def __sub__(self, other):
        try:
            other = PhiFraction._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return PhiFraction._coerce(other) - self

    def __mul__(self, other):
        try:
            other = PhiFraction._coerce(other)
        except TypeError:
            return NotImplemented
        return PhiFraction(self.num * other.num, self.phi_power + other.phi_power)

    __rmul__ = __mul__

    def over_phi(self, k: int = 1) -> "PhiFraction":
        return PhiFraction(self.num, self.phi_power + k)

    def substitute_power(self, k: int) -> "PhiFraction":
        """A -> A^k; only k = +-1 keeps phi a phi-power denominator."""
        if k not in (1, -1):
            raise ValueError("phi fractions only support A -> A^(+-1)")
        return PhiFraction(self.num.substitute_power(k), self.phi_power)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPolynomial)):
            other = PhiFraction._coerce(other)
        if not isinstance(other, PhiFraction):
            return NotImplemented
        return self.num * PHI ** other.phi_power == other.num * PHI ** self.phi_power

    def __hash__(self):
        return hash((self.num, self.phi_power))

    def __str__(self):
        if self.phi_power == 0:
            return str(self.num)
        den = "phi" if self.phi_power == 1 else f"phi^{self.phi_power}"
        if self.num.is_monomial() and self.num.min_exponent == 0:
            return f"{self.num}/{den}"
        if all(c < 0 for _, c in self.num):
            return f"-({-self.num})/{den}"
        return f"({self.num})/{den}"

    def __repr__(self):
        return f"PhiFraction({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": {str(e): c for e, c in self.num}, "phi_power": self.phi_power}

    @classmethod
    def from_json(cls, data: Mapping) -> "PhiFraction":
        terms = {int(e): int(c) for e, c in data["terms"].items()}
        return cls(LaurentPolynomial(terms), int(data.get("phi_power", 0)))


A = LaurentPolynomial({1: 1})
ONE = LaurentPolynomial({0: 1})
ZERO = LaurentPolynomial()
A2 = LaurentPolynomial({2: 1})
PHI = LaurentPolynomial({2: 1, -2: 1})
_PHI_SHIFTED = LaurentPolynomial({4: 1, 0: 1})  # A^2 * phi
LOOP = LaurentPolynomial({2: -1, -2: -1})  # value of a trivial circle


# -- functional aliases -----------------------------------------------------------

def poly_add(p, q):
    return LaurentPolynomial._coerce(p) + q


def poly_mul(p, q):
    return LaurentPolynomial._coerce(p) * q


def poly_substitute_power(p: LaurentPolynomial, k: int) -> LaurentPolynomial:
    return p.substitute_power(k)


def poly_unit_equivalent(p: LaurentPolynomial, q: LaurentPolynomial) -> tuple[bool, int | None]:
    k = p.unit_equivalent(q)
    return k is not None, k


def frac_add(x, y) -> PhiFraction:
    return PhiFraction._coerce(x) + y


def frac_mul(x, y) -> PhiFraction:
    return PhiFraction._coerce(x) * y


def frac_scale_monomial(x, exponent: int, coefficient: int = 1) -> PhiFraction:
    return PhiFraction._coerce(x) * LaurentPolynomial.monomial(exponent, coefficient)


# -- parsing ------------------------------------------------------------------------

_TERM = re.compile(r"([+-]?)(\d*)(A(?:\^\(?(-?\d+)\)?)?)?")


def parse_polynomial(text: str) -> LaurentPolynomial:
    """Parse the canonical text form, e.g. ``-A^8-A^5+A^4+3A+3A^-1``."""
    s = text.replace(" ", "").replace("*", "").replace("−", "-")
    if s in ("", "0"):
        return ZERO
    # an overall sign may be factored out: -(A^2+1)
    if s.startswith("-(") and s.endswith(")"):
        return -parse_polynomial(s[2:-1])
    if s.startswith("(") and s.endswith(")"):
        return parse_polynomial(s[1:-1])
    terms: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        sign = -1 if m.group(1) == "-" else 1
        if pos > 0 and not m.group(1):
            raise ValueError(f"missing sign in {text!r} at position {pos}")
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            e = int(m.group(4)) if m.group(4) is not None else 1
        else:
            e = 0
        terms[e] = terms.get(e, 0) + sign * coeff
        pos = m.end()
    return LaurentPolynomial(terms)


_FRAC = re.compile(r"^(-?\(.*\))/phi(?:\^(\d+))?$|^([+-]?\d*(?:A(?:\^-?\d+)?)?)/phi(?:\^(\d+))?$")


def parse_fraction(text: str) -> PhiFraction:
    """Parse ``p``, ``(p)/phi^k`` or ``c/phi^k``; also accepts the JSON form."""
    if isinstance(text, Mapping):
        return PhiFraction.from_json(text)
    s = text.strip()
    if s.startswith("{"):
        return PhiFraction.from_json(json.loads(s))
    m = _FRAC.match(s.replace(" ", ""))
    if not m:
        return PhiFraction(parse_polynomial(s))
    body = m.group(1) if m.group(1) is not None else m.group(3)
    k = m.group(2) or m.group(4) or "1"
    return PhiFraction(parse_polynomial(body), int(k))
