"""
Exact arithmetic in one variable.

Three value types live here:

- ``LaurentPoly``: sparse Laurent polynomials in W with Python integer
  coefficients (the ring Z[W, W^-1] where link invariant values live).
- ``RatFunc``: reduced quotients of two Laurent polynomials, kept in a
  canonical form so that ``==`` is structural equality.
- ``AlphaSeries``: power series in alpha truncated at a fixed order, with
  ``Fraction`` coefficients. The two variables are tied by W = exp(-alpha/2).

All values are immutable.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "AlphaSeries",
    "NotDivisible",
    "ZeroDenominator",
    "W",
    "lp_gcd",
    "lp_div_exact",
    "lp_mirror",
    "lp_eval",
    "lp_eval_int",
    "lp_to_alpha_series",
    "rf_normalize",
]


class NotDivisible(ArithmeticError):
    """The quotient of two Laurent polynomials does not lie in Z[W, W^-1]."""


class ZeroDenominator(ZeroDivisionError):
    pass


Scalar = Union[int, Fraction]


class LaurentPoly:
    """
    A Laurent polynomial with integer coefficients, stored as a map
    ``{exponent: coefficient}`` with no zero coefficients.

    >>> p = LaurentPoly({-1: -2, 0: 1, 4: 3})
    >>> str(p)
    '-2*W^-1 + 1 + 3*W^4'
    >>> str(p * LaurentPoly.zero())
    '0'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    if not isinstance(c, int):
                        raise TypeError(f"coefficient {c!r} is not an integer")
                    clean[int(k)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], shift: int = 0) -> LaurentPoly:
        """Build ``sum coeffs[i] * W^(i + shift)``."""
        return cls({i + shift: c for i, c in enumerate(coeffs) if c})

    # --- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """Units of Z[W, W^-1] are exactly +-W^k."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no minimal exponent")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no maximal exponent")
        return max(self._terms)

    def leading_coeff(self) -> int:
        return self._terms[self.max_exp()] if self._terms else 0

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def content(self) -> int:
        return math.gcd(*self._terms.values()) if self._terms else 0

    def dense(self) -> tuple[int, list[int]]:
        """Return ``(shift, coeffs)`` with ``self == W^shift * sum coeffs[i] W^i``."""
        if not self._terms:
            return 0, []
        lo, hi = self.min_exp(), self.max_exp()
        return lo, [self._terms.get(k, 0) for k in range(lo, hi + 1)]

    def is_palindromic(self) -> bool:
        return self == self.mirror()

    # --- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for i, a in self._terms.items():
            for j, b in other._terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise NotDivisible(f"{self} is not a unit")
            (k, c), = self._terms.items()
            return LaurentPoly({k * n: c ** (-n)})
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by W^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def mirror(self) -> LaurentPoly:
        return LaurentPoly({-k: c for k, c in self._terms.items()})

    def __truediv__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return RatFunc(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return RatFunc(other, self)
        return NotImplemented

    def __call__(self, w) -> Fraction:
        return lp_eval(self, w)

    # --- comparison / rendering ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return other == self
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly('{self}')"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif mag == 1:
                body = f"W^{k}"
            else:
                body = f"{mag}*W^{k}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    _TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*?\s*)?(W(?:\^\s*(-?\d+))?)?\s*")

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """
        Inverse of ``str``. Accepts terms like ``3*W^-2``, ``-W^5``, ``7`` and
        a bare ``W``.

        >>> LaurentPoly.parse("W^-18 + W^-14 - 2*W^3 + 5")
        LaurentPoly('W^-18 + W^-14 + 5 - 2*W^3')
        """
        text = text.strip()
        if text == "0":
            return cls()
        out: dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(text):
            m = cls._TERM.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
            sign, num, wpart, exp = m.groups()
            if sign is None and not first:
                raise ValueError(f"missing operator before {text[pos:]!r}")
            if num is None and wpart is None:
                raise ValueError(f"empty term in {text!r}")
            c = int(num) if num is not None else 1
            if sign == "-":
                c = -c
            k = 0 if wpart is None else (1 if exp is None else int(exp))
            out[k] = out.get(k, 0) + c
            pos = m.end()
            first = False
        return cls(out)

    def to_json(self) -> dict[str, str]:
        return {str(k): str(c) for k, c in self.items()}

    @classmethod
    def from_json(cls, obj: Mapping[str, str | int]) -> LaurentPoly:
        return cls({int(k): int(v) for k, v in obj.items()})


W = LaurentPoly.monomial(1)


# --- dense integer polynomial helpers (ascending coefficient lists) --------

def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    k = len(a) - 1 - db + 1
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for i, c in enumerate(b):
            a[i + shift] -= la * c
        _trim(a)
        k -= 1
    if k > 0:
        a = [x * lb**k for x in a]
    return a


def _primitive(p: list[int]) -> list[int]:
    g = math.gcd(*p)
    if p[-1] < 0:
        g = -g
    return [x // g for x in p]


def _poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """gcd in Z[x] with positive leading coefficient (primitive PRS)."""
    if not a:
        return _primitive(b) if b else []
    if not b:
        return _primitive(a)
    c = math.gcd(math.gcd(*a), math.gcd(*b))
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _trim(_prem(a, b))
        if not r:
            break
        a, b = b, _primitive(r)
    return [c * x for x in b]


def _poly_divexact(a: list[int], b: list[int]) -> list[int] | None:
    """Quotient q with a = q*b in Z[x], or None."""
    a = list(a)
    if len(a) < len(b):
        return [] if not _trim(a) else None
    q = [0] * (len(a) - len(b) + 1)
    lb = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        top = a[shift + len(b) - 1]
        if top == 0:
            continue
        if top % lb:
            return None
        t = top // lb
        q[shift] = t
        for i, c in enumerate(b):
            a[i + shift] -= t * c
    if any(a):
        return None
    return q


def lp_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """
    gcd in Z[W, W^-1], normalised to minimal exponent 0 and positive leading
    coefficient. Integer content is included.
    """
    if a.is_zero() and b.is_zero():
        return LaurentPoly.zero()
    _, da = a.dense()
    _, db = b.dense()
    return LaurentPoly.from_coeffs(_poly_gcd(da, db))


def lp_div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """
    Return q with ``a == q * b``. Raises NotDivisible if q is not a Laurent
    polynomial with integer coefficients.

    >>> str(lp_div_exact(1 - W**8, 1 + W**4))
    '1 - W^4'
    """
    if b.is_zero():
        raise ZeroDenominator("division by the zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero()
    sa, da = a.dense()
    sb, db = b.dense()
    q = _poly_divexact(da, db)
    if q is None:
        raise NotDivisible(f"{b} does not divide {a}")
    return LaurentPoly.from_coeffs(q, sa - sb)


def lp_mirror(a: LaurentPoly) -> LaurentPoly:
    """The involution W -> W^-1."""
    return a.mirror()


def lp_eval(a: LaurentPoly, w) -> Fraction:
    w = Fraction(w)
    if w == 0:
        raise ZeroDivisionError("cannot evaluate a Laurent polynomial at 0")
    return sum((c * w**k for k, c in a.items()), Fraction(0))


lp_eval_int = lp_eval


def lp_to_alpha_series(a: LaurentPoly, order: int) -> AlphaSeries:
    """
    Substitute W = exp(-alpha/2) and expand up to alpha^order.

    >>> lp_to_alpha_series(W**-21, 1)
    AlphaSeries('1 + 21/2*a', order=1)
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = [Fraction(0)] * (order + 1)
    for k, c in a.items():
        x = Fraction(-k, 2)
        term = Fraction(c)
        for n in range(order + 1):
            coeffs[n] += term
            term = term * x / (n + 1)
    return AlphaSeries(coeffs, order)


# --- fraction field --------------------------------------------------------

def rf_normalize(num, den) -> RatFunc:
    return RatFunc(num, den)


class RatFunc:
    """
    A quotient ``num / den`` of Laurent polynomials in canonical form:
    the two parts share no non-unit factor, ``den`` has minimal exponent 0
    and a positive leading coefficient.

    >>> RatFunc(W**8 - 1, W**4 - 1)
    RatFunc('1 + W^4')
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = _as_lp(num)
        den = _as_lp(den)
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        self.num, self.den = _canonical(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> RatFunc:
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    def is_laurent(self) -> bool:
        return self.den == _ONE

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise NotDivisible(f"{self} is not a Laurent polynomial")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def mirror(self) -> RatFunc:
        return RatFunc(self.num.mirror(), self.den.mirror())

    def __call__(self, w) -> Fraction:
        d = lp_eval(self.den, w)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at W={w}")
        return lp_eval(self.num, w) / d

    @staticmethod
    def _coerce(other) -> RatFunc | None:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, LaurentPoly):
            return RatFunc._raw(other, _ONE)
        if isinstance(other, int):
            return RatFunc._raw(LaurentPoly.constant(other), _ONE)
        if isinstance(other, Fraction):
            return RatFunc(other.numerator, other.denominator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            if self.den == _ONE:
                return RatFunc._raw(self.num + o.num, _ONE)
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == _ONE and o.den == _ONE:
            return RatFunc._raw(self.num * o.num, _ONE)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.num.is_zero():
            raise ZeroDenominator("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num**n, self.den**n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def __str__(self):
        if self.den == _ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc('{self}')"


_ONE = LaurentPoly.one()


def _as_lp(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    raise TypeError(f"expected a Laurent polynomial, got {type(x).__name__}")


def _canonical(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return num, _ONE
    if den.is_monomial():
        (k, c), = den.terms.items()
        g = math.gcd(num.content(), c)
        if c < 0:
            g = -g
        num = LaurentPoly({e - k: a // g for e, a in num.terms.items()})
        return num, LaurentPoly.constant(c // g)
    g = lp_gcd(num, den)
    if g != _ONE:
        num = lp_div_exact(num, g)
        den = lp_div_exact(den, g)
    k = den.min_exp()
    num, den = num.shift(-k), den.shift(-k)
    if den.leading_coeff() < 0:
        num, den = -num, -den
    return num, den


# --- truncated series in alpha ---------------------------------------------

class AlphaSeries:
    """
    A power series ``sum coeffs[n] * alpha^n`` known up to ``alpha^order``.
    Binary operations truncate to the smaller of the two orders.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Scalar], order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def constant(cls, c: Scalar, order: int) -> AlphaSeries:
        return cls([c], order)

    @classmethod
    def alpha(cls, order: int) -> AlphaSeries:
        return cls([0, 1], order)

    def truncate(self, order: int) -> AlphaSeries:
        return AlphaSeries(self.coeffs, min(order, self.order))

    def _coerce(self, other) -> AlphaSeries | None:
        if isinstance(other, AlphaSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return AlphaSeries([other], self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return AlphaSeries([a + b for a, b in zip(self.coeffs[: n + 1], o.coeffs)], n)

    __radd__ = __add__

    def __neg__(self):
        return AlphaSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlphaSeries([c * other for c in self.coeffs], self.order)
        if not isinstance(other, AlphaSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j, b in enumerate(other.coeffs[: n + 1 - i]):
                    out[i + j] += a * b
        return AlphaSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlphaSeries([c / other for c in self.coeffs], self.order)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.order == o.order and self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __str__(self):
        parts = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            var = "" if n == 0 else ("a" if n == 1 else f"a^{n}")
            if not var:
                body = str(mag)
            elif mag == 1:
                body = var
            else:
                body = f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts) or "0"

    def __repr__(self):
        return f"AlphaSeries('{self}', order={self.order})"
