"""Exact arithmetic in Z[q] and Q(q).

``QPoly`` is an integer-coefficient polynomial in ``q``; ``QRat`` is a reduced
quotient of two of them.  Both are immutable and hashable, and equality is
structural because every value is kept in canonical form.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union


class QDomainError(ValueError):
    """Argument outside the domain of a q-analogue."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _content(coeffs: Sequence[int]) -> int:
    g = 0
    for a in coeffs:
        g = gcd(g, a)
        if g == 1:
            break
    return g


class QPoly:
    """Polynomial in ``q`` with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs: tuple[int, ...] = _trim(int(a) for a in coeffs)
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, d: int, c: int = 1) -> "QPoly":
        if d < 0:
            raise QDomainError("negative exponent %d" % d)
        return cls([0] * d + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        return _content(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly.const(other)
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, QRat):
            return other == QRat(self)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("QPoly", self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return "QPoly(%r)" % (list(self.coeffs),)

    def __str__(self) -> str:
        return format_poly(self)

    def __neg__(self) -> "QPoly":
        return QPoly(-a for a in self.coeffs)

    def __add__(self, other) -> "QPoly":
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return QPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "QPoly":
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        return (-self) + other

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, int):
            return QPoly(a * other for a in self.coeffs)
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise QDomainError("negative power of a polynomial")
        result = ONE_POLY
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other) -> "QRat":
        return QRat(self) / other

    def __rtruediv__(self, other) -> "QRat":
        return QRat(other) / QRat(self)

    def shift(self, d: int) -> "QPoly":
        """Multiply by ``q**d``."""
        if not self.coeffs:
            return self
        return QPoly((0,) * d + self.coeffs)

    def divide_int(self, c: int) -> "QPoly":
        """Exact division by a nonzero integer."""
        out = []
        for a in self.coeffs:
            x, rem = divmod(a, c)
            if rem:
                raise ArithmeticError("%s is not divisible by %d" % (self, c))
            out.append(x)
        return QPoly(out)

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Exact division in Z[q]; raises if there is a remainder."""
        b = other.coeffs
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(b) - 1
        lb = b[-1]
        if len(rem) - 1 < db:
            if rem:
                raise ArithmeticError("%s does not divide %s" % (other, self))
            return ZERO_POLY
        quo = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c, r = divmod(rem[i], lb)
            if r:
                raise ArithmeticError("%s does not divide %s" % (other, self))
            quo[i - db] = c
            if c:
                for j, y in enumerate(b):
                    rem[i - db + j] -= c * y
        if any(rem[:db]):
            raise ArithmeticError("%s does not divide %s" % (other, self))
        return QPoly(quo)

    def primitive(self) -> "QPoly":
        c = self.content()
        if c in (0, 1):
            return self
        return self.divide_int(c)

    def __call__(self, x):
        acc = 0 * x
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> "QPoly":
        return QPoly(i * a for i, a in enumerate(self.coeffs) if i)


ZERO_POLY = QPoly()
ONE_POLY = QPoly((1,))
Q = QPoly((0, 1))


def _pseudo_rem(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # lc(b)^(deg a - deg b + 1) * a mod b, all in Z
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [x * lb for x in r]
        for j, y in enumerate(b):
            r[shift + j] -= lr * y
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Greatest common divisor in Z[q] with positive leading coefficient.

    Primitive-part remainder sequence; contents are handled separately.
    """
    if a.is_zero():
        return _normalize_sign(b)
    if b.is_zero():
        return _normalize_sign(a)
    ca, cb = a.content(), b.content()
    c = gcd(ca, cb)
    x, y = a.primitive().coeffs, b.primitive().coeffs
    if len(x) < len(y):
        x, y = y, x
    while len(y) > 1:
        r = _pseudo_rem(x, y)
        if not r:
            break
        g = _content(r)
        if g > 1:
            r = tuple(v // g for v in r)
        x, y = y, r
    else:
        # y is a nonzero constant: the primitive parts are coprime
        return QPoly.const(c)
    return _normalize_sign(QPoly(y).primitive() * c)


def _normalize_sign(p: QPoly) -> QPoly:
    return -p if p.lead < 0 else p


Scalar = Union[int, Fraction, QPoly, "QRat"]


class QRat:
    """Element of Q(q) stored as a reduced quotient of integer polynomials.

    Canonical form: coprime numerator and denominator, no shared integer
    content, positive leading coefficient in the denominator.  Zero is 0/1.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Scalar = 0, den: Scalar = 1, *, _reduced: bool = False):
        if _reduced:
            self.num, self.den = num, den
            self._hash = None
            return
        n = _as_qrat(num)
        d = _as_qrat(den)
        if d.num.is_zero():
            raise ZeroDivisionError("QRat with zero denominator")
        self.num, self.den = _reduce(n.num * d.den, n.den * d.num)
        self._hash = None

    @classmethod
    def _raw(cls, num: QPoly, den: QPoly) -> "QRat":
        if den.is_zero():
            raise ZeroDivisionError("division by zero in Q(q)")
        n, d = _reduce(num, den)
        return cls(n, d, _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == ONE_POLY

    def to_poly(self) -> QPoly:
        if not self.is_poly():
            raise ArithmeticError("%s is not a polynomial" % self)
        return self.num

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, QPoly)):
            other = _as_qrat(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            if self.den == ONE_POLY:
                self._hash = hash(self.num)
            else:
                self._hash = hash(("QRat", self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        return "QRat(%r, %r)" % (self.num, self.den)

    def __str__(self) -> str:
        return format_rat(self)

    def __neg__(self) -> "QRat":
        return QRat(-self.num, self.den, _reduced=True)

    def __add__(self, other) -> "QRat":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self.den == o.den:
            return QRat._raw(self.num + o.num, self.den)
        return QRat._raw(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> "QRat":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "QRat":
        return (-self) + other

    def __mul__(self, other) -> "QRat":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return ZERO
        # cross-cancel first to keep the gcds small
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1, d2 = _cancel(self.num, o.den, g1)
        n2, d1 = _cancel(o.num, self.den, g2)
        return QRat._raw(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return QRat._raw(self.den, self.num)

    def __truediv__(self, other) -> "QRat":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "QRat":
        return _as_qrat(other) / self

    def __pow__(self, k: int) -> "QRat":
        if k < 0:
            return self.inverse() ** (-k)
        return QRat(self.num ** k, self.den ** k, _reduced=True)


def _cancel(a: QPoly, b: QPoly, g: QPoly) -> tuple[QPoly, QPoly]:
    if g == ONE_POLY:
        return a, b
    return a.exact_div(g), b.exact_div(g)


def _reduce(num: QPoly, den: QPoly) -> tuple[QPoly, QPoly]:
    if den.is_zero():
        raise ZeroDivisionError("division by zero in Q(q)")
    if num.is_zero():
        return ZERO_POLY, ONE_POLY
    if den.degree == 0:
        g = gcd(num.content(), den.lead)
    else:
        g_poly = poly_gcd(num, den)
        if g_poly.degree > 0:
            num, den = num.exact_div(g_poly), den.exact_div(g_poly)
        g = gcd(num.content(), den.content())
    if den.lead < 0:
        g = -g
    if g != 1:
        num, den = num.divide_int(g), den.divide_int(g)
    return num, den


def _as_qrat(x) -> QRat:
    if isinstance(x, QRat):
        return x
    if isinstance(x, QPoly):
        return QRat(x, ONE_POLY, _reduced=True)
    if isinstance(x, int):
        return QRat(QPoly.const(x), ONE_POLY, _reduced=True)
    if isinstance(x, Fraction):
        return QRat._raw(QPoly.const(x.numerator), QPoly.const(x.denominator))
    raise TypeError("cannot interpret %r as an element of Q(q)" % (x,))


def _coerce(x):
    try:
        return _as_qrat(x)
    except TypeError:
        return None


ZERO = QRat(ZERO_POLY, ONE_POLY, _reduced=True)
ONE = QRat(ONE_POLY, ONE_POLY, _reduced=True)


def qrat(x: Scalar) -> QRat:
    """Coerce an int, Fraction, QPoly or QRat into ``QRat``."""
    return _as_qrat(x)


@lru_cache(maxsize=None)
def qint(n: int) -> QPoly:
    """The q-integer ``1 + q + ... + q^(n-1)``; ``qint(0)`` is zero."""
    if n < 0:
        raise QDomainError("q-integer of negative argument %d" % n)
    return QPoly([1] * n)


@lru_cache(maxsize=None)
def qfact(n: int) -> QPoly:
    if n < 0:
        raise QDomainError("q-factorial of negative argument %d" % n)
    out = ONE_POLY
    for i in range(2, n + 1):
        out = out * qint(i)
    return out


def eval_at(f: Scalar, x) -> Fraction:
    """Evaluate ``f`` exactly at the rational point ``x``."""
    f = _as_qrat(f)
    x = Fraction(x)
    d = f.den(x)
    if d == 0:
        raise ZeroDivisionError("%s has a pole at q=%s" % (f, x))
    return Fraction(f.num(x)) / d


def check_qint_identities(m: int, n: int) -> bool:
    """Check the three q-integer product identities at ``0 <= m <= n``.

    When ``m == 0`` the first identity would need ``[-1]_q``; the left side
    ``[2][0]`` is then identically zero and the identity is not evaluated.
    """
    if not 0 <= m <= n:
        raise QDomainError("need 0 <= m <= n, got m=%d, n=%d" % (m, n))
    ok = True
    if m >= 1:
        ok &= qint(2) * qint(m) == qint(m + 1) + Q * qint(m - 1)
    ok &= qint(m + 1) * qint(n) - qint(m) * qint(n + 1) == qint(n - m).shift(m)
    if n >= 1:
        rhs = qint(m + 1) * qint(n) - Q * qint(m) * qint(n - 1)
    else:
        rhs = qint(m + 1) * qint(n)
    ok &= rhs == qint(m + n)
    return bool(ok)


def check_partial_fraction_identity(xs: Sequence) -> bool:
    """Check ``sum_k prod_{i != k} x_i / (x_k - x_i) == (-1)**(n+1)``."""
    xs = [Fraction(x) for x in xs]
    if not xs:
        raise QDomainError("need at least one point")
    if len(set(xs)) != len(xs):
        raise QDomainError("points must be pairwise distinct")
    if any(x == 0 for x in xs):
        raise QDomainError("points must be nonzero")
    total = Fraction(0)
    for k, xk in enumerate(xs):
        term = Fraction(1)
        for i, xi in enumerate(xs):
            if i != k:
                term *= xi / (xk - xi)
        total += term
    return total == (-1) ** (len(xs) + 1)


# -- text format ------------------------------------------------------------


def format_poly(p: QPoly) -> str:
    """Render as ``c0+c1*q+c2*q^2`` with zero terms dropped."""
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            mono = "q" if i == 1 else "q^%d" % i
            body = mono if abs(c) == 1 else "%d*%s" % (abs(c), mono)
        if c < 0:
            parts.append("-" + body)
        else:
            parts.append(("+" if parts else "") + body)
    return "".join(parts)


def format_rat(f: QRat) -> str:
    """Render as ``num`` or ``num/(den)``; multi-term numerators get parentheses."""
    num = format_poly(f.num)
    if f.den == ONE_POLY:
        return num
    if sum(1 for c in f.num.coeffs if c) > 1:
        num = "(%s)" % num
    return "%s/(%s)" % (num, format_poly(f.den))


_TERM = re.compile(r"([+-]?)(\d*)(\*?)(q(?:\^(\d+))?)?")


def parse_poly(text: str) -> QPoly:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s == "0":
        return ZERO_POLY
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError("bad polynomial text %r" % text)
        sign, digits, star, mono, power = m.groups()
        if pos > 0 and not sign:
            raise ValueError("bad polynomial text %r" % text)
        if star and (not digits or not mono):
            raise ValueError("bad polynomial text %r" % text)
        if not digits and not mono:
            raise ValueError("bad polynomial text %r" % text)
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        d = 0 if not mono else (int(power) if power else 1)
        coeffs[d] = coeffs.get(d, 0) + c
        pos = m.end()
    top = max(coeffs)
    return QPoly(coeffs.get(i, 0) for i in range(top + 1))


def parse_rat(text: str) -> QRat:
    s = text.replace(" ", "")
    if "/" not in s:
        return _as_qrat(parse_poly(s))
    num, den = s.split("/", 1)
    return QRat(parse_poly(_unparen(num)), parse_poly(_unparen(den)))


def _unparen(s: str) -> str:
    if s.startswith("(") and s.endswith(")"):
        return s[1:-1]
    return s
