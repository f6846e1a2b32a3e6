"""Exact arithmetic over Q[q, q^-1], the coefficient ring of the engine.

The deformation parameter stays symbolic: scalars are Laurent polynomials
in q with exact rational coefficients, and equality means coefficient-wise
identity.  Working symbolically is what lets a single computation certify
an identity for every nonzero q that is not a root of unity.
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = ["QScalar", "ZERO", "ONE", "Q", "QINV", "qpow"]


class QScalar:
    """Laurent polynomial in q over the rationals, kept in canonical form.

    The term map (exponent -> coefficient) never stores zeros, so
    structural equality is ring equality.  Instances are immutable and
    support ``+ - * **`` against other scalars, ints and Fractions.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        data = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    data[int(exp)] = coeff
        self._terms = data
        self._hash = None

    @staticmethod
    def promote(value) -> "QScalar":
        if isinstance(value, QScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return QScalar({0: value})
        raise TypeError(f"cannot interpret {value!r} as a scalar")

    def items(self):
        """Terms as (exponent, coefficient), ascending in the exponent."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: Fraction(1)}

    def is_single_term(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        if not isinstance(other, (QScalar, int, Fraction)):
            return NotImplemented
        other = QScalar.promote(other)
        data = dict(self._terms)
        for exp, coeff in other._terms.items():
            data[exp] = data.get(exp, Fraction(0)) + coeff
        return QScalar(data)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (QScalar, int, Fraction)):
            return NotImplemented
        return self + (-QScalar.promote(other))

    def __rsub__(self, other):
        if not isinstance(other, (QScalar, int, Fraction)):
            return NotImplemented
        return QScalar.promote(other) + (-self)

    def __neg__(self):
        return QScalar({exp: -coeff for exp, coeff in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, (QScalar, int, Fraction)):
            return NotImplemented
        other = QScalar.promote(other)
        data = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = e1 + e2
                data[exp] = data.get(exp, Fraction(0)) + c1 * c2
        return QScalar(data)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("scalar exponents must be integers")
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "QScalar":
        """Inverse of a single-term scalar c*q^k; anything else raises."""
        if len(self._terms) != 1:
            raise ValueError(f"{self} is not invertible in Q[q, q^-1]")
        (exp, coeff), = self._terms.items()
        return QScalar({-exp: 1 / coeff})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QScalar.promote(other)
        if not isinstance(other, QScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self.items()))
        return self._hash

    def evaluate(self, q0) -> Fraction:
        """Substitute a nonzero rational for q."""
        q0 = Fraction(q0)
        if q0 == 0:
            raise ValueError("cannot substitute q = 0: q^-1 is undefined")
        return sum((coeff * q0 ** exp for exp, coeff in self._terms.items()),
                   Fraction(0))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp, coeff in self.items():
            neg = coeff < 0
            mag = -coeff if neg else coeff
            if exp == 0:
                body = str(mag)
            else:
                power = "q" if exp == 1 else f"q^{exp}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"QScalar({self})"

    @classmethod
    def parse(cls, text: str) -> "QScalar":
        """Parse the rendering format: e.g. ``-1/2*q^-1 + 3*q^2``."""
        data = {}
        pos = 0
        first = True
        while pos < len(text):
            m = _TERM_RE.match(text, pos)
            if m is None or (not first and not m.group("sign")):
                raise ValueError(f"bad scalar syntax at position {pos}: {text!r}")
            sign = -1 if m.group("sign") == "-" else 1
            if m.group("num") is not None:
                coeff = Fraction(m.group("num"))
                exp = int(m.group("exp1")) if m.group("exp1") is not None else (
                    1 if m.group("hasq1") else 0)
            else:
                coeff = Fraction(1)
                exp = int(m.group("exp2")) if m.group("exp2") is not None else 1
            data[exp] = data.get(exp, Fraction(0)) + sign * coeff
            pos = m.end()
            first = False
        if first:
            raise ValueError("empty scalar")
        return cls(data)


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-]?)\s*"
    r"(?:(?P<num>\d+(?:/\d+)?)(?P<hasq1>\s*\*\s*q(?:\^(?P<exp1>-?\d+))?)?"
    r"|q(?:\^(?P<exp2>-?\d+))?)\s*")


def qpow(exp: int, coeff=1) -> QScalar:
    """The scalar coeff*q^exp."""
    return QScalar({exp: coeff})


ZERO = QScalar()
ONE = QScalar({0: 1})
Q = qpow(1)
QINV = qpow(-1)
