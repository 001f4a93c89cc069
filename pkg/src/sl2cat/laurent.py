"""Laurent polynomials in q with integer coefficients.

Values are immutable. The coefficient map never stores zeros, so two
polynomials are equal exactly when their dictionaries are equal.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Union

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if not isinstance(e, int) or not isinstance(v, int):
                    raise TypeError("exponents and coefficients must be int")
                if v:
                    c[e] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPoly":
        # caller guarantees no zero values
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, c)

    @staticmethod
    def coerce(x: Scalar) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def is_unit(self) -> bool:
        """True for +-q^k, the units of Z[q, q^-1]."""
        return len(self._c) == 1 and abs(next(iter(self._c.values()))) == 1

    # -- ring operations
    def __add__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: v * other for e, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c: dict = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers")
            (e, v), = self._c.items()
            return LaurentPoly._raw({-e * -k: v ** (-k)})
        r = ONE
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def bar(self) -> "LaurentPoly":
        return LaurentPoly._raw({-e: v for e, v in self._c.items()})

    def at_one(self) -> int:
        """Specialize at q = 1."""
        return sum(self._c.values())

    def evaluate(self, q):
        return sum(v * q ** e for e, v in self._c.items())

    def divmod_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ArithmeticError if a remainder is left."""
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return ZERO
        dtop = other.max_exp()
        dlead = other._c[dtop]
        dlow = other.min_exp()
        rem = dict(self._c)
        quot: dict = {}
        while rem:
            top = max(rem)
            if top - dtop + dlow < min(rem):
                raise ArithmeticError("division is not exact")
            lead = rem[top]
            if lead % dlead:
                raise ArithmeticError("division is not exact")
            k = lead // dlead
            shift = top - dtop
            quot[shift] = k
            for e, v in other._c.items():
                s = rem.get(e + shift, 0) - k * v
                if s:
                    rem[e + shift] = s
                else:
                    rem.pop(e + shift, None)
        return LaurentPoly._raw(quot)

    def __floordiv__(self, other: Scalar) -> "LaurentPoly":
        return self.divmod_exact(LaurentPoly.coerce(other))

    # -- comparison, hashing
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- serialization
    def to_json(self) -> dict:
        return {str(e): v for e, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, d: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(e): int(v) for e, v in d.items()})

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for e, v in sorted(self._c.items(), reverse=True):
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "q"
            else:
                mono = f"q^{e}"
            if mono and abs(v) == 1:
                coef = "-" if v < 0 else ""
            else:
                coef = str(v) + ("*" if mono else "")
            terms.append(coef + mono)
        s = " + ".join(terms)
        return s.replace("+ -", "- ")


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
q = LaurentPoly._raw({1: 1})
qinv = LaurentPoly._raw({-1: 1})


def qpow(k: int) -> LaurentPoly:
    return LaurentPoly._raw({k: 1})


def bar(p: Scalar) -> LaurentPoly:
    return LaurentPoly.coerce(p).bar()


@lru_cache(maxsize=None)
def quantum_int(a: int) -> LaurentPoly:
    """[a] = q^(a-1) + q^(a-3) + ... + q^(1-a), and [-a] = -[a]."""
    if a < 0:
        return -quantum_int(-a)
    return LaurentPoly._raw({a - 1 - 2 * k: 1 for k in range(a)})


@lru_cache(maxsize=None)
def quantum_factorial(a: int) -> LaurentPoly:
    if a < 0:
        raise ValueError("factorial of a negative integer")
    r = ONE
    for k in range(2, a + 1):
        r = r * quantum_int(k)
    return r


@lru_cache(maxsize=None)
def quantum_binomial(a: int, b: int) -> LaurentPoly:
    """[a, b] = [a]! / ([b]! [a-b]!), by exact division."""
    if a < 0 or b < 0 or b > a:
        raise ValueError(f"quantum_binomial needs 0 <= b <= a, got ({a}, {b})")
    den = quantum_factorial(b) * quantum_factorial(a - b)
    return quantum_factorial(a).divmod_exact(den)


def lsum(items: Iterable[Scalar]) -> LaurentPoly:
    r = ZERO
    for x in items:
        r = r + x
    return r
