"""Exact ground fields: arbitrary-precision rationals and prime fields.

Every coefficient ring in the package is an algebra over one of these.
Field elements are plain values (``fractions.Fraction`` for the rationals,
:class:`ModInt` for prime fields) and all arithmetic goes through the
usual operators, so generic code never needs to know which field it is
working over.  The descriptor objects (:data:`QQ`, :class:`PrimeField`)
carry the constants, coercions and capability flags shared with the
coefficient-ring descriptors in :mod:`snforge.rings`.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ArithmeticError):
    """Raised for invalid field operations (division by zero, bad coercion)."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class ModInt:
    """A residue in F_p, always stored in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise FieldError("mixed prime fields: %d vs %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return ModInt(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ModInt(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ModInt(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ModInt(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ModInt(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return ModInt(-self.value, self.p)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ModInt(pow(self.value, e, self.p), self.p)

    def inverse(self) -> "ModInt":
        if self.value == 0:
            raise FieldError("division by zero in F_%d" % self.p)
        return ModInt(pow(self.value, self.p - 2, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "ModInt(%d, %d)" % (self.value, self.p)

    def __str__(self):
        return str(self.value)


class Rationals:
    """Descriptor for the field of arbitrary-precision rationals."""

    family = "rationals"
    is_field = True
    has_gcd = True
    is_pid = True
    is_findim = True
    is_series = False
    is_product = False
    is_commutative = True
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def of(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)):
            try:
                return Fraction(x)
            except (ValueError, ZeroDivisionError) as exc:
                raise FieldError("bad rational literal %r" % (x,)) from exc
        raise FieldError("cannot coerce %r into the rationals" % (x,))

    def from_field(self, f: Fraction) -> Fraction:
        return f

    def scale(self, f: Fraction, s: Fraction) -> Fraction:
        return f * s

    def is_zero(self, a: Fraction) -> bool:
        return a == 0

    def is_unit(self, a: Fraction) -> bool:
        return a != 0

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise FieldError("division by zero in the rationals")
        return 1 / a

    def size(self):
        return None

    def elem_to_json(self, a: Fraction) -> str:
        return str(a)

    def elem_from_json(self, obj) -> Fraction:
        if not isinstance(obj, str):
            raise FieldError("rational literals must be strings, got %r" % (obj,))
        return self.of(obj)

    def is_square(self, a: Fraction) -> bool:
        """Exact test for membership in (Q^x)^2 (and 0)."""
        if a < 0:
            return False
        from math import isqrt

        n, d = a.numerator, a.denominator
        return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d

    def sqrt(self, a: Fraction) -> Fraction:
        from math import isqrt

        if not self.is_square(a):
            raise FieldError("%s is not a square in the rationals" % a)
        return Fraction(isqrt(a.numerator), isqrt(a.denominator))

    def to_json(self):
        return {"family": "rationals"}

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "QQ"

    def describe(self):
        return "Q"


QQ = Rationals()


class PrimeField:
    """Descriptor for F_p, p an odd prime (p = 2 is allowed but most
    algebra constructions here require characteristic != 2)."""

    family = "prime_field"
    is_field = True
    has_gcd = True
    is_pid = True
    is_findim = True
    is_series = False
    is_product = False
    is_commutative = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError("%d is not prime" % p)
        self.p = p
        self.characteristic = p
        self.zero = ModInt(0, p)
        self.one = ModInt(1, p)

    def of(self, x) -> ModInt:
        if isinstance(x, ModInt):
            if x.p != self.p:
                raise FieldError("mixed prime fields")
            return x
        if isinstance(x, int):
            return ModInt(x, self.p)
        if isinstance(x, str):
            try:
                return ModInt(int(x, 10), self.p)
            except ValueError as exc:
                raise FieldError("bad residue literal %r" % (x,)) from exc
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError("denominator of %s vanishes mod %d" % (x, self.p))
            return ModInt(x.numerator, self.p) / ModInt(x.denominator, self.p)
        raise FieldError("cannot coerce %r into F_%d" % (x, self.p))

    def from_field(self, f: ModInt) -> ModInt:
        return f

    def scale(self, f: ModInt, s: ModInt) -> ModInt:
        return f * s

    def is_zero(self, a: ModInt) -> bool:
        return a.value == 0

    def is_unit(self, a: ModInt) -> bool:
        return a.value != 0

    def inv(self, a: ModInt) -> ModInt:
        return a.inverse()

    def size(self):
        return self.p

    def elem_to_json(self, a: ModInt) -> str:
        return str(a.value)

    def elem_from_json(self, obj) -> ModInt:
        if not isinstance(obj, str):
            raise FieldError("residue literals must be strings, got %r" % (obj,))
        return self.of(obj)

    def is_square(self, a: ModInt) -> bool:
        if a.value == 0:
            return True
        if self.p == 2:
            return True
        return pow(a.value, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a: ModInt) -> ModInt:
        """Tonelli-Shanks square root in F_p."""
        if not self.is_square(a):
            raise FieldError("%s is not a square in F_%d" % (a, self.p))
        p = self.p
        n = a.value
        if n == 0:
            return self.zero
        if p == 2 or p % 4 == 3:
            return ModInt(pow(n, (p + 1) // 4, p) if p % 4 == 3 else n, p)
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
        while t != 1:
            i, t2i = 1, t * t % p
            while t2i != 1:
                t2i = t2i * t2i % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            r, c, t, m = r * b % p, b * b % p, t * b * b % p, i
        return ModInt(r, p)

    def to_json(self):
        return {"family": "prime_field", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime_field", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p

    def describe(self):
        return "F_%d" % self.p
