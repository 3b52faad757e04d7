"""Arithmetic in GF(2^n) for 2 <= n <= 16, polynomial basis, bit-packed elements.

An element is an integer in [0, 2^n); bit i is the coefficient of x^i. The
modulus is an (n+1)-bit integer encoding an irreducible polynomial the same
way.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math

MIN_DEGREE = 2
MAX_DEGREE = 16

# One primitive polynomial per degree: lowest weight first, then smallest
# integer encoding. Users may override via GF(n, modulus=...).
DEFAULT_MODULI = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100000000101011,
    15: 0b1000000000000011,
    16: 0b10000000000101101,
}


def _prime_factors(m):
    fs = set()
    d = 2
    while d * d <= m:
        while m % d == 0:
            fs.add(d)
            m //= d
        d += 1
    if m > 1:
        fs.add(m)
    return fs


class GF:
    """The field GF(2^n) with a fixed irreducible modulus."""

    def __init__(self, n, modulus=None):
        if not MIN_DEGREE <= n <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in [{MIN_DEGREE}, {MAX_DEGREE}], got {n}")
        if modulus is None:
            modulus = DEFAULT_MODULI[n]
        if modulus >> n != 1:
            raise ValueError(f"modulus {modulus:#x} does not have degree exactly {n}")
        self.n = n
        self.modulus = modulus
        self.order = 1 << n          # field size 2^n
        self._primitive = None
        self._log = None
        self._exp = None

    def __eq__(self, other):
        return isinstance(other, GF) and (self.n, self.modulus) == (other.n, other.modulus)

    def __hash__(self):
        return hash((self.n, self.modulus))

    def __repr__(self):
        return f"GF(2^{self.n}, modulus={self.modulus:#x})"

    def elements(self):
        return range(self.order)

    def _check(self, a):
        if not 0 <= a < self.order:
            raise ValueError(f"element {a} out of range for {self!r}")
        return a

    def add(self, a, b):
        self._check(a)
        self._check(b)
        return a ^ b

    def mul(self, a, b):
        """Carry-less shift-and-XOR product, reduced by the modulus."""
        self._check(a)
        self._check(b)
        n, mod = self.n, self.modulus
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a >> n & 1:
                a ^= mod
        return r

    def pow(self, a, d):
        """Square-and-multiply; by convention 0^0 = 1."""
        self._check(a)
        if d < 0:
            raise ValueError("exponent must be non-negative")
        r = 1
        while d:
            if d & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            d >>= 1
        return r

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def frobenius(self, a, i):
        """a^(2^i), the i-th power of the Frobenius automorphism."""
        if not 0 <= i < self.n:
            raise ValueError(f"Frobenius power {i} out of range [0, {self.n})")
        return self.pow(a, 1 << i)

    def primitive_element(self):
        """Smallest element of multiplicative order 2^n - 1.

        The search succeeding doubles as an irreducibility check on the
        modulus: a reducible modulus yields a ring whose unit group has no
        element of order 2^n - 1.
        """
        if self._primitive is None:
            q1 = self.order - 1
            cofactors = [q1 // p for p in _prime_factors(q1)]
            for g in range(2, self.order):
                if self.pow(g, q1) != 1:
                    continue
                if all(self.pow(g, c) != 1 for c in cofactors):
                    self._primitive = g
                    break
            else:
                raise ValueError(f"modulus {self.modulus:#x} is not irreducible: "
                                 "no element of full multiplicative order exists")
        return self._primitive

    def cube_root_of_unity(self):
        """zeta = alpha^((2^n - 1)/3); requires n even so that 3 | 2^n - 1."""
        if self.n % 2 != 0:
            raise ValueError(f"no primitive cube root of unity in GF(2^{self.n}): n must be even")
        return self.pow(self.primitive_element(), (self.order - 1) // 3)

    def subfield(self, s):
        """Elements of the subfield GF(2^s), sorted. Requires s | n."""
        if s <= 0 or self.n % s != 0:
            raise ValueError(f"GF(2^{s}) is not a subfield of GF(2^{self.n})")
        return [x for x in self.elements() if self.pow(x, 1 << s) == x]

    def _build_log_tables(self):
        if self._log is None:
            alpha = self.primitive_element()
            exp = [1] * (self.order - 1)
            log = [0] * self.order
            acc = 1
            for i in range(1, self.order - 1):
                acc = self.mul(acc, alpha)
                exp[i] = acc
                log[acc] = i
            log[1] = 0
            self._exp, self._log = exp, log

    def mul_via_log(self, a, b):
        """Log/antilog-table product; agrees bit-exactly with mul()."""
        self._check(a)
        self._check(b)
        if a == 0 or b == 0:
            return 0
        self._build_log_tables()
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def element(self, value):
        return FieldElement(self, self._check(value))

    def to_json(self):
        return {"n": self.n, "modulus": self.modulus}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["n"], obj["modulus"])


@dataclass(frozen=True)
class FieldElement:
    """An element bound to its field, with operator sugar and field checks."""

    field: GF
    value: int

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"mismatched fields: {self.field!r} vs {other.field!r}")
            return other.value
        return self.field._check(other)

    def __add__(self, other):
        return FieldElement(self.field, self.value ^ self._coerce(other))

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __pow__(self, d):
        return FieldElement(self.field, self.field.pow(self.value, d))

    def __invert__(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0


@lru_cache(maxsize=None)
def kloosterman(n):
    """Kloosterman sum K over GF(2^n), by the explicit binomial formula.

    K = 1 + ((-1)^(n-1) / 2^(n-1)) * sum_{i=0}^{floor(n/2)} (-1)^i C(n, 2i) 7^i.
    Exact integer arithmetic throughout; the division must come out exact.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    total = sum((-1) ** i * math.comb(n, 2 * i) * 7 ** i for i in range(n // 2 + 1))
    k = 1 + Fraction((-1) ** (n - 1) * total, 1 << (n - 1))
    if k.denominator != 1:
        raise ArithmeticError(f"Kloosterman sum for n={n} is not an integer: {k}")
    return int(k)
