"""Residue arithmetic modulo M = h*2^n + sign, with a folding reduction.

The fold uses h*2^n == -sign (mod M).  Writing x = a*2^n + b with
b < 2^n and a = q*h + s, we get

    x == s*2^n + b - sign*q   (mod M)

which only needs shifts, a mask and a division by h.  For small h that is
a single-limb division, so one fold costs O(size of x).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd


class ModulusMismatch(ValueError):
    pass


class NotInvertible(ArithmeticError):
    """Raised when an element shares a factor with M.

    ``factor`` is gcd(value, M).  When 1 < factor < M it splits M and is
    reported upstream as a compositeness witness.
    """

    def __init__(self, factor: int, modulus: int):
        super().__init__(f"not invertible mod {modulus}: gcd = {factor}")
        self.factor = factor
        self.modulus = modulus


@dataclass(frozen=True)
class SpecialForm:
    h: int
    n: int
    sign: int
    value: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.h <= 0 or self.h % 2 == 0:
            raise ValueError(f"h must be odd and positive, got {self.h}")
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        M = (self.h << self.n) + self.sign
        if M < 3:
            raise ValueError(f"M = {M} is too small")
        object.__setattr__(self, "value", M)

    @property
    def M(self) -> int:
        return self.value

    @property
    def window_valid(self) -> bool:
        """True when the Lucasian criterion applies to this form."""
        return self.n >= 7 and self.h < (1 << (self.n - 6)) and self.h % 17 != 0

    def expression(self) -> str:
        return f"{self.h}*2^{self.n}{'+' if self.sign > 0 else '-'}1"

    def residue(self, x: int) -> "Residue":
        return Residue(reduce_special(x, self), self)

    def __str__(self):
        return self.expression()


def reduce_special(x: int, m: SpecialForm) -> int:
    """Return x mod M using the special shape of M.  Accepts negative x."""
    n, h, M = m.n, m.h, m.value
    if 0 <= x < M:
        return x
    neg = x < 0
    if neg:
        x = -x
    limit = n + h.bit_length() + 1
    mask = (1 << n) - 1
    while x.bit_length() > limit:
        a, b = x >> n, x & mask
        if h == 1:
            q, s = a, 0
        else:
            q, s = divmod(a, h)
        x = (s << n) + b - m.sign * q
        if x < 0:
            x = -x
            neg = not neg
    # |x| is now within a few multiples of M
    x %= M
    if neg and x:
        x = M - x
    return x


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: SpecialForm

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.value:
            raise ValueError(f"{self.value} not reduced mod {self.modulus.value}")

    def _check(self, other: "Residue") -> None:
        if other.modulus != self.modulus:
            raise ModulusMismatch(f"{self.modulus} vs {other.modulus}")

    def __int__(self):
        return self.value

    def __add__(self, other: "Residue") -> "Residue":
        return mod_add(self, other)

    def __sub__(self, other: "Residue") -> "Residue":
        return mod_sub(self, other)

    def __mul__(self, other: "Residue") -> "Residue":
        return mod_mul(self, other)

    def __pow__(self, e: int) -> "Residue":
        return mod_pow(self, e)


def mod_add(a: Residue, b: Residue) -> Residue:
    a._check(b)
    v = a.value + b.value
    M = a.modulus.value
    return Residue(v - M if v >= M else v, a.modulus)


def mod_sub(a: Residue, b: Residue) -> Residue:
    a._check(b)
    v = a.value - b.value
    return Residue(v + a.modulus.value if v < 0 else v, a.modulus)


def mod_mul(a: Residue, b: Residue) -> Residue:
    a._check(b)
    return Residue(reduce_special(a.value * b.value, a.modulus), a.modulus)


def mod_pow(a: Residue, e: int) -> Residue:
    if e < 0:
        return mod_pow(mod_inv(a), -e)
    m = a.modulus
    result, base = 1, a.value
    while e:
        if e & 1:
            result = reduce_special(result * base, m)
        e >>= 1
        if e:
            base = reduce_special(base * base, m)
    return Residue(result % m.value, m)


def inverse_int(x: int, M: int) -> int:
    """Inverse of x modulo M; raises NotInvertible carrying gcd(x, M)."""
    g = gcd(x % M, M)
    if g != 1:
        raise NotInvertible(g, M)
    return pow(x, -1, M)


def mod_inv(a: Residue) -> Residue:
    return Residue(inverse_int(a.value, a.modulus.value), a.modulus)
