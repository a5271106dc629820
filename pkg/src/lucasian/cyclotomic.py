"""Arithmetic in (Z/M)[zeta_m] for m = 8, 16.

Elements are dense coefficient vectors over 1, zeta, ..., zeta^(d-1) with
d = m/2 and zeta^d = -1, so multiplication is a negacyclic convolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .modnum import NotInvertible, Residue, SpecialForm, inverse_int, reduce_special

ORDERS = (8, 16)


class NotRational(ArithmeticError):
    """A quantity expected to lie in Z/M still has zeta components."""


@dataclass(frozen=True)
class GaloisElement:
    """sigma_c : zeta_m -> zeta_m^c, with c stored in [0, m)."""

    m: int
    c: int

    def __post_init__(self):
        if self.m not in ORDERS:
            raise ValueError(f"unsupported cyclotomic order {self.m}")
        c = self.c % self.m
        if c % 2 == 0:
            raise ValueError(f"sigma_{self.c} is not an automorphism for m={self.m}")
        object.__setattr__(self, "c", c)

    def __mul__(self, other: "GaloisElement") -> "GaloisElement":
        if other.m != self.m:
            raise ValueError("composing automorphisms of different fields")
        return GaloisElement(self.m, self.c * other.c)

    @property
    def label(self) -> int:
        """Signed representative in (-m/2, m/2)."""
        return self.c - self.m if self.c > self.m // 2 else self.c


def galois_group(m: int) -> list[GaloisElement]:
    return [GaloisElement(m, c) for c in range(1, m, 2)]


@dataclass(frozen=True)
class CycResidue:
    m: int
    coeffs: tuple[int, ...]
    modulus: SpecialForm

    def __post_init__(self):
        if self.m not in ORDERS:
            raise ValueError(f"unsupported cyclotomic order {self.m}")
        if len(self.coeffs) != self.m // 2:
            raise ValueError(f"expected {self.m // 2} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_ints(cls, m: int, coeffs: Iterable[int], modulus: SpecialForm) -> "CycResidue":
        M = modulus.value
        return cls(m, tuple(c % M for c in coeffs), modulus)

    @classmethod
    def constant(cls, m: int, c: int, modulus: SpecialForm) -> "CycResidue":
        return cls.from_ints(m, [c] + [0] * (m // 2 - 1), modulus)

    @classmethod
    def zeta_power(cls, m: int, i: int, modulus: SpecialForm) -> "CycResidue":
        d = m // 2
        i %= m
        coeffs = [0] * d
        coeffs[i % d] = 1 if i < d else -1
        return cls.from_ints(m, coeffs, modulus)

    @property
    def degree(self) -> int:
        return self.m // 2

    def _check(self, other: "CycResidue") -> None:
        if other.m != self.m or other.modulus != self.modulus:
            raise ValueError("mismatched cyclotomic rings")

    def __add__(self, other: "CycResidue") -> "CycResidue":
        self._check(other)
        M = self.modulus.value
        return CycResidue(self.m, tuple((a + b) % M for a, b in zip(self.coeffs, other.coeffs)), self.modulus)

    def __sub__(self, other: "CycResidue") -> "CycResidue":
        self._check(other)
        M = self.modulus.value
        return CycResidue(self.m, tuple((a - b) % M for a, b in zip(self.coeffs, other.coeffs)), self.modulus)

    def __neg__(self) -> "CycResidue":
        M = self.modulus.value
        return CycResidue(self.m, tuple(-a % M for a in self.coeffs), self.modulus)

    def __mul__(self, other: "CycResidue") -> "CycResidue":
        return cyc_mul(self, other)

    def scale(self, k: int) -> "CycResidue":
        M = self.modulus.value
        return CycResidue(self.m, tuple(a * k % M for a in self.coeffs), self.modulus)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __pow__(self, e: int) -> "CycResidue":
        return cyc_pow(self, e)


def cyc_mul(a: CycResidue, b: CycResidue) -> CycResidue:
    a._check(b)
    d = a.degree
    acc = [0] * d
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            k = i + j
            if k < d:
                acc[k] += x * y
            else:
                acc[k - d] -= x * y
    m = a.modulus
    return CycResidue(a.m, tuple(reduce_special(v, m) for v in acc), m)


def galois_apply(s: GaloisElement, a: CycResidue) -> CycResidue:
    if s.m != a.m:
        raise ValueError("automorphism and element live in different rings")
    if s.c == 1:
        return a
    d, m = a.degree, a.m
    out = [0] * d
    for i, x in enumerate(a.coeffs):
        j = i * s.c % m
        if j < d:
            out[j] += x
        else:
            out[j - d] -= x
    return CycResidue.from_ints(m, out, a.modulus)


def cyc_conj(a: CycResidue) -> CycResidue:
    return galois_apply(GaloisElement(a.m, -1), a)


def cyc_pow(a: CycResidue, e: int) -> CycResidue:
    if e < 0:
        return cyc_pow(cyc_inv(a), -e)
    result = CycResidue.constant(a.m, 1, a.modulus)
    base = a
    while e:
        if e & 1:
            result = cyc_mul(result, base)
        e >>= 1
        if e:
            base = cyc_mul(base, base)
    return result


def rational_part(a: CycResidue) -> Residue:
    if not a.is_rational():
        raise NotRational(f"non-rational element {a.coeffs}")
    return Residue(a.coeffs[0], a.modulus)


def norm(a: CycResidue) -> Residue:
    """Product of all Galois conjugates of a, as a residue mod M."""
    prod = a
    for s in galois_group(a.m)[1:]:
        prod = cyc_mul(prod, galois_apply(s, a))
    return rational_part(prod)


def trace(a: CycResidue) -> Residue:
    total = a
    for s in galois_group(a.m)[1:]:
        total = total + galois_apply(s, a)
    return rational_part(total)


def cyc_inv(a: CycResidue) -> CycResidue:
    """Inverse via the product of the non-trivial conjugates over the norm.

    A norm sharing a factor with M raises NotInvertible; that gcd is a
    divisor of M.
    """
    cofactor = CycResidue.constant(a.m, 1, a.modulus)
    for s in galois_group(a.m)[1:]:
        cofactor = cyc_mul(cofactor, galois_apply(s, a))
    nrm = rational_part(cyc_mul(a, cofactor)).value
    return cofactor.scale(inverse_int(nrm, a.modulus.value))


def cyc_pow_group_ring(a: CycResidue, tau: Mapping[int, int], e: int = 1) -> CycResidue:
    """Return (prod_c sigma_c(a)^k_c)^e for tau = {c: k_c}.

    Labels c are taken mod m, so {1: 1, 3: 3} is 1 + 3*sigma_3.
    """
    result = CycResidue.constant(a.m, 1, a.modulus)
    inv = None
    for c, k in tau.items():
        if k == 0:
            continue
        base = a
        if k < 0:
            if inv is None:
                inv = cyc_inv(a)
            base, k = inv, -k
        result = cyc_mul(result, cyc_pow(galois_apply(GaloisElement(a.m, c), base), k))
    return cyc_pow(result, e)


__all__ = [
    "CycResidue",
    "GaloisElement",
    "NotInvertible",
    "NotRational",
    "cyc_conj",
    "cyc_inv",
    "cyc_mul",
    "cyc_pow",
    "cyc_pow_group_ring",
    "galois_apply",
    "galois_group",
    "norm",
    "rational_part",
    "trace",
]
