"""Fixed seeds of the octic and bioctic Lucasian sequences, computed mod M.

The seeds come from

    alpha_1 = (pi_1 / conj(pi_1)) ^ (1 + 3 s_3)                  in Z[zeta_8]
    alpha_2 = (pi_2 / conj(pi_2)) ^ (1 + 3 s_-5 + 5 s_-3 + 7 s_7)  in Z[zeta_16]

with pi_1 = 1 + 2 zeta_8^3 and pi_2 = 1 - zeta_16 + zeta_16^5.  Both have
norm 17, so the exact seeds live in Z[1/17] and everything below only
ever inverts 17 mod M.

No root-of-unity correction is applied to pi_2: any such factor mu has
mu^(2^(n-3)) = 1 once n >= 7, so it drops out of the tested powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Sequence, Union

from .cyclotomic import (
    CycResidue,
    GaloisElement,
    cyc_conj,
    cyc_inv,
    cyc_mul,
    cyc_pow,
    cyc_pow_group_ring,
    galois_apply,
    rational_part,
)
from .modnum import Residue, SpecialForm

# coefficient vectors over 1, zeta, zeta^2, ...
PI1_COEFFS = (1, 0, 0, 2)
PI2_COEFFS = (1, -1, 0, 0, 0, 1, 0, 0)

# group-ring exponents as {c: weight}
TAU1 = {1: 1, 3: 3}
TAU2 = {1: 1, -5: 3, -3: 5, 7: 7}

# conjugates of eta over the maximal real subfield
OCTIC_CONJUGATES = (1, 3)
BIOCTIC_CONJUGATES = (1, 3, 5, 7)


@dataclass(frozen=True)
class PiConstants:
    pi1: CycResidue
    pi2: CycResidue
    tau1: dict
    tau2: dict

    @classmethod
    def for_modulus(cls, m: SpecialForm) -> "PiConstants":
        return cls(
            pi1=CycResidue.from_ints(8, PI1_COEFFS, m),
            pi2=CycResidue.from_ints(16, PI2_COEFFS, m),
            tau1=dict(TAU1),
            tau2=dict(TAU2),
        )


@dataclass(frozen=True)
class OcticSeeds:
    T0: Residue
    N0: Residue
    h: int
    modulus: SpecialForm

    kind = "octic"

    def as_tuple(self) -> tuple[int, ...]:
        return (self.T0.value, self.N0.value)


@dataclass(frozen=True)
class BiocticSeeds:
    X0: Residue
    Y0: Residue
    Z0: Residue
    W0: Residue
    h: int
    modulus: SpecialForm

    kind = "bioctic"

    def as_tuple(self) -> tuple[int, ...]:
        return (self.X0.value, self.Y0.value, self.Z0.value, self.W0.value)


SeedSet = Union[OcticSeeds, BiocticSeeds]


def unit_ratio(pi: CycResidue) -> CycResidue:
    """pi / conj(pi); raises NotInvertible when 17 shares a factor with M."""
    return cyc_mul(pi, cyc_inv(cyc_conj(pi)))


def alpha1(m: SpecialForm) -> CycResidue:
    pi1 = CycResidue.from_ints(8, PI1_COEFFS, m)
    return cyc_pow_group_ring(unit_ratio(pi1), TAU1)


def alpha2(m: SpecialForm) -> CycResidue:
    pi2 = CycResidue.from_ints(16, PI2_COEFFS, m)
    return cyc_pow_group_ring(unit_ratio(pi2), TAU2)


def eta(alpha: CycResidue, e: int) -> CycResidue:
    """alpha^e + conj(alpha)^e."""
    a = cyc_pow(alpha, e)
    return a + cyc_conj(a)


def elementary_symmetric(values: Sequence) -> list:
    """e_1, ..., e_k of the given ring elements (which must support * and +)."""
    out = []
    for r in range(1, len(values) + 1):
        terms = [prod(c[1:], start=c[0]) for c in combinations(values, r)]
        total = terms[0]
        for t in terms[1:]:
            total = total + t
        out.append(total)
    return out


def real_conjugates(x: CycResidue, labels: Sequence[int]) -> list[CycResidue]:
    return [galois_apply(GaloisElement(x.m, c), x) for c in labels]


def symmetric_invariants(x: CycResidue) -> list[Residue]:
    """Elementary symmetric functions of the real conjugates of x, in Z/M."""
    labels = OCTIC_CONJUGATES if x.m == 8 else BIOCTIC_CONJUGATES
    return [rational_part(e) for e in elementary_symmetric(real_conjugates(x, labels))]


def compute_octic_seeds(m: SpecialForm, h: int | None = None) -> OcticSeeds:
    h = m.h if h is None else h
    T0, N0 = symmetric_invariants(eta(alpha1(m), h))
    return OcticSeeds(T0, N0, h, m)


def compute_bioctic_seeds(m: SpecialForm, h: int | None = None) -> BiocticSeeds:
    h = m.h if h is None else h
    X0, Y0, Z0, W0 = symmetric_invariants(eta(alpha2(m), h))
    return BiocticSeeds(X0, Y0, Z0, W0, h, m)
