"""Independent ground truth for validating the Lucasian decision.

Nothing in here reuses the core residue or cyclotomic arithmetic, except
``residue_symbol_diag`` which deliberately inspects the core's own
alpha powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import isqrt

# Deterministic for n < 3317044064679887385961981 (first 13 primes as bases).
MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MR_DETERMINISTIC_BOUND = 3317044064679887385961981
# extra fixed bases used above the bound (strong probable prime test)
MR_EXTRA_BASES = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

SMALL_PRIMES = tuple(p for p in range(2, 200) if all(p % d for d in range(2, isqrt(p) + 1)))

EXACT_H_LIMIT = 63


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime_oracle(x: int) -> bool:
    """Miller-Rabin with fixed bases; deterministic below 3.3e24."""
    if x < 2:
        return False
    for p in SMALL_PRIMES:
        if x % p == 0:
            return x == p
    bases = MR_BASES if x < MR_DETERMINISTIC_BOUND else MR_BASES + MR_EXTRA_BASES
    return all(_strong_probable_prime(x, a) for a in bases)


def trial_division(x: int, limit: int | None = None) -> int | None:
    """Smallest prime factor of x up to `limit` (default sqrt(x)), or None."""
    if x % 2 == 0:
        return 2 if x > 2 else None
    bound = isqrt(x) if limit is None else min(limit, isqrt(x))
    d = 3
    while d <= bound:
        if x % d == 0:
            return d
        d += 2
    return None


def lucas_lehmer(p: int) -> bool:
    """Classical Lucas-Lehmer test of 2^p - 1 for an odd prime p."""
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    Mp = (1 << p) - 1
    u = 4
    for _ in range(p - 2):
        u = (u * u - 2) % Mp
    return u == 0


# -- exact arithmetic in Q(zeta_m) -------------------------------------------


@dataclass(frozen=True)
class ExactCycNumber:
    m: int
    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, m: int, coeffs) -> "ExactCycNumber":
        return cls(m, tuple(Fraction(c) for c in coeffs))

    @classmethod
    def one(cls, m: int) -> "ExactCycNumber":
        return cls.of(m, [1] + [0] * (m // 2 - 1))

    def __add__(self, other: "ExactCycNumber") -> "ExactCycNumber":
        return ExactCycNumber(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "ExactCycNumber") -> "ExactCycNumber":
        # full product in Q[x], then reduce by x^d + 1
        d = self.m // 2
        full = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    full[i + j] += a * b
        for k in range(2 * d - 2, d - 1, -1):
            full[k - d] -= full[k]
        return ExactCycNumber(self.m, tuple(full[:d]))

    def scale(self, c: Fraction) -> "ExactCycNumber":
        return ExactCycNumber(self.m, tuple(a * c for a in self.coeffs))

    def sigma(self, c: int) -> "ExactCycNumber":
        """Image under zeta -> zeta^c."""
        d, m = self.m // 2, self.m
        out = [Fraction(0)] * d
        for i, a in enumerate(self.coeffs):
            e = (i * c) % m
            if e >= d:
                out[e - d] -= a
            else:
                out[e] += a
        return ExactCycNumber(m, tuple(out))

    def power(self, e: int) -> "ExactCycNumber":
        result, base = ExactCycNumber.one(self.m), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def rational(self) -> Fraction:
        assert not any(self.coeffs[1:]), f"not rational: {self.coeffs}"
        return self.coeffs[0]

    def inverse(self) -> "ExactCycNumber":
        cof = ExactCycNumber.one(self.m)
        for c in range(3, self.m, 2):
            cof = cof * self.sigma(c)
        nrm = (self * cof).rational()
        return cof.scale(1 / nrm)


def _exact_alpha(which: str) -> ExactCycNumber:
    if which == "octic":
        pi = ExactCycNumber.of(8, [1, 0, 0, 2])
        tau = {1: 1, 3: 3}
    elif which == "bioctic":
        pi = ExactCycNumber.of(16, [1, -1, 0, 0, 0, 1, 0, 0])
        tau = {1: 1, 11: 3, 13: 5, 7: 7}
    else:
        raise ValueError(f"unknown sequence kind {which!r}")
    ratio = pi * pi.sigma(-1).inverse()
    alpha = ExactCycNumber.one(pi.m)
    for c, k in tau.items():
        alpha = alpha * ratio.sigma(c).power(k)
    return alpha


def _is_17_power(d: int) -> bool:
    while d % 17 == 0:
        d //= 17
    return d == 1


def exact_seeds(h: int, which: str) -> tuple[Fraction, ...]:
    """Exact rational seed tuple for multiplier h."""
    if not 1 <= h <= EXACT_H_LIMIT:
        raise ValueError(f"exact seeds are only computed for 1 <= h <= {EXACT_H_LIMIT}")
    alpha = _exact_alpha(which)
    a = alpha.power(h)
    eta = a + a.sigma(-1)
    assert eta.sigma(-1) == eta
    labels = (1, 3) if which == "octic" else (1, 3, 5, 7)
    conj = [eta.sigma(c) for c in labels]
    out = []
    for r in range(1, len(conj) + 1):
        total = ExactCycNumber.of(eta.m, [0] * (eta.m // 2))
        for combo in combinations(conj, r):
            term = ExactCycNumber.one(eta.m)
            for x in combo:
                term = term * x
            total = total + term
        value = total.rational()
        assert _is_17_power(value.denominator), value
        out.append(value)
    return tuple(out)


def reduce_rational(q: Fraction, M: int) -> int:
    return q.numerator * pow(q.denominator, -1, M) % M


def exact_seeds_mod(h: int, which: str, M: int) -> tuple[int, ...]:
    return tuple(reduce_rational(q, M) for q in exact_seeds(h, which))


# -- residue symbol diagnostic -----------------------------------------------


class SymbolMismatch(AssertionError):
    pass


# admissible zeta_8 exponents of (pi_1/M)_8 per case
_OCTIC_PATTERNS = {"I": {4}, "II": {2, 6}, "III": {1, 3, 5, 7}, "IV": {0}}


def residue_symbol_diag(form, which: str | None = None) -> int:
    """Exponent i with alpha^(h*2^(n-3)) == zeta_8^i (octic) or
    alpha_2^(h*2^(n-4)) == zeta_16^i (bioctic), checked against the case.

    `form` must be an in-window SpecialForm with M prime.
    """
    from .cyclotomic import CycResidue, cyc_pow
    from .decision import classify
    from .seeds import alpha1, alpha2

    if not is_prime_oracle(form.value):
        raise ValueError(f"{form} is not prime")
    tag = classify(form)
    if which is None:
        which = "bioctic" if tag.case.value == "IV" else "octic"
    if which == "octic":
        m, alpha, e = 8, alpha1(form), form.h << (form.n - 3)
    else:
        m, alpha, e = 16, alpha2(form), form.h << (form.n - 4)
    power = cyc_pow(alpha, e)
    for i in range(m):
        if power == CycResidue.zeta_power(m, i, form):
            break
    else:
        raise SymbolMismatch(f"{form}: alpha power is not a {m}-th root of unity")
    if m == 8:
        expected = _OCTIC_PATTERNS[tag.case.value]
    elif tag.case.value == "IV":
        expected = {8}
    else:
        # only case IV pins the 16th-power symbol
        expected = set(range(16))
    if i not in expected:
        raise SymbolMismatch(f"{form}: case {tag.case.value} predicts {sorted(expected)}, got zeta_{m}^{i}")
    return i


def predicted_octic_index(form) -> int:
    """Exponent of zeta_8 the octic alpha power should equal for prime M.

    Uses 2 == zeta_8 (mod pi_1): the symbol is zeta_8^i with
    2^i == (M*)^2 (mod 17), conjugated when M == -1 (mod 8).
    """
    m_star = (form.sign * form.h * pow(2, form.n, 17) + 1) % 17
    target = m_star * m_star % 17
    i = next(i for i in range(8) if pow(2, i, 17) == target)
    return i * form.sign % 8
