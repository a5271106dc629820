"""Primality decision for h*2^n +- 1 via the generalized Lucasian criterion."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .modnum import NotInvertible, SpecialForm
from .seeds import compute_bioctic_seeds, compute_octic_seeds
from .sequences import BiocticState, OcticState, iterate


class Case(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"


_CASE_BY_RESIDUE = {}
for _r in (4, 13):
    _CASE_BY_RESIDUE[_r] = Case.I
for _r in (2, 15, 8, 9):
    _CASE_BY_RESIDUE[_r] = Case.II
for _r in (3, 14, 5, 12, 6, 11, 7, 10):
    _CASE_BY_RESIDUE[_r] = Case.III
_CASE_BY_RESIDUE[16] = Case.IV


@dataclass(frozen=True)
class CaseTag:
    case: Case
    m_star: int

    @property
    def name(self) -> str:
        return self.case.value


class Status(enum.Enum):
    PRIME = "prime"
    COMPOSITE = "composite"
    NOT_APPLICABLE = "not-applicable"


@dataclass
class Verdict:
    status: Status
    form: SpecialForm
    case: Optional[CaseTag] = None
    factor: Optional[int] = None
    reason: str = ""
    steps: int = 0
    final_state: Optional[tuple[int, ...]] = None
    seeds: Optional[tuple[int, ...]] = None
    elapsed: float = 0.0

    @property
    def is_prime(self) -> bool:
        return self.status is Status.PRIME

    @property
    def is_composite(self) -> bool:
        return self.status is Status.COMPOSITE


@dataclass(frozen=True)
class QFilter:
    n: int
    modulus_pow: int
    Q: tuple[int, ...]

    def first_divisor(self, M: int) -> Optional[int]:
        for q in self.Q:
            if M % q == 0:
                return q
        return None


def m_star_mod17(m: SpecialForm) -> int:
    """((-1)^((M-1)/2) * M) mod 17, i.e. (sign*h)*2^n + 1 mod 17."""
    return (m.sign * m.h * pow(2, m.n, 17) + 1) % 17


def classify(m: SpecialForm) -> Optional[CaseTag]:
    """Case tag from M* mod 17; None when M* is 0 or 1 mod 17."""
    r = m_star_mod17(m)
    case = _CASE_BY_RESIDUE.get(r)
    return CaseTag(case, r) if case else None


@lru_cache(maxsize=256)
def build_q_filter(n: int) -> QFilter:
    """The seven solutions of x^4 == 1 mod 2^(n-3) lying strictly between 1 and 2^(n-3)."""
    if n < 7:
        raise ValueError(f"Q filter needs n >= 7, got {n}")
    mod = 1 << (n - 3)
    s = pow(5, 1 << (n - 7), mod)
    roots = set()
    p = 1
    for _ in range(4):
        roots.add(p)
        roots.add(mod - p)
        p = p * s % mod
    roots.discard(1)
    return QFilter(n, mod, tuple(sorted(roots)))


def apply_q_filter(f: QFilter, m: SpecialForm) -> Optional[int]:
    """Return a Q_i dividing M, or None if M passes."""
    return f.first_divisor(m.value)


def window_reason(m: SpecialForm) -> str:
    if m.h % 17 == 0:
        return "h == 0 mod 17"
    if m.n < 7:
        return "n < 7"
    if m.h >= 1 << (m.n - 6):
        return "h >= 2^(n-6)"
    return ""


def case_targets(case: Case, M: int) -> tuple[int, ...]:
    if case is Case.I:
        t = (-4, 4)
    elif case is Case.II:
        t = (0, 0)
    elif case is Case.III:
        t = (0, -2)
    else:
        t = (-8, 24, -32, 16)
    return tuple(v % M for v in t)


def run_sequence(m: SpecialForm, case: Case) -> tuple[OcticState | BiocticState, tuple[int, ...]]:
    """Seeds and final state for the sequence a case uses."""
    if case is Case.IV:
        seeds = compute_bioctic_seeds(m)
        return iterate(seeds, m.n - 4), seeds.as_tuple()
    seeds = compute_octic_seeds(m)
    return iterate(seeds, m.n - 3), seeds.as_tuple()


def decide(m: SpecialForm) -> Verdict:
    start = time.perf_counter()

    def done(v: Verdict) -> Verdict:
        v.elapsed = time.perf_counter() - start
        return v

    reason = window_reason(m)
    if reason:
        return done(Verdict(Status.NOT_APPLICABLE, m, reason=reason))
    M = m.value
    if M % 17 == 0:
        return done(Verdict(Status.COMPOSITE, m, factor=17, reason="17 divides M"))
    q = apply_q_filter(build_q_filter(m.n), m)
    if q is not None:
        return done(Verdict(Status.COMPOSITE, m, factor=q, reason=f"Q filter: {q} divides M"))

    tag = classify(m)
    if tag is None:
        # unreachable in-window: M* == 1 would need 17 | h
        raise AssertionError(f"no case for M* == {m_star_mod17(m)} mod 17")
    try:
        state, seeds = run_sequence(m, tag.case)
    except NotInvertible as exc:
        g = exc.factor
        if 1 < g < M:
            return done(Verdict(Status.COMPOSITE, m, case=tag, factor=g, reason="non-invertible seed element"))
        raise
    final = state.as_tuple()
    ok = final == case_targets(tag.case, M)
    return done(Verdict(
        Status.PRIME if ok else Status.COMPOSITE,
        m,
        case=tag,
        reason="" if ok else "final state misses the case target",
        steps=state.k,
        final_state=final,
        seeds=seeds,
    ))
