"""Generalized Lucasian primality test for h*2^n +- 1 with fixed seeds."""

from .decision import Case, CaseTag, Status, Verdict, build_q_filter, decide, m_star_mod17
from .modnum import NotInvertible, Residue, SpecialForm

__all__ = [
    "Case",
    "CaseTag",
    "NotInvertible",
    "Residue",
    "SpecialForm",
    "Status",
    "Verdict",
    "build_q_filter",
    "decide",
    "m_star_mod17",
]

__version__ = "0.1.0"
