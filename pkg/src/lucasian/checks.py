"""Release-gate checks: each returns a CheckResult with a one-line detail.

Used by ``lucasian selftest`` and by the acceptance tests.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

from . import oracle
from .decision import Case, Status, build_q_filter, case_targets, decide
from .modnum import SpecialForm
from .seeds import alpha1, alpha2, compute_bioctic_seeds, compute_octic_seeds, eta, symmetric_invariants
from .sequences import bioctic_state, iterate, octic_state, step_bioctic, step_octic

SWEEP_N = range(7, 33)
SWEEP_H_CAP = 512
SEED_HS = tuple(h for h in range(1, 26, 2) if h != 17)

# (h, n, sign) -> (status, case, factor); confirmed against the oracle in check_spot
SPOT_CASES = {
    (1, 7, -1): (Status.PRIME, Case.II, None),
    (1, 17, -1): (Status.PRIME, Case.IV, None),
    (3, 11, -1): (Status.PRIME, Case.III, None),
    (5, 14, -1): (Status.PRIME, Case.I, None),
    (1, 7, 1): (Status.COMPOSITE, None, 3),
    (3, 12, -1): (Status.COMPOSITE, Case.I, None),
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def sweep_forms(n_range=SWEEP_N, h_cap: int = SWEEP_H_CAP) -> Iterator[SpecialForm]:
    for sign in (1, -1):
        for n in n_range:
            for h in range(1, min(1 << (n - 6), h_cap), 2):
                if h % 17:
                    yield SpecialForm(h, n, sign)


def _sweep_one(form: SpecialForm):
    return form, decide(form), oracle.is_prime_oracle(form.value)


_SWEEP_CACHE: dict = {}


def run_sweep(workers: int = 1):
    """Decide every in-window candidate of the exhaustive range once."""
    if "rows" not in _SWEEP_CACHE:
        forms = list(sweep_forms())
        if workers > 1:
            with ProcessPoolExecutor(workers) as pool:
                rows = list(pool.map(_sweep_one, forms, chunksize=64))
        else:
            rows = [_sweep_one(f) for f in forms]
        _SWEEP_CACHE["rows"] = rows
    return _SWEEP_CACHE["rows"]


def clear_cache() -> None:
    _SWEEP_CACHE.clear()


def check_exhaustive(workers: int = 1) -> CheckResult:
    t = time.perf_counter()
    rows = run_sweep(workers)
    bad = [f for f, v, p in rows if v.status is Status.NOT_APPLICABLE or v.is_prime != p]
    primes = sum(p for _, _, p in rows)
    return CheckResult(
        "1 exhaustive oracle agreement",
        not bad,
        f"{len(rows)} candidates, {primes} primes, {len(bad)} disagreements"
        + (f" (first: {bad[0]})" if bad else "")
        + f", {time.perf_counter() - t:.1f}s",
    )


def check_necessity(workers: int = 1) -> CheckResult:
    bad = []
    count = 0
    for f, v, p in run_sweep(workers):
        if not p:
            continue
        count += 1
        if v.case is None or v.final_state != case_targets(v.case.case, f.value):
            bad.append(f)
    return CheckResult("2 necessity congruences", not bad and count > 0,
                       f"{count} primes, {len(bad)} off-target")


def _seed_moduli(h: int, count: int = 20) -> list[SpecialForm]:
    out = []
    n = max(7, h.bit_length() + 7)
    while len(out) < count:
        for sign in (1, -1):
            f = SpecialForm(h, n, sign)
            if f.window_valid and f.value % 17:
                out.append(f)
        n += 1
    return out[:count]


def check_seed_consistency() -> CheckResult:
    compared = 0
    bad = []
    for h in SEED_HS:
        exact_o = oracle.exact_seeds(h, "octic")
        exact_b = oracle.exact_seeds(h, "bioctic")
        for f in _seed_moduli(h):
            M = f.value
            if tuple(oracle.reduce_rational(q, M) for q in exact_o) != compute_octic_seeds(f, h).as_tuple():
                bad.append((f, "octic"))
            if tuple(oracle.reduce_rational(q, M) for q in exact_b) != compute_bioctic_seeds(f, h).as_tuple():
                bad.append((f, "bioctic"))
            compared += 2
    return CheckResult("3 seed consistency", not bad, f"{compared} seed tuples compared, {len(bad)} mismatches")


def direct_invariants(f: SpecialForm, k: int, kind: str) -> tuple[int, ...]:
    """Symmetric functions of alpha^(h*2^k) + conj, straight from the ring."""
    alpha = alpha1(f) if kind == "octic" else alpha2(f)
    return tuple(r.value for r in symmetric_invariants(eta(alpha, f.h << k)))


def recurrence_pairs() -> list[SpecialForm]:
    picks = [(1, 7), (1, 9), (3, 9), (5, 11), (7, 11), (9, 13), (11, 13), (13, 14),
             (15, 15), (19, 15), (21, 16), (23, 16), (25, 17), (27, 17), (31, 18),
             (33, 18), (45, 19), (63, 20), (101, 21), (255, 22), (3, 31), (511, 32)]
    return [SpecialForm(h, n, s) for h, n in picks for s in (1, -1) if (h << n) % 17 != (-s) % 17]


def check_recurrence_vs_definition() -> CheckResult:
    bad = []
    pairs = recurrence_pairs()
    for f in pairs:
        octic = compute_octic_seeds(f)
        bioctic = compute_bioctic_seeds(f)
        for k in range(9):
            if iterate(octic, k).as_tuple() != direct_invariants(f, k, "octic"):
                bad.append((f, k, "octic"))
            if iterate(bioctic, k).as_tuple() != direct_invariants(f, k, "bioctic"):
                bad.append((f, k, "bioctic"))
    return CheckResult("4 recurrence vs definition", not bad,
                       f"{len(pairs)} (M, h) pairs x k=0..8 x 2 kinds, {len(bad)} mismatches")


def brute_force_q(n: int) -> set[int]:
    mod = 1 << (n - 3)
    return {x for x in range(2, mod) if pow(x, 4, mod) == 1}


def check_q_filter() -> CheckResult:
    bad = [n for n in range(7, 21)
           if set(build_q_filter(n).Q) != brute_force_q(n) or len(build_q_filter(n).Q) != 7]
    return CheckResult("5 Q-filter brute force", not bad, f"n=7..20, mismatching n: {bad or 'none'}")


def check_symbol_diag(workers: int = 1) -> CheckResult:
    bad = []
    count = 0
    for f, _, p in run_sweep(workers):
        if not p:
            continue
        count += 1
        try:
            oracle.residue_symbol_diag(f)
        except oracle.SymbolMismatch as exc:
            bad.append(str(exc))
    return CheckResult("6 residue-symbol diagnostic", not bad and count > 0,
                       f"{count} primes, {len(bad)} mismatches" + (f" ({bad[0]})" if bad else ""))


def check_spot() -> CheckResult:
    bad = []
    for (h, n, s), (status, case, factor) in SPOT_CASES.items():
        f = SpecialForm(h, n, s)
        v = decide(f)
        truth = oracle.is_prime_oracle(f.value)
        got_case = v.case.case if v.case else None
        if (v.status, got_case, v.factor) != (status, case, factor) or truth != (status is Status.PRIME):
            bad.append(f"{f}: {v.status.value} case={got_case} factor={v.factor}")
    return CheckResult("7 known-prime spot checks", not bad, f"{len(SPOT_CASES)} cases, failures: {bad or 'none'}")


def check_performance() -> CheckResult:
    timings = {}
    for n, limit in ((1000, 1.0), (10_000, 60.0)):
        t = time.perf_counter()
        decide(SpecialForm(3, n, -1))
        timings[n] = (time.perf_counter() - t, limit)
    ok = all(t < lim for t, lim in timings.values())
    return CheckResult("8 performance", ok,
                       ", ".join(f"n={n}: {t:.2f}s (< {lim:g}s)" for n, (t, lim) in timings.items()))


def fixed_point_moduli() -> list[SpecialForm]:
    return [SpecialForm(h, n, s) for (h, n, s) in SPOT_CASES] + recurrence_pairs()


def check_fixed_points() -> CheckResult:
    bad = []
    moduli = fixed_point_moduli()
    for f in moduli:
        o = octic_state(4, 4, f)
        if step_octic(o).as_tuple() != o.as_tuple():
            bad.append((f, "octic"))
        b = bioctic_state(8, 24, 32, 16, f)
        if step_bioctic(b).as_tuple() != b.as_tuple():
            bad.append((f, "bioctic"))
    return CheckResult("9 trivial fixed points", not bad, f"{len(moduli)} moduli, {len(bad)} failures")


def all_checks(workers: int = 1) -> list[tuple[str, Callable[[], CheckResult]]]:
    return [
        ("1 exhaustive oracle agreement", lambda: check_exhaustive(workers)),
        ("2 necessity congruences", lambda: check_necessity(workers)),
        ("3 seed consistency", check_seed_consistency),
        ("4 recurrence vs definition", check_recurrence_vs_definition),
        ("5 Q-filter brute force", check_q_filter),
        ("6 residue-symbol diagnostic", lambda: check_symbol_diag(workers)),
        ("7 known-prime spot checks", check_spot),
        ("8 performance", check_performance),
        ("9 trivial fixed points", check_fixed_points),
    ]


def run_all(workers: int = 1, echo: Callable[[str], None] | None = print) -> list[CheckResult]:
    clear_cache()
    results = []
    for name, check in all_checks(workers):
        try:
            r = check()
        except Exception as exc:  # a crashing check is a failing check
            r = CheckResult(name, False, f"raised {exc!r}")
        results.append(r)
        if echo:
            echo(r.line())
    return results
