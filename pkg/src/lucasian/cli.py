"""Command line: lucasian {test,scan,seeds,selftest}.

Exit codes: 0 prime, 1 composite, 2 not applicable, 3 oracle disagreement,
4 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import checks, oracle
from .decision import Status, Verdict, decide
from .modnum import NotInvertible, SpecialForm
from .seeds import compute_bioctic_seeds, compute_octic_seeds

EXIT_PRIME = 0
EXIT_COMPOSITE = 1
EXIT_NOT_APPLICABLE = 2
EXIT_DISAGREE = 3
EXIT_USAGE = 4

_EXIT_BY_STATUS = {
    Status.PRIME: EXIT_PRIME,
    Status.COMPOSITE: EXIT_COMPOSITE,
    Status.NOT_APPLICABLE: EXIT_NOT_APPLICABLE,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_sign(text: str) -> int:
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError(f"sign must be + or -, got {text!r}")


def seed_fingerprint(seeds: Optional[tuple[int, ...]]) -> Optional[str]:
    if seeds is None:
        return None
    return hashlib.sha256(",".join(map(str, seeds)).encode()).hexdigest()[:16]


@dataclass
class ResultRecord:
    expression: str
    digits: int
    case: Optional[str]
    verdict: str
    witness: Optional[str]
    steps: int
    seed_fingerprint: Optional[str]
    oracle: Optional[bool] = None
    elapsed_ms: float = field(default=0.0, compare=False)

    @classmethod
    def from_verdict(cls, v: Verdict, oracle_result: Optional[bool] = None) -> "ResultRecord":
        if v.factor is not None:
            witness = str(v.factor)
        elif v.status is Status.COMPOSITE:
            witness = "failed-congruence"
        elif v.status is Status.NOT_APPLICABLE:
            witness = v.reason
        else:
            witness = None
        return cls(
            expression=v.form.expression(),
            digits=len(str(v.form.value)),
            case=v.case.name if v.case else None,
            verdict=v.status.value,
            witness=witness,
            steps=v.steps,
            seed_fingerprint=seed_fingerprint(v.seeds),
            oracle=oracle_result,
            elapsed_ms=round(v.elapsed * 1000, 3),
        )

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ResultRecord":
        return cls(**json.loads(text))

    def to_text(self) -> str:
        parts = [f"{self.expression:<22}", f"{self.verdict:<15}", f"case={self.case or '-':<4}",
                 f"digits={self.digits:<6}", f"steps={self.steps:<6}", f"{self.elapsed_ms:9.2f} ms"]
        if self.witness:
            parts.append(f"witness={self.witness}")
        if self.oracle is not None:
            parts.append(f"oracle={'prime' if self.oracle else 'composite'}")
        return "  ".join(parts)


def disagrees(rec: ResultRecord) -> bool:
    if rec.oracle is None or rec.verdict == Status.NOT_APPLICABLE.value:
        return False
    return rec.oracle != (rec.verdict == Status.PRIME.value)


def evaluate(form: SpecialForm, verify: bool) -> ResultRecord:
    v = decide(form)
    return ResultRecord.from_verdict(v, oracle.is_prime_oracle(form.value) if verify else None)


def _evaluate_task(args):
    return evaluate(*args)


def emit(rec: ResultRecord, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    print(rec.to_json() if as_json else rec.to_text(), file=out, flush=True)


def make_form(h: int, n: int, sign: int) -> SpecialForm:
    if h <= 0:
        raise UsageError("h must be positive")
    if h % 2 == 0:
        raise UsageError("h must be odd")
    if n < 1:
        raise UsageError("n must be positive")
    try:
        return SpecialForm(h, n, sign)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_test(args) -> int:
    form = make_form(args.h, args.n, args.sign)
    rec = evaluate(form, args.verify)
    emit(rec, args.json)
    if args.verbose and not args.json:
        v = decide(form)
        print(f"  M = {form.value}" if form.value.bit_length() < 256 else f"  M has {rec.digits} digits")
        print(f"  final state: {v.final_state}")
    if disagrees(rec):
        print(f"ORACLE DISAGREEMENT for {rec.expression}: decide={rec.verdict}, oracle prime={rec.oracle}",
              file=sys.stderr)
        return EXIT_DISAGREE
    return _EXIT_BY_STATUS[Status(rec.verdict)]


def scan_records(h: int, n_min: int, n_max: int, sign: int, verify: bool, workers: int = 1):
    """One record per n in ascending order, whatever the worker count."""
    tasks = [(make_form(h, n, sign), verify) for n in range(n_min, n_max + 1)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(workers) as pool:
            yield from pool.map(_evaluate_task, tasks)
    else:
        for t in tasks:
            yield _evaluate_task(t)


def cmd_scan(args) -> int:
    if args.n_min < 1:
        raise UsageError("--n-min must be positive")
    code = 0
    for rec in scan_records(args.h, args.n_min, args.n_max, args.sign, args.verify, args.parallel):
        emit(rec, args.json)
        if disagrees(rec):
            print(f"ORACLE DISAGREEMENT for {rec.expression}", file=sys.stderr)
            code = EXIT_DISAGREE
    return code


def cmd_seeds(args) -> int:
    if args.h <= 0 or args.h % 2 == 0:
        raise UsageError("h must be odd and positive")
    if args.exact:
        if args.h > oracle.EXACT_H_LIMIT:
            raise UsageError(f"exact seeds are limited to h <= {oracle.EXACT_H_LIMIT}")
        values = oracle.exact_seeds(args.h, args.which)
        payload = {"h": args.h, "which": args.which, "exact": [str(q) for q in values]}
        text = "  ".join(str(q) for q in values)
    else:
        if args.n is None:
            raise UsageError("give --n (and --sign) for seeds mod M, or --exact")
        form = make_form(args.h, args.n, args.sign)
        compute = compute_octic_seeds if args.which == "octic" else compute_bioctic_seeds
        try:
            values = compute(form).as_tuple()
        except NotInvertible as exc:
            print(f"{form}: 17 is not invertible (gcd {exc.factor})", file=sys.stderr)
            return EXIT_COMPOSITE
        payload = {"h": args.h, "which": args.which, "modulus": form.expression(), "residues": list(values)}
        text = f"{form}: " + "  ".join(map(str, values))
    print(json.dumps(payload) if args.json else text)
    return 0


def cmd_selftest(args) -> int:
    results = checks.run_all(workers=args.parallel)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lucasian", description="Lucasian primality test for h*2^n+-1")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, *, n=True):
        sp.add_argument("--h", type=int, required=True)
        if n:
            sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--sign", type=parse_sign, default=-1, help="+ or - (default -)")
        sp.add_argument("--json", action="store_true", help="line-delimited JSON output")

    t = sub.add_parser("test", help="test one candidate")
    common(t)
    t.add_argument("--verify", action="store_true", help="cross-check with Miller-Rabin")
    t.add_argument("--verbose", action="store_true")
    t.set_defaults(func=cmd_test)

    s = sub.add_parser("scan", help="test h*2^n+-1 for a range of n")
    common(s, n=False)
    s.add_argument("--n-min", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--verify", action="store_true")
    s.add_argument("--parallel", type=int, default=1, metavar="N")
    s.set_defaults(func=cmd_scan)

    d = sub.add_parser("seeds", help="print seed tuples")
    d.add_argument("--h", type=int, required=True)
    d.add_argument("--which", choices=("octic", "bioctic"), default="octic")
    d.add_argument("--n", type=int)
    d.add_argument("--sign", type=parse_sign, default=-1)
    d.add_argument("--exact", action="store_true", help="exact rationals instead of residues")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_seeds)

    st = sub.add_parser("selftest", help="run the acceptance checks")
    st.add_argument("--parallel", type=int, default=1, metavar="N")
    st.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"lucasian: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
