"""Command line interface.

Exit status: 0 on success, 1 on usage errors, 2 when two independent
computations disagree (the disagreement is written out first).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Iterable, Sequence

from .colex import lefschetz_matrix
from .exactla import is_prime
from .formulas import BoxDims, macmahon, macmahon_factorization, primes_upto
from .hilbert import CIParams, h_vector, is_trivially_wlp, peak_profile, socle_degree
from .partitions import count_by_determinant, count_by_enumeration, count_by_transfer
from .wlp import (
    ConsistencyError,
    box_divisor_window,
    box_window,
    conjecture_char2_scan,
    failing_primes,
    prime_power_window,
    wlp_by_theorem,
    wlp_direct,
)

EXIT_OK, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2
VERDICT_FIELDS = ["alpha", "beta", "gamma", "p", "holds", "method", "witness"]


class UsageError(Exception):
    pass


class Inconsistent(Exception):
    def __init__(self, report: str) -> None:
        super().__init__("independent computations disagree")
        self.report = report


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _span(text: str) -> range:
    """Inclusive integer range ``LO:HI`` or a single integer."""
    try:
        if ":" in text:
            lo, hi = (int(t) for t in text.split(":", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO:HI, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or nonpositive range {text!r}")
    return range(lo, hi + 1)


def _characteristic(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if p != 0 and not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is neither 0 nor a prime")
    return p


# ---------------------------------------------------------------- rendering

def _flatten(value: Any) -> Any:
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, separators=(",", ":"))
    return value


def render(records: list[dict[str, Any]], fmt: str, single: bool = False) -> str:
    if fmt == "json":
        payload: Any = records[0] if single and len(records) == 1 else records
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        fields = list(records[0]) if records else []
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for rec in records:
            writer.writerow({k: _flatten(v) for k, v in rec.items()})
        return buf.getvalue()
    blocks = []
    for rec in records:
        blocks.append("".join(f"{k}: {_text_value(v)}\n" for k, v in rec.items()))
    return "\n".join(blocks)


def _text_value(v: Any) -> str:
    if isinstance(v, dict):
        if "label" in v:
            return str(v["label"])
        return ", ".join(f"{k}={x}" for k, x in v.items())
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return str(v)


def emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".lefschetz-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------- commands

def _params(args: argparse.Namespace) -> CIParams:
    return CIParams(args.alpha, args.beta, args.gamma)


def cmd_hvector(args: argparse.Namespace) -> list[dict[str, Any]]:
    params = _params(args)
    prof = peak_profile(params)
    return [{
        "alpha": params.alpha, "beta": params.beta, "gamma": params.gamma,
        "socle_degree": socle_degree(params),
        "h": list(h_vector(params)),
        "s": prof.s, "s_plus_1": prof.s_plus_1, "gap": prof.gap,
        "trivially_wlp": is_trivially_wlp(params),
    }]


def cmd_matrix(args: argparse.Namespace) -> str:
    params = _params(args)
    try:
        mat = lefschetz_matrix(params, args.degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "coo":
        return mat.to_coo()
    if args.format == "text":
        return mat.to_text()
    if args.format == "csv":
        return "".join(",".join(map(str, r)) + "\n" for r in mat.entries)
    return json.dumps({
        "alpha": params.alpha, "beta": params.beta, "gamma": params.gamma,
        "degree": mat.col_basis[0].degree,
        "shape": list(mat.shape),
        "row_basis": [str(m) for m in mat.row_basis],
        "col_basis": [str(m) for m in mat.col_basis],
        "rows": [list(r) for r in mat.entries],
    }, indent=2) + "\n"


def _verdicts(params: CIParams, p: int, method: str) -> list[dict[str, Any]]:
    if method == "direct":
        return [wlp_direct(params, p).to_record()]
    if method == "theorem":
        return [wlp_by_theorem(params, p).to_record()]
    return [wlp_direct(params, p).to_record(), wlp_by_theorem(params, p).to_record()]


def cmd_wlp(args: argparse.Namespace) -> list[dict[str, Any]]:
    records = _verdicts(_params(args), args.char, args.method)
    if len({r["holds"] for r in records}) > 1:
        raise Inconsistent(render(records, args.format))
    return records


def cmd_primes(args: argparse.Namespace) -> list[dict[str, Any]]:
    params = _params(args)
    methods = ["direct", "theorem"] if args.method == "all" else [args.method]
    records = [
        {"alpha": params.alpha, "beta": params.beta, "gamma": params.gamma,
         "method": m, "failing_primes": sorted(failing_primes(params, m))}
        for m in methods
    ]
    if len({tuple(r["failing_primes"]) for r in records}) > 1:
        raise Inconsistent(render(records, args.format))
    return records


def cmd_window(args: argparse.Namespace) -> list[dict[str, Any]]:
    if args.box is not None:
        if any(v is not None for v in (args.alpha, args.beta, args.gamma)):
            raise UsageError("give either --box or -a/-b/-g, not both")
        box = BoxDims(*args.box).sorted()
        if box.a < 1:
            raise UsageError("box sides must be positive")
        lo, hi = box_window(box)
        try:
            primes = box_divisor_window(box)
        except ConsistencyError as exc:
            raise Inconsistent(str(exc) + "\n") from None
        return [{"a": box.a, "b": box.b, "c": box.c, "window": [lo, hi], "primes": sorted(primes)}]
    if None in (args.alpha, args.beta, args.gamma):
        raise UsageError("window needs --box A B C or all of -a, -b, -g")
    params = _params(args)
    pw = prime_power_window(params)
    return [{
        "alpha": params.alpha, "beta": params.beta, "gamma": params.gamma,
        "window": [params.gamma, (params.total - 3) // 2],
        "prime_powers": [[p, n] for p, n in pw],
        "primes": sorted({p for p, _ in pw}),
    }]


PPCOUNT_METHODS = {
    "formula": macmahon,
    "enumeration": count_by_enumeration,
    "transfer": count_by_transfer,
    "determinant": count_by_determinant,
}


def cmd_ppcount(args: argparse.Namespace) -> list[dict[str, Any]]:
    box = BoxDims(*args.box)
    names = list(PPCOUNT_METHODS) if args.method == "all" else [args.method]
    counts: dict[str, int | None] = {}
    for name in names:
        try:
            counts[name] = PPCOUNT_METHODS[name](box)
        except ValueError as exc:
            if args.method != "all":
                raise UsageError(str(exc)) from None
            print(f"skipping {name}: {exc}", file=sys.stderr)
            counts[name] = None
    record = {"a": box.a, "b": box.b, "c": box.c, "counts": counts}
    if len({v for v in counts.values() if v is not None}) > 1:
        raise Inconsistent(render([record], args.format, single=True))
    return [record]


def cmd_factor(args: argparse.Namespace) -> list[dict[str, Any]]:
    box = BoxDims(*args.box)
    fac = macmahon_factorization(box, args.prime_bound)
    record: dict[str, Any] = {
        "a": box.a, "b": box.b, "c": box.c,
        "factorization": {str(p): e for p, e in sorted(fac.items())},
        "primes": sorted(fac),
    }
    sbox = box.sorted()
    if sbox.a >= 1:
        lo, hi = box_window(sbox)
        try:
            window_primes = sorted(box_divisor_window(sbox))
        except ConsistencyError as exc:
            raise Inconsistent(str(exc) + "\n") from None
        missing = [p for p in window_primes if p not in fac]
        if missing:
            raise Inconsistent(f"window primes {missing} absent from the factorization of {box}\n")
        record["window"] = [lo, hi]
        record["window_primes"] = window_primes
    return [record]


def cmd_conjecture(args: argparse.Namespace) -> list[dict[str, Any]]:
    return [row._asdict() for row in conjecture_char2_scan(args.dmax)]


def _scan_one(job: tuple[tuple[int, int, int], list[int], str, bool]) -> tuple[list[dict], list[dict]]:
    exps, primes, method, cross = job
    params = CIParams(*exps)
    records: list[dict] = []
    disagreements: list[dict] = []
    for p in primes:
        direct = wlp_direct(params, p) if method in ("direct", "all") or cross else None
        theorem = wlp_by_theorem(params, p) if method in ("theorem", "all") or cross else None
        if method in ("direct", "all"):
            records.append(direct.to_record())
        if method in ("theorem", "all"):
            records.append(theorem.to_record())
        if direct is not None and theorem is not None and direct.holds != theorem.holds:
            disagreements.append({
                "alpha": params.alpha, "beta": params.beta, "gamma": params.gamma, "p": p,
                "direct": direct.holds, "theorem": theorem.holds,
            })
    return records, disagreements


def worker_count() -> int:
    env = os.environ.get("LEFSCHETZ_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise UsageError(f"LEFSCHETZ_THREADS must be an integer, got {env!r}") from None
        if n < 1:
            raise UsageError("LEFSCHETZ_THREADS must be at least 1")
        return n
    return os.cpu_count() or 1


def _run_jobs(jobs: list, workers: int) -> Iterable:
    if workers <= 1 or len(jobs) < 2:
        return map(_scan_one, jobs)
    pool = ProcessPoolExecutor(max_workers=min(workers, len(jobs)))
    try:
        # map preserves submission order, so output is canonical regardless of timing
        return list(pool.map(_scan_one, jobs, chunksize=4))
    finally:
        pool.shutdown()


def cmd_scan(args: argparse.Namespace) -> list[dict[str, Any]]:
    grid = sorted({
        CIParams(a, b, g) for a in args.alpha for b in args.beta for g in args.gamma
    })
    primes = primes_upto(args.prime_bound)
    jobs = [(tuple(p), primes, args.method, args.cross_validate) for p in grid]
    records: list[dict] = []
    disagreements: list[dict] = []
    for recs, dis in _run_jobs(jobs, worker_count()):
        records.extend(recs)
        disagreements.extend(dis)
    if disagreements:
        raise Inconsistent(render(records, args.format) + _disagreement_report(disagreements, args.format))
    return records


def _disagreement_report(items: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"disagreements": items}, indent=2) + "\n"
    return "disagreements:\n" + render(items, "csv" if fmt == "csv" else "text")


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lefschetz", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, metavar="COMMAND")
    sub.required = True

    def common(p: argparse.ArgumentParser, formats=("text", "csv", "json"), default="json") -> None:
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", metavar="PATH", help="write the report here (atomically) instead of stdout")

    def exponents(p: argparse.ArgumentParser, required: bool = True, kind=int) -> None:
        p.add_argument("-a", "--alpha", type=kind, required=required)
        p.add_argument("-b", "--beta", type=kind, required=required)
        p.add_argument("-g", "--gamma", type=kind, required=required)

    p = sub.add_parser("hvector", help="h-vector and peak of the algebra")
    exponents(p)
    common(p)
    p.set_defaults(func=cmd_hvector, single=True)

    p = sub.add_parser("matrix", help="matrix of multiplication by x+y+z")
    exponents(p)
    p.add_argument("--degree", type=int, default=None, help="source degree (default: s)")
    common(p, formats=("text", "coo", "csv", "json"), default="text")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("wlp", help="decide the WLP in one characteristic")
    exponents(p)
    p.add_argument("--char", type=_characteristic, required=True, metavar="P")
    p.add_argument("--method", choices=("direct", "theorem", "all"), default="theorem")
    common(p)
    p.set_defaults(func=cmd_wlp, single=True)

    p = sub.add_parser("primes", help="all characteristics where the WLP fails")
    exponents(p)
    p.add_argument("--method", choices=("direct", "theorem", "all"), default="all")
    common(p)
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("window", help="prime-power windows forcing failure or divisibility")
    exponents(p, required=False)
    p.add_argument("--box", type=int, nargs=3, metavar=("A", "B", "C"))
    common(p)
    p.set_defaults(func=cmd_window, single=True)

    p = sub.add_parser("ppcount", help="count plane partitions in a box")
    p.add_argument("box", type=int, nargs=3, metavar="SIDE")
    p.add_argument("--method", choices=(*PPCOUNT_METHODS, "all"), default="formula")
    common(p)
    p.set_defaults(func=cmd_ppcount, single=True)

    p = sub.add_parser("factor", help="prime factorization of M(a,b,c)")
    p.add_argument("box", type=int, nargs=3, metavar="SIDE")
    p.add_argument("--prime-bound", type=int, default=None, metavar="N",
                   help="largest prime + 1 to try (default a+b+c)")
    common(p)
    p.set_defaults(func=cmd_factor, single=True)

    p = sub.add_parser("conjecture", help="scan d x d x d in characteristic 2")
    p.add_argument("--dmax", type=int, default=20, metavar="N")
    common(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("scan", help="WLP verdicts over a parameter grid")
    exponents(p, kind=_span)
    p.add_argument("--prime-bound", type=int, default=60, metavar="N")
    p.add_argument("--method", choices=("direct", "theorem", "all"), default="direct")
    p.add_argument("--cross-validate", action="store_true",
                   help="also run the other method and exit 2 on any disagreement")
    common(p)
    p.set_defaults(func=cmd_scan)
    return parser


def _validate(args: argparse.Namespace) -> None:
    for name in ("alpha", "beta", "gamma"):
        v = getattr(args, name, None)
        if isinstance(v, int) and v < 1:
            raise UsageError(f"--{name} must be a positive integer")
    box = getattr(args, "box", None)
    if box is not None and min(box) < 0:
        raise UsageError("box sides must be nonnegative")
    if getattr(args, "prime_bound", None) is not None and args.prime_bound < 2:
        raise UsageError("--prime-bound must be at least 2")
    if getattr(args, "dmax", 1) < 1:
        raise UsageError("--dmax must be at least 1")


def dispatch(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        _validate(args)
        result = args.func(args)
        if isinstance(result, str):
            text = result
        else:
            text = render(result, args.format, single=getattr(args, "single", False))
        emit(text, args.out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"lefschetz: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Inconsistent as exc:
        emit(exc.report, args.out)
        print(f"lefschetz: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
