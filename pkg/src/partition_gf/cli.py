"""Command-line interface: compute counts, emit series coefficients, run the
verification suites, fit quasipolynomials, and cross-check OEIS fixtures.

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage error, 3 I/O or network error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from . import counting, genfun, oeis, quasipoly
from .counting import PartitionCountQuery
from .errors import NetworkError, NotFound, OutOfRange, ParseError, PartitionGFError
from .genfun import DistanceSpec
from .qseries import pochhammer_q

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class OutputRecord:
    """One computed value: the query echo, the route that produced it, and
    the value as a decimal string (no 64-bit cap assumed)."""

    n: int
    distances: tuple[int, ...]
    method: str
    value: str

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "distances": list(self.distances),
            "method": self.method,
            "value": self.value,
        }


def parse_distances(text: str) -> tuple[int, ...] | None:
    """Comma-separated positive integers, or the single value 0 for the
    difference-zero problem (None)."""
    try:
        values = [int(piece) for piece in text.split(",")]
    except ValueError:
        raise UsageError(f"distances must be comma-separated integers, got {text!r}") from None
    if values == [0]:
        return None
    if any(v < 1 for v in values):
        raise UsageError(
            "distances must be positive (0 is allowed only alone, meaning difference zero)"
        )
    return tuple(values)


def _series_coefficient(distances: tuple[int, ...], n: int) -> int:
    spec = DistanceSpec(distances)
    if spec.total > max(1, spec.k):
        form = (
            genfun.closed_form_fixed_diff(spec.total)
            if spec.k == 1
            else genfun.closed_form_specified(spec)
        )
        return form.expand(n)[n]
    if spec.k == 1:
        return genfun.direct_series_fixed_diff(spec.total, n)[n]
    return genfun.direct_series_specified(spec, n)[n]


def _quasipoly_order(spec: DistanceSpec) -> int:
    period = math.lcm(*range(1, spec.total + 1))
    return spec.min_weight + period * (spec.total + 1)


def _compute_record(n: int, distances: tuple[int, ...] | None, method: str) -> OutputRecord:
    if method == "enumerate":
        value = counting.count(PartitionCountQuery(n, distances))
    elif method == "series":
        value = _series_coefficient(distances, n)
    else:  # quasipoly
        spec = DistanceSpec(distances)
        qp = quasipoly.from_closed_form(spec, _quasipoly_order(spec))
        exact = qp.evaluate(n)
        if exact.denominator != 1:
            raise PartitionGFError(f"quasipolynomial value at n={n} is not integral: {exact}")
        value = exact.numerator
    echo = distances if distances is not None else (0,)
    return OutputRecord(n=n, distances=echo, method=method, value=str(value))


def _emit_records(records: list[OutputRecord], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([r.as_dict() for r in records], indent=2))
    elif fmt == "csv":
        print("n,distances,method,value")
        for r in records:
            distances = " ".join(str(d) for d in r.distances)
            print(f"{r.n},{distances},{r.method},{r.value}")
    else:
        for r in records:
            distances = ",".join(str(d) for d in r.distances)
            print(f"n={r.n} distances={distances} method={r.method} value={r.value}")


def cmd_compute(args) -> int:
    distances = parse_distances(args.distances)
    if args.n < 1:
        raise UsageError(f"n must be >= 1, got {args.n}")
    applicable = ["enumerate"]
    if distances is not None:
        spec = DistanceSpec(distances)
        applicable.append("series")
        if spec.total > max(1, spec.k):
            applicable.append("quasipoly")
    if args.method == "all":
        methods = applicable
    elif args.method in applicable:
        methods = [args.method]
    else:
        raise UsageError(
            f"method {args.method!r} does not apply to distances {args.distances!r} "
            f"(applicable: {', '.join(applicable)})"
        )
    records = [_compute_record(args.n, distances, m) for m in methods]
    _emit_records(records, args.format)
    values = {r.value for r in records}
    if len(values) > 1:
        print("METHOD DISAGREEMENT", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    return EXIT_OK


def cmd_series(args) -> int:
    distances = parse_distances(args.distances)
    if distances is None:
        raise UsageError("series requires distances >= 1 (difference 0 is a divisor count)")
    if args.order < 1:
        raise UsageError(f"order must be >= 1, got {args.order}")
    spec = DistanceSpec(distances)
    if spec.total > max(1, spec.k):
        form = (
            genfun.closed_form_fixed_diff(spec.total)
            if spec.k == 1
            else genfun.closed_form_specified(spec)
        )
        series = form.expand(args.order)
    elif spec.k == 1:
        series = genfun.direct_series_fixed_diff(spec.total, args.order)
    else:
        series = genfun.direct_series_specified(spec, args.order)
    coeffs = [str(c) for c in series.coeffs]
    if args.format == "json":
        print(json.dumps({"spec": list(distances), "order": args.order, "coeffs": coeffs}, indent=2))
    elif args.format == "csv":
        print("n,coefficient")
        for n, c in enumerate(coeffs):
            print(f"{n},{c}")
    else:
        print(",".join(coeffs))
    return EXIT_OK


def cmd_fit(args) -> int:
    distances = parse_distances(args.distances)
    if distances is None:
        raise UsageError("difference 0 has no quasipolynomial (the counts are divisor counts)")
    spec = DistanceSpec(distances)
    try:
        order = args.order if args.order is not None else _quasipoly_order(spec)
        qp = quasipoly.from_closed_form(spec, order)
    except OutOfRange as exc:
        raise UsageError(
            f"{exc}; below that threshold the generating function is not rational"
        ) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    document = json.dumps(qp.to_json_dict(), indent=2)
    leading = qp.leading_coefficient()
    summary = (
        f"period={qp.period} degree={qp.degree} "
        f"leading={leading.numerator}/{leading.denominator}"
    )
    if args.output:
        Path(args.output).write_text(document + "\n", encoding="utf-8")
        print(summary)
    else:
        print(document)
        print(summary, file=sys.stderr)
    return EXIT_OK


def _check_routes_fixed(t_max: int, n_max: int) -> list[tuple[str, bool, str]]:
    results = []
    for t in range(2, t_max + 1):
        closed = genfun.closed_form_fixed_diff(t).expand(n_max)
        direct = genfun.direct_series_fixed_diff(t, n_max)
        counts = counting.fixed_diff_table(t, n_max)
        ok = closed == direct and list(closed.coeffs)[1:] == counts[1:]
        detail = "" if ok else "routes disagree"
        results.append((f"routes/fixed-diff/t={t}", ok, detail))
    return results


def _specified_grid(max_k: int = 3, max_distance: int = 4):
    import itertools

    for k in range(2, max_k + 1):
        for distances in itertools.product(range(1, max_distance + 1), repeat=k):
            if sum(distances) > k:
                yield distances


def _check_routes_specified(n_max: int) -> list[tuple[str, bool, str]]:
    results = []
    for distances in _specified_grid():
        spec = DistanceSpec(distances)
        closed = genfun.closed_form_specified(spec).expand(n_max)
        direct = genfun.direct_series_specified(spec, n_max)
        counts = counting.specified_table(distances, n_max)
        ok = closed == direct and list(closed.coeffs)[1:] == counts[1:]
        name = ",".join(str(d) for d in distances)
        results.append((f"routes/specified/({name})", ok, "" if ok else "routes disagree"))
    return results


def _check_identities(t_max: int, order: int) -> list[tuple[str, bool, str]]:
    results = []
    for t in range(0, 11):
        ok = genfun.qbinomial_alternating_sum(t, 0) == pochhammer_q(t)
        results.append((f"identities/q-binomial/t={t}", ok, ""))
    for t in range(2, t_max + 1):
        for k in range(1, t):
            ok = genfun.heine_check(1, 1, t + 2, k + 1, order, order // (k + 1))
            results.append((f"identities/heine/k={k},t={t}", ok, ""))
    results.append((f"identities/p1/order={order}", genfun.p1_identity_check(order), ""))
    return results


def _check_asymptotics(t_max: int) -> list[tuple[str, bool, str]]:
    results = []
    for t in range(2, t_max + 1):
        spec = DistanceSpec((t,))
        qp = quasipoly.from_closed_form(spec, _quasipoly_order(spec))
        got = qp.leading_coefficient()
        want = quasipoly.expected_leading(t)
        detail = "" if got == want else f"leading {got} != {want}"
        results.append((f"asymptotics/leading/t={t}", got == want, detail))
    return results


def _check_oeis(fixtures_dir, n_max: int) -> list[tuple[str, bool, str]]:
    results = []
    for sequence_id in sorted(oeis.KNOWN_SEQUENCES):
        _, oracle, n_start = oeis.KNOWN_SEQUENCES[sequence_id]
        try:
            fixture = oeis.load_calibrated(sequence_id, fixtures_dir)
            computed = {n: oracle(n) for n in range(n_start, n_max + 1)}
            report = oeis.cross_check(fixture, computed)
            detail = "" if report.ok else report.summary()
            results.append((f"oeis/{sequence_id}", report.ok, detail))
        except (NotFound, ParseError, PartitionGFError) as exc:
            results.append((f"oeis/{sequence_id}", False, str(exc)))
    return results


def cmd_verify(args) -> int:
    suites = {
        "routes": lambda: _check_routes_fixed(args.t_max, args.n_max)
        + _check_routes_specified(min(args.n_max, 120)),
        "identities": lambda: _check_identities(args.t_max, args.order),
        "asymptotics": lambda: _check_asymptotics(args.t_max),
        "oeis": lambda: _check_oeis(args.fixtures_dir, min(args.n_max, 400)),
    }
    selected = list(suites) if args.suite == "all" else [args.suite]
    results: list[tuple[str, bool, str]] = []
    for name in selected:
        results.extend(suites[name]())
    results.sort(key=lambda item: item[0])
    failures = 0
    for check_id, ok, detail in results:
        if ok:
            print(f"PASS {check_id}")
        else:
            failures += 1
            print(f"FAIL {check_id}" + (f": {detail}" if detail else ""))
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAIL


def cmd_oeis(args) -> int:
    ids = args.id if args.id else sorted(oeis.KNOWN_SEQUENCES)
    failures = 0
    for sequence_id in ids:
        if sequence_id not in oeis.KNOWN_SEQUENCES:
            raise UsageError(f"unknown sequence id {sequence_id!r}")
        _, oracle, n_start = oeis.KNOWN_SEQUENCES[sequence_id]
        if args.fetch:
            if not args.endpoint:
                raise UsageError("--fetch requires --endpoint")
            oeis.fetch_remote(sequence_id, args.endpoint, cache_dir=args.fixtures_dir)
        fixture = oeis.load_calibrated(sequence_id, args.fixtures_dir)
        computed = {n: oracle(n) for n in range(n_start, args.n_max + 1)}
        report = oeis.cross_check(fixture, computed)
        print(report.summary())
        if not report.ok:
            failures += 1
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partition-gf",
        description="Exact partition counts with fixed largest-smallest "
        "difference or specified milestone distances, via mutually "
        "verifying enumeration, series, and quasipolynomial routes.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "csv", "json"], default="text")
    common.add_argument(
        "--fixtures-dir",
        default=None,
        help="fixture directory (default: $PARTITION_GF_FIXTURES or packaged data)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="count partitions for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--distances", required=True, help="comma-separated, e.g. 2,2 (or 0 alone)")
    p.add_argument(
        "--method", choices=["enumerate", "series", "quasipoly", "all"], default="enumerate"
    )
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("series", parents=[common], help="emit coefficients 0..N")
    p.add_argument("--distances", required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", parents=[common], help="run invariant suites")
    p.add_argument(
        "--suite",
        choices=["routes", "identities", "asymptotics", "oeis", "all"],
        default="all",
    )
    p.add_argument("--t-max", type=int, default=6)
    p.add_argument("--n-max", type=int, default=120)
    p.add_argument("--order", type=int, default=60)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fit", parents=[common], help="fit and emit a quasipolynomial")
    p.add_argument("--distances", required=True)
    p.add_argument("--order", type=int, default=None, help="expansion order (default: auto)")
    p.add_argument("--output", default=None, help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("oeis", parents=[common], help="cross-check fixtures offline or fetch")
    p.add_argument("--id", action="append", help="sequence id, repeatable (default: all known)")
    p.add_argument("--n-max", type=int, default=400)
    p.add_argument("--fetch", action="store_true", help="refresh the fixture from --endpoint")
    p.add_argument("--endpoint", default=None, help="base URL serving b-files")
    p.set_defaults(func=cmd_oeis)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotFound, NetworkError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except PartitionGFError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAIL


if __name__ == "__main__":
    sys.exit(main())
