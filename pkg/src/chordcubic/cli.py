"""Command-line front door emitting deterministic JSON.

One subcommand per verified claim keeps CI logs legible:

* ``identity`` - the two symbolic checks (incidence + image cubic),
* ``cubic``    - image cubic coefficient table and closed-form invariants,
* ``map``      - chord of a single point,
* ``suite``    - full finite-field run (optionally over sampled curves),
* ``degree``   - translation chord of a given order,
* ``quotient`` - 2-isogeny identification and point counts,
* ``flexes``   - flex correspondence.

Exit status: 0 when every emitted report passes or is skipped, 1 when any
check fails, 2 on rejected input.  JSON goes to stdout; diagnostics to
stderr.  Identical requests produce byte-identical JSON: volatile wall
clock timings are only shown in ``--format text``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .chord import chord_cubic, chord_map, cubic_invariants
from .curve import CurvePoint, reduce_params, validate_curve
from .scalars import check_modulus
from .verify import (
    run_full_suite,
    sample_params,
    verify_chord_incidence_symbolic,
    verify_degree_remark,
    verify_flex_correspondence,
    verify_identity_symbolic,
    verify_quotient,
)

DEFAULT_QUOTIENT_PRIMES = (101, 211, 409)


class CliError(Exception):
    """Rejected input; rendered as a diagnostic record with exit status 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"malformed rational {text!r}: {exc}") from exc


def _build_parser() -> _Parser:
    parser = _Parser(prog="chordcubic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *, curve=True, curve_required=True, prime=False, point=False, extra=()):
        cmd = sub.add_parser(name, help=help_text)
        if curve:
            cmd.add_argument("--a", required=curve_required, help="rational coefficient a")
            cmd.add_argument("--b", required=curve_required, help="rational coefficient b")
        if prime:
            cmd.add_argument("--prime", type=int, required=True)
        if point:
            cmd.add_argument("--x", help="affine x (omit for the zero point O)")
            cmd.add_argument("--y", help="affine y")
            cmd.add_argument("--prime", type=int)
        for name_, kwargs in extra:
            cmd.add_argument(name_, **kwargs)
        cmd.add_argument("--format", choices=("json", "text"), default="json")
        return cmd

    add("identity", "symbolic incidence and image-cubic identities", curve=False)
    add("cubic", "image cubic coefficients and invariants")
    add("map", "chord of one curve point", point=True)
    add(
        "suite",
        "full verification run over F_p",
        curve_required=False,
        prime=True,
        extra=(
            ("--random", {"type": int, "metavar": "N", "help": "sample N curves"}),
            ("--seed", {"type": int, "default": 1}),
        ),
    )
    add(
        "degree",
        "translation chord of a given order",
        prime=True,
        extra=(
            ("--order", {"type": int, "required": True}),
            ("--dmax", {"type": int, "default": 8}),
        ),
    )
    add(
        "quotient",
        "2-isogeny identification and point counts",
        extra=(("--prime", {"type": int, "help": "single prime (default batch)"}),),
    )
    add("flexes", "flex correspondence over F_p", prime=True)
    return parser


def _curve_json(params) -> dict:
    return {"a": str(params.a), "b": str(params.b)}


def _reports_payload(reports) -> list:
    return [r.to_dict(include_millis=False) for r in reports]


def _emit(payload, reports, fmt) -> int:
    if fmt == "json":
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        _emit_text(payload, reports)
    return 0 if all(r.ok for r in reports) else 1


def _emit_text(payload, reports, indent=""):
    if reports:
        for r in reports:
            line = f"{indent}{r.claim}: {r.status}"
            if r.witness:
                line += f" ({r.witness})"
            line += f" [{r.stats.get('millis', 0)} ms]"
            print(line)
    else:
        print(json.dumps(payload, ensure_ascii=False, indent=2))


def _curve_from_args(args):
    return validate_curve(_parse_rational(args.a), _parse_rational(args.b))


def _run(args) -> int:
    if args.command == "identity":
        reports = [verify_chord_incidence_symbolic(), verify_identity_symbolic()]
        return _emit(_reports_payload(reports), reports, args.format)

    if args.command == "cubic":
        params = _curve_from_args(args)
        payload = {
            "curve": _curve_json(params),
            "cubic": chord_cubic(params).as_json_table(),
            "invariants": cubic_invariants(params).as_dict(),
        }
        return _emit(payload, [], args.format)

    if args.command == "map":
        params = _curve_from_args(args)
        if args.prime is not None:
            check_modulus(args.prime)
            params = reduce_params(params, args.prime)
        if args.x is None:
            point = CurvePoint.infinity(params)
        else:
            if args.y is None:
                raise CliError("--y is required with --x")
            x = params.coerce(_parse_rational(args.x))
            y = params.coerce(_parse_rational(args.y))
            point = CurvePoint.affine(params, x, y)
        payload = {
            "curve": _curve_json(params),
            "point": str(point),
            "line": str(chord_map(point)),
        }
        return _emit(payload, [], args.format)

    if args.command == "suite":
        check_modulus(args.prime)
        if args.random is not None:
            if args.random <= 0:
                raise CliError("--random wants a positive count")
            runs = []
            reports = []
            for params in sample_params(args.prime, args.random, args.seed):
                batch = run_full_suite(params, args.prime)
                reports.extend(batch)
                runs.append(
                    {"curve": _curve_json(params), "reports": _reports_payload(batch)}
                )
            payload = {"prime": args.prime, "seed": args.seed, "runs": runs}
            return _emit(payload, reports, args.format)
        if args.a is None or args.b is None:
            raise CliError("--a and --b are required without --random")
        params = _curve_from_args(args)
        reports = run_full_suite(params, args.prime)
        payload = {
            "curve": _curve_json(params),
            "prime": args.prime,
            "reports": _reports_payload(reports),
        }
        return _emit(payload, reports, args.format)

    if args.command == "degree":
        params = _curve_from_args(args)
        report = verify_degree_remark(params, args.prime, args.order, dmax=args.dmax)
        payload = {
            "curve": _curve_json(params),
            "prime": args.prime,
            "reports": _reports_payload([report]),
        }
        return _emit(payload, [report], args.format)

    if args.command == "quotient":
        params = _curve_from_args(args)
        primes = (args.prime,) if args.prime else DEFAULT_QUOTIENT_PRIMES
        report = verify_quotient(params, primes)
        payload = {
            "curve": _curve_json(params),
            "primes": list(primes),
            "reports": _reports_payload([report]),
        }
        return _emit(payload, [report], args.format)

    if args.command == "flexes":
        params = _curve_from_args(args)
        report = verify_flex_correspondence(params, args.prime)
        payload = {
            "curve": _curve_json(params),
            "prime": args.prime,
            "reports": _reports_payload([report]),
        }
        return _emit(payload, [report], args.format)

    raise CliError(f"unknown subcommand {args.command!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except CliError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
