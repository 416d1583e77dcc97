"""Command-line front end: classify, compose, reduce, verify, sweep, selftest.

Machine-readable output (JSON or CSV) goes to stdout, diagnostics to
stderr.  Exit codes: 0 success, 1 selftest failure, 2 parse/validation
failure, 3 cross-invariant disagreement, 4 not a homology Hopf gluing,
5 invalid certificate.

JSON is always emitted with sorted keys and two-space indentation, so
identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .abelian import FgAbelianGroup, is_isomorphic
from .gluing import (
    CONVENTION,
    GluingMatrix,
    LogTransformParams,
    NotHomologyHopfError,
    ReductionCertificate,
    calibrated_zeta_variant,
    certificate_failure,
    compose_two_fiber,
    is_homology_hopf,
    normalize_to_sl3,
    pi1_single_gluing,
    pi1_two_log_transforms,
    reduce_to_normal_form,
    reduce_to_standard,
)
from .linalg import IntMatrix, NotPrimitiveError, NotUnimodularError, UnimodularMatrix
from .selftest import run_selftest
from .sweep import SweepSpec, SweepSpecError, count_skipped, summarize, sweep

CSV_HEADER = "a,b,p,c,d,q,mu,homology_hopf,rank,invariant_factors"

#: How the factor lists of a certificate document apply to its input.
FACTOR_ORDER = (
    "left_factors[0] @ ... @ left_factors[-1] @ input"
    " @ right_factors[0] @ ... @ right_factors[-1] == output"
)


class DocumentError(ValueError):
    """A document failed to parse or validate."""


# --- document (de)serialization -----------------------------------------


def _matrix_to_lists(m: IntMatrix) -> list:
    return m.to_lists()


def _lists_to_matrix(obj, what="matrix") -> IntMatrix:
    if (
        not isinstance(obj, list)
        or len(obj) != 3
        or any(not isinstance(row, list) or len(row) != 3 for row in obj)
        or any(not isinstance(x, int) or isinstance(x, bool) for row in obj for x in row)
    ):
        raise DocumentError(f"{what} must be a 3x3 array of integers")
    return IntMatrix(obj)


def matrix_document(m: GluingMatrix) -> dict:
    return {
        "matrix": _matrix_to_lists(m.matrix),
        "convention": CONVENTION,
        "zeta_variant": calibrated_zeta_variant(),
    }


def parse_matrix_document(obj) -> GluingMatrix:
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise DocumentError('matrix document needs a "matrix" key')
    conv = obj.get("convention", CONVENTION)
    if conv != CONVENTION:
        raise DocumentError(f"unsupported convention {conv!r}")
    mat = _lists_to_matrix(obj["matrix"])
    try:
        return GluingMatrix(mat)
    except NotUnimodularError as exc:
        raise DocumentError(str(exc)) from exc


def certificate_document(cert: ReductionCertificate) -> dict:
    return {
        "input": _matrix_to_lists(cert.input),
        "output": _matrix_to_lists(cert.output),
        "left_factors": [_matrix_to_lists(f) for f in cert.left_factors],
        "right_factors": [_matrix_to_lists(f) for f in cert.right_factors],
        "order": FACTOR_ORDER,
        "convention": CONVENTION,
        "zeta_variant": calibrated_zeta_variant(),
    }


def parse_certificate_document(obj) -> ReductionCertificate:
    if not isinstance(obj, dict):
        raise DocumentError("certificate document must be a JSON object")
    for key in ("input", "output", "left_factors", "right_factors"):
        if key not in obj:
            raise DocumentError(f'certificate document needs a "{key}" key')
    for key in ("left_factors", "right_factors"):
        if not isinstance(obj[key], list):
            raise DocumentError(f'"{key}" must be an array')
    return ReductionCertificate(
        input=_lists_to_matrix(obj["input"], "input"),
        left_factors=tuple(
            _lists_to_matrix(f, f"left factor {i}")
            for i, f in enumerate(obj["left_factors"])
        ),
        right_factors=tuple(
            _lists_to_matrix(f, f"right factor {i}")
            for i, f in enumerate(obj["right_factors"])
        ),
        output=_lists_to_matrix(obj["output"], "output"),
    )


def _group_report(g: FgAbelianGroup) -> dict:
    return {"rank": g.rank, "invariant_factors": list(g.invariant_factors)}


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _fail(message: str, code: int) -> int:
    sys.stderr.write(f"error: {message}\n")
    return code


# --- input helpers -------------------------------------------------------


def _parse_nine_ints(text: str) -> IntMatrix:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 9:
        raise DocumentError(f"expected 9 comma-separated integers, got {len(parts)}")
    try:
        values = [int(p) for p in parts]
    except ValueError as exc:
        raise DocumentError(f"bad integer in matrix: {exc}") from exc
    return IntMatrix([values[0:3], values[3:6], values[6:9]])


def _parse_int_list(text: str, count: int, what: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise DocumentError(f"{what} needs {count} comma-separated integers")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise DocumentError(f"bad integer in {what}: {exc}") from exc


def _parse_range(text: str, what: str) -> tuple:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise DocumentError(f"{what} must look like LO:HI")
    try:
        return (int(lo), int(hi))
    except ValueError as exc:
        raise DocumentError(f"bad integer in {what}: {exc}") from exc


def _load_gluing_matrix(args) -> GluingMatrix:
    if args.file is not None:
        try:
            with open(args.file, "r", encoding="utf-8") as fh:
                obj = json.load(fh)
        except OSError as exc:
            raise DocumentError(f"cannot read {args.file}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise DocumentError(f"bad JSON in {args.file}: {exc}") from exc
        return parse_matrix_document(obj)
    mat = _parse_nine_ints(args.matrix)
    try:
        return GluingMatrix(mat)
    except NotUnimodularError as exc:
        raise DocumentError(str(exc)) from exc


# --- commands ------------------------------------------------------------


def cmd_classify(args) -> int:
    try:
        gm = _load_gluing_matrix(args)
    except DocumentError as exc:
        return _fail(str(exc), 2)
    group = pi1_single_gluing(gm)
    _emit_json(
        {
            "convention": CONVENTION,
            "det": gm.det,
            "g": gm.g,
            "h": gm.h,
            "gcd_gh": math.gcd(gm.g, gm.h),
            "group": _group_report(group),
            "homology_hopf": is_homology_hopf(gm),
            "matrix": _matrix_to_lists(gm.matrix),
            "zeta_variant": calibrated_zeta_variant(),
        }
    )
    return 0


def _params_from_args(triple, completion_text, what):
    a, b, p = triple
    completion = None
    if completion_text is not None:
        completion = UnimodularMatrix(_parse_nine_ints(completion_text))
    try:
        return LogTransformParams(a, b, p, completion=completion)
    except (NotPrimitiveError, ValueError) as exc:
        raise DocumentError(f"{what}: {exc}") from exc


def cmd_compose(args) -> int:
    try:
        tp = _parse_int_list(args.plus, 3, "--plus")
        tm = _parse_int_list(args.minus, 3, "--minus")
        plus = _params_from_args(tp, args.plus_completion, "--plus")
        minus = _params_from_args(tm, args.minus_completion, "--minus")
    except DocumentError as exc:
        return _fail(str(exc), 2)
    composed = compose_two_fiber(plus, minus)
    direct = pi1_two_log_transforms(*tp, *tm)
    via_matrix = pi1_single_gluing(composed)
    agreement = is_isomorphic(direct, via_matrix)
    _emit_json(
        {
            "agreement": agreement,
            "composed_matrix": _matrix_to_lists(composed.matrix),
            "convention": CONVENTION,
            "det": composed.det,
            "g": composed.g,
            "gcd_gh": math.gcd(composed.g, composed.h),
            "group": _group_report(direct),
            "group_from_composition": _group_report(via_matrix),
            "h": composed.h,
            "homology_hopf": is_homology_hopf(composed),
            "minus": list(tm),
            "plus": list(tp),
            "zeta_variant": calibrated_zeta_variant(),
        }
    )
    if not agreement:
        return _fail("fundamental-group routes disagree (convention bug)", 3)
    return 0


def cmd_reduce(args) -> int:
    try:
        gm = _load_gluing_matrix(args)
    except DocumentError as exc:
        return _fail(str(exc), 2)
    gm = normalize_to_sl3(gm)
    try:
        if args.standard:
            cert = reduce_to_standard(gm)
        else:
            _, cert = reduce_to_normal_form(gm)
    except NotHomologyHopfError as exc:
        return _fail(str(exc), 4)
    _emit_json(certificate_document(cert))
    return 0


def cmd_verify(args) -> int:
    try:
        if args.file is not None:
            with open(args.file, "r", encoding="utf-8") as fh:
                obj = json.load(fh)
        else:
            obj = json.load(sys.stdin)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(f"cannot parse certificate: {exc}", 2)
    try:
        cert = parse_certificate_document(obj)
    except DocumentError as exc:
        return _fail(str(exc), 2)
    reason = certificate_failure(cert)
    if reason is None:
        sys.stdout.write("VALID\n")
        return 0
    sys.stdout.write(f"INVALID: {reason}\n")
    return 5


def _sweep_spec_from_args(args) -> SweepSpec:
    if args.random is not None:
        if args.p_range or args.q_range or args.direction_plus or args.direction_minus:
            raise DocumentError("--random cannot be combined with tuple-sweep flags")
        return SweepSpec.matrices(
            sample_count=args.random,
            seed=args.seed,
            word_length=args.word_length,
            homology_hopf_only=args.homology_hopf_only,
        )
    if not (args.direction_plus and args.direction_minus and args.p_range and args.q_range):
        raise DocumentError(
            "tuple sweeps need --direction-plus, --direction-minus, "
            "--p-range and --q-range (or use --random N)"
        )
    a, b = _parse_int_list(args.direction_plus, 2, "--direction-plus")
    c, d = _parse_int_list(args.direction_minus, 2, "--direction-minus")
    try:
        return SweepSpec.tuples(
            a=(a, a), b=(b, b),
            p=_parse_range(args.p_range, "--p-range"),
            c=(c, c), d=(d, d),
            q=_parse_range(args.q_range, "--q-range"),
            homology_hopf_only=args.homology_hopf_only,
        )
    except SweepSpecError as exc:
        raise DocumentError(str(exc)) from exc


def _record_csv_row(r) -> str:
    factors = "|".join(str(f) for f in r.group.invariant_factors)
    hh = "true" if r.homology_hopf else "false"
    if r.params is not None:
        head = ",".join(str(x) for x in r.params)
    else:
        head = ",,,,,"
    return f"{head},{r.mu},{hh},{r.group.rank},{factors}"


def _record_json(r) -> dict:
    obj = {
        "mu": r.mu,
        "homology_hopf": r.homology_hopf,
        "rank": r.group.rank,
        "invariant_factors": list(r.group.invariant_factors),
    }
    if r.params is not None:
        obj.update(zip(("a", "b", "p", "c", "d", "q"), r.params))
    else:
        obj["matrix"] = _matrix_to_lists(r.matrix)
    return obj


def cmd_sweep(args) -> int:
    try:
        spec = _sweep_spec_from_args(args)
    except (DocumentError, SweepSpecError) as exc:
        return _fail(str(exc), 2)
    records = sweep(spec, parallel=args.parallel)
    if args.format == "csv":
        lines = [CSV_HEADER] + [_record_csv_row(r) for r in records]
        sys.stdout.write("\n".join(lines) + "\n")
        return 0
    s = summarize(records)
    _emit_json(
        {
            "convention": CONVENTION,
            "mode": spec.mode,
            "records": [_record_json(r) for r in records],
            "summary": {
                "counts_by_mu": [[mu, n] for mu, n in s.mu_counts],
                "homology_hopf": s.homology_hopf_count,
                "skipped_non_primitive": count_skipped(spec),
                "total": s.total,
            },
            "zeta_variant": calibrated_zeta_variant(),
        }
    )
    return 0


def cmd_selftest(args) -> int:
    return 0 if run_selftest(sys.stdout) else 1


# --- argument parsing -----------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfglue",
        description="Invariants and certified reductions of T^2 x D^2 boundary gluings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_matrix_input(p):
        grp = p.add_mutually_exclusive_group(required=True)
        grp.add_argument(
            "--matrix",
            help="9 comma-separated integers, row-major",
        )
        grp.add_argument("--file", help="path to a matrix document (JSON)")

    p = sub.add_parser("classify", help="fundamental group and homology type")
    add_matrix_input(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("compose", help="compose two fiber surgeries")
    p.add_argument("--plus", required=True, help="a,b,p triple")
    p.add_argument("--minus", required=True, help="c,d,q triple")
    p.add_argument("--plus-completion", help="explicit completion, 9 integers")
    p.add_argument("--minus-completion", help="explicit completion, 9 integers")
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("reduce", help="reduce to normal form with a certificate")
    add_matrix_input(p)
    p.add_argument(
        "--standard",
        action="store_true",
        help="continue past the normal form to the fixed standard gluing",
    )
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("verify", help="check a reduction certificate")
    p.add_argument("--file", help="certificate document (JSON); stdin if omitted")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("sweep", help="tabulate invariants over a parameter grid")
    p.add_argument("--direction-plus", help="a,b for the first surgery")
    p.add_argument("--direction-minus", help="c,d for the second surgery")
    p.add_argument("--p-range", help="inclusive LO:HI for p")
    p.add_argument("--q-range", help="inclusive LO:HI for q")
    p.add_argument("--random", type=int, help="sweep N random gluing matrices instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--word-length", type=int, default=12)
    p.add_argument("--homology-hopf-only", action="store_true")
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("selftest", help="run the built-in invariant suites")
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
