"""Batch command line front end.

    leonard-kit classify   --input instance.json
    leonard-kit construct  --input array.json
    leonard-kit certify    --input instance.json
    leonard-kit random     --seed 1 --d 3 --field gf:997 --count 5

stdout carries only JSON; diagnostics go to stderr.  Exit codes:
0 success, 2 malformed input, 3 not multiplicity-free, 4 residue search
refused (modulus beyond bound), 5 invariant violation, 6 not a Leonard
pair, 7 sampling budget exhausted.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Optional, Sequence

from .documents import (
    InstanceDocument,
    dumps,
    dumps_compact,
    element_strings,
    instance_doc_for_array,
    load_instance,
    matrix_strings,
    orderings_doc,
)
from .errors import (
    BadOrdering,
    DocumentError,
    InvariantViolation,
    ModulusTooLarge,
    NotLeonard,
    NotMultiplicityFree,
    SamplingExhausted,
)
from .fields import QQ, FieldElement, PrimeField
from .leonard import (
    LeonardVerdict,
    antiautomorphism_in_eigenbasis,
    check_parameter_array,
    find_leonard_orderings,
    g_conjugation,
    leonard_verdict,
    lower_bidiagonal,
    parameter_array_of_pair,
    upper_bidiagonal,
)
from .matrices import SquareMatrix, inverse
from .sampling import sample_parameter_array
from .spectral import spectral_data
from .splitdecomp import SplitCertificate, build_split
from .errors import SplitDoesNotExist

_EXIT_BY_ERROR = (
    (DocumentError, 2),
    (BadOrdering, 2),
    (NotMultiplicityFree, 3),
    (ModulusTooLarge, 4),
    (InvariantViolation, 5),
    (NotLeonard, 6),
    (SamplingExhausted, 7),
)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc


def _choose_orderings(
    doc: InstanceDocument,
    a: SquareMatrix,
    a_star: SquareMatrix,
    found: Sequence[tuple],
) -> tuple[tuple[FieldElement, ...], tuple[FieldElement, ...]]:
    natural = doc.natural_orderings()
    if natural is not None:
        return natural
    if found:
        return found[0]
    return (spectral_data(a).eigenvalues, spectral_data(a_star).eigenvalues)


def _verdict_doc(verdict: LeonardVerdict) -> dict:
    witness = None
    if verdict.failure_witness is not None:
        w = verdict.failure_witness
        witness = {"condition": w.condition, "i": w.i, "j": w.j, "expected": w.expected}
    return {
        "is_leonard_system": verdict.is_leonard_system,
        "conditions": {
            "a_lower": verdict.flags.a_lower,
            "a_upper": verdict.flags.a_upper,
            "astar_lower": verdict.flags.astar_lower,
            "astar_upper": verdict.flags.astar_upper,
        },
        "failure_witness": witness,
    }


def _split_doc(cert: SplitCertificate) -> dict:
    return {
        "basis": [v.to_strings() for v in cert.decomposition.spanners],
        "split_sequence": element_strings(cert.split_sequence),
    }


def cmd_classify(args: argparse.Namespace) -> int:
    doc = load_instance(_read_input(args.input))
    a, a_star = doc.pair()
    found = find_leonard_orderings(a, a_star)
    theta_order, theta_star_order = _choose_orderings(doc, a, a_star, found)
    verdict = leonard_verdict(a, a_star, theta_order, theta_star_order)
    split = None
    try:
        split = _split_doc(build_split(a, a_star, theta_order, theta_star_order))
    except SplitDoesNotExist:
        pass
    diagnostics = []
    if verdict.failure_witness is not None:
        diagnostics.append(verdict.failure_witness.describe())
    out = {
        "verdict": _verdict_doc(verdict),
        "split": split,
        "companion_phi": None,
        "antiautomorphism": None,
        "g_conjugator": None,
        "orderings_found": [orderings_doc(t, ts) for t, ts in found],
        "diagnostics": diagnostics,
    }
    sys.stdout.write(dumps(out))
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    doc = load_instance(_read_input(args.input))
    if doc.parameter_array is None:
        raise DocumentError("construct expects a parameter_array document")
    pa = doc.parameter_array
    a, a_star = doc.pair()
    report = check_parameter_array(pa)
    out = {
        "matrices": {"a": matrix_strings(a), "a_star": matrix_strings(a_star)},
        "report": {
            "valid": report.valid,
            "phi": None if report.phi is None else element_strings(report.phi),
            "failed_condition": report.failed_condition,
        },
    }
    sys.stdout.write(dumps(out))
    return 0


def cmd_certify(args: argparse.Namespace) -> int:
    doc = load_instance(_read_input(args.input))
    a, a_star = doc.pair()
    found = find_leonard_orderings(a, a_star)
    theta_order, theta_star_order = _choose_orderings(doc, a, a_star, found)
    verdict = leonard_verdict(a, a_star, theta_order, theta_star_order)
    if not verdict.is_leonard_system:
        raise NotLeonard("instance is not a Leonard system for the requested orderings")
    cert = build_split(a, a_star, theta_order, theta_star_order)

    # canonicalize through the split basis, then conjugate the reversal form
    field = a.field
    s_mat = SquareMatrix.from_columns(field, cert.decomposition.spanners)
    s_inv = inverse(s_mat)
    a_c = s_inv @ a @ s_mat
    a_star_c = s_inv @ a_star @ s_mat
    g_c, phi = g_conjugation(a_c, a_star_c)
    g_full = s_mat @ g_c
    g_inv = inverse(g_full)
    if g_inv @ a @ g_full != lower_bidiagonal(field, tuple(reversed(theta_order))):
        raise InvariantViolation("reversal conjugation of A failed re-verification")
    if g_inv @ a_star @ g_full != upper_bidiagonal(field, theta_star_order, phi):
        raise InvariantViolation("reversal conjugation of A* failed re-verification")
    report = check_parameter_array(parameter_array_of_pair(a_c, a_star_c))
    if not report.valid or report.phi != tuple(phi):
        raise InvariantViolation("companion sequence disagrees with the closed-form conditions")

    anti = antiautomorphism_in_eigenbasis(a, spectral_data(a_star, theta_star_order))
    out = {
        "verdict": _verdict_doc(verdict),
        "split": _split_doc(cert),
        "companion_phi": element_strings(phi),
        "antiautomorphism": {"h": matrix_strings(anti.conjugator)},
        "g_conjugator": {"g": matrix_strings(g_full)},
        "orderings_found": [orderings_doc(t, ts) for t, ts in found],
        "diagnostics": [],
    }
    sys.stdout.write(dumps(out))
    return 0


def _parse_field_flag(text: str):
    if text == "rational":
        return QQ
    if text.startswith("gf:"):
        try:
            modulus = int(text[3:])
        except ValueError as exc:
            raise DocumentError(f"bad field flag {text!r}") from exc
        try:
            return PrimeField(modulus)
        except InvariantViolation as exc:
            raise DocumentError(f"bad field flag {text!r}: {exc}") from exc
    raise DocumentError(f"bad field flag {text!r}: use rational or gf:P")


def cmd_random(args: argparse.Namespace) -> int:
    field = _parse_field_flag(args.field)
    if args.d < 0 or args.count < 1:
        raise DocumentError("--d must be >= 0 and --count >= 1")
    rng = random.Random(args.seed)
    for _ in range(args.count):
        pa = sample_parameter_array(rng, args.d, field)
        sys.stdout.write(dumps_compact(instance_doc_for_array(pa)) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leonard-kit",
        description="exact classification and certification of Leonard pairs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    classify = sub.add_parser("classify", help="decide the Leonard predicate for an instance")
    classify.add_argument("--input", default="-", help="instance JSON path (default: stdin)")
    classify.set_defaults(func=cmd_classify)

    construct = sub.add_parser("construct", help="build the bidiagonal pair of a parameter array")
    construct.add_argument("--input", default="-", help="array JSON path (default: stdin)")
    construct.set_defaults(func=cmd_construct)

    certify = sub.add_parser("certify", help="emit split basis, companion sequence, G and H")
    certify.add_argument("--input", default="-", help="instance JSON path (default: stdin)")
    certify.set_defaults(func=cmd_certify)

    rand = sub.add_parser("random", help="stream seeded valid parameter arrays")
    rand.add_argument("--seed", type=int, default=0)
    rand.add_argument("--d", type=int, required=True)
    rand.add_argument("--field", default="rational", help="rational or gf:P")
    rand.add_argument("--count", type=int, default=1)
    rand.set_defaults(func=cmd_random)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except tuple(err for err, _ in _EXIT_BY_ERROR) as exc:
        for err_type, code in _EXIT_BY_ERROR:
            if isinstance(exc, err_type):
                print(f"leonard-kit: {exc}", file=sys.stderr)
                return code
        raise  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
