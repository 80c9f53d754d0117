"""Command-line entry point.

Subcommands: solve, recheck, decompose-aut, derivation, flip-check,
demo, schema.  Exit codes: 0 success (inner / valid / done), 2 negative
result (not inner, invalid, flip refuted), 3 unsupported or exhausted,
1 malformed input, and 4 for a failed recheck.  ``SNFORGE_SEED`` supplies
a default seed for problems that do not state one.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import serialization as ser
from .applications import (
    AutSpec,
    DecompositionError,
    DerivationError,
    DerivationSpec,
    decompose_automorphism,
    flip_innerness_check,
    inner_derivation_witness,
)
from .algebras import AlgebraError, Bimodule, verify_central_simple
from .backends import (
    BackendError,
    EXHAUSTED,
    INNER,
    NOT_INNER,
    UNSUPPORTED,
    Certificate,
    SolveRequest,
    dispatch,
    reverify_solve,
)
from .fields import FieldError
from .polynomials import PolynomialError
from .rings import NotInvertibleError, RingError, UnsupportedRing
from .sn_core import ConjugationError, ExtractionError, HomomorphismError
from .serialization import ProblemError
from .tensor import TensorElement

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NEGATIVE = 2
EXIT_UNSUPPORTED = 3
EXIT_RECHECK = 4

_INPUT_ERRORS = (
    ProblemError,
    HomomorphismError,
    AlgebraError,
    RingError,
    FieldError,
    PolynomialError,
    BackendError,
    ExtractionError,
    ConjugationError,
    NotInvertibleError,
    DecompositionError,
    DerivationError,
)


def _default_seed() -> int:
    raw = os.environ.get("SNFORGE_SEED", "1")
    try:
        return int(raw)
    except ValueError:
        return 1


def _status_exit(status: str) -> int:
    if status == INNER:
        return EXIT_OK
    if status == NOT_INNER:
        return EXIT_NEGATIVE
    return EXIT_UNSUPPORTED


def _load_problem(path: str) -> ser.Problem:
    return ser.parse_problem(ser.load_json(path))


def _emit(cert_doc: dict, out_path):
    if out_path:
        ser.write_json_atomic(out_path, cert_doc)
        print("certificate written to %s" % out_path)


# ---------------------------------------------------------------------------
# solve / validate
# ---------------------------------------------------------------------------


def run_solve(problem: ser.Problem, overrides=None) -> tuple:
    """(certificate_doc, exit_code) for solve and validate tasks."""
    overrides = overrides or {}
    if isinstance(problem.ring, UnsupportedRing):
        cert = Certificate(
            status=UNSUPPORTED,
            backend="none",
            seed=problem.seed if problem.seed is not None else _default_seed(),
            trials=problem.trials,
            detail="ring family %r: %s"
            % (problem.ring.family, "out-of-scope class (no constructive backend)"),
        )
        return ser.certificate_to_json(cert, problem, task=problem.task), EXIT_UNSUPPORTED
    req = problem.solve_request(default_seed=_default_seed())
    for key in ("seed", "trials", "backend", "emit_coefficients"):
        if overrides.get(key) is not None:
            setattr(req, key, overrides[key])
    if problem.task == "validate":
        cert = Certificate(
            status="valid",
            backend="validation",
            seed=req.seed,
            trials=req.trials,
            checks=["unit preserved", "multiplicative on all basis pairs"],
        )
        doc = ser.certificate_to_json(cert, problem, task="validate")
        return doc, EXIT_OK
    cert = dispatch(req)
    doc = ser.certificate_to_json(cert, problem, task="solve")
    return doc, _status_exit(cert.status)


def cmd_solve(args) -> int:
    try:
        problem = _load_problem(args.problem)
        if problem.task not in ("solve", "validate"):
            raise ProblemError("task %r is not solvable; use the matching subcommand" % problem.task)
        overrides = {
            "seed": args.seed,
            "trials": args.trials,
            "backend": args.backend,
            "emit_coefficients": True if args.emit_coefficients else None,
        }
        doc, code = run_solve(problem, overrides)
    except HomomorphismError as exc:
        print("invalid homomorphism: %s" % exc, file=sys.stderr)
        if exc.report is not None and exc.report.get("kind") == "product":
            print(
                "first violated product: basis pair (%(i)d, %(j)d)" % exc.report,
                file=sys.stderr,
            )
        return EXIT_NEGATIVE
    except _INPUT_ERRORS as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    _print_solve_summary(doc)
    _emit(doc, args.out)
    return code


def _print_solve_summary(doc: dict):
    print("task: %s" % doc["task"])
    print("status: %s  (backend %s, seed %d)" % (doc["status"], doc["backend"], doc["seed"]))
    if doc.get("detail"):
        print("detail: %s" % doc["detail"])
    for line in doc.get("checks", []):
        print("  check: %s" % line)
    if doc.get("refutation"):
        ref = doc["refutation"]
        print("refutation determinant: %s" % json.dumps(ref.get("determinant")))
        for br in ref.get("branches", []):
            print("  branch %-24s holds=%s" % (br.get("name"), br.get("holds")))


# ---------------------------------------------------------------------------
# decompose-aut / derivation / flip-check
# ---------------------------------------------------------------------------


def _build_aut_spec(problem: ser.Problem) -> AutSpec:
    doc = problem.doc
    R, ring = problem.R, problem.ring
    unit_images = [
        ser.tensor_from_json(img, R, ring, "unit_images[%d]" % i)
        for i, img in enumerate(doc["unit_images"])
    ]
    gen_images = [
        ser.tensor_from_json(img, R, ring, "generator_images[%d]" % i)
        for i, img in enumerate(doc["generator_images"])
    ]
    inv_unit = [
        ser.tensor_from_json(img, R, ring, "inverse_unit_images[%d]" % i)
        for i, img in enumerate(doc["inverse_unit_images"])
    ]
    inv_gen = [
        ser.tensor_from_json(img, R, ring, "inverse_generator_images[%d]" % i)
        for i, img in enumerate(doc["inverse_generator_images"])
    ]
    return AutSpec(ring, doc["n"], unit_images, gen_images, inv_unit, inv_gen)


def run_decompose(problem: ser.Problem, seed=None) -> tuple:
    spec = _build_aut_spec(problem)
    seed = seed if seed is not None else (problem.seed if problem.seed is not None else _default_seed())
    dec = decompose_automorphism(spec, seed=seed, trials=problem.trials)
    ring = problem.ring
    doc = {
        "schema": ser.CERTIFICATE_SCHEMA_ID,
        "task": "decompose-aut",
        "status": "done",
        "backend": dec.certificate.backend,
        "seed": seed,
        "trials": problem.trials,
        "trials_used": dec.certificate.trials_used,
        "problem_digest": problem.digest,
        "conjugator": ser.tensor_to_json(dec.conjugator),
        "conjugator_inverse": ser.tensor_to_json(dec.conjugator_inverse),
        "sigma": {
            "generators": ring.generator_names(),
            "images": [ring.elem_to_json(s) for s in dec.sigma_images],
        },
        "sigma_inverse": {
            "generators": ring.generator_names(),
            "images": [ring.elem_to_json(s) for s in dec.sigma_inverse_images],
        },
        "checks": dec.checks,
        "extras": {},
        "detail": None,
    }
    doc["digest"] = ser.digest_of({k: v for k, v in doc.items() if k != "digest"})
    return doc, EXIT_OK


def cmd_decompose(args) -> int:
    try:
        problem = _load_problem(args.problem)
        if problem.task != "decompose-aut":
            raise ProblemError("problem task is %r, expected decompose-aut" % problem.task)
        doc, code = run_decompose(problem, seed=args.seed)
    except _INPUT_ERRORS as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    print("decomposition found (backend %s)" % doc["backend"])
    for name, img in zip(doc["sigma"]["generators"], doc["sigma"]["images"]):
        print("  sigma(%s) = %s" % (name, json.dumps(img)))
    _emit(doc, args.out)
    return code


def run_derivation(problem: ser.Problem, seed=None) -> tuple:
    R = problem.R
    module = Bimodule.regular(R)
    field = R.field
    values = []
    for i, row in enumerate(problem.doc["values"]):
        if not isinstance(row, list) or len(row) != module.dim:
            raise ProblemError("values[%d]: expected %d coordinates" % (i, module.dim))
        values.append([field.elem_from_json(c) for c in row])
    spec = DerivationSpec(R, module, values)
    seed = seed if seed is not None else (problem.seed if problem.seed is not None else _default_seed())
    wit = inner_derivation_witness(spec, seed=seed, trials=problem.trials)
    doc = {
        "schema": ser.CERTIFICATE_SCHEMA_ID,
        "task": "derivation",
        "status": "done",
        "backend": "findim",
        "seed": seed,
        "trials": problem.trials,
        "trials_used": wit.trials_used,
        "problem_digest": problem.digest,
        "witness": [field.elem_to_json(c) for c in wit.w],
        "scalar": field.elem_to_json(wit.scalar),
        "checks": wit.checks,
        "extras": {},
        "detail": None,
    }
    doc["digest"] = ser.digest_of({k: v for k, v in doc.items() if k != "digest"})
    return doc, EXIT_OK


def cmd_derivation(args) -> int:
    try:
        problem = _load_problem(args.problem)
        if problem.task != "derivation":
            raise ProblemError("problem task is %r, expected derivation" % problem.task)
        doc, code = run_derivation(problem, seed=args.seed)
    except _INPUT_ERRORS as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    print("inner-derivation witness: %s" % json.dumps(doc["witness"]))
    _emit(doc, args.out)
    return code


def run_flip(problem: ser.Problem, seed=None) -> tuple:
    R = problem.R
    seed = seed if seed is not None else (problem.seed if problem.seed is not None else _default_seed())
    result = flip_innerness_check(R, seed=seed, trials=problem.trials)
    doc = {
        "schema": ser.CERTIFICATE_SCHEMA_ID,
        "task": "flip-check",
        "status": "done",
        "backend": "findim",
        "seed": seed,
        "trials": problem.trials,
        "trials_used": result.certificate.trials_used if result.certificate else None,
        "problem_digest": problem.digest,
        "flip_inner": result.inner,
        "checks": list(result.certificate.checks) if result.certificate else [],
        "extras": {},
        "detail": None,
    }
    if result.inner:
        doc["conjugator"] = ser.tensor_to_json(result.certificate.conjugator)
        doc["conjugator_inverse"] = ser.tensor_to_json(result.certificate.conjugator_inverse)
    else:
        defect = {k: v for k, v in result.defect.items() if k != "proper_ideal_basis"}
        if "proper_ideal_basis" in result.defect:
            defect["proper_ideal_basis"] = [
                [R.field.elem_to_json(c) for c in row]
                for row in result.defect["proper_ideal_basis"]
            ]
        doc["defect"] = defect
    doc["digest"] = ser.digest_of({k: v for k, v in doc.items() if k != "digest"})
    return doc, EXIT_OK if result.inner else EXIT_NEGATIVE


def cmd_flip(args) -> int:
    try:
        problem = _load_problem(args.problem)
        if problem.task != "flip-check":
            raise ProblemError("problem task is %r, expected flip-check" % problem.task)
        doc, code = run_flip(problem, seed=args.seed)
    except _INPUT_ERRORS as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    if doc["flip_inner"]:
        print("swap homomorphism is inner; conjugator verified")
    else:
        print("swap homomorphism is not inner; defect: %s" % json.dumps(doc["defect"]))
    _emit(doc, args.out)
    return code


# ---------------------------------------------------------------------------
# recheck
# ---------------------------------------------------------------------------


def run_recheck(problem: ser.Problem, cert_doc: dict):
    """First failing check as a string, else None."""
    failure = ser.verify_certificate_digests(cert_doc, problem)
    if failure:
        return failure
    task = cert_doc.get("task")
    if task != problem.task:
        return "certificate task %r does not match problem task %r" % (task, problem.task)
    if task in ("solve", "validate"):
        if isinstance(problem.ring, UnsupportedRing):
            return None if cert_doc["status"] in (UNSUPPORTED, EXHAUSTED) else (
                "unsupported ring cannot carry status %r" % cert_doc["status"]
            )
        hom, curve_matrix = problem.build_hom()
        if task == "validate":
            return None
        cert = ser.certificate_from_json(cert_doc, problem)
        return reverify_solve(hom, cert, curve_matrix=curve_matrix)
    if task == "decompose-aut":
        return _recheck_decompose(problem, cert_doc)
    if task == "derivation":
        return _recheck_derivation(problem, cert_doc)
    if task == "flip-check":
        return _recheck_flip(problem, cert_doc)
    return "unknown certificate task %r" % task


def _recheck_decompose(problem: ser.Problem, cert_doc: dict):
    spec = _build_aut_spec(problem)
    ring, R = problem.ring, problem.R
    c = ser.tensor_from_json(cert_doc["conjugator"], R, ring, "conjugator")
    c_inv = ser.tensor_from_json(cert_doc["conjugator_inverse"], R, ring, "conjugator_inverse")
    one = TensorElement.unit(R, ring)
    if c * c_inv != one or c_inv * c != one:
        return "conjugator and inverse do not multiply to 1"
    for i in range(R.dim):
        e = TensorElement.from_algebra(R, ring, R.basis_element(i).coords)
        if c * e * c_inv != spec.hom.images[i]:
            return "matrix-unit image %d is not reproduced by the conjugator" % i
    sigma_images = [
        ring.elem_from_json(img) for img in cert_doc["sigma"]["images"]
    ]
    for g_img, s in zip(spec.generator_images, sigma_images):
        if c * TensorElement.from_ring(R, ring, s) * c_inv != g_img:
            return "a ring-generator image is not reproduced by the decomposition"
    return None


def _recheck_derivation(problem: ser.Problem, cert_doc: dict):
    R = problem.R
    field = R.field
    module = Bimodule.regular(R)
    values = [
        [field.elem_from_json(c) for c in row] for row in problem.doc["values"]
    ]
    spec = DerivationSpec(R, module, values)
    w = [field.elem_from_json(c) for c in cert_doc["witness"]]
    for i in range(R.dim):
        ei = tuple(field.one if t == i else field.zero for t in range(R.dim))
        lhs = [a - b for a, b in zip(module.act_right(w, ei), module.act_left(ei, w))]
        if list(spec.values[i]) != lhs:
            return "witness identity fails on basis index %d" % i
    return None


def _recheck_flip(problem: ser.Problem, cert_doc: dict):
    R = problem.R
    csa = verify_central_simple(R)
    if bool(cert_doc.get("flip_inner")) != csa:
        return "flip verdict disagrees with the central-simplicity test"
    if csa:
        from .rings import FinDimRing

        ring = FinDimRing(R)
        c = ser.tensor_from_json(cert_doc["conjugator"], R, ring, "conjugator")
        c_inv = ser.tensor_from_json(cert_doc["conjugator_inverse"], R, ring, "conjugator_inverse")
        one = TensorElement.unit(R, ring)
        if c * c_inv != one or c_inv * c != one:
            return "conjugator and inverse do not multiply to 1"
        for i in range(R.dim):
            lhs = TensorElement.from_ring(R, ring, R.basis_element(i)) * c
            rhs = c.mul_alg_right(R.basis_element(i).coords)
            if lhs != rhs:
                return "swap identity fails on basis index %d" % i
        return None
    defect = cert_doc.get("defect", {})
    if defect.get("spanning_rank_deficit") != R.spanning_rank_deficit():
        return "recorded spanning-rank deficit is wrong"
    return None


def cmd_recheck(args) -> int:
    try:
        problem = _load_problem(args.problem)
        cert_doc = ser.load_json(args.certificate)
        ser.validate_certificate_doc(cert_doc)
        failure = run_recheck(problem, cert_doc)
    except _INPUT_ERRORS as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    if failure:
        print("recheck FAILED: %s" % failure)
        return EXIT_RECHECK
    print("recheck passed: every certificate claim re-verified")
    return EXIT_OK


# ---------------------------------------------------------------------------
# demo / schema
# ---------------------------------------------------------------------------


def cmd_demo(args) -> int:
    from . import demos

    registry = demos.REGISTRY
    if args.name not in registry:
        print("unknown demo %r; available: %s" % (args.name, ", ".join(sorted(registry))))
        return EXIT_INPUT
    return demos.run_demo(args.name, args.out)


def cmd_schema(args) -> int:
    print(
        json.dumps(
            {"problem": ser.PROBLEM_SCHEMA, "certificate": ser.CERTIFICATE_SCHEMA},
            indent=2,
            sort_keys=True,
        )
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snforge",
        description="Exact conjugator construction, verification and refutation "
        "for homomorphisms R -> R (x) S.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, cert_out=True):
        p.add_argument("problem", help="path to a problem JSON file")
        if cert_out:
            p.add_argument("--out", "-o", help="write the certificate here")
        p.add_argument("--seed", type=int, default=None, help="override the problem seed")

    p_solve = sub.add_parser("solve", help="solve or refute a conjugator problem")
    add_common(p_solve)
    p_solve.add_argument("--trials", type=int, default=None, help="randomized trial bound")
    p_solve.add_argument("--backend", default=None, help="force a backend")
    p_solve.add_argument(
        "--emit-coefficients",
        action="store_true",
        help="embed the extracted coefficient matrix in the certificate",
    )
    p_solve.set_defaults(fn=cmd_solve)

    p_re = sub.add_parser("recheck", help="re-verify a certificate without solving")
    p_re.add_argument("problem")
    p_re.add_argument("certificate")
    p_re.set_defaults(fn=cmd_recheck)

    p_dec = sub.add_parser("decompose-aut", help="split an automorphism of M_n(S)")
    add_common(p_dec)
    p_dec.set_defaults(fn=cmd_decompose)

    p_der = sub.add_parser("derivation", help="inner-derivation witness")
    add_common(p_der)
    p_der.set_defaults(fn=cmd_derivation)

    p_flip = sub.add_parser("flip-check", help="decide innerness of the coordinate swap")
    add_common(p_flip)
    p_flip.set_defaults(fn=cmd_flip)

    p_demo = sub.add_parser("demo", help="run a built-in demonstration")
    p_demo.add_argument("name")
    p_demo.add_argument("--out", "-o", default=".", help="directory for emitted files")
    p_demo.set_defaults(fn=cmd_demo)

    p_schema = sub.add_parser("schema", help="print the problem and certificate schemas")
    p_schema.set_defaults(fn=cmd_schema)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
