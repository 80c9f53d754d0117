"""Built-in demonstrations: construct a scenario from scratch, run the
full pipeline, print a transcript and write problem + certificate files.
"""

from __future__ import annotations

import os

from . import serialization as ser
from .algebras import matrix_algebra
from .fields import QQ
from .polynomials import PolyRing
from .rings import CurveRing, SeriesRing
from .tensor import TensorElement, tensor_invert


def _m2_e12_conjugator_json(ring, coefficient):
    """JSON for 1 + e12 (x) coefficient over M_2(Q)."""
    M2 = matrix_algebra(2, QQ)
    a = TensorElement.unit(M2, ring) + TensorElement.pure(
        M2, ring, M2.basis_element(1).coords, coefficient
    )
    return ser.tensor_to_json(a)


def build_elliptic():
    C = CurveRing(QQ)
    x, y = C.x(), C.y()
    rows = [[y, x], [x * x, y]]
    return {
        "schema": ser.PROBLEM_SCHEMA_ID,
        "task": "solve",
        "seed": 1,
        "R": {"matrix": 2, "field": {"family": "rationals"}},
        "S": {"family": "curve", "field": {"family": "rationals"}},
        "curve_matrix": [[C.elem_to_json(e) for e in row] for row in rows],
    }


def after_elliptic(problem, cert_doc, outdir):
    hom, _matrix = problem.build_hom()
    print("validated images of the matrix units (all entries in the curve ring):")
    for lbl, img in zip(hom.R.labels, hom.images):
        print("  phi(%s) = %r" % (lbl, img))
    return []


def build_unipotent_poly():
    PR = PolyRing(QQ, ("xi",))
    return {
        "schema": ser.PROBLEM_SCHEMA_ID,
        "task": "solve",
        "seed": 1,
        "R": {"matrix": 2, "field": {"family": "rationals"}},
        "S": {"family": "poly", "field": {"family": "rationals"}, "vars": ["xi"]},
        "conjugate_by": _m2_e12_conjugator_json(PR, PR.gen()),
    }


def build_series_lift(order=8):
    SR = SeriesRing(QQ, order)
    return {
        "schema": ser.PROBLEM_SCHEMA_ID,
        "task": "solve",
        "seed": 1,
        "R": {"matrix": 2, "field": {"family": "rationals"}},
        "S": {"family": "series", "base": {"family": "rationals"}, "order": order},
        "conjugate_by": _m2_e12_conjugator_json(SR, SR.gen()),
    }


def after_series(problem, cert_doc, outdir):
    from .cli import run_solve

    print("conjugator modulo xi^8 (coordinates over the matrix-unit basis):")
    for lbl, coeffs in zip(("e11", "e12", "e21", "e22"), cert_doc["conjugator"]):
        print("  %s: %s" % (lbl, coeffs))
    problem4 = ser.parse_problem(build_series_lift(order=4))
    cert4, _ = run_solve(problem4)
    reduced = ser.reduce_series_certificate(cert_doc, problem, problem4)
    same = ser.canonical_bytes(reduced) == ser.canonical_bytes(cert4)
    print("truncation coherence against a fresh order-4 run: %s" % ("OK" if same else "MISMATCH"))
    if not same:
        raise AssertionError("series coherence check failed")
    return []


def build_aut_decompose():
    M2 = matrix_algebra(2, QQ)
    PR = PolyRing(QQ, ("xi",))
    xi = PR.gen()
    c0 = TensorElement.unit(M2, PR) + TensorElement.pure(
        M2, PR, M2.basis_element(1).coords, xi
    )
    c0_inv = tensor_invert(c0)
    shift = [xi + PR.one]
    unshift = [xi - PR.one]

    def apply_sigma(u, images):
        return TensorElement(M2, PR, tuple(s.substitute(images) for s in u.coords))

    unit_images = [
        c0 * TensorElement.from_algebra(M2, PR, M2.basis_element(i).coords) * c0_inv
        for i in range(4)
    ]
    gen_images = [c0 * TensorElement.from_ring(M2, PR, shift[0]) * c0_inv]
    inv_unit_images = [
        apply_sigma(
            c0_inv * TensorElement.from_algebra(M2, PR, M2.basis_element(i).coords) * c0,
            unshift,
        )
        for i in range(4)
    ]
    inv_gen_images = [
        apply_sigma(c0_inv * TensorElement.from_ring(M2, PR, xi) * c0, unshift)
    ]
    return {
        "schema": ser.PROBLEM_SCHEMA_ID,
        "task": "decompose-aut",
        "seed": 1,
        "n": 2,
        "S": {"family": "poly", "field": {"family": "rationals"}, "vars": ["xi"]},
        "unit_images": [ser.tensor_to_json(u) for u in unit_images],
        "generator_images": [ser.tensor_to_json(u) for u in gen_images],
        "inverse_unit_images": [ser.tensor_to_json(u) for u in inv_unit_images],
        "inverse_generator_images": [ser.tensor_to_json(u) for u in inv_gen_images],
    }


def build_derivation_m2():
    M2 = matrix_algebra(2, QQ)
    from .algebras import Bimodule

    module = Bimodule.regular(M2)
    m = M2.basis_element(1).coords  # e12
    values = []
    for i in range(4):
        ei = tuple(QQ.one if t == i else QQ.zero for t in range(4))
        lhs = module.act_right(list(m), ei)
        rhs = module.act_left(ei, list(m))
        values.append([QQ.elem_to_json(a - b) for a, b in zip(lhs, rhs)])
    return {
        "schema": ser.PROBLEM_SCHEMA_ID,
        "task": "derivation",
        "seed": 1,
        "R": {"matrix": 2, "field": {"family": "rationals"}},
        "module": "regular",
        "values": values,
    }


def build_flip_m2():
    return {
        "schema": ser.PROBLEM_SCHEMA_ID,
        "task": "flip-check",
        "seed": 1,
        "R": {"matrix": 2, "field": {"family": "rationals"}},
    }


def after_flip(problem, cert_doc, outdir):
    print("swap conjugator in M_2 (x) M_2 (coordinates e_ij (x) .):")
    for lbl, coords in zip(("e11", "e12", "e21", "e22"), cert_doc["conjugator"]):
        print("  %s: %s" % (lbl, coords))
    return []


REGISTRY = {
    "elliptic-counterexample": {
        "build": build_elliptic,
        "after": after_elliptic,
        "blurb": "conjugation data over the elliptic coordinate ring; refuted",
    },
    "unipotent-poly": {
        "build": build_unipotent_poly,
        "after": None,
        "blurb": "unipotent conjugation over Q[xi]; solved by the UFD backend",
    },
    "series-lift": {
        "build": build_series_lift,
        "after": after_series,
        "blurb": "series conjugation at order 8 with a coherence check at order 4",
    },
    "aut-decompose": {
        "build": build_aut_decompose,
        "after": None,
        "blurb": "automorphism of M_2(Q[xi]) split into inner and substitution parts",
    },
    "derivation-m2": {
        "build": build_derivation_m2,
        "after": None,
        "blurb": "inner-derivation witness on M_2(Q)",
    },
    "flip-m2": {
        "build": build_flip_m2,
        "after": after_flip,
        "blurb": "the coordinate swap on M_2 (x) M_2 is inner",
    },
}


def run_demo(name: str, outdir: str) -> int:
    from . import cli

    entry = REGISTRY[name]
    doc = entry["build"]()
    problem = ser.parse_problem(doc)
    print("demo %s: %s" % (name, entry["blurb"]))
    task = problem.task
    if task == "solve":
        cert_doc, code = cli.run_solve(problem)
        cli._print_solve_summary(cert_doc)
    elif task == "decompose-aut":
        cert_doc, code = cli.run_decompose(problem)
        for gen, img in zip(cert_doc["sigma"]["generators"], cert_doc["sigma"]["images"]):
            print("  sigma(%s) = %s" % (gen, img))
    elif task == "derivation":
        cert_doc, code = cli.run_derivation(problem)
        print("  witness coordinates: %s" % (cert_doc["witness"],))
    elif task == "flip-check":
        cert_doc, code = cli.run_flip(problem)
    else:
        raise ser.ProblemError("demo task %r cannot run" % task)
    if entry["after"]:
        entry["after"](problem, cert_doc, outdir)
    os.makedirs(outdir, exist_ok=True)
    ppath = os.path.join(outdir, "%s-problem.json" % name)
    cpath = os.path.join(outdir, "%s-certificate.json" % name)
    ser.write_json_atomic(ppath, doc)
    ser.write_json_atomic(cpath, cert_doc)
    print("wrote %s and %s" % (ppath, cpath))
    return code


def demo_names():
    return sorted(REGISTRY)
