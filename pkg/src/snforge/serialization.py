"""Problem and certificate files: canonical JSON, schemas, digests.

Files are UTF-8 JSON with sorted keys and no insignificant whitespace,
so canonicalized content is byte-reproducible and digestible.  Rationals
travel as strings.  Certificates bind to their problem through a SHA-256
digest of the canonical problem document and carry their own digest over
everything else in the file.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile

import jsonschema

from .algebras import StructAlgebra, from_dense_table, matrix_algebra, quaternion_algebra
from .backends import Certificate, SolveRequest, curve_conjugation_hom
from .fields import QQ, PrimeField
from .polynomials import PolyRing
from .rings import (
    CurveRing,
    FinDimRing,
    MatrixPolyRing,
    ProductRing,
    SeriesRing,
    UnsupportedRing,
)
from .sn_core import HomSpec, hom_from_conjugation, validate_hom
from .tensor import TensorElement, series_truncate, tensor_invert

PROBLEM_SCHEMA_ID = "snforge-problem/1"
CERTIFICATE_SCHEMA_ID = "snforge-certificate/1"

TASKS = ("validate", "solve", "decompose-aut", "derivation", "flip-check")

# families the parser accepts; the starred ones are recognized but have
# no backend and surface as unsupported certificates
RING_FAMILIES = (
    "rationals",
    "prime_field",
    "poly",
    "curve",
    "series",
    "product",
    "findim",
    "matrix_poly",
    "free_algebra",
    "sylvester_domain",
    "hcrf_domain",
    "bezout_domain",
)
UNSUPPORTED_FAMILIES = ("free_algebra", "sylvester_domain", "hcrf_domain", "bezout_domain")


class ProblemError(Exception):
    """Malformed input; the message names the path into the document."""


PROBLEM_SCHEMA = {
    "$id": PROBLEM_SCHEMA_ID,
    "type": "object",
    "additionalProperties": False,
    "required": ["schema", "task"],
    "properties": {
        "schema": {"const": PROBLEM_SCHEMA_ID},
        "task": {"enum": list(TASKS)},
        "seed": {"type": "integer", "minimum": 0},
        "trials": {"type": "integer", "minimum": 1},
        "backend": {"type": "string"},
        "emit_coefficients": {"type": "boolean"},
        "R": {"type": "object"},
        "S": {"type": "object"},
        "images": {"type": "array"},
        "conjugate_by": {},
        "curve_matrix": {"type": "array"},
        "n": {"type": "integer", "minimum": 1},
        "unit_images": {"type": "array"},
        "generator_images": {"type": "array"},
        "inverse_unit_images": {"type": "array"},
        "inverse_generator_images": {"type": "array"},
        "module": {},
        "values": {"type": "array"},
    },
}

CERTIFICATE_SCHEMA = {
    "$id": CERTIFICATE_SCHEMA_ID,
    "type": "object",
    "additionalProperties": False,
    "required": ["schema", "task", "status", "backend", "seed", "problem_digest", "digest"],
    "properties": {
        "schema": {"const": CERTIFICATE_SCHEMA_ID},
        "task": {"enum": list(TASKS)},
        "status": {"enum": ["inner", "not_inner", "unsupported", "exhausted", "valid", "invalid", "done"]},
        "backend": {"type": "string"},
        "seed": {"type": "integer"},
        "trials": {"type": "integer"},
        "trials_used": {"type": ["integer", "null"]},
        "problem_digest": {"type": "string"},
        "conjugator": {},
        "conjugator_inverse": {},
        "checks": {"type": "array", "items": {"type": "string"}},
        "refutation": {},
        "coefficients": {},
        "extras": {"type": "object"},
        "sigma": {},
        "sigma_inverse": {},
        "witness": {},
        "scalar": {},
        "flip_inner": {"type": "boolean"},
        "defect": {},
        "detail": {"type": ["string", "null"]},
        "digest": {"type": "string"},
    },
}


# ---------------------------------------------------------------------------
# canonical bytes, digests, atomic writes
# ---------------------------------------------------------------------------


def canonical_bytes(obj) -> bytes:
    return (
        json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"
    ).encode("utf-8")


def digest_of(obj) -> str:
    return hashlib.sha256(canonical_bytes(obj)).hexdigest()


def write_json_atomic(path: str, obj):
    data = canonical_bytes(obj)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".snforge-", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise ProblemError("cannot read %s: %s" % (path, exc))


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------


def field_from_json(obj, path="field"):
    if not isinstance(obj, dict) or "family" not in obj:
        raise ProblemError("%s: expected a field descriptor object" % path)
    fam = obj["family"]
    if fam == "rationals":
        if set(obj) != {"family"}:
            raise ProblemError("%s: unexpected keys in rationals descriptor" % path)
        return QQ
    if fam == "prime_field":
        if set(obj) != {"family", "p"} or not isinstance(obj.get("p"), int):
            raise ProblemError("%s: prime_field needs an integer p" % path)
        try:
            return PrimeField(obj["p"])
        except Exception as exc:
            raise ProblemError("%s: %s" % (path, exc))
    raise ProblemError("%s: unknown field family %r" % (path, fam))


def algebra_from_json(obj, path="R") -> StructAlgebra:
    if not isinstance(obj, dict):
        raise ProblemError("%s: expected an algebra descriptor object" % path)
    field = field_from_json(obj.get("field", {"family": "rationals"}), path + ".field")
    if "matrix" in obj:
        if not isinstance(obj["matrix"], int) or obj["matrix"] < 1:
            raise ProblemError("%s.matrix: need a positive integer" % path)
        return matrix_algebra(obj["matrix"], field)
    if "quaternion" in obj:
        params = obj["quaternion"]
        if not isinstance(params, list) or len(params) != 2:
            raise ProblemError("%s.quaternion: need [alpha, beta]" % path)
        try:
            return quaternion_algebra(field.elem_from_json(params[0]), field.elem_from_json(params[1]), field)
        except Exception as exc:
            raise ProblemError("%s.quaternion: %s" % (path, exc))
    if "structure_constants" in obj:
        needed = {"field", "dim", "structure_constants", "unit"}
        if not needed <= set(obj):
            raise ProblemError("%s: structure-constant algebras need %s" % (path, sorted(needed)))
        gamma_raw = obj["structure_constants"]
        d = obj["dim"]
        try:
            gamma = [
                [[field.elem_from_json(c) for c in row] for row in plane]
                for plane in gamma_raw
            ]
            unit = [field.elem_from_json(c) for c in obj["unit"]]
        except Exception as exc:
            raise ProblemError("%s.structure_constants: %s" % (path, exc))
        if len(gamma) != d:
            raise ProblemError("%s: dim does not match the table" % path)
        try:
            return from_dense_table(field, gamma, unit, labels=obj.get("labels"))
        except Exception as exc:
            raise ProblemError("%s: %s" % (path, exc))
    raise ProblemError("%s: need one of matrix / quaternion / structure_constants" % path)


def algebra_to_json(A: StructAlgebra) -> dict:
    out = A.to_json()
    out["field"] = A.field.to_json()
    return out


def ring_from_json(obj, path="S"):
    if not isinstance(obj, dict) or "family" not in obj:
        raise ProblemError("%s: expected a ring descriptor object" % path)
    fam = obj["family"]
    if fam not in RING_FAMILIES:
        raise ProblemError("%s: unknown ring family %r" % (path, fam))
    if fam in UNSUPPORTED_FAMILIES:
        payload = {k: v for k, v in obj.items() if k != "family"}
        return UnsupportedRing(fam, payload)
    if fam in ("rationals", "prime_field"):
        return field_from_json(obj, path)
    if fam == "poly":
        field = field_from_json(obj.get("field", {}), path + ".field")
        names = obj.get("vars")
        if not isinstance(names, list) or not names or not all(isinstance(v, str) for v in names):
            raise ProblemError("%s.vars: need a nonempty list of variable names" % path)
        if len(names) > 3:
            raise ProblemError("%s.vars: at most 3 variables are supported" % path)
        return PolyRing(field, tuple(names))
    if fam == "curve":
        field = field_from_json(obj.get("field", {}), path + ".field")
        try:
            return CurveRing(field)
        except Exception as exc:
            raise ProblemError("%s: %s" % (path, exc))
    if fam == "series":
        order = obj.get("order")
        if not isinstance(order, int) or order < 1:
            raise ProblemError("%s.order: need a positive integer" % path)
        base = ring_from_json(obj.get("base"), path + ".base")
        if isinstance(base, UnsupportedRing):
            return UnsupportedRing("series", {"base": base.to_json(), "order": order})
        return SeriesRing(base, order)
    if fam == "product":
        factors = obj.get("factors")
        if not isinstance(factors, list) or len(factors) != 2:
            raise ProblemError("%s.factors: need exactly two factor descriptors" % path)
        f1 = ring_from_json(factors[0], path + ".factors[0]")
        f2 = ring_from_json(factors[1], path + ".factors[1]")
        if isinstance(f1, UnsupportedRing) or isinstance(f2, UnsupportedRing):
            return UnsupportedRing("product", {"factors": [f1.to_json(), f2.to_json()]})
        try:
            return ProductRing(f1, f2)
        except Exception as exc:
            raise ProblemError("%s: %s" % (path, exc))
    if fam == "findim":
        A = algebra_from_json(obj.get("algebra"), path + ".algebra")
        return FinDimRing(A)
    if fam == "matrix_poly":
        field = field_from_json(obj.get("field", {}), path + ".field")
        n = obj.get("n")
        var = obj.get("var", "xi")
        if not isinstance(n, int) or n < 1:
            raise ProblemError("%s.n: need a positive integer" % path)
        if not isinstance(var, str):
            raise ProblemError("%s.var: need a variable name" % path)
        return MatrixPolyRing(n, PolyRing(field, (var,)))
    raise ProblemError("%s: unhandled family %r" % (path, fam))


def tensor_from_json(obj, R: StructAlgebra, ring, path="element") -> TensorElement:
    if not isinstance(obj, list) or len(obj) != R.dim:
        raise ProblemError("%s: expected %d coordinates" % (path, R.dim))
    coords = []
    for idx, item in enumerate(obj):
        try:
            coords.append(ring.elem_from_json(item))
        except Exception as exc:
            raise ProblemError("%s[%d]: %s" % (path, idx, exc))
    return TensorElement(R, ring, coords)


def tensor_to_json(u: TensorElement):
    return [u.ring.elem_to_json(c) for c in u.coords]


# ---------------------------------------------------------------------------
# problems
# ---------------------------------------------------------------------------


class Problem:
    def __init__(self, doc: dict):
        try:
            jsonschema.validate(doc, PROBLEM_SCHEMA)
        except jsonschema.ValidationError as exc:
            raise ProblemError(
                "problem file rejected at %s: %s"
                % ("/".join(str(p) for p in exc.absolute_path) or "<root>", exc.message)
            )
        self.doc = doc
        self.task = doc["task"]
        self.seed = doc.get("seed")
        self.trials = doc.get("trials", 64)
        self.backend = doc.get("backend")
        self.emit_coefficients = doc.get("emit_coefficients", False)
        self.digest = digest_of(doc)
        self._parse_payload()

    def _parse_payload(self):
        doc = self.doc
        task = self.task
        self.R = None
        self.ring = None
        self.images_json = None
        self.conjugate_by_json = None
        self.curve_matrix_json = None
        if task in ("validate", "solve"):
            if "R" not in doc or "S" not in doc:
                raise ProblemError("%s tasks need R and S descriptors" % task)
            self.ring = ring_from_json(doc["S"], "S")
            if isinstance(self.ring, UnsupportedRing):
                return
            self.R = algebra_from_json(doc["R"], "R")
            sources = [k for k in ("images", "conjugate_by", "curve_matrix") if k in doc]
            if len(sources) != 1:
                raise ProblemError(
                    "solve/validate needs exactly one of images, conjugate_by, curve_matrix"
                )
            if "images" in doc:
                self.images_json = doc["images"]
            elif "conjugate_by" in doc:
                self.conjugate_by_json = doc["conjugate_by"]
            else:
                self.curve_matrix_json = doc["curve_matrix"]
        elif task == "decompose-aut":
            for key in ("S", "n", "unit_images", "generator_images",
                        "inverse_unit_images", "inverse_generator_images"):
                if key not in doc:
                    raise ProblemError("decompose-aut needs %s" % key)
            self.ring = ring_from_json(doc["S"], "S")
            if isinstance(self.ring, UnsupportedRing):
                raise ProblemError("decompose-aut does not support ring family %r" % self.ring.family)
            field = getattr(self.ring, "field", None) or self.ring
            self.R = matrix_algebra(doc["n"], field)
        elif task == "derivation":
            if "R" not in doc or "values" not in doc:
                raise ProblemError("derivation needs R and values")
            self.R = algebra_from_json(doc["R"], "R")
            if doc.get("module", "regular") != "regular":
                raise ProblemError("only the regular bimodule has a wire format")
        elif task == "flip-check":
            if "R" not in doc:
                raise ProblemError("flip-check needs R")
            self.R = algebra_from_json(doc["R"], "R")

    # -- materialization --

    def build_hom(self):
        """(HomSpec, curve_matrix or None) for solve/validate tasks."""
        if self.task not in ("validate", "solve"):
            raise ProblemError("task %s has no homomorphism" % self.task)
        if isinstance(self.ring, UnsupportedRing):
            raise ProblemError("ring family %r is unsupported" % self.ring.family)
        R, ring = self.R, self.ring
        if self.images_json is not None:
            images = [
                tensor_from_json(img, R, ring, "images[%d]" % i)
                for i, img in enumerate(self.images_json)
            ]
            if len(images) != R.dim:
                raise ProblemError("images: expected %d entries" % R.dim)
            return validate_hom(R, ring, images), None
        if self.conjugate_by_json is not None:
            a = tensor_from_json(self.conjugate_by_json, R, ring, "conjugate_by")
            hom, _ = hom_from_conjugation(R, ring, a)
            return hom, None
        rows = self.curve_matrix_json
        if not isinstance(self.ring, CurveRing):
            raise ProblemError("curve_matrix only makes sense over the curve ring")
        if (
            not isinstance(rows, list)
            or len(rows) != 2
            or any(not isinstance(r, list) or len(r) != 2 for r in rows)
        ):
            raise ProblemError("curve_matrix: expected a 2x2 matrix")
        parsed = tuple(
            tuple(self.ring.elem_from_json(rows[i][j]) for j in range(2)) for i in range(2)
        )
        hom, _a, _det = curve_conjugation_hom(R, ring, parsed)
        return hom, parsed

    def solve_request(self, default_seed=1):
        hom, curve_matrix = self.build_hom()
        seed = self.seed if self.seed is not None else default_seed
        return SolveRequest(
            hom,
            seed=seed,
            trials=self.trials,
            backend=self.backend,
            curve_matrix=curve_matrix,
            emit_coefficients=self.emit_coefficients,
        )


def parse_problem(doc: dict) -> Problem:
    return Problem(doc)


def canonical_problem_bytes(doc: dict) -> bytes:
    return canonical_bytes(doc)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


def _refutation_to_json(refutation, ring):
    if refutation is None:
        return None
    out = dict(refutation)
    det = out.get("determinant")
    if det is not None and not isinstance(det, dict):
        out["determinant"] = ring.elem_to_json(det)
    return out


def certificate_to_json(cert: Certificate, problem: Problem, task="solve") -> dict:
    ring = problem.ring
    doc = {
        "schema": CERTIFICATE_SCHEMA_ID,
        "task": task,
        "status": cert.status,
        "backend": cert.backend,
        "seed": cert.seed,
        "trials": cert.trials,
        "trials_used": cert.trials_used,
        "problem_digest": problem.digest,
        "checks": list(cert.checks),
        "detail": cert.detail,
        "extras": _plain_extras(cert.extras),
    }
    if cert.conjugator is not None:
        doc["conjugator"] = tensor_to_json(cert.conjugator)
        doc["conjugator_inverse"] = tensor_to_json(cert.conjugator_inverse)
    if cert.refutation is not None:
        doc["refutation"] = _refutation_to_json(cert.refutation, ring)
    if "coefficients" in cert.extras:
        ct = cert.extras["coefficients"]
        doc["coefficients"] = {
            "s_matrix": [[ring.elem_to_json(s) for s in row] for row in ct.s_matrix]
        }
    doc["digest"] = digest_of({k: v for k, v in doc.items() if k != "digest"})
    return doc


def _plain_extras(extras: dict) -> dict:
    out = {}
    for key, value in extras.items():
        if isinstance(value, (str, int, bool)) or value is None:
            out[key] = value
        elif isinstance(value, list) and all(isinstance(v, (str, int, bool)) for v in value):
            out[key] = value
    return out


def validate_certificate_doc(doc: dict):
    try:
        jsonschema.validate(doc, CERTIFICATE_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise ProblemError(
            "certificate rejected at %s: %s"
            % ("/".join(str(p) for p in exc.absolute_path) or "<root>", exc.message)
        )


def certificate_from_json(doc: dict, problem: Problem) -> Certificate:
    validate_certificate_doc(doc)
    ring = problem.ring
    R = problem.R
    conjugator = None
    conjugator_inverse = None
    if "conjugator" in doc:
        conjugator = tensor_from_json(doc["conjugator"], R, ring, "conjugator")
        conjugator_inverse = tensor_from_json(
            doc.get("conjugator_inverse"), R, ring, "conjugator_inverse"
        )
    refutation = doc.get("refutation")
    if refutation is not None:
        refutation = dict(refutation)
        if "determinant" in refutation:
            refutation["determinant"] = ring.elem_from_json(refutation["determinant"])
    return Certificate(
        status=doc["status"],
        backend=doc["backend"],
        seed=doc["seed"],
        trials=doc.get("trials", 64),
        trials_used=doc.get("trials_used"),
        conjugator=conjugator,
        conjugator_inverse=conjugator_inverse,
        checks=list(doc.get("checks", [])),
        refutation=refutation,
        detail=doc.get("detail"),
        extras=dict(doc.get("extras", {})),
    )


def verify_certificate_digests(cert_doc: dict, problem: Problem):
    """First failing digest check as a string, else None."""
    if cert_doc.get("problem_digest") != problem.digest:
        return "certificate was issued for a different problem (digest mismatch)"
    body = {k: v for k, v in cert_doc.items() if k != "digest"}
    if digest_of(body) != cert_doc.get("digest"):
        return "certificate digest does not match its contents"
    return None


def reduce_series_certificate(cert_doc: dict, problem8: Problem, problem4: Problem) -> dict:
    """Reduce a series-solve certificate to the lower truncation order of
    problem4, recomputing both digests; used for coherence checks."""
    cert = certificate_from_json(cert_doc, problem8)
    reduced = dict(cert_doc)
    order = problem4.ring.order
    if cert.conjugator is not None:
        reduced["conjugator"] = tensor_to_json(series_truncate(cert.conjugator, order))
        reduced["conjugator_inverse"] = tensor_to_json(
            series_truncate(cert.conjugator_inverse, order)
        )
    reduced["problem_digest"] = problem4.digest
    reduced["digest"] = digest_of({k: v for k, v in reduced.items() if k != "digest"})
    return reduced
