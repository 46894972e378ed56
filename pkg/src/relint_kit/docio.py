"""JSON document grammar shared by the CLI, instance corpus, and reports.

Rationals travel as strings "p" or "p/q"; no floating-point literal is
ever accepted or emitted, so serialized reports are bit-identical across
platforms.  Parse errors carry the offending field path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InputError
from .polyhedra import HPolyhedron, VPolyhedron
from .rational import Mat, Rat, Vec, format_rational, parse_rational
from .relint import MembershipReport, QuasiRegularityReport, RowWitness
from .separation import SeparationCertificate
from .seqspace import HybridSeq, L1BallClassification
from .setmaps import PLConvexFunction, PolyhedralMap

KINDS = ("hpoly", "vpoly", "map", "plfunction", "sequence")

Payload = HPolyhedron | VPolyhedron | PolyhedralMap | PLConvexFunction | HybridSeq


@dataclass(frozen=True)
class InstanceDocument:
    kind: str
    id: str
    payload: Payload


def _rat(node, path: str) -> Rat:
    if not isinstance(node, str):
        raise InputError(f"{path}: rationals must be strings, got {node!r}")
    try:
        return parse_rational(node)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def _vec(node, path: str) -> Vec:
    if not isinstance(node, list):
        raise InputError(f"{path}: expected a list")
    return tuple(_rat(v, f"{path}[{i}]") for i, v in enumerate(node))


def _matrix(node, path: str) -> Mat:
    if not isinstance(node, list):
        raise InputError(f"{path}: expected a list of rows")
    return tuple(_vec(row, f"{path}[{i}]") for i, row in enumerate(node))


def _int(node, path: str) -> int:
    if not isinstance(node, int) or isinstance(node, bool):
        raise InputError(f"{path}: expected an integer")
    return node


def _hpoly(node, path: str) -> HPolyhedron:
    if not isinstance(node, dict):
        raise InputError(f"{path}: expected an object")
    return HPolyhedron(
        _matrix(node.get("A", []), f"{path}.A"),
        _vec(node.get("b", []), f"{path}.b"),
        _matrix(node.get("E", []), f"{path}.E"),
        _vec(node.get("d", []), f"{path}.d"),
        _int(node.get("dim"), f"{path}.dim"),
    )


def _payload(kind: str, node, path: str) -> Payload:
    if kind == "hpoly":
        return _hpoly(node, path)
    if kind == "vpoly":
        return VPolyhedron(
            _matrix(node.get("points", []), f"{path}.points"),
            _matrix(node.get("rays", []), f"{path}.rays"),
            _int(node.get("dim"), f"{path}.dim"),
        )
    if kind == "map":
        return PolyhedralMap(
            _hpoly(node.get("graph"), f"{path}.graph"),
            _int(node.get("m"), f"{path}.m"),
            _int(node.get("n"), f"{path}.n"),
        )
    if kind == "plfunction":
        rows = node.get("pieces")
        if not isinstance(rows, list) or not rows:
            raise InputError(f"{path}.pieces: expected a nonempty list")
        pieces = []
        for i, row in enumerate(rows):
            entries = _vec(row, f"{path}.pieces[{i}]")
            if len(entries) < 2:
                raise InputError(
                    f"{path}.pieces[{i}]: a piece needs a slope and an intercept")
            pieces.append((entries[:-1], entries[-1]))
        return PLConvexFunction(tuple(pieces), _hpoly(node.get("domain"), f"{path}.domain"))
    if kind == "sequence":
        prefix = _vec(node.get("prefix", []), f"{path}.prefix")
        tail_node = node.get("tail")
        tail = None
        if tail_node is not None:
            if not isinstance(tail_node, dict):
                raise InputError(f"{path}.tail: expected an object or null")
            tail = (
                _rat(tail_node.get("c"), f"{path}.tail.c"),
                _rat(tail_node.get("q"), f"{path}.tail.q"),
                _int(tail_node.get("start"), f"{path}.tail.start"),
            )
        return HybridSeq.make(prefix, tail)
    raise InputError(f"unknown instance kind {kind!r}")


def parse_instance(text: str, source: str = "<input>") -> InstanceDocument:
    """Parse one instance document; errors carry location information."""
    try:
        node = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(node, dict):
        raise InputError(f"{source}: expected a top-level object")
    kind = node.get("kind")
    if kind not in KINDS:
        raise InputError(f"{source}: kind must be one of {KINDS}, got {kind!r}")
    ident = node.get("id", source)
    if not isinstance(ident, str):
        raise InputError(f"{source}: id must be a string")
    payload = node.get("payload")
    if payload is None:
        raise InputError(f"{source}: missing payload")
    try:
        return InstanceDocument(kind, ident, _payload(kind, payload, "payload"))
    except InputError as exc:
        raise InputError(f"{source}: {exc}") from None


# -- serialization -------------------------------------------------------------


def ser_vec(v: Vec) -> list[str]:
    return [format_rational(x) for x in v]


def ser_mat(m: Mat) -> list[list[str]]:
    return [ser_vec(row) for row in m]


def hpoly_doc(P: HPolyhedron) -> dict:
    return {"A": ser_mat(P.A), "b": ser_vec(P.b), "E": ser_mat(P.E),
            "d": ser_vec(P.d), "dim": P.dim}


def vpoly_doc(V: VPolyhedron) -> dict:
    return {"points": ser_mat(V.points), "rays": ser_mat(V.rays), "dim": V.dim}


def certificate_doc(cert: SeparationCertificate) -> dict:
    return {
        "functional": ser_vec(cert.functional),
        "sup1": None if cert.sup1 is None else format_rational(cert.sup1),
        "inf2": None if cert.inf2 is None else format_rational(cert.inf2),
        "strict_witness_1": ser_vec(cert.strict_witness_1),
        "strict_witness_2": ser_vec(cert.strict_witness_2),
    }


def parse_certificate(node: dict, path: str = "certificate") -> SeparationCertificate:
    return SeparationCertificate(
        _vec(node.get("functional"), f"{path}.functional"),
        None if node.get("sup1") is None else _rat(node["sup1"], f"{path}.sup1"),
        None if node.get("inf2") is None else _rat(node["inf2"], f"{path}.inf2"),
        _vec(node.get("strict_witness_1"), f"{path}.strict_witness_1"),
        _vec(node.get("strict_witness_2"), f"{path}.strict_witness_2"),
    )


def witness_doc(w: RowWitness | None) -> dict | None:
    if w is None:
        return None
    return {"kind": w.kind, "index": w.index, "normal": ser_vec(w.normal),
            "rhs": format_rational(w.rhs)}


def membership_report_doc(rep: MembershipReport) -> dict:
    return {
        "point": ser_vec(rep.point),
        "set_id": rep.set_id,
        "ri_def": rep.ri_def,
        "prolongation": rep.prolongation,
        "cone_subspace": rep.cone_subspace,
        "closed_cone_subspace": rep.closed_cone_subspace,
        "normal_cone_subspace": rep.normal_cone_subspace,
        "closure_structural": rep.closure_structural,
        "agree": rep.agree,
        "witness": witness_doc(rep.witness),
    }


def quasireg_doc(rep: QuasiRegularityReport) -> dict:
    return {
        "set_id": rep.set_id,
        "cond_finite_dim": rep.cond_finite_dim,
        "cond_int_nonempty": rep.cond_int_nonempty,
        "cond_ri_nonempty": rep.cond_ri_nonempty,
        "verdict": rep.verdict,
        "sampled_equality_check": rep.sampled_equality_check,
    }


def classification_doc(cls: L1BallClassification) -> dict:
    return {"in_set": cls.in_set, "in_iri": cls.in_iri, "in_qri": cls.in_qri,
            "finite_support": cls.finite_support, "chain_ok": cls.chain_ok}


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
