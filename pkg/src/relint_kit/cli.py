"""Command-line front end.

    relint-kit <command> [--seed N] [--out report.json] [options] <files...>

Commands operate on instance documents (see docio) and emit a JSON run
report plus one human-readable line per check.  Exit codes: 0 when every
asserted equality or implication held, 1 on a violation, 2 on input
errors.  Reports contain no floats and no filesystem paths, so identical
inputs produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import docio
from .errors import InputError, RelintKitError, TheoremViolation
from .polyhedra import HPolyhedron, h_to_v, is_empty
from .rational import format_rational, parse_rational, unit
from .relint import (
    characterization_suite,
    conic_hull_at,
    normal_cone,
    quasi_regularity_report,
    ri_membership,
    ri_point,
)
from .sampling import sample_points
from .separation import (
    Separated,
    properly_separate,
    qri_nonmembership_via_separation,
    separation_iff_ri_disjoint,
    verify_certificate,
)
from .seqspace import classify_l1ball, l1_norm
from .setmaps import (
    PLConvexFunction,
    PolyhedralMap,
    epi_quasireg_implies_dom,
    epi_relint_report,
    graph_ri_check,
    linear_image_ri_commutes,
    set_difference_ri_commutes,
)

COMMANDS = (
    "ri-check", "ri-point", "suite", "normal-cone", "separate", "qri-sep",
    "graph-ri", "epi-ri", "image-ri", "diff-ri", "seq-classify", "verify",
    "verify-corpus",
)


def _parse_point(text: str | None, what: str = "--point"):
    if text is None:
        raise InputError(f"this command requires {what}")
    try:
        return tuple(parse_rational(part) for part in text.split(","))
    except InputError as exc:
        raise InputError(f"{what}: {exc}") from None


def _parse_matrix(text: str | None):
    if text is None:
        raise InputError("this command requires --matrix (rows split by ';')")
    return tuple(_parse_point(row, "--matrix") for row in text.split(";"))


def _load(path: str) -> docio.InstanceDocument:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return docio.parse_instance(text, source=Path(path).name)


def _want(doc: docio.InstanceDocument, kind: str):
    if doc.kind != kind:
        raise InputError(f"instance {doc.id} has kind {doc.kind}, expected {kind}")
    return doc.payload


def _hpoly_docs(docs):
    return [(d.id, _want(d, "hpoly")) for d in docs]


# -- single-instance commands --------------------------------------------------


def _cmd_ri_check(args, docs):
    ident, P = _hpoly_docs(docs)[0]
    x = _parse_point(args.point)
    res = ri_membership(P, x)
    report = {
        "instance": ident,
        "point": docio.ser_vec(x),
        "in_relative_interior": res.member,
        "witness": docio.witness_doc(res.witness),
    }
    return report, 0, [f"{'ok' if res.member else 'no'} {ident} ri-membership"]


def _cmd_ri_point(args, docs):
    ident, P = _hpoly_docs(docs)[0]
    p = ri_point(P)
    ok = ri_membership(P, p).member
    report = {"instance": ident, "point": docio.ser_vec(p), "self_check": ok}
    return report, 0 if ok else 1, [f"{'ok' if ok else 'FAIL'} {ident} ri-point"]


def _cmd_suite(args, docs):
    ident, P = _hpoly_docs(docs)[0]
    x = _parse_point(args.point)
    rep = characterization_suite(P, x, set_id=ident)
    report = {"instance": ident, "suite": docio.membership_report_doc(rep)}
    return report, 0 if rep.agree else 1, [
        f"{'ok' if rep.agree else 'FAIL'} {ident} characterization-equivalence"]


def _cmd_normal_cone(args, docs):
    ident, P = _hpoly_docs(docs)[0]
    x = _parse_point(args.point)
    N = normal_cone(P, x)
    hull = conic_hull_at(P, x)
    polar_ok = all(
        sum(a * b for a, b in zip(nrm, g)) <= 0
        for nrm in N.generators
        for g in hull.generators
    )
    report = {
        "instance": ident,
        "point": docio.ser_vec(x),
        "generators": docio.ser_mat(N.generators),
        "polarity_ok": polar_ok,
    }
    return report, 0 if polar_ok else 1, [
        f"{'ok' if polar_ok else 'FAIL'} {ident} normal-cone-polarity"]


def _cmd_separate(args, docs):
    (id1, P1), (id2, P2) = _hpoly_docs(docs)[:2]
    outcome = properly_separate(P1, P2)
    if isinstance(outcome, Separated):
        valid = verify_certificate(P1, P2, outcome.certificate)
        report = {
            "instances": [id1, id2],
            "separated": True,
            "certificate": docio.certificate_doc(outcome.certificate),
            "certificate_valid": valid,
        }
        return report, 0 if valid else 1, [
            f"{'ok' if valid else 'FAIL'} {id1}|{id2} proper-separation"]
    valid = (ri_membership(P1, outcome.common_point).member
             and ri_membership(P2, outcome.common_point).member)
    report = {
        "instances": [id1, id2],
        "separated": False,
        "common_point": docio.ser_vec(outcome.common_point),
        "witness_valid": valid,
    }
    return report, 0 if valid else 1, [
        f"{'ok' if valid else 'FAIL'} {id1}|{id2} not-separable-witness"]


def _cmd_qri_sep(args, docs):
    ident, P = _hpoly_docs(docs)[0]
    x = _parse_point(args.point)
    rep = qri_nonmembership_via_separation(P, x)
    ok = rep.lemma_agrees is not False
    report = {
        "instance": ident,
        "point": docio.ser_vec(x),
        "separable": rep.nonmember,
        "certificate": None if rep.certificate is None
        else docio.certificate_doc(rep.certificate),
        "lemma_agrees": rep.lemma_agrees,
    }
    return report, 0 if ok else 1, [
        f"{'ok' if ok else 'FAIL'} {ident} qri-separation-consistency"]


def _cmd_graph_ri(args, docs):
    doc = docs[0]
    F = _want(doc, "map")
    pair = _parse_point(args.point)
    if len(pair) != F.m + F.n:
        raise InputError(f"--point needs {F.m + F.n} coordinates for this map")
    rep = graph_ri_check(F, pair[: F.m], pair[F.m:])
    ok = (rep.product_rule_holds and rep.graph_regular_inclusion_ok
          and rep.domain_regular_inclusion_ok and rep.both_regular_equality_ok)
    report = {
        "instance": doc.id,
        "x": docio.ser_vec(rep.x),
        "y": docio.ser_vec(rep.y),
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "quasi_reg_graph": rep.quasi_reg_graph,
        "quasi_reg_dom": rep.quasi_reg_dom,
        "product_rule_holds": rep.product_rule_holds,
    }
    return report, 0 if ok else 1, [
        f"{'ok' if ok else 'FAIL'} {doc.id} graph-product-rule"]


def _cmd_epi_ri(args, docs):
    doc = docs[0]
    f = _want(doc, "plfunction")
    x = _parse_point(args.point)
    if args.level is None:
        raise InputError("epi-ri requires --level")
    level = parse_rational(args.level)
    rep = epi_relint_report(f, x, level)
    ok = rep.all_asserted_hold
    report = {
        "instance": doc.id,
        "x": docio.ser_vec(rep.x),
        "level": format_rational(rep.level),
        "lhs_ri": rep.lhs_ri, "rhs_ri": rep.rhs_ri,
        "lhs_iri": rep.lhs_iri, "rhs_iri": rep.rhs_iri,
        "lhs_qri": rep.lhs_qri, "rhs_qri": rep.rhs_qri,
        "single_affine_piece": rep.single_affine_piece,
        "all_asserted_hold": ok,
    }
    return report, 0 if ok else 1, [
        f"{'ok' if ok else 'FAIL'} {doc.id} epigraph-formula"]


def _cmd_image_ri(args, docs):
    ident, P = _hpoly_docs(docs)[0]
    M = _parse_matrix(args.matrix)
    rep = linear_image_ri_commutes(M, P)
    report = {
        "instance": ident,
        "matrix": docio.ser_mat(M),
        "forward_ok": rep.forward_ok,
        "backward_ok": rep.backward_ok,
        "holds": rep.holds,
    }
    return report, 0 if rep.holds else 1, [
        f"{'ok' if rep.holds else 'FAIL'} {ident} image-commutation"]


def _cmd_diff_ri(args, docs):
    (id1, P1), (id2, P2) = _hpoly_docs(docs)[:2]
    rep = set_difference_ri_commutes(P1, P2)
    report = {
        "instances": [id1, id2],
        "forward_ok": rep.forward_ok,
        "backward_ok": rep.backward_ok,
        "holds": rep.holds,
    }
    return report, 0 if rep.holds else 1, [
        f"{'ok' if rep.holds else 'FAIL'} {id1}|{id2} difference-commutation"]


def _cmd_seq_classify(args, docs):
    doc = docs[0]
    x = _want(doc, "sequence")
    cls = classify_l1ball(x)
    report = {
        "instance": doc.id,
        "l1_norm": format_rational(l1_norm(x)),
        "classification": docio.classification_doc(cls),
    }
    return report, 0 if cls.chain_ok else 1, [
        f"{'ok' if cls.chain_ok else 'FAIL'} {doc.id} sequence-chain"]


def _cmd_verify(args, docs_unused):
    if len(args.files) != 3:
        raise InputError("verify needs: certificate.json set1.json set2.json")
    try:
        node = json.loads(Path(args.files[0]).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read certificate: {exc}") from None
    cert_node = node.get("certificate", node)
    cert = docio.parse_certificate(cert_node)
    d1, d2 = _load(args.files[1]), _load(args.files[2])
    P1, P2 = _want(d1, "hpoly"), _want(d2, "hpoly")
    ok = verify_certificate(P1, P2, cert)
    report = {"instances": [d1.id, d2.id], "certificate_valid": ok}
    return report, 0 if ok else 1, [
        f"{'ok' if ok else 'FAIL'} {d1.id}|{d2.id} certificate-revalidation"]


# -- corpus verification -------------------------------------------------------


def _corpus_paths(args) -> list[Path]:
    if args.files:
        root = Path(args.files[0])
        if not root.is_dir():
            raise InputError(f"{root} is not a directory")
        paths = sorted(root.glob("*.json"))
    else:
        base = resources.files("relint_kit").joinpath("corpus")
        paths = sorted(
            (Path(str(p)) for p in base.iterdir() if p.name.endswith(".json")),
            key=lambda p: p.name,
        )
    if not paths:
        raise InputError("no instance documents found")
    return paths


def _check_hpoly(ident: str, P: HPolyhedron, seed: int, checks, certs):
    if is_empty(P):
        checks.append((ident, "emptiness-detected", True))
        return
    points = sample_points(P, seed=seed, midpoint_cap=6, random_combos=4)[:10]
    agree = all(characterization_suite(P, x, set_id=ident).agree for x in points)
    checks.append((ident, "characterization-equivalence", agree))
    qrep = quasi_regularity_report(P, set_id=ident)
    checks.append((ident, "quasi-regularity",
                   qrep.verdict and qrep.sampled_equality_check))
    lemma_ok = all(
        qri_nonmembership_via_separation(P, x).lemma_agrees is not False
        for x in points[:4]
    )
    checks.append((ident, "qri-separation-consistency", lemma_ok))
    if P.dim >= 2:
        proj = tuple(unit(P.dim, j) for j in range(P.dim - 1))
        checks.append((ident, "image-commutation",
                       linear_image_ri_commutes(proj, P).holds))


def _check_pair(id1, P1, id2, P2, checks, certs):
    pair_id = f"{id1}|{id2}"
    rep = separation_iff_ri_disjoint(P1, P2)
    ok = rep.agree
    if rep.separated:
        ok = ok and verify_certificate(P1, P2, rep.certificate)
        certs.append({"instances": [id1, id2],
                      "certificate": docio.certificate_doc(rep.certificate)})
    else:
        ok = ok and (ri_membership(P1, rep.common_point).member
                     and ri_membership(P2, rep.common_point).member)
    checks.append((pair_id, "separation-iff-ri-disjoint", ok))


def _check_map(ident: str, F: PolyhedralMap, seed: int, checks):
    points = sample_points(F.graph, seed=seed, midpoint_cap=4, random_combos=3)[:8]
    ok = True
    for pair in points:
        rep = graph_ri_check(F, pair[: F.m], pair[F.m:])
        ok = ok and rep.product_rule_holds and rep.graph_regular_inclusion_ok \
            and rep.domain_regular_inclusion_ok and rep.both_regular_equality_ok
    checks.append((ident, "graph-product-rule", ok))


def _check_plfunction(ident: str, f: PLConvexFunction, seed: int, checks):
    xs = list(h_to_v(f.domain).points)[:4] + [ri_point(f.domain)]
    ok = True
    for x in xs:
        fx = f.value(x)
        for level in (fx, fx + 1):
            ok = ok and epi_relint_report(f, x, level).all_asserted_hold
    checks.append((ident, "epigraph-formula", ok))
    checks.append((ident, "epi-dom-regularity",
                   epi_quasireg_implies_dom(f).implication_holds))


def _cmd_verify_corpus(args, docs_unused):
    paths = _corpus_paths(args)
    docs = [docio.parse_instance(p.read_text(), source=p.name) for p in paths]
    docs.sort(key=lambda d: d.id)
    seen = set()
    for d in docs:
        if d.id in seen:
            raise InputError(f"duplicate instance id {d.id}")
        seen.add(d.id)
    checks: list[tuple[str, str, bool]] = []
    certs: list[dict] = []
    hpolys = []
    for d in docs:
        if d.kind == "hpoly":
            _check_hpoly(d.id, d.payload, args.seed, checks, certs)
            if not is_empty(d.payload):
                hpolys.append((d.id, d.payload))
        elif d.kind == "vpoly":
            checks.append((d.id, "parsed", True))
        elif d.kind == "map":
            _check_map(d.id, d.payload, args.seed, checks)
        elif d.kind == "plfunction":
            _check_plfunction(d.id, d.payload, args.seed, checks)
        elif d.kind == "sequence":
            checks.append((d.id, "sequence-chain",
                           classify_l1ball(d.payload).chain_ok))
    by_dim: dict[int, list] = {}
    for ident, P in hpolys:
        by_dim.setdefault(P.dim, []).append((ident, P))
    for dimension in sorted(by_dim):
        group = by_dim[dimension]
        for (id1, P1), (id2, P2) in zip(group, group[1:]):
            _check_pair(id1, P1, id2, P2, checks, certs)
        if len(group) >= 2:
            (id1, P1), (id2, P2) = group[0], group[1]
            rep = set_difference_ri_commutes(P1, P2)
            checks.append((f"{id1}|{id2}", "difference-commutation", rep.holds))
    checks.sort(key=lambda c: (c[0], c[1]))
    lines = [f"{'ok' if ok else 'FAIL'} {ident} {name}" for ident, name, ok in checks]
    all_ok = all(ok for _, _, ok in checks)
    report = {
        "instances": sorted(d.id for d in docs),
        "checks": [{"instance": i, "check": n, "ok": ok} for i, n, ok in checks],
        "certificates": certs,
    }
    return report, 0 if all_ok else 1, lines


_HANDLERS = {
    "ri-check": (_cmd_ri_check, 1),
    "ri-point": (_cmd_ri_point, 1),
    "suite": (_cmd_suite, 1),
    "normal-cone": (_cmd_normal_cone, 1),
    "separate": (_cmd_separate, 2),
    "qri-sep": (_cmd_qri_sep, 1),
    "graph-ri": (_cmd_graph_ri, 1),
    "epi-ri": (_cmd_epi_ri, 1),
    "image-ri": (_cmd_image_ri, 1),
    "diff-ri": (_cmd_diff_ri, 2),
    "seq-classify": (_cmd_seq_classify, 1),
    "verify": (_cmd_verify, 0),
    "verify-corpus": (_cmd_verify_corpus, 0),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relint-kit",
        description="exact relative-interior and separation certificates "
                    "for polyhedral convex sets",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("files", nargs="*", help="instance documents")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for the deterministic sampling policy")
    parser.add_argument("--out", help="write the JSON report to this file")
    parser.add_argument("--point", help="comma-separated rational coordinates")
    parser.add_argument("--level", help="epigraph level as a rational")
    parser.add_argument("--matrix", help="matrix rows 'a,b;c,d' of rationals")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler, needs = _HANDLERS[args.command]
    try:
        if args.command in ("verify", "verify-corpus"):
            docs = []
        else:
            if len(args.files) < needs:
                raise InputError(
                    f"{args.command} needs {needs} instance file(s)")
            docs = [_load(p) for p in args.files[:needs]]
        body, code, lines = handler(args, docs)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return 1
    except RelintKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {"command": args.command, "seed": args.seed}
    report.update(body)
    report["exit_code"] = code
    text = docio.dump_report(report)
    for line in lines:
        print(line)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
