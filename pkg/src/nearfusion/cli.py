"""Command-line front end.

Exit codes: 0 for a positive result (passes, found, isomorphic), 1 for a
verified negative result, 2 for errors (bad input, out-of-scope rings).
"""

from __future__ import annotations

import argparse
import os
import json
import sys
from fractions import Fraction

from . import __version__
from .classify import (
    RationalDimension,
    RationalGlobalDimension,
    adjoint_dichotomy,
    classify_irrational,
    classify_ring,
    conjecture_report,
    enumerate_gnq,
    gnq_profile,
    nilpotency_class,
)
from .fusion import (
    ExactUnavailable,
    GradingInconsistent,
    NotGeneralizedNearGroup,
    UnknownName,
    adjoint_subring,
    catalog_get,
    catalog_names,
    construct_group_ring,
    construct_near_group,
    construct_rmn,
    dimensional_grading,
    direct_product,
    factor_pointed,
    fixed_point_subgroup,
    fpdim_basis,
    grothendieck_iso,
    invertibles,
    orbit_decomposition,
    universal_grading,
    verify_axioms,
)
from .groups import InvalidSubgroup, NotAGroup, label_tuple
from .io import (
    ParseError,
    load_ring,
    parse_datum_file,
    parse_element,
    parse_premetric_file,
    ring_to_json,
    save_ring,
)
from .premetric import IllDefined, NotIsotropic, NotQuadratic, bilinear_form, deequivariantize
from .premodular import (
    NotACharacter,
    SphericalityViolation,
    centralizes,
    s_matrix,
    symmetric_center,
    twist_constraint_on_H,
)
from .report import Report

OK, NEGATIVE, ERROR = 0, 1, 2


class Negative(Exception):
    """A check ran to completion and came out negative; carries the report."""

    def __init__(self, report: Report):
        super().__init__(report.subject)
        self.report = report


def _ints(text: str) -> list[int]:
    text = text.strip()
    if text in ("", "1", "trivial"):
        return []
    try:
        return [int(t) for t in text.replace("x", ",").split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'") from None


def _elements(text: str) -> list[tuple[int, ...]]:
    """``"(1,0);(0,1)"`` -> list of tuples; empty string -> trivial subgroup."""
    parts = [p for p in text.replace(" ", "").split(";") if p]
    return [parse_element(p) for p in parts]


def _ring_summary(ring) -> dict:
    return {"name": ring.name, "rank": ring.rank, "labels": list(ring.labels),
            "dual": [ring.labels[i] for i in ring.dual]}


def _dims_rows(ring) -> list[dict]:
    dims = fpdim_basis(ring)
    rows = []
    for x in range(ring.rank):
        row = {"basis": ring.labels[x], "numeric": f"{dims.numeric[x]:.12g}"}
        row["exact"] = str(dims.exact[x]) if dims.exact else None
        rows.append(row)
    return rows


def _grading_rows(ring, grading) -> list[dict]:
    return [{"component": i, "basis": [ring.labels[x] for x in comp]}
            for i, comp in enumerate(grading.components)]


# ------------------------------------------------------------------ commands


def cmd_verify(args) -> Report:
    ring = load_ring(args.ring, validate=False)
    rep = verify_axioms(ring)
    report = Report(ring.name or args.ring, "verify")
    report.add("ring", _ring_summary(ring))
    if rep.ok:
        report.add("verdict", "all fusion-ring axioms hold")
        return report
    report.status = "negative"
    report.add("violations", [{"axiom": v.axiom, "witness": label_tuple(v.witness), "detail": v.detail}
                              for v in rep.violations[:50]])
    report.add("verdict", f"{len(rep.violations)} violation(s): {', '.join(sorted(rep.axioms_violated()))}")
    raise Negative(report)


def cmd_analyze(args) -> Report:
    ring = load_ring(args.ring)
    report = Report(ring.name or args.ring, "analyze")
    report.add("ring", _ring_summary(ring))
    dims = fpdim_basis(ring)
    report.add("Frobenius-Perron dimensions", _dims_rows(ring))
    total = dims.total()
    report.add("global dimension", str(total) if dims.exact else f"{total:.12g} ({dims.reason})")
    G = invertibles(ring)
    report.add("invertibles", {"order": G.order, "group": G.name,
                               "elements": [ring.labels[x] for x in G.elements]})
    orbits = orbit_decomposition(ring)
    report.add("orbits", [{"orbit": [ring.labels[x] for x in o]} for o in orbits.orbits])
    ad = adjoint_subring(ring)
    report.add("adjoint subring", {"rank": ad.rank, "basis": [ring.labels[x] for x in ad.embedding]})
    U = universal_grading(ring)
    report.add(f"universal grading ({U.describe()})", _grading_rows(ring, U))
    try:
        Dg = dimensional_grading(ring)
        report.add(f"dimensional grading ({Dg.describe()})", _grading_rows(ring, Dg))
    except (ExactUnavailable, GradingInconsistent) as exc:
        report.add("dimensional grading", f"unavailable: {exc}")
    nil = nilpotency_class(ring)
    report.add("nilpotency", "NotNilpotent" if nil is None else f"class {nil}")
    fact = factor_pointed(ring)
    report.add("pointed factor", {"L": fact.L.name, "core rank": fact.core.rank,
                                  "core basis": [ring.labels[x] for x in fact.core.embedding]})
    if orbits.is_generalized_near_group:
        H = fixed_point_subgroup(ring)
        p = gnq_profile(ring)
        report.add("fixed-point subgroup", {"order": H.order, "group": H.name,
                                            "elements": [ring.labels[x] for x in H.elements]})
        report.add("generalized near-group profile", p.as_dict())
        report.add("adjoint dichotomy", "holds" if adjoint_dichotomy(ring) else "FAILS")
    else:
        report.add("generalized near-group profile", f"not a generalized near-group ({len(orbits)} orbits)")
    return report


def cmd_construct(args) -> Report:
    kind = args.kind
    if kind == "group":
        ring = construct_group_ring(args.group)
    elif kind == "near-group":
        ring = construct_near_group(args.group, args.ell)
    elif kind == "rmn":
        ring = construct_rmn(args.m, args.n)
    else:
        if len(args.rings) != 2:
            raise ParseError("product needs exactly two rings")
        ring = direct_product(load_ring(args.rings[0]), load_ring(args.rings[1]))
    rep = verify_axioms(ring)
    report = Report(ring.name, "construct")
    report.add("ring", _ring_summary(ring))
    report.add("axioms", "pass" if rep.ok else f"FAIL: {rep.violations[0]}")
    if args.out:
        save_ring(ring, args.out)
        report.add("written", args.out)
    else:
        report.add("ring file", json.dumps(ring_to_json(ring)))
    return report


def cmd_iso(args) -> Report:
    a, b = load_ring(args.a), load_ring(args.b)
    witness = grothendieck_iso(a, b)
    report = Report(f"{a.name or args.a} vs {b.name or args.b}", "iso")
    if witness is None:
        report.status = "negative"
        report.add("verdict", "not Grothendieck-isomorphic")
        raise Negative(report)
    report.add("verdict", "isomorphic")
    report.add("witness", [{"a": a.labels[i], "b": b.labels[j]} for i, j in enumerate(witness)])
    return report


def cmd_classify_irrational(args) -> Report:
    result = classify_irrational(args.kmax, args.hmax, args.gmax)
    report = Report(f"irrational classification, bounds k<={args.kmax}, |H|<={args.hmax}, |G|<={args.gmax}",
                    "classify-irrational")
    report.add("survivors", [s.as_dict() for s in result.survivors])
    branch = [r for r in result.rejections if r.stage == "branch"]
    report.add("branch rejections", [{"k": r.r // r.H_order, "H_order": r.H_order, "detail": r.detail}
                                     for r in branch])
    counts: dict[str, int] = {}
    for r in result.rejections:
        counts[r.stage] = counts.get(r.stage, 0) + 1
    report.add("rejections by stage", counts)
    report.add("verdict", f"exactly {len(result.survivors)} survivor class(es)")
    return report


def cmd_classify(args) -> Report:
    ring = load_ring(args.ring)
    v = classify_ring(ring)
    report = Report(ring.name or args.ring, "classify")
    report.add("profile", v.profile.as_dict())
    for verdict in v.verdicts:
        report.add(f"{verdict.branch} branch ({'accepted' if verdict.accepted else 'rejected'})",
                   [{"constraint": s.constraint, "values": s.values, "passed": s.passed} for s in verdict.trace])
    if v.survivor_class is None:
        report.status = "negative"
        report.add("verdict", v.note or "rejected")
        raise Negative(report)
    report.add("verdict", {"class": v.survivor_class, "pointed factor": v.L_name})
    return report


def cmd_enumerate(args) -> Report:
    if args.r is not None:
        spec = args.r
    elif args.k is not None:
        spec = (args.k, args.h if args.h is not None else 0)
    else:
        raise ParseError("give --r or --k/--h")
    H = _elements(args.subgroup)
    if args.h is None and isinstance(spec, tuple):
        from .groups import AbelianGroup
        spec = (args.k, len(AbelianGroup(args.group).closure(H)))
    rings = enumerate_gnq(args.group, H, spec, args.mult_bound)
    report = Report(f"generalized near-groups over {args.group or 'trivial'} with H = <{args.subgroup}>", "enumerate")
    report.add("rings", [{"name": r.name, "rank": r.rank,
                          "d": str(gnq_profile(r).d), "nilpotency": nilpotency_class(r)} for r in rings])
    if args.out_dir:
        from pathlib import Path
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, r in enumerate(rings):
            save_ring(r, out / f"ring_{i}.json")
        report.add("written", str(out))
    if not rings:
        report.status = "negative"
        report.add("verdict", "no rings within the bounds")
        raise Negative(report)
    report.add("verdict", f"{len(rings)} ring(s) up to Grothendieck isomorphism")
    return report


def cmd_deq(args) -> Report:
    pm = parse_premetric_file(args.premetric)
    H = _elements(args.subgroup)
    report = Report(f"de-equivariantization of {pm.group.describe()}", "deq")
    try:
        res = deequivariantize(pm, H)
    except (NotIsotropic, IllDefined) as exc:
        report.status = "negative"
        report.add("verdict", str(exc))
        raise Negative(report) from None
    out = res.premetric
    report.add("subgroup", [label_tuple(h) for h in sorted(res.subgroup)])
    report.add("quotient", out.to_json())
    form = bilinear_form(out)
    report.add("quotient bilinear form", {"matrix": [[str(x) for x in row] for row in form.matrix],
                                          "nondegenerate": form.nondegenerate})
    report.add("braided", res.braided)
    return report


def cmd_premodular_check(args) -> Report:
    ring = load_ring(args.ring)
    report = Report(f"premodular data on {ring.name or args.ring}", "premodular-check")
    try:
        datum = parse_datum_file(args.datum, ring=ring)
    except (NotACharacter, SphericalityViolation) as exc:
        report.status = "negative"
        report.add("verdict", str(exc))
        raise Negative(report) from None
    D = next((d.D for d in datum.dims if not d.is_rational), 1)
    S = s_matrix(datum)

    def show(v):
        q = v.to_quadratic(D)
        if q is not None:
            return str(q)
        z = complex(v)
        return f"{z.real:.10g}{z.imag:+.10g}i"

    report.add("conductor", str(datum.conductor))
    report.add("S-matrix", [{"": ring.labels[x], **{ring.labels[y]: show(S[x][y]) for y in range(ring.rank)}}
                            for x in range(ring.rank)])
    report.add("centralizer pairs", [{"x": ring.labels[x], "y": ring.labels[y]}
                                     for x in range(ring.rank) for y in range(x, ring.rank)
                                     if centralizes(datum, x, y)])
    center = symmetric_center(datum)
    report.add("symmetric center", [ring.labels[x] for x in center])
    contradiction = False
    if orbit_decomposition(ring).is_generalized_near_group:
        viol = twist_constraint_on_H(datum)
        report.add("twist constraint on H", [v.describe(ring) for v in viol] or "theta_h = 1 for every h in H")
        contradiction = any(v.ring_is_adjoint and v.fails_to_centralize for v in viol)
    if contradiction:
        report.status = "negative"
        report.add("verdict", "twist constraint violated on an adjoint ring")
        raise Negative(report)
    report.add("verdict", "datum is consistent")
    return report


def cmd_conjecture_report(args) -> Report:
    rep = conjecture_report(args.gmax, args.nmax)
    report = Report(f"nilpotent generalized near-groups, |G| <= {args.gmax}, noninvertibles <= {args.nmax}",
                    "conjecture-report")
    report.add("matched", [r.as_dict() for r in rep["matched"]])
    report.add("unmatched", [r.as_dict() for r in rep["unmatched"]])
    report.add("summary", {"matched": len(rep["matched"]), "unmatched": len(rep["unmatched"]),
                           "unmatched with sign form on H": sum(r.H_sign_form for r in rep["unmatched"])})
    return report


def cmd_catalog(args) -> Report:
    if args.action == "list" or args.action is None:
        report = Report("catalog", "catalog")
        rows = []
        for name in catalog_names():
            ring = catalog_get(name)
            rows.append({"name": name, "rank": ring.rank, "global dimension": str(fpdim_basis(ring).total())})
        report.add("entries", rows)
        report.add("descriptors", "ZC<n>[xC<m>...], trivial, R(m,n), R([n1,...],ell)")
        return report
    if not args.name:
        raise ParseError("catalog show needs a name")
    ring = catalog_get(args.name)
    report = Report(ring.name or args.name, "catalog")
    report.add("ring", _ring_summary(ring))
    report.add("Frobenius-Perron dimensions", _dims_rows(ring))
    report.add("ring file", json.dumps(ring_to_json(ring)))
    return report


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="nearfusion", description="Fusion rings and generalized near-group tools.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="check the fusion-ring axioms")
    s.add_argument("ring", help="ring file or catalog name")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("analyze", parents=[common], help="dimensions, groups, gradings and profile")
    s.add_argument("ring")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("construct", parents=[common], help="build a ring")
    s.add_argument("kind", choices=("group", "near-group", "rmn", "product"))
    s.add_argument("rings", nargs="*", help="two rings for 'product'")
    s.add_argument("--group", type=_ints, default=[], help="invariant factors, e.g. 2,2")
    s.add_argument("--ell", type=int, default=0)
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--out", help="write the ring file here")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("iso", parents=[common], help="Grothendieck isomorphism test")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("classify-irrational", parents=[common], help="run the irrational classification")
    s.add_argument("--kmax", type=int, default=8)
    s.add_argument("--hmax", type=int, default=8)
    s.add_argument("--gmax", type=int, default=16)
    s.set_defaults(func=cmd_classify_irrational)

    s = sub.add_parser("classify", parents=[common], help="classify one generalized near-group ring")
    s.add_argument("ring")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("enumerate", parents=[common], help="enumerate generalized near-group rings")
    s.add_argument("--group", type=_ints, default=[])
    s.add_argument("--subgroup", default="", help="generators, e.g. '(1,0);(0,1)'")
    s.add_argument("--k", type=int)
    s.add_argument("--h", type=int)
    s.add_argument("--r", type=int)
    s.add_argument("--mult-bound", type=int, default=1)
    s.add_argument("--out-dir")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("deq", parents=[common], help="de-equivariantize a pre-metric group")
    s.add_argument("premetric", help="pre-metric group file")
    s.add_argument("--subgroup", required=True, help="generators, e.g. '(2)'")
    s.set_defaults(func=cmd_deq)

    s = sub.add_parser("premodular-check", parents=[common], help="S-matrix, centralizers and twist constraints")
    s.add_argument("ring")
    s.add_argument("datum", help="datum file")
    s.set_defaults(func=cmd_premodular_check)

    s = sub.add_parser("conjecture-report", parents=[common], help="test nilpotent rings against R(m,n) x ZK")
    s.add_argument("--gmax", type=int, default=8)
    s.add_argument("--nmax", type=int, default=4)
    s.set_defaults(func=cmd_conjecture_report)

    s = sub.add_parser("catalog", parents=[common], help="list or show catalog rings")
    s.add_argument("action", nargs="?", choices=("list", "show"), default="list")
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_catalog)
    return p


_USER_ERRORS = (
    ParseError, UnknownName, NotAGroup, InvalidSubgroup, NotGeneralizedNearGroup, RationalGlobalDimension,
    RationalDimension, NotQuadratic, ExactUnavailable, ValueError, KeyError,
)


def run_command(argv=None, out=None) -> tuple[int, Report]:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    try:
        report, code = args.func(args), OK
    except Negative as neg:
        report, code = neg.report, NEGATIVE
    except _USER_ERRORS as exc:
        report = Report(args.command, args.command, "error")
        report.add("error", f"{type(exc).__name__}: {exc}")
        code = ERROR
    print(report.render(fmt), file=out)
    return code, report


def main(argv=None) -> int:
    try:
        code, _ = run_command(argv)
        sys.stdout.flush()
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    except BrokenPipeError:
        # output closed early, e.g. piped into head
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return OK
    return code


if __name__ == "__main__":
    sys.exit(main())
