"""Command line driver for structure files.

``homtensor SUBCOMMAND FILE [flags]`` parses a JSON structure file (see
:mod:`homtensor.io` for the schema), dispatches to the engines, prints a
human-readable summary, and optionally writes the machine-readable report
with ``--out report.json``.

Exit codes: 0 when every checked identity holds, 1 on a mathematical
failure (the report carries residual witnesses), 2 on an input error
(unparseable file, bad shapes, unknown parameters, malformed flags).

Machine-readable output is deterministic for fixed input and flags; the
``--timing`` flag adds wall-clock seconds and is the only source of
nondeterministic bytes.
"""

import argparse
import sys
import time

from fractions import Fraction as Q

from . import io as sfiles
from . import linalg as la
from .cochains import Cochain, RouteMismatch, embed_v_to_g
from .complexes import (
    DEFAULT_ITER_CAP,
    DEFAULT_MAX_DEGREE,
    ComplexError,
    SubspaceClosureError,
    TripleComplex,
    make_complex,
    validate_triple_rep,
)
from .deformation import (
    check_inf_deformation_tensor,
    check_inf_deformation_triple,
    classify_h1_T,
    classify_h2_hllt,
    tensor_mc_residual,
)
from .homotopy import (
    TwistedOps,
    VElem,
    graded_balavoine,
    hllt_mc_check,
    homotopy_mc_check,
    induced_hleib_infty,
    maurer_cartan_residual,
    maurer_cartan_terms,
    pair_element,
    triple_theta,
    triple_vdata,
    validate_hl_infty,
    validate_hl_infty_rep,
    validate_hleib_infty,
)
from .linalg import format_rational
from .structures import (
    HomLeibnizRep,
    HomLieRep,
    IllDefinedStructure,
    ValidationReport,
    adjoint_leibniz_rep,
    adjoint_rep,
    hemi_semidirect,
    induced_hom_leibniz,
    quotient_triple,
    validate_hom_lie,
    validate_hom_leibniz,
    validate_leibniz_rep,
    validate_representation,
    validate_triple,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

COMPLEX_ALIASES = {
    "tensor": "tensor", "emb": "tensor", "embedding": "tensor",
    "leibniz": "leibniz",
    "pair": "pair",
    "triple": "triple",
    "triple-coefficients": "triple_with_coefficients",
    "triple_with_coefficients": "triple_with_coefficients",
    "coefficients": "triple_with_coefficients",
}


class CliInputError(Exception):
    """Bad command line input outside the structure file itself."""


def _parse_params(pairs):
    params = {}
    for item in pairs or []:
        if "=" not in item:
            raise CliInputError(
                f"--param {item!r}: expected name=value")
        name, value = item.split("=", 1)
        params[name.strip()] = value.strip()
    return params


def _bracket_table(alg):
    rows = []
    lab = alg.space.label
    for i in range(alg.dim):
        for j in range(alg.dim):
            vec = alg.basis_bracket(i, j)
            if la.is_zero(vec):
                continue
            rows.append({
                "left": lab(i),
                "right": lab(j),
                "value": {lab(k): format_rational(x)
                          for k, x in enumerate(vec) if x != 0},
            })
    return rows


def _bracket_lines(rows, opener="[", closer="]"):
    lines = []
    for row in rows:
        terms = " + ".join(f"{coeff}*{lab}" for lab, coeff in row["value"].items())
        lines.append(f"{opener}{row['left']}, {row['right']}{closer} = {terms}")
    return lines


def _velem_flat(elem):
    flat = []
    if elem.q_part is not None:
        flat.extend(elem.q_part.flatten())
    if elem.a_part is not None:
        flat.extend(elem.a_part.flatten())
    return flat


def _report_result(command, kind, report, extra=None, lines=None):
    payload = {
        "command": command,
        "kind": kind,
        "status": "pass" if report.ok else "fail",
        "report": report.to_dict(),
    }
    if extra:
        payload.update(extra)
    out_lines = list(lines or [])
    out_lines.append(report.summary())
    return payload, out_lines, EXIT_PASS if report.ok else EXIT_FAIL


def _fail_result(command, kind, message, extra=None):
    payload = {"command": command, "kind": kind, "status": "fail",
               "message": message}
    if extra:
        payload.update(extra)
    return payload, [message], EXIT_FAIL


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_validate(sf, args):
    report = _validation_report(sf, args)
    return _report_result("validate", sf.kind, report)


def _validation_report(sf, args):
    v = sf.value
    if sf.kind == "hom_lie":
        return validate_hom_lie(v)
    if sf.kind == "hom_leibniz":
        return validate_hom_leibniz(v)
    if sf.kind == "representation":
        if isinstance(v, HomLeibnizRep):
            return validate_hom_leibniz(v.algebra).merged_with(
                validate_leibniz_rep(v))
        return validate_hom_lie(v.algebra).merged_with(
            validate_representation(v))
    if sf.kind == "embedding_tensor":
        return validate_triple(v)
    if sf.kind == "triple_rep":
        tensor, trep = v
        return validate_triple(tensor).merged_with(
            validate_triple_rep(trep, tensor))
    if sf.kind == "graded_hl":
        return validate_hl_infty(v)
    if sf.kind == "graded_hleib":
        return validate_hleib_infty(v, cross_check=args.cross_check)
    if sf.kind == "graded_rep":
        return validate_hl_infty_rep(v)
    rep, pi = v
    base = validate_hl_infty_rep(rep)
    if not base.ok:
        return base
    return base.merged_with(
        homotopy_mc_check(rep, pi, iter_cap=args.iter_cap, validate=True))


def cmd_bracket(sf, args):
    if sf.kind in ("hom_lie", "hom_leibniz"):
        rows = _bracket_table(sf.value)
        payload = {"command": "bracket", "kind": sf.kind, "status": "pass",
                   "brackets": rows}
        return payload, _bracket_lines(rows), EXIT_PASS
    if sf.kind == "representation":
        if not isinstance(sf.value, HomLieRep):
            raise CliInputError(
                "bracket: the hemi-semidirect product needs a Lie-type "
                "representation")
        rows = _bracket_table(hemi_semidirect(sf.value))
        payload = {"command": "bracket", "kind": sf.kind, "status": "pass",
                   "hemi_semidirect": rows}
        lines = ["hemi-semidirect product on g (+) V:"]
        lines += _bracket_lines(rows, "{", "}")
        return payload, lines, EXIT_PASS
    if sf.kind == "embedding_tensor":
        tensor = sf.value
        induced = _bracket_table(induced_hom_leibniz(tensor))
        hemi = _bracket_table(hemi_semidirect(tensor.rep))
        square = tensor_mc_residual(tensor.rep, tensor.t)
        report = ValidationReport("derived bracket square")
        vs = tensor.vspace
        for a in range(vs.dim):
            for b in range(vs.dim):
                report.require("tensor_square", (vs.label(a), vs.label(b)),
                               square.entry((a, b)))
        lines = ["induced bracket {u, v} = rho(Tu) v:"]
        lines += _bracket_lines(induced, "{", "}") or ["(zero)"]
        extra = {"induced_bracket": induced, "hemi_semidirect": hemi}
        return _report_result("bracket", sf.kind, report, extra, lines)
    if sf.kind == "graded_hleib":
        ops = sf.value.ops
        resid = graded_balavoine(ops, ops).scale(Q(1, 2))
        report = ValidationReport("graded self-bracket")
        for profile, multi, vec in resid.items():
            report.require("self_bracket", (len(profile),) + profile + multi,
                           vec)
        if resid.truncated:
            report.metadata["truncated"] = True
        return _report_result("bracket", sf.kind, report)
    raise CliInputError(f"bracket: unsupported file kind {sf.kind!r}")


def _complex_context(sf, complex_kind):
    v = sf.value
    if complex_kind == "tensor":
        if sf.kind == "embedding_tensor":
            return {"tensor": v}
        if sf.kind == "triple_rep":
            return {"tensor": v[0]}
        raise CliInputError(
            "cohomology --kind tensor needs an embedding_tensor file")
    if complex_kind == "leibniz":
        if sf.kind == "hom_leibniz":
            return {"rep": adjoint_leibniz_rep(v)}
        if sf.kind == "representation" and isinstance(v, HomLeibnizRep):
            return {"rep": v}
        if sf.kind == "embedding_tensor":
            return {"rep": adjoint_leibniz_rep(induced_hom_leibniz(v))}
        raise CliInputError(
            "cohomology --kind leibniz needs a hom_leibniz, Leibniz "
            "representation, or embedding_tensor file")
    if complex_kind == "pair":
        if sf.kind == "hom_lie":
            return {"rep": adjoint_rep(v)}
        if sf.kind == "representation" and isinstance(v, HomLieRep):
            return {"rep": v}
        if sf.kind == "embedding_tensor":
            return {"rep": v.rep}
        if sf.kind == "triple_rep":
            return {"rep": v[0].rep}
        raise CliInputError(
            "cohomology --kind pair needs a hom_lie, Lie representation, "
            "or embedding_tensor file")
    if complex_kind == "triple":
        if sf.kind == "embedding_tensor":
            return {"tensor": v}
        if sf.kind == "triple_rep":
            return {"tensor": v[0]}
        raise CliInputError(
            "cohomology --kind triple needs an embedding_tensor file")
    if sf.kind == "triple_rep":
        return {"tensor": v[0], "trep": v[1]}
    raise CliInputError(
        "cohomology --kind triple-coefficients needs a triple_rep file")


def _default_complex_kind(sf):
    if sf.kind == "hom_lie":
        return "pair"
    if sf.kind == "hom_leibniz":
        return "leibniz"
    if sf.kind == "representation":
        return "leibniz" if isinstance(sf.value, HomLeibnizRep) else "pair"
    if sf.kind == "embedding_tensor":
        return "tensor"
    if sf.kind == "triple_rep":
        return "triple_with_coefficients"
    raise CliInputError(
        f"cohomology: no complex is defined for file kind {sf.kind!r}")


def cmd_cohomology(sf, args):
    if args.kind is None:
        complex_kind = _default_complex_kind(sf)
    elif args.kind in COMPLEX_ALIASES:
        complex_kind = COMPLEX_ALIASES[args.kind]
    else:
        raise CliInputError(
            f"--kind {args.kind!r}: expected one of "
            f"{', '.join(sorted(set(COMPLEX_ALIASES)))}")
    comp = make_complex(complex_kind, **_complex_context(sf, complex_kind))
    top = args.degree if args.degree is not None else args.max_degree
    if top is None:
        top = DEFAULT_MAX_DEGREE
    if top < 0:
        raise CliInputError("--degree must be nonnegative")
    try:
        table = comp.cohomology_table(top, cross_check=args.cross_check)
    except (ComplexError, SubspaceClosureError, RouteMismatch) as exc:
        return _fail_result("cohomology", complex_kind, str(exc))
    if args.degree is not None:
        table = [row for row in table if row["degree"] == args.degree]
    payload = {"command": "cohomology", "kind": complex_kind,
               "file_kind": sf.kind, "status": "pass", "table": table}
    lines = [f"{complex_kind} complex ({sf.kind} file):"]
    for row in table:
        lines.append(
            f"  degree {row['degree']}: dim C = {row['cochain_dim']}, "
            f"rank d = {row['rank']}, dim H = {row['cohomology_dim']}")
    return payload, lines, EXIT_PASS


def cmd_mc_check(sf, args):
    if sf.kind == "embedding_tensor":
        tensor = sf.value
        alg = tensor.algebra
        report = hllt_mc_check(
            alg.bracket, tensor.rep.rho, tensor.t, alg.space.twist,
            tensor.vspace.twist, iter_cap=args.iter_cap,
            cross_check=args.cross_check)
        return _report_result("mc-check", sf.kind, report)
    if sf.kind == "graded_embedding":
        rep, pi = sf.value
        try:
            report = homotopy_mc_check(rep, pi, iter_cap=args.iter_cap,
                                       validate=True)
        except ComplexError as exc:
            if "needs a valid representation" in str(exc):
                return _report_result("mc-check", sf.kind,
                                      validate_hl_infty_rep(rep))
            raise
        return _report_result("mc-check", sf.kind, report)
    raise CliInputError(
        "mc-check: expected an embedding_tensor or graded_embedding file")


def cmd_deform(sf, args):
    if sf.kind != "embedding_tensor":
        raise CliInputError("deform: expected an embedding_tensor file")
    tensor = sf.value
    if args.action == "classify":
        return _deform_classify(tensor)
    if sf.deformation is None:
        raise CliInputError(
            "deform check: the file has no deformation section")
    direction = sf.deformation
    if "mu1" in direction:
        gs = tensor.algebra.space
        vs = tensor.vspace
        fg = Cochain.from_function(
            [gs, gs], gs, lambda i, j: direction["mu1"][i][j])
        fv = Cochain.from_function(
            [gs, vs], vs, lambda i, a: direction["rho1"][i][a])
        report = check_inf_deformation_triple(
            tensor, fg, fv, direction["t1"], cross_check=args.cross_check)
    else:
        report = check_inf_deformation_tensor(
            tensor, direction["t1"], cross_check=args.cross_check)
    return _report_result("deform-check", sf.kind, report)


def _cochain2_tensor(c):
    d0, d1 = c.sources[0].dim, c.sources[1].dim
    return [[[format_rational(x) for x in c.entry((i, j))]
             for j in range(d1)] for i in range(d0)]


def _fmt_matrix(mat):
    return [[format_rational(x) for x in row] for row in mat]


def _deform_classify(tensor):
    h1, cocycles1, cobs1 = classify_h1_T(tensor)
    h2, cocycles2, cobs2 = classify_h2_hllt(tensor)
    payload = {
        "command": "deform-classify",
        "kind": "embedding_tensor",
        "status": "pass",
        "tensor_degree1": {
            "h_dim": h1,
            "cocycles": [_fmt_matrix(m) for m in cocycles1],
            "coboundaries": [
                {"witness": [format_rational(x) for x in witness],
                 "matrix": _fmt_matrix(m)} for witness, m in cobs1],
        },
        "triple_degree2": {
            "h_dim": h2,
            "cocycles": [
                {"bracket": _cochain2_tensor(fg),
                 "action": _cochain2_tensor(fv),
                 "tensor": _fmt_matrix(t1)} for fg, fv, t1 in cocycles2],
            "coboundaries": [
                {"witness": {"n": _fmt_matrix(n_mat), "s": _fmt_matrix(s_mat)},
                 "image": {"bracket": _cochain2_tensor(fg),
                           "action": _cochain2_tensor(fv),
                           "tensor": _fmt_matrix(t1)}}
                for (n_mat, s_mat), (fg, fv, t1) in cobs2],
        },
    }
    lines = [
        f"tensor complex degree 1: dim H = {h1} "
        f"({len(cocycles1)} cocycles, {len(cobs1)} coboundaries)",
        f"triple complex degree 2: dim H = {h2} "
        f"({len(cocycles2)} cocycles, {len(cobs2)} coboundaries)",
    ]
    return payload, lines, EXIT_PASS


def cmd_quotient(sf, args):
    if sf.kind == "hom_leibniz":
        carrier = sf.value
    elif sf.kind == "embedding_tensor":
        carrier = induced_hom_leibniz(sf.value)
    else:
        raise CliInputError(
            "quotient: expected a hom_leibniz or embedding_tensor file")
    try:
        qt = quotient_triple(carrier)
    except IllDefinedStructure as exc:
        witness = {
            key: ([format_rational(x) for x in value]
                  if isinstance(value, list) else value)
            for key, value in exc.witness.items()}
        return _fail_result("quotient", sf.kind, str(exc),
                            {"witness": witness})
    report = validate_triple(qt.tensor)
    extra = {
        "carrier_dim": carrier.dim,
        "ideal_dim": qt.ideal.dim,
        "quotient_dim": qt.algebra.dim,
        "structure": sfiles.serialize_structure("embedding_tensor", qt.tensor),
    }
    lines = [
        f"bracket ideal dimension {qt.ideal.dim} "
        f"inside a carrier of dimension {carrier.dim}",
        f"quotient Hom-Lie algebra dimension {qt.algebra.dim}",
    ]
    return _report_result("quotient", sf.kind, report, extra, lines)


def _voronov_setup(sf, args):
    if sf.kind != "embedding_tensor":
        raise CliInputError("linfty: expected an embedding_tensor file")
    tensor = sf.value
    vd, hspace = triple_vdata(tensor.rep)
    theta = triple_theta(tensor.rep, tensor.t, hspace)
    return tensor, vd, hspace, theta


def cmd_linfty(sf, args):
    tensor, vd, hspace, theta = _voronov_setup(sf, args)
    if args.action == "check-mc":
        terms = maurer_cartan_terms(vd, theta, iter_cap=args.iter_cap)
        report = ValidationReport("L-infinity Maurer-Cartan series")
        summary = []
        for k, term in enumerate(terms, start=1):
            report.require("mc_term", (k,), _velem_flat(term))
            summary.append({"k": k, "zero": term.is_zero()})
        lines = [f"series terms computed: {len(terms)}"]
        return _report_result("linfty-check-mc", sf.kind, report,
                              {"terms": summary}, lines)
    resid = maurer_cartan_residual(vd, theta, iter_cap=args.iter_cap)
    if not resid.is_zero():
        report = ValidationReport("twist by a Maurer-Cartan element")
        report.add("maurer_cartan", ("theta",), _velem_flat(resid))
        return _report_result("linfty-twist", sf.kind, report)
    twisted = TwistedOps(vd, theta, iter_cap=args.iter_cap)
    top = args.max_degree if args.max_degree is not None else 2
    comp = TripleComplex(tensor)
    report = ValidationReport("twisted differential")
    counts = []
    for n in range(1, top + 1):
        checked = 0
        for idx, (fg, fv, p) in enumerate(comp.basis(n)):
            elem = pair_element(fg, fv, tensor.rep, hspace)
            velem = VElem(n - 2, elem,
                          None if p is None
                          else embed_v_to_g(p, tensor.rep, hspace))
            once = twisted.lk([velem])
            twice = twisted.lk([once])
            report.require("twisted_square_zero", (n, idx),
                           _velem_flat(twice))
            checked += 1
        counts.append({"degree": n, "basis_elements": checked})
    lines = [f"twisted differential applied twice on degrees 1..{top}"]
    return _report_result("linfty-twist", sf.kind, report,
                          {"degrees": counts}, lines)


def cmd_homotopy(sf, args):
    if args.action == "check":
        if sf.kind not in ("graded_hl", "graded_hleib", "graded_rep",
                           "graded_embedding"):
            raise CliInputError("homotopy check: expected a graded file")
        report = _validation_report(sf, args)
        return _report_result("homotopy-check", sf.kind, report)
    if sf.kind != "graded_embedding":
        raise CliInputError(
            "homotopy induce: expected a graded_embedding file")
    rep, pi = sf.value
    base = validate_hl_infty_rep(rep)
    if not base.ok:
        return _report_result("homotopy-induce", sf.kind, base)
    mc = homotopy_mc_check(rep, pi, iter_cap=args.iter_cap, validate=True)
    if not mc.ok:
        return _report_result("homotopy-induce", sf.kind, mc)
    induced = induced_hleib_infty(rep, pi, iter_cap=args.iter_cap,
                                  validate=False)
    report = validate_hleib_infty(induced, cross_check=args.cross_check)
    extra = {"induced": sfiles.serialize_structure("graded_hleib", induced)}
    window = induced.space.window
    lines = [
        f"induced operations on the module, degrees "
        f"{window[0]}..{window[1]}, arity cap {induced.ops.cap}",
    ]
    return _report_result("homotopy-induce", sf.kind, report, extra, lines)


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="homtensor",
        description="Exact-arithmetic checks for embedding tensors on "
                    "Hom-Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, action=None):
        p.add_argument("file", help="structure file (JSON)")
        p.add_argument("--param", action="append", metavar="NAME=VALUE",
                       help="override a declared parameter (repeatable)")
        p.add_argument("--out", metavar="PATH",
                       help="write the machine-readable report here")
        p.add_argument("--cross-check", action="store_true",
                       help="enable dual-route verification")
        p.add_argument("--iter-cap", type=int, default=DEFAULT_ITER_CAP,
                       help="bound on series iterations")
        p.add_argument("--arity-cap", type=int, default=None,
                       help="override the arity cap of graded files")
        p.add_argument("--timing", action="store_true",
                       help="include wall-clock seconds in the report")
        if action is not None:
            p.set_defaults(action=action)

    common(sub.add_parser("validate", help="run the structure validators"))
    common(sub.add_parser(
        "bracket", help="bracket tables and the derived-bracket square"))

    coh = sub.add_parser("cohomology", help="cohomology dimension table")
    common(coh)
    coh.add_argument("--kind", default=None,
                     help="complex kind: tensor|leibniz|pair|triple|"
                          "triple-coefficients")
    coh.add_argument("--degree", type=int, default=None,
                     help="report a single degree")
    coh.add_argument("--max-degree", type=int, default=None,
                     help="top degree of the table (default 4)")

    common(sub.add_parser(
        "mc-check", help="Maurer-Cartan residuals for a tensor candidate"))

    deform = sub.add_parser("deform", help="infinitesimal deformations")
    dsub = deform.add_subparsers(dest="action", required=True)
    common(dsub.add_parser(
        "check", help="check the file's deformation direction"), "check")
    common(dsub.add_parser(
        "classify", help="cocycles, coboundaries, cohomology dims"),
        "classify")

    common(sub.add_parser(
        "quotient", help="quotient a Hom-Leibniz algebra by its bracket "
                         "ideal"))

    linfty = sub.add_parser("linfty", help="Voronov L-infinity layer")
    lsub = linfty.add_subparsers(dest="action", required=True)
    common(lsub.add_parser(
        "check-mc", help="term-by-term Maurer-Cartan series"), "check-mc")
    twist = lsub.add_parser(
        "twist", help="twist by the tensor and square the differential")
    common(twist, "twist")
    twist.add_argument("--max-degree", type=int, default=None,
                       help="top degree for the square check (default 2)")

    homotopy = sub.add_parser("homotopy", help="strongly homotopy layer")
    hsub = homotopy.add_subparsers(dest="action", required=True)
    common(hsub.add_parser(
        "check", help="validate a graded structure file"), "check")
    common(hsub.add_parser(
        "induce", help="induced homotopy Leibniz structure on the module"),
        "induce")

    return parser


HANDLERS = {
    "validate": cmd_validate,
    "bracket": cmd_bracket,
    "cohomology": cmd_cohomology,
    "mc-check": cmd_mc_check,
    "deform": cmd_deform,
    "quotient": cmd_quotient,
    "linfty": cmd_linfty,
    "homotopy": cmd_homotopy,
}


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        params = _parse_params(args.param)
        sf = sfiles.parse_structure(args.file, params,
                                    arity_cap=args.arity_cap)
        payload, lines, code = HANDLERS[args.command](sf, args)
    except (CliInputError, sfiles.StructureFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ComplexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (RouteMismatch, SubspaceClosureError) as exc:
        print(f"mathematical failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.timing:
        payload["elapsed_seconds"] = round(time.perf_counter() - start, 6)
    if args.out:
        sfiles.write_structure(args.out, payload)
    for line in lines:
        print(line)
    print("PASS" if code == EXIT_PASS else "FAIL")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
