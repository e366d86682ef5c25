"""Command-line surface: reports on validation, cohomology, Poisson
structures, spectral pages, and degeneration, in table, JSON, or CSV form.

Exit codes: 0 success, 1 algebra or bivector validation failure,
2 parse or usage error, 3 internal invariant violation (always a bug).
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .calculus import CalculusContext
from .catalog import catalog_load, load_file
from .errors import (InternalInvariantError, NilpoissonError, UsageError,
                     ValidationError)
from .exact_linalg import LinalgError
from .exterior import MixedElement
from .homology import (BigradedComplex, d_bicomplex_crosscheck,
                       degeneration_verdict, dolbeault_table)
from .lambda_parser import expr_from_element, parse_lambda
from .lie_structure import validate
from .poisson import (holomorphic_bivector_space, is_holomorphic_poisson,
                      theorem2_lambda)

COMMANDS = ("validate", "info", "cohomology", "poisson", "spectral",
            "degeneration", "crosscheck")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilpoisson",
        description="Exact invariant cohomology and Poisson spectral "
                    "sequences of nilpotent Lie algebras with complex "
                    "structure.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (
        ("validate", "check a presentation and report each property"),
        ("info", "dimensions, frame, and grading of an algebra"),
        ("cohomology", "column cohomology dimensions and representatives"),
        ("poisson", "holomorphic Poisson bivectors and their flags"),
        ("spectral", "page dimensions and differentials"),
        ("degeneration", "page-two degeneration verdict"),
        ("crosscheck", "two-path total-cohomology comparison"),
    ):
        cmd = sub.add_parser(name, help=text)
        cmd.add_argument("--algebra", metavar="NAME[:PARAM]",
                         help="catalog entry, e.g. tower:4, torus:2, kodaira")
        cmd.add_argument("--file", metavar="PATH",
                         help="JSON presentation file instead of --algebra")
        cmd.add_argument("--lambda", dest="lambda_expr", metavar="EXPR",
                         help="bivector expression, e.g. '2 v1^v4 - v2^v3'")
        cmd.add_argument("--theorem2", action="store_true",
                         help="use the constructed central-wedge bivector")
        cmd.add_argument("--coef", type=int, metavar="L",
                         help="vector-coefficient degree")
        cmd.add_argument("--pages", type=int, metavar="R",
                         help="number of pages to report")
        cmd.add_argument("--format", dest="fmt", default="table",
                         choices=("table", "json", "csv"))
        cmd.add_argument("--out", metavar="PATH",
                         help="write the report to a file instead of stdout")
    return parser


def _load_presentation(args):
    if args.algebra and args.file:
        raise UsageError("give either --algebra or --file, not both")
    if args.algebra:
        return catalog_load(args.algebra)
    if args.file:
        return load_file(args.file)
    raise UsageError("an algebra is required: --algebra or --file")


def _resolve_lambda(args, ctx):
    if args.lambda_expr is not None and args.theorem2:
        raise UsageError("give either --lambda or --theorem2, not both")
    if args.theorem2:
        return theorem2_lambda(ctx).bivector
    if args.lambda_expr is not None:
        return parse_lambda(args.lambda_expr).bind(ctx.n)
    return MixedElement()


def _render_rows(headers, rows) -> str:
    cells = [headers] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(headers))]
    lines = []
    for idx, row in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if idx == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _blank_report(presentation, report=None):
    report = report if report is not None else validate(presentation)
    return {
        "algebra": {
            "name": presentation.name,
            "dim": presentation.dim,
            "n": presentation.dim // 2,
            "step": report.step,
            "abelian": report.abelian,
            "valid": report.ok,
        },
        "lambda": None,
        "e_pages": None,
        "verdict": None,
        "cohomology": None,
        "timings": {},
    }


def _dolbeault_payload(table, n, coef=None):
    payload = {}
    for (p, q), cell in sorted(table.items()):
        if coef is not None and p != coef:
            continue
        payload[f"{p},{q}"] = {
            "dim": cell.dim,
            "representatives": [str(e) for e in cell.representatives()],
        }
    return payload


def _page_payload(pages):
    out = {}
    for page in pages:
        dims = {f"{p},{q}": d for (p, q), d in sorted(page.dims.items()) if d}
        out[str(page.r)] = dims
    return out


def _human_verdict(verdict: str) -> str:
    if verdict == "degenerates-at-E2":
        return "degenerates at the second page"
    inner = verdict[len("fails-at-("):-1]
    r, p, q = inner.split(",")
    return f"fails at r={r} (p={p},q={q})"


def _bivector_text(e) -> str:
    """Echo a (2,0) element in the same grammar --lambda accepts."""
    return str(expr_from_element(e))


def cmd_validate(args):
    presentation = _load_presentation(args)
    report = validate(presentation)
    doc = _blank_report(presentation, report)
    doc["cohomology"] = None
    doc["details"] = {
        "dim_even": report.dim_even,
        "indices_ok": report.indices_ok,
        "antisymmetry_ok": report.antisymmetry_ok,
        "jacobi_ok": report.jacobi_ok,
        "j_square_ok": report.j_square_ok,
        "nilpotent": report.nilpotent,
        "step": report.step,
        "integrable": report.integrable,
        "abelian": report.abelian,
        "errors": list(report.errors),
    }
    text = f"algebra: {presentation.name}\n" + report.summary()
    return doc, text, None, 0 if report.ok else 1


def cmd_info(args):
    presentation = _load_presentation(args)
    t0 = time.perf_counter()
    ctx = CalculusContext(presentation)
    doc = _blank_report(presentation)
    doc["timings"]["context"] = round(time.perf_counter() - t0, 6)
    g = ctx.grading
    frame_lines = []
    names = [f"e{k}" for k in range(1, presentation.dim + 1)]
    for idx, row in enumerate(ctx.frame.v_rows, start=1):
        parts = [f"({c}) {name}" for c, name in zip(row, names) if c]
        frame_lines.append(f"v{idx} = " + " + ".join(parts))
    bracket_pairs = sorted(presentation.brackets)
    doc["details"] = {
        "frame": frame_lines,
        "step": g.step,
        "center_dim_10": g.c10.dim,
        "complement_dims": {str(k): sub.dim for k, sub in sorted(g.t10.items())},
        "bracket_pairs": len(bracket_pairs),
    }
    rows = [["dim", presentation.dim], ["complex dim", ctx.n],
            ["step", g.step], ["abelian", ctx.abelian],
            ["central (1,0) dim", g.c10.dim],
            ["bracket pairs", len(bracket_pairs)]]
    text = f"algebra: {presentation.name}\n" + _render_rows(
        ["property", "value"], rows)
    text += "\n\nframe:\n  " + "\n  ".join(frame_lines)
    text += "\ngraded complement dims: " + ", ".join(
        f"t{k}={sub.dim}" for k, sub in sorted(g.t10.items()))
    return doc, text, None, 0


def cmd_cohomology(args):
    presentation = _load_presentation(args)
    t0 = time.perf_counter()
    ctx = CalculusContext(presentation)
    bc = BigradedComplex(ctx)
    table = dolbeault_table(bc)
    elapsed = time.perf_counter() - t0
    if args.coef is not None and not (0 <= args.coef <= ctx.n):
        raise UsageError(f"--coef must be within 0..{ctx.n}")
    doc = _blank_report(presentation)
    doc["cohomology"] = _dolbeault_payload(table, ctx.n, args.coef)
    doc["timings"]["compute"] = round(elapsed, 6)
    rows = []
    csv_rows = [("p", "q", "dim")]
    for (p, q), cell in sorted(table.items()):
        if args.coef is not None and p != args.coef:
            continue
        reps = ", ".join(str(e) for e in cell.representatives())
        rows.append([p, q, cell.dim, reps])
        csv_rows.append((p, q, cell.dim))
    text = (f"algebra: {presentation.name}\n"
            + _render_rows(["p", "q", "dim", "representatives"], rows))
    return doc, text, csv_rows, 0


def cmd_poisson(args):
    presentation = _load_presentation(args)
    t0 = time.perf_counter()
    ctx = CalculusContext(presentation)
    space = holomorphic_bivector_space(ctx)
    doc = _blank_report(presentation)
    details = {
        "closed_dim": space.dim,
        "basis": [_bivector_text(c.bivector) for c in space.candidates],
        "candidates": [
            {
                "bivector": _bivector_text(c.bivector),
                "dbar_closed": c.dbar_closed,
                "schouten_square_zero": c.schouten_square_zero,
                "ad_identically_zero": c.ad_identically_zero,
            }
            for c in space.candidates
        ],
    }
    rows = [[_bivector_text(c.bivector), c.dbar_closed, c.schouten_square_zero,
             c.ad_identically_zero] for c in space.candidates]
    lam = _resolve_lambda(args, ctx)
    if lam:
        cand = is_holomorphic_poisson(ctx, lam)
        doc["lambda"] = str(expr_from_element(cand.bivector))
        details["given"] = {
            "bivector": _bivector_text(cand.bivector),
            "dbar_closed": cand.dbar_closed,
            "schouten_square_zero": cand.schouten_square_zero,
            "ad_identically_zero": cand.ad_identically_zero,
            "holomorphic_poisson": cand.holomorphic_poisson,
        }
        rows.append([_bivector_text(cand.bivector), cand.dbar_closed,
                     cand.schouten_square_zero, cand.ad_identically_zero])
    doc["details"] = details
    doc["timings"]["compute"] = round(time.perf_counter() - t0, 6)
    text = (f"algebra: {presentation.name}\n"
            f"closed (2,0) bivector space dimension: {space.dim}\n"
            + _render_rows(
                ["bivector", "dbar closed", "[.,.] = 0", "ad = 0"], rows))
    return doc, text, None, 0


def _spectral_common(args, want_pages):
    presentation = _load_presentation(args)
    timings = {}
    t0 = time.perf_counter()
    ctx = CalculusContext(presentation)
    lam = _resolve_lambda(args, ctx)
    timings["context"] = round(time.perf_counter() - t0, 6)
    t0 = time.perf_counter()
    bc = BigradedComplex(ctx, lam)
    timings["assemble"] = round(time.perf_counter() - t0, 6)
    t0 = time.perf_counter()
    verdict = degeneration_verdict(bc, r_max=want_pages)
    timings["pages"] = round(time.perf_counter() - t0, 6)
    return presentation, ctx, lam, bc, verdict, timings


def cmd_spectral(args):
    if args.pages is not None and args.pages < 1:
        raise UsageError("--pages must be at least 1")
    presentation, ctx, lam, bc, verdict, timings = _spectral_common(
        args, args.pages)
    shown = verdict.pages.pages
    if args.pages is not None:
        shown = shown[:args.pages]
    doc = _blank_report(presentation)
    doc["lambda"] = str(expr_from_element(lam)) if lam else "0"
    doc["e_pages"] = _page_payload(shown)
    doc["verdict"] = verdict.verdict
    doc["timings"] = timings
    rows = []
    csv_rows = [("r", "p", "q", "dim")]
    for page in shown:
        for (p, q), d in sorted(page.dims.items()):
            if d:
                rows.append([page.r, p, q, d])
            csv_rows.append((page.r, p, q, d))
    text = (f"algebra: {presentation.name}\n"
            f"lambda: {doc['lambda']}\n"
            + _render_rows(["r", "p", "q", "dim"], rows)
            + f"\nverdict: {_human_verdict(verdict.verdict)}")
    return doc, text, csv_rows, 0


def cmd_degeneration(args):
    presentation, ctx, lam, bc, verdict, timings = _spectral_common(
        args, args.pages)
    doc = _blank_report(presentation)
    doc["lambda"] = str(expr_from_element(lam)) if lam else "0"
    doc["e_pages"] = _page_payload(verdict.pages.pages)
    doc["verdict"] = verdict.verdict
    doc["timings"] = timings
    doc["cohomology"] = {str(k): d for k, d in sorted(verdict.hk_dims.items())}
    details = {}
    if verdict.failure is not None:
        details["failure"] = list(verdict.failure)
        details["witness_source"] = str(verdict.witness_source)
        details["witness_image"] = str(verdict.witness_image)
    doc["details"] = details
    csv_rows = [("r", "p", "q", "dim")]
    for page in verdict.pages.pages:
        for (p, q), d in sorted(page.dims.items()):
            csv_rows.append((page.r, p, q, d))
    lines = [f"algebra: {presentation.name}",
             f"lambda: {doc['lambda']}",
             f"verdict: {verdict.verdict}"]
    if verdict.failure is not None:
        r, p, q = verdict.failure
        lines.append(f"first nonzero differential: d_{r} at (p={p},q={q})")
        lines.append(f"  source class: {verdict.witness_source}")
        lines.append(f"  image class:  {verdict.witness_image}")
    lines.append("total cohomology dims: "
                 + " ".join(f"H^{k}={d}" for k, d in sorted(verdict.hk_dims.items())))
    return doc, "\n".join(lines), csv_rows, 0


def cmd_crosscheck(args):
    presentation = _load_presentation(args)
    t0 = time.perf_counter()
    ctx = CalculusContext(presentation)
    ell = args.coef if args.coef is not None else 1
    report = d_bicomplex_crosscheck(ctx, ell)
    if not report.match:
        raise InternalInvariantError(
            "bicomplex total cohomology disagrees with the direct computation")
    doc = _blank_report(presentation)
    doc["cohomology"] = {str(m): report.direct_dims[m]
                         for m in sorted(report.direct_dims)}
    doc["details"] = {
        "coefficient_degree": report.ell,
        "central_dim": report.c_dim,
        "total_dims": {str(m): d for m, d in sorted(report.total_dims.items())},
        "direct_dims": {str(m): d for m, d in sorted(report.direct_dims.items())},
        "identities_ok": report.identities_ok,
        "match": report.match,
    }
    doc["timings"]["compute"] = round(time.perf_counter() - t0, 6)
    rows = [[m, report.total_dims[m], report.direct_dims[m]]
            for m in sorted(report.total_dims)]
    text = (f"algebra: {presentation.name}\n"
            f"coefficient degree: {ell}\n"
            + _render_rows(["m", "total", "direct"], rows)
            + f"\nidentities: {report.identities_ok}  match: {report.match}")
    return doc, text, None, 0


_HANDLERS = {
    "validate": cmd_validate,
    "info": cmd_info,
    "cohomology": cmd_cohomology,
    "poisson": cmd_poisson,
    "spectral": cmd_spectral,
    "degeneration": cmd_degeneration,
    "crosscheck": cmd_crosscheck,
}


def _emit(args, doc, text, csv_rows) -> None:
    if args.fmt == "json":
        payload = json.dumps(doc, indent=2, sort_keys=True)
    elif args.fmt == "csv":
        if csv_rows is None:
            raise UsageError(f"csv output is not defined for {args.command}")
        payload = "\n".join(",".join(str(c) for c in row) for row in csv_rows)
    else:
        payload = text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return int(ex.code or 0)
    try:
        doc, text, csv_rows, code = _HANDLERS[args.command](args)
        _emit(args, doc, text, csv_rows)
        return code
    except UsageError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    except (InternalInvariantError, LinalgError) as ex:
        print(f"internal invariant violated: {ex}", file=sys.stderr)
        return 3
    except ValidationError as ex:
        print(f"validation failure: {ex}", file=sys.stderr)
        return 1
    except NilpoissonError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
