"""Command-line front end.

Exit status: 0 on success, 2 on usage errors (argparse), 3 when a requested
verification fails.  Output formats: json (machine readable, bit-exact
serialization), csv (tables), pretty (human readable; floats printed at the
requested precision agree with the exact embedding to 10^-precision).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .exactnum import cyc_to_json
from .matrix import ExactMatrix, SignedSqrtMatrix
from .recoupling import (
    TheoryParams,
    admissible,
    color_set,
    delta_at,
    sixj_at,
    tet_at,
    tet_vertices,
    theta_at,
    twist_at,
    verlinde_dim,
)
from .rep_genus1 import modular_data, verify_genus1_relations
from .rep_genus2 import (
    genus2_rep,
    infinite_image_certificate,
    trace_table,
    verify_genus2_relations,
)
from .sl2_hecke import (
    eval_word,
    classify,
    hyperelliptic_image_check,
    read_graph_file,
    thurston_rep,
    verify_presentation,
)
from .spin import NotApplicable, flat_parity, orbit_counts, reducibility_report, spin_dims
from itertools import product

VERIFY_FAILED = 3


def _params(args) -> TheoryParams:
    k = getattr(args, "root", 0) or 0
    conv = getattr(args, "twist", "plus")
    return TheoryParams(args.level, root_exponent=k, twist_exponent=conv)


def _matrix_json(M: ExactMatrix) -> list:
    return [[cyc_to_json(e) for e in row] for row in M.rows]


def _sqrt_matrix_json(M: SignedSqrtMatrix) -> dict:
    return {"squares": _matrix_json(M.squares), "signs": [list(r) for r in M.signs]}


def _print_float_matrix(M, precision: int, out):
    if isinstance(M, SignedSqrtMatrix):
        import numpy as np
        arr = M.embed(precision)
        for row in arr:
            out.write("  ".join(f"{x:+.{precision}f}" for x in row) + "\n")
        return
    for row in M.rows:
        cells = []
        for e in row:
            z = e.embed(precision)
            cells.append(f"{z.real:+.{precision}f}{z.imag:+.{precision}f}j")
        out.write("  ".join(cells) + "\n")


def _emit(args, doc: dict, pretty_lines: list[str], csv_rows: list[list] | None = None) -> None:
    fmt = getattr(args, "format", "pretty")
    if fmt == "json":
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    elif fmt == "csv":
        if csv_rows is None:
            raise SystemExit("csv output not available for this command")
        w = csv.writer(sys.stdout)
        for row in csv_rows:
            w.writerow(row)
    else:
        for line in pretty_lines:
            print(line)


def _levels_list(raw: str) -> list[int]:
    return [int(x) for x in raw.split(",") if x.strip()]


# --------------------------------------------------------------------------
# subcommands

def cmd_dims(args) -> int:
    levels = _levels_list(args.levels)
    dims = [verlinde_dim(r, args.genus) for r in levels]
    doc = {"genus": args.genus,
           "dimensions": [{"level": r, "dim": d} for r, d in zip(levels, dims)]}
    rows = [["level", "dim"]] + [[r, d] for r, d in zip(levels, dims)]
    _emit(args, doc, [" ".join(str(d) for d in dims)], rows)
    return 0


def cmd_modular_data(args) -> int:
    params = _params(args)
    md = modular_data(params)
    gc = md.constants
    doc = {
        "level": params.level,
        "root": {"order": params.root_order, "exponent": params.root_exponent},
        "s_tilde": _matrix_json(md.s_tilde),
        "t_diagonal": [cyc_to_json(md.t[i, i]) for i in range(md.t.nrows)],
        "d_squared": cyc_to_json(gc.d_squared),
        "kappa_squared": cyc_to_json(gc.kappa_squared),
    }
    lines = [f"modular data at level {params.level}, "
             f"root zeta_{params.root_order}^{params.root_exponent}",
             "S~ (unnormalized):"]
    buf = io.StringIO()
    _print_float_matrix(md.s_tilde, args.precision, buf)
    lines += buf.getvalue().splitlines()
    lines.append("T diagonal:")
    lines += ["  " + "  ".join(
        f"{md.t[i, i].embed(args.precision).real:+.{args.precision}f}"
        f"{md.t[i, i].embed(args.precision).imag:+.{args.precision}f}j"
        for i in range(md.t.nrows))]
    z = gc.d_squared.embed(args.precision)
    lines.append(f"D^2 = {z.real:.{args.precision}f}")
    _emit(args, doc, lines)
    return 0


def cmd_genus2_matrices(args) -> int:
    params = _params(args)
    rep = genus2_rep(params)
    doc = {
        "level": params.level,
        "root": {"order": params.root_order, "exponent": params.root_exponent},
        "basis": [list(t) for t in rep.basis.triples],
        "t_diagonal": [cyc_to_json(rep.tdiag[i, i]) for i in range(len(rep.basis))],
        "d_squared": cyc_to_json(rep.constants.d_squared),
        "kappa_squared": cyc_to_json(rep.constants.kappa_squared),
        "positive_definite": rep.positive,
    }
    lines = [f"genus-2 matrices at level {params.level}, dim {len(rep.basis)}, "
             f"root zeta_{params.root_order}^{params.root_exponent}"]
    if args.raw or not rep.positive:
        doc["jtilde"] = _matrix_json(rep.jtilde)
        doc["j_unnormalized"] = _matrix_json(rep.j_field)
        lines.append("J~ (pairing matrix):")
        buf = io.StringIO()
        _print_float_matrix(rep.jtilde, args.precision, buf)
        lines += buf.getvalue().splitlines()
        if not rep.positive and not args.raw:
            lines.append("(form not positive definite at this root; "
                         "emitting the unnormalized matrices)")
    else:
        doc["j_unitary"] = _sqrt_matrix_json(rep.junitary)
        lines.append("J (unitary, sign * sqrt(square)):")
        buf = io.StringIO()
        _print_float_matrix(rep.junitary, args.precision, buf)
        lines += buf.getvalue().splitlines()
    lines.append("T diagonal:")
    lines.append("  " + "  ".join(
        f"{rep.tdiag[i, i].embed(args.precision).real:+.{args.precision}f}"
        f"{rep.tdiag[i, i].embed(args.precision).imag:+.{args.precision}f}j"
        for i in range(len(rep.basis))))
    _emit(args, doc, lines)
    return 0


def cmd_verify(args) -> int:
    reports = []
    if args.genus in (1, 0):
        reports.append(verify_genus1_relations(_params(args)))
    if args.genus in (2, 0):
        reports.append(verify_genus2_relations(_params(args)))
    doc = {"reports": [r.to_json() for r in reports]}
    lines = []
    for r in reports:
        lines += str(r).splitlines()
    _emit(args, doc, lines)
    return 0 if all(r.all_pass for r in reports) else VERIFY_FAILED


def cmd_trace_table(args) -> int:
    levels = _levels_list(args.levels)
    entries = trace_table(levels)
    doc = {"entries": [{
        "level": e.level,
        "root_exponent": e.root_exponent,
        "trace": cyc_to_json(e.value),
        "trace_float": [e.approx.real, e.approx.imag],
        "dim": e.dimension,
        "exceeds_dim": e.exceeds_dimension,
    } for e in entries]}
    rows = [["level", "trace", "dim", "exceeds_dim"]]
    lines = [f"trace of JTJT^-1 at A = e^(i*pi/(r+2))  (root exponent k=1)"]
    for e in entries:
        rows.append([e.level, f"{e.approx.real:.4f}", e.dimension, e.exceeds_dimension])
        lines.append(f"  r={e.level:2d}: tr = {e.approx.real:10.4f}   "
                     f"dim = {e.dimension:3d}   tr > dim: {e.exceeds_dimension}")
    _emit(args, doc, lines, rows)
    return 0


def cmd_infinite_image(args) -> int:
    params = _params(args)
    rep = infinite_image_certificate(params)
    doc = rep.to_json()
    lines = [f"infinite-image certificates at level {rep.level}: {rep.verdict}",
             f"  minimal-polynomial route: fires={rep.minpoly_fires}  ({rep.minpoly_details})",
             f"  trace route:              fires={rep.trace_fires}  ({rep.trace_details})"]
    _emit(args, doc, lines)
    return 0


def cmd_hecke_sl2(args) -> int:
    if args.word:
        M = eval_word(args.word, args.q)
        doc = {"q": args.q, "word": args.word,
               "matrix": [[cyc_to_json(e) for e in M.entries()[:2]],
                          [cyc_to_json(e) for e in M.entries()[2:]]],
               "trace": cyc_to_json(M.trace()),
               "class": classify(M)}
        emb = M.embed()
        lines = [f"word {args.word!r} at q={args.q}:",
                 f"  [{emb[0][0]:+.6f} {emb[0][1]:+.6f}]",
                 f"  [{emb[1][0]:+.6f} {emb[1][1]:+.6f}]",
                 f"  trace class: {classify(M)}"]
        _emit(args, doc, lines)
        return 0
    reports = [verify_presentation(args.q)]
    if args.hyperelliptic:
        reports.append(hyperelliptic_image_check((args.q - 1) // 2))
    doc = {"reports": [r.to_json() for r in reports]}
    lines = []
    for r in reports:
        lines += str(r).splitlines()
    _emit(args, doc, lines)
    return 0 if all(r.all_pass for r in reports) else VERIFY_FAILED


def cmd_thurston(args) -> int:
    with open(args.graph) as fh:
        data = read_graph_file(fh.read())
    rep = thurston_rep(data)
    doc = {
        "mu": rep.mu_float,
        "mu_exact": cyc_to_json(rep.mu_exact) if rep.mu_exact is not None else None,
        "residual": rep.residual,
        "ta": [list(r) for r in rep.ta_float],
        "tb": [list(r) for r in rep.tb_float],
    }
    kind = "exact (type-A path)" if rep.mu_exact is not None else \
        f"certified float (residual {rep.residual:.2e})"
    lines = [f"Perron-Frobenius mu = {rep.mu_float:.12f}  [{kind}]",
             f"T_A -> [[1, {rep.mu_float:.10f}], [0, 1]]",
             f"T_B -> [[1, 0], [{-rep.mu_float:.10f}, 1]]"]
    _emit(args, doc, lines)
    return 0


def cmd_spin_dims(args) -> int:
    r, g = args.level, args.genus
    d0 = spin_dims(r, g, 0)
    d1 = spin_dims(r, g, 1)
    n_even, n_odd = orbit_counts(g)
    doc = {"level": r, "genus": g,
           "d_even": d0, "d_odd": d1,
           "orbit_even": n_even, "orbit_odd": n_odd,
           "total": verlinde_dim(r, g),
           "flat_parity": flat_parity(g)}
    lines = [f"spin decomposition at level {r}, genus {g}:",
             f"  d^0 = {d0}  (x {n_even} even spin structures)",
             f"  d^1 = {d1}  (x {n_odd} odd spin structures)",
             f"  total {n_even * d0 + n_odd * d1} = dim V = {verlinde_dim(r, g)}",
             f"  flat-structure parity: {flat_parity(g)}"]
    rows = [["parity", "dim", "count"], [0, d0, n_even], [1, d1, n_odd]]
    try:
        rr = reducibility_report(r, g)
    except NotApplicable:
        rr = None
    if rr is not None:
        doc["reducibility"] = rr.to_json()
        lines.append(f"  invariant summands: {rr.summands} (all positive: "
                     f"{rr.reducible_with_three_summands})")
    _emit(args, doc, lines, rows)
    return 0


def cmd_coefficients(args) -> int:
    """Dump tables of Delta, theta, Theta, Tet, 6j at one level and root."""
    params = _params(args)
    r = params.level
    cs = color_set(r)
    deltas = {str(i): cyc_to_json(delta_at(params, i)) for i in cs}
    twists = {str(i): cyc_to_json(twist_at(params, i)) for i in cs}
    thetas = {}
    for t in product(cs, repeat=3):
        if admissible(r, *t):
            thetas[",".join(map(str, t))] = cyc_to_json(theta_at(params, *t))
    tets = {}
    for t in product(cs, repeat=6):
        if all(admissible(r, *v) for v in tet_vertices(*t)):
            tets[",".join(map(str, t))] = cyc_to_json(tet_at(params, *t))
    sixjs = {}
    for (i, j, k, l, m, n) in product(cs, repeat=6):
        if all(admissible(r, *v) for v in ((i, j, n), (l, m, n), (i, m, k), (j, l, k))):
            sixjs[f"{i},{j},{k},{l},{m},{n}"] = cyc_to_json(sixj_at(params, i, j, k, l, m, n))
    doc = {"level": r,
           "root": {"order": params.root_order, "exponent": params.root_exponent},
           "delta": deltas, "twist": twists, "theta": thetas,
           "tet": tets, "sixj": sixjs}
    lines = [f"coefficient tables at level {r}: {len(deltas)} deltas, "
             f"{len(thetas)} thetas, {len(tets)} tets, {len(sixjs)} 6j symbols",
             "(use --format json for the full tables)"]
    _emit(args, doc, lines)
    return 0


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tljhecke",
        description="Exact recoupling data and Hecke-group representations "
                    "on TQFT spaces of genus 1 and 2.")
    ap.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    ap.add_argument("--precision", type=int, default=6,
                    help="digits for pretty float output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="Verlinde dimensions")
    p.add_argument("--genus", type=int, default=2)
    p.add_argument("--levels", default="3,5,7,9,11,13")
    p.set_defaults(fn=cmd_dims)

    p = sub.add_parser("modular-data", help="genus-1 S and T matrices")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--root", type=int, default=0, help="Galois exponent (default unitary)")
    p.set_defaults(fn=cmd_modular_data)

    p = sub.add_parser("genus2-matrices", help="genus-2 J and T matrices")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--root", type=int, default=0)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--normalized", action="store_true", default=True,
                   help="emit the unitary normalization (default)")
    g.add_argument("--raw", action="store_true", default=False,
                   help="emit J~ and the unnormalized matrix instead")
    p.set_defaults(fn=cmd_genus2_matrices)

    p = sub.add_parser("verify", help="run the exact relation suites")
    p.add_argument("--genus", type=int, choices=(0, 1, 2), default=0,
                   help="1, 2, or 0 for both")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--twist", choices=("plus", "minus"), default="plus",
                   help="twist exponent convention: i(i+2) or i(i-2)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("trace-table", help="traces of JTJT^-1 at A=e^(i pi/(r+2))")
    p.add_argument("--levels", default="3,5,7,9,11,13")
    p.set_defaults(fn=cmd_trace_table)

    p = sub.add_parser("infinite-image", help="infinite-image certificates")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--root", type=int, default=0)
    p.set_defaults(fn=cmd_infinite_image)

    p = sub.add_parser("hecke-sl2", help="Hecke group word evaluation / presentation checks")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--word", default=None, help='e.g. "A B A^-1 J"')
    p.add_argument("--hyperelliptic", action="store_true")
    p.set_defaults(fn=cmd_hecke_sl2)

    p = sub.add_parser("thurston", help="Perron-Frobenius data of a multicurve graph file")
    p.add_argument("--graph", required=True)
    p.set_defaults(fn=cmd_thurston)

    p = sub.add_parser("spin-dims", help="spin-structure dimension decomposition")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(fn=cmd_spin_dims)

    p = sub.add_parser("coefficients", help="dump Delta/theta/Theta/Tet/6j tables")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--root", type=int, default=0)
    p.set_defaults(fn=cmd_coefficients)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
