"""Command-line front end.

Five subcommands: verify a certificate, run a construction, compute bound
reports, compute fractional estimates / the duality report, and query the
exact combinatorial oracles.  Each invocation prints exactly one JSON
document on stdout (human-readable notes go to stderr) and exits with:

    0  success                2  input error (parse failure, bad arguments)
    1  verification failed    3  search exhausted
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .fitmatrices import (
    BetaSearchExhausted,
    direct_sum_fits,
    fit_from_json,
    fit_to_fosr,
    fit_to_json,
    fosr_to_fit,
    normalize_weak_fit,
    r_fits,
    union_combine,
    weakly_r_fits,
)
from .graphs import (
    Graph,
    GraphFormatError,
    cut_vertex_components,
    graph_to_json,
    parse_graph,
)
from .invariants import (
    alpha,
    b_fold_coloring,
    chi_f,
    chi_with_coloring,
    is_chordal,
    max_clique,
    max_independent_set,
    omega,
)
from .linalg import DEFAULT_TOL, is_psd, rank
from .parameters import (
    SearchBudget,
    cut_vertex_mr_plus,
    duality_report,
    mr_f_estimate,
    mrr_bounds,
    xi_f_estimate,
    xi_r_bounds,
)
from .representations import (
    FoldedFaithfulRepresentation,
    ProjectiveRepresentation,
    SubspaceRepresentation,
    canonical_faithful_rep,
    coloring_to_osr,
    combine_fold,
    faithful_from_pair,
    fixture_p4_fosr,
    fixture_p4_osr,
    glue_clique_sum,
    pad_disjoint_union,
    rep_from_json,
    rep_to_json,
    stack_union,
    standardize_clique,
    verify as verify_rep,
)

OK, INVALID, INPUT_ERROR, EXHAUSTED = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(payload: dict, out_path: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load_graph(path: str, fmt: str | None) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read graph file: {exc}") from None
    if fmt is None:
        fmt = "edge-list-json" if text.lstrip().startswith("{") else "graph6"
    try:
        return parse_graph(text, fmt)
    except GraphFormatError as exc:
        raise InputError(f"graph parse failure: {exc}") from None


def _load_cert(path: str):
    """A certificate file: a representation or a fit matrix."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read certificate file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"certificate is not valid JSON: {exc}") from None
    try:
        if isinstance(doc, dict) and doc.get("kind") in ("fit", "weak-fit"):
            return fit_from_json(doc)
        if isinstance(doc, dict) and "matrix" in doc and "kind" not in doc:
            return fit_from_json(doc)
        return rep_from_json(doc)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"certificate decode failure: {exc}") from None


def _with_graph(cert, g: Graph):
    """Re-target a certificate at a different graph (for cross-checking)."""
    if isinstance(cert, SubspaceRepresentation):
        return SubspaceRepresentation(g, cert.d, cert.r, cert.assignment, cert.faithful)
    if isinstance(cert, ProjectiveRepresentation):
        return ProjectiveRepresentation(g, cert.d, cert.r, cert.assignment, cert.faithful)
    raise InputError("cannot re-target this certificate kind at another graph")


# -- subcommands -------------------------------------------------------------


def _cmd_verify(args) -> int:
    cert = _load_cert(args.cert)
    if isinstance(cert, tuple):  # fit matrix
        fm, weak = cert
        if args.graph:
            from .fitmatrices import FitMatrix

            fm = FitMatrix(_load_graph(args.graph, args.format), fm.r, fm.matrix)
        report = weakly_r_fits(fm) if weak else r_fits(fm)
        psd = is_psd(fm.matrix)
        valid = report.valid and psd
        payload = {
            "status": "ok" if valid else "invalid",
            "report": report.to_json(),
            "psd": psd,
            "rank": rank(fm.matrix),
        }
        _emit(payload, args.out)
        return OK if valid else INVALID
    if args.graph:
        g = _load_graph(args.graph, args.format)
        if isinstance(cert, FoldedFaithfulRepresentation):
            raise InputError("folded certificates embed their graph; omit --graph")
        cert = _with_graph(cert, g)
    report = verify_rep(cert)
    payload = {"status": "ok" if report.valid else "invalid", "report": report.to_json()}
    _emit(payload, args.out)
    return OK if report.valid else INVALID


def _budget(args) -> SearchBudget:
    return SearchBudget(restarts=args.restarts, iters=args.iters, seed=args.seed)


def _require(cond: bool, msg: str):
    if not cond:
        raise InputError(msg)


def _cmd_construct(args) -> int:
    recipe = args.recipe
    certs = [_load_cert(p) for p in args.cert or []]
    reps = [c for c in certs if not isinstance(c, tuple)]
    fits = [c[0] for c in certs if isinstance(c, tuple)]
    g = _load_graph(args.graph, args.format) if args.graph else None

    if recipe == "combine-fold":
        _require(len(reps) == 2, "combine-fold needs two representation certificates")
        result = combine_fold(reps[0], reps[1])
    elif recipe == "pad-disjoint":
        _require(len(reps) >= 1, "pad-disjoint needs at least one representation")
        result = pad_disjoint_union(reps)
    elif recipe == "stack-union":
        _require(len(reps) == 2 and g is not None,
                 "stack-union needs two representations and --graph")
        result = stack_union(reps[0], reps[1], g)
    elif recipe == "standardize-clique":
        _require(len(reps) == 1 and args.clique is not None,
                 "standardize-clique needs one representation and --clique")
        result = standardize_clique(reps[0], args.clique.split(","))
    elif recipe == "glue-clique-sum":
        _require(len(reps) == 2 and args.clique is not None,
                 "glue-clique-sum needs two representations and --clique")
        clique = [c for c in args.clique.split(",") if c]
        result = glue_clique_sum(reps[0], reps[1], clique)
    elif recipe == "coloring-osr":
        _require(g is not None, "coloring-osr needs --graph")
        _, col = chi_with_coloring(g)
        result = coloring_to_osr(g, col, args.r)
    elif recipe == "faithful-from-pair":
        _require(len(reps) == 2, "faithful-from-pair needs two projective certificates")
        result = faithful_from_pair(reps[0], reps[1], args.eps)
    elif recipe == "fixture-p4-fosr":
        result = fixture_p4_fosr(args.r)
    elif recipe == "fixture-p4-osr":
        result = fixture_p4_osr(args.r)
    elif recipe == "canonical-faithful":
        _require(g is not None, "canonical-faithful needs --graph")
        result = canonical_faithful_rep(g)
    elif recipe == "fosr-to-fit":
        _require(len(reps) == 1, "fosr-to-fit needs one faithful representation")
        fm = fosr_to_fit(reps[0])
        payload = {"status": "ok", "certificate": fit_to_json(fm), "rank": rank(fm.matrix)}
        _emit(payload, args.out)
        return OK
    elif recipe == "fit-to-fosr":
        _require(len(fits) == 1, "fit-to-fosr needs one fit-matrix certificate")
        result = fit_to_fosr(fits[0])
    elif recipe == "normalize-weak-fit":
        _require(len(fits) == 1, "normalize-weak-fit needs one fit-matrix certificate")
        fm = normalize_weak_fit(fits[0])
        payload = {"status": "ok", "certificate": fit_to_json(fm), "rank": rank(fm.matrix)}
        _emit(payload, args.out)
        return OK
    elif recipe == "union-combine":
        _require(len(fits) == 2 and g is not None,
                 "union-combine needs two fit matrices and --graph")
        _require(args.seed is not None, "union-combine needs --seed")
        fm = union_combine(fits[0], fits[1], g, args.seed)
        payload = {
            "status": "ok",
            "certificate": fit_to_json(fm, weak=True),
            "rank": rank(fm.matrix),
        }
        _emit(payload, args.out)
        return OK
    elif recipe == "direct-sum-fits":
        _require(len(fits) >= 1, "direct-sum-fits needs fit-matrix certificates")
        fm = direct_sum_fits(fits)
        payload = {"status": "ok", "certificate": fit_to_json(fm), "rank": rank(fm.matrix)}
        _emit(payload, args.out)
        return OK
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown recipe {recipe!r}")

    report = verify_rep(result)
    payload = {
        "status": "ok" if report.valid else "invalid",
        "certificate": rep_to_json(result),
        "report": report.to_json(),
    }
    _emit(payload, args.out)
    return OK if report.valid else INVALID


def _cmd_bounds(args) -> int:
    g = _load_graph(args.graph, args.format)
    budget = _budget(args)
    if args.parameter == "xi-r":
        report = xi_r_bounds(g, args.r, budget)
    else:
        report = mrr_bounds(g, args.r, budget)
    _note(f"{args.parameter} r={args.r}: [{report.lower}, {report.upper}]"
          f"{' exact' if report.exact else ''}")
    _emit({"status": "ok", **report.to_json()}, args.out)
    return OK


def _cmd_estimate(args) -> int:
    g = _load_graph(args.graph, args.format)
    budget = _budget(args)
    if args.parameter == "duality":
        report = duality_report(g, args.rmax, budget, eps=args.eps)
        _emit({"status": "ok", **report.to_json()}, args.out)
        return OK
    if args.parameter == "xi-f":
        seq = xi_f_estimate(g, args.rmax, budget)
    else:
        seq = mr_f_estimate(g, args.rmax, budget)
    lo, hi = seq.bracket()
    _note(f"{args.parameter}: bracket [{lo}, {hi}]")
    _emit({"status": "ok", **seq.to_json()}, args.out)
    return OK


def _cmd_oracle(args) -> int:
    g = _load_graph(args.graph, args.format)
    q = args.quantity
    if q in ("alpha", "omega", "chi") and g.n > 24:
        raise InputError(f"{q} oracle is exact and guarded at n <= 24 (got n = {g.n})")
    if q == "chi-f" and g.n > 16:
        raise InputError(f"chi-f oracle is guarded at n <= 16 (got n = {g.n})")
    if q == "alpha":
        witness = max_independent_set(g)
        payload = {"value": alpha(g), "witness": list(witness)}
    elif q == "omega":
        witness = max_clique(g)
        payload = {"value": omega(g), "witness": list(witness)}
    elif q == "chi":
        value, col = chi_with_coloring(g)
        payload = {
            "value": value,
            "witness": {v: sorted(col.assignment[v]) for v in g.vertices},
        }
    elif q == "chi-f":
        value = chi_f(g)
        payload = {"value": f"{value.numerator}/{value.denominator}"}
    elif q == "chi-b":
        _require(args.b is not None and args.c is not None, "chi-b needs --b and --c")
        col = b_fold_coloring(g, args.c, args.b)
        payload = {
            "value": col is not None,
            "witness": None if col is None else
            {v: sorted(col.assignment[v]) for v in g.vertices},
        }
    elif q == "chordal":
        rep = is_chordal(g)
        payload = {
            "value": rep.chordal,
            "witness": list(rep.elimination_ordering) if rep.chordal else list(rep.hole or ()),
        }
    elif q == "cut-components":
        _require(args.vertex is not None, "cut-components needs --vertex")
        try:
            comps = cut_vertex_components(g, args.vertex)
        except GraphFormatError as exc:
            raise InputError(str(exc)) from None
        payload = {"value": [graph_to_json(c) for c in comps]}
    elif q == "cut-vertex-mr":
        _require(args.vertex is not None, "cut-vertex-mr needs --vertex")
        try:
            report = cut_vertex_mr_plus(g, args.vertex, args.r, _budget(args))
        except GraphFormatError as exc:
            raise InputError(str(exc)) from None
        _emit({"status": "ok", **report.to_json()}, args.out)
        return OK
    else:  # pragma: no cover
        raise InputError(f"unknown quantity {q!r}")
    _emit({"status": "ok", "quantity": q, "graph": graph_to_json(g), **payload}, args.out)
    return OK


# -- argument parsing ----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracrank",
        description="Certificates and bounds for the r-fold rank parameters of graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--graph", help="graph file (edge-list JSON or graph6)")
        p.add_argument("--format", choices=["edge-list-json", "graph6"],
                       help="graph file format (default: sniffed)")
        p.add_argument("--out", help="also write the JSON payload to this path")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized steps")
        p.add_argument("--restarts", type=int, default=32)
        p.add_argument("--iters", type=int, default=2000)

    p = sub.add_parser("verify", help="verify a certificate file")
    common(p)
    p.add_argument("--cert", required=True, help="certificate JSON file")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("construct", help="run a certificate construction")
    common(p)
    p.add_argument("recipe", choices=[
        "combine-fold", "pad-disjoint", "stack-union", "standardize-clique",
        "glue-clique-sum", "coloring-osr", "faithful-from-pair",
        "fixture-p4-fosr", "fixture-p4-osr", "canonical-faithful",
        "fosr-to-fit", "fit-to-fosr", "normalize-weak-fit", "union-combine",
        "direct-sum-fits",
    ])
    p.add_argument("--cert", action="append", help="input certificate (repeatable)")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--eps", type=float, default=0.05)
    p.add_argument("--clique", help="comma-separated clique vertex labels")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("bounds", help="certified interval for a fold parameter")
    common(p)
    p.add_argument("parameter", choices=["xi-r", "mrr-plus"])
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("estimate", help="fractional estimates and the duality report")
    common(p)
    p.add_argument("parameter", choices=["xi-f", "mr-f", "duality"])
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--eps", type=float, default=0.05)
    p.set_defaults(fn=_cmd_estimate)

    p = sub.add_parser("oracle", help="exact combinatorial parameters")
    common(p)
    p.add_argument("quantity", choices=[
        "alpha", "omega", "chi", "chi-f", "chi-b", "chordal",
        "cut-components", "cut-vertex-mr",
    ])
    p.add_argument("--b", type=int, help="fold for chi-b")
    p.add_argument("--c", type=int, help="palette size for chi-b")
    p.add_argument("--vertex", help="vertex label for cut-vertex queries")
    p.add_argument("--r", type=int, default=1)
    p.set_defaults(fn=_cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(json.dumps({"status": "error", "error": str(exc)}, indent=2, sort_keys=True))
        _note(f"error: {exc}")
        return INPUT_ERROR
    except BetaSearchExhausted as exc:
        print(json.dumps({"status": "exhausted", "error": str(exc)}, indent=2, sort_keys=True))
        _note(f"search exhausted: {exc}")
        return EXHAUSTED
    except (GraphFormatError, ValueError) as exc:
        print(json.dumps({"status": "error", "error": str(exc)}, indent=2, sort_keys=True))
        _note(f"error: {exc}")
        return INPUT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
