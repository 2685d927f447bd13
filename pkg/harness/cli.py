"""
Command-line entry point.

Exit codes: 0 success, 1 a certificate or verdict failed, 2 bad input,
3 an exact oracle refused to run beyond its budget. Vertex ids given on
the command line and inside JSON certificates are 0-based; .gr and .td
files are 1-based.
"""
import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from certificates.bramble import bramble_order, grid_bramble
from certificates.tangle import clique_tangle, kn_minus_matching_tangle, tangle_from_bramble, tangle_order
from config import Budget
from decompositions.branch import BranchDecomposition, bd_to_td, td_to_bd, validate_bd
from decompositions.branchwidth import exact_branchwidth
from decompositions.chordal import chordal_completion
from decompositions.normalize import normalize_td
from decompositions.tree_decomposition import validate_td
from decompositions.treewidth import exact_treewidth
from families.family_spec import expand_family_range, generate, parse_family_spec
from graph_core.graph import Graph
from harness import certificate_io as cio
from harness.pace_io import emit_gr, emit_td, parse_gr, parse_td, read_text
from harness.report import parameter_report
from harness.sweep import run_sweep
from linkage.linked import linkedness
from linkage.query import LinkageQuery, run_linkage_query
from linkage.well_linked import well_linked_number
from minors.fractional import had_f_small
from minors.glm import glm_from_grid, model_in_product_from_glm, weighted_bramble_from_product_model
from minors.hadwiger import hadwiger_number
from separators.separator import SeparatorCert, min_separator, sep_number_certificate
from utils.errors import BudgetExceeded, CertificateError, InputError
from utils.logger import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


# ---------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------
def _budget_overrides(items: Optional[List[str]]) -> Dict[str, int]:
    overrides: Dict[str, int] = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep:
            raise InputError(f"--budget expects KEY=VALUE, got {item!r}")
        try:
            overrides[key.strip()] = int(value)
        except ValueError as e:
            raise InputError(f"--budget {key} needs an integer, got {value!r}") from e
    return overrides


def _vertex_list(text: str) -> List[int]:
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError as e:
        raise InputError(f"expected a comma-separated vertex list, got {text!r}") from e


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"bad fraction {text!r}") from e


def _graph(path: str) -> Graph:
    return parse_gr(read_text(path))


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as e:
        raise InputError(f"cannot write {path}: {e}") from e


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text + "\n")


# ---------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------
def cmd_gen(args, budget: Budget) -> int:
    spec = parse_family_spec(args.family, default_seed=args.seed)
    _write(args.output, emit_gr(generate(spec)))
    return EXIT_OK


def cmd_tw(args, budget: Budget) -> int:
    g = _graph(args.graph)
    width, td = exact_treewidth(g, budget)
    if args.td_out:
        _write(args.td_out, emit_td(td, g.n))
    _emit(args, {"parameter": "tw", "value": width}, f"tw {width}")
    return EXIT_OK


def cmd_bw(args, budget: Budget) -> int:
    g = _graph(args.graph)
    width, bd = exact_branchwidth(g, budget)
    if args.cert_out and bd is not None:
        _write(args.cert_out, cio.dump_certificate(cio.bd_doc(bd)))
    _emit(args, {"parameter": "bw", "value": width}, f"bw {width}")
    return EXIT_OK


def cmd_link(args, budget: Budget) -> int:
    g = _graph(args.graph)
    if args.set is not None:
        query = LinkageQuery(s=tuple(_vertex_list(args.set)), k=args.k, mode=args.mode)
        verdict = run_linkage_query(g, query, budget)
        witness = sorted(verdict.witness) if isinstance(verdict.witness, frozenset) else verdict.witness
        _emit(
            args,
            {"mode": query.mode, "k": query.k, "holds": verdict.ok, "reason": verdict.reason, "witness": witness},
            f"{query.mode} k={query.k}: {'holds' if verdict.ok else 'fails: ' + verdict.reason}",
        )
        return EXIT_OK if verdict.ok else EXIT_FAILED
    k, s = linkedness(g, budget)
    _emit(args, {"parameter": "link", "value": k, "set": sorted(s)}, f"link {k} set {sorted(s)}")
    return EXIT_OK


def cmd_wl(args, budget: Budget) -> int:
    g = _graph(args.graph)
    size, s = well_linked_number(g, budget)
    _emit(args, {"parameter": "wl", "value": size, "set": sorted(s)}, f"wl {size} set {sorted(s)}")
    return EXIT_OK


def cmd_sep(args, budget: Budget) -> int:
    g = _graph(args.graph)
    c = _fraction(args.c)
    name = f"sep{'*' if args.variant else ''}_{c}"
    if args.set is not None:
        s = _vertex_list(args.set)
        x = min_separator(g, s, c, args.variant, budget=budget)
        k = len(x)
    else:
        k, s, x = sep_number_certificate(g, c, args.variant, args.guided, budget)
    if args.cert_out:
        _write(args.cert_out, cio.dump_certificate(cio.separator_doc(SeparatorCert(frozenset(x), frozenset(s), c, args.variant))))
    _emit(
        args,
        {"parameter": name, "value": k, "s": sorted(s), "x": sorted(x)},
        f"{name} {k} s {sorted(s)} x {sorted(x)}",
    )
    return EXIT_OK


def cmd_had(args, budget: Budget) -> int:
    g = _graph(args.graph)
    if args.fractional or args.r is not None:
        value = had_f_small(g, args.r, budget)
        name = "had_f" if args.r is None else f"had_{args.r}"
        _emit(args, {"parameter": name, "value": str(value)}, f"{name} {value}")
        return EXIT_OK
    t, model = hadwiger_number(g, budget)
    if args.cert_out:
        _write(args.cert_out, cio.dump_certificate(cio.model_doc(model)))
    _emit(args, {"parameter": "had", "value": t}, f"had {t}")
    return EXIT_OK


def cmd_convert(args, budget: Budget) -> int:
    g = _graph(args.graph)
    if args.action == "bd2td":
        doc = cio.load_certificate(read_text(args.source))
        if doc.kind != "bd":
            raise InputError(f"bd2td needs a bd certificate, got {doc.kind}")
        bd = BranchDecomposition.build(
            doc.node_count, (tuple(e) for e in doc.tree_edges), {(u, v): leaf for u, v, leaf in doc.leaves}
        )
        validate_bd(g, bd)
        _write(args.output, emit_td(bd_to_td(g, bd), g.n))
        return EXIT_OK
    td, n = parse_td(read_text(args.source))
    if n != g.n:
        raise InputError(f"decomposition is for {n} vertices, graph has {g.n}")
    validate_td(g, td)
    if args.action == "td2bd":
        _write(args.output, cio.dump_certificate(cio.bd_doc(td_to_bd(g, td))))
    elif args.action == "normalize":
        _write(args.output, emit_td(normalize_td(g, td), g.n))
    else:
        _write(args.output, emit_gr(chordal_completion(g, td)))
    return EXIT_OK


def cmd_verify(args, budget: Budget) -> int:
    text = read_text(args.certificate)
    g = _graph(args.graph)
    if text.lstrip().startswith("{"):
        result = cio.verify_certificate(cio.load_certificate(text), g)
    else:
        td, n = parse_td(text)
        try:
            if n != g.n:
                raise CertificateError(f"decomposition is for {n} vertices, graph has {g.n}")
            result = cio.VerificationResult(kind="td", ok=True, value=str(validate_td(g, td)))
        except CertificateError as e:
            result = cio.VerificationResult(kind="td", ok=False, reason=str(e))
    _emit(
        args,
        result.model_dump(),
        f"{result.kind}: {'valid, value ' + str(result.value) if result.ok else 'INVALID: ' + str(result.reason)}",
    )
    return EXIT_OK if result.ok else EXIT_FAILED


def _report_text(report) -> str:
    lines = [f"graph {report.graph_id}: n={report.n} m={report.m}"]
    lines.extend(f"  {name} = {value}" for name, value in sorted(report.values.items()))
    for v in report.verdicts:
        lines.append(f"  [{'ok' if v.holds else 'FAIL'}] {v.name}: {v.lhs} vs {v.rhs}")
    return "\n".join(lines)


def cmd_report(args, budget: Budget) -> int:
    g = _graph(args.graph)
    report = parameter_report(g, budget, graph_id=args.graph, grid_k=args.grid_k)
    _emit(args, report.model_dump(), _report_text(report))
    return EXIT_OK if report.all_hold else EXIT_FAILED


def cmd_sweep(args, budget: Budget) -> int:
    specs = expand_family_range(args.family_range, default_seed=args.seed)
    result = run_sweep(specs, budget, args.workers)
    text = []
    for entry in result.entries:
        if entry.error is not None:
            text.append(f"graph {entry.spec}: ERROR {entry.error}")
        else:
            text.append(_report_text(entry.report))
    _emit(args, result.model_dump(), "\n".join(text))
    return EXIT_OK if result.all_hold else EXIT_FAILED


def cmd_certify(args, budget: Budget) -> int:
    k = args.k
    if args.kind in ("clique-tangle", "matching-tangle"):
        build = clique_tangle if args.kind == "clique-tangle" else kn_minus_matching_tangle
        g, tangle = build(k, budget)
        logger.info(f"{args.kind} n={k}: {len(tangle.elements)} elements")
        doc = cio.tangle_doc(tangle)
    elif args.kind == "glm":
        g, cert = glm_from_grid(k)
        doc = cio.glm_doc(cert)
    elif args.kind == "weighted-bramble":
        g, cert = glm_from_grid(k)
        wb = weighted_bramble_from_product_model(g, model_in_product_from_glm(g, cert), args.r)
        doc = cio.weighted_bramble_doc(wb, args.r)
    else:
        g, bramble = grid_bramble(k)
        if args.kind == "grid-bramble":
            doc = cio.bramble_doc(bramble)
            logger.info(f"grid bramble k={k} has order {bramble_order(g, bramble)[0]}")
        else:
            tangle = tangle_from_bramble(g, bramble, k + 1, budget)
            logger.info(f"tangle from grid bramble k={k} has order {tangle_order(g, tangle)}")
            doc = cio.tangle_doc(tangle)
    if args.graph_out:
        _write(args.graph_out, emit_gr(g))
    _write(args.output, cio.dump_certificate(doc))
    return EXIT_OK


# ---------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treewidth-ties", description="Exact treewidth-tied graph parameters and their certificates"
    )
    parser.add_argument("--seed", type=int, default=0, help="default seed for random families")
    parser.add_argument(
        "--budget", action="append", metavar="KEY=VALUE", help="override one oracle budget, e.g. tw_vertices=16"
    )
    parser.add_argument("--format", choices=("json", "text"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a family member as .gr")
    p.add_argument("family", help="e.g. psi:4,2 or gnp:8,1/3,seed=3")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("tw", help="exact treewidth")
    p.add_argument("graph")
    p.add_argument("--td-out", help="write the optimal decomposition as .td")
    p.set_defaults(handler=cmd_tw)

    p = sub.add_parser("bw", help="exact branchwidth")
    p.add_argument("graph")
    p.add_argument("--cert-out", help="write the branch decomposition certificate")
    p.set_defaults(handler=cmd_bw)

    p = sub.add_parser("link", help="linkedness, or a linkage query on one set")
    p.add_argument("graph")
    p.add_argument("--set", help="comma-separated 0-based vertices")
    p.add_argument("--k", type=int, default=1)
    p.add_argument(
        "--mode", choices=("linked", "well_linked", "ext_well_linked", "k_connected", "ext_k_connected"), default="linked"
    )
    p.set_defaults(handler=cmd_link)

    p = sub.add_parser("wl", help="well-linked number")
    p.add_argument("graph")
    p.set_defaults(handler=cmd_wl)

    p = sub.add_parser("sep", help="separation number, or the least separator of one set")
    p.add_argument("graph")
    p.add_argument("--c", default="1/2", help="fraction in [1/2, 1)")
    p.add_argument("--variant", action="store_true", help="starred variant: bound by c*|S|")
    p.add_argument("--guided", action="store_true", help="allow the larger vertex budget")
    p.add_argument("--set", help="comma-separated 0-based vertices")
    p.add_argument("--cert-out", help="write the separator certificate")
    p.set_defaults(handler=cmd_sep)

    p = sub.add_parser("had", help="Hadwiger number, or its fractional / r-integral version")
    p.add_argument("graph")
    p.add_argument("--fractional", action="store_true")
    p.add_argument("--r", type=int)
    p.add_argument("--cert-out", help="write the clique-minor model")
    p.set_defaults(handler=cmd_had)

    p = sub.add_parser("convert", help="decomposition conversions")
    p.add_argument("action", choices=("td2bd", "bd2td", "normalize", "chordal"))
    p.add_argument("graph")
    p.add_argument("source", help=".td file, or a bd certificate for bd2td")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_convert)

    p = sub.add_parser("verify", help="re-check a certificate or .td against a graph")
    p.add_argument("certificate")
    p.add_argument("graph")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("report", help="parameter report with the inequality battery")
    p.add_argument("graph")
    p.add_argument("--grid-k", type=int, help="attach grid certificates when the graph is the k x k grid")
    p.set_defaults(handler=cmd_report)

    p = sub.add_parser("sweep", help="reports over a family range, e.g. grid:2..4,2..4")
    p.add_argument("family_range")
    p.add_argument("--workers", type=int)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("certify", help="emit a constructed certificate")
    p.add_argument(
        "kind", choices=("grid-bramble", "glm", "tangle", "weighted-bramble", "clique-tangle", "matching-tangle")
    )
    p.add_argument("k", type=int, help="grid side, or n for the clique and matching tangles")
    p.add_argument("--r", type=int, default=2, help="weight grid for weighted-bramble")
    p.add_argument("--graph-out", help="also write the host graph as .gr")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_certify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        budget = Budget.from_settings().with_overrides(_budget_overrides(args.budget))
        return args.handler(args, budget)
    except BudgetExceeded as e:
        logger.warning(f"budget exceeded: {e}")
        sys.stderr.write(f"budget exceeded: {e}\n")
        return EXIT_BUDGET
    except CertificateError as e:
        logger.info(f"certificate rejected: {e}")
        sys.stderr.write(f"invalid certificate: {e}\n")
        return EXIT_FAILED
    except ValueError as e:
        # InputError, bad budget keys and pydantic validation errors
        logger.info(f"input rejected: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
