"""Command-line front end.

Exit codes: 0 ok, 1 methods disagree, 2 input error, 3 eligibility refusal,
4 resource guard (brute force beyond 24 edges without --force).

Examples::

    quasitrees count --family Fp --n 5 --methods all
    quasitrees count --rotation "-1,-2,3,1,2,4,3,4" --methods brute,det
    quasitrees verify-table2 --max-n 12 --threads 4
    quasitrees matrix --family F1 --n 4 --format csv
    quasitrees charpoly --family Fp --n 3
    quasitrees dm --rotation "-1,-2,3,1,2,4,3,4" --op list
    quasitrees matchings --graph caterpillar --n 7
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import deltamatroid as dm
from .chords import chord_diagram_from_bouquet, intersection_matrix
from .corpus import bouquet_corpus
from .families import (FAMILIES, MIN_N, delcon_kappa, fib, lucas, make_family,
                       needs_l1, predicted_charpoly, predicted_kappa)
from .formats import dumps, matrix_to_csv, poly_to_dict, ribbon_from_dict, ribbon_from_text
from .linalg import (IneligibleBouquetError, char_poly, det_exact, determinant_eligible,
                     identity_plus, kappa_by_determinant)
from .matchings import (caterpillar, count_perfect_matchings, grid_product, parse_edge_list,
                        path_graph)
from .parallel import parallel_histogram, parallel_map
from .ribbon import (RibbonGraph, RibbonGraphError, kappa_by_deletion_contraction,
                     parse_signed_rotation, quasi_tree_count, signed_rotation)

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT, EXIT_REFUSED, EXIT_GUARD = range(5)
BRUTE_LIMIT = 24
METHODS = ("brute", "det", "delcon", "closed")


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


@dataclass
class Report:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    refusals: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)
    seconds: float | None = None

    @property
    def agree(self) -> bool:
        values = {v for v in self.results.values() if v is not None}
        return len(values) <= 1

    def to_dict(self) -> dict:
        out = {"command": self.command, "inputs": self.inputs, "results": self.results,
               "refusals": self.refusals, "agree": self.agree}
        out.update(self.extra)
        if self.seconds is not None:
            out["seconds"] = round(self.seconds, 6)
        return out


# -- input handling -----------------------------------------------------------

def _load_graph(args) -> tuple[RibbonGraph, dict]:
    given = [x for x in ("rotation", "family", "graph") if getattr(args, x, None) is not None]
    if len(given) != 1:
        raise CliError("give exactly one of --rotation, --family or --graph")
    if args.rotation is not None:
        try:
            return parse_signed_rotation(args.rotation), {"rotation": args.rotation}
        except RibbonGraphError as exc:
            raise CliError(str(exc)) from exc
    if args.family is not None:
        if args.n is None:
            raise CliError("--family needs --n")
        try:
            return make_family(args.family, args.n), {"family": args.family, "n": args.n}
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    try:
        with open(args.graph) as fh:
            text = fh.read()
        if text.lstrip().startswith("{"):
            G = ribbon_from_dict(json.loads(text))
        else:
            G = ribbon_from_text(text)
    except (OSError, ValueError, KeyError) as exc:
        raise CliError(f"cannot read ribbon graph: {exc}") from exc
    return G, {"graph": args.graph}


def _parse_methods(text: str) -> list[str]:
    names = [m.strip() for m in text.split(",") if m.strip()]
    if "all" in names:
        return list(METHODS)
    bad = [m for m in names if m not in METHODS]
    if bad or not names:
        raise CliError(f"unknown methods {bad}; choose from {', '.join(METHODS)}, all")
    return names


def _guard(G: RibbonGraph, force: bool):
    if G.num_edges > BRUTE_LIMIT and not force:
        raise CliError(f"{G.num_edges} edges exceeds the brute-force limit of {BRUTE_LIMIT}; "
                       "use --force", EXIT_GUARD)


def _emit(args, payload: dict, text: str, csv_text: str | None = None):
    if args.format == "json":
        sys.stdout.write(dumps(payload))
    elif args.format == "csv" and csv_text is not None:
        sys.stdout.write(csv_text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- count ------------------------------------------------------------------------

def _count(args) -> int:
    G, inputs = _load_graph(args)
    methods = _parse_methods(args.methods)
    report = Report("count", inputs)
    report.extra["edges"] = G.num_edges
    start = time.perf_counter()
    for m in methods:
        if m == "brute":
            _guard(G, args.force)
            report.results[m] = parallel_histogram(G, args.threads).get(1, 0)
        elif m == "det":
            try:
                report.results[m] = kappa_by_determinant(G)
            except IneligibleBouquetError as exc:
                report.results[m] = None
                report.refusals[m] = str(exc)
        elif m == "delcon":
            if "family" in inputs:
                report.results[m] = delcon_kappa(args.family, args.n)
            else:
                _guard(G, args.force)
                report.results[m] = kappa_by_deletion_contraction(G)
        elif m == "closed":
            if "family" in inputs:
                report.results[m] = predicted_kappa(args.family, args.n)
            elif args.methods.strip() != "all":
                raise CliError("the closed form needs --family")
    if args.timing:
        report.seconds = time.perf_counter() - start
    lines = [f"{m}: {v if v is not None else 'refused'}" for m, v in report.results.items()]
    lines += [f"  ({m}) {why}" for m, why in report.refusals.items()]
    lines.append(f"agree: {report.agree}")
    _emit(args, report.to_dict(), "\n".join(lines),
          "method,kappa\n" + "".join(f"{m},{'' if v is None else v}\n" for m, v in report.results.items()))
    if not report.agree:
        return EXIT_DISAGREE
    return EXIT_REFUSED if report.refusals else EXIT_OK


# -- verify-table2 ------------------------------------------------------------

def _table_row(job) -> dict:
    fid, n, fault = job
    G = make_family(fid, n)
    row = {
        "family": fid,
        "n": n,
        "brute": quasi_tree_count(G),
        "det": kappa_by_determinant(G),
        "delcon": delcon_kappa(fid, n),
        "closed": predicted_kappa(fid, n) + (1 if fault == (fid, n) else 0),
    }
    row["ok"] = len({row[m] for m in METHODS}) == 1
    return row


def _verify_table2(args) -> int:
    fault = None
    if args.inject_fault:
        fid, _, n = args.inject_fault.partition(":")
        fault = (fid, int(n))
    jobs = [(fid, n, fault) for fid in FAMILIES for n in range(MIN_N[fid], args.max_n + 1)]
    start = time.perf_counter()
    rows = parallel_map(_table_row, jobs, args.threads)
    ok = all(r["ok"] for r in rows)
    payload = {"command": "verify-table2", "max_n": args.max_n, "rows": rows, "agree": ok}
    if args.timing:
        payload["seconds"] = round(time.perf_counter() - start, 6)
    header = "family,n,brute,det,delcon,closed,ok"
    body = "".join(f"{r['family']},{r['n']},{r['brute']},{r['det']},{r['delcon']},{r['closed']},"
                   f"{r['ok']}\n" for r in rows)
    text = [f"{'family':>6} {'n':>3} {'brute':>7} {'det':>7} {'delcon':>7} {'closed':>7}  ok"]
    text += [f"{r['family']:>6} {r['n']:>3} {r['brute']:>7} {r['det']:>7} {r['delcon']:>7} "
             f"{r['closed']:>7}  {'yes' if r['ok'] else 'NO'}" for r in rows]
    text.append(f"{len(rows)} instances, all agree: {ok}")
    _emit(args, payload, "\n".join(text), header + "\n" + body)
    return EXIT_OK if ok else EXIT_DISAGREE


# -- matrix / charpoly ----------------------------------------------------------

def _bouquet_matrix(args):
    G, inputs = _load_graph(args)
    if not G.is_bouquet:
        raise CliError("intersection matrices are defined for bouquets")
    return G, inputs, intersection_matrix(chord_diagram_from_bouquet(G))


def _matrix(args) -> int:
    G, inputs, A = _bouquet_matrix(args)
    d = det_exact(identity_plus(A))
    payload = {"command": "matrix", "inputs": inputs, "labels": list(G.labels), "matrix": A,
               "det_identity_plus": d, "eligible": determinant_eligible(G)}
    text = "\n".join(" ".join(f"{x:>2}" for x in row) for row in A)
    text += f"\ndet(I + A) = {d}" + ("" if payload["eligible"] else "  (not a quasi-tree count: "
                                      "more than one non-orientable loop)")
    _emit(args, payload, text, matrix_to_csv(A))
    return EXIT_OK


def _charpoly(args) -> int:
    G, inputs, A = _bouquet_matrix(args)
    p = char_poly(A)
    payload = {"command": "charpoly", "inputs": inputs, **poly_to_dict(p)}
    if "family" in inputs:
        try:
            q = predicted_charpoly(args.family, args.n)
            payload["predicted"] = poly_to_dict(q)
            payload["agree"] = p == q
            if needs_l1(args.family, args.n):
                payload["note"] = "closed form uses l_1(t) = t, from f_0(t) = 0"
        except ValueError as exc:
            payload["predicted"] = None
            payload["note"] = str(exc)
    _emit(args, payload, str(p), ",".join(map(str, p.coeffs)) + "\n")
    return EXIT_DISAGREE if payload.get("agree") is False else EXIT_OK


# -- dm ---------------------------------------------------------------------------

def _ints(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def _dm(args) -> int:
    G, inputs = _load_graph(args)
    _guard(G, args.force)
    D = dm.from_ribbon_graph(G)
    payload = {"command": "dm", "inputs": inputs, "op": args.op}
    try:
        if args.op == "list":
            out = D
        elif args.op == "check":
            payload.update(delta_matroid=dm.is_delta_matroid(D), even=dm.is_even(D), size=len(D))
            _emit(args, payload, f"delta-matroid: {payload['delta_matroid']}\n"
                                 f"even: {payload['even']}\nfeasible sets: {len(D)}")
            return EXIT_OK
        elif args.op == "twist":
            out = dm.twist(D, _ints(args.set))
        elif args.op == "loopcomp":
            out = dm.loop_complementation(D, args.a)
        elif args.op == "slide":
            out = dm.handle_slide(D, args.a, args.b)
        elif args.op == "exchange":
            out = dm.exchange_handle_ends(D, args.a, args.b)
        else:  # fourterm
            sizes = dm.four_term_check(D, args.a, args.b)
            payload.update(sizes=list(sizes[:4]), holds=sizes[4])
            _emit(args, payload, "|F| |F~| |F'| |F~'| = " + " ".join(map(str, sizes[:4]))
                  + f"\nfour-term relation holds: {sizes[4]}")
            return EXIT_OK if sizes[4] else EXIT_DISAGREE
    except (ValueError, TypeError) as exc:
        raise CliError(str(exc)) from exc
    payload.update(ground=list(out.ground), feasible=[list(s) for s in out.sets()], size=len(out))
    _emit(args, payload, out.to_text().rstrip("\n"))
    return EXIT_OK


# -- matchings --------------------------------------------------------------------

def _matchings(args) -> int:
    payload = {"command": "matchings"}
    if args.edges:
        try:
            with open(args.edges) as fh:
                G = parse_edge_list(fh.read())
        except (OSError, ValueError) as exc:
            raise CliError(f"cannot read edge list: {exc}") from exc
        payload["inputs"] = {"edges": args.edges}
        count = count_perfect_matchings(G)
    else:
        if args.n is None:
            raise CliError("--graph needs --n")
        if args.graph == "ladder":
            base, predicted = path_graph(args.n), fib(args.n + 1)
        else:
            if args.n < 3:
                raise CliError("the caterpillar needs n >= 3")
            base, predicted = caterpillar(args.n), lucas(args.n - 1)
        payload["inputs"] = {"graph": args.graph, "n": args.n}
        count = count_perfect_matchings(grid_product(base))
        payload["predicted"] = predicted
        payload["agree"] = count == predicted
    payload["perfect_matchings"] = count
    _emit(args, payload, str(count))
    return EXIT_DISAGREE if payload.get("agree") is False else EXIT_OK


# -- random-check -------------------------------------------------------------

def _random_row(G: RibbonGraph) -> dict:
    return {"rotation": ",".join(map(str, signed_rotation(G))),
            "brute": quasi_tree_count(G), "det": kappa_by_determinant(G)}


def _random_check(args) -> int:
    if not 0 <= args.twisted <= 1:
        raise CliError("--twisted must be 0 or 1 (the determinant needs it)")
    if args.max_n < max(1, args.twisted):
        raise CliError("--max-n too small")
    corpus = bouquet_corpus(args.seed, args.count, args.max_n, args.twisted)
    rows = parallel_map(_random_row, corpus, args.threads)
    bad = [r for r in rows if r["brute"] != r["det"]]
    payload = {"command": "random-check", "seed": args.seed, "count": args.count,
               "max_n": args.max_n, "twisted": args.twisted, "mismatches": bad,
               "agree": not bad}
    text = f"{args.count} bouquets (seed {args.seed}, n <= {args.max_n}, " \
           f"{args.twisted} twisted): {len(bad)} mismatches"
    _emit(args, payload, text)
    return EXIT_DISAGREE if bad else EXIT_OK


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quasitrees", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("--rotation", help='signed rotation, e.g. "-1,4,2,1,3,2,4,3"')
        p.add_argument("--family", choices=FAMILIES)
        p.add_argument("--n", type=int)
        p.add_argument("--graph", help="ribbon graph file (text or JSON)")

    def common(p, default="text"):
        p.add_argument("--format", choices=("json", "csv", "text"), default=default)
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("count", help="count quasi-trees by several methods")
    graph_input(p)
    common(p)
    p.add_argument("--methods", default="brute")
    p.add_argument("--force", action="store_true")
    p.add_argument("--timing", action="store_true", help="add wall time to the report")
    p.set_defaults(func=_count)

    p = sub.add_parser("verify-table2", help="check every family against its closed form")
    common(p)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--timing", action="store_true")
    p.add_argument("--inject-fault", help=argparse.SUPPRESS)
    p.set_defaults(func=_verify_table2)

    p = sub.add_parser("matrix", help="signed intersection matrix of a bouquet")
    graph_input(p)
    common(p)
    p.set_defaults(func=_matrix)

    p = sub.add_parser("charpoly", help="characteristic polynomial of the intersection matrix")
    graph_input(p)
    common(p)
    p.set_defaults(func=_charpoly)

    p = sub.add_parser("dm", help="delta-matroid of a ribbon graph and its operations")
    graph_input(p)
    common(p)
    p.add_argument("--op", choices=("list", "check", "twist", "loopcomp", "slide", "exchange",
                                    "fourterm"), default="list")
    p.add_argument("--set", help="comma-separated subset for twist")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_dm)

    p = sub.add_parser("random-check", help="determinant vs brute force on seeded random bouquets")
    common(p)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--twisted", type=int, default=0, help="non-orientable loops per bouquet (0 or 1)")
    p.set_defaults(func=_random_check)

    p = sub.add_parser("matchings", help="perfect matchings of P2 x P_n or P2 x T_n")
    common(p)
    p.add_argument("--graph", choices=("ladder", "caterpillar"), default="ladder")
    p.add_argument("--n", type=int)
    p.add_argument("--edges", help="edge-list file, one 'u v' pair per line")
    p.set_defaults(func=_matchings)
    return parser


def _glue_values(argv: list[str]) -> list[str]:
    # argparse reads "-1,2,..." as an option; fuse it onto the flag instead
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--rotation", "--set") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _glue_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except RibbonGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
