"""Command-line front end.

Vector conventions on the command line: ``--f`` takes ``f_0,...,f_{d-1}``
(no leading ``f_{-1} = 1``), while ``--h`` and ``--g`` take the full vector
starting with ``h_0 = 1`` / ``g_0 = 1``.

Exit codes: 0 success, 2 validation failure, 3 precondition violation,
4 size limit exceeded, 5 bound violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from . import betti, empty_simplices as es, kernels
from .errors import BoundViolation, SimplexBoundsError, ValidationError
from .oracle import complex as cx
from .oracle.homology import check_characteristic, hochster_betti, reduced_homology_ranks, vertex_limit
from .vectors import (
    FVector,
    GVector,
    HVector,
    f_to_h,
    g_to_h,
    h_to_f,
    h_to_g,
    is_si_sequence,
    vector_to_json,
)

log = logging.getLogger("simplexbounds")


@dataclass(frozen=True)
class CliConfig:
    output_format: str = "table"
    characteristic: int = 0
    vertex_limit: int = 12
    verbosity: int = 0
    threads: int = 1

    def __post_init__(self):
        if self.output_format not in ("json", "table"):
            raise ValidationError(f"unknown output format {self.output_format!r}")
        check_characteristic(self.characteristic)
        if self.vertex_limit < 1:
            raise ValidationError("vertex limit must be at least 1")


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _emit(cfg: CliConfig, doc, text: str) -> None:
    if cfg.output_format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def _csv(values) -> str:
    return ",".join(str(v) for v in values)


# -- convert -----------------------------------------------------------------

def cmd_convert(args, cfg: CliConfig) -> int:
    if args.f is not None:
        f = FVector.from_counts(args.f)
        if args.d is not None and args.d != f.d:
            raise ValidationError(f"--d {args.d} does not match {f.d} face numbers")
        h = f_to_h(f)
    elif args.h is not None:
        h = HVector(args.h)
        if args.d is not None and args.d != h.d:
            raise ValidationError(f"h-vector length {len(h.entries)} does not match d + 1 = {args.d + 1}")
        f = h_to_f(h)
    else:
        if args.d is None:
            raise ValidationError("--g needs --d")
        g = GVector(args.g)
        h = g_to_h(g, args.d)
        f = h_to_f(h)
    check = is_si_sequence(h.entries)
    if not check:
        raise ValidationError(check.reason)
    g = h_to_g(h)
    doc = {
        "f": vector_to_json(f),
        "h": vector_to_json(h),
        "g": vector_to_json(g),
        "si_sequence": True,
    }
    text = "\n".join(
        [
            f"d = {f.d}",
            f"f = {_csv(f.counts)}",
            f"h = {_csv(h.entries)}",
            f"g = {_csv(g.entries)}",
            "h is an SI-sequence",
        ]
    )
    _emit(cfg, doc, text)
    return 0


# -- bound -------------------------------------------------------------------

def _g_from_args(args) -> tuple[GVector, int]:
    if args.d is None:
        raise ValidationError("--d is required with --g/--h")
    if args.h is not None:
        h = HVector(args.h)
        if h.d != args.d:
            raise ValidationError(f"h-vector length {len(h.entries)} does not match d + 1 = {args.d + 1}")
        return h_to_g(h), args.d
    return GVector(args.g), args.d


def cmd_bound(args, cfg: CliConfig) -> int:
    if args.hilbert is not None:
        if args.n is None:
            raise ValidationError("--hilbert needs --n")
        if args.dim:
            table = betti.cm_betti_table(args.hilbert, args.n, args.dim)
        else:
            table = betti.betti_table_bound(args.hilbert, args.n, extend=args.extend)
        _emit(cfg, table.to_json(), table.format())
        return 0

    if args.gk is not None:
        if args.k is None or args.j is None:
            raise ValidationError("--gk needs --k and --j")
        if args.d is not None and not args.dimension_free:
            value = es.gk_bound(args.gk, args.k, args.j, args.d)
        else:
            value = es.gk_dimension_free_bound(args.gk, args.k, args.j)
        _emit(cfg, {"value": value}, str(value))
        return 0

    if args.g1 is not None:
        if args.k is None:
            raise ValidationError("--g1 needs --k")
        if args.dimension_free or args.d is None:
            value = es.dimension_free_bound(args.g1, args.k)
        else:
            value = es.vertex_count_bound(args.g1, args.d, args.k)
        _emit(cfg, {"value": value}, str(value))
        return 0

    if args.g is None and args.h is None:
        raise ValidationError("give one of --g, --h, --g1, --gk or --hilbert")
    g, d = _g_from_args(args)

    if args.betti:
        h = g_to_h(g, d)
        table = betti.gorenstein_wlp_table(h.entries, h_to_f(h).counts[0], d)
        _emit(cfg, table.to_json(), table.format())
        return 0
    if args.total:
        value = es.total_bound(g) if g.u >= 1 else 1
        _emit(cfg, {"value": value}, str(value))
        return 0
    if args.cumulative is not None:
        value = es.cumulative_bound(g, d, args.cumulative)
        _emit(cfg, {"value": value}, str(value))
        return 0
    if args.vertex_count:
        if args.k is None:
            raise ValidationError("--vertex-count needs --k")
        value = es.vertex_count_bound(g.g1, d, args.k)
        _emit(cfg, {"value": value}, str(value))
        return 0

    report = es.bound_report(g, d)
    if args.per_degree:
        doc = {str(j): v for j, v in sorted(report.per_degree.items())}
        text = "\n".join(f"degree {j} (dim {j - 1}): {v}" for j, v in sorted(report.per_degree.items()))
        _emit(cfg, doc, text)
        return 0
    lines = [f"d = {d}, g = {_csv(g.entries)}", "empty simplices per dimension (generator degree):"]
    lines += [f"  dim {j - 1} (degree {j}): {v}" for j, v in sorted(report.per_degree.items())]
    if report.vanishing_range:
        lo, hi = report.vanishing_range
        lines.append(f"no empty simplices of dimension {lo}..{hi}")
    lines += [f"  N({k}) <= {v}" for k, v in sorted(report.cumulative.items())]
    lines.append(f"total <= {report.total}")
    _emit(cfg, report.to_json(), "\n".join(lines))
    return 0


# -- oracle / compare --------------------------------------------------------

def _complex_from_args(args) -> tuple[str, cx.SimplicialComplex]:
    if args.cyclic:
        n, d = args.cyclic
        return f"C({n},{d})", cx.cyclic_polytope_boundary(n, d)
    if args.polygon:
        return f"{args.polygon}-gon", cx.polygon(args.polygon)
    if args.cross:
        return f"cross-polytope({args.cross})", cx.cross_polytope_boundary(args.cross)
    if args.octahedron:
        return "octahedron", cx.octahedron()
    if args.simplex:
        return f"simplex({args.simplex})", cx.simplex_boundary(args.simplex)
    if args.file:
        return args.file, cx.load_complex(args.file)
    raise ValidationError("choose a complex: --cyclic, --polygon, --cross, --octahedron, --simplex or --file")


def _one_based(face) -> list[int]:
    return [v + 1 for v in face]


def cmd_oracle(args, cfg: CliConfig) -> int:
    name, c = _complex_from_args(args)
    wanted = [w for w in ("fvector", "nonfaces", "homology", "betti") if getattr(args, w)]
    if not wanted:
        wanted = ["fvector", "nonfaces", "betti"]
    doc: dict = {"complex": name, "n": c.n_vertices}
    lines = [f"{name}: {c.n_vertices} vertices, {len(c.facets)} facets"]
    if "fvector" in wanted:
        f = cx.f_vector(c)
        doc["f"] = list(f.entries)
        lines.append(f"f = {_csv(f.counts)}")
    if "nonfaces" in wanted:
        nonfaces = cx.minimal_nonfaces(c)
        doc["nonfaces"] = [_one_based(s) for s in nonfaces]
        lines.append(f"{len(nonfaces)} minimal non-faces:")
        lines += ["  {" + ",".join(map(str, _one_based(s))) + "}" for s in nonfaces]
    if "homology" in wanted:
        ranks = reduced_homology_ranks(c, cfg.characteristic, limit=cfg.vertex_limit)
        doc["reduced_homology"] = ranks
        lines.append("reduced homology ranks: " + _csv(ranks))
    if "betti" in wanted:
        table = hochster_betti(c, cfg.characteristic, limit=cfg.vertex_limit, threads=cfg.threads)
        doc["betti"] = table.to_json()
        lines.append(f"Betti table (characteristic {cfg.characteristic}):")
        lines.append(table.format())
    _emit(cfg, doc, "\n".join(lines))
    return 0


def cmd_compare(args, cfg: CliConfig) -> int:
    name, c = _complex_from_args(args)
    f = cx.f_vector(c)
    h = f_to_h(f)
    g = h_to_g(h)
    d = f.d
    nonfaces = cx.minimal_nonfaces(c)
    actual: dict[int, int] = {}
    for s in nonfaces:
        actual[len(s)] = actual.get(len(s), 0) + 1
    report = es.bound_report(g, d)
    rows = []
    violations = []
    for j, bound in sorted(report.per_degree.items()):
        count = actual.get(j, 0)
        rows.append({"degree": j, "dimension": j - 1, "actual": count, "bound": bound,
                     "attained": count == bound, "violated": count > bound})
        if count > bound:
            violations.append(f"degree {j}: {count} > {bound}")
    total_actual = len(nonfaces)
    if total_actual > report.total:
        violations.append(f"total: {total_actual} > {report.total}")
    cumulative = []
    for k, bound in sorted(report.cumulative.items()):
        count = sum(v for j, v in actual.items() if j - 1 <= k)
        cumulative.append({"k": k, "actual": count, "bound": bound, "attained": count == bound})
        if count > bound:
            violations.append(f"N({k}): {count} > {bound}")
    doc = {
        "complex": name,
        "d": d,
        "g": list(g.entries),
        "per_degree": rows,
        "cumulative": cumulative,
        "total": {"actual": total_actual, "bound": report.total, "attained": total_actual == report.total},
        "violations": violations,
    }
    lines = [f"{name}: d = {d}, g = {_csv(g.entries)}",
             f"{'dim':>4} {'degree':>6} {'actual':>7} {'bound':>7}  status"]
    for r in rows:
        status = "VIOLATED" if r["violated"] else ("attained" if r["attained"] else "")
        lines.append(f"{r['dimension']:>4} {r['degree']:>6} {r['actual']:>7} {r['bound']:>7}  {status}")
    for r in cumulative:
        lines.append(f"N({r['k']}) = {r['actual']} <= {r['bound']}" + ("  attained" if r["attained"] else ""))
    lines.append(f"total = {total_actual} <= {report.total}" + ("  attained" if total_actual == report.total else ""))
    lines.append("all bounds satisfied" if not violations else "BOUND VIOLATIONS: " + "; ".join(violations))
    _emit(cfg, doc, "\n".join(lines))
    if violations:
        raise BoundViolation("; ".join(violations))
    return 0


# -- parser ------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("table", "json"), default="table", help="output format")
    p.add_argument("--characteristic", type=int, default=0, help="field characteristic for homology (0 or a prime)")
    p.add_argument("--vertex-limit", type=int, default=None,
                   help="oracle vertex limit (default: $EMPTY_SIMPLEX_VERTEX_LIMIT or 12)")
    p.add_argument("--threads", type=int, default=1, help="threads for Hochster's subset sum")
    p.add_argument("-v", "--verbose", action="count", default=0)
    return p


def _complex_options(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--cyclic", nargs=2, type=int, metavar=("N", "D"), help="cyclic polytope C(N, D)")
    src.add_argument("--polygon", type=int, metavar="N")
    src.add_argument("--cross", type=int, metavar="D", help="boundary of the D-dimensional cross-polytope")
    src.add_argument("--octahedron", action="store_true")
    src.add_argument("--simplex", type=int, metavar="D", help="boundary of the D-simplex")
    src.add_argument("--file", help='JSON complex {"n": int, "facets": [[1-based vertices], ...]}')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplexbounds",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()

    p = sub.add_parser("convert", parents=[common], help="convert between f-, h- and g-vectors")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--f", type=_ints, help="f_0,...,f_{d-1} (without f_{-1} = 1)")
    src.add_argument("--h", type=_ints, help="h_0,...,h_d (with h_0 = 1)")
    src.add_argument("--g", type=_ints, help="g_0,...,g_u (with g_0 = 1); needs --d")
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("bound", parents=[common], help="evaluate Betti number and empty-simplex bounds")
    p.add_argument("--g", type=_ints, help="g-vector g_0,...,g_u")
    p.add_argument("--h", type=_ints, help="h-vector h_0,...,h_d")
    p.add_argument("--g1", type=int, help="only g_1 is known (number of vertices is d + g_1 + 1)")
    p.add_argument("--gk", type=int, metavar="B", help="only g_k <= B is known")
    p.add_argument("--hilbert", type=_ints, help="Hilbert function h(0),h(1),... of R/I")
    p.add_argument("--n", type=int, help="number of variables for --hilbert")
    p.add_argument("--dim", type=int, default=0, help="Krull dimension for --hilbert (Cohen-Macaulay case)")
    p.add_argument("--extend", action="store_true", help="continue --hilbert by maximal growth")
    p.add_argument("--d", type=int, help="polytope dimension")
    p.add_argument("--k", type=int)
    p.add_argument("--j", type=int, help="simplex dimension for --gk")
    query = p.add_mutually_exclusive_group()
    query.add_argument("--per-degree", action="store_true")
    query.add_argument("--cumulative", type=int, metavar="K", help="N(K) bound")
    query.add_argument("--total", action="store_true")
    query.add_argument("--vertex-count", action="store_true")
    query.add_argument("--dimension-free", action="store_true")
    query.add_argument("--betti", action="store_true", help="full Betti table bound of the polytope")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("oracle", parents=[common], help="brute-force computations on a simplicial complex")
    _complex_options(p)
    p.add_argument("--betti", action="store_true", help="Betti table by Hochster's formula")
    p.add_argument("--nonfaces", action="store_true", help="minimal non-faces (empty simplices)")
    p.add_argument("--fvector", action="store_true")
    p.add_argument("--homology", action="store_true", help="reduced homology ranks")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("compare", parents=[common], help="oracle counts next to the bounds")
    _complex_options(p)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which matches our validation code
        return exc.code if isinstance(exc.code, int) else 2
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        cfg = CliConfig(
            output_format=args.format,
            characteristic=args.characteristic,
            vertex_limit=args.vertex_limit if args.vertex_limit is not None else vertex_limit(),
            verbosity=args.verbose,
            threads=max(1, args.threads),
        )
        log.info("rank kernel backend: %s", kernels.BACKEND)
        return args.func(args, cfg)
    except SimplexBoundsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
