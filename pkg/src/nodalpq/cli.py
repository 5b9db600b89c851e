"""Command line front end.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 computation error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import curves as cv
from . import semigroup as sg
from . import weierstrass as ws
from .bipoly import BiPoly
from .errors import NodalPQError
from .exact import parse_rational

log = logging.getLogger("nodalpq")

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_ERROR = 0, 1, 2, 3


class UsageError(Exception):
    pass


class JsonFormatter(logging.Formatter):
    def format(self, record):
        out = {"level": record.levelname.lower(), "logger": record.name, "msg": record.getMessage()}
        out.update(getattr(record, "data", {}))
        return json.dumps(out, sort_keys=True)


def _setup_logging(as_json: bool, verbose: bool):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(JsonFormatter() if as_json else logging.Formatter("%(levelname)s: %(message)s"))
    root = logging.getLogger("nodalpq")
    root.handlers[:] = [handler]
    root.setLevel(logging.DEBUG if verbose else logging.INFO)
    root.propagate = False


# ---------------------------------------------------------------------------
# argument parsing helpers


def _values(text: str) -> list:
    try:
        return [parse_rational(v) for v in text.split(",") if v.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad number list {text!r}: {exc}") from None


def _points(text: str) -> list[tuple[int, int]]:
    out = []
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        try:
            a, b = (int(v) for v in chunk.split(","))
        except ValueError:
            raise UsageError(f"bad lattice point {chunk!r}, expected a,b") from None
        out.append((a, b))
    return out


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"bad pair {text!r}, expected p,q") from None
    return a, b


def _range(text: str) -> range:
    try:
        a, b = text.split("..")
        return range(int(a), int(b) + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected a..b") from None


def _ctx(args) -> sg.PQPair:
    return sg.PQPair(args.p, args.q)


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _emit(obj, out: str | None = None):
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
        log.info("wrote %s", out, extra={"data": {"path": out}})
    else:
        sys.stdout.write(text)


def _load_curve(path: str) -> cv.NodalCurve:
    return cv.NodalCurve.from_json(_read_json(path))


# ---------------------------------------------------------------------------
# subcommands


def cmd_gaps(args) -> int:
    ctx = _ctx(args)
    print(f"{'gamma':>6}  (a,b)")
    for g, (a, b) in sg.gaps_pq(ctx):
        print(f"{g:>6}  ({a},{b})")
    return EXIT_OK


def cmd_semigroup(args) -> int:
    ctx = _ctx(args)
    L = sg.LatticeSet.from_corners(ctx, _points(args.corners))
    H = sg.semigroup_from_lattice(L)
    _emit(H.to_json(ctx))
    return EXIT_OK


def _region(ctx, text: str | None):
    if text is None:
        return sg.rectangle_points(ctx.q // 2 - 1, ctx.p // 2 - 1)
    kind, _, params = text.partition(":")
    nums = [int(v) for v in params.split(",") if v]
    if kind == "lminus":
        return sg.lminus_region(ctx, *nums)
    if kind == "lequals":
        return sg.lminus_region(ctx, *nums, variant="equals")
    if kind == "delta1":
        return frozenset(pt for _, pt in sg.gaps_pq(ctx))
    try:
        return sg.region_lattice(ctx, kind, *nums).points
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad region {text!r}: {exc}") from None


def cmd_enumerate(args) -> int:
    ctx = _ctx(args)
    for L in sg.enumerate_down_closed(ctx, _region(ctx, args.region)):
        ok, _ = sg.close_check(L)
        if ok or args.all:
            rec = {"corners": [list(pt) for pt in L.maximal], "closed": ok}
            if ok:
                rec["semigroup"] = sg.semigroup_from_lattice(L).to_json(ctx)
            print(json.dumps(rec, sort_keys=True))
    return EXIT_OK


def _maybe_plot(C: cv.NodalCurve, path: str | None, window=None, grid: int = 512):
    if not path:
        return
    from .plot import svg

    window = window or _auto_window(C)
    Path(path).write_text(svg(C.F, window, grid, nodes=C.nodes))
    log.info("wrote %s", path, extra={"data": {"path": path}})


def _auto_window(C: cv.NodalCurve):
    pts = cv.node_floats(C) or [(0.0, 0.0)]
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    pad = 1.0
    return (min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad)


def cmd_lissajous(args) -> int:
    ctx = _ctx(args)
    C = cv.lissajous_curve(ctx)
    _emit(C.to_json(), args.out)
    _maybe_plot(C, args.plot, (-1.2, 1.2, -1.2, 1.2))
    return EXIT_OK


def cmd_product(args) -> int:
    ctx = _ctx(args)
    scalar = parse_rational(args.scalar) if args.scalar else None
    C = cv.product_curve(ctx, _values(args.xs), _values(args.ys), args.l1, args.l2, scalar=scalar, budget=args.budget)
    _emit(C.to_json(), args.out)
    _maybe_plot(C, args.plot)
    return EXIT_OK


def cmd_eliminate(args) -> int:
    C = _load_curve(args.curve)
    H = BiPoly.from_json(_read_json(args.adjoint))
    if H.field != C.field:
        H = H.embed(C.field)
    idx = [int(v) for v in args.keep.split(",") if v.strip()] if args.keep else []
    if any(i < 0 or i >= len(C.nodes) for i in idx):
        raise UsageError(f"node index out of range 0..{len(C.nodes) - 1}")
    D = cv.eliminate_nodes(C, H, [C.nodes[i] for i in idx], budget=args.budget, allow_top_degree=args.allow_top)
    _emit(D.to_json(), args.out)
    return EXIT_OK


def cmd_select(args) -> int:
    ctx = _ctx(args)
    xs, ys = _values(args.xs), _values(args.ys)
    lam = _points(args.lam)
    H = cv.selector_polynomial(ctx, xs, ys, lam, args.variant)
    if args.curve_out:
        C = cv.curve_with_node_set(ctx, xs, ys, lam, args.variant, budget=args.budget)
        _emit(C.to_json(), args.curve_out)
    _emit(H.to_json(), args.out)
    return EXIT_OK


def cmd_wsg(args) -> int:
    C = _load_curve(args.curve)
    rep = ws.semigroup_report(C)
    out = rep.to_json()
    out["witnesses"] = [r.to_json() for r in ws.gap_reports(C)]
    _emit(out, args.out)
    return EXIT_OK if rep.passed else EXIT_CHECK


def cmd_certify(args) -> int:
    data = _read_json(args.curve)
    try:
        C = cv.NodalCurve.from_json(data, recertify=True)
    except NodalPQError as exc:
        _emit({"certified": False, "error": type(exc).__name__, "detail": str(exc)})
        return EXIT_CHECK
    _emit({"certified": True, "certificate": C.certificate.to_json()})
    return EXIT_OK


def cmd_check(args) -> int:
    ctx = _ctx(args)
    xs = _values(args.xs) if args.xs else None
    ys = _values(args.ys) if args.ys else None
    if args.theorem == "rectangle":
        if args.l1 is None or args.l2 is None:
            raise UsageError("rectangle needs --l1 and --l2")
        if xs is not None and len(xs) != args.l1 or ys is not None and len(ys) != args.l2:
            raise UsageError("--xs/--ys must list l1/l2 values")
        rep = ws.check_rectangle_theorem(ctx, args.l1, args.l2, xs, ys)
    elif args.theorem == "HL":
        L = sg.LatticeSet.from_corners(ctx, _points(args.corners or ""))
        rep = ws.check_HL_theorem(ctx, L, xs, ys)
    elif args.theorem == "lift":
        if not args.to:
            raise UsageError("lift needs --to p',q'")
        ctx2 = sg.PQPair(*_pair(args.to))
        L = sg.LatticeSet.from_corners(ctx, _points(args.corners or ""))
        gx, gy = ws.default_grid(ctx)
        xs, ys = xs or gx, ys or gy
        variant = ws.realizing_variant(ctx, L, len(xs), len(ys))
        C = cv.curve_with_node_set(ctx, xs, ys, sorted(L.points), variant)
        rep = ws.lift_series(L, ctx2, C, xs, ys)
    elif args.theorem == "intersect":
        gx, gy = ws.default_grid(ctx)
        xs, ys = xs or gx, ys or gy
        curves = []
        for text in (args.corners, args.corners2):
            if text is None:
                raise UsageError("intersect needs --corners and --corners2")
            L = sg.LatticeSet.from_corners(ctx, _points(text))
            variant = ws.realizing_variant(ctx, L, len(xs), len(ys))
            curves.append(cv.curve_with_node_set(ctx, xs, ys, sorted(L.points), variant))
        rep = ws.intersect_semigroups_via_curves(*curves)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown theorem {args.theorem}")
    _emit(rep.to_json(), args.out)
    return EXIT_OK if rep.passed else EXIT_CHECK


def cmd_buchweitz_scan(args) -> int:
    results = []
    for p in _range(args.p_range):
        try:
            fams = [(v, sg.buchweitz_family(p, v)) for v in ("A", "B")]
        except NodalPQError as exc:
            log.warning("p=%d skipped: %s", p, exc, extra={"data": {"p": p}})
            continue
        for variant, H in fams:
            t = sg.buchweitz_test(H)
            rec = {"p": p, "family": variant, "genus": H.genus, "l2": t["l2"], "bound": t["bound"],
                   "violated": t["violated"], "generators": H.min_generators()}
            if t["violated"] or args.all:
                results.append(rec)
                print(json.dumps(rec, sort_keys=True))
    return EXIT_OK


def cmd_plot(args) -> int:
    from .plot import svg

    C = _load_curve(args.curve)
    try:
        window = tuple(float(v) for v in args.window.split(","))
        assert len(window) == 4 and window[0] < window[1] and window[2] < window[3]
    except (ValueError, AssertionError):
        raise UsageError("--window must be xmin,xmax,ymin,ymax") from None
    Path(args.out).write_text(svg(C.F, window, args.grid, nodes=C.nodes))
    log.info("wrote %s", args.out, extra={"data": {"path": args.out}})
    return EXIT_OK


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nodalpq", description="Nodal curves of type p,q and their Weierstrass semigroups.")
    parser.add_argument("--log-json", action="store_true", help="diagnostics as one-line JSON records")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_pq(p):
        p.add_argument("-p", type=int, required=True)
        p.add_argument("-q", type=int, required=True)
        return p

    s = with_pq(sub.add_parser("gaps", help="gaps of <p,q> and their lattice points"))
    s.set_defaults(func=cmd_gaps)

    s = with_pq(sub.add_parser("semigroup", help="semigroup closing the gaps of a lattice set"))
    s.add_argument("--corners", required=True, help='maximal points "a,b;a,b"')
    s.set_defaults(func=cmd_semigroup)

    s = with_pq(sub.add_parser("enumerate", help="semigroups from down-closed subsets of a region"))
    s.add_argument("--region", help="rectangle:a,b | delta:i | corner_triangle:r | lminus:l1,l2 | lequals:l1,l2 | delta1")
    s.add_argument("--all", action="store_true", help="also list sets failing the closure test")
    s.set_defaults(func=cmd_enumerate)

    s = with_pq(sub.add_parser("lissajous", help="certified Lissajous curve"))
    s.add_argument("--out")
    s.add_argument("--plot")
    s.set_defaults(func=cmd_lissajous)

    s = with_pq(sub.add_parser("product", help="product curve with a grid of nodes"))
    s.add_argument("--xs", required=True)
    s.add_argument("--ys", required=True)
    s.add_argument("--l1", type=int, required=True)
    s.add_argument("--l2", type=int, required=True)
    s.add_argument("--scalar")
    s.add_argument("--budget", type=int, default=cv.DEFAULT_BUDGET)
    s.add_argument("--out")
    s.add_argument("--plot")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("eliminate", help="remove nodes by adding a multiple of an adjoint")
    s.add_argument("--curve", required=True)
    s.add_argument("--adjoint", required=True)
    s.add_argument("--keep", default="", help="indices of nodes to keep")
    s.add_argument("--budget", type=int, default=cv.DEFAULT_BUDGET)
    s.add_argument("--allow-top", action="store_true", help="allow filtration degree pq")
    s.add_argument("--out")
    s.set_defaults(func=cmd_eliminate)

    s = with_pq(sub.add_parser("select", help="selector polynomial for a node subset of a grid"))
    s.add_argument("--xs", required=True)
    s.add_argument("--ys", required=True)
    s.add_argument("--lambda", dest="lam", required=True, help='grid indices "m,n;m,n"')
    s.add_argument("--variant", choices=["minus", "equals"], default="minus")
    s.add_argument("--budget", type=int, default=cv.DEFAULT_BUDGET)
    s.add_argument("--out")
    s.add_argument("--curve-out", help="also build and write the curve with these nodes")
    s.set_defaults(func=cmd_select)

    s = sub.add_parser("wsg", help="Weierstrass semigroup of a certified curve")
    s.add_argument("--curve", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_wsg)

    s = sub.add_parser("certify", help="recertify a curve file")
    s.add_argument("--curve", required=True)
    s.set_defaults(func=cmd_certify)

    s = with_pq(sub.add_parser("check", help="theorem checks"))
    s.add_argument("--theorem", required=True, choices=["rectangle", "HL", "lift", "intersect"])
    s.add_argument("--l1", type=int)
    s.add_argument("--l2", type=int)
    s.add_argument("--xs")
    s.add_argument("--ys")
    s.add_argument("--corners")
    s.add_argument("--corners2")
    s.add_argument("--to", help="target type p',q' for lift")
    s.add_argument("--out")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("buchweitz-scan", help="Buchweitz families over a range of p")
    s.add_argument("--p-range", required=True, help="a..b")
    s.add_argument("--all", action="store_true", help="also list members within the bound")
    s.set_defaults(func=cmd_buchweitz_scan)

    s = sub.add_parser("plot", help="SVG of the real points")
    s.add_argument("--curve", required=True)
    s.add_argument("--window", default="-1.5,1.5,-1.5,1.5")
    s.add_argument("--grid", type=int, default=512)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_plot)
    return parser


def _glue_negative_values(argv: list[str]) -> list[str]:
    # "--window -1,1,-1,1" would otherwise read the value as an option
    out, it = [], iter(argv)
    for tok in it:
        if tok in ("--window", "--xs", "--ys", "--scalar"):
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-"):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def run(argv=None) -> int:
    as_json = argv is not None and "--log-json" in argv or argv is None and "--log-json" in sys.argv[1:]
    _setup_logging(as_json, False)
    try:
        argv = list(sys.argv[1:] if argv is None else argv)
        args = build_parser().parse_args(_glue_negative_values(argv))
        _setup_logging(args.log_json, args.verbose)
        t0 = time.perf_counter()
        code = args.func(args)
        log.debug("done", extra={"data": {"command": args.command, "seconds": round(time.perf_counter() - t0, 3)}})
        return code
    except UsageError as exc:
        log.error("usage: %s", exc, extra={"data": {"error": "usage"}})
        return EXIT_USAGE
    except NodalPQError as exc:
        log.error("%s: %s", type(exc).__name__, exc, extra={"data": {"error": type(exc).__name__}})
        return EXIT_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
