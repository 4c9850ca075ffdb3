"""Command-line interface.  JSON on stdout; exit 0 ok, 1 verification failure, 2 usage error."""
from __future__ import annotations

import argparse
import json
import sys

from . import drum as dm
from . import verify as vf
from .errors import CertificateInvalid, DrumWidthError
from .exactcore import rat_str
from .family import (DkDrum, build_Dk, build_from_motif, build_santos, default_params, load_motif,
                     load_params, validate_params)
from .polytope import bits
from .search import SearchConfig, records_to_jsonl, run_search


class UsageError(Exception):
    pass


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _source_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=["dk"], default=None)
    p.add_argument("--k", type=int)
    p.add_argument("--params", metavar="FILE")
    p.add_argument("--santos", action="store_true")
    p.add_argument("--motif", metavar="FILE")


def _drum(args):
    chosen = sum(bool(x) for x in (args.k is not None or args.params, args.santos, args.motif))
    if chosen != 1:
        raise UsageError("give exactly one of --k/--params, --santos, --motif")
    if args.santos:
        return build_santos()
    if args.motif:
        return build_from_motif(load_motif(args.motif))
    params = load_params(args.params) if args.params else default_params(args.k)
    return build_Dk(params)


def _point(p) -> list[str]:
    return [rat_str(c) for c in p]


def cmd_build(args) -> int:
    d = _drum(args)
    payload = {"n_vertices": d.n, "n_bottom": len(d.bottom_idx), "n_top": len(d.top_idx),
               "skin_facets": {"+": len(d.skin_facets(dm.PLUS)), "-": len(d.skin_facets(dm.MINUS))}}
    if isinstance(d, DkDrum):
        payload["params"] = d.params.to_json()
        payload["params_report"] = validate_params(d.params).to_json()
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(d.to_json(), fh, sort_keys=True)
    else:
        payload["drum"] = d.to_json()
    _emit(payload)
    return 0


def cmd_width(args) -> int:
    d = _drum(args)
    w = dm.width(d)
    _emit({"width": w, "n_vertices": d.n, "simplicial": d.is_simplicial()})
    return 0


def cmd_fvmap(args) -> int:
    d = _drum(args)
    sides = [dm.PLUS, dm.MINUS] if args.side == "both" else [args.side]
    out = {}
    for s in sides:
        opp = d.skin(dm.other(s))
        out[s] = [{"facet": list(F), "vertex": v, "point": _point(opp.points[v])}
                  for F, v in dm.facet_vertex_map(d, s).items()]
    if args.out:
        with open(args.out, "w") as fh:
            for s in sides:
                fh.write(f"# side {s}\n" + dm.phi_csv(d, s))
    payload = {"phi": out, "two_cycle": dm.has_oriented_two_cycle(d)}
    _emit(payload)
    return 0


def _phi_names(d, k, ph) -> dict:
    names = {ph["a1-"]: "a1-", ph["n-"]: "n-"}
    tnames = {ph["a1"]: "a1", ph["n"]: "n"}
    out = {}
    for key, v in ph["values"].items():
        table = names if key.startswith("phi+") else tnames
        side = dm.MINUS if key.startswith("phi+") else dm.PLUS
        out[key] = table.get(v, _point(d.skin(side).points[v]))
    return out


def cmd_verify(args) -> int:
    if args.k is None:
        raise UsageError("verify needs --k")
    k = args.k
    d = build_Dk(default_params(k))
    stages = [args.stage] if args.stage else ["classify", "phi", "edges", "graphs", "bound"]
    payload, ok = {"k": k}, True
    for st in stages:
        if st == "classify":
            res = {}
            for s in (dm.PLUS, dm.MINUS):
                c = vf.classify_skin_facets(d, k, s)
                inc = vf.check_incidences(d, k, s)
                res[s] = {"orbits": c.orbit_sizes, "n_orbits": c.n_orbits, "incidences": inc}
                ok &= c.n_orbits == 2 * k + 1 and all(inc.values())
            payload["classify"] = res
        elif st == "phi":
            ph = vf.check_phi(d, k)
            payload["phi"] = {"values": _phi_names(d, k, ph), "checks": ph["checks"]}
            ok &= all(ph["checks"].values())
        elif st == "edges":
            res = {}
            for s in (dm.PLUS, dm.MINUS):
                e = vf.screen_edges(d, k, s)
                res[s] = {"ridges": e.n_ridges, "excluded": e.n_excluded,
                          "dim1_faces": len(e.dim1_faces), "ok": e.ok}
                ok &= e.ok
            payload["edges"] = res
        elif st == "graphs":
            res = {}
            for s in (dm.PLUS, dm.MINUS):
                g = vf.build_G(d, k, s)
                cb = vf.check_cor_bound(g, k, strict=False)
                shape = vf.matches_template(g.G, vf.g_template(k))
                res[s] = {"dims": {str(a): b for a, b in g.dim_counts().items()}, "template": shape,
                          "to_sa1": cb.to_sigma_a1, "to_a1": cb.to_a1, "ok": cb.ok}
                ok &= cb.ok and shape
            payload["graphs"] = res
        elif st == "bound":
            gp, gm = vf.build_G(d, k, dm.PLUS), vf.build_G(d, k, dm.MINUS)
            best, _ = vf.pair_bound(d, gm, gp)
            bound = 2 + -(-best // 2)
            payload["bound"] = {"minimum_sum": best, "bound": bound, "target": 5 + k}
            ok &= bound >= 5 + k
    payload["ok"] = bool(ok)
    _emit(payload)
    return 0 if ok else 1


def cmd_certify(args) -> int:
    if args.k is None:
        raise UsageError("certify needs --k")
    try:
        cert = vf.certify_width_lower_bound(args.k)
    except CertificateInvalid as exc:
        _emit({"k": args.k, "valid": False, "stage": exc.stage, "error": str(exc)})
        return 1
    payload = cert.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, sort_keys=True, indent=1)
    if args.dot:
        d = build_Dk(default_params(args.k))
        for s, name in ((dm.PLUS, "G"), (dm.MINUS, "Gminus")):
            g = vf.build_G(d, args.k, s)
            with open(f"{args.dot}/{name}_k{args.k}.dot", "w") as fh:
                fh.write(g.G.to_dot(name, label=lambda n: tuple(bits(n))))
    ok = cert.valid and cert.bound >= 5 + args.k
    _emit({"k": args.k, "valid": cert.valid, "bound": cert.bound, "target": 5 + args.k,
           "minimum_sum": cert.minimum_sum})
    return 0 if ok else 1


def cmd_search(args) -> int:
    cfg = SearchConfig()
    if args.config:
        with open(args.config) as fh:
            cfg = SearchConfig.from_json(json.load(fh))
    if args.seed is not None:
        cfg.seed = args.seed
    if args.budget is not None:
        cfg.budget = args.budget
    recs = run_search(cfg)
    text = records_to_jsonl(recs)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    counts = {}
    for r in recs:
        counts[r.outcome] = counts.get(r.outcome, 0) + 1
    widths = sorted({r.width for r in recs if r.width is not None})
    _emit({"seed": cfg.seed, "budget": cfg.budget, "outcomes": counts, "widths": widths})
    return 0


def cmd_export(args) -> int:
    d = _drum(args)
    what = args.what
    if what == "drum":
        text = json.dumps(d.to_json(), sort_keys=True)
    elif what == "facets":
        text = json.dumps({s: d.skin(s).to_json() for s in (dm.PLUS, dm.MINUS)}, sort_keys=True)
    elif what == "fr":
        from .polytope import facet_ridge_graph
        text = facet_ridge_graph(d.skin(dm.PLUS)).to_dot("FR")
    elif what in ("G", "Gminus", "frq"):
        if not isinstance(d, DkDrum):
            raise UsageError(f"--what {what} needs a D_k drum (--k)")
        if what == "frq":
            q, _ = vf.sign_flip_quotient_fr(d, d.k)
            text = q.to_dot("FRquotient")
        else:
            g = vf.build_G(d, d.k, dm.PLUS if what == "G" else dm.MINUS)
            inv = {v: k for k, v in g.names.items()}
            text = g.G.to_dot(what, label=lambda n: inv.get(n, tuple(bits(n))))
    else:
        raise UsageError(f"unknown export {what!r}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        _emit({"written": args.out, "what": what})
    else:
        _emit({"what": what, "content": text})
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="drumwidth", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)
    b = sub.add_parser("build", help="construct a drum and print it as JSON")
    _source_args(b)
    b.add_argument("--out", metavar="FILE")
    b.set_defaults(fn=cmd_build)
    w = sub.add_parser("width", help="exact width by full facet enumeration")
    _source_args(w)
    w.set_defaults(fn=cmd_width)
    f = sub.add_parser("fvmap", help="facet-vertex maps")
    _source_args(f)
    f.add_argument("--side", choices=["+", "-", "both"], default="both")
    f.add_argument("--out", metavar="FILE", help="CSV output")
    f.set_defaults(fn=cmd_fvmap)
    v = sub.add_parser("verify", help="run the checks for D_k")
    v.add_argument("--k", type=int)
    v.add_argument("--stage", choices=["classify", "phi", "edges", "graphs", "bound"])
    v.set_defaults(fn=cmd_verify)
    c = sub.add_parser("certify", help="certified width lower bound for D_k")
    c.add_argument("--k", type=int)
    c.add_argument("--out", metavar="FILE")
    c.add_argument("--dot", metavar="DIR", help="write G and G- as DOT files into DIR")
    c.set_defaults(fn=cmd_certify)
    s = sub.add_parser("search", help="random motif search")
    s.add_argument("--seed", type=int)
    s.add_argument("--budget", type=int)
    s.add_argument("--config", metavar="FILE")
    s.add_argument("--out", metavar="FILE")
    s.set_defaults(fn=cmd_search)
    e = sub.add_parser("export", help="export drums, skin facets or graphs")
    _source_args(e)
    e.add_argument("--what", choices=["drum", "facets", "fr", "G", "Gminus", "frq"], default="drum")
    e.add_argument("--out", metavar="FILE")
    e.add_argument("--dot", action="store_true", help="alias kept for symmetry; graphs are always DOT")
    e.set_defaults(fn=cmd_export)
    return p


def run(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) if exc.code in (0, None) else 2
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (DrumWidthError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1 if isinstance(exc, DrumWidthError) else 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
