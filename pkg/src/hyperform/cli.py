"""Command-line entry point.

Every subcommand prints one JSON object per line and exits with status 0
only when all of its checks pass.
"""

from __future__ import annotations

import argparse
import json
import shlex
import subprocess
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .binform import curve_discriminant, format_form, format_poly, parse_form, form_from_poly
from .igusa import absolute_igusa, igusa_clebsch
from .minimize import global_reduce
from .nfield import FieldError, parse_field, principal_ideal
from .screduce import reduce_gl2ok
from .tables import load_tables, scramble_and_recover, select_rows, verify_row


def _emit(obj, out=None):
    out = out or sys.stdout
    out.write(json.dumps(obj, sort_keys=True, default=str) + "\n")
    out.flush()


def _read_form(args):
    field = parse_field(args.field)
    text = args.form.strip()
    if "=" in text:
        return parse_form(text, field)
    return form_from_poly(text, field, degree=args.degree)


def _factor_hook(cmd):
    """External factoring command.

    N is written to the command's stdin; a literal ``{N}`` in the template is
    replaced by N as well.  Any integers printed on stdout are taken as
    candidate factors.
    """
    if not cmd:
        return None

    def hook(N):
        argv = [a.replace("{N}", str(N)) for a in shlex.split(cmd)]
        proc = subprocess.run(argv, input=f"{N}\n", capture_output=True, text=True,
                              timeout=600)
        out = []
        for tok in proc.stdout.replace(",", " ").split():
            try:
                out.append(int(tok))
            except ValueError:
                continue
        return out

    return hook


def _event(ev):
    return [str(x) if not isinstance(x, (int, list)) else x for x in ev]


# ---------------------------------------------------------------------------
# subcommands


def cmd_disc(args):
    F = _read_form(args)
    d = F.discriminant()
    rec = {"form": format_poly(F), "disc": str(d), "ideal": str(principal_ideal(d))}
    if F.degree % 2 == 0 and F.degree >= 6:
        rec["curve_disc"] = str(curve_discriminant(F))
    _emit(rec)
    return 0


def cmd_invariants(args):
    F = _read_form(args)
    ic = igusa_clebsch(F)
    rec = {"form": format_poly(F)}
    rec.update(ic.to_dict())
    rec["I6prime"] = str(ic.I6p)
    rec["absolute"] = absolute_igusa(ic).to_dict()
    _emit(rec)
    return 0


def cmd_minimize(args):
    F = _read_form(args)
    res = global_reduce(F, _factor_hook(args.factor_cmd), trial_bound=args.trial_bound,
                        budget_seconds=args.budget_seconds)
    _emit({
        "form": format_form(res.form),
        "poly": format_poly(res.form),
        "disc": str(res.form.discriminant()),
        "transform": res.transform.to_dict(),
        "proven": res.proven,
        "unresolved": [str(a) for a in res.unresolved],
        "events": [_event(e) for e in res.events],
    })
    return 0 if res.proven else 1


def cmd_sc_reduce(args):
    F = _read_form(args)
    res = reduce_gl2ok(F, prec=args.prec, max_search=args.max_search, use_lll=not args.no_lll)
    _emit({
        "form": format_form(res.form),
        "poly": format_poly(res.form),
        "transform": res.transform.to_dict(),
        "z": [[z.real, z.imag] for z in res.z.coords],
        "flags": res.flags,
    })
    return 0 if all(res.flags.values()) else 1


def _verify_one(job):
    row, seeds, max_char = job
    t0 = time.perf_counter()
    rep = verify_row(row, max_char=max_char).to_dict()
    trips = []
    for s in range(1, seeds + 1):
        trips.append(scramble_and_recover(row, s).to_dict())
    rep["roundtrips"] = trips
    rep["ok"] = rep["ok"] and all(t["ok"] for t in trips)
    rep["seconds"] = round(time.perf_counter() - t0, 3)
    return rep


def cmd_verify_tables(args):
    rows = select_rows(load_tables(args.file), args.rows)
    jobs = [(r, args.seeds, args.max_char) for r in rows]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            reports = list(ex.map(_verify_one, jobs))
    else:
        reports = [_verify_one(j) for j in jobs]
    # deterministic order whatever the scheduling
    reports.sort(key=lambda r: r["row"])
    for rep in reports:
        if not args.verbose:
            for t in rep["roundtrips"]:
                t.pop("form", None)
        _emit(rep)
    failed = [r["row"] for r in reports if not r["ok"]]
    _emit({"summary": True, "rows": len(reports), "failed": failed, "ok": not failed})
    return 0 if reports and not failed else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="hyperform",
                                 description="Minimal and reduced genus-2 models.")
    sub = ap.add_subparsers(dest="command", required=True)

    vt = sub.add_parser("verify-tables", help="check the bundled or a given table file")
    vt.add_argument("file", nargs="?", default=None)
    vt.add_argument("--rows", default=None,
                    help="comma list of table ids (1a), D values or row keys")
    vt.add_argument("--seeds", type=int, default=0, help="round trips per row")
    vt.add_argument("--max-char", type=int, default=None,
                    help="only check minimality at primes up to this characteristic")
    vt.add_argument("--jobs", type=int, default=1)
    vt.add_argument("--verbose", action="store_true")
    vt.set_defaults(func=cmd_verify_tables)

    def form_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--field", default="Q", help="Q or a discriminant D' such as 5")
        p.add_argument("--form", required=True,
                       help="'deg=6; f=[c0,...,c6]' or a polynomial such as 'x^5 - 1'")
        p.add_argument("--degree", type=int, default=6,
                       help="form degree when --form is a polynomial")
        p.set_defaults(func=func)
        return p

    form_cmd("disc", cmd_disc, "discriminant of a form")
    form_cmd("invariants", cmd_invariants, "Igusa-Clebsch and absolute invariants")
    mn = form_cmd("minimize", cmd_minimize, "globally minimal model")
    mn.add_argument("--factor-cmd", default=None,
                    help="external factoring command; reads N on stdin, prints factors")
    mn.add_argument("--trial-bound", type=int, default=None)
    mn.add_argument("--budget-seconds", type=float, default=None)
    sc = form_cmd("sc-reduce", cmd_sc_reduce, "reduce coefficient size")
    sc.add_argument("--prec", type=int, default=106)
    sc.add_argument("--max-search", type=int, default=5_000_000)
    sc.add_argument("--no-lll", action="store_true")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FieldError, ValueError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return 2


if __name__ == "__main__":
    sys.exit(main())
