"""Command-line front end.

Every subcommand builds a JSON-ready payload; the table view is rendered from
that payload alone, so ``--json`` output can always be turned back into the
same table.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional, Sequence

from . import counts, lattice, partitions, shimura, spectral, stratum
from .budget import Budget, BudgetExceeded
from .intpoly import IntPoly

SCHEMA_VERSION = "bt-strata/1"

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _poly(f: IntPoly, at: Optional[int] = None) -> dict:
    out = {"poly": f.to_str("p"), "coeffs": f.to_json()}
    if at is not None:
        out["value"] = f.eval(at)
    return out


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError("expected a comma-separated list of integers, got %r" % text) from exc


def _partition(text: str) -> partitions.Partition:
    return partitions.Partition(tuple(_int_list(text)))


# ----------------------------------------------------------------- commands


def cmd_nu(a, budget):
    f = counts.nu_symbolic(a.r, a.d)
    return {"r": a.r, "d": a.d, "at": a.at}, _poly(f, a.at)


def cmd_order(a, budget):
    return {"d": a.d, "at": a.at}, _poly(counts.unitary_order(a.d), a.at)


def cmd_strata(a, budget):
    if a.below:
        f = counts.strata_below(a.theta, a.dim)
    else:
        f = counts.strata_above(a.n, a.theta, a.dim)
    params = {"n": a.n, "theta": a.theta, "dim": a.dim, "direction": "below" if a.below else "above", "at": a.at}
    return params, _poly(f, a.at)


def _lattice_from(a, coords: str) -> lattice.ApartmentLattice:
    return lattice.make_lattice(a.n, a.i, _int_list(coords))


def _lat_json(L: Optional[lattice.ApartmentLattice]):
    return None if L is None else L.to_json()


def cmd_lattice(a, budget):
    params = {"action": a.action, "n": a.n, "i": a.i, "coords": _int_list(a.coords)}
    if a.action == "check":
        try:
            L = _lattice_from(a, a.coords)
        except lattice.LatticeError as exc:
            return params, {"valid": False, "reason": str(exc)}
        return params, {"valid": True, "lattice": L.to_json()}
    L = _lattice_from(a, a.coords)
    if a.action == "type":
        t = lattice.orbit_type(L).t
        return params, {
            "t": t,
            "theta": (t - 1) // 2,
            "parahoric_class": lattice.parahoric_class(a.n, t),
            "normalizer": lattice.normalizer_note(a.n, t),
        }
    if a.action == "dual":
        return params, {"dual": _lat_json(lattice.dual(L))}
    if a.other is None:
        raise UsageError("lattice intersect needs --with")
    params["with"] = _int_list(a.other)
    M = _lattice_from(a, a.other)
    return params, {"intersection": _lat_json(lattice.intersect(L, M)), "sum": _lat_json(lattice.lattice_sum(L, M))}


def cmd_partition(a, budget):
    lam = _partition(a.parts)
    params = {"action": a.action, "partition": list(lam.parts)}
    if a.action == "hooks":
        return params, {"hooks": partitions.hook_lengths(lam)}
    if a.action == "degree":
        return params, {"a": partitions.a_stat(lam), **_poly(partitions.degree(lam), a.at)}
    if a.action == "two-core":
        return params, {"core": list(partitions.two_core(lam).parts)}
    t, e = partitions.cuspidal_support(lam)
    res = {"t": t, "e": e, "cuspidal": partitions.is_cuspidal(lam)}
    res["f"] = partitions.inertial_class(lam) if lam.size % 2 else None
    return params, res


def _table_json(table: stratum.GradedRepTable, with_betti: bool, at: Optional[int]):
    rows = []
    for j in table.degrees():
        row = {
            "degree": j,
            "reps": [list(p) for p in (lab.partition.parts for lab in table.reps(j))],
            "weight": table.weight(j).to_json(),
        }
        if with_betti:
            dim = IntPoly.zero()
            for lab in table.reps(j):
                dim = dim + partitions.degree(lab.partition)
            row["dim"] = _poly(dim, at)
        rows.append(row)
    return rows


def cmd_stratum(a, budget):
    table = stratum.stratum_cohomology(a.theta)
    return {"theta": a.theta, "at": a.at}, {"rows": _table_json(table, True, a.at)}


def cmd_tube(a, budget):
    table = stratum.tube_cohomology(a.n, a.theta)
    return {"n": a.n, "theta": a.theta}, {"rows": _table_json(table, False, None)}


def cmd_kmult(a, budget):
    if a.closed:
        k = spectral.k_mult_closed(a.n, a.theta, a.s, a.p)
    else:
        k = spectral.k_mult_bruteforce(a.n, a.theta, a.s, a.p, budget)
    params = {"n": a.n, "theta": a.theta, "s": a.s, "p": a.p, "mode": "closed" if a.closed else "bruteforce"}
    return params, {"k": k}


def cmd_e1(a, budget):
    page = spectral.e1_page(a.n, a.p, a.mode, budget)
    return {"n": a.n, "p": a.p, "mode": a.mode}, page.to_json()


def cmd_e2_known(a, budget):
    known = spectral.e2_known_terms(a.n)
    return {"n": a.n}, {"entries": [{"a": x, "b": y, **rep.to_json()} for (x, y), rep in known.items()]}


def cmd_report(a, budget):
    mode = a.mode or ("closed" if a.n <= 4 else "bruteforce")
    report = spectral.cohomology_report(a.n, a.p, mode, budget)
    page = spectral.e1_page(a.n, a.p, mode, budget)
    flags = [f.to_json() for f in spectral.inertial_report(page)]
    return {"n": a.n, "p": a.p, "mode": mode}, {"degrees": spectral.report_to_json(report), "inertial": flags}


def cmd_basic(a, budget):
    roster = shimura.load_roster(a.roster)
    if (roster.n, roster.p) != (a.n, a.p):
        raise shimura.RosterError(
            "roster is for n=%d, p=%d but --n %d --p %d was given" % (roster.n, roster.p, a.n, a.p)
        )
    report = shimura.report_from_roster(roster)
    return {"n": a.n, "p": a.p, "roster": a.roster}, report.to_json()


# ----------------------------------------------------------------- table rendering


def _fmt_poly(res: dict) -> str:
    if "value" in res:
        return str(res["value"])
    return res["poly"]


def _fmt_lat(d: Optional[dict]) -> str:
    if d is None:
        return "none (outside the apartment family)"
    return "Lambda(%s | %s) at level %d" % (
        ",".join(map(str, d["neg"])), ",".join(map(str, d["pos"])), d["i"]
    )


def _fmt_weight(w: dict) -> str:
    return "%sp^%d" % ("+" if w["sign"] > 0 else "-", w["exponent"])


def _fmt_parts(parts) -> str:
    return "(%s)" % ",".join(map(str, parts))


def _fmt_term(t: dict) -> str:
    where = "J°" if t["parahoric"] == spectral.JCIRC else "J_%d" % t["parahoric"]
    rep = "1" if t["rep"] == "1" else "rho%s" % _fmt_parts(t["rep"])
    base = "c-Ind_%s %s" % (where, rep)
    return base if t["multiplicity"] == 1 else "(%s)^%d" % (base, t["multiplicity"])


def _fmt_entry(e: dict) -> str:
    return "(%d,%d)  %s  [Frob %s]" % (
        e["a"], e["b"], " + ".join(_fmt_term(t) for t in e["terms"]), _fmt_weight(e["weight"])
    )


def _fmt_frob(fr: dict) -> str:
    return "%s%s*p^%d" % ("+" if fr["sign"] > 0 else "-", fr["delta"], fr["exponent"])


def render_table(command: str, params: dict, result: dict) -> str:
    lines: List[str] = []
    out = lines.append
    if command in ("nu", "order", "strata"):
        out(_fmt_poly(result))
    elif command == "lattice":
        action = params["action"]
        if action == "check":
            out("valid: %s" % _fmt_lat(result["lattice"]) if result["valid"] else "invalid: %s" % result["reason"])
        elif action == "type":
            out("t = %d (theta = %d)" % (result["t"], result["theta"]))
            out("parahoric class: %d" % result["parahoric_class"])
            out("normalizer: %s" % result["normalizer"])
        elif action == "dual":
            out("dual: %s" % _fmt_lat(result["dual"]))
        else:
            out("intersection: %s" % _fmt_lat(result["intersection"]))
            out("sum: %s" % _fmt_lat(result["sum"]))
    elif command == "partition":
        action = params["action"]
        if action == "hooks":
            out(" ".join(map(str, result["hooks"])))
        elif action == "degree":
            out(_fmt_poly(result))
        elif action == "two-core":
            out(",".join(map(str, result["core"])) if result["core"] else "()")
        else:
            out("cuspidal support: t=%d e=%d" % (result["t"], result["e"]))
            out("cuspidal: %s" % ("yes" if result["cuspidal"] else "no"))
            out("inertial class f: %s" % ("n/a (even size)" if result["f"] is None else result["f"]))
    elif command in ("stratum", "tube"):
        for row in result["rows"]:
            cells = ["H^%d" % row["degree"], " + ".join("rho" + _fmt_parts(p) for p in row["reps"])]
            cells.append("[Frob %s]" % _fmt_weight(row["weight"]))
            if "dim" in row:
                cells.append("dim %s" % _fmt_poly(row["dim"]))
            out("  ".join(cells))
    elif command == "kmult":
        out(str(result["k"]))
    elif command in ("e1", "e2-known"):
        for e in result["entries"]:
            out(_fmt_entry(e))
    elif command == "report":
        for b, row in result["degrees"].items():
            out("H^%s:" % b)
            for e in row["known"]:
                out("  known    %s" % _fmt_entry(e))
            for e in row["bounded_by"]:
                out("  bound    %s" % _fmt_entry(e))
        sc = [f for f in result["inertial"] if f["supercuspidal"]]
        out("supercuspidal terms: %s" % (
            ", ".join("(%d,%d) J_%d rho%s" % (f["a"], f["b"], f["theta"], _fmt_parts(f["rep"])) for f in sc) or "none"
        ))
    elif command == "basic":
        out("nu = %d" % result["nu"])
        sections = [("H0", result["H0"]), ("H1 V", result["H1"]["V"]),
                    ("H1 quotient", result["H1"]["quotient"]), ("H2", result["H2"])]
        for name, items in sections:
            if not items:
                out("%s: 0" % name)
            for x in items:
                out("%s: %d x %s  [Frob %s]" % (name, x["multiplicity"], x["label"], _fmt_frob(x["frob"])))
    else:
        raise KeyError(command)
    return "\n".join(lines) + "\n"


def render_envelope_table(envelope: dict) -> str:
    return render_table(envelope["command"], envelope["params"], envelope["result"])


def dumps_envelope(envelope: dict) -> str:
    return json.dumps(envelope, indent=2, sort_keys=True) + "\n"


# ----------------------------------------------------------------- parser


COMMANDS: Dict[str, Callable] = {
    "nu": cmd_nu,
    "order": cmd_order,
    "strata": cmd_strata,
    "lattice": cmd_lattice,
    "partition": cmd_partition,
    "stratum": cmd_stratum,
    "tube": cmd_tube,
    "kmult": cmd_kmult,
    "e1": cmd_e1,
    "e2-known": cmd_e2_known,
    "report": cmd_report,
    "basic": cmd_basic,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit the JSON envelope")
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS, help="write output to FILE")

    ap = argparse.ArgumentParser(prog="bt-strata", description="Bruhat-Tits strata combinatorics", parents=[common])
    sub = ap.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    s = add("nu", "number of r-subspaces containing their orthogonal")
    s.add_argument("r", type=int)
    s.add_argument("d", type=int)
    s.add_argument("--at", type=int, metavar="P")

    s = add("order", "order of the finite unitary group U_d")
    s.add_argument("d", type=int)
    s.add_argument("--at", type=int, metavar="P")

    s = add("strata", "strata counts below or above a stratum")
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--theta", type=int, required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--below", action="store_true")
    g.add_argument("--above", action="store_true")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--at", type=int, metavar="P")

    s = add("lattice", "vertex lattices of the standard apartment")
    s.add_argument("action", choices=["check", "type", "dual", "intersect"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--i", type=int, default=0, help="level i (default 0)")
    s.add_argument("--coords", required=True, help="r_{-m},...,r_{-1},r_1,...,r_m (use --coords=-1,0 for negatives)")
    s.add_argument("--with", dest="other", help="second lattice for intersect")

    s = add("partition", "hook lengths, degrees and 2-cores")
    s.add_argument("action", choices=["hooks", "degree", "two-core", "class"])
    s.add_argument("parts", help="comma-separated parts, e.g. 3,3,2,2,1")
    s.add_argument("--at", type=int, metavar="P")

    s = add("stratum", "cohomology of a closed stratum of dimension theta")
    s.add_argument("--theta", type=int, required=True)
    s.add_argument("--at", type=int, metavar="P")

    s = add("tube", "cohomology of the tube over a stratum")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--theta", type=int, required=True)

    s = add("kmult", "the multiplicity k_{s,theta}")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--theta", type=int, required=True)
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--closed", action="store_true")

    s = add("e1", "first page of the spectral sequence")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--mode", choices=["closed", "bruteforce"], default="closed")

    s = add("e2-known", "exactly known second-page terms")
    s.add_argument("--n", type=int, required=True)

    s = add("report", "cohomology report with inertial classes")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--mode", choices=["closed", "bruteforce"], default=None)

    s = add("basic", "basic-stratum cohomology from a roster file")
    s.add_argument("--n", type=int, choices=[3, 4], required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--roster", required=True, metavar="FILE")
    return ap


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    as_json = getattr(args, "json", False)
    out_path = getattr(args, "out", None)
    if args.command == "strata" and args.above and args.n is None:
        stderr.write("bt-strata: error: strata --above needs --n\n")
        return EXIT_USAGE
    try:
        budget = Budget.from_env()
    except ValueError as exc:
        stderr.write("bt-strata: error: %s\n" % exc)
        return EXIT_USAGE
    try:
        params, result = COMMANDS[args.command](args, budget)
    except UsageError as exc:
        stderr.write("bt-strata: error: %s\n" % exc)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        stderr.write("bt-strata: budget exceeded: %s\n" % exc)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        stderr.write("bt-strata: %s\n" % exc)
        return EXIT_DOMAIN
    envelope = {"command": args.command, "params": params, "result": result, "schema_version": SCHEMA_VERSION}
    text = dumps_envelope(envelope) if as_json else render_envelope_table(envelope)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
