"""Command-line driver: ``hypjohnson verify|dims|twist|span``.

Exit codes: 0 when every non-skipped check passes, 1 on a check failure,
2 on a usage error (bad genus, malformed descriptor, unwritable path).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _genus(text: str) -> int:
    try:
        g = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"genus must be an integer, got {text!r}")
    if g < 2:
        raise argparse.ArgumentTypeError(f"genus must be >= 2, got {g}")
    return g


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=str) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc.strerror or exc}")


def _fmt_bivector(x) -> dict[str, str]:
    from .symplectic import basis_label

    return {f"{basis_label(s)}^{basis_label(t)}": str(c) for (s, t), c in sorted(x.items())}


# ---------------------------------------------------------------- commands


def cmd_verify(args) -> int:
    from .checks import run_checks

    modules = None
    if args.modules:
        modules = [m.strip() for m in args.modules.split(",") if m.strip()]
    try:
        report = run_checks(args.genus, modules, args.slow)
    except ValueError as exc:
        raise UsageError(str(exc))
    _emit(_dump(report.as_dict()), args.out)
    for c in report.checks:
        print(f"{c.status:7s} {c.name}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def dims_table(g: int) -> dict:
    from .derivations import residue_matrix_rank
    from .free_lie import ideal_component, lyndon_basis, quotient_space
    from .rep_dims import weyl_dim

    table = {
        "genus": g,
        "L": {str(k): len(lyndon_basis(k, g)) for k in range(1, 5)},
        "J": {str(k): ideal_component(k, g).dim for k in range(2, 5)},
        "p": {f"-{m}": quotient_space(m, g).dim for m in range(1, 5)},
        "V": {str(list(lam)): weyl_dim(lam, g)
              for lam in [(1,), (1, 1), (2, 1), (2, 2)] + ([(1, 1, 1)] if g >= 3 else [])},
    }
    # partitions with exactly g parts sit at the boundary of the allowed range
    table["full_length_partitions"] = [lam for lam in table["V"] if lam.count(",") + 1 == g]
    if g <= 4:
        rank, ncols, _ = residue_matrix_rank(g, 2)
        table["Der_-2"] = ncols - rank
    return table


def cmd_dims(args) -> int:
    t = dims_table(args.genus)
    if args.json:
        sys.stdout.write(_dump(t))
        return EXIT_OK
    lines = [f"genus: {t['genus']}"]
    lines += [f"L_{k}: {v}" for k, v in t["L"].items()]
    lines += [f"J_{k}: {v}" for k, v in t["J"].items()]
    lines += [f"p({m}): {v}" for m, v in t["p"].items()]
    if "Der_-2" in t:
        lines.append(f"Der_-2: {t['Der_-2']}")
    flagged = set(t["full_length_partitions"])
    lines += [f"V{lam}: {v}" + ("  (l = g)" if lam in flagged else "") for lam, v in t["V"].items()]
    print("\n".join(lines))
    return EXIT_OK


def cmd_twist(args) -> int:
    from .monodromy import TwistDescriptor, pi_E, pi_Z, tau_tilde

    try:
        if len(set(args.points)) != len(args.points):
            raise ValueError("points must be distinct")
        if len(set(args.handles)) != len(args.handles):
            raise ValueError("handles must be distinct")
        D = TwistDescriptor(args.genus, args.side_genus, args.points, args.handles)
        D.check_point(args.q1)
        D.check_point(args.q2)
        pz = pi_Z(D, args.q1, args.q2)
    except ValueError as exc:
        raise UsageError(str(exc))
    t1, t2 = tau_tilde(D, args.q1), tau_tilde(D, args.q2)
    residual = (t2 - t1) - pz * (args.genus + 1)
    out = {
        "descriptor": D.as_dict(),
        "q1": args.q1,
        "q2": args.q2,
        "separates": D.separates(args.q1, args.q2),
        "tau_tilde_q1": _fmt_bivector(t1),
        "tau_tilde_q2": _fmt_bivector(t2),
        "pi_Z": _fmt_bivector(pz),
        "pi_E": _fmt_bivector(pi_E(D, args.q1, args.q2)),
        "theorem_A_residual": _fmt_bivector(residual),
        "residual_zero": not residual,
    }
    sys.stdout.write(_dump(out))
    return EXIT_OK if not residual else EXIT_FAIL


def cmd_span(args) -> int:
    from .class_span import FAMILIES, class_matrix, export_csv, span_report

    fam = FAMILIES[args.family](args.genus)
    rep = span_report(fam)
    if args.export:
        try:
            export_csv(class_matrix(fam), args.export)
        except OSError as exc:
            raise UsageError(f"cannot write {args.export}: {exc.strerror or exc}")
    d = rep.as_dict()
    d["schema_version"] = "1.0"
    d["tool_version"] = __version__
    _emit(_dump(d), args.out)
    return EXIT_OK if rep.ok else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    from .checks import MODULES
    from .class_span import FAMILIES

    p = argparse.ArgumentParser(prog="hypjohnson", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification checks and write a JSON report")
    v.add_argument("--genus", type=_genus, required=True)
    v.add_argument("--modules", help=f"comma-separated subset of: {','.join(MODULES)}")
    v.add_argument("--slow", action="store_true", help="include the expensive checks")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dims", help="print dimension tables")
    d.add_argument("--genus", type=_genus, required=True)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_dims)

    t = sub.add_parser("twist", help="monodromy values of one Dehn twist")
    t.add_argument("--genus", type=_genus, required=True)
    t.add_argument("--side-genus", type=int, required=True)
    t.add_argument("--points", type=_int_list, required=True)
    t.add_argument("--handles", type=_int_list, required=True)
    t.add_argument("--q1", type=int, required=True)
    t.add_argument("--q2", type=int, required=True)
    t.set_defaults(func=cmd_twist)

    s = sub.add_parser("span", help="ranks of the Weierstrass and Collino class matrices")
    s.add_argument("--genus", type=_genus, required=True)
    s.add_argument("--family", choices=sorted(FAMILIES), default="consecutive")
    s.add_argument("--export", help="write the class matrix as CSV")
    s.add_argument("--out", help="write the report here instead of stdout")
    s.set_defaults(func=cmd_span)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hypjohnson {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
