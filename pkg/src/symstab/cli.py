"""Batch command-line surface.

Subcommands: convert, inner, chartable, table1, stab, qtkostka, shuffle,
macdonald, figures.  Output formats: table (default), json, csv, latex.
Identical invocations produce byte-identical output; progress goes to
stderr only.

Exit codes: 0 success, 2 usage or parse error, 3 resource cap exceeded,
4 internal invariant violation (a bug or regression).

The degree cap defaults to 12 and may be overridden per command with
--cap or globally with the SYMSTAB_DEGREE_CAP environment variable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import bases, figures, macdonald, shuffle, stability
from .bases import CapExceeded, InvariantViolation
from .partitions import Composition, Partition, partitions_of
from .qt import QtPolynomial
from .symfunc import SymFunc

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_INVARIANT = 4


class _UsageError(Exception):
    pass


def _env_cap() -> int | None:
    raw = os.environ.get("SYMSTAB_DEGREE_CAP")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise _UsageError(f"bad SYMSTAB_DEGREE_CAP value {raw!r}") from exc


def _effective_cap(args) -> int | None:
    if getattr(args, "cap", None) is not None:
        return args.cap
    return _env_cap()


def _parse_partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc


def _parse_composition(text: str) -> Composition:
    try:
        return Composition.parse(text)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc


def _parse_symfunc(basis: str, expr: str, cap: int | None) -> SymFunc:
    expr = expr.strip()
    if expr.startswith("{"):
        try:
            return SymFunc.from_json(json.loads(expr))
        except (ValueError, KeyError, TypeError) as exc:
            raise _UsageError(f"bad symmetric-function JSON: {exc}") from exc
    lam = _parse_partition(expr)
    limit = bases.DEFAULT_DEGREE_CAP if cap is None else cap
    if lam.size > limit:
        raise CapExceeded(f"degree {lam.size} exceeds cap {limit}")
    return SymFunc.basis_element(basis, lam)


# ---------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------


def _render_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in rows:
        lines.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def _render_csv(headers: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue()


def _render_latex(headers: list[str], rows: list[list[str]]) -> str:
    cols = "l" * len(headers)
    lines = [f"\\begin{{tabular}}{{{cols}}}"]
    lines.append(" & ".join(headers) + r" \\")
    lines.append(r"\hline")
    for row in rows:
        lines.append(" & ".join(row) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def _emit(args, headers: list[str], rows: list[list[str]], payload: dict, plain: str | None = None):
    fmt = args.format
    if fmt == "json":
        text = json.dumps(payload, indent=2) + "\n"
    elif fmt == "csv":
        text = _render_csv(headers, rows)
    elif fmt == "latex":
        text = _render_latex(headers, rows)
    else:
        text = plain if plain is not None else _render_table(headers, rows)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _poly_str(p: QtPolynomial) -> str:
    return str(p)


def _expansion_plain(f: SymFunc) -> str:
    return str(f) + "\n"


# ---------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------


def _cmd_convert(args) -> int:
    cap = _effective_cap(args)
    frm = bases.normalize_basis_tag(args.frm)
    to = bases.normalize_basis_tag(args.to)
    f = _parse_symfunc(frm, args.expr, cap)
    out = f.convert(to, cap=cap)
    rows = [[lam.text(), _poly_str(out.coefficient(to, lam))] for lam in out.support()]
    _emit(args, ["partition", "coefficient"], rows, out.to_json(), plain=_expansion_plain(out))
    return EXIT_OK


def _cmd_inner(args) -> int:
    cap = _effective_cap(args)
    fa = _parse_symfunc(bases.normalize_basis_tag(args.basis_a), args.expr_a, cap)
    fb = _parse_symfunc(bases.normalize_basis_tag(args.basis_b), args.expr_b, cap)
    if fa.degree != fb.degree:
        raise _UsageError("inner product requires equal degrees")
    value = fa.hall_inner(fb)
    _emit(
        args,
        ["inner"],
        [[_poly_str(value)]],
        {"inner": value.to_json()},
        plain=_poly_str(value) + "\n",
    )
    return EXIT_OK


def _cmd_chartable(args) -> int:
    cap = _effective_cap(args)
    limit = bases.DEFAULT_DEGREE_CAP if cap is None else cap
    if args.n > limit:
        raise CapExceeded(f"degree {args.n} exceeds cap {limit}")
    parts = partitions_of(args.n)
    table = bases.character_table(args.n)
    headers = ["shape\\cycle"] + [mu.text() for mu in parts]
    rows = [[parts[i].text()] + [str(v) for v in row] for i, row in enumerate(table)]
    payload = {
        "degree": args.n,
        "partitions": [list(p) for p in parts],
        "table": table,
    }
    _emit(args, headers, rows, payload)
    return EXIT_OK


def _cmd_table1(args) -> int:
    reports = []
    for frm in bases.BASIS_TAGS:
        for to in bases.BASIS_TAGS:
            if frm == to:
                continue
            print(f"checking {frm} -> {to} ...", file=sys.stderr)
            reports.append(stability.check_transfer_conditions(frm, to, args.size_bound, args.horizon))
    headers = ["from", "to", "expected", "empirical", "verdict", "notes"]
    rows = []
    any_contradiction = False
    for rep in reports:
        emp = sorted(i for i, c in rep.conditions().items() if c.holds_empirically)
        verdict = "ok" if rep.consistent else "CONTRADICTION"
        any_contradiction = any_contradiction or not rep.consistent
        rows.append(
            [
                rep.from_basis,
                rep.to_basis,
                ",".join(str(i) for i in sorted(rep.expected)) or "-",
                ",".join(str(i) for i in emp) or "-",
                verdict,
                "; ".join(rep.notes),
            ]
        )
    payload = {
        "size_bound": args.size_bound,
        "horizon": args.horizon,
        "reports": [rep.to_json() for rep in reports],
    }
    _emit(args, headers, rows, payload)
    if any_contradiction:
        raise InvariantViolation("transfer-condition table contradicts expectations")
    return EXIT_OK


def _make_family(args) -> stability.SymFuncSequence:
    fam = args.family
    if fam == "coinv":
        if args.i is None:
            raise _UsageError("--i is required for the coinv family")
        return stability.coinvariant_sequence(args.i)
    if fam == "dr":
        if args.i is None or args.j is None:
            raise _UsageError("--i and --j are required for the dr family")
        return stability.dr_sequence(args.i, args.j)
    if fam == "macdonald":
        if args.i is None or args.j is None or args.mu is None:
            raise _UsageError("--mu, --i and --j are required for the macdonald family")
        return stability.macdonald_sequence(_parse_partition(args.mu), args.i, args.j)
    if fam == "fixture-V":
        return stability.counterexample_sequence()
    raise _UsageError(f"unknown family {fam!r}")


def _cmd_stab(args) -> int:
    seq = _make_family(args)
    basis = bases.normalize_basis_tag(args.basis)
    print(f"scanning {seq.label} in basis {basis} to horizon {args.horizon} ...", file=sys.stderr)
    report = stability.build_stability_report(seq, basis, args.horizon)
    headers = ["core", "observed_range", "stable_value", "proven_bound", "certified"]
    rows = []
    for lam, entry in report.per_lambda.items():
        obs = entry["observed"]
        rows.append(
            [
                lam.text(),
                "unstable" if obs.stable_from is None else str(obs.stable_from),
                "-" if obs.stable_value is None else _poly_str(obs.stable_value),
                "-" if entry["proven_bound"] is None else str(entry["proven_bound"]),
                "yes" if entry["certified"] else "no",
            ]
        )
    summary = (
        f"label: {report.label}\nbasis: {report.basis}\nhorizon: {report.horizon}\n"
        f"observed weight: {report.observed_weight} (horizon-limited)\n"
        f"uniform observed range: {report.uniform_observed}\n"
        f"uniform proven bound: {report.uniform_proven}\n"
        f"certified uniform: {'yes' if report.certified_uniform else 'no'}\n"
    )
    plain = summary + _render_table(headers, rows)
    _emit(args, headers, rows, report.to_json(), plain=plain)
    return EXIT_OK


def _cmd_qtkostka(args) -> int:
    cap = _effective_cap(args)
    lam = _parse_partition(args.lam)
    nu = _parse_partition(args.nu)
    value = macdonald.qt_kostka(lam, nu, cap=cap)
    _emit(
        args,
        ["qt_kostka"],
        [[_poly_str(value)]],
        {"lam": list(lam), "nu": list(nu), "value": value.to_json()},
        plain=_poly_str(value) + "\n",
    )
    return EXIT_OK


def _cmd_shuffle(args) -> int:
    cap = _effective_cap(args)
    alpha = _parse_composition(args.alpha)
    if (args.dinv is None) != (args.area is None):
        raise _UsageError("--dinv and --area must be given together")
    if args.dinv is not None:
        count = shuffle.shuffle_h_coefficient(args.n, alpha, args.dinv, args.area, cap=cap)
        payload = {
            "n": args.n,
            "alpha": list(alpha),
            "dinv": args.dinv,
            "area": args.area,
            "count": count,
        }
        _emit(args, ["count"], [[str(count)]], payload, plain=f"{count}\n")
        return EXIT_OK
    dist = shuffle.shuffle_distribution(args.n, alpha, cap=cap)
    rows = [[str(i), str(j), str(c)] for (i, j), c in sorted(dist.items())]
    payload = {
        "n": args.n,
        "alpha": list(alpha),
        "distribution": [[i, j, c] for (i, j), c in sorted(dist.items())],
    }
    _emit(args, ["dinv", "area", "count"], rows, payload)
    return EXIT_OK


def _cmd_macdonald(args) -> int:
    cap = _effective_cap(args)
    nu = _parse_partition(args.nu)
    basis = bases.normalize_basis_tag(args.basis)
    poly = macdonald.macdonald_polynomial(nu, cap=cap)
    if basis != "m":
        poly = poly.convert(basis, cap=max(nu.size, cap or bases.DEFAULT_DEGREE_CAP))
    rows = [[lam.text(), _poly_str(poly.coefficient(basis, lam))] for lam in poly.support()]
    _emit(args, ["partition", "coefficient"], rows, poly.to_json(), plain=_expansion_plain(poly))
    return EXIT_OK


def _cmd_figures(args) -> int:
    results = figures.check_figures()
    headers = ["fixture", "status", "detail"]
    rows = []
    bad = False
    for name, problems in results.items():
        if problems:
            bad = True
            rows.append([name, "MISMATCH", "; ".join(problems)])
        else:
            rows.append([name, "ok", ""])
    payload = {"results": {name: probs for name, probs in results.items()}}
    _emit(args, headers, rows, payload)
    if bad:
        raise InvariantViolation("figure fixtures drifted")
    return EXIT_OK


# ---------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("table", "json", "csv", "latex"), default="table")
    p.add_argument("--out", default=None, help="write the data stream to a file")
    p.add_argument("--cap", type=int, default=None, help="degree cap override")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symstab",
        description="Exact symmetric-function expansions and stabilization scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="expand a basis element in another basis")
    p.add_argument("--from", dest="frm", required=True)
    p.add_argument("--expr", required=True, help="partition literal like [2,1], or SymFunc JSON")
    p.add_argument("--to", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("inner", help="Hall inner product of two expressions")
    p.add_argument("--basis-a", required=True)
    p.add_argument("--expr-a", required=True)
    p.add_argument("--basis-b", required=True)
    p.add_argument("--expr-b", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_inner)

    p = sub.add_parser("chartable", help="character table of the symmetric group")
    p.add_argument("n", type=int)
    _add_common(p)
    p.set_defaults(func=_cmd_chartable)

    p = sub.add_parser("table1", help="verify the transfer-condition classification")
    p.add_argument("--size-bound", type=int, default=4)
    p.add_argument("--horizon", type=int, default=12)
    _add_common(p)
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("stab", help="stability report for a shipped family")
    p.add_argument("--family", choices=("coinv", "dr", "macdonald", "fixture-V"), required=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--mu", default=None)
    p.add_argument("--basis", default="s")
    p.add_argument("--horizon", type=int, default=14)
    _add_common(p)
    p.set_defaults(func=_cmd_stab)

    p = sub.add_parser("qtkostka", help="q,t-Kostka coefficient")
    p.add_argument("--lam", required=True)
    p.add_argument("--nu", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_qtkostka)

    p = sub.add_parser("shuffle", help="shuffle-path counts (cost grows fast with n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--dinv", type=int, default=None)
    p.add_argument("--area", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_shuffle)

    p = sub.add_parser("macdonald", help="modified Macdonald expansion (cost grows fast)")
    p.add_argument("--nu", required=True)
    p.add_argument("--basis", default="m")
    _add_common(p)
    p.set_defaults(func=_cmd_macdonald)

    p = sub.add_parser("figures", help="recompute the shipped worked examples and diff")
    _add_common(p)
    p.set_defaults(func=_cmd_figures)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
