"""Command-line front end: ``genus``, ``sweep`` and ``table`` subcommands.

Exit codes: 0 success, 1 a check or oracle comparison failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import __version__
from .arith import format_rational
from .checks import CHECK_IDS, SweepConfig, enumerate_cis, run_checks
from .ci import CompleteIntersection, TwistedGenusQuery, normalize, parse_ci
from .closed import ahat_closed, ak_closed, chi_K_closed, todd_closed
from .oracles import (
    GenusLabel,
    ak_genfun,
    build_q_series,
    chi_twist_genfun,
    chi_y_polynomial,
    euler_characteristic,
    genus_chern_root,
    signature,
    todd_genfun,
)

GENERA = ("todd", "euler", "signature", "chi-y", "ahat", "ak", "chi-k")
ORACLES = ("closed", "genfun", "chern-root")
TABLE_COLUMNS = ("n", "r", "degrees", "c1", "genus_label", "k", "N", "value")


class UsageError(ValueError):
    pass


def _chern(ci: CompleteIntersection, label: GenusLabel) -> Fraction:
    return genus_chern_root(ci, build_q_series(label, ci.n))


def _ahat_genfun(ci: CompleteIntersection) -> Fraction:
    return ak_genfun(ci, 2) / 2**ci.n


def oracle_table(ci: CompleteIntersection, genus: str, k: int, level: int, ak_k: int
                 ) -> dict[str, Callable[[], Fraction]]:
    """Available computation routes for ``genus`` on ``ci``, keyed by oracle name."""
    if genus == "todd":
        return {
            "closed": lambda: todd_closed(ci),
            "genfun": lambda: todd_genfun(ci),
            "chern-root": lambda: _chern(ci, GenusLabel.todd()),
        }
    if genus == "chi-k":
        query = TwistedGenusQuery(ci, k, level)
        routes = {
            "closed": lambda: chi_K_closed(query),
            "chern-root": lambda: _chern(ci, GenusLabel.level(k, level)),
        }
        if (ci.c1 * k) % level == 0:
            routes["genfun"] = lambda: chi_twist_genfun(ci, -ci.c1 * k // level)
        return routes
    if genus == "ak":
        return {
            "closed": lambda: ak_closed(ci, ak_k),
            "genfun": lambda: ak_genfun(ci, ak_k),
            "chern-root": lambda: _chern(ci, GenusLabel.ak(ak_k)),
        }
    if genus == "ahat":
        return {
            "closed": lambda: ahat_closed(ci),
            "genfun": lambda: _ahat_genfun(ci),
            "chern-root": lambda: _chern(ci, GenusLabel.ahat()),
        }
    if genus == "euler":
        return {"genfun": lambda: euler_characteristic(ci)}
    if genus == "signature":
        return {"genfun": lambda: signature(ci)}
    raise UsageError(f"unknown genus {genus!r}")


def _genus_label(genus: str, k: int, level: int, ak_k: int) -> str:
    if genus == "chi-k":
        return f"chi-k({k}/{level})"
    if genus == "ak":
        return f"A_{ak_k}"
    return genus


# -- config handling ---------------------------------------------------------

def read_config_file(path: str) -> dict[str, str]:
    """Flat ``key=value`` lines; ``#`` starts a comment. Keys match long flag names."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            values[key.lstrip("-").replace("-", "_")] = value
    return values


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in str(text).split(",") if tok.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _resolve_ci(args: argparse.Namespace) -> CompleteIntersection:
    if args.ci and args.dim is not None:
        raise UsageError("give either --ci or --dim/--degrees, not both")
    if args.ci:
        return parse_ci(args.ci)
    if args.dim is None:
        raise UsageError("a complete intersection is required: --ci 'X3(5)' or --dim 3 --degrees 5")
    return normalize(int(args.dim), _int_list(args.degrees or ""))


def _sweep_config(args: argparse.Namespace) -> SweepConfig:
    checks = tuple(c for c in _split_ids(args.checks)) if args.checks else CHECK_IDS
    return SweepConfig(
        n_min=int(args.n_min),
        n_max=int(args.n_max),
        r_max=int(args.r_max),
        d_max=int(args.d_max),
        levels=_int_list(args.levels),
        ak_ks=_int_list(args.ak_ks),
        checks=checks,
        four_term_samples=int(args.four_term_samples),
        seed=int(args.seed),
    )


def _split_ids(text: str) -> list[str]:
    return [tok.strip() for tok in str(text).split(",") if tok.strip()]


# -- output ------------------------------------------------------------------

def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(payload: object) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _metadata(command: str, config: dict) -> dict:
    return {"tool": "cigenera", "version": __version__, "command": command, "config": config}


# -- subcommands ---------------------------------------------------------------

def cmd_genus(args: argparse.Namespace) -> int:
    ci = _resolve_ci(args)
    genus = args.genus
    label = _genus_label(genus, args.k, args.level, args.ak_k)
    config = {"ci": str(ci), "genus": genus, "k": args.k, "level": args.level,
              "ak_k": args.ak_k, "twist": args.twist, "oracle": args.oracle}

    if genus == "chi-y":
        if args.oracle not in ("genfun", "all", None):
            raise UsageError("chi-y is only available through the generating function")
        poly = chi_y_polynomial(ci, args.twist)
        coeffs = [format_rational(c) for c in poly.coefficients]
        if args.format == "json":
            _emit(_json_text({"metadata": _metadata("genus", config), "ci": str(ci), "c1": ci.c1,
                              "genus_label": "chi-y", "coefficients": coeffs}), args.out)
        elif args.format == "csv":
            _emit(_csv_text(("p", "chi_p"), list(enumerate(coeffs))), args.out)
        else:
            _emit(" ".join(coeffs) + "\n", args.out)
        return 0

    if genus == "chi-k":
        if args.level is None or args.k is None:
            raise UsageError("chi-k needs --k and --level")
        TwistedGenusQuery(ci, args.k, args.level)
    if genus == "ak" and (args.ak_k is None or args.ak_k < 1):
        raise UsageError("ak needs --ak-k >= 1")

    routes = oracle_table(ci, genus, args.k, args.level, args.ak_k)
    requested = args.oracle or ("closed" if "closed" in routes else "genfun")
    names = [o for o in ORACLES if o in routes] if requested == "all" else [requested]
    missing = [o for o in names if o not in routes]
    if missing:
        raise UsageError(f"oracle {missing[0]!r} is not available for {label} on {ci}")
    values = [(name, routes[name]()) for name in names]
    agree = len({v for _, v in values}) == 1

    if args.format == "json":
        _emit(_json_text({
            "metadata": _metadata("genus", config),
            "ci": str(ci), "c1": ci.c1, "genus_label": label,
            "values": {name: format_rational(v) for name, v in values},
            "agree": agree,
        }), args.out)
    elif args.format == "csv":
        _emit(_csv_text(("ci", "c1", "genus_label", "oracle", "value"),
                        [(str(ci), ci.c1, label, name, format_rational(v)) for name, v in values]), args.out)
    else:
        _emit(",".join(format_rational(v) for _, v in values) + "\n", args.out)
    if not agree:
        print(f"oracle disagreement for {label} on {ci}", file=sys.stderr)
        return 1
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _sweep_config(args)
    reports = run_checks(cfg)
    total = sum(len(r.violations) for r in reports)
    if args.format == "json":
        _emit(_json_text({
            "metadata": _metadata("sweep", cfg.as_dict()),
            "reports": [r.as_dict() for r in reports],
            "total_violations": total,
        }), args.out)
    elif args.format == "csv":
        _emit(_csv_text(("check", "instances", "assertions", "violations"),
                        [(r.check, r.instances, r.assertions, len(r.violations)) for r in reports]), args.out)
    else:
        lines = []
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{status} {r.check}: instances={r.instances} assertions={r.assertions} "
                         f"violations={len(r.violations)}")
            for v in sorted(r.violations, key=lambda v: v.sort_key()):
                params = " ".join(f"{k}={val}" for k, val in v.params)
                lines.append(f"    {v.ci} {params} :: {v.relation} :: lhs={v.lhs} rhs={v.rhs}")
        lines.append(f"total violations: {total}")
        _emit("\n".join(lines) + "\n", args.out)
    return 1 if total else 0


def table_rows(cfg: SweepConfig, genus: str, ak_k: int, twist: int = 0) -> list[tuple]:
    rows = []
    for ci in enumerate_cis(cfg):
        degrees = ";".join(map(str, ci.degrees))
        base = (ci.n, ci.r, degrees, ci.c1)
        if genus == "chi-k":
            for N in cfg.levels:
                for k in range(N + 1):
                    value = chi_K_closed(TwistedGenusQuery(ci, k, N))
                    rows.append(base + ("chi-k", k, N, format_rational(value)))
        elif genus == "chi-y":
            poly = chi_y_polynomial(ci, twist)
            value = ";".join(format_rational(c) for c in poly.coefficients)
            rows.append(base + ("chi-y", "", "", value))
        elif genus == "ak":
            rows.append(base + (f"A_{ak_k}", ak_k, "", format_rational(ak_closed(ci, ak_k))))
        else:
            routes = oracle_table(ci, genus, 0, 1, ak_k)
            route = routes.get("closed") or routes["genfun"]
            rows.append(base + (genus, "", "", format_rational(route())))
    return rows


def cmd_table(args: argparse.Namespace) -> int:
    cfg = _sweep_config(args)
    ak_k = args.ak_k if args.ak_k is not None else 2
    rows = table_rows(cfg, args.genus, ak_k, args.twist)
    if args.format == "json":
        config = cfg.as_dict() | {"genus": args.genus, "ak_k": ak_k, "twist": args.twist}
        _emit(_json_text({"metadata": _metadata("table", config),
                          "rows": [dict(zip(TABLE_COLUMNS, row)) for row in rows]}), args.out)
    elif args.format == "csv":
        _emit(_csv_text(TABLE_COLUMNS, rows), args.out)
    else:
        lines = [f"X{n}({deg.replace(';', ',')}) c1={c1} {label}"
                 + (f" k={k}" if k != "" else "") + (f" N={N}" if N != "" else "") + f" = {value}"
                 for n, _r, deg, c1, label, k, N, value in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


# -- parser ------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="flat key=value file; command-line flags override it")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out", help="write output to PATH instead of stdout")


def _add_range(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--r-max", type=int, default=3)
    p.add_argument("--d-max", type=int, default=6)
    p.add_argument("--levels", default="2,3,4,5,6", help="comma-separated levels N")
    p.add_argument("--ak-ks", default="2,3,4", help="comma-separated k for A_k checks")
    p.add_argument("--checks", default=",".join(CHECK_IDS), help=f"subset of {','.join(CHECK_IDS)}")
    p.add_argument("--four-term-samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cigenera", description="Hirzebruch genera of complete intersections")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("genus", help="compute one genus of one complete intersection")
    _add_common(g)
    g.add_argument("--ci", help="e.g. 'X3(5,2,2)' or 'n=3 d=5,2,2'")
    g.add_argument("--dim", type=int)
    g.add_argument("--degrees", default="")
    g.add_argument("--genus", choices=GENERA, default="todd")
    g.add_argument("--k", type=int, default=None)
    g.add_argument("--level", type=int, default=None)
    g.add_argument("--ak-k", type=int, default=None)
    g.add_argument("--twist", type=int, default=0, help="line bundle twist for chi-y")
    g.add_argument("--oracle", choices=ORACLES + ("all",), default=None)
    g.set_defaults(func=cmd_genus)

    s = sub.add_parser("sweep", help="verify the theorems over a parameter range")
    _add_common(s)
    _add_range(s)
    s.set_defaults(func=cmd_sweep)

    t = sub.add_parser("table", help="emit a value table over a parameter range")
    _add_common(t)
    _add_range(t)
    t.add_argument("--genus", choices=GENERA, default="todd")
    t.add_argument("--ak-k", type=int, default=None)
    t.add_argument("--twist", type=int, default=0)
    t.set_defaults(func=cmd_table)
    return parser


_INT_KEYS = {"dim", "k", "level", "ak_k", "twist", "n_min", "n_max", "r_max", "d_max", "four_term_samples", "seed"}


def parse_args(argv: Sequence[str] | None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "config", None):
        file_values = read_config_file(args.config)
        sub = parser._subparsers._group_actions[0].choices[args.command]  # type: ignore[union-attr]
        known = {a.dest for a in sub._actions}
        unknown = set(file_values) - known
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        defaults = {k: (int(v) if k in _INT_KEYS else v) for k, v in file_values.items()}
        sub.set_defaults(**defaults)
        args = parser.parse_args(argv)
    return args


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code) if isinstance(exc.code, int) else 2
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
