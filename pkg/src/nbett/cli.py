"""Command-line front end.

    nbett check FILE
    nbett norm  FILE -e EXPR -t TYPE
    nbett eq    FILE -a EXPR -b EXPR -t TYPE

Exit codes: 0 success or equal, 1 type error, 2 parse error, 3 not equal,
4 internal error (fuel exhausted or an invariant breach).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import nbe
from . import semantics as sem
from .config import DEFAULT_FUEL, Limits
from .elab import ElabError, Signature, check_type, elab_items, elab_type
from .oracle import rewrite_oracle
from .pretty import nf_text
from .surface import ParseError, parse, parse_expr

EXIT_OK, EXIT_TYPE, EXIT_PARSE, EXIT_NOT_EQUAL, EXIT_INTERNAL = 0, 1, 2, 3, 4


@dataclass
class CliConfig:
    command: str
    path: str
    exprs: tuple = ()
    type_expr: str | None = None
    json: bool = False
    limits: Limits = field(default_factory=Limits)
    oracle: bool = False  # report the rewrite oracle's verdict as well


@dataclass
class Report:
    command: str
    status: str = "ok"
    lines: list = field(default_factory=list)
    normal_form: str | None = None
    diagnostics: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def error(self, status: str, message: str, line: int = 0, col: int = 0):
        self.status = status
        self.diagnostics.append({"line": line, "col": col, "message": message})

    def as_json(self) -> str:
        out = {"command": self.command, "status": self.status}
        if self.normal_form is not None:
            out["normal_form"] = self.normal_form
        out.update(self.extra)
        out["diagnostics"] = self.diagnostics
        return json.dumps(out, sort_keys=True, ensure_ascii=False)


_STATUS_CODES = {
    "ok": EXIT_OK,
    "equal": EXIT_OK,
    "type-error": EXIT_TYPE,
    "parse-error": EXIT_PARSE,
    "not-equal": EXIT_NOT_EQUAL,
    "internal-error": EXIT_INTERNAL,
}


def _load_signature(cfg: CliConfig, report: Report) -> Signature:
    with open(cfg.path, encoding="utf-8") as fh:
        items = parse(fh.read())
    sig, checked = elab_items(items)
    if cfg.command == "check":
        report.lines += [f"ok {type(c.item).__name__.lower()} at {c.item.pos[0]}:{c.item.pos[1]}" for c in checked]
    return sig


def _elab_at(sig: Signature, expr: str, ty):
    return check_type(sig, parse_expr(expr), ty)


def run(cfg: CliConfig) -> Report:
    report = Report(cfg.command)
    try:
        with sem.fuel(cfg.limits.fuel):
            sig = _load_signature(cfg, report)
            if cfg.command == "norm":
                ty = elab_type(sig, parse_expr(cfg.type_expr))
                nf = nbe.norm(sig.ctx, ty, _elab_at(sig, cfg.exprs[0], ty))
                report.normal_form = nf_text(nf, sig.names)
                report.lines.append(report.normal_form)
            elif cfg.command == "eq":
                ty = elab_type(sig, parse_expr(cfg.type_expr))
                t0, t1 = (_elab_at(sig, e, ty) for e in cfg.exprs)
                res = nbe.conv(sig.ctx, ty, t0, t1)
                if res:
                    report.status = "equal"
                    report.lines.append("equal")
                else:
                    report.status = "not-equal"
                    lhs = nf_text(nbe.norm(sig.ctx, ty, t0), sig.names)
                    rhs = nf_text(nbe.norm(sig.ctx, ty, t1), sig.names)
                    report.lines += ["not equal", f"  lhs: {lhs}", f"  rhs: {rhs}"]
                    report.extra = {"lhs": lhs, "rhs": rhs}
                if cfg.oracle:
                    verdict = rewrite_oracle(sig.ctx, ty, t0, t1, cfg.limits.oracle_depth).value
                    report.lines.append(f"oracle: {verdict}")
                    report.extra["oracle"] = verdict
    except ParseError as err:
        report.error("parse-error", err.message, err.line, err.col)
    except ElabError as err:
        report.error("type-error", err.message, err.line, err.col)
    except sem.FuelExhausted as err:
        report.error("internal-error", str(err))
    except sem.EvalError as err:
        report.error("internal-error", f"evaluation got stuck: {err}")
    except RecursionError:
        report.error("internal-error", "recursion limit exceeded")
    return report


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--fuel", type=int, default=DEFAULT_FUEL, help="evaluation step budget")
    common.add_argument(
        "--oracle-depth", type=int, default=None,
        help="also report the rewrite oracle's verdict, searching this deep",
    )
    parser = argparse.ArgumentParser(prog="nbett", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", parents=[common], help="check every item of a file")
    p.add_argument("file")
    p = sub.add_parser("norm", parents=[common], help="normalise an expression")
    p.add_argument("file")
    p.add_argument("-e", "--expr", required=True)
    p.add_argument("-t", "--type", required=True)
    p = sub.add_parser("eq", parents=[common], help="decide definitional equality")
    p.add_argument("file")
    p.add_argument("-a", required=True)
    p.add_argument("-b", required=True)
    p.add_argument("-t", "--type", required=True)
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    exprs = {"check": (), "norm": (getattr(args, "expr", None),), "eq": (getattr(args, "a", None), getattr(args, "b", None))}
    depth = args.oracle_depth
    limits = Limits(fuel=args.fuel) if depth is None else Limits(fuel=args.fuel, oracle_depth=depth)
    return CliConfig(args.command, args.file, exprs[args.command], getattr(args, "type", None), args.json, limits, depth is not None)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = config_from_args(args)
    try:
        report = run(cfg)
    except OSError as err:
        report = Report(cfg.command)
        report.error("internal-error", f"cannot read {cfg.path}: {err.strerror}")
    if cfg.json:
        print(report.as_json())
    else:
        for line in report.lines:
            print(line)
        for d in report.diagnostics:
            where = f"{cfg.path}:{d['line']}:{d['col']}: " if d["line"] else f"{cfg.path}: "
            print(f"{where}{report.status}: {d['message']}", file=sys.stderr)
    return _STATUS_CODES[report.status]


if __name__ == "__main__":
    sys.exit(main())
