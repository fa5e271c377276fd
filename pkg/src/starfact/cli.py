"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import oracle, verify
from .combinatorics import Partition, format_partition, parse_partition
from .errors import DomainError, PartitionParseError, ResourceLimitError
from .starformulas import double_hurwitz_H, hurwitz_number_b, q_monomials, star_number_a

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

CSV_COLUMNS = {
    "qtable": ["g", "beta", "monomial", "coefficient"],
    "astar": ["alpha", "g", "r", "a"],
    "bhurwitz": ["alpha", "g", "r", "b", "H"],
    "census": ["kind", "n", "r", "class", "count", "min", "max", "uniform"],
    "verify": ["check", "inputs", "expected", "got", "passed"],
}


@dataclass
class RunConfig:
    command: str
    params: dict
    output_format: str = "text"
    budget: int | None = None
    pivot: str = "n"
    verbose: bool = False


@dataclass
class Output:
    command: str
    params: dict
    results: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"command": self.command, "params": self.params, "results": self.results, "checks": self.checks}


def rational_str(x) -> str:
    """``"p/q"``, or ``"k"`` when the denominator is 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def monomial_label(beta: Partition) -> str:
    if not beta:
        return "1"
    counts: dict[int, int] = {}
    for part in beta:
        counts[part] = counts.get(part, 0) + 1
    return "·".join(
        f"q_{2 * part}" + (f"^{mult}" if mult > 1 else "") for part, mult in counts.items()
    )


def emit_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def cmd_qtable(gmax: int) -> Output:
    if gmax < 0:
        raise DomainError("gmax must be >= 0")
    rows = []
    for g in range(gmax + 1):
        for beta, coeff in q_monomials(g).items():
            rows.append({
                "g": g,
                "beta": format_partition(beta),
                "monomial": monomial_label(beta),
                "coefficient": rational_str(coeff),
            })
    return Output("qtable", {"gmax": gmax}, rows)


def _genera(gmax, g):
    if g is not None:
        if g < 0:
            raise DomainError("g must be >= 0")
        return [g]
    if gmax < 0:
        raise DomainError("gmax must be >= 0")
    return list(range(gmax + 1))


def cmd_astar(alpha: Partition, gmax: int, g: int | None = None) -> Output:
    if not alpha:
        raise DomainError("alpha must be a nonempty partition")
    n, m = alpha.n, alpha.length
    rows = [
        {"alpha": format_partition(alpha), "g": h, "r": n + m - 2 + 2 * h, "a": rational_str(star_number_a(alpha, h))}
        for h in _genera(gmax, g)
    ]
    return Output("astar", {"alpha": format_partition(alpha), "gmax": gmax, "g": g}, rows)


def cmd_bhurwitz(alpha: Partition, gmax: int, g: int | None = None) -> Output:
    if not alpha:
        raise DomainError("alpha must be a nonempty partition")
    m = alpha.length
    rows = [
        {
            "alpha": format_partition(alpha),
            "g": h,
            "r": m - 1 + 2 * h,
            "b": rational_str(hurwitz_number_b(alpha, h)),
            "H": rational_str(double_hurwitz_H(alpha, h)),
        }
        for h in _genera(gmax, g)
    ]
    return Output("bhurwitz", {"alpha": format_partition(alpha), "gmax": gmax, "g": g}, rows)


def cmd_census(n: int, r: int, kind: str, budget=None, pivot="n") -> Output:
    if kind == "star":
        census = oracle.census_star_words(n, r, budget=budget, pivot=pivot)
    elif kind == "hurwitz":
        census = oracle.census_hurwitz_words(n, r, budget=budget)
    else:
        raise DomainError(f"unknown census kind {kind!r}")
    rows = [
        {
            "kind": kind, "n": n, "r": r, "class": format_partition(alpha),
            "count": c.count, "min": c.min, "max": c.max, "uniform": c.uniform,
        }
        for alpha, c in census.counts.items()
    ]
    params = {"n": n, "r": r, "kind": kind}
    if kind == "star":
        params["pivot"] = pivot
    return Output("census", params, rows)


def cmd_verify(suite: str, nmax: int, rmax: int, gmax: int, budget=None, pivot="n") -> Output:
    checks = verify.run_suite(suite, nmax, rmax, gmax, budget=budget, pivot=pivot)
    rows = [
        {"check": c.name, "inputs": c.inputs, "expected": c.expected, "got": c.got, "passed": c.passed}
        for c in checks
    ]
    failed = sum(not c.passed for c in checks)
    summary = {"suite": suite, "checks": len(checks), "failed": failed, "status": "PASS" if not failed else "FAIL"}
    return Output("verify", {"suite": suite, "nmax": nmax, "rmax": rmax, "gmax": gmax, "pivot": pivot}, [summary], rows)


def _csv(out: Output) -> str:
    buf = io.StringIO()
    rows = out.checks if out.command == "verify" else out.results
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS[out.command], lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in row.items()})
    return buf.getvalue()


def _text(out: Output, verbose: bool) -> str:
    lines = []
    if out.command == "qtable":
        by_g: dict[int, list[str]] = {}
        for row in out.results:
            by_g.setdefault(row["g"], []).append(
                row["coefficient"] if row["monomial"] == "1" else f"{row['coefficient']} · {row['monomial']}"
            )
        for g, terms in by_g.items():
            lines.append(f"g={g}: " + " + ".join(terms).replace("+ -", "- "))
    elif out.command == "verify":
        s = out.results[0]
        if verbose:
            for c in out.checks:
                mark = "ok  " if c["passed"] else "FAIL"
                lines.append(f"{mark} {c['check']} {c['inputs']} expected={c['expected']} got={c['got']}")
        elif s["failed"]:
            for c in out.checks:
                if not c["passed"]:
                    lines.append(f"FAIL {c['check']} {c['inputs']} expected={c['expected']} got={c['got']}")
        lines.append(f"verify {s['suite']}: {s['status']} ({s['checks']} checks, {s['failed']} failed)")
    else:
        cols = CSV_COLUMNS[out.command]
        table = [cols] + [[str(row[c]) for c in cols] for row in out.results]
        widths = [max(len(r[i]) for r in table) for i in range(len(cols))]
        for r in table:
            lines.append("  ".join(v.rjust(w) for v, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render(out: Output, fmt: str, verbose: bool = False) -> str:
    if fmt == "json":
        return emit_json(out.as_dict())
    if fmt == "csv":
        return _csv(out)
    return _text(out, verbose)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    common.add_argument("--budget", type=int, default=None, help="word budget (default: $STARFACT_BUDGET or 1e8)")
    common.add_argument("--pivot", choices=["n", "one"], default="n")
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="starfact", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qtable", parents=[common], help="q-monomial expansion of Q_0..Q_gmax")
    p.add_argument("--gmax", type=int, default=5)

    for name, helptext in (("astar", "star factorization numbers a_g(alpha)"),
                           ("bhurwitz", "scaled double Hurwitz numbers b_g(alpha)")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--alpha", required=True, help='partition such as "3,2,1"')
        p.add_argument("--gmax", type=int, default=3)
        p.add_argument("--g", type=int, default=None, help="single genus instead of 0..gmax")

    p = sub.add_parser("verify", parents=[common], help="run a cross-verification suite")
    p.add_argument("suite", nargs="?", default="all", choices=[*verify.SUITES, "all"])
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--rmax", type=int, default=9)
    p.add_argument("--gmax", type=int, default=3)

    p = sub.add_parser("census", parents=[common], help="brute-force factorization census")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kind", choices=["star", "hurwitz"], default="star")
    return parser


def run(cfg: RunConfig) -> Output:
    p = cfg.params
    if cfg.budget is not None and cfg.budget < 1:
        raise DomainError("budget must be >= 1")
    if cfg.command == "qtable":
        return cmd_qtable(p["gmax"])
    if cfg.command == "astar":
        return cmd_astar(parse_partition(p["alpha"]), p["gmax"], p["g"])
    if cfg.command == "bhurwitz":
        return cmd_bhurwitz(parse_partition(p["alpha"]), p["gmax"], p["g"])
    if cfg.command == "census":
        return cmd_census(p["n"], p["r"], p["kind"], cfg.budget, cfg.pivot)
    if cfg.command == "verify":
        if min(p["nmax"], p["rmax"], p["gmax"]) < 0:
            raise DomainError("ranges must be non-negative")
        return cmd_verify(p["suite"], p["nmax"], p["rmax"], p["gmax"], cfg.budget, cfg.pivot)
    raise DomainError(f"unknown command {cfg.command!r}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    params = {k: v for k, v in vars(args).items() if k not in ("command", "format", "budget", "pivot", "verbose")}
    cfg = RunConfig(args.command, params, args.format, args.budget, args.pivot, args.verbose)
    try:
        out = run(cfg)
    except ResourceLimitError as exc:
        print(f"starfact: resource limit: {exc} {exc.params}", file=sys.stderr)
        return EXIT_RESOURCE
    except (PartitionParseError, DomainError) as exc:
        print(f"starfact: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(out, cfg.output_format, cfg.verbose))
    if out.command == "verify" and out.results[0]["failed"]:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
