"""``tss`` command-line entry point.

Exit status: 0 on success, 1 for usage, parse, catalog and file errors, 2 when
a dimension limit is exceeded. Hitting the cycle cap is not an error; it is
reported in-band as ``loops_capped``.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .cycles import DEFAULT_CYCLE_CAP, CycleBudget
from .errors import DimensionLimitError, EvaluationError, ParseError, TssError
from .export import export_graph, export_histogram, export_metrics, format_number
from .expr import evaluate, format_expr, parse
from .gates import REGISTRY, gate_names
from .graph import DEFAULT_THRESHOLD, build_tss, node_tss
from .matrix import DEFAULT_MAX_DIM, DEFAULT_TOLERANCE, check_unitarity, matrix_from_file
from .metrics import compute_metrics

@dataclass
class CliConfig:
    command: str
    expr: Optional[str] = None
    input_file: Optional[str] = None
    threshold: float = DEFAULT_THRESHOLD
    cycle_cap: int = DEFAULT_CYCLE_CAP
    max_cycle_length: Optional[int] = None
    format: Optional[str] = None
    label_mode: str = "decimal"
    node: Optional[int] = None
    output: Optional[str] = None
    histogram: bool = False
    tolerance: float = DEFAULT_TOLERANCE
    max_dim: int = DEFAULT_MAX_DIM


class UsageError(TssError):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _default_cap():
    env = os.environ.get("TSS_CYCLE_CAP")
    if env is None:
        return DEFAULT_CYCLE_CAP
    try:
        return _positive_int(env)
    except (ValueError, argparse.ArgumentTypeError):
        raise UsageError(f"TSS_CYCLE_CAP must be a positive integer, got {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="tss", description="Support-graph analysis of unitary matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    sub.add_parser("catalog", help="list registered gates")

    common = _ArgumentParser(add_help=False)
    common.add_argument("expr", nargs="?", help="gate expression, or '-' to read it from stdin")
    common.add_argument("-i", "--input-file", help="matrix file (.json or .csv) instead of an expression")
    common.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    common.add_argument("--cycle-cap", type=_positive_int, default=None,
                        help=f"stop counting cycles here (default {DEFAULT_CYCLE_CAP}, or $TSS_CYCLE_CAP)")
    common.add_argument("--max-cycle-length", type=_positive_int, default=None)
    common.add_argument("--max-dim", type=_positive_int, default=DEFAULT_MAX_DIM)
    common.add_argument("-o", "--output", help="write here instead of stdout")

    analyze = sub.add_parser("analyze", parents=[common], help="unitarity, metrics and islands")
    analyze.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)

    metrics = sub.add_parser("metrics", parents=[common], help="metrics report")
    metrics.add_argument("--format", choices=("csv", "json"), default="csv")
    metrics.add_argument("--histogram", action="store_true", help="emit the out-degree histogram instead")

    export = sub.add_parser("export", parents=[common], help="full or node-level graph")
    export.add_argument("--format", choices=("dot", "graphml", "json"), default="dot")
    export.add_argument("--labels", dest="label_mode", choices=("decimal", "binary"), default="decimal")
    export.add_argument("--node", type=int, default=None, help="export the node-level star of this vertex")
    return parser


def config_from_args(argv=None) -> CliConfig:
    ns = build_parser().parse_args(argv)
    values = {k: v for k, v in vars(ns).items() if v is not None}
    if "cycle_cap" not in values and ns.command != "catalog":
        values["cycle_cap"] = _default_cap()
    return CliConfig(**values)


def _load(config: CliConfig):
    """Return ``(name, matrix)`` for the configured input."""
    if (config.expr is None) == (config.input_file is None):
        raise UsageError("supply exactly one of an expression or --input-file")
    if config.input_file is not None:
        m = matrix_from_file(config.input_file)
        if m.dim > config.max_dim:
            raise DimensionLimitError(m.dim, config.max_dim)
        return config.input_file, m
    text = sys.stdin.read() if config.expr == "-" else config.expr
    text = text.strip()
    try:
        ast = parse(text)
    except ParseError as exc:
        exc.text = text
        raise
    return format_expr(ast), evaluate(ast, max_dim=config.max_dim)


def _catalog() -> str:
    rows = [("name", "qubits", "params", "description")]
    for name in gate_names():
        spec = REGISTRY[name]
        arity = str(spec.arity) if spec.arity is not None else "n"
        rows.append((name, arity, ",".join(spec.params) or "-", spec.description))
    widths = [max(len(r[k]) for r in rows) for k in range(3)]
    return "".join(
        f"{r[0]:<{widths[0]}}  {r[1]:<{widths[1]}}  {r[2]:<{widths[2]}}  {r[3]}\n" for r in rows
    )


def run(config: CliConfig) -> str:
    """Execute a command and return its output text; errors propagate."""
    if config.command == "catalog":
        return _catalog()
    name, m = _load(config)
    graph = build_tss(m, config.threshold)
    budget = CycleBudget(config.cycle_cap, config.max_cycle_length)

    if config.command == "metrics":
        report = compute_metrics(graph, budget, name=name)
        if config.histogram:
            return export_histogram(report.out_degree_histogram, config.format or "csv")
        return export_metrics(report, config.format or "csv")

    if config.command == "export":
        target = graph if config.node is None else node_tss(graph, config.node)
        return export_graph(target, config.format or "dot", config.label_mode)

    if config.command == "analyze":
        u = check_unitarity(m, config.tolerance)
        report = compute_metrics(graph, budget, name=name)
        lines = [
            f"expression: {name}",
            f"dimension: {m.dim}",
            f"unitary: {format_number(u.is_unitary)} "
            f"(max_deviation={u.max_deviation:.3e}, tolerance={u.tolerance_used:g})",
            f"threshold: {graph.threshold:g}",
            f"edges: {graph.num_edges}",
        ]
        out = "\n".join(lines) + "\n" + export_metrics(report, "csv")
        out += f"islands: {report.num_islands}\n"
        out += "".join(f"  {' '.join(map(str, comp))}\n" for comp in report.islands)
        return out

    raise UsageError(f"unknown command {config.command!r}")


def _report_error(exc):
    print(f"tss: error: {exc}", file=sys.stderr)
    if isinstance(exc, ParseError) and exc.text is not None:
        print(f"  {exc.text}", file=sys.stderr)
        print(f"  {' ' * exc.offset}^", file=sys.stderr)


def main(argv=None) -> int:
    try:
        config = config_from_args(argv)
        output = run(config)
    except (DimensionLimitError, MemoryError) as exc:
        _report_error(exc)
        return 2
    except EvaluationError as exc:
        _report_error(exc)
        return 2 if isinstance(exc.cause, DimensionLimitError) else 1
    except (TssError, IndexError) as exc:
        _report_error(exc)
        return 1
    if config.output:
        try:
            with open(config.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(output)
        except OSError as exc:
            _report_error(exc)
            return 1
    else:
        sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
