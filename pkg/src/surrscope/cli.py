"""Command-line entry point.

Subcommands map one-to-one onto analyses (``sweep``, ``bootstrap``, ``path``,
``ladder``, ``explain``) plus ``serve`` for the HTTP service. A JSON config
file provides dataset, black box, and instance; flags override individual
analysis fields. Outputs land in the chosen directory as ``result.json``
(canonical serialization, byte-stable across reruns and thread counts),
``points.csv``, and ``plots/*.svg``; every file is written to a temporary
name and renamed so a failed run never leaves partial output.

Exit codes: 0 success, 1 configuration or file errors, 2 analysis failure.
Seed precedence: ``--seed`` flag, then ``SURRSCOPE_SEED``, then config.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import records, svgplot
from .analysis import (
    BootstrapSummary,
    LadderEntry,
    LassoPathResult,
    SweepEntry,
    SweepResult,
    sweep_coefficient_matrix,
)
from .blackbox import meshgrid_predict
from .config import ConfigError, RunConfig, build_blackbox, build_dataset, parse_config, resolve_instance, run_analysis
from .surrogates import LinearFit, surrogate_predict

ANALYSIS_COMMANDS = ("sweep", "bootstrap", "path", "ladder", "explain")
DEFAULT_OUT_DIR = "surrscope-out"
BOUNDARY_PLOT_RESOLUTION = 80


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; config errors are exit 1 here."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="surrscope",
                     description="Local surrogate explanations with controllable coverage.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON run-config file")
        p.add_argument("--seed", type=int, help="base seed (overrides env and config)")
        p.add_argument("--out-dir", help="output directory")
        p.add_argument("--threads", type=int, default=1, help="worker thread cap")
        p.add_argument("--no-plots", action="store_true", help="skip SVG emission")
        p.add_argument("--family", choices=["logistic", "logistic_l1", "tree"])
        p.add_argument("--C", type=float, help="inverse L1 strength (logistic_l1)")
        p.add_argument("--n-samples", type=int, help="neighbourhood sample count")
        p.add_argument("--max-depth", type=int)
        p.add_argument("--max-leaves", type=int)

    for name in ("sweep", "bootstrap"):
        p = sub.add_parser(name)
        common(p)
        p.add_argument("--radius-min", type=float)
        p.add_argument("--radius-max", type=float)
        p.add_argument("--radius-steps", type=int)
        if name == "bootstrap":
            p.add_argument("--B", type=int, help="replicates per radius")
            p.add_argument("--n", type=int, help="neighbourhood size per replicate")

    p = sub.add_parser("path")
    common(p)
    p.add_argument("--radius", type=float)
    p.add_argument("--C-grid", help="comma-separated increasing C values")

    p = sub.add_parser("ladder")
    common(p)
    p.add_argument("--depth-grid", help="comma-separated depths; 'none' = no cap")
    p.add_argument("--resolution", type=int)

    p = sub.add_parser("explain")
    common(p)
    p.add_argument("--radius", type=float)

    p = sub.add_parser("serve")
    p.add_argument("--config", help="optional run-config used as a preloaded session")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--session-cap", type=int, default=32)
    p.add_argument("--threads", type=int, default=2, help="job worker threads")
    p.add_argument("--frontend-dir", help="directory of built UI assets")
    return parser


def _load_config(args) -> RunConfig:
    if not args.config:
        raise ConfigError("a --config file is required (it names the dataset, "
                          "black box, and instance)")
    try:
        text = Path(args.config).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from None
    return parse_config(text)


def _apply_overrides(config: RunConfig, args) -> dict:
    """Merge the subcommand and flag overrides into the analysis spec.

    The subcommand decides the analysis kind; config fields irrelevant to
    that kind are simply unused, so one config file can drive any
    subcommand.
    """
    analysis = dict(config.analysis) if config.analysis else {}
    analysis["kind"] = args.command

    direct = {
        "family": args.family, "C": args.C, "n_samples": args.n_samples,
        "max_depth": args.max_depth, "max_leaves": args.max_leaves,
        "radius_min": getattr(args, "radius_min", None),
        "radius_max": getattr(args, "radius_max", None),
        "radius_steps": getattr(args, "radius_steps", None),
        "radius": getattr(args, "radius", None),
        "B": getattr(args, "B", None), "n": getattr(args, "n", None),
        "resolution": getattr(args, "resolution", None),
    }
    for key, value in direct.items():
        if value is not None:
            analysis[key] = value
    if any(k in analysis for k in ("radius_min", "radius_max", "radius_steps")):
        analysis.pop("radii", None)

    if getattr(args, "C_grid", None) is not None:
        try:
            analysis["C_grid"] = [float(v) for v in args.C_grid.split(",") if v]
        except ValueError:
            raise ConfigError("--C-grid must be comma-separated numbers") from None
    if getattr(args, "depth_grid", None) is not None:
        grid = []
        for part in args.depth_grid.split(","):
            part = part.strip()
            if not part:
                continue
            if part.lower() == "none":
                grid.append(None)
            else:
                try:
                    grid.append(int(part))
                except ValueError:
                    raise ConfigError("--depth-grid must be integers or 'none'") from None
        analysis["depth_grid"] = grid
    return analysis


def _resolve_seed(config: RunConfig, args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("SURRSCOPE_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ConfigError(f"SURRSCOPE_SEED must be an integer, got {env!r}") from None
    return config.seed


# -- output rendering -------------------------------------------------------------

def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return records.format_float(float(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    text = str(value)
    if any(c in text for c in ',"\n'):
        text = '"' + text.replace('"', '""') + '"'
    return text


def _csv(rows: list[list]) -> str:
    return "".join(",".join(_cell(v) for v in row) + "\n" for row in rows)


def _sweep_rows(entries, feature_names) -> list[list]:
    linear = isinstance(entries[0].surrogate, LinearFit)
    if linear:
        header = ["radius", "accuracy", "tpr", "tnr", "tp", "fp", "tn", "fn",
                  "degenerate", "l0", "intercept"]
        header += [f"coef_{name}" for name in feature_names]
    else:
        header = ["radius", "accuracy", "tpr", "tnr", "tp", "fp", "tn", "fn",
                  "degenerate", "depth", "n_leaves"]
    rows = [header]
    for e in entries:
        f = e.fidelity
        row = [e.radius, f.accuracy, f.tpr, f.tnr, f.tp, f.fp, f.tn, f.fn, e.degenerate]
        if linear:
            row += [e.complexity, e.surrogate.intercept, *e.surrogate.coefficients]
        else:
            row += [e.surrogate.depth, e.surrogate.n_leaves]
        rows.append(row)
    return rows


def _result_csv(result, feature_names) -> str:
    if isinstance(result, SweepResult):
        return _csv(_sweep_rows(result.entries, feature_names))
    if isinstance(result, SweepEntry):
        return _csv(_sweep_rows([result], feature_names))
    if isinstance(result, LassoPathResult):
        rows = [["C", "accuracy", "l0", "intercept"]
                + [f"coef_{name}" for name in feature_names]]
        for e in result.entries:
            rows.append([e.C, e.accuracy, e.l0, e.intercept, *e.coefficients])
        return _csv(rows)
    if result and isinstance(result[0], BootstrapSummary):
        rows = [["radius", "B", "n", "accuracy_mean", "accuracy_std"]
                + [f"coef_mean_{name}" for name in feature_names]
                + [f"coef_std_{name}" for name in feature_names]]
        for s in result:
            rows.append([s.radius, s.B, s.n, s.accuracy_mean, s.accuracy_std,
                         *s.coef_mean, *s.coef_std])
        return _csv(rows)
    rows = [["max_depth", "depth", "n_leaves", "accuracy"]]
    for e in result:
        rows.append([e.max_depth, e.depth, e.n_leaves, e.accuracy])
    return _csv(rows)


def _result_plots(result, dataset, blackbox, instance, analysis) -> dict[str, str]:
    names = dataset.feature_names
    plots: dict[str, str] = {}
    if isinstance(result, SweepResult):
        radii = [float(r) for r in result.radii]
        plots["fidelity_vs_radius.svg"] = svgplot.line_chart(
            radii,
            [("accuracy", [e.fidelity.accuracy for e in result.entries]),
             ("tpr", [e.fidelity.tpr for e in result.entries]),
             ("tnr", [e.fidelity.tnr for e in result.entries])],
            title="fidelity vs radius", x_label="radius", y_label="rate")
        if isinstance(result.entries[0].surrogate, LinearFit):
            coef = sweep_coefficient_matrix(result)
            plots["coefficients_vs_radius.svg"] = svgplot.line_chart(
                radii, [(names[j], list(coef[:, j])) for j in range(coef.shape[1])],
                title="coefficients vs radius", x_label="radius", y_label="coefficient")
        else:
            plots["complexity_vs_radius.svg"] = svgplot.line_chart(
                radii,
                [("depth", [e.surrogate.depth for e in result.entries]),
                 ("n_leaves", [e.surrogate.n_leaves for e in result.entries])],
                title="tree complexity vs radius", x_label="radius", y_label="count")
    elif isinstance(result, SweepEntry):
        if isinstance(result.surrogate, LinearFit):
            plots["coefficients.svg"] = svgplot.bar_chart(
                names, list(result.surrogate.coefficients),
                title=f"coefficients at radius {result.radius:g}", y_label="coefficient")
        if dataset.dim == 2:
            grid = meshgrid_predict(blackbox, dataset.bounds, BOUNDARY_PLOT_RESOLUTION)
            surrogate_labels = surrogate_predict(result.surrogate, grid.points)
            plots["boundary.svg"] = svgplot.boundary_heatmap(
                dataset.bounds, BOUNDARY_PLOT_RESOLUTION, grid.labels, surrogate_labels,
                instance=instance.values, radius=result.radius,
                title="black box labels and surrogate boundary")
    elif isinstance(result, LassoPathResult):
        C = [float(c) for c in result.C_grid]
        coef = np.vstack([e.coefficients for e in result.entries])
        plots["path_coefficients.svg"] = svgplot.line_chart(
            C, [(names[j], list(coef[:, j])) for j in range(coef.shape[1])],
            title="lasso coefficient paths", x_label="C", y_label="coefficient",
            log_x=True)
        plots["path_accuracy.svg"] = svgplot.line_chart(
            C, [("accuracy", [e.accuracy for e in result.entries])],
            title="held-out fidelity along the path", x_label="C", y_label="accuracy",
            log_x=True)
        plots["path_l0.svg"] = svgplot.line_chart(
            C, [("l0", [e.l0 for e in result.entries])],
            title="nonzero coefficients along the path", x_label="C", y_label="l0",
            log_x=True)
    elif result and isinstance(result[0], BootstrapSummary):
        radii = [s.radius for s in result]
        plots["accuracy_band.svg"] = svgplot.band_chart(
            radii, [("accuracy", [s.accuracy_mean for s in result],
                     [s.accuracy_std for s in result])],
            title="fidelity mean +-1 std", x_label="radius", y_label="accuracy")
        d = result[0].coef_mean.shape[0]
        plots["coefficient_bands.svg"] = svgplot.band_chart(
            radii,
            [(names[j], [s.coef_mean[j] for s in result],
              [s.coef_std[j] for s in result]) for j in range(d)],
            title="coefficient mean +-1 std", x_label="radius", y_label="coefficient")
    elif result and isinstance(result[0], LadderEntry):
        plots["ladder_accuracy.svg"] = svgplot.line_chart(
            [e.depth for e in result],
            [("accuracy", [e.accuracy for e in result])],
            title="grid fidelity vs realized tree depth", x_label="depth",
            y_label="accuracy")
    return plots


def _write_atomic(path: Path, content: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(content, encoding="utf-8")
    os.replace(tmp, path)


def _run_analysis_command(args) -> int:
    try:
        config = _load_config(args)
        analysis = _apply_overrides(config, args)
        seed = _resolve_seed(config, args)
        dataset = build_dataset(config.dataset)
        blackbox, _ = build_blackbox(config.blackbox, dataset)
        instance = resolve_instance(config.instance, dataset)
        out_dir = Path(args.out_dir or config.out_dir or DEFAULT_OUT_DIR)
    except ConfigError as exc:
        print(f"surrscope: error: {exc}", file=sys.stderr)
        return 1

    try:
        result = run_analysis(analysis, blackbox=blackbox, dataset=dataset,
                              instance=instance, seed=seed, threads=args.threads)
        outputs = {"result.json": records.serialize(result) + "\n",
                   "points.csv": _result_csv(result, dataset.feature_names)}
        if not args.no_plots:
            for name, svg in _result_plots(result, dataset, blackbox,
                                           instance, analysis).items():
                outputs[f"plots/{name}"] = svg
    except ConfigError as exc:
        print(f"surrscope: error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # analysis failure: report, leave no files
        print(f"surrscope: analysis failed: {exc}", file=sys.stderr)
        return 2

    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        if any(name.startswith("plots/") for name in outputs):
            (out_dir / "plots").mkdir(exist_ok=True)
        for name, content in outputs.items():
            _write_atomic(out_dir / name, content)
    except OSError as exc:
        print(f"surrscope: error writing outputs: {exc}", file=sys.stderr)
        return 1
    for name in outputs:
        print(out_dir / name)
    return 0


def _run_serve(args) -> int:
    import uvicorn

    from .service import create_app

    try:
        app = create_app(session_cap=args.session_cap, threads=args.threads,
                         frontend_dir=args.frontend_dir)
    except ConfigError as exc:
        print(f"surrscope: error: {exc}", file=sys.stderr)
        return 1
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "serve":
        return _run_serve(args)
    return _run_analysis_command(args)


if __name__ == "__main__":
    sys.exit(main())
