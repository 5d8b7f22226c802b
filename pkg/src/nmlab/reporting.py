"""Report serialization and rendering.

Reports are plain dicts serialized canonically (sorted keys, fixed formula
printing) so golden files can be compared byte for byte.  A report
directory gets the delimited verdict table (CSV) and a verdict-matrix
figure (PNG) side by side.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .core import format_formula

TOOL_VERSION = "0.1.0"


def witness_to_dict(witness):
    if witness is None:
        return None
    out = {"X": [format_formula(f) for f in witness.X]}
    if witness.Y is not None:
        out["Y"] = [format_formula(f) for f in witness.Y]
    if witness.formula is not None:
        out["formula"] = format_formula(witness.formula)
    return out


def verdict_to_dict(verdict):
    out = {
        "property": verdict.property,
        "operation": verdict.op_name,
        "universe": verdict.universe,
        "outcome": verdict.outcome,
        "witness": witness_to_dict(verdict.witness),
        "triviality_flags": list(verdict.triviality_flags),
    }
    if verdict.notes:
        out["notes"] = verdict.notes
    return out


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def run_report(scenario_id, verdicts, elapsed, as_expected):
    return {
        "tool_version": TOOL_VERSION,
        "scenario": scenario_id,
        "verdicts": verdicts,
        "wall_time_s": round(elapsed, 3),
        "as_expected": as_expected,
    }


def write_verdict_csv(verdict_dicts, path):
    """Delimited verdict table, one row per verdict."""
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["operation", "property", "outcome", "witness_X", "witness_Y",
             "witness_formula", "triviality_flags"])
        for v in verdict_dicts:
            w = v.get("witness") or {}
            writer.writerow([
                v["operation"], v["property"], v["outcome"],
                "; ".join(w.get("X", [])),
                "; ".join(w.get("Y", [])),
                w.get("formula", ""),
                "; ".join(v.get("triviality_flags", [])),
            ])
    return path


_OUTCOME_COLORS = {
    "no_counterexample_in_universe": "#2e7d32",
    "counterexample": "#c62828",
    "precondition_failed": "#f9a825",
}


def render_verdict_figure(verdict_dicts, path, title=None):
    """Verdict matrix (operations x checks) rendered to an image file."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Patch

    ops = []
    props = []
    for v in verdict_dicts:
        if v["operation"] not in ops:
            ops.append(v["operation"])
        if v["property"] not in props:
            props.append(v["property"])
    fig, ax = plt.subplots(
        figsize=(max(4, 0.9 * len(props) + 2), max(2.5, 0.6 * len(ops) + 1.5)))
    for v in verdict_dicts:
        i = ops.index(v["operation"])
        j = props.index(v["property"])
        color = _OUTCOME_COLORS.get(v["outcome"], "#9e9e9e")
        ax.add_patch(plt.Rectangle((j, i), 1, 1, facecolor=color,
                                   edgecolor="white", linewidth=1.5))
    ax.set_xlim(0, len(props))
    ax.set_ylim(0, len(ops))
    ax.set_xticks([j + 0.5 for j in range(len(props))])
    ax.set_xticklabels(props, rotation=35, ha="right", fontsize=8)
    ax.set_yticks([i + 0.5 for i in range(len(ops))])
    ax.set_yticklabels(ops, fontsize=8)
    ax.invert_yaxis()
    ax.set_aspect("auto")
    if title:
        ax.set_title(title, fontsize=10)
    ax.legend(
        handles=[Patch(facecolor=c, label=k) for k, c in _OUTCOME_COLORS.items()],
        loc="upper left", bbox_to_anchor=(1.01, 1), fontsize=7, frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return Path(path)


def write_report_dir(name, verdict_dicts, directory, title=None):
    """CSV plus PNG for one report, named after the run."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    csv_path = write_verdict_csv(verdict_dicts, directory / f"{name}.csv")
    png_path = render_verdict_figure(
        verdict_dicts, directory / f"{name}.png", title=title or name)
    return csv_path, png_path
