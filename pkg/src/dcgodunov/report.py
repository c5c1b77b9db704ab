"""
CSV output.

Every file is ``#``-prefixed ``key=value`` metadata lines, one header row,
then data rows. Numbers are written with 17 significant digits so that
they round-trip exactly.
"""
from __future__ import annotations

import io
import os
import sys
from typing import Mapping, Sequence

import numpy as np

from .characteristics import SweepRow
from .experiments import ComparisonReport
from .grid import FieldState


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    return str(v)


def format_table(columns: Mapping[str, Sequence], metadata: Mapping | None = None) -> str:
    names = list(columns)
    data = [np.asarray(columns[n]) for n in names]
    lengths = {len(c) for c in data}
    if len(lengths) > 1:
        raise ValueError(f"columns have different lengths: {sorted(lengths)}")
    out = io.StringIO()
    for key, value in (metadata or {}).items():
        text = _fmt(value).replace("\n", " ")
        out.write(f"# {key}={text}\n")
    out.write(",".join(names) + "\n")
    for row in zip(*data):
        out.write(",".join(_fmt(v) for v in row) + "\n")
    return out.getvalue()


def write_table(path, columns, metadata=None) -> None:
    text = format_table(columns, metadata)
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(os.fspath(path), "w", newline="") as fh:
        fh.write(text)


def read_table(path):
    """Parse a file written by :func:`write_table`; returns (metadata, columns)."""
    meta, header, rows = {}, None, []
    with open(os.fspath(path)) as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                meta[key] = value
            elif header is None:
                header = line.split(",")
            elif line:
                rows.append([float(v) if v else np.nan for v in line.split(",")])
    cols = np.array(rows, dtype=float).reshape(-1, len(header)).T
    return meta, {name: cols[k] for k, name in enumerate(header)}


def write_report(report, path, metadata=None) -> None:
    """Write a field, a scheme comparison, or an epsilon sweep as CSV."""
    meta = dict(metadata or {})
    if isinstance(report, FieldState):
        meta.setdefault("time", report.time)
        write_table(path, {"x": report.grid.centers, "phi": report.values}, meta)
    elif isinstance(report, ComparisonReport):
        meta = {**report.metadata(), **meta}
        write_table(path, {"x": report.proposed.grid.centers,
                           "phi_proposed": report.proposed.values,
                           "phi_averaged": report.averaged.values}, meta)
    elif isinstance(report, (list, tuple)) and all(isinstance(r, SweepRow) for r in report):
        if report:
            meta.setdefault("asymptotic_epsilon", report[-1].epsilon)
        write_table(path, {"epsilon": [r.epsilon for r in report],
                           "phi_probe": [r.phi_probe for r in report],
                           "abs_err_vs_lambda": [r.abs_err for r in report]}, meta)
    else:
        raise TypeError(f"cannot write a report of type {type(report).__name__}")
