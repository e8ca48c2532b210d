"""Deterministic report rendering (TSV/JSON/Markdown) and atomic writes.

Formatting conventions: floats carry 6 decimals, percentage columns 1
decimal of the value scaled by 100, and absent values render as an empty
TSV cell, a JSON null, or a Markdown dash. Data files (score CSVs,
histogram JSON) keep their own fixed formats regardless of the report
format chosen.
"""

import json
import os
import pathlib

STR = "str"
FLOAT6 = "float6"
PCT1 = "pct1"
INT = "int"


class Table:
    """Column-typed rows; values may be None for absent cells."""

    def __init__(self, columns, kinds, rows):
        assert len(columns) == len(kinds)
        self.columns = list(columns)
        self.kinds = list(kinds)
        self.rows = [list(row) for row in rows]


def _fmt(value, spec):
    text = format(value, spec)
    # a vanishing negative must not print as "-0.000000"
    return text.lstrip("-") if float(text) == 0 else text


def _cell_text(value, kind, absent):
    if value is None:
        return absent
    if kind == FLOAT6:
        return _fmt(value, ".6f")
    if kind == PCT1:
        return _fmt(value * 100, ".1f")
    if kind == INT:
        return str(int(value))
    return str(value)


def _cell_json(value, kind):
    if value is None:
        return None
    if kind == FLOAT6:
        return round(value, 6) + 0.0
    if kind == PCT1:
        return round(value * 100, 1) + 0.0
    if kind == INT:
        return int(value)
    return str(value)


def render_tsv(table):
    lines = ["\t".join(table.columns)]
    for row in table.rows:
        lines.append("\t".join(_cell_text(v, k, "")
                               for v, k in zip(row, table.kinds)))
    return "\n".join(lines) + "\n"


def render_json(table):
    records = [
        {col: _cell_json(v, k)
         for col, v, k in zip(table.columns, row, table.kinds)}
        for row in table.rows
    ]
    return json.dumps(records, sort_keys=True, indent=2) + "\n"


def render_md(table):
    lines = ["| " + " | ".join(table.columns) + " |",
             "| " + " | ".join("---" for _ in table.columns) + " |"]
    for row in table.rows:
        lines.append("| " + " | ".join(_cell_text(v, k, "-")
                                       for v, k in zip(row, table.kinds))
                     + " |")
    return "\n".join(lines) + "\n"


_RENDERERS = {"tsv": render_tsv, "json": render_json, "md": render_md}


def render(table, fmt):
    return _RENDERERS[fmt](table)


def write_atomic(path, text):
    """Write to a temp file in the target directory, then rename."""
    path = pathlib.Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    os.replace(tmp, path)


def write_table(out_dir, stem, table, fmt):
    path = pathlib.Path(out_dir) / f"{stem}.{fmt}"
    write_atomic(path, render(table, fmt))
    return path


def write_json_payload(path, payload):
    """Single-line sorted-keys JSON data file."""
    write_atomic(path, json.dumps(payload, sort_keys=True) + "\n")
