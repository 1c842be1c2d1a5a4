# -*- coding: utf-8 -*-
"""
CSV output with a `#` metadata header.

Everything run dependent but not a result (timestamp, version, config)
goes in the header, so the body of two identical runs is byte-identical.
"""

import csv
import io
from datetime import datetime, timezone
from typing import Iterable, Optional, Sequence

from lowreg import __version__

from .serialize import serialize


def _format(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.16e}"
    return str(value)


def metadata_lines(config: Optional[dict] = None, **extra) -> list:
    lines = [
        f"# lowreg {__version__}",
        f"# created {datetime.now(timezone.utc).isoformat(timespec='seconds')}",
    ]
    if config is not None:
        lines.append(f"# config {serialize(config)}")
        if "seed" in config:
            lines.append(f"# seed {config['seed']}")
    for key in sorted(extra):
        lines.append(f"# {key} {serialize(extra[key])}")
    return lines


def csv_body(columns: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_format(v) for v in row])
    return buffer.getvalue()


def write_csv(path: str, columns: Sequence[str], rows: Iterable[Sequence], metadata: Sequence[str]):
    with open(path, "w", newline="") as f:
        for line in metadata:
            f.write(line + "\n")
        f.write(csv_body(columns, rows))


def read_csv_body(path: str) -> str:
    """The file without its metadata lines."""
    with open(path) as f:
        return "".join(line for line in f if not line.startswith("#"))
