"""CSV, driver files, SVG and complex-number parsing for the CLI."""
from __future__ import annotations

import csv
import math
from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

from .drivers import INTERPOLATIONS
from .errors import DriverFileError


def parse_complex(text: str) -> complex:
    """Parse 'a+bi', 'a - bi', 'bi', '-i', 'a' (``j`` works as well as ``i``)."""
    s = "".join(text.split()).lower().replace("i", "j")
    try:
        z = complex(s)
    except ValueError:
        raise ValueError(f"cannot parse complex number {text!r}") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite complex number {text!r}")
    return z


def fmt(x: float) -> str:
    """17 significant digits: enough to round-trip any double."""
    return format(float(x), ".17g")


def write_csv(dest, header, columns) -> None:
    """Write columns to a path or an open text stream."""
    cols = [np.asarray(c, dtype=float) for c in columns]
    if hasattr(dest, "write"):
        _rows(dest, header, cols)
        return
    with open(dest, "w", newline="") as fh:
        _rows(fh, header, cols)


def _rows(fh, header, cols) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(header)
    for row in zip(*cols):
        w.writerow([fmt(v) for v in row])


def read_csv(path) -> dict[str, np.ndarray]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    data = np.array([[float(v) for v in r] for r in body]) if body else np.zeros((0, len(header)))
    return {name: data[:, i] for i, name in enumerate(header)}


def read_driver_file(path) -> tuple[np.ndarray, np.ndarray, str]:
    """Read '(t value)' pairs, '#' comments and an optional 'interp:' header."""
    interp = "constant"
    ts, vs = [], []
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DriverFileError(f"cannot read driver file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("interp:"):
            interp = line.split(":", 1)[1].strip().lower()
            if interp not in INTERPOLATIONS:
                raise DriverFileError(f"line {lineno}: unknown interpolation {interp!r}")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DriverFileError(f"line {lineno}: expected 't value', got {raw!r}")
        try:
            t, v = float(parts[0]), float(parts[1])
        except ValueError:
            raise DriverFileError(f"line {lineno}: not a number: {raw!r}") from None
        if not (math.isfinite(t) and math.isfinite(v)):
            raise DriverFileError(f"line {lineno}: non-finite value")
        if ts and t <= ts[-1]:
            raise DriverFileError(f"line {lineno}: knot times must increase")
        ts.append(t)
        vs.append(v)
    if not ts:
        raise DriverFileError("driver file has no knots")
    return np.array(ts), np.array(vs), interp


SVG_SIZE = 800
SVG_RADIUS = 380


def _xy(z: complex) -> str:
    c = SVG_SIZE / 2
    return f"{c + SVG_RADIUS * z.real:.3f},{c - SVG_RADIUS * z.imag:.3f}"


def region_svg(poly, z0: complex, title: str = "") -> str:
    """Unit circle, filled region polygon and a z0 marker on an 800x800 canvas."""
    c = SVG_SIZE / 2
    pts = " ".join(_xy(complex(z)) for z in poly)
    mx, my = _xy(z0).split(",")
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f"<title>{escape(title)}</title>",
        f'<rect width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white"/>',
        f'<circle cx="{c}" cy="{c}" r="{SVG_RADIUS}" fill="none" stroke="black" stroke-width="1.5"/>',
        f'<line x1="{c - SVG_RADIUS}" y1="{c}" x2="{c + SVG_RADIUS}" y2="{c}" stroke="#bbb"/>',
        f'<line x1="{c}" y1="{c - SVG_RADIUS}" x2="{c}" y2="{c + SVG_RADIUS}" stroke="#bbb"/>',
        f'<polygon points="{pts}" fill="#4a78c8" fill-opacity="0.45" stroke="#1f3f8f" '
        f'stroke-width="1.2"/>',
        f'<circle cx="{mx}" cy="{my}" r="4" fill="#c0392b"/>',
        f'<circle cx="{c}" cy="{c}" r="2.5" fill="black"/>',
        "</svg>",
    ]
    return "\n".join(parts) + "\n"
