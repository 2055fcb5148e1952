"""Non-interactive rendering: SVG disks and the equerre decomposition dump.

The SVG emitter draws one filled disk per cell.  In `heap` rotation the
picture uses raw (fiber, height) coordinates; in `lattice` rotation the
cells are mapped to ((x+y)/2, (y-x)/2), which turns the directed supports
into East/North steps (plus North-East on the triangular lattice) - the
usual axis-aligned picture of a directed animal.  Height grows upward in
both modes.  Output bytes are deterministic: fixed-precision coordinates,
no timestamps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .animals import Animal, AnimalError, beta_inverse
from .paths import mark_celibates


@dataclass(frozen=True)
class RenderOptions:
    cell_radius: float = 0.4
    rotation: str = "lattice"  # "heap" | "lattice"
    show_decomposition: bool = False

    def __post_init__(self) -> None:
        if self.cell_radius <= 0:
            raise ValueError("cell_radius must be > 0")
        if self.rotation not in ("heap", "lattice"):
            raise ValueError(f"unknown rotation {self.rotation!r}")


def _coords(an: Animal, opts: RenderOptions) -> list[tuple[float, float]]:
    if opts.rotation == "lattice":
        return [(float(x), float(y)) for x, y in an.lattice_cells()]
    return [(float(x), float(y)) for x, y in an.cells]


def render_svg(an: Animal, opts: RenderOptions = RenderOptions()) -> str:
    """SVG 1.1 document with one disk per cell; y flipped so height points up."""
    pts = _coords(an, opts)
    rad = opts.cell_radius
    pad = rad + 0.6
    xs = [p for p, _ in pts]
    ys = [q for _, q in pts]
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad
    width = x1 - x0
    height = y1 - y0
    scale = 20.0
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width * scale:.3f}" height="{height * scale:.3f}" '
        f'viewBox="0 0 {width:.3f} {height:.3f}">',
    ]
    for x, y in pts:
        cx = x - x0
        cy = y1 - y  # flip: larger height = higher on the page
        lines.append(
            f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{rad:.3f}" fill="black"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_decomposition(an: Animal) -> str:
    """Equerre decomposition as indented text, one equerre per line.

    Line k holds the k-th equerre of the main stacking loop: its letters
    (Motzkin factor plus the separator that closed it), indented by the
    equerre's base fiber.  Stripping indentation and concatenating the
    lines gives back the celibate-marked word of beta_inverse.
    """
    if an.source != "point":
        raise AnimalError("decomposition dump is defined for point sources only")
    marked = mark_celibates(beta_inverse(an)).letters
    lines = []
    base = 0
    bucket: list[str] = []
    for ch in marked:
        bucket.append(ch)
        if ch in ("A", "B"):
            lines.append("  " * base + "".join(bucket))
            bucket = []
            base += 1 if ch == "A" else 2
    lines.append("  " * base + "".join(bucket))
    return "\n".join(lines) + "\n"


def decomposition_flatten(dump: str) -> str:
    """Concatenated letters of a decomposition dump (inverse of the layout)."""
    return "".join(line.strip() for line in dump.splitlines())
