"""SVG 1.1 drawing of a single donut: the exterior with its hole centred inside."""

from __future__ import annotations

from donuts.core import DonutConfig

MARGIN = 24
FONT = 12


def donut_svg(d: DonutConfig, scale: int = 20) -> str:
    """Return SVG source for ``d`` at ``scale`` pixels per unit length."""
    if scale < 1:
        raise ValueError(f"scale must be >= 1, got {scale}")
    ow, oh = d.a * scale, d.b * scale
    hw, hh = d.x * scale, d.y * scale
    # centring is a rendering choice; only the hole sides' parallelism is fixed
    hx = MARGIN + (ow - hw) / 2
    hy = MARGIN + (oh - hh) / 2
    width, height = ow + 2 * MARGIN, oh + 2 * MARGIN
    lines = [
        '<?xml version="1.0" standalone="no"?>',
        '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
        '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">',
        f'<svg version="1.1" xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>donut {d} area {d.area}</title>",
        f'<rect id="exterior" x="{MARGIN}" y="{MARGIN}" width="{ow}" height="{oh}" '
        'fill="#d9a066" stroke="#000" stroke-width="1"/>',
        f'<rect id="hole" x="{hx:g}" y="{hy:g}" width="{hw}" height="{hh}" '
        'fill="#ffffff" stroke="#000" stroke-width="1"/>',
        f'<text x="{MARGIN + ow / 2:g}" y="{MARGIN - 6}" font-size="{FONT}" text-anchor="middle">a = {d.a}</text>',
        f'<text x="{MARGIN - 6}" y="{MARGIN + oh / 2:g}" font-size="{FONT}" text-anchor="end" '
        f'dominant-baseline="middle">b = {d.b}</text>',
        f'<text x="{hx + hw / 2:g}" y="{hy + FONT + 2:g}" font-size="{FONT}" text-anchor="middle">x = {d.x}</text>',
        f'<text x="{hx + 4:g}" y="{hy + hh / 2:g}" font-size="{FONT}" '
        f'dominant-baseline="middle">y = {d.y}</text>',
        "</svg>",
    ]
    return "\n".join(lines) + "\n"
