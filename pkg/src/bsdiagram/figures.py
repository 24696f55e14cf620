"""Static SVG figures of the diagram and of the slice cubic.

Every drawn curve carries its exact data coordinates in a ``bs:data``
attribute (pairs ``u,v`` separated by spaces, 17 significant digits), and
the root element records the data-to-pixel map

    px = bs:ox + bs:sx * u        py = bs:oy - bs:sy * v

so the geometry of a figure can be checked without parsing pixels.
"""
from __future__ import annotations

import xml.etree.ElementTree as ET

import numpy as np

from . import diagram

SVG_NS = "http://www.w3.org/2000/svg"
DATA_NS = "urn:bsdiagram:data"
ET.register_namespace("", SVG_NS)
ET.register_namespace("bs", DATA_NS)

N_BOUNDARY_SEGMENTS = 1024


def _q(tag, ns=SVG_NS):
    return f"{{{ns}}}{tag}"


def _fmt(v):
    return format(float(v), ".17g")


class Canvas:
    """An SVG document with an affine data-to-pixel map."""

    def __init__(self, xlim, ylim, width=640, height=560, margin=60):
        self.xlim, self.ylim = xlim, ylim
        self.width, self.height = width, height
        self.sx = (width - 2 * margin) / (xlim[1] - xlim[0])
        self.sy = (height - 2 * margin) / (ylim[1] - ylim[0])
        self.ox = margin - self.sx * xlim[0]
        self.oy = height - margin + self.sy * ylim[0]
        self.root = ET.Element(_q("svg"), {
            "version": "1.1", "width": str(width), "height": str(height),
            "viewBox": f"0 0 {width} {height}",
            _q("ox", DATA_NS): _fmt(self.ox), _q("sx", DATA_NS): _fmt(self.sx),
            _q("oy", DATA_NS): _fmt(self.oy), _q("sy", DATA_NS): _fmt(self.sy),
            _q("xlim", DATA_NS): f"{_fmt(xlim[0])},{_fmt(xlim[1])}",
            _q("ylim", DATA_NS): f"{_fmt(ylim[0])},{_fmt(ylim[1])}",
        })
        ET.SubElement(self.root, _q("rect"), {
            "x": "0", "y": "0", "width": str(width), "height": str(height), "fill": "white"})

    def px(self, u):
        return self.ox + self.sx * np.asarray(u, dtype=float)

    def py(self, v):
        return self.oy - self.sy * np.asarray(v, dtype=float)

    def polyline(self, ident, u, v, stroke, width=1.5, dash=None, title=None):
        pix = " ".join(f"{x:.3f},{y:.3f}" for x, y in zip(self.px(u), self.py(v)))
        data = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in zip(u, v))
        attrs = {"id": ident, "points": pix, "fill": "none", "stroke": stroke,
                 "stroke-width": str(width), _q("data", DATA_NS): data}
        if dash:
            attrs["stroke-dasharray"] = dash
        el = ET.SubElement(self.root, _q("polyline"), attrs)
        if title:
            ET.SubElement(el, _q("title")).text = title
        return el

    def scatter(self, ident, u, v, color="#1f77b4", radius=0.8):
        # One path of zero-length round-capped segments; duplicates at
        # 0.01 px resolution are dropped.
        pix = np.column_stack([self.px(u), self.py(v)])
        pix = np.unique(np.round(pix, 2), axis=0)
        d = "".join(f"M{x:.2f} {y:.2f}h0" for x, y in pix)
        return ET.SubElement(self.root, _q("path"), {
            "id": ident, "d": d, "stroke": color, "stroke-width": str(2 * radius),
            "stroke-linecap": "round", "fill": "none", _q("count", DATA_NS): str(len(u))})

    def text(self, x, y, s, anchor="middle", size=12):
        el = ET.SubElement(self.root, _q("text"), {
            "x": f"{x:.2f}", "y": f"{y:.2f}", "text-anchor": anchor,
            "font-family": "sans-serif", "font-size": str(size)})
        el.text = s
        return el

    def axes(self, xticks, yticks, xlabel, ylabel):
        (x0, x1), (y0, y1) = self.xlim, self.ylim
        g = ET.SubElement(self.root, _q("g"), {"id": "axes", "stroke": "black"})
        ET.SubElement(g, _q("rect"), {
            "x": f"{self.px(x0):.3f}", "y": f"{self.py(y1):.3f}",
            "width": f"{self.px(x1) - self.px(x0):.3f}",
            "height": f"{self.py(y0) - self.py(y1):.3f}", "fill": "none"})
        for t in xticks:
            self.text(float(self.px(t)), float(self.py(y0)) + 16, f"{t:g}")
        for t in yticks:
            self.text(float(self.px(x0)) - 6, float(self.py(t)) + 4, f"{t:g}", anchor="end")
        self.text(self.width / 2, self.height - 15, xlabel)
        self.text(18, self.height / 2, ylabel)

    def tostring(self):
        ET.indent(self.root)
        return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(
            self.root, encoding="unicode") + "\n"


def diagram_svg(samples=None, n_segments=N_BOUNDARY_SEGMENTS):
    """The diagram: sharp boundary, linear bounds, optional sample cloud.

    ``samples`` is an ``(n, 2)`` array of (X, Y) points, or None.
    """
    cv = Canvas((0.0, 0.55), (-0.05, 1.05))
    cv.axes([0, 0.125, 0.25, 0.375, 0.5], [0, 0.25, 0.5, 0.75, 1], "X", "Y")
    if samples is not None and len(samples):
        samples = np.asarray(samples, dtype=float)
        cv.scatter("samples", samples[:, 0], samples[:, 1])
    curves = diagram.boundary(n_segments + 1)
    cv.polyline("fh_direct", [0.0, 0.5], [1.0, 0.0], "#d62728", dash="6,4",
                title="Y = 1 - 2X")
    cv.polyline("fh_reverse", [0.0, 0.125], [1.0, 0.0], "#2ca02c", dash="6,4",
                title="Y = 1 - 8X")
    cv.polyline("phi_plus", *curves["upper"], "black", width=2, title="phi_plus")
    cv.polyline("phi_minus", *curves["lower"], "black", width=2, title="phi_minus")
    cv.polyline("flat_segment", [0.125, 0.5], [0.0, 0.0], "black", width=2,
                title="flat triangles")
    return cv.tostring()


def slice_svg(X, n=1024):
    """Graph of ``h`` on ``[z_lo, z_hi]`` with the admissible pieces marked."""
    sb = diagram.slice(X)
    zs = np.linspace(sb.z_lo, sb.z_hi, n + 1)
    hs = diagram.cubic_h(zs, sb.X)
    pad_z = 0.05 * max(sb.z_hi - sb.z_lo, 1e-3)
    h_top, h_bot = max(hs.max(), 1e-4), min(hs.min(), 0.0)
    pad_h = 0.08 * (h_top - h_bot)
    cv = Canvas((sb.z_lo - pad_z, sb.z_hi + pad_z), (h_bot - pad_h, h_top + pad_h))
    cv.axes(np.round(np.linspace(sb.z_lo, sb.z_hi, 5), 3),
            np.round(np.linspace(h_bot, h_top, 5), 4), "z", "h(z)")
    cv.polyline("h_zero", list(cv.xlim), [0.0, 0.0], "#888888", width=1, dash="3,3")
    cv.polyline("h_full", zs, hs, "#aaaaaa", width=1.5, dash="5,3", title="h on [z_lo, z_hi]")
    for k, (lo, hi) in enumerate(sb.z_intervals):
        z = np.linspace(lo, hi, n // len(sb.z_intervals) + 1)
        cv.polyline(f"h_admissible_{k}", z, diagram.cubic_h(z, sb.X), "#1f77b4",
                    width=2.5, title="admissible z")
    for name, z in (("z_crit_1", sb.z_crit_1), ("z_crit_2", sb.z_crit_2)):
        h = diagram.cubic_h(z, sb.X)
        cv.polyline(name, [z, z], [0.0, h], "#ff7f0e", width=1, dash="2,2", title=name)
    cv.text(cv.width / 2, 30, f"X = {sb.X:g}", size=14)
    return cv.tostring()


def read_polylines(svg_text):
    """Map polyline id to its ``(n, 2)`` data array, from an emitted SVG."""
    root = ET.fromstring(svg_text)
    out = {}
    for el in root.iter(_q("polyline")):
        data = el.get(_q("data", DATA_NS))
        if data:
            out[el.get("id")] = np.array(
                [[float(v) for v in pair.split(",")] for pair in data.split()])
    return out


def read_transform(svg_text):
    root = ET.fromstring(svg_text)
    return {k: float(root.get(_q(k, DATA_NS))) for k in ("ox", "sx", "oy", "sy")}
