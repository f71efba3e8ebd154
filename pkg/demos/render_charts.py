"""Render the topology charts to files.

Writes the strict 12x12 periodic-table display (SVG + DOT graph) and the
complete 1,413-game chart.  Run: python demos/render_charts.py [outdir]
"""

import pathlib
import sys

from twobytwo.atlas import build_atlas
from twobytwo.chart import layout_complete, layout_strict, render_dot, render_svg

outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "charts")
outdir.mkdir(parents=True, exist_ok=True)

atlas = build_atlas()
strict = layout_strict(atlas)
complete = layout_complete(atlas)

files = {
    "strict.svg": render_svg(strict),
    "strict.dot": render_dot(strict),
    "complete.svg": render_svg(complete),
}
for name, text in files.items():
    path = outdir / name
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path} ({len(text):,} bytes)")

print("\nRender the graph with: dot -Tsvg", outdir / "strict.dot", "-o strict-graph.svg")
