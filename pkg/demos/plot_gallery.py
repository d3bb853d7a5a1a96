"""Rendering overlaid step functions to standalone SVG files.

Run: python demos/plot_gallery.py   (writes into demos/out/)
"""

from fractions import Fraction
from pathlib import Path

from irrmeasure import (QuadraticSurd, build_trajectory, sqrt_of, surd_to_cf)
from irrmeasure.plotting import render_step_svg

T_MAX = 5000
numbers = [
    ("phi", surd_to_cf(QuadraticSurd(Fraction(1, 2), Fraction(1, 2), 5))),
    ("root2", surd_to_cf(sqrt_of(2))),
    ("root7", surd_to_cf(sqrt_of(7))),
]

trajectories = [(name, build_trajectory(cf, T_MAX)) for name, cf in numbers]
series = [(name, [(q, float((e.lo + e.hi) / 2)) for q, e in traj.breakpoints])
          for name, traj in trajectories]
seen: dict[int, int] = {}
for _, traj in trajectories:
    for t in traj.jump_times():
        seen[t] = seen.get(t, 0) + 1
markers = sorted(t for t, count in seen.items() if count >= 2)
print("shared jump times:", markers)

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
for focus, (name, _) in enumerate(numbers):
    svg = render_step_svg(series, focus, markers, t_max=T_MAX,
                          title=f"step functions, {name} emphasized")
    path = out / f"{name}.svg"
    path.write_text(svg)
    print("wrote", path)
