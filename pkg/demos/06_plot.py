"""Render a staircase diagram of an ideal and of one of its powers as SVG.

Run with: python demos/06_plot.py
Writes staircase.svg and staircase_power.svg into the current directory.
"""

from stairpow import MonomialIdeal, power, write_svg

I = MonomialIdeal.of((0, 10), (1, 9), (2, 5), (4, 4), (5, 3), (6, 2), (12, 1), (15, 0))

write_svg(I, "staircase.svg", hull=True)
print("wrote staircase.svg (persistent generators highlighted, hull dashed)")

write_svg(power(I, 5), "staircase_power.svg")
print(f"wrote staircase_power.svg (I^5, mu = {power(I, 5).mu})")
