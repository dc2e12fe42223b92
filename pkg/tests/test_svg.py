from stairpow.engine import power
from stairpow.ideals import MonomialIdeal
from stairpow.svg import MAX_CANVAS, render_svg, write_svg


def test_deterministic_output():
    I = MonomialIdeal.of((4, 0), (1, 1), (0, 3))
    assert render_svg(I) == render_svg(I)


def test_dots_and_highlights():
    I = MonomialIdeal.of((4, 0), (1, 1), (0, 3))
    svg = render_svg(I)
    assert svg.count("<circle") == 3
    # (1,1) is a hull vertex (1*3 + 1*4 = 7 < 12), so all three highlighted
    assert svg.count('fill="#d62728"') == 3


def test_principal_allowed():
    svg = render_svg(MonomialIdeal(((3, 2),)))
    assert svg.count("<circle") == 1


def test_hull_option():
    I = MonomialIdeal.of((0, 10), (2, 5), (3, 4), (15, 0))
    assert "stroke-dasharray" in render_svg(I, hull=True)
    assert "stroke-dasharray" not in render_svg(I)


def test_canvas_capped_for_large_powers():
    big = power(MonomialIdeal(((0, 2), (2, 1), (3, 0))), 300)
    svg = render_svg(big)
    width = float(svg.split('width="')[1].split('"')[0])
    height = float(svg.split('height="')[1].split('"')[0])
    assert width <= MAX_CANVAS and height <= MAX_CANVAS


def test_write_svg(tmp_path):
    out = tmp_path / "staircase.svg"
    I = MonomialIdeal(((0, 2), (3, 0)))
    write_svg(I, str(out))
    assert out.read_text().startswith("<svg")
