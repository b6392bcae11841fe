import pytest

from cubicwalls.exact import line_label
from cubicwalls.builtin import (builtin_catalog, W_12, W_13, W_14, W_15, W_16,
                                W_23, W_B3, W_B4, W_BC, W_ECK, W_NB1, W_NB313)
from cubicwalls.chambers import enumerate_chambers, merge_global
from cubicwalls.render import render_svg


def test_global_svg_wall_set(global_dec, tmp_path):
    out = tmp_path / "global.svg"
    render_svg(global_dec, str(out))
    text = out.read_text()
    # the figure's labelled wall lines all appear...
    labelled = [W_23, W_12, W_NB1, W_13, W_14, W_NB313, W_16, W_15, W_B3, W_B4, W_BC]
    for poly in labelled:
        assert line_label(poly) in text, line_label(poly)
    # ...plus the triple-point wall the chamber table requires
    assert line_label(W_ECK) in text
    # the ample bound is dashed
    assert "stroke-dasharray" in text
    # six bold segment chambers
    assert text.count('stroke-width="5"') == 6


def test_svg_coordinates_are_integers(global_dec, tmp_path):
    import re
    out = tmp_path / "global.svg"
    render_svg(global_dec, str(out))
    for m in re.finditer(r'[xy][12]="([^"]+)"', out.read_text()):
        int(m.group(1))   # raises if any coordinate is not an integer


def test_empty_decomposition_rejected():
    from cubicwalls.chambers import Decomposition
    with pytest.raises(ValueError):
        render_svg(Decomposition("empty"), "/tmp/should-not-exist.svg")
