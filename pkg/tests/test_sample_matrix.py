"""Tests for the sample matrix helper script."""

import json

from sample_matrix import generate_sample_matrix

from parinv.cli.io import load_matrix
from parinv.roots import Composition, roots_of_nilradical


def test_sample_is_supported_on_nilradical(tmp_path, comp_2132):
    grid = generate_sample_matrix(comp_2132, seed=3)
    cells = {(a + 1, b + 1) for a, row in enumerate(grid) for b, value in enumerate(row) if value != "0"}
    assert cells == {(root.i, root.j) for root in roots_of_nilradical(comp_2132)}

    path = tmp_path / "x.json"
    path.write_text(json.dumps(grid), encoding="utf-8")
    assert len(load_matrix(path, comp_2132)) == 8


def test_sample_is_reproducible():
    comp = Composition((1, 2, 1))
    assert generate_sample_matrix(comp, seed=1, integral=False) == generate_sample_matrix(comp, seed=1, integral=False)
    assert all(value == "0" for value in generate_sample_matrix(Composition((3,)), seed=1)[0])
