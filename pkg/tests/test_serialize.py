import json
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from okx.convex import ConvexBody, max_subsimplex
from okx.errors import GeometryError, SignatureError
from okx.fixtures import build_fixture
from okx.serialize import (
    body_csv,
    body_svg,
    dump_geometry,
    geometry_from_dict,
    geometry_to_dict,
    load_geometry,
    parse_body_csv,
    vertices_json,
)


@pytest.mark.parametrize("name", ["blp2", "f_e", "p2", "fpp"])
def test_geometry_round_trip(tmp_path, name):
    g = build_fixture(name).geometry
    path = tmp_path / "g.json"
    dump_geometry(g, path)
    assert load_geometry(path) == g
    assert geometry_from_dict(json.loads(json.dumps(geometry_to_dict(g)))) == g


def test_float_entries_are_rejected(blp2):
    doc = geometry_to_dict(blp2.geometry)
    doc["ample_class"] = [2.0, -1]
    with pytest.raises(GeometryError, match="float"):
        geometry_from_dict(doc)


def test_positive_definite_file_is_rejected(blp2):
    doc = geometry_to_dict(blp2.geometry)
    doc["intersection_matrix"] = [[1, 0], [0, 1]]
    with pytest.raises(SignatureError):
        geometry_from_dict(doc)


def test_missing_key(blp2):
    doc = geometry_to_dict(blp2.geometry)
    del doc["curves"]
    with pytest.raises(GeometryError):
        geometry_from_dict(doc)


def test_csv_round_trip():
    b = ConvexBody.from_points(2, [(1, 0), (2, 0), (2, Fraction(1, 3))])
    text = body_csv(b)
    assert text.splitlines()[0] == "x1,x2"
    assert "2,1/3" in text
    assert parse_body_csv(text) == b
    assert vertices_json(b) == [["1", "0"], ["2", "0"], ["2", "1/3"]]


def test_svg_is_well_formed():
    b = ConvexBody.from_points(2, [(0, 0), (Fraction(1, 2), 0), (0, 2)])
    svg = body_svg(b, max_subsimplex(b), title="demo")
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    assert "<!-- vertices: (0,0) (0,2) (1/2,0) -->" in svg
    assert "max-subsimplex" in svg
    ET.fromstring(body_svg(ConvexBody.empty(2)))
