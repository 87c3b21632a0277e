import re

import pytest
from hypothesis import given, settings, strategies as st

from hexcount.closedform import HexagonParams, count_theorem1
from hexcount.geometry import (
    FALLING,
    FLAT,
    RISING,
    Region,
    Tile,
    Tiling,
    TriCell,
    build_full_region,
    build_region,
    extend_to_full_hexagon,
    notch_cells,
    paths_to_tiling,
    render_svg,
    tiling_to_paths,
    tiling_to_plane_partition,
)
from hexcount.lgv import LatticePoint, build_point_configuration
from hexcount.oracle import MonotonePath, PathFamily, enumerate_path_families


def worked_example_family():
    """A specific tiling of the (2,1,1,2,2,1) region, fixed once."""
    def path(*points):
        return MonotonePath(tuple(LatticePoint(x, y) for x, y in points))

    return PathFamily(
        build_point_configuration(2, 1, 1, 2, 2, 1),
        (
            path((0, 2), (0, 1), (1, 1), (1, 0)),
            path((0, 4), (0, 3), (1, 3), (2, 3), (2, 2), (2, 1)),
            path((1, 5), (2, 5), (2, 4), (3, 4), (4, 4), (4, 3)),
            path((3, 5), (4, 5), (5, 5), (5, 4)),
        ),
    )


# --------------------------------------------------------------------- cells

def test_tricell_vertices():
    up = TriCell(2, -3, "up")
    assert up.vertices() == (
        LatticePoint(2, -3), LatticePoint(3, -3), LatticePoint(2, -2)
    )
    down = TriCell(2, -3, "down")
    assert down.vertices() == (
        LatticePoint(3, -3), LatticePoint(2, -2), LatticePoint(3, -2)
    )
    assert set(up.vertices()) & set(down.vertices()) == {
        LatticePoint(3, -3), LatticePoint(2, -2)
    }
    with pytest.raises(ValueError):
        TriCell(0, 0, "sideways")


def test_tile_leans():
    down = TriCell(4, -2, "down")
    assert Tile(down, TriCell(5, -2, "up")).lean == FLAT
    assert Tile(down, TriCell(4, -2, "up")).lean == RISING
    assert Tile(down, TriCell(4, -1, "up")).lean == FALLING
    with pytest.raises(ValueError, match="not adjacent"):
        Tile(down, TriCell(6, -2, "up"))
    with pytest.raises(ValueError, match="one down cell"):
        Tile(TriCell(4, -2, "up"), TriCell(4, -2, "down"))


# ------------------------------------------------------------------- regions

def test_region_sizes_worked_example():
    p = HexagonParams(2, 1, 1, 2, 2, 1)
    region = build_region(p)
    full = build_full_region(p)
    assert len(region.cells) == 40
    assert len(full.cells) == 66
    ups = sum(1 for cell in region.cells if cell.orientation == "up")
    assert ups == len(region.cells) - ups  # tileable: equal up/down counts


def test_region_minimal_case():
    region = build_region((0, 0, 0, 1, 1, 1))
    assert len(region.cells) == 6


def test_notches_are_outside_the_region_but_inside_the_full_hexagon():
    p = HexagonParams(2, 1, 1, 2, 2, 1)
    region = build_region(p)
    full = build_full_region(p)
    for cell in notch_cells(p):
        assert cell not in region.cells
        assert cell in full.cells
    assert region.cells < full.cells


@given(
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=0, max_value=2),
    st.data(),
)
@settings(max_examples=30, deadline=None)
def test_region_size_matches_path_count(a, b, c, data):
    # every tiling has one flat/rising tile per path step plus falling
    # filler, and the region size is independent of r, s, t
    r = data.draw(st.integers(min_value=1, max_value=a + 2))
    s = data.draw(st.integers(min_value=1, max_value=b + 2))
    t = data.draw(st.integers(min_value=1, max_value=c + 2))
    region = build_region((a, b, c, r, s, t))
    full = build_full_region((a, b, c, r, s, t))
    hexagon_cells = 2 * ((a + 2) * (b + 2) + (b + 2) * (c + 2) + (c + 2) * (a + 2))
    assert len(full.cells) == hexagon_cells
    strips = (a + 3) + (b + 3) + (c + 3)
    assert len(region.cells) == hexagon_cells - 2 * strips


def test_region_rejects_unknown_kind():
    p = HexagonParams(0, 0, 0, 1, 1, 1)
    with pytest.raises(ValueError):
        Region("oval", p, frozenset())


# ------------------------------------------------------------------- tilings

def test_tiling_must_partition_region():
    family = worked_example_family()
    tiling = paths_to_tiling(family)
    with pytest.raises(ValueError, match="partition"):
        Tiling(tiling.region, tiling.tiles[:-1])
    with pytest.raises(ValueError, match="sorted"):
        Tiling(tiling.region, tuple(reversed(tiling.tiles)))


def test_round_trip_worked_example():
    family = worked_example_family()
    tiling = paths_to_tiling(family)
    assert len(tiling.tiles) == 20
    assert tiling_to_paths(tiling) == family
    flats = sum(1 for tile in tiling.tiles if tile.lean == FLAT)
    rises = sum(1 for tile in tiling.tiles if tile.lean == RISING)
    total_steps = sum(len(p.vertices) - 1 for p in family.paths)
    assert flats + rises == total_steps


def test_extension_adds_the_three_border_strips():
    p = HexagonParams(2, 1, 1, 2, 2, 1)
    tiling = paths_to_tiling(worked_example_family())
    extended = extend_to_full_hexagon(tiling)
    assert extended.region.kind == "full"
    assert len(extended.tiles) == 33
    assert set(tiling.tiles) < set(extended.tiles)
    # each notch cell is absorbed by exactly one new tile
    added = set(extended.tiles) - set(tiling.tiles)
    for cell in notch_cells(p):
        owners = [tile for tile in added if cell in tile.cells()]
        assert len(owners) == 1


def test_extension_is_deterministic_and_position_dependent():
    family = worked_example_family()
    ext1 = extend_to_full_hexagon(paths_to_tiling(family))
    ext2 = extend_to_full_hexagon(paths_to_tiling(family))
    assert ext1 == ext2


def test_plane_partition_of_worked_example():
    tiling = paths_to_tiling(worked_example_family())
    pp = tiling_to_plane_partition(extend_to_full_hexagon(tiling))
    assert pp.rows == ((3, 2, 2), (3, 2, 2), (2, 2, 0), (2, 1, 0))
    assert pp.to_text() == "3 2 2\n3 2 2\n2 2 0\n2 1 0"


def test_wrong_region_kinds_are_rejected():
    tiling = paths_to_tiling(worked_example_family())
    extended = extend_to_full_hexagon(tiling)
    with pytest.raises(ValueError, match="working-region"):
        tiling_to_paths(extended)
    with pytest.raises(ValueError, match="full-hexagon"):
        tiling_to_plane_partition(tiling)
    with pytest.raises(ValueError, match="working-region"):
        extend_to_full_hexagon(extended)


@given(
    st.integers(min_value=0, max_value=1),
    st.integers(min_value=0, max_value=1),
    st.integers(min_value=0, max_value=1),
    st.data(),
)
@settings(max_examples=20, deadline=None)
def test_round_trips_small(a, b, c, data):
    r = data.draw(st.integers(min_value=1, max_value=a + 2))
    s = data.draw(st.integers(min_value=1, max_value=b + 2))
    t = data.draw(st.integers(min_value=1, max_value=c + 2))
    params = (a, b, c, r, s, t)

    def round_trip(family):
        tiling = paths_to_tiling(family)
        assert tiling_to_paths(tiling) == family
        pp = tiling_to_plane_partition(extend_to_full_hexagon(tiling))
        maxima = sum(1 for v in pp.rows[0] if v == c + 2)
        zeros = sum(1 for row in pp.rows if row[-1] == 0)
        assert maxima == b + 2 - s
        assert zeros == r
        assert pp.rows[-1][0] == c + 2 - t

    n = enumerate_path_families(params, emit=round_trip)
    assert n == count_theorem1(params)


# ----------------------------------------------------------------- rendering

COORD = re.compile(r"-?\d+\.\d{6},-?\d+\.\d{6}")


def test_render_tiling_svg_shape():
    tiling = paths_to_tiling(worked_example_family())
    svg = render_svg(tiling)
    assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg"')
    assert svg.rstrip().endswith("</svg>")
    assert svg.count("<polygon") == 20
    for match in re.finditer(r'points="([^"]+)"', svg):
        pts = match.group(1).split()
        assert len(pts) == 4
        assert all(COORD.fullmatch(p) for p in pts)


def test_render_region_svg_uses_triangles():
    region = build_region((2, 1, 1, 2, 2, 1))
    svg = render_svg(region)
    assert svg.count("<polygon") == 40
    first = re.search(r'points="([^"]+)"', svg)
    assert len(first.group(1).split()) == 3


def test_render_is_deterministic():
    family = worked_example_family()
    svg1 = render_svg(paths_to_tiling(family))
    svg2 = render_svg(paths_to_tiling(tiling_to_paths(paths_to_tiling(family))))
    assert svg1 == svg2


def test_render_vertices_on_half_grid():
    # up to the 0.5 margin, coordinates are multiples of sqrt(3)/2 and 1/2
    import math

    svg = render_svg(paths_to_tiling(worked_example_family()))
    xs, ys = set(), set()
    for match in COORD.finditer(svg):
        x_str, y_str = match.group(0).split(",")
        xs.add(float(x_str) - 0.5)
        ys.add(float(y_str) - 0.5)
    sx = math.sqrt(3) / 2
    for x in xs:
        assert abs(x / sx - round(x / sx)) < 1e-4
    for y in ys:
        assert abs(y / 0.5 - round(y / 0.5)) < 1e-9
