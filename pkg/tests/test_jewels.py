from hypothesis import given, strategies as st

from fatlab import jewels as J


def test_unit_vectors_are_unit():
    for k in range(12):
        a = J.proj(J.UNIT[k], k)
        assert a == (4, 0)


def test_hexagon_counts():
    hexagon = (0, 2, 4, 6, 8, 10)
    assert J.closes(hexagon)
    assert J.tile_counts(hexagon) == (6, 0)
    assert len(J.tilings(hexagon, ("tri",))) == 1


def test_dodecagon():
    dodeca = tuple(range(12))
    t, s = J.tile_counts(dodeca)
    assert (t, s) == (12, 6)
    assert len(J.tilings(dodeca)) == 2


def test_triangle_catalog():
    cat = J.enumerate_triangle_jewels()
    assert len(cat) == 3
    assert sorted(j.tiles for j in cat) == [1, 2, 6]
    assert all(j.squares == 0 for j in cat)
    # triangle, rhombus, hexagon as corner sequences in units of pi/3
    assert J.triangle_jewel_corner_sequences() == {(1, 1, 1), (1, 2, 1, 2), (2, 2, 2, 2, 2, 2)}


def test_square_triangle_catalog():
    cat = J.enumerate_square_triangle_jewels()
    assert len(cat) == 11
    assert max(j.tiles for j in cat) <= J.TILE_CAP
    bad = [j for j in cat if not j.bouquet_convex]
    assert [(j.dirs, j.triangles, j.squares) for j in bad] == [((0, 1, 2, 4, 6, 7, 8, 10), 6, 2)]
    assert sorted(j.dirs for j in J.triangle_only(cat)) == sorted(j.dirs for j in J.enumerate_triangle_jewels())


def test_corners_sum():
    for j in J.enumerate_square_triangle_jewels():
        assert sum(j.corners) == 180 * (len(j.dirs) - 2)
        assert all(c < 180 for c in j.corners)


@given(st.sets(st.integers(0, 11), min_size=3), st.integers(0, 11), st.booleans())
def test_canonical_dirs_invariant(dirs, r, flip):
    s = -1 if flip else 1
    moved = tuple(sorted((s * d + r) % 12 for d in dirs))
    assert J.canonical_dirs(tuple(sorted(dirs))) == J.canonical_dirs(moved)
