from hypothesis import given, strategies as st

from fatlab import orbits


def test_group_orders():
    assert len(orbits.signed_permutations()) == 384
    assert len(orbits.signed_permutations(True)) == 192


def test_facet_graph_is_4cube():
    G = orbits.facet_graph()
    assert G.number_of_edges() == 32
    assert all(d == 4 for _, d in G.degree())


def test_table():
    T = orbits.orbit_table()
    assert T.row() == [1, 1, 3, 3, 6, 3, 2, 1, 1]
    assert T.total == 21
    assert T.raw == {0: 1, 1: 16, 2: 88, 3: 208, 4: 228, 5: 128, 6: 56, 7: 16, 8: 2}
    assert orbits.burnside_counts() == T.counts
    for k, sizes in T.orbit_sizes.items():
        assert sum(sizes) == T.raw[k]
        assert all(T.group_order % s == 0 for s in sizes)


def test_orientation_preserving_same_counts():
    T = orbits.orbit_table(orientation_preserving=True)
    assert T.row() == [1, 1, 3, 3, 6, 3, 2, 1, 1]


def test_format():
    text = orbits.format_table([1, 1, 3, 3, 6, 3, 2, 1, 1], 21)
    assert text.splitlines()[1].endswith("| 21")


_GROUP = orbits.signed_permutations()
_SETS = orbits.independent_sets()


@given(st.sampled_from(_SETS), st.sampled_from(_GROUP))
def test_canonical_form_is_orbit_invariant(S, g):
    image = frozenset(g[x] for x in S)
    assert image in set(_SETS)
    assert orbits._canonical(S, _GROUP) == orbits._canonical(image, _GROUP)
