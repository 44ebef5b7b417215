import pytest

from chevlie import UnsupportedOperationError, factor_labels, layers, weyl_orbits


def test_d4_central_node(get_rs):
    rs = get_rs("D4")
    label = factor_labels(rs, 2, 1)
    assert label.dimension == 16
    assert tuple(dim for _, dim in label.factors) == (2, 2, 2, 2)
    for coords, dim in label.factors:
        assert coords == (1,)  # each A1 factor carries its 2-dim representation
    assert weyl_orbits(rs, 2, 1) == (16,)


def test_e6_mark3_node(get_rs):
    rs = get_rs("E6")
    for index in (1, 2):
        label = factor_labels(rs, 4, index)
        assert label.dimension == 27
        assert tuple(dim for _, dim in label.factors) == (3, 3, 3)
        for coords, dim in label.factors:
            # a fundamental weight of A2: one of the two 3-dim representations
            assert sorted(coords) == [0, 1]


E8_FACTOR_DIMS = {
    1: [(2, 56)],
    2: [(3, 27), (3, 27)],
    3: [(4, 16), (6, 10), (4, 16)],
    4: [(5, 10), (10, 5), (10, 5), (5, 10)],
    5: [(2, 3, 6), (1, 3, 15), (2, 1, 20), (1, 3, 15), (2, 3, 6)],
    6: [(2, 28), (1, 70), (2, 28)],
    7: [(128,)],
    8: [(84,), (84,)],
}


@pytest.mark.parametrize("node", sorted(E8_FACTOR_DIMS))
def test_e8_factor_dimensions(get_rs, node):
    rs = get_rs("E8")
    lays = layers(rs, node)
    assert len(lays) == len(E8_FACTOR_DIMS[node])
    for lay, want in zip(lays, E8_FACTOR_DIMS[node]):
        label = factor_labels(rs, node, lay.index)
        got = tuple(dim for _, dim in label.factors)
        assert got == want
        prod = 1
        for d in got:
            prod *= d
        assert prod == lay.dimension == label.dimension


def test_factor_dims_multiply_to_layer_dim(get_rs):
    for name in ["A3", "D4", "D5", "E6", "E7"]:
        rs = get_rs(name)
        for node in range(1, rs.rank + 1):
            for lay in layers(rs, node):
                label = factor_labels(rs, node, lay.index)
                prod = 1
                for _, d in label.factors:
                    prod *= d
                assert prod == lay.dimension


def test_dual_layers_have_mirrored_factors(get_rs):
    rs = get_rs("E8")
    for node in (3, 4, 5):
        n = rs.marks[node - 1]
        dims = {}
        for lay in layers(rs, node):
            label = factor_labels(rs, node, lay.index)
            dims[lay.index] = tuple(d for _, d in label.factors)
        for i in range(1, n):
            assert dims[i] == dims[n - i]


def test_orbit_sizes_sum_to_layer_dim(get_rs):
    for name in ["B3", "C3", "G2", "F4", "E6"]:
        rs = get_rs(name)
        for node in range(1, rs.rank + 1):
            for lay in layers(rs, node):
                orbits = weyl_orbits(rs, node, lay.index)
                assert sum(orbits) == lay.dimension
                assert all(o > 0 for o in orbits)


def test_f4_orbit_data_frozen(get_rs):
    rs = get_rs("F4")
    assert weyl_orbits(rs, 2, 1) == (9, 9)
    assert weyl_orbits(rs, 2, 2) == (9, 9)
    assert weyl_orbits(rs, 1, 1) == (12, 16)
    assert weyl_orbits(rs, 3, 2) == (6, 12)
    assert weyl_orbits(rs, 4, 1) == (16,)


def test_non_simply_laced_labels_unsupported(get_rs):
    rs = get_rs("F4")
    with pytest.raises(UnsupportedOperationError, match="weyl_orbits"):
        factor_labels(rs, 2, 1)
    rs = get_rs("G2")
    with pytest.raises(UnsupportedOperationError):
        factor_labels(rs, 1, 1)


def test_layer_index_validation(get_rs):
    rs = get_rs("E6")
    with pytest.raises(ValueError):
        factor_labels(rs, 4, 0)
    with pytest.raises(ValueError):
        factor_labels(rs, 4, 3)  # mark is 3: valid indices are 1 and 2
    with pytest.raises(ValueError):
        weyl_orbits(rs, 0, 1)  # the affine node has no layers
