from collections import Counter

import pytest

from chevlie import (
    FactoredInteger,
    NodeError,
    PrimeConditionError,
    bracket_closure_violation,
    build_report,
    determinant,
    dim_unipotent,
    extended_diagram,
    iwahori_lattice,
    j_alpha_lattice,
    layers,
    matching_parahorics,
    parahoric_discriminant,
    parahoric_divisors,
    parahoric_lattice,
    reduced_label,
    scaled_gram,
)


# -- extended diagram ------------------------------------------------------------------


def test_extended_diagram_a1(get_rs):
    diag = extended_diagram(get_rs("A1"))
    assert diag.marks == (1, 1)
    # the two nodes pair to -2 in both directions: equal lengths, no arrow
    assert diag.pairings[0][1] == -2 and diag.pairings[1][0] == -2
    assert len(diag.edges) == 1
    (i, j, bond, arrow) = diag.edges[0]
    assert {i, j} == {0, 1} and bond == 4 and arrow is None


@pytest.mark.parametrize("name,affine_neighbors", [
    ("A2", {1, 2}),
    ("B3", {2}),
    ("C3", {1}),
    ("D4", {2}),
    ("G2", {1}),
    ("F4", {1}),
    ("E6", {2}),
    ("E7", {1}),
    ("E8", {1}),
])
def test_extended_diagram_attachment(get_rs, name, affine_neighbors):
    diag = extended_diagram(get_rs(name))
    neighbors = set()
    for (i, j, bond, arrow) in diag.edges:
        if i == 0:
            neighbors.add(j)
        elif j == 0:
            neighbors.add(i)
    assert neighbors == affine_neighbors
    assert diag.marks[0] == 1
    rs = get_rs(name)
    assert diag.marks == (1,) + rs.marks
    assert sum(diag.marks) == rs.coxeter_h


def test_extended_diagram_arrows(get_rs):
    # the affine node of C_n attaches through a double bond pointing at the
    # short chain; G2 keeps its triple bond between alpha1 and alpha2
    diag = extended_diagram(get_rs("C3"))
    bonds = {(i, j): (bond, arrow) for (i, j, bond, arrow) in diag.edges}
    double = [k for k, (b, _) in bonds.items() if b == 2]
    assert len(double) == 2  # affine-alpha1 and alpha2-alpha3
    diag = extended_diagram(get_rs("G2"))
    triple = [(i, j, a) for (i, j, b, a) in diag.edges if b == 3]
    assert len(triple) == 1
    i, j, arrow = triple[0]
    assert {i, j} == {1, 2} and arrow == 2  # arrow points at the short root


# -- valuations ------------------------------------------------------------------------


def test_affine_node_gives_standard_lattice(get_alg):
    for name in ["A2", "G2", "F4"]:
        alg = get_alg(name)
        lat = parahoric_lattice(alg, 0, 5)
        assert set(lat.valuations) == {0}


def test_e8_alpha4_valuation_counts(get_alg):
    alg = get_alg("E8")
    lat = parahoric_lattice(alg, 4, 2)
    counts = Counter(lat.valuations)
    # mark 5: roots with coefficient -5 drop by one; positive coefficients rise
    assert counts[-1] == 4
    assert counts[1] == 104
    assert counts[0] == alg.dim - 108
    rs = alg.rs
    assert sum(1 for r in rs.roots if r.coords[3] == -5) == 4
    assert sum(1 for r in rs.roots if r.coords[3] > 0) == 104


@pytest.mark.parametrize("name", ["G2", "F4", "E6"])
def test_valuation_sum_is_half_dim_unipotent(get_alg, name):
    alg = get_alg(name)
    rs = alg.rs
    for node in range(rs.rank + 1):
        lat = parahoric_lattice(alg, node, 3)
        assert 2 * sum(lat.valuations) == dim_unipotent(rs, node)


def test_torus_valuations_are_zero(get_alg):
    alg = get_alg("F4")
    for node in range(5):
        lat = parahoric_lattice(alg, node, 2)
        assert all(v == 0 for v in lat.valuations[:4])


def test_iwahori_valuations(get_alg):
    alg = get_alg("C3")
    rs = alg.rs
    vals = iwahori_lattice(alg, 2)
    npos = len(rs.positive)
    assert all(v == 0 for v in vals[:rs.rank])
    assert all(v == 1 for v in vals[rs.rank:rs.rank + npos])
    assert all(v == 0 for v in vals[rs.rank + npos:])


def test_j_alpha_is_max_of_standard_and_parahoric(get_alg):
    for name in ["B3", "G2", "F4"]:
        alg = get_alg(name)
        for node in range(1, alg.rs.rank + 1):
            for p in (2, 3):
                lat = parahoric_lattice(alg, node, p)
                j = j_alpha_lattice(alg, node, p)
                assert j == tuple(max(0, v) for v in lat.valuations)


# -- bracket closure -------------------------------------------------------------------


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_lattices_close_under_bracket(get_alg, name):
    alg = get_alg(name)
    rs = alg.rs
    for p in (2, 3, 5):
        assert bracket_closure_violation(alg, p, iwahori_lattice(alg, p)) is None
        for node in range(rs.rank + 1):
            lat = parahoric_lattice(alg, node, p)
            assert bracket_closure_violation(alg, p, lat.valuations) is None
            if node >= 1:
                j = j_alpha_lattice(alg, node, p)
                assert bracket_closure_violation(alg, p, j) is None


def test_closure_violation_is_detected(get_alg):
    alg = get_alg("A2")
    rs = alg.rs
    # raising a single middle root vector breaks [X_a1, X_a2] containment
    vals = [0] * alg.dim
    vals[rs.rank + rs.index((1, 1))] = 1
    msg = bracket_closure_violation(alg, 2, tuple(vals))
    assert msg is not None


# -- reduced types ---------------------------------------------------------------------


@pytest.mark.parametrize("name,labels", [
    ("A3", ["A3", "A3", "A3", "A3"]),
    ("B3", ["B3", "B3", "A1+A1+A1", "A3"]),
    ("B4", ["B4", "B4", "A1+A1+B2", "A1+A3", "D4"]),
    ("C3", ["C3", "A1+B2", "A1+B2", "C3"]),
    ("C4", ["C4", "A1+C3", "B2+B2", "A1+C3", "C4"]),
    ("D4", ["D4", "D4", "A1+A1+A1+A1", "D4", "D4"]),
    ("D5", ["D5", "D5", "A1+A1+A3", "A1+A1+A3", "D5", "D5"]),
    ("G2", ["G2", "A1+A1", "A2"]),
    ("F4", ["F4", "A1+C3", "A2+A2", "A1+A3", "B4"]),
    ("E6", ["E6", "E6", "A1+A5", "A1+A5", "A2+A2+A2", "A1+A5", "E6"]),
    ("E7", ["E7", "A1+D6", "A7", "A2+A5", "A1+A3+A3", "A2+A5", "A1+D6", "E7"]),
    ("E8", ["E8", "A1+E7", "A2+E6", "A3+D5", "A4+A4", "A1+A2+A5", "A1+A7",
            "D8", "A8"]),
])
def test_reduced_labels(get_rs, name, labels):
    rs = get_rs(name)
    assert [reduced_label(rs, node) for node in range(rs.rank + 1)] == labels


def test_mark_one_nodes_reproduce_the_full_type(get_rs):
    for name in ["A4", "B4", "C3", "D5", "E6", "E7"]:
        rs = get_rs(name)
        for node in range(1, rs.rank + 1):
            if rs.marks[node - 1] == 1:
                assert reduced_label(rs, node) == name


# -- layers ----------------------------------------------------------------------------


def test_layer_partition(get_rs):
    for name in ["B3", "G2", "F4", "E6"]:
        rs = get_rs(name)
        for node in range(1, rs.rank + 1):
            n = rs.marks[node - 1]
            lays = layers(rs, node)
            assert [lay.index for lay in lays] == list(range(1, n))
            covered = sum(lay.dimension for lay in lays)
            assert covered == dim_unipotent(rs, node)
        assert layers(rs, 0) == []


def test_layer_duality(get_rs):
    for name in ["F4", "E6", "E7"]:
        rs = get_rs(name)
        for node in range(1, rs.rank + 1):
            n = rs.marks[node - 1]
            dims = {lay.index: lay.dimension for lay in layers(rs, node)}
            for i in range(1, n):
                assert dims[i] == dims[n - i]


# -- discriminants and divisors ----------------------------------------------------------


@pytest.mark.parametrize("name,p", [("G2", 2), ("F4", 3), ("E6", 2), ("E7", 3)])
def test_discriminant_identity(get_alg, name, p):
    alg = get_alg(name)
    rs = alg.rs
    base = determinant(alg.normalized_gram())
    assert base is not None
    for node in range(rs.rank + 1):
        disc = parahoric_discriminant(alg, node, p)
        want = base.abs().times_prime_power(p, dim_unipotent(rs, node))
        assert disc == want


def test_scaled_gram_entries(get_alg):
    alg = get_alg("G2")
    lat = parahoric_lattice(alg, 2, 2)
    sg = scaled_gram(alg, lat.valuations, 2)
    g = alg.normalized_gram().gram
    for i in range(alg.dim):
        for j in range(alg.dim):
            scale = 2 ** (lat.valuations[i] + lat.valuations[j])
            assert sg.gram[i][j] == g[i][j] * scale


@pytest.mark.parametrize("name,p", [("G2", 2), ("F4", 3), ("E6", 2)])
def test_divisors_are_dim_r_copies_of_p(get_alg, name, p):
    alg = get_alg(name)
    rs = alg.rs
    for node in range(rs.rank + 1):
        divisors = parahoric_divisors(alg, node, p)
        dim_r = dim_unipotent(rs, node)
        assert Counter(divisors) == Counter({1: alg.dim - dim_r, p: dim_r} if dim_r
                                            else {1: alg.dim})


def test_divisors_refuse_bad_prime(get_alg):
    with pytest.raises(PrimeConditionError):
        parahoric_divisors(get_alg("G2"), 1, 3)  # 3 divides det = 3^7
    with pytest.raises(PrimeConditionError):
        parahoric_divisors(get_alg("E6"), 2, 3)
    with pytest.raises(PrimeConditionError):
        parahoric_lattice(get_alg("G2"), 1, 6)  # composite


def test_divisor_rank_mod_p_oracle(get_alg):
    # rank of the scaled Gram over F_p must equal the number of unit divisors
    alg = get_alg("E6")
    p = 5
    lat = parahoric_lattice(alg, 4, p)
    m = [[x % p for x in row] for row in scaled_gram(alg, lat.valuations, p).gram]
    n = len(m)
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if m[r][col] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(n):
            if r != rank and m[r][col]:
                c = m[r][col]
                m[r] = [(a - c * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
    assert rank == alg.dim - dim_unipotent(alg.rs, 4)
    assert rank == Counter(parahoric_divisors(alg, 4, p))[1]


# -- matching --------------------------------------------------------------------------


def test_matching_unique_and_empty(get_alg):
    alg = get_alg("E8")
    assert matching_parahorics(alg, 2, FactoredInteger.parse("2^200")) == [4]
    assert matching_parahorics(alg, 2, FactoredInteger.parse("2^248")) == []
    alg = get_alg("F4")
    assert matching_parahorics(alg, 3, FactoredInteger.parse("2^26*3^36")) == [2]


def test_matching_can_be_ambiguous(get_alg):
    # every node of A2 is hyperspecial, so they all share the discriminant 3
    alg = get_alg("A2")
    assert matching_parahorics(alg, 2, FactoredInteger.from_int(3)) == [0, 1, 2]


def test_node_validation(get_alg):
    alg = get_alg("G2")
    with pytest.raises(NodeError):
        parahoric_lattice(alg, 3, 5)
    with pytest.raises(NodeError):
        build_report(alg, -1, 5)
