import pytest

from chevlie import InvalidLieTypeError, NotARootError, build
from chevlie.intform import det_int

# (type, root count, h, c, dual Coxeter, center order)
TABLE = [
    ("A1", 2, 2, 1, 2, 2),
    ("A2", 6, 3, 1, 3, 3),
    ("A3", 12, 4, 1, 4, 4),
    ("A4", 20, 5, 1, 5, 5),
    ("A5", 30, 6, 1, 6, 6),
    ("A6", 42, 7, 1, 7, 7),
    ("A7", 56, 8, 1, 8, 8),
    ("A8", 72, 9, 1, 9, 9),
    ("B2", 8, 4, 2, 3, 2),
    ("B3", 18, 6, 2, 5, 2),
    ("B4", 32, 8, 2, 7, 2),
    ("C2", 8, 4, 2, 3, 2),
    ("C3", 18, 6, 2, 4, 2),
    ("C4", 32, 8, 2, 5, 2),
    ("D4", 24, 6, 1, 6, 4),
    ("D5", 40, 8, 1, 8, 4),
    ("D6", 60, 10, 1, 10, 4),
    ("D7", 84, 12, 1, 12, 4),
    ("D8", 112, 14, 1, 14, 4),
    ("G2", 12, 6, 3, 4, 1),
    ("F4", 48, 12, 2, 9, 1),
    ("E6", 72, 12, 1, 12, 3),
    ("E7", 126, 18, 1, 18, 2),
    ("E8", 240, 30, 1, 30, 1),
]


@pytest.mark.parametrize("name,nroots,h,c,hv,center", TABLE)
def test_counts_and_numbers(get_rs, name, nroots, h, c, hv, center):
    rs = get_rs(name)
    assert len(rs.roots) == nroots
    assert rs.dim == rs.rank + nroots
    assert rs.numbers() == (h, c, hv)
    assert rs.center_order == center
    assert sum(1 for r in rs.roots if r.height > 0) == nroots // 2


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_reflection_closure_and_negation(get_rs, name):
    rs = get_rs(name)
    coords = {r.coords for r in rs.roots}
    for beta in rs.roots:
        assert tuple(-x for x in beta.coords) in coords
        for gamma in rs.roots:
            assert rs.reflect_in_root(beta.coords, gamma.coords) in coords


def test_g2_roots_frozen(get_rs):
    positive = {(1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3)}
    rs = get_rs("G2")
    assert {r.coords for r in rs.positive} == positive
    assert rs.highest_root.coords == (2, 3)
    assert rs.marks == (2, 3)


@pytest.mark.parametrize("name,marks", [
    ("A4", (1, 1, 1, 1)),
    ("B3", (1, 2, 2)),
    ("C3", (2, 2, 1)),
    ("D4", (1, 2, 1, 1)),
    ("G2", (2, 3)),
    ("F4", (2, 3, 4, 2)),
    ("E6", (1, 2, 2, 3, 2, 1)),
    ("E7", (2, 2, 3, 4, 3, 2, 1)),
    ("E8", (2, 3, 4, 5, 6, 4, 2, 3)),
])
def test_marks(get_rs, name, marks):
    rs = get_rs(name)
    assert rs.marks == marks
    # the highest root dominates: adding any simple root leaves the system
    for i in range(rs.rank):
        up = list(rs.highest_root.coords)
        up[i] += 1
        assert not rs.is_root(tuple(up))


@pytest.mark.parametrize("name", [n for n, *_ in TABLE])
def test_length_classes(get_rs, name):
    rs = get_rs(name)
    c = rs.ratio_c
    for r in rs.roots:
        ls = rs.length_sq(r.coords)
        assert ls in (2, 2 * c)
        assert r.length_class == ("long" if ls == 2 * c else "short")
    assert rs.highest_root.length_class == "long"


@pytest.mark.parametrize("name", ["A2", "B3", "C4", "D5", "G2", "F4", "E6"])
def test_coroot_gram_is_even_positive(get_rs, name):
    rs = get_rs(name)
    g = [list(row) for row in rs.coroot_gram]
    n = len(g)
    for i in range(n):
        assert g[i][i] % 2 == 0
        for j in range(n):
            assert g[i][j] == g[j][i]
    for k in range(1, n + 1):
        leading = [row[:k] for row in g[:k]]
        assert det_int(leading) > 0


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "F4"])
def test_pairing_with_coroot(get_rs, name):
    rs = get_rs(name)
    for beta in rs.roots:
        assert rs.pairing_with_coroot(beta.coords, beta.coords) == 2
        for gamma in rs.roots:
            n = rs.pairing_with_coroot(beta.coords, gamma.coords)
            assert isinstance(n, int)
            assert abs(n) <= 3


@pytest.mark.parametrize("name", ["A2", "B2", "C3", "G2", "F4"])
def test_root_string_bound(get_rs, name):
    rs = get_rs(name)
    for alpha in rs.roots:
        for beta in rs.roots:
            if beta.coords == alpha.coords or beta.coords == tuple(
                    -x for x in alpha.coords):
                continue
            total = tuple(a + b for a, b in zip(alpha.coords, beta.coords))
            m = rs.root_string_m(alpha.coords, beta.coords)
            assert 0 <= m <= 3
            if rs.is_root(total):
                # structure constants are +-(m+1) with |N| <= 3
                assert m <= 2


def test_g2_string_of_length_four(get_rs):
    # beta = (1, 3) sits atop the alpha2-string (1,0)..(1,3): m = 3, and
    # beta + alpha2 is not a root, so m = 3 only occurs off the summable case
    rs = get_rs("G2")
    assert rs.root_string_m((0, 1), (1, 3)) == 3
    assert not rs.is_root((1, 4))


def test_index_layout(get_rs):
    rs = get_rs("F4")
    npos = len(rs.positive)
    for k, r in enumerate(rs.positive):
        assert rs.index(r.coords) == k
        assert rs.index(tuple(-x for x in r.coords)) == k + npos
    heights = [r.height for r in rs.positive]
    assert heights == sorted(heights)


def test_not_a_root(get_rs):
    rs = get_rs("A2")
    with pytest.raises(NotARootError):
        rs.coords_of((2, 0))
    with pytest.raises(NotARootError):
        rs.index((1, -1))
    assert not rs.is_root((0, 0))


@pytest.mark.parametrize("bad", ["Z9", "A0", "B1", "C1", "D2", "E5", "E9", "F5", "G3", "", "8E"])
def test_invalid_types_rejected(bad):
    with pytest.raises(InvalidLieTypeError):
        build(bad)


def test_build_is_deterministic():
    a = build("F4")
    b = build("F4")
    assert [r.coords for r in a.roots] == [r.coords for r in b.roots]
    assert a.cartan == b.cartan
