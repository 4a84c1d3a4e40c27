from math import gcd

from wahlorder.resarith import SingularityParams, bracket, is_orange
from wahlorder.kkalg import (kk_product_closed, kk_product_rect, kk_table,
                             opposite, dual_relabel, young_diagram, gauss_word,
                             self_intersection_count, AlgebraTable)


def naive_rect_product(params, j, i):
    """Fully independent oracle: scan every lattice point of the closed box."""
    r = params.r
    j, i = bracket(j, r), bracket(i, r)
    X = bracket(-params.a * j, r)
    for u in range(0, X + 1):
        for v in range(0, i + 1):
            if (u, v) != (0, 0) and is_orange((u, v), params):
                return None
    return (j + i) % r


def test_closed_product_examples():
    p92 = SingularityParams(9, 2)
    assert kk_product_closed(p92, 4, 1) == 5
    assert kk_product_closed(p92, 0, 7) == 7
    assert kk_product_closed(p92, 1, 1) is None
    p76 = SingularityParams(7, 6)
    assert kk_product_closed(p76, 3, 2) == 5
    assert kk_product_closed(p76, 3, 4) is None


def test_rect_product_examples():
    p92 = SingularityParams(9, 2)
    assert kk_product_rect(p92, 4, 2) == 6
    p51 = SingularityParams(5, 1)
    for j in range(1, 5):
        for i in range(1, 5):
            assert kk_product_rect(p51, j, i) is None


def test_full_table_5_2_against_naive_oracle():
    p = SingularityParams(5, 2)
    for j in range(5):
        for i in range(5):
            want = naive_rect_product(p, j, i)
            assert kk_product_closed(p, j, i) == want
            assert kk_product_rect(p, j, i) == want


def test_table_9_2():
    table = kk_table(SingularityParams(9, 2))
    assert dict(table.nontrivial_products()) == {
        (4, 1): {5: 1}, (4, 2): {6: 1}, (4, 3): {7: 1}, (4, 4): {8: 1}}
    assert table.is_unital()
    assert table.associator_violation() is None


def test_table_families():
    # truncated polynomials at a = r-1
    t = kk_table(SingularityParams(6, 5))
    for j in range(6):
        for i in range(6):
            want = {j + i: 1} if j + i < 6 else {}
            assert t.product(j, i) == want
    # square-zero radical at a = 1, and the r = 2 case
    assert not kk_table(SingularityParams(4, 1)).nontrivial_products()
    assert kk_table(SingularityParams(2, 1)).product(1, 1) == {}


def test_opposite_involution_and_duality():
    for (r, a) in ((9, 2), (16, 3), (11, 4)):
        p = SingularityParams(r, a)
        t = kk_table(p)
        assert opposite(opposite(t)) == t
        dual = SingularityParams(r, p.b)
        assert opposite(kk_table(dual)).relabel(dual_relabel(p)) == t
    # commutative case: opposite is the identity
    t76 = kk_table(SingularityParams(7, 6))
    assert opposite(t76) == t76


def test_relabel_rescale_roundtrip():
    t = kk_table(SingularityParams(9, 2))
    sigma = [(2 * k) % 9 for k in range(9)]  # unit multiplier: a bijection
    inv = [0] * 9
    for k, v in enumerate(sigma):
        inv[v] = k
    assert t.relabel(sigma).relabel(inv) == t
    signs = [1, -1, 1, -1, 1, -1, 1, -1, 1]
    assert t.rescale(signs).rescale(signs) == t


def test_young_diagram_9_2():
    p = SingularityParams(9, 2)
    d = young_diagram(p)
    # bottom row of the figure: labels 0,4,8,3,7,2,6,1 at x = 0..7
    for x, lbl in enumerate([0, 4, 8, 3, 7, 2, 6, 1]):
        assert d.contains(x, 0) and d.label(x, 0) == lbl
    # left column rows 0..4 carry their own index, and (1,5) blocks row 5 off
    # the column x = 1 onward
    for y in range(5):
        assert d.contains(0, y) and d.label(0, y) == y
    assert not d.contains(1, 5)
    # w_4 w_i products live in column 1
    assert d.contains(1, 4) and not d.contains(2, 1)
    # the product rule agrees with the closed formula everywhere
    for j in range(9):
        for i in range(9):
            assert d.product(j, i) == kk_product_closed(p, j, i)


def test_young_diagram_families():
    # a = 1: the left column has full height, everything else is row 0
    d = young_diagram(SingularityParams(6, 1))
    assert d.column_heights[0] == 6
    assert all(h == 1 for h in d.column_heights[1:])
    # a = r-1: staircase under the antidiagonal
    d = young_diagram(SingularityParams(7, 6))
    assert d.column_heights == [7, 6, 5, 4, 3, 2, 1]


def test_young_diagram_rule_matches_closed_many():
    for r in range(2, 21):
        for a in range(1, r):
            if gcd(a, r) != 1:
                continue
            p = SingularityParams(r, a)
            d = young_diagram(p)
            for j in range(r):
                for i in range(r):
                    assert d.product(j, i) == kk_product_closed(p, j, i)


def test_gauss_word():
    assert gauss_word(SingularityParams(2, 1)) == [1, 1]
    assert gauss_word(SingularityParams(5, 1)) == [4, 3, 2, 1, 4, 3, 2, 1]
    # Wahl (n, q): the subword of indices divisible by n is
    # n(n-1), ..., 2n, n, n, 2n, ..., n(n-1)
    for (n, q) in ((2, 1), (3, 1), (3, 2), (4, 3)):
        r = n * n
        w = gauss_word(SingularityParams(r, n * q - 1))
        sub = [x for x in w if x % n == 0]
        want = [n * k for k in range(n - 1, 0, -1)] + [n * k for k in range(1, n)]
        assert sub == want


def test_self_intersection_count():
    assert self_intersection_count(SingularityParams(16, 3)) == 15
    assert self_intersection_count(SingularityParams(2, 1)) == 1
    assert self_intersection_count(SingularityParams(9, 2)) == 8


def test_algebra_table_associator_detects_failure():
    bad = AlgebraTable(3, {(0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1},
                           (1, 0): {1: 1}, (2, 0): {2: 1},
                           (1, 1): {2: 1}, (2, 1): {1: 1}})
    assert bad.associator_violation() is not None
