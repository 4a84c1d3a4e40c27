import pytest

from wahlorder.resarith import SingularityParams
from wahlorder.polyring import Poly, S, tsub, parse_poly, format_poly
from wahlorder.kkalg import kk_table, poly_table
from wahlorder.deform import (hidden_ainf, visible_contributions, full_ainf,
                              insert_cochain, AinfTable, NotInsertableError,
                              diff_matrix, def0_generators, CochainSpec,
                              check_point, deformed_table, SpecNotFlatError)
from wahlorder.verify import (a1_diff_expected, component_specs_15_4,
                              component_specs_19_7)
from wahlorder.order import wahl_cochain

ONE = Poly.const(1)


def test_hidden_r2_matches_worked_example():
    # x = w_1, xbar = (1,1), q = (0,1), e = (0,0)
    t = hidden_ainf(SingularityParams(2, 1))
    x, xb, q = (1, 0), (1, 1), (0, 1)
    assert t.m3[(x, x, xb)] == {x: Poly.const(-1)}
    assert t.m3[(x, xb, xb)] == {xb: ONE}
    assert t.m3[(xb, x, xb)] == {xb: Poly.const(-1)}
    assert t.m3[(x, xb, q)] == {q: ONE}
    assert t.m3[(xb, x, q)] == {q: Poly.const(-1)}
    # the Gauss-word B family at x = y gives the remaining worked product
    assert t.m3[(x, x, xb)] == {x: Poly.const(-1)}
    assert (x, x, q) not in t.m3  # q-insertions at corners live in the visible part


def test_hidden_unit_and_pairing():
    t = hidden_ainf(SingularityParams(9, 2))
    for i in range(9):
        assert t.m2[((i, 0), (0, 0))] == {(i, 0): ONE}
        assert t.m2[((0, 0), (i, 0))] == {(i, 0): ONE}
        assert t.m2[((i, 1), (0, 0))] == {(i, 1): ONE}
        assert t.m2[((0, 0), (i, 1))] == {(i, 1): Poly.const(-1)}
        if i:
            assert t.m2[((i, 1), (i, 0))] == {(0, 1): ONE}
            assert t.m2[((i, 0), (i, 1))] == {(0, 1): Poly.const(-1)}
    # per-crossing triples
    for i in range(1, 9):
        assert t.m3[((i, 1), (i, 0), (i, 1))] == {(i, 1): Poly.const(-1)}
        assert t.m3[((i, 1), (i, 0), (0, 1))] == {(0, 1): Poly.const(-1)}
        assert t.m3[((i, 0), (i, 1), (0, 1))] == {(0, 1): ONE}
    assert t.degrees_present() <= {0, 1}


def test_visible_r2_bigon():
    t = visible_contributions(SingularityParams(2, 1))
    s = Poly.var(S)
    x, xb, q = (1, 0), (1, 1), (0, 1)
    # products: w_1^2 = s e and the Morse-maximum readings m_2(q, x) = s xbar
    assert t.m2[(x, x)] == {(0, 0): s}
    assert t.m2[(q, x)] == {xb: s}
    assert t.m2[(x, q)] == {xb: -s}
    # the two differential readings cancel: no m1 left
    assert t.m1 == {}


def test_visible_zero_limit_is_kk():
    # with s = 0 and no insertions, only the SW-orange triangles survive
    for (r, a) in ((9, 2), (7, 6), (12, 5)):
        params = SingularityParams(r, a)
        t = visible_contributions(params)
        table = kk_table(params)
        zero = {S: Poly.zero()}
        for (a2, a1), cell in t.m2.items():
            if a2[1] == 0 and a1[1] == 0:
                got = {}
                for out, c in cell.items():
                    cz = c.substitute(zero)
                    if not cz.is_zero():
                        assert cz == Poly.const(1)
                        got[out[0]] = 1
                assert got == table.product(a2[0], a1[0])


def test_insert_cochain_zero_is_identity():
    params = SingularityParams(5, 2)
    ops = insert_cochain(full_ainf(params), 5)
    zero = {tsub(i): Poly.zero() for i in range(5)}
    zero[S] = Poly.zero()
    table = kk_table(params)
    for (j, i), cell in ops.products.items():
        got = {}
        for out, c in cell.items():
            cz = c.substitute(zero)
            if not cz.is_zero():
                got[out[0]] = cz
        want = {k: Poly.const(v) for k, v in table.product(j, i).items()}
        assert got == want
    for i in range(5):
        dead = all(c.substitute(zero).is_zero() for c in ops.differentials[i].values())
        assert dead


def test_insert_cochain_r2():
    params = SingularityParams(2, 1)
    ops = insert_cochain(full_ainf(params), 2)
    # w_1^2 = s w_0 - t_1 w_1
    assert ops.products[(1, 1)] == {(0, 0): Poly.var(S),
                                    (1, 0): Poly.var(tsub(1), 1, -1)}
    assert ops.differentials[1] == {}


def test_insert_cochain_rejects_higher_degrees():
    t = AinfTable()
    t.add_m2((1, 2), (0, 0), (1, 2), ONE)  # a fake degree-2 generator
    with pytest.raises(NotInsertableError):
        insert_cochain(t, 3)


def test_hidden_insertion_a1_differentials():
    # hidden contributions alone: dw_i gets t_i t_j wbar_j for i < j and
    # -t_i t_j wbar_j for i > j
    r = 6
    ops = insert_cochain(hidden_ainf(SingularityParams(r, 1)), r)
    for i in range(1, r):
        want = {}
        for j in range(1, r):
            if j == i:
                continue
            coeff = Poly.var(tsub(i)) * Poly.var(tsub(j))
            want[(j, 1)] = coeff if i < j else -coeff
        assert ops.differentials[i] == want


def test_diff_matrix_examples():
    # r = 2: nothing to obstruct
    dm = diff_matrix(SingularityParams(2, 1))
    assert dm.entry(1, 1).is_zero() and dm.is_skew()
    # r = 4, a = 1: the second-component entry
    dm4 = diff_matrix(SingularityParams(4, 1))
    assert dm4.entry(1, 3) == parse_poly('t_2^2 + t_1 t_3 + s')
    assert dm4.entry(1, 2) == parse_poly('t_1 t_2')
    assert dm4.entry(2, 3) == parse_poly('t_2 t_3')
    # a = 1 closed formula
    for r in (3, 5, 8):
        dm = diff_matrix(SingularityParams(r, 1))
        for (i, j), want in a1_diff_expected(r).items():
            assert dm.entry(i, j) == want
    # skew for a non-trivial a
    assert diff_matrix(SingularityParams(15, 4)).is_skew()


def test_def0_generators_3_1():
    gens = def0_generators(SingularityParams(3, 1))
    assert gens == [parse_poly('t_1 t_2 + s')]


def test_check_point_examples():
    p4 = SingularityParams(4, 1)
    # all-zero point with s = 0 is flat
    assert check_point(p4, CochainSpec(4, {S: Poly.zero()}))
    # t_1 = 1, rest 0, s = 0: every generator vanishes (m_12 = t_1 t_2 etc.)
    assert check_point(p4, CochainSpec(4, {tsub(1): ONE, S: Poly.zero()}))
    # t_1 = t_2 = 1: m_12 = 1 != 0
    assert not check_point(p4, CochainSpec(4, {tsub(1): ONE, tsub(2): ONE,
                                               S: Poly.zero()}))
    # the Q-Gorenstein one-parameter locus is flat
    assert check_point(SingularityParams(9, 2), wahl_cochain(3, 1))


def test_component_parametrizations():
    p = SingularityParams(15, 4)
    dm = diff_matrix(p)
    for name, spec in component_specs_15_4().items():
        assert check_point(p, spec, dm), name
    p = SingularityParams(19, 7)
    dm = diff_matrix(p)
    for name, spec in component_specs_19_7().items():
        assert check_point(p, spec, dm), name


def test_deformed_table_r2():
    params = SingularityParams(2, 1)
    spec = CochainSpec(2, {tsub(1): Poly.var(tsub(1))})
    table = deformed_table(params, spec)
    assert table.product(1, 1) == {0: Poly.var(S), 1: Poly.var(tsub(1), 1, -1)}
    assert table.associator_violation() is None


def test_deformed_table_rejects_nonflat():
    params = SingularityParams(4, 1)
    bad = CochainSpec(4, {tsub(1): ONE, tsub(2): ONE, S: Poly.zero()})
    with pytest.raises(SpecNotFlatError) as exc:
        deformed_table(params, bad)
    assert exc.value.position == (1, 2)
    assert format_poly(exc.value.value) == '1'


def test_deformed_table_degenerates_to_kk():
    # specialize the free parameters of the r = 5 first component to zero
    params = SingularityParams(5, 1)
    t1, t4 = Poly.var(tsub(1)), Poly.var(tsub(4))
    spec = CochainSpec(5, {tsub(1): t1, tsub(4): t4, S: -(t1 * t4)})
    table = deformed_table(params, spec)
    zero = {tsub(1): Poly.zero(), tsub(4): Poly.zero()}
    collapsed = {}
    for (j, i), cell in table.products.items():
        got = {k: c.substitute(zero) for k, c in cell.items()}
        got = {k: c for k, c in got.items() if not c.is_zero()}
        if got:
            collapsed[(j, i)] = got
    from wahlorder.kkalg import AlgebraTable
    assert AlgebraTable(5, collapsed) == poly_table(kk_table(params))


def test_cochain_spec_parse():
    text = """
    # free parameter and a relation
    t_1 = t_1
    t_3 = t_1^2 - 2
    s = -t_1 t_3
    """
    spec = CochainSpec.parse(text, 5)
    sub = spec.substitution()
    assert sub[tsub(1)] == Poly.var(tsub(1))
    assert sub[tsub(2)].is_zero()
    assert sub[tsub(3)] == parse_poly('t_1^2 - 2')
    assert sub[S] == parse_poly('-t_1 t_3')
    with pytest.raises(ValueError):
        CochainSpec.parse('t_9 = 1', 5)
    with pytest.raises(ValueError):
        CochainSpec.parse('t_0 = 1', 5)
    with pytest.raises(ValueError):
        CochainSpec.parse('bogus', 5)
