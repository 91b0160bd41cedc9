from kkschur import tables
from kkschur.cores import core_shape
from kkschur.partitions import union
from kkschur.ring import Basis, SymFunc, g, multiply, oracle_multiply

from .reference_tables import TABLE1_MISPRINTS, TABLE2_MISPRINTS, table1_cells, table2_rows


def test_table1_layout(ctx3):
    assert tables.staircase_columns(3) == [(1,), (1, 1), (2,), (2, 1), (2, 1, 1)]
    Qs = [Q.partition() for Q in tables.distinct_rectangle_unions(3)]
    assert Qs == [(3,), (2, 2), (1, 1, 1), (3, 2, 2), (3, 1, 1, 1), (2, 2, 1, 1, 1), (3, 2, 2, 1, 1, 1)]
    assert len(tables.table1(ctx3)) == 35


def test_table1_agrees_with_golden_outside_misprints(ctx3):
    golden = table1_cells()
    assert len(golden) == 35
    for Q, lam, q in tables.table1(ctx3):
        if (Q.partition(), lam) not in TABLE1_MISPRINTS:
            assert q.terms == golden[(Q.partition(), lam)], (Q, lam)


def test_table1_misprints_are_certified(ctx3):
    golden = table1_cells()
    ours = {(Q.partition(), lam): q for Q, lam, q in tables.table1(ctx3)}
    for Q, lam in TABLE1_MISPRINTS:
        target = g(ctx3, union(Q, lam))
        printed = SymFunc.from_dict(3, Basis.KKSCHUR, golden[(Q, lam)])
        assert ours[(Q, lam)] != printed
        for mul in (multiply, oracle_multiply):
            assert mul(ctx3, g(ctx3, Q), ours[(Q, lam)]) == target
            assert mul(ctx3, g(ctx3, Q), printed) != target


def test_big_cell(ctx3):
    ours = {(Q.partition(), lam): q for Q, lam, q in tables.table1(ctx3)}
    q = ours[((3, 2, 2, 1, 1, 1), (2, 1, 1))]
    assert [c for _, c in q.items] == [1, 2, 3, 2, 5, 5, 8, 9]


def test_table2_agrees_with_golden_outside_misprints(ctx3):
    golden = table2_rows()
    rows = tables.table2(ctx3, 6)
    assert len(rows) == len(golden) == 23
    for lam, core, ms in rows:
        assert golden[lam]["core"] == core
        for t, m in enumerate(ms, start=1):
            if (lam, t) in TABLE2_MISPRINTS:
                continue
            mu, c = golden[lam]["mins"][t - 1]
            assert m == {"mu": mu} and core_shape(ctx3, mu) == c, (lam, t)


def test_table2_misprint_follows_from_quotient(ctx3):
    from kkschur.theorems.conjectures import rect_quotient
    q = rect_quotient(ctx3, (2, 1), 3)
    assert q.terms == {(2, 1): 1, (1, 1): 1}
    assert tables.table2(ctx3, 3)[5][2][2] == {"mu": (1, 1)}


def test_tables_for_other_levels():
    from kkschur.cores import LevelContext
    ctx = LevelContext.for_level(2)
    text = tables.table1_text(ctx)
    assert text.splitlines()[1] == "[2]\t[1]\tg[1] + g[0]"
    assert len(tables.table2(ctx, 4)) == 9
