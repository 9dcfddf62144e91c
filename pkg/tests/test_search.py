import pytest

from twistsel.checker import Overall, admissibility_check
from twistsel.curves import CurveQ
from twistsel.errors import InvalidParameterError, PreconditionError
from twistsel.quadforms import class_number, field_discriminant
from twistsel.search import CSV_HEADER, SearchMode, enumerate_d, search_twists

E11A3 = CurveQ(0, -1, 1, 0, 0)


def test_enumerate_d_examples():
    assert list(enumerate_d(-20, -3, 5, 11)) == [-13, -17]
    assert list(enumerate_d(-3, -3, 7, 26)) == []  # -3 = 1 mod 4
    assert list(enumerate_d(-20, -3, 5, 11, ascending_abs=False)) == [-17, -13]
    with pytest.raises(InvalidParameterError):
        list(enumerate_d(-3, -20, 5, 11))
    with pytest.raises(InvalidParameterError):
        list(enumerate_d(-20, 3, 5, 11))


def test_enumerate_d_filters():
    for d in enumerate_d(-500, -3, 5, 11):
        assert d < 0 and d % 4 == 3
        from twistsel.intmath import is_squarefree
        import math

        assert is_squarefree(d)
        assert math.gcd(d, 55) == 1


def test_search_rows_revalidate():
    rows = search_twists(E11A3, 5, -100, -3)
    assert rows  # nonempty
    for row in rows:
        rep = admissibility_check(E11A3, 5, row.d)
        assert rep.overall is Overall.ADMISSIBLE
        assert row.D == field_discriminant(row.d)
        assert row.h == class_number(row.D)
        assert row.selmer_lower_bound == 5**row.ell_rank


def test_search_row_count_and_order():
    rows = search_twists(E11A3, 5, -100, -3)
    admissible = [
        d
        for d in enumerate_d(-100, -3, 5, 11)
        if admissibility_check(E11A3, 5, d).overall is Overall.ADMISSIBLE
    ]
    assert [row.d for row in rows] == sorted(admissible, key=abs)
    assert len(rows) == len(set(row.d for row in rows))


def test_search_includes_d37():
    rows = {row.d: row for row in search_twists(E11A3, 5, -100, -3)}
    row = rows[-37]
    assert (row.h, row.ell_rank, row.selmer_lower_bound, row.verdict) == (2, 0, 1, "SelmerTrivial")


def test_search_corollary_mode_verdict_consistency():
    rows = search_twists(E11A3, 5, -400, -3)
    for row in rows:
        want = "SelmerNontrivial" if row.h % 5 == 0 else "SelmerTrivial"
        assert row.verdict == want


def test_search_explain_mode():
    rows = search_twists(E11A3, 5, -50, -3, include_inadmissible=True)
    by_d = {row.d: row for row in rows}
    assert by_d[-13].verdict == "Inadmissible"
    assert "symbol.11" in by_d[-13].failed_clauses
    # all enumerated candidates appear exactly once
    assert sorted(by_d) == sorted(enumerate_d(-50, -3, 5, 11))


def test_search_lower_bound_only_mode():
    rows = search_twists(E11A3, 5, -100, -3, mode=SearchMode.LOWER_BOUND_ONLY)
    for row in rows:
        assert row.verdict == ""
        assert row.selmer_lower_bound is not None


def test_search_hypothesis_failure():
    with pytest.raises(PreconditionError):
        search_twists(CurveQ(0, 0, 0, 0, 1), 5, -100, -3)


def test_search_parallel_matches_serial():
    serial = search_twists(E11A3, 5, -200, -3, jobs=1)
    parallel = search_twists(E11A3, 5, -200, -3, jobs=2)
    assert serial == parallel


def test_csv_rows():
    rows = search_twists(E11A3, 5, -50, -3)
    header_fields = CSV_HEADER.split(",")
    assert header_fields == ["d", "D", "h", "ell_rank", "selmer_lb", "verdict", "failed_clauses"]
    for row in rows:
        assert len(row.to_csv_row().split(",")) == 7


def test_search_nonempty_s_curve():
    # E with S_E = {19}: CorollaryE rows are NotApplicable, bounds still computed
    E38 = CurveQ(1, 1, 1, 0, 1)
    rows = search_twists(E38, 5, -60, -3)
    assert rows
    for row in rows:
        assert row.verdict == "NotApplicable"
        assert row.selmer_lower_bound is not None
