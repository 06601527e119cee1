import json
from fractions import Fraction

import pytest

import ulrich_lab as ul


def test_lattice_and_bundles():
    x4 = ul.DelPezzoSurface(4)
    c1 = ul.parse_divisor("(4;1,1,1,1,0)", x4)
    assert str(c1) == "(4;1,1,1,1,0)"
    assert ul.intersect(c1, c1) == 12
    assert ul.intersect(c1, x4.anticanonical_class()) == 8
    e = ul.BundleNumerics(2, c1, 4)
    assert ul.euler_char(e, x4) == 8
    assert ul.slope(e, x4) == Fraction(4)
    assert ul.expected_moduli_dim(e) == 1
    assert ul.is_ulrich_candidate(e, x4)
    assert ul.BundleNumerics.from_dict(e.to_dict()) == e
    assert 2 * c1 == c1 + c1


def test_errors_map_to_python():
    with pytest.raises(ul.UlrichLabError, match="DegreeOutOfRange"):
        ul.DelPezzoSurface(9)
    with pytest.raises(ValueError):
        ul.parse_divisor("(2;1,1)", ul.DelPezzoSurface(3))


def test_big_ranks_are_python_ints():
    n = ul.rank_by_recurrence(8, 5, 50)
    assert isinstance(n, int)
    assert n > 2**63
    assert ul.rank_closed_form(8, 5, 50) == n
    assert ul.rank_by_recurrence(4, 2, 3) == 18


def test_syzygy_trace():
    x4 = ul.DelPezzoSurface(4)
    seed = ul.BundleNumerics(2, ul.parse_divisor("(4;1,1,1,1,0)"), 4)
    trace = ul.iterate_syzygy(seed, x4, 3)
    assert [e["rank"] for e in trace["entries"]] == [2, 6, 10, 14, 18]
    assert {e["drift"] for e in trace["entries"]} == {1}
    c1, c2 = ul.cink_chern(seed, x4, 0)
    assert str(c1) == "(-4;-1,-1,-1,-1,0)" and c2 == 8
    assert ul.intro_chern(4, 12, 4, 0).c2 == 8


def test_cubics():
    cubics = ul.twisted_cubics()
    assert len(cubics) == 72
    assert sorted({t for t, _ in cubics}) == ["A", "B", "C", "D", "E"]
    target = ul.parse_divisor("(4;2,1,1,1,1,0)")
    pairs = ul.decompose_stable_sum(target, 2)
    assert [str(p) for p in pairs[0]] == ["(1;0,0,0,0,0,0)", "(3;2,1,1,1,1,0)"]
    partner, dim = ul.cubic_moduli_pair(ul.BundleNumerics(2, target, 3))
    assert partner.rank == 4 and partner.c2 == 5 and dim == 1
    assert ul.chi_pair_closed_form(2, [4]) == -2


def test_cli_in_process():
    code, out, err = ul.run_command("table-main2")
    assert code == 0 and err == ""
    rows = json.loads(out)["rows"]
    assert len(rows) == 9 and all(r["match"] for r in rows)
    code, _, err = ul.run_command("syzygy", d=3, k_max=2)
    assert code == 2 and "OutOfTheoremScope" in err


def test_property_suite_small():
    results = ul.run_checks(cases=25)
    assert results and all(r["passed"] for r in results)
