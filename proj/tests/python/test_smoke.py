"""Smoke tests for the python bindings.

The heavy verification lives in the C++ suites; these check that the
module imports, that big integers cross the boundary exactly, and that
the main entry points behave on the known small solutions.
"""

import json
from fractions import Fraction

import pytest

import descent_forge as df


KNOWN = [
    (1, 2, 5),
    (701, 430, 15),
    (262009, 78842, 25),
    (78606773, 10718566, 35),
]


def test_core_arithmetic():
    assert df.gcd(701, 430) == 1
    assert df.gcd(-486, 243) == 243
    assert df.valuation_3(-486) == 5
    assert df.isqrt(491401) == 701
    assert df.is_perfect_square(491401)
    assert not df.is_perfect_square(243)
    assert df.legendre_symbol(3, 7) == -1
    assert df.legendre_symbol(7, 59) == 1
    assert df.jacobi_symbol(2, 15) == 1
    assert df.ternary_solvable(7, 59, 3)
    assert not df.ternary_solvable(7, 59, 1)


def test_big_integers_round_trip_exactly():
    n = 3**505 + 12345678901234567890
    assert df.gcd(n, 0 + n) == n
    assert df.isqrt(n * n) == n
    assert df.isqrt(n * n + 1) == n
    assert df.valuation_3(3**505 * 7) == 505


def test_forms_and_incidence():
    assert df.eval_forms(2, 1) == (-243, -486, 2187)
    assert df.eval_forms(-2, 1) == (701, -430, 2187)
    assert df.check_identity(-243, -486, 2187)
    assert not df.check_identity(1, 1, 1)
    assert df.incidence(701, -430, 2187) == Fraction(-2, 1)
    assert df.reconstruct_from_incidence(-2, 1) == (701, -430, 2187, 1)
    with pytest.raises(ValueError):
        df.incidence(1, 2, 9)


def test_solution_surface():
    assert df.verify(1, 2, 5) == ("pp_solution", 1)
    assert df.verify(3, 6, 7) == ("imprimitive", 3)
    assert df.verify(1, 2, 6) == ("not_a_solution", 1)
    assert df.is_suitable(15)
    assert not df.is_suitable(10)

    s = df.PPSolution(701, 430, 15)
    assert (s.x, s.y, s.m) == (701, 430, 15)
    assert df.parity_check(s)
    with pytest.raises(Exception):
        df.PPSolution(1, 2, 6)


def test_successors_match_the_known_list():
    root = df.PPSolution(*KNOWN[0])
    assert df.first_successor(root) == root
    s2 = df.second_successor(root)
    assert (s2.x, s2.y, s2.m) == KNOWN[1]
    s3 = df.first_successor(s2)
    assert (s3.x, s3.y, s3.m) == KNOWN[2]
    assert df.recognize_successor(s3, s2) == "first"
    assert df.recognize_successor(s3, root) == "neither"


def test_enumeration_and_descent():
    nodes = df.enumerate_tree(35)
    assert [(n.solution.x, n.solution.y, n.solution.m) for n in nodes] == KNOWN
    assert [n.path for n in nodes] == ["", "S", "SF", "SS"]

    leaf = df.PPSolution(*KNOWN[3])
    steps = df.descend_to_root(leaf)
    assert [s["kind"] for s in steps] == ["second", "second"]
    assert steps[0]["theta"] == Fraction(-430, 701)
    assert steps[0]["delta"] == 1
    assert (steps[-1]["parent"].x, steps[-1]["parent"].m) == (1, 5)

    step = df.predecessor(df.PPSolution(*KNOWN[2]))
    assert step["kind"] == "first"
    assert step["delta"] == 243

    cert = df.descent_certificate(leaf)
    parsed = json.loads(cert)
    assert parsed["start"]["x"] == "78606773"
    assert len(parsed["steps"]) == 2
    assert df.check_certificate(cert)
    parsed["steps"][0]["kind"] = "first"
    assert not df.check_certificate(json.dumps(parsed))


def test_oracle():
    assert df.brute_force(7, 59, 1, 3, 5) == [(1, 2, True)]
    assert df.brute_force(7, 59, 1, 3, 10) == []
    assert df.brute_force(7, 59, 1, 3, 15) == [(243, 486, False), (701, 430, True)]
    sweep = df.oracle_sweep(7, 59, 1, 3, 25)
    assert sweep["suitable"] == [5, 15, 25]
    assert not sweep["truncated"]

    truncated = df.oracle_sweep(7, 59, 1, 3, 25, budget=500)
    assert truncated["truncated"]
    assert truncated["truncated_at"] > 5
