import csv
import io
import json
import random
from fractions import Fraction

import numpy as np
import pytest

from spherecodes.harmonics import gegenbauer2, harm_dim
from spherecodes.scalars import QuadScalar, sqrt_rational
from spherecodes.search import (
    CSV_COLUMNS,
    admissible_inner_products,
    check_level,
    enumerate_parameters,
    evaluate,
    level_from_m,
    rows_to_csv,
    rows_to_json,
    scan,
    size_equation_holds,
    solve_code_size,
)

F = Fraction


@pytest.fixture(scope="module")
def default_rows():
    return enumerate_parameters()


@pytest.mark.parametrize("d, m, ell", [(7, 4, F(1, 7)), (6, 9, F(-1, 27)), (2, 5, F(-1, 5)), (22, 25, F(-1, 275))])
def test_level_from_m(d, m, ell):
    assert level_from_m(d, m) == ell
    assert check_level(d, m)


def test_level_closed_form_sweep():
    for d in range(2, 40):
        for m in range(1, 60):
            assert check_level(d, m)


@pytest.mark.parametrize("d, ell, size", [(7, F(1, 7), 240), (6, F(1, 27), 56), (22, F(1, 275), 552), (2, F(1, 5), 12)])
def test_solve_code_size(d, ell, size):
    assert solve_code_size(d, ell) == size
    assert solve_code_size(d, -ell) == size
    assert size_equation_holds(d, size, ell)


def test_pole_has_no_solution():
    # D l^2 = 1 exactly: d = 2, D = 5, l = 1/sqrt5 is irrational, so use d with square D
    d = next(d for d in range(2, 200) if int(harm_dim(2, d) ** 0.5) ** 2 == harm_dim(2, d))
    D = harm_dim(2, d)
    assert solve_code_size(d, F(1, int(D**0.5))) is None


@pytest.mark.parametrize(
    "d, ell, expected",
    [
        (7, F(1, 7), {QuadScalar(0), QuadScalar(F(1, 2))}),
        (6, F(1, 27), {QuadScalar(F(1, 3)), sqrt_rational(F(11, 63))}),
    ],
)
def test_admissible_inner_products(d, ell, expected):
    assert admissible_inner_products(d, ell) == expected


def test_admissible_icosahedron():
    xs = admissible_inner_products(2, F(1, 5))
    assert sqrt_rational(F(1, 5)) in xs
    for x in xs:
        assert gegenbauer2(2, x) in (F(1, 5), F(-1, 5))


def test_default_rows_contain_known_codes(default_rows):
    found = {(r.d, r.m): r.code_size for r in default_rows}
    assert found[(2, 5)] == 12
    assert found[(6, 9)] == 56
    assert found[(7, 4)] == 240
    assert found[(22, 25)] == 552


def test_known_pairs_reproduce_exact_sizes():
    assert [evaluate(d, m).code_size for d, m in [(2, 5), (6, 9), (7, 4), (22, 25)]] == [12, 56, 240, 552]


def test_rows_satisfy_filters(default_rows):
    keys = [(r.d, r.m) for r in default_rows]
    assert keys == sorted(keys)
    for r in default_rows:
        assert r.ell != 0 and abs(r.ell) < 1
        assert r.D * r.ell**2 < 1
        assert r.code_size % 2 == 0 and r.code_size >= 2 * r.D
        assert size_equation_holds(r.d, r.code_size, r.ell)
        for x in r.inner_products:
            assert gegenbauer2(r.d, x) in (r.ell, -r.ell)


def test_scan_flags_each_filter():
    rows = scan(10, 20)
    assert len(rows) == 8 * 20
    assert any(not r.nonzero_level for r in rows)  # m = d+1
    assert any(r.nonzero_level and not r.below_pole for r in rows)
    assert any(r.below_pole and not r.integral for r in rows)
    # once below the pole the bound is automatic
    assert all(r.fisher_ok for r in rows if r.integral)


def test_scan_range_checks():
    with pytest.raises(ValueError):
        scan(2, 10)
    with pytest.raises(ValueError):
        scan(10, 0)


def test_restricted_run_is_subset(default_rows):
    small = enumerate_parameters(9, 10)
    assert small
    big = {(r.d, r.m, r.code_size) for r in default_rows}
    assert {(r.d, r.m, r.code_size) for r in small} <= big
    assert all(r.d + 1 <= 9 and r.m <= 10 for r in small)
    assert small == [r for r in default_rows if r.d + 1 <= 9 and r.m <= 10]


def test_brute_force_size_oracle():
    # scan even sizes up to 1e7 for the equation, cleared of denominators, in int64
    rng = random.Random(2)
    pairs = [(d, m) for d in range(2, 40) for m in range(1, 120) if m != d + 1]
    picked = rng.sample(pairs, 40)
    picked += [(2, 5), (6, 9), (7, 4), (22, 25), (4, 3), (9, 7), (3, 1), (11, 16), (5, 2), (30, 1)]
    for d, m in picked:
        ell = level_from_m(d, m)
        D = harm_dim(2, d)
        p2, q2 = ell.numerator**2, ell.denominator**2
        M = np.arange(2 * D + (2 * D) % 2, 10**7 + 1, 2, dtype=np.int64)
        hits = M[M * q2 - 2 * D * q2 == D * p2 * (M - 2)]
        expected = solve_code_size(d, ell) if D * ell * ell < 1 else None
        if expected is not None and expected > 10**7:
            assert len(hits) == 0
            continue
        assert hits.tolist() == ([] if expected is None else [expected]), (d, m)


def test_csv_output(default_rows):
    text = rows_to_csv(default_rows)
    records = list(csv.DictReader(io.StringIO(text)))
    assert list(records[0]) == CSV_COLUMNS
    assert len(records) == len(default_rows)
    e8 = next(r for r in records if r["d+1"] == "8" and r["m"] == "4")
    assert (e8["D"], e8["ell"], e8["2N"], e8["inner_products"], e8["fisher_ok"]) == ("35", "1/7", "240", "0;1/2", "True")


def test_json_output(default_rows):
    doc = json.loads(rows_to_json(default_rows, dmax=100, mmax=200))
    assert doc["schema"] == "spherecodes-search/1"
    assert "2D" in doc["fisher_rule"]
    assert doc["parameters"] == {"dmax": 100, "mmax": 200}
    assert len(doc["rows"]) == len(default_rows)
    for rec in doc["rows"]:
        for s in rec["inner_products"]:
            assert str(QuadScalar.parse(s)) == s
