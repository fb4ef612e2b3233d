from fractions import Fraction

import numpy as np
import pytest

from spherecodes import configurations as cfg
from spherecodes.analysis import code_params, design_strength, moment_sums, optimality_check, venkov_check
from spherecodes.configurations import normalized_gram
from spherecodes.embedding import embed_code
from spherecodes.gram import GramMatrix
from spherecodes.scalars import QuadScalar, sqrt_rational

F = Fraction
MANDATORY = [cfg.icosahedron, cfg.cell600, cfg.e8_roots, cfg.kissing_56, cfg.schlafli_27]


def test_code_params_embedded_e8(e8):
    p = code_params(embed_code(e8).gram)
    assert (p.dim, p.size, p.a, p.antipodal) == (35, 240, F(1, 7), True)


def test_code_params_icosahedron(ico):
    p = code_params(normalized_gram(ico))
    assert (p.dim, p.size, p.antipodal) == (3, 12, True)
    assert p.a == sqrt_rational(F(1, 5))


def test_code_params_degenerate_pair():
    G = GramMatrix.from_entries([[1, -1], [-1, 1]], 3)
    p = code_params(G)
    assert p.a is None and p.antipodal


def test_code_params_rejects_repeated_point():
    G = GramMatrix.from_entries([[1, 1], [1, 1]], 3)
    with pytest.raises(ValueError):
        code_params(G)


def test_venkov_embedded_e8(e8):
    rep = venkov_check(embed_code(e8).gram)
    assert rep.defect == 0 and rep.is_3design


@pytest.mark.parametrize("d", [1, 2, 5, 30])
def test_venkov_antipodal_pair(d):
    G = GramMatrix.from_entries([[1, -1], [-1, 1]], d)
    rep = venkov_check(G)
    assert rep.defect == 4 - F(4, d + 1)
    assert not rep.is_3design


def test_venkov_random_float():
    rng = np.random.default_rng(0)
    X = rng.normal(size=(50, 5))
    X /= np.linalg.norm(X, axis=1, keepdims=True)
    X = np.vstack([X, -X])
    G = X @ X.T
    direct = sum(G[i, j] ** 2 for i in range(100) for j in range(100)) - 100**2 / 5
    assert venkov_check(G, 4) == pytest.approx(direct, abs=1e-9)
    assert venkov_check(G, 4) >= -1e-9


@pytest.mark.parametrize(
    "builder, strength",
    [(cfg.e8_roots, 7), (cfg.cell600, 11), (cfg.icosahedron, 5), (cfg.kissing_56, 5), (cfg.schlafli_27, 4)],
)
def test_design_strength(builder, strength):
    rep = design_strength(normalized_gram(builder()))
    assert rep.strength == strength
    assert rep.moment_sums[strength + 1] != 0


@pytest.mark.parametrize("builder", MANDATORY)
def test_embedded_codes_are_3_designs(builder):
    rep = design_strength(embed_code(builder()).gram, t_max=4)
    assert rep.strength >= 3


def test_design_strength_bounds():
    G = GramMatrix.from_entries([[1]], 3)
    with pytest.raises(ValueError):
        design_strength(G, t_max=13)


def test_optimality_e8():
    v = optimality_check(7, 120, [0, F(1, 2), F(-1, 2)])
    assert v.ell == F(1, 7) and v.level_constant and v.equation_holds and v.optimal
    assert v.signed_levels == {QuadScalar(F(1, 7)), QuadScalar(F(-1, 7))}


def test_optimality_schlafli():
    v = optimality_check(5, 27, [F(-1, 2), F(1, 4)])
    assert v.levels == {QuadScalar(F(1, 10)), QuadScalar(F(1, 8))}
    assert not v.level_constant and not v.optimal


def test_optimality_icosahedron_arithmetic():
    s = sqrt_rational(F(1, 5))
    v = optimality_check(2, 6, [s, -s])
    assert v.ell == F(1, 5) and v.optimal
    assert F(144, 5) - 24 == F(1, 25) * (144 - 24)


def test_optimality_empty():
    with pytest.raises(ValueError):
        optimality_check(3, 1, [])


@pytest.mark.parametrize("builder", MANDATORY)
def test_equation_iff_zero_defect_when_level_constant(builder):
    X = builder()
    code = embed_code(X)
    v = optimality_check(X.d, code.n_half, code_params(code.source_half).nonantipodal_ips)
    if v.level_constant:
        assert v.equation_holds == (venkov_check(code.gram).defect == 0)


def test_equation_fails_for_wrong_size():
    # same levels, half size off by one: equation must fail
    assert not optimality_check(7, 119, [0, F(1, 2)]).equation_holds


@pytest.mark.parametrize("builder", [cfg.schlafli_27])
def test_doubling_kills_odd_moments(builder):
    X = builder()
    G = normalized_gram(X)
    doubled = G.antipodal_double()
    s0 = design_strength(G)
    s1 = design_strength(doubled)
    assert s1.strength >= s0.strength
    for k, v in s1.moment_sums.items():
        if k % 2:
            assert v == 0


def test_moment_two_matches_sum_of_squares(e8):
    G = normalized_gram(e8)
    S2 = moment_sums(G, t_max=2)[2]
    n, d = G.n, G.d
    assert (d * S2 + n * n) / (d + 1) == G.sum_of_squares()
