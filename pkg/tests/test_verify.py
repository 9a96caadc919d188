import pytest

from strad.repmod import compose
from strad.verify import (
    build_sectional_chain,
    depth_or_none,
    evaluate_expression,
    igusa_todorov_check,
    injective_string,
    verify_grid,
    verify_lemma_s2p1,
    verify_main_theorem,
)


def test_lemma1_small():
    seq = verify_lemma_s2p1(2, 0)
    assert compose(seq.right_maps[0], seq.left_maps[0]).is_zero()


def test_chain_a32_names_and_length():
    chain = build_sectional_chain(3, 2)
    assert chain.names == ["f3", "f2", "g1", "g2", "g3", "g4", "g5", "f1"]
    assert len(chain) == 8
    for f in chain.maps:
        assert chain.table.depth(f) == 1


def test_chain_a20_length():
    assert len(build_sectional_chain(2, 0)) == 5


def test_injective_strings():
    assert injective_string(3) == "beta2"
    assert injective_string(5) == "beta4 beta3 beta2"


def test_f1_prime_identity():
    chain = build_sectional_chain(3, 2)
    lhs = chain.composite(["f1'", "f2", "f3"])
    rhs = chain.composite(["f1", "g5", "g4", "g3", "g2", "g1", "f2", "f3"])
    assert (lhs - rhs).is_zero() and not lhs.is_zero()


def test_expression_parser():
    chain = build_sectional_chain(3, 2)
    f = evaluate_expression(chain, "f1*g5*g4*g3*g2*g1*f2*f3")
    assert depth_or_none(chain.table, f) == 8
    g = evaluate_expression(chain, "f1 + f1*g5*g4*g3*g2*g1")
    assert (g - chain.f1_prime).is_zero()
    with pytest.raises(ValueError):
        evaluate_expression(chain, "f2*f1")
    with pytest.raises(ValueError):
        evaluate_expression(chain, "h7")


def test_report_text():
    r = verify_main_theorem(2, 0)
    text = r.to_text()
    assert r.passed and r.depth == 5
    assert "result = PASS" in text
    assert "check.d = pass" in text


def test_it_check_paths(t20):
    assert igusa_todorov_check(t20, build_sectional_chain(2, 0).maps)
    chain = build_sectional_chain(2, 0)
    assert igusa_todorov_check(t20, chain.maps[:1])
    assert igusa_todorov_check(t20, chain.nodes)


def test_it_check_injective_path():
    from strad.verify import table_for
    t = table_for(4, 0)
    assert igusa_todorov_check(t, [injective_string(4), injective_string(3), "e(2)"])


def test_grid_parallel_matches_serial():
    pts = [(2, 0), (2, 1), (3, 0)]
    a = [r.to_text() for r in verify_grid(pts, threads=1)]
    b = [r.to_text() for r in verify_grid(pts, threads=2)]
    assert a == b


@pytest.mark.parametrize("n,m", [(3, 2), (4, 1)])
def test_main_theorem_depth(n, m):
    r = verify_main_theorem(n, m)
    assert r.passed and r.depth == n + m + 3
