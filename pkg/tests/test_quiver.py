import pytest

from strad.quiver import (
    InfiniteDimensional,
    ParseError,
    build_a_nm,
    is_string_algebra,
    parse_presentation,
    render_presentation,
)

A32_TEXT = """\
quiver A32
vertex 1 2 3 4 5
arrow alpha : 1 -> 1
arrow beta1 : 1 -> 2
arrow beta2 : 2 -> 3
arrow gamma1 : 4 -> 1
arrow gamma2 : 5 -> 4
relation alpha alpha
relation gamma1 beta1
relation beta1 beta2
"""


def test_parse_matches_builtin(a32):
    p = parse_presentation(A32_TEXT)
    assert p.relation_set == a32.relation_set
    assert [a.name for a in p.arrows] == [a.name for a in a32.arrows]


def test_round_trip(a32):
    again = parse_presentation(render_presentation(a32))
    assert again.relation_set == a32.relation_set
    assert again.quiver == a32.quiver


@pytest.mark.parametrize("n,m", [(n, m) for n in (2, 3, 4) for m in (0, 1, 2)])
def test_family_is_string_algebra(n, m):
    p = build_a_nm(n, m)
    assert is_string_algebra(p)
    assert len(p.vertices) == n + m
    assert len(p.relations) == 1 + (m >= 1) + (n >= 3)


def test_family_rejects_bad_parameters():
    with pytest.raises(ValueError):
        build_a_nm(1, 0)


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("vertex 1 2\narrow a : 1 -> 3\n", 2, 16),
        ("vertex 1\narrow a : 1 -> 1\nrelation a + a\n", 3, 12),
        ("vertex 1\nbogus\n", 2, 1),
        ("vertex 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\nrelation a b\n", 4, 12),
    ],
)
def test_parse_errors_report_position(text, line, col):
    with pytest.raises(ParseError) as err:
        parse_presentation(text)
    assert (err.value.line, err.value.column) == (line, col)


def test_non_string_algebra_witness():
    text = "vertex 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 3\narrow c : 2 -> 4\n"
    check = is_string_algebra(parse_presentation(text))
    assert not check
    assert check.violations[0].condition == 2
    assert "b a" in check.violations[0].witness


def test_too_many_arrows():
    text = "vertex 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\narrow c : 1 -> 2\n"
    check = is_string_algebra(parse_presentation(text))
    assert [v.condition for v in check.violations][:1] == [1]


def test_nonzero_paths_and_infinite():
    # e1, e2, alpha, beta1, beta1 alpha
    assert len(build_a_nm(2, 0).nonzero_paths) == 5
    loop = parse_presentation("vertex 1\narrow a : 1 -> 1\n")
    with pytest.raises(InfiniteDimensional):
        loop.nonzero_paths


def test_field_statement():
    p = parse_presentation("vertex 1\nfield fp:7\n")
    assert p.field.name == "fp:7"
