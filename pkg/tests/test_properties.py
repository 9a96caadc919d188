from collections import Counter

from hypothesis import HealthCheck, given, settings

from strategies import string_algebras, table_of
from strad import linalg as la
from strad.artheory import InjectiveEndpoint, ar_sequence_starting_at
from strad.radical import ZeroMorphism
from strad.repmod import compose, find_isomorphism, string_module
from strad.strings import inverse

CASES: Counter = Counter()

PROPS = settings(max_examples=100, deadline=None, derandomize=True,
                 suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])


@PROPS
@given(string_algebras())
def test_radical_chain_descends_to_zero(text):
    CASES["radical_chain_descends_to_zero"] += 1
    t = table_of(text)
    T = t.nilpotency_index
    assert t.level(T) == {}
    for s in range(T):
        for key, (R, _) in t.level(s + 1).items():
            Rp, pp = t.level(s)[key]
            assert all(la.in_span(r, Rp, pp) for r in R)


@PROPS
@given(string_algebras())
def test_depth_is_subadditive(text):
    CASES["depth_is_subadditive"] += 1
    t = table_of(text)
    n = len(t.index)
    for i in range(n):
        for j in range(n):
            fs = t.rad_power(1, i, j).basis
            if not fs:
                continue
            for k in range(n):
                for g in t.rad_power(1, j, k).basis[:2]:
                    for f in fs[:2]:
                        h = compose(g, f)
                        try:
                            d = t.depth(h)
                        except ZeroMorphism:
                            continue
                        assert d >= t.depth(f) + t.depth(g)


@PROPS
@given(string_algebras())
def test_module_of_inverse_string_is_isomorphic(text):
    CASES["module_of_inverse_string_is_isomorphic"] += 1
    t = table_of(text)
    for s in t.index.strings:
        X = string_module(t.pres, s)
        Y = string_module(t.pres, inverse(s))
        Y.string = None  # force the linear-algebra isomorphism search
        assert find_isomorphism(X, Y) is not None


@PROPS
@given(string_algebras())
def test_certified_sequences_dimensions_and_irreducible_maps(text):
    CASES["certified_sequences_dimensions_and_irreducible_maps"] += 1
    t = table_of(text)
    for i in range(len(t.index)):
        try:
            seq = ar_sequence_starting_at(t, i)
        except InjectiveEndpoint:
            continue
        for v in t.pres.vertices:
            assert seq.left.dims[v] + seq.right.dims[v] == sum(m.dims[v] for m in seq.middle)
        for f in seq.left_maps + seq.right_maps:
            assert t.depth(f) == 1
