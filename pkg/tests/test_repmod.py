import numpy as np
import pytest

from oracles import a_nm_arrows, paths_from
from strad.fields import parse_field
from strad.quiver import build_a_nm
from strad.repmod import (
    RepMorphism,
    Representation,
    cokernel,
    compose,
    direct_sum,
    find_graph_maps,
    find_isomorphism,
    hom_space,
    injective,
    is_exact,
    is_indecomposable,
    is_injective_module,
    is_isomorphic,
    is_projective_module,
    kernel,
    projective,
    simple,
    string_module,
)
from strad.strings import parse_string


def M(pres, text):
    return string_module(pres, parse_string(pres, text))


def test_string_module_satisfies_relations(a32):
    X = M(a32, "beta1 ~alpha ~beta1")
    assert X.dimension_vector() == (2, 2, 0, 0, 0)
    assert np.all(X.evaluate(("alpha", "alpha")) == 0)


def test_relation_violation_rejected(a32):
    F = a32.field
    one = np.array([[F.one]], dtype=object)
    with pytest.raises(ValueError):
        Representation(a32, {"1": 1}, {"alpha": one})


def test_projective_one_is_string_module(a32):
    P1 = projective(a32, "1")
    assert P1.dim == len(paths_from("1", *a_nm_arrows(3, 2)[1:]))
    assert find_isomorphism(P1, M(a32, "beta1 ~alpha ~beta1")) is not None


def test_injective_three_is_beta2(a32):
    assert find_isomorphism(injective(a32, "3"), M(a32, "beta2")) is not None


def test_hom_dimensions_match_path_counts(a32):
    # dim End P(1) = #paths 1 -> 1, dim Hom(S(2), P(1)) = socle of P(1) at 2
    P1 = projective(a32, "1")
    assert hom_space(P1, P1).dim == 2
    assert hom_space(simple(a32, "2"), P1).dim == 2


def test_hom_basis_intertwines(a32):
    X, Y = M(a32, "beta1 ~alpha"), M(a32, "beta1 ~alpha ~beta1")
    for f in hom_space(X, Y).basis:
        assert f.is_intertwiner()


def test_indecomposability():
    p = build_a_nm(2, 0)
    assert is_indecomposable(projective(p, "1"))
    S = simple(p, "1")
    assert not is_indecomposable(direct_sum([S, S]).rep)


def test_projective_injective_flags(a32):
    assert is_projective_module(M(a32, "beta2"))  # P(2)
    assert is_injective_module(M(a32, "beta2"))   # I(3)
    assert not is_projective_module(M(a32, "e(2)"))


def test_graph_map_windows(a32):
    S2, P1 = M(a32, "e(2)"), M(a32, "beta1 ~alpha ~beta1")
    inc = find_graph_maps(S2, P1, "include")
    assert len(inc) == 2
    Q = M(a32, "~alpha ~beta1")
    proj = find_graph_maps(P1, Q, "project")
    assert len(proj) == 1
    f = proj[0][1]
    assert f.rank() == Q.dim


def test_kernel_cokernel_exact(a32):
    P1, Q = M(a32, "beta1 ~alpha ~beta1"), M(a32, "~alpha ~beta1")
    f = find_graph_maps(P1, Q, "project")[0][1]
    K, k = kernel(f)
    assert K.dim == P1.dim - Q.dim
    C, c = cokernel(k)
    assert is_exact([k, f], short=True)
    assert is_isomorphic(C, Q) or find_isomorphism(C, Q) is not None


def test_composition_and_zero(a32):
    X = M(a32, "beta1")
    idm = X.identity()
    assert compose(idm, idm) == idm
    z = X.zero_to(X)
    assert z.is_zero() and not idm.is_zero()
    assert (idm - idm).is_zero()


def test_prime_field_modules():
    p = build_a_nm(3, 2, parse_field("fp:3"))
    P1 = projective(p, "1")
    assert hom_space(P1, P1).dim == 2
    assert is_indecomposable(P1)


def test_morphism_shape_check(a32):
    X = M(a32, "beta1")
    with pytest.raises(ValueError):
        RepMorphism(X, X, {"1": np.zeros((2, 2), dtype=object)})
