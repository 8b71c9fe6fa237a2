"""Shift, dual, sums, tensor, Hom, the comparison isomorphism, cones,
cohomology, null-homotopy decisions, and Hom-modules."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from thelpers import cx, mat

from periodica import (
    ChainMap2,
    FieldMismatchError,
    FieldSpec,
    InvalidChainMapError,
    RMatrix,
    TwoPeriodicComplex,
    cohomology,
    compose,
    cone,
    delta_iso,
    direct_sum,
    dual,
    hom_module,
    homc,
    identity_map,
    is_invertible,
    is_null_homotopic,
    k_complex,
    make_complex,
    negate_map,
    scale_map,
    shift,
    shift_map,
    tensor2,
    validate_complex,
    x_power,
    zero_complex,
    zero_map,
)
from periodica.classify import decompose, label, IndecompMultiset
from periodica.minimal import TrivialType, reduce, trivial_complex
from periodica.rand import conjugate_complex, random_finite_length_instance

Q = FieldSpec.rationals()


def K(j, field=Q):
    return k_complex(j, field)


# -- validation -----------------------------------------------------------------

def test_validate_k2():
    assert validate_complex(K(2)) is None


def test_validate_detects_nonzero_composite():
    x = TwoPeriodicComplex(Q, 1, 1, mat(Q, 1, 1, [["1"]]),
                           mat(Q, 1, 1, [["1"]]))
    v = validate_complex(x)
    assert v is not None and v.composite == "d1*d0" and (v.row, v.col) == (0, 0)


def test_validate_zero_complex():
    assert validate_complex(zero_complex(Q)) is None


# -- shift -----------------------------------------------------------------------

def test_shift_k1():
    s = shift(K(1))
    assert s.d0 == mat(Q, 1, 1, [["-x"]])
    assert s.d1 == mat(Q, 1, 1, [["0"]])
    assert (s.r0, s.r1) == (1, 1)


def test_shift_involution():
    assert shift(shift(K(3))) == K(3)
    assert shift(zero_complex(Q)) == zero_complex(Q)


# -- dual ------------------------------------------------------------------------

def test_dual_of_k_is_shift():
    for j in (1, 2, 5):
        assert decompose(dual(K(j))).multiset == \
            IndecompMultiset.from_labels([label(j, True)])


def test_dual_double_dual_by_multiset(rng):
    x = direct_sum(K(2), shift(K(3)))
    y, _, _ = conjugate_complex(rng, x)
    assert decompose(dual(dual(y))).multiset == decompose(y).multiset


def test_dual_zero():
    assert dual(zero_complex(Q)) == zero_complex(Q)


# -- direct sum -------------------------------------------------------------------

def test_direct_sum_blocks():
    s = direct_sum(K(1), K(2))
    assert s.d1 == mat(Q, 2, 2, [["x", "0"], ["0", "x^2"]])
    assert s.d0.is_zero()


def test_direct_sum_with_zero():
    assert direct_sum(K(2), zero_complex(Q)) == K(2)


def test_direct_sum_cohomology():
    h0, h1 = cohomology(direct_sum(K(1), K(2)))
    assert h0.factors == (1, 2) and h1.factors == ()


def test_direct_sum_field_mismatch():
    with pytest.raises(FieldMismatchError):
        direct_sum(K(1), k_complex(1, FieldSpec.prime_field(5)))


# -- tensor ------------------------------------------------------------------------

def test_tensor_unit_object():
    unit = make_complex(Q, RMatrix.zeros(Q, 0, 1), RMatrix.zeros(Q, 1, 0))
    t = tensor2(K(3), unit)
    assert (t.r0, t.r1) == (1, 1)
    assert t.d1 == K(3).d1 and t.d0 == K(3).d0


def test_tensor_shape_and_validity():
    t = tensor2(K(1), K(1))
    assert (t.r0, t.r1) == (2, 2)
    assert validate_complex(t) is None


def test_tensor_k1_k2_cohomology_lengths():
    # brute-force subquotient computation on the 2x2 blocks; the tensor
    # splits as K(1) + K(1)[1], so both lengths are 1 = min(1, 2)
    t = tensor2(K(1), K(2))
    h0, h1 = cohomology(t)
    assert h0.length() == 1 and h1.length() == 1
    assert decompose(t).multiset == \
        IndecompMultiset.from_labels([label(1, False), label(1, True)])


def test_tensor_lengths_match_min_rule(rng):
    for i, j in ((1, 1), (2, 3), (3, 2)):
        t = tensor2(K(i), K(j))
        h0, h1 = cohomology(t)
        assert h0.length() == min(i, j)
        assert h1.length() == min(i, j)


# -- Hom complex ---------------------------------------------------------------------

def test_homc_end_k1():
    h = homc(K(1), K(1))
    h0, _ = cohomology(h)
    assert h0.factors == (1,)


def test_homc_from_rank_10_source():
    x = make_complex(Q, RMatrix.zeros(Q, 0, 1), RMatrix.zeros(Q, 1, 0))
    y = direct_sum(K(2), shift(K(1)))
    h = homc(x, y)
    assert validate_complex(h) is None
    assert (h.r0, h.r1) == (y.r0, y.r1)


def test_homc_h0_spec_value():
    h = homc(K(2), K(3))
    assert cohomology(h)[0].factors == (2,)


# -- comparison isomorphism -------------------------------------------------------------

def test_delta_on_k1_k1():
    d = delta_iso(K(1), K(1))  # constructor verifies both squares exactly
    assert is_invertible(d.f0) and is_invertible(d.f1)


def test_delta_identity_for_free_point():
    x = make_complex(Q, RMatrix.zeros(Q, 0, 1), RMatrix.zeros(Q, 1, 0))
    y = K(2)
    d = delta_iso(x, y)
    assert d.f0 == RMatrix.identity(Q, 1)


def test_delta_k2_k3_and_random(rng):
    d = delta_iso(K(2), K(3))
    assert is_invertible(d.f0) and is_invertible(d.f1)
    for _ in range(5):
        x, _, _ = random_finite_length_instance(rng, Q, max_labels=2, max_j=3,
                                                max_trivials=1)
        y, _, _ = random_finite_length_instance(rng, Q, max_labels=2, max_j=3,
                                                max_trivials=1)
        d = delta_iso(x, y)
        assert is_invertible(d.f0) and is_invertible(d.f1)


# -- cone --------------------------------------------------------------------------------

def test_cone_ranks_and_vu():
    f = identity_map(K(1))
    c, u, v = cone(f)
    assert (c.r0, c.r1) == (2, 2)
    comp = compose(v, u)
    assert comp.is_zero()


def test_cone_of_identity_contractible():
    c, _, _ = cone(identity_map(K(1)))
    s = reduce(c)
    assert s.minimal.total_rank == 0


def test_cone_of_zero_splits():
    c, _, _ = cone(zero_map(K(1), K(2)))
    assert decompose(c).multiset == \
        IndecompMultiset.from_labels([label(1, True), label(2, False)])


def test_cone_of_socle_map():
    from periodica import socle_map
    w = socle_map(2, Q)
    c, _, _ = cone(w)
    assert decompose(c).multiset == \
        IndecompMultiset.from_labels([label(1, True), label(3, True)])


def test_cone_requires_valid_chain_map():
    with pytest.raises(InvalidChainMapError):
        ChainMap2(K(1), K(2), mat(Q, 1, 1, [["1"]]), mat(Q, 1, 1, [["0"]]))


# -- cohomology ---------------------------------------------------------------------------

def test_cohomology_k2():
    h0, h1 = cohomology(K(2))
    assert h0.factors == (2,) and h0.free_rank == 0
    assert h1.factors == () and h1.free_rank == 0


def test_cohomology_trivial_type1():
    w = trivial_complex(TrivialType.TYPE1, 1, Q)
    h0, h1 = cohomology(w)
    assert h0.is_zero() and h1.is_zero()


def test_cohomology_free_point():
    x = make_complex(Q, RMatrix.zeros(Q, 0, 1), RMatrix.zeros(Q, 1, 0))
    h0, h1 = cohomology(x)
    assert h0.free_rank == 1 and h0.factors == ()
    assert h1.is_zero()


# -- null homotopy -------------------------------------------------------------------------

def test_identity_on_trivial_null_homotopic():
    w = trivial_complex(TrivialType.TYPE1, 1, Q)
    h = is_null_homotopic(identity_map(w))
    assert h is not None and h.witnesses(identity_map(w))
    # the classical witness s0 = s1 = 1 also verifies
    from periodica import Homotopy2, one
    classical = Homotopy2(w, w, RMatrix.identity(Q, 1), RMatrix.identity(Q, 1))
    assert classical.witnesses(identity_map(w))


def test_identity_on_k1_not_null():
    assert is_null_homotopic(identity_map(K(1))) is None


def test_multiplication_by_x_on_k1_null():
    f = scale_map(identity_map(K(1)), x_power(Q, 1))
    h = is_null_homotopic(f)
    assert h is not None and h.witnesses(f)


def test_homotopy_witness_reverifies_random(rng):
    # boundaries of random degree -1 data must come back null-homotopic
    from periodica import Homotopy2
    from periodica.rand import random_matrix
    for _ in range(15):
        x, _, _ = random_finite_length_instance(rng, Q, max_labels=2, max_j=3,
                                                max_trivials=1)
        y, _, _ = random_finite_length_instance(rng, Q, max_labels=2, max_j=3,
                                                max_trivials=1)
        s0 = random_matrix(rng, Q, y.r1, x.r0, max_val=2)
        s1 = random_matrix(rng, Q, y.r0, x.r1, max_val=2)
        b0, b1 = Homotopy2(x, y, s0, s1).boundary()
        f = ChainMap2(x, y, b0, b1)
        h = is_null_homotopic(f)
        assert h is not None and h.witnesses(f)


# -- hom modules ---------------------------------------------------------------------------

def test_hom_module_k2_k3():
    hm = hom_module(K(2), K(3))
    assert hm.factors == (2,) and hm.free_rank == 0


def test_hom_module_min_rule_oracle():
    for i in range(1, 5):
        for j in range(1, 5):
            assert hom_module(K(i), K(j)).length() == \
                oracles.hom_length_kk(i, j, False)
            assert hom_module(K(i), shift(K(j))).length() == \
                oracles.hom_length_kk(i, j, True)


def test_hom_module_zero_target():
    hm = hom_module(K(2), zero_complex(Q))
    assert hm.factors == () and hm.free_rank == 0 and hm.length() == 0


def test_hom_module_generators_are_chain_maps():
    hm = hom_module(K(2), shift(K(2)))
    assert len(hm.generators) == 1  # cyclic module R/x^2
    g = hm.generators[0]
    assert g.f0.is_zero()  # even component forced to vanish


def test_hom_module_homotopy_invariance(rng):
    x = direct_sum(K(1), K(3))
    y = K(2)
    base = hom_module(x, y)
    for _ in range(5):
        x2, _, _ = conjugate_complex(rng, x)
        y2, _, _ = conjugate_complex(rng, y)
        hm = hom_module(x2, y2)
        assert hm.factors == base.factors
        assert hm.free_rank == base.free_rank


def test_hom_module_free_part():
    x = make_complex(Q, RMatrix.zeros(Q, 0, 1), RMatrix.zeros(Q, 1, 0))
    hm = hom_module(x, x)
    assert hm.free_rank == 1 and hm.factors == ()
    assert hm.length() == math.inf


# -- shift of maps ---------------------------------------------------------------------------

def test_shift_map_involution():
    f = identity_map(K(2))
    assert shift_map(shift_map(f)) == f


def test_shift_map_components_swap():
    from periodica import socle_map
    w = socle_map(2, Q)
    sw = shift_map(w)
    assert sw.f0 == w.f1 and sw.f1 == w.f0
