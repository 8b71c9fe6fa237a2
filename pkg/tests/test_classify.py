"""Classification: K(j) construction, finite-length detection, decompose
round trips with certificates, and homotopy-isomorphism decisions."""

import pytest

from thelpers import mat

from periodica import (
    FieldSpec,
    NotFiniteLengthError,
    RMatrix,
    TrivialType,
    cohomology,
    compose,
    direct_sum,
    dual,
    identity_map,
    k_complex,
    make_complex,
    scale_map,
    shift,
    trivial_complex,
    x_power,
    zero_complex,
)
from periodica.classify import (
    IndecompMultiset,
    assemble,
    decompose,
    finite_length_cohomology,
    is_homotopy_iso,
    label,
)
from periodica.minimal import reduce
from periodica.rand import conjugate_complex, random_finite_length_instance

Q = FieldSpec.rationals()


def test_k_complex_basics():
    k1 = k_complex(1, Q)
    assert k1.d1 == mat(Q, 1, 1, [["x"]]) and k1.d0.is_zero()
    h0, h1 = cohomology(k_complex(3, Q))
    assert h0.factors == (3,) and h1.is_zero()
    h0s, h1s = cohomology(shift(k_complex(3, Q)))
    assert h0s.is_zero() and h1s.factors == (3,)
    with pytest.raises(ValueError):
        k_complex(0, Q)


def test_finite_length_detection():
    assert finite_length_cohomology(k_complex(4, Q))
    free_pt = make_complex(Q, RMatrix.zeros(Q, 0, 1), RMatrix.zeros(Q, 1, 0))
    assert not finite_length_cohomology(free_pt)
    # unequal ranks can never have finite-length cohomology
    assert not finite_length_cohomology(
        make_complex(Q, mat(Q, 1, 2, [["x", "0"]]), RMatrix.zeros(Q, 2, 1)))


def test_decompose_roundtrip_with_trivials(rng):
    x = direct_sum(k_complex(1, Q), shift(k_complex(2, Q)),
                   trivial_complex(TrivialType.TYPE1, 1, Q))
    for _ in range(5):
        y, _, _ = conjugate_complex(rng, x)
        dec = decompose(y)
        assert dec.multiset == IndecompMultiset.from_labels(
            [label(1, False), label(2, True)])


def test_decompose_zero():
    dec = decompose(zero_complex(Q))
    assert dec.multiset.items == ()


def test_decompose_rejects_infinite_length():
    free_pt = make_complex(Q, RMatrix.zeros(Q, 0, 1), RMatrix.zeros(Q, 1, 0))
    with pytest.raises(NotFiniteLengthError):
        decompose(free_pt)


def test_decompose_certificates(rng):
    for _ in range(10):
        x, ms, _ = random_finite_length_instance(rng, Q, max_labels=3, max_j=4)
        dec = decompose(x)
        assert dec.multiset == ms
        assert dec.blocksum == assemble(dec.multiset, Q)
        rt = compose(dec.to_blocks, dec.from_blocks)
        n = dec.minimal.r0
        assert rt.f0 == RMatrix.identity(Q, n)
        assert rt.f1 == RMatrix.identity(Q, n)
        rt2 = compose(dec.from_blocks, dec.to_blocks)
        assert rt2.f0 == RMatrix.identity(Q, n)


def test_decompose_cohomology_consistency(rng):
    for _ in range(10):
        x, ms, _ = random_finite_length_instance(rng, Q)
        h0, h1 = cohomology(x)
        assert h0.length() == ms.h0_length()
        assert h1.length() == ms.h1_length()


def test_lemma_stable_equal_minimal_ranks(rng):
    for _ in range(10):
        x, _, _ = random_finite_length_instance(rng, Q)
        m = reduce(x).minimal
        assert m.r0 == m.r1


def test_conjugation_invariance_many(rng):
    x = direct_sum(k_complex(2, Q), shift(k_complex(1, Q)))
    base = decompose(x).multiset
    for _ in range(25):
        y, _, _ = conjugate_complex(rng, x)
        assert decompose(y).multiset == base


def test_decompose_prime_field(rng):
    f = FieldSpec.prime_field(101)
    for _ in range(10):
        x, ms, _ = random_finite_length_instance(rng, f)
        assert decompose(x).multiset == ms


def test_multiset_canonical_order():
    ms = IndecompMultiset.from_labels(
        [label(3, True), label(1, False), label(3, True), label(2, False)])
    assert [(l.j, l.shifted, m) for l, m in ms.items] == \
        [(1, False, 1), (2, False, 1), (3, True, 2)]
    assert str(ms) == "K(1) + K(2) + 2*K(3)[1]"


def test_is_homotopy_iso_identity_and_scaled():
    k1 = k_complex(1, Q)
    assert is_homotopy_iso(identity_map(k1))
    xf = scale_map(identity_map(k1), x_power(Q, 1))
    assert not is_homotopy_iso(xf)


def test_is_homotopy_iso_split_maps(rng):
    x, _, _ = random_finite_length_instance(rng, Q, max_labels=2, max_j=3)
    s = reduce(x)
    assert is_homotopy_iso(compose(s.into, s.back))
    assert is_homotopy_iso(s.into) and is_homotopy_iso(s.back)


def test_is_homotopy_iso_between_different_objects():
    from periodica import hom_module
    gens = hom_module(k_complex(1, Q), k_complex(2, Q)).generators
    assert all(not is_homotopy_iso(g) for g in gens)
