"""Minimality, the splitting into minimal + trivial summands, and the
contraction witnesses."""

import pytest

from thelpers import mat

from periodica import (
    FieldSpec,
    NotTrivialError,
    RMatrix,
    TrivialType,
    direct_sum,
    dual,
    identity_map,
    is_minimal,
    is_null_homotopic,
    k_complex,
    reduce,
    shift,
    trivial_complex,
    trivial_contraction,
    zero_complex,
)
from periodica.classify import decompose, label, IndecompMultiset
from periodica.rand import conjugate_complex, random_finite_length_instance

Q = FieldSpec.rationals()


def test_is_minimal_k():
    for j in (1, 2, 7):
        assert is_minimal(k_complex(j, Q))


def test_is_minimal_trivial_false():
    assert not is_minimal(trivial_complex(TrivialType.TYPE1, 1, Q))


def test_is_minimal_vacuous():
    assert is_minimal(zero_complex(Q))


def test_trivial_complex_shapes():
    t1 = trivial_complex(TrivialType.TYPE1, 1, Q)
    assert t1.d1 == RMatrix.identity(Q, 1) and t1.d0.is_zero()
    t2 = trivial_complex(TrivialType.TYPE2, 1, Q)
    assert t2.d0 == RMatrix.identity(Q, 1) and t2.d1.is_zero()
    t0 = trivial_complex(TrivialType.TYPE1, 0, Q)
    assert (t0.r0, t0.r1) == (0, 0)


def test_reduce_already_minimal():
    s = reduce(k_complex(2, Q))
    assert s.type1 == 0 and s.type2 == 0
    assert s.into.f0 == RMatrix.identity(Q, 1)
    assert s.back.f0 == RMatrix.identity(Q, 1)


def test_reduce_conjugated_k2_plus_trivial(rng):
    x = direct_sum(k_complex(2, Q), trivial_complex(TrivialType.TYPE1, 1, Q))
    for _ in range(5):
        y, _, _ = conjugate_complex(rng, x)
        s = reduce(y)
        assert (s.minimal.r0, s.minimal.r1) == (1, 1)
        assert s.type1 + s.type2 == 1
        assert decompose(y).multiset == \
            IndecompMultiset.from_labels([label(2, False)])


def test_reduce_acyclic_to_zero(rng):
    x = direct_sum(trivial_complex(TrivialType.TYPE1, 2, Q),
                   trivial_complex(TrivialType.TYPE2, 1, Q))
    for _ in range(5):
        y, _, _ = conjugate_complex(rng, x)
        s = reduce(y)
        assert s.minimal.total_rank == 0
        assert s.type1 == 2 and s.type2 == 1


def test_reduce_certificates_compose(rng):
    from periodica import compose
    for _ in range(10):
        x, _, _ = random_finite_length_instance(rng, Q)
        s = reduce(x)
        rt = compose(s.into, s.back)
        assert rt.f0 == RMatrix.identity(Q, x.r0)
        assert rt.f1 == RMatrix.identity(Q, x.r1)


def test_reduce_rank_accounting(rng):
    for _ in range(10):
        x, _, _ = random_finite_length_instance(rng, Q)
        s = reduce(x)
        assert s.minimal.r0 + s.type1 + s.type2 == x.r0
        assert s.minimal.r1 + s.type1 + s.type2 == x.r1


def test_minimal_model_unique_ranks(rng):
    # conjugation cannot change the minimal model
    x = direct_sum(k_complex(2, Q), trivial_complex(TrivialType.TYPE2, 1, Q))
    base = reduce(x)
    for _ in range(10):
        y, _, _ = conjugate_complex(rng, x)
        s = reduce(y)
        assert (s.minimal.r0, s.minimal.r1) == \
            (base.minimal.r0, base.minimal.r1)
        assert decompose(y).multiset == decompose(x).multiset


def test_w_class_closed_under_shift_and_dual():
    for kind in TrivialType:
        w = trivial_complex(kind, 2, Q)
        for image in (shift(w), dual(w)):
            s = reduce(image)
            assert s.minimal.total_rank == 0


def test_minimal_nonzero_identity_not_null(rng):
    for _ in range(10):
        x, ms, _ = random_finite_length_instance(rng, Q, max_trivials=0)
        if ms.size() == 0:
            continue
        m = reduce(x).minimal
        assert is_null_homotopic(identity_map(m)) is None


def test_dual_of_contractible_contractible(rng):
    for _ in range(10):
        x = direct_sum(trivial_complex(TrivialType.TYPE1, 1, Q),
                       trivial_complex(TrivialType.TYPE2, 1, Q))
        y, _, _ = conjugate_complex(rng, x)
        if reduce(y).minimal.total_rank == 0:
            assert reduce(dual(y)).minimal.total_rank == 0


def test_contraction_type1():
    w = trivial_complex(TrivialType.TYPE1, 1, Q)
    h = trivial_contraction(w)
    assert h.witnesses(identity_map(w))


def test_contraction_type2_and_mixed():
    w = trivial_complex(TrivialType.TYPE2, 1, Q)
    assert trivial_contraction(w).witnesses(identity_map(w))
    mixed = direct_sum(trivial_complex(TrivialType.TYPE1, 1, Q),
                       trivial_complex(TrivialType.TYPE2, 2, Q))
    assert trivial_contraction(mixed).witnesses(identity_map(mixed))


def test_contraction_conjugated(rng):
    x = direct_sum(trivial_complex(TrivialType.TYPE1, 1, Q),
                   trivial_complex(TrivialType.TYPE2, 1, Q))
    y, _, _ = conjugate_complex(rng, x)
    assert trivial_contraction(y).witnesses(identity_map(y))


def test_contraction_rejects_nontrivial():
    with pytest.raises(NotTrivialError):
        trivial_contraction(k_complex(1, Q))
