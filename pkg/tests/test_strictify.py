"""Strictification of quasi-periodic data and the window comparison maps."""

import pytest

from thelpers import mat

from periodica import (
    FieldSpec,
    NotAComplexError,
    QuasiPeriodicData,
    RMatrix,
    ambient_differential,
    invert,
    is_invertible,
    is_minimal,
    k_complex,
    strictify,
    validate_complex,
    window_chain_map,
)
from periodica.classify import decompose, label, IndecompMultiset
from periodica.rand import random_quasi_periodic

Q = FieldSpec.rationals()


def _identity_data(j):
    k = k_complex(j, Q)
    return QuasiPeriodicData(Q, 1, 1, alpha0=k.d0, alpha1=k.d1,
                             phi0=RMatrix.identity(Q, 1),
                             phi1=RMatrix.identity(Q, 1))


def test_strictify_identity_phi_is_verbatim():
    q = _identity_data(2)
    assert strictify(q) == k_complex(2, Q)


def test_strictify_rejects_non_complex():
    q = QuasiPeriodicData(Q, 1, 1,
                          alpha0=mat(Q, 1, 1, [["x"]]),
                          alpha1=mat(Q, 1, 1, [["x"]]),
                          phi0=mat(Q, 1, 1, [["1 + x"]]),
                          phi1=mat(Q, 1, 1, [["1 + x"]]))
    with pytest.raises(NotAComplexError):
        strictify(q)


def test_strictify_unit_denominator_example():
    q = QuasiPeriodicData(Q, 1, 1,
                          alpha0=mat(Q, 1, 1, [["0"]]),
                          alpha1=mat(Q, 1, 1, [["x^3"]]),
                          phi0=mat(Q, 1, 1, [["1 + x"]]),
                          phi1=mat(Q, 1, 1, [["1"]]))
    x = strictify(q)
    assert x.d0.is_zero()
    assert decompose(x).multiset == IndecompMultiset.from_labels([label(3, False)])


def test_window_identity_phi_all_identity():
    q = _identity_data(2)
    fs = window_chain_map(q, radius=3)
    for n, f in fs.items():
        if n == 0:
            continue  # f_0 = phi_0^{-1} = identity here as well
        assert f == RMatrix.identity(Q, 1)
    assert fs[0] == RMatrix.identity(Q, 1)


def test_window_first_values():
    q, _ = random_quasi_periodic(__import__("random").Random(5), Q)
    fs = window_chain_map(q, radius=3)
    assert fs[0] == invert(q.phi0)
    assert fs[1] == RMatrix.identity(Q, q.r1)
    assert fs[2] == RMatrix.identity(Q, q.r0)


def test_window_third_example_radius5():
    q = QuasiPeriodicData(Q, 1, 1,
                          alpha0=mat(Q, 1, 1, [["0"]]),
                          alpha1=mat(Q, 1, 1, [["x^3"]]),
                          phi0=mat(Q, 1, 1, [["1 + x"]]),
                          phi1=mat(Q, 1, 1, [["1"]]))
    fs = window_chain_map(q, radius=5)
    assert len(fs) == 11
    # independently re-verify the chain identity at every window position
    x = strictify(q)
    for n in range(-4, 5):
        lhs = ambient_differential(q, n - 1) @ fs[n - 1]
        rhs = fs[n] @ (x.d0 if (n - 1) % 2 == 0 else x.d1)
        assert (lhs - rhs).is_zero()


def test_random_quasi_periodic_instances(rng):
    for _ in range(8):
        q, expected = random_quasi_periodic(rng, Q)
        x = strictify(q)
        assert x == expected
        assert validate_complex(x) is None
        assert is_minimal(x)
        fs = window_chain_map(q, radius=4)
        for f in fs.values():
            assert is_invertible(f)


def test_random_quasi_periodic_prime_field(rng):
    f101 = FieldSpec.prime_field(101)
    for _ in range(4):
        q, expected = random_quasi_periodic(rng, f101)
        assert strictify(q) == expected
        window_chain_map(q, radius=3)
