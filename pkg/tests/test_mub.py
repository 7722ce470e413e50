"""MUB construction: frozen small-d amplitudes and the defining overlap laws."""

import numpy as np
import pytest

from mubqkd.gf import FieldSpec
from mubqkd.mub import (COMPUTATIONAL, BasisId, MubLabel, all_bases,
                        basis_from_index, basis_index, basis_matrix,
                        mub_basis, mub_state, unbiasedness_report)

GF3 = FieldSpec(3, 1)
GF5 = FieldSpec(5, 1)
GF9 = FieldSpec(3, 2)
OMEGA = np.exp(2j * np.pi / 3)


def _q_state(spec, b, c):
    return mub_state(spec, MubLabel(BasisId(spec.from_index(b)), spec.from_index(c)))


def test_d3_states_match_hand_computation():
    r3 = np.sqrt(3)
    assert np.allclose(_q_state(GF3, 0, 0), np.ones(3) / r3, atol=1e-12)
    assert np.allclose(_q_state(GF3, 1, 0), np.array([1, OMEGA, OMEGA]) / r3, atol=1e-12)
    assert np.allclose(_q_state(GF3, 0, 1), np.array([1, OMEGA, OMEGA ** 2]) / r3, atol=1e-12)


def test_computational_states_are_identity_columns():
    for k in range(3):
        state = mub_state(GF3, MubLabel(COMPUTATIONAL, GF3.from_index(k)))
        expect = np.zeros(3)
        expect[k] = 1.0
        assert np.allclose(state, expect)


def test_gram_identity_per_basis():
    for spec in (GF3, GF9):
        for basis in all_bases(spec):
            mat = basis_matrix(spec, basis)
            gram = mat.conj() @ mat.T
            assert np.max(np.abs(gram - np.eye(spec.d))) < 1e-12


def test_resolution_of_identity_d5():
    mat = basis_matrix(GF5, BasisId(GF5.from_index(2)))
    resolved = sum(np.outer(row, row.conj()) for row in mat)
    assert np.max(np.abs(resolved - np.eye(5))) < 1e-12


def test_basis_count_and_distinctness():
    for spec in (GF3, GF5, GF9):
        bases = all_bases(spec)
        assert len(bases) == spec.d + 1
        assert len(set(bases)) == spec.d + 1


def test_unbiasedness_report_d3():
    rep = unbiasedness_report(GF3)
    assert rep.d == 3 and rep.basis_count == 4
    assert rep.max_cross_deviation < 1e-9
    assert rep.max_orthonormality_deviation < 1e-12
    assert rep.max_completeness_deviation < 1e-12
    assert rep.ok()


def test_unbiasedness_report_d9():
    rep = unbiasedness_report(GF9)
    assert rep.basis_count == 10
    assert rep.max_cross_deviation < 1e-9
    assert rep.ok()


def test_computational_versus_quadratic_overlap():
    target = 1 / np.sqrt(3)
    comp = basis_matrix(GF3, COMPUTATIONAL)
    for b in range(3):
        quad = basis_matrix(GF3, BasisId(GF3.from_index(b)))
        overlaps = np.abs(comp.conj() @ quad.T)
        assert np.max(np.abs(overlaps - target)) < 1e-12


def test_mub_basis_order_matches_states():
    states = mub_basis(GF5, BasisId(GF5.from_index(3)))
    assert len(states) == 5
    for c, state in enumerate(states):
        assert np.allclose(state, _q_state(GF5, 3, c))


def test_basis_index_roundtrip():
    for spec in (GF3, GF9):
        for k in range(spec.d + 1):
            basis = basis_from_index(spec, k)
            assert basis_index(spec, basis) == k
        assert basis_from_index(spec, spec.d).is_computational


def test_foreign_labels_rejected():
    with pytest.raises(ValueError):
        mub_state(GF3, MubLabel(BasisId(GF5.from_index(1)), GF5.from_index(0)))
    with pytest.raises(ValueError):
        mub_state(GF3, MubLabel(COMPUTATIONAL, GF5.from_index(0)))


def test_basis_matrix_is_read_only():
    mat = basis_matrix(GF3, BasisId(GF3.from_index(1)))
    with pytest.raises(ValueError):
        mat[0, 0] = 0.0
