import math

import numpy as np
import pytest

import qsep


def test_table_values():
    e1 = qsep.example_state("E1")
    assert qsep.concurrence(e1) == pytest.approx(2 / 3, abs=1e-10)
    assert qsep.entropy_difference(e1, qsep.Subsystem.A) == pytest.approx(-(5 / 6) * math.log(5 / 4), abs=1e-10)
    assert qsep.quantum_deficit(qsep.example_state("E4")) == pytest.approx(math.log(2), abs=1e-10)


def test_werner_and_matrix_roundtrip():
    w = qsep.werner(2 / 3)
    assert w.dims == (2, 2)
    m = np.asarray(w.matrix)
    assert m.shape == (4, 4)
    again = qsep.DensityMatrix(m)
    assert qsep.concurrence(again) == pytest.approx(0.5, abs=1e-10)
    values, vectors = qsep.hermitian_eig(m)
    assert values[0] == pytest.approx(0.75)
    assert np.allclose(vectors @ np.diag(values) @ vectors.conj().T, m)


def test_partial_trace_and_decoherence():
    rho = qsep.random_mixed(5, 3)
    a = np.asarray(qsep.partial_trace(rho, qsep.Subsystem.A).matrix)
    full = np.asarray(rho.matrix).reshape(2, 2, 2, 2)
    assert np.allclose(a, np.einsum("ikjk->ij", full))
    rho_d, joint = qsep.decohere(rho)
    assert joint.shape == (2, 2)
    assert joint.sum() == pytest.approx(1.0)
    assert qsep.von_neumann(rho_d) >= qsep.von_neumann(rho) - 1e-9


def test_isospectral_pair():
    e, s = qsep.isospectral_pair()
    assert qsep.mutual_entropy(e) == pytest.approx(qsep.mutual_entropy(s), abs=1e-10)
    assert qsep.quantum_deficit(e) == pytest.approx(2 / 3 * math.log(2), abs=1e-10)
    assert qsep.quantum_deficit(s) == pytest.approx(0.0, abs=1e-10)


def test_classify_and_parse():
    report = qsep.classify(qsep.parse_state("E3"))
    assert "entangled despite zero entropy difference" in report["verdicts"]
    singlet = qsep.pure_state(0, 1 / math.sqrt(2), -1 / math.sqrt(2), 0)
    assert qsep.concurrence(singlet) == pytest.approx(1.0)
    assert qsep.tsallis_infinity_criterion(qsep.werner(0.3)) == (True, True)


def test_errors():
    with pytest.raises(qsep.Error):
        qsep.werner(1.5)
    with pytest.raises(ValueError):
        qsep.DensityMatrix(np.eye(4))
    with pytest.raises(qsep.Error):
        qsep.parse_state("nonsense")


def test_audit():
    ok, text = qsep.run_audit(n=20, seed=1, jobs=2)
    assert ok, text
    assert "all" in text.splitlines()[-1]
