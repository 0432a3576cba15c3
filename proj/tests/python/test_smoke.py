import numpy as np
import pytest

import equigeo


def test_space_names():
    assert "sp-u1-sphere" in equigeo.space_names()


def test_build_and_dims():
    s = equigeo.build_space("sp-u1-sphere", n=1)
    assert s.dims == {"g": 11, "h": 4, "m": 7, "m0": 1, "mprime": 6}
    assert s.m0_basis.shape == (7, 1)
    assert len(s.commutant) == 3


def test_fixed_point_vector_passes_and_others_fail():
    s = equigeo.build_space("su-sphere", n=2)
    x = s.m0_basis[:, 0]
    assert equigeo.randers_equigeodesic_test(s, x)["verdict"]
    y = np.zeros(5)
    y[1] = 1.0
    assert not equigeo.randers_equigeodesic_test(s, y)["verdict"]
    oracle = equigeo.sampled_metric_oracle(s, y, samples=20, seed=1)
    assert oracle["max_residual"] > 1e-7
    assert oracle["worst_metric"].shape == (5, 5)


def test_classify_symmetric_triple():
    s = equigeo.build_space("thm2-su-su", n1=3, n2=2)
    kind, basis = equigeo.classify(s)
    assert kind == "linear_subspace"
    assert basis.shape[1] == 1
    assert abs(abs(basis[:, 0] @ s.m0_basis[:, 0]) - 1.0) < 1e-9


def test_analyze_report():
    r = equigeo.analyze("sp-sphere", n=1)
    assert r["classification"]["kind"] == "empty"
    assert r["theorem_check"]["match"]
    assert equigeo.analyze_json("sp-sphere", n=1) == equigeo.analyze_json("sp-sphere", n=1)


def test_errors_raise_value_error():
    with pytest.raises(ValueError):
        equigeo.build_space("torus")
    with pytest.raises(ValueError):
        equigeo.build_space("so-sphere", n=1)
    s = equigeo.build_space("so-sphere", n=3)
    with pytest.raises(ValueError):
        equigeo.randers_equigeodesic_test(s, np.ones(3))


def test_verify_suite():
    results = equigeo.verify(seed=3, samples=10)
    assert len(results) == 7
    assert all(r["passed"] for r in results)
