"""Tests for utility functions."""

import logging

import pytest
from beitoric.utils import env_int, get_backend_info, log_stage, validate_vertex_count


def test_validate_vertex_count_valid():
    """Test that valid vertex counts pass validation."""
    validate_vertex_count(0)
    validate_vertex_count(1)
    validate_vertex_count(64)
    validate_vertex_count(5, cap=5)


def test_validate_vertex_count_negative():
    """Test that negative counts raise ValueError."""
    with pytest.raises(ValueError, match="non-negative"):
        validate_vertex_count(-1)

    with pytest.raises(ValueError, match="non-negative"):
        validate_vertex_count(-100)


def test_validate_vertex_count_above_cap():
    """Test that counts above the cap raise ValueError."""
    with pytest.raises(ValueError, match="<= 5"):
        validate_vertex_count(6, cap=5)


def test_validate_vertex_count_not_integer():
    """Test that non-integer counts raise TypeError."""
    with pytest.raises(TypeError, match="integer"):
        validate_vertex_count(4.0)

    with pytest.raises(TypeError, match="integer"):
        validate_vertex_count("4")

    with pytest.raises(TypeError, match="integer"):
        validate_vertex_count(True)


def test_env_int(monkeypatch):
    """Test reading integers from the environment."""
    monkeypatch.delenv("BEITORIC_TEST_VALUE", raising=False)
    assert env_int("BEITORIC_TEST_VALUE") is None

    monkeypatch.setenv("BEITORIC_TEST_VALUE", "3")
    assert env_int("BEITORIC_TEST_VALUE") == 3

    monkeypatch.setenv("BEITORIC_TEST_VALUE", "  ")
    assert env_int("BEITORIC_TEST_VALUE") is None


def test_env_int_invalid_values_warn(monkeypatch, caplog):
    """Test that unusable values are ignored with a warning."""
    monkeypatch.setenv("BEITORIC_TEST_VALUE", "three")
    with caplog.at_level(logging.WARNING, logger="beitoric.utils"):
        assert env_int("BEITORIC_TEST_VALUE") is None
    assert "not an integer" in caplog.text

    monkeypatch.setenv("BEITORIC_TEST_VALUE", "-2")
    with caplog.at_level(logging.WARNING, logger="beitoric.utils"):
        assert env_int("BEITORIC_TEST_VALUE") is None
    assert "non-negative" in caplog.text


def test_get_backend_info():
    """Test that get_backend_info reports library availability."""
    info = get_backend_info()

    assert isinstance(info, dict)
    assert info["numpy_available"] is True
    assert info["sympy_available"] is True
    assert info["networkx_available"] is True
    assert "numpy_version" in info
    assert "sympy_version" in info
    assert "networkx_version" in info


def test_log_stage(caplog):
    """Test that stage details are logged sorted by key."""
    with caplog.at_level(logging.INFO, logger="beitoric.utils"):
        log_stage("decide_toric", n=3, edges=2)
        log_stage("empty")
    assert "decide_toric: edges=2 n=3" in caplog.text
    assert "empty" in caplog.text
