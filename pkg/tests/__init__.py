"""Test suite initialization."""
