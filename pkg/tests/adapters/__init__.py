"""Adapter layer tests."""
