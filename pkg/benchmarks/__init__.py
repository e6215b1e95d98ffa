"""Benchmarks for mobius-orbits."""
