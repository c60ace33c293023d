"""Shared helpers: branch fan-out and instance generators."""
