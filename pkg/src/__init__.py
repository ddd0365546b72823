"""Sentence-level topic modeling engine."""
