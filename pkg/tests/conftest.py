"""Pytest configuration: a suite-wide hypothesis profile."""

from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")
