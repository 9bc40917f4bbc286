"""Shared fixtures.

Engines memoize differentials degree by degree, so one engine per
(graph, field, augmentation) is built lazily and shared across the whole
session.  max_deg 8 covers everything the tests touch: 5-chains have six
letters and the homotopy identity at degree 4 reads differentials of
degree 5.
"""

from __future__ import annotations

import pytest

from anick import (
    Augmentation,
    ResolutionEngine,
    field_from_name,
    leavitt_gsb,
    suite_graphs,
)

MAX_DEG = 8

SUITE_NAMES = ("S1", "S2", "S3", "S4", "S5")


@pytest.fixture(scope="session")
def graphs():
    return suite_graphs()


@pytest.fixture(scope="session")
def engine_for():
    """Factory returning (graph, system, engine) for a suite graph."""
    cache = {}

    def build(name, field="rational", augmentation="zero"):
        key = (name, field, augmentation)
        if key not in cache:
            g = suite_graphs()[name]
            k = field_from_name(field)
            sys = leavitt_gsb(g, k)
            if augmentation == "zero":
                eps = Augmentation.zero(sys.alphabet, k)
            else:
                eps = Augmentation.unit(sys.alphabet, k)
            cache[key] = (g, sys, ResolutionEngine(sys, eps, max_deg=MAX_DEG))
        return cache[key]

    return build
