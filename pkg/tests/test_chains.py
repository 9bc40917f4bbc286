"""Chain recognition and enumeration against the definition-level oracle.

oracles.brute_is_chain searches every witness family directly, so agreeing
with it on all short words certifies both the predicate and the
right-extension enumerator.
"""

from __future__ import annotations

import itertools

import pytest

from anick import Rationals, leavitt_gsb, suite_graphs
from anick.chains import (
    ChainSet,
    chain_prefix_end,
    enumerate_chains,
    is_n_chain,
    is_n_prechain,
)

from oracles import brute_is_chain, brute_is_prechain

SUITE = ("S1", "S2", "S3", "S4", "S5")


def _system(name):
    return leavitt_gsb(suite_graphs()[name], Rationals())


def test_degree_bottom_and_zero():
    obs = frozenset({(0, 1)})
    assert is_n_chain((), -1, obs)
    assert not is_n_chain((0,), -1, obs)
    assert is_n_chain((0,), 0, obs)
    assert not is_n_chain((), 0, obs)
    assert chain_prefix_end((0, 1), -1, obs) == 0
    assert chain_prefix_end((0, 1), 0, obs) == 1
    assert chain_prefix_end((), 0, obs) is None


@pytest.mark.parametrize("name", SUITE)
def test_predicate_matches_brute_force(name):
    sys = _system(name)
    obs = frozenset(sys.obstructions)
    keys = [g.order_key for g in sys.alphabet]
    for n in range(1, 4):
        # two-letter obstructions force n-chains to have n+1 letters, but
        # the predicate must reject the other lengths by itself
        for length in range(1, n + 3):
            for w in itertools.product(keys, repeat=length):
                assert is_n_chain(w, n, obs) == brute_is_chain(w, obs, n)


@pytest.mark.parametrize("name", SUITE)
def test_enumeration_matches_the_filtered_words(name):
    sys = _system(name)
    obs = frozenset(sys.obstructions)
    keys = [g.order_key for g in sys.alphabet]
    prev = None
    for n in range(1, 5):
        got = enumerate_chains(n, obs, sys, prev=prev)
        expect = {
            w
            for w in itertools.product(keys, repeat=n + 1)
            if is_n_chain(w, n, obs)
        }
        assert set(got) == expect
        assert all(len(c) == n + 1 for c in got)
        prev = got


def test_prechain_witness_is_minimal_and_interleaved():
    sys = _system("S4")
    obs = frozenset(sys.obstructions)
    for n in range(1, 4):
        for c in enumerate_chains(n, obs, sys):
            ok, witness = is_n_prechain(c, n, obs)
            assert ok and brute_is_prechain(c, obs, n)
            assert len(witness) == n
            assert witness[0][0] == 1 and witness[-1][1] == len(c)
            for (a1, b1), (a2, b2) in zip(witness, witness[1:]):
                assert a1 < a2 <= b1 < b2
            # every b is the least possible: no shorter m-prechain prefix
            for m, (_, b) in enumerate(witness, start=1):
                assert not any(
                    brute_is_prechain(c[:end], obs, m)
                    for end in range(1, b)
                )


def test_nesting_every_chain_prefixes_its_predecessor():
    for name in SUITE:
        sys = _system(name)
        obs = frozenset(sys.obstructions)
        for n in range(1, 5):
            for c in enumerate_chains(n, obs, sys):
                end = chain_prefix_end(c, n - 1, obs)
                assert end == len(c) - 1
                assert is_n_chain(c[:end], n - 1, obs)


def test_prefix_end_handles_longer_obstructions():
    # not a Leavitt shape: lengths 2 and 3 mixed
    obs = frozenset({(0, 0), (1, 0, 1)})
    assert chain_prefix_end((0, 0, 0), 2, obs) == 3
    assert is_n_chain((1, 0, 1, 0, 1), 2, obs)
    assert brute_is_chain((1, 0, 1, 0, 1), obs, 2)
    # the (1,0,1) occurrence starts too late to interleave with (0,0)
    assert not is_n_chain((0, 0, 1, 0, 1), 2, obs)
    assert not brute_is_chain((0, 0, 1, 0, 1), obs, 2)
    assert chain_prefix_end((1, 0, 1, 0, 1), 1, obs) == 3


def test_chain_set_is_sorted_and_supports_membership():
    sys = _system("S5")
    obs = frozenset(sys.obstructions)
    cs = enumerate_chains(2, obs, sys)
    assert isinstance(cs, ChainSet)
    words = list(cs)
    assert words == sorted(words, key=lambda w: (len(w), w))
    assert words[0] in cs
    assert (99, 99, 99) not in cs
