"""Rewriting: normal forms, composition checking, irreducible words.

The suite systems are the confluent positive cases; a one-rule system with
an unresolvable self-overlap is the negative control.
"""

from __future__ import annotations

import itertools
import random

import pytest

from anick import (
    VERTEX,
    Alphabet,
    FreePolynomial,
    Generator,
    InvalidRule,
    Rationals,
    leavitt_gsb,
    suite_graphs,
)
from anick.rewriting import (
    RewriteRule,
    RewriteSystem,
    check_compositions,
    irreducible_words,
    normal_form,
    reduce_once,
)

SEED = 2203


def _plain_alphabet(n):
    return Alphabet([Generator(f"x{i}", VERTEX, i) for i in range(n)])


def _suite_system(name, field=None):
    return leavitt_gsb(suite_graphs()[name], field or Rationals())


def test_rule_validation():
    field = Rationals()
    with pytest.raises(InvalidRule):
        RewriteRule((), FreePolynomial())
    with pytest.raises(InvalidRule):
        # rhs term not strictly below the lhs
        RewriteRule((0,), FreePolynomial({(1, 1): field.one}))
    alph = _plain_alphabet(2)
    zero = FreePolynomial()
    with pytest.raises(InvalidRule):
        RewriteSystem(
            [RewriteRule((0, 0), zero), RewriteRule((0, 0), zero)],
            alph,
            field,
        )
    with pytest.raises(InvalidRule):
        # one lhs inside another: the system must be reduced
        RewriteSystem(
            [RewriteRule((0,), zero), RewriteRule((1, 0), zero)],
            alph,
            field,
        )


def test_reduce_once_is_leftmost_greatest():
    sys = _suite_system("S2")
    alph = sys.alphabet
    e, ghost = alph.key_of("e"), alph.key_of("e*")
    assert reduce_once((ghost, ghost), sys) is None  # e* e* is irreducible
    # e e* -> v is the greatest applicable left side
    step = reduce_once((e, e, ghost, ghost), sys)
    assert step == FreePolynomial.from_word(
        alph.word_of_names(["e", "v", "e*"]), sys.field.one
    )


def test_normal_form_idempotent_and_linear():
    rng = random.Random(SEED)
    sys = _suite_system("S4")
    keys = [g.order_key for g in sys.alphabet]
    a, b = sys.field.of(3), sys.field.of(-2)
    for _ in range(150):
        words = [
            tuple(rng.choice(keys) for _ in range(rng.randint(0, 4)))
            for _ in range(2)
        ]
        p = FreePolynomial({words[0]: sys.field.one})
        q = FreePolynomial({words[1]: sys.field.one})
        nf = normal_form(p.scaled(a) + q.scaled(b), sys)
        assert normal_form(nf, sys) == nf
        assert nf == normal_form(p, sys).scaled(a) + normal_form(q, sys).scaled(b)
        assert all(sys.is_irreducible(w) for w in nf.terms)


def _reduce_randomly(p, sys, rng):
    """Fully reduce picking a random term and a random redex each step."""
    work, done = p, FreePolynomial()
    while not work.is_zero():
        terms = sorted(work.terms.items())
        w, c = terms[rng.randrange(len(terms))]
        work = work - FreePolynomial.from_word(w, c)
        spots = [
            (i, r)
            for r in sys.rules
            for i in range(len(w) - len(r.lhs) + 1)
            if w[i:i + len(r.lhs)] == r.lhs
        ]
        if not spots:
            done = done + FreePolynomial.from_word(w, c)
            continue
        i, r = spots[rng.randrange(len(spots))]
        left = FreePolynomial.from_word(w[:i], sys.field.one)
        right = FreePolynomial.from_word(w[i + len(r.lhs):], sys.field.one)
        work = work + (left * r.rhs * right).scaled(c)
    return done


@pytest.mark.parametrize("name", ["S2", "S4", "S5"])
def test_normal_form_is_strategy_independent(name):
    rng = random.Random(SEED + 1)
    sys = _suite_system(name)
    assert not check_compositions(sys)
    keys = [g.order_key for g in sys.alphabet]
    for _ in range(60):
        w = tuple(rng.choice(keys) for _ in range(rng.randint(1, 5)))
        p = FreePolynomial.from_word(w, sys.field.one)
        assert _reduce_randomly(p, sys, rng) == normal_form(p, sys)


def test_self_overlap_failure_is_reported():
    # x0 x0 -> x1 alone cannot resolve its own overlap x0 x0 x0
    alph = _plain_alphabet(2)
    field = Rationals()
    rule = RewriteRule((0, 0), FreePolynomial({(1,): field.one}))
    sys = RewriteSystem([rule], alph, field)
    bad = check_compositions(sys)
    assert len(bad) == 1
    assert bad[0].word == (0, 0, 0)
    diff = FreePolynomial({(1, 0): field.one, (0, 1): -field.one})
    assert bad[0].difference == diff


def test_zeroing_a_rule_breaks_the_suite_system():
    sys = _suite_system("S5")
    vertex_keys = {g.order_key for g in sys.alphabet if g.kind == VERTEX}
    target = next(
        r
        for r in sys.rules
        if r.rhs.terms and not any(k in vertex_keys for k in r.lhs)
    )
    broken = [
        RewriteRule(r.lhs, FreePolynomial()) if r is target else r
        for r in sys.rules
    ]
    assert check_compositions(
        RewriteSystem(broken, sys.alphabet, sys.field)
    )


@pytest.mark.parametrize("name", ["S1", "S2", "S3", "S4", "S5"])
def test_word_counts_partition_into_irreducible_and_reducible(name):
    sys = _suite_system(name)
    keys = [g.order_key for g in sys.alphabet]
    by_len = {}
    for w in irreducible_words(sys, 3):
        by_len.setdefault(len(w), set()).add(w)
    for length in range(1, 4):
        words = list(itertools.product(keys, repeat=length))
        irr = {w for w in words if sys.is_irreducible(w)}
        red = {w for w in words if not sys.is_irreducible(w)}
        assert len(words) == len(irr) + len(red)
        assert by_len.get(length, set()) == irr


def test_irreducible_words_are_sorted_and_closed_under_prefix():
    sys = _suite_system("S4")
    out = irreducible_words(sys, 4)
    assert out[0] == ()
    assert sorted(out, key=lambda w: (len(w), w)) == list(out)
    members = set(out)
    assert all(w[:-1] in members for w in out if w)
