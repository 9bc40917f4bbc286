"""Rewrite systems presented by a Groebner-Shirshov basis: one-step
reduction, normal forms, overlap (composition) checking, and enumeration of
irreducible words.

A rule is lhs -> rhs with lhs a word and rhs a polynomial strictly below lhs
in deglex; rewriting therefore terminates on every input, and when every
composition resolves the normal form is independent of strategy.
"""

from collections import namedtuple

from .algebra import FreePolynomial, word_key
from .errors import InvalidRule


class RewriteRule:
    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs, rhs):
        lhs = tuple(lhs)
        if not lhs:
            raise InvalidRule("empty left side")
        for w in rhs.terms:
            if word_key(w) >= word_key(lhs):
                raise InvalidRule(
                    f"rhs term {w} is not below lhs {lhs} in the word order"
                )
        self.lhs = lhs
        self.rhs = rhs

    def __repr__(self):
        return f"RewriteRule({self.lhs!r} -> {self.rhs.terms!r})"

    def to_str(self, alphabet):
        return f"{alphabet.word_str(self.lhs)} -> {self.rhs.to_str(alphabet)}"


def _is_subword(small, big):
    n, m = len(small), len(big)
    return any(big[i:i + n] == small for i in range(m - n + 1))


class RewriteSystem:
    """An immutable rule set over an alphabet, with a normal-form cache."""

    def __init__(self, rules, alphabet, field):
        rules = list(rules)
        lhss = [r.lhs for r in rules]
        if len(set(lhss)) != len(lhss):
            raise InvalidRule("duplicate left sides")
        for r in rules:
            for s in rules:
                if r is not s and _is_subword(r.lhs, s.lhs):
                    raise InvalidRule(
                        f"lhs {r.lhs} is a subword of lhs {s.lhs}; "
                        "the system must be reduced"
                    )
        self.rules = tuple(rules)
        self.alphabet = alphabet
        self.field = field
        self.by_lhs = {r.lhs: r for r in rules}
        self.obstructions = frozenset(lhss)
        self._lhs_desc = sorted(lhss, key=word_key, reverse=True)
        self._lhs_lengths = sorted({len(w) for w in lhss})
        self._nf_cache = {}

    def rule_for(self, lhs):
        return self.by_lhs.get(tuple(lhs))

    def is_irreducible(self, word):
        for i in range(len(word)):
            for ell in self._lhs_lengths:
                if i + ell > len(word):
                    break
                if word[i:i + ell] in self.obstructions:
                    return False
        return True


def reduce_once(word, sys):
    """Rewrite the leftmost occurrence of the greatest applicable lhs.

    Returns the resulting polynomial, or None when the word is irreducible
    (the no-redex signal).
    """
    word = tuple(word)
    for lhs in sys._lhs_desc:
        n = len(lhs)
        for i in range(len(word) - n + 1):
            if word[i:i + n] == lhs:
                rule = sys.by_lhs[lhs]
                prefix = FreePolynomial.from_word(word[:i], sys.field.one)
                suffix = FreePolynomial.from_word(word[i + n:], sys.field.one)
                return prefix * rule.rhs * suffix
    return None


def _nf_word(word, sys):
    cached = sys._nf_cache.get(word)
    if cached is not None:
        return cached
    step = reduce_once(word, sys)
    if step is None:
        result = FreePolynomial.from_word(word, sys.field.one)
    else:
        acc = FreePolynomial()
        for w, c in step.terms.items():
            acc = acc + _nf_word(w, sys).scaled(c)
        result = acc
    sys._nf_cache[word] = result
    return result


def normal_form(p, sys):
    """Fully reduce a polynomial; linear in p, memoized per word."""
    if isinstance(p, tuple):
        return _nf_word(p, sys)
    acc = FreePolynomial()
    for w, c in p.terms.items():
        acc = acc + _nf_word(w, sys).scaled(c)
    return acc


Overlap = namedtuple("Overlap", "word rule1 rule2 difference")


def check_compositions(sys):
    """All unresolved overlaps; an empty list certifies the basis.

    Only intersection overlaps occur (one lhs inside another is ruled out at
    construction). For each suffix-prefix match the overlap word is reduced
    both ways and the normal forms compared.
    """
    one = sys.field.one
    bad = []
    for r1 in sys.rules:
        for r2 in sys.rules:
            max_k = min(len(r1.lhs), len(r2.lhs)) - 1
            for k in range(1, max_k + 1):
                if r1.lhs[-k:] != r2.lhs[:k]:
                    continue
                word = r1.lhs + r2.lhs[k:]
                left = r1.rhs * FreePolynomial.from_word(r2.lhs[k:], one)
                right = FreePolynomial.from_word(r1.lhs[:-k], one) * r2.rhs
                diff = normal_form(left, sys) - normal_form(right, sys)
                if not diff.is_zero():
                    bad.append(Overlap(word, r1, r2, diff))
    return bad


def irreducible_words(sys, max_len):
    """All irreducible words of length <= max_len, ascending deglex.

    Grown length by length: a word w+g is irreducible iff w is and no lhs is
    a suffix of w+g, since any new redex must end at the new letter.
    """
    keys = [g.order_key for g in sys.alphabet]
    level = [()]
    out = [()]
    for _ in range(max_len):
        nxt = []
        for w in level:
            for g in keys:
                cand = w + (g,)
                if all(
                    cand[len(cand) - ell:] not in sys.obstructions
                    for ell in sys._lhs_lengths
                    if ell <= len(cand)
                ):
                    nxt.append(cand)
        out.extend(nxt)
        level = nxt
    return sorted(out, key=word_key)
