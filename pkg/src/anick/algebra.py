"""Free monoid words, the degree-lexicographic well-order, and exact-
coefficient polynomials in the free algebra.

Words are tuples of generator order keys (small ints), so the deglex order
is literally the tuple (len(w), w) and concatenation is tuple addition.
Polynomials are immutable dicts word -> nonzero scalar.
"""

from .errors import ZeroPolynomial

VERTEX = "vertex"
EDGE = "edge"
GHOST_EDGE = "ghost_edge"

KINDS = (VERTEX, EDGE, GHOST_EDGE)


class Generator:
    """A named alphabet letter with a kind and a global order position."""

    __slots__ = ("name", "kind", "order_key")

    def __init__(self, name, kind, order_key):
        assert kind in KINDS, f"unknown kind {kind!r}"
        self.name = name
        self.kind = kind
        self.order_key = order_key

    def __repr__(self):
        return f"Generator({self.name!r}, {self.kind}, {self.order_key})"

    def __eq__(self, other):
        return (
            isinstance(other, Generator)
            and self.name == other.name
            and self.kind == other.kind
            and self.order_key == other.order_key
        )

    def __hash__(self):
        return hash((self.name, self.kind, self.order_key))


class Alphabet:
    """The generator set with name/key lookup and the edge-ghost pairing."""

    def __init__(self, generators, pairing=None):
        gens = sorted(generators, key=lambda g: g.order_key)
        keys = [g.order_key for g in gens]
        assert keys == list(range(len(gens))), "order keys must be 0..n-1"
        names = [g.name for g in gens]
        assert len(set(names)) == len(names), "generator names must be unique"
        self.generators = tuple(gens)
        self.by_name = {g.name: g for g in gens}
        # pairing: order_key of an edge <-> order_key of its ghost
        self.pairing = dict(pairing or {})
        edges = {g.order_key for g in gens if g.kind == EDGE}
        ghosts = {g.order_key for g in gens if g.kind == GHOST_EDGE}
        paired_edges = {k for k in self.pairing if gens[k].kind == EDGE}
        assert paired_edges == edges, "every edge needs a paired ghost"
        for k, v in self.pairing.items():
            assert self.pairing.get(v) == k, "pairing must be symmetric"
        assert {self.pairing[k] for k in edges} == ghosts, (
            "every ghost needs a paired edge"
        )

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def gen(self, key):
        return self.generators[key]

    def key_of(self, name):
        return self.by_name[name].order_key

    def word_of_names(self, names):
        return tuple(self.key_of(n) for n in names)

    def word_str(self, word):
        if not word:
            return "1"
        return " ".join(self.generators[k].name for k in word)


def word_key(w):
    """Deglex sort key: degree first, then letters by order key."""
    return (len(w), w)


def cmp_words(a, b):
    """-1, 0, or 1 as a <, =, > b in deglex."""
    ka, kb = word_key(a), word_key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


class FreePolynomial:
    """Finite formal sum of words with nonzero exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        d = dict(terms)
        for w in [w for w, c in d.items() if not c]:
            del d[w]
        self.terms = d

    @classmethod
    def from_word(cls, word, coeff):
        return cls({tuple(word): coeff})

    def is_zero(self):
        return not self.terms

    def items_sorted(self):
        """Terms sorted descending; the first one is the leading term."""
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ZeroPolynomial("leading term of 0")
        w = max(self.terms, key=word_key)
        return w, self.terms[w]

    def __add__(self, other):
        d = dict(self.terms)
        for w, c in other.terms.items():
            s = d.get(w, 0) + c
            if s:
                d[w] = s
            elif w in d:
                del d[w]
        return FreePolynomial(d)

    def __neg__(self):
        return FreePolynomial({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        d = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = d.get(w, 0) + c1 * c2
                if s:
                    d[w] = s
                elif w in d:
                    del d[w]
        return FreePolynomial(d)

    def scaled(self, coeff):
        if not coeff:
            return FreePolynomial()
        return FreePolynomial({w: coeff * c for w, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FreePolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"FreePolynomial({self.terms!r})"

    def to_str(self, alphabet):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items_sorted():
            ws = alphabet.word_str(w)
            if c == 1:
                body = ws
            elif c == -1:
                body = f"-{ws}"
            else:
                body = f"{c}*{ws}"
            if parts and not body.startswith("-"):
                parts.append(f"+ {body}")
            elif parts:
                parts.append(f"- {body[1:]}")
            else:
                parts.append(body)
        return " ".join(parts)


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def leading_term(p):
    """(word, coefficient) of the deglex-greatest term; ZeroPolynomial on 0."""
    return p.leading_term()
