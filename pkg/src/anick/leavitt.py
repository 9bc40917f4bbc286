"""Leavitt path algebras over directed graphs.

A finite graph yields generators (vertices, edges, ghost edges) and the
Cuntz-Krieger relations; these complete to a rewriting system in which every
rule has a two-letter left side. That makes the chain combinatorics local
(adjacent-pair conditions) and gives the differentials closed forms, both
implemented here and cross-checked against the generic engine.
"""

from .algebra import EDGE, GHOST_EDGE, VERTEX, Alphabet, FreePolynomial, Generator
from .chains import is_n_chain
from .errors import FormulaMismatch, InvalidGraph
from .resolution import TensorElement
from .rewriting import RewriteRule, RewriteSystem, normal_form


class Graph:
    """A finite directed graph with ordered per-vertex edge lists.

    The listing order matters: the first edge listed out of a vertex is the
    distinguished top edge whose ghost pair carries the solved Cuntz-Krieger
    rule. A finite edge list is row-finite by construction.
    """

    def __init__(self, vertices, edges=()):
        vertices = tuple(str(v) for v in vertices)
        edges = tuple((str(n), str(d), str(c)) for n, d, c in edges)
        if not vertices:
            raise InvalidGraph("a graph needs at least one vertex")
        seen = set()
        for name in list(vertices) + [e[0] for e in edges]:
            if name in seen:
                raise InvalidGraph(f"duplicate name {name!r}")
            if name.endswith("*"):
                raise InvalidGraph(
                    f"name {name!r} is reserved for ghost edges"
                )
            seen.add(name)
        vset = set(vertices)
        for name, dom, cod in edges:
            if dom not in vset:
                raise InvalidGraph(f"edge {name!r}: unknown dom {dom!r}")
            if cod not in vset:
                raise InvalidGraph(f"edge {name!r}: unknown cod {cod!r}")
        self.vertices = vertices
        self.edges = edges
        self._dom = {n: d for n, d, _ in edges}
        self._cod = {n: c for n, _, c in edges}
        self._out = {v: [] for v in vertices}
        for name, dom, _ in edges:
            self._out[dom].append(name)

    def dom(self, edge):
        return self._dom[edge]

    def cod(self, edge):
        return self._cod[edge]

    def outgoing(self, v):
        return tuple(self._out[v])

    def is_sink(self, v):
        return not self._out[v]

    def top_edge(self, v):
        out = self._out[v]
        return out[0] if out else None

    def __repr__(self):
        return f"Graph(vertices={self.vertices!r}, edges={self.edges!r})"


def leavitt_alphabet(g):
    """Generators of L(graph) under the order vertices < ghosts < edges.

    Vertices and ghost edges ascend in listing order; edges descend, so the
    first-listed edge is the greatest generator and each top pair e_v e_v*
    deglex-dominates the rest of its Cuntz-Krieger relation.
    """
    nv, ne = len(g.vertices), len(g.edges)
    gens = []
    pairing = {}
    for i, v in enumerate(g.vertices):
        gens.append(Generator(v, VERTEX, i))
    for i, (name, _, _) in enumerate(g.edges):
        ghost_key = nv + i
        edge_key = nv + ne + (ne - 1 - i)
        gens.append(Generator(name + "*", GHOST_EDGE, ghost_key))
        gens.append(Generator(name, EDGE, edge_key))
        pairing[edge_key] = ghost_key
        pairing[ghost_key] = edge_key
    return Alphabet(gens, pairing)


class LeavittPresentation:
    """Generators plus defining relations, each a polynomial equated to 0.

    The Cuntz-Krieger relation appears once per non-sink vertex, in solved
    form: the top pair e_v e_v* minus vertex plus the remaining pairs.
    """

    def __init__(self, alphabet, relations, graph):
        self.alphabet = alphabet
        self.relations = tuple(relations)
        self.graph = graph


def presentation(g, field):
    alph = leavitt_alphabet(g)
    one = field.one

    def mono(*names):
        return FreePolynomial.from_word(
            tuple(alph.key_of(n) for n in names), one
        )

    rels = []
    for vi in g.vertices:
        for vj in g.vertices:
            rel = mono(vi, vj)
            if vi == vj:
                rel = rel - mono(vi)
            rels.append(rel)
    for name, dom, cod in g.edges:
        star = name + "*"
        rels.append(mono(dom, name) - mono(name))
        rels.append(mono(name, cod) - mono(name))
        rels.append(mono(cod, star) - mono(star))
        rels.append(mono(star, dom) - mono(star))
    for a, _, cod_a in g.edges:
        for b, _, _ in g.edges:
            rel = mono(a + "*", b)
            if a == b:
                rel = rel - mono(cod_a)
            rels.append(rel)
    for v in g.vertices:
        out = g.outgoing(v)
        if not out:
            continue
        rel = mono(out[0], out[0] + "*") - mono(v)
        for e in out[1:]:
            rel = rel + mono(e, e + "*")
        rels.append(rel)
    return LeavittPresentation(alph, rels, g)


def leavitt_gsb(g, field):
    """The complete two-letter rewriting system for L(graph).

    Every two-letter word either heads a rule below or is irreducible; the
    irreducible ones are exactly composable paths ab, composable ghost paths
    a*b*, and pairs ab* with cod(a) = cod(b) other than the solved top pair.
    """
    alph = leavitt_alphabet(g)
    one = field.one
    zero = FreePolynomial()

    def mono(*names):
        return FreePolynomial.from_word(
            tuple(alph.key_of(n) for n in names), one
        )

    rules = []

    def rule(l1, l2, rhs):
        rules.append(RewriteRule((alph.key_of(l1), alph.key_of(l2)), rhs))

    for u in g.vertices:
        for x in g.vertices:
            rule(u, x, mono(u) if u == x else zero)
        for e, dom, cod in g.edges:
            rule(u, e, mono(e) if u == dom else zero)
            rule(e, u, mono(e) if u == cod else zero)
            rule(u, e + "*", mono(e + "*") if u == cod else zero)
            rule(e + "*", u, mono(e + "*") if u == dom else zero)
    for a, dom_a, cod_a in g.edges:
        for b, dom_b, cod_b in g.edges:
            rule(a + "*", b, mono(cod_a) if a == b else zero)
            if cod_a != dom_b:
                rule(a, b, zero)
            if dom_a != cod_b:
                rule(a + "*", b + "*", zero)
            if a == b and a == g.top_edge(dom_a):
                rhs = mono(dom_a)
                for e in g.outgoing(dom_a)[1:]:
                    rhs = rhs - mono(e, e + "*")
                rule(a, a + "*", rhs)
            elif cod_a != cod_b:
                rule(a, b + "*", zero)
    return RewriteSystem(rules, alph, field)


def _edge_name(gen):
    return gen.name[:-1] if gen.kind == GHOST_EDGE else gen.name


def chain_allowed(prev, nxt, g):
    """Whether two generators may sit adjacently inside a chain.

    Equivalent to: the two-letter word prev nxt heads a rule. Stated as the
    five adjacency cases so that chains can be recognized without building
    the rewriting system; an n-chain is then any (n+1)-letter word all of
    whose adjacent pairs are allowed.
    """
    if prev.kind == VERTEX or nxt.kind == VERTEX:
        return True
    a, b = _edge_name(prev), _edge_name(nxt)
    if prev.kind == EDGE and nxt.kind == EDGE:
        return g.cod(a) != g.dom(b)
    if prev.kind == GHOST_EDGE and nxt.kind == EDGE:
        return True
    if prev.kind == GHOST_EDGE and nxt.kind == GHOST_EDGE:
        return g.dom(a) != g.cod(b)
    if a == b:
        return a == g.top_edge(g.dom(a))
    return g.cod(a) != g.cod(b)


def predicate_chains(n, g, alphabet):
    """All n-chains by the adjacency predicate, sorted ascending."""
    if n < 0:
        return [()]
    words = [(k,) for k in range(len(alphabet))]
    for _ in range(n):
        words = [
            w + (k,)
            for w in words
            for k in range(len(alphabet))
            if chain_allowed(alphabet.gen(w[-1]), alphabet.gen(k), g)
        ]
    return sorted(words)


def _is_top_pair(a, b, keys, g, alph):
    """Whether generators a, b at keys form a solved pair e_v e_v*."""
    return (
        a.kind == EDGE
        and b.kind == GHOST_EDGE
        and alph.pairing[keys[0]] == keys[1]
        and a.name == g.top_edge(g.dom(a.name))
    )


def sibling_words(c, g, alphabet):
    """Words from c with solved pairs e_v e_v* swapped for sibling pairs.

    Each occurrence of a pair solved by the exchange rule at a vertex v may
    independently stay or become e_v^r e_v^(r*) for any other edge e_v^r
    out of v; every such word except c itself is yielded. Occurrences
    cannot overlap, so the choices are a product. Empty unless some vertex
    has two or more outgoing edges.
    """
    slots = []
    for i in range(len(c) - 1):
        a, b = alphabet.gen(c[i]), alphabet.gen(c[i + 1])
        if not _is_top_pair(a, b, (c[i], c[i + 1]), g, alphabet):
            continue
        swaps = [
            (alphabet.key_of(e), alphabet.key_of(e + "*"))
            for e in g.outgoing(g.dom(a.name))
            if e != a.name
        ]
        if swaps:
            slots.append((i, swaps))
    out = [c]
    for i, swaps in slots:
        out += [
            w[:i] + pair + w[i + 2:] for w in out for pair in swaps
        ]
    return out[1:]


def substitution_terms(n, c, g, sys):
    """The (n-1)-chain (x) 1 part of d_n(c (x) 1), as a word -> scalar dict.

    For each adjacent pair j = 1..n, substitute each monomial of the rule
    the pair heads, keep the result when it is an (n-1)-chain, and weight
    it by the parity sign of n - j - 1. The substitutions run over the
    chain itself and over each of its sibling words: eliminating the
    two-letter monomials of the exchange rule's value re-expresses a solved
    pair over every outgoing edge, and the rule values adjacent to the
    swapped slot, or at the junction pair of two swapped slots, differ
    edge by edge, so the sibling words contribute terms the plain chain
    cannot see. A substitution that does not touch a swapped slot leaves
    its non-obstruction pair e_v^r e_v^(r*) intact and the chain condition
    removes the word, so no term is counted twice; for the same reason a
    word with more than two swaps, or two swaps no single pair can reach,
    contributes nothing.
    """
    c = tuple(c)
    one = sys.field.one
    acc = {}

    def add(word, coeff):
        s = acc.get(word, 0) + coeff
        if s:
            acc[word] = s
        else:
            acc.pop(word, None)

    for src in (c, *sibling_words(c, g, sys.alphabet)):
        for j in range(1, n + 1):
            rule = sys.rule_for((src[j - 1], src[j]))
            if rule is None:
                # only the swapped slot of a sibling word lacks a rule
                assert src != c, "adjacent pairs of a chain head rules"
                continue
            sign = -one if (n - j - 1) % 2 else one
            for mono, coeff in rule.rhs.terms.items():
                word = src[: j - 1] + mono + src[j + 1:]
                if is_n_chain(word, n - 1, sys.obstructions):
                    add(word, sign * coeff)
    return acc


def closed_form_differential(n, c, g, sys, engine=None):
    """The differential of an n-chain evaluated by the closed formulas.

    Head: when the chain ends with a solved top pair e_v e_v*, the head sum
    runs over all edges out of v, c[:n-1] e_v^r (x) e_v^(r*); otherwise it is
    c[:n] (x) c[n]. Added to that are the signed rule-value substitutions of
    substitution_terms, tensor 1, taken over the chain and its sibling
    words. Passing the generic engine cross-checks the result and raises
    FormulaMismatch on disagreement.
    """
    c = tuple(c)
    field = sys.field
    one = field.one
    alph = sys.alphabet
    if n == 0:
        return TensorElement(-1, {((), c): one})
    terms = {}

    def add(pair, coeff):
        s = terms.get(pair, 0) + coeff
        if s:
            terms[pair] = s
        else:
            terms.pop(pair, None)

    prev, last = alph.gen(c[n - 1]), alph.gen(c[n])
    if _is_top_pair(prev, last, (c[n - 1], c[n]), g, alph):
        for e in g.outgoing(g.dom(prev.name)):
            add(
                (c[: n - 1] + (alph.key_of(e),), (alph.key_of(e + "*"),)),
                one,
            )
    else:
        add((c[:n], (c[n],)), one)
    for word, coeff in substitution_terms(n, c, g, sys).items():
        add((word, ()), coeff)
    result = TensorElement(n - 1, terms)
    if engine is not None and result != engine.differential(n, c):
        raise FormulaMismatch(
            f"closed form disagrees with the generic engine on "
            f"{alph.word_str(c)} in degree {n}"
        )
    return result


def cancellation_sum(n, c, g, sys, negate_first_term=False):
    """The double cancellation sum over pairwise rule substitutions.

    The outer index s substitutes the rule value at pair s of the chain.
    The inner index t = 1..n-1 runs over the pair positions of the
    contracted result: t below s - 1 or above s references an untouched
    pair of the chain (t + 1 in the latter case), substituted in turn,
    while t = s - 1 and t = s name the junctions where the substituted
    value meets its neighbor letter; there the whole window is reduced to
    normal form, and an irreducible junction passes through unchanged.
    Every (s, t) term then cancels against exactly one partner of opposite
    sign, so the signed sum vanishes identically on chains.
    negate_first_term flips the (s, t) = (1, 1) contribution, a control
    showing the signs are load-bearing.
    """
    assert n >= 2
    c = tuple(c)
    one = sys.field.one
    acc = {}

    def add(word, coeff):
        v = acc.get(word, 0) + coeff
        if v:
            acc[word] = v
        else:
            acc.pop(word, None)

    for s in range(1, n + 1):
        sign_s = -one if (n - s - 1) % 2 else one
        rule_s = sys.rule_for((c[s - 1], c[s]))
        assert rule_s is not None, "adjacent pairs of a chain head rules"
        for mono1, k1 in rule_s.rhs.terms.items():
            for t in range(1, n):
                sign_t = -one if (n - t - 1) % 2 else one
                coeff = sign_s * sign_t * k1
                if negate_first_term and s == 1 and t == 1:
                    coeff = -coeff
                if t <= s - 2:
                    rule_t = sys.rule_for((c[t - 1], c[t]))
                    assert rule_t is not None
                    for mono2, k2 in rule_t.rhs.terms.items():
                        add(
                            c[: t - 1] + mono2 + c[t + 1: s - 1]
                            + mono1 + c[s + 1:],
                            coeff * k2,
                        )
                elif t == s - 1:
                    window = normal_form((c[s - 2],) + mono1, sys)
                    for w, k2 in window.terms.items():
                        add(c[: s - 2] + w + c[s + 1:], coeff * k2)
                elif t == s:
                    window = normal_form(mono1 + (c[s + 1],), sys)
                    for w, k2 in window.terms.items():
                        add(c[: s - 1] + w + c[s + 2:], coeff * k2)
                else:
                    rule_t = sys.rule_for((c[t], c[t + 1]))
                    assert rule_t is not None
                    for mono2, k2 in rule_t.rhs.terms.items():
                        add(
                            c[: s - 1] + mono1 + c[s + 1: t]
                            + mono2 + c[t + 2:],
                            coeff * k2,
                        )
    return FreePolynomial(acc)


def suite_graphs():
    """The five standing test graphs, smallest to largest."""
    return {
        "S1": Graph(["v"]),
        "S2": Graph(["v"], [("e", "v", "v")]),
        "S3": Graph(["v", "w"], [("e", "v", "w")]),
        "S4": Graph(["v", "w"], [("a", "v", "w"), ("b", "v", "w")]),
        "S5": Graph(["v", "w"], [("e", "v", "w"), ("f", "w", "v")]),
    }


def laurent_graph():
    """One vertex, one loop: L of it is the Laurent polynomial algebra."""
    return Graph(["v"], [("e", "v", "v")])
