"""Homology of the ground field: reduced complex, exact ranks, the
contracting homotopy, and the Laurent specialization.

Tensoring the resolution with k over the algebra collapses every tail
through the augmentation; what is left is a complex of chain spaces with
integer-like matrices, and Tor is computed from their exact ranks.
"""

from .algebra import EDGE, VERTEX
from .chains import is_n_chain
from .errors import FormulaMismatch, HomotopyFailure
from .fields import Rationals
from .leavitt import laurent_graph, leavitt_gsb, substitution_terms
from .linalg import ExactMatrix
from .resolution import Augmentation, ResolutionEngine, TensorElement

__all__ = [
    "ExactMatrix",
    "TorTable",
    "reduced_element",
    "reduced_matrix",
    "tor_dims",
    "canonical_zeta",
    "homotopy_check",
    "laurent_formula_differential",
    "laurent_complex",
]


def reduced_element(engine, n, c):
    """The reduced differential of one chain, as a chain -> scalar dict.

    Every term of d_n(c (x) 1) contributes its coefficient times the
    augmentation of its tail.
    """
    out = {}
    for (c2, t2), coeff in engine.differential(n, c).terms.items():
        k = coeff * engine.eps.of_word(t2)
        if not k:
            continue
        s = out.get(c2, engine.field.zero) + k
        if s:
            out[c2] = s
        else:
            del out[c2]
    return out


def _direct_reduced(engine, n, c, graph):
    """Direct evaluation of the reduced differential, zero augmentation
    only: the signed rule-value substitutions over the chain and its
    sibling words. Exactly the tensor-1 part of the closed form, which is
    all that survives when the augmentation kills every generator."""
    return substitution_terms(n, c, graph, engine.sys)


def reduced_matrix(engine, n, graph=None):
    """Matrix of the reduced differential: rows are (n-1)-chains, columns
    n-chains. With the zero augmentation and the graph at hand every
    column is cross-checked against the direct substitution formula."""
    rows = list(engine.chains(n - 1))
    cols = list(engine.chains(n))
    row_index = {c: i for i, c in enumerate(rows)}
    zero_aug = all(not v for v in engine.eps.values.values())
    columns = []
    for c in cols:
        vec = reduced_element(engine, n, c)
        if zero_aug and graph is not None:
            assert vec == _direct_reduced(engine, n, c, graph), (
                "engine collapse and the substitution formula disagree on "
                f"{engine.sys.alphabet.word_str(c)}"
            )
        columns.append({row_index[w]: k for w, k in vec.items()})
    return ExactMatrix(rows, cols, columns, engine.field)


class TorTable:
    """Tor dimensions with the rank bookkeeping behind them.

    dims[n] is the dimension of Tor_n; homological degree n sits at chain
    degree n - 1, so dims[0] = 1 (the complex ends in the ground field with
    a zero map) and dims[n] = #C_{n-1} - rank D_{n-1} - rank D_n.
    """

    def __init__(self, dims, counts, ranks, field_name, augmentation):
        self.dims = list(dims)
        self.counts = dict(counts)
        self.ranks = dict(ranks)
        self.field_name = field_name
        self.augmentation = augmentation

    @property
    def max_n(self):
        return len(self.dims) - 1

    def shape(self, m):
        return (self.counts[m - 1], self.counts[m])

    def __repr__(self):
        return (
            f"TorTable(dims={self.dims!r}, field={self.field_name!r}, "
            f"augmentation={self.augmentation!r})"
        )


def tor_dims(engine, max_n, matrices=None, graph=None):
    assert max_n >= 1
    if matrices is None:
        matrices = {
            m: reduced_matrix(engine, m, graph) for m in range(1, max_n + 1)
        }
    counts = {m: len(engine.chains(m)) for m in range(0, max_n + 1)}
    ranks = {m: matrices[m].rank() for m in range(1, max_n + 1)}
    dims = [1]
    for n in range(1, max_n + 1):
        dims.append(counts[n - 1] - ranks.get(n - 1, 0) - ranks[n])
    return TorTable(
        dims, counts, ranks, engine.field.name, engine.eps.name
    )


def canonical_zeta(g, alphabet):
    """The recipe vertex for each generator: itself for a vertex, cod for
    an edge, dom for a ghost edge; rewriting then fixes the generator from
    the right."""
    zeta = {}
    for gen in alphabet:
        if gen.kind == VERTEX:
            zeta[gen.order_key] = gen.order_key
        elif gen.kind == EDGE:
            zeta[gen.order_key] = alphabet.key_of(g.cod(gen.name))
        else:
            zeta[gen.order_key] = alphabet.key_of(g.dom(gen.name[:-1]))
    return zeta


def homotopy_check(engine, g, n, zeta=None):
    """The identity (reduced d) o rho + rho o (reduced d) = id on n-chains.

    rho appends the zeta generator chosen by the checked chain's last
    letter and negates; zeta defaults to the canonical recipe and may be
    overridden (keyed by generator order key) for experiments. Returns True
    or raises HomotopyFailure listing the offending chains.
    """
    if zeta is None:
        zeta = canonical_zeta(g, engine.sys.alphabet)
    obs = engine.obstructions
    zero, one = engine.field.zero, engine.field.one
    failures = []
    for c in engine.chains(n):
        z = zeta[c[-1]]
        ext = c + (z,)
        acc = {}

        def sub(word, k):
            s = acc.get(word, zero) - k
            if s:
                acc[word] = s
            else:
                acc.pop(word, None)

        if not is_n_chain(ext, n + 1, obs):
            failures.append(c)
            continue
        ok = True
        for w, k in reduced_element(engine, n + 1, ext).items():
            sub(w, k)
        for w, k in reduced_element(engine, n, c).items():
            wz = w + (z,)
            if not is_n_chain(wz, n, obs):
                ok = False
                break
            sub(wz, k)
        if not ok or acc != {c: one}:
            failures.append(c)
    if failures:
        raise HomotopyFailure(n, failures)
    return True


def laurent_formula_differential(n, c, engine):
    """The unit-augmentation closed form on the loop graph.

    Head c[:n] (x) c[n], a first-letter drop (the suffix of a chain is a
    chain), and the signed single-letter pair substitutions, kept when the
    substituted word is an (n-1)-chain.
    """
    one = engine.field.one
    c = tuple(c)
    if n == 0:
        return TensorElement(-1, {((), c): one, ((), ()): -one})
    terms = {}

    def add(pair, coeff):
        s = terms.get(pair, 0) + coeff
        if s:
            terms[pair] = s
        else:
            terms.pop(pair, None)

    add((c[:n], (c[n],)), one)
    add((c[1:], ()), -one if (n - 1) % 2 else one)
    for t in range(1, n + 1):
        sign = -one if (n - t - 1) % 2 else one
        rule = engine.sys.rule_for((c[t - 1], c[t]))
        for mono, coeff in rule.rhs.terms.items():
            word = c[: t - 1] + mono + c[t + 1:]
            if is_n_chain(word, n - 1, engine.obstructions):
                add((word, ()), sign * coeff)
    return TensorElement(n - 1, terms)


def laurent_complex(max_n, field=None):
    """Tor of the Laurent-series algebra with the unit augmentation.

    Builds the loop-graph engine with eps == 1, checks the direct formula
    against the generic engine on every chain up to max_n (FormulaMismatch
    on disagreement), and returns (TorTable, reduced matrices by degree).
    """
    assert max_n >= 1
    field = field if field is not None else Rationals()
    g = laurent_graph()
    sys = leavitt_gsb(g, field)
    eps = Augmentation.unit(sys.alphabet, field)
    assert eps.is_algebra_map(sys), "eps == 1 must kill every relation here"
    engine = ResolutionEngine(sys, eps, max_deg=max_n + 2)
    alph = sys.alphabet
    for n in range(0, max_n + 1):
        for c in engine.chains(n):
            if laurent_formula_differential(n, c, engine) != \
                    engine.differential(n, c):
                raise FormulaMismatch(
                    f"direct formula disagrees with the generic engine on "
                    f"{alph.word_str(c)} in degree {n}"
                )
    matrices = {m: reduced_matrix(engine, m) for m in range(1, max_n + 1)}
    table = tor_dims(engine, max_n, matrices)
    return table, matrices
