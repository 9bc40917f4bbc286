"""The generic Anick resolution engine.

The resolution of k over A has degree-n component spanned by pairs
(n-chain, irreducible word); the differential is defined inductively,

    d_0(x (x) 1) = x - eps(x),
    d_n(c (x) 1)  = u (x) t  -  i(d(u (x) t)),

where u is the (n-1)-chain prefix of c, t the remaining tail, and i the
splitting map of the previous degree, computed by leading-term elimination:
repeatedly factor the leading word through h (chain prefix times irreducible
tail), subtract that basis element's differential, and accumulate. For the
systems handled here the subtracted head always carries coefficient one and
the leading word strictly decreases, which makes the loop terminate; both
facts are asserted rather than assumed.

Everything is computed over an exact field and memoized per (degree, chain).
"""

from .algebra import FreePolynomial, word_key
from .chains import ChainSet, chain_prefix_end, enumerate_chains, is_n_chain
from .errors import (
    ConditionViolated,
    MalformedElement,
    NonTerminating,
    NotInKernel,
    TruncationExceeded,
)
from .linalg import ExactMatrix
from .rewriting import normal_form


class TensorElement:
    """Finite sum of coefficient * (chain (x) irreducible tail) in one degree.

    Distinct stored pairs always have distinct concatenations, so the
    leading term under the deglex order of the concatenation is unique.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms):
        d = {}
        seen = {}
        for (c, t), coeff in dict(terms).items():
            if not coeff:
                continue
            c, t = tuple(c), tuple(t)
            w = c + t
            if w in seen and seen[w] != (c, t):
                raise MalformedElement(
                    f"pairs {seen[w]} and {(c, t)} share a concatenation"
                )
            seen[w] = (c, t)
            d[(c, t)] = coeff
        self.degree = degree
        self.terms = d

    def is_zero(self):
        return not self.terms

    def items_sorted(self):
        return sorted(
            self.terms.items(),
            key=lambda item: word_key(item[0][0] + item[0][1]),
            reverse=True,
        )

    def leading(self):
        pair = max(self.terms, key=lambda p: word_key(p[0] + p[1]))
        return pair, self.terms[pair]

    def __add__(self, other):
        assert self.degree == other.degree
        d = dict(self.terms)
        for pair, coeff in other.terms.items():
            s = d.get(pair, 0) + coeff
            if s:
                d[pair] = s
            else:
                d.pop(pair, None)
        return TensorElement(self.degree, d)

    def __neg__(self):
        return TensorElement(
            self.degree, {p: -c for p, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, coeff):
        if not coeff:
            return TensorElement(self.degree, {})
        return TensorElement(
            self.degree, {p: coeff * c for p, c in self.terms.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        return f"TensorElement(degree={self.degree}, terms={self.terms!r})"

    def to_str(self, alphabet):
        if not self.terms:
            return "0"
        parts = []
        for (c, t), coeff in self.items_sorted():
            body = f"[{alphabet.word_str(c)} | {alphabet.word_str(t)}]"
            if coeff == 1:
                piece = body
            elif coeff == -1:
                piece = f"-{body}"
            else:
                piece = f"{coeff}*{body}"
            if parts and not piece.startswith("-"):
                parts.append(f"+ {piece}")
            elif parts:
                parts.append(f"- {piece[1:]}")
            else:
                parts.append(piece)
        return " ".join(parts)


class Augmentation:
    """An algebra map A -> k recorded on generators.

    Extends multiplicatively to words; the empty word maps to one. Whether
    the generator values actually define an algebra map depends on the
    relations, so is_algebra_map checks them against a rewrite system.
    """

    def __init__(self, alphabet, values, field, name="custom"):
        self.alphabet = alphabet
        self.field = field
        self.values = {int(k): v for k, v in values.items()}
        assert set(self.values) == {g.order_key for g in alphabet}
        self.name = name

    @classmethod
    def zero(cls, alphabet, field):
        return cls(
            alphabet,
            {g.order_key: field.zero for g in alphabet},
            field,
            name="zero",
        )

    @classmethod
    def unit(cls, alphabet, field):
        return cls(
            alphabet,
            {g.order_key: field.one for g in alphabet},
            field,
            name="unit",
        )

    def value(self, key):
        return self.values[key]

    def of_word(self, word):
        acc = self.field.one
        for k in word:
            acc = acc * self.values[k]
            if not acc:
                return acc
        return acc

    def of_poly(self, p):
        acc = self.field.zero
        for w, c in p.terms.items():
            acc = acc + c * self.of_word(w)
        return acc

    def is_algebra_map(self, sys):
        """eps must kill every rule lhs - rhs."""
        return all(
            self.of_word(r.lhs) == self.of_poly(r.rhs) for r in sys.rules
        )


def d0(gen, eps):
    """The degree-zero differential as an algebra element: x - eps(x)."""
    key = gen.order_key if hasattr(gen, "order_key") else int(gen)
    p = FreePolynomial.from_word((key,), eps.field.one)
    e = eps.value(key)
    if e:
        p = p + FreePolynomial.from_word((), -e)
    return p


class VerifyReport:
    def __init__(self):
        self.dd_checked = 0
        self.dd_failures = []
        self.exactness_checked = 0
        self.exactness_failures = []

    @property
    def ok(self):
        return not self.dd_failures and not self.exactness_failures

    def lines(self, alphabet):
        out = [
            f"d o d = 0 on {self.dd_checked} chains: "
            f"{len(self.dd_failures)} failure(s)",
            f"truncated exactness on {self.exactness_checked} kernel "
            f"elements: {len(self.exactness_failures)} failure(s)",
        ]
        for n, chain in self.dd_failures:
            out.append(f"  d o d != 0 at degree {n}: {alphabet.word_str(chain)}")
        for degree, desc in self.exactness_failures:
            out.append(f"  not exact at degree {degree}: {desc}")
        return out


class ResolutionEngine:
    """Differentials of the Anick resolution for one system and augmentation.

    max_deg caps the concatenated word length of anything the engine is asked
    to touch; beyond it TruncationExceeded is raised instead of silently
    truncating.
    """

    def __init__(self, sys, eps, max_deg=12):
        assert max_deg >= 2
        self.sys = sys
        self.eps = eps
        self.field = sys.field
        self.max_deg = max_deg
        self.obstructions = frozenset(sys.obstructions)
        self._chain_sets = {}
        self._diff = {}
        self._chain_ok = {}
        self._prefix_end = {}

    # -- chain bookkeeping ------------------------------------------------

    def chains(self, n):
        if n not in self._chain_sets:
            prev = self._chain_sets.get(n - 1) if n >= 1 else None
            self._chain_sets[n] = enumerate_chains(
                n, self.obstructions, self.sys, prev=prev
            )
        return self._chain_sets[n]

    def _is_chain(self, word, n):
        key = (n, word)
        hit = self._chain_ok.get(key)
        if hit is None:
            hit = is_n_chain(word, n, self.obstructions)
            self._chain_ok[key] = hit
        return hit

    def _chain_prefix_end(self, word, n):
        key = (n, word)
        if key not in self._prefix_end:
            self._prefix_end[key] = chain_prefix_end(
                word, n, self.obstructions
            )
        return self._prefix_end[key]

    # -- basic maps --------------------------------------------------------

    def h(self, n, word):
        """Project a word onto the chain (x) irreducible basis of degree n."""
        word = tuple(word)
        end = self._chain_prefix_end(word, n)
        if end is None:
            return TensorElement(n, {})
        tail = word[end:]
        if not self.sys.is_irreducible(tail):
            return TensorElement(n, {})
        return TensorElement(n, {(word[:end], tail): self.field.one})

    def h_poly(self, n, poly):
        acc = TensorElement(n, {})
        for w, c in poly.terms.items():
            acc = acc + self.h(n, w).scaled(c)
        return acc

    def augmentation_value(self, elem):
        """The augmentation functional on a degree -1 element (= element of A)."""
        assert elem.degree == -1
        acc = self.field.zero
        for (_, t), coeff in elem.terms.items():
            acc = acc + coeff * self.eps.of_word(t)
        return acc

    # -- differentials -----------------------------------------------------

    def differential(self, n, chain):
        chain = tuple(chain)
        key = (n, chain)
        cached = self._diff.get(key)
        if cached is not None:
            return cached
        if len(chain) > self.max_deg:
            raise TruncationExceeded(
                f"chain of length {len(chain)} exceeds max_deg={self.max_deg}"
            )
        if not self._is_chain(chain, n):
            raise MalformedElement(f"{chain} is not a {n}-chain")
        if n == 0:
            terms = {((), chain): self.field.one}
            e = self.eps.value(chain[0])
            if e:
                terms[((), ())] = -e
            out = TensorElement(-1, terms)
        else:
            end = self._chain_prefix_end(chain, n - 1)
            u, t = chain[:end], chain[end:]
            assert self.sys.is_irreducible(t), "tail of a chain split must be irreducible"
            head = TensorElement(n - 1, {(u, t): self.field.one})
            omega = self.apply_d(n - 1, head)
            out = head - self.split(n - 1, omega)
        self._diff[key] = out
        return out

    def apply_d(self, n, elem):
        """d_n extended A-linearly: multiply tails, renormalize, recollect."""
        assert elem.degree == n
        acc = {}
        one = self.field.one
        for (c, t), coeff in elem.terms.items():
            if len(c) + len(t) > self.max_deg:
                raise TruncationExceeded(
                    f"element of degree {len(c) + len(t)} exceeds "
                    f"max_deg={self.max_deg}"
                )
            if not self._is_chain(c, n):
                raise MalformedElement(f"{c} is not a {n}-chain")
            base = self.differential(n, c)
            for (c2, t2), k2 in base.terms.items():
                if t:
                    prod = normal_form(t2 + t, self.sys)
                else:
                    prod = FreePolynomial.from_word(t2, one)
                for w, kw in prod.terms.items():
                    pair = (c2, w)
                    s = acc.get(pair, 0) + coeff * k2 * kw
                    if s:
                        acc[pair] = s
                    else:
                        acc.pop(pair, None)
        return TensorElement(n - 1, acc)

    def split(self, n, omega):
        """The splitting map i_n: a preimage of omega under d_n.

        omega must lie in the kernel of the previous differential; the
        preimage is accumulated by leading-term elimination.
        """
        assert omega.degree == n - 1
        if n == 0:
            if self.augmentation_value(omega):
                raise NotInKernel("augmentation does not vanish")
        else:
            if not self.apply_d(n - 1, omega).is_zero():
                raise NotInKernel(f"d_{n - 1} image is nonzero")
        result = TensorElement(n, {})
        work = omega
        prev_key = None
        while not work.is_zero():
            (c1, t1), coeff = work.leading()
            w = c1 + t1
            if prev_key is not None and word_key(w) >= prev_key:
                raise NonTerminating("leading word failed to decrease")
            prev_key = word_key(w)
            lifted = self.h(n, w)
            if lifted.is_zero():
                raise NonTerminating(
                    f"leading word admits no degree-{n} factorization"
                )
            image = self.apply_d(n, lifted)
            assert image.terms.get((c1, t1)) == self.field.one, (
                "head coefficient of the lifted differential must be one"
            )
            work = work - image.scaled(coeff)
            result = result + lifted.scaled(coeff)
        return result

    def fast_differential(self, n, chain, check_against_generic=True):
        """Batch h-projection of d(u (x) t): whole rounds, no term ordering.

        Each round projects every word of the remainder through h at once
        and subtracts the differentials of all the lifts in one step; a
        word with no chain splitting is carried forward until a later round
        cancels it. One round suffices exactly when clearing a head feeds
        nothing back into the remainder, which is the common case here; the
        extra rounds absorb the corrections when it does not hold. An
        unliftable leading word, or disagreement with the generic engine,
        raises ConditionViolated.
        """
        chain = tuple(chain)
        if n == 0:
            return self.differential(0, chain)
        if len(chain) > self.max_deg:
            raise TruncationExceeded(
                f"chain of length {len(chain)} exceeds max_deg={self.max_deg}"
            )
        head = self.h(n - 1, chain)
        if head.is_zero():
            raise MalformedElement(f"{chain} has no degree-{n - 1} splitting")
        acc = head
        work = self.apply_d(n - 1, head)
        while not work.is_zero():
            batch = TensorElement(n - 1, {})
            for idx, ((c2, t2), k) in enumerate(work.items_sorted()):
                lifted = self.h(n - 1, c2 + t2)
                if lifted.is_zero():
                    # the leading word of a kernel element always lifts;
                    # lower words may have to wait for a later cancellation
                    if idx == 0:
                        raise ConditionViolated(
                            f"leading remainder word admits no h-lift on "
                            f"{chain} in degree {n}"
                        )
                    continue
                batch = batch + lifted.scaled(k)
            acc = acc - batch
            work = work - self.apply_d(n - 1, batch)
        if check_against_generic and acc != self.differential(n, chain):
            raise ConditionViolated(
                f"fast differential disagrees with the generic engine "
                f"on {chain} in degree {n}"
            )
        return acc

    # -- verification -------------------------------------------------------

    def _basis_pairs(self, degree, cap):
        """All (chain, tail) basis pairs of one degree with concatenated
        length <= cap, sorted descending."""
        from .rewriting import irreducible_words

        if degree == -1:
            chains = [()]
        else:
            chains = list(self.chains(degree))
        pairs = []
        for c in chains:
            room = cap - len(c)
            if room < 0:
                continue
            for t in irreducible_words(self.sys, room):
                pairs.append((c, t))
        pairs.sort(key=lambda p: word_key(p[0] + p[1]), reverse=True)
        return pairs

    def _kernel_elements(self, degree, cap):
        """A basis of ker(d_degree) restricted to concatenated length <= cap."""
        cols = self._basis_pairs(degree, cap)
        if degree == -1:
            row_labels = [()]
            images = []
            for _, t in cols:
                v = self.eps.of_word(t)
                images.append({0: v} if v else {})
        else:
            row_index = {}
            row_labels = []
            images = []
            for c, t in cols:
                img = self.apply_d(degree, TensorElement(degree, {(c, t): self.field.one}))
                col = {}
                for pair, coeff in img.terms.items():
                    if pair not in row_index:
                        row_index[pair] = len(row_labels)
                        row_labels.append(pair)
                    col[row_index[pair]] = coeff
                images.append(col)
        mat = ExactMatrix(row_labels, cols, images, self.field)
        out = []
        for vec in mat.kernel_basis():
            out.append(
                TensorElement(degree, {cols[j]: c for j, c in vec.items()})
            )
        return out

    def verify_complex(self, max_n, max_deg=None):
        """d o d = 0 on every basis chain, plus truncated exactness.

        Exactness: every kernel element of the outgoing map in degrees
        -1..max_n-1, supported in concatenated length <= max_deg, must be
        hit by split, and the section property is verified by applying the
        differential to the result.
        """
        cap = self.max_deg if max_deg is None else min(max_deg, self.max_deg)
        report = VerifyReport()
        for n in range(0, max_n + 1):
            for c in self.chains(n):
                if len(c) > cap:
                    continue
                elem = self.differential(n, c)
                if n == 0:
                    bad = bool(self.augmentation_value(elem))
                else:
                    bad = not self.apply_d(n - 1, elem).is_zero()
                report.dd_checked += 1
                if bad:
                    report.dd_failures.append((n, c))
        for target in range(0, max_n + 1):
            for omega in self._kernel_elements(target - 1, cap):
                report.exactness_checked += 1
                try:
                    lifted = self.split(target, omega)
                except (NotInKernel, NonTerminating) as exc:
                    report.exactness_failures.append((target, str(exc)))
                    continue
                if self.apply_d(target, lifted) != omega:
                    report.exactness_failures.append(
                        (target, "split result is not a preimage")
                    )
        return report
