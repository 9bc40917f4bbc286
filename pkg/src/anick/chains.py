"""Recognition and enumeration of Anick n-prechains and n-chains over an
arbitrary finite obstruction set.

A word is an n-prechain when an interleaved family of obstruction
occurrences (a_1,b_1),...,(a_n,b_n) covers it:

    1 = a_1 < a_2 <= b_1 < a_3 <= b_2 < ... < a_n <= b_{n-1} < b_n = len,

with each segment word[a_j..b_j] an obstruction. It is an n-chain when in
addition every b_m is minimal: no shorter prefix of the word is an
m-prechain. With the b's pinned to their minima B_m, the interleaving
constraints on the a's decouple (a_m ranges over (B_{m-2}, B_{m-1}]
independently), which is what is_n_chain exploits.

Degrees -1 and 0 are the formal bottom (the empty word) and the single
generators.
"""

from functools import lru_cache

from .algebra import word_key


@lru_cache(maxsize=None)
def _two_letter_only(obs):
    return all(len(o) == 2 for o in obs)


def _levels(word, obs, n):
    """Forward reachability of prechain states (b_{m-1}, b_m), levels 1..n."""
    L = len(word)
    first = {(1, b) for b in range(1, L + 1) if word[:b] in obs}
    levels = [first]
    for _ in range(n - 1):
        nxt = set()
        for pb, b in levels[-1]:
            for a in range(pb + 1, b + 1):
                for bp in range(b + 1, L + 1):
                    if word[a - 1:bp] in obs:
                        nxt.add((b, bp))
        levels.append(nxt)
    return levels


def _extensions(word, obs, state):
    L = len(word)
    pb, b = state
    for a in range(pb + 1, b + 1):
        for bp in range(b + 1, L + 1):
            if word[a - 1:bp] in obs:
                yield a, (b, bp)


def is_n_prechain(word, n, obs):
    """(flag, witness): witness is the index family [(a_1,b_1),...] with the
    smallest b_j chosen first among families that still complete."""
    word = tuple(word)
    assert n >= 1, "prechains are defined for n >= 1"
    L = len(word)
    levels = _levels(word, obs, n)
    feasible = [set() for _ in range(n)]
    feasible[-1] = {s for s in levels[-1] if s[1] == L}
    if not feasible[-1]:
        return False, None
    for m in range(n - 2, -1, -1):
        for s in levels[m]:
            if any(t in feasible[m + 1] for _, t in _extensions(word, obs, s)):
                feasible[m].add(s)
    if not feasible[0]:
        return False, None
    cur = min(feasible[0], key=lambda s: s[1])
    witness = [(1, cur[1])]
    for m in range(1, n):
        a, cur = min(
            ((a, t) for a, t in _extensions(word, obs, cur) if t in feasible[m]),
            key=lambda at: (at[1][1], at[0]),
        )
        witness.append((a, cur[1]))
    return True, witness


def chain_prefix_end(word, n, obs):
    """End of the unique n-chain prefix of the word, or None.

    The prefix, when it exists, is word[:B_n]; uniqueness holds because the
    minimal ends B_m agree between the word and any of its chain prefixes.
    """
    word = tuple(word)
    if n == -1:
        return 0
    if n == 0:
        return 1 if word else None
    if _two_letter_only(obs):
        if len(word) < n + 1:
            return None
        if all(word[i:i + 2] in obs for i in range(n)):
            return n + 1
        return None
    levels = _levels(word, obs, n)
    mins = []
    for lv in levels:
        if not lv:
            return None
        mins.append(min(b for _, b in lv))
    bounds = [1] + mins
    for m in range(2, n + 1):
        lo, hi = bounds[m - 2], bounds[m - 1]
        if not any(
            word[a - 1:bounds[m]] in obs for a in range(lo + 1, hi + 1)
        ):
            return None
    return mins[-1]


def is_n_chain(word, n, obs):
    word = tuple(word)
    if n == -1:
        return len(word) == 0
    if n == 0:
        return len(word) == 1
    return chain_prefix_end(word, n, obs) == len(word)


class ChainSet:
    """The n-chains of one degree, sorted by the word order."""

    __slots__ = ("n", "chains", "_members")

    def __init__(self, n, chains):
        assert n >= -1
        self.n = n
        self.chains = tuple(sorted(chains, key=word_key))
        self._members = frozenset(self.chains)

    def __len__(self):
        return len(self.chains)

    def __iter__(self):
        return iter(self.chains)

    def __contains__(self, word):
        return tuple(word) in self._members

    def __repr__(self):
        return f"ChainSet(n={self.n}, size={len(self.chains)})"


def enumerate_chains(n, obs, sys, prev=None):
    """All n-chains, by right extension of (n-1)-chains.

    Every n-chain is its (n-1)-chain prefix u = w[:B_{n-1}] extended by the
    tail of one final obstruction starting inside u past B_{n-2}; candidates
    built that way are filtered through is_n_chain, so condition 3 is
    checked, never assumed. The splitting at B_{n-1} is unique, hence no
    candidate is produced from two different prefixes.
    """
    if n == -1:
        return ChainSet(-1, [()])
    if n == 0:
        return ChainSet(0, [(g.order_key,) for g in sys.alphabet])
    if n == 1:
        # reduced systems: no obstruction prefixes another, so every
        # obstruction is a 1-chain
        return ChainSet(1, obs)
    if prev is None:
        prev = enumerate_chains(n - 1, obs, sys)
    assert prev.n == n - 1
    found = set()
    for u in prev:
        bound = chain_prefix_end(u, n - 2, obs) if n >= 2 else 0
        for o in obs:
            for k in range(1, min(len(u), len(o) - 1) + 1):
                if len(u) - k + 1 <= bound:
                    break
                if u[len(u) - k:] == o[:k]:
                    cand = u + o[k:]
                    if cand not in found and is_n_chain(cand, n, obs):
                        found.add(cand)
    return ChainSet(n, found)
