"""Request and response models plus the pure handlers behind each command.

The HTTP service and the CLI both dispatch here; nothing in this module
touches the filesystem or the network, so every command is a function from
one pydantic model to another.
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field

from .algebra import VERTEX, FreePolynomial
from .errors import ConditionViolated, HomotopyFailure
from .fields import field_from_name
from .graphdoc import graph_from_text
from .homology import homotopy_check, laurent_complex, tor_dims
from .leavitt import (
    closed_form_differential,
    cancellation_sum,
    leavitt_gsb,
    predicate_chains,
)
from .resolution import Augmentation, ResolutionEngine
from .rewriting import RewriteRule, RewriteSystem, check_compositions


class GsbRequest(BaseModel):
    graph: str
    field: str = "rational"


class GsbResponse(BaseModel):
    rule_count: int
    rules: list[str]
    compositions_ok: bool
    unresolved: list[str]


class ChainsRequest(BaseModel):
    graph: str
    n: int = Field(default=2, ge=0)
    field: str = "rational"


class ChainsResponse(BaseModel):
    max_n: int
    counts: list[int]
    predicate_counts: list[int]
    match: bool
    chains: list[list[str]]


class DiffRequest(BaseModel):
    graph: str
    n: int = Field(default=1, ge=0)
    chain: Optional[str] = None
    field: str = "rational"


class DiffEntry(BaseModel):
    chain: str
    generic: str
    closed: str
    fast: str
    agree: bool


class DiffResponse(BaseModel):
    n: int
    entries: list[DiffEntry]
    all_agree: bool


class HomologyRequest(BaseModel):
    graph: str
    max_n: int = Field(default=4, ge=1)
    field: str = "rational"
    augmentation: Literal["zero", "unit"] = "zero"
    max_deg: Optional[int] = Field(default=None, ge=2)


class HomologyResponse(BaseModel):
    field: str
    augmentation: str
    max_n: int
    dims: list[int]
    chain_counts: list[int]
    ranks: list[int]


class VerifyRequest(BaseModel):
    graph: str
    max_n: int = Field(default=3, ge=1)
    max_deg: int = Field(default=12, ge=2)
    field: str = "rational"
    corrupt: bool = False


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    checks: list[CheckResult]
    ok: bool


class LaurentRequest(BaseModel):
    max_n: int = Field(default=4, ge=1)
    field: str = "rational"


class LaurentResponse(BaseModel):
    field: str
    max_n: int
    counts: list[int]
    dims: list[int]
    ranks: list[int]


def _system(req):
    g = graph_from_text(req.graph)
    field = field_from_name(req.field)
    return g, field, leavitt_gsb(g, field)


def handle_gsb(req: GsbRequest) -> GsbResponse:
    _, _, sys = _system(req)
    overlaps = check_compositions(sys)
    alph = sys.alphabet
    return GsbResponse(
        rule_count=len(sys.rules),
        rules=[r.to_str(alph) for r in sys.rules],
        compositions_ok=not overlaps,
        unresolved=[
            f"{alph.word_str(o.word)}: difference {o.difference.to_str(alph)}"
            for o in overlaps
        ],
    )


def handle_chains(req: ChainsRequest) -> ChainsResponse:
    g, field, sys = _system(req)
    eps = Augmentation.zero(sys.alphabet, field)
    engine = ResolutionEngine(sys, eps, max_deg=max(req.n + 1, 2))
    counts, predicate_counts, listing = [], [], []
    match = True
    for m in range(0, req.n + 1):
        generic = list(engine.chains(m))
        predicate = predicate_chains(m, g, sys.alphabet)
        counts.append(len(generic))
        predicate_counts.append(len(predicate))
        match = match and generic == predicate
        listing.append([sys.alphabet.word_str(c) for c in generic])
    return ChainsResponse(
        max_n=req.n,
        counts=counts,
        predicate_counts=predicate_counts,
        match=match,
        chains=listing,
    )


def handle_diff(req: DiffRequest) -> DiffResponse:
    g, field, sys = _system(req)
    eps = Augmentation.zero(sys.alphabet, field)
    engine = ResolutionEngine(sys, eps, max_deg=req.n + 2)
    alph = sys.alphabet
    if req.chain is not None:
        chains = [alph.word_of_names(req.chain.split())]
    else:
        chains = list(engine.chains(req.n))
    entries = []
    for c in chains:
        generic = engine.differential(req.n, c)
        closed = closed_form_differential(req.n, c, g, sys)
        try:
            fast = engine.fast_differential(req.n, c)
            fast_str = fast.to_str(alph)
            agree = closed == generic
        except ConditionViolated:
            fast_str = "disagrees"
            agree = False
        entries.append(
            DiffEntry(
                chain=alph.word_str(c),
                generic=generic.to_str(alph),
                closed=closed.to_str(alph),
                fast=fast_str,
                agree=agree,
            )
        )
    return DiffResponse(
        n=req.n,
        entries=entries,
        all_agree=all(e.agree for e in entries),
    )


def handle_homology(req: HomologyRequest) -> HomologyResponse:
    g, field, sys = _system(req)
    if req.augmentation == "zero":
        eps = Augmentation.zero(sys.alphabet, field)
    else:
        eps = Augmentation.unit(sys.alphabet, field)
        if not eps.is_algebra_map(sys):
            raise ValueError(
                "the unit augmentation does not kill every relation of this "
                "graph; it is only available for the single-vertex loop"
            )
    max_deg = req.max_deg if req.max_deg is not None else req.max_n + 2
    engine = ResolutionEngine(sys, eps, max_deg=max_deg)
    table = tor_dims(engine, req.max_n, graph=g)
    return HomologyResponse(
        field=field.name,
        augmentation=eps.name,
        max_n=req.max_n,
        dims=table.dims,
        chain_counts=[table.counts[m] for m in range(0, req.max_n + 1)],
        ranks=[table.ranks[m] for m in range(1, req.max_n + 1)],
    )


def _corrupted(sys, field):
    """Replace the first vertex-free rule's value with zero; this breaks a
    suffix-prefix overlap so the composition check must notice."""
    vertex_keys = {
        g.order_key for g in sys.alphabet if g.kind == VERTEX
    }
    target = None
    for r in sys.rules:
        if not r.rhs.is_zero() and not any(k in vertex_keys for k in r.lhs):
            target = r
            break
    if target is None:
        raise ValueError("no corruptible rule: the graph has no edges")
    rules = [
        RewriteRule(r.lhs, FreePolynomial()) if r is target else r
        for r in sys.rules
    ]
    return RewriteSystem(rules, sys.alphabet, field)


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    g, field, sys = _system(req)
    if req.corrupt:
        sys = _corrupted(sys, field)
    checks = []
    overlaps = check_compositions(sys)
    checks.append(
        CheckResult(
            name="compositions",
            passed=not overlaps,
            detail=(
                f"{len(sys.rules)} rules, {len(overlaps)} unresolved "
                f"overlap(s)"
            ),
        )
    )
    if overlaps:
        return VerifyResponse(checks=checks, ok=False)
    alph = sys.alphabet
    eps = Augmentation.zero(alph, field)
    engine = ResolutionEngine(sys, eps, max_deg=req.max_deg)

    bad_degrees = [
        m
        for m in range(0, req.max_n + 1)
        if list(engine.chains(m)) != predicate_chains(m, g, alph)
    ]
    checks.append(
        CheckResult(
            name="chain-equivalence",
            passed=not bad_degrees,
            detail=(
                f"generic and adjacency enumerations compared for degrees "
                f"0..{req.max_n}"
                + (f"; mismatch at {bad_degrees}" if bad_degrees else "")
            ),
        )
    )

    total, bad = 0, []
    for n in range(0, req.max_n + 1):
        for c in engine.chains(n):
            elem = engine.differential(n, c)
            if n == 0:
                vanished = not engine.augmentation_value(elem)
            else:
                vanished = engine.apply_d(n - 1, elem).is_zero()
            total += 1
            if not vanished:
                bad.append(f"{n}:{alph.word_str(c)}")
    checks.append(
        CheckResult(
            name="complex",
            passed=not bad,
            detail=f"d o d on {total} chains"
            + (f"; failed on {bad[:3]}" if bad else ""),
        )
    )

    bad = []
    for n in range(0, req.max_n + 1):
        for c in engine.chains(n):
            generic = engine.differential(n, c)
            if closed_form_differential(n, c, g, sys) != generic:
                bad.append(f"closed {n}:{alph.word_str(c)}")
                continue
            try:
                engine.fast_differential(n, c)
            except ConditionViolated:
                bad.append(f"fast {n}:{alph.word_str(c)}")
    checks.append(
        CheckResult(
            name="closed-form",
            passed=not bad,
            detail=f"closed and fast forms vs the engine on {total} chains"
            + (f"; failed on {bad[:3]}" if bad else ""),
        )
    )

    total2, bad = 0, []
    for n in range(2, req.max_n + 1):
        for c in engine.chains(n):
            total2 += 1
            if not cancellation_sum(n, c, g, sys).is_zero():
                bad.append(f"{n}:{alph.word_str(c)}")
    checks.append(
        CheckResult(
            name="cancellation-sums",
            passed=not bad,
            detail=f"double substitution sums on {total2} chains"
            + (f"; nonzero on {bad[:3]}" if bad else ""),
        )
    )

    bad = []
    for n in range(0, req.max_n):
        try:
            homotopy_check(engine, g, n)
        except HomotopyFailure as exc:
            bad.extend(f"{n}:{alph.word_str(c)}" for c in exc.failures[:3])
    checks.append(
        CheckResult(
            name="homotopy",
            passed=not bad,
            detail=f"contracting homotopy for degrees 0..{req.max_n - 1}"
            + (f"; failed on {bad[:3]}" if bad else ""),
        )
    )

    return VerifyResponse(checks=checks, ok=all(c.passed for c in checks))


def handle_laurent(req: LaurentRequest) -> LaurentResponse:
    field = field_from_name(req.field)
    table, _ = laurent_complex(req.max_n, field)
    return LaurentResponse(
        field=field.name,
        max_n=req.max_n,
        counts=[table.counts[m] for m in range(0, req.max_n + 1)],
        dims=table.dims,
        ranks=[table.ranks[m] for m in range(1, req.max_n + 1)],
    )
