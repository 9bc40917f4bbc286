"""Command line client.

Thin layer over the handlers: parse flags, build a request model, run it
in-process (default) or POST it to a running service (--server), then
render the response as text or as the machine JSON form of the model.

Exit codes: 0 when every reported check passed, 1 when the computation
finished but a verification failed (unresolved composition, enumeration
mismatch, formula disagreement, failed homotopy), 2 for unusable input.
"""

import argparse
import os
import sys

from .errors import (
    ConditionViolated,
    FormulaMismatch,
    GraphDocumentError,
    HomotopyFailure,
    InvalidGraph,
    InvalidRule,
    MalformedElement,
    NonTerminating,
    NotInKernel,
    TruncationExceeded,
    ZeroPolynomial,
)
from . import handlers

INPUT_ERRORS = (
    GraphDocumentError,
    InvalidGraph,
    InvalidRule,
    MalformedElement,
    TruncationExceeded,
    ZeroPolynomial,
    ValueError,
    OSError,
)
FAILURE_ERRORS = (
    ConditionViolated,
    FormulaMismatch,
    HomotopyFailure,
    NonTerminating,
    NotInKernel,
)

LISTING_CAP = 100


class _RemoteFailure(Exception):
    """The service answered 409: a verification failed server-side."""


def _read_graph(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _add_common(p, needs_graph=True):
    if needs_graph:
        p.add_argument("graph", help="graph document path, or - for stdin")
    p.add_argument(
        "--field",
        default="rational",
        help="coefficient field: rational or p=<prime> (default rational)",
    )
    p.add_argument(
        "--output",
        choices=("text", "machine"),
        default="text",
        help="text report or machine-readable JSON",
    )
    p.add_argument(
        "--seed",
        type=int,
        default=None,
        help="accepted for interface stability; these commands are "
        "deterministic and ignore it",
    )
    p.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="POST the request to a running service instead of computing "
        "in-process",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="anick",
        description="Exact Anick resolutions for Leavitt path algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gsb", help="build the rewrite system, check overlaps")
    _add_common(p)

    p = sub.add_parser("chains", help="enumerate chains two ways, compare")
    _add_common(p)
    p.add_argument("--n", type=int, default=2, help="largest chain degree")

    p = sub.add_parser(
        "diff", help="print differentials three ways, compare"
    )
    _add_common(p)
    p.add_argument("--n", type=int, default=1, help="chain degree")
    p.add_argument(
        "--chain",
        default=None,
        help="single chain as space-separated generator names "
        "(default: every chain of the degree)",
    )

    p = sub.add_parser("homology", help="Tor dimensions by exact rank")
    _add_common(p)
    p.add_argument("--max-n", type=int, default=4, help="largest Tor degree")
    p.add_argument(
        "--max-deg", type=int, default=None, help="word length cap"
    )
    p.add_argument(
        "--augmentation",
        choices=("zero", "unit"),
        default="zero",
        help="augmentation sending generators to 0, or everything to 1 "
        "(unit requires a graph whose relations it kills)",
    )

    p = sub.add_parser("verify", help="run the whole battery of checks")
    _add_common(p)
    p.add_argument("--max-n", type=int, default=3, help="largest degree")
    p.add_argument(
        "--max-deg", type=int, default=12, help="word length cap"
    )
    p.add_argument(
        "--inject-corruption",
        action="store_true",
        help="zero out one rewrite rule first; the composition check "
        "must then fail (negative control)",
    )

    p = sub.add_parser(
        "laurent",
        help="resolution of the scalars for the single-loop graph under "
        "the all-ones augmentation",
    )
    _add_common(p, needs_graph=False)
    p.add_argument("--max-n", type=int, default=4, help="largest Tor degree")

    return parser


def _build_request(args):
    if args.command == "gsb":
        return handlers.GsbRequest(
            graph=_read_graph(args.graph), field=args.field
        )
    if args.command == "chains":
        return handlers.ChainsRequest(
            graph=_read_graph(args.graph), n=args.n, field=args.field
        )
    if args.command == "diff":
        return handlers.DiffRequest(
            graph=_read_graph(args.graph),
            n=args.n,
            chain=args.chain,
            field=args.field,
        )
    if args.command == "homology":
        return handlers.HomologyRequest(
            graph=_read_graph(args.graph),
            max_n=args.max_n,
            field=args.field,
            augmentation=args.augmentation,
            max_deg=args.max_deg,
        )
    if args.command == "verify":
        return handlers.VerifyRequest(
            graph=_read_graph(args.graph),
            max_n=args.max_n,
            max_deg=args.max_deg,
            field=args.field,
            corrupt=args.inject_corruption,
        )
    assert args.command == "laurent"
    return handlers.LaurentRequest(max_n=args.max_n, field=args.field)


COMMANDS = {
    "gsb": ("/gsb", handlers.handle_gsb, handlers.GsbResponse),
    "chains": ("/chains", handlers.handle_chains, handlers.ChainsResponse),
    "diff": ("/diff", handlers.handle_diff, handlers.DiffResponse),
    "homology": (
        "/homology",
        handlers.handle_homology,
        handlers.HomologyResponse,
    ),
    "verify": ("/verify", handlers.handle_verify, handlers.VerifyResponse),
    "laurent": (
        "/laurent",
        handlers.handle_laurent,
        handlers.LaurentResponse,
    ),
}


def _dispatch(args, req):
    path, handler, response_model = COMMANDS[args.command]
    if args.server is None:
        return handler(req)
    import httpx

    try:
        r = httpx.post(
            args.server.rstrip("/") + path,
            json=req.model_dump(),
            timeout=600.0,
        )
    except httpx.HTTPError as exc:
        raise ValueError(f"request to {args.server} failed: {exc}")
    if r.status_code == 200:
        return response_model.model_validate(r.json())
    try:
        message = r.json().get("message", r.text)
    except ValueError:
        message = r.text
    if r.status_code == 409:
        raise _RemoteFailure(message)
    raise ValueError(f"server returned {r.status_code}: {message}")


def _failed(command, resp):
    if command == "gsb":
        return not resp.compositions_ok
    if command == "chains":
        return not resp.match
    if command == "diff":
        return not resp.all_agree
    if command == "verify":
        return not resp.ok
    return False


def _ints(xs):
    return " ".join(str(x) for x in xs)


def _render_gsb(resp):
    lines = [f"rules: {resp.rule_count}"]
    lines.extend(f"  {r}" for r in resp.rules)
    if resp.compositions_ok:
        lines.append("compositions: ok")
    else:
        lines.append("compositions: FAILED")
        lines.extend(f"  {o}" for o in resp.unresolved)
    return lines


def _render_chains(resp):
    lines = []
    for m in range(0, resp.max_n + 1):
        lines.append(
            f"degree {m}: {resp.counts[m]} chain(s), "
            f"adjacency predicate {resp.predicate_counts[m]}"
        )
        listing = resp.chains[m]
        if len(listing) <= LISTING_CAP:
            lines.extend(f"  {c}" for c in listing)
        else:
            lines.append(f"  (listing of {len(listing)} chains suppressed)")
    lines.append(f"counts: {_ints(resp.counts)}")
    lines.append(
        "enumerations match" if resp.match else "enumerations MISMATCH"
    )
    return lines


def _render_diff(resp):
    lines = [f"d_{resp.n} on {len(resp.entries)} chain(s)"]
    for e in resp.entries:
        lines.append(f"chain {e.chain}:")
        lines.append(f"  generic: {e.generic}")
        lines.append(f"  closed:  {e.closed}")
        lines.append(f"  fast:    {e.fast}")
        if not e.agree:
            lines.append("  DISAGREE")
    lines.append("all agree" if resp.all_agree else "DISAGREEMENT found")
    return lines


def _render_homology(resp):
    lines = [
        f"field: {resp.field}",
        f"augmentation: {resp.augmentation}",
        f"chain counts: {_ints(resp.chain_counts)}",
        f"ranks: {_ints(resp.ranks)}",
    ]
    for n, d in enumerate(resp.dims):
        lines.append(f"dim Tor_{n} = {d}")
    lines.append(f"dims: {_ints(resp.dims)}")
    return lines


def _render_verify(resp):
    lines = []
    for c in resp.checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"{c.name}: {status} ({c.detail})")
    lines.append("verify: ok" if resp.ok else "verify: FAILED")
    return lines


def _render_laurent(resp):
    return [
        f"field: {resp.field}",
        f"chain counts: {_ints(resp.counts)}",
        f"ranks: {_ints(resp.ranks)}",
        f"dims: {_ints(resp.dims)}",
    ]


RENDERERS = {
    "gsb": _render_gsb,
    "chains": _render_chains,
    "diff": _render_diff,
    "homology": _render_homology,
    "verify": _render_verify,
    "laurent": _render_laurent,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        req = _build_request(args)
        resp = _dispatch(args, req)
    except FAILURE_ERRORS as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except _RemoteFailure as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.output == "machine":
            print(resp.model_dump_json(indent=2))
        else:
            for line in RENDERERS[args.command](resp):
                print(line)
    except BrokenPipeError:
        # downstream pager or head closed the pipe; not our failure
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
    return 1 if _failed(args.command, resp) else 0


if __name__ == "__main__":
    sys.exit(main())
