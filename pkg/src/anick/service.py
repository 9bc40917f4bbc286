"""HTTP wrapper around the handlers.

One POST route per command, plus a health probe.  Errors in the request
content map to 400; verification failures discovered while computing map
to 409.  The response bodies are exactly the handler models, so a client
can rebuild the pydantic objects from the JSON.
"""

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from . import __version__, handlers
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

INPUT_ERRORS = (
    GraphDocumentError,
    InvalidGraph,
    InvalidRule,
    MalformedElement,
    TruncationExceeded,
    ZeroPolynomial,
    ValueError,
)
FAILURE_ERRORS = (
    ConditionViolated,
    FormulaMismatch,
    HomotopyFailure,
    NonTerminating,
    NotInKernel,
)

app = FastAPI(title="anick", version=__version__)


def _payload(exc):
    return {"error": type(exc).__name__, "message": str(exc)}


async def _input_error(request, exc):
    return JSONResponse(status_code=400, content=_payload(exc))


async def _failure_error(request, exc):
    return JSONResponse(status_code=409, content=_payload(exc))


for _cls in INPUT_ERRORS:
    app.add_exception_handler(_cls, _input_error)
for _cls in FAILURE_ERRORS:
    app.add_exception_handler(_cls, _failure_error)


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/gsb", response_model=handlers.GsbResponse)
def gsb(req: handlers.GsbRequest):
    return handlers.handle_gsb(req)


@app.post("/chains", response_model=handlers.ChainsResponse)
def chains(req: handlers.ChainsRequest):
    return handlers.handle_chains(req)


@app.post("/diff", response_model=handlers.DiffResponse)
def diff(req: handlers.DiffRequest):
    return handlers.handle_diff(req)


@app.post("/homology", response_model=handlers.HomologyResponse)
def homology(req: handlers.HomologyRequest):
    return handlers.handle_homology(req)


@app.post("/verify", response_model=handlers.VerifyResponse)
def verify(req: handlers.VerifyRequest):
    return handlers.handle_verify(req)


@app.post("/laurent", response_model=handlers.LaurentResponse)
def laurent(req: handlers.LaurentRequest):
    return handlers.handle_laurent(req)
