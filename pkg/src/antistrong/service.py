"""HTTP service and the shared command dispatch the CLI embeds.

Every command is a pure function from a validated request body to a
CommandResponse; the FastAPI app and the in-process CLI both go through
run_command so behavior cannot drift between the two.
"""

from __future__ import annotations

import random
from typing import Any, Callable

from fastapi import FastAPI, HTTPException, Request
from pydantic import BaseModel, ValidationError

from . import analysis, augment, hardness, orientation, packing
from .errors import (
    AntistrongError,
    InvalidInput,
    NotAntistrong,
    OpenProblem,
)
from .graphs import Digraph, UGraph, bipartite_rep
from .instances import parse_instance, serialize_instance
from .schemas import (
    AnticonnectRequest,
    CommandResponse,
    GenRequest,
    InstanceRequest,
    KRequest,
    MixedPackRequest,
    OpenRequest,
    SolveAntipathRequest,
    TrailRequest,
    VerifyRequest,
    make_certificate,
)
from .verify import verify_certificate_json

OPEN_TOPICS = {
    "augment-k-arc-antistrong": (
        "Minimum augmentation to k-arc-antistrong connectivity: no"
        " polynomial algorithm is known; the problem is open."
    ),
    "disjoint-antistrong-strong": (
        "Deciding whether a digraph has arc-disjoint spanning subdigraphs,"
        " one antistrong and one strongly connected, is an open question."
    ),
    "disjoint-antistrong-2ec": (
        "Deciding whether a digraph has arc-disjoint spanning subdigraphs,"
        " one antistrong and one with 2-edge-connected underlying graph,"
        " is an open question."
    ),
    "strong-and-antistrong-orientation": (
        "No polynomial algorithm is known for deciding whether a graph has"
        " an orientation that is simultaneously strong and antistrong."
    ),
    "strong-decomposition-conjecture": (
        "Conjecture: some fixed k makes every k-arc-strong digraph contain"
        " two arc-disjoint strong spanning subdigraphs. Unresolved."
    ),
    "antistrong-strong-decomposition-conjecture": (
        "Conjecture: some fixed k makes every digraph that is k-arc-strong"
        " and k-arc-antistrong contain two arc-disjoint strong spanning"
        " subdigraphs. Unresolved."
    ),
}


def _want_digraph(text: str) -> Digraph:
    obj = parse_instance(text)
    if not isinstance(obj, Digraph):
        raise InvalidInput("this command needs a 'digraph' instance")
    return obj


def _want_graph(text: str) -> UGraph:
    obj = parse_instance(text)
    if not isinstance(obj, UGraph):
        raise InvalidInput("this command needs a 'graph' or 'multigraph' instance")
    return obj


def _partition_negative(g: UGraph, cert: orientation.PartitionCertificate,
                        claim: str) -> CommandResponse:
    parts = [sorted(p) for p in cert.parts]
    e_cross, b_count = orientation.partition_stats(g, cert.parts)
    bound = len(cert.parts) - 1 + b_count
    return CommandResponse(
        status="negative",
        message=(
            f"{claim}: partition with e(Q)={e_cross} <"
            f" |Q|-1+b(Q)={bound}"
        ),
        certificate=make_certificate(
            "partition-certificate", g, {"parts": parts}
        ),
        data={"e": e_cross, "bound": bound, "parts": len(parts)},
    )


def handle_check(req: InstanceRequest) -> CommandResponse:
    d = _want_digraph(req.instance)
    if analysis.is_antistrong(d):
        return CommandResponse(
            status="ok",
            message="antistrong: forward antidirected trails join every ordered pair",
            data={"n": d.n, "m": d.m},
        )
    comps = bipartite_rep(d).component_count()
    reason = (
        f"B(D) has {comps} components"
        if d.n >= 3
        else f"only {d.n} vertices (need 3); B(D) has {comps} components"
    )
    return CommandResponse(
        status="negative",
        message=f"not antistrong: {reason}",
        data={"components": comps},
    )


def handle_trail(req: TrailRequest) -> CommandResponse:
    d = _want_digraph(req.instance)
    try:
        w = analysis.forward_trail(d, req.x, req.y)
    except NotAntistrong as exc:
        return CommandResponse(status="negative", message=str(exc))
    payload = {
        "mode": "forward-trail",
        "x": w.x,
        "y": w.y,
        "arcs": list(w.arcs),
        "forward": list(w.forward),
    }
    return CommandResponse(
        status="ok",
        message=f"forward antidirected ({req.x},{req.y})-trail with {len(w.arcs)} arcs",
        certificate=make_certificate("trail", d, payload),
        data={"vertices": list(w.vertices(d))},
    )


def handle_kcheck(req: KRequest) -> CommandResponse:
    d = _want_digraph(req.instance)
    if analysis.k_arc_antistrong(d, req.k):
        return CommandResponse(
            status="ok",
            message=f"{req.k}-arc-antistrong",
            data={"k": req.k},
        )
    return CommandResponse(
        status="negative",
        message=(
            f"not {req.k}-arc-antistrong: some ordered pair has fewer than"
            f" {req.k} arc-disjoint forward trails"
        ),
        data={"k": req.k},
    )


def handle_augment(req: InstanceRequest) -> CommandResponse:
    d = _want_digraph(req.instance)
    res = augment.augment_antistrong(d)
    payload = {"new_arcs": [list(a) for a in res.new_arcs]}
    return CommandResponse(
        status="ok",
        message=f"antistrong after adding {len(res.new_arcs)} arcs",
        certificate=make_certificate("augmentation", d, payload),
        data={
            "components_before": res.components_before,
            "added": len(res.new_arcs),
        },
    )


def handle_augment_k(req: KRequest) -> CommandResponse:
    d = _want_digraph(req.instance)
    res = augment.augment_k_disjoint(d, req.k)
    if res is None:
        return CommandResponse(
            status="negative",
            message=(
                f"infeasible: no simple supergraph on {d.n} vertices contains"
                f" {req.k} arc-disjoint antistrong spanning subdigraphs"
            ),
        )
    payload = {
        "new_arcs": [list(a) for a in res.new_arcs],
        "classes": [sorted(c) for c in res.classes or ()],
    }
    return CommandResponse(
        status="ok",
        message=(
            f"{req.k} arc-disjoint antistrong spanning subdigraphs after"
            f" adding {len(res.new_arcs)} arcs"
        ),
        certificate=make_certificate("augmentation", d, payload),
        data={"added": len(res.new_arcs)},
    )


def handle_orient(req: InstanceRequest) -> CommandResponse:
    g = _want_graph(req.instance)
    out = orientation.antistrong_orientation(g)
    if isinstance(out, orientation.PartitionCertificate):
        return _partition_negative(g, out, "no antistrong orientation")
    payload = {"mode": "antistrong", "arcs": [list(a) for a in out.arcs]}
    return CommandResponse(
        status="ok",
        message="antistrong orientation found",
        certificate=make_certificate("orientation", g, payload),
        data={"n": g.n, "m": len(g.edges)},
    )


def _decomposition_response(g: UGraph, decomp, deficiency) -> CommandResponse:
    if decomp is not None:
        payload = {
            "feasible": True,
            "black": list(decomp.black),
            "red": list(decomp.red),
        }
        return CommandResponse(
            status="ok",
            message=(
                f"forest ({len(decomp.black)} edges) + odd pseudoforest"
                f" ({len(decomp.red)} edges)"
            ),
            certificate=make_certificate("decomposition", g, payload),
            data={"black": len(decomp.black), "red": len(decomp.red)},
        )
    payload = {"feasible": False, "deficiency": sorted(deficiency)}
    return CommandResponse(
        status="negative",
        message=(
            f"no forest + odd pseudoforest partition; {len(deficiency)}-edge"
            " witness subset attached"
        ),
        certificate=make_certificate("decomposition", g, payload),
        data={"deficiency": len(deficiency)},
    )


def handle_decompose(req: InstanceRequest) -> CommandResponse:
    g = _want_graph(req.instance)
    decomp, deficiency = orientation.decompose_forest_odd_pseudoforest(g)
    return _decomposition_response(g, decomp, deficiency)


def handle_decompose_appendix(req: InstanceRequest) -> CommandResponse:
    g = _want_graph(req.instance)
    decomp = orientation.appendix_decomposition(g)
    if decomp is not None:
        return _decomposition_response(g, decomp, None)
    # infeasible: the matroid pipeline supplies the witness subset
    other, deficiency = orientation.decompose_forest_odd_pseudoforest(g)
    assert other is None, "pipelines disagree on feasibility"
    return _decomposition_response(g, None, deficiency)


def handle_detach(req: InstanceRequest) -> CommandResponse:
    g = _want_graph(req.instance)
    out = orientation.good_2_detachment(g)
    if isinstance(out, orientation.PartitionCertificate):
        return _partition_negative(g, out, "no good 2-detachment")
    payload = {"edges": [list(e) for e in out.edges]}
    return CommandResponse(
        status="ok",
        message="good 2-detachment found (connected, bipartite on the copy sides)",
        certificate=make_certificate("detachment", g, payload),
        data={"n": g.n},
    )


def _pack_response(d: Digraph, res, negative_msg: str) -> CommandResponse:
    if res is None:
        return CommandResponse(status="negative", message=negative_msg)
    payload = {
        "antistrong_classes": [sorted(c) for c in res.antistrong_classes],
        "connected_classes": [sorted(c) for c in res.connected_classes],
        "leftover": sorted(res.leftover),
    }
    k = len(res.antistrong_classes)
    ell = len(res.connected_classes)
    return CommandResponse(
        status="ok",
        message=(
            f"packed {k} antistrong + {ell} connected-underlying spanning"
            " subdigraphs"
        ),
        certificate=make_certificate("pack", d, payload),
        data={"k": k, "ell": ell, "leftover": len(res.leftover)},
    )


def handle_pack(req: KRequest) -> CommandResponse:
    d = _want_digraph(req.instance)
    res = packing.pack_antistrong(d, req.k)
    return _pack_response(
        d,
        res,
        f"no {req.k} arc-disjoint antistrong spanning subdigraphs",
    )


def handle_nonsep(req: InstanceRequest) -> CommandResponse:
    d = _want_digraph(req.instance)
    res = packing.nonseparating_antistrong(d)
    if res is None:
        return CommandResponse(
            status="negative",
            message=(
                "no spanning antistrong subdigraph with connected remainder"
            ),
        )
    rest = frozenset(range(d.m)) - res.antistrong_arcs - res.spanning_forest
    payload = {
        "antistrong_classes": [sorted(res.antistrong_arcs)],
        "connected_classes": [sorted(res.spanning_forest)],
        "leftover": sorted(rest),
    }
    return CommandResponse(
        status="ok",
        message="non-separating antistrong spanning subdigraph found",
        certificate=make_certificate("pack", d, payload),
        data={"h_size": len(res.antistrong_arcs)},
    )


def handle_mixed_pack(req: MixedPackRequest) -> CommandResponse:
    d = _want_digraph(req.instance)
    res = packing.mixed_pack(d, req.k, req.ell)
    return _pack_response(
        d,
        res,
        (
            f"no {req.k} antistrong + {req.ell} connected-underlying"
            " arc-disjoint spanning subdigraphs"
        ),
    )


def handle_anticonnect(req: AnticonnectRequest) -> CommandResponse:
    g = _want_graph(req.instance)
    out = orientation.anticonnected_orientation(g, req.root)
    payload = {"mode": "anticonnected", "arcs": [list(a) for a in out.arcs]}
    return CommandResponse(
        status="ok",
        message="anticonnected orientation found",
        certificate=make_certificate("orientation", g, payload),
        data={"root": req.root},
    )


def _random_formula(variables: int, clauses: int, seed: int) -> hardness.SatFormula:
    if variables < 3:
        raise InvalidInput("random formulas need at least 3 variables")
    rng = random.Random(seed)
    out = []
    for _ in range(clauses):
        vs = rng.sample(range(variables), 3)
        out.append(tuple((v, rng.random() < 0.5) for v in vs))
    return hardness.SatFormula(variables, tuple(out))


def handle_gen(req: GenRequest) -> CommandResponse:
    if req.kind == "kstrong":
        if req.k is None:
            raise InvalidInput("gen kstrong needs k")
        d = hardness.gen_kstrong_nonantistrong(req.k)
        return CommandResponse(
            status="ok",
            message=f"{req.k}-strong non-antistrong digraph",
            data={"instance": serialize_instance(d)},
        )
    if req.kind == "kkk-k4":
        if req.k is None:
            raise InvalidInput("gen kkk-k4 needs k")
        g = hardness.gen_kkk_k4(req.k)
        return CommandResponse(
            status="ok",
            message="complete bipartite graph glued to a 4-clique",
            data={"instance": serialize_instance(g)},
        )
    if req.cnf is not None:
        formula = hardness.parse_dimacs(req.cnf)
    else:
        formula = _random_formula(req.variables, req.clauses, req.seed)
    inst = hardness.gen_avoid_pairs(formula)
    d, s, t = hardness.gen_antipath_instance(inst)
    return CommandResponse(
        status="ok",
        message=(
            f"reduction: {formula.variables} variables,"
            f" {len(formula.clauses)} clauses -> antidirected-path instance"
        ),
        data={
            "instance": serialize_instance(d),
            "s": s,
            "t": t,
            "avoid_pairs": {
                "n": inst.n,
                "edges": [list(e) for e in inst.edges],
                "x": inst.x,
                "y": inst.y,
                "pairs": [list(p) for p in inst.pairs],
            },
        },
    )


def handle_solve_antipath(req: SolveAntipathRequest) -> CommandResponse:
    d = _want_digraph(req.instance)
    w = hardness.exact_antidirected_path(d, req.x, req.y, req.node_budget)
    if w is None:
        return CommandResponse(
            status="negative",
            message=f"no antidirected ({req.x},{req.y})-path",
        )
    payload = {
        "mode": "antipath",
        "x": w.x,
        "y": w.y,
        "arcs": list(w.arcs),
        "forward": list(w.forward),
    }
    return CommandResponse(
        status="ok",
        message=f"antidirected path with {len(w.arcs)} arcs",
        certificate=make_certificate("trail", d, payload),
        data={"vertices": list(w.vertices(d))},
    )


def handle_verify(req: VerifyRequest) -> CommandResponse:
    obj = parse_instance(req.instance)
    ok = verify_certificate_json(obj, req.certificate)
    if ok:
        return CommandResponse(status="ok", message="certificate verifies")
    return CommandResponse(
        status="negative", message="certificate rejected"
    )


def handle_open(req: OpenRequest) -> CommandResponse:
    if req.topic not in OPEN_TOPICS:
        known = ", ".join(sorted(OPEN_TOPICS))
        raise InvalidInput(f"unknown open topic {req.topic!r}; known: {known}")
    return CommandResponse(status="open", message=OPEN_TOPICS[req.topic])


COMMANDS: dict[str, tuple[type[BaseModel], Callable[..., CommandResponse]]] = {
    "check": (InstanceRequest, handle_check),
    "trail": (TrailRequest, handle_trail),
    "kcheck": (KRequest, handle_kcheck),
    "augment": (InstanceRequest, handle_augment),
    "augment-k": (KRequest, handle_augment_k),
    "orient": (InstanceRequest, handle_orient),
    "decompose": (InstanceRequest, handle_decompose),
    "decompose-appendix": (InstanceRequest, handle_decompose_appendix),
    "detach": (InstanceRequest, handle_detach),
    "pack": (KRequest, handle_pack),
    "nonsep": (InstanceRequest, handle_nonsep),
    "mixed-pack": (MixedPackRequest, handle_mixed_pack),
    "anticonnect": (AnticonnectRequest, handle_anticonnect),
    "gen": (GenRequest, handle_gen),
    "solve-antipath": (SolveAntipathRequest, handle_solve_antipath),
    "verify": (VerifyRequest, handle_verify),
    "open": (OpenRequest, handle_open),
}


def run_command(command: str, body: dict[str, Any]) -> CommandResponse:
    """Validate and execute; raises AntistrongError subclasses on bad
    input and pydantic ValidationError on malformed bodies."""
    if command not in COMMANDS:
        raise InvalidInput(f"unknown command {command!r}")
    model, handler = COMMANDS[command]
    req = model.model_validate(body)
    try:
        return handler(req)
    except OpenProblem as exc:
        return CommandResponse(status="open", message=str(exc))


def create_app():
    """FastAPI application exposing every command at POST /v1/<name>."""
    app = FastAPI(title="antistrong", version="1")

    @app.get("/v1/commands")
    def list_commands() -> dict[str, Any]:
        return {"commands": sorted(COMMANDS), "open_topics": sorted(OPEN_TOPICS)}

    @app.post("/v1/{command}", response_model=CommandResponse)
    async def invoke(command: str, request: Request) -> CommandResponse:
        try:
            body = await request.json()
        except Exception as exc:
            raise HTTPException(status_code=400, detail=f"bad JSON body: {exc}")
        if not isinstance(body, dict):
            raise HTTPException(status_code=400, detail="body must be an object")
        try:
            return run_command(command, body)
        except ValidationError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        except AntistrongError as exc:
            raise HTTPException(
                status_code=400,
                detail=f"{type(exc).__name__}: {exc}",
            )

    return app
