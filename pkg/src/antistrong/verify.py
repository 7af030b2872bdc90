"""Independent certificate verification.

Everything here re-checks claims from first principles (union-find
predicates, trail replay, brute-force path search) and never calls the
producing algorithms.  Semantic failures return False; structural
problems with the JSON raise SchemaMismatch.
"""

from __future__ import annotations

from typing import Any, Literal, Mapping, Optional

from pydantic import BaseModel, ValidationError

from .analysis import TrailWitness, check_trail, is_antistrong
from .errors import InvalidInput, NotAPartition, SchemaMismatch
from .graphs import DSU, Digraph, UGraph
from .hardness import exact_antidirected_path
from .instances import Instance, instance_hash
from .matroids import cycle_matroid_indep, even_bicircular_indep
from .orientation import Detachment, PartitionCertificate
from .orientation import detachment_is_good as _detachment_is_good
from .orientation import verify_certificate as _verify_partition
from .schemas import SCHEMA, CertificateEnvelope


class _OrientationPayload(BaseModel):
    mode: Literal["antistrong", "anticonnected"] = "antistrong"
    arcs: list[tuple[int, int]]


class _PartitionPayload(BaseModel):
    parts: list[list[int]]


class _TrailPayload(BaseModel):
    mode: Literal["forward-trail", "antipath"] = "forward-trail"
    x: int
    y: int
    arcs: list[int]
    forward: list[bool]


class _DecompositionPayload(BaseModel):
    feasible: bool
    black: Optional[list[int]] = None
    red: Optional[list[int]] = None
    deficiency: Optional[list[int]] = None


class _PackPayload(BaseModel):
    antistrong_classes: list[list[int]]
    connected_classes: list[list[int]] = []
    leftover: list[int]


class _AugmentationPayload(BaseModel):
    new_arcs: list[tuple[int, int]]
    classes: Optional[list[list[int]]] = None


class _DetachmentPayload(BaseModel):
    edges: list[tuple[int, int]]


def _greedy_rank(oracle, elements) -> int:
    picked: list[int] = []
    for e in sorted(elements):
        if oracle.indep(picked + [e]):
            picked.append(e)
    return len(picked)


def _verify_orientation(g: Instance, payload: _OrientationPayload) -> bool:
    if not isinstance(g, UGraph):
        return False
    if len(payload.arcs) != len(g.edges):
        return False
    for (u, v), (a, b) in zip(g.edges, payload.arcs):
        if {a, b} != {u, v}:
            return False
    try:
        d = Digraph(g.n, tuple(payload.arcs))
    except InvalidInput:
        return False
    if payload.mode == "antistrong":
        return is_antistrong(d)
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if exact_antidirected_path(d, x, y) is None:
                return False
    return True


def _verify_partition_cert(g: Instance, payload: _PartitionPayload) -> bool:
    if not isinstance(g, UGraph):
        return False
    cert = PartitionCertificate(tuple(frozenset(p) for p in payload.parts))
    try:
        return _verify_partition(g, cert)
    except NotAPartition:
        return False


def _verify_trail(d: Instance, payload: _TrailPayload) -> bool:
    if not isinstance(d, Digraph):
        return False
    w = TrailWitness(
        payload.x, payload.y, tuple(payload.arcs), tuple(payload.forward)
    )
    if payload.mode == "forward-trail":
        return check_trail(d, w, require_forward_ends=True)
    if not check_trail(d, w):
        return False
    seq = w.vertices(d)
    return len(set(seq)) == len(seq)


def _verify_decomposition(g: Instance, payload: _DecompositionPayload) -> bool:
    if not isinstance(g, UGraph):
        return False
    m = len(g.edges)
    if payload.feasible:
        if payload.black is None or payload.red is None:
            return False
        black, red = set(payload.black), set(payload.red)
        if black & red or black | red != set(range(m)):
            return False
        return cycle_matroid_indep(g).indep(black) and even_bicircular_indep(
            g
        ).indep(red)
    if not payload.deficiency:
        return False
    fset = sorted(set(payload.deficiency))
    if any(not 0 <= i < m for i in fset):
        return False
    # the subset is a valid witness iff it beats both ranks together
    r1 = _greedy_rank(cycle_matroid_indep(g), fset)
    r2 = _greedy_rank(even_bicircular_indep(g), fset)
    return r1 + r2 < len(fset)


def _spans_connected(d: Digraph, arc_ids) -> bool:
    dsu = DSU(d.n)
    merged = 0
    for i in arc_ids:
        if dsu.union(*d.arcs[i]):
            merged += 1
    return merged == d.n - 1


def _verify_pack(d: Instance, payload: _PackPayload) -> bool:
    if not isinstance(d, Digraph):
        return False
    m = len(d.arcs)
    groups = (
        list(payload.antistrong_classes)
        + list(payload.connected_classes)
        + [payload.leftover]
    )
    seen: set[int] = set()
    for grp in groups:
        gs = set(grp)
        if len(gs) != len(grp) or any(not 0 <= i < m for i in gs):
            return False
        if gs & seen:
            return False
        seen |= gs
    if seen != set(range(m)):
        return False
    for cls in payload.antistrong_classes:
        sub = Digraph(d.n, tuple(d.arcs[i] for i in sorted(cls)))
        if not is_antistrong(sub):
            return False
    return all(
        _spans_connected(d, cls) for cls in payload.connected_classes
    )


def _verify_augmentation(d: Instance, payload: _AugmentationPayload) -> bool:
    if not isinstance(d, Digraph):
        return False
    try:
        augmented = d.with_arcs(payload.new_arcs)
    except InvalidInput:
        return False
    if payload.classes is None:
        return is_antistrong(augmented)
    m = len(augmented.arcs)
    seen: set[int] = set()
    for cls in payload.classes:
        cs = set(cls)
        if len(cs) != len(cls) or any(not 0 <= i < m for i in cs):
            return False
        if cs & seen:
            return False
        seen |= cs
        sub = Digraph(d.n, tuple(augmented.arcs[i] for i in sorted(cs)))
        if not is_antistrong(sub):
            return False
    return True


def _verify_detachment(g: Instance, payload: _DetachmentPayload) -> bool:
    if not isinstance(g, UGraph):
        return False
    return _detachment_is_good(g, Detachment(g.n, tuple(payload.edges)))


_PAYLOADS = {
    "orientation": (_OrientationPayload, _verify_orientation),
    "partition-certificate": (_PartitionPayload, _verify_partition_cert),
    "trail": (_TrailPayload, _verify_trail),
    "decomposition": (_DecompositionPayload, _verify_decomposition),
    "pack": (_PackPayload, _verify_pack),
    "augmentation": (_AugmentationPayload, _verify_augmentation),
    "detachment": (_DetachmentPayload, _verify_detachment),
}


def verify_certificate_json(instance: Instance, cert: Mapping[str, Any]) -> bool:
    """Re-verify a certificate against an instance.

    Raises SchemaMismatch for structurally invalid JSON (bad envelope,
    wrong version, malformed payload); returns False for certificates
    that are well-formed but wrong (including input-hash mismatches).
    """
    try:
        env = CertificateEnvelope.model_validate(dict(cert))
    except (ValidationError, TypeError) as exc:
        raise SchemaMismatch(f"bad certificate envelope: {exc}") from exc
    if env.schema_version != SCHEMA:
        raise SchemaMismatch(f"unsupported schema {env.schema_version!r}")
    model, checker = _PAYLOADS[env.kind]
    try:
        payload = model.model_validate(env.payload)
    except ValidationError as exc:
        raise SchemaMismatch(f"bad {env.kind} payload: {exc}") from exc
    if env.input_sha256 != instance_hash(instance):
        return False
    return checker(instance, payload)
