"""Pydantic models for the service API and the JSON certificate format.

Certificates are enveloped with a schema version and the sha256 of the
canonical serialization of the instance they talk about, so a verifier
can refuse mismatched inputs without guessing.
"""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from .instances import Instance, instance_hash

SCHEMA = "antistrong.certificates/1"

CertificateKind = Literal[
    "orientation",
    "partition-certificate",
    "trail",
    "decomposition",
    "pack",
    "augmentation",
    "detachment",
]


class CertificateEnvelope(BaseModel):
    model_config = ConfigDict(extra="forbid")

    schema_version: str
    kind: CertificateKind
    input_sha256: str
    payload: dict[str, Any]


def make_certificate(
    kind: CertificateKind, instance: Instance, payload: dict[str, Any]
) -> CertificateEnvelope:
    return CertificateEnvelope(
        schema_version=SCHEMA,
        kind=kind,
        input_sha256=instance_hash(instance),
        payload=payload,
    )


class CommandResponse(BaseModel):
    status: Literal["ok", "negative", "open"]
    message: str
    certificate: Optional[CertificateEnvelope] = None
    data: dict[str, Any] = Field(default_factory=dict)


# --------------------------------------------------------------------------
# per-command request bodies


class InstanceRequest(BaseModel):
    instance: str


class TrailRequest(InstanceRequest):
    x: int
    y: int


class KRequest(InstanceRequest):
    k: int


class MixedPackRequest(InstanceRequest):
    k: int
    ell: int


class AnticonnectRequest(InstanceRequest):
    root: int = 0


class SolveAntipathRequest(InstanceRequest):
    x: int
    y: int
    node_budget: int = 2_000_000


class GenRequest(BaseModel):
    kind: Literal["sat-reduction", "kstrong", "kkk-k4"]
    k: Optional[int] = None
    cnf: Optional[str] = None
    variables: int = 3
    clauses: int = 4
    seed: int = 0


class VerifyRequest(BaseModel):
    instance: str
    certificate: dict[str, Any]


class OpenRequest(BaseModel):
    topic: str
