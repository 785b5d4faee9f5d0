"""Verification report records and their serialization.

Big integers are rendered as decimal strings in both output formats so
downstream tooling never has to parse thousand-digit numerics.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class IdentityReport:
    """One exact (non-modular) verification outcome."""

    statement: str
    params: dict = field(default_factory=dict)
    lhs: int = 0
    rhs: int = 0

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass(frozen=True)
class CongruenceReport:
    """One modular (or divisibility) verification outcome.

    modulus None means the two sides were compared as exact integers.
    witness carries the quotient for divisibility statements.
    A skipped_reason marks an out-of-hypothesis parameter; skipped
    reports are neither passes nor failures.
    """

    statement: str
    params: dict = field(default_factory=dict)
    modulus: int | None = None
    lhs: int = 0
    rhs: int = 0
    witness: int | None = None
    skipped_reason: str | None = None

    @property
    def skipped(self) -> bool:
        return self.skipped_reason is not None

    @property
    def passed(self) -> bool:
        return not self.skipped and self.lhs == self.rhs

    @property
    def verdict(self) -> str:
        if self.skipped:
            return "skipped"
        return "pass" if self.passed else "fail"


Report = IdentityReport | CongruenceReport

TSV_COLUMNS = (
    "statement",
    "params",
    "modulus",
    "lhs",
    "rhs",
    "verdict",
    "witness",
    "skipped_reason",
)


def _params_str(params: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in params.items())


def report_to_dict(r: Report) -> dict:
    d = {
        "statement": r.statement,
        "params": {k: str(v) for k, v in r.params.items()},
        "modulus": str(r.modulus) if getattr(r, "modulus", None) is not None else "exact",
        "lhs": str(r.lhs),
        "rhs": str(r.rhs),
        "verdict": r.verdict,
    }
    witness = getattr(r, "witness", None)
    if witness is not None:
        d["witness"] = str(witness)
    skipped = getattr(r, "skipped_reason", None)
    if skipped is not None:
        d["skipped_reason"] = skipped
    return d


def to_json_line(r: Report) -> str:
    return json.dumps(report_to_dict(r), sort_keys=True)


def to_tsv_line(r: Report) -> str:
    d = report_to_dict(r)
    return "\t".join(
        (
            d["statement"],
            _params_str(r.params),
            d["modulus"],
            d["lhs"],
            d["rhs"],
            d["verdict"],
            d.get("witness", ""),
            d.get("skipped_reason", ""),
        )
    )


def serialize(r: Report, fmt: str) -> str:
    if fmt == "json-lines":
        return to_json_line(r)
    if fmt == "tsv":
        return to_tsv_line(r)
    raise ValueError(f"unknown format {fmt!r}")
