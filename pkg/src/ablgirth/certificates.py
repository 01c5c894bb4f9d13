"""Replayable certificate files for abelian-girth bounds.

Plain text, one ``key value`` per line, ``#`` comments ignored::

    abl 10
    kind walk
    lower 9
    start 0
    walk +0,+3,-1,...

``kind`` is one of ``walk`` (an edge-neutral closed NB walk), ``subgraph``
(a theta / figure-eight / barbell given by its edge ids), ``moore`` (the
walks ``a, b[, c]`` and the reduced word built from them) or ``none``
(infinite abelian girth).  Walks use the signed-edge-id format of
:func:`ablgirth.walks.format_darts`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .abelian import AblResult, SubgraphWitness, WalkWitness, has_finite_abelian_girth
from .girth import girth
from .graph import Multigraph, NotChiMinusOne, class_abelian_length, classify_edge_set
from .moore import MooreCertificate, replay
from .walks import Walk, WalkError, format_darts, is_edge_neutral, is_strongly_closed_nb, parse_darts

__all__ = [
    "Certificate",
    "CertificateError",
    "format_certificate",
    "parse_certificate",
    "verify_certificate",
    "write_certificate",
    "read_certificate_text",
    "certificate_from_result",
]

Witness = Union[SubgraphWitness, WalkWitness, MooreCertificate, None]


class CertificateError(ValueError):
    """Malformed certificate text."""


@dataclass(frozen=True)
class Certificate:
    value: float
    witness: Witness
    lower: int | None = None

    @property
    def kind(self) -> str:
        if self.witness is None:
            return "none"
        if isinstance(self.witness, MooreCertificate):
            return "moore"
        return self.witness.kind


def certificate_from_result(result: AblResult) -> Certificate:
    return Certificate(result.value, result.witness, result.lower_bound_used or None)


def format_certificate(cert: Certificate, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"abl {'inf' if cert.value == math.inf else int(cert.value)}")
    lines.append(f"kind {cert.kind}")
    if cert.lower is not None:
        lines.append(f"lower {cert.lower}")
    w = cert.witness
    if isinstance(w, SubgraphWitness):
        lines.append(f"class {w.cls.kind}")
        lines.append("edges " + " ".join(str(e) for e in sorted(w.edges)))
    elif isinstance(w, WalkWitness):
        lines.append(f"start {w.walk.start}")
        lines.append(f"walk {format_darts(w.walk.steps)}")
    elif isinstance(w, MooreCertificate):
        lines.append(f"base {w.base_vertex}")
        lines.append(f"meet {w.meeting_vertex}")
        lines.append(f"h {w.h}")
        for name, walk in zip("abc", w.walks):
            lines.append(f"{name} {format_darts(walk.steps)}")
        lines.append(f"ell {format_darts(w.ell_reduced.steps)}")
    return "\n".join(lines) + "\n"


def _fields(text: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition(" ")
        if key in out:
            raise CertificateError(f"line {lineno}: duplicate key {key!r}")
        out[key] = value.strip()
    return out


def _int(fields: dict[str, str], key: str) -> int:
    try:
        return int(fields[key])
    except KeyError:
        raise CertificateError(f"missing {key!r}") from None
    except ValueError:
        raise CertificateError(f"{key!r} is not an integer: {fields[key]!r}") from None


def parse_certificate(text: str, g: Multigraph) -> Certificate:
    """Parse against ``g``; walks that do not exist in ``g`` raise :class:`CertificateError`."""
    f = _fields(text)
    if "abl" not in f or "kind" not in f:
        raise CertificateError("certificate needs 'abl' and 'kind' lines")
    value = math.inf if f["abl"] == "inf" else _int(f, "abl")
    lower = _int(f, "lower") if "lower" in f else None
    kind = f["kind"]
    try:
        if kind == "none":
            return Certificate(value, None, lower)
        if kind == "subgraph":
            edges = frozenset(int(x) for x in f.get("edges", "").split())
            if any(not 0 <= e < g.edge_count for e in edges):
                raise CertificateError("edge id outside the graph")
            cls = classify_edge_set(g, edges)
            return Certificate(value, SubgraphWitness(int(value), edges, cls), lower)
        if kind == "walk":
            walk = Walk(g, parse_darts(f.get("walk", "")), _int(f, "start"))
            return Certificate(value, WalkWitness(int(value), walk), lower)
        if kind == "moore":
            base, meet, h = _int(f, "base"), _int(f, "meet"), _int(f, "h")
            walks = tuple(Walk(g, parse_darts(f[k]), base) for k in "abc" if k in f)
            if len(walks) not in (2, 3):
                raise CertificateError("moore certificate needs walks a, b and optionally c")
            ell = Walk(g, parse_darts(f.get("ell", "")), base)
            return Certificate(value, MooreCertificate(base, meet, h, walks, ell), lower)
    except (WalkError, ValueError) as exc:
        if isinstance(exc, CertificateError):
            raise
        raise CertificateError(str(exc)) from None
    raise CertificateError(f"unknown kind {kind!r}")


def verify_certificate(text: str, g: Multigraph) -> list[str]:
    """Replay a certificate against ``g`` without searching; returns the problems found."""
    try:
        cert = parse_certificate(text, g)
    except CertificateError as exc:
        return [f"unreadable certificate: {exc}"]
    problems = []
    w = cert.witness
    if w is None:
        if cert.value != math.inf:
            problems.append("finite value without a witness")
        elif has_finite_abelian_girth(g):
            problems.append("graph has a theta, figure-eight or barbell, so the abelian girth is finite")
        return problems
    if cert.value == math.inf:
        return ["infinite value with a witness"]
    if isinstance(w, SubgraphWitness):
        if isinstance(w.cls, NotChiMinusOne):
            problems.append("edges do not form a theta, figure-eight or barbell")
        elif class_abelian_length(w.cls) != cert.value:
            problems.append(f"abelian length {class_abelian_length(w.cls)} != claimed {cert.value}")
        declared = _fields(text).get("class")
        if declared is not None and declared != w.cls.kind:
            problems.append(f"declared class {declared} but edges form {w.cls.kind}")
    elif isinstance(w, WalkWitness):
        if not is_strongly_closed_nb(w.walk):
            problems.append("walk is not strongly closed and non-backtracking")
        if not is_edge_neutral(w.walk):
            problems.append("walk is not edge-neutral")
        if w.walk.length != cert.value:
            problems.append(f"walk length {w.walk.length} != claimed {cert.value}")
    else:
        problems.extend(replay(w, g))
        if w.bound != cert.value:
            problems.append(f"reduced walk length {w.bound} != claimed {cert.value}")
    if cert.lower is not None:
        gir = girth(g).value
        lower = 3 * gir + ((3 * gir) & 1) if gir != math.inf else math.inf
        if cert.lower > lower:
            problems.append(f"lower bound {cert.lower} exceeds 3*girth rounded to even ({lower})")
        elif cert.value < cert.lower:
            problems.append("value below the girth lower bound")
    return problems


def write_certificate(path: str | Path, cert: Certificate, comments=()) -> Path:
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_certificate(cert, comments))
    return path


def read_certificate_text(path: str | Path) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()
