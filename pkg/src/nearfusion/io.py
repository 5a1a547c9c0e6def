"""Reading and writing rings, premetric groups and premodular data as JSON."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .fusion.catalog import UnknownName, catalog_get
from .fusion.ring import FusionRing, MalformedTensor, VerificationReport, verify_axioms
from .premetric import PreMetricGroup
from .premodular import PremodularDatum, make_datum
from .scalars import QuadraticValue, RationalAngle


class ParseError(ValueError):
    def __init__(self, message: str, source: str = "", field: str = "", line: int | None = None):
        where = source
        if line is not None:
            where += f":{line}"
        if field:
            where += f" [{field}]"
        super().__init__(f"{where}: {message}" if where else message)
        self.source, self.field, self.line = source, field, line


class AxiomError(ParseError):
    def __init__(self, report: VerificationReport, source: str = ""):
        first = report.violations[0]
        super().__init__(f"ring fails the fusion axioms: {first}", source, field="N")
        self.report = report


def _load_json(path) -> tuple[dict, str]:
    src = str(path)
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", src) from exc
    try:
        return json.loads(text), src
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, src, line=exc.lineno) from exc


def ring_to_json(ring: FusionRing) -> dict:
    return {
        "name": ring.name,
        "rank": ring.rank,
        "labels": list(ring.labels),
        "dual": [int(i) for i in ring.dual],
        "N": ring.N.tolist(),
    }


def ring_from_json(data, source: str = "", validate: bool = True) -> FusionRing:
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", source)
    for key in ("rank", "N"):
        if key not in data:
            raise ParseError(f"missing field '{key}'", source, key)
    rank = data["rank"]
    if not isinstance(rank, int) or rank < 1:
        raise ParseError("rank must be a positive integer", source, "rank")
    labels = data.get("labels")
    if labels is not None:
        if len(labels) != rank or not all(isinstance(s, str) for s in labels):
            raise ParseError(f"labels must be {rank} strings", source, "labels")
        if len(set(labels)) != rank:
            dup = next(s for s in labels if labels.count(s) > 1)
            raise ParseError(f"duplicate label '{dup}'", source, "labels")
    dual = data.get("dual")
    if dual is not None:
        if len(dual) != rank or not all(isinstance(i, int) for i in dual):
            raise ParseError(f"dual must list {rank} indices", source, "dual")
        bad = [i for i in dual if not 0 <= i < rank]
        if bad:
            raise ParseError(f"dual index {bad[0]} out of range", source, "dual")
    try:
        N = np.array(data["N"], dtype=np.int64)
    except (ValueError, TypeError, OverflowError) as exc:
        raise ParseError(f"N is not an integer tensor: {exc}", source, "N") from exc
    if N.shape != (rank, rank, rank):
        raise ParseError(f"N has shape {N.shape}, expected {(rank,) * 3}", source, "N")
    try:
        ring = FusionRing(N, dual, labels, data.get("name", ""))
    except (MalformedTensor, ValueError) as exc:
        raise ParseError(str(exc), source, "dual") from exc
    if validate:
        report = verify_axioms(ring)
        if not report.ok:
            raise AxiomError(report, source)
    return ring


def parse_ring_file(path, validate: bool = True) -> FusionRing:
    data, src = _load_json(path)
    return ring_from_json(data, src, validate)


def save_ring(ring: FusionRing, path) -> None:
    Path(path).write_text(json.dumps(ring_to_json(ring), indent=1) + "\n")


def load_ring(spec: str, validate: bool = True) -> FusionRing:
    """A path to a ring file, or a catalog name/descriptor."""
    if Path(spec).is_file():
        return parse_ring_file(spec, validate)
    try:
        return catalog_get(spec)
    except UnknownName:
        raise ParseError(f"no such file or catalog entry '{spec}'") from None


def scalar_from_json(x, source: str = "", field: str = "") -> QuadraticValue:
    try:
        if isinstance(x, dict):
            return QuadraticValue.from_json(x)
        if isinstance(x, (int, str)):
            return QuadraticValue(Fraction(x))
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        raise ParseError(f"bad scalar {x!r}: {exc}", source, field) from exc
    raise ParseError(f"bad scalar {x!r}", source, field)


def datum_from_json(data, source: str = "", ring: FusionRing | None = None) -> PremodularDatum:
    for key in ("dims", "twists"):
        if key not in data:
            raise ParseError(f"missing field '{key}'", source, key)
    if ring is None:
        if "ring" not in data:
            raise ParseError("missing field 'ring'", source, "ring")
        ref = data["ring"]
        if isinstance(ref, dict):
            ring = ring_from_json(ref, source)
        else:
            base = Path(source).parent if source else Path(".")
            cand = base / ref
            ring = load_ring(str(cand) if cand.is_file() else ref)
    dims = [scalar_from_json(v, source, f"dims[{i}]") for i, v in enumerate(data["dims"])]
    try:
        twists = [RationalAngle(Fraction(str(t))) for t in data["twists"]]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad twist: {exc}", source, "twists") from exc
    return make_datum(ring, dims, twists)


def datum_to_json(datum: PremodularDatum) -> dict:
    return {
        "ring": ring_to_json(datum.ring),
        "dims": [d.to_json() for d in datum.dims],
        "twists": [t.to_json() for t in datum.twists],
    }


def parse_datum_file(path, ring: FusionRing | None = None) -> PremodularDatum:
    data, src = _load_json(path)
    return datum_from_json(data, src, ring)


def parse_premetric_file(path) -> PreMetricGroup:
    data, src = _load_json(path)
    for key in ("group", "q"):
        if key not in data:
            raise ParseError(f"missing field '{key}'", src, key)
    try:
        return PreMetricGroup.from_json(data)
    except (TypeError, KeyError) as exc:
        raise ParseError(str(exc), src, "q") from exc


def parse_element(text: str) -> tuple[int, ...]:
    """``"(1,0)"``, ``"1,0"`` or ``"1"``."""
    s = text.strip().strip("()")
    try:
        return tuple(int(t) for t in s.split(",") if t.strip())
    except ValueError:
        raise ParseError(f"bad group element '{text}'") from None
