"""JSON formats for rings, ideals, elements and pseudomatrices.

Ring
    a preset name (``"Zsqrt10"``) or ``{"degree", "structure_constants", "labels"}``.
Element
    a coordinate list, optionally ending in a string ``"/q"`` for a positive
    integer denominator: ``[1, 2, "/3"]`` is ``(1 + 2 w) / 3``.
Ideal
    ``{"generators": [element, ...]}`` or ``{"basis": [[...], ...]}``, with an
    optional integer ``"denominator"``.
Pseudomatrix
    ``{"ring", "ideals" (optional, default unit ideals), "matrix"}``.
"""

import json

from .errors import QuotringError
from .ideals import FracIdeal, Ideal
from .numring import FieldElement, NumberRing, RingElement, preset
from .pseudo import PseudoMatrix, span_hash, span_zlattice


class FormatError(QuotringError, ValueError):
    """Malformed input document."""


def dumps(obj):
    """Indented JSON with sorted keys; lists of scalars stay on one line."""
    return _fmt(obj, 0) + "\n"


def _fmt(obj, level):
    pad = "  " * (level + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_fmt(obj[k], level + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + "  " * level + "}"
    if isinstance(obj, list) and any(isinstance(x, (list, dict)) for x in obj):
        items = [pad + _fmt(x, level + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * level + "]"
    return json.dumps(obj)


def parse_ring(spec):
    if isinstance(spec, str):
        return preset(spec)
    if isinstance(spec, dict):
        try:
            ring = NumberRing(spec["structure_constants"], spec.get("labels"))
        except KeyError as exc:
            raise FormatError(f"ring description lacks {exc}") from None
        if "degree" in spec and spec["degree"] != ring.degree:
            raise FormatError("degree does not match the structure constants")
        return ring
    raise FormatError("ring must be a preset name or an object")


def ring_to_json(ring):
    return ring.name if ring.name else ring.to_dict()


def parse_element(ring, lit):
    if isinstance(lit, int):
        return FieldElement(RingElement(ring, ring.scalar(lit)))
    if not isinstance(lit, list):
        raise FormatError(f"element literal must be a list, got {lit!r}")
    den = 1
    if lit and isinstance(lit[-1], str):
        tail = lit[-1]
        if not tail.startswith("/"):
            raise FormatError(f"bad denominator {tail!r}")
        try:
            den = int(tail[1:])
        except ValueError:
            raise FormatError(f"bad denominator {tail!r}") from None
        if den <= 0:
            raise FormatError("denominator must be positive")
        lit = lit[:-1]
    if len(lit) != ring.degree or not all(isinstance(c, int) for c in lit):
        raise FormatError(f"element needs {ring.degree} integer coordinates, got {lit!r}")
    return FieldElement(RingElement(ring, lit), den)


def element_to_json(x):
    out = list(x.num.coords)
    if x.den != 1:
        out.append(f"/{x.den}")
    return out


def parse_ideal(ring, lit):
    if not isinstance(lit, dict):
        raise FormatError("ideal literal must be an object")
    den = lit.get("denominator", 1)
    if not isinstance(den, int) or den <= 0:
        raise FormatError("ideal denominator must be a positive integer")
    if "generators" in lit:
        gens = [parse_element(ring, g) for g in lit["generators"]]
        if any(g.den != 1 for g in gens):
            raise FormatError("generators must be integral; use the ideal denominator")
        num = Ideal.from_generators(ring, [list(g.num.coords) for g in gens])
    elif "basis" in lit:
        rows = lit["basis"]
        if not all(isinstance(r, list) and len(r) == ring.degree for r in rows):
            raise FormatError("basis rows must be coordinate lists")
        num = Ideal.from_basis(ring, rows)
    else:
        raise FormatError("ideal literal needs 'generators' or 'basis'")
    return FracIdeal(num, den)


def ideal_to_json(a):
    a = FracIdeal.of(a)
    out = {"basis": [list(r) for r in a.num.basis]}
    if a.den != 1:
        out["denominator"] = a.den
    return out


def parse_pseudomatrix(doc, ring=None):
    if not isinstance(doc, dict):
        raise FormatError("pseudomatrix document must be an object")
    if ring is None:
        if "ring" not in doc:
            raise FormatError("no ring given")
        ring = parse_ring(doc["ring"])
    matrix = doc.get("matrix")
    if not isinstance(matrix, list) or not matrix or not all(isinstance(r, list) for r in matrix):
        raise FormatError("matrix must be a non-empty list of rows")
    entries = [[parse_element(ring, x) for x in row] for row in matrix]
    if "ideals" in doc:
        ideals = [parse_ideal(ring, a) for a in doc["ideals"]]
    else:
        ideals = [Ideal.unit(ring)] * len(entries)
    try:
        return PseudoMatrix(ring, ideals, entries)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def pseudomatrix_to_json(P):
    return {
        "ring": ring_to_json(P.ring),
        "ideals": [ideal_to_json(a) for a in P.ideals],
        "matrix": [[element_to_json(x) for x in row] for row in P.matrix],
    }


def pseudo_hnf_to_json(H, seed=None):
    """Output document: the pseudo-HNF plus a certificate block."""
    doc = pseudomatrix_to_json(H.as_pseudomatrix())
    cert = {
        "modulus": ideal_to_json(H.modulus),
        "split": {k: str(v) for k, v in sorted(H.split.items())},
        "span_hash": span_hash(span_zlattice(H.as_pseudomatrix())),
    }
    if seed is not None:
        cert["seed"] = seed
    doc["certificate"] = cert
    return doc
