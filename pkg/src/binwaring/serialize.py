"""JSON encoding of decompositions, certificates and rank results.

Rationals are strings ``"p/q"`` (``"p"`` when integral).  Complex scalars are
``{"re": ..., "im": ...}`` decimal strings carrying enough digits to round-trip
at the decomposition's recorded ``precision``.
"""

from __future__ import annotations

import json

import mpmath
from mpmath.libmp import repr_dps, to_str

from .algebra import BinaryForm, ComplexScalar, DiffOp, LinearForm, to_rational
from .apolarity import ApolarPair
from .decomposition import WaringDecomposition, WaringTerm
from .errors import InputError
from .waring import LowerBoundCertificate, RankResult


def _decimal(x, prec: int) -> str:
    if not isinstance(x, mpmath.mpf):
        with mpmath.workprec(prec):
            x = mpmath.mpf(x)
    return to_str(x._mpf_, repr_dps(prec))


def _parse_decimal(s: str, prec: int):
    # parse well above the recorded precision so re-printing reproduces ``s``
    with mpmath.workprec(max(prec, 4 * len(s)) + 64):
        return mpmath.mpf(s)


def scalar_to_json(x, prec: int):
    if isinstance(x, ComplexScalar):
        return {"re": _decimal(x.re, prec), "im": _decimal(x.im, prec)}
    return str(x)


def scalar_from_json(obj, prec: int):
    if isinstance(obj, dict):
        return ComplexScalar(_parse_decimal(obj["re"], prec), _parse_decimal(obj["im"], prec), prec)
    return to_rational(obj)


def decomposition_to_json(dec: WaringDecomposition) -> dict:
    prec = dec.precision or 0
    out = {
        "degree": dec.target.degree,
        "field": dec.field,
        "exact": dec.exact,
        "target": [str(c) for c in dec.target.coeffs],
        "terms": [
            {"alpha": scalar_to_json(t.alpha, prec), "form": [scalar_to_json(t.form.c0, prec), scalar_to_json(t.form.c1, prec)]}
            for t in dec.terms
        ],
        "residual": str(dec.residual) if dec.exact else _decimal(dec.residual, prec),
    }
    if not dec.exact:
        out["precision"] = prec
    return out


def decomposition_from_json(obj: dict) -> WaringDecomposition:
    try:
        d = obj["degree"]
        prec = obj.get("precision", 0)
        target = BinaryForm(d, tuple(to_rational(c) for c in obj["target"]))
        terms = tuple(
            WaringTerm(
                scalar_from_json(t["alpha"], prec),
                LinearForm(scalar_from_json(t["form"][0], prec), scalar_from_json(t["form"][1], prec)),
                d,
            )
            for t in obj["terms"]
        )
        if obj["exact"]:
            residual = to_rational(obj["residual"])
        else:
            residual = _parse_decimal(obj["residual"], prec)
        return WaringDecomposition(target, obj["field"], terms, bool(obj["exact"]), residual, prec or None)
    except (KeyError, TypeError, IndexError) as exc:
        raise InputError(f"malformed decomposition JSON: {exc}") from exc


def certificate_to_json(cert: LowerBoundCertificate) -> dict:
    return {"a": cert.a, "b": cert.b, "r": cert.r, "gap": [cert.gap_start, cert.gap_end]}


def certificate_from_json(obj: dict) -> LowerBoundCertificate:
    return LowerBoundCertificate(obj["a"], obj["b"], obj["r"], obj["gap"][0], obj["gap"][1])


def apolar_to_json(pair: ApolarPair) -> dict:
    return {
        "d1": pair.d1,
        "d2": pair.d2,
        "g1": [str(c) for c in pair.g1.coeffs],
        "g2": [str(c) for c in pair.g2.coeffs],
    }


def apolar_from_json(obj: dict) -> ApolarPair:
    return ApolarPair(
        DiffOp(obj["d1"], tuple(to_rational(c) for c in obj["g1"])),
        DiffOp(obj["d2"], tuple(to_rational(c) for c in obj["g2"])),
        obj["d1"],
        obj["d2"],
    )


def _evidence_to_json(item) -> dict:
    if isinstance(item, LowerBoundCertificate):
        return certificate_to_json(item)
    if isinstance(item, ApolarPair):
        return apolar_to_json(item)
    raise TypeError(f"cannot serialize evidence {item!r}")


def _evidence_from_json(obj: dict):
    return certificate_from_json(obj) if "gap" in obj else apolar_from_json(obj)


def rank_result_to_json(result: RankResult) -> dict:
    return {
        "rank": result.rank,
        "field": result.field,
        "witness": decomposition_to_json(result.witness),
        "evidence": [_evidence_to_json(e) for e in result.evidence],
        "note": result.note,
    }


def rank_result_from_json(obj: dict) -> RankResult:
    return RankResult(
        obj["rank"],
        obj["field"],
        decomposition_from_json(obj["witness"]),
        tuple(_evidence_from_json(e) for e in obj["evidence"]),
        obj.get("note", ""),
    )


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2)


def roundtrip(text: str, decode, encode) -> str:
    """``encode(decode(json.loads(text)))`` rendered with :func:`dumps`."""
    return dumps(encode(decode(json.loads(text))))


__all__ = [
    "apolar_from_json",
    "apolar_to_json",
    "certificate_from_json",
    "certificate_to_json",
    "decomposition_from_json",
    "decomposition_to_json",
    "dumps",
    "rank_result_from_json",
    "rank_result_to_json",
]
