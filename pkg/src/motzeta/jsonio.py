"""JSON forms of the engine's data types.

Coefficients serialize as {exponent: coefficient} with decimal strings on
both sides, so arbitrary-precision integers survive the round trip.
"""

import json

from .lefschetz import CompletionElement, LefschetzLaurent
from .lattice import CharFunction, Sublattice
from .series import GradedMonomial, GradedSeries


def laurent_to_json(a):
    return {str(e): str(v) for e, v in sorted(a.items())}


def laurent_from_json(data):
    return LefschetzLaurent({int(e): int(v) for e, v in data.items()})


def completion_to_json(a):
    return {"precision": a.precision,
            "coeffs": {str(e): str(v) for e, v in sorted(a.items())}}


def completion_from_json(data):
    return CompletionElement({int(e): int(v)
                              for e, v in data["coeffs"].items()},
                             data["precision"])


def graded_series_to_json(s, t_vars=None):
    terms = []
    for mono, coeff in s.sorted_terms():
        terms.append({"t": list(mono.t), "z": list(mono.z),
                      "coeff": laurent_to_json(coeff)})
    return {"t_vars": list(t_vars) if t_vars is not None
            else [f"T{i}" for i in range(s.nt)],
            "terms": terms, "trunc": s.trunc}


def graded_series_from_json(data, nz=None):
    terms = {}
    for item in data["terms"]:
        z = item.get("z", [])
        terms[GradedMonomial(tuple(item["t"]), tuple(z))] = \
            laurent_from_json(item["coeff"])
    nt = len(data["t_vars"])
    if nz is None:
        nz = len(data["terms"][0]["z"]) if data["terms"] else 0
    return GradedSeries(nt, nz, terms, data["trunc"])


def char_function_to_json(psi):
    return {"rank": psi.rank,
            "support": [{"m": list(m), "value": laurent_to_json(v)}
                        for m, v in sorted(psi.support.items())]}


def char_function_from_json(data):
    return CharFunction(data["rank"],
                        {tuple(item["m"]): laurent_from_json(item["value"])
                         for item in data["support"]})


def sublattice_to_json(sub):
    return {"generators": [list(g) for g in sub.generators]}


def sublattice_from_json(data, rank):
    return Sublattice(rank, data["generators"])


def fan_to_json(fan):
    return {"name": fan.name, "rank": fan.rank,
            "rays": [list(r) for r in fan.rays],
            "max_cones": [list(c) for c in fan.max_cones]}


def zeta_to_json(zeta):
    return {"fan": zeta.fan_name,
            "Dmax": list(zeta.dmax),
            "coeffs": [{"d": list(d), "coeff": laurent_to_json(c)}
                       for d, c in sorted(zeta.coeffs.items())]}


def dumps_canonical(obj):
    """Deterministic JSON text: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
