"""Building matroids: convenience constructors and the JSON description format."""
from __future__ import annotations

import json
from itertools import combinations

from ..errors import MalformedSpec
from .matroid import (BlowUp, Contraction, DirectSum, Dual, Explicit, Graphic, Join, Laminar,
                      LinearGF, LinearQ, Matroid, Restriction, Transversal, Uniform)


def uniform(n, b):
    return Uniform(n, b)


def graphic(vertices, edges):
    return Graphic(vertices, edges)


def complete_graph(k):
    return Graphic(k, list(combinations(range(k), 2)))


def linear_gf(p, matrix):
    return LinearGF(p, matrix)


def linear_q(matrix):
    return LinearQ(matrix)


def transversal(n, family):
    return Transversal(n, family)


def laminar(n, family, capacities):
    return Laminar(n, family, capacities)


def explicit_bases(n, bases):
    return Explicit(n, bases=bases)


def explicit_independent(n, independent):
    return Explicit(n, independent=independent)


def restrict(M, F, keep_ground=False):
    return Restriction(M, F, keep_ground)


def delete(M, D):
    return Restriction(M, M.ground & ~M.mask(D))


def contract(M, F, keep_ground=False):
    return Contraction(M, F, keep_ground)


def dual(M):
    return Dual(M)


def direct_sum(*parts):
    if len(parts) == 1 and not isinstance(parts[0], Matroid):
        parts = tuple(parts[0])
    return DirectSum(parts)


def blowup(M, copies):
    return BlowUp(M, copies)


def join(parts):
    return Join(parts)


def _need(d, *keys):
    for k in keys:
        if k not in d:
            raise MalformedSpec(f"matroid description of kind {d.get('kind')!r} lacks {k!r}")


def construct(desc: dict) -> Matroid:
    """Build an oracle from a kind-tagged description (see ``describe`` for the inverse)."""
    if not isinstance(desc, dict):
        raise MalformedSpec("matroid description must be an object")
    if "matroid" in desc and "kind" not in desc:
        desc = desc["matroid"]
    kind = desc.get("kind")
    try:
        if kind == "uniform":
            _need(desc, "n", "rank")
            return Uniform(int(desc["n"]), int(desc["rank"]))
        if kind == "graphic":
            _need(desc, "vertices", "edges")
            return Graphic(int(desc["vertices"]), desc["edges"])
        if kind == "linear_gf":
            _need(desc, "p", "matrix")
            return LinearGF(int(desc["p"]), desc["matrix"])
        if kind == "linear_q":
            _need(desc, "matrix")
            return LinearQ(desc["matrix"])
        if kind == "transversal":
            _need(desc, "n", "family")
            return Transversal(int(desc["n"]), desc["family"])
        if kind == "laminar":
            _need(desc, "n", "family", "capacities")
            return Laminar(int(desc["n"]), desc["family"], desc["capacities"])
        if kind == "explicit_bases":
            _need(desc, "n", "bases")
            return Explicit(int(desc["n"]), bases=desc["bases"])
        if kind == "explicit_independent":
            _need(desc, "n", "independent")
            return Explicit(int(desc["n"]), independent=desc["independent"])
        if kind == "dual":
            _need(desc, "of")
            return Dual(construct(desc["of"]))
        if kind in ("restrict", "contract"):
            _need(desc, "of", "set")
            cls = Restriction if kind == "restrict" else Contraction
            M = construct(desc["of"])
            return cls(M, [int(x) for x in desc["set"]], bool(desc.get("keep_ground", False)))
        if kind == "direct_sum":
            _need(desc, "parts")
            return DirectSum([construct(p) for p in desc["parts"]])
        if kind == "blowup":
            _need(desc, "of", "copies")
            return BlowUp(construct(desc["of"]), desc["copies"])
        if kind == "join":
            _need(desc, "parts")
            return Join([construct(p) for p in desc["parts"]])
        if kind == "mk":
            _need(desc, "k")
            from ..games.mk import construct_Mk
            return construct_Mk(int(desc["k"]))
    except MalformedSpec:
        raise
    except (TypeError, ValueError, KeyError, IndexError, ZeroDivisionError) as exc:
        raise MalformedSpec(f"bad {kind} description: {exc}") from exc
    raise MalformedSpec(f"unknown matroid kind {kind!r}")


def describe(M: Matroid) -> dict:
    return {"matroid": M.spec()}


def canonical_json(desc) -> str:
    return json.dumps(desc, sort_keys=True, separators=(",", ":"))


def load(path) -> Matroid:
    with open(path) as fh:
        try:
            desc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedSpec(f"{path}: not JSON ({exc})") from exc
    return construct(desc)
