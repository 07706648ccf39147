"""JSON documents describing spaces and maps with named points.

A space document lists point names and opens as lists of names; nothing
is implicit, so a family missing the empty list or the full point list
fails validation with the axiom named.  The library itself works on bit
masks; names exist only at this boundary.
"""

import json
import string

from .errors import DocumentError
from .maps import SpaceMap
from .space import SubsetMask, Topology, build_topology, iter_points


def default_point_names(n: int):
    """a, b, c, ... for small spaces; indexed names past the alphabet."""
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"p{i}" for i in range(n)]


def mask_to_names(mask: SubsetMask, points) -> list:
    return [points[x] for x in iter_points(mask)]


def names_to_mask(names, index) -> SubsetMask:
    mask = 0
    for name in names:
        if name not in index:
            raise DocumentError(f"unknown point {name!r}")
        mask |= 1 << index[name]
    return mask


def _point_index(points) -> dict:
    if not isinstance(points, list) or not all(
        isinstance(p, str) and p for p in points
    ):
        raise DocumentError("points must be a list of nonempty strings")
    if len(set(points)) != len(points):
        raise DocumentError("point names must be distinct")
    return {name: x for x, name in enumerate(points)}


def encode_space(t: Topology, points=None) -> dict:
    points = list(points) if points is not None else default_point_names(t.n)
    if len(points) != t.n:
        raise DocumentError(f"need {t.n} point names, got {len(points)}")
    return {
        "points": points,
        "opens": [mask_to_names(u, points) for u in t.opens],
    }


def decode_space(doc) -> tuple:
    """Validate a space document and build its topology.

    Returns (topology, points).  Structural problems raise DocumentError;
    axiom violations raise the topology error naming the witness pair.
    """
    if not isinstance(doc, dict):
        raise DocumentError("space document must be an object")
    unknown = set(doc) - {"points", "opens"}
    if unknown:
        raise DocumentError(f"unexpected keys {sorted(unknown)}")
    if "points" not in doc or "opens" not in doc:
        raise DocumentError("space document needs 'points' and 'opens'")
    points = doc["points"]
    index = _point_index(points)
    opens_field = doc["opens"]
    if not isinstance(opens_field, list) or not all(
        isinstance(u, list) for u in opens_field
    ):
        raise DocumentError("opens must be a list of lists of point names")
    opens = [names_to_mask(u, index) for u in opens_field]
    return build_topology(len(points), opens), list(points)


def encode_map(f: SpaceMap, domain_points=None, codomain_points=None) -> dict:
    domain_points = (
        list(domain_points) if domain_points is not None
        else default_point_names(f.domain.n)
    )
    codomain_points = (
        list(codomain_points) if codomain_points is not None
        else default_point_names(f.codomain.n)
    )
    return {
        "domain": encode_space(f.domain, domain_points),
        "codomain": encode_space(f.codomain, codomain_points),
        "assignment": {
            domain_points[x]: codomain_points[f.assignment[x]]
            for x in range(f.domain.n)
        },
    }


def _resolve_space_field(field, what):
    """A map document's domain/codomain: inline document or file path."""
    if isinstance(field, str):
        try:
            with open(field, encoding="utf-8") as fh:
                field = json.load(fh)
        except OSError as exc:
            raise DocumentError(f"cannot read {what} file {field!r}: {exc}")
        except json.JSONDecodeError as exc:
            raise DocumentError(f"{what} file is not valid JSON: {exc}")
    return decode_space(field)


def decode_map(doc) -> tuple:
    """Validate a map document.  Returns (map, domain_points, codomain_points)."""
    if not isinstance(doc, dict):
        raise DocumentError("map document must be an object")
    for key in ("domain", "codomain", "assignment"):
        if key not in doc:
            raise DocumentError(f"map document needs {key!r}")
    dom, dom_points = _resolve_space_field(doc["domain"], "domain")
    cod, cod_points = _resolve_space_field(doc["codomain"], "codomain")
    raw = doc["assignment"]
    if isinstance(raw, list):
        try:
            raw = dict(
                (pair[0], pair[1]) for pair in raw if len(pair) == 2
            )
        except (TypeError, IndexError):
            raise DocumentError("assignment pairs must be [from, to]")
        if len(raw) != len(doc["assignment"]):
            raise DocumentError("assignment pairs must be [from, to]")
    if not isinstance(raw, dict):
        raise DocumentError("assignment must map point names to point names")
    dom_index = {name: x for x, name in enumerate(dom_points)}
    cod_index = {name: y for y, name in enumerate(cod_points)}
    missing = [p for p in dom_points if p not in raw]
    if missing:
        raise DocumentError(f"assignment misses domain points {missing}")
    unknown = [p for p in raw if p not in dom_index]
    if unknown:
        raise DocumentError(f"assignment has unknown domain points {unknown}")
    assignment = []
    for name in dom_points:
        target = raw[name]
        if target not in cod_index:
            raise DocumentError(f"unknown codomain point {target!r}")
        assignment.append(cod_index[target])
    return SpaceMap(dom, cod, assignment), dom_points, cod_points


def load_space(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read space file {path!r}: {exc}")
    except json.JSONDecodeError as exc:
        raise DocumentError(f"space file is not valid JSON: {exc}")
    return decode_space(doc)


def load_map(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read map file {path!r}: {exc}")
    except json.JSONDecodeError as exc:
        raise DocumentError(f"map file is not valid JSON: {exc}")
    return decode_map(doc)
