"""JSON formats for elements, coaction elements, and finite presentations.

Element::

    {"ring": "int" | "rat" | {"mod": m},
     "terms": [{"key": <key-json>, "coeff": "<string>"}, ...]}

Coaction element (``H (x) QSym``)::

    {"ring": ..., "terms": [{"h": <key-json>, "q": [a1, ...], "coeff": "..."}]}

Terms are always written in key order, so equal elements serialize to
identical bytes.  Tensor keys serialize as JSON lists of their components.

Presentation (finite-degree structure constants, used by ``verify --algebra
file:<path>``)::

    {"name": "...", "ring": "int", "unit": <key>,
     "commutative": true, "cocommutative": true,
     "keys": [{"key": <key>, "degree": n}, ...],
     "product": [{"left": k1, "right": k2, "terms": [{"key": k, "coeff": "1"}]}],
     "coproduct": [{"key": k, "terms": [{"left": k1, "right": k2, "coeff": "1"}]}],
     "counit": [{"key": k, "coeff": "1"}],            # optional
     "characters": {"name": [{"key": k, "coeff": "1"}]}}  # optional

Keys in a presentation file are any JSON scalars or lists (lists become
tuples).  Unlisted products land above the top degree and are truncated to
zero; products with the unit default to the identity.  A missing ``counit``
means ``1`` on the unit and ``0`` elsewhere.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable

from .hopf import HopfPresentation
from .instances import Character
from .lincomb import LinComb
from .rings import CoefficientRing, ring_from_spec


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def element_to_json(f: LinComb, key_to_json: Callable = lambda k: k) -> dict:
    ring = f.ring
    return {
        "ring": ring.to_json(),
        "terms": [{"key": key_to_json(k), "coeff": ring.to_string(c)} for k, c in f.items()],
    }


def element_from_json(obj: dict, key_from_json: Callable = lambda j: j) -> LinComb:
    ring = ring_from_spec(obj["ring"])
    terms = []
    for t in obj["terms"]:
        terms.append((key_from_json(t["key"]), ring.parse(t["coeff"])))
    return LinComb(ring, terms)


def tensor_key_codec(*codecs: Callable) -> Callable:
    return lambda key: [c(k) for c, k in zip(codecs, key)]


def tensor_key_decoder(*codecs: Callable) -> Callable:
    def decode(j):
        if len(j) != len(codecs):
            raise ValueError(f"tensor key {j!r} has the wrong arity")
        return tuple(c(x) for c, x in zip(codecs, j))

    return decode


def presentation_element_to_json(H: HopfPresentation, f: LinComb) -> dict:
    return element_to_json(f, H.key_to_json)


def presentation_element_from_json(H: HopfPresentation, obj: dict) -> LinComb:
    f = element_from_json(obj, H.key_from_json)
    if f.ring != H.ring:
        raise ValueError(f"element ring {f.ring!r} does not match {H.ring!r}")
    return f


def coaction_to_json(H: HopfPresentation, t: LinComb) -> dict:
    ring = t.ring
    return {
        "ring": ring.to_json(),
        "terms": [
            {"h": H.key_to_json(h), "q": list(q), "coeff": ring.to_string(c)}
            for (h, q), c in t.items()
        ],
    }


def coaction_from_json(H: HopfPresentation, obj: dict) -> LinComb:
    from .compositions import Composition

    ring = ring_from_spec(obj["ring"])
    return LinComb(
        ring,
        [((H.key_from_json(t["h"]), Composition(t["q"])), ring.parse(t["coeff"])) for t in obj["terms"]],
    )


# -- presentations -------------------------------------------------------------

def _freeze(j: Any) -> Any:
    if isinstance(j, list):
        return tuple(_freeze(x) for x in j)
    return j


def _thaw(k: Any) -> Any:
    if isinstance(k, tuple):
        return [_thaw(x) for x in k]
    return k


def presentation_to_json(H: HopfPresentation, max_degree: int, characters: dict | None = None) -> dict:
    """Dump the structure constants of ``H`` up to ``max_degree``."""
    ring = H.ring
    enc = H.key_to_json
    keys = H.basis_up_to(max_degree)
    product = []
    for a in keys:
        for b in keys:
            if H.degree(a) + H.degree(b) <= max_degree:
                p = H.product(a, b)
                product.append({
                    "left": enc(a), "right": enc(b),
                    "terms": [{"key": enc(k), "coeff": ring.to_string(c)} for k, c in p.items()],
                })
    coproduct = []
    for a in keys:
        coproduct.append({
            "key": enc(a),
            "terms": [{"left": enc(x), "right": enc(y), "coeff": ring.to_string(c)}
                      for (x, y), c in H.coproduct(a).items()],
        })
    out = {
        "name": H.name,
        "ring": ring.to_json(),
        "unit": enc(H.unit_key),
        "commutative": H.commutative,
        "cocommutative": H.cocommutative,
        "keys": [{"key": enc(k), "degree": H.degree(k)} for k in keys],
        "product": product,
        "coproduct": coproduct,
        "counit": [{"key": enc(k), "coeff": ring.to_string(H.counit(k))}
                   for k in keys if ring.normalize(H.counit(k)) != 0],
    }
    if characters:
        out["characters"] = {
            name: [{"key": enc(k), "coeff": ring.to_string(ch(k))}
                   for k in keys if ring.normalize(ch(k)) != 0]
            for name, ch in characters.items()
        }
    return out


class FilePresentation:
    """A presentation parsed from the structure-constant format, plus its characters."""

    def __init__(self, obj: dict, ring: CoefficientRing | None = None):
        declared = ring_from_spec(obj.get("ring", "int"))
        self.ring = ring or declared
        r = self.ring
        self.degrees = {_freeze(e["key"]): int(e["degree"]) for e in obj["keys"]}
        self.order = {k: i for i, k in enumerate(self.degrees)}
        unit = _freeze(obj["unit"])
        if unit not in self.degrees:
            raise ValueError("unit key is not listed in keys")
        self.top = max(self.degrees.values(), default=0)

        def terms_of(ts, fields):
            return [(tuple(_freeze(t[f]) for f in fields) if len(fields) > 1 else _freeze(t[fields[0]]),
                     r.parse(str(t["coeff"]))) for t in ts]

        self.products: dict = {}
        for e in obj.get("product", []):
            self.products[(_freeze(e["left"]), _freeze(e["right"]))] = LinComb(r, terms_of(e["terms"], ["key"]))
        self.coproducts: dict = {}
        for e in obj.get("coproduct", []):
            self.coproducts[_freeze(e["key"])] = LinComb(r, terms_of(e["terms"], ["left", "right"]))
        if "counit" in obj:
            self.counits = {_freeze(e["key"]): r.parse(str(e["coeff"])) for e in obj["counit"]}
        else:
            self.counits = {unit: r.one}
        self.characters = {
            name: {_freeze(e["key"]): r.parse(str(e["coeff"])) for e in entries}
            for name, entries in obj.get("characters", {}).items()
        }
        by_degree: dict = {}
        for k, d in self.degrees.items():
            by_degree.setdefault(d, []).append(k)

        def product(a, b):
            got = self.products.get((a, b))
            if got is not None:
                return got
            if a == unit:
                return LinComb.monomial(r, b)
            if b == unit:
                return LinComb.monomial(r, a)
            if self.degrees[a] + self.degrees[b] > self.top:
                return LinComb.zero(r)
            raise KeyError(f"product of {a!r} and {b!r} is not listed")

        def coproduct(a):
            try:
                return self.coproducts[a]
            except KeyError:
                raise KeyError(f"coproduct of {a!r} is not listed") from None

        self.presentation = HopfPresentation(
            name=obj.get("name", "file"),
            ring=r,
            degree=self.degrees.__getitem__,
            unit_key=unit,
            product=product,
            coproduct=coproduct,
            counit=lambda k: self.counits.get(k, 0),
            basis=lambda n: by_degree.get(n, []),
            commutative=bool(obj.get("commutative", False)),
            cocommutative=bool(obj.get("cocommutative", False)),
            top_degree=self.top,
            format_key=lambda k: json.dumps(_thaw(k)),
            key_to_json=_thaw,
            key_from_json=_freeze,
        )

    def character_objects(self) -> list[Character]:
        return [Character(name, (lambda vals: lambda k: vals.get(k, 0))(vals))
                for name, vals in sorted(self.characters.items())]


def load_presentation(path: str | Path, ring: CoefficientRing | None = None) -> FilePresentation:
    with open(path, encoding="utf-8") as fh:
        return FilePresentation(json.load(fh), ring)
