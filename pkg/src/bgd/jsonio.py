"""JSON loading/export of bialgebroid presentations with exact scalars."""

import json

import numpy as np

from .algebra import AlgebraPresentation
from .bialgebroid import LeftBialgebroid
from .linalg import Field


class SpecError(ValueError):
    """A structured loading error carrying a JSON-path location."""

    def __init__(self, where, message):
        self.where = where
        super().__init__(f"{where}: {message}")


def _need(doc, key, where):
    if key not in doc:
        raise SpecError(where, f"missing key '{key}'")
    return doc[key]


def _parse_field(doc):
    kind = _need(doc, "kind", "field")
    if kind == "prime":
        p = _need(doc, "p", "field")
        if not isinstance(p, int):
            raise SpecError("field.p", "expected an integer")
        try:
            return Field.prime(p)
        except Exception as exc:
            raise SpecError("field.p", str(exc))
    if kind == "rationals":
        return Field.rationals()
    raise SpecError("field.kind", f"unknown field kind {kind!r}")


def _parse_scalar(f, s, where):
    try:
        return f.parse(str(s))
    except Exception:
        raise SpecError(where, f"bad scalar {s!r}")


def _parse_matrix(f, data, shape, where):
    if not isinstance(data, list) or len(data) != shape[0]:
        raise SpecError(where, f"expected {shape[0]} rows")
    m = f.zeros(shape)
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != shape[1]:
            raise SpecError(f"{where}[{i}]", f"expected {shape[1]} entries")
        for j, s in enumerate(row):
            m[i, j] = _parse_scalar(f, s, f"{where}[{i}][{j}]")
    return f.mod(m)


def _parse_vector(f, data, n, where):
    if not isinstance(data, list) or len(data) != n:
        raise SpecError(where, f"expected {n} entries")
    v = f.zeros(n)
    for j, s in enumerate(data):
        v[j] = _parse_scalar(f, s, f"{where}[{j}]")
    return f.mod(v)


def _parse_algebra(f, doc, where):
    dim = _need(doc, "dim", where)
    if not isinstance(dim, int) or dim <= 0:
        raise SpecError(f"{where}.dim", "expected a positive integer")
    unit = _parse_vector(f, _need(doc, "unit", where), dim, f"{where}.unit")
    triples = []
    for n, t in enumerate(_need(doc, "mul", where)):
        if not isinstance(t, list) or len(t) != 4:
            raise SpecError(f"{where}.mul[{n}]", "expected [i, j, k, coeff]")
        i, j, k, c = t
        for idx, v in (("i", i), ("j", j), ("k", k)):
            if not isinstance(v, int) or not 0 <= v < dim:
                raise SpecError(f"{where}.mul[{n}]", f"index {idx} out of range")
        triples.append((i, j, k, _parse_scalar(f, c, f"{where}.mul[{n}]")))
    labels = doc.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or len(labels) != dim
    ):
        raise SpecError(f"{where}.labels", f"expected {dim} labels")
    return AlgebraPresentation.from_triples(f, dim, triples, unit, labels=labels)


def parse_spec(doc):
    """Build a left bialgebroid from a parsed JSON document."""
    f = _parse_field(_need(doc, "field", "document"))
    algs = _need(doc, "algebras", "document")
    parsed = {
        name: _parse_algebra(f, adoc, f"algebras.{name}")
        for name, adoc in algs.items()
    }
    bdoc = _need(doc, "bialgebroid", "document")
    base_name = _need(bdoc, "base", "bialgebroid")
    total_name = _need(bdoc, "total", "bialgebroid")
    for nm in (base_name, total_name):
        if nm not in parsed:
            raise SpecError("bialgebroid", f"unknown algebra name {nm!r}")
    A, U = parsed[base_name], parsed[total_name]
    s = _parse_matrix(f, _need(bdoc, "s", "bialgebroid"), (U.dim, A.dim),
                      "bialgebroid.s")
    t = _parse_matrix(f, _need(bdoc, "t", "bialgebroid"), (U.dim, A.dim),
                      "bialgebroid.t")
    counit = _parse_matrix(f, _need(bdoc, "counit", "bialgebroid"),
                           (A.dim, U.dim), "bialgebroid.counit")
    delta = _parse_matrix(f, _need(bdoc, "delta", "bialgebroid"),
                          (U.dim * U.dim, U.dim), "bialgebroid.delta")
    return LeftBialgebroid(A, U, s, t, delta, counit,
                           name=doc.get("name", total_name))


def load_spec(path):
    try:
        fh = open(path)
    except OSError as exc:
        raise SpecError("document", f"cannot read {path!r}: {exc.strerror}")
    with fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SpecError("document", f"malformed JSON: {exc}")
    if not isinstance(doc, dict):
        raise SpecError("document", "expected a JSON object")
    return parse_spec(doc)


def _fmt_matrix(f, m):
    return [[f.format(x) for x in row] for row in np.asarray(m)]


def export_spec(b):
    """The canonical JSON document of a bialgebroid (inverse of parse_spec)."""
    f = b.field
    field_doc = {"kind": "prime", "p": f.p} if f.kind == "prime" else {
        "kind": "rationals"
    }

    def alg_doc(alg):
        triples = []
        for i in range(alg.dim):
            for j in range(alg.dim):
                for k in range(alg.dim):
                    c = f.canon(alg.mul[i, j, k])
                    if c != f.zero:
                        triples.append([i, j, k, f.format(c)])
        return {
            "dim": alg.dim,
            "unit": [f.format(x) for x in alg.unit],
            "mul": triples,
            "labels": list(alg.labels),
        }

    return {
        "name": b.name,
        "field": field_doc,
        "algebras": {"A": alg_doc(b.A), "U": alg_doc(b.U)},
        "bialgebroid": {
            "base": "A",
            "total": "U",
            "s": _fmt_matrix(f, b.s_map),
            "t": _fmt_matrix(f, b.t_map),
            "counit": _fmt_matrix(f, b.counit),
            "delta": _fmt_matrix(f, b.delta),
        },
    }


def dumps_canonical(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
