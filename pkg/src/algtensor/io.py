"""Tensor files and report serialization.

A tensor file is one JSON document::

    {
      "order": 3,
      "dims": [2, 2, 2],
      "field": {"generator": "a", "minpoly": [-2, 0, 1]},
      "entries": [
        {"index": [1, 1, 2], "value": "1"},
        {"index": [2, 1, 1], "value": "3/2 + a"}
      ]
    }

``minpoly`` lists coefficients least-degree first (ints or rational
strings); ``[0, 1]`` is Q itself and the ``field`` key may then be
omitted. Indices are 1-based and omitted entries are zero. The writer
puts one entry per line, so line numbers in diagnostics are useful.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from fractions import Fraction

from .errors import AlgTensorError, FieldError, ParseError, TensorIndexError
from .numberfield import QQ, NumberField, nf_create
from .tensor import Tensor


def _line_of(text, pattern, k):
    """Line (1-based) of the k-th match of ``pattern`` in ``text``, if any."""
    for n, m in enumerate(re.finditer(pattern, text)):
        if n == k:
            return text.count("\n", 0, m.start()) + 1
    return None


def _rational(v, where, line=None):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ParseError(f"expected an integer or rational string, got {v!r}", line, where)
    try:
        return Fraction(v)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {v!r}", line, where) from None


def _read_field(doc, text):
    field_doc = doc.get("field")
    if field_doc is None:
        return QQ
    line = _line_of(text, r'"field"', 0)
    if not isinstance(field_doc, dict):
        raise ParseError("'field' must be an object", line, "field")
    name = field_doc.get("generator", "a")
    if not isinstance(name, str):
        raise ParseError("'generator' must be a string", line, "field.generator")
    mp = field_doc.get("minpoly")
    if not isinstance(mp, list) or len(mp) < 2:
        raise ParseError("'minpoly' must list at least two coefficients", line, "field.minpoly")
    coeffs = [_rational(c, "field.minpoly", line) for c in mp]
    try:
        return nf_create(coeffs, name)
    except AlgTensorError as exc:
        raise ParseError(f"invalid field: {exc}", line, "field") from exc


def parse_tensor_text(text: str) -> Tensor:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", 1)
    for key in ("dims", "entries"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}", None, key)
    dims = doc["dims"]
    dims_line = _line_of(text, r'"dims"', 0)
    if (not isinstance(dims, list) or not dims
            or not all(isinstance(n, int) and not isinstance(n, bool) and n >= 1 for n in dims)):
        raise ParseError("'dims' must be a nonempty list of positive integers", dims_line, "dims")
    order = doc.get("order", len(dims))
    if order != len(dims):
        raise ParseError(f"order {order} does not match {len(dims)} dims",
                         _line_of(text, r'"order"', 0), "order")
    field = _read_field(doc, text)
    entries = doc["entries"]
    if not isinstance(entries, list):
        raise ParseError("'entries' must be a list", _line_of(text, r'"entries"', 0), "entries")
    values = {}
    for k, e in enumerate(entries):
        line = _line_of(text, r'"index"', k)
        where = f"entries[{k}]"
        if not isinstance(e, dict) or "index" not in e or "value" not in e:
            raise ParseError("an entry needs 'index' and 'value'", line, where)
        idx = e["index"]
        if not isinstance(idx, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in idx):
            raise ParseError("'index' must be a list of integers", line, where)
        if len(idx) != len(dims):
            raise TensorIndexError(f"{where}: index {idx} has {len(idx)} components, order is {len(dims)}"
                                   + (f" (line {line})" if line else ""))
        if any(not 1 <= i <= n for i, n in zip(idx, dims)):
            raise TensorIndexError(f"{where}: index {idx} out of range for dims {dims}"
                                   + (f" (line {line})" if line else ""))
        key = tuple(i - 1 for i in idx)
        if key in values:
            raise TensorIndexError(f"{where}: duplicate index {idx}" + (f" (line {line})" if line else ""))
        raw = e["value"]
        if isinstance(raw, int) and not isinstance(raw, bool):
            raw = str(raw)
        if not isinstance(raw, str):
            raise ParseError(f"'value' must be a string, got {raw!r}", line, where)
        try:
            values[key] = field.parse(raw, where)
        except FieldError as exc:
            raise FieldError(exc.message, line, where) from None
        except ParseError as exc:
            raise ParseError(exc.message, line, where) from None
    return Tensor.from_entries(tuple(dims), values, field)


def parse_tensor_file(path) -> Tensor:
    """Read and validate a tensor file."""
    with open(path, encoding="utf-8") as fh:
        return parse_tensor_text(fh.read())


def _coeff_json(c: Fraction):
    return c.numerator if c.denominator == 1 else str(c)


def field_to_json(F: NumberField):
    return {"generator": F.generator_name, "minpoly": [_coeff_json(c) for c in F.minpoly]}


def tensor_to_json(T: Tensor):
    return {
        "order": T.order,
        "dims": list(T.dims),
        "field": field_to_json(T.field),
        "entries": [{"index": [i + 1 for i in idx], "value": str(v)} for idx, v in T.nonzero_entries()],
    }


def format_tensor(T: Tensor) -> str:
    """Canonical file text: fixed key order, one entry per line."""
    doc = tensor_to_json(T)
    lines = ["{",
             f'  "order": {doc["order"]},',
             f'  "dims": {json.dumps(doc["dims"])},',
             f'  "field": {json.dumps(doc["field"])},']
    if doc["entries"]:
        lines.append('  "entries": [')
        body = [f"    {json.dumps(e)}" for e in doc["entries"]]
        lines.append(",\n".join(body))
        lines.append("  ]")
    else:
        lines.append('  "entries": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_tensor_file(T: Tensor, path) -> None:
    atomic_write(path, format_tensor(T))


def atomic_write(path, text: str) -> None:
    """Write via a temporary file in the same directory and rename over ``path``."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
