"""Canonical JSON for reports and query results.

Keys are sorted, separators are compact and infinities become the strings
"inf" / "-inf" since JSON has no literal for them.  Equal trees serialize to
equal bytes, and ``parse_report(serialize_report(t)) == t``.
"""

import json
import math
from dataclasses import asdict, is_dataclass


def to_tree(obj):
    """Plain JSON-ready tree; objects with ``to_dict`` are expanded."""
    if hasattr(obj, "to_dict"):
        return to_tree(obj.to_dict())
    if is_dataclass(obj) and not isinstance(obj, type):
        return to_tree(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): to_tree(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_tree(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return str(obj)


def _encode(x):
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        if math.isnan(x):
            raise ValueError("NaN has no canonical encoding")
    if isinstance(x, dict):
        return {k: _encode(v) for k, v in x.items()}
    if isinstance(x, list):
        return [_encode(v) for v in x]
    return x


def _decode(x):
    if x == "inf":
        return math.inf
    if x == "-inf":
        return -math.inf
    if isinstance(x, dict):
        return {k: _decode(v) for k, v in x.items()}
    if isinstance(x, list):
        return [_decode(v) for v in x]
    return x


def dumps(obj):
    tree = _encode(to_tree(obj))
    return json.dumps(tree, sort_keys=True, separators=(",", ":"), ensure_ascii=False, allow_nan=False)


def serialize_report(obj):
    """Canonical UTF-8 bytes of a report or query result."""
    return dumps(obj).encode("utf-8")


def parse_report(data):
    """Inverse of serialize_report, infinities restored."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return _decode(json.loads(data))
