"""JSON instance files.

Coordinates are written as rational strings (``"2/3"``) so nothing is lost to
decimal parsing; JSON integers are also accepted, JSON floats never are::

    {"agents": ["1/4", "1/4", "1"], "region": [["0", "0"], ["2/3", "2/3"]], "facilities": 1}
"""

from __future__ import annotations

import json
import sys

from limloc.core import Instance, as_coordinate, format_rational, normalize_instance
from limloc.errors import InstanceSyntaxError


def _coordinate(value, where: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InstanceSyntaxError(f"expected a rational string such as \"1/3\", got {value!r}", where)
    try:
        return as_coordinate(value if isinstance(value, str) else int(value), where)
    except InstanceSyntaxError as exc:
        raise InstanceSyntaxError(str(exc), where) from None


def parse_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceSyntaxError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise InstanceSyntaxError("top level must be a JSON object")
    unknown = set(doc) - {"agents", "region", "facilities"}
    if unknown:
        raise InstanceSyntaxError(f"unknown field(s) {sorted(unknown)}")
    for key in ("agents", "region", "facilities"):
        if key not in doc:
            raise InstanceSyntaxError("missing field", key)

    agents = doc["agents"]
    if not isinstance(agents, list):
        raise InstanceSyntaxError("must be a list", "agents")
    agents = [_coordinate(a, f"agents[{i}]") for i, a in enumerate(agents)]

    region = doc["region"]
    if not isinstance(region, list):
        raise InstanceSyntaxError("must be a list of [lo, hi] pairs", "region")
    pairs = []
    for i, pair in enumerate(region):
        if not isinstance(pair, list) or len(pair) != 2:
            raise InstanceSyntaxError("must be a [lo, hi] pair", f"region[{i}]")
        pairs.append((_coordinate(pair[0], f"region[{i}][0]"), _coordinate(pair[1], f"region[{i}][1]")))

    m = doc["facilities"]
    if isinstance(m, bool) or not isinstance(m, int):
        raise InstanceSyntaxError("must be the integer 1 or 2", "facilities")
    return normalize_instance(agents, pairs, m)


def instance_to_dict(instance: Instance) -> dict:
    return {
        "agents": [format_rational(x) for x in instance.agents],
        "region": [[format_rational(lo), format_rational(hi)] for lo, hi in instance.region],
        "facilities": instance.facilities,
    }


def dump_instance(instance: Instance) -> str:
    return json.dumps(instance_to_dict(instance))


def read_instance(path: str) -> Instance:
    if path == "-":
        return parse_instance(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())
