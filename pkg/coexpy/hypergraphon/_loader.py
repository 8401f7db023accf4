import json
import logging
from fractions import Fraction
from pathlib import Path

import numpy as np

from ..errors import InputError, ParseError
from ..hypergraph import proper_subsets
from ._step import StepHypergraphon, symmetrize, validate

__all__ = ["load_hypergraphon", "dump_hypergraphon", "coordinate_key"]

logger = logging.getLogger(__name__)


def coordinate_key(c):
    return "".join(str(i + 1) for i in c)


def _fraction(raw, where):
    try:
        return Fraction(str(raw))
    except (ValueError, ZeroDivisionError):
        raise ParseError("{}: not a rational number: {!r}".format(where, raw))


def load_hypergraphon(source, strict=None):
    '''
    Load a step hypergraphon from a JSON file, JSON text or an already decoded dict.
    Asymmetric tables are rejected when strict, symmetrized otherwise.
    '''
    if isinstance(source, dict):
        data = source
    else:
        text = Path(source).read_text() if not str(source).lstrip().startswith("{") else str(source)
        try:
            data = json.loads(text)
        except json.JSONDecodeError as err:
            raise ParseError(err.msg, err.lineno)
    try:
        k = int(data["k"])
        lengths = [_fraction(x, "lengths") for x in data["lengths"]]
        entries = data.get("table", [])
    except (KeyError, TypeError, ValueError) as err:
        raise ParseError("hypergraphon file needs 'k', 'lengths' and 'table': {}".format(err))
    if not 1 <= k <= 9:
        raise ParseError("k must lie in 1..9 for digit-keyed coordinates, got {}".format(k))
    strict = data.get("strict", True) if strict is None else strict
    coords = proper_subsets(k)
    keys = [coordinate_key(c) for c in coords]
    table = np.full((len(lengths),) * len(coords), Fraction(0), dtype=object)
    for i, entry in enumerate(entries):
        assign = entry.get("assign", {})
        if set(assign) != set(keys):
            raise ParseError("table entry {} must assign exactly the coordinates {}".format(i, keys))
        try:
            index = tuple(int(assign[key]) for key in keys)
        except (TypeError, ValueError):
            raise ParseError("table entry {}: part indices must be integers".format(i))
        if any(not 0 <= a < len(lengths) for a in index):
            raise ParseError("table entry {}: part index out of range".format(i))
        table[index] = _fraction(entry.get("value"), "table entry {}".format(i))
    W = StepHypergraphon(k, lengths, table)
    report = validate(W)
    if not report:
        if strict:
            raise InputError("hypergraphon is not symmetric: {} at assignment {} under {}".format(
                report.reason, report.assignment, report.sigma))
        logger.info("symmetrizing hypergraphon (first asymmetry at %s)", report.assignment)
        W = symmetrize(W)
    return W


def dump_hypergraphon(W):
    keys = [coordinate_key(c) for c in W.coords]
    entries = [{"assign": dict(zip(keys, map(int, index))), "value": str(W.full_table[index])}
               for index in np.ndindex(*W.full_table.shape) if W.full_table[index]]
    return {"k": W.k, "lengths": [str(x) for x in W.lengths], "table": entries}
