"""Homotopy classes of maps from long surfaces, decided symbolically.

Sequences are given either as finite shorthand such as ``"uud"`` or as a
dict ``{"alpha": "w", "up": [...]}`` in the JSON interchange format.
Interval sets, maps and families come back as decoded JSON.
"""

import json as _json

from . import _core
from ._core import BoundError, CyclicPreorder, DomainError, Error, InconsistentMap, ParseError

__all__ = [
    "BoundError",
    "CyclicPreorder",
    "DomainError",
    "Error",
    "InconsistentMap",
    "ParseError",
    "check",
    "classes",
    "diagonal",
    "export_dot",
    "homotopic",
    "normalize",
    "normalize_ordinal",
    "run_cli",
]


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def normalize_ordinal(text):
    """Canonical rendering of an ordinal expression, e.g. ``"w*2+w"`` -> ``"w*3"``."""
    return _core.normalize_ordinal(text)


def normalize(seq):
    """The sequence with a limit length, as a dict."""
    return _json.loads(_core.normalize_seq(_text(seq)))


def classes(seq, max_parts=4, shift_bound=4):
    """Adapted sets as ``(list of interval set dicts, complete)``."""
    found, complete = _core.classes(_text(seq), max_parts, shift_bound)
    return [_json.loads(w) for w in found], complete


def check(seq, subset):
    """``(adapted, witness)`` for a subset written like ``"{1,2}"`` or ``"[3,w)"``."""
    return _core.check(_text(seq), subset)


def homotopic(map1, map2):
    """Whether two consistent symbolic maps have equal verdict sets."""
    return _core.homotopic(_text(map1), _text(map2))


def diagonal(family):
    """``(interval set dict, club)``; club is None over a non-limit universe."""
    d, club = _core.diagonal(_text(family))
    return _json.loads(d), club


def export_dot(seq):
    return _core.export_dot(_text(seq))


def run_cli(args):
    """``(exit code, stdout, stderr)`` of the ``longhom`` command line."""
    return _core.run_cli(list(args))
