"""Exact bi-orderability toolkit.

Thin wrappers over the C++ core: every function returns the parsed JSON
report the CLI would print with --json, as a dict (with an ``exit_code``
key).
"""

import json as _json

from ._core import run_cli  # noqa: F401
from . import _core


def _wrap(name):
    fn = getattr(_core, name)

    def wrapper(*args, **kwargs):
        return _json.loads(fn(*args, **kwargs))

    wrapper.__name__ = name
    wrapper.__doc__ = fn.__doc__
    return wrapper


factor = _wrap("factor")
roots = _wrap("roots")
special = _wrap("special")
abelian_check = _wrap("abelian_check")
abelian_sign = _wrap("abelian_sign")
knot_verdict = _wrap("knot_verdict")
knot_conway = _wrap("knot_conway")
free_companion = _wrap("free_companion")
free_compare = _wrap("free_compare")
free_verify_products = _wrap("free_verify_products")

__all__ = [
    "factor",
    "roots",
    "special",
    "abelian_check",
    "abelian_sign",
    "knot_verdict",
    "knot_conway",
    "free_companion",
    "free_compare",
    "free_verify_products",
    "run_cli",
]
