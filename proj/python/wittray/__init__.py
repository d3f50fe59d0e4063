"""Exact big Witt vectors over affine monoids, graded Hochschild homology
and symbolic K-group decompositions.

Documents are plain dicts in the JSON layout of the command-line tool.
"""

from __future__ import annotations

import json
from typing import Any, Mapping, Sequence

from . import _core

__all__ = [
    "WittrayError",
    "cli",
    "witt",
    "hochschild",
    "cyclic",
    "kdecomp",
    "wreath_orbit",
    "rays",
]


class WittrayError(Exception):
    """Domain error raised by the native core."""

    def __init__(self, code: str, module: str, message: str):
        super().__init__(f"{module}: {message} [{code}]")
        self.code = code
        self.module = module
        self.message = message


def _translate(exc: Exception) -> WittrayError:
    info = json.loads(str(exc))
    return WittrayError(info["code"], info["module"], info["message"])


def _dump(doc: Mapping[str, Any] | str) -> str:
    return doc if isinstance(doc, str) else json.dumps(doc)


def cli(*args: str) -> tuple[int, str, str]:
    """Runs the command-line front end in-process."""
    return _core.cli(list(args))


def _run_json(*args: str) -> Any:
    code, out, err = _core.cli(list(args))
    if code == 1:
        info = json.loads(err)["error"]
        raise WittrayError(info["code"], info["module"], info["message"])
    if code != 0:
        raise ValueError(err.strip())
    return json.loads(out)


def witt(op: str, a: Mapping[str, Any] | str, b: Mapping[str, Any] | str | None = None, *, m: int = 0) -> dict:
    """Applies add/sub/mul/neg/ghost/from-ghost/frobenius/verschiebung."""
    try:
        return json.loads(_core.witt(op, _dump(a), "" if b is None else _dump(b), m))
    except _core.WittrayError as exc:
        raise _translate(exc) from None


def _homology(kind: str, algebra: Mapping[str, Any] | str, n_max: int, relative: bool, basis: bool,
              cell_bound: int | None) -> dict:
    args = [kind, "compute", "--algebra", _dump(algebra), "--nmax", str(n_max)]
    if relative:
        args.append("--relative")
    if basis:
        args.append("--basis")
    if cell_bound is not None:
        args += ["--cell-bound", str(cell_bound)]
    return _run_json(*args)


def hochschild(algebra: Mapping[str, Any] | str, n_max: int = 4, *, relative: bool = False, basis: bool = False,
               cell_bound: int | None = None) -> dict:
    """Hochschild homology report of a truncated monoid algebra."""
    return _homology("hh", algebra, n_max, relative, basis, cell_bound)


def cyclic(algebra: Mapping[str, Any] | str, n_max: int = 4, *, relative: bool = False, basis: bool = False,
           cell_bound: int | None = None) -> dict:
    """Cyclic homology report (over Q)."""
    return _homology("hc", algebra, n_max, relative, basis, cell_bound)


def kdecomp(which: str, n: int, *, q: str = "q", height: int = 0, format: str = "text",
            with_ring: bool = False) -> str | dict:
    """Renders fundamental/poly/laurent/nkpower/relative/rebundle."""
    try:
        out = _core.kdecomp(which, n, q, height, format, with_ring)
    except _core.WittrayError as exc:
        raise _translate(exc) from None
    return json.loads(out) if format == "json" else out


def wreath_orbit(n: int, r: int, *, symmetric: bool = False) -> tuple[int, int]:
    """(orbit size, stabilizer order) of R_r under W_n, or S_n."""
    try:
        orbit, stabilizer, _ = _core.wreath_orbit(n, r, symmetric)
    except _core.WittrayError as exc:
        raise _translate(exc) from None
    return orbit, stabilizer


def rays(kind: str, dim: int, height: int) -> list[list[int]]:
    """Rays of lattice/closed_orthant/positive_orthant up to a height."""
    try:
        return _core.rays(kind, dim, height)
    except _core.WittrayError as exc:
        raise _translate(exc) from None
