"""Parity bridge between identifying and discriminating codes.

F^{n+1} splits into even-weight vectors (the attribute side) and odd-weight
vectors (the individuals).  A code sitting inside the even half is
r-discriminating (r odd) when every odd vector gets a nonempty cover set
and no two odd vectors share one.  Appending a parity bit maps an
r-identifying code of F^n bijectively onto such codes of F^{n+1}; deleting
any single coordinate maps back.  Both directions preserve size because a
deleted bit of an even-weight vector is recoverable as the parity of the
rest.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hypercube import Code, append_parity, delete_coordinate
from .signatures import _evaluate_static


def even_words(dim: int) -> np.ndarray:
    words = np.arange(1 << dim, dtype=np.uint32)
    return words[(np.bitwise_count(words) & 1) == 0]


def odd_mask(dim: int) -> np.ndarray:
    words = np.arange(1 << dim, dtype=np.uint32)
    return (np.bitwise_count(words) & 1) == 1


@dataclass(frozen=True)
class DiscriminatingReport:
    dim: int
    radius: int
    size: int
    nc: int
    ns: int
    discriminating: bool
    uncovered: int | None
    unseparated: tuple[int, int] | None


def _check_even(code: Code) -> None:
    for w in code.words:
        if w.bit_count() & 1:
            raise ValueError(f"codeword {w} has odd weight; all must be even")


def discriminating_report(code: Code, radius: int) -> DiscriminatingReport:
    """Nonemptiness/distinctness of odd-vertex cover sets, with witnesses."""
    if radius % 2 == 0:
        raise ValueError("the property is defined for odd radii only")
    if radius > code.dim:
        raise ValueError(f"radius {radius} out of range for dim {code.dim}")
    _check_even(code)
    words = np.array(code.words, dtype=np.uint32)
    nc, ns, uncovered, pair = _evaluate_static(
        words, code.dim, radius, True, target_mask=odd_mask(code.dim)
    )
    return DiscriminatingReport(
        dim=code.dim,
        radius=radius,
        size=len(code),
        nc=nc,
        ns=ns,
        discriminating=(nc + ns == 0),
        uncovered=uncovered,
        unseparated=pair,
    )


def is_discriminating(code: Code, radius: int) -> bool:
    return discriminating_report(code, radius).discriminating


def to_discriminating(code: Code) -> Code:
    """Append each codeword's parity bit; output lives in the even half
    of F^{n+1} and is r-discriminating there whenever the input is
    r-identifying (r odd)."""
    return Code.from_vectors(append_parity(v) for v in code.vectors())


def to_identifying(code: Code, pos: int | None = None) -> Code:
    """Delete one coordinate (1-based; default the last).

    For an all-even code the deletion is injective, and it turns an
    r-discriminating code of F^n into an r-identifying code of F^{n-1}
    for any choice of coordinate.
    """
    _check_even(code)
    if pos is None:
        pos = code.dim
    out = Code.from_vectors(delete_coordinate(v, pos) for v in code.vectors())
    assert len(out) == len(code), "coordinate deletion must stay injective"
    return out
