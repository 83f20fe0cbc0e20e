"""Pasting cubes end to end in a chosen direction.

Two cubes compose in direction j when the plus-face of the first matches
the minus-face of the second.  The composite has extent r_j + s_j in
direction j; evaluation at the seam t_j = r_j uses the left piece.
compose_strict demands the shared face match as a cube (shape included);
compose_lenient only asks the face actions to agree and stretches every
other extent to the pairwise max, which lets degenerate pieces widen.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .core import ComposeNode, EqualityOracle, MooreCube, Shape
from .errors import BadIndex, CompositionUndefined, DimensionMismatch
from .ops import Sign, face

_DEFAULT_ORACLE = EqualityOracle()


def _precheck(a: MooreCube, b: MooreCube, j: int) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot compose dims {a.dim} and {b.dim}")
    if a.space != b.space:
        raise DimensionMismatch(f"cannot compose across spaces {a.space} and {b.space}")
    if not 1 <= j <= a.dim:
        raise BadIndex(f"composition direction {j} out of range 1..{a.dim}")


def _glue(a: MooreCube, b: MooreCube, j: int, extents: tuple[float, ...], lenient: bool) -> MooreCube:
    k = j - 1
    cut = a.shape[k]

    def action(ts: tuple[float, ...]):
        if ts[k] <= cut:
            return a.action(a.clamp(ts))
        return b.action(b.clamp(ts[:k] + (ts[k] - cut,) + ts[k + 1 :]))

    return MooreCube(Shape(extents), a.space, action, ComposeNode(j, lenient, a, b))


def compose_strict(
    a: MooreCube, b: MooreCube, j: int, oracle: EqualityOracle | None = None
) -> MooreCube:
    """Compose in direction j; the shared face must match shape and all."""
    oracle = oracle or _DEFAULT_ORACLE
    _precheck(a, b, j)
    eq = oracle.equals_strict(face(a, j, Sign.PLUS), face(b, j, Sign.MINUS))
    if not eq:
        reason = "action" if eq.reason == "action" else "shape"
        raise CompositionUndefined(
            reason,
            j,
            f"faces in direction {j} differ ({eq.reason}): {eq.detail or eq.witness}",
            witness=eq.witness,
        )
    k = j - 1
    extents = tuple(
        a.shape[i] + b.shape[i] if i == k else a.shape[i] for i in range(a.dim)
    )
    return _glue(a, b, j, extents, lenient=False)


def compose_lenient(
    a: MooreCube, b: MooreCube, j: int, oracle: EqualityOracle | None = None
) -> MooreCube:
    """Compose in direction j requiring only the face actions to agree."""
    oracle = oracle or _DEFAULT_ORACLE
    _precheck(a, b, j)
    eq = oracle.equals_action(face(a, j, Sign.PLUS), face(b, j, Sign.MINUS))
    if not eq:
        raise CompositionUndefined(
            "action",
            j,
            f"face actions in direction {j} differ: {eq.detail or eq.witness}",
            witness=eq.witness,
        )
    k = j - 1
    extents = tuple(
        a.shape[i] + b.shape[i] if i == k else max(a.shape[i], b.shape[i])
        for i in range(a.dim)
    )
    return _glue(a, b, j, extents, lenient=True)


def multi_compose(
    grid, oracle: EqualityOracle | None = None, fold_order: Sequence[int] | None = None
) -> MooreCube:
    """Fold an n-dimensional nested-list grid of n-cubes into one composite.

    The grid reads like a matrix: the innermost lists run along direction 1
    and the outermost along direction n (nesting axis k carries direction
    n - k).  fold_order lists the directions in the order they are
    collapsed (default: highest direction first); by the interchange law
    the result does not depend on it.  A single cube (or [[cube]]-style
    singleton nesting) is returned unchanged.
    """
    oracle = oracle or _DEFAULT_ORACLE
    if isinstance(grid, MooreCube):
        return grid
    try:
        arr = np.array(grid, dtype=object)
    except ValueError as exc:
        raise DimensionMismatch(f"ragged grid: {exc}") from None
    cubes = arr.reshape(-1)
    if cubes.size == 0:
        raise DimensionMismatch("empty grid")
    if not all(isinstance(c, MooreCube) for c in cubes):
        raise DimensionMismatch("grid entries must be cubes (is the grid ragged?)")
    n = cubes[0].dim
    for c in cubes:
        if c.dim != n:
            raise DimensionMismatch("grid entries must be cubes of equal dimension")
    if arr.ndim != n:
        raise DimensionMismatch(
            f"grid nesting depth {arr.ndim} does not match cube dimension {n}"
        )

    axis_dirs = list(range(n, 0, -1))  # axis k carries direction n - k
    order = list(fold_order) if fold_order is not None else list(range(n, 0, -1))
    if sorted(order) != list(range(1, n + 1)):
        raise BadIndex(f"fold order {order} is not a permutation of 1..{n}")

    for d in order:
        axis = axis_dirs.index(d)
        moved = np.moveaxis(arr, axis, 0)
        cell_shape = moved.shape[1:]
        stack = moved.reshape(moved.shape[0], -1)
        out = np.empty(stack.shape[1], dtype=object)
        for pos in range(stack.shape[1]):
            acc = stack[0, pos]
            for idx in range(1, stack.shape[0]):
                try:
                    acc = compose_strict(acc, stack[idx, pos], d, oracle)
                except CompositionUndefined as exc:
                    cell = np.unravel_index(pos, cell_shape) if cell_shape else ()
                    coord = cell[:axis] + (idx,) + cell[axis:]
                    raise CompositionUndefined(
                        exc.reason,
                        exc.direction,
                        f"grid cell {tuple(int(c) for c in coord)} along "
                        f"direction {d}: {exc}",
                        witness=exc.witness,
                    ) from None
            out[pos] = acc
        arr = out.reshape(cell_shape)
        axis_dirs.remove(d)
    return arr.reshape(-1)[0]
