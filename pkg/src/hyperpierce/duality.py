"""Radon pairs of a primal configuration <-> linear hyperplanes in its Gale dual.

A Radon pair's signed weight vector ``t`` is an affine dependence, hence a
vector in the dual row space: ``t_j = <b_j, alpha>`` for a unique
``alpha``.  Conversely any ``alpha`` gives such a dependence, and splitting
it by sign gives a Radon pair that is then minimalized.

The dual configuration only needs the right row space (the nullspace of
the lifted primal matrix); it need not be the canonical transform.
"""
from __future__ import annotations

from .exact import Matrix, dot, same_row_space, solve
from .gale import LinearHyperplane, PointConfig, SignPattern, gale_matrix
from .radon import InvalidRadonPair, RadonPair, minimalize


class NotSeparating(ValueError):
    """The hyperplane has no dual point strictly on one of its sides."""


def _check_dual_pair(primal: PointConfig, dual: PointConfig) -> None:
    if primal.n != dual.n:
        raise ValueError(f"primal has {primal.n} points, dual has {dual.n}")
    dual_rows = [tuple(p[i] for p in dual.points) for i in range(dual.dim)]
    if not same_row_space(gale_matrix(primal), dual_rows, primal.n):
        raise ValueError("dual row space is not the space of affine dependences of the primal")


def hyperplane_from_radon(dual: PointConfig, pair: RadonPair,
                          primal: PointConfig) -> tuple[LinearHyperplane, SignPattern]:
    """Hyperplane through the dual points outside the pair, splitting its two sides.

    The returned sign pattern is taken with respect to the canonical
    (first-nonzero-positive) normal, so the pair's plus side may show as
    ``-``; the pattern is determined up to this global flip.
    """
    if not pair.verify(primal):
        raise InvalidRadonPair("pair fails exact verification on the primal configuration")
    _check_dual_pair(primal, dual)
    t = pair.signed_coefficients(primal.n)
    # rows of this matrix are the dual points b_j, so it maps alpha to (<b_j, alpha>)_j
    alpha = solve(Matrix(dual.points, ncols=dual.dim), t)
    if alpha is None:  # pragma: no cover - excluded by the row-space check
        raise ArithmeticError("dependence is not in the dual row space")
    H = LinearHyperplane(alpha)
    return H, H.sign_pattern(dual)


def radon_from_hyperplane(primal: PointConfig, dual: PointConfig, H: LinearHyperplane) -> RadonPair:
    """Minimal Radon pair with sides inside the open sides of ``H``.

    ``t_j = <b_j, alpha>`` is split into ``J+``/``J-``, normalized to convex
    weights on each side, and shrunk by :func:`~hyperpierce.radon.minimalize`.
    The plus side of the result lies in ``J+``.
    """
    if H.dim != dual.dim:
        raise ValueError(f"hyperplane lives in R^{H.dim}, dual points in R^{dual.dim}")
    t = [dot(b, H.normal) for b in dual.points]
    J_plus = [j for j, x in enumerate(t) if x > 0]
    J_minus = [j for j, x in enumerate(t) if x < 0]
    # never true for a genuine dual: its points sum to zero and span
    if not J_plus or not J_minus:
        raise NotSeparating("hyperplane leaves every dual point on one closed side")
    _check_dual_pair(primal, dual)
    sp = sum(t[j] for j in J_plus)
    sm = sum(t[j] for j in J_minus)
    lam_plus = [t[j] / sp for j in J_plus]
    lam_minus = [t[j] / sm for j in J_minus]
    pair = RadonPair(J_plus, J_minus, lam_plus, lam_minus)
    if not pair.verify(primal):  # pragma: no cover - guaranteed by the row-space check
        raise ArithmeticError("normalized dependence does not verify")
    return minimalize(primal, pair)

