# -*- coding: utf-8 -*-
# Copyright 2018-2021 the lnalg developers
#
# This file is part of lnalg.
#
# lnalg is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# lnalg is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with lnalg.  If not, see <http://www.gnu.org/licenses/>.

"""Curvature, Maurer-Cartan elements and their functoriality.

For a degree -1 element ``a`` of a tame L-infinity algebra the curvature
is ``curv(a) = -s^-1 pr delta(exp(-sa) - 1)``, i.e.

``curv(a) = l_1(a) + sum_{k >= 2} (-1)^(k+1) / k! s^-1 delta^1_k(sa, ..., sa)``,

and a morphism pushes ``a`` forward to ``-s^-1 pr F(exp(-sa) - 1)``.
"""

from fractions import Fraction
from math import factorial
import warnings

import numpy as np
import sympy

from lnalg.base import AxiomViolation, NotInSubspace, NotMatched, NotMC
from lnalg.coalgebra.words import multiply, vector_as_element
from lnalg.exactla.vector import add_term, add_to, combine, format_vector
from lnalg.linfty.morphism import inverse
from lnalg.maurer_cartan.tensor import (
    tensor,
    tensor_morphism,
    tensor_space,
    tensored_value,
)
from lnalg.scalar import to_rational

DEFAULT_SAMPLE_VALUES = (-2, -1, Fraction(-1, 2), 0, Fraction(1, 2), 1, 2)
DEFAULT_SAMPLE_CAP = 200


def _exponential_sum(suspended, value, a, bound):
    """``-sum_k (-1)^k / k! value((sa)^k)`` for ``k <= bound``."""
    element = vector_as_element(a)
    out = {}
    power = {}
    for k in range(1, bound + 1):
        power = element if k == 1 else multiply(suspended, power, element)
        if not power:
            break
        coefficient = Fraction((-1) ** (k + 1), factorial(k))
        for word, c in power.items():
            add_to(out, value(word), coefficient * c)
    return out


def _check_degree(T, a):
    for i in a:
        if T.space.degree(i) != -1:
            raise ValueError(
                f"'{T.space.name(i)}' is not in degree -1 of the tensor algebra."
            )


def mc_point(T, values):
    """A degree -1 element of `T` from basis names and rationals.

    Parameters
    ----------
    T : TensorAlgebra
    values : dict
        Maps names ``x⊗b`` to rationals.

    Returns
    -------
    dict
    """
    a = {}
    for name, value in values.items():
        value = to_rational(value)
        if value:
            a[T.space.index(name)] = value
    _check_degree(T, a)
    return a


def curvature(T, a):
    """The curvature of a degree -1 element.

    Parameters
    ----------
    T : TensorAlgebra
    a : dict
        Degree -1 element, basis indices to rationals.

    Returns
    -------
    dict
        Degree -2 element of `T`.

    Examples
    --------
    For ``l_2(e1, e1) = ẽ``, ``l_2(e2, e2) = -ẽ`` and ``B = Q[θ]/(θ^3)``
    the curvature of ``x e1⊗θ + y e2⊗θ`` is ``(x^2 - y^2)/2 ẽ⊗θ^2``.
    """
    _check_degree(T, a)
    return _exponential_sum(T.suspended, T.value, a, T.bound)


def is_mc(T, a):
    """Whether `a` is a Maurer-Cartan element of `T`."""
    return not curvature(T, a)


def pushforward(f, B, a, source=None, target=None, check=True):
    """The image ``f_*(a)`` of a degree -1 element under ``f^B``.

    Parameters
    ----------
    f : LInftyMorphism
    B : BoundedCdga
    a : dict
        Degree -1 element of ``L x B``.
    source, target : TensorAlgebra, optional
        ``L x B`` and ``L' x B``, built if needed.
    check : bool, optional
        Whether to verify that `a` and the result are Maurer-Cartan.
        Default is True.

    Returns
    -------
    dict
        Degree -1 element of ``L' x B``.

    Raises
    ------
    NotMC
        If `a` is not Maurer-Cartan.
    """
    if check:
        source = tensor(f.source, B, check=False) if source is None else source
        target = tensor(f.target, B, check=False) if target is None else target
        curv = curvature(source, a)
        if curv:
            raise NotMC(
                "Point is not Maurer-Cartan.", witness=format_vector(source.space, curv)
            )
    suspended = tensor_space(f.source.space, B).suspend()
    out = _exponential_sum(suspended, tensor_morphism(f, B), a, f.data.bound)
    if check and not is_mc(target, out):
        raise AxiomViolation(
            "Pushforward is not Maurer-Cartan.", witness=format_vector(target.space, out)
        )
    return out


def _symbols(n, symbols):
    if symbols is None:
        symbols = sympy.symbols(f"x0:{n}") if n else ()
    symbols = tuple(symbols)
    if len(symbols) != n:
        raise ValueError(f"Expected {n} symbols, got {len(symbols)}.")
    return symbols


def _as_polynomials(space, value):
    out = {}
    for i, c in sorted(value.items()):
        c = sympy.expand(c)
        if c != 0:
            out[space.name(i)] = c
    return out


def curvature_polynomial(T, symbols=None):
    """The curvature as polynomials in the coordinates of ``(L x B)_{-1}``.

    Parameters
    ----------
    T : TensorAlgebra
    symbols : sequence of sympy.Symbol, optional
        One per basis vector of degree -1, in basis order. Defaults to
        ``x0, x1, ...``.

    Returns
    -------
    dict
        Maps basis names of degree -2 to nonzero sympy polynomials.
    """
    indices = T.degree_minus_one()
    a = dict(zip(indices, _symbols(len(indices), symbols)))
    return _as_polynomials(T.space, _exponential_sum(T.suspended, T.value, a, T.bound))


def pushforward_polynomial(f, B, symbols=None):
    """``f_*`` as polynomials in the coordinates of ``(L x B)_{-1}``."""
    space = tensor_space(f.source.space, B)
    indices = space.indices_in_degree(-1)
    a = dict(zip(indices, _symbols(len(indices), symbols)))
    value = _exponential_sum(space.suspend(), tensor_morphism(f, B), a, f.data.bound)
    return _as_polynomials(tensor_space(f.target.space, B), value)


def sample_grid(dim, values=DEFAULT_SAMPLE_VALUES, cap=DEFAULT_SAMPLE_CAP, seed=None):
    """Deterministic grid of rational sample points.

    Parameters
    ----------
    dim : int
        Number of coordinates.
    values : sequence, optional
        Values per coordinate, by default ``-2, -1, -1/2, 0, 1/2, 1, 2``.
    cap : int, optional
        Largest number of points, by default 200. Larger grids are
        truncated with a warning.
    seed : int, optional
        Shuffles the order of the points. The set of points does not
        depend on it.

    Returns
    -------
    list of tuple of Fraction
    """
    values = [to_rational(v) for v in values]
    if dim == 0:
        return [()]
    axes = [np.arange(len(values))] * dim
    grids = np.meshgrid(*axes, indexing="ij")
    indices = np.stack([g.ravel() for g in grids], axis=-1)
    if len(indices) > cap:
        warnings.warn(
            f"Sample grid of {len(indices)} points is truncated to {cap} points."
        )
        indices = indices[:cap]
    if seed is not None:
        indices = indices[np.random.default_rng(seed).permutation(len(indices))]
    return [tuple(values[k] for k in row) for row in indices]


class MCPullback:
    """Maurer-Cartan sets of a pullback square tensored with a cdga.

    Matched pairs ``(a', a)`` with ``g_*(a') = f_*(a)`` correspond to
    Maurer-Cartan elements of ``L_P x B``: the pair is moved into
    ``L_P x B`` by ``J^B`` and back by ``H^B``.

    Parameters
    ----------
    square : PullbackSquare
    B : BoundedCdga
    check : bool, optional
        Whether to verify the tensored L-infinity relations. Default is
        True.
    """

    def __init__(self, square, B, check=True):
        self.square = square
        self.B = B
        self.source = tensor(square.f.source, B, check=check)
        self.base = tensor(square.g.source, B, check=check)
        self.target = tensor(square.f.target, B, check=check)
        self.pullback = tensor(square.algebra, B, check=check)
        strict = square.strict
        self._E = strict.E.space
        self._suspended = tensor_space(self._E, B).suspend()

    def _transport(self, data, point):
        def _value(word):
            return tensored_value(self._E, self._E, self.B, data, word)

        return _exponential_sum(self._suspended, _value, point, data.bound)

    def _join(self, a_prime, b):
        """The pair as a degree -1 element of ``E x B``."""
        dim_B = self.B.space.dim
        offset = self.square.strict.offset
        point = {}
        for t, c in a_prime.items():
            add_term(point, t, c)
        for t, c in b.items():
            x, j = divmod(t, dim_B)
            add_term(point, (x + offset) * dim_B + j, c)
        return point

    def _coordinates(self, point):
        dim_B = self.B.space.dim
        subspace = self.square.strict.subspace
        by_b = {}
        for t, c in point.items():
            x, j = divmod(t, dim_B)
            by_b.setdefault(j, {})[x] = c
        u = {}
        for j, vector in by_b.items():
            try:
                coordinates = subspace.coordinates(vector)
            except NotInSubspace as error:
                raise AxiomViolation(
                    "Transported pair does not lie in the pullback.",
                    witness=error.witness,
                ) from error
            for k, c in coordinates.items():
                u[k * dim_B + j] = c
        return u

    def phi(self, a_prime, a, check=True):
        """The Maurer-Cartan element of ``L_P x B`` of a matched pair.

        Parameters
        ----------
        a_prime : dict
            Maurer-Cartan element of ``L' x B``.
        a : dict
            Maurer-Cartan element of ``L x B``.
        check : bool, optional
            Whether to verify the result. Default is True.

        Returns
        -------
        dict

        Raises
        ------
        NotMC
            If `a_prime` or `a` is not Maurer-Cartan.
        NotMatched
            If ``g_*(a') != f_*(a)``.
        """
        square, B = self.square, self.B
        for T, point in ((self.base, a_prime), (self.source, a)):
            curv = curvature(T, point)
            if curv:
                raise NotMC(
                    "Point is not Maurer-Cartan.", witness=format_vector(T.space, curv)
                )
        lhs = pushforward(square.g, B, a_prime, check=False)
        rhs = pushforward(square.f, B, a, check=False)
        if lhs != rhs:
            raise NotMatched(
                "g_*(a') and f_*(a) differ.",
                witness=format_vector(self.target.space, combine((1, lhs), (-1, rhs))),
            )
        b = a
        if square.psi is not None:
            b = pushforward(inverse(square.psi), B, a, check=False)
        strict = square.strict
        pair = self._join(a_prime, b)
        u = self._coordinates(self._transport(strict.J, pair))
        if check:
            if self._transport(strict.H, self._embed(u)) != pair:
                raise AxiomViolation("H^B does not invert J^B on the pair.")
            if not is_mc(self.pullback, u):
                raise AxiomViolation(
                    "Image is not Maurer-Cartan.",
                    witness=format_vector(self.pullback.space, u),
                )
            if self.h(u) != (a_prime, a):
                raise AxiomViolation("Image does not project to the pair.")
        return u

    def _embed(self, u):
        dim_B = self.B.space.dim
        vectors = self.square.strict.subspace.vectors
        point = {}
        for t, c in u.items():
            k, j = divmod(t, dim_B)
            for x, e in vectors[k].items():
                add_term(point, x * dim_B + j, c * e)
        return point

    def h(self, u):
        """The matched pair ``(q'_*(u), q_*(u))`` of an element of
        ``L_P x B``."""
        square, B = self.square, self.B
        return (
            pushforward(square.q_prime, B, u, check=False),
            pushforward(square.q, B, u, check=False),
        )

    def __repr__(self):
        return f"<MCPullback: {self.pullback}>"


def mc_pullback_bijection(square, B, a_prime, a, check=True):
    """The Maurer-Cartan element of the pullback of a matched pair.

    Parameters
    ----------
    square : PullbackSquare
        Pullback of a fibration ``f`` along ``g``.
    B : BoundedCdga
    a_prime, a : dict
        Maurer-Cartan elements of ``L' x B`` and ``L x B`` with
        ``g_*(a') = f_*(a)``.

    Returns
    -------
    dict
        Maurer-Cartan element ``u`` of ``L_P x B`` with ``q'_*(u) = a'``
        and ``q_*(u) = a``.
    """
    return MCPullback(square, B).phi(a_prime, a, check=check)
