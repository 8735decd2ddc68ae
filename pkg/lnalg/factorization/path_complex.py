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

"""The acyclic complex P(W) and the factorization of chain maps."""

from lnalg.base import NotAcyclicFibration
from lnalg.exactla.chain_complex import ChainComplex, ChainMap, is_quasi_isomorphism
from lnalg.exactla.graded_space import GradedVectorSpace, direct_sum
from lnalg.exactla.linear_map import GradedLinearMap, is_surjective_in_degrees


class PathComplexData:
    """The contractible complex P(W) of a non-negatively graded complex W.

    For every basis vector ``e`` of W in degree ``i >= 1`` there are
    basis vectors ``x(e)`` in degree ``i`` and ``y(e)`` in degree
    ``i - 1`` with ``d x(e) = y(e)``.

    Attributes
    ----------
    W : ChainComplex
    complex : ChainComplex
        P(W).
    h : GradedLinearMap
        Contracting homotopy ``y(e) -> x(e)`` of degree +1.
    pi : ChainMap
        ``x(e) -> e`` and ``y(e) -> d e``, surjective in positive degrees.
    """

    def __init__(self, W):
        if W.space.dim and W.space.bottom_degree < 0:
            raise ValueError("P(W) is only defined for non-negatively graded W.")
        self.W = W
        positive = [e for e in range(W.space.dim) if W.space.degree(e) >= 1]
        basis = []
        self._x = {}
        self._y = {}
        for e in positive:
            self._x[e] = len(basis)
            basis.append((f"x({W.space.name(e)})", W.space.degree(e)))
        for e in positive:
            self._y[e] = len(basis)
            basis.append((f"y({W.space.name(e)})", W.space.degree(e) - 1))
        space = GradedVectorSpace(basis)
        d = GradedLinearMap(
            space, space, {self._x[e]: {self._y[e]: 1} for e in positive}, -1
        )
        self.complex = ChainComplex(space, d)
        self.h = GradedLinearMap(
            space, space, {self._y[e]: {self._x[e]: 1} for e in positive}, 1
        )
        columns = {self._x[e]: {e: 1} for e in positive}
        columns.update({self._y[e]: W.d.column(e) for e in positive})
        self.pi = ChainMap(self.complex, W, GradedLinearMap(space, W.space, columns))

    @property
    def space(self):
        return self.complex.space

    def x(self, e):
        """Index of ``x(e)`` for a basis index ``e`` of W."""
        return self._x[e]

    def y(self, e):
        return self._y[e]

    def is_y(self, i):
        return i >= len(self._x)

    def __repr__(self):
        return f"<PathComplexData: dimensions {self.space.dimensions}>"


def path_complex(W):
    return PathComplexData(W)


def factor_chain_map(f):
    """Factor a chain map ``f: V -> W`` through ``V + P(W)``.

    The inclusion ``j`` is an injective quasi-isomorphism and
    ``p = f + pi`` is surjective in positive degrees.

    Returns
    -------
    middle : ChainComplex
    j : ChainMap
    p : ChainMap

    Raises
    ------
    NotAcyclicFibration
        If one of the verified properties fails.
    """
    f.check()
    V = f.source
    path = path_complex(f.target)
    space, (_, offset) = direct_sum(V.space, path.space)
    columns = dict(V.d.columns)
    for i, col in path.complex.d.columns.items():
        columns[i + offset] = {k + offset: c for k, c in col.items()}
    middle = ChainComplex(space, GradedLinearMap(space, space, columns, -1))
    j = ChainMap(
        V,
        middle,
        GradedLinearMap(V.space, space, {i: {i: 1} for i in range(V.space.dim)}),
    )
    p_columns = dict(f.linear.columns)
    for i, col in path.pi.linear.columns.items():
        p_columns[i + offset] = col
    p = ChainMap(middle, f.target, GradedLinearMap(space, f.target.space, p_columns))
    p.check()
    if not (p.linear @ j.linear) == f.linear:
        raise NotAcyclicFibration("The factorization does not compose to the map.")
    if not j.linear.is_injective_in_degrees() or not is_quasi_isomorphism(j):
        raise NotAcyclicFibration("The inclusion is not a quasi-isomorphism.")
    positive = [d for d in f.target.space.support if d > 0]
    if not is_surjective_in_degrees(p.linear, positive):
        raise NotAcyclicFibration("The projection is not surjective.")
    return middle, j, p
