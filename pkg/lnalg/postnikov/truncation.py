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

"""Postnikov truncations of Lie n-algebras.

For ``m >= 0`` the truncations agree with ``L`` below degree ``m`` and
vanish above it. In degree ``m``, ``tau_{<=m} L`` is ``coker d_{m+1}``
and ``tau_{<m} L`` is ``im d_m``. Brackets and morphisms are pushed
through the projections ``p`` on representatives.
"""

from lnalg.base import AxiomViolation
from lnalg.coalgebra.structure_maps import CoalgebraMorphismData, CoderivationData
from lnalg.coalgebra.words import multiply, vector_as_element, words
from lnalg.exactla.elimination import kernel, matrix_from_columns, rref
from lnalg.exactla.graded_space import GradedVectorSpace
from lnalg.exactla.linear_map import GradedLinearMap
from lnalg.exactla.subspace import Subspace
from lnalg.exactla.vector import format_vector
from lnalg.linfty.algebra import LieNAlgebra
from lnalg.linfty.morphism import LInftyMorphism, morphism_arity_bound

LESS_EQUAL = "<="
LESS = "<"

_KINDS = {"<=": LESS_EQUAL, "≤": LESS_EQUAL, "<": LESS}


def _kind(kind):
    try:
        return _KINDS[kind]
    except KeyError:
        raise ValueError(f"Truncation kind must be '<=' or '<', got {kind!r}.")


def _complement(space, degree, vectors):
    """Unit vectors of `degree` completing `vectors` to a basis."""
    cols = space.indices_in_degree(degree)
    candidates = list(vectors) + [{i: 1} for i in cols]
    matrix = matrix_from_columns(cols, range(len(candidates)), candidates.__getitem__)
    _, pivots = rref(matrix)
    return [cols[j - len(vectors)] for j in pivots if j >= len(vectors)]


class Truncation:
    """The truncation ``tau_{<=m} L`` or ``tau_{<m} L`` of a Lie n-algebra.

    Attributes
    ----------
    source : LieNAlgebra
    m : int
    kind : str
        ``"<="`` or ``"<"``.
    algebra : LieNAlgebra
        The truncated Lie (m+1)-algebra.
    projection : LInftyMorphism
        The strict projection ``p: L -> tau L``.
    representative : GradedLinearMap
        A linear section of ``p``, mapping every basis vector of the
        truncation to the representative used for the brackets.
    boundaries : list of dict
        Basis of ``im d_{m+1}`` in degree ``m`` of ``L`` (``"<="`` only).
    image : Subspace or None
        ``im d_m`` inside ``L``, whose basis is the degree ``m`` basis of
        the truncation (``"<"`` only).
    """

    def __init__(self, L, m, kind=LESS_EQUAL, check=True):
        if m < 0:
            raise ValueError(f"Truncation degree must be non-negative, got {m}.")
        self.source = L
        self.m = int(m)
        self.kind = _kind(kind)
        space = L.space
        d = L.differential
        lower = [i for i in range(space.dim) if space.degree(i) < m]
        basis = [(space.name(i), space.degree(i)) for i in lower]
        projection = {i: {a: 1} for a, i in enumerate(lower)}
        representative = {a: {i: 1} for a, i in enumerate(lower)}
        n0 = len(basis)
        self.boundaries = []
        self.image = None
        if self.kind == LESS_EQUAL:
            above = space.indices_in_degree(m + 1)
            _, pivots = rref(d.matrix(m + 1))
            self.boundaries = [d.column(above[j]) for j in pivots]
            complement = _complement(space, m, self.boundaries)
            for a, i in enumerate(complement):
                basis.append((space.name(i), m))
                representative[n0 + a] = {i: 1}
            nb = len(self.boundaries)
            split = Subspace(
                space, self.boundaries + [{i: 1} for i in complement]
            )
            for i in space.indices_in_degree(m):
                coordinates = split.coordinates({i: 1})
                column = {n0 + k - nb: c for k, c in coordinates.items() if k >= nb}
                if column:
                    projection[i] = column
        else:
            top = space.indices_in_degree(m)
            _, pivots = rref(d.matrix(m)) if m > 0 else (None, ())
            sources = [top[j] for j in pivots]
            names = [f"d({space.name(i)})" for i in sources]
            self.image = Subspace(space, [d.column(i) for i in sources], names)
            for a, (i, name) in enumerate(zip(sources, names)):
                basis.append((name, m))
                representative[n0 + a] = {i: 1}
            for i in top:
                value = d.column(i)
                if value:
                    projection[i] = {
                        n0 + k: c for k, c in self.image.coordinates(value).items()
                    }
        truncated = GradedVectorSpace(basis)
        self.representative = GradedLinearMap(truncated, space, representative)
        linear = GradedLinearMap(space, truncated, projection)
        if check:
            self._check_well_defined(linear)
        self.algebra = LieNAlgebra(
            truncated, self._structure(truncated, linear), check=check
        )
        self.projection = LInftyMorphism.strict(L, self.algebra, linear, check=check)

    def _check_well_defined(self, linear):
        """``p l_2(z, x) = 0`` for ``z`` in ``ker p`` of degree ``m`` and
        ``x`` of degree 0."""
        L = self.source
        cols = L.space.indices_in_degree(self.m)
        for _, vector in kernel(linear.matrix(self.m)):
            z = {cols[k]: v for k, v in enumerate(vector) if v != 0}
            for x in L.space.indices_in_degree(0):
                if linear(L.bracket(z, {x: 1})):
                    raise AxiomViolation(
                        "Truncated bracket is not well defined.",
                        witness=(format_vector(L.space, z), L.space.name(x)),
                    )

    def _structure(self, truncated, linear):
        L = self.source
        suspended = truncated.suspend()
        bound = truncated.top_degree + 2 if truncated.dim else 1
        degrees = {d + 1 for d in suspended.support}
        entries = {}
        for word in words(suspended, bound, degrees):
            element = multiply(
                L.suspended,
                *(vector_as_element(self.representative.column(i)) for i in word),
            )
            value = linear(L.structure.evaluate(element))
            if value:
                entries[word] = value
        return CoderivationData(suspended, entries)

    @property
    def name(self):
        symbol = "≤" if self.kind == LESS_EQUAL else "<"
        return f"τ{symbol}{self.m}"

    def __repr__(self):
        return f"<Truncation {self.name}: dimensions {self.algebra.space.dimensions}>"


def truncate(L, m, kind=LESS_EQUAL, check=True):
    """The Postnikov truncation ``tau_{<=m} L`` or ``tau_{<m} L``.

    Parameters
    ----------
    L : LieNAlgebra
    m : int
        Non-negative truncation degree.
    kind : str, optional
        ``"<="`` (default) or ``"<"``.
    check : bool, optional
        Whether to verify that the truncated brackets are well defined
        and satisfy the Jacobi identities. Default is True.

    Returns
    -------
    Truncation

    Raises
    ------
    AxiomViolation
        If ``p l_2`` depends on the representative.
    """
    return Truncation(L, m, kind, check=check)


def truncate_morphism(phi, m, kind=LESS_EQUAL, source=None, target=None):
    """The morphism ``tau phi`` with ``tau phi_k = p' phi_k`` on
    representatives.

    Parameters
    ----------
    phi : LInftyMorphism
    m : int
    kind : str, optional
    source, target : Truncation, optional
        Truncations of the source and target of `phi`, computed if not
        given.

    Returns
    -------
    LInftyMorphism
    """
    kind = _kind(kind)
    source = truncate(phi.source, m, kind) if source is None else source
    target = truncate(phi.target, m, kind) if target is None else target
    if (source.m, source.kind) != (m, kind) or (target.m, target.kind) != (m, kind):
        raise ValueError("Truncations do not match the requested degree and kind.")
    sT = source.algebra.suspended
    tT = target.algebra.suspended
    linear = target.projection.linear
    entries = {}
    for word in words(sT, morphism_arity_bound(target.algebra), set(tT.support)):
        element = multiply(
            phi.source.suspended,
            *(vector_as_element(source.representative.column(i)) for i in word),
        )
        value = linear(phi.data.evaluate(element))
        if value:
            entries[word] = value
    data = CoalgebraMorphismData(sT, tT, entries)
    return LInftyMorphism(source.algebra, target.algebra, data)


def connecting_morphism(source, target):
    """The strict morphism between two truncations of the same algebra.

    This is ``q_{<=m}: tau_{<=m} L -> tau_{<m} L`` or
    ``q_{<m+1}: tau_{<m+1} L -> tau_{<=m} L``, the target projection
    applied to the source representatives.

    Returns
    -------
    LInftyMorphism
    """
    if source.source != target.source:
        raise ValueError("Truncations of different algebras.")
    linear = target.projection.linear @ source.representative
    return LInftyMorphism.strict(source.algebra, target.algebra, linear)
