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

from lnalg.base import NotInSubspace
from lnalg.exactla.elimination import inverse, matrix_from_columns, rref
from lnalg.exactla.graded_space import GradedVectorSpace
from lnalg.exactla.linear_map import GradedLinearMap
from lnalg.exactla.vector import add_to, cleaned, format_vector


class Subspace:
    """Graded subspace of an ambient space with a chosen basis.

    The subspace is itself a :class:`GradedVectorSpace` (:attr:`space`)
    whose basis vectors are the given homogeneous vectors of the ambient
    space.
    """

    def __init__(self, ambient, vectors, names=None):
        """
        Parameters
        ----------
        ambient : GradedVectorSpace
        vectors : list of dict
            Nonzero homogeneous vectors of `ambient`, linearly independent.
        names : list of str, optional
            Names of the subspace basis vectors. Default is ``v0, v1,...``.

        Raises
        ------
        ValueError
            If a vector is zero, inhomogeneous or the vectors are
            linearly dependent.
        """
        self.ambient = ambient
        self.vectors = [cleaned(v) for v in vectors]
        names = [f"v{i}" for i in range(len(vectors))] if names is None else names
        if len(names) != len(self.vectors):
            raise ValueError("Number of names and vectors differ.")
        degrees = []
        for name, v in zip(names, self.vectors):
            if not v:
                raise ValueError(f"Basis vector '{name}' of the subspace is zero.")
            vd = {ambient.degree(i) for i in v}
            if len(vd) != 1:
                raise ValueError(f"Basis vector '{name}' is not homogeneous.")
            degrees.append(vd.pop())
        self.space = GradedVectorSpace(list(zip(names, degrees)))

        # Per degree, the pivot rows of the basis matrix give an
        # invertible block used to read off coordinates
        self._solvers = {}
        for d in self.space.support:
            cols = self.space.indices_in_degree(d)
            rows = ambient.indices_in_degree(d)
            matrix = matrix_from_columns(rows, cols, lambda k: self.vectors[k])
            _, pivot_rows = rref(matrix.T)
            if len(pivot_rows) != len(cols):
                raise ValueError(f"Subspace basis is dependent in degree {d}.")
            block = matrix.extract(list(pivot_rows), list(range(len(cols))))
            self._solvers[d] = (
                cols,
                [rows[r] for r in pivot_rows],
                inverse(block),
            )

    @property
    def dim(self):
        return self.space.dim

    def embed(self, coordinates):
        """Ambient vector with the given subspace coordinates."""
        out = {}
        for k, c in coordinates.items():
            add_to(out, self.vectors[k], c)
        return out

    def coordinates(self, vector):
        """Coordinates of an ambient vector in the subspace basis.

        Raises
        ------
        NotInSubspace
            If the vector does not lie in the subspace.
        """
        coords = {}
        for d in {self.ambient.degree(i) for i in vector}:
            if d not in self._solvers:
                raise NotInSubspace(
                    f"Subspace is zero in degree {d}.",
                    witness=format_vector(self.ambient, vector),
                )
            cols, pivot_rows, inv = self._solvers[d]
            values = [vector.get(r, 0) for r in pivot_rows]
            for a, k in enumerate(cols):
                c = sum(inv[a][b] * values[b] for b in range(len(values)))
                if c != 0:
                    coords[k] = c
        if self.embed(coords) != cleaned(vector):
            raise NotInSubspace(
                "Vector is not in the subspace.",
                witness=format_vector(self.ambient, vector),
            )
        return coords

    def contains(self, vector):
        try:
            self.coordinates(vector)
        except NotInSubspace:
            return False
        return True

    def inclusion(self):
        """Inclusion of the subspace as a degree 0 linear map."""
        return GradedLinearMap(
            self.space, self.ambient, dict(enumerate(self.vectors))
        )

    def __repr__(self):
        return (
            f"<Subspace: dim {self.dim} of {self.ambient.dim}. "
            f"dimensions {self.space.dimensions}>"
        )
