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

from collections import OrderedDict
import numbers

import numpy as np


class GradedVectorSpace:
    """Finitely supported graded vector space over the rationals.

    The space is given by an ordered basis of named, degree-tagged
    vectors. Vectors in the space are sparse dictionaries mapping basis
    indices to :class:`~fractions.Fraction` coefficients.
    """

    def __init__(self, basis=None):
        """
        Parameters
        ----------
        basis : list of tuple of (str, int), optional
            Basis vector names and degrees. Names must be unique. An
            empty space is created if None is passed (default).
        """
        basis = [] if basis is None else list(basis)
        names = []
        degrees = []
        for item in basis:
            try:
                name, degree = item
            except (TypeError, ValueError):
                raise ValueError(f"Basis entry {item!r} is not a (name, degree) pair.")
            if not isinstance(degree, numbers.Integral) or isinstance(degree, bool):
                raise ValueError(f"Degree {degree!r} of '{name}' is not an integer.")
            names.append(str(name))
            degrees.append(int(degree))
        if len(set(names)) != len(names):
            duplicates = sorted({n for n in names if names.count(n) > 1})
            raise ValueError(f"Basis names must be unique, got duplicates {duplicates}.")
        self._names = tuple(names)
        self._degrees = tuple(degrees)
        self._index = {n: i for i, n in enumerate(names)}
        # Canonical letter order is by (degree, name)
        self._order = tuple(
            sorted(range(len(names)), key=lambda i: (degrees[i], names[i]))
        )
        self._rank = {i: r for r, i in enumerate(self._order)}
        by_degree = OrderedDict()
        for i in range(len(names)):
            by_degree.setdefault(degrees[i], []).append(i)
        self._by_degree = {d: tuple(v) for d, v in by_degree.items()}

    @property
    def names(self):
        """tuple of str : Basis vector names in basis order."""
        return self._names

    @property
    def degrees(self):
        """tuple of int : Basis vector degrees in basis order."""
        return self._degrees

    @property
    def basis(self):
        return list(zip(self._names, self._degrees))

    @property
    def dim(self):
        return len(self._names)

    @property
    def support(self):
        """tuple of int : Sorted degrees in which the space is nonzero."""
        return tuple(sorted(self._by_degree))

    @property
    def top_degree(self):
        return max(self._degrees) if self._degrees else None

    @property
    def bottom_degree(self):
        return min(self._degrees) if self._degrees else None

    @property
    def dimensions(self):
        """dict : Dimension per degree, for degrees in the support."""
        return {d: len(self._by_degree[d]) for d in self.support}

    @property
    def order(self):
        """tuple of int : Basis indices sorted by (degree, name)."""
        return self._order

    def dimension_table(self):
        """Return an integer array with rows ``(degree, dimension)``."""
        table = np.array(
            [(d, len(self._by_degree[d])) for d in self.support], dtype=int
        )
        return table.reshape(-1, 2)

    def index(self, name):
        try:
            return self._index[str(name)]
        except KeyError:
            raise ValueError(f"'{name}' is not a basis vector of {self}.")

    def degree(self, i):
        return self._degrees[i]

    def name(self, i):
        return self._names[i]

    def rank(self, i):
        """Position of basis index `i` in the canonical letter order."""
        return self._rank[i]

    def indices_in_degree(self, degree):
        return self._by_degree.get(degree, ())

    def dim_in_degree(self, degree):
        return len(self._by_degree.get(degree, ()))

    def suspend(self, shift=1):
        """Return the space with every degree raised by `shift`."""
        return GradedVectorSpace([(n, d + shift) for n, d in self.basis])

    def desuspend(self, shift=1):
        return self.suspend(-shift)

    def rename(self, names):
        return GradedVectorSpace(list(zip(names, self._degrees)))

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if not isinstance(other, GradedVectorSpace):
            return NotImplemented
        return self._names == other._names and self._degrees == other._degrees

    def __hash__(self):
        return hash((self._names, self._degrees))

    def __repr__(self):
        dims = ", ".join(f"{d}: {n}" for d, n in self.dimensions.items())
        return f"<GradedVectorSpace: dim {self.dim}. dimensions {{{dims}}}>"


def direct_sum(*spaces):
    """Direct sum of graded spaces with basis concatenated in order.

    Basis names clashing with names of earlier summands get primes
    appended until they are unique.

    Returns
    -------
    space : GradedVectorSpace
    offsets : list of int
        Index of the first basis vector of every summand.
    """
    basis = []
    offsets = []
    taken = set()
    for space in spaces:
        offsets.append(len(basis))
        for name, degree in space.basis:
            while name in taken:
                name = name + "'"
            taken.add(name)
            basis.append((name, degree))
    return GradedVectorSpace(basis), offsets
