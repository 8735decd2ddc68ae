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

from lnalg.base import NotAcyclicFibration, NotChainMap, Verdict
from lnalg.exactla.elimination import (
    kernel,
    matrix_from_columns,
    rank,
    rref,
    solve_particular,
)
from lnalg.exactla.graded_space import GradedVectorSpace
from lnalg.exactla.linear_map import (
    GradedLinearMap,
    is_surjective_in_degrees,
    section_of_surjection,
)
from lnalg.exactla.subspace import Subspace
from lnalg.exactla.vector import combine


class ChainComplex:
    """Graded vector space with a differential of degree -1."""

    def __init__(self, space, d=None):
        """
        Parameters
        ----------
        space : GradedVectorSpace
        d : GradedLinearMap or dict, optional
            The differential, or its columns. Zero if None (default).

        Raises
        ------
        ValueError
            If `d` does not have degree -1 or does not square to zero.
        """
        if d is None or isinstance(d, dict):
            d = GradedLinearMap(space, space, d or {}, degree_shift=-1)
        if d.source != space or d.target != space or d.degree_shift != -1:
            raise ValueError("The differential must be a degree -1 endomorphism.")
        if not (d @ d).is_zero():
            raise ValueError("The differential does not square to zero.")
        self.space = space
        self.d = d

    def __repr__(self):
        return f"<ChainComplex: dimensions {self.space.dimensions}>"


class ChainMap:
    """Degree 0 linear map between the spaces of two chain complexes.

    Commuting with the differentials is not enforced on construction,
    use :meth:`is_chain_map` or :meth:`check`.
    """

    def __init__(self, source, target, linear):
        if linear.source != source.space or linear.target != target.space:
            raise ValueError("Linear map does not match the complexes.")
        if linear.degree_shift != 0:
            raise ValueError("A chain map has degree 0.")
        self.source = source
        self.target = target
        self.linear = linear

    def __call__(self, vector):
        return self.linear(vector)

    def compose(self, other):
        return ChainMap(other.source, self.target, self.linear @ other.linear)

    def __matmul__(self, other):
        return self.compose(other)

    def is_chain_map(self):
        difference = self.linear @ self.source.d - self.target.d @ self.linear
        if difference.is_zero():
            return Verdict(True)
        i = min(difference.columns, key=self.source.space.rank)
        return Verdict(
            False,
            witness=self.source.space.name(i),
            message="f d and d f differ on this basis vector.",
        )

    def check(self):
        verdict = self.is_chain_map()
        if not verdict:
            raise NotChainMap("Map does not commute with the differentials.", verdict.witness)
        return self

    def __repr__(self):
        return (
            f"<ChainMap: {self.source.space.dim} -> {self.target.space.dim}>"
        )


class Homology:
    """Homology of a chain complex with chosen cycle representatives.

    Attributes
    ----------
    complex : ChainComplex
    space : GradedVectorSpace
        One basis vector per homology class, named ``[name]`` after the
        free basis vector of the cycle representing it.
    representatives : list of dict
        Cycle representing each basis class.
    """

    def __init__(self, complex, space, representatives, boundaries):
        self.complex = complex
        self.space = space
        self.representatives = representatives
        self._boundaries = boundaries
        self._split = Subspace(
            complex.space,
            boundaries + representatives,
            names=[f"b{i}" for i in range(len(boundaries))] + list(space.names),
        )
        self._nb = len(boundaries)

    @property
    def dimensions(self):
        return {
            d: self.space.dim_in_degree(d) for d in self.complex.space.support
        }

    def dimension_table(self):
        return self.space.dimension_table()

    def class_of(self, cycle):
        """Coordinates of the class of `cycle` in the homology basis.

        Raises
        ------
        NotInSubspace
            If `cycle` is not a cycle.
        """
        coords = self._split.coordinates(cycle)
        return {k - self._nb: c for k, c in coords.items() if k >= self._nb}

    def is_boundary(self, vector):
        if self.complex.d(vector):
            return False
        return not self.class_of(vector)

    def __repr__(self):
        dims = ", ".join(f"{d}: {n}" for d, n in self.dimensions.items() if n)
        return f"<Homology: dimensions {{{dims}}}>"


def homology(c):
    """Homology of a chain complex.

    For every degree the cycles are an echelon kernel basis of the
    differential, reduced against a basis of the boundaries. The result
    only depends on the basis order.

    Parameters
    ----------
    c : ChainComplex

    Returns
    -------
    Homology
    """
    space = c.space
    d = c.d
    basis = []
    representatives = []
    boundaries = []
    for degree in space.support:
        cols = space.indices_in_degree(degree)
        null = kernel(d.matrix(degree))
        cycles = [{cols[k]: v for k, v in enumerate(vec) if v != 0} for _, vec in null]
        free = [cols[j] for j, _ in null]
        above = space.indices_in_degree(degree + 1)
        _, pivots = rref(d.matrix(degree + 1))
        bounds = [d.column(above[j]) for j in pivots]
        boundaries.extend(bounds)
        # Cycles which are pivots after the boundaries represent classes
        candidates = bounds + cycles
        stacked = matrix_from_columns(
            cols, list(range(len(candidates))), lambda j: candidates[j]
        )
        _, pivots = rref(stacked)
        for j in pivots:
            if j >= len(bounds):
                k = j - len(bounds)
                representatives.append(cycles[k])
                basis.append((f"[{space.name(free[k])}]", degree))
    H = Homology(c, GradedVectorSpace(basis), representatives, boundaries)
    expected = homology_dimensions(c)
    for degree, n in H.dimensions.items():
        if n != expected[degree]:
            raise ArithmeticError(
                f"Homology in degree {degree} has dimension {n} from the cycle basis "
                f"but {expected[degree]} from ranks."
            )
    return H


def homology_dimensions(c):
    """``dim ker d_i - rank d_{i+1}`` in every degree of the support.

    The ranks are found eliminating the columns in reversed basis order,
    independently of :func:`homology`, which checks its result against
    this table.

    Parameters
    ----------
    c : ChainComplex

    Returns
    -------
    dict
        Degrees to dimensions.
    """
    space = c.space
    d = c.d

    def _rank(degree):
        rows = space.indices_in_degree(degree - 1)
        cols = list(reversed(space.indices_in_degree(degree)))
        return rank(matrix_from_columns(rows, cols, d.column))

    return {
        degree: space.dim_in_degree(degree) - _rank(degree) - _rank(degree + 1)
        for degree in space.support
    }


def induced_map_on_homology(f, source_homology=None, target_homology=None):
    """Matrix of H(f) in the chosen representative bases.

    Parameters
    ----------
    f : ChainMap
    source_homology, target_homology : Homology, optional
        Computed if not given.

    Returns
    -------
    GradedLinearMap
        Degree 0 map between the homology spaces.

    Raises
    ------
    NotChainMap
        If `f` does not commute with the differentials.
    """
    f.check()
    hs = homology(f.source) if source_homology is None else source_homology
    ht = homology(f.target) if target_homology is None else target_homology
    columns = {
        k: ht.class_of(f(rep)) for k, rep in enumerate(hs.representatives)
    }
    return GradedLinearMap(hs.space, ht.space, columns)


def is_quasi_isomorphism(f, degrees=None):
    """Whether H(f) is bijective, optionally only in `degrees`."""
    hf = induced_map_on_homology(f)
    if degrees is None:
        degrees = set(hf.source.support) | set(hf.target.support)
    return all(
        hf.rank(d) == hf.source.dim_in_degree(d) == hf.target.dim_in_degree(d)
        for d in degrees
    )


def _solve_in_kernel(d, kernel_vectors, degree, rhs):
    """Find ``k`` in the span of `kernel_vectors` (degree `degree`) with
    ``d(k) == rhs``. Returns None if there is none."""
    space = d.source
    rows = space.indices_in_degree(degree - 1)
    images = [d(v) for v in kernel_vectors]
    matrix = matrix_from_columns(rows, list(range(len(images))), images.__getitem__)
    solution = solve_particular(matrix, [rhs.get(r, 0) for r in rows])
    if solution is None:
        return None
    return combine(*zip(solution, kernel_vectors))


def contracting_homotopy_for_acyclic(f, surjection_degrees=None):
    """Section and homotopy for an acyclic fibration of complexes.

    Builds, degree by degree from the bottom, a chain map ``sigma`` with
    ``f sigma = id`` and a degree +1 map ``h`` with image in ``ker f``
    such that ``id - sigma f = d h + h d``.

    Parameters
    ----------
    f : ChainMap
        A surjective quasi-isomorphism.
    surjection_degrees : iterable of int, optional
        Target degrees in which `f` is required to be surjective. All
        degrees of the target by default.

    Returns
    -------
    sigma : ChainMap
    h : GradedLinearMap

    Raises
    ------
    NotAcyclicFibration
        If `f` is not a surjective quasi-isomorphism or the identities
        fail.
    """
    f.check()
    X = f.source.space
    Y = f.target.space
    dX = f.source.d
    dY = f.target.d
    if surjection_degrees is None:
        surjection_degrees = Y.support
    if not is_surjective_in_degrees(f.linear, surjection_degrees):
        raise NotAcyclicFibration("Chain map is not surjective.")
    if not is_quasi_isomorphism(f):
        raise NotAcyclicFibration("Chain map is not a quasi-isomorphism.")
    first = section_of_surjection(f.linear, Y.support)

    degrees = sorted(set(X.support) | set(Y.support))
    kernels = {}
    for n in degrees:
        cols = X.indices_in_degree(n)
        kernels[n] = [
            {cols[k]: v for k, v in enumerate(vec) if v != 0}
            for _, vec in kernel(f.linear.matrix(n))
        ]

    sigma_cols = {}
    h_cols = {}
    for n in degrees:
        sigma = GradedLinearMap(Y, X, sigma_cols)
        for y in Y.indices_in_degree(n):
            x0 = first.column(y)
            r = combine((1, dX(x0)), (-1, sigma(dY.column(y))))
            k = _solve_in_kernel(dX, kernels[n], n, r) if r else {}
            if k is None:
                raise NotAcyclicFibration(
                    "Kernel of the chain map is not acyclic.", witness=Y.name(y)
                )
            sigma_cols[y] = combine((1, x0), (-1, k))
    sigma = GradedLinearMap(Y, X, sigma_cols)
    projector = GradedLinearMap.identity(X) - sigma @ f.linear
    for n in degrees:
        h = GradedLinearMap(X, X, h_cols, degree_shift=1)
        for x in X.indices_in_degree(n):
            r = combine((1, projector.column(x)), (-1, h(dX.column(x))))
            k = _solve_in_kernel(dX, kernels.get(n + 1, []), n + 1, r) if r else {}
            if k is None:
                raise NotAcyclicFibration(
                    "Kernel of the chain map is not acyclic.", witness=X.name(x)
                )
            if k:
                h_cols[x] = k
    h = GradedLinearMap(X, X, h_cols, degree_shift=1)

    section = ChainMap(f.target, f.source, sigma)
    if not section.is_chain_map():
        raise NotAcyclicFibration("Section is not a chain map.")
    if not (f.linear @ sigma) == GradedLinearMap.identity(Y):
        raise NotAcyclicFibration("Section is not a right inverse.")
    if not (dX @ h + h @ dX) == projector:
        raise NotAcyclicFibration("Homotopy identity fails.")
    return section, h
