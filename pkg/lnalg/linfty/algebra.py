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

"""Lie n-algebras as codifferentials on cofree coalgebras."""

from itertools import product as cartesian
import warnings

from lnalg.base import AxiomViolation, JacobiViolation
from lnalg.coalgebra.structure_maps import CoderivationData, is_codifferential
from lnalg.coalgebra.words import normalize_word
from lnalg.exactla.chain_complex import ChainComplex, homology
from lnalg.exactla.graded_space import GradedVectorSpace
from lnalg.exactla.linear_map import GradedLinearMap
from lnalg.exactla.vector import add_to, scaled, vector_from_names
from lnalg.scalar import to_rational


def decalage_sign(degrees):
    """Sign relating skew maps on L to symmetric maps on sL.

    For inputs of degrees ``|x_1|, ..., |x_k|`` the symmetric structure
    map is ``(-1)^{sum_i (k - i)|x_i|}`` times the suspended skew map.
    """
    k = len(degrees)
    exponent = sum((k - 1 - j) * d for j, d in enumerate(degrees))
    return -1 if exponent % 2 else 1


def symmetric_entries(source, target, skew, degree_shift):
    """Structure maps on suspensions from skew multilinear maps.

    Parameters
    ----------
    source, target : GradedVectorSpace
        Unsuspended spaces.
    skew : dict
        Maps a tuple of source basis names to a dict of target basis
        names and values. Every key may appear in any order, but
        different orderings must agree up to the Koszul sign.
    degree_shift : int
        -1 for brackets, 0 for morphisms, in the symmetric convention.

    Returns
    -------
    dict
        Canonical words of ``s source`` to vectors of ``s target``.

    Raises
    ------
    ValueError
        If a value has the wrong degree, contradicts graded skew
        symmetry or two entries conflict.
    """
    suspended = source.suspend()
    entries = {}
    for inputs, output in skew.items():
        if isinstance(inputs, str):
            inputs = (inputs,)
        letters = tuple(source.index(x) for x in inputs)
        value = vector_from_names(target, output)
        degrees = [source.degree(i) for i in letters]
        expected = sum(degrees) + len(letters) - 1 + degree_shift
        for j in value:
            if target.degree(j) != expected:
                raise ValueError(
                    f"Value on {inputs} must have degree {expected}, but "
                    f"'{target.name(j)}' has degree {target.degree(j)}."
                )
        value = scaled(value, decalage_sign(degrees))
        sign, word = normalize_word(suspended, letters)
        if sign == 0:
            if value:
                raise ValueError(
                    f"Value on {inputs} must vanish by graded skew symmetry."
                )
            continue
        value = scaled(value, sign)
        if word in entries and entries[word] != value:
            raise ValueError(f"Conflicting values given for {inputs}.")
        if value:
            entries[word] = value
    return entries


def skew_entries(source, target, entries):
    """Inverse of :func:`symmetric_entries` on canonical words."""
    skew = {}
    for word, value in entries.items():
        sign = decalage_sign([source.degree(i) for i in word])
        skew[tuple(source.name(i) for i in word)] = {
            target.name(j): sign * c for j, c in sorted(value.items())
        }
    return skew


def evaluate_multilinear(source, structure, vectors):
    """Evaluate the skew map of arity ``len(vectors)`` encoded by `structure`.

    Parameters
    ----------
    source : GradedVectorSpace
        Unsuspended source space.
    structure : StructureMaps
        Structure maps on the suspension.
    vectors : list of dict
        Homogeneous or inhomogeneous vectors of `source`.
    """
    suspended = structure.source
    out = {}
    for terms in cartesian(*(v.items() for v in vectors)):
        letters = tuple(i for i, _ in terms)
        coefficient = 1
        for _, c in terms:
            coefficient *= c
        sign, word = normalize_word(suspended, letters)
        if not sign:
            continue
        sign *= decalage_sign([source.degree(i) for i in letters])
        add_to(out, structure.value(word), sign * coefficient)
    return out


class LieNAlgebra:
    """Lie n-algebra on a graded space concentrated in degrees 0..n-1.

    The brackets are stored as the structure maps ``delta^1_k`` of a
    codifferential on ``S(sL)``. Basis vectors of ``sL`` carry the names
    of those of ``L``.

    Attributes
    ----------
    space : GradedVectorSpace
    suspended : GradedVectorSpace
    structure : CoderivationData
    n : int
    """

    def __init__(self, space, structure=None, n=None, check=True):
        """
        Parameters
        ----------
        space : GradedVectorSpace
            Must be concentrated in non-negative degrees.
        structure : CoderivationData, optional
            Codifferential on the suspension of `space`. Zero if None
            (default).
        n : int, optional
            Defaults to one more than the top degree of `space`.
        check : bool, optional
            Whether to verify the Jacobi identities. Default is True.

        Raises
        ------
        JacobiViolation
            If the brackets do not satisfy the Jacobi identities.
        """
        if space.dim and space.bottom_degree < 0:
            raise ValueError("A Lie n-algebra lives in non-negative degrees.")
        top = -1 if not space.dim else space.top_degree
        if n is None:
            n = top + 1
        elif n < top + 1:
            raise ValueError(f"n must be at least {top + 1}, got {n}.")
        elif n > max(top + 1, 1):
            warnings.warn(
                f"n = {n} is larger than needed for a space of top degree {top}."
            )
        self.space = space
        self.suspended = space.suspend()
        self.n = max(int(n), 1)
        self.arity_bound = top + 2 if space.dim else 1
        if structure is None:
            structure = CoderivationData(self.suspended)
        if structure.space != self.suspended:
            raise ValueError("Structure maps must live on the suspended space.")
        self.structure = structure.with_bound(self.arity_bound)
        if check:
            verdict = is_codifferential(self.structure)
            if not verdict:
                raise JacobiViolation(*verdict.witness)

    @classmethod
    def from_brackets(cls, space, brackets, n=None, check=True):
        """Build a Lie n-algebra from skew brackets.

        Parameters
        ----------
        space : GradedVectorSpace
        brackets : dict
            Maps tuples of basis names ``(x1, ..., xk)`` to the value of
            ``l_k(x1, ..., xk)`` as a dict of basis names and rationals.
            A single name is accepted for ``l_1``.
        n : int, optional
        check : bool, optional

        Returns
        -------
        LieNAlgebra

        Examples
        --------
        >>> from lnalg.exactla import GradedVectorSpace
        >>> g = GradedVectorSpace([("e1", 0), ("e2", 0)])
        >>> L = LieNAlgebra.from_brackets(g, {("e1", "e2"): {"e1": 1}})
        >>> L.bracket({0: 1}, {1: 1})
        {0: Fraction(1, 1)}
        """
        entries = symmetric_entries(space, space, brackets, -1)
        structure = CoderivationData(space.suspend(), entries)
        return cls(space, structure, n=n, check=check)

    def to_brackets(self):
        """Skew brackets ``l_k`` on canonically ordered basis inputs."""
        return skew_entries(self.space, self.space, self.structure.entries)

    def bracket(self, *vectors):
        """Evaluate ``l_k`` on vectors of the space, ``k = len(vectors)``."""
        vectors = [{i: to_rational(c) for i, c in v.items()} for v in vectors]
        return evaluate_multilinear(self.space, self.structure, vectors)

    @property
    def differential(self):
        """``l_1`` as a degree -1 map of the space."""
        return GradedLinearMap(
            self.space, self.space, self.structure.linear.columns, degree_shift=-1
        )

    def chain_complex(self):
        return ChainComplex(self.space, self.differential)

    def homology(self):
        return homology(self.chain_complex())

    def is_abelian(self):
        return self.structure.is_linear()

    def is_lie_algebra(self):
        return not self.space.dim or self.space.support == (0,)

    def __eq__(self, other):
        if not isinstance(other, LieNAlgebra):
            return NotImplemented
        return self.space == other.space and self.structure == other.structure

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        kind = "abelian " if self.is_abelian() else ""
        return (
            f"<LieNAlgebra: {kind}n = {self.n}. dimensions {self.space.dimensions}>"
        )


def zero_algebra():
    """The terminal Lie n-algebra 0."""
    return LieNAlgebra(GradedVectorSpace())


def abelian_algebra(space, differential=None):
    """The abelian Lie n-algebra of a chain complex.

    Parameters
    ----------
    space : GradedVectorSpace
    differential : dict, optional
        Maps basis names to the value of ``l_1`` as a dict of names.
    """
    brackets = {(x,): value for x, value in (differential or {}).items()}
    return LieNAlgebra.from_brackets(space, brackets)


def _h0(L):
    """Homology of L and the indices of its degree 0 classes."""
    hom = L.homology()
    degree_zero = list(hom.space.indices_in_degree(0))
    return hom, degree_zero


def h0_lie_algebra(L):
    """The Lie algebra H0(L) with the bracket induced by ``l_2``.

    The basis of H0(L) is named after the cycle representatives,
    ``[name]``. That the bracket is well defined is checked on
    boundaries.

    Raises
    ------
    AxiomViolation
        If ``l_2`` of a boundary and a cycle is not a boundary.
    """
    hom, degree_zero = _h0(L)
    space = GradedVectorSpace([(hom.space.name(k), 0) for k in degree_zero])
    positions = {k: a for a, k in enumerate(degree_zero)}
    boundaries = [
        b for b in hom._boundaries if all(L.space.degree(i) == 0 for i in b)
    ]
    for b in boundaries:
        for x in L.space.indices_in_degree(0):
            value = L.bracket(b, {x: 1})
            if not hom.is_boundary(value):
                raise AxiomViolation(
                    "Bracket on H0 is not well defined.", witness=L.space.name(x)
                )
    brackets = {}
    for a, k in enumerate(degree_zero):
        for b in range(a + 1, len(degree_zero)):
            rep_a = hom.representatives[k]
            rep_b = hom.representatives[degree_zero[b]]
            value = hom.class_of(L.bracket(rep_a, rep_b))
            if value:
                brackets[(space.name(a), space.name(b))] = {
                    space.name(positions[j]): c for j, c in value.items()
                }
    return LieNAlgebra.from_brackets(space, brackets)
