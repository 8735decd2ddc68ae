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

"""Weak L-infinity morphisms between Lie n-algebras."""

from lnalg.base import NotMorphism, TypeMismatch
from lnalg.coalgebra.structure_maps import (
    CoalgebraMorphismData,
    CoderivationData,
    compose_structure_maps,
    invert_structure_maps,
    is_dg_morphism,
    reindexed,
)
from lnalg.exactla.chain_complex import ChainMap, is_quasi_isomorphism
from lnalg.exactla.graded_space import direct_sum
from lnalg.exactla.linear_map import GradedLinearMap, is_surjective_in_degrees
from lnalg.exactla.vector import vector_from_names
from lnalg.linfty.algebra import (
    LieNAlgebra,
    _h0,
    evaluate_multilinear,
    h0_lie_algebra,
    skew_entries,
    symmetric_entries,
    zero_algebra,
)
from lnalg.scalar import to_rational


def morphism_arity_bound(target):
    """Components ``f_k`` with ``k`` above this vanish for degree reasons."""
    return target.space.top_degree + 1 if target.space.dim else 1


class LInftyMorphism:
    """Weak L-infinity morphism given by the structure maps ``F^1_k``.

    Attributes
    ----------
    source, target : LieNAlgebra
    data : CoalgebraMorphismData
        Structure maps ``S(sL) -> sL'``.
    """

    def __init__(self, source, target, data=None, check=True):
        """
        Parameters
        ----------
        source, target : LieNAlgebra
        data : CoalgebraMorphismData, optional
            Zero if None (default).
        check : bool, optional
            Whether to verify that the structure maps commute with the
            codifferentials. Default is True.

        Raises
        ------
        NotMorphism
            If the structure maps do not define a dg coalgebra morphism.
        """
        if data is None:
            data = CoalgebraMorphismData(source.suspended, target.suspended)
        if data.source != source.suspended or data.target != target.suspended:
            raise ValueError("Structure maps do not match the algebras.")
        self.source = source
        self.target = target
        self.data = data.with_bound(morphism_arity_bound(target))
        if check:
            verdict = is_dg_morphism(self.data, source.structure, target.structure)
            if not verdict:
                raise NotMorphism(*verdict.witness)

    @classmethod
    def from_maps(cls, source, target, maps, check=True):
        """Build a morphism from skew components ``f_k``.

        Parameters
        ----------
        source, target : LieNAlgebra
        maps : dict
            Maps tuples of source basis names to the value of ``f_k`` as
            a dict of target basis names and rationals. A single name is
            accepted for ``f_1``.
        """
        entries = symmetric_entries(source.space, target.space, maps, 0)
        data = CoalgebraMorphismData(source.suspended, target.suspended, entries)
        return cls(source, target, data, check=check)

    @classmethod
    def strict(cls, source, target, linear, check=True):
        """Strict morphism with linear part `linear`.

        Parameters
        ----------
        linear : GradedLinearMap or dict
            Either a degree 0 map between the spaces or a dict from source
            basis names to dicts of target names.
        """
        if isinstance(linear, dict):
            columns = {
                source.space.index(x): vector_from_names(target.space, v)
                for x, v in linear.items()
            }
        else:
            columns = linear.columns
        entries = {(i,): v for i, v in columns.items()}
        data = CoalgebraMorphismData(source.suspended, target.suspended, entries)
        return cls(source, target, data, check=check)

    @classmethod
    def identity(cls, L):
        data = CoalgebraMorphismData.identity(L.suspended)
        return cls(L, L, data, check=False)

    def to_maps(self):
        return skew_entries(self.source.space, self.target.space, self.data.entries)

    def component(self, *vectors):
        """Evaluate ``f_k`` on vectors of the source, ``k = len(vectors)``."""
        vectors = [{i: to_rational(c) for i, c in v.items()} for v in vectors]
        return evaluate_multilinear(self.source.space, self.data, vectors)

    @property
    def linear(self):
        """``f_1`` as a degree 0 map between the underlying spaces."""
        return GradedLinearMap(
            self.source.space, self.target.space, self.data.linear.columns
        )

    def is_strict(self):
        return self.data.is_linear()

    def compose(self, other):
        return compose(self, other)

    def __matmul__(self, other):
        return compose(self, other)

    def inverse(self):
        return inverse(self)

    def __eq__(self, other):
        if not isinstance(other, LInftyMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.data == other.data
        )

    def __repr__(self):
        kind = "strict " if self.is_strict() else ""
        return (
            f"<LInftyMorphism: {kind}dim {self.source.space.dim} -> "
            f"{self.target.space.dim}>"
        )


class MorphismClass:
    """Homotopical type of a morphism.

    Attributes
    ----------
    is_weak_equivalence : bool
        ``f_1`` is a quasi-isomorphism.
    is_fibration : bool
        ``f_1`` is surjective in positive degrees.
    is_acyclic_fibration : bool
    is_strict : bool
    is_isomorphism : bool
        ``f_1`` is bijective.
    is_linfty_epimorphism : bool
        ``f_1`` is surjective in every degree.
    """

    flags = (
        "is_weak_equivalence",
        "is_fibration",
        "is_acyclic_fibration",
        "is_strict",
        "is_isomorphism",
        "is_linfty_epimorphism",
    )

    def __init__(self, is_weak_equivalence, is_fibration, is_strict, is_isomorphism,
                 is_linfty_epimorphism):
        self.is_weak_equivalence = bool(is_weak_equivalence)
        self.is_fibration = bool(is_fibration)
        self.is_acyclic_fibration = self.is_weak_equivalence and self.is_fibration
        self.is_strict = bool(is_strict)
        self.is_isomorphism = bool(is_isomorphism)
        self.is_linfty_epimorphism = bool(is_linfty_epimorphism)

    def as_dict(self):
        return {flag: getattr(self, flag) for flag in self.flags}

    def __eq__(self, other):
        if not isinstance(other, MorphismClass):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __repr__(self):
        true = [f[3:] for f in self.flags if getattr(self, f)]
        return f"<MorphismClass: {', '.join(true) or 'none'}>"


def compose(g, f):
    """The composite ``g f``.

    Raises
    ------
    TypeMismatch
        If the target of `f` is not the source of `g`.
    """
    if f.target != g.source:
        raise TypeMismatch("Target of the first morphism is not the source of the second.")
    data = compose_structure_maps(g.data, f.data, morphism_arity_bound(g.target))
    return LInftyMorphism(f.source, g.target, data)


def tangent(f):
    """The chain map ``f_1`` between the underlying complexes."""
    return ChainMap(f.source.chain_complex(), f.target.chain_complex(), f.linear)


def classify(f):
    """Classify a morphism by its linear part.

    Returns
    -------
    MorphismClass
    """
    f1 = f.linear
    target = f.target.space
    positive = [d for d in target.support if d > 0]
    return MorphismClass(
        is_weak_equivalence=is_quasi_isomorphism(tangent(f)),
        is_fibration=is_surjective_in_degrees(f1, positive),
        is_strict=f.is_strict(),
        is_isomorphism=f1.is_bijective(),
        is_linfty_epimorphism=is_surjective_in_degrees(f1, target.support),
    )


def inverse(f):
    """Inverse of a morphism with invertible linear part.

    Raises
    ------
    ValueError
        If ``f_1`` is not invertible.
    """
    data = invert_structure_maps(f.data, morphism_arity_bound(f.source))
    return LInftyMorphism(f.target, f.source, data)


def product(L, M):
    """Categorical product ``L x M`` with its projections.

    The brackets act componentwise. Basis names of `M` clashing with
    those of `L` get primes appended.

    Returns
    -------
    P : LieNAlgebra
    pr_L, pr_M : LInftyMorphism
        Strict projections onto the factors.
    """
    space, (_, offset) = direct_sum(L.space, M.space)
    entries = dict(L.structure.entries)
    entries.update(
        reindexed(
            space.suspend(),
            M.structure.entries,
            lambda i: i + offset,
            lambda j: j + offset,
        )
    )
    P = LieNAlgebra(space, CoderivationData(space.suspend(), entries), check=False)
    pr_L = LInftyMorphism.strict(
        P, L, GradedLinearMap(space, L.space, {i: {i: 1} for i in range(L.space.dim)}),
        check=False,
    )
    pr_M = LInftyMorphism.strict(
        P,
        M,
        GradedLinearMap(
            space, M.space, {i + offset: {i: 1} for i in range(M.space.dim)}
        ),
        check=False,
    )
    return P, pr_L, pr_M


def pairing(f, g, target=None):
    """The morphism ``(f, g): T -> L x M`` into the product.

    Parameters
    ----------
    f : LInftyMorphism
        Morphism ``T -> L``.
    g : LInftyMorphism
        Morphism ``T -> M``.
    target : LieNAlgebra, optional
        The product of the targets as returned by :func:`product`.
    """
    if f.source != g.source:
        raise TypeMismatch("Morphisms must have the same source.")
    if target is None:
        target = product(f.target, g.target)[0]
    offset = f.target.space.dim
    entries = {w: dict(v) for w, v in f.data.entries.items()}
    for word, value in g.data.entries.items():
        shifted = {j + offset: c for j, c in value.items()}
        entries.setdefault(word, {}).update(shifted)
    data = CoalgebraMorphismData(f.source.suspended, target.suspended, entries)
    return LInftyMorphism(f.source, target, data)


def product_morphism(f, g, source=None, target=None):
    """The morphism ``f x g`` between products.

    Structure maps on words mixing both factors vanish.
    """
    if source is None:
        source = product(f.source, g.source)[0]
    if target is None:
        target = product(f.target, g.target)[0]
    n_source = f.source.space.dim
    n_target = f.target.space.dim
    entries = dict(f.data.entries)
    entries.update(
        reindexed(
            source.suspended,
            g.data.entries,
            lambda i: i + n_source,
            lambda j: j + n_target,
        )
    )
    data = CoalgebraMorphismData(source.suspended, target.suspended, entries)
    return LInftyMorphism(source, target, data)


def terminal_morphism(L):
    """The unique morphism ``L -> 0``."""
    return LInftyMorphism(L, zero_algebra(), check=False)


def h0_morphism(f):
    """The Lie algebra morphism ``H0(f_1): H0(L) -> H0(L')``.

    Raises
    ------
    NotMorphism
        If ``H0(f_1)`` does not preserve the brackets.
    """
    source = h0_lie_algebra(f.source)
    target = h0_lie_algebra(f.target)
    hom, degree_zero = _h0(f.source)
    hom_target, target_zero = _h0(f.target)
    positions = {k: a for a, k in enumerate(target_zero)}
    columns = {}
    for a, k in enumerate(degree_zero):
        value = hom_target.class_of(f.linear(hom.representatives[k]))
        if value:
            columns[a] = {positions[j]: c for j, c in value.items()}
    linear = GradedLinearMap(source.space, target.space, columns)
    return LInftyMorphism.strict(source, target, linear)
