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

"""Factorization of strict morphisms by obstruction theory."""

from fractions import Fraction

from lnalg.base import NotStrict, PartialDataInvalid, Verdict
from lnalg.coalgebra.structure_maps import (
    CoalgebraMorphismData,
    CoderivationData,
    extend_coderivation,
    extend_morphism,
)
from lnalg.coalgebra.words import format_word, words
from lnalg.exactla.graded_space import direct_sum
from lnalg.exactla.linear_map import GradedLinearMap
from lnalg.exactla.vector import add_to, format_vector, scaled
from lnalg.factorization.path_complex import path_complex
from lnalg.linfty.algebra import LieNAlgebra
from lnalg.linfty.morphism import (
    LInftyMorphism,
    compose,
    morphism_arity_bound,
    pairing,
    product,
)


class SymmetrizedHomotopy:
    """Contracting homotopy of S(sL + sP(W)) relative to S(sL).

    On a word with ``j >= 1`` letters from ``sP(W)`` it is ``1/j`` times
    the derivation extension of ``s y(e) -> s x(e)``, and it vanishes on
    words of ``S(sL)``.

    Parameters
    ----------
    space : GradedVectorSpace
        The suspension of ``L + P(W)``.
    path : PathComplexData
    offset : int
        Index of the first basis vector of ``P(W)``.
    """

    def __init__(self, space, path, offset):
        self.space = space
        self.path = path
        self.offset = offset

    def _h(self, word):
        if len(word) != 1 or word[0] < self.offset:
            return {}
        column = self.path.h.column(word[0] - self.offset)
        return {k + self.offset: c for k, c in column.items()}

    def __call__(self, element):
        out = {}
        for word, c in element.items():
            j = sum(1 for i in word if i >= self.offset)
            if j:
                image = extend_coderivation(self.space, self._h, {word: 1}, (len(word),))
                add_to(out, image, Fraction(c, j))
        return out

    def is_contracting(self, delta, max_length=3):
        """Check ``delta H + H delta = id`` on words with a letter of
        ``sP(W)`` and ``= 0`` on words of ``S(sL)``.

        Only the word length preserving part of `delta` enters. Every
        canonical word with at most `max_length` letters is tried.

        Parameters
        ----------
        delta : CoderivationData
            Codifferential of the middle object ``L + P(W)``.
        max_length : int, optional
            Default is 3.

        Returns
        -------
        Verdict
            The first failing word as witness.
        """
        for word in words(self.space, max_length):
            m = len(word)
            element = {word: 1}
            value = delta.apply(self(element), lengths=(m,))
            add_to(value, self(delta.apply(element, lengths=(m,))))
            if any(i >= self.offset for i in word):
                add_to(value, element, -1)
            if value:
                return Verdict(
                    False,
                    witness=format_word(self.space, word),
                    message="delta H + H delta differs from the identity.",
                )
        return Verdict(True)


class ObstructionState:
    """Structure maps of a partial morphism up to arity ``arity - 1``.

    Attributes
    ----------
    source, target : GradedVectorSpace
        Suspended spaces.
    entries : dict
        Known structure maps, canonical words to vectors of `target`.
    arity : int
        The arity to be found next.
    """

    def __init__(self, source, target, entries, arity):
        self.source = source
        self.target = target
        self.entries = entries
        self.arity = arity

    def value(self, word):
        if len(word) >= self.arity:
            return {}
        return self.entries.get(tuple(word), {})


def obstruction_cycle(state, delta_source, delta_target, check=True):
    """The obstruction ``c_m`` to extending a partial morphism.

    ``c_m = sum_{k < m} Phi^1_k d^k_m - sum_{k >= 2} d'^1_k Phi^k_m``
    on words of length ``m``.

    Parameters
    ----------
    state : ObstructionState
    delta_source, delta_target : CoderivationData
    check : bool, optional
        Whether to verify ``d'^1_1 c + c d^m_m = 0``. Default is True.

    Returns
    -------
    callable
        Maps an element of S^m(source) to a vector of the target.

    Raises
    ------
    PartialDataInvalid
        If ``c_m`` is not a cycle, i.e. the partial data does not
        commute with the codifferentials below arity ``m``.
    """
    m = state.arity
    cache = {}

    def _on_word(word):
        if word not in cache:
            value = {}
            image = delta_source.apply({word: 1}, lengths=range(1, m))
            for u, c in image.items():
                add_to(value, state.value(u), c)
            partial = extend_morphism(
                state.source, state.target, state.value, {word: 1}, range(2, m + 1)
            )
            for u, c in partial.items():
                add_to(value, delta_target.value(u), -c)
            cache[word] = value
        return cache[word]

    def c(element):
        out = {}
        for word, coefficient in element.items():
            add_to(out, _on_word(word), coefficient)
        return out

    if check:
        degrees = {d + 2 for d in state.target.support}
        for word in words(state.source, m, degrees, min_length=m):
            value = {}
            for i, coefficient in c({word: 1}).items():
                add_to(value, delta_target.value((i,)), coefficient)
            add_to(value, c(delta_source.apply({word: 1}, lengths=(m,))))
            if value:
                raise PartialDataInvalid(
                    f"Obstruction in arity {m} is not a cycle: "
                    f"{format_vector(state.target, value)}.",
                    witness=(m, format_word(state.source, word)),
                )
    return c


class Factorization:
    """A factorization ``f = p j`` through a middle object.

    Unpacks as ``(j, p)``.

    Attributes
    ----------
    j : LInftyMorphism
        Weak equivalence into the middle object.
    p : LInftyMorphism
        Fibration out of the middle object.
    retraction : LInftyMorphism or None
        An acyclic fibration with ``retraction j = id``, if known.
    homotopy : SymmetrizedHomotopy or None
        The homotopy used to contract obstructions, if any.
    """

    def __init__(self, j, p, retraction=None, homotopy=None):
        self.j = j
        self.p = p
        self.retraction = retraction
        self.homotopy = homotopy

    @property
    def middle(self):
        return self.j.target

    def __iter__(self):
        return iter((self.j, self.p))

    def __repr__(self):
        return f"<Factorization: through {self.middle}>"


def factor_strict_morphism(f):
    """Factor a strict morphism into a weak equivalence and a fibration.

    The middle object is ``L + P(L')`` with the brackets of ``L`` and the
    differential of ``P(L')``. The fibration ``phi`` has linear part
    ``p_f = f_1 + pi`` and its higher structure maps are found arity by
    arity by contracting the obstruction with
    :class:`SymmetrizedHomotopy`.

    Parameters
    ----------
    f : LInftyMorphism
        A strict morphism ``L -> L'``.

    Returns
    -------
    Factorization
        ``j: L -> L + P(L')`` and ``phi: L + P(L') -> L'``.

    Raises
    ------
    NotStrict
        If `f` is not strict.
    """
    if not f.is_strict():
        raise NotStrict("Only strict morphisms are factored by obstruction theory.")
    L, target = f.source, f.target
    path = path_complex(target.chain_complex())
    space, (_, offset) = direct_sum(L.space, path.space)
    suspended = space.suspend()

    entries = dict(L.structure.entries)
    for i, col in path.complex.d.columns.items():
        entries[(i + offset,)] = {k + offset: c for k, c in col.items()}
    middle = LieNAlgebra(space, CoderivationData(suspended, entries))
    inclusion = GradedLinearMap(L.space, space, {i: {i: 1} for i in range(L.space.dim)})
    j = LInftyMorphism.strict(L, middle, inclusion)

    phi = {(i,): col for i, col in f.linear.columns.items()}
    for i, col in path.pi.linear.columns.items():
        if col:
            phi[(i + offset,)] = col
    homotopy = SymmetrizedHomotopy(suspended, path, offset)
    bound = morphism_arity_bound(target)
    degrees = set(target.suspended.support)
    for m in range(2, bound + 1):
        state = ObstructionState(suspended, target.suspended, phi, m)
        c = obstruction_cycle(state, middle.structure, target.structure)
        for word in words(suspended, m, degrees, min_length=m):
            value = scaled(c(homotopy({word: 1})), -1)
            if value:
                phi[word] = value
    data = CoalgebraMorphismData(suspended, target.suspended, phi)
    p = LInftyMorphism(middle, target, data)
    if compose(p, j) != f:
        raise PartialDataInvalid("The factorization does not compose to the morphism.")
    return Factorization(j, p, homotopy=homotopy)


class PathObject:
    """Path object ``L -> L^I -> L x L`` of a Lie n-algebra.

    Unpacks as ``(LI, s, d)``.

    Attributes
    ----------
    LI : LieNAlgebra
    s : LInftyMorphism
        Weak equivalence ``L -> L^I``.
    d : LInftyMorphism
        Fibration ``L^I -> L x L``.
    d0, d1 : LInftyMorphism
        The components of `d`.
    """

    def __init__(self, LI, s, d, d0, d1):
        self.LI = LI
        self.s = s
        self.d = d
        self.d0 = d0
        self.d1 = d1

    def __iter__(self):
        return iter((self.LI, self.s, self.d))

    def __repr__(self):
        return f"<PathObject: {self.LI}>"


def path_object(L):
    """Path object of `L` obtained by factoring the diagonal."""
    LL, pr0, pr1 = product(L, L)
    identity = LInftyMorphism.identity(L)
    diagonal = pairing(identity, identity, LL)
    s, d = factor_strict_morphism(diagonal)
    return PathObject(s.target, s, d, compose(pr0, d), compose(pr1, d))
