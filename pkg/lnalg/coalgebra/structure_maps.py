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

"""Coalgebra morphisms and coderivations of cofree coalgebras S(V).

Both are determined by their structure maps, the components ``S^m(V) ->
W`` of the projection onto cogenerators. They are stored as one sparse
dictionary from canonical words to vectors of the target space, and
extended to all of S(V) on demand.
"""

from itertools import combinations

from sympy.utilities.iterables import multiset_partitions

from lnalg.base import Verdict
from lnalg.coalgebra.words import (
    format_element,
    format_word,
    is_canonical,
    koszul_sign,
    multiply,
    normalize_word,
    split_sign,
    vector_as_element,
    word_degree,
    words,
)
from lnalg.exactla.graded_space import GradedVectorSpace
from lnalg.exactla.linear_map import GradedLinearMap
from lnalg.exactla.vector import add_to, cleaned, format_vector, scaled


def extend_morphism(source, target, value, element, lengths=None):
    """Apply the coalgebra morphism with structure maps `value`.

    Parameters
    ----------
    source, target : GradedVectorSpace
    value : callable
        Maps a canonical word of `source` to a vector of `target`.
    element : dict
        Element of S(source).
    lengths : container of int, optional
        Only output words with these lengths are computed.

    Returns
    -------
    dict
        Element of S(target).
    """
    out = {}
    for word, c in element.items():
        degrees = [source.degree(i) for i in word]
        cache = {}
        for partition in multiset_partitions(list(range(len(word)))):
            if lengths is not None and len(partition) not in lengths:
                continue
            blocks = sorted((tuple(sorted(b)) for b in partition), key=lambda b: b[0])
            factors = []
            for block in blocks:
                if block not in cache:
                    cache[block] = value(tuple(word[i] for i in block))
                if not cache[block]:
                    break
                factors.append(vector_as_element(cache[block]))
            else:
                sign = koszul_sign(sum(blocks, ()), degrees)
                add_to(out, multiply(target, *factors), sign * c)
    return out


def extend_coderivation(source, value, element, lengths=None):
    """Apply the coderivation with structure maps `value`.

    Parameters
    ----------
    source : GradedVectorSpace
    value : callable
        Maps a canonical word to a vector of `source` (degree -1).
    element : dict
        Element of S(source).
    lengths : container of int, optional
        Only output words with these lengths are computed.

    Returns
    -------
    dict
    """
    out = {}
    for word, c in element.items():
        n = len(word)
        for k in range(1, n + 1):
            if lengths is not None and n - k + 1 not in lengths:
                continue
            for positions in combinations(range(n), k):
                v = value(tuple(word[i] for i in positions))
                if not v:
                    continue
                sign, rest = split_sign(source, word, positions)
                remainder = {tuple(word[i] for i in rest): 1}
                add_to(out, multiply(source, vector_as_element(v), remainder), sign * c)
    return out


class SymMultiMap:
    """Graded symmetric multilinear map ``S^m(V) -> S^p(W)``.

    Keys are canonical words of length :attr:`arity`. For ``p == 1``
    values are vectors of the target, otherwise elements of S^p(W).
    """

    def __init__(self, source, target, arity, entries=None, degree_shift=0, output_length=1):
        self.source = source
        self.target = target
        self.arity = int(arity)
        self.degree_shift = int(degree_shift)
        self.output_length = int(output_length)
        self._entries = {}
        for word, value in (entries or {}).items():
            word = tuple(word)
            if len(word) != self.arity or not is_canonical(source, word):
                raise ValueError(f"{word} is not a canonical word of length {arity}.")
            value = cleaned(value)
            if value:
                self._entries[word] = value

    @property
    def entries(self):
        return self._entries

    def __call__(self, word):
        return self._entries.get(tuple(word), {})

    def is_zero(self):
        return not self._entries

    def __eq__(self, other):
        if not isinstance(other, SymMultiMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.arity == other.arity
            and self.output_length == other.output_length
            and self._entries == other._entries
        )

    def __repr__(self):
        lines = [
            f"<SymMultiMap: arity {self.arity} -> {self.output_length}. "
            f"degree {self.degree_shift}>"
        ]
        for word in sorted(self._entries, key=lambda w: [self.source.rank(i) for i in w]):
            value = self._entries[word]
            if self.output_length == 1:
                text = format_vector(self.target, value)
            else:
                text = format_element(self.target, value, prefix="")
            lines.append(f"  {format_word(self.source, word, prefix='')} -> {text}")
        return "\n".join(lines)


class StructureMaps:
    """Structure maps of a map out of a cofree coalgebra.

    Parameters
    ----------
    source, target : GradedVectorSpace
    entries : dict, optional
        Maps canonical words of `source` to vectors of `target`.
    bound : int, optional
        Arity bound. Structure maps of larger arity vanish. Defaults to
        the longest word in `entries`.
    """

    degree_shift = 0

    def __init__(self, source, target, entries=None, bound=None):
        if not isinstance(source, GradedVectorSpace) or not isinstance(
            target, GradedVectorSpace
        ):
            raise ValueError("Source and target must be graded vector spaces.")
        self.source = source
        self.target = target
        self._entries = {}
        for word, value in (entries or {}).items():
            word = tuple(word)
            if not word or not is_canonical(source, word):
                raise ValueError(f"{word} is not a canonical word.")
            value = cleaned(value)
            expected = word_degree(source, word) + self.degree_shift
            for j in value:
                if target.degree(j) != expected:
                    raise ValueError(
                        f"Value on {format_word(source, word)} has an entry "
                        f"'{target.name(j)}' in the wrong degree."
                    )
            if value:
                self._entries[word] = value
        longest = max((len(w) for w in self._entries), default=1)
        self.bound = longest if bound is None else int(bound)
        if self.bound < longest:
            raise ValueError(
                f"Structure map of arity {longest} exceeds the bound {self.bound}."
            )

    @classmethod
    def from_components(cls, components, bound=None):
        """Build from a list of :class:`SymMultiMap` of output length 1."""
        entries = {}
        for component in components:
            entries.update(component.entries)
        first = components[0]
        return cls(first.source, first.target, entries, bound)

    @classmethod
    def from_linear(cls, linear, bound=1):
        entries = {(i,): col for i, col in linear.columns.items()}
        return cls(linear.source, linear.target, entries, bound)

    @property
    def entries(self):
        return self._entries

    def value(self, word):
        return self._entries.get(tuple(word), {})

    def component(self, arity):
        entries = {w: v for w, v in self._entries.items() if len(w) == arity}
        return SymMultiMap(self.source, self.target, arity, entries, self.degree_shift)

    @property
    def components(self):
        return [self.component(k) for k in range(1, self.bound + 1)]

    @property
    def linear(self):
        """Arity one structure map as a :class:`GradedLinearMap`."""
        columns = {w[0]: v for w, v in self._entries.items() if len(w) == 1}
        return GradedLinearMap(self.source, self.target, columns, self.degree_shift)

    def is_linear(self):
        return all(len(w) == 1 for w in self._entries)

    def evaluate(self, element):
        """Projection onto cogenerators of the image of `element`."""
        out = {}
        for word, c in element.items():
            add_to(out, self._entries.get(word, {}), c)
        return out

    def domain_words(self, max_length=None, min_length=1):
        """Words on which a structure map can be nonzero for degree reasons."""
        degrees = {d - self.degree_shift for d in self.target.support}
        max_length = self.bound if max_length is None else max_length
        return words(self.source, max_length, degrees, min_length)

    def with_bound(self, bound):
        return type(self)(self.source, self.target, self._entries, bound)

    def __eq__(self, other):
        if not isinstance(other, StructureMaps):
            return NotImplemented
        return (
            self.degree_shift == other.degree_shift
            and self.source == other.source
            and self.target == other.target
            and self._entries == other._entries
        )

    def __repr__(self):
        name = self.__class__.__name__
        lines = [f"<{name}: dim {self.source.dim} -> {self.target.dim}. bound {self.bound}>"]
        ordered = sorted(
            self._entries, key=lambda w: (len(w), [self.source.rank(i) for i in w])
        )
        for word in ordered:
            value = format_vector(self.target, self._entries[word])
            lines.append(f"  {format_word(self.source, word)} -> {value}")
        return "\n".join(lines)


class CoalgebraMorphismData(StructureMaps):
    """Structure maps ``F^1_k`` of a coalgebra morphism S(V) -> S(W)."""

    degree_shift = 0

    @classmethod
    def identity(cls, space, bound=1):
        return cls(space, space, {(i,): {i: 1} for i in range(space.dim)}, bound)

    @classmethod
    def zero(cls, source, target, bound=1):
        return cls(source, target, {}, bound)

    def apply(self, element, lengths=None):
        return extend_morphism(self.source, self.target, self.value, element, lengths)

    def restriction_projection(self, p, m, domain=None):
        """The component ``F^p_m: S^m(V) -> S^p(W)``."""
        domain = words(self.source, m, min_length=m) if domain is None else domain
        entries = {}
        for word in domain:
            image = self.apply({word: 1}, lengths=(p,))
            if p == 1:
                image = {u[0]: c for u, c in image.items()}
            if image:
                entries[word] = image
        return SymMultiMap(self.source, self.target, m, entries, 0, output_length=p)


class CoderivationData(StructureMaps):
    """Structure maps ``delta^1_k`` of a degree -1 coderivation of S(V)."""

    degree_shift = -1

    def __init__(self, space, entries=None, bound=None):
        super().__init__(space, space, entries, bound)

    @property
    def space(self):
        return self.source

    @classmethod
    def from_components(cls, components, bound=None):
        entries = {}
        for component in components:
            entries.update(component.entries)
        return cls(components[0].source, entries, bound)

    @classmethod
    def from_linear(cls, linear, bound=1):
        return cls(linear.source, {(i,): col for i, col in linear.columns.items()}, bound)

    def with_bound(self, bound):
        return type(self)(self.source, self._entries, bound)

    def apply(self, element, lengths=None):
        return extend_coderivation(self.source, self.value, element, lengths)

    def restriction_projection(self, p, m, domain=None):
        """The component ``delta^p_m: S^m(V) -> S^p(V)``."""
        domain = words(self.source, m, min_length=m) if domain is None else domain
        entries = {}
        for word in domain:
            image = self.apply({word: 1}, lengths=(p,))
            if p == 1:
                image = {u[0]: c for u, c in image.items()}
            if image:
                entries[word] = image
        return SymMultiMap(self.source, self.source, m, entries, -1, output_length=p)


def morphism_restriction_projection(F, p, m, domain=None):
    """``F^p_m`` of the coalgebra morphism with structure maps `F`."""
    return F.restriction_projection(p, m, domain)


def coderivation_restriction_projection(delta, p, m, domain=None):
    """``delta^p_m`` of the coderivation with structure maps `delta`."""
    return delta.restriction_projection(p, m, domain)


def compose_structure_maps(G, F, bound=None):
    """Structure maps of the composite coalgebra morphism ``G F``.

    Parameters
    ----------
    G, F : CoalgebraMorphismData
    bound : int, optional
        Arity bound of the result, by default the larger of the bounds.

    Returns
    -------
    CoalgebraMorphismData
    """
    if F.target != G.source:
        raise ValueError("Structure maps are not composable.")
    bound = max(F.bound, G.bound) if bound is None else bound
    entries = {}
    degrees = set(G.target.support)
    for word in words(F.source, bound, degrees):
        value = G.evaluate(F.apply({word: 1}, lengths=range(1, G.bound + 1)))
        if value:
            entries[word] = value
    return CoalgebraMorphismData(F.source, G.target, entries, bound)


def invert_structure_maps(F, bound=None):
    """Inverse of a coalgebra morphism with invertible linear part.

    The structure maps are found by the triangular recursion
    ``Psi^1_m = -A^-1 sum_{k >= 2} F^1_k Psi^k_m`` with ``A = F^1_1``.

    Raises
    ------
    ValueError
        If ``F^1_1`` is not invertible.
    """
    inverse = F.linear.inverse()
    bound = F.bound if bound is None else bound
    entries = {(j,): col for j, col in inverse.columns.items()}

    def _value(word):
        return entries.get(word, {})

    degrees = set(F.source.support)
    for word in words(F.target, bound, degrees, min_length=2):
        partial = extend_morphism(
            F.target, F.source, _value, {word: 1}, lengths=range(2, len(word) + 1)
        )
        value = scaled(inverse(F.evaluate(partial)), -1)
        if value:
            entries[word] = value
    return CoalgebraMorphismData(F.target, F.source, entries, bound)


def is_codifferential(delta, up_to_arity=None):
    """Whether the coderivation squares to zero.

    Checks ``sum_k delta^1_k delta^k_m = 0`` on every word of length
    ``m <= up_to_arity`` whose degree allows a nonzero value.

    Parameters
    ----------
    delta : CoderivationData
    up_to_arity : int, optional
        Default is ``2 * delta.bound - 1``, beyond which every term
        vanishes.

    Returns
    -------
    Verdict
        The witness is ``(m, word)`` for the first failing word.
    """
    space = delta.space
    up_to_arity = 2 * delta.bound - 1 if up_to_arity is None else up_to_arity
    degrees = {d + 2 for d in space.support}
    for word in words(space, up_to_arity, degrees):
        value = delta.evaluate(delta.apply({word: 1}, lengths=range(1, delta.bound + 1)))
        if value:
            return Verdict(
                False,
                witness=(len(word), format_word(space, word)),
                message=f"delta^2 is {format_vector(space, value)}.",
            )
    return Verdict(True)


def is_dg_morphism(F, delta, delta_target, up_to_arity=None):
    """Whether ``F`` commutes with the codifferentials.

    Checks ``sum_k F^1_k delta^k_m = sum_k delta'^1_k F^k_m`` on every
    word of length ``m <= up_to_arity``.

    Parameters
    ----------
    F : CoalgebraMorphismData
    delta, delta_target : CoderivationData
        Codifferentials of the source and target.
    up_to_arity : int, optional
        Default is the largest arity in which a term can be nonzero.

    Returns
    -------
    Verdict
    """
    if delta.space != F.source or delta_target.space != F.target:
        raise ValueError("Codifferentials do not match the morphism.")
    if up_to_arity is None:
        up_to_arity = max(F.bound + delta.bound - 1, F.bound * delta_target.bound)
    degrees = {d + 1 for d in F.target.support}
    for word in words(F.source, up_to_arity, degrees):
        lhs = F.evaluate(delta.apply({word: 1}, lengths=range(1, F.bound + 1)))
        rhs = delta_target.evaluate(
            F.apply({word: 1}, lengths=range(1, delta_target.bound + 1))
        )
        if lhs != rhs:
            return Verdict(
                False,
                witness=(len(word), format_word(F.source, word)),
                message=(
                    f"F delta gives {format_vector(F.target, lhs)} but delta' F "
                    f"gives {format_vector(F.target, rhs)}."
                ),
            )
    return Verdict(True)


def reindexed(space, entries, letter_map, value_map=None):
    """Structure map entries moved to another space.

    Parameters
    ----------
    space : GradedVectorSpace
        The space the letters are moved to.
    entries : dict
        Canonical words to vectors.
    letter_map : callable
        New index of every letter.
    value_map : callable, optional
        New index of every entry of the values. Unchanged if None.

    Returns
    -------
    dict
        Entries keyed by canonical words of `space`.
    """
    out = {}
    for word, value in entries.items():
        sign, new = normalize_word(space, tuple(letter_map(i) for i in word))
        if not sign:
            continue
        if value_map is not None:
            value = {value_map(j): c for j, c in value.items()}
        add_to(out.setdefault(new, {}), value, sign)
    return {w: v for w, v in out.items() if v}
