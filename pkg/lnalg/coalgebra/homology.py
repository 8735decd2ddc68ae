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

from lnalg.coalgebra.words import format_word, word_degree, words
from lnalg.exactla.chain_complex import ChainComplex, ChainMap, homology
from lnalg.exactla.graded_space import GradedVectorSpace
from lnalg.exactla.linear_map import GradedLinearMap

DEFAULT_DEGREE_CUTOFF = 4


class WordComplex(ChainComplex):
    """The chain complex of words of S(V) up to a degree cutoff.

    Attributes
    ----------
    words : list of tuple
        The canonical word of every basis vector.
    cutoff : int
    """

    def __init__(self, space, d, source_words, cutoff):
        super().__init__(space, d)
        self.words = source_words
        self.cutoff = cutoff
        self._word_index = {w: i for i, w in enumerate(source_words)}

    def word_index(self, word):
        return self._word_index[tuple(word)]

    def vector(self, element):
        """An element of S(V) of degree at most the cutoff as a vector."""
        return {self._word_index[w]: c for w, c in element.items()}


def _word_basis(space, cutoff):
    if space.dim and space.bottom_degree < 1:
        raise ValueError(
            "The coalgebra is degreewise finite only for spaces in positive degrees."
        )
    source_words = list(words(space, cutoff, degrees=set(range(1, cutoff + 1))))
    basis = GradedVectorSpace(
        [(format_word(space, w), word_degree(space, w)) for w in source_words]
    )
    return source_words, basis


def coalgebra_complex(delta, degree_cutoff):
    """The complex (S(V), delta) truncated to degrees ``<= degree_cutoff``.

    The truncation is a subcomplex since delta has degree -1.

    Parameters
    ----------
    delta : CoderivationData
        A codifferential on S(V) with V in positive degrees.
    degree_cutoff : int
        Largest degree kept. There is no default: the homology of a
        non-strict algebra can live in arbitrarily high degrees.

    Returns
    -------
    WordComplex
    """
    space = delta.space
    source_words, basis = _word_basis(space, degree_cutoff)
    index = {w: i for i, w in enumerate(source_words)}
    columns = {}
    for i, word in enumerate(source_words):
        image = delta.apply({word: 1})
        if image:
            columns[i] = {index[u]: c for u, c in image.items()}
    d = GradedLinearMap(basis, basis, columns, degree_shift=-1)
    return WordComplex(basis, d, source_words, degree_cutoff)


def coalgebra_chain_map(F, source_complex, target_complex):
    """Chain map between truncated word complexes induced by `F`.

    Parameters
    ----------
    F : CoalgebraMorphismData
    source_complex, target_complex : WordComplex
        Complexes of the source and target of `F` with equal cutoff.

    Returns
    -------
    ChainMap
    """
    if source_complex.cutoff != target_complex.cutoff:
        raise ValueError("Word complexes have different cutoffs.")
    columns = {}
    for i, word in enumerate(source_complex.words):
        image = F.apply({word: 1})
        if image:
            columns[i] = target_complex.vector(image)
    linear = GradedLinearMap(source_complex.space, target_complex.space, columns)
    return ChainMap(source_complex, target_complex, linear)


def reduced_coalgebra_homology(delta, degree_cutoff):
    """Homology of (S(V), delta) in degrees ``<= degree_cutoff``.

    `degree_cutoff` must be given explicitly, :data:`DEFAULT_DEGREE_CUTOFF`
    is only the value the command line suggests.

    Degree `degree_cutoff` itself is computed correctly since the
    boundaries into it come from degree ``degree_cutoff + 1``, which is
    included internally.

    Returns
    -------
    Homology
        Homology restricted to degrees up to the cutoff.
    """
    complex_ = coalgebra_complex(delta, degree_cutoff + 1)
    full = homology(complex_)
    keep = [
        k for k in range(full.space.dim) if full.space.degree(k) <= degree_cutoff
    ]
    space = GradedVectorSpace([full.space.basis[k] for k in keep])
    representatives = [full.representatives[k] for k in keep]
    boundaries = [
        b for b in full._boundaries
        if all(complex_.space.degree(i) <= degree_cutoff for i in b)
    ]
    return type(full)(complex_, space, representatives, boundaries)
