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

"""Canonical words in the symmetric coalgebra and their signs.

A word ``x1 v ... v xn`` of S(V) is stored as the tuple of basis indices
of its letters sorted by the letter order of the space, i.e. by
``(degree, name)``. Reordering letters costs the Koszul sign. Elements
of S(V) are sparse dicts from words to rationals.
"""

from itertools import combinations, product

from lnalg.exactla.vector import add_term


def koszul_sign(permutation, degrees):
    """Koszul sign of rearranging graded letters.

    Parameters
    ----------
    permutation : sequence of int
        ``permutation[i]`` is the original position of the letter which
        ends up in position ``i``.
    degrees : sequence of int
        Degrees of the letters in their original positions.

    Returns
    -------
    int
        +1 or -1.
    """
    sign = 1
    n = len(permutation)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = permutation[i], permutation[j]
            if a > b and degrees[a] % 2 and degrees[b] % 2:
                sign = -sign
    return sign


def shuffles(*sizes):
    """Iterate over the (p1, ..., pk)-shuffles.

    Every shuffle is returned as the concatenation of its blocks, each
    block being an increasing tuple of positions, in the convention of
    :func:`koszul_sign`.
    """
    if any(p < 1 for p in sizes):
        raise ValueError("Shuffle block sizes must be positive.")

    def _blocks(remaining, sizes):
        if not sizes:
            yield ()
            return
        for block in combinations(remaining, sizes[0]):
            rest = tuple(i for i in remaining if i not in block)
            for tail in _blocks(rest, sizes[1:]):
                yield block + tail

    yield from _blocks(tuple(range(sum(sizes))), sizes)


def word_degree(space, word):
    return sum(space.degree(i) for i in word)


def normalize_word(space, letters):
    """Canonical form of a product of letters.

    Returns
    -------
    sign : int
        0 if an odd letter is repeated, otherwise the Koszul sign with
        ``letters == sign * word`` in S(V).
    word : tuple of int
    """
    letters = tuple(letters)
    permutation = sorted(range(len(letters)), key=lambda i: (space.rank(letters[i]), i))
    word = tuple(letters[i] for i in permutation)
    for a, b in zip(word, word[1:]):
        if a == b and space.degree(a) % 2:
            return 0, ()
    degrees = [space.degree(i) for i in letters]
    return koszul_sign(permutation, degrees), word


def is_canonical(space, word):
    sign, canonical = normalize_word(space, word)
    return sign == 1 and canonical == tuple(word)


def split_sign(space, word, positions):
    """Sign of moving the letters at `positions` in front of the rest."""
    rest = tuple(i for i in range(len(word)) if i not in positions)
    degrees = [space.degree(i) for i in word]
    return koszul_sign(tuple(positions) + rest, degrees), rest


def words(space, max_length, degrees=None, min_length=1):
    """Iterate over canonical words ordered by length.

    Parameters
    ----------
    space : GradedVectorSpace
    max_length : int
    degrees : container of int, optional
        Only words whose total degree is in `degrees` are returned.
    min_length : int, optional
        Default is 1.
    """
    order = space.order
    positive = space.dim == 0 or space.bottom_degree > 0
    cap = max(degrees) if (degrees is not None and positive and degrees) else None

    def _extend(start, length, prefix, degree):
        if length == 0:
            yield prefix, degree
            return
        for r in range(start, len(order)):
            i = order[r]
            d = space.degree(i)
            if cap is not None and degree + d + (length - 1) > cap:
                # Letters are sorted by degree, so later ones are larger
                break
            # Odd letters cannot repeat
            nxt = r + 1 if d % 2 else r
            yield from _extend(nxt, length - 1, prefix + (i,), degree + d)

    for length in range(min_length, max_length + 1):
        for word, degree in _extend(0, length, (), 0):
            if degrees is None or degree in degrees:
                yield word


def multiply(space, *elements):
    """Product in S(V) of elements given as dicts word -> coefficient."""
    out = {}
    for terms in product(*(e.items() for e in elements)):
        coefficient = 1
        letters = ()
        for word, c in terms:
            coefficient *= c
            letters += word
        sign, word = normalize_word(space, letters)
        if sign:
            add_term(out, word, sign * coefficient)
    return out


def vector_as_element(vector):
    """A vector of V as an element of S^1(V)."""
    return {(i,): c for i, c in vector.items()}


def reduced_coproduct(space, element):
    """Reduced comultiplication of an element of S(V).

    Returns
    -------
    dict
        Maps pairs ``(word, word)`` to coefficients, representing
        elements of S(V) ⊗ S(V).
    """
    out = {}
    for word, c in element.items():
        n = len(word)
        for k in range(1, n):
            for positions in combinations(range(n), k):
                sign, rest = split_sign(space, word, positions)
                left = tuple(word[i] for i in positions)
                right = tuple(word[i] for i in rest)
                add_term(out, (left, right), sign * c)
    return out


def format_word(space, word, prefix="s"):
    return "∨".join(f"{prefix}{space.name(i)}" for i in word)


def format_element(space, element, prefix="s"):
    from lnalg.scalar import format_rational

    if not element:
        return "0"
    terms = []
    for word in sorted(element, key=lambda w: (len(w), [space.rank(i) for i in w])):
        c = element[word]
        text = format_word(space, word, prefix)
        terms.append(text if c == 1 else f"{format_rational(c)}*{text}")
    return " + ".join(terms)
