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

"""The tame L-infinity algebra ``L x B`` of a Lie n-algebra and a cdga.

The space ``(L x B)_m`` is the sum of ``L_i x B^j`` with ``i - j = m``,
with basis vectors ``x⊗b``. The brackets are

``l^B_k(x1⊗b1, ..., xk⊗bk) = (-1)^e l_k(x1, ..., xk) ⊗ b1...bk``

with ``e = sum_{i < j} |b_i||x_j|``, plus ``(-1)^|x| x⊗d_B b`` in
arity one. Morphisms are tensored by the same rule.
"""

from lnalg.base import AxiomViolation
from lnalg.coalgebra.structure_maps import (
    CoalgebraMorphismData,
    CoderivationData,
    is_codifferential,
)
from lnalg.coalgebra.words import words
from lnalg.exactla.graded_space import GradedVectorSpace
from lnalg.exactla.vector import add_to
from lnalg.linfty.algebra import decalage_sign, evaluate_multilinear


def tensor_space(space, B):
    """The graded space ``space x B`` with basis ``x⊗b``, ``x`` major."""
    return GradedVectorSpace(
        [
            (f"{x}⊗{b}", dx - db)
            for x, dx in space.basis
            for b, db in B.space.basis
        ]
    )


class _TensorIndex:
    """Index arithmetic of ``V x B``."""

    def __init__(self, space, B):
        self.space = space
        self.B = B
        self.dim_B = B.space.dim

    def split(self, i):
        return divmod(i, self.dim_B)

    def join(self, x, b):
        return x * self.dim_B + b


def tensored_value(source, target, B, structure, word):
    """The structure map ``S^k(s(V x B)) -> s(W x B)`` on one word.

    Parameters
    ----------
    source, target : GradedVectorSpace
        ``V`` and ``W``, unsuspended.
    B : BoundedCdga
    structure : StructureMaps
        Structure maps on the suspensions of `source` and `target`.
    word : tuple of int
        Canonical word of ``s(V x B)``.

    Returns
    -------
    dict
        Vector of ``s(W x B)``.
    """
    index = _TensorIndex(source, B)
    target_index = _TensorIndex(target, B)
    k = len(word)
    if k > structure.bound:
        return {}
    pairs = [index.split(t) for t in word]
    xs = [x for x, _ in pairs]
    bs = [b for _, b in pairs]
    deg_x = [source.degree(x) for x in xs]
    deg_b = [B.space.degree(b) for b in bs]
    exponent = sum(deg_b[i] * deg_x[j] for i in range(k) for j in range(i + 1, k))
    sign = decalage_sign([dx - db for dx, db in zip(deg_x, deg_b)])
    sign *= -1 if exponent % 2 else 1
    # Skew value of the underlying structure map, desuspended
    value = evaluate_multilinear(source, structure, [{x: 1} for x in xs])
    if not value:
        return {}
    product = B.multiply(*({b: 1} for b in bs))
    out = {}
    for j, c in value.items():
        for b, e in product.items():
            add_to(out, {target_index.join(j, b): 1}, sign * c * e)
    return out


class TensorAlgebra:
    """The Z-graded L-infinity algebra ``(L x B, l^B)``.

    Structure maps are computed on demand and cached.

    Attributes
    ----------
    L : LieNAlgebra
    B : BoundedCdga
    space : GradedVectorSpace
    suspended : GradedVectorSpace
    bound : int
        Largest arity of a nonzero bracket.
    """

    def __init__(self, L, B, check=True):
        """
        Parameters
        ----------
        L : LieNAlgebra
        B : BoundedCdga
        check : bool, optional
            Whether to verify the L-infinity relations. Default is True.

        Raises
        ------
        AxiomViolation
            If the tensored brackets do not form a codifferential.
        """
        self.L = L
        self.B = B
        self.space = tensor_space(L.space, B)
        self.suspended = self.space.suspend()
        self._index = _TensorIndex(L.space, B)
        self.bound = max((len(w) for w in L.structure.entries), default=1)
        self._cache = {}
        self._structure = None
        if check:
            self.check()

    def index(self, x, b):
        """Basis index of ``x⊗b`` for basis names of L and B."""
        return self._index.join(self.L.space.index(x), self.B.space.index(b))

    def split(self, i):
        """Basis indices in L and B of the basis vector ``i``."""
        return self._index.split(i)

    @property
    def tameness_bound(self):
        """``N`` such that brackets of arity ``k >= N`` vanish in degree -1."""
        return self.B.top_degree + 1

    def value(self, word):
        """``delta^{B,1}_k`` on a canonical word of the suspension."""
        word = tuple(word)
        if word not in self._cache:
            value = tensored_value(
                self.L.space, self.L.space, self.B, self.L.structure, word
            )
            if len(word) == 1:
                x, b = self.split(word[0])
                sign = -1 if self.L.space.degree(x) % 2 else 1
                for c, e in self.B.d({b: 1}).items():
                    add_to(value, {self._index.join(x, c): 1}, sign * e)
            self._cache[word] = value
        return self._cache[word]

    def evaluate(self, element):
        """Projection onto cogenerators of ``delta`` applied to `element`."""
        out = {}
        for word, c in element.items():
            add_to(out, self.value(word), c)
        return out

    @property
    def structure(self):
        """All structure maps as :class:`CoderivationData`."""
        if self._structure is None:
            degrees = {d + 1 for d in self.suspended.support}
            entries = {}
            for word in words(self.suspended, self.bound, degrees):
                value = self.value(word)
                if value:
                    entries[word] = value
            self._structure = CoderivationData(self.suspended, entries, self.bound)
        return self._structure

    def check(self, up_to_arity=None):
        """Verify that ``l^B`` satisfies the L-infinity relations.

        Parameters
        ----------
        up_to_arity : int, optional
            Default is ``2 * bound - 1``.

        Raises
        ------
        AxiomViolation
        """
        verdict = is_codifferential(self.structure, up_to_arity)
        if not verdict:
            raise AxiomViolation(
                "Tensored brackets do not square to zero.", witness=verdict.witness
            )
        return self

    def is_tame(self, N=None):
        """Whether brackets of arity ``k >= N`` vanish on degree -1 inputs."""
        N = self.tameness_bound if N is None else N
        letters = self.suspended.indices_in_degree(0)
        sub = GradedVectorSpace([(self.suspended.name(i), 0) for i in letters])
        for word in words(sub, self.bound, min_length=N):
            if self.value(tuple(letters[i] for i in word)):
                return False
        return True

    def degree_minus_one(self):
        """Basis indices of ``(L x B)_{-1}``."""
        return self.space.indices_in_degree(-1)

    def __repr__(self):
        return f"<TensorAlgebra: dimensions {self.space.dimensions}>"


def tensor(L, B, check=True):
    """The tame L-infinity algebra ``L x B``.

    Returns
    -------
    TensorAlgebra
    """
    return TensorAlgebra(L, B, check=check)


def tensor_morphism(f, B):
    """Structure maps of ``f^B: S(s(L x B)) -> S(s(L' x B))``.

    Only words in degree -1 letters are needed for pushing forward
    Maurer-Cartan elements, so the structure maps are returned as a
    callable on words.

    Returns
    -------
    callable
    """
    cache = {}

    def _value(word):
        word = tuple(word)
        if word not in cache:
            cache[word] = tensored_value(
                f.source.space, f.target.space, B, f.data, word
            )
        return cache[word]

    return _value


def tensor_morphism_data(f, B, source=None, target=None):
    """``f^B`` as :class:`CoalgebraMorphismData` on all words."""
    source = tensor(f.source, B, check=False) if source is None else source
    target = tensor(f.target, B, check=False) if target is None else target
    value = tensor_morphism(f, B)
    degrees = set(target.suspended.support)
    entries = {}
    for word in words(source.suspended, f.data.bound, degrees):
        v = value(word)
        if v:
            entries[word] = v
    return CoalgebraMorphismData(
        source.suspended, target.suspended, entries, f.data.bound
    )
