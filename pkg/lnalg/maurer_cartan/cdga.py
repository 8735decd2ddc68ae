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

"""Bounded commutative dg algebras."""

from itertools import combinations, product as cartesian

from lnalg.base import AxiomViolation
from lnalg.exactla.graded_space import GradedVectorSpace
from lnalg.exactla.vector import add_to, combine, format_vector, vector_from_names


class BoundedCdga:
    """Finite dimensional unital graded commutative dg algebra.

    Degrees are cohomological and lie in ``0..N``; the differential has
    degree +1. Products of basis vectors are given for one ordering of
    each pair, the other follows from graded commutativity and products
    with the unit are implicit.

    Attributes
    ----------
    space : GradedVectorSpace
    unit : int
        Basis index of the unit.
    """

    def __init__(self, basis, products=None, differential=None, unit="1", check=True):
        """
        Parameters
        ----------
        basis : list of tuple of (str, int)
            Basis names and non-negative cohomological degrees.
        products : dict, optional
            Maps pairs of basis names ``(a, b)`` to the product ``ab`` as
            a dict of names and rationals. Missing products are zero.
        differential : dict, optional
            Maps basis names to ``d_B`` of them. Zero if None (default).
        unit : str, optional
            Name of the unit, of degree 0. Default is "1".
        check : bool, optional
            Whether to verify the axioms. Default is True.

        Raises
        ------
        ValueError
            If degrees are negative or a product contradicts graded
            commutativity.
        AxiomViolation
            If associativity, the Leibniz rule or ``d_B^2 = 0`` fails.
        """
        self.space = GradedVectorSpace(basis)
        space = self.space
        if space.dim and space.bottom_degree < 0:
            raise ValueError("A bounded cdga lives in non-negative degrees.")
        self.unit = space.index(unit)
        if space.degree(self.unit) != 0:
            raise ValueError(f"The unit '{unit}' must have degree 0.")

        self._table = {}
        for i in range(space.dim):
            self._table[(self.unit, i)] = {i: 1}
            self._table[(i, self.unit)] = {i: 1}
        for (a, b), value in (products or {}).items():
            i, j = space.index(a), space.index(b)
            if self.unit in (i, j):
                raise ValueError("Products with the unit are implicit.")
            value = vector_from_names(space, value)
            for k in value:
                if space.degree(k) != space.degree(i) + space.degree(j):
                    raise ValueError(f"Product of '{a}' and '{b}' has the wrong degree.")
            sign = -1 if space.degree(i) * space.degree(j) % 2 else 1
            swapped = {k: sign * c for k, c in value.items()}
            for key, v in (((i, j), value), ((j, i), swapped)):
                if key in self._table and self._table[key] != v:
                    raise ValueError(
                        f"Product of '{a}' and '{b}' contradicts graded commutativity."
                    )
                if v:
                    self._table[key] = v

        self._d = {}
        for name, value in (differential or {}).items():
            i = space.index(name)
            value = vector_from_names(space, value)
            for k in value:
                if space.degree(k) != space.degree(i) + 1:
                    raise ValueError(f"Differential of '{name}' has the wrong degree.")
            if value:
                self._d[i] = value
        if check:
            self.check()

    @classmethod
    def ground_field(cls):
        """The cdga with basis ``1`` in degree 0."""
        return cls([("1", 0)])

    @classmethod
    def truncated_polynomial(cls, degree, power, variable="θ"):
        """``Q[t] / (t^power)`` with ``t`` in degree `degree`.

        Examples
        --------
        >>> B = BoundedCdga.truncated_polynomial(2, 3)
        >>> B.space.names
        ('1', 'θ', 'θ^2')
        """
        if degree % 2 and power > 2:
            raise ValueError("Odd generators square to zero.")

        def _name(k):
            return "1" if k == 0 else variable if k == 1 else f"{variable}^{k}"

        basis = [(_name(k), k * degree) for k in range(power)]
        products = {}
        for a in range(1, power):
            for b in range(a, power):
                if a + b < power:
                    products[(_name(a), _name(b))] = {_name(a + b): 1}
        return cls(basis, products)

    @classmethod
    def exterior(cls, generators, degree=1):
        """Exterior algebra on odd generators of degree `degree`.

        Basis vectors are named by concatenating generator names,
        e.g. ``ε1ε2``.
        """
        if degree % 2 == 0:
            raise ValueError("Exterior generators must have odd degree.")
        generators = list(generators)
        subsets = [()]
        for k in range(1, len(generators) + 1):
            subsets.extend(combinations(range(len(generators)), k))

        def _name(subset):
            return "".join(generators[i] for i in subset) or "1"

        basis = [(_name(s), len(s) * degree) for s in subsets]
        products = {}
        for a, s in enumerate(subsets):
            for t in subsets[a + 1:]:
                if not s or not t or set(s) & set(t):
                    continue
                letters = s + t
                inversions = sum(
                    1 for x in range(len(letters)) for y in range(x + 1, len(letters))
                    if letters[x] > letters[y]
                )
                products[(_name(s), _name(t))] = {
                    _name(tuple(sorted(letters))): -1 if inversions % 2 else 1
                }
        return cls(basis, products)

    @property
    def top_degree(self):
        return self.space.top_degree

    def product(self, i, j):
        """Product of the basis vectors `i` and `j`."""
        return self._table.get((i, j), {})

    def multiply(self, *vectors):
        """Product of vectors, from left to right."""
        out = {self.unit: 1}
        for vector in vectors:
            new = {}
            for (i, c), (j, e) in cartesian(out.items(), vector.items()):
                add_to(new, self.product(i, j), c * e)
            out = new
        return out

    def to_products(self):
        """Products of non-unit basis vectors, one ordering per pair."""
        space = self.space
        out = {}
        for (i, j), value in sorted(self._table.items()):
            if self.unit in (i, j) or i > j:
                continue
            out[(space.name(i), space.name(j))] = {
                space.name(k): c for k, c in sorted(value.items())
            }
        return out

    def to_differential(self):
        space = self.space
        return {
            space.name(i): {space.name(k): c for k, c in sorted(v.items())}
            for i, v in sorted(self._d.items())
        }

    def d(self, vector):
        out = {}
        for i, c in vector.items():
            add_to(out, self._d.get(i, {}), c)
        return out

    def check(self):
        """Verify associativity, ``d^2 = 0`` and the Leibniz rule.

        Raises
        ------
        AxiomViolation
        """
        space = self.space
        indices = range(space.dim)
        for i in indices:
            if self.d(self.d({i: 1})):
                raise AxiomViolation("d_B does not square to zero.", space.name(i))
        for i, j in cartesian(indices, indices):
            lhs = self.d(self.product(i, j))
            sign = -1 if space.degree(i) % 2 else 1
            rhs = combine(
                (1, self.multiply(self.d({i: 1}), {j: 1})),
                (sign, self.multiply({i: 1}, self.d({j: 1}))),
            )
            if lhs != rhs:
                raise AxiomViolation(
                    "d_B is not a derivation.", (space.name(i), space.name(j))
                )
            for k in indices:
                left = self.multiply(self.product(i, j), {k: 1})
                right = self.multiply({i: 1}, self.product(j, k))
                if left != right:
                    raise AxiomViolation(
                        "Product is not associative: "
                        f"{format_vector(space, left)} != {format_vector(space, right)}.",
                        (space.name(i), space.name(j), space.name(k)),
                    )
        return self

    def __eq__(self, other):
        if not isinstance(other, BoundedCdga):
            return NotImplemented
        return (
            self.space == other.space
            and self.unit == other.unit
            and self._table == other._table
            and self._d == other._d
        )

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return f"<BoundedCdga: dimensions {self.space.dimensions}>"
