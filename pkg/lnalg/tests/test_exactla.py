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

from fractions import Fraction

import numpy as np
import pytest
import sympy

from lnalg.base import NotChainMap, NotInSubspace, NotSurjective
from lnalg.exactla import (
    ChainComplex,
    ChainMap,
    GradedLinearMap,
    GradedVectorSpace,
    Subspace,
    contracting_homotopy_for_acyclic,
    direct_sum,
    homology,
    homology_dimensions,
    induced_map_on_homology,
    is_quasi_isomorphism,
    is_surjective_in_degrees,
    section_of_surjection,
)
from lnalg.exactla.elimination import inverse, kernel, rank, solve_particular
from lnalg.exactla.vector import (
    add_to,
    combine,
    format_vector,
    vector_from_names,
    vector_to_names,
)


@pytest.fixture
def plane():
    return GradedVectorSpace([("x", 0), ("y", 0)])


class TestGradedVectorSpace:
    def test_init(self):
        V = GradedVectorSpace([("b", 1), ("a", 1), ("c", 0)])
        assert V.names == ("b", "a", "c")
        assert V.dim == len(V) == 3
        assert V.support == (0, 1)
        assert V.dimensions == {0: 1, 1: 2}
        assert (V.top_degree, V.bottom_degree) == (1, 0)
        assert np.allclose(V.dimension_table(), [[0, 1], [1, 2]])

    def test_canonical_order(self):
        V = GradedVectorSpace([("b", 1), ("a", 1), ("c", 0)])
        assert V.order == (2, 1, 0)
        assert [V.rank(i) for i in range(3)] == [2, 1, 0]

    def test_empty(self):
        V = GradedVectorSpace()
        assert V.dim == 0
        assert V.support == ()
        assert V.top_degree is None
        assert V.dimension_table().shape == (0, 2)

    @pytest.mark.parametrize(
        "basis, match",
        [
            ([("x", 0), ("x", 1)], "must be unique"),
            ([("x", 0.5)], "is not an integer"),
            ([("x",)], "is not a \\(name, degree\\) pair"),
            ([("x", True)], "is not an integer"),
        ],
    )
    def test_init_raises(self, basis, match):
        with pytest.raises(ValueError, match=match):
            _ = GradedVectorSpace(basis)

    def test_index(self, plane):
        assert plane.index("y") == 1
        with pytest.raises(ValueError, match="'z' is not a basis vector"):
            _ = plane.index("z")

    def test_suspend(self, plane):
        sV = plane.suspend()
        assert sV.names == plane.names
        assert sV.support == (1,)
        assert sV.desuspend() == plane

    def test_equality(self, plane):
        assert plane == GradedVectorSpace([("x", 0), ("y", 0)])
        assert plane != GradedVectorSpace([("y", 0), ("x", 0)])
        assert hash(plane) == hash(GradedVectorSpace([("x", 0), ("y", 0)]))

    def test_direct_sum(self, plane):
        V, offsets = direct_sum(plane, GradedVectorSpace([("x", 1)]), plane)
        assert offsets == [0, 2, 3]
        assert V.names == ("x", "y", "x'", "x''", "y'")
        assert V.degrees == (0, 0, 1, 0, 0)


class TestGradedLinearMap:
    @pytest.fixture
    def shear(self, plane):
        return GradedLinearMap(plane, plane, {0: {0: 1}, 1: {0: 1, 1: 1}})

    def test_call(self, shear):
        assert shear({1: 2}) == {0: 2, 1: 2}
        assert shear({0: 1, 1: -1}) == {1: -1}

    def test_wrong_degree_raises(self, plane):
        V = GradedVectorSpace([("z", 1)])
        with pytest.raises(ValueError, match="in the wrong degree"):
            _ = GradedLinearMap(plane, V, {0: {0: 1}})
        f = GradedLinearMap(plane, V, {0: {0: 1}}, degree_shift=1)
        assert f.degree_shift == 1

    def test_zero_columns_dropped(self, plane):
        f = GradedLinearMap(plane, plane, {0: {0: 0}})
        assert f.is_zero()
        assert f == GradedLinearMap.zero(plane, plane)

    def test_algebra(self, shear, plane):
        identity = GradedLinearMap.identity(plane)
        assert (shear - identity).columns == {1: {0: 1}}
        assert (shear @ identity) == shear
        assert (2 * shear) == shear + shear
        assert (-shear + shear).is_zero()

    def test_compose_raises(self, shear):
        other = GradedLinearMap.identity(GradedVectorSpace([("z", 0)]))
        with pytest.raises(ValueError, match="not composable"):
            _ = shear @ other

    def test_inverse(self, shear, plane):
        assert shear.is_bijective()
        inv = shear.inverse()
        assert inv.columns == {0: {0: 1}, 1: {0: -1, 1: 1}}
        assert shear @ inv == GradedLinearMap.identity(plane)

    def test_inverse_raises(self, plane):
        with pytest.raises(ValueError, match="not invertible"):
            _ = GradedLinearMap.zero(plane, plane).inverse()

    def test_matrix_and_rank(self, shear):
        assert shear.matrix(0) == sympy.Matrix([[1, 1], [0, 1]])
        assert shear.rank(0) == 2
        assert shear.matrix(5).shape == (0, 0)


class TestSurjection:
    @pytest.fixture
    def summation(self, plane):
        line = GradedVectorSpace([("s", 0)])
        return GradedLinearMap(plane, line, {0: {0: 1}, 1: {0: 1}})

    def test_section(self, summation):
        assert is_surjective_in_degrees(summation, [0])
        sigma = section_of_surjection(summation, [0])
        assert sigma.columns == {0: {0: 1}}
        assert summation @ sigma == GradedLinearMap.identity(summation.target)

    def test_section_raises(self, plane):
        line = GradedVectorSpace([("s", 0)])
        zero = GradedLinearMap.zero(plane, line)
        assert not is_surjective_in_degrees(zero, [0])
        with pytest.raises(NotSurjective, match="degree 0") as error:
            _ = section_of_surjection(zero, [0])
        assert error.value.witness == 0

    def test_section_ignores_other_degrees(self, summation):
        sigma = section_of_surjection(summation, [3])
        assert sigma.is_zero()


class TestElimination:
    def test_kernel(self):
        null = kernel(sympy.Matrix([[1, 1, 0], [0, 0, 1]]))
        assert null == [(1, [-1, 1, 0])]
        assert kernel(sympy.Matrix([[1, 0], [0, 1]])) == []

    def test_rank(self):
        assert rank(sympy.Matrix([[1, 2], [2, 4]])) == 1
        assert rank(sympy.zeros(0, 3)) == 0

    @pytest.mark.parametrize(
        "matrix, rhs, expected",
        [
            ([[1, 0], [0, 2]], [3, 4], [3, 2]),
            ([[1, 1], [1, 1]], [1, 2], None),
            ([[1, 1]], [5], [5, 0]),
        ],
    )
    def test_solve_particular(self, matrix, rhs, expected):
        assert solve_particular(sympy.Matrix(matrix), rhs) == expected

    def test_solve_empty(self):
        assert solve_particular(sympy.zeros(2, 0), [0, 0]) == []
        assert solve_particular(sympy.zeros(2, 0), [1, 0]) is None

    def test_inverse(self):
        inv = inverse(sympy.Matrix([[2, 0], [0, 4]]))
        assert inv == [[Fraction(1, 2), 0], [0, Fraction(1, 4)]]


class TestVector:
    def test_add_to_drops_zeros(self):
        v = {0: Fraction(1)}
        add_to(v, {0: 1, 1: 2}, -1)
        assert v == {1: -2}

    def test_combine(self):
        assert combine((1, {0: 1}), (2, {0: 1, 1: 1})) == {0: 3, 1: 2}

    def test_names(self, plane):
        v = vector_from_names(plane, {"y": "1/2", "x": 0})
        assert v == {1: Fraction(1, 2)}
        assert vector_to_names(plane, {0: Fraction(-3, 2)}) == {"x": "-3/2"}

    @pytest.mark.parametrize(
        "vector, expected",
        [
            ({}, "0"),
            ({0: 1, 1: Fraction(-1, 2)}, "x - 1/2*y"),
            ({1: -1}, "-y"),
        ],
    )
    def test_format_vector(self, plane, vector, expected):
        assert format_vector(plane, vector) == expected


class TestSubspace:
    @pytest.fixture
    def diagonal(self, plane):
        return Subspace(plane, [{0: 1, 1: 1}], names=["δ"])

    def test_coordinates(self, diagonal):
        assert diagonal.space.names == ("δ",)
        assert diagonal.coordinates({0: 2, 1: 2}) == {0: 2}
        assert diagonal.embed({0: 3}) == {0: 3, 1: 3}
        assert diagonal.contains({})

    def test_not_in_subspace(self, diagonal):
        assert not diagonal.contains({0: 1})
        with pytest.raises(NotInSubspace, match="not in the subspace"):
            _ = diagonal.coordinates({0: 1})

    def test_default_names(self, plane):
        S = Subspace(plane, [{0: 1}, {1: 1}])
        assert S.space.names == ("v0", "v1")

    @pytest.mark.parametrize(
        "vectors, match",
        [
            ([{}], "is zero"),
            ([{0: 1}, {0: 2}], "dependent in degree 0"),
        ],
    )
    def test_init_raises(self, plane, vectors, match):
        with pytest.raises(ValueError, match=match):
            _ = Subspace(plane, vectors)

    def test_inhomogeneous_raises(self):
        V = GradedVectorSpace([("x", 0), ("z", 1)])
        with pytest.raises(ValueError, match="not homogeneous"):
            _ = Subspace(V, [{0: 1, 1: 1}])

    def test_inclusion(self, diagonal, plane):
        i = diagonal.inclusion()
        assert i.source == diagonal.space
        assert i.target == plane
        assert i({0: 1}) == {0: 1, 1: 1}


class TestChainComplex:
    def test_square_raises(self):
        V = GradedVectorSpace([("a", 0), ("b", 1), ("c", 2)])
        with pytest.raises(ValueError, match="does not square to zero"):
            _ = ChainComplex(V, {2: {1: 1}, 1: {0: 1}})

    def test_wrong_degree_raises(self, plane):
        with pytest.raises(ValueError, match="degree -1 endomorphism"):
            _ = ChainComplex(plane, GradedLinearMap.identity(plane))

    def test_homology_of_acyclic(self, acyclic_complex):
        H = homology(acyclic_complex)
        assert H.space.dim == 0
        assert H.dimensions == {0: 0, 1: 0}
        assert H.is_boundary({0: 1})

    def test_homology_names(self):
        V = GradedVectorSpace([("x", 0), ("y", 0), ("z", 1), ("w", 1)])
        c = ChainComplex(V, {2: {0: 1}})
        H = homology(c)
        assert H.space.names == ("[y]", "[w]")
        assert H.dimensions == {0: 1, 1: 1}
        assert H.class_of({0: 1, 1: 2}) == {0: 2}
        assert H.representatives == [{1: 1}, {3: 1}]

    @pytest.mark.parametrize(
        "basis, columns, expected",
        [
            ([("b", 0), ("a", 1)], {1: {0: 1}}, {0: 0, 1: 0}),
            ([("x", 0), ("y", 0), ("z", 1), ("w", 1)], {2: {0: 1}}, {0: 1, 1: 1}),
            (
                [("p", 0), ("q", 0), ("r", 1), ("s", 1), ("t", 2)],
                {2: {0: 1, 1: 1}, 3: {0: 2, 1: 2}, 4: {2: 2, 3: -1}},
                {0: 1, 1: 0, 2: 0},
            ),
            ([("u", 1), ("v", 3)], {}, {1: 1, 3: 1}),
        ],
    )
    def test_homology_dimensions(self, basis, columns, expected):
        c = ChainComplex(GradedVectorSpace(basis), columns)
        assert homology_dimensions(c) == expected
        assert homology(c).dimensions == expected

    def test_elimination_orders_disagree(self, acyclic_complex, monkeypatch):
        monkeypatch.setattr(
            "lnalg.exactla.chain_complex.homology_dimensions",
            lambda c: {0: 1, 1: 0},
        )
        with pytest.raises(ArithmeticError, match="dimension 0 from the cycle basis"):
            _ = homology(acyclic_complex)

    def test_class_of_non_cycle_raises(self):
        V = GradedVectorSpace([("x", 0), ("z", 1)])
        H = homology(ChainComplex(V, {1: {0: 1}}))
        with pytest.raises(NotInSubspace):
            _ = H.class_of({1: 1})


class TestChainMap:
    def test_not_chain_map(self, acyclic_complex):
        V = acyclic_complex.space
        f = ChainMap(acyclic_complex, acyclic_complex, GradedLinearMap(V, V, {1: {1: 1}}))
        verdict = f.is_chain_map()
        assert not verdict
        assert verdict.witness == "a"
        with pytest.raises(NotChainMap, match="Witness: a"):
            f.check()

    def test_degree_raises(self, acyclic_complex):
        V = acyclic_complex.space
        with pytest.raises(ValueError, match="degree 0"):
            _ = ChainMap(
                acyclic_complex,
                acyclic_complex,
                GradedLinearMap(V, V, {0: {1: 1}}, degree_shift=1),
            )

    def test_quasi_isomorphism(self, acyclic_complex):
        zero = ChainComplex(GradedVectorSpace())
        i = ChainMap(zero, acyclic_complex, GradedLinearMap(zero.space, acyclic_complex.space))
        assert is_quasi_isomorphism(i)
        hf = induced_map_on_homology(i)
        assert hf.source.dim == hf.target.dim == 0

    def test_not_quasi_isomorphism(self):
        V = GradedVectorSpace([("x", 0)])
        c = ChainComplex(V)
        zero = ChainMap(c, c, GradedLinearMap.zero(V, V))
        assert not is_quasi_isomorphism(zero)
        assert is_quasi_isomorphism(zero, degrees=[1])

    def test_contracting_homotopy(self, acyclic_complex):
        zero = ChainComplex(GradedVectorSpace())
        V = acyclic_complex.space
        f = ChainMap(acyclic_complex, zero, GradedLinearMap(V, zero.space))
        section, h = contracting_homotopy_for_acyclic(f)
        assert section.linear.is_zero()
        assert h.degree_shift == 1
        d = acyclic_complex.d
        assert d @ h + h @ d == GradedLinearMap.identity(V)
