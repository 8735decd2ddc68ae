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

from math import factorial

from hypothesis import given, strategies as st
import pytest

from lnalg.coalgebra import (
    CoalgebraMorphismData,
    CoderivationData,
    coalgebra_chain_map,
    coalgebra_complex,
    compose_structure_maps,
    format_word,
    invert_structure_maps,
    is_codifferential,
    is_dg_morphism,
    koszul_sign,
    multiply,
    normalize_word,
    reduced_coalgebra_homology,
    reduced_coproduct,
    shuffles,
    words,
)
from lnalg.base import JacobiViolation, NotMorphism
from lnalg.exactla import GradedVectorSpace, is_quasi_isomorphism
from lnalg.linfty import LieNAlgebra, LInftyMorphism, classify


@pytest.fixture
def odd():
    """``a, b`` in degree 1 and ``c`` in degree 2."""
    return GradedVectorSpace([("a", 1), ("b", 1), ("c", 2)])


@pytest.fixture
def non_jacobi():
    space = GradedVectorSpace([("e1", 0), ("e2", 0), ("e3", 0)])
    brackets = {
        ("e1", "e2"): {"e1": 1},
        ("e1", "e3"): {"e1": 1},
        ("e2", "e3"): {"e2": 1},
    }
    return space, brackets


@st.composite
def graded_permutations(draw):
    degrees = draw(st.lists(st.integers(0, 3), min_size=1, max_size=6))
    n = len(degrees)
    p = draw(st.permutations(range(n)))
    q = draw(st.permutations(range(n)))
    return degrees, p, q


class TestKoszulSign:
    @pytest.mark.parametrize(
        "permutation, degrees, expected",
        [
            ((1, 0), (1, 1), -1),
            ((1, 0), (1, 2), 1),
            ((0, 1, 2), (1, 1, 1), 1),
            ((2, 0, 1), (1, 1, 1), 1),
            ((1, 0, 2), (1, 3, 0), -1),
        ],
    )
    def test_sign(self, permutation, degrees, expected):
        assert koszul_sign(permutation, degrees) == expected

    @given(graded_permutations())
    def test_sign_is_multiplicative(self, data):
        degrees, p, q = data
        permuted = [degrees[i] for i in p]
        composite = [p[i] for i in q]
        assert koszul_sign(composite, degrees) == koszul_sign(
            p, degrees
        ) * koszul_sign(q, permuted)

    @given(st.lists(st.integers(0, 5).map(lambda d: 2 * d), min_size=1, max_size=6))
    def test_even_letters_commute(self, degrees):
        reverse = list(range(len(degrees)))[::-1]
        assert koszul_sign(reverse, degrees) == 1


class TestShuffles:
    def test_shuffles(self):
        assert list(shuffles(1, 1)) == [(0, 1), (1, 0)]
        assert list(shuffles(2, 1)) == [(0, 1, 2), (0, 2, 1), (1, 2, 0)]

    @pytest.mark.parametrize("sizes", [(1, 2), (2, 2), (1, 1, 1), (3, 1, 2)])
    def test_count(self, sizes):
        expected = factorial(sum(sizes))
        for p in sizes:
            expected //= factorial(p)
        assert len(set(shuffles(*sizes))) == expected

    def test_raises(self):
        with pytest.raises(ValueError, match="must be positive"):
            _ = list(shuffles(2, 0))


class TestWords:
    @pytest.mark.parametrize(
        "letters, expected",
        [
            ((1, 0), (-1, (0, 1))),
            ((0, 1), (1, (0, 1))),
            ((2, 0), (1, (0, 2))),
            ((0, 0), (0, ())),
            ((2, 2), (1, (2, 2))),
            ((2, 1, 0), (-1, (0, 1, 2))),
        ],
    )
    def test_normalize_word(self, odd, letters, expected):
        assert normalize_word(odd, letters) == expected

    def test_words(self, odd):
        assert list(words(odd, 2)) == [
            (0,),
            (1,),
            (2,),
            (0, 1),
            (0, 2),
            (1, 2),
            (2, 2),
        ]
        assert list(words(odd, 2, degrees={3})) == [(0, 2), (1, 2)]
        assert list(words(odd, 3, min_length=3, degrees={4})) == [(0, 1, 2)]

    def test_multiply(self, odd):
        a, b = {(0,): 1}, {(1,): 1}
        assert multiply(odd, a, b) == {(0, 1): 1}
        assert multiply(odd, b, a) == {(0, 1): -1}
        assert multiply(odd, a, a) == {}

    def test_reduced_coproduct(self, odd):
        assert reduced_coproduct(odd, {(0, 1): 1}) == {
            ((0,), (1,)): 1,
            ((1,), (0,)): -1,
        }
        assert reduced_coproduct(odd, {(2,): 1}) == {}

    def test_format_word(self, odd):
        assert format_word(odd, (0, 2)) == "sa∨sc"
        assert format_word(odd, (1,), prefix="") == "b"


class TestStructureMaps:
    def test_non_canonical_raises(self, odd):
        with pytest.raises(ValueError, match="is not a canonical word"):
            _ = CoderivationData(odd, {(1, 0): {0: 1}})

    def test_wrong_degree_raises(self, odd):
        with pytest.raises(ValueError, match="in the wrong degree"):
            _ = CoderivationData(odd, {(0, 1): {2: 1}})

    def test_bound(self, odd):
        delta = CoderivationData(odd, {(0, 1): {0: 1}})
        assert delta.bound == 2
        assert not delta.is_linear()
        with pytest.raises(ValueError, match="exceeds the bound"):
            _ = delta.with_bound(1)

    def test_components(self, solvable):
        delta = solvable.structure
        assert [c.arity for c in delta.components] == [1, 2]
        assert delta.component(1).is_zero()
        assert delta.component(2).entries == {(0, 1): {0: 1}}

    def test_compose_and_invert(self, odd):
        F = CoalgebraMorphismData(
            odd, odd, {(0,): {0: 1}, (1,): {1: 1}, (2,): {2: 1}, (0, 1): {2: 1}}
        )
        G = invert_structure_maps(F)
        identity = CoalgebraMorphismData.identity(odd, bound=2)
        assert compose_structure_maps(G, F) == identity
        assert compose_structure_maps(F, G) == identity
        assert G.value((0, 1)) == {2: -1}


class TestCodifferential:
    def test_lie_algebra(self, solvable, string_so3):
        assert is_codifferential(solvable.structure)
        assert is_codifferential(string_so3.structure)

    def test_jacobi_failure(self, non_jacobi):
        space, brackets = non_jacobi
        L = LieNAlgebra.from_brackets(space, brackets, check=False)
        verdict = is_codifferential(L.structure)
        assert not verdict
        assert verdict.witness == (3, "se1∨se2∨se3")
        with pytest.raises(JacobiViolation, match="arity 3"):
            _ = LieNAlgebra.from_brackets(space, brackets)

    def test_dg_morphism(self, solvable_quotient):
        f = solvable_quotient["f"]
        assert is_dg_morphism(f.data, f.source.structure, f.target.structure)

    def test_dg_morphism_failure(self, solvable_quotient):
        g, k = solvable_quotient["g"], solvable_quotient["h"]
        f = LInftyMorphism.strict(g, k, {"e1": {"ẽ": 1}}, check=False)
        verdict = is_dg_morphism(f.data, g.structure, k.structure)
        assert not verdict
        assert verdict.witness == (2, "se1∨se2")
        with pytest.raises(NotMorphism, match="arity 2"):
            _ = LInftyMorphism.strict(g, k, {"e1": {"ẽ": 1}})


class TestCoalgebraHomology:
    def test_solvable(self, solvable):
        H = reduced_coalgebra_homology(solvable.structure, 4)
        assert H.space.names == ("[se2]",)
        assert H.dimensions[1] == 1
        assert H.dimensions[2] == 0

    def test_cutoff_is_required(self, solvable):
        with pytest.raises(TypeError, match="degree_cutoff"):
            _ = reduced_coalgebra_homology(solvable.structure)
        with pytest.raises(TypeError, match="degree_cutoff"):
            _ = coalgebra_complex(solvable.structure)

    def test_cutoff(self, solvable):
        complex_ = coalgebra_complex(solvable.structure, 1)
        assert complex_.words == [(0,), (1,)]
        assert complex_.d.is_zero()

    def test_degree_zero_raises(self, solvable):
        with pytest.raises(ValueError, match="only for spaces in positive degrees"):
            _ = coalgebra_complex(CoderivationData(solvable.space), 4)

    def test_quasi_isomorphism_is_not_weak_equivalence(self, solvable_quotient):
        f = solvable_quotient["f"]
        source = coalgebra_complex(f.source.structure, 5)
        target = coalgebra_complex(f.target.structure, 5)
        F = coalgebra_chain_map(f.data, source, target)
        assert F.is_chain_map()
        assert is_quasi_isomorphism(F, degrees=range(1, 5))
        assert not classify(f).is_weak_equivalence

    def test_cutoffs_differ_raises(self, solvable_quotient):
        f = solvable_quotient["f"]
        with pytest.raises(ValueError, match="different cutoffs"):
            _ = coalgebra_chain_map(
                f.data,
                coalgebra_complex(f.source.structure, 2),
                coalgebra_complex(f.target.structure, 3),
            )
