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

"""Independent checks of pullback squares."""

from lnalg.base import NoFiller, NonUniqueFiller, Verdict
from lnalg.coalgebra.structure_maps import (
    CoalgebraMorphismData,
    compose_structure_maps,
    extend_morphism,
    is_codifferential,
)
from lnalg.coalgebra.words import format_word, reduced_coproduct, word_degree, words
from lnalg.exactla.elimination import kernel, matrix_from_columns, rank, solve_particular
from lnalg.exactla.vector import add_term, combine
from lnalg.linfty.morphism import LInftyMorphism, compose, morphism_arity_bound


def verify_universal_property(square, a, b, max_arity=None):
    """Solve for the filler of a cone arity by arity.

    The linear part of ``(q, q')`` is injective, so the structure maps
    of a filler ``u`` are determined one arity at a time by
    ``q u = b`` and ``q' u = a``.

    Parameters
    ----------
    square : PullbackSquare
    a : LInftyMorphism
        ``T -> L'``.
    b : LInftyMorphism
        ``T -> L``.
    max_arity : int, optional
        Defaults to the arity bound of the pullback.

    Returns
    -------
    LInftyMorphism
        The unique filler.

    Raises
    ------
    NoFiller
        If no filler exists.
    NonUniqueFiller
        If the filler is not unique.
    """
    if compose(square.g, a) != compose(square.f, b):
        raise NoFiller("The cone does not commute.")
    T, P = a.source, square.algebra
    sT, sP = T.suspended, P.suspended
    q, q_prime = square.q, square.q_prime
    Q1, Qp1 = q.data.linear, q_prime.data.linear
    max_arity = morphism_arity_bound(P) if max_arity is None else max_arity
    entries = {}

    def _value(word, m):
        return entries.get(word, {}) if len(word) < m else {}

    for word in words(sT, max_arity, set(sP.support)):
        m = len(word)
        degree = word_degree(sT, word)
        partial = extend_morphism(
            sT, sP, lambda u: _value(u, m), {word: 1}, range(2, m + 1)
        )
        rhs_b = combine((1, b.data.value(word)), (-1, q.data.evaluate(partial)))
        rhs_a = combine((1, a.data.value(word)), (-1, q_prime.data.evaluate(partial)))
        rows = [("b", i) for i in q.target.suspended.indices_in_degree(degree)]
        rows += [("a", i) for i in q_prime.target.suspended.indices_in_degree(degree)]
        cols = sP.indices_in_degree(degree)

        def _column(k):
            column = {("b", i): c for i, c in Q1.column(k).items()}
            column.update({("a", i): c for i, c in Qp1.column(k).items()})
            return column

        matrix = matrix_from_columns(rows, cols, _column)
        rhs = [rhs_b.get(i, 0) if side == "b" else rhs_a.get(i, 0) for side, i in rows]
        solution = solve_particular(matrix, rhs)
        if solution is None:
            raise NoFiller(
                "The cone does not factor through the pullback.",
                witness=format_word(sT, word),
            )
        if kernel(matrix):
            raise NonUniqueFiller(
                f"Fillers are not unique in degree {degree}.",
                witness=format_word(sT, word),
            )
        value = {cols[k]: v for k, v in enumerate(solution) if v != 0}
        if value:
            entries[word] = value
    filler = LInftyMorphism(T, P, CoalgebraMorphismData(sT, sP, entries))
    if compose(q, filler) != b or compose(q_prime, filler) != a:
        raise NoFiller("The solved structure maps do not fill the cone.")
    return filler


def verify_tangent_exactness(square):
    """Whether the tangent square is a pullback of chain complexes.

    Checks that ``(q_1, q'_1)`` is injective, that the pullback has the
    dimension of the fiber product ``ker(f_1 - g_1)`` in every degree and
    that the square commutes.

    Returns
    -------
    Verdict
        The witness is the first failing degree.
    """
    f1, g1 = square.f.linear, square.g.linear
    q1, qp1 = square.q.linear, square.q_prime.linear
    if f1 @ q1 != g1 @ qp1:
        return Verdict(False, message="The tangent square does not commute.")
    P = square.algebra.space
    L, Lp, Lpp = f1.source, g1.source, f1.target
    for d in sorted(set(P.support) | set(L.support) | set(Lp.support)):
        cols = P.indices_in_degree(d)
        rows = [("q", i) for i in L.indices_in_degree(d)]
        rows += [("q'", i) for i in Lp.indices_in_degree(d)]

        def _stacked(k):
            column = {("q", i): c for i, c in q1.column(k).items()}
            column.update({("q'", i): c for i, c in qp1.column(k).items()})
            return column

        if rank(matrix_from_columns(rows, cols, _stacked)) != len(cols):
            return Verdict(False, witness=d, message="(q, q') is not injective.")
        fiber_cols = [("f", i) for i in L.indices_in_degree(d)]
        fiber_cols += [("g", i) for i in Lp.indices_in_degree(d)]

        def _difference(key):
            side, i = key
            return f1.column(i) if side == "f" else {j: -c for j, c in g1.column(i).items()}

        matrix = matrix_from_columns(Lpp.indices_in_degree(d), fiber_cols, _difference)
        if len(kernel(matrix)) != len(cols):
            return Verdict(
                False,
                witness=d,
                message="Pullback and fiber product have different dimensions.",
            )
    return Verdict(True)


def verify_pullback_claims(square):
    """Check that ``H`` and ``J`` are inverse, that the pullback brackets
    form a codifferential and that the square commutes.

    Returns
    -------
    Verdict
    """
    strict = square.strict
    identity = CoalgebraMorphismData.identity(strict.E.suspended)
    if compose_structure_maps(strict.H, strict.J) != identity:
        return Verdict(False, witness="HJ", message="HJ is not the identity.")
    if compose_structure_maps(strict.J, strict.H) != identity:
        return Verdict(False, witness="JH", message="JH is not the identity.")
    verdict = is_codifferential(square.algebra.structure)
    if not verdict:
        return verdict
    if compose(square.f, square.q) != compose(square.g, square.q_prime):
        return Verdict(False, witness="square", message="The square does not commute.")
    return Verdict(True)


def in_coalgebra_pullback(y, strict):
    """Membership in the coalgebra pullback of ``S(sL) -> S(sL'') <- S(sL')``.

    An element ``y`` of ``S(sE)`` lies in the pullback when ``F pr`` and
    ``G pr'`` agree on ``y`` and on the right legs of its reduced
    coproduct.

    Parameters
    ----------
    y : dict
        Element of ``S(sE)`` for the product ``E`` of `strict`.
    strict : StrictPullbackData

    Returns
    -------
    Verdict
    """
    sE = strict.E.suspended
    F_pr = compose_structure_maps(strict.f.data, strict.pr.data)
    G_pr = compose_structure_maps(strict.g.data, strict.pr_prime.data)
    if F_pr.apply(y) != G_pr.apply(y):
        return Verdict(False, witness="y", message="F pr and G pr' differ.")
    lhs, rhs = {}, {}
    for (left, right), c in reduced_coproduct(sE, y).items():
        for u, cu in F_pr.apply({right: 1}).items():
            add_term(lhs, (left, u), c * cu)
        for u, cu in G_pr.apply({right: 1}).items():
            add_term(rhs, (left, u), c * cu)
    if lhs != rhs:
        return Verdict(
            False, witness="coproduct", message="The coproduct legs differ."
        )
    return Verdict(True)
