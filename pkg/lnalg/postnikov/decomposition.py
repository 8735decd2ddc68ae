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

"""Functorial decompositions of Postnikov towers.

An acyclic fibration ``f: L -> L'`` splits as ``L ≅ L' x ker f_1``. For
a strict L-infinity epimorphism the splitting of ``q_{<m+1}`` can be
chosen compatibly on source and target, and ``tau_{<=m} L`` is
isomorphic to a twisted product ``tau_{<m} L + H_m``.
"""

from lnalg.base import (
    AxiomViolation,
    HomologyNotSurjective,
    NotAcyclicFibration,
    NotEpi,
    NotStrict,
)
from lnalg.coalgebra.structure_maps import CoalgebraMorphismData, CoderivationData
from lnalg.coalgebra.words import multiply, vector_as_element, words
from lnalg.exactla.chain_complex import ChainMap, contracting_homotopy_for_acyclic
from lnalg.exactla.elimination import kernel, solve_particular
from lnalg.exactla.graded_space import direct_sum
from lnalg.exactla.linear_map import (
    GradedLinearMap,
    is_surjective_in_degrees,
    section_of_surjection,
)
from lnalg.exactla.subspace import Subspace
from lnalg.exactla.vector import combine, vector_to_names
from lnalg.linfty.algebra import LieNAlgebra
from lnalg.linfty.morphism import (
    LInftyMorphism,
    classify,
    compose,
    pairing,
    product,
    product_morphism,
    tangent,
)
from lnalg.postnikov.truncation import (
    LESS,
    LESS_EQUAL,
    connecting_morphism,
    truncate,
    truncate_morphism,
)
from lnalg.scalar import to_rational


def _kernel_subspace(linear, prefix, degrees=None):
    """Kernel of `linear` with basis vectors named ``prefix(name)``."""
    space = linear.source
    vectors = []
    names = []
    for d in space.support if degrees is None else degrees:
        cols = space.indices_in_degree(d)
        for free, vector in kernel(linear.matrix(d)):
            vectors.append({cols[k]: v for k, v in enumerate(vector) if v != 0})
            names.append(f"{prefix}({space.name(cols[free])})")
    return Subspace(space, vectors, names)


def _renamed(source, target, vector):
    """`vector` of `source` as a vector of `target` with the same names."""
    return {target.index(source.name(i)): c for i, c in vector.items()}


class AcyclicSplitting:
    """The isomorphism ``(f, r): L -> L' x ker f_1`` of an acyclic
    fibration.

    Attributes
    ----------
    f : LInftyMorphism
    kernel : LieNAlgebra
        ``ker f_1`` as an abelian Lie n-algebra.
    subspace : Subspace
        ``ker f_1`` inside the source of `f`.
    section : ChainMap
        ``sigma`` with ``f_1 sigma = id``.
    homotopy : GradedLinearMap
        ``h`` with ``id - sigma f_1 = d h + h d``.
    r : LInftyMorphism
        ``L -> ker f_1`` with ``r_1 = id - sigma f_1`` and
        ``r_k = r_1 h l_k``.
    product : LieNAlgebra
        ``L' x ker f_1``.
    isomorphism : LInftyMorphism
        ``(f, r)``.
    """

    def __init__(self, f, kernel, subspace, section, homotopy, r, product,
                 isomorphism):
        self.f = f
        self.kernel = kernel
        self.subspace = subspace
        self.section = section
        self.homotopy = homotopy
        self.r = r
        self.product = product
        self.isomorphism = isomorphism

    def __repr__(self):
        return f"<AcyclicSplitting: kernel {self.kernel.space.dimensions}>"


def split_acyclic_fibration(f, section=None, homotopy=None):
    """Split an acyclic fibration as ``L ≅ L' x ker f_1``.

    Parameters
    ----------
    f : LInftyMorphism
        An acyclic fibration.
    section : ChainMap, optional
        Chain section ``sigma`` of ``f_1``.
    homotopy : GradedLinearMap, optional
        Degree +1 map with ``id - sigma f_1 = d h + h d``. Both are
        constructed if either is missing.

    Returns
    -------
    AcyclicSplitting

    Raises
    ------
    NotAcyclicFibration
        If `f` is not an acyclic fibration or the given section and
        homotopy do not satisfy their identities.
    """
    if not classify(f).is_acyclic_fibration:
        raise NotAcyclicFibration("Morphism is not an acyclic fibration.")
    L = f.source
    f1 = f.linear
    if section is None or homotopy is None:
        section, homotopy = contracting_homotopy_for_acyclic(tangent(f))
    sigma = section.linear
    d = L.differential
    projector = GradedLinearMap.identity(L.space) - sigma @ f1
    if not (f1 @ sigma) == GradedLinearMap.identity(f.target.space):
        raise NotAcyclicFibration("Section is not a right inverse.")
    if not (d @ homotopy + homotopy @ d) == projector:
        raise NotAcyclicFibration("Homotopy identity fails.")

    subspace = _kernel_subspace(f1, "k")
    differential = {}
    for a, v in enumerate(subspace.vectors):
        value = d(v)
        if value:
            differential[(a,)] = subspace.coordinates(value)
    K_space = subspace.space
    K = LieNAlgebra(K_space, CoderivationData(K_space.suspend(), differential))

    r1 = GradedLinearMap(
        L.space,
        K_space,
        {i: subspace.coordinates(projector.column(i)) for i in range(L.space.dim)},
    )
    entries = {(i,): r1.column(i) for i in range(L.space.dim) if r1.column(i)}
    for word, value in L.structure.entries.items():
        if len(word) >= 2:
            image = r1(homotopy(value))
            if image:
                entries[word] = image
    r = LInftyMorphism(L, K, CoalgebraMorphismData(L.suspended, K.suspended, entries))

    P = product(f.target, K)[0]
    isomorphism = pairing(f, r, P)
    if not classify(isomorphism).is_isomorphism:
        raise AxiomViolation("(f, r) is not an isomorphism.")
    return AcyclicSplitting(f, K, subspace, section, homotopy, r, P, isomorphism)


def _check_strict_epimorphism(f):
    if not f.is_strict():
        raise NotStrict("The morphism must be strict.")
    if not classify(f).is_linfty_epimorphism:
        raise NotEpi("The linear part is not surjective in every degree.")


class TowerSplitting:
    """The commuting square splitting ``q_{<m+1}`` on both sides of a
    strict epimorphism.

    Attributes
    ----------
    f : LInftyMorphism
    m : int
    upper, upper_prime : Truncation
        ``tau_{<m+1}`` of source and target.
    lower, lower_prime : Truncation
        ``tau_{<=m}`` of source and target.
    q, q_prime : LInftyMorphism
        The acyclic fibrations ``q_{<m+1}``.
    splitting, splitting_prime : AcyclicSplitting
        Compatible splittings of `q` and `q_prime`.
    top : LInftyMorphism
        ``tau_{<m+1} f``.
    restriction : LInftyMorphism
        ``tau_{<m+1} f`` restricted to the kernels.
    vertical : LInftyMorphism
        ``tau_{<=m} f x restriction``.
    """

    def __init__(self, **kwargs):
        for key, value in kwargs.items():
            setattr(self, key, value)

    def is_commutative(self):
        lhs = compose(self.splitting_prime.isomorphism, self.top)
        rhs = compose(self.vertical, self.splitting.isomorphism)
        return lhs == rhs

    def __repr__(self):
        return f"<TowerSplitting: m = {self.m}>"


def _compatible_section(f, lower, lower_prime, f_lower):
    """Section ``s`` of ``L_m -> coker d_{m+1}`` with ``f_1 s = s' tau f_1``
    where ``s'`` is the representative section of the target."""
    L, Lp = f.source, f.target
    m = lower.m
    d, dp = L.differential, Lp.differential
    lift = section_of_surjection(f.linear, [m + 1])
    rows = Lp.space.indices_in_degree(m)
    cols = Lp.space.indices_in_degree(m + 1)
    matrix = dp.matrix(m + 1)
    s = {}
    for c in lower.algebra.space.indices_in_degree(m):
        start = lower.representative.column(c)
        target = lower_prime.representative(f_lower.linear.column(c))
        error = combine((1, f.linear(start)), (-1, target))
        if error:
            solution = solve_particular(matrix, [error.get(i, 0) for i in rows])
            if solution is None:
                raise AxiomViolation(
                    "Section defect is not a boundary.",
                    witness=lower.algebra.space.name(c),
                )
            w = lift({cols[k]: v for k, v in enumerate(solution) if v != 0})
            start = combine((1, start), (-1, d(w)))
        s[c] = start
    return s


def _section_and_homotopy(upper, lower, q, s):
    """Chain section ``sigma`` of ``q_{<m+1}`` from ``s`` and the homotopy
    ``h(x) = s^-1 (x - s pi x)`` in degree ``m``."""
    m = lower.m
    A, B = upper.algebra.space, lower.algebra.space
    columns = {}
    for b in range(B.dim):
        if B.degree(b) < m:
            columns[b] = _renamed(B, A, {b: 1})
        else:
            columns[b] = _renamed(upper.source.space, A, s[b])
    sigma = GradedLinearMap(B, A, columns)
    h = {}
    for x in A.indices_in_degree(m):
        rest = combine((1, {x: 1}), (-1, sigma(q.linear.column(x))))
        if rest:
            coordinates = upper.image.coordinates(upper.representative(rest))
            h[x] = {
                A.index(upper.image.space.name(k)): c for k, c in coordinates.items()
            }
    homotopy = GradedLinearMap(A, A, h, degree_shift=1)
    section = ChainMap(lower.algebra.chain_complex(), upper.algebra.chain_complex(), sigma)
    return section, homotopy


def decompose_tower_step1(f, m):
    """Split ``q_{<m+1}`` compatibly for a strict epimorphism.

    The isomorphisms ``(q_{<m+1}, r)`` and ``(q'_{<m+1}, r')`` are built
    from sections ``s`` and ``s'`` of ``L_m -> coker d_{m+1}`` with
    ``f_1 s = s' tau_{<=m} f_1`` and the matching homotopies, so that
    ``(q', r') tau_{<m+1} f = (tau_{<=m} f x f|ker) (q, r)``.

    Parameters
    ----------
    f : LInftyMorphism
        Strict, with ``f_1`` surjective in every degree.
    m : int

    Returns
    -------
    TowerSplitting

    Raises
    ------
    NotStrict
    NotEpi
    AxiomViolation
        If the square does not commute.
    """
    _check_strict_epimorphism(f)
    L, Lp = f.source, f.target
    upper, upper_prime = truncate(L, m + 1, LESS), truncate(Lp, m + 1, LESS)
    lower, lower_prime = truncate(L, m, LESS_EQUAL), truncate(Lp, m, LESS_EQUAL)
    q = connecting_morphism(upper, lower)
    q_prime = connecting_morphism(upper_prime, lower_prime)
    top = truncate_morphism(f, m + 1, LESS, upper, upper_prime)
    f_lower = truncate_morphism(f, m, LESS_EQUAL, lower, lower_prime)

    s = _compatible_section(f, lower, lower_prime, f_lower)
    s_prime = {
        c: lower_prime.representative.column(c)
        for c in lower_prime.algebra.space.indices_in_degree(m)
    }
    splitting = split_acyclic_fibration(q, *_section_and_homotopy(upper, lower, q, s))
    splitting_prime = split_acyclic_fibration(
        q_prime, *_section_and_homotopy(upper_prime, lower_prime, q_prime, s_prime)
    )

    K, Kp = splitting.subspace, splitting_prime.subspace
    columns = {
        a: Kp.coordinates(top.linear(v)) for a, v in enumerate(K.vectors)
    }
    restriction = LInftyMorphism.strict(
        splitting.kernel,
        splitting_prime.kernel,
        GradedLinearMap(K.space, Kp.space, columns),
    )
    vertical = product_morphism(
        f_lower, restriction, splitting.product, splitting_prime.product
    )
    result = TowerSplitting(
        f=f,
        m=m,
        upper=upper,
        upper_prime=upper_prime,
        lower=lower,
        lower_prime=lower_prime,
        q=q,
        q_prime=q_prime,
        splitting=splitting,
        splitting_prime=splitting_prime,
        top=top,
        restriction=restriction,
        vertical=vertical,
    )
    if not result.is_commutative():
        raise AxiomViolation("The split tower square does not commute.")
    return result


class TwistedProduct:
    """The isomorphism ``q_hat: tau_{<=m} L -> tau_{<m} L + H_m`` and its
    counterpart for the target of a strict epimorphism.

    Attributes
    ----------
    f : LInftyMorphism
    m : int
    truncation, truncation_prime : Truncation
        ``tau_{<=m}`` of source and target.
    quotient, quotient_prime : Truncation
        ``tau_{<m}`` of source and target.
    homology, homology_prime : Subspace
        ``H_m`` as the kernel of ``q_{<=m}`` in degree ``m``.
    algebra, algebra_prime : LieNAlgebra
        The twisted products with the transferred brackets.
    offset, offset_prime : int
        Index of the first ``H_m`` basis vector in the twisted products.
    q_hat, q_hat_prime : LInftyMorphism
        Strict isomorphisms onto the twisted products.
    vertical : LInftyMorphism
        ``tau_{<m} f + H(f)``.
    """

    def __init__(self, **kwargs):
        for key, value in kwargs.items():
            setattr(self, key, value)

    def is_commutative(self):
        lhs = compose(self.q_hat_prime, self.f_truncated)
        rhs = compose(self.vertical, self.q_hat)
        return lhs == rhs

    def mixed_bracket(self, x, y):
        """``l_hat_2((x, 0), (0, y))``.

        Parameters
        ----------
        x : dict
            Names of degree 0 basis vectors of ``tau_{<m} L`` to rationals.
        y : dict
            Names of ``H_m`` basis vectors to rationals.

        Returns
        -------
        dict
            Names of the twisted product basis to ``"p/q"`` strings.
        """
        space = self.algebra.space
        D = self.quotient.algebra.space
        H = self.homology.space
        xv = {D.index(name): to_rational(c) for name, c in x.items()}
        yv = {self.offset + H.index(name): to_rational(c) for name, c in y.items()}
        if any(D.degree(i) != 0 for i in xv):
            raise ValueError("The first argument must have degree 0.")
        return vector_to_names(space, self.algebra.bracket(xv, yv))

    def mixed_brackets(self):
        """All nonzero ``l_hat_2((x, 0), (0, y))`` on basis vectors."""
        D = self.quotient.algebra.space
        H = self.homology.space
        out = {}
        for x in D.indices_in_degree(0):
            for y in range(H.dim):
                value = self.mixed_bracket({D.name(x): 1}, {H.name(y): 1})
                if value:
                    out[(D.name(x), H.name(y))] = value
        return out

    def __repr__(self):
        return f"<TwistedProduct: m = {self.m}. {self.algebra}>"


def _transferred(L, Q, Qinv):
    """Brackets ``Q l_k (Q^-1)^k`` on the target of `Q`."""
    T = Q.target
    sT = T.suspend()
    bound = T.top_degree + 2 if T.dim else 1
    entries = {}
    for word in words(sT, bound, {d + 1 for d in sT.support}):
        element = multiply(
            L.suspended, *(vector_as_element(Qinv.column(i)) for i in word)
        )
        value = Q(L.structure.evaluate(element))
        if value:
            entries[word] = value
    return LieNAlgebra(T, CoderivationData(sT, entries))


def _q_hat(truncation, quotient, q, homology, s):
    """``q_hat = (q, id - t q)`` for the section ``t`` built from ``s``."""
    m = truncation.m
    C, D = truncation.algebra.space, quotient.algebra.space
    space, (_, offset) = direct_sum(D, homology.space)
    t_columns = {}
    for y in range(D.dim):
        t_columns[y] = _renamed(D, C, {y: 1}) if D.degree(y) < m else s.column(y)
    t = GradedLinearMap(D, C, t_columns)
    columns = {}
    for c in range(C.dim):
        column = dict(q.linear.column(c))
        rest = combine((1, {c: 1}), (-1, t(q.linear.column(c))))
        for a, v in homology.coordinates(rest).items():
            column[offset + a] = v
        columns[c] = column
    Q = GradedLinearMap(C, space, columns)
    algebra = _transferred(truncation.algebra, Q, Q.inverse())
    return LInftyMorphism.strict(truncation.algebra, algebra, Q), algebra, offset


def decompose_tower_step2(f, m):
    """Decompose ``tau_{<=m}`` of a strict epimorphism into twisted
    products ``tau_{<m} + H_m``.

    Sections ``mu`` of ``H_m(f_1)``, ``nu`` of ``tau_{<m} f_1`` and
    ``psi`` of ``q_{<=m}`` in degree ``m`` give ``s' = tau_{<=m} f_1 psi
    nu`` and the corrected ``s = psi - i mu (tau_{<=m} f_1 psi - s'
    tau_{<m} f_1)``, so that both squares commute.

    Parameters
    ----------
    f : LInftyMorphism
        Strict, with ``f_1`` surjective in every degree.
    m : int
        At least 1.

    Returns
    -------
    TwistedProduct

    Raises
    ------
    NotStrict
    NotEpi
    HomologyNotSurjective
        If ``H_m(f_1)`` is not surjective.
    """
    if m < 1:
        raise ValueError(f"Decomposition degree must be at least 1, got {m}.")
    _check_strict_epimorphism(f)
    L, Lp = f.source, f.target
    truncation, truncation_prime = truncate(L, m), truncate(Lp, m)
    quotient, quotient_prime = truncate(L, m, LESS), truncate(Lp, m, LESS)
    q = connecting_morphism(truncation, quotient)
    q_prime = connecting_morphism(truncation_prime, quotient_prime)
    f_truncated = truncate_morphism(f, m, LESS_EQUAL, truncation, truncation_prime)
    f_quotient = truncate_morphism(f, m, LESS, quotient, quotient_prime)

    homology = _kernel_subspace(q.linear, "h", [m])
    homology_prime = _kernel_subspace(q_prime.linear, "h", [m])
    H_f = GradedLinearMap(
        homology.space,
        homology_prime.space,
        {
            a: homology_prime.coordinates(f_truncated.linear(v))
            for a, v in enumerate(homology.vectors)
        },
    )
    if not is_surjective_in_degrees(H_f, [m]):
        raise HomologyNotSurjective(f"H_{m}(f_1) is not surjective.")
    mu = section_of_surjection(H_f, [m])
    nu = section_of_surjection(f_quotient.linear, [m])
    psi = section_of_surjection(q.linear, [m])
    s_prime = f_truncated.linear @ psi @ nu
    s_columns = {}
    for y in quotient.algebra.space.indices_in_degree(m):
        defect = combine(
            (1, f_truncated.linear(psi.column(y))),
            (-1, s_prime(f_quotient.linear.column(y))),
        )
        correction = homology.embed(mu(homology_prime.coordinates(defect)))
        s_columns[y] = combine((1, psi.column(y)), (-1, correction))
    s = GradedLinearMap(quotient.algebra.space, truncation.algebra.space, s_columns)

    q_hat, algebra, offset = _q_hat(truncation, quotient, q, homology, s)
    q_hat_prime, algebra_prime, offset_prime = _q_hat(
        truncation_prime, quotient_prime, q_prime, homology_prime, s_prime
    )
    columns = {}
    for y, column in f_quotient.linear.columns.items():
        columns[y] = dict(column)
    for a, column in H_f.columns.items():
        columns[offset + a] = {offset_prime + b: c for b, c in column.items()}
    vertical = LInftyMorphism.strict(
        algebra,
        algebra_prime,
        GradedLinearMap(algebra.space, algebra_prime.space, columns),
    )
    result = TwistedProduct(
        f=f,
        m=m,
        truncation=truncation,
        truncation_prime=truncation_prime,
        quotient=quotient,
        quotient_prime=quotient_prime,
        homology=homology,
        homology_prime=homology_prime,
        algebra=algebra,
        algebra_prime=algebra_prime,
        offset=offset,
        offset_prime=offset_prime,
        q_hat=q_hat,
        q_hat_prime=q_hat_prime,
        f_truncated=f_truncated,
        vertical=vertical,
    )
    if not result.is_commutative():
        raise AxiomViolation("The twisted product square does not commute.")
    return result


def twisted_product_bracket(decomposition, x, y):
    """Evaluate ``l_hat_2((x, 0), (0, y))`` on a twisted product.

    Parameters
    ----------
    decomposition : TwistedProduct
    x, y : dict
        Basis names to rationals, of degree 0 in ``tau_{<m} L`` and of
        ``H_m``.

    Returns
    -------
    dict
    """
    return decomposition.mixed_bracket(x, y)
