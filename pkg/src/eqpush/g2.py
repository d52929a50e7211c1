"""Push-forwards for the rank-two exceptional quotients and the ambient
Grassmannian pairing: the six-term cyclic sum, the 21-partition class table,
the intersection matrix with its unimodular determinant, and recovery of the
fundamental class by exact linear elimination.
"""

from __future__ import annotations

import itertools

from .algebra import (LaurentPolynomial, Monomial, RationalExpression,
                      parameter_table)
from .characters import CharacterList, bracket
from .elimination import bareiss_determinant, bareiss_solve
from .polyfam import (complement_partition, grothendieck_pair,
                      rectangle_partitions)
from .spaces import (FixedPoint, LocalizationEngine, SpaceDescriptor,
                     localization_pushforward, residue_pushforward)
from . import g2core

GT = g2core.g2_table()

QUOTIENT_SPACE = SpaceDescriptor("g2p2")
BOREL_SPACE = SpaceDescriptor("g2b")

BOX_ROWS, BOX_COLS = 2, 5


def fundamental_class_lift() -> LaurentPolynomial:
    """The fundamental-class lift in the auxiliary and torus variables."""
    return g2core.fundamental_class_lift()


def ab_polynomials():
    """The two reporting variables as torus Laurent polynomials."""
    return g2core.half_sum_a(), g2core.half_sum_b()


def identity_term(f: LaurentPolynomial) -> RationalExpression:
    """Contribution of the identity coset to the localization sum."""
    num = f.substitute_monomials(
        {"z1": Monomial.of(GT, t1=1), "z2": Monomial.of(GT, t2=1)}, partial=True)
    den = bracket(g2core.quotient_identity_tangent(), GT)
    return RationalExpression(num, den)


def cyclic_pushforward(f: LaurentPolynomial) -> LaurentPolynomial:
    """Sum of the six rotated identity contributions, simplified exactly."""
    return localization_pushforward(QUOTIENT_SPACE, f)


def box_partitions() -> list:
    return rectangle_partitions(BOX_ROWS, BOX_COLS)


def grothendieck_table() -> dict:
    """Push-forward of every rank-two Grothendieck class in the 2x5 box."""
    out = {}
    for lam in box_partitions():
        out[lam] = cyclic_pushforward(grothendieck_pair(lam.part(0), lam.part(1), GT))
    return out


# -- ambient Grassmannian with the seven restricted weights ---------------------


class _AmbientCalc:
    """Localization on the ambient 21-point Grassmannian of two-planes, with the
    seven torus weights of the defining representation as ambient characters.

    Push-forwards are linear over the torus ring, so values are cached per
    symmetrized auxiliary monomial.
    """

    def __init__(self):
        weights = g2core.seven_weights().entries
        points = []
        substs = []
        for i, j in itertools.combinations(range(7), 2):
            a, b = weights[i], weights[j]
            rest = [weights[r] for r in range(7) if r not in (i, j)]
            tangent = CharacterList(tuple(c / w for w in (a, b) for c in rest))
            substs.append({"z1": a, "z2": b})
            points.append(FixedPoint((("z1", a), ("z2", b)), tangent))
        self.substs = substs
        self.engine = LocalizationEngine(GT, points)
        self.values: dict = {}

    def class_value(self, p: int, q: int) -> LaurentPolynomial:
        """Push-forward of z1^p z2^q + z1^q z2^p (halved on the diagonal)."""
        key = (p, q)
        got = self.values.get(key)
        if got is None:
            numerators = []
            for sub in self.substs:
                a, b = sub["z1"], sub["z2"]
                mono1 = (a ** p) * (b ** q)
                mono2 = (a ** q) * (b ** p)
                val = mono1.as_polynomial()
                if mono2.exps != mono1.exps:
                    val = val + mono2.as_polynomial()
                numerators.append(val)
            got = self.engine.sum_values(numerators)
            self.values[key] = got
        return got

    def pushforward(self, f: LaurentPolynomial) -> LaurentPolynomial:
        """Exact push-forward of a class symmetric in the two auxiliary variables."""
        total = LaurentPolynomial.zero(GT)
        i1, i2 = GT.index("z1"), GT.index("z2")
        for key, c in f.terms.items():
            p, q = key[i1], key[i2]
            if p < q:
                continue
            tkey = list(key)
            tkey[i1] = tkey[i2] = 0
            coeff = LaurentPolynomial(GT, {tuple(tkey): c}, _canonical=True)
            total = total + coeff * self.class_value(p, q)
        return total


_AMBIENT = None


def ambient_pushforward(f: LaurentPolynomial) -> LaurentPolynomial:
    """Push-forward along the ambient Grassmannian of two-planes (21 fixed points)."""
    global _AMBIENT
    if _AMBIENT is None:
        _AMBIENT = _AmbientCalc()
    return _AMBIENT.pushforward(f)


def intersection_matrix() -> list:
    """The 21x21 matrix of pairwise push-forwards, in box-partition order."""
    parts = box_partitions()
    classes = [grothendieck_pair(lam.part(0), lam.part(1), GT) for lam in parts]
    products = {}
    matrix = [[None] * len(parts) for _ in parts]
    for i in range(len(parts)):
        for j in range(i, len(parts)):
            value = ambient_pushforward(classes[i] * classes[j])
            matrix[i][j] = value
            matrix[j][i] = value
    return matrix


def intersection_determinant(matrix=None) -> LaurentPolynomial:
    if matrix is None:
        matrix = intersection_matrix()
    parts = box_partitions()
    order = _paired_order(parts)
    permuted = [[matrix[i][j] for j in order] for i in range(len(parts))]
    det = bareiss_determinant(permuted)
    return det if _permutation_sign(order) == 1 else -det


def _paired_order(parts):
    """Column order pairing each row partition with its box complement, which
    puts unit entries of the nonequivariant specialization on the diagonal."""
    index = {lam: i for i, lam in enumerate(parts)}
    return [index[complement_partition(lam, BOX_ROWS, BOX_COLS)] for lam in parts]


def _permutation_sign(order):
    seen = [False] * len(order)
    sign = 1
    for start in range(len(order)):
        if seen[start]:
            continue
        length = 0
        pos = start
        while not seen[pos]:
            seen[pos] = True
            pos = order[pos]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def fundamental_class_solve():
    """Coefficients of the fundamental class in the Grothendieck basis.

    Solves sum_I c_I * m(I, J) = pushforward(G_J) over all box partitions by
    fraction-free elimination; the determinant is a unit so the solution is a
    Laurent-polynomial vector.
    """
    parts = box_partitions()
    matrix = intersection_matrix()
    table_values = grothendieck_table()
    order = _paired_order(parts)
    # Equations indexed by J, unknowns by I; pair equation rows with the
    # complementary unknown so pivots are units at the nonequivariant point.
    permuted = [[matrix[order[r]][c] for c in range(len(parts))] for r in range(len(parts))]
    rhs = [table_values[parts[order[r]]] for r in range(len(parts))]
    _, solution = bareiss_solve(permuted, rhs)
    return {parts[i]: solution[i] for i in range(len(parts))}


def fundamental_class_in_basis() -> LaurentPolynomial:
    """The closed-form fundamental-class lift written in the Grothendieck basis."""
    a, b = ab_polynomials()
    e = a + b

    def g(i, j):
        return grothendieck_pair(i, j, GT)

    return (g(4, 1).scale(2) + g(3, 2).scale(2) - g(3, 3) - g(4, 2).scale(3)
            + g(4, 3) + e * (g(2, 1) - g(2, 2) - g(3, 1) + g(3, 2)))


def lift_pairing_check(lift1: LaurentPolynomial, lift2: LaurentPolynomial) -> bool:
    """True iff the two lifts pair equally with every box-partition class."""
    for lam in box_partitions():
        cls = grothendieck_pair(lam.part(0), lam.part(1), GT)
        if ambient_pushforward(cls * lift1) != ambient_pushforward(cls * lift2):
            return False
    return True


def g2b_pushforward(f: LaurentPolynomial, method: str = "weyl_sum") -> LaurentPolynomial:
    """Push-forward on the full quotient, by the 12-term Weyl sum or by the
    shared residue formula."""
    if method == "weyl_sum":
        return localization_pushforward(BOREL_SPACE, f)
    if method == "residue":
        return residue_pushforward(BOREL_SPACE, f)
    raise ValueError(f"unknown method {method!r}")


AB_TABLE = parameter_table("A", "B")


def ab_combination(coeffs: dict) -> LaurentPolynomial:
    """Polynomial in the abstract reporting variables: {(i, j): c} -> sum c A^i B^j."""
    out = LaurentPolynomial.zero(AB_TABLE)
    a = LaurentPolynomial.variable(AB_TABLE, "A")
    b = LaurentPolynomial.variable(AB_TABLE, "B")
    for (i, j), c in sorted(coeffs.items()):
        out = out + (a ** i * b ** j).scale(c)
    return out


def verify_ab_expression(p: LaurentPolynomial, q: LaurentPolynomial) -> bool:
    """True iff q(A, B) evaluated at the reporting polynomials equals p."""
    a, b = ab_polynomials()
    if not q.occurring_variables():
        value = LaurentPolynomial.constant(GT, q.constant_term())
    else:
        value = q.substitute_polynomials({"A": a, "B": b}, target=GT)
    return value == p
