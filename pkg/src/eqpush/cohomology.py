"""Additive (cohomological) integration over the rank-two quotient and the
ambient Grassmannian: fixed-point sums with linear-form denominators, Schur
integrals and the equivariant fundamental-class consistency check.

Everything reuses the Laurent engine with nonnegative exponents only.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import (FactoredDenominatorSum, LaurentPolynomial, VariableTable,
                      parameter_table)
from .polyfam import Partition, rectangle_partitions, schur_pair


@lru_cache(maxsize=None)
def coh_table() -> VariableTable:
    return parameter_table("x1", "x2", "t1", "t2")


def _t(name, k=1):
    return LaurentPolynomial.variable(coh_table(), name, k)


# At a fixed two-plane with additive torus weights (a, b), the Chern roots of
# the dual tautological bundle restrict to (-a, -b); the tangent denominator
# is the product of the printed weights.  This single convention reproduces
# the positive normalization integral(S_41) = +2.
_ROOT_SIGN = -1


@lru_cache(maxsize=None)
def g2_tangent_additive() -> tuple:
    """Additive tangent weights at the identity coset of the quotient space."""
    t1, t2 = _t("t1"), _t("t2")
    return (-t2, t1 - 2 * t2, -t1, t2 - 2 * t1, -t1 - t2)


@lru_cache(maxsize=None)
def rotation_additive_orbit() -> tuple:
    """The six powers of (t1, t2) -> (t2, t2 - t1), identity first."""
    t1, t2 = _t("t1"), _t("t2")
    out = [(t1, t2)]
    for _ in range(5):
        p1, p2 = out[-1]
        out.append((_apply_t((t2, t2 - t1), p1), _apply_t((t2, t2 - t1), p2)))
    return tuple(out)


def _apply_t(images, p: LaurentPolynomial) -> LaurentPolynomial:
    """Substitute t1, t2 by polynomial images, leaving x variables alone."""
    occurring = p.occurring_variables()
    if "t1" not in occurring and "t2" not in occurring:
        return p
    mapping = {"t1": images[0], "t2": images[1]}
    for name in occurring:
        if name not in mapping:
            mapping[name] = LaurentPolynomial.variable(coh_table(), name)
    return p.substitute_polynomials(mapping, target=coh_table())


def _apply_x(values, p: LaurentPolynomial) -> LaurentPolynomial:
    mapping = {"x1": values[0], "x2": values[1]}
    occurring = p.occurring_variables()
    for name in occurring:
        if name not in mapping:
            mapping[name] = LaurentPolynomial.variable(coh_table(), name)
    if not occurring:
        return p
    return p.substitute_polynomials(mapping, target=coh_table())


def _check_polynomial_input(f: LaurentPolynomial) -> None:
    for key in f.terms:
        if any(e < 0 for e in key):
            raise ValueError("cohomology classes must have nonnegative exponents")


def g2_integral(f: LaurentPolynomial) -> LaurentPolynomial:
    """Fixed-point integral of a polynomial in the Chern roots over the
    five-dimensional quotient space."""
    _check_polynomial_input(f)
    total = FactoredDenominatorSum(coh_table())
    weights = g2_tangent_additive()
    for images in rotation_additive_orbit():
        roots = (_ROOT_SIGN * images[0], _ROOT_SIGN * images[1])
        numerator = _apply_x(roots, f)
        factors = [_apply_t(images, w) for w in weights]
        total.add(numerator, factors)
    return total.total()


@lru_cache(maxsize=None)
def grassmannian_additive_weights() -> tuple:
    """Additive restrictions of the seven defining weights."""
    t1, t2 = _t("t1"), _t("t2")
    zero = LaurentPolynomial.zero(coh_table())
    return (t1, t2, t1 - t2, zero, t2 - t1, -t2, -t1)


def gr27_integral(f: LaurentPolynomial) -> LaurentPolynomial:
    """Fixed-point integral over the ambient Grassmannian of two-planes, the
    torus acting through the seven restricted weights."""
    _check_polynomial_input(f)
    weights = grassmannian_additive_weights()
    total = FactoredDenominatorSum(coh_table())
    n = len(weights)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = weights[i], weights[j]
            numerator = _apply_x((_ROOT_SIGN * a, _ROOT_SIGN * b), f)
            factors = []
            for r in range(n):
                if r in (i, j):
                    continue
                c = weights[r]
                factors.append(c - a)
                factors.append(c - b)
            total.add(numerator, factors)
    return total.total()


def equivariant_class_expression() -> LaurentPolynomial:
    """The degree-five equivariant class in Chern roots:
    2*x1*x2*(x1+x2)*((x1^2+x1*x2+x2^2) - (t1^2-t1*t2+t2^2))."""
    x1, x2, t1, t2 = _t("x1"), _t("x2"), _t("t1"), _t("t2")
    return 2 * x1 * x2 * (x1 + x2) * ((x1 ** 2 + x1 * x2 + x2 ** 2)
                                      - (t1 ** 2 - t1 * t2 + t2 ** 2))


def _schur(lam: Partition) -> LaurentPolynomial:
    return schur_pair(lam.part(0), lam.part(1), coh_table())


def torus_invariant() -> LaurentPolynomial:
    t1, t2 = _t("t1"), _t("t2")
    return t1 ** 2 - t1 * t2 + t2 ** 2


def cohomology_class_check() -> bool:
    """Verify the equivariant fundamental class against both integration sides.

    Checks the Schur-basis presentation (coefficients 2, 2 and the quadratic
    correction) and, for every box partition J, that pairing the class with
    S_J over the ambient Grassmannian equals the direct quotient integral.
    """
    cls = equivariant_class_expression()
    expanded = (2 * _schur(Partition.of(4, 1)) + 2 * _schur(Partition.of(3, 2))
                - 2 * torus_invariant() * _schur(Partition.of(2, 1)))
    if cls != expanded:
        return False
    for lam in rectangle_partitions(2, 5):
        left = gr27_integral(_schur(lam) * cls)
        right = g2_integral(_schur(lam))
        if left != right:
            return False
    return True
