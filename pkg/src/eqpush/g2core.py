"""Shared exceptional-group data: the rank-two torus, its dihedral Weyl group,
tangent weight lists and the fundamental-class lift used by the residue
formulas for both quotient spaces.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import LaurentPolynomial, Monomial, VariableTable, zt_table
from .characters import CharacterList


@lru_cache(maxsize=None)
def g2_table() -> VariableTable:
    return zt_table(2, 2)


def _mono(**powers) -> Monomial:
    return Monomial.of(g2_table(), **powers)


@lru_cache(maxsize=None)
def rotation_map():
    """Order-6 substitution generating the rotation subgroup: t1 -> t2, t2 -> t2/t1."""
    return {"t1": _mono(t2=1), "t2": _mono(t2=1, t1=-1)}


@lru_cache(maxsize=None)
def swap_map():
    return {"t1": _mono(t2=1), "t2": _mono(t1=1)}


def compose_maps(outer: dict, inner: dict) -> dict:
    """Substitution that applies `inner` first, then `outer`."""
    return {v: m.substitute(outer) for v, m in inner.items()}


def identity_map() -> dict:
    return {"t1": _mono(t1=1), "t2": _mono(t2=1)}


@lru_cache(maxsize=None)
def rotation_orbit() -> tuple:
    """The six powers of the rotation, identity first."""
    out = [identity_map()]
    for _ in range(5):
        out.append(compose_maps(rotation_map(), out[-1]))
    return tuple(out)


@lru_cache(maxsize=None)
def weyl_group() -> tuple:
    """All twelve substitutions of the dihedral Weyl group (rotations, then
    rotations composed with the swap)."""
    rots = rotation_orbit()
    refl = tuple(compose_maps(w, swap_map()) for w in rots)
    elems = rots + refl
    seen = {tuple(sorted((v, m.exps) for v, m in w.items())) for w in elems}
    if len(seen) != 12:
        raise RuntimeError("dihedral group enumeration produced duplicates")
    return elems


@lru_cache(maxsize=None)
def quotient_identity_tangent() -> CharacterList:
    """Tangent characters of the 5-dimensional quotient space at the identity coset."""
    return CharacterList.of(
        _mono(t2=-1), _mono(t1=1, t2=-2), _mono(t1=-1), _mono(t2=1, t1=-2),
        _mono(t1=-1, t2=-1))


@lru_cache(maxsize=None)
def borel_identity_tangent() -> CharacterList:
    """Tangent characters of the 6-dimensional full quotient at the identity:
    the inverses of the six positive roots."""
    return CharacterList.of(
        _mono(t1=-1), _mono(t2=-1), _mono(t1=-1, t2=-1), _mono(t2=1, t1=-2),
        _mono(t1=1, t2=-2), _mono(t2=1, t1=-1))


@lru_cache(maxsize=None)
def seven_weights() -> CharacterList:
    """Weights of the 7-dimensional representation restricted to the torus."""
    return CharacterList.of(
        _mono(t1=1), _mono(t2=1), _mono(t1=1, t2=-1), Monomial.one(g2_table()),
        _mono(t1=-1, t2=1), _mono(t2=-1), _mono(t1=-1))


@lru_cache(maxsize=None)
def weight_sum_z() -> LaurentPolynomial:
    """Sum of the six nonunit 7-dimensional weights written in the auxiliary
    variables, minus 6: z1 + 1/z1 + z2 + 1/z2 + z1*z2 + 1/(z1*z2) - 6."""
    t = g2_table()
    out = LaurentPolynomial.constant(t, -6)
    for powers in ({"z1": 1}, {"z1": -1}, {"z2": 1}, {"z2": -1},
                   {"z1": 1, "z2": 1}, {"z1": -1, "z2": -1}):
        out = out + Monomial.from_map(t, powers).as_polynomial()
    return out


@lru_cache(maxsize=None)
def weight_sum_t() -> LaurentPolynomial:
    """The same sum on the torus side: the substitution z1 -> t1, z2 -> 1/t2."""
    return weight_sum_z().substitute_monomials(
        {"z1": _mono(t1=1), "z2": _mono(t2=-1)}, partial=True)


@lru_cache(maxsize=None)
def fundamental_class_lift() -> LaurentPolynomial:
    """Lift of the quotient-space fundamental class to the ambient Grassmannian:
    z1*z2*(1-z1)*(1-z2)*(1-z1*z2)*(weight_sum_z - weight_sum_t)."""
    t = g2_table()
    one = LaurentPolynomial.one(t)
    z1 = LaurentPolynomial.variable(t, "z1")
    z2 = LaurentPolynomial.variable(t, "z2")
    return z1 * z2 * (one - z1) * (one - z2) * (one - z1 * z2) \
        * (weight_sum_z() - weight_sum_t())


@lru_cache(maxsize=None)
def half_sum_a() -> LaurentPolynomial:
    """First of the two reporting variables: 3 - t1 - 1/t2 - t2/t1."""
    t = g2_table()
    return LaurentPolynomial.constant(t, 3) - _mono(t1=1).as_polynomial() \
        - _mono(t2=-1).as_polynomial() - _mono(t2=1, t1=-1).as_polynomial()


@lru_cache(maxsize=None)
def half_sum_b() -> LaurentPolynomial:
    """Swap image of the first reporting variable: 3 - t2 - 1/t1 - t1/t2."""
    return half_sum_a().substitute_monomials(swap_map(), partial=True)
