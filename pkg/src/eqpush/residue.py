"""Exact iterated residues at 0 and infinity for factored rational forms.

A ResidueForm is scalar * N / prod(1 - m) together with an ordered list of
residue variables; the d(var)/var measure is absorbed into the numerator at
construction.  Every denominator factor monomial must contain exactly one
residue variable, with positive exponent; this makes coefficient extraction
in distinct variables commute, so the iterated residue is order independent.

The residue at 0 in a variable expands each matching factor as a geometric
series truncated just far enough to read off the coefficient of var^(-1); the
residue at infinity rewrites the form under var -> 1/var (with d(var)/var
picking up a sign) and reuses the residue at 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .algebra import (InvariantError, LaurentPolynomial, Monomial, QONE,
                      rational)


@dataclass(frozen=True)
class ResidueForm:
    scalar: object
    numerator: LaurentPolynomial
    denominator: tuple  # monomials m, each standing for a factor (1 - m)
    residue_vars: tuple

    def __post_init__(self):
        table = self.numerator.table
        active = set(self.residue_vars)
        for name in active:
            if name not in table.names:
                raise InvariantError(f"residue variable {name!r} not in table")
        for m in self.denominator:
            hits = [(n, e) for n, e in zip(table.names, m.exps) if e != 0 and n in active]
            if len(hits) != 1:
                raise InvariantError(
                    f"denominator factor 1 - {m.render()} must contain exactly one residue variable")
            if hits[0][1] <= 0:
                raise InvariantError(
                    f"denominator factor 1 - {m.render()} needs a positive residue exponent")

    @property
    def table(self):
        return self.numerator.table

    def render(self) -> str:
        den = "*".join(f"(1 - {m.render()})" for m in self.denominator) or "1"
        dlog = ", ".join(self.residue_vars)
        return f"{self.scalar} * ({self.numerator.render()}) / {den} dlog({dlog})"

    def __repr__(self):
        return f"ResidueForm[{self.render()}]"


def make_form(numerator: LaurentPolynomial, denominator: Iterable[Monomial],
              residue_vars: Iterable[str], scalar=1, dlog: bool = True) -> ResidueForm:
    """Build a form, absorbing the product of d(var)/var measures when dlog is set."""
    residue_vars = tuple(residue_vars)
    if dlog and residue_vars:
        table = numerator.table
        measure = Monomial.from_map(table, {v: -1 for v in residue_vars})
        numerator = numerator.mul_monomial(measure)
    return ResidueForm(rational(scalar), numerator, tuple(denominator), residue_vars)


def _split_factors(form: ResidueForm, var: str):
    """Partition denominator factors by whether they contain var.

    Matching factors are returned as (k, rest) with the factor monomial equal
    to rest * var^k and rest free of residue variables.
    """
    table = form.table
    i = table.index(var)
    mine, others = [], []
    for m in form.denominator:
        k = m.exps[i]
        if k == 0:
            others.append(m)
        else:
            rest = Monomial(table, m.exps[:i] + (0,) + m.exps[i + 1:])
            mine.append((k, rest))
    return mine, tuple(others)


def _drop_var(vars_: tuple, var: str) -> tuple:
    return tuple(v for v in vars_ if v != var)


def residue_at_zero(form: ResidueForm, var: str) -> ResidueForm:
    """Coefficient of var^(-1) after expanding the var-factors as geometric series."""
    if var not in form.residue_vars:
        raise InvariantError(f"{var!r} is not a residue variable of the form")
    mine, others = _split_factors(form, var)
    table = form.table
    remaining = _drop_var(form.residue_vars, var)
    n = form.numerator
    mind = n.min_degree(var)
    if mind is None or mind >= 0:
        return ResidueForm(form.scalar, LaurentPolynomial.zero(table), others, remaining)
    bound = -1 - mind

    # Expansion of prod 1/(1 - rest*var^k) collected by var-degree, truncated
    # at var-degree `bound`.  expansion[b] maps exponent keys (var zeroed) to
    # coefficients.
    zero_key = table.zero_exps
    expansion = {0: {zero_key: QONE}}
    for k, rest in mine:
        powers = {}
        p = zero_key
        for i in range(bound // k + 1):
            powers[i] = p
            p = tuple(a + b for a, b in zip(p, rest.exps))
        new: dict = {}
        for b, layer in expansion.items():
            for i, shift in powers.items():
                bb = b + i * k
                if bb > bound:
                    continue
                target = new.setdefault(bb, {})
                if i == 0:
                    for key, c in layer.items():
                        s = target.get(key)
                        target[key] = c if s is None else s + c
                else:
                    for key, c in layer.items():
                        kk = tuple(a + b2 for a, b2 in zip(key, shift))
                        s = target.get(kk)
                        target[kk] = c if s is None else s + c
        expansion = new

    acc: dict = {}
    slices = n.split_by_degree(var)
    for a, layer in slices.items():
        if a > -1:
            continue
        need = expansion.get(-1 - a)
        if not need:
            continue
        for k1, c1 in layer.items():
            for k2, c2 in need.items():
                kk = tuple(x + y for x, y in zip(k1, k2))
                c = c1 * c2
                s = acc.get(kk)
                if s is None:
                    acc[kk] = c
                else:
                    s = s + c
                    if s == 0:
                        del acc[kk]
                    else:
                        acc[kk] = s
    result = LaurentPolynomial(table, acc, _canonical=True)
    return ResidueForm(form.scalar, result, others, remaining)


def residue_at_infinity(form: ResidueForm, var: str) -> ResidueForm:
    """Residue at infinity via the substitution var -> 1/var.

    The absorbed measure transforms by d(var)/var -> -d(var)/var, and each
    factor (1 - rest*var^k) becomes a unit monomial times (1 - var^k/rest).
    """
    if var not in form.residue_vars:
        raise InvariantError(f"{var!r} is not a residue variable of the form")
    mine, others = _split_factors(form, var)
    table = form.table
    i = table.index(var)

    # Collect the unit-monomial corrections: d(var) = -d(var)/var^2 under the
    # flip, plus one unit per transformed factor.
    shift = [0] * len(table)
    shift[i] -= 2
    sign = -1
    new_factors = list(others)
    for k, rest in mine:
        inv = rest.inverse()
        new_factors.append(Monomial(table, inv.exps[:i] + (k,) + inv.exps[i + 1:]))
        sign = -sign
        shift[i] += k
        for j, e in enumerate(inv.exps):
            shift[j] += e

    acc = {}
    for key, c in form.numerator.terms.items():
        e = list(key)
        e[i] = -e[i]  # var -> 1/var on the whole numerator (measure included)
        kk = tuple(a + b for a, b in zip(e, shift))
        cc = sign * c
        s = acc.get(kk)
        if s is None:
            acc[kk] = cc
        else:
            s = s + cc
            if s == 0:
                del acc[kk]
            else:
                acc[kk] = s
    flipped = ResidueForm(form.scalar, LaurentPolynomial(table, acc, _canonical=True),
                          tuple(new_factors), form.residue_vars)
    return residue_at_zero(flipped, var)


def _merge(a: ResidueForm, b: ResidueForm) -> ResidueForm:
    if a.scalar != b.scalar or a.residue_vars != b.residue_vars:
        raise InvariantError("cannot merge branch residues of different shapes")
    if sorted(m.exps for m in a.denominator) != sorted(m.exps for m in b.denominator):
        raise InvariantError("branch residues disagree on remaining denominators")
    return ResidueForm(a.scalar, a.numerator + b.numerator, a.denominator, a.residue_vars)


def residue_both(form: ResidueForm, var: str) -> ResidueForm:
    """Residue at 0 plus residue at infinity in one variable."""
    return _merge(residue_at_zero(form, var), residue_at_infinity(form, var))


def iterated_residue(form: ResidueForm) -> LaurentPolynomial:
    """Apply the 0-plus-infinity residue over all residue variables.

    The last listed variable is processed first, matching composition of the
    per-variable operators; the form-class invariant makes the order
    unobservable.
    """
    cur = form
    for var in reversed(form.residue_vars):
        cur = residue_both(cur, var)
    if cur.denominator:
        raise InvariantError("denominator factors survived the iterated residue")
    return cur.numerator.scale(cur.scalar)
