"""Seeded randomized differential campaigns: residue formulas against
localization sums, with variant cross-checks.  A seed fully determines the
generated classes, so campaign output is byte-reproducible.
"""

from __future__ import annotations

import random

from .algebra import LaurentPolynomial
from .spaces import (SpaceDescriptor, _calc, localization_pushforward,
                     residue_pushforward)


def random_admissible_class(space: SpaceDescriptor, rng: random.Random,
                            max_exp: int = 3, max_classes: int = 3) -> LaurentPolynomial:
    """Random admissible class: a few symmetrized auxiliary monomials with
    small integer coefficients (nonsymmetric spaces get plain monomials)."""
    calc = _calc(space)
    m = space.residue_count()
    total = LaurentPolynomial.zero(calc.table)
    for _ in range(rng.randint(1, max_classes)):
        exps = tuple(rng.randint(-max_exp, max_exp) for _ in range(m))
        coeff = rng.choice([-3, -2, -1, 1, 2, 3])
        total = total + calc.orbit_sum(calc.canonical(exps)).scale(coeff)
    if total.is_zero:
        total = LaurentPolynomial.one(calc.table)
    return total


def differential_trial(space: SpaceDescriptor, f: LaurentPolynomial,
                       variants=None):
    """(localization value, {variant: residue value}, all-agree flag)."""
    if variants is None:
        variants = space.variants()
    loc = localization_pushforward(space, f)
    res = {v: residue_pushforward(space, f, v) for v in variants}
    agree = all(r == loc for r in res.values())
    return loc, res, agree


def run_campaign(space: SpaceDescriptor, trials: int, seed: int,
                 max_exp: int = 3):
    """Run seeded trials; returns (report lines, number of failures)."""
    rng = random.Random(seed)
    lines = [f"space {space.key()} trials {trials} seed {seed} max-exp {max_exp}"]
    failures = 0
    for t in range(1, trials + 1):
        f = random_admissible_class(space, rng, max_exp=max_exp)
        _, res, agree = differential_trial(space, f)
        if not agree:
            failures += 1
        variants = ",".join(res)
        lines.append(f"trial {t}: terms {len(f)} variants {variants} "
                     f"agree {'yes' if agree else 'NO'}")
    status = "all agree" if failures == 0 else f"{failures} mismatches"
    lines.append(f"verified {trials - failures}/{trials} trials: {status}")
    return lines, failures
