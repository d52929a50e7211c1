"""Homogeneous-space catalogue with the two push-forward paths.

Every space provides fixed-point data (substitutions for the auxiliary
variables plus multiplicative tangent weights) and a factored residue
integrand.  The localization push-forward sums f(point)/bracket(tangent)
over the fixed points and simplifies exactly; the residue push-forward runs
the iterated-residue engine on the integrand.  The central contract is that
the two agree on every admissible class.

Both paths are linear over the coefficient ring, so values are computed and
cached per symmetry orbit of auxiliary monomials; the caches are
observationally pure.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .algebra import (FactoredDenominatorSum, InvariantError, LaurentPolynomial,
                      Monomial, NotDivisible, NotPolynomial, VariableTable,
                      exact_divide_many, rational, zt_table)
from .characters import (CharacterList, bracket, lambda_set, pairwise_product,
                         pos_roots, quotient_set, roots, standard_sets, sym_set)
from .residue import ResidueForm, iterated_residue, make_form
from . import g2core

_KINDS = ("gr", "gr2", "lg", "ogE", "ogO", "fl", "q", "g2p2", "g2b")


class SymmetryViolation(ValueError):
    """The class handed to a push-forward lacks the required symmetry."""


@dataclass(frozen=True)
class SpaceDescriptor:
    """One of the catalogue spaces, with its integer parameters."""

    kind: str
    m: int = 0
    n: int = 0

    def __post_init__(self):
        k = self.kind
        if k not in _KINDS:
            raise ValueError(f"unknown space kind {k!r}")
        if k in ("gr", "gr2"):
            if not (1 <= self.m < self.n):
                raise ValueError("need 1 <= m < n")
        elif k in ("lg", "ogE", "ogO", "fl"):
            if self.n < 1:
                raise ValueError("need n >= 1")
        elif k == "q":
            if self.n < 2:
                raise ValueError("the quadric needs n >= 2")

    def key(self) -> str:
        if self.kind in ("gr", "gr2"):
            return f"{self.kind}:{self.m},{self.n}"
        if self.kind in ("lg", "ogE", "ogO", "fl", "q"):
            return f"{self.kind}:{self.n}"
        return self.kind

    def residue_count(self) -> int:
        if self.kind == "gr":
            return self.m
        if self.kind in ("gr2", "fl", "lg", "ogE", "ogO", "q"):
            return self.n
        return 2

    def parameter_count(self) -> int:
        if self.kind in ("g2p2", "g2b"):
            return 2
        return self.n

    def table(self) -> VariableTable:
        return zt_table(self.residue_count(), self.parameter_count())

    def dimension(self) -> int:
        k, m, n = self.kind, self.m, self.n
        if k in ("gr", "gr2"):
            return m * (n - m)
        if k == "lg":
            return n * (n + 1) // 2
        if k == "ogE":
            return n * (n - 1) // 2
        if k == "ogO":
            return n * (n + 1) // 2
        if k == "fl":
            return n * (n - 1) // 2
        if k == "q":
            return 2 * n - 2
        return 5 if k == "g2p2" else 6

    def variants(self) -> tuple:
        return ("full", "compact") if self.kind in ("gr", "gr2", "ogO") else ("full",)


def parse_space(text: str) -> SpaceDescriptor:
    """Parse the compact grammar: gr:2,7  gr2:2,4  lg:3  ogE:4  ogO:3  fl:4  q:3  g2p2  g2b."""
    body = text.strip()
    if ":" not in body:
        return SpaceDescriptor(body)
    kind, _, params = body.partition(":")
    nums = [int(p) for p in params.split(",") if p != ""]
    if kind in ("g2p2", "g2b"):
        raise ValueError(f"{kind} takes no parameters, got {params!r}")
    if kind in ("gr", "gr2"):
        if len(nums) != 2:
            raise ValueError(f"{kind} takes two parameters, got {params!r}")
        return SpaceDescriptor(kind, nums[0], nums[1])
    if len(nums) != 1:
        raise ValueError(f"{kind} takes one parameter, got {params!r}")
    return SpaceDescriptor(kind, n=nums[0])


@dataclass(frozen=True)
class FixedPoint:
    """Substitution of the auxiliary variables plus the tangent weights."""

    subst: tuple  # pairs (variable name, Monomial)
    tangent: CharacterList

    def subst_map(self) -> dict:
        return dict(self.subst)


def _tvars(table, n):
    return [Monomial.of(table, **{f"t{i + 1}": 1}) for i in range(n)]


def fixed_points(space: SpaceDescriptor) -> list:
    """Fixed points of the torus action with their tangent characters."""
    table = space.table()
    k, m, n = space.kind, space.m, space.n
    pts = []
    if k in ("gr", "gr2"):
        ts = _tvars(table, n)
        for subset in itertools.combinations(range(n), m):
            inside = [ts[i] for i in subset]
            outside = [ts[i] for i in range(n) if i not in subset]
            tangent = CharacterList(tuple(b / a for a in inside for b in outside))
            if k == "gr":
                subst = tuple((f"z{i + 1}", inside[i]) for i in range(m))
            else:
                # Second block of variables takes the complement characters
                # uninverted; this is what makes the sum match both two-set
                # residue formulas.
                subst = tuple((f"z{i + 1}", inside[i]) for i in range(m)) + tuple(
                    (f"z{m + j + 1}", outside[j]) for j in range(n - m))
            pts.append(FixedPoint(subst, tangent))
    elif k in ("lg", "ogE", "ogO"):
        ts = _tvars(table, n)
        for r in range(n + 1):
            for subset in itertools.combinations(range(n), r):
                inside = [ts[i] for i in subset]
                outside = [ts[i] for i in range(n) if i not in subset]
                args = inside + [b.inverse() for b in outside]
                mixed = CharacterList(tuple(a.inverse() for a in inside) + tuple(outside))
                if k == "lg":
                    tangent = sym_set(mixed)
                elif k == "ogE":
                    tangent = lambda_set(mixed)
                else:
                    tangent = lambda_set(mixed) + mixed
                subst = tuple((f"z{i + 1}", args[i]) for i in range(n))
                pts.append(FixedPoint(subst, tangent))
    elif k == "fl":
        ts = _tvars(table, n)
        for sigma in itertools.permutations(range(n)):
            subst = tuple((f"z{i + 1}", ts[sigma[i]]) for i in range(n))
            tangent = pos_roots(CharacterList(tuple(ts[sigma[i]].inverse() for i in range(n))))
            pts.append(FixedPoint(subst, tangent))
    elif k == "q":
        ts = _tvars(table, n)
        plus_minus = ts + [t.inverse() for t in ts]
        for i in range(n):
            for eps in (1, -1):
                a = ts[i] if eps == 1 else ts[i].inverse()
                others = [ts[j] for j in range(n) if j != i]
                subst = ((f"z1", a),) + tuple(
                    (f"z{j + 2}", others[j]) for j in range(n - 1))
                rest = [x for pos, x in enumerate(plus_minus) if pos not in (i, n + i)]
                tangent = CharacterList(tuple(x / a for x in rest))
                pts.append(FixedPoint(subst, tangent))
    elif k == "g2p2":
        for w in g2core.rotation_orbit():
            subst = (("z1", w["t1"]), ("z2", w["t2"]))
            pts.append(FixedPoint(subst, g2core.quotient_identity_tangent().apply(w)))
    else:  # g2b
        for w in g2core.weyl_group():
            subst = (("z1", w["t1"]), ("z2", w["t2"]))
            pts.append(FixedPoint(subst, g2core.borel_identity_tangent().apply(w)))
    dim = space.dimension()
    for p in pts:
        if len(p.tangent) != dim:
            raise InvariantError(f"{space.key()}: tangent length {len(p.tangent)} != dim {dim}")
        if any(c.is_one for c in p.tangent):
            raise InvariantError(f"{space.key()}: unit tangent character at a fixed point")
    return pts


# -- symmetry -----------------------------------------------------------------


def symmetry_generators(space: SpaceDescriptor) -> list:
    """Substitutions generating the symmetry group required of admissible classes."""
    table = space.table()
    k, m, n = space.kind, space.m, space.n

    def swap(i, j):
        return {f"z{i}": Monomial.of(table, **{f"z{j}": 1}),
                f"z{j}": Monomial.of(table, **{f"z{i}": 1})}

    gens = []
    if k == "gr":
        gens = [swap(i, i + 1) for i in range(1, m)]
    elif k == "gr2":
        gens = [swap(i, i + 1) for i in range(1, m)] + \
               [swap(i, i + 1) for i in range(m + 1, n)]
    elif k in ("lg", "ogE", "ogO"):
        gens = [swap(i, i + 1) for i in range(1, n)]
    elif k == "q":
        gens = [swap(i, i + 1) for i in range(2, n)]
        gens.append({"z2": Monomial.of(table, z2=-1)})
    elif k == "g2p2":
        gens = [swap(1, 2)]
    return gens


def check_symmetry(space: SpaceDescriptor, f: LaurentPolynomial) -> None:
    for gen in symmetry_generators(space):
        if f.substitute_monomials(gen, partial=True) != f:
            names = ", ".join(sorted(gen))
            raise SymmetryViolation(
                f"class is not invariant under the {space.key()} substitution on {names}")


def _orbit(zexps: tuple, gens_z) -> tuple:
    """Orbit of a z-exponent vector under the symmetry generators."""
    seen = {zexps}
    frontier = [zexps]
    while frontier:
        nxt = []
        for e in frontier:
            for act in gens_z:
                img = act(e)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return tuple(sorted(seen))


def _z_actions(space: SpaceDescriptor):
    """Symmetry generators as maps on z-exponent vectors."""
    m = space.residue_count()
    table = space.table()
    actions = []
    for gen in symmetry_generators(space):
        images = []
        for i in range(m):
            img = gen.get(f"z{i + 1}")
            images.append(img.exps[:m] if img is not None else
                          tuple(1 if j == i else 0 for j in range(m)))
        def act(e, images=tuple(images), m=m):
            out = [0] * m
            for i, ei in enumerate(e):
                if ei:
                    for j, fj in enumerate(images[i]):
                        if fj:
                            out[j] += ei * fj
            return tuple(out)
        actions.append(act)
    return actions


# -- push-forward machinery -----------------------------------------------------


def _pairing_order(keys, key_poly):
    """Order factor keys so that reciprocal binomial pairs are adjacent.

    Multiplying (1 - m)(1 - 1/m) first collapses to a three-term block, which
    keeps streamed cofactor products far smaller than an arbitrary order.
    """
    def signature(key):
        terms = key_poly[key].terms
        if len(terms) != 2:
            return None
        (u, _), (v, _) = sorted(terms.items())
        diff = tuple(a - b for a, b in zip(u, v))
        return max(diff, tuple(-d for d in diff))

    groups: dict = {}
    loose = []
    for key in sorted(keys):
        sig = signature(key)
        if sig is None:
            loose.append(key)
        else:
            groups.setdefault(sig, []).append(key)
    ordered = []
    for sig in sorted(groups):
        ordered.extend(groups[sig])
    ordered.extend(loose)
    return tuple(ordered)


def _multiset_union(a: dict, b: dict) -> dict:
    out = dict(a)
    for key, mult in b.items():
        if out.get(key, 0) < mult:
            out[key] = mult
    return out


def _missing_keys(union: dict, counts: dict):
    out = []
    for key, mult in union.items():
        lack = mult - counts.get(key, 0)
        out.extend([key] * lack)
    return out


class LocalizationEngine:
    """Exact sum of numerator/bracket(tangent) over a fixed list of points.

    Summands are combined along a balanced merge tree: every node holds the
    factor-multiset least common denominator of its subtree, so each merge
    multiplies numerators only by the difference factors.  Cancellation
    between nearby fixed points then keeps intermediate numerators far
    smaller than a flat common-denominator sum.
    """

    def __init__(self, table: VariableTable, points):
        self.table = table
        self.points = list(points)
        template = FactoredDenominatorSum(table)
        one = LaurentPolynomial.one(table)
        for p in self.points:
            template.add(one, [one - c.inverse().as_polynomial() for c in p.tangent])
        self.key_poly = template.key_poly
        self.scalars = [rational(1) / scalar for _, _, scalar in template.entries]
        # Merge plan: level by level over adjacent pairs.  Each node records
        # the cofactor keys each child needs, reciprocal pairs first.
        level = [("leaf", i, dict(counts)) for i, (_, counts, _) in
                 enumerate(template.entries)]
        plan = []
        while len(level) > 1:
            nxt = []
            for i in range(0, len(level) - 1, 2):
                left, right = level[i], level[i + 1]
                union = _multiset_union(left[2], right[2])
                step = (left[0], left[1], _pairing_order(_missing_keys(union, left[2]), self.key_poly),
                        right[0], right[1], _pairing_order(_missing_keys(union, right[2]), self.key_poly))
                plan.append(step)
                nxt.append(("node", len(plan) - 1, union))
            if len(level) % 2:
                nxt.append(level[-1])
            level = nxt
        self.plan = plan
        self.root = level[0]
        self.master = level[0][2]
        self.division_keys = _pairing_order(
            [key for key, mult in self.master.items() for _ in range(mult)],
            self.key_poly)

    def _apply_keys(self, value: LaurentPolynomial, keys) -> LaurentPolynomial:
        for key in keys:
            value = value * self.key_poly[key]
        return value

    def sum_values(self, numerators) -> LaurentPolynomial:
        if len(numerators) != len(self.points):
            raise InvariantError("one numerator per fixed point required")
        node_values = [None] * len(self.plan)

        def value_of(kind, index) -> LaurentPolynomial:
            if kind == "leaf":
                return numerators[index].scale(self.scalars[index])
            return node_values[index]

        for i, (lk, li, lkeys, rk, ri, rkeys) in enumerate(self.plan):
            left = self._apply_keys(value_of(lk, li), lkeys)
            right = self._apply_keys(value_of(rk, ri), rkeys)
            node_values[i] = left + right
        total = value_of(*self.root[:2])
        try:
            return exact_divide_many(
                total, [self.key_poly[key] for key in self.division_keys])
        except NotDivisible:
            raise NotPolynomial(
                "localization sum does not simplify to a Laurent polynomial"
            ) from None


def _integrand_parts(space: SpaceDescriptor, variant: str):
    """(scalar, base numerator, denominator monomials, residue variables)."""
    if variant not in space.variants():
        raise ValueError(f"invalid variant {variant!r} for {space.key()}")
    table = space.table()
    k, m, n = space.kind, space.m, space.n
    mres = space.residue_count()
    zlist = standard_sets("Z", mres, table)
    one = LaurentPolynomial.one(table)

    if k in ("gr", "gr2"):
        ambient = standard_sets("T", n, table)
    elif k in ("lg", "ogE", "q"):
        ambient = standard_sets("T_pm", n, table)
    elif k == "ogO":
        ambient = standard_sets("T_sharp" if variant == "full" else "T_pm", n, table)
    elif k == "fl":
        ambient = standard_sets("T", n, table)
    else:
        ambient = g2core.seven_weights()  # g2 table coincides with the space table

    denominator = tuple(z / tau for z in zlist for tau in ambient)

    if k == "gr":
        if variant == "full":
            scalar = rational(1, math.factorial(m))
            numerator = bracket(roots(zlist), table)
        else:
            scalar = rational(1)
            numerator = bracket(pos_roots(zlist), table)
    elif k == "gr2":
        if variant == "full":
            scalar = rational(1, math.factorial(m) * math.factorial(n - m))
            z1part = CharacterList(zlist.entries[:m])
            z2part = CharacterList(zlist.entries[m:])
            numerator = bracket(roots(z1part), table) \
                * bracket(quotient_set(z1part, z2part), table) \
                * bracket(roots(z2part), table)
        else:
            scalar = rational(1)
            numerator = bracket(pos_roots(zlist), table)
    elif k == "lg":
        scalar = rational(1, math.factorial(n))
        numerator = bracket(lambda_set(zlist.inverse()), table) * bracket(roots(zlist), table)
    elif k == "ogE":
        scalar = rational(1, math.factorial(n))
        numerator = bracket(sym_set(zlist.inverse()), table) * bracket(roots(zlist), table)
    elif k == "ogO":
        scalar = rational(1, math.factorial(n))
        if variant == "full":
            numerator = bracket(sym_set(zlist.inverse()), table) * bracket(roots(zlist), table)
        else:
            numerator = bracket(lambda_set(zlist.inverse()), table)
            for z in zlist:
                numerator = numerator * (one + z.as_polynomial())
            numerator = numerator * bracket(roots(zlist), table)
    elif k == "fl":
        scalar = rational(1)
        numerator = bracket(pos_roots(zlist), table)
    elif k == "q":
        scalar = rational(1, 2 ** (n - 1))
        z2part = CharacterList(zlist.entries[1:])
        numerator = (one - Monomial.of(table, z1=2).as_polynomial()) \
            * bracket(pairwise_product(zlist.inverse(), z2part.inverse()), table) \
            * bracket(pos_roots(zlist), table)
    else:  # g2p2, g2b share the ambient-Grassmannian formula
        scalar = rational(1)
        lift = g2core.fundamental_class_lift().transport(table)
        numerator = lift * bracket(pos_roots(zlist), table)

    zvars = tuple(f"z{i + 1}" for i in range(mres))
    return scalar, numerator, denominator, zvars


def build_integrand(space: SpaceDescriptor, f: LaurentPolynomial,
                    variant: str = "full") -> ResidueForm:
    """The factored residue integrand for a class f (measure absorbed)."""
    check_symmetry(space, f)
    scalar, base, denominator, zvars = _integrand_parts(space, variant)
    return make_form(f * base, denominator, zvars, scalar=scalar, dlog=True)


# -- cached per-space calculators ------------------------------------------------


class _SpaceCalc:
    def __init__(self, space: SpaceDescriptor):
        self.space = space
        self.table = space.table()
        self.m = space.residue_count()
        self.points = fixed_points(space)
        self.engine = LocalizationEngine(self.table, self.points)
        self.z_actions = _z_actions(space)
        self.loc_values: dict = {}
        self.res_values: dict = {}
        self.parts: dict = {}

    def canonical(self, zexps: tuple) -> tuple:
        if not self.z_actions:
            return zexps
        return max(_orbit(zexps, self.z_actions))

    def orbit_sum(self, canon: tuple) -> LaurentPolynomial:
        orbit = _orbit(canon, self.z_actions) if self.z_actions else (canon,)
        pad = (0,) * (len(self.table) - self.m)
        return LaurentPolynomial(self.table, {e + pad: 1 for e in orbit})

    def decompose(self, f: LaurentPolynomial) -> dict:
        """f as {canonical z-class: coefficient polynomial in the parameters}."""
        out: dict = {}
        zn = self.m
        for key, c in f.terms.items():
            zpart = key[:zn]
            canon = self.canonical(zpart)
            if zpart != canon:
                continue
            tkey = (0,) * zn + key[zn:]
            out.setdefault(canon, {})[tkey] = c
        return {canon: LaurentPolynomial(self.table, terms, _canonical=True)
                for canon, terms in out.items()}

    def loc_class_value(self, canon: tuple) -> LaurentPolynomial:
        got = self.loc_values.get(canon)
        if got is None:
            f0 = self.orbit_sum(canon)
            numerators = [f0.substitute_monomials(p.subst_map(), partial=True)
                          for p in self.points]
            got = self.engine.sum_values(numerators)
            self.loc_values[canon] = got
        return got

    def res_class_value(self, canon: tuple, variant: str) -> LaurentPolynomial:
        key = (canon, variant)
        got = self.res_values.get(key)
        if got is None:
            parts = self.parts.get(variant)
            if parts is None:
                parts = _integrand_parts(self.space, variant)
                self.parts[variant] = parts
            scalar, base, denominator, zvars = parts
            form = make_form(self.orbit_sum(canon) * base, denominator, zvars,
                             scalar=scalar, dlog=True)
            got = iterated_residue(form)
            self.res_values[key] = got
        return got


_CALCS: dict = {}


def _calc(space: SpaceDescriptor) -> _SpaceCalc:
    got = _CALCS.get(space.key())
    if got is None:
        got = _SpaceCalc(space)
        _CALCS[space.key()] = got
    return got


def clear_caches() -> None:
    _CALCS.clear()


def localization_pushforward(space: SpaceDescriptor, f: LaurentPolynomial) -> LaurentPolynomial:
    """Sum of f(point)/bracket(tangent) over the fixed points, simplified exactly."""
    check_symmetry(space, f)
    calc = _calc(space)
    total = LaurentPolynomial.zero(calc.table)
    for canon, coeff in calc.decompose(f).items():
        total = total + coeff * calc.loc_class_value(canon)
    return total


def residue_pushforward(space: SpaceDescriptor, f: LaurentPolynomial,
                        variant: str = "full") -> LaurentPolynomial:
    """Iterated residue of the factored integrand; contracts to equal the
    localization push-forward on every admissible class."""
    check_symmetry(space, f)
    if variant not in space.variants():
        raise ValueError(f"invalid variant {variant!r} for {space.key()}")
    calc = _calc(space)
    total = LaurentPolynomial.zero(calc.table)
    for canon, coeff in calc.decompose(f).items():
        total = total + coeff * calc.res_class_value(canon, variant)
    return total
