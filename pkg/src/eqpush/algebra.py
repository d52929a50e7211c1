"""Exact arithmetic on multivariate Laurent polynomials over the rationals.

A Laurent polynomial is a dict mapping exponent tuples (one integer per
variable of a fixed VariableTable, negative exponents allowed) to nonzero
arbitrary-precision rational coefficients.  The zero polynomial is the empty
dict.  All values are immutable after construction and all operations are
pure, so results can be shared freely.

Rational coefficients come from gmpy2 when available (much faster), with
fractions.Fraction as a drop-in fallback.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from operator import add as _add, neg as _neg, sub as _sub
from typing import Iterable, Mapping

try:
    from gmpy2 import mpq as _ratio
except ImportError:  # pragma: no cover
    from fractions import Fraction as _ratio


def rational(numerator=0, denominator=1):
    """Exact rational number."""
    return _ratio(numerator, denominator)


QZERO = rational(0)
QONE = rational(1)

RESIDUE = "residue"
PARAMETER = "parameter"


class MixedVariableTables(ValueError):
    """Operands live over different variable tables."""


class NotDivisible(ArithmeticError):
    """Exact polynomial division has no quotient."""


class NotPolynomial(ArithmeticError):
    """A rational-function sum failed to simplify to a Laurent polynomial."""


class InvariantError(RuntimeError):
    """An internal consistency check failed."""


@dataclass(frozen=True)
class VariableTable:
    """Ordered universe of variables, each either residue-class or parameter-class.

    The ordering is fixed for the lifetime of a computation: it determines
    term layout, canonical rendering and the default residue order.
    """

    names: tuple
    kinds: tuple

    def __post_init__(self):
        if len(self.names) != len(self.kinds):
            raise ValueError("names and kinds must have equal length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be unique")
        for k in self.kinds:
            if k not in (RESIDUE, PARAMETER):
                raise ValueError(f"unknown variable kind {k!r}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def kind(self, name: str) -> str:
        return self.kinds[self.index(name)]

    def residue_names(self) -> tuple:
        return tuple(n for n, k in zip(self.names, self.kinds) if k == RESIDUE)

    def parameter_names(self) -> tuple:
        return tuple(n for n, k in zip(self.names, self.kinds) if k == PARAMETER)

    @property
    def zero_exps(self) -> tuple:
        return (0,) * len(self.names)


@lru_cache(maxsize=None)
def zt_table(m: int, n: int) -> VariableTable:
    """Standard table with residue variables z1..zm and parameters t1..tn."""
    names = tuple(f"z{i + 1}" for i in range(m)) + tuple(f"t{i + 1}" for i in range(n))
    kinds = (RESIDUE,) * m + (PARAMETER,) * n
    return VariableTable(names, kinds)


@lru_cache(maxsize=None)
def parameter_table(*names: str) -> VariableTable:
    """Table of parameter-class variables only (abstract symbols, t's, ...)."""
    return VariableTable(tuple(names), (PARAMETER,) * len(names))


def _same_table(a: VariableTable, b: VariableTable) -> None:
    if a is not b and a != b:
        raise MixedVariableTables(f"operands over different tables: {a.names} vs {b.names}")


@dataclass(frozen=True)
class Monomial:
    """Product of variable powers; exponents may be negative."""

    table: VariableTable
    exps: tuple

    @staticmethod
    def one(table: VariableTable) -> "Monomial":
        return Monomial(table, table.zero_exps)

    @staticmethod
    def of(table: VariableTable, **powers: int) -> "Monomial":
        e = [0] * len(table)
        for name, k in powers.items():
            e[table.index(name)] = k
        return Monomial(table, tuple(e))

    @staticmethod
    def from_map(table: VariableTable, powers: Mapping[str, int]) -> "Monomial":
        e = [0] * len(table)
        for name, k in powers.items():
            e[table.index(name)] = k
        return Monomial(table, tuple(e))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same_table(self.table, other.table)
        return Monomial(self.table, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        _same_table(self.table, other.table)
        return Monomial(self.table, tuple(a - b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(self.table, tuple(a * k for a in self.exps))

    def inverse(self) -> "Monomial":
        return Monomial(self.table, tuple(-a for a in self.exps))

    def degree(self, name: str) -> int:
        return self.exps[self.table.index(name)]

    @property
    def is_one(self) -> bool:
        return all(e == 0 for e in self.exps)

    def variables(self) -> tuple:
        return tuple(n for n, e in zip(self.table.names, self.exps) if e != 0)

    def as_polynomial(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.table, {self.exps: QONE})

    def substitute(self, mapping: Mapping[str, "Monomial"]) -> "Monomial":
        """Image under a variable -> monomial map (unmapped variables stay fixed)."""
        acc = [0] * len(self.table)
        for i, e in enumerate(self.exps):
            if e == 0:
                continue
            name = self.table.names[i]
            img = mapping.get(name)
            if img is None:
                acc[i] += e
            else:
                _same_table(self.table, img.table)
                for j, f in enumerate(img.exps):
                    acc[j] += e * f
        return Monomial(self.table, tuple(acc))

    def render(self) -> str:
        parts = []
        for name, e in zip(self.table.names, self.exps):
            if e == 0:
                continue
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return f"Monomial({self.render()})"


def term_sort_key(exps: tuple):
    """Canonical term order: by support size, then support positions, then
    exponents in descending lexicographic order."""
    support = tuple(i for i, e in enumerate(exps) if e != 0)
    return (len(support), support, tuple(-exps[i] for i in support))


def _grlex_key(exps: tuple):
    return (sum(exps), exps)


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial with exact rational coefficients."""

    __slots__ = ("table", "terms")

    def __init__(self, table: VariableTable, terms: Mapping[tuple, object], _canonical=False):
        self.table = table
        if _canonical:
            self.terms = dict(terms)
        else:
            self.terms = {k: rational(v) for k, v in terms.items() if v != 0}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(table: VariableTable) -> "LaurentPolynomial":
        return LaurentPolynomial(table, {}, _canonical=True)

    @staticmethod
    def constant(table: VariableTable, value) -> "LaurentPolynomial":
        q = rational(value)
        if q == 0:
            return LaurentPolynomial.zero(table)
        return LaurentPolynomial(table, {table.zero_exps: q}, _canonical=True)

    @staticmethod
    def one(table: VariableTable) -> "LaurentPolynomial":
        return LaurentPolynomial.constant(table, 1)

    @staticmethod
    def variable(table: VariableTable, name: str, k: int = 1) -> "LaurentPolynomial":
        e = [0] * len(table)
        e[table.index(name)] = k
        return LaurentPolynomial(table, {tuple(e): QONE}, _canonical=True)

    @staticmethod
    def from_monomial(mono: Monomial, coeff=1) -> "LaurentPolynomial":
        q = rational(coeff)
        if q == 0:
            return LaurentPolynomial.zero(mono.table)
        return LaurentPolynomial(mono.table, {mono.exps: q}, _canonical=True)

    # -- basic queries ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == {self.table.zero_exps: QONE}

    def __len__(self):
        return len(self.terms)

    def constant_term(self):
        return self.terms.get(self.table.zero_exps, QZERO)

    def is_integral(self) -> bool:
        """True iff every coefficient is an integer."""
        return all(c.denominator == 1 for c in self.terms.values())

    def is_unit_monomial(self) -> bool:
        return len(self.terms) == 1

    def as_constant(self):
        """The rational value of a constant polynomial (raises otherwise)."""
        if self.is_zero:
            return QZERO
        if len(self.terms) == 1 and self.table.zero_exps in self.terms:
            return self.terms[self.table.zero_exps]
        raise InvariantError("polynomial is not constant")

    def occurring_variables(self) -> tuple:
        seen = [False] * len(self.table)
        for k in self.terms:
            for i, e in enumerate(k):
                if e != 0:
                    seen[i] = True
        return tuple(n for n, s in zip(self.table.names, seen) if s)

    def min_degree(self, name: str):
        """Minimum exponent of a variable, or None for the zero polynomial."""
        if not self.terms:
            return None
        i = self.table.index(name)
        return min(k[i] for k in self.terms)

    def max_degree(self, name: str):
        if not self.terms:
            return None
        i = self.table.index(name)
        return max(k[i] for k in self.terms)

    def total_degree(self):
        if not self.terms:
            return None
        return max(sum(k) for k in self.terms)

    def leading_term(self):
        """(exponents, coefficient) of the graded-lexicographic leading term."""
        if not self.terms:
            raise InvariantError("zero polynomial has no leading term")
        k = max(self.terms, key=_grlex_key)
        return k, self.terms[k]

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            if isinstance(other, int) or other == 0:
                return self.terms == LaurentPolynomial.constant(self.table, other).terms
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    __hash__ = None

    def __neg__(self):
        return LaurentPolynomial(self.table, {k: -c for k, c in self.terms.items()}, _canonical=True)

    def __add__(self, other):
        other = self._coerce(other)
        _same_table(self.table, other.table)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            s = acc.get(k)
            if s is None:
                acc[k] = c
            else:
                s = s + c
                if s == 0:
                    del acc[k]
                else:
                    acc[k] = s
        return LaurentPolynomial(self.table, acc, _canonical=True)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, LaurentPolynomial):
            _same_table(self.table, other.table)
            a, b = self.terms, other.terms
            if len(a) > len(b):
                a, b = b, a
            acc = {}
            get = acc.get
            items_b = list(b.items())
            for k1, c1 in a.items():
                for k2, c2 in items_b:
                    k = tuple(map(_add, k1, k2))
                    s = get(k)
                    if s is None:
                        acc[k] = c1 * c2
                    else:
                        s = s + c1 * c2
                        if s == 0:
                            del acc[k]
                        else:
                            acc[k] = s
            return LaurentPolynomial(self.table, acc, _canonical=True)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            if len(self.terms) != 1:
                raise NotDivisible("negative power of a non-monomial")
            (e, c), = self.terms.items()
            return LaurentPolynomial(
                self.table, {tuple(x * k for x in e): rational(1) / (c ** (-k))}, _canonical=True
            )
        result = LaurentPolynomial.one(self.table)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        return LaurentPolynomial.constant(self.table, other)

    def scale(self, q) -> "LaurentPolynomial":
        q = rational(q)
        if q == 0:
            return LaurentPolynomial.zero(self.table)
        return LaurentPolynomial(self.table, {k: c * q for k, c in self.terms.items()}, _canonical=True)

    def mul_monomial(self, mono: Monomial, coeff=1) -> "LaurentPolynomial":
        _same_table(self.table, mono.table)
        q = rational(coeff)
        if q == 0 or not self.terms:
            return LaurentPolynomial.zero(self.table)
        sh = mono.exps
        return LaurentPolynomial(
            self.table,
            {tuple(map(_add, k, sh)): c * q for k, c in self.terms.items()},
            _canonical=True,
        )

    # -- structure ----------------------------------------------------------

    def split_by_degree(self, name: str) -> dict:
        """Group terms by the exponent of one variable.

        Returns {degree: {exponents-with-that-variable-zeroed: coeff}}.
        """
        i = self.table.index(name)
        out = {}
        for k, c in self.terms.items():
            d = k[i]
            kk = k[:i] + (0,) + k[i + 1:]
            out.setdefault(d, {})[kk] = c
        return out

    def coefficient_of(self, name: str, degree: int) -> "LaurentPolynomial":
        i = self.table.index(name)
        acc = {}
        for k, c in self.terms.items():
            if k[i] == degree:
                acc[k[:i] + (0,) + k[i + 1:]] = c
        return LaurentPolynomial(self.table, acc, _canonical=True)

    # -- substitution -------------------------------------------------------

    def substitute_monomials(self, mapping: Mapping[str, Monomial], partial: bool = False):
        """Replace variables by monomials.

        The map must cover every variable occurring in the polynomial unless
        partial=True, in which case unmapped variables stay fixed.
        """
        table = self.table
        images = {}
        for name, mono in mapping.items():
            _same_table(table, mono.table)
            images[table.index(name)] = mono.exps
        if not partial:
            for name in self.occurring_variables():
                if table.index(name) not in images:
                    raise KeyError(f"no image for occurring variable {name!r}")
        n = len(table)
        acc = {}
        for k, c in self.terms.items():
            e = [0] * n
            for i, ki in enumerate(k):
                if ki == 0:
                    continue
                img = images.get(i)
                if img is None:
                    e[i] += ki
                else:
                    for j, f in enumerate(img):
                        if f:
                            e[j] += ki * f
            kk = tuple(e)
            s = acc.get(kk)
            if s is None:
                acc[kk] = c
            else:
                s = s + c
                if s == 0:
                    del acc[kk]
                else:
                    acc[kk] = s
        return LaurentPolynomial(table, acc, _canonical=True)

    def substitute_polynomials(self, mapping: Mapping[str, "LaurentPolynomial"],
                               target: VariableTable | None = None):
        """Exact evaluation with polynomial images (the composition map).

        Every occurring variable must be mapped.  A variable occurring with a
        negative exponent needs an invertible (single-term) image.
        """
        if target is None:
            if not mapping:
                raise ValueError("empty assignment needs an explicit target table")
            target = next(iter(mapping.values())).table
        images = {}
        for name, p in mapping.items():
            _same_table(target, p.table)
            images[self.table.index(name)] = p
        for name in self.occurring_variables():
            if self.table.index(name) not in images:
                raise KeyError(f"no image for occurring symbol {name!r}")
        power_cache: dict = {}

        def img_power(i: int, k: int) -> LaurentPolynomial:
            key = (i, k)
            got = power_cache.get(key)
            if got is None:
                got = images[i] ** k
                power_cache[key] = got
            return got

        total = LaurentPolynomial.zero(target)
        for k, c in self.terms.items():
            piece = LaurentPolynomial.constant(target, c)
            for i, ki in enumerate(k):
                if ki != 0:
                    piece = piece * img_power(i, ki)
            total = total + piece
        return total

    def transport(self, new_table: VariableTable) -> "LaurentPolynomial":
        """Re-express over another table containing the occurring variables."""
        if new_table == self.table:
            return self
        pos = []
        for name in self.table.names:
            try:
                pos.append(new_table.index(name))
            except KeyError:
                pos.append(None)
        n = len(new_table)
        acc = {}
        for k, c in self.terms.items():
            e = [0] * n
            for i, ki in enumerate(k):
                if ki == 0:
                    continue
                j = pos[i]
                if j is None:
                    raise KeyError(f"variable {self.table.names[i]!r} absent from target table")
                e[j] = ki
            acc[tuple(e)] = c
        return LaurentPolynomial(new_table, acc, _canonical=True)

    # -- rendering ----------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: term_sort_key(kv[0]))

    def render(self) -> str:
        """Canonical text form; the bit-exact fixture format."""
        if not self.terms:
            return "0"
        pieces = []
        for k, c in self.sorted_terms():
            mono = Monomial(self.table, k)
            num, den = c.numerator, c.denominator
            neg = num < 0
            mag = -num if neg else num
            coeff = f"{mag}" if den == 1 else f"{mag}/{den}"
            if mono.is_one:
                body = coeff
            elif mag == 1 and den == 1:
                body = mono.render()
            else:
                body = f"{coeff}*{mono.render()}"
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    def render_latex(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, c in self.sorted_terms():
            num, den = c.numerator, c.denominator
            neg = num < 0
            mag = -num if neg else num
            coeff = f"{mag}" if den == 1 else f"\\tfrac{{{mag}}}{{{den}}}"
            factors = []
            for name, e in zip(self.table.names, k):
                if e == 0:
                    continue
                base = f"{name[0]}_{{{name[1:]}}}" if len(name) > 1 and name[1:].isdigit() else name
                factors.append(base if e == 1 else f"{base}^{{{e}}}")
            body = " ".join(factors) if factors else coeff
            if factors and not (mag == 1 and den == 1):
                body = f"{coeff} {body}"
            sign = "-" if neg else ("+" if out else "")
            out.append(f"{sign} {body}" if out else f"{sign}{body}")
        return " ".join(out)

    def json_terms(self) -> list:
        out = []
        for k, c in self.sorted_terms():
            exps = {name: e for name, e in zip(self.table.names, k) if e != 0}
            out.append({
                "coeff_num": str(c.numerator),
                "coeff_den": str(c.denominator),
                "exponents": exps,
            })
        return out

    def __repr__(self):
        return f"LaurentPolynomial({self.render()})"


# -- exact division ----------------------------------------------------------


def _clearing_shift(terms, n: int) -> tuple:
    """True componentwise minimum exponent.

    Shifting by it normalizes every variable to minimum degree zero, which is
    what makes leading-term division complete for exact Laurent quotients.
    """
    mins = None
    for k in terms:
        if mins is None:
            mins = list(k)
        else:
            for i, e in enumerate(k):
                if e < mins[i]:
                    mins[i] = e
    return tuple(mins) if mins is not None else (0,) * n


def exact_divide(p: LaurentPolynomial, d: LaurentPolynomial) -> LaurentPolynomial:
    """Quotient q with q*d == p exactly; raises NotDivisible when none exists.

    Negative exponents are cleared by monomial shifts, then ordinary
    multivariate division runs under the graded-lexicographic order.
    """
    return exact_divide_many(p, [d])


def exact_divide_many(p: LaurentPolynomial, divisors) -> LaurentPolynomial:
    """Divide exactly by each divisor in turn, clearing negatives only once."""
    divisors = list(divisors)
    for d in divisors:
        _same_table(p.table, d.table)
        if d.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero or not divisors:
        return p
    n = len(p.table)
    sp = _clearing_shift(p.terms, n)
    num = {tuple(map(_sub, k, sp)): c for k, c in p.terms.items()}
    shift = list(sp)
    for d in divisors:
        sd = _clearing_shift(d.terms, n)
        den = {tuple(map(_sub, k, sd)): c for k, c in d.terms.items()}
        num = _divide_nonneg(num, den)
        for i in range(n):
            shift[i] -= sd[i]
    if any(shift):
        num = {tuple(map(_add, k, shift)): c for k, c in num.items()}
    return LaurentPolynomial(p.table, num, _canonical=True)


def _divide_nonneg(num: dict, den: dict) -> dict:
    """Exact division of ordinary-polynomial term dicts (graded-lex, heap driven)."""
    lead = max(den, key=_grlex_key)
    lc = den[lead]
    monic = lc == 1
    rest = [(k, c) for k, c in den.items() if k != lead]
    remainder = dict(num)
    heap = [(-sum(k), tuple(map(_neg, k)), k) for k in remainder]
    heapq.heapify(heap)
    push, pop = heapq.heappush, heapq.heappop
    quotient: dict = {}
    get = remainder.get
    while remainder:
        while heap:
            k = heap[0][2]
            if k in remainder:
                break
            pop(heap)
        else:  # pragma: no cover - remainder nonempty implies heap nonempty
            raise InvariantError("division heap exhausted with nonzero remainder")
        pop(heap)
        c = remainder.pop(k)
        qk = tuple(map(_sub, k, lead))
        if any(e < 0 for e in qk):
            raise NotDivisible("leading term not divisible")
        qc = c if monic else c / lc
        quotient[qk] = qc
        for dk, dc in rest:
            nk = tuple(map(_add, qk, dk))
            s = get(nk)
            if s is None:
                remainder[nk] = -qc * dc
                push(heap, (-sum(nk), tuple(map(_neg, nk)), nk))
            else:
                s = s - qc * dc
                if s == 0:
                    del remainder[nk]
                else:
                    remainder[nk] = s
    return quotient


# -- rational expressions ------------------------------------------------------


class RationalExpression:
    """Quotient of Laurent polynomials; equality by cross-multiplication."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPolynomial, denominator: LaurentPolynomial):
        _same_table(numerator.table, denominator.table)
        if denominator.is_zero:
            raise ZeroDivisionError("zero denominator")
        self.numerator = numerator
        self.denominator = denominator

    @property
    def table(self):
        return self.numerator.table

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            other = RationalExpression(other, LaurentPolynomial.one(other.table))
        if not isinstance(other, RationalExpression):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None

    def __add__(self, other: "RationalExpression") -> "RationalExpression":
        return RationalExpression(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __mul__(self, other: "RationalExpression") -> "RationalExpression":
        return RationalExpression(self.numerator * other.numerator,
                                  self.denominator * other.denominator)

    def __repr__(self):
        return f"({self.numerator.render()}) / ({self.denominator.render()})"


def rational_sum_to_polynomial(terms: Iterable[RationalExpression]) -> LaurentPolynomial:
    """Sum rational expressions and divide out the common denominator exactly."""
    terms = list(terms)
    if not terms:
        raise ValueError("empty sum has no table")
    num = LaurentPolynomial.zero(terms[0].table)
    den = LaurentPolynomial.one(terms[0].table)
    for t in terms:
        num = num * t.denominator + t.numerator * den
        den = den * t.denominator
    try:
        return exact_divide(num, den)
    except NotDivisible:
        raise NotPolynomial("sum does not simplify to a Laurent polynomial") from None


# -- factored rational sums ----------------------------------------------------


def normalize_factor(f: LaurentPolynomial):
    """Split a nonzero factor into (monic-leading key polynomial, leading coefficient)."""
    if f.is_zero:
        raise ZeroDivisionError("zero factor in a denominator")
    _, lc = f.leading_term()
    if lc == 1:
        return f, QONE
    return f.scale(rational(1) / lc), lc


def _factor_key(f: LaurentPolynomial) -> tuple:
    return tuple(sorted(f.terms.items()))


class FactoredDenominatorSum:
    """Accumulates numerator/∏(factors) terms and simplifies them exactly.

    Denominators are kept as multisets of polynomial factors; the common
    denominator is their multiset maximum, each numerator is multiplied by the
    missing cofactors, and the total is divided factor by factor at the end.
    """

    def __init__(self, table: VariableTable):
        self.table = table
        self.entries = []  # (numerator, factor-key counter, scalar)
        self.key_poly: dict = {}

    def add(self, numerator: LaurentPolynomial, factors: Iterable[LaurentPolynomial]):
        _same_table(self.table, numerator.table)
        counts: dict = {}
        scalar = QONE
        for f in factors:
            monic, lc = normalize_factor(f)
            scalar = scalar * lc
            key = _factor_key(monic)
            self.key_poly.setdefault(key, monic)
            counts[key] = counts.get(key, 0) + 1
        self.entries.append((numerator, counts, scalar))

    def master(self) -> dict:
        master: dict = {}
        for _, counts, _ in self.entries:
            for key, m in counts.items():
                if master.get(key, 0) < m:
                    master[key] = m
        return master

    def total(self) -> LaurentPolynomial:
        if not self.entries:
            return LaurentPolynomial.zero(self.table)
        master = self.master()
        cof_cache: dict = {}
        acc = LaurentPolynomial.zero(self.table)
        for numerator, counts, scalar in self.entries:
            if numerator.is_zero:
                continue
            missing = []
            for key, m in master.items():
                lack = m - counts.get(key, 0)
                missing.extend([key] * lack)
            ck = tuple(sorted(missing))
            cof = cof_cache.get(ck)
            if cof is None:
                cof = LaurentPolynomial.one(self.table)
                for key in ck:
                    cof = cof * self.key_poly[key]
                cof_cache[ck] = cof
            acc = acc + (numerator * cof).scale(rational(1) / scalar)
        for key, m in sorted(master.items()):
            poly = self.key_poly[key]
            for _ in range(m):
                try:
                    acc = exact_divide(acc, poly)
                except NotDivisible:
                    raise NotPolynomial(
                        "factored sum does not simplify to a Laurent polynomial"
                    ) from None
        return acc


def factored_rational_sum(terms) -> LaurentPolynomial:
    """Sum of (numerator, [factors]) pairs, each meaning numerator/∏ factors."""
    terms = list(terms)
    if not terms:
        raise ValueError("empty sum has no table")
    acc = FactoredDenominatorSum(terms[0][0].table)
    for numerator, factors in terms:
        acc.add(numerator, factors)
    return acc.total()
