"""Exact scalar arithmetic: multivariate rational functions over Q.

A parameter space is a fixed, ordered tuple of names.  MultiPoly is a sparse
polynomial over such a space with Fraction coefficients; Coefficient is a
quotient of two MultiPolys.  Equality of Coefficients is decided by
cross-multiplication, so no canonical form (and no multivariate GCD) is ever
required for correctness.  Light normalization (content stripping, univariate
GCD when only one name is involved) keeps intermediate values small.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Mapping

Space = tuple  # ordered tuple of parameter/variable names

RATIONALS: Space = ()  # the empty space: plain rational numbers


class PoleError(ZeroDivisionError):
    """A substitution or inversion hit a vanishing denominator."""


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


class MultiPoly:
    """Sparse multivariate polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("names", "terms")

    def __init__(self, names: Space, terms: dict):
        self.names = names
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(names: Space, value) -> "MultiPoly":
        q = _as_fraction(value)
        if q == 0:
            return MultiPoly(names, {})
        return MultiPoly(names, {(0,) * len(names): q})

    @staticmethod
    def var(names: Space, name: str) -> "MultiPoly":
        if name not in names:
            raise KeyError(f"unknown parameter {name!r} (space has {names})")
        exps = tuple(1 if n == name else 0 for n in names)
        return MultiPoly(names, {exps: Fraction(1)})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return next(iter(self.terms.values()))

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def used_names(self) -> set:
        used = set()
        for e in self.terms:
            for n, k in zip(self.names, e):
                if k:
                    used.add(n)
        return used

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.names != other.names:
            raise ValueError(
                f"parameter space mismatch: {self.names} vs {other.names}")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MultiPoly(self.names, terms)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return MultiPoly(self.names, terms)

    def scaled(self, q) -> "MultiPoly":
        q = _as_fraction(q)
        if q == 0:
            return MultiPoly(self.names, {})
        return MultiPoly(self.names, {e: c * q for e, c in self.terms.items()})

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.const(self.names, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    __hash__ = None

    # -- structural maps ---------------------------------------------------

    def substitute(self, bindings: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Simultaneous substitution name -> MultiPoly (same space)."""
        if not bindings:
            return self
        base = {}
        for n in self.names:
            base[n] = bindings.get(n)
        out = MultiPoly.const(self.names, 0)
        for e, c in self.terms.items():
            term = MultiPoly.const(self.names, c)
            for n, k in zip(self.names, e):
                if not k:
                    continue
                b = base[n]
                if b is None:
                    b = MultiPoly.var(self.names, n)
                term = term * b ** k
            out = out + term
        return out

    def permute_names(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Relabel parameters by a permutation of the space's names."""
        if not mapping:
            return self
        pos = {n: i for i, n in enumerate(self.names)}
        perm = []
        for i, n in enumerate(self.names):
            target = mapping.get(n, n)
            if target not in pos:
                raise KeyError(f"unknown parameter {target!r}")
            perm.append(pos[target])
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * len(e)
            for i, k in enumerate(e):
                ne[perm[i]] = k
            terms[tuple(ne)] = c
        return MultiPoly(self.names, terms)

    def extend(self, names: Space) -> "MultiPoly":
        """Embed into a larger space containing every current name."""
        pos = {n: i for i, n in enumerate(names)}
        for n in self.names:
            if n not in pos:
                raise KeyError(f"target space is missing {n!r}")
        width = len(names)
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * width
            for n, k in zip(self.names, e):
                ne[pos[n]] = k
            terms[tuple(ne)] = c
        return MultiPoly(names, terms)

    # -- ordering and rendering -------------------------------------------

    def sorted_terms(self):
        """Terms ordered degree-descending, then exponent-lex ascending."""
        return sorted(self.terms.items(), key=lambda ec: (-sum(ec[0]), ec[0]))

    def leading_coeff(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.sorted_terms()[0][1]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for n, k in zip(self.names, e):
                if k == 0:
                    continue
                factors.append(n if k == 1 else f"{n}^{k}")
            mono = "*".join(factors)
            if not mono:
                body = _frac_str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{_frac_str(abs(c))}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f"{sign}{body}"
        return out

    def __repr__(self) -> str:
        return f"<MultiPoly {self}>"


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _scale_to_primitive(num: MultiPoly, den: MultiPoly):
    """Scale num/den by a common rational so coefficients are integral and
    jointly primitive, with the denominator's leading coefficient positive."""
    coeffs = list(num.terms.values()) + list(den.terms.values())
    if not coeffs:
        return num, den
    den_lcm = 1
    for c in coeffs:
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    num_gcd = 0
    for c in coeffs:
        num_gcd = gcd(num_gcd, abs(c.numerator))
    factor = Fraction(den_lcm, num_gcd or 1)
    if den.leading_coeff() * factor < 0:
        factor = -factor
    return num.scaled(factor), den.scaled(factor)


def _univar_profile(*polys: MultiPoly):
    """If the polys involve at most one name between them, return its index
    (or -1 for all-constant); otherwise None."""
    used = set()
    for p in polys:
        used |= p.used_names()
        if len(used) > 1:
            return None
    if not used:
        return -1
    name = used.pop()
    return polys[0].names.index(name)


def _to_univar(p: MultiPoly, idx: int) -> list:
    coeffs: list = []
    for e, c in p.terms.items():
        k = e[idx]
        if k >= len(coeffs):
            coeffs.extend([Fraction(0)] * (k + 1 - len(coeffs)))
        coeffs[k] += c
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _from_univar(coeffs: list, names: Space, idx: int) -> MultiPoly:
    terms = {}
    zero = [0] * len(names)
    for k, c in enumerate(coeffs):
        if c:
            e = list(zero)
            e[idx] = k
            terms[tuple(e)] = c
    return MultiPoly(names, terms)


def _univar_divmod(a: list, b: list):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        if c:
            q[i] = c
            for j, bc in enumerate(b):
                a[i + j] -= c * bc
    while a and not a[-1]:
        a.pop()
    return q, a


def _univar_gcd(a: list, b: list) -> list:
    while b:
        _, r = _univar_divmod(a, b)
        a, b = b, r
    if a:
        inv = 1 / a[-1]
        a = [c * inv for c in a]
    return a


class Coefficient:
    """Element of the field of rational functions over a parameter space."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly):
        if den.is_zero():
            raise PoleError("zero denominator in Coefficient")
        num._check(den)
        self.num, self.den = _normalize(num, den)

    @property
    def names(self) -> Space:
        return self.num.names

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(names: Space, value) -> "Coefficient":
        return Coefficient(MultiPoly.const(names, value),
                           MultiPoly.const(names, 1))

    @staticmethod
    def param(names: Space, name: str) -> "Coefficient":
        return Coefficient(MultiPoly.var(names, name),
                           MultiPoly.const(names, 1))

    @staticmethod
    def from_poly(p: MultiPoly) -> "Coefficient":
        return Coefficient(p, MultiPoly.const(p.names, 1))

    def _coerce(self, other) -> "Coefficient":
        if isinstance(other, Coefficient):
            return other
        if isinstance(other, (int, Fraction)):
            return Coefficient.const(self.names, other)
        return NotImplemented

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        num = self.num * other.den + other.num * self.den
        return Coefficient(num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Coefficient(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Coefficient(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "Coefficient":
        if self.num.is_zero():
            raise PoleError("inverse of the zero coefficient")
        return Coefficient(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # cross-multiplication: a/b = c/d  iff  a*d - c*b = 0
        return (self.num * other.den - other.num * self.den).is_zero()

    __hash__ = None

    def is_rational(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def as_fraction(self) -> Fraction:
        return self.num.constant_value() / self.den.constant_value()

    # -- structural maps ---------------------------------------------------

    def substitute(self, bindings: Mapping[str, "Coefficient"]) -> "Coefficient":
        """Simultaneous substitution; raises PoleError if the denominator
        vanishes under the binding."""
        num = _eval_poly(self.num, bindings)
        den = _eval_poly(self.den, bindings)
        if den.is_zero():
            raise PoleError("denominator vanishes under substitution")
        return num / den

    def conjugate(self, spec: "ConjugationSpec") -> "Coefficient":
        return Coefficient(self.num.permute_names(spec.mapping),
                           self.den.permute_names(spec.mapping))

    def extend(self, names: Space) -> "Coefficient":
        return Coefficient(self.num.extend(names), self.den.extend(names))

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        num, den = self.num, self.den
        if den.is_constant():
            c = den.constant_value()
            scaled = num.scaled(Fraction(1) / c)
            return str(scaled)
        ns = str(num)
        ds = str(den)
        if len(num.terms) > 1 or ns.startswith("-"):
            ns = f"({ns})"
        if len(den.terms) > 1 or "*" in ds or "^" in ds or "/" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"<Coefficient {self}>"


def _eval_poly(p: MultiPoly, bindings: Mapping[str, "Coefficient"]) -> "Coefficient":
    """Evaluate a MultiPoly with some names bound to Coefficients."""
    out = Coefficient.const(p.names, 0)
    for e, c in p.terms.items():
        term = Coefficient.const(p.names, c)
        for n, k in zip(p.names, e):
            if not k:
                continue
            base = bindings.get(n)
            if base is None:
                base = Coefficient.param(p.names, n)
            for _ in range(k):
                term = term * base
        out = out + term
    return out


def _normalize(num: MultiPoly, den: MultiPoly):
    """Cheap exact simplification: content scaling, constant denominators,
    univariate GCD when only one parameter is involved."""
    if num.is_zero():
        return num, MultiPoly.const(num.names, 1)
    idx = _univar_profile(num, den)
    if idx == -1:
        c = den.constant_value()
        return num.scaled(1 / c), MultiPoly.const(num.names, 1)
    if idx is not None:
        a = _to_univar(num, idx)
        b = _to_univar(den, idx)
        g = _univar_gcd(a, b)
        if len(g) > 1:
            a, _ = _univar_divmod(a, g)
            b, _ = _univar_divmod(b, g)
        num = _from_univar(a, num.names, idx)
        den = _from_univar(b, num.names, idx)
    return _scale_to_primitive(num, den)


class ConjugationSpec:
    """Self-inverse permutation of parameter names (formal conjugation).

    Parameters absent from the mapping are fixed; rational constants are
    always fixed.
    """

    __slots__ = ("mapping",)

    def __init__(self, mapping: Mapping[str, str] = ()):
        m = dict(mapping) if mapping else {}
        for k, v in m.items():
            if m.get(v, v) != k:
                raise ValueError(
                    f"conjugation is not self-inverse at {k!r} -> {v!r}")
        self.mapping = m

    def __call__(self, name: str) -> str:
        return self.mapping.get(name, name)

    def __eq__(self, other):
        if not isinstance(other, ConjugationSpec):
            return NotImplemented
        return self.mapping == other.mapping

    __hash__ = None

    def __repr__(self):
        if not self.mapping:
            return "<ConjugationSpec identity>"
        pairs = sorted((k, v) for k, v in self.mapping.items() if k <= v)
        return f"<ConjugationSpec {pairs}>"


IDENTITY_CONJUGATION = ConjugationSpec()
