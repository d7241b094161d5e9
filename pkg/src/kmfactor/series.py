"""Sparse truncated multivariate power series over exact rationals.

A :class:`Series` lives in Q[[x_1, ..., x_nvars]] truncated at a fixed total
degree ``cap``: it stores finitely many terms ``exponent -> Fraction`` where
every exponent is a tuple of nonnegative integers with total degree at most
``cap``.  Zero coefficients are never stored, so equality is exact term-map
equality.  The intended reading throughout the package is x_i = exp(-a_i)
for the i-th simple root a_i, which is why only nonnegative exponents exist.

All operations are pure, truncate at the common cap, and iterate terms in a
fixed order (ascending total degree, then lexicographic on coordinates), so
results are deterministic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import CapMismatch, ConstantTermNotOne, DomainError

Exponent = tuple[int, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def degree(exponent: Sequence[int]) -> int:
    """Total degree of an exponent vector."""
    return sum(exponent)


def support(exponent: Sequence[int]) -> tuple[int, ...]:
    """1-based positions of the nonzero coordinates."""
    return tuple(i for i, e in enumerate(exponent, start=1) if e)


def term_order(exponent: Sequence[int]) -> tuple[int, Sequence[int]]:
    """Sort key: ascending total degree, then lexicographic."""
    return (sum(exponent), tuple(exponent))


def _check_exponent(exponent, nvars: int) -> Exponent:
    exp = tuple(exponent)
    if len(exp) != nvars:
        raise DomainError(f"exponent {exp} has {len(exp)} coordinates, expected {nvars}")
    for e in exp:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise DomainError(f"exponent {exp} has a bad coordinate {e!r}")
    return exp


class Series:
    """Immutable sparse truncated series; see the module docstring."""

    __slots__ = ("nvars", "cap", "_terms")

    def __init__(self, nvars: int, cap: int,
                 terms: Mapping[Exponent, object] | Iterable[tuple[Exponent, object]] = ()):
        if nvars < 0:
            raise DomainError("nvars must be nonnegative")
        if cap < 0:
            raise DomainError("cap must be nonnegative")
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "cap", cap)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, Fraction] = {}
        for exponent, coeff in items:
            exp = _check_exponent(exponent, nvars)
            if sum(exp) > cap:
                continue  # truncation is silent by contract
            c = Fraction(coeff)
            if c:
                acc = clean.get(exp, _ZERO) + c
                if acc:
                    clean[exp] = acc
                else:
                    clean.pop(exp, None)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, cap: int) -> "Series":
        return cls(nvars, cap)

    @classmethod
    def one(cls, nvars: int, cap: int) -> "Series":
        return cls(nvars, cap, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, nvars: int, cap: int, exponent: Sequence[int], coeff=1) -> "Series":
        return cls(nvars, cap, {tuple(exponent): coeff})

    # -- inspection ------------------------------------------------------

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), _ZERO)

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, _ZERO)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def exponents(self) -> list[Exponent]:
        return sorted(self._terms, key=term_order)

    def items(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in canonical order."""
        return [(e, self._terms[e]) for e in self.exponents()]

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (self.nvars == other.nvars and self.cap == other.cap
                and self._terms == other._terms)

    def __repr__(self) -> str:
        return f"Series({self.text()!r}, nvars={self.nvars}, cap={self.cap})"

    # -- ring operations --------------------------------------------------

    def _check_compatible(self, other: "Series") -> None:
        if self.nvars != other.nvars:
            raise DomainError(f"variable counts differ: {self.nvars} vs {other.nvars}")
        if self.cap != other.cap:
            raise CapMismatch(f"caps differ: {self.cap} vs {other.cap}")

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            acc = out.get(exp, _ZERO) + c
            if acc:
                out[exp] = acc
            else:
                out.pop(exp, None)
        return self._raw(self.nvars, self.cap, out)

    def __sub__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Series":
        return self._raw(self.nvars, self.cap,
                         {e: -c for e, c in self._terms.items()})

    def scale(self, coeff) -> "Series":
        c = Fraction(coeff)
        if not c:
            return Series.zero(self.nvars, self.cap)
        return self._raw(self.nvars, self.cap,
                         {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        self._check_compatible(other)
        a = sorted(((sum(e), e, c) for e, c in self._terms.items()))
        b = sorted(((sum(e), e, c) for e, c in other._terms.items()))
        out: dict[Exponent, Fraction] = {}
        for da, ea, ca in a:
            room = self.cap - da
            for db, eb, cb in b:
                if db > room:
                    break
                key = tuple(x + y for x, y in zip(ea, eb))
                acc = out.get(key, _ZERO) + ca * cb
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return self._raw(self.nvars, self.cap, out)

    __rmul__ = __mul__

    @classmethod
    def _raw(cls, nvars: int, cap: int, terms: dict[Exponent, Fraction]) -> "Series":
        """Internal constructor for already-normalized term maps."""
        s = object.__new__(cls)
        object.__setattr__(s, "nvars", nvars)
        object.__setattr__(s, "cap", cap)
        object.__setattr__(s, "_terms", terms)
        return s

    # -- series functions ---------------------------------------------------

    def log1(self) -> "Series":
        """Logarithm of a series with constant term 1.

        Computed by the graded-derivation recurrence, which needs one
        convolution pass instead of cap-many multiplications.  When the
        input has integer coefficients the whole recurrence runs over
        integers scaled by lcm(1..cap) and is converted at the end.
        """
        if self.constant_term != _ONE:
            raise ConstantTermNotOne(f"constant term is {self.constant_term}, expected 1")
        u = {e: c for e, c in self._terms.items() if any(e)}
        if not u or self.cap == 0:
            return Series.zero(self.nvars, self.cap)
        if all(c.denominator == 1 for c in u.values()):
            terms = _log_terms_int({e: c.numerator for e, c in u.items()},
                                   self.nvars, self.cap)
        else:
            terms = _log_terms(u, self.nvars, self.cap)
        return self._raw(self.nvars, self.cap, terms)

    def invert(self) -> "Series":
        """Multiplicative inverse of a series with constant term 1."""
        if self.constant_term != _ONE:
            raise ConstantTermNotOne(f"constant term is {self.constant_term}, expected 1")
        u = [(sum(e), e, c) for e, c in self._terms.items() if any(e)]
        u.sort()
        zero = (0,) * self.nvars
        out: dict[Exponent, Fraction] = {zero: _ONE}
        for a in _reachable([e for _, e, _ in u], self.nvars, self.cap):
            if not any(a):
                continue
            acc = _ZERO
            for dg, g, cg in u:
                if dg > sum(a):
                    break
                b = _sub_exponent(a, g)
                if b is None:
                    continue
                vb = out.get(b)
                if vb:
                    acc += vb * cg
            if acc:
                out[a] = -acc
        return self._raw(self.nvars, self.cap, out)

    def fold(self, classes: Iterable[Iterable[int]]) -> "Series":
        """Collapse variables along a partition of 1..nvars.

        Coordinates are summed within each class and coefficients of
        colliding exponents add; the cap carries over unchanged because
        folding preserves total degree.  Classes are reordered by smallest
        member, and the c-th folded variable corresponds to the c-th class
        in that order.
        """
        parts = sorted((tuple(sorted(set(p))) for p in classes),
                       key=lambda p: p[0] if p else 0)
        flat = [i for p in parts for i in p]
        if sorted(flat) != list(range(1, self.nvars + 1)):
            raise DomainError(f"classes do not partition 1..{self.nvars}")
        out: dict[Exponent, Fraction] = {}
        for exp, c in self._terms.items():
            folded = tuple(sum(exp[i - 1] for i in p) for p in parts)
            acc = out.get(folded, _ZERO) + c
            if acc:
                out[folded] = acc
            else:
                out.pop(folded, None)
        return self._raw(len(parts), self.cap, out)

    # -- rendering ---------------------------------------------------------

    def text(self, var: str = "x") -> str:
        """Canonical rendering: terms in order, coefficients as p/q."""
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for exp, c in self.items():
            mono = "*".join(
                f"{var}{i}" if e == 1 else f"{var}{i}^{e}"
                for i, e in enumerate(exp, start=1) if e)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)


def _sub_exponent(a: Exponent, b: Exponent) -> Exponent | None:
    """Componentwise difference, or None if any coordinate would go negative."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def _reachable(gens: Sequence[Exponent], nvars: int, cap: int) -> list[Exponent]:
    """Degree-capped monoid closure of the generators, in canonical order.

    Every exponent of a product/log/inverse built from terms with these
    exponents lies in the closure, so recurrences only need to visit it.
    """
    zero = (0,) * nvars
    by_degree: list[list[Exponent]] = [[] for _ in range(cap + 1)]
    by_degree[0].append(zero)
    seen = {zero}
    for d in range(cap + 1):
        for a in by_degree[d]:
            for g in gens:
                nd = d + sum(g)
                if nd > cap:
                    continue
                s = tuple(x + y for x, y in zip(a, g))
                if s not in seen:
                    seen.add(s)
                    by_degree[nd].append(s)
    out: list[Exponent] = []
    for bucket in by_degree:
        out.extend(sorted(bucket))
    return out


def _log_terms(u: dict[Exponent, Fraction], nvars: int, cap: int) -> dict[Exponent, Fraction]:
    """Graded-derivation recurrence for log(1+u) over Fractions."""
    items = sorted(((sum(e), e, c) for e, c in u.items()))
    out: dict[Exponent, Fraction] = {}
    for a in _reachable([e for _, e, _ in items], nvars, cap):
        da = sum(a)
        if da == 0:
            continue
        acc = _ZERO
        for dg, g, cg in items:
            if dg > da:
                break
            b = _sub_exponent(a, g)
            if b is None:
                continue
            wb = out.get(b)
            if wb:
                acc += (da - dg) * wb * cg
        val = u.get(a, _ZERO) - acc / da
        if val:
            out[a] = val
    return out


def _log_terms_int(u: dict[Exponent, int], nvars: int, cap: int) -> dict[Exponent, Fraction]:
    """Integer fast path: coefficients of log(1+u) scaled by lcm(1..cap).

    For integer u every coefficient of log(1+u) up to degree cap has
    denominator dividing lcm(1..cap), so the scaled recurrence is exact
    integer arithmetic; the degree division is checked to be exact.
    """
    scale = math.lcm(*range(1, cap + 1))
    items = sorted(((sum(e), e, c) for e, c in u.items()))
    scaled: dict[Exponent, int] = {}
    for a in _reachable([e for _, e, _ in items], nvars, cap):
        da = sum(a)
        if da == 0:
            continue
        acc = 0
        for dg, g, cg in items:
            if dg > da:
                break
            b = _sub_exponent(a, g)
            if b is None:
                continue
            wb = scaled.get(b)
            if wb:
                acc += (da - dg) * wb * cg
        q, r = divmod(acc, da)
        if r:
            raise ArithmeticError("log recurrence lost exactness on integer input")
        val = scale * u.get(a, 0) - q
        if val:
            scaled[a] = val
    return {a: Fraction(v, scale) for a, v in scaled.items()}
