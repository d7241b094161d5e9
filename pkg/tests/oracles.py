"""Independent reimplementations used as oracles.

Everything here computes expected values by a different route than the
package: definitional power sums for log/inverse, pairwise convolution for
products, the root-multiplicity convolution recurrence driven by the
invariant bilinear form, and brute-force graph search.  Nothing imports the
code paths under test beyond the plain Series container and validated
matrices.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations, product

from kmfactor.series import Series


# -- definitional series arithmetic ---------------------------------------------

def naive_mul(a: Series, b: Series) -> Series:
    terms = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            if sum(key) <= a.cap:
                terms[key] = terms.get(key, Fraction(0)) + ca * cb
    return Series(a.nvars, a.cap, terms)


def naive_log1(a: Series) -> Series:
    u = a - Series.one(a.nvars, a.cap)
    out = Series.zero(a.nvars, a.cap)
    power = Series.one(a.nvars, a.cap)
    for k in range(1, a.cap + 1):
        power = naive_mul(power, u)
        out = out + power.scale(Fraction((-1) ** (k + 1), k))
    return out


def naive_invert(a: Series) -> Series:
    v = Series.one(a.nvars, a.cap) - a
    out = Series.one(a.nvars, a.cap)
    power = Series.one(a.nvars, a.cap)
    for _ in range(a.cap):
        power = naive_mul(power, v)
        out = out + power
    return out


def geometric_log(nvars: int, cap: int, roots: dict[tuple[int, ...], int]) -> Series:
    """-log of prod (1 - x^root)^mult as the explicit double sum."""
    terms = {}
    for root, mult in roots.items():
        d = sum(root)
        for k in range(1, cap // d + 1):
            exp = tuple(k * r for r in root)
            terms[exp] = terms.get(exp, Fraction(0)) + Fraction(mult, k)
    return Series(nvars, cap, terms)


# -- root multiplicities from the bilinear-form recurrence ------------------------

def convolution_multiplicities(cm, cap: int) -> dict[tuple[int, ...], int]:
    """Root multiplicities via the classical convolution recurrence.

    Uses the symmetrized bilinear form (a_i, a_j) = d_i * entry(i, j) and
    the shift pairing (2rho, x) = sum 2 d_i x_i.  For each non-simple
    exponent in degree order,

        ((x, x) - (2rho, x)) * c_x = sum over x = b + g, b,g > 0 of
                                     (b, g) * c_b * c_g,

    where c_x collects mult(x/k)/k over all divisors.  The divisor sums are
    then stripped to recover multiplicities.  The degenerate case of a
    vanishing left factor only happens at proper multiples of real roots,
    which carry multiplicity zero.
    """
    n = cm.n
    d = cm.symmetrizer
    bil = [[d[i] * cm.rows[i][j] for j in range(n)] for i in range(n)]

    def form(x, y):
        return sum(bil[i][j] * x[i] * y[j]
                   for i in range(n) for j in range(n) if x[i] and y[j])

    def shift(x):
        return sum(2 * d[i] * x[i] for i in range(n))

    exps = sorted((e for e in product(*(range(cap + 1) for _ in range(n)))
                   if 0 < sum(e) <= cap), key=lambda e: (sum(e), e))
    c: dict[tuple[int, ...], Fraction] = {}
    mult: dict[tuple[int, ...], int] = {}

    def divisor_tail(e):
        total = Fraction(0)
        g = math.gcd(*e)
        for k in range(2, g + 1):
            if g % k:
                continue
            base = tuple(v // k for v in e)
            total += Fraction(mult.get(base, 0), k)
        return total

    for e in exps:
        if sum(e) == 1:
            c[e] = Fraction(1)
            mult[e] = 1
            continue
        rhs = Fraction(0)
        for b in product(*(range(v + 1) for v in e)):
            if not any(b) or b == e:
                continue
            cb = c.get(b)
            if not cb:
                continue
            g = tuple(x - y for x, y in zip(e, b))
            cg = c.get(g)
            if cg:
                rhs += form(b, g) * cb * cg
        denom = form(e, e) - shift(e)
        tail = divisor_tail(e)
        if denom == 0:
            assert rhs == 0, f"degenerate recurrence with nonzero data at {e}"
            value = tail  # multiples of real roots have multiplicity zero
        else:
            value = rhs / denom
        m = value - tail
        assert m.denominator == 1 and m >= 0, f"bad multiplicity {m} at {e}"
        if value:
            c[e] = value
        if m:
            mult[e] = int(m)
    return mult


# -- brute-force graph helpers -----------------------------------------------------

def brute_connected_subsets(cm, nodes) -> set[frozenset[int]]:
    """All nonempty connected subsets, by checking every subset."""
    from itertools import combinations
    nodes = tuple(nodes)
    out = set()
    for size in range(1, len(nodes) + 1):
        for sub in combinations(nodes, size):
            if _is_connected_subset(cm, set(sub)):
                out.add(frozenset(sub))
    return out


def _is_connected_subset(cm, sub: set[int]) -> bool:
    start = next(iter(sub))
    seen = {start}
    stack = [start]
    while stack:
        i = stack.pop()
        for j in sub:
            if j not in seen and cm.entry(i, j) != 0:
                seen.add(j)
                stack.append(j)
    return seen == sub


def brute_automorphisms(cm) -> list[tuple[int, ...]]:
    """All node permutations preserving the matrix (feasible for small n)."""
    n = cm.n
    out = []
    for perm in permutations(range(1, n + 1)):
        if all(cm.entry(perm[i - 1], perm[j - 1]) == cm.entry(i, j)
               for i in range(1, n + 1) for j in range(1, n + 1)):
            out.append(perm)
    return out
