"""Core arithmetic in a tensor product of cyclic algebras of prime degree.

The algebra has n commuting factors; factor k is generated by x_k, y_k
subject to

    x_k^p = a_k,    y_k^p = b_k,    y_k x_k = rho x_k y_k,

with rho a fixed primitive p-th root of unity and a_k, b_k central
parameters (the coefficient field is the rational function field in all
of them; coefficients are represented exactly in the Laurent ring, see
``kummer.scalars``).

Elements are stored in normal form: a sparse map from reduced exponent
vectors to Laurent coefficients.  An exponent vector is a tuple of length
2n with entries in 0..p-1, listing the generators in the fixed order
x1, y1, x2, y2, ...; the vector (a1, b1, a2, b2, ...) denotes the
monomial x1^a1 y1^b1 x2^a2 y2^b2 ...
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .scalars import Cyclotomic, Laurent, alpha, beta, is_prime
from . import parsing

_RHO_CACHE: dict = {}


def _rho(p: int, e: int) -> Cyclotomic:
    key = (p, e % p)
    hit = _RHO_CACHE.get(key)
    if hit is None:
        hit = _RHO_CACHE[key] = Cyclotomic.rho(p, e)
    return hit


@dataclass(frozen=True)
class AlgebraSpec:
    """Shape of the algebra: degree p (prime) and number of factors n."""

    p: int
    n: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")

    @property
    def dimension(self) -> int:
        return self.p ** (2 * self.n)

    # -- element factories ---------------------------------------------

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return self.scalar(1)

    def scalar(self, value) -> "AlgebraElement":
        if not isinstance(value, Laurent):
            value = Laurent.constant(self.p, self.n, value)
        elif value.p != self.p or value.n != self.n:
            raise ValueError("scalar from a different Laurent ring")
        if not value:
            return self.zero()
        return AlgebraElement(self, {(0,) * (2 * self.n): value})

    def monomial(self, exponents, coeff=1) -> "AlgebraElement":
        exponents = tuple(exponents)
        if len(exponents) != 2 * self.n:
            raise ValueError(
                f"expected {2 * self.n} exponents, got {len(exponents)}"
            )
        if not all(isinstance(e, int) and 0 <= e < self.p for e in exponents):
            raise ValueError(f"exponents must lie in 0..{self.p - 1}: {exponents}")
        if not isinstance(coeff, Laurent):
            coeff = Laurent.constant(self.p, self.n, coeff)
        if not coeff:
            return self.zero()
        return AlgebraElement(self, {exponents: coeff})

    def x(self, k: int) -> "AlgebraElement":
        if not 1 <= k <= self.n:
            raise ValueError(f"factor index {k} out of range for n={self.n}")
        exps = [0] * (2 * self.n)
        exps[2 * (k - 1)] = 1
        return self.monomial(exps)

    def y(self, k: int) -> "AlgebraElement":
        if not 1 <= k <= self.n:
            raise ValueError(f"factor index {k} out of range for n={self.n}")
        exps = [0] * (2 * self.n)
        exps[2 * (k - 1) + 1] = 1
        return self.monomial(exps)

    def alpha(self, k: int, power: int = 1) -> Laurent:
        return alpha(self.p, self.n, k, power)

    def beta(self, k: int, power: int = 1) -> Laurent:
        return beta(self.p, self.n, k, power)

    def rho(self, power: int = 1) -> Cyclotomic:
        return Cyclotomic.rho(self.p, power)

    def parse_scalar(self, text: str) -> Laurent:
        return parsing.parse_scalar(text, self.p, self.n)

    def monomial_classes(self):
        """All p^(2n) reduced exponent vectors, in lexicographic order."""
        return itertools.product(range(self.p), repeat=2 * self.n)

    def identity_class(self) -> tuple:
        return (0,) * (2 * self.n)


def _mul_exps(p: int, n: int, u: tuple, v: tuple):
    """Normal-order the product of two exponent vectors.

    Returns (rho_power, carry, w) with u * v = rho^rho_power * carry * w,
    where carry is the alpha/beta exponent vector produced by wrapping
    x_k^p -> a_k and y_k^p -> b_k, and w is the reduced exponent vector.
    Only y_k letters of u moving past x_k letters of v pick up phases.
    """
    rho_power = 0
    w = []
    carry = []
    has_carry = False
    for t in range(n):
        i = 2 * t
        a, b = u[i], u[i + 1]
        c, d = v[i], v[i + 1]
        rho_power += b * c
        sa = a + c
        sb = b + d
        qa, ra = divmod(sa, p)
        qb, rb = divmod(sb, p)
        w.append(ra)
        w.append(rb)
        carry.append(qa)
        carry.append(qb)
        if qa or qb:
            has_carry = True
    return rho_power % p, (tuple(carry) if has_carry else None), tuple(w)


def commutation_exponent(spec: AlgebraSpec, u, v) -> int:
    """The e in 0..p-1 with u * v = rho^e * v * u for monomial classes u, v."""
    u = tuple(u)
    v = tuple(v)
    total = 0
    for t in range(spec.n):
        i = 2 * t
        total += u[i + 1] * v[i] - u[i] * v[i + 1]
    return total % spec.p


def mul_monomials(spec: AlgebraSpec, u, v):
    """Product of two monomial classes: (phase, carry, w).

    phase is a power of rho in Q(rho), carry a Laurent monomial in the
    central parameters, w the reduced exponent vector, so that
    u * v = phase * carry * w.
    """
    u = tuple(u)
    v = tuple(v)
    rho_power, carry, w = _mul_exps(spec.p, spec.n, u, v)
    phase = _rho(spec.p, rho_power)
    carry_laurent = (
        Laurent.one(spec.p, spec.n)
        if carry is None
        else Laurent.monomial(spec.p, spec.n, carry)
    )
    return phase, carry_laurent, w


def monomial_str(exponents) -> str:
    """Human form of a reduced exponent vector, e.g. 'x1^2 y1'."""
    parts = []
    for slot, e in enumerate(exponents):
        if not e:
            continue
        k = slot // 2 + 1
        name = f"x{k}" if slot % 2 == 0 else f"y{k}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts) if parts else "1"


class AlgebraElement:
    """A sparse element of the algebra in normal form."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: AlgebraSpec, terms: dict):
        # Trusted constructor: terms maps reduced exponent vectors to
        # nonzero Laurent coefficients.  Use AlgebraSpec factories or the
        # arithmetic operators to build elements safely.
        self.spec = spec
        self.terms = terms

    # -- predicates -----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_scalar(self) -> bool:
        return self.scalar_value() is not None

    def scalar_value(self):
        """The Laurent coefficient if the element lies in the field, else None."""
        if not self.terms:
            return Laurent.zero(self.spec.p, self.spec.n)
        identity = self.spec.identity_class()
        if set(self.terms) == {identity}:
            return self.terms[identity]
        return None

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "AlgebraElement"):
        if self.spec != other.spec:
            raise ValueError("elements from different algebras")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            acc = out.get(exps)
            if acc is None:
                out[exps] = c
            else:
                s = acc + c
                if s:
                    out[exps] = s
                else:
                    del out[exps]
        return AlgebraElement(self.spec, out)

    def __neg__(self):
        return AlgebraElement(self.spec, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic, Laurent)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        p, n = self.spec.p, self.spec.n
        out: dict = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                rho_power, carry, w = _mul_exps(p, n, u, v)
                c = cu * cv
                if carry is not None:
                    c = c.shifted(carry)
                if rho_power:
                    c = c.scaled(_rho(p, rho_power))
                acc = out.get(w)
                if acc is not None:
                    c = acc + c
                if c:
                    out[w] = c
                elif acc is not None:
                    del out[w]
        return AlgebraElement(self.spec, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic, Laurent)):
            return self.scale(other)
        return NotImplemented

    def scale(self, value) -> "AlgebraElement":
        """Multiply by a central scalar (int, rational, Q(rho), or Laurent)."""
        if not isinstance(value, Laurent):
            value = Laurent.constant(self.spec.p, self.spec.n, value)
        if not value:
            return self.spec.zero()
        out = {}
        for exps, c in self.terms.items():
            s = c * value
            if s:
                out[exps] = s
        return AlgebraElement(self.spec, out)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative powers of algebra elements are not defined")
        result = self.spec.one()
        for _ in range(exponent):
            result = result * self
        return result

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic, Laurent)):
            other = self.spec.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.spec != other.spec:
            return False
        return self.terms == other.terms

    __hash__ = None  # mutable-by-convention container; not hashable

    def __repr__(self):
        return f"AlgebraElement({self.spec.p}, {self.spec.n}, {self.terms})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms):
            coeff = self.terms[exps]
            mono = monomial_str(exps)
            rendered = parsing.render_scalar(coeff)
            if mono == "1":
                parts.append(rendered if _atomic(rendered) else f"({rendered})")
            elif rendered == "1":
                parts.append(mono)
            elif rendered == "-1":
                parts.append(f"-{mono}")
            elif _atomic(rendered):
                parts.append(f"{rendered}*{mono}")
            else:
                parts.append(f"({rendered})*{mono}")
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out


def _atomic(rendered: str) -> bool:
    body = rendered[1:] if rendered.startswith("-") else rendered
    return "+" not in body and "-" not in body and " " not in body


def power(element: AlgebraElement, exponent: int) -> AlgebraElement:
    """Repeated multiplication (exponent >= 0)."""
    return element ** exponent


def star_product(elements, degrees) -> AlgebraElement:
    """Sum of all words with elements[i] appearing degrees[i] times.

    The sum runs over distinct arrangements of the multiset, so repeated
    factors contribute each distinct word once (for example degrees (2, 1)
    on (u, v) give u u v + u v u + v u u).
    """
    elements = list(elements)
    degrees = list(degrees)
    if len(elements) != len(degrees):
        raise ValueError("elements and degrees must have the same length")
    if not elements:
        raise ValueError("empty star product")
    for d in degrees:
        if not isinstance(d, int) or d < 0:
            raise ValueError(f"degrees must be nonnegative integers: {degrees}")
    total_degree = sum(degrees)
    if total_degree < 1:
        raise ValueError("star product needs total degree at least 1")
    spec = elements[0].spec
    for e in elements[1:]:
        if e.spec != spec:
            raise ValueError("elements from different algebras")
    word = tuple(
        index for index, d in enumerate(degrees) for _ in range(d)
    )
    total = spec.zero()
    for arrangement in sorted(set(itertools.permutations(word))):
        product = elements[arrangement[0]]
        for index in arrangement[1:]:
            product = product * elements[index]
        total = total + product
    return total


def is_kummer_element(element: AlgebraElement) -> bool:
    """True iff element^p is scalar but no lower positive power is."""
    p = element.spec.p
    acc = element.spec.one()
    for _ in range(p - 1):
        acc = acc * element
        if acc.is_scalar():
            return False
    return (acc * element).is_scalar()


def conjugation_exponent(u: AlgebraElement, v: AlgebraElement):
    """The e with u * v = rho^e * v * u, or None if no power of rho works."""
    u._check(v)
    p = u.spec.p
    if u.is_monomial() and v.is_monomial():
        (ue,) = u.terms
        (ve,) = v.terms
        return commutation_exponent(u.spec, ue, ve)
    uv = u * v
    vu = v * u
    for e in range(p):
        if uv == vu.scale(_rho(p, e)):
            return e
    return None


def cyclic_norm(spec: AlgebraSpec, coefficients, k: int) -> Laurent:
    """Norm of f(x_k) = sum_j coefficients[j] x_k^j from F[x_k] down to F.

    Computed as the product of the p conjugates f(rho^i x_k); the result
    is a polynomial in a_k (and whatever parameters the coefficients
    carry) satisfying (f(x_k) y_k)^p = cyclic_norm(f) * b_k.
    """
    coefficients = list(coefficients)
    if len(coefficients) != spec.p:
        raise ValueError(f"expected {spec.p} coefficients, got {len(coefficients)}")
    if not 1 <= k <= spec.n:
        raise ValueError(f"factor index {k} out of range for n={spec.n}")
    for c in coefficients:
        if not isinstance(c, Laurent):
            raise ValueError("coefficients must be Laurent scalars")
    slot = 2 * (k - 1)
    product = spec.one()
    for i in range(spec.p):
        conjugate = spec.zero()
        for j, c in enumerate(coefficients):
            if not c:
                continue
            exps = [0] * (2 * spec.n)
            exps[slot] = j
            conjugate = conjugate + spec.monomial(exps, c.scaled(_rho(spec.p, i * j)))
        product = product * conjugate
    value = product.scalar_value()
    if value is None:
        raise AssertionError("cyclic norm failed to land in the field")
    return value
