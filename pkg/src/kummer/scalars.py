"""Exact scalar arithmetic for the coefficient field of the algebra.

Two nested rings, both with exact rational coefficients and no floating
point anywhere:

* ``Cyclotomic``: an element of Q(rho), where rho is a fixed primitive
  p-th root of unity.  Stored as a vector of ``Fraction`` values of length
  p - 1, reduced modulo the p-th cyclotomic polynomial (the relation
  1 + rho + ... + rho^(p-1) = 0 eliminates the top power).

* ``Laurent``: a sparse Laurent polynomial over Q(rho) in the 2n central
  parameters a1, b1, ..., an, bn, keyed by integer exponent vectors that
  may be negative.  This is deliberately a Laurent *ring*, not its
  fraction field: every computation in the package stays inside it, and
  callers that need denominators cleared rescale by monomial units.

Slot convention used throughout the package: index 2*(k-1) is the a_k
exponent and index 2*(k-1) + 1 is the b_k exponent.
"""

from __future__ import annotations

from fractions import Fraction


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as a rational scalar")


_ZERO = Fraction(0)


class Cyclotomic:
    """An element of Q(rho) for a primitive p-th root of unity rho.

    The coefficient vector ``coeffs`` has length p - 1 and represents
    coeffs[0] + coeffs[1]*rho + ... + coeffs[p-2]*rho^(p-2).  For p = 2
    this degenerates to Q itself (rho = -1).
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        # Trusted constructor: coeffs must already be canonical.
        self.p = p
        self.coeffs = tuple(coeffs)

    # -- construction -------------------------------------------------

    @classmethod
    def from_powers(cls, p: int, pairs) -> "Cyclotomic":
        """Build from (power, rational) pairs, reducing mod the relation.

        Powers are first wrapped mod p (rho^p = 1); a residual rho^(p-1)
        is then rewritten as -(1 + rho + ... + rho^(p-2)).
        """
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        vec = [_ZERO] * (p - 1)
        top = _ZERO
        for power, value in pairs:
            value = _as_fraction(value)
            e = power % p
            if e == p - 1:
                top += value
            else:
                vec[e] += value
        if top:
            vec = [c - top for c in vec]
        return cls(p, vec)

    @classmethod
    def zero(cls, p: int) -> "Cyclotomic":
        return cls.from_powers(p, ())

    @classmethod
    def one(cls, p: int) -> "Cyclotomic":
        return cls.from_powers(p, ((0, 1),))

    @classmethod
    def rational(cls, p: int, value) -> "Cyclotomic":
        return cls.from_powers(p, ((0, _as_fraction(value)),))

    @classmethod
    def rho(cls, p: int, power: int = 1) -> "Cyclotomic":
        return cls.from_powers(p, ((power, 1),))

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- ring operations -----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.p != self.p:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.p, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        pairs = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    pairs.append((i + j, a * b))
        return Cyclotomic.from_powers(self.p, pairs)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.one(self.p)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scaled(self, value) -> "Cyclotomic":
        value = _as_fraction(value)
        return Cyclotomic(self.p, tuple(c * value for c in self.coeffs))

    def conjugate(self, t: int) -> "Cyclotomic":
        """Apply the field automorphism rho -> rho^t (t prime to p)."""
        if t % self.p == 0:
            raise ValueError("conjugation exponent must be prime to p")
        return Cyclotomic.from_powers(self.p, ((i * t, c) for i, c in enumerate(self.coeffs) if c))

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the product of Galois conjugates."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(rho)")
        prod = Cyclotomic.one(self.p)
        for t in range(2, self.p):
            prod = prod * self.conjugate(t)
        norm = self * prod
        # The full conjugate product is Galois-invariant, hence rational.
        value = norm.rational_value()
        if not value:
            raise ZeroDivisionError("inverse of zero in Q(rho)")
        return prod.scaled(Fraction(1) / value)

    # -- comparisons / hashing ------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"Cyclotomic(p={self.p}, {list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                power = "rho" if i == 1 else f"rho^{i}"
                if c == 1:
                    parts.append(power)
                elif c == -1:
                    parts.append(f"-{power}")
                else:
                    parts.append(f"{c}*{power}")
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out


class Laurent:
    """Sparse Laurent polynomial over Q(rho) in the 2n parameters.

    ``terms`` maps exponent tuples of length 2n (entries in Z, negative
    allowed) to nonzero ``Cyclotomic`` coefficients.  The zero polynomial
    is the empty map.  Keys never carry zero coefficients.
    """

    __slots__ = ("p", "n", "terms")

    def __init__(self, p: int, n: int, terms: dict):
        self.p = p
        self.n = n
        self.terms = terms

    # -- construction ---------------------------------------------------

    @classmethod
    def zero(cls, p: int, n: int) -> "Laurent":
        return cls(p, n, {})

    @classmethod
    def constant(cls, p: int, n: int, value) -> "Laurent":
        if not isinstance(value, Cyclotomic):
            value = Cyclotomic.rational(p, value)
        elif value.p != p:
            raise ValueError("mixed cyclotomic orders")
        if value.is_zero():
            return cls.zero(p, n)
        return cls(p, n, {(0,) * (2 * n): value})

    @classmethod
    def one(cls, p: int, n: int) -> "Laurent":
        return cls.constant(p, n, 1)

    @classmethod
    def monomial(cls, p: int, n: int, exponents, coeff=1) -> "Laurent":
        exponents = tuple(exponents)
        if len(exponents) != 2 * n:
            raise ValueError(f"expected {2 * n} exponents, got {len(exponents)}")
        if not isinstance(coeff, Cyclotomic):
            coeff = Cyclotomic.rational(p, coeff)
        if coeff.is_zero():
            return cls.zero(p, n)
        return cls(p, n, {exponents: coeff})

    @classmethod
    def variable(cls, p: int, n: int, slot: int, power: int = 1) -> "Laurent":
        """The single parameter at ``slot`` (see module docstring), to ``power``."""
        if not 0 <= slot < 2 * n:
            raise ValueError(f"slot {slot} out of range for n={n}")
        exps = [0] * (2 * n)
        exps[slot] = power
        return cls.monomial(p, n, exps)

    # -- predicates -------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        if not self.terms:
            return True
        return set(self.terms) == {(0,) * (2 * self.n)}

    def constant_value(self) -> Cyclotomic:
        if not self.terms:
            return Cyclotomic.zero(self.p)
        if not self.is_constant():
            raise ValueError("Laurent coefficient is not constant")
        return self.terms[(0,) * (2 * self.n)]

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "Laurent"):
        if self.p != other.p or self.n != other.n:
            raise ValueError("mixed Laurent rings")

    def _coerce(self, other):
        if isinstance(other, Laurent):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return Laurent.constant(self.p, self.n, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
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
        return Laurent(self.p, self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent(self.p, self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scaled(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                acc = out.get(exps)
                if acc is not None:
                    c = acc + c
                if c:
                    out[exps] = c
                elif acc is not None:
                    del out[exps]
        return Laurent(self.p, self.n, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scaled(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative powers of Laurent coefficients are not defined")
        result = Laurent.one(self.p, self.n)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scaled(self, value) -> "Laurent":
        """Multiply by a scalar from Q(rho)."""
        if not isinstance(value, Cyclotomic):
            value = Cyclotomic.rational(self.p, value)
        elif value.p != self.p:
            raise ValueError("mixed cyclotomic orders")
        if value.is_zero():
            return Laurent.zero(self.p, self.n)
        return Laurent(self.p, self.n, {e: c * value for e, c in self.terms.items()})

    def shifted(self, delta) -> "Laurent":
        """Multiply by the monomial with exponent vector ``delta``."""
        delta = tuple(delta)
        if not any(delta):
            return self
        return Laurent(
            self.p,
            self.n,
            {tuple(x + d for x, d in zip(e, delta)): c for e, c in self.terms.items()},
        )

    def min_exponents(self):
        """Componentwise minimum exponent over all terms (zero vector if empty)."""
        if not self.terms:
            return (0,) * (2 * self.n)
        mins = [min(e[i] for e in self.terms) for i in range(2 * self.n)]
        return tuple(mins)

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.p, self.n, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Laurent(p={self.p}, n={self.n}, {self.terms})"

    def __str__(self):
        # Canonical grammar rendering lives in kummer.parsing; this is a
        # debugging form only.
        from .parsing import render_scalar

        return render_scalar(self)


def alpha(p: int, n: int, k: int, power: int = 1) -> Laurent:
    """The central parameter a_k = x_k^p as a Laurent monomial."""
    if not 1 <= k <= n:
        raise ValueError(f"factor index {k} out of range for n={n}")
    return Laurent.variable(p, n, 2 * (k - 1), power)


def beta(p: int, n: int, k: int, power: int = 1) -> Laurent:
    """The central parameter b_k = y_k^p as a Laurent monomial."""
    if not 1 <= k <= n:
        raise ValueError(f"factor index {k} out of range for n={n}")
    return Laurent.variable(p, n, 2 * (k - 1) + 1, power)
