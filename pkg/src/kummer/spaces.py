"""Kummer subspaces: the star-product criterion and monomialization.

A subspace V of the algebra is Kummer when every nonzero element z of V
satisfies z^p in F and z^k not in F for 0 < k < p.  Expanding (sum c_i
v_i)^p by the multinomial identity over a basis v_1..v_m reduces this to
finitely many conditions: V is Kummer iff every star product of basis
vectors with total degree p is scalar.

Monomialization turns a Kummer basis with Laurent-polynomial coefficients
into a basis of monomial classes: lift each vector to the free polynomial
ring by substituting a_k = x_k^p, b_k = y_k^p, then eliminate shared
leading-monomial classes by cross-multiplication.  The leading classes of
the resulting vectors are pairwise distinct and still span a Kummer space
of the same dimension; the output is always re-verified before returning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement, AlgebraSpec, star_product
from .scalars import Cyclotomic, Laurent


class MonomializationError(RuntimeError):
    """Raised when monomialization cannot produce a verified monomial basis."""


@dataclass
class KummerVerdict:
    """Outcome of a Kummer-space check.

    ``witness`` is the lexicographically least failing degree tuple when
    the verdict is negative, and ``star`` the offending (nonscalar) star
    product.
    """

    ok: bool
    witness: tuple | None = None
    star: AlgebraElement | None = None

    def __bool__(self) -> bool:
        return self.ok


def degree_tuples(length: int, total: int):
    """All tuples of nonnegative ints of the given length summing to total,
    in lexicographic order."""
    if length == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in degree_tuples(length - 1, total - first):
            yield (first,) + rest


# -- linear algebra over the Laurent ring ----------------------------------


def _laurent_rank(rows, p: int, n: int, drop_columns=()) -> int:
    """Rank of a matrix given as dicts column->Laurent, by fraction-free
    (cross-multiplication) elimination.  No division ever happens, which is
    valid for rank purposes because the Laurent ring has no zero divisors."""
    drop = set(drop_columns)
    columns = sorted({c for row in rows for c in row} - drop)
    matrix = [[row.get(c, Laurent.zero(p, n)) for c in columns] for row in rows]
    rank = 0
    height = len(matrix)
    for col in range(len(columns)):
        pivot_row = None
        for i in range(rank, height):
            if matrix[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        for i in range(rank + 1, height):
            entry = matrix[i][col]
            if not entry:
                continue
            matrix[i] = [
                pivot * matrix[i][j] - entry * matrix[rank][j]
                for j in range(len(columns))
            ]
        rank += 1
        if rank == height:
            break
    return rank


class SpaceBasis:
    """An ordered basis of a subspace, validated on construction.

    Invariants checked: all vectors live in the same algebra, none is zero
    or scalar, the vectors are linearly independent over the field, and
    the span contains no scalars (the identity monomial class cannot be
    reached by any combination).
    """

    def __init__(self, spec: AlgebraSpec, vectors):
        vectors = list(vectors)
        if not vectors:
            raise ValueError("a space basis needs at least one vector")
        for v in vectors:
            if not isinstance(v, AlgebraElement) or v.spec != spec:
                raise ValueError("basis vectors must belong to the given algebra")
            if not v:
                raise ValueError("basis contains the zero vector")
            if v.is_scalar():
                raise ValueError("basis contains a scalar vector")
        self.spec = spec
        self.vectors = vectors
        self._validate()

    def _validate(self):
        m = len(self.vectors)
        if all(v.is_monomial() for v in self.vectors):
            classes = {next(iter(v.terms)) for v in self.vectors}
            if len(classes) != m:
                raise ValueError("basis is linearly dependent")
            # Monomial vectors are nonscalar by the constructor check, so
            # the span cannot contain the identity class.
            return
        rows = [v.terms for v in self.vectors]
        p, n = self.spec.p, self.spec.n
        if _laurent_rank(rows, p, n) != m:
            raise ValueError("basis is linearly dependent")
        identity = self.spec.identity_class()
        if any(identity in row for row in rows):
            if _laurent_rank(rows, p, n, drop_columns=(identity,)) != m:
                raise ValueError("the span of the basis contains scalars")

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def classes(self):
        """Exponent vectors of a monomial basis (error if not monomial)."""
        out = []
        for v in self.vectors:
            if not v.is_monomial():
                raise ValueError("basis is not monomial")
            out.append(next(iter(v.terms)))
        return out

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __repr__(self):
        return f"SpaceBasis({self.spec.p}, {self.spec.n}, dim={len(self.vectors)})"


def in_span(basis: SpaceBasis, element: AlgebraElement) -> bool:
    """Whether the element lies in the span of the (independent) basis."""
    if element.spec != basis.spec:
        raise ValueError("element from a different algebra")
    if not element:
        return True
    rows = [v.terms for v in basis.vectors] + [element.terms]
    return _laurent_rank(rows, basis.spec.p, basis.spec.n) == len(basis.vectors)


def is_kummer_space(basis: SpaceBasis) -> KummerVerdict:
    """Decide whether the span of the basis is a Kummer space.

    Checks every star product of total degree p, walking degree tuples in
    lexicographic order so the reported witness is the least failing one.
    """
    vectors = basis.vectors
    p = basis.spec.p
    for degrees in degree_tuples(len(vectors), p):
        star = star_product(vectors, degrees)
        if not star.is_scalar():
            return KummerVerdict(False, degrees, star)
    return KummerVerdict(True)


def is_kummer_space_triples(basis: SpaceBasis) -> KummerVerdict:
    """Degree-3 specialization: only singles, pairs, and triples occur.

    For p = 3 every degree tuple of total 3 is supported on at most three
    basis vectors, so checking v^3 for each vector, the (2,1)/(1,2) stars
    for each pair, and the (1,1,1) star for each triple is the whole
    criterion.  The verdict always agrees with is_kummer_space; when more
    than one star fails, the reported witness may be a different (equally
    failing) degree tuple because the scan order here groups by support
    size rather than running in lexicographic order.
    """
    if basis.spec.p != 3:
        raise ValueError("the triple criterion applies only to p = 3")
    vectors = basis.vectors
    m = len(vectors)

    def verdict(indices, local_degrees):
        star = star_product(
            [vectors[i] for i in indices], list(local_degrees)
        )
        if star.is_scalar():
            return None
        full = [0] * m
        for i, d in zip(indices, local_degrees):
            full[i] = d
        return KummerVerdict(False, tuple(full), star)

    for i in range(m):
        bad = verdict((i,), (3,))
        if bad is not None:
            return bad
    for i in range(m):
        for j in range(i + 1, m):
            for degrees in ((2, 1), (1, 2)):
                bad = verdict((i, j), degrees)
                if bad is not None:
                    return bad
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                bad = verdict((i, j, k), (1, 1, 1))
                if bad is not None:
                    return bad
    return KummerVerdict(True)


# -- free lifts and leading monomials ---------------------------------------


@dataclass
class FreeLift:
    """Polynomial lift of an element: substitute a_k = x_k^p, b_k = y_k^p.

    ``terms`` maps free exponent vectors (length 2n, entries >= 0) to
    Q(rho) coefficients.  A term c * a^e b^f x^a y^b of the algebra lifts
    to the free exponent (p*e + a, p*f + b) with coefficient c; the lift
    is a bijection on terms, so it round-trips exactly.
    """

    p: int
    n: int
    terms: dict

    def to_element(self, spec: AlgebraSpec) -> AlgebraElement:
        if (spec.p, spec.n) != (self.p, self.n):
            raise ValueError("lift belongs to a different algebra")
        element = spec.zero()
        for free, coeff in self.terms.items():
            laurent_exps = tuple(e // self.p for e in free)
            reduced = tuple(e % self.p for e in free)
            element = element + spec.monomial(
                reduced, Laurent.monomial(self.p, self.n, laurent_exps, coeff)
            )
        return element


def lift_to_polynomial(element: AlgebraElement) -> FreeLift:
    """Lift an element with polynomial (nonnegative-exponent) coefficients."""
    p, n = element.spec.p, element.spec.n
    terms: dict = {}
    for reduced, laurent in element.terms.items():
        for laurent_exps, coeff in laurent.terms.items():
            if any(e < 0 for e in laurent_exps):
                raise ValueError(
                    "negative parameter exponents; clear denominators first"
                )
            free = tuple(p * le + re for le, re in zip(laurent_exps, reduced))
            terms[free] = coeff
    return FreeLift(p, n, terms)


def leading_monomial(lift: FreeLift) -> tuple:
    """Lex-greatest free exponent vector; priority x1 > y1 > x2 > y2 > ..."""
    if not lift.terms:
        raise ValueError("the zero polynomial has no leading monomial")
    return max(lift.terms)


def clear_denominators(element: AlgebraElement) -> AlgebraElement:
    """Rescale by a parameter monomial so all Laurent exponents are >= 0.

    Multiplying by a unit of the Laurent ring; the span of any basis
    containing the vector is unchanged.
    """
    slots = 2 * element.spec.n
    mins = [0] * slots
    for laurent in element.terms.values():
        for exps in laurent.terms:
            for i, e in enumerate(exps):
                if e < mins[i]:
                    mins[i] = e
    if not any(mins):
        return element
    shift = tuple(-m for m in mins)
    return element.scale(Laurent.monomial(element.spec.p, element.spec.n, shift))


def _leading_class(vector: AlgebraElement) -> tuple:
    p = vector.spec.p
    return tuple(e % p for e in leading_monomial(lift_to_polynomial(vector)))


def monomialize(basis: SpaceBasis) -> list:
    """Reduce a Kummer basis to pairwise-distinct monomial classes.

    Sweep: order the vectors by decreasing leading free monomial; for each
    pivot in turn, remove the pivot's leading class from every later
    vector via v_i <- c * v_i - c_i * pivot (c, c_i the full Laurent
    coefficients of that class).  Scaling by a parameter coefficient moves
    free exponents by multiples of p only, so class support never grows
    and the sweep terminates with all leading classes distinct.

    The resulting classes are verified with is_kummer_space before being
    returned; a verification failure raises MonomializationError.
    """
    verdict = is_kummer_space(basis)
    if not verdict:
        raise ValueError(
            f"input basis does not span a Kummer space (witness degrees"
            f" {verdict.witness})"
        )
    spec = basis.spec
    p = spec.p
    vectors = [clear_denominators(v) for v in basis.vectors]
    m = len(vectors)
    for start in range(m):
        vectors[start:] = sorted(
            vectors[start:],
            key=lambda v: leading_monomial(lift_to_polynomial(v)),
            reverse=True,
        )
        pivot = vectors[start]
        pivot_class = _leading_class(pivot)
        c = pivot.terms[pivot_class]
        for i in range(start + 1, m):
            c_i = vectors[i].terms.get(pivot_class)
            if c_i is None:
                continue
            vectors[i] = vectors[i].scale(c) - pivot.scale(c_i)
            if not vectors[i]:
                raise MonomializationError(
                    "elimination produced zero; input vectors were dependent"
                )
    classes = [_leading_class(v) for v in vectors]
    if len(set(classes)) != m:
        raise MonomializationError(
            f"leading classes are not pairwise distinct: {classes}"
        )
    try:
        monomial_basis = SpaceBasis(spec, [spec.monomial(w) for w in classes])
    except ValueError as exc:
        raise MonomializationError(
            f"output classes do not form a valid basis: {exc}"
        ) from exc
    check = is_kummer_space(monomial_basis)
    if not check:
        raise MonomializationError(
            f"output classes fail the Kummer criterion (witness degrees"
            f" {check.witness}); the input space has no monomial reduction"
            f" along this elimination order"
        )
    return classes
