"""Construction and exhaustive search of monomial Kummer spaces.

``build_maximal_space`` realizes the recursive family

    V_0 = F,    V_k = F[x_k] y_k + V_{k-1} x_k^{a_k}    (a_k prime to p),

whose k-th member is a Kummer space of dimension p*k + 1 spanned by
monomials.  ``verify_monomial_maximality`` checks that no further
monomial class extends such a space, and
``enumerate_monomial_kummer_spaces`` searches all monomial-class subsets
of a given size for the p = 3 graph criterion, exhaustively at n = 1 and
by axiom-pruned backtracking (with a node budget) for larger n.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .algebra import AlgebraElement, AlgebraSpec
from .graphs import classify
from .scalars import Laurent
from .spaces import SpaceBasis, in_span, is_kummer_space


class BudgetExceededError(RuntimeError):
    """The backtracking search ran out of its node budget."""

    def __init__(self, nodes: int, budget: int):
        super().__init__(f"search budget exceeded ({nodes} nodes > {budget})")
        self.nodes = nodes
        self.budget = budget


DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class MaximalSpaceParams:
    """Exponents a_1, ..., a_n for the recursive construction."""

    a: tuple

    def __init__(self, a):
        object.__setattr__(self, "a", tuple(a))


def build_maximal_space(
    spec: AlgebraSpec, params: MaximalSpaceParams, k: int
) -> SpaceBasis:
    """The k-th member V_k of the recursive family, as a monomial basis.

    Basis order follows the recursion: the p vectors x_k^j y_k first, then
    the previous basis multiplied by x_k^{a_k}.  Dimension is p*k + 1.
    """
    if not 1 <= k <= spec.n:
        raise ValueError(f"k must lie in 1..{spec.n}, got {k}")
    if len(params.a) < k:
        raise ValueError(f"need at least {k} exponents, got {len(params.a)}")
    for a_i in params.a:
        if not isinstance(a_i, int) or math.gcd(a_i, spec.p) != 1:
            raise ValueError(f"exponent {a_i} is not prime to p = {spec.p}")
    width = 2 * spec.n
    vectors = [spec.one()]
    for i in range(1, k + 1):
        slot = 2 * (i - 1)
        a_i = params.a[i - 1] % spec.p
        x_power_exps = [0] * width
        x_power_exps[slot] = a_i
        x_power = spec.monomial(x_power_exps)
        layer = []
        for j in range(spec.p):
            exps = [0] * width
            exps[slot] = j
            exps[slot + 1] = 1
            layer.append(spec.monomial(exps))
        vectors = layer + [v * x_power for v in vectors]
    return SpaceBasis(spec, vectors)


def standard_basis(spec: AlgebraSpec, k: int) -> SpaceBasis:
    """Closed form of the a = (1, ..., 1) basis:

    x_i^j y_i x_{i+1} ... x_k for 1 <= i <= k, 0 <= j < p, together with
    x_1 x_2 ... x_k.
    """
    if not 1 <= k <= spec.n:
        raise ValueError(f"k must lie in 1..{spec.n}, got {k}")
    width = 2 * spec.n
    vectors = []
    for i in range(k, 0, -1):
        for j in range(spec.p):
            exps = [0] * width
            exps[2 * (i - 1)] = j
            exps[2 * (i - 1) + 1] = 1
            for t in range(i + 1, k + 1):
                exps[2 * (t - 1)] = 1
            vectors.append(spec.monomial(exps))
    exps = [0] * width
    for t in range(1, k + 1):
        exps[2 * (t - 1)] = 1
    vectors.append(spec.monomial(exps))
    return SpaceBasis(spec, vectors)


# -- maximality -------------------------------------------------------------


def _extension_is_kummer(args) -> bool:
    p, n, base_classes, candidate = args
    spec = AlgebraSpec(p, n)
    vectors = [spec.monomial(w) for w in base_classes] + [spec.monomial(candidate)]
    return bool(is_kummer_space(SpaceBasis(spec, vectors)))


def outside_classes(basis: SpaceBasis):
    """Monomial classes not in the span of a monomial basis (identity
    included: distinct monomials are independent, so the span consists of
    combinations of the basis classes only)."""
    existing = set(basis.classes())
    return [w for w in basis.spec.monomial_classes() if w not in existing]


def verify_monomial_maximality(basis: SpaceBasis, jobs: int = 1):
    """Return None when no monomial class extends the space, else the
    first extending class (a witness against maximality).

    Exhaustive over every monomial class outside the span.  Extending by
    the identity class can never stay Kummer (scalars are not Kummer
    elements), so it is counted as a failing extension without running
    the star criterion.
    """
    spec = basis.spec
    base_classes = tuple(basis.classes())
    verdict = is_kummer_space(basis)
    if not verdict:
        raise ValueError(
            f"basis does not span a Kummer space (witness {verdict.witness})"
        )
    identity = spec.identity_class()
    candidates = [w for w in outside_classes(basis) if w != identity]
    payloads = [(spec.p, spec.n, base_classes, w) for w in candidates]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for candidate, extends in zip(
                candidates, pool.map(_extension_is_kummer, payloads, chunksize=8)
            ):
                if extends:
                    return candidate
    else:
        for candidate, payload in zip(candidates, payloads):
            if _extension_is_kummer(payload):
                return candidate
    return None


def _random_element(spec: AlgebraSpec, rng: random.Random) -> AlgebraElement:
    """A small random element: 1-3 monomial classes, simple coefficients."""
    nonzero = [w for w in spec.monomial_classes() if any(w)]
    element = spec.zero()
    for w in rng.sample(nonzero, rng.randint(1, 3)):
        coeff = Laurent.constant(spec.p, spec.n, rng.choice([1, 2, -1, 3]))
        if rng.random() < 0.3:
            exps = [0] * (2 * spec.n)
            exps[rng.randrange(2 * spec.n)] = rng.choice([1, 2])
            coeff = coeff * Laurent.monomial(spec.p, spec.n, exps)
        element = element + spec.monomial(w, coeff)
    return element


def sample_extension_failures(basis: SpaceBasis, count: int, seed: int, jobs: int = 1):
    """Randomized maximality probe over general (non-monomial) elements.

    Draws ``count`` random elements outside the span of the basis and
    checks that adjoining each one breaks the Kummer property.  Returns
    (tested, witness): witness is None when every extension failed, else
    an element whose extension stayed Kummer.
    """
    del jobs  # sampling is cheap; kept for interface symmetry
    rng = random.Random(seed)
    spec = basis.spec
    tested = 0
    while tested < count:
        z = _random_element(spec, rng)
        if not z or z.is_scalar() or in_span(basis, z):
            continue
        tested += 1
        try:
            extended = SpaceBasis(spec, list(basis.vectors) + [z])
        except ValueError:
            continue  # span picked up scalars: not a Kummer extension either
        if is_kummer_space(extended):
            return tested, z
    return tested, None


# -- enumeration -------------------------------------------------------------


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_monomial_kummer_spaces(
    spec: AlgebraSpec, size: int, budget: int | None = None
):
    """All monomial-class subsets of the given size spanning Kummer spaces.

    Subsets are returned (and internally explored) in lexicographic order
    of their sorted exponent vectors.  n = 1 is a direct exhaustive sweep;
    larger n uses backtracking that prunes on the hereditary parts of the
    graph axioms (pairwise arrows, scalar 3-cycle products, vertex-disjoint
    cycles) and re-verifies every leaf with the full classifier.  The
    search is never short-circuited by the size bound: sizes beyond it
    simply come back empty.

    ``budget`` caps the number of candidate extensions examined
    (default 10**7); exceeding it raises BudgetExceededError.
    """
    if spec.p != 3:
        raise ValueError("enumeration applies only to p = 3")
    if size < 1:
        raise ValueError("size must be at least 1")
    total_classes = spec.dimension - 1
    if size > total_classes:
        return []
    if spec.n == 1:
        import itertools

        results = []
        nonzero = [w for w in spec.monomial_classes() if any(w)]
        for subset in itertools.combinations(nonzero, size):
            if classify(spec, subset):
                results.append(subset)
        return results
    return _pruned_search(spec, size, DEFAULT_BUDGET if budget is None else budget)


def _pruned_search(spec: AlgebraSpec, size: int, budget: int):
    p = spec.p
    width = 2 * spec.n
    count = spec.dimension  # p^(2n) codes; code 0 is the identity class

    exps = []
    for code in range(count):
        vec = []
        rem = code
        for _ in range(width):
            vec.append(rem % p)
            rem //= p
        vec.reverse()  # slot 0 is the most significant digit: code order = lex
        exps.append(tuple(vec))

    def encode(vector) -> int:
        code = 0
        for e in vector:
            code = code * p + e
        return code

    ce = [[0] * count for _ in range(count)]
    for u in range(count):
        ue = exps[u]
        for v in range(count):
            vev = exps[v]
            total = 0
            for t in range(0, width, 2):
                total += ue[t + 1] * vev[t] - ue[t] * vev[t + 1]
            ce[u][v] = total % p

    out1 = [0] * count  # arrows u -> v
    in1 = [0] * count  # arrows v -> u
    linked = [0] * count  # any arrow between the pair
    for u in range(count):
        row = ce[u]
        o = i_ = 0
        for v in range(count):
            if v == u:
                continue
            if row[v] == 1:
                o |= 1 << v
            elif row[v] == p - 1:
                i_ |= 1 << v
        out1[u] = o
        in1[u] = i_
        linked[u] = o | i_

    third = [
        [encode(tuple((-a - b) % p for a, b in zip(exps[u], exps[w]))) for w in range(count)]
        for u in range(count)
    ]

    all_above = [(1 << count) - 1 - ((1 << (c + 1)) - 1) for c in range(count)]

    results = []
    chosen: list = []
    nodes = 0

    def descend(last: int, chosen_mask: int, allowed: int, cycle_mask: int):
        nonlocal nodes
        depth = len(chosen)
        if depth == size:
            subset = tuple(exps[c] for c in chosen)
            if classify(spec, subset):
                results.append(subset)
            return
        need = size - depth
        pool = allowed & all_above[last]
        if pool.bit_count() < need:
            return
        for cand in _iter_bits(pool):
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(nodes, budget)
            # Every 3-cycle through cand: u, w already chosen with
            # u -> w -> cand -> u.  Two new cycles would share cand, and a
            # cycle is scalar exactly when the three classes sum to zero.
            new_cycle = None
            rejected = False
            w_mask = chosen_mask & in1[cand]
            u_mask = chosen_mask & out1[cand]
            if w_mask and u_mask:
                for w in _iter_bits(w_mask):
                    for u in _iter_bits(u_mask & in1[w]):
                        if new_cycle is not None:
                            rejected = True
                            break
                        if third[u][w] != cand:
                            rejected = True
                            break
                        if (cycle_mask >> u) & 1 or (cycle_mask >> w) & 1:
                            rejected = True
                            break
                        new_cycle = (1 << u) | (1 << w) | (1 << cand)
                    if rejected:
                        break
            if rejected:
                continue
            chosen.append(cand)
            descend(
                cand,
                chosen_mask | (1 << cand),
                allowed & linked[cand],
                cycle_mask | (new_cycle or 0),
            )
            chosen.pop()

    descend(0, 0, (1 << count) - 1, 0)
    return results
