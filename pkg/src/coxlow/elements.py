"""Group elements, inversion sets, cone membership and low elements.

Elements are identified with their ShortLex normal form (the
lexicographically least among the shortest words); equality and hashing go
through the normal form exclusively.  The inversion set convention is
N(w) = Phi+ cap w(Phi-), computed by the prefix formula
N(s1...sk) = {alpha_s1, s1(alpha_s2), ..., s1...s_{k-1}(alpha_sk)};
left descents are the generators whose simple root lies in N(w).
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import Root
from .errors import NonReducedInput, NumericallyAmbiguous

DEFAULT_EPS_CONE = 1e-7


@dataclass(frozen=True)
class Element:
    """A group element as its ShortLex-minimal reduced word."""

    word: tuple

    @property
    def length(self):
        return len(self.word)

    def __repr__(self):
        return "Element(%s)" % ("".join(str(s) for s in self.word) or "e")


IDENTITY = Element(())


# -- matrix action ------------------------------------------------------

def identity_matrix(rs):
    one = Fraction(1) if rs.exact else 1.0
    zero = Fraction(0) if rs.exact else 0.0
    return tuple(tuple(one if i == j else zero for j in range(rs.rank))
                 for i in range(rs.rank))


def reflection_matrix(rs, s):
    """Matrix of the simple reflection s acting on root coordinates."""
    ident = identity_matrix(rs)
    row = tuple(ident[s][j] - 2 * rs.gram[s][j] for j in range(rs.rank))
    return tuple(row if i == s else ident[i] for i in range(rs.rank))


def mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n))


def mat_apply(m, v):
    n = len(m)
    return tuple(sum(m[i][j] * v[j] for j in range(n)) for i in range(n))


def mat_column(m, j):
    return tuple(row[j] for row in m)


def word_matrices(rs, word):
    """(W, W_inverse) for the element s1...sk acting on root coordinates."""
    w = identity_matrix(rs)
    w_inv = identity_matrix(rs)
    for s in word:
        m = reflection_matrix(rs, s)
        w = mat_mul(w, m)
        w_inv = mat_mul(m, w_inv)
    return w, w_inv


# -- normal forms -------------------------------------------------------

def normalize(rs, word):
    """ShortLex normal form of an arbitrary generator word.

    Greedy: the first letter of the ShortLex-least reduced word is the
    smallest left descent; peel it off (w := s w) and repeat until the
    identity is reached.  Descents are read off the columns of the matrix
    of w^{-1} (alpha_s in N(w) iff w^{-1} alpha_s is negative)."""
    for s in word:
        if not 0 <= s < rs.rank:
            raise ValueError("generator %r out of range" % (s,))
    w, w_inv = word_matrices(rs, word)
    letters = []
    while True:
        for s in range(rs.rank):
            if rs.is_negative_root_vec(mat_column(w_inv, s)):
                letters.append(s)
                m = reflection_matrix(rs, s)
                w = mat_mul(m, w)
                w_inv = mat_mul(w_inv, m)
                break
        else:
            return Element(tuple(letters))


def element_length(rs, word):
    """Length of the element represented by an arbitrary word."""
    return normalize(rs, word).length


def multiply(rs, a, b):
    """Product of two elements, as a normalized Element."""
    return normalize(rs, a.word + b.word)


def inverse(rs, a):
    return normalize(rs, tuple(reversed(a.word)))


# -- inversion sets -----------------------------------------------------

class InversionSet:
    """N(w): the positive roots sent negative by w^{-1}."""

    def __init__(self, rs, roots):
        self.rs = rs
        self.roots = tuple(sorted(roots, key=Root.sort_key))
        self.keys = frozenset(root.key for root in self.roots)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, root):
        return root.key in self.keys


def inversion_set(rs, w):
    """Inversion set by the prefix formula; |N(w)| = length(w)."""
    roots = []
    seen = set()
    prefix = identity_matrix(rs)
    for s in w.word:
        v = mat_apply(prefix, rs.simple_roots[s])
        if rs.is_negative_root_vec(v):
            raise NonReducedInput(
                "negative prefix root %r: word %r is not reduced" % (v, w.word))
        key = rs.vec_key(v)
        if key in seen:
            raise NonReducedInput(
                "duplicate inversion %r: word %r is not reduced" % (v, w.word))
        seen.add(key)
        roots.append(rs.make_root(v, rs.root_depth(v)))
        prefix = mat_mul(prefix, reflection_matrix(rs, s))
    return InversionSet(rs, roots)


def left_descents(rs, w):
    """{s : alpha_s in N(w)} = {s : length(s w) < length(w)}."""
    inv = inversion_set(rs, w)
    return {s for s in range(rs.rank)
            if rs.vec_key(rs.simple_roots[s]) in inv.keys}


@dataclass(frozen=True)
class SmallInversionSet:
    """A subset of the small roots as a bitmask over their frozen indices."""

    mask: int
    size: int

    def indices(self):
        return [i for i in range(self.size) if self.mask >> i & 1]

    def roots(self, sigma):
        return sigma.mask_to_roots(self.mask)

    def __len__(self):
        return bin(self.mask).count("1")


def small_inversion_mask(rs, sigma, w):
    mask = 0
    for root in inversion_set(rs, w):
        i = sigma.index_of(root.key)
        if i is not None:
            mask |= 1 << i
    return mask


def small_inversion_set(rs, sigma, w):
    """lambda(w) = Sigma cap N(w), as a bitmask over Sigma's indexing."""
    return SmallInversionSet(small_inversion_mask(rs, sigma, w), len(sigma))


# -- cone membership ----------------------------------------------------

def _solve_subset(rs, cols, target, eps_cone):
    """Solve sum c_i a_i = target by Gaussian elimination.

    Returns (coeffs, residual_ok_value) or None when the subset is
    rank-deficient.  In the exact backend the solve is exact and the
    residual is exactly checked; in the float backend the pivoting uses
    eps_cone and the caller checks residual/coefficients."""
    n = rs.rank
    k = len(cols)
    rows = [[cols[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    piv_tol = 0 if rs.exact else eps_cone
    pivots = []
    r = 0
    for c in range(k):
        best = max(range(r, n), key=lambda i: abs(rows[i][c]), default=None)
        if best is None or abs(rows[best][c]) <= piv_tol:
            return None
        rows[r], rows[best] = rows[best], rows[r]
        pivots.append(c)
        factor = rows[r][c]
        rows[r] = [x / factor for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    coeffs = [rows[i][k] for i in range(k)]
    residual = max(abs(target[i] - sum(cols[j][i] * coeffs[j] for j in range(k)))
                   for i in range(n))
    return coeffs, residual


def cone_membership(rs, generators, gamma, eps_cone=DEFAULT_EPS_CONE):
    """Is gamma a nonnegative combination of the given roots?

    By conic Caratheodory, membership holds iff gamma lies in the cone of
    some linearly independent subset of size <= rank, so all such subsets
    are solved directly (exactly in the rational backend).  Float solves
    whose best residual lands in the gray zone [eps_cone, 10 eps_cone]
    raise NumericallyAmbiguous instead of silently flipping."""
    vecs = []
    seen = set()
    for g in generators:
        coords = g.coords if isinstance(g, Root) else tuple(g)
        key = rs.vec_key(coords)
        if key not in seen:
            seen.add(key)
            vecs.append(coords)
    target = gamma.coords if isinstance(gamma, Root) else tuple(gamma)
    if rs.vec_key(target) in seen:
        return True
    if not vecs:
        return False
    coeff_tol = 0 if rs.exact else eps_cone
    gray = None
    for k in range(1, rs.rank + 1):
        for subset in itertools.combinations(vecs, k):
            solved = _solve_subset(rs, subset, target, eps_cone)
            if solved is None:
                continue
            coeffs, residual = solved
            if any(c < -coeff_tol for c in coeffs):
                continue
            if rs.exact:
                if residual == 0:
                    return True
            elif residual < eps_cone:
                return True
            elif residual <= 10 * eps_cone:
                gray = residual if gray is None else min(gray, residual)
    if gray is not None:
        raise NumericallyAmbiguous(
            "cone membership residual %g in gray zone [%g, %g]"
            % (gray, eps_cone, 10 * eps_cone))
    return False


# -- low elements -------------------------------------------------------

def _cone_cache(rs):
    return rs._caches.setdefault("cone", {})


def _cached_cone(rs, lam_keys, lam_coords, root, eps_cone):
    cache = _cone_cache(rs)
    key = (lam_keys, root.key)
    if key not in cache:
        cache[key] = cone_membership(rs, lam_coords, root, eps_cone=eps_cone)
    return cache[key]


def is_low(rs, sigma, w, eps_cone=DEFAULT_EPS_CONE):
    """w is low iff N(w) lies in the cone spanned by Sigma cap N(w)."""
    inv = inversion_set(rs, w)
    lam = [root for root in inv if sigma.index_of(root.key) is not None]
    lam_keys = frozenset(root.key for root in lam)
    lam_coords = tuple(root.coords for root in lam)
    for root in inv:
        if root.key in lam_keys:
            continue
        if not _cached_cone(rs, lam_keys, lam_coords, root, eps_cone):
            return False
    return True


# -- element enumeration ------------------------------------------------

def elements_by_length(rs, max_len=None):
    """Yield (length, entries) level by level over the right Cayley graph.

    Each entry is (Element, matrix, inverse matrix).  First-come dedup:
    since parents are visited in ShortLex order and letters in increasing
    order, the discovery word of each element is its ShortLex normal form."""
    def mat_key(m):
        return tuple(rs.vec_key(row) for row in m)

    ident = identity_matrix(rs)
    seen = {mat_key(ident)}
    frontier = [(IDENTITY, ident, ident)]
    refl = [reflection_matrix(rs, s) for s in range(rs.rank)]
    length = 0
    yield 0, frontier
    while frontier and (max_len is None or length < max_len):
        new_frontier = []
        for elem, w, w_inv in frontier:
            for s in range(rs.rank):
                # length increases iff w(alpha_s) is positive
                if rs.is_negative_root_vec(mat_column(w, s)):
                    continue
                nw = mat_mul(w, refl[s])
                key = mat_key(nw)
                if key in seen:
                    continue
                seen.add(key)
                new_frontier.append(
                    (Element(elem.word + (s,)), nw, mat_mul(refl[s], w_inv)))
        if not new_frontier:
            return
        frontier = new_frontier
        length += 1
        yield length, frontier


def elements_up_to_length(rs, max_len):
    """All elements of length <= max_len (see elements_by_length)."""
    out = []
    for _, entries in elements_by_length(rs, max_len):
        out.extend(entries)
    return out


@dataclass
class CompletenessReport:
    """Did the bounded search realize every small inversion set?"""

    max_len: int
    n_lambda: int
    realized: int
    unrealized_masks: tuple

    @property
    def complete(self):
        return not self.unrealized_masks


def enumerate_low(rs, sigma, max_len, eps_cone=DEFAULT_EPS_CONE):
    """All low elements of length <= max_len, with a completeness report.

    The report states whether every state of the canonical automaton (every
    small inversion set) is realized by some collected low element; this is
    the empirical certificate that the search went deep enough."""
    from .automaton import build_automaton

    lows = []
    realized = set()
    for elem, _, _ in elements_up_to_length(rs, max_len):
        if is_low(rs, sigma, elem, eps_cone=eps_cone):
            lows.append(elem)
            realized.add(small_inversion_mask(rs, sigma, elem))
    aut = build_automaton(rs, sigma)
    unrealized = tuple(sorted(set(aut.states) - realized))
    report = CompletenessReport(max_len, len(aut.states), len(realized),
                                unrealized)
    lows.sort(key=lambda e: (e.length, e.word))
    return lows, report


def enumerate_low_stable(rs, sigma, cap=25, settle=4, eps_cone=DEFAULT_EPS_CONE):
    """Enumerate low elements adaptively, stopping once stable.

    Walks the weak order level by level and stops as soon as every small
    inversion set is realized and ``settle`` consecutive lengths produced
    no new low element (or at length ``cap``).  Returns (lows, report,
    length_reached)."""
    from .automaton import build_automaton

    aut = build_automaton(rs, sigma)
    all_masks = set(aut.states)
    lows = []
    realized = set()
    quiet = 0
    reached = 0
    for length, entries in elements_by_length(rs, cap):
        reached = length
        new = 0
        for elem, _, _ in entries:
            if is_low(rs, sigma, elem, eps_cone=eps_cone):
                lows.append(elem)
                realized.add(small_inversion_mask(rs, sigma, elem))
                new += 1
        quiet = 0 if new else quiet + 1
        if realized >= all_masks and quiet >= settle:
            break
    unrealized = tuple(sorted(all_masks - realized))
    report = CompletenessReport(reached, len(all_masks), len(realized),
                                unrealized)
    lows.sort(key=lambda e: (e.length, e.word))
    return lows, report, reached
