"""Permutation combinatorics: Lehmer codes, inversion diagrams, transition
data, annihilator exponent tables, and orders on integer weight vectors.

Permutations are bijections of the positive integers fixing all but finitely
many points, stored as the minimal one-line window ``[w(1), ..., w(N)]`` with
an implicit identity tail.  Weight vectors are plain ``tuple[int, ...]`` of a
fixed length ``n``; the vectors with nonnegative entries are exactly the
Lehmer codes of permutations that are increasing beyond position ``n``.

Everything here is a pure function over immutable values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cmp_to_key

LESS = "less"
EQUAL = "equal"
GREATER = "greater"
INCOMPARABLE = "incomparable"

#: Recognized order names for :func:`compare`.
ORDERS = ("standard", "prime", "dominance")


class Permutation:
    """A finite-support permutation of {1, 2, ...} in one-line notation.

    The stored window is minimal: its last entry is not a fixed point (the
    identity has an empty window).  Instances are immutable and hashable.
    """

    __slots__ = ("window",)

    def __init__(self, images=()):
        window = tuple(int(x) for x in images)
        if sorted(window) != list(range(1, len(window) + 1)):
            raise ValueError(f"not a one-line permutation window: {list(images)}")
        while window and window[-1] == len(window):
            window = window[:-1]
        object.__setattr__(self, "window", window)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    def __call__(self, i: int) -> int:
        if i < 1:
            raise ValueError("positions are 1-based")
        return self.window[i - 1] if i <= len(self.window) else i

    @property
    def size(self) -> int:
        """Smallest N such that w(i) = i for all i > N."""
        return len(self.window)

    def one_line(self, n: int) -> tuple:
        return tuple(self(i) for i in range(1, n + 1))

    def is_identity(self) -> bool:
        return not self.window

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (w*v)(i) = w(v(i))
        n = max(self.size, other.size)
        return Permutation(self(other(i)) for i in range(1, n + 1))

    def inverse(self) -> "Permutation":
        images = [0] * self.size
        for i, v in enumerate(self.window, start=1):
            images[v - 1] = i
        return Permutation(images)

    def length(self) -> int:
        """Number of inversions."""
        win = self.window
        return sum(
            1
            for i in range(len(win))
            for j in range(i + 1, len(win))
            if win[i] > win[j]
        )

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    def descents(self) -> tuple:
        """Positions j with w(j) > w(j+1) (all lie inside the window)."""
        win = self.window
        return tuple(j for j in range(1, len(win)) if win[j - 1] > win[j])

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.window == other.window

    def __hash__(self):
        return hash(self.window)

    def __repr__(self):
        return f"Permutation({list(self.window)})"

    def to_json(self) -> list:
        return list(self.window)


def identity() -> Permutation:
    return Permutation()


def transposition(i: int, j: int) -> Permutation:
    """The permutation t_ij exchanging i and j (i < j)."""
    if not 1 <= i < j:
        raise ValueError(f"need 1 <= i < j, got ({i}, {j})")
    images = list(range(1, j + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation(images)


def adjacent(i: int) -> Permutation:
    """The simple transposition s_i."""
    return transposition(i, i + 1)


def longest_element(m: int) -> Permutation:
    return Permutation(range(m, 0, -1))


def all_permutations(m: int):
    """All elements of S_m (as finite-support permutations)."""
    for images in itertools.permutations(range(1, m + 1)):
        yield Permutation(images)


# ---------------------------------------------------------------------------
# Lehmer codes

def code(w: Permutation, n: int) -> tuple:
    """Lehmer code (c_1, ..., c_n) of w, c_i = #{j > i : w(j) < w(i)}.

    Raises if w is not increasing beyond position n (so that the code would
    have a nonzero entry past n), naming the offending index.

    >>> code(Permutation([2, 1, 4, 3]), 4)
    (1, 0, 1, 0)
    """
    if n < 1:
        raise ValueError("n must be positive")
    N = max(w.size, n)
    win = w.one_line(N)
    full = [
        sum(1 for j in range(i + 1, N) if win[j] < win[i]) for i in range(N)
    ]
    for i in range(n, N):
        if full[i]:
            raise ValueError(
                f"{w!r} is not increasing beyond position {n}: "
                f"code entry {i + 1} equals {full[i]}"
            )
    return tuple(full[:n])


def perm_of(lam) -> Permutation:
    """The unique permutation, increasing beyond position n, with code lam.

    >>> perm_of((1, 0, 1))
    Permutation([2, 1, 4, 3])
    """
    lam = tuple(int(x) for x in lam)
    if any(c < 0 for c in lam):
        raise ValueError(f"code entries must be nonnegative: {lam}")
    n = len(lam)
    N = n + (max(lam) if lam else 0)
    avail = list(range(1, N + 1))
    images = [avail.pop(c) for c in lam]
    images.extend(avail)
    return Permutation(images)


# ---------------------------------------------------------------------------
# Inversion data

@dataclass(frozen=True)
class InversionData:
    """Inversion diagram I(w), Rothe diagram D(w), and derived statistics."""

    inversions: frozenset  # pairs (i, j), i < j, w(i) > w(j)
    rothe: frozenset       # pairs (i, w(j)) over the same (i, j)
    length: int
    sign: int
    column_sizes: dict     # j -> l_j(w) = #{i : (i, j) in I(w)}


def inversion_data(w: Permutation) -> InversionData:
    win = w.window
    N = len(win)
    inv = set()
    rothe = set()
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            if win[i - 1] > win[j - 1]:
                inv.add((i, j))
                rothe.add((i, win[j - 1]))
    cols = {}
    for _, j in inv:
        cols[j] = cols.get(j, 0) + 1
    ell = len(inv)
    return InversionData(frozenset(inv), frozenset(rothe), ell, (-1) ** (ell % 2), cols)


# ---------------------------------------------------------------------------
# The m_ij exponent table

@dataclass(frozen=True)
class MTable:
    """The exponents m_ij(w) = #{k > j : w(i) < w(k) < w(j)} for i < j <= n,
    together with the pairs surviving the redundancy rule: (i, j) is pruned
    out when some i < q < j has m_ij = m_iq + m_qj."""

    n: int
    entries: dict   # (i, j) -> m_ij
    pruned: tuple   # sorted pairs kept as essential generators


def m_table(w: Permutation, n: int) -> MTable:
    code(w, n)  # validates membership
    N = max(w.size, n)
    win = w.one_line(N)
    entries = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            entries[(i, j)] = sum(
                1 for k in range(j + 1, N + 1) if win[i - 1] < win[k - 1] < win[j - 1]
            )
    pruned = tuple(
        sorted(
            (i, j)
            for (i, j) in entries
            if not any(
                entries[(i, j)] == entries[(i, q)] + entries[(q, j)]
                for q in range(i + 1, j)
            )
        )
    )
    return MTable(n, entries, pruned)


# ---------------------------------------------------------------------------
# Transition

@dataclass(frozen=True)
class TransitionData:
    """One step of the transition recursion at the maximal descent j:
    v = w t_jk drops the length by one and the branches (i_a, w^(a) = v t_{i_a j})
    all have the same length as w."""

    j: int
    k: int
    v: Permutation
    branches: tuple  # ((i_a, Permutation), ...) with i_1 < i_2 < ...


def transition(w: Permutation) -> TransitionData:
    if w.is_identity():
        raise ValueError("transition undefined at id")
    descents = w.descents()
    j = descents[-1]
    N = w.size
    k = max(p for p in range(j + 1, N + 1) if w(p) < w(j))
    v = w * transposition(j, k)
    branches = []
    vj = v(j)
    for i in range(1, j):
        vi = v(i)
        if vi < vj and not any(vi < v(r) < vj for r in range(i + 1, j)):
            branches.append((i, v * transposition(i, j)))
    return TransitionData(j, k, v, tuple(branches))


# ---------------------------------------------------------------------------
# Orders on weight vectors

def dominates(mu, lam) -> bool:
    """Dominance: mu - lam is a nonnegative sum of the differences
    e_i - e_{i+1} (equivalently, all partial sums of mu - lam are >= 0 and
    the total is 0).

    >>> dominates((1, 0), (0, 1))
    True
    >>> dominates((0, 1), (1, 0))
    False
    """
    if len(mu) != len(lam):
        raise ValueError("weight vectors must share a length")
    total = 0
    for a, b in zip(mu, lam):
        total += a - b
        if total < 0:
            return False
    return total == 0


def compare(lam, mu, order: str = "standard") -> str:
    """Four-valued comparison of two weight vectors of the same length.

    ``standard``/``prime`` are the total orders on each degree slice defined
    by lex / reverse-lex comparison of the inverses of perm(lam + k*1) and
    perm(mu + k*1); they return ``incomparable`` exactly when the total
    degrees differ, and the result does not depend on the shift k.
    ``dominance`` is the usual (partial) dominance order.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    if len(lam) != len(mu):
        raise ValueError("weight vectors must share a length")
    if order == "dominance":
        if lam == mu:
            return EQUAL
        if dominates(mu, lam):
            return LESS
        if dominates(lam, mu):
            return GREATER
        return INCOMPARABLE
    if order not in ("standard", "prime"):
        raise ValueError(f"unknown order {order!r}")
    if lam == mu:
        return EQUAL
    if sum(lam) != sum(mu):
        return INCOMPARABLE
    shift = max(0, -min(min(lam), min(mu)))
    wi = perm_of(tuple(x + shift for x in lam)).inverse()
    vi = perm_of(tuple(x + shift for x in mu)).inverse()
    width = max(wi.size, vi.size)
    a = wi.one_line(width)
    b = vi.one_line(width)
    # lam >= mu  iff  a <= b in the respective (r)lex sense
    if order == "standard":
        return GREATER if a < b else LESS
    diff = max(t for t in range(width) if a[t] != b[t])
    return GREATER if a[diff] < b[diff] else LESS


def weight_cmp(lam, mu, order: str = "standard") -> int:
    """Three-valued comparator (raises on incomparable inputs)."""
    r = compare(lam, mu, order)
    if r == LESS:
        return -1
    if r == GREATER:
        return 1
    if r == EQUAL:
        return 0
    raise ValueError(f"{lam} and {mu} are incomparable under {order}")


def sort_key(order: str = "standard"):
    return cmp_to_key(lambda a, b: weight_cmp(a, b, order))


def weight_window(lam) -> list:
    """All nu <= lam under the standard order, sorted increasingly.

    Within a degree slice the order is total, and every nu <= lam satisfies
    |nu| = |lam| and min(nu) >= min(lam); the search box follows.

    >>> weight_window((0, 1))
    [(1, 0), (0, 1)]
    """
    lam = tuple(lam)
    n = len(lam)
    if n == 0:
        return [()]
    lo = min(lam)
    total = sum(lam)
    hi = total - (n - 1) * lo
    out = []
    for nu in itertools.product(range(lo, hi + 1), repeat=n):
        if sum(nu) == total and compare(nu, lam) in (LESS, EQUAL):
            out.append(nu)
    return sorted(out, key=sort_key())


def rho(n: int) -> tuple:
    """The staircase weight (n-1, n-2, ..., 0)."""
    return tuple(range(n - 1, -1, -1))


def contains_2143(w: Permutation) -> bool:
    """Does w contain the pattern 2143 (positions i<j<k<l with
    w(j) < w(i) < w(l) < w(k))?"""
    win = w.window
    N = len(win)
    for j in range(1, N):
        for i in range(j):
            if win[i] <= win[j]:
                continue
            for k in range(j + 1, N):
                if win[k] <= win[i]:
                    continue
                for l in range(k + 1, N):
                    if win[i] < win[l] < win[k]:
                        return True
    return False
