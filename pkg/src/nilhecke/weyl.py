"""Finite Coxeter group combinatorics on exact reflection matrices.

:class:`WeylElement` is a standalone value (usable for groups too large to
tabulate, e.g. A8).  :class:`GroupTable` enumerates a whole group and works
with integer element indices; index 0 is the identity and indices increase
with length.
"""

from __future__ import annotations

import os
from functools import cached_property, lru_cache
from itertools import combinations
from math import factorial

from .coeffring import normalize, sign_of
from .errors import CapExceededError, InvariantViolation, NilHeckeError
from .rootdata import RootDatum

Word = tuple
DEFAULT_GROUP_CAP = 2 * 10 ** 5
GROUP_CAP_ENV = "NILHECKE_GROUP_CAP"


def group_cap() -> int:
    raw = os.environ.get(GROUP_CAP_ENV)
    return int(raw) if raw else DEFAULT_GROUP_CAP


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(normalize(sum((a[i][k] * b[k][j] for k in range(n) if a[i][k] and b[k][j]), 0))
              for j in range(n))
        for i in range(n))


def _matvec(a, v):
    n = len(a)
    return tuple(normalize(sum((a[i][k] * v[k] for k in range(n) if a[i][k] and v[k]), 0))
                 for i in range(n))


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _right_mul_simple(datum: RootDatum, mat, i0: int):
    """mat * S_i: column j becomes col_j - c[j][i0] * col_i0."""
    n = datum.n
    c = datum.cartan
    coli = [mat[r][i0] for r in range(n)]
    rows = []
    for r in range(n):
        row = list(mat[r])
        for j in range(n):
            cji = c[j][i0]
            if cji and coli[r]:
                row[j] = normalize(row[j] - cji * coli[r])
        rows.append(tuple(row))
    return tuple(rows)


class WeylElement:
    """A group element as its matrix on simple-root coordinates."""

    __slots__ = ("datum", "matrix", "_length")

    def __init__(self, datum: RootDatum, matrix, length: int | None = None):
        self.datum = datum
        self.matrix = matrix
        self._length = length

    @classmethod
    def identity(cls, datum: RootDatum) -> "WeylElement":
        return cls(datum, _identity(datum.n), 0)

    @classmethod
    def from_word(cls, datum: RootDatum, word) -> "WeylElement":
        mat = _identity(datum.n)
        for i in word:
            if not 1 <= i <= datum.n:
                raise NilHeckeError(f"generator index {i} out of range 1..{datum.n}")
            mat = _right_mul_simple(datum, mat, i - 1)
        return cls(datum, mat)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.datum, _matmul(self.matrix, other.matrix))

    def __repr__(self):
        return f"WeylElement({self.datum.name}, {list(self.reduced_word())})"

    def act(self, v):
        return _matvec(self.matrix, v)

    def times_simple(self, i: int) -> "WeylElement":
        return WeylElement(self.datum, _right_mul_simple(self.datum, self.matrix, i - 1))

    def inverse(self) -> "WeylElement":
        w = WeylElement.identity(self.datum)
        for i in reversed(self.reduced_word()):
            w = w.times_simple(i)
        return w

    @property
    def length(self) -> int:
        if self._length is None:
            cnt = 0
            for r in self.datum.positive_roots:
                if self.datum.vector_sign(self.act(r)) < 0:
                    cnt += 1
            self._length = cnt
        return self._length

    def right_descents(self) -> frozenset[int]:
        n = self.datum.n
        out = set()
        for i in range(n):
            col = tuple(self.matrix[r][i] for r in range(n))
            if self.datum.vector_sign(col) < 0:
                out.add(i + 1)
        return frozenset(out)

    def left_descents(self) -> frozenset[int]:
        return self.inverse().right_descents()

    def reduced_word(self) -> Word:
        """Lexicographically least reduced word."""
        return _lex_least_word(self.datum, self.matrix)

    def all_reduced_words(self) -> set[Word]:
        return set(_all_words(self.datum, self.matrix))


@lru_cache(maxsize=65536)
def _right_desc(datum: RootDatum, mat) -> tuple[int, ...]:
    n = datum.n
    return tuple(i + 1 for i in range(n)
                 if datum.vector_sign(tuple(mat[r][i] for r in range(n))) < 0)


@lru_cache(maxsize=65536)
def _all_words(datum: RootDatum, mat) -> tuple[Word, ...]:
    desc = _right_desc(datum, mat)
    if not desc:
        return ((),)
    out = []
    for i in desc:
        prev = _right_mul_simple(datum, mat, i - 1)
        out.extend(w + (i,) for w in _all_words(datum, prev))
    return tuple(sorted(out))


def _peel_right(datum: RootDatum, mat) -> list[int]:
    """Letters removed from the right by repeatedly taking the least right descent."""
    out = []
    while True:
        d = _right_desc(datum, mat)
        if not d:
            return out
        out.append(d[0])
        mat = _right_mul_simple(datum, mat, d[0] - 1)


def _lex_least_word(datum: RootDatum, mat) -> Word:
    # left descents of w are right descents of w^{-1}; the inverse matrix is
    # the product of any reduced word read backwards
    invmat = _identity(datum.n)
    for i in _peel_right(datum, mat):
        invmat = _right_mul_simple(datum, invmat, i - 1)
    return tuple(_peel_right(datum, invmat))


def is_reduced(datum: RootDatum, word) -> bool:
    """A word is reduced iff each appended letter is an ascent."""
    mat = _identity(datum.n)
    n = datum.n
    for i in word:
        col = tuple(mat[r][i - 1] for r in range(n))
        if datum.vector_sign(col) < 0:
            return False
        mat = _right_mul_simple(datum, mat, i - 1)
    return True


def is_subword(small, big) -> bool:
    """Greedy left-to-right subsequence test."""
    it = iter(big)
    return all(any(x == y for y in it) for x in small)


class GroupTable:
    """The complete finite group with multiplication tables."""

    def __init__(self, datum: RootDatum, cap: int | None = None):
        self.datum = datum
        self.n = datum.n
        cap = group_cap() if cap is None else cap
        n = self.n
        ident = _identity(n)
        mats = [ident]
        index = {ident: 0}
        words: list[Word] = [()]
        lengths = [0]
        right: list[list[int]] = []
        head = 0
        # BFS with ascending generators on right multiplication yields the
        # lexicographically least reduced word as discovery word
        while head < len(mats):
            mat = mats[head]
            row = []
            for i in range(n):
                new = _right_mul_simple(datum, mat, i)
                k = index.get(new)
                if k is None:
                    k = len(mats)
                    if k >= cap:
                        raise CapExceededError(
                            f"group order exceeds cap {cap} (set {GROUP_CAP_ENV} to raise it)")
                    index[new] = k
                    mats.append(new)
                    words.append(words[head] + (i + 1,))
                    lengths.append(lengths[head] + 1)
                row.append(k)
            right.append(row)
            head += 1
        self.matrices = mats
        self.index = index
        self.words = words
        self.lengths = lengths
        self.right = right
        self.order = len(mats)
        inv = [0] * self.order
        for k, w in enumerate(words):
            x = 0
            for i in reversed(w):
                x = right[x][i - 1]
            inv[k] = x
        self.inv = inv
        self.left = [[inv[right[inv[k]][i]] for i in range(n)] for k in range(self.order)]
        self.longest = max(range(self.order), key=lambda k: lengths[k])

    def __repr__(self):
        return f"GroupTable({self.datum.name}, order={self.order})"

    def __len__(self):
        return self.order

    # -- conversions
    def element(self, k: int) -> WeylElement:
        return WeylElement(self.datum, self.matrices[k], self.lengths[k])

    def index_of(self, x) -> int:
        """Index of a WeylElement, a matrix, or a word (any word, not only reduced)."""
        if isinstance(x, WeylElement):
            return self.index[x.matrix]
        if isinstance(x, int):
            return x
        return self.from_word(x)

    def from_word(self, word) -> int:
        k = 0
        for i in word:
            if not 1 <= i <= self.n:
                raise NilHeckeError(f"generator index {i} out of range 1..{self.n}")
            k = self.right[k][i - 1]
        return k

    def word(self, k: int) -> Word:
        return self.words[k]

    def length(self, k: int) -> int:
        return self.lengths[k]

    def mul(self, a: int, b: int) -> int:
        for i in self.words[b]:
            a = self.right[a][i - 1]
        return a

    def simple(self, i: int) -> int:
        return self.right[0][i - 1]

    # -- descents
    def right_descents(self, k: int) -> frozenset[int]:
        lk = self.lengths[k]
        return frozenset(i + 1 for i in range(self.n) if self.lengths[self.right[k][i]] < lk)

    def left_descents(self, k: int) -> frozenset[int]:
        lk = self.lengths[k]
        return frozenset(i + 1 for i in range(self.n) if self.lengths[self.left[k][i]] < lk)

    def descents(self, k: int, side: str = "left") -> frozenset[int]:
        return self.left_descents(k) if side == "left" else self.right_descents(k)

    def has_left_descent(self, k: int, i: int) -> bool:
        return self.lengths[self.left[k][i - 1]] < self.lengths[k]

    def has_right_descent(self, k: int, i: int) -> bool:
        return self.lengths[self.right[k][i - 1]] < self.lengths[k]

    def first_left_descent(self, k: int) -> int:
        """Least i with s_i in D_L(k); the first letter of the canonical word."""
        return self.words[k][0]

    # -- reduced words
    def all_reduced_words(self, k: int) -> list[Word]:
        return self._reduced_words(k)

    @lru_cache(maxsize=None)
    def _reduced_words(self, k: int) -> list[Word]:
        if k == 0:
            return [()]
        out = []
        for i in sorted(self.right_descents(k)):
            out.extend(w + (i,) for w in self._reduced_words(self.right[k][i - 1]))
        out.sort()
        return out

    # -- Bruhat order
    def bruhat_leq(self, u: int, w: int) -> bool:
        """u <= w, by the lifting property along least left descents."""
        lu, lw = self.lengths, self.lengths
        while True:
            if u == 0:
                return True
            if lu[u] > lw[w]:
                return False
            if lu[u] == lw[w]:
                return u == w
            i = self.words[w][0] - 1
            sw = self.left[w][i]
            su = self.left[u][i]
            if self.lengths[su] < self.lengths[u]:
                u = su
            w = sw

    def bruhat_leq_subword(self, u: int, w: int) -> bool:
        """Subword-property check; used as an oracle for :meth:`bruhat_leq`."""
        ww = self.words[w]
        return any(is_subword(r, ww) for r in self.all_reduced_words(u))

    @lru_cache(maxsize=None)
    def lower_ideal(self, w: int) -> frozenset[int]:
        """All u <= w, from [e, w] = [e, s w] union s[e, s w] for a left descent s."""
        if w == 0:
            return frozenset((0,))
        i = self.words[w][0] - 1
        prev = self.lower_ideal(self.left[w][i])
        return prev | frozenset(self.left[x][i] for x in prev)

    def interval(self, v: int, w: int) -> list[int]:
        return sorted(x for x in self.lower_ideal(w) if self.bruhat_leq(v, x))

    # -- roots
    @cached_property
    def reflection_of_root(self) -> list[int]:
        """Index of s_beta for each positive root beta (same order as datum.positive_roots)."""
        out = []
        for word, i in self.datum.root_origin:
            x = self.from_word(word)
            out.append(self.mul(self.right[x][i - 1], self.inv[x]))
        return out

    @lru_cache(maxsize=None)
    def root_action(self, k: int) -> tuple[tuple[int, int], ...]:
        """For each positive root beta: (index, sign) of w(beta)."""
        mat = self.matrices[k]
        d = self.datum
        return tuple(d.root_lookup(_matvec(mat, r)) for r in d.positive_roots)

    def inversion_set(self, k: int) -> list[int]:
        """Positive-root indices of Phi+ cap w(Phi-), i.e. beta > 0 with w^{-1}(beta) < 0."""
        act = self.root_action(self.inv[k])
        out = [b for b, (_, sg) in enumerate(act) if sg < 0]
        if len(out) != self.lengths[k]:
            raise InvariantViolation("inversion set size differs from length")
        return out

    def act(self, k: int, v):
        return _matvec(self.matrices[k], v)

    @lru_cache(maxsize=None)
    def up_edges(self, v: int) -> tuple[tuple[int, int], ...]:
        """Pairs (w, beta) with w = v s_beta and l(w) = l(v) + 1."""
        lv = self.lengths[v]
        out = []
        for b, r in enumerate(self.reflection_of_root):
            w = self.mul(v, r)
            if self.lengths[w] == lv + 1:
                out.append((w, b))
        return tuple(out)

    @lru_cache(maxsize=None)
    def down_edges(self, w: int) -> tuple[tuple[int, int], ...]:
        """Pairs (v, beta) with w = v s_beta and l(v) = l(w) - 1."""
        lw = self.lengths[w]
        out = []
        for b, r in enumerate(self.reflection_of_root):
            v = self.mul(w, r)
            if self.lengths[v] == lw - 1:
                out.append((v, b))
        return tuple(out)

    # -- parabolic
    def minimal_coset_reps(self, J) -> list[int]:
        J = set(J)
        return [k for k in range(self.order) if not (self.right_descents(k) & J)]

    def parabolic_subgroup(self, J) -> list[int]:
        J = sorted(set(J))
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for j in J:
                    y = self.right[x][j - 1]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def longest_of(self, J) -> int:
        sub = self.parabolic_subgroup(J)
        return max(sub, key=lambda k: self.lengths[k])

    def elements_by_length(self) -> list[int]:
        return list(range(self.order))


_EXCEPTIONAL_ORDERS = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                      ("F", 4): 1152, ("G", 2): 12, ("H", 3): 120, ("H", 4): 14400}


def group_order(datum: RootDatum) -> int:
    """|W| from the classification, without enumerating the group."""
    f, n = datum.family, datum.n
    if f == "A":
        return factorial(n + 1)
    if f in ("B", "C"):
        return 2 ** n * factorial(n)
    if f == "D":
        return 2 ** (n - 1) * factorial(n)
    if f.startswith("I2"):
        return 2 * datum.m
    return _EXCEPTIONAL_ORDERS[(f, n)]


@lru_cache(maxsize=None)
def generate(datum: RootDatum) -> GroupTable:
    return GroupTable(datum)


def subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        yield from combinations(items, r)


__all__ = [
    "WeylElement", "GroupTable", "generate", "group_order", "is_reduced", "is_subword",
    "group_cap", "GROUP_CAP_ENV", "DEFAULT_GROUP_CAP",
]
