"""Symmetric group combinatorics in type A.

Permutations are stored in one-line notation with values 1..n. Products
compose right to left: (x * y)(j) = x(y(j)). The simple reflection s_j swaps
j and j+1, so s_j * x swaps the values j, j+1 in the one-line word of x and
x * s_j swaps positions j, j+1.

A parabolic subgroup is described by the set of simple reflections that
generate it. W_i (stabilizer of the i-th fundamental weight) is generated by
every s_j with j != i; W_{i,i+1} drops both s_i and s_{i+1}.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from math import comb
from typing import Iterable, Sequence

Seq01 = tuple  # tuple of 0/1 entries


class Perm:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        im = tuple(images)
        if sorted(im) != list(range(1, len(im) + 1)):
            raise ValueError(f"not a permutation of 1..{len(im)}: {im}")
        self.images = im
        self._hash = hash(im)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, n: int, j: int) -> "Perm":
        if not 1 <= j <= n - 1:
            raise ValueError(f"simple reflection s_{j} not in S_{n}")
        im = list(range(1, n + 1))
        im[j - 1], im[j] = im[j], im[j - 1]
        return cls(im)

    @classmethod
    def longest(cls, n: int) -> "Perm":
        return cls(range(n, 0, -1))

    @classmethod
    def from_word(cls, n: int, word: Sequence[int]) -> "Perm":
        """s_{w_1} s_{w_2} ... s_{w_k}."""
        x = cls.identity(n)
        for j in word:
            x = x * cls.simple(n, j)
        return x

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        if self.n != other.n:
            raise ValueError("permutations of different size")
        return Perm(self.images[k - 1] for k in other.images)

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for pos, v in enumerate(self.images, 1):
            inv[v - 1] = pos
        return Perm(inv)

    def length(self) -> int:
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    def left_mul_simple(self, j: int) -> "Perm":
        return Perm(j + 1 if v == j else j if v == j + 1 else v for v in self.images)

    def reduced_word(self) -> tuple:
        """Lexicographically first reduced word (w = s_{a_1} ... s_{a_k})."""
        word = []
        x = self
        # peel left descents: s_j x < x iff j+1 appears before j
        while True:
            pos = {v: p for p, v in enumerate(x.images)}
            for j in range(1, x.n):
                if pos[j + 1] < pos[j]:
                    word.append(j)
                    x = x.left_mul_simple(j)
                    break
            else:
                break
        return tuple(word)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: "Perm") -> bool:
        return (self.length(), self.reduced_word()) < (other.length(), other.reduced_word())

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return "Perm(" + ",".join(map(str, self.images)) + ")"

    def to_json(self) -> list:
        return list(self.images)


class Composition(tuple):
    """Composition d = (d_1, ..., d_r) of n with positive parts."""

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if not parts or any(p <= 0 for p in parts):
            raise ValueError(f"composition needs positive parts: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def blocks(self) -> list:
        """Position ranges (0-based, half open) of the blocks."""
        out, s = [], 0
        for d in self:
            out.append(range(s, s + d))
            s += d
        return out

    def generators(self) -> frozenset:
        """Simple reflections generating S_d = S_{d_1} x ... x S_{d_r}."""
        gens, s = set(), 0
        for d in self:
            gens.update(range(s + 1, s + d))
            s += d
        return frozenset(gens)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        return cls(int(t) for t in text.split(",") if t.strip())


def compositions(n: int) -> list:
    """All compositions of n, in lexicographic order."""
    if n == 0:
        return []
    out = []
    for mask in range(2 ** (n - 1)):
        parts, cur = [], 1
        for k in range(n - 1):
            if mask >> (n - 2 - k) & 1:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        parts.append(cur)
        out.append(Composition(parts))
    return sorted(out)


# -- parabolic subgroups as generator sets

def parabolic_i(n: int, i: int) -> frozenset:
    """W_i = <s_j | j != i>, the stabilizer of the i-th fundamental weight."""
    return frozenset(j for j in range(1, n) if j != i)


def parabolic_pair(n: int, i: int, k: int) -> frozenset:
    """W_{i,k} = <s_j | j not in {i, k}>; used with k = i +- 1."""
    return frozenset(j for j in range(1, n) if j not in (i, k))


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple:
    return tuple(Perm(p) for p in permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def subgroup_elements(n: int, gens: frozenset) -> tuple:
    """Elements of the subgroup generated by the listed simple reflections."""
    e = Perm.identity(n)
    seen = {e}
    frontier = [e]
    simples = [Perm.simple(n, j) for j in sorted(gens)]
    while frontier:
        nxt = []
        for x in frontier:
            for s in simples:
                y = x * s
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def is_min_coset_rep(x: Perm, gens: frozenset) -> bool:
    """x is minimal in x W_I iff x s_j > x for every generator s_j."""
    im = x.images
    return all(im[j - 1] < im[j] for j in gens)


@lru_cache(maxsize=None)
def min_coset_reps(n: int, gens: frozenset) -> tuple:
    """Minimal length representatives of S_n / W_I, sorted by (length, word)."""
    reps = [x for x in all_perms(n) if is_min_coset_rep(x, gens)]
    return tuple(sorted(reps, key=lambda x: (x.length(), x.reduced_word())))


def min_coset_reps_i(n: int, i: int) -> tuple:
    if i < 0 or i > n:
        return ()
    return min_coset_reps(n, parabolic_i(n, i))


def min_rep(x: Perm, gens: frozenset) -> Perm:
    """Shortest element of the coset x W_I (sort values inside each block)."""
    im = list(x.images)
    for blk in _gen_blocks(x.n, gens):
        vals = sorted(im[p] for p in blk)
        for p, v in zip(blk, vals):
            im[p] = v
    return Perm(im)


def _gen_blocks(n: int, gens: frozenset) -> list:
    """Maximal runs of consecutive positions tied together by the generators."""
    blocks, cur = [], [0]
    for p in range(1, n):
        if p in gens:  # s_p joins positions p-1 and p (0-based)
            cur.append(p)
        else:
            blocks.append(cur)
            cur = [p]
    blocks.append(cur)
    return blocks


# -- sequences

def dominant_seq(n: int, i: int) -> Seq01:
    return (1,) * i + (0,) * (n - i)


def seq_of_coset(x: Perm, i: int, check: bool = True) -> Seq01:
    """a(x) with a(x)_{x(j)} = (1^i 0^{n-i})_j."""
    n = x.n
    if check and not is_min_coset_rep(x, parabolic_i(n, i)):
        raise ValueError(f"{x} is not a minimal coset representative for W_{i}")
    a = [0] * n
    for j in range(1, i + 1):
        a[x(j) - 1] = 1
    return tuple(a)


def coset_of_seq(a: Sequence[int]) -> Perm:
    """Inverse of seq_of_coset: the minimal x with a(x) = a."""
    ones = [p + 1 for p, v in enumerate(a) if v == 1]
    zeros = [p + 1 for p, v in enumerate(a) if v == 0]
    if len(ones) + len(zeros) != len(a):
        raise ValueError(f"not a 0/1 sequence: {a}")
    return Perm(ones + zeros)


def seq_length(a: Sequence[int]) -> int:
    """l(x) for the minimal x with a(x) = a: pairs p < r with a_p = 0, a_r = 1."""
    zeros = 0
    total = 0
    for v in a:
        if v == 0:
            zeros += 1
        else:
            total += zeros
    return total


def seqs_of_weight(n: int, i: int) -> list:
    """Weight-i sequences in the order of min_coset_reps_i."""
    return [seq_of_coset(x, i, check=False) for x in min_coset_reps_i(n, i)]


def all_seqs(n: int) -> list:
    return [a for i in range(n + 1) for a in seqs_of_weight(n, i)]


def reverse_seq(a: Sequence[int]) -> Seq01:
    """a(w0 x) = reverse of a(x)."""
    return tuple(reversed(a))


def block_weights(a: Sequence[int], d: Sequence[int]) -> tuple:
    if len(a) != sum(d):
        raise ValueError("sequence length does not match composition")
    out, s = [], 0
    for dj in d:
        out.append(sum(a[s:s + dj]))
        s += dj
    return tuple(out)


def is_admissible(a: Sequence[int], d: Sequence[int]) -> bool:
    """Weakly increasing inside every block of d."""
    s = 0
    for dj in d:
        blk = a[s:s + dj]
        if any(blk[k] > blk[k + 1] for k in range(len(blk) - 1)):
            return False
        s += dj
    return True


def admissible_seq(b: Sequence[int], d: Sequence[int]) -> Seq01:
    """The in-block increasing sequence with block weights b."""
    out = []
    for bj, dj in zip(b, d):
        out.extend([0] * (dj - bj) + [1] * bj)
    return tuple(out)


def block_weight_vectors(d: Sequence[int], i: int | None = None) -> list:
    """All b with 0 <= b_j <= d_j (and sum i if given), lexicographic."""
    vs = [tuple(v) for v in product(*[range(dj + 1) for dj in d])]
    if i is not None:
        vs = [v for v in vs if sum(v) == i]
    return vs


# -- Bruhat order and double cosets

def bruhat_leq(x: Perm, y: Perm) -> bool:
    """Tableau criterion: compare sorted prefixes of the one-line words."""
    if x.n != y.n:
        raise ValueError("permutations of different size")
    for k in range(1, x.n):
        a = sorted(x.images[:k])
        b = sorted(y.images[:k])
        if any(u > v for u, v in zip(a, b)):
            return False
    return True


def bruhat_leq_subword(x: Perm, y: Perm) -> bool:
    """Subword criterion on a reduced word of y (slow reference version)."""
    if x.n != y.n:
        raise ValueError("permutations of different size")
    word = y.reduced_word()
    target = x
    lx = x.length()
    n = x.n
    for mask in range(2 ** len(word)):
        sub = [word[k] for k in range(len(word)) if mask >> k & 1]
        if len(sub) < lx:
            continue
        if Perm.from_word(n, sub) == target:
            return True
    return False


def longest_double_coset_reps(n: int, d: Sequence[int], i: int) -> list:
    """Longest element x W_i-minimal-ish rep per double coset S_d \\ S_n / W_i.

    Returned as (perm, sequence) pairs; perm is the longest element of the
    double coset and the sequence a(x) is read from its W_i-coset.
    """
    if i < 0 or i > n:
        return []
    d = Composition(d)
    left = subgroup_elements(n, d.generators())
    right = subgroup_elements(n, parabolic_i(n, i))
    seen = set()
    out = []
    for x in all_perms(n):
        if x in seen:
            continue
        dc = {u * x * v for u in left for v in right}
        seen |= dc
        top = max(dc, key=lambda y: (y.length(), y.images))
        a = seq_of_coset(min_rep(top, parabolic_i(n, i)), i)
        out.append((top, a))
    out.sort(key=lambda t: t[1], reverse=True)
    return out


def poincare_coset(n: int, gens: frozenset) -> dict:
    """sum over minimal reps w of q^{2 l(w)}, as {exponent: count}."""
    out: dict = {}
    for w in min_coset_reps(n, gens):
        e = 2 * w.length()
        out[e] = out.get(e, 0) + 1
    return out


def binomial(n: int, i: int) -> int:
    return comb(n, i) if 0 <= i <= n else 0
