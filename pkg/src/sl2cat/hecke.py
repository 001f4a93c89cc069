"""Permutation modules M^i of the Hecke algebra of S_n and their KL bases.

Convention: quadratic relation (H_s + q)(H_s - q^-1) = 0, with H_s acting by
q^-1 on the trivial-type generator M_e of M^i. Basis elements M_x are indexed
by minimal coset representatives x of S_n / W_i; internally every x is
identified with its sequence a(x), which makes the action of H_j local:

    a_j = a_{j+1}          H_j M_x = q^-1 M_x
    a_j = 1, a_{j+1} = 0   H_j M_x = M_{s_j x}
    a_j = 0, a_{j+1} = 1   H_j M_x = M_{s_j x} + (q^-1 - q) M_x
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from .laurent import ONE, ZERO, LaurentPoly, Scalar, q, qinv, qpow
from .linalg import LMatrix
from .symgroup import (
    Perm,
    coset_of_seq,
    seq_length,
    seq_of_coset,
    seqs_of_weight,
)

_Q_DIFF = qinv - q  # q^-1 - q


class PermModuleElt:
    """Element of M^i, stored as {sequence a(x): coefficient}."""

    __slots__ = ("n", "i", "coeffs")

    def __init__(self, n: int, i: int, coeffs: Mapping | None = None):
        self.n = n
        self.i = i
        c = {}
        for key, v in (coeffs or {}).items():
            a = _as_seq(key, i)
            if len(a) != n or sum(a) != i:
                raise ValueError(f"{key} is not a basis index of M^{i} for n={n}")
            v = LaurentPoly.coerce(v)
            if v:
                c[a] = c.get(a, ZERO) + v
        self.coeffs = {a: v for a, v in c.items() if v}

    @classmethod
    def basis(cls, n: int, i: int, x) -> "PermModuleElt":
        return cls(n, i, {_as_seq(x, i): ONE})

    def __getitem__(self, x) -> LaurentPoly:
        return self.coeffs.get(_as_seq(x, self.i), ZERO)

    def __add__(self, other: "PermModuleElt") -> "PermModuleElt":
        self._check(other)
        c = dict(self.coeffs)
        for a, v in other.coeffs.items():
            c[a] = c.get(a, ZERO) + v
        return PermModuleElt(self.n, self.i, c)

    def __sub__(self, other: "PermModuleElt") -> "PermModuleElt":
        return self + other.scale(-1)

    def scale(self, s: Scalar) -> "PermModuleElt":
        s = LaurentPoly.coerce(s)
        return PermModuleElt(self.n, self.i, {a: v * s for a, v in self.coeffs.items()})

    def bar_coeffs(self) -> "PermModuleElt":
        return PermModuleElt(self.n, self.i, {a: v.bar() for a, v in self.coeffs.items()})

    def by_perm(self) -> dict:
        return {coset_of_seq(a): v for a, v in self.coeffs.items()}

    def _check(self, other):
        if (self.n, self.i) != (other.n, other.i):
            raise ValueError("elements of different modules")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PermModuleElt)
            and (self.n, self.i) == (other.n, other.i)
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        terms = [f"({v})M{coset_of_seq(a).images}" for a, v in sorted(self.coeffs.items())]
        return " + ".join(terms) or "0"


def _as_seq(x, i: int) -> tuple:
    if isinstance(x, Perm):
        return seq_of_coset(x, i)
    return tuple(x)


def act_gen(j: int, v: PermModuleElt, inverse: bool = False) -> PermModuleElt:
    """H_j v, or H_j^-1 v = (H_j + q - q^-1) v."""
    n = v.n
    if not 1 <= j <= n - 1:
        raise ValueError(f"generator index {j} out of range for n={n}")
    out: dict = {}

    def add(a, c):
        out[a] = out.get(a, ZERO) + c

    for a, c in v.coeffs.items():
        x, y = a[j - 1], a[j]
        if x == y:
            add(a, c * qinv)
        else:
            b = a[: j - 1] + (y, x) + a[j + 1:]
            add(b, c)
            if x == 0:
                add(a, c * _Q_DIFF)
        if inverse:
            add(a, c * (q - qinv))
    return PermModuleElt(n, v.i, out)


def act_word(word, v: PermModuleElt, inverse: bool = False) -> PermModuleElt:
    """H_{w_1} ... H_{w_k} v (rightmost factor acts first)."""
    for j in reversed(tuple(word)):
        v = act_gen(j, v, inverse)
    return v


def reduced_word_of_seq(a) -> tuple:
    """Reduced word of the minimal x with a(x) = a."""
    return coset_of_seq(a).reduced_word()


@lru_cache(maxsize=None)
def _bar_basis(n: int, i: int, a: tuple) -> PermModuleElt:
    # M_x = H_x M_e, so bar(M_x) = H_{s_1}^-1 ... H_{s_k}^-1 M_e
    e = PermModuleElt.basis(n, i, (1,) * i + (0,) * (n - i))
    return act_word(reduced_word_of_seq(a), e, inverse=True)


def bar_involution(v: PermModuleElt) -> PermModuleElt:
    out = PermModuleElt(v.n, v.i)
    for a, c in v.coeffs.items():
        out = out + _bar_basis(v.n, v.i, a).scale(c.bar())
    return out


def _split(p: LaurentPoly, sign: str) -> LaurentPoly:
    if sign == "positive":
        return LaurentPoly({e: c for e, c in p.coeffs().items() if e > 0})
    return LaurentPoly({e: c for e, c in p.coeffs().items() if e < 0})


@lru_cache(maxsize=None)
def kl_basis(n: int, i: int, sign: str = "positive") -> dict:
    """Self-dual KL basis of M^i: {sequence: element}.

    positive: M_x + sum_{y<x} qZ[q] M_y; negative: the q^-1 Z[q^-1] version.
    """
    sign = _norm_sign(sign)
    seqs = seqs_of_weight(n, i)
    out = {}
    for a in seqs:
        p = {a: ONE}
        # process lower elements from long to short: coefficient of M_z in
        # bar(sum p_y M_y) only involves y >= z
        lower = sorted(
            (b for b in seqs if seq_length(b) < seq_length(a)),
            key=seq_length,
            reverse=True,
        )
        for z in lower:
            r = ZERO
            for y, py in p.items():
                r = r + py.bar() * _bar_basis(n, i, y)[z]
            # need p_z - bar(p_z) = r with p_z in the chosen half
            if r.bar() != -r:
                raise ArithmeticError(f"KL solver: right-hand side not antisymmetric at {z}")
            pz = _split(r, sign)
            if pz:
                p[z] = pz
        v = PermModuleElt(n, i, p)
        if bar_involution(v) != v:
            raise ArithmeticError("KL solver produced a non self-dual element")
        out[a] = v
    return out


def _norm_sign(sign: str) -> str:
    s = sign.lower()
    if s in ("positive", "pos", "+"):
        return "positive"
    if s in ("negative", "neg", "-"):
        return "negative"
    raise ValueError(f"sign must be positive or negative, got {sign}")


def longest_word(n: int) -> tuple:
    """(s_1)(s_2 s_1)(s_3 s_2 s_1)..."""
    w = []
    for k in range(1, n):
        w.extend(range(k, 0, -1))
    return tuple(w)


def l_w0_parabolic(n: int, i: int) -> int:
    """Length of the longest element of W_i = S_i x S_{n-i}."""
    return (i * (i - 1) + (n - i) * (n - i - 1)) // 2


def twist(v: PermModuleElt, word: tuple | None = None) -> PermModuleElt:
    """q^{l(w0^i)} H_{w0} v."""
    word = longest_word(v.n) if word is None else word
    return act_word(word, v).scale(qpow(l_w0_parabolic(v.n, v.i)))


def untwist(v: PermModuleElt) -> PermModuleElt:
    """Inverse of twist: q^{-l(w0^i)} H_{w0}^-1 v."""
    # H_{w0}^-1 = H_{s_k}^-1 ... H_{s_1}^-1 for w0 = s_1 ... s_k
    word = longest_word(v.n)
    w = v
    for j in word:
        w = act_gen(j, w, inverse=True)
    return w.scale(qpow(-l_w0_parabolic(v.n, v.i)))


def alpha(v: PermModuleElt):
    """M_x^i -> v_{a(x)} in V_1^{tensor n}."""
    from .uqrep import TensorVector

    return TensorVector((1,) * v.n, dict(v.coeffs))


def basis_matrix(n: int, i: int, elements: Mapping) -> LMatrix:
    """Columns = given elements over the standard basis, both indexed by sequences."""
    seqs = seqs_of_weight(n, i)
    return LMatrix.from_columns(seqs, list(elements), {k: e.coeffs for k, e in elements.items()})


def kl_matrix(n: int, i: int, sign: str = "positive") -> LMatrix:
    basis = kl_basis(n, i, sign)
    seqs = seqs_of_weight(n, i)
    return basis_matrix(n, i, {a: basis[a] for a in seqs})


def kl_report(n: int, i: int, sign: str = "positive") -> dict:
    seqs = seqs_of_weight(n, i)
    m = kl_matrix(n, i, sign)
    cols = [coset_of_seq(a).to_json() for a in seqs]
    return {
        "n": n,
        "i": i,
        "sign": _norm_sign(sign),
        "index": [{"perm": c, "seq": list(a)} for c, a in zip(cols, seqs)],
        "matrix": [[m[r, c].to_json() for c in seqs] for r in seqs],
    }
