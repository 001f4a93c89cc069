"""Representations of U_q(sl_2): V_n, tensor products V_d, forms and bases.

A TensorVector stores coefficients against either the standard basis
v_a = v_{a_1} (x) ... (x) v_{a_r} or the dual standard basis v^a, where
v_k = [n, k] v^k in a single factor V_n. Single-factor formulas:

    K v_k = q^{2k-n} v_k
    E v_k = [k+1] v_{k+1},   F v_k = [n-k+1] v_{k-1}
    E v^k = [n-k] v^{k+1},   F v^k = [k] v^{k-1}

On tensors, Delta(E) = 1 (x) E + E (x) K^-1 and Delta(F) = K (x) F + F (x) 1,
iterated: E sits in slot j with K^-1 in every later slot, F sits in slot j
with K in every earlier slot. Delta'(E) = 1 (x) E + E (x) K and
Delta'(F) = K^-1 (x) F + F (x) 1.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Mapping, Sequence

from .laurent import (
    ONE,
    ZERO,
    LaurentPoly,
    Scalar,
    q,
    qpow,
    quantum_binomial,
    quantum_factorial,
    quantum_int,
)
from .linalg import LMatrix

GENERATORS = ("E", "F", "K", "Kinv")
COPRODUCTS = ("delta", "delta_prime")


class TensorVector:
    """Element of V_d = V_{d_1} (x) ... (x) V_{d_r}."""

    __slots__ = ("shape", "coeffs", "dual")

    def __init__(self, shape: Sequence[int], coeffs: Mapping | None = None, dual: bool = False):
        self.shape = tuple(int(d) for d in shape)
        if not self.shape or any(d < 1 for d in self.shape):
            raise ValueError(f"bad shape {shape}")
        self.dual = dual
        c: dict = {}
        for a, v in (coeffs or {}).items():
            a = tuple(a)
            if len(a) != len(self.shape) or any(not 0 <= x <= d for x, d in zip(a, self.shape)):
                raise ValueError(f"index {a} out of range for shape {self.shape}")
            v = LaurentPoly.coerce(v)
            if v:
                c[a] = c.get(a, ZERO) + v
        self.coeffs = {a: v for a, v in c.items() if v}

    @classmethod
    def basis(cls, shape, a, dual: bool = False) -> "TensorVector":
        return cls(shape, {tuple(a): ONE}, dual)

    def _new(self, coeffs) -> "TensorVector":
        return TensorVector(self.shape, coeffs, self.dual)

    def __getitem__(self, a) -> LaurentPoly:
        return self.coeffs.get(tuple(a), ZERO)

    def __add__(self, other: "TensorVector") -> "TensorVector":
        self._check(other)
        c = dict(self.coeffs)
        for a, v in other.coeffs.items():
            c[a] = c.get(a, ZERO) + v
        return self._new(c)

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + other.scale(-1)

    def scale(self, s: Scalar) -> "TensorVector":
        s = LaurentPoly.coerce(s)
        return self._new({a: v * s for a, v in self.coeffs.items()})

    def bar_coeffs(self) -> "TensorVector":
        return self._new({a: v.bar() for a, v in self.coeffs.items()})

    def at_one(self) -> dict:
        return {a: v.at_one() for a, v in self.coeffs.items() if v.at_one()}

    def weight(self) -> int | None:
        ws = {sum(a) for a in self.coeffs}
        return ws.pop() if len(ws) == 1 else None

    def _check(self, other):
        if self.shape != other.shape or self.dual != other.dual:
            raise ValueError("vectors live in different spaces or coordinates")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorVector)
            and self.shape == other.shape
            and self.dual == other.dual
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        tag = "v^" if self.dual else "v_"
        terms = [f"({v}){tag}{a}" for a, v in sorted(self.coeffs.items(), reverse=True)]
        return " + ".join(terms) or "0"

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "coordinates": "dual" if self.dual else "standard",
            "coeffs": {"".join(map(str, a)) if max(self.shape) < 10 else ",".join(map(str, a)): v.to_json()
                       for a, v in sorted(self.coeffs.items(), reverse=True)},
        }


def basis_indices(shape: Sequence[int], weight: int | None = None) -> list:
    """Multi-indices of V_shape (optionally of fixed weight), reverse lexicographic."""
    idx = [tuple(a) for a in product(*[range(d + 1) for d in shape])]
    if weight is not None:
        idx = [a for a in idx if sum(a) == weight]
    return sorted(idx, reverse=True)


# -- single factor actions

def _k_exp(k: int, n: int) -> int:
    return 2 * k - n


def _single(gen: str, n: int, k: int, dual: bool):
    """(new index, coefficient) for a generator on one factor, or None."""
    if gen == "E":
        if k == n:
            return None
        return k + 1, quantum_int(n - k) if dual else quantum_int(k + 1)
    if gen == "F":
        if k == 0:
            return None
        return k - 1, quantum_int(k) if dual else quantum_int(n - k + 1)
    if gen == "K":
        return k, qpow(_k_exp(k, n))
    if gen == "Kinv":
        return k, qpow(-_k_exp(k, n))
    raise ValueError(f"unknown generator {gen}")


def act(gen: str, v: TensorVector, coproduct: str = "delta") -> TensorVector:
    """Action of E, F, K or K^-1 on V_d through Delta or Delta'."""
    if coproduct not in COPRODUCTS:
        raise ValueError(f"unknown coproduct {coproduct}")
    shape = v.shape
    out: dict = {}
    if gen in ("K", "Kinv"):
        for a, c in v.coeffs.items():
            e = sum(_k_exp(x, d) for x, d in zip(a, shape))
            out[a] = c * qpow(e if gen == "K" else -e)
        return v._new(out)
    if gen not in ("E", "F"):
        raise ValueError(f"unknown generator {gen}")
    prime = coproduct == "delta_prime"
    for a, c in v.coeffs.items():
        kexps = [_k_exp(x, d) for x, d in zip(a, shape)]
        for j, (x, d) in enumerate(zip(a, shape)):
            r = _single(gen, d, x, v.dual)
            if r is None:
                continue
            nx, coef = r
            if gen == "E":
                # Delta: K^-1 on later slots; Delta': K on later slots
                s = sum(kexps[j + 1:])
                shift = s if prime else -s
            else:
                # Delta: K on earlier slots; Delta': K^-1 on earlier slots
                s = sum(kexps[:j])
                shift = -s if prime else s
            b = a[:j] + (nx,) + a[j + 1:]
            out[b] = out.get(b, ZERO) + c * coef.shift(shift)
    return v._new(out)


def act_word(word: Sequence[str], v: TensorVector, coproduct: str = "delta") -> TensorVector:
    """Apply generators right to left: word ('E', 'F') means E(F(v))."""
    for g in reversed(tuple(word)):
        v = act(g, v, coproduct)
    return v


def act_two_factor(gen: str, v: TensorVector, split: int, coproduct: str = "delta") -> TensorVector:
    """Act by regarding V_d as V_{d[:split]} (x) V_{d[split:]} with the binary coproduct.

    Used to test that the bracketing of the iterated coproduct is irrelevant.
    """
    left_shape, right_shape = v.shape[:split], v.shape[split:]
    prime = coproduct == "delta_prime"
    out = TensorVector(v.shape, dual=v.dual)
    for a, c in v.coeffs.items():
        al, ar = a[:split], a[split:]
        L = TensorVector.basis(left_shape, al, v.dual)
        R = TensorVector.basis(right_shape, ar, v.dual)
        if gen in ("K", "Kinv"):
            terms = [(act(gen, L, coproduct), act(gen, R, coproduct))]
        elif gen == "E":
            # 1 (x) E + E (x) K^-1   (Delta')  1 (x) E + E (x) K
            terms = [(L, act("E", R, coproduct)), (act("E", L, coproduct), act("K" if prime else "Kinv", R))]
        elif gen == "F":
            # K (x) F + F (x) 1      (Delta')  K^-1 (x) F + F (x) 1
            terms = [(act("Kinv" if prime else "K", L), act("F", R, coproduct)), (act("F", L, coproduct), R)]
        else:
            raise ValueError(gen)
        for x, y in terms:
            for bl, cl in x.coeffs.items():
                for br, cr in y.coeffs.items():
                    out = out + TensorVector(v.shape, {bl + br: c * cl * cr}, v.dual)
    return out


def operator_matrix(gen: str, shape: Sequence[int], coproduct: str = "delta", dual: bool = False) -> LMatrix:
    idx = basis_indices(shape)
    cols = {a: act(gen, TensorVector.basis(shape, a, dual), coproduct).coeffs for a in idx}
    return LMatrix.from_columns(idx, idx, cols)


def divided_power(gen: str, k: int, v: TensorVector, coproduct: str = "delta") -> TensorVector:
    """E^(k) v = E^k v / [k]!, with exact division asserted."""
    w = v
    for _ in range(k):
        w = act(gen, w, coproduct)
    f = quantum_factorial(k)
    return w._new({a: c.divmod_exact(f) for a, c in w.coeffs.items()})


# -- coordinates

def dual_base_change(n: int) -> LMatrix:
    """diag([n, k]): dual coordinates -> standard coordinates in V_n."""
    return LMatrix(range(n + 1), range(n + 1), {(k, k): quantum_binomial(n, k) for k in range(n + 1)})


def _dual_factor(shape, a) -> LaurentPoly:
    r = ONE
    for x, d in zip(a, shape):
        r = r * quantum_binomial(d, x)
    return r


def to_dual(v: TensorVector) -> TensorVector:
    """Re-express a standard-coordinate vector in the dual standard basis."""
    if v.dual:
        return v
    return TensorVector(v.shape, {a: c * _dual_factor(v.shape, a) for a, c in v.coeffs.items()}, dual=True)


def to_standard(v: TensorVector) -> TensorVector:
    """Dual coordinates -> standard coordinates; the division must be exact."""
    if not v.dual:
        return v
    return TensorVector(v.shape, {a: c.divmod_exact(_dual_factor(v.shape, a)) for a, c in v.coeffs.items()})


# -- forms and involutions on a single V_n

def _single_shape(v: TensorVector) -> int:
    if len(v.shape) != 1:
        raise ValueError("defined on a single factor V_n only")
    return v.shape[0]


def semilinear_form(u: TensorVector, v: TensorVector) -> LaurentPoly:
    """<v_k, v_l> = delta_{kl} q^{k(n-k)} [n, k]; antilinear in u."""
    n = _single_shape(u)
    if _single_shape(v) != n:
        raise ValueError("vectors in different modules")
    u, v = to_standard(u), to_standard(v)
    r = ZERO
    for (k,), c in u.coeffs.items():
        d = v[(k,)]
        if d:
            r = r + c.bar() * d * qpow(k * (n - k)) * quantum_binomial(n, k)
    return r


def tau(gen: str, v: TensorVector) -> TensorVector:
    """tau(E) = q F K^-1, tau(F) = q E K, tau(K) = K^-1."""
    if gen == "E":
        return act("F", act("Kinv", v)).scale(q)
    if gen == "F":
        return act("E", act("K", v)).scale(q)
    if gen == "K":
        return act("Kinv", v)
    if gen == "Kinv":
        return act("K", v)
    raise ValueError(gen)


def sigma_n(v: TensorVector) -> TensorVector:
    """Linear map v_k -> v_{n-k}."""
    n = _single_shape(v)
    v = to_standard(v)
    return TensorVector((n,), {(n - k,): c for (k,), c in v.coeffs.items()})


def psi_n(v: TensorVector) -> TensorVector:
    """Antilinear map fixing every v_k."""
    _single_shape(v)
    v = to_standard(v)
    return v.bar_coeffs()


def pairing_form(u: TensorVector, v: TensorVector) -> LaurentPoly:
    """<v_a, v^b> = prod_i delta(a_i, b_{n-i+1}) on V_1^{(x) n} x (V_1^{(x) n})'.

    In V_1 the two bases agree numerically, so both arguments are read as
    coefficient vectors.
    """
    if u.shape != v.shape or any(d != 1 for d in u.shape):
        raise ValueError("pairing_form needs two vectors of V_1^{tensor n}")
    r = ZERO
    for a, c in u.coeffs.items():
        d = v[tuple(reversed(a))]
        if d:
            r = r + c * d
    return r


# -- Jones-Wenzl maps

def inv_minus(a: Sequence[int]) -> int:
    """#{i < j : a_i > a_j}."""
    return sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] > a[j])


def inv_plus(a: Sequence[int]) -> int:
    """#{i < j : a_i < a_j}."""
    return sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] < a[j])


@lru_cache(maxsize=None)
def _seqs_of_sum(n: int, k: int) -> tuple:
    return tuple(a for a in product((1, 0), repeat=n) if sum(a) == k)


def jw_include(v: TensorVector) -> TensorVector:
    """Blockwise i_{d_1} (x) ... (x) i_{d_r}: V_d -> V_1^{(x) n}.

    i_n(v_k) = sum_{|a| = k} q^{a^-} v_a. Input in any coordinates, output in
    standard coordinates.
    """
    v = to_standard(v)
    n = sum(v.shape)
    out: dict = {}
    for a, c in v.coeffs.items():
        pieces = [[(s, inv_minus(s)) for s in _seqs_of_sum(d, x)] for x, d in zip(a, v.shape)]
        for combo in product(*pieces):
            seq = tuple(x for s, _ in combo for x in s)
            e = sum(m for _, m in combo)
            out[seq] = out.get(seq, ZERO) + c.shift(e)
    return TensorVector((1,) * n, out)


def jw_project(v: TensorVector, shape: Sequence[int] | None = None) -> TensorVector:
    """Blockwise pi: V_1^{(x) n} -> V_d with v^a -> q^{-a^+} v^{|a|} per block.

    Output is returned in dual coordinates of V_d.
    """
    n = len(v.shape)
    shape = (n,) if shape is None else tuple(shape)
    if sum(shape) != n or any(d != 1 for d in v.shape):
        raise ValueError("jw_project needs a vector of V_1^{tensor n} and a composition of n")
    out: dict = {}
    for a, c in v.coeffs.items():  # v^a = v_a in V_1^{(x) n}
        idx, e, s = [], 0, 0
        for d in shape:
            blk = a[s:s + d]
            idx.append(sum(blk))
            e -= inv_plus(blk)
            s += d
        idx = tuple(idx)
        out[idx] = out.get(idx, ZERO) + c.shift(e)
    return TensorVector(shape, out, dual=True)


# -- canonical and dual canonical bases of V_1^{(x) n}

def canonical_basis(n: int) -> dict:
    """{sequence a: v_a^diamond} in standard coordinates.

    v^diamond_{a(w0 x)} = alpha(twist(positive KL basis element at x)).
    """
    from .hecke import kl_basis, twist
    from .symgroup import reverse_seq

    out = {}
    for i in range(n + 1):
        for a, m in kl_basis(n, i, "positive").items():
            out[reverse_seq(a)] = TensorVector((1,) * n, twist(m).coeffs)
    for a, v in out.items():
        _check_triangular(a, v, "negative")
    return out


def _check_triangular(a, v: TensorVector, half: str):
    if v[a] != ONE:
        raise ArithmeticError(f"canonical basis element at {a} has leading coefficient {v[a]}")
    for b, c in v.coeffs.items():
        if b == a:
            continue
        bad = any(e >= 0 for e in c.coeffs()) if half == "negative" else any(e <= 0 for e in c.coeffs())
        if bad:
            raise ArithmeticError(f"triangularity violated at ({a}, {b}): {c}")


def canonical_matrix(n: int, i: int) -> LMatrix:
    from .symgroup import seqs_of_weight

    seqs = seqs_of_weight(n, i)
    cb = canonical_basis(n)
    return LMatrix.from_columns(seqs, seqs, {a: cb[a].coeffs for a in seqs})


def reversal_matrix(n: int, i: int) -> LMatrix:
    """P with P[rev(a), a] = 1, mapping weight i to weight i (reversal keeps the weight)."""
    from .symgroup import reverse_seq, seqs_of_weight

    seqs = seqs_of_weight(n, i)
    return LMatrix(seqs, seqs, {(reverse_seq(a), a): ONE for a in seqs})


def dual_canonical_matrix(n: int, i: int) -> LMatrix:
    """Columns v^b_heartsuit in dual-standard coordinates, dual to the canonical basis.

    With C the canonical columns and P the reversal, <C e_a, D e_b> = delta
    reads C^T P D = P, so D = P (C^T)^-1 P (P is its own inverse).
    """
    c = canonical_matrix(n, i)
    p = reversal_matrix(n, i)
    return p @ c.transpose().inverse() @ p


def dual_canonical_basis(n: int) -> dict:
    """{sequence b: v^b_heartsuit} as TensorVectors in dual coordinates."""
    out = {}
    for i in range(n + 1):
        d = dual_canonical_matrix(n, i)
        for b in d.cols:
            out[b] = TensorVector((1,) * n, d.column(b), dual=True)
    return out


def dual_canonical_via_hecke(n: int) -> dict:
    """Second route: coefficient-wise bar of alpha(twist(negative KL at x)), x with a(w0 x) = b."""
    from .hecke import kl_basis, twist
    from .symgroup import reverse_seq

    out = {}
    for i in range(n + 1):
        for a, m in kl_basis(n, i, "negative").items():
            out[reverse_seq(a)] = TensorVector((1,) * n, twist(m).coeffs, dual=True).bar_coeffs()
    return out


def basis_report(n: int, dual: bool = False) -> dict:
    from .symgroup import seqs_of_weight

    blocks = []
    for i in range(n + 1):
        m = dual_canonical_matrix(n, i) if dual else canonical_matrix(n, i)
        seqs = seqs_of_weight(n, i)
        blocks.append({
            "weight": i,
            "index": [list(a) for a in seqs],
            "matrix": [[m[r, c].to_json() for c in seqs] for r in seqs],
        })
    return {
        "n": n,
        "basis": "dual_canonical" if dual else "canonical",
        "coordinates": "dual_standard" if dual else "standard",
        "layout": "rows index the standard basis, columns the distinguished basis",
        "blocks": blocks,
    }
