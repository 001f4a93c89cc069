"""Coinvariant algebra of S_n and its parabolic invariant subrings.

C = Q[x_1..x_n] / (positive degree symmetric polynomials), variables in degree
2. Basis: sub-staircase monomials x^a with a_k <= n - k. Normal forms come
from one Gaussian elimination per degree on the spanning set e_j * monomial
of the ideal, with non-staircase columns placed first so that they become
the pivots.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import flint

from .laurent import ONE, ZERO, LaurentPoly, qpow, quantum_binomial
from .linalg import LMatrix, Subspace, rank, rref
from .symgroup import (
    Perm,
    min_coset_reps,
    parabolic_i,
    parabolic_pair,
    subgroup_elements,
)

MAX_N = 5


def _monomials(n: int, d: int) -> list:
    """Exponent vectors of total degree d, in a fixed order."""
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for a in range(d, -1, -1):
        for rest in _monomials(n - 1, d - a):
            out.append((a,) + rest)
    return out


def _is_staircase(a: Sequence[int]) -> bool:
    n = len(a)
    return all(x <= n - 1 - k for k, x in enumerate(a))


def _poly_mul(p: dict, r: dict) -> dict:
    out: dict = {}
    for a, c in p.items():
        for b, d in r.items():
            m = tuple(x + y for x, y in zip(a, b))
            out[m] = out.get(m, 0) + c * d
    return {m: c for m, c in out.items() if c}


def elementary(n: int, j: int) -> dict:
    out = {}
    for s in combinations(range(n), j):
        out[tuple(1 if k in s else 0 for k in range(n))] = 1
    return out


def complete(n: int, j: int, nvars: int | None = None) -> dict:
    """h_j in the first `nvars` variables, as a polynomial in n variables."""
    m = n if nvars is None else nvars
    out = {}
    for a in _monomials(m, j):
        out[a + (0,) * (n - m)] = 1
    return out


class GradedCommAlgebra:
    """Coinvariant algebra with a staircase monomial basis.

    `mult[(i, j)]` is the product of basis elements i, j as {k: Fraction}.
    Degrees are doubled (variables sit in degree 2).
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        if n > MAX_N:
            raise ValueError(f"n={n} above the cap {MAX_N}; the algebra has dimension n!")
        self.n = n
        self.top = n * (n - 1) // 2
        self.basis = [a for d in range(self.top + 1) for a in _monomials(n, d) if _is_staircase(a)]
        self.index = {a: k for k, a in enumerate(self.basis)}
        self.degrees = [2 * sum(a) for a in self.basis]
        self._nf: dict = {}
        for d in range(self.top + 1):
            self._reduce_degree(d)
        self.mult = {}
        for i, a in enumerate(self.basis):
            for j in range(i, len(self.basis)):
                b = self.basis[j]
                prod_ = self.normal_form_monomial(tuple(x + y for x, y in zip(a, b)))
                self.mult[(i, j)] = self.mult[(j, i)] = prod_

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _reduce_degree(self, d: int):
        mons = _monomials(self.n, d)
        if d == 0:
            self._nf[mons[0]] = {self.index[mons[0]]: Fraction(1)}
            return
        # non-staircase first, so they are the pivot columns
        cols = [m for m in mons if not _is_staircase(m)] + [m for m in mons if _is_staircase(m)]
        cix = {m: k for k, m in enumerate(cols)}
        rows = []
        for j in range(1, min(d, self.n) + 1):
            e = elementary(self.n, j)
            for m in _monomials(self.n, d - j):
                p = _poly_mul(e, {m: 1})
                row = [0] * len(cols)
                for mm, c in p.items():
                    row[cix[mm]] += c
                rows.append(row)
        basis, pivots = rref(rows, len(cols)) if rows else ([], [])
        nonstair = sum(1 for m in mons if not _is_staircase(m))
        if sorted(pivots) != list(range(nonstair)):
            raise ArithmeticError(f"staircase monomials are not a basis in degree {d}")
        pivot_row = dict(zip(pivots, basis))
        for m in mons:
            if _is_staircase(m):
                self._nf[m] = {self.index[m]: Fraction(1)}
            else:
                row = pivot_row[cix[m]]
                # m = -(rest of row) modulo the ideal
                self._nf[m] = {
                    self.index[cols[k]]: -x for k, x in enumerate(row) if x and k >= nonstair
                }

    def normal_form_monomial(self, a: tuple) -> dict:
        if sum(a) > self.top:
            return {}
        return self._nf[a]

    def normal_form(self, poly: dict) -> list:
        """Coordinates of a polynomial {exponent: coeff} in the staircase basis."""
        v = [Fraction(0)] * self.dim
        for a, c in poly.items():
            for k, x in self.normal_form_monomial(tuple(a)).items():
                v[k] += c * x
        return v

    def multiply(self, u: Sequence, v: Sequence) -> list:
        out = [Fraction(0)] * self.dim
        for i, x in enumerate(u):
            if not x:
                continue
            for j, y in enumerate(v):
                if not y:
                    continue
                for k, z in self.mult[(i, j)].items():
                    out[k] += x * y * z
        return out

    def unit(self) -> list:
        v = [Fraction(0)] * self.dim
        v[0] = Fraction(1)
        return v

    @lru_cache(maxsize=None)
    def permutation_matrix(self, images: tuple) -> tuple:
        """Columns: image of each basis monomial under x_k -> x_{w(k)}."""
        cols = []
        for a in self.basis:
            b = [0] * self.n
            for k, e in enumerate(a):
                b[images[k] - 1] += e
            cols.append(self.normal_form({tuple(b): 1}))
        return tuple(tuple(c) for c in cols)

    def act(self, w: Perm, v: Sequence) -> list:
        cols = self.permutation_matrix(tuple(w.images))
        out = [Fraction(0)] * self.dim
        for j, x in enumerate(v):
            if x:
                for k, y in enumerate(cols[j]):
                    if y:
                        out[k] += x * y
        return out

    def simple_action_matrix(self, j: int) -> tuple:
        return self.permutation_matrix(tuple(Perm.simple(self.n, j).images))

    def poincare(self) -> LaurentPoly:
        return LaurentPoly({d: self.degrees.count(d) for d in set(self.degrees)})

    def degree_indices(self, deg: int) -> list:
        return [k for k, d in enumerate(self.degrees) if d == deg]


@lru_cache(maxsize=None)
def build_coinvariants(n: int) -> GradedCommAlgebra:
    return GradedCommAlgebra(n)


class SubringEmbedding:
    """Invariant subring given by ambient coordinate vectors of a homogeneous basis."""

    def __init__(self, ambient: GradedCommAlgebra, vectors: list, degrees: list, gens: tuple = ()):
        self.ambient = ambient
        self.vectors = vectors
        self.degrees = degrees
        self.gens = gens
        self.space = Subspace(vectors, ambient.dim)
        self._inv = None
        if self.space.dim != len(vectors):
            raise ArithmeticError("subring basis is not independent")

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def coords(self, v: Sequence, check: bool = True) -> list:
        """Coordinates in self.vectors of an ambient vector lying in the subring."""
        if check and not self.space.contains(v):
            raise ValueError("vector not in subring")
        if self._inv is None:
            piv = self.space.pivots
            m = flint.fmpq_mat([[_q(u[p]) for p in piv] for u in self.vectors])
            self._inv = m.transpose().inv()
        rhs = flint.fmpq_mat(len(self.space.pivots), 1, [_q(v[p]) for p in self.space.pivots])
        sol = self._inv * rhs
        return [Fraction(int(sol[k, 0].p), int(sol[k, 0].q)) for k in range(self.dim)]

    def contains(self, v: Sequence) -> bool:
        return self.space.contains(v)

    def is_closed(self) -> bool:
        return all(self.contains(self.ambient.multiply(u, w)) for u in self.vectors for w in self.vectors)

    def structure_constants(self) -> dict:
        return {
            (i, j): self.coords(self.ambient.multiply(u, w))
            for i, u in enumerate(self.vectors)
            for j, w in enumerate(self.vectors)
            if i <= j
        }

    def poincare(self) -> LaurentPoly:
        return LaurentPoly({d: self.degrees.count(d) for d in set(self.degrees)})


def _q(x) -> "flint.fmpq":
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def invariants(A: GradedCommAlgebra, gens: Sequence[int]) -> SubringEmbedding:
    """Fixed subring of the parabolic subgroup generated by s_j, j in gens.

    Basis via Reynolds averaging, degree by degree.
    """
    gens = tuple(sorted(gens))
    return invariants_of_group(A, subgroup_elements(A.n, frozenset(gens)), gens)


def invariants_of_group(A: GradedCommAlgebra, group: Sequence[Perm], gens: tuple = ()) -> SubringEmbedding:
    """Fixed subring of an arbitrary subgroup given by its elements."""
    vectors, degrees = [], []
    for deg in sorted(set(A.degrees)):
        idx = A.degree_indices(deg)
        images = []
        for k in idx:
            e = [Fraction(0)] * A.dim
            e[k] = Fraction(1)
            images.append(reynolds(A, group, e))
        basis, _ = rref(images, A.dim)
        vectors.extend(basis)
        degrees.extend([deg] * len(basis))
    return SubringEmbedding(A, vectors, degrees, gens)


def reynolds(A: GradedCommAlgebra, group: Sequence[Perm], v: Sequence) -> list:
    out = [Fraction(0)] * A.dim
    for w in group:
        for k, x in enumerate(A.act(w, v)):
            out[k] += x
    g = len(group)
    return [x / g for x in out]


def C_i(n: int, i: int) -> SubringEmbedding:
    return invariants(build_coinvariants(n), parabolic_i(n, i))


def C_pair(n: int, i: int, k: int) -> SubringEmbedding:
    return invariants(build_coinvariants(n), parabolic_pair(n, i, k))


def verify_freeness(big: SubringEmbedding, small: SubringEmbedding) -> dict:
    """Homogeneous free basis of `big` over `small` (graded Nakayama + rank check)."""
    A = big.ambient
    if not all(big.contains(v) for v in small.vectors):
        raise ValueError("small is not contained in big")
    plus = [v for v, d in zip(small.vectors, small.degrees) if d > 0]
    ideal_rows = [A.multiply(s, b) for s in plus for b in big.vectors]
    span = Subspace(ideal_rows, A.dim) if ideal_rows else Subspace([], A.dim)
    chosen, chosen_deg = [], []
    current = list(span.basis)
    for v, d in sorted(zip(big.vectors, big.degrees), key=lambda t: t[1]):
        trial = Subspace(current + [v], A.dim)
        if trial.dim > len(current):
            chosen.append(v)
            chosen_deg.append(d)
            current = list(trial.basis)
    products = [A.multiply(s, c) for c in chosen for s in small.vectors]
    rk = rank(products, A.dim) if products else 0
    ok = rk == big.dim and len(products) == big.dim
    return {
        "pass": ok,
        "rank": len(chosen),
        "degrees": sorted(chosen_deg),
        "dim_big": big.dim,
        "dim_small": small.dim,
        "product_rank": rk,
        "generators": chosen,
    }


def freeness_certificates(n: int) -> dict:
    """C^{i,i+1} and C^{i,i-1} over C^i, for every i."""
    out = {}
    for i in range(n + 1):
        small = C_i(n, i)
        if i < n:
            cert = verify_freeness(C_pair(n, i, i + 1), small)
            exp = list(range(0, 2 * (n - i), 2))
            out[f"C^{{{i},{i + 1}}} over C^{i}"] = {**_strip(cert), "expected": exp, "pass": cert["pass"] and cert["degrees"] == exp}
        if i > 0:
            cert = verify_freeness(C_pair(n, i - 1, i), small)
            exp = list(range(0, 2 * i, 2))
            out[f"C^{{{i},{i - 1}}} over C^{i}"] = {**_strip(cert), "expected": exp, "pass": cert["pass"] and cert["degrees"] == exp}
    return out


def _strip(cert: dict) -> dict:
    return {k: v for k, v in cert.items() if k != "generators"}


# -- Poincare polynomials

def poincare_cosets(n: int, gens: Sequence[int]) -> LaurentPoly:
    """sum over minimal coset reps of q^{2 l(w)}."""
    out: dict = {}
    for w in min_coset_reps(n, tuple(gens)):
        e = 2 * w.length()
        out[e] = out.get(e, 0) + 1
    return LaurentPoly(out)


def recentered(p: LaurentPoly) -> LaurentPoly:
    return p.shift(-(p.max_exp() + p.min_exp()) // 2)


def poincare_binomial_check(n: int, i: int) -> dict:
    """Recentered Poincare polynomial of C^i equals [n, i] by two routes."""
    cos = recentered(poincare_cosets(n, parabolic_i(n, i)))
    binom = quantum_binomial(n, i)
    return {"pass": cos == binom, "cosets": cos.to_json(), "binomial": binom.to_json()}


# -- variable reversal

def reversal_isomorphism_check(n: int) -> dict:
    """x_k -> x_{n+1-k} maps C^i onto C^{n-i} as graded algebras."""
    A = build_coinvariants(n)
    w0 = Perm.longest(n)
    out = {}
    for i in range(n + 1):
        src = C_i(n, i)
        tgt = C_i(n, n - i)
        imgs = [A.act(w0, v) for v in src.vectors]
        inside = all(tgt.contains(v) for v in imgs)
        onto = rank(imgs, A.dim) == tgt.dim if imgs else tgt.dim == 0
        mult = all(
            A.act(w0, A.multiply(u, v)) == A.multiply(A.act(w0, u), A.act(w0, v))
            for u in src.vectors for v in src.vectors
        )
        graded = sorted(src.degrees) == sorted(tgt.degrees)
        out[f"C^{i} -> C^{n - i}"] = {"pass": inside and onto and mult and graded}
    return out


# -- V_n model: classes [S_i]

def vn_functors(n: int) -> dict:
    """E, F, K on the Grothendieck group spanned by [S_0], ..., [S_n]."""
    labels = list(range(n + 1))
    E = LMatrix(labels, labels)
    F = LMatrix(labels, labels)
    K = LMatrix(labels, labels)
    Ki = LMatrix(labels, labels)
    for i in labels:
        if i < n:
            E[i + 1, i] = sum((qpow(-n + i + 1 + 2 * k) for k in range(n - i)), ZERO)
        if i > 0:
            F[i - 1, i] = sum((qpow(1 - i + 2 * k) for k in range(i)), ZERO)
        K[i, i] = qpow(2 * i - n)
        Ki[i, i] = qpow(n - 2 * i)
    return {"E": E, "F": F, "K": K, "Kinv": Ki}


def vn_check(n: int) -> dict:
    from .uqrep import TensorVector, act, semilinear_form

    ops = vn_functors(n)
    E, F, K, Ki = ops["E"], ops["F"], ops["K"], ops["Kinv"]
    labels = list(range(n + 1))
    out = {}

    def res(ok, **extra):
        return {"pass": bool(ok), **extra}

    out["K_Kinv"] = res((K @ Ki).is_identity())
    out["KE=q2EK"] = res(K @ E == (E @ K).scale(qpow(2)))
    out["KF=q-2FK"] = res(K @ F == (F @ K).scale(qpow(-2)))
    out["(q-q^-1)[E,F]=K-K^-1"] = res((E @ F - F @ E).scale(qpow(1) - qpow(-1)) == K - Ki)
    # direct-sum form, blockwise
    bad = []
    for i in labels:
        ef = (E @ F)[i, i]
        fe = (F @ E)[i, i]
        l = sum((qpow(n - 1 - 2 * r - 2 * i) for r in range(n - i)), ZERO)
        r_ = sum((qpow(2 * i - n - 2 * r - 1) for r in range(i)), ZERO)
        if ef + l != fe + r_:
            bad.append(i)
    out["EF+shifts=FE+shifts"] = res(not bad, failures=bad)
    # v^i -> [S_i] intertwines with V_n in dual coordinates
    bad = []
    for i in labels:
        v = TensorVector((n,), {(i,): ONE}, dual=True)
        for g, m in (("E", E), ("F", F), ("K", K)):
            w = act(g, v)
            col = {j: c for (j,), c in w.coeffs.items()}
            if col != m.column(i):
                bad.append([g, i])
    out["v^i -> [S_i] intertwines"] = res(not bad, failures=bad)
    # v_i -> [VT_i] = [n, i][S_i]
    bad = []
    for i in labels:
        v = TensorVector((n,), {(i,): ONE})
        for g, m in (("E", E), ("F", F), ("K", K)):
            w = act(g, v)  # standard coordinates
            image = {j: c * quantum_binomial(n, j) for (j,), c in w.coeffs.items()}
            direct = m.apply({i: quantum_binomial(n, i)})
            if image != direct:
                bad.append([g, i])
    out["v_i -> [VT_i] intertwines"] = res(not bad, failures=bad)
    # <[VT_l], [VT_k]> = delta q^{l(n-l)} [n, l] against the semilinear form,
    # with the left side from <S_k, VT_l> = delta q^{k(n-k)} and [VT_l] = [n,l][S_l]
    bad = []
    for l in labels:
        for k in labels:
            lhs = (quantum_binomial(n, l).bar() * qpow(l * (n - l))) if l == k else ZERO
            rhs = semilinear_form(TensorVector((n,), {(l,): ONE}), TensorVector((n,), {(k,): ONE}))
            if lhs != rhs:
                bad.append([l, k])
    out["<VT_l,VT_k> = semilinear form"] = res(not bad, failures=bad)
    # [VT_i] = [n,i][S_i] as the graded dimension of C^i, recentred
    bad = [i for i in labels if recentered(poincare_cosets(n, parabolic_i(n, i))) != quantum_binomial(n, i)]
    out["[VT_i]=[n,i][S_i]"] = res(not bad, failures=bad)
    # agreement with the O-side functors restricted along v_i -> i_n(v_i)
    out["matches groth functors on i_n(V_n)"] = res(_hcc_check(n, ops))
    return out


def _hcc_check(n: int, ops: dict) -> bool:
    """With D = diag([n, i]): E_S D = D E_V, where E_V is the groth E on {i_n(v_i)}."""
    from .groth import full_operator
    from .uqrep import TensorVector, jw_include

    labels = list(range(n + 1))
    D = LMatrix(labels, labels, {(i, i): quantum_binomial(n, i) for i in labels})
    images = {i: jw_include(TensorVector((n,), {(i,): ONE})) for i in labels}
    for g in ("E", "F", "K"):
        op = full_operator(n, g)
        ev = LMatrix(labels, labels)
        for i in labels:
            w = op.apply(images[i].coeffs)
            if not w:
                continue
            j = sum(next(iter(w)))
            ref = images[j].coeffs
            a = next(iter(ref))
            c = w[a].divmod_exact(ref[a])
            if {b: x * c for b, x in ref.items()} != w:
                return False
            ev[j, i] = c
        if ops[g] @ D != D @ ev:
            return False
    return True


def adjunction_bookkeeping(n: int) -> dict:
    """Right adjoint of E_i computed from the free-basis top degree is F_{i+1} K^-1 <1>.

    E_i = Res C^{i,i+1} (x)_{C^i} <-n+i+1> has right adjoint
    Res C^{i,i+1} (x)_{C^{i+1}} <-max> <n-i-1>, where max is the top degree of the
    free basis of C^{i,i+1} over C^{i+1}. With F_{i+1} = Res (x) <-i> this is
    F_{i+1} <n - i - 1 - max + i>, which must equal F_{i+1} K_{i+1}^-1 <1>.
    """
    out = {}
    for i in range(n):
        big = C_pair(n, i, i + 1)
        top_up = max(verify_freeness(big, C_i(n, i + 1))["degrees"])
        shift = n - i - 1 - top_up + i
        expected = n - 2 * (i + 1) + 1
        out[f"(E_{i}, F_{i + 1}K^-1<1>)"] = {"pass": shift == expected, "max": top_up, "shift": shift}
        top_dn = max(verify_freeness(big, C_i(n, i))["degrees"])
        # (F_{i+1}, E_i K <1>): F_{i+1} = Res (x)_{C^{i+1}} <-i>, E_i = Res (x)_{C^i} <-n+i+1>
        shift_f = i - top_dn + (n - i - 1)
        expected_f = 2 * i - n + 1
        out[f"(F_{i + 1}, E_{i}K<1>)"] = {"pass": shift_f == expected_f, "max": top_dn, "shift": shift_f}
    return out


def coinv_check(n: int) -> dict:
    A = build_coinvariants(n)
    out = {}
    from math import factorial

    out["dim C = n!"] = {"pass": A.dim == factorial(n), "dim": A.dim}
    full = poincare_cosets(n, ())
    out["Poincare(C) = sum q^{2l(w)}"] = {"pass": A.poincare() == full}
    out["top degree one-dimensional"] = {"pass": len(A.degree_indices(n * (n - 1))) == 1}
    # Groebner cross-check: h_k(x_k..x_n) lies in the ideal
    gro = all(not any(A.normal_form(complete(n, k, n + 1 - k))) for k in range(1, n + 1))
    out["h_k(x_1..x_{n+1-k}) = 0"] = {"pass": gro}
    out["S_n acts by automorphisms"] = {"pass": _action_is_multiplicative(A)}
    for i in range(n + 1):
        sub = C_i(n, i)
        ok = sub.is_closed() and sub.contains(A.unit())
        pc = sub.poincare() == poincare_cosets(n, parabolic_i(n, i))
        out[f"C^{i} subring, Poincare = cosets"] = {"pass": ok and pc, "dim": sub.dim}
        out[f"[n,{i}] two routes"] = poincare_binomial_check(n, i)
    out["C^{S_n} = span{1}"] = {"pass": invariants(A, range(1, n)).dim == 1}
    out.update(freeness_certificates(n))
    out.update({f"reversal {k}": v for k, v in reversal_isomorphism_check(n).items()})
    out.update({f"adjunction {k}": v for k, v in adjunction_bookkeeping(n).items()})
    return out


def _action_is_multiplicative(A: GradedCommAlgebra) -> bool:
    for j in range(1, A.n):
        s = Perm.simple(A.n, j)
        for i, a in enumerate(A.basis):
            for k, b in enumerate(A.basis):
                u = [Fraction(int(t == i)) for t in range(A.dim)]
                v = [Fraction(int(t == k)) for t in range(A.dim)]
                if A.act(s, A.multiply(u, v)) != A.multiply(A.act(s, u), A.act(s, v)):
                    return False
    return True
