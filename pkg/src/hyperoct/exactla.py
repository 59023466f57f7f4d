"""Exact linear algebra over the integers/rationals for verification work.

Everything here returns certified exact facts, never probabilistic ones:

- A mod-p elimination bounds the rank from below, hence the nullity from
  above (an unlucky prime only weakens the bound, never breaks it).
- Exactly verified kernel vectors bound the nullity from below.
- When the two bounds meet, the dimension is proved.  Kernel vectors come
  either from the caller (e.g. eigenvectors with verified eigen-equations)
  or from lifting the mod-p reduced-echelon kernel by rational
  reconstruction, followed by exact verification over ZZ.
- `annihilates` checks a polynomial identity q(A) = 0 exactly, column by
  column, which pins the spectrum inside q's root set.
- A division-free Berkowitz characteristic polynomial serves as an
  independent oracle for small matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

import numpy as np

# Primes just below 2^26, so 384-term dot products of residues fit in int64.
PRIMES = (67108859, 67108837, 67108819, 67108777, 67108763, 67108729, 67108693)


class CertificationError(RuntimeError):
    """No configured prime yielded an exactly verified answer."""


def _int_rows(A) -> list[list[int]]:
    return [[int(x) for x in row] for row in A]


def _mod_matrix(rows: list[list[int]], p: int) -> np.ndarray:
    return np.array([[x % p for x in row] for row in rows], dtype=np.int64)


# ---------------------------------------------------------------------------
# modular elimination


def rref_mod(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of an int64 residue matrix mod p."""
    R = A % p
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        inv = pow(int(R[r, c]), p - 2, p)
        R[r] = (R[r] * inv) % p
        col = R[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            R[mask] = (R[mask] - np.outer(col[mask], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank_mod(A: np.ndarray, p: int) -> int:
    return len(rref_mod(A, p)[1])


def nullspace_mod(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int], list[int]]:
    """Kernel basis of A mod p in reduced-echelon parametrization.

    Returns (basis, pivots, free_cols); basis row b has b[free] = 1 at its
    own free column, 0 at the others, and −R[i, free] at pivot column i.
    """
    R, pivots = rref_mod(A, p)
    cols = A.shape[1]
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for bi, f in enumerate(free):
        basis[bi, f] = 1
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = (-int(R[ri, f])) % p
    return basis, pivots, free


def nullity_upper_bound(A, primes: int = 2) -> int:
    """Certified upper bound on dim_QQ ker(A): min over primes of n − rank_p."""
    rows = _int_rows(A)
    if not rows:
        return 0
    n = len(rows[0])
    best = n
    for p in PRIMES[:primes]:
        best = min(best, n - rank_mod(_mod_matrix(rows, p), p))
        if best == 0:
            break
    return best


def matpow_mod(A, s: int, p: int) -> np.ndarray:
    """A^s mod p by repeated squaring (int64-safe for 384-dim matrices)."""
    rows = _int_rows(A)
    base = _mod_matrix(rows, p)
    n = base.shape[0]
    result = np.eye(n, dtype=np.int64)
    while s:
        if s & 1:
            result = (result @ base) % p
        base = (base @ base) % p
        s >>= 1
    return result


# ---------------------------------------------------------------------------
# rational reconstruction and certified kernels


def rational_reconstruct(r: int, m: int) -> Optional[Fraction]:
    """The unique n/d with |n|, d <= sqrt(m/2) and n ≡ d·r (mod m), if any."""
    r %= m
    bound = int((m // 2) ** 0.5)
    old_r, cur_r = m, r
    old_s, cur_s = 0, 1
    while cur_r > bound:
        q = old_r // cur_r
        old_r, cur_r = cur_r, old_r - q * cur_r
        old_s, cur_s = cur_s, old_s - q * cur_s
    num, den = cur_r, cur_s
    if den == 0:
        return None
    if den < 0:
        num, den = -num, -den
    if den > bound or gcd(den, m) != 1:
        return None
    g = gcd(num, den)
    return Fraction(num // g, den // g)


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    inv = pow(m1 % m2, -1, m2)
    return (r1 + m1 * (((r2 - r1) * inv) % m2)) % (m1 * m2)


def kernel_certified(A, max_primes: int = len(PRIMES)) -> tuple[int, list[list[Fraction]]]:
    """Exact kernel basis of an integer matrix with certified dimension.

    Lifted vectors are verified over ZZ; their reduced-echelon shape makes
    them independent; the mod-p nullity matches, so no further kernel vectors
    can exist.  Raises CertificationError if lifting fails for all primes
    (possible when kernel entries are astronomically large).
    """
    rows = _int_rows(A)
    if not rows:
        return 0, []
    collected: list[tuple[int, np.ndarray, tuple[int, ...]]] = []
    best_rank = -1
    best_pivots: Optional[tuple[int, ...]] = None
    for p in PRIMES[:max_primes]:
        basis, pivots, _ = nullspace_mod(_mod_matrix(rows, p), p)
        pv = tuple(pivots)
        if len(pivots) > best_rank:
            best_rank = len(pivots)
            best_pivots = pv
            collected = [(p, basis, pv)]
        elif pv == best_pivots:
            collected.append((p, basis, pv))
        lifted = _lift_and_verify(rows, [(q, b) for q, b, _ in collected])
        if lifted is not None:
            return len(lifted), lifted
    raise CertificationError("kernel lifting failed for all configured primes")


def _lift_and_verify(
    rows: list[list[int]], residue_bases: list[tuple[int, np.ndarray]]
) -> Optional[list[list[Fraction]]]:
    p0, b0 = residue_bases[0]
    k, n = b0.shape
    if k == 0:
        return []
    modulus = p0
    combined = [[int(x) for x in row] for row in b0]
    for p, b in residue_bases[1:]:
        for i in range(k):
            row = combined[i]
            brow = b[i]
            for j in range(n):
                row[j] = _crt_pair(row[j], modulus, int(brow[j]), p)
        modulus *= p
    basis: list[list[Fraction]] = []
    for i in range(k):
        vec = []
        for j in range(n):
            f = rational_reconstruct(combined[i][j], modulus)
            if f is None:
                return None
            vec.append(f)
        basis.append(vec)
    for vec in basis:
        den = 1
        for f in vec:
            den = den * f.denominator // gcd(den, f.denominator)
        ivec = [int(f * den) for f in vec]
        support = [(j, v) for j, v in enumerate(ivec) if v]
        for row in rows:
            if sum(row[j] * v for j, v in support) != 0:
                return None
    return basis


def rank_certified(A) -> int:
    rows = _int_rows(A)
    if not rows:
        return 0
    dim, _ = kernel_certified(rows)
    return len(rows[0]) - dim


def independent_certificate(vectors) -> bool:
    """Prove linear independence over QQ of integer row vectors.

    Full rank mod any prime is a proof; as a fallback the transpose kernel is
    certified exactly.
    """
    rows = _int_rows(vectors)
    if not rows:
        return True
    if len(rows) > len(rows[0]):
        return False
    for p in PRIMES[:3]:
        if rank_mod(_mod_matrix(rows, p), p) == len(rows):
            return True
    cols = [list(col) for col in zip(*rows)]
    dim, _ = kernel_certified(cols)
    return dim == 0


# ---------------------------------------------------------------------------
# exact annihilation checks (spectrum containment)


def annihilates(A, nonzero_eigenvalues: Sequence[int], zero_power: int) -> bool:
    """Exactly verify q(A) = 0 for q(x) = x^{zero_power}·Π(x − λ).

    q(A) = 0 proves the spectrum of A lies in {0} ∪ {λ} with semisimple
    nonzero eigenvalues (they are simple roots of q).  Uses int64 matrix
    products while a dynamic magnitude bound proves no overflow is possible,
    falling back to arbitrary-precision integers otherwise; the result is
    exact either way.
    """
    rows = _int_rows(A)
    n = len(rows)
    if n == 0:
        return True
    steps = [("factor", lam) for lam in nonzero_eigenvalues]
    steps += [("power", 0)] * zero_power
    maxA = max((abs(x) for row in rows for x in row), default=0)
    A64 = np.array(rows, dtype=np.int64)
    V = np.eye(n, dtype=np.int64)
    safe = True
    for kind, lam in steps:
        maxV = int(np.abs(V).max())
        bound = n * maxA * maxV + abs(lam) * maxV
        if bound >= 2**62:
            safe = False
            break
        V = A64 @ V - lam * V
    if safe:
        return not V.any()
    # arbitrary-precision fallback, column by column
    sparse = [[(j, v) for j, v in enumerate(row) if v] for row in rows]

    def apply_A(vec: list[int]) -> list[int]:
        return [sum(v * vec[j] for j, v in row) for row in sparse]

    for col in range(n):
        vec = [0] * n
        vec[col] = 1
        for lam in nonzero_eigenvalues:
            av = apply_A(vec)
            vec = [a - lam * x for a, x in zip(av, vec)]
        for _ in range(zero_power):
            vec = apply_A(vec)
        if any(vec):
            return False
    return True


# ---------------------------------------------------------------------------
# small exact characteristic polynomial (Berkowitz) and factor matching


def charpoly_int(A) -> list[int]:
    """det(xI − A) for an integer matrix, coefficients ascending in x.

    Division-free Berkowitz algorithm; O(n^4), intended for small n.
    """
    rows = _int_rows(A)
    n = len(rows)
    C = [1]
    for m in range(1, n + 1):
        diag = rows[m - 1][m - 1]
        R = rows[m - 1][: m - 1]
        S = [rows[i][m - 1] for i in range(m - 1)]
        sub = [row[: m - 1] for row in rows[: m - 1]]
        t = [diag]
        vec = S
        for _ in range(m - 1):
            t.append(sum(r * v for r, v in zip(R, vec)))
            vec = [sum(si * vi for si, vi in zip(srow, vec)) for srow in sub]
        newC = [0] * (m + 1)
        for i in range(m + 1):
            s = C[i] if i < len(C) else 0
            for k, tk in enumerate(t):
                idx = i - 1 - k
                if 0 <= idx < len(C):
                    s -= tk * C[idx]
            newC[i] = s
        C = newC
    return list(reversed(C))


def poly_divide_linear(poly: list[int], root: int) -> Optional[list[int]]:
    """poly / (x − root) exactly (ascending coefficients); None if not a root."""
    n = len(poly) - 1
    out = [0] * n
    carry = poly[n]
    for i in range(n - 1, -1, -1):
        out[i] = carry
        carry = poly[i] + carry * root
    if carry != 0:
        return None
    return out


def charpoly_matches(A, predicted: dict[int, int]) -> bool:
    """Berkowitz charpoly of A equals Π (x − λ)^{m} for the predicted map."""
    poly = charpoly_int(A)
    if len(poly) - 1 != sum(predicted.values()):
        return False
    for lam, mult in predicted.items():
        for _ in range(mult):
            poly = poly_divide_linear(poly, lam)
            if poly is None:
                return False
    return poly == [1]


# ---------------------------------------------------------------------------
# certified linear solve (for PBW coordinates)


def solve_certified(A, b) -> list[Fraction]:
    """Solve A·x = b exactly for a square nonsingular rational system.

    Clears denominators, adjoins −b as an extra column, lifts the kernel of
    the augmented matrix, and verifies by substitution.
    """
    Af = [[Fraction(x) for x in row] for row in A]
    bf = [Fraction(x) for x in b]
    den = 1
    for row in Af:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    for x in bf:
        den = den * x.denominator // gcd(den, x.denominator)
    Ai = [[int(x * den) for x in row] for row in Af]
    bi = [int(x * den) for x in bf]
    n = len(Ai)
    aug = [Ai[i] + [-bi[i]] for i in range(n)]
    dim, basis = kernel_certified(aug)
    if dim != 1 or basis[0][n] == 0:
        raise CertificationError("system is singular or inconsistent")
    v = basis[0]
    x = [vi / v[n] for vi in v[:n]]
    for row, target in zip(Af, bf):
        if sum(r * xi for r, xi in zip(row, x)) != target:
            raise CertificationError("verification of solve failed")
    return x
