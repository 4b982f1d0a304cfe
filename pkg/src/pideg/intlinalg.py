"""Exact integer linear algebra for skew-symmetric commutation matrices.

Everything here runs on arbitrary-precision Python integers (Fractions only
inside back-substitution); nothing is ever rounded. The two normal-form
routines verify their own output by exact multiplication before returning
and raise InternalVerificationFailed if the check fails, so a returned
result is a proved identity, not a hope.

The central objects:

- matrix_from_diagram builds the skew commutation matrix M(D) of a diagram:
  entry (i, j) is +1 when white square j lies strictly below square i in the
  same column or strictly to its right in the same row, -1 in the mirrored
  cases, 0 otherwise.

- skew_normal_form reduces a skew matrix by a unimodular congruence
  E M E^T to a block diagonal of 2x2 blocks [[0, h], [-h, 0]] followed by a
  zero block, with h_1 | h_2 | ... ; the h_i determine the PI degree.

- cycle_kernel_vectors realizes the kernel of M(D) combinatorially from the
  even-length cycles of the toric permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .diagrams import Diagram
from .errors import (
    BadRange,
    FormulaMismatch,
    InternalVerificationFailed,
    NotPrime,
    SkewSymmetryViolated,
)
from .pipedreams import toric_permutation, white_exit_labels


@dataclass(frozen=True)
class SkewIntMatrix:
    """A square integer matrix A with A^T = -A (hence zero diagonal).

    Indexing is 0-based: A[i, j] is row i, column j.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise SkewSymmetryViolated("matrix is not square")
        for i in range(n):
            for j in range(i, n):
                if rows[i][j] != -rows[j][i]:
                    raise SkewSymmetryViolated(
                        f"entry ({i}, {j}) = {rows[i][j]} but ({j}, {i}) = {rows[j][i]}"
                    )

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.rows[i][j]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def matrix_from_diagram(d: Diagram) -> SkewIntMatrix:
    """The skew commutation matrix of the white squares of a diagram.

    White squares are numbered row-major; +1 at (i, j) when square j is
    strictly below square i in the same column or strictly to the right of
    it in the same row. Squares in distinct rows and columns commute (0).
    """
    squares = d.white_squares
    rows = []
    for ri, ci in squares:
        row = []
        for rj, cj in squares:
            if (ci == cj and rj > ri) or (ri == rj and cj > ci):
                row.append(1)
            elif (ci == cj and rj < ri) or (ri == rj and cj < ci):
                row.append(-1)
            else:
                row.append(0)
        rows.append(tuple(row))
    return SkewIntMatrix(tuple(rows))


def extend(M: SkewIntMatrix, orientation: int = 1) -> SkewIntMatrix:
    """Border M with a column of orientation*1 and the matching skew row.

    orientation=+1 appends column (+1, ..., +1) and row (-1, ..., -1, 0);
    orientation=-1 the mirror. The two are congruent via negating the last
    coordinate, so every congruence invariant agrees between them.
    """
    if orientation not in (1, -1):
        raise BadRange(f"orientation must be +1 or -1, got {orientation}")
    n = M.n
    rows = [tuple(M.rows[i]) + (orientation,) for i in range(n)]
    rows.append(tuple(-orientation for _ in range(n)) + (0,))
    return SkewIntMatrix(tuple(rows))


def _as_int_rows(mat) -> list[list[int]]:
    if isinstance(mat, SkewIntMatrix):
        return mat.to_lists()
    rows = [list(map(int, row)) for row in mat]
    if rows and any(len(row) != len(rows[0]) for row in rows):
        raise BadRange("ragged matrix")
    return rows


def mat_vec(mat, vec) -> tuple[int, ...]:
    rows = _as_int_rows(mat)
    return tuple(sum(a * x for a, x in zip(row, vec)) for row in rows)


def mat_mul(a, b) -> list[list[int]]:
    ar = _as_int_rows(a)
    br = _as_int_rows(b)
    cols = list(zip(*br)) if br else []
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in ar]


def determinant(mat) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = _as_int_rows(mat)
    n = len(A)
    if n == 0:
        return 1
    if any(len(row) != n for row in A):
        raise BadRange("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                q, r = divmod(num, prev)
                assert r == 0, "Bareiss exact division failed"
                A[i][j] = q
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, exact for all inputs below 3.3e24."""
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if p in small:
        return True
    if any(p % q == 0 for q in small):
        return False
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# Smith normal form (general integer matrices)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmithResult:
    """Nonzero invariant factors (positive, each dividing the next), rank,
    and the dimension of the rational column kernel."""

    factors: tuple[int, ...]
    rank: int
    kernel_dim: int


def smith_invariant_factors(mat) -> SmithResult:
    """Invariant factors of an arbitrary integer matrix.

    Row and column operations only (no congruence pairing), so this applies
    to any rectangular matrix. For a skew-symmetric input the factors come
    out in equal consecutive pairs; see paired_invariant_factors.
    """
    A = _as_int_rows(mat)
    R = len(A)
    C = len(A[0]) if A else 0
    t = 0
    while True:
        piv = None
        for i in range(t, R):
            for j in range(t, C):
                if A[i][j] != 0 and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        A[t], A[piv[0]] = A[piv[0]], A[t]
        if piv[1] != t:
            for row in A:
                row[t], row[piv[1]] = row[piv[1]], row[t]
        while True:
            a = A[t][t]
            for i in range(t + 1, R):
                if A[i][t]:
                    q = A[i][t] // a
                    if q:
                        A[i] = [x - q * y for x, y in zip(A[i], A[t])]
            for j in range(t + 1, C):
                if A[t][j]:
                    q = A[t][j] // a
                    if q:
                        for row in A:
                            row[j] -= q * row[t]
            i_rem = next((i for i in range(t + 1, R) if A[i][t]), None)
            if i_rem is not None:
                A[t], A[i_rem] = A[i_rem], A[t]
                continue
            j_rem = next((j for j in range(t + 1, C) if A[t][j]), None)
            if j_rem is not None:
                for row in A:
                    row[t], row[j_rem] = row[j_rem], row[t]
                continue
            viol = None
            for i in range(t + 1, R):
                if any(A[i][j] % a for j in range(t + 1, C)):
                    viol = i
                    break
            if viol is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[viol])]
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
        t += 1
    factors = tuple(A[i][i] for i in range(t))
    for i in range(len(factors) - 1):
        if factors[i + 1] % factors[i]:
            raise InternalVerificationFailed(
                f"invariant factor chain broken: {factors}"
            )
    return SmithResult(factors, t, C - t)


def paired_invariant_factors(factors: tuple[int, ...]) -> tuple[int, ...]:
    """Collapse the pair-repeated factor list of a skew matrix to one copy each.

    A skew-symmetric integer matrix has even rank and its nonzero invariant
    factors satisfy d_1 = d_2, d_3 = d_4, ...; this returns (d_1, d_3, ...)
    and raises if the pairing does not hold (meaning the input was not the
    factor list of a skew matrix).
    """
    if len(factors) % 2:
        raise BadRange(f"odd number of invariant factors: {factors}")
    out = []
    for i in range(0, len(factors), 2):
        if factors[i] != factors[i + 1]:
            raise BadRange(f"factors not repeated in pairs: {factors}")
        out.append(factors[i])
    return tuple(out)


# ---------------------------------------------------------------------------
# Skew congruence normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SkewNormalForm:
    """Result of the congruence reduction S = E M E^T.

    S is block diagonal: s blocks [[0, h_i], [-h_i, 0]] with positive
    h_1 | h_2 | ... | h_s, then a zero block of size kernel_dim = n - 2s.
    E is unimodular (|det E| = 1). Both identities are verified exactly
    before this object is constructed.
    """

    matrix: SkewIntMatrix
    transform: tuple[tuple[int, ...], ...]
    invariant_factors: tuple[int, ...]
    kernel_dim: int


def _pair_swap(A: list[list[int]], E: list[list[int]], i: int, j: int) -> None:
    if i == j:
        return
    A[i], A[j] = A[j], A[i]
    for row in A:
        row[i], row[j] = row[j], row[i]
    E[i], E[j] = E[j], E[i]


def _pair_add(A: list[list[int]], E: list[list[int]], dst: int, src: int, q: int) -> None:
    """Congruence shear: row_dst += q * row_src, then col_dst += q * col_src."""
    if q == 0:
        return
    A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
    for row in A:
        row[dst] += q * row[src]
    E[dst] = [x + q * y for x, y in zip(E[dst], E[src])]


def skew_normal_form(M: SkewIntMatrix) -> SkewNormalForm:
    """Reduce a skew matrix to its canonical block form by unimodular congruence.

    Pivot selection is by minimal absolute value over the live block;
    Euclidean shears shrink the pivot until its two rows are clean, then a
    divisibility repair folds any non-multiple of the pivot back in. The
    output is verified exactly (E M E^T = S, |det E| = 1, block shape,
    divisibility chain) and InternalVerificationFailed is raised otherwise.
    """
    n = M.n
    A = M.to_lists()
    E = [[int(i == j) for j in range(n)] for i in range(n)]
    p = 0
    while True:
        piv = None
        for i in range(p, n):
            for j in range(p, n):
                if A[i][j] != 0 and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        _pair_swap(A, E, i, p)
        if j == p:
            j = i
        _pair_swap(A, E, j, p + 1)
        while True:
            a = A[p][p + 1]
            assert a != 0, "lost the pivot"
            for k in range(p + 2, n):
                if A[p][k]:
                    _pair_add(A, E, k, p + 1, -(A[p][k] // a))
                if A[p + 1][k]:
                    _pair_add(A, E, k, p, -(A[p + 1][k] // -a))
            rem = next(
                ((r, k) for k in range(p + 2, n) for r in (p, p + 1) if A[r][k]),
                None,
            )
            if rem is not None:
                r, k = rem
                _pair_swap(A, E, k, p + 1 if r == p else p)
                continue
            a = A[p][p + 1]
            viol = None
            for i2 in range(p + 2, n):
                if any(A[i2][j2] % a for j2 in range(i2 + 1, n)):
                    viol = i2
                    break
            if viol is None:
                break
            _pair_add(A, E, p, viol, 1)
        if A[p][p + 1] < 0:
            _pair_swap(A, E, p, p + 1)
        p += 2
    s = p // 2
    factors = tuple(A[2 * i][2 * i + 1] for i in range(s))

    # Exact post-verification: never trust the reduction loop.
    for i in range(n):
        for j in range(n):
            expect = 0
            if i // 2 == j // 2 and i < p and j < p:
                expect = factors[i // 2] if j == i + 1 else (-factors[i // 2] if j == i - 1 else 0)
            if A[i][j] != expect:
                raise InternalVerificationFailed(f"block shape broken at ({i}, {j})")
    for i in range(s - 1):
        if factors[i] <= 0 or factors[i + 1] % factors[i]:
            raise InternalVerificationFailed(f"divisibility chain broken: {factors}")
    if s and factors[-1] <= 0:
        raise InternalVerificationFailed(f"non-positive invariant factor: {factors}")
    if abs(determinant(E)) != 1:
        raise InternalVerificationFailed("transform is not unimodular")
    EMEt = mat_mul(mat_mul(E, M.rows), [list(col) for col in zip(*E)] if n else [])
    if EMEt != A:
        raise InternalVerificationFailed("E M E^T does not equal the reduced matrix")

    return SkewNormalForm(
        matrix=SkewIntMatrix(tuple(tuple(row) for row in A)),
        transform=tuple(tuple(row) for row in E),
        invariant_factors=factors,
        kernel_dim=n - 2 * s,
    )


def inverse_unimodular(E) -> tuple[tuple[int, ...], ...]:
    """Exact inverse of an integer matrix with determinant +-1.

    Gauss-Jordan over Fractions, entries asserted integral, and the product
    E * E^(-1) re-verified exactly before returning.
    """
    rows = _as_int_rows(E)
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise BadRange("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    out = []
    for i in range(n):
        row = []
        for j in range(n, 2 * n):
            v = aug[i][j]
            if v.denominator != 1:
                raise BadRange("matrix inverse is not integral")
            row.append(int(v))
        out.append(tuple(row))
    prod = mat_mul(rows, out)
    if prod != [[int(i == j) for j in range(n)] for i in range(n)]:
        raise InternalVerificationFailed("inverse verification failed")
    return tuple(out)


# ---------------------------------------------------------------------------
# Kernels: rational, mod p, and combinatorial
# ---------------------------------------------------------------------------


def kernel_basis_rational(mat) -> tuple[tuple[int, ...], ...]:
    """Primitive integer basis of the rational column kernel.

    Fraction-free (Bareiss) forward elimination to an integer echelon form,
    one back-substituted vector per free column, each scaled to coprime
    integer entries with the first nonzero entry positive.
    """
    A = _as_int_rows(mat)
    R = len(A)
    C = len(A[0]) if A else 0
    pivots: list[tuple[int, int]] = []
    r = 0
    prev = 1
    for c in range(C):
        if r == R:
            break
        pr = next((i for i in range(r, R) if A[i][c]), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        for i in range(r + 1, R):
            for j in range(c + 1, C):
                num = A[i][j] * A[r][c] - A[i][c] * A[r][j]
                q, rr = divmod(num, prev)
                assert rr == 0, "Bareiss exact division failed"
                A[i][j] = q
            A[i][c] = 0
        prev = A[r][c]
        pivots.append((r, c))
        r += 1
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(C) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        x: list[Fraction] = [Fraction(0)] * C
        x[f] = Fraction(1)
        for pr, pc in reversed(pivots):
            if pc > f:
                continue
            acc = sum((A[pr][j] * x[j] for j in range(pc + 1, C)), Fraction(0))
            x[pc] = -acc / A[pr][pc]
        scale = lcm(*(v.denominator for v in x)) if C else 1
        ints = [int(v * scale) for v in x]
        g = gcd(*ints) if any(ints) else 1
        ints = [v // g for v in ints]
        lead = next(v for v in ints if v)
        if lead < 0:
            ints = [-v for v in ints]
        vec = tuple(ints)
        if any(mat_vec(mat, vec)):
            raise InternalVerificationFailed("kernel vector fails M v = 0")
        basis.append(vec)
    return tuple(basis)


def one_perp(mat) -> bool:
    """Whether every rational kernel vector has coordinate sum zero.

    True for a zero kernel (vacuously). This is the switch that decides how
    the kernel dimension changes when the matrix is bordered by extend().
    """
    return all(sum(v) == 0 for v in kernel_basis_rational(mat))


def _rref_mod_p(mat, p: int) -> tuple[list[list[int]], list[int], int]:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    A = [[x % p for x in row] for row in _as_int_rows(mat)]
    R = len(A)
    C = len(A[0]) if A else 0
    pivot_cols: list[int] = []
    r = 0
    for c in range(C):
        if r == R:
            break
        pr = next((i for i in range(r, R) if A[i][c]), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = pow(A[r][c], p - 2, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(R):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        pivot_cols.append(c)
        r += 1
    return A, pivot_cols, r


def kernel_dim_mod_p(mat, p: int) -> int:
    """Nullity of the matrix over the field with p elements."""
    A = _as_int_rows(mat)
    C = len(A[0]) if A else 0
    _, _, rank = _rref_mod_p(A, p)
    return C - rank


def kernel_basis_mod_p(mat, p: int) -> tuple[tuple[int, ...], ...]:
    """Standard basis of the mod-p kernel, entries reduced into [0, p)."""
    A = _as_int_rows(mat)
    C = len(A[0]) if A else 0
    rref, pivot_cols, _ = _rref_mod_p(A, p)
    free_cols = [c for c in range(C) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        x = [0] * C
        x[f] = 1
        for r, pc in enumerate(pivot_cols):
            x[pc] = -rref[r][f] % p
        basis.append(tuple(x))
    return tuple(basis)


def one_perp_mod_p(mat, p: int) -> bool:
    """Whether the mod-p kernel lies inside the hyperplane of sum-zero vectors."""
    return all(sum(v) % p == 0 for v in kernel_basis_mod_p(mat, p))


@dataclass(frozen=True)
class CycleKernelVector:
    """A kernel vector of M(D) built from one even-length toric cycle.

    `values` assigns +1/-1 alternately around the cycle starting with +1 at
    the smallest label; `vector` has one coordinate per white square,
    values[left exit] - values[up exit], and is verified to lie in ker M(D).
    """

    cycle: tuple[int, ...]
    vector: tuple[int, ...]


def cycle_kernel_vectors(d: Diagram) -> tuple[CycleKernelVector, ...]:
    """Kernel vectors of M(D), one per even-length cycle of the toric permutation.

    These span the rational kernel: the number of even-length cycles equals
    the nullity of M(D).
    """
    M = matrix_from_diagram(d)
    tau = toric_permutation(d)
    left, up = white_exit_labels(d)
    out = []
    for cycle in tau.cycles.cycles:
        if len(cycle) % 2:
            continue
        values = {label: (1 if k % 2 == 0 else -1) for k, label in enumerate(cycle)}
        vector = tuple(
            values.get(left[i], 0) - values.get(up[i], 0) for i in range(len(left))
        )
        if any(mat_vec(M, vector)):
            raise InternalVerificationFailed(
                f"cycle vector for {cycle} is not in the kernel"
            )
        out.append(CycleKernelVector(cycle=cycle, vector=vector))
    return tuple(out)


def cycle_sum(d: Diagram, cycle: tuple[int, ...]) -> int:
    """Coordinate sum of the kernel vector of one even-length toric cycle.

    Computed two independent ways and cross-checked: directly by summing the
    vector, and by the side-transition formula, which adds the cycle value
    at tau(j) whenever the cycle steps from a column label j to a row label
    tau(j), subtracts the value at tau(k) whenever it steps from a row label
    k to a column label tau(k), and ignores steps that stay on one side.
    FormulaMismatch if the two disagree. A cycle living entirely on rows or
    entirely on columns therefore sums to zero.
    """
    m = d.m
    tau = toric_permutation(d)
    rotated = tuple(cycle)
    if not rotated:
        raise BadRange("empty cycle")
    k = rotated.index(min(rotated))
    rotated = rotated[k:] + rotated[:k]
    if rotated not in tau.cycles.cycles:
        raise BadRange(f"{cycle} is not a cycle of the toric permutation")
    if len(rotated) % 2:
        raise BadRange(f"cycle {cycle} has odd length; no kernel vector attached")
    values = {label: (1 if k % 2 == 0 else -1) for k, label in enumerate(rotated)}
    matching = next(
        ckv for ckv in cycle_kernel_vectors(d) if ckv.cycle == rotated
    )
    direct = sum(matching.vector)
    formula = 0
    for label in rotated:
        image = tau(label)
        if label > m and image <= m:
            formula += values[image]
        elif label <= m and image > m:
            formula -= values[image]
    if direct != formula:
        raise FormulaMismatch(
            f"cycle sum mismatch for {rotated}: direct {direct}, formula {formula}"
        )
    return direct
