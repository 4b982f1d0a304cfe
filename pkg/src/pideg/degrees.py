"""PI degrees of quantum algebras at a root of unity of order ell.

The generic route: the PI degree of the quantum affine space attached to a
skew integer matrix M is the product over the congruence invariant factors
h_i of M of ell / gcd(h_i, ell). Everything else in this module is a closed
form for a structured family (Young shapes, determinantal boards, extended
algebras, Schubert cells, Grassmannians), each carrying a cross_check flag
that recomputes the value generically and raises FormulaMismatch on any
disagreement. Closed forms are never allowed to silently replace the
generic computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diagrams import (
    Diagram,
    Partition,
    PluckerIndex,
    determinantal_diagram,
    partition_from_plucker,
    young_diagram,
)
from .errors import (
    BadEll,
    BadRange,
    EvenEll,
    FormulaMismatch,
    HypothesisViolated,
    InternalVerificationFailed,
)
from .intlinalg import (
    SkewIntMatrix,
    extend,
    matrix_from_diagram,
    one_perp,
    skew_normal_form,
)
from .pipedreams import (
    CycleDecomposition,
    Permutation,
    partition_toric_permutation,
    toric_permutation,
)


def mu2(x: int) -> int:
    """The 2-adic valuation of a positive integer."""
    if x <= 0:
        raise BadRange(f"mu2 needs a positive integer, got {x}")
    v = 0
    while x % 2 == 0:
        x //= 2
        v += 1
    return v


def smallest_prime_factor(x: int) -> int:
    if x < 2:
        raise BadRange(f"no prime factor below 2: {x}")
    f = 2
    while f * f <= x:
        if x % f == 0:
            return f
        f += 1
    return x


@dataclass(frozen=True)
class PiDegree:
    """A PI degree in the exponent form value = ell**exponent // divisor.

    `factors` lists the per-block contributions ell // gcd(h_i, ell) when
    the value came from an explicit invariant factor list; closed forms
    that never see the factors leave it None.
    """

    ell: int
    exponent: int
    divisor: int = 1
    factors: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.ell < 2:
            raise BadEll(f"ell must be at least 2, got {self.ell}")
        if self.exponent < 0 or self.divisor < 1:
            raise BadRange(f"bad exponent form ({self.exponent}, {self.divisor})")
        if self.ell**self.exponent % self.divisor:
            raise BadRange(
                f"divisor {self.divisor} does not divide ell^{self.exponent}"
            )
        if self.factors is not None:
            prod = 1
            for f in self.factors:
                prod *= f
            if prod != self.value:
                raise InternalVerificationFailed(
                    f"factor product {prod} differs from value {self.value}"
                )

    @property
    def value(self) -> int:
        return self.ell**self.exponent // self.divisor

    def __str__(self) -> str:
        if self.divisor == 1:
            return f"{self.ell}^{self.exponent}"
        return f"{self.ell}^{self.exponent}/{self.divisor}"


def pi_degree_from_factors(h: tuple[int, ...], ell: int) -> PiDegree:
    """Generic PI degree from the invariant factors h of the skew matrix."""
    if ell < 2:
        raise BadEll(f"ell must be at least 2, got {ell}")
    gcds = [gcd(hi, ell) for hi in h]
    divisor = 1
    for g in gcds:
        divisor *= g
    return PiDegree(
        ell=ell,
        exponent=len(h),
        divisor=divisor,
        factors=tuple(ell // g for g in gcds),
    )


def pi_degree_qas(M: SkewIntMatrix, ell: int) -> PiDegree:
    """PI degree of the quantum affine space with commutation matrix M.

    This is the generic route: congruence normal form, then the factor
    product. Works for every ell >= 2 including even ell.
    """
    return pi_degree_from_factors(skew_normal_form(M).invariant_factors, ell)


def _check_odd_ell(ell: int) -> None:
    if ell < 3:
        raise BadEll(f"ell must be at least 3 here, got {ell}")
    if ell % 2 == 0:
        raise EvenEll(f"this closed form needs odd ell, got {ell}")


def pi_degree_partition(
    shape: Partition, ell: int, cross_check: bool = False
) -> PiDegree:
    """PI degree of the quantum affine space of a Young shape, odd ell.

    Closed form ell**((N - r) / 2) with N the number of boxes and r the
    number of even-length cycles of the toric permutation of the shape.
    """
    _check_odd_ell(ell)
    n_boxes = shape.size
    r = partition_toric_permutation(shape).cycles.odd_cycle_count
    if (n_boxes - r) % 2:
        raise InternalVerificationFailed(
            f"parity broken: N = {n_boxes}, r = {r} for shape {shape}"
        )
    closed = PiDegree(ell=ell, exponent=(n_boxes - r) // 2)
    if cross_check:
        generic = pi_degree_qas(matrix_from_diagram(young_diagram(shape)), ell)
        if generic.value != closed.value:
            raise FormulaMismatch(
                f"shape {shape}, ell = {ell}: closed {closed.value}, "
                f"generic {generic.value}"
            )
    return closed


def determinantal_invariant_exponent(n: int, t: int) -> int:
    """s_t = nt - t(t+1)/2: half the rank of the determinantal board matrix."""
    if not (1 <= t <= n - 1):
        raise BadRange(f"need 1 <= t <= n-1, got n = {n}, t = {t}")
    return n * t - t * (t + 1) // 2


def pi_degree_determinantal(
    n: int, t: int, ell: int, cross_check: bool = False
) -> PiDegree:
    """PI degree of the quantum determinantal ring of the n x n board at level t.

    For odd ell the value is ell**s_t; for even ell a power of 2 divides
    out: ell**s_t / 2**(s_t - n + 1). Both agree with the generic route on
    the determinantal diagram's matrix.
    """
    s_t = determinantal_invariant_exponent(n, t)
    if ell < 3:
        raise BadEll(f"ell must be at least 3 here, got {ell}")
    if ell % 2:
        closed = PiDegree(ell=ell, exponent=s_t)
    else:
        closed = PiDegree(ell=ell, exponent=s_t, divisor=2 ** (s_t - n + 1))
    if cross_check:
        generic = pi_degree_qas(
            matrix_from_diagram(determinantal_diagram(n, t)), ell
        )
        if generic.value != closed.value:
            raise FormulaMismatch(
                f"determinantal (n, t) = ({n}, {t}), ell = {ell}: "
                f"closed {closed.value}, generic {generic.value}"
            )
    return closed


def determinantal_toric_cycles(n: int, t: int) -> CycleDecomposition:
    """Closed-form toric cycle structure of the determinantal board.

    Writing n = u*t + rem, label set {1..2n} (rows then columns) splits into
    exactly t cycles: cycle i climbs the rows i, i+t, ..., i+kt and then
    descends the columns i+kt+n, ..., i+t+n, i+n, where k = u for i <= rem
    and k = u - 1 otherwise. Every cycle has even length 2k + 2, so the
    count of odd cycles is t.
    """
    if not (1 <= t <= n - 1):
        raise BadRange(f"need 1 <= t <= n-1, got n = {n}, t = {t}")
    u, rem = divmod(n, t)
    cycles = []
    for i in range(1, t + 1):
        k = u if i <= rem else u - 1
        ascending = [i + j * t for j in range(k + 1)]
        descending = [i + j * t + n for j in range(k, -1, -1)]
        cycles.append(tuple(ascending + descending))
    return CycleDecomposition(2 * n, tuple(cycles))


def _extended_cases(
    M: SkewIntMatrix, ell: int, min_dim: int
) -> tuple[PiDegree, int, tuple[int, ...]]:
    """Three-way closed form for the extended algebra of a skew matrix.

    Returns (degree, s, h) where s and h describe the UNextended matrix.
    Case split: if every kernel vector of M sums to zero the border adds a
    kernel direction and the degree stays ell**s; otherwise the border eats
    one kernel direction, and the extra block contributes a full ell when
    the smallest prime of ell exceeds min_dim, else ell / gcd(h_extra, ell).
    """
    snf = skew_normal_form(M)
    h = snf.invariant_factors
    s = len(h)
    if one_perp(M):
        return PiDegree(ell=ell, exponent=s), s, h
    if smallest_prime_factor(ell) > min_dim:
        return PiDegree(ell=ell, exponent=s + 1), s, h
    h_ext = skew_normal_form(extend(M)).invariant_factors
    if len(h_ext) != s + 1:
        raise InternalVerificationFailed(
            f"extended rank did not grow: {len(h_ext)} blocks vs {s}"
        )
    return (
        PiDegree(ell=ell, exponent=s + 1, divisor=gcd(h_ext[s], ell)),
        s,
        h,
    )


def pi_degree_extended_diagram(
    d: Diagram, ell: int, cross_check: bool = False
) -> PiDegree:
    """PI degree of the extended algebra of a diagram, odd ell.

    The extended algebra borders the commutation matrix with a row and
    column of ones. The closed form needs only the unextended normal form
    plus the kernel-sum test, except in the third case (smallest prime of
    ell at most min(m, n) and some kernel vector with nonzero sum) where
    one extra invariant factor of the extended matrix enters.
    """
    _check_odd_ell(ell)
    M = matrix_from_diagram(d)
    closed, _, _ = _extended_cases(M, ell, min(d.m, d.n))
    if cross_check:
        generic = pi_degree_qas(extend(M), ell)
        if generic.value != closed.value:
            raise FormulaMismatch(
                f"extended diagram, ell = {ell}: closed {closed.value}, "
                f"generic {generic.value}"
            )
    return closed


def _check_box_hypothesis(ell: int, box_m: int, box_n: int) -> None:
    """Common hypothesis of the Schubert and Grassmannian closed forms.

    ell must be odd (>= 3) and its smallest prime factor must exceed
    min(box_m, box_n, 2). Violations raise HypothesisViolated so callers
    can fall back to the generic route; they are inputs the closed form
    does not cover, not errors in the input itself.
    """
    if ell < 3:
        raise BadEll(f"ell must be at least 3 here, got {ell}")
    bound = min(box_m, box_n, 2)
    if ell % 2 == 0 or smallest_prime_factor(ell) <= bound:
        raise HypothesisViolated(
            f"need odd ell with smallest prime factor above {bound}, got {ell}"
        )


def pi_degree_schubert(
    idx: PluckerIndex, ell: int, cross_check: bool = False
) -> PiDegree:
    """PI degree of the extended Schubert cell algebra at an odd ell.

    The cell is indexed by an increasing m-subset of {1..n}; its Young
    shape lambda lives in the m x (n-m) box. Under the hypothesis (odd
    ell, smallest prime factor above min(box sides, 2)) the value is
    ell**((N - r)/2) when every kernel vector of the shape's matrix has
    zero coordinate sum and ell**((N - r)/2 + 1) otherwise.
    """
    shape = partition_from_plucker(idx)
    _check_box_hypothesis(ell, shape.box_m, shape.box_n)
    n_boxes = shape.size
    r = partition_toric_permutation(shape).cycles.odd_cycle_count
    if (n_boxes - r) % 2:
        raise InternalVerificationFailed(
            f"parity broken: N = {n_boxes}, r = {r} for gamma {idx.gamma}"
        )
    s = (n_boxes - r) // 2
    M = matrix_from_diagram(young_diagram(shape))
    closed = PiDegree(ell=ell, exponent=s if one_perp(M) else s + 1)
    if cross_check:
        generic = pi_degree_qas(extend(M), ell)
        if generic.value != closed.value:
            raise FormulaMismatch(
                f"Schubert gamma = {idx.gamma}, ell = {ell}: "
                f"closed {closed.value}, generic {generic.value}"
            )
    return closed


def rectangle_kernel_dim(a: int, b: int) -> int:
    """Kernel dimension of the commutation matrix of the all-white a x b board.

    The toric permutation of the full board is the rotation
    x -> x + b (mod a + b), which splits into gcd(a, b) cycles of length
    (a + b) / gcd(a, b); the cycles have even length exactly when a and b
    have the same 2-adic valuation. Hence the kernel dimension is gcd(a, b)
    when mu2(a) = mu2(b) and 0 otherwise.
    """
    if a < 1 or b < 1:
        raise BadRange(f"need positive sides, got {a} x {b}")
    return gcd(a, b) if mu2(a) == mu2(b) else 0


def pi_degree_grassmannian(
    m: int, n: int, ell: int, cross_check: bool = False
) -> PiDegree:
    """PI degree of the quantum Grassmannian of m-planes in n-space, odd ell.

    This is the Schubert cell of the full m x (n-m) rectangle. The kernel
    of the rectangle matrix has dimension gcd(m, n) when mu2(m) = mu2(n-m)
    (equivalently n / gcd(m, n) is even) and is zero otherwise; in the
    nonzero case some kernel vector has nonzero sum, so

        value = ell**(m(n-m)/2)                        kernel zero,
        value = ell**((m(n-m) - gcd(m, n))/2 + 1)      kernel nonzero.
    """
    if not (1 <= m < n):
        raise BadRange(f"need 1 <= m < n, got m = {m}, n = {n}")
    _check_box_hypothesis(ell, m, n - m)
    r = rectangle_kernel_dim(m, n - m)
    n_boxes = m * (n - m)
    if (n_boxes - r) % 2:
        raise InternalVerificationFailed(
            f"parity broken: N = {n_boxes}, r = {r} for ({m}, {n})"
        )
    exponent = (n_boxes - r) // 2 + (1 if r else 0)
    closed = PiDegree(ell=ell, exponent=exponent)
    if cross_check:
        reference = pi_degree_schubert(
            PluckerIndex(tuple(range(1, m + 1)), n), ell, cross_check=True
        )
        if reference.value != closed.value:
            raise FormulaMismatch(
                f"Grassmannian ({m}, {n}), ell = {ell}: closed {closed.value}, "
                f"Schubert route {reference.value}"
            )
    return closed


# ---------------------------------------------------------------------------
# Whole-diagram analysis (used by the command line driver and the sweeps)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtendedAnalysis:
    invariant_factors: tuple[int, ...]
    kernel_dim: int
    degrees: tuple[PiDegree, ...]


@dataclass(frozen=True)
class DiagramAnalysis:
    """Everything the generic route knows about one diagram.

    degrees[i] is the generic PI degree at ells[i]; `extended`, when
    requested, covers the bordered matrix. The invariant
    2 * len(invariant_factors) + kernel_dim = N always holds, and
    kernel_dim equals the odd cycle count of tau.
    """

    diagram: Diagram
    ells: tuple[int, ...]
    tau: Permutation
    invariant_factors: tuple[int, ...]
    kernel_dim: int
    one_perp: bool
    degrees: tuple[PiDegree, ...]
    extended: ExtendedAnalysis | None = None


def analyze_diagram(
    d: Diagram, ells: tuple[int, ...] = (), extended: bool = False
) -> DiagramAnalysis:
    M = matrix_from_diagram(d)
    snf = skew_normal_form(M)
    tau = toric_permutation(d)
    r = tau.cycles.odd_cycle_count
    if r != snf.kernel_dim:
        raise InternalVerificationFailed(
            f"odd cycle count {r} differs from kernel dimension {snf.kernel_dim}"
        )
    degrees = tuple(pi_degree_from_factors(snf.invariant_factors, ell) for ell in ells)
    ext = None
    if extended:
        esnf = skew_normal_form(extend(M))
        ext = ExtendedAnalysis(
            invariant_factors=esnf.invariant_factors,
            kernel_dim=esnf.kernel_dim,
            degrees=tuple(
                pi_degree_from_factors(esnf.invariant_factors, ell) for ell in ells
            ),
        )
    return DiagramAnalysis(
        diagram=d,
        ells=tuple(ells),
        tau=tau,
        invariant_factors=snf.invariant_factors,
        kernel_dim=snf.kernel_dim,
        one_perp=one_perp(M),
        degrees=degrees,
        extended=ext,
    )
