"""Linear codes over prime fields and generalized Reed-Solomon duality.

Code duality here is literally the Gale transform: the dual generator is
a kernel basis of the generator matrix.  GRS codes evaluate the degree
< k polynomials at distinct points of P^1(F_p), columns scaled by nonzero
multipliers; their duals are GRS again on the same points, and the dual
multipliers come out of a single linear system.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .curves import moment_vector
from .errors import (
    DimensionMismatch,
    ShapeMismatch,
    TooLarge,
    TooManyPoints,
    VerificationFailed,
)
from .exactla import ExactMatrix, PrimeField
from .pointconfig import PointConfiguration

BRUTE_FORCE_LIMIT = 10**7


@dataclass(frozen=True)
class LinearCode:
    generator: ExactMatrix  # k x n of rank k

    @staticmethod
    def new(generator: ExactMatrix) -> "LinearCode":
        field = generator.field
        if field.kind != "prime":
            raise DimensionMismatch("codes are supported over prime fields only")
        k, n = generator.shape
        if not 1 <= k < n:
            raise DimensionMismatch(f"need 1 <= k < n, got k={k}, n={n}")
        if generator.rank() != k:
            raise DimensionMismatch("generator must have full row rank")
        return LinearCode(generator)

    @property
    def field(self) -> PrimeField:
        return self.generator.field

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows


@dataclass(frozen=True)
class GrsSpec:
    """Evaluation points of P^1(F_p), nonzero column multipliers, dimension."""

    points: PointConfiguration  # n distinct points, r = 1
    multipliers: tuple
    k: int

    @staticmethod
    def new(points: PointConfiguration, multipliers: Sequence, k: int) -> "GrsSpec":
        field = points.field
        if field.kind != "prime":
            raise DimensionMismatch("GRS codes need a prime field")
        if points.r != 1:
            raise DimensionMismatch("evaluation points live in P^1")
        n = points.gamma
        if n > field.p + 1:
            raise TooManyPoints(f"P^1(F_{field.p}) has only {field.p + 1} points")
        ms = tuple(field.coerce(m) for m in multipliers)
        if len(ms) != n:
            raise DimensionMismatch("need one multiplier per point")
        if any(m == field.zero for m in ms):
            raise ValueError("multipliers must be nonzero")
        if not 1 <= k < n:
            raise DimensionMismatch(f"need 1 <= k < n, got k={k}, n={n}")
        return GrsSpec(points, ms, k)

    @property
    def field(self) -> PrimeField:
        return self.points.field

    @property
    def n(self) -> int:
        return self.points.gamma


def grs_code(spec: GrsSpec) -> LinearCode:
    """Generator row i evaluates the i-th degree-(k-1) monomial, scaled."""
    f = spec.field
    columns = []
    for j in range(spec.n):
        mono = moment_vector(f, spec.points.point(j), spec.k - 1)
        columns.append(tuple(f.mul(spec.multipliers[j], x) for x in mono))
    generator = ExactMatrix(f, tuple(columns)).transpose()
    code = LinearCode.new(generator)  # full rank by Vandermonde on distinct points
    return code


def dual_code(code: LinearCode) -> LinearCode:
    """The dual as the kernel of the generator: the Gale step for codes."""
    kernel = code.generator.kernel_basis()
    dual = LinearCode.new(kernel.transpose())
    if not (code.generator @ kernel).is_zero():
        raise VerificationFailed("dual generator fails orthogonality")
    return dual


def same_code(a: LinearCode, b: LinearCode) -> bool:
    """Row-space equality through the canonical reduced echelon form."""
    if a.field != b.field or a.n != b.n:
        raise ShapeMismatch("codes live over different fields or lengths")
    if a.k != b.k:
        return False
    ra, rb = a.generator.rref(), b.generator.rref()
    return ra.reduced.entries[: ra.rank] == rb.reduced.entries[: rb.rank]


def grs_dual_multipliers(spec: GrsSpec) -> tuple:
    """Column multipliers making the dual of a GRS code GRS of dimension n-k.

    Orthogonality of the two evaluation codes reduces to: the pointwise
    products m_j * m'_j lie in the kernel of the degree-(n-2) evaluation,
    which is one-dimensional with nowhere-zero entries for distinct points.
    """
    f = spec.field
    n = spec.n
    rows = []
    for i in range(n - 1):
        rows.append(
            tuple(moment_vector(f, spec.points.point(j), n - 2)[i] for j in range(n))
        )
    kernel = ExactMatrix(f, tuple(rows)).kernel_basis()
    if kernel.cols != 1:
        raise VerificationFailed("degree n-2 evaluation kernel is not a line")
    products = kernel.column(0)
    if any(x == f.zero for x in products):
        raise VerificationFailed("kernel vector of a distinct-point system vanished")
    duals = tuple(f.div(x, m) for x, m in zip(products, spec.multipliers))
    check = same_code(
        dual_code(grs_code(spec)),
        grs_code(GrsSpec.new(spec.points, duals, n - spec.k)),
    )
    if not check:
        raise VerificationFailed("dual multipliers do not reproduce the dual code")
    return duals


def min_distance(code: LinearCode) -> int:
    """Minimum Hamming weight by exhaustive message enumeration.

    Vectorized over blocks of messages; everything stays in int64, which
    is exact for p**2 * k far below 2**63.
    """
    p, k, n = code.field.p, code.k, code.n
    total = p**k
    if total > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"p^k = {total} exceeds {BRUTE_FORCE_LIMIT}")
    gen = np.array([[int(x) for x in row] for row in code.generator.entries], dtype=np.int64)
    best = n
    block = 1 << 15
    for start in range(1, total, block):
        stop = min(start + block, total)
        idx = np.arange(start, stop, dtype=np.int64)
        msgs = np.empty((stop - start, k), dtype=np.int64)
        for c in range(k):
            msgs[:, c] = (idx // p**c) % p
        words = msgs @ gen % p
        weights = np.count_nonzero(words, axis=1)
        best = min(best, int(weights.min()))
        if best == 1:
            break
    return best


def code_points(code: LinearCode) -> PointConfiguration:
    """The generator columns as a configuration in P^(k-1).

    Requires all columns nonzero and pairwise non-proportional (true for
    any projectively reduced code, in particular for GRS generators).
    """
    return PointConfiguration.new(
        code.field, code.k - 1, [code.generator.column(j) for j in range(code.n)]
    )


def mds_defect(code: LinearCode) -> int:
    """n - k + 1 - min_distance; zero exactly for MDS codes."""
    return code.n - code.k + 1 - min_distance(code)


def parity_check(code: LinearCode) -> ExactMatrix:
    return dual_code(code).generator


def classical_dual_products(spec: GrsSpec) -> tuple:
    """Closed-form kernel vector for affine points: 1 / prod of differences."""
    f = spec.field
    ts = []
    for j in range(spec.n):
        a, b = spec.points.point(j)
        if a == f.zero:
            raise ValueError("closed form needs affine evaluation points")
        ts.append(f.div(b, a))
    out = []
    for j, tj in enumerate(ts):
        prod = f.one
        for l, tl in enumerate(ts):
            if l != j:
                prod = f.mul(prod, f.sub(tj, tl))
        out.append(f.inv(prod))
    return tuple(out)
