"""Exact linear-algebra realisation of the geometric constructions over F_P.

Everything combinatorial in the package is certified against this module:
Jordan types of restrictions to flags give tableaux, rank tables give orbit
labels, and generic points of conormal fibres are sampled at random over a
large prime field.  A sample is accepted only when several independent draws
produce identical rank-derived certificates.

Conventions: ``V = V_q + V_p`` with coordinates ``e_1..e_q`` then ``f_1..f_p``;
``x`` is ``p x q`` (``V_q -> V_p``) and ``y`` is ``q x p``.  The flags ``E`` on
``V_q`` and ``F`` on ``V_p`` are the coordinate flags.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence, TypeVar

from .field import (
    FieldMatrix,
    default_prime,
    inverse,
    kernel_dim,
    nullspace,
    random_upper_triangular,
    rank,
)
from .matrices import MarginMatrix, PartialPermutation
from .partitions import Partition, conjugate
from .signed_diagrams import (
    MINUS,
    PLUS,
    SignedYoungDiagram,
    boxes_in_first_columns,
    enumerate_syd,
    lambda_minus,
    lambda_plus,
)
from .tableaux import RowStandardTableau

DEFAULT_TRIALS = 5
DEFAULT_RETRIES = 3

T = TypeVar("T")


class OracleError(RuntimeError):
    pass


class InstabilityError(OracleError):
    """Independent generic samples kept disagreeing."""


class FlagInvarianceError(OracleError):
    pass


def jordan_type(m: FieldMatrix) -> Partition:
    """Jordan type of a nilpotent matrix from the kernel dimensions of its powers."""
    if m.rows != m.cols:
        raise ValueError("Jordan type needs a square matrix")
    n = m.rows
    kernels = [0]
    power = FieldMatrix.identity(n, m.mod)
    while kernels[-1] < n:
        power = power @ m
        k = kernel_dim(power)
        if k == kernels[-1]:
            raise ValueError("matrix is not nilpotent")
        kernels.append(k)
    return conjugate(Partition(b - a for a, b in zip(kernels, kernels[1:])))


def is_nilpotent(m: FieldMatrix) -> bool:
    return m.power(m.rows).is_zero()


@dataclass(frozen=True)
class Flag:
    """Partial flag ``F_1 < ... < F_n = k^N``.

    ``F_i`` is spanned by the first ``dims[i-1]`` columns of ``basis``; the
    coordinate flag has ``basis=None``.
    """

    composition: tuple[int, ...]
    basis: FieldMatrix | None = None

    @property
    def ambient(self) -> int:
        return sum(self.composition)

    @property
    def dims(self) -> tuple[int, ...]:
        out, acc = [], 0
        for a in self.composition:
            acc += a
            out.append(acc)
        return tuple(out)

    @classmethod
    def coordinate(cls, composition: Sequence[int]) -> Flag:
        if any(a <= 0 for a in composition):
            raise ValueError("flag composition must be positive")
        return cls(tuple(composition))

    @classmethod
    def full(cls, n: int) -> Flag:
        return cls((1,) * n)

    def basis_matrix(self, mod: int) -> FieldMatrix:
        return self.basis if self.basis is not None else FieldMatrix.identity(self.ambient, mod)

    def adapted(self, m: FieldMatrix) -> FieldMatrix:
        """``m`` written in this flag's basis."""
        if self.basis is None:
            return m
        return inverse(self.basis) @ m @ self.basis


def _check_compatible(m: FieldMatrix, f: Flag) -> FieldMatrix:
    if m.rows != f.ambient or m.cols != f.ambient:
        raise ValueError(f"matrix of size {m.rows} does not act on a flag of dimension {f.ambient}")
    a = f.adapted(m)
    lo = 0
    for i, hi in enumerate(f.dims, start=1):
        for c in range(lo, hi):
            if any(a[r, c] for r in range(lo, a.rows)):
                raise FlagInvarianceError(f"m F_{i} is not contained in F_{i - 1}")
        lo = hi
    return a


def tab_chain(m: FieldMatrix, f: Flag) -> RowStandardTableau:
    """``(J(m|F_1); ...; J(m|F_n))`` for ``m F_i`` inside ``F_(i-1)``."""
    a = _check_compatible(m, f)
    return RowStandardTableau(jordan_type(a.submatrix(range(d), range(d))) for d in f.dims)


def quotient_chain(m: FieldMatrix, f: Flag, i: int) -> RowStandardTableau:
    """Tableau of the induced map on ``F_n/F_i`` with the quotient flag."""
    a = _check_compatible(m, f)
    dims = (0,) + f.dims
    lo = dims[i]
    return RowStandardTableau(
        jordan_type(a.submatrix(range(lo, d), range(lo, d))) for d in dims[i + 1:]
    )


def evacuation_chain(m: FieldMatrix, f: Flag) -> RowStandardTableau:
    """``(J(m|F_n/F_(n-1)); ...; J(m|F_n/F_0))``."""
    a = _check_compatible(m, f)
    dims = (0,) + f.dims
    n, top = len(f.dims), f.ambient
    return RowStandardTableau(
        jordan_type(a.submatrix(range(dims[n - k], top), range(dims[n - k], top)))
        for k in range(1, n + 1)
    )


@dataclass(frozen=True)
class ModulePoint:
    """A pair ``x: V_q -> V_p`` (``p x q``) and ``y: V_p -> V_q`` (``q x p``)."""

    x: FieldMatrix
    y: FieldMatrix

    def __post_init__(self):
        if (self.x.rows, self.x.cols) != (self.y.cols, self.y.rows):
            raise ValueError("x and y must have transposed shapes")

    @property
    def q(self) -> int:
        return self.x.cols

    @property
    def p(self) -> int:
        return self.x.rows

    @property
    def yx(self) -> FieldMatrix:
        return self.y @ self.x

    @property
    def xy(self) -> FieldMatrix:
        return self.x @ self.y

    def z(self) -> FieldMatrix:
        """``z = beta + alpha*beta`` on ``V_q + V_p``, i.e. ``[[0, y], [0, xy]]``."""
        mod = self.x.mod
        return FieldMatrix.block([
            [FieldMatrix.zeros(self.q, self.q, mod), self.y],
            [FieldMatrix.zeros(self.p, self.q, mod), self.xy],
        ])


def module_matrices(kind: str, k: int, mod: int | None = None) -> ModulePoint:
    """The indecomposable ``U_k^kind``: a string ``v_0 -> v_1 -> ... -> v_(k-1)``.

    ``v_0`` has degree ``kind``; degrees alternate and each arrow is ``x``
    (from a plus vector) or ``y`` (from a minus vector).  The row of the signed
    diagram reads this string right to left, so its rightmost box is ``kind``.
    """
    if kind not in (PLUS, MINUS) or k < 1:
        raise ValueError(f"bad module ({kind!r}, {k})")
    mod = default_prime() if mod is None else mod
    signs = [kind if t % 2 == 0 else (MINUS if kind == PLUS else PLUS) for t in range(k)]
    index, counts = [], {PLUS: 0, MINUS: 0}
    for s in signs:
        index.append(counts[s])
        counts[s] += 1
    q, p = counts[PLUS], counts[MINUS]
    x = [[0] * q for _ in range(p)]
    y = [[0] * p for _ in range(q)]
    for t in range(k - 1):
        src, dst = index[t], index[t + 1]
        if signs[t] == PLUS:
            x[dst][src] = 1
        else:
            y[dst][src] = 1
    return ModulePoint(FieldMatrix.of(x, mod, cols=q), FieldMatrix.of(y, mod, cols=p))


def direct_sum(points: Sequence[ModulePoint]) -> ModulePoint:
    mod = points[0].x.mod
    q = sum(pt.q for pt in points)
    p = sum(pt.p for pt in points)
    x = [[0] * q for _ in range(p)]
    y = [[0] * p for _ in range(q)]
    r0 = c0 = 0
    for pt in points:
        for i in range(pt.p):
            for j in range(pt.q):
                x[r0 + i][c0 + j] = pt.x[i, j]
                y[c0 + j][r0 + i] = pt.y[j, i]
        r0 += pt.p
        c0 += pt.q
    return ModulePoint(FieldMatrix.of(x, mod, cols=q), FieldMatrix.of(y, mod, cols=p))


def module_of_diagram(d: SignedYoungDiagram, mod: int | None = None) -> ModulePoint:
    """Direct sum of indecomposables, one per row (rightmost box gives the kind)."""
    rows = []
    for n, first in d.rows:
        last = first if n % 2 else (MINUS if first == PLUS else PLUS)
        rows.append(module_matrices(last, n, mod))
    return direct_sum(rows)


def pair_invariants(pt: ModulePoint) -> tuple:
    """``(J(yx), J(xy), dim ker x(yx)^i, dim ker y(xy)^i)`` for ``i`` up to ``p+q``."""
    yx, xy = pt.yx, pt.xy
    if not is_nilpotent(xy):
        raise ValueError("xy is not nilpotent")
    n = pt.p + pt.q
    ker_x, ker_y = [], []
    a, b = pt.x, pt.y
    for _ in range(n // 2 + 1):
        ker_x.append(kernel_dim(a))
        ker_y.append(kernel_dim(b))
        a, b = a @ yx, b @ xy
    return jordan_type(yx), jordan_type(xy), tuple(ker_x), tuple(ker_y)


def diagram_invariants(d: SignedYoungDiagram) -> tuple:
    """The same invariants read combinatorially off a signed diagram."""
    sig = d.signature
    n = sig.p + sig.q
    return (
        lambda_plus(d),
        lambda_minus(d),
        tuple(boxes_in_first_columns(d, PLUS, 2 * i + 1) for i in range(n // 2 + 1)),
        tuple(boxes_in_first_columns(d, MINUS, 2 * i + 1) for i in range(n // 2 + 1)),
    )


def syd_of_pair(pt: ModulePoint) -> SignedYoungDiagram:
    inv = pair_invariants(pt)
    matches = [d for d in enumerate_syd((pt.q, pt.p)) if diagram_invariants(d) == inv]
    if len(matches) != 1:
        raise OracleError(f"expected exactly one diagram with invariants {inv}, found {matches}")
    return matches[0]


def rank_table(x: FieldMatrix) -> list[list[int]]:
    """``R[i][j] = rank`` of rows ``j+1..p`` and columns ``1..i`` of ``x``.

    Equals ``dim(x E_i + F_j) - j``.
    """
    p, q = x.rows, x.cols
    return [[rank(x.submatrix(range(j, p), range(i))) if i and j < p else 0
             for j in range(p + 1)] for i in range(q + 1)]


def orbit_of_matrix(x: FieldMatrix) -> PartialPermutation:
    """The partial permutation labelling the orbit of ``x`` under upper-triangular ``(h, g)``."""
    r = rank_table(x)
    ones = []
    for l in range(1, x.cols + 1):
        for k in range(1, x.rows + 1):
            v = r[l][k - 1] - r[l - 1][k - 1] - r[l][k] + r[l - 1][k]
            if v:
                ones.append((k, l))
    return PartialPermutation(x.rows, x.cols, ones)


def fulton_holds(x: FieldMatrix, t: PartialPermutation) -> bool:
    """``dim(x E_i + F_j) == j + sum_{l<=i, k>j} t_kl`` for every ``i, j``."""
    r = rank_table(x)
    m = t.matrix()
    return all(
        r[i][j] == sum(m[k][l] for l in range(i) for k in range(j, t.p))
        for i in range(t.q + 1) for j in range(t.p + 1)
    )


def pp_matrix(t: PartialPermutation, mod: int | None = None) -> FieldMatrix:
    return FieldMatrix.of(t.matrix(), mod)


@dataclass(frozen=True)
class OrbitSample:
    x: FieldMatrix
    g: FieldMatrix
    h: FieldMatrix


def sample_orbit_point(t: PartialPermutation, rng: random.Random, mod: int | None = None) -> OrbitSample:
    """``x = h t g^-1`` with random invertible upper-triangular ``g`` (on V_q) and ``h`` (on V_p)."""
    mod = default_prime() if mod is None else mod
    g = random_upper_triangular(t.q, rng, mod)
    h = random_upper_triangular(t.p, rng, mod)
    x = h @ pp_matrix(t, mod) @ inverse(g)
    if not fulton_holds(x, t):
        raise OracleError(f"sampled point violates the rank conditions of {t}")
    return OrbitSample(x, g, h)


def conormal_fibre(x: FieldMatrix) -> list[FieldMatrix]:
    """Basis of ``{y : yx and xy strictly upper triangular}``."""
    p, q, mod = x.rows, x.cols, x.mod
    # unknown y[a][b] sits at position a*p + b
    equations = []
    for i in range(q):
        for j in range(i + 1):
            row = [0] * (q * p)
            for k in range(p):
                row[i * p + k] = x[k, j]
            equations.append(row)
    for i in range(p):
        for j in range(i + 1):
            row = [0] * (q * p)
            for k in range(q):
                row[k * p + j] = x[i, k]
            equations.append(row)
    system = FieldMatrix.of(equations, mod, cols=q * p) if equations else FieldMatrix.zeros(0, q * p, mod)
    return [
        FieldMatrix.of([[v[a * p + b] for b in range(p)] for a in range(q)], mod, cols=p)
        for v in nullspace(system)
    ]


def random_combination(basis: Sequence[FieldMatrix], rows: int, cols: int,
                       rng: random.Random, mod: int) -> FieldMatrix:
    out = FieldMatrix.zeros(rows, cols, mod)
    for b in basis:
        c = rng.randrange(mod)
        out = out + FieldMatrix.of([[c * v for v in r] for r in b.entries], mod, cols=cols)
    return out


@dataclass(frozen=True)
class Certificate:
    diagram: SignedYoungDiagram
    q_tab: RowStandardTableau
    p_tab: RowStandardTableau


@dataclass(frozen=True)
class GenericSample:
    x: FieldMatrix
    y: FieldMatrix
    certificate: Certificate

    @property
    def point(self) -> ModulePoint:
        return ModulePoint(self.x, self.y)


def certify(
    draw: Callable[[random.Random], tuple],
    certificate: Callable[[tuple], T],
    rng: random.Random,
    trials: int = DEFAULT_TRIALS,
    retries: int = DEFAULT_RETRIES,
) -> tuple[tuple, T]:
    """Draw ``trials`` independent samples until all certificates agree.

    Returns the first sample and the common certificate; after ``retries``
    disagreeing rounds raises :class:`InstabilityError`.
    """
    if trials < 2:
        raise ValueError("genericity needs at least two trials")
    seen = []
    for _ in range(retries):
        samples = [draw(rng) for _ in range(trials)]
        certs = [certificate(s) for s in samples]
        if all(c == certs[0] for c in certs):
            return samples[0], certs[0]
        seen.append(certs)
    raise InstabilityError(f"certificates disagreed in {retries} rounds: {seen[-1]}")


def _conormal_draw(t: PartialPermutation, mod: int):
    def draw(rng: random.Random) -> tuple[FieldMatrix, FieldMatrix]:
        x = sample_orbit_point(t, rng, mod).x
        y = random_combination(conormal_fibre(x), t.q, t.p, rng, mod)
        return x, y
    return draw


def _triple_certificate(sample: tuple[FieldMatrix, FieldMatrix]) -> Certificate:
    x, y = sample
    pt = ModulePoint(x, y)
    return Certificate(
        syd_of_pair(pt),
        tab_chain(pt.yx, Flag.full(pt.q)),
        tab_chain(pt.xy, Flag.full(pt.p)),
    )


def generic_conormal_sample(
    t: PartialPermutation,
    rng: random.Random,
    trials: int = DEFAULT_TRIALS,
    mod: int | None = None,
) -> GenericSample:
    """Generic point of the conormal bundle over the orbit of ``t``, with its triple."""
    mod = default_prime() if mod is None else mod
    (x, y), cert = certify(_conormal_draw(t, mod), _triple_certificate, rng, trials)
    return GenericSample(x, y, cert)


def oracle_triple(t: PartialPermutation, rng: random.Random, trials: int = DEFAULT_TRIALS):
    """``(diagram, Q, P)`` read off a certified generic conormal point."""
    c = generic_conormal_sample(t, rng, trials).certificate
    return c.diagram, c.q_tab, c.p_tab


def dual_orbit_check(t: PartialPermutation, rng: random.Random,
                     trials: int = DEFAULT_TRIALS, mod: int | None = None) -> PartialPermutation:
    """Orbit in ``Hom(V_p, V_q)`` of a generic conormal ``y``, flags' roles swapped."""
    mod = default_prime() if mod is None else mod
    _, tv = certify(_conormal_draw(t, mod), lambda s: orbit_of_matrix(s[1]), rng, trials)
    return tv


def bordered(x: FieldMatrix) -> FieldMatrix:
    """``x~ = [[I_q, 0], [x, I_p]]``."""
    p, q, mod = x.rows, x.cols, x.mod
    return FieldMatrix.block([
        [FieldMatrix.identity(q, mod), FieldMatrix.zeros(q, p, mod)],
        [x, FieldMatrix.identity(p, mod)],
    ])


def bordered_flags(x: FieldMatrix) -> tuple[Flag, Flag]:
    """``(x~ E~, F~)``: compositions ``(1,...,1,p)`` and ``(q,1,...,1)`` on ``V``."""
    p, q = x.rows, x.cols
    return Flag((1,) * q + (p,), bordered(x)), Flag.coordinate((q,) + (1,) * p)


def schubert_position(e: Flag, f: Flag, mod: int | None = None) -> MarginMatrix:
    """Relative position ``sigma``: rows follow ``f``, columns follow ``e``.

    ``dim(F_i cap E_j) = sum_{k<=i, l<=j} sigma_kl``.
    """
    if e.ambient != f.ambient:
        raise ValueError("flags live in different spaces")
    mod = default_prime() if mod is None else mod
    be, bf = e.basis_matrix(mod), f.basis_matrix(mod)
    fd, ed = (0,) + f.dims, (0,) + e.dims

    def meet(i: int, j: int) -> int:
        if fd[i] == 0 or ed[j] == 0:
            return 0
        span = FieldMatrix.block([[bf.submatrix(range(bf.rows), range(fd[i])),
                                   be.submatrix(range(be.rows), range(ed[j]))]])
        return fd[i] + ed[j] - rank(span)

    r = [[meet(i, j) for j in range(len(ed))] for i in range(len(fd))]
    return MarginMatrix(
        [r[i][j] - r[i - 1][j] - r[i][j - 1] + r[i - 1][j - 1] for j in range(1, len(ed))]
        for i in range(1, len(fd))
    )


@dataclass(frozen=True)
class SchubertPoint:
    """A base point of a Schubert cell ``Y(sigma)`` with a basis of its conormal fibre.

    Basis vectors are grouped into blocks ``(k, l)`` of size ``sigma_kl`` and
    ordered by ``k`` then ``l``: the row flag is the coordinate flag, the
    column flag is spanned by blocks with ``l <= j``.
    """

    row_flag: Flag
    col_flag: Flag
    allowed: tuple[tuple[int, int], ...]
    size: int


def schubert_point(sigma: MarginMatrix, mod: int | None = None) -> SchubertPoint:
    mod = default_prime() if mod is None else mod
    blocks = [(k, l) for k in range(sigma.rows) for l in range(sigma.cols) for _ in range(sigma[k, l])]
    n = len(blocks)
    by_col = sorted(range(n), key=lambda v: (blocks[v][1], blocks[v][0]))
    perm = FieldMatrix.of([[int(by_col[c] == r) for c in range(n)] for r in range(n)], mod, cols=n)
    allowed = tuple(
        (r, c) for c in range(n) for r in range(n)
        if blocks[r][0] < blocks[c][0] and blocks[r][1] < blocks[c][1]
    )
    return SchubertPoint(
        Flag.coordinate(sigma.row_margins),
        Flag(sigma.col_margins, perm),
        allowed,
        n,
    )


def oracle_variant_rsk(
    sigma: MarginMatrix,
    rng: random.Random,
    trials: int = DEFAULT_TRIALS,
    mod: int | None = None,
) -> tuple[RowStandardTableau, RowStandardTableau]:
    """``(Tab(z, E), Tab(z, F))`` for generic ``z`` conormal to ``Y(sigma)``.

    ``E`` has content the column margins and ``F`` the row margins.
    """
    mod = default_prime() if mod is None else mod
    pt = schubert_point(sigma, mod)

    def draw(r: random.Random) -> FieldMatrix:
        z = [[0] * pt.size for _ in range(pt.size)]
        for i, j in pt.allowed:
            z[i][j] = r.randrange(mod)
        return FieldMatrix.of(z, mod, cols=pt.size)

    def cert(z: FieldMatrix):
        return tab_chain(z, pt.col_flag), tab_chain(z, pt.row_flag)

    _, pair = certify(draw, cert, rng, trials)
    return pair


def oracle_schubert_tableaux(
    sigma: MarginMatrix, rng: random.Random, trials: int = DEFAULT_TRIALS, mod: int | None = None
) -> tuple[FieldMatrix, Flag, RowStandardTableau]:
    """A certified generic ``(z, F)`` with ``Tab(z, F)``, ``F`` the row flag of ``Y(sigma)``.

    Used to check rectification and evacuation against the quotient-flag chains.
    """
    mod = default_prime() if mod is None else mod
    pt = schubert_point(sigma, mod)

    def draw(r: random.Random) -> FieldMatrix:
        z = [[0] * pt.size for _ in range(pt.size)]
        for i, j in pt.allowed:
            z[i][j] = r.randrange(mod)
        return FieldMatrix.of(z, mod, cols=pt.size)

    def cert(z: FieldMatrix):
        n = len(pt.row_flag.composition)
        return (
            tab_chain(z, pt.row_flag),
            tuple(quotient_chain(z, pt.row_flag, i) for i in range(1, n)),
            evacuation_chain(z, pt.row_flag),
        )

    z, (tab, _, _) = certify(draw, cert, rng, trials)
    return z, pt.row_flag, tab
