"""Transformation shift registers over F_q.

A register of order n with block size m holds n row vectors of width m and
evolves by s_{i+n} = s_i B + s_{i+1} (c_1 B) + ... + s_{i+n-1} (c_{n-1} B)
with B invertible; the normalized form fixes c_0 = 1 by absorbing it into B.
The transition matrix has identity blocks on the subdiagonal and last block
column (B, c_1 B, ..., c_{n-1} B).
"""

from dataclasses import dataclass

from .errors import BadDegree, DimensionMismatch, SingularB, ZeroConstantTerm
from .factorint import factor_integer, merged_factorization, multiplicative_order_from
from .fields import Field, FieldElement, make_field
from .guards import check_field
from .matrices import Matrix, matrix_charpoly, matrix_is_invertible
from .polys import Polynomial, poly_gcd, poly_modpow
from .primitivity import is_primitive_poly


@dataclass(frozen=True)
class TsrSpec:
    """Normalized register: block size m, order n, taps c_1..c_{n-1}, matrix B."""

    field: Field
    m: int
    n: int
    c: tuple[FieldElement, ...]
    B: Matrix

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise DimensionMismatch("m and n must be positive")
        if len(self.c) != self.n - 1:
            raise DimensionMismatch(f"need {self.n - 1} tap coefficients, got {len(self.c)}")
        if any(ci.owner != self.field for ci in self.c):
            raise DimensionMismatch("tap coefficients must live in the base field")
        if self.B.rows != self.m or self.B.cols != self.m or self.B.field != self.field:
            raise DimensionMismatch("B must be m x m over the base field")
        if not matrix_is_invertible(self.B):
            raise SingularB("B must be invertible")

    @property
    def q(self) -> int:
        return self.field.order

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "m": self.m,
            "n": self.n,
            "c": [ci.int_value for ci in self.c],
            "B": [[self.B.at(i, j).int_value for j in range(self.m)] for i in range(self.m)],
        }

    @staticmethod
    def from_json(doc: dict) -> "TsrSpec":
        field = make_field(int(doc["q"]))
        m, n = int(doc["m"]), int(doc["n"])
        c = tuple(field.element(int(v)) for v in doc["c"])
        B = Matrix.from_rows(field, [[field.element(int(v)) for v in row] for row in doc["B"]])
        return TsrSpec(field, m, n, c, B)


@dataclass(frozen=True)
class TsrState:
    """n row vectors of width m plus the number of steps taken."""

    blocks: tuple[tuple[FieldElement, ...], ...]
    step_index: int = 0

    def flatten(self) -> tuple[FieldElement, ...]:
        return tuple(v for block in self.blocks for v in block)

    @staticmethod
    def from_ints(spec: TsrSpec, values) -> "TsrState":
        vals = [spec.field.element(int(v)) for v in values]
        if len(vals) != spec.m * spec.n:
            raise DimensionMismatch("state needs m*n entries")
        blocks = tuple(tuple(vals[i * spec.m:(i + 1) * spec.m]) for i in range(spec.n))
        return TsrState(blocks, 0)


@dataclass(frozen=True)
class Decomposition:
    """f = g^m h(X^n / g) with g(0) = 1, deg g <= n-1, h monic of degree m, h(0) != 0."""

    g: Polynomial
    h: Polynomial
    m: int
    n: int

    def recompose(self) -> Polynomial:
        field = self.g.field
        acc = Polynomial.zero(field)
        g_pow = [Polynomial.one(field)]
        for _ in range(self.m):
            g_pow.append(g_pow[-1] * self.g)
        for k in range(self.m + 1):
            hk = self.h.coeff(k)
            if hk.is_zero():
                continue
            term = g_pow[self.m - k].shift(self.n * k).scale(hk)
            acc = acc + term
        return acc


def build_transition_matrix(spec: TsrSpec) -> Matrix:
    field, m, n = spec.field, spec.m, spec.n
    size = m * n
    zero, one = field.zero(), field.one()
    rows = [[zero] * size for _ in range(size)]
    for t in range(n - 1):
        for i in range(m):
            rows[(t + 1) * m + i][t * m + i] = one
    taps = (one,) + spec.c
    for j in range(n):
        cj = taps[j]
        if cj.is_zero():
            continue
        for i in range(m):
            for k in range(m):
                rows[j * m + i][(n - 1) * m + k] = spec.B.at(i, k) * cj
    return Matrix.from_rows(field, rows)


def tsr_step(spec: TsrSpec, state: TsrState) -> TsrState:
    field, m, n = spec.field, spec.m, spec.n
    if len(state.blocks) != n or any(len(b) != m for b in state.blocks):
        raise DimensionMismatch("state shape does not match the spec")
    taps = (field.one(),) + spec.c
    new_last = [field.zero()] * m
    for j in range(n):
        cj = taps[j]
        if cj.is_zero():
            continue
        block = state.blocks[j]
        for t in range(m):
            acc = field.zero()
            for s in range(m):
                bs = block[s]
                if not bs.is_zero():
                    acc = acc + bs * spec.B.at(s, t)
            if not acc.is_zero():
                new_last[t] = new_last[t] + acc * cj
    blocks = state.blocks[1:] + (tuple(new_last),)
    return TsrState(blocks, state.step_index + 1)


def tap_polynomial(spec: TsrSpec) -> Polynomial:
    """g_T(X) = 1 + c_1 X + ... + c_{n-1} X^{n-1}."""
    return Polynomial.make(spec.field, (spec.field.one(),) + spec.c)


def tsr_charpoly_formula(spec: TsrSpec) -> Polynomial:
    """Denominator-cleared g_T^m Psi_B(X^n / g_T): sum of (Psi_B)_k X^{nk} g_T^{m-k}."""
    psi_b = matrix_charpoly(spec.B)
    g = tap_polynomial(spec)
    field, m, n = spec.field, spec.m, spec.n
    g_pow = [Polynomial.one(field)]
    for _ in range(m):
        g_pow.append(g_pow[-1] * g)
    acc = Polynomial.zero(field)
    for k in range(m + 1):
        pk = psi_b.coeff(k)
        if pk.is_zero():
            continue
        acc = acc + g_pow[m - k].shift(n * k).scale(pk)
    return acc


def tsr_charpoly_direct(spec: TsrSpec) -> Polynomial:
    return matrix_charpoly(build_transition_matrix(spec))


def tsr_period(spec: TsrSpec) -> int:
    """Multiplicative order of the transition matrix."""
    q, mn = spec.q, spec.m * spec.n
    check_field(q ** mn)
    psi = tsr_charpoly_formula(spec)
    dpsi = psi.derivative()
    squarefree = (not dpsi.is_zero()) and poly_gcd(psi, dpsi).degree == 0
    exp_factors = merged_factorization(q ** d - 1 for d in range(1, mn + 1))
    exponent = 1
    for prime, mult in exp_factors.items():
        exponent *= prime ** mult
    if squarefree:
        X = Polynomial.x(spec.field)
        one = Polynomial.one(spec.field)
        pow_fn = lambda e: poly_modpow(X, e, psi)
        assert pow_fn(exponent) == one, "exponent bound must annihilate X mod psi"
        return multiplicative_order_from(pow_fn, one, exponent, exp_factors)
    # repeated factors: order the matrix itself, exponent padded by the
    # characteristic part covering unipotent blocks
    p = spec.field.characteristic
    pk = 1
    ppart = 0
    while pk < mn:
        pk *= p
        ppart += 1
    factors = dict(exp_factors)
    if ppart:
        factors[p] = factors.get(p, 0) + ppart
        exponent *= p ** ppart
    T = build_transition_matrix(spec)
    ident = Matrix.identity(spec.field, mn)
    pow_fn = lambda e: T.power(e)
    assert pow_fn(exponent) == ident, "exponent bound must annihilate T"
    return multiplicative_order_from(pow_fn, ident, exponent, factors)


def mn_decompose(f: Polynomial, m: int, n: int):
    """First (g, h) with f = g^m h(X^n/g), scanning g ascending; None if none exists."""
    if f.degree != m * n:
        raise BadDegree(f"degree {f.degree} != m*n = {m * n}")
    if not f.is_monic():
        raise BadDegree("decomposition target must be monic")
    if f.constant_term.is_zero():
        raise ZeroConstantTerm("f(0) = 0 admits no invertible register")
    field = f.field
    q = field.order
    one = field.one()
    for enc in range(q ** (n - 1)):
        digits = []
        v = enc
        for _ in range(n - 1):
            digits.append(v % q)
            v //= q
        g = Polynomial.make(field, [one] + [field.element(d) for d in digits])
        dec = _peel(f, g, m, n)
        if dec is not None:
            return dec
    return None


def _peel(f: Polynomial, g: Polynomial, m: int, n: int):
    field = f.field
    D = g.degree
    lead = g.leading
    g_pow = [Polynomial.one(field)]
    for _ in range(m):
        g_pow.append(g_pow[-1] * g)
    rem = f
    h_coeffs = [field.zero()] * (m + 1)
    for k in range(m, -1, -1):
        target = n * k + D * (m - k)
        if rem.degree > target:
            return None
        hk = rem.coeff(target) * (lead ** (m - k)).inverse() if rem.degree == target else field.zero()
        if not hk.is_zero():
            h_coeffs[k] = hk
            rem = rem - g_pow[m - k].shift(n * k).scale(hk)
    if not rem.is_zero():
        return None
    h = Polynomial.make(field, h_coeffs)
    if h.degree != m or h.constant_term.is_zero():
        return None
    return Decomposition(g, h, m, n)


def is_primitive_tsr(spec: TsrSpec) -> bool:
    return is_primitive_poly(tsr_charpoly_formula(spec))[0]
