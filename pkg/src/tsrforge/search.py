"""Primitive-register search and the two census conjectures.

The search walks (f, g) pairs: f a monic primitive polynomial of degree m
over F_q, g monic of degree n with g(0) = 0, accepting when f(g(X)) is
primitive of degree mn.  From a hit it assembles the register directly:
alpha is the residue class of X in F_q[X]/(f), lam = alpha^{-1}, the monic
reciprocal of g - alpha is X^n - lam*L(X) whose tail L supplies the taps,
and B is the companion matrix of the minimal polynomial of lam.  The
characteristic polynomial is replayed as the product of coefficient
conjugates of X^n - lam*L(X), which equals the monic reciprocal of f(g(X))
in every characteristic (over F_2 the signs collapse to the usual ones).
"""

from dataclasses import dataclass

from .errors import (BadDegree, BudgetExhausted, ExistenceViolation,
                     InvalidParity, ZeroConstantTerm)
from .fields import Field, is_prime_int, make_extension_field, make_field, subfield_maps
from .guards import check_field
from .matrices import Matrix
from .matrices import companion_matrix as _companion
from .parallel import first_hit
from .polys import Polynomial
from .primitivity import (PrimitivityCertificate, conjugate_product,
                          is_primitive_element, is_primitive_poly,
                          minimal_polynomial)
from .tsr import TsrSpec, tsr_charpoly_formula


@dataclass(frozen=True)
class SearchProvenance:
    """Intermediates of the nine search steps."""

    f: Polynomial
    g: Polynomial
    alpha: object
    lam: object
    step5: Polynomial
    h: Polynomial
    A: Matrix
    step8: Polynomial


@dataclass(frozen=True)
class SearchResult:
    spec: TsrSpec
    charpoly: Polynomial
    certificate: PrimitivityCertificate
    provenance: SearchProvenance


@dataclass(frozen=True)
class ConjectureWitness:
    q: int
    m: int
    n: int
    witness: object
    found: bool
    candidates_tried: int
    form: str
    converted: object = None
    conversion_ok: bool = False


def companion_matrix(h: Polynomial) -> Matrix:
    """Companion matrix of a monic h with h(0) != 0 (hence invertible)."""
    if h.constant_term.is_zero():
        raise ZeroConstantTerm("companion matrix of a register block needs h(0) != 0")
    return _companion(h)


def reciprocal(k: Polynomial, degree_hint: int) -> Polynomial:
    """Monic reversal X^d * k(1/X) within ambient degree d = degree_hint."""
    if k.is_zero() or k.constant_term.is_zero():
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    if degree_hint < k.degree:
        raise BadDegree(f"ambient degree {degree_hint} below deg k = {k.degree}")
    rev = Polynomial.make(k.field, [k.coeff(degree_hint - i) for i in range(degree_hint + 1)])
    return rev.monic()


def _monic_scan(field: Field, degree: int, zero_constant: bool):
    """Monic polynomials of exact degree, ascending by coefficient encoding.

    zero_constant pins the constant term to 0 and scans the middle digits.
    """
    q = field.order
    elems = list(field.elements())
    free = degree - 1 if zero_constant else degree
    for enc in range(q ** free):
        v = enc
        coeffs = [field.zero()] if zero_constant else []
        for _ in range(free):
            coeffs.append(elems[v % q])
            v //= q
        coeffs.append(field.one())
        yield Polynomial.make(field, coeffs)


def primitive_polys(field: Field, degree: int) -> list[Polynomial]:
    """Monic primitive polynomials of the given degree, ascending."""
    out = []
    for f in _monic_scan(field, degree, zero_constant=False):
        if f.constant_term.is_zero():
            continue
        if is_primitive_poly(f)[0]:
            out.append(f)
    return out


def _alpha_field(q: int, m: int, f: Polynomial):
    """F_q[X]/(f) together with alpha, the class of X (a root of f).

    For prime q the quotient is built with f itself as the modulus, so alpha
    is literally the generator.  For prime powers the standard F_{q^m} is
    searched for the least root of f.
    """
    if m == 1:
        field = f.field
        alpha = -f.constant_term
        return field, alpha, (lambda e: e)
    if is_prime_int(q):
        field = make_extension_field(q, m, modulus=tuple(int(c.int_value) for c in f.coeffs))
        _, embed, _ = subfield_maps(field, q)
        return field, field.gen(), embed
    field = make_field(q ** m)
    _, embed, _ = subfield_maps(field, q)
    lifted = Polynomial.make(field, [embed(c) for c in f.coeffs])
    for x in field.elements():
        if lifted(x).is_zero():
            return field, x, embed
    raise ExistenceViolation("a primitive polynomial must split in its splitting field")


def search_primitive_tsr(q: int, m: int, n: int, budget: int | None = None,
                         allow_even_n: bool = False, threads: int = 1) -> SearchResult:
    """First (f, g) hit in scan order, assembled into a primitive register."""
    if q >= 3 and n % 2 == 0 and not allow_even_n:
        raise InvalidParity(f"n = {n} even is out of scope for q = {q} >= 3")
    check_field(q ** m, "block field")
    check_field(q ** n, "tap space")
    base = make_field(q)
    g_total = q ** (n - 1)
    tried = 0
    for f in _iter_primitive(base, m):
        remaining = g_total if budget is None else min(g_total, budget - tried)
        if remaining <= 0:
            break
        gs = list(_monic_scan(base, n, zero_constant=True))

        def probe(idx, f=f, gs=gs):
            comp = f.compose(gs[idx])
            return gs[idx] if is_primitive_poly(comp)[0] else None

        hit = first_hit(probe, remaining, threads)
        if hit is None:
            tried += remaining
            continue
        tried += hit[0] + 1
        return _assemble(q, m, n, base, f, hit[1])
    raise BudgetExhausted(f"no primitive register found after {tried} candidate pairs", tried)


def _iter_primitive(field: Field, degree: int):
    for f in _monic_scan(field, degree, zero_constant=False):
        if not f.constant_term.is_zero() and is_primitive_poly(f)[0]:
            yield f


def _assemble(q: int, m: int, n: int, base: Field, f: Polynomial, g: Polynomial) -> SearchResult:
    big, alpha, embed = _alpha_field(q, m, f)
    lam = alpha.inverse()
    g_big = Polynomial.make(big, [embed(c) for c in g.coeffs])
    k = g_big - Polynomial.constant(big, alpha)
    step5 = reciprocal(k, n)
    h = minimal_polynomial(lam, q)
    A = companion_matrix(_over(h, base))
    # taps read from L = X^n g(1/X): L_i = g_{n-i}, L_0 = 1 since g is monic
    taps = tuple(g.coeff(n - i) for i in range(1, n))
    spec = TsrSpec(base, m, n, taps, A)
    charpoly = tsr_charpoly_formula(spec)
    step8 = _over(conjugate_product(step5, q), base)
    assert step8 == charpoly, "conjugate-product replay must reproduce the characteristic polynomial"
    assert reciprocal(f.compose(g), m * n) == charpoly, \
        "characteristic polynomial must be the monic reciprocal of f(g(X))"
    ok, cert = is_primitive_poly(charpoly)
    assert ok, "accepted composition must yield a primitive characteristic polynomial"
    prov = SearchProvenance(f, g, alpha, lam, step5, h, A, step8)
    return SearchResult(spec, charpoly, cert, prov)


def _over(p: Polynomial, field: Field) -> Polynomial:
    """Rebase a polynomial onto an equal field object."""
    if p.field == field:
        return Polynomial.make(field, [field.element(int(c.int_value)) for c in p.coeffs])
    raise BadDegree(f"polynomial lives over GF({p.field.order}), expected GF({field.order})")


def verify_conjecture(q: int, m: int, n: int, form: str, budget: int | None = None) -> ConjectureWitness:
    """Scan for a witness in one form, then convert it to the other and re-verify.

    direct: some g(X) + lam over F_{q^m} is primitive, with g over F_q of
    degree n (any leading coefficient), g(0) = 0, lam primitive.
    composition: some f(g(X)) is primitive of degree mn over F_q, with f
    monic primitive of degree m and g monic of degree n, g(0) = 0.
    """
    if form == "direct":
        return _verify_direct(q, m, n, budget)
    if form == "composition":
        return _verify_composition(q, m, n, budget)
    raise BadDegree(f"unknown conjecture form {form!r}")


def _direct_candidates(q: int, m: int, n: int):
    base = make_field(q)
    big = make_field(q ** m)
    _, embed, _ = subfield_maps(big, q)
    lams = [x for x in big.elements() if not x.is_zero() and is_primitive_element(x)]
    nonzero = [e for e in base.elements() if not e.is_zero()]
    elems = list(base.elements())
    for enc in range(q ** (n - 1)):
        v = enc
        mids = []
        for _ in range(n - 1):
            mids.append(elems[v % q])
            v //= q
        for lead in nonzero:
            g = Polynomial.make(base, [base.zero()] + mids + [lead])
            g_big = Polynomial.make(big, [embed(c) for c in g.coeffs])
            for lam in lams:
                yield g, lam, g_big + Polynomial.constant(big, lam)


def _verify_direct(q: int, m: int, n: int, budget: int | None) -> ConjectureWitness:
    check_field(q ** m, "witness field")
    tried = 0
    for g, lam, cand in _direct_candidates(q, m, n):
        if budget is not None and tried >= budget:
            raise BudgetExhausted(f"direct scan stopped after {tried} candidates", tried)
        tried += 1
        if is_primitive_poly(cand)[0]:
            converted, ok = _direct_to_composition(q, m, n, g, lam)
            return ConjectureWitness(q, m, n, cand, True, tried, "direct", converted, ok)
    return ConjectureWitness(q, m, n, None, False, tried, "direct")


def _verify_composition(q: int, m: int, n: int, budget: int | None) -> ConjectureWitness:
    check_field(q ** m, "root field")
    base = make_field(q)
    tried = 0
    for f in _iter_primitive(base, m):
        for g in _monic_scan(base, n, zero_constant=True):
            if budget is not None and tried >= budget:
                raise BudgetExhausted(f"composition scan stopped after {tried} candidates", tried)
            tried += 1
            if is_primitive_poly(f.compose(g))[0]:
                converted, ok = _composition_to_direct(q, m, n, f, g)
                return ConjectureWitness(q, m, n, (f, g), True, tried, "composition", converted, ok)
    return ConjectureWitness(q, m, n, None, False, tried, "composition")


def _composition_to_direct(q, m, n, f, g):
    """f(g) primitive -> -g + alpha is a direct witness (lam = alpha primitive)."""
    big, alpha, embed = _alpha_field(q, m, f)
    g_big = Polynomial.make(big, [embed(c) for c in g.coeffs])
    cand = -g_big + Polynomial.constant(big, alpha)
    ok = is_primitive_element(alpha) and is_primitive_poly(cand)[0]
    return cand, ok


def _direct_to_composition(q, m, n, g, lam):
    """g + lam primitive -> (minpoly(-c^{-1} lam), c^{-1} g) when -c^{-1} lam

    is itself primitive; the constant must be primitive for the composition
    to land back in the conjecture's domain, and that can genuinely fail.
    """
    big = lam.owner
    base = make_field(q)
    _, embed, descend = subfield_maps(big, q)
    c = g.leading
    c_big = embed(c)
    alpha2 = -(c_big.inverse() * lam)
    if not is_primitive_element(alpha2):
        return None, False
    f2 = minimal_polynomial(alpha2, q)
    if f2.degree != m:
        return None, False
    g2 = g.scale(c.inverse())
    f2b = _over(f2, base)
    g2b = _over(g2, base)
    ok = is_primitive_poly(f2b.compose(g2b))[0]
    return (f2b, g2b), ok


def find_trace_one_quadratic(m: int) -> Polynomial:
    """Least primitive X^2 + lam*X + lam over F_{2^m}, lam primitive."""
    check_field(2 ** (2 * m), "quadratic splitting field")
    field = make_field(2 ** m)
    one = field.one()
    for lam in field.elements():
        if lam.is_zero() or not is_primitive_element(lam):
            continue
        cand = Polynomial.make(field, [lam, lam, one])
        if is_primitive_poly(cand)[0]:
            return cand
    raise ExistenceViolation(f"no primitive X^2 + lam X + lam over GF({2 ** m}); "
                             "existence is a theorem, so this indicates an arithmetic bug")
