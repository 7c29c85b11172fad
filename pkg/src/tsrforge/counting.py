"""Census machinery: closed-form counts and exhaustive oracles.

The closed forms count primitive/irreducible registers of several shapes;
the enumerators rebuild the same numbers by brute force so each side checks
the other.
"""

from .errors import BadDegree, FiberSizeViolation, UnknownKind
from .factorint import euler_phi, factor_integer, moebius
from .fields import Field, make_field, subfield_maps
from .guards import check_custom, check_enumeration, guard_bits
from .matrices import Matrix, matrix_charpoly, matrix_is_invertible
from .parallel import deterministic_map
from .polys import Polynomial, format_poly
from .primitivity import is_primitive_element, is_primitive_poly
from .tsr import TsrSpec, is_primitive_tsr


def gl_order(q: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= q ** m - q ** i
    return out


def closed_form_count(kind: str, q: int, m: int | None = None, n: int | None = None) -> int:
    """Exact closed-form census for the named register family."""
    if kind == "lfsr_prim":
        return _exact_div(euler_phi(q ** n - 1), n)
    if kind == "lfsr_irr":
        return _exact_div(sum(moebius(d) * q ** (n // d) for d in factor_integer(n).divisors()), n)
    if kind == "sigma_prim":
        return _exact_div(euler_phi(q ** (m * n) - 1), m * n) \
            * q ** (m * (m - 1) * (n - 1)) * _gl_tail(q, m)
    if kind == "sigma_irr":
        mn = m * n
        irr = _exact_div(sum(moebius(d) * q ** (mn // d) for d in factor_integer(mn).divisors()), mn)
        return irr * q ** (m * (m - 1) * (n - 1)) * _gl_tail(q, m)
    if kind == "gl_order":
        return gl_order(q, m)
    if kind == "tsr_order1":
        return _exact_div(gl_order(q, m), q ** m - 1) * _exact_div(euler_phi(q ** m - 1), m)
    if kind == "tsr_m1":
        return _exact_div(euler_phi(q ** n - 1), n)
    raise UnknownKind(f"unknown census kind {kind!r}")


def _gl_tail(q: int, m: int) -> int:
    out = 1
    for i in range(1, m):
        out *= q ** m - q ** i
    return out


def _exact_div(a: int, b: int) -> int:
    quot, rem = divmod(a, b)
    if rem:
        raise FiberSizeViolation(f"{a} is not divisible by {b}")
    return quot


def count_matrices_with_charpoly(p: Polynomial, m: int) -> int:
    """Exhaustive count of m x m matrices whose characteristic polynomial is p."""
    if p.degree != m:
        raise BadDegree(f"polynomial degree {p.degree} != m = {m}")
    field = p.field
    q = field.order
    check_custom(q ** (m * m), 20, "matrix space")
    elems = list(field.elements())
    count = 0
    total = q ** (m * m)
    for enc in range(total):
        v = enc
        entries = []
        for _ in range(m * m):
            entries.append(elems[v % q])
            v //= q
        M = Matrix(field, m, m, tuple(entries))
        if matrix_charpoly(M) == p:
            count += 1
    return count


def primitive_elements(field: Field) -> list:
    """Primitive elements in ascending canonical encoding."""
    return [x for x in field.elements() if not x.is_zero() and is_primitive_element(x)]


def enumerate_special_primitives(q: int, m: int, n: int, form: str, threads: int = 1) -> list[Polynomial]:
    """Exhaustive primitive census in one of the two special shapes.

    P_qmn: X^n - mu*g(X) with g over F_q, g(0) = 1, deg g <= n-1, mu primitive
    in F_{q^m}.  P_mnq: g(X) + lam with g over F_q monic of degree n, g(0) = 0,
    lam primitive.  Sorted by canonical text.
    """
    if form not in ("P_qmn", "P_mnq"):
        raise UnknownKind(f"unknown enumeration form {form!r}")
    # guard before the primitive-element scan; phi counts that scan's output
    space = q ** (n - 1) * euler_phi(q ** m - 1)
    check_custom(space, guard_bits("field"), "candidate space")
    big = make_field(q ** m)
    base, embed, _ = subfield_maps(big, q)
    prims = primitive_elements(big)
    candidates = []
    for enc in range(q ** (n - 1)):
        digits = []
        v = enc
        for _ in range(n - 1):
            digits.append(v % q)
            v //= q
        if form == "P_qmn":
            # embedded g with constant term 1, degree <= n-1
            g_emb = [big.one()] + [embed(base.element(d)) for d in digits]
            for mu in prims:
                coeffs = [-(mu * c) for c in g_emb] + [big.zero()] * (n - len(g_emb))
                coeffs.append(big.one())
                candidates.append(Polynomial.make(big, coeffs))
        else:
            g_emb = [big.zero()] + [embed(base.element(d)) for d in digits] + [big.one()]
            for lam in prims:
                coeffs = list(g_emb)
                coeffs[0] = lam
                candidates.append(Polynomial.make(big, coeffs))
    flags = deterministic_map(lambda f: is_primitive_poly(f)[0], candidates, threads)
    found = [f for f, ok in zip(candidates, flags) if ok]
    return sorted(found, key=format_poly)


def gl_matrices(field: Field, m: int):
    """All invertible m x m matrices, ascending by entry encoding."""
    q = field.order
    elems = list(field.elements())
    for enc in range(q ** (m * m)):
        v = enc
        entries = []
        for _ in range(m * m):
            entries.append(elems[v % q])
            v //= q
        M = Matrix(field, m, m, tuple(entries))
        if matrix_is_invertible(M):
            yield M


def enumerate_tsrp_bruteforce(q: int, m: int, n: int, threads: int = 1) -> list[TsrSpec]:
    """All primitive registers at (q, m, n), scanning (taps, B) ascending."""
    field = make_field(q)
    space = q ** (n - 1) * gl_order(q, m)
    check_enumeration(space)
    mats = list(gl_matrices(field, m))
    candidates = []
    for enc in range(q ** (n - 1)):
        v = enc
        c = []
        for _ in range(n - 1):
            c.append(field.element(v % q))
            v //= q
        for B in mats:
            candidates.append(TsrSpec(field, m, n, tuple(c), B))
    flags = deterministic_map(is_primitive_tsr, candidates, threads)
    return [s for s, ok in zip(candidates, flags) if ok]


def tsrp_count_theorem(q: int, m: int, n: int, p_count: int) -> int:
    """Register count implied by a special-primitive census of size p_count."""
    if p_count % m:
        raise FiberSizeViolation(f"census size {p_count} is not a multiple of m = {m}")
    return (p_count // m) * _exact_div(gl_order(q, m), q ** m - 1)


def tsrp_upper_bound(q: int, m: int, n: int) -> int:
    """(q^{n-1} - 1) * phi(q^m - 1)/m * |GL_m|/(q^m - 1)."""
    return (q ** (n - 1) - 1) * _exact_div(euler_phi(q ** m - 1), m) \
        * _exact_div(gl_order(q, m), q ** m - 1)
