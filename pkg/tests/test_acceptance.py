"""Acceptance gate: one test per shipped claim, one pass/fail line each.

Each test prints CRITERION k PASS/FAIL with forensics and then asserts the
claim exactly as stated; a claim that does not hold fails here, loudly.
"""

import random
import time

from tsrforge import cli
from tsrforge.cosets import count_trace_one_classes, primitive_trace_one_count
from tsrforge.counting import (count_matrices_with_charpoly,
                               enumerate_special_primitives,
                               enumerate_tsrp_bruteforce, gl_matrices,
                               tsrp_count_theorem, tsrp_upper_bound)
from tsrforge.factorint import euler_phi
from tsrforge.fields import make_field
from tsrforge.matrices import Matrix, matrix_is_invertible
from tsrforge.polys import format_poly
from tsrforge.primitivity import is_primitive_poly
from tsrforge.search import primitive_polys, search_primitive_tsr, verify_conjecture
from tsrforge.tables import TABLE_IDS, generate_table, membership_report, row_counts
from tsrforge.tsr import (TsrSpec, TsrState, is_primitive_tsr, tsr_charpoly_direct,
                          tsr_charpoly_formula, tsr_period, tsr_step)

# the six points small enough for a full invertible census
BRUTE_GRID = ((2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 3), (3, 2, 1), (5, 2, 1))


def _line(k: int, ok: bool, detail: str) -> None:
    print(f"CRITERION {k} {'PASS' if ok else 'FAIL'}: {detail}")


def _csv_rows(out: str) -> list[list[str]]:
    lines = out.splitlines()
    assert lines[0] == "# table r_table" and lines[1] == "m,r,P2m2"
    return [line.split(",") for line in lines[2:]]


def test_criterion_01_r_table_reproduction(capsys):
    t0 = time.monotonic()
    assert cli.main(["count-r"]) == 0
    base_elapsed = time.monotonic() - t0
    rows = _csv_rows(capsys.readouterr().out)
    r_seq = [int(r[1]) for r in rows]
    p_seq = [int(r[2]) for r in rows]

    t0 = time.monotonic()
    assert cli.main(["count-r", "--deep"]) == 0
    deep_elapsed = time.monotonic() - t0
    deep = {int(r[0]): int(r[1]) for r in _csv_rows(capsys.readouterr().out)}

    ok = (r_seq == [1, 1, 1, 2, 3, 6, 7, 16, 25]
          and p_seq == [2, 3, 4, 10, 18, 42, 56, 144, 250]
          and base_elapsed <= 60.0
          and deep[11] == 57 and deep[12] == 68
          and deep_elapsed <= 900.0)
    _line(1, ok, f"r={r_seq} P={p_seq} deep r11={deep[11]} r12={deep[12]} "
                 f"in {base_elapsed:.1f}s + {deep_elapsed:.1f}s")
    assert ok


def test_criterion_02_element_level_cross_check():
    bad = []
    for m in range(2, 11):
        r, _ = count_trace_one_classes(m)
        tally = primitive_trace_one_count(m)
        if tally != 2 * r * m:
            bad.append(f"m={m}: {tally} != 2*{r}*{m}")
    _line(2, not bad, "primitive trace-one tally equals 2rm for m = 2..10"
          if not bad else "; ".join(bad))
    assert not bad


def test_criterion_03_matrix_count_oracle():
    t0 = time.monotonic()
    bad = []
    for q, want in ((2, 2), (3, 6)):
        field = make_field(q)
        prims = primitive_polys(field, 2)
        if not prims:
            bad.append(f"no primitive quadratic over F_{q}")
        for p in prims:
            got = count_matrices_with_charpoly(p, 2)
            if got != want:
                bad.append(f"F_{q} {format_poly(p)}: {got} != {want}")
    elapsed = time.monotonic() - t0
    ok = not bad and elapsed < 1.0
    _line(3, ok, f"matrix census per primitive quadratic is 2 over F_2, 6 over F_3 "
                 f"in {elapsed:.2f}s" if ok else "; ".join(bad) or f"{elapsed:.2f}s over budget")
    assert ok


def test_criterion_04_bruteforce_matches_theorem():
    bad = []
    for q, m, n in BRUTE_GRID:
        t0 = time.monotonic()
        brute = len(enumerate_tsrp_bruteforce(q, m, n))
        p_count = len(enumerate_special_primitives(q, m, n, "P_mnq"))
        theo = tsrp_count_theorem(q, m, n, p_count)
        elapsed = time.monotonic() - t0
        if brute != theo or elapsed > 30.0:
            bad.append(f"({q},{m},{n}): brute {brute} vs theorem {theo} in {elapsed:.1f}s")
    _line(4, not bad, "census equals fibration count on all six points"
          if not bad else "; ".join(bad))
    assert not bad


def test_criterion_05_charpoly_identity():
    rng = random.Random(20260815)
    mismatches = 0
    for q in (2, 3, 5):
        field = make_field(q)
        for m in (1, 2, 3):
            for n in (1, 2, 3):
                for _ in range(100):
                    while True:
                        B = Matrix.from_rows(field, [[field.element(rng.randrange(q))
                                                      for _ in range(m)] for _ in range(m)])
                        if matrix_is_invertible(B):
                            break
                    c = tuple(field.element(rng.randrange(q)) for _ in range(n - 1))
                    spec = TsrSpec(field, m, n, c, B)
                    if tsr_charpoly_formula(spec) != tsr_charpoly_direct(spec):
                        mismatches += 1
    _line(5, mismatches == 0,
          f"{mismatches} mismatches across 2700 random registers (27 shapes x 100)")
    assert mismatches == 0


def _orbit_length(spec: TsrSpec) -> int:
    start = TsrState.from_ints(spec, [1] + [0] * (spec.m * spec.n - 1))
    state = tsr_step(spec, start)
    steps = 1
    while state.blocks != start.blocks:
        state = tsr_step(spec, state)
        steps += 1
    return steps


def test_criterion_06_period_property():
    bad = []
    for q, m, n in BRUTE_GRID + ((2, 2, 4),):
        field = make_field(q)
        full = q ** (m * n) - 1
        assert full <= 2 ** 16
        for B in gl_matrices(field, m):
            for enc in range(q ** (n - 1)):
                digits, v = [], enc
                for _ in range(n - 1):
                    digits.append(v % q)
                    v //= q
                spec = TsrSpec(field, m, n, tuple(field.element(d) for d in digits), B)
                if is_primitive_tsr(spec):
                    if _orbit_length(spec) != full:
                        bad.append(f"({q},{m},{n}) primitive orbit shorter than {full}")
                elif tsr_period(spec) >= full:
                    bad.append(f"({q},{m},{n}) non-primitive order not below {full}")
    _line(6, not bad, "orbit walks match primitivity on every invertible census point"
          if not bad else "; ".join(bad[:4]))
    assert not bad


def test_criterion_07_search_soundness():
    bad = []
    for q, m, n in ((2, 2, 2), (2, 2, 3), (2, 3, 2), (2, 2, 7),
                    (3, 2, 3), (5, 2, 3), (7, 2, 3), (11, 2, 3)):
        res = search_primitive_tsr(q, m, n)
        ok, cert = is_primitive_poly(res.charpoly)
        if not ok:
            bad.append(f"({q},{m},{n}): charpoly fails the independent primitivity check")
            continue
        if cert.group_order != q ** (m * n) - 1:
            bad.append(f"({q},{m},{n}): wrong group order {cert.group_order}")
        if res.provenance.step8 != res.charpoly:
            bad.append(f"({q},{m},{n}): step-8 product differs from the emitted charpoly")
        if res.charpoly != tsr_charpoly_direct(res.spec):
            bad.append(f"({q},{m},{n}): emitted charpoly differs from the direct determinant")
    _line(7, not bad, "all eight searches succeed with independently certified charpolys"
          if not bad else "; ".join(bad))
    assert not bad


def test_criterion_08_conjecture_equivalence():
    bad = []
    for q in (2, 3, 5):
        for m in (2, 3):
            for n in (2, 3):
                d = verify_conjecture(q, m, n, "direct")
                c = verify_conjecture(q, m, n, "composition")
                if d.found != c.found:
                    bad.append(f"({q},{m},{n}): direct found={d.found} "
                               f"but composition found={c.found}")
                for form, w in (("direct", d), ("composition", c)):
                    if w.found and not w.conversion_ok:
                        bad.append(f"({q},{m},{n}) {form} witness fails to cross-convert")
    _line(8, not bad, "both witness forms agree and cross-convert on the 12-point grid"
          if not bad else "; ".join(bad))
    assert not bad


def test_criterion_09_table_regeneration():
    bad = []
    t1_counts = row_counts("t1")
    t3_counts = row_counts("t3")
    # q=2 rows live over F_4, whose quadratic modulus is unique, so the
    # published counts must reproduce exactly
    if t1_counts[2] != 2:
        bad.append(f"t1 q=2: regenerated {t1_counts[2]} != published 2")
    for deg, want in ((4, 2), (5, 2), (6, 2), (7, 30)):
        if t3_counts[deg] != want:
            bad.append(f"t3 n={deg}: regenerated {t3_counts[deg]} != published {want}")
    # remaining rows are representation-dependent: emit our count and
    # adjudicate every bundled entry, never silently
    for qrow in (3, 5, 7):
        print(f"t1 q={qrow}: regenerated count {t1_counts[qrow]}")
    report = membership_report("t1")
    for key, entry, accepted, note in report:
        if not accepted:
            print(f"t1 {key}: {entry!r} rejected ({note})")
    silent = [(key, entry) for key, entry, accepted, note in report
              if not accepted and not note]
    if silent:
        bad.append(f"{len(silent)} rejected entries carry no mismatch note")
    _line(9, not bad, "published counts reproduce and every bundled entry is adjudicated"
          if not bad else "; ".join(bad))
    assert not bad


def test_criterion_10_bound_check():
    bad = []
    for q, m, n in BRUTE_GRID:
        brute = len(enumerate_tsrp_bruteforce(q, m, n))
        bound = tsrp_upper_bound(q, m, n)
        if brute > bound:
            bad.append(f"({q},{m},{n}): census {brute} exceeds bound {bound}")
    for m in range(2, 13):
        r, _ = count_trace_one_classes(m)
        if r * m > euler_phi(2 ** m - 1):
            bad.append(f"m={m}: r={r} violates phi(2^m-1)/m")
    _line(10, not bad, "census bound and class-count bound hold everywhere"
          if not bad else "; ".join(bad))
    assert not bad


def test_criterion_11_determinism(tmp_path, capsys):
    bad = []
    for table_id in TABLE_IDS:
        if generate_table(table_id, threads=1) != generate_table(table_id, threads=4):
            bad.append(f"{table_id} differs across thread counts")
    one = tmp_path / "one.csv"
    three = tmp_path / "three.csv"
    assert cli.main(["tables", "t1", "--out", str(one), "--threads", "1"]) == 0
    assert cli.main(["tables", "t1", "--out", str(three), "--threads", "3"]) == 0
    capsys.readouterr()
    if one.read_bytes() != three.read_bytes():
        bad.append("t1 output files differ across --threads")
    _line(11, not bad, "all six tables byte-identical across thread counts"
          if not bad else "; ".join(bad))
    assert not bad
