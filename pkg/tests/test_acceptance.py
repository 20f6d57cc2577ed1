"""Acceptance checks, one printed PASS/FAIL line per criterion.

Run under pytest, or directly with ``python tests/test_acceptance.py``.
Expected values are computed from closed forms written out here, not taken
from the package.
"""

import json
import random
import sys
import time
from io import StringIO

import pytest

from artinlab.arrangement import (
    characteristic_polynomial,
    reflection_arrangement,
    suspension_check,
    whitney_polynomial,
)
from artinlab.cli import run
from artinlab.coxeter import enumerate_group, reflections
from artinlab.garside import garside_nf
from artinlab.labels import parse_label
from artinlab.ltheory import l_groups, l_point, wedge_homology
from artinlab.orbifold import verify_embedding_relators
from artinlab.words import Word, braid_alphabet

CLOSED_FORM_N = {}
for n in range(2, 9):
    CLOSED_FORM_N[f"A{n - 1}"] = n * (n - 1) // 2
for n in range(2, 7):
    CLOSED_FORM_N[f"B{n}"] = n * n
    CLOSED_FORM_N[f"D{n}"] = n * (n - 1)
CLOSED_FORM_N["F4"] = 24
CLOSED_FORM_N["G2"] = 6
for p in range(3, 13):
    CLOSED_FORM_N[f"I2({p})"] = p

LABELS = list(CLOSED_FORM_N)

# the Whitney brute force is run on every arrangement up to this size, plus A6
WHITNEY_MAX = 20
WHITNEY_EXTRA = {"A6"}

CRITERIA = []


def criterion(key, title, limit=None):
    def register(func):
        CRITERIA.append((key, title, limit, func))
        return func

    return register


def _table(n):
    zn = "Z" if n == 1 else f"Z^{n}"
    z2n = "Z/2" if n == 1 else f"Z/2^{n}"
    return ["Z", zn, "Z/2", z2n]


@criterion("AC1", "L-group table for every finite label", limit=1.0)
def table_reproduction():
    bad = []
    for text in LABELS:
        out = StringIO()
        code = run(["--json", "ltheory", text], out, StringIO())
        d = json.loads(out.getvalue())
        n = CLOSED_FORM_N[text]
        if code != 0 or d["N"] != n or d["L"] != _table(n):
            bad.append(text)
    return not bad, f"{len(LABELS) - len(bad)}/{len(LABELS)} labels exact" + (f", wrong: {bad}" if bad else "")


@criterion("AC2", "hyperplane count agrees three ways; F4 enumerates", limit=60.0)
def three_way_count():
    bad = []
    for text in LABELS:
        label = parse_label(text)
        counts = (reflections(label)[0], reflection_arrangement(label).size, CLOSED_FORM_N[text])
        if len(set(counts)) != 1:
            bad.append((text, counts))
    f4 = enumerate_group(parse_label("F4")).order
    ok = not bad and f4 == 1152
    return ok, f"F4 order {f4}, mismatches {bad or 'none'}"


@criterion("AC3", "b1 equals N for every arrangement")
def suspension_shadow():
    bad = [t for t in LABELS if not suspension_check(reflection_arrangement(parse_label(t))).passed]
    return not bad, f"{len(LABELS) - len(bad)}/{len(LABELS)} pass" + (f", failing: {bad}" if bad else "")


@criterion("AC4", "lattice chi equals Whitney chi; chi(1) = 0", limit=60.0)
def polynomial_oracle():
    compared, bad = [], []
    for text in LABELS:
        a = reflection_arrangement(parse_label(text))
        chi = characteristic_polynomial(a)
        if chi(1) != 0:
            bad.append((text, "chi(1)"))
        if a.size <= WHITNEY_MAX or text in WHITNEY_EXTRA:
            compared.append(text)
            if whitney_polynomial(a) != chi:
                bad.append((text, "whitney"))
    return not bad, f"{len(compared)} compared with Whitney, {len(LABELS)} checked at t=1, failures {bad or 'none'}"


@criterion("AC5", "embedding relators certified for n 2..8, q 2..6", limit=5.0)
def embedding_grid():
    failed = []
    p_details = set()
    for n in range(2, 9):
        for q in range(2, 7):
            rep = verify_embedding_relators(n, q)
            if not rep.passed:
                failed.append((n, q))
            last = rep.certificates[-1]
            p_details.add((last.kind, last.detail))
    b3 = {("garside", "B_3: a2^2 a1 a2^2 a1 = a1 a2^2 a1 a2^2")}
    ok = not failed and p_details == b3
    return ok, f"35 grid points, failures {failed or 'none'}, P-relation certificates {sorted(p_details)}"


def _relators(n):
    out = []
    for i in range(1, n):
        for j in range(i + 1, n):
            out.append((i, j, i, -j, -i, -j) if j == i + 1 else (i, j, -i, -j))
    return out


@criterion("AC6", "Garside form on 500 random B4 words", limit=30.0)
def garside_suite():
    rng = random.Random(20261015)
    n, alpha = 4, braid_alphabet(4)
    rels = _relators(n)
    bad = 0
    for _ in range(500):
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 16)))
        w = Word.from_signed(alpha, letters)
        base = garside_nf(w, n)
        rel = rng.choice(rels)
        if rng.random() < 0.5:
            rel = tuple(-x for x in reversed(rel))
        pos = rng.randint(0, len(letters))
        inserted = Word.from_signed(alpha, letters[:pos] + rel + letters[pos:])
        if garside_nf(inserted, n) != base or not garside_nf(w * w.inverse(), n).is_identity:
            bad += 1
    return bad == 0, f"{500 - bad}/500 words pass"


@criterion("AC7", "L-groups follow the wedge formula for i = 0..7")
def wedge_consistency():
    bad = []
    for text in LABELS:
        table = l_groups(parse_label(text))
        for i in range(8):
            if table.L(i) != wedge_homology(l_point, table.N, i):
                bad.append((text, i))
    return not bad, f"{len(LABELS)} labels x 8 degrees, mismatches {bad or 'none'}"


def evaluate(key):
    _, title, limit, func = next(c for c in CRITERIA if c[0] == key)
    start = time.perf_counter()
    ok, detail = func()
    elapsed = time.perf_counter() - start
    timing = f"{elapsed:.2f}s"
    if limit is not None:
        timing += f" (limit {limit:g}s)"
        ok = ok and elapsed < limit
    line = f"{key} {'PASS' if ok else 'FAIL'}  {title}: {detail}; {timing}"
    return ok, line


@pytest.fixture(scope="module", autouse=True)
def warm_kernels():
    # compile the numba kernels once so timings measure the work, not the JIT
    a = reflection_arrangement(parse_label("A2"))
    characteristic_polynomial(a)
    whitney_polynomial(a)


@pytest.mark.parametrize("key", [c[0] for c in CRITERIA])
def test_criterion(key, capsys):
    ok, line = evaluate(key)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(c[0]) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
