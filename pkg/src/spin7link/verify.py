"""
The verification suites: one function per acceptance criterion, grouped
into named suites for the command line.
"""
from __future__ import annotations

import random
import time
from typing import Callable

from .analysis import Report, series_consistency_check, skein_report, w1_degeneration_check
from .blockmat import poly_from_roots
from .braid import BraidWord, Closure, LinkPresentation
from .exactalg import RatFunc
from .invariant import (
    DELTA,
    EXPECTED_DIMS,
    KAPPA_CANDIDATES,
    IntegralityFailure,
    MarkovWeights,
    candidate_weights,
    evaluate_link,
    evaluate_word,
    known_examples,
    match_framing,
    quantum_trace,
    search_words,
    weight_failures,
)
from .repdata import (
    SPECTRA,
    ValidationFailed,
    build_alpha_generators,
    build_generators,
    build_rep_table,
    check_alpha_generators,
    check_casimir_consistency,
    check_generators,
    S2_SUMMANDS,
)

__all__ = ["CRITERIA", "SUITES", "run_suite", "random_words"]

DEFAULT_SEED = 20240607


def random_words(count: int, max_len: int, seed: int = DEFAULT_SEED) -> list[BraidWord]:
    """Deterministic mix of two- and three-strand words."""
    rng = random.Random(seed)
    words = []
    for _ in range(count):
        strands = rng.choice((2, 3, 3))
        letters = (1, -1) if strands == 2 else (1, -1, 2, -2)
        n = rng.randint(0, max_len)
        words.append(BraidWord(strands, tuple(rng.choice(letters) for _ in range(n))))
    return words


def criterion_constants() -> Report:
    rep = Report("1. constants validation")
    start = time.perf_counter()
    try:
        g = build_generators.__wrapped__()
        ag = build_alpha_generators.__wrapped__(1)
    except ValidationFailed as exc:
        rep.add("construction", False, str(exc))
        return rep
    elapsed = time.perf_counter() - start
    rep.add("both pictures build without ValidationFailed", True)
    w_fail = set(check_generators(g))
    for name in (
        "braid relation R12 R23 R12 = R23 R12 R23",
        "A12 R12 R23 A12 = A12",
        "A12^2 = Delta A12",
    ):
        rep.add(name, name not in w_fail)
    a_fail = set(check_alpha_generators(ag))
    for name in (
        "s12^2 = 1",
        "s23^2 = 1",
        "(s12 s23)^3 = 1",
        "s12 r12 s12 = r12",
        "a12^2 = 8 a12",
        "r12 a12 = 21 alpha a12",
        "a12 r12 = 21 alpha a12",
    ):
        rep.add(name, name not in a_fail)
    rep.add("construction runtime < 1 s", elapsed < 1.0, f"{elapsed:.3f} s")
    return rep


def criterion_spectra() -> Report:
    rep = Report("2. spectra of R12 and R23")
    g = build_generators()
    for name, m in (("R12", g.R12), ("R23", g.R23)):
        for i, roots in enumerate(SPECTRA):
            expected = poly_from_roots([RatFunc(r) for r in roots])
            rep.add(
                f"{name} block {i} roots {{{', '.join(map(str, roots))}}}",
                m.charpoly(i) == expected,
            )
    return rep


def criterion_casimir() -> Report:
    rep = Report("3. Casimir consistency of r12")
    ag = build_alpha_generators(1)
    table = build_rep_table()
    failures = check_casimir_consistency(ag, table)
    for i, name in enumerate(S2_SUMMANDS):
        c = 0 if name == "trivial" else table.casimir(name)
        label = f"r12 diagonal {i} = alpha (42 - {c}) / 2 [{name}]"
        rep.add(label, not any(f.startswith(f"r12 diagonal entry {i} ") for f in failures), str(ag.r12.blocks[0][i][i]))
    return rep


def criterion_weights() -> Report:
    rep = Report("4. Markov weights")
    g = build_generators()
    passing = []
    for kappa in KAPPA_CANDIDATES:
        try:
            mw = MarkovWeights(*candidate_weights(g, kappa), kappa=kappa)
            fails = weight_failures(g, mw)
        except ArithmeticError as exc:
            fails = [str(exc)]
        if not fails:
            passing.append(mw)
        rep.add(f"kappa = {kappa:+d} candidate", True, "consistent" if not fails else "rejected: " + "; ".join(fails))
    rep.add("exactly one kappa is consistent", len(passing) == 1, f"{len(passing)} consistent")
    if len(passing) != 1:
        return rep
    mw = passing[0]
    ws = mw.weights
    laurent = all(w.is_laurent() for w in ws)
    rep.add("weights are Laurent polynomials", laurent)
    if not laurent:
        return rep
    rep.add("weights are mirror-invariant", all(w.num.is_palindromic() for w in ws))
    rep.add("w4 = Delta", mw.w4 == DELTA)
    at1 = tuple(w(1) for w in ws)
    rep.add(f"weights at W=1 = {EXPECTED_DIMS}", at1 == EXPECTED_DIMS, str(tuple(int(x) for x in at1)))
    rep.add("4 w4 + 3 w3 + 2 w2 + w1 = Delta^3", mw.w4 * 4 + mw.w3 * 3 + mw.w2 * 2 + mw.w1 == DELTA**3)
    rep.add("closure of s1 s2^-1 = Delta", quantum_trace(BraidWord(3, (1, -2)), g, mw) == DELTA)
    return rep


def criterion_examples() -> Report:
    rep = Report("5. printed example values")
    for ex in known_examples():
        value = evaluate_word(ex.word)
        m = match_framing(value, ex.expected, ex.max_k, ex.allow_mirror)
        label = f"{ex.name}: closure of [{ex.word}] on {ex.word.strands} strands"
        if m is None and ex.allow_mirror:
            hits = search_words(ex.expected, max_len=6, max_k=ex.max_k)
            detail = "no match for the candidate; search hits: " + (
                ", ".join(f"[{w}] k={k} mirror={mi}" for w, k, mi in hits) or "none"
            )
            rep.add(label, bool(hits), detail)
            continue
        if m is None:
            rep.add(label, False, "no match")
            continue
        k, mirror = m
        ok = (k == 0 and not mirror) if ex.exact else True
        rep.add(label, ok, f"k={k} mirror={mirror}")
    return rep


def criterion_integrality(count: int = 200, max_len: int = 10) -> Report:
    rep = Report(f"6. integrality over {count} random words of length <= {max_len}")
    failures = 0
    checked = 0
    for w in random_words(count, max_len):
        for mirror in (False, True):
            for norm in ("framed", "global-writhe"):
                try:
                    evaluate_link(LinkPresentation.single(w, mirror, norm))
                except IntegralityFailure:
                    failures += 1
                checked += 1
    rep.add("every value lies in Z[W, W^-1]", failures == 0, f"{checked} evaluations, {failures} failures")
    return rep


def criterion_mirror(count: int = 100, max_len: int = 8) -> Report:
    rep = Report(f"7. mirror and multiplicativity over {count} random words")
    words = random_words(count, max_len, seed=DEFAULT_SEED + 1)
    bad_mirror = 0
    for w in words:
        direct = evaluate_link(LinkPresentation.single(w, mirror=True))
        if direct != evaluate_word(w).mirror():
            bad_mirror += 1
    rep.add("evaluate(mirror) = S(evaluate)", bad_mirror == 0, f"{bad_mirror} mismatches")
    bad_mult = 0
    for a, b in zip(words[::2], words[1::2]):
        union = LinkPresentation((Closure(a), Closure(b, mirror=True)))
        if evaluate_link(union) != evaluate_word(a) * evaluate_word(b.mirror()):
            bad_mult += 1
    rep.add("two-component unions multiply", bad_mult == 0, f"{bad_mult} mismatches")
    return rep


def criterion_skein() -> Report:
    rep = skein_report()
    rep.name = "8. " + rep.name
    return rep


def criterion_series() -> Report:
    rep = series_consistency_check(n_max=6, order=6)
    rep.name = "9. " + rep.name
    return rep


def criterion_degeneration() -> Report:
    rep = w1_degeneration_check()
    rep.name = "10. " + rep.name
    return rep


CRITERIA: dict[int, Callable[[], Report]] = {
    1: criterion_constants,
    2: criterion_spectra,
    3: criterion_casimir,
    4: criterion_weights,
    5: criterion_examples,
    6: criterion_integrality,
    7: criterion_mirror,
    8: criterion_skein,
    9: criterion_series,
    10: criterion_degeneration,
}

SUITES: dict[str, tuple[int, ...]] = {
    "all": tuple(CRITERIA),
    "prop1": (1, 3),
    "prop2": (1, 2),
    "weights": (4,),
    "examples": (5,),
    "integrality": (6,),
    "mirror": (7,),
    "skein": (8,),
    "series": (9,),
    "degeneration": (10,),
}


def run_suite(name: str) -> list[Report]:
    return [CRITERIA[i]() for i in SUITES[name]]
