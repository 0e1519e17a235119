"""
Named verification suites shared by the CLI and the test-suite.

Each suite returns a :class:`SuiteResult`; random samples come from a seeded
``random.Random`` so every run is reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence

from .action import braid_action, generator_action, lifting_identity_check
from .freecalc import fox_phi, generator_image, phi_eval, psi_eval
from .hgroup import RingElem, RingMode, collect_naive
from .matrix import compose
from .presentations import alphabet
from .rep import (classical_block, fox_oracle_sigma_block, lkb_compare_sigma1,
                  phi1_generator, phi1_word, phi2_curated, verify_relations)
from .words import Gen, Kind, Word, pi_alphabet

__all__ = ["SuiteResult", "SUITES", "run_suite", "random_word"]


@dataclass
class SuiteResult:
    name: str
    ok: bool
    details: Dict = field(default_factory=dict)

    def to_json_obj(self):
        return {"suite": self.name, "ok": self.ok, **self.details}


def random_word(rng: random.Random, gens: Sequence[Gen], max_len: int) -> Word:
    n = rng.randint(0, max_len)
    return Word([(rng.choice(gens), rng.choice((1, -1))) for _ in range(n)])


def suite_phi1(g: int, n: int, **_) -> SuiteResult:
    rep = verify_relations(g, n, lambda w: phi1_word(g, n, w))
    bad_inv = []
    for gen in alphabet(g, n).generators:
        a, b = phi1_generator(g, n, gen, 1), phi1_generator(g, n, gen, -1)
        if not (compose(a, b).is_identity() and compose(b, a).is_identity()):
            bad_inv.append(str(gen))
    details = rep.to_json_obj()
    details["inverse_failures"] = bad_inv
    return SuiteResult("phi1", rep.ok and not bad_inv, details)


def suite_action(g: int, n: int, **_) -> SuiteResult:
    rep = verify_relations(g, n, lambda w: braid_action(w, g))
    bad = []
    for gen in alphabet(g, n).generators:
        fwd, back = generator_action(gen, 1, g), generator_action(gen, -1, g)
        if not (fwd.then(back).is_identity() and back.then(fwd).is_identity()):
            bad.append(str(gen))
    details = rep.to_json_obj()
    details["inverse_failures"] = bad
    return SuiteResult("action", rep.ok and not bad, details)


def suite_psi(g: int, n: int, k: int = 1, **_) -> SuiteResult:
    mode = RingMode.for_k(g, k)
    rep = verify_relations(g, n, lambda w: psi_eval(w, mode), k=k, kind=Kind.INTERTWINING)
    return SuiteResult("psi", rep.ok, rep.to_json_obj())


def suite_lifting(g: int, n: int, samples: int = 200, seed: int = 0, **_) -> SuiteResult:
    rng = random.Random(seed)
    mode = RingMode.for_k(g, 2)
    words = pi_alphabet(g, n).generators
    fails = []
    for gen in alphabet(g, n).generators:
        for _ in range(samples):
            w = random_word(rng, words, 20)
            if not lifting_identity_check(gen, w, mode):
                fails.append({"generator": str(gen), "word": str(w)})
    return SuiteResult("lifting", not fails,
                       {"samples": samples, "failures": fails[:5]})


def fox_identity_holds(w: Word, gens: Sequence[Gen], mode: RingMode) -> bool:
    """``phi(w) - 1 == sum_x phi(dw/dx) (phi(x) - 1)``."""
    lhs = RingElem.monomial(phi_eval(w, mode)) - 1
    rhs = RingElem.zero(mode)
    for x in gens:
        d = fox_phi(w, x, mode)
        if not d.is_zero():
            rhs = rhs + d * (RingElem.monomial(generator_image(x, mode)) - 1)
    return lhs == rhs


def suite_fox(g: int, n: int, samples: int = 200, seed: int = 0, **_) -> SuiteResult:
    rng = random.Random(seed)
    mode = RingMode.for_k(g, 2)
    gens = alphabet(g, n, 2, Kind.BNK).generators
    fails = [str(w) for w in (random_word(rng, gens, 20) for _ in range(samples))
             if not fox_identity_holds(w, gens, mode)]
    sig = [Gen("s", i) for i in range(1, n)]
    block_fails = []
    if sig:
        for _ in range(samples // 4 or 1):
            w = random_word(rng, sig, 12)
            if classical_block(phi1_word(g, n, w), n) != fox_oracle_sigma_block(n, w, g):
                block_fails.append(str(w))
    return SuiteResult("fox", not fails and not block_fails,
                       {"identity_failures": fails[:5], "block_failures": block_fails[:5]})


def suite_phi2_lkb(**_) -> SuiteResult:
    m = phi2_curated("s1")
    w_span = all(m[r, c].is_zero() for c in ("w11", "w12", "w22")
                 for r in m.rows if r not in ("w11", "w12", "w22"))
    with_sub = lkb_compare_sigma1(True)
    without = lkb_compare_sigma1(False)
    return SuiteResult("phi2-lkb", w_span and with_sub and not without,
                       {"w_span_invariant": w_span, "match_with_t_to_minus_t": with_sub,
                        "match_without_substitution": without})


def suite_hgroup(g: int, samples: int = 500, seed: int = 0, **_) -> SuiteResult:
    rng = random.Random(seed)
    mode = RingMode.for_k(max(g, 1), 2)
    names = mode.slot_names()
    fails = 0
    for _ in range(samples):
        letters = [(rng.choice(names), rng.randint(-3, 3)) for _ in range(rng.randint(0, 8))]
        direct = mode.identity()
        for name, e in letters:
            direct = direct * mode.gen(name, e)
        if collect_naive(mode, letters) != direct:
            fails += 1
    return SuiteResult("hgroup", fails == 0, {"samples": samples, "failures": fails})


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "hgroup": suite_hgroup,
    "phi1": suite_phi1,
    "action": suite_action,
    "psi": suite_psi,
    "lifting": suite_lifting,
    "fox": suite_fox,
    "phi2-lkb": suite_phi2_lkb,
}


def run_suite(name: str, g: int = 2, n: int = 3, k: int = 1, **kw) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(g=g, n=n, k=k, **kw)
