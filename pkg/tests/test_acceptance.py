"""Acceptance criteria, one test per criterion.

Everything is exact integer/rational arithmetic, so each criterion is an
equality check with no tolerance.  Each test prints a single pass/fail line
(visible with ``pytest -s`` or on failure).
"""

import itertools
import random

from kpmod.filtration import (
    char_criterion,
    kp_filtration_extract,
    schur_functor_experiment,
    tensor_experiment,
)
from kpmod.laurent import LaurentPoly
from kpmod.modules import (
    annihilator_check,
    demazure_module,
    kp_module,
    max_dim,
    one_dim,
    sl3_identity_check,
    sl3_presentation_check,
)
from kpmod.permutations import (
    EQUAL,
    LESS,
    Permutation,
    all_permutations,
    code,
    compare,
    contains_2143,
    rho,
    transition,
)
from kpmod.schubert import (
    cauchy_window_check,
    dual_pairing,
    schubert_poly,
)


def x(n, i):
    return LaurentPoly.variable(n, i)


def tick(num, desc, ok):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {desc}")
    assert ok, f"criterion {num} failed: {desc}"


def compositions(total, n):
    if n == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, n - 1):
            yield (head,) + rest


def test_criterion_01_character_theorem():
    ok = True
    for m in (4, 5):
        for w in all_permutations(m):
            lam = code(w, m)
            if kp_module(lam).character() != schubert_poly(lam):
                ok = False
    tick(1, "ch(KP module) equals the Schubert polynomial on S_4 and S_5", ok)


def test_criterion_02_landmark_dimensions():
    S = kp_module((1, 0, 1, 0))
    ok = S.dim == 3
    ok = ok and S.character() == (
        x(4, 1) ** 2 + x(4, 1) * x(4, 2) + x(4, 1) * x(4, 3)
    )
    ok = ok and demazure_module((1, 0, 1, 0)).dim == 2
    lam = code(Permutation([1, 3, 2, 5, 4]), 5)
    ok = ok and kp_module(lam).dim == 8
    tick(2, "landmark dimensions (KP [2143]=3 with its character, Demazure=2, KP [13254]=8)", ok)


def test_criterion_03_2143_dichotomy():
    ok = True
    failing = []
    for w in all_permutations(4):
        lam = code(w, 4)
        equal = kp_module(lam).character() == demazure_module(lam).character()
        if equal == contains_2143(w):
            ok = False
        if not equal:
            failing.append(w.window)
    ok = ok and failing == [(2, 1, 4, 3)]
    tick(3, "KP equals Demazure character on S_4 exactly off the 2143 pattern", ok)


def test_criterion_04_annihilator_suite():
    ok = True
    for w in all_permutations(5):
        rep = annihilator_check(w, 5)
        if not (rep.annihilated and rep.pruned_ok and rep.dims_match and rep.all_sharp):
            ok = False
    tick(4, "annihilator powers, pruning, sharpness, and dimensions over S_5", ok)


def test_criterion_05_transition_identity():
    ok = True
    for w in all_permutations(5):
        lam = code(w, 5)
        if (
            schubert_poly(lam, "staircase") != schubert_poly(lam, "transition")
        ):
            ok = False
        if w.is_identity():
            continue
        td = transition(w)
        ej = [0] * 5
        ej[td.j - 1] = 1
        rhs = schubert_poly(code(td.v, 5)).shift(tuple(ej))
        for _, wa in td.branches:
            rhs = rhs + schubert_poly(code(wa, 5))
        if schubert_poly(lam) != rhs:
            ok = False
    tick(5, "transition identity and method agreement over S_5", ok)


def test_criterion_06_duality():
    ok = True
    for d in range(5):
        lams = list(compositions(d, 3))
        for lam in lams:
            for mu in lams:
                expected = 1 if lam == mu else 0
                if dual_pairing(schubert_poly(lam), mu) != expected:
                    ok = False
    tick(6, "dual pairing is the Kronecker delta for all degree <= 4 pairs (n=3)", ok)


def test_criterion_07_cauchy_window():
    ok = True
    box = list(itertools.product(range(3), repeat=3))
    for mu in box:
        for nu in box:
            if sum(mu) != sum(nu):
                continue
            if not cauchy_window_check(mu, nu).ok:
                ok = False
    tick(7, "Cauchy window sums match Kostant multiplicities on {0,1,2}^3", ok)


def test_criterion_08_rank3_suite():
    ok = True
    for a in range(4):
        for b in range(4):
            if not sl3_presentation_check(a, b).ok:
                ok = False
    grid = range(4)
    for case in (1, 2):
        for N in grid:
            for M in grid:
                for N2 in grid:
                    for M2 in grid:
                        if N + M <= N2 + M2:
                            continue
                        if not sl3_identity_check(case, N, M, N2, M2).ok:
                            ok = False
    for case in (3, 4, 5, 6):
        for N in grid:
            for M in grid:
                if not sl3_identity_check(case, N, M).ok:
                    ok = False
    tick(8, "rank-3 presentation dimensions and operator identities, parameters <= 3", ok)


def test_criterion_09_filtration_equivalence():
    ok = True
    codes = [code(w, 3) for w in all_permutations(3)]
    for lam in codes:
        for mu in codes:
            rep = tensor_experiment(lam, mu)
            if not rep.extract.ok:
                ok = False
            if not rep.factors_match or not all(c >= 0 for _, c in rep.expansion):
                ok = False
            if rep.extract.ok != rep.criterion.equal:
                ok = False
    neg = one_dim((0, 1))
    ext = kp_filtration_extract(neg)
    crit = char_criterion(neg)
    if ext.ok or crit.equal or not crit.leq:
        ok = False
    if ext.witness is None or ext.witness.nu != (0, 1):
        ok = False
    tick(9, "tensor filtrations over S_3 codes with matching criterion; negative control fails both", ok)


def test_criterion_10_schur_functor_experiments():
    ok = True
    codes = [code(w, 3) for w in all_permutations(3)]
    shapes = [(2,), (1, 1), (3,), (2, 1), (1, 1, 1)]
    cap = max_dim()
    for sigma in shapes:
        for lam in codes:
            if sum(sigma) * kp_module(lam).dim > cap:
                continue
            rep = schur_functor_experiment(sigma, lam)
            if not (rep.extract.ok and rep.char_matches):
                ok = False
    tick(10, "Schur-functor images are KP-filtered with plethysm characters", ok)


def test_criterion_11_weight_order_facts():
    ok = True
    for w in all_permutations(4):
        lam = code(w, 4)
        for mu in set(kp_module(lam).weights):
            if compare(mu, lam) not in (LESS, EQUAL):
                ok = False
            if compare(mu, lam, "prime") not in (LESS, EQUAL):
                ok = False
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(2, 5)
        lam = tuple(rng.randint(-3, 4) for _ in range(n))
        mu = list(rng.randint(-3, 4) for _ in range(n))
        mu[-1] += sum(lam) - sum(mu)
        mu = tuple(mu)
        r = rho(n)
        rl = tuple(a - b for a, b in zip(r, lam))
        rm = tuple(a - b for a, b in zip(r, mu))
        if compare(lam, mu) != compare(rl, rm, "prime"):
            ok = False
    tick(11, "module weights sit below the generator in both orders; mirrored order equivalence on 1000 random pairs", ok)
