"""Named verification sweeps behind the ``kp verify`` subcommand.

Each suite runs a family of exact identities at desk scale and returns rows
(name, ok, detail); the CLI renders them as a pass/fail table.  Defaults keep
every suite well under a minute.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .filtration import (
    char_criterion,
    kp_filtration_extract,
    schur_functor_experiment,
    tensor_experiment,
)
from .modules import annihilator_check, kp_module, one_dim
from .permutations import all_permutations, code, compare, rho, transition
from .schubert import (
    cauchy_window_check,
    dual_pairing,
    schubert_poly,
    schubert_poly_of_perm,
)
from .modules import sl3_identity_check, sl3_presentation_check


@dataclass(frozen=True)
class CheckRow:
    name: str
    ok: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _compositions(total: int, n: int):
    """Nonnegative integer vectors of length n summing to total."""
    if n == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, n - 1):
            yield (head,) + rest


def suite_transition_all(upto: int = 5, seed: int = 0) -> list:
    rows = []
    for m in range(2, upto + 1):
        ok = True
        count = 0
        for w in all_permutations(m):
            if w.is_identity():
                continue
            count += 1
            td = transition(w)
            lam = code(w, m)
            vcode = code(td.v, m)
            ej = [0] * m
            ej[td.j - 1] = 1
            structural = (
                td.v.length() == w.length() - 1
                and vcode == tuple(a - b for a, b in zip(lam, ej))
                and all(wa.length() == w.length() for _, wa in td.branches)
            )
            rhs = schubert_poly(vcode).shift(tuple(ej))
            for _, wa in td.branches:
                rhs = rhs + schubert_poly(code(wa, m))
            ok = ok and structural and schubert_poly(lam) == rhs
        rows.append(CheckRow(f"transition identity on S_{m}", ok, f"{count} permutations"))
        agree = all(
            schubert_poly_of_perm(w, m, "staircase")
            == schubert_poly_of_perm(w, m, "transition")
            for w in all_permutations(m)
        )
        rows.append(CheckRow(f"staircase agrees with transition on S_{m}", agree, ""))
    return rows


def suite_duality(upto: int = 4, seed: int = 0, n: int = 3) -> list:
    rows = []
    for d in range(upto + 1):
        lams = list(_compositions(d, n))
        ok = all(
            dual_pairing(schubert_poly(lam), mu) == (1 if lam == mu else 0)
            for lam in lams
            for mu in lams
        )
        rows.append(CheckRow(f"dual pairing delta at degree {d}", ok, f"{len(lams)}^2 pairs"))
    return rows


def suite_cauchy(upto: int = 2, seed: int = 0, n: int = 3) -> list:
    box = list(itertools.product(range(upto + 1), repeat=n))
    ok = True
    count = 0
    for mu in box:
        for nu in box:
            if sum(mu) != sum(nu):
                continue
            count += 1
            if not cauchy_window_check(mu, nu).ok:
                ok = False
    return [CheckRow(f"Cauchy window identity on {{0..{upto}}}^{n}", ok, f"{count} pairs")]


def suite_u3(upto: int = 3, seed: int = 0) -> list:
    rows = []
    pres = all(
        sl3_presentation_check(a, b).ok
        for a in range(upto + 1)
        for b in range(upto + 1)
    )
    rows.append(CheckRow(f"rank-3 presentation, a,b <= {upto}", pres, "generator + Weyl dims"))
    grid = range(upto + 1)
    for case in (1, 2):
        ok = all(
            sl3_identity_check(case, N, M, N2, M2).ok
            for N in grid
            for M in grid
            for N2 in grid
            for M2 in grid
            if N + M > N2 + M2
        )
        rows.append(CheckRow(f"rank-3 identity case {case}", ok, f"params <= {upto}"))
    for case in (3, 4, 5, 6):
        ok = all(sl3_identity_check(case, N, M).ok for N in grid for M in grid)
        rows.append(CheckRow(f"rank-3 identity case {case}", ok, f"params <= {upto}"))
    return rows


def suite_kp_char(upto: int = 5, seed: int = 0) -> list:
    rows = []
    for m in range(1, upto + 1):
        ok = all(
            kp_module(code(w, m)).character() == schubert_poly(code(w, m))
            for w in all_permutations(m)
        )
        rows.append(CheckRow(f"ch(KP) = Schubert on S_{m} (n={m})", ok, ""))
    return rows


def suite_annihilators(upto: int = 5, seed: int = 0) -> list:
    reports = [annihilator_check(w, upto) for w in all_permutations(upto)]
    return [
        CheckRow(
            f"powers m_ij+1 annihilate the generator, S_{upto}",
            all(r.annihilated for r in reports),
            f"{len(reports)} permutations",
        ),
        CheckRow(
            "pruned generator subsets annihilate",
            all(r.pruned_ok for r in reports),
            "",
        ),
        CheckRow(
            "observed sharpness where m_ij >= 1",
            all(r.all_sharp for r in reports),
            "",
        ),
        CheckRow(
            "module dimension equals the Schubert polynomial at 1",
            all(r.dims_match for r in reports),
            "",
        ),
    ]


def suite_filtrations(upto: int = 3, seed: int = 0) -> list:
    n = upto
    codes = [code(w, n) for w in all_permutations(n)]
    tensor_ok = True
    for lam in codes:
        for mu in codes:
            rep = tensor_experiment(lam, mu)
            tensor_ok = tensor_ok and rep.ok and all(
                c > 0 for _, c in rep.expansion
            )
    rows = [
        CheckRow(
            f"tensor products of KP modules, codes of S_{n}",
            tensor_ok,
            f"{len(codes) ** 2} pairs; factors = Schubert expansion",
        )
    ]
    neg = one_dim((0, 1))
    ext = kp_filtration_extract(neg)
    crit = char_criterion(neg)
    rows.append(
        CheckRow(
            "negative control: K_(0,1) has no KP filtration",
            (not ext.ok)
            and (not crit.equal)
            and crit.leq
            and ext.witness is not None
            and ext.witness.nu == (0, 1),
            "extractor and criterion agree on failure",
        )
    )
    sigmas = [(2,), (1, 1), (3,), (2, 1), (1, 1, 1)]
    schur_ok = all(
        schur_functor_experiment(s, lam).ok for s in sigmas for lam in codes
    )
    rows.append(
        CheckRow(
            "Schur functors of KP modules, |sigma| <= 3",
            schur_ok,
            f"{len(sigmas)} shapes x {len(codes)} codes",
        )
    )
    return rows


def suite_orders(upto: int = 5, seed: int = 0, trials: int = 1000) -> list:
    rng = random.Random(seed)
    mirror_ok = True
    total_ok = True
    shift_ok = True
    for _ in range(trials):
        n = rng.randint(2, upto)
        lam = tuple(rng.randint(-3, 4) for _ in range(n))
        mu = list(rng.randint(-3, 4) for _ in range(n))
        mu[-1] += sum(lam) - sum(mu)  # same total degree
        mu = tuple(mu)
        r = rho(n)
        rl = tuple(a - b for a, b in zip(r, lam))
        rm = tuple(a - b for a, b in zip(r, mu))
        c = compare(lam, mu)
        if c != compare(rl, rm, "prime"):
            mirror_ok = False
        if c == "incomparable":
            total_ok = False
        if c != compare(tuple(x + 1 for x in lam), tuple(x + 1 for x in mu)):
            shift_ok = False
    return [
        CheckRow("mirror equivalence of the two orders", mirror_ok, f"{trials} random pairs"),
        CheckRow("degree slices are totally ordered", total_ok, ""),
        CheckRow("order is shift-invariant", shift_ok, ""),
    ]


SUITES = {
    "transition-all": suite_transition_all,
    "duality": suite_duality,
    "cauchy": suite_cauchy,
    "u3": suite_u3,
    "kp-char": suite_kp_char,
    "annihilators": suite_annihilators,
    "filtrations": suite_filtrations,
    "orders": suite_orders,
}

#: Default --upto per suite (None = the suite's own default).
DEFAULT_UPTO = {
    "transition-all": 5,
    "duality": 4,
    "cauchy": 2,
    "u3": 3,
    "kp-char": 5,
    "annihilators": 5,
    "filtrations": 3,
    "orders": 5,
}


def run_suite(name: str, upto=None, seed: int = 0) -> list:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    fn = SUITES[name]
    return fn(upto if upto is not None else DEFAULT_UPTO[name], seed)


def run_suites(name: str, upto=None, seed: int = 0) -> list:
    """Rows for one suite, or for every suite (at its default bound) when
    name == 'all'."""
    if name == "all":
        rows = []
        for key in SUITES:
            rows.extend(
                CheckRow(f"[{key}] {r.name}", r.ok, r.detail)
                for r in run_suite(key, None, seed)
            )
        return rows
    return run_suite(name, upto, seed)
