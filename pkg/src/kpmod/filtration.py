"""Filtration machinery: deciding and extracting filtrations whose layers are
Kraskiewicz-Pragacz modules.

The extractor builds the quotient tower along the increasing list of weights
of M: with N_i the submodule generated by all weight spaces above the i-th
weight, the tower M/N_i has kernels generated in a single weight, and the
filtration exists exactly when every kernel character is the matching
multiple of a Schubert polynomial.  The character criterion computes
hom multiplicities into twisted duals instead and compares characters; the
two must agree, and experiments assert that they do.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .laurent import LaurentPoly
from .linalg import ONE
from .modules import (
    SubmoduleCloser,
    WeightModule,
    dual_twist,
    hom_dim,
    kp_module,
    span_submodule,
    tensor_many,
    tensor_power,
)
from .permutations import rho, sort_key
from .schubert import expand_in_schubert, plethysm_eval, schubert_poly


class MixedDegreeError(ValueError):
    pass


def degree_components(M: WeightModule):
    """Total degrees occurring among the weights of M (the action preserves
    them, so mixed modules split degree by degree)."""
    return sorted({sum(w) for w in M.weights})


def sort_weights(M: WeightModule) -> list:
    """Distinct weights of M, strictly increasing in the standard total
    order.  Requires a single total degree."""
    ws = sorted(set(M.weights))
    if len({sum(w) for w in ws}) > 1:
        raise MixedDegreeError(
            "module mixes total degrees; split into degree components first"
        )
    return sorted(ws, key=sort_key())


@dataclass(frozen=True)
class FiltrationWitness:
    level: int          # 1-based position in the increasing weight list
    nu: tuple
    expected: LaurentPoly
    actual: LaurentPoly

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "nu": list(self.nu),
            "expected": self.expected.to_json(),
            "actual": self.actual.to_json(),
        }


@dataclass(frozen=True)
class FiltrationReport:
    """Outcome of the quotient-tower extraction.

    ``factors`` lists (weight, multiplicity > 0) from the largest weight
    down; when ``ok`` the multiples of Schubert polynomials over all levels
    sum to ch(M) exactly (char_lhs == char_rhs)."""

    ok: bool
    factors: tuple
    witness: FiltrationWitness | None
    char_lhs: LaurentPoly
    char_rhs: LaurentPoly

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "factors": [{"nu": list(nu), "mult": d} for nu, d in self.factors],
            "lhs": self.char_lhs.to_json(),
            "rhs": self.char_rhs.to_json(),
            "witness": self.witness.to_json() if self.witness else None,
        }


def kp_filtration_extract(M: WeightModule) -> FiltrationReport:
    """Decide whether M is filtered by KP modules, extracting the layer
    multiplicities (failure is a result carrying the first bad level)."""
    levels = sort_weights(M)
    ch_m = M.character()
    if not levels:
        zero = LaurentPoly.zero(M.n)
        return FiltrationReport(True, (), None, zero, zero)
    spaces = M.weight_spaces()
    closer = SubmoduleCloser(M)
    stages = []  # (nu, ch of the quotient by weights above nu, layer dim)
    for nu in reversed(levels):
        ch_quot = ch_m - closer.character()
        d = len(spaces[nu]) - closer.dim_of(nu)
        stages.append((nu, ch_quot, d))
        closer.add([{i: ONE} for i in spaces[nu]])
    ok = True
    witness = None
    factors = []
    rhs = LaurentPoly.zero(M.n)
    zero = LaurentPoly.zero(M.n)
    for t, (nu, ch_quot, d) in enumerate(stages):
        below = stages[t + 1][1] if t + 1 < len(stages) else zero
        actual = ch_quot - below
        expected = schubert_poly(nu) * d
        rhs = rhs + expected
        if d:
            factors.append((nu, d))
        if ok and actual != expected:
            ok = False
            witness = FiltrationWitness(len(levels) - t, nu, expected, actual)
    return FiltrationReport(ok, tuple(factors), witness, ch_m, rhs)


@dataclass(frozen=True)
class CriterionReport:
    """Character criterion: ch(M) <= sum of hom multiplicities into twisted
    duals times Schubert polynomials, with equality iff M is KP-filtered."""

    lhs: LaurentPoly
    rhs: LaurentPoly
    hom_multiplicities: tuple  # ((nu, dim Hom(M, twisted dual of kp(rho-nu))), ...)
    leq: bool
    equal: bool

    def to_json(self) -> dict:
        return {
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "hom": [{"nu": list(nu), "dim": h} for nu, h in self.hom_multiplicities],
            "leq": self.leq,
            "equal": self.equal,
        }


def char_criterion(M: WeightModule) -> CriterionReport:
    """Compare ch(M) with the hom-weighted sum of Schubert polynomials.

    Only weights of M can support a nonzero hom (a nonzero map is determined
    by a nonzero image of that weight space), so the sum ranges over them.
    """
    r = rho(M.n)
    lhs = M.character()
    rhs = LaurentPoly.zero(M.n)
    mults = []
    for nu in sort_weights(M):
        D = dual_twist(kp_module(tuple(a - b for a, b in zip(r, nu))))
        h = hom_dim(M, D)
        if h:
            mults.append((nu, h))
            rhs = rhs + schubert_poly(nu) * h
    diff = rhs - lhs
    leq = all(c >= 0 for c in diff.terms.values())
    # the inequality direction is forced; a violation means a bug
    assert leq, "character exceeds the hom-multiplicity bound"
    return CriterionReport(lhs, rhs, tuple(mults), leq, rhs == lhs)


# ---------------------------------------------------------------------------
# Experiments

@dataclass(frozen=True)
class TensorExperimentReport:
    lam: tuple
    mu: tuple
    extract: FiltrationReport
    criterion: CriterionReport
    expansion: tuple  # Schubert expansion of the character product

    @property
    def consistent(self) -> bool:
        """Extractor verdict agrees with the character criterion."""
        return self.extract.ok == self.criterion.equal

    @property
    def factors_match(self) -> bool:
        return dict(self.extract.factors) == dict(self.expansion)

    @property
    def ok(self) -> bool:
        return self.extract.ok and self.consistent and self.factors_match

    def to_json(self) -> dict:
        return {
            "lam": list(self.lam),
            "mu": list(self.mu),
            "extract": self.extract.to_json(),
            "criterion": self.criterion.to_json(),
            "expansion": [{"nu": list(nu), "coeff": c} for nu, c in self.expansion],
            "factors_match": self.factors_match,
            "consistent": self.consistent,
            "ok": self.ok,
        }


def tensor_experiment(lam, mu) -> TensorExperimentReport:
    """Filter the tensor product of two KP modules and cross-check the layer
    multiplicities against the Schubert expansion of the character product."""
    lam = tuple(int(x) for x in lam)
    mu = tuple(int(x) for x in mu)
    M = tensor_many([kp_module(lam), kp_module(mu)])
    ext = kp_filtration_extract(M)
    crit = char_criterion(M)
    product = schubert_poly(lam) * schubert_poly(mu)
    expansion = tuple(
        sorted(expand_in_schubert(product).items(), key=lambda t: t[0])
    )
    return TensorExperimentReport(lam, mu, ext, crit, expansion)


def _block_perms(blocks, k):
    """All permutations of range(k) preserving the given blocks."""
    perms = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        p = list(range(k))
        for src_block, img_block in zip(blocks, choice):
            for s, d in zip(src_block, img_block):
                p[s] = d
        perms.append(tuple(p))
    return perms


def _perm_sign(p) -> int:
    inv = sum(
        1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b]
    )
    return -1 if inv % 2 else 1


def young_symmetrizer_image(M: WeightModule, sigma) -> WeightModule:
    """Image of the Young symmetrizer of sigma (row symmetrizer times column
    antisymmetrizer, unnormalized) acting on M^{(x) |sigma|} by permuting
    tensor factors; realizes the Schur functor applied to M."""
    sigma = tuple(int(p) for p in sigma)
    k = sum(sigma)
    T = tensor_power(M, k)
    rows = []
    start = 0
    for part in sigma:
        rows.append(list(range(start, start + part)))
        start += part
    ncols = sigma[0] if sigma else 0
    cols = [[rows[r][c] for r in range(len(sigma)) if sigma[r] > c] for c in range(ncols)]
    terms = [
        (tuple(p[q[t]] for t in range(k)), _perm_sign(q))
        for p in _block_perms(rows, k)
        for q in _block_perms(cols, k)
    ]
    vectors = []
    for combo in itertools.product(range(M.dim), repeat=k):
        acc: dict = {}
        for g, sign in terms:
            img = [0] * k
            for t in range(k):
                img[g[t]] = combo[t]
            idx = 0
            for digit in img:
                idx = idx * M.dim + digit
            acc[idx] = acc.get(idx, 0) + sign
        vec = {i: ONE * c for i, c in acc.items() if c}
        if vec:
            vectors.append(vec)
    return span_submodule(T, vectors)


@dataclass(frozen=True)
class SchurExperimentReport:
    sigma: tuple
    lam: tuple
    extract: FiltrationReport
    criterion: CriterionReport
    plethysm: LaurentPoly
    char_matches: bool

    @property
    def consistent(self) -> bool:
        return self.extract.ok == self.criterion.equal

    @property
    def ok(self) -> bool:
        return self.extract.ok and self.consistent and self.char_matches

    def to_json(self) -> dict:
        return {
            "sigma": list(self.sigma),
            "lam": list(self.lam),
            "extract": self.extract.to_json(),
            "criterion": self.criterion.to_json(),
            "plethysm": self.plethysm.to_json(),
            "char_matches": self.char_matches,
            "consistent": self.consistent,
            "ok": self.ok,
        }


def schur_functor_experiment(sigma, lam, bound: int = 3) -> SchurExperimentReport:
    """Filter the Schur-functor image of a KP module and cross-check its
    character against the plethysm of the Schubert polynomial."""
    sigma = tuple(int(p) for p in sigma)
    if sum(sigma) > bound:
        raise ValueError(f"partition size {sum(sigma)} exceeds the bound {bound}")
    lam = tuple(int(x) for x in lam)
    S = kp_module(lam)
    img = young_symmetrizer_image(S, sigma)
    ext = kp_filtration_extract(img)
    crit = char_criterion(img)
    target = plethysm_eval(sigma, schubert_poly(lam))
    return SchurExperimentReport(
        sigma, lam, ext, crit, target, img.character() == target
    )
