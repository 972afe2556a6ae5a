"""Verification sweeps over every identity the library can check.

Each group returns a list of :class:`CheckResult`. Sweeps are aggregated per
claim: ``residual`` is the worst case seen, ``cases`` the number of
instances, and ``failures`` lists the first few failing instances.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations
from math import comb
from typing import Callable, Dict, List, Optional

import mpmath

from .algebra import Combination
from .finite import primes_between, stuffle_check_mod_p, symmetric_check_mod_p
from .index import dual, index_to_word
from .numerics import (
    DEFAULT_PREC,
    eval_combo,
    eval_star,
    mzv_direct,
    mzv_holder,
    mzv_holder_at,
    zeta_even_exact,
)
from .products import shuffle, shuffle_indices, stuffle, stuffle_combo, words_to_indices
from .regularization import (
    ShufflePoly,
    HarmonicPoly,
    constant_term,
    dual_image,
    ohno_composition_sum,
    ones_two_ones,
    reg_harmonic,
    reg_shuffle_index,
)
from .series import gamma_quotient_series, kaneko_ohno_rhs, mzv_difference_rhs, theorem3_rhs
from .symmetric import (
    admissible_indices,
    frmzv,
    mod_zeta2_reduce,
    partition_reduce,
    positive_compositions,
    recursion_residual,
    sum_formula_by_induction,
    sum_S,
    sum_S_star,
    sum_formula_rhs,
    symmetric_sum,
    zeta2_ideal_relation,
    zeta2_ideal_witness,
)

__all__ = ["CheckResult", "GROUPS", "ALIASES", "run_group", "run_checks", "all_indices"]


@dataclass
class CheckResult:
    claim_id: str
    paper_ref: str
    status: str
    residual: str
    elapsed_ms: float
    cases: int = 1
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_obj(self, with_time: bool = True) -> dict:
        out = {
            "claim_id": self.claim_id,
            "paper_ref": self.paper_ref,
            "status": self.status,
            "residual": self.residual,
            "cases": self.cases,
            "failures": self.failures,
        }
        if with_time:
            out["elapsed_ms"] = round(self.elapsed_ms, 1)
        return out


class _Claim:
    """Accumulates one claim over many cases."""

    def __init__(self, claim_id: str, paper_ref: str, tol: Optional[float] = None):
        self.claim_id = claim_id
        self.paper_ref = paper_ref
        self.tol = tol
        self.cases = 0
        self.worst = mpmath.mpf(0)
        self.failures: List[str] = []
        self.t0 = time.perf_counter()

    def exact(self, ok: bool, label) -> None:
        self.cases += 1
        if not ok:
            self._fail(label)

    def numeric(self, residual, label) -> None:
        self.cases += 1
        r = abs(residual)
        if r > self.worst:
            self.worst = r
        if not r < self.tol:
            self._fail(f"{label}: {mpmath.nstr(r, 5)}")

    def _fail(self, label) -> None:
        if len(self.failures) < 10:
            self.failures.append(str(label))
        else:
            self.failures[-1] = "..."

    def result(self) -> CheckResult:
        status = "pass" if not self.failures and self.cases else "fail"
        residual = "0" if self.tol is None else mpmath.nstr(self.worst, 5)
        elapsed = (time.perf_counter() - self.t0) * 1000
        return CheckResult(self.claim_id, self.paper_ref, status, residual, elapsed,
                           self.cases, list(self.failures))


def all_indices(w: int) -> List[tuple]:
    """Every index (admissible or not) of weight ``w``."""
    return [c for n in range(1, w + 1) for c in positive_compositions(w, n)] if w else [()]


def _lbl(*parts) -> str:
    return " ".join(",".join(map(str, p)) if isinstance(p, tuple) else str(p) for p in parts)


# ---------------------------------------------------------------------------
# groups

def check_products(**_) -> List[CheckResult]:
    c = _Claim("stuffle-golden", "harmonic product example (2)*(2) = 2(2,2) + (4)")
    c.exact(stuffle((2,), (2,)) == Combination({(2, 2): 2, (4,): 1}), "(2)*(2)")
    out = [c.result()]
    c = _Claim("shuffle-golden", "shuffle example (1,1) sh (2) = 3(2,1,1) + 2(1,2,1) + (1,1,2)")
    got = words_to_indices(shuffle(index_to_word((1, 1)), index_to_word((2,))))
    c.exact(got == Combination({(2, 1, 1): 3, (1, 2, 1): 2, (1, 1, 2): 1}), "(1,1) sh (2)")
    out.append(c.result())
    return out


def _morphism(poly_reg, product, u, v):
    lhs = poly_reg(u) * poly_reg(v)
    rhs = None
    for term, coeff in product(u, v).items():
        t = poly_reg(term).scale(coeff)
        rhs = t if rhs is None else rhs + t
    return lhs == rhs


def check_regularization(max_weight: int = 8, **_) -> List[CheckResult]:
    out = []
    pairs = [(u, v)
             for wu in range(1, max_weight)
             for wv in range(1, max_weight - wu + 1)
             for u in all_indices(wu) for v in all_indices(wv) if u <= v]
    c = _Claim("reg-harmonic-morphism", "harmonic regularization respects the stuffle product")
    for u, v in pairs:
        c.exact(_morphism(reg_harmonic, stuffle, u, v), _lbl(u, "*", v))
    out.append(c.result())
    c = _Claim("reg-shuffle-morphism", "shuffle regularization respects the shuffle product")
    for u, v in pairs:
        c.exact(_morphism(reg_shuffle_index, shuffle_indices, u, v), _lbl(u, "sh", v))
    out.append(c.result())
    c = _Claim("reg-admissible-fixed", "both regularizations fix admissible indices")
    for w in range(2, max_weight + 1):
        for i in admissible_indices(w):
            c.exact(reg_harmonic(i) == HarmonicPoly.constant(Combination.basis(i))
                    and reg_shuffle_index(i) == ShufflePoly.constant(Combination.basis(i)), _lbl(i))
    out.append(c.result())
    return out


def check_duality(max_weight: int = 8, prec: int = DEFAULT_PREC, **_) -> List[CheckResult]:
    c = _Claim("dual-involution", "duality reverses the word and swaps letters")
    for w in range(2, max(12, max_weight) + 1):
        for i in admissible_indices(w):
            d = dual(i)
            c.exact(dual(d) == i and sum(d) == w and len(d) == w - len(i), _lbl(i))
    out = [c.result()]
    # the dual side is summed along a path split at 1/3, not 1/2, so the two
    # evaluations share no terms
    c = _Claim("dual-numeric", "duality formula of MZVs", tol=1e-30)
    with mpmath.workprec(prec):
        for w in range(2, max_weight + 1):
            for i in admissible_indices(w):
                c.numeric(mzv_holder(i, prec) - mzv_holder_at(dual(i), prec=prec), _lbl(i))
    out.append(c.result())
    return out


def check_lemma3(max_k: int = 9, prec: int = DEFAULT_PREC, **_) -> List[CheckResult]:
    c = _Claim("ones-two-ones-exact",
               "regularized value of (1^m,2,1^(l-1)) is (-1)^m C(m+l,m) zeta(2,1^(m+l-1))")
    for m in range(0, max_k):
        for l in range(1, max_k - m):
            idx = (1,) * m + (2,) + (1,) * (l - 1)
            c.exact(constant_term(reg_shuffle_index(idx)) == ones_two_ones(m, l), _lbl(m, l))
    out = [c.result()]
    c = _Claim("initial-values-numeric",
               "shuffle finite value at (1^(i-1),2,1^(k-i-1)) equals (-1)^(i-1) C(k,i) zeta(k)",
               tol=1e-25)
    cx = _Claim("initial-values-exact",
                "shuffle finite value at (1^(i-1),2,1^(k-i-1)) is (-1)^(i-1) C(k,i) (2,1^(k-2))")
    with mpmath.workprec(prec):
        for k in range(2, max_k + 1):
            for i in range(1, k):
                idx = (1,) * (i - 1) + (2,) + (1,) * (k - i - 1)
                val = frmzv("shuffle", idx)
                coeff = (-1) ** (i - 1) * comb(k, i)
                cx.exact(val.value == Combination.basis((2,) + (1,) * (k - 2), coeff), _lbl(k, i))
                c.numeric(eval_combo(val.value, prec) - coeff * mzv_holder((k,), prec), _lbl(k, i))
    out += [cx.result(), c.result()]
    return out


def check_lemma4(max_k: int = 10, prec: int = DEFAULT_PREC, **_) -> List[CheckResult]:
    """``max_k`` bounds ``k + n``."""
    c = _Claim("height-one-key-identity",
               "shuffle value of (1^(n-1),k) equals (-1)^(n-1) zeta-star(k,1^(n-1))", tol=1e-25)
    cx = _Claim("ohno-composition-sum",
                "composition-sum form of the shuffle value of (1^(n-1),k), up to duality")
    with mpmath.workprec(prec):
        for k in range(2, max_k):
            for n in range(1, max_k - k + 1):
                reg = constant_term(reg_shuffle_index((1,) * (n - 1) + (k,)))
                cx.exact(dual_image(ohno_composition_sum(n, k)) == reg, _lbl(k, n))
                star = eval_star((k,) + (1,) * (n - 1), prec)
                c.numeric(eval_combo(reg, prec) - (-1) ** (n - 1) * star, _lbl(k, n))
    return [c.result(), cx.result()]


def check_lemma2(max_k: int = 9, prec: int = DEFAULT_PREC, **_) -> List[CheckResult]:
    strict = _Claim("sum-recursion",
                    "(n-i)S(k,n,i) + i S(k,n,i+1) + (k-n)S(k,n-1,i) = 0", tol=1e-25)
    witness = _Claim("sum-recursion-mod-zeta2",
                     "residual of the sum recursion lies in the ideal generated by even zeta(m)")
    strict_star = _Claim("star-sum-recursion",
                         "(n-i)S*(k,n,i) + i S*(k,n,i+1) - (k-n)S*(k,n-1,i) = 0", tol=1e-25)
    witness_star = _Claim("star-sum-recursion-mod-zeta2",
                          "residual of the star sum recursion lies in the ideal of even zeta(m)")
    with mpmath.workprec(prec):
        for k in range(3, max_k + 1):
            for n in range(2, k):
                for i in range(1, n):
                    for variant, sc, wc in (("plain", strict, witness),
                                            ("star", strict_star, witness_star)):
                        r = recursion_residual(k, n, i, variant, prec)
                        label = _lbl(k, n, i)
                        if r.exact_zero:
                            sc.numeric(0, label)
                            wc.exact(True, label)
                        else:
                            sc.numeric(r.numeric, label)
                            wc.exact(zeta2_ideal_witness(r.combination) is not None, label)
    return [strict.result(), witness.result(), strict_star.result(), witness_star.result()]


def check_theorem2(max_k: int = 9, prec: int = DEFAULT_PREC, **_) -> List[CheckResult]:
    out = []
    for variant, ref in (("plain", "sum formula by backward induction from the initial values"),
                         ("star", "star sum formula by backward induction")):
        c = _Claim(f"sum-formula-induction-{variant}", ref)
        for k in range(3, max_k + 1, 2):
            coeffs = sum_formula_by_induction(k, variant)
            for n in range(1, k):
                for i in range(1, n + 1):
                    c.exact(coeffs[(n, i)] == sum_formula_rhs(k, n, i, variant), _lbl(k, n, i))
        out.append(c.result())
    # the formula itself, modulo zeta(2): PSLQ against the ideal's products
    pslq_prec = max(prec, 256)
    for variant, S in (("plain", sum_S), ("star", sum_S_star)):
        c = _Claim(f"sum-formula-mod-zeta2-{variant}",
                   f"{variant} sum of finite values is a binomial multiple of zeta(k) mod zeta(2)")
        for k in range(3, min(max_k, 9) + 1, 2):
            for n in range(1, k):
                for i in range(1, n + 1):
                    with mpmath.workprec(pslq_prec):
                        d = (eval_combo(S(k, n, i).value, pslq_prec)
                             - sum_formula_rhs(k, n, i, variant) * mzv_holder((k,), pslq_prec))
                    c.exact(zeta2_ideal_relation(d, k, pslq_prec) is not None, _lbl(k, n, i))
        out.append(c.result())
    return out


def _multisets(max_depth: int, max_weight: int):
    for n in range(1, max_depth + 1):
        for ks in combinations_with_replacement(range(1, max_weight + 1), n):
            if sum(ks) <= max_weight:
                yield ks


def _depth3_display(k1: int, k2: int, k3: int) -> bool:
    """Expansion of the symmetric sum of three harmonic finite values."""
    def e(k):
        return 1 + (-1) ** k

    def reg0(idx):
        return constant_term(reg_harmonic(idx))

    lhs = symmetric_sum((k1, k2, k3)).value
    perm_sum = Combination()
    for p in permutations((k1, k2, k3)):
        perm_sum = perm_sum + reg0(p)
    rhs = perm_sum * (e(k1) * e(k2) * e(k3))
    for a, b, c in ((k1, k2, k3), (k1, k3, k2), (k2, k3, k1)):
        coeff = ((-1) ** a + (-1) ** b) * e(c)
        rhs = rhs + (Combination.basis((a + b, c)) + reg0((c, a + b))) * coeff
        # rewritten form: zeta(a+b) zeta*(c) - zeta(a+b+c)
        alt = stuffle_combo(Combination.basis((a + b,)), reg0((c,))) - Combination.basis((a + b + c,))
        if (Combination.basis((a + b, c)) + reg0((c, a + b))) != alt:
            return False
    return lhs == rhs


def check_theorem1(max_depth: int = 4, max_weight: int = 9, **_) -> List[CheckResult]:
    c_red = _Claim("symmetric-formula", "symmetric sums vanish modulo zeta(2)")
    c_val = _Claim("symmetric-partition-expansion",
                   "symmetric sum is a polynomial in single finite values (exact)")
    for ks in _multisets(max_depth, max_weight):
        try:
            poly = partition_reduce(ks, validate=True)
            c_val.exact(True, _lbl(ks))
        except Exception as exc:  # noqa: BLE001 - recorded as a failure
            c_val.exact(False, f"{_lbl(ks)}: {exc}")
            continue
        c_red.exact(not mod_zeta2_reduce(poly), _lbl(ks))
    c_even = _Claim("symmetric-depth3-even",
                    "all-even depth-3 symmetric sum of zeta* as products of single zetas")
    for ks in combinations_with_replacement(range(2, max_weight + 1, 2), 3):
        if sum(ks) > max(max_weight, 12):
            continue
        k1, k2, k3 = ks
        lhs = Combination()
        for p in permutations(ks):
            lhs = lhs + Combination.basis(p)
        z = lambda *a: Combination.basis(tuple(a))  # noqa: E731
        rhs = (stuffle_combo(stuffle_combo(z(k1), z(k2)), z(k3))
               - stuffle_combo(z(k1 + k2), z(k3)) - stuffle_combo(z(k1 + k3), z(k2))
               - stuffle_combo(z(k2 + k3), z(k1)) + z(k1 + k2 + k3) * 2)
        c_even.exact(lhs == rhs, _lbl(ks))
    c_disp = _Claim("symmetric-depth3-expansion",
                    "direct depth-3 expansion of the symmetric sum by parity factors")
    for k1 in range(1, 6):
        for k2 in range(1, 6):
            for k3 in range(1, 6):
                if k1 + k2 + k3 <= max_weight:
                    c_disp.exact(_depth3_display(k1, k2, k3), _lbl((k1, k2, k3)))
    return [c_val.result(), c_red.result(), c_even.result(), c_disp.result()]


def check_theorem3(max_k: int = 8, prec: int = 192, **_) -> List[CheckResult]:
    main = _Claim("height-one-difference",
                  "difference of shuffle finite values equals the gamma/cot generating series",
                  tol=1e-25)
    spot = _Claim("height-one-spot", "(k,n) = (3,2) difference equals -2 zeta(2)^2", tol=1e-25)
    ko = _Claim("kaneko-ohno-series",
                "signed zeta-star differences match the digamma/cot generating series", tol=1e-25)
    mzd = _Claim("mzv-difference-series",
                 "zeta(k,1^(n-1)) - zeta(n,1^(k-1)) from the gamma-quotient series", tol=1e-25)
    tdeg = _Claim("shuffle-T-cancellation", "T-parts cancel in height-one shuffle finite values")
    with mpmath.workprec(prec):
        for k in range(2, max_k + 1):
            for n in range(2, max_k + 1):
                a = frmzv("shuffle", (k,) + (1,) * (n - 1))
                b = frmzv("shuffle", (n,) + (1,) * (k - 1))
                tdeg.exact(a.t_degree == 0 and b.t_degree == 0, _lbl(k, n))
                diff = eval_combo(a.value - b.value, prec)
                main.numeric(diff - theorem3_rhs(k, n, prec), _lbl(k, n))
                if (k, n) == (3, 2):
                    spot.numeric(diff + 2 * mzv_holder((2,), prec) ** 2, _lbl(k, n))
                star_side = ((-1) ** k * eval_star((k,) + (1,) * (n - 1), prec)
                             - (-1) ** n * eval_star((n,) + (1,) * (k - 1), prec))
                ko.numeric(star_side - kaneko_ohno_rhs(k, n, prec), _lbl(k, n))
                plain = mzv_holder((k,) + (1,) * (n - 1), prec) - mzv_holder((n,) + (1,) * (k - 1), prec)
                mzd.numeric(plain - mzv_difference_rhs(k, n, prec), _lbl(k, n))
    return [tdeg.result(), main.result(), spot.result(), ko.result(), mzd.result()]


def check_series(max_weight: int = 10, prec: int = DEFAULT_PREC, **_) -> List[CheckResult]:
    c = _Claim("gamma-quotient-coefficients",
               "1 - Gamma(1-X)Gamma(1-Y)/Gamma(1-X-Y) has coefficients zeta(k+1,1^(n-1))",
               tol=1e-25)
    G = gamma_quotient_series(max_weight, prec)
    with mpmath.workprec(prec):
        for k in range(1, max_weight):
            for n in range(1, max_weight - k + 1):
                c.numeric(-G[k, n] - mzv_holder((k + 1,) + (1,) * (n - 1), prec), _lbl(k, n))
    cy = _Claim("gamma-quotient-pure", "pure powers of X or Y vanish in the gamma quotient")
    for j in range(1, max_weight + 1):
        cy.exact(G[0, j] == 0 and G[j, 0] == 0, j)
    return [c.result(), cy.result()]


def check_evaluator(max_weight: int = 6, prec: int = DEFAULT_PREC, **_) -> List[CheckResult]:
    c = _Claim("holder-vs-direct", "Hoelder convolution agrees with truncated direct sums",
               tol=2e-6)
    with mpmath.workprec(prec):
        for w in range(2, min(max_weight, 6) + 1):
            for i in admissible_indices(w):
                c.numeric(mzv_holder(i, prec) - mzv_direct(i, 1e-6), _lbl(i))
    ce = _Claim("holder-vs-euler", "Hoelder convolution reproduces Euler's even zeta values",
                tol=1e-30)
    with mpmath.workprec(prec):
        for s in (2, 4, 6, 8):
            ce.numeric(mzv_holder((s,), prec) - zeta_even_exact(s).value(prec), s)
    cz = _Claim("holder-split-point", "path split at 1/2 and at 1/3 give the same values",
                tol=1e-30)
    with mpmath.workprec(prec):
        for w in range(2, max(max_weight, 8) + 1):
            for i in admissible_indices(w):
                cz.numeric(mzv_holder(i, prec) - mzv_holder_at(i, prec=prec), _lbl(i))
    return [c.result(), ce.result(), cz.result()]


def check_finite(primes=(5, 101), max_weight: int = 6, max_depth: int = 3, **_) -> List[CheckResult]:
    lo, hi = primes
    plist = primes_between(lo, hi)
    idx = [i for w in range(1, max_weight + 1) for i in all_indices(w) if len(i) <= max_depth]
    cs = _Claim("finite-stuffle", "finite values satisfy the harmonic product rule mod p")
    csym = _Claim("finite-symmetric", "symmetric sums of finite values vanish mod p")
    for p in plist:
        for u in idx:
            for v in idx:
                if u <= v and sum(u) + sum(v) <= max_weight and p > sum(u) + sum(v) + 1:
                    cs.exact(stuffle_check_mod_p(u, v, p), _lbl(u, v, f"p={p}"))
        for ks in _multisets(max_depth, max_weight):
            if p > sum(ks) + 1:
                csym.exact(symmetric_check_mod_p(ks, p), _lbl(ks, f"p={p}"))
    return [cs.result(), csym.result()]


GROUPS: Dict[str, Callable[..., List[CheckResult]]] = {
    "products": check_products,
    "regularization": check_regularization,
    "duality": check_duality,
    "lemma3": check_lemma3,
    "lemma4": check_lemma4,
    "lemma2": check_lemma2,
    "theorem2": check_theorem2,
    "theorem1": check_theorem1,
    "theorem3": check_theorem3,
    "series": check_series,
    "evaluator": check_evaluator,
    "finite": check_finite,
}

ALIASES = {
    "initial-values": "lemma3",
    "key-lemma": "lemma4",
    "recursion": "lemma2",
    "sum-formula": "theorem2",
    "symmetric": "theorem1",
    "height-one": "theorem3",
}


def run_group(name: str, **params) -> List[CheckResult]:
    name = ALIASES.get(name, name)
    fn = GROUPS[name]
    return fn(**{k: v for k, v in params.items() if v is not None})


def run_checks(names, jobs: int = 1, **params) -> List[CheckResult]:
    """Run groups (optionally in worker processes); output in canonical order."""
    names = [ALIASES.get(n, n) for n in names]
    if jobs <= 1 or len(names) == 1:
        chunks = [run_group(n, **params) for n in names]
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(run_group, n, **params) for n in names]
            chunks = [f.result() for f in futures]
    return [r for chunk in chunks for r in chunk]
