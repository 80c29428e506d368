"""Freeness of B+ over A_n by graded evaluation rank, and non-freeness of the B- cases.

B+ = (wedge(M+)* (x) M-)^G.  The candidate basis is every product
(monomial in T_0..T_{n-2}, Q) ^ g with g in {X^(4i+2), X^(4i+3), Omega, dOmega}.
Since A_n is spanned by those monomials, freeness in degree k is the
linear independence of the degree-k candidates, which we certify by the
rank of their evaluation matrix: rows are candidates, columns are value
coordinates at a set of argument tuples.

At n=2 the tuples are all increasing basis tuples.  At n=3 they are random
points of M+ over GF(p) (each point column is a fixed linear combination of
basis-tuple columns), so the evaluation rank is at most the true rank and a
full-rank matrix is a proof of independence in characteristic 0 as well.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .bruteforce import so_invariant_dim_bruteforce
from .fields import P_DEFAULT, P_SECOND, QQ, PrimeField
from .invariants import count_B_plus, divide_check, poincare_B_plus_predicted
from .linalg import rank
from .multilinear.altmap import wedge_all
from .multilinear.covariants import covariant_dOmega, covariant_Omega, covariant_Q, covariant_T, power
from .multilinear.frame import Frame, basis_frame
from .multilinear.sampling import random_field_symmetric, rng_for
from .poly import PoincarePoly
from .weyl import PAPER_CASES, bplus_profile_weyl, parse_weight, poincare_multiplicity

OVERSAMPLE = 4
MAX_TOPUP = 8


@dataclass
class Candidate:
    scalars: tuple
    generator: str
    degree: int
    amap: object

    @property
    def label(self):
        return "^".join(self.scalars + (self.generator,))


@dataclass
class CandidateBasis:
    n: int
    elements: list

    def of_degree(self, k):
        return [c for c in self.elements if c.degree == k]

    def degrees(self):
        return sorted({c.degree for c in self.elements})

    def profile(self) -> PoincarePoly:
        top = max(c.degree for c in self.elements)
        coeffs = [0] * (top + 1)
        for c in self.elements:
            coeffs[c.degree] += 1
        return PoincarePoly(coeffs)


def module_generators(n: int):
    if n < 2:
        raise ValueError("the B+ basis needs n >= 2")
    gens = []
    for i in range(n - 1):
        gens += [(f"X^{4 * i + 2}", power(n, 4 * i + 2)), (f"X^{4 * i + 3}", power(n, 4 * i + 3))]
    return gens + [("Omega", covariant_Omega(n)), ("dOmega", covariant_dOmega(n))]


def build_candidates(n: int) -> CandidateBasis:
    scal = [(f"T{i}", covariant_T(i, n)) for i in range(n - 1)] + [("Q", covariant_Q(n))]
    out = []
    for glab, g in module_generators(n):
        for r in range(len(scal) + 1):
            for S in combinations(scal, r):
                # scalar factors first: their tables are shared across candidates
                amap = wedge_all([s for _, s in S] + [g])
                out.append(Candidate(tuple(lab for lab, _ in S), glab, amap.degree, amap))
    return CandidateBasis(n, out)


def _point_frame(n, k, rng, field):
    return Frame(field, [random_field_symmetric(2 * n, rng, field) for _ in range(k)])


def evaluation_matrix(cands, k, n, field, mode="exhaustive", samples=None, rng=None):
    """Rows: degree-k candidates.  Columns: (tuple, matrix coordinate)."""
    if not cands:
        return field.zeros((0, 0))
    if mode == "exhaustive":
        frame = basis_frame(n, field)
        return np.stack([field.convert(c.amap.table(frame)).reshape(-1) for c in cands])
    blocks = []
    for _ in range(samples):
        frame = _point_frame(n, k, rng, field)
        blocks.append(np.stack([field.convert(c.amap.top(frame)).reshape(-1) for c in cands]))
    return np.concatenate(blocks, axis=1)


def default_samples(count: int, n: int) -> int:
    """Enough random points for OVERSAMPLE x count columns (2n x 2n values per point)."""
    per_point = (2 * n) * (2 * n - 1) // 2
    return max(1, -(-OVERSAMPLE * count // per_point))


def graded_rank(cands: CandidateBasis, k: int, n: int | None = None, field=QQ, mode=None,
                seed=0, samples=None) -> int:
    n = cands.n if n is None else n
    mode = mode or ("exhaustive" if n == 2 else "sampled")
    elems = cands.of_degree(k)
    if not elems:
        return 0
    samples = samples or default_samples(len(elems), n)
    M = evaluation_matrix(elems, k, n, field, mode, samples, rng_for([seed, k]))
    return rank(M, field)


def _sampled_rank(elems, k, n, field, seed):
    """Rank over ``field`` from random points, topping up while deficient."""
    rng = rng_for([seed, k, getattr(field, "p", 0)])
    samples = default_samples(len(elems), n)
    M = evaluation_matrix(elems, k, n, field, "sampled", samples, rng)
    r = rank(M, field)
    extra = 0
    while r < len(elems) and extra < MAX_TOPUP:
        M = np.concatenate([M, evaluation_matrix(elems, k, n, field, "sampled", 1, rng)], axis=1)
        r = rank(M, field)
        extra += 1
    return r, samples + extra


def oracle_profile(n: int):
    """Independent graded dimensions of B+: brute-force kernels at n=2, characters otherwise."""
    if n == 2:
        return "so-kernel", [so_invariant_dim_bruteforce(k, 2, "skew") for k in range(11)]
    return "weyl-character", bplus_profile_weyl(n).to_list()


def _rank_job(job):
    # worker entry point: rebuilds the (cached) candidates in its own process
    n, k, p, seed = job
    elems = build_candidates(n).of_degree(k)
    return _sampled_rank(elems, k, n, PrimeField(p), seed)


def _sampled_ranks(cands, n, degrees, primes, seed, threads, custom):
    jobs = [(n, k, p, seed) for k in degrees for p in primes]
    if threads > 1 and not custom:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=threads) as ex:
            res = list(ex.map(_rank_job, jobs))
    else:
        res = [_sampled_rank(cands.of_degree(k), k, n, PrimeField(p), seed) for _, k, p, _ in jobs]
    return {(k, p): r for (_, k, p, _), r in zip(jobs, res)}


def certify_freeness_Bplus(n: int, seed: int = 0, cands: CandidateBasis | None = None,
                           primes=(P_DEFAULT, P_SECOND), threads: int = 1) -> dict:
    """Per-degree rank of the candidates against an independent dimension oracle.

    ``threads > 1`` spreads the (degree, prime) rank jobs over processes;
    each job is seeded by (seed, k, p), so the report does not depend on it.
    """
    if n not in (2, 3):
        raise ValueError("freeness certificates are supported for n = 2, 3")
    custom = cands is not None
    cands = cands or build_candidates(n)
    source, oracle = oracle_profile(n)
    enum = count_B_plus(n).coeffs
    predicted = poincare_B_plus_predicted(n)
    top = max(len(oracle), len(enum), predicted.degree + 1, max(cands.degrees()) + 1)
    per_degree = []
    ok = True
    sampled = {}
    if n != 2:
        sampled = _sampled_ranks(cands, n, [k for k in range(top) if cands.of_degree(k)],
                                 primes, seed, threads, custom)
    for k in range(top):
        elems = cands.of_degree(k)
        orc = oracle[k] if k < len(oracle) else 0
        row = {"k": k, "candidates": len(elems), "oracle": orc,
               "enumeration": enum[k] if k < len(enum) else 0}
        if n == 2:
            row["rank"] = graded_rank(cands, k, n, QQ, "exhaustive") if elems else 0
            row["columns"] = "all basis tuples"
        else:
            ranks, used = [], []
            for p in primes:
                r, s = sampled[(k, p)] if elems else (0, 0)
                ranks.append(r)
                used.append(s)
            row["rank"] = min(ranks)
            row["rank_by_prime"] = dict(zip([str(p) for p in primes], ranks))
            row["points"] = used
            if len(set(ranks)) > 1:
                # disagreement between primes: settle it over the rationals
                row["rank_exact"], _ = _sampled_rank(elems, k, n, QQ, seed)
                row["rank"] = row["rank_exact"]
        good = row["rank"] == row["candidates"] == orc
        row["status"] = "PASS" if good else "FAIL"
        ok &= good
        if elems or orc:
            per_degree.append(row)
    total = sum(r["rank"] for r in per_degree)
    out = {"case": f"bplus-n{n}", "n": n, "seed": seed, "oracle_source": source,
           "per_degree": per_degree, "total_rank": total,
           "total_candidates": len(cands.elements), "expected_total": 2 * n * 2**n,
           "status": "PASS" if ok and total == 2 * n * 2**n else "FAIL"}
    bad = [r for r in per_degree if r["status"] == "FAIL"]
    if bad:
        out["first_failure"] = {"k": bad[0]["k"], "rank": bad[0]["rank"],
                                "candidates": bad[0]["candidates"], "oracle": bad[0]["oracle"]}
    return out


NON_FREE_CASES = {"sym_sym": "bminus-sym", "skew_sym": "bminus-skew",
                  "bminus-sym": "bminus-sym", "bminus-skew": "bminus-skew"}


def certify_non_freeness(case: str) -> dict:
    key = NON_FREE_CASES.get(case)
    if key is None:
        raise ValueError(f"unsupported case {case!r}; choose from {sorted(NON_FREE_CASES)}")
    c = PAPER_CASES[key]
    n = c["n"]
    target = parse_weight(c["target"], n)
    table, poly = poincare_multiplicity(c["source"], target, n, c["kmax"], c["duality_dim"])
    div = divide_check(poly, c["divide"])
    return {"case": key, "n": n, "source": c["source"], "target": c["target"],
            "table": [{"degree": k, "multiplicity": m} for k, m in enumerate(table)],
            "poincare": poly.to_list(), "divisor": div.divisor.to_list(),
            "quotient": div.quotient.to_list(), "remainder": div.remainder.to_list(),
            "status": "PASS" if not div.exact else "FAIL"}
