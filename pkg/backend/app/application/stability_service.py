"""
Stability service: astab, dstab and the bound checks for one ideal.

Certified runs (matroidal, gcd 1, full support) stop at B = min{d, ℓ(I)}
and treat a broken Ass chain as an invariant violation. Everything else
runs uncertified up to kmax, capped by ℓ(I) when the exchange property
holds.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import List, Literal, Optional

from sympy import isprime

from app.core.config import Settings, settings
from app.core.exceptions import (
    InputError,
    InvariantViolationError,
    ModeError,
    ResourceLimitError,
)
from app.domain.betti import DepthResult, exact_depth
from app.domain.ideals import MonomialIdeal, basic_invariants, power, restrict
from app.domain.matroids import cover_profile, is_polymatroidal
from app.domain.monomials import PrimeSupport, sort_primes
from app.domain.relation_graph import (
    ComponentFactorization,
    RelationGraph,
    build_gamma,
    component_factorization,
)
from app.domain.stability import (
    AssSet,
    analytic_spread,
    ass_chain,
    max_ideal_associated,
)

logger = logging.getLogger("polystab.service.stability")

Mode = Literal["auto", "certified", "uncertified"]

PASS, FAIL, RESOURCE, NA, INFO, REVIEW = (
    "pass",
    "fail",
    "resource_limit",
    "not_applicable",
    "info",
    "review",
)


@dataclass(frozen=True)
class EngineLimits:
    max_ass_variables: int = 14
    exact_depth_max_generators: int = 25
    exact_depth_max_lattice: int = 20000
    field_prime: int = 32003
    second_field_prime: int = 0
    workers: int = 1
    default_kmax: int = 3

    @classmethod
    def from_settings(cls, cfg: Settings = settings, **overrides) -> "EngineLimits":
        base = cls(
            max_ass_variables=cfg.MAX_ASS_VARIABLES,
            exact_depth_max_generators=cfg.EXACT_DEPTH_MAX_GENERATORS,
            exact_depth_max_lattice=cfg.EXACT_DEPTH_MAX_LATTICE,
            field_prime=cfg.FIELD_PRIME,
            second_field_prime=cfg.SECOND_FIELD_PRIME,
            workers=cfg.WORKERS,
            default_kmax=cfg.DEFAULT_KMAX,
        )
        limits = replace(base, **{k: v for k, v in overrides.items() if v is not None})
        limits.check()
        return limits

    def check(self) -> None:
        caps = {
            "max_ass_variables": self.max_ass_variables,
            "exact_depth_max_generators": self.exact_depth_max_generators,
            "exact_depth_max_lattice": self.exact_depth_max_lattice,
            "workers": self.workers,
            "default_kmax": self.default_kmax,
        }
        bad = sorted(k for k, v in caps.items() if v < 1)
        if bad:
            raise InputError(f"must be positive: {', '.join(bad)}")
        if not isprime(self.field_prime):
            raise InputError(f"field prime {self.field_prime} is not prime")
        if self.second_field_prime and not isprime(self.second_field_prime):
            raise InputError(f"second field prime {self.second_field_prime} is not prime")


@dataclass(frozen=True)
class Verdict:
    name: str
    status: str
    detail: Optional[str] = None


@dataclass(frozen=True)
class StabilityPlan:
    certified: bool
    polymatroidal: bool
    matroidal: bool
    degree: Optional[int]
    spread: Optional[int]
    bound: int
    chain_length: int
    reason: Optional[str] = None


@dataclass(frozen=True)
class AstabResult:
    k: int
    bound: int
    chain: List[AssSet]
    persistence_breaks: List[int]  # k with Ass(I^k) ⊄ Ass(I^(k+1))


@dataclass(frozen=True)
class ComponentDstab:
    variables: tuple
    degree: int
    spread: int
    dstab: int


@dataclass(frozen=True)
class DepthPoint:
    k: int
    depth: int
    method: str  # socle | betti | monotone
    pd: Optional[int] = None


@dataclass(frozen=True)
class DstabResult:
    k: int
    method: str  # components | exact_depth
    components: List[ComponentDstab] = field(default_factory=list)
    depth_sequence: List[DepthPoint] = field(default_factory=list)
    factorization: Optional[ComponentFactorization] = None


@dataclass(frozen=True)
class StabilityReport:
    ideal: MonomialIdeal
    plan: StabilityPlan
    gamma: RelationGraph
    astab: AstabResult
    dstab: DstabResult
    verdicts: List[Verdict]
    depth_sequence: Optional[List[DepthPoint]] = None

    @property
    def conjecture_counterexample(self) -> bool:
        return self.astab.k != self.dstab.k

    @property
    def failed(self) -> bool:
        return any(v.status == FAIL for v in self.verdicts)


class StabilityEngine:
    def __init__(self, limits: Optional[EngineLimits] = None):
        self.limits = limits or EngineLimits.from_settings()

    # ── planning ───────────────────────────────────────────────────────

    def plan(self, I: MonomialIdeal, mode: Mode = "auto", kmax: Optional[int] = None) -> StabilityPlan:
        if I.is_zero or I.is_unit:
            raise InputError("stability indices need a nonzero proper ideal")
        if kmax is not None and kmax < 1:
            raise InputError(f"kmax must be positive, got {kmax}")

        exchange = is_polymatroidal(I)
        poly = exchange.holds
        matroidal = poly and I.is_squarefree
        inv = basic_invariants(I)
        certifiable = matroidal and inv.gcd_is_one and inv.full_support
        degree = I.degree
        spread = analytic_spread(I) if I.is_equigenerated else None

        reason = None
        if not matroidal:
            reason = exchange.reason if not poly else "not squarefree"
        elif not inv.gcd_is_one:
            reason = f"gcd(I) = {inv.gcd} is not 1"
        elif not inv.full_support:
            reason = "support is not all variables"

        if mode == "certified" and not certifiable:
            raise ModeError(f"certified mode needs a matroidal ideal with gcd 1 and full support: {reason}")

        if certifiable and mode != "uncertified":
            bound = min(degree, spread)
            return StabilityPlan(True, poly, matroidal, degree, spread, bound, max(bound, kmax or 0))

        k = kmax or self.limits.default_kmax
        bound = min(k, spread) if poly and spread else k
        logger.info("Uncertified run (%s): power bound %d", reason or "requested", bound)
        return StabilityPlan(False, poly, matroidal, degree, spread, bound, max(bound, k), reason)

    # ── astab ──────────────────────────────────────────────────────────

    def chain(self, I: MonomialIdeal, plan: StabilityPlan) -> List[AssSet]:
        return ass_chain(
            I,
            plan.chain_length,
            assume_linear=plan.polymatroidal,
            max_variables=self.limits.max_ass_variables,
            workers=self.limits.workers,
        )

    def astab(self, I: MonomialIdeal, plan: Optional[StabilityPlan] = None,
              chain: Optional[List[AssSet]] = None) -> AstabResult:
        plan = plan or self.plan(I)
        chain = chain or self.chain(I, plan)
        B = plan.bound
        target = chain[B - 1]
        k = next(j for j in range(1, B + 1) if chain[j - 1] == target)

        breaks = [j for j in range(1, len(chain)) if not chain[j - 1].issubset(chain[j])]
        if breaks and plan.certified:
            j = breaks[0]
            raise InvariantViolationError(
                f"Ass(I^{j}) is not contained in Ass(I^{j + 1}) for a certified matroidal ideal"
            )
        return AstabResult(k, B, chain, breaks)

    # ── dstab ──────────────────────────────────────────────────────────

    def depth_at(self, J: MonomialIdeal, k: int, assume_linear: bool = False) -> DepthPoint:
        """depth R/J: the socle test decides depth 0, Betti numbers the rest."""
        if max_ideal_associated(J, assume_linear):
            return DepthPoint(k, 0, "socle")
        res = self.exact(J)
        return DepthPoint(k, res.depth, "betti", res.pd)

    def exact(self, J: MonomialIdeal) -> DepthResult:
        return exact_depth(
            J,
            field_prime=self.limits.field_prime,
            second_prime=self.limits.second_field_prime or None,
            max_generators=self.limits.exact_depth_max_generators,
            max_lattice=self.limits.exact_depth_max_lattice,
            workers=self.limits.workers,
        )

    def depth_sequence(self, I: MonomialIdeal, upto: int, monotone: bool = False) -> List[DepthPoint]:
        """
        depth R/I^k for k = 1..upto.

        With monotone=True (persistence known) every power after the first
        depth-zero one is filled in without computation.
        """
        out: List[DepthPoint] = []
        for k in range(1, upto + 1):
            if monotone and out and out[-1].depth == 0:
                out.append(DepthPoint(k, 0, "monotone"))
                continue
            J = I if k == 1 else power(I, k)
            out.append(self.depth_at(J, k, assume_linear=monotone))
        return out

    def dstab(self, I: MonomialIdeal, plan: Optional[StabilityPlan] = None) -> DstabResult:
        plan = plan or self.plan(I)
        if plan.certified:
            fact = component_factorization(I)
            if fact.verified:
                components = [self._component_dstab(f.variables, f.ideal) for f in fact.factors]
                return DstabResult(max(c.dstab for c in components), "components", components, [], fact)
            logger.warning(
                "Component factorization failed (witness %s); falling back to exact depth", fact.witness
            )
        else:
            fact = None

        seq = self.depth_sequence(I, plan.bound, monotone=plan.polymatroidal)
        last = seq[-1].depth
        k = plan.bound
        while k > 1 and seq[k - 2].depth == last:
            k -= 1
        return DstabResult(k, "exact_depth", [], seq, fact)

    @staticmethod
    def _component_dstab(variables: tuple, J: MonomialIdeal) -> ComponentDstab:
        d_j = J.degree
        spread = analytic_spread(J)
        limit = min(d_j, spread)
        current = J
        for t in range(1, limit + 1):
            if t > 1:
                current = power(J, t)
            if max_ideal_associated(current, assume_linear=True):
                return ComponentDstab(variables, d_j, spread, t)
        raise InvariantViolationError(
            f"no power J^t with t <= {limit} has depth zero for the factor on "
            f"{[v + 1 for v in variables]}"
        )

    # ── bound checks ───────────────────────────────────────────────────

    def check_bounds(
        self,
        I: MonomialIdeal,
        kmax: Optional[int] = None,
        union_check: bool = False,
        exact_depth_checks: bool = True,
    ) -> StabilityReport:
        plan = self.plan(I, mode="certified", kmax=kmax)
        gamma = build_gamma(I)
        chain = self.chain(I, plan)
        astab = self.astab(I, plan, chain)
        dstab = self.dstab(I, plan)
        d, ell, B, n, s = plan.degree, plan.spread, plan.bound, I.n, gamma.s
        m_stable = chain[B - 1].has_maximal

        verdicts: List[Verdict] = []

        stable = all(chain[j] == chain[B - 1] for j in range(B, len(chain)))
        verdicts.append(self._verdict(
            "astab_bound",
            astab.k <= B and stable,
            f"astab={astab.k}, min(d, l)={B}; Ass constant for k={B}..{len(chain)}: {stable}",
        ))
        verdicts.append(self._verdict("dstab_bound", dstab.k <= B, f"dstab={dstab.k}, min(d, l)={B}"))

        profile = cover_profile(I)
        verdicts.append(self._verdict(
            "cover_bound", profile.minimum >= d, f"min |A_i| = {profile.minimum}, d = {d}"
        ))
        verdicts.append(self._verdict(
            "persistence",
            not astab.persistence_breaks,
            f"Ass chain increasing up to k={len(chain)}",
        ))

        if m_stable:
            verdicts.append(Verdict("refined_bound", NA, f"m ∈ Ass(I^{B})"))
        else:
            verdicts.append(self._verdict(
                "refined_bound",
                astab.k <= d - 1 and dstab.k <= d - 1,
                f"m ∉ Ass(I^{B}): astab={astab.k}, dstab={dstab.k}, d-1={d - 1}",
            ))

        verdicts.append(self._verdict("spread_identity", ell == n - s + 1, f"l={ell}, n-s+1={n - s + 1}"))

        sequence = None
        if exact_depth_checks:
            verdicts.append(self._depth_formula(I, d))
            sequence, monotone_verdict = self._depth_monotone(I, B)
            verdicts.append(monotone_verdict)
        verdicts.append(self._limit_depth(I, B, s, m_stable, sequence))

        strict_a, strict_d = astab.k < ell, dstab.k < ell
        verdicts.append(Verdict(
            "strict_spread_bound",
            INFO,
            f"astab < l: {strict_a}; dstab < l: {strict_d}",
        ))

        if d == 4 and not m_stable:
            status = PASS if astab.k == dstab.k else REVIEW
            verdicts.append(Verdict("degree4_equality", status, f"astab={astab.k}, dstab={dstab.k}"))
        else:
            verdicts.append(Verdict("degree4_equality", NA, "needs d = 4 and m ∉ Ass^∞(I)"))

        if union_check:
            verdicts.append(self._restriction_union(I, d, chain, m_stable, plan.polymatroidal))

        report = StabilityReport(I, plan, gamma, astab, dstab, verdicts, sequence)
        if report.conjecture_counterexample:
            logger.info("astab=%d differs from dstab=%d", astab.k, dstab.k)
        return report

    @staticmethod
    def _verdict(name: str, ok: bool, detail: str) -> Verdict:
        return Verdict(name, PASS if ok else FAIL, detail)

    def _depth_formula(self, I: MonomialIdeal, d: int) -> Verdict:
        try:
            res = self.exact(I)
        except ResourceLimitError as exc:
            return Verdict("depth_formula", RESOURCE, exc.message)
        ok = res.depth == d - 1 and res.pd == I.n - d + 1
        detail = f"depth={res.depth} (d-1={d - 1}), pd={res.pd} (n-d+1={I.n - d + 1})"
        if res.discrepancy:
            detail += "; Betti numbers differ between coefficient fields"
        return self._verdict("depth_formula", ok, detail)

    def _depth_monotone(self, I: MonomialIdeal, B: int):
        seq: List[DepthPoint] = []
        try:
            J = I
            for k in range(1, B + 1):
                if k > 1:
                    J = power(I, k)
                seq.append(self.depth_at(J, k))
        except ResourceLimitError as exc:
            done = ", ".join(str(p.depth) for p in seq) or "none"
            return (seq or None), Verdict("depth_monotone", RESOURCE, f"{exc.message}; depths so far: {done}")
        ok = all(seq[j].depth <= seq[j - 1].depth for j in range(1, len(seq)))
        return seq, self._verdict(
            "depth_monotone", ok, "depths " + ", ".join(str(p.depth) for p in seq)
        )

    def _limit_depth(self, I, B, s, m_stable, sequence) -> Verdict:
        if s == 1:
            return self._verdict("limit_depth", m_stable, f"s=1: m ∈ Ass(I^{B}) is {m_stable}")
        if sequence is not None and len(sequence) == B:
            value = sequence[-1].depth
            return self._verdict("limit_depth", value == s - 1, f"depth R/I^{B} = {value}, s-1 = {s - 1}")
        try:
            value = self.exact(power(I, B)).depth
        except ResourceLimitError as exc:
            return Verdict("limit_depth", RESOURCE, exc.message)
        return self._verdict("limit_depth", value == s - 1, f"depth R/I^{B} = {value}, s-1 = {s - 1}")

    def _restriction_union(
        self, I: MonomialIdeal, d: int, chain: List[AssSet], m_stable: bool, linear: bool
    ) -> Verdict:
        if m_stable:
            return Verdict("restriction_union", NA, "m ∈ Ass^∞(I)")
        try:
            if d <= len(chain):
                target = chain[d - 1]
            else:
                target = ass_chain(I, d, linear, self.limits.max_ass_variables, self.limits.workers)[-1]
            lifted = set()
            for i in range(I.n):
                R = restrict(I, i)
                if R.is_unit:
                    continue
                for p in ass_chain(R, d, linear, self.limits.max_ass_variables, self.limits.workers)[-1].primes:
                    lifted.add(PrimeSupport(frozenset(v if v < i else v + 1 for v in p.vars)))
        except ResourceLimitError as exc:
            return Verdict("restriction_union", RESOURCE, exc.message)
        union = sort_primes(lifted)
        return self._verdict(
            "restriction_union",
            union == target.primes,
            f"|Ass(I^{d})| = {len(target)}, |union of restrictions| = {len(union)}",
        )
