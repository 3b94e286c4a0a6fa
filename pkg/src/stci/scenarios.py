"""Named verification scenarios and the matrix-file pipeline.

Each check returns a :class:`VerificationReport`; a scenario is an ordered
list of checks.  Cap and budget refusals become inconclusive reports instead
of propagating, so one slow check never hides the others.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from . import fixtures
from .errors import BudgetExceeded, CapExceeded
from .groebner import (DEFAULT_MAX_DEGREE, DEFAULT_MAX_SPAIRS, DEFAULT_PRECHECK_PRIME, IdealGens,
                       certify_radical_equal, ideal_contains, ideal_power_contained, min_power_in_ideal,
                       radical_equal)
from .monomial_curve import binomial_degrees, binomial_in_toric, homogeneity_check
from .polyring import DEGREVLEX, QQ, FieldSpec, MonomialOrder
from .report import VerificationReport, combine_verdicts
from .schmitt_vogel import DEFAULT_POWER_CAP, SVSystem, check_radical_claim, from_layers, verify_conditions
from .scroll import (BarredMatrix, block_minors, corner_sums, ideal_J, scroll_block, scroll_F,
                     stci_system, sv_partition, validate)
from .varieties import DEFAULT_BUDGET, DEFAULT_PRIMES, same_vanishing_set

CHECKS = ("validate", "generators", "system", "membership", "radical-equal", "points", "min-power",
          "power-contained", "certificates", "toric", "sv")

EXAMPLES = {
    "ex1": ("validate", "generators", "system", "membership"),
    "ex3": ("system", "radical-equal", "points", "min-power", "sv"),
    "ex4": ("validate", "generators", "system", "power-contained", "radical-equal", "points", "toric"),
    "ex4prime": ("validate", "generators", "certificates", "radical-equal", "points"),
    "ex5": ("validate", "generators", "radical-equal", "points"),
    "scroll-c": ("validate", "system", "radical-equal", "points"),
}

EXPECTED_J_SIZE = {"ex1": 28, "ex3": 28, "ex4": 6, "ex4prime": 3, "ex5": 6}

EX4PRIME_IDENTITIES = (
    ("(X1*X5)^2", "X1*(X5 - X2*X4)*P1 + X1*X2^2*P2"),
    ("(X3*X5)^2", "X3*(X5 + X2*X4)*P2 - X3*X4^2*P1"),
)

EX3_LEAST_POWER = 13


@dataclass
class RunConfig:
    field: FieldSpec = QQ
    order: MonomialOrder = DEGREVLEX
    max_spairs: int = DEFAULT_MAX_SPAIRS
    max_degree: int = DEFAULT_MAX_DEGREE
    power_cap: int = DEFAULT_POWER_CAP
    product_cap: int = 10_000
    points_budget: int = DEFAULT_BUDGET
    primes: tuple[int, ...] = DEFAULT_PRIMES
    precheck_prime: int | None = DEFAULT_PRECHECK_PRIME
    checks: tuple[str, ...] | None = None
    seed: int = 0
    c: int = 3

    def __post_init__(self):
        for name in ("max_spairs", "max_degree", "power_cap", "product_cap", "points_budget", "c"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.checks is not None:
            unknown = [c for c in self.checks if c not in CHECKS]
            if unknown:
                raise ValueError(f"unknown check(s) {unknown}; choose from {', '.join(CHECKS)}")

    @property
    def caps(self) -> dict:
        return {"max_spairs": self.max_spairs, "max_degree": self.max_degree}

    def wants(self, check: str, defaults) -> bool:
        return check in (self.checks if self.checks is not None else defaults)


@dataclass
class Bundle:
    scenario: str
    reports: list[VerificationReport] = field(default_factory=list)

    @property
    def verdict(self) -> bool | None:
        return combine_verdicts(r.verdict for r in self.reports)

    @property
    def exit_status(self) -> int:
        verdicts = [r.verdict for r in self.reports]
        if any(v is False for v in verdicts):
            return 1
        if any(v is None for v in verdicts):
            return 2
        return 0

    def to_dict(self) -> dict:
        return {"schema": "stci.bundle/1", "scenario": self.scenario, "verdict": self.verdict,
                "exit_status": self.exit_status, "reports": [r.to_dict() for r in self.reports]}


def _guard(claim: str, fn: Callable[[], VerificationReport]) -> VerificationReport:
    t0 = time.perf_counter()
    try:
        return fn()
    except (CapExceeded, BudgetExceeded) as exc:
        stats = getattr(exc, "stats", {}) or {}
        details = {"error": str(exc)}
        if getattr(exc, "required", None) is not None:
            details["required"] = exc.required
        return VerificationReport(claim, None, stats={**stats, "millis": (time.perf_counter() - t0) * 1000},
                                  details=details)


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------


def check_generators(J: IdealGens, expected: int | None, height: int) -> VerificationReport:
    rows = [{"generator": str(g), "result": True, "power": None} for g in J.gens]
    verdict = True if expected is None else len(J) == expected
    details = {"count": len(J), "expected_height": height}
    if expected is not None:
        details["expected_count"] = expected
    return VerificationReport(f"ideal J has {expected if expected is not None else len(J)} generators",
                              verdict, kind="validation", field=str(J.ring.field), order=str(J.ring.order),
                              per_generator=rows, details=details)


def check_system(S: IdealGens, M: BarredMatrix) -> VerificationReport:
    rows = [{"generator": str(g), "result": True, "power": None} for g in S.gens]
    verdict = len(S) == M.expected_height
    return VerificationReport(f"system has sum(c_i) - 1 = {M.expected_height} polynomials", verdict,
                              kind="validation", field=str(S.ring.field), order=str(S.ring.order),
                              per_generator=rows, details={"count": len(S)})


def check_membership(M: BarredMatrix, ring, config: RunConfig) -> VerificationReport:
    """Each F^i_j lies in the minors of block i, each G_k and every F in J."""
    t0 = time.perf_counter()
    J = ideal_J(M, ring)
    rows = []
    for i, bb in enumerate(M.big_blocks, start=1):
        Ii = IdealGens(ring, tuple(block_minors(ring, bb)), f"I_{i}")
        for j in range(1, bb.width):
            F = scroll_F(M, i, j, ring)
            ok_block = ideal_contains(Ii, F, **config.caps)
            ok_J = ideal_contains(J, F, **config.caps)
            rows.append({"generator": f"F^{i}_{j} = {F}", "result": ok_block and ok_J, "power": 1,
                         "in_block_minors": ok_block, "in_J": ok_J})
    for k, G in enumerate(corner_sums(M, ring), start=1):
        rows.append({"generator": f"G_{k} = {G}", "result": ideal_contains(J, G, **config.caps), "power": 1})
    return VerificationReport("system polynomials lie in J", combine_verdicts(r["result"] for r in rows),
                              field=str(ring.field), order=str(ring.order), per_generator=rows,
                              stats={"millis": (time.perf_counter() - t0) * 1000})


def check_radical_equal(A: IdealGens, B: IdealGens, config: RunConfig, claim: str) -> VerificationReport:
    if config.field.is_rational:
        return certify_radical_equal(A, B, prime=config.precheck_prime, exact=True, order=config.order,
                                     claim=claim, **config.caps)
    A, B = A.with_field(config.field), B.with_field(config.field)
    rep = radical_equal(A, B, config.order, claim=claim, **config.caps)
    rep.details["certified_by"] = rep.field
    return rep


def check_points(A: IdealGens, B: IdealGens, config: RunConfig) -> list[VerificationReport]:
    out = []
    for p in config.primes:
        out.append(_guard(f"V(A) == V(B) over GF({p})",
                          lambda p=p: same_vanishing_set(A, B, p, config.points_budget)))
    return out


def check_min_powers(J: IdealGens, S: IdealGens, bound: int, config: RunConfig) -> VerificationReport:
    t0 = time.perf_counter()
    rows = []
    for g in J.gens:
        e = min_power_in_ideal(g, S, bound, config.order, **config.caps)
        rows.append({"generator": str(g), "result": e is not None, "power": e})
    powers = [r["power"] for r in rows if r["power"] is not None]
    return VerificationReport(
        f"every generator of J has a power <= {bound} in the system ideal",
        combine_verdicts(r["result"] for r in rows), field=str(J.ring.field), order=str(config.order),
        per_generator=rows, stats={"millis": (time.perf_counter() - t0) * 1000},
        details={"max_power": max(powers, default=None)})


def check_certificates(M: BarredMatrix, P: IdealGens) -> VerificationReport:
    ring = P.ring
    subs = {"P1": f"({P.gens[0]})", "P2": f"({P.gens[1]})"}
    rows = []
    for lhs, rhs in EX4PRIME_IDENTITIES:
        expanded = rhs
        for k, v in subs.items():
            expanded = expanded.replace(k, v)
        ok = ring.parse(lhs) == ring.parse(expanded)
        rows.append({"generator": f"{lhs} = {rhs}", "result": ok, "power": 2})
    return VerificationReport("certificate identities hold exactly", combine_verdicts(r["result"] for r in rows),
                              field=str(ring.field), per_generator=rows)


def check_toric(fx=None) -> VerificationReport:
    fx = fx or fixtures.load_curve()
    P = fx.parametrization
    rows = []
    for name, b in fx.binomials:
        ok_t = binomial_in_toric(P, b)
        ok_h = homogeneity_check(P, b)
        rows.append({"generator": f"{name} = {b}", "result": ok_t and ok_h, "power": None,
                     "toric": ok_t, "homogeneous": ok_h, "degrees": binomial_degrees(P, b)})
    return VerificationReport("binomials lie in the toric ideal of the curve",
                              combine_verdicts(r["result"] for r in rows), kind="certificate",
                              field="ZZ (exponents)", per_generator=rows)


def check_sv(S: SVSystem, config: RunConfig) -> list[VerificationReport]:
    cond = verify_conditions(S, config.power_cap)
    claim = _guard("rad(P) == rad(q_0..q_r)", lambda: check_radical_claim(S, config.order, **config.caps))
    return [cond, claim]


# ---------------------------------------------------------------------------
# scenarios
# ---------------------------------------------------------------------------


def _matrix_checks(M: BarredMatrix, config: RunConfig, defaults, bundle: Bundle, expected_J=None,
                   system: IdealGens | None = None):
    """Shared pipeline: validate, J, system, membership, radical equality, points."""
    rep = validate(M)
    if config.wants("validate", defaults) or not rep.verdict:
        bundle.reports.append(rep)
    if not rep.verdict:
        return None, None
    ring = M.ring(config.field, config.order)
    J = ideal_J(M, ring)
    if config.wants("generators", defaults):
        bundle.reports.append(check_generators(J, expected_J, M.expected_height))
    if system is None and M.is_simple:
        system = stci_system(M, ring)
        if config.wants("system", defaults):
            bundle.reports.append(check_system(system, M))
    if system is not None:
        system = system.to_ring(ring)
    if M.is_simple and config.wants("membership", defaults):
        bundle.reports.append(_guard("system polynomials lie in J", lambda: check_membership(M, ring, config)))
    if system is not None and config.wants("radical-equal", defaults):
        claim = f"rad({system.label or 'system'}) == J"
        bundle.reports.append(_guard(claim, lambda: check_radical_equal(J, system, config, claim)))
    if system is not None and config.wants("points", defaults):
        bundle.reports.extend(check_points(J, system, config))
    return J, system


def run_example(name: str, config: RunConfig | None = None) -> Bundle:
    config = config or RunConfig()
    if name not in EXAMPLES:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")
    defaults = EXAMPLES[name]
    bundle = Bundle(name)
    if name == "scroll-c":
        M = scroll_block(config.c)
        bundle.scenario = f"scroll-c (c={config.c})"
        _matrix_checks(M, config, defaults, bundle)
        return bundle
    if name in ("ex1", "ex3"):
        M = fixtures.load_matrix("ex1")
        J, S = _matrix_checks(M, config, defaults, bundle, EXPECTED_J_SIZE[name])
        if config.wants("min-power", defaults):
            bundle.reports.append(_guard("min powers", lambda: check_min_powers(J, S, EX3_LEAST_POWER, config)))
        if config.wants("sv", defaults):
            bundle.reports.extend(check_sv(from_layers(sv_partition(M, J.ring)), config))
        return bundle
    if name == "ex4":
        M = fixtures.load_matrix("ex4")
        J, S = _matrix_checks(M, config, defaults, bundle, EXPECTED_J_SIZE[name])
        if config.wants("power-contained", defaults):
            bundle.reports.append(_guard("J^2 in (F1, G1, G2)", lambda: ideal_power_contained(
                J, S, 2, config.product_cap, config.order, claim="J^2 in (F1, G1, G2)", **config.caps)))
        if config.wants("toric", defaults):
            bundle.reports.append(check_toric())
        if config.wants("sv", defaults):
            bundle.reports.extend(check_sv(from_layers(sv_partition(M, J.ring)), config))
        return bundle
    # ex4prime, ex5: generalized matrices with hand-built systems
    M = fixtures.load_matrix(name)
    system = fixtures.load_system(name, config.field)
    J, S = _matrix_checks(M, config, defaults, bundle, EXPECTED_J_SIZE[name], system)
    if name == "ex4prime" and config.wants("certificates", defaults):
        bundle.reports.insert(len(bundle.reports) - _tail(config, defaults), check_certificates(M, S))
    return bundle


def _tail(config, defaults) -> int:
    # keep the certificate report before the radical/points reports
    n = 0
    if config.wants("radical-equal", defaults):
        n += 1
    if config.wants("points", defaults):
        n += len(config.primes)
    return n


def run_file(M: BarredMatrix, config: RunConfig | None = None, name: str = "file") -> Bundle:
    config = config or RunConfig()
    defaults = ("validate", "generators", "system", "radical-equal", "points")
    bundle = Bundle(name)
    _matrix_checks(M, config, defaults, bundle)
    return bundle


def run_sv(S: SVSystem, config: RunConfig | None = None, name: str = "sv") -> Bundle:
    config = config or RunConfig()
    return Bundle(name, check_sv(S, config))
