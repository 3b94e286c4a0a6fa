"""Layered systems P_0..P_r and their layer sums q_l.

If P_0 is a single element and every pair p != p'' inside a layer has
(p*p'')^m in (p') for some p' in an earlier layer, then
sqrt((P)) = sqrt((q_0, ..., q_r)) with q_l the sum of p^e(p) over layer l.
``verify_conditions`` checks the hypotheses, ``build_sums`` builds the q_l
and ``check_radical_claim`` certifies the radical equality with Groebner
bases, independently of the hypothesis check.
"""

from __future__ import annotations

import json
import math
import re
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .errors import CapExceeded, ParseError
from .groebner import IdealGens, min_power_in_ideal, radical_equal
from .polyring import PolyRing, Polynomial
from .report import VerificationReport

DEFAULT_POWER_CAP = 16


@dataclass(frozen=True)
class SVSystem:
    layers: tuple[tuple[Polynomial, ...], ...]
    exponents: Mapping[Polynomial, int] = field(default_factory=dict)

    def __post_init__(self):
        layers = tuple(tuple(layer) for layer in self.layers)
        if not layers:
            raise ValueError("an SV system needs at least one layer")
        seen = set()
        for l, layer in enumerate(layers):
            if not layer:
                raise ValueError(f"layer {l} is empty")
            for p in layer:
                if p.is_zero():
                    raise ValueError(f"layer {l} holds the zero polynomial")
                if p in seen:
                    raise ValueError(f"{p} occurs twice; layers must be disjoint")
                seen.add(p)
        ring = layers[0][0].ring
        for layer in layers:
            for p in layer:
                if p.ring.variables != ring.variables or p.ring.field != ring.field:
                    raise ValueError("all layer elements must share one ring")
        exps = dict(self.exponents)
        for p, e in exps.items():
            if p not in seen:
                raise ValueError(f"exponent given for {p}, which is in no layer")
            if not isinstance(e, int) or e < 1:
                raise ValueError(f"exponent of {p} must be a positive integer")
        object.__setattr__(self, "layers", layers)
        object.__setattr__(self, "exponents", exps)

    @property
    def ring(self) -> PolyRing:
        return self.layers[0][0].ring

    def exponent(self, p: Polynomial) -> int:
        return self.exponents.get(p, 1)

    def elements(self) -> list[Polynomial]:
        return [p for layer in self.layers for p in layer]

    def to_dict(self) -> dict:
        d = {"variables": list(self.ring.names), "layers": [[str(p) for p in layer] for layer in self.layers]}
        if self.exponents:
            d["exponents"] = {str(p): e for p, e in self.exponents.items()}
        return d

    @classmethod
    def from_dict(cls, d: Mapping, ring: PolyRing | None = None) -> "SVSystem":
        if "layers" not in d:
            raise ParseError("SV system file: missing field 'layers'")
        texts = d["layers"]
        if ring is None:
            names = d.get("variables") or _infer_names(t for layer in texts for t in layer)
            ring = PolyRing.make(names)
        layers = tuple(tuple(ring.parse(t) for t in layer) for layer in texts)
        exps = {ring.parse(k): int(v) for k, v in (d.get("exponents") or {}).items()}
        return cls(layers, exps)

    @classmethod
    def load(cls, path, ring: PolyRing | None = None) -> "SVSystem":
        try:
            d = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise ParseError(f"SV system file: invalid JSON at line {exc.lineno}: {exc.msg}") from None
        return cls.from_dict(d, ring)


def _infer_names(texts) -> list[str]:
    names = set()
    for t in texts:
        names.update(re.findall(r"[A-Za-z_][A-Za-z_0-9]*", t))
    return sorted(names, key=_natural_key)


def _natural_key(name: str):
    return [int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", name)]


# ---------------------------------------------------------------------------
# condition check
# ---------------------------------------------------------------------------


def monomial_radical_power(p_prime: Polynomial, q: Polynomial) -> int | None:
    """Least m with the monomial ``p_prime`` dividing ``q**m`` (both monomials)."""
    a, b = p_prime.lm, q.lm
    m = 1
    for x, y in zip(a, b):
        if x:
            if not y:
                return None
            m = max(m, math.ceil(x / y))
    return m


def _witness_power(p: Polynomial, pp: Polynomial, cand: Polynomial, power_cap: int):
    """(m, exhausted) for (p*pp)^m in (cand); m is None if not found."""
    if p.is_monomial() and pp.is_monomial() and cand.is_monomial():
        return monomial_radical_power(cand, p * pp), False
    prod = p * pp
    ideal = IdealGens(cand.ring, (cand,), str(cand))
    m = min_power_in_ideal(prod, ideal, power_cap)
    return m, m is None


def verify_conditions(S: SVSystem, power_cap: int = DEFAULT_POWER_CAP) -> VerificationReport:
    """Check the singleton first layer and the pairwise power condition.

    Witnesses are searched over earlier layers in increasing order and
    elements in canonical order.  Monomial triples are decided exactly; for
    general polynomials the power search stops at ``power_cap`` and an
    unwitnessed pair then makes the verdict inconclusive rather than false.
    """
    t0 = time.perf_counter()
    rows = []
    details: dict = {"pairs": 0}
    if len(S.layers[0]) != 1:
        details["violation"] = f"first layer has {len(S.layers[0])} elements, expected exactly one"
        return VerificationReport("layered system hypotheses", False, field=str(S.ring.field),
                                  details=details)
    verdict: bool | None = True
    for l in range(1, len(S.layers)):
        layer = S.layers[l]
        for a in range(len(layer)):
            for b in range(a + 1, len(layer)):
                p, pp = layer[a], layer[b]
                details["pairs"] += 1
                row = {"generator": f"({p})*({pp})", "layer": l, "result": False, "power": None}
                exhausted = False
                for lp in range(l):
                    for cand in S.layers[lp]:
                        m, ex = _witness_power(p, pp, cand, power_cap)
                        exhausted |= ex
                        if m is not None:
                            row.update(result=True, power=m, witness={"layer": lp, "element": str(cand)})
                            break
                    if row["result"]:
                        break
                if not row["result"]:
                    if exhausted:
                        row["result"] = None
                        if verdict is True:
                            verdict = None
                    else:
                        verdict = False
                        details.setdefault("witness", row["generator"])
                rows.append(row)
    return VerificationReport(
        claim="layered system hypotheses",
        verdict=verdict,
        kind="certificate",
        field=str(S.ring.field),
        order=str(S.ring.order),
        per_generator=rows,
        stats={"millis": (time.perf_counter() - t0) * 1000},
        details=details,
    )


def build_sums(S: SVSystem) -> list[Polynomial]:
    """q_l = sum of p**e(p) over layer l."""
    ring = S.ring
    out = []
    for layer in S.layers:
        q = ring.zero()
        for p in layer:
            q = q + p ** S.exponent(p)
        out.append(q)
    return out


def check_radical_claim(S: SVSystem, order=None, **caps) -> VerificationReport:
    """sqrt((P)) == sqrt((q_0..q_r)), certified by Groebner computations."""
    ring = S.ring
    P = IdealGens(ring, tuple(S.elements()), "P")
    qs = [q for q in build_sums(S) if not q.is_zero()]
    Q = IdealGens(ring, tuple(qs), "q")
    try:
        return radical_equal(P, Q, order, claim="rad(P) == rad(q_0..q_r)", **caps)
    except CapExceeded as exc:
        return VerificationReport("rad(P) == rad(q_0..q_r)", None, field=str(ring.field),
                                  stats=exc.stats, details={"error": str(exc)})


def from_layers(layers: Sequence[Sequence[Polynomial]], exponents: Mapping | None = None) -> SVSystem:
    return SVSystem(tuple(tuple(l) for l in layers), dict(exponents or {}))
