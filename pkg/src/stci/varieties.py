"""Exhaustive common-zero enumeration over GF(p)^N.

This is a Groebner-free consistency check: equal radicals force equal zero
sets over every field, so a mismatch over GF(p) refutes a radical equality,
while agreement is only evidence.  Points are scanned in odometer order
(last coordinate fastest) in vectorised chunks; every point found is
re-checked with the exact scalar evaluator.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import BudgetExceeded, ContextError
from .groebner import IdealGens, check_ideal
from .polyring import FieldSpec, PolyRing, Polynomial, poly_eval
from .report import VerificationReport

DEFAULT_BUDGET = 10**7
DEFAULT_PRIMES = (2, 3)
_CHUNK = 1 << 16


@dataclass(frozen=True)
class PointSet:
    p: int
    dim: int
    points: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, pt):
        return tuple(pt) in set(self.points)

    def as_set(self) -> frozenset:
        return frozenset(self.points)

    def to_text(self) -> str:
        return "".join(",".join(map(str, pt)) + "\n" for pt in self.points)

    def dump(self, path):
        Path(path).write_text(self.to_text())

    def reverify(self, I) -> bool:
        """Second pass: every stored point zeroes every generator."""
        ideal = mod_p(check_ideal(I), self.p)
        return all(poly_eval(g, pt) == 0 for pt in self.points for g in ideal.gens)


def mod_p(I: IdealGens, p: int) -> IdealGens:
    fld = FieldSpec.prime(p)
    if I.ring.field == fld:
        return I
    if not I.ring.field.is_rational:
        raise ContextError(f"cannot move generators from {I.ring.field} to {fld}")
    return I.with_field(fld)


def _term_table(f: Polynomial):
    return [(int(c), [(i, e) for i, e in enumerate(m) if e]) for m, c in f.terms]


def _eval_chunk(table, coords: np.ndarray, p: int) -> np.ndarray:
    acc = np.zeros(coords.shape[0], dtype=np.int64)
    for c, factors in table:
        t = np.full(coords.shape[0], c, dtype=np.int64)
        for i, e in factors:
            col = coords[:, i]
            for _ in range(e):
                t = (t * col) % p
        acc = (acc + t) % p
    return acc


def _coords(start: int, stop: int, p: int, n: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, n), dtype=np.int64)
    for k in range(n - 1, -1, -1):
        out[:, k] = idx % p
        idx //= p
    return out


def enumerate_points(I, p: int, budget: int = DEFAULT_BUDGET) -> PointSet:
    """All common zeros of ``I`` in GF(p)^N (N = number of ring variables)."""
    ideal = mod_p(check_ideal(I), p)
    n = ideal.ring.nvars
    total = p**n
    if total > budget:
        raise BudgetExceeded(f"GF({p})^{n} has {total} points, budget is {budget}", required=total)
    if p * p >= 2**62:
        raise ValueError("prime too large for the vectorised evaluator")
    tables = [_term_table(g) for g in ideal.gens]
    found = []
    for start in range(0, total, _CHUNK):
        coords = _coords(start, min(total, start + _CHUNK), p, n)
        for table in tables:
            if not len(coords):
                break
            coords = coords[_eval_chunk(table, coords, p) == 0]
        found.extend(map(tuple, coords.tolist()))
    found.sort()
    return PointSet(p, n, tuple(found))


def same_vanishing_set(A, B, p: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    A = check_ideal(A)
    B = check_ideal(B, A.ring)
    t0 = time.perf_counter()
    pa = enumerate_points(A, p, budget)
    pb = enumerate_points(B, p, budget)
    sa, sb = pa.as_set(), pb.as_set()
    details = {"points_A": len(pa), "points_B": len(pb), "evaluated": p ** A.ring.nvars}
    verdict = sa == sb
    if not verdict:
        only_a = sorted(sa - sb)
        if only_a:
            pt, ideal = only_a[0], B
            details["witness_side"] = "in V(A) only"
        else:
            pt, ideal = sorted(sb - sa)[0], A
            details["witness_side"] = "in V(B) only"
        details["witness"] = list(pt)
        mod = mod_p(ideal, p)
        bad = next(g for g in mod.gens if poly_eval(g, pt) != 0)
        details["violated_generator"] = str(bad)
    return VerificationReport(
        claim=f"V({A.label or 'A'}) == V({B.label or 'B'}) over GF({p})",
        verdict=verdict,
        kind="consistency check",
        field=f"GF({p})",
        stats={"millis": (time.perf_counter() - t0) * 1000},
        details=details,
    )


def parse_ideal_text(text: str, field: FieldSpec | str = "q") -> IdealGens:
    """One polynomial per line; ``# vars: X1 X2 ...`` fixes the variable list.

    Without the header the variables are the names that occur, naturally sorted.
    Blank lines and other ``#`` comments are ignored.
    """
    from .schmitt_vogel import _infer_names

    names = None
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.lower().startswith("vars:"):
                names = body[5:].replace(",", " ").split()
            continue
        lines.append(line)
    if names is None:
        names = _infer_names(lines)
    ring = PolyRing.make(names, field)
    return IdealGens.parse(ring, lines)
