"""Barred matrices, their ideal J and the equation systems cutting J out.

A barred matrix is a row of big blocks; each big block is a row of small
scroll blocks.  A small block is given by its entry chain ``e_1..e_{c+1}``
(global variable indices): column ``j`` is ``(e_j, e_{j+1})``.  A matrix whose
big blocks each hold a single small block is *simple*.

Indices ``i`` (big block) and ``j`` (column) are 1-based in :func:`scroll_F`
to match the usual ``F^i_j`` notation; everything else is 0-based.

For generalized (non-simple) matrices the ideal J is taken to be all 2-minors
of each big block together with the upper-row x lower-row products between
big blocks.  This rule is inferred from worked examples rather than from a
general definition.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import DomainError, ParseError, ValidationError
from .groebner import IdealGens
from .polyring import DEGREVLEX, QQ, FieldSpec, MonomialOrder, PolyRing, Polynomial, VariableSet
from .polyring import binomial_coefficient
from .report import VerificationReport


@dataclass(frozen=True)
class SmallBlock:
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    @property
    def width(self) -> int:
        return len(self.entries) - 1

    @property
    def top(self) -> tuple[int, ...]:
        return self.entries[:-1]

    @property
    def bottom(self) -> tuple[int, ...]:
        return self.entries[1:]


@dataclass(frozen=True)
class BigBlock:
    small_blocks: tuple[SmallBlock, ...]

    def __post_init__(self):
        blocks = tuple(b if isinstance(b, SmallBlock) else SmallBlock(tuple(b)) for b in self.small_blocks)
        object.__setattr__(self, "small_blocks", blocks)

    @property
    def width(self) -> int:
        return sum(b.width for b in self.small_blocks)

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(e for b in self.small_blocks for e in b.top)

    @property
    def bottom(self) -> tuple[int, ...]:
        return tuple(e for b in self.small_blocks for e in b.bottom)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(e for b in self.small_blocks for e in b.entries)

    @property
    def first(self) -> int:
        """Upper-left corner entry."""
        return self.small_blocks[0].entries[0]

    @property
    def last(self) -> int:
        """Lower-right corner entry."""
        return self.small_blocks[-1].entries[-1]


@dataclass(frozen=True)
class BarredMatrix:
    big_blocks: tuple[BigBlock, ...]
    variables: VariableSet

    def __post_init__(self):
        blocks = tuple(b if isinstance(b, BigBlock) else BigBlock(tuple(b)) for b in self.big_blocks)
        object.__setattr__(self, "big_blocks", blocks)
        if not isinstance(self.variables, VariableSet):
            object.__setattr__(self, "variables", VariableSet(tuple(self.variables)))

    @classmethod
    def from_lists(cls, big_blocks: Sequence, names: Sequence[str] | None = None) -> "BarredMatrix":
        """Build from nested index lists; variables default to X1..XN."""
        if names is None:
            top = max((e for bb in big_blocks for sb in bb for e in sb), default=0)
            names = VariableSet.numbered(top + 1).names
        return cls(tuple(BigBlock(tuple(SmallBlock(tuple(sb)) for sb in bb)) for bb in big_blocks),
                   VariableSet(tuple(names)))

    @classmethod
    def simple(cls, chains: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> "BarredMatrix":
        """One small block per big block."""
        return cls.from_lists([[c] for c in chains], names)

    @property
    def r(self) -> int:
        return len(self.big_blocks)

    @property
    def widths(self) -> list[int]:
        return [b.width for b in self.big_blocks]

    @property
    def is_simple(self) -> bool:
        return all(len(b.small_blocks) == 1 for b in self.big_blocks)

    @property
    def expected_height(self) -> int:
        return sum(self.widths) - 1

    def ring(self, field: FieldSpec | str = QQ, order: MonomialOrder | str = DEGREVLEX) -> PolyRing:
        return PolyRing.make(self.variables.names, field, order)

    def as_lists(self) -> list:
        return [[list(sb.entries) for sb in bb.small_blocks] for bb in self.big_blocks]

    def to_dict(self) -> dict:
        return {"variables": list(self.variables.names), "big_blocks": self.as_lists()}

    def to_json(self, **kw) -> str:
        kw.setdefault("indent", 2)
        return json.dumps(self.to_dict(), **kw)

    def dump(self, path):
        Path(path).write_text(self.to_json() + "\n")

    @classmethod
    def from_dict(cls, d: dict) -> "BarredMatrix":
        if not isinstance(d, dict):
            raise ParseError("matrix file must hold a JSON object")
        for key in ("variables", "big_blocks"):
            if key not in d:
                raise ParseError(f"matrix file: missing field {key!r}")
        names = d["variables"]
        if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
            raise ParseError("matrix file: 'variables' must be a list of strings")
        lookup = {n: k for k, n in enumerate(names)}
        blocks = d["big_blocks"]
        if not isinstance(blocks, list):
            raise ParseError("matrix file: 'big_blocks' must be a list")
        out = []
        for i, bb in enumerate(blocks):
            if not isinstance(bb, list):
                raise ParseError(f"matrix file: big_blocks[{i}] must be a list of small blocks")
            sbs = []
            for s, sb in enumerate(bb):
                if not isinstance(sb, list):
                    raise ParseError(f"matrix file: big_blocks[{i}][{s}] must be a list of entries")
                idx = []
                for k, e in enumerate(sb):
                    where = f"big_blocks[{i}][{s}][{k}]"
                    if isinstance(e, str):
                        if e not in lookup:
                            raise ParseError(f"matrix file: {where}: unknown variable {e!r}")
                        idx.append(lookup[e])
                    elif isinstance(e, int) and not isinstance(e, bool):
                        idx.append(e)
                    else:
                        raise ParseError(f"matrix file: {where}: expected an index or a variable name")
                sbs.append(idx)
            out.append(sbs)
        try:
            variables = VariableSet(tuple(names))
        except ValueError as exc:
            raise ParseError(f"matrix file: {exc}") from None
        return cls(tuple(BigBlock(tuple(SmallBlock(tuple(sb)) for sb in bb)) for bb in out), variables)

    @classmethod
    def from_json(cls, text: str) -> "BarredMatrix":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"matrix file: invalid JSON at line {exc.lineno}: {exc.msg}") from None
        return cls.from_dict(d)

    @classmethod
    def load(cls, path) -> "BarredMatrix":
        return cls.from_json(Path(path).read_text())

    def display(self) -> str:
        """Two-row picture with ``|`` between small and ``||`` between big blocks."""
        names = self.variables.names
        rows = [[], []]
        for bi, bb in enumerate(self.big_blocks):
            if bi:
                rows[0].append("||")
                rows[1].append("||")
            for si, sb in enumerate(bb.small_blocks):
                if si:
                    rows[0].append("|")
                    rows[1].append("|")
                for t, b in zip(sb.top, sb.bottom):
                    w = max(len(names[t]), len(names[b]))
                    rows[0].append(names[t].ljust(w))
                    rows[1].append(names[b].ljust(w))
        return "\n".join(" ".join(r).rstrip() for r in rows)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _violations(M: BarredMatrix):
    n = M.variables.count
    if not M.big_blocks:
        yield "matrix has no big blocks"
        return
    for i, bb in enumerate(M.big_blocks):
        if not bb.small_blocks:
            yield f"big block {i + 1} has no small blocks"
            return
        for s, sb in enumerate(bb.small_blocks):
            if sb.width < 1:
                yield f"small block {s + 1} of big block {i + 1} needs at least 2 entries"
                return
            bad = [e for e in sb.entries if not 0 <= e < n]
            if bad:
                yield f"small block {s + 1} of big block {i + 1}: index {bad[0]} out of range 0..{n - 1}"
                return
            if len(set(sb.entries)) != len(sb.entries):
                yield f"small block {s + 1} of big block {i + 1} repeats an entry"
                return
        seen: dict[int, int] = {}
        for s, sb in enumerate(bb.small_blocks):
            for e in sb.entries:
                if e in seen:
                    yield (f"big block {i + 1}: small blocks {seen[e] + 1} and {s + 1} share "
                           f"{M.variables.names[e]}")
                    return
                seen[e] = s
    owner: dict[int, list[int]] = {}
    for i, bb in enumerate(M.big_blocks):
        for e in set(bb.entries):
            owner.setdefault(e, []).append(i)
    for e in sorted(owner):
        blocks = owner[e]
        if len(blocks) == 1:
            continue
        name = M.variables.names[e]
        if len(blocks) > 2:
            yield f"{name} occurs in big blocks {[b + 1 for b in blocks]}"
            return
        i, k = blocks
        if not (M.big_blocks[i].last == e and M.big_blocks[k].first == e):
            yield (f"{name} is shared by big blocks {i + 1} and {k + 1} but is not the lower-right "
                   f"corner of {i + 1} and the upper-left corner of {k + 1}")
            return


def validate(M: BarredMatrix) -> VerificationReport:
    problems = list(_violations(M))
    return VerificationReport(
        claim="barred matrix invariants",
        verdict=not problems,
        kind="validation",
        details={"violation": problems[0]} if problems else {"simple": M.is_simple, "widths": M.widths},
    )


def _require_valid(M: BarredMatrix):
    report = validate(M)
    if not report.verdict:
        raise ValidationError(f"invalid barred matrix: {report.details['violation']}", report)


def _require_simple(M: BarredMatrix, what: str):
    _require_valid(M)
    if not M.is_simple:
        raise DomainError(f"{what} is defined for simple barred matrices only")


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def _ring(M, ring):
    if ring is None:
        return M.ring()
    if ring.names != M.variables.names:
        raise DomainError("ring variables do not match the matrix")
    return ring


def _mono(ring: PolyRing, *idx: int, coeff=1) -> Polynomial:
    m = [0] * ring.nvars
    for i in idx:
        m[i] += 1
    return ring.monomial(tuple(m), coeff)


def block_minors(ring: PolyRing, bb: BigBlock) -> list[Polynomial]:
    top, bot = bb.top, bb.bottom
    out = []
    for j in range(len(top)):
        for jj in range(j + 1, len(top)):
            f = _mono(ring, top[j], bot[jj]) - _mono(ring, top[jj], bot[j])
            if not f.is_zero():
                out.append(f)
    return out


def minors(M: BarredMatrix, ring: PolyRing | None = None) -> IdealGens:
    """All 2-minors inside each big block, in (i, j, j') order."""
    _require_valid(M)
    ring = _ring(M, ring)
    gens = [f for bb in M.big_blocks for f in block_minors(ring, bb)]
    return IdealGens(ring, tuple(gens), "minors")


def cross_products(M: BarredMatrix, ring: PolyRing | None = None) -> IdealGens:
    """Upper-row entry of a big block times lower-row entry of a later one."""
    _require_valid(M)
    ring = _ring(M, ring)
    seen = set()
    gens = []
    for i, bi in enumerate(M.big_blocks):
        for bk in M.big_blocks[i + 1:]:
            for t in bi.top:
                for b in bk.bottom:
                    f = _mono(ring, t, b)
                    if f not in seen:
                        seen.add(f)
                        gens.append(f)
    return IdealGens(ring, tuple(gens), "cross products")


def ideal_J(M: BarredMatrix, ring: PolyRing | None = None) -> IdealGens:
    ring = _ring(M, ring)
    gens = minors(M, ring).gens + cross_products(M, ring).gens
    return IdealGens(ring, gens, "J")


def scroll_F(M: BarredMatrix, i: int, j: int, ring: PolyRing | None = None) -> Polynomial:
    """Alternating binomial sum ``F^i_j`` of big block ``i`` (both 1-based).

    With ``X_1..X_{c+1}`` the block's entry chain::

        F_j = sum_{k=0}^{j} (-1)^k C(j,k) X_{j+2}^{j-k} X_{k+1} X_{j+1}^k
    """
    _require_simple(M, "scroll_F")
    ring = _ring(M, ring)
    if not 1 <= i <= M.r:
        raise DomainError(f"big block index {i} outside 1..{M.r}")
    chain = M.big_blocks[i - 1].entries
    c = len(chain) - 1
    if not 1 <= j <= c - 1:
        raise DomainError(f"F^{i}_{j} needs 1 <= j <= {c - 1} (block width {c})")

    def X(k):
        return chain[k - 1]

    n = ring.nvars
    terms = {}
    for k in range(j + 1):
        m = [0] * n
        m[X(j + 2)] += j - k
        m[X(k + 1)] += 1
        m[X(j + 1)] += k
        m = tuple(m)
        terms[m] = terms.get(m, 0) + (-1) ** k * binomial_coefficient(j, k)
    return ring.from_dict(terms)


def corner_sums(M: BarredMatrix, ring: PolyRing | None = None) -> list[Polynomial]:
    """``G_k = sum_i first(i) * last(i+k)`` for k = 1..r-1."""
    _require_simple(M, "corner_sums")
    ring = _ring(M, ring)
    B = M.big_blocks
    out = []
    for k in range(1, M.r):
        g = ring.zero()
        for i in range(M.r - k):
            g = g + _mono(ring, B[i].first, B[i + k].last)
        out.append(g)
    return out


def scroll_Fs(M: BarredMatrix, ring: PolyRing | None = None) -> list[Polynomial]:
    ring = _ring(M, ring)
    return [scroll_F(M, i, j, ring) for i in range(1, M.r + 1) for j in range(1, M.widths[i - 1])]


def stci_system(M: BarredMatrix, ring: PolyRing | None = None) -> IdealGens:
    """The F's of every block followed by G_1..G_{r-1}."""
    _require_simple(M, "stci_system")
    ring = _ring(M, ring)
    gens = scroll_Fs(M, ring) + corner_sums(M, ring)
    if len(gens) != M.expected_height:
        raise AssertionError(f"system has {len(gens)} polynomials, expected {M.expected_height}")
    return IdealGens(ring, tuple(gens), "stci")


def sv_partition(M: BarredMatrix, ring: PolyRing | None = None) -> list[list[Polynomial]]:
    """Layers P_0..P_{r-2}: P_k holds the summands of G_{r-1-k}."""
    _require_simple(M, "sv_partition")
    if M.r < 2:
        raise DomainError("sv_partition needs at least two big blocks")
    ring = _ring(M, ring)
    B = M.big_blocks
    layers = []
    for k in range(M.r - 1):
        d = M.r - 1 - k
        layers.append([_mono(ring, B[i].first, B[i + d].last) for i in range(M.r - d)])
    return layers


# ---------------------------------------------------------------------------
# random instances
# ---------------------------------------------------------------------------


def random_simple_matrix(rng: random.Random, min_blocks: int = 1, max_blocks: int = 4, max_width: int = 3,
                         share_prob: float = 0.5) -> BarredMatrix:
    """Random valid simple barred matrix with fresh variables and random corner sharing."""
    r = rng.randint(min_blocks, max_blocks)
    widths = [rng.randint(1, max_width) for _ in range(r)]
    claimed: dict[int, int] = {}  # later block -> earlier block sharing its corner
    for i in range(r - 1):
        if rng.random() < share_prob:
            free = [k for k in range(i + 1, r) if k not in claimed]
            if free:
                claimed[rng.choice(free)] = i
    chains: list[list[int]] = []
    nxt = 0
    for k in range(r):
        chain = []
        if k in claimed:
            chain.append(chains[claimed[k]][-1])
        while len(chain) < widths[k] + 1:
            chain.append(nxt)
            nxt += 1
        chains.append(chain)
    return BarredMatrix.simple(chains, VariableSet.numbered(nxt).names)


def scroll_block(c: int) -> BarredMatrix:
    """A single scroll block of width ``c`` in X1..X_{c+1}."""
    if c < 1:
        raise DomainError("width must be positive")
    return BarredMatrix.simple([list(range(c + 1))])
