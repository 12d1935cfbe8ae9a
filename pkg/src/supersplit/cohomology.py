"""Dimensions of sheaf cohomology on P^m and the certificates built from them.

All functions are closed forms (Bott's formula and its specialisations); the
test suite checks them against monomial-counting and Euler-sequence oracles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import List, Sequence, Tuple


def binom(n: int, r: int) -> int:
    """Binomial coefficient, 0 outside 0 <= r <= n."""
    if n < 0 or r < 0 or r > n:
        return 0
    return comb(n, r)


def h_line(m: int, q: int, k: int) -> int:
    """dim H^q(P^m, O(k))."""
    if m < 1 or q < 0:
        raise ValueError("need m >= 1 and q >= 0")
    if q == 0:
        return binom(m + k, m) if k >= 0 else 0
    if q == m:
        return binom(-k - 1, m) if k <= -m - 1 else 0
    return 0


def h_omega(m: int, p: int, q: int, k: int) -> int:
    """dim H^q(P^m, Omega^p(k)) by Bott's formula."""
    if not 0 <= p <= m:
        raise ValueError(f"need 0 <= p <= m, got p={p}, m={m}")
    if q < 0 or q > m:
        return 0
    total = 0
    if q == 0 and k > p:
        total += binom(k + m - p, k) * binom(k - 1, p)
    if q == p and k == 0:
        total += 1
    if q == m and k < p - m:
        total += binom(p - k, -k) * binom(-k - 1, m - p)
    return total


def h_tangent(m: int, q: int, k: int) -> int:
    """dim H^q(P^m, T(k)), using T = Omega^{m-1}(m+1) (and T = O(2) on P^1)."""
    if m < 1:
        raise ValueError("need m >= 1")
    if m == 1:
        return h_line(1, q, k + 2)
    return h_omega(m, m - 1, q, k + m + 1)


@dataclass(frozen=True)
class ObstructionSummand:
    index_set: Tuple[int, ...]  # 0-based odd indices
    twist: int

    def to_json(self):
        return {"I": [i + 1 for i in self.index_set], "twist": self.twist}


def obstruction_decomposition(m: int, b: Sequence[int], k: int) -> List[ObstructionSummand]:
    """Summands T(-b_I) of the degree-k obstruction sheaf T ⊗ ∧^k(⊕ O(-b_j))."""
    n = len(b)
    if k % 2 or not 2 <= k <= n:
        raise ValueError(f"degree must be even with 2 <= k <= n={n}, got {k}")
    return [ObstructionSummand(I, -sum(b[i] for i in I)) for I in combinations(range(n), k)]


@dataclass(frozen=True)
class SummandRecord:
    degree: int
    index_set: Tuple[int, ...]
    h0_ambient: int
    h1_twisted_ambient: int

    @property
    def vanishes(self) -> bool:
        return self.h0_ambient == 0 and self.h1_twisted_ambient == 0

    def to_json(self):
        return {
            "k": self.degree,
            "I": [i + 1 for i in self.index_set],
            "h0_ambient": self.h0_ambient,
            "h1_twisted_ambient": self.h1_twisted_ambient,
            "vanishes": self.vanishes,
        }


@dataclass(frozen=True)
class NormalityCertificate:
    m: int
    b: Tuple[int, ...]
    d: int
    records: Tuple[SummandRecord, ...] = field(default_factory=tuple)

    @property
    def overall(self) -> str:
        return "Normal" if all(r.vanishes for r in self.records) else "NotProvable"

    @property
    def is_normal(self) -> bool:
        return self.overall == "Normal"

    def failing(self) -> List[SummandRecord]:
        return [r for r in self.records if not r.vanishes]

    def to_json(self):
        return {
            "m": self.m,
            "b": list(self.b),
            "d": self.d,
            "overall": self.overall,
            "summands": [r.to_json() for r in self.records],
        }


def normality_certificate(m: int, b: Sequence[int], d: int) -> NormalityCertificate:
    """Check the vanishing chain H^0(T(-b_I)) = 0 = H^1(T(-b_I - d)) on every summand.

    A failure only means the sufficient criterion does not apply
    (``NotProvable``), not that the embedding is abnormal.
    """
    if d < 1 or m < 2:
        raise ValueError("need hypersurface degree d >= 1 and m >= 2")
    b = tuple(b)
    records = []
    for k in range(2, len(b) + 1, 2):
        for s in obstruction_decomposition(m, b, k):
            b_I = -s.twist
            records.append(
                SummandRecord(k, s.index_set, h_tangent(m, 0, -b_I), h_tangent(m, 1, -b_I - d))
            )
    return NormalityCertificate(m, b, d, tuple(records))


def quadric_normal_h0(m: int, b: Sequence[int], d: int) -> int:
    """dim Hom(O(-d), ∧^2(⊕ O(-b_j))) on P^m, i.e. sum over pairs of h^0(O(d - b_i - b_j))."""
    if d < 1:
        raise ValueError("need d >= 1")
    return sum(h_line(m, 0, d - b[i] - b[j]) for i, j in combinations(range(len(b)), 2))


def normal_section_h0(m: int, b: Sequence[int], d: int, k: int) -> int:
    """Same as :func:`quadric_normal_h0` for index sets of size ``k``."""
    return sum(h_line(m, 0, d - sum(b[i] for i in I)) for I in combinations(range(len(b)), k))


def cohomology_table(m: int, ks: Sequence[int], sheaf: str = "line", p: int = 0) -> dict:
    """JSON table ``{"m":..., "entries":[{"q","k","dim"}]}``."""
    entries = []
    for k in ks:
        for q in range(m + 1):
            if sheaf == "line":
                dim = h_line(m, q, k)
            elif sheaf == "tangent":
                dim = h_tangent(m, q, k)
            elif sheaf == "omega":
                dim = h_omega(m, p, q, k)
            else:
                raise ValueError(f"unknown sheaf {sheaf!r}")
            entries.append({"q": q, "k": k, "dim": dim})
    out = {"m": m, "sheaf": sheaf, "entries": entries}
    if sheaf == "omega":
        out["p"] = p
    return out
