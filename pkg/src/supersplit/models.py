"""Projective superspace data: split models, charts, products, Segre data and
weight-preserving automorphisms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .algebra import (
    Degree,
    SuperPolynomial,
    Substitution,
    WeightSystem,
    graded_piece_basis,
    weighted_degree,
)
from .cohomology import binom
from .errors import ArityError, WeightError


@dataclass(frozen=True)
class ModelSpec:
    """P^{m|n}(a|b): m+1 even coordinates of weights a, n odd ones of weights b."""

    m: int
    n: int
    weights: WeightSystem

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be non-negative")
        if len(self.weights.even) != self.m + 1:
            raise ArityError(f"expected {self.m + 1} even weights, got {len(self.weights.even)}")
        if len(self.weights.odd) != self.n:
            raise ArityError(f"expected {self.n} odd weights, got {len(self.weights.odd)}")

    @classmethod
    def create(cls, m: int, n: int, a: Optional[Sequence[int]] = None,
               b: Optional[Sequence[int]] = None):
        a = tuple(a) if a is not None else (1,) * (m + 1)
        b = tuple(b) if b is not None else (1,) * n
        return cls(m, n, WeightSystem(a, b))

    @property
    def a(self) -> Tuple[int, ...]:
        return self.weights.even

    @property
    def b(self) -> Tuple[int, ...]:
        return self.weights.odd

    @property
    def n_even(self) -> int:
        return self.m + 1

    @property
    def is_positive(self) -> bool:
        return self.weights.is_positive

    @property
    def unit_even(self) -> bool:
        return self.weights.unit_even

    @property
    def eq43(self) -> bool:
        """Every odd weight is at least every even weight."""
        return not self.b or min(self.b) >= max(self.a)

    def describe(self) -> str:
        a = ",".join(map(str, self.a))
        b = ",".join(map(str, self.b))
        return f"P^{{{self.m}|{self.n}}}({a}|{b})"

    def to_json(self):
        return {"m": self.m, "n": self.n, "a": list(self.a), "b": list(self.b)}


@dataclass(frozen=True)
class SplitModelData:
    reduced: str
    odd_cotangent: Tuple[int, ...]

    def to_json(self):
        return {
            "reduced": self.reduced,
            "odd_cotangent": [f"O({t})" for t in self.odd_cotangent],
            "twists": list(self.odd_cotangent),
        }


def split_model(spec: ModelSpec) -> SplitModelData:
    if spec.unit_even:
        reduced = f"P^{spec.m}"
    else:
        reduced = f"P^{spec.m}({','.join(map(str, spec.a))})"
    return SplitModelData(reduced, tuple(-bj for bj in spec.b))


# ---------------------------------------------------------------------------
# charts


def _require_unit_even(spec: ModelSpec, what: str):
    if not spec.unit_even:
        raise WeightError(
            f"{what} is only available for unit even weights; "
            f"got a={list(spec.a)} (weighted charts are fractional)"
        )


def chart_transition(spec: ModelSpec, mu: int, nu: int) -> Substitution:
    """Chart-mu coordinates written in chart-nu coordinates (Laurent mode).

    Chart coordinates reuse the m+1 even slots; slot ``mu`` of chart mu is the
    constant 1 and must not occur in polynomials written in that chart.
    """
    _require_unit_even(spec, "chart_transition")
    ne, no = spec.n_even, spec.n
    if not (0 <= mu < ne and 0 <= nu < ne):
        raise ArityError("chart index out of range")
    if mu == nu:
        return Substitution.identity(ne, no, laurent=True)
    even = []
    for sigma in range(ne):
        e = [0] * ne
        if sigma != nu:
            e[sigma] += 1
        e[mu] -= 1
        even.append(SuperPolynomial(ne, no, {(tuple(e), ()): 1}, laurent=True))
    odd = []
    for j, bj in enumerate(spec.b):
        e = [0] * ne
        e[mu] = -bj
        odd.append(SuperPolynomial(ne, no, {(tuple(e), (j,)): 1}, laurent=True))
    return Substitution(tuple(even), tuple(odd), ne, no, laurent=True)


def _same_chart_map(s1: Substitution, s2: Substitution, source_chart: int) -> bool:
    for i, (p, q) in enumerate(zip(s1.even_images, s2.even_images)):
        if i != source_chart and p != q:
            return False
    return s1.odd_images == s2.odd_images


def cocycle_check(spec: ModelSpec, mu: int, nu: int, sigma: int) -> bool:
    """T(mu,nu) followed by T(nu,sigma) equals T(mu,sigma)."""
    composed = chart_transition(spec, mu, nu).compose(chart_transition(spec, nu, sigma))
    return _same_chart_map(composed, chart_transition(spec, mu, sigma), mu)


def check_all_cocycles(spec: ModelSpec) -> List[Tuple[Tuple[int, int, int], bool]]:
    r = range(spec.n_even)
    return [((a, b, c), cocycle_check(spec, a, b, c)) for a in r for b in r for c in r]


# ---------------------------------------------------------------------------
# products and Segre data


@dataclass(frozen=True)
class ProductDescriptor:
    factors: Tuple[ModelSpec, ...]
    twists: Tuple[Tuple[int, int], ...]  # (twist, factor number starting at 1)

    @property
    def reduced(self) -> str:
        parts = [split_model(s).reduced for s in self.factors if s.m > 0]
        return " x ".join(parts) if parts else "P^0"

    def to_json(self):
        return {
            "reduced": self.reduced,
            "factors": [s.to_json() for s in self.factors],
            "odd_cotangent": [{"twist": t, "factor": f} for t, f in self.twists],
        }


def product_model(s1: ModelSpec, s2: ModelSpec) -> ProductDescriptor:
    twists = tuple((-bj, 1) for bj in s1.b) + tuple((-bj, 2) for bj in s2.b)
    return ProductDescriptor((s1, s2), twists)


@dataclass(frozen=True)
class SegreData:
    m2: int
    n2: int
    b2: Tuple[int, ...]

    def to_json(self):
        return {"m2": self.m2, "n2": self.n2, "b2": list(self.b2)}


def _require_segre_input(*specs: ModelSpec):
    for s in specs:
        _require_unit_even(s, "the Segre embedding")
        if not s.is_positive:
            raise WeightError(f"the Segre embedding needs positive odd weights, got {list(s.b)}")


def segre_data(s1: ModelSpec, s2: ModelSpec) -> SegreData:
    _require_segre_input(s1, s2)
    m2 = (s1.m + 1) * (s2.m + 1) - 1
    b2: List[int] = []
    for bi in s1.b:
        b2.extend([bi] * binom(s2.m + bi, bi))
    for bi in s2.b:
        b2.extend([bi] * binom(s1.m + bi, bi))
    return SegreData(m2, len(b2), tuple(b2))


def segre_coordinate_map(m: int, n: int, mp: int, np_: int) -> Substitution:
    """Ambient homogeneous coordinates of P^{m|n} x P^{mp|np_} (unit weights).

    Product ring variables: x_0..x_m, y_0..y_mp even; t_1..t_n, e_1..e_np_ odd.
    Ambient order: x^mu y^nu (lex), then x^mu e_j (lex), then t_i y^nu (lex).
    """
    if min(m, n, mp, np_) < 0:
        raise ValueError("dimensions must be non-negative")
    ne = m + 1 + mp + 1
    no = n + np_

    def x(i):
        return SuperPolynomial.even_var(i, ne, no)

    def y(i):
        return SuperPolynomial.even_var(m + 1 + i, ne, no)

    def t(i):
        return SuperPolynomial.odd_var(i, ne, no)

    def eta(i):
        return SuperPolynomial.odd_var(n + i, ne, no)

    even = [x(mu) * y(nu) for mu in range(m + 1) for nu in range(mp + 1)]
    odd = [x(mu) * eta(j) for mu in range(m + 1) for j in range(np_)]
    odd += [t(i) * y(nu) for i in range(n) for nu in range(mp + 1)]
    return Substitution(tuple(even), tuple(odd), ne, no)


# ---------------------------------------------------------------------------
# automorphisms


def _image_weight_ok(img: SuperPolynomial, w: WeightSystem, weight: int, parity: int) -> bool:
    if img.is_zero() or img.parity() != parity:
        return False
    return weighted_degree(img, w) == weight


def weight_violations(spec: ModelSpec, s: Substitution) -> List[str]:
    if (s.source_even, s.source_odd) != (spec.n_even, spec.n) or \
            (s.target_even, s.target_odd) != (spec.n_even, spec.n):
        return ["substitution does not act on this model's coordinate ring"]
    if s.laurent:
        return ["Laurent substitutions are not automorphisms of the coordinate ring"]
    bad = []
    for mu, img in enumerate(s.even_images):
        if not _image_weight_ok(img, spec.weights, spec.a[mu], 0):
            bad.append(f"x{mu + 1}")
    for j, img in enumerate(s.odd_images):
        if not _image_weight_ok(img, spec.weights, spec.b[j], 1):
            bad.append(f"t{j + 1}")
    return bad


def check_weight_preserving(spec: ModelSpec, s: Substitution) -> bool:
    return not weight_violations(spec, s)


def framed_coefficient_dim(spec: ModelSpec) -> int:
    """Dimension of the weight-allowed coefficients of maps that are the
    identity modulo J^2: x^mu -> x^mu + sum phi^{mu|I} t_I (|I| even >= 2),
    t_j -> t_j + sum phi_j^I t_I (|I| odd >= 3)."""
    a, b, n = spec.a, spec.b, spec.n
    total = 0
    for size in range(2, n + 1):
        for I in itertools.combinations(range(n), size):
            b_I = sum(b[i] for i in I)
            if size % 2 == 0:
                total += sum(len(graded_piece_basis(a, am - b_I)) for am in a)
            elif size >= 3:
                total += sum(len(graded_piece_basis(a, bj - b_I)) for bj in b)
    return total


def linear_part(spec: ModelSpec, s: Substitution) -> List[List[Fraction]]:
    """Matrix A with s(t_j) = sum_k A[j][k] t_k modulo J^3."""
    bad = weight_violations(spec, s)
    if bad:
        raise WeightError(f"weight mismatch: images of {', '.join(bad)} do not preserve weight")
    for mu, img in enumerate(s.even_images):
        x = SuperPolynomial.even_var(mu, spec.n_even, spec.n)
        if img.component(0) != x:
            raise WeightError(f"x{mu + 1} is not fixed modulo J^2: {img}")
    n = spec.n
    A = [[Fraction(0)] * n for _ in range(n)]
    for j, img in enumerate(s.odd_images):
        for (evens, odds), c in img.component(1).terms.items():
            k = odds[0]
            if any(evens):
                raise WeightError(
                    f"t{j + 1}: linear coefficient of t{k + 1} is not constant"
                )
            if spec.b[j] != spec.b[k]:
                raise WeightError(f"t{j + 1}: entry for t{k + 1} crosses weight classes")
            A[j][k] = c
    return A


def linear_substitution(spec: ModelSpec, A: Sequence[Sequence]) -> Substitution:
    """x fixed, t_j -> sum_k A[j][k] t_k."""
    ne, n = spec.n_even, spec.n
    if len(A) != n or any(len(row) != n for row in A):
        raise ArityError(f"matrix must be {n}x{n}")
    zero = SuperPolynomial(ne, n)
    odd = []
    for j in range(n):
        img = zero
        for k in range(n):
            if A[j][k]:
                img = img + SuperPolynomial.odd_var(k, ne, n).scale(A[j][k])
        odd.append(img)
    even = [SuperPolynomial.even_var(i, ne, n) for i in range(ne)]
    return Substitution(tuple(even), tuple(odd), ne, n)


def model_from_json(data: dict) -> ModelSpec:
    return ModelSpec.create(data["m"], data["n"], data.get("a"), data.get("b"))


__all__ = [
    "Degree",
    "ModelSpec",
    "ProductDescriptor",
    "SegreData",
    "SplitModelData",
    "Substitution",
    "check_all_cocycles",
    "check_weight_preserving",
    "chart_transition",
    "cocycle_check",
    "framed_coefficient_dim",
    "linear_part",
    "linear_substitution",
    "product_model",
    "segre_coordinate_map",
    "segre_data",
    "split_model",
]
