"""Exact arithmetic in the supercommutative ring Q[x_1..x_{m+1} | t_1..t_n].

Monomials are pairs ``(even_exponents, odd_indices)`` with the odd indices
strictly ascending, so every element has a unique sparse representation.
Indices are 0-based in the Python API; the text rendering is 1-based
(``x1``, ``t1``).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import ArityError, LaurentError, ParityError

Monomial = Tuple[Tuple[int, ...], Tuple[int, ...]]
Number = Union[int, Fraction]


def monomial_key(mono: Monomial):
    """Canonical order: odd length, odd indices, then graded-descending even part."""
    evens, odds = mono
    return (len(odds), odds, -sum(evens), tuple(-e for e in evens))


def merge_odd(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    """Return ``(sign, merged)`` for the product t_a * t_b; sign is 0 on a repeat."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    if set(a) & set(b):
        return 0, ()
    inversions = sum(1 for i in a for j in b if i > j)
    return (-1 if inversions % 2 else 1), tuple(sorted(a + b))


class SuperPolynomial:
    """Sparse element of Q[x | t]; immutable after construction."""

    __slots__ = ("n_even", "n_odd", "laurent", "_terms", "_hash")

    def __init__(self, n_even: int, n_odd: int, terms=None, laurent: bool = False):
        self.n_even = n_even
        self.n_odd = n_odd
        self.laurent = laurent
        clean: Dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            evens, odds = mono
            if len(evens) != n_even:
                raise ArityError(f"monomial {mono} does not have {n_even} even exponents")
            if not laurent and any(e < 0 for e in evens):
                raise LaurentError("negative exponent outside Laurent mode")
            if any(o < 0 or o >= n_odd for o in odds):
                raise ArityError(f"odd index out of range in {mono}")
            if any(odds[i] >= odds[i + 1] for i in range(len(odds) - 1)):
                raise ValueError(f"odd indices must be strictly ascending: {odds}")
            clean[(tuple(evens), tuple(odds))] = c
        self._terms = clean
        self._hash = None

    # construction helpers -------------------------------------------------

    @classmethod
    def _raw(cls, n_even, n_odd, terms, laurent):
        # terms already canonical and zero-free
        p = cls.__new__(cls)
        p.n_even, p.n_odd, p.laurent = n_even, n_odd, laurent
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Number, n_even: int, n_odd: int, laurent: bool = False):
        return cls(n_even, n_odd, {((0,) * n_even, ()): c}, laurent)

    @classmethod
    def even_var(cls, i: int, n_even: int, n_odd: int, laurent: bool = False):
        if not 0 <= i < n_even:
            raise ArityError(f"even index {i} out of range")
        e = [0] * n_even
        e[i] = 1
        return cls(n_even, n_odd, {(tuple(e), ()): 1}, laurent)

    @classmethod
    def odd_var(cls, j: int, n_even: int, n_odd: int, laurent: bool = False):
        if not 0 <= j < n_odd:
            raise ArityError(f"odd index {j} out of range")
        return cls(n_even, n_odd, {((0,) * n_even, (j,)): 1}, laurent)

    @classmethod
    def monomial(cls, evens, odds, n_odd: int, coeff: Number = 1, laurent: bool = False):
        """Single term ``coeff * x^evens * t_odds``; odds may be unsorted (sign applied)."""
        odds = tuple(odds)
        sign = 1
        acc: Tuple[int, ...] = ()
        for o in odds:
            s, acc = merge_odd(acc, (o,))
            sign *= s
        return cls(len(evens), n_odd, {(tuple(evens), acc): sign * Fraction(coeff)}, laurent)

    # basic protocol -------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: monomial_key(kv[0]))

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._lift(other)
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return (
            self.n_even == other.n_even
            and self.n_odd == other.n_odd
            and self._terms == other._terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n_even, self.n_odd, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"SuperPolynomial({render(self)!r})"

    def __str__(self):
        return render(self)

    def _lift(self, c):
        return SuperPolynomial.constant(c, self.n_even, self.n_odd, self.laurent)

    def _check(self, other, op, strict_mode=True):
        if isinstance(other, (int, Fraction)):
            return self._lift(other)
        if not isinstance(other, SuperPolynomial):
            return None
        if (self.n_even, self.n_odd) != (other.n_even, other.n_odd):
            raise ArityError(
                f"{op}: variable counts differ ({self.n_even}|{self.n_odd}) "
                f"vs ({other.n_even}|{other.n_odd})"
            )
        if strict_mode and self.laurent != other.laurent:
            raise LaurentError(f"{op}: mixing Ring and Laurent polynomials")
        return other

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._check(other, "add")
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            v = out.get(mono, 0) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        return SuperPolynomial._raw(self.n_even, self.n_odd, out, self.laurent)

    __radd__ = __add__

    def __neg__(self):
        return SuperPolynomial._raw(
            self.n_even, self.n_odd, {m: -c for m, c in self._terms.items()}, self.laurent
        )

    def __sub__(self, other):
        other = self._check(other, "sub")
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._check(other, "mul")
        if other is None:
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for (e1, o1), c1 in self._terms.items():
            for (e2, o2), c2 in other._terms.items():
                sign, odds = merge_odd(o1, o2)
                if not sign:
                    continue
                mono = (tuple(a + b for a, b in zip(e1, e2)), odds)
                v = out.get(mono, 0) + sign * c1 * c2
                if v:
                    out[mono] = v
                else:
                    out.pop(mono, None)
        return SuperPolynomial._raw(self.n_even, self.n_odd, out, self.laurent)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self._lift(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Number):
        c = Fraction(c)
        if c == 0:
            return SuperPolynomial._raw(self.n_even, self.n_odd, {}, self.laurent)
        return SuperPolynomial._raw(
            self.n_even, self.n_odd, {m: c * v for m, v in self._terms.items()}, self.laurent
        )

    def inverse(self):
        """Inverse of a single pure-even term; only Laurent polynomials qualify
        unless the term is a nonzero constant."""
        if len(self._terms) != 1:
            raise LaurentError("only single-term even polynomials are invertible")
        ((evens, odds), c), = self._terms.items()
        if odds:
            raise LaurentError("a term containing odd variables is not invertible")
        if any(evens) and not self.laurent:
            raise LaurentError("inverting a non-constant monomial requires Laurent mode")
        return SuperPolynomial._raw(
            self.n_even, self.n_odd, {(tuple(-e for e in evens), ()): 1 / c}, self.laurent
        )

    # structure ------------------------------------------------------------

    def to_laurent(self):
        return SuperPolynomial._raw(self.n_even, self.n_odd, dict(self._terms), True)

    def to_ring(self):
        if any(e < 0 for (evens, _), _c in self._terms.items() for e in evens):
            raise LaurentError("polynomial has negative exponents")
        return SuperPolynomial._raw(self.n_even, self.n_odd, dict(self._terms), False)

    def parity(self) -> Optional[int]:
        """0 for even, 1 for odd, None if mixed; zero counts as even."""
        ps = {len(o) % 2 for (_, o) in self._terms}
        if not ps:
            return 0
        if len(ps) == 1:
            return ps.pop()
        return None

    def odd_lengths(self):
        return sorted({len(o) for (_, o) in self._terms})

    def component(self, k: int):
        """The part of odd length exactly ``k``."""
        return SuperPolynomial._raw(
            self.n_even,
            self.n_odd,
            {m: c for m, c in self._terms.items() if len(m[1]) == k},
            self.laurent,
        )

    def reduced_part(self):
        return self.component(0)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def theta_coefficients(self) -> Dict[Tuple[int, ...], "SuperPolynomial"]:
        """Map odd index set S to the even polynomial h_S with self = sum h_S t_S."""
        out: Dict[Tuple[int, ...], Dict[Monomial, Fraction]] = {}
        for (evens, odds), c in self._terms.items():
            out.setdefault(odds, {})[(evens, ())] = c
        return {
            s: SuperPolynomial._raw(self.n_even, self.n_odd, t, self.laurent)
            for s, t in sorted(out.items(), key=lambda kv: (len(kv[0]), kv[0]))
        }

    def variables_used(self) -> Tuple[set, set]:
        ev, od = set(), set()
        for (evens, odds) in self._terms:
            ev.update(i for i, e in enumerate(evens) if e)
            od.update(odds)
        return ev, od

    def embed(self, n_even: int, n_odd: int, even_offset: int = 0, odd_offset: int = 0):
        """Reindex into a larger ring, shifting variable indices by the offsets."""
        out = {}
        for (evens, odds), c in self._terms.items():
            e = [0] * n_even
            e[even_offset:even_offset + len(evens)] = evens
            out[(tuple(e), tuple(o + odd_offset for o in odds))] = c
        return SuperPolynomial(n_even, n_odd, out, self.laurent)


# ---------------------------------------------------------------------------
# free functions mirroring the operations of the module


def add(f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
    return f + g


def mul(f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
    return f * g


def partial_even(f: SuperPolynomial, mu: int) -> SuperPolynomial:
    if not 0 <= mu < f.n_even:
        raise ArityError(f"even index {mu} out of range")
    out = {}
    for (evens, odds), c in f._terms.items():
        e = evens[mu]
        if e == 0:
            continue
        new = list(evens)
        new[mu] -= 1
        out[(tuple(new), odds)] = c * e
    return SuperPolynomial._raw(f.n_even, f.n_odd, out, f.laurent)


def partial_odd(f: SuperPolynomial, i: int) -> SuperPolynomial:
    """Left odd derivative d/dt_i: moves t_i to the front before deleting it."""
    if f.laurent:
        raise LaurentError("partial_odd is defined on Ring-mode polynomials only")
    if not 0 <= i < f.n_odd:
        raise ArityError(f"odd index {i} out of range")
    out = {}
    for (evens, odds), c in f._terms.items():
        if i not in odds:
            continue
        pos = odds.index(i)
        out[(evens, odds[:pos] + odds[pos + 1:])] = -c if pos % 2 else c
    return SuperPolynomial._raw(f.n_even, f.n_odd, out, f.laurent)


# ---------------------------------------------------------------------------
# weights and degrees


@dataclass(frozen=True)
class WeightSystem:
    """Weights ``a`` of the even and ``b`` of the odd homogeneous coordinates."""

    even: Tuple[int, ...]
    odd: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "even", tuple(int(v) for v in self.even))
        object.__setattr__(self, "odd", tuple(int(v) for v in self.odd))
        if any(v < 1 for v in self.even):
            raise ValueError(f"even weights must be positive, got {self.even}")

    @classmethod
    def standard(cls, m: int, n: int):
        return cls((1,) * (m + 1), (1,) * n)

    @property
    def is_positive(self) -> bool:
        return all(v >= 1 for v in self.odd)

    @property
    def unit_even(self) -> bool:
        return all(v == 1 for v in self.even)

    def monomial_degree(self, mono: Monomial) -> int:
        evens, odds = mono
        return sum(a * e for a, e in zip(self.even, evens)) + sum(self.odd[i] for i in odds)

    def odd_weight(self, index_set: Iterable[int]) -> int:
        return sum(self.odd[i] for i in index_set)


class Degree(enum.Enum):
    """Non-integer outcomes of :func:`weighted_degree`."""

    ZERO = "zero"
    INHOMOGENEOUS = "inhomogeneous"


def weighted_degree(f: SuperPolynomial, w: WeightSystem) -> Union[int, Degree]:
    if (len(w.even), len(w.odd)) != (f.n_even, f.n_odd):
        raise ArityError("weight system does not match the polynomial's variables")
    degrees = {w.monomial_degree(m) for m in f._terms}
    if not degrees:
        return Degree.ZERO
    if len(degrees) > 1:
        return Degree.INHOMOGENEOUS
    return degrees.pop()


def theta_components(f: SuperPolynomial) -> List[Tuple[int, SuperPolynomial]]:
    return [(k, f.component(k)) for k in f.odd_lengths()]


def graded_piece_basis(even_weights: Sequence[int], d: int) -> List[Tuple[int, ...]]:
    """Exponent vectors e with sum(a_i e_i) == d, in descending lexicographic order."""
    if isinstance(even_weights, WeightSystem):
        even_weights = even_weights.even
    weights = tuple(even_weights)
    if d < 0:
        return []
    out: List[Tuple[int, ...]] = []

    def rec(i, remaining, prefix):
        if i == len(weights) - 1:
            if remaining % weights[i] == 0:
                out.append(prefix + (remaining // weights[i],))
            return
        for e in range(remaining // weights[i], -1, -1):
            rec(i + 1, remaining - e * weights[i], prefix + (e,))

    if not weights:
        return [()] if d == 0 else []
    rec(0, d, ())
    return out


def graded_piece(even_weights: Sequence[int], d: int, n_odd: int) -> List[SuperPolynomial]:
    """The basis of :func:`graded_piece_basis` as polynomials."""
    return [
        SuperPolynomial(len(e), n_odd, {(e, ()): 1}) for e in graded_piece_basis(even_weights, d)
    ]


# ---------------------------------------------------------------------------
# substitutions


@dataclass(frozen=True)
class Substitution:
    """Ring map sending x_mu to ``even_images[mu]`` and t_j to ``odd_images[j]``.

    The images all live in one target ring; the source ring has
    ``len(even_images)`` even and ``len(odd_images)`` odd generators.
    """

    even_images: Tuple[SuperPolynomial, ...]
    odd_images: Tuple[SuperPolynomial, ...]
    target_even: int
    target_odd: int
    laurent: bool = False

    def __post_init__(self):
        object.__setattr__(self, "even_images", tuple(self.even_images))
        object.__setattr__(self, "odd_images", tuple(self.odd_images))
        for mu, img in enumerate(self.even_images):
            self._check_image(img, 0, f"x{mu + 1}")
        for j, img in enumerate(self.odd_images):
            self._check_image(img, 1, f"t{j + 1}")

    def _check_image(self, img, parity, name):
        if (img.n_even, img.n_odd) != (self.target_even, self.target_odd):
            raise ArityError(f"image of {name} lives in the wrong ring")
        if img.parity() != parity and not (parity == 1 and img.is_zero()):
            kind = "even" if parity == 0 else "odd"
            raise ParityError(f"image of {name} is not {kind}: {render(img)}")
        if img.laurent and not self.laurent:
            raise LaurentError(f"image of {name} is Laurent but the substitution is not")

    @classmethod
    def from_images(cls, even_images, odd_images):
        imgs = list(even_images) + list(odd_images)
        if not imgs:
            raise ValueError("empty substitution")
        ref = imgs[0]
        laurent = any(p.laurent for p in imgs)
        if laurent:
            even_images = [p.to_laurent() for p in even_images]
            odd_images = [p.to_laurent() for p in odd_images]
        return cls(tuple(even_images), tuple(odd_images), ref.n_even, ref.n_odd, laurent)

    @classmethod
    def identity(cls, n_even: int, n_odd: int, laurent: bool = False):
        return cls(
            tuple(SuperPolynomial.even_var(i, n_even, n_odd, laurent) for i in range(n_even)),
            tuple(SuperPolynomial.odd_var(j, n_even, n_odd, laurent) for j in range(n_odd)),
            n_even,
            n_odd,
            laurent,
        )

    @property
    def source_even(self) -> int:
        return len(self.even_images)

    @property
    def source_odd(self) -> int:
        return len(self.odd_images)

    def replace(self, even: Optional[dict] = None, odd: Optional[dict] = None):
        """Copy with some generator images replaced (keys are 0-based indices)."""
        ev = list(self.even_images)
        od = list(self.odd_images)
        for k, v in (even or {}).items():
            ev[k] = v
        for k, v in (odd or {}).items():
            od[k] = v
        return Substitution.from_images(ev, od) if (ev or od) else self

    def __call__(self, f: SuperPolynomial) -> SuperPolynomial:
        return apply(self, f)

    def compose(self, inner: "Substitution") -> "Substitution":
        """The map ``f -> inner(self(f))``: images of self rewritten through inner."""
        return Substitution.from_images(
            [apply(inner, p) for p in self.even_images],
            [apply(inner, p) for p in self.odd_images],
        )

    def to_json(self):
        return {
            "even": [render(p) for p in self.even_images],
            "odd": [render(p) for p in self.odd_images],
        }


def apply(s: Substitution, f: SuperPolynomial) -> SuperPolynomial:
    """Evaluate the ring homomorphism determined by ``s`` on ``f``."""
    if (f.n_even, f.n_odd) != (s.source_even, s.source_odd):
        raise ArityError(
            f"substitution expects ({s.source_even}|{s.source_odd}) variables, "
            f"got ({f.n_even}|{f.n_odd})"
        )
    laurent = s.laurent
    zero = SuperPolynomial._raw(s.target_even, s.target_odd, {}, laurent)
    one = SuperPolynomial.constant(1, s.target_even, s.target_odd, laurent)
    power_cache: Dict[Tuple[int, int], SuperPolynomial] = {}

    def power(mu, e):
        key = (mu, e)
        if key not in power_cache:
            power_cache[key] = s.even_images[mu] ** e
        return power_cache[key]

    acc = zero
    for (evens, odds), c in f._terms.items():
        term = one
        for mu, e in enumerate(evens):
            if e:
                term = term * power(mu, e)
        for j in odds:
            term = term * s.odd_images[j]
        acc = acc + term.scale(c)
    return acc


# ---------------------------------------------------------------------------
# rendering


def _render_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def render_monomial(mono: Monomial) -> str:
    evens, odds = mono
    parts = []
    for i, e in enumerate(evens):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e:
            parts.append(f"x{i + 1}^{e}")
    parts.extend(f"t{j + 1}" for j in odds)
    return "*".join(parts)


def render(f: SuperPolynomial) -> str:
    """Canonical text, e.g. ``x1^2 + x2*t1*t2 - 1/2*t1*t2``."""
    if f.is_zero():
        return "0"
    pieces = []
    for i, (mono, c) in enumerate(f.items()):
        body = render_monomial(mono)
        mag = abs(c)
        if not body:
            text = _render_coeff(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{_render_coeff(mag)}*{body}"
        if i == 0:
            pieces.append(("-" if c < 0 else "") + text)
        else:
            pieces.append((" - " if c < 0 else " + ") + text)
    return "".join(pieces)


# ---------------------------------------------------------------------------


class SuperRing:
    """Convenience factory for polynomials with a fixed variable count."""

    def __init__(self, n_even: int, n_odd: int, laurent: bool = False):
        self.n_even = n_even
        self.n_odd = n_odd
        self.laurent = laurent

    def x(self, i: int) -> SuperPolynomial:
        return SuperPolynomial.even_var(i, self.n_even, self.n_odd, self.laurent)

    def t(self, j: int) -> SuperPolynomial:
        return SuperPolynomial.odd_var(j, self.n_even, self.n_odd, self.laurent)

    def const(self, c: Number) -> SuperPolynomial:
        return SuperPolynomial.constant(c, self.n_even, self.n_odd, self.laurent)

    @property
    def zero(self) -> SuperPolynomial:
        return self.const(0)

    @property
    def one(self) -> SuperPolynomial:
        return self.const(1)

    def xs(self) -> List[SuperPolynomial]:
        return [self.x(i) for i in range(self.n_even)]

    def ts(self) -> List[SuperPolynomial]:
        return [self.t(j) for j in range(self.n_odd)]

    def theta(self, index_set: Iterable[int]) -> SuperPolynomial:
        out = self.one
        for j in index_set:
            out = out * self.t(j)
        return out

    def from_exponents(self, evens, odds=(), coeff: Number = 1) -> SuperPolynomial:
        return SuperPolynomial.monomial(evens, odds, self.n_odd, coeff, self.laurent)

    def identity(self) -> Substitution:
        return Substitution.identity(self.n_even, self.n_odd, self.laurent)

    def parse(self, text: str, zero_based: Optional[bool] = None) -> SuperPolynomial:
        from .parser import parse_polynomial

        p = parse_polynomial(text, self.n_even, self.n_odd, zero_based=zero_based)
        return p.to_laurent() if self.laurent else p


def odd_index_sets(n: int, size: int) -> Iterator[Tuple[int, ...]]:
    return itertools.combinations(range(n), size)
