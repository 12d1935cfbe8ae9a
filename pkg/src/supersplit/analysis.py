"""Splitting analysis of projective superspace varieties.

A job is a list of even, homogeneous generators on one weighted projective
superspace (or bihomogeneous generators on a product of two).  The module
reads off the structural data of the generators, runs an exact order-by-order
search for a weight-preserving automorphism removing the odd variables, and
combines these with the cohomological certificates into a verdict.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .algebra import (
    Degree,
    SuperPolynomial,
    Substitution,
    apply,
    graded_piece_basis,
    partial_even,
    render,
)
from .cohomology import normal_section_h0, normality_certificate, quadric_normal_h0
from .errors import ArityError, ConsistencyError, LaurentError, ParityError, SupersplitError, WeightError
from .linalg import SparseSystem, rank
from .models import ModelSpec, segre_data

REDUCED = "Reduced"

Vector = Tuple[int, ...]


# ---------------------------------------------------------------------------
# gradings


class Grading:
    """Multi-degree of monomials: one component per factor of the ambient space."""

    def __init__(self, specs: Sequence[ModelSpec]):
        self.specs = tuple(specs)
        r = len(self.specs)
        self.even_weights: List[Vector] = []
        self.odd_weights: List[Vector] = []
        self._even_blocks = []
        for f, s in enumerate(self.specs):
            start = len(self.even_weights)
            self._even_blocks.append((start, s.a))
            for a in s.a:
                self.even_weights.append(tuple(a if i == f else 0 for i in range(r)))
            for b in s.b:
                self.odd_weights.append(tuple(b if i == f else 0 for i in range(r)))
        self.rank = r

    @property
    def n_even(self) -> int:
        return len(self.even_weights)

    @property
    def n_odd(self) -> int:
        return len(self.odd_weights)

    def zero(self) -> Vector:
        return (0,) * self.rank

    def _add(self, u: Vector, v: Vector, k: int = 1) -> Vector:
        return tuple(x + k * y for x, y in zip(u, v))

    def monomial_degree(self, mono) -> Vector:
        evens, odds = mono
        d = self.zero()
        for i, e in enumerate(evens):
            if e:
                d = self._add(d, self.even_weights[i], e)
        for j in odds:
            d = self._add(d, self.odd_weights[j])
        return d

    def odd_degree(self, index_set) -> Vector:
        d = self.zero()
        for j in index_set:
            d = self._add(d, self.odd_weights[j])
        return d

    def difference(self, u: Vector, v: Vector) -> Vector:
        return self._add(u, v, -1)

    def degree(self, f: SuperPolynomial) -> Union[Vector, Degree]:
        degs = {self.monomial_degree(m) for m in f.terms}
        if not degs:
            return Degree.ZERO
        if len(degs) > 1:
            return Degree.INHOMOGENEOUS
        return degs.pop()

    def basis(self, target: Vector) -> List[Tuple[int, ...]]:
        """Even exponent vectors of the given multi-degree."""
        pieces = [graded_piece_basis(a, d) for (_, a), d in zip(self._even_blocks, target)]
        return [sum(parts, ()) for parts in itertools.product(*pieces)]

    @staticmethod
    def show(v: Vector):
        return v[0] if len(v) == 1 else list(v)


# ---------------------------------------------------------------------------
# jobs


@dataclass(frozen=True)
class VarietyJob:
    """Generators of a variety in P^{m|n}(a|b), or in a product when ``spec2`` is set.

    For products the variables are concatenated: x of the first factor, then
    x of the second; odd variables likewise.
    """

    spec: ModelSpec
    generators: Tuple[SuperPolynomial, ...]
    spec2: Optional[ModelSpec] = None
    assume_irreducible: bool = False
    assume_smooth: bool = False

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.generators:
            raise SupersplitError("a job needs at least one generator")
        g = self.grading
        for i, f in enumerate(self.generators, 1):
            if (f.n_even, f.n_odd) != (g.n_even, g.n_odd):
                raise ArityError(
                    f"generator f{i} has ({f.n_even}|{f.n_odd}) variables, "
                    f"model needs ({g.n_even}|{g.n_odd})"
                )
            if f.laurent:
                raise LaurentError(f"generator f{i} is a Laurent polynomial")
            if f.is_zero():
                raise SupersplitError(f"generator f{i} is zero")
            if f.parity() != 0:
                raise ParityError(f"generator f{i} is not even: {render(f)}")
            if g.degree(f) is Degree.INHOMOGENEOUS:
                what = "bihomogeneous" if self.is_product else "homogeneous"
                raise WeightError(f"generator f{i} is not {what} for the given weights: {render(f)}")

    @property
    def specs(self) -> Tuple[ModelSpec, ...]:
        return (self.spec,) if self.spec2 is None else (self.spec, self.spec2)

    @property
    def is_product(self) -> bool:
        return self.spec2 is not None

    @property
    def grading(self) -> Grading:
        return Grading(self.specs)

    @property
    def is_hypersurface(self) -> bool:
        return len(self.generators) == 1

    @property
    def n_odd(self) -> int:
        return sum(s.n for s in self.specs)

    def degrees(self) -> List[Vector]:
        g = self.grading
        return [g.degree(f) for f in self.generators]

    def to_json(self):
        out = {"model": self.spec.to_json(), "generators": [render(f) for f in self.generators]}
        if self.spec2 is not None:
            out["model2"] = self.spec2.to_json()
        out["assume"] = {"irreducible": self.assume_irreducible, "smooth": self.assume_smooth}
        return out


# ---------------------------------------------------------------------------
# structural data


def is_homogeneously_nonreduced(job: VarietyJob) -> bool:
    return any(f.odd_lengths() != [0] for f in job.generators)


def homogeneous_order(job: VarietyJob) -> Union[int, str]:
    lengths = {k for f in job.generators for k in f.odd_lengths() if k > 0}
    if not lengths:
        return REDUCED
    k = min(lengths)
    if k < 2:
        raise ConsistencyError("even generator with a theta-component of length 1")
    return k


@dataclass(frozen=True)
class QuadricDiagnostics:
    is_quadric: bool
    max_length: int
    pairs: Tuple[Tuple[int, int, Vector], ...]  # (i, j, b_i + b_j) for occurring pairs
    degrees: Tuple[Vector, ...]
    positive: bool

    def __bool__(self):
        return self.is_quadric

    @property
    def pair_degrees(self) -> List[Vector]:
        return sorted({p[2] for p in self.pairs})

    @property
    def pair_degree_matches(self) -> bool:
        """Every occurring odd pair has total weight equal to its generator's degree."""
        return bool(self.pairs) and len(set(self.pair_degrees)) == 1 and \
            all(p[2] in self.degrees for p in self.pairs)

    @property
    def d(self):
        return Grading.show(self.degrees[0]) if len(self.degrees) == 1 else None

    def to_json(self):
        return {
            "is_quadric": self.is_quadric,
            "max_theta_length": self.max_length,
            "pairs": [
                {"I": [i + 1, j + 1], "degree": Grading.show(w)} for i, j, w in self.pairs
            ],
            "pair_degrees": [Grading.show(w) for w in self.pair_degrees],
            "d": self.d,
            "pair_degree_matches_d": self.pair_degree_matches,
            "positive": self.positive,
        }


def is_quadric(job: VarietyJob) -> QuadricDiagnostics:
    g = job.grading
    max_len = max(max(f.odd_lengths()) for f in job.generators)
    pairs = set()
    for f in job.generators:
        for (_, odds) in f.component(2).terms:
            pairs.add((odds[0], odds[1], g.odd_degree(odds)))
    return QuadricDiagnostics(
        is_quadric=max_len <= 2,
        max_length=max_len,
        pairs=tuple(sorted(pairs)),
        degrees=tuple(job.degrees()),
        positive=all(s.is_positive for s in job.specs),
    )


class Smoothness(str, enum.Enum):
    SMOOTH = "Smooth"
    SINGULAR = "Singular"
    UNKNOWN = "Unknown"


class Irreducibility(str, enum.Enum):
    IRREDUCIBLE = "Irreducible"
    REDUCIBLE = "Reducible"
    UNKNOWN = "Unknown"


def _check_reduced_input(g: SuperPolynomial, spec: ModelSpec) -> int:
    if not spec.unit_even:
        raise WeightError("structured checks need unit even weights")
    if g.n_even != spec.n_even:
        raise ArityError(f"polynomial has {g.n_even} even variables, model needs {spec.n_even}")
    if g.odd_lengths() != [0]:
        raise SupersplitError(f"expected a nonzero polynomial in the even variables: {render(g)}")
    degs = {sum(e) for (e, _) in g.terms}
    if len(degs) != 1:
        raise WeightError(f"not homogeneous: {render(g)}")
    return degs.pop()


def _gram_rank(g: SuperPolynomial) -> int:
    rows: Dict[int, Dict[int, Fraction]] = {}
    for (e, _), c in g.terms.items():
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        i, j = idx
        if i == j:
            rows.setdefault(i, {})[i] = c
        else:
            rows.setdefault(i, {})[j] = c / 2
            rows.setdefault(j, {})[i] = c / 2
    return rank(list(rows.values()))


def _is_diagonal(g: SuperPolynomial) -> bool:
    return all(sum(1 for k in e if k) == 1 for (e, _) in g.terms)


def smoothness_check(g: SuperPolynomial, spec: ModelSpec) -> Smoothness:
    """Smoothness of the projective hypersurface g = 0 for structured g."""
    d = _check_reduced_input(g, spec)
    if d == 0:
        return Smoothness.UNKNOWN
    if d == 1:
        return Smoothness.SMOOTH
    used, _ = g.variables_used()
    if len(used) < spec.n_even:
        # a cone: the vertex coordinate point is singular
        return Smoothness.SINGULAR
    if d == 2:
        return Smoothness.SMOOTH if _gram_rank(g) == spec.n_even else Smoothness.SINGULAR
    if _is_diagonal(g):
        return Smoothness.SMOOTH
    return Smoothness.UNKNOWN


def _linear_forms(n_vars: int, limit: int):
    """Rational linear forms with first nonzero coefficient 1 and others in {-1,0,1}."""
    count = 0
    for p in range(n_vars):
        for tail in itertools.product((0, 1, -1), repeat=n_vars - p - 1):
            yield p, tail
            count += 1
            if count >= limit:
                return


def _divisible_by_linear(g: SuperPolynomial, p: int, tail) -> bool:
    ne, no = g.n_even, g.n_odd
    img = SuperPolynomial(ne, no)
    for k, c in enumerate(tail):
        if c:
            img = img - SuperPolynomial.even_var(p + 1 + k, ne, no).scale(c)
    s = Substitution.identity(ne, no).replace(even={p: img})
    return apply(s, g).is_zero()


def irreducibility_check(g: SuperPolynomial, spec: ModelSpec, max_forms: int = 2000) -> Irreducibility:
    """Irreducibility over C for structured g; trial division by small linear forms otherwise."""
    d = _check_reduced_input(g, spec)
    if d == 0:
        return Irreducibility.UNKNOWN
    if d == 1:
        return Irreducibility.IRREDUCIBLE
    if d == 2:
        return Irreducibility.IRREDUCIBLE if _gram_rank(g) >= 3 else Irreducibility.REDUCIBLE
    for p, tail in _linear_forms(spec.n_even, max_forms):
        if _divisible_by_linear(g, p, tail):
            return Irreducibility.REDUCIBLE
    return Irreducibility.UNKNOWN


# ---------------------------------------------------------------------------
# normal sections and Jacobian membership


@dataclass(frozen=True)
class NormalSection:
    g: SuperPolynomial
    k: int
    components: Dict[Tuple[int, ...], SuperPolynomial]
    degree: Vector

    def to_json(self):
        return {
            "g": render(self.g),
            "k": self.k,
            "d": Grading.show(self.degree),
            "components": [
                {"I": [i + 1 for i in I], "h": render(h)} for I, h in self.components.items()
            ],
        }


def _grading_of(where) -> Grading:
    if isinstance(where, VarietyJob):
        return where.grading
    if isinstance(where, ModelSpec):
        return Grading((where,))
    if isinstance(where, Grading):
        return where
    return Grading(tuple(where))


def extract_normal_section(f: SuperPolynomial, where) -> NormalSection:
    """Reduced part g and lowest theta-component sum_I h^I t_I of an even generator."""
    gr = _grading_of(where)
    if f.parity() != 0 or f.is_zero():
        raise ParityError("normal sections need a nonzero even generator")
    d = gr.degree(f)
    if d is Degree.INHOMOGENEOUS:
        raise WeightError(f"not homogeneous: {render(f)}")
    lengths = [k for k in f.odd_lengths() if k > 0]
    if not lengths:
        raise SupersplitError(f"generator is homogeneously reduced: {render(f)}")
    k = min(lengths)
    comps = f.component(k).theta_coefficients()
    for I, h in comps.items():
        want = gr.difference(d, gr.odd_degree(I))
        if gr.degree(h) != want:
            raise ConsistencyError(f"h^{I} has degree {gr.degree(h)}, expected {want}")
    return NormalSection(f.component(0), k, comps, d)


def jacobian_membership(section: NormalSection, where) -> Optional[Dict[Tuple[int, ...], Dict[int, SuperPolynomial]]]:
    """Coefficients c^{I|sigma} with h^I = sum_sigma c^{I|sigma} dg/dx^sigma, or None."""
    gr = _grading_of(where)
    g = section.g
    ne, no = g.n_even, g.n_odd
    partials = [partial_even(g, s) for s in range(ne)]
    out = {}
    for I, h in section.components.items():
        bI = gr.odd_degree(I)
        system = SparseSystem()
        for sigma in range(ne):
            if partials[sigma].is_zero():
                continue
            for e in gr.basis(gr.difference(gr.even_weights[sigma], bI)):
                col = SuperPolynomial(ne, no, {(e, ()): 1}) * partials[sigma]
                system.add_column((sigma, e), col.terms)
        system.set_rhs(h.terms)
        sol = system.solve()
        if sol is None:
            return None
        coeffs: Dict[int, SuperPolynomial] = {}
        for (sigma, e), v in zip(system.columns, sol):
            if v:
                term = SuperPolynomial(ne, no, {(e, ()): v})
                coeffs[sigma] = coeffs.get(sigma, SuperPolynomial(ne, no)) + term
        out[I] = coeffs
    return out


def jacobian_witness(section: NormalSection, coefficients) -> Substitution:
    """x^sigma -> x^sigma - sum_I c^{I|sigma} t_I, which clears the order-k component."""
    ne, no = section.g.n_even, section.g.n_odd
    even = {}
    for I, coeffs in coefficients.items():
        theta = SuperPolynomial.monomial((0,) * ne, I, no)
        for sigma, c in coeffs.items():
            base = even.get(sigma, SuperPolynomial.even_var(sigma, ne, no))
            even[sigma] = base - c * theta
    return Substitution.identity(ne, no).replace(even=even)


# ---------------------------------------------------------------------------
# splitting search


@dataclass(frozen=True)
class ObstructionReport:
    failed_order: int
    residual: Tuple[SuperPolynomial, ...]  # order-t component of each generator
    solved_prefix: Substitution

    def to_json(self):
        return {
            "order": self.failed_order,
            "residual": [render(r) for r in self.residual],
            "solved_prefix": self.solved_prefix.to_json(),
        }


@dataclass(frozen=True)
class HomogeneouslySplit:
    witness: Substitution

    def to_json(self):
        return {"result": "HomogeneouslySplit", "witness": self.witness.to_json()}


@dataclass(frozen=True)
class Obstructed:
    report: ObstructionReport

    def to_json(self):
        return {"result": "Obstructed", "obstruction": self.report.to_json()}


@dataclass(frozen=True)
class Exhausted:
    max_order: int
    solved_prefix: Substitution

    def to_json(self):
        return {
            "result": "Exhausted",
            "max_order": self.max_order,
            "solved_prefix": self.solved_prefix.to_json(),
        }


SearchResult = Union[HomogeneouslySplit, Obstructed, Exhausted]


def _order_unknowns(gr: Grading, t: int):
    """Correction terms that act linearly on the order-t components."""
    ne, no = gr.n_even, gr.n_odd
    out = []
    for sigma in range(ne):
        for I in itertools.combinations(range(no), t):
            for e in gr.basis(gr.difference(gr.even_weights[sigma], gr.odd_degree(I))):
                out.append((0, sigma, SuperPolynomial(ne, no, {(e, I): 1})))
    if t - 1 >= 3:
        for j in range(no):
            for K in itertools.combinations(range(no), t - 1):
                for e in gr.basis(gr.difference(gr.odd_weights[j], gr.odd_degree(K))):
                    out.append((1, j, SuperPolynomial(ne, no, {(e, K): 1})))
    return out


def _shifted(phi: Substitution, parity: int, slot: int, term: SuperPolynomial) -> Substitution:
    if parity == 0:
        return phi.replace(even={slot: phi.even_images[slot] + term})
    return phi.replace(odd={slot: phi.odd_images[slot] + term})


def substitution_weight_ok(job: VarietyJob, phi: Substitution) -> bool:
    gr = job.grading
    for mu, img in enumerate(phi.even_images):
        if img.parity() != 0 or gr.degree(img) != gr.even_weights[mu]:
            return False
    for j, img in enumerate(phi.odd_images):
        if img.is_zero() or img.parity() != 1 or gr.degree(img) != gr.odd_weights[j]:
            return False
    return True


def splitting_search(job: VarietyJob, max_order: Optional[int] = None) -> SearchResult:
    """Greedy exact search for phi = id mod J^2 with F(phi) free of odd variables.

    Each even order t is solved as an exact linear system in the corrections
    of theta-length t (even images) and t-1 (odd images), with lower orders
    already cleared.  An unsolvable system is reported with its residual.
    """
    gr = job.grading
    ne, no = gr.n_even, gr.n_odd
    phi = Substitution.identity(ne, no)
    start = homogeneous_order(job)
    if start == REDUCED:
        return HomogeneouslySplit(phi)
    top = no if max_order is None else max_order
    F = job.generators
    t = start
    while t <= no:
        if t > top:
            return Exhausted(top, phi)
        base = [apply(phi, f).component(t) for f in F]
        if all(b.is_zero() for b in base):
            t += 2
            continue
        system = SparseSystem()
        unknowns = _order_unknowns(gr, t)
        for parity, slot, term in unknowns:
            trial = _shifted(phi, parity, slot, term)
            entries = {}
            for a, f in enumerate(F):
                delta = apply(trial, f).component(t) - base[a]
                for mono, c in delta.terms.items():
                    entries[(a, mono)] = c
            system.add_column((parity, slot, term), entries)
        rhs = {}
        for a, b in enumerate(base):
            for mono, c in b.terms.items():
                rhs[(a, mono)] = -c
        system.set_rhs(rhs)
        sol = system.solve()
        if sol is None:
            return Obstructed(ObstructionReport(t, tuple(base), phi))
        for (parity, slot, term), v in zip(system.columns, sol):
            if v:
                phi = _shifted(phi, parity, slot, term.scale(v))
        if any(not apply(phi, f).component(t).is_zero() for f in F):
            raise ConsistencyError(f"order {t} not cleared by the solved system")
        t += 2
    for f in F:
        if apply(phi, f).odd_lengths() != [0]:
            raise ConsistencyError("search finished with theta-components left")
    if not substitution_weight_ok(job, phi):
        raise ConsistencyError("search witness does not preserve weights")
    return HomogeneouslySplit(phi)


# ---------------------------------------------------------------------------
# verdict

CITE_SPLITTING_LEMMA = "homogeneous splitting lemma"
CITE_POSITIVE = "positive-weight homogeneous non-splitting theorem"
CITE_QUADRIC = "smooth superspace quadric non-splitting theorem"
CITE_NORMAL_SECTION = "non-vanishing normal obstruction section theorem"
CITE_SNS = "supermanifold non-splitting theorem"
CITE_FORMAL = "formal normal section splitting criterion"
CITE_PRODUCT = "product quadric non-splitting corollary (super-Segre embedding)"
CITE_PLUMBING = "plumbing"


class Outcome(str, enum.Enum):
    SPLIT = "Split"
    HOMOGENEOUSLY_SPLIT = "HomogeneouslySplit"
    HOMOGENEOUSLY_NON_SPLIT = "HomogeneouslyNonSplit"
    NON_SPLIT = "NonSplit"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Reason:
    rule: str
    cite: str
    detail: str

    def to_json(self):
        return {"rule": self.rule, "cite": self.cite, "detail": self.detail}


@dataclass
class Verdict:
    outcome: Outcome
    reasons: List[Reason] = field(default_factory=list)
    witness: Optional[Substitution] = None
    obstruction: Optional[ObstructionReport] = None

    @property
    def rules_fired(self) -> List[str]:
        return [r.rule for r in self.reasons]

    @property
    def cites(self) -> List[str]:
        return [r.cite for r in self.reasons]

    def to_json(self):
        out = {
            "outcome": self.outcome.value,
            "reasons": [r.to_json() for r in self.reasons],
            "witness": self.witness.to_json() if self.witness is not None else None,
            "obstruction": None,
        }
        if self.obstruction is not None:
            out["obstruction"] = {
                "order": self.obstruction.failed_order,
                "residual": [render(r) for r in self.obstruction.residual],
            }
        return out


def _reduced_facts(job: VarietyJob, reasons: List[Reason]):
    """Smoothness and irreducibility of the reduced hypersurface, with provenance."""
    spec = job.spec
    g = job.generators[0].component(0)
    smooth = irreducible = False
    if g.is_zero():
        reasons.append(Reason("evidence", CITE_PLUMBING, "reduced part is zero"))
        return False, False
    s = smoothness_check(g, spec)
    if s is Smoothness.SMOOTH:
        smooth = True
        reasons.append(Reason("evidence", CITE_PLUMBING, f"reduced hypersurface {render(g)} is smooth (checked)"))
    elif job.assume_smooth:
        smooth = True
        reasons.append(Reason("evidence", CITE_PLUMBING, f"smoothness asserted by the job (check: {s.value})"))
    else:
        reasons.append(Reason("evidence", CITE_PLUMBING, f"smoothness check: {s.value}"))
    if smooth and spec.m >= 2:
        reasons.append(Reason(
            "evidence", CITE_PLUMBING,
            "reduced part irreducible: smooth hypersurfaces in P^m, m >= 2, are connected hence irreducible",
        ))
        return smooth, True
    irr = irreducibility_check(g, spec)
    if irr is Irreducibility.IRREDUCIBLE:
        irreducible = True
        reasons.append(Reason("evidence", CITE_PLUMBING, "reduced part irreducible (checked)"))
    elif job.assume_irreducible and irr is not Irreducibility.REDUCIBLE:
        irreducible = True
        reasons.append(Reason("evidence", CITE_PLUMBING, f"irreducibility asserted by the job (check: {irr.value})"))
    else:
        reasons.append(Reason("evidence", CITE_PLUMBING, f"irreducibility check: {irr.value}"))
    return smooth, irreducible


def _product_verdict(job: VarietyJob, reasons: List[Reason]) -> Verdict:
    diag = is_quadric(job)
    s1, s2 = job.specs
    if not job.is_hypersurface or not diag.is_quadric:
        reasons.append(Reason("rule7", CITE_PLUMBING, "product job is not a quadric hypersurface"))
        return Verdict(Outcome.INCONCLUSIVE, reasons)
    if not (s1.is_positive and s2.is_positive and s1.unit_even and s2.unit_even):
        reasons.append(Reason("rule7", CITE_PLUMBING, "product factors are not both positive with unit even weights"))
        return Verdict(Outcome.INCONCLUSIVE, reasons)
    sd = segre_data(s1, s2)
    if not all(b > 0 for b in sd.b2):
        raise ConsistencyError("Segre target of positive factors is not positive")
    reasons.append(Reason(
        "rule6", CITE_PRODUCT,
        f"bihomogeneous, homogeneously non-reduced quadric hypersurface; Segre target "
        f"P^{{{sd.m2}|{sd.n2}}} has positive odd weights {sorted(set(sd.b2))}",
    ))
    return Verdict(Outcome.NON_SPLIT, reasons)


def verdict(job: VarietyJob) -> Verdict:
    reasons: List[Reason] = []

    # rule 1: homogeneously reduced generators
    if not is_homogeneously_nonreduced(job):
        reasons.append(Reason(
            "rule1", CITE_SPLITTING_LEMMA,
            "generators contain no odd variables; read as: homogeneously split implies split",
        ))
        return Verdict(Outcome.SPLIT, reasons, witness=Substitution.identity(
            job.grading.n_even, job.grading.n_odd))

    if job.is_product:
        return _product_verdict(job, reasons)

    spec = job.spec
    order = homogeneous_order(job)
    positive = spec.is_positive
    outcome = Outcome.INCONCLUSIVE
    witness = None
    obstruction = None

    # rule 2: positive weights with odd weights dominating even ones
    search = splitting_search(job)
    if positive and spec.eq43:
        if isinstance(search, HomogeneouslySplit):
            raise ConsistencyError("splitting search split a positive homogeneously non-reduced job")
        reasons.append(Reason(
            "rule2", CITE_POSITIVE,
            f"odd weights {list(spec.b)} positive and >= even weights {list(spec.a)}; "
            f"generators homogeneously non-reduced (order {order})",
        ))
        outcome = Outcome.HOMOGENEOUSLY_NON_SPLIT
    if isinstance(search, Obstructed):
        obstruction = search.report
        reasons.append(Reason(
            "evidence", CITE_PLUMBING,
            f"splitting search obstructed at order {search.report.failed_order}",
        ))
    elif isinstance(search, HomogeneouslySplit):
        witness = search.witness
        reasons.append(Reason(
            "rule1", CITE_SPLITTING_LEMMA,
            "splitting search found a weight-preserving automorphism clearing all odd variables; "
            "read as: homogeneously split implies split",
        ))
        return Verdict(Outcome.SPLIT, reasons, witness=witness)

    hyper = job.is_hypersurface
    nonsplit = False
    if hyper and spec.unit_even and positive:
        f = job.generators[0]
        d = job.degrees()[0][0]
        smooth, irreducible = _reduced_facts(job, reasons)

        # rule 3: smooth quadric hypersurface
        diag = is_quadric(job)
        if diag.is_quadric and diag.pair_degree_matches and smooth and irreducible:
            reasons.append(Reason(
                "rule3", CITE_QUADRIC,
                f"quadric: theta-length <= 2, pair degrees {[Grading.show(w) for w in diag.pair_degrees]} = d = {d}",
            ))
            cert = normality_certificate(spec.m, spec.b, d) if spec.m >= 2 else None
            if cert is not None:
                reasons.append(Reason("evidence", CITE_PLUMBING, f"normality certificate: {cert.overall}"))
            nonsplit = True
        elif diag.is_quadric:
            reasons.append(Reason(
                "evidence", CITE_PLUMBING,
                f"quadric rule not applied (pair degree match={diag.pair_degree_matches}, "
                f"smooth={smooth}, irreducible={irreducible})",
            ))

        # rule 4: nonzero degree-2 normal section space
        if order == 2 and spec.m >= 2:
            h0 = quadric_normal_h0(spec.m, spec.b, d)
            cert = normality_certificate(spec.m, spec.b, d)
            if h0 > 0 and smooth and irreducible and cert.is_normal:
                reasons.append(Reason(
                    "rule4", f"{CITE_NORMAL_SECTION} + {CITE_SNS}",
                    f"sum of h^0(O(d - b_i - b_j)) = {h0} > 0, normal section of order 2 nonzero, "
                    f"embedding certified normal",
                ))
                nonsplit = True
            else:
                reasons.append(Reason(
                    "evidence", CITE_PLUMBING,
                    f"order-2 section rule not applied (h0={h0}, smooth={smooth}, "
                    f"irreducible={irreducible}, normality={cert.overall})",
                ))

        # rule 5: higher order, formal section
        if isinstance(order, int) and order > 2:
            s = normal_section_h0(spec.m, spec.b, d, order)
            if s == 0:
                reasons.append(Reason(
                    "rule5", CITE_FORMAL,
                    f"section space of order {order} vanishes; the normal section is formal",
                ))
                if nonsplit or outcome is Outcome.HOMOGENEOUSLY_NON_SPLIT:
                    raise ConsistencyError("formal-section rule contradicts a non-splitting rule")
                return Verdict(Outcome.SPLIT, reasons, witness=witness, obstruction=obstruction)
            reasons.append(Reason(
                "evidence", CITE_NORMAL_SECTION,
                f"order-{order} obstruction section space has dimension {s} > 0; "
                f"reported as evidence only (non-splitting is certified for order 2)",
            ))

    if nonsplit:
        if "rule2" not in [r.rule for r in reasons]:
            raise ConsistencyError("non-split verdict without homogeneous non-splitting")
        outcome = Outcome.NON_SPLIT
    if outcome is Outcome.INCONCLUSIVE:
        reasons.append(Reason("rule7", CITE_PLUMBING, "no rule applies; partial evidence attached"))
    return Verdict(outcome, reasons, witness=witness, obstruction=obstruction)


__all__ = [
    "REDUCED",
    "Exhausted",
    "Grading",
    "HomogeneouslySplit",
    "Irreducibility",
    "NormalSection",
    "ObstructionReport",
    "Obstructed",
    "Outcome",
    "QuadricDiagnostics",
    "Reason",
    "Smoothness",
    "VarietyJob",
    "Verdict",
    "extract_normal_section",
    "homogeneous_order",
    "irreducibility_check",
    "is_homogeneously_nonreduced",
    "is_quadric",
    "jacobian_membership",
    "jacobian_witness",
    "smoothness_check",
    "splitting_search",
    "verdict",
]
