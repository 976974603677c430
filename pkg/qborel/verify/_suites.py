"""
The catalogue of verification suites.

A suite turns a :class:`VerifyConfig` into independent checks, drawing all
of its random samples up front so that the results do not depend on the
order in which the checks run.
"""

from __future__ import annotations
from typing import Any, Callable, Sequence
import functools
import itertools
import logging
import dataclasses
import numpy as np
from qborel import mixins
from qborel import scalars
from qborel import roots
from qborel import algebras
from qborel import representations
from qborel import polq
from qborel import amplified
from qborel import galois
from qborel import hilbert
from qborel import findim
from ._config import (
    EXACT_TOLERANCE,
    NUMERIC_TOLERANCE,
    UNITARITY_TOLERANCE,
    VerifyConfig,
)

__all__ = [
    "Outcome",
    "Check",
    "Suite",
    "SUITES",
    "ALIASES",
    "resolve_suite",
    "list_suites",
]

logger = logging.getLogger(__name__)

Outcome = float | tuple[float, dict[str, Any]] | dict[str, float]
"""
What a check returns: a residual, a residual with reported values, or a
residual for each of several named identities.
"""


@dataclasses.dataclass(eq=False, repr=False)
class Check(
    mixins.Printable,
):
    """A deferred check with the tolerance its residual is held to."""

    description: str
    run: Callable[[], Outcome] = dataclasses.field(repr=False)
    tolerance: float = NUMERIC_TOLERANCE
    exact: bool = False


@dataclasses.dataclass(eq=False, repr=False)
class Suite(
    mixins.Printable,
):
    name: str
    anchor: str
    """The statement the suite verifies."""

    build: Callable[[VerifyConfig], list[Check]] = dataclasses.field(repr=False)


def _failures(predicate: Callable[..., bool], samples: Sequence[tuple]) -> float:
    """The number of argument tuples for which ``predicate`` does not hold."""
    return float(sum(not predicate(*args) for args in samples))


def _exact(description: str, predicate: Callable[..., bool], samples: Sequence[tuple]) -> Check:
    return Check(
        description=description,
        run=functools.partial(_failures, predicate, tuple(samples)),
        tolerance=EXACT_TOLERANCE,
        exact=True,
    )


def _pairs(samples: Sequence) -> list[tuple]:
    return list(zip(samples[:-1], samples[1:]))


def _hopf_generators(algebra: algebras.AbstractPresentation) -> list[algebras.AlgebraElement]:
    datum = algebra.datum
    result = [algebra.one()]
    for r in range(datum.rank):
        result += [algebra.e(r), algebra.f(r)]
    for family in range(len(algebra.families)):
        for omega in datum.fundamental_weights:
            result.append(algebra.cartan(family, omega))
    return result


def _coassociative(a) -> bool:
    delta = algebras.coproduct(a)
    return (delta.map_leg(0, algebras.coproduct) - delta.map_leg(1, algebras.coproduct)).is_zero


def _counital(a) -> bool:
    delta = algebras.coproduct(a)
    for leg in (0, 1):
        collapsed = delta.map_leg(leg, lambda x: x.presentation.scalar(algebras.counit(x)))
        if not (collapsed.multiply_legs() - a).is_zero:
            return False
    return True


def _antipodal(a) -> bool:
    delta = algebras.coproduct(a)
    expected = a.presentation.scalar(algebras.counit(a))
    return all(
        (delta.map_leg(leg, algebras.antipode).multiply_legs() - expected).is_zero
        for leg in (0, 1)
    )


def _multiplicative(a, b) -> bool:
    return (algebras.coproduct(a * b) - algebras.coproduct(a) * algebras.coproduct(b)).is_zero


def _anti_multiplicative(a, b) -> bool:
    return (algebras.antipode(a * b) - algebras.antipode(b) * algebras.antipode(a)).is_zero


def _star_comultiplicative(a) -> bool:
    return (algebras.coproduct(algebras.star(a)) - algebras.star(algebras.coproduct(a))).is_zero


def _star_involutive(a) -> bool:
    return (algebras.star(algebras.star(a)) - a).is_zero


def _star_anti_multiplicative(a, b) -> bool:
    return (algebras.star(a * b) - algebras.star(b) * algebras.star(a)).is_zero


def _unitary_antipode(a) -> bool:
    involutive = (algebras.unitary_antipode(algebras.unitary_antipode(a)) - a).is_zero
    flipped = algebras.coproduct(algebras.unitary_antipode(a)) - algebras.unitary_antipode(algebras.coproduct(a).flip())
    return involutive and flipped.is_zero


def _serre(algebra, r: int, s: int) -> bool:
    return (
        algebras.serre_polynomial(r, s, algebra.e(r), algebra.e(s)).is_zero
        and algebras.serre_polynomial(r, s, algebra.f(r), algebra.f(s)).is_zero
    )


def _compact_relation(algebra, r: int, s: int) -> bool:
    datum = algebra.datum
    e_star = algebras.star(algebra.e(s))
    factor = scalars.q_power(-datum.pair(datum.simple_roots[s], datum.simple_roots[r]))
    result = algebra.e(r) * e_star - e_star * algebra.e(r) * factor
    if r == s:
        qr = scalars.q_r(datum, r)
        k2 = algebra.k(roots.scale_weight(2, datum.simple_roots[r]))
        result = result - (k2 - algebra.one()) / (qr - 1 / qr)
    return result.is_zero


def _skew_generators(algebra, r: int, s: int) -> bool:
    qr = scalars.q_r(algebra.datum, r)
    expected = 1 / (1 / qr - qr) if r == s else 0
    return algebras.skew_pair(algebra.e(r), algebra.f(s)) == expected


def _skew_left(x, y, z) -> bool:
    algebra = x.presentation
    expected = 0
    for (x1, x2), c in algebras.coproduct(x).terms.items():
        first = algebras.skew_pair(algebra.element({x2: 1}), y)
        if first:
            expected += c * first * algebras.skew_pair(algebra.element({x1: 1}), z)
    return algebras.skew_pair(x, y * z) == expected


def _skew_right(x, y, z) -> bool:
    algebra = x.presentation
    expected = 0
    for (z1, z2), c in algebras.coproduct(z).terms.items():
        first = algebras.skew_pair(x, algebra.element({z1: 1}))
        if first:
            expected += c * first * algebras.skew_pair(y, algebra.element({z2: 1}))
    return algebras.skew_pair(x * y, z) == expected


def _interchange(x, y) -> bool:
    return algebras.drinfeld_interchange_residual(x, y).is_zero


def _canonical_map(config: VerifyConfig) -> float:
    result = galois.canonical_map_rank(config.root_datum, degree=1, t=config.q)
    logger.debug("canonical map %s", result)
    return float(not result.is_injective)


def _hopf_axioms(config: VerifyConfig) -> list[Check]:
    datum = config.root_datum
    rng = config.rng()
    envelope = algebras.quantum_envelope(datum)
    double = algebras.drinfeld_double(datum)
    result = []
    for algebra in [envelope, double]:
        name = type(algebra).__name__
        samples = _hopf_generators(algebra) + [
            algebras.random_element(algebra, rng, degree=3, num_terms=1) for _ in range(3)
        ]
        singles = [(a,) for a in samples]
        result += [
            _exact(f"{name}: coassociativity", _coassociative, singles),
            _exact(f"{name}: counit", _counital, singles),
            _exact(f"{name}: antipode", _antipodal, singles),
            _exact(f"{name}: multiplicative coproduct", _multiplicative, _pairs(samples)),
            _exact(f"{name}: anti-multiplicative antipode", _anti_multiplicative, _pairs(samples)),
            _exact(f"{name}: star commutes with the coproduct", _star_comultiplicative, singles),
        ]
    for factory in [algebras.heisenberg_double, algebras.heisenberg_double_tilde, algebras.quantum_envelope]:
        algebra = factory(datum)
        name = type(algebra).__name__
        samples = _hopf_generators(algebra) + [
            algebras.random_element(algebra, rng, degree=3, num_terms=1) for _ in range(2)
        ]
        result += [
            _exact(f"{name}: star is involutive", _star_involutive, [(a,) for a in samples]),
            _exact(f"{name}: star is anti-multiplicative", _star_anti_multiplicative, _pairs(samples)),
        ]

    indices = list(itertools.product(range(datum.rank), repeat=2))
    result += [
        _exact("unitary antipode", _unitary_antipode, [(a,) for a in _hopf_generators(envelope)]),
        _exact("quantum Serre relations", functools.partial(_serre, envelope), [(r, s) for r, s in indices if r != s]),
        _exact("compact real form relations", functools.partial(_compact_relation, envelope), indices),
        _exact("skew pairing of generators", functools.partial(_skew_generators, double), indices),
    ]

    uppers = [double.e(r) for r in range(datum.rank)] + [double.k(datum.rho)]
    lowers = [double.f(r) for r in range(datum.rank)] + [double.l(datum.rho)]
    result.append(_exact("Drinfeld interchange", _interchange, list(itertools.product(uppers, lowers))))

    def upper(degree: int):
        return algebras.random_element(double, rng, degree=degree, families=(0,), letters="E")

    def lower(degree: int):
        return algebras.random_element(double, rng, degree=degree, families=(1,), letters="F")

    left = [(upper(3), lower(2), lower(2)) for _ in range(3)]
    right = [(upper(2), upper(2), lower(3)) for _ in range(3)]
    result += [
        _exact("skew pairing is a Hopf pairing on the left", _skew_left, left),
        _exact("skew pairing is a Hopf pairing on the right", _skew_right, right),
        Check(
            description="canonical map is injective in degree one",
            run=functools.partial(_canonical_map, config),
            tolerance=EXACT_TOLERANCE,
            exact=True,
        ),
    ]
    return result


def _su2_braid(q: str, n: int) -> float:
    rep = representations.build_irrep(roots.datum_from_label("A1"), (n,), "numeric", q)
    expected = np.zeros(rep.dimension)
    expected[-1] = (-1) ** n * float(scalars.rational(q)) ** (n / 2)
    return float(np.max(np.abs(representations.braid_operator(rep, 0)[:, 0] - expected)))


def _longest_braid(config: VerifyConfig, weight: roots.Weight) -> float:
    datum = config.root_datum
    rep = representations.build_irrep(datum, weight, "numeric", config.q)
    words = roots.reduced_words(datum)
    first = representations.longest_braid_operator(rep, words[0])
    return max(
        (float(np.max(np.abs(representations.longest_braid_operator(rep, w) - first))) for w in words[1:]),
        default=0.0,
    )


def _lowest_weight(config: VerifyConfig, weight: roots.Weight) -> float:
    rep = representations.build_irrep(config.root_datum, weight, "numeric", config.q)
    vector = representations.lowest_weight_vector(rep)
    residual = abs(np.linalg.norm(vector) - 1)
    for f in rep.f:
        residual = max(residual, float(np.max(np.abs(f @ vector), initial=0)))
    return residual


def _nonzero_weights(config: VerifyConfig) -> list[roots.Weight]:
    datum = config.root_datum
    return [w for w in roots.dominant_weights(datum, max(config.rep_cutoff, 1)) if tuple(w) != datum.zero]


def _braid(config: VerifyConfig) -> list[Check]:
    result = [
        Check(
            description=f"T xi_{n} = (-1)^{n} q^({n}/2) xi_-{n}",
            run=functools.partial(_su2_braid, config.q, n),
        )
        for n in range(7)
    ]
    for weight in _nonzero_weights(config):
        result += [
            Check(
                description=f"T_w0 on V{weight} is independent of the reduced word",
                run=functools.partial(_longest_braid, config, weight),
            ),
            Check(
                description=f"lowest weight vector of V{weight}",
                run=functools.partial(_lowest_weight, config, weight),
            ),
        ]
    return result


def _oracle(config: VerifyConfig) -> polq.InvariantFunctionals:
    return polq.haar_invariance_oracle(config.algebra, cutoff=max(config.rep_cutoff, 1))


def _haar_unique(config: VerifyConfig) -> float:
    return float(not _oracle(config).is_unique)


def _oracle_agrees(config: VerifyConfig, samples: Sequence[polq.MatrixCoeffElement]) -> float:
    oracle = _oracle(config)
    return max((abs(oracle(x) - polq.haar(x)) for x in samples), default=0.0)


def _haar_invariant(config: VerifyConfig, samples: Sequence[polq.MatrixCoeffElement]) -> float:
    algebra = config.algebra
    envelope = algebras.quantum_envelope(algebra.datum)
    generators = [envelope.k(algebra.datum.rho)]
    for r in range(algebra.datum.rank):
        generators += [envelope.e(r), envelope.f(r), envelope.e(r) * envelope.f(r)]
    residual = 0.0
    for x in samples:
        value = polq.haar(x)
        scale = max(abs(value), 1.0)
        for X in generators:
            expected = scalars.evaluate(algebras.counit(X), algebra.q) * value
            residual = max(
                residual,
                abs(polq.haar(polq.left_translate(X, x)) - expected) / scale,
                abs(polq.haar(polq.right_translate(x, X)) - expected) / scale,
            )
    return residual


def _orthogonality(config: VerifyConfig) -> tuple[float, dict[str, Any]]:
    constants = polq.orthogonality_constants(config.algebra, cutoff=max(config.rep_cutoff, 1))
    residual = 0.0
    values = {}
    for weight, c in constants.items():
        residual = max(residual, c.spread, c.haar_deviation, abs(c.constant / c.expected - 1))
        values[f"c{tuple(weight)}"] = float(c.constant)
    return residual, values


def _modular(pairs: Sequence[tuple]) -> float:
    residual = 0.0
    for x, y in pairs:
        expected = polq.haar(polq.product(y, x))
        value = polq.haar(polq.product(x, polq.modular_automorphism(y)))
        residual = max(residual, abs(value - expected) / max(abs(expected), 1.0))
    return residual


def _polq(config: VerifyConfig) -> list[Check]:
    algebra = config.algebra
    rng = config.rng()
    bound = max(config.rep_cutoff, 1)
    samples = [polq.random_element(algebra, rng, bound=bound) for _ in range(config.samples)]
    pairs = [(polq.random_element(algebra, rng), polq.random_element(algebra, rng)) for _ in range(3)]
    return [
        Check(
            description="invariant functional is unique",
            run=functools.partial(_haar_unique, config),
            tolerance=EXACT_TOLERANCE,
            exact=True,
        ),
        Check(
            description="invariance solver agrees with the Haar state",
            run=functools.partial(_oracle_agrees, config, samples),
        ),
        Check(
            description="Haar state is invariant under translations",
            run=functools.partial(_haar_invariant, config, samples[:3]),
        ),
        Check(
            description="orthogonality constants are the inverse quantum dimensions",
            run=functools.partial(_orthogonality, config),
        ),
        Check(
            description="modular automorphism of the Haar state",
            run=functools.partial(_modular, pairs),
        ),
    ]


@functools.lru_cache(maxsize=None)
def _system(group: str) -> findim.MUSystem:
    return findim.build_system(findim.parse_group(group))


def _identities(checks: Sequence[findim.IdentityCheck]) -> dict[str, float]:
    return {check.name: check.residual for check in checks}


def _ergodicity(group: str) -> tuple[float, dict[str, Any]]:
    system = _system(group)
    n = system.order
    dimension = findim.fixed_point_dimension(findim.heisenberg_double(system).alpha, n, n * n)
    return float(abs(dimension - 1)), dict(fixed_point_dimension=dimension)


def _findim(config: VerifyConfig) -> list[Check]:
    group = config.group
    seed = config.seed
    return [
        Check(
            description="multiplicative unitaries",
            run=lambda: _identities(findim.system_checks(_system(group))),
            tolerance=UNITARITY_TOLERANCE,
        ),
        Check(
            description="Galois unitary of the Heisenberg double",
            run=lambda: _identities(findim.galois_checks(_system(group))),
            tolerance=UNITARITY_TOLERANCE,
        ),
        Check(
            description="adjoint coaction",
            run=lambda: _identities(findim.adjoint_checks(_system(group), np.random.default_rng(seed))),
            tolerance=UNITARITY_TOLERANCE,
        ),
        Check(
            description="ergodicity of the Heisenberg double",
            run=functools.partial(_ergodicity, group),
            tolerance=EXACT_TOLERANCE,
            exact=True,
        ),
    ]


def _biduality_identities(group: str) -> dict[str, float]:
    report = findim.biduality_check(_system(group))
    return {
        "Galois unitaries are unitary": report.unitarity,
        "adjoint coaction from the Galois unitary": report.adjoint,
        "Ad of Ad is alpha": report.biduality,
    }


def _biduality_ergodic(group: str) -> tuple[float, dict[str, Any]]:
    report = findim.biduality_check(_system(group))
    residual = abs(report.fixed_points - 1) + abs(report.adjoint_fixed_points - 1)
    return float(residual), dict(fixed_points=report.fixed_points, adjoint_fixed_points=report.adjoint_fixed_points)


def _weights_unique(group: str) -> tuple[float, dict[str, Any]]:
    report = findim.weight_correspondence_check(_system(group))
    residual = abs(report.num_functionals - 1) + abs(report.num_adjoint_functionals - 1)
    return float(residual), dict(
        num_functionals=report.num_functionals,
        num_adjoint_functionals=report.num_adjoint_functionals,
    )


def _weights_trace(group: str) -> float:
    return findim.weight_correspondence_check(_system(group)).residual


def _biduality(config: VerifyConfig) -> list[Check]:
    group = config.group
    return [
        Check(
            description="biduality",
            run=functools.partial(_biduality_identities, group),
            tolerance=UNITARITY_TOLERANCE,
        ),
        Check(
            description="both coactions are ergodic",
            run=functools.partial(_biduality_ergodic, group),
            tolerance=EXACT_TOLERANCE,
            exact=True,
        ),
        Check(
            description="invariant weights are unique",
            run=functools.partial(_weights_unique, group),
            tolerance=EXACT_TOLERANCE,
            exact=True,
        ),
        Check(
            description="invariant weights are the trace",
            run=functools.partial(_weights_trace, group),
        ),
    ]


def _volume(algebra: polq.Polq) -> float:
    datum = algebra.datum
    return float(np.prod([1 - algebra.q_power(2 * datum.pair(datum.rho, beta)) for beta in datum.positive_roots]))


def _truncation(algebra: polq.Polq, cutoff: int) -> float:
    """The relative error of the Fock window, a sum of geometric tails."""
    datum = algebra.datum
    return float(sum(algebra.q_power(2 * cutoff * datum.pair(datum.rho, beta)) for beta in datum.positive_roots))


def _psi_one(config: VerifyConfig, space: hilbert.TruncatedSpace) -> tuple[float, dict[str, Any]]:
    algebra = config.algebra
    result = hilbert.haar_trace_formula(algebra.one(), space)
    expected = _volume(algebra)
    residual = abs(result.displayed - expected) / expected
    values = {
        "psi(1)": float(result.displayed.real),
        "raw": float(result.raw.real),
        "rescaling": result.rescaling,
        "expected": expected,
        "tail": result.tail,
    }
    return residual, values


def _below_two_rho(algebra: polq.Polq) -> list[roots.Weight]:
    bound = roots.scale_weight(2, algebra.datum.rho)
    weights = roots.dominant_weights(algebra.datum, max(bound))
    return [w for w in weights if all(a <= b for a, b in zip(w, bound))]


def _units(algebra: polq.Polq, on_torus: bool) -> list[tuple[roots.Weight, int, int]]:
    """Matrix units up to :math:`2\\rho`, split by whether the left weight vanishes."""
    zero = algebra.datum.zero
    result = []
    for weight in _below_two_rho(algebra):
        rep = algebra.rep(weight)
        for i, left in enumerate(rep.weights):
            if (left == zero) == on_torus:
                result += [(weight, i, j) for j in range(rep.dimension)]
    return result


def _trace_matches_haar(config: VerifyConfig, space: hilbert.TruncatedSpace) -> float:
    algebra = config.algebra
    oracle = polq.haar_invariance_oracle(algebra, cutoff=2)
    residual = 0.0
    for weight, i, j in _units(algebra, on_torus=True):
        u = algebra.unit(weight, i, j)
        value = hilbert.haar_trace_formula(u, space).normalized
        residual = max(residual, abs(value - oracle(u)))
    return residual


def _off_torus(config: VerifyConfig, space: hilbert.TruncatedSpace, weight: roots.Weight, i: int, j: int) -> bool:
    algebra = config.algebra
    return hilbert.haar_trace_formula(algebra.unit(weight, i, j), space).raw == 0


def _haar_trace(config: VerifyConfig) -> list[Check]:
    algebra = config.algebra
    cutoff = config.cutoff(40, 14)
    space = hilbert.TruncatedSpace(datum=algebra.datum, cutoff=cutoff)
    tolerance = NUMERIC_TOLERANCE + _truncation(algebra, cutoff)
    # coefficients up to 2 rho are exact only below the top occupations
    shift = sum(roots.scale_weight(2, algebra.datum.rho))
    unit_tolerance = NUMERIC_TOLERANCE + _truncation(algebra, max(cutoff - shift, 1))
    return [
        Check(
            description="trace formula at the unit",
            run=functools.partial(_psi_one, config, space),
            tolerance=tolerance,
        ),
        Check(
            description="trace formula agrees with the Haar state",
            run=functools.partial(_trace_matches_haar, config, space),
            tolerance=unit_tolerance,
        ),
        _exact(
            "trace formula vanishes off the torus",
            functools.partial(_off_torus, config, space),
            _units(algebra, on_torus=False),
        ),
    ]


def _window_checks(checks: Sequence[hilbert.WindowCheck]) -> dict[str, float]:
    return {check.name: check.residual for check in checks}


def _commutation(config: VerifyConfig) -> list[Check]:
    algebra = config.algebra
    datum = algebra.datum
    space = hilbert.TruncatedSpace(datum=datum, cutoff=config.cutoff(30, 10), radius=config.p_window)
    generation = hilbert.TruncatedSpace(datum=datum, cutoff=config.cutoff(5, 3), radius=max(config.p_window, 3))
    return [
        Check(
            description="relations of the Heisenberg double",
            run=lambda: _window_checks(hilbert.heisenberg_relation_checks(algebra, space)),
        ),
        Check(
            description="generators reach the localized algebra",
            run=lambda: hilbert.generation_check(algebra, generation, degree=1, bound=1).residual,
        ),
    ]


def _layer(algebra: polq.Polq, x: polq.MatrixCoeffElement) -> amplified.AmplifiedElement:
    zero = algebra.datum.zero
    return amplified.AmplifiedElement(
        algebra=algebra,
        flavor="0",
        terms={(zero, zero, amplified.delta_atom(zero)): x},
    )


def _compact_samples(config: VerifyConfig, rng: np.random.Generator) -> list[amplified.AmplifiedElement]:
    algebra = config.algebra
    weights = roots.dominant_weights(algebra.datum, config.rep_cutoff)
    result = []
    for _ in range(config.samples):
        weight = weights[rng.integers(len(weights))]
        result.append(_layer(algebra, polq.random_element(algebra, rng, weights=[weight])))
    return result


def _translation_residual(
    x: amplified.AmplifiedElement,
    generators: Sequence[algebras.AlgebraElement],
    space: hilbert.TruncatedSpace,
) -> float:
    return max(hilbert.translation_equals_adjoint_check(x, X, space).residual for X in generators)


def _translation(config: VerifyConfig) -> list[Check]:
    algebra = config.algebra
    datum = algebra.datum
    rng = config.rng()
    double = algebras.drinfeld_double(datum)
    space = hilbert.TruncatedSpace(datum=datum, cutoff=config.cutoff(6, 3), radius=config.p_window)
    generators = [double.e(r) for r in range(datum.rank)] + [double.f(r) for r in range(datum.rank)]
    generators += [double.k(omega) for omega in datum.fundamental_weights]
    generators += [double.l(omega) for omega in datum.fundamental_weights]
    samples = _compact_samples(config, rng)
    words = [algebras.random_element(double, rng, degree=2, num_terms=1) for _ in samples]
    return [
        Check(
            description=f"right translation of sample {i} is the adjoint action",
            run=functools.partial(_translation_residual, x, generators + [word], space),
        )
        for i, (x, word) in enumerate(zip(samples, words))
    ]


def _intertwiner_residual(
    x: amplified.AmplifiedElement,
    generators: Sequence[algebras.AlgebraElement],
    space: hilbert.TruncatedSpace,
) -> float:
    cover = _layer(x.algebra, x.algebra.one())
    return max(hilbert.intertwiner_check(x, X, cover, space).residual for X in generators)


def _intertwiner(config: VerifyConfig) -> list[Check]:
    algebra = config.algebra
    datum = algebra.datum
    heisenberg = algebras.heisenberg_double(datum)
    space = hilbert.TruncatedSpace(datum=datum, cutoff=config.cutoff(6, 3), radius=config.p_window)
    generators = [heisenberg.e(r) for r in range(datum.rank)] + [heisenberg.f(r) for r in range(datum.rank)]
    generators += [heisenberg.k(omega) for omega in datum.fundamental_weights]
    generators += [heisenberg.l(omega) for omega in datum.fundamental_weights]
    return [
        Check(
            description=f"coaction intertwines the adjoint action on sample {i}",
            run=functools.partial(_intertwiner_residual, x, generators, space),
        )
        for i, x in enumerate(_compact_samples(config, config.rng()))
    ]


def _coaction_matrix(config: VerifyConfig) -> list[Check]:
    algebra = config.algebra
    space = hilbert.TruncatedSpace(datum=algebra.datum, cutoff=config.cutoff(6, 3), radius=config.p_window)
    return [
        Check(
            description="coaction on generators",
            run=lambda: _window_checks(hilbert.coaction_matrix_check(algebra, space, config.rep_cutoff)),
        ),
    ]


def _contents(rank: int, height: int) -> list[tuple[int, ...]]:
    return [c for c in itertools.product(range(height + 1), repeat=rank) if sum(c) == height]


def _gram_matches(datum: roots.RootDatum, height: int) -> float:
    failures = 0
    for content in _contents(datum.rank, height):
        words = algebras.serre_basis(datum, content).basis
        gram = hilbert.highest_weight_gram(datum, words)
        skew = hilbert.skew_pairing_gram(datum, words)
        failures += sum(g != s for g_row, s_row in zip(gram, skew) for g, s in zip(g_row, s_row))
    return float(failures)


def _gram_fock(config: VerifyConfig, height: int) -> float:
    algebra = config.algebra
    datum = algebra.datum
    space = hilbert.TruncatedSpace(datum=datum, cutoff=height + 1)
    vacuum = np.zeros(space.fock().dimension)
    vacuum[0] = 1
    residual = 0.0
    for content in _contents(datum.rank, height):
        words = algebras.serre_basis(datum, content).basis
        vectors = []
        for w in words:
            operator = hilbert.fock_rep(algebra, [(r, True) for r in reversed(w)], space)
            if not operator.valid[0]:
                raise hilbert.HilbertModelError(f"the Fock window of cutoff {space.cutoff} is too small for {w}")
            vectors.append(operator.matrix @ vacuum)
        gram = hilbert.highest_weight_gram(datum, words)
        for i, v in enumerate(vectors):
            for j, u in enumerate(vectors):
                expected = scalars.evaluate(gram[i][j], algebra.q)
                residual = max(residual, abs(np.vdot(v, u) - expected) / max(abs(expected), 1.0))
    return residual


def _highest_weight(config: VerifyConfig) -> list[Check]:
    datum = config.root_datum
    bound = {1: 6, 2: 4}.get(datum.rank, 3)
    result = [
        Check(
            description=f"Gram matrix equals the skew pairing at height {height}",
            run=functools.partial(_gram_matches, datum, height),
            tolerance=EXACT_TOLERANCE,
            exact=True,
        )
        for height in range(1, bound + 1)
    ]
    result += [
        Check(
            description=f"Gram matrix is realized in the Fock window at height {height}",
            run=functools.partial(_gram_fock, config, height),
        )
        for height in range(1, min(bound, 3) + 1)
    ]
    return result


SUITES: dict[str, Suite] = {
    suite.name: suite
    for suite in [
        Suite(
            name="hopf-axioms",
            anchor="Hopf structure of the quantized enveloping algebra and of its Drinfeld double",
            build=_hopf_axioms,
        ),
        Suite(
            name="braid",
            anchor="Lusztig braid operators on type-I representations",
            build=_braid,
        ),
        Suite(
            name="polq",
            anchor="Haar state and orthogonality relations of the quantum function algebra",
            build=_polq,
        ),
        Suite(
            name="findim",
            anchor="multiplicative unitaries of a finite abelian group and the Heisenberg double",
            build=_findim,
        ),
        Suite(
            name="haar-trace",
            anchor="trace formula for the Haar state on the big cell",
            build=_haar_trace,
        ),
        Suite(
            name="commutation",
            anchor="commutation relations of the Heisenberg double inside the Galois object",
            build=_commutation,
        ),
        Suite(
            name="translation",
            anchor="right translations are the adjoint action on the Galois object",
            build=_translation,
        ),
        Suite(
            name="intertwiner",
            anchor="the coaction intertwines the adjoint action",
            build=_intertwiner,
        ),
        Suite(
            name="coaction-matrix",
            anchor="the coaction of the Heisenberg double as operator identities",
            build=_coaction_matrix,
        ),
        Suite(
            name="highest-weight",
            anchor="uniqueness of the highest weight representation of the Fock algebra",
            build=_highest_weight,
        ),
        Suite(
            name="biduality",
            anchor="biduality of the adjoint coaction and its invariant weights",
            build=_biduality,
        ),
    ]
}
"""Every suite by name, in the order they run."""

ALIASES: dict[str, str] = {
    "lemcomheis": "commutation",
    "corlhdblhd": "translation",
    "theoadjtran": "intertwiner",
    "propadconc": "coaction-matrix",
    "theounique": "highest-weight",
}
"""Alternative names of some suites, mapped to the names in :data:`SUITES`."""


def resolve_suite(name: str) -> str:
    """The name in :data:`SUITES` of a suite name or alias."""
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}, expected one of {[*SUITES, *ALIASES]}")
    return name


def list_suites() -> dict[str, str]:
    """The name and anchor of every suite, followed by the aliases."""
    result = {name: suite.anchor for name, suite in SUITES.items()}
    for alias, name in ALIASES.items():
        result[alias] = f"{SUITES[name].anchor} (alias of {name})"
    return result
