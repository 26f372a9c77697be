"""
The discriminant inequality D·(D - 3K) - 4K² ≥ 0 for divisors with property (P),
checked by contracting (-1)-curves down to a minimal elliptic surface.

μ and ε are recomputed from the configuration at every stage; a user never
supplies them.
"""
import logging
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx

from curves.configuration import CurveConfiguration, LocalType, ReducedDivisor, validate
from curves.exceptions import BadEpsilon, InvalidConfiguration
from curves.services import (
    blow_down,
    canonical_degree,
    contraction_data,
    property_P,
    pullback_divisor,
    self_intersection,
)
from discriminant.certificates import A0Decision, CaseLabel, Certificate, InductionStep, increment
from discriminant.exceptions import (
    CensusViolation,
    ChainBroken,
    ExcludedCaseEncountered,
    InconsistentContext,
    InsufficientLocalData,
    MuOutOfRange,
    NotAlgebraicDimensionOne,
    NotAlgebraicDimensionZero,
    NotMinimal,
    PropertyPFails,
)
from fibers.services import check_elliptic_multiplicities, intersection_graph, is_tree_of_smooth_rationals
from surfaces.invariants import BundleInvariants, SurfaceModel
from surfaces.services import inequality_value, make_surface

logger = logging.getLogger(__name__)

MAX_MU = 3


def admissible_mu_eps(mu: int, eps: int) -> CaseLabel:
    if eps not in (0, 1):
        raise BadEpsilon(f"ε must be 0 or 1, got {eps}")
    if not 0 <= mu <= MAX_MU:
        raise MuOutOfRange(f"μ = {mu}; a reduced curve on an elliptic surface has multiplicity at most {MAX_MU}")
    if mu == 3:
        return CaseLabel.MU3_EXCLUDED
    if (mu, eps) == (2, 0):
        return CaseLabel.MU2EPS0_EXCLUDED
    # ε = 1 needs μ ≥ 2 under (P)
    if eps == 1 and mu < 2:
        return CaseLabel.PIMP_EXCLUDED
    return CaseLabel.ADMISSIBLE


def mueps_table() -> List[Dict]:
    """Every (μ, ε) in {0..3} × {0, 1} with its label, increment and (μ-ε)(μ-ε+3)."""
    rows = []
    for mu in range(MAX_MU + 1):
        for eps in (0, 1):
            rows.append({
                'mu': mu,
                'eps': eps,
                'case_label': admissible_mu_eps(mu, eps).value,
                'increment': increment(mu, eps),
                'bound': (mu - eps) * (mu - eps + 3),
            })
    return rows


def minimal_elliptic_base(cfg: CurveConfiguration, surface: SurfaceModel,
                          divisor: Optional[ReducedDivisor] = None) -> int:
    """
    Base of the induction: on a minimal surface with a(S) = 1 a (P)-divisor is
    vertical with D² = 0 and D·K = 0, so the inequality reads -4K² ≥ 0.
    """
    if not surface.minimal:
        raise NotMinimal("The base of the induction must be a minimal surface")
    if surface.alg_dim != 1:
        raise NotAlgebraicDimensionOne(f"The base must have algebraic dimension 1, got {surface.alg_dim}")
    divisor = cfg.full_divisor() if divisor is None else divisor
    cfg.check_divisor(divisor)
    if divisor.is_zero:
        return -4 * surface.k_squared

    result = property_P(cfg, divisor)
    if not result:
        raise PropertyPFails(
            f"Property (P) fails at {result.witness}: C·(D - C) = {result.witness_degree}", result.witness,
        )
    check_elliptic_multiplicities(cfg, divisor)
    d_squared = self_intersection(cfg, divisor)
    if d_squared != 0:
        raise CensusViolation(f"A (P)-divisor on a minimal elliptic surface has D² = {d_squared}")
    d_dot_k = canonical_degree(cfg, divisor)
    if d_dot_k != 0:
        raise CensusViolation(f"A (P)-divisor on a minimal elliptic surface has D·K = {d_dot_k}")
    return -4 * surface.k_squared


def _triple_point_through(cfg: CurveConfiguration, curves: Iterable[str]) -> bool:
    wanted = set(curves)
    return any(
        p.local_type is LocalType.TRIPLE_ORDINARY and set(p.curves) == wanted for p in cfg.points
    )


def classify_two_zero(cfg: CurveConfiguration, divisor: ReducedDivisor, c0: str) -> Tuple[str, str]:
    """
    Shape of the connected part of D through the image of c0 when μ = 2, ε = 0:
    an irreducible curve with a double point, two curves tangent there, or a
    cycle. Returns (sub-case, the component where (P) is contradicted).
    """
    touching = [(curve, value) for curve, value in cfg.neighbors(c0) if curve in divisor]
    if not touching:
        raise InsufficientLocalData(f"No component of D meets {c0}")
    graph = nx.Graph(intersection_graph(cfg, divisor))
    component = nx.node_connected_component(graph, touching[0][0])
    if any(curve not in component for curve, _ in touching):
        raise InsufficientLocalData(f"The curves of D through {c0} lie in different connected components")

    if len(component) == 1:
        curve, value = touching[0]
        if value == 2:
            return 'irreducible_double_point', curve

    if len(component) == 2 and len(touching) == 2 and all(v == 1 for _, v in touching):
        a, b = sorted(component)
        if cfg.intersection(a, b) == 1 and _triple_point_through(cfg, (a, b, c0)):
            return 'tangent_pair', a

    if len(touching) == 2 and all(v == 1 for _, v in touching):
        sub = intersection_graph(cfg, ReducedDivisor.of(component))
        simple = nx.Graph(sub)
        is_path = (
            nx.is_tree(simple)
            and sub.number_of_edges() == simple.number_of_edges()
            and max(d for _, d in simple.degree()) <= 2
            and all(cfg.node(c).rational_smooth for c in component)
        )
        ends = sorted(c for c, d in simple.degree() if d <= 1)
        if is_path and sorted(c for c, _ in touching) == ends:
            return 'cycle', ends[0]

    raise InsufficientLocalData(
        f"μ = 2, ε = 0 at {c0}: the local data of {sorted(component)} does not determine the case"
    )


def _contracted_surface(surface: SurfaceModel, minimal: bool) -> SurfaceModel:
    if surface.picard_rank < 1:
        raise ChainBroken("Picard rank would drop below zero")
    return make_surface(
        k_squared=surface.k_squared + 1,
        c2=surface.c2 - 1,
        picard_rank=surface.picard_rank - 1,
        alg_dim=surface.alg_dim,
        kodaira_dim=surface.kodaira_dim,
        minimal=minimal,
        kaehler=surface.kaehler,
    )


def _step(cfg: CurveConfiguration, divisor: ReducedDivisor, c0: str, index: int) -> InductionStep:
    if not cfg.has_node(c0):
        raise ChainBroken(f"Stage {index}: no curve {c0!r} to contract")
    node = cfg.node(c0)
    if node.self_int != -1 or not node.rational_smooth:
        raise ChainBroken(f"Stage {index}: {c0} is not a smooth rational (-1)-curve (C² = {node.self_int})")

    result = property_P(cfg, divisor)
    if not result:
        raise PropertyPFails(
            f"Stage {index}: property (P) fails at {result.witness} (C·(D - C) = {result.witness_degree})",
            result.witness,
        )

    mu, eps = contraction_data(cfg, divisor, c0)
    label = admissible_mu_eps(mu, eps)
    incident = sorted(curve for curve, _ in cfg.neighbors(c0) if curve in divisor)
    if label is CaseLabel.MU3_EXCLUDED:
        raise ExcludedCaseEncountered(
            f"Stage {index}: μ = 3 at {c0}; each of {', '.join(incident)} would have C·(D - C) = ε = {eps}",
            incident, label.value,
        )
    if label is CaseLabel.MU2EPS0_EXCLUDED:
        case, witness = classify_two_zero(cfg, divisor, c0)
        raise ExcludedCaseEncountered(
            f"Stage {index}: μ = 2, ε = 0 at {c0} ({case}); property (P) fails at {witness} unless {c0} is in D",
            [witness], case,
        )
    return InductionStep.for_pair(mu, eps, label, c0)


def verify_inductive(surface: SurfaceModel, cfg: CurveConfiguration, divisor: ReducedDivisor,
                     contractions: Iterable[str]) -> Certificate:
    """
    Contract `contractions` in order from (surface, cfg, D) and certify
    D·(D - 3K) - 4K² ≥ 0 on the top surface.
    """
    violations = validate(cfg)
    if violations:
        raise InvalidConfiguration(violations)
    cfg.check_divisor(divisor)
    contractions = list(contractions)
    if surface.minimal and contractions:
        raise ChainBroken("A minimal surface has no (-1)-curves to contract")

    top_cfg, top_divisor = cfg, divisor
    current = surface
    steps: List[InductionStep] = []
    for index, c0 in enumerate(contractions):
        steps.append(_step(cfg, divisor, c0, index))
        down = blow_down(cfg, c0)
        cfg, divisor = down.config, down.push(divisor)
        current = _contracted_surface(current, minimal=index == len(contractions) - 1)

    if not current.minimal:
        raise NotMinimal("The surface is not minimal and no contractions were given")
    leftover = sorted(n.id for n in cfg.nodes if n.self_int == -1 and n.rational_smooth)
    if leftover:
        raise NotMinimal(f"(-1)-curves remain after the chain: {', '.join(leftover)}")

    base_value = minimal_elliptic_base(cfg, current, divisor)

    # second path: compose pullbacks from (D'², D'·K') = (0, 0)
    d_squared, d_dot_k = 0, 0
    for step in reversed(steps):
        d_squared, d_dot_k = pullback_divisor(d_squared, d_dot_k, step.mu, step.eps)
    direct_square = self_intersection(top_cfg, top_divisor)
    if d_squared != direct_square:
        raise ChainBroken(f"Pullbacks give D² = {d_squared} but the configuration gives {direct_square}")
    if not top_divisor.is_zero and canonical_degree(top_cfg, top_divisor) != d_dot_k:
        raise ChainBroken(
            f"Pullbacks give D·K = {d_dot_k} but adjunction gives {canonical_degree(top_cfg, top_divisor)}"
        )

    certificate = Certificate.build(steps, base_value, top_d_squared=d_squared, top_d_dot_k=d_dot_k)
    expected = inequality_value(surface, d_squared, d_dot_k)
    if certificate.final_value != expected:
        raise ChainBroken(f"Certificate total {certificate.final_value} != D·(D - 3K) - 4K² = {expected}")

    logger.info(
        f"Certified {len(steps)} contractions: base {base_value}, final {certificate.final_value}, "
        f"verdict {certificate.verdict}"
    )
    return certificate


def decide_a0(surface: SurfaceModel, cfg: CurveConfiguration, divisor: ReducedDivisor) -> A0Decision:
    """
    With a(S) = 0 every connected curve is a tree of smooth rational curves,
    so a nonzero D never has property (P).
    """
    if surface.alg_dim != 0:
        raise NotAlgebraicDimensionZero(f"Expected algebraic dimension 0, got {surface.alg_dim}")
    cfg.check_divisor(divisor)
    if divisor.is_zero:
        return A0Decision(True)
    if not is_tree_of_smooth_rationals(cfg, divisor):
        raise InconsistentContext(
            "Curves on a surface with a(S) = 0 form trees of smooth rational curves; "
            "this divisor has a cycle, a multiple intersection or a singular component"
        )
    result = property_P(cfg, divisor)
    if result.holds:
        raise InconsistentContext("A tree of smooth rational curves with property (P)")
    return A0Decision(False, result.witness, result.witness_degree)


def discriminant_numbers(bundle: BundleInvariants) -> Tuple[int, int]:
    """(Δ², Δ·K) for Δ ∈ |det E*|."""
    return bundle.c1_sq, -bundle.c1_dot_K


def discriminant_value(surface: SurfaceModel, bundle: BundleInvariants) -> int:
    return inequality_value(surface, *discriminant_numbers(bundle))
