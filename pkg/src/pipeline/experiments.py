"""
Experiment registry.

Each experiment kind expands a validated ExperimentConfig into independent
CheckTasks, one per (group, sample). A task owns its random generator,
seeded from (seed, group index, sample index, family index), so results do
not depend on the order in which tasks run.
"""
import logging
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Dict, List, Optional

import numpy as np

from ..adjoint import (ad_exp_residual, ad_series, constricted_probe, groenwall_check, groenwall_scalar_check,
                       groenwall_scalar_family, omori_converse_residual, omori_transport,
                       submultiplicativity_violation)
from ..calculus import (directional_derivative_at_zero, duhamel, duhamel_slope, evol_differential,
                        evol_differential_check, param_derivative, param_derivative_slope, random_family)
from ..config.experiment_config import ExperimentConfig
from ..config.settings import get_settings
from ..curves import Curve, FunctionCurve
from ..evolution import (abelian_closed_form_residual, concat_residual, convergence_orders, evolve,
                         hom_transport_residual, inverse_identity_residual, product_identity_residual,
                         quotient_identity_residual, reconstruct_residual, reverse_residual, substitution_check)
from ..groups import GroupSpec, make_homomorphism
from ..lcvs import convolve, initial_jet, iterated_integrate, polygon_approx, riemann_integral, sup_seminorm
from ..lcvs.sampling import (random_analytic_curve, random_monotone_reparam, random_piecewise_curve,
                             random_polynomial_curve, random_vector)
from ..logderiv import (exp_curve, inverse_rule_residual, product_rule_residual, quotient_rule_residual,
                        residual_tolerance, substitution_rule_residual)
from ..models.results import CheckResult, IdentityResidual
from ..models.vector_spec import max_seminorm
from ..muconvex import (continuity_bound_check, find_o, l1_continuity_check, mu_convex_probe,
                        product_inequality_probe, recipe_constant)
from ..smoothing import (mackey_endpoint_residual, mackey_evolve, mackey_glue, partial_sum_schedule,
                         random_schedule, smooth_piecewise, smoothing_residual, sup_inflation, tail_smallness)

logger = logging.getLogger(__name__)

ESTIMATE_FACTOR = 5.0

ANCHORS = {
    "der.product": "Der(μ·ν)= Der(μ)+Ad_μ(Der(ν))",
    "der.inverse": "Der(μ^{-1})=-Ad_{μ^{-1}}(Der(μ))",
    "der.quotient": "Der(μ^{-1}ν)=Ad_{μ^{-1}}(Der(ν) -Der(μ))",
    "der.substitution": "Der( μ∘ϱ)=ϱ̇·Der(μ)∘ϱ",
    "reconstruct": "Evol(Der(μ)) = μ·μ⁻¹(r)",
    "concat": "we conclude from the first two identities",
    "reverse": "which will be useful for our argumentation",
    "substitution": r"$\innt_r^{\varrho}\phi=\big[\innt_\ell^\bullet\dot\varrho\cdot \phi\cp\varrho\he\big]\cdot…$",
    "product": "∮ᵗφ · ∮ᵗψ = ∮ᵗ(φ + Ad_{∮φ}ψ)",
    "quotient": (r"$\big[\innt_r^t \phi\big]^{-1} \big[\innt_r^t\psi\big]"
                 r"=\innt_r^t\Ad_{[\innt_r^\bullet\phi]^{-1}}(\psi-\phi)$"),
    "inverse": "[∮ᵗφ]⁻¹ = ∮ᵗ(−Ad_{[∮φ]⁻¹}(φ))",
    "homomorphism": "for each $C^1$-Lie group homomorphism",
    "abelian": "∮φ = exp(∫φ(s) ds)",
    "exact": "exp(t·X)=∮₀ᵗ φ_X",
    "order": "the evolution maps by",
    "duhamel": "∂_z exp(X(x)) = dL_{exp X}(∫ Ad_{exp(−s·X)}(∂_zX) ds)",
    "duhamel.closed": "(id_𝔤 − exp(−ad_X))/ad_X",
    "duhamel.slope": "Duhamel's formula",
    "param": "∫ Ad_{[∮ʳ˒ˢΦ(x,·)]⁻¹}(∂_zΦ(x,s)) ds",
    "param.slope": "differentiation of parameter-dependent integrals",
    "directional": "d/dh|₀ ∮h·φ = ∫φ(s) ds",
    "differential": "(d_φ Evol)(ψ) = dL_{∮φ}(∫ Ad_{[∮ʳ˒ˢφ]⁻¹}(ψ(s)) ds)",
    "approx.reconstruct": "φ = I[p](φ^{(p-1)}(r),…,φ^{(0)}(r),φ^{(p)})",
    "approx.bound": "Iterated Integration",
    "approx.bound_max": "≤ max(1,|r'-r|)^s · q∞(φ)",
    "approx.convolution": "Polygons and Convolution",
    "approx.polygon": "by polygonal curves, smoothening them",
    "smoothing": "ψ := ρ·φ∘ϱ",
    "smoothing.jumps": "ψ := ρ·φ∘ϱ",
    "smoothing.inflation": "|ϱ̇| ≤ 2",
    "muconvex": "generalizes the triangle inequality",
    "continuity": r"$(\pp\cp\chart)\big(\innt_r^\bullet\phi\big)\leq \int_r^\bullet \qqq(\phi(s))\:\dd s$",
    "l1": r"$G$ is {\rm 0}-continuous \deff $G$ is $\rm L^1$-continuous",
    "scalar": r"$(1+\epsilon_{1})\cdot {\dots}\cdot (1+\epsilon_n)-1\leq 2\cdot \sum$",
    "mackey": "∮₀^{tₙ} φ = Ξ⁻¹(δ_{n−1}Yₙ₋₁)⋯Ξ⁻¹(δ₀Y₀)",
    "mackey.tail": "glue together smooth curves",
    "mackey.partial": "that λ_{n,n-1}≤ 2^{-n²} holds",
    "groenwall": "exp(|r'−r|·w∞(φ))·w(Y)",
    "groenwall.scalar": "exp(|r'−r|·w∞(φ))·w(Y)",
    "ad_series": "α_{X,Y}: t ↦ Σ tⁿ/n!·ad_Xⁿ(Y)",
    "nilpotent": "α_{X,Y}: t ↦ Σ tⁿ/n!·ad_Xⁿ(Y)",
    "omori": "α=Ad_μ(Y) for μ:=∮φ",
    "constricted": r"We say that $G$ is {\bf constricted}",
    "submultiplicative": r"We say that $G$ is {\bf constricted}",
}


@dataclass
class CheckOutcome:
    """Rows produced by one task plus optional convergence table rows."""

    results: List[CheckResult]
    convergence: List[dict] = field(default_factory=list)
    error: Optional[str] = None


@dataclass
class CheckTask:
    """
    An independent unit of work.

    Attributes:
        name: Prefix of every row the task produces
        group: Group name the task runs on
        run: Zero-argument callable producing the outcome
        anchor: Anchor reported when the task fails with an error
    """

    name: str
    group: str
    run: Callable[[], CheckOutcome]
    anchor: str = ""


@dataclass(frozen=True)
class Experiment:
    """A registered experiment kind."""

    kind: str
    description: str
    anchor: str
    module: str
    build: Callable[[ExperimentConfig], List[CheckTask]]


def _floor() -> float:
    return get_settings().residual_floor


def _row(name: str, group: GroupSpec, key: str, residual: float, tolerance: float, detail: str = "") -> CheckResult:
    return CheckResult.compare(name, group.name, residual, tolerance, ANCHORS[key], detail)


def _identity_row(name: str, group: GroupSpec, key: str, res: IdentityResidual,
                  config: ExperimentConfig) -> CheckResult:
    factor = config.tolerance("estimate_factor", ESTIMATE_FACTOR)
    return _row(name, group, key, res.residual, res.tolerance(factor, _floor()), f"estimate={res.estimate:.3e}")


def _curve(config: ExperimentConfig, group: GroupSpec, rng: np.random.Generator, k: int) -> Curve:
    """Explicit config curves in turn, random analytic curves otherwise."""
    if config.curves:
        return config.curves[k % len(config.curves)].to_curve()
    return random_analytic_curve(rng, group.dim, scale=config.scale)


def _per_sample(config: ExperimentConfig, family: str, index: int, fn, anchor: str,
                accept: Optional[Callable[[GroupSpec], bool]] = None, samples: Optional[int] = None) -> List[CheckTask]:
    """One task per (group, sample) calling fn(config, group, rng, k, prefix)."""
    tasks = []
    for gi, group_config in enumerate(config.groups):
        group = group_config.to_group()
        if accept is not None and not accept(group):
            logger.info("%s.%s skipped on %s", config.kind, family, group.name)
            continue
        for k in range(samples or config.samples):
            prefix = f"{config.kind}.{family}.{group.name}.{k:02d}"

            def run(group=group, gi=gi, k=k, prefix=prefix) -> CheckOutcome:
                rng = np.random.default_rng([config.seed, gi, k, index])
                return fn(config, group, rng, k, prefix)
            tasks.append(CheckTask(prefix, group.name, run, anchor))
    return tasks


def _single(rows: List[CheckResult]) -> CheckOutcome:
    return CheckOutcome(rows)


# identities

def _der_rules(config, group, rng, k, prefix) -> CheckOutcome:
    f = _curve(config, group, rng, k)
    g = random_analytic_curve(rng, group.dim, scale=config.scale, interval=f.interval)
    mu, nu = exp_curve(group, f, "exp(f)"), exp_curve(group, g, "exp(g)")
    rho = random_monotone_reparam(rng, target=f.interval)
    tol = config.tolerance("der", residual_tolerance(mu, nu))
    return _single([
        _row(f"{prefix}.product", group, "der.product", product_rule_residual(mu, nu), tol),
        _row(f"{prefix}.inverse", group, "der.inverse", inverse_rule_residual(mu), tol),
        _row(f"{prefix}.quotient", group, "der.quotient", quotient_rule_residual(mu, nu), tol),
        _row(f"{prefix}.substitution", group, "der.substitution", substitution_rule_residual(mu, rho), tol),
    ])


def _homomorphism_for(group: GroupSpec):
    if group.name == "su2":
        return make_homomorphism("su2->so3")
    if group.name.startswith("abelian"):
        return make_homomorphism("abelian->torus", group)
    return make_homomorphism("identity", group)


def _evolution_rules(config, group, rng, k, prefix) -> CheckOutcome:
    cfg = config.scheme.to_evolve_config()
    phi = _curve(config, group, rng, k)
    psi = random_analytic_curve(rng, group.dim, scale=config.scale, interval=phi.interval)
    mid = phi.start + phi.length * float(rng.uniform(0.2, 0.8))
    rho = random_monotone_reparam(rng, target=phi.interval)
    return _single([
        _identity_row(f"{prefix}.concat", group, "concat",
                      concat_residual(group, phi, [phi.start, mid, phi.end], cfg), config),
        _identity_row(f"{prefix}.reverse", group, "reverse", reverse_residual(group, phi, cfg), config),
        _identity_row(f"{prefix}.substitution", group, "substitution",
                      substitution_check(group, phi, rho, cfg), config),
        _identity_row(f"{prefix}.product", group, "product", product_identity_residual(group, phi, psi, cfg), config),
        _identity_row(f"{prefix}.quotient", group, "quotient",
                      quotient_identity_residual(group, phi, psi, cfg), config),
        _identity_row(f"{prefix}.inverse", group, "inverse", inverse_identity_residual(group, phi, cfg), config),
        _identity_row(f"{prefix}.homomorphism", group, "homomorphism",
                      hom_transport_residual(phi, _homomorphism_for(group), cfg), config),
    ])


def _reconstruct(config, group, rng, k, prefix) -> CheckOutcome:
    phi = _curve(config, group, rng, k)
    residual = reconstruct_residual(group, phi, config.scheme.to_evolve_config())
    return _single([_row(prefix, group, "reconstruct", residual, config.tolerance("reconstruct", 1e-3))])


def _abelian(config, group, rng, k, prefix) -> CheckOutcome:
    phi = _curve(config, group, rng, k)
    cfg = config.scheme.to_evolve_config()
    cfg = cfg.with_step(min(cfg.step or 1.0, config.option("abelian_step", 2.0 ** -10)))
    residual = abelian_closed_form_residual(group, phi, cfg)
    return _single([_row(prefix, group, "abelian", residual, config.tolerance("abelian", 1e-10))])


def _piecewise_exact(config, group, rng, k, prefix) -> CheckOutcome:
    pw = random_piecewise_curve(rng, group.dim, segments=3, scale=config.scale, constant=True)
    endpoint = evolve(group, pw, config.scheme.to_evolve_config()).endpoint
    direct = group.identity()
    for seg, a, b in zip(pw.segments, pw.breakpoints[:-1], pw.breakpoints[1:]):
        direct = group.mult(group.exp((b - a) * seg.value), direct)
    residual = group.distance(endpoint, direct)
    return _single([_row(prefix, group, "exact", residual, config.tolerance("exact", 1e-13))])


def build_identities(config: ExperimentConfig) -> List[CheckTask]:
    return (_per_sample(config, "der", 0, _der_rules, ANCHORS["der.product"])
            + _per_sample(config, "rules", 1, _evolution_rules, ANCHORS["product"])
            + _per_sample(config, "reconstruct", 2, _reconstruct, ANCHORS["reconstruct"])
            + _per_sample(config, "abelian", 3, _abelian, ANCHORS["abelian"], accept=lambda g: g.abelian)
            + _per_sample(config, "exact", 4, _piecewise_exact, ANCHORS["exact"]))


# evolve

EXPECTED_ORDERS = {"lie_euler": 1.0, "midpoint": 2.0}


def _orders(config, group, rng, k, prefix) -> CheckOutcome:
    phi = _curve(config, group, rng, k)
    rows, table = [], []
    for scheme in config.option("schemes", sorted(EXPECTED_ORDERS)):
        name = f"{prefix}.{scheme}"
        data = convergence_orders(group, phi, scheme, config.scheme.ladder, config.scheme.oracle_step)
        residual = abs(data["order"] - EXPECTED_ORDERS[scheme])
        rows.append(_row(name, group, "order", residual, config.tolerance("order", 0.2),
                         f"order={data['order']:.4f}"))
        if config.output.convergence:
            table.extend({"check": name, "group": group.name, "scheme": scheme, "step": float(h), "error": float(e)}
                         for h, e in zip(data["steps"], data["errors"]))
    return CheckOutcome(rows, table)


def build_evolve(config: ExperimentConfig) -> List[CheckTask]:
    return _per_sample(config, "order", 0, _orders, ANCHORS["order"])


# duhamel

def _duhamel(config, group, rng, k, prefix) -> CheckOutcome:
    path = _curve(config, group, rng, k)
    x = path.start + path.length * float(rng.uniform(0.3, 0.7))
    result = duhamel(group, path, x)
    rel = config.tolerance("duhamel", 1e-6)
    rows = [
        _row(f"{prefix}.integral", group, "duhamel", result.gaps["integral"], rel),
        _row(f"{prefix}.closed", group, "duhamel.closed", result.gaps["closed"], rel),
        _row(f"{prefix}.forms", group, "duhamel", result.gaps["forms"], config.tolerance("duhamel.forms", 1e-10)),
    ]
    if k == 0:
        slope = duhamel_slope(group, path, x)
        rows.append(_row(f"{prefix}.slope", group, "duhamel.slope", max(0.0, 2.0 - slope),
                         config.tolerance("slope", 0.2), f"slope={slope:.4f}"))
    return _single(rows)


def build_duhamel(config: ExperimentConfig) -> List[CheckTask]:
    return _per_sample(config, "gap", 0, _duhamel, ANCHORS["duhamel"])


# param-derivative

def _param(config, group, rng, k, prefix) -> CheckOutcome:
    cfg = config.scheme.to_evolve_config()
    fam = random_family(rng, group.dim, scale=config.scale)
    x = float(rng.uniform(-0.5, 0.5))
    result = param_derivative(group, fam, x, cfg)
    rows = [_row(f"{prefix}.gap", group, "param", result.gap, config.tolerance("param", 1e-6),
                 f"partial_error={result.detail.get('partial_error', 0.0):.2e}")]
    if k == 0:
        slope = param_derivative_slope(group, fam, x, cfg)
        rows.append(_row(f"{prefix}.slope", group, "param.slope", max(0.0, 2.0 - slope),
                         config.tolerance("slope", 0.2), f"slope={slope:.4f}"))
    return _single(rows)


def _directional(config, group, rng, k, prefix) -> CheckOutcome:
    cfg = config.scheme.to_evolve_config()
    phi = _curve(config, group, rng, k)
    psi = random_analytic_curve(rng, group.dim, scale=config.scale, interval=phi.interval)
    zero = FunctionCurve(lambda t, s: np.zeros((t.size, group.dim)), group.dim, phi.start, phi.end, name="0")
    at_zero = float(np.max(np.abs(evol_differential(group, zero, psi, cfg) - riemann_integral(psi))))
    return _single([
        _row(f"{prefix}.directional", group, "directional",
             directional_derivative_at_zero(group, phi, cfg).gap, config.tolerance("directional", 1e-8)),
        _row(f"{prefix}.at_zero", group, "differential", at_zero, config.tolerance("differential.zero", 1e-10)),
        _row(f"{prefix}.differential", group, "differential",
             evol_differential_check(group, phi, psi, cfg).gap, config.tolerance("differential", 1e-6)),
    ])


def build_param_derivative(config: ExperimentConfig) -> List[CheckTask]:
    return (_per_sample(config, "family", 0, _param, ANCHORS["param"])
            + _per_sample(config, "evol", 1, _directional, ANCHORS["directional"]))


# approx

def _lipschitz_curve(rng: np.random.Generator, dim: int) -> Curve:
    """sin(w t + a) / w per coordinate: Lipschitz constant 1 in the max seminorm."""
    omega = rng.uniform(1.0, 20.0, dim)
    phase = rng.uniform(0.0, 2 * np.pi, dim)

    def fn(t, s):
        return omega ** (s - 1) * np.sin(np.outer(t, omega) + phase + s * np.pi / 2)
    return FunctionCurve(fn, dim, 0.0, 1.0, name="lipschitz")


def _iterated(config, group, rng, k, prefix) -> CheckOutcome:
    q = group.algebra.default
    p = 1 + k % 4
    c = random_polynomial_curve(rng, group.dim, degree=p + 2, scale=config.scale)
    rebuilt = iterated_integrate(initial_jet(c, p), c.derivative(p))
    reconstruct = sup_seminorm(rebuilt - c, q, 65)
    initial = [random_vector(rng, group.dim, float(rng.uniform(0.1, 1.0))) for _ in range(p)]
    phi = random_analytic_curve(rng, group.dim, scale=config.scale)
    lhs = sup_seminorm(iterated_integrate(initial, phi), q, 65)
    length = phi.length
    rhs = (sum(float(q(initial[p - 1 - j])) * length ** j / factorial(j) for j in range(p))
           + length ** p / factorial(p) * sup_seminorm(phi, q))
    from_zero = sup_seminorm(iterated_integrate([np.zeros(group.dim)] * p, phi), q, 65)
    widened = max(1.0, length) ** p * sup_seminorm(phi, q)
    return _single([
        _row(f"{prefix}.reconstruct", group, "approx.reconstruct", reconstruct,
             config.tolerance("approx.reconstruct", 1e-10), f"p={p}"),
        _row(f"{prefix}.bound", group, "approx.bound", lhs - rhs, config.tolerance("approx.bound", 1e-12),
             f"p={p}"),
        _row(f"{prefix}.bound_max", group, "approx.bound_max", from_zero - widened,
             config.tolerance("approx.bound", 1e-12), f"p={p}"),
    ])


def _mollify(config, group, rng, k, prefix) -> CheckOutcome:
    c = _lipschitz_curve(rng, group.dim)
    q = max_seminorm()
    rows = []
    for n in config.option("mollifier_indices", [8, 32, 128]):
        rows.append(_row(f"{prefix}.convolution.{n:03d}", group, "approx.convolution",
                         sup_seminorm(convolve(c, n) - c, q, 257), 1.0 / n))
        rows.append(_row(f"{prefix}.polygon.{n:03d}", group, "approx.polygon",
                         sup_seminorm(polygon_approx(c, n) - c, q, 4 * n + 1), 0.5 / n))
    return _single(rows)


def _smoothing(config, group, rng, k, prefix) -> CheckOutcome:
    pw = random_piecewise_curve(rng, group.dim, segments=3, scale=config.scale, constant=k % 2 == 0)
    psi = smooth_piecewise(pw)
    jumps = max(float(np.max(psi.jumps(s), initial=0.0)) for s in range(5))
    return _single([
        _identity_row(f"{prefix}.invariance", group, "smoothing",
                      smoothing_residual(group, pw, config.scheme.to_evolve_config()), config),
        _row(f"{prefix}.jumps", group, "smoothing.jumps", jumps, config.tolerance("smoothing.jumps", 1e-8)),
        _row(f"{prefix}.inflation", group, "smoothing.inflation", sup_inflation(pw, group.algebra.default), 2.0),
    ])


def build_approx(config: ExperimentConfig) -> List[CheckTask]:
    return (_per_sample(config, "iterated", 0, _iterated, ANCHORS["approx.reconstruct"])
            + _per_sample(config, "mollifier", 1, _mollify, ANCHORS["approx.convolution"], samples=1)
            + _per_sample(config, "smoothing", 2, _smoothing, ANCHORS["smoothing"]))


# muconvex

def _probe_row(name: str, group: GroupSpec, key: str, report, detail: str = "") -> CheckResult:
    return _row(name, group, key, report.max_violation, report.tolerance, detail or report.summary())


def _muconvex(config, group, rng, k, prefix) -> CheckOutcome:
    u = group.algebra.default
    n_max = int(config.option("n_max", 8))
    samples = int(config.option("probe_samples", 10_000))
    c = recipe_constant(group)
    if c is not None:
        report = mu_convex_probe(group, u, u.scaled(c), n_max, samples, config.seed)
    else:
        c, report = find_o(group, u, n_max, int(config.option("search_samples", 1000)), config.seed)
    o = u.scaled(c)
    rows = [_probe_row(f"{prefix}.probe", group, "muconvex", report, f"o={c:g}*{u.name}; {report.summary()}")]
    phis = [random_analytic_curve(rng, group.dim, scale=config.scale) for _ in range(config.samples)]
    rows.append(_probe_row(f"{prefix}.continuity", group, "continuity",
                           continuity_bound_check(group, u, o, phis)))
    l1 = l1_continuity_check(group, u, o, phis)
    rows.append(_probe_row(f"{prefix}.l1", group, "l1", l1))
    rows.append(_row(f"{prefix}.l1_reparam", group, "l1", l1.extra["reparam_residual"], 1.0))
    return _single(rows)


def _scalar(config, group, rng, k, prefix) -> CheckOutcome:
    report = product_inequality_probe(int(config.option("scalar_tuples", 100_000)),
                                      int(config.option("n_max", 8)), config.seed)
    return _single([_probe_row(prefix, group, "scalar", report)])


def build_muconvex(config: ExperimentConfig) -> List[CheckTask]:
    return (_per_sample(config, "probe", 0, _muconvex, ANCHORS["muconvex"], samples=1)
            + _per_sample(config, "scalar", 1, _scalar, ANCHORS["scalar"], samples=1)[:1])


# mackey

def _mackey(config, group, rng, k, prefix) -> CheckOutcome:
    n = int(config.option("length", 6))
    seq = random_schedule(group, rng, n, decay=float(config.option("decay", 1.0)))
    return _single([
        _row(f"{prefix}.endpoint", group, "mackey", mackey_endpoint_residual(seq, n),
             config.tolerance("mackey", 1e-5)),
        _row(f"{prefix}.tail", group, "mackey.tail", tail_smallness(mackey_glue(seq, n)),
             config.tolerance("mackey.tail", 1e-10)),
    ])


def _partial_sums(config, group, rng, k, prefix) -> CheckOutcome:
    n = int(config.option("length", 6))
    seq = partial_sum_schedule(n)
    endpoint = mackey_evolve(seq, n).endpoint
    residual = float(np.max(np.abs(endpoint - seq.telescoped(n))))
    return _single([CheckResult.compare(prefix, seq.group.name, residual, config.tolerance("mackey.partial", 1e-8),
                                        ANCHORS["mackey.partial"], f"sum={-float(seq.telescoped(n)[0]):.17g}")])


def build_mackey(config: ExperimentConfig) -> List[CheckTask]:
    return (_per_sample(config, "schedule", 0, _mackey, ANCHORS["mackey"])
            + _per_sample(config, "partial", 1, _partial_sums, ANCHORS["mackey.partial"], samples=1)[:1])


# groenwall

def _groenwall(config, group, rng, k, prefix) -> CheckOutcome:
    cfg = config.scheme.to_evolve_config()
    phi = _curve(config, group, rng, k)
    y = random_vector(rng, group.dim, float(rng.uniform(0.5, 2.0)))
    w = group.submultiplicative
    report = groenwall_check(group, phi, y, w, cfg, rng=rng)
    worst = float(np.max(np.maximum(report.lhs - report.rhs, report.lhs - report.rhs_sup)))
    x = random_vector(rng, group.dim, float(rng.uniform(0.0, 2.0)))
    transport = omori_transport(group, phi, y, cfg)
    factor = config.tolerance("estimate_factor", ESTIMATE_FACTOR)
    t, alpha, beta, c = groenwall_scalar_family(rng)
    scalar = groenwall_scalar_check(t, alpha, beta, c)
    rows = [
        _row(f"{prefix}.bound", group, "groenwall", worst, report.tolerance, f"min_slack={report.min_slack:.3e}"),
        _row(f"{prefix}.scalar", group, "groenwall.scalar",
             max(scalar.hypothesis_violation, scalar.conclusion_violation), 1e-10),
        _row(f"{prefix}.ad_series", group, "ad_series", ad_exp_residual(group, x, y),
             config.tolerance("ad_series", 1e-11)),
        _row(f"{prefix}.omori", group, "omori", transport.residual,
             max(factor * transport.estimate, _floor()), f"estimate={transport.estimate:.3e}"),
        _row(f"{prefix}.omori_converse", group, "omori",
             omori_converse_residual(group, evolve(group, phi, cfg), y), config.tolerance("omori.converse", 1e-3)),
        _row(f"{prefix}.submultiplicative", group, "submultiplicative",
             submultiplicativity_violation(group, w, rng), 1e-12),
    ]
    if group.nilpotent:
        series = ad_series(group, x, y)
        exact = float(group.algebra.default(series.value - group.Ad(group.exp(x), y)))
        rows.append(_row(f"{prefix}.nilpotent", group, "nilpotent", exact if series.exact else np.inf,
                         config.tolerance("nilpotent", 1e-14), f"terms={series.terms}"))
    return _single(rows)


def _constricted(config, group, rng, k, prefix) -> CheckOutcome:
    xs = [random_vector(rng, group.dim, float(rng.uniform(0.1, 1.0))) for _ in range(8)]
    bound, report = constricted_probe(group, xs, rng=rng)
    single = report.extra["C_1"]
    return _single([_row(prefix, group, "constricted", bound, single * (1.0 + 1e-9),
                         f"C={bound:.6g}; {report.description}")])


def build_groenwall(config: ExperimentConfig) -> List[CheckTask]:
    has_bound = lambda g: g.submultiplicative is not None
    return (_per_sample(config, "transport", 0, _groenwall, ANCHORS["groenwall"], accept=has_bound)
            + _per_sample(config, "constricted", 1, _constricted, ANCHORS["constricted"], samples=1))


EXPERIMENTS: Dict[str, Experiment] = {
    exp.kind: exp for exp in (
        Experiment("identities", "Der rules, product-integral identities, reconstruction and closed forms",
                   ANCHORS["der.product"], "logderiv, evolution", build_identities),
        Experiment("evolve", "convergence orders of lie_euler and midpoint against a fine oracle",
                   ANCHORS["order"], "evolution", build_evolve),
        Experiment("duhamel", "derivative of exp along a path: integral and series forms",
                   ANCHORS["duhamel"], "calculus", build_duhamel),
        Experiment("param-derivative", "parameter derivatives of product integrals and the evolution differential",
                   ANCHORS["param"], "calculus", build_param_derivative),
        Experiment("approx", "iterated integration, mollifier and polygon errors, bump smoothing invariance",
                   ANCHORS["approx.reconstruct"], "lcvs, smoothing", build_approx),
        Experiment("muconvex", "sampled mu-convexity, continuity estimates and the scalar product inequality",
                   ANCHORS["muconvex"], "muconvex", build_muconvex),
        Experiment("mackey", "smooth curve glued from a rapidly converging sequence",
                   ANCHORS["mackey"], "smoothing", build_mackey),
        Experiment("groenwall", "adjoint series, Omori transport, Groenwall and constricted bounds",
                   ANCHORS["groenwall"], "adjoint", build_groenwall),
    )
}


def get_experiment(kind: str) -> Experiment:
    """
    Raises:
        KeyError: If no experiment of that kind is registered
    """
    return EXPERIMENTS[kind]
