from fractions import Fraction
from typing import List
import logging

import numpy as np
from scipy.special import eval_gegenbauer

from ..algebra.catalog import Family, catalog_spaces, make_space
from ..algebra.propagation import WeightSequence, chain_from_levels, iota, restrict
from ..algebra.roots import dominant_weights_up_to, dual_weight, weight_from_omega
from ..analysis.cfunction import ALLOWED_EXPONENTS, CALIBRATED_EXPONENT, c_function, c_infinity, c_mu
from ..analysis.rank_one import rank_one_integral_oracle
from ..config import get_settings
from ..limits import (
    compatible_dual_dimension,
    gamma_commute_check,
    graded_ring_check,
    graded_proj_check,
    harmonic_family,
    kernel_limit_check,
    multiplicity_one_check,
    noncommuting_defect,
    projective_evaluation_check,
    random_points,
    sl2_product_family,
)
from ..models.reports import CheckResult
from ..representations import RegularFunction, Side, build_model, embed, inclusion_indices, project, project_exact
from ..transforms import (
    KernelMethod,
    Method,
    dual_radon,
    kernel_operator_KXi,
    kernel_operator_KZ,
    kernel_tilde,
    sphere_pairing,
    sphere_to_horosphere_limit,
)

logger = logging.getLogger(__name__)


def _vector(rng: np.random.Generator, dimension: int) -> np.ndarray:
    return rng.standard_normal(dimension) + 1j * rng.standard_normal(dimension)


def _relative(a: complex, b: complex) -> float:
    return float(abs(a - b) / max(abs(b), 1.0))


def _model(family: str, params, coefficients):
    space = make_space(family, params)
    return build_model(space, weight_from_omega(coefficients, space.rs))


def _error_result(name: str, label: str, e: Exception) -> CheckResult:
    logger.error(f"Error checking {label}: {str(e)}")
    return CheckResult(name=name, passed=False, details={"error": str(e), "type": e.__class__.__name__})


class AcceptanceChecks:
    """Numbered acceptance checks plus the supplementary identities.

    Every check takes a seeded generator and a ``quick`` flag that lowers the
    level and weight caps, and returns one CheckResult.
    """

    @staticmethod
    def check_c_normalization(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """c(ρ) = 1 on every catalog space of rank ≤ 4."""
        name = "cNormalization"
        try:
            tol = get_settings().tolerances.exact
            errors = {}
            for space in catalog_spaces(2 if quick else 4):
                errors[space.label] = abs(c_function(space, space.rho).value - 1.0)
            worst = max(errors.values())
            return CheckResult(name=name, passed=worst <= tol, max_error=worst,
                               details={"spaces": len(errors), "tolerance": tol})
        except Exception as e:
            return _error_result(name, "c-function normalization", e)

    @staticmethod
    def check_c_symmetry(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """c(λ) = c(−w₀λ) at random regular dominant λ."""
        name = "cSymmetry"
        try:
            tol = get_settings().tolerances.exact
            samples = 10 if quick else 50
            worst, count = 0.0, 0
            for space in catalog_spaces(2 if quick else 4):
                for _ in range(samples):
                    shift = [Fraction(int(rng.integers(1, 60)), int(rng.integers(1, 12))) for _ in range(space.rank)]
                    lam = space.rho + weight_from_omega(shift, space.rs)
                    left = c_function(space, lam).value
                    right = c_function(space, dual_weight(lam, space.rs)).value
                    worst = max(worst, _relative(left, right))
                    count += 1
            return CheckResult(name=name, passed=worst <= tol, max_error=worst,
                               details={"samples": count, "tolerance": tol})
        except Exception as e:
            return _error_result(name, "c-function symmetry", e)

    @staticmethod
    def check_rank_one_oracle(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """Gindikin-Karpelevich product against the N̄ integral on SO(1,q)."""
        name = "rankOneOracle"
        try:
            tol = get_settings().tolerances.rank_one_oracle
            rows = []
            for q in range(2, 4 if quick else 6):
                space = make_space(Family.SO_p_q, (1, q))
                for mu in dominant_weights_up_to(space.rs, 2 if quick else 4):
                    lam = mu + space.rho
                    value = c_function(space, lam).value
                    oracle = rank_one_integral_oracle(space, lam)
                    rows.append({"q": q, "mu": str(mu), "gk": value, "oracle": oracle,
                                 "error": abs(value - oracle) / abs(oracle)})
            worst = max(r["error"] for r in rows)
            return CheckResult(name=name, passed=worst <= tol, max_error=worst,
                               details={"rows": rows, "tolerance": tol})
        except Exception as e:
            return _error_result(name, "rank-one oracle", e)

    @staticmethod
    def check_c_mu_calibration(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """K-average of u* on H^q models against c(μ+ρ)^s for s ∈ {1/2, 1}."""
        name = "cMuCalibration"
        try:
            tol = get_settings().tolerances.identity
            errors = {str(s): 0.0 for s in ALLOWED_EXPONENTS}
            instances = 0
            for q in range(2, 4 if quick else 5):
                for k in range(1, 3 if quick else 5):
                    model = _model(Family.SO_p_q, (1, q), [k])
                    oracle = model.c_mu_oracle()
                    for s in ALLOWED_EXPONENTS:
                        value = c_mu(model.space, model.mu, s)
                        errors[str(s)] = max(errors[str(s)], abs(oracle - value) / value)
                    instances += 1
            consistent = [s for s in ALLOWED_EXPONENTS if errors[str(s)] <= tol]
            passed = consistent == [CALIBRATED_EXPONENT]
            return CheckResult(name=name, passed=passed, max_error=errors[str(CALIBRATED_EXPONENT)],
                               details={"calibratedExponent": str(consistent[0]) if len(consistent) == 1 else None,
                                        "errorsByExponent": errors, "instances": instances})
        except Exception as e:
            return _error_result(name, "c_mu calibration", e)

    @staticmethod
    def check_dual_transform(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """R*ψ_v = c_μ f_v pointwise, with R* summed over a Haar rule for K."""
        name = "dualTransformIdentity"
        try:
            tol = get_settings().tolerances.identity
            points = 5 if quick else 20
            heights = range(1, 3 if quick else 4)
            models = [_model(Family.SL_n_R, (2,), [k]) for k in heights]
            models += [_model(Family.SO_p_q, (1, q), [k]) for q in (2, 3) for k in heights]
            worst = 0.0
            for model in models:
                oracle = model.c_mu_oracle()
                for _ in range(points):
                    v = _vector(rng, model.dimension)
                    x = model.random_real(rng, 0.7)
                    value = dual_radon(RegularFunction.single(model, v, Side.XI), x, Method.QUADRATURE)
                    worst = max(worst, _relative(value, oracle * model.coeff_f(v, x)))
            return CheckResult(name=name, passed=worst <= tol, max_error=worst,
                               details={"models": [m.describe() for m in models], "points": points})
        except Exception as e:
            return _error_result(name, "dual transform identity", e)

    @staticmethod
    def check_schur_orthogonality(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """∫_U ⟨u, π*_μ(b)u*⟩⟨π_ν(b)v, v*⟩ db = δ_μν d⁻¹⟨v,u*⟩⟨u,v*⟩ on SU(2)."""
        name = "schurOrthogonality"
        try:
            tol = get_settings().tolerances.exact
            models = [_model(Family.SL_n_R, (2,), [k]) for k in range(0, 3 if quick else 5)]
            worst = 0.0
            for left in models:
                u, u_star = _vector(rng, left.dimension), _vector(rng, left.dimension)
                for right in models:
                    v, v_star = _vector(rng, right.dimension), _vector(rng, right.dimension)
                    nodes = left.compact_quadrature(left.polynomial_degree + right.polynomial_degree)
                    integral = sum(w * (u_star @ (left.rep_matrix(b.inverse()) @ u))
                                   * (v_star @ (right.rep_matrix(b) @ v)) for b, w in nodes)
                    expected = 0j
                    if left is right:
                        expected = (v @ u_star) * (u @ v_star) / left.dimension
                    worst = max(worst, _relative(integral, expected))
            return CheckResult(name=name, passed=worst <= tol, max_error=worst,
                               details={"dimensions": [m.dimension for m in models]})
        except Exception as e:
            return _error_result(name, "Schur orthogonality", e)

    @staticmethod
    def check_kernel_identities(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """K_Z f_ν = ψ_ν and K_Ξ ψ_ν = f_ν by U-quadrature on SL(2,R) and H²."""
        name = "kernelIdentities"
        try:
            tol = get_settings().tolerances.identity
            heights = range(0, 3 if quick else 4)
            models = [_model(Family.SL_n_R, (2,), [k]) for k in heights]
            models += [_model(Family.SO_p_q, (1, 2), [k]) for k in heights]
            worst_z = worst_xi = 0.0
            for model in models:
                for v in (model.highest_vector, _vector(rng, model.dimension)):
                    point = model.random_real(rng, 0.7)
                    f = RegularFunction.single(model, v, Side.Z)
                    psi = RegularFunction.single(model, v, Side.XI)
                    kz = kernel_operator_KZ(f, point, method=KernelMethod.QUADRATURE)
                    kxi = kernel_operator_KXi(psi, point, method=KernelMethod.QUADRATURE)
                    worst_z = max(worst_z, _relative(kz, model.coeff_psi(v, point)))
                    worst_xi = max(worst_xi, _relative(kxi, model.coeff_f(v, point)))
            worst = max(worst_z, worst_xi)
            return CheckResult(name=name, passed=worst <= tol, max_error=worst,
                               details={"kZError": worst_z, "kXiError": worst_xi,
                                        "models": [m.describe() for m in models]})
        except Exception as e:
            return _error_result(name, "kernel operator identities", e)

    @staticmethod
    def check_kernel_tilde(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """Truncated Σ f_μ against ∏(1 − b_j)⁻¹ within the geometric tail bound."""
        name = "kernelTildeClosedForm"
        try:
            truncation = 10 if quick else 20
            rows = []
            for r in range(1, 4):
                space = make_space(Family.SL2_product, (r,))
                trivial = build_model(space, weight_from_omega([0] * r, space.rs))
                t = rng.uniform(0.3, 1.0, size=r)
                g = trivial.a_element(t) @ trivial.random_k(rng)
                series = kernel_tilde(space, g, truncation)
                rows.append({"r": r, **series.to_dict(),
                             "withinBound": series.in_domain and series.error <= series.tail_bound
                             + get_settings().tolerances.roundoff})
            return CheckResult(name=name, passed=all(r["withinBound"] for r in rows),
                               max_error=max(r["error"] for r in rows if r["error"] is not None),
                               details={"rows": rows, "truncation": truncation})
        except Exception as e:
            return _error_result(name, "k-tilde closed form", e)

    @staticmethod
    def check_lattice_exactness(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """r∘ι = id, ι additive and injective, and proj∘embed = id, all exact."""
        name = "latticeExactness"
        try:
            top = 4 if quick else 6
            chains = [
                chain_from_levels(Family.SO_p_q, 1, range(2, top + 1)),
                chain_from_levels(Family.SL_n_R, None, range(2, top + 1)),
                chain_from_levels(Family.SL2_product, None, range(1, top - 1)),
                chain_from_levels(Family.SU_p_q, 2, range(3, top + 2)),
            ]
            failures: List[str] = []
            pairs = 0
            for chain in chains:
                for lo, hi in zip(chain, chain[1:]):
                    weights = dominant_weights_up_to(lo.rs, 2 if quick else 3)
                    images = [iota(mu, lo, hi) for mu in weights]
                    if len(set(images)) != len(images):
                        failures.append(f"ι not injective on {lo.label} → {hi.label}")
                    for mu, image in zip(weights, images):
                        if restrict(image, hi, lo) != mu:
                            failures.append(f"r∘ι ≠ id at {mu} on {lo.label}")
                        for nu in weights[:5]:
                            if iota(mu + nu, lo, hi) != image + iota(nu, lo, hi):
                                failures.append(f"ι not additive at {mu}, {nu} on {lo.label}")
                    pairs += 1

            for n in range(2, 4 if quick else 5):
                for k in range(0, 2 if quick else 3):
                    lo = _model(Family.SO_p_q, (1, n), [k])
                    hi = _model(Family.SO_p_q, (1, n + 1), [k])
                    index = inclusion_indices(lo, hi)
                    for i in range(lo.dimension):
                        w = [Fraction(0)] * hi.dimension
                        w[int(index[i])] = Fraction(1)
                        back = project_exact(hi, lo, w)
                        if back != [Fraction(int(j == i)) for j in range(lo.dimension)]:
                            failures.append(f"proj∘embed ≠ id on H^{n}, k={k}")
                            break
            for r in range(1, 3):
                lo = _model(Family.SL2_product, (r,), [1] * r)
                hi = _model(Family.SL2_product, (r + 1,), [1] * r + [0])
                for e in np.eye(lo.dimension):
                    if not np.array_equal(project(hi, lo, embed(lo, hi, e)), e):
                        failures.append(f"proj∘embed ≠ id on SL(2,R)^{r}")
                        break
            return CheckResult(name=name, passed=not failures, max_error=float(len(failures)),
                               details={"pairs": pairs, "failures": failures[:20]})
        except Exception as e:
            return _error_result(name, "lattice exactness", e)

    @staticmethod
    def check_multiplicity_one(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """dim Hom_𝔤(V_{μ_j}, V_{μ_k}) = 1 along the harmonic family."""
        name = "multiplicityOne"
        try:
            rows = []
            for n in (2, 3):
                for k in range(1, 3 if quick else 4):
                    lo = _model(Family.SO_p_q, (1, n), [k])
                    hi = _model(Family.SO_p_q, (1, n + 1), [k])
                    rows.append(multiplicity_one_check(lo, hi))
            dims = [r["dimension"] for r in rows]
            return CheckResult(name=name, passed=all(d == 1 for d in dims), sequence=dims,
                               details={"rows": rows})
        except Exception as e:
            return _error_result(name, "multiplicity one", e)

    @staticmethod
    def check_commuting_diagrams(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """gamma_commute_check and graded_proj_check on H^n, levels 2..5."""
        name = "commutingDiagrams"
        try:
            tol = get_settings().tolerances.proportionality
            levels = range(2, 5 if quick else 6)
            worst_gamma = worst_proj = 0.0
            for k in range(1, 3 if quick else 4):
                family = harmonic_family(levels, k)
                for j in range(len(family)):
                    points = random_points(family.model(j), rng, 3 if quick else 5)
                    for top in range(j + 1, len(family)):
                        v = _vector(rng, family.model(j).dimension)
                        w = _vector(rng, family.model(top).dimension)
                        worst_gamma = max(worst_gamma, gamma_commute_check(family, j, top, v, points)["maxError"])
                        worst_proj = max(worst_proj, graded_proj_check(family, j, top, w, points)["maxError"])
            worst = max(worst_gamma, worst_proj)
            return CheckResult(name=name, passed=worst <= tol, max_error=worst,
                               details={"gammaCommute": worst_gamma, "gradedProj": worst_proj,
                                        "levels": list(levels)})
        except Exception as e:
            return _error_result(name, "commuting diagrams", e)

    @staticmethod
    def check_limits(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """Kernel stabilization, c along SO(1,n) and SL(n), and the sphere-to-horosphere decay."""
        name = "limits"
        try:
            settings = get_settings()
            tol = settings.tolerances

            kernel_rows = []
            families = [harmonic_family(range(2, 4 if quick else 5), 1), sl2_product_family([1, 2, 3], [1])]
            for family in families:
                base = family.model(0)
                report = kernel_limit_check(family, 0, _vector(rng, base.dimension), base.random_real(rng, 0.7))
                kernel_rows.append({"family": family.to_dict()["levels"], "spread": report["spread"],
                                    "maxError": report["maxError"]})
            kernel_ok = all(r["spread"] <= tol.exact and r["maxError"] <= tol.identity for r in kernel_rows)

            top = 16 if quick else 41
            so_chain = chain_from_levels(Family.SO_p_q, 1, range(2, top))
            so_report = c_infinity(so_chain, WeightSequence(so_chain, (1,)).weights)
            so_ok = (so_report["tailDifference"] is not None and so_report["tailDifference"] < tol.cauchy
                     and so_report["limitEstimate"] > 0)

            sl_levels = list(range(2, top))
            sl_chain = chain_from_levels(Family.SL_n_R, None, sl_levels)
            sl_report = c_infinity(sl_chain, WeightSequence(sl_chain, (1,)).weights)
            sl_values = sl_report["sequence"]
            decreasing = all(b < a for a, b in zip(sl_values, sl_values[1:]))
            # c(ω₁+ρ) on SL(n,R) is 1/n under c(ρ) = 1
            harmonic_error = max(abs(c - 1.0 / n) * n for c, n in zip(sl_values, sl_levels))
            sl_ok = decreasing and harmonic_error <= tol.exact

            ts = [float(t) for t in range(1, 11)]
            sphere = sphere_to_horosphere_limit([_model(Family.SO_p_q, (1, 2), [k]) for k in range(1, 4)], ts)
            sphere_ok = all(r["monotone"] and r["distances"][-1] < 1e-4 for r in sphere["components"])

            parts = {"kernelStabilization": kernel_ok, "rankOneCauchy": so_ok,
                     "growingRankDecay": sl_ok, "sphereToHorosphere": sphere_ok}
            return CheckResult(
                name=name, passed=all(parts.values()),
                max_error=max(r["maxError"] for r in kernel_rows),
                sequence=sl_values,
                details={
                    "parts": parts,
                    "kernel": kernel_rows,
                    "rankOne": {"tailDifference": so_report["tailDifference"],
                                "limitEstimate": so_report["limitEstimate"]},
                    "growingRank": {"last": sl_values[-1], "belowOneMillionth": sl_values[-1] < 1e-6,
                                    "reciprocalLevelError": harmonic_error},
                    "sphere": [{"mu": r["mu"], "last": r["distances"][-1], "decayRate": r["decayRate"]}
                               for r in sphere["components"]],
                })
        except Exception as e:
            return _error_result(name, "limits", e)

    @staticmethod
    def check_noncommuting_defect(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """ι(R*_j ψ) = (c_{μ_j}/c_{μ_k}) R*_k(ι ψ), with some ratio away from 1."""
        name = "noncommutingDefect"
        try:
            tol = get_settings().tolerances.identity
            rows = []
            for k in (1, 2):
                family = harmonic_family(range(2, 4 if quick else 6), k)
                for j in range(len(family) - 1):
                    base = family.model(j)
                    report = noncommuting_defect(family, j, j + 1, _vector(rng, base.dimension),
                                                 base.random_real(rng, 0.7))
                    rows.append({"k": k, **report})
            worst = max(r["maxError"] for r in rows)
            separated = any(abs(r["ratio"] - 1.0) > 1e-3 for r in rows)
            return CheckResult(name=name, passed=worst <= tol and separated, max_error=worst,
                               sequence=[r["ratio"] for r in rows],
                               details={"rows": rows, "ratioAwayFromOne": separated})
        except Exception as e:
            return _error_result(name, "non-commutativity defect", e)

    # supplementary identities

    @staticmethod
    def check_model_constants(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """Cosine formula, Weyl dimension and ⟨ẽ, e*⟩·c_μ = 1 on every model kind."""
        name = "modelConstants"
        try:
            tol = get_settings().tolerances.identity
            heights = range(0, 3 if quick else 4)
            models = [_model(Family.SL_n_R, (2,), [k]) for k in heights]
            models += [_model(Family.SO_p_q, (1, q), [k]) for q in (2, 3, 4) for k in heights]
            models += [_model(Family.SL2_product, (2,), [a, b]) for a in (0, 1) for b in (0, 2)]
            cosine = ktilde = 0.0
            dimension_mismatch = []
            for model in models:
                oracle = model.c_mu_oracle()
                cosine = max(cosine, _relative(model.c_mu_cosine(), oracle))
                ktilde = max(ktilde, _relative(complex(model.e_tilde @ model.e_star) * oracle, 1.0))
                if model.weyl_dimension() != model.dimension:
                    dimension_mismatch.append(model.describe())
            worst = max(cosine, ktilde)
            return CheckResult(name=name, passed=worst <= tol and not dimension_mismatch, max_error=worst,
                               details={"cosineError": cosine, "eTildeError": ktilde,
                                        "weylMismatch": dimension_mismatch, "models": len(models)})
        except Exception as e:
            return _error_result(name, "model constants", e)

    @staticmethod
    def check_zonal_gegenbauer(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """f⁰_k(a_t) = C_k^{(n−1)/2}(cosh t)/C_k^{(n−1)/2}(1) on H^n."""
        name = "zonalGegenbauer"
        try:
            tol = get_settings().tolerances.identity
            worst = 0.0
            for n in range(2, 4 if quick else 6):
                alpha = (n - 1) / 2
                for k in range(0, 3 if quick else 5):
                    model = _model(Family.SO_p_q, (1, n), [k])
                    for t in rng.uniform(0.0, 1.5, size=4):
                        expected = eval_gegenbauer(k, alpha, np.cosh(t)) / eval_gegenbauer(k, alpha, 1.0)
                        worst = max(worst, _relative(model.zonal(model.a_element(t)), expected))
            return CheckResult(name=name, passed=worst <= tol, max_error=worst)
        except Exception as e:
            return _error_result(name, "zonal Gegenbauer oracle", e)

    @staticmethod
    def check_graded_ring(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """Γ(top(f·h)) = Γf·Γh on SL(2,R) and SL(2,R)² components."""
        name = "gradedRing"
        try:
            tol = get_settings().tolerances.identity
            pairs = [(_model(Family.SL_n_R, (2,), [a]), _model(Family.SL_n_R, (2,), [b]))
                     for a in range(0, 3) for b in range(1, 3)]
            pairs.append((_model(Family.SL2_product, (2,), [1, 0]), _model(Family.SL2_product, (2,), [0, 1])))
            pairs.append((_model(Family.SL2_product, (2,), [1, 1]), _model(Family.SL2_product, (2,), [1, 0])))
            rows = [graded_ring_check(left, right, rng, 4 if quick else 10) for left, right in pairs]
            worst = max(r["maxError"] for r in rows)
            return CheckResult(name=name, passed=worst <= tol, max_error=worst, details={"rows": rows})
        except Exception as e:
            return _error_result(name, "graded ring", e)

    @staticmethod
    def check_projective_families(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """Compatible evaluation f_k(x) = f_j(x) and a one-dimensional space of compatible K-invariant duals."""
        name = "projectiveFamilies"
        try:
            tol = get_settings().tolerances.exact
            families = [harmonic_family(range(2, 5 if quick else 7), 1), harmonic_family(range(2, 5), 2),
                        sl2_product_family([1, 2, 3], [1])]
            rows = []
            for family in families:
                base = family.model(0)
                evaluation = projective_evaluation_check(family, 0, _vector(rng, base.dimension),
                                                         random_points(base, rng, 4))
                duals = compatible_dual_dimension(family)
                rows.append({"family": family.to_dict()["levels"], "evaluationError": evaluation["maxError"],
                             "dualDimension": duals["dimension"]})
            worst = max(r["evaluationError"] for r in rows)
            passed = worst <= tol and all(r["dualDimension"] == 1 for r in rows)
            return CheckResult(name=name, passed=passed, max_error=worst, details={"rows": rows})
        except Exception as e:
            return _error_result(name, "projective families", e)

    @staticmethod
    def check_sphere_duality(rng: np.random.Generator, quick: bool = False) -> CheckResult:
        """⟨R_a f, φ⟩_U = ⟨f, R*_a φ⟩_U for radii in the compact torus."""
        name = "sphereDuality"
        try:
            tol = get_settings().tolerances.identity
            heights = range(1, 3 if quick else 4)
            models = [_model(Family.SL_n_R, (2,), [k]) for k in heights]
            models += [_model(Family.SO_p_q, (1, 2), [k]) for k in heights]
            worst = 0.0
            for model in models:
                f = RegularFunction.single(model, _vector(rng, model.dimension), Side.Z)
                phi = RegularFunction.single(model, _vector(rng, model.dimension), Side.Z)
                pairing = sphere_pairing(f, phi, model.compact_torus(rng.uniform(0, np.pi)))
                worst = max(worst, _relative(pairing["left"], pairing["right"]))
            return CheckResult(name=name, passed=worst <= tol, max_error=worst,
                               details={"models": [m.describe() for m in models]})
        except Exception as e:
            return _error_result(name, "sphere duality", e)


NUMBERED_CHECKS = (
    AcceptanceChecks.check_c_normalization,
    AcceptanceChecks.check_c_symmetry,
    AcceptanceChecks.check_rank_one_oracle,
    AcceptanceChecks.check_c_mu_calibration,
    AcceptanceChecks.check_dual_transform,
    AcceptanceChecks.check_schur_orthogonality,
    AcceptanceChecks.check_kernel_identities,
    AcceptanceChecks.check_kernel_tilde,
    AcceptanceChecks.check_lattice_exactness,
    AcceptanceChecks.check_multiplicity_one,
    AcceptanceChecks.check_commuting_diagrams,
    AcceptanceChecks.check_limits,
    AcceptanceChecks.check_noncommuting_defect,
)

SUPPLEMENTARY_CHECKS = (
    AcceptanceChecks.check_model_constants,
    AcceptanceChecks.check_zonal_gegenbauer,
    AcceptanceChecks.check_graded_ring,
    AcceptanceChecks.check_projective_families,
    AcceptanceChecks.check_sphere_duality,
)
