"""
Command-line front end: ``horolab space|cfun|weights|radon|limits|verify-all``.

Exit codes: 0 when every check passed, 1 when a verification failed (the
report is still printed), 2 for usage and configuration errors. Failures are
printed as JSON diagnostics.
"""
from typing import Any, Dict, List, Optional, Sequence
import csv
import io
import json
import logging
import sys

import click
import numpy as np
from rich import box
from rich.console import Console
from rich.table import Table
from rich.text import Text

from . import __version__
from .algebra.catalog import Family, make_space, parse_family, propagates, rho_norm, rho_positivity
from .algebra.propagation import WeightSequence, chain_from_levels, classify_limit, iota, is_minimal_in_fiber, restrict
from .algebra.roots import is_in_lambda_plus, omega_coefficients, weight_from_omega
from .analysis.cfunction import CALIBRATED_EXPONENT, c_function, c_infinity, c_mu, c_table
from .analyzers import LimitAnalyzer, VerificationAnalyzer
from .config import get_settings
from .models.reports import CheckResult, Scenario, VerificationReport
from .representations import RegularFunction, Side, build_model, model_kind_for
from .transforms import (
    KernelMethod,
    Method,
    dual_radon,
    kernel_operator_KXi,
    kernel_operator_KZ,
    kernel_tilde,
    sphere_pairing,
    sphere_to_horosphere_limit,
)
from .utils.error_handler import HorolabError, UnsupportedError, ValidationError, exit_code_for, handle_horolab_error

logger = logging.getLogger(__name__)

FORMATS = click.Choice(["json", "csv", "table"])


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


def _diagnostic(error: Exception) -> str:
    return json.dumps({"schemaVersion": get_settings().output.schema_version,
                       "error": handle_horolab_error(error)}, default=str)


class HorolabGroup(click.Group):
    """Group that turns library errors into a JSON diagnostic and an exit code."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except HorolabError as e:
            click.echo(_diagnostic(e))
            ctx.exit(exit_code_for(e))


# parsing helpers

def _ints(text: Optional[str], name: str) -> List[int]:
    if text is None or not text.strip():
        return []
    try:
        return [int(x) for x in text.replace(" ", "").split(",")]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got '{text}'", param_hint=name)


def _levels(text: str) -> List[int]:
    """``"2..40"`` or ``"2,3,5"``."""
    if ".." in text:
        start, _, stop = text.partition("..")
        try:
            return list(range(int(start), int(stop) + 1))
        except ValueError:
            raise click.BadParameter(f"bad level range '{text}'", param_hint="--levels")
    return _ints(text, "--levels")


def _floats(text: str) -> List[float]:
    if ".." in text:
        return [float(t) for t in _levels(text)]
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated numbers, got '{text}'", param_hint="--ts")


def _space(family: str, params: Optional[str], p: Optional[int], q: Optional[int], n: Optional[int]):
    if params:
        return make_space(family, _ints(params, "--params"))
    fam = parse_family(family)
    if fam in (Family.SL_n_R, Family.SL2_product):
        if n is None:
            raise ValidationError(f"{fam.value} needs --n (or --params)")
        return make_space(fam, (n,))
    if p is None or q is None:
        raise ValidationError(f"{fam.value} needs --p and --q (or --params)")
    return make_space(fam, (p, q))


def _model(space, mu: List[int]):
    return build_model(space, weight_from_omega(mu or [0] * space.rank, space.rs))


def space_options(func):
    func = click.option("--n", type=int, help="Level of SL(n,R) or SL(2,R)^n")(func)
    func = click.option("--q", type=int, help="Second parameter of SO/SU/Sp(p,q)")(func)
    func = click.option("--p", type=int, help="First parameter of SO/SU/Sp(p,q)")(func)
    func = click.option("--params", help="All parameters at once, e.g. 1,3")(func)
    func = click.option("--family", required=True, help="SL, SO, SU, Sp or SL2")(func)
    return func


def _fractions(values: Sequence[Any]) -> List[str]:
    return [str(v) for v in values]


# output helpers

def _envelope(command: str, result: Any) -> Dict[str, Any]:
    return {"schemaVersion": get_settings().output.schema_version, "command": command, "result": result}


def _echo_json(data: Dict[str, Any]) -> None:
    click.echo(json.dumps(data, indent=2, default=str))


def _echo_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    click.echo(buffer.getvalue(), nl=False)


def _echo_table(title: str, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
    table = Table(title=title, box=box.ROUNDED, show_header=True, header_style="bold magenta")
    for column in header:
        table.add_column(column, style="cyan" if column == header[0] else None)
    for row in rows:
        table.add_row(*[cell if isinstance(cell, Text) else str(cell) for cell in row])
    Console(file=sys.stdout).print(table)


def _emit(command: str, fmt: str, result: Any, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
    if fmt == "csv":
        _echo_csv(header, rows)
    elif fmt == "table":
        _echo_table(command, header, rows)
    else:
        _echo_json(_envelope(command, result))


def _status(passed: bool) -> Text:
    return Text("✓" if passed else "✗", style="green" if passed else "red")


def _emit_report(ctx: click.Context, report: VerificationReport, fmt: str, saved: Optional[str] = None) -> None:
    if saved:
        report.metadata["savedTo"] = saved
    rows = [[c.name, c.passed, "" if c.max_error is None else f"{c.max_error:.3e}"] for c in report.checks]
    if fmt == "csv":
        _echo_csv(["name", "passed", "maxError"], rows)
    elif fmt == "table":
        _echo_table(report.command, ["Check", "Status", "Max error"],
                    [[r[0], _status(r[1]), r[2]] for r in rows])
    else:
        _echo_json(report.to_json_dict())
    if not report.passed:
        ctx.exit(1)


def _check_report(command: str, result: CheckResult) -> VerificationReport:
    report = VerificationReport(command=command)
    report.add(result)
    return report


def _rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(get_settings().seed if seed is None else seed)


# commands

@click.group(cls=HorolabGroup)
@click.version_option(__version__, prog_name="horolab")
@click.option("--verbose", is_flag=True, help="Log at DEBUG level")
@click.option("--output-dir", type=click.Path(file_okay=False), default=None,
              help="Directory for saved JSON reports")
@click.pass_context
def cli(ctx: click.Context, verbose: bool, output_dir: Optional[str]):
    """Horospherical Radon transforms, c-functions and propagated limits."""
    _setup_logging(verbose)
    ctx.ensure_object(dict)
    ctx.obj["output_dir"] = output_dir or get_settings().output.output_dir


@cli.group(cls=HorolabGroup)
def space():
    """Restricted root data of catalog levels."""


@space.command("info")
@space_options
@click.option("--format", "fmt", type=FORMATS, default=None)
def space_info(family, params, p, q, n, fmt):
    """Roots, multiplicities, ρ and the available model of a level."""
    level = _space(family, params, p, q, n)
    info = level.to_dict()
    info["rhoPositivity"] = _fractions(rho_positivity(level))
    info["rhoNorm"] = str(rho_norm(level))
    try:
        info["model"] = model_kind_for(level)
    except UnsupportedError:
        info["model"] = None
    rows = [[key, value] for key, value in info.items()]
    _emit("space info", fmt or get_settings().output.default_format, info, ["key", "value"], rows)


def _tagged_space(text: str, name: str):
    """``"SO:1,3"`` as a catalog level."""
    family, sep, params = text.partition(":")
    if not sep or not params:
        raise click.BadParameter(f"expected FAMILY:PARAMS, got '{text}'", param_hint=name)
    return make_space(family, _ints(params, name))


@space.command("propagates")
@click.option("--lo", "lo_text", required=True, help="Lower level as FAMILY:PARAMS, e.g. SO:1,3")
@click.option("--hi", "hi_text", required=True, help="Upper level as FAMILY:PARAMS, e.g. SO:1,4")
def space_propagates(lo_text, hi_text):
    """Whether the upper level is a propagation of the lower one.

    Both levels must come from one family. Comparing levels of different
    families, such as SO:1,3 with SU:1,3, is a usage error (exit code 2),
    not a false result.
    """
    low, high = _tagged_space(lo_text, "--lo"), _tagged_space(hi_text, "--hi")
    _echo_json(_envelope("space propagates", {"lo": low.label, "hi": high.label,
                                              "propagates": propagates(low, high)}))


@cli.group(cls=HorolabGroup)
def cfun():
    """Harish-Chandra c-function."""


@cfun.command("eval")
@space_options
@click.option("--mu", default=None, help="ω-coefficients of μ; c is evaluated at μ+ρ")
@click.option("--format", "fmt", type=FORMATS, default=None)
def cfun_eval(family, params, p, q, n, mu, fmt):
    """c(μ+ρ), normalized by c(ρ) = 1."""
    level = _space(family, params, p, q, n)
    coefficients = _ints(mu, "--mu") or [0] * level.rank
    weight = weight_from_omega(coefficients, level.rs)
    value = c_function(level, weight + level.rho)
    result = {"space": level.label, "mu": coefficients, **value.to_dict()}
    if is_in_lambda_plus(weight, level.rs) and value.well_defined and value.value > 0:
        result["cMu"] = c_mu(level, weight)
        result["exponent"] = str(CALIBRATED_EXPONENT)
    _emit("cfun eval", fmt or get_settings().output.default_format, result,
          ["level", "mu", "cValue"], [[level.label, " ".join(map(str, coefficients)), value.value]])


@cfun.command("table")
@space_options
@click.option("--max-height", type=int, default=3, show_default=True)
@click.option("--format", "fmt", type=FORMATS, default=None)
def cfun_table(family, params, p, q, n, max_height, fmt):
    """c(μ+ρ) for every μ ∈ Λ⁺ up to a height."""
    level = _space(family, params, p, q, n)
    rows = c_table(level, max_height)
    _emit("cfun table", fmt or get_settings().output.default_format, {"space": level.label, "rows": rows},
          ["level", "mu", "cValue"], [[level.label, " ".join(map(str, r["mu"])), r["cValue"]] for r in rows])


@cfun.command("limit")
@click.option("--family", required=True)
@click.option("--p", type=int, default=None)
@click.option("--levels", required=True, help="Level range, e.g. 2..40")
@click.option("--mu", required=True, help="ω-coefficients at the first level")
@click.option("--format", "fmt", type=FORMATS, default=None)
def cfun_limit(family, p, levels, mu, fmt):
    """c(μ_j+ρ_j) along a propagated chain, with a limit estimate."""
    chain = chain_from_levels(family, p, _levels(levels))
    weights = WeightSequence(chain, tuple(_ints(mu, "--mu"))).weights
    report = c_infinity(chain, weights)
    rows = [[s.label, " ".join(str(int(k)) for k in omega_coefficients(w, s.rs)), c]
            for s, w, c in zip(chain, weights, report["sequence"])]
    _emit("cfun limit", fmt or get_settings().output.default_format,
          {"levels": [s.label for s in chain], **report}, ["level", "mu", "cValue"], rows)


@cli.group(cls=HorolabGroup)
def weights():
    """ι, restriction, fiber minimality and limit classification.

    Both levels come from the one --family. A pair that does not propagate is
    a usage error (exit code 2).
    """


def _pair(family: str, p: Optional[int], lo: int, hi: int):
    chain = chain_from_levels(family, p, [lo, hi])
    if not propagates(chain[0], chain[1]):
        raise ValidationError(f"{chain[1].label} is not a propagation of {chain[0].label}")
    return chain


@weights.command("iota")
@click.option("--family", required=True)
@click.option("--p", type=int, default=None)
@click.option("--lo", type=int, required=True)
@click.option("--hi", type=int, required=True)
@click.option("--mu", required=True, help="ω-coefficients at the lower level")
def weights_iota(family, p, lo, hi, mu):
    """ι_{hi,lo}(μ) as ω-coefficients of the upper level."""
    low, high = _pair(family, p, lo, hi)
    image = iota(weight_from_omega(_ints(mu, "--mu"), low.rs), low, high)
    _echo_json(_envelope("weights iota", {"lo": low.label, "hi": high.label,
                                          "image": _fractions(omega_coefficients(image, high.rs))}))


@weights.command("restrict")
@click.option("--family", required=True)
@click.option("--p", type=int, default=None)
@click.option("--lo", type=int, required=True)
@click.option("--hi", type=int, required=True)
@click.option("--mu", required=True, help="ω-coefficients at the upper level")
def weights_restrict(family, p, lo, hi, mu):
    """μ|𝔞_lo as ω-coefficients of the lower level."""
    low, high = _pair(family, p, lo, hi)
    image = restrict(weight_from_omega(_ints(mu, "--mu"), high.rs), high, low)
    _echo_json(_envelope("weights restrict", {
        "lo": low.label, "hi": high.label,
        "restriction": _fractions(omega_coefficients(image, low.rs)),
        "dominant": is_in_lambda_plus(image, low.rs),
    }))


@weights.command("check-fiber")
@click.option("--family", required=True)
@click.option("--p", type=int, default=None)
@click.option("--lo", type=int, required=True)
@click.option("--hi", type=int, required=True)
@click.option("--mu", required=True, help="ω-coefficients at the lower level")
@click.option("--candidate", required=True, help="ω-coefficients at the upper level")
def weights_check_fiber(family, p, lo, hi, mu, candidate):
    """Whether ``candidate`` is the smallest weight restricting to μ."""
    low, high = _pair(family, p, lo, hi)
    minimal = is_minimal_in_fiber(weight_from_omega(_ints(mu, "--mu"), low.rs),
                                  weight_from_omega(_ints(candidate, "--candidate"), high.rs), high, low)
    _echo_json(_envelope("weights check-fiber", {"lo": low.label, "hi": high.label, "minimal": minimal}))


@weights.command("classify")
@click.option("--family", required=True)
@click.option("--p", type=int, default=None)
@click.option("--levels", required=True)
def weights_classify(family, p, levels):
    """Finite-rank flag and family tag of a chain."""
    chain = chain_from_levels(family, p, _levels(levels))
    _echo_json(_envelope("weights classify", {"levels": [s.label for s in chain], **classify_limit(chain)}))


@cli.group(cls=HorolabGroup)
def radon():
    """Radon transforms, kernels and sphere limits on explicit models."""


def _vector(rng: np.random.Generator, dimension: int) -> np.ndarray:
    return rng.standard_normal(dimension) + 1j * rng.standard_normal(dimension)


def _relative(a: complex, b: complex) -> float:
    return float(abs(a - b) / max(abs(b), 1.0))


@radon.command("dual-check")
@space_options
@click.option("--mu", default=None)
@click.option("--points", type=int, default=20, show_default=True)
@click.option("--method", type=click.Choice([m.value for m in Method]), default=Method.QUADRATURE.value,
              show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--format", "fmt", type=FORMATS, default="json")
@click.pass_context
def radon_dual_check(ctx, family, params, p, q, n, mu, points, method, seed, fmt):
    """R*ψ_v = c_μ f_v at random (v, x)."""
    model = _model(_space(family, params, p, q, n), _ints(mu, "--mu"))
    rng = _rng(seed)
    oracle = model.c_mu_oracle()
    worst = 0.0
    for _ in range(points):
        v, x = _vector(rng, model.dimension), model.random_real(rng, 0.7)
        value = dual_radon(RegularFunction.single(model, v, Side.XI), x, method)
        worst = max(worst, _relative(value, oracle * model.coeff_f(v, x)))
    tol = get_settings().tolerances.identity
    result = CheckResult(name="dualRadon", passed=worst <= tol, max_error=worst,
                         details={"model": model.to_dict(), "cMuOracle": oracle,
                                  "cMu": c_mu(model.space, model.mu), "points": points})
    _emit_report(ctx, _check_report("radon dual-check", result), fmt)


@radon.command("sphere-limit")
@space_options
@click.option("--mu", default=None)
@click.option("--ts", default="1..10", show_default=True, help="Radii t of a = exp(tH)")
@click.option("--format", "fmt", type=FORMATS, default="json")
@click.pass_context
def radon_sphere_limit(ctx, family, params, p, q, n, mu, ts, fmt):
    """Distance of the scaled sphere embedding to the horosphere embedding."""
    model = _model(_space(family, params, p, q, n), _ints(mu, "--mu"))
    report = sphere_to_horosphere_limit([model], _floats(ts))
    row = report["components"][0]
    result = CheckResult(name="sphereToHorosphere", passed=row["monotone"],
                         max_error=row["distances"][-1] if row["distances"] else None,
                         sequence=row["distances"], details=row)
    _emit_report(ctx, _check_report("radon sphere-limit", result), fmt)


@radon.command("kernel")
@space_options
@click.option("--mu", default=None)
@click.option("--method", type=click.Choice([m.value for m in KernelMethod]), default=KernelMethod.AUTO.value,
              show_default=True)
@click.option("--truncation", type=int, default=None, help="Kernel truncation height (default: height of μ)")
@click.option("--tilde", type=int, default=None, help="Also sum k̃ up to this height at a point of 𝒪")
@click.option("--seed", type=int, default=None)
@click.option("--format", "fmt", type=FORMATS, default="json")
@click.pass_context
def radon_kernel(ctx, family, params, p, q, n, mu, method, truncation, tilde, seed, fmt):
    """K_Z f_v = ψ_v and K_Ξ ψ_v = f_v at a random point."""
    level = _space(family, params, p, q, n)
    model = _model(level, _ints(mu, "--mu"))
    rng = _rng(seed)
    v, point = _vector(rng, model.dimension), model.random_real(rng, 0.7)
    kz = kernel_operator_KZ(RegularFunction.single(model, v, Side.Z), point, truncation, method)
    kxi = kernel_operator_KXi(RegularFunction.single(model, v, Side.XI), point, truncation, method)
    errors = {"kZ": _relative(kz, model.coeff_psi(v, point)), "kXi": _relative(kxi, model.coeff_f(v, point))}
    details: Dict[str, Any] = {"model": model.to_dict(), "errors": errors}
    passed = max(errors.values()) <= get_settings().tolerances.identity
    if tilde is not None:
        g = model.a_element(rng.uniform(0.3, 1.0, size=level.rank)) @ model.random_k(rng)
        series = kernel_tilde(level, g, tilde)
        details["kernelTilde"] = series.to_dict()
        passed = passed and series.in_domain and series.error <= series.tail_bound + get_settings().tolerances.roundoff
    result = CheckResult(name="kernelOperators", passed=passed, max_error=max(errors.values()), details=details)
    _emit_report(ctx, _check_report("radon kernel", result), fmt)


@radon.command("duality")
@space_options
@click.option("--mu", default=None)
@click.option("--theta", type=float, default=None, help="Angle of the compact-torus radius")
@click.option("--seed", type=int, default=None)
@click.option("--format", "fmt", type=FORMATS, default="json")
@click.pass_context
def radon_duality(ctx, family, params, p, q, n, mu, theta, seed, fmt):
    """⟨R_a f, φ⟩_U = ⟨f, R*_a φ⟩_U with a in the compact torus."""
    model = _model(_space(family, params, p, q, n), _ints(mu, "--mu"))
    rng = _rng(seed)
    theta = rng.uniform(0, np.pi) if theta is None else theta
    f = RegularFunction.single(model, _vector(rng, model.dimension), Side.Z)
    phi = RegularFunction.single(model, _vector(rng, model.dimension), Side.Z)
    pairing = sphere_pairing(f, phi, model.compact_torus(theta))
    error = _relative(pairing["left"], pairing["right"])
    result = CheckResult(name="sphereDuality", passed=error <= get_settings().tolerances.identity, max_error=error,
                         details={"theta": theta, "left": str(pairing["left"]), "right": str(pairing["right"]),
                                  "nodes": pairing["nodes"]})
    _emit_report(ctx, _check_report("radon duality", result), fmt)


@cli.group(cls=HorolabGroup)
def limits():
    """Propagated-family experiments from scenario files."""


@limits.command("run")
@click.option("--scenario", "scenario_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=FORMATS, default=None, help="Overrides the scenario outputFormat")
@click.pass_context
def limits_run(ctx, scenario_path, fmt):
    """Run the checks of a YAML or JSON scenario."""
    scenario = Scenario.from_file(scenario_path)
    analyzer = LimitAnalyzer(ctx.obj["output_dir"])
    report = analyzer.run(scenario)
    saved = analyzer.save(report)
    _emit_report(ctx, report, fmt or scenario.output_format, saved)


@cli.command("verify-all")
@click.option("--quick", is_flag=True, help="Lower level and weight caps")
@click.option("--seed", type=int, default=None)
@click.option("--no-supplementary", is_flag=True, help="Run only the numbered acceptance checks")
@click.option("--format", "fmt", type=FORMATS, default="json")
@click.pass_context
def verify_all(ctx, quick, seed, no_supplementary, fmt):
    """The acceptance suite, one result per numbered criterion."""
    analyzer = VerificationAnalyzer(ctx.obj["output_dir"])
    report = analyzer.run(quick=quick, seed=seed, supplementary=not no_supplementary)
    saved = analyzer.save(report)
    _emit_report(ctx, report, fmt, saved)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        result = cli.main(args=list(argv) if argv is not None else None, prog_name="horolab",
                          standalone_mode=False)
        return result if isinstance(result, int) else 0
    except click.ClickException as e:
        e.show()
        return 2
    except click.exceptions.Abort:
        return 2
    except HorolabError as e:
        click.echo(_diagnostic(e))
        return exit_code_for(e)
    except Exception as e:
        click.echo(_diagnostic(e))
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
