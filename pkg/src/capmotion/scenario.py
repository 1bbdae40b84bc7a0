"""Scenario configuration, pipeline orchestration, and report/CSV emission.

A scenario is one self-contained JSON document describing the base set, the
motion, the lambda grid, quadrature settings, and the requested analyses.
Runs are deterministic for a fixed seed, all files are written only after
computation completes, and every float is printed with 17 significant
digits so the outputs round-trip.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import motions as mo
from . import sets as st
from .coefficients import QuadratureConfig, default_radius, r_independence_check
from .dimension import dimension_sweep, nonharmonicity_witness
from .errors import (CapmotionError, RadiusTooSmall, SchemaError,
                     UnknownMotionKind, UnknownSetKind)
from .motions import verify_motion_axioms
from .variation import (DEFAULT_RADO_ALPHAS, LambdaGrid, capacity_profile,
                        harmonicity_test, harnack_check, rado_criterion_check,
                        synthetic_profile)

ANALYSES = ("motion-axioms", "r-independence", "profile", "harmonicity",
            "harnack", "rado")
SYNTHETIC_TAGS = {
    "re_lambda": lambda lam: lam.real,
    "abs_lambda_squared": lambda lam: np.abs(lam) ** 2,
    "neg_abs_lambda_squared": lambda lam: -np.abs(lam) ** 2,
}


@dataclass(frozen=True)
class Scenario:
    name: str
    base_set: object
    motion: object
    grid: LambdaGrid
    analyses: Tuple[str, ...]
    quadrature_radius: Optional[float] = None  # None -> auto
    quadrature_nodes: int = 256
    quadrature_tol: float = 1e-12
    max_doublings: int = 6
    harnack_m: Optional[object] = "auto"  # float or "auto"
    synthetic_log_gamma: Optional[str] = None
    output_dir: str = "out"
    seed: int = 0


@dataclass
class RunReport:
    name: str
    entries: Dict[str, dict]
    files: List[str]
    timings: Dict[str, float]
    exit_code: int


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _as_complex(value, where: str) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if (isinstance(value, (list, tuple)) and len(value) == 2
            and all(isinstance(v, (int, float)) for v in value)):
        return complex(value[0], value[1])
    raise SchemaError(f"{where}: expected a number or [re, im] pair, got {value!r}")


def _complex_out(z: complex):
    return [z.real, z.imag]


def _require(d: dict, key: str, where: str):
    if key not in d:
        raise SchemaError(f"{where}: missing required field '{key}'")
    return d[key]


def build_set(descr: dict):
    if not isinstance(descr, dict):
        raise SchemaError("base_set: expected an object")
    kind = _require(descr, "kind", "base_set")
    if kind == "disk":
        return st.Disk(center=_as_complex(descr.get("center", 0.0), "base_set.center"),
                       radius=float(_require(descr, "radius", "base_set")))
    if kind == "segment":
        return st.Segment(a=_as_complex(_require(descr, "a", "base_set"), "base_set.a"),
                          b=_as_complex(_require(descr, "b", "base_set"), "base_set.b"))
    if kind == "ellipse":
        return st.Ellipse(center=_as_complex(descr.get("center", 0.0), "base_set.center"),
                          semi_major=float(_require(descr, "semi_major", "base_set")),
                          semi_minor=float(_require(descr, "semi_minor", "base_set")),
                          rotation=float(descr.get("rotation", 0.0)))
    if kind == "point_cloud":
        pts = _require(descr, "points", "base_set")
        return st.FinitePointCloud(tuple(_as_complex(p, "base_set.points") for p in pts))
    raise UnknownSetKind(f"unknown base_set kind {kind!r}")


def serialize_set(cset) -> dict:
    if isinstance(cset, st.Disk):
        return {"kind": "disk", "center": _complex_out(cset.center),
                "radius": cset.radius}
    if isinstance(cset, st.Segment):
        return {"kind": "segment", "a": _complex_out(cset.a), "b": _complex_out(cset.b)}
    if isinstance(cset, st.Ellipse):
        return {"kind": "ellipse", "center": _complex_out(cset.center),
                "semi_major": cset.semi_major, "semi_minor": cset.semi_minor,
                "rotation": cset.rotation}
    if isinstance(cset, st.FinitePointCloud):
        return {"kind": "point_cloud", "points": [_complex_out(p) for p in cset.points]}
    raise UnknownSetKind(f"cannot serialize set {type(cset).__name__}")


def build_motion(descr: dict):
    if not isinstance(descr, dict):
        raise SchemaError("motion: expected an object")
    kind = _require(descr, "kind", "motion")
    rho = float(descr.get("rho_max", mo.DEFAULT_RHO_MAX))
    if kind == "identity":
        return mo.Identity(rho_max=rho)
    if kind == "translation":
        return mo.Translation(c=_as_complex(descr.get("c", 1.0), "motion.c"), rho_max=rho)
    if kind == "scale_rotate":
        return mo.ScaleRotate(alpha=_as_complex(descr.get("alpha", 1.0), "motion.alpha"),
                              rho_max=rho)
    if kind == "joukowski":
        return mo.Joukowski(c=_as_complex(descr.get("c", 1.0), "motion.c"),
                            exclusion_radius=float(descr.get("exclusion_radius", 1.0)),
                            rho_max=rho)
    if kind == "scaled":
        return mo.Scaled(inner=build_motion(_require(descr, "inner", "motion")),
                         alpha=float(descr.get("alpha", 1.0)))
    if kind == "rebased":
        return mo.Rebased(inner=build_motion(_require(descr, "inner", "motion")),
                          lambda0=float(_require(descr, "lambda0", "motion")))
    raise UnknownMotionKind(f"unknown motion kind {kind!r}")


def serialize_motion(motion) -> dict:
    if isinstance(motion, mo.Identity):
        return {"kind": "identity", "rho_max": motion.rho_max}
    if isinstance(motion, mo.Translation):
        return {"kind": "translation", "c": _complex_out(complex(motion.c)),
                "rho_max": motion.rho_max}
    if isinstance(motion, mo.ScaleRotate):
        return {"kind": "scale_rotate", "alpha": _complex_out(complex(motion.alpha)),
                "rho_max": motion.rho_max}
    if isinstance(motion, mo.Joukowski):
        return {"kind": "joukowski", "c": _complex_out(complex(motion.c)),
                "exclusion_radius": motion.exclusion_radius, "rho_max": motion.rho_max}
    if isinstance(motion, mo.Scaled):
        return {"kind": "scaled", "alpha": motion.alpha,
                "inner": serialize_motion(motion.inner)}
    if isinstance(motion, mo.Rebased):
        return {"kind": "rebased", "lambda0": motion.lambda0,
                "inner": serialize_motion(motion.inner)}
    raise UnknownMotionKind(f"cannot serialize motion {type(motion).__name__}")


def parse_scenario(text: str) -> Scenario:
    """Parse and fully validate a scenario document (JSON)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: "
                          f"{exc.msg}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    known = {"name", "base_set", "motion", "grid", "quadrature", "analyses",
             "harnack_M", "synthetic_log_gamma", "output_dir", "seed"}
    for key in doc:
        if key not in known:
            raise SchemaError(f"unknown top-level field '{key}'")

    base = build_set(_require(doc, "base_set", "scenario"))
    motion = build_motion(_require(doc, "motion", "scenario"))

    gdoc = doc.get("grid", {})
    if not isinstance(gdoc, dict):
        raise SchemaError("grid: expected an object")
    grid = LambdaGrid(h=float(gdoc.get("h", 0.05)),
                      half_width=int(gdoc.get("half_width", 10)),
                      center=_as_complex(gdoc.get("center", 0.0), "grid.center"),
                      clip_radius=float(gdoc.get("clip", min(0.9, motion.rho_max))))

    qdoc = doc.get("quadrature", {})
    if not isinstance(qdoc, dict):
        raise SchemaError("quadrature: expected an object")
    radius = qdoc.get("radius", "auto")
    if radius == "auto":
        radius = None
    elif not isinstance(radius, (int, float)):
        raise SchemaError("quadrature.radius: expected a number or \"auto\"")

    analyses = doc.get("analyses", ["profile"])
    if (not isinstance(analyses, list) or not analyses
            or any(a not in ANALYSES for a in analyses)):
        raise SchemaError(f"analyses: expected a non-empty subset of {ANALYSES}")

    harnack_m = doc.get("harnack_M", "auto")
    if harnack_m != "auto" and not isinstance(harnack_m, (int, float)):
        raise SchemaError("harnack_M: expected a number or \"auto\"")

    synthetic = doc.get("synthetic_log_gamma")
    if synthetic is not None and synthetic not in SYNTHETIC_TAGS:
        raise SchemaError(f"synthetic_log_gamma: expected one of "
                          f"{sorted(SYNTHETIC_TAGS)}")

    scenario = Scenario(
        name=str(doc.get("name", "scenario")),
        base_set=base,
        motion=motion,
        grid=grid,
        analyses=tuple(analyses),
        quadrature_radius=None if radius is None else float(radius),
        quadrature_nodes=int(qdoc.get("n", 256)),
        quadrature_tol=float(qdoc.get("tol", 1e-12)),
        max_doublings=int(qdoc.get("max_doublings", 6)),
        harnack_m=harnack_m,
        synthetic_log_gamma=synthetic,
        output_dir=str(doc.get("output_dir", "out")),
        seed=int(doc.get("seed", 0)),
    )
    validate_scenario(scenario)
    return scenario


def validate_scenario(scenario: Scenario) -> None:
    """Cross-field validation beyond per-type invariants."""
    QuadratureConfig(radius=scenario.quadrature_radius or 1.0,
                     nodes=scenario.quadrature_nodes,
                     tol=scenario.quadrature_tol,
                     max_doublings=scenario.max_doublings)
    if scenario.quadrature_radius is not None:
        rmin = max(st.support_radius(scenario.base_set),
                   scenario.motion.min_domain_radius())
        if scenario.quadrature_radius <= rmin:
            raise RadiusTooSmall(
                f"quadrature radius {scenario.quadrature_radius} must exceed "
                f"{rmin} (base support / excluded region)")
    if scenario.grid.clip_radius > scenario.motion.rho_max + 1e-12:
        raise SchemaError(
            f"grid clip {scenario.grid.clip_radius} exceeds the motion's "
            f"rho_max {scenario.motion.rho_max}")


def serialize_scenario(scenario: Scenario) -> str:
    doc = {
        "name": scenario.name,
        "base_set": serialize_set(scenario.base_set),
        "motion": serialize_motion(scenario.motion),
        "grid": {"h": scenario.grid.h, "half_width": scenario.grid.half_width,
                 "center": _complex_out(complex(scenario.grid.center)),
                 "clip": scenario.grid.clip_radius},
        "quadrature": {"radius": ("auto" if scenario.quadrature_radius is None
                                  else scenario.quadrature_radius),
                       "n": scenario.quadrature_nodes,
                       "tol": scenario.quadrature_tol,
                       "max_doublings": scenario.max_doublings},
        "analyses": list(scenario.analyses),
        "harnack_M": scenario.harnack_m,
        "output_dir": scenario.output_dir,
        "seed": scenario.seed,
    }
    if scenario.synthetic_log_gamma is not None:
        doc["synthetic_log_gamma"] = scenario.synthetic_log_gamma
    return json.dumps(doc, indent=2) + "\n"


def _quadrature_for(scenario: Scenario) -> QuadratureConfig:
    radius = scenario.quadrature_radius
    if radius is None:
        radius = default_radius(scenario.base_set, scenario.motion)
    return QuadratureConfig(radius=radius, nodes=scenario.quadrature_nodes,
                            tol=scenario.quadrature_tol,
                            max_doublings=scenario.max_doublings)


def _profile_csv(profile, residuals) -> str:
    grid = profile.grid
    lams = grid.lambdas()
    mask = grid.mask()
    lines = ["lambda_re,lambda_im,abs_a,gamma,log_gamma,laplacian_residual"]
    for i in range(lams.shape[0]):
        for j in range(lams.shape[1]):
            if not mask[i, j]:
                continue
            res = residuals[i, j] if residuals is not None else float("nan")
            lines.append(",".join([
                _fmt(lams[i, j].real), _fmt(lams[i, j].imag),
                _fmt(profile.abs_a[i, j]), _fmt(profile.gamma[i, j]),
                _fmt(profile.log_gamma[i, j]), _fmt(res)]))
    return "\n".join(lines) + "\n"


def _heatmap_csv(grid: LambdaGrid, values: np.ndarray) -> str:
    """Plot-ready (x, y, value) triples."""
    lams = grid.lambdas()
    mask = grid.mask()
    lines = ["x,y,value"]
    for i in range(lams.shape[0]):
        for j in range(lams.shape[1]):
            if mask[i, j]:
                lines.append(",".join([_fmt(lams[i, j].real), _fmt(lams[i, j].imag),
                                       _fmt(values[i, j])]))
    return "\n".join(lines) + "\n"


def run(scenario: Scenario) -> RunReport:
    """Execute the requested analyses in dependency order.

    Exit code 0 when every verdict is consistent, 2 when any analysis
    reports a violation; library errors propagate to the CLI (exit 1).
    """
    quad = _quadrature_for(scenario)
    requested = list(scenario.analyses)
    needs_profile = any(a in requested for a in ("profile", "harmonicity",
                                                 "harnack", "rado"))
    entries: Dict[str, dict] = {}
    timings: Dict[str, float] = {}
    pending_files: Dict[str, str] = {}

    profile = None
    residuals = None
    if needs_profile:
        t0 = time.perf_counter()
        if scenario.synthetic_log_gamma is not None:
            profile = synthetic_profile(scenario.grid,
                                        SYNTHETIC_TAGS[scenario.synthetic_log_gamma])
        else:
            profile = capacity_profile(scenario.base_set, scenario.motion,
                                       scenario.grid, quad)
        timings["profile"] = time.perf_counter() - t0
        if "profile" in requested:
            entries["profile"] = {
                "verdict": "ok",
                "summary": f"base_gamma={_fmt(profile.base_gamma)}, "
                           f"gamma range [{_fmt(np.nanmin(profile.gamma))}, "
                           f"{_fmt(np.nanmax(profile.gamma))}]",
            }

    for analysis in ANALYSES:
        if analysis not in requested or analysis == "profile":
            continue
        t0 = time.perf_counter()
        if analysis == "motion-axioms":
            rep = verify_motion_axioms(scenario.motion, sample_count=200,
                                       seed=scenario.seed)
            verdict = ("consistent" if rep.clean and rep.holomorphy_deviation < 1e-8
                       else "violated")
            entries[analysis] = {
                "verdict": verdict,
                "summary": f"identity_dev={_fmt(rep.identity_at_zero)}, "
                           f"holomorphy_dev={_fmt(rep.holomorphy_deviation)}, "
                           f"collisions={len(rep.injectivity_violations)}",
            }
        elif analysis == "r-independence":
            r1 = quad.radius
            r2 = 2.0 * quad.radius
            lams = scenario.grid.clip_radius * np.linspace(-0.9, 0.9, 9)
            worst = max(r_independence_check(scenario.motion, complex(l), r1, r2,
                                             n=scenario.quadrature_nodes)
                        for l in lams)
            verdict = "consistent" if worst < 1e-9 else "violated"
            entries[analysis] = {
                "verdict": verdict,
                "summary": f"max |a(R1)-a(R2)| = {_fmt(worst)} over 9 lambdas "
                           f"(R1={_fmt(r1)}, R2={_fmt(r2)})",
            }
        elif analysis == "harmonicity":
            rep = harmonicity_test(profile, tol=1e-6)
            residuals = rep.laplacian_residuals
            mv = "; ".join(f"r={_fmt(r)}: {_fmt(d)}"
                           for r, d in rep.mean_value_deviations)
            entries[analysis] = {
                "verdict": rep.verdict,
                "summary": f"max_laplacian_residual={_fmt(rep.max_laplacian_residual)}, "
                           f"mean_value [{mv}]",
            }
        elif analysis == "harnack":
            if scenario.harnack_m == "auto":
                m_bound = float(np.nanmax(profile.gamma)) * (1.0 + 1e-9)
            else:
                m_bound = float(scenario.harnack_m)
            violations = harnack_check(profile, m_bound)
            entries[analysis] = {
                "verdict": "consistent" if not violations else "violated",
                "summary": f"M={_fmt(m_bound)}, violations={len(violations)}",
            }
        elif analysis == "rado":
            rep = rado_criterion_check(profile.gamma, scenario.grid,
                                       DEFAULT_RADO_ALPHAS)
            entries[analysis] = {
                "verdict": "consistent" if rep.all_consistent else "violated",
                "summary": (f"alphas={len(rep.per_alpha)}, violating="
                            f"{[_fmt(a) for a in rep.violating_alphas]}"),
            }
        timings[analysis] = time.perf_counter() - t0

    if profile is not None:
        pending_files["profile.csv"] = _profile_csv(profile, residuals)
        pending_files["plot_log_gamma.csv"] = _heatmap_csv(scenario.grid,
                                                           profile.log_gamma)
        if residuals is not None:
            pending_files["plot_laplacian_residual.csv"] = _heatmap_csv(
                scenario.grid, residuals)

    exit_code = 0 if all(e["verdict"] in ("ok", "consistent")
                         for e in entries.values()) else 2

    out = Path(scenario.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    report_lines = [f"scenario: {scenario.name}"]
    for analysis in ANALYSES:
        if analysis in entries:
            e = entries[analysis]
            report_lines.append(f"{analysis}: {e['verdict']} ({e['summary']})")
    for analysis, dt in timings.items():
        report_lines.append(f"timing {analysis}: {dt:.3f} s")
    report_lines.append(f"exit_code: {exit_code}")
    pending_files["report.txt"] = "\n".join(report_lines) + "\n"

    files = []
    for fname, content in pending_files.items():
        path = out / fname
        path.write_text(content)
        files.append(str(path))

    return RunReport(name=scenario.name, entries=entries, files=files,
                     timings=timings, exit_code=exit_code)


def dimension_demo(t: float, samples: int, output_dir: str) -> RunReport:
    """Counterexample pipeline: certificate plus a dimension sweep CSV."""
    t0 = time.perf_counter()
    cert = nonharmonicity_witness(t, sample_count=max(samples, 3))
    sweep = dimension_sweep(t, np.linspace(0.0, 0.99, 100))
    elapsed = time.perf_counter() - t0

    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    cert_path = out / "certificate.txt"
    cert_path.write_text(cert.render())
    lines = ["t,lambda,dim,sign"]
    for lam, dim, sign in zip(sweep.lambdas, sweep.dims, sweep.signs):
        lines.append(f"{_fmt(t)},{_fmt(lam)},{_fmt(dim)},{sign.value}")
    sweep_path = out / "dimension_sweep.csv"
    sweep_path.write_text("\n".join(lines) + "\n")

    entries = {"dimension-demo": {
        "verdict": "ok",
        "summary": f"delta={_fmt(cert.delta)}, zero_samples={len(cert.zero_samples)}, "
                   f"positive_samples={len(cert.positive_samples)}, "
                   f"rules={len(cert.rules)}",
    }}
    return RunReport(name=f"dimension-demo t={_fmt(t)}", entries=entries,
                     files=[str(cert_path), str(sweep_path)],
                     timings={"dimension-demo": elapsed}, exit_code=0)
