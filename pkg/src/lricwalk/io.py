"""Stable text serialization for trajectories, spectra and sweep reports.

Floats are rendered with repr, the shortest string that round-trips, so a
fixed build and config always produce byte-identical files. Missing values
use fixed sentinels: a mixing time that was never reached is "not_reached"
and the corresponding verdict is "undefined".
"""

from __future__ import annotations

import json
from typing import IO, Iterable

from .dephasing import Trajectory
from .graph import Spectrum
from .mixing import FailedPoint, MixingReport

__all__ = [
    "fmt_float",
    "trajectory_csv",
    "trajectory_json",
    "spectrum_csv",
    "spectrum_json",
    "sweep_csv",
    "sweep_json",
    "write_text",
]

SWEEP_HEADER = "n,m,gamma,epsilon,t_mix,t_lower_exact,t_lower_asym,t_upper,sandwich_ok,source"


def fmt_float(x: float) -> str:
    return repr(float(x))


def _meta(traj: Trajectory) -> dict:
    return {
        "n": traj.spec.n_nodes,
        "m": traj.spec.distance_param,
        "gamma": traj.gamma,
        "integrator": traj.integrator,
        "dt": traj.dt,
    }


def trajectory_csv(traj: Trajectory) -> str:
    lines = ["t,node,probability"]
    for t, row in zip(traj.times, traj.probs):
        for node, p in enumerate(row):
            lines.append(f"{fmt_float(t)},{node},{fmt_float(p)}")
    return "\n".join(lines) + "\n"


def trajectory_json(traj: Trajectory) -> str:
    doc = {
        "metadata": _meta(traj),
        "samples": [
            {"t": float(t), "probabilities": [float(p) for p in row]}
            for t, row in zip(traj.times, traj.probs)
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def spectrum_csv(spectrum: Spectrum) -> str:
    lines = ["n,theta,energy"]
    for n, (theta, energy) in enumerate(zip(spectrum.mode_angles, spectrum.eigenvalues)):
        lines.append(f"{n},{fmt_float(theta)},{fmt_float(energy)}")
    return "\n".join(lines) + "\n"


def spectrum_json(spectrum: Spectrum) -> str:
    doc = [
        {"n": n, "theta": float(theta), "energy": float(energy)}
        for n, (theta, energy) in enumerate(zip(spectrum.mode_angles, spectrum.eigenvalues))
    ]
    return json.dumps(doc, indent=2) + "\n"


def _cell_t_mix(report: MixingReport) -> str:
    return "not_reached" if report.t_mix_numeric is None else fmt_float(report.t_mix_numeric)


def _cell_verdict(report: MixingReport) -> str:
    if report.sandwich_ok is None:
        return "undefined"
    return "true" if report.sandwich_ok else "false"


def sweep_csv(rows: Iterable[MixingReport | FailedPoint]) -> str:
    lines = [SWEEP_HEADER]
    for r in rows:
        if isinstance(r, FailedPoint):
            cells = [
                str(r.n),
                str(r.m),
                fmt_float(r.gamma),
                fmt_float(r.epsilon),
                "",
                "",
                "",
                "",
                "undefined",
                "failed",
            ]
        else:
            cells = [
                str(r.spec.n_nodes),
                str(r.spec.distance_param),
                fmt_float(r.gamma),
                fmt_float(r.epsilon),
                _cell_t_mix(r),
                fmt_float(r.t_lower_exact),
                fmt_float(r.t_lower_asym),
                fmt_float(r.t_upper),
                _cell_verdict(r),
                r.source,
            ]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def sweep_json(rows: Iterable[MixingReport | FailedPoint]) -> str:
    doc = []
    for r in rows:
        if isinstance(r, FailedPoint):
            doc.append(
                {
                    "n": r.n,
                    "m": r.m,
                    "gamma": r.gamma,
                    "epsilon": r.epsilon,
                    "source": "failed",
                    "error": r.reason,
                }
            )
        else:
            doc.append(
                {
                    "n": r.spec.n_nodes,
                    "m": r.spec.distance_param,
                    "gamma": r.gamma,
                    "epsilon": r.epsilon,
                    "t_mix": r.t_mix_numeric,
                    "t_lower_exact": r.t_lower_exact,
                    "t_lower_asym": r.t_lower_asym,
                    "t_upper": r.t_upper,
                    "sandwich_ok": r.sandwich_ok,
                    "source": r.source,
                }
            )
    return json.dumps(doc, indent=2) + "\n"


def write_text(path_or_file: str | IO[str], content: str):
    if hasattr(path_or_file, "write"):
        path_or_file.write(content)
    else:
        with open(path_or_file, "w", newline="\n") as fh:
            fh.write(content)
