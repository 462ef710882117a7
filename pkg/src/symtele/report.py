"""Verification reports: protocol traces, randomized sweeps and dimension audits.

Every check carries a numeric residual and the tolerance it is held to, so a
report always shows how far from exact a claim came out.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import distinguishable as dist
from . import identical_teleport as ident
from .distinguishable import BellKind, QubitState
from .identical_teleport import PolarizationState
from .symmetric_space import OMEGA, occupation_basis, sym_dimension
from .tensor_core import ATOL, gram_matrix, phase_mismatch, rank

CSV_COLUMNS = ("trial", "alpha_re", "alpha_im", "beta_re", "beta_im", "kind", "probability", "fidelity")

#: (mode count, photon number, expected dimension) audited by ``dims``.
DIMENSION_CLAIMS = ((2, 2, 3), (4, 2, 10), (6, 3, 56))


def format_complex(z: complex) -> str:
    """``"re+imi"`` with shortest round-trip floats, e.g. ``"0.6+0.0i"``."""
    z = complex(z)
    re, im = z.real + 0.0, z.imag + 0.0
    sign = "-" if math.copysign(1.0, im) < 0 else "+"
    return f"{re!r}{sign}{abs(im)!r}i"


def parse_complex(text: str) -> complex:
    """Inverse of :func:`format_complex`; also accepts ``"0.6"`` and ``"0.8j"``."""
    cleaned = text.strip().replace(" ", "")
    if cleaned.endswith("i"):
        cleaned = cleaned[:-1] + "j"
    return complex(cleaned)


@dataclass
class Check:
    name: str
    residual: float
    # None marks an informational entry that never fails the run
    tolerance: Optional[float] = ATOL

    @property
    def passed(self) -> bool:
        if self.tolerance is None:
            return True
        return bool(self.residual <= self.tolerance)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "residual": float(self.residual),
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


@dataclass
class OutcomeRecord:
    kind: BellKind
    probability: float
    conditional: tuple
    corrected: tuple
    fidelity: Optional[float]

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.name,
            "probability": float(self.probability),
            "conditional": [format_complex(z) for z in self.conditional],
            "corrected": [format_complex(z) for z in self.corrected],
            "fidelity": None if self.fidelity is None else float(self.fidelity),
        }


@dataclass
class SweepRow:
    trial: int
    alpha: complex
    beta: complex
    kind: BellKind
    probability: float
    fidelity: float


@dataclass
class TeleportReport:
    protocol: str
    input: Optional[tuple] = None
    outcomes: list = field(default_factory=list)
    probability_sum: Optional[float] = None
    checks: list = field(default_factory=list)
    # auxiliary rows for text/CSV output; not part of the JSON schema
    table: list = field(default_factory=list)
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {
            "protocol": self.protocol,
            "input": None if self.input is None else [format_complex(z) for z in self.input],
            "outcomes": [o.as_dict() for o in self.outcomes],
            "probability_sum": self.probability_sum,
            "checks": [c.as_dict() for c in self.checks],
        }


def haar_states(trials: int, seed: int) -> list:
    """Haar-random qubit amplitude pairs from normalized complex Gaussians."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(trials):
        z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        z = z / np.linalg.norm(z)
        out.append((complex(z[0]), complex(z[1])))
    return out


# -- per-protocol traces -------------------------------------------------------


def _distinguishable_outcomes(alpha: complex, beta: complex):
    q = QubitState.normalized(alpha, beta)
    total = dist.total_state(q)
    records, conditional_mismatch = [], 0.0
    for kind in BellKind:
        outcome = dist.measure_bell(total, kind)
        cond = outcome.conditional_state.amplitudes
        corrected = dist.correction(kind).matrix @ cond
        fid = float(abs(np.vdot([q.alpha, q.beta], corrected)) ** 2)
        records.append(OutcomeRecord(kind, outcome.probability, tuple(cond), tuple(corrected), fid))
        expected = dist.expected_conditional(kind, q.alpha, q.beta)
        conditional_mismatch = max(conditional_mismatch, phase_mismatch(cond, expected))
    residual = (dist.reconstruct(dist.decompose(total)) - total).norm()
    return q, records, conditional_mismatch, residual


def _identical_outcomes(alpha: complex, beta: complex):
    p = PolarizationState.normalized(alpha, beta)
    total = ident.total_state(p)
    records, conditional_mismatch, leak = [], 0.0, 0.0
    for kind in BellKind:
        outcome = ident.measure_sym_bell(total, kind, p)
        cond = outcome.conditional_pair()
        records.append(
            OutcomeRecord(kind, outcome.probability, tuple(cond), tuple(outcome.corrected_pair()), outcome.fidelity)
        )
        # H on direction 2 plays the role of |0>, V of |1>
        expected = dist.expected_conditional(kind, p.alpha, p.beta)
        conditional_mismatch = max(conditional_mismatch, phase_mismatch(cond, expected))
        leak = max(leak, ident.leakage(outcome.conditional_state))
    return p, total, records, conditional_mismatch, leak


def _outcome_checks(prefix: str, records) -> list:
    probs = [r.probability for r in records]
    return [
        Check(f"{prefix}probability_sum", abs(sum(probs) - 1.0)),
        Check(f"{prefix}equiprobable_outcomes", max(abs(p - 0.25) for p in probs)),
        Check(f"{prefix}fidelity_after_correction", max(abs(1.0 - r.fidelity) for r in records)),
    ]


def teleport_distinguishable_report(alpha: complex, beta: complex) -> TeleportReport:
    q, records, mismatch, residual = _distinguishable_outcomes(alpha, beta)
    checks = _outcome_checks("", records) + [
        Check("conditional_states_closed_form", mismatch),
        Check("bell_decomposition_reconstruction", residual),
    ]
    return TeleportReport(
        protocol="distinguishable",
        input=(q.alpha, q.beta),
        outcomes=records,
        probability_sum=float(sum(r.probability for r in records)),
        checks=checks,
    )


def teleport_identical_report(alpha: complex, beta: complex) -> TeleportReport:
    p, total, records, mismatch, leak = _identical_outcomes(alpha, beta)
    _, dist_records, _, _ = _distinguishable_outcomes(alpha, beta)
    cross = max(
        phase_mismatch(r.conditional, d.conditional) for r, d in zip(records, dist_records)
    )
    checks = _outcome_checks("", records) + [
        Check("conditional_states_closed_form", mismatch),
        Check("conditional_leakage_outside_direction_2", leak),
        Check("complement_channel_weight", abs(ident.complement_weight(total))),
        Check("cross_protocol_conditional_mismatch", cross),
        Check("regrouping_residual", ident.regrouping_identity_check(p)),
    ]
    return TeleportReport(
        protocol="identical",
        input=(p.alpha, p.beta),
        outcomes=records,
        probability_sum=float(sum(r.probability for r in records)),
        checks=checks,
    )


# -- aggregate reports -----------------------------------------------------------


def dims_report() -> TeleportReport:
    report = TeleportReport(protocol="dims")
    for m, n, expected in DIMENSION_CLAIMS:
        formula = sym_dimension(m, n)
        enumerated = occupation_basis(OMEGA[:m], n).size
        report.table.append((m, n, formula, enumerated))
        report.checks.append(
            Check(
                f"sym_dimension({m},{n})={expected}",
                float(max(abs(formula - expected), abs(enumerated - expected))),
                0.0,
            )
        )
    return report


def impossibility_report() -> TeleportReport:
    dim = ident.impossibility_demo()
    gram_rank = ident.candidate_gram_rank()
    contrast = occupation_basis(ident.BELL_MODES, 2).size
    report = TeleportReport(protocol="impossibility")
    report.table = [("polarization-only two-photon dimension", dim),
                    ("rank of four candidate Bell vectors", gram_rank),
                    ("two-photon dimension over four modes", contrast)]
    report.checks = [
        Check("polarization_only_dimension=3", float(abs(dim - 3)), 0.0),
        Check("candidate_gram_rank<=3", float(max(0, gram_rank - 3)), 0.0),
        Check("four_mode_dimension=10", float(abs(contrast - 10)), 0.0),
    ]
    return report


def sweep(trials: int, seed: int) -> TeleportReport:
    """Run both protocols on ``trials`` Haar-random inputs and keep the worst residuals.

    Outcome records and CSV rows come from the identical-photon protocol.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    report = TeleportReport(protocol="sweep")
    worst = {}

    def keep(name, value):
        worst[name] = max(worst.get(name, 0.0), float(value))

    worst_sum = 1.0
    for trial, (alpha, beta) in enumerate(haar_states(trials, seed)):
        q, d_records, d_mismatch, d_residual = _distinguishable_outcomes(alpha, beta)
        _, _, i_records, i_mismatch, leak = _identical_outcomes(alpha, beta)
        for prefix, records in (("distinguishable_", d_records), ("identical_", i_records)):
            probs = [r.probability for r in records]
            keep(prefix + "max_probability_deviation", max(abs(p - 0.25) for p in probs))
            keep(prefix + "max_probability_sum_deviation", abs(sum(probs) - 1.0))
            keep(prefix + "max_fidelity_deviation", max(abs(1.0 - r.fidelity) for r in records))
        keep("distinguishable_max_conditional_mismatch", d_mismatch)
        keep("distinguishable_max_reconstruction_residual", d_residual)
        keep("identical_max_conditional_mismatch", i_mismatch)
        keep("identical_max_leakage", leak)
        keep(
            "max_cross_protocol_mismatch",
            max(phase_mismatch(a.conditional, b.conditional) for a, b in zip(i_records, d_records)),
        )
        total = sum(r.probability for r in i_records)
        if abs(total - 1.0) > abs(worst_sum - 1.0):
            worst_sum = total
        report.outcomes.extend(i_records)
        report.rows.extend(
            SweepRow(trial, q.alpha, q.beta, r.kind, r.probability, r.fidelity) for r in i_records
        )
    report.probability_sum = float(worst_sum)
    report.checks = [Check(name, value) for name, value in worst.items()]
    return report


def verify_report(trials: int = 100, seed: int = 42) -> TeleportReport:
    """Every certified claim in one report."""
    report = TeleportReport(protocol="verify")
    report.checks.extend(dims_report().checks)

    sw = sweep(trials, seed)
    report.checks.extend(sw.checks)
    report.probability_sum = sw.probability_sum

    bell = [dist.bell_state(k).amplitudes for k in BellKind]
    report.checks.append(
        Check("distinguishable_bell_gram_identity", float(np.max(np.abs(np.array([[np.vdot(a, b) for b in bell] for a in bell]) - np.eye(4)))))
    )
    sym = [ident.sym_bell(k).vector for k in BellKind]
    report.checks.append(
        Check("symmetric_bell_gram_identity", float(np.max(np.abs(gram_matrix(sym) - np.eye(4)))))
    )
    projectors, complement = ident.bell_decomposition()
    summed = complement
    for p in projectors.values():
        summed = summed + p
    report.checks.append(
        Check("bell_decomposition_of_unity", float(np.max(np.abs(summed.matrix - np.eye(summed.matrix.shape[0])))))
    )
    report.checks.append(
        Check("bell_complement_rank=6", float(abs(rank(complement.matrix) - 6)), 0.0)
    )

    oracle_gap, regroup, verbatim = 0.0, 0.0, math.inf
    for alpha, beta in haar_states(20, seed + 1):
        p = PolarizationState.normalized(alpha, beta)
        brute = ident.symmetrized_total_from_tensor(p)
        oracle_gap = max(oracle_gap, float(np.max(np.abs(brute.amplitudes - ident.total_state(p).amplitudes))))
        regroup = max(regroup, ident.regrouping_identity_check(p))
        verbatim = min(verbatim, ident.regrouping_identity_check(p, verbatim=True))
    report.checks.append(Check("total_state_matches_permutation_sum", oracle_gap))
    report.checks.append(Check("regrouping_residual", regroup))
    report.checks.append(Check("regrouping_residual_verbatim_terms (informational)", verbatim, None))

    report.checks.extend(impossibility_report().checks)
    return report


# -- serialization --------------------------------------------------------------


def to_json(report: TeleportReport) -> str:
    return json.dumps(report.as_dict(), indent=2) + "\n"


def to_csv(report: TeleportReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if report.rows or report.outcomes:
        writer.writerow(CSV_COLUMNS)
        rows = report.rows or [
            SweepRow(0, report.input[0], report.input[1], r.kind, r.probability, r.fidelity)
            for r in report.outcomes
        ]
        for row in rows:
            writer.writerow(
                [
                    row.trial,
                    repr(complex(row.alpha).real + 0.0),
                    repr(complex(row.alpha).imag + 0.0),
                    repr(complex(row.beta).real + 0.0),
                    repr(complex(row.beta).imag + 0.0),
                    row.kind.name,
                    repr(float(row.probability)),
                    repr(float(row.fidelity)),
                ]
            )
    else:
        writer.writerow(("name", "residual", "tolerance", "pass"))
        for c in report.checks:
            writer.writerow((c.name, repr(float(c.residual)), "" if c.tolerance is None else repr(c.tolerance), c.passed))
    return buf.getvalue()


def to_text(report: TeleportReport) -> str:
    lines = [f"protocol: {report.protocol}"]
    if report.input is not None:
        lines.append(f"input: alpha={format_complex(report.input[0])}  beta={format_complex(report.input[1])}")
    if report.protocol == "dims":
        lines.append(f"{'modes':>6} {'photons':>8} {'C(m+n-1,n)':>11} {'enumerated':>11}")
        lines.extend(f"{m:>6} {n:>8} {f:>11} {e:>11}" for m, n, f, e in report.table)
    elif report.table:
        lines.extend(f"{label}: {value}" for label, value in report.table)
    if report.outcomes and report.protocol != "sweep":
        lines.append(f"{'outcome':<9} {'probability':>12} {'fidelity':>10}  conditional -> corrected")
        for r in report.outcomes:
            cond = ", ".join(format_complex(z) for z in r.conditional)
            corr = ", ".join(format_complex(z) for z in r.corrected)
            lines.append(f"{r.kind.name:<9} {r.probability:>12.10f} {r.fidelity:>10.8f}  ({cond}) -> ({corr})")
    elif report.protocol == "sweep":
        trials = len({row.trial for row in report.rows})
        lines.append(f"trials: {trials}")
    if report.probability_sum is not None:
        lines.append(f"probability sum: {report.probability_sum!r}")
    lines.append("checks:")
    for c in report.checks:
        tol = "informational" if c.tolerance is None else f"tol {c.tolerance:.0e}"
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"  [{status}] {c.name}: residual {c.residual:.3e} ({tol})")
    lines.append("all checks passed" if report.passed else f"{len(report.failures())} check(s) FAILED")
    return "\n".join(lines) + "\n"
