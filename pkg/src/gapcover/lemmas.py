"""Structural invariants behind the distinguishers, as runnable checks.

The distinguishers are correct because promise instances force specific
shapes on their kernel lattices.  This module re-states those shapes as
named checks that can be audited on any promise instance:

- ``no-kernel-support-bound``: on a NO instance, every kernel basis vector
  is nonzero on at most 2*(dim - eta*d) positions (dim is the subset count
  for set cover, the vertex count for hypergraphs).
- ``no-support-union-bound``: the union of those supports obeys the same
  bound, i.e. the whole kernel lattice fits in that coordinate subspace.
- ``yes-full-support-vector``: on a hypergraph YES instance, scaling an
  exact cover's indicator by k and subtracting the all-ones vector lands in
  the kernel and vanishes nowhere.
- ``yes-projection-norm-bound``: on a set cover YES instance that reaches
  the norm comparison step, the canonical difference vector projects onto
  the kernel's vanishing positions with squared norm at most d.
- ``threshold-margin``: in range, the step thresholds leave the gap the norm
  comparison relies on (eta*d - 2*(m - eta*d) > d for set cover, and a
  positive vanishing-position requirement for hypergraphs).
- ``verdict-oracle-agreement``: the distinguisher's answer equals the
  oracle's ground-truth class.

Each check function returns a list of violations; an empty list means the
invariant held everywhere it applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .distinguisher import distinguish_hypergraph_vc, distinguish_set_cover
from .exact_linalg import hamming_weight, kernel_lattice_basis
from .instances import (
    GapParams,
    HypergraphInstance,
    SetCoverInstance,
    build_hypergraph_incidence,
    build_set_cover_incidence,
)
from .oracle import classify_hypergraph, classify_set_cover, has_exact_vertex_cover

__all__ = ["LemmaViolation", "LemmaReport", "audit_instance", "audit_batch", "CHECK_NAMES"]

CHECK_NAMES = (
    "no-kernel-support-bound",
    "no-support-union-bound",
    "yes-full-support-vector",
    "yes-projection-norm-bound",
    "threshold-margin",
    "verdict-oracle-agreement",
)


@dataclass(frozen=True)
class LemmaViolation:
    check: str
    detail: str


@dataclass(frozen=True)
class LemmaReport:
    """How often each check was evaluated, plus every violation found."""

    evaluated: dict[str, int]
    violations: tuple[LemmaViolation, ...]

    def ok(self) -> bool:
        return not self.violations


def _support(vec) -> int:
    return hamming_weight(vec)


def _audit_no_kernel(kernel, dim: int, params: GapParams, evaluated, violations) -> None:
    bound = 2 * (dim - params.gap_bound())
    for v in kernel.vectors:
        evaluated["no-kernel-support-bound"] += 1
        if Fraction(_support(v)) > bound:
            violations.append(
                LemmaViolation(
                    "no-kernel-support-bound",
                    f"basis vector with support {_support(v)} exceeds {bound}",
                )
            )
    evaluated["no-support-union-bound"] += 1
    union = set()
    for v in kernel.vectors:
        union.update(i for i, x in enumerate(v) if x != 0)
    if Fraction(len(union)) > bound:
        violations.append(
            LemmaViolation(
                "no-support-union-bound",
                f"support union of size {len(union)} exceeds {bound}",
            )
        )


def audit_instance(
    inst: SetCoverInstance | HypergraphInstance,
    params: GapParams,
    expected: str | None = None,
) -> LemmaReport:
    """Run every applicable check on one instance.

    ``expected`` is the promise class when the caller already knows it;
    otherwise the oracle classifies first.  Instances that satisfy neither
    promise only get the parameter-level checks.
    """
    evaluated = {name: 0 for name in CHECK_NAMES}
    violations: list[LemmaViolation] = []

    if isinstance(inst, SetCoverInstance):
        truth = expected or classify_set_cover(inst, params)
        m = inst.num_sets
        verdict = distinguish_set_cover(inst, params)
        evaluated["threshold-margin"] += 1
        if not params.gap_bound() - 2 * (m - params.gap_bound()) > params.d:
            violations.append(
                LemmaViolation("threshold-margin", f"margin failed at d={params.d}, m={m}")
            )
        if truth == "NO":
            kernel = kernel_lattice_basis(build_set_cover_incidence(inst))
            _audit_no_kernel(kernel, m, params, evaluated, violations)
        if truth == "YES" and verdict.decided_at == "step4":
            evaluated["yes-projection-norm-bound"] += 1
            if verdict.projection_norm_sq > params.d:
                violations.append(
                    LemmaViolation(
                        "yes-projection-norm-bound",
                        f"projection norm squared {verdict.projection_norm_sq} exceeds d={params.d}",
                    )
                )
        if truth in ("YES", "NO"):
            evaluated["verdict-oracle-agreement"] += 1
            if verdict.answer != truth:
                violations.append(
                    LemmaViolation(
                        "verdict-oracle-agreement",
                        f"distinguisher said {verdict.answer} at {verdict.decided_at}, oracle says {truth}",
                    )
                )
    else:
        truth = expected or classify_hypergraph(inst, params)
        n = inst.vertex_count
        verdict = distinguish_hypergraph_vc(inst, params)
        evaluated["threshold-margin"] += 1
        if not 2 * params.gap_bound() - n > 0:
            violations.append(
                LemmaViolation("threshold-margin", f"requirement not positive at d={params.d}, n={n}")
            )
        if truth == "NO":
            kernel = kernel_lattice_basis(build_hypergraph_incidence(inst))
            _audit_no_kernel(kernel, n, params, evaluated, violations)
        if truth == "YES":
            evaluated["yes-full-support-vector"] += 1
            witness = has_exact_vertex_cover(inst, params.d).witness
            if witness is None:
                violations.append(
                    LemmaViolation("yes-full-support-vector", "oracle found no exact vertex cover")
                )
            else:
                chosen = set(witness)
                vec = tuple(
                    inst.uniformity * (1 if v in chosen else 0) - 1 for v in range(n)
                )
                incidence = build_hypergraph_incidence(inst)
                image = incidence.mul_vec(vec)
                if any(image) or not all(vec):
                    violations.append(
                        LemmaViolation(
                            "yes-full-support-vector",
                            f"scaled cover indicator fails: image={image}, vector={vec}",
                        )
                    )
        if truth in ("YES", "NO"):
            evaluated["verdict-oracle-agreement"] += 1
            if verdict.answer != truth:
                violations.append(
                    LemmaViolation(
                        "verdict-oracle-agreement",
                        f"distinguisher said {verdict.answer} at {verdict.decided_at}, oracle says {truth}",
                    )
                )

    return LemmaReport(evaluated, tuple(violations))


def audit_batch(items) -> LemmaReport:
    """Merge :func:`audit_instance` reports over generated batch items."""
    evaluated = {name: 0 for name in CHECK_NAMES}
    violations: list[LemmaViolation] = []
    for item in items:
        report = audit_instance(item.instance, item.params, item.expected)
        for name, count in report.evaluated.items():
            evaluated[name] += count
        violations.extend(report.violations)
    return LemmaReport(evaluated, tuple(violations))
