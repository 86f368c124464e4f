"""Explanatory-variable subset search over through-origin fits.

Two strategies: exhaustive enumeration of all subsets up to a size cap
(the default, and ground truth at this scale) and the classic stepwise
add/drop loop driven by significance thresholds. Both return the same
deterministic report shape.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    DomainError,
    InsufficientObservations,
    RankDeficient,
    TooManyCandidates,
)
from .regression import DesignMatrix, RegressionFit, ResponseVector, fit_through_origin

MAX_CANDIDATES = 12


@dataclass(frozen=True)
class CandidateSet:
    """Candidate predictor columns and the response they explain."""

    predictors: tuple[tuple[str, np.ndarray], ...]
    response: ResponseVector

    def __post_init__(self) -> None:
        if not self.predictors:
            raise DimensionMismatch("need at least one candidate predictor")
        ids = [vid for vid, _ in self.predictors]
        if len(set(ids)) != len(ids):
            raise DimensionMismatch(f"duplicate candidate ids in {ids}")
        n = len(self.response.values)
        for vid, vec in self.predictors:
            if len(vec) != n:
                raise DimensionMismatch(
                    f"candidate {vid} has length {len(vec)}, response has {n}"
                )

    @classmethod
    def from_columns(
        cls,
        pairs: list[tuple[str, "np.ndarray | list[float]"]],
        response: ResponseVector,
    ) -> "CandidateSet":
        return cls(
            tuple((vid, np.asarray(vec, dtype=float)) for vid, vec in pairs),
            response,
        )

    @property
    def variable_ids(self) -> tuple[str, ...]:
        return tuple(vid for vid, _ in self.predictors)

    def design_for(self, subset: tuple[str, ...]) -> DesignMatrix:
        by_id = dict(self.predictors)
        return DesignMatrix(tuple((vid, by_id[vid]) for vid in subset))


@dataclass(frozen=True)
class RankedModel:
    variable_ids: tuple[str, ...]
    fit: RegressionFit
    all_significant: bool


@dataclass(frozen=True)
class SelectionReport:
    """Ranked fits plus the subsets that could not be fitted.

    ranked_models is ordered by adjusted R squared descending, ties
    broken by fewer variables and then lexicographic ids, so identical
    inputs always produce identical reports. converged is False only
    when the stepwise loop detected a cycle and stopped early.
    """

    ranked_models: tuple[RankedModel, ...]
    skipped: tuple[tuple[str, ...], ...] = ()
    converged: bool = True
    alpha: float = 0.05

    @property
    def best(self) -> RankedModel | None:
        return self.ranked_models[0] if self.ranked_models else None


def _rank_key(model: RankedModel) -> tuple:
    return (-model.fit.adjusted_r_squared, len(model.variable_ids), model.variable_ids)


def _fit_subset(
    cands: CandidateSet, subset: tuple[str, ...], alpha: float
) -> RankedModel | None:
    try:
        fit = fit_through_origin(cands.design_for(subset), cands.response)
    except (RankDeficient, InsufficientObservations):
        return None
    return RankedModel(
        variable_ids=subset,
        fit=fit,
        all_significant=all(p <= alpha for p in fit.p_values),
    )


def _guard(cands: CandidateSet) -> None:
    if len(cands.predictors) > MAX_CANDIDATES:
        raise TooManyCandidates(
            f"{len(cands.predictors)} candidates exceed the exhaustive "
            f"search cap of {MAX_CANDIDATES}"
        )


def exhaustive_subsets(
    cands: CandidateSet, max_size: int, alpha: float = 0.05
) -> SelectionReport:
    """Fit every non-empty candidate subset of at most max_size variables.

    Rank-deficient subsets are recorded as skipped rather than fitted.
    """
    _guard(cands)
    if not (1 <= max_size <= len(cands.predictors)):
        raise DomainError(
            f"max_size must lie in [1, {len(cands.predictors)}], got {max_size}"
        )
    ids = cands.variable_ids
    models: list[RankedModel] = []
    skipped: list[tuple[str, ...]] = []
    for size in range(1, max_size + 1):
        for subset in itertools.combinations(ids, size):
            model = _fit_subset(cands, subset, alpha)
            if model is None:
                skipped.append(subset)
            else:
                models.append(model)
    models.sort(key=_rank_key)
    return SelectionReport(
        ranked_models=tuple(models), skipped=tuple(skipped), alpha=alpha
    )


def stepwise(
    cands: CandidateSet, alpha_in: float = 0.05, alpha_out: float = 0.10
) -> SelectionReport:
    """Forward-backward selection to a fixed point.

    Each iteration first adds the candidate with the smallest p-value
    below alpha_in (ties broken by candidate order), then repeatedly
    drops the worst variable whose p-value exceeds alpha_out. Stops at
    a fixed point, or with converged False if the state cycles.
    """
    _guard(cands)
    if not (0.0 < alpha_in <= alpha_out):
        raise DomainError(
            f"need 0 < alpha_in <= alpha_out, got {alpha_in}, {alpha_out}"
        )
    ids = cands.variable_ids
    current: list[str] = []
    seen: set[frozenset[str]] = {frozenset()}
    converged = True

    while True:
        changed = False

        # Forward step: best addition by p-value, ties by candidate order.
        best_add: tuple[float, int] | None = None
        for position, vid in enumerate(ids):
            if vid in current:
                continue
            trial = tuple(v for v in ids if v in current or v == vid)
            model = _fit_subset(cands, trial, alpha_in)
            if model is None:
                continue
            p = float(model.fit.p_values[model.variable_ids.index(vid)])
            if p < alpha_in and (best_add is None or (p, position) < best_add):
                best_add = (p, position)
        if best_add is not None:
            current.append(ids[best_add[1]])
            current.sort(key=ids.index)
            changed = True

        # Backward steps: drop the worst insignificant variable until
        # everything retained clears alpha_out.
        while current:
            design = cands.design_for(tuple(current))
            try:
                fit = fit_through_origin(design, cands.response)
            except (RankDeficient, InsufficientObservations):
                break
            worst_idx = int(np.argmax(fit.p_values))
            if float(fit.p_values[worst_idx]) <= alpha_out:
                break
            current.remove(fit.variable_ids[worst_idx])
            changed = True

        if not changed:
            break
        state = frozenset(current)
        if state in seen:
            converged = False
            break
        seen.add(state)

    if not current:
        return SelectionReport(
            ranked_models=(), converged=converged, alpha=alpha_in
        )
    final = _fit_subset(cands, tuple(current), alpha_in)
    models = (final,) if final is not None else ()
    return SelectionReport(
        ranked_models=models, converged=converged, alpha=alpha_in
    )
