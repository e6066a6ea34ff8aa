"""Bound values packaged together with the spectral data that certifies them."""

from __future__ import annotations

from dataclasses import dataclass

# Recognised bound kinds.  chi_lb is a chromatic lower bound (M - m)/(-m),
# alpha_ratio_ub an independence-ratio upper bound (-m + 2 eps)/(R - m - eps),
# chi_frac_lb a fractional-chromatic lower bound (R - m)/(-m) with R = (A1, 1).
KIND_CHI_LB = "chi_lb"
KIND_ALPHA_RATIO_UB = "alpha_ratio_ub"
KIND_CHI_FRAC_LB = "chi_frac_lb"

_KINDS = (KIND_CHI_LB, KIND_ALPHA_RATIO_UB, KIND_CHI_FRAC_LB)


@dataclass(frozen=True)
class BoundReport:
    """A single computed bound.

    m and M are the spectral extremes used by the formula.  R and epsilon are
    only present for ratio-type bounds built from an approximate eigenvalue of
    the all-ones function; they are None otherwise.
    """

    kind: str
    value: float
    m: float
    M: float
    R: float | None = None
    epsilon: float | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown bound kind {self.kind!r}")

    def formula_value(self) -> float:
        """Recompute the value from (m, M, R, epsilon); used as a consistency check."""
        if self.kind == KIND_CHI_LB:
            return (self.M - self.m) / (-self.m)
        if self.kind == KIND_CHI_FRAC_LB:
            return (self.R - self.m) / (-self.m)
        return (-self.m + 2.0 * self.epsilon) / (self.R - self.m - self.epsilon)

    def as_dict(self) -> dict:
        d = {"kind": self.kind, "value": self.value, "m": self.m, "M": self.M}
        if self.R is not None:
            d["R"] = self.R
        if self.epsilon is not None:
            d["epsilon"] = self.epsilon
        return d
