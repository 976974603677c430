"""Configuration of a verification run."""

from __future__ import annotations
from typing import Any
import os
import pathlib
import dataclasses
import numpy as np
from qborel import mixins
from qborel.scalars import rational, NumericDomain
from qborel.roots import RootDatum, datum_from_label
from qborel.polq import Polq, polq
from qborel.findim import FiniteAbelianGroup, parse_group

__all__ = [
    "EXACT_TOLERANCE",
    "NUMERIC_TOLERANCE",
    "UNITARITY_TOLERANCE",
    "REPORT_DIR_VARIABLE",
    "REPORT_NAME",
    "VerifyConfig",
]

EXACT_TOLERANCE = 0.0
"""Tolerance of the exact suites, whose residuals count failing samples."""

NUMERIC_TOLERANCE = 1e-9
"""Tolerance of the relative residuals of the truncated and numeric suites."""

UNITARITY_TOLERANCE = 1e-12
"""Tolerance of the finite-dimensional operator identities."""

REPORT_DIR_VARIABLE = "QBOREL_REPORT_DIR"
"""Environment variable naming the default report directory."""

REPORT_NAME = "qborel-verify.json"
"""File name of the report inside the report directory."""


def _positive(name: str, value: Any, minimum: int) -> int:
    value = int(value)
    if value < minimum:
        raise ValueError(f"{name} must be at least {minimum}, got {value}")
    return value


@dataclasses.dataclass(eq=False, repr=False)
class VerifyConfig(
    mixins.Printable,
):
    """
    The parameters shared by every suite of a run.

    Fields left at :obj:`None` are chosen by each suite from the rank of
    the root datum.
    """

    datum: str = "A1"
    """Label of the root datum, see :func:`qborel.roots.datum_from_label`."""

    q: str = "1/2"
    """Rational deformation parameter in :math:`(0, 1)`."""

    fock_dim: None | int = None
    """Cutoff of every Fock mode."""

    p_window: int = 2
    """Radius of the window in the weight lattice."""

    rep_cutoff: int = 1
    """Largest coordinate of the highest weights that are sampled."""

    group: str = "2,2"
    """Cyclic orders of the finite abelian group."""

    seed: int = 0
    """Seed of every random sample."""

    samples: int = 20
    """Number of random elements drawn by the sampling suites."""

    report: None | pathlib.Path = None
    """Report file, defaults to :data:`REPORT_NAME` in ``$QBOREL_REPORT_DIR``."""

    jobs: int = 1
    """Number of worker threads."""

    def __post_init__(self):
        self.datum = self.root_datum.label
        NumericDomain(q=rational(self.q))
        self.q = str(rational(self.q))
        parse_group(self.group)
        if self.fock_dim is not None:
            self.fock_dim = _positive("the Fock cutoff", self.fock_dim, 1)
        self.p_window = _positive("the window radius", self.p_window, 0)
        self.rep_cutoff = _positive("the representation cutoff", self.rep_cutoff, 0)
        self.samples = _positive("the number of samples", self.samples, 0)
        self.jobs = _positive("the number of jobs", self.jobs, 1)
        if self.report is not None:
            self.report = pathlib.Path(self.report)

    @property
    def root_datum(self) -> RootDatum:
        return datum_from_label(self.datum)

    @property
    def algebra(self) -> Polq:
        return polq(self.root_datum, self.q)

    @property
    def finite_group(self) -> FiniteAbelianGroup:
        return parse_group(self.group)

    def rng(self) -> np.random.Generator:
        """A fresh generator, so that every suite draws the same samples in any order."""
        return np.random.default_rng(self.seed)

    def cutoff(self, rank_one: int, higher: int) -> int:
        """The Fock cutoff, falling back to a default depending on the rank."""
        if self.fock_dim is not None:
            return self.fock_dim
        return rank_one if self.root_datum.rank == 1 else higher

    @property
    def report_path(self) -> pathlib.Path:
        if self.report is not None:
            return self.report
        return pathlib.Path(os.environ.get(REPORT_DIR_VARIABLE, ".")) / REPORT_NAME

    def parameters(self) -> dict[str, Any]:
        return dict(
            datum=self.datum,
            q=self.q,
            fock_dim=self.fock_dim,
            p_window=self.p_window,
            rep_cutoff=self.rep_cutoff,
            group=self.group,
            seed=self.seed,
            samples=self.samples,
        )
