"""End-to-end driver: lift, normalize, reconstruct, verify, re-lifting on demand."""
from dataclasses import dataclass

from ..errors import InsufficientPrecision
from .newton import DeformationState, default_precision, newton_lift
from .normalize import NormalizationReport, normalize
from .reconstruct import DEFAULT_MARGIN, ReconstructionReport, reconstruct
from .verify import VerificationReport, verify_model

MAX_PRECISION = 2048


@dataclass
class PipelineResult:
    n: int
    state: DeformationState
    normalization: NormalizationReport
    reconstruction: ReconstructionReport
    verification: VerificationReport
    attempts: list

    @property
    def model(self):
        return self.reconstruction.model


def run_pipeline(n, precision=None, margin=DEFAULT_MARGIN, max_precision=MAX_PRECISION, verify=True):
    N = precision or default_precision(n)
    attempts = []
    while True:
        state = newton_lift(n, N)
        norm = normalize(state)
        try:
            rec = reconstruct(norm.model, margin=margin)
        except InsufficientPrecision as exc:
            attempts.append({"precision": N, "error": str(exc)})
            if 2 * N > max_precision:
                raise
            N *= 2
            continue
        attempts.append({"precision": N, "error": None})
        ver = verify_model(rec.model) if verify else None
        return PipelineResult(n, state, norm, rec, ver, attempts)
