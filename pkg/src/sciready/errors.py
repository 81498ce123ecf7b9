"""Exception types shared across the package."""

from __future__ import annotations


class SciReadyError(Exception):
    """Base class for all package errors."""


# --- registry / taxonomy ---

class MalformedRegistry(SciReadyError):
    pass


class InvalidWeights(MalformedRegistry):
    pass


class DanglingReference(MalformedRegistry):
    pass


class UnknownSubDimension(SciReadyError):
    pass


# --- inspection ---

class RootNotFound(SciReadyError):
    pass


class PermissionDenied(SciReadyError):
    pass


class UnparsableHeader(SciReadyError):
    pass


# --- knowledge base / planning ---

class MalformedKBDocument(SciReadyError):
    pass


class NoEvidencePath(SciReadyError):
    """Element is active but no profile file satisfies its evidence class."""


class RefinementExhausted(SciReadyError):
    pass


# --- tool library / memory ---

class InvalidToolSpec(SciReadyError):
    pass


class UnknownTool(SciReadyError):
    pass


class PersistenceFailure(SciReadyError):
    pass


# --- execution ---

class EvidenceLoadFailure(SciReadyError):
    """All target files were unreadable (partial failures are recorded, not raised)."""


class ToolCrash(SciReadyError):
    """Runtime failure inside a tool. ``kind`` is a stable machine-readable tag."""

    def __init__(self, kind: str, detail: str = ""):
        super().__init__(f"{kind}: {detail}" if detail else kind)
        self.kind = kind
        self.detail = detail


class ExternalTimeout(SciReadyError):
    pass


class ProtocolViolation(SciReadyError):
    pass


# --- evaluator preconditions ---

class EvaluatorPreconditionError(SciReadyError):
    pass


class NoTabularEvidence(EvaluatorPreconditionError):
    pass


class NoApplicableColumns(EvaluatorPreconditionError):
    pass


class NotCategorical(EvaluatorPreconditionError):
    pass


class NoTarget(EvaluatorPreconditionError):
    pass


class NoFeatures(EvaluatorPreconditionError):
    pass


class EmptyChecklist(EvaluatorPreconditionError):
    pass


class NoConditionVariables(EvaluatorPreconditionError):
    pass
