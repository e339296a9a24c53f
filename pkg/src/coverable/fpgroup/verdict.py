"""Three-valued answers for questions that hide a word problem."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Any, Iterable, Mapping

BUDGET = "budget"
INCOMPLETE_UNIVERSE = "incomplete-universe"


class Answer(enum.Enum):
    YES = "YES"
    NO = "NO"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Verdict:
    """YES and NO always carry a certificate; UNKNOWN carries a reason."""

    answer: Answer
    reason: str | None = None
    certificate: Mapping[str, Any] = field(default_factory=dict)

    @classmethod
    def yes(cls, **certificate) -> "Verdict":
        return cls(Answer.YES, None, certificate)

    @classmethod
    def no(cls, **certificate) -> "Verdict":
        return cls(Answer.NO, None, certificate)

    @classmethod
    def unknown(cls, reason: str = BUDGET, **certificate) -> "Verdict":
        return cls(Answer.UNKNOWN, reason, certificate)

    @property
    def is_yes(self) -> bool:
        return self.answer is Answer.YES

    @property
    def is_no(self) -> bool:
        return self.answer is Answer.NO

    @property
    def is_unknown(self) -> bool:
        return self.answer is Answer.UNKNOWN

    def with_certificate(self, **extra) -> "Verdict":
        return replace(self, certificate={**self.certificate, **extra})

    def to_dict(self) -> dict:
        out: dict = {"answer": self.answer.value}
        if self.reason:
            out["reason"] = self.reason
        if self.certificate:
            out["certificate"] = _jsonable(self.certificate)
        return out

    def __str__(self) -> str:
        if self.is_unknown:
            return f"UNKNOWN({self.reason})"
        return self.answer.value


def _jsonable(obj):
    if isinstance(obj, Mapping):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in obj]
        return sorted(items, key=str) if isinstance(obj, (set, frozenset)) else items
    if isinstance(obj, Verdict):
        return obj.to_dict()
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return str(obj)


def conjunction(verdicts: Iterable[Verdict], **certificate) -> Verdict:
    """YES iff all YES; NO if any NO (first in input order); else UNKNOWN."""
    verdicts = list(verdicts)
    for v in verdicts:
        if v.is_no:
            return v.with_certificate(**certificate) if certificate else v
    unknown = [v for v in verdicts if v.is_unknown]
    if unknown:
        return Verdict.unknown(unknown[0].reason or BUDGET, **certificate)
    return Verdict.yes(parts=len(verdicts), **certificate)
