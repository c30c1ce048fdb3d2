"""Check reports: a pass/fail verdict plus an exact counterexample witness.

A witness names the basis tuple where an identity broke and carries both
evaluated sides as exact coordinate vectors, so every failure can be
re-evaluated from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Witness:
    """First failing basis tuple of a swept identity, with both sides."""

    basis: tuple[str, ...]
    lhs: tuple
    rhs: tuple
    entry: tuple | None = None  # (row_index, col_index, lhs_value, rhs_value)

    def as_dict(self) -> dict:
        out = {
            "basis": list(self.basis),
            "lhs": [str(v) for v in self.lhs],
            "rhs": [str(v) for v in self.rhs],
        }
        if self.entry is not None:
            row, col, a, b = self.entry
            out["entry"] = {"row": row, "col": col, "lhs": str(a), "rhs": str(b)}
        return out


@dataclass(frozen=True)
class CheckReport:
    """Verdict for one named check, possibly aggregating sub-checks."""

    name: str
    passed: bool
    witness: Witness | None = None
    subchecks: tuple[CheckReport, ...] = ()
    info: tuple[tuple[str, str], ...] = ()

    @staticmethod
    def combine(name: str, subs, info=()) -> "CheckReport":
        """Aggregate sub-reports; the first failure supplies the witness."""
        subs = tuple(subs)
        bad = next((s for s in subs if not s.passed), None)
        return CheckReport(
            name=name,
            passed=bad is None,
            witness=None if bad is None else bad.witness,
            subchecks=subs,
            info=tuple(info),
        )

    def sub(self, name: str) -> "CheckReport":
        for s in self.subchecks:
            if s.name == name:
                return s
        raise KeyError(f"no sub-check named {name!r} in {self.name!r}")

    def find(self, name: str) -> "CheckReport":
        """Locate a (possibly nested) sub-check by name."""
        if self.name == name:
            return self
        for s in self.subchecks:
            try:
                return s.find(name)
            except KeyError:
                continue
        raise KeyError(f"no check named {name!r} under {self.name!r}")

    def first_failure(self) -> "CheckReport | None":
        if self.passed:
            return None
        for s in self.subchecks:
            if not s.passed:
                return s.first_failure() or s
        return self

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def as_dict(self) -> dict:
        out: dict = {"name": self.name, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        if self.subchecks:
            out["subchecks"] = [s.as_dict() for s in self.subchecks]
        if self.info:
            out["info"] = {k: v for k, v in self.info}
        return out

    def __str__(self):
        lines = [f"[{self.verdict}] {self.name}"]
        for s in self.subchecks:
            for line in str(s).splitlines():
                lines.append("  " + line)
        if self.witness is not None and not self.subchecks:
            w = self.witness
            lines.append(f"  at ({', '.join(w.basis)})")
            lines.append(f"  lhs = ({', '.join(str(v) for v in w.lhs)})")
            lines.append(f"  rhs = ({', '.join(str(v) for v in w.rhs)})")
        return "\n".join(lines)
