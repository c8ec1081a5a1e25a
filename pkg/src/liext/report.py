"""Pass/fail reports for identities checked on basis tuples."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np


@dataclass
class AxiomCheck:
    label: str
    description: str = ""
    witnesses: list = dc_field(default_factory=list)
    defects: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.witnesses


@dataclass
class AxiomReport:
    checks: list = dc_field(default_factory=list)
    notes: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.ok

    def __getitem__(self, label) -> AxiomCheck:
        for c in self.checks:
            if c.label == label:
                return c
        raise KeyError(label)

    def labels(self):
        return [c.label for c in self.checks]

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def extend(self, other: AxiomReport, prefix: str = ""):
        for c in other.checks:
            self.checks.append(AxiomCheck(prefix + c.label, c.description, c.witnesses, c.defects))
        return self

    def lines(self, field=None, max_witnesses: int = 3):
        """Deterministic text rendering, one line per axiom (1-based indices)."""
        out = []
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            line = f"{c.label:<10} {status}"
            if c.description:
                line += f"  {c.description}"
            out.append(line)
            for w, d in list(zip(c.witnesses, c.defects))[:max_witnesses]:
                idx = ",".join(str(i + 1) for i in w)
                vec = " ".join(_fmt(x, field) for x in np.asarray(d).reshape(-1))
                out.append(f"    witness ({idx}) defect [{vec}]")
            if len(c.witnesses) > max_witnesses:
                out.append(f"    ... {len(c.witnesses) - max_witnesses} more")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def _fmt(x, field):
    return field.format_scalar(x) if field is not None else str(x)


def check_from_defect(label, defect, field, description="") -> AxiomCheck:
    """Turn a defect tensor into an :class:`AxiomCheck`.

    ``defect`` has shape ``(*indices, out)``; every index tuple whose
    trailing vector is nonzero in the field becomes a witness.
    """
    defect = field.reduce(np.asarray(defect))
    check = AxiomCheck(label, description)
    if defect.size == 0:
        return check
    nz = np.any(defect != 0, axis=-1)
    for idx in zip(*np.nonzero(nz)):
        idx = tuple(int(i) for i in idx)
        check.witnesses.append(idx)
        check.defects.append(defect[idx])
    return check


def defect_is_zero(defect, field) -> bool:
    return not np.any(field.reduce(np.asarray(defect)))
