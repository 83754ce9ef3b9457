"""Cohomology of the basic stratum for n = 3, 4 from automorphic descriptors.

Automorphic inputs are opaque: each roster entry carries the few flags and
integers the decomposition depends on, and delta is a symbolic token.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from math import comb
from pathlib import Path
from typing import Dict, List, Sequence, Tuple, Union

from .fieldgeom import FieldDescriptor

ROSTER_VERSION = 1


class RosterError(ValueError):
    pass


@dataclass(frozen=True)
class FrobScalar:
    """sign * delta * p^exponent, with delta a unit-modulus token."""

    sign: int
    delta_label: str
    exponent: int

    def __str__(self) -> str:
        return "%s%s*p^%d" % ("+" if self.sign > 0 else "-", self.delta_label, self.exponent)

    def to_json(self) -> dict:
        return {"sign": self.sign, "delta": self.delta_label, "exponent": self.exponent}

    @classmethod
    def from_json(cls, d: dict) -> "FrobScalar":
        return cls(int(d["sign"]), str(d["delta"]), int(d["exponent"]))


def frob_scalar_on_ext(b2: int, n: int, w: int, delta_label: str = "delta") -> FrobScalar:
    """Frobenius on Ext^a(H^{b'}_c(M^an)(1-n), Pi_p)."""
    if not (0 <= b2 <= 2 * (n - 1)):
        raise ValueError("b'=%d outside [0, %d]" % (b2, 2 * (n - 1)))
    return FrobScalar(-1 if b2 % 2 else 1, delta_label, -b2 + 2 * (n - 1) + w)


def alternating_identity(nu: int) -> bool:
    if nu < 1:
        raise ValueError("nu=%d must be >= 1" % nu)
    return sum((-1) ** i * comb(nu + 1, i) for i in range(2, nu + 2)) == nu


def basic_nu(n: int, p: int) -> int:
    FieldDescriptor(p)  # p must be an odd prime
    if n == 3:
        return p
    if n == 4:
        return p**3
    raise RosterError("the basic-stratum decomposition is only available for n in {3, 4}, got n=%d" % n)


@dataclass(frozen=True)
class AutoRepDescriptor:
    label: str
    unramified_char: bool = False
    j1_spherical: bool = False
    dim_gt_1: bool = False
    is_chi_tau1: bool = False
    d: int = 0
    weight_w: int = 0

    @property
    def delta_label(self) -> str:
        return "delta[%s]" % self.label

    def validate(self, nu: int) -> None:
        where = "entry %r: " % self.label
        if self.d < 0:
            raise RosterError(where + "d=%d must be >= 0" % self.d)
        if self.d > 0 and not self.j1_spherical:
            raise RosterError(where + "d > 0 requires j1_spherical")
        if self.unramified_char and not self.j1_spherical:
            raise RosterError(where + "an unramified character is j1_spherical")
        if self.unramified_char and self.dim_gt_1:
            raise RosterError(where + "an unramified character has dimension 1")
        if self.is_chi_tau1 and self.d > 0:
            raise RosterError(where + "chi*tau_1 is supercuspidal, so d must be 0")
        if self.j1_spherical and self.dim_gt_1 and self.d > nu - 1:
            raise RosterError(where + "d=%d exceeds nu-1=%d" % (self.d, nu - 1))
        if self.unramified_char and self.d > nu:
            raise RosterError(where + "d=%d exceeds nu=%d" % (self.d, nu))

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, d: dict) -> "AutoRepDescriptor":
        known = {"label", "unramified_char", "j1_spherical", "dim_gt_1", "is_chi_tau1", "d", "weight_w"}
        extra = set(d) - known
        if extra:
            raise RosterError("unknown roster fields %s" % sorted(extra))
        if "label" not in d:
            raise RosterError("roster entry without a label")
        kw = {}
        for key in ("unramified_char", "j1_spherical", "dim_gt_1", "is_chi_tau1"):
            v = d.get(key, False)
            if not isinstance(v, bool):
                raise RosterError("field %s must be a boolean" % key)
            kw[key] = v
        for key in ("d", "weight_w"):
            v = d.get(key, 0)
            if isinstance(v, bool) or not isinstance(v, int):
                raise RosterError("field %s must be an integer" % key)
            kw[key] = v
        return cls(label=str(d["label"]), **kw)


@dataclass(frozen=True)
class Roster:
    n: int
    p: int
    entries: Tuple[AutoRepDescriptor, ...]

    def to_json(self) -> dict:
        return {
            "version": ROSTER_VERSION,
            "n": self.n,
            "p": self.p,
            "entries": [e.to_json() for e in self.entries],
        }


def parse_roster(data: dict) -> Roster:
    if data.get("version") != ROSTER_VERSION:
        raise RosterError("unsupported roster version %r" % data.get("version"))
    try:
        n, p = int(data["n"]), int(data["p"])
    except (KeyError, TypeError, ValueError) as exc:
        raise RosterError("roster needs integer n and p") from exc
    entries = tuple(AutoRepDescriptor.from_json(e) for e in data.get("entries", []))
    labels = [e.label for e in entries]
    if len(set(labels)) != len(labels):
        raise RosterError("duplicate labels in roster")
    return Roster(n, p, entries)


def load_roster(path: Union[str, Path]) -> Roster:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise RosterError("roster is not valid JSON: %s" % exc) from exc
    return parse_roster(data)


Item = Tuple[str, int, FrobScalar]


@dataclass(frozen=True)
class BasicStratumReport:
    n: int
    p: int
    nu: int
    h0: Tuple[Item, ...]
    h1_sub: Tuple[Item, ...]
    h1_quot: Tuple[Item, ...]
    h2: Tuple[Item, ...]

    def total(self, part: str) -> int:
        return sum(m for _, m, _ in getattr(self, part))

    def to_json(self) -> dict:
        def items(xs):
            return [{"label": lab, "multiplicity": mult, "frob": fr.to_json()} for lab, mult, fr in xs]

        return {
            "n": self.n,
            "p": self.p,
            "nu": self.nu,
            "H0": items(self.h0),
            "H1": {"V": items(self.h1_sub), "quotient": items(self.h1_quot)},
            "H2": items(self.h2),
        }

    @classmethod
    def from_json(cls, d: dict) -> "BasicStratumReport":
        def items(xs):
            return tuple((x["label"], int(x["multiplicity"]), FrobScalar.from_json(x["frob"])) for x in xs)

        return cls(
            int(d["n"]), int(d["p"]), int(d["nu"]),
            items(d["H0"]), items(d["H1"]["V"]), items(d["H1"]["quotient"]), items(d["H2"]),
        )


def basic_stratum_cohomology(n: int, p: int, roster: Sequence[AutoRepDescriptor]) -> BasicStratumReport:
    nu = basic_nu(n, p)
    top = 2 * (n - 1)
    labels = [e.label for e in roster]
    if len(set(labels)) != len(labels):
        raise RosterError("duplicate labels in roster")
    h0: List[Item] = []
    h1_sub: List[Item] = []
    h1_quot: List[Item] = []
    h2: List[Item] = []
    for e in roster:
        e.validate(nu)
        untwisted = frob_scalar_on_ext(top, n, e.weight_w, e.delta_label)
        if e.unramified_char:
            h0.append((e.label, 1, untwisted))
        if e.j1_spherical:
            h2.append((e.label, 1, frob_scalar_on_ext(top - 2, n, e.weight_w, e.delta_label)))
        if e.d:
            h1_sub.append((e.label, e.d, untwisted))
        if e.is_chi_tau1:
            h1_sub.append((e.label, 1, frob_scalar_on_ext(top - 1, n, e.weight_w, e.delta_label)))
        quot = 0
        if e.j1_spherical and e.dim_gt_1:
            quot += nu - 1 - e.d
        if e.unramified_char:
            quot += nu - e.d
        if quot < 0:
            raise RosterError("entry %r: negative multiplicity" % e.label)
        if quot:
            h1_quot.append((e.label, quot, untwisted))
    return BasicStratumReport(n, p, nu, tuple(h0), tuple(h1_sub), tuple(h1_quot), tuple(h2))


def report_from_roster(roster: Roster) -> BasicStratumReport:
    return basic_stratum_cohomology(roster.n, roster.p, roster.entries)


def dumps_report(report: BasicStratumReport) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n"


def summary_rows(report: BasicStratumReport) -> List[Tuple[str, str, int, str]]:
    rows = []
    for name, part in (("H0", "h0"), ("H1 V", "h1_sub"), ("H1 quotient", "h1_quot"), ("H2", "h2")):
        for lab, mult, fr in getattr(report, part):
            rows.append((name, lab, mult, str(fr)))
    return rows


def totals(report: BasicStratumReport) -> Dict[str, int]:
    return {part: report.total(part) for part in ("h0", "h1_sub", "h1_quot", "h2")}
