"""Assembly and rendering of additive kinematic formulas.

A kinematic formula for a primal basis measure Psi is the expansion
A(Psi) = sum c_ij  b_i (x) b_j over pairs of primal basis measures with
deg b_i + deg b_j = deg Psi.  The coefficients are extracted by duality:
c_ij is the pairing of the dual product b*_i b*_j against Psi, where matched
dual/primal bases pair diagonally.  Globalization keeps only pairs that
survive on the full sphere, turning area-measure slots into the global
valuations mu_{k,q}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .areabasis import (
    AreaIndex,
    Family,
    InvalidIndexError,
    indices_of_degree,
    primal_dn_from_bg,
    require_valid,
    valid_indices,
)
from .dualalgebra import AreaDualElement, basis_product
from .exactnum import PiScalar

BASIS_DELTA_N = "delta-n"
BASIS_B_GAMMA = "b-gamma"

_BASIS_FAMILIES = {
    BASIS_DELTA_N: (Family.DELTA, Family.N),
    BASIS_B_GAMMA: (Family.B, Family.GAMMA),
}

Pair = tuple[AreaIndex, AreaIndex]


@dataclass(frozen=True)
class KinematicTable:
    """Coefficient array of one additive kinematic formula.

    kind is 'local' (both slots area measures), 'semilocal' (second slot
    globalized to mu), or 'global' (both slots globalized).
    """

    n: int
    target: AreaIndex
    basis: str
    entries: Mapping[Pair, PiScalar]
    kind: str = "local"

    def sorted_entries(self) -> list[tuple[Pair, PiScalar]]:
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0].sort_key, kv[0][1].sort_key))

    def coefficient(self, left: AreaIndex, right: AreaIndex) -> PiScalar:
        return self.entries.get((left, right), PiScalar())


def _families_for(basis: str) -> tuple[Family, Family]:
    try:
        return _BASIS_FAMILIES[basis]
    except KeyError:
        raise ValueError(f"unknown basis {basis!r}; expected 'delta-n' or 'b-gamma'") from None


def product_table(n: int, d1: int, d2: int, basis: str = BASIS_DELTA_N) -> dict[Pair, AreaDualElement]:
    """All pairwise dual-basis products in one degree split."""
    if d1 < 0 or d2 < 0 or d1 + d2 > 2 * n - 1:
        raise ValueError(f"degree split ({d1}, {d2}) outside 0..{2 * n - 1}")
    families = _families_for(basis)
    out: dict[Pair, AreaDualElement] = {}
    for left in indices_of_degree(n, d1, families):
        for right in indices_of_degree(n, d2, families):
            out[(left, right)] = basis_product(n, left, right)
    return out


def _target_dn_coordinates(n: int, target: AreaIndex) -> dict[AreaIndex, Fraction]:
    if target.family in (Family.DELTA, Family.N):
        return {target: Fraction(1)}
    return primal_dn_from_bg(n, target)


def local_formula(n: int, target: AreaIndex, basis: str = BASIS_DELTA_N) -> KinematicTable:
    """Full coefficient table of A(target) over the chosen pair basis."""
    families = _families_for(basis)
    require_valid(n, target)
    if target.family not in families:
        raise InvalidIndexError(
            f"target {target.text()} does not belong to the {basis} basis")
    target_coords = _target_dn_coordinates(n, target)
    entries: dict[Pair, PiScalar] = {}
    degree = target.k
    for d1 in range(degree + 1):
        for left in indices_of_degree(n, d1, families):
            for right in indices_of_degree(n, degree - d1, families):
                prod = basis_product(n, left, right)
                coeff = PiScalar()
                for idx, weight in target_coords.items():
                    coeff = coeff + prod.coefficient(idx) * weight
                if coeff:
                    entries[(left, right)] = coeff
    return KinematicTable(n, target, basis, entries)


def full_table(n: int, basis: str = BASIS_DELTA_N) -> list[KinematicTable]:
    """One kinematic table per primal basis element, ordered by (k, family, q)."""
    families = _families_for(basis)
    targets = sorted((idx for family in families for idx in valid_indices(n, family)),
                     key=lambda idx: idx.sort_key)
    return [local_formula(n, target, basis) for target in targets]


def global_formula(n: int, k: int, q: int) -> KinematicTable:
    """Globalized formula for mu_{k,q}: N-slots vanish on the full sphere."""
    target = require_valid(n, AreaIndex(Family.DELTA, k, q))
    table = local_formula(n, target, BASIS_DELTA_N)
    entries = {
        pair: coeff for pair, coeff in table.entries.items()
        if pair[0].family is Family.DELTA and pair[1].family is Family.DELTA
    }
    return KinematicTable(n, target, BASIS_DELTA_N, entries, kind="global")


def semilocal_formula(n: int, target: AreaIndex) -> KinematicTable:
    """Semilocal formula: second slot globalized, so N indices drop there."""
    require_valid(n, target)
    if target.family not in (Family.DELTA, Family.N):
        raise InvalidIndexError("semilocal targets use the Delta/N basis")
    table = local_formula(n, target, BASIS_DELTA_N)
    entries = {
        pair: coeff for pair, coeff in table.entries.items()
        if pair[1].family is Family.DELTA
    }
    return KinematicTable(n, target, BASIS_DELTA_N, entries, kind="semilocal")


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _slot_globalized(kind: str) -> tuple[bool, bool]:
    if kind == "global":
        return True, True
    if kind == "semilocal":
        return False, True
    return False, False


def _index_text(index: AreaIndex, as_mu: bool) -> str:
    return f"mu_{{{index.k},{index.q}}}" if as_mu else str(index)


def _index_latex(index: AreaIndex, as_mu: bool) -> str:
    return f"\\mu_{{{index.k},{index.q}}}" if as_mu else index.latex()


def _index_json(index: AreaIndex, as_mu: bool) -> dict:
    if as_mu:
        return {"family": "mu", "k": index.k, "q": index.q}
    return index.to_json_dict()


def _coeff_sign_split(coeff: PiScalar) -> tuple[int, PiScalar]:
    _, lead = coeff.terms()[0]
    return (1, coeff) if lead > 0 else (-1, -coeff)


def emit(table: KinematicTable, fmt: str = "text") -> str:
    """Render one table as 'text', 'latex', or 'json'."""
    if fmt == "json":
        return json.dumps(table_json(table), indent=2) + "\n"
    if fmt == "latex":
        return _emit_latex(table)
    if fmt == "text":
        return _emit_text(table)
    raise ValueError(f"unknown format {fmt!r}; expected text, latex, or json")


def _emit_text(table: KinematicTable) -> str:
    left_mu, right_mu = _slot_globalized(table.kind)
    if not table.entries:
        return "0"
    head_target = _index_text(table.target, left_mu and right_mu)
    lines = [f"A({head_target})  [n={table.n}, basis {table.basis}, {table.kind}]"]
    for (left, right), coeff in table.sorted_entries():
        lines.append(f"  {_index_text(left, left_mu)} (x) {_index_text(right, right_mu)} : {coeff.text()}")
    return "\n".join(lines)


def _emit_latex(table: KinematicTable) -> str:
    left_mu, right_mu = _slot_globalized(table.kind)
    if not table.entries:
        return "0"
    terms: list[str] = []
    for (left, right), coeff in table.sorted_entries():
        sign, magnitude = _coeff_sign_split(coeff)
        pair = f"{_index_latex(left, left_mu)}\\otimes {_index_latex(right, right_mu)}"
        body = pair if magnitude == PiScalar(1) else f"{magnitude.latex()} {pair}"
        if not terms:
            terms.append(body if sign > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if sign > 0 else f"- {body}")
    head_target = _index_latex(table.target, left_mu and right_mu)
    return f"A({head_target}) = " + " ".join(terms)


def table_json(table: KinematicTable) -> dict:
    left_mu, right_mu = _slot_globalized(table.kind)
    doc: dict = {"n": table.n, "target": table.target.to_json_dict(), "basis": table.basis}
    if table.kind != "local":
        doc["kind"] = table.kind
    doc["entries"] = [
        {
            "left": _index_json(left, left_mu),
            "right": _index_json(right, right_mu),
            "value": coeff.to_json_dict(),
        }
        for (left, right), coeff in table.sorted_entries()
    ]
    return doc


def emit_tables(n: int, basis: str, tables: list[KinematicTable], fmt: str = "text") -> str:
    """Render a list of tables as one document."""
    if fmt == "json":
        doc = {"n": n, "basis": basis, "tables": [table_json(t) for t in tables]}
        return json.dumps(doc, indent=2) + "\n"
    if fmt in ("text", "latex"):
        return "\n\n".join(emit(t, fmt) for t in tables) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected text, latex, or json")
