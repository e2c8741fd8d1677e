"""Edge-count bounds for triangle-free graphs with bounded independence.

Throughout, e(l, n) denotes the minimum number of edges in a triangle-free
graph on n vertices whose independence number is below l, with the
convention e(l, n) = infinity when no such graph exists (that is, when
n >= R(3, l)).  The convenience variable k = l - 1 is the largest
independent set actually allowed.

Everything here is exact: the piecewise-linear floors are evaluated over
the rationals, and floats never enter the arithmetic.  math.inf is used
purely as the "no such graph" sentinel.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Iterable, Iterator

INF = math.inf

L_MIN, L_MAX = 2, 13
N_MIN, N_MAX = 1, 43

STATUS_EXACT = "exact"
STATUS_RANGE = "range"
STATUS_OPEN = "open-above"
STATUS_INFINITE = "infinite"
_STATUSES = (STATUS_EXACT, STATUS_RANGE, STATUS_OPEN, STATUS_INFINITE)

# canonical provenance tag order for EBound records
PROVENANCE_TAGS = ("formula", "sporadic-table", "ramsey", "preliminary-upper")


class DataConflictError(ValueError):
    """The bounds data contradicts itself, the formulas, or the Ramsey map."""


# ---------------------------------------------------------------------------
# closed-form floors


def lower_bound_basic(n: int, k: int) -> int:
    """Piecewise-linear floor max(0, n-k, 3n-5k, 5n-10k, 6n-13k).

    Valid for every triangle-free graph on n vertices with independence
    number at most k.  The steepest piece 6n - 13k is the active one as
    soon as n >= 3k.
    """
    if n < 0 or k < 1:
        raise ValueError(f"need n >= 0 and k >= 1, got n={n} k={k}")
    return max(0, n - k, 3 * n - 5 * k, 5 * n - 10 * k, 6 * n - 13 * k)


def lower_bound_steep(n: int, k: int) -> Fraction:
    """The slope-8 floor 8n - 39k/2, exact over the rationals."""
    return Fraction(16 * n - 39 * k, 2)


def lower_bound_steeper(n: int, k: int) -> Fraction:
    """The slope-9 floor 9n - 23k."""
    return Fraction(9 * n - 23 * k)


def lower_bound_global(n: int, k: int) -> Fraction:
    """The floor 34n/5 - 78k/5, proven for all n and k (no window restriction)."""
    return Fraction(34 * n - 78 * k, 5)


def conjectured_lower(n: int, k: int) -> Fraction:
    """Conjectured floor max of the slope-8 and slope-9 lines.

    Unproven; returned raw (possibly negative), callers clamp to 0 where
    a count is needed.  Kept strictly out of the bound computations.
    """
    return max(lower_bound_steep(n, k), lower_bound_steeper(n, k))


# ---------------------------------------------------------------------------
# Ramsey thresholds

_RAMSEY: dict[int, tuple[int, int | None]] = {
    2: (3, 3),
    3: (6, 6),
    4: (9, 9),
    5: (14, 14),
    6: (18, 18),
    7: (23, 23),
    8: (28, 28),
    9: (36, 36),
    10: (40, 42),
    11: (44, None),
    12: (44, None),
    13: (44, None),
}


def ramsey_interval(l: int) -> tuple[int, int | None]:
    """Known interval lo <= R(3, l) <= hi; hi is None when unbounded above.

    For l beyond the tabulated range the l = 13 floor of 44 carries upward
    by monotonicity of R(3, l) in l.
    """
    if l < 2:
        raise ValueError(f"Ramsey interval needs l >= 2, got {l}")
    return _RAMSEY.get(l, (44, None))


# ---------------------------------------------------------------------------
# the window case split


def _window_case(n: int, k: int) -> tuple[int, bool]:
    """(floor, is_exact) for e(k+1, n), assuming a graph exists at this order.

    The case variable is x = n - 13k/4.  Up to x = 3/2 the basic floor
    plus a small constant is exact; past that only a lower bound is known,
    and the all-orders slope-34/5 line can overtake the local one.
    """
    x = Fraction(4 * n - 13 * k, 4)
    base = lower_bound_basic(n, k)
    if x <= -1 or x == 0:
        return base, True
    if x < 0:
        return base + 1, True
    if x <= Fraction(1, 2):
        return base + 2, True
    if x <= Fraction(3, 2):
        return base + 3, True
    # the strict step past the window is only established for k <= 12;
    # beyond that just non-exactness is claimed
    bump = 4 if k <= 12 else 1
    return max(base + bump, math.ceil(lower_bound_global(n, k))), False


def formula_floor(k: int, n: int) -> int:
    """Best closed-form lower bound on e(k+1, n).

    Defined for every order; when no graph exists at (k+1, n) the value is
    vacuous but still finite, which is exactly what bound-raising scans
    want as a starting point.
    """
    if k < 1 or n < 0:
        raise ValueError(f"need k >= 1 and n >= 0, got k={k} n={n}")
    value, _ = _window_case(n, k)
    return value


# ---------------------------------------------------------------------------
# bound records


@dataclass(frozen=True)
class EBound:
    """One cell of knowledge about e(l, n).

    status is one of exact, range, open-above, infinite.  upper is None
    when no finite upper bound is known but existence is settled, and
    infinity when even existence is open above the lower bound.
    """

    lower: int | float
    upper: int | float | None
    status: str
    provenance: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.status not in _STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        for tag in self.provenance:
            if tag not in PROVENANCE_TAGS:
                raise ValueError(f"unknown provenance tag {tag!r}")
        order = [t for t in PROVENANCE_TAGS if t in self.provenance]
        if list(self.provenance) != order:
            raise ValueError("provenance tags out of canonical order")
        lo, up = self.lower, self.upper
        if self.status == STATUS_INFINITE:
            if lo != INF or up != INF:
                raise ValueError("infinite cells carry infinite endpoints")
            return
        if not isinstance(lo, int) or lo < 0:
            raise ValueError(f"finite statuses need an integer lower bound >= 0, got {lo!r}")
        if self.status == STATUS_EXACT:
            if up != lo:
                raise ValueError("exact cells need upper == lower")
        elif self.status == STATUS_OPEN:
            if up != INF:
                raise ValueError("open-above cells carry an infinite upper endpoint")
        else:  # range
            if up is not None and (not isinstance(up, int) or up < lo):
                raise ValueError(f"range upper must be None or an int >= lower, got {up!r}")

    def display(self) -> str:
        """Human form: 60, 107–108, 128–(132), 161–∞, ∞."""
        if self.status == STATUS_INFINITE:
            return "∞"
        if self.status == STATUS_EXACT:
            return str(self.lower)
        if self.status == STATUS_OPEN:
            return f"{self.lower}–∞"
        if self.upper is None:
            return f"{self.lower}–?"
        up = f"({self.upper})" if "preliminary-upper" in self.provenance else str(self.upper)
        return f"{self.lower}–{up}"


def general_value(k: int, n: int, ramsey: tuple[int, int | None] | None = None) -> EBound:
    """Formula-only bound on e(k+1, n), usable at any order.

    The optional ramsey override substitutes a different existence
    interval; by default the embedded one for l = k + 1 is used.
    """
    if k < 1 or n < 1:
        raise ValueError(f"need k >= 1 and n >= 1, got k={k} n={n}")
    lo_r, hi_r = ramsey if ramsey is not None else ramsey_interval(k + 1)
    if hi_r is not None and n >= hi_r:
        return EBound(INF, INF, STATUS_INFINITE, ("ramsey",))
    value, exact = _window_case(n, k)
    if n >= lo_r:
        return EBound(value, INF, STATUS_OPEN, ("formula", "ramsey"))
    if exact:
        return EBound(value, value, STATUS_EXACT, ("formula",))
    return EBound(value, None, STATUS_RANGE, ("formula",))


# ---------------------------------------------------------------------------
# the merged bounds table


@dataclass(frozen=True)
class CellRecord:
    """One raw data record before merging with the formulas."""

    l: int
    n: int
    lower: int | float
    upper: int | float | None
    preliminary: bool = False
    source: str = ""


def _record_from_json(obj: dict) -> CellRecord:
    def endpoint(value, what):
        if value is None:
            return None
        if value == "inf":
            return INF
        if isinstance(value, int) and not isinstance(value, bool):
            return value
        raise DataConflictError(f"bad {what} endpoint {value!r}")

    try:
        l = int(obj["l"])
        n = int(obj["n"])
    except (KeyError, TypeError, ValueError) as ex:
        raise DataConflictError(f"cell record missing l/n: {obj!r}") from ex
    lower = endpoint(obj.get("lower"), "lower")
    upper = endpoint(obj.get("upper"), "upper")
    if lower is None:
        raise DataConflictError(f"cell ({l},{n}) has no lower endpoint")
    return CellRecord(
        l=l,
        n=n,
        lower=lower,
        upper=upper,
        preliminary=bool(obj.get("preliminary", False)),
        source=str(obj.get("source", "")),
    )


class BoundsTable:
    """Formulas, Ramsey thresholds and sporadic records merged per cell.

    The merge is eager: every cell in 2 <= l <= 13, 1 <= n <= 43 is
    computed at load time and any contradiction (a sporadic lower above a
    sporadic upper, a finite record inside the infinite region, duplicate
    records) raises DataConflictError immediately rather than surfacing as
    a quietly wrong bound later.
    """

    def __init__(
        self,
        ramsey: dict[int, tuple[int, int | None]],
        records: Iterable[CellRecord],
        notes: tuple[str, ...] = (),
        version: int = 1,
    ) -> None:
        self.version = version
        self.notes = tuple(notes)
        self._ramsey = {}
        for l in range(L_MIN, L_MAX + 1):
            if l not in ramsey:
                raise DataConflictError(f"ramsey interval missing for l={l}")
            lo, hi = ramsey[l]
            if hi is not None and hi < lo:
                raise DataConflictError(f"ramsey interval for l={l} is empty")
            self._ramsey[l] = (lo, hi)

        self._records: dict[tuple[int, int], CellRecord] = {}
        for rec in records:
            if not (L_MIN <= rec.l <= L_MAX and N_MIN <= rec.n <= N_MAX):
                raise DataConflictError(f"record ({rec.l},{rec.n}) outside the table domain")
            key = (rec.l, rec.n)
            if key in self._records:
                raise DataConflictError(f"duplicate record for ({rec.l},{rec.n})")
            if rec.lower == INF:
                if rec.upper not in (None, INF):
                    raise DataConflictError(f"record ({rec.l},{rec.n}) is infinite below a finite upper")
            else:
                if rec.upper is not None and rec.upper != INF and rec.upper < rec.lower:
                    raise DataConflictError(f"record ({rec.l},{rec.n}) has lower {rec.lower} above upper {rec.upper}")
            self._records[key] = rec

        # effective start of the infinite region per column: the Ramsey
        # upper bound, pulled down by any explicit infinite record
        self._eff_hi: dict[int, int | None] = {}
        for l in range(L_MIN, L_MAX + 1):
            lo, hi = self._ramsey[l]
            eff = hi
            for (rl, rn), rec in self._records.items():
                if rl == l and rec.lower == INF:
                    if rn < lo:
                        raise DataConflictError(
                            f"record ({rl},{rn}) claims nonexistence below the Ramsey floor {lo}"
                        )
                    eff = rn if eff is None else min(eff, rn)
            self._eff_hi[l] = eff

        self._cells: dict[tuple[int, int], EBound] = {}
        for l in range(L_MIN, L_MAX + 1):
            for n in range(N_MIN, N_MAX + 1):
                self._cells[(l, n)] = self._merge_cell(l, n)

    def _merge_cell(self, l: int, n: int) -> EBound:
        k = l - 1
        lo_r, _ = self._ramsey[l]
        eff_hi = self._eff_hi[l]
        rec = self._records.get((l, n))

        if eff_hi is not None and n >= eff_hi:
            if rec is not None and rec.lower != INF:
                raise DataConflictError(f"finite record ({l},{n}) inside the infinite region (n >= {eff_hi})")
            tags = ("sporadic-table", "ramsey") if rec is not None else ("ramsey",)
            return EBound(INF, INF, STATUS_INFINITE, tags)

        floor, exact = _window_case(n, k)
        rec_lower = rec.lower if rec is not None else 0
        if rec_lower == INF:
            # an infinite record below eff_hi is impossible by construction
            raise DataConflictError(f"record ({l},{n}) infinite below the effective threshold")
        lower = max(floor, rec_lower)

        tags = []
        if lower == floor:
            tags.append("formula")
        if rec is not None:
            tags.append("sporadic-table")

        if n >= lo_r:
            # existence window: no graph may exist at this order at all
            if rec is not None and rec.upper not in (None, INF):
                raise DataConflictError(
                    f"record ({l},{n}) claims a witness inside the unresolved existence window"
                )
            tags.append("ramsey")
            return EBound(lower, INF, STATUS_OPEN, tuple(tags))

        uppers = []
        if exact:
            uppers.append(floor)
        if rec is not None and rec.upper is not None and rec.upper != INF:
            uppers.append(rec.upper)
        upper = min(uppers) if uppers else None
        if upper is not None and lower > upper:
            raise DataConflictError(f"cell ({l},{n}) merged to lower {lower} above upper {upper}")

        if upper == lower:
            return EBound(lower, lower, STATUS_EXACT, tuple(tags))
        if (
            rec is not None
            and rec.preliminary
            and upper is not None
            and upper == rec.upper
        ):
            tags.append("preliminary-upper")
        return EBound(lower, upper, STATUS_RANGE, tuple(tags))

    # construction helpers

    @classmethod
    def _from_json_text(cls, text: str) -> "BoundsTable":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as ex:
            raise DataConflictError(f"bounds data is not valid JSON: {ex}") from ex
        try:
            ramsey_raw = obj["ramsey"]
            cells_raw = obj["cells"]
        except (KeyError, TypeError) as ex:
            raise DataConflictError("bounds data needs 'ramsey' and 'cells' entries") from ex
        ramsey = {}
        for key, pair in ramsey_raw.items():
            lo, hi = pair
            ramsey[int(key)] = (int(lo), None if hi is None else int(hi))
        records = [_record_from_json(c) for c in cells_raw]
        return cls(
            ramsey,
            records,
            notes=tuple(obj.get("notes", ())),
            version=int(obj.get("version", 1)),
        )

    @classmethod
    def from_file(cls, path) -> "BoundsTable":
        with open(path, "r", encoding="utf-8") as fh:
            return cls._from_json_text(fh.read())

    @classmethod
    def default(cls) -> "BoundsTable":
        return default_table()

    # queries

    def ramsey_range(self, l: int) -> tuple[int, int | None]:
        if l not in self._ramsey:
            raise ValueError(f"l={l} outside the tabulated range {L_MIN}..{L_MAX}")
        return self._ramsey[l]

    def lookup(self, l: int, n: int) -> EBound:
        try:
            return self._cells[(l, n)]
        except KeyError:
            raise ValueError(
                f"({l},{n}) outside the tabulated domain l {L_MIN}..{L_MAX}, n {N_MIN}..{N_MAX}"
            ) from None

    def known_lower(self, l: int, n: int) -> int | float:
        return self.lookup(l, n).lower

    def finite_lower(self, l: int, n: int) -> int:
        """Largest finite lower bound known, ignoring nonexistence knowledge.

        This is the right scan floor for feasibility searches: if a graph
        exists at all it has at least this many edges.
        """
        lower = formula_floor(l - 1, n)
        rec = self._records.get((l, n))
        if rec is not None and rec.lower != INF:
            lower = max(lower, rec.lower)
        return lower

    def records(self) -> Iterator[CellRecord]:
        for key in sorted(self._records):
            yield self._records[key]

    def cells(self) -> Iterator[tuple[int, int, EBound]]:
        for (l, n) in sorted(self._cells):
            yield l, n, self._cells[(l, n)]

    # rendering

    def emit(
        self,
        l_span: tuple[int, int],
        n_span: tuple[int, int],
        fmt: str = "md",
    ) -> str:
        """Render a rectangular window as markdown, CSV or JSON.

        Markdown and CSV follow the published table conventions: columns
        are l, rows are n, and within each rendered column only the
        topmost infinite cell prints its infinity sign; the cells below it
        are left blank.  JSON carries the full structured cells instead,
        with nothing suppressed, so it round-trips exactly.
        """
        if fmt not in ("md", "csv", "json"):
            raise ValueError(f"unknown table format {fmt!r}")
        l_lo, l_hi = l_span
        n_lo, n_hi = n_span
        if l_lo > l_hi or n_lo > n_hi:
            if fmt == "json":
                return json.dumps(
                    {"version": self.version, "l_range": [l_lo, l_hi], "n_range": [n_lo, n_hi], "cells": []},
                    ensure_ascii=False,
                )
            return ""
        if not (L_MIN <= l_lo and l_hi <= L_MAX and N_MIN <= n_lo and n_hi <= N_MAX):
            raise ValueError(
                f"window l {l_lo}..{l_hi}, n {n_lo}..{n_hi} outside the domain "
                f"l {L_MIN}..{L_MAX}, n {N_MIN}..{N_MAX}"
            )
        ls = range(l_lo, l_hi + 1)
        ns = range(n_lo, n_hi + 1)

        if fmt == "json":
            cells = []
            for l in ls:
                for n in ns:
                    cells.append(_cell_to_json(l, n, self._cells[(l, n)]))
            payload = {
                "version": self.version,
                "l_range": [l_lo, l_hi],
                "n_range": [n_lo, n_hi],
                "cells": cells,
            }
            return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"

        text: dict[tuple[int, int], str] = {}
        for l in ls:
            seen_inf = False
            for n in ns:
                cell = self._cells[(l, n)]
                if cell.status == STATUS_INFINITE:
                    text[(l, n)] = "" if seen_inf else "∞"
                    seen_inf = True
                else:
                    text[(l, n)] = cell.display()

        lines = []
        if fmt == "md":
            lines.append("| n\\l | " + " | ".join(str(l) for l in ls) + " |")
            lines.append("| --- | " + " | ".join("---" for _ in ls) + " |")
            for n in ns:
                lines.append("| " + " | ".join([str(n)] + [text[(l, n)] for l in ls]) + " |")
        else:
            lines.append("n," + ",".join(str(l) for l in ls))
            for n in ns:
                lines.append(",".join([str(n)] + [text[(l, n)] for l in ls]))
        return "\n".join(lines) + "\n"


def _cell_to_json(l: int, n: int, cell: EBound) -> dict:
    def endpoint(v):
        if v is None:
            return None
        if v == INF:
            return "inf"
        return v

    return {
        "l": l,
        "n": n,
        "lower": endpoint(cell.lower),
        "upper": endpoint(cell.upper),
        "status": cell.status,
        "provenance": list(cell.provenance),
        "display": cell.display(),
    }


def cells_from_json(text: str) -> dict[tuple[int, int], EBound]:
    """Parse emit(..., fmt="json") output back into structured cells."""
    obj = json.loads(text)

    def endpoint(v):
        if v is None:
            return None
        if v == "inf":
            return INF
        return int(v)

    out = {}
    for cell in obj["cells"]:
        out[(int(cell["l"]), int(cell["n"]))] = EBound(
            endpoint(cell["lower"]),
            endpoint(cell["upper"]),
            cell["status"],
            tuple(cell["provenance"]),
        )
    return out


@lru_cache(maxsize=1)
def default_table() -> BoundsTable:
    """The packaged table, loaded once."""
    text = resources.files("trifree").joinpath("data/bounds_table.json").read_text(encoding="utf-8")
    return BoundsTable._from_json_text(text)
