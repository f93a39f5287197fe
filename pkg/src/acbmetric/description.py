"""Plain-text manifold descriptions and the built-in 5-dimensional example.

File format (line oriented, ``#`` starts a comment)::

    LABEL free text
    DIM 5
    BRACKETS
    0 1 2 1/2        # [e_0, e_1] has e_2-coefficient 1/2; only i < j is written
    METRIC
    1 0 0 0 0        # one row per line
    ...
    PHI
    0 0 0 -1 0       # row k holds the e_k components of phi e_0 .. phi e_{dim-1}
    ...
    XI
    1 0 0 0 0
    ETA
    1 0 0 0 0

A section starts with its keyword; values may follow on the same line or on
the next lines.  ``BRACKETS`` and ``LABEL`` are optional.  Rationals are
written ``p/q`` or as integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ratlin
from .errors import ParseError, ValidationError
from .lie import LieAlgebra
from .structure import ACBStructure

SECTIONS = ("LABEL", "DIM", "BRACKETS", "METRIC", "PHI", "XI", "ETA")
REQUIRED = ("DIM", "METRIC", "PHI", "XI", "ETA")


def _matrix(rows) -> tuple:
    return tuple(tuple(ratlin.as_fraction(x) for x in row) for row in rows)


def _vector(vals) -> tuple:
    return tuple(ratlin.as_fraction(x) for x in vals)


@dataclass(frozen=True)
class ManifoldDescription:
    """Exact data of a left-invariant structure on a Lie group.

    Brackets are stored as sorted ``(i, j, k, value)`` with ``i < j`` and
    nonzero ``value``, so equal manifolds compare equal.
    """

    dim: int
    brackets: tuple
    metric: tuple
    phi: tuple
    xi: tuple
    eta: tuple
    label: str = ""

    def __post_init__(self):
        merged: dict = {}
        for i, j, k, v in self.brackets:
            v = ratlin.as_fraction(v)
            if i > j:
                i, j, v = j, i, -v
            merged[(i, j, k)] = merged.get((i, j, k), Fraction(0)) + v
        br = tuple(sorted((i, j, k, v) for (i, j, k), v in merged.items() if v != 0))
        object.__setattr__(self, "brackets", br)
        object.__setattr__(self, "metric", _matrix(self.metric))
        object.__setattr__(self, "phi", _matrix(self.phi))
        object.__setattr__(self, "xi", _vector(self.xi))
        object.__setattr__(self, "eta", _vector(self.eta))
        object.__setattr__(self, "label", " ".join(str(self.label).split()))
        self.validate()

    def validate(self):
        d = self.dim
        if d < 3 or d % 2 == 0:
            raise ValidationError(f"DIM: dimension must be odd and >= 3, got {d}")
        for i, j, k, _ in self.brackets:
            if not all(0 <= t < d for t in (i, j, k)):
                raise ValidationError(f"BRACKETS: index out of range in {(i, j, k)}")
            if i == j:
                raise ValidationError(f"BRACKETS: [e_{i}, e_{i}] must vanish")
        for name in ("metric", "phi"):
            m = getattr(self, name)
            if len(m) != d or any(len(row) != d for row in m):
                raise ValidationError(f"{name.upper()}: expected a {d}x{d} matrix")
        for name in ("xi", "eta"):
            if len(getattr(self, name)) != d:
                raise ValidationError(f"{name.upper()}: expected {d} entries")
        m = self.metric
        for i in range(d):
            for j in range(i):
                if m[i][j] != m[j][i]:
                    raise ValidationError(f"METRIC: not symmetric at ({j}, {i})")

    def algebra(self) -> LieAlgebra:
        return LieAlgebra.from_brackets(self.dim, self.brackets)

    def structure(self) -> ACBStructure:
        return ACBStructure(self.algebra(), self.metric, self.phi, self.xi, self.eta)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_manifold(text: str) -> ManifoldDescription:
    """Parse the description format; see the module docstring."""
    sections: dict = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head in SECTIONS:
            if head in sections:
                raise ParseError(f"section {head} given twice", lineno)
            current = head
            sections[head] = {"line": lineno, "rows": [], "label": rest.strip()}
            if rest.strip() and head != "LABEL":
                sections[head]["rows"].append((lineno, rest.split()))
            continue
        if current is None:
            raise ParseError(f"data before any section header: {line!r}", lineno)
        if current == "LABEL":
            raise ParseError("LABEL takes its text on the header line", lineno)
        sections[current]["rows"].append((lineno, line.split()))
    for name in REQUIRED:
        if name not in sections:
            raise ParseError(f"missing section {name}")

    def rat(lineno, tok):
        try:
            return ratlin.parse_rational(tok)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None

    def integer(lineno, tok, what):
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"{what} must be an integer, got {tok!r}", lineno) from None

    dim_rows = sections["DIM"]["rows"]
    if len(dim_rows) != 1 or len(dim_rows[0][1]) != 1:
        raise ParseError("DIM takes exactly one integer", sections["DIM"]["line"])
    dim = integer(dim_rows[0][0], dim_rows[0][1][0], "DIM")
    if dim < 3 or dim % 2 == 0:
        raise ValidationError(f"DIM: dimension must be odd and >= 3, got {dim}")

    brackets = []
    seen = set()
    for lineno, toks in sections.get("BRACKETS", {"rows": []})["rows"]:
        if len(toks) != 4:
            raise ParseError("bracket lines have the form 'i j k value'", lineno)
        i, j, k = (integer(lineno, t, "bracket index") for t in toks[:3])
        if not all(0 <= t < dim for t in (i, j, k)):
            raise ValidationError(f"BRACKETS (line {lineno}): index out of range 0..{dim - 1}")
        if i >= j:
            raise ValidationError(f"BRACKETS (line {lineno}): entries need i < j, got {i} {j}")
        if (i, j, k) in seen:
            raise ValidationError(f"BRACKETS (line {lineno}): duplicate entry {(i, j, k)}")
        seen.add((i, j, k))
        brackets.append((i, j, k, rat(lineno, toks[3])))

    def matrix(name):
        rows = sections[name]["rows"]
        if len(rows) != dim:
            raise ParseError(f"{name} needs {dim} rows, got {len(rows)}", sections[name]["line"])
        out = []
        for lineno, toks in rows:
            if len(toks) != dim:
                raise ParseError(f"{name} rows need {dim} entries, got {len(toks)}", lineno)
            out.append([rat(lineno, t) for t in toks])
        return out

    def vector(name):
        rows = sections[name]["rows"]
        toks = [(lineno, t) for lineno, ts in rows for t in ts]
        if len(toks) != dim:
            raise ParseError(f"{name} needs {dim} entries, got {len(toks)}", sections[name]["line"])
        return [rat(lineno, t) for lineno, t in toks]

    return ManifoldDescription(
        dim=dim,
        brackets=tuple(brackets),
        metric=matrix("METRIC"),
        phi=matrix("PHI"),
        xi=vector("XI"),
        eta=vector("ETA"),
        label=sections.get("LABEL", {"label": ""})["label"],
    )


def serialize_manifold(desc: ManifoldDescription) -> str:
    fmt = ratlin.format_rational
    lines = []
    if desc.label:
        lines.append(f"LABEL {desc.label}")
    lines.append(f"DIM {desc.dim}")
    lines.append("BRACKETS")
    lines += [f"{i} {j} {k} {fmt(v)}" for i, j, k, v in desc.brackets]
    for name, rows in (("METRIC", desc.metric), ("PHI", desc.phi)):
        lines.append(name)
        lines += [" ".join(fmt(x) for x in row) for row in rows]
    for name, vec in (("XI", desc.xi), ("ETA", desc.eta)):
        lines.append(name)
        lines.append(" ".join(fmt(x) for x in vec))
    return "\n".join(lines) + "\n"


def example_sasaki5(p=0, q=0) -> ManifoldDescription:
    """The five-dimensional Sasaki-like Lie group with real parameters ``p``, ``q``.

    Commutators with ``e_0``::

        [e0,e1] =  p e2 + e3 + q e4     [e0,e2] = -p e1 - q e3 + e4
        [e0,e3] = -e1 - q e2 + p e4     [e0,e4] =  q e1 - e2 - p e3

    with ``g = diag(1, 1, 1, -1, -1)``, ``xi = e0`` and
    ``phi: e1 -> e3, e2 -> e4, e3 -> -e1, e4 -> -e2``.
    """
    p, q = ratlin.as_fraction(p), ratlin.as_fraction(q)
    brackets = [
        (0, 1, 2, p), (0, 1, 3, 1), (0, 1, 4, q),
        (0, 2, 1, -p), (0, 2, 3, -q), (0, 2, 4, 1),
        (0, 3, 1, -1), (0, 3, 2, -q), (0, 3, 4, p),
        (0, 4, 1, q), (0, 4, 2, -1), (0, 4, 3, -p),
    ]
    metric = [[0] * 5 for _ in range(5)]
    for i, s in enumerate((1, 1, 1, -1, -1)):
        metric[i][i] = s
    phi = [[0] * 5 for _ in range(5)]
    for src, dst, sign in ((1, 3, 1), (2, 4, 1), (3, 1, -1), (4, 2, -1)):
        phi[dst][src] = sign
    fmt = ratlin.format_rational
    return ManifoldDescription(
        dim=5,
        brackets=tuple(brackets),
        metric=metric,
        phi=phi,
        xi=[1, 0, 0, 0, 0],
        eta=[1, 0, 0, 0, 0],
        label=f"sasaki5 p={fmt(p)} q={fmt(q)}",
    )
