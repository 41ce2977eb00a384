"""Plain-text algebra files.

::

    # h3
    dim 3
    0 1 2 1

The header ``dim <n>`` comes first; every other line is ``i j k value``
meaning ``c_ij^k = value`` with 0-based indices and ``i < j``. Values are
integers or ``p/q``. ``#`` starts a comment.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .algebra import Algebra

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class AlgebraFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ValueError(f"{text!r} is not a rational of the form p or p/q")
    value = Fraction(text)
    return value


def parse(text: str, name: str | None = None) -> Algebra:
    dim = None
    entries: dict[tuple[int, int, int], Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if dim is None:
            if len(tokens) != 2 or tokens[0] != "dim" or not tokens[1].isdigit():
                raise AlgebraFileError("expected header 'dim <n>'", lineno)
            dim = int(tokens[1])
            continue
        if len(tokens) != 4:
            raise AlgebraFileError(f"expected 'i j k value', got {len(tokens)} fields", lineno)
        try:
            i, j, k = (int(x) for x in tokens[:3])
        except ValueError:
            raise AlgebraFileError("indices must be integers", lineno) from None
        try:
            value = parse_rational(tokens[3])
        except (ValueError, ZeroDivisionError) as exc:
            raise AlgebraFileError(str(exc), lineno) from None
        if not i < j:
            raise AlgebraFileError(f"indices must satisfy i < j, got i={i}, j={j}", lineno)
        if min(i, j, k) < 0 or max(i, j, k) >= dim:
            raise AlgebraFileError(f"index out of range for dim {dim}", lineno)
        if (i, j, k) in entries:
            raise AlgebraFileError(f"duplicate constant ({i},{j},{k})", lineno)
        entries[(i, j, k)] = value
    if dim is None:
        raise AlgebraFileError("missing 'dim <n>' header")
    products: dict = {}
    for (i, j, k), v in entries.items():
        products.setdefault((i, j), {})[k] = v
    return Algebra.from_products(dim, products, name=name)


def serialize(a: Algebra) -> str:
    lines = []
    if a.name:
        lines.append(f"# {a.name}")
    lines.append(f"dim {a.dim}")
    for (i, j), vec in a.constants.items():
        for k, v in enumerate(vec):
            if v:
                lines.append(f"{i} {j} {k} {v}")
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> Algebra:
    path = Path(path)
    return parse(path.read_text(), name=path.stem)


def dump(a: Algebra, path: str | Path) -> None:
    Path(path).write_text(serialize(a))
