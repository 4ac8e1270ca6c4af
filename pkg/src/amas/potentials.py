"""Paths, cycles, potentials on a named-arrow quiver, and cyclic derivatives.

Composition is rightmost-first: the word (c, b, a) means a acts first, then
b, then c, so a path i -> j with arrows a: i->x, b: x->y, c: y->j is written
"c.b.a".  The cyclic derivative with respect to an arrow splits the cycle
word at each occurrence, u + (arrow,) + v, and emits the word v + u, a path
from the arrow's target back to its source.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .quiver import IceQuiver

Word = tuple[str, ...]


@dataclass(frozen=True)
class ArrowQuiver:
    """Quiver with individually named arrows (parallel arrows distinguished)."""

    vertices: int
    arrows: tuple[tuple[str, int, int], ...]  # (name, source, target), 1-based

    def __post_init__(self) -> None:
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be distinct")
        for name, s, t in self.arrows:
            if not (1 <= s <= self.vertices and 1 <= t <= self.vertices):
                raise ValueError(f"arrow {name}: endpoint out of range")

    @classmethod
    def from_ice_quiver(cls, q: IceQuiver) -> ArrowQuiver:
        """Multiplicity expansion with deterministic names a<src>_<tgt>[_r]."""
        arrows: list[tuple[str, int, int]] = []
        for i, j, mult in q.arrows():
            for r in range(mult):
                suffix = f"_{r + 1}" if mult > 1 else ""
                arrows.append((f"a{i}_{j}{suffix}", i, j))
        return cls(q.m, tuple(arrows))

    def by_name(self, name: str) -> tuple[str, int, int]:
        for arrow in self.arrows:
            if arrow[0] == name:
                return arrow
        raise KeyError(f"no arrow named {name!r}")

    def arrow_order(self, name: str) -> int:
        for idx, arrow in enumerate(self.arrows):
            if arrow[0] == name:
                return idx
        raise KeyError(f"no arrow named {name!r}")

    def source(self, name: str) -> int:
        return self.by_name(name)[1]

    def target(self, name: str) -> int:
        return self.by_name(name)[2]


@dataclass(frozen=True)
class Path:
    """A composable arrow word, or a lazy path at a vertex (empty word)."""

    word: Word
    at: int | None = None  # vertex of a lazy path; None for nonempty words

    def __post_init__(self) -> None:
        if self.word and self.at is not None:
            raise ValueError("nonempty paths carry no base vertex")
        if not self.word and self.at is None:
            raise ValueError("the lazy path needs a vertex")

    @property
    def is_lazy(self) -> bool:
        return not self.word

    def render(self) -> str:
        return ".".join(self.word) if self.word else f"e{self.at}"


def path_endpoints(q: ArrowQuiver, p: Path) -> tuple[int, int]:
    """(source, target); validates composability at every junction."""
    if p.is_lazy:
        assert p.at is not None
        return p.at, p.at
    word = p.word
    for left, right in zip(word, word[1:]):
        if q.source(left) != q.target(right):
            raise ValueError(
                f"word {'.'.join(word)} is not composable at {right}|{left}"
            )
    return q.source(word[-1]), q.target(word[0])


def cycle_normal_form(q: ArrowQuiver, p: Path) -> Path:
    """Rotation-minimal representative of a cyclic path.

    Rotations are compared by the declaration order of their arrows; two
    cycles are equal as cyclic words iff their normal forms coincide.
    """
    src, tgt = path_endpoints(q, p)
    if src != tgt:
        raise ValueError(f"path {p.render()} is not a cycle ({src} -> {tgt})")
    if p.is_lazy:
        return p
    word = p.word
    length = len(word)
    rotations = [word[r:] + word[:r] for r in range(length)]
    key = lambda w: tuple(q.arrow_order(name) for name in w)
    return Path(min(rotations, key=key))


@dataclass(frozen=True)
class PathSum:
    """Formal integer combination of paths."""

    terms: tuple[tuple[Path, int], ...]

    @classmethod
    def from_dict(cls, d: Mapping[Path, int]) -> PathSum:
        items = tuple(
            sorted(
                ((p, c) for p, c in d.items() if c),
                key=lambda t: (len(t[0].word), t[0].word, t[0].at or 0),
            )
        )
        return cls(items)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: PathSum) -> PathSum:
        acc: dict[Path, int] = dict(self.terms)
        for p, c in other.terms:
            acc[p] = acc.get(p, 0) + c
        return PathSum.from_dict(acc)

    def scale(self, c: int) -> PathSum:
        return PathSum.from_dict({p: c * coeff for p, coeff in self.terms})

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for p, c in self.terms:
            if c == 1:
                parts.append(p.render())
            else:
                parts.append(f"{c}*{p.render()}")
        return " + ".join(parts)


@dataclass(frozen=True)
class Potential:
    """Finite sum of cycles; each cycle is stored rotation-minimal."""

    quiver: ArrowQuiver
    terms: tuple[tuple[Word, int], ...]

    @classmethod
    def build(cls, q: ArrowQuiver, cycles: Iterable[tuple[Path, int]]) -> Potential:
        acc: dict[Word, int] = {}
        for p, c in cycles:
            normal = cycle_normal_form(q, p)
            if normal.is_lazy:
                raise ValueError("potentials are sums of cycles of positive length")
            acc[normal.word] = acc.get(normal.word, 0) + c
        items = tuple(
            sorted(((w, c) for w, c in acc.items() if c), key=lambda t: (len(t[0]), t[0]))
        )
        return cls(q, items)

    def __add__(self, other: Potential) -> Potential:
        if other.quiver != self.quiver:
            raise ValueError("potentials live on the same quiver")
        return Potential.build(
            self.quiver,
            [(Path(w), c) for w, c in self.terms] + [(Path(w), c) for w, c in other.terms],
        )

    def scale(self, c: int) -> Potential:
        return Potential.build(self.quiver, [(Path(w), c * coeff) for w, coeff in self.terms])


def cyclic_derivative(w: Potential, arrow: str) -> PathSum:
    """Sum of v + u over all splittings (u, arrow, v) of each cycle word."""
    q = w.quiver
    q.by_name(arrow)  # validates the arrow exists
    src = q.source(arrow)
    tgt = q.target(arrow)
    acc: dict[Path, int] = {}
    for word, coeff in w.terms:
        for idx, name in enumerate(word):
            if name != arrow:
                continue
            u = word[:idx]
            v = word[idx + 1 :]
            out_word = v + u
            piece = Path(out_word) if out_word else Path((), at=src)
            acc[piece] = acc.get(piece, 0) + coeff
    result = PathSum.from_dict(acc)
    for p, _ in result.terms:
        s, t = path_endpoints(q, p)
        assert (s, t) == (tgt, src), "derivative paths run from target to source"
    return result


def jacobian_generators(
    q: ArrowQuiver, w: Potential
) -> list[tuple[str, PathSum]]:
    """One cyclic derivative per arrow, in declaration order."""
    return [(name, cyclic_derivative(w, name)) for name, _, _ in q.arrows]


# -- text formats -----------------------------------------------------------


def parse_arrows(text: str) -> tuple[tuple[str, int, int], ...]:
    """Arrow list syntax: "a:1>2,b:2>3,c:3>1"."""
    arrows = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, _, span = chunk.partition(":")
        src, _, tgt = span.partition(">")
        if not name or not src.strip().isdigit() or not tgt.strip().isdigit():
            raise ValueError(f"cannot parse arrow {chunk!r}")
        arrows.append((name.strip(), int(src), int(tgt)))
    if not arrows:
        raise ValueError("empty arrow list")
    return tuple(arrows)


def parse_potential(q: ArrowQuiver, text: str) -> Potential:
    """Potential syntax: "+"-separated cycles of dot-separated arrow names,
    each with an optional integer coefficient, e.g. "c.b.a + 2*b.a.b.a"."""
    cycles: list[tuple[Path, int]] = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError("empty cycle in potential")
        coeff = 1
        if "*" in chunk:
            coeff_text, _, chunk = chunk.partition("*")
            coeff_text = coeff_text.strip()
            if not (coeff_text.lstrip("-").isdigit()):
                raise ValueError(f"bad coefficient {coeff_text!r}")
            coeff = int(coeff_text)
            chunk = chunk.strip()
        word = tuple(name.strip() for name in chunk.split("."))
        for name in word:
            q.by_name(name)
        cycles.append((Path(word), coeff))
    return Potential.build(q, cycles)
