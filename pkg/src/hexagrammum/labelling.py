"""Duads, synthemes, the Sylvester table and the labels k(a,bc) of the Pascals.

Number duads are frozensets of two integers from 1..6, letter duads frozensets
of two letters from ``"ABCDEF"``.  A syntheme is a frozenset of three duads.
A hexagon array is a pair of rows ``((a1, a2, a3), (b1, b2, b3))``; its
cross-hair points are ``a_i b_j  x  a_j b_i`` for the three column pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

SIX = (1, 2, 3, 4, 5, 6)
LTR = "ABCDEF"

Duad = frozenset
Syntheme = frozenset


def duad(x, y) -> frozenset:
    if x == y:
        raise ValueError(f"a duad needs two distinct elements, got {x!r} twice")
    return frozenset((x, y))


def _parse_syntheme(text: str) -> frozenset:
    return frozenset(frozenset(int(ch) for ch in part) for part in text.split("."))


# Rows and columns indexed by A..F; transcribed verbatim, diagonal empty.
_TABLE_TEXT = {
    "A": (None, "14.25.36", "16.24.35", "13.26.45", "12.34.56", "15.23.46"),
    "B": ("14.25.36", None, "15.26.34", "12.35.46", "16.23.45", "13.24.56"),
    "C": ("16.24.35", "15.26.34", None, "14.23.56", "13.25.46", "12.36.45"),
    "D": ("13.26.45", "12.35.46", "14.23.56", None, "15.24.36", "16.25.34"),
    "E": ("12.34.56", "16.23.45", "13.25.46", "15.24.36", None, "14.26.35"),
    "F": ("15.23.46", "13.24.56", "12.36.45", "16.25.34", "14.26.35", None),
}


class TableError(RuntimeError):
    pass


def _build_table() -> dict[frozenset, frozenset]:
    table = {}
    for i, row in enumerate(LTR):
        for j, col in enumerate(LTR):
            entry = _TABLE_TEXT[row][j]
            if i == j:
                if entry is not None:
                    raise TableError("diagonal entry must be empty")
                continue
            if _TABLE_TEXT[col][i] != entry:
                raise TableError(f"table not symmetric at {row}{col}")
            s = _parse_syntheme(entry)
            if sorted(x for d in s for x in d) != list(SIX) or any(len(d) != 2 for d in s):
                raise TableError(f"{entry} is not a syntheme")
            table[duad(row, col)] = s
    if len(table) != 15 or len(set(table.values())) != 15:
        raise TableError("table is not a bijection LD -> NS")
    return table


SYNTHEME_OF_LETTER_DUAD: dict[frozenset, frozenset] = _build_table()

NUMBER_DUADS = tuple(duad(a, b) for a, b in combinations(SIX, 2))
LETTER_DUADS = tuple(duad(a, b) for a, b in combinations(LTR, 2))


def _build_inverse() -> dict[frozenset, frozenset]:
    inv = {}
    for nd in NUMBER_DUADS:
        inv[nd] = frozenset(ld for ld, s in SYNTHEME_OF_LETTER_DUAD.items() if nd in s)
    for nd, ls in inv.items():
        letters = sorted(x for d in ls for x in d)
        if len(ls) != 3 or letters != list(LTR):
            raise TableError(f"duad {fmt_duad(nd)} does not give a letter syntheme")
    return inv


LETTER_SYNTHEME_OF_NUMBER_DUAD: dict[frozenset, frozenset] = _build_inverse()


def syntheme_of_letter_duad(d) -> frozenset:
    if isinstance(d, str):
        d = duad(d[0], d[1])
    return SYNTHEME_OF_LETTER_DUAD[frozenset(d)]


def letter_syntheme_of_number_duad(d) -> frozenset:
    if isinstance(d, str):
        d = duad(int(d[0]), int(d[1]))
    return LETTER_SYNTHEME_OF_NUMBER_DUAD[frozenset(d)]


def fmt_duad(d: Iterable) -> str:
    return "".join(str(x) for x in sorted(d))


def fmt_syntheme(s: Iterable[Iterable]) -> str:
    return ".".join(sorted(fmt_duad(d) for d in s))


# -- labels -------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Label:
    """The Pascal label k(a, bc) with b < c."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if len({self.a, self.b, self.c}) != 3 or not {self.a, self.b, self.c} <= set(SIX):
            raise ValueError(f"invalid label k({self.a},{self.b}{self.c})")
        if self.b > self.c:
            b, c = self.c, self.b
            object.__setattr__(self, "b", b)
            object.__setattr__(self, "c", c)

    @property
    def single(self) -> frozenset:
        return frozenset((self.a,))

    @property
    def pair(self) -> frozenset:
        return frozenset((self.b, self.c))

    def __str__(self) -> str:
        return f"k({self.a},{self.b}{self.c})"

    @classmethod
    def parse(cls, text: str) -> "Label":
        """Accept ``k(1,23)``, ``(1,23)``, ``1,23`` or ``1.23``."""
        t = text.strip()
        if t.startswith("k"):
            t = t[1:]
        t = t.strip("()").replace(".", ",").replace(" ", "")
        try:
            a, bc = t.split(",")
            if len(a) != 1 or len(bc) != 2:
                raise ValueError
            return cls(int(a), int(bc[0]), int(bc[1]))
        except ValueError:
            raise ValueError(f"cannot parse label {text!r}") from None


def all_labels() -> list[Label]:
    return [Label(a, b, c) for a in SIX for b, c in combinations([x for x in SIX if x != a], 2)]


LABELS: tuple[Label, ...] = tuple(all_labels())


# -- hexagon arrays -------------------------------------------------------

HexArray = tuple  # ((a1, a2, a3), (b1, b2, b3))


def make_array(top: Sequence[str], bottom: Sequence[str]) -> HexArray:
    arr = (tuple(top), tuple(bottom))
    validate_array(arr)
    return arr


def parse_array(text: str) -> HexArray:
    """Parse ``"ABC/FED"`` style text."""
    top, bottom = text.replace(" ", "").split("/")
    return make_array(top, bottom)


def validate_array(arr) -> None:
    if len(arr) != 2 or any(len(row) != 3 for row in arr):
        raise ValueError(f"an array has two rows of three letters: {arr!r}")
    letters = sorted(arr[0] + arr[1])
    if letters != list(LTR):
        raise ValueError(f"array must use each of A..F exactly once: {arr!r}")


def canonical_array(arr) -> HexArray:
    """Least representative under row swap and column permutations."""
    validate_array(arr)
    cols = list(zip(arr[0], arr[1]))
    best = None
    for perm in permutations(cols):
        for swap in (False, True):
            top = tuple(c[1] if swap else c[0] for c in perm)
            bot = tuple(c[0] if swap else c[1] for c in perm)
            cand = (top, bot)
            if best is None or cand < best:
                best = cand
    return best


def fmt_array(arr) -> str:
    return "".join(arr[0]) + "/" + "".join(arr[1])


def crosshair_pairs(arr) -> list[tuple[tuple[str, str], tuple[str, str]]]:
    """The three pairs of opposite sides whose intersections lie on the Pascal."""
    a, b = arr
    return [((a[i], b[j]), (a[j], b[i])) for i, j in ((0, 1), (0, 2), (1, 2))]


def _blue_green(arr):
    a, b = arr
    blue = [(a[i], b[(i + 1) % 3]) for i in range(3)]
    green = [(a[i], b[(i - 1) % 3]) for i in range(3)]
    return blue, green


def _common_duad(letter_duads) -> frozenset:
    synthemes = [syntheme_of_letter_duad(d) for d in letter_duads]
    common = synthemes[0] & synthemes[1] & synthemes[2]
    if len(common) != 1:
        raise TableError("opposite sides do not share a duad")
    return next(iter(common))


def label_of_array(arr) -> Label:
    validate_array(arr)
    blue, green = _blue_green(arr)
    d1, d2 = _common_duad(blue), _common_duad(green)
    shared = d1 & d2
    if len(shared) != 1:
        raise TableError("side duads do not share exactly one element")
    (a,) = shared
    (b,) = d1 - shared
    (c,) = d2 - shared
    return Label(a, b, c)


def _hexagon_cycle(s1: frozenset, s2: frozenset) -> list[str]:
    """Walk the 6-cycle whose sides alternate between letter synthemes s1 and s2."""
    nbr = {x: {} for x in LTR}
    for d in s1:
        x, y = sorted(d)
        nbr[x][1], nbr[y][1] = y, x
    for d in s2:
        x, y = sorted(d)
        nbr[x][2], nbr[y][2] = y, x
    cycle = ["A"]
    which = 1
    while len(cycle) < 6:
        cycle.append(nbr[cycle[-1]][which])
        which = 3 - which
    if nbr[cycle[-1]][which] != "A":
        raise TableError("letter synthemes do not form a hexagon")
    return cycle


def array_of_label(s: Label) -> HexArray:
    cycle = _hexagon_cycle(
        letter_syntheme_of_number_duad(duad(s.a, s.b)),
        letter_syntheme_of_number_duad(duad(s.a, s.c)),
    )
    # hexagon a1-b2-a3-b1-a2-b3
    v = cycle
    return canonical_array(((v[0], v[4], v[2]), (v[3], v[1], v[5])))


@lru_cache(maxsize=None)
def label_array_table() -> dict[Label, HexArray]:
    return {s: array_of_label(s) for s in LABELS}


# -- permutations and the outer automorphism ------------------------------

Perm = tuple  # perm[i-1] is the image of i


def perm_from_cycles(*cycles: Sequence[int], n: int = 6) -> Perm:
    img = list(range(1, n + 1))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            img[x - 1] = cyc[(i + 1) % len(cyc)]
    return tuple(img)


def compose(p: Perm, q: Perm) -> Perm:
    """p after q."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x - 1] = i + 1
    return tuple(inv)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen, out = set(), []
    for start in range(1, len(p) + 1):
        if start in seen or p[start - 1] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = p[x - 1]
        out.append(tuple(cyc))
    return out


def fmt_perm(p: Perm) -> str:
    cs = cycles(p)
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs) or "()"


def transpositions(p: Perm) -> list[tuple[int, int]]:
    """Transpositions t1..tk with p = t1 t2 ... tk (rightmost applied first)."""
    out = []
    for cyc in cycles(p):
        # (a1 a2 ... ak) = (a1 ak)(a1 a_{k-1}) ... (a1 a2)
        out.extend((cyc[0], cyc[j]) for j in range(len(cyc) - 1, 0, -1))
    return out


def _omega_transposition(i: int, j: int) -> Perm:
    s = syntheme_of_letter_duad(duad(LTR[i - 1], LTR[j - 1]))
    return perm_from_cycles(*[tuple(sorted(d)) for d in s])


def omega(p: Perm) -> Perm:
    """The outer automorphism of S6 induced by the table (A->1, ..., F->6)."""
    result = tuple(SIX)
    for i, j in transpositions(p):
        result = compose(result, _omega_transposition(i, j))
    return result


def letter_perm(p: Perm) -> dict[str, str]:
    return {LTR[i]: LTR[p[i] - 1] for i in range(6)}


def act_on_array(p: Perm, arr) -> HexArray:
    m = letter_perm(p)
    return (tuple(m[x] for x in arr[0]), tuple(m[x] for x in arr[1]))


def act_on_label(p: Perm, s: Label) -> Label:
    return Label(p[s.a - 1], p[s.b - 1], p[s.c - 1])


# -- interference ---------------------------------------------------------

INTERFERENCE_PATTERNS: dict[str, tuple[tuple[int, int], tuple[int, int]]] = {
    "I1": ((1, 0), (0, 0)),
    "I2": ((1, 0), (0, 1)),
    "I3": ((0, 0), (1, 0)),
    "I4": ((0, 0), (1, 1)),
    "I5": ((0, 1), (1, 1)),
    "I6": ((0, 1), (1, 0)),
    "I7": ((0, 0), (0, 0)),
    "I8": ((0, 0), (0, 1)),
    "I9": ((0, 0), (0, 2)),
    "I3T": ((0, 1), (0, 0)),
    "I4T": ((0, 1), (0, 1)),
}

# second label of a representative pair, the first being k(1,23)
REPRESENTATIVES: dict[str, Label] = {
    "I1": Label(1, 4, 5),
    "I2": Label(1, 2, 4),
    "I3": Label(2, 4, 5),
    "I4": Label(2, 3, 4),
    "I5": Label(2, 1, 3),
    "I6": Label(2, 1, 4),
    "I7": Label(4, 5, 6),
    "I8": Label(4, 2, 5),
    "I9": Label(4, 2, 3),
}
BASE_LABEL = Label(1, 2, 3)


def interference(s: Label, t: Label) -> tuple[tuple[int, int], tuple[int, int]]:
    return (
        (len(s.single & t.single), len(s.single & t.pair)),
        (len(s.pair & t.single), len(s.pair & t.pair)),
    )


def interference_class(s: Label, t: Label) -> str:
    """Name of the pattern of (s, t); transposes of I3, I4 are folded onto them."""
    m = interference(s, t)
    for name, pat in INTERFERENCE_PATTERNS.items():
        if pat == m:
            return name.rstrip("T")
    raise ValueError(f"unexpected interference matrix {m}")


def render_table() -> str:
    width = 9
    lines = [" " * 2 + "".join(f"{c:^{width}}" for c in LTR)]
    for row in LTR:
        cells = []
        for col in LTR:
            if row == col:
                cells.append(f"{'':^{width}}")
            else:
                cells.append(f"{fmt_syntheme(SYNTHEME_OF_LETTER_DUAD[duad(row, col)]):^{width}}")
        lines.append(f"{row} " + "".join(cells))
    return "\n".join(lines)
