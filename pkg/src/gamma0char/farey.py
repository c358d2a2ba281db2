"""Generator sets for Gamma0(N) from Farey symbols, and word decomposition.

A Farey symbol is a chain of unimodularly adjacent fractions spanning [0, 1],
bracketed by two infinite endpoints, with one pairing label per side.  The
side pairings read off the symbol are an independent set of generators: one
infinite-order generator per Free pair (the two vertical boundary sides are
always a Free pair realised by the translation T), one generator squaring to
-I per Even side, one cubing to -I per Odd side, plus -I itself.

Construction is a deterministic mediant-subdivision loop: a side survives
when it admits an Even, Odd, or Free pairing inside the group (membership is
a congruence on the vertex denominators), otherwise the leftmost unpairable
side is subdivided at its mediant and the scan restarts.  Word decomposition
walks an element's image of the infinite cusp back into the base polygon,
crossing one paired side at a time.
"""

from __future__ import annotations

import json
import os
import tempfile
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction

from .dirichlet import factorize
from .sl2 import I, NEG_I, S, T, Gamma0Element, UniModular

_TS = T * S  # order six; conjugates of it are the Odd pairing matrices

EVEN = ("even",)
ODD = ("odd",)


def index_gamma0(n: int) -> int:
    """Index of Gamma0(N) in SL2(Z): N times the product of (1 + 1/p)."""
    if n < 1:
        raise ValueError(f"level must be positive, got {n}")
    ix = Fraction(n)
    for p, _ in factorize(n):
        ix *= Fraction(p + 1, p)
    assert ix.denominator == 1
    return int(ix)


def _side_matrix(v_left: tuple[int, int], v_right: tuple[int, int]) -> UniModular:
    """Matrix taking the imaginary axis to the side: 0 -> left, oo -> right."""
    (p1, q1), (p2, q2) = v_left, v_right
    return UniModular(p2, p1, q2, q1)


@dataclass(frozen=True)
class FareySymbol:
    """Vertex chain and side pairing labels for a level.

    ``vertices`` runs from the left infinite endpoint (-1, 0) through the
    reduced fractions of [0, 1] to the right infinite endpoint (1, 0); side i
    joins vertices i and i+1.  Labels are ("even",), ("odd",) or
    ("free", pair_id); pair id 0 is the boundary pair realised by T.
    """

    level: int
    vertices: tuple[tuple[int, int], ...]
    pairings: tuple[tuple, ...]

    def __post_init__(self) -> None:
        v = self.vertices
        if len(self.pairings) != len(v) - 1:
            raise ValueError("one pairing label required per side")
        for (p1, q1), (p2, q2) in zip(v, v[1:]):
            if p2 * q1 - p1 * q2 != 1:
                raise ValueError(f"vertices {p1}/{q1}, {p2}/{q2} are not adjacent")
        seen: dict[int, int] = {}
        for label in self.pairings:
            if label[0] == "free":
                seen[label[1]] = seen.get(label[1], 0) + 1
        if any(count != 2 for count in seen.values()):
            raise ValueError("every free pair id must occur exactly twice")

    def fractions(self) -> list[Fraction]:
        """The interior vertices, as exact fractions."""
        return [Fraction(p, q) for p, q in self.vertices[1:-1]]

    def side_matrix(self, i: int) -> UniModular:
        return _side_matrix(self.vertices[i], self.vertices[i + 1])

    def pairing_matrix(self, i: int) -> UniModular:
        """The generator attached to side i.

        Even: conjugate of S (squares to -I).  Odd: conjugate of TS (cubes to
        -I).  Free: the map carrying this side to its partner, oriented from
        the left member of the pair; for pair id 0 this is T.
        """
        label = self.pairings[i]
        m = self.side_matrix(i)
        if label == EVEN:
            return m * S * m.inv()
        if label == ODD:
            return m * _TS * m.inv()
        left, right = (k for k, lab in enumerate(self.pairings) if lab == label)
        return self.side_matrix(right) * S * self.side_matrix(left).inv()

    def counts(self) -> tuple[int, int, int]:
        """(free pairs, even sides, odd sides) = (r, e2, e3)."""
        e2 = sum(1 for label in self.pairings if label == EVEN)
        e3 = sum(1 for label in self.pairings if label == ODD)
        r = sum(1 for label in self.pairings if label[0] == "free") // 2
        return r, e2, e3


def farey_symbol(n: int, variant: str = "leftmost") -> FareySymbol:
    """Build a Farey symbol for level n >= 2 by mediant subdivision.

    ``variant`` picks which unpairable side is subdivided ("leftmost" or
    "rightmost"); both produce valid symbols, which the tests exploit to
    check that derived quantities do not depend on the generator set.
    """
    if n < 2:
        raise ValueError("levels below 2 have no Farey symbol here; see generators()")
    if variant not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown variant {variant!r}")
    verts: list[tuple[int, int]] = [(-1, 0), (0, 1), (1, 1), (1, 0)]
    # labels[i] describes the side (verts[i], verts[i+1]); the two boundary
    # sides form free pair 0 (realised by T) from the start.
    labels: list[tuple | None] = [("free", 0), None, ("free", 0)]
    next_pair = 1
    for _ in range(100000):
        # label even and odd sides
        for i in range(1, len(labels) - 1):
            if labels[i] is None:
                b, d = verts[i][1], verts[i + 1][1]
                if (b * b + d * d) % n == 0:
                    labels[i] = EVEN
                elif (b * b + b * d + d * d) % n == 0:
                    labels[i] = ODD
        # match free pairs, leftmost partner first
        unpaired = [i for i in range(1, len(labels) - 1) if labels[i] is None]
        for pos, i in enumerate(unpaired):
            if labels[i] is not None:
                continue
            for j in unpaired[pos + 1 :]:
                if labels[j] is not None:
                    continue
                if (verts[i][1] * verts[j][1] + verts[i + 1][1] * verts[j + 1][1]) % n == 0:
                    labels[i] = labels[j] = ("free", next_pair)
                    next_pair += 1
                    break
        remaining = [i for i in range(1, len(labels) - 1) if labels[i] is None]
        if not remaining:
            return FareySymbol(n, tuple(verts), tuple(labels))
        # subdivide one unpairable side at its mediant
        k = remaining[0] if variant == "leftmost" else remaining[-1]
        (p1, q1), (p2, q2) = verts[k], verts[k + 1]
        verts.insert(k + 1, (p1 + p2, q1 + q2))
        labels[k : k + 1] = [None, None]
    raise RuntimeError(f"Farey symbol construction did not terminate for level {n}")


# Crossing rules per side, used by the cusp walk in decompose():
# ("free", gen_index, +1) means the side is the left member of its pair.
_SideRule = tuple[str, int, int]


@dataclass(frozen=True)
class GeneratorSet:
    """Independent generators of Gamma0(N) classified by order.

    ``free`` holds the infinite-order generators (T always first), ``elliptic2``
    the matrices squaring to -I, ``elliptic3`` those cubing to -I; together
    with -I they generate the group.  ``symbol`` is the Farey symbol the set
    was read from (absent for level 1, which uses {S, ST}).
    """

    level: int
    free: tuple[UniModular, ...]
    elliptic2: tuple[UniModular, ...]
    elliptic3: tuple[UniModular, ...]
    symbol: FareySymbol | None = None
    side_rules: tuple[_SideRule, ...] = field(default=(), repr=False)

    def counts(self) -> tuple[int, int, int]:
        return len(self.free), len(self.elliptic2), len(self.elliptic3)

    def all_generators(self) -> list[tuple[tuple[str, int], UniModular]]:
        refs = [(("free", i), g) for i, g in enumerate(self.free)]
        refs += [(("e2", i), g) for i, g in enumerate(self.elliptic2)]
        refs += [(("e3", i), g) for i, g in enumerate(self.elliptic3)]
        return refs

    def matrix_for(self, ref: tuple[str, int]) -> UniModular:
        kind, idx = ref
        return {"free": self.free, "e2": self.elliptic2, "e3": self.elliptic3}[kind][idx]


def _extract_generators(symbol: FareySymbol) -> GeneratorSet:
    n = symbol.level
    free: list[UniModular] = [T]
    elliptic2: list[UniModular] = []
    elliptic3: list[UniModular] = []
    rules: list[_SideRule | None] = [None] * len(symbol.pairings)
    pair_left: dict[int, int] = {}
    last = len(symbol.pairings) - 1
    rules[0] = ("free", 0, 1)
    rules[last] = ("free", 0, -1)
    for i in range(1, last):
        label = symbol.pairings[i]
        if label == EVEN:
            elliptic2.append(symbol.pairing_matrix(i))
            rules[i] = ("e2", len(elliptic2) - 1, 1)
        elif label == ODD:
            elliptic3.append(symbol.pairing_matrix(i))
            rules[i] = ("e3", len(elliptic3) - 1, 1)
        elif label[1] in pair_left:
            left = pair_left[label[1]]
            g = symbol.side_matrix(i) * S * symbol.side_matrix(left).inv()
            free.append(g)
            rules[left] = ("free", len(free) - 1, 1)
            rules[i] = ("free", len(free) - 1, -1)
        else:
            pair_left[label[1]] = i
    for ms in free + elliptic2 + elliptic3:
        if ms.c % n != 0:
            raise RuntimeError(f"generator {ms} escapes level {n}")
    for h in elliptic2:
        if h * h != NEG_I:
            raise RuntimeError(f"even generator {h} does not square to -I")
    for h in elliptic3:
        if h * h * h != NEG_I:
            raise RuntimeError(f"odd generator {h} does not cube to -I")
    expected_r = (
        Fraction(index_gamma0(n), 6)
        + 1
        - Fraction(len(elliptic2), 2)
        - Fraction(2 * len(elliptic3), 3)
    )
    if expected_r != len(free):
        raise RuntimeError(
            f"level {n}: {len(free)} free generators against measure {expected_r}"
        )
    return GeneratorSet(
        n, tuple(free), tuple(elliptic2), tuple(elliptic3), symbol, tuple(rules)
    )


_memo: dict[int, GeneratorSet] = {}
_default_cache_dir: str | None = None


def set_default_cache_dir(path: str | None) -> None:
    """Install a process-wide cache directory used when none is passed."""
    global _default_cache_dir
    _default_cache_dir = path


def build_generators(n: int, variant: str = "leftmost") -> GeneratorSet:
    """Construct the generator set from scratch (no caches consulted)."""
    if n < 1:
        raise ValueError(f"level must be positive, got {n}")
    if n == 1:
        return GeneratorSet(1, (), (S,), (S * T,), None, ())
    return _extract_generators(farey_symbol(n, variant))


def generators(n: int, cache_dir: str | None = None) -> GeneratorSet:
    """Generator set for Gamma0(N), memoized in process and optionally on disk."""
    cache_dir = cache_dir or _default_cache_dir
    gens = _memo.get(n)
    if gens is None and cache_dir:
        gens = load_cached_generators(n, cache_dir)
    if gens is None:
        gens = build_generators(n)
    _memo[n] = gens
    if cache_dir and not os.path.exists(_cache_path(cache_dir, n)):
        save_cached_generators(gens, cache_dir)
    return gens


# ---------------------------------------------------------------------------
# disk cache (whole-file JSON per level, last-writer-wins)

def _cache_path(cache_dir: str, n: int) -> str:
    return os.path.join(cache_dir, f"gamma0-generators-{n}.json")


def generator_set_to_json(gens: GeneratorSet) -> dict:
    doc = {
        "level": gens.level,
        "free": [list(g.entries()) for g in gens.free],
        "elliptic2": [list(g.entries()) for g in gens.elliptic2],
        "elliptic3": [list(g.entries()) for g in gens.elliptic3],
        "farey": None,
    }
    if gens.symbol is not None:
        doc["farey"] = {
            "vertices": [list(v) for v in gens.symbol.vertices],
            "pairings": [list(label) for label in gens.symbol.pairings],
        }
    return doc


def generator_set_from_json(doc: dict) -> GeneratorSet:
    n = doc["level"]
    if doc.get("farey") is None:
        gens = build_generators(n)
    else:
        symbol = FareySymbol(
            n,
            tuple(tuple(v) for v in doc["farey"]["vertices"]),
            tuple(tuple(label) for label in doc["farey"]["pairings"]),
        )
        gens = _extract_generators(symbol)
    stored = [tuple(m) for m in doc["free"]]
    if [g.entries() for g in gens.free] != [tuple(m) for m in stored]:
        raise ValueError(f"cache for level {n} disagrees with its Farey symbol")
    return gens


def save_cached_generators(gens: GeneratorSet, cache_dir: str) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    payload = json.dumps(generator_set_to_json(gens), sort_keys=True)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    with os.fdopen(fd, "w") as handle:
        handle.write(payload)
    os.replace(tmp, _cache_path(cache_dir, gens.level))


def load_cached_generators(n: int, cache_dir: str) -> GeneratorSet | None:
    path = _cache_path(cache_dir, n)
    try:
        with open(path) as handle:
            doc = json.load(handle)
    except (OSError, json.JSONDecodeError):
        return None
    return generator_set_from_json(doc)


# ---------------------------------------------------------------------------
# words and decomposition

@dataclass(frozen=True)
class Word:
    """Normal form (sign * I) * product of generator powers.

    Letters are ((kind, index), exponent) with adjacent letters referencing
    distinct generators; exponents are nonzero integers for free generators,
    1 for order-four elliptic ones and 1 or 2 for order-six ones.
    """

    sign: int
    letters: tuple[tuple[tuple[str, int], int], ...]


def exponent_sum(word: Word, ref: tuple[str, int]) -> int:
    """Sum of the exponents of the letters referencing ``ref``."""
    return sum(exp for r, exp in word.letters if r == ref)


def reconstruct(word: Word, gens: GeneratorSet) -> UniModular:
    m = I if word.sign == 1 else NEG_I
    for ref, exp in word.letters:
        m = m * gens.matrix_for(ref) ** exp
    return m


_TORSION_ORDER = {"e2": 2, "e3": 3}


def _push_letter(stack: list, ref: tuple[str, int], exp: int) -> None:
    stack.append([ref, exp])
    while len(stack) >= 2 and stack[-1][0] == stack[-2][0]:
        _, merged = stack.pop()
        stack[-1][1] += merged
    while stack:
        kind = stack[-1][0][0]
        exp = stack[-1][1]
        if kind in _TORSION_ORDER:
            stack[-1][1] = exp = exp % _TORSION_ORDER[kind]
        if exp != 0:
            break
        stack.pop()
        if len(stack) >= 2 and stack[-1][0] == stack[-2][0]:
            _, merged = stack.pop()
            stack[-1][1] += merged
        else:
            break


def _normal_form(raw: list[tuple[tuple[str, int], int]]) -> list:
    stack: list = []
    for ref, exp in raw:
        if exp:
            _push_letter(stack, ref, exp)
    return stack


def _mul4(u: tuple[int, int, int, int], v: tuple[int, int, int, int]):
    a, b, c, d = u
    e, f, g, h = v
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _walk_to_translation(mat: UniModular, gens: GeneratorSet):
    """Cross paired sides until the image of oo is oo; returns raw letters.

    Each crossing multiplies on the left by the matrix carrying the tile that
    currently holds the cusp a/c back into the base polygon, and records the
    inverse letter.  A per-walk set of visited states guards against cycling,
    which would indicate a broken symbol.
    """
    symbol = gens.symbol
    floor = symbol.vertices[1:-1]
    fracs = [Fraction(p, q) for p, q in floor]
    rules = gens.side_rules
    cur = mat.entries()
    letters: list[tuple[tuple[str, int], int]] = []
    seen: set = set()

    def crossing(side: int, x: Fraction):
        kind, idx, orient = rules[side]
        if kind == "free":
            g = gens.free[idx]
            if orient > 0:
                return g.entries(), (("free", idx), -1)
            return g.inv().entries(), (("free", idx), 1)
        if kind == "e2":
            return gens.elliptic2[idx].entries(), (("e2", idx), -1)
        g = gens.elliptic3[idx]
        (p1, q1), (p2, q2) = symbol.vertices[side], symbol.vertices[side + 1]
        if x < Fraction(p1 + p2, q1 + q2):
            return g.entries(), (("e3", idx), 2)
        return g.inv().entries(), (("e3", idx), 1)

    while cur[2] != 0:
        a, b, c, d = cur
        m = a // c
        if m:
            a, b = a - m * c, b - m * d
            cur = (a, b, c, d)
            letters.append((("free", 0), m))
        x = Fraction(a, c)
        if not 0 <= x < 1:
            raise RuntimeError(f"translation landed outside [0, 1): {x}")
        pos = bisect_right(fracs, x) - 1
        if fracs[pos] == x:
            # cusp sits on an interior vertex: cross whichever neighbouring
            # side shrinks the denominator
            candidates = []
            for side in (pos, pos + 1):
                if 1 <= side <= len(rules) - 2:
                    u, letter = crossing(side, x)
                    nxt = _mul4(u, cur)
                    candidates.append((abs(nxt[2]), nxt, letter))
            candidates.sort(key=lambda item: item[0])
            if not candidates or candidates[0][0] >= x.denominator:
                raise RuntimeError(f"reduction stalled at vertex {x}")
            _, cur, letter = candidates[0]
            letters.append(letter)
        else:
            u, letter = crossing(pos + 1, x)
            cur = _mul4(u, cur)
            letters.append(letter)
        state = cur if cur[2] > 0 or (cur[2] == 0 and cur[0] > 0) else tuple(-t for t in cur)
        if state in seen:
            raise RuntimeError("side-crossing walk entered a cycle")
        seen.add(state)
    a, b = cur[0], cur[1]
    if a * b:
        letters.append((("free", 0), a * b))
    return letters


def _decompose_level_one(mat: UniModular, gens: GeneratorSet):
    """Words over {S, ST}: reduce by the Euclidean algorithm in T and S."""
    a, b, c, d = mat.entries()
    ts_letters: list[tuple[str, int]] = []
    while c != 0:
        m = a // c
        if m:
            a, b = a - m * c, b - m * d
            ts_letters.append(("T", m))
        a, b, c, d = c, d, -a, -b
        ts_letters.append(("S", 1))
    if a * b:
        ts_letters.append(("T", a * b))
    raw: list[tuple[tuple[str, int], int]] = []
    for name, exp in ts_letters:
        if name == "S":
            raw.append((("e2", 0), exp))
        elif exp > 0:
            # T = -S * (ST); the sign is recovered from the final product
            raw.extend(((("e2", 0), -1), (("e3", 0), 1)) * exp)
        else:
            raw.extend(((("e3", 0), -1), (("e2", 0), 1)) * (-exp))
    return raw


def decompose(gamma: Gamma0Element, gens: GeneratorSet) -> Word:
    """Normal form of gamma over the generator set; verified by rebuilding.

    The result is deterministic, satisfies the normal-form exponent
    constraints, and multiplies back to exactly the input matrix.
    """
    if gamma.level != gens.level:
        raise ValueError(
            f"element of level {gamma.level} against generators of level {gens.level}"
        )
    if gens.level == 1:
        raw = _decompose_level_one(gamma.matrix, gens)
    else:
        raw = _walk_to_translation(gamma.matrix, gens)
    stack = _normal_form(raw)
    letters = tuple((ref, exp) for ref, exp in stack)
    product = I
    for ref, exp in letters:
        product = product * gens.matrix_for(ref) ** exp
    if product == gamma.matrix:
        word = Word(1, letters)
    elif -product == gamma.matrix:
        word = Word(-1, letters)
    else:
        raise RuntimeError(f"decomposition of {gamma.matrix} failed to close up")
    return word
