"""Finitely presented groups: words, Tietze moves, Wirtinger presentations,
abelianization, coset enumeration, low-index subgroups and
Reidemeister-Schreier rewriting.

Words are tuples of (generator index, ±1) pairs.  Everything here is exact
and combinatorial; the coset-table routines are written for the small
indices that come up in practice (index ≤ 6 or so with a handful of
generators), not for industrial-size enumerations.
"""
from __future__ import annotations

import itertools
import re
import sys
from collections import deque
from dataclasses import dataclass


class NotEliminable(ValueError):
    pass


class InvalidDiagram(ValueError):
    pass


class Overflow(RuntimeError):
    def __init__(self, max_cosets):
        super().__init__(f"coset enumeration exceeded {max_cosets} cosets")
        self.max_cosets = max_cosets


class IncompleteTable(ValueError):
    pass


# --- words --------------------------------------------------------------------

class Word:
    """A word in generators 0..n-1; letters are (index, ±1)."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        out = []
        for g, e in letters:
            if e not in (1, -1):
                # expand powers
                s = 1 if e > 0 else -1
                out.extend([(g, s)] * abs(e))
            else:
                out.append((g, e))
        self.letters = tuple(out)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return Word(self.letters[k])
        return self.letters[k]

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.letters * n)

    def inverse(self):
        return Word((g, -e) for g, e in reversed(self.letters))

    def reduce(self):
        """Free reduction."""
        st = []
        for g, e in self.letters:
            if st and st[-1] == (g, -e):
                st.pop()
            else:
                st.append((g, e))
        return Word(st)

    def cyclic_reduce(self):
        w = list(self.reduce().letters)
        i, j = 0, len(w) - 1
        while i < j and w[i] == (w[j][0], -w[j][1]):
            i += 1
            j -= 1
        return Word(w[i:j + 1])

    def rotations(self):
        w = self.letters
        return [Word(w[k:] + w[:k]) for k in range(max(len(w), 1))]

    def exponent_sums(self, n):
        v = [0] * n
        for g, e in self.letters:
            v[g] += e
        return v

    def generators(self):
        return {g for g, _ in self.letters}

    def occurrences(self, g):
        return sum(1 for h, _ in self.letters if h == g)

    def substitute(self, images):
        """Replace generator g by images[g] (a Word) where present."""
        out = []
        for g, e in self.letters:
            if g in images:
                w = images[g] if e > 0 else images[g].inverse()
                out.extend(w.letters)
            else:
                out.append((g, e))
        return Word(out)

    def relabel(self, mapping):
        return Word((mapping[g], e) for g, e in self.letters)

    def format(self, names, sep=" "):
        parts = []
        k = 0
        w = self.letters
        while k < len(w):
            g, e = w[k]
            n = 1
            while k + n < len(w) and w[k + n] == (g, e):
                n += 1
            exp = n * e
            parts.append(names[g] if exp == 1 else f"{names[g]}^{exp}")
            k += n
        return sep.join(parts) if parts else "1"

    def __repr__(self):
        return f"Word({self.format([f'x{i}' for i in range(max(self.generators(), default=0) + 1)])})"


def same_relator(u: Word, v: Word) -> bool:
    """Equal up to cyclic rotation and inversion (after cyclic reduction)."""
    u, v = u.cyclic_reduce(), v.cyclic_reduce()
    if len(u) != len(v):
        return False
    if not len(u):
        return True
    rots = set(v.rotations()) | set(v.inverse().rotations())
    return u in rots


def parse_word(text: str, names) -> Word:
    """Parse letters with ^n exponents, parentheses and implicit concatenation.

    Generator names are matched longest first, so "g11" is g11 rather than
    g1 g1; whitespace separates letters.  "1" (or "") is the empty word.
    """
    index = {n: k for k, n in enumerate(names)}
    by_len = sorted(names, key=len, reverse=True)
    s = text.replace("⁻¹", "^-1")
    pos = 0

    def exponent():
        nonlocal pos
        if pos < len(s) and s[pos] == "^":
            m = re.match(r"\^(?:\((-?\d+)\)|(-?\d+))", s[pos:])
            if not m:
                raise ValueError(f"bad exponent at {s[pos:]!r}")
            pos += m.end()
            return int(m.group(1) or m.group(2))
        return 1

    def seq(depth):
        nonlocal pos
        out = []
        while pos < len(s):
            ch = s[pos]
            if ch.isspace():
                pos += 1
                continue
            if ch == ")":
                if depth == 0:
                    raise ValueError("unbalanced ')'")
                pos += 1
                return Word(out)
            if ch == "(":
                pos += 1
                inner = seq(depth + 1)
                out.extend((inner ** exponent()).letters)
                continue
            if ch == "1" and not any(s.startswith(n, pos) for n in by_len):
                pos += 1
                continue
            for n in by_len:
                if s.startswith(n, pos):
                    pos += len(n)
                    out.extend(Word([(index[n], 1)]).__pow__(exponent()).letters)
                    break
            else:
                raise ValueError(f"unknown generator at {s[pos:]!r}")
        if depth:
            raise ValueError("unbalanced '('")
        return Word(out)

    return seq(0)


# --- presentations --------------------------------------------------------------

class GroupPresentation:
    def __init__(self, gens, relators=(), name=""):
        self.gens = list(gens)
        if len(set(self.gens)) != len(self.gens):
            raise ValueError("duplicate generator names")
        rels = []
        for r in relators:
            if isinstance(r, str):
                r = parse_word(r, self.gens)
            if not len(r):
                raise ValueError("empty relator")
            if any(g >= len(self.gens) for g in r.generators()):
                raise ValueError("relator uses an undeclared generator")
            rels.append(r)
        self.relators = rels
        self.name = name

    @property
    def ngens(self):
        return len(self.gens)

    def word(self, text):
        return parse_word(text, self.gens)

    def gen(self, name):
        return self.gens.index(name)

    def copy(self, name=None):
        return GroupPresentation(self.gens, list(self.relators), self.name if name is None else name)

    def with_relators(self, extra, name=None):
        return GroupPresentation(self.gens, list(self.relators) + [self.word(r) if isinstance(r, str) else r
                                                                    for r in extra], name or self.name)

    def format(self):
        lines = ["gens: " + " ".join(self.gens)]
        lines += ["rel: " + r.format(self.gens) for r in self.relators]
        return "\n".join(lines) + "\n"

    def __str__(self):
        rels = ", ".join(r.format(self.gens, "") for r in self.relators)
        return f"< {', '.join(self.gens)} | {rels} >"

    def __repr__(self):
        return f"GroupPresentation({self.ngens} gens, {len(self.relators)} relators)"


def parse_presentation(text: str, name="") -> GroupPresentation:
    gens, rels = None, []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        key = key.strip().lower()
        if key == "gens":
            gens = rest.split()
        elif key == "rel":
            if gens is None:
                raise ValueError("'gens:' must come before relators")
            rels.append(parse_word(rest, gens))
        else:
            raise ValueError(f"unrecognised line {raw!r}")
    if gens is None:
        raise ValueError("missing 'gens:' line")
    return GroupPresentation(gens, rels, name)


def load_presentation(path) -> GroupPresentation:
    with open(path) as fh:
        return parse_presentation(fh.read(), name=str(path))


# --- Tietze moves ---------------------------------------------------------------

def _solve_for(rel: Word, g: int) -> Word:
    """Express g through the other letters of rel, where g occurs once."""
    w = rel.cyclic_reduce()
    if w.occurrences(g) != 1:
        raise NotEliminable("generator must occur exactly once in the defining relator")
    k = next(i for i, (h, _) in enumerate(w.letters) if h == g)
    e = w.letters[k][1]
    # rotate so that g is first: g^e * rest = 1  =>  g = rest^(-e)
    rest = Word(w.letters[k + 1:] + w.letters[:k])
    return rest.inverse() if e == 1 else rest


def tietze_eliminate(p: GroupPresentation, gen, defining=None) -> GroupPresentation:
    """Remove ``gen`` using a relator in which it occurs exactly once."""
    g = p.gen(gen) if isinstance(gen, str) else gen
    if defining is None:
        cands = [r for r in p.relators if r.cyclic_reduce().occurrences(g) == 1]
        if not cands:
            raise NotEliminable(f"no relator isolates {p.gens[g]}")
        defining = min(cands, key=len)
    elif isinstance(defining, str):
        defining = p.word(defining)
    image = _solve_for(defining, g)
    keep = [k for k in range(p.ngens) if k != g]
    relabel = {old: new for new, old in enumerate(keep)}
    dropped = False
    rels = []
    for r in p.relators:
        if not dropped and r == defining:
            dropped = True
            continue
        w = r.substitute({g: image}).cyclic_reduce()
        if len(w):
            rels.append(w.relabel(relabel))
    if not dropped:
        # defining relator was given explicitly but is not in the list: it still
        # has to hold, which it does trivially after substitution
        pass
    return GroupPresentation([p.gens[k] for k in keep], _dedupe_relators(rels), p.name)


def _dedupe_relators(rels):
    out = []
    for r in rels:
        if not any(same_relator(r, s) for s in out):
            out.append(r)
    return out


def simplify(p: GroupPresentation, max_len=None) -> GroupPresentation:
    """Greedy Tietze simplification: drop trivial relators and eliminate
    generators that occur once in some relator, shortest relator first."""
    q = GroupPresentation(p.gens, _dedupe_relators([r.cyclic_reduce() for r in p.relators
                                                    if len(r.cyclic_reduce())]), p.name)
    while True:
        best = None
        for r in q.relators:
            w = r.cyclic_reduce()
            for g in w.generators():
                if w.occurrences(g) == 1:
                    growth = (len(w) - 1) * sum(s.occurrences(g) for s in q.relators)
                    key = (len(w), growth)
                    if best is None or key < best[0]:
                        best = (key, g, r)
        if best is None:
            return q
        if max_len is not None and best[0][0] > max_len:
            return q
        q = tietze_eliminate(q, best[1], best[2])


# --- abelianization -----------------------------------------------------------------

@dataclass(frozen=True)
class AbelianInvariants:
    torsion: tuple      # invariant factors d1 | d2 | ..., all > 1
    free_rank: int

    def __str__(self):
        parts = []
        for d, grp in itertools.groupby(self.torsion):
            k = len(list(grp))
            parts.append(f"(Z/{d})^{k}" if k > 1 else f"Z/{d}")
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}" if self.free_rank > 1 else "Z")
        return " x ".join(parts) or "0"

    def as_list(self):
        return list(self.torsion) + [0] * self.free_rank


def smith_normal_form(m):
    """Diagonal of the Smith normal form of an integer matrix (list of rows)."""
    a = [list(r) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero absolute value in the remaining block
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    done = False
            if done:
                # divisibility of the remaining block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest entry of row/column t to the pivot
            best = (t, t)
            for i in range(t, rows):
                if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, cols):
                if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                    best = (t, j)
            i, j = best
            a[t], a[i] = a[i], a[t]
            for r in a:
                r[t], r[j] = r[j], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def relation_matrix(p: GroupPresentation):
    return [r.exponent_sums(p.ngens) for r in p.relators]


def abelianization(p: GroupPresentation) -> AbelianInvariants:
    m = relation_matrix(p)
    d = smith_normal_form(m) if m else []
    rank = len(d)
    return AbelianInvariants(tuple(x for x in d if x > 1), p.ngens - rank)


# --- the presentations that come with the orbifold -------------------------------------

ORBIFOLD_GENS = [f"g{k}" for k in range(12)] + ["A"]

# ridge -> relator
EDGE_RELATORS = {
    "e1": "(g0^-1)^3", "e2": "(g5^-1)^3", "e3": "(g4^-1)^3",
    "e4": "(g3^-1)^3", "e5": "(g2^-1)^3", "e6": "(g1^-1)^3",
    "e7": "(A g0^-1)^3", "e8": "(A g5^-1)^3", "e9": "(A g4^-1)^3",
    "e10": "(A g3^-1)^3", "e11": "(A g2)^3", "e12": "(A g1^-1)^3",
    "e13": "g1 g6 A g0^-1",
    "e14": "g0 g1^-1 g6^-1",
    "e15": "g0 g11 A g5^-1",
    "e16": "g5 g0^-1 g11^-1",
    "e17": "g5 g10 A g4^-1",
    "e18": "g4 g5^-1 g10^-1",
    "e19": "g4 g9 A g3^-1",
    "e20": "g3 g4^-1 g9^-1",
    "e21": "g3 g8 g2^-1",
    "e22": "g8 g3 A^-1 g2^-1",
    "e23": "g2 g7 g1^-1 A",
    "e24": "g7 g2 g1^-1",
}

# generator -> the ridge whose relator is used to eliminate it
ELIMINATION_CHAIN = (("g6", "e14"), ("g11", "e16"), ("g10", "e18"), ("g9", "e20"), ("g8", "e21"), ("g7", "e24"))


def orbifold_edge_presentation() -> GroupPresentation:
    """13 generators g0..g11, A and one relator per ridge class."""
    return GroupPresentation(ORBIFOLD_GENS, list(EDGE_RELATORS.values()), "pi1(O), ridge relators")


def eliminate_chain(p=None, check=True):
    """Eliminate g6..g11 one at a time; returns the list of intermediate presentations.

    With ``check`` the abelianization is compared before and after each move.
    """
    p = p or orbifold_edge_presentation()
    steps = [p]
    inv = abelianization(p)
    word_of = {name: parse_word(EDGE_RELATORS[edge], ORBIFOLD_GENS) for name, edge in ELIMINATION_CHAIN}
    for name, edge in ELIMINATION_CHAIN:
        cur = steps[-1]
        rel = word_of[name].relabel({ORBIFOLD_GENS.index(g): cur.gens.index(g)
                                     for g in ORBIFOLD_GENS if g in cur.gens})
        target = next(r for r in cur.relators if same_relator(r, rel))
        nxt = tietze_eliminate(cur, name, target)
        if check and abelianization(nxt) != inv:
            raise AssertionError(f"abelianization changed when eliminating {name}")
        steps.append(nxt)
    return steps


def dirichlet_presentation() -> GroupPresentation:
    """The printed seven-generator form after eliminating g6..g11."""
    gens = [f"g{k}" for k in range(6)] + ["A"]
    rels = [f"g{i}^3" for i in range(6)]
    rels += ["(A g0^-1)^3", "(A g1^-1)^3", "(A g3^-1)^3", "(A g4^-1)^3", "(A g5^-1)^3", "(A g2)^3"]
    rels += ["A g0^-1 g1 g0 g1^-1", "A g5^-1 g0 g5 g0^-1", "A g4^-1 g5 g4 g5^-1",
             "A g3^-1 g4 g3 g4^-1", "A g3^-1 g2^-1 g3 g2", "A g2 g1 g2^-1 g1^-1"]
    return GroupPresentation(gens, rels, "pi1(O), seven generators")


S_READINGS = tuple(f"s{k}" for k in range(1, 7))


def magma_presentation(reading="s1") -> GroupPresentation:
    """The six-generator s-form; ``reading`` fills in the unindexed "s⁻¹"."""
    if reading not in S_READINGS:
        raise ValueError(f"reading must be one of {S_READINGS}")
    gens = list(S_READINGS)
    rels = [f"s{i}^3" for i in range(1, 7)]
    rels += ["s2 s1^-1 s2^-1 s1 s6^-1 s1 s6 s1^-1",
             f"{reading}^-1 s2 s1 s3 s2^-1 s3^-1",
             "s5 s4 s5^-1 s3^-1 s4^-1 s3",
             "s6 s5^-1 s6^-1 s5 s1^-1 s2 s1 s2^-1",
             "s2 s1^-1 s2^-1 s1 s4^-1 s5 s4 s5^-1"]
    return GroupPresentation(gens, rels, f"pi1(O), s-form ({reading}^-1 reading)")


def u_presentation() -> GroupPresentation:
    gens = [f"u{k}" for k in range(1, 7)]
    rels = [f"u{i}^3" for i in range(1, 7)]
    rels += ["u3 u2^-1 u3^-1 u2", "u2 u1^-1 u2^-1 u1", "u1 u6^-1 u1^-1 u6",
             "u6 u5^-1 u6^-1 u5", "u5 u4^-1 u5^-1 u4",
             "u5 u4 u5^-1 u2^-1 u3^-1 u2 u4^-1 u2^-1 u3 u2"]
    return GroupPresentation(gens, rels, "pi1(O), u-form")


def link_presentation_simplified() -> GroupPresentation:
    """The first six-generator form of pi1(L)."""
    gens = [f"t{k}" for k in range(1, 7)]
    rels = [f"t{i}^3" for i in range(1, 7)]
    rels += ["t5^-1 t6 t5 t6^-1 t4 t3^-1 t4^-1 t3", "t5^-1 t6 t5 t6^-1 t2 t1^-1 t2^-1 t1",
             "t2^-1 t3 t2 t3^-1 t6 t5^-1 t6^-1 t5", "t5^-1 t6 t5 t6^-1 t5 t4^-1 t5^-1 t4",
             "t1^-1 t2 t1 t2^-1 t3 t2^-1 t3^-1 t2",
             "t2 t1 t2^-1 t5^-1 t6^-1 t5 t1^-1 t5^-1 t6 t5"]
    return GroupPresentation(gens, rels, "pi1(L), first t-form")


def link_presentation() -> GroupPresentation:
    gens = [f"t{k}" for k in range(1, 7)]
    rels = [f"t{i}^3" for i in range(1, 7)]
    rels += ["t6 t5^-1 t6^-1 t5", "t5 t4^-1 t5^-1 t4", "t4 t3^-1 t4^-1 t3",
             "t3 t2^-1 t3^-1 t2", "t2 t1^-1 t2^-1 t1",
             "t2 t1 t2^-1 t5^-1 t6^-1 t5 t1^-1 t5^-1 t6 t5"]
    return GroupPresentation(gens, rels, "pi1(L), t-form")


# the displayed map f: t_i -> u_sigma(i)
F_MAP = {"t1": "u4", "t2": "u5", "t3": "u6", "t4": "u1", "t5": "u2", "t6": "u3"}


def u_from_s():
    """u3 = s2 s3 s2^-1, other u_i = s_i: images of the u's in the s-form."""
    return {f"u{i}": (f"s{i}" if i != 3 else "s2 s3 s2^-1") for i in range(1, 7)}


def s_from_u():
    return {f"s{i}": (f"u{i}" if i != 3 else "u2^-1 u3 u2") for i in range(1, 7)}


def polygon_group(p=6, q=3) -> GroupPresentation:
    gens = [f"a{i}" for i in range(p)]
    rels = [f"a{i}^{q}" for i in range(p)]
    rels += [f"a{i} a{(i + 1) % p} a{i}^-1 a{(i + 1) % p}^-1" for i in range(p)]
    return GroupPresentation(gens, rels, f"G_{p},{q}")


def polygon_supergroup(p=6, q=3) -> GroupPresentation:
    """<a0, r | a0^q, r^p, [a0, r a0 r^-1]>, containing G_{p,q} with index p."""
    return GroupPresentation(["a0", "r"], [f"a0^{q}", f"r^{p}", "a0 r a0 r^-1 a0^-1 r a0^-1 r^-1"],
                             f"H_{p},{q}")


def whitehead_filling() -> GroupPresentation:
    return GroupPresentation(["a", "b"], ["a^5 b a b^-1 a^-1 b^-1 a b", "b^3"], "pi1(Q)")


SUBGROUP_Q = ("b^-1", "a b^-1 a^-1", "a^-1 b^-1 a", "a^2 b^-1 a^-2", "a^-2 b^-1 a^2", "a^3 b^-1 a^-3")


def add_torsion(p: GroupPresentation, order: int, subset=None) -> GroupPresentation:
    if order < 2:
        raise ValueError("torsion order must be at least 2")
    names = p.gens if subset is None else list(subset)
    extra = [Word([(p.gen(n), order)]) for n in names]
    return GroupPresentation(p.gens, list(p.relators) + extra, p.name + f" + order-{order} torsion")


# --- generator maps ------------------------------------------------------------------

TRIVIAL = "Trivial"
MATCHES = "MatchesDstRelator"
UNRESOLVED = "Unresolved"


@dataclass
class RelatorVerdict:
    relator: str
    image: str
    verdict: str
    detail: str = ""


@dataclass
class GeneratorMapReport:
    verdicts: list
    source: str = ""
    target: str = ""

    @property
    def homomorphism(self):
        return all(v.verdict != UNRESOLVED for v in self.verdicts)

    def counts(self):
        out = {TRIVIAL: 0, MATCHES: 0, UNRESOLVED: 0}
        for v in self.verdicts:
            out[v.verdict] += 1
        return out


def _relator_pieces(dst: GroupPresentation):
    pieces = set()
    for r in dst.relators:
        w = r.cyclic_reduce()
        for v in (w, w.inverse()):
            for rot in v.rotations():
                pieces.add(rot.letters)
    return sorted(pieces, key=len, reverse=True)


def _delete_relators(w: Word, pieces, depth):
    """Try to reach the empty word by deleting cyclic subwords equal to relator rotations."""
    start = w.cyclic_reduce()
    seen = {start.letters}
    frontier = [(start, [])]
    for _ in range(depth):
        nxt = []
        for cur, trail in frontier:
            letters = cur.letters
            n = len(letters)
            doubled = letters + letters
            for piece in pieces:
                m = len(piece)
                if m > n:
                    continue
                for k in range(n):
                    if doubled[k:k + m] == piece:
                        rest = doubled[k + m:k + n]
                        new = Word(rest).cyclic_reduce()
                        if not len(new):
                            return trail + [Word(piece)]
                        if new.letters not in seen:
                            seen.add(new.letters)
                            nxt.append((new, trail + [Word(piece)]))
        frontier = nxt
        if not frontier:
            break
    return None


def check_generator_map(src: GroupPresentation, dst: GroupPresentation, images, depth=3) -> GeneratorMapReport:
    """Substitute ``images`` (src generator name -> dst word) into every src relator."""
    img = {}
    for name in src.gens:
        if name not in images:
            raise ValueError(f"no image for {name}")
        w = images[name]
        img[src.gen(name)] = dst.word(w) if isinstance(w, str) else w
    pieces = _relator_pieces(dst)
    out = []
    for r in src.relators:
        w = r.substitute(img).cyclic_reduce()
        text = w.format(dst.gens, "")
        if not len(w):
            out.append(RelatorVerdict(r.format(src.gens, ""), text, TRIVIAL))
            continue
        hit = next((s for s in dst.relators if same_relator(w, s)), None)
        if hit is not None:
            out.append(RelatorVerdict(r.format(src.gens, ""), text, MATCHES, "equals " + hit.format(dst.gens, "")))
            continue
        trail = _delete_relators(w, pieces, depth)
        if trail is not None:
            detail = "product of " + ", ".join(t.format(dst.gens, "") for t in trail)
            out.append(RelatorVerdict(r.format(src.gens, ""), text, MATCHES, detail))
        else:
            out.append(RelatorVerdict(r.format(src.gens, ""), text, UNRESOLVED))
    return GeneratorMapReport(out, src.name, dst.name)


# --- link diagrams -----------------------------------------------------------------------

@dataclass(frozen=True)
class Crossing:
    over: str
    under_in: str
    under_out: str
    sign: int


@dataclass
class LinkDiagram:
    arcs: list
    crossings: list
    name: str = ""

    def validate(self):
        """Raise InvalidDiagram unless every arc starts and ends at an under-crossing."""
        arcs = set(self.arcs)
        if len(arcs) != len(self.arcs):
            raise InvalidDiagram("duplicate arc labels")
        if not self.crossings:
            if len(self.arcs) < 1:
                raise InvalidDiagram("a diagram needs at least one arc")
            return self
        ins = {a: 0 for a in arcs}
        outs = {a: 0 for a in arcs}
        for c in self.crossings:
            for a in (c.over, c.under_in, c.under_out):
                if a not in arcs:
                    raise InvalidDiagram(f"unknown arc {a!r}")
            if c.sign not in (1, -1):
                raise InvalidDiagram("crossing sign must be ±1")
            ins[c.under_in] += 1
            outs[c.under_out] += 1
        for a in arcs:
            if ins[a] != 1 or outs[a] != 1:
                raise InvalidDiagram(f"arc {a} must end at one under-crossing and start at another "
                                     f"(ends {ins[a]}, starts {outs[a]})")
        return self

    def components(self):
        """Arcs grouped into link components, following the under-crossings."""
        succ = {c.under_in: c.under_out for c in self.crossings}
        left = list(self.arcs)
        comps = []
        while left:
            a = left[0]
            comp = [a]
            b = succ.get(a, a)
            while b != a:
                comp.append(b)
                b = succ[b]
            comps.append(comp)
            left = [x for x in left if x not in comp]
        return comps


def parse_link_diagram(text: str, name="") -> LinkDiagram:
    """One crossing per line: ``x <over> <under_in> <under_out> <sign>``.

    An optional ``arcs: a b c`` line declares arcs (needed for crossing-free
    diagrams); otherwise the arcs are collected from the crossings.
    """
    arcs, crossings = None, []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("arcs:"):
            arcs = line[5:].split()
            continue
        parts = line.split()
        if parts[0] != "x" or len(parts) != 5:
            raise InvalidDiagram(f"bad crossing line {raw!r}")
        try:
            sign = int(parts[4])
        except ValueError:
            raise InvalidDiagram(f"bad sign in {raw!r}")
        crossings.append(Crossing(parts[1], parts[2], parts[3], sign))
    if arcs is None:
        arcs = []
        for c in crossings:
            for a in (c.over, c.under_in, c.under_out):
                if a not in arcs:
                    arcs.append(a)
    return LinkDiagram(arcs, crossings, name).validate()


def format_link_diagram(d: LinkDiagram) -> str:
    lines = ["arcs: " + " ".join(d.arcs)]
    lines += [f"x {c.over} {c.under_in} {c.under_out} {c.sign:+d}" for c in d.crossings]
    return "\n".join(lines) + "\n"


def wirtinger(d: LinkDiagram) -> GroupPresentation:
    """Positive crossing: out = o in o⁻¹; negative: out = o⁻¹ in o.

    Relators are written as out · o · in⁻¹ · o⁻¹ (and with o inverted for
    negative crossings).
    """
    d.validate()
    gens = list(d.arcs)
    rels = []
    for c in d.crossings:
        o = 1 if c.sign > 0 else -1
        w = Word([(gens.index(c.under_out), 1), (gens.index(c.over), o),
                  (gens.index(c.under_in), -1), (gens.index(c.over), -o)])
        rels.append(w)
    return GroupPresentation(gens, rels, f"Wirtinger({d.name})")


CHAIN_ARCS = [f"y{i}" for i in range(7)] + [f"z{i}" for i in range(7)]

# the relators as printed, crossing 1..14
CHAIN_TABLE = (
    "z6 y0 y6^-1 y0^-1", "z6 z0 z6^-1 y0^-1",
    "z0 y1 y0^-1 y1^-1", "z0 z1 z0^-1 y1^-1",
    "z1 y2 y1^-1 y2^-1", "z1 z2 z1^-1 y2^-1",
    "z2 y3 y2^-1 y3^-1", "z2 z3 z2^-1 y3^-1",
    "z3 y4 y3^-1 y4^-1", "z3 z4 z3^-1 y4^-1",
    "z4 y5 y4^-1 y5^-1", "z4 z5 z4^-1 y5^-1",
    "z5 z6 z6^-1 y6^-1", "y5 z6 y5^-1 z5^-1",
)

CROSSING_13_VARIANTS = ("z6", "z5")


def chain_link(variant="z6") -> LinkDiagram:
    """Crossing data for C(6,-2), read off the printed relator table.

    Crossings 1-12 and 14 are forced by their relators.  The printed
    relator of crossing 13 is not of crossing type; the arc bookkeeping forces
    its under-arcs to be y5 -> y6, and ``variant`` chooses the over-arc.
    """
    if variant not in CROSSING_13_VARIANTS:
        raise ValueError(f"variant must be one of {CROSSING_13_VARIANTS}")
    cr = [Crossing("y0", "y6", "z6", 1), Crossing("z6", "z0", "y0", 1)]
    for i in range(1, 6):
        cr.append(Crossing(f"y{i}", f"y{i - 1}", f"z{i - 1}", 1))
        cr.append(Crossing(f"z{i - 1}", f"z{i}", f"y{i}", 1))
    cr.append(Crossing(variant, "y5", "y6", 1))
    cr.append(Crossing("y5", "z6", "z5", 1))
    return LinkDiagram(list(CHAIN_ARCS), cr, f"C(6,-2), crossing 13 over {variant}").validate()


def chain_table_comparison(variant="z6"):
    """(crossing number, printed, derived, matches) per crossing."""
    p = wirtinger(chain_link(variant))
    out = []
    for k, (text, rel) in enumerate(zip(CHAIN_TABLE, p.relators), start=1):
        printed = parse_word(text, p.gens)
        out.append((k, text, rel.format(p.gens, " "), same_relator(printed, rel)))
    return out


def chain_orbifold_presentation(variant="z6") -> GroupPresentation:
    return add_torsion(wirtinger(chain_link(variant)), 3)


# --- coset tables ----------------------------------------------------------------------------

def _columns(p: GroupPresentation):
    return 2 * p.ngens


def _col(letter):
    g, e = letter
    return 2 * g + (0 if e > 0 else 1)


def _inv(c):
    return c ^ 1


class CosetTable:
    """rows[c][col]: col 2g is the generator g, col 2g+1 its inverse."""

    def __init__(self, rows, gens):
        self.rows = [list(r) for r in rows]
        self.gens = list(gens)

    @property
    def index(self):
        return len(self.rows)

    def is_complete(self):
        return all(x is not None and x >= 0 for r in self.rows for x in r)

    def permutation(self, g):
        return [r[2 * g] for r in self.rows]

    def trace(self, c, word: Word):
        for l in word:
            c = self.rows[c][_col(l)]
            if c is None or c < 0:
                return None
        return c

    def satisfies(self, relators):
        return all(self.trace(c, r) == c for r in relators for c in range(self.index))

    def stabilizes(self, words):
        return all(self.trace(0, w) == 0 for w in words)

    def standardize(self, base=0):
        """Relabel cosets in order of first appearance, starting at ``base``."""
        order = {base: 0}
        queue = [base]
        k = 0
        while k < len(queue):
            c = queue[k]
            k += 1
            for x in self.rows[c]:
                if x not in order:
                    order[x] = len(order)
                    queue.append(x)
        if len(order) != self.index:
            raise IncompleteTable("table is not transitive")
        rows = [None] * self.index
        for old, new in order.items():
            rows[new] = [order[x] for x in self.rows[old]]
        return CosetTable(rows, self.gens)

    def key(self):
        return tuple(x for r in self.rows for x in r)

    def canonical(self):
        """Lexicographically least standardization over all base points."""
        return min((self.standardize(b) for b in range(self.index)), key=CosetTable.key)

    def __eq__(self, other):
        return isinstance(other, CosetTable) and self.rows == other.rows

    def __repr__(self):
        return f"CosetTable(index={self.index})"

    def format(self):
        head = "coset " + " ".join(f"{g:>5} {g + '^-1':>6}" for g in self.gens)
        lines = [head]
        for c, r in enumerate(self.rows):
            lines.append(f"{c:5d} " + " ".join(f"{x:>5}" for x in r))
        return "\n".join(lines)


def todd_coxeter(p: GroupPresentation, subgroup_gens=(), max_cosets=100000) -> CosetTable:
    """HLT coset enumeration with coincidence processing."""
    ncol = _columns(p)
    rels = [[_col(l) for l in r.cyclic_reduce()] for r in p.relators]
    sub = [[_col(l) for l in (parse_word(w, p.gens) if isinstance(w, str) else w).reduce()]
           for w in subgroup_gens]
    table = [[-1] * ncol]
    parent = [0]       # union-find over coset numbers; parent[c] == c when live
    live_count = 1

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    def define(c, x):
        nonlocal live_count
        if live_count >= max_cosets:
            raise Overflow(max_cosets)
        d = len(table)
        table.append([-1] * ncol)
        parent.append(d)
        live_count += 1
        table[c][x] = d
        table[d][_inv(x)] = c
        return d

    def merge(k, l, queue):
        nonlocal live_count
        k, l = find(k), find(l)
        if k == l:
            return
        if k > l:
            k, l = l, k
        parent[l] = k
        live_count -= 1
        queue.append(l)

    def coincidence(a, b):
        queue = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(ncol):
                f = table[e][x]
                if f < 0:
                    continue
                if table[f][_inv(x)] == e:
                    table[f][_inv(x)] = -1
                e1, f1 = find(e), find(f)
                if table[e1][x] >= 0:
                    merge(f1, table[e1][x], queue)
                elif table[f1][_inv(x)] >= 0:
                    merge(e1, table[f1][_inv(x)], queue)
                else:
                    table[e1][x] = f1
                    table[f1][_inv(x)] = e1

    def scan_and_fill(c, word):
        if not word:
            return
        while True:
            f, i = c, 0
            n = len(word)
            while i < n and table[f][word[i]] >= 0:
                f = find(table[f][word[i]])
                i += 1
            if i == n:
                if f != c:
                    coincidence(f, c)
                return
            b, j = c, n - 1
            while j >= i and table[b][_inv(word[j])] >= 0:
                b = find(table[b][_inv(word[j])])
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][_inv(word[i])] = f
                return
            define(f, word[i])

    for w in sub:
        scan_and_fill(0, w)
    c = 0
    while c < len(table):
        if find(c) == c:
            for r in rels:
                scan_and_fill(c, r)
                if find(c) != c:
                    break
            if find(c) == c:
                for x in range(ncol):
                    if table[c][x] < 0:
                        define(c, x)
        c += 1
    live = [c for c in range(len(table)) if find(c) == c]
    renum = {c: k for k, c in enumerate(live)}
    rows = [[renum[find(table[c][x])] for x in range(ncol)] for c in live]
    return CosetTable(rows, p.gens).standardize(0)


def subgroup_index(p: GroupPresentation, subgroup_gens=(), max_cosets=100000) -> int:
    return todd_coxeter(p, subgroup_gens, max_cosets).index


# --- low-index subgroups ------------------------------------------------------------------------

def _deduce(table, rels, watch):
    """Scan relators from every coset, filling single gaps; False on a contradiction."""
    n = len(table)
    changed = True
    while changed:
        changed = False
        for c in range(n):
            if table[c] is None:
                continue
            for r in rels:
                f, i, m = c, 0, len(r)
                while i < m:
                    nx = table[f][r[i]]
                    if nx < 0:
                        break
                    f = nx
                    i += 1
                if i == m:
                    if f != c:
                        return False
                    continue
                b, j = c, m - 1
                while j >= i:
                    nx = table[b][_inv(r[j])]
                    if nx < 0:
                        break
                    b = nx
                    j -= 1
                if j < i:
                    if f != b:
                        return False
                    continue
                if j == i:
                    x = r[i]
                    if table[b][_inv(x)] >= 0 and table[b][_inv(x)] != f:
                        return False
                    table[f][x] = b
                    table[b][_inv(x)] = f
                    watch.append((f, x))
                    watch.append((b, _inv(x)))
                    changed = True
    return True


def _subgroup_tables(p: GroupPresentation, n: int, exact=True, progress=None):
    ncol = _columns(p)
    rels = [[_col(l) for l in r.cyclic_reduce()] for r in p.relators if len(r.cyclic_reduce())]
    out = []
    table = [[-1] * ncol for _ in range(n)]
    count = [1]

    def first_gap():
        for c in range(count[0]):
            for x in range(ncol):
                if table[c][x] < 0:
                    return c, x
        return None

    def search():
        gap = first_gap()
        if gap is None:
            if not exact or count[0] == n:
                out.append(CosetTable([table[c][:] for c in range(count[0])], p.gens))
                if progress and len(out) % 100 == 0:
                    progress(len(out))
            return
        c, x = gap
        targets = list(range(count[0]))
        if count[0] < n:
            targets.append(count[0])
        for d in targets:
            if table[d][_inv(x)] >= 0:
                continue
            watch = [(c, x), (d, _inv(x))]
            saved_count = count[0]
            if d == count[0]:
                count[0] += 1
            table[c][x] = d
            table[d][_inv(x)] = c
            view = table[:count[0]]
            if _deduce(view, rels, watch):
                search()
            for (a, y) in watch:
                table[a][y] = -1
            count[0] = saved_count

    search()
    return out


def subgroups_of_index(p: GroupPresentation, n: int):
    """Every subgroup of index exactly n, as standardized coset tables."""
    return _subgroup_tables(p, n)


def low_index_subgroups(p: GroupPresentation, n: int, max_count=None, progress=None):
    """Conjugacy classes of subgroups of index exactly n (one table per class)."""
    if n < 1:
        raise ValueError("index must be at least 1")
    reps = []
    for t in _subgroup_tables(p, n, progress=progress):
        if t.canonical() == t:
            reps.append(t)
            if max_count is not None and len(reps) >= max_count:
                break
    return reps


def low_index_counts(p: GroupPresentation, up_to: int):
    return {k: len(low_index_subgroups(p, k)) for k in range(1, up_to + 1)}


# the brute-force oracle: transitive permutation representations

def _perm_mul(a, b):
    """a then b (right action)."""
    return tuple(b[x] for x in a)


def _perm_inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _word_perm(word, perms, invs, n):
    cur = tuple(range(n))
    for g, e in word:
        cur = _perm_mul(cur, perms[g] if e > 0 else invs[g])
    return cur


def _transitive(perms, n):
    seen = {0}
    st = [0]
    while st:
        x = st.pop()
        for pm in perms:
            for y in (pm[x], pm.index(x)):
                if y not in seen:
                    seen.add(y)
                    st.append(y)
    return len(seen) == n


def brute_force_class_count(p: GroupPresentation, n: int) -> int:
    """Count conjugacy classes of index-n subgroups by enumerating S_n-tuples."""
    ident = tuple(range(n))
    all_perms = list(itertools.permutations(range(n)))
    # prune each generator by the single-generator relators
    cands = []
    for g in range(p.ngens):
        own = [r for r in p.relators if r.generators() == {g}]
        ok = []
        for pm in all_perms:
            inv = _perm_inv(pm)
            if all(_word_perm(r, {g: pm}, {g: inv}, n) == ident for r in own):
                ok.append(pm)
        cands.append(ok)
    classes = set()
    for perms in itertools.product(*cands):
        invs = [_perm_inv(x) for x in perms]
        if not all(_word_perm(r, perms, invs, n) == ident for r in p.relators):
            continue
        if not _transitive(perms, n):
            continue
        rows = [[0] * (2 * p.ngens) for _ in range(n)]
        for c in range(n):
            for g in range(p.ngens):
                rows[c][2 * g] = perms[g][c]
                rows[c][2 * g + 1] = invs[g][c]
        classes.add(CosetTable(rows, p.gens).canonical().key())
    return len(classes)


# --- Reidemeister-Schreier ------------------------------------------------------------------------

def reidemeister_schreier(p: GroupPresentation, table: CosetTable, simplify_result=False) -> GroupPresentation:
    """Presentation of the stabilizer of coset 0 on Schreier generators.

    A spanning tree of the coset graph (breadth first from coset 0) gives
    the transversal; each non-tree edge (c, g) is a generator named
    ``{g}_{c}``, and each relator traced from each coset is rewritten.
    """
    if not table.is_complete():
        raise IncompleteTable("Reidemeister-Schreier needs a complete coset table")
    n = table.index
    tree = set()
    seen = {0}
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for g in range(p.ngens):
            for e in (1, -1):
                d = table.rows[c][_col((g, e))]
                if d not in seen:
                    seen.add(d)
                    queue.append(d)
                    # store as a forward edge (coset, generator)
                    tree.add((c, g) if e > 0 else (d, g))
    if len(seen) != n:
        raise IncompleteTable("coset table is not transitive")
    names = []
    index = {}
    for c in range(n):
        for g in range(p.ngens):
            if (c, g) not in tree:
                index[(c, g)] = len(names)
                names.append(f"{p.gens[g]}_{c}")
    rels = []
    for c in range(n):
        for r in p.relators:
            out = []
            cur = c
            for g, e in r:
                if e > 0:
                    edge = (cur, g)
                    nxt = table.rows[cur][2 * g]
                    if edge in index:
                        out.append((index[edge], 1))
                else:
                    nxt = table.rows[cur][2 * g + 1]
                    edge = (nxt, g)
                    if edge in index:
                        out.append((index[edge], -1))
                cur = nxt
            w = Word(out).cyclic_reduce()
            if len(w):
                rels.append(w)
    q = GroupPresentation(names, _dedupe_relators(rels), f"RS({p.name})")
    return simplify(q) if simplify_result else q


# --- evidence bundles ---------------------------------------------------------------------------------

def s_reading_report():
    """Abelianization of each reading of the unindexed s next to that of the ridge presentation."""
    target = abelianization(orbifold_edge_presentation())
    return [(r, abelianization(magma_presentation(r)), abelianization(magma_presentation(r)) == target)
            for r in S_READINGS]


def q_subgroup_table(max_cosets=100000):
    return todd_coxeter(whitehead_filling(), SUBGROUP_Q, max_cosets)


@dataclass
class Evidence:
    """Isomorphism invariants of two presentations side by side."""

    left: str
    right: str
    abelian: tuple
    counts: tuple

    @property
    def consistent(self):
        return self.abelian[0] == self.abelian[1] and self.counts[0] == self.counts[1]

    @property
    def verdict(self):
        if self.consistent:
            return "consistent with isomorphism"
        if self.abelian[0] != self.abelian[1]:
            return f"not isomorphic: abelianizations {self.abelian[0]} and {self.abelian[1]}"
        k = next(k for k in self.counts[0] if self.counts[0][k] != self.counts[1].get(k))
        return f"not isomorphic: {self.counts[0][k]} vs {self.counts[1][k]} classes of index-{k} subgroups"


def compare_groups(p: GroupPresentation, q: GroupPresentation, up_to=4, counts=None) -> Evidence:
    """Abelianizations plus low-index class counts up to ``up_to``.

    ``counts`` may supply already known counts for ``p`` (for instance a
    frozen fixture) so that they are not recomputed.
    """
    cp = counts if counts is not None else low_index_counts(p, up_to)
    cq = low_index_counts(q, up_to)
    return Evidence(p.name, q.name, (abelianization(p), abelianization(q)), (cp, cq))


def log(msg):
    print(msg, file=sys.stderr)
