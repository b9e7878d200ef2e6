"""Context-free machinery: grammars, Dyck languages, recognizers, and the
homomorphic representation h(D ∩ Reg) of the encoded-graph language.

Grammars are plain production lists over hashable symbols; a symbol is a
nonterminal iff it appears on a left-hand side.  Recognizers follow a small
DFA protocol (``start``, ``step``, ``is_final``) so they can be intersected
by product construction and multiplied into grammars.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Iterable, Optional, Sequence


@dataclass(frozen=True)
class Grammar:
    start: Hashable
    productions: tuple  # of (lhs, rhs-tuple)

    def __post_init__(self):
        lhs_set = {lhs for lhs, _ in self.productions}
        if self.start not in lhs_set:
            raise ValueError("start symbol has no productions")

    @property
    def nonterminals(self) -> frozenset:
        return frozenset(lhs for lhs, _ in self.productions)

    @property
    def terminals(self) -> frozenset:
        nts = self.nonterminals
        return frozenset(sym for _, rhs in self.productions
                         for sym in rhs if sym not in nts)

    def by_lhs(self) -> dict:
        table: dict = {}
        for lhs, rhs in self.productions:
            table.setdefault(lhs, []).append(tuple(rhs))
        return table


@dataclass(frozen=True)
class DyckSpec:
    pairs: tuple  # of (opener, closer)

    def __post_init__(self):
        openers = [o for o, _ in self.pairs]
        closers = [c for _, c in self.pairs]
        symbols = openers + closers
        if len(set(symbols)) != len(symbols):
            raise ValueError("bracket symbol used twice in Dyck specification")

    def closer_of(self) -> dict:
        return dict(self.pairs)

    def symbols(self) -> frozenset:
        return frozenset(s for pair in self.pairs for s in pair)


def dyck_check(spec: DyckSpec, s: Sequence) -> bool:
    closer_of = spec.closer_of()
    closers = {c for _, c in spec.pairs}
    stack: list = []
    for sym in s:
        if sym in closer_of:
            stack.append(closer_of[sym])
        elif sym in closers:
            if not stack or stack.pop() != sym:
                return False
        else:
            return False
    return not stack


@dataclass(frozen=True)
class Homomorphism:
    mapping: tuple  # of (extended symbol, image symbol or None for erasure)

    def table(self) -> dict:
        return dict(self.mapping)

    def apply(self, s: Sequence) -> tuple:
        table = self.table()
        out = []
        for sym in s:
            img = table[sym]
            if img is not None:
                out.append(img)
        return tuple(out)


class Dfa:
    """Deterministic recognizer protocol.  Subclasses define transitions;
    ``step`` returns None for the dead state."""

    start: Hashable = None

    def step(self, q, sym):
        raise NotImplementedError

    def is_final(self, q) -> bool:
        raise NotImplementedError

    def accepts(self, s: Sequence) -> bool:
        q = self.start
        for sym in s:
            q = self.step(q, sym)
            if q is None:
                return False
        return self.is_final(q)


class ProductDfa(Dfa):
    def __init__(self, components: Sequence[Dfa]):
        self.components = tuple(components)
        self.start = tuple(c.start for c in self.components)

    def step(self, q, sym):
        out = []
        for comp, qc in zip(self.components, q):
            qn = comp.step(qc, sym)
            if qn is None:
                return None
            out.append(qn)
        return tuple(out)

    def is_final(self, q) -> bool:
        return all(c.is_final(qc) for c, qc in zip(self.components, q))


def intersect_representations(r1: Dfa, r2: Dfa) -> Dfa:
    """Product construction; with r1, r2 sublanguages of a master recognizer
    the representation h(D ∩ (r1 ∩ r2)) denotes the intersection language."""
    return ProductDfa([r1, r2])


# ---------------------------------------------------------------------------
# The explicit grammars for encoded noncrossing graphs.

def grammar_nc_graph() -> Grammar:
    """S -> [S']S | {}S | eps,  S' -> [S']T | {}S,  T -> [S']S | {}S."""
    return Grammar("S", (
        ("S", ("[", "S'", "]", "S")),
        ("S", ("{", "}", "S")),
        ("S", ()),
        ("S'", ("[", "S'", "]", "T")),
        ("S'", ("{", "}", "S")),
        ("T", ("[", "S'", "]", "S")),
        ("T", ("{", "}", "S")),
    ))


def grammar_dyck2() -> Grammar:
    """The two-pair Dyck language D_2: S -> [S]S | {S}S | eps."""
    return Grammar("S", (
        ("S", ("[", "S", "]", "S")),
        ("S", ("{", "S", "}", "S")),
        ("S", ()),
    ))


def derivation_count(g: Grammar, s: Sequence) -> int:
    """Number of distinct derivation trees (= leftmost derivations) of s.

    Exact big-integer arithmetic; the grammars used here are terminal-leading,
    so the memoized recursion is well-founded.
    """
    s = tuple(s)
    table = g.by_lhs()

    @lru_cache(maxsize=None)
    def count_nt(x, i, j) -> int:
        return sum(count_seq(rhs, i, j) for rhs in table[x])

    @lru_cache(maxsize=None)
    def count_seq(syms, i, j) -> int:
        if not syms:
            return 1 if i == j else 0
        head, rest = syms[0], syms[1:]
        if head not in table:
            if i < j and s[i] == head:
                return count_seq(rest, i + 1, j)
            return 0
        total = 0
        for k in range(i, j + 1):
            c = count_nt(head, i, k)
            if c:
                total += c * count_seq(rest, k, j)
        return total

    return count_nt(g.start, 0, len(s))


def membership(g: Grammar, s: Sequence) -> bool:
    return derivation_count(g, s) > 0


def string_counts_by_length(g: Grammar, max_len: int) -> list:
    """Number of derivations per yield length, 0..max_len (equals the number
    of strings when the grammar is unambiguous)."""
    table = g.by_lhs()
    counts = {x: [0] * (max_len + 1) for x in table}
    changed = True
    while changed:
        changed = False
        for x, rhss in table.items():
            for length in range(max_len + 1):
                total = 0
                for rhs in rhss:
                    total += _seq_count(rhs, length, table, counts)
                if total != counts[x][length]:
                    counts[x][length] = total
                    changed = True
    return counts[g.start]


def _seq_count(rhs, length, table, counts) -> int:
    # distribute `length` across the symbols of `rhs`
    if not rhs:
        return 1 if length == 0 else 0
    head, rest = rhs[0], rhs[1:]
    if head not in table:
        if length == 0:
            return 0
        return _seq_count(rest, length - 1, table, counts)
    total = 0
    for l0 in range(length + 1):
        c = counts[head][l0]
        if c:
            total += c * _seq_count(rest, length - l0, table, counts)
    return total


# ---------------------------------------------------------------------------
# Chomsky-Schützenberger representation for the encoded-graph language:
# L = h(D_3 ∩ Reg).  The primed pair marks non-loose chain starts (a pair
# whose opener sits at string start or right after another opener).

GRAPH_TOKENS = ("[", "['", "]", "]'", "{", "}")


class GraphReg(Dfa):
    """Local discipline for primed graph bracketings.

    Rules: ``{`` pairs immediately with ``}``; the opener at string start or
    after another opener is primed, after ``}`` or a closer it is plain; no
    empty bracket pair; no closer directly after a primed closer (that shape
    would duplicate an edge).
    """

    START, BRACE, SEP, OPENER, CLOSER, CLOSER_P = range(6)
    start = START

    def step(self, q, sym):
        if q is None:
            return None
        if sym == "{":
            return self.BRACE if q != self.BRACE else None
        if sym == "}":
            return self.SEP if q == self.BRACE else None
        if q == self.BRACE:
            return None
        if sym in ("[", "['"):
            if q in (self.START, self.OPENER):
                return self.OPENER if sym == "['" else None
            return self.OPENER if sym == "[" else None
        if sym in ("]", "]'"):
            if q in (self.START, self.OPENER, self.CLOSER_P):
                return None
            return self.CLOSER_P if sym == "]'" else self.CLOSER
        return None

    def is_final(self, q) -> bool:
        return q in (self.START, self.SEP, self.CLOSER, self.CLOSER_P)


def cs_components_graph() -> tuple:
    """Dyck spec D_3, recognizer Reg and homomorphism h with
    h(D_3 ∩ Reg) equal to the encoded loop-free noncrossing graphs."""
    d3 = DyckSpec((("[", "]"), ("['", "]'"), ("{", "}")))
    h = Homomorphism((("[", "["), ("['", "["), ("]", "]"), ("]'", "]"),
                      ("{", "{"), ("}", "}")))
    return d3, GraphReg(), h


def tokenize_primed(text: str) -> tuple:
    """Split a primed graph bracketing into tokens, e.g. "['['{}]'" ."""
    out = []
    i = 0
    while i < len(text):
        c = text[i]
        if c not in "[]{}":
            raise ValueError(f"unexpected character {c!r}")
        if i + 1 < len(text) and text[i + 1] == "'" and c in "[]":
            out.append(c + "'")
            i += 2
        else:
            out.append(c)
            i += 1
    return tuple(out)


def graph_preimage_count(base: str, extra: Sequence[Dfa] = (), limit: int = 2) -> int:
    """|h^-1(base) ∩ D_3 ∩ Reg ∩ extra| counted up to `limit`."""
    d3, reg, _ = cs_components_graph()
    regs = [reg, *extra]
    found = 0

    def rec(i, states, stack) -> Optional[int]:
        nonlocal found
        if found >= limit:
            return None
        if i == len(base):
            if not stack and all(r.is_final(q) for r, q in zip(regs, states)):
                found += 1
            return None
        c = base[i]
        if c == "[":
            cands = ["[", "['"]
        elif c == "]":
            cands = [] if not stack else [stack[-1]]
        else:
            cands = [c]
        for tok in cands:
            nxt = []
            ok = True
            for r, q in zip(regs, states):
                q2 = r.step(q, tok)
                if q2 is None:
                    ok = False
                    break
                nxt.append(q2)
            if not ok:
                continue
            if tok in ("[", "['"):
                stack.append("]" if tok == "[" else "]'")
                rec(i + 1, nxt, stack)
                stack.pop()
            elif tok in ("]", "]'"):
                top = stack.pop()
                rec(i + 1, nxt, stack)
                stack.append(top)
            else:
                rec(i + 1, nxt, stack)
        return None

    rec(0, [r.start for r in regs], [])
    return found


def reg_strings(reg: Dfa, d: DyckSpec, max_len: int) -> Iterable[tuple]:
    """All strings of D ∩ Reg up to max_len, by pruned depth-first search."""
    closer_of = d.closer_of()
    syms = sorted(d.symbols(), key=str)

    def rec(prefix, q, stack):
        if not stack and reg.is_final(q):
            yield tuple(prefix)
        if len(prefix) >= max_len:
            return
        for sym in syms:
            if sym in closer_of:
                if len(prefix) + len(stack) + 2 > max_len:
                    continue
            else:
                if not stack or stack[-1] != sym:
                    continue
            q2 = reg.step(q, sym)
            if q2 is None:
                continue
            if sym in closer_of:
                stack.append(closer_of[sym])
                prefix.append(sym)
                yield from rec(prefix, q2, stack)
                prefix.pop()
                stack.pop()
            else:
                stack.pop()
                prefix.append(sym)
                yield from rec(prefix, q2, stack)
                prefix.pop()
                stack.append(sym)

    yield from rec([], reg.start, [])
