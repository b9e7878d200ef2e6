"""Generic arc-factored max-weight inference over noncrossing digraph
families.

The search space is the language D_55 ∩ Reg_lat ∩ G_n ∩ (family
constraints) ∩ (lexical constraints), represented as a Bar-Hillel product of
the Dyck grammar with the product recognizer.  Brackets are positioned:
automaton states carry the separator count, so every bracket pair knows its
vertex endpoints and contributes its arc weights to the objective.  Items
are computed strictly by increasing vertex span, so the dynamic program is
a single bottom-up pass; the best derivation's arc multiset is carried in
the value, making extraction trivial and tie-breaking deterministic
(maximum weight, then fewest arcs, then lexicographically smallest sorted
arc list).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .cfg import Dfa, Grammar, ProductDfa
from .chains import (BACKWARD, BIDIRECTIONAL, COVER_CYCLE, COVER_NONE,
                     COVER_TWO_TURN, FORWARD, first_state, segment_profile,
                     state_by_name)
from .digraphs import (Digraph, PropertyId, check_property,
                       enumerate_noncrossing_digraphs)
from .latent import (BOUNDARY_CLOSE, BOUNDARY_OPEN, LOOSE, LatentBracket,
                     OPENER_BASE, constraint_dfa, reg_lat)


class NoParseError(ValueError):
    """The requested family is empty for this input."""


@dataclass(frozen=True)
class WeightMatrix:
    n: int
    w: dict  # (i, j) -> nonnegative weight, diagonal absent

    def __post_init__(self):
        for (i, j), val in self.w.items():
            if i == j:
                raise ValueError("diagonal weights are not allowed")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"weight index ({i},{j}) out of range")
            if val < 0:
                raise ValueError("weights must be nonnegative")

    def get(self, i: int, j: int):
        return self.w.get((i, j), 0)


LEX_FLAGS = frozenset({"in-left", "in-right", "out-left", "out-right", "bidir"})


@dataclass(frozen=True)
class LexicalConstraint:
    flags: dict  # vertex -> frozenset of allowed flags; absent = unrestricted

    def key(self) -> tuple:
        return tuple(sorted((v, tuple(sorted(f))) for v, f in self.flags.items()))

    def allowed(self, vertex: int) -> frozenset:
        return self.flags.get(vertex, LEX_FLAGS)

    def permits(self, b: LatentBracket, vertex: int) -> bool:
        if b.is_boundary:
            return True
        flags = self.allowed(vertex)
        if b.orientation == BIDIRECTIONAL:
            return "bidir" in flags
        if b.base == "/":
            return "out-right" in flags
        if b.base == "<":
            return "in-right" in flags
        if b.base == ">":
            return "in-left" in flags
        return "out-left" in flags  # "\\"


@dataclass(frozen=True)
class ParseResult:
    digraph: Digraph
    weight: object  # int or Fraction


class CounterDfa(Dfa):
    """G_n: exactly n-1 boundary pairs (counts opening boundary brackets)."""

    def __init__(self, n: int):
        self.n = n
        self.start = 0

    def step(self, q, b):
        if b.base == "{":
            return q + 1 if q + 1 <= self.n - 1 else None
        return q

    def is_final(self, q) -> bool:
        return q == self.n - 1


def vertex_language(n: int) -> CounterDfa:
    return CounterDfa(n)


class LexDfa(Dfa):
    def __init__(self, lex: LexicalConstraint):
        self.lex = lex
        self.start = 0

    def step(self, q, b):
        if b.base == "{":
            return q + 1
        if not b.is_boundary and not self.lex.permits(b, q + 1):
            return None
        return q

    def is_final(self, q) -> bool:
        return True


def family_automaton(n: int, req: Iterable = (), lex: Optional[LexicalConstraint] = None) -> ProductDfa:
    comps = [reg_lat(), CounterDfa(n)]
    comps += [constraint_dfa(p) for p in sorted(req, key=lambda p: p.value)]
    if lex is not None:
        comps.append(LexDfa(lex))
    return ProductDfa(comps)


_COVERS_BY_ORIENT = {
    FORWARD: (COVER_NONE, COVER_CYCLE, COVER_TWO_TURN),
    BACKWARD: (COVER_NONE, COVER_CYCLE, COVER_TWO_TURN),
    BIDIRECTIONAL: (COVER_NONE, COVER_CYCLE),
}


@lru_cache(maxsize=None)
def _opener_candidates(regstate) -> tuple:
    """Openers whose forced annotations are consistent with the left
    context summarized by a Reg_lat state."""
    kind = regstate[0]
    if kind == "{":
        return ()
    out = []
    for orient in (FORWARD, BACKWARD, BIDIRECTIONAL):
        for cov in _COVERS_BY_ORIENT[orient]:
            profile = segment_profile(orient, cov)
            if kind in ("start", "opener"):
                chain, primed = first_state(profile).name, True
            elif kind == "}":
                chain, primed = LOOSE, False
            else:
                _, mark, _ = regstate
                if mark == LOOSE:
                    chain, primed = LOOSE, False
                else:
                    chain, primed = state_by_name(mark).step(profile).name, False
            out.append(LatentBracket(OPENER_BASE[orient], chain, primed, cov))
    return tuple(out)


class _Intersection:
    """Reachable fragment of the Bar-Hillel product for one (n, req, lex)."""

    def __init__(self, n: int, req: Iterable = (), lex: Optional[LexicalConstraint] = None):
        self.n = n
        self.req = frozenset(req)
        self.auto = family_automaton(n, self.req, lex)
        self._step_cache: dict = {}
        self._explore()

    def step(self, q, b):
        key = (q, b)
        if key not in self._step_cache:
            self._step_cache[key] = self.auto.step(q, b)
        return self._step_cache[key]

    def count_of(self, q) -> int:
        return q[1]

    def _explore(self):
        seen = {self.auto.start}
        openers: set = set()
        changed = True
        while changed:
            changed = False
            for q in list(seen):
                cands = list(_opener_candidates(q[0]))
                cands += [BOUNDARY_OPEN, BOUNDARY_CLOSE]
                cands += [o.partner() for o in openers]
                for b in cands:
                    q2 = self.step(q, b)
                    if q2 is None:
                        continue
                    if b.is_opener and b not in openers:
                        openers.add(b)
                        changed = True
                    if q2 not in seen:
                        seen.add(q2)
                        changed = True
        self.states = seen
        self.openers = openers

    def run(self, algebra):
        """Bottom-up pass by vertex span.  Returns (seq, pairs) where
        seq[s][qa][qb] is the aggregated value of balanced fragments of span
        s from qa to qb, and pairs[s] lists (qa, qb, value, record)."""
        n = self.n
        seq = [dict() for _ in range(n)]
        pairs = [list() for _ in range(n)]
        for q in self.states:
            seq[0].setdefault(q, {})[q] = algebra.empty()
        for s in range(1, n):
            # content rows: spans s with every pair strictly smaller
            content: dict = {}
            if s >= 1:
                for q in self.states:
                    content.setdefault(q, {})
                for p in range(1, s):
                    for (qa, qb, val, _rec) in pairs[p]:
                        rest = seq[s - p].get(qb)
                        if not rest:
                            continue
                        row = content[qa]
                        for qc, v2 in rest.items():
                            algebra.join(row, qc, algebra.concat(val, v2))
            # boundary pair has span 1
            if s == 1:
                for q in self.states:
                    q1 = self.step(q, BOUNDARY_OPEN)
                    if q1 is None:
                        continue
                    q2 = self.step(q1, BOUNDARY_CLOSE)
                    if q2 is not None:
                        pairs[1].append((q, q2, algebra.empty(),
                                         ("sep", q, q2)))
            # edge pairs of span s
            for qa in self.states:
                for o in _opener_candidates(qa[0]):
                    q1 = self.step(qa, o)
                    if q1 is None:
                        continue
                    u = self.count_of(qa) + 1
                    v = u + s
                    if v > n:
                        continue
                    closer = o.partner()
                    if s == 1:
                        # content of a span-1 pair is exactly one boundary pair
                        inner = {}
                        qq1 = self.step(q1, BOUNDARY_OPEN)
                        if qq1 is not None:
                            qq2 = self.step(qq1, BOUNDARY_CLOSE)
                            if qq2 is not None:
                                inner[qq2] = algebra.empty()
                    else:
                        inner = content.get(q1, {})
                    if not inner:
                        continue
                    for q2, cval in inner.items():
                        if self.count_of(q2) - self.count_of(q1) != s:
                            continue
                        qb = self.step(q2, closer)
                        if qb is None:
                            continue
                        pv = algebra.pair(o.orientation, u, v, cval)
                        pairs[s].append((qa, qb, pv, ("pair", o, u, v, q1, q2)))
            # full sequences of span s
            for p in range(1, s + 1):
                for (qa, qb, val, _rec) in pairs[p]:
                    rest = seq[s - p].get(qb)
                    if not rest:
                        continue
                    row = seq[s].setdefault(qa, {})
                    for qc, v2 in rest.items():
                        algebra.join(row, qc, algebra.concat(val, v2))
        return seq, pairs

    def _program(self):
        """Weight-independent op schedule of the span DP.

        Cells hold aggregated fragment values, pair slots hold single-pair
        values; replaying the ops with any algebra reproduces run()'s
        aggregation without touching the automaton again.
        """
        if hasattr(self, "_prog"):
            return self._prog
        n = self.n
        cell_ids: dict = {}

        def cell(kind, s, qa, qb):
            key = (kind, s, qa, qb)
            if key not in cell_ids:
                cell_ids[key] = len(cell_ids)
            return cell_ids[key]

        empty_cells = []
        seq_rows = [dict() for _ in range(n)]  # span -> qa -> {qb: cell}
        for q in self.states:
            c = cell("seq", 0, q, q)
            empty_cells.append(c)
            seq_rows[0].setdefault(q, {})[q] = c
        pair_defs: list = []   # pid -> ("sep",) | ("edge", orient, u, v, content cell)
        pair_index = [dict() for _ in range(n)]  # span -> list of (qa, qb, pid)
        span_ops = []
        for s in range(1, n):
            content_ops: list = []
            seq_ops: list = []
            content_rows: dict = {}
            for p in range(1, s):
                for (qa, qb, pid) in pair_index[p].get("entries", []):
                    rest = seq_rows[s - p].get(qb)
                    if not rest:
                        continue
                    row = content_rows.setdefault(qa, {})
                    for qc, src in rest.items():
                        dst = row.get(qc)
                        if dst is None:
                            dst = cell("content", s, qa, qc)
                            row[qc] = dst
                        content_ops.append((dst, pid, src))
            entries: list = []
            if s == 1:
                for q in self.states:
                    q1 = self.step(q, BOUNDARY_OPEN)
                    if q1 is None:
                        continue
                    q2 = self.step(q1, BOUNDARY_CLOSE)
                    if q2 is not None:
                        pid = len(pair_defs)
                        pair_defs.append(("sep",))
                        entries.append((q, q2, pid))
            for qa in self.states:
                u = self.count_of(qa) + 1
                v = u + s
                if v > n:
                    continue
                for o in _opener_candidates(qa[0]):
                    q1 = self.step(qa, o)
                    if q1 is None:
                        continue
                    closer = o.partner()
                    if s == 1:
                        inner = {}
                        qq1 = self.step(q1, BOUNDARY_OPEN)
                        if qq1 is not None:
                            qq2 = self.step(qq1, BOUNDARY_CLOSE)
                            if qq2 is not None:
                                ccell = cell("content", 1, q1, qq2)
                                content_ops.append((ccell, None, None))
                                inner[qq2] = ccell
                    else:
                        inner = content_rows.get(q1, {})
                    for q2, ccell in inner.items():
                        if self.count_of(q2) - self.count_of(q1) != s:
                            continue
                        qb = self.step(q2, closer)
                        if qb is None:
                            continue
                        pid = len(pair_defs)
                        pair_defs.append(("edge", o.orientation, u, v, ccell))
                        entries.append((qa, qb, pid))
            pair_index[s]["entries"] = entries
            for p in range(1, s + 1):
                for (qa, qb, pid) in pair_index[p].get("entries", []):
                    rest = seq_rows[s - p].get(qb)
                    if not rest:
                        continue
                    row = seq_rows[s].setdefault(qa, {})
                    for qc, src in rest.items():
                        dst = row.get(qc)
                        if dst is None:
                            dst = cell("seq", s, qa, qc)
                            row[qc] = dst
                        seq_ops.append((dst, pid, src))
            span_ops.append((content_ops, seq_ops))
        finals = []
        for qf, c in seq_rows[n - 1].get(self.auto.start, {}).items():
            if self.auto.is_final(qf):
                finals.append((qf, c))
        self._prog = (len(cell_ids), empty_cells, pair_defs, span_ops, finals)
        return self._prog

    def totals(self, algebra) -> dict:
        """Aggregated values over the whole language, keyed by final state."""
        ncells, empty_cells, pair_defs, span_ops, finals = self._program()
        cells = [None] * ncells
        empty = algebra.empty()
        for c in empty_cells:
            cells[c] = empty
        pairvals = [None] * len(pair_defs)
        pair_alg = algebra.pair
        concat = algebra.concat
        joinval = algebra.joinval
        for (content_ops, seq_ops) in span_ops:
            for (dst, pid, src) in content_ops:
                if pid is None:
                    cells[dst] = empty
                    continue
                val = concat(pairvals[pid], cells[src])
                cur = cells[dst]
                cells[dst] = val if cur is None else joinval(cur, val)
            for pid, d in enumerate(pair_defs):
                if pairvals[pid] is not None:
                    continue
                if d[0] == "sep":
                    pairvals[pid] = empty
                elif cells[d[4]] is not None:
                    pairvals[pid] = pair_alg(d[1], d[2], d[3], cells[d[4]])
            for (dst, pid, src) in seq_ops:
                pv = pairvals[pid]
                if pv is None:
                    continue
                val = concat(pv, cells[src])
                cur = cells[dst]
                cells[dst] = val if cur is None else joinval(cur, val)
        return {qf: cells[c] for qf, c in finals if cells[c] is not None}


class _CountAlgebra:
    def empty(self):
        return 1

    def concat(self, a, b):
        return a * b

    def pair(self, orientation, u, v, content):
        return content

    def join(self, row, key, val):
        row[key] = row.get(key, 0) + val

    def joinval(self, a, b):
        return a + b


class _MaxAlgebra:
    """Values are (weight, arc count, sorted arc tuple)."""

    def __init__(self, w: WeightMatrix):
        self.w = w

    def empty(self):
        return (0, 0, ())

    @staticmethod
    def _merge(a: tuple, b: tuple) -> tuple:
        return tuple(sorted(a + b))

    def concat(self, a, b):
        return (a[0] + b[0], a[1] + b[1], self._merge(a[2], b[2]))

    def pair(self, orientation, u, v, content):
        if orientation == FORWARD:
            arcs = ((u, v),)
        elif orientation == BACKWARD:
            arcs = ((v, u),)
        else:
            arcs = ((u, v), (v, u))
        weight = sum(self.w.get(i, j) for (i, j) in arcs)
        return (content[0] + weight, content[1] + len(arcs),
                self._merge(content[2], arcs))

    @staticmethod
    def _better(a, b) -> bool:
        if a[0] != b[0]:
            return a[0] > b[0]
        if a[1] != b[1]:
            return a[1] < b[1]
        return a[2] < b[2]

    def join(self, row, key, val):
        cur = row.get(key)
        if cur is None or self._better(val, cur):
            row[key] = val

    def joinval(self, a, b):
        return a if self._better(a, b) else b


_INTERSECTION_CACHE: dict = {}


def _intersection(n: int, req: Iterable = (),
                  lex: Optional[LexicalConstraint] = None) -> _Intersection:
    key = (n, frozenset(req), lex.key() if lex is not None else None)
    if key not in _INTERSECTION_CACHE:
        _INTERSECTION_CACHE[key] = _Intersection(n, req, lex)
    return _INTERSECTION_CACHE[key]


def count_family_strings(n: int, req: Iterable = (), lex: Optional[LexicalConstraint] = None) -> int:
    """Size of the intersection language (= number of family members)."""
    inter = _intersection(n, req, lex)
    return sum(inter.totals(_CountAlgebra()).values())


def build_intersection_grammar(n: int, req: Iterable = (),
                               lex: Optional[LexicalConstraint] = None) -> Grammar:
    """Materialized Bar-Hillel product grammar for the family language.

    Nonterminals are ("S"|"P", state, state) pairs over the product
    recognizer Reg_lat ∩ G_n ∩ constraints; terminals are latent brackets.
    """
    inter = _intersection(n, req, lex)
    seq, pairs = inter.run(_CountAlgebra())

    productions: list = []
    seen_items: set = set()

    def seq_nt(qa, qb):
        return ("S", qa, qb)

    def pair_nt(qa, qb):
        return ("P", qa, qb)

    # sequence productions: S(qa,qc) -> P(qa,qb) S(qb,qc) | eps
    realizable_seq = set()
    for s in range(inter.n):
        for qa, row in seq[s].items():
            for qc in row:
                realizable_seq.add((qa, qc, s))
    realizable_pairs = {}
    for s in range(inter.n):
        for (qa, qb, _val, rec) in pairs[s]:
            realizable_pairs.setdefault((qa, qb, s), []).append(rec)

    for (qa, qc, s) in sorted(realizable_seq, key=repr):
        if s == 0:
            productions.append((seq_nt(qa, qc), ()))
            continue
        for p in range(1, s + 1):
            for (qx, qb, _val, _rec) in pairs[p]:
                if qx != qa:
                    continue
                if (qb, qc, s - p) in realizable_seq:
                    productions.append(
                        (seq_nt(qa, qc), (pair_nt(qa, qb), seq_nt(qb, qc))))
    for (qa, qb, s), recs in sorted(realizable_pairs.items(), key=repr):
        for rec in recs:
            if rec[0] == "sep":
                productions.append(
                    (pair_nt(qa, qb), (BOUNDARY_OPEN, BOUNDARY_CLOSE)))
            else:
                _tag, opener, u, v, q1, q2 = rec
                productions.append(
                    (pair_nt(qa, qb), (opener, seq_nt(q1, q2), opener.partner())))

    start = ("S0",)
    top_span = inter.n - 1
    for qf in sorted(seq[top_span].get(inter.auto.start, {}), key=repr):
        if inter.auto.is_final(qf):
            productions.append((start, (seq_nt(inter.auto.start, qf),)))
    if not any(lhs == start for lhs, _ in productions):
        # empty language: the start expands only to an unproductive marker
        productions.append((start, (("DEAD",),)))
        productions.append((("DEAD",), (("DEAD",),)))
    productions = list(dict.fromkeys(productions))
    return Grammar(start, tuple(productions))


def parse_max(w: WeightMatrix, req: Iterable = (),
              lex: Optional[LexicalConstraint] = None) -> ParseResult:
    """Exact argmax of the arc-weight sum over the requested family."""
    inter = _intersection(w.n, req, lex)
    alg = _MaxAlgebra(w)
    totals = inter.totals(alg)
    if not totals:
        raise NoParseError("the requested family is empty for this input")
    best = None
    for val in totals.values():
        if best is None or alg._better(val, best):
            best = val
    weight, _count, arcs = best
    return ParseResult(Digraph(w.n, frozenset(arcs)), weight)


@lru_cache(maxsize=None)
def _family_table(n: int) -> list:
    """Cached (arcs tuple, satisfied property set) for brute-force search."""
    out = []
    for g in enumerate_noncrossing_digraphs(n):
        props = frozenset(p for p in PropertyId if check_property(g, p))
        out.append((tuple(sorted(g.arcs)), props))
    return out


@lru_cache(maxsize=None)
def _brute_arrays(n: int):
    import numpy as np

    table = _family_table(n)
    rows = len(table)
    prop_bits = np.zeros(rows, dtype=np.uint16)
    arc_rows, arc_cols = [], []
    for r, (arcs, props) in enumerate(table):
        mask = 0
        for k, p in enumerate(PropertyId):
            if p in props:
                mask |= 1 << k
        prop_bits[r] = mask
        for (i, j) in arcs:
            arc_rows.append(r)
            arc_cols.append((i - 1) * n + (j - 1))
    order = sorted(range(rows), key=lambda r: (len(table[r][0]), table[r][0]))
    tie_rank = np.empty(rows, dtype=np.int64)
    for rank, r in enumerate(order):
        tie_rank[r] = rank
    return (np.asarray(arc_rows, dtype=np.int64),
            np.asarray(arc_cols, dtype=np.int64), prop_bits, tie_rank)


def brute_force_max(w: WeightMatrix, req: Iterable = ()) -> ParseResult:
    """Testing oracle: argmax by enumeration and direct property filters,
    with the same tie-breaking rule as parse_max."""
    if w.n > 6:
        raise ValueError("brute force is limited to n <= 6")
    req = frozenset(req)
    if all(isinstance(v, int) for v in w.w.values()):
        return _brute_force_max_int(w, req)
    best = None
    best_arcs = None
    for arcs, props in _family_table(w.n):
        if not req <= props:
            continue
        weight = sum(w.get(i, j) for (i, j) in arcs)
        key = (weight, len(arcs), arcs)
        if best is None or _MaxAlgebra._better(key, best):
            best = key
            best_arcs = arcs
    if best is None:
        raise NoParseError("the requested family is empty for this input")
    return ParseResult(Digraph(w.n, frozenset(best_arcs)), best[0])


def _brute_force_max_int(w: WeightMatrix, req: frozenset) -> ParseResult:
    import numpy as np

    n = w.n
    table = _family_table(n)
    arc_rows, arc_cols, prop_bits, tie_rank = _brute_arrays(n)
    wvec = np.zeros(n * n, dtype=np.int64)
    for (i, j), val in w.w.items():
        wvec[(i - 1) * n + (j - 1)] = val
    scores = np.zeros(len(table), dtype=np.int64)
    np.add.at(scores, arc_rows, wvec[arc_cols])
    reqmask = 0
    for k, p in enumerate(PropertyId):
        if p in req:
            reqmask |= 1 << k
    ok = (prop_bits & np.uint16(reqmask)) == np.uint16(reqmask)
    if not ok.any():
        raise NoParseError("the requested family is empty for this input")
    cand = np.flatnonzero(ok)
    best = scores[cand].max()
    cand = cand[scores[cand] == best]
    r = int(cand[np.argmin(tie_rank[cand])])
    return ParseResult(Digraph(n, frozenset(table[r][0])), int(best))
