"""k-expressions and exact clique-width.

Two independent engines:

* ``cliquewidth_leq`` / ``cliquewidth_exact`` run a dynamic programme over
  (vertex subset S, partition of S into label classes). A state is kept only
  if the expression built so far is exactly G[S] and every class is a module
  with respect to V - S. Unions may identify classes, then add the missing
  cross edges by joins.
* ``cliquewidth_oracle`` explores raw build states (S, labels, edges built so
  far) under the four operations with nothing but canonical deduplication,
  and is meant as a slow cross-check on at most 7 vertices.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union as TUnion

from .errors import MalformedExpression, TooLarge
from .graph import Graph, _bits, are_isomorphic

SEARCH_CAP = 12
ORACLE_CAP = 7


# ---------------------------------------------------------------- expressions

@dataclass(frozen=True)
class Create:
    vertex: int
    label: int


@dataclass(frozen=True)
class Union:
    left: "KExpression"
    right: "KExpression"


@dataclass(frozen=True)
class Join:
    i: int
    j: int
    child: "KExpression"


@dataclass(frozen=True)
class Relabel:
    i: int
    j: int
    child: "KExpression"


KExpression = TUnion[Create, Union, Join, Relabel]


def labels_used(e: KExpression) -> set[int]:
    out: set[int] = set()
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, Create):
            out.add(node.label)
        elif isinstance(node, Union):
            stack += [node.left, node.right]
        else:
            out.update((node.i, node.j))
            stack.append(node.child)
    return out


def width(e: KExpression) -> int:
    return len(labels_used(e))


def evaluate(e: KExpression) -> tuple[Graph, dict[int, int]]:
    """Build the graph of ``e``; returns it with the final vertex -> label map.

    Created vertex ids must be exactly 0..m-1, each created once.
    """
    edges: set[tuple[int, int]] = set()

    def rec(node) -> dict[int, int]:
        if isinstance(node, Create):
            return {node.vertex: node.label}
        if isinstance(node, Union):
            left, right = rec(node.left), rec(node.right)
            if left.keys() & right.keys():
                raise MalformedExpression(
                    f"vertex {min(left.keys() & right.keys())} created twice")
            left.update(right)
            return left
        if node.i == node.j:
            kind = "join" if isinstance(node, Join) else "relabel"
            raise MalformedExpression(f"{kind} with equal labels {node.i}")
        lab = rec(node.child)
        if isinstance(node, Join):
            xs = [v for v, l in lab.items() if l == node.i]
            ys = [v for v, l in lab.items() if l == node.j]
            edges.update((min(x, y), max(x, y)) for x in xs for y in ys)
            return lab
        if isinstance(node, Relabel):
            return {v: (node.j if l == node.i else l) for v, l in lab.items()}
        raise MalformedExpression(f"unknown node {node!r}")

    lab = rec(e)
    if set(lab) != set(range(len(lab))):
        raise MalformedExpression("vertex ids must be exactly 0..m-1")
    return Graph(len(lab), frozenset(edges)), lab


def format_expression(e: KExpression) -> str:
    if isinstance(e, Create):
        return f"create({e.vertex},{e.label})"
    if isinstance(e, Union):
        return f"union({format_expression(e.left)},{format_expression(e.right)})"
    name = "join" if isinstance(e, Join) else "relabel"
    return f"{name}({e.i},{e.j},{format_expression(e.child)})"


_TOKEN = re.compile(r"\s*(create|union|join|relabel|\d+|[(),])")


def parse_expression(text: str) -> KExpression:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise MalformedExpression(f"unexpected character at offset {pos}")
        tokens.append(m.group(1))
        pos = m.end()
    it = iter(tokens + [None])
    cur = [next(it)]

    def take(expected=None):
        tok = cur[0]
        if tok is None or (expected is not None and tok != expected):
            raise MalformedExpression(f"expected {expected or 'token'}, got {tok!r}")
        cur[0] = next(it)
        return tok

    def number() -> int:
        tok = take()
        if not tok.isdigit():
            raise MalformedExpression(f"expected number, got {tok!r}")
        return int(tok)

    def expr() -> KExpression:
        head = take()
        take("(")
        if head == "create":
            v = number(); take(","); l = number()
            node = Create(v, l)
        elif head == "union":
            a = expr(); take(","); b = expr()
            node = Union(a, b)
        elif head in ("join", "relabel"):
            i = number(); take(","); j = number(); take(","); c = expr()
            node = (Join if head == "join" else Relabel)(i, j, c)
        else:
            raise MalformedExpression(f"unknown operation {head!r}")
        take(")")
        return node

    node = expr()
    if cur[0] is not None:
        raise MalformedExpression(f"trailing input {cur[0]!r}")
    return node


def certifies(e: KExpression, g: Graph, k: Optional[int] = None) -> bool:
    built, _ = evaluate(e)
    return are_isomorphic(built, g) and (k is None or width(e) <= k)


@dataclass(frozen=True)
class CwdResult:
    width: int
    certificate: KExpression


# ---------------------------------------------------------------- search engine

def _low(X: int) -> int:
    return (X & -X).bit_length() - 1


def _matchings(a: int, b: int, allowed, k: int):
    """Partial injections right-class -> left-class, as lists (or -1)."""
    out = []
    cur = [-1] * b

    def rec(j: int, used: int, shared: int):
        if j == b:
            if a + b - shared <= k:
                out.append(tuple(cur))
            return
        cur[j] = -1
        rec(j + 1, used, shared)
        for i in range(a):
            if not used >> i & 1 and allowed[i][j]:
                cur[j] = i
                rec(j + 1, used | 1 << i, shared + 1)
        cur[j] = -1

    rec(0, 0, 0)
    return out


def _search(g: Graph, k: int):
    n = g.n
    adj = g.adj
    full = g.full_mask
    states: dict[int, dict[tuple, tuple]] = {}
    for v in range(n):
        states[1 << v] = {(1 << v,): ("create", v)}
    if n == 1:
        return states, full

    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for S in range(1, full + 1):
        by_size[S.bit_count()].append(S)

    def full_adjacent(X: int, Y: int) -> bool:
        return all(adj[u] & Y == Y for u in _bits(X))

    for size in range(2, n + 1):
        for S in by_size[size]:
            found: dict[tuple, tuple] = {}
            low = S & -S
            rest = S ^ low
            sub = rest
            while True:
                S1 = sub | low
                S2 = S ^ S1
                if S2 and states.get(S1) and states.get(S2):
                    _unions(S, S1, S2, states[S1], states[S2], adj, k, found, full_adjacent)
                if sub == 0:
                    break
                sub = (sub - 1) & rest
            if not found:
                continue
            # relabel closure: merge classes with equal outside neighbourhoods
            queue = list(found)
            while queue:
                P = queue.pop()
                if len(P) == 1:
                    continue
                keys = [adj[_low(X)] & ~S for X in P]
                for a, b in combinations(range(len(P)), 2):
                    if keys[a] != keys[b]:
                        continue
                    merged = P[a] | P[b]
                    Q = tuple(sorted([merged] + [X for t, X in enumerate(P) if t not in (a, b)]))
                    if Q not in found:
                        found[Q] = ("relabel", P, P[a], P[b])
                        queue.append(Q)
            states[S] = found
            if S == full:
                return states, full
    return states, full


def _unions(S, S1, S2, P1s, P2s, adj, k, found, full_adjacent):
    outside = ~S
    for P1 in P1s:
        a = len(P1)
        keys1 = [adj[_low(C)] & outside for C in P1]
        for P2 in P2s:
            b = len(P2)
            if max(a, b) > k:
                continue
            keys2 = [adj[_low(D)] & outside for D in P2]
            # adjacency between classes is all-or-nothing by the module property
            cross = [[bool(adj[_low(C)] & D) for D in P2] for C in P1]
            allowed = [[(not cross[i][j]) and keys1[i] == keys2[j] for j in range(b)]
                       for i in range(a)]
            for match in _matchings(a, b, allowed, k):
                labels = []  # (C, D) per label, 0 for absent
                right_of = {i: j for j, i in enumerate(match) if i >= 0}
                for i, C in enumerate(P1):
                    labels.append((C, P2[right_of[i]] if i in right_of else 0))
                for j, D in enumerate(P2):
                    if match[j] < 0:
                        labels.append((0, D))
                joins = []
                ok = True
                for x, y in combinations(range(len(labels)), 2):
                    Cx, Dx = labels[x]
                    Cy, Dy = labels[y]
                    need = (Cx and Dy and adj[_low(Cx)] & Dy) or (Dx and Cy and adj[_low(Dx)] & Cy)
                    if not need:
                        continue
                    if not full_adjacent(Cx | Dx, Cy | Dy):
                        ok = False
                        break
                    joins.append((x, y))
                if not ok:
                    continue
                classes = [C | D for C, D in labels]
                P = tuple(sorted(classes))
                if P not in found:
                    found[P] = ("union", S1, P1, S2, P2,
                                tuple(labels), tuple((classes[x], classes[y]) for x, y in joins))


def _build(states, S, P, label_of: dict[int, int], k: int) -> KExpression:
    rec = states[S][P]
    kind = rec[0]
    if kind == "create":
        return Create(rec[1], label_of[P[0]])
    if kind == "union":
        _, S1, P1, S2, P2, labels, joins = rec
        left = {C: label_of[C | D] for C, D in labels if C}
        right = {D: label_of[C | D] for C, D in labels if D}
        e: KExpression = Union(_build(states, S1, P1, left, k), _build(states, S2, P2, right, k))
        for X, Y in joins:
            e = Join(label_of[X], label_of[Y], e)
        return e
    _, Pprev, A, B = rec
    target = label_of[A | B]
    taken = {label_of[X] for X in P}
    spare = min(l for l in range(1, k + 1) if l not in taken)
    prev = {X: label_of[X] for X in P if X != A | B}
    prev[A] = target
    prev[B] = spare
    return Relabel(spare, target, _build(states, S, Pprev, prev, k))


def cliquewidth_leq(g: Graph, k: int) -> Optional[KExpression]:
    """A certificate of width <= k, or None when the clique-width exceeds k."""
    if g.n < 1:
        raise ValueError("clique-width needs at least one vertex")
    if g.n > SEARCH_CAP:
        raise TooLarge(f"search engine is capped at {SEARCH_CAP} vertices")
    if k < 1:
        return None
    states, full = _search(g, k)
    final = states.get(full)
    if not final:
        return None
    P = min(final, key=lambda p: (len(p), p))
    return _build(states, full, P, {X: i + 1 for i, X in enumerate(P)}, k)


def cliquewidth_exact(g: Graph) -> CwdResult:
    if g.n < 1:
        raise ValueError("clique-width needs at least one vertex")
    if g.n > SEARCH_CAP:
        raise TooLarge(f"search engine is capped at {SEARCH_CAP} vertices")
    k = 1
    while True:
        cert = cliquewidth_leq(g, k)
        if cert is not None:
            return CwdResult(width(cert), cert)
        k += 1


# ---------------------------------------------------------------- oracle
#
# Labels are interchangeable, so a raw build state is stored as the set of
# its label classes (sorted vertex masks) plus the edges built so far. Edge
# u<v is bit u*n+v of the edge mask. Besides deduplication the only filter is
# dead-state removal: a host edge inside S that is still missing can only
# ever be built by a join of the classes holding its ends, and classes only
# grow, so if those classes coincide or are not completely joined in the
# host the state can never reach the host.

def _oracle_leq(g: Graph, k: int) -> bool:
    n = g.n
    adj = g.adj
    full = g.full_mask
    target = sum(1 << (u * n + v) for u, v in g.edges)
    if n == 1:
        return True
    # pair_bits[u][Y]: edge bits between u and the vertices of mask Y
    def pair_bits(u: int, Y: int) -> int:
        out = 0
        for v in _bits(Y):
            out |= 1 << (u * n + v if u < v else v * n + u)
        return out

    pb_cache: dict[tuple[int, int], int] = {}

    def join_bits(X: int, Y: int) -> Optional[int]:
        out = 0
        for u in _bits(X):
            if adj[u] & Y != Y:
                return None  # would build a non-edge; edges are never removed
            key = (u, Y)
            bits = pb_cache.get(key)
            if bits is None:
                bits = pb_cache[key] = pair_bits(u, Y)
            out |= bits
        return out

    def alive(S: int, P: tuple, built: int) -> bool:
        missing = target_on[S] & ~built
        if not missing:
            return True
        cls = {}
        for X in P:
            for u in _bits(X):
                cls[u] = X
        for u in _bits(S):
            for v in _bits(adj[u] & S):
                if u < v and missing >> (u * n + v) & 1:
                    X, Y = cls[u], cls[v]
                    if X == Y or not full_pair(X, Y):
                        return False
        return True

    fp_cache: dict[tuple[int, int], bool] = {}

    def full_pair(X: int, Y: int) -> bool:
        key = (X, Y)
        r = fp_cache.get(key)
        if r is None:
            r = fp_cache[key] = all(adj[u] & Y == Y for u in _bits(X))
        return r

    target_on = {}
    for S in range(1, full + 1):
        target_on[S] = sum(1 << (u * n + v) for u, v in g.edges if S >> u & 1 and S >> v & 1)

    def closure(S: int, seeds: set) -> set:
        seen = set(seeds)
        stack = list(seeds)
        while stack:
            P, built = stack.pop()
            m = len(P)
            for a in range(m):
                for b in range(a + 1, m):
                    # relabel one class into the other
                    Q = tuple(sorted((P[a] | P[b],) + P[:a] + P[a + 1:b] + P[b + 1:]))
                    nxt = (Q, built)
                    if nxt not in seen and alive(S, Q, built):
                        seen.add(nxt)
                        stack.append(nxt)
                    add = join_bits(P[a], P[b])
                    if add is not None and built | add != built:
                        nxt = (P, built | add)
                        if nxt not in seen:
                            seen.add(nxt)
                            stack.append(nxt)
        return seen

    states: dict[int, set] = {1 << v: {((1 << v,), 0)} for v in range(n)}
    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for S in range(1, full + 1):
        by_size[S.bit_count()].append(S)
    for size in range(2, n + 1):
        for S in by_size[size]:
            produced: set = set()
            low = S & -S
            rest = S ^ low
            sub = rest
            while True:
                S1 = sub | low
                S2 = S ^ S1
                if S2:
                    for P1, b1 in states[S1]:
                        a = len(P1)
                        for P2, b2 in states[S2]:
                            built = b1 | b2
                            for f in _label_maps(a, len(P2), k):
                                merged = list(P1)
                                for j, D in enumerate(P2):
                                    if f[j] < a:
                                        merged[f[j]] |= D
                                    else:
                                        merged.append(D)
                                Q = tuple(sorted(merged))
                                if alive(S, Q, built):
                                    produced.add((Q, built))
                if sub == 0:
                    break
                sub = (sub - 1) & rest
            states[S] = closure(S, produced)
    return any(built == target for _, built in states[full])


def _label_maps(a: int, b: int, k: int, _cache: dict = {}):
    """Maps of right labels 0..b-1 into left labels 0..a-1 or fresh ones."""
    key = (a, b, k)
    if key in _cache:
        return _cache[key]
    out = []
    cur = [0] * b

    def rec(j: int, used: int, fresh: int):
        if j == b:
            out.append(tuple(cur))
            return
        for i in range(a):
            if not used >> i & 1:
                cur[j] = i
                rec(j + 1, used | 1 << i, fresh)
        if a + fresh < k:
            cur[j] = a + fresh
            rec(j + 1, used, fresh + 1)

    rec(0, 0, 0)
    _cache[key] = out
    return out


def cliquewidth_oracle(g: Graph) -> int:
    if g.n < 1:
        raise ValueError("clique-width needs at least one vertex")
    if g.n > ORACLE_CAP:
        raise TooLarge(f"oracle is capped at {ORACLE_CAP} vertices")
    k = 1
    while not _oracle_leq(g, k):
        k += 1
    return k
