"""Text formats: edge lists, graph6, and facet lists.

Edge list: first line "n m", then m lines "u v" with 0 <= u < v < n.
Facet list: first line "n k", then k lines, each a strictly increasing
vertex list.  graph6 follows the published byte encoding: N(n) then the
upper triangle read column by column, packed big-endian into 6-bit groups,
each offset by 63.  Parsers are strict and report 1-based line numbers.
"""

from .complexes import SimplicialComplex
from .errors import InvalidComplex, ParseError
from .graphs import Graph


def _ints(line, count, path, line_no, what):
    tokens = line.split()
    if len(tokens) != count:
        raise ParseError(
            f"expected {count} {what} fields, got {len(tokens)}", path=path, line=line_no
        )
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer {what} field", path=path, line=line_no) from None


def parse_edge_list(text, path=None):
    lines = text.splitlines()
    stripped = [(i + 1, ln.strip()) for i, ln in enumerate(lines)]
    content = [(no, ln) for no, ln in stripped if ln]
    if not content:
        raise ParseError("empty edge-list input", path=path, line=1)
    head_no, head = content[0]
    n, m = _ints(head, 2, path, head_no, "header")
    if n < 0 or m < 0:
        raise ParseError("negative counts in header", path=path, line=head_no)
    if len(content) - 1 != m:
        raise ParseError(
            f"header promises {m} edges but {len(content) - 1} edge lines follow",
            path=path,
            line=head_no,
        )
    seen = set()
    edges = []
    for no, ln in content[1:]:
        u, v = _ints(ln, 2, path, no, "edge")
        if not (0 <= u < v < n):
            raise ParseError(f"edge ({u}, {v}) violates 0 <= u < v < n={n}", path=path, line=no)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", path=path, line=no)
        seen.add((u, v))
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def dump_edge_list(g):
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


_G6_MAX_N = 258047


def dump_graph6(g):
    if g.n > _G6_MAX_N:
        raise ParseError(f"graph6 size header supports n <= {_G6_MAX_N}")
    if g.n <= 62:
        head = chr(g.n + 63)
    else:
        head = chr(126) + "".join(chr(((g.n >> k) & 63) + 63) for k in (12, 6, 0))
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append((g.masks[i] >> j) & 1)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3
                  | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5]))
        for k in range(0, len(bits), 6)
    )
    return head + body


def parse_graph6_line(line, path=None, line_no=None):
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 line", path=path, line=line_no)
    vals = []
    for ch in s:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise ParseError(f"byte {ord(ch)} outside graph6 range", path=path, line=line_no)
        vals.append(code)
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    else:
        if len(vals) < 4 or vals[1] == 63:
            raise ParseError("bad graph6 size header", path=path, line=line_no)
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise ParseError(
            f"graph6 body has {len(body)} groups, expected {(need + 5) // 6} for n={n}",
            path=path,
            line=line_no,
        )
    bits = []
    for v in body:
        bits.extend((v >> k) & 1 for k in (5, 4, 3, 2, 1, 0))
    if any(bits[need:]):
        raise ParseError("nonzero padding bits in graph6 body", path=path, line=line_no)
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(rows))


def parse_facet_list(text, path=None):
    lines = text.splitlines()
    content = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not content:
        raise ParseError("empty facet-list input", path=path, line=1)
    head_no, head = content[0]
    n, k = _ints(head, 2, path, head_no, "header")
    if n < 0 or k < 0:
        raise ParseError("negative counts in header", path=path, line=head_no)
    if len(content) - 1 != k:
        raise ParseError(
            f"header promises {k} facets but {len(content) - 1} facet lines follow",
            path=path,
            line=head_no,
        )
    facets = []
    for no, ln in content[1:]:
        try:
            vs = [int(t) for t in ln.split()]
        except ValueError:
            raise ParseError("non-integer facet field", path=path, line=no) from None
        if any(not 0 <= v < n for v in vs):
            raise ParseError(f"facet vertex outside 0..{n - 1}", path=path, line=no)
        if any(a >= b for a, b in zip(vs, vs[1:])):
            raise ParseError("facet vertices must be strictly increasing", path=path, line=no)
        facets.append(tuple(vs))
    return SimplicialComplex.from_facets(n, facets)


def dump_facet_list(k):
    # the empty facet would dump as a blank line and vanish on re-parse
    if any(facet == () for facet in k.facets):
        raise InvalidComplex("facet lists cannot represent the empty facet")
    lines = [f"{k.n} {len(k.facets)}"]
    lines.extend(" ".join(str(v) for v in facet) for facet in k.facets)
    return "\n".join(lines) + "\n"


def load_instances(path):
    """Parse a file into a list of (instance id, Graph or SimplicialComplex).

    Dispatch is by extension: .g6 holds one graph6 graph per line, .facets
    one facet list, anything else one edge list.  IO failures are reported
    as ParseError so corpus runs can isolate them per file.
    """
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read: {exc}", path=str(path)) from None
    name = str(path)
    if name.endswith(".g6"):
        out = []
        for i, line in enumerate(text.splitlines()):
            if line.strip():
                out.append((f"{name}:{i + 1}", parse_graph6_line(line, path=name, line_no=i + 1)))
        if not out:
            raise ParseError("no graph6 lines found", path=name, line=1)
        return out
    if name.endswith(".facets"):
        return [(name, parse_facet_list(text, path=name))]
    return [(name, parse_edge_list(text, path=name))]
