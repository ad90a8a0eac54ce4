#!/usr/bin/env python3
"""Emits the move-template corpus (corpus/templates/*.json).

Vertex traces are computed by propagating the coset-label action around the
host cell symbolically, so the JSON traces are consistent by construction.
"""
import json
import os
import re
import sys

OUT = os.path.join(os.path.dirname(__file__), "..", "corpus", "templates")


def parse_tok(s):
    m = re.match(r"([RLW])\((\d+),(\d+)\)(\^-1)?$", s)
    kind, i, j = m.group(1), int(m.group(2)), int(m.group(3))
    exp = -1 if m.group(4) else 1
    return kind, i, j, exp


def act(mode, tok, label):
    """label: dict coord -> {sym: coef}. Returns a new dict."""
    kind, i, j, exp = parse_tok(tok)
    out = {c: dict(v) for c, v in label.items()}

    def add(dst, src, scale):
        t = dict(out.get(dst, {}))
        for s, c in label.get(src, {}).items():
            t[s] = t.get(s, 0) + scale * c
            if t[s] == 0:
                del t[s]
        out[dst] = t

    if kind in "RL":
        if mode == "row":
            add(i, j, -exp)  # col_i -= col_j
        else:
            add(j, i, exp)  # col_j += col_i
    else:  # W: (z_i, z_j) -> (-z_j, z_i) for exp +1 (same in both modes)
        zi, zj = label.get(i, {}), label.get(j, {})
        if exp == 1:
            out[i] = {s: -c for s, c in zj.items()}
            out[j] = dict(zi)
        else:
            out[i] = dict(zj)
            out[j] = {s: -c for s, c in zi.items()}
    return out


def expr_str(e):
    if not e:
        return "0"
    parts = ""
    for s in sorted(e):
        c = e[s]
        assert c in (1, -1), (s, c)
        parts += ("-" if c == -1 else ("+" if parts else "")) + s
    return parts


HOSTS = {}


def host(name, edges, anchor, extra):
    """edges: [(frm,to,letter)] traversal; anchor: dict coord->sym for p1."""
    HOSTS[name] = dict(edges=edges, anchor=anchor, extra=extra)


# --- host cells (traversal order; letters are traversal letters) ---
host("t1", [("p1", "p2", "R(2,3)"), ("p2", "p3", "R(1,2)^-1"), ("p3", "p4", "R(2,3)^-1"),
            ("p4", "p5", "R(1,3)^-1"), ("p5", "p1", "R(1,2)")],
     {1: "a", 2: "b", 3: "c"}, {3: "c", 4: "z"})
host("t2", [("p1", "p2", "R(1,3)"), ("p2", "p3", "R(2,1)^-1"), ("p3", "p4", "R(1,3)^-1"),
            ("p4", "p5", "R(2,3)^-1"), ("p5", "p1", "R(2,1)")],
     {1: "a", 2: "b", 3: "c"}, {3: "c", 4: "z"})
host("t3", [("p1", "p2", "R(3,2)^-1"), ("p2", "p3", "R(2,1)^-1"), ("p3", "p4", "R(3,1)^-1"),
            ("p4", "p5", "R(3,2)"), ("p5", "p1", "R(2,1)")],
     {1: "a", 2: "b", 3: "c"}, {4: "z"})
host("t4", [("p1", "p2", "R(3,1)^-1"), ("p2", "p3", "R(2,1)^-1"), ("p3", "p4", "R(3,1)"),
            ("p4", "p1", "R(2,1)")],
     {1: "a", 2: "b", 3: "c"}, {4: "z"})
host("t5", [("p1", "p2", "L(1,2)^-1"), ("p2", "p3", "R(1,3)^-1"), ("p3", "p4", "L(1,2)"),
            ("p4", "p1", "R(1,3)")],
     {1: "a", 2: "b", 3: "c"}, {3: "c", 4: "z"})
host("t5b", [("p1", "p2", "L(1,3)^-1"), ("p2", "p3", "R(1,2)^-1"), ("p3", "p4", "L(1,3)"),
             ("p4", "p1", "R(1,2)")],
     {1: "a", 2: "b", 3: "c"}, {2: "b", 3: "c", 4: "z"})
host("t6", [("p1", "p2", "R(1,2)^-1"), ("p2", "p3", "R(3,5)^-1"), ("p3", "p4", "R(1,2)"),
            ("p4", "p1", "R(3,5)")],
     {1: "a", 2: "b", 3: "c", 5: "e"}, {2: "b", 4: "z", 5: "e"})
host("t6p", [("p1", "p2", "R(1,2)^-1"), ("p2", "p3", "R(3,2)^-1"), ("p3", "p4", "R(1,2)"),
             ("p4", "p1", "R(3,2)")],
     {1: "a", 2: "b", 3: "c"}, {2: "b", 4: "z"})
host("t7", [("p1", "p2", "R(2,1)^-1"), ("p2", "p3", "R(3,5)^-1"), ("p3", "p4", "R(2,1)"),
            ("p4", "p1", "R(3,5)")],
     {1: "a", 2: "b", 3: "c", 5: "e"}, {1: "a", 4: "z", 5: "e"})
host("t7p", [("p1", "p2", "R(2,1)^-1"), ("p2", "p3", "L(2,3)^-1"), ("p3", "p4", "R(2,1)"),
             ("p4", "p1", "L(2,3)")],
     {1: "a", 2: "b", 3: "c"}, {1: "a", 3: "c", 4: "z"})
host("t8", [("p1", "p2", "L(2,1)^-1"), ("p2", "p3", "L(1,2)"), ("p3", "p4", "W(1,2)^-1"),
            ("p4", "p1", "R(1,2)")],
     {1: "a", 2: "b"}, {4: "z"})
host("t9", [("p1", "p2", "L(1,2)^-1"), ("p2", "p3", "L(2,1)"), ("p3", "p4", "W(1,2)"),
            ("p4", "p1", "R(2,1)")],
     {1: "a", 2: "b"}, {4: "z"})
host("t10", [("p1", "p2", "W(1,2)^-1"), ("p2", "p3", "L(2,1)"), ("p3", "p4", "W(1,2)"),
             ("p4", "p1", "R(1,2)")],
     {1: "a", 2: "b"}, {4: "z"})
host("t11r1", [("p1", "p2", "W(1,2)^-1"), ("p2", "p3", "L(2,3)^-1"), ("p3", "p4", "W(1,2)"),
               ("p4", "p1", "R(1,3)^-1")],
     {1: "a", 2: "b", 3: "c"}, {3: "c", 4: "z"})
host("t11r2", [("p1", "p2", "W(1,2)"), ("p2", "p3", "R(2,3)"), ("p3", "p4", "W(1,2)^-1"),
               ("p4", "p1", "R(1,3)^-1")],
     {1: "b", 2: "-a"}, {3: "c", 4: "z"})
host("t12", [("p1", "p2", "W(1,2)^-1"), ("p2", "p3", "R(3,2)"), ("p3", "p4", "W(1,2)"),
             ("p4", "p1", "R(3,1)")],
     {1: "a", 2: "b", 3: "c"}, {4: "z"})

T = dict  # shorthand


def emit(id_, hostName, mode, kind, order="dim1", t=None, sides=None, predicate=None,
         maximal=None, vmaxCond=None, hostType="", dim=1, k=1, notes=""):
    h = HOSTS[hostName]
    coords = set()
    for (_, _, letter) in h["edges"]:
        _, i, j, _ = parse_tok(letter)
        coords.add(i)
        coords.add(j)
    coords |= set(h["anchor"].keys())

    def anchor_expr(c):
        if c not in h["anchor"]:
            return {}
        v = h["anchor"][c]
        if v.startswith("-"):
            return {v[1:]: -1}
        return {v: 1}

    label = {c: anchor_expr(c) for c in sorted(coords)}
    traceCoords = sorted(h["anchor"].keys())
    traces = {}
    vorder = []
    cur = label
    for (frm, to, letter) in h["edges"]:
        if frm not in traces:
            traces[frm] = [expr_str(cur[c]) for c in traceCoords]
            vorder.append(frm)
        cur = act(mode, letter, cur)
        nxt = {c: expr_str(cur[c]) for c in traceCoords}
        if to in traces:
            assert traces[to] == [nxt[c] for c in traceCoords], (id_, to, traces[to], nxt)
    # closure check
    start = {c: anchor_expr(c) for c in sorted(coords)}
    assert cur == start, (id_, "host cycle does not close", cur, start)

    doc = {
        "id": id_,
        "family": next((f for f in ("GA", "ZA", "GB", "ZB") if f in id_), "HD"),
        "hostType": hostType,
        "order": order,
        "mode": mode,
        "kind": kind,
        "hostEdges": [{"from": f, "to": to_, "letter": l} for (f, to_, l) in h["edges"]],
        "traceCoords": traceCoords,
        "extraCoords": {str(c): s for c, s in h["extra"].items()},
        "symbols": sorted({s.lstrip("-") for c, s in h["anchor"].items()} |
                          {s for c, s in h["extra"].items()}),
        "traces": traces,
        "predicate": predicate or [],
        "maximal": maximal or [],
        "vmaxCond": vmaxCond or [],
        "dim": dim,
        "k": k,
    }
    if t:
        doc["t"] = t
    if sides:
        doc["sideLetters"] = sides
    if notes:
        doc["notes"] = notes
    path = os.path.join(OUT, id_ + ".json")
    with open(path, "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")


def main():
    os.makedirs(OUT, exist_ok=True)
    GA = dict(mode="row", predicate=["goodpos(d)"], vmaxCond=[["1", "maxpos"]])
    ZA = dict(mode="row", predicate=["zero(z)"], vmaxCond=[["1", "goodpos"]])
    GB = dict(mode="col", predicate=["goodpos(d)"], vmaxCond=[["1", "maxpos"]])
    ZB = dict(mode="col", predicate=["zero(z)"], vmaxCond=[["1", "goodpos"]])

    def With(base, extraPred=(), **kw):
        d = dict(base)
        d["predicate"] = list(base["predicate"]) + list(extraPred)
        d.update(kw)
        return d

    # The GA templates gain the good coordinate at abstract index 4.
    for name in ("t1", "t2", "t3", "t4", "t5", "t5b", "t6", "t6p", "t7", "t7p",
                 "t8", "t9", "t10", "t11r1", "t11r2", "t12"):
        HOSTS[name + "g"] = dict(HOSTS[name])
        HOSTS[name + "g"] = {
            "edges": HOSTS[name]["edges"],
            "anchor": HOSTS[name]["anchor"],
            "extra": {**{c: s for c, s in HOSTS[name]["extra"].items() if s != "z"}, 4: "d"},
        }

    # ---------------- GA (row, good coordinate) ----------------
    emit("1GA", "t1g", kind="commuting", t="L(1,4)", hostType="1R", **GA)
    emit("2GA", "t2g", kind="conjugating", t="L(1,4)", hostType="2R", **GA)
    emit("3GA", "t3g", kind="conjugating", t="R(1,4)", hostType="3", **GA)
    emit("4GA", "t4g", kind="conjugating", t="R(1,4)", hostType="4", **GA)
    emit("5GA", "t5g", kind="corner", hostType="5",
         sides={"p1": "L(1,4)", "p2": "R(2,4)^-1", "p3": "R(2,4)^-1", "p4": "L(1,4)"},
         **With(GA, maximal=["p1"]))
    emit("6GA", "t6g", kind="commuting", t="L(1,4)", hostType="6R", **GA)
    emit("6pGA", "t6pg", kind="commuting", t="L(1,4)", hostType="6'R", **GA)
    emit("7GA", "t7g", kind="conjugating", t="R(1,4)", hostType="7", **GA)
    emit("7pGA", "t7pg", kind="conjugating", t="R(1,4)", hostType="7'", **GA)
    emit("8GA-case1", "t8g", kind="corner", hostType="8",
         sides={"p1": "L(1,4)", "p2": "L(2,4)", "p3": "L(2,4)", "p4": "L(1,4)"},
         **With(GA, ["maxpos(a+b)"]))
    emit("8GA-case2", "t8g", kind="corner", hostType="8",
         sides={"p1": "L(1,4)", "p2": "L(1,4)", "p3": "L(2,4)", "p4": "L(1,4)"},
         **With(GA, ["maxpos(a)"]))
    emit("9GA-case1", "t9g", kind="corner", hostType="9",
         sides={"p1": "R(1,4)", "p2": "R(1,4)", "p3": "L(2,4)^-1", "p4": "R(1,4)"},
         **With(GA, ["maxpos(a)"]))
    emit("9GA-case2", "t9g", kind="corner", hostType="9",
         sides={"p1": "L(2,4)", "p2": "L(1,4)", "p3": "L(1,4)", "p4": "L(2,4)"},
         **With(GA, ["maxpos(a+b)", "nonmaximal(a)"]))
    emit("10GA-case1", "t10g", kind="corner", hostType="10",
         sides={"p1": "L(2,4)", "p2": "L(1,4)", "p3": "L(1,4)", "p4": "L(2,4)"},
         **With(GA, ["maxpos(b)"], maximal=["p2", "p3"]))
    emit("10GA-case2", "t10g", kind="corner", hostType="10",
         sides={"p1": "L(1,4)", "p2": "R(2,4)^-1", "p3": "R(2,4)^-1", "p4": "L(1,4)"},
         **With(GA, maximal=["p1", "p4"]))
    emit("11GA-R1", "t11r1g", kind="corner", hostType="11R",
         sides={"p1": "L(1,4)", "p2": "R(2,4)^-1", "p3": "R(2,4)^-1", "p4": "L(1,4)"},
         **With(GA, ["maxpos(b)"], maximal=["p1", "p4"]))
    emit("11GA-R2", "t11r2g", kind="corner", hostType="11R",
         sides={"p1": "R(2,4)^-1", "p2": "L(1,4)", "p3": "L(1,4)", "p4": "R(2,4)^-1"},
         **With(GA, ["maxpos(a)"], maximal=["p2", "p3"]))
    emit("12GA-case1", "t12g", kind="corner", hostType="12",
         sides={"p1": "R(1,4)", "p2": "L(2,4)^-1", "p3": "L(2,4)^-1", "p4": "R(1,4)"},
         **With(GA, ["maxpos(a)"], maximal=["p1", "p4"]))
    emit("12GA-case2", "t12g", kind="corner", hostType="12",
         sides={"p1": "R(2,4)", "p2": "R(1,4)", "p3": "R(1,4)", "p4": "R(2,4)"},
         **With(GA, ["maxpos(b)"], maximal=["p2", "p3"]))

    # ---------------- ZA (row, zero coordinate) ----------------
    emit("1ZA", "t1", kind="conjugating", t="R(4,1)^-1", hostType="1R", **With(ZA, ["bad(c)"]))
    emit("2ZA", "t2", kind="conjugating", t="R(4,1)^-1", hostType="2R", **With(ZA, ["bad(c)"]))
    emit("3ZA", "t3", kind="commuting", t="R(4,1)", hostType="3", **ZA)
    emit("4ZA", "t4", kind="commuting", t="R(4,1)", hostType="4", **ZA)
    emit("5ZA", "t5b", kind="corner", hostType="5",
         sides={"p1": "L(2,1)^-1", "p2": "L(2,1)^-1", "p3": "R(2,1)", "p4": "R(2,1)"},
         **With(ZA, ["bad(b)", "bad(c)"], maximal=["p1"]))
    emit("6ZA", "t6", kind="conjugating", t="L(4,1)", hostType="6R", **ZA)
    emit("6pZA", "t6p", kind="conjugating", t="L(4,1)", hostType="6'R", **ZA)
    emit("7ZA", "t7", kind="commuting", t="R(4,1)", hostType="7", **ZA)
    emit("7pZA", "t7p", kind="commuting", t="R(4,1)", hostType="7'", **ZA)
    emit("8ZA-case1", "t8", kind="corner", hostType="8",
         sides={"p1": "R(4,1)^-1", "p2": "R(4,1)^-1", "p3": "R(4,2)^-1", "p4": "R(4,1)^-1"},
         **With(ZA, ["good(a)", "good(a+b)"]))
    emit("8ZA-case2", "t8", kind="corner", hostType="8",
         sides={"p1": "R(4,2)^-1", "p2": "R(4,1)", "p3": "R(4,1)", "p4": "R(4,2)^-1"},
         **With(ZA, ["good(a)", "good(b)"]))
    emit("9ZA", "t9", kind="corner", hostType="9",
         sides={"p1": "L(4,1)^-1", "p2": "L(4,1)^-1", "p3": "L(4,2)", "p4": "L(4,1)^-1"},
         **With(ZA, ["good(a)", "good(a+b)"]))
    emit("10ZA", "t10", kind="corner", hostType="10",
         sides={"p1": "R(4,1)^-1", "p2": "R(4,2)", "p3": "R(4,2)", "p4": "R(4,1)^-1"},
         **With(ZA, ["good(a)", "good(a+b)"]),
         notes="derived: the zero-coordinate analogue of 10GA via the 12ZA side pattern")
    emit("11ZA-1", "t11r1", kind="corner", hostType="11R",
         sides={"p1": "R(4,1)^-1", "p2": "R(4,2)", "p3": "R(4,2)", "p4": "R(4,1)^-1"},
         **With(ZA, ["good(a)", "good(a-c)"]), notes="derived (paper: similar to the good case)")
    emit("11ZA-2", "t11r2", kind="corner", hostType="11R",
         sides={"p1": "R(4,2)", "p2": "R(4,1)^-1", "p3": "R(4,1)^-1", "p4": "R(4,2)"},
         **With(ZA, ["good(a)"]), notes="derived (paper: similar to the good case)")
    emit("12ZA", "t12", kind="corner", hostType="12",
         sides={"p1": "R(4,1)^-1", "p2": "R(4,2)", "p3": "R(4,2)", "p4": "R(4,1)^-1"},
         **With(ZA, ["good(a)"]))

    # ---------------- GB (col, good coordinate) ----------------
    emit("1GB", "t1g", kind="conjugating", t="R(4,1)^-1", hostType="1R", **GB)
    emit("2GB", "t2g", kind="conjugating", t="R(4,1)^-1", hostType="2R", **GB)
    emit("3GB", "t3g", kind="commuting", t="R(4,1)^-1", hostType="3", **GB)
    emit("6GB", "t6g", kind="conjugating", t="R(4,1)^-1", hostType="6R", **GB)
    emit("6pGB", "t6pg", kind="conjugating", t="R(4,1)^-1", hostType="6'R", **GB)
    emit("7GB", "t7g", kind="commuting", t="R(4,1)^-1", hostType="7", **GB)
    emit("7pGB", "t7pg", kind="commuting", t="R(4,1)^-1", hostType="7'", **GB)
    emit("4GB", "t4g", kind="corner", hostType="4",
         sides={"p1": "L(4,1)^-1", "p2": "L(4,1)^-1", "p3": "L(4,2)^-1", "p4": "L(4,2)^-1"},
         **With(GB, maximal=["p1"]))
    emit("5GB", "t5bg", kind="corner", hostType="5",
         sides={"p1": "L(2,1)^-1", "p2": "L(2,1)^-1", "p3": "R(2,1)", "p4": "R(2,1)"},
         **With(GB, maximal=["p1"]))
    emit("8GB", "t8g", kind="corner", hostType="8",
         sides={"p1": "R(4,1)^-1", "p2": "R(4,1)^-1", "p3": "R(4,2)^-1", "p4": "R(4,1)^-1"},
         **GB)
    emit("9GB", "t9g", kind="corner", hostType="9",
         sides={"p1": "L(4,1)^-1", "p2": "L(4,1)^-1", "p3": "L(4,2)", "p4": "L(4,1)^-1"},
         **With(GB, ["maxpos(a)"], maximal=["p1", "p2"]))
    emit("10GB-case1", "t10g", kind="corner", hostType="10",
         sides={"p1": "R(4,1)^-1", "p2": "R(4,2)", "p3": "R(4,2)", "p4": "R(4,1)^-1"},
         **With(GB, ["maxpos(a)"], maximal=["p1", "p4"]))
    emit("10GB-case2", "t10g", kind="corner", hostType="10",
         sides={"p1": "R(4,2)^-1", "p2": "R(4,1)^-1", "p3": "R(4,1)^-1", "p4": "R(4,2)^-1"},
         **With(GB, maximal=["p2", "p3"]), notes="derived: the remaining cases of type 10 GB")
    emit("11GB-case1", "t11r1g", kind="corner", hostType="11R",
         sides={"p1": "R(4,1)^-1", "p2": "R(4,2)", "p3": "R(4,2)", "p4": "R(4,1)^-1"},
         **With(GB, ["maxpos(a)"], maximal=["p1", "p4"]))
    emit("11GB-case2", "t11r2g", kind="corner", hostType="11R",
         sides={"p1": "R(4,1)^-1", "p2": "R(4,2)^-1", "p3": "R(4,2)^-1", "p4": "R(4,1)^-1"},
         **With(GB, ["maxpos(b)"], maximal=["p1", "p4"]),
         notes="derived: the remaining case of type 11 GB")
    emit("12GB", "t12g", kind="corner", hostType="12",
         sides={"p1": "R(4,1)^-1", "p2": "R(4,2)", "p3": "R(4,2)", "p4": "R(4,1)^-1"},
         **With(GB, maximal=["p1", "p4"]),
         notes="derived: quadrilateral side cells per the Table-2 row for type 12")

    # ---------------- ZB (col, zero coordinate) ----------------
    emit("1ZB", "t1", kind="commuting", t="L(1,4)", hostType="1R", **ZB)
    emit("2ZB", "t2", kind="conjugating", t="L(1,4)", hostType="2R", **With(ZB, ["bad(b)"]))
    emit("3ZB", "t3", kind="conjugating", t="R(1,4)", hostType="3", **With(ZB, ["bad(c)"]))
    emit("4ZB", "t4", kind="conjugating", t="R(1,4)", hostType="4", **ZB)
    emit("5ZB", "t5b", kind="corner", hostType="5",
         sides={"p1": "L(1,4)", "p2": "R(3,4)^-1", "p3": "R(3,4)^-1", "p4": "L(1,4)"},
         **With(ZB, maximal=["p1"]))
    emit("6ZB", "t6", kind="commuting", t="L(1,4)", hostType="6R", **ZB)
    emit("6pZB", "t6p", kind="commuting", t="L(1,4)", hostType="6'R", **ZB)
    emit("7ZB", "t7", kind="conjugating", t="R(1,4)", hostType="7", **ZB)
    emit("7pZB", "t7p", kind="conjugating", t="R(1,4)", hostType="7'", **ZB)
    emit("8ZB", "t8", kind="corner", hostType="8",
         sides={"p1": "L(1,4)", "p2": "L(1,4)", "p3": "L(2,4)", "p4": "L(1,4)"},
         **With(ZB, ["good(a)", "good(a-b)"], maximal=["p1", "p2"]))
    emit("9ZB-case1", "t9", kind="corner", hostType="9",
         sides={"p1": "R(1,4)", "p2": "R(1,4)", "p3": "L(2,4)^-1", "p4": "R(1,4)"},
         **With(ZB, ["good(a)", "good(a-b)"], maximal=["p1", "p4"]))
    emit("9ZB-case2", "t9", kind="corner", hostType="9",
         sides={"p1": "L(2,4)", "p2": "L(1,4)", "p3": "L(1,4)", "p4": "L(2,4)"},
         **With(ZB, ["good(a)", "good(b)"], maximal=["p2", "p3"]))
    emit("10ZB-case1", "t10", kind="corner", hostType="10",
         sides={"p1": "L(2,4)", "p2": "L(1,4)", "p3": "L(1,4)", "p4": "L(2,4)"},
         **With(ZB, ["good(b)", "good(b-a)"], maximal=["p2", "p3"]))
    emit("10ZB-case2", "t10", kind="corner", hostType="10",
         sides={"p1": "L(1,4)", "p2": "R(2,4)^-1", "p3": "R(2,4)^-1", "p4": "L(1,4)"},
         **With(ZB, ["good(a)"], maximal=["p1", "p4"]))
    emit("11ZB-1", "t11r1", kind="corner", hostType="11R",
         sides={"p1": "L(1,4)", "p2": "R(2,4)^-1", "p3": "R(2,4)^-1", "p4": "L(1,4)"},
         **With(ZB, ["good(a)"], maximal=["p1", "p4"]))
    emit("11ZB-2", "t11r2", kind="corner", hostType="11R",
         sides={"p1": "R(2,4)^-1", "p2": "L(1,4)", "p3": "L(1,4)", "p4": "R(2,4)^-1"},
         **With(ZB, ["good(a)"], maximal=["p2", "p3"]))

    # ---------------- higher-dimensional variants ----------------
    emit("5GBM", "t5bg", kind="corner", hostType="5", order="step1", dim=2, k=1,
         mode="col",
         sides={"p1": "L(4,2)^-1", "p2": "L(4,2)^-1", "p3": "L(4,1)^-1", "p4": "L(4,1)^-1"},
         predicate=["goodpos(d)", "restricted(b)", "restricted(c)", "restricted(b-a)",
                    "restricted(c-a)", "any:maximal(b)|nonmaximal(c)"],
         vmaxCond=[["1", "maxpos"]], maximal=["p1"])
    emit("5ZBM-2", "t5b", kind="corner", hostType="5", order="step1", dim=2, k=1,
         mode="col",
         sides={"p1": "L(1,4)", "p2": "L(4,3)^-1", "p3": "L(4,3)^-1", "p4": "L(1,4)"},
         predicate=["zero(z)", "restricted(b)", "restricted(c)",
                    "any:maximal(c)|nonmaximal(b)"],
         vmaxCond=[["1", "goodpos"]], maximal=["p1"])

    print(f"wrote {len(os.listdir(OUT))} templates to {OUT}")


if __name__ == "__main__":
    sys.exit(main())
