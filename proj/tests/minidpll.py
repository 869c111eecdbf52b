#!/usr/bin/env python3
"""Tiny DPLL SAT solver with SAT-competition output.

Used by the tests as the "external solver" command; intentionally independent
of the library's internal coloring search.
"""
import sys

sys.setrecursionlimit(100000)


def parse(path):
    nvars = 0
    clauses = []
    with open(path) as f:
        for line in f:
            tok = line.split()
            if not tok or tok[0] == "c":
                continue
            if tok[0] == "p":
                nvars = int(tok[2])
                continue
            lits = [int(x) for x in tok]
            if lits[-1] != 0:
                raise ValueError("clause not 0-terminated")
            clauses.append(lits[:-1])
    return nvars, clauses


def simplify(clauses, lit):
    out = []
    for c in clauses:
        if lit in c:
            continue
        nc = [l for l in c if l != -lit]
        if not nc:
            return None
        out.append(nc)
    return out


def dpll(clauses, assign):
    while True:
        unit = next((c[0] for c in clauses if len(c) == 1), None)
        if unit is None:
            break
        assign = dict(assign)
        assign[abs(unit)] = unit > 0
        clauses = simplify(clauses, unit)
        if clauses is None:
            return None
    if not clauses:
        return assign
    lit = clauses[0][0]
    for choice in (lit, -lit):
        rest = simplify(clauses, choice)
        if rest is None:
            continue
        a2 = dict(assign)
        a2[abs(choice)] = choice > 0
        model = dpll(rest, a2)
        if model is not None:
            return model
    return None


def main():
    nvars, clauses = parse(sys.argv[1])
    model = None if any(not c for c in clauses) else dpll(clauses, {})
    if model is None:
        print("s UNSATISFIABLE")
        return
    lits = [v if model.get(v, False) else -v for v in range(1, nvars + 1)]
    print("s SATISFIABLE")
    print("v " + " ".join(str(l) for l in lits) + " 0")


if __name__ == "__main__":
    main()
