#!/usr/bin/env python3
"""Regenerates the synthetic solution-set fixtures.

Output is deterministic (fixed seeds). Each generated set is checked for
the structural properties the tests rely on before it is written.
"""
import itertools
import json
import random
from pathlib import Path

HERE = Path(__file__).resolve().parent


def write(name, doc):
    (HERE / name).write_text(json.dumps(doc, indent=1) + "\n")


def pfnet_minimax(dist):
    """Edges kept by Pathfinder with r=inf, q=n-1 (union of all MSTs)."""
    n = len(dist)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = sorted((dist[i][j], i, j) for i, j in itertools.combinations(range(n), 2))
    kept = []
    k = 0
    while k < len(edges):
        group = [e for e in edges[k:] if e[0] == edges[k][0]]
        kept += [(i, j) for _, i, j in group if find(i) != find(j)]
        for _, i, j in group:
            parent[find(i)] = find(j)
        k += len(group)
    return kept


def toy():
    s_toy = [
        [1, 0.8, 0.7, 0.1, 0.1, 0.1, 0.1],
        [0.8, 1, 0.7, 0.1, 0.6, 0.1, 0.5],
        [0.7, 0.7, 1, 0.1, 0.1, 0.1, 0.1],
        [0.1, 0.1, 0.1, 1, 0.65, 0.1, 0.1],
        [0.1, 0.6, 0.1, 0.65, 1, 0.7, 0.1],
        [0.1, 0.1, 0.1, 0.1, 0.7, 1, 0.1],
        [0.1, 0.5, 0.1, 0.1, 0.1, 0.1, 1],
    ]
    write("toy_matrix.json", {"n": 7, "values": s_toy})
    # Minimization front: solution 1 has the lowest objective 1 and the
    # highest objective 2.
    objectives = {1: (1.0, 9.0), 3: (1.5, 7.5), 2: (2.0, 6.0), 7: (3.0, 4.5),
                  5: (4.0, 3.5), 4: (6.0, 2.0), 6: (7.0, 1.0)}
    write("toy_solutions.json", {
        "objectives": [{"name": "f1", "sense": "min"}, {"name": "f2", "sense": "min"}],
        "solutions": [{"id": i, "objectives": list(objectives[i]), "design": {"kind": "none"}}
                      for i in range(1, 8)],
    })


def tsalbp():
    rng = random.Random(420)
    tasks = 30

    def partition(m):
        cuts = sorted(rng.sample(range(1, tasks), m - 1))
        bounds = [0] + cuts + [tasks]
        return [list(range(bounds[k], bounds[k + 1])) for k in range(m)]

    def perturb(stations):
        out = [list(s) for s in stations]
        k = rng.randrange(len(out) - 1)
        if len(out[k]) > 1:
            out[k + 1].insert(0, out[k].pop())
        return out

    solutions = []
    base = None
    for idx, m in enumerate(range(4, 17)):
        if base is None or len(base) != m or rng.random() < 0.4:
            stations = partition(m)
        else:
            stations = perturb(base)
        base = stations
        area = round(180.0 - 9.5 * m + rng.uniform(-2.0, 2.0), 2)
        solutions.append({"stations": stations, "m": m, "area": area})
    # Largest station count first so id 13 has the fewest stations.
    solutions.sort(key=lambda s: -s["m"])
    write("tsalbp_13.json", {
        "objectives": [{"name": "stations", "sense": "min"}, {"name": "area", "sense": "min"}],
        "solutions": [{"id": i + 1, "objectives": [s["m"], s["area"]],
                       "design": {"kind": "assignment", "stations": s["stations"]}}
                      for i, s in enumerate(solutions)],
    })


def ensembles():
    pool = 100
    for seed in range(10000):
        rng = random.Random(seed)
        strings = []
        current = [1 if rng.random() < 0.3 else 0 for _ in range(pool)]
        for _ in range(15):
            strings.append(list(current))
            base = list(rng.choice(strings))
            flips = rng.randint(5, 14)
            for k in rng.sample(range(pool), flips):
                base[k] ^= 1
            current = base
        counts = [sum(s) for s in strings]
        if len(set(counts)) != 15:
            continue
        dist = [[sum(a != b for a, b in zip(x, y)) for y in strings] for x in strings]
        if any(dist[i][j] == 0 for i in range(15) for j in range(15) if i != j):
            continue
        kept = pfnet_minimax(dist)
        hd = [dist[i][j] for i, j in kept]
        if min(hd) == 5 and max(hd) == 14:
            break
    else:
        raise SystemExit("no ensemble fixture found")
    order = sorted(range(15), key=lambda i: -counts[i])
    solutions = []
    for rank, i in enumerate(order):
        complexity = counts[i]
        accuracy = round(0.52 + 0.004 * complexity, 4)
        solutions.append({"id": rank + 1, "objectives": [accuracy, complexity],
                          "design": {"kind": "binary", "bits": "".join(map(str, strings[i]))}})
    write("ensembles_15.json", {
        "objectives": [{"name": "accuracy", "sense": "max"}, {"name": "complexity", "sense": "min"}],
        "pool_size": pool,
        "solutions": solutions,
    })


def queries():
    rng = random.Random(26)
    terms = [f"t{k}" for k in range(1, 41)]
    ops = ["AND", "OR", "NOT"]

    def random_query(length):
        out = []
        for k in range(length):
            out.append(rng.choice(ops) if k % 2 == 0 else rng.choice(terms))
        return out

    def edit(query, count):
        out = list(query)
        for _ in range(count):
            pos = rng.randrange(len(out))
            choice = rng.random()
            if choice < 0.5:
                out[pos] = rng.choice(terms if out[pos].startswith("t") else ops)
            elif choice < 0.75 and len(out) > 4:
                del out[pos]
            else:
                out.insert(pos, rng.choice(terms))
        return out

    loner = random_query(9)
    middle = random_query(11)
    tail = random_query(7)
    designs = [loner]
    for _ in range(19):
        designs.append(edit(middle, rng.randint(1, 3)))
    for _ in range(6):
        designs.append(edit(tail, rng.randint(1, 2)))
    solutions = []
    for i, tokens in enumerate(designs):
        precision = round(0.95 - 0.025 * i + rng.uniform(0, 0.01), 4)
        recall = round(0.20 + 0.028 * i + rng.uniform(0, 0.01), 4)
        solutions.append({"id": i + 1, "objectives": [precision, recall],
                          "design": {"kind": "tokens", "tokens": tokens}})
    write("queries_26.json", {
        "objectives": [{"name": "precision", "sense": "max"}, {"name": "recall", "sense": "max"}],
        "solutions": solutions,
    })


if __name__ == "__main__":
    toy()
    tsalbp()
    ensembles()
    queries()
