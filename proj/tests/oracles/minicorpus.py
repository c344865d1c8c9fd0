#!/usr/bin/env python3
"""Generates the bundled SOC mini-corpus and its expected verdicts.

Rules are re-implemented here from their definitions, independently of the
C++ engine. Resolute choices use the identity priority (lower id first);
STV drops the highest id among tied last-place alternatives.

usage: minicorpus.py OUT_DIR
"""
import itertools
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

CC_RULES = ["plurality", "borda", "veto", "stv", "maximin", "copeland:1/2", "black", "schulze"]
PAR_RULES = ["plurality", "borda", "veto", "stv", "maximin", "copeland:1/2", "black", "schulze", "rankedpairs"]


def margin(votes, a, b):
    return sum(c if r.index(a) < r.index(b) else -c for r, c in votes.items())


def margins(votes, m):
    return {(a, b): margin(votes, a, b) for a in range(1, m + 1) for b in range(1, m + 1) if a != b}


def condorcet_winner(votes, m):
    M = margins(votes, m)
    for a in range(1, m + 1):
        if all(M[a, b] > 0 for b in range(1, m + 1) if b != a):
            return a
    return None


def vector(name, m):
    if name == "plurality":
        return [1] + [0] * (m - 1)
    if name == "borda":
        return list(range(m - 1, -1, -1))
    if name == "veto":
        return [1] * (m - 1) + [0]
    raise ValueError(name)


def argmax(score):
    best = max(score.values())
    return sorted(a for a, v in score.items() if v == best)


def scoring(votes, m, s):
    score = {a: 0 for a in range(1, m + 1)}
    for r, c in votes.items():
        for pos, a in enumerate(r):
            score[a] += c * s[pos]
    return argmax(score)


def first_place(votes, alive):
    score = {a: 0 for a in alive}
    for r, c in votes.items():
        top = next(a for a in r if a in alive)
        score[top] += c
    return score


def stv_all(votes, m):
    winners = set()
    seen = set()

    def go(alive):
        if alive in seen:
            return
        seen.add(alive)
        if len(alive) == 1:
            winners.update(alive)
            return
        sc = first_place(votes, alive)
        low = min(sc.values())
        for a in alive:
            if sc[a] == low:
                go(alive - {a})

    go(frozenset(range(1, m + 1)))
    return sorted(winners)


def stv_resolute(votes, m):
    alive = set(range(1, m + 1))
    while len(alive) > 1:
        sc = first_place(votes, alive)
        low = min(sc.values())
        alive.remove(max(a for a in alive if sc[a] == low))
    return alive.pop()


def maximin(votes, m):
    M = margins(votes, m)
    return argmax({a: min(M[a, b] for b in range(1, m + 1) if b != a) for a in range(1, m + 1)})


def copeland(votes, m, alpha=Fraction(1, 2)):
    M = margins(votes, m)
    score = {}
    for a in range(1, m + 1):
        score[a] = sum(1 if M[a, b] > 0 else alpha if M[a, b] == 0 else 0 for b in range(1, m + 1) if b != a)
    return argmax(score)


def black(votes, m):
    cw = condorcet_winner(votes, m)
    return [cw] if cw else scoring(votes, m, vector("borda", m))


def schulze(votes, m):
    M = margins(votes, m)
    alts = range(1, m + 1)
    p = {(a, b): max(M[a, b], 0) for a in alts for b in alts if a != b}
    for k in alts:
        for i in alts:
            for j in alts:
                if len({i, j, k}) == 3:
                    p[i, j] = max(p[i, j], min(p[i, k], p[k, j]))
    return [a for a in alts if all(p[a, b] >= p[b, a] for b in alts if b != a)]


def ranked_pairs_resolute(votes, m):
    M = margins(votes, m)
    edges = sorted(((a, b) for (a, b), w in M.items() if w > 0), key=lambda e: (-M[e], e[0], e[1]))
    locked = set()

    def reaches(x, y):
        stack, seen = [x], set()
        while stack:
            u = stack.pop()
            if u == y:
                return True
            if u in seen:
                continue
            seen.add(u)
            stack.extend(v for (w, v) in locked if w == u)
        return False

    for a, b in edges:
        if not reaches(b, a):
            locked.add((a, b))
    return min(a for a in range(1, m + 1) if not any(v == a for (_, v) in locked))


def cowinners(rule, votes, m):
    if rule in ("plurality", "borda", "veto"):
        return scoring(votes, m, vector(rule, m))
    return {"stv": stv_all, "maximin": maximin, "copeland:1/2": copeland, "black": black, "schulze": schulze}[rule](
        votes, m)


def resolute(rule, votes, m):
    if not votes:
        return 1
    if rule == "stv":
        return stv_resolute(votes, m)
    if rule == "rankedpairs":
        return ranked_pairs_resolute(votes, m)
    return cowinners(rule, votes, m)[0]


def cc(rule, votes, m):
    cw = condorcet_winner(votes, m)
    return cw is None or cw in cowinners(rule, votes, m)


def par(rule, votes, m):
    before = resolute(rule, votes, m)
    for r in votes:
        rest = dict(votes)
        rest[r] -= 1
        if rest[r] == 0:
            del rest[r]
        after = resolute(rule, rest, m)
        if r.index(after) < r.index(before):
            return False
    return True


def random_votes(rng, m, n):
    pool = [tuple(rng.sample(range(1, m + 1), m)) for _ in range(rng.randint(2, 5))]
    votes = {}
    for _ in range(n):
        r = rng.choice(pool) if rng.random() < 0.8 else tuple(rng.sample(range(1, m + 1), m))
        votes[r] = votes.get(r, 0) + 1
    return votes


def legacy(votes, m, ids, names):
    lines = [str(m)] + [f"{ids[a - 1]},{names[a - 1]}" for a in range(1, m + 1)]
    n = sum(votes.values())
    lines.append(f"{n},{n},{len(votes)}")
    for r, c in sorted(votes.items(), key=lambda x: -x[1]):
        lines.append(",".join([str(c)] + [str(ids[a - 1]) for a in r]))
    return "\n".join(lines) + "\n"


def current(fname, title, votes, m, ids, names):
    n = sum(votes.values())
    lines = [f"# FILE NAME: {fname}", f"# TITLE: {title}", "# DATA TYPE: soc",
             f"# NUMBER ALTERNATIVES: {m}", f"# NUMBER VOTERS: {n}", f"# NUMBER UNIQUE ORDERS: {len(votes)}"]
    lines += [f"# ALTERNATIVE NAME {ids[a - 1]}: {names[a - 1]}" for a in range(1, m + 1)]
    for r, c in sorted(votes.items(), key=lambda x: -x[1]):
        lines.append(f"{c}: " + ",".join(str(ids[a - 1]) for a in r))
    return "\n".join(lines) + "\n"


def verdicts(votes, m):
    out = {f"CC/{r}": cc(r, votes, m) for r in CC_RULES}
    out.update({f"Par/{r}": par(r, votes, m) for r in PAR_RULES})
    return out


def build(out_dir):
    rng = random.Random(20240611)
    # (m, legacy?, wanted failure or None)
    plan = [(3, True, "CC/plurality"), (3, False, None), (3, True, "CC/veto"), (3, False, "Par/stv"),
            (4, True, None), (4, False, "CC/borda"), (4, True, "Par/copeland:1/2"),
            (5, False, "CC/plurality"), (5, True, None), (5, False, "CC/stv")]
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest = []
    for i, (m, is_legacy, want) in enumerate(plan, 1):
        while True:
            votes = random_votes(rng, m, rng.randint(5, 31))
            v = verdicts(votes, m)
            if want is None or not v[want]:
                break
        ids = [10 * (a + i) for a in range(1, m + 1)] if i % 3 == 0 else list(range(1, m + 1))
        names = [f"cand-{chr(96 + a)}" for a in range(1, m + 1)]
        fname = f"mini-{i:02d}.soc"
        text = legacy(votes, m, ids, names) if is_legacy else current(fname, f"mini corpus {i}", votes, m, ids, names)
        (out_dir / fname).write_text(text)
        manifest.append({"file": fname, "m": m, "n": sum(votes.values()), "format": "legacy" if is_legacy else "current",
                         "verdicts": v})
    (out_dir / "manifest.json").write_text(json.dumps(manifest, indent=1) + "\n")


if __name__ == "__main__":
    build(Path(sys.argv[1]))
