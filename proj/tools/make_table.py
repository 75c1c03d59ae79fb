#!/usr/bin/env python3
"""Regenerates data/knot_table.json.

Every entry is built from an explicit combinatorial construction (braid
closure, 4-plat of a continued fraction, pretzel plat, or 6-plat word),
assembled into a PD code by walking the diagram.  The C++ test suite
re-derives each entry's Alexander polynomial with an independent
Fox-calculus oracle, so this script only has to produce structurally
valid codes; it still sanity-checks label consistency itself.

PD convention (Knot Atlas): X[a,b,c,d] lists the four arc labels
counterclockwise starting from the incoming under-strand; labels are
1..2n and consecutive along the knot.
"""
import argparse
import json
import os

# ---------------------------------------------------------------- assembler


class Crossing:
    __slots__ = ('eps', 'ports')

    def __init__(self, eps):
        self.eps = eps      # +1: the strand running TL->BR is the over-strand
        self.ports = {}     # 'TL' | 'TR' | 'BL' | 'BR' -> edge id


def build_word(word, n):
    """Lay out a braid word; word entries are (i, eps), i in 1..n-1."""
    crossings, nid = [], 0

    def fresh():
        nonlocal nid
        nid += 1
        return nid - 1

    top = [fresh() for _ in range(n)]
    cur = list(top)
    for (i, eps) in word:
        c = Crossing(eps)
        c.ports['TL'] = cur[i - 1]
        c.ports['TR'] = cur[i]
        bl, br = fresh(), fresh()
        c.ports['BL'] = bl
        c.ports['BR'] = br
        cur[i - 1], cur[i] = bl, br
        crossings.append(c)
    return crossings, top, cur


def merge(crossings, pairs):
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    for c in crossings:
        for p in c.ports:
            c.ports[p] = find(c.ports[p])


PARTNER = {'TL': 'BR', 'BR': 'TL', 'TR': 'BL', 'BL': 'TR'}
CCW = ['TL', 'BL', 'BR', 'TR']


def to_pd(crossings):
    """Traverse the (single-component) diagram and emit PD tuples."""
    ends = {}
    for ci, c in enumerate(crossings):
        for p, e in c.ports.items():
            ends.setdefault(e, []).append((ci, p))
    for e, lst in ends.items():
        if len(lst) != 2:
            raise ValueError('edge %r has %d endpoints' % (e, len(lst)))
    n = len(crossings)
    entry_label, edge_label = {}, {}
    ci, port = 0, 'TL'
    for step in range(2 * n):
        e = crossings[ci].ports[port]
        if e in edge_label:
            raise ValueError('edge visited twice; not a knot')
        edge_label[e] = step + 1
        entry_label[(ci, port)] = step + 1
        out = PARTNER[port]
        a, b = ends[crossings[ci].ports[out]]
        ci, port = b if a == (ci, out) else a
    if len(edge_label) != 2 * n:
        raise ValueError('closure is not a single component')
    pd = []
    for ci, c in enumerate(crossings):
        under_pair = ('TR', 'BL') if c.eps > 0 else ('TL', 'BR')
        under_in = under_pair[0] if (ci, under_pair[0]) in entry_label else under_pair[1]
        start = CCW.index(under_in)
        pd.append(tuple(edge_label[c.ports[CCW[(start + k) % 4]]] for k in range(4)))
    return pd


def braid_closure(word, n):
    crossings, top, bottom = build_word(word, n)
    if not crossings:
        raise ValueError('empty word')
    merge(crossings, list(zip(top, bottom)))
    return to_pd(crossings)


def plat_closure(word, n, caps):
    crossings, top, bottom = build_word(word, n)
    pairs = [(top[a], top[b]) for a, b in caps] + [(bottom[a], bottom[b]) for a, b in caps]
    merge(crossings, pairs)
    return to_pd(crossings)


def check_pd(pd):
    n = len(pd)
    two_n = 2 * n
    count = {}
    for x in pd:
        for lbl in x:
            count[lbl] = count.get(lbl, 0) + 1
    assert all(count.get(lbl, 0) == 2 for lbl in range(1, two_n + 1)), 'bad labels'
    for (a, b, c, d) in pd:
        assert c == a % two_n + 1, 'under-strand labels not consecutive'
        assert b == d % two_n + 1 or d == b % two_n + 1, 'over-strand labels not consecutive'


# ------------------------------------------------------------ constructions


def rational(cf):
    """4-plat of an odd-length positive continued fraction [a1..ak]:
    alternating twist regions sigma2^{a} / sigma1^{-a}; the determinant is
    the fraction's numerator."""
    word = []
    for idx, a in enumerate(cf):
        word += [(2, 1) if idx % 2 == 0 else (1, -1)] * a
    return plat_closure(word, 4, [(0, 1), (2, 3)])


def pretzel(p, q, r):
    """P(p, q, r): three vertical twist regions in a 6-plat."""
    word = []
    for pos, k in ((1, p), (3, q), (5, r)):
        word += [(pos, 1 if k > 0 else -1)] * abs(k)
    return plat_closure(word, 6, [(0, 5), (1, 2), (3, 4)])


def sixplat(word):
    """General 6-plat with neighbouring caps (rows of sigma2/sigma4 twists
    alternating with rows of sigma1/sigma3/sigma5 twists)."""
    return plat_closure(word, 6, [(0, 1), (2, 3), (4, 5)])


def twists(spec):
    """spec: list of (generator, signed count) -> braid word."""
    word = []
    for g, k in spec:
        word += [(g, 1 if k > 0 else -1)] * abs(k)
    return word


# Two-bridge knots by odd-length continued fraction; crossing number is
# the sum of the entries, the determinant is the fraction's numerator.
RATIONAL = {
    '3_1': [1, 1, 1],
    '4_1': [1, 1, 2],
    '5_1': [1, 3, 1],
    '5_2': [1, 1, 3],
    '6_1': [1, 1, 4],
    '6_2': [1, 1, 1, 2, 1],
    '6_3': [1, 1, 1, 1, 2],
    '7_1': [1, 5, 1],
    '7_2': [1, 1, 5],
    '7_3': [1, 2, 4],
    '7_4': [1, 2, 1, 2, 1],
    '7_5': [1, 1, 2, 2, 1],
    '7_6': [1, 1, 1, 2, 2],
    '7_7': [1, 1, 1, 1, 1, 1, 1],
    '8_1': [1, 1, 6],
    '8_2': [1, 1, 1, 4, 1],
    '8_3': [1, 3, 4],
    '8_4': [1, 2, 1, 3, 1],
    '8_6': [1, 1, 3, 2, 1],
    '8_7': [1, 1, 1, 1, 4],
    '8_8': [1, 1, 1, 3, 2],
    '8_9': [1, 2, 1, 1, 3],
    '8_11': [1, 1, 1, 2, 3],
    '8_12': [1, 1, 2, 2, 2],
    '8_13': [1, 1, 1, 1, 1, 2, 1],
    '8_14': [1, 1, 1, 1, 2, 1, 1],
}

# Braid-closure constructions (strand count, word as (generator, count)).
BRAIDS = {
    '8_10': (3, [(1, 3), (2, -1), (1, 2), (2, -2)]),
    '8_15': (4, [(1, 2), (2, 2), (1, 1), (3, 1), (2, -1), (3, 2)]),
    '8_16': (3, [(1, 2), (2, -1), (1, 2), (2, -1), (1, 1), (2, -1)]),
    '8_17': (3, [(1, 2), (2, -1), (1, 1), (2, -1), (1, 1), (2, -2)]),
    '8_18': (3, [(1, 1), (2, -1), (1, 1), (2, -1), (1, 1), (2, -1), (1, 1), (2, -1)]),
    '8_20': (3, [(1, 3), (2, -1), (1, -3), (2, -1)]),
    '8_21': (3, [(1, 3), (2, 1), (1, -2), (2, 2)]),
}

# Pretzel knots P(p, q, r).
PRETZELS = {
    '8_5': (3, 3, 2),
    '8_19': (3, 3, -2),
    '9_35': (3, 3, 3),
    '9_46': (3, 3, -3),
}

# Filled in from the diagram searches (see the repository tests for the
# independent verification of every entry).
SIXPLATS = {
    '9_37': [(2, -2), (4, -1), (3, 3), (2, -1), (4, -2)],
    '9_41': [(2, -1), (4, -1), (3, 1), (2, -1), (1, 1), (3, 2), (2, -1), (4, -1)],
    '9_47': [(2, -1), (4, -1), (3, -2), (2, -1), (4, -1), (3, 1), (2, -1), (4, -1)],
    '9_48': [(2, -2), (4, -1), (3, -3), (2, -1), (4, -2)],
    '9_49': [(2, -1), (4, -1), (3, 2), (5, 1), (4, 1), (3, -1), (2, -1), (4, 1)],
}
EXTRA_BRAIDS = {}

# Alternative diagrams of knots already present, for presentation-
# independence checks.  Suffix "_v2"; same knot, different PD code.
VARIANTS = {
    '3_1_v2': ('braid', (2, [(1, 3)])),
    '4_1_v2': ('braid', (3, [(1, 1), (2, -1), (1, 1), (2, -1)])),
    '6_2_v2': ('braid', (3, [(1, 3), (2, -1), (1, 1), (2, -1)])),
    '9_46_v2': ('pretzel', (3, -3, 3)),
    '9_48_v2': ('sixplat', [(2, -2), (4, -2), (3, -3), (2, -1), (4, -1)]),
}


def build_all():
    entries = [('unknot', [])]

    def add(name, pd):
        check_pd(pd)
        entries.append((name, [list(x) for x in pd]))

    for name in sorted(RATIONAL):
        add(name, rational(RATIONAL[name]))
    for name in sorted(BRAIDS):
        n, spec = BRAIDS[name]
        add(name, braid_closure(twists(spec), n))
    for name in sorted(EXTRA_BRAIDS):
        n, spec = EXTRA_BRAIDS[name]
        add(name, braid_closure(twists(spec), n))
    for name in sorted(PRETZELS):
        add(name, pretzel(*PRETZELS[name]))
    for name in sorted(SIXPLATS):
        add(name, sixplat(twists(SIXPLATS[name])))
    for name in sorted(VARIANTS):
        kind, arg = VARIANTS[name]
        if kind == 'braid':
            add(name, braid_closure(twists(arg[1]), arg[0]))
        elif kind == 'pretzel':
            add(name, pretzel(*arg))
        else:
            add(name, sixplat(twists(arg)))

    entries.sort(key=lambda item: (item[0] != 'unknot', len(item[1]), item[0]))
    return [{'name': n, 'pd': pd} for n, pd in entries]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    default_out = os.path.join(os.path.dirname(__file__), '..', 'data', 'knot_table.json')
    ap.add_argument('-o', '--output', default=os.path.normpath(default_out))
    args = ap.parse_args()
    table = build_all()
    with open(args.output, 'w') as f:
        json.dump(table, f, indent=1)
        f.write('\n')
    print('wrote %d entries to %s' % (len(table), args.output))


if __name__ == '__main__':
    main()
