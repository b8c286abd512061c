"""The canonical reduced-word automaton on small inversion sets.

States are subsets of the small roots, encoded as bitmasks over the frozen
indexing of SmallRootSet; state 0 is the empty set, every state is
accepting, and the transition on s is defined iff alpha_s is not in the
state.  Reading a word u letter by letter the state tracks
Sigma cap N(u^{-1}), so a run hits an undefined transition exactly when
the word stops being reduced.
"""

from collections import deque


class Automaton:
    """Deterministic acceptor of reduced words (all states accepting)."""

    def __init__(self, rs, sigma, states, transitions):
        self.rs = rs
        self.sigma = sigma
        self.rank = rs.rank
        self.states = tuple(states)        # bitmasks; states[0] == 0
        self.transitions = tuple(tuple(row) for row in transitions)
        self.state_index = {mask: i for i, mask in enumerate(self.states)}

    def __len__(self):
        return len(self.states)

    def step(self, state, s):
        """Next state index, or None when the transition is undefined."""
        return self.transitions[state][s]

    def run(self, word):
        state = 0
        for s in word:
            state = self.transitions[state][s]
            if state is None:
                return None
        return state


def _reflection_table(rs, sigma):
    """table[i][s] = index of s . sigma_i inside Sigma, or None."""
    table = []
    for root in sigma:
        row = []
        for s in range(rs.rank):
            row.append(sigma.index_of(rs.vec_key(rs.reflect(s, root.coords))))
        table.append(tuple(row))
    return table


def _close(rs, sigma, delta):
    start = 0
    states = [start]
    index = {start: 0}
    transitions = []
    queue = deque([start])
    while queue:
        mask = queue.popleft()
        row = []
        for s in range(rs.rank):
            new = delta(mask, s)
            if new is None:
                row.append(None)
            else:
                if new not in index:
                    index[new] = len(states)
                    states.append(new)
                    queue.append(new)
                row.append(index[new])
        transitions.append(row)
    return states, transitions


def build_automaton(rs, sigma):
    """Build the automaton with delta(A, s) = {alpha_s} u (s A cap Sigma)."""
    table = _reflection_table(rs, sigma)
    simple_bit = [1 << sigma.simple_index[s] for s in range(rs.rank)]

    def delta(mask, s):
        if mask & simple_bit[s]:
            return None
        new = simple_bit[s]
        m = mask
        i = 0
        while m:
            if m & 1:
                j = table[i][s]
                if j is not None:
                    new |= 1 << j
            m >>= 1
            i += 1
        return new

    states, transitions = _close(rs, sigma, delta)
    return Automaton(rs, sigma, states, transitions)


def build_shortlex_automaton(rs, sigma):
    """Acceptor of ShortLex normal forms.

    Same transition as the reduced-word automaton, plus poison bits: after
    reading s, the roots s . alpha_j for j < s are marked as if they were
    inversions, which rejects any continuation that a lexicographically
    smaller reduced word could also reach."""
    table = _reflection_table(rs, sigma)
    simple_bit = [1 << sigma.simple_index[s] for s in range(rs.rank)]

    def delta(mask, s):
        if mask & simple_bit[s]:
            return None
        new = simple_bit[s]
        m = mask
        i = 0
        while m:
            if m & 1:
                j = table[i][s]
                if j is not None:
                    new |= 1 << j
            m >>= 1
            i += 1
        for j in range(s):
            t = table[sigma.simple_index[j]][s]
            if t is not None:
                new |= 1 << t
        return new

    states, transitions = _close(rs, sigma, delta)
    return Automaton(rs, sigma, states, transitions)


def is_reduced(aut, word):
    """True iff the run never hits an undefined transition."""
    return aut.run(word) is not None


def _path_counts(aut, k):
    counts = [0] * len(aut.states)
    counts[0] = 1
    series = [1]
    for _ in range(k):
        new = [0] * len(aut.states)
        for i, row in enumerate(aut.transitions):
            c = counts[i]
            if c:
                for t in row:
                    if t is not None:
                        new[t] += c
        counts = new
        series.append(sum(counts))
    return series


def growth_series(aut, k):
    """Number of reduced words of each length 0..k (exact big integers)."""
    return _path_counts(aut, k)


def count_elements(rs, sigma, k):
    """Number of distinct group elements of each length 0..k.

    Counts paths in the ShortLex acceptor, under the bijection between
    elements and their normal forms; cross-checked elsewhere against a
    brute-force BFS with normal-form dedup."""
    cache = rs._caches.setdefault("shortlex_aut", {})
    key = id(sigma)
    if key not in cache:
        cache[key] = build_shortlex_automaton(rs, sigma)
    return _path_counts(cache[key], k)


def export_dot(aut):
    """DOT text for the automaton; byte-stable across runs."""
    lines = ["digraph reduced_words {", "  rankdir=LR;",
             '  start [shape=point, label=""];']
    for i, mask in enumerate(aut.states):
        idxs = [j for j in range(len(aut.sigma)) if mask >> j & 1]
        label = "%d: {%s}" % (mask, ",".join(str(j) for j in idxs))
        lines.append('  n%d [shape=circle, label="%s"];' % (i, label))
    lines.append("  start -> n0;")
    for i, row in enumerate(aut.transitions):
        for s, t in enumerate(row):
            if t is not None:
                lines.append('  n%d -> n%d [label="s%d"];' % (i, t, s))
    lines.append("}")
    return "\n".join(lines) + "\n"
