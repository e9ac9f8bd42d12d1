"""Seeded 64-bit generator used for every randomized instance.

SplitMix64 (Steele, Lea, Flood 2014).  Integers in ``[lo, hi]`` are drawn
as ``lo + next() % (hi - lo + 1)``; the slight modulo bias is accepted so
that other implementations can reproduce the exact stream.
"""

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed=0):
        self.state = seed & MASK64

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo, hi):
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.next() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]

    def shuffle(self, items):
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(0, i)
            items[i], items[j] = items[j], items[i]
        return items

    def fork(self, tag):
        """Independent child stream keyed by an integer tag."""
        return SplitMix64(self.next() ^ ((tag * 0xD1B54A32D192ED03) & MASK64))
