"""Deletion channel whose deletions are confined to fixed-size windows.

A pattern names each window by the 1-indexed position of its first bit and
lists the deleted offsets inside the window (0-indexed, so offset o deletes
absolute position start + o). The textual form used by the command line is

    start:off1,off2;start:off1,...

e.g. "3:0,1,3;15:0,2" deletes positions 3, 4, 6, 15 and 17.
"""

import random
from dataclasses import dataclass


class InvalidPatternError(ValueError):
    pass


@dataclass(frozen=True)
class Window:
    start: int
    offsets: tuple

    def span_end(self, w):
        return self.start + w - 1


@dataclass(frozen=True)
class DeletionPattern:
    windows: tuple

    def __post_init__(self):
        prev_start = 0
        for win in self.windows:
            if win.start <= prev_start:
                raise InvalidPatternError("window starts must be strictly increasing")
            prev_start = win.start
            if list(win.offsets) != sorted(set(win.offsets)):
                raise InvalidPatternError("offsets must be sorted and distinct")
            if win.offsets and win.offsets[0] < 0:
                raise InvalidPatternError("offsets must be non-negative")

    @property
    def total_deletions(self):
        return sum(len(w.offsets) for w in self.windows)

    def positions(self):
        """Absolute 1-indexed deleted positions, ascending."""
        out = [w.start + o for w in self.windows for o in w.offsets]
        if sorted(set(out)) != out:
            raise InvalidPatternError("windows overlap: duplicate or unordered positions")
        return out

    def validate(self, n, w, z=None):
        """Check the pattern against a string length and window contract."""
        if z is not None and len(self.windows) > z:
            raise InvalidPatternError(f"{len(self.windows)} windows exceed the limit z={z}")
        prev_end = 0
        for win in self.windows:
            if win.offsets and win.offsets[-1] >= w:
                raise InvalidPatternError(
                    f"offset {win.offsets[-1]} falls outside a window of size {w}"
                )
            if win.start <= prev_end:
                raise InvalidPatternError("windows must not overlap")
            if win.span_end(w) > n:
                raise InvalidPatternError(
                    f"window at {win.start} sticks out of a {n}-bit string"
                )
            prev_end = win.span_end(w)
        return self


def pattern_from_text(text):
    """Parse "start:off1,off2;start:..."; an empty string is the empty pattern."""
    text = text.strip()
    if not text:
        return DeletionPattern(windows=())
    windows = []
    for part in text.split(";"):
        try:
            head, _, tail = part.partition(":")
            start = int(head)
            offsets = tuple(int(x) for x in tail.split(",")) if tail else ()
        except ValueError as exc:
            raise InvalidPatternError(f"cannot parse window {part!r}") from exc
        windows.append(Window(start=start, offsets=offsets))
    return DeletionPattern(windows=tuple(windows))


def pattern_to_text(pat):
    return ";".join(
        f"{w.start}:" + ",".join(str(o) for o in w.offsets) for w in pat.windows
    )


def delete_localized(x, pat, w=None, z=None):
    """Apply a deletion pattern to a bit string, keeping bit order.

    When w (and optionally z) are given the pattern is checked against the
    window contract first; otherwise only basic sanity holds (positions
    distinct, inside the string).
    """
    if w is not None:
        pat.validate(len(x), w, z)
    positions = pat.positions()
    if positions and (positions[0] < 1 or positions[-1] > len(x)):
        raise InvalidPatternError("deletion positions fall outside the string")
    pieces = []
    prev = 0
    for pos in positions:
        pieces.append(x[prev:pos - 1])
        prev = pos
    pieces.append(x[prev:])
    return "".join(pieces)


def sample_pattern(p, delta, rng, mode="whole-codeword"):
    """Draw a uniform channel action for code parameters p.

    Window starts are uniform over every placement of z disjoint windows
    that fit inside the codeword ("whole-codeword") or inside the message
    bits only ("systematic-only"). delta is the per-window deletion count,
    either one int for all windows or a sequence of z ints. rng is a
    random.Random, or a seed for one; equal seeds give equal patterns.
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    z = getattr(p, "z", 1)
    w = p.w
    if mode == "whole-codeword":
        domain = p.n
    elif mode == "systematic-only":
        domain = p.k
    else:
        raise ValueError(f"unknown sampling mode {mode!r}")
    deltas = list(delta) if not isinstance(delta, int) else [delta] * z
    if len(deltas) != z:
        raise InvalidPatternError(f"need {z} per-window deletion counts, got {len(deltas)}")
    for d in deltas:
        if not 0 <= d <= w:
            raise InvalidPatternError(f"per-window deletions must be in [0, {w}], got {d}")
    # Disjoint starts s_1 < ... < s_z with s_{j+1} >= s_j + w map bijectively
    # to strictly increasing t_j = s_j - (j-1)(w-1), so sampling t uniformly
    # without replacement is uniform over disjoint placements.
    room = domain - w + 1 - (z - 1) * (w - 1)
    if room < z:
        raise InvalidPatternError(
            f"cannot place {z} disjoint windows of size {w} in {domain} bits"
        )
    ts = sorted(rng.sample(range(1, room + 1), z))
    windows = []
    for j, (t, d) in enumerate(zip(ts, deltas)):
        start = t + j * (w - 1)
        offsets = tuple(sorted(rng.sample(range(w), d)))
        windows.append(Window(start=start, offsets=offsets))
    return DeletionPattern(windows=tuple(windows))
