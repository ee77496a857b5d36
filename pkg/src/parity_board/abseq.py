"""Staircase-prefixed sequences with vanishing alternating sum.

An ``ABSequence`` opens with the staircase a+1, a+2, ..., a+b, decreases
weakly afterwards, and its entries cancel under alternating signs.  The
parameters (a, b) are never supplied; they are derived from the entries and
the derivation is unique, because an entry extending the staircase would
have to exceed its predecessor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

__all__ = [
    "ABSequence",
    "EMPTY_SEQUENCE",
    "InvalidABSequence",
    "NonPositiveEntry",
    "NotWeaklyDecreasing",
    "NonzeroAlternatingSum",
    "PreconditionViolated",
    "validate",
    "enumerate_sequences",
    "check_prefix_sign_property",
    "check_pairing_property",
]


class InvalidABSequence(ValueError):
    """Entry list that fails one of the three structural conditions."""


class NonPositiveEntry(InvalidABSequence):
    pass


class NotWeaklyDecreasing(InvalidABSequence):
    pass


class NonzeroAlternatingSum(InvalidABSequence):
    pass


class PreconditionViolated(ValueError):
    """A property checker was called outside its stated domain."""


@dataclass(frozen=True)
class ABSequence:
    """Validated sequence d_1..d_l; the empty sequence has a = b = 0.

    Construction derives a = d_1 - 1 and b = length of the maximal initial
    run with d_i = a + i, then checks weak decrease past the run and that
    the alternating sum -d_1 + d_2 - d_3 + ... vanishes (which forces the
    weight to be even).
    """

    entries: tuple[int, ...]
    a: int = field(init=False)
    b: int = field(init=False)

    def __post_init__(self) -> None:
        entries = self.entries
        for d in entries:
            if d < 1:
                raise NonPositiveEntry(f"entries must be positive, got {d}")
        if not entries:
            a = b = 0
        else:
            a = entries[0] - 1
            b = 1
            while b < len(entries) and entries[b] == a + b + 1:
                b += 1
            for i in range(b - 1, len(entries) - 1):
                if entries[i] < entries[i + 1]:
                    raise NotWeaklyDecreasing(
                        f"entry {entries[i + 1]} at index {i + 2} exceeds {entries[i]}"
                    )
            alt = sum(d if i % 2 else -d for i, d in enumerate(entries))
            if alt != 0:
                raise NonzeroAlternatingSum(f"alternating sum is {alt}, not 0")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def weight(self) -> int:
        return sum(self.entries)

    @property
    def alt_sum(self) -> int:
        return sum(d if i % 2 else -d for i, d in enumerate(self.entries))

    @property
    def is_empty(self) -> bool:
        return not self.entries

    def prefix_alt_sums(self) -> tuple[int, ...]:
        """Running sums S_0 = 0, S_1 = -d_1, S_2 = -d_1 + d_2, ..., S_l."""
        sums = [0]
        for i, d in enumerate(self.entries):
            sums.append(sums[-1] + (d if i % 2 else -d))
        return tuple(sums)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.entries)) + "}"


EMPTY_SEQUENCE = ABSequence(())


def validate(raw: Iterable[int]) -> ABSequence:
    """Validate an entry list, deriving (a, b); the empty list is allowed."""
    return ABSequence(tuple(raw))


def enumerate_sequences(a: int, b: int, half_weight: int) -> list[ABSequence]:
    """All sequences with parameters (a, b) and weight ``2 * half_weight``.

    The staircase prefix is fixed; tails are generated in descending
    lexicographic order, so the output order is deterministic.  A partial
    tail is abandoned once the unplaced weight cannot cancel the running
    alternating sum, since each later entry moves the sum by at most itself.
    """
    if a < 0:
        raise ValueError("a must be nonnegative")
    if b < 1:
        raise ValueError("b must be positive")
    if half_weight < 0:
        raise ValueError("half_weight must be nonnegative")
    prefix = tuple(range(a + 1, a + b + 1))
    remaining = 2 * half_weight - sum(prefix)
    if remaining < 0:
        return []
    alt = sum(d if i % 2 else -d for i, d in enumerate(prefix))

    out: list[ABSequence] = []
    tail: list[int] = []

    def extend(bound: int, remaining: int, alt: int, pos: int) -> None:
        if remaining == 0:
            if alt == 0:
                out.append(ABSequence(prefix + tuple(tail)))
            return
        if abs(alt) > remaining:
            return
        for v in range(min(bound, remaining), 0, -1):
            tail.append(v)
            extend(v, remaining - v, alt + (v if pos % 2 == 0 else -v), pos + 1)
            tail.pop()

    extend(a + b, remaining, alt, b + 1)
    return out


def check_prefix_sign_property(d: ABSequence) -> bool:
    """No two consecutive running alternating sums are strictly same-signed."""
    sums = d.prefix_alt_sums()
    return not any(sums[m] * sums[m + 1] > 0 for m in range(1, d.length))


def check_pairing_property(d: ABSequence, n: int) -> bool:
    """Once the first ``n`` entries cancel, the rest pair up as equal couples.

    Requires ``n >= b - 1`` and a vanishing n-th running alternating sum;
    anything else raises :class:`PreconditionViolated`.  Returns True when
    ``n`` has the parity of the length and entries n+1..l form equal adjacent
    pairs (weak decrease between pairs already holds by construction).
    """
    if n < d.b - 1 or n > d.length:
        raise PreconditionViolated(f"n={n} outside [b-1, l] = [{d.b - 1}, {d.length}]")
    if d.prefix_alt_sums()[n] != 0:
        raise PreconditionViolated(f"running alternating sum at {n} is nonzero")
    if (d.length - n) % 2:
        return False
    return all(d.entries[i] == d.entries[i + 1] for i in range(n, d.length - 1, 2))
