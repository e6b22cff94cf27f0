"""The operad of group words: arity n carries the set underlying the free
group on x_1..x_n, composition substitutes a word into a generator slot and
freely reduces, and the symmetric group permutes generator indices.

Letters are stored as signed integers: +i for x_i, -i for its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, NotAGroup, OperadMismatch, PositionOutOfRange
from .operad_core import OperadDescriptor


def _reduce_letters(letters):
    out = []
    for v in letters:
        if out and out[-1] == -v:
            out.pop()
        else:
            out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class ReducedWord:
    """A freely reduced word; arity bounds the generator indices that may occur."""

    arity: int
    letters: tuple

    def __post_init__(self):
        if self.arity < 0:
            raise ValueError("negative arity")
        for v in self.letters:
            if v == 0 or abs(v) > self.arity:
                raise IndexOutOfRange(f"letter {v} out of range for arity {self.arity}")
        if self.letters != _reduce_letters(self.letters):
            raise ValueError(f"letters {self.letters} are not freely reduced")

    @classmethod
    def _raw(cls, arity, letters):
        # internal: letters already reduced and in range
        w = object.__new__(cls)
        object.__setattr__(w, "arity", arity)
        object.__setattr__(w, "letters", letters)
        return w

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "e"
        return " ".join(f"x{v}" if v > 0 else f"x{-v}^-1" for v in self.letters)

    def inverse(self):
        return ReducedWord(self.arity, tuple(-v for v in reversed(self.letters)))


def word(arity, letters) -> ReducedWord:
    """Build a reduced word from signed letters, reducing if necessary."""
    return free_reduce(letters, arity)


def free_reduce(letters, arity: int) -> ReducedWord:
    """The unique reduced form, by stack cancellation of adjacent inverse pairs."""
    for v in letters:
        if v == 0 or abs(v) > arity:
            raise IndexOutOfRange(f"letter {v} out of range for arity {arity}")
    return ReducedWord._raw(arity, _reduce_letters(letters))


def word_compose(w1: ReducedWord, i: int, w2: ReducedWord) -> ReducedWord:
    """Substitute w2 for x_i in w1.

    w2's generators are shifted to occupy slots i..i+n-1, generators of w1
    above i are shifted up by n-1, and an inverted occurrence of x_i receives
    the inverse word.  The raw result is freely reduced.
    """
    m, n = w1.arity, w2.arity
    if not 1 <= i <= m:
        raise PositionOutOfRange(f"slot {i} out of 1..{m}")
    shift2 = i - 1
    shift1 = n - 1
    if shift2:
        block = tuple(v + shift2 if v > 0 else v - shift2 for v in w2.letters)
    else:
        block = w2.letters
    block_inv = None
    out = []
    for v in w1.letters:
        if v == i:
            seq = block
        elif v == -i:
            if block_inv is None:
                block_inv = tuple(-x for x in reversed(block))
            seq = block_inv
        else:
            if v > i:
                x = v + shift1
            elif v < -i:
                x = v - shift1
            else:
                x = v
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
            continue
        for x in seq:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return ReducedWord._raw(m + n - 1, tuple(out))


def word_perm_act(sigma, w: ReducedWord) -> ReducedWord:
    """Relabel generator indices by sigma; relabelling preserves reducedness."""
    if len(sigma) != w.arity or len(set(sigma)) != w.arity:
        raise OperadMismatch("not a permutation of the word's generators")
    return ReducedWord._raw(
        w.arity,
        tuple(sigma[v - 1] if v > 0 else -sigma[-v - 1] for v in w.letters),
    )


def group_eval(w: ReducedWord, G, args):
    """Evaluate a word in a finite group: the left-to-right product of the
    substituted letters, with inverse exponents using the group inverse.

    G is a FiniteMonoidTable; it is checked to be a group.  args are element
    indices, one per generator slot.
    """
    G.require_group()
    if len(args) != w.arity:
        raise OperadMismatch(f"expected {w.arity} arguments, got {len(args)}")
    acc = G.unit
    for v in w.letters:
        g = args[v - 1] if v > 0 else G.inverse(args[-v - 1])
        acc = G.mul(acc, g)
    return acc


def semigroup_eval(w: ReducedWord, mul, involution, unit, args):
    """Evaluate a word in a unital semigroup with involution: inverse letters
    go through the involution, the empty word gives the unit."""
    acc = unit
    for v in w.letters:
        g = args[v - 1] if v > 0 else involution(args[-v - 1])
        acc = mul(acc, g)
    return acc


def word_enumerate(n: int, max_length: int):
    """All reduced words of length <= max_length, ordered by length and then
    lexicographically with x_1 < x_1^-1 < x_2 < ..."""
    if max_length < 0:
        raise ValueError("negative length bound")
    alphabet = []
    for g in range(1, n + 1):
        alphabet.append(g)
        alphabet.append(-g)
    out = [ReducedWord._raw(n, ())]
    layer = [()]
    for _ in range(max_length):
        nxt = []
        for prefix in layer:
            for a in alphabet:
                if prefix and prefix[-1] == -a:
                    continue
                nxt.append(prefix + (a,))
        out.extend(ReducedWord._raw(n, t) for t in nxt)
        layer = nxt
    return out


def reduced_word_count(n: int, length: int) -> int:
    """Closed form: 1 word of length 0, 2n(2n-1)^(L-1) of length L >= 1."""
    if length == 0:
        return 1
    if n == 0:
        return 0
    return 2 * n * (2 * n - 1) ** (length - 1)


def format_word(w: ReducedWord) -> str:
    return str(w)


def parse_word(s: str, arity: int) -> ReducedWord:
    """Inverse of str(): tokens like "x2" or "x2^-1" separated by spaces;
    "e" (or nothing) is the empty word."""
    s = s.strip()
    if s in ("", "e"):
        return ReducedWord(arity, ())
    letters = []
    for tok in s.split():
        if not tok.startswith("x"):
            raise ValueError(f"bad token {tok!r}")
        body = tok[1:]
        if body.endswith("^-1"):
            letters.append(-int(body[:-3]))
        else:
            letters.append(int(body))
    return free_reduce(letters, arity)


def word_operad() -> OperadDescriptor:
    return OperadDescriptor(
        name="word",
        compose=word_compose,
        act=word_perm_act,
        unit=ReducedWord(1, (1,)),
        arity_of=lambda w: w.arity,
        enumerate_arity=lambda n, size_bound: word_enumerate(n, size_bound),
        element_type=ReducedWord,
    )
