"""Words in free groups.

A :class:`Word` is an element of the free group ``F_n`` on ``x1, ..., xn``,
stored as a tuple of syllables ``(var, exp)`` in freely reduced form.
Reduction happens at construction, so structural equality is free
equivalence and words are safe to hash.

Conventions (fixed throughout the package)::

    w^y     = y^-1 w y
    [u, w]  = u^-1 w^-1 u w
    [a, b, c, ...] = [[a, b], c], ...   (left-normed)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Syllable = tuple[int, int]

# default cap on the number of variables produced by s_iterate
S_ITERATE_MAX_ARITY = 4096


def free_reduce(raw: Iterable[Syllable]) -> tuple[Syllable, ...]:
    """Freely reduce a sequence of ``(var, exp)`` syllables.

    Zero exponents are dropped and adjacent syllables with the same variable
    are merged, cascading through cancellations.

    >>> free_reduce([(1, 1), (2, 3), (2, -3), (1, 1)])
    ((1, 2),)
    """
    stack: list[Syllable] = []
    for var, exp in raw:
        if exp == 0:
            continue
        if stack and stack[-1][0] == var:
            total = stack[-1][1] + exp
            if total == 0:
                stack.pop()
            else:
                stack[-1] = (var, total)
        else:
            stack.append((var, exp))
    return tuple(stack)


@dataclass(frozen=True, eq=False)
class Word:
    """A freely reduced word on variables ``1..arity``.

    Two words compare equal iff they are freely equivalent; ``arity`` is the
    ambient number of variables and does not take part in equality.
    """

    syllables: tuple[Syllable, ...] = ()
    arity: int = field(default=0)

    def __post_init__(self):
        syl = free_reduce((int(v), int(e)) for v, e in self.syllables)
        for v, _ in syl:
            if v < 1:
                raise ValueError(f"variable index must be positive, got {v}")
        top = max((v for v, _ in syl), default=0)
        arity = max(int(self.arity), top, 1)
        object.__setattr__(self, "syllables", syl)
        object.__setattr__(self, "arity", arity)

    # construction helpers

    @classmethod
    def identity(cls, arity: int = 1) -> Word:
        return cls((), arity)

    @classmethod
    def var(cls, i: int, arity: int = 0) -> Word:
        return cls(((i, 1),), arity)

    @classmethod
    def from_letters(cls, letters: Iterable[int], arity: int = 0) -> Word:
        """Build from signed letters: ``k`` is ``x_k``, ``-k`` is ``x_k^-1``."""
        return cls(tuple((abs(a), 1 if a > 0 else -1) for a in letters), arity)

    # protocol

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.syllables == other.syllables

    def __hash__(self):
        return hash(self.syllables)

    def __len__(self):
        """Length in letters, i.e. the sum of absolute exponents."""
        return sum(abs(e) for _, e in self.syllables)

    def __bool__(self):
        return bool(self.syllables)

    def __repr__(self):
        from .wordparse import render_word

        return f"Word({render_word(self)!r}, arity={self.arity})"

    def __str__(self):
        from .wordparse import render_word

        return render_word(self)

    def __mul__(self, other: Word) -> Word:
        return word_multiply(self, other)

    def __pow__(self, k: int) -> Word:
        return word_power(self, k)

    def __invert__(self) -> Word:
        return word_invert(self)

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def variables(self) -> set[int]:
        return {v for v, _ in self.syllables}

    def letters(self) -> list[int]:
        out = []
        for v, e in self.syllables:
            out.extend([v if e > 0 else -v] * abs(e))
        return out

    def with_arity(self, arity: int) -> Word:
        return Word(self.syllables, arity)


def word_multiply(a: Word, b: Word) -> Word:
    return Word(a.syllables + b.syllables, max(a.arity, b.arity))


def word_invert(a: Word) -> Word:
    return Word(tuple((v, -e) for v, e in reversed(a.syllables)), a.arity)


def word_conjugate(a: Word, y: Word) -> Word:
    """``a^y = y^-1 a y``."""
    return word_invert(y) * a * y


def _commutator2(a: Word, b: Word) -> Word:
    return word_invert(a) * word_invert(b) * a * b


def word_commutator(parts: Sequence[Word]) -> Word:
    """Left-normed commutator ``[[...[p1, p2], p3]..., pk]``."""
    if len(parts) < 2:
        raise ValueError("a commutator needs at least two parts")
    acc = parts[0]
    for p in parts[1:]:
        acc = _commutator2(acc, p)
    return acc


def word_power(a: Word, k: int) -> Word:
    if k == 0:
        return Word.identity(a.arity)
    if k < 0:
        return word_power(word_invert(a), -k)
    syl = a.syllables
    if not syl:
        return a
    # split a = p c p^-1 with c cyclically reduced, so that a^k = p c^k p^-1
    prefix: list[Syllable] = []
    i, j = 0, len(syl) - 1
    while j > i and syl[i][0] == syl[j][0] and syl[i][1] == -syl[j][1]:
        prefix.append(syl[i])
        i += 1
        j -= 1
    core = list(syl[i:j + 1])
    if len(core) > 1 and core[0][0] == core[-1][0]:
        v, last = core[-1]
        prefix.append((v, -last))
        core = [(v, core[0][1] + last)] + core[1:-1]
    if len(core) == 1:
        body = ((core[0][0], core[0][1] * k),)
    else:
        body = tuple(core) * k
    tail = tuple((v, -e) for v, e in reversed(prefix))
    return Word(tuple(prefix) + body + tail, a.arity)


def exponent_sum(w: Word, i: int) -> int:
    """Total exponent of ``x_i`` in ``w``."""
    if not 1 <= i <= w.arity:
        raise IndexError(f"variable index {i} outside 1..{w.arity}")
    return sum(e for v, e in w.syllables if v == i)


def substitute(w: Word, images: Sequence[Word] | dict[int, Word]) -> Word:
    """Apply the endomorphism ``x_i -> images[i]`` (1-based when a dict,
    position ``i-1`` when a sequence)."""
    if isinstance(images, dict):
        lookup = images
    else:
        lookup = {i + 1: img for i, img in enumerate(images)}
    out: list[Syllable] = []
    arity = max((img.arity for img in lookup.values()), default=1)
    for v, e in w.syllables:
        if v not in lookup:
            raise KeyError(f"no image given for x{v}")
        out.extend(word_power(lookup[v], e).syllables)
    return Word(tuple(out), arity)


def engel_iterate(w: Word, n: int) -> Word:
    """Iterate ``w`` in its first variable ``n`` times (``w_{o1} = w``)."""
    if n < 1:
        raise ValueError("iteration count must be at least 1")
    images = {i: Word.var(i, w.arity) for i in range(1, w.arity + 1)}
    acc = w
    for _ in range(n - 1):
        images[1] = acc
        acc = substitute(w, images)
    return acc


def shift_variables(w: Word, offset: int, arity: int | None = None) -> Word:
    return Word(tuple((v + offset, e) for v, e in w.syllables),
                arity if arity is not None else w.arity + offset)


def s_iterate(w: Word, n: int, max_arity: int = S_ITERATE_MAX_ARITY) -> Word:
    """Solvability-type iterate on ``arity**n`` variables.

    ``w_{*1} = w`` and ``w_{*(N+1)}`` substitutes consecutive blocks of
    ``arity**N`` fresh variables into each argument of ``w``.
    """
    if n < 1:
        raise ValueError("iteration count must be at least 1")
    k = w.arity
    if k ** n > max_arity:
        raise OverflowError(
            f"s_iterate would need {k}**{n} = {k ** n} variables "
            f"(limit {max_arity}); raise max_arity to allow it")
    acc = w
    for level in range(1, n):
        block = k ** level
        images = {i: shift_variables(acc, (i - 1) * block, k * block)
                  for i in range(1, k + 1)}
        acc = substitute(w, images).with_arity(k * block)
    return acc


# structural decompositions


@dataclass(frozen=True)
class UVDecomposition:
    """``w = prod alpha_i x1^{l_i} alpha_i^-1 * tail`` with alpha_i, tail
    free of ``x1``."""

    conjugate_powers: tuple[tuple[Word, int], ...]
    tail: Word
    arity: int

    def u(self) -> Word:
        x1 = Word.var(1, self.arity)
        acc = Word.identity(self.arity)
        for alpha, l in self.conjugate_powers:
            acc = acc * alpha * x1 ** l * ~alpha
        return acc

    def recompose(self) -> Word:
        return self.u() * self.tail


@dataclass(frozen=True)
class NilpotentDecomposition:
    """``w = prod x1^{s_j} [x1^{l_j}, u_j] x1^{-s_j} * x1^r * tail``.

    Each term is ``(l_j, u_j, s_j)``; ``u_j`` and ``tail`` are free of
    ``x1`` and ``r`` is the exponent sum of ``x1``.
    """

    commutator_terms: tuple[tuple[int, Word, int], ...]
    r: int
    tail: Word
    arity: int

    def u(self) -> Word:
        x1 = Word.var(1, self.arity)
        acc = Word.identity(self.arity)
        for l, uj, s in self.commutator_terms:
            acc = acc * x1 ** s * word_commutator([x1 ** l, uj]) * x1 ** -s
        return acc

    def recompose(self) -> Word:
        return self.u() * Word.var(1, self.arity) ** self.r * self.tail


def decompose_uv(w: Word) -> UVDecomposition:
    # w = a0 x^l1 a1 x^l2 ... x^lk ak; with A_i = a0...ai,
    # w = prod A_{i-1} x^{l_i} A_{i-1}^-1 * A_k
    prefix = Word.identity(w.arity)
    terms = []
    for v, e in w.syllables:
        if v == 1:
            terms.append((prefix, e))
        else:
            prefix = prefix * Word(((v, e),), w.arity)
    return UVDecomposition(tuple(terms), prefix, w.arity)


def decompose_nilpotent(w: Word) -> NilpotentDecomposition:
    # A x^l A^-1 = x^l [x^l, A^-1]; pushing the x-powers to the right
    # conjugates each commutator by the running power x^{S_i}
    uv = decompose_uv(w)
    terms = []
    running = 0
    for alpha, l in uv.conjugate_powers:
        running += l
        uj = ~alpha
        if not uj.is_identity:
            terms.append((l, uj, running))
    return NilpotentDecomposition(tuple(terms), running, uv.tail, w.arity)


# named words

def _x(i: int, arity: int) -> Word:
    return Word.var(i, arity)


def _brandl_wilson() -> Word:
    x1, x2, x3, x4 = (_x(i, 4) for i in range(1, 5))
    return word_conjugate(word_commutator([x2, x1, x1, x3]), x4)


def _bray_wilson_wilson() -> Word:
    x1, x2 = _x(1, 2), _x(2, 2)
    # x1^{-x2} = x2^-1 x1^-1 x2
    return word_commutator([word_conjugate(~x1, x2), x1])


def _bggkpp() -> Word:
    x1, x2, x3 = (_x(i, 3) for i in range(1, 4))
    return word_commutator([x2 * ~x1 * ~x2, x3 * ~x1 * ~x3])


def _ribnere(f: int = 2, g: int = 3) -> Word:
    if f < 2 or g < 2 or f == g:
        raise ValueError("ribnere needs two distinct conjugator variables >= 2")
    n = max(f, g)
    x1 = _x(1, n)
    return word_commutator([word_conjugate(x1, _x(f, n)),
                            word_conjugate(x1, _x(g, n))])


def _adyan(r: int, n: int) -> Word:
    if r < 1 or n < 1:
        raise ValueError("adyan needs r >= 1 and n >= 1")
    x1, x2 = _x(1, 2), _x(2, 2)
    k = r * n
    return (x1 ** k * x2 ** k * x1 ** -k * x2 ** -k) ** n


def _engel(k: int = 1) -> Word:
    if k < 1:
        raise ValueError("engel needs k >= 1")
    x1, x2 = _x(1, 2), _x(2, 2)
    return word_commutator([x1] + [x2] * k)


def _wbar() -> Word:
    x1, x2, x3 = (_x(i, 3) for i in range(1, 4))
    return word_commutator([x1, word_commutator([x2, x3])])


def _w0() -> Word:
    return word_commutator([_x(1, 2), _x(2, 2)])


NAMED_WORDS = {
    "w_BW": (_brandl_wilson, ()),
    "w_BWW": (_bray_wilson_wilson, ()),
    "w_BGGKPP": (_bggkpp, ()),
    "ribnere": (_ribnere, ("f", "g")),
    "adyan": (_adyan, ("r", "n")),
    "engel": (_engel, ("k",)),
    "wbar": (_wbar, ()),
    "w0": (_w0, ()),
}


def named_word(name: str, *args: int, **kwargs: int) -> Word:
    """Look up a word family by name, e.g. ``named_word("adyan", r=3, n=2)``."""
    try:
        factory, params = NAMED_WORDS[name]
    except KeyError:
        raise KeyError(f"unknown word name {name!r}; known: "
                       f"{', '.join(sorted(NAMED_WORDS))}") from None
    if len(args) > len(params) or set(kwargs) - set(params):
        raise ValueError(f"{name} takes parameters {params}")
    try:
        return factory(*args, **kwargs)
    except TypeError as exc:
        raise ValueError(f"{name} takes parameters {params}: {exc}") from None
