from dataclasses import dataclass
from typing import Iterable, List, Tuple


@dataclass(frozen=True)
class Permutation:
    """!
    @brief A bijection on [0, dim), acting on basis states as S e_i = e_{σ(i)}.

    For wire permutations this is the relabeling carried to the end of a circuit. For bitstring permutations (the
    routing state of synthesis) `dim = 2^n` and the permutation moves amplitudes between basis indices.
    """
    image: Tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        if sorted(image) != list(range(len(image))):
            raise ValueError('Not a permutation: %s.' % (image,))
        object.__setattr__(self, 'image', image)

    @classmethod
    def identity(cls, dim: int) -> 'Permutation':
        return cls(tuple(range(dim)))

    @classmethod
    def transposition(cls, dim: int, a: int, b: int) -> 'Permutation':
        image = list(range(dim))
        image[a], image[b] = image[b], image[a]
        return cls(tuple(image))

    @classmethod
    def from_transpositions(cls, dim: int, swaps: Iterable[Tuple[int, int]]) -> 'Permutation':
        """!
        @brief Build the permutation realized by applying `swaps` in order (first swap first).
        """
        result = cls.identity(dim)
        for a, b in swaps:
            result = result.then(cls.transposition(dim, a, b))
        return result

    @property
    def dim(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def then(self, other: 'Permutation') -> 'Permutation':
        """!
        @brief The permutation applying `self` first, then `other`.
        """
        if other.dim != self.dim:
            raise ValueError('Permutation dimension mismatch (%d != %d).' % (self.dim, other.dim))
        return Permutation(tuple(other.image[v] for v in self.image))

    def inverse(self) -> 'Permutation':
        result = [0] * self.dim
        for i, v in enumerate(self.image):
            result[v] = i
        return Permutation(tuple(result))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.image))

    def moved(self) -> List[int]:
        return [i for i, v in enumerate(self.image) if i != v]

    def transpositions(self) -> List[Tuple[int, int]]:
        """!
        @brief Decompose into transpositions which, applied in the returned order, realize this permutation.
        """
        where = list(self.image)
        at = [0] * self.dim
        for content, position in enumerate(where):
            at[position] = content

        # Swap positions after the permutation until every element is home; the recorded swaps undo the
        # permutation, so reversing them rebuilds it.
        undo = []
        for i in range(self.dim):
            p = where[i]
            if p == i:
                continue
            j = at[i]
            where[i], where[j] = i, p
            at[i], at[p] = i, j
            undo.append((i, p))
        return list(reversed(undo))

    def __str__(self):
        if self.is_identity():
            return 'identity(%d)' % self.dim
        return 'Permutation(%s)' % ', '.join('%d->%d' % (i, self.image[i]) for i in self.moved())
