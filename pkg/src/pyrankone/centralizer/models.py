"""
This module defines Pydantic models for the finite language of a rank-1 subshift and the block codes acting on it.

`LanguageTable` lists the factors of length 1..L of W_inf together with the stage whose word
certified them. `BlockCode` is a radius-R sliding-block map given by its table on the
(2R+1)-factors. `PhiMatching` pairs the stage-1 returns of a window x with those of g(x), and
`ProbeReport` summarizes an exhaustive search for invertible codes.
"""
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field

from pyrankone.centralizer.exceptions import CodeDomainError


class LanguageTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    schedule_id: str
    max_len: int
    stage: int = Field(..., description="Stage M whose factors agree with those of W_{M+1}")
    first_height: int = Field(..., description="h_1 of the source schedule")
    factors: Dict[int, Tuple[str, ...]] = Field(..., description="Sorted factors by length")

    @cached_property
    def factor_sets(self) -> Dict[int, FrozenSet[str]]:
        return {k: frozenset(words) for k, words in self.factors.items()}

    def of_length(self, k: int) -> Tuple[str, ...]:
        return self.factors.get(k, ())

    def contains(self, word: str) -> bool:
        return word in self.factor_sets.get(len(word), frozenset())

    def is_factor_closed(self) -> bool:
        return all(
            self.contains(w[:-1]) and self.contains(w[1:])
            for k in range(2, self.max_len + 1) for w in self.of_length(k)
        )

    def is_bi_extendable(self) -> bool:
        return all(
            any(self.contains(a + w) for a in "01") and any(self.contains(w + a) for a in "01")
            for k in range(1, self.max_len) for w in self.of_length(k)
        )


class BlockCode(BaseModel):
    """
    A model representing a sliding-block code of radius R: (g x)_i = table[x_{i-R} ... x_{i+R}].
    """
    model_config = ConfigDict(frozen=True)

    radius: int
    table: Dict[str, str]

    @property
    def window(self) -> int:
        return 2 * self.radius + 1

    @computed_field
    @property
    def signature(self) -> str:
        """Outputs listed in sorted factor order; equal signatures over one language mean equal codes."""
        return "".join(self.table[w] for w in sorted(self.table))

    def apply(self, word: str) -> str:
        """
        Apply the code to a finite word, dropping R symbols on each side.

        Raises:
            CodeDomainError: If the word is shorter than 2R + 1 or contains a window outside the table.
        """
        span = self.window
        if len(word) < span:
            raise CodeDomainError(f"Radius-{self.radius} code needs words of length >= {span}, got {len(word)}")
        try:
            return "".join(self.table[word[p:p + span]] for p in range(len(word) - span + 1))
        except KeyError as e:
            raise CodeDomainError(f"Window {e} is not in the domain of the code") from None

    def lift(self, language: "LanguageTable", radius: int) -> "BlockCode":
        """The same map written with a larger radius over the given language."""
        if radius < self.radius:
            raise CodeDomainError(f"Cannot lift a radius-{self.radius} code to radius {radius}")
        d = radius - self.radius
        return BlockCode(radius=radius,
                         table={w: self.table[w[d:d + self.window]] for w in language.of_length(2 * radius + 1)})


class CodeSearchResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    radius: int
    test_len: int
    factor_count: int
    nodes: int = Field(..., description="Search-tree nodes visited")
    codes: Tuple[BlockCode, ...]


class InvertibleCode(BaseModel):
    model_config = ConfigDict(frozen=True)

    code: BlockCode
    inverse: BlockCode


class LanguageWindow(BaseModel):
    """
    A finite in-language word standing for a point x, with x_0 at index `origin`.
    """
    model_config = ConfigDict(frozen=True)

    word: str
    origin: int = 0


class PhiMatching(BaseModel):
    """
    A model representing the matching between returns of x and of g(x).

    Coordinates are relative to the origin of x. Each pair (i, phi(i)) satisfies
    i - h_1 < phi(i) <= i, `offsets` lists m(i) = i - phi(i), and g(x) was pre-composed with
    the shift power `normalization_shift` to reach a matching at stage-0 base levels.
    """
    model_config = ConfigDict(frozen=True)

    zx: Tuple[int, ...]
    zgx: Tuple[int, ...]
    pairs: Tuple[Tuple[int, int], ...]
    offsets: Tuple[int, ...]
    recovered_offset: Optional[int] = None
    normalization_shift: int = 0
    first_height: int
    surjective: bool


class PsiViolation(BaseModel):
    model_config = ConfigDict(frozen=True)

    i: int
    phi: int
    psi_x: Optional[int] = None
    psi_gx: Optional[int] = None


class ProbeEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    signature: str
    inverse_signature: str
    shift_powers: Tuple[int, ...] = Field((), description="Every k with |k| <= R whose code equals this one")
    exotic: bool
    recovered_offset: Optional[int] = None


class ProbeReport(BaseModel):
    """
    A model representing the outcome of an exhaustive centralizer probe.
    """
    model_config = ConfigDict(frozen=True)

    schedule_id: str
    radius: int
    test_len: int
    inverse_radius: int
    language_stage: int
    table_space: int = Field(..., description="Number of tables on the (2R+1)-factors, 2 ** factor_count")
    nodes: int
    language_preserving: int
    invertible: int
    entries: Tuple[ProbeEntry, ...]
    out_of_theorem_scope: bool = False

    @computed_field
    @property
    def exotic_count(self) -> int:
        return sum(1 for entry in self.entries if entry.exotic)

    def shift_powers_found(self) -> List[int]:
        return sorted(k for entry in self.entries for k in entry.shift_powers)
