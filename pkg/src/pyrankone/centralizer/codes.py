"""
This module enumerates sliding-block codes that map the language into itself and identifies the invertible ones.

The search assigns an output symbol to each (2R+1)-factor in sorted order, depth first. After
every assignment the images of the length-L test factors that use the assigned factor are
inspected: every maximal run of already-determined output symbols must itself be a factor,
otherwise the branch is cut. A complete assignment that survives maps every length-L factor to a
length-(L - 2R) factor.

Invertibility is constructive: a code is kept when some language-preserving code of radius R'
undoes it on both sides over every test factor.
"""
import math
from multiprocessing import Pool
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from pyrankone.centralizer.exceptions import CodeDomainError, OffsetExceedsRadiusError
from pyrankone.centralizer.models import BlockCode, CodeSearchResult, InvertibleCode, LanguageTable
from pyrankone.config.models import DEFAULT_BUDGETS, Budgets
from pyrankone.tower.exceptions import BudgetExceededError


def shift_power_code(k: int, radius: int, lang: LanguageTable) -> BlockCode:
    """
    The code of sigma^k, (sigma^k x)_i = x_{i+k}, written with the given radius.

    Raises:
        OffsetExceedsRadiusError: If |k| > radius.
    """
    if abs(k) > radius:
        raise OffsetExceedsRadiusError(f"Shift power {k} does not fit in radius {radius}")
    return BlockCode(radius=radius, table={w: w[radius + k] for w in lang.of_length(2 * radius + 1)})


class _CodeSearch:
    """Depth-first search state; picklable so branches can run in worker processes."""

    def __init__(self, factors: Sequence[str], tests: Sequence[Tuple[int, ...]],
                 language: Dict[int, frozenset], node_budget: int) -> None:
        self.factors = list(factors)
        self.tests = [list(windows) for windows in tests]
        self.language = language
        self.node_budget = node_budget
        self.nodes = 0
        self.users: List[List[Tuple[int, int]]] = [[] for _ in self.factors]
        for t, windows in enumerate(self.tests):
            for p, f in enumerate(windows):
                self.users[f].append((t, p))
        self.out: List[Optional[str]] = [None] * len(self.factors)
        self.found: List[str] = []

    def _run(self, t: int, p: int) -> str:
        windows = self.tests[t]
        left = p
        while left > 0 and self.out[windows[left - 1]] is not None:
            left -= 1
        right = p
        while right + 1 < len(windows) and self.out[windows[right + 1]] is not None:
            right += 1
        return "".join(self.out[f] for f in windows[left:right + 1])

    def _consistent(self, f: int) -> bool:
        for t, p in self.users[f]:
            run = self._run(t, p)
            if run not in self.language.get(len(run), frozenset()):
                return False
        return True

    def search(self, prefix: Sequence[str] = ()) -> List[str]:
        for f, symbol in enumerate(prefix):
            self.out[f] = symbol
            if not self._consistent(f):
                return []
        self._descend(len(prefix))
        return self.found

    def _descend(self, f: int) -> None:
        if f == len(self.factors):
            self.found.append("".join(self.out))
            return
        for symbol in "01":
            self.nodes += 1
            if self.nodes > self.node_budget:
                raise BudgetExceededError(
                    f"Code enumeration visited more than {self.node_budget} nodes; raise max_enumeration_nodes"
                )
            self.out[f] = symbol
            if self._consistent(f):
                self._descend(f + 1)
        self.out[f] = None


def _search_branch(args) -> Tuple[List[str], int]:
    state, prefix = args
    found = state.search(prefix)
    return found, state.nodes


def search_codes(lang: LanguageTable, radius: int, test_len: int, budgets: Budgets = DEFAULT_BUDGETS,
                 workers: int = 1) -> CodeSearchResult:
    """
    Exhaustively search radius-R codes whose images of length-L factors stay in the language.

    Args:
        lang (LanguageTable): The language, with max_len >= test_len.
        radius (int): Code radius R.
        test_len (int): Length L of the test factors, at least 2R + h_1.
        budgets (Budgets): `max_enumeration_nodes` bounds the search tree.
        workers (int): Processes sharing the top levels of the search tree.

    Returns:
        CodeSearchResult: Surviving codes sorted by signature, with search statistics.

    Raises:
        CodeDomainError: If the test length does not fit the radius or the table.
        BudgetExceededError: If the search tree grows beyond the node budget.
    """
    if radius < 0:
        raise CodeDomainError(f"Radius must be nonnegative, got {radius}")
    span = 2 * radius + 1
    if test_len < max(span, 2 * radius + lang.first_height) or test_len > lang.max_len:
        raise CodeDomainError(
            f"Test length {test_len} must lie in [{max(span, 2 * radius + lang.first_height)}, {lang.max_len}]"
        )
    factors = lang.of_length(span)
    index = {w: f for f, w in enumerate(factors)}
    tests = [tuple(index[w[p:p + span]] for p in range(test_len - span + 1)) for w in lang.of_length(test_len)]
    language = dict(lang.factor_sets)
    if workers <= 1:
        state = _CodeSearch(factors, tests, language, budgets.max_enumeration_nodes)
        outputs, nodes = state.search(), state.nodes
    else:
        depth = min(len(factors), max(1, math.ceil(math.log2(workers)) + 1))
        prefixes = [format(b, f"0{depth}b") for b in range(2 ** depth)]
        share = max(1, budgets.max_enumeration_nodes // len(prefixes))
        jobs = [(_CodeSearch(factors, tests, language, share), prefix) for prefix in prefixes]
        with Pool(processes=workers) as pool:
            results = pool.map(_search_branch, jobs)
        outputs = [code for found, _ in results for code in found]
        nodes = sum(n for _, n in results) + len(prefixes)
    codes = sorted(
        (BlockCode(radius=radius, table=dict(zip(factors, output))) for output in outputs),
        key=lambda code: code.signature,
    )
    logger.debug(
        f"Radius-{radius} search on '{lang.schedule_id}': {len(factors)} factors, {nodes} nodes, {len(codes)} codes"
    )
    return CodeSearchResult(radius=radius, test_len=test_len, factor_count=len(factors), nodes=nodes,
                            codes=tuple(codes))


def enumerate_codes(lang: LanguageTable, radius: int, test_len: int, budgets: Budgets = DEFAULT_BUDGETS,
                    workers: int = 1) -> List[BlockCode]:
    """Radius-R codes mapping every length-L factor to a length-(L - 2R) factor."""
    return list(search_codes(lang, radius, test_len, budgets, workers).codes)


def _undoes(code: BlockCode, inverse: BlockCode, tests: Sequence[str]) -> bool:
    trim = code.radius + inverse.radius
    for u in tests:
        expected = u[trim:len(u) - trim]
        if inverse.apply(code.apply(u)) != expected or code.apply(inverse.apply(u)) != expected:
            return False
    return True


def invertible_codes(codes: Sequence[BlockCode], lang: LanguageTable, inverse_radius: int, test_len: int,
                     budgets: Budgets = DEFAULT_BUDGETS, workers: int = 1) -> List[InvertibleCode]:
    """
    Keep the codes that have a two-sided inverse among language-preserving codes of radius R'.

    Both compositions must act as the identity, trimmed by R + R' on each side, on every length-L
    factor.

    Raises:
        CodeDomainError: If R' is smaller than a code radius or L leaves nothing after trimming.
    """
    if not codes:
        return []
    radius = max(code.radius for code in codes)
    if inverse_radius < radius:
        raise CodeDomainError(f"Inverse radius {inverse_radius} is smaller than code radius {radius}")
    if test_len - 2 * (radius + inverse_radius) < 1:
        raise CodeDomainError(f"Test length {test_len} is too short for radii {radius} and {inverse_radius}")
    candidates = enumerate_codes(lang, inverse_radius, test_len, budgets, workers)
    tests = lang.of_length(test_len)
    invertible = []
    for code in codes:
        inverse = next((d for d in candidates if _undoes(code, d, tests)), None)
        if inverse is not None:
            invertible.append(InvertibleCode(code=code, inverse=inverse))
    logger.info(
        f"{len(invertible)} of {len(codes)} codes on '{lang.schedule_id}' are invertible at radius {inverse_radius}"
    )
    return invertible


def matching_shift_powers(code: BlockCode, lang: LanguageTable) -> List[int]:
    """Every k with |k| <= R whose shift-power code has the same table."""
    return [k for k in range(-code.radius, code.radius + 1)
            if shift_power_code(k, code.radius, lang).table == code.table]
