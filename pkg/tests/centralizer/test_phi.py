import pytest

from pyrankone.centralizer.codes import shift_power_code
from pyrankone.centralizer.exceptions import NormalizationRequiredError, OffsetsInconsistentError
from pyrankone.centralizer.language import language
from pyrankone.centralizer.models import LanguageWindow, PhiMatching
from pyrankone.centralizer.phi import (
    normalized_phi_map,
    phi_map,
    psi_conjugation_check,
    recover_offset,
    shift_sequence,
)
from pyrankone.centralizer.probe import default_phi_window
from pyrankone.points.exceptions import TooFewReturnsError
from pyrankone.tower.words import word_bits


@pytest.fixture
def chacon_window(chacon):
    bits = word_bits(chacon, 6)
    return LanguageWindow(word=bits[200:500], origin=150)


@pytest.fixture
def chacon_language(chacon):
    return language(chacon, 5)


def test_shift_sequence():
    assert shift_sequence(2) == [0, 1, -1, 2, -2]


@pytest.mark.parametrize("k, shift", [(0, 0), (1, 0), (2, 1), (-1, 1), (-2, 2)])
def test_shift_powers_are_recovered(chacon, chacon_window, chacon_language, k, shift):
    matching = normalized_phi_map(chacon, chacon_window, shift_power_code(k, 2, chacon_language))
    assert matching.normalization_shift == shift
    assert recover_offset(matching) == k
    assert matching.recovered_offset == k
    assert all(i - matching.first_height < j <= i for i, j in matching.pairs)
    assert psi_conjugation_check(matching) == []


def test_unnormalized_shift_fails(chacon, chacon_window, chacon_language):
    with pytest.raises(NormalizationRequiredError):
        phi_map(chacon, chacon_window, shift_power_code(2, 2, chacon_language))


def test_inconsistent_offsets():
    matching = PhiMatching(zx=(0, 4), zgx=(0, 3), pairs=((0, 0), (4, 3)), offsets=(0, 1),
                           first_height=4, surjective=True)
    with pytest.raises(OffsetsInconsistentError):
        recover_offset(matching)


def test_psi_needs_two_pairs():
    matching = PhiMatching(zx=(0,), zgx=(0,), pairs=((0, 0),), offsets=(0,), first_height=4, surjective=True)
    with pytest.raises(TooFewReturnsError):
        psi_conjugation_check(matching)


@pytest.mark.parametrize("name", ["four_copy", "staircase"])
@pytest.mark.parametrize("k", [-2, -1, 0, 1, 2])
def test_offsets_recovered_beyond_chacon(name, k, request):
    schedule = request.getfixturevalue(name)
    lang = language(schedule, 5)
    matching = normalized_phi_map(schedule, default_phi_window(schedule, 2), shift_power_code(k, 2, lang))
    assert len(set(matching.offsets)) == 1
    assert recover_offset(matching) == k
    assert psi_conjugation_check(matching) == []


def test_unequal_base_offsets_need_another_shift(four_copy):
    # sigma^-2 pairs every return across the spacer of 00100 at offsets 3 and 4
    lang = language(four_copy, 5)
    window = default_phi_window(four_copy, 2)
    with pytest.raises(NormalizationRequiredError):
        phi_map(four_copy, window, shift_power_code(-2, 2, lang))
    assert normalized_phi_map(four_copy, window, shift_power_code(-2, 2, lang)).normalization_shift == 2
