"""Protocol state machine: gating, events, name transmission."""

import random
import string

import pytest

from rave import markers
from rave.isa.decode import decode
from rave.isa.types import InstrType, SpecVersion
from rave.markers import (
    DELIM_WORD,
    MissingRegisterValues,
    NameEvent,
    NameValue,
    ProtocolState,
    Reset,
    RESTART_WORD,
    START_WORD,
    STOP_WORD,
    UserEvent,
    decode_name_chars,
    lui_word,
    name_event_words,
    name_value_words,
    or_word,
)

SPEC = SpecVersion.V1_0


def kind_of(word):
    instr = decode(word, SPEC)
    assert instr.instr_type is InstrType.MARKER
    return instr.marker


def play(ps, words, reg_values=None, index=0):
    actions = []
    for w in words:
        actions += ps.on_marker(kind_of(w), reg_values=reg_values, instr_index=index)
    return actions


def test_name_event_round_trip():
    ps = ProtocolState()
    actions = play(ps, name_event_words(1000, "code_region"))
    assert actions == [NameEvent(1000, "code_region")]


def test_name_value_round_trip():
    ps = ProtocolState()
    actions = play(ps, name_value_words(1000, 3, "BU"))
    assert actions == [NameValue(1000, 3, "BU")]


def test_random_names_round_trip():
    rng = random.Random(1234)
    alphabet = string.ascii_letters + string.digits + "_-./ "
    ps = ProtocolState()
    for _ in range(200):
        event = rng.randrange(0, 1 << 20)
        name = "".join(rng.choice(alphabet) for _ in range(rng.randrange(1, 65)))
        if rng.random() < 0.5:
            actions = play(ps, name_event_words(event, name))
            assert actions == [NameEvent(event, name)]
        else:
            value = rng.randrange(0, 1 << 20)
            actions = play(ps, name_value_words(event, value, name))
            assert actions == [NameValue(event, value, name)]


def test_empty_name_allowed():
    ps = ProtocolState()
    assert play(ps, name_event_words(7, "")) == [NameEvent(7, "")]


def test_non_ascii_names_survive_lossily():
    # only the low byte of each payload travels; multibyte UTF-8 decodes back
    words = name_event_words(7, "café")
    ps = ProtocolState()
    (action,) = play(ps, words)
    assert action == NameEvent(7, "café")


def test_lui_word_range():
    with pytest.raises(ValueError):
        lui_word(1 << 20)
    with pytest.raises(ValueError):
        lui_word(-1)


def test_decode_name_chars_low_byte_only():
    assert decode_name_chars([0x41 | 0xFF000, 0x42]) == "AB"


def test_gating_toggles():
    ps = ProtocolState()
    assert ps.tracing_enabled
    play(ps, [STOP_WORD])
    assert not ps.tracing_enabled
    play(ps, [START_WORD])
    assert ps.tracing_enabled


def test_restart_emits_reset_with_index():
    ps = ProtocolState()
    actions = ps.on_marker(kind_of(RESTART_WORD), instr_index=42)
    assert actions == [Reset(42)]


def test_event_requires_register_values():
    ps = ProtocolState()
    with pytest.raises(MissingRegisterValues):
        ps.on_marker(kind_of(or_word(10, 11)))


def test_event_carries_values_and_index():
    ps = ProtocolState()
    actions = ps.on_marker(kind_of(or_word(10, 11)), reg_values=(1000, 3), instr_index=9)
    assert actions == [UserEvent(1000, 3, 9)]


def test_event_while_disabled_is_flagged():
    ps = ProtocolState()
    play(ps, [STOP_WORD])
    (ev,) = ps.on_marker(kind_of(or_word(10, 11)), reg_values=(1, 2))
    assert ev.while_disabled


def test_markers_honored_while_disabled():
    ps = ProtocolState()
    play(ps, [STOP_WORD])
    actions = play(ps, name_event_words(5, "late"))
    assert actions == [NameEvent(5, "late")]
    play(ps, [START_WORD])
    assert ps.tracing_enabled


def test_stale_payload_discarded_after_two_markers():
    ps = ProtocolState()
    play(ps, [lui_word(7)])
    # two unrelated markers age the pending id out
    play(ps, [STOP_WORD, START_WORD])
    actions = play(ps, [DELIM_WORD] + [lui_word(ord("x"))] + [DELIM_WORD])
    # no id left, so the delimiter pair opens nothing and the payload dies
    assert actions == []


def test_fresh_payload_survives_one_marker_gap():
    ps = ProtocolState()
    words = [lui_word(9), DELIM_WORD, lui_word(ord("k")), DELIM_WORD]
    actions = play(ps, words)
    assert actions == [NameEvent(9, "k")]


def test_three_ids_keep_last_two(caplog):
    ps = ProtocolState()
    words = [lui_word(1), lui_word(2), lui_word(3), DELIM_WORD, DELIM_WORD]
    actions = play(ps, words)
    assert actions == [NameValue(2, 3, "")]


def test_control_marker_aborts_collection(caplog):
    ps = ProtocolState()
    play(ps, [lui_word(5), DELIM_WORD, lui_word(ord("a"))])
    actions = play(ps, [STOP_WORD])  # interrupts the open name sequence
    assert actions == []
    # a complete sequence afterwards still works
    actions = play(ps, name_event_words(6, "ok"))
    assert actions == [NameEvent(6, "ok")]


def test_finish_clears_open_collection(caplog):
    ps = ProtocolState()
    play(ps, [lui_word(5), DELIM_WORD, lui_word(ord("a"))])
    ps.finish()
    assert not ps._collecting


def test_word_builders_match_spelled_instructions():
    assert START_WORD == 0xFFD00013
    assert STOP_WORD == 0xFFC00013
    assert RESTART_WORD == 0xFFE00013
    assert DELIM_WORD == 0xFFF00013
    assert or_word(10, 11) == 0x00B56033
    assert lui_word(0x12345) == 0x12345037
