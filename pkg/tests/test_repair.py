"""Encoding and erasure repair: round trips, accounting, escalation."""

import itertools
import random

import pytest

import lrckit as lk
from lrckit.errors import LocalRepairError

from known_codes import GF4, GF5, worked_designs

H1 = lk.build_h1(GF5, 4, 2)
H2 = lk.build_h2(GF4, 3, 2)
H3 = lk.build_h3(GF4, 3, 2)


def seeded_messages(design, count, seed):
    rng = random.Random(seed)
    k = design.claimed_k
    return [[rng.randrange(design.field.q) for _ in range(k)] for _ in range(count)]


def test_encode_zero_message():
    assert lk.encode(H1, [0] * 8) == (0,) * 12


def test_encode_words_are_codewords():
    for design in (H1, H2, H3):
        for msg in seeded_messages(design, 5, seed=1):
            word = lk.encode(design, msg)
            assert len(word) == design.n
            assert all(x == 0 for x in design.h.mul_vec(word))


def test_encode_is_injective():
    seen = set()
    for msg in itertools.product(range(4), repeat=5):
        seen.add(lk.encode(H3, msg))
    assert len(seen) == 4**5


def test_encode_is_systematic_on_information_set():
    for design in (H1, H2, H3):
        info = lk.information_set(design)
        assert len(info) == design.claimed_k
        for msg in seeded_messages(design, 3, seed=2):
            word = lk.encode(design, msg)
            assert [word[j] for j in info] == list(msg)


def test_encode_length_check():
    with pytest.raises(ValueError, match="length"):
        lk.encode(H1, [0] * 7)


def test_repair_local_two_erasures():
    msg = seeded_messages(H1, 1, seed=3)[0]
    word = lk.encode(H1, msg)
    erased = lk.ErasurePattern(12, (0, 1)).apply(word)
    symbols = lk.repair_local(H1, erased, 0)
    assert symbols == {0: word[0], 1: word[1]}


def test_repair_local_reads_only_inside_the_group():
    # corrupting everything outside group 0 must not change the answer
    msg = seeded_messages(H1, 1, seed=4)[0]
    word = lk.encode(H1, msg)
    erased = lk.ErasurePattern(12, (2, 4)).apply(word)
    garbled = list(erased)
    for j in range(6, 12):
        garbled[j] = (word[j] + 1) % 5
    assert lk.repair_local(H1, garbled, 0) == {2: word[2], 4: word[4]}


def test_repair_local_ignores_erasures_in_other_groups():
    msg = seeded_messages(H3, 1, seed=5)[0]
    word = lk.encode(H3, msg)
    erased = lk.ErasurePattern(10, (0, 5, 6)).apply(word)
    assert lk.repair_local(H3, erased, 0) == {0: word[0]}


def test_repair_local_no_erasures_is_identity():
    word = lk.encode(H1, seeded_messages(H1, 1, seed=6)[0])
    assert lk.repair_local(H1, word, 0) == {}
    assert lk.repair_local(H1, word, 1) == {}


def test_repair_local_escalates_past_delta_minus_one():
    word = lk.encode(H1, seeded_messages(H1, 1, seed=7)[0])
    erased = lk.ErasurePattern(12, (0, 1, 2)).apply(word)
    with pytest.raises(LocalRepairError, match="escalate"):
        lk.repair_local(H1, erased, 0)


def test_repair_local_validation():
    word = lk.encode(H1, seeded_messages(H1, 1, seed=8)[0])
    with pytest.raises(ValueError, match="group"):
        lk.repair_local(H1, word, 5)
    with pytest.raises(ValueError, match="length"):
        lk.repair_local(H1, word[:-1], 0)


def test_repair_global_recovers_d_minus_one_erasures():
    msg = seeded_messages(H3, 1, seed=9)[0]
    word = lk.encode(H3, msg)
    for pattern in [(0, 4, 9), (0, 1, 2), (3, 5, 7)]:
        erased = lk.ErasurePattern(10, pattern).apply(word)
        result = lk.repair_global(H3, erased)
        assert result.ok
        assert result.word == word
        assert result.symbols_read == 7
        assert all(result.modes[j] == "global" for j in pattern)


def test_repair_global_whole_group_unrecoverable():
    word = lk.encode(H1, seeded_messages(H1, 1, seed=10)[0])
    erased = lk.ErasurePattern(12, tuple(range(6))).apply(word)
    result = lk.repair_global(H1, erased)
    assert not result.ok
    assert result.word is None
    assert result.nullity >= 1


def test_repair_global_no_erasures_checks_syndrome():
    word = lk.encode(H1, seeded_messages(H1, 1, seed=11)[0])
    assert lk.repair_global(H1, word).word == word
    corrupt = list(word)
    corrupt[0] = (corrupt[0] + 1) % 5
    with pytest.raises(ValueError, match="syndrome"):
        lk.repair_global(H1, corrupt)


def test_repair_global_inconsistent_survivors():
    word = lk.encode(H1, seeded_messages(H1, 1, seed=12)[0])
    corrupt = list(word)
    corrupt[3] = (corrupt[3] + 2) % 5
    corrupt[11] = None
    with pytest.raises(ValueError, match="consistent"):
        lk.repair_global(H1, corrupt)


def test_repair_auto_local_only_within_budgeted_group():
    # three erasures in one group of the delta=4 family stay local
    msg = seeded_messages(H2, 1, seed=13)[0]
    word = lk.encode(H2, msg)
    erased = lk.ErasurePattern(12, (0, 2, 5)).apply(word)
    result = lk.repair_auto(H2, erased)
    assert result.ok and result.word == word
    assert set(result.modes.values()) == {"local"}
    assert result.groups_touched == (0,)
    assert result.symbols_read == 3  # six wide, three erased


def test_repair_auto_two_groups_local():
    msg = seeded_messages(H3, 1, seed=14)[0]
    word = lk.encode(H3, msg)
    erased = lk.ErasurePattern(10, (0, 6, 8)).apply(word)
    result = lk.repair_auto(H3, erased)
    assert result.ok and result.word == word
    assert set(result.modes.values()) == {"local"}
    assert result.groups_touched == (0, 1)
    assert result.symbols_read == (5 - 1) + (5 - 2)


def test_repair_auto_escalates_heavy_group_to_global():
    msg = seeded_messages(H3, 1, seed=15)[0]
    word = lk.encode(H3, msg)
    erased = lk.ErasurePattern(10, (0, 1, 2)).apply(word)  # 3 > delta-1 = 2
    result = lk.repair_auto(H3, erased)
    assert result.ok and result.word == word
    assert set(result.modes.values()) == {"global"}
    assert result.symbols_read == 7


def test_repair_auto_mixed_local_then_global():
    msg = seeded_messages(H3, 1, seed=16)[0]
    word = lk.encode(H3, msg)
    erased = lk.ErasurePattern(10, (0, 5, 6, 7)).apply(word)
    result = lk.repair_auto(H3, erased)
    assert result.ok and result.word == word
    assert result.modes[0] == "local"
    assert result.modes[5] == result.modes[6] == result.modes[7] == "global"
    # local read 4 in group 0, then global read the 7 known symbols
    assert result.symbols_read == 4 + 7


def test_repair_auto_failure_reports_nullity():
    word = lk.encode(H1, seeded_messages(H1, 1, seed=17)[0])
    erased = lk.ErasurePattern(12, tuple(range(6))).apply(word)
    result = lk.repair_auto(H1, erased)
    assert not result.ok and result.nullity >= 1


def test_erasure_pattern_validation():
    with pytest.raises(ValueError, match="duplicate"):
        lk.ErasurePattern(5, (1, 1))
    with pytest.raises(ValueError, match="range"):
        lk.ErasurePattern(5, (5,))
    pattern = lk.ErasurePattern.from_word([1, None, 0, None])
    assert pattern.indices == (1, 3)


def test_sweep_counts_h3():
    outcome = lk.sweep(H3, seeded_messages(H3, 1, seed=18)[0], 3)
    assert outcome.per_size == ((1, 10, 10), (2, 45, 45), (3, 120, 120))
    assert outcome.total == 175
    assert outcome.recovered == 175
    assert outcome.failures == ()


def test_generator_matrix_cached_and_full_rank():
    gen = lk.generator_matrix(H2)
    assert gen is lk.generator_matrix(H2)
    assert gen.nrows == 6
    assert gen.rank() == 6
