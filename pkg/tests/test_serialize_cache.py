import pytest
from hypothesis import given, settings, strategies as st

from catsq import catalog
from catsq.cache import (
    CacheFingerprintError,
    CacheFormatError,
    CacheMiss,
    CacheVersionError,
    GroupData,
    emit_group_data,
    parse_group_data,
    read_group_data,
    write_group_data,
)
from catsq.cat1 import cat1_group, identity_cat1
from catsq.cat2 import cat2_group
from catsq.groups import hom_by_images
from catsq.serialize import (
    FormatError,
    detect_kind,
    emit_cat1,
    emit_cat2,
    emit_xsq,
    parse_cat1,
    parse_cat2,
    parse_xsq,
)
from catsq.tables import compute_group_data, group_data
from catsq.xsq import crossed_square_of_cat2


def test_cat1_round_trip_with_key(d8):
    G = catalog.small_group(8, 3)
    s = G.generators[1]  # the reflection generator
    t = hom_by_images(G, G, [0, s])
    C = cat1_group(t, t)
    text = emit_cat1(C, (8, 3))
    back = parse_cat1(text)
    assert back.key() == (C.tail.mapping, C.head.mapping)
    assert emit_cat1(back, (8, 3)) == text
    assert detect_kind(text) == "cat1"
    # a key may only be used for the catalog instance itself
    other = cat1_group(hom_by_images(d8, d8, [d8.generators[0], 0]),
                       hom_by_images(d8, d8, [d8.generators[0], 0]))
    with pytest.raises(FormatError, match="catalog instance"):
        emit_cat1(other, (8, 3))


def test_cat2_round_trip_inline_group(d8):
    C = cat2_group(identity_cat1(d8), identity_cat1(d8))
    text = emit_cat2(C)
    back = parse_cat2(text)
    assert emit_cat2(back) == text
    assert "group table 8" in text


def test_xsq_round_trip(d8):
    a, b = d8.generators
    ta = hom_by_images(d8, d8, [a, 0])
    tb = hom_by_images(d8, d8, [0, b])
    C = cat2_group(cat1_group(ta, ta), cat1_group(tb, tb))
    X = crossed_square_of_cat2(C)
    text = emit_xsq(X)
    back = parse_xsq(text)
    assert emit_xsq(back) == text


def test_parse_rejects_garbage():
    with pytest.raises(FormatError):
        detect_kind("not a catsq file\n")
    with pytest.raises(FormatError):
        parse_cat1("catsq 1 cat2\ngroup key 8 3\nend\n")
    with pytest.raises(FormatError):
        parse_cat1("catsq 9 cat1\ngroup key 8 3\nend\n")


def test_group_data_round_trip():
    data = compute_group_data(8, 3)
    text = emit_group_data(data)
    back = parse_group_data(text)
    assert back == data
    assert emit_group_data(back) == text


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_group_data_round_trip_random(data):
    n = data.draw(st.integers(1, 6))
    k = data.draw(st.integers(0, 5))
    maps = tuple(
        (tuple(data.draw(st.integers(0, n - 1)) for _ in range(n)),
         tuple(data.draw(st.integers(0, n - 1)) for _ in range(n)))
        for _ in range(k))
    fam1 = tuple((i,) for i in range(k))
    pairs = tuple((i, i) for i in range(k))
    gd = GroupData(n, 1, k, maps, fam1, pairs, fam1, data.draw(st.integers(0, 3)))
    assert parse_group_data(emit_group_data(gd)) == gd


def test_cache_write_read(tmp_path):
    data = compute_group_data(8, 3)
    path = write_group_data(tmp_path, data)
    assert path.exists()
    assert not list(tmp_path.glob("*.tmp"))
    back = read_group_data(tmp_path, 8, 3, expected_ie=10)
    assert back == data


def test_cache_missing_dir_created_on_demand(tmp_path):
    target = tmp_path / "deep" / "cache"
    data = compute_group_data(6, 1)
    write_group_data(target, data)
    assert (target / "6_1.catsq").exists()


def test_cache_error_kinds(tmp_path):
    data = compute_group_data(8, 3)
    path = write_group_data(tmp_path, data)

    with pytest.raises(CacheMiss):
        read_group_data(tmp_path, 8, 2, expected_ie=10)

    with pytest.raises(CacheFingerprintError):
        read_group_data(tmp_path, 8, 3, expected_ie=999)

    text = path.read_text().replace("catsq 1 cache", "catsq 2 cache")
    path.write_text(text)
    with pytest.raises(CacheVersionError):
        read_group_data(tmp_path, 8, 3, expected_ie=10)

    path.write_text("complete nonsense\n")
    with pytest.raises(CacheFormatError):
        read_group_data(tmp_path, 8, 3, expected_ie=10)


def test_stale_cache_triggers_recompute(tmp_path):
    data = compute_group_data(8, 3)
    path = write_group_data(tmp_path, data)
    # corrupt the fingerprint: the loader must fall back to recomputation
    path.write_text(path.read_text().replace("fingerprint 8 10", "fingerprint 8 11"))
    fresh = group_data(8, 3, cache_dir=tmp_path)
    assert fresh.counts == (10, 9, 3, 21, 6)
    # and the rewritten entry is valid again
    again = read_group_data(tmp_path, 8, 3, expected_ie=10)
    assert again == fresh


def test_cached_equals_computed(tmp_path):
    cold = group_data(9, 2, cache_dir=tmp_path)
    warm = group_data(9, 2, cache_dir=tmp_path)
    assert cold == warm == compute_group_data(9, 2)
