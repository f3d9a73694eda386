import copy

from pezzo import fixtures


def test_registry_checksums_intact():
    ok = fixtures.verify_checksums()
    assert ok and all(ok.values()), [k for k, v in ok.items() if not v]


def test_every_registry_entry_has_a_frozen_checksum():
    assert set(fixtures.REGISTRY) == set(fixtures.CHECKSUMS)


def test_checksum_detects_edits():
    fx = fixtures.REGISTRY["ECKARDT_STRATA"]
    data = copy.deepcopy(fx.data)
    data[1] += 1
    assert fixtures.Fixture(fx.name, fx.anchor, data).checksum() != fx.checksum()


def test_fixture_shapes():
    assert len(fixtures.EXAMPLE_CUBIC_MATRIX) == 3
    assert all(len(r) == 6 for r in fixtures.EXAMPLE_CUBIC_MATRIX)
    assert len(fixtures.E6_A1_VERTICES) == 10
    assert sum(fixtures.ECKARDT_STRATA.values()) == 2111
