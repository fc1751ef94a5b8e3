from ellcob.verify import run_suite, Check


def test_full_level_all_pass():
    results = run_suite("full")
    failed = [c for c in results if not c.passed]
    assert not failed, failed


def test_deterministic_order_and_names():
    names = [c.name for c in run_suite("fast")]
    assert names == [c.name for c in run_suite("fast")]
    assert names[0] == "theta-divisor-agreement"
    assert "jacobi-quartic-f1" in names
    assert "image-hnf" in names
    assert len(names) == len(set(names)) == 22


def test_unknown_level_rejected():
    import pytest
    with pytest.raises(ValueError):
        run_suite("turbo")
