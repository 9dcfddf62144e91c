from twistsel.golden import run_golden_suite


def test_golden_suite_all_pass():
    results = run_golden_suite()
    assert len(results) == 4
    for r in results:
        assert r.ok, f"{r.name}: {r.detail}"
