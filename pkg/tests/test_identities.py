import pytest

from losanitsch import identities as I


@pytest.fixture(scope="module")
def small():
    return I.Context(max_n=9, primes=(3, 5), deep_n=14, gf_n=20, gf_k=4)


@pytest.mark.parametrize("identity", I.CHECK_IDS)
def test_every_check_passes_at_small_bounds(identity, small):
    report = I.run_check(identity, small)
    assert report.passed, report.line()


def test_ids_are_unique():
    assert len(set(I.CHECK_IDS)) == len(I.CHECK_IDS)


@pytest.mark.parametrize("alias,target", sorted(I.ALIASES.items()))
def test_aliases_resolve(alias, target):
    assert I.resolve(alias).identity == target


def test_unknown_identity():
    with pytest.raises(KeyError):
        I.resolve("bogus")


def test_report_line_format(small):
    line = I.run_check("3.14", small).line()
    identity, rng, verdict, detail = line.split("\t")
    assert (identity, verdict) == ("3.14", "pass")
    assert rng == "n<=9;p in 2,3,5"
    assert detail


def test_failing_check_reports_first_counterexample(monkeypatch):
    def broken(c):
        yield "n=0", 1, 1
        yield "n=1", 2, 3
        yield "n=2", 4, 5

    check = I.Check("fake", "a deliberately false identity", broken, "deep")
    monkeypatch.setitem(I._BY_ID, "fake", check)
    report = I.run_check("fake", max_n=4)
    assert not report.passed
    assert report.counterexample == ("n=1", "2", "3")
    assert "first mismatch at n=1: 2 != 3" in report.line()


def test_failing_report_needs_counterexample():
    with pytest.raises(ValueError):
        I.CheckReport("x", "t", "r", False)


def test_notes_for_printed_forms(small):
    assert "'+'" in I.run_check("3.4", small).note
    assert "disagrees" in I.run_check("3.13", small).note
    assert "11 values" in I.run_check("prop4.4", small).note
    assert "squared" in I.run_check("4.16", small).note


def test_context_validation():
    with pytest.raises(ValueError):
        I.Context(max_n=99)
    with pytest.raises(ValueError):
        I.Context(primes=(4,))


def test_battery_subset_and_report():
    reports = I.identity_battery(max_n=6, primes=(3,), ids=["thm3.5", "4.8"], deep_n=8, gf_n=10, gf_k=2)
    assert [r.identity for r in reports] == ["3.14", "4.8"]
    text = I.format_report(reports)
    assert text.count("\n") == 2 and "\tpass\t" in text
