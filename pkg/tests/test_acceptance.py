"""Acceptance suite: one test per criterion, each printing its pass/fail
line (run with ``pytest -s tests/test_acceptance.py`` to see them live).

Everything here is exact arithmetic; every comparison is equality with zero
tolerance.  The same checks back the ``quivex verify`` subcommand.
"""

import pytest

from quivex import acceptance


@pytest.fixture(scope="module")
def corpus():
    return acceptance.build_corpus(acceptance.DEFAULT_SEED)


def _report(result):
    print(result.line())
    assert result.passed, result.details


def test_criterion_1_sl2_family():
    _report(acceptance.criterion_1(acceptance.DEFAULT_SEED))


def test_criterion_2_chain_adjoint():
    _report(acceptance.criterion_2(acceptance.DEFAULT_SEED))


def test_criterion_3_star_adjoint():
    _report(acceptance.criterion_3())


def test_criterion_4_complex_duality_suite(corpus):
    result = acceptance.criterion_4(corpus)
    assert result.details["pairs"] >= 500
    _report(result)


def test_criterion_5_stability_consequences(corpus):
    result = acceptance.criterion_5(corpus)
    assert result.details["stable_samples"] > 0
    _report(result)


def test_criterion_6_crystal_induction():
    _report(acceptance.criterion_6())


def test_criterion_7_framing_rewrite(corpus):
    result = acceptance.criterion_7(acceptance.DEFAULT_SEED, corpus)
    assert result.details["checked"] == 100
    _report(result)


def test_criterion_8_documented_exclusions():
    _report(acceptance.criterion_8())
