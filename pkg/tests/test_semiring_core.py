from dataclasses import dataclass

import pytest

from cisres import AXIOMS, check_axioms, make_instance
from cisres.errors import InstanceMismatchError, InvalidParameterError
from cisres.instances import Boolean, Tropical, standard_instances
from cisres.semiring import Semiring, cis_add, cis_mul, same_instance


@dataclass(frozen=True)
class LeftProjection(Semiring):
    """Integers mod 3 with max as sum and a broken product a*b = a."""

    tag = "broken"

    def _zero(self):
        return 0

    def _one(self):
        return 1

    def _add(self, p, q):
        return max(p, q)

    def _mul(self, p, q):
        return p

    def _canonical(self, raw):
        return int(raw) % 3

    def _format(self, payload):
        return str(payload)


def test_tropical_operations():
    t = Tropical()
    assert cis_add(t.parse("1"), t.parse("3")) == t.parse("3")
    assert cis_mul(t.parse("2"), t.parse("4")) == t.parse("6")
    assert str(t.zero) == "-inf" and str(t.one) == "0"


def test_nine_axioms_listed():
    names = [a[0] for a in AXIOMS]
    assert len(names) == 9
    assert "add-idempotent" in names and "mul-annihilation" in names


def test_tropical_axioms_on_small_samples():
    t = Tropical()
    report = check_axioms(t, [t.parse(x) for x in ("-inf", "0", "1", "3")])
    assert report.ok
    assert report["distributive"].checked == 64


def test_boolean_two_samples():
    b = Boolean()
    assert check_axioms(b, [b.parse("F"), b.parse("T")]).ok


def test_broken_mock_reports_witness():
    s = LeftProjection()
    report = check_axioms(s, [s.value(k) for k in range(3)])
    assert not report.ok
    bad = report["mul-commutative"]
    assert not bad.passed
    a, b = bad.witness
    assert a * b != b * a
    # annihilation also fails: 1 * 0 = 1
    assert not report["mul-annihilation"].passed


def test_check_axioms_rejects_empty_and_foreign_samples():
    with pytest.raises(InvalidParameterError):
        check_axioms(Tropical(), [])
    with pytest.raises(InstanceMismatchError):
        check_axioms(Tropical(), [Boolean().one])


def test_budget_caps_work():
    t = Tropical()
    report = check_axioms(t, t.samples(), budget=5)
    assert all(r.checked <= 5 for r in report.results)


def test_mixing_instances_is_an_error():
    with pytest.raises(InstanceMismatchError):
        Tropical().one + Boolean().one
    with pytest.raises(InstanceMismatchError):
        cis_mul(Tropical().one, Boolean().one)
    with pytest.raises(TypeError):
        same_instance([Tropical().one, make_instance("powerset", universe="1..3").one])


def test_equal_params_are_interchangeable():
    a = make_instance("powerset", universe="1..4")
    b = make_instance("powerset", universe=[1, 2, 3, 4])
    assert a.parse("{1,2}") + b.parse("{3}") == a.parse("{1,2,3}")
    with pytest.raises(InstanceMismatchError):
        a.one + make_instance("powerset", universe="1..5").one


@pytest.mark.parametrize("inst", standard_instances(), ids=lambda s: s.tag)
def test_curated_samples_pass(inst):
    report = check_axioms(inst, inst.samples())
    assert report.ok, report.failures()


def test_sum_and_product_of_empty():
    t = Tropical()
    assert t.sum([]) == t.zero
    assert t.product([]) == t.one
