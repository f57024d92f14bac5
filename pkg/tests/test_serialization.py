"""Wire formats: coefficient strings "num/den" lowest degree first,
factored rationals as sign + p^e products, matrices as string grids,
subgroups as modulus/divisors/generators, certificates as JSON."""

import json
from fractions import Fraction

from thumbtack.cyclotomic import CycElement, cyclotomic_field
from thumbtack.kummer import vertical_certificate
from thumbtack.multgroup import (FactoredRational, FunctionFieldElement,
                                 MultSubgroup, parse_function_field)
from thumbtack.qpoly import QPoly
from thumbtack.zlattice import IntMatrix, ModSubgroup


def test_polynomial_coefficient_strings():
    p = QPoly([Fraction(-1, 2), 0, 1])
    assert p.to_json() == ["-1/2", "0/1", "1/1"]
    assert QPoly.from_json(p.to_json()) == p


def test_cyc_element_schema():
    F = cyclotomic_field(8)
    e = F.element([1, Fraction(2, 3), 0, -1])
    obj = e.to_json()
    assert obj["conductor"] == 8
    assert obj["coeffs"] == ["1/1", "2/3", "0/1", "-1/1"]
    assert CycElement.from_json(json.loads(json.dumps(obj))) == e


def test_factored_rational_strings():
    assert FactoredRational(-1, [(2, 3), (3, -2)]).to_str() == "-2^3*3^-2"
    assert FactoredRational(1, []).to_str() == "+1"
    for s in ("+2^1*5^-3", "-1", "+1", "-7^2"):
        assert FactoredRational.from_str(s).to_str() == s


def test_multsubgroup_json():
    g = MultSubgroup([2, Fraction(-8, 9)])
    assert g.to_json() == ["+2^1", "-2^3*3^-2"]
    g2 = MultSubgroup.from_json(g.to_json())
    assert [x.to_str() for x in g2.generators] == g.to_json()


def test_function_field_schema():
    ffe = parse_function_field("2t^2+2t")
    obj = json.loads(json.dumps(ffe.to_json()))
    assert obj == {"constant": "2/1", "factors": [["t", 1], ["t+1", 1]]}
    assert FunctionFieldElement.from_json(obj) == ffe


def test_matrix_strings():
    A = IntMatrix([[1, -2], [3, 10 ** 25]])
    obj = A.to_json()
    assert obj[1][1] == str(10 ** 25)
    assert IntMatrix.from_json(obj) == A


def test_modsubgroup_schema():
    S = ModSubgroup(8, 2, [[2, 1], [0, 4]])
    obj = json.loads(json.dumps(S.to_json()))
    assert obj["modulus"] == 8
    assert all(isinstance(d, str) for d in obj["divisors"])
    assert ModSubgroup.from_json(obj) == S


def test_certificate_schema():
    cert = vertical_certificate(MultSubgroup([2]), 2, 3)
    obj = json.loads(json.dumps(cert.to_json(MultSubgroup([2]))))
    assert obj["gamma"] == ["+2^1"]
    assert obj["l"] == 2
    assert obj["levels"][2] == {"m": 3, "divisors": ["2"], "index": "2"}
    assert obj["stabilized"] is True
    assert obj["limit"] == ["2"]
