"""JSON instance and certificate documents with exact string entries.

Every field element crosses the wire as a string -- ``-?a(/b)?`` over
the rationals, a decimal residue over GF(p) -- never as a JSON number,
so fractions and large integers survive any JSON parser bit-exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from .errors import DocumentError
from .fields import QQ, Field, FieldElement, PrimeField
from .leonard import ParameterArray, construct_pair
from .matrices import SquareMatrix


@dataclass(frozen=True)
class InstanceDocument:
    """One parsed problem instance: a matrix pair or a parameter array."""

    field: Field
    matrices: Optional[tuple[SquareMatrix, SquareMatrix]]
    parameter_array: Optional[ParameterArray]
    orderings: Optional[tuple[tuple[FieldElement, ...], tuple[FieldElement, ...]]]

    def pair(self) -> tuple[SquareMatrix, SquareMatrix]:
        if self.matrices is not None:
            return self.matrices
        return construct_pair(self.parameter_array)

    def natural_orderings(
        self,
    ) -> Optional[tuple[tuple[FieldElement, ...], tuple[FieldElement, ...]]]:
        """Orderings intrinsic to the document: explicit ones win, then the
        diagonal order of a parameter array."""
        if self.orderings is not None:
            return self.orderings
        if self.parameter_array is not None:
            return (self.parameter_array.theta, self.parameter_array.theta_star)
        return None


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise DocumentError(message)


def parse_field(obj: Any) -> Field:
    _expect(isinstance(obj, dict), "field must be an object")
    kind = obj.get("kind")
    if kind == "rational":
        _expect(set(obj) == {"kind"}, "rational field takes no extra keys")
        return QQ
    if kind == "gf":
        _expect(set(obj) == {"kind", "modulus"}, "gf field needs exactly a modulus")
        modulus = obj.get("modulus")
        _expect(isinstance(modulus, int) and not isinstance(modulus, bool), "gf modulus must be an integer")
        try:
            return PrimeField(modulus)
        except Exception as exc:
            raise DocumentError(f"invalid gf modulus: {exc}") from exc
    raise DocumentError("field.kind must be 'rational' or 'gf'")


def parse_element(field: Field, value: Any, where: str) -> FieldElement:
    _expect(isinstance(value, str), f"malformed entry at {where}: expected a string")
    try:
        return FieldElement(field, field.parse(value))
    except ValueError as exc:
        raise DocumentError(f"malformed entry {value!r} at {where}") from exc


def parse_element_list(field: Field, values: Any, where: str) -> tuple[FieldElement, ...]:
    _expect(isinstance(values, list), f"{where} must be a list")
    return tuple(parse_element(field, v, f"{where}[{k}]") for k, v in enumerate(values))


def parse_matrix(field: Field, rows: Any, where: str) -> SquareMatrix:
    _expect(isinstance(rows, list) and rows, f"{where} must be a nonempty list of rows")
    n = len(rows)
    parsed = []
    for i, row in enumerate(rows):
        _expect(
            isinstance(row, list) and len(row) == n,
            f"{where}[{i}] must be a list of {n} entries",
        )
        parsed.append([parse_element(field, e, f"{where}[{i}][{j}]").value for j, e in enumerate(row)])
    return SquareMatrix(field, parsed)


def parse_instance(obj: Any) -> InstanceDocument:
    """Validate and parse one instance document.

    Raises DocumentError on any grammar or schema problem;
    InvariantViolation when a parameter array breaks its invariants.
    """
    _expect(isinstance(obj, dict), "instance must be a JSON object")
    unknown = set(obj) - {"field", "matrices", "parameter_array", "orderings"}
    _expect(not unknown, f"unknown keys: {sorted(unknown)}")
    _expect("field" in obj, "instance needs a field descriptor")
    field = parse_field(obj["field"])
    has_m = "matrices" in obj
    has_pa = "parameter_array" in obj
    _expect(has_m != has_pa, "exactly one of matrices / parameter_array must be present")

    matrices = None
    parameter_array = None
    if has_m:
        m_obj = obj["matrices"]
        _expect(isinstance(m_obj, dict) and set(m_obj) == {"a", "a_star"},
                "matrices must hold exactly a and a_star")
        a = parse_matrix(field, m_obj["a"], "matrices.a")
        a_star = parse_matrix(field, m_obj["a_star"], "matrices.a_star")
        _expect(a.dim == a_star.dim, "a and a_star must have equal dimension")
        matrices = (a, a_star)
    else:
        pa_obj = obj["parameter_array"]
        _expect(isinstance(pa_obj, dict) and set(pa_obj) == {"d", "theta", "theta_star", "varphi"},
                "parameter_array must hold d, theta, theta_star, varphi")
        d = pa_obj["d"]
        _expect(isinstance(d, int) and not isinstance(d, bool) and d >= 0,
                "parameter_array.d must be a nonnegative integer")
        theta = parse_element_list(field, pa_obj["theta"], "parameter_array.theta")
        theta_star = parse_element_list(field, pa_obj["theta_star"], "parameter_array.theta_star")
        varphi = parse_element_list(field, pa_obj["varphi"], "parameter_array.varphi")
        _expect(len(theta) == d + 1, "theta must list d+1 values")
        _expect(len(theta_star) == d + 1, "theta_star must list d+1 values")
        _expect(len(varphi) == d, "varphi must list d values")
        parameter_array = ParameterArray(
            field=field, theta=theta, theta_star=theta_star, varphi=varphi
        )

    orderings = None
    if "orderings" in obj:
        o_obj = obj["orderings"]
        _expect(isinstance(o_obj, dict) and set(o_obj) == {"theta_order", "theta_star_order"},
                "orderings must hold theta_order and theta_star_order")
        orderings = (
            parse_element_list(field, o_obj["theta_order"], "orderings.theta_order"),
            parse_element_list(field, o_obj["theta_star_order"], "orderings.theta_star_order"),
        )
    return InstanceDocument(
        field=field, matrices=matrices, parameter_array=parameter_array, orderings=orderings
    )


def load_instance(text: str) -> InstanceDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return parse_instance(obj)


# ---------------------------------------------------------------------------
# serialization


def field_doc(field: Field) -> dict:
    if isinstance(field, PrimeField):
        return {"kind": "gf", "modulus": field.modulus}
    return {"kind": "rational"}


def element_strings(seq: Sequence[FieldElement]) -> list[str]:
    return [str(e) for e in seq]


def matrix_strings(m: SquareMatrix) -> list[list[str]]:
    return m.to_strings()


def orderings_doc(
    theta_order: Sequence[FieldElement], theta_star_order: Sequence[FieldElement]
) -> dict:
    return {
        "theta_order": element_strings(theta_order),
        "theta_star_order": element_strings(theta_star_order),
    }


def parameter_array_doc(pa: ParameterArray) -> dict:
    return {
        "d": pa.d,
        "theta": element_strings(pa.theta),
        "theta_star": element_strings(pa.theta_star),
        "varphi": element_strings(pa.varphi),
    }


def instance_doc_for_array(pa: ParameterArray) -> dict:
    return {"field": field_doc(pa.field), "parameter_array": parameter_array_doc(pa)}


def instance_doc_for_pair(a: SquareMatrix, a_star: SquareMatrix) -> dict:
    return {
        "field": field_doc(a.field),
        "matrices": {"a": matrix_strings(a), "a_star": matrix_strings(a_star)},
    }


def dumps(document: dict) -> str:
    """Pretty, byte-stable rendering used for certificate output."""
    return json.dumps(document, indent=2) + "\n"


def dumps_compact(document: dict) -> str:
    """One-line rendering used for instance streams."""
    return json.dumps(document, separators=(", ", ": "))
