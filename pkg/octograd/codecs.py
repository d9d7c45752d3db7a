"""
JSON Dumps

Every object the command line constructs is dumped as a JSON document tagged with its "type": algebra, grading,
twisted, lie or label. Scalars use the encodings of octograd.scalars. Decoding failures raise CodecError.
"""


import json
import logging
from typing import Any

from octograd.composition import SCAlgebra
from octograd.errors import CodecError, OctogradError
from octograd.gradings import GradingLabel, Grading, label_from_json, label_to_json, target_from_json, target_to_json
from octograd.groups import FinAbGroup, GroupElem
from octograd.lie import LinearLieAlg
from octograd.linalg import Subspace
from octograd.results import CheckResult
from octograd.scalars import scalar_from_json, scalar_to_json
from octograd.twisted import TwistedComposition

logger = logging.getLogger(__name__)


def grading_to_json(grading: Grading) -> dict:
    return {
        "group": grading.group.to_json(),
        "target": target_to_json(grading.target),
        "components": [
            {"degree": degree.to_json(), "basis": [[scalar_to_json(c) for c in v] for v in space.basis]}
            for degree, space in grading.components.items()
        ],
        "label": None if grading.label is None else label_to_json(grading.label),
        "parameters": {key: value.to_json() for key, value in grading.parameters.items()},
    }


def grading_from_json(data: dict) -> Grading:
    group = FinAbGroup.from_json(data["group"])
    target = target_from_json(data["target"])
    components = [
        (
            GroupElem.from_json(group, entry["degree"]),
            Subspace([[scalar_from_json(c) for c in v] for v in entry["basis"]], target.dim),
        )
        for entry in data["components"]
    ]
    label = None if data.get("label") is None else label_from_json(data["label"])
    parameters = {key: GroupElem.from_json(group, value) for key, value in data.get("parameters", {}).items()}
    return Grading(group, components, target, label, parameters)


def dump_object(obj: Any) -> dict:
    match obj:
        case SCAlgebra():
            return {"type": "algebra", **obj.to_json()}
        case Grading():
            return {"type": "grading", **grading_to_json(obj)}
        case TwistedComposition():
            return {"type": "twisted", **obj.to_json()}
        case LinearLieAlg():
            return {"type": "lie", **obj.to_json()}
        case GradingLabel():
            return {"type": "label", **label_to_json(obj)}
        case _:
            raise CodecError(f"Cannot dump {type(obj).__name__}")


_LOADERS = {
    "algebra": SCAlgebra.from_json,
    "grading": grading_from_json,
    "twisted": TwistedComposition.from_json,
    "lie": LinearLieAlg.from_json,
    "label": label_from_json,
}


def load_object(data: dict) -> Any:
    if not isinstance(data, dict):
        raise CodecError(f"Expected a JSON object, got {type(data).__name__}")

    match _LOADERS.get(data.get("type")):
        case None:
            raise CodecError(f"Unknown object type {data.get('type')!r}, expected one of {', '.join(_LOADERS)}")
        case loader:
            try:
                return loader(data)
            except OctogradError:
                raise
            except (KeyError, IndexError, TypeError, ValueError, ZeroDivisionError) as error:
                raise CodecError(f"Malformed {data['type']} dump: {error!r}") from error


def dumps(obj: Any) -> str:
    return json.dumps(dump_object(obj), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def loads(text: str) -> Any:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise CodecError(f"Not valid JSON: {error}") from error

    return load_object(data)


def twisted_tables_check(data: dict, twisted: TwistedComposition) -> CheckResult:
    """Whether the β and b_Q tables stored in a twisted dump agree with the structure rebuilt from its Cayley
    algebra; the witness is the first disagreeing entry."""
    rebuilt = twisted.to_json()
    for key in ("beta", "gram_q"):
        stored, expected = data.get(key), rebuilt[key]
        if stored == expected:
            continue

        if not isinstance(stored, list) or len(stored) != len(expected):
            return CheckResult.Failed("stored tables", key, f"{key} has the wrong shape")

        for i, (row, expected_row) in enumerate(zip(stored, expected)):
            for j, (entry, expected_entry) in enumerate(zip(row, expected_row)):
                if entry != expected_entry:
                    return CheckResult.Failed("stored tables", (key, i, j), f"{key}[{i}][{j}] disagrees")

        return CheckResult.Failed("stored tables", key, f"{key} disagrees")

    return CheckResult.Passed("stored tables")
