"""
JSON file formats

pydantic models for every document the toolkit reads or writes: state and
code files, Knill-Laflamme reports, experiment and falsification reports,
BCH descriptions and decode outcomes. Readers accept a path, a JSON string
or an already parsed object.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Type, TypeVar, Union

import numpy as np
from pydantic import BaseModel, Field, ValidationError, field_validator

from .classical_bch import BinaryPolynomial, CyclicCodeSpec, DecodeOutcome, cyclic_code
from .code_analysis import ConditionReport, ProductStateResult, QuantumCode
from .quantum_core import StateVector, make_state
from .type_defs import CodeDict, ErasureModelName, StateDict
from .validation import validate_code_data, validate_state_data

logger = logging.getLogger(__name__)

Source = Union[str, Path, Dict[str, Any]]
ModelT = TypeVar('ModelT', bound=BaseModel)


class StateFile(BaseModel):
    n: int = Field(ge=1)
    terms: List[Tuple[str, Tuple[float, float]]]


class CodeFile(BaseModel):
    n: int = Field(ge=1)
    k: int = Field(ge=0)
    basis: List[StateFile]
    name: Optional[str] = None


class WitnessModel(BaseModel):
    positions: List[int]
    operator: str
    pair: Tuple[int, int]


class ConditionReportModel(BaseModel):
    passed: bool
    worst_expectation_gap: float
    worst_off_diagonal: float
    witness: Optional[WitnessModel] = None


class TrialReportModel(BaseModel):
    code: str
    model: ErasureModelName
    erasure_size: int = Field(ge=1)
    trials: int = Field(ge=1)
    mean_fidelity: float
    min_fidelity: float
    failures: int = Field(ge=0)
    seed: int = Field(ge=0)


class FalsifyReportModel(BaseModel):
    n: int = Field(ge=1)
    trials: int = Field(ge=0)
    seed: int = Field(ge=0)
    passes: int = Field(ge=0)


class ProductStateModel(BaseModel):
    found: bool
    eta: Tuple[Tuple[float, float], Tuple[float, float]]
    state: StateFile
    residual: float
    coefficients: Tuple[Tuple[float, float], Tuple[float, float], Tuple[float, float]]


class QuantumDescriptionModel(BaseModel):
    N: int
    K: int
    d: int
    distance_source: str = 'true'
    designed_distance: Optional[int] = None
    coset_reps: List[str] = Field(default_factory=list)


class BchDescriptionModel(BaseModel):
    N: int
    b: int = 1
    d_bch: int
    m: Optional[int] = None
    primitive_poly: Optional[str] = None
    defining_set: List[int]
    generator: str
    K: Optional[int] = None
    quantum: Optional[QuantumDescriptionModel] = None

    @field_validator('generator')
    @classmethod
    def _binary(cls, value: str) -> str:
        if not value or set(value) - {'0', '1'}:
            raise ValueError("generator must be a low-to-high 0/1 string")
        return value


class DecodeOutcomeModel(BaseModel):
    status: str
    codeword: str
    error_positions: List[int]
    erasure_values: Dict[str, int]


def load_json(source: Source) -> Any:
    """Parse a path, a JSON string or pass through a parsed object"""
    if isinstance(source, dict):
        return source
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith(('{', '['))):
        with open(source, 'r', encoding='utf-8') as handle:
            return json.load(handle)
    return json.loads(source)


def parse_document(model: Type[ModelT], source: Source) -> ModelT:
    """Validate JSON against a model, reporting pydantic errors as ValueError"""
    try:
        return model.model_validate(load_json(source))
    except ValidationError as e:
        raise ValueError(f"Invalid {model.__name__}: {e.errors()[0]['msg']}") from e


def dump_json(document: Union[BaseModel, Dict[str, Any]], indent: Optional[int] = 2) -> str:
    """Serialize with a stable key order"""
    if isinstance(document, BaseModel):
        document = document.model_dump(mode='json')
    return json.dumps(document, indent=indent)


def _pair(value: complex) -> Tuple[float, float]:
    return float(np.real(value)), float(np.imag(value))


def state_to_dict(state: StateVector) -> StateDict:
    """Nonzero normalized amplitudes sorted by bitstring"""
    terms = [
        (format(index, f'0{state.num_qubits}b'), _pair(amplitude))
        for index, amplitude in enumerate(state.amplitudes)
        if amplitude != 0
    ]
    return StateFile(n=state.num_qubits, terms=terms).model_dump(mode='json')


def state_from_dict(data: Dict[str, Any]) -> StateVector:
    is_valid, error = validate_state_data(data)
    if not is_valid:
        raise ValueError(f"Invalid state file: {error}")
    parsed = StateFile.model_validate(data)
    return make_state(parsed.n, [(bits, complex(re, im)) for bits, (re, im) in parsed.terms])


def read_state(source: Source) -> StateVector:
    return state_from_dict(load_json(source))


def write_state(state: StateVector, path: Optional[Union[str, Path]] = None) -> str:
    text = dump_json(state_to_dict(state))
    if path is not None:
        Path(path).write_text(text + '\n', encoding='utf-8')
    return text


def code_to_dict(code: QuantumCode) -> CodeDict:
    document: CodeDict = {'n': code.n, 'k': code.k, 'basis': [state_to_dict(s) for s in code.basis]}
    if code.name:
        document['name'] = code.name
    return document


def code_from_dict(data: Dict[str, Any]) -> QuantumCode:
    is_valid, error = validate_code_data(data)
    if not is_valid:
        raise ValueError(f"Invalid code file: {error}")
    parsed = CodeFile.model_validate(data)
    states = tuple(state_from_dict(state.model_dump(mode='json')) for state in parsed.basis)
    return QuantumCode(parsed.n, parsed.k, states, parsed.name)


def read_code(source: Source) -> QuantumCode:
    return code_from_dict(load_json(source))


def write_code(code: QuantumCode, path: Optional[Union[str, Path]] = None) -> str:
    text = dump_json(code_to_dict(code))
    if path is not None:
        Path(path).write_text(text + '\n', encoding='utf-8')
    return text


def condition_report_from_dict(data: Dict[str, Any]) -> ConditionReportModel:
    return parse_document(ConditionReportModel, data)


def trial_report_from_dict(data: Dict[str, Any]) -> TrialReportModel:
    report = parse_document(TrialReportModel, data)
    if report.failures > report.trials:
        raise ValueError(f"Invalid trial report: {report.failures} failures in {report.trials} trials")
    return report


def falsify_report_from_dict(data: Dict[str, Any]) -> FalsifyReportModel:
    report = parse_document(FalsifyReportModel, data)
    if report.passes > report.trials:
        raise ValueError(f"Invalid falsification report: {report.passes} passes in {report.trials} trials")
    return report


def product_state_to_dict(result: ProductStateResult) -> Dict[str, Any]:
    return ProductStateModel(
        found=result.found,
        eta=tuple(_pair(value) for value in result.eta),
        state=StateFile.model_validate(state_to_dict(result.state)),
        residual=result.residual,
        coefficients=tuple(_pair(value) for value in result.coefficients),
    ).model_dump(mode='json')


def decode_outcome_from_dict(data: Dict[str, Any]) -> DecodeOutcome:
    parsed = parse_document(DecodeOutcomeModel, data)
    if parsed.status not in ('Corrected', 'Failure'):
        raise ValueError(f"Invalid decode outcome: unknown status {parsed.status!r}")
    return DecodeOutcome(
        parsed.status,
        tuple(int(bit) for bit in parsed.codeword),
        frozenset(parsed.error_positions),
        {int(k): v for k, v in parsed.erasure_values.items()},
    )


def cyclic_code_from_dict(data: Dict[str, Any]) -> CyclicCodeSpec:
    """
    Rebuild a code from its description.

    The defining set and the designed window are authoritative; a generator
    that disagrees with them is rejected.
    """
    parsed = parse_document(BchDescriptionModel, data)
    base = cyclic_code(parsed.N, parsed.defining_set)
    if BinaryPolynomial.from_bits(parsed.generator) != base.generator:
        raise ValueError("Invalid code description: generator does not match the defining set")
    return CyclicCodeSpec(parsed.N, base.defining_set, base.generator, parsed.d_bch, parsed.b % parsed.N, base.gf)


def read_cyclic_code(source: Source) -> CyclicCodeSpec:
    return cyclic_code_from_dict(load_json(source))
