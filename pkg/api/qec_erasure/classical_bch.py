"""
Binary BCH codes

GF(2^m) arithmetic on integer bit masks with log/antilog tables, binary
polynomials, cyclotomic cosets and defining sets, generator polynomials,
duals and the weak self-duality test used to build quantum BCH codes, and an
errors-and-erasures decoder (Berlekamp-Massey on Forney syndromes).

Bit vectors are numpy ``uint8`` arrays; position j is the coefficient of
x^j. Erasure positions are 0-based.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import galois
import numpy as np

from .settings import get_settings
from .type_defs import BchDescriptionDict, DecodeOutcomeDict, DecodeStatusName
from .validation import (
    validate_bch_parameters, validate_erasure_positions, validate_received_word
)

logger = logging.getLogger(__name__)

GF2 = galois.GF(2)

# bit i is the coefficient of x^i
PRIMITIVE_POLYNOMIALS: Dict[int, int] = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


def _clmul(a: int, b: int) -> int:
    """Carry-less product of two bit masks"""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def _clmod(a: int, mod: int) -> Tuple[int, int]:
    """Carry-less division, returning (quotient, remainder)"""
    quotient = 0
    mod_len = mod.bit_length()
    while a.bit_length() >= mod_len:
        shift = a.bit_length() - mod_len
        quotient |= 1 << shift
        a ^= mod << shift
    return quotient, a


@dataclass(frozen=True)
class BinaryPolynomial:
    """Polynomial over GF(2), coefficients lowest degree first"""

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        coefficients = [int(c) for c in self.coefficients]
        if any(c not in (0, 1) for c in coefficients):
            raise ValueError("Invalid polynomial: coefficients must be 0 or 1")
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, 'coefficients', tuple(coefficients))

    @classmethod
    def from_int(cls, mask: int) -> 'BinaryPolynomial':
        return cls(tuple((mask >> i) & 1 for i in range(mask.bit_length())))

    @classmethod
    def from_bits(cls, bits: str) -> 'BinaryPolynomial':
        """Parse a low-to-high coefficient string such as ``"1101"``"""
        return cls(tuple(int(bit) for bit in bits))

    @classmethod
    def parse(cls, text: str) -> 'BinaryPolynomial':
        """Parse ``"x^4+x+1"``"""
        mask = 0
        for term in filter(None, (part.strip() for part in text.replace(' ', '').split('+'))):
            if term == '0':
                continue
            if term == '1':
                exponent = 0
            elif term == 'x':
                exponent = 1
            elif term.startswith('x^'):
                exponent = int(term[2:])
            else:
                raise ValueError(f"Invalid polynomial term: {term!r}")
            mask ^= 1 << exponent
        return cls.from_int(mask)

    @classmethod
    def one(cls) -> 'BinaryPolynomial':
        return cls((1,))

    @classmethod
    def x_n_minus_one(cls, N: int) -> 'BinaryPolynomial':
        return cls.from_int((1 << N) | 1)

    @property
    def mask(self) -> int:
        return sum(bit << i for i, bit in enumerate(self.coefficients))

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial"""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: 'BinaryPolynomial') -> 'BinaryPolynomial':
        return BinaryPolynomial.from_int(self.mask ^ other.mask)

    __sub__ = __add__

    def __mul__(self, other: 'BinaryPolynomial') -> 'BinaryPolynomial':
        return BinaryPolynomial.from_int(_clmul(self.mask, other.mask))

    def __divmod__(self, other: 'BinaryPolynomial') -> Tuple['BinaryPolynomial', 'BinaryPolynomial']:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quotient, remainder = _clmod(self.mask, other.mask)
        return BinaryPolynomial.from_int(quotient), BinaryPolynomial.from_int(remainder)

    def __floordiv__(self, other: 'BinaryPolynomial') -> 'BinaryPolynomial':
        return divmod(self, other)[0]

    def __mod__(self, other: 'BinaryPolynomial') -> 'BinaryPolynomial':
        return divmod(self, other)[1]

    def shift(self, k: int) -> 'BinaryPolynomial':
        """Multiply by x^k"""
        return BinaryPolynomial.from_int(self.mask << k)

    def evaluate(self, gf: 'FiniteField', x: int) -> int:
        return gf.poly_eval(list(self.coefficients), x)

    def to_bits(self, length: Optional[int] = None) -> str:
        """Low-to-high coefficient string, right-padded with zeros to ``length``"""
        bits = ''.join(str(c) for c in self.coefficients)
        if length is None:
            return bits or '0'
        if len(bits) > length:
            raise ValueError(f"Invalid length: polynomial of degree {self.degree} exceeds {length} bits")
        return bits.ljust(length, '0')

    def to_array(self, length: int) -> np.ndarray:
        array = np.zeros(length, dtype=np.uint8)
        array[:len(self.coefficients)] = self.coefficients
        return array

    @classmethod
    def from_array(cls, bits: Sequence[int]) -> 'BinaryPolynomial':
        return cls(tuple(int(b) for b in bits))

    def __str__(self) -> str:
        if self.is_zero():
            return '0'
        terms = []
        for exponent in range(self.degree, -1, -1):
            if self.coefficients[exponent]:
                terms.append('1' if exponent == 0 else 'x' if exponent == 1 else f'x^{exponent}')
        return '+'.join(terms)


class FiniteField:
    """
    GF(2^m) with elements as integer bit masks.

    Multiplication and division go through log/antilog tables built from a
    primitive polynomial.
    """

    def __init__(self, m: int, primitive_polynomial: Optional[int] = None):
        if m < 1:
            raise ValueError(f"Invalid field degree: {m}")
        if primitive_polynomial is None:
            primitive_polynomial = get_settings().primitive_polynomials.get(m, PRIMITIVE_POLYNOMIALS.get(m))
        if m == 1 and primitive_polynomial is None:
            primitive_polynomial = 0b11
        if primitive_polynomial is None:
            raise ValueError(f"Invalid field degree: no primitive polynomial known for m={m}")
        if primitive_polynomial.bit_length() - 1 != m:
            raise ValueError(f"Invalid primitive polynomial: {primitive_polynomial:#b} does not have degree {m}")
        self.m = m
        self.primitive_polynomial = primitive_polynomial
        self.order = 1 << m
        self.group_order = self.order - 1

        exp_table = [0] * (2 * self.group_order)
        log_table = [-1] * self.order
        element = 1
        for power in range(self.group_order):
            if log_table[element] != -1:
                raise ValueError(
                    f"Invalid primitive polynomial: {primitive_polynomial:#b} is not primitive "
                    f"(alpha has order {power})"
                )
            exp_table[power] = element
            log_table[element] = power
            element <<= 1
            if element & self.order:
                element ^= primitive_polynomial
        if element != 1:
            raise ValueError(f"Invalid primitive polynomial: {primitive_polynomial:#b} is not primitive")
        # doubled so products of logs index without a modulo
        for power in range(self.group_order, 2 * self.group_order):
            exp_table[power] = exp_table[power - self.group_order]
        self.exp_table = tuple(exp_table)
        self.log_table = tuple(log_table)

    def __repr__(self) -> str:
        return f"FiniteField(m={self.m}, primitive_polynomial={self.polynomial})"

    @property
    def polynomial(self) -> BinaryPolynomial:
        return BinaryPolynomial.from_int(self.primitive_polynomial)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[self.log_table[a] + self.log_table[b]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero in GF(2^m)")
        if a == 0:
            return 0
        return self.exp_table[(self.log_table[a] - self.log_table[b]) % self.group_order]

    def inv(self, a: int) -> int:
        return self.div(1, a)

    def pow(self, a: int, exponent: int) -> int:
        if a == 0:
            return 0 if exponent > 0 else 1
        return self.exp_table[(self.log_table[a] * exponent) % self.group_order]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero in GF(2^m)")
        return self.log_table[a]

    def exp(self, power: int) -> int:
        return self.exp_table[power % self.group_order]

    def root_of_unity(self, N: int) -> int:
        """A primitive N-th root of unity, alpha^((2^m - 1) / N)"""
        if self.group_order % N:
            raise ValueError(f"Invalid length: {N} does not divide 2^{self.m} - 1")
        return self.exp(self.group_order // N)

    def poly_eval(self, poly: Sequence[int], x: int) -> int:
        """Horner evaluation, coefficients lowest degree first"""
        result = 0
        for coefficient in reversed(poly):
            result = self.mul(result, x) ^ coefficient
        return result

    def poly_mul(self, a: Sequence[int], b: Sequence[int]) -> List[int]:
        if not a or not b:
            return []
        result = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                result[i + j] ^= self.mul(ai, bj)
        return result

    def poly_add(self, a: Sequence[int], b: Sequence[int]) -> List[int]:
        if len(a) < len(b):
            a, b = b, a
        result = list(a)
        for i, bi in enumerate(b):
            result[i] ^= bi
        return result

    def poly_scale(self, poly: Sequence[int], scalar: int) -> List[int]:
        return [self.mul(c, scalar) for c in poly]

    def minimal_polynomial(self, element: int) -> BinaryPolynomial:
        """Product of (x + c) over the conjugates c = element^(2^j)"""
        conjugates = []
        c = element
        while c not in conjugates:
            conjugates.append(c)
            c = self.mul(c, c)
        poly = [1]
        for c in conjugates:
            poly = self.poly_mul(poly, [c, 1])
        if any(coefficient not in (0, 1) for coefficient in poly):
            raise ArithmeticError(f"minimal polynomial of {element} has non-binary coefficients")
        return BinaryPolynomial(tuple(poly))


@lru_cache(maxsize=None)
def _field(m: int, primitive_polynomial: int) -> FiniteField:
    return FiniteField(m, primitive_polynomial)


def extension_field(m: int) -> FiniteField:
    """Cached GF(2^m) using the configured primitive polynomial"""
    poly = get_settings().primitive_polynomials.get(m, PRIMITIVE_POLYNOMIALS.get(m, 0b11 if m == 1 else None))
    if poly is None:
        raise ValueError(f"Invalid field degree: no primitive polynomial known for m={m}")
    return _field(m, poly)


def multiplicative_order(base: int, modulus: int) -> int:
    """Smallest k >= 1 with base^k = 1 mod modulus"""
    if modulus < 1 or np.gcd(base, modulus) != 1:
        raise ValueError(f"Invalid arguments: {base} is not invertible mod {modulus}")
    if modulus == 1:
        return 1
    k, value = 1, base % modulus
    while value != 1:
        value = (value * base) % modulus
        k += 1
    return k


def field_for_length(N: int) -> FiniteField:
    """Smallest GF(2^m) containing a primitive N-th root of unity"""
    return extension_field(multiplicative_order(2, N))


def _require_odd(N: int) -> None:
    if N < 1 or N % 2 == 0:
        raise ValueError(f"Invalid length: N must be odd for binary cyclic codes, got {N}")


def cyclotomic_coset(i: int, N: int) -> FrozenSet[int]:
    """Orbit of i under doubling mod N"""
    _require_odd(N)
    coset = set()
    value = i % N
    while value not in coset:
        coset.add(value)
        value = (2 * value) % N
    return frozenset(coset)


def cyclotomic_cosets(N: int) -> List[FrozenSet[int]]:
    """All cosets mod N, ordered by smallest member"""
    _require_odd(N)
    cosets, seen = [], set()
    for i in range(N):
        if i not in seen:
            coset = cyclotomic_coset(i, N)
            cosets.append(coset)
            seen |= coset
    return cosets


def is_doubling_closed(defining_set: Iterable[int], N: int) -> bool:
    defining_set = set(defining_set)
    return all((2 * i) % N in defining_set for i in defining_set)


def bch_defining_set(N: int, b: int, d_bch: int) -> FrozenSet[int]:
    """Union of the cosets of b, b+1, ..., b+d_bch-2"""
    _require_odd(N)
    result: Set[int] = set()
    for j in range(d_bch - 1):
        result |= cyclotomic_coset((b + j) % N, N)
    return frozenset(result)


def generator_polynomial(defining_set: Iterable[int], gf: FiniteField, N: int) -> BinaryPolynomial:
    """
    Generator polynomial with roots alpha_N^i for i in the defining set.

    Args:
        defining_set: Doubling-closed set of exponents mod N
        gf: Field containing a primitive N-th root of unity
        N: Code length

    Returns:
        The product of minimal polynomials, one per coset
    """
    defining_set = {i % N for i in defining_set}
    if not is_doubling_closed(defining_set, N):
        raise ValueError(f"Invalid defining set: {sorted(defining_set)} is not closed under doubling mod {N}")
    alpha = gf.root_of_unity(N)
    generator = BinaryPolynomial.one()
    remaining = set(defining_set)
    while remaining:
        representative = min(remaining)
        generator = generator * gf.minimal_polynomial(gf.pow(alpha, representative))
        remaining -= cyclotomic_coset(representative, N)
    return generator


def dual_defining_set(defining_set: Iterable[int], N: int) -> FrozenSet[int]:
    """Defining set of the dual code: union of C_{-i} over i outside the defining set"""
    _require_odd(N)
    defining_set = {i % N for i in defining_set}
    result: Set[int] = set()
    for i in range(N):
        if i not in defining_set:
            result |= cyclotomic_coset((-i) % N, N)
    return frozenset(result)


def lemma7_violation(defining_set: Iterable[int], N: int) -> Optional[Tuple[int, int]]:
    """First i (in increasing order) whose negative -i mod N is also in the defining set"""
    defining_set = {i % N for i in defining_set}
    for i in sorted(defining_set):
        if (-i) % N in defining_set:
            return i, (-i) % N
    return None


def check_lemma7(defining_set: Iterable[int], N: int) -> bool:
    """True when no element of the defining set has its negative in it, i.e. the dual is contained in the code"""
    return lemma7_violation(defining_set, N) is None


def consecutive_run(defining_set: Iterable[int], N: int) -> Tuple[int, int]:
    """
    Longest run b, b+1, ... (cyclically) inside the defining set.

    Returns:
        (b, d) with d = run length + 1, the BCH bound of the set; (0, 1) for
        the empty set
    """
    defining_set = {i % N for i in defining_set}
    best_start, best_length = 0, 0
    for start in sorted(defining_set):
        length = 0
        while length < N and (start + length) % N in defining_set:
            length += 1
        if length > best_length:
            best_start, best_length = start, length
    return best_start, best_length + 1


def gf2_rank(matrix: np.ndarray) -> int:
    """Rank over GF(2)"""
    matrix = np.asarray(matrix, dtype=int) % 2
    if matrix.size == 0:
        return 0
    reduced = GF2(matrix).row_reduce()
    return int(np.count_nonzero(np.any(reduced != 0, axis=1)))


def row_space_contains(A: np.ndarray, B: np.ndarray) -> bool:
    """True when every row of B lies in the GF(2) row space of A"""
    B = np.asarray(B, dtype=int)
    if B.size == 0:
        return True
    A = np.asarray(A, dtype=int).reshape(-1, B.shape[1])
    return gf2_rank(np.vstack([A, B])) == gf2_rank(A)


@dataclass(frozen=True)
class CyclicCodeSpec:
    """
    Binary cyclic code of odd length N given by its defining set.

    ``d_bch`` and ``b`` describe the consecutive window
    {b, ..., b + d_bch - 2} inside the defining set, which bounds the
    minimum distance from below.
    """

    N: int
    defining_set: FrozenSet[int]
    generator: BinaryPolynomial
    d_bch: int
    b: int = 1
    gf: FiniteField = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        _require_odd(self.N)
        object.__setattr__(self, 'defining_set', frozenset(i % self.N for i in self.defining_set))
        if self.gf is None:
            object.__setattr__(self, 'gf', field_for_length(self.N))
        if not is_doubling_closed(self.defining_set, self.N):
            raise ValueError("Invalid cyclic code: defining set is not a union of cyclotomic cosets")
        if self.generator.degree != len(self.defining_set):
            raise ValueError(
                f"Invalid cyclic code: generator degree {self.generator.degree} "
                f"differs from |I_C| = {len(self.defining_set)}"
            )
        if not (BinaryPolynomial.x_n_minus_one(self.N) % self.generator).is_zero():
            raise ValueError(f"Invalid cyclic code: generator does not divide x^{self.N} - 1")
        window = {(self.b + j) % self.N for j in range(self.d_bch - 1)}
        if not window <= self.defining_set:
            raise ValueError(f"Invalid cyclic code: designed distance {self.d_bch} exceeds the root window")

    @property
    def K(self) -> int:
        return self.N - len(self.defining_set)

    @property
    def m(self) -> int:
        return self.gf.m

    @property
    def alpha(self) -> int:
        """Primitive N-th root of unity used for the defining set"""
        return self.gf.root_of_unity(self.N)

    @cached_property
    def generator_matrix(self) -> np.ndarray:
        """K x N matrix whose row i is x^i g(x)"""
        rows = [self.generator.shift(i).to_array(self.N) for i in range(self.K)]
        return np.array(rows, dtype=np.uint8).reshape(self.K, self.N)

    @cached_property
    def parity_check_matrix(self) -> np.ndarray:
        """(N - K) x N matrix whose rows span the null space of the generator matrix"""
        if self.K == 0:
            return np.eye(self.N, dtype=np.uint8)
        return np.array(GF2(self.generator_matrix.astype(int)).null_space(), dtype=np.uint8)

    def contains(self, word: Sequence[int]) -> bool:
        return (BinaryPolynomial.from_array(word) % self.generator).is_zero()

    def syndromes(self, word: Sequence[int]) -> List[int]:
        """r(alpha^(b+i)) for i = 0 .. d_bch - 2"""
        poly = [int(bit) for bit in word]
        alpha = self.alpha
        return [
            self.gf.poly_eval(poly, self.gf.pow(alpha, self.b + i)) for i in range(self.d_bch - 1)
        ]

    def describe(self) -> BchDescriptionDict:
        return {
            'N': self.N,
            'b': self.b,
            'd_bch': self.d_bch,
            'm': self.m,
            'primitive_poly': str(self.gf.polynomial),
            'defining_set': sorted(self.defining_set),
            'generator': self.generator.to_bits(),
            'K': self.K,
        }


def cyclic_code(N: int, defining_set: Iterable[int]) -> CyclicCodeSpec:
    """Cyclic code from a defining set; b and d_bch come from its longest consecutive run"""
    gf = field_for_length(N)
    defining_set = frozenset(i % N for i in defining_set)
    b, d_bch = consecutive_run(defining_set, N)
    return CyclicCodeSpec(N, defining_set, generator_polynomial(defining_set, gf, N), d_bch, b, gf)


def bch_code(N: int, b: int = 1, d_bch: int = 3) -> CyclicCodeSpec:
    """
    Binary BCH code of length N with designed distance d_bch.

    Raises:
        ValueError: For even N or d_bch outside [2..N]
    """
    is_valid, error = validate_bch_parameters(N, b, d_bch)
    if not is_valid:
        raise ValueError(f"Invalid BCH parameters: {error}")
    gf = field_for_length(N)
    defining_set = bch_defining_set(N, b, d_bch)
    generator = generator_polynomial(defining_set, gf, N)
    code = CyclicCodeSpec(N, defining_set, generator, d_bch, b % N, gf)
    logger.debug(f"Built BCH code [{N},{code.K}] with d_bch={d_bch}, generator {generator}")
    return code


def dual_code(code: CyclicCodeSpec) -> CyclicCodeSpec:
    return cyclic_code(code.N, dual_defining_set(code.defining_set, code.N))


def is_dual_pair(code: CyclicCodeSpec, dual: CyclicCodeSpec) -> bool:
    """
    Check that ``dual`` is exactly the null space of ``code``'s generator matrix.

    The generator matrices must be orthogonal mod 2 and their dimensions
    must add up to N.
    """
    if code.N != dual.N or code.K + dual.K != code.N:
        return False
    product = (code.generator_matrix.astype(int) @ dual.generator_matrix.astype(int).T) % 2
    return not np.any(product)


def encode_classical(code: CyclicCodeSpec, message: Sequence[int]) -> np.ndarray:
    """
    Systematic encoding.

    The message occupies positions N-K .. N-1 and the remainder of
    x^(N-K) m(x) modulo g(x) fills positions 0 .. N-K-1.
    """
    message = np.asarray(message, dtype=np.uint8)
    if message.shape != (code.K,):
        raise ValueError(f"Invalid message: expected {code.K} bits, got {message.size}")
    if np.any(message > 1):
        raise ValueError("Invalid message: bits must be 0 or 1")
    shifted = BinaryPolynomial.from_array(message).shift(code.N - code.K)
    return (shifted + shifted % code.generator).to_array(code.N)


def extract_message(code: CyclicCodeSpec, codeword: Sequence[int]) -> np.ndarray:
    return np.asarray(codeword, dtype=np.uint8)[code.N - code.K:]


@dataclass(frozen=True)
class DecodeOutcome:
    """Result of errors-and-erasures decoding; ``Failure`` is an ordinary outcome"""

    status: DecodeStatusName
    codeword: Tuple[int, ...]
    error_positions: FrozenSet[int] = frozenset()
    erasure_values: Dict[int, int] = field(default_factory=dict)

    @property
    def corrected(self) -> bool:
        return self.status == 'Corrected'

    def to_dict(self) -> DecodeOutcomeDict:
        return {
            'status': self.status,
            'codeword': ''.join(str(bit) for bit in self.codeword),
            'error_positions': sorted(self.error_positions),
            'erasure_values': {str(k): int(v) for k, v in sorted(self.erasure_values.items())},
        }


def _prepare(code: CyclicCodeSpec, received: Sequence[int], erasures: Iterable[int]) -> Tuple[np.ndarray, List[int]]:
    received = [int(bit) for bit in received]
    is_valid, error = validate_received_word(received, code.N)
    if not is_valid:
        raise ValueError(f"Invalid received word: {error}")
    erasures = sorted(int(e) for e in erasures)
    is_valid, error = validate_erasure_positions(erasures, code.N)
    if not is_valid:
        raise ValueError(f"Invalid erasures: {error}")
    word = np.array(received, dtype=np.uint8)
    word[erasures] = 0
    return word, erasures


def berlekamp_massey(gf: FiniteField, syndromes: Sequence[int]) -> Tuple[List[int], int]:
    """
    Shortest LFSR generating the syndrome sequence.

    Returns:
        (connection polynomial lowest degree first, its length L)
    """
    C, B = [1], [1]
    L, shift, last = 0, 1, 1
    for n, syndrome in enumerate(syndromes):
        discrepancy = syndrome
        for i in range(1, L + 1):
            if i < len(C):
                discrepancy ^= gf.mul(C[i], syndromes[n - i])
        if discrepancy == 0:
            shift += 1
            continue
        correction = [0] * shift + gf.poly_scale(B, gf.div(discrepancy, last))
        if 2 * L <= n:
            previous = C
            C = gf.poly_add(C, correction)
            L, B, last, shift = n + 1 - L, previous, discrepancy, 1
        else:
            C = gf.poly_add(C, correction)
            shift += 1
    while len(C) > 1 and C[-1] == 0:
        C.pop()
    return C, L


def _formal_derivative(poly: Sequence[int]) -> List[int]:
    # in characteristic 2 only odd powers survive
    return [poly[i] if i % 2 == 1 else 0 for i in range(1, len(poly))]


def _failure(word: np.ndarray, reason: str) -> DecodeOutcome:
    logger.debug(f"Decoding failed: {reason}")
    return DecodeOutcome('Failure', tuple(int(b) for b in word))


def decode_errors_and_erasures(code: CyclicCodeSpec, received: Sequence[int],
                               erasures: Iterable[int] = ()) -> DecodeOutcome:
    """
    Correct nu erasures and t errors whenever nu + 2t < d_bch.

    Erased positions are zero-filled and folded into an erasure locator
    Gamma(x); Berlekamp-Massey runs on the Forney syndromes (the
    coefficients nu .. d_bch-2 of Gamma(x) S(x)) to find the error locator,
    Chien search finds its roots and the Forney formula gives the values at
    all error and erasure locations.

    Args:
        code: The cyclic code
        received: N received bits (values at erased positions are ignored)
        erasures: 0-based erased positions

    Returns:
        DecodeOutcome with status Corrected or Failure
    """
    word, erasures = _prepare(code, received, erasures)
    gf, N = code.gf, code.N
    delta = code.d_bch - 1
    nu = len(erasures)
    if nu > delta:
        return _failure(word, f"{nu} erasures exceed d_bch - 1 = {delta}")

    syndromes = code.syndromes(word)
    if not any(syndromes) and code.contains(word):
        return DecodeOutcome('Corrected', tuple(int(b) for b in word), frozenset(),
                             {e: 0 for e in erasures})

    alpha = code.alpha
    locators = {e: gf.pow(alpha, e) for e in erasures}
    gamma = [1]
    for e in erasures:
        gamma = gf.poly_mul(gamma, [1, locators[e]])
    modified = gf.poly_mul(gamma, syndromes)[:delta]
    modified += [0] * (delta - len(modified))
    sigma, L = berlekamp_massey(gf, modified[nu:delta])

    if nu + 2 * L > delta:
        return _failure(word, f"nu + 2t = {nu + 2 * L} reaches d_bch = {code.d_bch}")
    error_positions = [j for j in range(N) if gf.poly_eval(sigma, gf.pow(alpha, N - j)) == 0]
    if len(error_positions) != L or set(error_positions) & set(erasures):
        return _failure(word, "error locator roots do not match its degree")

    psi = gf.poly_mul(sigma, gamma)
    omega = gf.poly_mul(syndromes, psi)[:delta]
    derivative = _formal_derivative(psi)
    corrected = word.copy()
    erasure_values: Dict[int, int] = {}
    for j in sorted(error_positions + erasures):
        x = gf.pow(alpha, j)
        x_inv = gf.pow(alpha, N - j)
        denominator = gf.poly_eval(derivative, x_inv)
        if denominator == 0:
            return _failure(word, f"Forney denominator vanishes at position {j}")
        value = gf.mul(gf.pow(x, (1 - code.b) % gf.group_order), gf.div(gf.poly_eval(omega, x_inv), denominator))
        if value not in (0, 1) or (j in error_positions and value != 1):
            return _failure(word, f"non-binary error value at position {j}")
        corrected[j] ^= value
        if j in locators:
            erasure_values[j] = value

    if not code.contains(corrected):
        return _failure(word, "corrected word is not a codeword")
    return DecodeOutcome('Corrected', tuple(int(b) for b in corrected), frozenset(error_positions), erasure_values)


def decode_erasures_only(code: CyclicCodeSpec, received: Sequence[int], erasures: Iterable[int]) -> DecodeOutcome:
    """
    Fill erasures by solving H_E x = H r over GF(2).

    Succeeds only when the unerased bits are error free and the erased
    columns of the parity-check matrix are independent.
    """
    word, erasures = _prepare(code, received, erasures)
    H = code.parity_check_matrix.astype(int)
    syndrome = (H @ word.astype(int)) % 2
    if not erasures:
        if np.any(syndrome):
            return _failure(word, "nonzero syndrome without erasures")
        return DecodeOutcome('Corrected', tuple(int(b) for b in word))
    augmented = GF2(np.hstack([H[:, erasures], syndrome[:, None]]))
    reduced = np.array(augmented.row_reduce(), dtype=int)
    coefficient_rank = gf2_rank(H[:, erasures])
    if gf2_rank(reduced) != coefficient_rank:
        return _failure(word, "erasure system is inconsistent")
    if coefficient_rank < len(erasures):
        return _failure(word, "erased positions are not uniquely determined")
    values = reduced[:len(erasures), -1]
    corrected = word.copy()
    corrected[erasures] = values
    return DecodeOutcome(
        'Corrected', tuple(int(b) for b in corrected), frozenset(),
        {e: int(v) for e, v in zip(erasures, values)},
    )


def _require_enumerable(dimension: int) -> None:
    cap = get_settings().max_bruteforce_dimension
    if dimension > cap:
        raise ValueError(f"Invalid code: dimension {dimension} exceeds the enumeration cap {cap}")


def _row_space_chunks(generator: np.ndarray, chunk: int = 1 << 14):
    """Yield blocks of row-space vectors covering all 2^k combinations of the rows"""
    G = np.asarray(generator, dtype=np.int64)
    k = G.shape[0]
    shifts = np.arange(k, dtype=np.int64)
    for start in range(0, 1 << k, chunk):
        indices = np.arange(start, min(start + chunk, 1 << k), dtype=np.int64)
        messages = (indices[:, None] >> shifts) & 1
        yield (messages @ G) % 2


def enumerate_row_space(generator: np.ndarray) -> np.ndarray:
    """
    Every GF(2) combination of the rows of a full-rank generator matrix.

    Row i of the result combines the generator rows selected by the bits of i.
    """
    generator = np.asarray(generator, dtype=np.uint8)
    _require_enumerable(generator.shape[0])
    if generator.shape[0] == 0:
        return np.zeros((1, generator.shape[1]), dtype=np.uint8)
    return np.vstack(list(_row_space_chunks(generator))).astype(np.uint8)


def min_weight(generator: np.ndarray) -> int:
    """Minimum weight of a nonzero vector in the row space"""
    generator = np.asarray(generator, dtype=np.uint8)
    _require_enumerable(generator.shape[0])
    best = None
    for block in _row_space_chunks(generator):
        weights = block.sum(axis=1)
        nonzero = weights[weights > 0]
        if nonzero.size:
            best = int(nonzero.min()) if best is None else min(best, int(nonzero.min()))
    if best is None:
        raise ValueError("Invalid code: the zero code has no nonzero codewords")
    return best


def codebook(code: CyclicCodeSpec) -> np.ndarray:
    """All 2^K codewords"""
    return enumerate_row_space(code.generator_matrix)


def min_distance_bruteforce(code: CyclicCodeSpec) -> int:
    """Minimum weight over the 2^K - 1 nonzero codewords"""
    return min_weight(code.generator_matrix)


def nearest_codeword_bruteforce(code: CyclicCodeSpec, received: Sequence[int],
                                erasures: Iterable[int] = ()) -> Tuple[np.ndarray, int, bool]:
    """
    Exhaustive decoding with erasures ignored in the distance.

    Returns:
        (codeword, distance on unerased positions, whether the nearest codeword is unique)
    """
    word, erasures = _prepare(code, received, erasures)
    mask = np.ones(code.N, dtype=bool)
    mask[erasures] = False
    words = codebook(code)
    distances = (words[:, mask] != word[mask]).sum(axis=1)
    best = int(distances.min())
    winners = np.flatnonzero(distances == best)
    return words[winners[0]], best, len(winners) == 1
