"""The generic ternary code built from a pair of functions on F_3^m.

A validated pair (f, g) determines the code whose codewords are

    c(u, r, v) = (u f(x) + r g(x) + v . x)  over nonzero x in F_3^m,

for u, r in F_3 and v in F_3^m: length 3^m - 1, dimension m + 2.  The
validation hypotheses apply to every member of the four-function family
{f, g, f+g, f-g}: nonzero, vanishing at 0, and never equal to a linear
functional.

Weights and complete weight enumerators are computed from the four stored
count spectra without materializing codewords.  Each nonzero (u, r)
equals +/- one family member F, and the full-space character sum of the
codeword c(u, r, v) is F_hat at the shift -s*v (s the sign), so

    wt(c) = 2*3^(m-1) - rd(F, -s*v) / 3        (rd = doubled real part)

and the coordinate-value counts are the spectrum counts at that shift
(with N1/N2 swapped when s = -1, and the x = 0 coordinate, always of
value 0, removed from N0).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import gf3
from .errors import CapacityError, ConsistencyError, ValidationError
from .spectrum import CountSpectrum, TernaryFunction, combine, fast_count_spectrum

FAMILY_NAMES = ("f", "g", "f+g", "f-g")

# (u, r) -> (family member, sign) with u*f + r*g == sign * member pointwise
UR_TO_FAMILY: dict[tuple[int, int], tuple[str, int]] = {
    (1, 0): ("f", +1),
    (2, 0): ("f", -1),
    (0, 1): ("g", +1),
    (0, 2): ("g", -1),
    (1, 1): ("f+g", +1),
    (2, 2): ("f+g", -1),
    (1, 2): ("f-g", +1),
    (2, 1): ("f-g", -1),
}

# canonical (u, r) for each literal family member
FAMILY_TO_UR = {"f": (1, 0), "g": (0, 1), "f+g": (1, 1), "f-g": (1, 2)}


# ---------------------------------------------------------------------------
# Validated code specification
# ---------------------------------------------------------------------------


class CodeSpec:
    """A validated (m, f, g) pair with the four family spectra attached."""

    __slots__ = ("m", "f", "g", "family", "spectra")

    def __init__(self, m: int, f: TernaryFunction, g: TernaryFunction,
                 family: dict[str, TernaryFunction], spectra: dict[str, CountSpectrum]):
        self.m = m
        self.f = f
        self.g = g
        self.family = family
        self.spectra = spectra

    @property
    def length(self) -> int:
        return gf3.pow3(self.m) - 1

    @property
    def dimension(self) -> int:
        return self.m + 2

    @property
    def codeword_count(self) -> int:
        return 3 ** (self.m + 2)


def validate(m: int, f: TernaryFunction, g: TernaryFunction) -> CodeSpec:
    """Check the construction hypotheses and return a spec, or raise.

    The rejection names the offending family member and, for a linear
    coincidence, the witness shift index.
    """
    gf3.check_dimension(m)
    if f.m != m or g.m != m:
        raise ValueError(f"function dimensions ({f.m}, {g.m}) do not match m={m}")
    family = {
        "f": f,
        "g": g,
        "f+g": combine(1, 1, f, g),
        "f-g": combine(1, 2, f, g),
    }
    spectra: dict[str, CountSpectrum] = {}
    for name, F in family.items():
        if F.is_zero():
            raise ValidationError(
                f"family member {name} is the zero function",
                function_name=name, hypothesis="non-zero",
            )
        if F.value(0) != 0:
            raise ValidationError(
                f"family member {name} does not vanish at 0 (value {F.value(0)})",
                function_name=name, hypothesis="vanishes-at-zero",
            )
        sp = fast_count_spectrum(F)
        coincide = np.flatnonzero(sp.rd == 2 * gf3.pow3(m))
        if coincide.size:
            raise ValidationError(
                f"family member {name} equals the linear functional with index {int(coincide[0])}",
                function_name=name, hypothesis="linear-coset-free", witness=int(coincide[0]),
            )
        spectra[name] = sp
    return CodeSpec(m, f, g, family, spectra)


# ---------------------------------------------------------------------------
# Weights and enumerators from the stored spectra
# ---------------------------------------------------------------------------


def _exact_third(value: int) -> int:
    if value % 3:
        raise ConsistencyError(f"doubled real part {value} not divisible by 3")
    return value // 3


def weight_of(spec: CodeSpec, u: int, r: int, v: int) -> int:
    """Hamming weight of the codeword with parameters (u, r, v)."""
    u, r = u % 3, r % 3
    if not 0 <= v < gf3.pow3(spec.m):
        raise ValueError(f"shift index {v} out of range")
    if (u, r) == (0, 0):
        return 0 if v == 0 else 2 * 3 ** (spec.m - 1)
    name, sign = UR_TO_FAMILY[(u, r)]
    shift = gf3.neg_index(spec.m, v) if sign > 0 else v
    rd = spec.spectra[name].real_doubled(shift)
    return 2 * 3 ** (spec.m - 1) - _exact_third(rd)


@dataclass(frozen=True)
class WeightDistribution:
    """Map weight -> number of codewords, over all 3^(m+2) codewords."""

    entries: dict[int, int]

    def total(self) -> int:
        return sum(self.entries.values())

    def min_nonzero(self) -> int:
        return min(w for w in self.entries if w > 0)

    def max_weight(self) -> int:
        return max(self.entries)

    def sorted_items(self) -> list[tuple[int, int]]:
        return sorted(self.entries.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightDistribution) and self.entries == other.entries


@dataclass(frozen=True)
class CompleteWeightEnumerator:
    """Multiset of exponent triples (t0, t1, t2) with multiplicities."""

    terms: dict[tuple[int, int, int], int]

    def total(self) -> int:
        return sum(self.terms.values())

    def sorted_items(self) -> list[tuple[tuple[int, int, int], int]]:
        return sorted(self.terms.items())

    def weight_marginal(self) -> WeightDistribution:
        entries: dict[int, int] = {}
        for (t0, t1, t2), mult in self.terms.items():
            w = t1 + t2
            entries[w] = entries.get(w, 0) + mult
        return WeightDistribution(entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, CompleteWeightEnumerator) and self.terms == other.terms


def weight_distribution(spec: CodeSpec) -> WeightDistribution:
    """Aggregate weights over all (u, r, v) from the four spectra."""
    m = spec.m
    total = gf3.pow3(m)
    entries: dict[int, int] = {0: 1}
    entries[2 * 3 ** (m - 1)] = entries.get(2 * 3 ** (m - 1), 0) + total - 1
    neg = gf3.neg_perm(m)
    for (_u, _r), (name, sign) in UR_TO_FAMILY.items():
        rd = spec.spectra[name].rd
        rd = rd[neg] if sign > 0 else rd
        if (rd % 3).any():
            raise ConsistencyError("doubled real part not divisible by 3")
        weights = 2 * 3 ** (m - 1) - rd // 3
        values, counts = np.unique(weights, return_counts=True)
        for w, c in zip(values, counts):
            entries[int(w)] = entries.get(int(w), 0) + int(c)
    dist = WeightDistribution(entries)
    if dist.total() != spec.codeword_count:
        raise ConsistencyError("weight distribution does not cover 3^(m+2) codewords")
    if dist.entries.get(0) != 1:
        raise ConsistencyError("weight 0 must occur exactly once")
    return dist


def cwe(spec: CodeSpec) -> CompleteWeightEnumerator:
    """Complete weight enumerator aggregated from the four spectra."""
    m = spec.m
    total = gf3.pow3(m)
    terms: dict[tuple[int, int, int], int] = {(total - 1, 0, 0): 1}
    simplex = (3 ** (m - 1) - 1, 3 ** (m - 1), 3 ** (m - 1))
    terms[simplex] = terms.get(simplex, 0) + total - 1
    neg = gf3.neg_perm(m)
    for (_u, _r), (name, sign) in UR_TO_FAMILY.items():
        sp = spec.spectra[name]
        if sign > 0:
            n0, n1, n2 = sp.n0[neg], sp.n1[neg], sp.n2[neg]
        else:
            n0, n1, n2 = sp.n0, sp.n2, sp.n1
        # x = 0 always contributes value 0 (family members vanish at 0)
        triples = np.stack([n0 - 1, n1, n2], axis=1)
        rows, counts = np.unique(triples, axis=0, return_counts=True)
        for row, c in zip(rows, counts):
            key = (int(row[0]), int(row[1]), int(row[2]))
            terms[key] = terms.get(key, 0) + int(c)
    result = CompleteWeightEnumerator(terms)
    if result.total() != spec.codeword_count:
        raise ConsistencyError("CWE multiplicities do not cover 3^(m+2) codewords")
    if any(t0 + t1 + t2 != total - 1 for (t0, t1, t2) in terms):
        raise ConsistencyError("CWE exponent triple does not sum to 3^m - 1")
    return result


# ---------------------------------------------------------------------------
# Materialized codewords (small m)
# ---------------------------------------------------------------------------

MATERIALIZE_MAX_M = 10


@dataclass(frozen=True)
class Codeword:
    u: int
    r: int
    v: int
    word: np.ndarray  # int8, length 3^m - 1, coordinates over nonzero x ascending

    def hamming_weight(self) -> int:
        return int(np.count_nonzero(self.word))


def _linear_values(m: int, v: int) -> np.ndarray:
    """v . x mod 3 for every index x, as int16."""
    digs = gf3.digits_table(m)
    out = np.zeros(gf3.pow3(m), dtype=np.int16)
    for i in range(m):
        d = (v // 3**i) % 3
        if d:
            out += d * digs[i]
    out %= 3
    return out


def materialize(spec: CodeSpec, u: int, r: int, v: int) -> Codeword:
    if spec.m > MATERIALIZE_MAX_M:
        raise CapacityError(f"materialize supports m <= {MATERIALIZE_MAX_M}, got m={spec.m}")
    u, r = u % 3, r % 3
    vals = (u * spec.f.table.astype(np.int16) + r * spec.g.table + _linear_values(spec.m, v)) % 3
    word = vals[1:].astype(np.int8)
    cw = Codeword(u, r, v, word)
    if cw.hamming_weight() != weight_of(spec, u, r, v):
        raise ConsistencyError(
            f"materialized weight {cw.hamming_weight()} disagrees with spectrum weight for (u={u}, r={r}, v={v})"
        )
    return cw


def all_codewords_matrix(spec: CodeSpec) -> tuple[np.ndarray, list[tuple[int, int, int]]]:
    """All 3^(m+2) codewords as an int8 matrix plus their (u, r, v) labels.

    Row order: (u, r) lexicographic, then v ascending.  Small-m helper for
    brute-force work (m <= 5).
    """
    if spec.m > 5:
        raise CapacityError(f"full codeword matrix supports m <= 5, got m={spec.m}")
    m = spec.m
    total = gf3.pow3(m)
    dots = gf3.dot_matrix(m)[:, 1:].astype(np.int16)  # rows: v, columns: nonzero x
    words = np.empty((9 * total, total - 1), dtype=np.int8)
    labels: list[tuple[int, int, int]] = []
    row = 0
    for u in range(3):
        for r in range(3):
            base = (u * spec.f.table[1:].astype(np.int16) + r * spec.g.table[1:]) % 3
            words[row : row + total] = (base[None, :] + dots) % 3
            labels.extend((u, r, v) for v in range(total))
            row += total
    return words, labels


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def result_json_obj(
    m: int,
    *,
    weights: WeightDistribution | None = None,
    cwe_terms: CompleteWeightEnumerator | None = None,
) -> dict:
    obj: dict = {"m": m, "length": gf3.pow3(m) - 1, "dimension": m + 2}
    if weights is not None:
        obj["weights"] = [[w, c] for w, c in weights.sorted_items()]
    if cwe_terms is not None:
        obj["cwe"] = [[t0, t1, t2, c] for (t0, t1, t2), c in cwe_terms.sorted_items()]
    return obj


def result_json(m: int, **kwargs) -> str:
    return json.dumps(result_json_obj(m, **kwargs), indent=2)


def weights_csv(weights: WeightDistribution) -> str:
    lines = ["weight,count"]
    lines.extend(f"{w},{c}" for w, c in weights.sorted_items())
    return "\n".join(lines) + "\n"


def cwe_csv(cwe_terms: CompleteWeightEnumerator) -> str:
    lines = ["t0,t1,t2,count"]
    lines.extend(f"{t0},{t1},{t2},{c}" for (t0, t1, t2), c in cwe_terms.sorted_items())
    return "\n".join(lines) + "\n"
