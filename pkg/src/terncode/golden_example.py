"""Golden reference data for the [19682, 11, 834] code at (m, k1, k2) = (9, 2, 4).

Independently tabulated complete weight enumerator of the weight-shell
construction at its smallest admissible parameters, kept as a fixed
fixture: the ``verify-example`` CLI command and the acceptance suite
recompute the same object along two code paths and require exact,
term-by-term agreement with this table.

Terms are (multiplicity, t0, t1, t2).  The raw table keeps conjugate
terms separate and may repeat an exponent triple across entries;
:func:`golden_cwe` merges it into the canonical multiset.
"""

from __future__ import annotations

from .code import CompleteWeightEnumerator

GOLDEN_PARAMS = {
    "m": 9,
    "k1": 2,
    "k2": 4,
    "length": 19682,
    "dimension": 11,
    "wmin": 834,
    "wmax": 14226,
}

GOLDEN_TERMS: tuple[tuple[int, int, int, int], ...] = (
    (1, 19682, 0, 0),
    (19682, 6560, 6561, 6561),
    (1, 16976, 2706, 0),
    (1, 16976, 0, 2706),
    (1, 16850, 816, 2016),
    (1, 16850, 2016, 816),
    (1, 18848, 162, 672),
    (1, 18848, 672, 162),
    (1, 17504, 18, 2160),
    (1, 17504, 2160, 18),
    (18, 5456, 6993, 7233),
    (18, 5456, 7233, 6993),
    (18, 5537, 7584, 6561),
    (18, 5537, 6561, 7584),
    (18, 6113, 6672, 6897),
    (18, 6113, 6897, 6672),
    (18, 5777, 6576, 7329),
    (18, 5777, 7329, 6576),
    (144, 6293, 6744, 6645),
    (144, 6293, 6645, 6744),
    (144, 6338, 6783, 6561),
    (144, 6338, 6561, 6783),
    (144, 6365, 6630, 6687),
    (144, 6365, 6687, 6630),
    (144, 6407, 6573, 6702),
    (144, 6407, 6702, 6573),
    (672, 6590, 6603, 6489),
    (672, 6590, 6489, 6603),
    (672, 6608, 6513, 6561),
    (672, 6608, 6561, 6513),
    (672, 6509, 6597, 6576),
    (672, 6509, 6576, 6597),
    (672, 6596, 6570, 6516),
    (672, 6596, 6516, 6570),
    (2016, 6617, 6543, 6522),
    (2016, 6617, 6522, 6543),
    (2016, 6617, 6504, 6561),
    (2016, 6617, 6561, 6504),
    (2016, 6572, 6573, 6537),
    (2016, 6572, 6537, 6573),
    (2016, 6587, 6567, 6528),
    (2016, 6587, 6528, 6567),
    (4032, 6563, 6537, 6582),
    (4032, 6563, 6582, 6537),
    (4032, 6554, 6567, 6561),
    (4032, 6554, 6561, 6567),
    (4032, 6581, 6558, 6543),
    (4032, 6581, 6543, 6558),
    (4032, 6542, 6564, 6576),
    (4032, 6542, 6576, 6564),
    (5376, 6536, 6558, 6588),
    (5376, 6536, 6588, 6558),
    (5376, 6527, 6594, 6561),
    (5376, 6527, 6561, 6594),
    (5376, 6563, 6552, 6567),
    (5376, 6563, 6567, 6552),
    (5376, 6542, 6561, 6579),
    (5376, 6542, 6579, 6561),
    (4608, 6563, 6579, 6540),
    (4608, 6563, 6540, 6579),
    (4608, 6563, 6558, 6561),
    (4608, 6563, 6561, 6558),
    (4608, 6545, 6555, 6582),
    (4608, 6545, 6582, 6555),
    (4608, 6587, 6558, 6537),
    (4608, 6587, 6537, 6558),
    (2304, 6590, 6573, 6519),
    (2304, 6590, 6519, 6573),
    (2304, 6608, 6513, 6561),
    (2304, 6608, 6561, 6513),
    (2304, 6554, 6567, 6561),
    (2304, 6554, 6561, 6567),
    (2304, 6596, 6555, 6531),
    (2304, 6596, 6531, 6555),
    (512, 6482, 6513, 6687),
    (512, 6482, 6687, 6513),
    (512, 6527, 6594, 6561),
    (512, 6527, 6561, 6594),
    (512, 6617, 6588, 6477),
    (512, 6617, 6477, 6588),
    (512, 6407, 6552, 6723),
    (512, 6407, 6723, 6552),
)


def golden_cwe() -> CompleteWeightEnumerator:
    """The reference CWE as a merged multiset of exponent triples."""
    merged: dict[tuple[int, int, int], int] = {}
    for mult, t0, t1, t2 in GOLDEN_TERMS:
        key = (t0, t1, t2)
        merged[key] = merged.get(key, 0) + mult
    return CompleteWeightEnumerator(merged)
