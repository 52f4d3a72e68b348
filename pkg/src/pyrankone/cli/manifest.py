"""
Traceability table: each subcommand and the statement it exercises.
"""
from typing import Dict

MANIFEST: Dict[str, str] = {
    "validate": "Schedule conditions: at least two copies per stage, spacers only between copies",
    "height": "Heights h_{n+1} = q_n h_n + sum of spacers, strictly increasing",
    "word": "Tower words: W_{n+1} begins and ends with W_n",
    "expected": "Expected occurrences E_{m,n} and their compositional structure",
    "prefix": "W_inf agrees with every W_n where W_n is defined",
    "classify": "Trichotomy of W_inf: periodic, bounded spacer runs, unbounded spacer runs",
    "witness": "A non-periodic W_inf has stages with non-constant gaps between expected occurrences",
    "occurrences": "Exact occurrence search",
    "unexpected": "Unexpected occurrences overlap two expected ones",
    "context-bound": "Contexts of length 2 h_k + h_n recognize expected occurrences",
    "minimal-context": "Smallest context length separating expected from unexpected occurrences",
    "recognize": "Recognition of expected starts from bounded context",
    "lemma": "An occurrence overlapping an expected one repeats its spacer gap (r = s)",
    "language": "The subshift as a closed shift-invariant set, through its finite language",
    "shift-code": "Powers of the shift as block codes",
    "codes": "Block codes preserving the language",
    "probe": "Every homeomorphism commuting with the shift is a power of the shift",
    "phi": "Return matching phi_x with i - h_1 < phi_x(i) <= i, Psi conjugation and offset recovery",
    "manifest": "This table",
    "point locate": "Nested towers: levels of stage n+1 lie in levels of stage n",
    "point extend": "Level indices are non-decreasing along nested towers",
    "point margins": "Interior points lie k levels away from base and top",
    "point zwindow": "Return times Z(x) to the stage-1 base",
    "point two-sided": "Z(x) is unbounded above and below for interior points",
    "point psi": "Gap function Psi_x along Z(x)",
    "point return-word": "Return word R_n and the count r_n of base visits per pass",
    "point congruence": "Psi_x is constant on all residue classes mod r_n but one",
    "point separate": "Distinct interior points are separated by a level and by Z(x)",
    "point sample": "Seeded interior addresses for sweeps",
}
