"""
Standard families of association schemes
Cyclic, group (from a Cayley table), Hamming and Johnson schemes as class matrices
"""
import itertools
import logging
from typing import List, Sequence

from scheme.association import ClassMatrix

logger = logging.getLogger(__name__)


class GenerationError(ValueError):
    """Invalid parameters for a scheme family"""


def gen_cyclic(n: int) -> ClassMatrix:
    """class_of(x, y) = (y - x) mod n"""
    if n < 1:
        raise GenerationError(f"cyclic scheme needs n >= 1, got {n}")
    return ClassMatrix.from_function(n, lambda x, y: (y - x) % n)


def _check_group_table(table: Sequence[Sequence[int]]) -> List[int]:
    """Validate a Cayley table and return the inverse of each element"""
    n = len(table)
    if n == 0:
        raise GenerationError("empty Cayley table")
    for a, row in enumerate(table):
        if len(row) != n or any(not 0 <= b < n for b in row):
            raise GenerationError(f"row {a} of the Cayley table is not a map into {n} elements")
    identities = [e for e in range(n) if all(table[e][a] == a and table[a][e] == a for a in range(n))]
    if not identities:
        raise GenerationError("Cayley table has no identity element")
    e = identities[0]
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GenerationError(f"Cayley table is not associative at ({a},{b},{c})")
    inverses = []
    for a in range(n):
        found = [b for b in range(n) if table[a][b] == e and table[b][a] == e]
        if not found:
            raise GenerationError(f"element {a} has no inverse")
        inverses.append(found[0])
    return inverses


def gen_group(table: Sequence[Sequence[int]]) -> ClassMatrix:
    """class_of(x, y) = y . x^-1 for a group given by its Cayley table"""
    inverses = _check_group_table(table)
    return ClassMatrix.from_function(len(table), lambda x, y: table[y][inverses[x]])


def gen_hamming(n: int, q: int) -> ClassMatrix:
    """Words of length n over q letters, classes by Hamming distance"""
    if n < 1 or q < 2:
        raise GenerationError(f"Hamming scheme needs n >= 1 and q >= 2, got n={n}, q={q}")
    words = list(itertools.product(range(q), repeat=n))
    return ClassMatrix.from_function(
        len(words), lambda x, y: sum(a != b for a, b in zip(words[x], words[y]))
    )


def gen_johnson(v: int, k: int) -> ClassMatrix:
    """k-subsets of a v-set, class k - |x & y|"""
    if not 0 <= k <= v:
        raise GenerationError(f"Johnson scheme needs 0 <= k <= v, got v={v}, k={k}")
    subsets = [frozenset(c) for c in itertools.combinations(range(v), k)]
    return ClassMatrix.from_function(len(subsets), lambda x, y: k - len(subsets[x] & subsets[y]))
