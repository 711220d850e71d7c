import logging
from itertools import combinations
from typing import Callable, List, Optional

import numpy as np

from ..core.exceptions import HexanetError
from ..schemas.report import CheckResult, IdentityReport
from .minors import ExactMatrix, dodgson_identity_check, dodgson_pyramid, unsigned_octahedron_check
from .networks import CORRESPONDENCE, apply_moves, hexahedron_residuals, labeled_values, matrix_to_network, transport
from .quaternionic import q_reconstruct, qdet, qdet_pfaffian
from .reconstruct import reconstruct, round_trip_check
from .scalars import Ring
from .tilings import flip_path, random_flips, standard_tiling

logger = logging.getLogger(__name__)


class IdentitySuite:
    """Runs the algebraic identities on one matrix and collects the outcome"""

    def __init__(self, seed: int = 42, flips: int = 6, paths: int = 3):
        self.seed = seed
        self.flips = flips
        self.paths = paths

    def _run(self, name: str, check: Callable[[], Optional[str]]) -> CheckResult:
        """check returns None on success or a description of the first failure"""
        try:
            detail = check()
        except HexanetError as e:
            logger.error(f"Check {name} raised {type(e).__name__}: {e}")
            return CheckResult(name=name, passed=False, detail=f"{type(e).__name__}: {e}")
        if detail is not None:
            logger.error(f"Check {name} failed: {detail}")
        return CheckResult(name=name, passed=detail is None, detail=detail)

    def hexahedron(self, m: ExactMatrix) -> Optional[str]:
        for base_size in range(m.n - 2):
            for chosen in combinations(range(1, m.n + 1), base_size + 3):
                for triple in combinations(chosen, 3):
                    base = frozenset(chosen) - set(triple)
                    values = labeled_values(m, CORRESPONDENCE, base, triple)
                    residuals = hexahedron_residuals(values)
                    if any(not r.is_zero() for r in residuals):
                        return f"residuals {[str(r) for r in residuals]} at base {sorted(base)}, triple {triple}"
        return None

    def dodgson(self, m: ExactMatrix) -> Optional[str]:
        for i, j in combinations(range(1, m.n + 1), 2):
            others = [x for x in range(1, m.n + 1) if x not in (i, j)]
            for k in range(len(others) + 1):
                for s in combinations(others, k):
                    if not dodgson_identity_check(m, frozenset(s), i, j):
                        return f"Dodgson identity fails for S={sorted(s)}, i={i}, j={j}"
        if not unsigned_octahedron_check(dodgson_pyramid(m)):
            return "signed pyramid breaks the unsigned octahedron recurrence"
        return None

    def path_independence(self, m: ExactMatrix) -> Optional[str]:
        if m.n < 3:
            return None
        rng = np.random.default_rng(self.seed)
        t0 = standard_tiling(m.n)
        target, moves = random_flips(t0, self.flips, rng)
        net = matrix_to_network(m)
        reference = apply_moves(net, moves)
        results = [transport(net, target)]
        for _ in range(self.paths):
            detour, _ = random_flips(t0, self.flips, rng)
            results.append(apply_moves(transport(net, detour), flip_path(detour, target)))
        for k, other in enumerate(results):
            if other.vertices != reference.vertices or other.faces != reference.faces:
                return f"path {k} reaches {target.key} with different labels"
        return None

    def round_trip(self, m: ExactMatrix) -> Optional[str]:
        if reconstruct(matrix_to_network(m)) != m:
            return "reconstruct does not invert the network map on the standard tiling"
        if m.n >= 3:
            _, moves = random_flips(standard_tiling(m.n), self.flips, np.random.default_rng(self.seed))
            if not round_trip_check(m, moves):
                return f"round trip through {len(moves)} flips changed the matrix"
        return None

    def quaternionic(self, m: ExactMatrix) -> Optional[str]:
        if qdet(m) != qdet_pfaffian(m):
            return f"qdet {qdet(m)} differs from the Pfaffian form {qdet_pfaffian(m)}"
        if q_reconstruct(matrix_to_network(m)) != m:
            return "q_reconstruct does not invert the quaternionic network map"
        return None

    def run(self, m: ExactMatrix) -> IdentityReport:
        if m.ring == Ring.QUAT:
            checks = [("quaternionic", self.quaternionic)]
        else:
            checks = [
                ("hexahedron", self.hexahedron),
                ("dodgson", self.dodgson),
                ("path_independence", self.path_independence),
                ("round_trip", self.round_trip),
            ]
        results: List[CheckResult] = [self._run(name, lambda fn=fn: fn(m)) for name, fn in checks]
        report = IdentityReport(n=m.n, ring=m.ring, checks=results)
        logger.info(f"Identity suite on n={m.n}: {sum(c.passed for c in results)}/{len(results)} checks passed")
        return report
