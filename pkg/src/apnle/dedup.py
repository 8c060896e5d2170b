"""Group search solutions into certified-inequivalent buckets.

Fingerprints are necessary conditions for CCZ-equivalence: distinct
fingerprints certify inequivalence, equal fingerprints only say
"matches-fingerprint-of".  Groups whose fingerprint matches no known
fixture are flagged POTENTIALLY-NEW; equivalence itself is never claimed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import reference, vbf


@dataclass
class SolutionGroup:
    fingerprint: vbf.CczFingerprint
    members: list[list[int]]
    known_match: str | None

    @property
    def potentially_new(self) -> bool:
        return self.known_match is None


def known_fixtures(n: int) -> list[tuple[str, list[int]]]:
    """Labeled reference functions to compare solution groups against."""
    out = []
    k = vbf.field(n) if n >= 2 else None
    for d in reference.KNOWN_APN_MONOMIAL_PERMUTATIONS.get(n, ()):
        out.append((f"monomial x^{d} n={n}", vbf.monomial_lut(k, d)))
    if n == 6:
        out.append(("dillon n=6", vbf.dillon_fixture()))
        k3 = vbf.field(3)
        alpha = next(a for a in range(1, 8) if k3.trace(a) == 0)
        out.append(("butterfly n=6", vbf.butterfly(alpha, 1)))
    return out


def group(solutions, known: list[tuple[str, list[int]]] | None = None,
          n: int | None = None) -> list[SolutionGroup]:
    """Partition solutions by fingerprint and label known matches."""
    if not solutions:
        return []
    dims = {vbf.lut_dim(f) for f in solutions}
    if len(dims) != 1:
        raise ValueError("solutions must share a dimension")
    if known is None:
        known = known_fixtures(n if n is not None else dims.pop())
    fixture_fp = {}
    for label, lut in known:
        fixture_fp.setdefault(vbf.fingerprint(lut).digest(), label)
    buckets: dict[str, SolutionGroup] = {}
    for f in solutions:
        fp = vbf.fingerprint(f)
        dig = fp.digest()
        if dig not in buckets:
            buckets[dig] = SolutionGroup(fp, [], fixture_fp.get(dig))
        buckets[dig].members.append(list(f))
    return [buckets[d] for d in sorted(buckets)]


def groups_to_json(groups: list[SolutionGroup]) -> str:
    items = []
    for g in groups:
        items.append({
            "fingerprint_digest": g.fingerprint.digest(),
            "fingerprint": g.fingerprint.to_json_dict(),
            "member_count": len(g.members),
            "members": [vbf.lut_to_hex(m) for m in g.members],
            "known_match": g.known_match,
            "potentially_new": g.potentially_new,
        })
    return json.dumps({"schema": reference.SCHEMA_GROUPS, "groups": items},
                      indent=1)
