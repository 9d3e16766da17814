"""Smoke tests for the python bindings: one happy path per exposed operation."""

import math
import sys

import ambikit as ak

A = [1, 2, 0, 2, 4]
B = [2, 4, 0, 1, 2]

failures = []


def check(name, ok):
    print(f"{'PASS' if ok else 'FAIL'}  {name}")
    if not ok:
        failures.append(name)


check("worked pair is a partner", ak.is_partner(A, B))
check("modulus change is not a partner", not ak.is_partner(A, [1, 2, 0, 2, 3]))
check("worked pair has no trivial witness", ak.trivial_witness(A, B) is None)

w = ak.trivial_witness(A, ak.apply_trivial(0.4, -0.9, 0, False, A))
check("modulated copy is witnessed", w is not None and not w["reflected"])

check("gram criterion agrees", ak.gram_equal(A, B) and not ak.gram_equal(A, [1, 1]))

sig = ak.signature(A)
# center of row 0 is sum |a_j|^4 over the cross sequence: 1 + 16 + 16 + 256
check("signature rows", len(sig) == 5 and abs(sig[0][4] - 289.0) < 1e-9)

check("restricted check refuses the worked pair", ak.restricted_check(A, B) is None)

ka, kb = ak.kron_signal([1, 3], A), ak.kron_signal([3, 1], B)
check("kron transports partners", ak.is_partner(ka, kb))

ia, ib, degenerate = ak.interleave([1, 2, -1], 1.5)
check("interleave pair", ak.is_partner(ia, ib) and not degenerate)

check("b2/b3 classification", ak.is_b2([0, 1, 3]) and not ak.is_b3([0, 1, 3]))
rec = ak.recover_shift([0, 1, 8, 11], [-5, -4, 3, 6])
check("shift recovery", rec == {"orientation": "direct", "m": 5})

# float inputs cannot be exactified, so the hint certifies numerically
found = ak.strange_search(A, restarts=0, hints=[B])
check("hinted search returns the partner",
      len(found) == 1 and found[0]["certificate"] in ("exact", "numeric-only"))

scan = ak.partner_scan([2, -3, 1])
check("partner scan returns the reflection pair", len(scan) == 2)
check("genericity test", ak.is_generic([2, -3, 1]) and not ak.is_generic([-4, 0, 1]))

check("hermite expansion partner", ak.hermite_partner([1, 1, 0.5], [1, -1, 0.5]))

lag = ak.laguerre_cross(2, 3, 0.7, -0.4)
quad = ak.hermite_cross_quadrature(2, 3, 0.7, -0.4)
check("laguerre closed form vs quadrature", abs(lag - quad) < 1e-10)

pa = ak.pulse_ambiguity(A, "1/3", 0.0, 0.0)
check("pulse origin energy", abs(pa - 25.0 / 3.0) < 1e-12)
pq = ak.pulse_ambiguity_quadrature(A, "1/3", 1.2, 0.8)
check("pulse closed form vs quadrature",
      abs(ak.pulse_ambiguity(A, "1/3", 1.2, 0.8) - pq) < 1e-8)

check("box width cutoff", ak.box_ambiguity(0.25, 0.3, 1.0) == 0)

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
