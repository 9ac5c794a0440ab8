"""Switching: the moves that preserve everything that matters.

Negating all orientations at one vertex (or within one edge) changes the
raw incidence data but none of the structural conclusions — balance
verdicts, Laplacian spectra, cycle signs.  Two orientations of the same
structure are "switching equivalent" when some set of such moves maps
one onto the other; the library finds the set or a cycle obstruction.
"""

import hypersign as hs

ex = hs.load_bundled("ex_c3_42")

# Scramble the example with a known certificate, then recover one.
secret = hs.SwitchCertificate(vertices=(2, 5), edges=(1,))
scrambled = hs.apply_switches(ex, secret)
found = hs.oriented_switch_equivalent(ex, scrambled)
print("recovered a certificate?", bool(found))
print("  vertices:", found.vertices, "edges:", found.edges)

# Certificates are involutions: the same moves map the target back.
back = hs.apply_switches(scrambled, found)
print("round trip restores the original?",
      all(back.orientation(j, v) == ex.orientation(j, v)
          for j in range(ex.m) for v in ex.members(j)))

# The example is NOT equivalent to its all-positive variant; the failure
# comes with a concrete cycle whose sign differs between the two.
plus = hs.all_positive_variant(ex)
verdict = hs.oriented_switch_equivalent(ex, plus)
print("\nequivalent to the all-positive variant?", bool(verdict))
cycle = verdict.cycle
print("  obstruction cycle:", " ".join(f"{k}{i}" for k, i in cycle.elements))
print("  sign in the example:", hs.incidence_sign_of(cycle, ex))
print("  sign in the all-positive variant:", hs.incidence_sign_of(cycle, plus))

# Edge-signed instances switch at vertices only; equivalence reduces to
# a parity (GF(2)) system with an explicit infeasibility witness.
sex = hs.induced_signed(ex)
minus = sex.with_gamma((-1,) * sex.m)
outcome = hs.signed_switch_equivalent(sex, minus)
print("\nedge-signed: all-positive signs vs all-negative signs equivalent?",
      bool(outcome))
print("  witness edge rows (their parity equations sum to 0 = 1):",
      outcome.witness_edges)
