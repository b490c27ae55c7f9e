"""Distinguished families: linear-factor, balanced, and all reducible forms.

Three families have their own closed forms and filling thresholds.  The
family functions route through the general predictor and then cross-check
the closed forms, so using them is also a consistency test.
"""

from redsecant import (
    PrimeFieldConfig,
    ProblemInstance,
    linear_factor_predict,
    oracle_run,
    predict,
    reducible_forms_predict,
    segre_report,
    threshold_l0,
)

# lambda = [d-1, 1]: a hypersurface of degree d-1 together with a moving
# hyperplane.  For n = 6, d = 3, l = 3 the dimension is 54, one short of
# the expected 55.
rep = linear_factor_predict(6, 3, 3)
print(f"[2,1] forms in 6 variables, l = 3: dim {rep.predicted_dim}, "
      f"defect {rep.defect} ({rep.status})")

# Filling kicks in at a threshold l0 that never exceeds n - 1.
for n in (4, 5, 6, 7, 8):
    print(f"  n = {n}: fills from l0 = {threshold_l0('linear_factor', n, 5)}")
print()

# The variety of ALL reducible degree-d forms is the union of the
# [d-k, k] components; its largest component, [d-1, 1], already carries
# the secant dimension, so the family report quotes a stand-in partition.
rep = reducible_forms_predict(6, 2, 2)
print(f"all reducible quadrics in 6 variables, l = 2: "
      f"dim {rep.predicted_dim} via stand-in [{rep.instance.partition.text()}]")
print(f"  {rep.status}: {rep.citation}")
print()

# Balanced splittings [d/2, d/2] have their own threshold scan.
for d in (2, 4, 6):
    print(f"balanced [d/2,d/2], d = {d}, n = 6: "
          f"l0 = {threshold_l0('balanced', 6, d)}")
print()

# Every instance here is also a statement about a Segre-like embedding of
# a product of projective spaces; the report spells out which one.
inst = ProblemInstance(4, 3, [3, 2, 2])
seg = segre_report(4, inst.partition, 3, predict(inst))
dims = " x ".join(f"P^{m - 1}" for m in seg.factors)
print(f"[3,2,2] in 4 variables corresponds to {dims}")
print(f"  balanced product: {seg.balanced}, "
      f"nondefectivity certified: {seg.nondefective_implied}")

# A proven nondefective instance does certify the Segre statement.
inst = ProblemInstance(7, 2, [1, 1, 1])
seg = segre_report(7, inst.partition, 2, predict(inst))
dims = " x ".join(f"P^{m - 1}" for m in seg.factors)
print(f"[1,1,1] in 7 variables corresponds to {dims}")
print(f"  balanced product: {seg.balanced}, "
      f"nondefectivity certified: {seg.nondefective_implied}")
print()

# The closed forms agree with the oracle as well; one spot check.
cfg = PrimeFieldConfig(trials=2, seed=0)
run = oracle_run(ProblemInstance(6, 3, [2, 1]), cfg)
print(f"oracle for (6, 3, [2,1]): {run.secant_dim} "
      f"(closed form said {linear_factor_predict(6, 3, 3).predicted_dim})")
