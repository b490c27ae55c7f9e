"""Checking predictions against exact linear algebra.

The oracle never trusts the series: it writes down the tangent ideals of
general points over a large prime field, stacks the degree-d pieces into a
matrix, and takes the rank.  Semicontinuity makes every reported rank a
certified lower bound on the true dimension, and a max over trials guards
against an unlucky specialization.
"""

from redsecant import (
    PrimeFieldConfig,
    ProblemInstance,
    froeberg_oracle_r2,
    oracle_run,
    predict,
    wlp_consequence_check,
)

cfg = PrimeFieldConfig(trials=2, seed=0)
print(f"working over F_p with p = {cfg.p}")
print()

# The running example again.  The oracle confirms 113 on the nose.
inst = ProblemInstance(4, 3, [3, 2, 2])
rep = predict(inst)
run = oracle_run(inst, cfg)
print(f"{inst.n} variables, l = {inst.l}, partition [{inst.partition.text()}]")
print(f"  predicted {rep.predicted_dim} ({rep.status}), "
      f"oracle {run.secant_dim}")
print(f"  trial ranks {run.trial_ranks}, matrix columns {run.columns}")
print()

# Asking for the full Hilbert function shows the quotient degree by
# degree; the degree-d value is the codimension.
run = oracle_run(inst, cfg, want_hilbert=True)
print("oracle Hilbert function:", run.hilbert)
print()

# Partitions with a linear part admit an elimination shortcut: quotienting
# by the linear generators drops to fewer variables and far fewer columns.
big = ProblemInstance(8, 6, [7, 1])
run = oracle_run(big, cfg)
print(f"[7,1] with n=8, l=6: oracle {run.secant_dim}, "
      f"eliminated={run.eliminated}, columns {run.columns} "
      f"(the ambient has {big.N})")
print()

# The Lefschetz ladder: when 2l > n the artinian comparison lives in more
# variables than the instance has, and descending one general linear form
# at a time must preserve the predicted Hilbert function.  Each rung is
# checked by a fresh oracle computation.
res = wlp_consequence_check(ProblemInstance(3, 2, [2, 2, 1]), cfg)
print(f"Lefschetz ladder for (3, 2, [2,2,1]): k = {res.k}, "
      f"passed = {res.passed}")
for lv in res.levels:
    print(f"  {lv.variables} variables: observed == predicted is {lv.matched}"
          f" ({lv.trials_used} trial(s))")
print()

# For two factors the same machinery answers a pure commutative-algebra
# question: l forms of degree k and l of degree d-k, no products, and the
# quotient's Hilbert function against the truncated series.
chk = froeberg_oracle_r2(4, 2, 2, 4, cfg)
print(f"2+2 generic forms of degrees (2,2) in 4 variables:")
print(f"  oracle HF {chk.hilbert}, series {chk.series}, "
      f"match = {chk.froeberg_match}")
print(f"  implied two-factor secant dimension {chk.implied_secant_dim}")
