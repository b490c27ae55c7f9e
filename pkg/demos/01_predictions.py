"""A tour of the dimension predictor.

Run with `python3 demos/01_predictions.py`.  Each block below picks an
instance, asks for the prediction, and narrates what the numbers mean.
"""

from redsecant import ProblemInstance, predict


def show(n, l, parts):
    inst = ProblemInstance(n, l, parts)
    rep = predict(inst)
    codim = inst.N - 1 - rep.predicted_dim
    print(f"sigma_{l} of the [{inst.partition.text()}] forms in {n} variables")
    print(f"  ambient P^{inst.N - 1}, dim X = {rep.dim_x}, "
          f"expected {rep.expected_dim}")
    print(f"  predicted {rep.predicted_dim} (codim {codim}), "
          f"defect {rep.defect}, fills: {rep.fills}")
    print(f"  status: {rep.status}" + (f" ({rep.citation})" if rep.citation else ""))
    for note in rep.errata_notes:
        print(f"  note: {note}")
    print()
    return rep


# The running example: three factors of degrees 3, 2, 2 in four variables,
# three secant points.  The count lands at 113, six short of the ambient
# P^119, and no proven regime covers it, so the status stays conjectural.
show(4, 3, [3, 2, 2])

# Two points on the plane-curve version of [9,7,2].  With d1 = 9 equal to
# s = 9 this sits in the defective branch of the secant-lines
# classification (demo 04), which proves the defect is exactly one.
show(3, 2, [9, 7, 2])

# Small secant index relative to n: 2l <= n is the proper-intersection
# range, where the prediction is a theorem.  This one fills.
show(4, 2, [2, 1])

# The same shape one variable up no longer fills: the ambient grows faster
# than the variety.
show(5, 2, [2, 1])

# A pair of linear forms is the classical variety of rank-2 quadrics; its
# secants are always understood, and for n = 6 the defect is 3.
show(6, 2, [1, 1])

# Overfilling: epsilon counts how far the naive count overshoots the
# ambient dimension.  For (3, 3, [1, 1]) the count exceeds P^5.
rep = show(3, 3, [1, 1])
print(f"epsilon = {rep.epsilon}, overly fills: {rep.overly_fills}")
