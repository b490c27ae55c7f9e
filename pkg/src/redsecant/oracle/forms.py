"""Homogeneous forms over Z/p on the dense graded monomial basis.

A form is its coefficient vector, indexed by the colex rank of the exponent
vector.  Products go through the cached multiplication tables; tangent-cone
generators G_k = prod_{i != k} F_i come from prefix/suffix partial products,
so polynomial division is never needed.  The linear-elimination helpers
substitute pivot variables of linear generators away exactly, shrinking the
ring before any rank computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .monomials import exponents, grade_size, mul_table, rank_rows


@dataclass(frozen=True)
class HomogeneousForm:
    n: int
    degree: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        want = grade_size(self.n, self.degree)
        coeffs = np.ascontiguousarray(self.coeffs, np.int64)
        if coeffs.shape != (want,):
            raise ValueError(
                f"degree-{self.degree} form in {self.n} variables needs "
                f"{want} coefficients, got shape {coeffs.shape}"
            )
        coeffs.flags.writeable = False
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def __repr__(self) -> str:
        return f"HomogeneousForm(n={self.n}, degree={self.degree})"


def one_form(n: int) -> HomogeneousForm:
    return HomogeneousForm(n, 0, np.ones(1, np.int64))


def monomial_form(n: int, exponent, p: int, coefficient: int = 1) -> HomogeneousForm:
    """The single monomial x^exponent with the given coefficient."""
    exponent = tuple(int(e) for e in exponent)
    if len(exponent) != n or any(e < 0 for e in exponent):
        raise ValueError(f"bad exponent {exponent} for n={n}")
    d = sum(exponent)
    coeffs = np.zeros(grade_size(n, d), np.int64)
    coeffs[rank_rows(np.asarray([exponent]))[0]] = coefficient % p
    return HomogeneousForm(n, d, coeffs)


def random_form(n: int, e: int, p: int, rng: np.random.Generator) -> HomogeneousForm:
    """Uniform coefficients in Z/p over the full dense basis."""
    if e < 0:
        raise ValueError(f"need e >= 0, got {e}")
    return HomogeneousForm(n, e, rng.integers(0, p, size=grade_size(n, e), dtype=np.int64))


def multiply(f: HomogeneousForm, g: HomogeneousForm, p: int) -> HomogeneousForm:
    if f.n != g.n:
        raise ValueError(f"variable counts differ: {f.n} vs {g.n}")
    table = mul_table(f.n, f.degree, g.degree)
    out = np.zeros(grade_size(f.n, f.degree + g.degree), np.int64)
    prod = (f.coeffs[:, None] * g.coeffs[None, :]) % p
    np.add.at(out, table, prod)
    return HomogeneousForm(f.n, f.degree + g.degree, out % p)


def tangent_generators(factors, p: int) -> tuple[HomogeneousForm, ...]:
    """G_k = product of all factors except the k-th, via partial products."""
    factors = list(factors)
    r = len(factors)
    if r < 2:
        raise ValueError(f"need at least two factors, got {r}")
    n = factors[0].n
    if any(f.n != n for f in factors):
        raise ValueError("factors live in different variable counts")
    prefix = [one_form(n)]
    for f in factors:
        prefix.append(multiply(prefix[-1], f, p))
    suffix = [one_form(n)]
    for f in reversed(factors):
        suffix.append(multiply(f, suffix[-1], p))
    suffix.reverse()
    # prefix[k] = F_0 .. F_{k-1}, suffix[k+1] = F_{k+1} .. F_{r-1}
    return tuple(multiply(prefix[k], suffix[k + 1], p) for k in range(r))


# ------------------------------------------------------------
# Exact elimination of linear generators
# ------------------------------------------------------------


def _variable_order(n: int) -> np.ndarray:
    """ranks[v] = colex rank of the unit exponent vector e_v."""
    return rank_rows(np.eye(n, dtype=np.int64))


def _linear_rref(var_rows: np.ndarray, p: int) -> tuple[list[int], np.ndarray]:
    """RREF of linear forms written in variable coordinates.

    Returns (pivot variable indices, reduced rows); each reduced row has a
    unit entry at its pivot variable and zeros at every other pivot.
    """
    rows = np.array(var_rows, np.int64) % p
    pivots: list[int] = []
    kept: list[np.ndarray] = []
    for row in rows:
        for w, c in zip(kept, pivots):
            f = int(row[c])
            if f:
                row = (row - f * w) % p
        nz = row.nonzero()[0]
        if nz.size == 0:
            continue
        c = int(nz[0])
        row = (row * pow(int(row[c]), -1, p)) % p
        for i, w in enumerate(kept):
            f = int(w[c])
            if f:
                kept[i] = (w - f * row) % p
        kept.append(row)
        pivots.append(c)
    if kept:
        return pivots, np.vstack(kept)
    return pivots, np.zeros((0, rows.shape[1]), np.int64)


def substitute_out(form: HomogeneousForm, v: int, replacement: np.ndarray,
                   p: int) -> HomogeneousForm:
    """Substitute x_v = replacement (a linear form in the other variables).

    Writing form = sum_k x_v^k F_k with F_k free of x_v, the result is
    sum_k replacement^k * F_k in n-1 variables, exactly.
    """
    n, d = form.n, form.degree
    if n < 2:
        raise ValueError("cannot eliminate the last variable this way")
    out_n = n - 1
    exps = exponents(n, d)
    out = np.zeros(grade_size(out_n, d), np.int64)
    lin = HomogeneousForm(out_n, 1, np.asarray(replacement, np.int64) % p)
    power = one_form(out_n)
    for k in range(d + 1):
        if k > 0:
            power = multiply(power, lin, p)
        mask = exps[:, v] == k
        if not mask.any():
            continue
        sub = np.delete(exps[mask], v, axis=1)
        fk = np.zeros(grade_size(out_n, d - k), np.int64)
        fk[rank_rows(sub)] = form.coeffs[mask]
        if k == 0:
            out += fk
        else:
            out += multiply(HomogeneousForm(out_n, d - k, fk), power, p).coeffs
    return HomogeneousForm(out_n, d, out % p)


def eliminate_linear(linear_forms, other_forms, p: int):
    """Quotient by the span of the given linear forms, exactly.

    Returns (new_n, reduced_forms): the span has some rank q, each pivot
    variable is substituted by its expression in the free variables
    (highest pivot first, so positions of the remaining pivots never move),
    and every other form is rewritten in the n - q surviving variables.
    new_n = 0 means the linear forms span every variable.
    """
    linear_forms = list(linear_forms)
    other_forms = list(other_forms)
    if not linear_forms:
        return (other_forms[0].n if other_forms else 0), other_forms
    n = linear_forms[0].n
    order = _variable_order(n)
    var_rows = np.stack([f.coeffs[order] for f in linear_forms])
    pivots, rref = _linear_rref(var_rows, p)
    q = len(pivots)
    if q >= n:
        return 0, []
    # x_pivot = -(rest of its row); expressions involve free variables only.
    substitutions = sorted(
        zip(pivots, [(-rref[i]) % p for i in range(q)]), reverse=True
    )
    forms = other_forms
    pending = [expr.copy() for _, expr in substitutions]
    for step, (v, _) in enumerate(substitutions):
        expr = pending[step]
        replacement = np.delete(expr, v)
        forms = [substitute_out(f, v, replacement, p) for f in forms]
        for later in range(step + 1, q):
            # the coefficient at v is zero (RREF), so the column just drops
            pending[later] = np.delete(pending[later], v)
    return n - q, forms
