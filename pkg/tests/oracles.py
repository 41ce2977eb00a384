"""Independent reference computations used to check the main solver.

Nothing here calls ``rref``/``nullspace`` or ``constraint_matrix``: the
equations are produced by evaluating the defining identity on elementary
maps, and solved by eliminating one variable at a time by substitution.
"""

from fractions import Fraction
from itertools import combinations

from derivscope.algebra import Algebra, product


def _elementary(n, r, c):
    """Columns of the map sending e_c to e_r and everything else to 0."""
    cols = [[Fraction(0)] * n for _ in range(n)]
    cols[c][r] = Fraction(1)
    return cols


def _apply(cols, v):
    n = len(cols)
    out = [Fraction(0)] * n
    for j, x in enumerate(v):
        if x:
            for i in range(n):
                out[i] += x * cols[j][i]
    return out


def _unit(n, i):
    return [Fraction(int(k == i)) for k in range(n)]


def derivation_equations(a: Algebra, alpha, beta, gamma):
    """Each equation is a dict {variable (r, c): coefficient}.

    The residual of the identity is linear in D, so the coefficient of the
    variable D[r][c] is the residual of the elementary map at (r, c).
    """
    n = a.dim
    eqs = {}
    for r in range(n):
        for c in range(n):
            E = _elementary(n, r, c)
            for i in range(n):
                for j in range(n):
                    ei, ej = _unit(n, i), _unit(n, j)
                    lhs = _apply(E, product(a, ei, ej))
                    r1 = product(a, _apply(E, ei), ej)
                    r2 = product(a, ei, _apply(E, ej))
                    for k in range(n):
                        val = alpha * lhs[k] - beta * r1[k] - gamma * r2[k]
                        if val:
                            eqs.setdefault((i, j, k), {})[(r, c)] = val
    return list(eqs.values())


def substitution_rank(equations, variables):
    """Rank of a homogeneous system by successive substitution.

    ``solved`` maps a pivot variable to an expression in the other
    variables; each new equation is rewritten with the known pivots and, if
    anything remains, solved for its first remaining variable.
    """
    order = {v: k for k, v in enumerate(variables)}
    solved = {}
    for eq in equations:
        expr = {}
        for var, coeff in eq.items():
            if var in solved:
                for w, c in solved[var].items():
                    expr[w] = expr.get(w, 0) + coeff * c
            else:
                expr[var] = expr.get(var, 0) + coeff
        expr = {v: c for v, c in expr.items() if c}
        if not expr:
            continue
        pivot = min(expr, key=order.__getitem__)
        pc = expr.pop(pivot)
        sol = {v: -c / pc for v, c in expr.items()}
        for var, e in solved.items():
            if pivot in e:
                k = e.pop(pivot)
                for w, c in sol.items():
                    e[w] = e.get(w, 0) + k * c
                for w in [w for w, c in e.items() if not c]:
                    del e[w]
        solved[pivot] = sol
    return len(solved)


def derivation_dim(a: Algebra, alpha, beta, gamma) -> int:
    n = a.dim
    variables = [(r, c) for c in range(n) for r in range(n)]
    eqs = derivation_equations(a, Fraction(alpha), Fraction(beta), Fraction(gamma))
    return n * n - substitution_rank(eqs, variables)


def brute_force_center_dim(a: Algebra) -> int:
    """dim Z by substitution on the equations mu(X, e_j) = 0."""
    n = a.dim
    eqs = []
    for j in range(n):
        cols = [product(a, _unit(n, i), _unit(n, j)) for i in range(n)]
        for k in range(n):
            eq = {i: cols[i][k] for i in range(n) if cols[i][k]}
            if eq:
                eqs.append(eq)
    return n - substitution_rank(eqs, list(range(n)))


def random_law(n, rng, values=(-1, 0, 1)) -> Algebra:
    consts = {}
    for i, j in combinations(range(n), 2):
        consts[(i, j)] = [Fraction(rng.choice(values)) for _ in range(n)]
    return Algebra(n, consts)
