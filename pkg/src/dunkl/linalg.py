"""Gauss-Jordan elimination over an exact field (Scalar or Fraction entries)."""
from .scalar import ONE, ZERO, Scalar


class SingularMatrix(ValueError):
    def __init__(self, column):
        super().__init__(f"matrix is singular (no pivot in column {column})")
        self.column = column


def _weight(x):
    if isinstance(x, Scalar):
        return len(x.num.terms) + 4 * (len(x.den.terms) - 1)
    return 0


def rref(rows, ncols=None):
    """Reduced row echelon form.  Returns (rows, pivot_columns); input untouched."""
    a = [list(r) for r in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for col in range(ncols):
        if r >= len(a):
            break
        cands = [i for i in range(r, len(a)) if a[i][col]]
        if not cands:
            continue
        piv = min(cands, key=lambda i: _weight(a[i][col]))
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][col]
        if pv != 1:
            inv = ONE / pv if isinstance(pv, Scalar) else 1 / pv
            a[r] = [x * inv if x else x for x in a[r]]
        prow = a[r]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                row = a[i]
                a[i] = [x - f * y if y else x for x, y in zip(row, prow)]
        pivots.append(col)
        r += 1
    return a, pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, ncols, zero=ZERO, one=ONE):
    """Basis of {v : rows v = 0}; one vector per free column."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, pc in enumerate(pivots):
            x = red[i][f]
            if x:
                v[pc] = -x
        basis.append(v)
    return basis


def solve(a, b):
    """Solve a x = b for a square non-singular a."""
    n = len(a)
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug, n)
    if len(pivots) < n:
        missing = next(c for c in range(n) if c not in pivots)
        raise SingularMatrix(missing)
    return [red[i][n] for i in range(n)]


def inverse(a, zero=ZERO, one=ONE):
    n = len(a)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug, n)
    if len(pivots) < n:
        missing = next(c for c in range(n) if c not in pivots)
        raise SingularMatrix(missing)
    return [row[n:] for row in red]


def matmul(a, b, zero=ZERO):
    cols = list(zip(*b)) if b else []
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        r = []
        for col in cols:
            s = zero
            for k, x in nz:
                y = col[k]
                if y:
                    s = s + x * y
            r.append(s)
        out.append(r)
    return out


def matvec(a, v, zero=ZERO):
    out = []
    for row in a:
        s = zero
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out
