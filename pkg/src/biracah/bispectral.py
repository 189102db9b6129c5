"""Exact bispectrality checks for the two standard realizations.

At rational parameter values the difference (resp. Dunkl shift) operator is
upper triangular on the polynomial basis; its exact eigenvectors are the
orthogonal polynomials of the family, and multiplication by the recurrence
variable must be tridiagonal on them.  Zero entries are exact zeros.
"""

from __future__ import annotations

from .errors import DegenerateSpectrum, NotTriangular
from .matrices import ExactMatrix, back_substitute_unit_upper, mat_eig_triangular
from .polynomials import ParamPoly
from .scalars import Scalar
from .shiftops import (
    apply_to_polynomial,
    build_standard_bi,
    build_standard_racah,
    to_lambda_basis,
)


def _scalar_coeffs(p: ParamPoly, var: str, size: int):
    out = [Scalar(0)] * size
    for k, c in p.as_univariate(var).items():
        out[k] = c.const_value()
    return out


def bispectral_matrices(realization: str, basis_size: int, params: dict):
    """Exact diagonal/tridiagonal matrix pair for one realization.

    Builds the (M+2)x(M+2) triangular matrix of the difference operator on
    the degree basis, eigendecomposes it exactly, and expresses the
    multiplication operator on the eigenvectors p_0..p_M.  Returns a dict
    with the triangular matrix, its spectrum, the eigenvector matrix and the
    multiplication matrix (rows 0..M+1, columns 0..M).
    """
    m = basis_size
    n = m + 2
    params = {k: ParamPoly.coerce(v) for k, v in params.items()}
    if realization == "racah":
        ops = build_standard_racah(params)
        diag_op = ops["kappa1"]
        lam = ops["lambda"]
        basis = [lam ** k for k in range(n)]

        def coords(p):
            coeffs = to_lambda_basis(p, params)
            coeffs = coeffs + [ParamPoly.const(0)] * (n - len(coeffs))
            return [c.const_value() for c in coeffs[:n]]

        def mult_coords(col):
            # multiplication by lambda shifts the lambda-power coordinates
            return [Scalar(0)] + col[: n - 1]

    elif realization == "bi":
        ops = build_standard_bi(params)
        diag_op = ops["X"]
        zv = ParamPoly.var("z")
        basis = [zv ** k for k in range(n)]

        def coords(p):
            return _scalar_coeffs(p, "z", n)

        def mult_coords(col):
            # multiplication by Y(z) = 2z + 1/2
            half = Scalar("1/2")
            shifted = [Scalar(0)] + [c * 2 for c in col[: n - 1]]
            return [s + half * c for s, c in zip(shifted, col)]

    else:
        raise ValueError(f"unknown realization {realization!r}")

    cols = [coords(apply_to_polynomial(diag_op, basis[k])) for k in range(n)]
    tri = ExactMatrix([[cols[j][i] for j in range(n)] for i in range(n)])
    if not tri.is_upper_triangular():
        raise NotTriangular("difference operator is not triangular on the basis")
    diag, p = mat_eig_triangular(tri)
    mult_cols = []
    for j in range(m + 1):
        v = mult_coords(p.column(j))
        mult_cols.append(back_substitute_unit_upper(p, v))
    mult = ExactMatrix([[mult_cols[j][i] for j in range(m + 1)] for i in range(n)])
    for j in range(m + 1):
        for i in range(n):
            if abs(i - j) > 1 and not mult[i, j].is_zero:
                raise AssertionError(
                    f"entry ({i},{j}) = {mult[i, j]} outside the tridiagonal band"
                )
    return {
        "triangular": tri,
        "spectrum": diag,
        "eigenvectors": p,
        "mult": mult,
    }


def random_rational_params(realization: str, rng, max_den: int = 12):
    """Small random rational parameter set with a non-degenerate spectrum."""
    names = (
        ("alpha", "beta", "gamma", "delta")
        if realization == "racah"
        else ("rho1", "rho2", "r1", "r2")
    )
    out = {}
    for name in names:
        num = rng.randint(1, max_den)
        den = rng.choice([3, 5, 7, 11, 13])
        out[name] = ParamPoly.const(Scalar(f"{num}/{den}"))
    return out


def bispectral_suite(realization: str, basis_size: int, rng, trials: int = 5):
    """Run the tridiagonal-support check at `trials` random parameter sets.

    Degenerate spectra are resampled; returns the list of parameter sets
    that were certified.
    """
    done = []
    attempts = 0
    while len(done) < trials:
        attempts += 1
        if attempts > 20 * trials:
            raise DegenerateSpectrum("could not sample a non-degenerate spectrum")
        params = random_rational_params(realization, rng)
        try:
            bispectral_matrices(realization, basis_size, params)
        except DegenerateSpectrum:
            continue
        done.append({k: v.const_value() for k, v in params.items()})
    return done


def dump_matrix_csv(matrix: ExactMatrix, path, basis: str):
    """Write the exact-rational CSV dump format.

    One-line header `# rows=<r> cols=<c> basis=<name>`, then row-major
    entries as `p/q` strings.
    """
    lines = [f"# rows={matrix.rows} cols={matrix.cols} basis={basis}"]
    for row in matrix.entries:
        cells = []
        for entry in row:
            if not entry.is_rational:
                raise ValueError(f"matrix entry {entry} is not a real rational")
            cells.append(str(entry.re))
        lines.append(",".join(cells))
    text = "\n".join(lines) + "\n"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text
