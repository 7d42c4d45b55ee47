"""Eigenvalue computation and bookkeeping for the discrete operators.

The robust route never inverts anything: eigenvalues of the banded
integration matrix are reciprocal eigenvalues of the differential operator,
so the large end of the spectrum comes out of small, well-scaled numbers.
The pencil route (A x = lambda B x) reduces B^{-1} A with a solve that
exploits whatever structure B has and is provided for conditioning studies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .orthopoly import Parity, as_gegenbauer, as_parity
from .tau_operator import GeneralizedPencil, build_gi2

__all__ = [
    "Spectrum",
    "EigenPair",
    "dense_eigs",
    "tau_spectrum",
    "pencil_spectrum",
    "exact_spectrum",
    "eigenfunction",
]


def dense_eigs(a: np.ndarray, vectors: bool = False):
    """Eigenvalues (and optionally right eigenvectors) of a dense matrix.

    Wraps the LAPACK general solver; output is sorted by (real, imag) so
    repeated calls are deterministic.  Raises numpy.linalg.LinAlgError if
    the QR iteration fails to converge.
    """
    a = np.asarray(a, dtype=float)
    if vectors:
        w, v = np.linalg.eig(a)
        order = np.lexsort((w.imag, w.real))
        return w[order], v[:, order]
    w = np.linalg.eigvals(a)
    return w[np.lexsort((w.imag, w.real))]


@dataclass
class Spectrum:
    """Eigenvalues of one discretization, ascending in magnitude.

    mu holds the reciprocals (the natural variable of the integration
    route); it is +inf at an exact zero eigenvalue.  Reality and negativity
    flags are derived with the stored relative tolerance.
    """

    eigenvalues: np.ndarray
    mu: np.ndarray
    m: int
    gamma: float
    parity: Parity
    bc: str = "dirichlet"
    source: str = "integration"
    tol_real: float = 1e-9

    @property
    def count(self) -> int:
        return self.eigenvalues.size

    @property
    def is_real(self) -> np.ndarray:
        return np.abs(self.eigenvalues.imag) <= self.tol_real * np.abs(self.eigenvalues)

    @property
    def is_negative(self) -> np.ndarray:
        return self.eigenvalues.real < 0.0

    def max_imag_ratio(self) -> float:
        lam = self.eigenvalues
        mag = np.abs(lam)
        mask = mag > 0
        if not mask.any():
            return 0.0
        return float(np.max(np.abs(lam.imag[mask]) / mag[mask]))

    def min_gap_ratio(self) -> float:
        """Smallest relative spacing between consecutive eigenvalues.

        Eigenvalues are compared in the (real, imag) sort order; the gap is
        measured in the complex plane relative to the larger magnitude.
        """
        lam = self.eigenvalues[np.lexsort((self.eigenvalues.imag, self.eigenvalues.real))]
        if lam.size < 2:
            return math.inf
        gaps = np.abs(np.diff(lam))
        scales = np.maximum(np.abs(lam[:-1]), np.abs(lam[1:]))
        return float(np.min(gaps / np.maximum(scales, 1e-300)))

    def csv(self, exact: np.ndarray | None = None) -> str:
        """CSV with columns k, lambda_re, lambda_im, lambda_exact, rel_err."""
        if exact is None:
            exact = exact_spectrum(self.count, self.parity, self.bc)
        lines = ["k,lambda_re,lambda_im,lambda_exact,rel_err"]
        for k in range(self.count):
            lam = self.eigenvalues[k]
            ex = exact[k]
            denom = abs(ex) if ex != 0 else 1.0
            err = abs(lam - ex) / denom
            lines.append(f"{k},{lam.real:.17g},{lam.imag:.17g},{ex:.17g},{err:.17g}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        exact = exact_spectrum(self.count, self.parity, self.bc)
        err = np.abs(self.eigenvalues - exact) / np.where(exact == 0, 1.0, np.abs(exact))
        return {
            "meta": {
                "m": self.m,
                "gamma": self.gamma,
                "parity": self.parity.value,
                "bc": self.bc,
                "source": self.source,
                "tol_real": self.tol_real,
            },
            "data": {
                "lambda_re": self.eigenvalues.real.tolist(),
                "lambda_im": self.eigenvalues.imag.tolist(),
                "lambda_exact": exact.tolist(),
                "rel_err": err.tolist(),
            },
        }


def _sorted_by_magnitude(lam: np.ndarray, mu: np.ndarray):
    order = np.argsort(np.abs(lam), kind="stable")
    return lam[order], mu[order]


def tau_spectrum(m: int, idx, parity, bc: str = "dirichlet", tol_real: float = 1e-9) -> Spectrum:
    """Spectrum of the m-mode discretization via the integration route.

    Dirichlet eigenvalues are reciprocals of the eigenvalues of the banded
    square matrix.  Neumann reduces by differentiating the eigenfunctions:
    even modes give a zero eigenvalue plus the odd Dirichlet spectrum with
    the family parameter raised by one, odd modes give the even Dirichlet
    spectrum at the raised parameter with no zero mode.
    """
    gdx = as_gegenbauer(idx)
    par = as_parity(parity)
    if bc == "neumann":
        inner = tau_spectrum(m, gdx.shifted(), par.flipped(), "dirichlet", tol_real)
        if par is Parity.EVEN:
            lam = np.concatenate(([0.0 + 0.0j], inner.eigenvalues))
            mu = np.concatenate(([np.inf], inner.mu))
        else:
            lam, mu = inner.eigenvalues, inner.mu
        return Spectrum(lam, mu, m, float(gdx.gamma), par, bc="neumann", source="integration", tol_real=tol_real)
    if bc != "dirichlet":
        raise ValueError(f"unknown boundary condition {bc!r}")
    M = build_gi2(m, gdx, par).square()
    mu = dense_eigs(M)
    lam, mu = _sorted_by_magnitude(1.0 / mu, mu)
    return Spectrum(lam, mu, m, float(gdx.gamma), par, bc="dirichlet", source="integration", tol_real=tol_real)


def _solve_structured(pencil: GeneralizedPencil) -> np.ndarray:
    """B^{-1} A using the recorded structure of B."""
    A, B = pencil.A, pencil.B
    if pencil.b_structure == "diagonal":
        d = np.diag(B).copy()
        if np.min(np.abs(d)) == 0.0:
            raise np.linalg.LinAlgError(f"variant {pencil.variant}: diagonal B is singular")
        return A / d[:, None]
    if pencil.b_structure == "tridiagonal":
        m = B.shape[0]
        ab = np.zeros((3, m))
        ab[0, 1:] = np.diag(B, 1)
        ab[1, :] = np.diag(B)
        ab[2, :-1] = np.diag(B, -1)
        return scipy.linalg.solve_banded((1, 1), ab, A)
    if pencil.b_structure == "first-row-subdiagonal":
        # rows 1..m-1 determine x_0..x_{m-2} directly; row 0 closes x_{m-1}
        m = B.shape[0]
        sub = B[np.arange(1, m), np.arange(0, m - 1)]
        X = np.zeros_like(A)
        X[: m - 1, :] = A[1:, :] / sub[:, None]
        X[m - 1, :] = (A[0, :] - B[0, : m - 1] @ X[: m - 1, :]) / B[0, m - 1]
        return X
    return np.linalg.solve(B, A)


def pencil_spectrum(pencil: GeneralizedPencil, tol_real: float = 1e-9) -> Spectrum:
    """Spectrum of a generalized pencil A x = lambda B x.

    The integration pencil (A = identity) is special-cased to take
    eigenvalues of B directly and invert them afterwards; forming B^{-1}
    there would trade the excellent conditioning away.
    """
    if pencil.a_structure == "identity":
        mu = dense_eigs(pencil.B)
        lam, mu = _sorted_by_magnitude(1.0 / mu, mu)
    else:
        lam = dense_eigs(_solve_structured(pencil))
        with np.errstate(divide="ignore", invalid="ignore"):
            mu = np.where(lam != 0, 1.0 / lam, np.inf)
        lam, mu = _sorted_by_magnitude(lam, mu)
    return Spectrum(
        lam,
        mu,
        pencil.m,
        pencil.gamma,
        pencil.parity,
        bc="dirichlet",
        source=pencil.variant,
        tol_real=tol_real,
    )


def exact_spectrum(count: int, parity, bc: str = "dirichlet") -> np.ndarray:
    """First `count` eigenvalues of u'' = lambda u on [-1, 1], ascending |.|.

    Dirichlet even modes are -(2k-1)^2 pi^2 / 4, odd modes -k^2 pi^2.
    Neumann even modes are 0, -pi^2, -4 pi^2, ...; Neumann odd modes match
    the Dirichlet even sequence.
    """
    par = as_parity(parity)
    k = np.arange(1, count + 1, dtype=float)
    pi2 = math.pi * math.pi
    if bc == "dirichlet":
        if par is Parity.EVEN:
            return -((2.0 * k - 1.0) ** 2) * pi2 / 4.0
        return -(k * k) * pi2
    if bc == "neumann":
        if par is Parity.EVEN:
            return np.concatenate(([0.0], -(k[: count - 1] ** 2) * pi2))
        return -((2.0 * k - 1.0) ** 2) * pi2 / 4.0
    raise ValueError(f"unknown boundary condition {bc!r}")


@dataclass
class EigenPair:
    """One eigenvalue with the coefficients of u and of u''.

    u_coeffs has one more entry than d2u_coeffs (double integration raises
    the degree); both are scaled so the largest-magnitude entry of u_coeffs
    is exactly 1.
    """

    eigenvalue: complex
    u_coeffs: np.ndarray
    d2u_coeffs: np.ndarray
    m: int
    gamma: float
    parity: Parity

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """Evaluate u at the given points from its coefficients."""
        from .orthopoly import gegenbauer_eval

        x = np.asarray(x, dtype=float)
        acc = np.zeros(x.shape, dtype=complex)
        for k, c in enumerate(self.u_coeffs):
            if c != 0:
                acc = acc + c * gegenbauer_eval(self.parity.degree(k), self.gamma, x)
        return acc


def eigenfunction(j: int, m: int, idx, parity) -> EigenPair:
    """The j-th (ascending magnitude) Dirichlet eigenpair of the m-mode
    discretization, reconstructed through the double integration so the
    boundary conditions hold by construction."""
    gdx = as_gegenbauer(idx)
    par = as_parity(parity)
    if not 0 <= j < m:
        raise ValueError(f"eigenvalue index {j} out of range for m = {m}")
    tau = build_gi2(m, gdx, par)
    w, V = dense_eigs(tau.square(), vectors=True)
    lam = 1.0 / w
    order = np.argsort(np.abs(lam), kind="stable")
    pick = order[j]
    c = V[:, pick]
    if np.max(np.abs(c.imag)) <= 1e-12 * np.max(np.abs(c)):
        c = c.real.copy()
    u = tau.apply(c.real) if np.isrealobj(c) else tau.apply(c.real) + 1j * tau.apply(c.imag)
    scale = u[np.argmax(np.abs(u))]
    return EigenPair(
        eigenvalue=complex(lam[pick]),
        u_coeffs=u / scale,
        d2u_coeffs=np.asarray(c) / scale,
        m=m,
        gamma=float(gdx.gamma),
        parity=par,
    )
