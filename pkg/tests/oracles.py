"""Independent reference computations used to freeze expected values.

None of these go through the eigen-decomposition path of the package.
"""

import math

import numpy as np
from scipy import linalg


def two_mode_closed_form(omega, k, sign=1):
    """Open two-site chain with equal trapping frequencies, ground state.

    Normal modes (1, +-1)/sqrt(2) have w^2 = Omega^2 +- sign*k. Returns the
    frequencies and the dimensionless moments with w_ref = 1.
    """
    w_plus = math.sqrt(omega**2 + sign * k)   # symmetric mode
    w_minus = math.sqrt(omega**2 - sign * k)  # antisymmetric mode
    x_diag = 0.5 * (1 / w_plus + 1 / w_minus)
    x_off = 0.5 * (1 / w_plus - 1 / w_minus)
    p_diag = 0.5 * (w_plus + w_minus)
    p_off = 0.5 * (w_plus - w_minus)
    # (x1 + x2) lives in the symmetric mode only, (p1 - p2) in the antisymmetric one
    s1 = (1 / w_plus) * w_minus - 1
    s2 = (1 / w_minus) * w_plus - 1
    return dict(
        w_plus=w_plus, w_minus=w_minus, x_diag=x_diag, x_off=x_off,
        p_diag=p_diag, p_off=p_off, s1=s1, s2=s2,
        energy_phz=0.5 * (w_plus + w_minus - 2 * omega),
    )


def fock_two_mode(omega1, omega2, coupling, nmax=30):
    """Truncated Fock-space ground state of two coupled oscillators (hbar = m = 1).

    H = sum_j (p_j^2 + Omega_j^2 x_j^2)/2 + coupling * x_1 x_2.
    Returns S1, S2 in the hbar^-2 product form, the reduced-state entropy of
    mode 1 from its density-matrix spectrum, and the energy shift.
    """
    a = np.diag(np.sqrt(np.arange(1, nmax)), 1)
    eye = np.eye(nmax)
    x = [(a + a.T) / math.sqrt(2 * w) for w in (omega1, omega2)]
    p = [1j * math.sqrt(w / 2) * (a.T - a) for w in (omega1, omega2)]
    num = np.diag(np.arange(nmax) + 0.5)
    h = omega1 * np.kron(num, eye) + omega2 * np.kron(eye, num)
    h = h + coupling * np.kron(x[0], x[1])
    evals, evecs = np.linalg.eigh(h)
    psi = evecs[:, 0]

    def ev(op):
        return float(np.real(psi.conj() @ op @ psi))

    x1, x2 = np.kron(x[0], eye), np.kron(eye, x[1])
    p1, p2 = np.kron(p[0], eye), np.kron(eye, p[1])
    s1 = ev((x1 + x2) @ (x1 + x2)) * ev((p1 - p2) @ (p1 - p2)) - 1
    s2 = ev((x1 - x2) @ (x1 - x2)) * ev((p1 + p2) @ (p1 + p2)) - 1
    c = psi.reshape(nmax, nmax)
    rho = c @ c.conj().T
    lam = np.linalg.eigvalsh(rho)
    lam = lam[lam > 1e-300]
    entropy = float(-np.sum(lam * np.log(lam)))
    return dict(s1=s1, s2=s2, entropy=entropy, shift=evals[0] - 0.5 * (omega1 + omega2))


def coth_matrix_moments(v, T_ratio_fn=None):
    """Moments X = V^-1/2 coth(A), P = V^1/2 coth(A) by matrix functions (w_ref = 1).

    ``T_ratio_fn`` maps sqrt(V) to A = hbar sqrt(V) / (2 k_B T); None means T = 0.
    """
    root = linalg.sqrtm(v).real
    if T_ratio_fn is None:
        occ = np.eye(v.shape[0])
    else:
        e2 = linalg.expm(2 * T_ratio_fn(root))
        occ = (e2 + np.eye(len(v))) @ np.linalg.inv(e2 - np.eye(len(v)))
    return np.linalg.inv(root) @ occ, root @ occ


def symmetric_eigenvalues_bruteforce(v):
    """Roots of the characteristic polynomial, independent of the LAPACK symmetric path."""
    return np.sort(np.real(np.linalg.eigvals(v)))
