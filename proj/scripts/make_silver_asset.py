#!/usr/bin/env python3
"""Generate the bundled silver optical-constants table and fit the runtime model.

The table is crystalline-silver permittivity evaluated on a 400-1100 nm grid
from the Lorentz-Drude parameterization of Rakic et al., Appl. Opt. 37, 5271
(1998). The runtime model used by the toolkit is a Drude + two-Lorentz pole
expansion fitted to that table; the fitted parameters are pinned in
core/src/materials.cpp and in the default config.

Usage:  python3 scripts/make_silver_asset.py
Writes: core/data/silver_optical_constants.csv and prints fitted parameters.
"""

import numpy as np
from scipy.optimize import least_squares

EV_TO_RAD_S = 1.602176634e-19 / 1.054571817e-34  # eV -> rad/s
C0 = 299792458.0

# Rakic et al. (1998) Lorentz-Drude silver: omega_p and poles in eV.
OMEGA_P = 9.01
F = [0.845, 0.065, 0.124, 0.011, 0.840, 5.646]
GAMMA = [0.048, 3.886, 0.452, 0.065, 0.916, 2.419]
OMEGA = [0.000, 0.816, 4.481, 8.185, 9.083, 20.29]


def eps_lorentz_drude(energy_ev):
    e = np.asarray(energy_ev, dtype=complex)
    eps = 1.0 - F[0] * OMEGA_P**2 / (e * (e + 1j * GAMMA[0]))
    for f, g, w in zip(F[1:], GAMMA[1:], OMEGA[1:]):
        eps = eps + f * OMEGA_P**2 / ((w**2 - e**2) - 1j * e * g)
    return eps


def model_eps(params, w):
    """Drude + two Lorentz poles, angular frequency w in rad/s."""
    eps_inf, wp, gd, s1, w1, g1, s2, w2, g2 = params
    eps = eps_inf - wp**2 / (w * (w + 1j * gd))
    eps = eps + s1 * w1**2 / (w1**2 - w**2 - 1j * g1 * w)
    eps = eps + s2 * w2**2 / (w2**2 - w**2 - 1j * g2 * w)
    return eps


def main():
    lam = np.arange(400.0, 1100.0 + 1e-9, 10.0)  # nm
    energy = 1239.841984 / lam                    # eV
    eps = eps_lorentz_drude(energy)
    n = np.sqrt(eps)
    n = np.where(n.imag < 0, -n, n)

    with open("core/data/silver_optical_constants.csv", "w") as fh:
        fh.write("wavelength_nm,n,k\n")
        for L, nv in zip(lam, n):
            fh.write(f"{L:.1f},{nv.real:.6f},{nv.imag:.6f}\n")

    # Same table as a C++ include so the library needs no runtime data path.
    with open("core/src/silver_table.inc", "w") as fh:
        fh.write("// Generated by scripts/make_silver_asset.py. Do not edit.\n")
        fh.write("// Crystalline-silver optical constants, 400-1100 nm.\n")
        fh.write("static constexpr SilverTableRow kSilverTable[] = {\n")
        for L, nv in zip(lam, n):
            fh.write(f"    {{{L:.1f}, {nv.real:.6f}, {nv.imag:.6f}}},\n")
        fh.write("};\n")

    w = 2.0 * np.pi * C0 / (lam * 1e-9)

    def resid(logp):
        m = model_eps(np.exp(logp), w)
        scale = np.abs(eps)
        return np.concatenate([(m.real - eps.real) / scale,
                               (m.imag - eps.imag) / scale])

    x0 = np.log(np.array([4.0, 1.38e16, 3.0e13, 0.6, 6.5e15, 1.0e15,
                          1.0, 1.35e16, 1.5e15]))
    sol = least_squares(resid, x0, max_nfev=20000, xtol=1e-14, ftol=1e-14)
    p = np.exp(sol.x)
    print(f"cost: {sol.cost:.6e}  nfev: {sol.nfev}")

    m = model_eps(p, w)
    rel_re = np.abs(m.real - eps.real) / np.abs(eps)
    rel_im = np.abs(m.imag - eps.imag) / np.abs(eps)
    i680 = np.argmin(np.abs(lam - 680.0))
    print("fit parameters (SI rad/s):")
    names = ["eps_inf", "wp", "gamma_d", "s1", "w1", "g1", "s2", "w2", "g2"]
    for k, v in zip(names, p):
        print(f"  {k} = {v:.6e}")
    print(f"max rel resid vs |eps|: re {rel_re.max():.4f} im {rel_im.max():.4f}")
    print(f"at 680 nm: table eps = {eps[i680]:.4f}  model eps = {m[i680]:.4f}")
    print(f"  rel err re {abs(m[i680].real-eps[i680].real)/abs(eps[i680].real):.4%} "
          f"im {abs(m[i680].imag-eps[i680].imag)/abs(eps[i680].imag):.4%}")


if __name__ == "__main__":
    main()
