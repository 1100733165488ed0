"""Regenerates the JSON fixtures used by the unit tests.

Strip fixtures are manufactured solutions of mu*phi_xx + phi_zz = div^mu g + f with
phi = h on z = 0 and phi_z = 0 on z = -1. Source fixtures sample the remainder source
f = -div^mu(P grad^mu psi) of the explicit potential psi, built symbolically from the
matrix P = Id + Q of the flattening sigma = eps*zeta*(z+1).

Usage: python3 generate.py  (writes next to this file)
"""

import json
import math
import pathlib

import numpy as np
import sympy as sp

HERE = pathlib.Path(__file__).resolve().parent
x, z = sp.symbols("x z", real=True)


def modes_of(expr, n_modes):
    """Fourier coefficients (1/2pi) int e^{-inx} expr dx, as sympy expressions in z."""
    out = {}
    for n in range(-n_modes, n_modes + 1):
        c = sp.integrate(expr * sp.exp(-sp.I * n * x), (x, 0, 2 * sp.pi)) / (2 * sp.pi)
        out[n] = sp.simplify(c)
    return out


def strip_json(expr, n_modes, n_phys, n_z):
    coeffs = modes_of(expr, n_modes)
    zs = [-1 + j / (n_z - 1) for j in range(n_z)]
    rows = []
    for n in range(-n_modes, n_modes + 1):
        for k, zk in enumerate(zs):
            v = complex(sp.N(coeffs[n].subs(z, sp.Rational(k, n_z - 1) - 1), 30))
            rows.append([n, k, v.real, v.imag])
    return {"n_modes": n_modes, "n_phys": n_phys, "n_z": n_z, "coeffs": rows}


def spectral_json(expr, n_modes, n_phys):
    coeffs = modes_of(expr, n_modes)
    rows = []
    for n in range(-n_modes, n_modes + 1):
        v = complex(coeffs[n])
        rows.append([n, v.real, v.imag])
    return {"n_modes": n_modes, "n_phys": n_phys, "coeffs": rows}


def manufactured(name, mu, phi, g1, g2, n_modes=8, n_phys=25, n_z=17):
    sq = sp.sqrt(mu)
    lap = mu * sp.diff(phi, x, 2) + sp.diff(phi, z, 2)
    div = sq * sp.diff(g1, x) + sp.diff(g2, z)
    f = sp.expand(lap - div)
    h = phi.subs(z, 0)
    assert sp.simplify(sp.diff(phi, z).subs(z, -1)) == 0
    doc = {
        "mu": float(mu),
        "g1": strip_json(g1, n_modes, n_phys, n_z),
        "g2": strip_json(g2, n_modes, n_phys, n_z),
        "f": strip_json(f, n_modes, n_phys, n_z),
        "h": spectral_json(h, n_modes, n_phys),
        "phi": strip_json(phi, n_modes, n_phys, n_z),
    }
    (HERE / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")


def source_fixture(name, variant, eps, mu, bond, a, rescaled, gs, n_modes=16, n_phys=50, n_z=9):
    zeta = a * sp.cos(x) + a / 3 * sp.sin(2 * x)
    cap = sp.sqrt(mu) / bond if rescaled else 1 / sp.Float(bond)
    J = 1 + eps * zeta
    sx = sp.diff(eps * zeta * (z + 1), x)
    Q = sp.Matrix([[eps * zeta, -sp.sqrt(mu) * sx], [-sp.sqrt(mu) * sx, (-eps * zeta + mu * sx**2) / J]])
    P = sp.eye(2) + Q

    def div_p(phi):
        g = P * sp.Matrix([sp.sqrt(mu) * sp.diff(phi, x), sp.diff(phi, z)])
        return sp.sqrt(mu) * sp.diff(g[0], x) + sp.diff(g[1], z)

    psi = eps * (gs * zeta + cap * sp.diff(zeta, x, 2))
    if variant != "first_order":
        W = J**2 * sp.diff(zeta, x, 2)
        psi = psi - mu * gs * eps * (z**2 / 2 + z) * W
    f = -div_p(psi)
    zx = sp.diff(zeta, x)
    kappa = sp.diff(zeta, x, 2) / (1 + eps**2 * mu * zx**2) ** sp.Rational(3, 2)
    h = eps * cap * (kappa - sp.diff(zeta, x, 2))

    fx = sp.lambdify((x, z), f, "numpy")
    hx = sp.lambdify(x, h, "numpy")
    xs = np.array([2 * math.pi * j / n_phys for j in range(n_phys)])
    zs = [-1 + k / (n_z - 1) for k in range(n_z)]
    doc = {
        "variant": variant,
        "eps": eps,
        "mu": mu,
        "bond": bond,
        "rescaled": rescaled,
        "stable": gs < 0,
        "amplitude": a,
        "n_modes": n_modes,
        "n_phys": n_phys,
        "n_z": n_z,
        "f": [[float(v) for v in np.broadcast_to(fx(xs, zk), xs.shape)] for zk in zs],
        "h": [float(v) for v in hx(xs)],
    }
    (HERE / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")


if __name__ == "__main__":
    manufactured("strip_cosh_boundary", sp.Integer(1),
                 sp.cos(x) * sp.cosh(1 + z) / sp.cosh(1), sp.Integer(0), sp.Integer(0))
    manufactured("strip_mean_quadratic", sp.Rational(3, 10), z**2 / 2 + z, sp.Integer(0), sp.Integer(0))
    manufactured("strip_polynomial_sources", sp.Rational(1, 4),
                 sp.cos(2 * x) * (z + 1) ** 2 + sp.sin(x) * (z + 1) ** 3 + (z + 1) ** 2,
                 sp.sin(x) * z, sp.cos(x) * (z + 1) * z)
    source_fixture("sources_first_order", "first_order", 0.8, 0.05, 0.5, 0.05, False, 1)
    source_fixture("sources_refined", "refined", 0.7, 0.09, 0.2, 0.05, True, 1)
    source_fixture("sources_refined_stable", "refined_stable", 0.6, 0.04, 0.5, 0.05, True, -1)
