#!/usr/bin/env python3
"""Independent reference computations for regression constants used in the
C++ test suites.

Everything here is evaluated from first principles (published formulas,
brute-force scans, quadrature) without touching the C++ implementation.
Run it to regenerate the constants pinned in tests/.

KTP Sellmeier and thermo-optic data: T. Y. Fan, C. E. Huang, B. Q. Hu,
R. C. Eckardt, Y. X. Fan, R. L. Byer, R. S. Feigelson,
Appl. Opt. 26, 2390 (1987).
"""

import math

C_M_PER_S = 299_792_458.0

# Fan 1987 fits, n^2 = A + B / (1 - C/lam^2) - D*lam^2, lam in um.
FAN87 = {
    "x": (2.16747, 0.83733, 0.04611, 0.01713, 1.1e-5),
    "y": (2.19229, 0.83547, 0.04970, 0.01621, 1.3e-5),
    "z": (2.25411, 1.06543, 0.05486, 0.02140, 1.6e-5),
}
T_REF_C = 25.0


def n_ktp(axis, lam_um, temp_c):
    a, b, c, d, dndt = FAN87[axis]
    n25 = math.sqrt(a + b / (1.0 - c / lam_um**2) - d * lam_um**2)
    return n25 + (temp_c - T_REF_C) * dndt


def wavenumber(axis, lam_um, temp_c):
    return 2.0 * math.pi * n_ktp(axis, lam_um, temp_c) / lam_um


def conjugate_nm(pump_nm, fixed_nm):
    return 1.0 / (1.0 / pump_nm - 1.0 / fixed_nm)


def bulk_mismatch(lp_um, li_um, temp_c):
    ls_um = 1.0 / (1.0 / lp_um - 1.0 / li_um)
    return (wavenumber("z", lp_um, temp_c)
            - wavenumber("z", ls_um, temp_c)
            - wavenumber("z", li_um, temp_c))


def sinc2(x):
    if abs(x) < 1e-12:
        return 1.0
    s = math.sin(x) / x
    return s * s


def half_max_arg():
    """Root of sinc^2(x) = 1/2 by bisection."""
    lo, hi = 1.0, 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if sinc2(mid) > 0.5:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def jsi_intensity(nu_i_ghz, lp_um, poling_um, length_mm, temp_c):
    """sinc^2(dk*L/2) at the given idler optical frequency."""
    li_um = C_M_PER_S / (nu_i_ghz * 1e9) * 1e6
    ls_um = 1.0 / (1.0 / lp_um - 1.0 / li_um)
    dk = (wavenumber("z", lp_um, temp_c)
          - wavenumber("z", ls_um, temp_c)
          - wavenumber("z", li_um, temp_c)
          - 2.0 * math.pi / poling_um)
    return sinc2(dk * length_mm * 1e3 / 2.0)


def bandwidth_scan_ghz(lp_um, li_um, length_mm, temp_c, points=2_000_001,
                       span_ghz=4000.0):
    """FWHM of the idler spectrum by brute-force dense scan."""
    poling = 2.0 * math.pi / bulk_mismatch(lp_um, li_um, temp_c)
    nu0 = C_M_PER_S / (li_um * 1e-6) / 1e9
    lo = None
    hi = None
    prev_nu, prev_i = None, None
    for k in range(points):
        nu = nu0 - span_ghz / 2 + span_ghz * k / (points - 1)
        inten = jsi_intensity(nu, lp_um, poling, length_mm, temp_c)
        if prev_nu is not None:
            if prev_i < 0.5 <= inten and lo is None:
                lo = prev_nu + (0.5 - prev_i) / (inten - prev_i) * (nu - prev_nu)
            if prev_i >= 0.5 > inten and lo is not None and hi is None:
                hi = prev_nu + (0.5 - prev_i) / (inten - prev_i) * (nu - prev_nu)
        prev_nu, prev_i = nu, inten
    return hi - lo, poling


def gauss_convolved_fwhm(spdc_fwhm_ghz, filter_fwhm_ghz):
    """sinc^2 line of given FWHM convolved with a Gaussian filter; FWHM of
    the scan by dense sampling + interpolation."""
    xh = half_max_arg()
    alpha = 2.0 * xh / spdc_fwhm_ghz          # sinc^2(alpha*(nu-nu0)) has the target FWHM
    sigma = filter_fwhm_ghz / (2.0 * math.sqrt(2.0 * math.log(2.0)))
    span = 12.0 * spdc_fwhm_ghz
    n = 48001
    step = span / (n - 1)
    grid = [-span / 2 + step * i for i in range(n)]
    line = [sinc2(alpha * g) for g in grid]

    def scan(c):
        tot = 0.0
        for g, v in zip(grid, line):
            tot += v * math.exp(-((g - c) ** 2) / (2 * sigma * sigma))
        return tot

    centers = [-span / 4 + (span / 2) * i / 4000 for i in range(4001)]
    vals = [scan(c) for c in centers]
    peak = max(vals)
    half = peak / 2
    lo = hi = None
    for i in range(1, len(vals)):
        if vals[i - 1] < half <= vals[i] and lo is None:
            lo = centers[i - 1] + (half - vals[i - 1]) / (vals[i] - vals[i - 1]) * (centers[i] - centers[i - 1])
        if vals[i - 1] >= half > vals[i] and hi is None and lo is not None:
            hi = centers[i - 1] + (half - vals[i - 1]) / (vals[i] - vals[i - 1]) * (centers[i] - centers[i - 1])
    return hi - lo


def main():
    print("== dispersion ==")
    print(f"n_z(1.064 um, 25 C)            = {n_ktp('z', 1.064, 25.0):.15f}")
    print(f"n_z(0.473 um, 40 C)            = {n_ktp('z', 0.473, 40.0):.15f}")
    print(f"n_z(1.550 um, 40 C)            = {n_ktp('z', 1.550, 40.0):.15f}")
    print(f"n_z(0.680 um, 40 C)            = {n_ktp('z', 0.680, 40.0):.15f}")
    print(f"k_z(0.680 um, 40 C) rad/um     = {wavenumber('z', 0.680, 40.0):.15f}")

    print("== energy conservation ==")
    print(f"conjugate(473, 1550) nm        = {conjugate_nm(473.0, 1550.0):.9f}")
    print(f"conjugate(460, 1550) nm        = {conjugate_nm(460.0, 1550.0):.9f}")

    print("== quasi-phase-matching ==")
    ls = conjugate_nm(473.0, 1550.0) / 1000.0
    dkb = bulk_mismatch(0.473, 1.550, 40.0)
    print(f"bulk mismatch (473/1550, 40 C) = {dkb:.12f} rad/um")
    print(f"poling period  (473/1550, 40 C)= {2*math.pi/dkb:.9f} um")
    print(f"half-max arg of sinc^2         = {half_max_arg():.12f}")

    print("== bandwidth (dense scan) ==")
    bw10, pol10 = bandwidth_scan_ghz(0.473, 1.550, 10.0, 40.0)
    bw20, _ = bandwidth_scan_ghz(0.473, 1.550, 20.0, 40.0)
    print(f"FWHM 10 mm, pump 473, idler 1550, 40 C = {bw10:.4f} GHz")
    print(f"FWHM 20 mm (ratio to 10 mm)            = {bw20:.4f} GHz  ratio={bw20/bw10:.6f}")
    bw450, _ = bandwidth_scan_ghz(0.450, 1.550, 10.0, 40.0)
    bw500, _ = bandwidth_scan_ghz(0.500, 1.550, 10.0, 40.0)
    print(f"FWHM pump 450 nm = {bw450:.3f} GHz ; pump 500 nm = {bw500:.3f} GHz")

    print("== detection arithmetic ==")
    print(f"erf(sqrt(ln 2))                = {math.erf(math.sqrt(math.log(2.0))):.12f}")
    print(f"1/(1+1e6*25e-9)                = {1.0/(1.0+1e6*25e-9):.12f}")

    print("== filter scan closure ==")
    meas = gauss_convolved_fwhm(300.0, 125.0)
    print(f"scan FWHM of 300 GHz line + 125 GHz filter = {meas:.4f} GHz")
    print(f"deconvolved back                           = {math.sqrt(meas**2 - 125.0**2):.4f} GHz")
    print(f"deconvolve(326, 125)                       = {math.sqrt(326.0**2 - 125.0**2):.6f} GHz")

    print("== focusing ==")
    w = math.sqrt(0.473e-3 * 10.0 / (2 * math.pi * 0.02)) * 1e3  # um via mm
    # lam 473 nm = 0.473e-3 mm, L = 10 mm: w in mm -> um
    print(f"waist(xi=0.02, 473 nm, 10 mm) um = {w:.6f}")

    print("== visibility uncertainty (delta method) ==")
    caa, cab, cba, cbb = 4850.0, 75.0, 60.0, 4700.0
    p, m = caa + cbb, cab + cba
    s = p + m
    print(f"V = {(p-m)/s:.9f}   SE = {2*math.sqrt(p*m/s**3):.9e}")


if __name__ == "__main__":
    main()
