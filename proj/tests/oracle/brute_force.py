#!/usr/bin/env python3
"""Independent brute-force evaluation of the analytical models.

Written before the C++ implementation; its outputs are frozen into the
test sources as expected values. Uses 50-digit arithmetic so the frozen
values are exact to double precision. Run from anywhere:

    python3 tests/oracle/brute_force.py
"""

from mpmath import mp, mpf, exp, ln, sqrt, cbrt, pi

mp.dps = 50

# Plexiglas 8N property record (bundled material file values)
B1 = mpf("0.869e-3")
B2 = mpf("5.679e-7")
B3 = mpf("1.9492e8")
B4 = mpf("0.004633")
B5 = mpf("394.69")
ALPHA_P = mpf("8.913e-8")
T_MELT_C = mpf("235.0")
T_MOLD_C = mpf("80.0")
T_EJECT_C = mpf("94.0")
TAIT_C = mpf("0.0894")


def v_o(t_k):
    return B1 + B2 * (t_k - B5)


def beta(t_k):
    return B3 * exp(-B4 * (t_k - B5))


def specific_volume(t_k, p_pa):
    return v_o(t_k) * (1 - TAIT_C * ln(1 + p_pa / beta(t_k)))


def shrinkage(t_k, p_pa):
    v_ref = specific_volume(mpf("293.15"), mpf(0))
    v_state = specific_volume(t_k, p_pa)
    r_v = v_ref / v_state
    return r_v, 1 - cbrt(r_v)


def cooling_time(thickness_m, t_melt, t_wall, t_eject, alpha):
    arg = (4 / pi) * (t_melt - t_wall) / (t_eject - t_wall)
    return thickness_m ** 2 / (pi ** 2 * alpha) * ln(arg)


def midplane_theta(fo, terms=4000):
    """Dimensionless midplane temperature (T - Tw)/(Tm - Tw) at Fourier number fo."""
    s = mpf(0)
    for m in range(terms):
        k = 2 * m + 1
        s += (-1) ** m / mpf(k) * exp(-k * k * pi ** 2 * fo)
    return (4 / pi) * s


def deflection(half_span, ds):
    return sqrt(half_span ** 2 - (half_span * (1 - ds)) ** 2)


def reynolds(q_m3s, d_m, nu):
    return 4 * q_m3s / (pi * d_m * nu)


def show(label, value, digits=17):
    print(f"{label:55s} {mp.nstr(value, digits)}")


print("== pvt ==")
show("v_o(293.15 K)", v_o(mpf("293.15")))
show("v_o(405.15 K)", v_o(mpf("405.15")))
show("beta(293.15 K)", beta(mpf("293.15")))
show("beta(394.69 K) == b3", beta(B5))
show("beta(405.15 K)", beta(mpf("405.15")))
show("v(293.15 K, 0 Pa)", specific_volume(mpf("293.15"), mpf(0)))
show("v(405.15 K, 112 MPa)", specific_volume(mpf("405.15"), mpf("112e6")))
r_v, s_lin = shrinkage(mpf("405.15"), mpf("112e6"))
show("r_v(405.15 K, 112 MPa)", r_v)
show("s_linear(405.15 K, 112 MPa)", s_lin)
r_v0, s_lin0 = shrinkage(mpf("405.15"), mpf(0))
show("r_v(405.15 K, 0 Pa)", r_v0)
show("s_linear(405.15 K, 0 Pa)", s_lin0)

print("\n== thermal ==")
t95 = cooling_time(mpf("0.0095"), T_MELT_C, T_MOLD_C, T_EJECT_C, ALPHA_P)
t96 = cooling_time(mpf("0.0096"), T_MELT_C, T_MOLD_C, T_EJECT_C, ALPHA_P)
show("cooling_time(9.5 mm)", t95)
show("cooling_time(9.6 mm)", t96)
fo_96 = ALPHA_P * t96 / mpf("0.0096") ** 2
show("Fo at ejection (9.6 mm)", fo_96)
theta = midplane_theta(fo_96)
show("midplane T at cooling_time (9.6 mm)", T_MOLD_C + (T_MELT_C - T_MOLD_C) * theta)
fo_2772 = ALPHA_P * mpf("277.2") / mpf("0.0096") ** 2
show("midplane T at t=277.2 s (9.6 mm)",
     T_MOLD_C + (T_MELT_C - T_MOLD_C) * midplane_theta(fo_2772))
fo_60 = ALPHA_P * mpf("60") / mpf("0.0096") ** 2
show("midplane T at t=60 s (9.6 mm)",
     T_MOLD_C + (T_MELT_C - T_MOLD_C) * midplane_theta(fo_60))
fo_10 = ALPHA_P * mpf("10") / mpf("0.0096") ** 2
show("midplane T at t=10 s (9.6 mm)",
     T_MOLD_C + (T_MELT_C - T_MOLD_C) * midplane_theta(fo_10))

print("\n== warpage ==")
show("deflection(0.100 m, 0.01)", deflection(mpf("0.100"), mpf("0.01")))
show("deflection(0.315 m, 2.7267e-4)", deflection(mpf("0.315"), mpf("2.7267e-4")))
ds_mixed = abs(s_lin - s_lin0)
show("|dS| edge(112 MPa) vs center(0 Pa) at 405.15 K", ds_mixed)
show("deflection(0.315 m, that dS)", deflection(mpf("0.315"), ds_mixed))

print("\n== hydraulics (nu = 4.527e-7 m^2/s) ==")
NU = mpf("4.527e-7")
for q_cm3s, d_mm in ((mpf("128.0"), 9), (mpf("113.8"), 8), (mpf("85.3"), 6)):
    re = reynolds(q_cm3s * mpf("1e-6"), mpf(d_mm) * mpf("1e-3"), NU)
    show(f"Re(Q={q_cm3s} cm3/s, D={d_mm} mm)", re)
show("Q for Re=4.0e4, D=6 mm [cm3/s]",
     mpf("4.0e4") * pi * mpf("0.006") * NU / 4 * mpf("1e6"))
show("Q for Re=1.5e4, D=6 mm [cm3/s]",
     mpf("1.5e4") * pi * mpf("0.006") * NU / 4 * mpf("1e6"))

print("\n== comparison tables: recomputed reduction / improvement ==")
tables = {
    "max_cooling_time_s": (mpf("262.550"), [mpf("95.391"), mpf("90.578"), mpf("87.427")]),
    "mold_temp_difference_C": (mpf("23.135"), [mpf("12.757"), mpf("10.668"), mpf("4.972")]),
    "total_warpage_mm": (mpf("7.636"), [mpf("1.070"), mpf("1.067"), mpf("0.725")]),
    "warpage_stress_MPa": (mpf("48.587"), [mpf("12.743"), mpf("10.219"), mpf("8.803")]),
}
for metric, (base, variants) in tables.items():
    for v in variants:
        red = base - v
        imp = 100 * red / base
        print(f"  {metric:24s} {mp.nstr(v, 7):>8s}  reduction {mp.nstr(red, 7):>8s}"
              f"  improvement {mp.nstr(imp, 8)}")
