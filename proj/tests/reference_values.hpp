// Frozen reference values for the test suite.
// Generated by tests/oracles/gen_reference_values.py (mpmath, 60 dps).
// Do not edit by hand; regenerate with the script instead.
#pragma once

namespace refvals {

// ===== gamma =====
inline constexpr double gamma_5_6 = 1.1287870299081260;  // integral quadrature, cross-checked vs gamma()
inline constexpr double gamma_1_3 = 2.6789385347077476;
inline constexpr double gamma_2_3 = 1.3541179394264004;
inline constexpr double gamma_4_3 = 0.89297951156924921;
inline constexpr double gamma_5_3 = 0.90274529295093361;
inline constexpr double gamma_1_6 = 5.5663160017802352;
inline constexpr double gamma_at_m19_5 = 5.8110459775022365e-18;
inline constexpr double gamma_at_m7_3 = 0.00041838787301354770;
inline constexpr double gamma_at_m0_7 = -4.2736699824108438;
inline constexpr double gamma_at_0_1 = 9.5135076986687318;
inline constexpr double gamma_at_3_7 = 4.1706517837966032;
inline constexpr double gamma_at_12_34 = 92044896.636968601;
inline constexpr double gamma_at_27_5 = 2.0858851927622669e+27;
inline constexpr double gamma_at_49_9 = 4.1180110342530580e+62;

// ===== hyp2f1 =====
inline constexpr double hyp2f1_sal_0p999 = 0.56730696674980783;  // 2F1(-2/3,1/3;2/3;0.999), brute-force series at 220 dps
// 2F1(0.3,1.7;2.9;0.45+0.30i), direct series
inline constexpr double hyp2f1_generic_inside_re = 1.0834385842447865;
inline constexpr double hyp2f1_generic_inside_im = 0.082874312779028859;
// 2F1(0.3,1.7;2.9;0.92+0.08i), non-log connection at 1 (c-a-b=0.9)
inline constexpr double hyp2f1_generic_near1_re = 1.3225910688069073;
inline constexpr double hyp2f1_generic_near1_im = 0.077849901120954421;
// 2F1(-2/3,1/3;2/3;0.92+0.08i), log case m=1 at 1
inline constexpr double hyp2f1_log_near1_re = 0.62742003905675254;
inline constexpr double hyp2f1_log_near1_im = -0.046457816195263920;
// 2F1(1,4/3;5/3;3+2i), 1/z region, b-a=1/3 non-integer
inline constexpr double hyp2f1_invz_generic_re = -0.19504411685265564;
inline constexpr double hyp2f1_invz_generic_im = 0.43661296063326213;
// 2F1(kappa/4-1,kappa/4;kappa/2;-5), kappa=3.3, 1/z with b-a=1 (log case)
inline constexpr double hyp2f1_invz_log_re = 1.2245342692296685;
inline constexpr double hyp2f1_invz_log_im = 0.0;
// 2F1(-2/3,1/3;2/3;-3+4i), 1/z with b-a=1
inline constexpr double hyp2f1_invz_log2_re = 1.9063623236389129;
inline constexpr double hyp2f1_invz_log2_im = -0.85782806044900969;
inline constexpr double hyp2f1_below1 = 45.969329440039826;  // 2F1(1,4/3;5/3;0.995), c-a-b=-2/3 (divergent at 1)
// 2F1(-2/3,1/3;2/3;2+1e-8 i), just above the cut
inline constexpr double hyp2f1_above_cut_re = 0.19371912232941996;
inline constexpr double hyp2f1_above_cut_im = -0.33553135968928438;
inline constexpr double logconn_sal_regular = 0.76887135932328961;  // regular part of 2F1(-2/3,1/3;2/3;z) split at 1-z=0.5
inline constexpr double logconn_sal_logcoef = -0.072631623288245000;  // log coefficient of the same split
inline constexpr double logconn_k3_regular = 0.67138203226203273;  // regular part, (a,b,c)=(-3/4,1/4,1/2) at 1-z=0.3 (kappa=3 block)
inline constexpr double logconn_k3_logcoef = -0.032007039964277949;  // log coefficient of the same split

// ===== blocks and crossing =====
inline constexpr double n31_k2_5 = 0.82521562600371152;
inline constexpr double ng11_k2_5 = 0.58156196033775472;
inline constexpr double ngm11_k2_5 = 0.35474106040414406;
inline constexpr double n31_k3 = 0.68541987156669544;
inline constexpr double ng11_k3 = 0.53935260118837936;
inline constexpr double ngm11_k3 = 0.63540981359548431;
inline constexpr double n31_k3_7 = 0.54299873704488506;
inline constexpr double ng11_k3_7 = 0.50419009455636640;
inline constexpr double ngm11_k3_7 = 0.91542640657045477;
inline constexpr double f11_x037_k31 = 1.0175154415385604;
inline constexpr double f31_x037_k31 = 0.65993355177918823;
inline constexpr double g11_x037_k31_A03 = 1.1469950568259772;  // A=0.3
inline constexpr double gm11_x037_k31 = 0.85057504298638539;
inline constexpr double phys_bulk_x03_04_k31 = 0.73640269161335427;  // |calF11|^2-|calF31|^2 at x=0.3+0.4i, kappa=3.1

// ===== bulk correlators =====
inline constexpr double bulk4pt_cfgA_k31 = 0.15228747343577373;  // z1=0.2+1.1i z2=-0.4+0.7i z3=1.3+0.5i z4=-0.9+1.6i, kappa=3.1
inline constexpr double bulk4pt_cfgA_k28 = 0.10753453130177383;  // same points, kappa=2.8
// cross-ratio of the test configuration
inline constexpr double bulk4pt_cfgA_x_re = 0.15995673596923447;
inline constexpr double bulk4pt_cfgA_x_im = -1.3655810599687538;
inline constexpr double sal_prob_cfgA = 0.35327560331565420;  // SAL separation probability at the test configuration
inline constexpr double pn_max = 0.65010838887273389;  // 1/2 + 9*Gamma(5/6)^6/(4 pi^3)

// ===== winding =====
inline constexpr double sigma_acceptance = 0.18827584038855337;  // sigma for zA=e^{i pi/3}, zB=2 e^{i pi/4}
inline constexpr double w_sigma_acceptance = 0.32062241091944368;
inline constexpr double w_at_0p3 = 0.23565890400877524;
inline constexpr double w_at_0p7 = 0.071197847535581607;
inline constexpr double p_ab_acceptance = 0.68925012462330473;
inline constexpr double p_a_acceptance = 0.060749875376695270;
inline constexpr double p_b_acceptance = 0.16430326596996903;
inline constexpr double p_o_acceptance = 0.085696734030030968;
inline constexpr double h_general_regression = 1.6602995081950883;  // rho=1: c1=1.3, c2=0.7, sigma=0.3, tau=0.4

// ===== percolation six-point =====
inline constexpr double perc6_cfgA = 0.22681039998311633;  // z=0.3+1.7i, x=(-1.2,-0.3,0.8,2.1)

// ===== monodromy (clockwise), basis (calF11, calF31) =====
inline constexpr double mon0_11_k2_5_re = 1.0000000000000000;
inline constexpr double mon0_11_k2_5_im = 0.0;
inline constexpr double mon0_22_k2_5_re = 0.0;
inline constexpr double mon0_22_k2_5_im = -1.0000000000000000;
inline constexpr double mon1_11_k2_5_re = -2.6131259297527531;
inline constexpr double mon1_11_k2_5_im = 0.0;
inline constexpr double mon1_12_k2_5_re = 2.2304424973876633;
inline constexpr double mon1_12_k2_5_im = 0.92387953251128676;
inline constexpr double mon1_21_k2_5_re = -2.2304424973876633;
inline constexpr double mon1_21_k2_5_im = -0.92387953251128676;
inline constexpr double mon1_22_k2_5_re = 1.8477590650225735;
inline constexpr double mon1_22_k2_5_im = 1.8477590650225735;
inline constexpr double mon0_11_k3_re = 1.0000000000000000;
inline constexpr double mon0_11_k3_im = 0.0;
inline constexpr double mon0_22_k3_re = -1.0000000000000000;
inline constexpr double mon0_22_k3_im = 0.0;
inline constexpr double mon1_11_k3_re = -1.4142135623730950;
inline constexpr double mon1_11_k3_im = 0.0;
inline constexpr double mon1_12_k3_re = 0.70710678118654752;
inline constexpr double mon1_12_k3_im = 0.70710678118654752;
inline constexpr double mon1_21_k3_re = -0.70710678118654752;
inline constexpr double mon1_21_k3_im = -0.70710678118654752;
inline constexpr double mon1_22_k3_re = 0.0;
inline constexpr double mon1_22_k3_im = 1.4142135623730950;
inline constexpr double mon0_11_k3_7_re = 1.0000000000000000;
inline constexpr double mon0_11_k3_7_im = 0.0;
inline constexpr double mon0_22_k3_7_re = 0.58778525229247313;
inline constexpr double mon0_22_k3_7_im = 0.80901699437494742;
inline constexpr double mon1_11_k3_7_re = -1.0284151936652085;
inline constexpr double mon1_11_k3_7_im = 0.0;
inline constexpr double mon1_12_k3_7_re = 0.056045273267531944;
inline constexpr double mon1_12_k3_7_im = 0.23344536385590541;
inline constexpr double mon1_21_k3_7_re = -0.056045273267531944;
inline constexpr double mon1_21_k3_7_im = -0.23344536385590541;
inline constexpr double mon1_22_k3_7_re = -0.91632464713014466;
inline constexpr double mon1_22_k3_7_im = 0.46689072771181082;

// ===== stats =====
inline constexpr double chi2_q3_0p1 = 0.99183742373187648;  // upper-tail chi-square p, 3 dof, x=0.1
inline constexpr double chi2_q3_1p5 = 0.68227033033621257;  // upper-tail chi-square p, 3 dof, x=1.5
inline constexpr double chi2_q3_7p81 = 0.050106056350005933;  // upper-tail chi-square p, 3 dof, x=7.81
inline constexpr double chi2_q3_11p34 = 0.010022517616912462;  // upper-tail chi-square p, 3 dof, x=11.34
inline constexpr double chi2_q3_16p27 = 0.00099822323990541828;  // upper-tail chi-square p, 3 dof, x=16.27
inline constexpr double wilson_z = 1.9599639845400542;  // 97.5% normal quantile
inline constexpr double wilson_lo_15000_20000 = 0.74395123558477267;
inline constexpr double wilson_hi_15000_20000 = 0.75595274638717502;
inline constexpr double wilson_lo_1_50 = 0.0035392592716462323;
inline constexpr double wilson_hi_1_50 = 0.10495443589637815;

}  // namespace refvals
