#pragma once

#include <vector>

// Published polynomial tables, transcribed verbatim. Coefficients are in
// ascending powers of u; the u^k coefficient is 1.

struct GoldenRow {
  int table;
  int J;
  int k, zeta, n1, n2, nu;
  std::vector<double> coefficients;
  double g0;
  double energy_over_chi;
};

inline const std::vector<GoldenRow>& golden_rows() {
  static const std::vector<GoldenRow> rows = {
      {1, 0, 0, 1, 0, 0, 0, {1.0}, 0, 0},
      {1, 1, 0, 1, 1, 0, 0, {1.0}, 0, 1},
      {1, 1, 0, 1, 0, 0, 1, {1.0}, 0, 0},
      {1, 1, 0, 1, 0, 1, 0, {1.0}, 0, -1},
      {1, 2, 0, 1, 1, 0, 1, {1.0}, 0, 3},
      {1, 2, 0, 1, 1, 1, 0, {1.0}, 0, 0},
      {1, 2, 0, 1, 0, 1, 1, {1.0}, 0, -3},
      {1, 2, 1, 1, 0, 0, 0, {0.57735, 1.0}, -0.866025, -3.4641},
      {1, 2, 1, 2, 0, 0, 0, {-0.57735, 1.0}, 0.866025, 3.4641},
      {1, 3, 0, 1, 1, 1, 1, {1.0}, 0, 0},
      {1, 3, 1, 1, 0, 0, 1, {0.774597, 1.0}, -1.93649, -7.74597},
      {1, 3, 1, 2, 0, 0, 1, {-0.774597, 1.0}, 1.93649, 7.74597},
      {1, 3, 1, 1, 0, 1, 0, {0.289898, 1.0}, -1.72474, -7.89898},
      {1, 3, 1, 2, 0, 1, 0, {-0.689898, 1.0}, 0.724745, 1.89898},
      {1, 3, 1, 1, 1, 0, 0, {0.689898, 1.0}, -0.724745, -1.89898},
      {1, 3, 1, 2, 1, 0, 0, {-0.289898, 1.0}, 1.72474, 7.89898},
      {1, 4, 2, 1, 0, 0, 0, {0.142857, 1.03016, 1.0}, 1.03016, -14.4222},
      {1, 4, 2, 2, 0, 0, 0, {-0.6, 0.0, 1.0}, 0, 0},
      {1, 4, 2, 3, 0, 0, 0, {0.142857, -1.03016, 1.0}, -1.03016, 14.4222},
      {1, 4, 1, 1, 0, 1, 1, {0.527202, 1.0}, -2.84521, -14.3808},
      {1, 4, 1, 2, 0, 1, 1, {-0.812917, 1.0}, 1.84521, 4.38083},
      {1, 4, 1, 1, 1, 0, 1, {0.812917, 1.0}, -1.84521, -4.38083},
      {1, 4, 1, 2, 1, 0, 1, {-0.527202, 1.0}, 2.84521, 14.3808},
      {1, 4, 1, 1, 1, 1, 0, {0.377964, 1.0}, -1.32288, -5.2915},
      {1, 4, 1, 2, 1, 1, 0, {-0.377964, 1.0}, 1.32288, 5.2915},
      {1, 5, 2, 1, 0, 0, 1, {0.333333, 1.27657, 1.0}, 1.27657, -22.9783},
      {1, 5, 2, 2, 0, 0, 1, {-0.714286, 0.0, 1.0}, 0, 0},
      {1, 5, 2, 3, 0, 0, 1, {0.333333, -1.27657, 1.0}, -1.27657, 22.9783},
      {1, 5, 2, 1, 0, 1, 0, {0.0706856, 0.777127, 1.0}, 0.777127, -22.9883},
      {1, 5, 2, 2, 0, 1, 0, {-0.40046, -0.347913, 1.0}, -0.347913, -2.73757},
      {1, 5, 2, 3, 0, 1, 0, {0.186917, -1.09588, 1.0}, -1.09588, 10.7259},
      {1, 5, 2, 1, 1, 0, 0, {0.186917, 1.09588, 1.0}, 1.09588, -10.7259},
      {1, 5, 2, 2, 1, 0, 0, {-0.40046, 0.347913, 1.0}, 0.347913, 2.73757},
      {1, 5, 2, 3, 1, 0, 0, {0.0706856, -0.777127, 1.0}, -0.777127, 22.9883},
      {1, 5, 1, 1, 1, 1, 1, {0.57735, 1.0}, -2.59808, -10.3923},
      {1, 5, 1, 2, 1, 1, 1, {-0.57735, 1.0}, 2.59808, 10.3923},
      {2, 12, 6, 1, 0, 0, 0, {0.000541694, 0.0376684, 0.429523, 1.80288, 3.43433, 3.0234, 1.0}, 0.0376684, -139.076},
      {2, 12, 6, 2, 0, 0, 0, {-0.00319288, -0.123789, -0.758387, -1.34125, -0.0153776, 1.68567, 1.0}, -0.123789, -77.5408},
      {2, 12, 6, 3, 0, 0, 0, {0.0165927, 0.24233, 0.37415, -0.847361, -1.35063, 0.634983, 1.0}, 0.24233, -29.2092},
      {2, 12, 6, 4, 0, 0, 0, {-0.0497738, 0.0, 0.647059, 0.0, -1.57143, 0.0, 1.0}, 0, 0},
      {2, 12, 6, 5, 0, 0, 0, {0.0165927, -0.24233, 0.37415, 0.847361, -1.35063, -0.634983, 1.0}, -0.24233, 29.2092},
      {2, 12, 6, 6, 0, 0, 0, {-0.00319288, 0.123789, -0.758387, 1.34125, -0.0153776, -1.68567, 1.0}, 0.123789, 77.5408},
      {2, 12, 6, 7, 0, 0, 0, {0.000541694, -0.0376684, 0.429523, -1.80288, 3.43433, -3.0234, 1.0}, -0.0376684, 139.076},
      {2, 12, 5, 1, 0, 1, 1, {0.00637508, 0.144583, 0.906987, 2.29763, 2.5234, 1.0}, 0.144583, -139.076},
      {2, 12, 5, 2, 0, 1, 1, {-0.027919, -0.346847, -1.01394, -0.483239, 1.18565, 1.0}, -0.346847, -77.5399},
      {2, 12, 5, 3, 0, 1, 1, {0.0854689, 0.368501, -0.238076, -1.29453, 0.127591, 1.0}, 0.368501, -28.8692},
      {2, 12, 5, 4, 0, 1, 1, {-0.114417, 0.232435, 0.669984, -1.0747, -0.699757, 1.0}, 0.232435, 9.18883},
      {2, 12, 5, 5, 0, 1, 1, {0.0520016, -0.472687, 0.993523, 0.0512233, -1.62042, 1.0}, -0.472687, 51.5391},
      {2, 12, 5, 6, 0, 1, 1, {-0.0137782, 0.252043, -1.33025, 2.91356, -2.82082, 1.0}, 0.252043, 106.758},
      {2, 12, 5, 1, 1, 0, 1, {0.0137782, 0.252043, 1.33025, 2.91356, 2.82082, 1.0}, 0.252043, -106.758},
      {2, 12, 5, 2, 1, 0, 1, {-0.0520016, -0.472687, -0.993523, 0.0512233, 1.62042, 1.0}, -0.472687, -51.5391},
      {2, 12, 5, 3, 1, 0, 1, {0.114417, 0.232435, -0.669984, -1.0747, 0.699757, 1.0}, 0.232435, -9.18883},
      {2, 12, 5, 4, 1, 0, 1, {-0.0854689, 0.368501, 0.238076, -1.29453, -0.127591, 1.0}, 0.368501, 28.8692},
      {2, 12, 5, 5, 1, 0, 1, {0.027919, -0.346847, 1.01394, -0.483239, -1.18565, 1.0}, -0.346847, 77.5399},
      {2, 12, 5, 6, 1, 0, 1, {-0.00637508, 0.144583, -0.906987, 2.29763, -2.5234, 1.0}, 0.144583, 139.076},
      {2, 12, 5, 1, 1, 1, 0, {0.00133825, 0.0714339, 0.618781, 1.87815, 2.32082, 1.0}, 0.0714339, -106.758},
      {2, 12, 5, 2, 1, 1, 0, {-0.00736718, -0.189934, -0.724024, -0.383373, 1.12091, 1.0}, -0.189934, -51.5621},
      {2, 12, 5, 3, 1, 1, 0, {0.0351315, 0.207975, -0.233945, -1.03515, 0.257387, 1.0}, 0.207975, -11.8398},
      {2, 12, 5, 4, 1, 1, 0, {-0.0351315, 0.207975, 0.233945, -1.03515, -0.257387, 1.0}, 0.207975, 11.8398},
      {2, 12, 5, 5, 1, 1, 0, {0.00736718, -0.189934, 0.724024, -0.383373, -1.12091, 1.0}, -0.189934, 51.5621},
      {2, 12, 5, 6, 1, 1, 0, {-0.00133825, 0.0714339, -0.618781, 1.87815, -2.32082, 1.0}, 0.0714339, 106.758},
  };
  return rows;
}
