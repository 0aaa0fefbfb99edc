#pragma once

// Tabulated CDF of the Tracy-Widom distribution, index 1.
// Generated by scripts/make_tw1_table.py (Painleve II,
// Hastings-McLeod solution, DOP853 at rtol 1e-13).

#include <array>
#include <cstddef>

namespace lbmtest::detail {

inline constexpr std::size_t kTw1TableSize = 901;

inline constexpr std::array<double, 901> kTw1Grid = {
    -10, -9.9800000000000004, -9.9600000000000009, -9.9399999999999995, -9.9199999999999999,
    -9.9000000000000004, -9.8800000000000008, -9.8599999999999994, -9.8399999999999999, -9.8200000000000003,
    -9.8000000000000007, -9.7799999999999994, -9.7599999999999998, -9.7400000000000002, -9.7200000000000006,
    -9.6999999999999993, -9.6799999999999997, -9.6600000000000001, -9.6400000000000006, -9.6199999999999992,
    -9.5999999999999996, -9.5800000000000001, -9.5600000000000005, -9.5399999999999991, -9.5199999999999996,
    -9.5, -9.4800000000000004, -9.4600000000000009, -9.4399999999999995, -9.4199999999999999,
    -9.4000000000000004, -9.3800000000000008, -9.3599999999999994, -9.3399999999999999, -9.3200000000000003,
    -9.3000000000000007, -9.2799999999999994, -9.2599999999999998, -9.2400000000000002, -9.2200000000000006,
    -9.1999999999999993, -9.1799999999999997, -9.1600000000000001, -9.1400000000000006, -9.1199999999999992,
    -9.0999999999999996, -9.0800000000000001, -9.0600000000000005, -9.0399999999999991, -9.0199999999999996,
    -9, -8.9800000000000004, -8.9600000000000009, -8.9399999999999995, -8.9199999999999999,
    -8.9000000000000004, -8.8800000000000008, -8.8599999999999994, -8.8399999999999999, -8.8200000000000003,
    -8.8000000000000007, -8.7799999999999994, -8.7599999999999998, -8.7400000000000002, -8.7200000000000006,
    -8.6999999999999993, -8.6799999999999997, -8.6600000000000001, -8.6400000000000006, -8.6199999999999992,
    -8.5999999999999996, -8.5800000000000001, -8.5600000000000005, -8.5399999999999991, -8.5199999999999996,
    -8.5, -8.4800000000000004, -8.4600000000000009, -8.4399999999999995, -8.4199999999999999,
    -8.4000000000000004, -8.3800000000000008, -8.3599999999999994, -8.3399999999999999, -8.3200000000000003,
    -8.3000000000000007, -8.2799999999999994, -8.2599999999999998, -8.2400000000000002, -8.2200000000000006,
    -8.1999999999999993, -8.1799999999999997, -8.1600000000000001, -8.1400000000000006, -8.1199999999999992,
    -8.0999999999999996, -8.0800000000000001, -8.0600000000000005, -8.0399999999999991, -8.0199999999999996,
    -8, -7.9800000000000004, -7.96, -7.9400000000000004, -7.9199999999999999,
    -7.9000000000000004, -7.8799999999999999, -7.8600000000000003, -7.8399999999999999, -7.8200000000000003,
    -7.7999999999999998, -7.7800000000000002, -7.7599999999999998, -7.7400000000000002, -7.7199999999999998,
    -7.7000000000000002, -7.6799999999999997, -7.6600000000000001, -7.6399999999999997, -7.6200000000000001,
    -7.5999999999999996, -7.5800000000000001, -7.5599999999999996, -7.54, -7.5199999999999996,
    -7.5, -7.4800000000000004, -7.46, -7.4400000000000004, -7.4199999999999999,
    -7.4000000000000004, -7.3799999999999999, -7.3600000000000003, -7.3399999999999999, -7.3200000000000003,
    -7.2999999999999998, -7.2800000000000002, -7.2599999999999998, -7.2400000000000002, -7.2199999999999998,
    -7.2000000000000002, -7.1799999999999997, -7.1600000000000001, -7.1399999999999997, -7.1200000000000001,
    -7.0999999999999996, -7.0800000000000001, -7.0599999999999996, -7.04, -7.0199999999999996,
    -7, -6.9800000000000004, -6.96, -6.9400000000000004, -6.9199999999999999,
    -6.9000000000000004, -6.8799999999999999, -6.8600000000000003, -6.8399999999999999, -6.8200000000000003,
    -6.7999999999999998, -6.7800000000000002, -6.7599999999999998, -6.7400000000000002, -6.7199999999999998,
    -6.7000000000000002, -6.6799999999999997, -6.6600000000000001, -6.6399999999999997, -6.6200000000000001,
    -6.5999999999999996, -6.5800000000000001, -6.5599999999999996, -6.54, -6.5199999999999996,
    -6.5, -6.4800000000000004, -6.46, -6.4400000000000004, -6.4199999999999999,
    -6.4000000000000004, -6.3799999999999999, -6.3600000000000003, -6.3399999999999999, -6.3200000000000003,
    -6.2999999999999998, -6.2800000000000002, -6.2599999999999998, -6.2400000000000002, -6.2199999999999998,
    -6.2000000000000002, -6.1799999999999997, -6.1600000000000001, -6.1399999999999997, -6.1200000000000001,
    -6.0999999999999996, -6.0800000000000001, -6.0599999999999996, -6.04, -6.0199999999999996,
    -6, -5.9800000000000004, -5.96, -5.9400000000000004, -5.9199999999999999,
    -5.9000000000000004, -5.8799999999999999, -5.8600000000000003, -5.8399999999999999, -5.8200000000000003,
    -5.7999999999999998, -5.7800000000000002, -5.7599999999999998, -5.7400000000000002, -5.7199999999999998,
    -5.7000000000000002, -5.6799999999999997, -5.6600000000000001, -5.6399999999999997, -5.6200000000000001,
    -5.5999999999999996, -5.5800000000000001, -5.5599999999999996, -5.54, -5.5199999999999996,
    -5.5, -5.4800000000000004, -5.46, -5.4400000000000004, -5.4199999999999999,
    -5.4000000000000004, -5.3799999999999999, -5.3600000000000003, -5.3399999999999999, -5.3200000000000003,
    -5.2999999999999998, -5.2800000000000002, -5.2599999999999998, -5.2400000000000002, -5.2199999999999998,
    -5.2000000000000002, -5.1799999999999997, -5.1600000000000001, -5.1399999999999997, -5.1200000000000001,
    -5.0999999999999996, -5.0800000000000001, -5.0599999999999996, -5.04, -5.0199999999999996,
    -5, -4.9800000000000004, -4.96, -4.9400000000000004, -4.9199999999999999,
    -4.9000000000000004, -4.8799999999999999, -4.8600000000000003, -4.8399999999999999, -4.8200000000000003,
    -4.7999999999999998, -4.7800000000000002, -4.7599999999999998, -4.7400000000000002, -4.7199999999999998,
    -4.7000000000000002, -4.6799999999999997, -4.6600000000000001, -4.6399999999999997, -4.6200000000000001,
    -4.5999999999999996, -4.5800000000000001, -4.5599999999999996, -4.54, -4.5199999999999996,
    -4.5, -4.4800000000000004, -4.46, -4.4400000000000004, -4.4199999999999999,
    -4.4000000000000004, -4.3799999999999999, -4.3600000000000003, -4.3399999999999999, -4.3200000000000003,
    -4.2999999999999998, -4.2800000000000002, -4.2599999999999998, -4.2400000000000002, -4.2199999999999998,
    -4.2000000000000002, -4.1799999999999997, -4.1600000000000001, -4.1399999999999997, -4.1200000000000001,
    -4.0999999999999996, -4.0800000000000001, -4.0599999999999996, -4.04, -4.0199999999999996,
    -4, -3.98, -3.96, -3.9399999999999999, -3.9199999999999999,
    -3.8999999999999999, -3.8799999999999999, -3.8599999999999999, -3.8399999999999999, -3.8199999999999998,
    -3.7999999999999998, -3.7799999999999998, -3.7599999999999998, -3.7400000000000002, -3.7200000000000002,
    -3.7000000000000002, -3.6800000000000002, -3.6600000000000001, -3.6400000000000001, -3.6200000000000001,
    -3.6000000000000001, -3.5800000000000001, -3.5600000000000001, -3.54, -3.52,
    -3.5, -3.48, -3.46, -3.4399999999999999, -3.4199999999999999,
    -3.3999999999999999, -3.3799999999999999, -3.3599999999999999, -3.3399999999999999, -3.3199999999999998,
    -3.2999999999999998, -3.2799999999999998, -3.2599999999999998, -3.2400000000000002, -3.2200000000000002,
    -3.2000000000000002, -3.1800000000000002, -3.1600000000000001, -3.1400000000000001, -3.1200000000000001,
    -3.1000000000000001, -3.0800000000000001, -3.0600000000000001, -3.04, -3.02,
    -3, -2.98, -2.96, -2.9399999999999999, -2.9199999999999999,
    -2.8999999999999999, -2.8799999999999999, -2.8599999999999999, -2.8399999999999999, -2.8199999999999998,
    -2.7999999999999998, -2.7799999999999998, -2.7599999999999998, -2.7400000000000002, -2.7200000000000002,
    -2.7000000000000002, -2.6800000000000002, -2.6600000000000001, -2.6400000000000001, -2.6200000000000001,
    -2.6000000000000001, -2.5800000000000001, -2.5600000000000001, -2.54, -2.52,
    -2.5, -2.48, -2.46, -2.4399999999999999, -2.4199999999999999,
    -2.3999999999999999, -2.3799999999999999, -2.3599999999999999, -2.3399999999999999, -2.3199999999999998,
    -2.2999999999999998, -2.2799999999999998, -2.2599999999999998, -2.2400000000000002, -2.2200000000000002,
    -2.2000000000000002, -2.1800000000000002, -2.1600000000000001, -2.1400000000000001, -2.1200000000000001,
    -2.1000000000000001, -2.0800000000000001, -2.0600000000000001, -2.04, -2.02,
    -2, -1.98, -1.96, -1.9399999999999999, -1.9199999999999999,
    -1.8999999999999999, -1.8799999999999999, -1.8600000000000001, -1.8400000000000001, -1.8200000000000001,
    -1.8, -1.78, -1.76, -1.74, -1.72,
    -1.7, -1.6799999999999999, -1.6599999999999999, -1.6399999999999999, -1.6200000000000001,
    -1.6000000000000001, -1.5800000000000001, -1.5600000000000001, -1.54, -1.52,
    -1.5, -1.48, -1.46, -1.4399999999999999, -1.4199999999999999,
    -1.3999999999999999, -1.3799999999999999, -1.3600000000000001, -1.3400000000000001, -1.3200000000000001,
    -1.3, -1.28, -1.26, -1.24, -1.22,
    -1.2, -1.1799999999999999, -1.1599999999999999, -1.1399999999999999, -1.1200000000000001,
    -1.1000000000000001, -1.0800000000000001, -1.0600000000000001, -1.04, -1.02,
    -1, -0.97999999999999998, -0.95999999999999996, -0.93999999999999995, -0.92000000000000004,
    -0.90000000000000002, -0.88, -0.85999999999999999, -0.83999999999999997, -0.81999999999999995,
    -0.80000000000000004, -0.78000000000000003, -0.76000000000000001, -0.73999999999999999, -0.71999999999999997,
    -0.69999999999999996, -0.68000000000000005, -0.66000000000000003, -0.64000000000000001, -0.62,
    -0.59999999999999998, -0.57999999999999996, -0.56000000000000005, -0.54000000000000004, -0.52000000000000002,
    -0.5, -0.47999999999999998, -0.46000000000000002, -0.44, -0.41999999999999998,
    -0.40000000000000002, -0.38, -0.35999999999999999, -0.34000000000000002, -0.32000000000000001,
    -0.29999999999999999, -0.28000000000000003, -0.26000000000000001, -0.23999999999999999, -0.22,
    -0.20000000000000001, -0.17999999999999999, -0.16, -0.14000000000000001, -0.12,
    -0.10000000000000001, -0.080000000000000002, -0.059999999999999998, -0.040000000000000001, -0.02,
    -0, 0.02, 0.040000000000000001, 0.059999999999999998, 0.080000000000000002,
    0.10000000000000001, 0.12, 0.14000000000000001, 0.16, 0.17999999999999999,
    0.20000000000000001, 0.22, 0.23999999999999999, 0.26000000000000001, 0.28000000000000003,
    0.29999999999999999, 0.32000000000000001, 0.34000000000000002, 0.35999999999999999, 0.38,
    0.40000000000000002, 0.41999999999999998, 0.44, 0.46000000000000002, 0.47999999999999998,
    0.5, 0.52000000000000002, 0.54000000000000004, 0.56000000000000005, 0.57999999999999996,
    0.59999999999999998, 0.62, 0.64000000000000001, 0.66000000000000003, 0.68000000000000005,
    0.69999999999999996, 0.71999999999999997, 0.73999999999999999, 0.76000000000000001, 0.78000000000000003,
    0.80000000000000004, 0.81999999999999995, 0.83999999999999997, 0.85999999999999999, 0.88,
    0.90000000000000002, 0.92000000000000004, 0.93999999999999995, 0.95999999999999996, 0.97999999999999998,
    1, 1.02, 1.04, 1.0600000000000001, 1.0800000000000001,
    1.1000000000000001, 1.1200000000000001, 1.1399999999999999, 1.1599999999999999, 1.1799999999999999,
    1.2, 1.22, 1.24, 1.26, 1.28,
    1.3, 1.3200000000000001, 1.3400000000000001, 1.3600000000000001, 1.3799999999999999,
    1.3999999999999999, 1.4199999999999999, 1.4399999999999999, 1.46, 1.48,
    1.5, 1.52, 1.54, 1.5600000000000001, 1.5800000000000001,
    1.6000000000000001, 1.6200000000000001, 1.6399999999999999, 1.6599999999999999, 1.6799999999999999,
    1.7, 1.72, 1.74, 1.76, 1.78,
    1.8, 1.8200000000000001, 1.8400000000000001, 1.8600000000000001, 1.8799999999999999,
    1.8999999999999999, 1.9199999999999999, 1.9399999999999999, 1.96, 1.98,
    2, 2.02, 2.04, 2.0600000000000001, 2.0800000000000001,
    2.1000000000000001, 2.1200000000000001, 2.1400000000000001, 2.1600000000000001, 2.1800000000000002,
    2.2000000000000002, 2.2200000000000002, 2.2400000000000002, 2.2599999999999998, 2.2799999999999998,
    2.2999999999999998, 2.3199999999999998, 2.3399999999999999, 2.3599999999999999, 2.3799999999999999,
    2.3999999999999999, 2.4199999999999999, 2.4399999999999999, 2.46, 2.48,
    2.5, 2.52, 2.54, 2.5600000000000001, 2.5800000000000001,
    2.6000000000000001, 2.6200000000000001, 2.6400000000000001, 2.6600000000000001, 2.6800000000000002,
    2.7000000000000002, 2.7200000000000002, 2.7400000000000002, 2.7599999999999998, 2.7799999999999998,
    2.7999999999999998, 2.8199999999999998, 2.8399999999999999, 2.8599999999999999, 2.8799999999999999,
    2.8999999999999999, 2.9199999999999999, 2.9399999999999999, 2.96, 2.98,
    3, 3.02, 3.04, 3.0600000000000001, 3.0800000000000001,
    3.1000000000000001, 3.1200000000000001, 3.1400000000000001, 3.1600000000000001, 3.1800000000000002,
    3.2000000000000002, 3.2200000000000002, 3.2400000000000002, 3.2599999999999998, 3.2799999999999998,
    3.2999999999999998, 3.3199999999999998, 3.3399999999999999, 3.3599999999999999, 3.3799999999999999,
    3.3999999999999999, 3.4199999999999999, 3.4399999999999999, 3.46, 3.48,
    3.5, 3.52, 3.54, 3.5600000000000001, 3.5800000000000001,
    3.6000000000000001, 3.6200000000000001, 3.6400000000000001, 3.6600000000000001, 3.6800000000000002,
    3.7000000000000002, 3.7200000000000002, 3.7400000000000002, 3.7599999999999998, 3.7799999999999998,
    3.7999999999999998, 3.8199999999999998, 3.8399999999999999, 3.8599999999999999, 3.8799999999999999,
    3.8999999999999999, 3.9199999999999999, 3.9399999999999999, 3.96, 3.98,
    4, 4.0199999999999996, 4.04, 4.0599999999999996, 4.0800000000000001,
    4.0999999999999996, 4.1200000000000001, 4.1399999999999997, 4.1600000000000001, 4.1799999999999997,
    4.2000000000000002, 4.2199999999999998, 4.2400000000000002, 4.2599999999999998, 4.2800000000000002,
    4.2999999999999998, 4.3200000000000003, 4.3399999999999999, 4.3600000000000003, 4.3799999999999999,
    4.4000000000000004, 4.4199999999999999, 4.4400000000000004, 4.46, 4.4800000000000004,
    4.5, 4.5199999999999996, 4.54, 4.5599999999999996, 4.5800000000000001,
    4.5999999999999996, 4.6200000000000001, 4.6399999999999997, 4.6600000000000001, 4.6799999999999997,
    4.7000000000000002, 4.7199999999999998, 4.7400000000000002, 4.7599999999999998, 4.7800000000000002,
    4.7999999999999998, 4.8200000000000003, 4.8399999999999999, 4.8600000000000003, 4.8799999999999999,
    4.9000000000000004, 4.9199999999999999, 4.9400000000000004, 4.96, 4.9800000000000004,
    5, 5.0199999999999996, 5.04, 5.0599999999999996, 5.0800000000000001,
    5.0999999999999996, 5.1200000000000001, 5.1399999999999997, 5.1600000000000001, 5.1799999999999997,
    5.2000000000000002, 5.2199999999999998, 5.2400000000000002, 5.2599999999999998, 5.2800000000000002,
    5.2999999999999998, 5.3200000000000003, 5.3399999999999999, 5.3600000000000003, 5.3799999999999999,
    5.4000000000000004, 5.4199999999999999, 5.4400000000000004, 5.46, 5.4800000000000004,
    5.5, 5.5199999999999996, 5.54, 5.5599999999999996, 5.5800000000000001,
    5.5999999999999996, 5.6200000000000001, 5.6399999999999997, 5.6600000000000001, 5.6799999999999997,
    5.7000000000000002, 5.7199999999999998, 5.7400000000000002, 5.7599999999999998, 5.7800000000000002,
    5.7999999999999998, 5.8200000000000003, 5.8399999999999999, 5.8600000000000003, 5.8799999999999999,
    5.9000000000000004, 5.9199999999999999, 5.9400000000000004, 5.96, 5.9800000000000004,
    6, 6.0199999999999996, 6.04, 6.0599999999999996, 6.0800000000000001,
    6.0999999999999996, 6.1200000000000001, 6.1399999999999997, 6.1600000000000001, 6.1799999999999997,
    6.2000000000000002, 6.2199999999999998, 6.2400000000000002, 6.2599999999999998, 6.2800000000000002,
    6.2999999999999998, 6.3200000000000003, 6.3399999999999999, 6.3600000000000003, 6.3799999999999999,
    6.4000000000000004, 6.4199999999999999, 6.4400000000000004, 6.46, 6.4800000000000004,
    6.5, 6.5199999999999996, 6.54, 6.5599999999999996, 6.5800000000000001,
    6.5999999999999996, 6.6200000000000001, 6.6399999999999997, 6.6600000000000001, 6.6799999999999997,
    6.7000000000000002, 6.7199999999999998, 6.7400000000000002, 6.7599999999999998, 6.7800000000000002,
    6.7999999999999998, 6.8200000000000003, 6.8399999999999999, 6.8600000000000003, 6.8799999999999999,
    6.9000000000000004, 6.9199999999999999, 6.9400000000000004, 6.96, 6.9800000000000004,
    7, 7.0199999999999996, 7.04, 7.0599999999999996, 7.0800000000000001,
    7.0999999999999996, 7.1200000000000001, 7.1399999999999997, 7.1600000000000001, 7.1799999999999997,
    7.2000000000000002, 7.2199999999999998, 7.2400000000000002, 7.2599999999999998, 7.2800000000000002,
    7.2999999999999998, 7.3200000000000003, 7.3399999999999999, 7.3600000000000003, 7.3799999999999999,
    7.4000000000000004, 7.4199999999999999, 7.4400000000000004, 7.46, 7.4800000000000004,
    7.5, 7.5199999999999996, 7.54, 7.5599999999999996, 7.5800000000000001,
    7.5999999999999996, 7.6200000000000001, 7.6399999999999997, 7.6600000000000001, 7.6799999999999997,
    7.7000000000000002, 7.7199999999999998, 7.7400000000000002, 7.7599999999999998, 7.7800000000000002,
    7.7999999999999998, 7.8200000000000003, 7.8399999999999999, 7.8600000000000003, 7.8799999999999999,
    7.9000000000000004, 7.9199999999999999, 7.9400000000000004, 7.96, 7.9800000000000004,
    8,
};

inline constexpr std::array<double, 901> kTw1Cdf = {
    3.1948091928478721e-22, 4.189402048231909e-22, 5.4884603427339212e-22, 7.1835373194828646e-22, 9.3932029654809037e-22,
    1.2270860438908136e-21, 1.6014777575438388e-21, 2.0880947729955035e-21, 2.7199560718406001e-21, 3.5396075204151692e-21,
    4.6018149899349918e-21, 5.9770026659284013e-21, 7.7556381728628613e-21, 1.0053819426858714e-20, 1.302038515583642e-20,
    1.6845955243896369e-20, 2.1774412760184581e-20, 2.8117472060687002e-20, 3.6273143332959648e-20, 4.6749111609847008e-20,
    6.0192307793612552e-20, 7.7426273210210124e-20, 9.9498323234210988e-20, 1.2773901882515907e-19, 1.6383708112227862e-19,
    2.0993366278831833e-19, 2.6874085654917724e-19, 3.4369052056770977e-19, 4.3912098622227793e-19, 5.6051105314387211e-19,
    7.1477295061484073e-19, 9.1061875353662068e-19, 1.1590182072553524e-18, 1.473770187731246e-18, 1.8722152837823441e-18,
    2.3761234581213437e-18, 3.0127986934875934e-18, 3.8164522874682501e-18, 4.8299084231156668e-18, 6.1067202956976296e-18,
    7.7137930048205565e-18, 9.7346313350981525e-18, 1.227335730532622e-17, 1.5459675001966269e-17, 1.9454999978013368e-17,
    2.4460018900119695e-17, 3.072400397980353e-17, 3.8556278211173504e-17, 4.8340314179998027e-17, 6.0551054354004689e-17,
    7.5776168084645409e-17, 9.4742114563908707e-17, 1.183460670906463e-16, 1.476949786670574e-16, 1.8415333987618479e-16,
    2.2940150637692936e-16, 2.855068661419196e-16, 3.5501058878157255e-16, 4.4103326642568134e-16, 5.4740343605253288e-16,
    6.7881378866194655e-16, 8.4101084710730463e-16, 1.0410250622918452e-15, 1.2874496729228489e-15, 1.5907783397630939e-15,
    1.9638135516448953e-15, 2.4221601667120651e-15, 2.984821268226126e-15, 3.6749168618753408e-15, 4.5205499172522701e-15,
    5.5558489730991875e-15, 6.8222221166123909e-15, 8.3698637667098245e-15, 1.0259563521190812e-14, 1.2564875580151841e-14,
    1.537471818029046e-14, 1.8796485355238077e-14, 2.2959768511690036e-14, 2.8020803170511538e-14, 3.416777722017709e-14,
    4.1627161693785453e-14, 5.067125402144326e-14, 6.162715763473427e-14, 7.4887461527993268e-14, 9.0922929858543275e-14,
    1.1029756598733712e-13, 1.3368647878260399e-13, 1.6189705298350984e-13, 1.958940116189202e-13, 2.3682905881803812e-13,
    2.8607590803997698e-13, 3.4527163631710894e-13, 4.1636546245024944e-13, 5.0167622952882262e-13, 6.0396008346872865e-13,
    7.2649008379489013e-13, 8.7314976558616132e-13, 1.0485429979769137e-12, 1.2581228612831587e-12, 1.508342698978935e-12,
    1.8068330006707997e-12, 2.1626083472967391e-12, 2.5863093106590196e-12, 3.0904849581394572e-12, 3.6899224836737088e-12,
    4.4020314831736532e-12, 5.2472915339630601e-12, 6.2497730430106809e-12, 7.4377428198638213e-12, 8.8443675319942778e-12,
    1.0508530140635363e-11, 1.2475776625363831e-11, 1.4799412820716089e-11, 1.7541774047236153e-11, 2.0775693466434339e-11,
    2.4586198773161313e-11, 2.9072471014607445e-11, 3.4350104053415283e-11, 4.0553708541154597e-11, 4.783991031304722e-11,
    5.6390799939203719e-11, 6.6417897864659542e-11, 7.8166708243262379e-11, 9.1921944332914272e-11, 1.0801351929798496e-10,
    1.2682340859793982e-10, 1.4879350398305998e-10, 1.7443459463752122e-10, 2.0433662839327031e-10, 2.3918042538947797e-10,
    2.7975103829629236e-10, 3.2695297750435869e-10, 3.8182754677218022e-10, 4.4557256501695771e-10, 5.1956478355211363e-10,
    6.0538534546809588e-10, 7.0484867540351224e-10, 8.2003523407840909e-10, 9.5332862311108782e-10, 1.1074575823061797e-09,
    1.2855434843149871e-09, 1.4911540009056275e-09, 1.7283636916611457e-09, 2.0018223504203446e-09, 2.3168320379108947e-09,
    2.6794338315770252e-09, 3.0965054364097818e-09, 3.5758709245463459e-09, 4.1264240074758528e-09, 4.7582663939058097e-09,
    5.4828629498002271e-09, 6.3132155559789203e-09, 7.2640577542072176e-09, 8.3520724862463018e-09, 9.5961354632788889e-09,
    1.1017586956970133e-08, 1.2640535079759108e-08, 1.449219392245736e-08, 1.6603260243637874e-08, 1.9008332759466874e-08,
    2.1746378466523023e-08, 2.4861250845790648e-08, 2.8402265245557909e-08, 3.2424837226597035e-08, 3.6991190177115494e-08,
    4.2171139069898312e-08, 4.8042957842375654e-08, 5.4694338534568292e-08, 6.2223451022714918e-08, 7.0740112940540414e-08,
    8.036708018848199e-08, 9.1241469296513594e-08, 1.0351632383155843e-07, 1.1736233802868769e-07, 1.3296975187950152e-07,
    1.5055043303420956e-07, 1.7034016206907549e-07, 1.9260113894103192e-07, 2.1762472979945996e-07, 2.4573447475431762e-07,
    2.7728937871280849e-07, 3.1268750899658724e-07, 3.5236992514057567e-07, 3.9682496805564032e-07, 4.4659293761277973e-07,
    5.0227118967863457e-07, 5.6451968570266687e-07, 6.3406703012746018e-07, 7.1171703316620455e-07, 7.9835583886724924e-07,
    8.9495966086476632e-07, 1.0026031707981611e-06, 1.1224685870699778e-06, 1.2558555144030969e-06, 1.4041915875507858e-06,
    1.5690439755073229e-06, 1.7521318056586844e-06, 1.9553395705009094e-06, 2.1807315828327216e-06, 2.4305675486966161e-06,
    2.707319330791083e-06, 3.0136889786029978e-06, 3.3526281051031806e-06, 3.7273586935049533e-06, 4.1413954212943728e-06,
    4.5985695924923101e-06, 5.1030547728925577e-06, 5.6593942268233918e-06, 6.2725302577909573e-06, 6.9478355591650644e-06,
    7.6911466848493067e-06, 8.508799753616712e-06, 9.4076685044772148e-06, 1.039520482404827e-05, 1.1479481870412771e-05,
    1.2669239921338054e-05, 1.3973935077983607e-05, 1.5403790958309511e-05, 1.6969853517296346e-05, 1.8684049133765456e-05,
    2.0559246106028214e-05, 2.2609319700754405e-05, 2.4849220901318178e-05, 2.7295049003405546e-05, 2.9964128206844443e-05,
    3.2875088353383691e-05, 3.6047949960502062e-05, 3.9504213701208022e-05, 4.3266954479184731e-05, 4.7360920247501432e-05,
    5.1812635717403589e-05, 5.6650511101410456e-05, 6.1904956032009955e-05, 6.7608498793659541e-05, 7.3795911001504858e-05,
    8.0504337855216907e-05, 8.7773434090556809e-05, 9.5645505744717179e-05, 0.00010416565784407925, 0.0001133819481147921,
    0.0001233455468074454, 0.00013411090271710417, 0.0001457359154690029, 0.00015828211412834405, 0.00017181484217976378,
    0.00018640344890825196, 0.00020212148719846341, 0.00021904691775361906, 0.00023726231971834619, 0.00025685510767209071,
    0.00027791775494088571, 0.0003005480231555635, 0.00032484919796372337, 0.00035093033078109322, 0.00037890648644532611,
    0.0004088989966116884, 0.00044103571870577599, 0.00047545130022306982, 0.00051228744813918835, 0.000551693203167844,
    0.00059382521857609925, 0.00063884804323832863, 0.00068693440858170541, 0.00073826551904672638, 0.00079303134565680453,
    0.0008514309222608517, 0.00091367264398269175, 0.00097997456738060842, 0.0010505647117899782, 0.0011256813612913717,
    0.0012055733667163152, 0.00129050044707263, 0.0013807334897417783, 0.0014765548487710794, 0.0015782586405552849,
    0.0016861510361737082, 0.0018005505496222821, 0.0019217883211534326, 0.0020502083949117777, 0.0021861679900297653,
    0.0023300377643246765, 0.0024822020697176698, 0.0026430591984757798, 0.0028130216193605014, 0.002992516202750338,
    0.003181984433791289, 0.003381882612617257, 0.0035926820406730988, 0.0038148691921657523, 0.0040489458696645235,
    0.004295429342869082, 0.0045548524695650013, 0.0048277637977891868, 0.0051147276482346815, 0.005416324175932608,
    0.0057331494102619536, 0.0060658152723522957, 0.006414949568963847, 0.0067811959619495533, 0.0071652139124298245,
    0.0075676785988372736, 0.0079892808080209033, 0.0084307267986326873, 0.0088927381360576433, 0.0093760514981889483,
    0.0098814184513935366, 0.010409605196060738, 0.010961392281176452, 0.011537574287418426, 0.012138959478324163,
    0.012766369419141509, 0.013420638563033747, 0.01410261380437447, 0.014813153998934401, 0.015553129450830849,
    0.016323421366180837, 0.017124921273472985, 0.017958530410746174, 0.01882515907974058, 0.019725725967263789,
    0.020661157434093125, 0.021632386771815972, 0.022640353428089684, 0.023686002200884619, 0.024770282402354293,
    0.025894146993059353, 0.027058551687352585, 0.028264454030813593, 0.02951281245070192, 0.030804585280477279,
    0.032140729759513077, 0.03352220100920713, 0.034949950986768036, 0.036424927418029822, 0.03794807271071763,
    0.039520322849657244, 0.041142606275486396, 0.042815842748490242, 0.044540942199242727, 0.046318803567793318,
    0.048150313633191923, 0.050036345835194757, 0.051977759090039675, 0.053975396602222225, 0.056030084674240602,
    0.058142631516311459, 0.060313826058087737, 0.062544436764433886, 0.064835210457332815, 0.067186871146014751,
    0.069600118867407079, 0.072075628539009673, 0.07461404882629992, 0.077216001026765888, 0.079882077972657298,
    0.082612842954526214, 0.085408828667611139, 0.088270536183091025, 0.091198433946206664, 0.094192956803209688,
    0.097254505059059929, 0.10038344356774814, 0.10358010085706801, 0.10684476828960945, 0.11017769926168736,
    0.11357910844185223, 0.11704917105056759, 0.12058802218256454, 0.124195756173309, 0.12787242601094051,
    0.13161804279495817, 0.13543257524284427, 0.13931594924572996, 0.14326804747411456, 0.14728870903455896,
    0.15137772917817785, 0.1555348590616574, 0.15975980556142858, 0.16405223114152365, 0.16841175377554404,
    0.17283794692306459, 0.17733033956069605, 0.18188841626792648, 0.18651161736775659, 0.19119933912204268,
    0.19595093398135774, 0.20076571088907941, 0.20564293563931302, 0.21058183128815811, 0.21558157861772817,
    0.22064131665223721, 0.22576014322537372, 0.23093711559808722, 0.23617125112582535, 0.24146152797417084,
    0.2468068858817431, 0.25220622696914841, 0.25765841659268257, 0.26316228424141702, 0.26871662447622569,
    0.27432019790924239, 0.27997173222217525, 0.28566992322184331, 0.29141343593124264, 0.29720090571440028,
    0.30303093943322301, 0.30890211663450429, 0.31481299076521507, 0.32076209041416542, 0.32674792057809599,
    0.33276896395022798, 0.33882368222928355, 0.34491051744696144, 0.35102789331184997, 0.35717421656774007,
    0.36334787836430282, 0.36954725563809193, 0.37577071250183447, 0.38201660163998297, 0.38828326570851052,
    0.39456903873694837, 0.40087224753068229, 0.40719121307154793, 0.41352425191479236, 0.4198696775804977,
    0.42622580193759657, 0.43259093657864456, 0.43896339418355668, 0.44534148987055466, 0.45172354253261815,
    0.45810787615778065, 0.46449282113166257, 0.47087671552068255, 0.47725790633444787, 0.48363475076587703,
    0.49000561740766901, 0.49636888744379226, 0.50272295581472837, 0.5090662323552676, 0.5153971429037203,
    0.52171413038146752, 0.52801565584184618, 0.53430019948742591, 0.54056626165480381, 0.54681236376610998,
    0.553037049246483, 0.55923888440684455, 0.56541645929136541, 0.57156838848908686, 0.57769331190922402,
    0.58378989551974503, 0.58985683204888695, 0.5958928416493311, 0.60189667252482371, 0.60786710151909717,
    0.61380293466699631, 0.61970300770778664, 0.62556618656067264, 0.63139136776261517, 0.63717747886859066,
    0.64292347881449041, 0.64862835824291243, 0.65429113979214581, 0.6599108783486991, 0.66548666126377187,
    0.6710176085341123, 0.6765028729477488, 0.6819416401951246, 0.6873331289462028, 0.69267659089415023,
    0.69797131076623942, 0.70321660630264582, 0.70841182820384518, 0.71355636004734868, 0.71864961817453799,
    0.72369105154838975, 0.72868014158290006, 0.73361640194504374, 0.73849937833011858, 0.74332864821134592,
    0.74810382056461022, 0.75282453556923723, 0.7574904642857192, 0.76210130831130551, 0.76665679941438725,
    0.7711566991486053, 0.77560079844762053, 0.77998891720148655, 0.78432090381556074, 0.78859663475289787,
    0.79281601406106017, 0.79697897288427766, 0.80108546896188881, 0.80513548611398011, 0.80912903371514089,
    0.81306614615723649, 0.816946882302095, 0.82077132492499028, 0.82453958014979079, 0.82825177687663243,
    0.83190806620295688, 0.83550862083874256, 0.83905363451673909, 0.84254332139849863, 0.84597791547698042,
    0.84935766997648654, 0.85268285675066591, 0.8559537656793077, 0.85917070406462159, 0.86233399602768379,
    0.86544398190570693, 0.86850101765076981, 0.87150547423062197, 0.87445773703215668, 0.87735820526812269,
    0.88020729138762543, 0.88300542049094299, 0.88575302974916337, 0.88845056782912435, 0.8910984943241167,
    0.89369727919078956, 0.89624740219267252, 0.89874935235071118, 0.90120362740118609, 0.90361073326136776,
    0.90597118350323658, 0.90828549883557652, 0.91055420659472996, 0.91277784024428177, 0.91495693888391927,
    0.91709204676769518, 0.91918371283190203, 0.92123249023274745, 0.92323893589399919, 0.92520361006475382,
    0.92712707588746235, 0.92900989897633024, 0.93085264700619275, 0.93265588931194865, 0.93442019649862029,
    0.93614614006209473, 0.93783429202058133, 0.93948522455681016, 0.94109950967098177, 0.94267771884446283,
    0.94422042271421258, 0.94572819075790993, 0.94720159098974099, 0.94864118966679456, 0.95004755100600258,
    0.95142123691155212, 0.95276280671268665, 0.95407281691180157, 0.95535182094273619, 0.95660036893914857,
    0.95781900751285931, 0.95900827954203571, 0.96016872396908692, 0.96130087560813049, 0.96240526496188483,
    0.96348241804783918, 0.96453285623354446, 0.96555709608086449, 0.96655564919902404, 0.967529022106284,
    0.96847771610007205, 0.96940222713539381, 0.97030304571134462, 0.97118065676554344, 0.9720355395763034,
    0.9728681676723564, 0.97367900874994384, 0.97446852459708688, 0.97523717102484742, 0.97598539780539084,
    0.9767136486166611, 0.97742236099347823, 0.97811196628486985, 0.97878288961744675, 0.97943554986463455,
    0.98007035962157485, 0.98068772518550751, 0.98128804654145108, 0.98187171735299583, 0.98243912495802888,
    0.98299065036920941, 0.98352666827901758, 0.9840475470691985, 0.98455364882442953, 0.98504532935003741,
    0.98552293819359682, 0.98598681867024351, 0.98643730789153827, 0.98687473679771931, 0.98729943019318678,
    0.98771170678506193, 0.98811187922466981, 0.98850025415179499, 0.98887713224156593, 0.98924280825382227,
    0.98959757108482727, 0.98994170382118851, 0.99027548379585195, 0.9905991826460413, 0.99091306637301435,
    0.99121739540351395, 0.99151242465279266, 0.99179840358909466, 0.99207557629948184, 0.99234418155689308,
    0.99260445288833077, 0.99285661864407027, 0.99310090206779256, 0.99333752136754327, 0.99356668978742302,
    0.99378861567992061, 0.99400350257879955, 0.9942115492724547, 0.99441294987765749, 0.99460789391361226,
    0.99479656637624703, 0.99497914781266772, 0.99515581439570666, 0.99532673799849769, 0.99549208626901564,
    0.99565202270451802, 0.99580670672583216, 0.99595629375143124, 0.99610093527124621, 0.99624077892016483,
    0.99637596855116728, 0.99650664430805591, 0.99663294269773373, 0.99675499666199174, 0.99687293564876722,
    0.99698688568283578, 0.9970969694359032, 0.99720330629606513, 0.99730601243660533, 0.99740520088410278,
    0.99750098158582268, 0.99759346147636729, 0.99768274454356232, 0.99776893189356053, 0.99785212181514138,
    0.99793240984318998, 0.99800988882134034, 0.99808464896376625, 0.99815677791610957, 0.99822636081553162,
    0.99829348034988064, 0.99835821681596248, 0.9984206481769109, 0.9984808501186484, 0.99853889610543256,
    0.99859485743448551, 0.99864880328970063, 0.99870080079442691, 0.99875091506332814, 0.99879920925331767,
    0.99884574461356812, 0.99889058053459989, 0.99893377459644739, 0.99897538261590979, 0.99901545869288622,
    0.99905405525580315, 0.99909122310613707, 0.99912701146203831, 0.99916146800106309, 0.99919463890202009,
    0.99922656888593819, 0.99925730125616452, 0.9992868779375994, 0.99931533951507834, 0.99934272527090906,
    0.99936907322157242, 0.99939442015359925, 0.99941880165862984, 0.99944225216766858, 0.99946480498454382,
    0.99948649231858289, 0.99950734531651442, 0.99952739409360769, 0.99954666776406131, 0.99956519447065273,
    0.99958300141365908, 0.99960011487906208, 0.99961656026604806, 0.99963236211381579, 0.99964754412770218,
    0.9996621292046407, 0.99967613945796074, 0.99968959624154408, 0.99970252017334593, 0.99971493115829668,
    0.99972684841059356, 0.99973829047539453, 0.99974927524992785, 0.99975982000402663, 0.99976994140010222,
    0.99977965551256698, 0.99978897784671861, 0.99979792335709627, 0.99980650646532243, 0.99981474107743862,
    0.99982264060074821, 0.99983021796017768, 0.99983748561416552, 0.99984445557009072, 0.99985113939925185,
    0.9998575482514066, 0.99986369286888233, 0.99986958360026756, 0.99987523041369675, 0.99988064290973411,
    0.99988583033387057, 0.99989080158864119, 0.99989556524537315, 0.99990012955557395, 0.99990450246196783,
    0.99990869160919216, 0.99991270435415913, 0.99991654777609451, 0.99992022868626051, 0.99992375363737163,
    0.99992712893271107, 0.99993036063495733, 0.9999334545747276, 0.99993641635884567, 0.99993925137834339,
    0.99994196481620101, 0.99994456165483625, 0.99994704668334666, 0.99994942450451441, 0.9999516995415787,
    0.99995387604478414, 0.99995595809770954, 0.99995794962338624, 0.99995985439020885, 0.99996167601764774,
    0.99996341798176747, 0.99996508362055669, 0.99996667613907686, 0.99996819861443298, 0.99996965400057403,
    0.99997104513292723, 0.99997237473287048, 0.99997364541205003, 0.99997485967654609, 0.99997601993089269,
    0.99997712848195563, 0.99997818754267309, 0.99997919923566347, 0.99998016559670422, 0.99998108857808732,
    0.99998197005185263, 0.99998281181290616, 0.99998361558202487, 0.99998438300875236, 0.99998511567418957,
    0.99998581509368312, 0.99998648271941548, 0.99998711994289913, 0.99998772809737968, 0.9999883084601493,
    0.9999888622547739, 0.99998939065323866, 0.99998989477801137, 0.99999037570403038, 0.9999908344606161,
    0.99999127203331128, 0.99999168936565119, 0.99999208736086687, 0.99999246688352283, 0.99999282876109308,
    0.99999317378547603, 0.99999350271445109, 0.99999381627307993, 0.9999941151550521, 0.99999440002397988,
    0.99999467151464205, 0.99999493023417874, 0.99999517676324035, 0.99999541165709105, 0.99999563544666814,
    0.99999584863960078, 0.99999605172118766, 0.99999624515533558, 0.99999642938546152, 0.99999660483535824,
    0.9999967719100249, 0.99999693099646469, 0.99999708246445063, 0.99999722666725988, 0.9999973639423787,
    0.99999749461217857, 0.99999761898456518, 0.99999773735360065, 0.99999785000009989, 0.99999795719220375,
    0.99999805918592732, 0.99999815622568622, 0.99999824854480102, 0.99999833636598101, 0.99999841990178762,
    0.99999849935507834, 0.99999857491943289, 0.99999864677956052, 0.99999871511169114, 0.99999878008394916,
    0.99999884185671273, 0.99999890058295648, 0.99999895640858061, 0.99999900947272591, 0.99999905990807492,
    0.99999910784114088, 0.99999915339254375, 0.99999919667727477, 0.9999992378049497, 0.99999927688005064,
    0.99999931400215814, 0.99999934926617273, 0.99999938276252698, 0.9999994145773885, 0.99999944479285419,
    0.99999947348713514, 0.99999950073473509, 0.99999952660661928, 0.9999995511703772, 0.99999957449037713,
    0.99999959662791538, 0.9999996176413567, 0.99999963758627086, 0.99999965651556144, 0.99999967447958937,
    0.99999969152629142, 0.99999970770129321, 0.99999972304801621, 0.99999973760778149, 0.99999975141990782,
    0.99999976452180539, 0.99999977694906561, 0.99999978873554674, 0.99999979991345544, 0.99999981051342501,
    0.9999998205645898, 0.99999983009465609, 0.99999983912997004, 0.99999984769558226, 0.99999985581530981,
    0.99999986351179482, 0.99999987080656105, 0.99999987772006682, 0.9999998842717569, 0.99999989048011051,
    0.99999989636268838, 0.99999990193617694, 0.99999990721643017, 0.99999991221851048, 0.99999991695672674,
    0.99999992144467076, 0.99999992569525242, 0.99999992972073315, 0.99999993353275674, 0.99999993714238045,
    0.99999994056010311, 0.99999994379589296, 0.99999994685921334, 0.99999994975904782, 0.99999995250392359,
    0.99999995510193429, 0.99999995756076132, 0.99999995988769397, 0.99999996208964959, 0.99999996417319115,
    0.99999996614454578, 0.99999996800962077, 0.99999996977402017, 0.9999999714430593, 0.9999999730217799,
    0.99999997451496336, 0.99999997592714374, 0.99999997726262091, 0.99999997852547162, 0.99999997971956078,
    0.99999998084855302, 0.99999998191592154, 0.99999998292495906, 0.99999998387878619, 0.99999998478036034,
    0.99999998563248438, 0.99999998643781396, 0.99999998719886551, 0.99999998791802336, 0.99999998859754602,
    0.99999998923957312, 0.99999998984613137, 0.99999999041914034, 0.99999999096041803, 0.99999999147168628,
    0.99999999195457512,
};

}  // namespace lbmtest::detail
