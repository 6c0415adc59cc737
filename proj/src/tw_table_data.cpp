// Tracy-Widom beta=1 CDF table.
// Generated by scripts/gen_tw_table.py (Fredholm determinant of the
// Airy-kernel operator, Gauss-Legendre discretization); do not edit.

#include "sompkit/tracy_widom.hpp"

namespace sompkit::tracy_widom::detail {

const int kTw1TableSize = 1542;

const double kTw1Grid[] = {
    -10, -9.75, -9.5, -9.25, -9, -8.75,
    -8.5, -8.25, -8, -7.75, -7.5, -7.25,
    -7, -6.75, -6.5, -6.25, -6, -5.9500000000000002,
    -5.9000000000000004, -5.8499999999999996, -5.7999999999999998, -5.75, -5.7000000000000002, -5.6500000000000004,
    -5.5999999999999996, -5.5499999999999998, -5.5, -5.4500000000000002, -5.4000000000000004, -5.3499999999999996,
    -5.2999999999999998, -5.25, -5.2000000000000002, -5.1500000000000004, -5.0999999999999996, -5.0499999999999998,
    -5, -4.9900000000000002, -4.9800000000000004, -4.9699999999999998, -4.96, -4.9500000000000002,
    -4.9400000000000004, -4.9299999999999997, -4.9199999999999999, -4.9100000000000001, -4.9000000000000004, -4.8899999999999997,
    -4.8799999999999999, -4.8700000000000001, -4.8600000000000003, -4.8499999999999996, -4.8399999999999999, -4.8300000000000001,
    -4.8200000000000003, -4.8099999999999996, -4.7999999999999998, -4.79, -4.7800000000000002, -4.7699999999999996,
    -4.7599999999999998, -4.75, -4.7400000000000002, -4.7300000000000004, -4.7199999999999998, -4.71,
    -4.7000000000000002, -4.6900000000000004, -4.6799999999999997, -4.6699999999999999, -4.6600000000000001, -4.6500000000000004,
    -4.6399999999999997, -4.6299999999999999, -4.6200000000000001, -4.6100000000000003, -4.5999999999999996, -4.5899999999999999,
    -4.5800000000000001, -4.5700000000000003, -4.5599999999999996, -4.5499999999999998, -4.54, -4.5300000000000002,
    -4.5199999999999996, -4.5099999999999998, -4.5, -4.4900000000000002, -4.4800000000000004, -4.4699999999999998,
    -4.46, -4.4500000000000002, -4.4400000000000004, -4.4299999999999997, -4.4199999999999999, -4.4100000000000001,
    -4.4000000000000004, -4.3899999999999997, -4.3799999999999999, -4.3700000000000001, -4.3600000000000003, -4.3499999999999996,
    -4.3399999999999999, -4.3300000000000001, -4.3200000000000003, -4.3099999999999996, -4.2999999999999998, -4.29,
    -4.2800000000000002, -4.2699999999999996, -4.2599999999999998, -4.25, -4.2400000000000002, -4.2300000000000004,
    -4.2199999999999998, -4.21, -4.2000000000000002, -4.1900000000000004, -4.1799999999999997, -4.1699999999999999,
    -4.1600000000000001, -4.1500000000000004, -4.1399999999999997, -4.1299999999999999, -4.1200000000000001, -4.1100000000000003,
    -4.0999999999999996, -4.0899999999999999, -4.0800000000000001, -4.0700000000000003, -4.0599999999999996, -4.0499999999999998,
    -4.04, -4.0300000000000002, -4.0199999999999996, -4.0099999999999998, -4, -3.9950000000000001,
    -3.9900000000000002, -3.9849999999999999, -3.98, -3.9750000000000001, -3.9700000000000002, -3.9649999999999999,
    -3.96, -3.9550000000000001, -3.9500000000000002, -3.9449999999999998, -3.9399999999999999, -3.9350000000000001,
    -3.9300000000000002, -3.9249999999999998, -3.9199999999999999, -3.915, -3.9100000000000001, -3.9049999999999998,
    -3.8999999999999999, -3.895, -3.8900000000000001, -3.8849999999999998, -3.8799999999999999, -3.875,
    -3.8700000000000001, -3.8650000000000002, -3.8599999999999999, -3.855, -3.8500000000000001, -3.8450000000000002,
    -3.8399999999999999, -3.835, -3.8300000000000001, -3.8250000000000002, -3.8199999999999998, -3.8149999999999999,
    -3.8100000000000001, -3.8050000000000002, -3.7999999999999998, -3.7949999999999999, -3.79, -3.7850000000000001,
    -3.7799999999999998, -3.7749999999999999, -3.77, -3.7650000000000001, -3.7599999999999998, -3.7549999999999999,
    -3.75, -3.7450000000000001, -3.7400000000000002, -3.7349999999999999, -3.73, -3.7250000000000001,
    -3.7200000000000002, -3.7149999999999999, -3.71, -3.7050000000000001, -3.7000000000000002, -3.6949999999999998,
    -3.6899999999999999, -3.6850000000000001, -3.6800000000000002, -3.6749999999999998, -3.6699999999999999, -3.665,
    -3.6600000000000001, -3.6549999999999998, -3.6499999999999999, -3.645, -3.6400000000000001, -3.6349999999999998,
    -3.6299999999999999, -3.625, -3.6200000000000001, -3.6150000000000002, -3.6099999999999999, -3.605,
    -3.6000000000000001, -3.5950000000000002, -3.5899999999999999, -3.585, -3.5800000000000001, -3.5750000000000002,
    -3.5699999999999998, -3.5649999999999999, -3.5600000000000001, -3.5550000000000002, -3.5499999999999998, -3.5449999999999999,
    -3.54, -3.5350000000000001, -3.5299999999999998, -3.5249999999999999, -3.52, -3.5150000000000001,
    -3.5099999999999998, -3.5049999999999999, -3.5, -3.4950000000000001, -3.4900000000000002, -3.4849999999999999,
    -3.48, -3.4750000000000001, -3.4700000000000002, -3.4649999999999999, -3.46, -3.4550000000000001,
    -3.4500000000000002, -3.4449999999999998, -3.4399999999999999, -3.4350000000000001, -3.4300000000000002, -3.4249999999999998,
    -3.4199999999999999, -3.415, -3.4100000000000001, -3.4049999999999998, -3.3999999999999999, -3.395,
    -3.3900000000000001, -3.3849999999999998, -3.3799999999999999, -3.375, -3.3700000000000001, -3.3650000000000002,
    -3.3599999999999999, -3.355, -3.3500000000000001, -3.3450000000000002, -3.3399999999999999, -3.335,
    -3.3300000000000001, -3.3250000000000002, -3.3199999999999998, -3.3149999999999999, -3.3100000000000001, -3.3050000000000002,
    -3.2999999999999998, -3.2949999999999999, -3.29, -3.2850000000000001, -3.2799999999999998, -3.2749999999999999,
    -3.27, -3.2650000000000001, -3.2599999999999998, -3.2549999999999999, -3.25, -3.2450000000000001,
    -3.2400000000000002, -3.2349999999999999, -3.23, -3.2250000000000001, -3.2200000000000002, -3.2149999999999999,
    -3.21, -3.2050000000000001, -3.2000000000000002, -3.1949999999999998, -3.1899999999999999, -3.1850000000000001,
    -3.1800000000000002, -3.1749999999999998, -3.1699999999999999, -3.165, -3.1600000000000001, -3.1549999999999998,
    -3.1499999999999999, -3.145, -3.1400000000000001, -3.1349999999999998, -3.1299999999999999, -3.125,
    -3.1200000000000001, -3.1150000000000002, -3.1099999999999999, -3.105, -3.1000000000000001, -3.0950000000000002,
    -3.0899999999999999, -3.085, -3.0800000000000001, -3.0750000000000002, -3.0699999999999998, -3.0649999999999999,
    -3.0600000000000001, -3.0550000000000002, -3.0499999999999998, -3.0449999999999999, -3.04, -3.0350000000000001,
    -3.0299999999999998, -3.0249999999999999, -3.02, -3.0150000000000001, -3.0099999999999998, -3.0049999999999999,
    -3, -2.9950000000000001, -2.9900000000000002, -2.9849999999999999, -2.98, -2.9750000000000001,
    -2.9700000000000002, -2.9649999999999999, -2.96, -2.9550000000000001, -2.9500000000000002, -2.9449999999999998,
    -2.9399999999999999, -2.9350000000000001, -2.9300000000000002, -2.9249999999999998, -2.9199999999999999, -2.915,
    -2.9100000000000001, -2.9049999999999998, -2.8999999999999999, -2.895, -2.8900000000000001, -2.8849999999999998,
    -2.8799999999999999, -2.875, -2.8700000000000001, -2.8650000000000002, -2.8599999999999999, -2.855,
    -2.8500000000000001, -2.8450000000000002, -2.8399999999999999, -2.835, -2.8300000000000001, -2.8250000000000002,
    -2.8199999999999998, -2.8149999999999999, -2.8100000000000001, -2.8050000000000002, -2.7999999999999998, -2.7949999999999999,
    -2.79, -2.7850000000000001, -2.7799999999999998, -2.7749999999999999, -2.77, -2.7650000000000001,
    -2.7599999999999998, -2.7549999999999999, -2.75, -2.7450000000000001, -2.7400000000000002, -2.7349999999999999,
    -2.73, -2.7250000000000001, -2.7200000000000002, -2.7149999999999999, -2.71, -2.7050000000000001,
    -2.7000000000000002, -2.6949999999999998, -2.6899999999999999, -2.6850000000000001, -2.6800000000000002, -2.6749999999999998,
    -2.6699999999999999, -2.665, -2.6600000000000001, -2.6549999999999998, -2.6499999999999999, -2.645,
    -2.6400000000000001, -2.6349999999999998, -2.6299999999999999, -2.625, -2.6200000000000001, -2.6150000000000002,
    -2.6099999999999999, -2.605, -2.6000000000000001, -2.5950000000000002, -2.5899999999999999, -2.585,
    -2.5800000000000001, -2.5750000000000002, -2.5699999999999998, -2.5649999999999999, -2.5600000000000001, -2.5550000000000002,
    -2.5499999999999998, -2.5449999999999999, -2.54, -2.5350000000000001, -2.5299999999999998, -2.5249999999999999,
    -2.52, -2.5150000000000001, -2.5099999999999998, -2.5049999999999999, -2.5, -2.4950000000000001,
    -2.4900000000000002, -2.4849999999999999, -2.48, -2.4750000000000001, -2.4700000000000002, -2.4649999999999999,
    -2.46, -2.4550000000000001, -2.4500000000000002, -2.4449999999999998, -2.4399999999999999, -2.4350000000000001,
    -2.4300000000000002, -2.4249999999999998, -2.4199999999999999, -2.415, -2.4100000000000001, -2.4049999999999998,
    -2.3999999999999999, -2.395, -2.3900000000000001, -2.3849999999999998, -2.3799999999999999, -2.375,
    -2.3700000000000001, -2.3650000000000002, -2.3599999999999999, -2.355, -2.3500000000000001, -2.3450000000000002,
    -2.3399999999999999, -2.335, -2.3300000000000001, -2.3250000000000002, -2.3199999999999998, -2.3149999999999999,
    -2.3100000000000001, -2.3050000000000002, -2.2999999999999998, -2.2949999999999999, -2.29, -2.2850000000000001,
    -2.2799999999999998, -2.2749999999999999, -2.27, -2.2650000000000001, -2.2599999999999998, -2.2549999999999999,
    -2.25, -2.2450000000000001, -2.2400000000000002, -2.2349999999999999, -2.23, -2.2250000000000001,
    -2.2200000000000002, -2.2149999999999999, -2.21, -2.2050000000000001, -2.2000000000000002, -2.1949999999999998,
    -2.1899999999999999, -2.1850000000000001, -2.1800000000000002, -2.1749999999999998, -2.1699999999999999, -2.165,
    -2.1600000000000001, -2.1549999999999998, -2.1499999999999999, -2.145, -2.1400000000000001, -2.1349999999999998,
    -2.1299999999999999, -2.125, -2.1200000000000001, -2.1150000000000002, -2.1099999999999999, -2.105,
    -2.1000000000000001, -2.0950000000000002, -2.0899999999999999, -2.085, -2.0800000000000001, -2.0750000000000002,
    -2.0699999999999998, -2.0649999999999999, -2.0600000000000001, -2.0550000000000002, -2.0499999999999998, -2.0449999999999999,
    -2.04, -2.0350000000000001, -2.0299999999999998, -2.0249999999999999, -2.02, -2.0150000000000001,
    -2.0099999999999998, -2.0049999999999999, -2, -1.9950000000000001, -1.99, -1.9850000000000001,
    -1.98, -1.9750000000000001, -1.97, -1.9650000000000001, -1.96, -1.9550000000000001,
    -1.95, -1.9450000000000001, -1.9399999999999999, -1.9350000000000001, -1.9299999999999999, -1.925,
    -1.9199999999999999, -1.915, -1.9099999999999999, -1.905, -1.8999999999999999, -1.895,
    -1.8899999999999999, -1.885, -1.8799999999999999, -1.875, -1.8700000000000001, -1.865,
    -1.8600000000000001, -1.855, -1.8500000000000001, -1.845, -1.8400000000000001, -1.835,
    -1.8300000000000001, -1.825, -1.8200000000000001, -1.8149999999999999, -1.8100000000000001, -1.8049999999999999,
    -1.8, -1.7949999999999999, -1.79, -1.7849999999999999, -1.78, -1.7749999999999999,
    -1.77, -1.7649999999999999, -1.76, -1.7549999999999999, -1.75, -1.7450000000000001,
    -1.74, -1.7350000000000001, -1.73, -1.7250000000000001, -1.72, -1.7150000000000001,
    -1.71, -1.7050000000000001, -1.7, -1.6950000000000001, -1.6899999999999999, -1.6850000000000001,
    -1.6799999999999999, -1.675, -1.6699999999999999, -1.665, -1.6599999999999999, -1.655,
    -1.6499999999999999, -1.645, -1.6399999999999999, -1.635, -1.6299999999999999, -1.625,
    -1.6200000000000001, -1.615, -1.6100000000000001, -1.605, -1.6000000000000001, -1.595,
    -1.5900000000000001, -1.585, -1.5800000000000001, -1.575, -1.5700000000000001, -1.5649999999999999,
    -1.5600000000000001, -1.5549999999999999, -1.55, -1.5449999999999999, -1.54, -1.5349999999999999,
    -1.53, -1.5249999999999999, -1.52, -1.5149999999999999, -1.51, -1.5049999999999999,
    -1.5, -1.4950000000000001, -1.49, -1.4850000000000001, -1.48, -1.4750000000000001,
    -1.47, -1.4650000000000001, -1.46, -1.4550000000000001, -1.45, -1.4450000000000001,
    -1.4399999999999999, -1.4350000000000001, -1.4299999999999999, -1.425, -1.4199999999999999, -1.415,
    -1.4099999999999999, -1.405, -1.3999999999999999, -1.395, -1.3899999999999999, -1.385,
    -1.3799999999999999, -1.375, -1.3700000000000001, -1.365, -1.3600000000000001, -1.355,
    -1.3500000000000001, -1.345, -1.3400000000000001, -1.335, -1.3300000000000001, -1.325,
    -1.3200000000000001, -1.3149999999999999, -1.3100000000000001, -1.3049999999999999, -1.3, -1.2949999999999999,
    -1.29, -1.2849999999999999, -1.28, -1.2749999999999999, -1.27, -1.2649999999999999,
    -1.26, -1.2549999999999999, -1.25, -1.2450000000000001, -1.24, -1.2350000000000001,
    -1.23, -1.2250000000000001, -1.22, -1.2150000000000001, -1.21, -1.2050000000000001,
    -1.2, -1.1950000000000001, -1.1899999999999999, -1.1850000000000001, -1.1799999999999999, -1.175,
    -1.1699999999999999, -1.165, -1.1599999999999999, -1.155, -1.1499999999999999, -1.145,
    -1.1399999999999999, -1.135, -1.1299999999999999, -1.125, -1.1200000000000001, -1.115,
    -1.1100000000000001, -1.105, -1.1000000000000001, -1.095, -1.0900000000000001, -1.085,
    -1.0800000000000001, -1.075, -1.0700000000000001, -1.0649999999999999, -1.0600000000000001, -1.0549999999999999,
    -1.05, -1.0449999999999999, -1.04, -1.0349999999999999, -1.03, -1.0249999999999999,
    -1.02, -1.0149999999999999, -1.01, -1.0049999999999999, -1, -0.995,
    -0.98999999999999999, -0.98499999999999999, -0.97999999999999998, -0.97499999999999998, -0.96999999999999997, -0.96499999999999997,
    -0.95999999999999996, -0.95499999999999996, -0.94999999999999996, -0.94499999999999995, -0.93999999999999995, -0.93500000000000005,
    -0.93000000000000005, -0.92500000000000004, -0.92000000000000004, -0.91500000000000004, -0.91000000000000003, -0.90500000000000003,
    -0.90000000000000002, -0.89500000000000002, -0.89000000000000001, -0.88500000000000001, -0.88, -0.875,
    -0.87, -0.86499999999999999, -0.85999999999999999, -0.85499999999999998, -0.84999999999999998, -0.84499999999999997,
    -0.83999999999999997, -0.83499999999999996, -0.82999999999999996, -0.82499999999999996, -0.81999999999999995, -0.81499999999999995,
    -0.81000000000000005, -0.80500000000000005, -0.80000000000000004, -0.79500000000000004, -0.79000000000000004, -0.78500000000000003,
    -0.78000000000000003, -0.77500000000000002, -0.77000000000000002, -0.76500000000000001, -0.76000000000000001, -0.755,
    -0.75, -0.745, -0.73999999999999999, -0.73499999999999999, -0.72999999999999998, -0.72499999999999998,
    -0.71999999999999997, -0.71499999999999997, -0.70999999999999996, -0.70499999999999996, -0.69999999999999996, -0.69499999999999995,
    -0.68999999999999995, -0.68500000000000005, -0.68000000000000005, -0.67500000000000004, -0.67000000000000004, -0.66500000000000004,
    -0.66000000000000003, -0.65500000000000003, -0.65000000000000002, -0.64500000000000002, -0.64000000000000001, -0.63500000000000001,
    -0.63, -0.625, -0.62, -0.61499999999999999, -0.60999999999999999, -0.60499999999999998,
    -0.59999999999999998, -0.59499999999999997, -0.58999999999999997, -0.58499999999999996, -0.57999999999999996, -0.57499999999999996,
    -0.56999999999999995, -0.56499999999999995, -0.56000000000000005, -0.55500000000000005, -0.55000000000000004, -0.54500000000000004,
    -0.54000000000000004, -0.53500000000000003, -0.53000000000000003, -0.52500000000000002, -0.52000000000000002, -0.51500000000000001,
    -0.51000000000000001, -0.505, -0.5, -0.495, -0.48999999999999999, -0.48499999999999999,
    -0.47999999999999998, -0.47499999999999998, -0.46999999999999997, -0.46500000000000002, -0.46000000000000002, -0.45500000000000002,
    -0.45000000000000001, -0.44500000000000001, -0.44, -0.435, -0.42999999999999999, -0.42499999999999999,
    -0.41999999999999998, -0.41499999999999998, -0.40999999999999998, -0.40500000000000003, -0.40000000000000002, -0.39500000000000002,
    -0.39000000000000001, -0.38500000000000001, -0.38, -0.375, -0.37, -0.36499999999999999,
    -0.35999999999999999, -0.35499999999999998, -0.34999999999999998, -0.34499999999999997, -0.34000000000000002, -0.33500000000000002,
    -0.33000000000000002, -0.32500000000000001, -0.32000000000000001, -0.315, -0.31, -0.30499999999999999,
    -0.29999999999999999, -0.29499999999999998, -0.28999999999999998, -0.28499999999999998, -0.28000000000000003, -0.27500000000000002,
    -0.27000000000000002, -0.26500000000000001, -0.26000000000000001, -0.255, -0.25, -0.245,
    -0.23999999999999999, -0.23499999999999999, -0.23000000000000001, -0.22500000000000001, -0.22, -0.215,
    -0.20999999999999999, -0.20499999999999999, -0.20000000000000001, -0.19500000000000001, -0.19, -0.185,
    -0.17999999999999999, -0.17499999999999999, -0.17000000000000001, -0.16500000000000001, -0.16, -0.155,
    -0.14999999999999999, -0.14499999999999999, -0.14000000000000001, -0.13500000000000001, -0.13, -0.125,
    -0.12, -0.115, -0.11, -0.105, -0.10000000000000001, -0.095000000000000001,
    -0.089999999999999997, -0.085000000000000006, -0.080000000000000002, -0.074999999999999997, -0.070000000000000007, -0.065000000000000002,
    -0.059999999999999998, -0.055, -0.050000000000000003, -0.044999999999999998, -0.040000000000000001, -0.035000000000000003,
    -0.029999999999999999, -0.025000000000000001, -0.02, -0.014999999999999999, -0.01, -0.0050000000000000001,
    0, 0.0050000000000000001, 0.01, 0.014999999999999999, 0.02, 0.025000000000000001,
    0.029999999999999999, 0.035000000000000003, 0.040000000000000001, 0.044999999999999998, 0.050000000000000003, 0.055,
    0.059999999999999998, 0.065000000000000002, 0.070000000000000007, 0.074999999999999997, 0.080000000000000002, 0.085000000000000006,
    0.089999999999999997, 0.095000000000000001, 0.10000000000000001, 0.105, 0.11, 0.115,
    0.12, 0.125, 0.13, 0.13500000000000001, 0.14000000000000001, 0.14499999999999999,
    0.14999999999999999, 0.155, 0.16, 0.16500000000000001, 0.17000000000000001, 0.17499999999999999,
    0.17999999999999999, 0.185, 0.19, 0.19500000000000001, 0.20000000000000001, 0.20499999999999999,
    0.20999999999999999, 0.215, 0.22, 0.22500000000000001, 0.23000000000000001, 0.23499999999999999,
    0.23999999999999999, 0.245, 0.25, 0.255, 0.26000000000000001, 0.26500000000000001,
    0.27000000000000002, 0.27500000000000002, 0.28000000000000003, 0.28499999999999998, 0.28999999999999998, 0.29499999999999998,
    0.29999999999999999, 0.30499999999999999, 0.31, 0.315, 0.32000000000000001, 0.32500000000000001,
    0.33000000000000002, 0.33500000000000002, 0.34000000000000002, 0.34499999999999997, 0.34999999999999998, 0.35499999999999998,
    0.35999999999999999, 0.36499999999999999, 0.37, 0.375, 0.38, 0.38500000000000001,
    0.39000000000000001, 0.39500000000000002, 0.40000000000000002, 0.40500000000000003, 0.40999999999999998, 0.41499999999999998,
    0.41999999999999998, 0.42499999999999999, 0.42999999999999999, 0.435, 0.44, 0.44500000000000001,
    0.45000000000000001, 0.45500000000000002, 0.46000000000000002, 0.46500000000000002, 0.46999999999999997, 0.47499999999999998,
    0.47999999999999998, 0.48499999999999999, 0.48999999999999999, 0.495, 0.5, 0.505,
    0.51000000000000001, 0.51500000000000001, 0.52000000000000002, 0.52500000000000002, 0.53000000000000003, 0.53500000000000003,
    0.54000000000000004, 0.54500000000000004, 0.55000000000000004, 0.55500000000000005, 0.56000000000000005, 0.56499999999999995,
    0.56999999999999995, 0.57499999999999996, 0.57999999999999996, 0.58499999999999996, 0.58999999999999997, 0.59499999999999997,
    0.59999999999999998, 0.60499999999999998, 0.60999999999999999, 0.61499999999999999, 0.62, 0.625,
    0.63, 0.63500000000000001, 0.64000000000000001, 0.64500000000000002, 0.65000000000000002, 0.65500000000000003,
    0.66000000000000003, 0.66500000000000004, 0.67000000000000004, 0.67500000000000004, 0.68000000000000005, 0.68500000000000005,
    0.68999999999999995, 0.69499999999999995, 0.69999999999999996, 0.70499999999999996, 0.70999999999999996, 0.71499999999999997,
    0.71999999999999997, 0.72499999999999998, 0.72999999999999998, 0.73499999999999999, 0.73999999999999999, 0.745,
    0.75, 0.755, 0.76000000000000001, 0.76500000000000001, 0.77000000000000002, 0.77500000000000002,
    0.78000000000000003, 0.78500000000000003, 0.79000000000000004, 0.79500000000000004, 0.80000000000000004, 0.80500000000000005,
    0.81000000000000005, 0.81499999999999995, 0.81999999999999995, 0.82499999999999996, 0.82999999999999996, 0.83499999999999996,
    0.83999999999999997, 0.84499999999999997, 0.84999999999999998, 0.85499999999999998, 0.85999999999999999, 0.86499999999999999,
    0.87, 0.875, 0.88, 0.88500000000000001, 0.89000000000000001, 0.89500000000000002,
    0.90000000000000002, 0.90500000000000003, 0.91000000000000003, 0.91500000000000004, 0.92000000000000004, 0.92500000000000004,
    0.93000000000000005, 0.93500000000000005, 0.93999999999999995, 0.94499999999999995, 0.94999999999999996, 0.95499999999999996,
    0.95999999999999996, 0.96499999999999997, 0.96999999999999997, 0.97499999999999998, 0.97999999999999998, 0.98499999999999999,
    0.98999999999999999, 0.995, 1, 1.0049999999999999, 1.01, 1.0149999999999999,
    1.02, 1.0249999999999999, 1.03, 1.0349999999999999, 1.04, 1.0449999999999999,
    1.05, 1.0549999999999999, 1.0600000000000001, 1.0649999999999999, 1.0700000000000001, 1.075,
    1.0800000000000001, 1.085, 1.0900000000000001, 1.095, 1.1000000000000001, 1.105,
    1.1100000000000001, 1.115, 1.1200000000000001, 1.125, 1.1299999999999999, 1.135,
    1.1399999999999999, 1.145, 1.1499999999999999, 1.155, 1.1599999999999999, 1.165,
    1.1699999999999999, 1.175, 1.1799999999999999, 1.1850000000000001, 1.1899999999999999, 1.1950000000000001,
    1.2, 1.2050000000000001, 1.21, 1.2150000000000001, 1.22, 1.2250000000000001,
    1.23, 1.2350000000000001, 1.24, 1.2450000000000001, 1.25, 1.2549999999999999,
    1.26, 1.2649999999999999, 1.27, 1.2749999999999999, 1.28, 1.2849999999999999,
    1.29, 1.2949999999999999, 1.3, 1.3049999999999999, 1.3100000000000001, 1.3149999999999999,
    1.3200000000000001, 1.325, 1.3300000000000001, 1.335, 1.3400000000000001, 1.345,
    1.3500000000000001, 1.355, 1.3600000000000001, 1.365, 1.3700000000000001, 1.375,
    1.3799999999999999, 1.385, 1.3899999999999999, 1.395, 1.3999999999999999, 1.405,
    1.4099999999999999, 1.415, 1.4199999999999999, 1.425, 1.4299999999999999, 1.4350000000000001,
    1.4399999999999999, 1.4450000000000001, 1.45, 1.4550000000000001, 1.46, 1.4650000000000001,
    1.47, 1.4750000000000001, 1.48, 1.4850000000000001, 1.49, 1.4950000000000001,
    1.5, 1.5049999999999999, 1.51, 1.5149999999999999, 1.52, 1.5249999999999999,
    1.53, 1.5349999999999999, 1.54, 1.5449999999999999, 1.55, 1.5549999999999999,
    1.5600000000000001, 1.5649999999999999, 1.5700000000000001, 1.575, 1.5800000000000001, 1.585,
    1.5900000000000001, 1.595, 1.6000000000000001, 1.605, 1.6100000000000001, 1.615,
    1.6200000000000001, 1.625, 1.6299999999999999, 1.635, 1.6399999999999999, 1.645,
    1.6499999999999999, 1.655, 1.6599999999999999, 1.665, 1.6699999999999999, 1.675,
    1.6799999999999999, 1.6850000000000001, 1.6899999999999999, 1.6950000000000001, 1.7, 1.7050000000000001,
    1.71, 1.7150000000000001, 1.72, 1.7250000000000001, 1.73, 1.7350000000000001,
    1.74, 1.7450000000000001, 1.75, 1.7549999999999999, 1.76, 1.7649999999999999,
    1.77, 1.7749999999999999, 1.78, 1.7849999999999999, 1.79, 1.7949999999999999,
    1.8, 1.8049999999999999, 1.8100000000000001, 1.8149999999999999, 1.8200000000000001, 1.825,
    1.8300000000000001, 1.835, 1.8400000000000001, 1.845, 1.8500000000000001, 1.855,
    1.8600000000000001, 1.865, 1.8700000000000001, 1.875, 1.8799999999999999, 1.885,
    1.8899999999999999, 1.895, 1.8999999999999999, 1.905, 1.9099999999999999, 1.915,
    1.9199999999999999, 1.925, 1.9299999999999999, 1.9350000000000001, 1.9399999999999999, 1.9450000000000001,
    1.95, 1.9550000000000001, 1.96, 1.9650000000000001, 1.97, 1.9750000000000001,
    1.98, 1.9850000000000001, 1.99, 1.9950000000000001, 2, 2.0099999999999998,
    2.02, 2.0299999999999998, 2.04, 2.0499999999999998, 2.0600000000000001, 2.0699999999999998,
    2.0800000000000001, 2.0899999999999999, 2.1000000000000001, 2.1099999999999999, 2.1200000000000001, 2.1299999999999999,
    2.1400000000000001, 2.1499999999999999, 2.1600000000000001, 2.1699999999999999, 2.1800000000000002, 2.1899999999999999,
    2.2000000000000002, 2.21, 2.2200000000000002, 2.23, 2.2400000000000002, 2.25,
    2.2599999999999998, 2.27, 2.2799999999999998, 2.29, 2.2999999999999998, 2.3100000000000001,
    2.3199999999999998, 2.3300000000000001, 2.3399999999999999, 2.3500000000000001, 2.3599999999999999, 2.3700000000000001,
    2.3799999999999999, 2.3900000000000001, 2.3999999999999999, 2.4100000000000001, 2.4199999999999999, 2.4300000000000002,
    2.4399999999999999, 2.4500000000000002, 2.46, 2.4700000000000002, 2.48, 2.4900000000000002,
    2.5, 2.5099999999999998, 2.52, 2.5299999999999998, 2.54, 2.5499999999999998,
    2.5600000000000001, 2.5699999999999998, 2.5800000000000001, 2.5899999999999999, 2.6000000000000001, 2.6099999999999999,
    2.6200000000000001, 2.6299999999999999, 2.6400000000000001, 2.6499999999999999, 2.6600000000000001, 2.6699999999999999,
    2.6800000000000002, 2.6899999999999999, 2.7000000000000002, 2.71, 2.7200000000000002, 2.73,
    2.7400000000000002, 2.75, 2.7599999999999998, 2.77, 2.7799999999999998, 2.79,
    2.7999999999999998, 2.8100000000000001, 2.8199999999999998, 2.8300000000000001, 2.8399999999999999, 2.8500000000000001,
    2.8599999999999999, 2.8700000000000001, 2.8799999999999999, 2.8900000000000001, 2.8999999999999999, 2.9100000000000001,
    2.9199999999999999, 2.9300000000000002, 2.9399999999999999, 2.9500000000000002, 2.96, 2.9700000000000002,
    2.98, 2.9900000000000002, 3, 3.02, 3.04, 3.0600000000000001,
    3.0800000000000001, 3.1000000000000001, 3.1200000000000001, 3.1400000000000001, 3.1600000000000001, 3.1800000000000002,
    3.2000000000000002, 3.2200000000000002, 3.2400000000000002, 3.2599999999999998, 3.2799999999999998, 3.2999999999999998,
    3.3199999999999998, 3.3399999999999999, 3.3599999999999999, 3.3799999999999999, 3.3999999999999999, 3.4199999999999999,
    3.4399999999999999, 3.46, 3.48, 3.5, 3.52, 3.54,
    3.5600000000000001, 3.5800000000000001, 3.6000000000000001, 3.6200000000000001, 3.6400000000000001, 3.6600000000000001,
    3.6800000000000002, 3.7000000000000002, 3.7200000000000002, 3.7400000000000002, 3.7599999999999998, 3.7799999999999998,
    3.7999999999999998, 3.8199999999999998, 3.8399999999999999, 3.8599999999999999, 3.8799999999999999, 3.8999999999999999,
    3.9199999999999999, 3.9399999999999999, 3.96, 3.98, 4, 4.0999999999999996,
    4.2000000000000002, 4.2999999999999998, 4.4000000000000004, 4.5, 4.5999999999999996, 4.7000000000000002,
    4.7999999999999998, 4.9000000000000004, 5, 5.0999999999999996, 5.2000000000000002, 5.2999999999999998,
    5.4000000000000004, 5.5, 5.5999999999999996, 5.7000000000000002, 5.7999999999999998, 5.9000000000000004,
    6, 6.0999999999999996, 6.2000000000000002, 6.2999999999999998, 6.4000000000000004, 6.5,
    6.5999999999999996, 6.7000000000000002, 6.7999999999999998, 6.9000000000000004, 7, 7.0999999999999996,
    7.2000000000000002, 7.2999999999999998, 7.4000000000000004, 7.5, 7.5999999999999996, 7.7000000000000002,
    7.7999999999999998, 7.9000000000000004, 8, 8.0999999999999996, 8.1999999999999993, 8.3000000000000007,
    8.4000000000000004, 8.5, 8.5999999999999996, 8.6999999999999993, 8.8000000000000007, 8.9000000000000004,
    9, 9.0999999999999996, 9.1999999999999993, 9.3000000000000007, 9.4000000000000004, 9.5,
};

const double kTw1Cdf[] = {
    3.1545714948316494e-22, 8.7921498078739607e-21, 2.0961021771387008e-19, 4.2915834690847991e-18,
    7.5761846131417021e-17, 1.1577510230135034e-15, 1.5374342346261542e-14, 1.7810341752569057e-13,
    1.8068269356258033e-12, 1.6113944919919174e-11, 1.2682334608471238e-10, 8.8425647468426983e-10,
    5.4828625251128669e-09, 3.0349634975343867e-08, 1.5055043106943466e-07, 6.7182582889465574e-07,
    2.7073193243752908e-06, 3.5353069245318668e-06, 4.5985695846732058e-06, 5.9585373371290955e-06,
    7.6911466754455859e-06, 9.8898637202496609e-06, 1.2669239910161531e-05, 1.616907233074513e-05,
    2.0559246092885196e-05, 2.6045340947238103e-05, 3.2875088338128702e-05, 4.134576810031407e-05,
    5.1812635699885132e-05, 6.4698471016256932e-05, 8.0504337835306253e-05, 9.9821639156524194e-05,
    0.00012334554678508983, 0.00015188987418071338, 0.00018640344888337334, 0.00022798802478917013,
    0.00027791775491351308, 0.00028903061332237169, 0.00030054802312769923, 0.0003124830695027419,
    0.00032484919793533896, 0.00033766022192171727, 0.00035093033075222395, 0.00036467409738626566,
    0.0003789064864159387, 0.00039364286211645942, 0.0004088989965818401, 0.00042469107794424903,
    0.00044103571867543426, 0.00045794996396747396, 0.00047545130019220497, 0.00049355766343594717,
    0.00051228744810789784, 0.00053165951562010496, 0.00055169320313606734, 0.0005724083323856631,
    0.0005938252185438695, 0.00061596467916999204, 0.00063884804320562421, 0.00066249716002673043,
    0.00068693440854856059, 0.00071218270637813503, 0.00073826551901310863, 0.00076520686908209876,
    0.00079303134562279701, 0.00082176411339536038, 0.00085143092222635054, 0.00088205811637923483,
    0.00091367264394776385, 0.00094630206626819004, 0.00097997456734527492, 0.0010147189632886675,
    0.0010505647117541978, 0.0010875419213861863, 0.0011256813612552277, 0.001165014470287509,
    0.0012055733666797518, 0.001247390857295318, 0.0012905004470357053, 0.0013349363481824882,
    0.0013807334897044414, 0.0014279275265232506, 0.001476554848733411, 0.0015266525907698205,
    0.0015782586405172479, 0.0016314116483555764, 0.0016861510361353051, 0.0017425170060761858,
    0.0018005505495834965, 0.0018602934559754695, 0.001921788321114355, 0.0019850785559363871,
    0.0020502083948724052, 0.0021172229041526297, 0.002186167989990077, 0.002257090406633422,
    0.0023300377642846669, 0.0024050585368728086, 0.0024822020696773891, 0.0025615185867939104,
    0.0026430591984352102, 0.0027268759080595322, 0.0028130216193196665, 0.0029015501428251342,
    0.0029925162027092415, 0.0030859754429948451, 0.0031819844337499111, 0.0032806006770268255,
    0.0033818826125756618, 0.003485889623326667, 0.0035926820406313614, 0.0037023211492566615,
    0.0038148691921238123, 0.0039303893747837096, 0.0040489458696223906, 0.0041706038197869,
    0.0042954293428267417, 0.0044234895340407318, 0.0045548524695225396, 0.0046895872088981664,
    0.0048277637977465733, 0.0049694532696963811, 0.0051147276481919475, 0.0052636599479197101,
    0.005416324175889697, 0.0055727953321630646, 0.0057331494102189256, 0.0058974633969544445,
    0.0060658152723091843, 0.0062382840085090426, 0.006414949568920727, 0.0065958929065112262,
    0.0067811959619063153, 0.0069709416610394329, 0.0071652139123864478, 0.0073640976037797814,
    0.0075676785987939333, 0.0076712576833437383, 0.0077760437326995988, 0.0078820477523621028,
    0.0079892808079775387, 0.0080977540251736847, 0.0082074785893877927, 0.0083184657456885514,
    0.0084307267985893174, 0.0085442731118551725, 0.0086591161083028941, 0.0087752672695928895,
    0.0088927381360142648, 0.0090115403062626838, 0.0091316854372103795, 0.0092531852436690768,
    0.0093760514981456114, 0.0095002960305890227, 0.0096259307281319935, 0.0097529675348226753,
    0.0098814184513502604, 0.010011295534762469, 0.010142610898175794, 0.010275376710476736,
    0.010409605196017377, 0.010545308634301604, 0.010682499359663677, 0.010821189760940332,
    0.010961392281133294, 0.011103119417064856, 0.011246383719026382, 0.011391197790416875,
    0.011537574287375254, 0.011685525918404438, 0.011835065443986952, 0.011986205676193193,
    0.012138959478281027, 0.012293339764287996, 0.012449359498615047, 0.012607031695602683,
    0.012766369419098512, 0.012927385782017173, 0.013090093945892022, 0.013254507120418828,
    0.013420638562990835, 0.01358850157822682, 0.013758109517489972, 0.013929475778398993,
    0.014102613804331681, 0.014277537083919057, 0.014454259150532736, 0.014632793581763573,
    0.014813153998891734, 0.014995354066349796, 0.015179407491176185, 0.015365328022461863,
    0.01555312945078826, 0.015742825607657177, 0.015934430364912024, 0.016127957634152271,
    0.016323421366138475, 0.016520835550190002, 0.016720214213574173, 0.016921571420887987,
    0.017124921273430765, 0.017330277908570002, 0.017537655499098231, 0.017747068252582165,
    0.017958530410704145, 0.018172056248595313, 0.018387660074160282, 0.018605356227395776,
    0.018825159079698804, 0.019047083033168686, 0.019271142519901044, 0.019497352001273099,
    0.019725725967222163, 0.019956278935515825, 0.020189025451014302, 0.020423980084925419,
    0.020661157434051784, 0.020900572120030075, 0.021142238788563417, 0.021386172108644765,
    0.021632386771774884, 0.021880897491170153, 0.022131719000966017, 0.022384866055409729,
    0.022640353428048793, 0.022898195910909448, 0.023158408313669793, 0.023421005462824839,
    0.023686002200843975, 0.023953413385322215, 0.024223253888124061, 0.02449553859451933,
    0.024770282402313892, 0.025047500220971464, 0.02532720697072998, 0.025609417581710456,
    0.025894146993019233, 0.026181410151843405, 0.026471222012539843, 0.026763597535717536,
    0.027058551687312801, 0.02735609943765932, 0.027656255760550683, 0.027959035632296618,
    0.028264454030774117, 0.028572525934470242, 0.028883266321521509, 0.029196690168744519,
    0.029512812450662666, 0.029831648138525957, 0.030153212199324625, 0.030477519594798372,
    0.030804585280438335, 0.031134424204484448, 0.03146705130691687, 0.031802481518442303,
    0.032140729759474615, 0.032481810939109339, 0.032825739954096114, 0.033172531687801085,
    0.033522201009168882, 0.033874762771676781, 0.034230231812285544, 0.034588622950383556,
    0.034949950986730149, 0.035314230702388608, 0.035681476857660294, 0.036051704191010531,
    0.03642492741799238, 0.036801161230164386, 0.037180420294006415, 0.037562719249828819,
    0.037948072710680458, 0.038336495261250124, 0.038728001456766276, 0.039122605821892947,
    0.039520322849620405, 0.039921167000154516, 0.040325152699801622, 0.040732294339850109,
    0.041142606275449946, 0.041556102824487337, 0.041972798266458812, 0.042392706841340042,
    0.042815842748454215, 0.043242220145336248, 0.043671853146594761, 0.044104755822773359,
    0.044540942199207102, 0.044980426254877963, 0.045423221921269338, 0.045869343081216783,
    0.046318803567758166, 0.046771617162981977, 0.047227797596873816, 0.047687358546161053,
    0.04815031363315718, 0.048616676424604099, 0.049086460430513637, 0.049559679103008229,
    0.050036345835160312, 0.050516473959831186, 0.051000076748509753, 0.05148716741014904,
    0.051977759090005814, 0.052471864868475195, 0.052969497759929811, 0.053470670711555535,
    0.053975396602188738, 0.054483688241154092, 0.054995558367102466, 0.05551101964684773,
    0.056030084674207635, 0.056552765968841727, 0.057079075975092625, 0.057609027060827406,
    0.058142631516278978, 0.058679901552891871, 0.059220849302165875, 0.059765486814502708,
    0.060313826058055652, 0.060865878917577436, 0.061421657193274033, 0.061981172599657436,
    0.062544436764402245, 0.063111461227203375, 0.063682257438638049, 0.064256836759026853,
    0.064835210457301604, 0.065417389709872958, 0.066003385599502376, 0.066593209114176294,
    0.067186871145984053, 0.067784382489998921, 0.068385753843162631, 0.068990995803173402,
    0.069600118867376881, 0.070213133431662966, 0.070830049789363789, 0.071450878130158782,
    0.072075628538980002, 0.072704310994926427, 0.073336935370179282, 0.073973511428922792,
    0.074614048826270624, 0.075258557107195811, 0.075907045705465803, 0.076559523942584903,
    0.077216001026736911, 0.077876486051739663, 0.078540987995998096, 0.079209515721469503,
    0.079882077972629167, 0.080558683375444307, 0.081239340436354682, 0.081924057541257297,
    0.082612842954498375, 0.083305704817872334, 0.084002651149624838, 0.084703689843465324,
    0.085408828667583828, 0.086118075263677027, 0.086831437145978144, 0.087548921700296808,
    0.088270536183064296, 0.088996287720385994, 0.089726183307103288, 0.09046022980586059,
    0.091198433946180379, 0.091940802323547552, 0.092687341398500461, 0.093438057495729393,
    0.09419295680318375, 0.094952045371188995, 0.095715329111567493, 0.096482813796774453,
    0.097254505059034657, 0.098030408389494589, 0.098810529137378936, 0.099594872509157689,
    0.10038344356772362, 0.10117624723157341, 0.10197328827400594, 0.10277457132232384,
    0.10358010085704372, 0.10438988121112266, 0.10520391656918697, 0.10602221096677428,
    0.10684476828958576, 0.10767159227274493, 0.10850268650007039, 0.10933805440335657,
    0.11017769926166421, 0.11102162420062237, 0.11186983219173942, 0.1127223260517268,
    0.1135791084418297, 0.11444018186717168, 0.11530554867610841, 0.11617521105959169,
    0.11704917105054544, 0.11792743052325362, 0.11880999119275562, 0.11969685461425561,
    0.1205880221825429, 0.12148349513142331, 0.1223832745331604, 0.12328736129793069,
    0.12419575617328771, 0.12510845974364077, 0.12602547242974088, 0.12694679448818361,
    0.12787242601092011, 0.12880236692478098, 0.12973661699101061, 0.1306751758048193,
    0.13161804279493824, 0.13256521722319442, 0.13351669818409251, 0.13447248460441438,
    0.13543257524282495, 0.13639696868949391, 0.13736566336572936, 0.13833865752362343,
    0.13931594924571097, 0.14029753644464033, 0.14128341686285545, 0.14227358807229437,
    0.14326804747409635, 0.14426679229832318, 0.14526981960369578, 0.1462771262773383,
    0.14728870903454136, 0.14830456441853107, 0.14932468880025951, 0.15034907837819997,
    0.15137772917816053, 0.15241063705310928, 0.15344779768301053, 0.15448920657467891,
    0.15553485906164036, 0.15658475030401267, 0.15763887528839304, 0.15869722882776435,
    0.15975980556141239, 0.16082659995485368, 0.16189760629978206, 0.16297281871402389,
    0.16405223114150813, 0.16513583735225121, 0.16622363094235357, 0.16731560533400888,
    0.16841175377552911, 0.16951206934137994, 0.17061654493223252, 0.17172517327502773,
    0.17283794692304996, 0.17395485825602247, 0.17507589948020694, 0.17620106262852397,
    0.17733033956068187, 0.178463721963321, 0.17960120135017119, 0.18074276906222303,
    0.18188841626791274, 0.183038133963317, 0.18419191297236645, 0.18534974394706816,
    0.18651161736774366, 0.18767752354327907, 0.18884745261139152, 0.19002139453890249,
    0.19119933912203008, 0.19238127598669413, 0.19356719458883065, 0.19475708421472324,
    0.19595093398134561, 0.19714873283671713, 0.1983504695602735, 0.19955613276324824,
    0.20076571088906792, 0.20197919221375968, 0.20319656484637433, 0.20441781672941825,
    0.20564293563930205, 0.2068719091867979, 0.20810472481751524, 0.20934136981238227,
    0.21058183128814725, 0.21182609619788648, 0.21307415133152832, 0.21432598331638827,
    0.21558157861771801, 0.21684092353926437, 0.21810400422384282, 0.21937080665392367,
    0.2206413166522278, 0.2219155198823364, 0.22319340184931508, 0.22447494790034325,
    0.22576014322536445, 0.22704897285774139, 0.22834142167492652, 0.22963747439914323,
    0.23093711559807864, 0.23224032968558969, 0.23354710092242076, 0.23485741341692654,
    0.23617125112581722, 0.23748859785490717, 0.2388094372598768, 0.24013375284704669,
    0.2414615279741632, 0.2427927458511914, 0.24412738954112481, 0.24546544196080242,
    0.24680688588173574, 0.24815170393094982, 0.24949987859183195, 0.25085139220499347,
    0.2522062269691413, 0.25356436494195717, 0.2549257880409907, 0.25629047804456256,
    0.2576584165926758, 0.25902958518793795, 0.26040396519649378, 0.26178153784896607,
    0.26316228424141097, 0.26454618533627555, 0.26593322196337232, 0.2673233748208565,
    0.26871662447622058, 0.27011295136728913, 0.27151233580323081, 0.27291475796557524,
    0.27432019790923706, 0.2757286355635562, 0.27714005073333658, 0.27855442309990608,
    0.27997173222217075, 0.28139195753768903, 0.28281507836375142, 0.28424107389846232,
    0.28566992322183876, 0.28710160529691442, 0.28853609897084359, 0.28997338297602837,
    0.29141343593123886, 0.29285623634274877, 0.29430176260547758, 0.29574999300413918,
    0.297200905714397, 0.29865447880402629, 0.30011069023408604, 0.30156951786009634,
    0.30303093943322063, 0.30449493260145483, 0.30596147491082931, 0.30743054380660878,
    0.30890211663450168, 0.31037617064187711, 0.31185268297898683, 0.31333163070019693,
    0.31481299076521274, 0.31629674004032904, 0.31778285529966788, 0.3192713132264326,
    0.32076209041416365, 0.32225516336799759, 0.32375050850593662, 0.32524810216011868,
    0.32674792057809465, 0.32824993992410678, 0.32975413628037759, 0.33126048564839955,
    0.33276896395022709, 0.3342795470297783, 0.33579221065413634, 0.33730693051485761,
    0.33882368222928239, 0.34034244134184927, 0.34186318332541188, 0.34338588358256356,
    0.34491051744696127, 0.34643706018465309, 0.34796548699541197, 0.34949577301406876,
    0.35102789331185019, 0.35256182289771831, 0.35409753671971655, 0.35563500966631068,
    0.35717421656774068, 0.35871513219736734, 0.36025773127302885, 0.36180198845839034,
    0.36334787836430371, 0.36489537555016327, 0.36644445452526919, 0.36799508975018336,
    0.3695472556380931, 0.37110092655618077, 0.37265607682698049, 0.37421268072975045,
    0.37577071250183652, 0.37733014634004142, 0.37889095640199377, 0.38045311680751259,
    0.38201660163998585, 0.38358138494772753, 0.38514744074536056, 0.38671474301517683,
    0.38828326570851274, 0.38985298274711655, 0.39142386802451667, 0.39299589540739571,
    0.39456903873695126, 0.39614327183027148, 0.39771856848169479, 0.39929490246418509,
    0.40087224753068545, 0.40245057741549256, 0.40402986583561329, 0.40561008649212787,
    0.40719121307155143, 0.40877321924718907, 0.41035607868049429, 0.41193976502242519,
    0.41352425191479569, 0.41510951299162713, 0.41669552188049469, 0.41828225220387771,
    0.41986967758050225, 0.42145777162668041, 0.42304650795765453, 0.42463586018892735,
    0.42622580193760107, 0.42781630682370414, 0.42940734847151968, 0.43099890051091316,
    0.43259093657864905, 0.43418343031971146, 0.43577635538861809, 0.43736968545073024,
    0.4389633941835614, 0.44055745527808166, 0.44215184244001488, 0.44374652939113524,
    0.44534148987056033, 0.44693669763603683, 0.44853212646522661, 0.45012775015698214,
    0.45172354253262331, 0.45331947743720813, 0.45491552874079572, 0.45651167033970819,
    0.45810787615778642, 0.45970412014764223, 0.46130037629190412, 0.46289661860445391,
    0.46449282113166823, 0.46608895795364702, 0.46768500318543638, 0.4692809309782513,
    0.47087671552068872, 0.47247233103993347, 0.47406775180296651, 0.47566295211775617,
    0.47725790633445431, 0.47885258884657755, 0.48044697409218762, 0.4820410365550673,
    0.48363475076588414, 0.48522809130334993, 0.48682103279538108, 0.48841354992023822,
    0.49000561740767606, 0.49159721004007112, 0.49318830265355451, 0.49477887013913296,
    0.49636888744379865, 0.49795832957164793, 0.49954717158496681, 0.50113538860534257,
    0.50272295581473481, 0.5043098484565669, 0.50589604183679115, 0.50748151132495867,
    0.50906623235527571, 0.51065018042765309, 0.51223333110875391, 0.51381566003302548,
    0.51539714290372685, 0.51697775549395553, 0.51855747364765159, 0.52013627328060941,
    0.52171413038147507, 0.52329102101273151, 0.524866921311686, 0.5264418074914391,
    0.52801565584185406, 0.52958844273051109, 0.53116014460366212, 0.53273073798716808,
    0.53430019948743346, 0.53586850579233292, 0.53743563367212643, 0.53900155998036936,
    0.54056626165481114, 0.54212971571829083, 0.54369189927961459, 0.5452527895344349,
    0.54681236376611819, 0.54837059934659815, 0.54992747373722972, 0.55148296448962497,
    0.55303704924649144, 0.5545897057424487, 0.55614091180484893, 0.55769064535457702,
    0.55923888440685321, 0.56078560707201797, 0.5623307915563126, 0.56387441616265011,
    0.56541645929137396, 0.56695689944101557, 0.56849571520903552, 0.57003288529255791,
    0.57156838848909608, 0.57310220369726972, 0.57463430991751829, 0.57616468625278927,
    0.57769331190923245, 0.57922016619688632, 0.58074522853034105, 0.58226847842940366,
    0.58378989551975335, 0.58530945953358615, 0.58682715031024202, 0.58834294779684215,
    0.58985683204889583, 0.59136878323091324, 0.59287878161700325, 0.59438680759145868,
    0.59589284164933931, 0.59739686439704431, 0.59889885655286401, 0.60039879894754855,
    0.60189667252483259, 0.60339245834198207, 0.60488613757031118, 0.6063776914957012,
    0.60786710151910628, 0.60935434915704789, 0.61083941604210301, 0.61232228392338384,
    0.61380293466700508, 0.6152813502565464, 0.61675751279349544, 0.61823140449770164,
    0.61970300770779518, 0.62117230488162067, 0.62263927859664414, 0.62410391155035849,
    0.6255661865606823, 0.62702608656634262, 0.62848359462725445, 0.62993869392488755,
    0.63139136776262428, 0.63284159956611319, 0.63428937288360365, 0.63573467138628381,
    0.63717747886860043, 0.63861777924856955, 0.64005555656808899, 0.64149079499322215,
    0.64292347881450007, 0.64435359244718204, 0.64578112043153857, 0.64720604743310173,
    0.64862835824292142, 0.65004803777780895, 0.65146507108055984, 0.65287944332019343,
    0.65429113979215603, 0.65570014591853365, 0.65710644724825051, 0.6585100294572569,
    0.65991087834870898, 0.66130897985314319, 0.66270432002864166, 0.66409688506098008,
    0.66548666126378142, 0.66687363507865094, 0.66825779307530675, 0.66963912195169895,
    0.67101760853412162, 0.67239323977732268, 0.67376600276459453, 0.67513588470786012,
    0.67650287294775857, 0.67786695495371141, 0.67922811832398755, 0.68058635078575536,
    0.68194164019513359, 0.68329397453722651, 0.68464334192615528, 0.68598973060507928,
    0.68733312894621212, 0.68867352545083094, 0.69001090874926652, 0.69134526760090409,
    0.69267659089415967, 0.69400486764645875, 0.69533008700420074, 0.69665223824272249,
    0.69797131076624919, 0.69928729410783674, 0.70060017792931228, 0.7019099520212021,
    0.70321660630265526, 0.70452013082135689, 0.70582051575343452, 0.70711775140336419,
    0.70841182820385451, 0.70970273671574124, 0.71099046762785822, 0.71227501175691577,
    0.71355636004735812, 0.71483450357122869, 0.71610943352801171, 0.7173811412444846,
    0.71864961817454764, 0.71991485589905735, 0.72117684612564836, 0.72243558068855029,
    0.72369105154839908, 0.72494325079203659, 0.72619217063231067, 0.72743780340786202,
    0.72868014158290995, 0.72991917774703008, 0.73115490461492438, 0.73238731502618348,
    0.73361640194505306, 0.73484215846017253, 0.73606457778433643, 0.73728365325422029,
    0.73849937833012858, 0.73971174659570726, 0.74092075175768113, 0.74212638764556105,
    0.74332864821135525, 0.74452752752927565, 0.74572301979543965, 0.74691511932755528,
    0.74810382056462021, 0.74928911806659249, 0.75047100651407961, 0.75164948070799753,
    0.75282453556924611, 0.75399616613836784, 0.75516436757519956, 0.75632913515852751,
    0.75749046428572864, 0.75864835047241574, 0.7598027893520698, 0.76095377667566799,
    0.76210130831131406, 0.76324538024385602, 0.76438598857450113, 0.765523129520429,
    0.76665679941439546, 0.76778699470434109, 0.76891371195297731, 0.77003694783738796,
    0.77115669914861451, 0.77227296279124169, 0.77338573578297332, 0.7744950152542126,
    0.7756007984476293, 0.7767030827177287, 0.77780186553041386, 0.7788971444625471,
    0.77998891720149544, 0.78107718154469774, 0.78216193539919621, 0.7832431767811906,
    0.78432090381556985, 0.78539511473545265, 0.78646580788172227, 0.7875329817025446,
    0.78859663475290731, 0.78965676569412757, 0.79071337329338509, 0.79176645642322285,
    0.7928160140610685, 0.79386204528873872, 0.79490454929194232, 0.79594352535979129,
    0.79697897288428543, 0.79801089135982717, 0.79903928038269423, 0.80006413965054424,
    0.80108546896189725, 0.80210326821562139, 0.80311753741041114, 0.80412827664427067,
    0.805135486113988, 0.80613916611461256, 0.8071393170389195, 0.80813593937688522,
    0.80912903371514855, 0.81011860073648367, 0.8111046412192513, 0.81208715603686454,
    0.81306614615724471, 0.81404161264227748, 0.81501355664726483, 0.81598197942037765,
    0.81694688230210333, 0.81790826672469519, 0.81886613421161414, 0.81982048637697835,
    0.82077132492499816, 0.82171865164941993, 0.82266246843296664, 0.82360277724676589,
    0.82453958014979867, 0.82547287928831947, 0.82640267689529734, 0.82732897528984384,
    0.82825177687664053, 0.82917108414537255, 0.83008689967014859, 0.83099922610893195,
    0.83190806620296498, 0.83281342277618509, 0.83371529873465711, 0.83461369706598798,
    0.83550862083875066, 0.83640007320189813, 0.8372880573841891, 0.83817257669360168,
    0.83905363451674719, 0.83993123431829275, 0.84080537964037383, 0.84167607410200684,
    0.84254332139850618, 0.84340712530089701, 0.8442674896553255, 0.84512441838247765,
    0.84597791547698775, 0.84682798500684708, 0.84767463111282026, 0.84851785800785617,
    0.84935766997649398, 0.85019407137428027, 0.85102706662717587, 0.85185666023096651,
    0.85268285675067224, 0.85350566081996371, 0.85432507714056083, 0.85514111048165542,
    0.85595376567931436, 0.8567630476358935, 0.85756896131944393, 0.85837151176312865,
    0.85917070406462837, 0.85996654338555978, 0.86075903495087669, 0.86154818404829425,
    0.86233399602769023, 0.86311647630053023, 0.86389563033926686, 0.86467146367676595,
    0.86544398190571459, 0.86621319067803482, 0.86697909570430509, 0.86774170275317541,
    0.86850101765077681, 0.86925704628014833, 0.8700097945806522, 0.87075926854738961,
    0.87150547423062774, 0.87224841773521566, 0.87298810522000447, 0.87372454289727564,
    0.87445773703216323, 0.87518769394207474, 0.87591441999612007, 0.87663792161454002,
    0.87735820526812958, 0.87807527747766834, 0.87878914481335701, 0.87949981389423681,
    0.88020729138763076, 0.88091158400857894, 0.88161269851926383, 0.88231064172845741,
    0.88300542049094899, 0.88369704170699526, 0.88438551232175044, 0.88507083932471342,
    0.88575302974916992, 0.88643209067163709, 0.8871080292113106, 0.88778085252950933,
    0.88845056782913112, 0.88911718235409287, 0.88978070338879378, 0.89044113825756488,
    0.89109849432412247, 0.89175277899102978, 0.89240399969915229, 0.8930521639271225,
    0.89369727919079611, 0.89433935304272194, 0.89497839307160776, 0.89561440690178395,
    0.89624740219267829, 0.89687738663828043, 0.8975043679666258, 0.89812835393925838,
    0.89874935235071729, 0.89936737102801101, 0.89998241783010502, 0.90059450064739299,
    0.90120362740119164, 0.90180980604322636, 0.90241304455511662, 0.90301335094787005,
    0.90361073326137265, 0.90420519956389067, 0.9047967579515559, 0.90538541654787952,
    0.90597118350324235, 0.906554066994404, 0.90713407522400835, 0.90771121642008901,
    0.90828549883558218, 0.90885693074783946, 0.90942552045813918, 0.90999127629120746,
    0.91055420659473441, 0.91111431973889823, 0.91167162411588509, 0.91222612813941895,
    0.91277784024428688, 0.9133267688858735, 0.9138729225396921, 0.91441630970091681,
    0.91495693888392482, 0.91549481862183468, 0.91602995746604987, 0.91656236398580349,
    0.91709204676770162, 0.91761901441527505, 0.91814327554854136, 0.91866483880353966,
    0.91918371283190636, 0.91969990630042331, 0.92021342789058425, 0.92072428629815695,
    0.92123249023275278, 0.92173804841739271, 0.9222409695880831, 0.92274126249338806,
    0.9232389358940043, 0.92373399856234295, 0.92422645928211189, 0.92471632684789951,
    0.92520361006475826, 0.9256883177478018, 0.92617045872179371, 0.92665004182073196,
    0.9271270758874669, 0.92760156977328112, 0.92807353233750511, 0.92854297244711115,
    0.9290098989763349, 0.9294743208062719, 0.92993624682449683, 0.93039568592467836,
    0.93085264700619741, 0.93130713897376427, 0.93175917073704684, 0.93220875121029134,
    0.93265588931195276, 0.93310059396432943, 0.93354287409318981, 0.93398273862741243,
    0.93442019649862429, 0.93485525664084301, 0.93528792799011895, 0.93571821948418354,
    0.93614614006209917, 0.93657169866390511, 0.93699490423028087, 0.93741576570220042,
    0.93783429202058533, 0.93825049212597711, 0.93866437495819821, 0.93907594945601425,
    0.93948522455681471, 0.93989220919627603, 0.94029691230804369, 0.94069934282340872,
    0.94109950967098555, 0.94149742177640039, 0.94189308806197014, 0.94228651744640002,
    0.94267771884446638, 0.94306670116671887, 0.94345347331916463, 0.94383804420298545,
    0.94422042271421669, 0.94460061774347204, 0.94497863817564176, 0.9453544928895985,
    0.94572819075791403, 0.94609974064657498, 0.94646915141469412, 0.9468364319142395,
    0.94720159098974532, 0.9475646374780462, 0.94792558020799822, 0.94828442800021728,
    0.94864118966679811, 0.94899587401106444, 0.94934848982729414, 0.94969904590046728,
    0.95004755100600591, 0.95039401390952094, 0.95073844336655833, 0.95108084812234628,
    0.95142123691155678, 0.95175961845804857, 0.95209600147463969, 0.95243039466285317,
    0.9527628067126892, 0.95309324630239045, 0.9534217220982022, 0.95374824275414805,
    0.95407281691180423, 0.9543954532000708, 0.9547161602349461, 0.95503494661932042,
    0.95535182094273985, 0.95566679178120306, 0.9559798676969492, 0.95629105723823904,
    0.95660036893915257, 0.95690781131938496, 0.95721339288403662, 0.95751712212342199,
    0.95781900751286231, 0.95811905751249371, 0.95841728056706932, 0.95871368510577681,
    0.95900827954203871, 0.95930107227333095, 0.95959207168099958, 0.95988128613007284,
    0.96016872396908992, 0.96045439352991369, 0.96073830312756159, 0.96102046106003347,
    0.96130087560813338, 0.9615795550353089, 0.96185650758748098, 0.96213174149288128,
    0.96240526496188739, 0.96267708618686698, 0.96294721334201694, 0.96321565458321012,
    0.9634824180478414, 0.96374751185467933, 0.96401094410371191, 0.96427272287600263,
    0.96453285623354801, 0.96479135221913181, 0.96504821885618886, 0.96530346414866142,
    0.96555709608086771, 0.96580912261736385, 0.96605955170281899, 0.96630839126187418,
    0.96655564919902626, 0.96680133339849661, 0.96704545172410161, 0.96728801201914538,
    0.96752902210628655, 0.96776848978742669, 0.96800642284359384, 0.96824282903482939,
    0.96847771610007483, 0.96871109175706005, 0.96894296370220201, 0.96917333961049235,
    0.96940222713539614, 0.9696296339087509, 0.96985556754066105, 0.97008003561940892,
    0.97030304571134707, 0.97052460536081431, 0.97074472209003693, 0.97096340339903597,
    0.97118065676554588, 0.97139648964491876, 0.97161090947004647, 0.97182392365127079,
    0.97203553957630506, 0.97224576461015422, 0.97245460609503465, 0.97266207135029759,
    0.97286816767235862, 0.97307290233461741, 0.97327628258739651, 0.97347831565785603,
    0.97367900874994595, 0.97387836904432057, 0.97407640369828763, 0.97427311984573883,
    0.9744685245970891, 0.97466262503921841, 0.97485542823541527, 0.97504694122531455,
    0.97523717102484953, 0.97542612462619416, 0.97561380899771533, 0.97580023108391478,
    0.97598539780539384, 0.97616931605879109, 0.97635199271675133, 0.97653343462787146,
    0.97671364861666332, 0.97689264148350963, 0.97707042000462596, 0.97724699093202771,
    0.97742236099347934, 0.97759653689248172, 0.97776952530821415, 0.97794133289552254,
    0.97811196628487207, 0.97828143208233354, 0.97844973686954306, 0.97861688720368101,
    0.97878288961744819, 0.97894775061903871, 0.97911147669211562, 0.97927407429579938,
    0.97943554986463699, 0.97959590980858779, 0.97975516051300937, 0.97991330833863965,
    0.98007035962157585, 0.98022632067327664, 0.98038119778052968, 0.98053499720546,
    0.98068772518550906, 0.98083938793342829, 0.98098999163727285, 0.98113954246039858,
    0.98128804654145285, 0.98143550999437246, 0.98158193890838108, 0.98172733934799017,
    0.98187171735299783, 0.98201507893848483, 0.98215743009482581, 0.98229877678768707,
    0.9824391249580301, 0.98257848052212049, 0.98271684937153225, 0.98285423737315702,
    0.98299065036921018, 0.9831260941772455, 0.98326057459015981, 0.98339409737620842,
    0.98352666827901858, 0.9836582930176031, 0.98378897728637149, 0.98391872675515069,
    0.98404754706920006, 0.98417544384922817, 0.98430242269141355, 0.98442848916742343,
    0.98455364882443075, 0.98467790718514536, 0.98480126974782733, 0.98492374198631216,
    0.98504532935003852, 0.98516603726407104, 0.98528587112912691, 0.98540483632160103,
    0.98552293819359904, 0.9856401820729549, 0.98575657326327926, 0.98587211704396771,
    0.98598681867024418, 0.98610068337319989, 0.98621371635980637, 0.98632592281296627,
    0.98643730789154027, 0.98654787673038069, 0.98665763444037269, 0.98676658610846768,
    0.98687473679772086, 0.98698209154732741, 0.98708865537266521, 0.98719443326533252,
    0.98729943019318822, 0.98740365110038864, 0.98750710090743943, 0.98760978451122494,
    0.98771170678506415, 0.98781287257873962, 0.98791328671855505, 0.9880129540073761,
    0.98811187922467014, 0.98821006712656212, 0.98830752244586861, 0.98840424989215958,
    0.9885002541517971, 0.98859553988798288, 0.98869011174081578, 0.98878397432733467,
    0.98887713224156715, 0.98896959005458795, 0.98906135231456194, 0.98915242354680355,
    0.98924280825382371, 0.98933251091538399, 0.98942153598855354, 0.98950988790775318,
    0.98959757108482826, 0.98977094874734761, 0.98994170382118951, 0.9901098707936048,
    0.99027548379585306, 0.99043857660504819, 0.99059918264604152, 0.99075733499333796,
    0.99091306637301502, 0.99106640916469402, 0.99121739540351483, 0.99136605678214196,
    0.99151242465279332, 0.99165653002928456, 0.99179840358909521, 0.9919380756754641,
    0.9920755762994824, 0.99221093514222758, 0.99234418155689441, 0.99247534457095632,
    0.99260445288833199, 0.99273153489157562, 0.99285661864407171, 0.99297973189224509,
    0.99310090206779333, 0.99322015628991067, 0.99333752136754438, 0.99345302380164113,
    0.99356668978742446, 0.993678545216654, 0.99378861567992149, 0.99389692646893191,
    0.99400350257880021, 0.99410836871035868, 0.99421154927245581, 0.99431306838427702,
    0.99441294987765749, 0.9945112172994035, 0.9946078939136126, 0.99470300270400513,
    0.99479656637624903, 0.99488860736028384, 0.99497914781266839, 0.9950682096188892,
    0.99515581439570766, 0.99524198349348081, 0.99532673799849825, 0.99541009873530206,
    0.99549208626901597, 0.99557272090767024, 0.99565202270451891, 0.99573001146035667,
    0.9958067067258326, 0.99588212780376328, 0.99595629375143246, 0.99602922338288813,
    0.99610093527124766, 0.9961714477509731, 0.99624077892016594, 0.99630894664283376,
    0.99637596855116828, 0.99644186204779817, 0.99650664430805591, 0.99657033228221525,
    0.99663294269773461, 0.99669449206148852, 0.99675499666199285, 0.99681447257161127,
    0.99687293564876822, 0.99693040154013846, 0.99698688568283711, 0.99704240330658911,
    0.99709696943590298, 0.99715059889222202, 0.99720330629606491, 0.99725510606916967,
    0.99730601243660533, 0.99735603942889439, 0.99740520088410334, 0.99745351044993946,
    0.99750098158582268, 0.99754762756495541, 0.99759346147636829, 0.99763849622696832,
    0.99768274454356198, 0.99772621897487956, 0.99776893189356242, 0.99781089549816715,
    0.99785212181514316, 0.99789262270078227, 0.99793240984319043, 0.99797149476420743,
    0.99800988882134056, 0.99804760320967512, 0.9980846489637667, 0.99812103695953047,
    0.99815677791610868, 0.99819188239772705, 0.99822636081553084, 0.99826022342942689,
    0.99829348034988075, 0.99835821681596382, 0.99842064817691079, 0.99848085011864884,
    0.99853889610543267, 0.99859485743448584, 0.99864880328970085, 0.99870080079442702,
    0.99875091506332792, 0.99879920925331822, 0.99884574461356879, 0.99889058053460056,
    0.99893377459644772, 0.99897538261591035, 0.99901545869288688, 0.99905405525580326,
    0.99909122310613718, 0.99912701146203842, 0.99916146800106331, 0.99919463890202009,
    0.99922656888593742, 0.99925730125616441, 0.99928687793759952, 0.99931533951507812,
    0.99934272527090984, 0.99936907322157276, 0.99939442015360003, 0.9994188016586304,
    0.99944225216766924, 0.99946480498454549, 0.99948649231858344, 0.99950734531651375,
    0.99952739409360836, 0.99954666776406187, 0.99956519447065251, 0.99958300141365919,
    0.99960011487906275, 0.99961656026604861, 0.99963236211381656, 0.99964754412770296,
    0.9996621292046407, 0.99967613945796074, 0.99968959624154397, 0.9997025201733456,
    0.99971493115829646, 0.999726848410594, 0.9997382904753942, 0.99974927524992863,
    0.9997598200040263, 0.99976994140010267, 0.99977965551256698, 0.99982264060074799,
    0.99985754825140616, 0.99988583033387179, 0.99990869160919194, 0.99992712893271174,
    0.99994196481620123, 0.99995387604478414, 0.99996341798176758, 0.99997104513292734,
    0.99997712848195619, 0.9999819700518533, 0.99998581509368289, 0.9999888622547739,
    0.99999127203331184, 0.99999317378547625, 0.99999467151464172, 0.999995848639601,
    0.99999677191002523, 0.99999749461217935, 0.99999805918592755, 0.99999849935507823,
    0.99999884185671317, 0.99999910784114154, 0.99999931400215847, 0.99999947348713514,
    0.99999959662791571, 0.99999969152629198, 0.99999976452180528, 0.99999982056459058,
    0.9999998635117946, 0.99999989636268893, 0.99999992144467198, 0.99999994056010355,
    0.99999995510193529, 0.999999966144546, 0.99999997451496359, 0.99999998084855279,
    0.99999998563248449, 0.99999998923957323, 0.99999999195457556, 0.99999999399457118,
    0.99999999552473973, 0.99999999667052553, 0.99999999752702429, 0.99999999816618967,
    0.99999999864236555, 0.99999999899651915, 0.99999999925948146, 0.99999999945440832,
    0.99999999959866503, 0.99999999970524789, 0.99999999978386644, 0.99999999984176424,
    0.99999999988433319, 0.9999999999155823,
};

const char* const kTw1SourceTag =
    "airy-kernel fredholm determinant, gauss-legendre n=200";

}  // namespace sompkit::tracy_widom::detail
