#pragma once

#include <array>

#include "constants.hpp"

namespace hqm {

// Published comparison values, shipped as static data and only ever compared
// against, never regenerated as ground truth.

struct Table1Row {
    double omega;
    int n;
    int m;
    double e_num;     // eV, published finite-difference column
    double e_analyt;  // eV, published closed-form column
};

// k = 5e9 1/m, mu = electron mass. Row order follows the publication:
// omega outer, m middle, n inner.
inline constexpr std::array<Table1Row, 27> table1{{
    {2.0, 0, 1, -3.0652, -3.0692},   {2.0, 1, 1, -4.1519, -4.1529},
    {2.0, 2, 1, -4.4511, -4.4515},   {2.0, 0, 2, -2.3236, -2.3241},
    {2.0, 1, 2, -3.5181, -3.5184},   {2.0, 2, 2, -4.0097, -4.0099},
    {2.0, 0, 3, -1.9631, -1.9633},   {2.0, 1, 3, -3.0689, -3.0692},
    {2.0, 2, 3, -3.6287, -3.6289},   {3.0, 0, 1, -5.6969, -5.7150},
    {3.0, 1, 1, -8.1487, -8.1534},   {3.0, 2, 1, -8.8233, -8.8252},
    {3.0, 0, 2, -4.0361, -4.0386},   {3.0, 1, 2, -6.7240, -6.7258},
    {3.0, 2, 2, -7.8305, -7.8316},   {3.0, 0, 3, -3.2257, -3.2268},
    {3.0, 1, 3, -5.7137, -5.7150},   {3.0, 2, 3, -6.9734, -6.9745},
    {4.0, 0, 1, -9.3662, -9.4191},   {4.0, 1, 1, -13.7403, -13.7540},
    {4.0, 2, 1, -14.9430, -14.9483}, {4.0, 0, 2, -6.4311, -6.4389},
    {4.0, 1, 2, -11.2106, -11.2161}, {4.0, 2, 2, -13.1785, -13.1821},
    {4.0, 0, 3, -4.9923, -4.9957},   {4.0, 1, 3, -9.4151, -9.4191},
    {4.0, 2, 3, -11.6547, -11.6582},
}};

struct Table2Row {
    double omega;
    std::array<double, 5> e;  // eV, five lowest radial modes
};

// Oscillator reference spectrum at omega0 = 2 pi x 5e14 rad/s, k = 1e9 1/m,
// m = 1. The generating grid was never published; see the repository notes on
// why these values are compared qualitatively, not regenerated.
inline constexpr double table2_omega0 = 2.0 * pi * 5.0e14;
inline constexpr double table2_k = 1.0e9;
inline constexpr int table2_m = 1;

inline constexpr std::array<Table2Row, 25> table2{{
    {1.000000, {112.1989, 252.4949, 448.9021, 701.4224, 1010.0567}},
    {1.591837, {112.2348, 252.5383, 448.9493, 701.4718, 1010.1076}},
    {2.183673, {112.2974, 252.6084, 449.0231, 701.5480, 1010.1853}},
    {2.775510, {112.3866, 252.7052, 449.1237, 701.6507, 1010.2896}},
    {3.367347, {112.5026, 252.8287, 449.2509, 701.7802, 1010.4205}},
    {3.959184, {112.6451, 252.9780, 449.4054, 701.9368, 1010.5771}},
    {4.551020, {112.8143, 253.1533, 449.5871, 702.1204, 1010.7601}},
    {5.142857, {113.0101, 253.3534, 449.7960, 702.3310, 1010.9705}},
    {5.734694, {113.2326, 253.5779, 450.0320, 702.5685, 1011.2082}},
    {6.326531, {113.4816, 253.8264, 450.2947, 702.8327, 1011.4731}},
    {6.918367, {113.7569, 254.0984, 450.5836, 703.1237, 1011.7653}},
    {7.510204, {114.0585, 254.3936, 450.8983, 703.4413, 1012.0847}},
    {8.102041, {114.3863, 254.7117, 451.2383, 703.7854, 1012.4314}},
    {8.693878, {114.7400, 255.0522, 451.6033, 704.1546, 1012.8053}},
    {9.285714, {115.1200, 255.4148, 451.9928, 704.5487, 1013.2064}},
    {9.877551, {115.5260, 255.7989, 452.4063, 704.9673, 1013.6347}},
    {10.469388, {115.9580, 256.2042, 452.8435, 705.4099, 1014.0901}},
    {11.061224, {116.4157, 256.6312, 453.3040, 705.8763, 1014.5727}},
    {11.653061, {116.8991, 257.0798, 453.7873, 706.3662, 1015.0824}},
    {12.244898, {117.4080, 257.5506, 454.2939, 706.8803, 1015.6193}},
    {12.836735, {117.9423, 258.0445, 454.8234, 707.4183, 1016.1834}},
    {13.428571, {118.5018, 258.5621, 455.3755, 707.9799, 1016.7745}},
    {14.020408, {119.0863, 259.1043, 455.9508, 708.5648, 1017.3928}},
    {14.612245, {119.6958, 259.6710, 456.5489, 709.1727, 1018.0382}},
    {15.204082, {120.3301, 260.2631, 457.1705, 709.8032, 1018.7107}},
}};

}  // namespace hqm
