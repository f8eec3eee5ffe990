#include "heckeeta/golden.hpp"

#include <array>

namespace heckeeta {

namespace {

// {D, N, a, b} meaning (a + b sqrt(D))/2.
constexpr std::array<GoldenEntry, 75> kEtaTable{{
    {5, 1, -2, -2},
    {13, 1, -2, -2},
    {17, 1, -2, -2},
    {5, 2, 7, 1},
    {13, 2, 15, 1},
    {17, 2, 15, -1},
    {5, 3, 0, -4},
    {13, 3, -4, -8},
    {17, 3, 38, -2},
    {5, 4, 8, -2},
    {13, 4, 54, 2},
    {17, 4, 13, -23},
    {5, 5, 12, -4},
    {13, 5, 0, -24},
    {17, 5, 138, -22},
    {5, 6, 13, -7},
    {13, 6, 132, -6},
    {17, 6, 278, -46},
    {5, 7, 22, -10},
    {13, 7, 54, -58},
    {17, 7, 332, -140},
    {5, 8, 35, -13},
    {13, 8, 310, -36},
    {17, 8, 984, -178},
    {5, 9, 38, -22},
    {13, 9, 256, -128},
    {17, 9, 1636, -364},
    {5, 10, 69, -25},
    {13, 10, 715, -119},
    {17, 10, 2484, -756},
    {5, 11, 74, -42},
    {13, 11, 728, -296},
    {17, 11, 5134, -1122},
    {5, 12, 129, -45},
    {13, 12, 1590, -328},
    {17, 12, 8470, -1996},
    {5, 13, 140, -76},
    {13, 13, 1824, -664},
    {17, 13, 13560, -3512},
    {5, 14, 216, -86},
    {13, 14, 3504, -786},
    {17, 14, 23637, -5515},
    {5, 15, 268, -124},
    {13, 15, 4320, -1412},
    {17, 15, 37954, -9118},
    {5, 16, 352, -160},
    {13, 16, 7398, -1782},
    {17, 16, 59823, -14961},
    {5, 17, 466, -206},
    {13, 17, 9522, -2934},
    {17, 17, 97114, -23254},
    {5, 18, 603, -267},
    {13, 18, 15069, -3855},
    {17, 18, 152212, -36616},
    {5, 19, 754, -350},
    {13, 19, 19972, -5940},
    {17, 19, 234206, -57490},
    {5, 20, 1017, -429},
    {13, 20, 30138, -7914},
    {17, 20, 363839, -87715},
    {5, 21, 1216, -576},
    {13, 21, 40348, -11708},
    {17, 21, 553916, -134068},
    {5, 22, 1625, -693},
    {13, 22, 58843, -15677},
    {17, 22, 834468, -203628},
    {5, 23, 1970, -910},
    {13, 23, 78780, -22572},
    {17, 23, 1258094, -304090},
    {5, 24, 2530, -1112},
    {13, 24, 112004, -30230},
    {17, 24, 1871277, -453479},
    {5, 25, 3128, -1412},
    {13, 25, 149822, -42530},
    {17, 25, 2762828, -671572},
}};

constexpr std::array<GoldenEntry, 6> kTau5{{
    {5, 1, 2, 0},
    {5, 2, -10, -10},
    {5, 3, 155, 45},
    {5, 4, -560, -340},
    {5, 5, 2830, 980},
    {5, 6, 20565, 6965},
}};

}  // namespace

std::span<const GoldenEntry> golden_eta_table() { return kEtaTable; }

std::span<const GoldenEntry> golden_tau5() { return kTau5; }

}  // namespace heckeeta
