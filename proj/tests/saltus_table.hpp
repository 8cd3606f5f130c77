#pragma once

// Saltus table for X = {a, b, a+b}: saltus = a * n.

#include <array>
#include <cstdint>

struct TableRow {
  std::uint64_t a, b, c, n;
};

inline constexpr std::array<TableRow, 320> kSaltusTable{{
    {1, 3, 4, 4},
    {1, 4, 5, 4},
    {1, 5, 6, 6},
    {1, 6, 7, 6},
    {1, 7, 8, 8},
    {1, 8, 9, 8},
    {1, 9, 10, 10},
    {1, 10, 11, 10},
    {1, 11, 12, 12},
    {1, 12, 13, 12},
    {1, 13, 14, 14},
    {1, 14, 15, 14},
    {1, 15, 16, 16},
    {1, 16, 17, 16},
    {1, 17, 18, 18},
    {1, 18, 19, 18},
    {1, 19, 20, 20},
    {1, 20, 21, 20},
    {1, 21, 22, 22},
    {1, 22, 23, 22},
    {1, 23, 24, 24},
    {1, 24, 25, 24},
    {1, 25, 26, 26},
    {1, 26, 27, 26},
    {1, 27, 28, 28},
    {1, 28, 29, 28},
    {1, 29, 30, 30},
    {1, 30, 31, 30},
    {1, 31, 32, 32},
    {1, 32, 33, 32},
    {1, 33, 34, 34},
    {1, 34, 35, 34},
    {1, 35, 36, 36},
    {1, 36, 37, 36},
    {1, 37, 38, 38},
    {1, 38, 39, 38},
    {1, 39, 40, 40},
    {1, 40, 41, 40},
    {1, 41, 42, 42},
    {1, 42, 43, 42},
    {2, 7, 9, 8},
    {2, 9, 11, 10},
    {2, 11, 13, 12},
    {2, 13, 15, 14},
    {2, 15, 17, 16},
    {2, 17, 19, 18},
    {2, 19, 21, 20},
    {2, 21, 23, 22},
    {2, 23, 25, 24},
    {2, 25, 27, 26},
    {2, 27, 29, 28},
    {2, 29, 31, 30},
    {2, 31, 33, 32},
    {2, 33, 35, 34},
    {2, 35, 37, 36},
    {2, 37, 39, 38},
    {2, 39, 41, 40},
    {2, 41, 43, 42},
    {2, 43, 45, 44},
    {2, 45, 47, 46},
    {2, 47, 49, 48},
    {2, 49, 51, 50},
    {2, 51, 53, 52},
    {2, 53, 55, 54},
    {2, 55, 57, 56},
    {2, 57, 59, 58},
    {2, 59, 61, 60},
    {2, 61, 63, 62},
    {2, 63, 65, 64},
    {2, 65, 67, 66},
    {2, 67, 69, 68},
    {2, 69, 71, 70},
    {2, 71, 73, 72},
    {2, 73, 75, 74},
    {2, 75, 77, 76},
    {2, 77, 79, 78},
    {2, 79, 81, 80},
    {2, 81, 83, 82},
    {2, 83, 85, 84},
    {2, 85, 87, 86},
    {3, 10, 13, 12},
    {3, 11, 14, 12},
    {3, 13, 16, 14},
    {3, 14, 17, 16},
    {3, 16, 19, 18},
    {3, 17, 20, 18},
    {3, 19, 22, 20},
    {3, 20, 23, 22},
    {3, 22, 25, 24},
    {3, 23, 26, 24},
    {3, 25, 28, 26},
    {3, 26, 29, 28},
    {3, 28, 31, 30},
    {3, 29, 32, 30},
    {3, 31, 34, 32},
    {3, 32, 35, 34},
    {3, 34, 37, 36},
    {3, 35, 38, 36},
    {3, 37, 40, 38},
    {3, 38, 41, 40},
    {3, 40, 43, 42},
    {3, 41, 44, 42},
    {3, 43, 46, 44},
    {3, 44, 47, 46},
    {3, 46, 49, 48},
    {3, 47, 50, 48},
    {3, 49, 52, 50},
    {3, 50, 53, 52},
    {3, 52, 55, 54},
    {3, 53, 56, 54},
    {3, 55, 58, 56},
    {3, 56, 59, 58},
    {3, 58, 61, 60},
    {3, 59, 62, 60},
    {3, 61, 64, 62},
    {3, 62, 65, 64},
    {3, 64, 67, 66},
    {3, 65, 68, 66},
    {3, 67, 70, 68},
    {3, 68, 71, 70},
    {4, 13, 17, 16},
    {4, 15, 19, 16},
    {4, 17, 21, 18},
    {4, 19, 23, 22},
    {4, 21, 25, 24},
    {4, 23, 27, 24},
    {4, 25, 29, 26},
    {4, 27, 31, 30},
    {4, 29, 33, 32},
    {4, 31, 35, 32},
    {4, 33, 37, 34},
    {4, 35, 39, 38},
    {4, 37, 41, 40},
    {4, 39, 43, 40},
    {4, 41, 45, 42},
    {4, 43, 47, 46},
    {4, 45, 49, 48},
    {4, 47, 51, 48},
    {4, 49, 53, 50},
    {4, 51, 55, 54},
    {4, 53, 57, 56},
    {4, 55, 59, 56},
    {4, 57, 61, 58},
    {4, 59, 63, 62},
    {4, 61, 65, 64},
    {4, 63, 67, 64},
    {4, 65, 69, 66},
    {4, 67, 71, 70},
    {4, 69, 73, 72},
    {4, 71, 75, 72},
    {4, 73, 77, 74},
    {4, 75, 79, 78},
    {4, 77, 81, 80},
    {4, 79, 83, 80},
    {4, 81, 85, 82},
    {4, 83, 87, 86},
    {4, 85, 89, 88},
    {4, 87, 91, 88},
    {4, 89, 93, 90},
    {4, 91, 95, 94},
    {5, 16, 21, 20},
    {5, 17, 22, 20},
    {5, 18, 23, 20},
    {5, 19, 24, 20},
    {5, 21, 26, 22},
    {5, 22, 27, 24},
    {5, 23, 28, 26},
    {5, 24, 29, 28},
    {5, 26, 31, 30},
    {5, 27, 32, 30},
    {5, 28, 33, 30},
    {5, 29, 34, 30},
    {5, 31, 36, 32},
    {5, 32, 37, 34},
    {5, 33, 38, 36},
    {5, 34, 39, 38},
    {5, 36, 41, 40},
    {5, 37, 42, 40},
    {5, 38, 43, 40},
    {5, 39, 44, 40},
    {5, 41, 46, 42},
    {5, 42, 47, 44},
    {5, 43, 48, 46},
    {5, 44, 49, 48},
    {5, 46, 51, 50},
    {5, 47, 52, 50},
    {5, 48, 53, 50},
    {5, 49, 54, 50},
    {5, 51, 56, 52},
    {5, 52, 57, 54},
    {5, 53, 58, 56},
    {5, 54, 59, 58},
    {5, 56, 61, 60},
    {5, 57, 62, 60},
    {5, 58, 63, 60},
    {5, 59, 64, 60},
    {5, 61, 66, 62},
    {5, 62, 67, 64},
    {5, 63, 68, 66},
    {5, 64, 69, 68},
    {6, 19, 25, 24},
    {6, 23, 29, 24},
    {6, 25, 31, 26},
    {6, 29, 35, 34},
    {6, 31, 37, 36},
    {6, 35, 41, 36},
    {6, 37, 43, 38},
    {6, 41, 47, 46},
    {6, 43, 49, 48},
    {6, 47, 53, 48},
    {6, 49, 55, 50},
    {6, 53, 59, 58},
    {6, 55, 61, 60},
    {6, 59, 65, 60},
    {6, 61, 67, 62},
    {6, 65, 71, 70},
    {6, 67, 73, 72},
    {6, 71, 77, 72},
    {6, 73, 79, 74},
    {6, 77, 83, 82},
    {6, 79, 85, 84},
    {6, 83, 89, 84},
    {6, 85, 91, 86},
    {6, 89, 95, 94},
    {6, 91, 97, 96},
    {6, 95, 101, 96},
    {6, 97, 103, 98},
    {6, 101, 107, 106},
    {6, 103, 109, 108},
    {6, 107, 113, 108},
    {6, 109, 115, 110},
    {6, 113, 119, 118},
    {6, 115, 121, 120},
    {6, 119, 125, 120},
    {6, 121, 127, 122},
    {6, 125, 131, 130},
    {6, 127, 133, 132},
    {6, 131, 137, 132},
    {6, 133, 139, 134},
    {6, 137, 143, 142},
    {7, 22, 29, 28},
    {7, 23, 30, 28},
    {7, 24, 31, 28},
    {7, 25, 32, 28},
    {7, 26, 33, 28},
    {7, 27, 34, 28},
    {7, 29, 36, 30},
    {7, 30, 37, 32},
    {7, 31, 38, 34},
    {7, 32, 39, 36},
    {7, 33, 40, 38},
    {7, 34, 41, 40},
    {7, 36, 43, 42},
    {7, 37, 44, 42},
    {7, 38, 45, 42},
    {7, 39, 46, 42},
    {7, 40, 47, 42},
    {7, 41, 48, 42},
    {7, 43, 50, 44},
    {7, 44, 51, 46},
    {7, 45, 52, 48},
    {7, 46, 53, 50},
    {7, 47, 54, 52},
    {7, 48, 55, 54},
    {7, 50, 57, 56},
    {7, 51, 58, 56},
    {7, 52, 59, 56},
    {7, 53, 60, 56},
    {7, 54, 61, 56},
    {7, 55, 62, 56},
    {7, 57, 64, 58},
    {7, 58, 65, 60},
    {7, 59, 66, 62},
    {7, 60, 67, 64},
    {7, 61, 68, 66},
    {7, 62, 69, 68},
    {7, 64, 71, 70},
    {7, 65, 72, 70},
    {7, 66, 73, 70},
    {7, 67, 74, 70},
    {8, 25, 33, 32},
    {8, 27, 35, 32},
    {8, 29, 37, 32},
    {8, 31, 39, 32},
    {8, 33, 41, 34},
    {8, 35, 43, 38},
    {8, 37, 45, 42},
    {8, 39, 47, 46},
    {8, 41, 49, 48},
    {8, 43, 51, 48},
    {8, 45, 53, 48},
    {8, 47, 55, 48},
    {8, 49, 57, 50},
    {8, 51, 59, 54},
    {8, 53, 61, 58},
    {8, 55, 63, 62},
    {8, 57, 65, 64},
    {8, 59, 67, 64},
    {8, 61, 69, 64},
    {8, 63, 71, 64},
    {8, 65, 73, 66},
    {8, 67, 75, 70},
    {8, 69, 77, 74},
    {8, 71, 79, 78},
    {8, 73, 81, 80},
    {8, 75, 83, 80},
    {8, 77, 85, 80},
    {8, 79, 87, 80},
    {8, 81, 89, 82},
    {8, 83, 91, 86},
    {8, 85, 93, 90},
    {8, 87, 95, 94},
    {8, 89, 97, 96},
    {8, 91, 99, 96},
    {8, 93, 101, 96},
    {8, 95, 103, 96},
    {8, 97, 105, 98},
    {8, 99, 107, 102},
    {8, 101, 109, 106},
    {8, 103, 111, 110},
}};
