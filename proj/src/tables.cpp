// Coefficient tables of the sextic family f_{u,w}: each term is
// (coefficient index, exponent pattern of a monomial symmetric sum, polynomial in w).
#include "symcone/tables.hpp"

namespace symcone::tables {

const std::vector<TableTerm> kSexticCoeffTerms = {
    {0, {10, 2, 0}, {1}},
    {0, {9, 3, 0}, {-4, -1, 4}},
    {0, {8, 4, 0}, {4, 2, -1, -4}},
    {0, {7, 5, 0}, {4, 1, -4, 0, 1}},
    {0, {6, 6, 0}, {-10, -4, 2, 8, 2}},
    {0, {10, 1, 1}, {2}},
    {0, {9, 2, 1}, {-8, -7, -4}},
    {0, {8, 3, 1}, {12, 16, 1}},
    {0, {7, 4, 1}, {-8, -34, -9, 8, 1}},
    {0, {6, 5, 1}, {2, 25, 12, -16, -13}},
    {0, {8, 2, 2}, {28, 60, 24, 8}},
    {0, {7, 3, 2}, {-36, -87, -59, -16, -2}},
    {0, {6, 4, 2}, {23, 88, 135, 84, 26}},
    {0, {5, 5, 2}, {-16, -108, -168, -56, 12}},
    {0, {6, 3, 3}, {30, 102, 62, -56, -26}},
    {0, {5, 4, 3}, {-2, -38, -80, -48, -12}},
    {0, {4, 4, 4}, {-30, 60, 270, 240, 30}},
    {1, {11, 1, 0}, {-2}},
    {1, {10, 2, 0}, {6, 2, -4}},
    {1, {9, 3, 0}, {-2, -2, -2}},
    {1, {8, 4, 0}, {-8, -4, 5, 4, 3}},
    {1, {7, 5, 0}, {4, 2, 2, 0, -1, -1}},
    {1, {6, 6, 0}, {4, 4, -2, -8, -8, -2}},
    {1, {10, 1, 1}, {8, 8, 8}},
    {1, {9, 2, 1}, {-16, -26, -2}},
    {1, {8, 3, 1}, {18, 49, 13, -2}},
    {1, {7, 4, 1}, {-8, -11, -17, -10, -7, -1}},
    {1, {6, 5, 1}, {0, -20, -2, 20, 25, 13}},
    {1, {8, 2, 2}, {0, -6, -12, -12, -6}},
    {1, {7, 3, 2}, {14, 9, 27, 42, 14, 2}},
    {1, {6, 4, 2}, {-10, -24, -87, -136, -89, -26}},
    {1, {5, 5, 2}, {12, 90, 132, 108, 30, -12}},
    {1, {6, 3, 3}, {-24, -60, -18, 32, 68, 26}},
    {1, {5, 4, 3}, {-6, 12, 48, 72, 48, 12}},
    {1, {4, 4, 4}, {60, -30, -210, -300, -210, -30}},
    {2, {12, 0, 0}, {1}},
    {2, {11, 1, 0}, {0, -1, -4}},
    {2, {10, 2, 0}, {-7, -2, 7, 12}},
    {2, {9, 3, 0}, {4, 4, -2, -8, -9}},
    {2, {8, 4, 0}, {11, 6, -3, -12, -4, 2}},
    {2, {7, 5, 0}, {-4, -3, 6, 8, 4, 4}},
    {2, {6, 6, 0}, {-10, -8, -8, 0, -2, 4}},
    {2, {10, 1, 1}, {0, 8, 5, 8}},
    {2, {9, 2, 1}, {10, 18, -12, -30, -15}},
    {2, {8, 3, 1}, {-20, -52, -4, 54, 47, 8}},
    {2, {7, 4, 1}, {0, -5, 4, 10, -4, -13, -1}},
    {2, {6, 5, 1}, {10, 32, 11, -2, -24, -15, -3}},
    {2, {8, 2, 2}, {-9, -36, -24, -12, 33, 12}},
    {2, {7, 3, 2}, {30, 79, 100, -22, -44, -32, -3}},
    {2, {6, 4, 2}, {-36, -110, -158, -68, 42, 36, 12}},
    {2, {5, 5, 2}, {24, 102, 54, 48, 36, 12, 3}},
    {2, {6, 3, 3}, {-20, -24, 33, -20, -10, 2, 3}},
    {2, {5, 4, 3}, {6, 33, 57, 60, -6, -3, -6}},
    {2, {4, 4, 4}, {18, -120, -192, -84, -93, -12, -12}},
    {3, {12, 0, 0}, {-2, 0, 4}},
    {3, {11, 1, 0}, {4, 2, -4, -8}},
    {3, {10, 2, 0}, {0, 0, 5, 4, 5}},
    {3, {9, 3, 0}, {4, -2, -8, -8, 3, -1}},
    {3, {8, 4, 0}, {-14, -8, 6, 8, 12, -2}},
    {3, {7, 5, 0}, {-8, 0, 12, 16, 7, -5}},
    {3, {6, 6, 0}, {32, 16, -30, -24, -14, -8}},
    {3, {10, 1, 1}, {-20, -32, 12, 24, 14}},
    {3, {9, 2, 1}, {28, 30, 4, -36, -27, -7}},
    {3, {8, 3, 1}, {-20, -26, -10, 16, 7, 0, 1}},
    {3, {7, 4, 1}, {32, 100, 6, -80, -49, -6, 3}},
    {3, {6, 5, 1}, {-24, -74, -8, 4, 35, 29, 4}},
    {3, {8, 2, 2}, {-38, -36, 48, 144, 84, 36, 2}},
    {3, {7, 3, 2}, {-16, -2, -130, -96, -122, -27, -7}},
    {3, {6, 4, 2}, {46, 92, 217, 292, 175, 68, 2}},
    {3, {5, 5, 2}, {-40, -168, -48, -216, -222, -108, -32}},
    {3, {6, 3, 3}, {28, -36, -120, 112, 68, 46, 6}},
    {3, {5, 4, 3}, {4, -14, -92, -200, -92, -56}},
    {3, {4, 4, 4}, {-96, 180, 414, 408, 486, 144, 54}},
    {4, {12, 0, 0}, {2}},
    {4, {11, 1, 0}, {-4, 2, 8}},
    {4, {10, 2, 0}, {-2, -4, -4, -8}},
    {4, {9, 3, 0}, {4, 3, 9, 10, 6}},
    {4, {8, 4, 0}, {6, -2, -5, 0, -1, -4}},
    {4, {7, 5, 0}, {0, -5, -17, -10, 5, -4, 1}},
    {4, {6, 6, 0}, {-12, 12, 18, 16, 24, 0, 2}},
    {4, {10, 1, 1}, {0, -48, -66, -48}},
    {4, {9, 2, 1}, {36, 89, 143, 98, 42}},
    {4, {8, 3, 1}, {-58, -140, -242, -188, -88, -16}},
    {4, {7, 4, 1}, {18, 156, 222, 168, 69, 30, 3}},
    {4, {6, 5, 1}, {8, -59, -65, -118, -67, -22, -7}},
    {4, {8, 2, 2}, {-42, -84, -138, -120, -96, -24}},
    {4, {7, 3, 2}, {-2, 67, 103, 226, 98, 56, 4}},
    {4, {6, 4, 2}, {40, 52, 67, 60, 23, 32, 2}},
    {4, {5, 5, 2}, {-60, -240, -78, 0, 42, 24, 6}},
    {4, {6, 3, 3}, {80, -18, -306, -300, -252, -108, -32}},
    {4, {5, 4, 3}, {-24, 0, 12, -60, -12, -42}},
    {4, {4, 4, 4}, {-36, 180, 324, 288, 396, 144, 54}},
    {5, {12, 0, 0}, {-2, -4, -4}},
    {5, {11, 1, 0}, {6, 10, 10, 8}},
    {5, {10, 2, 0}, {-4, -9, -24, -22, -9}},
    {5, {9, 3, 0}, {-2, 7, 19, 22, 11, 5}},
    {5, {8, 4, 0}, {2, -2, 4, 4, -8, 1, -1}},
    {5, {7, 5, 0}, {-4, -17, -29, -30, -21, 0, -1}},
    {5, {6, 6, 0}, {8, 30, 48, 36, 14, 8}},
    {5, {10, 1, 1}, {-8, 2, -10, 4, -6}},
    {5, {9, 2, 1}, {-20, -31, -37, 14, 9, 3}},
    {5, {8, 3, 1}, {40, 81, 129, 46, 1, -2, -1}},
    {5, {7, 4, 1}, {-10, -107, -119, -78, -19, -7, -2}},
    {5, {6, 5, 1}, {-8, 45, 27, 86, 41, 2, 5}},
    {5, {8, 2, 2}, {42, 66, 42, -36, -24, -18}},
    {5, {7, 3, 2}, {-12, -82, -70, -108, 42, 9, 5}},
    {5, {6, 4, 2}, {-30, -25, -16, -22, -19, -37, -7}},
    {5, {5, 5, 2}, {48, 162, -30, -60, -42, 6, 6}},
    {5, {6, 3, 3}, {-56, 44, 272, 184, 96, 6, 6}},
    {5, {5, 4, 3}, {30, 30, 6, 24, -36, 24}},
    {5, {4, 4, 4}, {-24, -300, -354, -48, -66, 6, -24}},
};

// Divisor of the discriminant D_f, as coefficients of t^0, t^1, t^2.
const std::vector<TableTerm> kDLTerms = {
    {0, {10, 0, 0}, {-4, 28}},
    {0, {9, 1, 0}, {24, -52, -56}},
    {0, {8, 2, 0}, {-52, 8, 128, 24}},
    {0, {7, 3, 0}, {32, 24, -32, -64, 4}},
    {0, {6, 4, 0}, {56, -36, -128, -24, -16, 4}},
    {0, {5, 5, 0}, {-112, 56, 176, 128, -40, 8}},
    {0, {8, 1, 1}, {-112, 8, 200, 120}},
    {0, {7, 2, 1}, {200, 296, -256, -288, -60}},
    {0, {6, 3, 1}, {-168, -416, 80, 432, 164, -20}},
    {0, {5, 4, 1}, {56, 164, 32, -136, 8, -16}},
    {0, {6, 2, 2}, {-292, -796, -304, 288, 180, 60}},
    {0, {5, 3, 2}, {200, 776, 872, -232, -376, -52}},
    {0, {4, 4, 2}, {-112, -568, -1264, -640, 284, 140}},
    {0, {4, 3, 3}, {-64, -256, -88, 680, 128, -40}},
    {1, {10, 0, 0}, {-40, -8}},
    {1, {9, 1, 0}, {96, 56, 16}},
    {1, {8, 2, 0}, {-52, -100, -16, -48}},
    {1, {7, 3, 0}, {-40, 24, 40, 8, 40}},
    {1, {6, 4, 0}, {92, 108, 16, 48, 20, 4}},
    {1, {5, 5, 0}, {-112, -160, -112, -16, -40, 8}},
    {1, {8, 1, 1}, {-184, -280, -16, 48}},
    {1, {7, 2, 1}, {56, 296, -40, -72, -24}},
    {1, {6, 3, 1}, {-24, -56, 8, 72, -88, -56}},
    {1, {5, 4, 1}, {56, -16, 32, -208, -64, -16}},
    {1, {6, 2, 2}, {176, 176, 272, 720, 288, 96}},
    {1, {5, 3, 2}, {-88, -520, -640, -736, -376, -16}},
    {1, {4, 4, 2}, {-184, 296, 1328, 1520, 1112, 248}},
    {1, {4, 3, 3}, {152, 392, -304, -400, -376, -184}},
    {2, {10, 0, 0}, {8, 16}},
    {2, {9, 1, 0}, {-12, -40, -32}},
    {2, {8, 2, 0}, {-13, 29, 68, 24}},
    {2, {7, 3, 0}, {26, 6, -26, -34, -8}},
    {2, {6, 4, 0}, {5, -45, -68, -24, -13, 1}},
    {2, {5, 5, 0}, {-28, 68, 116, 68, -10, 2}},
    {2, {8, 1, 1}, {-10, 74, 104, 48}},
    {2, {7, 2, 1}, {86, 74, -118, -126, -24}},
    {2, {6, 3, 1}, {-78, -194, 38, 198, 104, 4}},
    {2, {5, 4, 1}, {14, 86, 8, -16, 20, -4}},
    {2, {6, 2, 2}, {-190, -442, -220, -36, 18, 6}},
    {2, {5, 3, 2}, {122, 518, 596, 68, -94, -22}},
    {2, {4, 4, 2}, {-10, -358, -964, -700, -136, 8}},
    {2, {4, 3, 3}, {-70, -226, 32, 440, 158, 26}},
};

}  // namespace symcone::tables
