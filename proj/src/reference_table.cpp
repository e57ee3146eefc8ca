#include "lieander/reference_table.hpp"

namespace lieander {

const std::array<std::array<std::int64_t, 11>, 49>& reference_counts() {
  // clang-format off
  static const std::array<std::array<std::int64_t, 11>, 49> table{{
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},  // n = 2
      {2, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0},  // n = 3
      {2, 2, 4, 0, 1, 0, 0, 0, 0, 0, 0},  // n = 4
      {4, 2, 12, 0, 4, 0, 0, 2, 0, 0, 0},  // n = 5
      {2, 8, 8, 2, 13, 0, 2, 4, 0, 0, 1},  // n = 6
      {6, 6, 30, 2, 24, 0, 6, 22, 0, 0, 4},  // n = 7
      {4, 14, 24, 12, 37, 2, 24, 40, 0, 3, 15},  // n = 8
      {6, 16, 42, 6, 80, 2, 34, 96, 0, 8, 48},  // n = 9
      {4, 24, 32, 34, 93, 12, 94, 140, 2, 33, 101},  // n = 10
      {10, 22, 90, 22, 158, 6, 130, 318, 2, 44, 226},  // n = 11
      {4, 38, 40, 64, 181, 50, 256, 368, 12, 155, 395},  // n = 12
      {12, 34, 132, 44, 302, 24, 332, 738, 6, 176, 774},  // n = 13
      {6, 52, 72, 126, 299, 118, 574, 812, 54, 507, 1125},  // n = 14
      {8, 56, 104, 72, 544, 62, 704, 1496, 26, 518, 2032},  // n = 15
      {8, 64, 112, 200, 473, 250, 1104, 1552, 170, 1255, 2715},  // n = 16
      {16, 64, 240, 132, 782, 120, 1372, 2832, 72, 1270, 4542},  // n = 17
      {6, 90, 96, 302, 687, 488, 1970, 2652, 396, 2777, 5673},  // n = 18
      {18, 84, 306, 202, 1152, 224, 2366, 4772, 170, 2646, 9228},  // n = 19
      {8, 112, 144, 428, 1037, 820, 3164, 4372, 860, 5435, 10797},  // n = 20
      {12, 116, 228, 268, 1672, 412, 3860, 7452, 340, 5128, 17016},  // n = 21
      {10, 130, 200, 626, 1361, 1336, 4986, 6724, 1648, 9879, 19029},  // n = 22
      {22, 128, 462, 394, 2200, 642, 5950, 11604, 660, 9218, 29324},  // n = 23
      {8, 164, 176, 788, 1783, 2002, 7372, 9912, 2978, 16533, 31759},  // n = 24
      {20, 160, 460, 536, 2984, 970, 8760, 16808, 1174, 15500, 48088},  // n = 25
      {12, 188, 288, 1098, 2341, 3006, 10582, 14220, 4948, 27049, 50341},  // n = 26
      {18, 194, 450, 678, 3724, 1454, 12562, 23462, 1946, 24646, 75364},  // n = 27
      {12, 218, 312, 1352, 3049, 4168, 14712, 19776, 7882, 41217, 77141},  // n = 28
      {28, 214, 756, 904, 4742, 2026, 17448, 32794, 3112, 38054, 113610},  // n = 29
      {8, 262, 224, 1678, 3593, 5938, 19938, 26296, 12178, 62107, 113371},  // n = 30
      {30, 248, 870, 1126, 5926, 2822, 23546, 43884, 4756, 56618, 166526},  // n = 31
      {16, 292, 480, 2100, 4619, 7772, 26524, 35476, 17868, 89423, 163477},  // n = 32
      {20, 304, 620, 1332, 7136, 3862, 31092, 56844, 7006, 81778, 236796},  // n = 33
      {16, 328, 512, 2626, 5537, 10488, 34534, 45820, 26042, 126957, 228599},  // n = 34
      {24, 336, 792, 1684, 9006, 5016, 40388, 74696, 10140, 114974, 329734},  // n = 35
      {12, 372, 408, 3012, 6465, 13186, 44084, 58172, 36318, 173649, 313349},  // n = 36
      {36, 360, 1260, 2056, 10458, 6508, 52000, 95152, 14220, 158612, 449562},  // n = 37
      {18, 414, 648, 3758, 7857, 17330, 56038, 73972, 50342, 237595, 421683},  // n = 38
      {24, 426, 888, 2356, 12060, 8350, 65148, 117714, 19580, 214200, 600996},  // n = 39
      {16, 458, 608, 4320, 9391, 21258, 69816, 92472, 67028, 312597, 559705},  // n = 40
      {40, 450, 1560, 2888, 14508, 10462, 81592, 148202, 26348, 284788, 793208},  // n = 41
      {12, 518, 480, 4998, 10375, 27032, 85074, 111708, 90216, 412583, 726155},  // n = 42
      {42, 500, 1722, 3374, 16924, 13028, 100378, 181536, 34930, 372092, 1030880},  // n = 43
      {20, 564, 840, 5888, 12675, 32454, 105288, 138840, 115926, 530871, 938347},  // n = 44
      {24, 580, 1032, 3708, 19016, 16122, 121308, 216664, 45706, 480528, 1317228},  // n = 45
      {22, 606, 968, 6930, 14337, 40360, 126866, 166660, 151900, 680025, 1190891},  // n = 46
      {46, 604, 2070, 4510, 22382, 19450, 147706, 265940, 58876, 612920, 1673598},  // n = 47
      {16, 680, 736, 7512, 15829, 47340, 150328, 197636, 190596, 851655, 1495615},  // n = 48
      {42, 670, 1974, 5178, 25826, 23480, 176774, 316646, 74988, 773180, 2097602},  // n = 49
      {20, 734, 960, 8926, 18661, 58238, 180594, 236660, 243210, 1070837, 1862765},  // n = 50
  }};
  // clang-format on
  return table;
}

}  // namespace lieander
