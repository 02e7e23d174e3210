// Reference values for the reproduction tests: square triangular numbers,
// near-isosceles triples, the j_i(k) matrix, and the discriminant scan hits
// for j = 0 and j = 1..18 over m,k in [1,100].
#pragma once

#include <utility>
#include <vector>

namespace golden {

struct TdPair {
  long t, d;
};

inline const std::vector<TdPair>& square_triangular() {
  static const std::vector<TdPair> v{{0, 0},    {1, 1},     {8, 6},
                                     {49, 35},  {288, 204}, {1681, 1189}};
  return v;
}

struct Triple {
  long a, b, c;  // a^2 + b^2 = c^2, b = a + 1
};

inline const std::vector<Triple>& near_isosceles_triples() {
  static const std::vector<Triple> v{
      {3, 4, 5},           {20, 21, 29},         {119, 120, 169},
      {696, 697, 985},     {4059, 4060, 5741},   {23660, 23661, 33461},
      {137903, 137904, 195025}, {803760, 803761, 1136689}};
  return v;
}

inline const std::vector<long>& dostor_sums() {
  static const std::vector<long> v{25, 365, 2030, 7230, 19855, 45955};
  return v;
}

// j_i(k) for k = 1..8 (rows) and i = 0..8 (columns).
inline const char* const (&j_table())[8][9] {
  static const char* const t[8][9] = {
      {"0", "7", "48", "287", "1680", "9799", "57120", "332927", "1940448"},
      {"0", "22", "240", "2398", "23760", "235222", "2328480", "23049598",
       "228167520"},
      {"0", "45", "672", "9405", "131040", "1825197", "25421760", "354079485",
       "4931691072"},
      {"0", "76", "1440", "25916", "465120", "8346316", "149768640",
       "2687489276", "48225038400"},
      {"0", "115", "2640", "58075", "1275120", "27994675", "614607840",
       "13493377915", "296239706400"},
      {"0", "162", "4368", "113562", "2948400", "76544994", "1987221600",
       "51591216762", "1339384414368"},
      {"0", "217", "6720", "201593", "6041280", "181037017", "5425069440",
       "162571046393", "4871706322560"},
      {"0", "280", "9792", "332920", "11309760", "384199192", "13051463040",
       "443365544440", "15061377048192"}};
  return t;
}

struct DiscCase {
  long m, k;
  const char* n_lo;
  const char* n_hi;  // equal to n_lo for a double root
  long sqrt_d;
  bool double_root;
};

// All rational-root cases for j = 0, 1 <= m,k <= 100 (roots in ascending
// order, one entry per (m,k)).
inline const std::vector<DiscCase>& table4() {
  static const std::vector<DiscCase> v{
      {7, 2, "3", "5", 16, false},
      {8, 8, "-34/9", "26", 268, false},
      {17, 7, "3", "175/9", 296, false},
      {24, 10, "4", "28", 600, false},
      {25, 13, "1", "37", 936, false},
      {25, 25, "-155/13", "85", 2520, false},
      {53, 39, "-32/3", "120", 7056, false},
      {55, 17, "35/2", "1339/28", 1698, false},
      {62, 22, "137/9", "435/7", 2956, false},
      {89, 37, "649/45", "105", 8152, false}};
  return v;
}

// Perfect-square discriminant cases for each j in 1..18, m,k in [1,100].
inline const std::vector<std::pair<long, std::vector<DiscCase>>>& table5() {
  static const std::vector<std::pair<long, std::vector<DiscCase>>> v{
      {1,
       {{7, 2, "2", "13/2", 36, false},
        {16, 4, "108/17", "12", 96, false},
        {22, 22, "-11", "77", 2024, false},
        {31, 7, "17", "35/2", 16, false},
        {31, 13, "35/8", "38", 1076, false},
        {31, 24, "-8", "153/2", 2704, false},
        {54, 32, "-3", "477/5", 5412, false},
        {62, 15, "85/3", "289/7", 816, false},
        {79, 35, "19/2", "101", 7320, false}}},
      {2,
       {{5, 5, "-10/3", "20", 140, false},
        {9, 5, "-1", "17", 180, false},
        {21, 9, "2", "28", 572, false},
        {22, 8, "91/23", "25", 484, false},
        {31, 38, "-23", "149", 5504, false},
        {40, 15, "305/41", "45", 1540, false},
        {48, 49, "-25", "175", 9800, false},
        {62, 14, "31", "343/9", 448, false},
        {62, 15, "80/3", "304/7", 1056, false},
        {63, 14, "35", "35", 0, true}}},
      {3,
       {{16, 11, "-66/17", "38", 712, false},
        {24, 25, "-14", "94", 2700, false},
        {30, 27, "-395/31", "95", 3340, false},
        {31, 10, "57/8", "32", 796, false},
        {32, 10, "260/33", "32", 796, false},
        {47, 83, "-727/12", "405", 22348, false},
        {55, 14, "41/2", "43", 1260, false},
        {62, 14, "257/9", "41", 784, false},
        {62, 25, "83/9", "75", 4144, false},
        {62, 71, "-283/7", "2423/9", 19508, false},
        {70, 35, "175/71", "105", 7280, false},
        {71, 71, "-71/2", "2272/9", 20732, false},
        {79, 36, "71/10", "107", 7992, false}}},
      {4,
       {{7, 7, "-21/4", "63/2", 294, false},
        {9, 1, "5", "5", 0, true},
        {17, 3, "7", "37/3", 96, false},
        {31, 6, "29/2", "81/4", 184, false},
        {31, 10, "13/2", "133/4", 856, false},
        {31, 19, "-67/16", "125/2", 2134, false},
        {45, 69, "-48", "312", 16560, false},
        {54, 11, "30", "30", 0, true}}},
      {5,
       {{7, 2, "0", "21/2", 84, false},
        {8, 3, "-2/3", "14", 132, false},
        {23, 14, "-4", "295/6", 1276, false},
        {30, 58, "-1403/31", "311", 11044, false},
        {40, 42, "-972/41", "160", 7532, false},
        {48, 14, "90/7", "46", 1624, false},
        {79, 41, "3/20", "126", 10068, false}}},
      {6,
       {{9, 1, "3", "37/5", 44, false},
        {21, 3, "10", "148/11", 76, false},
        {24, 4, "10", "86/5", 180, false},
        {32, 32, "-604/33", "124", 4696, false},
        {48, 35, "-87/7", "119", 6440, false},
        {54, 16, "69/5", "53", 2156, false},
        {57, 11, "29", "999/29", 316, false},
        {79, 84, "-46", "314", 28800, false}}},
      {7,
       {{22, 23, "-15", "97", 2576, false},
        {31, 17, "-7/2", "60", 2032, false},
        {32, 25, "-380/33", "92", 3416, false},
        {48, 77, "-56", "368", 20776, false},
        {70, 94, "-4371/71", "399", 32700, false},
        {71, 15, "92/3", "99/2", 1356, false},
        {71, 22, "155/9", "143/2", 3908, false}}},
      {8,
       {{7, 3, "-5/2", "71/4", 162, false},
        {21, 3, "8", "16", 176, false},
        {31, 6, "21/2", "103/4", 488, false},
        {32, 5, "157/11", "65/3", 244, false},
        {32, 11, "11/3", "41", 1232, false},
        {41, 17, "47/21", "59", 2384, false},
        {49, 27, "-21/5", "91", 4760, false},
        {56, 38, "-12", "388/3", 8056, false},
        {62, 20, "115/9", "67", 3416, false},
        {85, 43, "0", "136", 11696, false},
        {94, 49, "-6/5", "154", 14744, false}}},
      {9,
       {{7, 2, "-3/2", "14", 124, false},
        {16, 5, "4/17", "24", 404, false},
        {16, 53, "-840/17", "452", 8524, false},
        {23, 26, "-37/2", "352/3", 3260, false},
        {24, 10, "-4/5", "40", 1020, false},
        {31, 24, "-12", "185/2", 3344, false},
        {31, 40, "-57/2", "182", 6736, false},
        {54, 24, "9/5", "81", 4356, false},
        {79, 30, "11", "389/4", 6900, false},
        {79, 51, "-13", "337/2", 14520, false}}},
      {10,
       {{25, 3, "11", "17", 156, false},
        {31, 8, "6", "34", 896, false},
        {47, 76, "-57", "1129/3", 20800, false},
        {48, 11, "101/7", "43", 1400, false},
        {48, 18, "32/7", "64", 2912, false},
        {48, 49, "-29", "195", 10976, false},
        {80, 27, "15", "269/3", 6048, false},
        {94, 47, "0", "752/5", 14288, false}}},
      {11,
       {{23, 14, "-41/6", "59", 1580, false},
        {31, 7, "7", "255/8", 796, false},
        {31, 8, "11/2", "35", 944, false},
        {62, 11, "193/7", "379/9", 916, false},
        {62, 56, "-29", "1891/9", 15064, false},
        {79, 22, "83/4", "382/5", 4452, false},
        {80, 43, "-14/3", "142", 11880, false}}},
      {12,
       {{14, 2, "7/3", "77/5", 196, false},
        {16, 5, "-1", "27", 476, false},
        {23, 2, "37/3", "13", 16, false},
        {25, 13, "-5", "55", 1560, false},
        {31, 7, "13/2", "525/16", 842, false},
        {55, 41, "-71/4", "2105/14", 9414, false},
        {57, 17, "11", "63", 3016, false},
        {62, 13, "150/7", "458/9", 1856, false},
        {78, 67, "-32", "244", 21804, false},
        {80, 30, "10", "910/9", 7380, false},
        {95, 19, "1957/48", "133/2", 2470, false}}},
      {13,
       {{16, 4, "0", "24", 408, false},
        {54, 9, "111/5", "39", 924, false},
        {70, 13, "2025/71", "51", 1596, false},
        {80, 14, "38", "154/3", 1080, false}}},
      {14,
       {{7, 3, "-19/4", "49/2", 234, false},
        {21, 11, "-6", "52", 1276, false},
        {31, 3, "267/16", "35/2", 26, false},
        {38, 77, "-194/3", "462", 20540, false},
        {48, 21, "-1", "79", 3920, false},
        {62, 16, "15", "1307/21", 2976, false},
        {89, 37, "19/3", "623/5", 10644, false}}},
      {15,
       {{22, 31, "-27", "173", 4600, false},
        {32, 17, "-20/3", "788/11", 2584, false},
        {48, 6, "176/7", "28", 140, false},
        {48, 83, "-66", "446", 25088, false},
        {95, 61, "-209/12", "209", 21736, false}}},
      {16,
       {{7, 7, "-21/2", "231/4", 546, false},
        {31, 20, "-11", "87", 3136, false},
        {62, 14, "17", "175/3", 2604, false},
        {62, 26, "1", "287/3", 5964, false},
        {79, 69, "-71/2", "2089/8", 23730, false}}},
      {17,
       {{23, 2, "8", "109/6", 244, false},
        {31, 3, "51/4", "22", 296, false},
        {47, 83, "-135/2", "1381/3", 25336, false},
        {54, 15, "9", "687/11", 2940, false}}},
      {18,
       {{14, 2, "1/3", "19", 280, false},
        {57, 11, "17", "51", 1972, false},
        {62, 8, "2117/63", "35", 88, false},
        {79, 12, "38", "50", 960, false},
        {80, 12, "40", "440/9", 720, false}}}};
  return v;
}

}  // namespace golden
