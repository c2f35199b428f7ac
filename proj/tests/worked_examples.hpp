#pragma once

// Worked examples with multiplicity 5: Apery tables and invariant tuples as
// published. alpha/beta/gamma are indexed from 1; rho is -1 where no value
// is stated.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace worked {

using Int = std::int64_t;

struct Example {
  std::vector<Int> generators;
  std::string golden;  ///< file name under tests/golden
  std::vector<std::vector<Int>> rows;
  Int r;
  std::vector<Int> alpha;
  std::map<std::pair<Int, Int>, Int> alpha_torsion;
  std::vector<Int> beta;
  std::vector<Int> gamma;
  Int rho;
};

inline const std::vector<Example>& examples() {
  static const std::vector<Example> all = {
      {{5, 6, 7}, "table_5_6_7.txt",
       {{0, 6, 7, 13, 14}, {5, 6, 7, 13, 14}, {10, 11, 12, 13, 14}},
       2, {2, 2}, {}, {2, 2}, {2, 2}, 6},
      {{5, 6, 9}, "table_5_6_9.txt",
       {{0, 6, 12, 18, 9}, {5, 6, 12, 18, 9}, {10, 11, 12, 18, 14}, {15, 16, 17, 18, 19}},
       3, {2, 1, 1}, {}, {2, 1, 1}, {2, 1, 1}, 7},
      {{5, 6, 13}, "table_5_6_13.txt",
       {{0, 6, 12, 13, 19}, {5, 6, 12, 13, 19}, {10, 11, 12, 18, 19}, {15, 16, 17, 18, 24}, {20, 21, 22, 23, 24}},
       4, {1, 1, 1, 1}, {{{1, 1}, 1}, {{2, 1}, 1}}, {1, 2, 1, 0}, {2, 2, 0, 0}, -1},
      {{5, 6, 14}, "table_5_6_14.txt",
       {{0, 6, 12, 18, 14}, {5, 6, 12, 18, 14}, {10, 11, 12, 18, 19}, {15, 16, 17, 18, 24}, {20, 21, 22, 23, 24}},
       4, {1, 1, 1, 1}, {{{1, 2}, 1}}, {1, 2, 1, 0}, {2, 1, 1, 0}, -1},
      {{5, 6, 19}, "table_5_6_19.txt",
       {{0, 6, 12, 18, 19}, {5, 6, 12, 18, 19}, {10, 11, 12, 18, 24}, {15, 16, 17, 18, 24}, {20, 21, 22, 23, 24}},
       4, {1, 1, 1, 1}, {{{1, 1}, 1}}, {1, 1, 2, 0}, {2, 1, 1, 0}, -1},
      {{5, 6, 7, 8}, "table_5_6_7_8.txt",
       {{0, 6, 7, 8, 14}, {5, 6, 7, 8, 14}, {10, 11, 12, 13, 14}},
       2, {3, 1}, {}, {3, 1}, {3, 1}, -1},
      {{5, 6, 9, 13}, "table_5_6_9_13.txt",
       {{0, 6, 12, 13, 9}, {5, 6, 12, 13, 9}, {10, 11, 12, 18, 14}, {15, 16, 17, 18, 19}},
       3, {2, 1, 1}, {{{1, 1}, 1}}, {2, 2, 0}, {3, 1, 0}, -1},
      {{5, 6, 13, 14}, "table_5_6_13_14.txt",
       {{0, 6, 12, 13, 14}, {5, 6, 12, 13, 14}, {10, 11, 12, 18, 19}, {15, 16, 17, 18, 24}, {20, 21, 22, 23, 24}},
       4, {1, 1, 1, 1}, {{{1, 1}, 1}, {{1, 2}, 1}}, {1, 3, 0, 0}, {3, 1, 0, 0}, -1},
  };
  return all;
}

}  // namespace worked
