#include "qpwalk/stepset.hpp"

#include <stdexcept>

namespace qpwalk {

step_set parse_grid(const std::string& s) {
  if (s.size() != 11 || s[3] != '/' || s[7] != '/')
    throw std::invalid_argument("parse_grid: expected \"abc/def/ghi\", got '" + s + "'");
  step_set out;
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) {
      char c = s[static_cast<size_t>(row * 4 + col)];
      if (c != '0' && c != '1')
        throw std::invalid_argument("parse_grid: only 0/1 steps are supported, got '" +
                                    std::string(1, c) + "'");
      int i = col - 1;
      int j = 1 - row;
      out.set(i, j, c - '0');
    }
  }
  if (out.at(0, 0) != 0)
    throw std::invalid_argument("parse_grid: the (0,0) non-step must be 0");
  return out;
}

std::string grid_str(const step_set& s) {
  std::string out;
  for (int row = 0; row < 3; ++row) {
    if (row) out += '/';
    for (int col = 0; col < 3; ++col)
      out += static_cast<char>('0' + s.at(col - 1, 1 - row));
  }
  return out;
}

std::vector<std::pair<int, int>> steps_of(const step_set& s) {
  std::vector<std::pair<int, int>> v;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j)
      if (s.at(i, j)) v.emplace_back(i, j);
  return v;
}

step_set mirror_xy(const step_set& s) {
  step_set out;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) out.set(i, j, s.at(j, i));
  return out;
}

bool is_nondegenerate(const step_set& s) {
  bool east = false, west = false, north = false, south = false;
  bool below_diag = false, above_diag = false, up_sum = false;
  for (auto [i, j] : steps_of(s)) {
    if (i > 0) east = true;
    if (i < 0) west = true;
    if (j > 0) north = true;
    if (j < 0) south = true;
    if (i > j) below_diag = true;
    if (i < j) above_diag = true;
    if (i + j > 0) up_sum = true;
  }
  return east && west && north && south && below_diag && above_diag && up_sum;
}

}  // namespace qpwalk
