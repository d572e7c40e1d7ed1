#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace qpwalk {

// A small-step model: subset of {-1,0,1}^2 \ {(0,0)} with 0/1 indicator
// weights d(i,j).
struct step_set {
  std::array<std::array<int, 3>, 3> d{};  // d[i+1][j+1]

  int at(int i, int j) const { return d[i + 1][j + 1]; }
  void set(int i, int j, int v) { d[i + 1][j + 1] = v; }

  friend bool operator==(const step_set& a, const step_set& b) { return a.d == b.d; }
};

// Grid syntax "abc/def/ghi": rows list j = +1, 0, -1 top to bottom, columns
// i = -1, 0, +1 left to right, so the string reads like a picture of the
// step diagram.  Digits other than 0 and 1 (weighted models) are rejected.
step_set parse_grid(const std::string& s);
std::string grid_str(const step_set& s);

std::vector<std::pair<int, int>> steps_of(const step_set& s);

// Reflection through the diagonal: (i,j) -> (j,i).
step_set mirror_xy(const step_set& s);

inline bool is_symmetric(const step_set& s) { return mirror_xy(s) == s; }

// True for models whose quarter-plane counting problem is genuinely
// two-dimensional: steps on both sides of each axis and of the diagonal, and
// at least one step that increases i+j (otherwise every walk is frozen at
// the origin or the model is a half-plane problem in disguise).
bool is_nondegenerate(const step_set& s);

}  // namespace qpwalk
