#include "qpwalk/catalog.hpp"

namespace qpwalk {

const std::vector<catalog_entry>& catalog() {
  static const std::vector<catalog_entry> table = {
      {"IA.1", "101/000/011", false, true, 0},
      {"IA.2", "111/000/011", false, true, 0},
      {"IA.3", "111/100/001", false, true, 0},
      {"IA.4", "101/100/011", false, true, 0},
      {"IA.5", "111/101/001", false, true, 0},
      {"IA.6", "111/001/101", false, true, 0},
      {"IA.7", "111/100/011", false, true, 0},
      {"IA.8", "111/100/101", false, true, 0},
      {"IA.8b", "101/100/111", false, true, 0},
      {"IA.9", "111/101/011", false, true, 0},
      {"IB.1", "101/000/110", false, true, 0},
      {"IB.2", "101/100/010", false, true, 0},
      {"IB.3", "111/000/110", false, true, 0},
      {"IB.4", "111/100/010", false, true, 0},
      {"IB.5", "101/100/110", false, true, 0},
      {"IB.6", "111/100/110", false, true, 0},
      {"IC.1", "111/001/100", false, true, 0},
      {"IC.2", "111/001/010", false, true, 0},
      {"IC.3", "111/101/110", false, true, 0},
      {"IIA.1", "011/000/101", false, true, 0},
      {"IIA.2", "011/100/001", false, true, 0},
      {"IIA.3", "011/100/101", false, true, 0},
      {"IIA.4", "011/000/111", false, true, 0},
      {"IIA.5", "011/001/111", false, true, 0},
      {"IIA.6", "011/101/101", false, true, 0},
      {"IIA.7", "011/100/111", false, true, 0},
      {"IIB.1", "010/001/110", false, true, 0},
      {"IIB.2", "010/001/101", false, true, 0},
      {"IIB.3", "010/101/001", false, true, 0},
      {"IIB.4", "010/101/011", false, true, 0},
      {"IIB.5", "010/101/110", false, true, 0},
      {"IIB.6", "010/001/111", false, true, 0},
      {"IIB.7", "110/001/011", false, true, 0},
      {"IIB.8", "110/001/101", false, true, 0},
      {"IIB.9", "110/101/101", false, true, 0},
      {"IIB.10", "110/101/111", false, true, 0},
      {"IIC.1", "011/100/010", false, true, 0},
      {"IIC.2", "011/100/110", false, true, 0},
      {"IIC.3", "011/001/100", false, true, 0},
      {"IIC.4", "011/101/100", false, true, 0},
      {"IIC.5", "011/101/010", false, true, 0},
      {"IID.1", "010/100/011", false, true, 0},
      {"IID.2", "010/100/101", false, true, 0},
      {"IID.3", "110/000/101", false, true, 0},
      {"IID.4", "110/100/001", false, true, 0},
      {"IID.5", "010/100/111", false, true, 0},
      {"IID.6", "110/000/111", false, true, 0},
      {"IID.7", "110/100/011", false, true, 0},
      {"IID.8", "110/100/101", false, true, 0},
      {"IID.9", "110/100/111", false, true, 0},
      {"III", "001/100/110", false, true, 0},
      {"F.1", "100/001/100", true, true, 4},
      {"F.2", "010/001/100", true, true, 6},
      {"F.3", "100/101/100", true, true, 4},
      {"F.4", "001/101/100", true, true, 8},
      {"F.5", "101/000/010", true, true, 4},
      {"F.6", "111/000/010", true, true, 4},
      {"F.7", "001/100/010", true, true, 6},
      {"F.8", "100/001/010", true, true, 6},
      {"F.9", "010/101/010", true, true, 4},
      {"F.10", "101/101/010", true, true, 4},
      {"F.11", "111/101/010", true, true, 4},
      {"F.12", "110/001/110", true, true, 4},
      {"F.13", "110/101/110", true, true, 4},
      {"F.14", "011/101/110", true, true, 6},
      {"F.15", "100/101/001", true, true, 8},
      {"F.16", "101/000/101", true, true, 4},
      {"F.17", "111/000/101", true, true, 4},
      {"F.18", "101/100/101", true, true, 4},
      {"F.19", "101/101/101", true, true, 4},
      {"F.20", "111/101/101", true, true, 4},
      {"F.21", "110/101/011", true, true, 6},
      {"F.22", "111/100/111", true, true, 4},
      {"F.23", "111/101/111", true, true, 4},
      {"S.1", "110/000/001", false, false, 0},
      {"S.2", "101/000/001", false, false, 0},
      {"S.3", "111/000/001", false, false, 0},
      {"S.4", "110/001/001", false, false, 0},
      {"S.5", "111/001/001", false, false, 0},
  };
  return table;
}

const catalog_entry* catalog_find_label(const std::string& label) {
  for (const auto& e : catalog())
    if (e.label == label) return &e;
  return nullptr;
}

grid_match catalog_find_grid(const step_set& s) {
  std::string g = grid_str(s);
  for (const auto& e : catalog())
    if (e.grid == g) return {&e, false};
  std::string m = grid_str(mirror_xy(s));
  for (const auto& e : catalog())
    if (e.grid == m) return {&e, true};
  return {};
}

}  // namespace qpwalk
