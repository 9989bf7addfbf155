#include "qdr/exterior.hpp"

namespace qdr {

std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

Mask mask_of(const std::vector<int>& sorted_indices) {
  Mask m = 0;
  for (int i : sorted_indices) m |= bit_of(i);
  return m;
}

int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  // insertion sort counting transpositions; lists are short
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

bool lex_less(Mask a, Mask b) { return indices_of(a) < indices_of(b); }

std::vector<Mask> blades_of_degree(int dim, int degree) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << dim); ++m)
    if (degree_of(m) == degree) out.push_back(m);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<Mask> blades_by_degree(int dim) {
  std::vector<Mask> out;
  for (int k = 0; k <= dim; ++k) {
    auto part = blades_of_degree(dim, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string blade_name(Mask m, const std::string& prefix) {
  std::string out;
  for (int i : indices_of(m)) out += (out.empty() ? "" : "^") + prefix + std::to_string(i);
  return out;
}

}  // namespace qdr
