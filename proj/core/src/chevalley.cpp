#include "chevkit/chevalley.hpp"

namespace chevkit {

std::vector<int> center_of_radical(const ParabolicDecomposition& ctx) {
  const auto& sys = ctx.system();
  std::vector<int> out;
  for (int z : ctx.radical_labels()) {
    bool central = true;
    for (int x : ctx.radical_labels()) {
      if (sys.sum_label(z, x) != 0) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(z);
  }
  return out;
}

}  // namespace chevkit
