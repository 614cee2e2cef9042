#include "chevkit/parabolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace chevkit {

int Cocharacter::pairing(const Root& zeta, const CartanDatum& datum) const {
  if (static_cast<int>(coroot_coeffs.size()) != datum.rank) {
    throw std::invalid_argument("cocharacter length does not match the rank");
  }
  int s = 0;
  for (int j = 0; j < datum.rank; ++j) {
    if (coroot_coeffs[j] == 0) continue;
    int p = 0;  // ⟨ζ, α_j∨⟩
    for (int i = 0; i < datum.rank; ++i) p += zeta.coords[i] * datum.matrix[i][j];
    s += coroot_coeffs[j] * p;
  }
  return s;
}

std::vector<int> lambda_weights(const Cocharacter& lambda, const RootSystem& system) {
  std::vector<int> w(system.size() + 1, 0);
  for (int l = 1; l <= system.size(); ++l) w[l] = lambda.pairing(system.root(l), system.datum());
  return w;
}

std::shared_ptr<const ParabolicDecomposition> ParabolicDecomposition::create(
    std::shared_ptr<const RootSystem> system, Cocharacter lambda, std::optional<std::vector<int>> m_radical) {
  auto d = std::shared_ptr<ParabolicDecomposition>(new ParabolicDecomposition());
  d->weights_ = lambda_weights(lambda, *system);
  for (int l = 1; l <= system->size(); ++l) {
    if (d->weights_[l] < 0) {
      throw std::invalid_argument("cocharacter is not dominant: label " + std::to_string(l) + " has weight " +
                                  std::to_string(d->weights_[l]));
    }
    (d->weights_[l] == 0 ? d->levi_ : d->radical_).push_back(l);
  }
  if (m_radical) {
    std::sort(m_radical->begin(), m_radical->end());
    for (int l : *m_radical) {
      if (!d->in_radical(l)) throw std::invalid_argument("M-radical label " + std::to_string(l) + " is not radical");
    }
  }
  d->system_ = std::move(system);
  d->lambda_ = std::move(lambda);
  d->m_radical_ = std::move(m_radical);
  return d;
}

std::vector<int> ParabolicDecomposition::lowest_layer() const {
  int lowest = 0;
  for (int l : radical_) lowest = lowest == 0 ? weights_[l] : std::min(lowest, weights_[l]);
  std::vector<int> out;
  for (int l : radical_) {
    if (weights_[l] == lowest) out.push_back(l);
  }
  return out;
}

bool ParabolicDecomposition::levi_letter(int i) const { return weights_.at(system_->simple_label(i)) == 0; }

bool ParabolicDecomposition::levi_word(const WeylWord& w) const {
  return std::all_of(w.letters().begin(), w.letters().end(), [this](int i) { return levi_letter(i); });
}

}  // namespace chevkit
