#include "chevkit/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "chevkit/errors.hpp"

namespace chevkit {

// ---------------------------------------------------------------- WeylWord

WeylWord WeylWord::parse(const std::string& text, const CartanDatum& datum) {
  std::vector<int> letters;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::string id = token;
    if (id.rfind("n_", 0) == 0) id = id.substr(2);
    const int idx = datum.simple_index(id);
    if (idx < 0) throw UnknownLetter("unknown simple root '" + token + "'");
    letters.push_back(idx);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return WeylWord(std::move(letters));
}

WeylWord operator*(const WeylWord& lhs, const WeylWord& rhs) {
  std::vector<int> l = lhs.letters_;
  l.insert(l.end(), rhs.letters_.begin(), rhs.letters_.end());
  return WeylWord(std::move(l));
}

WeylWord WeylWord::inverse() const {
  return WeylWord(std::vector<int>(letters_.rbegin(), letters_.rend()));
}

std::string WeylWord::to_string(const CartanDatum& datum) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int l : letters_) {
    if (!out.empty()) out += " ";
    out += "n_" + (datum.symbols.empty() ? std::to_string(l) : datum.symbols.at(l));
  }
  return out;
}

// ---------------------------------------------------------------- RootPermutation

RootPermutation RootPermutation::identity(int n) {
  RootPermutation p;
  p.n_ = n;
  p.images_.resize(n + 1);
  std::iota(p.images_.begin(), p.images_.end(), 0);
  return p;
}

RootPermutation RootPermutation::from_images(std::vector<int> positive_images) {
  RootPermutation p;
  p.n_ = static_cast<int>(positive_images.size()) - 1;
  p.images_ = std::move(positive_images);
  std::vector<bool> hit(p.n_ + 1, false);
  for (int l = 1; l <= p.n_; ++l) {
    const int a = std::abs(p.images_[l]);
    if (a < 1 || a > p.n_ || hit[a]) throw std::invalid_argument("images do not form a signed permutation");
    hit[a] = true;
  }
  return p;
}

int RootPermutation::operator()(int label) const {
  if (label == 0 || std::abs(label) > n_) throw std::out_of_range("label outside permutation degree");
  return label > 0 ? images_[label] : -images_[-label];
}

RootPermutation operator*(const RootPermutation& lhs, const RootPermutation& rhs) {
  if (lhs.n_ != rhs.n_) throw std::invalid_argument("composing permutations of different degree");
  RootPermutation p = RootPermutation::identity(lhs.n_);
  for (int l = 1; l <= lhs.n_; ++l) p.images_[l] = lhs(rhs(l));
  return p;
}

RootPermutation RootPermutation::inverse() const {
  RootPermutation p = identity(n_);
  for (int l = 1; l <= n_; ++l) {
    const int img = images_[l];
    p.images_[std::abs(img)] = img > 0 ? l : -l;
  }
  return p;
}

RootPermutation RootPermutation::pow(int e) const {
  RootPermutation base = e < 0 ? inverse() : *this;
  RootPermutation r = identity(n_);
  for (int k = std::abs(e); k > 0; --k) r = r * base;
  return r;
}

bool RootPermutation::is_identity() const {
  for (int l = 1; l <= n_; ++l) {
    if (images_[l] != l) return false;
  }
  return true;
}

bool RootPermutation::stabilizes(const std::vector<int>& domain) const {
  std::set<int> dom(domain.begin(), domain.end());
  return std::all_of(domain.begin(), domain.end(), [&](int l) { return dom.count((*this)(l)) > 0; });
}

std::string RootPermutation::cycles(const std::vector<int>& domain) const {
  std::set<int> dom(domain.begin(), domain.end());
  for (int l : dom) {
    if (!dom.count((*this)(l))) {
      throw DomainNotStable("label " + std::to_string(l) + " maps to " + std::to_string((*this)(l)) +
                            " outside the domain");
    }
  }
  std::set<int> done;
  std::string out;
  for (int start : dom) {
    if (done.count(start) || (*this)(start) == start) continue;
    out += "(";
    int x = start;
    bool first = true;
    do {
      if (!first) out += " ";
      out += std::to_string(x);
      done.insert(x);
      first = false;
      x = (*this)(x);
    } while (x != start);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

RootPermutation parse_cycles(const std::string& text, int n) {
  std::vector<int> images(n + 1);
  for (int l = 0; l <= n; ++l) images[l] = l;
  std::vector<int> cycle;
  std::string num;
  auto close_num = [&] {
    if (!num.empty()) {
      cycle.push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      num += c;
    } else if (c == '(') {
      cycle.clear();
    } else if (c == ')') {
      close_num();
      for (size_t i = 0; i < cycle.size(); ++i) {
        const int from = cycle[i];
        const int to = cycle[(i + 1) % cycle.size()];
        if (from < 1 || from > n) throw ParseError("cycle entry out of range: " + std::to_string(from));
        images[from] = to;
      }
      cycle.clear();
    } else {
      close_num();
    }
  }
  return RootPermutation::from_images(std::move(images));
}

RootPermutation word_to_permutation(const WeylWord& word, const RootSystem& system) {
  const int n = system.size();
  std::vector<int> simple_labels;
  for (int l : word.letters()) {
    if (l < 0 || l >= system.rank()) throw UnknownLetter("letter index " + std::to_string(l) + " out of range");
    simple_labels.push_back(system.simple_label(l));
  }
  std::vector<int> images(n + 1, 0);
  for (int x = 1; x <= n; ++x) {
    int y = x;
    for (auto it = simple_labels.rbegin(); it != simple_labels.rend(); ++it) y = system.reflect(y, *it);
    images[x] = y;
  }
  return RootPermutation::from_images(std::move(images));
}

std::vector<int> label_range(int lo, int hi) {
  std::vector<int> out;
  for (int l = lo; l <= hi; ++l) out.push_back(l);
  return out;
}

// ---------------------------------------------------------------- orbits

int OrbitPartition::key_of(int label) const {
  for (const auto& [key, members] : orbits) {
    if (std::binary_search(members.begin(), members.end(), label)) return key;
  }
  throw std::out_of_range("label " + std::to_string(label) + " is not in the partition");
}

std::vector<std::size_t> OrbitPartition::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& [key, members] : orbits) out.push_back(members.size());
  return out;
}

OrbitPartition orbits(const std::vector<RootPermutation>& generators, const std::vector<int>& domain) {
  std::set<int> dom(domain.begin(), domain.end());
  for (const auto& g : generators) {
    for (int l : dom) {
      if (!dom.count(g(l))) {
        throw DomainNotStable("label " + std::to_string(l) + " escapes the domain (image " + std::to_string(g(l)) +
                              ")");
      }
    }
  }
  OrbitPartition part;
  std::set<int> seen;
  for (int start : dom) {
    if (seen.count(start)) continue;
    std::vector<int> members{start};
    std::deque<int> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (const auto& g : generators) {
        const int y = g(x);
        if (seen.insert(y).second) {
          members.push_back(y);
          queue.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    part.orbits.emplace(members.front(), std::move(members));
  }
  return part;
}

// ---------------------------------------------------------------- closure

RootPermutation GroupDescription::evaluate(const std::vector<int>& word) const {
  const int n = generators.empty() ? (elements.empty() ? 0 : elements.front().degree()) : generators.front().degree();
  RootPermutation r = RootPermutation::identity(n);
  for (int k : word) {
    if (k == 0 || std::abs(k) > static_cast<int>(generators.size())) {
      throw std::out_of_range("relation refers to a missing generator");
    }
    const auto& g = generators[std::abs(k) - 1];
    r = r * (k > 0 ? g : g.inverse());
  }
  return r;
}

bool GroupDescription::relation_holds(const std::vector<int>& word) const { return evaluate(word).is_identity(); }

GroupDescription group_closure(const std::vector<RootPermutation>& generators, std::size_t max_order) {
  if (generators.empty()) throw std::invalid_argument("group_closure needs at least one generator");
  GroupDescription desc;
  desc.generators = generators;
  std::set<RootPermutation> seen;
  std::deque<RootPermutation> queue;
  const auto id = RootPermutation::identity(generators.front().degree());
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const RootPermutation x = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      RootPermutation y = g * x;
      if (seen.insert(y).second) {
        if (seen.size() > max_order) {
          throw OrderBound("generated group exceeds " + std::to_string(max_order) + " elements");
        }
        queue.push_back(std::move(y));
      }
    }
  }
  desc.elements.assign(seen.begin(), seen.end());
  return desc;
}

}  // namespace chevkit
