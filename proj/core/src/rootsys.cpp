#include "chevkit/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chevkit/errors.hpp"

namespace chevkit {

// ---------------------------------------------------------------- CartanDatum

void CartanDatum::validate() const {
  if (rank <= 0) throw std::invalid_argument("rank must be positive");
  if (static_cast<int>(matrix.size()) != rank) throw std::invalid_argument("Cartan matrix has wrong row count");
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(matrix[i].size()) != rank) throw std::invalid_argument("Cartan matrix is not square");
    for (int j = 0; j < rank; ++j) {
      const int a = matrix[i][j];
      if (i == j && a != 2) throw NonSimplyLaced("diagonal entry " + std::to_string(i) + " is not 2");
      if (i != j && a != 0 && a != -1) {
        throw NonSimplyLaced("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(a));
      }
      if (a != matrix[j][i]) throw NonSimplyLaced("Cartan matrix is not symmetric");
    }
  }
  for (const auto* v : {&names, &symbols, &letters}) {
    if (!v->empty() && static_cast<int>(v->size()) != rank) {
      throw std::invalid_argument("simple root name list has wrong length");
    }
  }
}

int CartanDatum::simple_index(const std::string& id) const {
  for (int i = 0; i < rank; ++i) {
    for (const auto* v : {&names, &symbols, &letters}) {
      if (i < static_cast<int>(v->size()) && (*v)[i] == id) return i;
    }
  }
  return -1;
}

CartanDatum CartanDatum::from_edges(int rank, const std::vector<std::pair<int, int>>& edges,
                                    std::vector<std::string> names) {
  CartanDatum d;
  d.rank = rank;
  d.matrix.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) d.matrix[i][i] = 2;
  for (auto [a, b] : edges) {
    d.matrix[a][b] = -1;
    d.matrix[b][a] = -1;
  }
  if (names.empty()) {
    for (int i = 0; i < rank; ++i) names.push_back("r" + std::to_string(i + 1));
  }
  d.names = names;
  d.symbols = names;
  d.letters = names;
  return d;
}

CartanDatum CartanDatum::type_a(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return from_edges(n, edges);
}

CartanDatum CartanDatum::e7() {
  CartanDatum d = from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}},
                             {"alpha", "beta", "gamma", "delta", "epsilon", "eta", "sigma"});
  d.symbols = {"α", "β", "γ", "δ", "ε", "η", "σ"};
  d.letters = {"a", "b", "c", "d", "e", "h", "s"};
  return d;
}

// ---------------------------------------------------------------- Root

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::is_positive() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; }) &&
         std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
}

bool Root::is_negative() const { return (-*this).is_positive(); }

Root Root::operator-() const {
  Root r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

Root operator+(const Root& x, const Root& y) {
  Root r = x;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += y.coords[i];
  return r;
}

std::string Root::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

int pairing(const Root& zeta, const Root& xi, const CartanDatum& datum) {
  int s = 0;
  for (int i = 0; i < datum.rank; ++i) {
    if (zeta.coords[i] == 0) continue;
    for (int j = 0; j < datum.rank; ++j) s += zeta.coords[i] * datum.matrix[i][j] * xi.coords[j];
  }
  return s;
}

Root reflect(const Root& zeta, const Root& xi, const CartanDatum& datum) {
  const int n = pairing(zeta, xi, datum);
  Root r = zeta;
  for (int i = 0; i < datum.rank; ++i) r.coords[i] -= n * xi.coords[i];
  return r;
}

// ---------------------------------------------------------------- LabelTable

LabelTable LabelTable::parse_csv(const std::string& text) {
  LabelTable table;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(s);
    while (std::getline(ls, cell, ',')) {
      cell.erase(0, cell.find_first_not_of(" \t\r"));
      cell.erase(cell.find_last_not_of(" \t\r") + 1);
      cells.push_back(cell);
    }
    return cells;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    auto cells = split(line);
    if (table.columns.empty()) {
      if (cells.empty() || cells[0] != "label") throw ParseError("root table header must start with 'label'");
      table.columns.assign(cells.begin() + 1, cells.end());
      continue;
    }
    if (cells.size() != table.columns.size() + 1) {
      throw ParseError("root table line " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                       " cells");
    }
    LabelRow row;
    try {
      row.label = std::stoi(cells[0]);
      for (size_t i = 1; i < cells.size(); ++i) row.coeffs.push_back(std::stoi(cells[i]));
    } catch (const std::exception&) {
      throw ParseError("root table line " + std::to_string(line_no) + " is not numeric");
    }
    table.rows.push_back(std::move(row));
  }
  if (table.columns.empty()) throw ParseError("root table is empty");
  return table;
}

LabelTable LabelTable::read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open root table '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

std::string LabelTable::to_csv() const {
  std::string out = "label";
  for (const auto& c : columns) out += "," + c;
  out += "\n";
  for (const auto& r : rows) {
    out += std::to_string(r.label);
    for (int c : r.coeffs) out += "," + std::to_string(c);
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------- RootSystem

RootSystem RootSystem::generate(const CartanDatum& datum, std::size_t bound) {
  datum.validate();
  const int n = datum.rank;
  std::vector<Root> simples;
  for (int i = 0; i < n; ++i) {
    Root r{Coords(n, 0)};
    r.coords[i] = 1;
    simples.push_back(r);
  }
  std::set<Coords> seen;
  std::deque<Root> queue;
  for (const auto& s : simples) {
    seen.insert(s.coords);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (const auto& s : simples) {
      Root img = chevkit::reflect(r, s, datum);
      if (!img.is_positive() || seen.count(img.coords)) continue;
      if (seen.size() >= bound) {
        throw NonFinite("root closure exceeds " + std::to_string(bound) + " positive roots");
      }
      seen.insert(img.coords);
      queue.push_back(std::move(img));
    }
  }
  RootSystem sys;
  sys.datum_ = datum;
  for (const auto& c : seen) sys.internal_.push_back(Root{c});
  std::sort(sys.internal_.begin(), sys.internal_.end(), [](const Root& x, const Root& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.coords > y.coords;  // simple root 1 before simple root 2, etc.
  });
  sys.by_label_.assign(1, Root{});
  sys.by_label_.insert(sys.by_label_.end(), sys.internal_.begin(), sys.internal_.end());
  sys.build_index();
  return sys;
}

void RootSystem::build_index() {
  index_.clear();
  const int n = size();
  for (int l = 1; l <= n; ++l) {
    index_[by_label_[l].coords] = l;
    index_[(-by_label_[l]).coords] = -l;
  }
  const int w = 2 * n + 1;
  sums_.assign(static_cast<size_t>(w) * w, 0);
  for (int x = -n; x <= n; ++x) {
    if (x == 0) continue;
    for (int y = -n; y <= n; ++y) {
      if (y == 0) continue;
      auto l = label_of(root(x) + root(y));
      sums_[static_cast<size_t>(x + n) * w + (y + n)] = l.value_or(0);
    }
  }
}

Root RootSystem::root(int label) const {
  if (!is_label(label)) throw std::out_of_range("no root with label " + std::to_string(label));
  return label > 0 ? by_label_[label] : -by_label_[-label];
}

std::optional<int> RootSystem::label_of(const Coords& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::simple_label(int i) const {
  Coords c(rank(), 0);
  c.at(i) = 1;
  return *label_of(c);
}

int RootSystem::sum_label(int x, int y) const {
  const int n = size();
  if (!is_label(x) || !is_label(y)) throw std::out_of_range("sum_label: bad label");
  return sums_[static_cast<size_t>(x + n) * (2 * n + 1) + (y + n)];
}

int RootSystem::pairing(int x, int y) const { return chevkit::pairing(root(x), root(y), datum_); }

int RootSystem::reflect(int x, int y) const { return *label_of(chevkit::reflect(root(x), root(y), datum_)); }

int RootSystem::coefficient(int label, int i) const { return root(label).coords.at(i); }

namespace {

// Maps table columns onto datum simple-root indices.
std::vector<int> column_map(const CartanDatum& datum, const LabelTable& table) {
  if (static_cast<int>(table.columns.size()) != datum.rank) {
    throw LabelMismatch(0, "table has " + std::to_string(table.columns.size()) + " coefficient columns, rank is " +
                               std::to_string(datum.rank));
  }
  std::vector<int> map;
  for (const auto& c : table.columns) {
    const int idx = datum.simple_index(c);
    if (idx < 0) throw LabelMismatch(0, "unknown column '" + c + "'");
    map.push_back(idx);
  }
  return map;
}

}  // namespace

ValidationReport validate_labeling(const RootSystem& system, const LabelTable& table,
                                   const std::vector<WeightBand>& bands) {
  const auto cols = column_map(system.datum(), table);
  const int n = system.size();
  std::set<int> labels_seen;
  std::set<Coords> roots_seen;
  ValidationReport report;
  report.expected = n;
  for (const auto& row : table.rows) {
    if (row.label < 1 || row.label > n) throw LabelMismatch(row.label, "label out of range 1.." + std::to_string(n));
    if (!labels_seen.insert(row.label).second) throw LabelMismatch(row.label, "duplicate label");
    Coords c(system.rank(), 0);
    for (size_t k = 0; k < cols.size(); ++k) c[cols[k]] = row.coeffs.at(k);
    auto l = system.label_of(c);
    if (!l || *l < 0) throw LabelMismatch(row.label, "coefficients " + Root{c}.to_string() + " are not a positive root");
    if (!roots_seen.insert(c).second) throw LabelMismatch(row.label, "coefficient vector repeats an earlier row");
    ++report.matched;
  }
  if (report.matched != n) {
    int missing = 1;
    while (labels_seen.count(missing)) ++missing;
    throw LabelMismatch(missing, "table covers " + std::to_string(report.matched) + " of " + std::to_string(n) +
                                     " positive roots");
  }
  for (const auto& band : bands) {
    for (const auto& row : table.rows) {
      if (row.label < band.first || row.label > band.last) continue;
      int coeff = 0;
      for (size_t k = 0; k < cols.size(); ++k) {
        if (cols[k] == band.simple) coeff = row.coeffs[k];
      }
      if (coeff != band.value) {
        throw LabelMismatch(row.label, "coefficient of " + system.datum().names[band.simple] + " is " +
                                           std::to_string(coeff) + ", expected " + std::to_string(band.value));
      }
    }
    report.notes.push_back("labels " + std::to_string(band.first) + "-" + std::to_string(band.last) + " have " +
                           system.datum().names[band.simple] + "-coefficient " + std::to_string(band.value));
  }
  report.valid = true;
  return report;
}

RootSystem RootSystem::relabel(const LabelTable& table, const std::vector<WeightBand>& bands) const {
  validate_labeling(*this, table, bands);
  const auto cols = column_map(datum_, table);
  RootSystem out = *this;
  out.by_label_.assign(size() + 1, Root{});
  for (const auto& row : table.rows) {
    Coords c(rank(), 0);
    for (size_t k = 0; k < cols.size(); ++k) c[cols[k]] = row.coeffs[k];
    out.by_label_[row.label] = Root{c};
  }
  out.build_index();
  return out;
}

}  // namespace chevkit
