#pragma once

// Young diagrams, r-tuples of diagrams and r-tableaux.
//
// Cells are addressed (component, row, column), 1-based, row-major. Empty
// components are allowed everywhere.

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hspecht/errors.hpp"
#include "hspecht/permutation.hpp"

namespace hspecht {

/// Weakly decreasing positive row lengths.
using Partition = std::vector<int>;

inline int partition_size(const Partition& p) {
  int s = 0;
  for (int v : p) s += v;
  return s;
}

inline bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

/// Partitions of n in decreasing lexicographic order: (3), (2,1), (1,1,1).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Column lengths of a partition.
inline Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 0; j < p[0]; ++j) {
    int len = 0;
    for (int row : p)
      if (row > j) ++len;
    c.push_back(len);
  }
  return c;
}

/// Product of the hook lengths of all cells.
inline long long hook_product(const Partition& p) {
  if (!is_partition(p)) throw InvalidArgument("not a partition");
  Partition cols = conjugate(p);
  long long prod = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int arm = p[i] - j - 1;
      int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      prod *= arm + leg + 1;
    }
  return prod;
}

/// r-tuple of Young diagrams.
struct RDiagram {
  std::vector<Partition> components;

  int r() const { return static_cast<int>(components.size()); }
  int size() const {
    int s = 0;
    for (const auto& c : components) s += partition_size(c);
    return s;
  }

  void validate() const {
    if (components.empty()) throw InvalidArgument("r-diagram needs at least one component");
    for (const auto& c : components)
      if (!is_partition(c)) throw InvalidArgument("component is not a partition");
  }

  /// `[(2,1)|()]`
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t v = 0; v < components.size(); ++v) {
      if (v) s += "|";
      s += "(";
      for (std::size_t i = 0; i < components[v].size(); ++i) {
        if (i) s += ",";
        s += std::to_string(components[v][i]);
      }
      s += ")";
    }
    return s + "]";
  }

  friend bool operator==(const RDiagram& a, const RDiagram& b) { return a.components == b.components; }
  friend bool operator!=(const RDiagram& a, const RDiagram& b) { return !(a == b); }
  friend bool operator<(const RDiagram& a, const RDiagram& b) { return a.components < b.components; }
};

/// All r-diagrams with n cells, in decreasing lexicographic order of the
/// sequence of components: for r=2, n=2 this is ((2),∅), ((1,1),∅),
/// ((1),(1)), (∅,(2)), (∅,(1,1)).
inline std::vector<RDiagram> enumerate_rdiagrams(int r, int n) {
  if (r < 1) throw InvalidArgument("r must be positive");
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  std::vector<RDiagram> out;
  std::vector<Partition> comps(static_cast<std::size_t>(r));
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == r - 1) {
      for (const auto& p : partitions_of(left)) {
        comps[static_cast<std::size_t>(v)] = p;
        out.push_back(RDiagram{comps});
      }
      return;
    }
    for (int k = left; k >= 0; --k)
      for (const auto& p : partitions_of(k)) {
        comps[static_cast<std::size_t>(v)] = p;
        rec(v + 1, left - k);
      }
  };
  rec(0, n);
  std::sort(out.begin(), out.end(), [](const RDiagram& a, const RDiagram& b) { return b < a; });
  return out;
}

struct Cell {
  int component;  // 1-based
  int row;        // 1-based
  int column;     // 1-based
  friend bool operator==(const Cell& a, const Cell& b) {
    return a.component == b.component && a.row == b.row && a.column == b.column;
  }
};

/// Rows of one tableau component.
using ComponentFilling = std::vector<std::vector<int>>;

/// An r-tableau: entries[v][row][col], labels 1..n each used once.
struct RTableau {
  std::vector<ComponentFilling> entries;

  int r() const { return static_cast<int>(entries.size()); }
  int size() const {
    int s = 0;
    for (const auto& comp : entries)
      for (const auto& row : comp) s += static_cast<int>(row.size());
    return s;
  }

  RDiagram shape() const {
    RDiagram d;
    for (const auto& comp : entries) {
      Partition p;
      for (const auto& row : comp) p.push_back(static_cast<int>(row.size()));
      d.components.push_back(p);
    }
    return d;
  }

  /// Cell holding label k; throws if absent.
  Cell find(int k) const {
    for (std::size_t v = 0; v < entries.size(); ++v)
      for (std::size_t i = 0; i < entries[v].size(); ++i)
        for (std::size_t j = 0; j < entries[v][i].size(); ++j)
          if (entries[v][i][j] == k)
            return {static_cast<int>(v) + 1, static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    throw InvalidArgument("label not found in tableau");
  }

  /// Entries read row by row, components in order.
  std::vector<int> row_reading_word() const {
    std::vector<int> w;
    for (const auto& comp : entries)
      for (const auto& row : comp) w.insert(w.end(), row.begin(), row.end());
    return w;
  }

  /// True when the shape is valid and the filling is a bijection onto 1..n.
  bool is_valid() const {
    if (entries.empty()) return false;
    try {
      shape().validate();
    } catch (const InvalidArgument&) {
      return false;
    }
    std::vector<int> w = row_reading_word();
    std::sort(w.begin(), w.end());
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k] != static_cast<int>(k) + 1) return false;
    return true;
  }

  /// Rows and columns increasing in every component.
  bool is_standard() const {
    if (!is_valid()) return false;
    for (const auto& comp : entries)
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < comp[i].size(); ++j) {
          if (j > 0 && comp[i][j - 1] >= comp[i][j]) return false;
          if (i > 0 && comp[i - 1][j] >= comp[i][j]) return false;
        }
    return true;
  }

  /// `[[1,2],[3]|[]]`
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t v = 0; v < entries.size(); ++v) {
      if (v) s += "|";
      if (entries[v].empty()) {
        s += "[]";
        continue;
      }
      for (std::size_t i = 0; i < entries[v].size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < entries[v][i].size(); ++j) {
          if (j) s += ",";
          s += std::to_string(entries[v][i][j]);
        }
        s += "]";
      }
    }
    return s + "]";
  }

  friend bool operator==(const RTableau& a, const RTableau& b) { return a.entries == b.entries; }
  friend bool operator!=(const RTableau& a, const RTableau& b) { return !(a == b); }
};

namespace detail {

inline std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

inline std::vector<std::string> split_bars(const std::string& body) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : body) {
    if (c == '|') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InvalidArgument("empty list entry in '" + s + "'");
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw InvalidArgument("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

inline std::string unwrap(const std::string& s, char open, char close) {
  if (s.size() < 2 || s.front() != open || s.back() != close)
    throw InvalidArgument("expected '" + std::string(1, open) + "...' in '" + s + "'");
  return s.substr(1, s.size() - 2);
}

}  // namespace detail

/// Parses `[(2,1)|()]`; `∅` or an empty slot also denote an empty component.
inline RDiagram parse_rdiagram(const std::string& text) {
  std::string body = detail::unwrap(detail::strip_spaces(text), '[', ']');
  RDiagram d;
  for (std::string part : detail::split_bars(body)) {
    if (part == "∅") part = "()";
    if (part.empty()) part = "()";
    d.components.push_back(detail::parse_int_list(detail::unwrap(part, '(', ')')));
  }
  d.validate();
  return d;
}

/// Parses `[[1,2],[3]|[]]`.
inline RTableau parse_rtableau(const std::string& text) {
  std::string body = detail::unwrap(detail::strip_spaces(text), '[', ']');
  RTableau t;
  for (const std::string& part : detail::split_bars(body)) {
    ComponentFilling comp;
    std::size_t pos = 0;
    while (pos < part.size()) {
      if (part[pos] == ',') {
        ++pos;
        continue;
      }
      if (part[pos] != '[') throw InvalidArgument("malformed tableau component '" + part + "'");
      std::size_t end = part.find(']', pos);
      if (end == std::string::npos) throw InvalidArgument("unterminated row in '" + part + "'");
      auto row = detail::parse_int_list(part.substr(pos + 1, end - pos - 1));
      if (!row.empty()) comp.push_back(row);
      pos = end + 1;
    }
    t.entries.push_back(comp);
  }
  if (!t.is_valid()) throw InvalidArgument("not a valid r-tableau: " + text);
  return t;
}

/// STab(shape), sorted by row-reading word.
inline std::vector<RTableau> enumerate_standard_tableaux(const RDiagram& shape) {
  shape.validate();
  const int n = shape.size();
  RTableau cur;
  for (const auto& comp : shape.components) cur.entries.emplace_back(comp.size());
  std::vector<RTableau> out;
  std::function<void(int)> place = [&](int k) {
    if (k > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = 0; v < shape.components.size(); ++v) {
      const auto& rows = shape.components[v];
      auto& filled = cur.entries[v];
      for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t len = filled[i].size();
        if (static_cast<int>(len) >= rows[i]) continue;
        if (i > 0 && filled[i - 1].size() <= len) continue;
        filled[i].push_back(k);
        place(k + 1);
        filled[i].pop_back();
      }
    }
  };
  place(1);
  std::sort(out.begin(), out.end(), [](const RTableau& a, const RTableau& b) {
    return a.row_reading_word() < b.row_reading_word();
  });
  return out;
}

/// Columns of every component read bottom to top, left to right, components
/// in order.
inline std::vector<int> word_of(const RTableau& s) {
  if (!s.is_standard()) throw InvalidArgument("word_of requires a standard tableau");
  std::vector<int> w;
  for (const auto& comp : s.entries) {
    if (comp.empty()) continue;
    for (std::size_t j = 0; j < comp[0].size(); ++j)
      for (std::size_t i = comp.size(); i-- > 0;)
        if (j < comp[i].size()) w.push_back(comp[i][j]);
  }
  return w;
}

/// Cell labels i(S) on the shape of S.
struct IndexedShape {
  RDiagram shape;
  std::vector<ComponentFilling> indices;  // same layout as RTableau::entries

  int at(const Cell& c) const {
    return indices[static_cast<std::size_t>(c.component - 1)][static_cast<std::size_t>(c.row - 1)]
                  [static_cast<std::size_t>(c.column - 1)];
  }
};

/// i(1) = 0, and i(k+1) = i(k) + 1 when k+1 sits left of k in w(S), else i(k).
inline IndexedShape index_map(const RTableau& s) {
  std::vector<int> w = word_of(s);
  const int n = static_cast<int>(w.size());
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(w[static_cast<std::size_t>(p)])] = p;
  std::vector<int> idx(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k < n; ++k) {
    auto uk = static_cast<std::size_t>(k);
    idx[uk + 1] = idx[uk] + (pos[uk + 1] < pos[uk] ? 1 : 0);
  }
  IndexedShape out{s.shape(), s.entries};
  for (auto& comp : out.indices)
    for (auto& row : comp)
      for (auto& v : row) v = idx[static_cast<std::size_t>(v)];
  return out;
}

/// Row and column stabilizers of one component filling, as permutations of
/// {1..n} fixing labels outside the component.
struct Stabilizers {
  std::vector<Permutation> rows;
  std::vector<Permutation> columns;
};

inline Stabilizers stabilizers(const ComponentFilling& comp, std::size_t n) {
  auto product_group = [n](const std::vector<std::vector<int>>& blocks) {
    std::vector<Permutation> group{Permutation(n)};
    for (const auto& block : blocks) {
      if (block.size() < 2) continue;
      std::vector<Permutation> next;
      for (const auto& g : group)
        for (const auto& h : permutations_of(n, block)) next.push_back(g * h);
      group = std::move(next);
    }
    std::sort(group.begin(), group.end());
    return group;
  };
  std::vector<std::vector<int>> cols;
  if (!comp.empty()) {
    for (std::size_t j = 0; j < comp[0].size(); ++j) {
      std::vector<int> col;
      for (const auto& row : comp)
        if (j < row.size()) col.push_back(row[j]);
      cols.push_back(col);
    }
  }
  return {product_group(comp), product_group(cols)};
}

/// Number of standard tableaux by the hook formula:
/// multinomial(n; |λ^1|, ..., |λ^r|) * prod_v |λ^v|! / hook_product(λ^v).
inline long long hook_formula_count(const RDiagram& shape) {
  auto factorial = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  long long multinomial = factorial(shape.size());
  for (const auto& comp : shape.components) multinomial /= factorial(partition_size(comp));
  long long total = multinomial;
  for (const auto& comp : shape.components) total *= factorial(partition_size(comp)) / hook_product(comp);
  return total;
}

}  // namespace hspecht
