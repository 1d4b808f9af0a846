#include "dyck.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qchrom {

FerrersBoard::FerrersBoard(std::vector<int> heights) : c_(std::move(heights)) {
  int n = static_cast<int>(c_.size());
  for (int i = 0; i < n; ++i) {
    int v = c_[static_cast<std::size_t>(i)];
    if (v < 0 || v > n)
      throw std::domain_error("FerrersBoard: height out of range at column " + std::to_string(i + 1));
    if (i > 0 && v < c_[static_cast<std::size_t>(i - 1)])
      throw std::domain_error("FerrersBoard: heights must be nondecreasing at column " +
                              std::to_string(i + 1));
  }
}

int FerrersBoard::cell_count() const {
  int s = 0;
  for (int v : c_) s += v;
  return s;
}

std::string FerrersBoard::to_string() const {
  std::ostringstream os;
  os << "B(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << ")";
  return os.str();
}

DyckPath::DyckPath(std::vector<int> h) : h_(std::move(h)) {
  int n = static_cast<int>(h_.size());
  if (n == 0) throw std::domain_error("DyckPath: empty Hessenberg vector");
  for (int i = 1; i <= n; ++i) {
    int v = h_[static_cast<std::size_t>(i - 1)];
    if (v < i || v > n)
      throw std::domain_error("DyckPath: h(" + std::to_string(i) + ")=" + std::to_string(v) +
                              " violates i <= h(i) <= n");
    if (i > 1 && v < h_[static_cast<std::size_t>(i - 2)])
      throw std::domain_error("DyckPath: h not nondecreasing at index " + std::to_string(i));
  }
}

DyckPath DyckPath::parse(const std::string& text) {
  if (text.empty()) throw std::domain_error("DyckPath: empty path string");
  if (text.find_first_of("NnEe") != std::string::npos &&
      text.find_first_of("0123456789") == std::string::npos) {
    std::vector<int> h;
    int height = 0;
    for (char ch : text) {
      if (ch == 'N' || ch == 'n') {
        ++height;
      } else if (ch == 'E' || ch == 'e') {
        h.push_back(height);
      } else {
        throw std::domain_error(std::string("DyckPath: bad step character '") + ch + "'");
      }
    }
    return DyckPath(std::move(h));
  }
  std::vector<int> h;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      h.push_back(v);
    } catch (const std::exception&) {
      throw std::domain_error("DyckPath: bad token '" + tok + "' in path string");
    }
  }
  return DyckPath(std::move(h));
}

bool DyckPath::less(int i, int j) const {
  if (i < 1 || j < 1 || i > n() || j > n()) throw std::domain_error("DyckPath: index out of range");
  return i < j && j > h(i);
}

bool DyckPath::attacking(int i, int j) const {
  if (i == j) return false;
  return !less(i, j) && !less(j, i);
}

std::vector<std::pair<int, int>> DyckPath::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 1; j <= h(i); ++j) e.emplace_back(i, j);
  std::sort(e.begin(), e.end());
  return e;
}

std::vector<int> DyckPath::b_vec() const {
  std::vector<int> b(static_cast<std::size_t>(n()));
  for (int i = 1; i <= n(); ++i) b[static_cast<std::size_t>(i - 1)] = h(n() + 1 - i) - (n() + 1 - i);
  return b;
}

std::vector<int> DyckPath::a_vec() const {
  std::vector<int> a(static_cast<std::size_t>(n()));
  for (int i = 1; i <= n(); ++i) {
    int r = n() + 1 - i;
    int cnt = 0;
    for (int c = 1; c < r; ++c)
      if (h(c) >= r) ++cnt;
    a[static_cast<std::size_t>(i - 1)] = cnt;
  }
  return a;
}

int DyckPath::area() const {
  int s = 0;
  for (int i = 1; i <= n(); ++i) s += h(i) - i;
  return s;
}

DyckPath DyckPath::reversed() const {
  std::vector<int> a = a_vec();
  std::vector<int> h2(static_cast<std::size_t>(n()));
  for (int i = 1; i <= n(); ++i) h2[static_cast<std::size_t>(i - 1)] = i + a[static_cast<std::size_t>(i - 1)];
  return DyckPath(std::move(h2));
}

DyckPath DyckPath::induced(const std::vector<int>& a) const {
  int k = static_cast<int>(a.size());
  if (k == 0) throw std::domain_error("DyckPath: induced on empty set");
  for (int i = 0; i < k; ++i) {
    if (a[static_cast<std::size_t>(i)] < 1 || a[static_cast<std::size_t>(i)] > n())
      throw std::domain_error("DyckPath: induced vertex out of range");
    if (i > 0 && a[static_cast<std::size_t>(i)] <= a[static_cast<std::size_t>(i - 1)])
      throw std::domain_error("DyckPath: induced set must be strictly increasing");
  }
  std::vector<int> h2(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    int cnt = 0;
    for (int j = 0; j < k; ++j)
      if (a[static_cast<std::size_t>(j)] <= h(a[static_cast<std::size_t>(i)])) ++cnt;
    h2[static_cast<std::size_t>(i)] = cnt;
  }
  return DyckPath(std::move(h2));
}

std::string DyckPath::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (i) os << ",";
    os << h_[i];
  }
  return os.str();
}

std::string DyckPath::steps() const {
  std::string s;
  int height = 0;
  for (int i = 1; i <= n(); ++i) {
    while (height < h(i)) {
      s += 'N';
      ++height;
    }
    s += 'E';
  }
  return s;
}

std::vector<DyckPath> all_paths(int n) {
  if (n < 1) throw std::domain_error("all_paths: n must be positive");
  std::vector<DyckPath> out;
  std::vector<int> h(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (h[static_cast<std::size_t>(n - 1)] == n) out.emplace_back(h);
      return;
    }
    int lo = std::max(i + 1, i == 0 ? 1 : h[static_cast<std::size_t>(i - 1)]);
    for (int v = lo; v <= n; ++v) {
      h[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

DyckPath beta_word(const DyckPath& pi, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != pi.n()) throw std::domain_error("beta_word: word length mismatch");
  std::map<int, std::vector<int>> classes; // color -> vertices ascending
  for (int i = 1; i <= pi.n(); ++i) {
    if (w[static_cast<std::size_t>(i - 1)] < 1) throw std::domain_error("beta_word: colors must be positive");
    classes[w[static_cast<std::size_t>(i - 1)]].push_back(i);
  }
  std::vector<int> h;
  int offset = 0;
  for (const auto& [color, verts] : classes) {
    (void)color;
    DyckPath sub = pi.induced(verts);
    for (int i = 1; i <= sub.n(); ++i) h.push_back(sub.h(i) + offset);
    offset += sub.n();
  }
  return DyckPath(std::move(h));
}

DyckPath beta_setpartition(const DyckPath& pi, const SetPartition& s) {
  if (s.n() != pi.n()) throw std::domain_error("beta_setpartition: size mismatch");
  return beta_word(pi, s.coloring_word());
}

DyckPath bounce_path(const std::vector<int>& composition) {
  std::vector<int> h;
  int base = 0;
  for (int part : composition) {
    if (part < 1) throw std::domain_error("bounce_path: parts must be positive");
    for (int i = 0; i < part; ++i) h.push_back(base + part);
    base += part;
  }
  return DyckPath(std::move(h));
}

FerrersBoard board_from_dyck(const DyckPath& pi) {
  std::vector<int> b = pi.b_vec();
  std::vector<int> c(static_cast<std::size_t>(pi.n()));
  for (int i = 1; i <= pi.n(); ++i)
    c[static_cast<std::size_t>(i - 1)] = i - 1 - b[static_cast<std::size_t>(i - 1)];
  return FerrersBoard(std::move(c));
}

} // namespace qchrom
