#include "kmq/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kmq/errors.hpp"

namespace kmq {

namespace {

std::string symbol_of(char series, int rank) { return std::string(1, series) + std::to_string(rank); }

bool simply_laced(char series) { return series == 'A' || series == 'D' || series == 'E'; }

void validate_type(char series, int rank) {
  bool ok = false;
  switch (series) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok) throw InvalidInput("not a simple finite type: " + symbol_of(series, rank));
}

// Integer determinant and adjugate of a small square matrix via fraction-free
// cofactor expansion on rationals.
void adjugate(const std::vector<Int>& m, int n, std::vector<Int>& adj, Int& det) {
  RationalMatrix a(n, n), inv = RationalMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m[i * n + j];
  Rational d = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::logic_error("singular finite Cartan matrix");
    if (p != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
      d = -d;
    }
    Rational piv = a(c, c);
    d *= piv;
    for (int j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  if (d.get_den() != 1) throw std::logic_error("non-integral determinant");
  det = d.get_num().get_si();
  adj.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = inv(i, j) * d;
      if (v.get_den() != 1) throw std::logic_error("non-integral adjugate");
      adj[i * n + j] = v.get_num().get_si();
    }
}

// Symmetrizer of an indecomposable symmetrizable matrix, smallest entry 1.
std::vector<Rational> symmetrize(const std::vector<Int>& m, int n) {
  std::vector<Rational> d(n, 0);
  d[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j == i || m[i * n + j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * ratio(m[i * n + j], m[j * n + i]);
      queue.push_back(j);
    }
  }
  Rational lo = *std::min_element(d.begin(), d.end());
  for (auto& x : d) x /= lo;
  return d;
}

// Positive roots of a finite Cartan matrix in simple-root coordinates.
std::vector<std::vector<Int>> finite_roots(const std::vector<Int>& m, int n) {
  std::set<std::vector<Int>> seen;
  std::deque<std::vector<Int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto b = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Int p = 0;
      for (int j = 0; j < n; ++j) p += b[j] * m[i * n + j];
      if (p >= 0) continue;
      auto c = b;
      c[i] -= p;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Int> highest_root(const std::vector<Int>& m, int n) {
  auto roots = finite_roots(m, n);
  auto height = [](const std::vector<Int>& v) { return std::accumulate(v.begin(), v.end(), Int{0}); };
  return *std::max_element(roots.begin(), roots.end(),
                           [&](const auto& a, const auto& b) { return height(a) < height(b); });
}

std::vector<Int> transpose(const std::vector<Int>& m, int n) {
  std::vector<Int> t(m.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[j * n + i] = m[i * n + j];
  return t;
}

// Solves the finite block for a null vector with entry 1 at node 0.
std::vector<Int> null_vector(const std::vector<Int>& m, int r) {
  const int n = r + 1;
  std::vector<Int> fin(r * r), adj;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) fin[i * r + j] = m[(i + 1) * n + (j + 1)];
  Int det = 1;
  adjugate(fin, r, adj, det);
  std::vector<Int> v(n);
  v[0] = 1;
  for (int i = 0; i < r; ++i) {
    Int s = 0;
    for (int j = 0; j < r; ++j) s += adj[i * r + j] * -m[(j + 1) * n + 0];
    if (s % det != 0) throw std::logic_error("non-integral null vector");
    v[i + 1] = s / det;
  }
  for (int i = 0; i < n; ++i) {
    Int s = 0;
    for (int j = 0; j < n; ++j) s += m[i * n + j] * v[j];
    if (s != 0) throw std::logic_error("matrix is not of affine type");
  }
  return v;
}

}  // namespace

std::pair<char, int> parse_type_symbol(const std::string& symbol) {
  if (symbol.size() < 2 || !std::isalpha(static_cast<unsigned char>(symbol[0])))
    throw InvalidInput("bad type symbol: '" + symbol + "'");
  char series = static_cast<char>(std::toupper(static_cast<unsigned char>(symbol[0])));
  int rank = 0;
  for (std::size_t i = 1; i < symbol.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(symbol[i])) || rank > 1000)
      throw InvalidInput("bad type symbol: '" + symbol + "'");
    rank = rank * 10 + (symbol[i] - '0');
  }
  validate_type(series, rank);
  return {series, rank};
}

std::vector<Int> finite_cartan_matrix(char series, int r) {
  validate_type(series, r);
  std::vector<Int> m(r * r, 0);
  auto link = [&](int i, int j) {
    m[i * r + j] = -1;
    m[j * r + i] = -1;
  };
  for (int i = 0; i < r; ++i) m[i * r + i] = 2;
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      m[(r - 1) * r + (r - 2)] = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      m[(r - 2) * r + (r - 1)] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      m[2 * r + 1] = -2;
      break;
    case 'G':
      m[0 * r + 1] = -3;
      m[1 * r + 0] = -1;
      break;
    default: break;
  }
  return m;
}

std::vector<int> CartanData::nodes() const {
  std::vector<int> v;
  for (int i = first_node(); i <= rank_; ++i) v.push_back(i);
  return v;
}

Int CartanData::imag_mult(Int n) const {
  if (!affine_ || n <= 0) return 0;
  return imag_table_[static_cast<std::size_t>(n % twist_)];
}

Int CartanData::pair(const AffineWeight& x, int i) const {
  if (i >= 1) return x.finite[i - 1];
  Int s = x.level;
  for (int j = 1; j <= rank_; ++j) s -= comark(j) * x.finite[j - 1];
  return s;
}

AffineWeight CartanData::simple_root(int j) const {
  AffineWeight a = zero();
  for (int i = 1; i <= rank_; ++i) a.finite[i - 1] = cartan(i, j);
  if (affine_ && j == 0) a.energy = 1;
  return a;
}

AffineWeight CartanData::fundamental_weight(int i) const {
  AffineWeight w = zero();
  if (i >= 1) w.finite[i - 1] = 1;
  if (affine_) w.level = (i == 0) ? 1 : comark(i);
  return w;
}

AffineWeight CartanData::rho() const {
  AffineWeight w(affine_ ? dual_coxeter_ : 0, std::vector<Int>(rank_, 1), 0);
  return w;
}

AffineWeight CartanData::delta() const {
  if (!affine_) throw InvalidInput("delta is only defined for affine data");
  return AffineWeight(0, std::vector<Int>(rank_, 0), 1);
}

std::optional<std::vector<Int>> CartanData::root_coordinates(const AffineWeight& beta) const {
  if (beta.level != 0) return std::nullopt;
  if (!affine_ && beta.energy != 0) return std::nullopt;
  std::vector<Int> c(node_count());
  std::vector<Int> v = beta.finite;
  std::size_t off = 0;
  if (affine_) {
    c[0] = beta.energy;
    for (int i = 1; i <= rank_; ++i) v[i - 1] -= c[0] * cartan(i, 0);
    off = 1;
  }
  for (int i = 0; i < rank_; ++i) {
    Int s = 0;
    for (int j = 0; j < rank_; ++j) s += fin_adj_[i * rank_ + j] * v[j];
    if (s % fin_det_ != 0) return std::nullopt;
    c[off + i] = s / fin_det_;
  }
  return c;
}

AffineWeight CartanData::from_root_coordinates(std::span<const Int> coords) const {
  AffineWeight w = zero();
  for (int j = first_node(); j <= rank_; ++j) {
    Int c = coords[idx(j)];
    if (c == 0) continue;
    w += c * simple_root(j);
  }
  return w;
}

bool CartanData::in_positive_cone(const AffineWeight& beta) const {
  auto c = root_coordinates(beta);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](Int x) { return x >= 0; });
}

Rational CartanData::form(const AffineWeight& x, const AffineWeight& y) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x.finite[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (y.finite[j] != 0) s += fin_gram_[i * rank_ + j] * (x.finite[i] * y.finite[j]);
  }
  if (affine_) s += x.level * y.energy + y.level * x.energy;
  return s;
}

void CartanData::finish_finite_inverse() {
  std::vector<Int> fin(rank_ * rank_);
  for (int i = 1; i <= rank_; ++i)
    for (int j = 1; j <= rank_; ++j) fin[(i - 1) * rank_ + (j - 1)] = cartan(i, j);
  adjugate(fin, rank_, fin_adj_, fin_det_);
  fin_gram_.assign(rank_ * rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      fin_gram_[i * rank_ + j] = symmetrizer(i + 1) * ratio(fin_adj_[i * rank_ + j], fin_det_);
    }
}

CartanData make_finite(std::string label, std::string base, int r, std::vector<Int> m,
                       std::vector<Rational> sym) {
  CartanData d;
  d.label_ = std::move(label);
  d.base_symbol_ = std::move(base);
  d.rank_ = r;
  d.affine_ = false;
  d.cartan_ = std::move(m);
  d.sym_ = std::move(sym);
  d.marks_ = highest_root(d.cartan_, r);
  // theta coroot = sum_i a_i (alpha_i, alpha_i) / (theta, theta) coroot_i, and theta is long.
  Rational long_d = *std::max_element(d.sym_.begin(), d.sym_.end());
  for (int i = 0; i < r; ++i) {
    Rational c = d.marks_[i] * d.sym_[i] / long_d;
    if (c.get_den() != 1) throw std::logic_error("non-integral comark");
    d.comarks_.push_back(c.get_num().get_si());
  }
  d.dual_coxeter_ = 1 + std::accumulate(d.comarks_.begin(), d.comarks_.end(), Int{0});
  d.imag_table_ = {0};
  d.finish_finite_inverse();
  return d;
}

CartanData build_finite_data(char series, int rank) {
  auto m = finite_cartan_matrix(series, rank);
  auto sym = symmetrize(m, rank);
  return make_finite(symbol_of(series, rank), symbol_of(series, rank), rank, std::move(m), std::move(sym));
}

CartanData build_finite_data(const std::string& symbol) {
  auto [s, r] = parse_type_symbol(symbol);
  return build_finite_data(s, r);
}

CartanData build_affine_data(const std::string& symbol, bool dual) {
  auto [s, r] = parse_type_symbol(symbol);
  return build_affine_data(s, r, dual);
}

DiagramAutomorphism twisting_automorphism(char series, int rank) {
  validate_type(series, rank);
  DiagramAutomorphism a;
  switch (series) {
    case 'B': {
      int n = 2 * rank - 1;
      a.algebra = symbol_of('A', n);
      for (int i = 0; i < n; ++i) a.permutation.push_back(n - 1 - i);
      a.order = 2;
      break;
    }
    case 'C': {
      int n = rank + 1;
      a.algebra = n == 3 ? "A3" : symbol_of('D', n);
      for (int i = 0; i < n; ++i) a.permutation.push_back(i);
      if (n == 3) {
        // D3 = A3 with the middle node as the D-branch point.
        a.permutation = {2, 1, 0};
      } else {
        std::swap(a.permutation[n - 2], a.permutation[n - 1]);
      }
      a.order = 2;
      break;
    }
    case 'F':
      a.algebra = "E6";
      a.permutation = {5, 1, 4, 3, 2, 0};
      a.order = 2;
      break;
    case 'G':
      a.algebra = "D4";
      a.permutation = {2, 1, 3, 0};
      a.order = 3;
      break;
    default:
      a.algebra = symbol_of(series, rank);
      for (int i = 0; i < rank; ++i) a.permutation.push_back(i);
      a.order = 1;
  }
  return a;
}

std::vector<Int> eigenspace_dimensions(const DiagramAutomorphism& sigma) {
  // A cycle of length c contributes each c-th root of unity once; omega^n is a
  // c-th root of unity iff c*n is divisible by the order.
  const int n = static_cast<int>(sigma.permutation.size());
  std::vector<bool> seen(n, false);
  std::vector<int> cycles;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int c = 0;
    for (int j = i; !seen[j]; j = sigma.permutation[j]) {
      seen[j] = true;
      ++c;
    }
    cycles.push_back(c);
  }
  std::vector<Int> dims(sigma.order, 0);
  for (int t = 0; t < sigma.order; ++t)
    for (int c : cycles)
      if ((c * t) % sigma.order == 0) ++dims[t];
  return dims;
}

CartanData build_affine_data(char series, int r, bool dual) {
  validate_type(series, r);
  const int n = r + 1;
  auto fin = finite_cartan_matrix(series, r);
  auto fsym = symmetrize(fin, r);
  auto theta = highest_root(fin, r);

  // Untwisted extension: alpha_0 = delta - theta.
  std::vector<Int> m(n * n, 0);
  m[0] = 2;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[(i + 1) * n + (j + 1)] = fin[i * r + j];
  Rational theta_sq = 0;
  std::vector<Rational> alpha_theta(r, 0);  // (alpha_j, theta)
  for (int j = 0; j < r; ++j) {
    for (int l = 0; l < r; ++l) alpha_theta[j] += fsym[j] * (theta[l] * fin[j * r + l]);
    theta_sq += alpha_theta[j] * theta[j];
  }
  for (int i = 0; i < r; ++i) {
    Int s = 0;
    for (int j = 0; j < r; ++j) s += theta[j] * fin[i * r + j];
    m[(i + 1) * n] = -s;
    Rational v = -2 * alpha_theta[i] / theta_sq;
    if (v.get_den() != 1) throw std::logic_error("non-integral affine Cartan entry");
    m[i + 1] = v.get_num().get_si();
  }

  const bool twisted = dual && !simply_laced(series);
  if (dual) m = transpose(m, n);

  CartanData d;
  d.base_symbol_ = symbol_of(series, r);
  d.rank_ = r;
  d.affine_ = true;
  d.dual_ = dual;
  d.cartan_ = std::move(m);
  d.marks_ = null_vector(d.cartan_, r);
  d.comarks_ = null_vector(transpose(d.cartan_, n), r);
  d.dual_coxeter_ = std::accumulate(d.comarks_.begin(), d.comarks_.end(), Int{0});
  d.sym_.resize(n);
  for (int i = 0; i < n; ++i) {
    d.sym_[i] = ratio(d.comarks_[i], d.marks_[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.sym_[i] * d.cartan_[i * n + j] != d.sym_[j] * d.cartan_[j * n + i])
        throw std::logic_error("symmetrizer mismatch for " + d.base_symbol_);

  if (twisted) {
    auto sigma = twisting_automorphism(series, r);
    d.twist_ = sigma.order;
    d.imag_table_ = eigenspace_dimensions(sigma);
    switch (series) {
      case 'B': d.label_ = symbol_of('A', 2 * r - 1) + "^(2)"; break;
      case 'C': d.label_ = symbol_of('D', r + 1) + "^(2)"; break;
      case 'F': d.label_ = "E6^(2)"; break;
      case 'G': d.label_ = "D4^(3)"; break;
      default: break;
    }
  } else {
    d.twist_ = 1;
    d.imag_table_ = {static_cast<Int>(r)};
    d.label_ = d.base_symbol_ + "^(1)";
  }
  d.finish_finite_inverse();
  return d;
}

CartanData CartanData::finite_part() const {
  if (!affine_) return *this;
  std::vector<Int> fin(rank_ * rank_);
  std::vector<Rational> sym(rank_);
  for (int i = 1; i <= rank_; ++i) {
    sym[i - 1] = symmetrizer(i);
    for (int j = 1; j <= rank_; ++j) fin[(i - 1) * rank_ + (j - 1)] = cartan(i, j);
  }
  std::string lbl = dual_ && twist_ > 1 ? base_symbol_ + "^T" : base_symbol_;
  return make_finite(lbl, base_symbol_, rank_, std::move(fin), std::move(sym));
}

std::vector<RootEntry> positive_roots_up_to(const CartanData& data, Int depth) {
  if (depth < 0) throw InvalidInput("depth must be nonnegative");
  const int n = data.node_count();
  const int f = data.first_node();
  std::set<std::vector<Int>> seen;
  std::deque<std::vector<Int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    if (data.affine() && i == 0 && depth < 1) continue;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto b = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Int p = 0;
      for (int j = 0; j < n; ++j) p += b[j] * data.cartan(i + f, j + f);
      if (p >= 0) continue;
      auto c = b;
      c[i] -= p;
      if (data.affine() && c[0] > depth) continue;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  std::vector<RootEntry> out;
  for (const auto& c : seen) out.push_back({data.from_root_coordinates(c), c, 1, false});
  if (data.affine()) {
    for (Int k = 1; k <= depth; ++k) {
      Int mult = data.imag_mult(k);
      if (mult == 0) continue;
      std::vector<Int> c(n);
      for (int i = 0; i < n; ++i) c[i] = k * data.marks()[i];
      out.push_back({data.from_root_coordinates(c), c, mult, true});
    }
  }
  auto key = [](const RootEntry& e) {
    Int h = std::accumulate(e.coords.begin(), e.coords.end(), Int{0});
    return std::tuple(e.coords[0], h, e.coords);
  };
  std::sort(out.begin(), out.end(), [&](const RootEntry& a, const RootEntry& b) {
    return key(a) < key(b);
  });
  return out;
}

Rational bilinear_form(const CartanData& data, const AffineWeight& x, const AffineWeight& y) {
  return data.form(x, y);
}

}  // namespace kmq
