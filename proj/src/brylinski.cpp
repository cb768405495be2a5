#include "kmq/brylinski.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "kmq/errors.hpp"
#include "kmq/freudenthal.hpp"
#include "kmq/weyl.hpp"

namespace kmq {

namespace {

Int height(const std::vector<Int>& c) { return std::accumulate(c.begin(), c.end(), Int{0}); }

bool nonnegative(const std::vector<Int>& c) {
  return std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; });
}

}  // namespace

std::size_t default_max_dim() {
  if (const char* s = std::getenv("KMQ_MAX_DIM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200;
}

const WeightSpace* ModuleSlice::find(const AffineWeight& mu) const {
  auto it = index_.find(mu);
  return it == index_.end() ? nullptr : &spaces_[it->second];
}

bool ModuleSlice::within_depth(const AffineWeight& mu) const {
  auto c = data_.root_coordinates(lambda_ - mu);
  return c && (!data_.affine() || (*c)[0] <= depth_);
}

std::size_t ModuleSlice::dim(const AffineWeight& mu) const {
  if (const WeightSpace* s = find(mu)) return s->dim();
  if (mu.level == lambda_.level) {
    auto c = data_.root_coordinates(lambda_ - mu);
    if (c && nonnegative(*c) && !within_depth(mu)) throw DepthExceeded("weight " + to_string(mu) + " lies below the slice");
  }
  return 0;
}

std::size_t ModuleSlice::total_dimension() const {
  std::size_t t = 0;
  for (const auto& s : spaces_) t += s.dim();
  return t;
}

ModuleSlice construct_slice(const CartanData& data, const AffineWeight& lambda, Int depth, std::size_t max_dim) {
  if (!data.conforms(lambda)) throw InvalidInput("weight has the wrong rank");
  if (depth < 0) throw InvalidInput("depth must be nonnegative");
  if (data.affine() && lambda.level <= 0) throw InvalidInput("affine modules need positive level");
  if (!is_dominant(data, lambda)) throw InvalidInput("highest weight must be dominant: " + to_string(lambda));

  {
    // Size the request before doing any linear algebra.
    MultiplicityTable t(data, lambda, depth);
    for (const auto& mu : t.dominant_weights()) {
      Int m = t.multiplicity(mu);
      if (static_cast<std::size_t>(m) > max_dim)
        throw ResourceLimit("weight space at " + to_string(mu) + " has dimension " + std::to_string(m) +
                            ", above the limit " + std::to_string(max_dim) + " (KMQ_MAX_DIM)");
    }
  }

  ModuleSlice slice;
  slice.data_ = data;
  slice.lambda_ = lambda;
  slice.depth_ = depth;
  const int n = data.node_count();
  const int first = data.first_node();
  auto node = [&](int j) { return j + first; };

  auto add_space = [&](WeightSpace ws) {
    ws.e.assign(n, std::nullopt);
    ws.f.assign(n, std::nullopt);
    slice.index_[ws.weight] = slice.spaces_.size();
    slice.spaces_.push_back(std::move(ws));
  };

  WeightSpace top;
  top.weight = lambda;
  top.gap.assign(n, 0);
  top.basis_words.push_back({});
  add_space(std::move(top));

  std::vector<AffineWeight> layer{lambda};
  while (!layer.empty()) {
    std::set<AffineWeight> candidates;
    for (const auto& nu : layer)
      for (int j = 0; j < n; ++j) {
        AffineWeight mu = nu - data.simple_root(node(j));
        if (slice.within_depth(mu)) candidates.insert(mu);
      }
    std::vector<AffineWeight> next;
    for (const auto& mu : candidates) {
      // Phi(v) = (e_j v)_j lands in the direct sum of the spaces above mu.
      std::vector<std::size_t> offset(n + 1, 0);
      std::vector<const WeightSpace*> above(n, nullptr);
      for (int j = 0; j < n; ++j) {
        above[j] = slice.find(mu + data.simple_root(node(j)));
        offset[j + 1] = offset[j] + (above[j] ? above[j]->dim() : 0);
      }
      const std::size_t ambient = offset[n];
      if (ambient == 0) continue;

      IncrementalBasis basis(ambient);
      WeightSpace ws;
      ws.weight = mu;
      ws.gap = *data.root_coordinates(lambda - mu);
      std::vector<std::vector<Rational>> images;  // Phi of accepted vectors
      // Coordinates of f_i b for every candidate, kept to fill F matrices.
      std::vector<std::vector<std::vector<Rational>>> f_coords(n);
      std::vector<std::pair<int, std::size_t>> accepted;

      for (int i = 0; i < n; ++i) {
        const WeightSpace* src = above[i];
        if (!src) continue;
        const Int h = data.pair(src->weight, node(i));
        for (std::size_t b = 0; b < src->dim(); ++b) {
          std::vector<Rational> phi(ambient, 0);
          // e_j f_i b = delta_ij <mu + alpha_i, coroot_i> b + f_i e_j b
          if (h != 0) phi[offset[i] + b] += h;
          for (int j = 0; j < n; ++j) {
            if (!above[j] || !src->e[j]) continue;
            const RationalMatrix& ej = *src->e[j];
            const WeightSpace* mid = slice.find(src->weight + data.simple_root(node(j)));
            if (!mid || !mid->f[i]) continue;
            const RationalMatrix& fi = *mid->f[i];  // mid -> mu + alpha_j
            for (std::size_t t = 0; t < ej.rows(); ++t) {
              if (ej(t, b) == 0) continue;
              for (std::size_t s = 0; s < fi.rows(); ++s)
                if (fi(s, t) != 0) phi[offset[j] + s] += ej(t, b) * fi(s, t);
            }
          }
          auto before = basis.size();
          auto coords = basis.offer(phi);
          if (!coords) {
            std::vector<int> word{node(i)};
            word.insert(word.end(), src->basis_words[b].begin(), src->basis_words[b].end());
            ws.basis_words.push_back(std::move(word));
            images.push_back(std::move(phi));
            accepted.emplace_back(i, b);
            std::vector<Rational> unit(before + 1, 0);
            unit[before] = 1;
            f_coords[i].push_back(std::move(unit));
            if (ws.basis_words.size() > max_dim)
              throw ResourceLimit("weight space at " + to_string(mu) + " exceeds the limit " + std::to_string(max_dim));
          } else {
            f_coords[i].push_back(std::move(*coords));
          }
        }
      }
      if (ws.basis_words.empty()) continue;
      const std::size_t d = ws.basis_words.size();
      ws.e.assign(n, std::nullopt);
      ws.f.assign(n, std::nullopt);
      for (int j = 0; j < n; ++j) {
        if (!above[j]) continue;
        RationalMatrix e(above[j]->dim(), d);
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t s = 0; s < above[j]->dim(); ++s) e(s, k) = images[k][offset[j] + s];
        ws.e[j] = std::move(e);
      }
      std::vector<std::optional<RationalMatrix>> fs(n);
      for (int i = 0; i < n; ++i) {
        if (!above[i]) continue;
        RationalMatrix f(d, above[i]->dim());
        for (std::size_t b = 0; b < above[i]->dim(); ++b)
          for (std::size_t k = 0; k < f_coords[i][b].size(); ++k) f(k, b) = f_coords[i][b][k];
        fs[i] = std::move(f);
      }
      // add_space may reallocate, so look the sources up by weight afterwards.
      std::vector<std::optional<AffineWeight>> source(n);
      for (int i = 0; i < n; ++i)
        if (above[i]) source[i] = above[i]->weight;
      auto e_mats = std::move(ws.e);
      add_space(std::move(ws));
      slice.spaces_.back().e = std::move(e_mats);
      for (int i = 0; i < n; ++i)
        if (fs[i]) slice.spaces_[slice.index_.at(*source[i])].f[i] = std::move(fs[i]);
      next.push_back(mu);
    }
    layer = std::move(next);
  }
  return slice;
}

std::vector<std::size_t> kernel_dimensions(const ModuleSlice& slice, const AffineWeight& mu) {
  const CartanData& data = slice.data();
  const std::size_t d = slice.dim(mu);
  std::vector<std::size_t> out{0};
  if (d == 0) return out;
  const int n = data.node_count();
  // Images of the basis of L_mu under e^p, split by weight.
  std::map<AffineWeight, RationalMatrix> current{{mu, RationalMatrix::identity(d)}};
  while (out.back() < d) {
    std::map<AffineWeight, RationalMatrix> next;
    for (const auto& [nu, m] : current) {
      const WeightSpace* s = slice.find(nu);
      for (int j = 0; j < n; ++j) {
        if (!s->e[j]) continue;
        RationalMatrix img = *s->e[j] * m;
        AffineWeight up = nu + data.simple_root(j + data.first_node());
        auto it = next.find(up);
        if (it == next.end())
          next.emplace(up, std::move(img));
        else
          it->second = it->second + img;
      }
    }
    std::size_t rows = 0;
    for (const auto& [nu, m] : next) rows += m.rows();
    RationalMatrix stacked(rows, d);
    std::size_t r0 = 0;
    for (const auto& [nu, m] : next) {
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < d; ++c) stacked(r0 + r, c) = m(r, c);
      r0 += m.rows();
    }
    out.push_back(d - rank(stacked));
    current = std::move(next);
  }
  return out;
}

QPolynomial principal_filtration(const ModuleSlice& slice, const AffineWeight& mu) {
  auto ker = kernel_dimensions(slice, mu);
  std::vector<mpz_class> coeffs;
  for (std::size_t i = 0; i + 1 < ker.size(); ++i) coeffs.emplace_back(static_cast<unsigned long>(ker[i + 1] - ker[i]));
  return QPolynomial(std::move(coeffs));
}

bool principal_vs_finite(const CartanData& affine_data, const std::vector<Int>& lambda_bar,
                         const std::vector<Int>& mu_bar, Int k, Int energy) {
  if (!affine_data.affine()) throw InvalidInput("principal_vs_finite needs affine data");
  AffineWeight lambda(k, lambda_bar, energy), mu(k, mu_bar, energy);
  auto aff = construct_slice(affine_data, lambda, 0);
  CartanData fin = affine_data.finite_part();
  auto finite = construct_slice(fin, AffineWeight(0, lambda_bar, 0), 0);
  return principal_filtration(aff, mu) == principal_filtration(finite, AffineWeight(0, mu_bar, 0));
}

std::size_t shapovalov_rank(const CartanData& data, const AffineWeight& lambda, const AffineWeight& mu,
                            std::size_t max_words) {
  auto gap = data.root_coordinates(lambda - mu);
  if (lambda.level != mu.level || !gap || !nonnegative(*gap)) return 0;
  const int n = data.node_count();
  const int first = data.first_node();

  // All words (j_1 ... j_m) with content gap; the vector is f_{j_1} ... f_{j_m} v.
  std::vector<std::vector<int>> words;
  std::vector<int> word;
  std::vector<Int> rest = *gap;
  const Int len = height(rest);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<Int>(word.size()) == len) {
      words.push_back(word);
      if (words.size() > max_words) throw ResourceLimit("too many words for the Gram matrix");
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (rest[j] == 0) continue;
      --rest[j];
      word.push_back(j);
      self(self);
      word.pop_back();
      ++rest[j];
    }
  };
  rec(rec);
  if (words.empty()) return 1;

  // e_i f_{j_1} ... f_{j_m} v = sum over p with j_p = i of
  //   <lambda - sum_{q > p} alpha_{j_q}, coroot_i> times the word with position p removed.
  using Vec = std::map<std::vector<int>, Rational>;
  auto apply_e = [&](int i, const Vec& x) {
    Vec y;
    for (const auto& [w, c] : x) {
      AffineWeight wt = lambda;
      for (std::size_t p = w.size(); p-- > 0;) {
        if (w[p] == i) {
          Int h = data.pair(wt, i + first);
          if (h != 0) {
            std::vector<int> v = w;
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(p));
            y[v] += c * h;
          }
        }
        wt -= data.simple_root(w[p] + first);
      }
    }
    for (auto it = y.begin(); it != y.end();) it = it->second == 0 ? y.erase(it) : std::next(it);
    return y;
  };
  const std::size_t m = words.size();
  RationalMatrix gram(m, m);
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t a = 0; a < m; ++a) {
      // <f_I v, f_J v> = <v, e_{i_m} ... e_{i_1} f_J v>
      Vec x{{words[b], 1}};
      for (int i : words[a]) {
        x = apply_e(i, x);
        if (x.empty()) break;
      }
      auto it = x.find({});
      if (it != x.end()) gram(a, b) = it->second;
    }
  }
  return rank(gram);
}

}  // namespace kmq
