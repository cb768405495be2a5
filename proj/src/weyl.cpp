#include "kmq/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kmq/errors.hpp"

namespace kmq {

namespace {

void check_node(const CartanData& data, int i) {
  if (!data.valid_node(i)) throw InvalidInput("simple reflection index out of range: " + std::to_string(i));
}

void check_weight(const CartanData& data, const AffineWeight& x) {
  if (!data.conforms(x)) throw InvalidInput("weight has the wrong rank: " + to_string(x));
}

}  // namespace

AffineWeight reflect(const CartanData& data, int i, const AffineWeight& x) {
  check_node(data, i);
  check_weight(data, x);
  Int p = data.pair(x, i);
  if (p == 0) return x;
  return x - p * data.simple_root(i);
}

AffineWeight apply(const CartanData& data, const WeylElement& w, const AffineWeight& x) {
  AffineWeight y = x;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) y = reflect(data, *it, y);
  return y;
}

AffineWeight dot_action(const CartanData& data, const WeylElement& w, const AffineWeight& x) {
  const AffineWeight rho = data.rho();
  return apply(data, w, x + rho) - rho;
}

bool is_dominant(const CartanData& data, const AffineWeight& x) {
  check_weight(data, x);
  for (int i : data.nodes())
    if (data.pair(x, i) < 0) return false;
  return true;
}

bool same_element(const CartanData& data, const WeylElement& v, const WeylElement& w) {
  const AffineWeight rho = data.rho();
  return apply(data, v, rho) == apply(data, w, rho);
}

LevelReduction to_dominant(const CartanData& data, const AffineWeight& x) {
  check_weight(data, x);
  if (data.affine() && x.level <= 0) throw InvalidInput("dominant reduction needs positive level");
  LevelReduction out;
  AffineWeight y = x;
  // Reflecting in a wall with negative pairing moves strictly toward the
  // dominant chamber, so the loop stops after length(w) steps.
  for (;;) {
    int hit = -1;
    for (int i : data.nodes())
      if (data.pair(y, i) < 0) {
        hit = i;
        break;
      }
    if (hit < 0) break;
    y = reflect(data, hit, y);
    out.element.word.push_back(hit);
  }
  // y = s_{last} ... s_{first} x, so the realizing element reads backwards.
  std::reverse(out.element.word.begin(), out.element.word.end());
  out.sign = out.element.sign();
  out.weight = y.finite;
  for (int i : data.nodes())
    if (data.pair(y, i) == 0) out.singular = true;
  return out;
}

LevelReduction to_level_k_dominant(const CartanData& data, const std::vector<Int>& lambda_bar, Int k, bool dot) {
  if (!data.affine()) throw InvalidInput("level-k reduction needs affine data");
  if (k < 1) throw InvalidInput("level must be positive");
  AffineWeight x(k, lambda_bar, 0);
  if (dot) x += data.rho();
  LevelReduction r = to_dominant(data, x);
  if (dot) {
    for (auto& c : r.weight) c -= 1;
  } else {
    r.singular = false;
  }
  return r;
}

std::vector<Contribution> enumerate_contributing(const CartanData& data, const AffineWeight& lambda,
                                                 const AffineWeight& mu, Int depth) {
  check_weight(data, lambda);
  check_weight(data, mu);
  if (lambda.level != mu.level) throw InvalidInput("lambda and mu must have the same level");
  if (data.affine() && lambda.level <= 0) throw InvalidInput("enumeration needs positive level");
  if (!is_dominant(data, lambda)) throw InvalidInput("lambda must be dominant: " + to_string(lambda));
  if (depth < 0) throw InvalidInput("depth must be nonnegative");

  const AffineWeight rho = data.rho();
  const AffineWeight target = mu + rho;
  auto admissible = [&](const AffineWeight& x) { return data.in_positive_cone(x - target); };

  std::vector<Contribution> out;
  const AffineWeight start = lambda + rho;
  if (!admissible(start)) return out;

  // x = w(lambda + rho) is regular, so w is determined by x; s_i w is longer
  // than w exactly when <x, coroot_i> > 0.  Descending steps only shrink
  // x - target, so an inadmissible x has no admissible descendants.
  std::set<AffineWeight> seen{start};
  std::map<AffineWeight, std::vector<int>> layer{{start, {}}};
  while (!layer.empty()) {
    for (const auto& [x, word] : layer) {
      AffineWeight beta = x - target;
      auto c = data.root_coordinates(beta);
      if (!data.affine() || (*c)[0] <= depth) out.push_back({WeylElement{word}, beta});
    }
    std::map<AffineWeight, std::vector<int>> next;
    for (const auto& [x, word] : layer) {
      for (int i : data.nodes()) {
        Int p = data.pair(x, i);
        if (p <= 0) continue;
        AffineWeight y = x - p * data.simple_root(i);
        if (seen.count(y) || !admissible(y)) continue;
        std::vector<int> w2;
        w2.reserve(word.size() + 1);
        w2.push_back(i);
        w2.insert(w2.end(), word.begin(), word.end());
        auto it = next.find(y);
        if (it == next.end())
          next.emplace(std::move(y), std::move(w2));
        else if (w2 < it->second)
          it->second = std::move(w2);
      }
    }
    for (const auto& [x, word] : next) seen.insert(x);
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Contribution& a, const Contribution& b) {
    if (a.w.length() != b.w.length()) return a.w.length() < b.w.length();
    return a.w.word < b.w.word;
  });
  return out;
}

}  // namespace kmq

namespace kmq {

Rational rho_check_pairing(const CartanData& data, const AffineWeight& x) {
  if (data.affine()) throw InvalidInput("rho_check pairing is defined here for finite data only");
  Rational s = 0;
  for (const auto& r : positive_roots_up_to(data, 0)) s += data.form(x, r.root) / data.form(r.root, r.root);
  return s;
}

std::vector<AffineWeight> dominant_weights_of_level(const CartanData& data, Int k) {
  if (!data.affine()) throw InvalidInput("levels apply to affine data only");
  if (k < 0) throw InvalidInput("level must be nonnegative");
  const int r = data.rank();
  std::vector<AffineWeight> out;
  std::vector<Int> labels(r, 0);
  auto rec = [&](auto&& self, int i, Int left) -> void {
    if (i > r) {
      // The node-0 label absorbs what is left of the level.
      if (left % data.comark(0) == 0) out.emplace_back(k, labels, 0);
      return;
    }
    for (Int x = 0; x * data.comark(i) <= left; ++x) {
      labels[i - 1] = x;
      self(self, i + 1, left - x * data.comark(i));
    }
    labels[i - 1] = 0;
  };
  rec(rec, 1, k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineWeight> dominant_weights_up_to(const CartanData& data, const Rational& bound) {
  if (data.affine()) throw InvalidInput("use dominant_weights_of_level for affine data");
  const int r = data.rank();
  std::vector<Rational> unit(r);
  for (int i = 1; i <= r; ++i) {
    unit[i - 1] = rho_check_pairing(data, data.fundamental_weight(i));
    if (unit[i - 1] <= 0) throw std::logic_error("fundamental weight with nonpositive rho_check pairing");
  }
  std::vector<AffineWeight> out;
  std::vector<Int> labels(r, 0);
  auto rec = [&](auto&& self, int i, Rational left) -> void {
    if (i > r) {
      out.emplace_back(0, labels, 0);
      return;
    }
    for (Int x = 0; x * unit[i - 1] <= left; ++x) {
      labels[i - 1] = x;
      self(self, i + 1, left - x * unit[i - 1]);
    }
    labels[i - 1] = 0;
  };
  rec(rec, 1, bound);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kmq
