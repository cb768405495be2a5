#include "kmq/io.hpp"

#include <cctype>
#include <sstream>

#include "kmq/errors.hpp"

namespace kmq {

Json to_json(const AffineWeight& w) {
  return Json{{"level", w.level}, {"finite", w.finite}, {"energy", w.energy}};
}

AffineWeight weight_from_json(const Json& j) {
  return AffineWeight(j.at("level").get<Int>(), j.at("finite").get<std::vector<Int>>(), j.at("energy").get<Int>());
}

Json to_json(const QPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) {
    if (c.fits_slong_p())
      a.push_back(c.get_si());
    else
      a.push_back(c.get_str());
  }
  return a;
}

QPolynomial qpoly_from_json(const Json& j) {
  std::vector<mpz_class> c;
  for (const auto& x : j) c.emplace_back(x.is_string() ? mpz_class(x.get<std::string>()) : mpz_class(x.get<long>()));
  return QPolynomial(std::move(c));
}

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CartanData& data) {
  Json cartan = Json::array();
  Json sym = Json::array();
  for (int i : data.nodes()) {
    Json row = Json::array();
    for (int j : data.nodes()) row.push_back(data.cartan(i, j));
    cartan.push_back(std::move(row));
    sym.push_back(to_json(data.symmetrizer(i)));
  }
  Json j{{"label", data.label()},
         {"base", data.base_symbol()},
         {"rank", data.rank()},
         {"affine", data.affine()},
         {"dual", data.dual()},
         {"twist", data.twist()},
         {"nodes", data.nodes()},
         {"cartan", cartan},
         {"symmetrizer", sym},
         {"marks", data.marks()},
         {"comarks", data.comarks()},
         {"dual_coxeter", data.dual_coxeter()}};
  if (data.affine()) {
    Json im = Json::array();
    for (Int n = 1; n <= data.twist(); ++n) im.push_back(data.imag_mult(n));
    j["imaginary_multiplicities"] = im;
  }
  return j;
}

Json to_json(const ModuleSlice& slice) {
  const auto& data = slice.data();
  Json spaces = Json::array();
  for (const auto& s : slice.spaces()) {
    Json e = Json::object(), f = Json::object();
    for (int i : data.nodes()) {
      const auto k = static_cast<std::size_t>(i - data.first_node());
      if (s.e[k]) e[std::to_string(i)] = to_json(*s.e[k]);
      if (s.f[k]) f[std::to_string(i)] = to_json(*s.f[k]);
    }
    spaces.push_back(Json{{"weight", to_json(s.weight)},
                          {"gap", s.gap},
                          {"dim", s.dim()},
                          {"basis_words", s.basis_words},
                          {"e", e},
                          {"f", f}});
  }
  return Json{{"algebra", data.label()},
              {"lambda", to_json(slice.highest_weight())},
              {"depth", slice.depth()},
              {"spaces", spaces}};
}

std::string join(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
  return s;
}

std::string join(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ";" : "") + c[i].get_str();
  return s;
}

std::string compact(const AffineWeight& w) {
  std::vector<Int> v{w.level};
  v.insert(v.end(), w.finite.begin(), w.finite.end());
  v.push_back(w.energy);
  return join(v);
}

namespace {

class WeightParser {
 public:
  WeightParser(const CartanData& data, const std::string& text) : data_(data) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  AffineWeight parse() {
    if (s_.empty()) fail("empty weight");
    if (s_.front() == '(') return parse_tuple();
    AffineWeight total = data_.zero();
    bool first = true;
    while (pos_ < s_.size() || first) {
      Int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      total += sign * parse_term();
    }
    return total;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("cannot parse weight \"" + s_ + "\" at position " + std::to_string(pos_) + ": " + what);
  }

  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Int number() {
    if (!at_digit()) fail("expected a number");
    Int n = 0;
    while (at_digit()) {
      if (n > 100000000) fail("coefficient too large");
      n = n * 10 + (get() - '0');
    }
    return n;
  }

  Int signed_number() {
    Int sign = 1;
    if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1 : 1;
    return sign * number();
  }

  AffineWeight parse_term() {
    Int coeff = 1;
    bool had_number = false;
    if (at_digit()) {
      coeff = number();
      had_number = true;
      if (peek() == '*') get();
    }
    if (peek() == '\0' || peek() == '+' || peek() == '-') {
      if (had_number && coeff == 0) return data_.zero();
      fail("expected L<i>, a<i> or d");
    }
    const char sym = get();
    if (sym == 'd') {
      if (!data_.affine()) fail("delta is only available for affine data");
      return coeff * data_.delta();
    }
    if (sym != 'L' && sym != 'a') fail(std::string("unknown symbol '") + sym + "'");
    const Int i = number();
    if (i > 1000 || !data_.valid_node(static_cast<int>(i))) fail("node " + std::to_string(i) + " is out of range");
    return coeff * (sym == 'L' ? data_.fundamental_weight(static_cast<int>(i)) : data_.simple_root(static_cast<int>(i)));
  }

  AffineWeight parse_tuple() {
    get();
    AffineWeight w = data_.zero();
    w.level = signed_number();
    if (get() != ';') fail("expected ';' after the level");
    w.finite.clear();
    for (;;) {
      w.finite.push_back(signed_number());
      if (peek() == ',') {
        get();
        continue;
      }
      break;
    }
    if (get() != ';') fail("expected ';' before the energy");
    w.energy = signed_number();
    if (get() != ')' || pos_ != s_.size()) fail("expected ')' at the end");
    if (!data_.conforms(w)) fail("expected " + std::to_string(data_.rank()) + " Dynkin labels");
    if (!data_.affine() && (w.level != 0 || w.energy != 0)) fail("finite data needs level and energy 0");
    return w;
  }

  const CartanData& data_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

AffineWeight parse_weight(const CartanData& data, const std::string& text) { return WeightParser(data, text).parse(); }

}  // namespace kmq
