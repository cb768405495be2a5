#include "kmq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "kmq/brylinski.hpp"
#include "kmq/errors.hpp"
#include "kmq/freudenthal.hpp"
#include "kmq/io.hpp"
#include "kmq/kostant.hpp"
#include "kmq/levelrank.hpp"
#include "kmq/weyl.hpp"

namespace kmq {

namespace {

struct RunConfig {
  std::string type;
  int rank = 0;
  bool dual = false;
  bool finite = false;
  std::optional<Int> level;
  std::string lambda;
  std::string mu;
  Int depth = 2;
  std::string format = "text";
  std::string out_path;
  bool nondominant = false;
  std::string height = "4";
  int N = 2;
  Int k = 2;
  Int bound = 2;
  std::vector<Int> v, w;
};

// Rows of strings rendered as an aligned text table, CSV or nothing.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  // `csv` replaces `row` in CSV output when given.
  void add(std::vector<std::string> row, std::vector<std::string> csv = {}) {
    csv_.push_back(csv.empty() ? row : std::move(csv));
    rows_.push_back(std::move(row));
  }

  void write_text(std::ostream& os) const {
    std::vector<std::size_t> width(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) {
      width[c] = header_[c].size();
      for (const auto& r : rows_) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t c = 0; c < r.size(); ++c) {
        s += r[c];
        if (c + 1 < r.size()) s += std::string(width[c] - r[c].size() + 2, ' ');
      }
      os << s << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

  void write_csv(std::ostream& os) const {
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << r[c];
      os << '\n';
    };
    line(header_);
    for (const auto& r : csv_) line(r);
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::vector<std::string>> csv_;
};

void emit(const RunConfig& cfg, const Table& table, const Json& json, const std::string& title, std::ostream& os) {
  if (cfg.format == "json") {
    os << json.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    table.write_csv(os);
  } else {
    if (!title.empty()) os << title << '\n';
    table.write_text(os);
  }
}

CartanData algebra(const RunConfig& cfg) {
  if (cfg.type.empty()) throw InvalidInput("--type is required");
  std::string symbol = cfg.type;
  const bool has_rank = std::any_of(symbol.begin(), symbol.end(), [](char c) { return std::isdigit(c) != 0; });
  if (!has_rank) {
    if (cfg.rank <= 0) throw InvalidInput("give the rank with --rank or in the type symbol");
    symbol += std::to_string(cfg.rank);
  } else if (cfg.rank > 0 && parse_type_symbol(symbol).second != cfg.rank) {
    throw InvalidInput("--rank disagrees with --type " + symbol);
  }
  if (cfg.finite) {
    if (cfg.dual) throw InvalidInput("--dual applies to affine data only");
    return build_finite_data(symbol);
  }
  return build_affine_data(symbol, cfg.dual);
}

AffineWeight lambda_of(const CartanData& data, const RunConfig& cfg) {
  if (cfg.lambda.empty()) throw InvalidInput("--lambda is required");
  AffineWeight lambda = parse_weight(data, cfg.lambda);
  if (cfg.level && data.affine() && lambda.level != *cfg.level)
    throw InvalidInput("lambda has level " + std::to_string(lambda.level) + ", not --level " +
                       std::to_string(*cfg.level));
  if (!is_dominant(data, lambda)) throw InvalidInput("lambda must be dominant: " + to_string(lambda));
  return lambda;
}

void check_depth(const RunConfig& cfg) {
  if (cfg.depth < 0) throw InvalidInput("--depth must be nonnegative");
}

std::string title_of(const CartanData& data, const std::string& what) { return "# " + data.label() + " " + what; }

int cmd_qkostant(const RunConfig& cfg, std::ostream& os) {
  check_depth(cfg);
  CartanData data = algebra(cfg);
  AffineWeight lambda = lambda_of(data, cfg);
  AffineWeight top = cfg.mu.empty() ? lambda : parse_weight(data, cfg.mu);
  const Int rows = data.affine() ? cfg.depth : 0;
  Table table({"n", "mu", "C(q)"});
  Json jrows = Json::array();
  for (Int n = 0; n <= rows; ++n) {
    AffineWeight mu = top - n * data.delta();
    if (!data.affine()) mu = top;
    QPolynomial c = q_multiplicity(data, lambda, mu, cfg.depth, cfg.nondominant);
    table.add({std::to_string(n), to_string(mu), c.to_string()}, {std::to_string(n), compact(mu), join(c)});
    jrows.push_back(Json{{"n", n}, {"mu", to_json(mu)}, {"c", to_json(c)}});
  }
  Json j{{"command", "qkostant"},
         {"algebra", data.label()},
         {"lambda", to_json(lambda)},
         {"depth", cfg.depth},
         {"rows", jrows}};
  emit(cfg, table, j, title_of(data, "lambda = " + to_string(lambda)), os);
  return kExitOk;
}

int cmd_brylinski(const RunConfig& cfg, std::ostream& os) {
  check_depth(cfg);
  CartanData data = algebra(cfg);
  std::vector<AffineWeight> lambdas;
  if (!cfg.lambda.empty()) {
    lambdas.push_back(lambda_of(data, cfg));
  } else if (data.affine()) {
    if (!cfg.level) throw InvalidInput("give --lambda or --level");
    lambdas = dominant_weights_of_level(data, *cfg.level);
  } else {
    Rational h;
    if (h.set_str(cfg.height, 10) != 0) throw InvalidInput("--height must be a rational number");
    h.canonicalize();
    lambdas = dominant_weights_up_to(data, h);
  }

  Table table({"lambda", "mu", "dim", "eC(q)", "C(q)", "status"});
  Json jrows = Json::array();
  bool all = true;
  for (const auto& lambda : lambdas) {
    std::vector<AffineWeight> mus;
    if (!cfg.mu.empty()) {
      AffineWeight mu = parse_weight(data, cfg.mu);
      if (!is_dominant(data, mu)) throw InvalidInput("mu must be dominant: " + to_string(mu));
      mus.push_back(mu);
    } else {
      mus = MultiplicityTable(data, lambda, cfg.depth).dominant_weights();
    }
    ModuleSlice slice = construct_slice(data, lambda, cfg.depth);
    for (const auto& mu : mus) {
      QPolynomial ec = principal_filtration(slice, mu);
      QPolynomial c = q_multiplicity(data, lambda, mu, cfg.depth);
      const bool match = ec == c;
      all = all && match;
      const std::size_t dim = slice.dim(mu);
      const std::string status = match ? "MATCH" : "MISMATCH";
      table.add({to_string(lambda), to_string(mu), std::to_string(dim), ec.to_string(), c.to_string(), status},
                {compact(lambda), compact(mu), std::to_string(dim), join(ec), join(c), status});
      jrows.push_back(Json{{"lambda", to_json(lambda)},
                           {"mu", to_json(mu)},
                           {"dim", dim},
                           {"eC", to_json(ec)},
                           {"C", to_json(c)},
                           {"match", match}});
    }
  }
  Json j{{"command", "brylinski"}, {"algebra", data.label()}, {"depth", cfg.depth}, {"rows", jrows}, {"all_match", all}};
  emit(cfg, table, j, title_of(data, "principal filtration vs q-analog"), os);
  return all ? kExitOk : kExitMismatch;
}

int cmd_levelrank(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
  if (cfg.bound < 0) throw InvalidInput("--bound must be nonnegative");
  std::vector<DualityRow> rows;
  bool inconsistent = false;
  std::string problem;
  if (!cfg.v.empty() || !cfg.w.empty()) {
    if (static_cast<Int>(cfg.v.size()) != cfg.k || static_cast<Int>(cfg.w.size()) != cfg.k)
      throw InvalidInput("--v and --w need k entries each");
    try {
      rows.push_back(duality_row(cfg.v, cfg.w, cfg.N, cfg.k));
      if (rows.back().skipped) {
        inconsistent = true;
        problem = "shifted weight is not dominant";
      }
    } catch (const Inconsistent& e) {
      DualityRow r;
      r.v = cfg.v;
      r.w = cfg.w;
      r.skipped = true;
      rows.push_back(r);
      inconsistent = true;
      problem = e.what();
    }
  } else {
    rows = duality_sweep(cfg.N, cfg.k, cfg.bound);
  }

  Table table({"v", "w", "lambda_bar", "mu_bar", "lambda", "mu", "a", "lhs", "rhs", "nakaj", "status"});
  Json jrows = Json::array();
  bool all = true;
  for (const auto& r : rows) {
    std::string status;
    if (r.skipped)
      status = inconsistent ? "INCONSISTENT" : "SKIPPED";
    else
      status = r.equal() ? "EQUAL" : "DIFFERENT";
    all = all && r.equal();
    if (r.skipped) {
      table.add({join(r.v), join(r.w), "", "", "", "", "", "", "", "", status});
      jrows.push_back(Json{{"v", r.v}, {"w", r.w}, {"status", status}});
      continue;
    }
    table.add({join(r.v), join(r.w), join(r.lift.lambda_bar), join(r.lift.mu_bar), compact(r.lift.lambda),
               compact(r.lift.mu), std::to_string(r.lift.a), std::to_string(r.lhs), std::to_string(r.rhs),
               r.nakaj ? "true" : "false", status});
    jrows.push_back(Json{{"v", r.v},
                         {"w", r.w},
                         {"lambda_bar", r.lift.lambda_bar},
                         {"mu_bar", r.lift.mu_bar},
                         {"lambda", to_json(r.lift.lambda)},
                         {"mu", to_json(r.lift.mu)},
                         {"a", r.lift.a},
                         {"lhs", r.lhs},
                         {"rhs", r.rhs},
                         {"nakaj", r.nakaj},
                         {"status", status}});
  }
  Json j{{"command", "levelrank"}, {"N", cfg.N}, {"k", cfg.k}, {"bound", cfg.bound}, {"rows", jrows}};
  emit(cfg, table, j,
       "# level-rank duality N = " + std::to_string(cfg.N) + ", k = " + std::to_string(cfg.k), os);
  if (inconsistent) {
    err << "inconsistent (v, w): " << problem << '\n';
    return kExitInconsistent;
  }
  return all ? kExitOk : kExitMismatch;
}

int cmd_data(const RunConfig& cfg, std::ostream& os) {
  CartanData data = algebra(cfg);
  Json j = to_json(data);
  if (cfg.format == "json") {
    os << j.dump(2) << '\n';
    return kExitOk;
  }
  Table table({"node", "cartan row", "mark", "comark", "symmetrizer"});
  for (int i : data.nodes()) {
    std::vector<Int> row;
    for (int jn : data.nodes()) row.push_back(data.cartan(i, jn));
    table.add({std::to_string(i), join(row), std::to_string(data.mark(i)), std::to_string(data.comark(i)),
               data.symmetrizer(i).get_str()});
  }
  emit(cfg, table, j, title_of(data, "dual Coxeter number " + std::to_string(data.dual_coxeter())), os);
  return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& os) {
  check_depth(cfg);
  CartanData data = algebra(cfg);
  MultiplicityTable table(data, lambda_of(data, cfg), cfg.depth);
  if (cfg.format == "csv") {
    write_multiplicity_csv(os, table);
    return kExitOk;
  }
  Table t({"weight", "multiplicity"});
  Json jrows = Json::array();
  for (const auto& [mu, m] : table.all_weights()) {
    t.add({to_string(mu), std::to_string(m)});
    jrows.push_back(Json{{"mu", to_json(mu)}, {"multiplicity", m}});
  }
  Json j{{"command", "table"},
         {"algebra", data.label()},
         {"lambda", to_json(table.highest_weight())},
         {"depth", cfg.depth},
         {"rows", jrows}};
  emit(cfg, t, j, title_of(data, "weight multiplicities of L" + to_string(table.highest_weight())), os);
  return kExitOk;
}

int cmd_slice(const RunConfig& cfg, std::ostream& os) {
  check_depth(cfg);
  CartanData data = algebra(cfg);
  ModuleSlice slice = construct_slice(data, lambda_of(data, cfg), cfg.depth);
  Json j = to_json(slice);
  if (cfg.format == "json") {
    os << j.dump(2) << '\n';
    return kExitOk;
  }
  Table t({"weight", "dim"});
  for (const auto& s : slice.spaces()) t.add({to_string(s.weight), std::to_string(s.dim())}, {compact(s.weight), std::to_string(s.dim())});
  emit(cfg, t, j, title_of(data, "slice of L" + to_string(slice.highest_weight())), os);
  return kExitOk;
}

void algebra_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--type", cfg.type, "Finite type symbol such as A1, B3 or G2, or a series letter with --rank");
  app->add_option("--rank", cfg.rank, "Rank, when --type is a series letter");
  app->add_option("--dual", cfg.dual, "Use the Langlands dual affine algebra (true/false)");
  app->add_flag("--finite", cfg.finite, "Use the finite-type algebra instead of its affinization");
}

void output_options(CLI::App* app, RunConfig& cfg, bool csv = true) {
  std::vector<std::string> formats{"text", "json"};
  if (csv) formats.push_back("csv");
  app->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
  app->add_option("--out", cfg.out_path, "Write the report to this file");
}

void weight_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--level", cfg.level, "Level of lambda");
  app->add_option("--lambda", cfg.lambda, "Highest weight, e.g. L0+L1 or 2*L0-d");
  app->add_option("--mu", cfg.mu, "Weight mu, same grammar as --lambda");
  app->add_option("--depth", cfg.depth, "Truncation depth in units of delta")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact q-analogs of weight multiplicities for finite and affine Kac-Moody algebras", "kmq"};
  app.require_subcommand(1);

  std::function<int(std::ostream&)> action;

  auto* qk = app.add_subcommand("qkostant", "C^lambda_mu(q) along the string mu - n delta, n <= depth");
  algebra_options(qk, cfg);
  weight_options(qk, cfg);
  output_options(qk, cfg);
  qk->add_flag("--experimental-nondominant", cfg.nondominant,
               "Evaluate the alternating sum for non-dominant mu (no correctness contract)");
  qk->callback([&] { action = [&](std::ostream& os) { return cmd_qkostant(cfg, os); }; });

  auto* br = app.add_subcommand("brylinski", "Compare the principal filtration with C^lambda_mu(q)");
  algebra_options(br, cfg);
  weight_options(br, cfg);
  output_options(br, cfg);
  br->add_option("--height", cfg.height, "Finite sweep bound on <lambda, rho_check> when --lambda is absent")
      ->capture_default_str();
  br->callback([&] { action = [&](std::ostream& os) { return cmd_brylinski(cfg, os); }; });

  auto* lr = app.add_subcommand("levelrank", "Level-rank duality table for SL(N) at level k");
  lr->add_option("--N", cfg.N, "Rank parameter N")->capture_default_str();
  lr->add_option("--k", cfg.k, "Level k")->capture_default_str();
  lr->add_option("--bound", cfg.bound, "Sweep all v with sum v <= bound")->capture_default_str();
  lr->add_option("--v", cfg.v, "A single dimension vector v (k entries)")->delimiter(',');
  lr->add_option("--w", cfg.w, "A single dimension vector w (k entries)")->delimiter(',');
  output_options(lr, cfg);
  lr->callback([&] { action = [&](std::ostream& os) { return cmd_levelrank(cfg, os, err); }; });

  auto* da = app.add_subcommand("data", "Cartan data of an algebra");
  algebra_options(da, cfg);
  output_options(da, cfg, false);
  da->callback([&] { action = [&](std::ostream& os) { return cmd_data(cfg, os); }; });

  auto* tb = app.add_subcommand("table", "Weight multiplicities of L(lambda) by Freudenthal's formula");
  algebra_options(tb, cfg);
  weight_options(tb, cfg);
  output_options(tb, cfg);
  tb->callback([&] { action = [&](std::ostream& os) { return cmd_table(cfg, os); }; });

  auto* sl = app.add_subcommand("slice", "Weight spaces of L(lambda) with the Chevalley generator matrices");
  algebra_options(sl, cfg);
  weight_options(sl, cfg);
  output_options(sl, cfg, false);
  sl->callback([&] { action = [&](std::ostream& os) { return cmd_slice(cfg, os); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    std::ostringstream report;
    const int code = action(report);
    if (cfg.out_path.empty()) {
      out << report.str();
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw InvalidInput("cannot open " + cfg.out_path + " for writing");
      file << report.str();
    }
    return code;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DepthExceeded& e) {
    err << "depth exceeded: " << e.what() << '\n';
    return kExitDepth;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const Inconsistent& e) {
    err << "inconsistent input: " << e.what() << '\n';
    return kExitInconsistent;
  }
}

}  // namespace kmq
