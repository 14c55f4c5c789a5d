#include "lozenge/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lozenge/formulas.hpp"
#include "lozenge/io.hpp"
#include "lozenge/oracle.hpp"
#include "lozenge/render.hpp"
#include "lozenge/shuffle.hpp"
#include "lozenge/verify.hpp"

namespace lozenge {

namespace {

// Carries an exit code out of a subcommand.
struct Failure {
  int code;
  std::string message;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw Failure{kBadArgument, "cannot read " + path};
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

Json load(const std::string& path, std::istream& in) {
  try {
    return parse_json(read_input(path, in));
  } catch (const ParseError& e) {
    throw Failure{kParseError, e.what()};
  }
}

Region load_region(const std::string& path, std::istream& in) {
  const Json j = load(path, in);
  try {
    return parse_region(j);
  } catch (const ParseError& e) {
    throw Failure{kParseError, e.what()};
  } catch (const DomainError& e) {
    throw Failure{kInvalidRegion, std::string("invalid region: ") + e.what()};
  }
}

const DentedHexagon& require_hexagon(const Region& r, const std::string& why) {
  if (const auto* h = std::get_if<DentedHexagon>(&r)) return *h;
  throw Failure{kInvalidRegion, "invalid region: " + why + ": a hexagon is required"};
}

ShuffleInstance load_shuffle(const std::string& path, std::istream& in) {
  const Json j = load(path, in);
  std::optional<ShuffleDescriptor> d;
  try {
    d = parse_shuffle(j);
  } catch (const ParseError& e) {
    throw Failure{kParseError, e.what()};
  } catch (const DomainError& e) {
    throw Failure{kInvalidShuffle, std::string("invalid shuffle: ") + e.what()};
  }
  std::optional<Region> source;
  try {
    source = parse_region(d->source);
  } catch (const ParseError& e) {
    throw Failure{kParseError, e.what()};
  } catch (const DomainError& e) {
    throw Failure{kInvalidRegion, std::string("invalid region: ") + e.what()};
  }
  try {
    return make_shuffle(require_hexagon(*source, "shuffle source"), d->new_up, d->new_down);
  } catch (const DomainError& e) {
    throw Failure{kInvalidShuffle, std::string("invalid shuffle: ") + e.what()};
  }
}

bool within_budget(const CellGrid& g) { return g.present_count() <= kOracleCellBudget; }

std::string resolve_method(const std::string& requested, const CellGrid& g) {
  if (requested != "auto") return requested;
  return within_budget(g) ? "both" : "formula";
}

// Runs the oracle when requested; an oracle that cannot handle the region is
// a bad argument, since only an explicit request reaches it for big regions.
template <class Fn>
auto run_oracle(Fn&& fn) {
  try {
    return fn();
  } catch (const DomainError& e) {
    throw Failure{kBadArgument, std::string("oracle unavailable: ") + e.what()};
  }
}

Integer formula_count(const Region& r) {
  return std::visit([](const auto& x) -> Integer {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, DentedHexagon>) return hex_count(x);
    else return clp_count(x);
  }, r);
}

QPolynomial formula_count_q(const Region& r) {
  return std::visit([](const auto& x) -> QPolynomial {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, DentedHexagon>) return hex_count_q(x);
    else return clp_count_q(x);
  }, r);
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_count(const std::string& path, const std::string& method_flag, std::istream& in, std::ostream& out) {
  const Region r = load_region(path, in);
  const CellGrid g = build_cells(r);
  const std::string method = resolve_method(method_flag, g);
  std::optional<Integer> f, o;
  if (method != "oracle") f = formula_count(r);
  if (method != "formula") o = run_oracle([&] { return count_tilings(g); });
  const bool agree = !(f && o) || *f == *o;
  Json j;
  j["region"] = to_json(r);
  j["count"] = (f ? *f : *o).str();
  j["method"] = method;
  j["agree"] = agree;
  if (f && o) {
    j["formula_count"] = f->str();
    j["oracle_count"] = o->str();
  }
  print(out, j);
  return agree ? kOk : kVerificationFailed;
}

int cmd_count_q(const std::string& path, const std::string& method_flag, std::istream& in, std::ostream& out) {
  const Region r = load_region(path, in);
  const CellGrid g = build_cells(r);
  const std::string method = resolve_method(method_flag, g);
  std::optional<QPolynomial> f, o;
  if (method != "oracle") f = formula_count_q(r);
  if (method != "formula") o = run_oracle([&] { return generating_function_q(g); });
  const bool agree = !(f && o) || *f == *o;
  const QPolynomial& p = f ? *f : *o;
  Json j;
  j["region"] = to_json(r);
  j["count"] = evaluate_at_one(p).str();
  j["method"] = method;
  j["agree"] = agree;
  j["coeffs"] = coefficients_json(p);
  if (f && o) j["oracle_coeffs"] = coefficients_json(*o);
  print(out, j);
  return agree ? kOk : kVerificationFailed;
}

int cmd_sym_count(const std::string& path, const std::string& method_flag, std::istream& in, std::ostream& out) {
  const Region r = load_region(path, in);
  const DentedHexagon& h = require_hexagon(r, "central symmetry");
  if (!is_centrally_symmetric(h))
    throw Failure{kInvalidRegion, "invalid region: central symmetry: " + describe(h) +
                                      " is not centrally symmetric (need b = c and Y = X reflected)"};
  const CellGrid g = build_cells(r);
  const std::string method = resolve_method(method_flag, g);
  std::optional<Integer> f, o;
  if (method != "oracle") f = sym_count(h);
  if (method != "formula") o = run_oracle([&] { return count_centrally_symmetric(g); });
  const bool agree = !(f && o) || *f == *o;
  Json j;
  j["region"] = to_json(r);
  j["sym_count"] = (f ? *f : *o).str();
  j["method"] = method;
  j["agree"] = agree;
  if (f && o) {
    j["formula_count"] = f->str();
    j["oracle_count"] = o->str();
  }
  print(out, j);
  return agree ? kOk : kVerificationFailed;
}

bool cross_multiplied(const Integer& source, const Integer& target, const Rational& ratio) {
  return target * boost::multiprecision::denominator(ratio) == source * boost::multiprecision::numerator(ratio);
}

Json shuffle_header(const ShuffleInstance& s, const std::string& mode) {
  Json j;
  j["mode"] = mode;
  j["source"] = to_json(s.source);
  j["target"] = to_json(s.target);
  j["d"] = s.d;
  j["u"] = s.u;
  return j;
}

int cmd_ratio(const std::string& path, const std::string& mode, std::istream& in, std::ostream& out) {
  const ShuffleInstance s = load_shuffle(path, in);
  const CellGrid gs = build_cells(s.source), gt = build_cells(s.target);
  const bool oracle = within_budget(gs) && within_budget(gt);
  Json j = shuffle_header(s, mode);
  bool verified = false;

  if (mode == "plain") {
    const Rational r = ratio_unweighted(s);
    const Integer src = hex_count(s.source), dst = hex_count(s.target);
    verified = cross_multiplied(src, dst, r) && (!oracle || (count_tilings(gs) == src && count_tilings(gt) == dst));
    j["ratio"] = to_string(r);
    j["source_count"] = src.str();
    j["target_count"] = dst.str();
  } else if (mode == "weighted") {
    const QLaurentRatio r = ratio_weighted(s);
    const QPolynomial src = hex_count_q(s.source), dst = hex_count_q(s.target);
    const Rational at_one = r.evaluate(Rational(1));
    verified = r.satisfied_by(dst, src) && at_one == ratio_unweighted(s) &&
               (!oracle || (generating_function_q(gs) == src && generating_function_q(gt) == dst));
    j["alpha"] = alpha_shift(s);
    j["shift"] = r.shift();
    j["num_coeffs"] = coefficients_json(r.numerator());
    j["den_coeffs"] = coefficients_json(r.denominator());
    j["at_q1"] = to_string(at_one);
  } else {
    if (!is_symmetric_shuffle(s))
      throw Failure{kInvalidShuffle, "invalid shuffle: symmetric flips: the shuffle does not keep both regions "
                                     "centrally symmetric"};
    Rational r;
    try {
      r = ratio_symmetric(s);
    } catch (const DomainError& e) {
      throw Failure{kInvalidShuffle, std::string("invalid shuffle: ") + e.what()};
    }
    const Integer src = sym_count(s.source), dst = sym_count(s.target);
    const bool squared = r * r == ratio_unweighted(s);
    verified = cross_multiplied(src, dst, r) && squared &&
               (!oracle || (count_centrally_symmetric(gs) == src && count_centrally_symmetric(gt) == dst));
    j["ratio"] = to_string(r);
    j["source_sym_count"] = src.str();
    j["target_sym_count"] = dst.str();
    j["squared_matches_plain"] = squared;
    j["both_counts_zero"] = src == 0 && dst == 0;
  }
  j["oracle_checked"] = oracle;
  j["verified"] = verified;
  print(out, j);
  return verified ? kOk : kVerificationFailed;
}

int cmd_verify(int max_size, std::uint64_t seed, int cases, std::ostream& out) {
  VerifyOptions options;
  options.max_size = max_size;
  options.seed = seed;
  options.cases = cases;
  const VerifyReport report = run_verification(options);
  Json j;
  j["max_size"] = max_size;
  j["seed"] = seed;
  j["cases"] = cases;
  const Json body = report.to_json();
  j["suites"] = body.at("suites");
  j["passed"] = body.at("passed");
  print(out, j);
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_render(const std::string& path, const std::string& format, std::optional<std::size_t> index,
               std::istream& in, std::ostream& out) {
  const Region r = load_region(path, in);
  const CellGrid g = build_cells(r);
  std::optional<Tiling> t;
  std::string title = describe(r);
  if (index) {
    t = nth_tiling(g, *index);
    if (!t) throw Failure{kBadArgument, "tiling index " + std::to_string(*index) + " out of range"};
    title += ", tiling " + std::to_string(*index);
  }
  out << (format == "svg" ? render_svg(g, t, title) : render_ascii(g, t, title));
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lozenge-tiling counts and shuffling ratios for dented hexagons and trapezoids", "lozenge"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string method = "auto";
  std::string mode = "plain";
  std::string format = "ascii";
  int max_size = 4;
  std::uint64_t seed = 1;
  int cases = 100;
  std::optional<std::size_t> tiling;

  const auto methods = CLI::IsMember({"auto", "formula", "oracle", "both"});
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "JSON descriptor file, or - for stdin")->capture_default_str();
  };

  CLI::App* count = app.add_subcommand("count", "Number of lozenge tilings");
  CLI::App* count_q = app.add_subcommand("count-q", "Tiling generating function in q");
  CLI::App* sym = app.add_subcommand("sym-count", "Number of centrally symmetric tilings");
  for (CLI::App* cmd : {count, count_q, sym}) {
    add_input(cmd);
    cmd->add_option("--method", method, "formula, oracle, both, or auto (both up to 60 cells)")
        ->check(methods)
        ->capture_default_str();
  }
  CLI::App* ratio = app.add_subcommand("ratio", "Tiling ratio of a shuffle");
  add_input(ratio);
  ratio->add_option("--mode", mode, "plain, weighted, or symmetric")
      ->check(CLI::IsMember({"plain", "weighted", "symmetric"}))
      ->capture_default_str();
  CLI::App* verify = app.add_subcommand("verify", "Check closed forms against the oracle");
  verify->add_option("--max-size", max_size, "Largest diagonal/height swept")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--seed", seed, "Seed for the randomized suites")->capture_default_str();
  verify->add_option("--cases", cases, "Cases per randomized suite")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  CLI::App* render = app.add_subcommand("render", "Draw a region or one of its tilings");
  add_input(render);
  render->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}))->capture_default_str();
  render->add_option("--tiling", tiling, "Index of the tiling in enumeration order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadArgument;
  }

  try {
    if (*count) return cmd_count(input, method, in, out);
    if (*count_q) return cmd_count_q(input, method, in, out);
    if (*sym) return cmd_sym_count(input, method, in, out);
    if (*ratio) return cmd_ratio(input, mode, in, out);
    if (*verify) return cmd_verify(max_size, seed, cases, out);
    return cmd_render(input, format, tiling, in, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  }
}

}  // namespace lozenge
