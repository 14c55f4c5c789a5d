#include "lozenge/verify.hpp"

#include <algorithm>
#include <tuple>

#include "lozenge/oracle.hpp"

namespace lozenge {

int uniform(Rng& rng, int lo, int hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

namespace {

DentSet random_subset(Rng& rng, int k, int size) {
  std::vector<int> all(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 0; i < size; ++i) std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(uniform(rng, i, k - 1))]);
  all.resize(static_cast<std::size_t>(size));
  return DentSet::from_unordered(std::move(all));
}

DentSet random_subset_of(Rng& rng, const DentSet& from) {
  std::vector<int> out;
  for (int p : from)
    if (rng() & 1u) out.push_back(p);
  return DentSet(std::move(out));
}

Json shuffle_json(const ShuffleInstance& s) {
  Json j;
  j["source"] = to_json(s.source);
  j["Xp"] = s.up_dents.positions();
  j["Yp"] = s.down_dents.positions();
  return j;
}

// Collects one suite's outcome, remembering the smallest failing instance.
class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  template <class Check>
  void run(long size_key, const std::function<Json()>& describe, Check&& check) {
    ++result_.cases;
    std::string why;
    bool ok = false;
    try {
      ok = check(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (ok) return;
    ++result_.failures;
    if (!best_ || size_key < *best_) {
      best_ = size_key;
      result_.counterexample = describe();
      result_.detail = why;
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
  std::optional<long> best_;
};

long size_of(const DentedHexagon& h) { return h.a() + h.b() + h.c(); }

}  // namespace

void for_each_trapezoid(int max_width, const std::function<void(const Trapezoid&)>& fn) {
  for (int w = 0; w <= max_width; ++w)
    for (int n = 0; n <= w; ++n)
      for_each_subset(DentSet::range(w), static_cast<std::size_t>(n),
                      [&](const DentSet& s) { fn(Trapezoid::make(w - n, n, s)); });
}

void for_each_hexagon(int max_diagonal, int max_height, const std::function<void(const DentedHexagon&)>& fn) {
  for (int total = 0; total <= max_diagonal + max_height; ++total) {
    for (int a = 0; a <= total; ++a) {
      for (int b = 0; a + b <= std::min(total, max_diagonal); ++b) {
        const int c = total - a - b;
        if (c < 0 || b + c > max_height || c > a + b) continue;
        const int k = a + b;
        const DentSet all = DentSet::range(k);
        for (int nx = 0; nx <= std::min(b, k); ++nx) {
          const int ny = c - (b - nx);
          if (ny < 0 || ny > k) continue;
          for_each_subset(all, static_cast<std::size_t>(nx), [&](const DentSet& x) {
            for_each_subset(all, static_cast<std::size_t>(ny), [&](const DentSet& y) {
              try {
                fn(validate_hexagon(a, b, c, x, y));
              } catch (const DomainError&) {
              }
            });
          });
        }
      }
    }
  }
}

DentedHexagon random_hexagon(Rng& rng, int max_diagonal, int max_height) {
  // Biased toward the size bound: tiny regions are covered exhaustively.
  while (true) {
    const int k = uniform(rng, (max_diagonal + 1) / 2, max_diagonal);
    const int b_max = std::min(k, max_height);
    // Mostly keep a, b and c positive; degenerate shapes still appear.
    const int b = (rng() % 4 != 0 && k >= 2 && b_max >= 2) ? uniform(rng, 1, std::min(k - 1, b_max - 1))
                                                          : uniform(rng, 0, b_max);
    const int c_max = std::min(k, max_height - b);
    const int c = (rng() & 1u) ? c_max : uniform(rng, 0, c_max);
    const int slack = uniform(rng, std::min(b, c) / 2, std::min(b, c));
    try {
      return validate_hexagon(k - b, b, c, random_subset(rng, k, b - slack), random_subset(rng, k, c - slack));
    } catch (const DomainError&) {
    }
  }
}

ShuffleInstance random_shuffle(Rng& rng, int max_diagonal, int max_height) {
  // Prefer sources with unpaired dents and shuffles that move at least one;
  // fall back to whatever was drawn when none is available.
  for (int attempt = 0;; ++attempt) {
    const DentedHexagon h = random_hexagon(rng, max_diagonal, max_height);
    const DentSet both = set_intersection(h.up_dents(), h.down_dents());
    const DentSet singles = set_difference(set_union(h.up_dents(), h.down_dents()), both);
    const DentSet up_only = set_difference(h.up_dents(), both);
    if (singles.empty() && attempt < 16) continue;
    for (int flip = 0; flip < 8; ++flip) {
      const DentSet up = random_subset_of(rng, singles);
      if (up == up_only && !singles.empty() && flip < 7) continue;
      try {
        return make_shuffle(h, set_union(up, both), set_union(set_difference(singles, up), both));
      } catch (const DomainError&) {
      }
    }
  }
}

ShuffleInstance random_symmetric_shuffle(Rng& rng, int max_diagonal) {
  for (int attempt = 0;; ++attempt) {
    const int k = uniform(rng, (max_diagonal + 1) / 2, max_diagonal);
    const int b = uniform(rng, 0, k);
    const DentSet x = random_subset_of(rng, DentSet::range(k));
    if (static_cast<int>(x.size()) > b) continue;
    try {
      const DentedHexagon h = validate_hexagon(k - b, b, b, x, reflect_set(x, k));
      const DentSet movable = set_difference(x, h.down_dents());
      if (movable.empty() && attempt < 16) continue;
      DentSet flips = random_subset_of(rng, movable);
      for (int again = 0; flips.empty() && again < 4; ++again) flips = random_subset_of(rng, movable);
      const DentSet new_up = set_union(set_difference(x, flips), reflect_set(flips, k));
      return make_shuffle(h, new_up, reflect_set(new_up, k));
    } catch (const DomainError&) {
    }
  }
}

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failures == 0; });
}

Json VerifyReport::to_json() const {
  Json out;
  Json list = Json::array();
  for (const SuiteResult& s : suites) {
    Json j;
    j["name"] = s.name;
    j["cases"] = s.cases;
    j["failures"] = s.failures;
    if (s.counterexample) {
      j["counterexample"] = *s.counterexample;
      j["detail"] = s.detail;
    }
    list.push_back(std::move(j));
  }
  out["suites"] = std::move(list);
  out["passed"] = passed();
  return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
  const int n = std::max(options.max_size, 0);
  VerifyReport report;
  Rng rng(options.seed);

  {
    Suite suite("trapezoid_count");
    for_each_trapezoid(n, [&](const Trapezoid& t) {
      suite.run(t.m() + t.n(), [&] { return to_json(t); },
                [&](std::string& why) {
                  const Integer f = clp_count(t), o = count_tilings(build_cells(t));
                  why = "formula " + f.str() + " vs oracle " + o.str();
                  return f == o;
                });
    });
    report.suites.push_back(suite.take());
  }

  std::vector<DentedHexagon> hexagons;
  for_each_hexagon(n, n, [&](const DentedHexagon& h) { hexagons.push_back(h); });

  {
    Suite count("hexagon_count");
    Suite weighted("hexagon_q");
    Suite symmetric("symmetric_count");
    for (const DentedHexagon& h : hexagons) {
      const CellGrid g = build_cells(h);
      auto describe = [&] { return to_json(h); };
      count.run(size_of(h), describe, [&](std::string& why) {
        const Integer f = hex_count(h), o = count_tilings(g);
        why = "formula " + f.str() + " vs oracle " + o.str();
        return f == o;
      });
      weighted.run(size_of(h), describe, [&](std::string& why) {
        why = "closed-form generating function differs from the weighted oracle";
        return hex_count_q(h, options.alpha) == generating_function_q(g);
      });
      if (is_centrally_symmetric(h)) {
        symmetric.run(size_of(h), describe, [&](std::string& why) {
          const Integer f = sym_count(h), o = count_centrally_symmetric(g);
          why = "formula " + f.str() + " vs oracle " + o.str();
          return f == o;
        });
      }
    }
    report.suites.push_back(count.take());
    report.suites.push_back(weighted.take());
    report.suites.push_back(symmetric.take());
  }

  {
    Suite plain("shuffle_plain");
    Suite weighted("shuffle_weighted");
    for (int i = 0; i < options.cases; ++i) {
      const ShuffleInstance s = random_shuffle(rng, n, n);
      auto describe = [&] { return shuffle_json(s); };
      plain.run(size_of(s.source), describe, [&](std::string& why) {
        const Rational r = ratio_unweighted(s);
        const Integer src = count_tilings(build_cells(s.source));
        const Integer dst = count_tilings(build_cells(s.target));
        why = "counts " + src.str() + " -> " + dst.str() + " but ratio " + to_string(r);
        return dst * boost::multiprecision::denominator(r) == src * boost::multiprecision::numerator(r) &&
               src == hex_count(s.source) && dst == hex_count(s.target);
      });
      weighted.run(size_of(s.source), describe, [&](std::string& why) {
        why = "weighted ratio identity fails";
        return ratio_weighted(s).satisfied_by(hex_count_q(s.target, options.alpha),
                                              hex_count_q(s.source, options.alpha));
      });
    }
    report.suites.push_back(plain.take());
    report.suites.push_back(weighted.take());
  }

  {
    Suite symmetric("shuffle_symmetric");
    for (int i = 0; i < options.cases; ++i) {
      const ShuffleInstance s = random_symmetric_shuffle(rng, n);
      symmetric.run(size_of(s.source), [&] { return shuffle_json(s); }, [&](std::string& why) {
        const Rational r = ratio_symmetric(s);
        const Integer src = count_centrally_symmetric(build_cells(s.source));
        const Integer dst = count_centrally_symmetric(build_cells(s.target));
        why = "symmetric counts " + src.str() + " -> " + dst.str() + " but ratio " + to_string(r);
        return dst * boost::multiprecision::denominator(r) == src * boost::multiprecision::numerator(r) &&
               r * r == ratio_unweighted(s) && src == sym_count(s.source) && dst == sym_count(s.target);
      });
    }
    report.suites.push_back(symmetric.take());
  }

  return report;
}

}  // namespace lozenge
