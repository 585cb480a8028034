#pragma once

// Verification suites over a list of polytopes. Each check records a pass/fail
// line; theorem-check assertions thrown inside a check are caught and recorded
// as failures. Experimental data on open questions goes into `observations`
// and never affects the outcome.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "facecode/constructors.hpp"
#include "facecode/error.hpp"
#include "facecode/facecodes.hpp"
#include "facecode/morse.hpp"
#include "facecode/polytope.hpp"
#include "facecode/screen.hpp"
#include "facecode/smallcover.hpp"

namespace facecode {

struct CheckResult {
  std::string suite;
  std::string subject;
  std::string check;
  bool passed = false;
  std::optional<ErrorKind> error;  // set when the check threw
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> observations;

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
  }

  /// 0 when all checks pass, 2 when the only failures are budget overruns, else 3.
  int exit_code() const {
    int code = 0;
    for (const auto& c : checks) {
      if (c.passed) continue;
      if (c.error == ErrorKind::BudgetExceeded) {
        code = std::max(code, 2);
      } else {
        code = 3;
      }
    }
    return code;
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"colorability", "selfdual", "duality", "morse", "screen", "conjecture"};
  return names;
}

namespace detail {

struct CheckOutcome {
  bool passed = false;
  std::string detail;
};

inline void run_check(SuiteReport& report, const std::string& suite, const std::string& subject,
                      const std::string& check, const std::function<CheckOutcome()>& fn) {
  CheckResult r{suite, subject, check, false, std::nullopt, {}};
  try {
    auto out = fn();
    r.passed = out.passed;
    r.detail = std::move(out.detail);
  } catch (const Error& e) {
    r.error = e.kind();
    r.detail = e.what();
  }
  report.checks.push_back(std::move(r));
}

inline std::string ints(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

inline void colorability_suite(const std::vector<SimplePolytope>& ps, SuiteReport& rep) {
  const std::string s = "colorability";
  for (const auto& p : ps) {
    run_check(rep, s, p.name(), "criteria agree", [&]() -> CheckOutcome {
      const auto r = colorability_report(p);
      if (r.degenerate_dimension) {
        const auto b1 = face_code(p, 1).code.dim();
        rep.observations.push_back(p.name() + ": n=" + std::to_string(p.dim()) + ", colorable=" +
                                   (r.direct ? "yes" : "no") + ", dim B_1=" + std::to_string(b1) +
                                   ", m-n+1=" + std::to_string(p.num_facets() - p.dim() + 1));
        return {r.direct == is_even(p), std::string("colorable=") + (r.direct ? "yes" : "no")};
      }
      return {true, std::string("colorable=") + (r.direct ? "yes" : "no") + ", dim B_1=" + std::to_string(r.dim_b1)};
    });
    run_check(rep, s, p.name(), "small cover data", [&]() -> CheckOutcome {
      const auto c = find_coloring(p);
      if (!c) return {true, "not colorable"};
      const auto lambda = VectorColoring::standard_lift(p, *c);
      if (!validate_characteristic(p, lambda)) return {false, "lifted coloring is not characteristic"};
      const auto inv = admits_regular_m_involution(p, lambda);
      const auto h = fh_vectors(p).h;
      const bool ok = inv.admits && inv.fixed_points == p.num_vertices() && inv.betti == h &&
                      component_count(p, lambda) == 1;
      return {ok, "fixed points " + std::to_string(inv.fixed_points) + ", betti " + ints(inv.betti)};
    });
    if (is_even(p) && p.dim() >= 2) {
      run_check(rep, s, p.name(), "facet neighbor maps", [&]() -> CheckOutcome {
        for (int f = 0; f < p.num_facets(); ++f) {
          const auto xm = xi_map(p, f);
          if (!xm.injective) return {false, "not injective on facet " + std::to_string(f)};
          if (p.num_vertices() < 2 * static_cast<int>(p.facet(f).size())) return {false, "facet too large"};
        }
        return {true, "injective on all " + std::to_string(p.num_facets()) + " facets"};
      });
      run_check(rep, s, p.name(), "vertex count", [&]() -> CheckOutcome {
        const auto min_count = std::int64_t{1} << p.dim();
        const bool is_cube = combinatorially_equivalent(p, cube(p.dim()));
        const bool ok = p.num_vertices() >= min_count && ((p.num_vertices() == min_count) == is_cube);
        return {ok, std::to_string(p.num_vertices()) + " vertices, 2^n = " + std::to_string(min_count)};
      });
    }
    if (p.dim() == 3) {
      run_check(rep, s, p.name(), "3-connected skeleton", [&]() -> CheckOutcome {
        for (int a = 0; a < p.num_vertices(); ++a) {
          for (int b = a + 1; b < p.num_vertices(); ++b) {
            if (!skeleton_connected(p, {a, b})) return {false, "removing " + std::to_string(a) + "," + std::to_string(b)};
          }
        }
        return {true, ""};
      });
    }
  }
}

inline void selfdual_suite(const std::vector<SimplePolytope>& ps, SuiteReport& rep) {
  const std::string s = "selfdual";
  for (const auto& p : ps) {
    const int n = p.dim();
    run_check(rep, s, p.name(), "self-duality conditions", [&]() -> CheckOutcome {
      std::vector<int> self_dual;
      for (int k = 0; k <= n; ++k) {
        if (self_duality_report(p, k).direct) self_dual.push_back(k);
      }
      if (n == 4 && !self_dual.empty()) return {false, "self-dual face code in dimension 4"};
      std::string ks;
      for (int k : self_dual) ks += (ks.empty() ? "" : ",") + std::to_string(k);
      return {true, "self-dual k: {" + ks + "}"};
    });
    run_check(rep, s, p.name(), "dimension lower bound", [&]() -> CheckOutcome {
      const auto fh = fh_vectors(p);
      std::ostringstream dims;
      for (int k = 0; k <= n; ++k) {
        const int d = face_code(p, k).code.dim();
        if (d < h_prefix(fh, k)) return {false, "dim B_" + std::to_string(k) + " below h-prefix"};
        dims << (k ? "," : "") << d;
      }
      if (!is_even(p)) rep.observations.push_back(p.name() + ": dim B_k = (" + dims.str() + "), h = " + ints(fh.h));
      return {true, "dims (" + dims.str() + ")"};
    });
    if (!is_even(p)) continue;
    run_check(rep, s, p.name(), "dimension law", [&]() -> CheckOutcome {
      dimension_law_check(p);
      return {true, ""};
    });
    if (n % 2 == 1) {
      run_check(rep, s, p.name(), "minimum distance bound", [&]() -> CheckOutcome {
        const auto r = min_distance_bound_check(p);
        rep.observations.push_back(p.name() + ": k=" + std::to_string(r.k) + ", smallest face " +
                                   std::to_string(r.bound) + ", minimum distance " + std::to_string(r.exact));
        return {true, "bound " + std::to_string(r.bound) + ", exact " + std::to_string(r.exact)};
      });
      run_check(rep, s, p.name(), "doubly-even criterion", [&]() -> CheckOutcome {
        const auto r = doubly_even_report(p);
        return {true, std::string("doubly-even=") + (r.criterion ? "yes" : "no")};
      });
    }
  }
  for (int k = 1; k <= 2; ++k) {
    run_check(rep, s, "cube " + std::to_string(2 * k + 1), "equals RM(" + std::to_string(k) + "," + std::to_string(2 * k + 1) + ")",
              [&]() -> CheckOutcome { return {reed_muller_check(k), ""}; });
  }
}

inline void duality_suite(const std::vector<SimplePolytope>& ps, SuiteReport& rep) {
  const std::string s = "duality";
  for (const auto& p : ps) {
    if (!is_even(p)) continue;
    run_check(rep, s, p.name(), "dual of B_k is B_{n-1-k}", [&]() -> CheckOutcome { return {duality_complement_check(p), ""}; });
    run_check(rep, s, p.name(), "facet products span B_k", [&]() -> CheckOutcome {
      for (int k = 1; k <= p.dim(); ++k) {
        if (!circ_closure_check(p, k)) return {false, "k=" + std::to_string(k)};
      }
      return {true, ""};
    });
  }
}

inline void morse_suite(const std::vector<SimplePolytope>& ps, SuiteReport& rep, int seeds) {
  const std::string s = "morse";
  for (const auto& p : ps) {
    if (!p.has_coords()) continue;
    run_check(rep, s, p.name(), "height functions", [&]() -> CheckOutcome {
      const auto h = fh_vectors(p).h;
      const bool even = is_even(p);
      bool always_full = true;
      for (int seed = 0; seed < seeds; ++seed) {
        const auto phi = generic_height(p, static_cast<std::uint64_t>(seed));
        if (index_histogram(p, phi) != h) return {false, "index histogram differs from h at seed " + std::to_string(seed)};
        for (int k = 0; k <= p.dim(); ++k) {
          const auto b = extract_basis(p, phi, k);
          if (static_cast<std::int64_t>(b.selected.size()) != h_prefix(fh_vectors(p), k)) {
            return {false, "selection size at seed " + std::to_string(seed) + ", k=" + std::to_string(k)};
          }
          always_full = always_full && b.spans;
        }
      }
      if (p.dim() >= 3 && always_full != even) {
        return {false, std::string("full bases ") + (always_full ? "on" : "missing on") + (even ? " even" : " non-even") + " polytope"};
      }
      if (!even && p.dim() < 3) {
        rep.observations.push_back(p.name() + ": non-even, selected faces " + (always_full ? "always" : "not always") + " span B_k");
      }
      return {true, std::string("full bases: ") + (always_full ? "yes" : "no")};
    });
  }
}

inline void screen_suite(SuiteReport& rep) {
  const std::string s = "screen";
  struct Case {
    int l, d;
    bool de;
    ScreenVerdict::Status expected;
    const char* witness;
  };
  using St = ScreenVerdict::Status;
  const Case cases[] = {
      {24, 8, true, St::Infeasible, ""},          {48, 12, true, St::Infeasible, ""},
      {72, 16, true, St::Infeasible, ""},         {8, 4, true, St::FeasibleWitness, "cube 3"},
      {16, 4, true, St::FeasibleWitness, "prism 8"}, {2, 2, false, St::FeasibleWitness, "segment"},
      {12, 4, false, St::FeasibleWitness, "prism 6"},
  };
  for (const auto& c : cases) {
    const std::string subject = "(" + std::to_string(c.l) + "," + std::to_string(c.d) + "," + (c.de ? "true" : "false") + ")";
    run_check(rep, s, subject, "screen verdict", [&]() -> CheckOutcome {
      const auto v = realizability_screen(c.l, c.d, c.de);
      bool ok = v.status == c.expected;
      if (c.expected == St::FeasibleWitness) {
        ok = ok && v.witness && v.witness->to_string() == c.witness &&
             detail::witness_matches(v.witness->build(), c.l, c.d, c.de);
      } else {
        ok = ok && !v.trace.empty();
      }
      return {ok, std::string(to_string(v.status)) + (v.witness ? " " + v.witness->to_string() : "")};
    });
  }
  for (const char* r : {"cube 3", "prism 8"}) {
    run_check(rep, s, r, "extremal", [&]() -> CheckOutcome {
      const auto p = build_recipe(r);
      const auto code = face_code(p, 1).code;
      return {mallows_sloane(p.num_vertices()).is_extremal(code), ""};
    });
  }
}

inline void conjecture_suite(const std::vector<SimplePolytope>& ps, SuiteReport& rep) {
  const std::string s = "conjecture";
  int counterexamples = 0;
  for (const auto& p : ps) {
    const int n = p.dim();
    for (int k = 0; k <= n; ++k) {
      if (!gf2::is_self_dual(face_code(p, k).code).self_dual) continue;
      if (n % 2 == 0 || 2 * k + 1 != n || !is_even(p)) {
        ++counterexamples;
        rep.observations.push_back("conjecture counterexample candidate: " + p.name() + ", k=" + std::to_string(k));
      }
    }
  }
  rep.observations.push_back("conjecture harness: " + std::to_string(counterexamples) + " counterexample(s) among " +
                             std::to_string(ps.size()) + " polytopes");
  run_check(rep, s, "corpus", "harness ran", [&]() -> CheckOutcome { return {true, ""}; });
}

}  // namespace detail

/// Runs one suite by name ("all" runs every suite in order).
inline SuiteReport run_suite(const std::string& name, const std::vector<SimplePolytope>& ps, int morse_seeds = 20) {
  const auto& names = suite_names();
  require(name == "all" || std::find(names.begin(), names.end(), name) != names.end(), ErrorKind::InvalidInput,
          "unknown suite '" + name + "'");
  SuiteReport rep;
  auto want = [&](const char* s) { return name == "all" || name == s; };
  if (want("colorability")) detail::colorability_suite(ps, rep);
  if (want("selfdual")) detail::selfdual_suite(ps, rep);
  if (want("duality")) detail::duality_suite(ps, rep);
  if (want("morse")) detail::morse_suite(ps, rep, morse_seeds);
  if (want("screen")) detail::screen_suite(rep);
  if (want("conjecture")) detail::conjecture_suite(ps, rep);
  return rep;
}

}  // namespace facecode
