// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Timings are wall clock for the criterion's own work.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tricover/classifier.hpp"

namespace {

using namespace tricover;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // <= 0 means untimed
  std::function<Outcome()> body;
};

std::string str(Integer v) { return v.to_string(); }

Outcome table_reproduces(ReferenceTable id, std::size_t rows) {
  Outcome o;
  const TableDiff diff = reference_table(id);
  for (const auto& line : diff.differences) o.fail(line);
  o.expect(diff.matched == rows, "matched " + std::to_string(diff.matched) + " of " + std::to_string(rows));
  return o;
}

Outcome ac1() { return table_reproduces(ReferenceTable::table1, 13); }

Outcome ac2() {
  Outcome o = table_reproduces(ReferenceTable::not_general_type, 11);
  const Outcome second = table_reproduces(ReferenceTable::nonminimal_or_small_pg, 12);
  if (!second.ok) o.fail(second.detail);

  const std::set<Bucket> small{Bucket::NotGeneralType, Bucket::GeneralTypeNonMinimal,
                               Bucket::MinimalGeneralTypeSmallPg};
  const auto collect = [&](const EnumerationBounds& b) {
    std::set<NearlySplitData> out;
    for (const auto& r : enumerate(b)) {
      if (small.count(r.bucket)) out.insert(r.data);
    }
    return out;
  };
  const auto base = collect(canned_bounds());
  const auto wide = collect({0, 4, 10, 10, kDefaultPluriMax});
  for (const auto& d : wide) o.expect(base.count(d) == 1, "enlarged bounds add " + d.to_string());
  o.expect(base.size() == wide.size(), "bucket sizes differ under enlargement");
  return o;
}

Outcome ac3() {
  Outcome o;
  struct Spot {
    NearlySplitData data;
    long K2, pg;
  };
  const CoverInvariants a = plane_invariants({1, 2, 1, 1});
  o.expect(a.K2 == -3 && a.chi == 2 && a.pg == 1 && a.q == 0,
           "(1,(2,1,1)) gave " + str(a.K2) + "," + str(a.chi) + "," + str(a.pg) + "," + str(a.q));
  for (const Spot& s : {Spot{{1, 4, 2, 1}, 15, 7}, Spot{{1, 3, 3, 2}, 17, 7}, Spot{{2, 2, 2, 1}, 15, 7},
                        Spot{NearlySplitData::split(4, 2), 3, 3}}) {
    const CoverInvariants inv = plane_invariants(s.data);
    o.expect(inv.K2 == s.K2 && inv.pg == s.pg, s.data.to_string() + " gave K2=" + str(inv.K2) + " pg=" + str(inv.pg));
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  for (const NearlySplitData& d : {NearlySplitData(1, 3, 2, 1), NearlySplitData(1, 4, 2, 1)}) {
    o.expect(minimality_test(d).h1_2K == 1, d.to_string() + " h1 = " + str(minimality_test(d).h1_2K));
  }
  int checked = 0;
  for (int d = 2; d <= 5; ++d) {
    for (int c1 = 1; c1 <= 5; ++c1) {
      for (int c2 = 1; c2 <= c1; ++c2) {
        for (int c3 = 1; c3 <= c2; ++c3) {
          const NearlySplitData data(d, c1, c2, c3);
          if (!plane_status(data).admissible()) continue;
          ++checked;
          o.expect(minimality_test(data).h1_2K == 0, data.to_string() + " has h1 != 0");
        }
      }
    }
  }
  o.expect(checked > 0, "empty grid");
  return o;
}

Outcome ac5() {
  Outcome o;
  for (long m = 1; m <= 12; ++m) {
    const Plurigenus a = plurigenus(NearlySplitData::split(2, 1), m);
    const Plurigenus b = plurigenus(NearlySplitData::split(3, 2), m);
    o.expect(a.exact && a.value == 0, "split (2,1) P" + std::to_string(m) + " = " + str(a.value));
    o.expect(b.exact && b.value == 1, "split (3,2) P" + std::to_string(m) + " = " + str(b.value));
  }
  const long want[] = {2, 3, 4};
  for (long m = 1; m <= 3; ++m) {
    const Plurigenus p = plurigenus({1, 2, 2, 1}, m);
    o.expect(p.exact && p.value == want[m - 1], "(1,(2,2,1)) P" + std::to_string(m) + " = " + str(p.value));
  }
  // The m = 3 correction term: chi through the Serre-path sequence.
  const SheafCohomology corr = sym_cohomology({1, 2, 2, 1}, 3, -9);
  o.expect(serre_path_chi({1, 2, 2, 1}, -9, 3) == corr.chi, "chi of the correction term disagrees");
  return o;
}

Outcome ac6() {
  Outcome o;
  for (int a1 = 0; a1 <= 20; ++a1) {
    for (int a2 = 0; a2 <= 20; ++a2) {
      const int hi = std::max(a1, a2), lo = std::min(a1, a2);
      const bool want = 0 < lo && hi <= 2 * lo;
      const std::string tag = "(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
      o.expect(split_admissible(a1, a2) == want, tag + " admissibility");
      o.expect(!split_admissible(a1, a2) || split_necessary(a1, a2), tag + " admissible but necessary-false");
    }
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  const NearlySplitData base(1, 1, 1, 1);
  const Rational tol(1, 10'000);
  const auto twist = slope(base, SlopeMode::twist, 100'000);
  const auto curves = slope(base, SlopeMode::curves, 100'000);
  o.expect(twist && abs(*twist - 5) <= tol, "twist slope off");
  o.expect(curves && abs(*curves - 6) <= tol, "curves slope off");
  for (int c1 = 4; c1 <= 100; ++c1) {
    o.expect(plane_status({1, c1, 1, 1}).level == AdmissibilityLevel::NotAdmissible,
             "(1,(" + std::to_string(c1) + ",1,1)) admissible");
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  for (int d = 0; d <= 5; ++d) {
    for (int c = 0; c <= 5; ++c) {
      for (int a2 : {2, 4, 6}) {
        const GeneralInvariants g = general_invariants(GeneralSurfaceData::from_multiples(2, {0, d, c, c, c}, a2));
        o.expect(g.K2T == (5 * d * d + 15 * c * d + 9 * c * c) * a2, "K3 d=" + std::to_string(d) + " c=" +
                                                                         std::to_string(c) + " A2=" + std::to_string(a2));
      }
    }
  }
  for (int d = 0; d <= 3; ++d) {
    for (int c1 = 0; c1 <= 5; ++c1) {
      for (int c2 = 0; c2 <= c1; ++c2) {
        for (int c3 = 0; c3 <= c2; ++c3) {
          const NearlySplitData data(d, c1, c2, c3);
          const GeneralInvariants g = general_invariants(GeneralSurfaceData::projective_plane(data));
          const CoverInvariants inv = plane_invariants(data, 3);
          o.expect(g.K2T == inv.K2 && g.chiT == inv.chi && g.chi2KT == inv.chi2K, data.to_string() + " disagrees");
        }
      }
    }
  }
  return o;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

Outcome ac9() {
  Outcome o;
  std::mt19937_64 rng(20'261'016);
  long instances = 0;

  for (int n = -200; n <= 200; ++n, ++instances) {
    o.expect(line_h(n, 2) == line_h(-n - 3, 0), "line Serre duality at " + std::to_string(n));
    o.expect(line_chi(n) == line_h(n, 0) - line_h(n, 1) + line_h(n, 2), "line chi at " + std::to_string(n));
  }

  std::uniform_int_distribution<int> dist_d(-2, 4), dist_c(0, 5), dist_k(0, 4), dist_m(-20, 20);
  for (int trial = 0; trial < 600; ++trial, ++instances) {
    const NearlySplitData data(dist_d(rng), dist_c(rng), dist_c(rng), dist_c(rng));
    const long k = dist_k(rng);
    const int m = dist_m(rng);
    const std::string tag = data.to_string() + " k=" + std::to_string(k) + " m=" + std::to_string(m);
    const SheafCohomology c = sym_cohomology(data, k, m);
    o.expect(c.h0 >= 0 && c.h1 >= 0 && c.h2 >= 0, "negative dimension " + tag);
    o.expect(c.h0 - c.h1 + c.h2 == c.chi, "chi identity " + tag);
    o.expect(c.h2 == sym_cohomology(data, k, -m - 3 - Integer(k) * det_degree(data)).h0, "Serre duality " + tag);

    const ChernClasses ch = chern(data);
    const Integer c1 = ch.c1 + 2 * m;
    const Integer c2 = ch.c2 + m * ch.c1 + Integer(m) * m;
    o.expect(2 * sym_cohomology(data, 1, m).chi == 4 + c1 * c1 - 2 * c2 + 3 * c1, "Riemann-Roch " + tag);

    if (data.c3() >= 1 && k >= 1 && k <= 3) {
      o.expect(serre_path_chi(data, m, k) == c.chi, "serre path " + tag);
    }
  }

  std::vector<std::uint64_t> primes;
  std::uniform_int_distribution<std::uint64_t> candidate(1u << 29, 1u << 30);
  while (primes.size() < 3) {
    const std::uint64_t p = candidate(rng) | 1u;
    if (is_prime(p)) primes.push_back(p);
  }
  std::uniform_int_distribution<int> dist_bc(1, 3), dist_twist(0, 12);
  for (std::uint64_t p : primes) {
    const oracle::PrimeField field(p);
    for (int trial = 0; trial < 80; ++trial, ++instances) {
      const int b = dist_bc(rng), c = dist_bc(rng), k = dist_bc(rng), m = dist_twist(rng);
      const auto want = static_cast<long>(oracle::ideal_power_dimension(b, c, k, m, field, rng));
      o.expect(ideal_power_h0(b, c, k, m) == want, "ideal power " + std::to_string(b) + "," + std::to_string(c) + "," +
                                                       std::to_string(k) + "," + std::to_string(m) +
                                                       " mod " + std::to_string(p));
    }
  }

  o.expect(instances >= 1000, "only " + std::to_string(instances) + " instances");
  if (o.ok) {
    o.detail = std::to_string(instances) + " instances, primes " + std::to_string(primes[0]) + " " +
               std::to_string(primes[1]) + " " + std::to_string(primes[2]);
  }
  return o;
}

Outcome ac10() {
  Outcome o;
  for (int d = -1; d <= 4; ++d) {
    for (int c1 = 0; c1 <= 6; ++c1) {
      for (int c2 = 0; c2 <= c1; ++c2) {
        for (int c3 = 0; c3 <= c2; ++c3) {
          const NearlySplitData data(d, c1, c2, c3);
          o.expect(plane_chi2K(data) == plane_chi(data) + plane_K2(data), data.to_string());
        }
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table1 reproduction", 1.0, ac1},
      {2, "not-general-type and nonminimal/small-pg tables, bound stability", 5.0, ac2},
      {3, "spot invariants", 0, ac3},
      {4, "minimality h1(Sym^2 E(-6))", 0, ac4},
      {5, "plurigenera", 0, ac5},
      {6, "split admissibility", 0, ac6},
      {7, "slope asymptotics and unbalanced curves", 0, ac7},
      {8, "K3 formula and plane specialization", 0, ac8},
      {9, "oracle suite", 30.0, ac9},
      {10, "chi(2K) = chi + K^2", 0, ac10},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
      std::ostringstream why;
      why << "took " << secs << " s, budget " << c.budget_seconds << " s";
      o.fail(why.str());
    }
    std::printf("AC%-2d %s  %s (%.3f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    if (!o.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
