#include "toric/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "toric/chern.hpp"
#include "toric/intersect.hpp"

namespace toric {

namespace {

constexpr std::size_t kCriteria = 8;
constexpr std::size_t kKeptFailures = 5;

const std::array<const char*, kCriteria> kAnchors{
    "P^d is ch_k-positive for every k",
    "P^1-bundles over P^{d-1}: values on V1 and V2",
    "P^{d-2}-bundles over P^2: top self-intersections",
    "Picard three without fiber contraction: S1 and two surface families, ch2 not nef",
    "Hirzebruch-surface closed form for ch2",
    "Picard two, d >= 5: not ch4-positive",
    "cross-validation invariants",
    "ch2-positive fans in the grids are projective spaces",
};

struct Tally {
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;

  template <class Msg>
  void expect(bool ok, Msg&& message) {
    ++checks;
    if (ok) return;
    ++failed;
    if (failures.size() < kKeptFailures) failures.push_back(message());
  }
};

using Tallies = std::array<Tally, kCriteria>;

void merge(Tally& into, const Tally& from) {
  into.checks += from.checks;
  into.failed += from.failed;
  for (const auto& f : from.failures)
    if (into.failures.size() < kKeptFailures) into.failures.push_back(f);
}

std::string str(const Rational& r) { return to_string(r); }
std::string str(const Integer& i) { return to_string(i); }

std::vector<std::string> numbered(const std::string& stem, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

Cone cone_named(const Fan& fan, const std::vector<std::string>& names) { return fan.cone_of_names(names); }

bool same_values(const PositivityReport& a, const PositivityReport& b) {
  if (a.classification != b.classification || a.values.size() != b.values.size()) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!(a.values[i].cone == b.values[i].cone) || a.values[i].value != b.values[i].value) return false;
  return true;
}

IntegerMatrix random_unimodular(std::size_t d, std::mt19937_64& rng) {
  IntegerMatrix g(d, IntegerVector(d, 0));
  for (std::size_t i = 0; i < d; ++i) g[i][i] = 1;
  if (d < 2) {
    g[0][0] = -1;
    return g;
  }
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);
  std::uniform_int_distribution<int> factor(-2, 2);
  for (std::size_t step = 0; step < 3 * d; ++step) {
    const auto i = pick(rng), j = pick(rng);
    if (i == j) {
      for (auto& x : g[i]) x = -x;
      continue;
    }
    const int f = factor(rng);
    for (std::size_t c = 0; c < d; ++c) g[i][c] += f * g[j][c];
  }
  return g;
}

// ---------------------------------------------------------------------------
// Family-specific reproductions.

void check_projective_space(const Fan& fan, IntersectionEngine& engine, const std::string& label,
                            Tally& t) {
  for (unsigned k = 1; k <= fan.rank(); ++k) {
    const auto report = classify(engine, k);
    t.expect(report.classification == Positivity::Positive, [&] {
      return label + " k=" + std::to_string(k) + ": " + to_string(report.classification) +
             " (min " + str(report.min_value) + ")";
    });
  }
}

void check_p1_bundle(const Fan& fan, IntersectionEngine& engine, int d, int a,
                     const std::string& label, Tally& t) {
  for (int k = 3; k <= d - 1; ++k) {
    const Integer ak = ipow(Integer(a), static_cast<unsigned>(k));
    if (d - ak < 1) continue;
    const bool odd = k % 2 == 1;
    const Cone v1 = cone_named(fan, numbered("x", 1, d - k));
    auto v2_names = numbered("x", 1, d - k - 1);
    v2_names.push_back("y1");
    const Cone v2 = cone_named(fan, v2_names);
    const auto uk = static_cast<unsigned>(k);

    // The stated values are sum_x D_x^k . V, i.e. k! (ch_k . V).
    const Integer kf = factorial(uk);
    const Rational want1 = odd ? Rational(2 * ipow(Integer(a), uk - 1)) : Rational(0);
    const Rational want2 = odd ? Rational(d - ak) : Rational(d + ak);
    const Rational got1 = kf * chern_value(engine, uk, v1), got2 = kf * chern_value(engine, uk, v2);
    const std::string at = label + " k=" + std::to_string(k);
    t.expect(got1 == want1, [&] { return at + " V1: expected " + str(want1) + " got " + str(got1); });
    t.expect(got2 == want2, [&] { return at + " V2: expected " + str(want2) + " got " + str(got2); });

    const auto report = classify(engine, uk);
    const Positivity want = odd ? Positivity::Positive : Positivity::NefNotPositive;
    t.expect(report.classification == want, [&] {
      return at + ": expected " + to_string(want) + " got " + to_string(report.classification);
    });
  }
}

void check_example41(const Fan& fan, IntersectionEngine& engine, int d, int a,
                     const std::string& label, Tally& t) {
  const auto ud = static_cast<std::size_t>(d);
  for (int i = 1; i <= 3; ++i) {
    const Integer got = engine.power_degree(fan.ray_id("x" + std::to_string(i)), ud, Cone{});
    t.expect(got == 0, [&] { return label + " D" + std::to_string(i) + "^d = " + str(got); });
  }
  const Integer a2 = Integer(a) * a;
  const Integer want_e1 = a2 * (d - 2) + a2 * (d - 2) * (d - 3) / 2;
  const Integer got_e1 = engine.power_degree(fan.ray_id("y1"), ud, Cone{});
  t.expect(got_e1 == want_e1,
           [&] { return label + " E1^d: expected " + str(want_e1) + " got " + str(got_e1); });
  for (int j = 2; j <= d - 1; ++j) {
    const Integer got = engine.power_degree(fan.ray_id("y" + std::to_string(j)), ud, Cone{});
    t.expect(got == a2, [&] {
      return label + " E" + std::to_string(j) + "^d: expected " + str(a2) + " got " + str(got);
    });
  }
  const auto report = classify(engine, static_cast<unsigned>(d));
  t.expect(report.classification == Positivity::Positive,
           [&] { return label + " ch_d: " + to_string(report.classification); });
  const bool fano = is_fano(fan);
  t.expect(fano == (a <= 2), [&] { return label + (fano ? " is Fano" : " is not Fano"); });
}

void check_batyrev(const Fan& fan, IntersectionEngine& engine, const BatyrevParams& raw,
                   const std::string& label, Tally& t) {
  const BatyrevParams p = normalize(raw);
  const Integer s1_want = batyrev_s1_doubled(p);
  const Rational s1_got = 2 * chern_value(engine, 2, batyrev_s1_cone(fan));
  t.expect(s1_got == s1_want,
           [&] { return label + " S1: expected " + str(s1_want) + " got " + str(s1_got); });

  if (auto c1 = batyrev_case1_cone(fan, p)) {
    const Integer want = 2 * (-p.p[1] - p.p[4]);
    const Rational got = 2 * chern_value(engine, 2, *c1);
    t.expect(got == want,
             [&] { return label + " P1xP1 surface: expected " + str(want) + " got " + str(got); });
  }
  if (auto c2 = batyrev_case2_cone(fan, p); c2 && p.p[3] == 1) {
    const int c_2 = p.c.at(0);
    Integer sum_c = 0;
    for (int c : p.c) sum_c += c;
    const Integer want = Integer(c_2) * (p.p[2] + 1) + 2 * (-(sum_c + p.b.at(0) + 1));
    const Rational got = 2 * chern_value(engine, 2, *c2);
    t.expect(got == want,
             [&] { return label + " F_c2 surface: expected " + str(want) + " got " + str(got); });
  }

  const auto report = classify(engine, 2);
  t.expect(report.classification == Positivity::NotNef && report.min_value < 0,
           [&] { return label + " ch2: " + to_string(report.classification); });
}

void check_picard2_ch4(const Fan& fan, IntersectionEngine& engine, const BundleParams& b,
                       const std::string& label, Tally& t) {
  const int d = b.d, s = b.s;
  std::vector<std::string> names = numbered("x", 1, d - (s == 3 ? 5 : s));
  const auto ys = numbered("y", 1, s == 3 ? 1 : s - 4);
  names.insert(names.end(), ys.begin(), ys.end());
  const Cone tau = cone_named(fan, names);

  if (s == 3) {
    const Integer a1 = b.twists.at(0), a2 = b.twists.at(1);
    const Integer want = -(a1 - a2) * (a1 - a2) * (a1 - a2) + a1 * a1 * (a2 - 2 * a1) -
                         a1 * (a1 - a2) * (a1 - a2);
    const Integer got = engine.power_degree(fan.ray_id("y1"), 4, tau);
    t.expect(got == want,
             [&] { return label + " E1^4.V: expected " + str(want) + " got " + str(got); });
  } else {
    Integer sum = 0;
    for (int j = s - 3; j <= s; ++j) sum += engine.power_degree(fan.ray_id("y" + std::to_string(j)), 4, tau);
    t.expect(sum == 0, [&] { return label + " four-term sum = " + str(sum); });
  }
  const Rational v = chern_value(engine, 4, tau);
  t.expect(v <= 0, [&] { return label + " ch4.V = " + str(v); });
  const auto report = classify(engine, 4);
  t.expect(report.classification != Positivity::Positive,
           [&] { return label + " is ch4-positive"; });
}

void check_hirzebruch(const Fan& fan, IntersectionEngine& engine, const std::string& label,
                      Tally& t) {
  if (fan.rank() < 2) return;
  for (Cone tau : fan.cones_of_dim(fan.rank() - 2)) {
    if (fan.containing_maximal(tau).size() != 4) continue;
    std::string error;
    Rational formula;
    try {
      formula = hirzebruch_ch2_formula(fan, tau);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const Rational engine_value = chern_value(engine, 2, tau);
    t.expect(error.empty() && formula == engine_value, [&] {
      std::string names;
      for (const auto& n : fan.names_of(tau)) names += (names.empty() ? "" : ",") + n;
      return label + " {" + names + "}: " +
             (error.empty() ? "formula " + str(formula) + " engine " + str(engine_value) : error);
    });
  }
}

// ---------------------------------------------------------------------------
// Invariants shared by every catalog fan.

void check_invariants(const Fan& fan, IntersectionEngine& engine, const CatalogParams& params,
                      const VerifyConfig& cfg, std::mt19937_64& rng, const std::string& label,
                      Tally& t) {
  const std::size_t n = fan.num_rays(), d = fan.rank();

  // Wall curves: engine pairings against the relation coefficients.
  std::vector<IntegerVector> curve_rows;
  for (Cone w : fan.walls()) {
    const WallRelation rel = wall_relation(fan, w);
    const IntegerVector want = rel.curve_vector(n);
    IntegerVector got(n);
    Integer sum = 0;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t one[1] = {x};
      got[x] = engine.monomial_degree(one, w);
      sum += got[x];
    }
    t.expect(got == want && sum == rel.anticanonical_degree() &&
                 sum == anticanonical_degree_of_wall(fan, w),
             [&] { return label + ": wall curve pairing disagrees with its relation"; });
    curve_rows.push_back(std::move(got));
  }

  // Principal divisors are numerically trivial.
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> any_ray(0, n - 1);
  for (int trial = 0; trial < cfg.principal_divisors; ++trial) {
    IntegerVector m(d);
    do {
      for (auto& e : m) e = coeff(rng);
    } while (is_zero(m));
    const Covector cm{m};
    IntegerVector div(n);
    for (std::size_t x = 0; x < n; ++x) div[x] = cm.pair(fan.ray(x).vector);

    bool ok = true;
    for (const auto& row : curve_rows) {
      Integer s = 0;
      for (std::size_t x = 0; x < n; ++x) s += div[x] * row[x];
      ok = ok && s == 0;
    }
    if (d >= 2) {
      std::vector<std::size_t> rest(d - 1);
      for (auto& r : rest) r = any_ray(rng);
      Integer s = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (div[x] == 0) continue;
        auto mono = rest;
        mono.push_back(x);
        s += div[x] * engine.monomial_degree(mono, Cone{});
      }
      ok = ok && s == 0;
    }
    t.expect(ok, [&] { return label + ": principal divisor not numerically trivial"; });
  }

  // Order independence, evaluated without the memo cache.
  for (int trial = 0; trial < cfg.permutation_samples; ++trial) {
    std::vector<std::size_t> mono(d);
    for (auto& r : mono) r = any_ray(rng);
    const Rational cached = engine.intersection_number(mono);
    std::shuffle(mono.begin(), mono.end(), rng);
    TorusCycle cycle = TorusCycle::fundamental();
    for (auto r : mono) cycle = engine.mul_prime_divisor(r, cycle);
    const Rational folded = cycle.total();
    t.expect(folded == cached && denominator(folded) == 1, [&] {
      return label + ": product depends on order (" + str(cached) + " vs " + str(folded) + ")";
    });
  }

  // ch_1 against the Fano tests.
  const auto ch1 = classify(engine, 1);
  const auto walls_ch1 = ch1_report(fan);
  t.expect(is_fano(fan) == (ch1.classification == Positivity::Positive),
           [&] { return label + ": is_fano disagrees with ch1"; });
  t.expect(is_weak_fano(fan) == (ch1.classification != Positivity::NotNef),
           [&] { return label + ": is_weak_fano disagrees with ch1"; });
  t.expect(walls_ch1.classification == ch1.classification && walls_ch1.min_value == ch1.min_value,
           [&] { return label + ": wall ch1 report disagrees with the engine"; });

  // Change of lattice basis.
  if (std::holds_alternative<BatyrevParams>(params) && cfg.unimodular_transforms > 0) {
    std::vector<PositivityReport> base;
    for (unsigned k = 1; k <= d; ++k) base.push_back(classify(engine, k));
    for (int trial = 0; trial < cfg.unimodular_transforms; ++trial) {
      const IntegerMatrix g = random_unimodular(d, rng);
      bool ok = true;
      std::string error;
      try {
        const Fan moved = transform_fan(fan, g);
        IntersectionEngine moved_engine(moved);
        for (unsigned k = 1; k <= d && ok; ++k) ok = same_values(base[k - 1], classify(moved_engine, k));
      } catch (const std::exception& e) {
        ok = false;
        error = e.what();
      }
      t.expect(ok, [&] { return label + ": classification changed under a unimodular map " + error; });
    }
  }
}

// ---------------------------------------------------------------------------

struct Item {
  CatalogParams params;
  bool in_ch2_union = false;
};

Tallies process(const Item& item, const VerifyConfig& cfg, std::uint64_t item_seed) {
  Tallies t;
  const std::string label = describe(item.params);
  std::mt19937_64 rng(item_seed);
  try {
    const Fan fan = build(item.params);
    IntersectionEngine engine(fan);
    const int d = static_cast<int>(fan.rank());

    if (const auto* pn = std::get_if<ProjectiveSpaceParams>(&item.params)) {
      if (pn->d >= 2) check_projective_space(fan, engine, label, t[0]);
    } else if (const auto* b = std::get_if<BundleParams>(&item.params)) {
      if (b->s == 2 && b->d >= 4 && b->d <= 7 && b->twists.at(0) >= 1)
        check_p1_bundle(fan, engine, b->d, b->twists[0], label, t[1]);
      if (b->s >= 3 && b->s <= 5 && b->d >= 5 && b->d <= 7)
        check_picard2_ch4(fan, engine, *b, label, t[5]);
    } else if (const auto* e = std::get_if<Example41Params>(&item.params)) {
      check_example41(fan, engine, e->d, e->a, label, t[2]);
    } else if (const auto* bp = std::get_if<BatyrevParams>(&item.params)) {
      check_batyrev(fan, engine, *bp, label, t[3]);
    }

    if (d <= cfg.hirzebruch_max_d) check_hirzebruch(fan, engine, label, t[4]);
    check_invariants(fan, engine, item.params, cfg, rng, label, t[6]);

    if (item.in_ch2_union && d >= 2) {
      const bool pn = std::holds_alternative<ProjectiveSpaceParams>(item.params);
      const auto report = classify(engine, 2);
      const bool positive = report.classification == Positivity::Positive;
      t[7].expect(positive == pn, [&] {
        return label + (positive ? " is ch2-positive" : " is not ch2-positive");
      });
    }
  } catch (const std::exception& e) {
    t[6].expect(false, [&] { return label + ": " + e.what(); });
  }
  return t;
}

std::vector<Item> work_list(const VerifyConfig& cfg) {
  std::vector<Item> items;
  for (auto& p : grid(cfg.projective)) items.push_back({std::move(p), true});
  for (auto& p : grid(cfg.bundles)) items.push_back({std::move(p), true});
  for (auto& p : grid(cfg.example41)) items.push_back({std::move(p), true});
  for (auto& p : grid(cfg.batyrev)) items.push_back({std::move(p), true});
  return items;
}

}  // namespace

std::vector<VerificationRecord> verify_paper(const VerifyConfig& cfg,
                                             const std::function<void(const std::string&)>& progress) {
  const std::vector<Item> items = work_list(cfg);
  std::vector<Tallies> results(items.size());
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      if (progress && (i == 0 || family_name(items[i].params) != family_name(items[i - 1].params))) {
        std::lock_guard lock(progress_mutex);
        progress(family_name(items[i].params));
      }
      results[i] = process(items[i], cfg, cfg.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
    }
  };
  const unsigned workers = std::max(1u, cfg.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Tallies total;
  for (const auto& r : results)
    for (std::size_t c = 0; c < kCriteria; ++c) merge(total[c], r[c]);

  std::vector<VerificationRecord> out;
  for (std::size_t c = 0; c < kCriteria; ++c) {
    VerificationRecord rec;
    rec.id = static_cast<int>(c + 1);
    rec.anchor = kAnchors[c];
    rec.checks = total[c].checks;
    rec.pass = total[c].failed == 0 && total[c].checks > 0;
    std::ostringstream os;
    os << total[c].checks << " checks, " << total[c].failed << " failed";
    for (const auto& f : total[c].failures) os << "; " << f;
    rec.details = os.str();
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace toric
