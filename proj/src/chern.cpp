#include "toric/chern.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toric {

std::string to_string(Positivity p) {
  switch (p) {
    case Positivity::Positive: return "positive";
    case Positivity::NefNotPositive: return "nef_not_positive";
    case Positivity::NotNef: return "not_nef";
  }
  return "?";
}

namespace {

Positivity classify_min(const Rational& min_value) {
  if (min_value > 0) return Positivity::Positive;
  if (min_value == 0) return Positivity::NefNotPositive;
  return Positivity::NotNef;
}

void finish(PositivityReport& report) {
  if (report.values.empty()) throw std::logic_error("positivity report without values");
  const ChernValue* best = &report.values.front();
  for (const auto& v : report.values)
    if (v.value < best->value) best = &v;
  report.min_value = best->value;
  report.witness = best->cone;
  report.classification = classify_min(best->value);
}

}  // namespace

Rational chern_value(IntersectionEngine& engine, unsigned k, Cone tau) {
  const Fan& fan = engine.fan();
  if (k < 1 || k > fan.rank() || tau.dim() + k != fan.rank())
    throw DimensionError("chern_value: dim(tau) must equal rank - k");
  Integer sum = 0;
  for (std::size_t x = 0; x < fan.num_rays(); ++x) sum += engine.power_degree(x, k, tau);
  return Rational(sum, factorial(k));
}

PositivityReport classify(IntersectionEngine& engine, unsigned k) {
  const Fan& fan = engine.fan();
  if (k < 1 || k > fan.rank()) throw std::invalid_argument("classify: need 1 <= k <= rank");
  PositivityReport report;
  report.k = k;
  for (Cone tau : fan.cones_of_dim(fan.rank() - k))
    report.values.push_back({k, tau, chern_value(engine, k, tau)});
  finish(report);
  return report;
}

PositivityReport classify(const Fan& fan, unsigned k) {
  IntersectionEngine engine(fan);
  return classify(engine, k);
}

PositivityReport ch1_report(const Fan& fan) {
  PositivityReport report;
  report.k = 1;
  for (Cone w : fan.cones_of_dim(fan.rank() - 1))
    report.values.push_back({1, w, Rational(anticanonical_degree_of_wall(fan, w))});
  finish(report);
  return report;
}

// ---------------------------------------------------------------------------

std::vector<HirzebruchWallData> hirzebruch_wall_data(const Fan& fan, Cone tau) {
  if (tau.dim() + 2 != fan.rank()) throw NotHirzebruchError("tau must have codimension two");
  const auto containing = fan.containing_maximal(tau);
  if (containing.size() != 4)
    throw NotHirzebruchError("tau has " + std::to_string(containing.size()) +
                             " adjacent maximal cones, not four");

  // The link of tau is a polygon; recover its cyclic vertex order.
  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (auto ci : containing) {
    const auto pair = fan.maximal_cones()[ci].minus(tau).ids();
    adj[pair[0]].push_back(pair[1]);
    adj[pair[1]].push_back(pair[0]);
  }
  if (adj.size() != 4) throw NotHirzebruchError("link of tau is not a 4-cycle");
  std::array<std::size_t, 4> cyc{};
  cyc[0] = adj.begin()->first;
  cyc[1] = adj.at(cyc[0]).at(0);
  for (std::size_t i = 2; i < 4; ++i) {
    const auto& nb = adj.at(cyc[i - 1]);
    cyc[i] = nb.at(0) == cyc[i - 2] ? nb.at(1) : nb.at(0);
  }

  std::vector<HirzebruchWallData> out;
  for (std::size_t rot = 0; rot < 4; ++rot) {
    for (int dir : {1, 3}) {
      std::array<std::size_t, 4> w{};
      for (std::size_t i = 0; i < 4; ++i) w[i] = cyc[(rot + i * static_cast<std::size_t>(dir)) % 4];
      // Fiber relation through w2 must not involve w2.
      const WallRelation r2 = wall_relation(fan, tau.with(w[1]));
      const WallRelation r1 = wall_relation(fan, tau.with(w[0]));
      auto coeff = [](const WallRelation& r, std::size_t id) {
        for (const auto& [x, a] : r.coefficients)
          if (x == id) return a;
        throw std::logic_error("ray missing from wall relation");
      };
      if (coeff(r2, w[1]) != 0) continue;
      const Integer alpha = -coeff(r1, w[0]);
      if (alpha < 0) continue;
      HirzebruchWallData data;
      data.tau = tau;
      data.w = w;
      data.alpha = alpha;
      for (auto x : tau.ids()) {
        data.a.emplace_back(x, coeff(r2, x));
        data.e.emplace_back(x, coeff(r1, x));
      }
      // The two reflections of one rotation describe the same relations.
      if (dir == 3 && !out.empty() && out.back().w[0] == w[0] && out.back().w[2] == w[2]) continue;
      out.push_back(std::move(data));
    }
  }
  if (out.empty()) throw NotHirzebruchError("no orientation of the link matches a Hirzebruch surface");
  return out;
}

Rational hirzebruch_ch2_formula(const Fan& fan, Cone tau) {
  const auto all = hirzebruch_wall_data(fan, tau);
  std::vector<Rational> values;
  for (const auto& h : all) {
    Integer sum_a2 = 0, sum_ae = 0;
    for (std::size_t i = 0; i < h.a.size(); ++i) {
      sum_a2 += h.a[i].second * h.a[i].second;
      sum_ae += h.a[i].second * h.e[i].second;
    }
    values.emplace_back(h.alpha * (2 + sum_a2) + 2 * (-h.alpha + sum_ae), 2);
  }
  for (const auto& v : values)
    if (v != values.front())
      throw std::logic_error("hirzebruch_ch2_formula: orientations disagree");
  return values.front();
}

Integer batyrev_s1_doubled(const BatyrevParams& raw) {
  const BatyrevParams p = normalize(raw);
  const int b1 = p.b.at(0);
  Integer v = -p.p[1] - p.p[4] + b1 * p.p[2];
  for (int c : p.c) v -= 2 * c;
  v -= b1 + 1;
  for (std::size_t i = 1; i < p.b.size(); ++i) v += b1 - 2 * p.b[i] - 1;
  return v;
}

Rational batyrev_s1_formula(const BatyrevParams& params) {
  return Rational(batyrev_s1_doubled(params), 2);
}

}  // namespace toric
