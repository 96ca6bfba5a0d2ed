#include "toric/catalog.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toric {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return v.empty() ? "-" : s;
}

IntegerVector unit(std::size_t d, std::size_t i) {
  IntegerVector v(d, 0);
  v[i] = 1;
  return v;
}

std::vector<std::string> numbered(const std::string& stem, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

void check_bundle(const BundleParams& p) {
  if (p.s < 2 || p.d <= p.s - 1)
    throw std::invalid_argument("kleinschmidt: need d > s-1 >= 1");
  if (static_cast<int>(p.twists.size()) != p.s - 1)
    throw std::invalid_argument("kleinschmidt: need exactly s-1 twists");
  for (std::size_t i = 0; i < p.twists.size(); ++i) {
    if (p.twists[i] < 0) throw std::invalid_argument("kleinschmidt: twists must be non-negative");
    if (i > 0 && p.twists[i] > p.twists[i - 1])
      throw std::invalid_argument("kleinschmidt: twists must be non-increasing");
  }
}

void check_batyrev(const BatyrevParams& p) {
  for (int x : p.p)
    if (x < 1) throw std::invalid_argument("batyrev3: p0..p4 must be positive");
  if (static_cast<int>(p.b.size()) != p.p[3])
    throw std::invalid_argument("batyrev3: need exactly p3 values of b");
  if (static_cast<int>(p.c.size()) != p.p[2] - 1)
    throw std::invalid_argument("batyrev3: need exactly p2-1 values of c");
  for (int x : p.b)
    if (x < 0) throw std::invalid_argument("batyrev3: b must be non-negative");
  for (int x : p.c)
    if (x < 0) throw std::invalid_argument("batyrev3: c must be non-negative");
}

void assert_catalog_fan(const Fan& fan, const CatalogParams& params) {
  if (!relations_match(fan, expected_relations(params)))
    throw std::logic_error(describe(params) + ": primitive relations differ from the construction");
  if (!is_projective(fan).projective)
    throw std::logic_error(describe(params) + ": fan is not projective");
}

}  // namespace

std::string family_name(const CatalogParams& params) {
  struct V {
    std::string operator()(const ProjectiveSpaceParams&) const { return "pn"; }
    std::string operator()(const BundleParams&) const { return "kleinschmidt"; }
    std::string operator()(const Example41Params&) const { return "example41"; }
    std::string operator()(const BatyrevParams&) const { return "batyrev3"; }
  };
  return std::visit(V{}, params);
}

std::string describe(const CatalogParams& params) {
  struct V {
    std::string operator()(const ProjectiveSpaceParams& p) const {
      return "pn d=" + std::to_string(p.d);
    }
    std::string operator()(const BundleParams& p) const {
      return "kleinschmidt d=" + std::to_string(p.d) + " s=" + std::to_string(p.s) +
             " a=" + join(p.twists);
    }
    std::string operator()(const Example41Params& p) const {
      return "example41 d=" + std::to_string(p.d) + " a=" + std::to_string(p.a);
    }
    std::string operator()(const BatyrevParams& p) const {
      return "batyrev3 p=" + join({p.p.begin(), p.p.end()}) + " b=" + join(p.b) +
             " c=" + join(p.c);
    }
  };
  return std::visit(V{}, params);
}

Fan projective_space(int d) {
  if (d < 1) throw std::invalid_argument("projective_space: d must be >= 1");
  const auto du = static_cast<std::size_t>(d);
  std::vector<RaySpec> rays;
  for (std::size_t i = 0; i < du; ++i) rays.push_back({"e" + std::to_string(i + 1), unit(du, i)});
  rays.push_back({"e0", IntegerVector(du, -1)});
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t skip = 0; skip <= du; ++skip) {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i <= du; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(std::move(c));
  }
  Fan fan = build_fan(du, std::move(rays), std::move(cones));
  assert_catalog_fan(fan, ProjectiveSpaceParams{d});
  return fan;
}

namespace {

// x1..x_r, y1..y_s with y1..y_{s-1}, x1..x_{r-1} a basis.
Fan bundle_fan(const BundleParams& p) {
  check_bundle(p);
  const auto d = static_cast<std::size_t>(p.d);
  const auto s = static_cast<std::size_t>(p.s);
  const std::size_t r = d - s + 2;
  std::vector<RaySpec> rays;
  IntegerVector x_last(d, 0);
  for (std::size_t i = 0; i + 1 < r; ++i) {
    rays.push_back({"x" + std::to_string(i + 1), unit(d, s - 1 + i)});
    x_last[s - 1 + i] = -1;
  }
  for (std::size_t i = 0; i + 1 < s; ++i) x_last[i] = p.twists[i];
  rays.push_back({"x" + std::to_string(r), x_last});
  for (std::size_t i = 0; i + 1 < s; ++i) rays.push_back({"y" + std::to_string(i + 1), unit(d, i)});
  IntegerVector y_last(d, 0);
  for (std::size_t i = 0; i + 1 < s; ++i) y_last[i] = -1;
  rays.push_back({"y" + std::to_string(s), y_last});

  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t skip_x = 0; skip_x < r; ++skip_x)
    for (std::size_t skip_y = 0; skip_y < s; ++skip_y) {
      std::vector<std::size_t> c;
      for (std::size_t i = 0; i < r; ++i)
        if (i != skip_x) c.push_back(i);
      for (std::size_t j = 0; j < s; ++j)
        if (j != skip_y) c.push_back(r + j);
      cones.push_back(std::move(c));
    }
  return build_fan(d, std::move(rays), std::move(cones));
}

}  // namespace

Fan kleinschmidt_bundle(const BundleParams& params) {
  Fan fan = bundle_fan(params);
  assert_catalog_fan(fan, params);
  return fan;
}

Fan example_41(int d, int a) {
  if (d < 3 || a < 1) throw std::invalid_argument("example41: need d >= 3 and a >= 1");
  BundleParams bp{d, d - 1, std::vector<int>(static_cast<std::size_t>(d - 2), 0)};
  bp.twists[0] = a;
  Fan fan = bundle_fan(bp);
  assert_catalog_fan(fan, Example41Params{d, a});
  return fan;
}

BatyrevParams normalize(BatyrevParams params) {
  if (!params.b.empty()) std::iter_swap(params.b.begin(), std::min_element(params.b.begin(), params.b.end()));
  if (!params.c.empty()) std::iter_swap(params.c.begin(), std::min_element(params.c.begin(), params.c.end()));
  return params;
}

Fan batyrev_picard3(const BatyrevParams& raw) {
  check_batyrev(raw);
  const BatyrevParams p = normalize(raw);
  if (p.b != raw.b || p.c != raw.c)
    std::clog << "note: batyrev3 parameters normalized to " << describe(p) << "\n";
  if (p.dim() < 1) throw std::invalid_argument("batyrev3: dimension must be positive");

  const auto d = static_cast<std::size_t>(p.dim());
  const int p2 = p.p[2], p3 = p.p[3];
  // Group g occupies rays [start[g], start[g] + p[g]).
  std::array<std::size_t, 6> start{};
  for (std::size_t g = 0; g < 5; ++g) start[g + 1] = start[g] + static_cast<std::size_t>(p.p[g]);
  const std::array<const char*, 5> stems{"v", "y", "z", "t", "u"};

  // Basis: v2.., y1.., z2.., t1.., u2.. in this order.
  std::vector<IntegerVector> vec(start[5]);
  std::size_t next = 0;
  for (std::size_t g = 0; g < 5; ++g) {
    const bool skip_first = (g == 0 || g == 2 || g == 4);
    for (std::size_t i = skip_first ? 1 : 0; i < static_cast<std::size_t>(p.p[g]); ++i)
      vec[start[g] + i] = unit(d, next++);
  }
  auto sum_group = [&](std::size_t g, std::size_t from) {
    IntegerVector s(d, 0);
    for (std::size_t i = from; i < static_cast<std::size_t>(p.p[g]); ++i) s = add(s, vec[start[g] + i]);
    return s;
  };
  // z1 = -(z2 + ... ) - (t1 + ...)
  vec[start[2]] = scale(-1, add(sum_group(2, 1), sum_group(3, 0)));
  // u1 = (y's) + (z's) - (u2 + ...)
  vec[start[4]] = add(add(sum_group(1, 0), sum_group(2, 0)), scale(-1, sum_group(4, 1)));
  // v1 = sum c_i z_i + sum (b_i + 1) t_i - (v2 + ...) - (y's)
  IntegerVector v1 = scale(-1, add(sum_group(0, 1), sum_group(1, 0)));
  for (int i = 1; i < p2; ++i) v1 = add(v1, scale(p.c[static_cast<std::size_t>(i - 1)], vec[start[2] + static_cast<std::size_t>(i)]));
  for (int i = 0; i < p3; ++i) v1 = add(v1, scale(p.b[static_cast<std::size_t>(i)] + 1, vec[start[3] + static_cast<std::size_t>(i)]));
  vec[start[0]] = v1;

  std::vector<RaySpec> rays;
  for (std::size_t g = 0; g < 5; ++g)
    for (int i = 0; i < p.p[g]; ++i)
      rays.push_back({stems[g] + std::to_string(i + 1), vec[start[g] + static_cast<std::size_t>(i)]});

  // Maximal cones: d-subsets containing none of the five consecutive group pairs.
  const std::size_t n = rays.size();
  std::array<std::uint64_t, 5> group_mask{};
  for (std::size_t g = 0; g < 5; ++g)
    for (std::size_t i = start[g]; i < start[g + 1]; ++i) group_mask[g] |= std::uint64_t{1} << i;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::uint64_t m = all & ~((std::uint64_t{1} << i) | (std::uint64_t{1} << j) | (std::uint64_t{1} << k));
        bool ok = true;
        for (std::size_t g = 0; g < 5 && ok; ++g) {
          const std::uint64_t pair = group_mask[g] | group_mask[(g + 1) % 5];
          if ((m & pair) == pair) ok = false;
        }
        if (ok) cones.push_back(Cone::from_mask(m).ids());
      }

  Fan fan = build_fan(d, std::move(rays), std::move(cones));
  assert_catalog_fan(fan, p);
  return fan;
}

Fan build(const CatalogParams& params) {
  struct V {
    Fan operator()(const ProjectiveSpaceParams& p) const { return projective_space(p.d); }
    Fan operator()(const BundleParams& p) const { return kleinschmidt_bundle(p); }
    Fan operator()(const Example41Params& p) const { return example_41(p.d, p.a); }
    Fan operator()(const BatyrevParams& p) const { return batyrev_picard3(p); }
  };
  return std::visit(V{}, params);
}

// ---------------------------------------------------------------------------

std::vector<ExpectedRelation> expected_relations(const CatalogParams& params) {
  struct V {
    std::vector<ExpectedRelation> operator()(const ProjectiveSpaceParams& p) const {
      auto names = numbered("e", 1, p.d);
      names.push_back("e0");
      return {{names, {}}};
    }
    std::vector<ExpectedRelation> bundle(int d, int s, const std::vector<int>& twists) const {
      ExpectedRelation xs{numbered("x", 1, d - s + 2), {}};
      for (int i = 0; i < s - 1; ++i)
        if (twists[static_cast<std::size_t>(i)] != 0) xs.rhs["y" + std::to_string(i + 1)] = twists[static_cast<std::size_t>(i)];
      ExpectedRelation ys{numbered("y", 1, s), {}};
      return {xs, ys};
    }
    std::vector<ExpectedRelation> operator()(const BundleParams& p) const {
      return bundle(p.d, p.s, p.twists);
    }
    std::vector<ExpectedRelation> operator()(const Example41Params& p) const {
      std::vector<int> tw(static_cast<std::size_t>(p.d - 2), 0);
      tw[0] = p.a;
      return bundle(p.d, p.d - 1, tw);
    }
    std::vector<ExpectedRelation> operator()(const BatyrevParams& raw) const {
      const BatyrevParams p = normalize(raw);
      const std::array<const char*, 5> stems{"v", "y", "z", "t", "u"};
      auto group = [&](int g) { return numbered(stems[static_cast<std::size_t>(g)], 1, p.p[static_cast<std::size_t>(g)]); };
      auto pair = [&](int g, int h) {
        auto a = group(g);
        auto b = group(h);
        a.insert(a.end(), b.begin(), b.end());
        return a;
      };
      std::map<std::string, int> rel1, rel5, ys, us;
      for (int i = 2; i <= p.p[2]; ++i) {
        const int ci = p.c[static_cast<std::size_t>(i - 2)];
        if (ci != 0) {
          rel1["z" + std::to_string(i)] = ci;
          rel5["z" + std::to_string(i)] = ci;
        }
      }
      for (int i = 1; i <= p.p[3]; ++i) {
        const int bi = p.b[static_cast<std::size_t>(i - 1)];
        rel1["t" + std::to_string(i)] = bi + 1;
        if (bi != 0) rel5["t" + std::to_string(i)] = bi;
      }
      for (const auto& nm : group(1)) ys[nm] = 1;
      for (const auto& nm : group(4)) us[nm] = 1;
      return {{pair(0, 1), rel1}, {pair(1, 2), us}, {pair(2, 3), {}}, {pair(3, 4), ys}, {pair(4, 0), rel5}};
    }
  };
  return std::visit(V{}, params);
}

bool relations_match(const Fan& fan, const std::vector<ExpectedRelation>& expected) {
  using Key = std::pair<std::set<std::string>, std::map<std::string, Integer>>;
  std::set<Key> want, got;
  for (const auto& e : expected) {
    Key k{{e.collection.begin(), e.collection.end()}, {}};
    for (const auto& [nm, c] : e.rhs) k.second[nm] = c;
    want.insert(std::move(k));
  }
  for (const auto& rel : primitive_relations(fan)) {
    Key k;
    for (const auto& nm : fan.names_of(rel.collection.rays)) k.first.insert(nm);
    for (const auto& [id, c] : rel.coefficients) k.second[fan.ray(id).name] = c;
    got.insert(std::move(k));
  }
  return want == got;
}

// ---------------------------------------------------------------------------

namespace {

Cone complement_of_names(const Fan& fan, std::initializer_list<const char*> names) {
  Cone all = Cone::from_mask(fan.num_rays() == 64 ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << fan.num_rays()) - 1);
  for (const char* nm : names) all = all.without(fan.ray_id(nm));
  return all;
}

}  // namespace

Cone batyrev_s1_cone(const Fan& fan) {
  return complement_of_names(fan, {"v1", "y1", "z1", "t1", "u1"});
}

std::optional<Cone> batyrev_case1_cone(const Fan& fan, const BatyrevParams& params) {
  if (params.p[2] < 2 || params.p[3] < 2) return std::nullopt;
  return complement_of_names(fan, {"v1", "z1", "z2", "t1", "t2"});
}

std::optional<Cone> batyrev_case2_cone(const Fan& fan, const BatyrevParams& params) {
  if (params.p[2] < 2) return std::nullopt;
  return complement_of_names(fan, {"v1", "y1", "z1", "z2", "u1"});
}

// ---------------------------------------------------------------------------

std::vector<CatalogParams> grid(const ProjectiveSpaceBounds& bounds) {
  std::vector<CatalogParams> out;
  for (int d = std::max(1, bounds.min_d); d <= bounds.max_d; ++d) out.emplace_back(ProjectiveSpaceParams{d});
  return out;
}

namespace {

// Non-increasing sequences of the given length with entries in [0, max].
void non_increasing(std::size_t len, int max, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  const int hi = cur.empty() ? max : cur.back();
  for (int v = hi; v >= 0; --v) {
    cur.push_back(v);
    non_increasing(len, max, cur, out);
    cur.pop_back();
  }
}

// Sequences whose first entry is their minimum, entries in [0, max].
std::vector<std::vector<int>> min_first(std::size_t len, int max) {
  std::vector<std::vector<int>> out;
  if (len == 0) return {{}};
  for (int first = 0; first <= max; ++first) {
    std::vector<int> cur{first};
    std::vector<std::vector<int>> partial{cur};
    for (std::size_t i = 1; i < len; ++i) {
      std::vector<std::vector<int>> grown;
      for (const auto& seq : partial)
        for (int v = first; v <= max; ++v) {
          auto s = seq;
          s.push_back(v);
          grown.push_back(std::move(s));
        }
      partial = std::move(grown);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return out;
}

}  // namespace

std::vector<CatalogParams> grid(const BundleBounds& bounds) {
  std::vector<CatalogParams> out;
  for (int d = bounds.min_d; d <= bounds.max_d; ++d)
    for (int s = std::max(2, bounds.min_s); s <= bounds.max_s && s - 1 < d; ++s) {
      std::vector<std::vector<int>> seqs;
      std::vector<int> cur;
      non_increasing(static_cast<std::size_t>(s - 1), bounds.max_twist, cur, seqs);
      std::reverse(seqs.begin(), seqs.end());
      for (auto& tw : seqs) out.emplace_back(BundleParams{d, s, tw});
    }
  return out;
}

std::vector<CatalogParams> grid(const Example41Bounds& bounds) {
  std::vector<CatalogParams> out;
  for (int d = std::max(3, bounds.min_d); d <= bounds.max_d; ++d)
    for (int a = std::max(1, bounds.min_a); a <= bounds.max_a; ++a) out.emplace_back(Example41Params{d, a});
  return out;
}

std::vector<CatalogParams> grid(const BatyrevBounds& bounds) {
  std::vector<CatalogParams> out;
  for (int p0 = 1; p0 <= bounds.max_p; ++p0)
    for (int p1 = 1; p1 <= bounds.max_p; ++p1)
      for (int p2 = 1; p2 <= bounds.max_p2; ++p2)
        for (int p3 = 1; p3 <= bounds.max_p; ++p3)
          for (int p4 = 1; p4 <= bounds.max_p; ++p4) {
            if (p0 + p1 + p2 + p3 + p4 - 3 < 1) continue;
            for (const auto& b : min_first(static_cast<std::size_t>(p3), bounds.max_twist))
              for (const auto& c : min_first(static_cast<std::size_t>(p2 - 1), bounds.max_twist))
                out.emplace_back(BatyrevParams{{p0, p1, p2, p3, p4}, b, c});
          }
  return out;
}

}  // namespace toric
