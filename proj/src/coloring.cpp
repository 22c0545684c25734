#include "qramsey/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace qramsey {

Coloring::Coloring(int range, Eval eval, Json descriptor)
    : range_(range), eval_(std::move(eval)), descriptor_(std::move(descriptor)) {
  if (range_ < 1) throw std::invalid_argument("coloring: range must be >= 1");
}

Coloring Coloring::restricted_to_height(const BigInt& cutoff) const {
  Eval inner = eval_;
  BigInt h = cutoff;
  Json desc = Json{{"kind", "restricted"}, {"height", h.get_str()}, {"base", descriptor_}};
  return Coloring(
      range_,
      [inner, h](const PosRational& q) -> std::optional<int> {
        if (q.height() > h) return std::nullopt;
        return inner(q);
      },
      std::move(desc));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int positive_mod(long v, int m) { return static_cast<int>(((v % m) + m) % m); }

int require_int(const Json& spec, const char* key) {
  if (!spec.contains(key) || !spec[key].is_number_integer())
    throw std::invalid_argument(std::string("coloring spec: missing integer field \"") + key + "\"");
  return spec[key].get<int>();
}

}  // namespace

Coloring builtin(const Json& spec) {
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
    throw std::invalid_argument("coloring spec: expected object with \"kind\"");
  const std::string kind = spec["kind"].get<std::string>();

  if (kind == "val2_parity") {
    return Coloring(
        2, [](const PosRational& q) { return std::optional<int>(1 + positive_mod(val2(q), 2)); },
        Json{{"kind", "val2_parity"}});
  }
  if (kind == "val2_mod") {
    int m = require_int(spec, "m");
    if (m < 1) throw std::invalid_argument("coloring spec: m must be >= 1");
    return Coloring(
        m, [m](const PosRational& q) { return std::optional<int>(1 + positive_mod(val2(q), m)); },
        Json{{"kind", "val2_mod"}, {"m", m}});
  }
  if (kind == "numerator_mod" || kind == "denominator_mod") {
    int m = require_int(spec, "m");
    if (m < 1) throw std::invalid_argument("coloring spec: m must be >= 1");
    bool num = kind == "numerator_mod";
    return Coloring(
        m,
        [m, num](const PosRational& q) {
          BigInt z = num ? q.numerator() : q.denominator();
          BigInt r = z % m;
          return std::optional<int>(1 + static_cast<int>(r.get_si()));
        },
        Json{{"kind", kind}, {"m", m}});
  }
  if (kind == "product") {
    if (!spec.contains("parts") || !spec["parts"].is_array() || spec["parts"].empty())
      throw std::invalid_argument("coloring spec: product needs a nonempty \"parts\" array");
    std::vector<Coloring> parts;
    long total = 1;
    for (const auto& p : spec["parts"]) {
      parts.push_back(builtin(Json(p)));
      total *= parts.back().range();
      if (total > (1L << 30)) throw std::invalid_argument("coloring spec: product range too large");
    }
    Json desc = Json{{"kind", "product"}, {"parts", spec["parts"]}};
    return Coloring(
        static_cast<int>(total),
        [parts](const PosRational& q) -> std::optional<int> {
          long code = 0, radix = 1;
          for (const auto& c : parts) {
            auto v = c(q);
            if (!v) return std::nullopt;
            code += static_cast<long>(*v - 1) * radix;
            radix *= c.range();
          }
          return static_cast<int>(1 + code);
        },
        std::move(desc));
  }
  if (kind == "random") {
    int r = require_int(spec, "r");
    if (r < 1) throw std::invalid_argument("coloring spec: r must be >= 1");
    std::uint64_t seed = spec.contains("seed") ? spec["seed"].get<std::uint64_t>() : 0;
    return Coloring(
        r,
        [r, seed](const PosRational& q) {
          // canonical encoding of the reduced fraction, then a seeded hash
          std::uint64_t h = splitmix64(fnv1a(q.str()) ^ splitmix64(seed));
          return std::optional<int>(1 + static_cast<int>(h % static_cast<std::uint64_t>(r)));
        },
        Json{{"kind", "random"}, {"r", r}, {"seed", seed}});
  }
  if (kind == "constant") {
    int r = require_int(spec, "r");
    int c = require_int(spec, "c");
    if (r < 1 || c < 1 || c > r) throw std::invalid_argument("coloring spec: need 1 <= c <= r");
    return Coloring(
        r, [c](const PosRational&) { return std::optional<int>(c); },
        Json{{"kind", "constant"}, {"r", r}, {"c", c}});
  }
  throw std::invalid_argument("coloring spec: unknown kind \"" + kind + "\"");
}

Coloring parse_coloring(const std::string& spec_text) {
  Json spec;
  try {
    spec = Json::parse(spec_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("coloring spec: invalid JSON: ") + e.what());
  }
  return builtin(spec);
}

PointColoring PointColoring::structured(IndexSet s, BigInt range, BaseEval base, Json descriptor) {
  PointColoring c;
  c.structured_ = true;
  c.s_ = s;
  c.range_ = std::move(range);
  c.base_ = std::move(base);
  c.descriptor_ = std::move(descriptor);
  return c;
}

PointColoring PointColoring::arbitrary(BigInt range, PointEval eval, Json descriptor) {
  PointColoring c;
  c.structured_ = false;
  c.range_ = std::move(range);
  c.point_ = std::move(eval);
  c.descriptor_ = std::move(descriptor);
  return c;
}

PosRational PointColoring::project(const PointX& pt) const {
  if (!structured_) throw std::logic_error("PointColoring: projection needs the C_S structure");
  return pt.x * s_.product_over(pt.u);
}

std::optional<BigInt> PointColoring::operator()(const PointX& pt) const {
  if (structured_) return base_(project(pt));
  return point_(pt);
}

const IndexSet& PointColoring::structure() const {
  if (!structured_) throw std::logic_error("PointColoring: no C_S tag");
  return s_;
}

std::optional<BigInt> PointColoring::eval_base(const PosRational& w) const {
  if (!structured_) throw std::logic_error("PointColoring: no C_S base");
  return base_(w);
}

PointColoring project_coloring(const Coloring& c, const IndexSet& s) {
  Coloring base = c;
  Json desc = Json{{"kind", "projected"}, {"S", s.elements()}, {"base", c.descriptor()}};
  return PointColoring::structured(
      s, BigInt(c.range()),
      [base](const PosRational& w) -> std::optional<BigInt> {
        auto v = base(w);
        if (!v) return std::nullopt;
        return BigInt(*v);
      },
      std::move(desc));
}

PointColoring auxiliary(const PointColoring& c, const std::vector<Dilation>& h) {
  if (!c.is_structured())
    throw std::invalid_argument("auxiliary: coloring must carry the C_S structure");
  std::vector<Dilation> maps = h;
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  if (maps.empty()) throw std::invalid_argument("auxiliary: H must be nonempty");

  // pi_S(R_{(q1,q2)}(pt)) = q1^{|S|} q2 * pi_S(pt)
  const IndexSet s = c.structure();
  std::vector<PosRational> factors;
  factors.reserve(maps.size());
  for (const auto& d : maps) factors.push_back(d.q1.pow(s.size()) * d.q2);

  const BigInt r = c.range();
  BigInt range = 1;
  for (std::size_t i = 0; i < maps.size(); ++i) range *= r;

  Json hdesc = Json::array();
  for (const auto& d : maps) hdesc.push_back(Json::array({d.q1.str(), d.q2.str()}));
  Json desc = Json{{"kind", "auxiliary"}, {"H", hdesc}, {"base", c.descriptor()}};

  PointColoring inner = c;
  return PointColoring::structured(
      s, range,
      [inner, factors, r](const PosRational& w) -> std::optional<BigInt> {
        // iota: 1 + sum r^{i-1} (C(h_i(x)) - 1), mixed-radix over the tuple
        BigInt code = 0, radix = 1;
        for (const auto& g : factors) {
          auto v = inner.eval_base(g * w);
          if (!v) return std::nullopt;
          code += (*v - 1) * radix;
          radix *= r;
        }
        return BigInt(1 + code);
      },
      std::move(desc));
}

bool is_family_consistent(const RatVector& v, const NFamily& fam, const Coloring& c) {
  auto lhs = c(phi(fam, v));
  auto rhs = c(fam.leading_part().product_over(v));
  return lhs.has_value() && rhs.has_value() && *lhs == *rhs;
}

ConsistencyResult is_X_consistent(const RatVector& v, const std::vector<NFamily>& families,
                                  const Coloring& c) {
  for (const auto& fam : families) {
    if (!is_family_consistent(v, fam, c)) return ConsistencyResult{false, fam};
  }
  return ConsistencyResult{};
}

FamilyColoring family_coloring(const Coloring& c, const RatVector& v) {
  return FamilyColoring(c, v);
}

}  // namespace qramsey
