#include "qramsey/family.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qramsey {

IndexSet IndexSet::of(std::initializer_list<int> elems) {
  std::uint64_t m = 0;
  for (int e : elems) {
    if (e < 1 || e > 62) throw std::invalid_argument("IndexSet: element out of range");
    m |= 1ULL << (e - 1);
  }
  return IndexSet(m);
}

IndexSet IndexSet::from_elements(const std::vector<int>& elems) {
  std::uint64_t m = 0;
  for (int e : elems) {
    if (e < 1 || e > 62) throw std::invalid_argument("IndexSet: element out of range");
    m |= 1ULL << (e - 1);
  }
  return IndexSet(m);
}

IndexSet IndexSet::full(int n) {
  if (n < 0 || n > 62) throw std::invalid_argument("IndexSet: ground out of range");
  return IndexSet(n == 0 ? 0 : (~0ULL >> (64 - n)));
}

int IndexSet::max_element() const {
  if (empty()) throw std::logic_error("IndexSet: max of empty set");
  return 64 - __builtin_clzll(mask_);
}

int IndexSet::min_element() const {
  if (empty()) throw std::logic_error("IndexSet: min of empty set");
  return __builtin_ctzll(mask_) + 1;
}

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(__builtin_ctzll(m) + 1);
  return out;
}

PosRational IndexSet::product_over(const std::vector<PosRational>& v) const {
  PosRational p = PosRational::one();
  for (std::uint64_t m = mask_; m; m &= m - 1) {
    std::size_t i = static_cast<std::size_t>(__builtin_ctzll(m));
    if (i >= v.size()) throw std::invalid_argument("IndexSet: index beyond vector length");
    p = p * v[i];
  }
  return p;
}

PosRational IndexSet::product_over(const RatVector& v) const { return product_over(v.entries()); }

std::string IndexSet::str() const {
  std::string out;
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out;
}

NFamily::NFamily(int ground, std::vector<IndexSet> parts) : ground_(ground), parts_(std::move(parts)) {
  if (ground_ < 1) throw std::invalid_argument("NFamily: ground must be >= 1");
  if (parts_.empty()) throw std::invalid_argument("NFamily: no parts");
  std::sort(parts_.begin(), parts_.end());
  IndexSet seen;
  for (const auto& p : parts_) {
    if (p.empty()) throw std::invalid_argument("NFamily: empty part");
    if (!p.subset_of(IndexSet::full(ground_)))
      throw std::invalid_argument("NFamily: element beyond ground " + std::to_string(ground_));
    if (!p.disjoint_with(seen)) throw std::invalid_argument("NFamily: parts not pairwise disjoint");
    seen = seen.united(p);
  }
  parts_.erase(std::unique(parts_.begin(), parts_.end()), parts_.end());
}

NFamily NFamily::parse(int ground, const std::string& text) {
  std::vector<IndexSet> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '|')) {
    std::vector<int> elems;
    std::stringstream ps(part);
    std::string tok;
    while (std::getline(ps, tok, ',')) elems.push_back(std::stoi(tok));
    parts.push_back(IndexSet::from_elements(elems));
  }
  return NFamily(ground, std::move(parts));
}

bool NFamily::is_extreme() const {
  if (parts_.size() == 1) return true;
  for (const auto& p : parts_)
    if (p.size() > 1) return false;
  return true;
}

bool NFamily::is_lower() const {
  int lead = leading_part().size();
  for (const auto& p : parts_)
    if (p.size() < lead) return false;
  return true;
}

std::string NFamily::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += "|";
    out += parts_[i].str();
  }
  return out;
}

bool operator<(const NFamily& a, const NFamily& b) {
  if (a.ground_ != b.ground_) return a.ground_ < b.ground_;
  return a.parts_ < b.parts_;
}

PosRational phi(const NFamily& fam, const RatVector& v) {
  if (static_cast<int>(v.size()) != fam.ground())
    throw std::invalid_argument("phi: vector length " + std::to_string(v.size()) +
                                " does not match ground " + std::to_string(fam.ground()));
  PosRational sum = fam.parts().front().product_over(v);
  for (std::size_t i = 1; i < fam.parts().size(); ++i) sum = sum + fam.parts()[i].product_over(v);
  return sum;
}

NFamily compose(const NFamily& outer, const std::vector<IndexSet>& inner, int ground) {
  if (outer.ground() != static_cast<int>(inner.size()))
    throw std::invalid_argument("compose: outer ground must equal number of inner blocks");
  IndexSet seen;
  for (const auto& blk : inner) {
    if (blk.empty()) throw std::invalid_argument("compose: empty inner block");
    if (!blk.disjoint_with(seen)) throw std::invalid_argument("compose: inner blocks overlap");
    seen = seen.united(blk);
  }
  std::vector<IndexSet> parts;
  parts.reserve(outer.part_count());
  for (const auto& J : outer.parts()) {
    IndexSet u;
    for (int j : J.elements()) u = u.united(inner[static_cast<std::size_t>(j - 1)]);
    parts.push_back(u);
  }
  return NFamily(ground, std::move(parts));
}

std::string RatioPair::str() const { return a.str() + "|" + b.str(); }

RatioPair RatioPair::parse(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("RatioPair literal needs '|': " + text);
  auto side = [](const std::string& s) {
    std::vector<int> elems;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) elems.push_back(std::stoi(tok));
    return IndexSet::from_elements(elems);
  };
  RatioPair p{side(text.substr(0, bar)), side(text.substr(bar + 1))};
  if (!p.a.disjoint_with(p.b)) throw std::invalid_argument("RatioPair: A and B overlap");
  return p;
}

RatioIndex::RatioIndex(std::vector<RatioPair> pairs) : pairs_(std::move(pairs)) {
  for (const auto& p : pairs_) {
    if (!p.a.disjoint_with(p.b)) throw std::invalid_argument("RatioIndex: pair not disjoint");
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool RatioIndex::contains(const RatioPair& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

std::optional<std::size_t> RatioIndex::position(const RatioPair& p) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

bool RatioIndex::contains_all_of(const RatioIndex& o) const {
  return std::includes(pairs_.begin(), pairs_.end(), o.pairs_.begin(), o.pairs_.end());
}

RatioIndex RatioIndex::united(const RatioIndex& o) const {
  std::vector<RatioPair> all = pairs_;
  all.insert(all.end(), o.pairs_.begin(), o.pairs_.end());
  return RatioIndex(std::move(all));
}

std::string RatioIndex::str() const {
  std::string out;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) out += " ";
    out += "(" + pairs_[i].str() + ")";
  }
  return out;
}

RatioIndex newp(const std::vector<NFamily>& families) {
  std::vector<RatioPair> pairs;
  for (const auto& fam : families) {
    if (!fam.is_new())
      throw std::invalid_argument("newp: family " + fam.str() + " is not new on ground " +
                                  std::to_string(fam.ground()));
    IndexSet b = fam.leading_part().without(fam.ground());
    for (const auto& part : fam.parts()) {
      if (part == fam.leading_part()) continue;
      pairs.push_back(RatioPair{part, b});
    }
  }
  return RatioIndex(std::move(pairs));
}

namespace {

void check_guard(int n, int guard) {
  if (n < 1) throw std::invalid_argument("enumerate: n must be >= 1");
  if (n > guard)
    throw std::invalid_argument("enumerate: n = " + std::to_string(n) + " exceeds guard " +
                                std::to_string(guard) + " (family counts grow super-exponentially)");
}

// all set partitions of the elements of `support` into nonempty blocks
void partitions_of(const std::vector<int>& support, std::size_t idx, std::vector<IndexSet>& blocks,
                   std::vector<std::vector<IndexSet>>& out) {
  if (idx == support.size()) {
    out.push_back(blocks);
    return;
  }
  int e = support[idx];
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b] = blocks[b].with(e);
    partitions_of(support, idx + 1, blocks, out);
    blocks[b] = blocks[b].without(e);
  }
  blocks.push_back(IndexSet::of({e}));
  partitions_of(support, idx + 1, blocks, out);
  blocks.pop_back();
}

}  // namespace

std::vector<NFamily> enumerate_families(int n, int guard) {
  check_guard(n, guard);
  std::vector<NFamily> out;
  for (std::uint64_t support = 1; support < (1ULL << n); ++support) {
    std::vector<int> elems = IndexSet(support).elements();
    std::vector<std::vector<IndexSet>> parts_list;
    std::vector<IndexSet> blocks;
    partitions_of(elems, 0, blocks, parts_list);
    for (auto& parts : parts_list) out.emplace_back(n, std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NFamily> enumerate_extreme(int k, int guard) {
  std::vector<NFamily> out;
  for (const auto& fam : enumerate_families(k, guard))
    if (fam.is_extreme()) out.push_back(fam);
  return out;
}

std::vector<NFamily> enumerate_lower(int n, int guard) {
  std::vector<NFamily> out;
  for (const auto& fam : enumerate_families(n, guard))
    if (fam.is_lower()) out.push_back(fam);
  return out;
}

std::vector<NFamily> enumerate_all_new(int n, int guard) {
  std::vector<NFamily> out;
  for (const auto& fam : enumerate_families(n, guard))
    if (fam.is_new()) out.push_back(fam);
  return out;
}

}  // namespace qramsey
