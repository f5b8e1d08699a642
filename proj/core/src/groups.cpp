#include "hopfcheck/groups.hpp"

#include <algorithm>
#include <set>

namespace hopfcheck {

Perm Perm::identity(std::size_t n) {
  if (n == 0 || n > kMaxN) throw GroupError("permutation degree must be in 1..5");
  Perm p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (std::size_t i = 0; i < kMaxN; ++i) p.img_[i] = static_cast<std::uint8_t>(i);
  return p;
}

Perm Perm::from_images(std::span<const int> images) {
  Perm p = identity(images.size());
  std::array<bool, kMaxN> seen{};
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1]) throw GroupError("images are not a bijection");
    seen[v - 1] = true;
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Perm Perm::transposition(int i, int j, std::size_t n) {
  Perm p = identity(n);
  if (i < 1 || j < 1 || i > static_cast<int>(n) || j > static_cast<int>(n) || i == j) {
    throw GroupError("bad transposition");
  }
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

Perm Perm::parse(std::string_view text, std::size_t n) {
  Perm p = identity(n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_ws();
  if (pos < text.size() && (text.substr(pos) == "e" || text.substr(pos) == "()")) return p;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw GroupError("cannot parse permutation: '" + std::string(text) + "'");
    ++pos;
    std::vector<int> cycle;
    while (pos < text.size() && text[pos] != ')') {
      char c = text[pos++];
      if (c == ' ' || c == ',') continue;
      if (c < '1' || c > '9') throw GroupError("cannot parse permutation: '" + std::string(text) + "'");
      cycle.push_back(c - '0');
    }
    if (pos >= text.size()) throw GroupError("unterminated cycle in '" + std::string(text) + "'");
    ++pos;
    for (int v : cycle) {
      if (v > static_cast<int>(n)) throw GroupError("point out of range in '" + std::string(text) + "'");
    }
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) throw GroupError("repeated point in cycle");
    // Cycles are applied right-to-left, like composition.
    Perm c = identity(n);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      c.img_[cycle[k] - 1] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()] - 1);
    }
    p = p * c;
  }
  return p;
}

std::vector<int> Perm::images() const {
  std::vector<int> v(n_);
  for (std::size_t i = 0; i < n_; ++i) v[i] = img_[i] + 1;
  return v;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.n_ != q.n_) throw GroupError("compose: degree mismatch");
  Perm r = p;
  for (std::size_t i = 0; i < p.n_; ++i) r.img_[i] = p.img_[q.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r = *this;
  for (std::size_t i = 0; i < n_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

int Perm::sign() const {
  int inversions = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (img_[i] > img_[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (img_[i] != i) return false;
  return true;
}

std::size_t Perm::order() const {
  Perm p = *this;
  std::size_t k = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++k;
  }
  return k;
}

std::string Perm::str() const {
  std::string out;
  std::array<bool, kMaxN> seen{};
  for (std::size_t i = 0; i < n_; ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += '(';
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      out += static_cast<char>('1' + j);
      j = img_[j];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t i = 0; i < a.n_; ++i) {
    if (auto c = a.img_[i] <=> b.img_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<Perm> symmetric_group(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i) + 1;
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;  // next_permutation visits image sequences in lexicographic order
}

std::vector<Perm> generated_subgroup(const std::vector<Perm>& generators, std::size_t n) {
  std::set<Perm> elems{Perm::identity(n)};
  std::vector<Perm> frontier{Perm::identity(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        Perm y = g * x;
        if (elems.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {elems.begin(), elems.end()};
}

std::size_t index_of(const std::vector<Perm>& group, const Perm& g) {
  auto it = std::lower_bound(group.begin(), group.end(), g);
  if (it == group.end() || !(*it == g)) throw GroupError("element " + g.str() + " not in group");
  return static_cast<std::size_t>(it - group.begin());
}

std::vector<Perm> conjugacy_class(const Perm& g, const std::vector<Perm>& group) {
  std::set<Perm> out;
  for (const auto& h : group) out.insert(conjugate(h, g));
  return {out.begin(), out.end()};
}

std::vector<Perm> centralizer(const Perm& g, const std::vector<Perm>& group) {
  std::vector<Perm> out;
  for (const auto& h : group)
    if (h * g == g * h) out.push_back(h);
  return out;
}

std::vector<Perm> conjugacy_class_representatives(const std::vector<Perm>& group) {
  std::set<Perm> seen;
  std::vector<Perm> reps;
  for (const auto& g : group) {
    if (seen.count(g)) continue;
    auto cls = conjugacy_class(g, group);
    seen.insert(cls.begin(), cls.end());
    reps.push_back(cls.front());
  }
  return reps;
}

bool is_subgroup(const std::vector<Perm>& h, const std::vector<Perm>& group) {
  if (h.empty()) return false;
  std::set<Perm> hs(h.begin(), h.end());
  std::set<Perm> gs(group.begin(), group.end());
  for (const auto& x : h) {
    if (!gs.count(x) || !hs.count(x.inverse())) return false;
    for (const auto& y : h)
      if (!hs.count(x * y)) return false;
  }
  return true;
}

std::vector<Perm> coset_representatives(const std::vector<Perm>& group, const std::vector<Perm>& subgroup) {
  if (!is_subgroup(subgroup, group)) throw GroupError("coset_representatives: not a subgroup");
  std::set<Perm> covered;
  std::vector<Perm> reps;
  for (const auto& g : group) {  // group order makes each rep the minimal coset element
    if (covered.count(g)) continue;
    reps.push_back(g);
    for (const auto& h : subgroup) covered.insert(g * h);
  }
  return reps;
}

GroupDescriptor GroupDescriptor::cyclic(const Perm& gen) {
  std::size_t ord = gen.order();
  if (ord == 2) return {GroupKind::Z2, gen};
  if (ord == 3) return {GroupKind::Z3, gen};
  throw GroupError("cyclic descriptor supports orders 2 and 3 only");
}

std::vector<Perm> GroupDescriptor::elements() const {
  if (kind == GroupKind::S3) return symmetric_group(3);
  return generated_subgroup({generator}, generator.degree());
}

GroupDescriptor centralizer_descriptor_s3(const Perm& g) {
  if (g.degree() != 3) throw GroupError("centralizer_descriptor_s3: degree must be 3");
  if (g.is_identity()) return GroupDescriptor::s3();
  return GroupDescriptor::cyclic(g);
}

}  // namespace hopfcheck
