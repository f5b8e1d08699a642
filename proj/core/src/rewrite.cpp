#include "hopfcheck/rewrite.hpp"

namespace hopfcheck {

SmashContext::SmashContext(std::vector<Perm> group, std::vector<std::string> letter_names,
                           std::vector<Perm> letter_elements, std::size_t cap)
    : group_(std::move(group)), names_(std::move(letter_names)), cap_(cap) {
  if (group_.empty() || group_.size() > 255) throw RewriteError("group must have between 1 and 255 elements");
  if (names_.size() != letter_elements.size()) throw RewriteError("one group element per letter is required");
  if (cap_ > Word::kHardMax) throw RewriteError("word cap exceeds the hard limit of 16");
  std::size_t n = group_.size();
  mul_.resize(n * n);
  inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (group_[a].is_identity()) identity_ = static_cast<std::uint8_t>(a);
    inv_[a] = static_cast<std::uint8_t>(index_of(group_, group_[a].inverse()));
    for (std::size_t b = 0; b < n; ++b) mul_[a * n + b] = static_cast<std::uint8_t>(index_of(group_, group_[a] * group_[b]));
  }
  for (const auto& t : letter_elements) letter_elem_.push_back(static_cast<std::uint8_t>(index_of(group_, t)));
}

std::shared_ptr<const SmashContext> SmashContext::v3(std::size_t cap) {
  return std::make_shared<const SmashContext>(
      symmetric_group(3), std::vector<std::string>{"x12", "x13", "x23"},
      std::vector<Perm>{Perm::parse("(12)", 3), Perm::parse("(13)", 3), Perm::parse("(23)", 3)}, cap);
}

std::shared_ptr<const SmashContext> SmashContext::free_algebra(std::vector<std::string> letter_names, std::size_t cap) {
  std::vector<Perm> elems(letter_names.size(), Perm::identity(1));
  return std::make_shared<const SmashContext>(symmetric_group(1), std::move(letter_names), std::move(elems), cap);
}

std::uint8_t SmashContext::letter_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<std::uint8_t>(i);
  throw RewriteError("unknown letter '" + name + "'");
}

Word SmashContext::parse_word(const std::string& text) const {
  Word w;
  std::size_t pos = 0;
  if (text == "1") return w;
  while (pos < text.size()) {
    std::size_t best = 0, best_len = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].size() > best_len && text.compare(pos, names_[i].size(), names_[i]) == 0) {
        best = i;
        best_len = names_[i].size();
      }
    }
    if (best_len == 0) throw RewriteError("cannot parse word '" + text + "'");
    if (w.size() >= cap_) throw WordCapError(w.size() + 1);
    w.push_back(static_cast<std::uint8_t>(best));
    pos += best_len;
  }
  return w;
}

std::vector<std::size_t> hilbert_series(const std::vector<Word>& words) {
  std::vector<std::size_t> out;
  for (const auto& w : words) {
    if (out.size() <= w.size()) out.resize(w.size() + 1, 0);
    ++out[w.size()];
  }
  return out;
}

}  // namespace hopfcheck
