#include "allbut/core.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace allbut {

Pile pile_cap_from_env() {
  const char* raw = std::getenv("ALLBUT_PILE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultPileCap;
  Pile cap = 0;
  std::string_view text(raw);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap == 0)
    throw Error(ErrorKind::invalid_input,
                "ALLBUT_PILE_CAP must be a positive integer, got '" +
                    std::string(text) + "'");
  return cap;
}

FesSet FesSet::validate(std::span<const std::int64_t> raw) {
  std::vector<Pile> elements;
  elements.reserve(raw.size());
  for (std::int64_t v : raw) {
    if (v <= 0)
      throw Error(ErrorKind::invalid_input,
                  "FES element must be positive, got " + std::to_string(v));
    elements.push_back(static_cast<Pile>(v));
  }
  std::sort(elements.begin(), elements.end());
  auto dup = std::adjacent_find(elements.begin(), elements.end());
  if (dup != elements.end())
    throw Error(ErrorKind::invalid_input,
                "duplicate FES element " + std::to_string(*dup));
  return FesSet(std::move(elements));
}

FesSet FesSet::parse(std::string_view text) {
  std::vector<std::int64_t> raw;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '{' && text.back() == '}')
    text = trim(text.substr(1, text.size() - 2));
  if (text.empty()) return FesSet{};

  while (true) {
    auto comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorKind::invalid_input,
                  "cannot parse FES element '" + std::string(token) + "'");
    raw.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return validate(raw);
}

bool FesSet::contains(Pile d) const {
  return std::binary_search(elements_.begin(), elements_.end(), d);
}

std::string FesSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out << ',';
    out << elements_[i];
  }
  out << '}';
  return out.str();
}

std::string_view to_string(EngineKind kind) {
  switch (kind) {
    case EngineKind::naive: return "naive";
    case EngineKind::literal: return "literal";
    case EngineKind::fes: return "fes";
    case EngineKind::synthetic: return "synthetic";
  }
  return "?";
}

std::string_view to_string(PeriodStatus status) {
  switch (status) {
    case PeriodStatus::proved_by_automaton: return "proved-by-automaton";
    case PeriodStatus::verified_on_prefix: return "verified-on-prefix";
    case PeriodStatus::candidate: return "candidate";
  }
  return "?";
}

namespace {

void check_heaps(std::span<const Pile> heaps, const NimSequence& seq) {
  for (Pile h : heaps)
    if (h >= seq.size())
      throw Error(ErrorKind::too_short,
                  "heap " + std::to_string(h) + " outside computed range [0, " +
                      std::to_string(seq.size()) + ")");
}

}  // namespace

NimValue sum_nimber(std::span<const Pile> heaps, const NimSequence& seq) {
  check_heaps(heaps, seq);
  NimValue total = 0;
  for (Pile h : heaps) total ^= seq[h];
  return total;
}

std::optional<Move> optimal_move(std::span<const Pile> heaps,
                                 const NimSequence& seq, const FesSet& x) {
  const NimValue total = sum_nimber(heaps, seq);
  if (total == 0) return std::nullopt;

  for (std::size_t i = 0; i < heaps.size(); ++i) {
    const Pile h = heaps[i];
    const NimValue target = seq[h] ^ total;
    if (target >= seq[h]) continue;
    // mex guarantees some option of h carries every value below G(h).
    for (Pile take = 1; take <= h; ++take) {
      if (x.contains(take)) continue;
      if (seq[h - take] == target) return Move{i, take, h - take};
    }
    throw std::logic_error("nim sequence inconsistent with X at pile " +
                           std::to_string(h));
  }
  throw std::logic_error("nonzero nim sum without a reducible heap");
}

}  // namespace allbut
