#include "allbut/cell_word.hpp"

#include <bit>
#include <stdexcept>

namespace allbut {

namespace {

std::size_t word_count(std::size_t width) { return (width + 63) / 64; }

}  // namespace

CellWord::CellWord(std::size_t width) : width_(width), words_(word_count(width), 0) {}

CellWord CellWord::from_string(std::string_view cells) {
  CellWord w(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    switch (cells[i]) {
      case '*': w.set(i); break;
      case '.':
      case ' ': break;
      default:
        throw std::invalid_argument("bad pattern cell '" + std::string(1, cells[i]) + "'");
    }
  }
  return w;
}

void CellWord::set(std::size_t i, bool is_star) {
  if (i >= width_) throw std::out_of_range("cell offset past pattern width");
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (is_star)
    words_[i >> 6] |= bit;
  else
    words_[i >> 6] &= ~bit;
}

std::size_t CellWord::count_stars() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::optional<std::size_t> CellWord::last_star() const {
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (words_[i] != 0)
      return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[i]));
  }
  return std::nullopt;
}

std::size_t CellWord::first_blank(std::size_t from) const {
  for (std::size_t i = from >> 6; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    if (i == (from >> 6)) w |= (std::uint64_t{1} << (from & 63)) - 1;
    if (w != ~std::uint64_t{0}) {
      std::size_t pos = i * 64 + static_cast<std::size_t>(std::countr_one(w));
      return pos < width_ ? pos : width_;
    }
  }
  return width_;
}

CellWord CellWord::slice(std::size_t offset, std::size_t width) const {
  CellWord out(width);
  const std::size_t shift = offset & 63;
  const std::size_t base = offset >> 6;
  for (std::size_t j = 0; j < out.words_.size(); ++j) {
    const std::size_t lo = base + j;
    std::uint64_t w = lo < words_.size() ? words_[lo] >> shift : 0;
    if (shift != 0 && lo + 1 < words_.size()) w |= words_[lo + 1] << (64 - shift);
    out.words_[j] = w;
  }
  // Source bits past width_ are always zero; clear our own tail.
  if (width % 64 != 0 && !out.words_.empty())
    out.words_.back() &= (std::uint64_t{1} << (width % 64)) - 1;
  return out;
}

std::string CellWord::to_string() const {
  std::string s(width_, '.');
  for (std::size_t i = 0; i < width_; ++i)
    if (star(i)) s[i] = '*';
  return s;
}

std::size_t CellWord::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ width_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace allbut
