#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace allbut {

// Fixed-width star/blank word packed one bit per cell, least offset first.
// A set bit is a star.
class CellWord {
 public:
  CellWord() = default;
  explicit CellWord(std::size_t width);

  // '*' is a star, '.' or ' ' a blank.
  static CellWord from_string(std::string_view cells);

  std::size_t width() const { return width_; }
  bool star(std::size_t i) const {
    return i < width_ && ((words_[i >> 6] >> (i & 63)) & 1U);
  }
  void set(std::size_t i, bool is_star = true);

  std::size_t count_stars() const;
  std::optional<std::size_t> last_star() const;
  // First blank at or after `from`; width() if none.
  std::size_t first_blank(std::size_t from = 0) const;
  // Cells [offset, offset + width); cells past the end read as blank.
  CellWord slice(std::size_t offset, std::size_t width) const;

  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const CellWord&, const CellWord&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace allbut

template <>
struct std::hash<allbut::CellWord> {
  std::size_t operator()(const allbut::CellWord& w) const noexcept { return w.hash(); }
};
