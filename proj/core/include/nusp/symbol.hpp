#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace nusp {

// Interned token. Decorated markers like <^{q0,F} are single symbols, so a
// symbol is an arbitrary non-empty string without whitespace, not a character.
// Equality and ordering are O(1) on the intern id; id order is stable within
// a process but not canonical, use text_less for output ordering.
class Symbol {
 public:
  // Sentinel; using it before assignment throws on text().
  Symbol() = default;

  static Symbol intern(std::string_view token);

  const std::string& text() const;

  std::uint32_t id() const { return id_; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) {
    return a.id_ <=> b.id_;
  }

 private:
  explicit Symbol(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0xffffffffu;
};

// Canonical (text-based) comparison, used wherever byte-stable output matters.
struct SymbolTextLess {
  bool operator()(Symbol a, Symbol b) const { return a.text() < b.text(); }
};

}  // namespace nusp

template <>
struct std::hash<nusp::Symbol> {
  std::size_t operator()(nusp::Symbol s) const noexcept {
    return std::hash<std::uint32_t>{}(s.id());
  }
};
