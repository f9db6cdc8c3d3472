#include "nusp/symbol.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace nusp {
namespace {

struct Interner {
  std::mutex mutex;
  std::deque<std::string> texts;  // deque: element addresses are stable
  std::unordered_map<std::string_view, std::uint32_t> ids;
};

Interner& interner() {
  static Interner instance;
  return instance;
}

}  // namespace

Symbol Symbol::intern(std::string_view token) {
  if (token.empty()) {
    throw std::invalid_argument("symbol token must be non-empty");
  }
  for (unsigned char c : token) {
    if (std::isspace(c)) {
      throw std::invalid_argument("symbol token must not contain whitespace: '" +
                                  std::string(token) + "'");
    }
  }
  Interner& in = interner();
  std::lock_guard<std::mutex> lock(in.mutex);
  if (auto it = in.ids.find(token); it != in.ids.end()) {
    return Symbol(it->second);
  }
  auto id = static_cast<std::uint32_t>(in.texts.size());
  in.texts.emplace_back(token);
  in.ids.emplace(in.texts.back(), id);
  return Symbol(id);
}

const std::string& Symbol::text() const {
  Interner& in = interner();
  std::lock_guard<std::mutex> lock(in.mutex);
  return in.texts.at(id_);
}

}  // namespace nusp
