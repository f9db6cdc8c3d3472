#include "nusp/word.hpp"

#include <cctype>
#include <sstream>

namespace nusp {

Word Word::tokens(std::string_view text) {
  std::vector<Symbol> symbols;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) symbols.push_back(Symbol::intern(text.substr(start, i - start)));
  }
  return Word(std::move(symbols));
}

Word Word::prefix(std::size_t n) const {
  return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + n));
}

Word Word::suffix_from(std::size_t i) const {
  return Word(std::vector<Symbol>(symbols_.begin() + i, symbols_.end()));
}

Word& Word::append(const Word& other) {
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  return *this;
}

SymbolSet Word::alphabet() const {
  return SymbolSet(symbols_.begin(), symbols_.end());
}

bool Word::starts_with(const Word& factor, std::size_t at) const {
  if (at + factor.size() > size()) return false;
  for (std::size_t i = 0; i < factor.size(); ++i) {
    if (symbols_[at + i] != factor[i]) return false;
  }
  return true;
}

std::vector<std::size_t> Word::occurrences(const Word& factor) const {
  std::vector<std::size_t> out;
  if (factor.size() > size()) return out;
  for (std::size_t at = 0; at + factor.size() <= size(); ++at) {
    if (starts_with(factor, at)) out.push_back(at);
  }
  return out;
}

std::string Word::str() const {
  if (symbols_.empty()) return "~";
  std::ostringstream os;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) os << ' ';
    os << symbols_[i].text();
  }
  return os.str();
}

bool WordTextLess::operator()(const Word& a, const Word& b) const {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& ta = a[i].text();
    const std::string& tb = b[i].text();
    if (ta != tb) return ta < tb;
  }
  return a.size() < b.size();
}

SymbolSet alphabet_of(const Word& w) { return w.alphabet(); }

}  // namespace nusp
