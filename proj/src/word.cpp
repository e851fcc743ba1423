#include "kleinian/word.hpp"

#include <cstdlib>

namespace kleinian {

Word::Word(std::initializer_list<Letter> letters) {
  for (const auto& l : letters) push(l);
}

Word Word::gen(char symbol, int power) {
  Word w;
  w.push({symbol, power});
  return w;
}

Word Word::commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

long Word::length() const noexcept {
  long n = 0;
  for (const auto& l : letters_) n += std::labs(l.power);
  return n;
}

void Word::push(Letter l) {
  if (l.power == 0) return;
  if (!letters_.empty() && letters_.back().symbol == l.symbol) {
    letters_.back().power += l.power;
    if (letters_.back().power == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

Word Word::operator*(const Word& o) const {
  Word w = *this;
  w *= o;
  return w;
}

Word& Word::operator*=(const Word& o) {
  for (const auto& l : o.letters_) push(l);
  return *this;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.push({it->symbol, -it->power});
  }
  return w;
}

Word Word::pow(long k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word w;
  for (long i = 0; i < std::labs(k); ++i) w *= base;
  return w;
}

Word Word::substitute(const std::map<char, Word>& images) const {
  Word w;
  for (const auto& l : letters_) {
    auto it = images.find(l.symbol);
    if (it == images.end()) {
      w.push(l);
    } else {
      w *= it->second.pow(l.power);
    }
  }
  return w;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const auto& l : letters_) {
    s += l.symbol;
    if (l.power != 1) s += "^" + std::to_string(l.power);
  }
  return s;
}

bool Word::is_freely_reduced() const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].power == 0) return false;
    if (i > 0 && letters_[i].symbol == letters_[i - 1].symbol) return false;
  }
  return true;
}

}  // namespace kleinian
