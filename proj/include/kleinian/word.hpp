#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace kleinian {

struct Letter {
  char symbol;
  int power;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word: adjacent letters always differ, powers never zero.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);

  static Word gen(char symbol, int power = 1);
  /// [a,b] = a b a⁻¹ b⁻¹.
  static Word commutator(const Word& a, const Word& b);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  /// Sum of |power| over letters.
  long length() const noexcept;

  Word operator*(const Word& o) const;
  Word& operator*=(const Word& o);
  Word inverse() const;
  Word pow(long k) const;

  /// Replaces every symbol found in `images` by its word.
  Word substitute(const std::map<char, Word>& images) const;

  /// "xz^-1y^-1zy"; the empty word is "1".
  std::string to_string() const;

  bool is_freely_reduced() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(Letter l);

  std::vector<Letter> letters_;
};

}  // namespace kleinian
