#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "axiskit/axes.hpp"

namespace axiskit {

// Signed letter sequence read off an axis. Letters index into an alphabet
// whose order is the letter order used for canonical forms.
struct AxisWord {
  bool negative = false;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }

  // '+' sorts before '-', then letters lexicographically.
  friend bool operator==(const AxisWord&, const AxisWord&) = default;
  friend auto operator<=>(const AxisWord&, const AxisWord&) = default;
};

enum class Direction { Forward, Reverse };

// Word read from the start-th transit of the axis. A reading that starts at
// an edge carries a minus sign.
AxisWord word_of(const Projection& p, const Axis& axis, int start = 0, Direction dir = Direction::Forward);

// Moves the first letter to the end, flipping the sign past an odd letter.
// Throws UnknownLetter for letters outside odd_letters.
AxisWord sigma(const AxisWord& w, const std::vector<bool>& odd_letters);
AxisWord phi(const AxisWord& w);
// Smallest member of the orbit of w under sigma and phi.
AxisWord canonical(const AxisWord& w, const std::vector<bool>& odd_letters);
// Distinct members of that orbit, in ascending order.
std::vector<AxisWord> orbit(const AxisWord& w, const std::vector<bool>& odd_letters);

// Multiset of canonical axis words. The empty system (no words, no
// letters) belongs to the crossingless unknot.
struct AxisSystem {
  std::vector<std::string> alphabet;
  std::vector<AxisWord> words;  // canonical, ascending

  bool empty() const { return words.empty(); }
  int letter_count() const { return static_cast<int>(alphabet.size()); }
  // Appearances of each letter across all words; an n-gon appears n times.
  std::vector<int> occurrences() const;
  std::vector<bool> odd_letters() const;
  int total_length() const;

  friend bool operator==(const AxisSystem&, const AxisSystem&) = default;
};

// Canonicalizes and sorts raw words; parities come from occurrence counts.
AxisSystem make_system(std::vector<std::string> alphabet, std::vector<AxisWord> words);

AxisSystem axis_system(const Projection& p);

// Word text: optional leading '-', letters concatenated, or joined with '.'
// when some letter of the alphabet is longer than one character.
std::string format_word(const AxisWord& w, const std::vector<std::string>& alphabet);
// One word per line sorted by (length, text); the empty system prints as ∅.
std::string format_system(const AxisSystem& s);
std::vector<std::string> system_strings(const AxisSystem& s);

// Letters are '.'-separated tokens, or else an uppercase letter followed by
// optional digits ("C0IC1O" reads as C0 I C1 O). Letters new to the
// alphabet are appended to it.
AxisWord parse_word(std::string_view text, std::vector<std::string>& alphabet);
// Alphabet order defaults to the sorted letter names.
AxisSystem parse_system(const std::vector<std::string>& words, std::vector<std::string> alphabet = {});

struct CeWord {
  AxisWord word;
  // markers[i] precedes letter i; markers[length] closes the word.
  std::vector<char> markers;
};

// Throws ParityClosure if a word holds an odd number of odd letters.
std::vector<CeWord> ce_representation(const AxisSystem& s);
std::string format_ce(const CeWord& w, const std::vector<std::string>& alphabet);

// Letter bijection a -> b carrying the word multiset of a onto that of b.
using LetterMap = std::vector<int>;

std::optional<LetterMap> systems_equal(const AxisSystem& a, const AxisSystem& b);
// Calls visit for every bijection until it returns false or limit is hit.
// Returns the number visited.
int for_each_letter_map(const AxisSystem& a, const AxisSystem& b, const std::function<bool(const LetterMap&)>& visit,
                        int limit = 1 << 20);

}  // namespace axiskit
