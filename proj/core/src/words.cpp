#include "axiskit/words.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "axiskit/error.hpp"

namespace axiskit {

AxisWord word_of(const Projection& p, const Axis& axis, int start, Direction dir) {
  const int len = axis.length();
  AxisWord w;
  w.negative = axis.transits[start].is_edge();
  w.letters.reserve(len);
  for (int i = 0; i < len; ++i) {
    const int index = dir == Direction::Forward ? (start + i) % len : ((start - 1 - i) % len + len) % len;
    w.letters.push_back(p.face_of(axis.transits[index].arrival));
  }
  return w;
}

AxisWord sigma(const AxisWord& w, const std::vector<bool>& odd_letters) {
  if (w.letters.empty()) return w;
  const int first = w.letters.front();
  if (first < 0 || first >= static_cast<int>(odd_letters.size())) {
    throw Error(ErrorCode::UnknownLetter, "letter " + std::to_string(first) + " has no parity");
  }
  AxisWord out;
  out.negative = odd_letters[first] ? !w.negative : w.negative;
  out.letters.assign(w.letters.begin() + 1, w.letters.end());
  out.letters.push_back(first);
  return out;
}

AxisWord phi(const AxisWord& w) {
  AxisWord out = w;
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

std::vector<AxisWord> orbit(const AxisWord& w, const std::vector<bool>& odd_letters) {
  std::set<AxisWord> seen;
  for (const AxisWord& base : {w, phi(w)}) {
    AxisWord cur = base;
    // Twice the length covers the sign period even for words that break
    // the even-odd-letter rule.
    for (int i = 0; i < 2 * std::max(1, w.length()); ++i) {
      seen.insert(cur);
      cur = sigma(cur, odd_letters);
    }
  }
  return {seen.begin(), seen.end()};
}

AxisWord canonical(const AxisWord& w, const std::vector<bool>& odd_letters) {
  return orbit(w, odd_letters).front();
}

std::vector<int> AxisSystem::occurrences() const {
  std::vector<int> out(alphabet.size(), 0);
  for (const auto& w : words) {
    for (int l : w.letters) ++out[l];
  }
  return out;
}

std::vector<bool> AxisSystem::odd_letters() const {
  const auto occ = occurrences();
  std::vector<bool> out(occ.size());
  for (size_t i = 0; i < occ.size(); ++i) out[i] = occ[i] % 2 == 1;
  return out;
}

int AxisSystem::total_length() const {
  int sum = 0;
  for (const auto& w : words) sum += w.length();
  return sum;
}

AxisSystem make_system(std::vector<std::string> alphabet, std::vector<AxisWord> words) {
  AxisSystem s;
  s.alphabet = std::move(alphabet);
  for (const auto& w : words) {
    for (int l : w.letters) {
      if (l < 0 || l >= s.letter_count()) throw Error(ErrorCode::UnknownLetter, "letter index " + std::to_string(l));
    }
  }
  s.words = std::move(words);
  const auto odd = s.odd_letters();
  for (auto& w : s.words) w = canonical(w, odd);
  std::sort(s.words.begin(), s.words.end());
  return s;
}

AxisSystem axis_system(const Projection& p) {
  if (p.is_unknot()) return AxisSystem{};
  std::vector<AxisWord> words;
  for (const Axis& a : trace_axes(p)) words.push_back(word_of(p, a));
  return make_system(p.labels(), std::move(words));
}

namespace {

bool dotted(const std::vector<std::string>& alphabet) {
  return std::any_of(alphabet.begin(), alphabet.end(), [](const std::string& l) { return l.size() > 1; });
}

}  // namespace

std::string format_word(const AxisWord& w, const std::vector<std::string>& alphabet) {
  const bool dots = dotted(alphabet);
  std::string out = w.negative ? "-" : "";
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (dots && i > 0) out += '.';
    out += alphabet.at(w.letters[i]);
  }
  return out;
}

std::vector<std::string> system_strings(const AxisSystem& s) {
  std::vector<std::pair<int, std::string>> lines;
  for (const auto& w : s.words) lines.emplace_back(w.length(), format_word(w, s.alphabet));
  std::sort(lines.begin(), lines.end());
  std::vector<std::string> out;
  for (auto& line : lines) out.push_back(std::move(line.second));
  return out;
}

std::string format_system(const AxisSystem& s) {
  if (s.empty()) return "∅\n";
  std::string out;
  for (const auto& line : system_strings(s)) out += line + "\n";
  return out;
}

AxisWord parse_word(std::string_view text, std::vector<std::string>& alphabet) {
  AxisWord w;
  size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    w.negative = text[pos] == '-';
    ++pos;
  }
  std::vector<std::string> tokens;
  const std::string_view body = text.substr(pos);
  if (body.find('.') != std::string_view::npos) {
    size_t begin = 0;
    while (begin <= body.size()) {
      const size_t end = std::min(body.find('.', begin), body.size());
      tokens.emplace_back(body.substr(begin, end - begin));
      begin = end + 1;
    }
  } else {
    size_t i = 0;
    while (i < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[i]))) {
        ++i;
        continue;
      }
      size_t end = i + 1;
      while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
      tokens.emplace_back(body.substr(i, end - i));
      i = end;
    }
  }
  for (const auto& token : tokens) {
    if (token.empty() || !std::isupper(static_cast<unsigned char>(token[0]))) {
      throw Error(ErrorCode::UnknownLetter, "bad letter '" + token + "' in word '" + std::string(text) + "'");
    }
    auto it = std::find(alphabet.begin(), alphabet.end(), token);
    if (it == alphabet.end()) {
      alphabet.push_back(token);
      it = alphabet.end() - 1;
    }
    w.letters.push_back(static_cast<int>(it - alphabet.begin()));
  }
  return w;
}

AxisSystem parse_system(const std::vector<std::string>& words, std::vector<std::string> alphabet) {
  const bool fixed_order = !alphabet.empty();
  std::vector<std::string> seen = alphabet;
  std::vector<AxisWord> parsed;
  for (const auto& text : words) parsed.push_back(parse_word(text, seen));
  if (fixed_order && seen.size() != alphabet.size()) {
    throw Error(ErrorCode::UnknownLetter, "word uses a letter outside the given alphabet");
  }
  if (!fixed_order) {
    alphabet = seen;
    std::sort(alphabet.begin(), alphabet.end());
    std::vector<int> remap(seen.size());
    for (size_t i = 0; i < seen.size(); ++i) {
      remap[i] = static_cast<int>(std::find(alphabet.begin(), alphabet.end(), seen[i]) - alphabet.begin());
    }
    for (auto& w : parsed) {
      for (int& l : w.letters) l = remap[l];
    }
  }
  return make_system(std::move(alphabet), std::move(parsed));
}

std::vector<CeWord> ce_representation(const AxisSystem& s) {
  const auto odd = s.odd_letters();
  std::vector<CeWord> out;
  for (const auto& w : s.words) {
    CeWord ce{w, {}};
    char marker = w.negative ? 'e' : 'c';
    ce.markers.push_back(marker);
    for (int l : w.letters) {
      if (odd[l]) marker = marker == 'c' ? 'e' : 'c';
      ce.markers.push_back(marker);
    }
    if (ce.markers.back() != ce.markers.front()) {
      throw Error(ErrorCode::ParityClosure, "word " + format_word(w, s.alphabet) + " has an odd number of odd letters");
    }
    out.push_back(std::move(ce));
  }
  return out;
}

std::string format_ce(const CeWord& w, const std::vector<std::string>& alphabet) {
  std::string out = w.word.negative ? "-" : "";
  for (size_t i = 0; i < w.word.letters.size(); ++i) {
    out += w.markers[i];
    out += alphabet.at(w.word.letters[i]);
  }
  out += w.markers.back();
  return out;
}

namespace {

// Backtracking over word-to-class assignments. Classes are the distinct
// canonical words of b, so repeated words never multiply the branching.
class Matcher {
 public:
  Matcher(const AxisSystem& a, const AxisSystem& b, const std::function<bool(const LetterMap&)>& visit, int limit)
      : a_(a), visit_(visit), limit_(limit), occ_a_(a.occurrences()), occ_b_(b.occurrences()) {
    const auto odd_b = b.odd_letters();
    for (const auto& w : b.words) {
      if (!classes_.empty() && classes_.back().front() == w) {
        ++remaining_.back();
        continue;
      }
      classes_.push_back(orbit(w, odd_b));
      remaining_.push_back(1);
    }
    forward_.assign(a.alphabet.size(), -1);
    backward_.assign(b.alphabet.size(), -1);
    done_.assign(a.words.size(), false);
  }

  int run() {
    search(0);
    return found_;
  }

 private:
  bool search(size_t matched) {
    if (matched == a_.words.size()) {
      ++found_;
      return visit_(forward_) && found_ < limit_;
    }
    const size_t next = pick();
    const AxisWord& w = a_.words[next];
    done_[next] = true;
    for (size_t c = 0; c < classes_.size(); ++c) {
      if (remaining_[c] == 0 || classes_[c].front().length() != w.length()) continue;
      for (const AxisWord& v : classes_[c]) {
        if (v.negative != w.negative) continue;
        std::vector<int> assigned;
        if (!extend(w, v, assigned)) {
          undo(assigned);
          continue;
        }
        --remaining_[c];
        const bool more = search(matched + 1);
        ++remaining_[c];
        undo(assigned);
        if (!more) {
          done_[next] = false;
          return false;
        }
      }
    }
    done_[next] = false;
    return true;
  }

  // Unmatched word with the most letters already mapped, longest first.
  size_t pick() const {
    size_t best = a_.words.size();
    int best_mapped = -1;
    int best_len = -1;
    for (size_t i = 0; i < a_.words.size(); ++i) {
      if (done_[i]) continue;
      int mapped = 0;
      for (int l : a_.words[i].letters) mapped += forward_[l] >= 0 ? 1 : 0;
      const int len = a_.words[i].length();
      if (mapped > best_mapped || (mapped == best_mapped && len > best_len)) {
        best = i;
        best_mapped = mapped;
        best_len = len;
      }
    }
    return best;
  }

  bool extend(const AxisWord& w, const AxisWord& v, std::vector<int>& assigned) {
    for (int i = 0; i < w.length(); ++i) {
      const int x = w.letters[i];
      const int y = v.letters[i];
      if (forward_[x] == y) continue;
      if (forward_[x] >= 0 || backward_[y] >= 0 || occ_a_[x] != occ_b_[y]) return false;
      forward_[x] = y;
      backward_[y] = x;
      assigned.push_back(x);
    }
    return true;
  }

  void undo(const std::vector<int>& assigned) {
    for (int x : assigned) {
      backward_[forward_[x]] = -1;
      forward_[x] = -1;
    }
  }

  const AxisSystem& a_;
  const std::function<bool(const LetterMap&)>& visit_;
  int limit_;
  int found_ = 0;
  std::vector<int> occ_a_;
  std::vector<int> occ_b_;
  std::vector<std::vector<AxisWord>> classes_;
  std::vector<int> remaining_;
  std::vector<int> forward_;
  std::vector<int> backward_;
  std::vector<bool> done_;
};

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

int for_each_letter_map(const AxisSystem& a, const AxisSystem& b, const std::function<bool(const LetterMap&)>& visit,
                        int limit) {
  if (a.words.size() != b.words.size() || a.alphabet.size() != b.alphabet.size()) return 0;
  std::vector<int> len_a;
  std::vector<int> len_b;
  for (const auto& w : a.words) len_a.push_back(w.length());
  for (const auto& w : b.words) len_b.push_back(w.length());
  if (sorted(len_a) != sorted(len_b) || sorted(a.occurrences()) != sorted(b.occurrences())) return 0;
  if (a.empty()) {
    visit(LetterMap(a.alphabet.size(), -1));
    return 1;
  }
  return Matcher(a, b, visit, limit).run();
}

std::optional<LetterMap> systems_equal(const AxisSystem& a, const AxisSystem& b) {
  std::optional<LetterMap> out;
  for_each_letter_map(a, b, [&](const LetterMap& m) {
    out = m;
    return false;
  });
  return out;
}

}  // namespace axiskit
