#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "axiskit/error.hpp"
#include "axiskit/projection.hpp"
#include "json.hpp"

namespace axiskit {

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  std::vector<std::array<long, 4>> records() {
    std::vector<std::array<long, 4>> out;
    skip();
    bool wrapped = false;
    if (peek_word("PD")) {
      pos_ += 2;
      skip();
      expect('[');
      wrapped = true;
    }
    while (true) {
      skip();
      if (at_end() || (wrapped && text_[pos_] == ']')) break;
      out.push_back(record());
    }
    if (wrapped) {
      expect(']');
      skip();
      if (!at_end()) fail("trailing text after PD[...]");
    }
    if (out.empty()) fail("no crossing records");
    return out;
  }

 private:
  std::array<long, 4> record() {
    const int record_line = line_;
    if (text_[pos_] != 'X') fail("expected X[...] record");
    ++pos_;
    skip_blank();
    expect('[');
    std::vector<long> labels;
    while (true) {
      skip_blank();
      labels.push_back(number());
      skip_blank();
      if (at_end()) fail("unterminated record");
      if (text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (text_[pos_] == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']'");
    }
    if (labels.size() != 4) {
      throw Error(ErrorCode::NotFourValent, "record has " + std::to_string(labels.size()) + " labels", record_line);
    }
    return {labels[0], labels[1], labels[2], labels[3]};
  }

  long number() {
    const size_t begin = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (begin == pos_) fail("expected a positive integer label");
    const long value = std::stol(std::string(text_.substr(begin, pos_ - begin)));
    if (value <= 0) fail("labels must be positive");
    return value;
  }

  // Whitespace, commas and comments between records.
  void skip() {
    while (!at_end()) {
      const char ch = text_[pos_];
      if (ch == '#') {
        while (!at_end() && text_[pos_] != '\n') ++pos_;
      } else if (ch == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void skip_blank() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  bool peek_word(std::string_view word) const { return text_.substr(pos_, word.size()) == word; }

  void expect(char ch) {
    if (at_end() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::MalformedRecord, message + " (line " + std::to_string(line_) + ")", line_);
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

Projection parse_pd(std::string_view text) {
  const auto records = PdScanner(text).records();
  std::map<long, std::vector<int>> darts_by_label;
  for (size_t i = 0; i < records.size(); ++i) {
    for (int s = 0; s < 4; ++s) darts_by_label[records[i][s]].push_back(static_cast<int>(4 * i + s));
  }
  std::vector<int> mate(4 * records.size(), -1);
  for (const auto& [label, darts] : darts_by_label) {
    if (darts.size() != 2) {
      throw Error(ErrorCode::LabelCountError,
                  "label " + std::to_string(label) + " appears " + std::to_string(darts.size()) + " times");
    }
    mate[darts[0]] = darts[1];
    mate[darts[1]] = darts[0];
  }
  return Projection(std::move(mate));
}

std::string emit_pd(const Projection& p) {
  if (p.is_unknot()) return "\n";
  std::vector<std::array<int, 4>> records(p.crossing_count());
  for (int d = 0; d < p.dart_count(); ++d) records[crossing_of(d)][slot_of(d)] = p.edge_of_dart(d) + 1;
  std::ostringstream out;
  for (size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    out << (i ? " " : "") << "X[" << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << ']';
  }
  out << '\n';
  return out.str();
}

Projection parse_map(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedRecord, e.what());
  }
  if (!doc.is_object() || !doc.contains("crossings") || !doc["crossings"].is_array()) {
    throw Error(ErrorCode::MalformedRecord, "document needs a 'crossings' array");
  }
  const auto& crossings = doc["crossings"];
  const nlohmann::json pairing = doc.contains("pairing") ? doc["pairing"] : nlohmann::json::array();
  if (!pairing.is_array()) throw Error(ErrorCode::MalformedRecord, "'pairing' must be an array");
  if (crossings.empty()) {
    if (!pairing.empty()) throw Error(ErrorCode::PairingNotInvolution, "pairing without crossings");
    return Projection::unknot();
  }

  std::unordered_map<long long, int> internal;
  for (size_t i = 0; i < crossings.size(); ++i) {
    const auto& rot = crossings[i];
    if (!rot.is_array()) throw Error(ErrorCode::MalformedRecord, "crossing " + std::to_string(i) + " is not a list");
    if (rot.size() != 4) {
      throw Error(ErrorCode::NotFourValent, "crossing " + std::to_string(i) + " has " + std::to_string(rot.size()) + " darts");
    }
    for (int s = 0; s < 4; ++s) {
      if (!rot[s].is_number_integer()) throw Error(ErrorCode::MalformedRecord, "dart ids must be integers");
      if (!internal.emplace(rot[s].get<long long>(), static_cast<int>(4 * i + s)).second) {
        throw Error(ErrorCode::MalformedRecord, "dart " + rot[s].dump() + " listed twice");
      }
    }
  }

  std::vector<int> mate(4 * crossings.size(), -1);
  for (const auto& pair : pairing) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      throw Error(ErrorCode::MalformedRecord, "pairing entries must be [a, b]");
    }
    const auto a = internal.find(pair[0].get<long long>());
    const auto b = internal.find(pair[1].get<long long>());
    if (a == internal.end() || b == internal.end()) {
      throw Error(ErrorCode::PairingNotInvolution, "pairing " + pair.dump() + " names an unknown dart");
    }
    if (a->second == b->second) throw Error(ErrorCode::PairingNotInvolution, "pairing " + pair.dump() + " is a fixed point");
    if (mate[a->second] >= 0 || mate[b->second] >= 0) {
      throw Error(ErrorCode::PairingNotInvolution, "pairing " + pair.dump() + " reuses a dart");
    }
    mate[a->second] = b->second;
    mate[b->second] = a->second;
  }
  if (std::find(mate.begin(), mate.end(), -1) != mate.end()) {
    throw Error(ErrorCode::PairingNotInvolution, "some dart is unpaired");
  }
  return Projection(std::move(mate));
}

std::string emit_map(const Projection& p) {
  nlohmann::ordered_json doc;
  doc["crossings"] = nlohmann::json::array();
  doc["pairing"] = nlohmann::json::array();
  for (int v = 0; v < p.crossing_count(); ++v) doc["crossings"].push_back({4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3});
  for (int d = 0; d < p.dart_count(); ++d) {
    if (d < p.mate(d)) doc["pairing"].push_back({d, p.mate(d)});
  }
  return doc.dump() + "\n";
}

Projection load_projection(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedRecord, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return json ? parse_map(buffer.str()) : parse_pd(buffer.str());
}

}  // namespace axiskit
