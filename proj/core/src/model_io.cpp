#include "cantorspec/model_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cantorspec {

namespace {

using nlohmann::json;

double to_real(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return parse_real(v.get<std::string>());
    } catch (const std::exception& e) {
      throw ModelFormatError(where + ": " + e.what());
    }
  }
  throw ModelFormatError(where + ": expected a number or a numeric string");
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ModelFormatError(where + ": missing key '" + key + "'");
  return *it;
}

}  // namespace

double parse_real(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_plain = [](std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    }
    return v;
  };
  text = trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const double num = parse_plain(trim(text.substr(0, slash)));
    const double den = parse_plain(trim(text.substr(slash + 1)));
    if (den == 0.0) throw std::invalid_argument("zero denominator");
    return num / den;
  }
  return parse_plain(text);
}

IfsModel parse_model(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ModelFormatError(std::string("model is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ModelFormatError("model: top level must be an object");

  IfsModel model;
  const json& iv = field(doc, "interval", "model");
  if (!iv.is_array() || iv.size() != 2) throw ModelFormatError("interval: expected [a, b]");
  model.interval = {to_real(iv[0], "interval[0]"), to_real(iv[1], "interval[1]")};
  if (auto it = doc.find("tolerance"); it != doc.end()) model.tolerance = to_real(*it, "tolerance");

  const json& letters = field(doc, "letters", "model");
  if (!letters.is_array()) throw ModelFormatError("letters: expected an array");
  for (std::size_t j = 0; j < letters.size(); ++j) {
    const json& lj = letters[j];
    const std::string where = "letters[" + std::to_string(j) + "]";
    if (!lj.is_object()) throw ModelFormatError(where + ": expected an object");
    Letter letter;
    const json& id = field(lj, "id", where);
    if (!id.is_string()) throw ModelFormatError(where + ".id: expected a string");
    letter.id = id.get<std::string>();
    const double prob = to_real(field(lj, "prob", where), where + ".prob");

    const json& maps = field(lj, "maps", where);
    if (!maps.is_array()) throw ModelFormatError(where + ".maps: expected an array");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const std::string mw = where + ".maps[" + std::to_string(i) + "]";
      if (!maps[i].is_object()) throw ModelFormatError(mw + ": expected an object");
      letter.maps.push_back({to_real(field(maps[i], "r", mw), mw + ".r"), to_real(field(maps[i], "c", mw), mw + ".c")});
    }
    const json& weights = field(lj, "weights", where);
    if (!weights.is_array()) throw ModelFormatError(where + ".weights: expected an array");
    for (std::size_t i = 0; i < weights.size(); ++i) {
      letter.weights.push_back(to_real(weights[i], where + ".weights[" + std::to_string(i) + "]"));
    }
    model.letters.push_back(std::move(letter));
    model.probs.push_back(prob);
  }
  return model;
}

IfsModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelFormatError("cannot open model file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

std::string dump_model(const IfsModel& model) {
  json doc;
  doc["interval"] = {model.interval.a, model.interval.b};
  doc["tolerance"] = model.tolerance;
  doc["letters"] = json::array();
  for (std::size_t j = 0; j < model.letters.size(); ++j) {
    const Letter& l = model.letters[j];
    json lj;
    lj["id"] = l.id;
    lj["prob"] = j < model.probs.size() ? model.probs[j] : 0.0;
    lj["maps"] = json::array();
    for (const auto& m : l.maps) lj["maps"].push_back({{"r", m.ratio}, {"c", m.offset}});
    lj["weights"] = l.weights;
    doc["letters"].push_back(std::move(lj));
  }
  return doc.dump(2);
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace cantorspec
