#include "cantorspec/ifs_model.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace cantorspec {

namespace {

std::string map_label(const char* what, std::size_t i, const char* point) {
  std::ostringstream os;
  os << "S_" << i << "(" << point << ")" << what;
  return os.str();
}

std::string join_messages(const std::vector<Violation>& vs) {
  std::string out = "invalid model:";
  for (const auto& v : vs) out += "\n  " + to_string(v);
  return out;
}

}  // namespace

std::size_t IfsModel::letter_index(const std::string& id) const {
  for (std::size_t j = 0; j < letters.size(); ++j) {
    if (letters[j].id == id) return j;
  }
  throw std::out_of_range("unknown letter id '" + id + "'");
}

std::string to_string(const Violation& v) {
  std::string out;
  if (!v.letter.empty()) out += "letter '" + v.letter + "'";
  if (v.map) out += (out.empty() ? "" : ", ") + std::string("map ") + std::to_string(*v.map);
  if (!out.empty()) out += ": ";
  return out + v.message;
}

std::vector<Violation> validate_letter(const Letter& letter, Interval interval, double tolerance) {
  std::vector<Violation> out;
  auto add = [&](std::optional<std::size_t> map, std::string msg) {
    out.push_back({letter.id, map, std::move(msg)});
  };

  const std::size_t n = letter.maps.size();
  if (n < 2) add(std::nullopt, "needs at least 2 maps, has " + std::to_string(n));
  if (letter.weights.size() != n) {
    add(std::nullopt, "weights length " + std::to_string(letter.weights.size()) + " ≠ number of maps " +
                          std::to_string(n));
  }

  for (std::size_t i = 0; i < letter.weights.size(); ++i) {
    const double w = letter.weights[i];
    if (!(w > 0.0 && w < 1.0)) add(i + 1, "weight outside (0,1)");
  }
  const double wsum = std::accumulate(letter.weights.begin(), letter.weights.end(), 0.0);
  if (!letter.weights.empty() && std::abs(wsum - 1.0) > tolerance) add(std::nullopt, "weights sum ≠ 1");

  const double a = interval.a;
  const double b = interval.b;
  const double geom_tol = tolerance * std::max(1.0, std::abs(b - a));
  bool ratios_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = letter.maps[i];
    if (!(s.ratio > 0.0 && s.ratio < 1.0)) {
      add(i + 1, "ratio outside (0,1)");
      ratios_ok = false;
      continue;
    }
    if (s(a) < a - geom_tol || s(b) > b + geom_tol) add(i + 1, "S_" + std::to_string(i + 1) + " does not map [a,b] into [a,b]");
  }
  if (n == 0 || !ratios_ok) return out;

  if (std::abs(letter.maps.front()(a) - a) > geom_tol) add(1, map_label(" ≠ a", 1, "a"));
  if (std::abs(letter.maps.back()(b) - b) > geom_tol) add(n, map_label(" ≠ b", n, "b"));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double right = letter.maps[i](b);
    const double next_left = letter.maps[i + 1](a);
    if (right > next_left + geom_tol) {
      add(i + 1, "overlap " + map_label("", i + 1, "b") + " > " + map_label("", i + 2, "a"));
    }
  }
  return out;
}

std::vector<Violation> validate_model(const IfsModel& model) {
  std::vector<Violation> out;
  const Interval iv = model.interval;
  if (!(iv.a < iv.b) || !std::isfinite(iv.a) || !std::isfinite(iv.b)) {
    out.push_back({"", std::nullopt, "interval requires a < b"});
  }
  if (!(model.tolerance >= 0.0)) out.push_back({"", std::nullopt, "tolerance must be non-negative"});
  if (model.letters.empty()) out.push_back({"", std::nullopt, "alphabet is empty"});
  if (model.probs.size() != model.letters.size()) {
    out.push_back({"", std::nullopt, "probs length " + std::to_string(model.probs.size()) + " ≠ number of letters " +
                                         std::to_string(model.letters.size())});
  }

  bool any_positive = false;
  for (std::size_t j = 0; j < model.probs.size(); ++j) {
    const double p = model.probs[j];
    const std::string id = j < model.letters.size() ? model.letters[j].id : std::string{};
    if (!(p >= 0.0 && p <= 1.0)) out.push_back({id, std::nullopt, "probability outside [0,1]"});
    if (p > 0.0) any_positive = true;
  }
  const double psum = std::accumulate(model.probs.begin(), model.probs.end(), 0.0);
  if (!model.probs.empty() && std::abs(psum - 1.0) > model.tolerance) {
    out.push_back({"", std::nullopt, "probabilities sum ≠ 1"});
  }
  if (!model.probs.empty() && !any_positive) out.push_back({"", std::nullopt, "no letter has positive probability"});

  for (std::size_t j = 0; j < model.letters.size(); ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      if (model.letters[j].id == model.letters[k].id) {
        out.push_back({model.letters[j].id, std::nullopt, "duplicate letter id"});
      }
    }
  }

  if (iv.a < iv.b) {
    for (const auto& letter : model.letters) {
      auto vs = validate_letter(letter, iv, model.tolerance);
      out.insert(out.end(), vs.begin(), vs.end());
    }
  }
  return out;
}

InvalidModel::InvalidModel(std::vector<Violation> violations)
    : std::invalid_argument(join_messages(violations)), violations_(std::move(violations)) {}

void require_valid(const IfsModel& model) {
  auto vs = validate_model(model);
  if (!vs.empty()) throw InvalidModel(std::move(vs));
}

std::vector<double> contraction_products(const Letter& letter) {
  std::vector<double> out(letter.maps.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = letter.maps[i].ratio * letter.weights.at(i);
  return out;
}

std::vector<std::size_t> support(const IfsModel& model) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < model.probs.size(); ++j) {
    if (model.probs[j] > 0.0) out.push_back(j);
  }
  return out;
}

}  // namespace cantorspec
