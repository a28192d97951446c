#pragma once

#include <memory>
#include <string>

#include "cantorspec/ifs_model.hpp"
#include "cantorspec/model_io.hpp"

namespace fx {

inline std::string model_path(const std::string& name) { return std::string(CANTORSPEC_MODELS_DIR) + "/" + name; }
inline std::string data_path(const std::string& name) { return std::string(CANTORSPEC_TEST_DATA_DIR) + "/" + name; }

inline cantorspec::Letter middle_third() {
  return {"third", {{1.0 / 3, 0.0}, {1.0 / 3, 2.0 / 3}}, {0.5, 0.5}};
}

inline cantorspec::Letter fifth() {
  return {"fifth", {{0.2, 0.0}, {0.2, 0.4}, {0.2, 0.8}}, {1.0 / 3, 1.0 / 3, 1.0 - 2.0 / 3}};
}

inline cantorspec::Letter halves() { return {"halves", {{0.5, 0.0}, {0.5, 0.5}}, {0.5, 0.5}}; }

inline cantorspec::IfsModel single(cantorspec::Letter letter) {
  cantorspec::IfsModel m;
  m.letters = {std::move(letter)};
  m.probs = {1.0};
  return m;
}

inline cantorspec::IfsModel third_fifth() {
  cantorspec::IfsModel m;
  m.letters = {middle_third(), fifth()};
  m.probs = {0.6, 0.4};
  return m;
}

inline std::shared_ptr<const cantorspec::IfsModel> shared(cantorspec::IfsModel m) {
  return std::make_shared<const cantorspec::IfsModel>(std::move(m));
}

}  // namespace fx
