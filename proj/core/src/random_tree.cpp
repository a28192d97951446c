#include "cantorspec/random_tree.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "cantorspec/model_io.hpp"
#include "cantorspec/rng.hpp"
#include "json.hpp"

namespace cantorspec {

namespace {

std::size_t letter_from_stream(const IfsModel& model, std::uint64_t stream) {
  const double u = unit_interval(mix64(stream ^ 0xA0761D6478BD642FULL));
  double cum = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t j = 0; j < model.probs.size(); ++j) {
    if (model.probs[j] <= 0.0) continue;
    last_positive = j;
    cum += model.probs[j];
    if (u < cum) return j;
  }
  return last_positive;  // u landed in the rounding slack above the cumulative sum
}

}  // namespace

std::string format_address(std::span<const std::uint32_t> address) {
  std::string out;
  for (std::size_t k = 0; k < address.size(); ++k) {
    if (k) out += '.';
    out += std::to_string(address[k]);
  }
  return out;
}

Address parse_address(std::string_view dotted) {
  Address out;
  if (dotted.empty()) return out;
  std::size_t pos = 0;
  while (pos <= dotted.size()) {
    const std::size_t dot = std::min(dotted.find('.', pos), dotted.size());
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(dotted.data() + pos, dotted.data() + dot, v);
    if (ec != std::errc{} || ptr != dotted.data() + dot || v == 0) {
      throw std::invalid_argument("malformed address '" + std::string(dotted) + "'");
    }
    out.push_back(v);
    pos = dot + 1;
  }
  return out;
}

Address concat(const Address& head, const Address& tail) {
  Address out = head;
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

StopRule StopRule::at_depth(std::size_t n) { return {Kind::Depth, n, 0.0}; }

StopRule StopRule::resolution(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("resolution stop rule needs epsilon > 0");
  return {Kind::Resolution, 0, eps};
}

std::string StopRule::describe() const {
  std::ostringstream os;
  if (kind == Kind::Depth) {
    os << "depth:" << depth;
  } else {
    os.precision(17);
    os << "epsilon:" << epsilon;
  }
  return os.str();
}

std::size_t draw_letter(const IfsModel& model, std::uint64_t seed, std::span<const std::uint32_t> path) {
  return letter_from_stream(model, address_stream(seed, path));
}

bool RandomTree::complete_to(std::size_t n) const noexcept {
  for (const Node& node : nodes_) {
    if (node.depth < n && node.child_count == 0) return false;
  }
  return true;
}

std::optional<std::size_t> RandomTree::find(std::span<const std::uint32_t> address) const noexcept {
  std::size_t cur = 0;
  for (std::uint32_t i : address) {
    const Node& node = nodes_[cur];
    if (i == 0 || i > node.child_count) return std::nullopt;
    cur = node.first_child + (i - 1);
  }
  return cur;
}

std::size_t RandomTree::label(std::span<const std::uint32_t> address) const {
  auto node = find(address);
  if (!node) throw NotFound("address '" + format_address(address) + "' is not in the tree");
  return nodes_[*node].letter;
}

Address RandomTree::address_of(std::size_t node) const {
  Address out(nodes_.at(node).depth);
  for (std::size_t cur = node; cur != 0; cur = nodes_[cur].parent) out[nodes_[cur].depth - 1] = nodes_[cur].child_index;
  return out;
}

void RandomTree::finish() {
  depth_ = 0;
  for (const Node& n : nodes_) depth_ = std::max<std::size_t>(depth_, n.depth);
}

bool operator==(const RandomTree& x, const RandomTree& y) {
  if (x.nodes_.size() != y.nodes_.size()) return false;
  for (std::size_t k = 0; k < x.nodes_.size(); ++k) {
    const auto& a = x.nodes_[k];
    const auto& b = y.nodes_[k];
    if (a.letter != b.letter || a.depth != b.depth || a.child_count != b.child_count ||
        a.child_index != b.child_index || a.parent != b.parent || a.first_child != b.first_child) {
      return false;
    }
  }
  return true;
}

RandomTree sample_tree(std::shared_ptr<const IfsModel> model, StopRule stop, std::uint64_t seed) {
  if (!model) throw std::invalid_argument("sample_tree: null model");
  if (stop.kind == StopRule::Kind::Resolution && !(stop.epsilon > 0.0)) {
    throw std::invalid_argument("resolution stop rule needs epsilon > 0");
  }
  require_valid(*model);

  RandomTree tree;
  tree.model_ = std::move(model);
  tree.seed_ = seed;
  tree.stop_ = stop;
  const IfsModel& m = *tree.model_;

  // Per-node scratch, parallel to nodes_: address stream and geometric length.
  std::vector<std::uint64_t> streams;
  std::vector<double> lengths;

  const std::uint64_t root_stream = address_stream(seed, {});
  tree.nodes_.push_back({static_cast<std::uint32_t>(letter_from_stream(m, root_stream)), 0, 0, 0, 0, 0});
  streams.push_back(root_stream);
  lengths.push_back(m.interval.length());

  for (std::size_t cur = 0; cur < tree.nodes_.size(); ++cur) {
    const RandomTree::Node node = tree.nodes_[cur];
    const bool expand = stop.kind == StopRule::Kind::Depth ? node.depth < stop.depth : lengths[cur] >= stop.epsilon;
    if (!expand) continue;
    const Letter& letter = m.letters[node.letter];
    const auto n_children = static_cast<std::uint32_t>(letter.size());
    tree.nodes_[cur].first_child = tree.nodes_.size();
    tree.nodes_[cur].child_count = n_children;
    for (std::uint32_t i = 1; i <= n_children; ++i) {
      const std::uint64_t s = child_stream(streams[cur], i);
      tree.nodes_.push_back(
          {static_cast<std::uint32_t>(letter_from_stream(m, s)), node.depth + 1, i, 0, cur, 0});
      streams.push_back(s);
      lengths.push_back(lengths[cur] * letter.maps[i - 1].ratio);
    }
  }
  tree.finish();
  return tree;
}

RandomTree sample_tree(const IfsModel& model, StopRule stop, std::uint64_t seed) {
  return sample_tree(std::make_shared<const IfsModel>(model), stop, seed);
}

RandomTree subtree(const RandomTree& tree, std::span<const std::uint32_t> at) {
  auto start = tree.find(at);
  if (!start) throw NotFound("address '" + format_address(at) + "' is not in the tree");

  RandomTree out;
  out.model_ = tree.model_;
  out.seed_ = tree.seed_;
  out.stop_ = tree.stop_;
  out.origin_ = tree.origin_;
  out.origin_.insert(out.origin_.end(), at.begin(), at.end());

  const auto base_depth = tree.nodes_[*start].depth;
  std::vector<std::size_t> source{*start};  // source index of each copied node
  out.nodes_.push_back({tree.nodes_[*start].letter, 0, 0, 0, 0, 0});
  for (std::size_t cur = 0; cur < out.nodes_.size(); ++cur) {
    const RandomTree::Node& src = tree.nodes_[source[cur]];
    if (src.child_count == 0) continue;
    out.nodes_[cur].first_child = out.nodes_.size();
    out.nodes_[cur].child_count = src.child_count;
    for (std::uint32_t i = 0; i < src.child_count; ++i) {
      const std::size_t s = src.first_child + i;
      out.nodes_.push_back({tree.nodes_[s].letter, tree.nodes_[s].depth - base_depth, i + 1, 0, cur, 0});
      source.push_back(s);
    }
  }
  out.finish();
  return out;
}

std::vector<Address> generation(const RandomTree& tree, std::size_t n) {
  std::vector<Address> out;
  const auto nodes = tree.nodes();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k].depth == n) out.push_back(tree.address_of(k));
  }
  return out;
}

std::string dump_tree(const RandomTree& tree) {
  nlohmann::json doc;
  doc["seed"] = tree.seed();
  doc["stop"] = tree.stop().describe();
  doc["origin"] = format_address(tree.origin());
  doc["nodes"] = nlohmann::json::array();
  for (std::size_t k = 0; k < tree.size(); ++k) {
    doc["nodes"].push_back({format_address(tree.address_of(k)), tree.letter_of(k).id});
  }
  return doc.dump(1);
}

RandomTree load_tree(std::string_view text, std::shared_ptr<const IfsModel> model) {
  if (!model) throw std::invalid_argument("load_tree: null model");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("tree dump is not valid JSON: ") + e.what());
  }
  const auto& nodes = doc.at("nodes");

  std::map<Address, std::size_t> labels;
  for (const auto& entry : nodes) {
    Address addr = parse_address(entry.at(0).get<std::string>());
    const std::size_t letter = model->letter_index(entry.at(1).get<std::string>());
    if (!labels.emplace(std::move(addr), letter).second) throw std::invalid_argument("duplicate address in tree dump");
  }
  if (!labels.count(Address{})) throw std::invalid_argument("tree dump has no root");

  RandomTree tree;
  tree.model_ = std::move(model);
  tree.seed_ = doc.value("seed", std::uint64_t{0});
  tree.origin_ = parse_address(doc.value("origin", std::string{}));
  const std::string stop = doc.value("stop", std::string{"depth:0"});
  if (stop.rfind("epsilon:", 0) == 0) {
    tree.stop_ = StopRule::resolution(parse_real(stop.substr(8)));
  } else if (stop.rfind("depth:", 0) == 0) {
    tree.stop_ = StopRule::at_depth(std::stoul(stop.substr(6)));
  } else {
    throw std::invalid_argument("unknown stop rule '" + stop + "'");
  }

  std::vector<Address> addrs{Address{}};
  tree.nodes_.push_back({static_cast<std::uint32_t>(labels.at(Address{})), 0, 0, 0, 0, 0});
  std::size_t seen = 1;
  for (std::size_t cur = 0; cur < tree.nodes_.size(); ++cur) {
    const Letter& letter = tree.model_->letters[tree.nodes_[cur].letter];
    Address child = addrs[cur];
    child.push_back(1);
    if (!labels.count(child)) continue;
    const auto n = static_cast<std::uint32_t>(letter.size());
    tree.nodes_[cur].first_child = tree.nodes_.size();
    tree.nodes_[cur].child_count = n;
    for (std::uint32_t i = 1; i <= n; ++i) {
      child.back() = i;
      auto it = labels.find(child);
      if (it == labels.end()) {
        throw std::invalid_argument("tree dump: node '" + format_address(addrs[cur]) + "' has incomplete children");
      }
      tree.nodes_.push_back(
          {static_cast<std::uint32_t>(it->second), tree.nodes_[cur].depth + 1, i, 0, cur, 0});
      addrs.push_back(child);
      ++seen;
    }
  }
  if (seen != labels.size()) throw std::invalid_argument("tree dump contains unreachable addresses");
  tree.finish();
  return tree;
}

}  // namespace cantorspec
