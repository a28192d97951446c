#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cantorspec/ifs_model.hpp"

namespace cantorspec {

/// Path (i_1, ..., i_n) of 1-based child indices; empty is the root.
using Address = std::vector<std::uint32_t>;

/// Dotted form "1.2.1"; the root is the empty string.
std::string format_address(std::span<const std::uint32_t> address);
Address parse_address(std::string_view dotted);
Address concat(const Address& head, const Address& tail);

struct StopRule {
  enum class Kind { Depth, Resolution };

  Kind kind = Kind::Depth;
  std::size_t depth = 0;
  double epsilon = 0.0;

  /// Complete generations 0..n.
  static StopRule at_depth(std::size_t n);
  /// Expand a node while its interval length (b-a) * prod(r) is >= eps.
  static StopRule resolution(double eps);

  std::string describe() const;
};

class NotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Label of the node at `path`: an i.i.d. draw from model.probs, taken from the
/// private stream of that address.
std::size_t draw_letter(const IfsModel& model, std::uint64_t seed, std::span<const std::uint32_t> path);

/// Finite labelled tree, materialized eagerly and immutable after construction.
/// Nodes are stored breadth-first; the children of a node are contiguous and in
/// index order, so each generation appears in lexicographic order.
class RandomTree {
 public:
  struct Node {
    std::uint32_t letter = 0;       // index into model().letters
    std::uint32_t depth = 0;
    std::uint32_t child_index = 0;  // 1-based position under the parent; 0 at the root
    std::uint32_t child_count = 0;  // 0 for leaves, else N of the letter
    std::size_t parent = 0;
    std::size_t first_child = 0;
  };

  const IfsModel& model() const noexcept { return *model_; }
  const std::shared_ptr<const IfsModel>& model_ptr() const noexcept { return model_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const StopRule& stop() const noexcept { return stop_; }
  /// Address of this tree's root inside the tree it was sampled as.
  const Address& origin() const noexcept { return origin_; }

  std::span<const Node> nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  /// Largest generation present.
  std::size_t depth() const noexcept { return depth_; }
  /// True when every node above generation n has its children.
  bool complete_to(std::size_t n) const noexcept;

  std::optional<std::size_t> find(std::span<const std::uint32_t> address) const noexcept;
  bool contains(std::span<const std::uint32_t> address) const noexcept { return find(address).has_value(); }
  /// Throws NotFound for absent addresses.
  std::size_t label(std::span<const std::uint32_t> address) const;
  const Letter& letter_of(std::size_t node) const { return model_->letters[nodes_[node].letter]; }
  Address address_of(std::size_t node) const;

  /// Same shape and labels (seed and origin are not compared).
  friend bool operator==(const RandomTree& x, const RandomTree& y);

 private:
  friend RandomTree sample_tree(std::shared_ptr<const IfsModel>, StopRule, std::uint64_t);
  friend RandomTree subtree(const RandomTree&, std::span<const std::uint32_t>);
  friend RandomTree load_tree(std::string_view, std::shared_ptr<const IfsModel>);

  RandomTree() = default;
  void finish();

  std::shared_ptr<const IfsModel> model_;
  std::uint64_t seed_ = 0;
  StopRule stop_;
  Address origin_;
  std::vector<Node> nodes_;
  std::size_t depth_ = 0;
};

/// Deterministic in (model, stop, seed). Throws std::invalid_argument for a
/// non-positive resolution or an invalid model.
RandomTree sample_tree(std::shared_ptr<const IfsModel> model, StopRule stop, std::uint64_t seed);
RandomTree sample_tree(const IfsModel& model, StopRule stop, std::uint64_t seed);

/// The subtree rooted at `at`, re-rooted (theta_at I). Throws NotFound.
RandomTree subtree(const RandomTree& tree, std::span<const std::uint32_t> at);

/// Addresses of generation n in lexicographic order.
std::vector<Address> generation(const RandomTree& tree, std::size_t n);

/// JSON dump: {"seed", "stop", "origin", "nodes": [["1.2", "letter-id"], ...]}.
std::string dump_tree(const RandomTree& tree);
RandomTree load_tree(std::string_view text, std::shared_ptr<const IfsModel> model);

}  // namespace cantorspec
