#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powercx/errors.hpp"

namespace powercx {

/// Permutation of {0..degree-1}, acting on the right: x * (p * q) = (x * p) * q.
class Perm {
 public:
  using point = std::uint32_t;

  Perm() = default;

  explicit Perm(std::size_t degree) : img_(degree)
  {
    std::iota(img_.begin(), img_.end(), point{0});
  }

  explicit Perm(std::vector<point> images) : img_(std::move(images))
  {
    std::vector<bool> hit(img_.size(), false);
    for (point x : img_) {
      if (x >= img_.size() || hit[x])
        throw precondition_error("image list is not a permutation");
      hit[x] = true;
    }
  }

  std::size_t degree() const { return img_.size(); }
  point operator[](point x) const { return img_[x]; }
  std::vector<point> const &images() const { return img_; }

  bool is_identity() const
  {
    for (point x = 0; x < img_.size(); ++x)
      if (img_[x] != x)
        return false;
    return true;
  }

  Perm inverse() const
  {
    Perm r(degree());
    for (point x = 0; x < img_.size(); ++x)
      r.img_[img_[x]] = x;
    return r;
  }

  /// First apply `p`, then `q`.
  friend Perm operator*(Perm const &p, Perm const &q)
  {
    Perm r(p.degree());
    for (point x = 0; x < p.img_.size(); ++x)
      r.img_[x] = q.img_[p.img_[x]];
    return r;
  }

  auto operator<=>(Perm const &) const = default;

 private:
  std::vector<point> img_;
};

/// Cycle notation, e.g. "(0 3)(1 4)(2 5)"; "()" for the identity.
inline std::string to_cycles(Perm const &p)
{
  std::ostringstream out;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (Perm::point x = 0; x < p.degree(); ++x) {
    if (seen[x] || p[x] == x)
      continue;
    any = true;
    out << '(' << x;
    seen[x] = true;
    for (auto y = p[x]; y != x; y = p[y]) {
      out << ' ' << y;
      seen[y] = true;
    }
    out << ')';
  }
  if (!any)
    out << "()";
  return out.str();
}

/// Parses cycle notation (spaces or commas between points) into a
/// permutation of the given degree.
inline Perm parse_cycles(std::string_view text, std::size_t degree)
{
  std::vector<Perm::point> img(degree);
  std::iota(img.begin(), img.end(), Perm::point{0});
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(')
      throw precondition_error("cycle notation: expected '(' at position " + std::to_string(i));
    ++i;
    std::vector<Perm::point> cycle;
    for (;;) {
      skip();
      if (i >= text.size())
        throw precondition_error("cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw precondition_error("cycle notation: unexpected character '" +
                                 std::string(1, text[i]) + "'");
      std::size_t x = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        x = x * 10 + static_cast<std::size_t>(text[i++] - '0');
      if (x >= degree)
        throw precondition_error("cycle notation: point " + std::to_string(x) +
                                 " out of range for degree " + std::to_string(degree));
      if (used[x])
        throw precondition_error("cycle notation: point " + std::to_string(x) + " repeated");
      used[x] = true;
      cycle.push_back(static_cast<Perm::point>(x));
    }
    for (std::size_t j = 0; j < cycle.size(); ++j)
      img[cycle[j]] = cycle[(j + 1) % cycle.size()];
    skip();
  }
  return Perm(std::move(img));
}

/// Finite permutation group given by generators, with a stabilizer chain
/// (deterministic Schreier-Sims) backing order and membership.
class PermGroup {
 public:
  using point = Perm::point;

  PermGroup() = default;

  /// `base_prefix` forces the first base points, which makes pointwise
  /// stabilizers of those points available from the chain.
  PermGroup(std::size_t degree, std::vector<Perm> generators,
            std::span<const point> base_prefix = {})
      : degree_(degree)
  {
    for (auto &g : generators) {
      if (g.degree() != degree)
        throw precondition_error("generator degree mismatch");
      if (!g.is_identity())
        gens_.push_back(std::move(g));
    }
    build(base_prefix);
  }

  std::size_t degree() const { return degree_; }
  std::vector<Perm> const &generators() const { return gens_; }
  std::vector<point> const &base() const { return base_; }

  /// Group order; throws on 64-bit overflow.
  std::uint64_t order() const
  {
    std::uint64_t n = 1;
    for (auto const &lvl : levels_)
      if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(lvl.orbit.size()), &n))
        throw size_limit_error("group order exceeds 64 bits");
    return n;
  }

  bool contains(Perm const &g) const
  {
    if (g.degree() != degree_)
      return false;
    auto [h, level] = strip(g, 0);
    return level == levels_.size() && h.is_identity();
  }

  /// Orbit of x under the generators, in discovery order.
  std::vector<point> orbit(point x) const
  {
    std::vector<point> out{x};
    std::vector<bool> seen(degree_, false);
    seen[x] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (auto const &g : gens_) {
        point y = g[out[i]];
        if (!seen[y]) {
          seen[y] = true;
          out.push_back(y);
        }
      }
    return out;
  }

  PermGroup stabilizer(point x) const
  {
    point const p[] = {x};
    return pointwise_stabilizer(p);
  }

  /// Subgroup fixing every listed point.
  PermGroup pointwise_stabilizer(std::span<const point> points) const
  {
    PermGroup chained(degree_, gens_, points);
    std::vector<Perm> fixing;
    for (auto const &s : chained.strong_)
      if (std::all_of(points.begin(), points.end(), [&](point p) { return s[p] == p; }))
        fixing.push_back(s);
    return PermGroup(degree_, std::move(fixing));
  }

  /// All elements in ascending order; throws when the order exceeds `cap`.
  std::vector<Perm> elements(std::uint64_t cap = 1'000'000) const
  {
    if (order() > cap)
      throw size_limit_error("group of order " + std::to_string(order()) +
                             " exceeds the enumeration cap");
    std::vector<Perm> out{Perm(degree_)};
    for (auto lvl = levels_.size(); lvl-- > 0;) {
      std::vector<Perm> next;
      next.reserve(out.size() * levels_[lvl].orbit.size());
      for (auto const &h : out)
        for (auto const &u : levels_[lvl].reps)
          next.push_back(h * u);
      out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Level {
    point base_point;
    std::vector<Perm> gens;          // strong generators fixing earlier base points
    std::vector<point> orbit;        // orbit of base_point
    std::vector<Perm> reps;          // reps[i] maps base_point to orbit[i]
    std::vector<std::int64_t> where; // point -> index in orbit, or -1
  };

  void rebuild_level(Level &lvl) const
  {
    lvl.orbit.assign(1, lvl.base_point);
    lvl.reps.assign(1, Perm(degree_));
    lvl.where.assign(degree_, -1);
    lvl.where[lvl.base_point] = 0;
    for (std::size_t i = 0; i < lvl.orbit.size(); ++i)
      for (auto const &g : lvl.gens) {
        point y = g[lvl.orbit[i]];
        if (lvl.where[y] < 0) {
          lvl.where[y] = static_cast<std::int64_t>(lvl.orbit.size());
          lvl.orbit.push_back(y);
          lvl.reps.push_back(lvl.reps[i] * g);
        }
      }
  }

  /// Sifts g through levels from `from`; returns residue and the level where it stopped.
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const
  {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      auto const &lvl = levels_[i];
      auto w = lvl.where[g[lvl.base_point]];
      if (w < 0)
        return {std::move(g), i};
      g = g * lvl.reps[static_cast<std::size_t>(w)].inverse();
    }
    return {std::move(g), levels_.size()};
  }

  void add_base_point(point b)
  {
    Level lvl;
    lvl.base_point = b;
    base_.push_back(b);
    levels_.push_back(std::move(lvl));
  }

  point moved_point(Perm const &g) const
  {
    for (point x = 0; x < degree_; ++x)
      if (g[x] != x)
        return x;
    return 0;
  }

  void build(std::span<const point> base_prefix)
  {
    for (point b : base_prefix) {
      if (b >= degree_)
        throw precondition_error("base point out of range");
      if (std::find(base_.begin(), base_.end(), b) == base_.end())
        add_base_point(b);
    }
    for (auto const &g : gens_)
      if (std::all_of(base_.begin(), base_.end(), [&](point b) { return g[b] == b; }))
        add_base_point(moved_point(g));
    for (auto const &g : gens_)
      strong_.push_back(g);
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      levels_[i].gens = fixing_prefix(i);
      rebuild_level(levels_[i]);
    }

    // Schreier-Sims, processing levels from the deepest upward
    std::size_t i = levels_.size();
    while (i-- > 0) {
      bool restart = false;
      auto &lvl = levels_[i];
      for (std::size_t o = 0; !restart && o < lvl.orbit.size(); ++o)
        for (std::size_t s = 0; !restart && s < lvl.gens.size(); ++s) {
          auto const &x = lvl.gens[s];
          auto const &u_beta = lvl.reps[o];
          auto const &u_img = lvl.reps[static_cast<std::size_t>(lvl.where[x[lvl.orbit[o]]])];
          Perm schreier = u_beta * x * u_img.inverse();
          auto [h, j] = strip(std::move(schreier), i + 1);
          if (j == levels_.size() && h.is_identity())
            continue;
          if (j == levels_.size())
            add_base_point(moved_point(h));
          strong_.push_back(h);
          for (std::size_t l = i + 1; l <= j && l < levels_.size(); ++l) {
            levels_[l].gens.push_back(h);
            rebuild_level(levels_[l]);
          }
          i = std::min(j, levels_.size() - 1) + 1;
          restart = true;
        }
    }
  }

  std::vector<Perm> fixing_prefix(std::size_t level) const
  {
    std::vector<Perm> out;
    for (auto const &g : strong_) {
      bool fixes = true;
      for (std::size_t j = 0; j < level; ++j)
        if (g[base_[j]] != base_[j]) {
          fixes = false;
          break;
        }
      if (fixes)
        out.push_back(g);
    }
    return out;
  }

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> strong_;
  std::vector<point> base_;
  std::vector<Level> levels_;
};

/// Closure of a set of permutations under products, as a sorted set of
/// elements; throws above `cap` elements.
inline std::set<Perm> generated_elements(std::size_t degree, std::span<const Perm> gens,
                                         std::size_t cap = 1'000'000)
{
  std::set<Perm> seen{Perm(degree)};
  std::vector<Perm> frontier{Perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const &h : frontier)
      for (auto const &g : gens) {
        auto p = h * g;
        if (seen.insert(p).second) {
          if (seen.size() > cap)
            throw size_limit_error("subgroup enumeration exceeded cap");
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace powercx
