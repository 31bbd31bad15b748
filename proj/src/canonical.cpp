#include "ecpoly/canonical.hpp"

#include <algorithm>
#include <bit>

#include "ecpoly/graph6.hpp"

namespace ecpoly {

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

std::uint64_t mask_of(const Cell& cell) {
  std::uint64_t m = 0;
  for (Vertex v : cell) m |= std::uint64_t{1} << v;
  return m;
}

// Splits every cell by the number of neighbours each vertex has in every
// cell, repeating until the partition is equitable. Sub-cells are ordered by
// signature, which depends only on structure, so the result is invariant
// under relabelling.
void refine(const Graph& g, Partition& cells) {
  for (;;) {
    const std::size_t before = cells.size();
    std::vector<std::uint64_t> masks(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) masks[c] = mask_of(cells[c]);

    Partition next;
    next.reserve(cells.size());
    std::vector<std::pair<std::vector<int>, Vertex>> keyed;
    for (const Cell& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      keyed.clear();
      for (Vertex v : cell) {
        std::vector<int> sig(masks.size());
        for (std::size_t c = 0; c < masks.size(); ++c) sig[c] = std::popcount(g.neighbours(v) & masks[c]);
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 0; i < keyed.size();) {
        Cell sub;
        std::size_t j = i;
        for (; j < keyed.size() && keyed[j].first == keyed[i].first; ++j) sub.push_back(keyed[j].second);
        next.push_back(std::move(sub));
        i = j;
      }
    }
    cells = std::move(next);
    if (cells.size() == before) return;
  }
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()), words_((n_ * (n_ ? n_ - 1 : 0) / 2 + 63) / 64) {}

  void run() {
    Partition root;
    if (n_ > 0) {
      Cell all(n_);
      for (Vertex v = 0; v < n_; ++v) all[v] = v;
      root.push_back(std::move(all));
    }
    std::vector<Vertex> path;
    visit(std::move(root), path);
  }

  const std::vector<Vertex>& best_labelling() const { return best_label_; }

 private:
  void visit(Partition cells, std::vector<Vertex>& path) {
    refine(g_, cells);
    if (cells.size() == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;
    }
    const Cell candidates = cells[target];
    std::uint64_t explored = 0;
    for (Vertex w : candidates) {
      if (in_explored_orbit(w, explored, path)) continue;
      explored |= std::uint64_t{1} << w;
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back(Cell{w});
        Cell rest;
        for (Vertex x : cells[c]) {
          if (x != w) rest.push_back(x);
        }
        child.push_back(std::move(rest));
      }
      path.push_back(w);
      visit(std::move(child), path);
      path.pop_back();
    }
  }

  // Automorphisms that fix the current path pointwise map the subtree below
  // one candidate onto the subtree below its image, so images of explored
  // candidates need not be searched.
  bool in_explored_orbit(Vertex w, std::uint64_t explored, const std::vector<Vertex>& path) const {
    if (explored == 0) return false;
    std::uint64_t orbit = explored;
    std::vector<const std::vector<Vertex>*> gens;
    for (const auto& a : automorphisms_) {
      if (std::all_of(path.begin(), path.end(), [&a](Vertex p) { return a[p] == p; })) gens.push_back(&a);
    }
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto* gen : gens) {
        std::uint64_t image = 0;
        for (std::uint64_t o = orbit; o != 0; o &= o - 1) image |= std::uint64_t{1} << (*gen)[std::countr_zero(o)];
        if ((image & ~orbit) != 0) {
          orbit |= image;
          grew = true;
        }
      }
    }
    return ((orbit >> w) & 1U) != 0;
  }

  void leaf(const Partition& cells) {
    std::vector<Vertex> label(n_);
    std::vector<Vertex> inverse(n_);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      label[cells[c][0]] = static_cast<Vertex>(c);
      inverse[c] = cells[c][0];
    }
    std::vector<std::uint64_t> bits(words_, 0);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n_; ++j) {
      const std::uint64_t column = g_.neighbours(inverse[j]);
      for (std::size_t i = 0; i < j; ++i, ++k) {
        if ((column >> inverse[i]) & 1U) bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
      }
    }
    if (!have_best_ || bits < best_bits_) {
      have_best_ = true;
      best_bits_ = std::move(bits);
      best_label_ = std::move(label);
      best_inverse_ = std::move(inverse);
    } else if (bits == best_bits_) {
      std::vector<Vertex> gamma(n_);
      for (Vertex v = 0; v < n_; ++v) gamma[v] = best_inverse_[label[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t words_;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_bits_;
  std::vector<Vertex> best_label_;
  std::vector<Vertex> best_inverse_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  Search search(g);
  search.run();
  CanonicalForm out;
  out.labelling = search.best_labelling();
  out.graph = relabel(g, out.labelling);
  out.key = to_graph6(out.graph);
  return out;
}

std::string canonicalize(const Graph& g) { return canonical_form(g).key; }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonicalize(a) == canonicalize(b);
}

}  // namespace ecpoly
