#include "ramsey/space_core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "ramsey/carlson_simpson.hpp"
#include "ramsey/ellentuck.hpp"
#include "ramsey/fin_blocks.hpp"
#include "ramsey/fraisse.hpp"
#include "ramsey/laflamme.hpp"
#include "ramsey/seq_orders.hpp"

namespace ramsey {

bool AuditReport::pass() const {
  for (const AuditCheck& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

namespace {

std::string show_path(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Block-tree fragment
// ---------------------------------------------------------------------------

struct LaflammeTraits {
  int level = 1;
  using Block = std::vector<TreePath>;
  using Approx = std::vector<Block>;

  std::string name() const { return "laflamme"; }
  bool immutable_blocks() const { return true; }
  int length(const Approx& a) const { return static_cast<int>(a.size()); }

  std::string block_serial(const Block& b) const {
    std::vector<std::string> parts;
    for (const TreePath& p : b) parts.push_back(show_path(p));
    return "{" + join(parts, ",") + "}";
  }
  std::string serialize(const Approx& a) const {
    std::vector<std::string> parts;
    for (const Block& b : a) parts.push_back(block_serial(b));
    return "[" + join(parts, ";") + "]";
  }
  std::string prefix_serial(const Approx& a, int j) const {
    return serialize(Approx(a.begin(), a.begin() + j));
  }
  Approx restrict_to(const Approx& a, int j) const {
    return Approx(a.begin(), a.begin() + j);
  }

  // Copies of the canonical block `shape` inside `host`: a block whose paths
  // share their stem at coordinate `pos` and which is structurally canonical.
  // Level 1 blocks are leaf fans; higher levels recurse into the sub-blocks
  // at the next coordinate.
  void embed_block(int lvl, int shape, const Block& host, int pos,
                   std::size_t cap, std::vector<Block>& out) const {
    if (out.size() >= cap) return;
    if (lvl == 1) {
      const int want = shape + 1;
      const int have = static_cast<int>(host.size());
      if (want > have) return;
      std::vector<int> idx(want);
      for (int i = 0; i < want; ++i) idx[i] = i;
      for (;;) {
        Block copy;
        for (int i : idx) copy.push_back(host[i]);
        out.push_back(std::move(copy));
        if (out.size() >= cap) return;
        int p = want - 1;
        while (p >= 0 && idx[p] == have - (want - p)) --p;
        if (p < 0) break;
        ++idx[p];
        for (int t = p + 1; t < want; ++t) idx[t] = idx[t - 1] + 1;
      }
      return;
    }
    // Group the host by the coordinate after the stem; groups arrive in order.
    std::vector<Block> children;
    for (const TreePath& path : host) {
      if (children.empty() || children.back().front()[pos + 1] != path[pos + 1])
        children.push_back({});
      children.back().push_back(path);
    }
    const int slots = shape + 1;
    const int avail = static_cast<int>(children.size());
    if (slots > avail) return;
    // Choose increasing child positions, one per slot, and recurse.
    std::vector<std::vector<Block>> options(slots);
    auto descend = [&](auto&& self, int slot, int min_child) -> void {
      if (out.size() >= cap) return;
      if (slot == slots) {
        std::vector<std::size_t> cursor(slots, 0);
        for (;;) {
          Block combined;
          for (int s = 0; s < slots; ++s) {
            const Block& part = options[s][cursor[s]];
            combined.insert(combined.end(), part.begin(), part.end());
          }
          out.push_back(std::move(combined));
          if (out.size() >= cap) return;
          int s = slots - 1;
          while (s >= 0 && cursor[s] + 1 == options[s].size()) cursor[s--] = 0;
          if (s < 0) break;
          ++cursor[s];
        }
        return;
      }
      for (int child = min_child; child <= avail - (slots - slot); ++child) {
        std::vector<Block> local;
        embed_block(lvl - 1, slot, children[child], pos + 1, cap, local);
        if (!local.empty()) {
          options[slot] = std::move(local);
          self(self, slot + 1, child + 1);
          if (out.size() >= cap) return;
        }
      }
    };
    descend(descend, 0, 0);
  }

  void grow(int q, int slot, int min_stem, const std::vector<Block>& hosts,
            Approx& current, std::size_t cap, std::size_t& added,
            std::vector<Approx>& out) const {
    if (added >= cap) return;
    if (slot == q) {
      out.push_back(current);
      ++added;
      return;
    }
    const int nhosts = static_cast<int>(hosts.size());
    for (int stem = min_stem; stem <= nhosts - (q - slot); ++stem) {
      std::vector<Block> copies;
      embed_block(level, slot, hosts[stem], 0, cap, copies);
      for (Block& c : copies) {
        current.push_back(std::move(c));
        grow(q, slot + 1, stem + 1, hosts, current, cap, added, out);
        current.pop_back();
        if (added >= cap) return;
      }
    }
  }

  std::vector<Approx> enumerate(int depth, const AuditBudget& budget) const {
    std::vector<Approx> out;
    out.push_back({});
    const TkApprox master = build_tree(level, depth + 1);
    for (int q = 1; q <= depth; ++q) {
      std::size_t added = 0;
      Approx current;
      grow(q, 0, 0, master.blocks, current,
           static_cast<std::size_t>(budget.per_length), added, out);
    }
    return out;
  }

  bool leq_fin(const Approx& a, const Approx& b) const {
    std::set<TreePath> nodes;
    for (const Block& blk : b)
      for (const TreePath& p : blk) nodes.insert(p);
    for (const Block& blk : a)
      for (const TreePath& p : blk)
        if (!nodes.count(p)) return false;
    return true;
  }

  std::vector<Approx> leq_fin_set(const Approx& b) const {
    std::vector<Approx> out;
    out.push_back({});
    const std::size_t no_cap = static_cast<std::size_t>(-1);
    for (int q = 1; q <= length(b); ++q) {
      std::size_t added = 0;
      Approx current;
      grow(q, 0, 0, b, current, no_cap, added, out);
    }
    return out;
  }
};

// Negative control: restriction returns the last j blocks.
struct CorruptTraits : LaflammeTraits {
  std::string name() const { return "corrupt"; }
  Approx restrict_to(const Approx& a, int j) const {
    return Approx(a.end() - j, a.end());
  }
};

// ---------------------------------------------------------------------------
// High-dimensional sequence-space fragment
// ---------------------------------------------------------------------------

struct EllentuckTraits {
  int k = 2;
  std::vector<std::vector<int>> witness;  // leaves of the canonical member

  using Approx = std::vector<std::vector<int>>;

  std::string name() const { return "e"; }
  bool immutable_blocks() const { return true; }
  int length(const Approx& a) const { return static_cast<int>(a.size()); }

  std::string serialize(const Approx& a) const {
    std::vector<std::string> parts;
    for (const auto& leaf : a) parts.push_back(show_path(leaf));
    return "[" + join(parts, ";") + "]";
  }
  std::string prefix_serial(const Approx& a, int j) const {
    return serialize(Approx(a.begin(), a.begin() + j));
  }
  Approx restrict_to(const Approx& a, int j) const {
    return Approx(a.begin(), a.begin() + j);
  }

  // The induced node map (domain prefixes to image prefixes) must be
  // well-defined, injective, and preserve the well-order.
  bool valid_approx(const Approx& leaves) const {
    std::map<std::vector<int>, std::vector<int>> image;
    for (std::size_t t = 0; t < leaves.size(); ++t) {
      const std::vector<int> dom = unrank_full(k, t).entries();
      for (int len = 1; len <= k; ++len) {
        std::vector<int> dp(dom.begin(), dom.begin() + len);
        std::vector<int> ip(leaves[t].begin(), leaves[t].begin() + len);
        auto [it, inserted] = image.emplace(std::move(dp), std::move(ip));
        if (!inserted && it->second != std::vector<int>(leaves[t].begin(),
                                                        leaves[t].begin() + len))
          return false;
      }
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> nodes(
        image.begin(), image.end());
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        if (nodes[i].second == nodes[j].second) return false;
        if (detail::prec_less_raw(nodes[i].first, nodes[j].first) !=
            detail::prec_less_raw(nodes[i].second, nodes[j].second))
          return false;
      }
    return true;
  }

  std::vector<Approx> enumerate(int depth, const AuditBudget& budget) const {
    std::vector<Approx> out;
    const int w = static_cast<int>(witness.size());
    std::vector<std::size_t> per_length(depth + 1, 0);
    out.push_back({});
    ++per_length[0];
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << w); ++mask) {
      Approx leaves;
      for (int i = 0; i < w; ++i)
        if (mask & (std::uint32_t{1} << i)) leaves.push_back(witness[i]);
      const int len = static_cast<int>(leaves.size());
      if (len > depth) continue;
      if (per_length[len] >= static_cast<std::size_t>(budget.per_length)) continue;
      if (!valid_approx(leaves)) continue;
      ++per_length[len];
      out.push_back(std::move(leaves));
    }
    std::sort(out.begin(), out.end(), [](const Approx& a, const Approx& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return out;
  }

  bool leq_fin(const Approx& a, const Approx& b) const {
    return std::includes(b.begin(), b.end(), a.begin(), a.end(),
                         detail::prec_less_raw);
  }

  std::vector<Approx> leq_fin_set(const Approx& b) const {
    std::vector<Approx> out;
    const int w = static_cast<int>(b.size());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << w); ++mask) {
      Approx leaves;
      for (int i = 0; i < w; ++i)
        if (mask & (std::uint32_t{1} << i)) leaves.push_back(b[i]);
      if (valid_approx(leaves)) out.push_back(std::move(leaves));
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Generating-sequence fragment (grids and clique-free graphs)
// ---------------------------------------------------------------------------

struct FraisseTraits {
  SpaceId space;

  struct FBlock {
    int location = 0;
    std::vector<std::vector<int>> axes;  // grid: chosen values per axis
    std::vector<int> verts;              // graph: chosen vertices
    friend bool operator==(const FBlock&, const FBlock&) = default;
  };
  using Approx = std::vector<FBlock>;

  bool grid() const { return space.family == Family::hypercube; }
  std::string name() const { return family_name(space.family); }
  bool immutable_blocks() const { return true; }
  int length(const Approx& a) const { return static_cast<int>(a.size()); }

  std::string block_serial(const FBlock& b) const {
    std::string out = std::to_string(b.location) + ":";
    if (grid()) {
      std::vector<std::string> axes;
      for (const auto& ax : b.axes) axes.push_back(show_path(ax));
      out += "[" + join(axes, "x") + "]";
    } else {
      out += show_path(b.verts);
    }
    return out;
  }
  std::string serialize(const Approx& a) const {
    std::vector<std::string> parts;
    for (const FBlock& b : a) parts.push_back(block_serial(b));
    return "[" + join(parts, ";") + "]";
  }
  std::string prefix_serial(const Approx& a, int j) const {
    return serialize(Approx(a.begin(), a.begin() + j));
  }
  Approx restrict_to(const Approx& a, int j) const {
    return Approx(a.begin(), a.begin() + j);
  }

  // Ordered-pattern match against the canonical clique-free block.
  bool graph_copy_ok(const std::vector<int>& verts) const {
    const int parts = space.param - 1;
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = a + 1; b < verts.size(); ++b) {
        const bool host_edge = verts[a] % parts != verts[b] % parts;
        const bool want_edge =
            static_cast<int>(a % parts) != static_cast<int>(b % parts);
        if (host_edge != want_edge) return false;
      }
    return true;
  }

  void subsets_of(const std::vector<int>& pool, int want,
                  std::vector<std::vector<int>>& out) const {
    const int have = static_cast<int>(pool.size());
    if (want > have) return;
    std::vector<int> idx(want);
    for (int i = 0; i < want; ++i) idx[i] = i;
    for (;;) {
      std::vector<int> chosen;
      for (int i : idx) chosen.push_back(pool[i]);
      out.push_back(std::move(chosen));
      int p = want - 1;
      while (p >= 0 && idx[p] == have - (want - p)) --p;
      if (p < 0) break;
      ++idx[p];
      for (int t = p + 1; t < want; ++t) idx[t] = idx[t - 1] + 1;
    }
  }

  // Copies of canonical block `shape` inside a host with the given axis value
  // pools (grid) or vertex pool (graph).
  std::vector<FBlock> copies_in(int shape, const FBlock& host) const {
    std::vector<FBlock> out;
    if (grid()) {
      std::vector<std::vector<std::vector<int>>> per_axis(host.axes.size());
      for (std::size_t ax = 0; ax < host.axes.size(); ++ax)
        subsets_of(host.axes[ax], shape + 1, per_axis[ax]);
      for (const auto& choice : per_axis)
        if (choice.empty()) return out;
      std::vector<std::size_t> cursor(per_axis.size(), 0);
      for (;;) {
        FBlock blk;
        blk.location = host.location;
        for (std::size_t ax = 0; ax < per_axis.size(); ++ax)
          blk.axes.push_back(per_axis[ax][cursor[ax]]);
        out.push_back(std::move(blk));
        int ax = static_cast<int>(per_axis.size()) - 1;
        while (ax >= 0 && cursor[ax] + 1 == per_axis[ax].size()) cursor[ax--] = 0;
        if (ax < 0) break;
        ++cursor[ax];
      }
    } else {
      std::vector<std::vector<int>> vert_sets;
      subsets_of(host.verts, shape + 1, vert_sets);
      for (auto& vs : vert_sets) {
        if (!graph_copy_ok(vs)) continue;
        FBlock blk;
        blk.location = host.location;
        blk.verts = std::move(vs);
        out.push_back(std::move(blk));
      }
    }
    return out;
  }

  FBlock full_block(int location) const {
    FBlock b;
    b.location = location;
    std::vector<int> all(location + 1);
    for (int v = 0; v <= location; ++v) all[v] = v;
    if (grid())
      b.axes.assign(space.param, all);
    else
      b.verts = all;
    return b;
  }

  void grow(int q, int slot, int min_host, const std::vector<FBlock>& hosts,
            Approx& current, std::size_t cap, std::size_t& added,
            std::vector<Approx>& out) const {
    if (added >= cap) return;
    if (slot == q) {
      out.push_back(current);
      ++added;
      return;
    }
    const int nhosts = static_cast<int>(hosts.size());
    for (int h = min_host; h <= nhosts - (q - slot); ++h) {
      for (FBlock& c : copies_in(slot, hosts[h])) {
        current.push_back(std::move(c));
        grow(q, slot + 1, h + 1, hosts, current, cap, added, out);
        current.pop_back();
        if (added >= cap) return;
      }
    }
  }

  std::vector<Approx> enumerate(int depth, const AuditBudget& budget) const {
    std::vector<Approx> out;
    out.push_back({});
    std::vector<FBlock> hosts;
    for (int loc = 0; loc <= depth; ++loc) hosts.push_back(full_block(loc));
    for (int q = 1; q <= depth; ++q) {
      std::size_t added = 0;
      Approx current;
      grow(q, 0, 0, hosts, current,
           static_cast<std::size_t>(budget.per_length), added, out);
    }
    return out;
  }

  bool block_contained(const FBlock& a, const FBlock& b) const {
    if (a.location != b.location) return false;
    if (grid()) {
      for (std::size_t ax = 0; ax < a.axes.size(); ++ax)
        if (!std::includes(b.axes[ax].begin(), b.axes[ax].end(),
                           a.axes[ax].begin(), a.axes[ax].end()))
          return false;
      return true;
    }
    return std::includes(b.verts.begin(), b.verts.end(), a.verts.begin(),
                         a.verts.end());
  }

  bool leq_fin(const Approx& a, const Approx& b) const {
    std::size_t from = 0;
    for (const FBlock& blk : a) {
      bool found = false;
      for (std::size_t h = from; h < b.size(); ++h)
        if (block_contained(blk, b[h])) {
          from = h + 1;
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  }

  std::vector<Approx> leq_fin_set(const Approx& b) const {
    std::vector<Approx> out;
    out.push_back({});
    const std::size_t no_cap = static_cast<std::size_t>(-1);
    for (int q = 1; q <= length(b); ++q) {
      std::size_t added = 0;
      Approx current;
      grow(q, 0, 0, b, current, no_cap, added, out);
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Block-sequence fragment
// ---------------------------------------------------------------------------

struct FinTraits {
  int k = 1;
  std::vector<FinFunc> pool;  // canonical order, window-supported

  using Approx = std::vector<FinFunc>;

  std::string name() const { return "fin"; }
  bool immutable_blocks() const { return true; }
  int length(const Approx& a) const { return static_cast<int>(a.size()); }

  std::string block_serial(const FinFunc& f) const {
    std::vector<std::string> parts;
    for (const auto& [pos, value] : f.entries())
      parts.push_back("(" + std::to_string(pos) + "," + std::to_string(value) + ")");
    return "{" + join(parts, ",") + "}";
  }
  std::string serialize(const Approx& a) const {
    std::vector<std::string> parts;
    for (const FinFunc& f : a) parts.push_back(block_serial(f));
    return "[" + join(parts, ";") + "]";
  }
  std::string prefix_serial(const Approx& a, int j) const {
    return serialize(Approx(a.begin(), a.begin() + j));
  }
  Approx restrict_to(const Approx& a, int j) const {
    return Approx(a.begin(), a.begin() + j);
  }

  void grow(int q, int slot, std::size_t min_index, int min_pos,
            const std::vector<FinFunc>& funcs, Approx& current, std::size_t cap,
            std::size_t& added, std::vector<Approx>& out) const {
    if (added >= cap) return;
    if (slot == q) {
      out.push_back(current);
      ++added;
      return;
    }
    for (std::size_t i = min_index; i < funcs.size(); ++i) {
      if (funcs[i].min_support() < min_pos) continue;
      current.push_back(funcs[i]);
      grow(q, slot + 1, i + 1, funcs[i].max_support() + 1, funcs, current, cap,
           added, out);
      current.pop_back();
      if (added >= cap) return;
    }
  }

  std::vector<Approx> enumerate(int depth, const AuditBudget& budget) const {
    std::vector<Approx> out;
    out.push_back({});
    for (int q = 1; q <= depth; ++q) {
      std::size_t added = 0;
      Approx current;
      grow(q, 0, 0, 0, pool, current,
           static_cast<std::size_t>(budget.per_length), added, out);
    }
    return out;
  }

  bool leq_fin(const Approx& a, const Approx& b) const {
    if (a.empty()) return true;
    if (b.empty()) return false;
    return is_block_subseq(BlockSeq(k, a), BlockSeq(k, b));
  }

  std::vector<Approx> leq_fin_set(const Approx& b) const {
    std::vector<Approx> out;
    out.push_back({});
    if (b.empty()) return out;
    std::vector<FinFunc> members = gen_semigroup(BlockSeq(k, b), k);
    std::sort(members.begin(), members.end(),
              [](const FinFunc& x, const FinFunc& y) {
                if (x.min_support() != y.min_support())
                  return x.min_support() < y.min_support();
                return x.entries() < y.entries();
              });
    const std::size_t no_cap = static_cast<std::size_t>(-1);
    for (int q = 1; q <= length(b); ++q) {
      std::size_t added = 0;
      Approx current;
      grow(q, 0, 0, 0, members, current, no_cap, added, out);
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Partition fragment
// ---------------------------------------------------------------------------

struct CarlsonTraits {
  using Approx = std::vector<int>;  // restricted growth digits

  std::string name() const { return "cs"; }
  bool immutable_blocks() const { return false; }

  int length(const Approx& a) const {
    int max_digit = -1;
    for (int d : a) max_digit = std::max(max_digit, d);
    return max_digit + 1;
  }

  std::string serialize(const Approx& a) const { return show_path(a); }
  std::string prefix_serial(const Approx& a, int j) const {
    return serialize(restrict_to(a, j));  // classes shrink; no literal prefix
  }

  Approx restrict_to(const Approx& a, int j) const {
    if (j >= length(a)) return a;
    std::size_t cut = 0;
    while (cut < a.size() && a[cut] != j) ++cut;
    return Approx(a.begin(), a.begin() + cut);
  }

  std::vector<Approx> enumerate(int depth, const AuditBudget& budget) const {
    std::vector<Approx> out;
    out.push_back({});
    std::vector<std::size_t> per_length(depth + 1, 0);
    per_length[0] = 1;
    const int max_domain = depth + 2;
    std::vector<Approx> frontier = {{}};
    for (int n = 0; n < max_domain; ++n) {
      std::vector<Approx> next;
      for (const Approx& a : frontier) {
        const int classes = length(a);
        for (int digit = 0; digit <= classes && digit <= depth - 1; ++digit) {
          Approx grown = a;
          grown.push_back(digit);
          next.push_back(grown);
          const int len = length(grown);
          if (len <= depth &&
              per_length[len] < static_cast<std::size_t>(budget.per_length)) {
            ++per_length[len];
            out.push_back(std::move(grown));
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Approx& a, const Approx& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool leq_fin(const Approx& a, const Approx& b) const {
    if (a.size() != b.size()) return false;
    std::vector<int> image(length(b), -1);
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (image[b[i]] < 0)
        image[b[i]] = a[i];
      else if (image[b[i]] != a[i])
        return false;
    }
    return true;
  }

  std::vector<Approx> leq_fin_set(const Approx& b) const {
    std::vector<Approx> out;
    if (b.empty()) {
      out.push_back({});
      return out;
    }
    const int classes = length(b);
    // Every coarsening comes from a growth string over the class indices.
    std::vector<Approx> merges = {{0}};
    for (int c = 1; c < classes; ++c) {
      std::vector<Approx> next;
      for (const Approx& m : merges) {
        const int used = length(m);
        for (int digit = 0; digit <= used; ++digit) {
          Approx grown = m;
          grown.push_back(digit);
          next.push_back(std::move(grown));
        }
      }
      merges = std::move(next);
    }
    for (const Approx& m : merges) {
      Approx merged(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) merged[i] = m[b[i]];
      out.push_back(std::move(merged));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

// ---------------------------------------------------------------------------
// Type-erased wrapper and the harness itself
// ---------------------------------------------------------------------------

template <class Traits>
class FragmentImpl final : public SpaceFragment {
 public:
  FragmentImpl(Traits traits, int depth, const AuditBudget& budget)
      : traits_(std::move(traits)),
        family_(traits_.enumerate(depth, budget)) {}

  std::string name() const override { return traits_.name(); }
  bool immutable_blocks() const override { return traits_.immutable_blocks(); }
  std::size_t count() const override { return family_.size(); }
  int length(std::size_t a) const override { return traits_.length(family_[a]); }
  std::string key(std::size_t a) const override {
    return traits_.serialize(family_[a]);
  }
  std::string empty_key() const override {
    return traits_.serialize(typename Traits::Approx{});
  }
  std::string restrict_key(std::size_t a, int j) const override {
    check_bound(a, j);
    return traits_.serialize(traits_.restrict_to(family_[a], j));
  }
  int restrict_length(std::size_t a, int j) const override {
    check_bound(a, j);
    return traits_.length(traits_.restrict_to(family_[a], j));
  }
  std::string restrict2_key(std::size_t a, int j, int i) const override {
    return traits_.serialize(
        traits_.restrict_to(traits_.restrict_to(family_[a], j), i));
  }
  std::string prefix_key(std::size_t a, int j) const override {
    return traits_.prefix_serial(family_[a], j);
  }
  bool leq_fin(std::size_t a, std::size_t b) const override {
    return traits_.leq_fin(family_[a], family_[b]);
  }
  std::vector<std::string> leq_fin_keys(std::size_t b) const override {
    std::vector<std::string> out;
    for (const auto& x : traits_.leq_fin_set(family_[b]))
      out.push_back(traits_.serialize(x));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  void check_bound(std::size_t a, int j) const {
    if (j < 0 || j > traits_.length(family_[a]))
      fail(Errc::index_out_of_range,
           "restriction length " + std::to_string(j) +
               " exceeds the approximation length " +
               std::to_string(traits_.length(family_[a])));
  }

  Traits traits_;
  std::vector<typename Traits::Approx> family_;
};

std::vector<FinFunc> fin_pool(int k, int window) {
  std::vector<FinFunc> pool;
  std::vector<int> values(window, 0);
  for (;;) {
    int max_value = 0;
    for (int v : values) max_value = std::max(max_value, v);
    if (max_value == k) {
      std::vector<std::pair<int, int>> entries;
      for (int pos = 0; pos < window; ++pos)
        if (values[pos] > 0) entries.emplace_back(pos, values[pos]);
      pool.emplace_back(k, std::move(entries));
    }
    int carry = window - 1;
    while (carry >= 0 && values[carry] == k) values[carry--] = 0;
    if (carry < 0) break;
    ++values[carry];
  }
  std::sort(pool.begin(), pool.end(), [](const FinFunc& a, const FinFunc& b) {
    if (a.min_support() != b.min_support())
      return a.min_support() < b.min_support();
    return a.entries() < b.entries();
  });
  return pool;
}

}  // namespace

std::unique_ptr<SpaceFragment> make_fragment(const SpaceId& space, int depth,
                                             const AuditBudget& budget) {
  if (depth < 1) fail(Errc::degenerate_input, "depth must be >= 1");
  if (depth > 8)
    fail(Errc::budget_exceeded,
         "audit families explode past depth 8; raise in code if ever needed");
  switch (space.family) {
    case Family::laflamme:
      return std::make_unique<FragmentImpl<LaflammeTraits>>(
          LaflammeTraits{space.param}, depth, budget);
    case Family::ellentuck_hd: {
      EllentuckTraits traits;
      traits.k = space.param;
      traits.witness = canonical_dk_member(space.param, depth + 2).leaves;
      return std::make_unique<FragmentImpl<EllentuckTraits>>(std::move(traits),
                                                             depth, budget);
    }
    case Family::hypercube:
    case Family::cliquefree:
      return std::make_unique<FragmentImpl<FraisseTraits>>(FraisseTraits{space},
                                                           depth, budget);
    case Family::fin: {
      FinTraits traits;
      traits.k = space.param;
      const int window = std::min(depth + 2, 8);
      traits.pool = fin_pool(space.param, window);
      return std::make_unique<FragmentImpl<FinTraits>>(std::move(traits), depth,
                                                       budget);
    }
    case Family::carlson_simpson:
      return std::make_unique<FragmentImpl<CarlsonTraits>>(CarlsonTraits{},
                                                           depth, budget);
  }
  fail(Errc::unsupported_space, "no enumerator registered for this space");
}

std::unique_ptr<SpaceFragment> make_corrupt_fragment(int depth,
                                                     const AuditBudget& budget) {
  CorruptTraits traits;
  traits.level = 1;
  return std::make_unique<FragmentImpl<CorruptTraits>>(std::move(traits), depth,
                                                       budget);
}

AuditReport audit_axioms(const SpaceFragment& fragment, const SpaceId& space,
                         int depth, const AuditBudget& budget) {
  if (depth < 1) fail(Errc::degenerate_input, "depth must be >= 1");
  AuditReport report;
  report.space = space;
  report.depth = depth;

  {
    AuditCheck check{"A.1(a)", true, ""};
    const std::string empty = fragment.empty_key();
    for (std::size_t a = 0; a < fragment.count() && check.pass; ++a)
      if (fragment.restrict_key(a, 0) != empty) {
        check.pass = false;
        check.witness = "restrict(" + fragment.key(a) +
                        ", 0) = " + fragment.restrict_key(a, 0);
      }
    report.checks.push_back(std::move(check));
  }

  {
    AuditCheck check{"A.1(c)", true, ""};
    std::map<std::string, int> length_of;
    std::map<std::string, std::string> history_of;
    for (std::size_t a = 0; a < fragment.count() && check.pass; ++a) {
      const int len = fragment.length(a);
      for (int j = 0; j <= len && check.pass; ++j) {
        const std::string rj = fragment.restrict_key(a, j);
        if (fragment.restrict_length(a, j) != j) {
          check.pass = false;
          check.witness = "restrict(" + fragment.key(a) + ", " +
                          std::to_string(j) + ") has wrong length: " + rj;
          break;
        }
        if (fragment.immutable_blocks() && rj != fragment.prefix_key(a, j)) {
          check.pass = false;
          check.witness = "restrict(" + fragment.key(a) + ", " +
                          std::to_string(j) + ") = " + rj +
                          " is not the block prefix " + fragment.prefix_key(a, j);
          break;
        }
        for (int i = 0; i <= j && check.pass; ++i)
          if (fragment.restrict2_key(a, j, i) != fragment.restrict_key(a, i)) {
            check.pass = false;
            check.witness = "restrict(restrict(" + fragment.key(a) + ", " +
                            std::to_string(j) + "), " + std::to_string(i) +
                            ") != restrict(a, " + std::to_string(i) + ")";
          }
        if (!check.pass) break;
        auto [lit, fresh] = length_of.emplace(rj, j);
        if (!fresh && lit->second != j) {
          check.pass = false;
          check.witness = "approximation " + rj + " arises at lengths " +
                          std::to_string(lit->second) + " and " +
                          std::to_string(j);
          break;
        }
        std::string history;
        for (int i = 0; i < j; ++i) history += fragment.restrict_key(a, i) + "#";
        auto [hit, hfresh] = history_of.emplace(rj, history);
        if (!hfresh && hit->second != history) {
          check.pass = false;
          check.witness = "equal restrictions " + rj +
                          " disagree on earlier restrictions";
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  {
    AuditCheck check{"A.2(a)", true, ""};
    std::vector<std::string> family_keys(fragment.count());
    for (std::size_t a = 0; a < fragment.count(); ++a)
      family_keys[a] = fragment.key(a);
    // Spread the fully-enumerated bases across the family so every length is
    // represented when the budget truncates.
    std::vector<std::size_t> bases;
    if (fragment.count() <= static_cast<std::size_t>(budget.leq_fin_bases)) {
      for (std::size_t b = 0; b < fragment.count(); ++b) bases.push_back(b);
    } else {
      const std::size_t stride = fragment.count() / budget.leq_fin_bases + 1;
      for (std::size_t b = 0; b < fragment.count(); b += stride)
        bases.push_back(b);
    }
    for (std::size_t bi = 0; bi < bases.size() && check.pass; ++bi) {
      const std::size_t b = bases[bi];
      const std::vector<std::string> keys = fragment.leq_fin_keys(b);
      if (!std::binary_search(keys.begin(), keys.end(), family_keys[b])) {
        check.pass = false;
        check.witness = "down-set of " + family_keys[b] + " misses itself";
        break;
      }
      for (std::size_t a = 0; a < fragment.count() && check.pass; ++a) {
        const bool predicate = fragment.leq_fin(a, b);
        const bool listed =
            std::binary_search(keys.begin(), keys.end(), family_keys[a]);
        if (predicate != listed) {
          check.pass = false;
          check.witness = "down-set of " + family_keys[b] +
                          (predicate ? " misses " : " wrongly lists ") +
                          family_keys[a];
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  std::sort(report.checks.begin(), report.checks.end(),
            [](const AuditCheck& x, const AuditCheck& y) {
              return x.axiom < y.axiom;
            });
  return report;
}

AuditReport audit_axioms(const SpaceId& space, int depth,
                         const AuditBudget& budget) {
  auto fragment = make_fragment(space, depth, budget);
  return audit_axioms(*fragment, space, depth, budget);
}

}  // namespace ramsey
