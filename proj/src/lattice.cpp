#include "epichain/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace epichain {

  namespace {

    using Element = FiniteLattice::Element;

    // Fills join/meet from leq. Returns an error message if leq is not a
    // lattice order.
    std::optional<std::string> lattice_tables(std::size_t              m,
                                              std::vector<char> const& leq,
                                              std::vector<Element>&    join,
                                              std::vector<Element>&    meet) {
      if (m == 0) {
        return "a lattice needs at least one element";
      }
      if (leq.size() != m * m) {
        return "order relation has the wrong size";
      }
      auto le = [&](Element x, Element y) { return leq[x * m + y] != 0; };
      for (Element x = 0; x < m; ++x) {
        if (!le(x, x)) {
          return "order is not reflexive at " + std::to_string(x);
        }
        for (Element y = 0; y < m; ++y) {
          if (x != y && le(x, y) && le(y, x)) {
            return "order is not antisymmetric at (" + std::to_string(x) + ", "
                   + std::to_string(y) + ")";
          }
          if (!le(x, y)) {
            continue;
          }
          for (Element z = 0; z < m; ++z) {
            if (le(y, z) && !le(x, z)) {
              return "order is not transitive at (" + std::to_string(x) + ", "
                     + std::to_string(y) + ", " + std::to_string(z) + ")";
            }
          }
        }
      }
      std::vector<std::size_t> up(m, 0), down(m, 0);
      for (Element x = 0; x < m; ++x) {
        for (Element y = 0; y < m; ++y) {
          up[x] += le(x, y);
          down[x] += le(y, x);
        }
      }
      join.assign(m * m, 0);
      meet.assign(m * m, 0);
      // The upper bounds of {x, y} form an up-set, so their least element u,
      // if any, has exactly |upper bounds| elements above it.
      for (Element x = 0; x < m; ++x) {
        for (Element y = 0; y < m; ++y) {
          std::size_t uppers = 0, lowers = 0;
          for (Element z = 0; z < m; ++z) {
            uppers += le(x, z) && le(y, z);
            lowers += le(z, x) && le(z, y);
          }
          bool found_join = false, found_meet = false;
          for (Element z = 0; z < m; ++z) {
            if (!found_join && le(x, z) && le(y, z) && up[z] == uppers) {
              join[x * m + y] = z;
              found_join      = true;
            }
            if (!found_meet && le(z, x) && le(z, y) && down[z] == lowers) {
              meet[x * m + y] = z;
              found_meet      = true;
            }
          }
          if (!found_join) {
            return "elements " + std::to_string(x) + " and " + std::to_string(y)
                   + " have no join";
          }
          if (!found_meet) {
            return "elements " + std::to_string(x) + " and " + std::to_string(y)
                   + " have no meet";
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  FiniteLattice::FiniteLattice(std::size_t size, std::vector<char> leq)
      : size_(size), leq_(std::move(leq)) {
    for (auto& c : leq_) {
      c = c != 0;
    }
    if (auto err = lattice_tables(size_, leq_, join_, meet_)) {
      throw NotALattice(*err);
    }
    bottom_ = meet_[0];
    top_    = join_[0];
    for (Element x = 1; x < size_; ++x) {
      bottom_ = meet(bottom_, x);
      top_    = join(top_, x);
    }
  }

  FiniteLattice FiniteLattice::from_relation(std::size_t                                     size,
                                             std::span<const std::pair<Element, Element>> pairs) {
    std::vector<char> leq(size * size, 0);
    for (Element x = 0; x < size; ++x) {
      leq[x * size + x] = 1;
    }
    for (auto [x, y] : pairs) {
      if (x >= size || y >= size) {
        throw NotALattice("order pair (" + std::to_string(x) + ", " + std::to_string(y)
                          + ") out of range");
      }
      leq[x * size + y] = 1;
    }
    // Warshall
    for (Element k = 0; k < size; ++k) {
      for (Element i = 0; i < size; ++i) {
        if (!leq[i * size + k]) {
          continue;
        }
        for (Element j = 0; j < size; ++j) {
          if (leq[k * size + j]) {
            leq[i * size + j] = 1;
          }
        }
      }
    }
    return FiniteLattice(size, std::move(leq));
  }

  FiniteLattice FiniteLattice::dual() const {
    std::vector<char> leq(size_ * size_);
    for (Element x = 0; x < size_; ++x) {
      for (Element y = 0; y < size_; ++y) {
        leq[x * size_ + y] = leq_[y * size_ + x];
      }
    }
    return FiniteLattice(size_, std::move(leq));
  }

  std::vector<std::pair<Element, Element>> FiniteLattice::covers() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element x = 0; x < size_; ++x) {
      for (Element y = 0; y < size_; ++y) {
        if (x == y || !leq(x, y)) {
          continue;
        }
        bool between = false;
        for (Element z = 0; z < size_ && !between; ++z) {
          between = z != x && z != y && leq(x, z) && leq(z, y);
        }
        if (!between) {
          out.emplace_back(x, y);
        }
      }
    }
    return out;
  }

  FiniteLattice chain_lattice(std::size_t m) {
    std::vector<std::pair<Element, Element>> pairs;
    for (Element x = 0; x + 1 < m; ++x) {
      pairs.emplace_back(x, x + 1);
    }
    return FiniteLattice::from_relation(m, pairs);
  }

  FiniteLattice pentagon() {
    std::pair<Element, Element> const pairs[] = {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}};
    return FiniteLattice::from_relation(5, pairs);
  }

  FiniteLattice diamond() {
    std::pair<Element, Element> const pairs[]
        = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
    return FiniteLattice::from_relation(5, pairs);
  }

  void for_each_lattice(std::size_t m, std::function<void(FiniteLattice const&)> const& visit) {
    if (m == 0) {
      return;
    }
    if (m > 6) {
      throw SizeGuardError("lattice enumeration is limited to 6 elements");
    }
    // Every finite poset has a linear extension, so every labeled lattice is
    // a relabeling of one whose order refines the integer order.
    std::vector<std::pair<Element, Element>> slots;
    for (Element i = 0; i < m; ++i) {
      for (Element j = i + 1; j < m; ++j) {
        slots.emplace_back(i, j);
      }
    }
    std::set<std::vector<char>> seen;
    std::vector<Element>        join, meet;
    std::vector<Element>        perm(m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<char> leq(m * m, 0);
      for (Element x = 0; x < m; ++x) {
        leq[x * m + x] = 1;
      }
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask >> s & 1U) {
          leq[slots[s].first * m + slots[s].second] = 1;
        }
      }
      if (lattice_tables(m, leq, join, meet)) {
        continue;
      }
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<char> relabeled(m * m);
        for (Element x = 0; x < m; ++x) {
          for (Element y = 0; y < m; ++y) {
            relabeled[perm[x] * m + perm[y]] = leq[x * m + y];
          }
        }
        seen.insert(std::move(relabeled));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    for (auto const& leq : seen) {
      visit(FiniteLattice(m, leq));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Modularity
  ////////////////////////////////////////////////////////////////////////

  bool lower_modular_at(FiniteLattice const& L, Element x, Element y, Element z) {
    return !L.leq(x, y) || L.meet(L.join(z, x), y) == L.join(L.meet(z, y), x);
  }

  bool upper_modular_at(FiniteLattice const& L, Element x, Element y, Element z) {
    return !L.leq(y, x) || L.join(L.meet(z, x), y) == L.meet(L.join(z, y), x);
  }

  ModularityCheck is_lower_modular(FiniteLattice const& L, Element x) {
    for (Element y = 0; y < L.size(); ++y) {
      for (Element z = 0; z < L.size(); ++z) {
        if (!lower_modular_at(L, x, y, z)) {
          return ModularityCheck{false, std::pair{y, z}};
        }
      }
    }
    return ModularityCheck{};
  }

  ModularityCheck is_upper_modular(FiniteLattice const& L, Element x) {
    for (Element y = 0; y < L.size(); ++y) {
      for (Element z = 0; z < L.size(); ++z) {
        if (!upper_modular_at(L, x, y, z)) {
          return ModularityCheck{false, std::pair{y, z}};
        }
      }
    }
    return ModularityCheck{};
  }

  ModularityReport analyze_element(FiniteLattice const& L, Element x) {
    return ModularityReport{x, is_lower_modular(L, x), is_upper_modular(L, x)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Partitions
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class DisjointSet {
     public:
      explicit DisjointSet(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
      }

      std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }

      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent_[std::max(x, y)] = std::min(x, y);
        }
      }

     private:
      std::vector<std::size_t> parent_;
    };

  }  // namespace

  Partition::Partition(std::vector<std::size_t> block_of) : block_of_(std::move(block_of)) {
    std::map<std::size_t, std::size_t> relabel;
    for (auto& b : block_of_) {
      auto [it, inserted] = relabel.try_emplace(b, relabel.size());
      b                   = it->second;
    }
    num_blocks_ = relabel.size();
  }

  Partition Partition::from_blocks(std::size_t                                  carrier,
                                   std::vector<std::vector<std::size_t>> const& blocks) {
    constexpr auto           unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> block_of(carrier, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (auto i : blocks[b]) {
        if (i >= carrier || block_of[i] != unset) {
          throw std::invalid_argument("blocks do not partition the carrier");
        }
        block_of[i] = b;
      }
    }
    if (std::find(block_of.begin(), block_of.end(), unset) != block_of.end()) {
      throw std::invalid_argument("blocks do not cover the carrier");
    }
    return Partition(std::move(block_of));
  }

  Partition Partition::discrete(std::size_t carrier) {
    std::vector<std::size_t> block_of(carrier);
    std::iota(block_of.begin(), block_of.end(), 0);
    return Partition(std::move(block_of));
  }

  std::vector<std::vector<std::size_t>> Partition::blocks() const {
    std::vector<std::vector<std::size_t>> out(num_blocks_);
    for (std::size_t i = 0; i < block_of_.size(); ++i) {
      out[block_of_[i]].push_back(i);
    }
    return out;
  }

  std::string Partition::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first_block = true;
    for (auto const& b : blocks()) {
      os << (first_block ? "" : ",") << '{';
      first_block = false;
      for (std::size_t i = 0; i < b.size(); ++i) {
        os << (i == 0 ? "" : ",") << b[i];
      }
      os << '}';
    }
    os << '}';
    return os.str();
  }

  bool refines(Partition const& a, Partition const& b) {
    if (a.size() != b.size()) {
      throw std::invalid_argument("partitions of different carriers");
    }
    // Map each block of a to the b-block of its least element.
    std::vector<std::size_t> image(a.num_blocks(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto& target = image[a.block_of(i)];
      if (target == static_cast<std::size_t>(-1)) {
        target = b.block_of(i);
      } else if (target != b.block_of(i)) {
        return false;
      }
    }
    return true;
  }

  Partition partition_join(Partition const& a, Partition const& b) {
    if (a.size() != b.size()) {
      throw std::invalid_argument("partitions of different carriers");
    }
    DisjointSet              uf(a.size());
    std::vector<std::size_t> first_a(a.num_blocks(), a.size()), first_b(b.num_blocks(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (auto [first, blk] : {std::pair{&first_a, a.block_of(i)}, std::pair{&first_b, b.block_of(i)}}) {
        auto& rep = (*first)[blk];
        if (rep == a.size()) {
          rep = i;
        } else {
          uf.unite(rep, i);
        }
      }
    }
    std::vector<std::size_t> block_of(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      block_of[i] = uf.find(i);
    }
    return Partition(std::move(block_of));
  }

  Partition partition_meet(Partition const& a, Partition const& b) {
    if (a.size() != b.size()) {
      throw std::invalid_argument("partitions of different carriers");
    }
    std::vector<std::size_t> block_of(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      block_of[i] = a.block_of(i) * b.num_blocks() + b.block_of(i);
    }
    return Partition(std::move(block_of));
  }

  std::size_t nonsingleton_class_count(Partition const& p) {
    std::vector<std::size_t> sizes(p.num_blocks(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      ++sizes[p.block_of(i)];
    }
    return static_cast<std::size_t>(
        std::count_if(sizes.begin(), sizes.end(), [](std::size_t n) { return n >= 2; }));
  }

  std::vector<Partition> all_partitions(std::size_t s) {
    std::vector<Partition> out;
    if (s == 0) {
      return out;
    }
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i)).
    std::vector<std::size_t> rgs(s, 0), prefix_max(s, 0);
    while (true) {
      out.emplace_back(rgs);
      std::size_t i = s;
      while (--i > 0) {
        if (rgs[i] <= prefix_max[i - 1]) {
          break;
        }
      }
      if (i == 0) {
        return out;
      }
      ++rgs[i];
      prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
      for (std::size_t j = i + 1; j < s; ++j) {
        rgs[j]        = 0;
        prefix_max[j] = prefix_max[i];
      }
    }
  }

  FiniteLattice::Element EquivalenceLattice::index_of(Partition const& p) const {
    auto it = std::find(partitions.begin(), partitions.end(), p);
    if (it == partitions.end()) {
      throw std::invalid_argument("partition " + p.to_string() + " is not in this lattice");
    }
    return static_cast<FiniteLattice::Element>(it - partitions.begin());
  }

  EquivalenceLattice equivalence_lattice(std::size_t s) {
    if (s == 0 || s > kMaxEquivalenceCarrier) {
      throw SizeGuardError("equivalence lattices are limited to carriers of size 1.."
                           + std::to_string(kMaxEquivalenceCarrier) + ", got "
                           + std::to_string(s));
    }
    auto              parts = all_partitions(s);
    std::size_t const m     = parts.size();
    std::vector<char> leq(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        leq[i * m + j] = refines(parts[i], parts[j]);
      }
    }
    return EquivalenceLattice{FiniteLattice(m, std::move(leq)), std::move(parts)};
  }

  PropositionResult verify_vv_proposition(std::size_t s) {
    auto const        eq = equivalence_lattice(s);
    PropositionResult result;
    for (Element x = 0; x < eq.lattice.size(); ++x) {
      bool const upper = is_upper_modular(eq.lattice, x).holds;
      bool const few   = nonsingleton_class_count(eq.partitions[x]) <= 1;
      ++result.partitions_checked;
      if (upper != few && result.holds) {
        result.holds     = false;
        result.violation = eq.partitions[x];
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Separation lemmas
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<char> lower_modular_flags(FiniteLattice const& L) {
      std::vector<char> flags(L.size());
      for (Element x = 0; x < L.size(); ++x) {
        flags[x] = is_lower_modular(L, x).holds;
      }
      return flags;
    }

    bool chain_hypotheses(FiniteLattice const& L, Element c1, Element c2, Element e) {
      return L.leq(c1, c2) && L.leq(L.meet(e, c2), c1) && L.join(e, c1) == L.join(e, c2);
    }
  }  // namespace

  SeparationResult chain_separation_check(FiniteLattice const& L) {
    auto const lm = lower_modular_flags(L);
    for (Element c1 = 0; c1 < L.size(); ++c1) {
      if (!lm[c1]) {
        continue;
      }
      for (Element c2 = 0; c2 < L.size(); ++c2) {
        for (Element e = 0; e < L.size(); ++e) {
          if (chain_hypotheses(L, c1, c2, e) && c1 != c2) {
            return SeparationResult{false, Triple{c1, c2, e}};
          }
        }
      }
    }
    return SeparationResult{};
  }

  SeparationResult antichain_separation_check(FiniteLattice const& L) {
    auto const lm = lower_modular_flags(L);
    for (Element a1 = 0; a1 < L.size(); ++a1) {
      if (!lm[a1]) {
        continue;
      }
      for (Element a2 = 0; a2 < L.size(); ++a2) {
        for (Element e = 0; e < L.size(); ++e) {
          bool const hyp = L.leq(L.meet(e, L.join(a1, a2)), a1) && L.leq(a2, L.join(e, a1));
          if (hyp && !L.leq(a2, a1)) {
            return SeparationResult{false, Triple{a1, a2, e}};
          }
        }
      }
    }
    return SeparationResult{};
  }

  std::optional<Triple> separation_mutation_witness(FiniteLattice const& L) {
    auto const lm = lower_modular_flags(L);
    for (Element c1 = 0; c1 < L.size(); ++c1) {
      if (lm[c1]) {
        continue;
      }
      for (Element c2 = 0; c2 < L.size(); ++c2) {
        for (Element e = 0; e < L.size(); ++e) {
          if (c1 != c2 && chain_hypotheses(L, c1, c2, e)) {
            return Triple{c1, c2, e};
          }
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Output
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string dot_quote(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out.push_back('\\');
        }
        out.push_back(c);
      }
      out.push_back('"');
      return out;
    }
  }  // namespace

  std::string hasse_dot(FiniteLattice const& L, std::span<const std::string> labels) {
    std::ostringstream os;
    os << "digraph lattice {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=plaintext];\n";
    for (Element x = 0; x < L.size(); ++x) {
      os << "  " << x << " [label=" << dot_quote(x < labels.size() ? labels[x] : std::to_string(x))
         << "];\n";
    }
    for (auto [x, y] : L.covers()) {
      os << "  " << x << " -> " << y << " [arrowhead=none];\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace epichain
