#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetagraph/graph.hpp"
#include "zetagraph/poly.hpp"
#include "zetagraph/voltage.hpp"

namespace zg {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cap on partial-walk extensions; shared across calls that take it by reference.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}
  void spend(std::uint64_t k = 1) {
    used_ += k;
    if (used_ > limit_)
      throw BudgetExceeded("enumeration budget of " + std::to_string(limit_) + " extensions exceeded");
  }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Number of reduced cycles (arc sequences, cyclically non-backtracking) of length k.
std::uint64_t count_reduced_cycles(const Graph& g, unsigned k, Budget& budget);
/// counts[k] for k = 0..L (counts[0] = 0), one enumeration pass.
std::vector<std::uint64_t> reduced_cycle_counts(const Graph& g, unsigned max_len, Budget& budget);

/// Number of reduced alternating cycles of length k; zero for odd k.
std::uint64_t count_reduced_alt_cycles(const Digraph& d, unsigned k, Budget& budget);
std::vector<std::uint64_t> reduced_alt_cycle_counts(const Digraph& d, unsigned max_len, Budget& budget);

enum class CycleKind { reduced, alternating };

/// An equivalence class of cycles, stored by its rotation-minimal member.
///
/// For alternating cycles links[i] says how arc i meets arc i+1 (cyclically):
/// 0 when they share an origin, 1 when they share a terminus. The ordering
/// key of position i is 2 * arc + link.
struct CycleClass {
  std::vector<ArcId> rep;
  std::vector<int> links;
  CycleKind kind = CycleKind::reduced;
  bool prime = true;
  std::size_t length() const noexcept { return rep.size(); }
  friend bool operator==(const CycleClass&, const CycleClass&) = default;
};

/// Prime classes of reduced cycles of length <= L, sorted by (length, rep).
std::vector<CycleClass> prime_classes(const Graph& g, unsigned max_len, Budget& budget);
/// Prime classes of reduced alternating cycles of length <= L.
std::vector<CycleClass> prime_alt_classes(const Digraph& d, unsigned max_len, Budget& budget);

/// prod (1 - t^|C|)^-1 over the classes, to the given order.
TruncatedSeries euler_truncation(const std::vector<CycleClass>& classes, std::size_t order);

/// One prime reduced cycle class of G and the alternating classes it maps to.
struct CorrespondenceEntry {
  CycleClass cycle;
  std::vector<CycleClass> images;
};

struct CorrespondenceReport {
  std::vector<CorrespondenceEntry> entries;
  std::size_t alt_class_count = 0;
  bool pairing_ok = true;    ///< even -> 2 classes of equal length, odd -> 1 of double length
  bool bijection_ok = true;  ///< images are distinct and cover every alternating class
  std::vector<std::string> problems;
  bool ok() const { return pairing_ok && bijection_ok; }
};

/// Checks that prime reduced cycles of G (even length <= L, odd length <= L/2)
/// map bijectively onto the prime reduced alternating cycles of D(G) of length <= L.
CorrespondenceReport correspondence_check(const Graph& g, unsigned max_len, Budget& budget);

/// Counts of non-backtracking alternating walks by direct enumeration.
struct WalkCountMatrices {
  std::vector<Matrix<long>> p;  ///< start with an out-edge
  std::vector<Matrix<long>> q;  ///< start with an in-edge
  std::vector<Matrix<long>> r;  ///< 2n x 2n block assembly
};

WalkCountMatrices nbtaw_matrices(const Digraph& d, unsigned max_len, Budget& budget);

struct ResolventReport {
  long max_residual = 0;
  std::vector<long> residual_by_order;
};

/// Coefficientwise residual of (sum_k t^k r_k)(I - t calA + t^2 (Delta - I)) - (1 - t^2) I
/// for orders 0..K.
ResolventReport resolvent_identity_check(const Digraph& d, unsigned max_len, Budget& budget);

/// sum over reduced cycles of length k of tr rho(alpha(e_1) ... alpha(e_k)), k = 0..L.
std::vector<Complex> weighted_reduced_cycle_sums(const VoltageGraph& vg, const Representation& rho,
                                                 unsigned max_len, Budget& budget);

/// Same for reduced alternating cycles of a voltage digraph; an arc traversed
/// along its direction contributes alpha(e), against it alpha(e)^-1.
std::vector<Complex> weighted_alt_cycle_sums(const VoltageDigraph& vd, const Representation& rho,
                                             unsigned max_len, Budget& budget);

}  // namespace zg
