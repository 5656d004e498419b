#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folzar/errors.hpp"
#include "folzar/linalg.hpp"
#include "folzar/rational.hpp"

namespace folzar {

// One singularity of the foliation sitting on a configured curve.
// h is the branch-multiplicity index h_p(F,C), cs the Camacho-Sad residue
// CS(F,C,p) (0 encodes a saddle-node along its strong separatrix), z the
// optional GSV index Z(F,C,p).
struct SingularityIncidence {
  std::string point_id;
  long long h = 0;
  Rat cs;
  std::optional<long long> z;
  bool reduced_nondegenerate = true;
};

struct Curve {
  std::string id;
  long long self_int = 0;
  long long pa = 0;          // arithmetic genus
  long long geom_genus = 0;  // geometric genus, <= pa
  bool invariant = false;
  long long kf_dot = 0;      // K_F . C
  std::vector<SingularityIncidence> singularities;
  std::optional<Rat> delta_coeff;       // boundary coefficient a_i, if declared
  std::optional<long long> kx_dot_declared;  // optional K_X . C cross-check
};

// Optional ambient intersection numbers that cannot be derived from the
// configuration alone. Needed only by the effective-bounds computations.
struct AmbientProducts {
  std::optional<Rat> kf_self;  // K_F^2
  std::optional<Rat> kf_kx;    // K_F . K_X
};

struct GlobalInvariants {
  long long kx_self = 0;  // K_X^2
  long long chi = 0;      // chi(O_X)
  bool pseudoeffective = false;  // user assertion that K_F + D is pseudo-effective
  AmbientProducts ambient;
};

// Closed-world model of the surface: the configured curves, their pairwise
// intersection numbers, and the global invariants. Immutable once built;
// every operation on it is a pure function.
class CurveConfiguration {
 public:
  // inter_triples holds (i, j, multiplicity) with i != j; multiplicities are
  // symmetrized and must not conflict. Structural problems throw input_error.
  CurveConfiguration(std::vector<Curve> curves,
                     const std::vector<std::tuple<int, int, long long>>& inter_triples,
                     GlobalInvariants globals);

  int size() const { return static_cast<int>(curves_.size()); }
  const Curve& curve(int i) const { return curves_[static_cast<std::size_t>(i)]; }
  const std::vector<Curve>& curves() const { return curves_; }
  const GlobalInvariants& globals() const { return globals_; }

  // Index of a curve id; throws input_error for unknown ids.
  int index_of(const std::string& id) const;
  bool has_id(const std::string& id) const { return index_.count(id) != 0; }

  // C_i . C_j including the diagonal (self-intersections).
  long long inter(int i, int j) const {
    return inter_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  // K_X . C_i by adjunction: 2 p_a - 2 - C^2.
  long long kx_dot(int i) const {
    const Curve& c = curve(i);
    return 2 * c.pa - 2 - c.self_int;
  }

  // Gram matrix of a subset of curves, as exact rationals.
  Mat gram(const std::vector<int>& subset) const;

 private:
  std::vector<Curve> curves_;
  MatX<long long> inter_;
  GlobalInvariants globals_;
  std::map<std::string, int> index_;
};

// The pair (Delta, epsilon) defining the adjoint divisor K_F + Delta + eps K_X.
// delta maps curve index -> coefficient; entries absent from the map fall back
// to the curve's declared delta_coeff.
struct AdjointParams {
  Rat epsilon;
  std::map<int, Rat> delta;

  Rat delta_of(const CurveConfiguration& config, int i) const {
    auto it = delta.find(i);
    if (it != delta.end()) return it->second;
    const auto& declared = config.curve(i).delta_coeff;
    return declared ? *declared : Rat(0);
  }
};

// Sparse exact-rational combination of configured curves.
class QDivisor {
 public:
  QDivisor() = default;

  Rat coeff(int i) const {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? Rat(0) : it->second;
  }
  void set(int i, const Rat& value) {
    if (value.is_zero())
      coeffs_.erase(i);
    else
      coeffs_[i] = value;
  }
  void add(int i, const Rat& value) { set(i, coeff(i) + value); }

  QDivisor& operator+=(const QDivisor& other) {
    for (const auto& [i, v] : other.coeffs_) add(i, v);
    return *this;
  }
  QDivisor& scale(const Rat& s) {
    if (s.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [i, v] : coeffs_) v *= s;
    return *this;
  }

  bool empty() const { return coeffs_.empty(); }
  const std::map<int, Rat>& entries() const { return coeffs_; }
  std::vector<int> support() const;

  bool is_effective() const;
  // True when every coefficient lies in [0,1), i.e. the round-down vanishes.
  bool floor_is_zero() const;

  friend bool operator==(const QDivisor& a, const QDivisor& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const QDivisor& a, const QDivisor& b) { return !(a == b); }

 private:
  std::map<int, Rat> coeffs_;
};

// Exact bilinear pairings against the configured intersection matrix.
Rat intersection(const CurveConfiguration& config, const QDivisor& d1,
                 const QDivisor& d2);
Rat intersection(const CurveConfiguration& config, const QDivisor& d, int curve);

// D . C for D = Delta + eps K_X, with K_X . C taken from adjunction.
Rat d_dot(const CurveConfiguration& config, const AdjointParams& params, int curve);

// (K_F + Delta + eps K_X) . C.
Rat adjoint_dot(const CurveConfiguration& config, const AdjointParams& params,
                int curve);

enum class IssueSeverity { violation, warning };

struct ValidationIssue {
  IssueSeverity severity = IssueSeverity::violation;
  std::string code;     // stable machine-readable tag
  std::string subject;  // curve or point id
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool passed() const {
    for (const auto& i : issues)
      if (i.severity == IssueSeverity::violation) return false;
    return true;
  }
  std::size_t violation_count() const {
    std::size_t n = 0;
    for (const auto& i : issues)
      if (i.severity == IssueSeverity::violation) ++n;
    return n;
  }
};

// Checks every semantic invariant of the model: genus ordering, tangency
// non-negativity for non-invariant curves, the residue and index sum rules
// for invariant curves, per-incidence sanity, boundary coefficient ranges,
// and Delta . Gamma >= 0 against every invariant curve.
ValidationReport validate_configuration(const CurveConfiguration& config,
                                        const AdjointParams* params = nullptr);

}  // namespace folzar
