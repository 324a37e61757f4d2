#pragma once

// Finite-dimensional Hopf algebras as sparse structure constants.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicrossed/errors.hpp"
#include "bicrossed/linalg.hpp"
#include "bicrossed/scalar.hpp"

namespace bicrossed {

enum class Level { coalgebra, algebra, bialgebra, hopf };

Level parse_level(const std::string& s);
std::string to_string(Level level);

/// Execution policy for the exhaustive verification kernels.
enum class Exec { serial, parallel };

/// One term e_left (x) e_right of a coproduct.
struct Split {
  std::size_t left;
  std::size_t right;
  Scalar coeff;
};

/// One term e_a (x) e_b (x) e_c of a double coproduct.
struct Split3 {
  std::size_t a;
  std::size_t b;
  std::size_t c;
  Scalar coeff;
};

struct HopfStructure {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  std::vector<Vec> mult;      // e_i e_j at index i*dim + j
  Vec unit;
  std::vector<Vec> comult;    // Delta(e_i) in the tensor basis a*dim + b
  std::vector<Scalar> counit;
  std::optional<Matrix> antipode;
  Level level = Level::hopf;

  const Vec& product(std::size_t i, std::size_t j) const {
    return mult[i * dim + j];
  }
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec coproduct(const Vec& a) const;
  Scalar epsilon(const Vec& a) const;
  Vec apply_antipode(const Vec& a) const;
  std::vector<Split> splits(std::size_t i) const;
  std::vector<Split3> splits3(std::size_t i) const;
  /// Position of the unit among the basis vectors, if it is one of them.
  std::optional<std::size_t> unit_index() const;
  std::string name(std::size_t i) const;
  std::string render(const Vec& v) const { return v.to_string(&basis_names); }
};

/// Linear maps are plain matrices; source/target are tracked by the caller.
using LinearMap = Matrix;

struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::vector<Violation> violations;
  std::map<std::string, std::size_t> instances;

  bool passed() const { return violations.empty(); }
  void fail(std::string axiom, std::vector<std::size_t> witness,
            std::string lhs, std::string rhs);
  void count(const std::string& axiom, std::size_t n) { instances[axiom] += n; }
  void merge(const VerificationReport& other);
  /// Orders violations by (axiom, witness) for deterministic output.
  void sort();
  std::string summary(std::size_t max_lines = 20) const;
};

/// Thrown when a constructor's built-in verification step fails.
class VerificationFailure : public Error {
 public:
  VerificationFailure(const std::string& what, VerificationReport report)
      : Error(ErrorKind::verification_failed,
              what + ": " + report.summary(5)),
        report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

/// Delta(x) = x (x) right + left (x) x. The plain (1,g)-primitive case has
/// left = g and right = the unit.
struct SkewPrimitive {
  std::size_t x;
  std::size_t left;
  std::size_t right;
};

struct PointedCertificate {
  std::vector<std::size_t> grouplikes;
  std::vector<SkewPrimitive> skew_primitives;
};

VerificationReport verify_axioms(const HopfStructure& h, Level level,
                                 Exec exec = Exec::parallel);

VerificationReport check_certificate(const HopfStructure& h,
                                     const PointedCertificate& cert);

/// m o (f (x) g) o Delta for f, g : C -> A.
LinearMap convolution(const LinearMap& f, const LinearMap& g,
                      const HopfStructure& source, const HopfStructure& target);
/// u o epsilon : C -> A.
LinearMap unit_counit(const HopfStructure& source, const HopfStructure& target);

bool is_coalgebra_map(const LinearMap& f, const HopfStructure& source,
                      const HopfStructure& target);
bool is_algebra_map(const LinearMap& f, const HopfStructure& source,
                    const HopfStructure& target);
bool is_unitary(const LinearMap& f, const HopfStructure& source,
                const HopfStructure& target);
/// r(h_(1)) (x) h_(2) == r(h_(2)) (x) h_(1) on every basis element. Throws
/// Error{not_coalgebra_map} when r is not a coalgebra map.
bool is_cocentral(const LinearMap& r, const HopfStructure& source,
                  const HopfStructure& target);

struct MapPredicates {
  bool algebra_map = false;
  bool coalgebra_map = false;
  bool unitary = false;
  bool left_linear = false;
};

/// f(i_src(a) x) == i_tgt(a) f(x) for basis a of the acting algebra.
bool is_left_linear(const LinearMap& f, const HopfStructure& source,
                    const HopfStructure& target, const LinearMap& embed_src,
                    const LinearMap& embed_tgt);

/// Evaluates all predicates; left_linear is only computed when both
/// embeddings are supplied (otherwise it stays false).
MapPredicates map_predicates(const LinearMap& f, const HopfStructure& source,
                             const HopfStructure& target,
                             const LinearMap* embed_src = nullptr,
                             const LinearMap* embed_tgt = nullptr);

HopfStructure dual_hopf(const HopfStructure& h, bool co_opposite = false);

/// Structure constants in the new basis b_j = change.columns[j].
HopfStructure rebase(const HopfStructure& h, const Matrix& change);
/// Relabels so that new basis vector j is old basis vector perm[j].
HopfStructure permute_basis(const HopfStructure& h,
                            const std::vector<std::size_t>& perm);
Matrix permutation_matrix(const std::vector<std::size_t>& perm);

/// True when every structure tensor matches exactly.
bool same_structure_constants(const HopfStructure& a, const HopfStructure& b);

struct CayleyTable {
  std::size_t order = 0;
  std::vector<std::size_t> table;  // i*order + j -> i*j
  std::vector<std::string> names;

  std::size_t at(std::size_t i, std::size_t j) const {
    return table[i * order + j];
  }
  /// Throws Error{invalid_input} unless the table is a group.
  std::size_t identity() const;
  void validate() const;
  std::size_t inverse_of(std::size_t i) const;
};

CayleyTable cyclic_group(std::size_t n, const std::string& gen = "c");

/// A Hopf algebra together with a pointed certificate for its basis.
struct PointedHopf {
  HopfStructure hopf;
  PointedCertificate cert;
};

PointedHopf group_algebra(const CayleyTable& table, Field field = Field());

}  // namespace bicrossed
