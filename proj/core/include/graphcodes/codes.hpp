#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphcodes/matrix.hpp"
#include "graphcodes/toric.hpp"

namespace graphcodes {

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

/// Parameterized code C_X(d): generator in reduced row-echelon form.
struct CodeInstance {
  Field field;
  int d = 0;
  Matrix generator;                 // k x m, RREF
  std::vector<std::size_t> pivots;  // pivot column of each generator row
  std::size_t k = 0;                // dimension
  std::size_t m = 0;                // length |X|
};

CodeInstance make_code(const ToricSet& x, int d, std::uint64_t cap = kDefaultMonomialCap);

/// dim C_X(d), by exact rank of the evaluation matrix.
std::size_t dimension(const ToricSet& x, int d, std::uint64_t cap = kDefaultMonomialCap);

/// dim C_X(d) for d = 0, 1, ... up to and including the first d with
/// dim = |X|. Throws MonotonicityViolation if the values fail to strictly
/// increase before the plateau.
std::vector<std::size_t> hilbert_function(const ToricSet& x, std::uint64_t cap = kDefaultMonomialCap);

/// Smallest d with dim C_X(d) = |X|.
int regularity_index(const ToricSet& x, std::uint64_t cap = kDefaultMonomialCap);

enum class MinDistMethod {
  Automatic,       // exhaustive if the class count fits the budget, else information sets
  Exhaustive,      // one message per projective class
  InformationSet,  // Brouwer-Zimmermann style lower/upper bound search
};

struct MinDistResult {
  std::uint64_t distance = 0;
  MinDistMethod method = MinDistMethod::Exhaustive;
  BigInt work = 0;                 // codewords evaluated
  std::vector<Element> witness;    // a nonzero codeword of weight `distance`
};

/// (q^k - 1) / (q - 1)
BigInt projective_class_count(int q, std::size_t k);

/// Exact minimum Hamming weight of the nonzero row space of `generator`
/// (full row rank). `budget` bounds the number of codewords evaluated;
/// BudgetExceeded carries the exhaustive class count as the requirement.
MinDistResult minimum_distance(const Matrix& generator, const Field& f, std::uint64_t budget = kDefaultBudget,
                               MinDistMethod method = MinDistMethod::Automatic);

/// delta_X(d).
std::uint64_t minimum_distance(const ToricSet& x, int d, std::uint64_t budget = kDefaultBudget,
                               std::uint64_t cap = kDefaultMonomialCap);

/// Decides delta >= bound exactly, stopping as soon as the information-set
/// lower bound reaches `bound` or a lighter codeword turns up.
bool minimum_distance_at_least(const Matrix& generator, const Field& f, std::uint64_t bound,
                               std::uint64_t budget = kDefaultBudget);

struct DistanceRecord {
  int d = 0;
  std::size_t dim = 0;
  std::uint64_t distance = 0;
  std::uint64_t singleton_bound = 0;  // |X| - dim + 1
};

struct DistanceProfile {
  std::vector<DistanceRecord> rows;
  bool complete = true;              // false if the budget ran out
  std::optional<int> stopped_at;     // degree that exceeded the budget
  std::optional<BigInt> required;    // budget that degree needs
};

/// Records for d = 0..d_max. Checks the Singleton bound, strict decrease
/// while delta > 1 and delta = 1 once dim = |X|; a violation throws
/// MonotonicityViolation. Stops early (complete = false) on budget.
DistanceProfile distance_profile(const ToricSet& x, int d_max, std::uint64_t budget = kDefaultBudget,
                                 std::uint64_t cap = kDefaultMonomialCap);

}  // namespace graphcodes
