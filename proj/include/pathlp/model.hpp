#pragma once

#include <string>
#include <vector>

#include "pathlp/linalg.hpp"

namespace pathlp {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, Equal, GreaterEqual };

// User-facing linear program: optimize objective over rows of
// inequality/equality constraints, variables implicitly nonnegative.
struct GeneralProblem {
  struct Row {
    std::vector<double> coeffs;
    Relation rel = Relation::Equal;
    double rhs = 0.0;
  };

  Sense sense = Sense::Minimize;
  std::vector<double> objective;
  std::vector<Row> rows;

  int num_vars() const { return static_cast<int>(objective.size()); }

  // Throws std::invalid_argument on empty objective, missing rows, ragged
  // coefficient vectors, or non-finite data.
  void validate() const;
};

// Where a standard-form column came from.
struct ColumnOrigin {
  enum class Kind { Original, Slack, Surplus };
  Kind kind = Kind::Original;
  int index = 0;  // variable index for Original, row index for Slack/Surplus
};

// Equality-form problem: minimize c^T x subject to A x = b, x >= 0.
struct StandardProblem {
  Matrix A;
  std::vector<double> b;
  std::vector<double> c;
  // Indexed by pre-permutation column: what each column represents.
  std::vector<ColumnOrigin> var_map;
  // col_perm[j] = pre-permutation column sitting at position j of A.
  std::vector<int> col_perm;
  int num_original_vars = 0;
};

// Converts to equality form: negates the objective for maximize and adds one
// slack (+1) per <= row and one surplus (-1) per >= row, all with zero cost.
StandardProblem to_standard(const GeneralProblem& p);

// Maps a standard-form point back to the original variables, undoing the
// column permutation and discarding slack/surplus values.
// Throws std::invalid_argument on length mismatch or non-finite input.
std::vector<double> recover_solution(const StandardProblem& sp,
                                     const std::vector<double>& x_std);

}  // namespace pathlp
