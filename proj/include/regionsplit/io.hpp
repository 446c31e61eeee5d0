// Text formats: instance files, point CSVs, box dumps and run logs.
//
// Explicit set:  "m n", then n lines of m integers.
// Knapsack:      "n", three profit rows, three weight rows, three capacities.
// Blank lines and lines starting with '#' are skipped; parse errors name the
// line they were found on.

#ifndef REGIONSPLIT_IO_HPP
#define REGIONSPLIT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "regionsplit/core.hpp"
#include "regionsplit/driver.hpp"
#include "regionsplit/solvers.hpp"

namespace regionsplit {

class ParseError : public UsageError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Repeated points are an error unless `dedupe` is set.
OutcomeSet read_explicit_set(std::istream& in, bool dedupe = false);
KnapsackInstance read_knapsack(std::istream& in);

void write_explicit_set(std::ostream& out, const OutcomeSet& Z);
void write_knapsack(std::ostream& out, const KnapsackInstance& inst);

/// Header z1,...,zm then one row per point.
void write_points_csv(std::ostream& out, const OutcomeSet& N);

/// iter;box_id;result;boxes_after with result "(a,b,c)" or "infeasible".
void write_run_log(std::ostream& out, const std::vector<IterationRecord>& log);

/// One line per box: "id;u1,...,um" (full split) or "id;u;v;quasi" (v-split).
void write_boxes(std::ostream& out, const Decomposition& D);
void write_boxes(std::ostream& out, const VDecomposition& D);

}  // namespace regionsplit

#endif  // REGIONSPLIT_IO_HPP
