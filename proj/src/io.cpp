#include "regionsplit/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>

namespace regionsplit {

ParseError::ParseError(std::size_t line, const std::string& what)
    : UsageError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<Scalar> values;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line parsed as integers.
  bool next(Line& out) {
    std::string text;
    while (std::getline(in_, text)) {
      ++number_;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      const auto first = text.find_first_not_of(" \t");
      if (first == std::string::npos || text[first] == '#') continue;
      out.number = number_;
      out.values = parse(text);
      return true;
    }
    return false;
  }

  Line expect(const char* what) {
    Line l;
    if (!next(l)) {
      throw ParseError(number_ + 1, std::string("unexpected end of file, expected ") + what);
    }
    return l;
  }

 private:
  std::vector<Scalar> parse(const std::string& text) const {
    std::vector<Scalar> vals;
    const char* p = text.data();
    const char* end = p + text.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      if (p == end) break;
      Scalar v = 0;
      auto [q, ec] = std::from_chars(p, end, v);
      if (ec != std::errc() || (q < end && *q != ' ' && *q != '\t')) {
        const char* tok_end = p;
        while (tok_end < end && *tok_end != ' ' && *tok_end != '\t') ++tok_end;
        throw ParseError(number_, "not an integer: '" + std::string(p, tok_end) + "'");
      }
      vals.push_back(v);
      p = q;
    }
    return vals;
  }

  std::istream& in_;
  std::size_t number_ = 0;
};

void expect_count(const Line& l, std::size_t count, const char* what) {
  if (l.values.size() != count) {
    throw ParseError(l.number, std::string(what) + ": expected " + std::to_string(count) +
                                   " integers, found " + std::to_string(l.values.size()));
  }
}

void expect_end(LineReader& r) {
  Line extra;
  if (r.next(extra)) throw ParseError(extra.number, "unexpected trailing data");
}

template <typename Range>
void join(std::ostream& out, const Range& values, char sep) {
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << sep;
    out << v;
    first = false;
  }
}

void join_point(std::ostream& out, const Point& p) {
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (i > 0) out << ',';
    out << p(i);
  }
}

}  // namespace

OutcomeSet read_explicit_set(std::istream& in, bool dedupe) {
  LineReader r(in);
  const Line header = r.expect("header 'm n'");
  expect_count(header, 2, "header");
  const Scalar m = header.values[0];
  const Scalar n = header.values[1];
  if (m < 2) throw ParseError(header.number, "dimension m must be at least 2");
  if (n < 1) throw ParseError(header.number, "point count n must be at least 1");
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n));
  std::vector<std::size_t> lines;
  for (Scalar p = 0; p < n; ++p) {
    const Line l = r.expect("a point");
    expect_count(l, static_cast<std::size_t>(m), "point");
    points.push_back(Eigen::Map<const Point>(l.values.data(), m));
    lines.push_back(l.number);
  }
  expect_end(r);
  if (dedupe) return OutcomeSet::deduplicated(m, std::move(points));
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lex_less(points[a], points[b]); });
  for (std::size_t q = 1; q < order.size(); ++q) {
    const std::size_t a = order[q - 1];
    const std::size_t b = order[q];
    if (points[a] == points[b]) {
      throw ParseError(lines[b], "point " + to_string(points[b]) + " repeats line " +
                                     std::to_string(lines[a]) + " (use --dedupe)");
    }
  }
  return OutcomeSet(m, std::move(points));
}

KnapsackInstance read_knapsack(std::istream& in) {
  LineReader r(in);
  KnapsackInstance inst;
  const Line header = r.expect("item count n");
  expect_count(header, 1, "header");
  if (header.values[0] < 1) throw ParseError(header.number, "item count n must be at least 1");
  inst.n = static_cast<std::size_t>(header.values[0]);
  auto read_rows = [&](std::array<std::vector<Scalar>, 3>& rows, const char* what) {
    for (auto& row : rows) {
      const Line l = r.expect(what);
      expect_count(l, inst.n, what);
      for (Scalar v : l.values) {
        if (v < 0) throw ParseError(l.number, std::string(what) + " must be non-negative");
      }
      row = l.values;
    }
  };
  read_rows(inst.profits, "profit row");
  read_rows(inst.weights, "weight row");
  const Line caps = r.expect("capacities");
  expect_count(caps, 3, "capacities");
  for (std::size_t k = 0; k < 3; ++k) {
    if (caps.values[k] < 0) throw ParseError(caps.number, "capacities must be non-negative");
    inst.capacities[k] = caps.values[k];
  }
  expect_end(r);
  return inst;
}

void write_explicit_set(std::ostream& out, const OutcomeSet& Z) {
  out << Z.dim() << ' ' << Z.size() << '\n';
  for (const Point& z : Z) {
    for (Eigen::Index i = 0; i < z.size(); ++i) out << (i ? " " : "") << z(i);
    out << '\n';
  }
}

void write_knapsack(std::ostream& out, const KnapsackInstance& inst) {
  out << inst.n << '\n';
  auto row = [&](const auto& values) {
    join(out, values, ' ');
    out << '\n';
  };
  for (const auto& p : inst.profits) row(p);
  for (const auto& w : inst.weights) row(w);
  row(inst.capacities);
}

void write_points_csv(std::ostream& out, const OutcomeSet& N) {
  for (Eigen::Index i = 0; i < N.dim(); ++i) out << (i ? ",z" : "z") << i + 1;
  out << '\n';
  for (const Point& z : N) {
    join_point(out, z);
    out << '\n';
  }
}

void write_run_log(std::ostream& out, const std::vector<IterationRecord>& log) {
  for (const auto& r : log) {
    out << r.iter << ';' << r.box_id << ';' << (r.point ? to_string(*r.point) : "infeasible")
        << ';' << r.boxes_after << '\n';
  }
}

void write_boxes(std::ostream& out, const Decomposition& D) {
  for (const Box& b : D.boxes) {
    out << b.id << ';';
    join_point(out, b.u);
    out << '\n';
  }
}

void write_boxes(std::ostream& out, const VDecomposition& D) {
  for (const VBox& b : D.boxes) {
    out << b.id << ';';
    join_point(out, b.u);
    out << ';';
    join_point(out, b.v);
    out << ';' << (b.quasi ? 1 : 0) << '\n';
  }
}

}  // namespace regionsplit
