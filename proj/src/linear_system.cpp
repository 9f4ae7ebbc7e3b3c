#include "cubestrata/linear_system.hpp"

#include <algorithm>
#include <limits>

namespace cubestrata {

namespace {

// Internal FM row over (x_1..x_n, lambda); always a weak inequality
// coeffs . y >= rhs. Multipliers refer to expanded input rows.
struct Row {
  std::vector<Rat> c;
  Rat rhs;
  std::map<int, Rat> mult;
};

void normalize(Row& r) {
  Int num_gcd = 0, den_lcm = 1;
  auto feed = [&](const Rat& q) {
    if (q == 0) return;
    Int n = abs(Int(q.get_num()));
    Int d = Int(q.get_den());
    num_gcd = num_gcd == 0 ? n : gcd(num_gcd, n);
    den_lcm = lcm(den_lcm, d);
  };
  for (const Rat& q : r.c) feed(q);
  feed(r.rhs);
  if (num_gcd == 0) return;
  Rat scale(den_lcm, num_gcd);
  if (scale == 1) return;
  for (Rat& q : r.c) q *= scale;
  r.rhs *= scale;
  for (auto& [k, v] : r.mult) v *= scale;
}

bool all_zero(const std::vector<Rat>& v) {
  for (const Rat& q : v)
    if (q != 0) return false;
  return true;
}

}  // namespace

LpResult lp_feasible(const LinearSystem& sys) {
  const int n = sys.nvars;
  if (n < 1) throw DimensionMismatch("lp_feasible: need at least one variable");
  for (const LinRow& r : sys.rows)
    if (static_cast<int>(r.coeffs.size()) != n)
      throw DimensionMismatch("lp_feasible: row length mismatch");

  // Expand: equalities become two inequalities, strict rows get -lambda.
  std::vector<Row> rows;
  int expanded_index = 0;
  auto push = [&](const std::vector<Rat>& c, const Rat& rhs, const Rat& lam) {
    Row r;
    r.c = c;
    r.c.push_back(lam);
    r.rhs = rhs;
    r.mult[expanded_index++] = 1;
    normalize(r);
    rows.push_back(std::move(r));
  };
  for (const LinRow& r : sys.rows) {
    switch (r.kind) {
      case LinRow::GE:
        push(r.coeffs, r.rhs, 0);
        break;
      case LinRow::GT:
        push(r.coeffs, r.rhs, -1);
        break;
      case LinRow::EQ: {
        push(r.coeffs, r.rhs, 0);
        std::vector<Rat> neg(r.coeffs);
        for (Rat& q : neg) q = -q;
        push(neg, -r.rhs, 0);
        break;
      }
    }
  }

  LpResult res;
  auto contradiction = [&](const Row& r, bool strict_weight) {
    FarkasCertificate cert;
    for (const auto& [k, v] : r.mult) cert.multipliers.push_back({k, v});
    cert.combined_rhs = r.rhs;
    cert.combined_strict = strict_weight;
    res.feasible = false;
    res.refutation = cert;
  };

  std::vector<std::pair<int, std::vector<Row>>> stack;  // (var, rows before)

  // Eliminate x_0..x_{n-1}; lambda (index n) stays last.
  std::vector<bool> eliminated(n, false);
  for (int step = 0; step < n; ++step) {
    // choose the variable minimizing #lower * #upper
    int best = -1;
    long best_cost = std::numeric_limits<long>::max();
    for (int j = 0; j < n; ++j) {
      if (eliminated[j]) continue;
      long lo = 0, up = 0;
      for (const Row& r : rows) {
        if (r.c[j] > 0) ++lo;
        if (r.c[j] < 0) ++up;
      }
      long cost = lo * up;
      if (cost < best_cost) {
        best_cost = cost;
        best = j;
      }
    }
    int j = best;
    eliminated[j] = true;
    stack.push_back({j, rows});

    std::vector<Row> next;
    std::vector<const Row*> lower, upper;
    for (const Row& r : rows) {
      if (r.c[j] > 0)
        lower.push_back(&r);
      else if (r.c[j] < 0)
        upper.push_back(&r);
      else
        next.push_back(r);
    }
    for (const Row* lo : lower)
      for (const Row* up : upper) {
        Row r;
        r.c.resize(n + 1);
        Rat a = 1 / lo->c[j], b = 1 / -up->c[j];
        for (int k = 0; k <= n; ++k) r.c[k] = a * lo->c[k] + b * up->c[k];
        r.rhs = a * lo->rhs + b * up->rhs;
        r.mult = lo->mult;
        for (auto& [idx, v] : r.mult) v *= a;
        for (const auto& [idx, v] : up->mult) r.mult[idx] += b * v;
        normalize(r);
        next.push_back(std::move(r));
      }

    // prune trivial rows, detect constant contradictions, dedupe
    std::vector<Row> kept;
    for (Row& r : next) {
      if (all_zero(r.c)) {
        if (r.rhs > 0) {
          contradiction(r, false);
          return res;
        }
        continue;
      }
      bool dup = false;
      for (Row& k : kept)
        if (k.c == r.c) {
          dup = true;
          if (r.rhs > k.rhs) k = r;
          break;
        }
      if (!dup) kept.push_back(std::move(r));
    }
    rows = std::move(kept);
  }

  // Only lambda is left, with coefficients <= 0 (strict rows contribute -1).
  bool has_upper = false;
  Rat upper_bound;
  const Row* upper_row = nullptr;
  for (const Row& r : rows) {
    if (r.c[n] == 0) {
      if (r.rhs > 0) {
        contradiction(r, false);
        return res;
      }
      continue;
    }
    Rat u = r.rhs / r.c[n];  // c < 0: lambda <= rhs/c
    if (!has_upper || u < upper_bound) {
      has_upper = true;
      upper_bound = u;
      upper_row = &r;
    }
  }
  if (has_upper && upper_bound <= 0) {
    contradiction(*upper_row, true);
    return res;
  }

  // Feasible: back-substitute.
  res.feasible = true;
  std::vector<Rat> val(n + 1, Rat(0));
  val[n] = has_upper ? upper_bound / 2 : Rat(1);
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    int j = it->first;
    bool has_lo = false, has_up = false;
    Rat lo, up;
    for (const Row& r : it->second) {
      if (r.c[j] == 0) continue;
      Rat rest = r.rhs;
      for (int k = 0; k <= n; ++k)
        if (k != j && r.c[k] != 0) rest -= r.c[k] * val[k];
      Rat bound = rest / r.c[j];
      if (r.c[j] > 0) {
        if (!has_lo || bound > lo) {
          has_lo = true;
          lo = bound;
        }
      } else {
        if (!has_up || bound < up) {
          has_up = true;
          up = bound;
        }
      }
    }
    if (has_lo && has_up)
      val[j] = (lo + up) / 2;
    else if (has_lo)
      val[j] = lo;
    else if (has_up)
      val[j] = up;
  }
  res.witness.assign(val.begin(), val.begin() + n);
  return res;
}

bool check_refutation(const LinearSystem& sys, const FarkasCertificate& cert) {
  // Rebuild the expanded row list indices exactly as lp_feasible does.
  struct ERow {
    std::vector<Rat> c;
    Rat rhs;
    bool strict;
  };
  std::vector<ERow> expanded;
  for (const LinRow& r : sys.rows) {
    switch (r.kind) {
      case LinRow::GE:
        expanded.push_back({r.coeffs, r.rhs, false});
        break;
      case LinRow::GT:
        expanded.push_back({r.coeffs, r.rhs, true});
        break;
      case LinRow::EQ: {
        expanded.push_back({r.coeffs, r.rhs, false});
        std::vector<Rat> neg(r.coeffs);
        for (Rat& q : neg) q = -q;
        expanded.push_back({neg, -r.rhs, false});
        break;
      }
    }
  }
  std::vector<Rat> combo(sys.nvars, Rat(0));
  Rat rhs = 0;
  bool strict = false;
  for (const auto& [idx, mu] : cert.multipliers) {
    if (idx < 0 || idx >= static_cast<int>(expanded.size()) || mu < 0) return false;
    for (int k = 0; k < sys.nvars; ++k) combo[k] += mu * expanded[idx].c[k];
    rhs += mu * expanded[idx].rhs;
    if (expanded[idx].strict && mu > 0) strict = true;
  }
  if (!all_zero(combo)) return false;
  // 0 >= rhs with rhs > 0, or 0 > rhs with rhs >= 0: contradiction holds.
  return strict ? rhs >= 0 : rhs > 0;
}

}  // namespace cubestrata
