#include "cubestrata/vinberg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace cubestrata {

Int GramLattice::inner(const RootVec& x, const RootVec& y) const {
  Int s = 0;
  for (int i = 0; i < gram.rows; ++i)
    for (int j = 0; j < gram.cols; ++j)
      if (gram.at(i, j) != 0) s += x[i] * gram.at(i, j) * y[j];
  return s;
}

void GramLattice::validate() const {
  auto [pos, neg, zero] = signature(gram);
  if (pos != 1 || zero != 0)
    throw std::invalid_argument("lattice must be hyperbolic of signature (1,n)");
}

GramLattice lattice_even() {
  GramLattice L;
  L.name = "even";
  L.gram = IntMatrix(4, 4);
  L.gram.at(0, 0) = 1;
  L.gram.at(1, 1) = L.gram.at(2, 2) = L.gram.at(3, 3) = -1;
  L.default_v0 = {1, 0, 0, 0};
  return L;
}

GramLattice lattice_odd1() {
  GramLattice L;
  L.name = "odd1";
  L.gram = IntMatrix(4, 4);
  L.gram.at(0, 0) = 1;
  L.gram.at(1, 1) = -1;
  L.gram.at(2, 2) = L.gram.at(3, 3) = -2;
  L.default_v0 = {1, -1, 0, 0};
  return L;
}

GramLattice lattice_odd2() {
  GramLattice L;
  L.name = "odd2";
  L.gram = IntMatrix(4, 4);
  L.gram.at(0, 1) = L.gram.at(1, 0) = 1;
  L.gram.at(2, 2) = L.gram.at(3, 3) = -2;
  L.default_v0 = {1, 1, 0, 0};
  return L;
}

namespace {

bool vec_less(const RootVec& a, const RootVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// integer points y with (y - mu)^T A (y - mu) == radius, A positive definite
void ellipsoid_points(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& mu,
                      const Rat& radius, std::vector<std::vector<Int>>* out) {
  const int n = static_cast<int>(A.size());
  if (radius < 0) return;
  // Fincke-Pohst style decomposition: Q(y) = sum_i q_ii (y_i + sum_{j>i} q_ij y_j)^2
  std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Rat s = A[i][j];
      for (int k = 0; k < i; ++k) s -= q[k][k] * q[k][i] * q[k][j];
      if (j == i) {
        q[i][i] = s;
        if (!(s > 0)) throw std::logic_error("slice form not positive definite");
      } else {
        q[i][j] = s / q[i][i];
      }
    }
  }
  std::vector<Int> y(n);
  std::function<void(int, Rat)> rec = [&](int i, Rat rem) {
    if (i < 0) {
      if (rem == 0) out->push_back(y);
      return;
    }
    Rat u = -mu[i];
    for (int j = i + 1; j < n; ++j) u += q[i][j] * (Rat(y[j]) - mu[j]);
    // q_ii (y_i + u)^2 <= rem
    Rat bound2 = rem / q[i][i];
    Int s_hat = isqrt_floor(rat_ceil(bound2)) + 1;
    Int lo = rat_floor(-u) - s_hat - 1, hi = rat_ceil(-u) + s_hat + 1;
    for (Int t = lo; t <= hi; t += 1) {
      Rat term = (Rat(t) + u);
      term = q[i][i] * term * term;
      if (term > rem) continue;
      y[i] = t;
      rec(i - 1, rem - term);
    }
  };
  rec(n - 1, radius);
}

}  // namespace

std::vector<RootVec> roots_at_height(const GramLattice& L, const RootVec& v0, const Int& n,
                                     std::optional<long> window) {
  const int r = L.rank();
  Int v0sq = L.inner(v0, v0);
  if (v0sq < 0) throw std::invalid_argument("initial vector must satisfy v0.v0 >= 0");

  std::vector<RootVec> out;
  if (v0sq == 0) {
    if (!window) throw UnboundedSlice("isotropic slice: a coordinate window is required");
    const long w = *window;
    const long limit = 1000000;
    for (int i = 0; i < r; ++i) {
      if (!v0[i].fits_slong_p() || std::abs(v0[i].get_si()) > limit)
        throw std::invalid_argument("window search expects small initial vectors");
      for (int j = 0; j < r; ++j)
        if (!L.gram.at(i, j).fits_slong_p() || std::abs(L.gram.at(i, j).get_si()) > limit)
          throw std::invalid_argument("window search expects small Gram entries");
    }
    if (!n.fits_slong_p() || w > limit)
      throw std::invalid_argument("window search expects small heights and windows");
    // plain long arithmetic; the guards above keep every sum in range
    std::vector<long> g(static_cast<size_t>(r) * r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) g[i * r + j] = L.gram.at(i, j).get_si();
    std::vector<long> row(r, 0);
    long target = n.get_si();
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) row[j] += v0[i].get_si() * g[i * r + j];
    int pivot = -1;
    for (int j = 0; j < r; ++j)
      if (row[j] != 0) pivot = j;
    if (pivot < 0) throw std::invalid_argument("degenerate initial vector");
    // free coordinates first, the pivot coordinate is solved last
    std::vector<int> order;
    for (int j = 0; j < r; ++j)
      if (j != pivot) order.push_back(j);
    std::vector<long> x(r, 0);
    std::function<void(size_t)> loop = [&](size_t pos) {
      if (pos == order.size()) {
        long s = target;
        for (int k = 0; k < r; ++k)
          if (k != pivot) s -= row[k] * x[k];
        if (s % row[pivot] != 0) return;
        long val = s / row[pivot];
        if (std::abs(val) > w) return;
        x[pivot] = val;
        long norm = 0;
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) norm += x[i] * g[i * r + j] * x[j];
        if (norm == -1) out.push_back(RootVec(x.begin(), x.end()));
        return;
      }
      for (long t = -w; t <= w; ++t) {
        x[order[pos]] = t;
        loop(pos + 1);
      }
    };
    loop(0);
    std::sort(out.begin(), out.end(), vec_less);
    return out;
  }

  // anisotropic v0: the slice {v0.x = n} carries a definite form
  IntMatrix rowm(1, r);
  for (int j = 0; j < r; ++j) {
    Int s = 0;
    for (int i = 0; i < r; ++i) s += v0[i] * L.gram.at(i, j);
    rowm.at(0, j) = s;
  }
  SmithResult snf = smith_normal_form(rowm);
  Int g = snf.factors.empty() ? Int(0) : snf.factors[0];
  if (g == 0) throw std::invalid_argument("degenerate initial vector");
  // row * V = (g, 0, ..., 0); particular solution x0 = V * (n/g, 0, ..)
  Int scaled = snf.U.at(0, 0) * n;  // U is 1x1 = (+-1)
  if (scaled % g != 0) return out;  // empty slice
  std::vector<Int> x0(r);
  for (int i = 0; i < r; ++i) x0[i] = snf.V.at(i, 0) * (scaled / g);
  IntMatrix K(r, r - 1);
  for (int j = 1; j < r; ++j)
    for (int i = 0; i < r; ++i) K.at(i, j - 1) = snf.V.at(i, j);

  const int m = r - 1;
  // quadratic data: (x0 + K y)^T G (x0 + K y) = -1
  std::vector<std::vector<Rat>> A(m, std::vector<Rat>(m));
  std::vector<Rat> b(m);
  IntMatrix GK = L.gram.mul(K);
  IntMatrix KtGK = K.transpose().mul(GK);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) A[i][j] = Rat(-KtGK.at(i, j));
  for (int i = 0; i < m; ++i) {
    Int s = 0;
    for (int t = 0; t < r; ++t) s += x0[t] * GK.at(t, i);
    b[i] = Rat(-s);
  }
  Int c0 = L.inner(x0, x0);
  // y^T A y + 2 b^T y = c0 + 1, so center mu = -A^{-1} b and
  // (y - mu)^T A (y - mu) = c0 + 1 - b^T mu
  std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(m + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) aug[i][j] = A[i][j];
    aug[i][m] = -b[i];
  }
  for (int c = 0; c < m; ++c) {
    int p = -1;
    for (int rr = c; rr < m; ++rr)
      if (aug[rr][c] != 0) {
        p = rr;
        break;
      }
    std::swap(aug[c], aug[p]);
    for (int rr = 0; rr < m; ++rr) {
      if (rr == c || aug[rr][c] == 0) continue;
      Rat f = aug[rr][c] / aug[c][c];
      for (int k = c; k <= m; ++k) aug[rr][k] -= f * aug[c][k];
    }
  }
  std::vector<Rat> mu(m);
  for (int c = 0; c < m; ++c) mu[c] = aug[c][m] / aug[c][c];
  Rat radius = Rat(c0 + 1);
  for (int i = 0; i < m; ++i) radius -= b[i] * mu[i];

  std::vector<std::vector<Int>> ys;
  ellipsoid_points(A, mu, radius, &ys);
  for (const auto& y : ys) {
    RootVec x = x0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < m; ++j) x[i] += K.at(i, j) * y[j];
    if (L.inner(x, x) != -1) throw std::logic_error("ellipsoid enumeration error");
    out.push_back(x);
  }
  if (window) {
    std::vector<RootVec> filtered;
    for (const RootVec& x : out) {
      bool in = true;
      for (const Int& t : x)
        if (abs(t) > *window) in = false;
      if (in) filtered.push_back(x);
    }
    out = std::move(filtered);
  }
  std::sort(out.begin(), out.end(), vec_less);
  return out;
}

CoxeterDiagram coxeter_diagram(const GramLattice& L, const std::vector<RootVec>& roots) {
  CoxeterDiagram d;
  d.roots = roots;
  const int n = static_cast<int>(roots.size());
  d.gram = IntMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.gram.at(i, j) = L.inner(roots[i], roots[j]);
  return d;
}

CoxeterDiagram odd1_window_diagram(long w) {
  CoxeterDiagram d;
  std::vector<std::pair<long, long>> pts;
  for (long a = -w; a <= w; ++a)
    for (long b = -w; b <= w; ++b) pts.push_back({a, b});
  const int n = static_cast<int>(pts.size());
  d.gram = IntMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    auto [a, b] = pts[i];
    d.roots.push_back({a * a + b * b, 1 - a * a - b * b, a, b});
    for (int j = 0; j < n; ++j) {
      auto [c, e] = pts[j];
      d.gram.at(i, j) = -1 + (a - c) * (a - c) + (b - e) * (b - e);
    }
  }
  return d;
}

std::string diagram_dot(const CoxeterDiagram& d) {
  std::string s = "graph coxeter {\n";
  const int n = d.gram.rows;
  for (int i = 0; i < n; ++i) {
    s += "  v" + std::to_string(i) + " [label=\"";
    for (size_t k = 0; k < d.roots[i].size(); ++k)
      s += (k ? "," : "") + d.roots[i][k].get_str();
    s += "\"];\n";
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Int p = d.gram.at(i, j);
      if (p == 0) continue;
      s += "  v" + std::to_string(i) + " -- v" + std::to_string(j);
      if (p == 1)
        s += " [label=\"inf\"]";
      else
        s += " [style=dotted,label=\"" + p.get_str() + "\"]";
      s += ";\n";
    }
  s += "}\n";
  return s;
}

namespace {

IntMatrix induced_gram(const CoxeterDiagram& d, const std::vector<int>& verts) {
  const int k = static_cast<int>(verts.size());
  IntMatrix g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g.at(i, j) = d.gram.at(verts[i], verts[j]);
  return g;
}

bool is_elliptic(const CoxeterDiagram& d, const std::vector<int>& verts) {
  auto [pos, neg, zero] = signature(induced_gram(d, verts));
  return pos == 0 && zero == 0;
}

std::vector<std::vector<int>> components(const CoxeterDiagram& d, const std::vector<int>& verts) {
  const int k = static_cast<int>(verts.size());
  std::vector<int> comp(k, -1);
  int nc = 0;
  for (int i = 0; i < k; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = nc;
    std::vector<int> stack = {i};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < k; ++y)
        if (comp[y] < 0 && d.gram.at(verts[x], verts[y]) != 0) {
          comp[y] = nc;
          stack.push_back(y);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int i = 0; i < k; ++i) out[comp[i]].push_back(verts[i]);
  return out;
}

// parabolic: every connected component negative semidefinite of corank 1
bool is_parabolic(const CoxeterDiagram& d, const std::vector<int>& verts, int* rank) {
  auto comps = components(d, verts);
  int total_rank = 0;
  for (const auto& c : comps) {
    auto [pos, neg, zero] = signature(induced_gram(d, c));
    if (pos != 0 || zero != 1) return false;
    total_rank += static_cast<int>(c.size()) - 1;
  }
  *rank = total_rank;
  return true;
}

std::string component_label(const CoxeterDiagram& d, const std::vector<int>& c) {
  if (c.size() == 1) return "A1";
  if (c.size() == 2 && d.gram.at(c[0], c[1]) == 1) return "A1~";
  return "comp" + std::to_string(c.size());
}

std::string subset_type(const CoxeterDiagram& d, const std::vector<int>& verts) {
  std::vector<std::string> labels;
  for (const auto& c : components(d, verts)) labels.push_back(component_label(d, c));
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (size_t i = 0; i < labels.size(); ++i) out += (i ? "+" : "") + labels[i];
  return out;
}

std::vector<std::vector<int>> diagram_automorphisms(const CoxeterDiagram& d) {
  const int n = d.gram.rows;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<int>> autos;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (d.gram.at(i, j) != d.gram.at(perm[i], perm[j])) ok = false;
    if (ok) autos.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return autos;
}

}  // namespace

bool finite_volume_check(const CoxeterDiagram& d, int lattice_rank) {
  const int n = d.gram.rows;
  if (n == 0) return true;  // empty diagram: the decomposition is the full cone
  const int need = lattice_rank - 2;

  // all elliptic subdiagrams of rank `need` (= size, all roots have norm -1)
  std::vector<std::vector<int>> base;
  std::vector<int> idx(need);
  std::function<void(int, int)> gen = [&](int start, int depth) {
    if (depth == need) {
      std::vector<int> v(idx.begin(), idx.end());
      if (is_elliptic(d, v)) base.push_back(v);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[depth] = i;
      gen(i + 1, depth + 1);
    }
  };
  gen(0, 0);
  if (base.empty()) return false;

  for (const auto& S : base) {
    int extensions = 0;
    // a vertex of an elliptic or parabolic superset pairs with every member
    // of S by a product of 0 or 1 (a dotted edge makes a 2x2 block indefinite)
    auto compatible = [&](int v) {
      for (int s : S) {
        const Int& p = d.gram.at(v, s);
        if (p != 0 && p != 1) return false;
      }
      return true;
    };
    // elliptic extensions of rank need+1
    for (int v = 0; v < n; ++v) {
      if (std::find(S.begin(), S.end(), v) != S.end()) continue;
      if (!compatible(v)) continue;
      std::vector<int> T = S;
      T.push_back(v);
      if (is_elliptic(d, T)) ++extensions;
    }
    // maximal parabolic supersets (rank = lattice_rank - 2)
    std::vector<int> others;
    for (int v = 0; v < n; ++v)
      if (std::find(S.begin(), S.end(), v) == S.end() && compatible(v)) others.push_back(v);
    const int max_extra = 2 * need - static_cast<int>(S.size());
    std::vector<int> pick;
    std::function<void(int)> par = [&](int start) {
      if (!pick.empty()) {
        std::vector<int> T = S;
        T.insert(T.end(), pick.begin(), pick.end());
        int rank = 0;
        if (is_parabolic(d, T, &rank) && rank == lattice_rank - 2) ++extensions;
      }
      if (static_cast<int>(pick.size()) >= max_extra) return;
      for (int i = start; i < static_cast<int>(others.size()); ++i) {
        pick.push_back(others[i]);
        par(i + 1);
        pick.pop_back();
      }
    };
    par(0);
    if (extensions != 2) return false;
  }
  return true;
}

SubdiagramClassification classify_subdiagrams(const CoxeterDiagram& d, int lattice_rank) {
  const int n = d.gram.rows;
  auto autos = diagram_automorphisms(d);
  std::map<std::vector<int>, std::pair<std::vector<int>, int>> classes;  // canon -> (rep, count)

  auto canonical = [&](std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    std::vector<int> best = verts;
    for (const auto& a : autos) {
      std::vector<int> im;
      for (int v : verts) im.push_back(a[v]);
      std::sort(im.begin(), im.end());
      if (im < best) best = im;
    }
    return best;
  };

  SubdiagramClassification out;
  const int max_size = std::max(lattice_rank - 1, 2 * (lattice_rank - 2));
  std::vector<int> pick;
  std::function<void(int)> gen = [&](int start) {
    if (!pick.empty()) {
      if (is_elliptic(d, pick) && static_cast<int>(pick.size()) <= lattice_rank - 1) {
        auto key = canonical(pick);
        auto& e = classes[key];
        if (e.second == 0) e.first = pick;
        ++e.second;
      } else {
        int rank = 0;
        if (is_parabolic(d, pick, &rank) && rank == lattice_rank - 2) {
          auto key = canonical(pick);
          key.push_back(-1);  // separate namespace for parabolic classes
          auto& e = classes[key];
          if (e.second == 0) e.first = pick;
          ++e.second;
        }
      }
    }
    if (static_cast<int>(pick.size()) >= max_size) return;
    for (int i = start; i < n; ++i) {
      pick.push_back(i);
      gen(i + 1);
      pick.pop_back();
    }
  };
  gen(0);

  for (auto& [key, val] : classes) {
    SubdiagramClass cls;
    cls.example = val.first;
    cls.count = val.second;
    cls.type = subset_type(d, val.first);
    bool parab = !key.empty() && key.back() == -1;
    cls.parabolic = parab;
    if (parab) {
      int rank = 0;
      is_parabolic(d, val.first, &rank);
      cls.rank = rank;
      out.maximal_parabolic.push_back(cls);
    } else {
      cls.rank = static_cast<int>(val.first.size());
      out.elliptic.push_back(cls);
    }
  }
  return out;
}

VinbergRun vinberg_run(const GramLattice& L, const RootVec& v0, const Int& max_height,
                       std::optional<long> window, bool run_full) {
  L.validate();
  VinbergRun run;
  auto neg = [](const RootVec& v) {
    RootVec out;
    for (const Int& t : v) out.push_back(-t);
    return out;
  };

  // step 0: fundamental system among roots orthogonal to v0
  for (const RootVec& r : roots_at_height(L, v0, 0, window)) {
    bool ok = true;
    for (const RootVec& acc : run.accepted) {
      if (r == neg(acc) || L.inner(r, acc) < 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      run.accepted.push_back(r);
      run.accepted_height.push_back(0);
    }
  }
  bool accepted_changed = !run.accepted.empty();
  auto check_termination = [&](const Int& height) {
    if (run.terminated || run.accepted.empty() || !accepted_changed) return;
    accepted_changed = false;
    CoxeterDiagram d = coxeter_diagram(L, run.accepted);
    if (finite_volume_check(d, L.rank())) {
      run.terminated = true;
      run.stop_height = height;
    }
  };
  check_termination(0);

  for (Int n = 1; n <= max_height; n += 1) {
    if (run.terminated && !run_full) break;
    for (const RootVec& cand : roots_at_height(L, v0, n, window)) {
      const RootVec* witness = nullptr;
      for (const RootVec& acc : run.accepted)
        if (L.inner(cand, acc) < 0) {
          witness = &acc;
          break;
        }
      if (witness) {
        run.rejections.push_back({cand, *witness, n});
      } else {
        run.accepted.push_back(cand);
        run.accepted_height.push_back(n);
        accepted_changed = true;
      }
    }
    check_termination(n);
  }
  if (run.accepted.empty() && run.rejections.empty()) {
    // no roots at all: the decomposition is the full cone
    run.terminated = true;
    run.stop_height = 0;
  }
  return run;
}

std::vector<RootVec> search_norm_minus_one(const GramLattice& L, long bound) {
  const int r = L.rank();
  std::vector<Int> x(r);
  std::vector<RootVec> found;
  std::function<void(int)> loop = [&](int j) {
    if (j == r) {
      if (L.inner(x, x) == -1) found.push_back(x);
      return;
    }
    for (long t = -bound; t <= bound; ++t) {
      x[j] = t;
      loop(j + 1);
    }
  };
  loop(0);
  return found;
}

bool lattice_is_even(const GramLattice& L) {
  for (int i = 0; i < L.gram.rows; ++i)
    if (L.gram.at(i, i) % 2 != 0) return false;
  return true;
}

SubdiagramClassification classify_subdiagrams_odd1(long window, int lattice_rank) {
  if (window < 2) throw WindowTooSmall("odd1 classification needs a window of at least 2");
  // vertices (a,b) in [-window, window]^2; relevant subdiagrams have all
  // pairwise products in {0,1}, hence squared distances <= 2
  struct P {
    long a, b;
  };
  auto product = [](const P& u, const P& v) {
    return -1 + (u.a - v.a) * (u.a - v.a) + (u.b - v.b) * (u.b - v.b);
  };
  std::vector<P> pts;
  for (long a = -window; a <= window; ++a)
    for (long b = -window; b <= window; ++b) pts.push_back({a, b});

  auto canonical = [&](std::vector<P> sub) {
    // translate + 8 point symmetries, lexicographic minimum
    std::vector<std::vector<std::pair<long, long>>> images;
    for (int s = 0; s < 8; ++s) {
      std::vector<std::pair<long, long>> im;
      for (const P& p : sub) {
        long x = p.a, y = p.b;
        if (s & 1) x = -x;
        if (s & 2) y = -y;
        if (s & 4) std::swap(x, y);
        im.push_back({x, y});
      }
      long mx = im[0].first, my = im[0].second;
      for (auto& q : im) {
        mx = std::min(mx, q.first);
        my = std::min(my, q.second);
      }
      for (auto& q : im) {
        q.first -= mx;
        q.second -= my;
      }
      std::sort(im.begin(), im.end());
      images.push_back(std::move(im));
    }
    return *std::min_element(images.begin(), images.end());
  };

  std::map<std::vector<std::pair<long, long>>, std::pair<std::vector<P>, int>> ell, par;
  const int max_size = 2 * (lattice_rank - 2);

  std::vector<P> pick;
  std::function<void(size_t)> gen = [&](size_t start) {
    if (!pick.empty()) {
      // build the small diagram and classify
      CoxeterDiagram d;
      const int k = static_cast<int>(pick.size());
      d.gram = IntMatrix(k, k);
      for (int i = 0; i < k; ++i) {
        d.roots.push_back({pick[i].a, pick[i].b});
        for (int j = 0; j < k; ++j) d.gram.at(i, j) = product(pick[i], pick[j]);
      }
      std::vector<int> all(k);
      for (int i = 0; i < k; ++i) all[i] = i;
      if (is_elliptic(d, all) && k <= lattice_rank - 1) {
        auto key = canonical(pick);
        auto& e = ell[key];
        if (e.second == 0) e.first = pick;
        ++e.second;
      } else {
        int rank = 0;
        if (is_parabolic(d, all, &rank) && rank == lattice_rank - 2) {
          auto key = canonical(pick);
          auto& e = par[key];
          if (e.second == 0) e.first = pick;
          ++e.second;
        }
      }
    }
    if (static_cast<int>(pick.size()) >= max_size) return;
    for (size_t i = start; i < pts.size(); ++i) {
      bool near = true;
      for (const P& p : pick)
        if (product(p, pts[i]) > 1) {
          near = false;  // dotted edge: never elliptic or parabolic
          break;
        }
      if (!near) continue;
      pick.push_back(pts[i]);
      gen(i + 1);
      pick.pop_back();
    }
  };
  gen(0);

  SubdiagramClassification out;
  auto emit = [&](auto& m, bool parab) {
    for (auto& [key, val] : m) {
      CoxeterDiagram d;
      const int k = static_cast<int>(val.first.size());
      d.gram = IntMatrix(k, k);
      for (int i = 0; i < k; ++i) {
        d.roots.push_back({val.first[i].a, val.first[i].b});
        for (int j = 0; j < k; ++j) d.gram.at(i, j) = product(val.first[i], val.first[j]);
      }
      std::vector<int> all(k);
      for (int i = 0; i < k; ++i) all[i] = i;
      SubdiagramClass cls;
      cls.count = val.second;
      cls.type = subset_type(d, all);
      cls.parabolic = parab;
      if (parab) {
        int rank = 0;
        is_parabolic(d, all, &rank);
        cls.rank = rank;
        out.maximal_parabolic.push_back(cls);
      } else {
        cls.rank = k;
        out.elliptic.push_back(cls);
      }
    }
  };
  emit(ell, false);
  emit(par, true);
  return out;
}

}  // namespace cubestrata
