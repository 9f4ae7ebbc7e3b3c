#include "cubestrata/intersection.hpp"

namespace cubestrata {

PicLattice PicLattice::get(Surface s) {
  PicLattice L;
  L.name = s;
  switch (s) {
    case Surface::P2:
      L.basis = {"l"};
      L.form = {{Rat(1)}};
      L.canonical = {Rat(-3)};
      break;
    case Surface::P1xP1:
      L.basis = {"l1", "l2"};
      L.form = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
      L.canonical = {Rat(-2), Rat(-2)};
      break;
    case Surface::F1:
      L.basis = {"h", "f"};
      L.form = {{Rat(1), Rat(1)}, {Rat(1), Rat(0)}};
      L.canonical = {Rat(-2), Rat(-1)};
      break;
    case Surface::Bl3P2:
      L.basis = {"l", "e1", "e2", "e3"};
      L.form = {{Rat(1), Rat(0), Rat(0), Rat(0)},
                {Rat(0), Rat(-1), Rat(0), Rat(0)},
                {Rat(0), Rat(0), Rat(-1), Rat(0)},
                {Rat(0), Rat(0), Rat(0), Rat(-1)}};
      L.canonical = {Rat(-3), Rat(1), Rat(1), Rat(1)};
      break;
  }
  return L;
}

EpsClass EpsClass::constant(Surface s, const std::vector<Rat>& v) {
  EpsClass c;
  c.lattice = s;
  for (const Rat& q : v) c.coeffs.push_back({q, Rat(0)});
  return c;
}

EpsClass EpsClass::linear(Surface s, const std::vector<Rat>& a, const std::vector<Rat>& b) {
  EpsClass c;
  c.lattice = s;
  for (size_t i = 0; i < a.size(); ++i) c.coeffs.push_back({a[i], b[i]});
  return c;
}

EpsClass EpsClass::operator+(const EpsClass& o) const {
  if (lattice != o.lattice || coeffs.size() != o.coeffs.size())
    throw LatticeMismatch("adding classes on different lattices");
  EpsClass out = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    out.coeffs[i].a += o.coeffs[i].a;
    out.coeffs[i].b += o.coeffs[i].b;
  }
  return out;
}

EpsClass EpsClass::scaled(const Rat& c0, const Rat& c1) const {
  EpsClass out = *this;
  for (auto& q : out.coeffs) {
    Rat a = q.a * c0;
    Rat b = q.a * c1 + q.b * c0;
    // drop the eps^2 part of a coefficient: classes stay affine in eps
    if (q.b != 0 && c1 != 0)
      throw std::invalid_argument("scaling would leave the eps-affine class space");
    q.a = a;
    q.b = b;
  }
  return out;
}

std::string EpsPoly::str() const {
  std::string s = rat_to_string(c0);
  if (c1 != 0) s += " + " + rat_to_string(c1) + "*eps";
  if (c2 != 0) s += " + " + rat_to_string(c2) + "*eps^2";
  return s;
}

EpsPoly intersect(const EpsClass& x, const EpsClass& y) {
  if (x.lattice != y.lattice) throw LatticeMismatch("intersecting classes on different lattices");
  PicLattice L = PicLattice::get(x.lattice);
  if (static_cast<int>(x.coeffs.size()) != L.rank() ||
      static_cast<int>(y.coeffs.size()) != L.rank())
    throw LatticeMismatch("coefficient count does not match the lattice rank");
  EpsPoly p{Rat(0), Rat(0), Rat(0)};
  for (int i = 0; i < L.rank(); ++i)
    for (int j = 0; j < L.rank(); ++j) {
      const Rat& m = L.form[i][j];
      if (m == 0) continue;
      p.c0 += m * x.coeffs[i].a * y.coeffs[j].a;
      p.c1 += m * (x.coeffs[i].a * y.coeffs[j].b + x.coeffs[i].b * y.coeffs[j].a);
      p.c2 += m * x.coeffs[i].b * y.coeffs[j].b;
    }
  return p;
}

Rat cover_canonical_square(Surface s, const std::vector<Rat>& Da, const std::vector<Rat>& Db,
                           const std::vector<Rat>& Dc, int group_order) {
  PicLattice L = PicLattice::get(s);
  std::vector<Rat> cls(L.rank());
  for (int i = 0; i < L.rank(); ++i)
    cls[i] = L.canonical[i] + (Da[i] + Db[i] + Dc[i]) / 2;
  EpsClass x = EpsClass::constant(s, cls);
  EpsPoly sq = intersect(x, x);
  return Rat(group_order) * sq.c0;
}

namespace {

// value a + b*eps is positive for all small enough eps > 0
bool eventually_positive(const Rat& a, const Rat& b) { return a > 0 || (a == 0 && b > 0); }

Rat pair_a(const EpsClass& x, const std::vector<Rat>& test) {
  PicLattice L = PicLattice::get(x.lattice);
  Rat a = 0;
  for (int i = 0; i < L.rank(); ++i)
    for (int j = 0; j < L.rank(); ++j) a += L.form[i][j] * x.coeffs[i].a * test[j];
  return a;
}

Rat pair_b(const EpsClass& x, const std::vector<Rat>& test) {
  PicLattice L = PicLattice::get(x.lattice);
  Rat b = 0;
  for (int i = 0; i < L.rank(); ++i)
    for (int j = 0; j < L.rank(); ++j) b += L.form[i][j] * x.coeffs[i].b * test[j];
  return b;
}

}  // namespace

bool ampleness_witness(const EpsClass& x) {
  std::vector<std::vector<Rat>> tests;
  switch (x.lattice) {
    case Surface::P2:
      tests = {{Rat(1)}};  // positive degree
      break;
    case Surface::P1xP1:
      tests = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};  // both rulings
      break;
    case Surface::F1:
      // fiber f and exceptional section h - f
      tests = {{Rat(0), Rat(1)}, {Rat(1), Rat(-1)}};
      break;
    case Surface::Bl3P2: {
      // the six (-1)-curves: e_i and l - e_i - e_j
      tests = {{Rat(0), Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1), Rat(0)},
               {Rat(0), Rat(0), Rat(0), Rat(1)}, {Rat(1), Rat(-1), Rat(-1), Rat(0)},
               {Rat(1), Rat(-1), Rat(0), Rat(-1)}, {Rat(1), Rat(0), Rat(-1), Rat(-1)}};
      break;
    }
    default:
      throw UnknownLattice("no ample cone data");
  }
  for (const auto& t : tests)
    if (!eventually_positive(pair_a(x, t), pair_b(x, t))) return false;
  return true;
}

}  // namespace cubestrata
