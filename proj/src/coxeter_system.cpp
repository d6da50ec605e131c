#include "gccaut/coxeter_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "gccaut/errors.hpp"

namespace gccaut {

namespace {

Scalar bilinear(const ScalarMatrix& g, const ScalarVector& a, const ScalarVector& b) {
  Scalar sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero() || g[i][j].is_zero()) continue;
      sum += a[i] * g[i][j] * b[j];
    }
  }
  return sum;
}

Scalar height(const ScalarVector& v) {
  Scalar h;
  for (const auto& x : v) h += x;
  return h;
}

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

bool DiagramSymmetry::is_identity() const {
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<bool> CoxeterSystem::default_bipartition(const CoxeterMatrix& m, bool swap) {
  const int n = static_cast<int>(m.size());
  std::vector<int> colour(n, -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < n; ++v) {
        if (v == u || m[u][v] == 2) continue;
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          q.push_back(v);
        } else if (colour[v] == colour[u]) {
          throw InvalidType("Coxeter graph is not bipartite");
        }
      }
    }
  }
  std::vector<bool> black(n);
  for (int s = 0; s < n; ++s) black[s] = (colour[s] == 0) != swap;
  return black;
}

CoxeterSystem CoxeterSystem::build(const IrreducibleType& t, const BuildOptions& opts) {
  t.validate();
  auto black = default_bipartition(gccaut::coxeter_matrix(t), opts.swap_bipartition);
  if (t.family == Family::I2) return dihedral(t.k, std::move(black));
  return from_gram(t, standard_gram(t), std::move(black));
}

CoxeterSystem build_coxeter_system(const IrreducibleType& t, const BuildOptions& opts) {
  return CoxeterSystem::build(t, opts);
}

CoxeterSystem CoxeterSystem::from_gram(const IrreducibleType& label, ScalarMatrix gram,
                                       std::vector<bool> black) {
  CoxeterSystem sys;
  sys.type_ = label;
  sys.rank_ = label.rank;
  sys.cm_ = gccaut::coxeter_matrix(label);
  const int n = sys.rank_;
  if (static_cast<int>(gram.size()) != n) throw InvalidArgument("Gram matrix has wrong size");
  // The Coxeter matrix follows the realization, which may be a relabelled
  // parabolic piece of a larger diagram: recover m_st from the Gram entries.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (gram[i][j].is_zero()) {
        sys.cm_[i][j] = 2;
        continue;
      }
      // cos^2(pi/m) = g_ij^2 / (g_ii g_jj)
      Scalar c2 = gram[i][j] * gram[i][j] / (gram[i][i] * gram[j][j]);
      if (c2 == Scalar(Rational(1, 4))) sys.cm_[i][j] = 3;
      else if (c2 == Scalar(Rational(1, 2))) sys.cm_[i][j] = 4;
      else if (c2 == Scalar(Rational(3, 4))) sys.cm_[i][j] = 6;
      else if (c2 == Scalar::golden() * Scalar::golden() / Scalar(4)) sys.cm_[i][j] = 5;
      else throw InvalidType("unsupported Gram entry in realization of " + label.name());
    }
  sys.gram_ = std::move(gram);
  sys.black_ = std::move(black);

  // Reflection closure from the simple roots.
  std::vector<ScalarVector> all;
  std::unordered_map<ScalarVector, std::size_t, ScalarVectorHash> seen;
  for (int s = 0; s < n; ++s) {
    ScalarVector e(n, Scalar(0));
    e[s] = 1;
    seen.emplace(e, all.size());
    all.push_back(std::move(e));
  }
  for (std::size_t q = 0; q < all.size(); ++q) {
    for (int s = 0; s < n; ++s) {
      ScalarVector v = all[q];
      Scalar pairing;
      for (int j = 0; j < n; ++j) pairing += v[j] * sys.gram_[j][s];
      v[s] -= Scalar(2) * pairing / sys.gram_[s][s];
      if (!seen.count(v)) {
        seen.emplace(v, all.size());
        all.push_back(std::move(v));
      }
      if (all.size() > 100000) throw InvalidType("root system closure does not terminate");
    }
  }
  std::vector<ScalarVector> pos;
  for (const auto& v : all) {
    bool nonneg = std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.sign() >= 0; });
    bool nonpos = std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.sign() <= 0; });
    if (!nonneg && !nonpos) throw LemmaViolation("root with mixed-sign coordinates");
    if (nonneg) pos.push_back(v);
  }
  std::stable_sort(pos.begin() + n, pos.end(), [](const ScalarVector& a, const ScalarVector& b) {
    auto c = height(a) <=> height(b);
    if (c != 0) return c < 0;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  // Simple roots are discovered first and never move.
  std::stable_sort(pos.begin(), pos.begin() + n, [](const ScalarVector& a, const ScalarVector& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  if (static_cast<int>(pos.size()) != label.num_positive_roots())
    throw LemmaViolation("positive root count disagrees with " + label.name());
  const std::size_t N = pos.size();
  sys.roots_.resize(2 * N);
  for (std::size_t i = 0; i < N; ++i) {
    ScalarVector neg = pos[i];
    for (auto& x : neg) x = -x;
    sys.roots_[i] = Root{i, true, pos[i], -1};
    sys.roots_[i + N] = Root{i + N, false, std::move(neg), -1};
  }
  for (std::size_t i = 0; i < 2 * N; ++i) sys.root_lookup_.emplace(sys.roots_[i].coords, i);
  sys.finish();
  return sys;
}

CoxeterSystem CoxeterSystem::dihedral(int k, std::vector<bool> black) {
  CoxeterSystem sys;
  sys.type_ = IrreducibleType::make(Family::I2, 2, k);
  sys.rank_ = 2;
  sys.cm_ = gccaut::coxeter_matrix(sys.type_);
  sys.angle_k_ = k;
  sys.black_ = std::move(black);
  // Positive roots sit at angles 0..k-1; alpha_1 at 0 and alpha_2 at k-1.
  std::vector<int> angles{0, k - 1};
  for (int a = 1; a <= k - 2; ++a) angles.push_back(a);
  const std::size_t N = angles.size();
  sys.roots_.resize(2 * N);
  for (std::size_t i = 0; i < N; ++i) {
    sys.roots_[i] = Root{i, true, {}, angles[i]};
    sys.roots_[i + N] = Root{i + N, false, {}, angles[i] + k};
  }
  sys.finish();
  return sys;
}

CoxeterSystem CoxeterSystem::with_swapped_bipartition() const {
  std::vector<bool> flipped(black_.size());
  for (std::size_t i = 0; i < black_.size(); ++i) flipped[i] = !black_[i];
  if (uses_angle_model()) return dihedral(angle_k_, std::move(flipped));
  return from_gram(type_, gram_, std::move(flipped));
}

Permutation CoxeterSystem::simple_reflection_perm_coords(int s) const {
  std::vector<Permutation::value_type> img(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    ScalarVector v = roots_[i].coords;
    Scalar pairing;
    for (int j = 0; j < rank_; ++j) pairing += v[j] * gram_[j][s];
    v[s] -= Scalar(2) * pairing / gram_[s][s];
    auto it = root_lookup_.find(v);
    if (it == root_lookup_.end()) throw LemmaViolation("root set not closed under reflection");
    img[i] = static_cast<Permutation::value_type>(it->second);
  }
  return Permutation(std::move(img));
}

void CoxeterSystem::finish() {
  const int n = rank_;
  const std::size_t N = num_positive();
  for (int s = 0; s < n; ++s) (black_[s] ? black_list_ : white_list_).push_back(s);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (black_[a] == black_[b] && cm_[a][b] != 2)
        throw InvalidArgument("bipartition classes must consist of orthogonal simple roots");

  identity_ = GroupElement(Permutation::identity(roots_.size()));
  reflections_.assign(N, identity_);
  if (uses_angle_model()) {
    const int k = angle_k_;
    std::vector<std::size_t> by_angle(2 * k);
    for (const auto& r : roots_) by_angle[r.angle] = r.index;
    for (std::size_t i = 0; i < N; ++i) {
      std::vector<Permutation::value_type> img(roots_.size());
      for (const auto& r : roots_)
        img[r.index] = static_cast<Permutation::value_type>(by_angle[mod(2 * roots_[i].angle + k - r.angle, 2 * k)]);
      reflections_[i] = GroupElement(Permutation(std::move(img)));
    }
  } else {
    std::vector<char> known(N, 0);
    std::deque<std::size_t> q;
    for (int s = 0; s < n; ++s) {
      reflections_[s] = GroupElement(simple_reflection_perm_coords(s));
      known[s] = 1;
      q.push_back(s);
    }
    // t_{s(beta)} = s t_beta s.
    while (!q.empty()) {
      std::size_t b = q.front();
      q.pop_front();
      for (int s = 0; s < n; ++s) {
        std::size_t g = reflections_[s](b);
        if (g >= N || known[g]) continue;
        reflections_[g] = reflections_[s] * reflections_[b] * reflections_[s];
        known[g] = 1;
        q.push_back(g);
      }
    }
    if (std::find(known.begin(), known.end(), 0) != known.end())
      throw LemmaViolation("positive root unreachable from the simple roots");
  }

  c_black_ = identity_;
  c_white_ = identity_;
  for (int s : black_list_) c_black_ = c_black_ * reflections_[s];
  for (int s : white_list_) c_white_ = c_white_ * reflections_[s];
  c_ = c_black_ * c_white_;
  h_ = static_cast<int>(c_.perm().order());
  if (h_ != type_.coxeter_number()) throw LemmaViolation("order of c differs from the Coxeter number");
  if (2 * N != static_cast<std::size_t>(n) * h_) throw LemmaViolation("|Phi+| != nh/2");
  exponents_ = type_.exponents();

  // Steinberg indexing.
  const std::size_t r = white_list_.size();
  steinberg_seq_.assign(2 * N, 0);
  for (std::size_t i = 0; i < r; ++i) steinberg_seq_[i] = negative_of(white_list_[i]);
  for (std::size_t i = r; i < static_cast<std::size_t>(n); ++i) steinberg_seq_[i] = black_list_[i - r];
  for (std::size_t p = n; p < 2 * N; ++p) steinberg_seq_[p] = c_(steinberg_seq_[p - n]);
  steinberg_pos_.assign(2 * N, 2 * N);
  for (std::size_t p = 0; p < 2 * N; ++p) {
    if (steinberg_pos_[steinberg_seq_[p]] != 2 * N) throw LemmaViolation("Steinberg indexing repeats a root");
    steinberg_pos_[steinberg_seq_[p]] = p;
  }
  for (std::size_t p = 0; p < static_cast<std::size_t>(n); ++p)
    if (c_(steinberg_seq_[2 * N - n + p]) != steinberg_seq_[p])
      throw LemmaViolation("Steinberg indexing does not close up modulo nh");
  for (std::size_t p = r; p < r + N; ++p)
    if (!is_positive(steinberg_seq_[p])) throw LemmaViolation("Steinberg positions r..r+N are not the positive roots");
  for (std::size_t p = r + N; p < N + n; ++p)
    if (!negative_simple_index(steinberg_seq_[p]) || !black_[*negative_simple_index(steinberg_seq_[p])])
      throw LemmaViolation("Steinberg indexing does not end with -Delta_black");

  // Longest element by descent: right-multiply by s while w(alpha_s) > 0.
  w0_ = identity_;
  for (bool grew = true; grew;) {
    grew = false;
    for (int s = 0; s < n; ++s) {
      if (is_positive(w0_(s))) {
        w0_ = w0_ * reflections_[s];
        grew = true;
      }
    }
  }
  for (std::size_t i = 0; i < N; ++i)
    if (is_positive(w0_(i))) throw LemmaViolation("w0 does not send Phi+ to Phi-");
}

std::optional<int> CoxeterSystem::simple_index(std::size_t i) const {
  if (i < static_cast<std::size_t>(rank_)) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> CoxeterSystem::negative_simple_index(std::size_t i) const {
  const std::size_t N = num_positive();
  if (i >= N && i < N + rank_) return static_cast<int>(i - N);
  return std::nullopt;
}

std::optional<std::size_t> CoxeterSystem::find_root(const ScalarVector& coords) const {
  auto it = root_lookup_.find(coords);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

const GroupElement& CoxeterSystem::reflection(std::size_t root) const {
  return reflections_.at(is_positive(root) ? root : negative_of(root));
}

int CoxeterSystem::steinberg_block(std::size_t position) const {
  const std::size_t n = rank_;
  const std::size_t r = white_list_.size();
  return static_cast<int>(2 * (position / n) + (position % n >= r ? 1 : 0));
}

ScalarMatrix CoxeterSystem::matrix(const GroupElement& w) const {
  if (uses_angle_model()) throw InvalidArgument("no matrix in the dihedral angle model");
  ScalarMatrix m(rank_, ScalarVector(rank_));
  for (int j = 0; j < rank_; ++j) {
    const auto& col = roots_[w(j)].coords;
    for (int i = 0; i < rank_; ++i) m[i][j] = col[i];
  }
  return m;
}

int CoxeterSystem::inner_product_sign(std::size_t a, std::size_t b) const {
  if (uses_angle_model()) {
    const int k = angle_k_;
    int d2 = 2 * mod(roots_.at(a).angle - roots_.at(b).angle, 2 * k);
    if (d2 < k || d2 > 3 * k) return 1;
    if (d2 == k || d2 == 3 * k) return 0;
    return -1;
  }
  return bilinear(gram_, roots_.at(a).coords, roots_.at(b).coords).sign();
}

std::uint64_t CoxeterSystem::support(std::size_t root) const {
  if (!is_positive(root)) throw NegativeRoot("support is defined on positive roots");
  if (uses_angle_model()) {
    int a = roots_[root].angle;
    if (a == 0) return 0b01;
    if (a == angle_k_ - 1) return 0b10;
    return 0b11;
  }
  std::uint64_t mask = 0;
  for (int s = 0; s < rank_; ++s)
    if (!roots_[root].coords[s].is_zero()) mask |= std::uint64_t{1} << s;
  return mask;
}

int CoxeterSystem::reflection_length(const GroupElement& w) const {
  if (w.is_identity()) return 0;
  if (uses_angle_model()) {
    // Rotations preserve the cyclic order of root angles; reflections reverse it.
    const int k = angle_k_;
    int a0 = roots_[w(0)].angle;
    int a1 = roots_[w(2)].angle;  // root 2 sits at angle 1
    return mod(a1 - a0, 2 * k) == 1 ? 2 : 1;
  }
  ScalarMatrix m = matrix(w);
  for (int i = 0; i < rank_; ++i) m[i][i] -= 1;
  return static_cast<int>(matrix_rank(std::move(m)));
}

bool CoxeterSystem::absolute_leq_c(const GroupElement& w) const {
  return reflection_length(w) + reflection_length(w.inverse() * c_) == rank_;
}

Parity CoxeterSystem::parity_of(const std::vector<int>& map) const {
  bool preserves = true, swaps = true;
  for (int s = 0; s < rank_; ++s) {
    if (black_[map[s]] != black_[s]) preserves = false;
    else swaps = false;
  }
  if (preserves) return Parity::Even;
  if (swaps) return Parity::Odd;
  return Parity::Mixed;
}

std::vector<DiagramSymmetry> CoxeterSystem::diagram_symmetries() const {
  std::vector<DiagramSymmetry> out;
  std::vector<int> map(rank_, -1);
  std::vector<char> used(rank_, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == rank_) {
      out.push_back({map, parity_of(map)});
      return;
    }
    for (int v = 0; v < rank_; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = cm_[i][j] == cm_[v][map[j]];
      if (!ok) continue;
      used[v] = 1;
      map[i] = v;
      self(self, i + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

DiagramSymmetry CoxeterSystem::canonical_diagram_map() const {
  std::vector<int> map(rank_);
  for (int s = 0; s < rank_; ++s) {
    auto t = negative_simple_index(w0_(s));
    if (!t) throw LemmaViolation("w0 does not send Delta to -Delta");
    map[s] = *t;
  }
  return {map, parity_of(map)};
}

Permutation CoxeterSystem::induced_root_map(const DiagramSymmetry& d) const {
  if (static_cast<int>(d.map.size()) != rank_) throw InvalidDiagramSymmetry("wrong size");
  for (int a = 0; a < rank_; ++a)
    for (int b = 0; b < rank_; ++b)
      if (d.map[a] < 0 || d.map[a] >= rank_ || cm_[a][b] != cm_[d.map[a]][d.map[b]])
        throw InvalidDiagramSymmetry("map does not preserve the Coxeter matrix");
  const std::size_t total = roots_.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> img(total, unset);
  std::deque<std::size_t> q;
  for (int s = 0; s < rank_; ++s) {
    img[s] = d.map[s];
    q.push_back(s);
  }
  // D(s_j beta) = s_{D(j)} D(beta)
  while (!q.empty()) {
    std::size_t b = q.front();
    q.pop_front();
    for (int s = 0; s < rank_; ++s) {
      std::size_t g = reflections_[s](b);
      std::size_t target = reflections_[d.map[s]](img[b]);
      if (img[g] == unset) {
        img[g] = target;
        q.push_back(g);
      } else if (img[g] != target) {
        throw InvalidDiagramSymmetry("diagram map is not well defined on roots");
      }
    }
  }
  std::vector<Permutation::value_type> out(total);
  for (std::size_t i = 0; i < total; ++i) out[i] = static_cast<Permutation::value_type>(img[i]);
  return Permutation(std::move(out));
}

std::vector<std::string> CoxeterSystem::root_coordinate_strings(std::size_t root) const {
  const auto& r = roots_.at(root);
  if (uses_angle_model()) return {std::to_string(r.angle) + "π/" + std::to_string(angle_k_)};
  std::vector<std::string> out;
  for (const auto& x : r.coords) out.push_back(x.to_string());
  return out;
}

std::string CoxeterSystem::root_label(std::size_t root) const {
  const auto& r = roots_.at(root);
  std::string sign = r.positive ? "+" : "-";
  if (uses_angle_model()) {
    int a = r.positive ? r.angle : r.angle - angle_k_;
    return sign + "θ" + std::to_string(a);
  }
  std::string s = sign + "(";
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    if (i) s += ",";
    s += (r.positive ? r.coords[i] : -r.coords[i]).to_label();
  }
  return s + ")";
}

ProductSystem ProductSystem::build(const CoxeterType& t, const BuildOptions& opts) {
  ProductSystem p;
  for (const auto& f : t.factors) p.factors.push_back(std::make_shared<const CoxeterSystem>(CoxeterSystem::build(f, opts)));
  return p;
}

CoxeterType ProductSystem::type() const {
  CoxeterType t;
  for (const auto& f : factors) t.factors.push_back(f->type());
  return t;
}

int ProductSystem::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f->rank();
  return r;
}

ProductSystem ProductSystem::with_swapped_bipartition() const {
  ProductSystem p;
  for (const auto& f : factors) p.factors.push_back(std::make_shared<const CoxeterSystem>(f->with_swapped_bipartition()));
  return p;
}

ParabolicSubsystem parabolic_subsystem(const CoxeterSystem& sys, const std::vector<int>& keep) {
  const int n = sys.rank();
  std::vector<int> nodes = keep;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (int s : nodes)
    if (s < 0 || s >= n) throw InvalidArgument("parabolic subset outside the simple roots");

  ParabolicSubsystem out;
  out.simple_map.assign(n, std::nullopt);
  out.root_map.assign(sys.num_roots(), std::nullopt);
  if (nodes.empty()) return out;

  CoxeterMatrix sub(nodes.size(), std::vector<int>(nodes.size()));
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = 0; b < nodes.size(); ++b) sub[a][b] = sys.coxeter_matrix()[nodes[a]][nodes[b]];

  for (const auto& comp : classify(sub)) {
    const int ci = static_cast<int>(out.system.factors.size());
    std::vector<int> parent_nodes;
    for (int local : comp.nodes) parent_nodes.push_back(nodes[local]);
    const std::size_t r = parent_nodes.size();
    std::vector<bool> black(r);
    for (std::size_t i = 0; i < r; ++i) black[i] = sys.is_black(parent_nodes[i]);

    SystemPtr child;
    if (sys.uses_angle_model()) {
      // Proper parabolics of a dihedral group are single nodes.
      child = std::make_shared<const CoxeterSystem>(
          CoxeterSystem::from_gram(IrreducibleType::make(Family::A, 1), ScalarMatrix{{Scalar(2)}}, black));
    } else {
      ScalarMatrix g(r, ScalarVector(r));
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) g[a][b] = sys.gram()[parent_nodes[a]][parent_nodes[b]];
      child = std::make_shared<const CoxeterSystem>(CoxeterSystem::from_gram(comp.type, std::move(g), black));
    }
    for (std::size_t i = 0; i < r; ++i) out.simple_map[parent_nodes[i]] = std::make_pair(ci, static_cast<int>(i));

    std::uint64_t mask = 0;
    for (int s : parent_nodes) mask |= std::uint64_t{1} << s;
    for (std::size_t root = 0; root < sys.num_positive(); ++root) {
      if ((sys.support(root) & ~mask) != 0) continue;
      std::optional<std::size_t> local;
      if (sys.uses_angle_model()) {
        local = 0;
      } else {
        ScalarVector coords;
        for (int s : parent_nodes) coords.push_back(sys.root(root).coords[s]);
        local = child->find_root(coords);
      }
      if (!local) throw LemmaViolation("parabolic root missing from the subsystem");
      out.root_map[root] = std::make_pair(ci, *local);
      out.root_map[sys.negative_of(root)] = std::make_pair(ci, child->negative_of(*local));
    }
    out.system.factors.push_back(std::move(child));
  }
  return out;
}

}  // namespace gccaut
