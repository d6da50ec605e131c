#include "gccaut/coxeter_type.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "gccaut/errors.hpp"

namespace gccaut {

namespace {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
    case Family::H: return 'H';
    case Family::I2: return 'I';
  }
  return '?';
}

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  if (s.empty() || s.size() > 6) throw InvalidType("malformed type string: " + std::string(whole));
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidType("malformed type string: " + std::string(whole));
  return v;
}

IrreducibleType parse_factor(std::string_view f, std::string_view whole) {
  if (f.empty()) throw InvalidType("empty type factor in: " + std::string(whole));
  if (f.substr(0, 3) == "I2(") {
    if (f.back() != ')') throw InvalidType("malformed dihedral type: " + std::string(f));
    int k = parse_int(f.substr(3, f.size() - 4), whole);
    return IrreducibleType::make(Family::I2, 2, k);
  }
  Family fam;
  switch (f[0]) {
    case 'A': fam = Family::A; break;
    case 'B': fam = Family::B; break;
    case 'D': fam = Family::D; break;
    case 'E': fam = Family::E; break;
    case 'F': fam = Family::F; break;
    case 'G': fam = Family::G; break;
    case 'H': fam = Family::H; break;
    default: throw InvalidType("unknown Coxeter family in: " + std::string(whole));
  }
  return IrreducibleType::make(fam, parse_int(f.substr(1), whole));
}

}  // namespace

IrreducibleType IrreducibleType::make(Family f, int rank, int k) {
  IrreducibleType t{f, rank, f == Family::I2 ? k : 0};
  t.validate();
  return t;
}

void IrreducibleType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
    case Family::H: ok = rank == 3 || rank == 4; break;
    case Family::I2: ok = rank == 2 && k >= 3; break;
  }
  if (rank > 64) ok = false;
  if (!ok) throw InvalidType("not a finite irreducible Coxeter type: " + name());
}

std::string IrreducibleType::name() const {
  if (family == Family::I2) return "I2(" + std::to_string(k) + ")";
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

std::string IrreducibleType::canonical_name() const {
  if (family == Family::I2) {
    if (k == 3) return "A2";
    if (k == 4) return "B2";
    if (k == 6) return "G2";
  }
  return name();
}

int IrreducibleType::coxeter_number() const {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::B: return 2 * rank;
    case Family::D: return 2 * rank - 2;
    case Family::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
    case Family::H: return rank == 3 ? 10 : 30;
    case Family::I2: return k;
  }
  return 0;
}

std::vector<int> IrreducibleType::exponents() const {
  std::vector<int> e;
  switch (family) {
    case Family::A:
      for (int i = 1; i <= rank; ++i) e.push_back(i);
      break;
    case Family::B:
      for (int i = 1; i <= rank; ++i) e.push_back(2 * i - 1);
      break;
    case Family::D:
      for (int i = 1; i < rank; ++i) e.push_back(2 * i - 1);
      e.push_back(rank - 1);
      break;
    case Family::E:
      if (rank == 6) e = {1, 4, 5, 7, 8, 11};
      if (rank == 7) e = {1, 5, 7, 9, 11, 13, 17};
      if (rank == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case Family::F: e = {1, 5, 7, 11}; break;
    case Family::G: e = {1, 5}; break;
    case Family::H: e = rank == 3 ? std::vector<int>{1, 5, 9} : std::vector<int>{1, 11, 19, 29}; break;
    case Family::I2: e = {1, k - 1}; break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

int IrreducibleType::num_positive_roots() const { return rank * coxeter_number() / 2; }

CoxeterType CoxeterType::parse(std::string_view text) {
  if (text.empty()) throw InvalidType("empty type string");
  CoxeterType t;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find('x', start);
    std::string_view part = text.substr(start, pos == std::string_view::npos ? text.npos : pos - start);
    t.factors.push_back(parse_factor(part, text));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return t;
}

int CoxeterType::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

std::string CoxeterType::name() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "x";
    out += factors[i].name();
  }
  return out;
}

std::string CoxeterType::canonical_name() const {
  std::vector<std::string> names;
  for (const auto& f : factors) names.push_back(f.canonical_name());
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += "x";
    out += names[i];
  }
  return out;
}

CoxeterMatrix coxeter_matrix(const IrreducibleType& t) {
  const int n = t.rank;
  CoxeterMatrix m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto edge = [&m](int a, int b, int label) { m[a][b] = m[b][a] = label; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, 3);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, 3);
      edge(n - 2, n - 1, 4);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, 3);
      edge(n - 3, n - 1, 3);
      break;
    case Family::E:
      edge(0, 2, 3);
      edge(1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, 3);
      break;
    case Family::F:
      edge(0, 1, 3);
      edge(1, 2, 4);
      edge(2, 3, 3);
      break;
    case Family::G: edge(0, 1, 6); break;
    case Family::H:
      edge(0, 1, 5);
      for (int i = 1; i + 1 < n; ++i) edge(i, i + 1, 3);
      break;
    case Family::I2: edge(0, 1, t.k); break;
  }
  return m;
}

ScalarMatrix standard_gram(const IrreducibleType& t) {
  if (t.family == Family::I2) throw InvalidType("I2(k) has no coordinate realization");
  const int n = t.rank;
  const CoxeterMatrix cm = coxeter_matrix(t);
  std::vector<Scalar> norm(n, Scalar(2));
  if (t.family == Family::B) norm[n - 1] = 1;
  if (t.family == Family::F) norm[2] = norm[3] = 1;
  if (t.family == Family::G) norm[1] = 6;
  ScalarMatrix g(n, ScalarVector(n, Scalar(0)));
  for (int i = 0; i < n; ++i) {
    g[i][i] = norm[i];
    for (int j = 0; j < n; ++j) {
      if (i == j || cm[i][j] == 2) continue;
      Scalar v;
      switch (cm[i][j]) {
        case 3: v = (norm[i] == Scalar(1) && norm[j] == Scalar(1)) ? Scalar(Rational(-1, 2)) : Scalar(-1); break;
        case 4: v = -1; break;
        case 5: v = -Scalar::golden(); break;
        case 6: v = -3; break;
        default: throw InvalidType("unsupported edge label in " + t.name());
      }
      g[i][j] = v;
    }
  }
  return g;
}

std::vector<ClassifiedComponent> classify(const CoxeterMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> comp(n, -1);
  std::vector<ClassifiedComponent> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      for (int v = 0; v < n; ++v) {
        if (comp[v] < 0 && m[nodes[q]][v] != 2 && v != nodes[q]) {
          comp[v] = comp[s];
          nodes.push_back(v);
        }
      }
    }
    std::sort(nodes.begin(), nodes.end());
    const int r = static_cast<int>(nodes.size());
    auto label = [&](int a, int b) { return m[nodes[a]][nodes[b]]; };
    auto fail = [&]() -> IrreducibleType { throw InvalidType("Coxeter graph component is not of finite type"); };

    IrreducibleType t;
    if (r == 1) {
      t = IrreducibleType::make(Family::A, 1);
    } else if (r == 2) {
      int k = label(0, 1);
      if (k == 3) t = IrreducibleType::make(Family::A, 2);
      else if (k == 4) t = IrreducibleType::make(Family::B, 2);
      else if (k == 6) t = IrreducibleType::make(Family::G, 2);
      else t = IrreducibleType::make(Family::I2, 2, k);
    } else {
      std::vector<std::vector<int>> adj(r);
      int edges = 0, heavy = 0, heavy_label = 3, heavy_a = -1, heavy_b = -1;
      for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) {
          int l = label(a, b);
          if (l == 2) continue;
          adj[a].push_back(b);
          adj[b].push_back(a);
          ++edges;
          if (l != 3) {
            ++heavy;
            heavy_label = l;
            heavy_a = a;
            heavy_b = b;
          }
        }
      if (edges != r - 1) t = fail();
      int branch = -1;
      for (int a = 0; a < r; ++a) {
        if (adj[a].size() > 3) t = fail();
        if (adj[a].size() == 3) {
          if (branch >= 0) t = fail();
          branch = a;
        }
      }
      if (branch < 0) {
        if (heavy == 0) {
          t = IrreducibleType::make(Family::A, r);
        } else if (heavy > 1) {
          t = fail();
        } else {
          bool at_end = adj[heavy_a].size() == 1 || adj[heavy_b].size() == 1;
          if (heavy_label == 4 && at_end) t = IrreducibleType::make(Family::B, r);
          else if (heavy_label == 4 && r == 4) t = IrreducibleType::make(Family::F, 4);
          else if (heavy_label == 5 && at_end && (r == 3 || r == 4)) t = IrreducibleType::make(Family::H, r);
          else t = fail();
        }
      } else {
        if (heavy != 0) t = fail();
        std::vector<int> arms;
        for (int start : adj[branch]) {
          int len = 1, prev = branch, cur = start;
          while (adj[cur].size() == 2) {
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) t = IrreducibleType::make(Family::D, r);
        else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) t = IrreducibleType::make(Family::E, r);
        else t = fail();
      }
    }
    out.push_back({t, nodes});
  }
  return out;
}

std::vector<IrreducibleType> irreducible_types_of_rank(int n) {
  std::vector<IrreducibleType> out;
  if (n == 1) return {IrreducibleType::make(Family::A, 1)};
  out.push_back(IrreducibleType::make(Family::A, n));
  if (n >= 2) out.push_back(IrreducibleType::make(Family::B, n));
  if (n >= 4) out.push_back(IrreducibleType::make(Family::D, n));
  if (n >= 6 && n <= 8) out.push_back(IrreducibleType::make(Family::E, n));
  if (n == 4) out.push_back(IrreducibleType::make(Family::F, 4));
  if (n == 2) out.push_back(IrreducibleType::make(Family::G, 2));
  if (n == 3 || n == 4) out.push_back(IrreducibleType::make(Family::H, n));
  return out;
}

}  // namespace gccaut
