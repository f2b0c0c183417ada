#include "gaplab/fourier.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace gaplab {

using ordered_json = nlohmann::ordered_json;

namespace {

std::uint64_t powU(int base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::uint64_t>(base);
  return r;
}

}  // namespace

ZqFunction makeZqFunction(int q, int R, std::vector<int> table) {
  if (q < 2 || R < 1) throw GaplabError("ZqFunction needs q >= 2, R >= 1");
  if (table.size() != powU(q, R)) throw GaplabError("table size must be q^R");
  for (int v : table)
    if (v != 0 && v != 1) throw GaplabError("table entries must be 0/1");
  return ZqFunction{q, R, std::move(table)};
}

std::vector<std::vector<double>> fourierBasis(int q) {
  if (q == 2) return {{1.0, 1.0}, {1.0, -1.0}};
  // Gram-Schmidt of {1, 1[y=1], ..., 1[y=q-1]} under E_y, in index order.
  std::vector<std::vector<double>> basis;
  basis.push_back(std::vector<double>(q, 1.0));
  for (int k = 1; k < q; ++k) {
    std::vector<double> v(q, 0.0);
    v[k] = 1.0;
    for (const auto& b : basis) {
      double dot = 0;
      for (int y = 0; y < q; ++y) dot += v[y] * b[y];
      dot /= q;
      for (int y = 0; y < q; ++y) v[y] -= dot * b[y];
    }
    double norm2 = 0;
    for (int y = 0; y < q; ++y) norm2 += v[y] * v[y];
    norm2 /= q;
    double inv = 1.0 / std::sqrt(norm2);
    for (int y = 0; y < q; ++y) v[y] *= inv;
    basis.push_back(std::move(v));
  }
  return basis;
}

FourierExpansion fourierExpand(const ZqFunction& f) {
  auto basis = fourierBasis(f.q);
  const std::uint64_t size = powU(f.q, f.R);
  FourierExpansion e{f.q, f.R, std::vector<double>(size, 0.0)};
  for (std::uint64_t aIdx = 0; aIdx < size; ++aIdx) {
    Tuple alpha = tupleFromIndex(aIdx, f.R, f.q);
    double acc = 0;
    for (std::uint64_t xIdx = 0; xIdx < size; ++xIdx) {
      if (f.table[xIdx] == 0) continue;
      Tuple x = tupleFromIndex(xIdx, f.R, f.q);
      double phi = 1;
      for (int i = 0; i < f.R; ++i) phi *= basis[alpha[i]][x[i]];
      acc += phi;
    }
    e.coeffs[aIdx] = acc / static_cast<double>(size);
  }
  return e;
}

Rational influenceExact(const ZqFunction& f, int i) {
  if (i < 0 || i >= f.R) throw GaplabError("influence index out of range");
  const std::uint64_t outer = powU(f.q, f.R - 1);
  const std::uint64_t stride = powU(f.q, f.R - 1 - i);
  Rational total = 0;
  for (std::uint64_t rest = 0; rest < outer; ++rest) {
    // rebuild the full index with coordinate i inserted
    std::uint64_t hi = rest / stride, lo = rest % stride;
    long ones = 0;
    for (int u = 0; u < f.q; ++u) {
      std::uint64_t idx = (hi * f.q + static_cast<std::uint64_t>(u)) * stride + lo;
      ones += f.table[idx];
    }
    // Var of a Bernoulli over the q fiber values: p(1-p)
    Rational p = ratio(ones, f.q);
    total += p * (1 - p);
  }
  return total / Rational(static_cast<long>(outer));
}

double influenceFourier(const FourierExpansion& e, int i) {
  return degreeDInfluence(e, i, e.R);
}

double degreeDInfluence(const FourierExpansion& e, int i, int d) {
  if (i < 0 || i >= e.R || d < 0 || d > e.R) throw GaplabError("degree-d influence range");
  const std::uint64_t size = e.coeffs.size();
  double acc = 0;
  for (std::uint64_t aIdx = 0; aIdx < size; ++aIdx) {
    Tuple alpha = tupleFromIndex(aIdx, e.R, e.q);
    if (alpha[i] == 0) continue;
    int supp = 0;
    for (int v : alpha) supp += v != 0;
    if (supp > d) continue;
    acc += e.coeffs[aIdx] * e.coeffs[aIdx];
  }
  return acc;
}

Rational expectationExact(const ZqFunction& f) {
  long ones = 0;
  for (int v : f.table) ones += v;
  return ratio(ones, static_cast<long>(f.table.size()));
}

bool isFolded(const ZqFunction& f) {
  const std::uint64_t reps = powU(f.q, f.R - 1);
  for (std::uint64_t repIdx = 0; repIdx < reps; ++repIdx) {
    Tuple z = tupleFromIndex(repIdx, f.R - 1, f.q);
    z.insert(z.begin(), 0);
    int zeros = 0;
    Tuple pt(f.R);
    for (int lambda = 0; lambda < f.q; ++lambda) {
      for (int i = 0; i < f.R; ++i) pt[i] = (z[i] + lambda) % f.q;
      zeros += f.at(pt) == 0;
    }
    if (zeros != 1) return false;
  }
  return true;
}

int FoldedTruthTable::eval(const Tuple& x) const {
  const int x1 = x[0];
  Tuple rep(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i) rep[i - 1] = ((x[i] - x1) % q + q) % q;
  return entries[indexFromTuple(rep, q)] == x1 ? 0 : 1;
}

FoldedTruthTable encodeTable(const ZqFunction& f) {
  if (!isFolded(f)) throw GaplabError("cannot encode a non-folded function");
  const std::uint64_t reps = powU(f.q, f.R - 1);
  FoldedTruthTable t{f.q, f.R, std::vector<int>(reps, 0)};
  Tuple pt(f.R);
  for (std::uint64_t repIdx = 0; repIdx < reps; ++repIdx) {
    Tuple z = tupleFromIndex(repIdx, f.R - 1, f.q);
    z.insert(z.begin(), 0);
    for (int lambda = 0; lambda < f.q; ++lambda) {
      for (int i = 0; i < f.R; ++i) pt[i] = (z[i] + lambda) % f.q;
      if (f.at(pt) == 0) {
        t.entries[repIdx] = lambda;
        break;
      }
    }
  }
  return t;
}

ZqFunction decodeTable(const FoldedTruthTable& t) {
  const std::uint64_t size = powU(t.q, t.R);
  ZqFunction f{t.q, t.R, std::vector<int>(size, 0)};
  for (std::uint64_t idx = 0; idx < size; ++idx)
    f.table[idx] = t.eval(tupleFromIndex(idx, t.R, t.q));
  return f;
}

ZqFunction foldedDictator(int ell, int q, int R) {
  if (ell < 0 || ell >= R) throw GaplabError("dictator coordinate out of range");
  const std::uint64_t size = powU(q, R);
  ZqFunction f{q, R, std::vector<int>(size, 0)};
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    Tuple x = tupleFromIndex(idx, R, q);
    f.table[idx] = x[ell] != 0;
  }
  return f;
}

SubcubeRestriction subcubeRestriction(const ZqFunction& f, const Tuple& x,
                                      const std::vector<int>& S) {
  if (static_cast<int>(x.size()) != f.R) throw GaplabError("base point has wrong dimension");
  for (int i : S)
    if (i < 0 || i >= f.R) throw GaplabError("free index out of range");
  SubcubeRestriction out;
  const std::uint64_t count = powU(f.q, static_cast<int>(S.size()));
  Tuple z = x;
  out.allZero = out.allOne = true;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Tuple free = tupleFromIndex(idx, static_cast<int>(S.size()), f.q);
    for (std::size_t i = 0; i < S.size(); ++i) z[S[i]] = free[i];
    int v = f.at(z);
    out.values.push_back(v);
    out.allZero = out.allZero && v == 0;
    out.allOne = out.allOne && v == 1;
  }
  return out;
}

std::string truthTableToJson(const FoldedTruthTable& t) {
  ordered_json j;
  j["q"] = t.q;
  j["R"] = t.R;
  ordered_json entries = ordered_json::object();
  for (std::size_t idx = 0; idx < t.entries.size(); ++idx) {
    Tuple z = tupleFromIndex(idx, t.R - 1, t.q);
    z.insert(z.begin(), 0);
    std::string key;
    for (std::size_t i = 0; i < z.size(); ++i) key += std::to_string(z[i]);
    entries[key] = t.entries[idx];
  }
  j["entries"] = entries;
  return j.dump(2);
}

FoldedTruthTable truthTableFromJson(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  FoldedTruthTable t;
  t.q = j.at("q").get<int>();
  t.R = j.at("R").get<int>();
  t.entries.assign(powU(t.q, t.R - 1), 0);
  for (auto it = j.at("entries").begin(); it != j.at("entries").end(); ++it) {
    const std::string& key = it.key();
    if (static_cast<int>(key.size()) != t.R || key[0] != '0')
      throw GaplabError("truth table key must be a z-string with z1 = 0");
    Tuple rep;
    for (std::size_t i = 1; i < key.size(); ++i) rep.push_back(key[i] - '0');
    t.entries[indexFromTuple(rep, t.q)] = it.value().get<int>();
  }
  return t;
}

}  // namespace gaplab
