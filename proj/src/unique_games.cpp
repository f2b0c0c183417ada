#include "gaplab/unique_games.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "json.hpp"

namespace gaplab {

using ordered_json = nlohmann::ordered_json;

void validateUg(const UgInstance& u) {
  const int n = static_cast<int>(u.vertices.size());
  if (u.labelSize < 1) throw GaplabError("label size must be positive");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : u.edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw GaplabError("edge endpoint out of range");
    if (e.u == e.v) throw GaplabError("self-loops are not allowed");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert({key.first, key.second}).second) throw GaplabError("duplicate edge");
    if (static_cast<int>(e.pi.size()) != u.labelSize)
      throw GaplabError("bijection size does not match label set");
    std::vector<char> hit(u.labelSize, 0);
    for (int img : e.pi) {
      if (img < 0 || img >= u.labelSize || hit[img]) throw GaplabError("edge map is not a bijection");
      hit[img] = 1;
    }
  }
}

std::vector<int> inversePermutation(const std::vector<int>& pi) {
  std::vector<int> inv(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) inv[pi[i]] = static_cast<int>(i);
  return inv;
}

std::optional<std::vector<int>> bipartition(const UgInstance& u) {
  const int n = static_cast<int>(u.vertices.size());
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : u.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> side(n, -1);
  for (int start = 0; start < n; ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          q.push(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::optional<int> regularDegree(const UgInstance& u) {
  std::vector<int> deg(u.vertices.size(), 0);
  for (const auto& e : u.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  if (deg.empty()) return 0;
  for (int d : deg)
    if (d != deg[0]) return std::nullopt;
  return deg[0];
}

Rational ugValue(const UgInstance& u, const Labeling& lab) {
  if (lab.labels.size() != u.vertices.size()) throw GaplabError("labeling misses vertices");
  for (int l : lab.labels)
    if (l < 0 || l >= u.labelSize) throw GaplabError("label out of range");
  if (u.edges.empty()) return 1;
  long sat = 0;
  for (const auto& e : u.edges)
    if (e.pi[lab.labels[e.u]] == lab.labels[e.v]) ++sat;
  return ratio(sat, static_cast<long>(u.edges.size()));
}

std::pair<Rational, Labeling> bruteForceUgOpt(const UgInstance& u, std::uint64_t budget) {
  const int n = static_cast<int>(u.vertices.size());
  std::uint64_t space = powWithin(u.labelSize, n, budget);
  if (space == 0) throw GaplabError("labeling space R^|V| exceeds budget");
  Labeling best{Tuple(n, 0)};
  Rational bestVal = ugValue(u, best);
  Labeling cur = best;
  for (std::uint64_t idx = 1; idx < space; ++idx) {
    for (int i = n - 1; i >= 0; --i) {
      if (++cur.labels[i] < u.labelSize) break;
      cur.labels[i] = 0;
    }
    Rational v = ugValue(u, cur);
    if (v > bestVal) {
      bestVal = v;
      best = cur;
    }
  }
  return {bestVal, best};
}

UgInstance bipartiteDoubleCover(const UgInstance& u) {
  validateUg(u);
  UgInstance cover;
  cover.labelSize = u.labelSize;
  const int n = static_cast<int>(u.vertices.size());
  for (int i = 0; i < n; ++i) cover.vertices.push_back(u.vertices[i] + "_1");
  for (int i = 0; i < n; ++i) cover.vertices.push_back(u.vertices[i] + "_2");
  for (const auto& e : u.edges) {
    cover.edges.push_back(UgEdge{e.u, n + e.v, e.pi});      // u1 - v2
    cover.edges.push_back(UgEdge{n + e.u, e.v, e.pi});      // u2 - v1
  }
  return cover;
}

CspInstance ugAsCsp(const UgInstance& u) {
  validateUg(u);
  std::vector<CspConstraint> cs;
  for (const auto& e : u.edges) {
    CspConstraint c;
    c.support = {e.u, e.v};
    for (int a = 0; a < u.labelSize; ++a) c.accepting.push_back({a, e.pi[a]});
    cs.push_back(std::move(c));
  }
  return makeCsp(u.labelSize, static_cast<int>(u.vertices.size()), std::move(cs));
}

LocalDistributionFamily extendSaToCover(const UgInstance& u, const LocalDistributionFamily& fam,
                                        int rounds) {
  if (auto why = familyViolation(fam)) throw GaplabError("inconsistent family: " + *why);
  const int n = static_cast<int>(u.vertices.size());
  LocalDistributionFamily out;
  out.rounds = rounds;
  out.domainSize = u.labelSize;
  out.numVars = 2 * n;

  // For a set S of cover vertices, the underlying set folds both copies of a
  // vertex together; labels are then copied to each member of S.
  {
    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int start, int room) {
      out.dists[cur];
      if (room == 0) return;
      for (int i = start; i < 2 * n; ++i) {
        cur.push_back(i);
        gen(i + 1, room - 1);
        cur.pop_back();
      }
    };
    gen(0, rounds);
  }
  for (auto& [S, dist] : out.dists) {
    std::vector<int> base;
    for (int vtx : S) base.push_back(vtx % n);
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    auto it = fam.dists.find(base);
    if (it == fam.dists.end())
      throw GaplabError("family misses an underlying set needed for the cover");
    for (const auto& [vals, mass] : it->second) {
      if (mass == 0) continue;
      Tuple lifted;
      for (int vtx : S) {
        auto pos = std::lower_bound(base.begin(), base.end(), vtx % n) - base.begin();
        lifted.push_back(vals[pos]);
      }
      dist[lifted] += mass;
    }
  }
  return out;
}

LocalDistributionFamily ugPointFamily(const UgInstance& u, const Labeling& lab, int rounds) {
  CspInstance shell;
  shell.domainSize = u.labelSize;
  shell.numVars = static_cast<int>(u.vertices.size());
  return pointFamily(shell, Assignment{lab.labels}, rounds);
}

LocalDistributionFamily ugUniformFamily(const UgInstance& u, int rounds) {
  return uniformFamily(static_cast<int>(u.vertices.size()), u.labelSize, rounds);
}

std::string ugToJson(const UgInstance& u) {
  ordered_json j;
  j["R"] = u.labelSize;
  j["vertices"] = u.vertices;
  ordered_json edges = ordered_json::array();
  for (const auto& e : u.edges) {
    ordered_json row;
    row["u"] = u.vertices[e.u];
    row["v"] = u.vertices[e.v];
    row["pi"] = e.pi;
    edges.push_back(row);
  }
  j["edges"] = edges;
  return j.dump(2);
}

UgInstance ugFromJson(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  UgInstance u;
  u.labelSize = j.at("R").get<int>();
  for (const auto& name : j.at("vertices")) u.vertices.push_back(name.get<std::string>());
  auto indexOf = [&](const std::string& name) {
    for (std::size_t i = 0; i < u.vertices.size(); ++i)
      if (u.vertices[i] == name) return static_cast<int>(i);
    throw GaplabError("edge references unknown vertex " + name);
  };
  for (const auto& row : j.at("edges")) {
    UgEdge e;
    e.u = indexOf(row.at("u").get<std::string>());
    e.v = indexOf(row.at("v").get<std::string>());
    e.pi = row.at("pi").get<std::vector<int>>();
    u.edges.push_back(std::move(e));
  }
  validateUg(u);
  return u;
}

}  // namespace gaplab
