#include "finejac/domain.hpp"

#include <algorithm>

namespace finejac {

namespace {
MSet all_marks(int n) { return (MSet{1} << n) - 1; }

bool excluded(const Triple& t, const DomainConfig& cfg) {
  if (t.e == 2 && t.h == 0 && t.marks == 0) return true;
  if (t.e == 2 && t.h == cfg.g - 1 && t.marks == all_marks(cfg.n)) return true;
  return false;
}
}  // namespace

bool in_domain(const Triple& t, const DomainConfig& cfg) {
  if (t.e < cfg.min_valence || t.e > cfg.g + 1) return false;
  if (t.h < 0 || t.h > cfg.g + 1 - t.e) return false;
  if (t.marks & ~all_marks(cfg.n)) return false;
  return !excluded(t, cfg);
}

std::vector<Triple> universal_domain(const DomainConfig& cfg) {
  cfg.check();
  std::vector<Triple> out;
  for (int e = cfg.min_valence; e <= cfg.g + 1; ++e)
    for (int h = 0; h <= cfg.g + 1 - e; ++h)
      for (MSet a = 0; a <= all_marks(cfg.n); ++a) {
        Triple t{e, h, a};
        if (!excluded(t, cfg)) out.push_back(t);
      }
  std::sort(out.begin(), out.end());
  return out;
}

Triple complement(const Triple& t, const DomainConfig& cfg) {
  if (!in_domain(t, cfg)) fail(Err::NotInDomain, "triple outside the stability domain");
  return Triple{t.e, cfg.g + 1 - t.e - t.h, all_marks(cfg.n) & ~t.marks};
}

Triple canonical_rep(const Triple& t, const DomainConfig& cfg) {
  Triple c = complement(t, cfg);
  return std::min(t, c);
}

bool is_compatible_decomposition(const Triple& t, const Triple& t1, const Triple& t2,
                                 const DomainConfig& cfg) {
  if (!in_domain(t, cfg) || !in_domain(t1, cfg) || !in_domain(t2, cfg)) return false;
  if (t1.marks & t2.marks) return false;
  if ((t1.marks | t2.marks) != t.marks) return false;
  if (2 * (t.h + 1 - (t1.h + t2.h)) != t1.e + t2.e - t.e) return false;
  // Nondegenerate triangle with sides e,e1,e2; the doubled edge counts
  // k12 = (e1+e2-e)/2 etc. must all be positive integers.
  int twice_k12 = t1.e + t2.e - t.e;
  int twice_k01 = t.e + t1.e - t2.e;
  int twice_k02 = t.e + t2.e - t1.e;
  return twice_k12 >= 2 && twice_k01 >= 2 && twice_k02 >= 2;
}

std::vector<std::pair<Triple, Triple>> decompositions(const Triple& t,
                                                      const DomainConfig& cfg) {
  if (!in_domain(t, cfg)) fail(Err::NotInDomain, "triple outside the stability domain");
  std::vector<std::pair<Triple, Triple>> out;
  for (int e1 = cfg.min_valence; e1 <= cfg.g + 1; ++e1)
    for (int e2 = e1; e2 <= cfg.g + 1; ++e2) {
      if ((e1 + e2 - t.e) % 2 != 0) continue;
      int k12 = (e1 + e2 - t.e) / 2;
      if (k12 < 1) continue;
      for (int h1 = 0; h1 <= cfg.g + 1 - e1; ++h1) {
        int h2 = t.h + 1 - h1 - k12;
        if (h2 < 0 || h2 > cfg.g + 1 - e2) continue;
        // Iterate sub-masks of t.marks for the first part.
        MSet a = t.marks;
        MSet a1 = 0;
        while (true) {
          Triple p1{e1, h1, a1};
          Triple p2{e2, h2, a & ~a1};
          if (is_compatible_decomposition(t, p1, p2, cfg)) {
            auto pr = std::minmax(p1, p2);
            out.emplace_back(pr.first, pr.second);
          }
          if (a1 == a) break;
          a1 = (a1 - a) & a;  // next sub-mask
        }
      }
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Triple alpha(const Graph& gr, VSet w) {
  SubsetStats st = subset_stats(gr, w);
  return Triple{st.val, st.genus, st.markings};
}

std::map<Triple, std::vector<VSet>> graph_domain(const Graph& gr) {
  std::map<Triple, std::vector<VSet>> out;
  for (VSet w : biconnected_subsets(gr)) out[alpha(gr, w)].push_back(w);
  return out;
}

namespace {
// Lexicographic order on sorted vertex-index sequences.
bool lex_less(VSet a, VSet b) {
  while (a && b) {
    int va = __builtin_ctz(a), vb = __builtin_ctz(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}
}  // namespace

VSet pick_realizing_subset(const Graph& gr, const Triple& t) {
  auto dom = graph_domain(gr);
  auto it = dom.find(t);
  if (it == dom.end() || it->second.empty())
    fail(Err::NotRealized, "triple is not realized on this graph");
  VSet best = it->second.front();
  for (VSet w : it->second)
    if (lex_less(w, best)) best = w;
  return best;
}

}  // namespace finejac
