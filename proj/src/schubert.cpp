#include "qhorn/schubert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qhorn {

SchubertIndex::SchubertIndex(std::vector<int> elems, int ambient)
    : elements(std::move(elems)), n(ambient) {
  if (elements.empty() || n < 2)
    throw std::invalid_argument("SchubertIndex: need 1 <= r < n");
  for (size_t a = 0; a < elements.size(); ++a) {
    if (elements[a] < 1 || elements[a] > n)
      throw std::invalid_argument("SchubertIndex: element out of {1..n}");
    if (a > 0 && elements[a] <= elements[a - 1])
      throw std::invalid_argument("SchubertIndex: not strictly increasing");
  }
  if (r() >= n) throw std::invalid_argument("SchubertIndex: r must be < n");
}

bool SchubertIndex::operator<(const SchubertIndex& o) const {
  if (n != o.n) return n < o.n;
  return elements < o.elements;
}

std::string SchubertIndex::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t a = 0; a < elements.size(); ++a) {
    if (a) os << ',';
    os << elements[a];
  }
  os << '}';
  return os.str();
}

SchubertIndex SchubertIndex::parse(const std::string& s, int n) {
  if (s.size() < 3 || s.front() != '{' || s.back() != '}')
    throw std::invalid_argument("SchubertIndex: expected \"{i,j,...}\", got '" + s + "'");
  std::vector<int> elems;
  std::string body = s.substr(1, s.size() - 2);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("SchubertIndex: bad entry '" + tok + "'");
    }
    if (pos != tok.size())
      throw std::invalid_argument("SchubertIndex: bad entry '" + tok + "'");
    elems.push_back(v);
  }
  return SchubertIndex(elems, n);
}

int partition_weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

void trim_partition(Partition& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

SimplexPoint::SimplexPoint(std::vector<Rat> c) : coords(std::move(c)) {
  if (coords.empty()) throw std::invalid_argument("SimplexPoint: empty");
}

std::string SimplexPoint::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ", ";
    os << coords[i];
  }
  os << ']';
  return os.str();
}

bool valid_simplex_point(const SimplexPoint& a) {
  const auto& c = a.coords;
  Rat sum = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i > 0 && c[i] > c[i - 1]) return false;
    sum += c[i];
  }
  if (c.back() < c.front() - 1) return false;
  return sum == 0;
}

Partition index_to_partition(const SchubertIndex& I) {
  Partition p(I.r());
  for (int a = 0; a < I.r(); ++a) p[a] = I.n - I.r() + (a + 1) - I.elements[a];
  trim_partition(p);
  return p;
}

SchubertIndex partition_to_index(const Partition& p, int r, int n) {
  if (static_cast<int>(p.size()) > r || (!p.empty() && p[0] > n - r))
    throw std::invalid_argument("partition_to_index: partition outside the box");
  std::vector<int> elems(r);
  for (int a = 0; a < r; ++a) {
    int part = a < static_cast<int>(p.size()) ? p[a] : 0;
    elems[a] = n - r + (a + 1) - part;
  }
  return SchubertIndex(elems, n);
}

int codim(const SchubertIndex& I) { return partition_weight(index_to_partition(I)); }

SchubertIndex grassmann_dual(const SchubertIndex& I) {
  std::vector<bool> in(I.n + 1, false);
  for (int e : I.elements) in[e] = true;
  std::vector<int> elems;
  for (int a = 1; a <= I.n; ++a)
    if (!in[I.n + 1 - a]) elems.push_back(a);
  return SchubertIndex(elems, I.n);
}

SchubertIndex scale_index(const SchubertIndex& I, int N) {
  if (N < 1) throw std::invalid_argument("scale_index: N must be positive");
  std::vector<int> elems(I.r());
  for (int a = 1; a <= I.r(); ++a) elems[a - 1] = a + N * (I.elements[a - 1] - a);
  return SchubertIndex(elems, I.r() + N * (I.n - I.r()));
}

SimplexPoint delta(const SchubertIndex& I) {
  int r = I.r(), nr = I.n - I.r();
  Rat c = 0;
  for (int j = 1; j <= r; ++j) c += Rat(j - I.elements[j - 1], nr);
  c /= r;
  std::vector<Rat> coords(r);
  for (int j = 1; j <= r; ++j) coords[j - 1] = Rat(j - I.elements[j - 1], nr) - c;
  return SimplexPoint(std::move(coords));
}

SimplexPoint shift_s(const SimplexPoint& a) {
  int r = a.r();
  std::vector<Rat> c(r);
  for (int j = 0; j + 1 < r; ++j) c[j] = a.coords[j + 1] + Rat(1, r);
  c[r - 1] = a.coords[0] - (Rat(1) - Rat(1, r));
  return SimplexPoint(std::move(c));
}

SimplexPoint shift_s_pow(const SimplexPoint& a, int times) {
  SimplexPoint out = a;
  int r = a.r();
  times %= r;
  if (times < 0) times += r;
  for (int k = 0; k < times; ++k) out = shift_s(out);
  return out;
}

Rat lambda_sum(const SchubertIndex& I, const ConjugacyClass& A) {
  if (A.r() != I.n) throw std::invalid_argument("lambda_sum: class rank != n");
  return lambda_sum(I.elements, A);
}

Rat lambda_sum(const std::vector<int>& subset, const ConjugacyClass& A) {
  Rat s = 0;
  for (int t : subset) {
    if (t < 1 || t > A.r()) throw std::invalid_argument("lambda_sum: index out of range");
    s += A.coords[t - 1];
  }
  return s;
}

bool is_normalised(const SchubertIndex& I) {
  return I.elements.front() > 1 || I.elements.back() < I.n;
}

ConjugacyClass normalize_weights(const std::vector<Rat>& t) {
  if (t.empty()) throw std::invalid_argument("normalize_weights: empty");
  Rat mean = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i > 0 && t[i] > t[i - 1])
      throw std::invalid_argument("normalize_weights: not decreasing");
    mean += t[i];
  }
  mean /= static_cast<int>(t.size());
  std::vector<Rat> c(t.size());
  for (size_t i = 0; i < t.size(); ++i) c[i] = t[i] - mean;
  return ConjugacyClass(std::move(c));
}

std::optional<int> degree_from_cycles(const std::vector<SchubertIndex>& indices, int D) {
  if (indices.empty()) throw std::invalid_argument("degree_from_cycles: no cycles");
  int r = indices[0].r(), n = indices[0].n;
  long long total = 0;
  for (const auto& I : indices) {
    if (I.r() != r || I.n != n)
      throw std::invalid_argument("degree_from_cycles: mixed (r,n)");
    total += codim(I);
  }
  long long num = total + static_cast<long long>(D) * r - static_cast<long long>(r) * (n - r);
  if (num % n != 0) return std::nullopt;
  long long d = num / n;
  if (d < 0) return std::nullopt;
  return static_cast<int>(d);
}

}  // namespace qhorn
