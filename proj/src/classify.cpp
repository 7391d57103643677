#include <array>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "wallkit/coxeter.hpp"

namespace wallkit {

namespace {

namespace mp = boost::multiprecision;
using Rat = mp::cpp_rational;

// Element of Q(sqrt2, sqrt3, sqrt5): rational coordinates over the
// basis of square roots of squarefree products of {2,3,5}, indexed by
// bitmask (bit0 = 2, bit1 = 3, bit2 = 5).
struct Alg {
  std::array<Rat, 8> c{};

  static Alg rational(const Rat& r) {
    Alg a;
    a.c[0] = r;
    return a;
  }
  static Alg radical(int mask, const Rat& coeff) {
    Alg a;
    a.c[mask] = coeff;
    return a;
  }
  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }
};

int mask_value(int mask) {
  int v = 1;
  if (mask & 1) v *= 2;
  if (mask & 2) v *= 3;
  if (mask & 4) v *= 5;
  return v;
}

Alg operator+(const Alg& a, const Alg& b) {
  Alg r;
  for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Alg operator-(const Alg& a, const Alg& b) {
  Alg r;
  for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Alg operator*(const Alg& a, const Alg& b) {
  Alg r;
  for (int i = 0; i < 8; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (b.c[j] == 0) continue;
      // sqrt(m_i) * sqrt(m_j) = (common primes) * sqrt(m_{i xor j})
      r.c[i ^ j] += a.c[i] * b.c[j] * mask_value(i & j);
    }
  }
  return r;
}

using Big = mp::cpp_bin_float_100;

int sign_of(const Alg& a) {
  if (a.is_zero()) return 0;
  Big v = 0;
  for (int i = 0; i < 8; ++i) {
    if (a.c[i] == 0) continue;
    v += static_cast<Big>(a.c[i]) * sqrt(Big(mask_value(i)));
  }
  if (abs(v) < Big("1e-70"))
    throw Error(Errc::InternalInconsistency,
                "exact sign evaluation below guard threshold");
  return v > 0 ? 1 : -1;
}

// Determinant by subset dynamic programming (expansion along rows).
template <typename T>
T determinant(const std::vector<std::vector<T>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<T> d(std::size_t(1) << n);
  d[0] = T{};
  // det of the empty matrix is 1
  if constexpr (std::is_same_v<T, Alg>)
    d[0] = Alg::rational(1);
  else
    d[0] = 1;
  std::vector<int> pc(std::size_t(1) << n, 0);
  for (std::size_t s = 1; s < d.size(); ++s)
    pc[s] = pc[s >> 1] + (s & 1);
  for (std::size_t s = 1; s < d.size(); ++s) {
    int row = pc[s] - 1;
    T acc{};
    // cofactor sign along the last row: (-1)^(row + column position)
    int parity = row;
    for (int j = 0; j < n; ++j) {
      if (!(s >> j & 1)) continue;
      T term = a[row][j] * d[s ^ (std::size_t(1) << j)];
      if (parity % 2 == 0)
        acc = acc + term;
      else
        acc = acc - term;
      ++parity;
    }
    d[s] = acc;
  }
  return d.back();
}

template <typename T>
std::vector<std::vector<T>> submatrix(const std::vector<std::vector<T>>& a,
                                      const std::vector<int>& idx) {
  std::vector<std::vector<T>> out(idx.size(), std::vector<T>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      out[i][j] = a[idx[i]][idx[j]];
  return out;
}

ComponentType classify_exact(const CoxeterSystem& sys,
                             const std::vector<int>& gens) {
  const int k = static_cast<int>(gens.size());
  std::vector<std::vector<Alg>> B(k, std::vector<Alg>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int mm = sys.label(gens[i], gens[j]);
      // B_st = -cos(pi / m_st); infinity contributes -1.
      switch (mm) {
        case 1: B[i][j] = Alg::rational(1); break;
        case 2: B[i][j] = Alg::rational(0); break;
        case 3: B[i][j] = Alg::rational(Rat(-1, 2)); break;
        case 4: B[i][j] = Alg::radical(1, Rat(-1, 2)); break;
        case 5: B[i][j] = Alg::radical(4, Rat(-1, 4)) + Alg::rational(Rat(-1, 4)); break;
        case 6: B[i][j] = Alg::radical(2, Rat(-1, 2)); break;
        case kInfLabel: B[i][j] = Alg::rational(-1); break;
        default:
          throw Error(Errc::InternalInconsistency,
                      "exact path with unsupported label");
      }
    }

  bool pd = true;
  for (int lead = 1; lead <= k && pd; ++lead) {
    std::vector<int> idx(lead);
    for (int i = 0; i < lead; ++i) idx[i] = i;
    if (sign_of(determinant(submatrix(B, idx))) <= 0) pd = false;
  }
  if (pd) return ComponentType::Spherical;

  // Positive semidefinite iff every principal minor is >= 0; PSD and
  // not PD forces a nontrivial kernel.
  for (std::size_t s = 1; s < (std::size_t(1) << k); ++s) {
    std::vector<int> idx;
    for (int j = 0; j < k; ++j)
      if (s >> j & 1) idx.push_back(j);
    if (sign_of(determinant(submatrix(B, idx))) < 0)
      return ComponentType::Other;
  }
  return ComponentType::Affine;
}

template <unsigned Digits>
std::optional<ComponentType> classify_numeric(const CoxeterSystem& sys,
                                              const std::vector<int>& gens) {
  using F = mp::number<mp::cpp_bin_float<Digits>>;
  const int k = static_cast<int>(gens.size());
  const F pi = acos(F(-1));
  const F eps = pow(F(10), -static_cast<int>(Digits) / 3);
  std::vector<std::vector<F>> B(k, std::vector<F>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int mm = sys.label(gens[i], gens[j]);
      B[i][j] = mm == kInfLabel ? F(-1) : F(-cos(pi / mm));
    }

  bool pd = true;
  for (int lead = 1; lead <= k; ++lead) {
    std::vector<int> idx(lead);
    for (int i = 0; i < lead; ++i) idx[i] = i;
    F d = determinant(submatrix(B, idx));
    if (abs(d) <= eps) return std::nullopt;  // can't separate from zero
    if (d < 0) pd = false;
  }
  if (pd) return ComponentType::Spherical;
  for (std::size_t s = 1; s < (std::size_t(1) << k); ++s) {
    std::vector<int> idx;
    for (int j = 0; j < k; ++j)
      if (s >> j & 1) idx.push_back(j);
    F d = determinant(submatrix(B, idx));
    if (abs(d) <= eps) return std::nullopt;
    if (d < 0) return ComponentType::Other;
  }
  // All principal minors strictly positive but not PD is impossible;
  // treat as undecided rather than guessing.
  return std::nullopt;
}

}  // namespace

Classification classify_type(const CoxeterSystem& sys) {
  sys.validate();
  const int n = sys.rank();
  Classification out;

  // Components of the Coxeter diagram: edges where m != 2.
  std::vector<int> comp(n, -1);
  int n_comp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = n_comp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (comp[v] < 0 && sys.label(u, v) != 2) {
          comp[v] = n_comp;
          stack.push_back(v);
        }
    }
    ++n_comp;
  }
  out.irreducible = n_comp == 1;

  for (int c = 0; c < n_comp; ++c) {
    Classification::Component comp_out;
    for (int s = 0; s < n; ++s)
      if (comp[s] == c) comp_out.generators.push_back(s);
    const auto& gens = comp_out.generators;
    if (gens.size() > 14) {
      comp_out.type = ComponentType::Undecided;
      ++out.precision_exhausted;
      out.components.push_back(std::move(comp_out));
      continue;
    }
    bool exact = true;
    for (int i : gens)
      for (int j : gens) {
        int mm = sys.label(i, j);
        exact = exact && (mm == kInfLabel || mm <= 6);
      }
    if (exact) {
      comp_out.type = classify_exact(sys, gens);
    } else {
      auto r = classify_numeric<60>(sys, gens);
      if (!r) r = classify_numeric<120>(sys, gens);
      if (!r) r = classify_numeric<240>(sys, gens);
      if (r) {
        comp_out.type = *r;
      } else {
        comp_out.type = ComponentType::Undecided;
        ++out.precision_exhausted;
      }
    }
    out.components.push_back(std::move(comp_out));
  }
  return out;
}

}  // namespace wallkit
