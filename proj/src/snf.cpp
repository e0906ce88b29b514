#include "lot/snf.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace lot {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::int64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

namespace {

struct Worker {
  IntMatrix a, u, v;

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a.at(i, k), a.at(j, k));
    for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a.at(k, i), a.at(k, j));
    for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v.at(k, i), v.at(k, j));
  }
  void row_add(std::size_t dst, std::size_t src, std::int64_t f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < a.cols(); ++k) a.at(dst, k) += f * a.at(src, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(dst, k) += f * u.at(src, k);
  }
  void col_add(std::size_t dst, std::size_t src, std::int64_t f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < a.rows(); ++k) a.at(k, dst) += f * a.at(k, src);
    for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, dst) += f * v.at(k, src);
  }
  void row_negate(std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
  }

  // Smallest nonzero |entry| in the trailing submatrix at s, or found=false.
  bool locate_pivot(std::size_t s, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    std::int64_t best = 0;
    for (std::size_t i = s; i < a.rows(); ++i)
      for (std::size_t j = s; j < a.cols(); ++j) {
        std::int64_t x = std::llabs(a.at(i, j));
        if (x != 0 && (!found || x < best)) {
          best = x;
          pi = i;
          pj = j;
          found = true;
        }
      }
    return found;
  }

  void run() {
    std::size_t nmin = std::min(a.rows(), a.cols());
    for (std::size_t s = 0; s < nmin; ++s) {
      for (;;) {
        std::size_t pi = s, pj = s;
        if (!locate_pivot(s, pi, pj)) return;  // trailing block is zero
        row_swap(s, pi);
        col_swap(s, pj);
        bool clean = true;
        for (std::size_t i = s + 1; i < a.rows(); ++i) {
          std::int64_t q = a.at(i, s) / a.at(s, s);
          row_add(i, s, -q);
          if (a.at(i, s) != 0) clean = false;
        }
        for (std::size_t j = s + 1; j < a.cols(); ++j) {
          std::int64_t q = a.at(s, j) / a.at(s, s);
          col_add(j, s, -q);
          if (a.at(s, j) != 0) clean = false;
        }
        if (!clean) continue;  // remainders became new, smaller pivot candidates
        // divisibility: pivot must divide the rest of the submatrix
        bool divides = true;
        for (std::size_t i = s + 1; i < a.rows() && divides; ++i)
          for (std::size_t j = s + 1; j < a.cols() && divides; ++j)
            if (a.at(i, j) % a.at(s, s) != 0) {
              row_add(s, i, 1);  // pull the offending row up and redo
              divides = false;
            }
        if (divides) break;
      }
      if (a.at(s, s) < 0) row_negate(s);
    }
  }
};

}  // namespace

SnfResult snf(const IntMatrix& m) {
  Worker w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  w.run();
  SnfResult res{w.a, w.u, w.v, {}};
  std::size_t nmin = std::min(m.rows(), m.cols());
  for (std::size_t s = 0; s < nmin; ++s)
    if (res.d.at(s, s) != 0) res.invariants.push_back(res.d.at(s, s));
  if (!(w.u * m * w.v == w.a)) throw std::logic_error("snf: transform verification failed");
  for (std::size_t i = 1; i < res.invariants.size(); ++i)
    if (res.invariants[i] % res.invariants[i - 1] != 0)
      throw std::logic_error("snf: invariant divisibility failed");
  return res;
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.gens.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (const auto& s : p.relators[i].syllables())
      m.at(i, static_cast<std::size_t>(p.gens.index_of(s.sym))) += s.exp;
  return m;
}

std::string AbelianInvariants::str() const {
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " x ";
    out += part;
  };
  for (int i = 0; i < free_rank; ++i) append("Z");
  for (auto t : torsion) append("Z/" + std::to_string(t));
  return out.empty() ? "1" : out;
}

AbelianInvariants abelianization(const Presentation& p) {
  auto res = snf(relation_matrix(p));
  AbelianInvariants inv;
  std::size_t rank = res.invariants.size();
  inv.free_rank = static_cast<int>(p.gens.size() - rank);
  for (auto d : res.invariants)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

CoxeterAbelianization coxeter_abelianization(const CoxeterGraph& g) {
  const auto n = g.vertices().size();
  std::vector<int> rep(n);
  for (std::size_t i = 0; i < n; ++i) rep[i] = static_cast<int>(i);
  auto find = [&rep](int v) {
    while (rep[static_cast<std::size_t>(v)] != v) {
      rep[static_cast<std::size_t>(v)] =
          rep[static_cast<std::size_t>(rep[static_cast<std::size_t>(v)])];
      v = rep[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const auto& e : g.edges())
    if (e.m % 2 == 1) {
      int a = find(e.a), b = find(e.b);
      if (a != b) rep[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  int k = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (find(static_cast<int>(v)) == static_cast<int>(v)) ++k;
  return {k};
}

}  // namespace lot
