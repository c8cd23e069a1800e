#include "eigenkit/spectral/projector.hpp"

#include <algorithm>

#include "eigenkit/error.hpp"
#include "eigenkit/padic/roots.hpp"

namespace eigenkit::spectral {

namespace {

int defect(const PMatrix& A, int cap) {
  int v = cap;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) v = std::min(v, A(i, j).valuation());
  return v;
}

PMatrix from_columns(const std::vector<PVector>& cols, std::size_t rows, const PadicContext& ctx) {
  PMatrix M = padic::zeros(ctx, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) M(i, j) = cols[j][i];
  return M;
}

PMatrix lift(const PMatrix& A, const PadicContext& W) {
  return A.map([&](const PadicScalar& x) { return x.lift_exact(W); });
}

// d columns spanning the column space direction of smallest valuation, by full pivoting; the
// result has unit pivots and integral entries.
PMatrix dominant_columns(PMatrix X, std::size_t d) {
  const std::size_t R = X.rows(), C = X.cols();
  std::vector<bool> row_used(R, false), col_used(C, false);
  std::vector<std::size_t> order;
  for (std::size_t t = 0; t < d; ++t) {
    std::size_t bi = R, bj = C;
    int bv = kInfiniteValuation;
    for (std::size_t j = 0; j < C; ++j) {
      if (col_used[j]) continue;
      for (std::size_t i = 0; i < R; ++i)
        if (!row_used[i] && !X(i, j).is_zero() && X(i, j).valuation() < bv) bv = X(i, j).valuation(), bi = i, bj = j;
    }
    if (bi == R) fail(Errc::PrecisionLoss, "invariant subspace lost rank");
    const PadicScalar inv = X(bi, bj).inverse();
    for (std::size_t i = 0; i < R; ++i) X(i, bj) = X(i, bj) * inv;
    for (std::size_t j = 0; j < C; ++j) {
      if (j == bj || col_used[j] || X(bi, j).is_zero()) continue;
      const PadicScalar f = X(bi, j);
      for (std::size_t i = 0; i < R; ++i) X(i, j) = X(i, j) - f * X(i, bj);
    }
    row_used[bi] = col_used[bj] = true;
    order.push_back(bj);
  }
  PMatrix out = padic::zeros(X(0, 0).context(), R, d);
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t i = 0; i < R; ++i) out(i, t) = X(i, order[t]);
  return out;
}

// Matrix of A on the span of the columns of B (full column rank), which must be A-stable.
PMatrix restrict_to(const PMatrix& A, const PMatrix& B) {
  const PMatrix AB = A * B;
  const auto rows = padic::echelon(B.transpose()).pivot_cols;
  if (rows.size() != B.cols()) fail(Errc::PrecisionLoss, "subspace basis lost rank");
  const PadicContext& ctx = B(0, 0).context();
  PMatrix Br = padic::zeros(ctx, rows.size(), B.cols()), ABr = padic::zeros(ctx, rows.size(), B.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) {
      Br(i, j) = B(rows[i], j);
      ABr(i, j) = AB(rows[i], j);
    }
  const PMatrix Y = padic::inverse(Br) * ABr;
  const PMatrix res = AB - B * Y;
  for (std::size_t i = 0; i < res.rows(); ++i)
    for (std::size_t j = 0; j < res.cols(); ++j)
      if (!res(i, j).is_zero()) fail(Errc::NonCommutingInput, "operator does not preserve the subspace");
  return Y;
}

}  // namespace

RieszProjector riesz_projector(const CompactOperatorModel& U, const SlopeFactorization& fact) {
  const PadicContext& ctx = U.context();
  const std::size_t N = fact.P.truncation();
  const int d = fact.degree();
  const std::size_t n1 = std::max<std::size_t>(N, 1);
  RieszProjector out{padic::zeros(ctx, n1, n1), 0, ctx.m(), ctx.m(), ctx.m()};
  if (d <= 0 || N == 0) return out;
  const std::size_t dd = static_cast<std::size_t>(d);

  const PadicContext W = ctx.with_precision(ctx.m() + guard_budget(ctx, 64));
  const PMatrix A = lift(U.truncation(N), W);
  PMatrix E = padic::identity(W, N);
  if (dd < N) {
    // Dominant right and left invariant subspaces by subspace iteration; every round contracts
    // the slope > h components by at least the slope gap at h.
    const auto segs = newton_slopes(fact.P).segments();
    Rational below = 0, above = 0;
    int mass = 0;
    bool have_above = false;
    for (const auto& sg : segs) {
      if (mass < d) below = sg.slope;
      else if (!have_above) above = sg.slope, have_above = true;
      mass += sg.multiplicity;
    }
    Rational gap = have_above ? (above - below) * ctx.e() : Rational(1);
    if (gap <= 0) gap = 1;
    const Rational rounds_r = Rational(W.m() + 4) / gap;
    const int rounds = static_cast<int>(rounds_r.numerator() / rounds_r.denominator()) + 3;
    // d columns of A itself may miss part of the dominant subspace, so the start is taken from
    // A^k on all columns once the slope gap has separated the two parts by 16 digits.
    const Rational warm_r = Rational(16) / gap;
    const int warm = static_cast<int>(warm_r.numerator() / warm_r.denominator()) + 1;
    auto dominant = [&](const PMatrix& M) {
      PMatrix B = M;
      for (int r = 0; r < warm; ++r) {
        B = M * B;
        const int v = padic::min_valuation(B);
        B = lift(B.map([&](const PadicScalar& x) { return x.mul_pi_power(-v); }), W);
      }
      PMatrix X = dominant_columns(B, dd);
      for (int r = 0; r < rounds; ++r) X = lift(dominant_columns(M * X, dd), W);
      return X;
    };
    const PMatrix X = dominant(A);
    const PMatrix Y = dominant(A.transpose());
    const PMatrix G = [&] {
      try {
        return padic::inverse(Y.transpose() * X);
      } catch (const Error&) {
        fail(Errc::PrecisionLoss, "left and right eigenspaces are not dual to precision");
      }
    }();
    E = X * G * Y.transpose();
  }

  out.e = padic::change_context(E, ctx);
  const PMatrix Ut = U.truncation(N);
  out.rank = padic::rank(out.e);
  out.idempotent_precision = defect(out.e * out.e - out.e, ctx.m());
  out.commutation_precision = defect(out.e * Ut - Ut * out.e, ctx.m());
  const auto ch = padic::fredholm_determinant(out.e * Ut);
  int cp = ctx.m();
  for (std::size_t k = 0; k < ch.size(); ++k) cp = std::min(cp, (ch[k] - fact.Q[k]).valuation());
  out.charpoly_precision = cp;
  return out;
}

std::vector<JointEigensystem> joint_eigensystems(const std::vector<PMatrix>& ops, const PMatrix& e) {
  if (ops.empty()) return {};
  const PadicContext& ctx = e(0, 0).context();
  const std::size_t N = e.rows();
  for (const auto& A : ops)
    if (A.rows() != N || A.cols() != N) fail(Errc::InvalidArgument, "operator size mismatch");
  const auto piv = padic::echelon(e).pivot_cols;
  if (piv.empty()) return {};
  std::vector<PVector> basis;
  for (std::size_t j : piv) basis.push_back(e.column(j));
  const PMatrix B = from_columns(basis, N, ctx);

  std::vector<PMatrix> R;
  for (const auto& A : ops) R.push_back(restrict_to(A, B));
  for (std::size_t i = 0; i < R.size(); ++i)
    for (std::size_t j = i + 1; j < R.size(); ++j) {
      const PMatrix c = R[i] * R[j] - R[j] * R[i];
      for (std::size_t a = 0; a < c.rows(); ++a)
        for (std::size_t b = 0; b < c.cols(); ++b)
          if (!c(a, b).is_zero()) fail(Errc::NonCommutingInput, "operators do not commute on im e");
    }

  // Refine the space operator by operator into joint generalized eigenspaces.
  struct Piece {
    PMatrix basis;
    std::vector<PadicScalar> values;
  };
  std::vector<Piece> pieces{{padic::identity(ctx, B.cols()), {}}};
  for (const auto& X : R) {
    std::vector<Piece> next;
    for (const auto& pc : pieces) {
      const PMatrix Y = restrict_to(X, pc.basis);
      const auto roots = padic::find_roots(padic::characteristic_polynomial(Y));
      if (roots.unresolved > 0) fail(Errc::InvalidArgument, "eigenvalues do not lie in K");
      std::size_t found = 0;
      for (const auto& r : roots.roots) {
        PMatrix S = Y - r.value * padic::identity(ctx, Y.rows());
        PMatrix P = padic::identity(ctx, Y.rows());
        for (int k = 0; k < r.multiplicity; ++k) P = P * S;
        const auto ker = padic::kernel(P);
        if (ker.empty()) continue;
        const PMatrix sub = pc.basis * from_columns(ker, Y.rows(), ctx);
        auto vals = pc.values;
        vals.push_back(r.value);
        next.push_back({sub, vals});
        found += ker.size();
      }
      if (found != Y.rows()) fail(Errc::PrecisionLoss, "generalized eigenspaces do not fill the space");
    }
    pieces = std::move(next);
  }
  std::vector<JointEigensystem> out;
  for (const auto& pc : pieces) out.push_back({pc.values, pc.basis.cols()});
  return out;
}

}  // namespace eigenkit::spectral
